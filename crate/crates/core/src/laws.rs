//! Randomized and exhaustive verification of the mapping calculus.
//!
//! Each checker returns a [`LawReport`]. Random cases come from a ChaCha
//! stream seeded by `(seed, law id, case index)`, so a report depends only on
//! its [`GenConfig`] and never on scheduling. [`run_suite`] runs every
//! checker in parallel and collects the reports in a fixed order.
//!
//! Some laws are report-only. They carry `asserted: false` and their failures
//! are counted but never fail the suite. These are the laws that do not hold
//! in general under [`UnionMode::Sorted`].

use rand::seq::index::sample;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hfe::{Hfe, UnionMode};
use crate::hfss::{Hfss, SoftClass};
use crate::mapping::{compose, composite_image, PointMap, SoftMapping};
use crate::scenario::{NamedMapping, NamedSet, Scenario};

/// Upper bound on soft sets enumerated by [`check_extensional_equality`] and
/// on pairs enumerated by the element-level checkers.
pub const ENUMERATION_LIMIT: u128 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GenConfig {
    pub seed: u64,
    pub max_universe: usize,
    pub max_attributes: usize,
    pub degree_grid: Vec<f64>,
    pub max_hfe_len: usize,
    pub cases: usize,
}

impl Default for GenConfig {
    fn default() -> Self {
        GenConfig {
            seed: 0,
            max_universe: 3,
            max_attributes: 3,
            degree_grid: vec![0.0, 0.25, 0.5, 0.75, 1.0],
            max_hfe_len: 3,
            cases: 200,
        }
    }
}

impl GenConfig {
    pub fn with_seed(seed: u64) -> Self {
        GenConfig {
            seed,
            ..Self::default()
        }
    }

    pub fn cases(mut self, cases: usize) -> Self {
        self.cases = cases;
        self
    }

    /// Canonical grid values; out-of-range entries are an error.
    fn grid(&self) -> Result<Vec<f64>> {
        if self.degree_grid.is_empty() {
            return Err(Error::EmptyHfe);
        }
        Ok(Hfe::new(&self.degree_grid)?.values())
    }
}

/// Outcome of one checker.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LawReport {
    pub law: String,
    pub mode: Option<UnionMode>,
    pub asserted: bool,
    pub cases: u64,
    pub failures: u64,
    pub counterexample: Option<String>,
}

impl LawReport {
    fn new(law: &str, mode: Option<UnionMode>, asserted: bool) -> Self {
        LawReport {
            law: law.to_owned(),
            mode,
            asserted,
            cases: 0,
            failures: 0,
            counterexample: None,
        }
    }

    fn record(&mut self, holds: bool, witness: impl FnOnce() -> String) {
        self.cases += 1;
        if !holds {
            self.failures += 1;
            if self.counterexample.is_none() {
                self.counterexample = Some(witness());
            }
        }
    }

    /// False only for an asserted law with failures.
    pub fn passed(&self) -> bool {
        !self.asserted || self.failures == 0
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub config: GenConfig,
    pub laws: Vec<LawReport>,
    pub passed: bool,
}

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}

fn fnv1a(s: &str) -> u64 {
    s.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| {
        (h ^ u64::from(b)).wrapping_mul(0x0100_0000_01b3)
    })
}

/// Random instances for one `(seed, law, case)` triple.
pub struct CaseGen<'a> {
    cfg: &'a GenConfig,
    grid: Vec<f64>,
    rng: ChaCha8Rng,
}

impl<'a> CaseGen<'a> {
    pub fn new(cfg: &'a GenConfig, law: &str, case: u64) -> Result<Self> {
        let seed = splitmix64(cfg.seed ^ splitmix64(fnv1a(law) ^ splitmix64(case)));
        Ok(CaseGen {
            cfg,
            grid: cfg.grid()?,
            rng: ChaCha8Rng::seed_from_u64(seed),
        })
    }

    /// Class with `tag`-prefixed ids and random sizes within the config
    /// bounds.
    pub fn class(&mut self, tag: &str) -> SoftClass {
        let n = self.rng.random_range(1..=self.cfg.max_universe.max(1));
        let m = self.rng.random_range(1..=self.cfg.max_attributes.max(1));
        sized_class(tag, n, m)
    }

    pub fn hfe(&mut self) -> Hfe {
        let max = self.cfg.max_hfe_len.clamp(1, self.grid.len());
        let len = self.rng.random_range(1..=max);
        let values: Vec<f64> = sample(&mut self.rng, self.grid.len(), len)
            .into_iter()
            .map(|i| self.grid[i])
            .collect();
        Hfe::new(&values).expect("grid values are valid degrees")
    }

    /// Random support (each attribute with probability one half) and random
    /// grid elements.
    pub fn hfss(&mut self, class: &SoftClass) -> Hfss {
        let mut set = Hfss::empty(class);
        let n = class.universe().len();
        for a in 0..class.attributes().len() {
            if self.rng.random_bool(0.5) {
                let row = (0..n).map(|_| self.hfe()).collect();
                set.set_row(a, Some(row));
            }
        }
        set
    }

    fn images(&mut self, from: usize, to: usize, shape: Shape) -> Vec<usize> {
        match shape {
            Shape::Injective if to >= from => sample(&mut self.rng, to, from).into_vec(),
            Shape::Surjective if from >= to => {
                let mut images: Vec<usize> = (0..from)
                    .map(|i| {
                        if i < to {
                            i
                        } else {
                            self.rng.random_range(0..to)
                        }
                    })
                    .collect();
                images.shuffle(&mut self.rng);
                images
            }
            _ => (0..from).map(|_| self.rng.random_range(0..to)).collect(),
        }
    }

    fn mapping_shaped(
        &mut self,
        source: &SoftClass,
        target: &SoftClass,
        shape: Shape,
    ) -> SoftMapping {
        let p = self.images(source.universe().len(), target.universe().len(), shape);
        let q = self.images(source.attributes().len(), target.attributes().len(), shape);
        SoftMapping::from_point_maps(
            source,
            target,
            PointMap::from_indices(source.universe(), target.universe(), p),
            PointMap::from_indices(source.attributes(), target.attributes(), q),
        )
        .expect("generated point maps match their classes")
    }

    /// Uniformly random total point maps.
    pub fn mapping(&mut self, source: &SoftClass, target: &SoftClass) -> SoftMapping {
        self.mapping_shaped(source, target, Shape::Any)
    }

    /// Random map, biased toward injective or surjective point maps when
    /// the class sizes allow.
    pub fn structured_mapping(&mut self, source: &SoftClass, target: &SoftClass) -> SoftMapping {
        let shape = match self.rng.random_range(0..3) {
            0 => Shape::Any,
            1 => Shape::Injective,
            _ => Shape::Surjective,
        };
        self.mapping_shaped(source, target, shape)
    }

    /// A fresh class of the same sizes as `source` and a random bijection
    /// onto it.
    pub fn bijection(&mut self, source: &SoftClass, tag: &str) -> (SoftClass, SoftMapping) {
        let target = sized_class(tag, source.universe().len(), source.attributes().len());
        let f = self.mapping_shaped(source, &target, Shape::Injective);
        (target, f)
    }

    /// Either a class with the same sizes as `like` or a random one.
    fn class_like(&mut self, tag: &str, like: &SoftClass) -> SoftClass {
        if self.rng.random_bool(0.5) {
            sized_class(tag, like.universe().len(), like.attributes().len())
        } else {
            self.class(tag)
        }
    }
}

#[derive(Clone, Copy)]
enum Shape {
    Any,
    Injective,
    Surjective,
}

/// Class with elements `{tag}0..` and attributes `{tag}e0..`.
pub fn sized_class(tag: &str, universe: usize, attributes: usize) -> SoftClass {
    SoftClass::new(
        (0..universe).map(|i| format!("{tag}{i}")),
        (0..attributes).map(|i| format!("{tag}e{i}")),
    )
    .expect("generated ids are distinct and non-empty")
}

/// Random soft set over `class`, deterministic in `(cfg.seed, case)`.
pub fn gen_hfss(cfg: &GenConfig, class: &SoftClass, case: u64) -> Result<Hfss> {
    Ok(CaseGen::new(cfg, "gen_hfss", case)?.hfss(class))
}

/// Collects named objects into a scenario document for counterexamples.
#[derive(Default)]
struct Witness {
    scenario: Scenario,
}

impl Witness {
    fn new(mode: Option<UnionMode>) -> Self {
        let mut w = Witness::default();
        w.scenario.mode = mode.unwrap_or_default();
        w
    }

    fn class_name(&mut self, class: &SoftClass) -> String {
        if let Some(name) = self.scenario.class_name(class) {
            return name.to_owned();
        }
        let name = format!("C{}", self.scenario.classes.len());
        self.scenario.classes.insert(name.clone(), class.clone());
        name
    }

    fn mapping(mut self, name: &str, m: &SoftMapping) -> Self {
        let source = self.class_name(m.source());
        let target = self.class_name(m.target());
        self.scenario.mappings.insert(
            name.to_owned(),
            NamedMapping {
                source,
                target,
                mapping: m.clone(),
            },
        );
        self
    }

    fn set(mut self, name: &str, s: &Hfss) -> Self {
        let class = self.class_name(s.class());
        self.scenario.sets.insert(
            name.to_owned(),
            NamedSet {
                class,
                set: s.clone(),
            },
        );
        self
    }

    fn render(self) -> String {
        self.scenario.render()
    }
}

fn cases(cfg: &GenConfig) -> std::ops::Range<u64> {
    0..cfg.cases as u64
}

/// Identity maps on either side of a mapping change neither the mapping nor
/// its action.
pub fn check_identity_laws(cfg: &GenConfig, mode: UnionMode) -> Result<LawReport> {
    let law = "identity_laws";
    let mut report = LawReport::new(law, Some(mode), true);
    for case in cases(cfg) {
        let mut g = CaseGen::new(cfg, law, case)?;
        let (source, target) = (g.class("a"), g.class("b"));
        let f = g.mapping(&source, &target);
        let set = g.hfss(&source);
        let i = SoftMapping::identity(&source);
        let j = SoftMapping::identity(&target);

        let direct = f.image(&set, mode)?;
        let holds = compose(&f, &i)? == f
            && compose(&j, &f)? == f
            && i.image(&set, mode)?.equivalent(&set)
            && composite_image(&f, &i, &set, mode)?.equivalent(&direct)
            && composite_image(&j, &f, &set, mode)?.equivalent(&direct);
        report.record(holds, || {
            Witness::new(Some(mode))
                .mapping("f", &f)
                .set("F", &set)
                .render()
        });
    }
    Ok(report)
}

/// Composition of three composable mappings associates, both as point maps
/// and in its action on soft sets.
pub fn check_associativity(cfg: &GenConfig, mode: UnionMode) -> Result<LawReport> {
    let law = "associativity";
    let mut report = LawReport::new(law, Some(mode), true);
    for case in cases(cfg) {
        let mut g = CaseGen::new(cfg, law, case)?;
        let c0 = g.class("a");
        let c1 = g.class("b");
        let c2 = g.class("c");
        let c3 = g.class("d");
        let (f, gm, h) = (
            g.mapping(&c0, &c1),
            g.mapping(&c1, &c2),
            g.mapping(&c2, &c3),
        );
        let set = g.hfss(&c0);
        let right = compose(&h, &compose(&gm, &f)?)?;
        let left = compose(&compose(&h, &gm)?, &f)?;
        let holds = right == left
            && right
                .image(&set, mode)?
                .equivalent(&left.image(&set, mode)?);
        report.record(holds, || {
            Witness::new(Some(mode))
                .mapping("f", &f)
                .mapping("g", &gm)
                .mapping("h", &h)
                .set("F", &set)
                .render()
        });
    }
    Ok(report)
}

/// For a bijection, pulling back or pushing through the inverse recovers
/// the original soft set, and the inverse composes to identities.
pub fn check_inverse_roundtrip(cfg: &GenConfig, mode: UnionMode) -> Result<LawReport> {
    let law = "inverse_roundtrip";
    let mut report = LawReport::new(law, Some(mode), true);
    for case in cases(cfg) {
        let mut g = CaseGen::new(cfg, law, case)?;
        let source = g.class("a");
        let (target, f) = g.bijection(&source, "b");
        let set = g.hfss(&source);
        let other = g.hfss(&target);
        let inverse = f.invert()?;
        let pushed = f.image(&set, mode)?;
        let holds = f.inverse_image(&pushed)?.equivalent(&set)
            && inverse.image(&pushed, mode)?.equivalent(&set)
            && f.image(&f.inverse_image(&other)?, mode)?.equivalent(&other)
            && compose(&inverse, &f)? == SoftMapping::identity(&source)
            && compose(&f, &inverse)? == SoftMapping::identity(&target);
        report.record(holds, || {
            Witness::new(Some(mode))
                .mapping("f", &f)
                .set("F", &set)
                .set("G", &other)
                .render()
        });
    }
    Ok(report)
}

/// Every point map from `codomain` back to `domain`, by brute force.
fn all_point_maps(domain: &[String], codomain: &[String]) -> Vec<PointMap> {
    let (n, k) = (domain.len(), codomain.len());
    let total = (k as u64).pow(n as u32);
    (0..total)
        .map(|mut code| {
            let images = (0..n)
                .map(|_| {
                    let d = (code % k as u64) as usize;
                    code /= k as u64;
                    d
                })
                .collect();
            PointMap::from_indices(domain, codomain, images)
        })
        .collect()
}

/// Exactly one left inverse exists for a bijection, and it is the computed
/// inverse. Checked by enumerating every candidate point map.
pub fn check_inverse_uniqueness(cfg: &GenConfig, mode: UnionMode) -> Result<LawReport> {
    let law = "inverse_uniqueness";
    let mut report = LawReport::new(law, Some(mode), true);
    for case in cases(cfg) {
        let mut g = CaseGen::new(cfg, law, case)?;
        let source = g.class("a");
        let (target, f) = g.bijection(&source, "b");
        let inverse = f.invert()?;
        let left_inverses = |forward: &PointMap, domain: &[String], codomain: &[String]| {
            let id = PointMap::identity(codomain);
            all_point_maps(domain, codomain)
                .into_iter()
                .filter(|h| forward.then(h).as_ref() == Some(&id))
                .collect::<Vec<_>>()
        };
        let elems = left_inverses(f.element_map(), target.universe(), source.universe());
        let attrs = left_inverses(f.attribute_map(), target.attributes(), source.attributes());
        let holds = elems.len() == 1
            && attrs.len() == 1
            && &elems[0] == inverse.element_map()
            && &attrs[0] == inverse.attribute_map();
        report.record(holds, || Witness::new(Some(mode)).mapping("f", &f).render());
    }
    Ok(report)
}

/// The inverse of a composite of bijections is the composite of the inverses
/// in reverse order.
pub fn check_inverse_of_composite(cfg: &GenConfig, mode: UnionMode) -> Result<LawReport> {
    let law = "inverse_of_composite";
    let mut report = LawReport::new(law, Some(mode), true);
    for case in cases(cfg) {
        let mut g = CaseGen::new(cfg, law, case)?;
        let c0 = g.class("a");
        let (c1, f) = g.bijection(&c0, "b");
        let (_, gm) = g.bijection(&c1, "c");
        let set = g.hfss(&c0);
        let lhs = compose(&gm, &f)?.invert()?;
        let rhs = compose(&f.invert()?, &gm.invert()?)?;
        let pushed = composite_image(&gm, &f, &set, mode)?;
        let holds = lhs == rhs && rhs.image(&pushed, mode)?.equivalent(&set);
        report.record(holds, || {
            Witness::new(Some(mode))
                .mapping("f", &f)
                .mapping("g", &gm)
                .set("F", &set)
                .render()
        });
    }
    Ok(report)
}

/// Injective, surjective and bijective mappings are each closed under
/// composition.
pub fn check_bijectivity_preservation(cfg: &GenConfig, mode: UnionMode) -> Result<LawReport> {
    let law = "bijectivity_preservation";
    let mut report = LawReport::new(law, Some(mode), true);
    for case in cases(cfg) {
        let mut g = CaseGen::new(cfg, law, case)?;
        let c0 = g.class("a");
        let c1 = g.class_like("b", &c0);
        let c2 = g.class_like("c", &c1);
        let f = g.structured_mapping(&c0, &c1);
        let gm = g.structured_mapping(&c1, &c2);
        let gf = compose(&gm, &f)?;
        let implies = |premise: bool, conclusion: bool| !premise || conclusion;
        let holds = implies(f.is_injective() && gm.is_injective(), gf.is_injective())
            && implies(f.is_surjective() && gm.is_surjective(), gf.is_surjective())
            && implies(f.is_bijective() && gm.is_bijective(), gf.is_bijective());
        report.record(holds, || {
            Witness::new(Some(mode))
                .mapping("f", &f)
                .mapping("g", &gm)
                .render()
        });
    }
    Ok(report)
}

fn composite_consistency(
    cfg: &GenConfig,
    mode: UnionMode,
    law: &str,
    bijective: bool,
) -> Result<LawReport> {
    let mut report = LawReport::new(law, Some(mode), bijective);
    for case in cases(cfg) {
        let mut g = CaseGen::new(cfg, law, case)?;
        let c0 = g.class("a");
        let (f, gm) = if bijective {
            let (c1, f) = g.bijection(&c0, "b");
            let (_, gm) = g.bijection(&c1, "c");
            (f, gm)
        } else {
            let c1 = g.class("b");
            let c2 = g.class("c");
            (g.mapping(&c0, &c1), g.mapping(&c1, &c2))
        };
        let set = g.hfss(&c0);
        let stepwise = composite_image(&gm, &f, &set, mode)?;
        let direct = compose(&gm, &f)?.image(&set, mode)?;
        report.record(stepwise.equivalent(&direct), || {
            Witness::new(Some(mode))
                .mapping("f", &f)
                .mapping("g", &gm)
                .set("F", &set)
                .set("stepwise", &stepwise)
                .set("direct", &direct)
                .render()
        });
    }
    Ok(report)
}

/// Stepwise `g(f(F))` agrees with the image under the composed mapping, for
/// bijective `f` and `g`.
pub fn check_composite_consistency(cfg: &GenConfig, mode: UnionMode) -> Result<LawReport> {
    composite_consistency(cfg, mode, "composite_consistency_bijective", true)
}

/// The same comparison for arbitrary mappings. Report-only.
pub fn check_composite_consistency_general(cfg: &GenConfig, mode: UnionMode) -> Result<LawReport> {
    composite_consistency(cfg, mode, "composite_consistency_general", false)
}

/// Builds two distinct soft sets with the same image under a non-injective
/// mapping, starting from `base`.
///
/// A `{1.0}` cell absorbs every union in both modes. Placing one in a fiber
/// that holds two cells frees the other cell to change.
pub fn many_one_witness(f: &SoftMapping, base: &Hfss) -> Result<(Hfss, Hfss)> {
    if base.class() != f.source() {
        return Err(Error::ClassMismatch);
    }
    let one = Hfe::singleton(1.0)?;
    let merged = |m: &PointMap| m.fibers().into_iter().find(|fiber| fiber.len() >= 2);
    let mut first = base.clone();
    if let Some(fiber) = merged(f.element_map()) {
        let (keep, vary) = (fiber[0], fiber[1]);
        first.set_cell(0, keep, one.clone());
        let mut second = first.clone();
        let flipped = if first.cell(0, vary) == &one {
            Hfe::null()
        } else {
            one
        };
        second.set_cell(0, vary, flipped);
        Ok((first, second))
    } else if let Some(fiber) = merged(f.attribute_map()) {
        let (keep, vary) = (fiber[0], fiber[1]);
        let n = f.source().universe().len();
        first.set_row(keep, Some(vec![one.clone(); n]));
        let mut second = first.clone();
        let replacement = match first.row(vary) {
            Some(row) if row.iter().any(|v| !v.is_null()) => None,
            _ => Some(vec![one; n]),
        };
        second.set_row(vary, replacement);
        Ok((first, second))
    } else {
        Err(Error::NotManyOne)
    }
}

fn record_witness(
    report: &mut LawReport,
    f: &SoftMapping,
    base: &Hfss,
    mode: UnionMode,
) -> Result<()> {
    let (first, second) = many_one_witness(f, base)?;
    let holds =
        !first.equivalent(&second) && f.image(&first, mode)?.equivalent(&f.image(&second, mode)?);
    report.record(holds, || {
        Witness::new(Some(mode))
            .mapping("f", f)
            .set("F", &first)
            .set("F_prime", &second)
            .render()
    });
    Ok(())
}

/// Constructs and verifies a colliding pair for one many-one mapping.
pub fn check_many_one_witness(f: &SoftMapping, mode: UnionMode) -> Result<LawReport> {
    let mut report = LawReport::new("many_one_witness", Some(mode), true);
    record_witness(&mut report, f, &Hfss::empty(f.source()), mode)?;
    Ok(report)
}

/// Witness construction over random non-injective mappings and random base
/// sets.
pub fn check_many_one_random(cfg: &GenConfig, mode: UnionMode) -> Result<LawReport> {
    let law = "many_one_witness";
    let mut report = LawReport::new(law, Some(mode), true);
    for case in cases(cfg) {
        let mut g = CaseGen::new(cfg, law, case)?;
        let mut source = g.class("a");
        if source.universe().len() < 2 {
            source = sized_class("a", 2, source.attributes().len());
        }
        let target = g.class("b");
        let mut f = g.mapping(&source, &target);
        if f.is_injective() {
            let mut p = f.element_map().images().to_vec();
            p[1] = p[0];
            f = SoftMapping::from_point_maps(
                &source,
                &target,
                PointMap::from_indices(source.universe(), target.universe(), p),
                f.attribute_map().clone(),
            )?;
        }
        let base = g.hfss(&source);
        record_witness(&mut report, &f, &base, mode)?;
    }
    Ok(report)
}

/// Result of [`check_extensional_equality`].
#[derive(Debug, Clone)]
pub struct ExtensionalOutcome {
    pub report: LawReport,
    pub mappings_equal: bool,
    /// A soft set the two mappings send to different images.
    pub witness: Option<Hfss>,
}

/// Every element over `grid` with at most `max_len` degrees.
pub fn grid_hfes(grid: &[f64], max_len: usize) -> Result<Vec<Hfe>> {
    let grid = Hfe::new(grid)?.values();
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    fn extend(
        grid: &[f64],
        start: usize,
        max_len: usize,
        chosen: &mut Vec<f64>,
        out: &mut Vec<Hfe>,
    ) {
        for i in start..grid.len() {
            chosen.push(grid[i]);
            out.push(Hfe::new(chosen).expect("grid values are valid"));
            if chosen.len() < max_len {
                extend(grid, i + 1, max_len, chosen, out);
            }
            chosen.pop();
        }
    }
    extend(&grid, 0, max_len.max(1), &mut chosen, &mut out);
    Ok(out)
}

/// Decodes the `index`-th soft set of the enumeration: one digit per
/// attribute, digit 0 meaning unsupported and `1 + k` meaning the row whose
/// cells spell `k` in base `hfes.len()`.
fn nth_soft_set(class: &SoftClass, hfes: &[Hfe], mut index: u128) -> Hfss {
    let n = class.universe().len();
    let h = hfes.len() as u128;
    let row_states = h.pow(n as u32) + 1;
    let mut set = Hfss::empty(class);
    for a in 0..class.attributes().len() {
        let digit = index % row_states;
        index /= row_states;
        if digit > 0 {
            let mut code = digit - 1;
            let row = (0..n)
                .map(|_| {
                    let v = hfes[(code % h) as usize].clone();
                    code /= h;
                    v
                })
                .collect();
            set.set_row(a, Some(row));
        }
    }
    set
}

/// Tests that `f` and `g` are equal as mappings exactly when they have the
/// same image on every soft set. The soft sets range over `grid` elements of
/// one or two degrees.
///
/// When the enumeration exceeds [`ENUMERATION_LIMIT`] the search still runs
/// over the first `ENUMERATION_LIMIT` sets for unequal mappings. It is an
/// [`Error::EnumerationTooLarge`] only if that prefix settles nothing.
pub fn check_extensional_equality(
    f: &SoftMapping,
    g: &SoftMapping,
    grid: &[f64],
    mode: UnionMode,
) -> Result<ExtensionalOutcome> {
    if f.source() != g.source() || f.target() != g.target() {
        return Err(Error::ClassMismatch);
    }
    let class = f.source();
    let hfes = grid_hfes(grid, 2)?;
    let h = hfes.len() as u128;
    let n = class.universe().len() as u32;
    let m = class.attributes().len() as u32;
    let total = h
        .checked_pow(n)
        .and_then(|rows| (rows + 1).checked_pow(m))
        .unwrap_or(u128::MAX);
    let mappings_equal = f == g;
    if total > ENUMERATION_LIMIT && mappings_equal {
        return Err(Error::EnumerationTooLarge {
            count: total,
            limit: ENUMERATION_LIMIT,
        });
    }

    let mut report = LawReport::new("extensional_equality", Some(mode), true);
    let mut witness = None;
    for index in 0..total.min(ENUMERATION_LIMIT) {
        let set = nth_soft_set(class, &hfes, index);
        report.cases += 1;
        if !f.image(&set, mode)?.equivalent(&g.image(&set, mode)?) {
            witness = Some(set);
            break;
        }
    }
    if witness.is_none() && !mappings_equal && total > ENUMERATION_LIMIT {
        return Err(Error::EnumerationTooLarge {
            count: total,
            limit: ENUMERATION_LIMIT,
        });
    }
    let images_agree = witness.is_none();
    if images_agree != mappings_equal {
        report.failures = 1;
        let mut w = Witness::new(Some(mode)).mapping("f", f).mapping("g", g);
        if let Some(set) = &witness {
            w = w.set("F", set);
        }
        report.counterexample = Some(w.render());
    }
    Ok(ExtensionalOutcome {
        report,
        mappings_equal,
        witness,
    })
}

/// Extensional equality over random pairs on classes of at most two cells.
/// A third of the pairs are equal mappings.
pub fn check_extensional_random(cfg: &GenConfig, mode: UnionMode) -> Result<LawReport> {
    let law = "extensional_equality";
    let mut report = LawReport::new(law, Some(mode), true);
    for case in cases(cfg) {
        let mut g = CaseGen::new(cfg, law, case)?;
        let (n, m) = [(1, 1), (1, 2), (2, 1)][g.rng.random_range(0..3)];
        let source = sized_class("a", n, m);
        let target = g.class("b");
        let f = g.mapping(&source, &target);
        let other = if g.rng.random_range(0..3) == 0 {
            f.clone()
        } else {
            g.mapping(&source, &target)
        };
        let outcome = check_extensional_equality(&f, &other, &cfg.degree_grid, mode)?;
        report.record(outcome.report.failures == 0, || {
            outcome.report.counterexample.clone().unwrap_or_default()
        });
    }
    Ok(report)
}

/// With singleton elements both modes give the same image, and each cell is
/// the scalar maximum over its fiber.
pub fn check_singleton_degeneracy(cfg: &GenConfig) -> Result<LawReport> {
    let law = "singleton_degeneracy";
    let mut report = LawReport::new(law, None, true);
    let singles = GenConfig {
        max_hfe_len: 1,
        ..cfg.clone()
    };
    for case in cases(cfg) {
        let mut g = CaseGen::new(&singles, law, case)?;
        let (source, target) = (g.class("a"), g.class("b"));
        let f = g.mapping(&source, &target);
        let set = g.hfss(&source);
        let by_set = f.image(&set, UnionMode::Set)?;
        let by_sorted = f.image(&set, UnionMode::Sorted)?;
        let p = f.element_map().images();
        let q = f.attribute_map().images();
        let mut scalar_ok = true;
        for b in 0..target.attributes().len() {
            for y in 0..target.universe().len() {
                let mut max = 0.0f64;
                for a in (0..q.len()).filter(|&a| q[a] == b && set.is_supported(a)) {
                    for x in (0..p.len()).filter(|&x| p[x] == y) {
                        max = max.max(set.cell(a, x).upper().value());
                    }
                }
                scalar_ok &= by_set.cell(b, y) == &Hfe::singleton(max)?;
            }
        }
        report.record(scalar_ok && by_set.equivalent(&by_sorted), || {
            Witness::new(None).mapping("f", &f).set("F", &set).render()
        });
    }
    Ok(report)
}

/// Visits every ordered pair of grid elements, at most
/// [`ENUMERATION_LIMIT`] of them, in a fixed order.
fn grid_pairs(hfes: &[Hfe]) -> impl Iterator<Item = (&Hfe, &Hfe)> {
    hfes.iter()
        .flat_map(move |a| hfes.iter().map(move |b| (a, b)))
        .take(ENUMERATION_LIMIT as usize)
}

fn pair_witness(a: &Hfe, b: &Hfe, lhs: &Hfe, rhs: &Hfe) -> String {
    format!("a={a}, b={b}: lhs={lhs}, rhs={rhs}")
}

/// Complement turns pairwise union into pairwise intersection and back,
/// over every pair of grid elements.
pub fn check_demorgan_set_mode(cfg: &GenConfig) -> Result<LawReport> {
    let mode = UnionMode::Set;
    let mut report = LawReport::new("demorgan", Some(mode), true);
    let hfes = grid_hfes(&cfg.degree_grid, cfg.max_hfe_len)?;
    for (a, b) in grid_pairs(&hfes) {
        let lhs = a.union(b, mode).complement();
        let rhs = a.complement().intersection(&b.complement(), mode);
        let lhs2 = a.intersection(b, mode).complement();
        let rhs2 = a.complement().union(&b.complement(), mode);
        report.record(lhs == rhs && lhs2 == rhs2, || {
            pair_witness(a, b, &lhs, &rhs)
        });
    }
    Ok(report)
}

/// Commutativity, idempotence and identity elements of union and
/// intersection over every pair of grid elements. Under [`UnionMode::Set`]
/// associativity of union is also checked over every triple.
pub fn check_hfe_algebra(cfg: &GenConfig, mode: UnionMode) -> Result<LawReport> {
    let mut report = LawReport::new("hfe_algebra", Some(mode), true);
    let hfes = grid_hfes(&cfg.degree_grid, cfg.max_hfe_len)?;
    let (zero, one) = (Hfe::null(), Hfe::singleton(1.0)?);
    for (a, b) in grid_pairs(&hfes) {
        let ab = a.union(b, mode);
        let ba = b.union(a, mode);
        let holds = ab == ba
            && a.intersection(b, mode) == b.intersection(a, mode)
            && &a.union(a, mode) == a
            && &a.intersection(a, mode) == a
            && &a.union(&zero, mode) == a
            && &a.intersection(&one, mode) == a;
        report.record(holds, || pair_witness(a, b, &ab, &ba));
    }
    if mode == UnionMode::Set {
        triple_associativity(&hfes, mode, &mut report);
    }
    Ok(report)
}

fn triple_associativity(hfes: &[Hfe], mode: UnionMode, report: &mut LawReport) {
    let limit = ENUMERATION_LIMIT as usize;
    let triples = hfes
        .iter()
        .flat_map(|a| {
            hfes.iter()
                .flat_map(move |b| hfes.iter().map(move |c| (a, b, c)))
        })
        .take(limit);
    for (a, b, c) in triples {
        let lhs = a.union(b, mode).union(c, mode);
        let rhs = a.union(&b.union(c, mode), mode);
        report.record(lhs == rhs, || {
            format!("a={a}, b={b}, c={c}: (a∪b)∪c={lhs}, a∪(b∪c)={rhs}")
        });
    }
}

/// Associativity of the position-wise union over every triple of grid
/// elements. Report-only.
pub fn check_sorted_associativity(cfg: &GenConfig) -> Result<LawReport> {
    let mode = UnionMode::Sorted;
    let mut report = LawReport::new("sorted_union_associativity", Some(mode), false);
    let hfes = grid_hfes(&cfg.degree_grid, cfg.max_hfe_len)?;
    triple_associativity(&hfes, mode, &mut report);
    Ok(report)
}

type Checker = fn(&GenConfig, UnionMode) -> Result<LawReport>;

const PER_MODE: [Checker; 10] = [
    check_identity_laws,
    check_associativity,
    check_inverse_roundtrip,
    check_inverse_uniqueness,
    check_inverse_of_composite,
    check_bijectivity_preservation,
    check_composite_consistency,
    check_many_one_random,
    check_extensional_random,
    check_hfe_algebra,
];

enum Job {
    PerMode(Checker, UnionMode),
    Single(fn(&GenConfig) -> Result<LawReport>),
}

/// Runs every checker. Reports come back in a fixed order: each per-mode law
/// under both modes, then the single-mode and report-only laws.
pub fn run_suite(cfg: &GenConfig) -> Result<SuiteReport> {
    let mut jobs: Vec<Job> = Vec::new();
    for checker in PER_MODE {
        for mode in UnionMode::ALL {
            jobs.push(Job::PerMode(checker, mode));
        }
    }
    jobs.push(Job::Single(check_singleton_degeneracy));
    jobs.push(Job::Single(check_demorgan_set_mode));
    for mode in UnionMode::ALL {
        jobs.push(Job::PerMode(check_composite_consistency_general, mode));
    }
    jobs.push(Job::Single(check_sorted_associativity));

    let laws = jobs
        .par_iter()
        .map(|job| match job {
            Job::PerMode(check, mode) => check(cfg, *mode),
            Job::Single(check) => check(cfg),
        })
        .collect::<Result<Vec<_>>>()?;
    let passed = laws.iter().all(LawReport::passed);
    Ok(SuiteReport {
        config: cfg.clone(),
        laws,
        passed,
    })
}
