//! Soft mappings between soft classes.
//!
//! A [`SoftMapping`] pairs a map on universes with a map on attributes. It
//! pushes soft sets forward ([`SoftMapping::image`]) and pulls them back
//! ([`SoftMapping::inverse_image`]).
//!
//! Every image cell is a union over a fiber. The fiber is walked
//! attribute-major, with attributes and elements each in class order. That
//! order matters for [`UnionMode::Sorted`], which is not associative.

use std::fmt;

use crate::error::{Error, Result};
use crate::hfe::{Hfe, UnionMode};
use crate::hfss::{Hfss, SoftClass};

/// A total map between two finite ordered id lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointMap {
    domain: Vec<String>,
    codomain: Vec<String>,
    images: Vec<usize>,
}

fn position(ids: &[String], id: &str) -> Option<usize> {
    ids.iter().position(|x| x == id)
}

impl PointMap {
    /// Builds a map from `(from, to)` pairs. `name` only labels errors.
    pub fn new<S, T>(
        name: &str,
        domain: &[String],
        codomain: &[String],
        pairs: impl IntoIterator<Item = (S, T)>,
    ) -> Result<Self>
    where
        S: AsRef<str>,
        T: AsRef<str>,
    {
        let mut images: Vec<Option<usize>> = vec![None; domain.len()];
        for (from, to) in pairs {
            let (from, to) = (from.as_ref(), to.as_ref());
            let i = position(domain, from).ok_or_else(|| Error::UnknownId { id: from.into() })?;
            let j = position(codomain, to).ok_or_else(|| Error::UnknownId { id: to.into() })?;
            if images[i].replace(j).is_some() {
                return Err(Error::ConflictingPair {
                    map: name.into(),
                    id: from.into(),
                });
            }
        }
        let images = images
            .into_iter()
            .enumerate()
            .map(|(i, img)| {
                img.ok_or_else(|| Error::NonTotalMap {
                    map: name.into(),
                    id: domain[i].clone(),
                })
            })
            .collect::<Result<_>>()?;
        Ok(PointMap {
            domain: domain.to_vec(),
            codomain: codomain.to_vec(),
            images,
        })
    }

    pub(crate) fn from_indices(domain: &[String], codomain: &[String], images: Vec<usize>) -> Self {
        debug_assert_eq!(domain.len(), images.len());
        debug_assert!(images.iter().all(|&j| j < codomain.len()));
        PointMap {
            domain: domain.to_vec(),
            codomain: codomain.to_vec(),
            images,
        }
    }

    pub fn identity(ids: &[String]) -> Self {
        Self::from_indices(ids, ids, (0..ids.len()).collect())
    }

    pub fn domain(&self) -> &[String] {
        &self.domain
    }

    pub fn codomain(&self) -> &[String] {
        &self.codomain
    }

    /// Image positions, indexed by domain position.
    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, id: &str) -> Result<&str> {
        let i = position(&self.domain, id).ok_or_else(|| Error::UnknownId { id: id.into() })?;
        Ok(&self.codomain[self.images[i]])
    }

    /// `(from, to)` pairs in domain order.
    pub fn pairs(&self) -> impl Iterator<Item = (&str, &str)> {
        self.domain
            .iter()
            .zip(&self.images)
            .map(|(d, &j)| (d.as_str(), self.codomain[j].as_str()))
    }

    /// Every domain id sent to `y`, in domain order.
    pub fn preimage(&self, y: &str) -> Result<Vec<&str>> {
        let j = position(&self.codomain, y).ok_or_else(|| Error::UnknownId { id: y.into() })?;
        Ok(self
            .images
            .iter()
            .enumerate()
            .filter(|&(_, &img)| img == j)
            .map(|(i, _)| self.domain[i].as_str())
            .collect())
    }

    /// Preimage positions of each codomain position.
    pub fn fibers(&self) -> Vec<Vec<usize>> {
        let mut fibers = vec![Vec::new(); self.codomain.len()];
        for (i, &j) in self.images.iter().enumerate() {
            fibers[j].push(i);
        }
        fibers
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.codomain.len()];
        self.images
            .iter()
            .all(|&j| !std::mem::replace(&mut seen[j], true))
    }

    pub fn is_surjective(&self) -> bool {
        let mut hit = vec![false; self.codomain.len()];
        for &j in &self.images {
            hit[j] = true;
        }
        hit.into_iter().all(|h| h)
    }

    pub fn is_bijective(&self) -> bool {
        self.domain.len() == self.codomain.len() && self.is_injective()
    }

    /// `x ↦ after(self(x))`; `None` unless `self.codomain == after.domain`.
    pub fn then(&self, after: &PointMap) -> Option<PointMap> {
        if self.codomain != after.domain {
            return None;
        }
        let images = self.images.iter().map(|&j| after.images[j]).collect();
        Some(Self::from_indices(&self.domain, &after.codomain, images))
    }

    pub fn inverse(&self) -> Option<PointMap> {
        if !self.is_bijective() {
            return None;
        }
        let mut images = vec![0; self.codomain.len()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Some(Self::from_indices(&self.codomain, &self.domain, images))
    }
}

impl fmt::Display for PointMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pairs: Vec<String> = self.pairs().map(|(a, b)| format!("{a}->{b}")).collect();
        f.write_str(&pairs.join(", "))
    }
}

/// A map between soft classes, given by a universe map and an attribute map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SoftMapping {
    source: SoftClass,
    target: SoftClass,
    elements: PointMap,
    attributes: PointMap,
}

impl SoftMapping {
    pub fn new<S, T, U, V>(
        source: &SoftClass,
        target: &SoftClass,
        element_pairs: impl IntoIterator<Item = (S, T)>,
        attribute_pairs: impl IntoIterator<Item = (U, V)>,
    ) -> Result<Self>
    where
        S: AsRef<str>,
        T: AsRef<str>,
        U: AsRef<str>,
        V: AsRef<str>,
    {
        let elements = PointMap::new(
            "elements",
            source.universe(),
            target.universe(),
            element_pairs,
        )?;
        let attributes = PointMap::new(
            "attributes",
            source.attributes(),
            target.attributes(),
            attribute_pairs,
        )?;
        Ok(Self::from_parts(source, target, elements, attributes))
    }

    /// The point maps must already run between the classes' id lists.
    pub fn from_point_maps(
        source: &SoftClass,
        target: &SoftClass,
        elements: PointMap,
        attributes: PointMap,
    ) -> Result<Self> {
        if elements.domain() != source.universe()
            || elements.codomain() != target.universe()
            || attributes.domain() != source.attributes()
            || attributes.codomain() != target.attributes()
        {
            return Err(Error::ClassMismatch);
        }
        Ok(Self::from_parts(source, target, elements, attributes))
    }

    fn from_parts(
        source: &SoftClass,
        target: &SoftClass,
        elements: PointMap,
        attributes: PointMap,
    ) -> Self {
        SoftMapping {
            source: source.clone(),
            target: target.clone(),
            elements,
            attributes,
        }
    }

    pub fn identity(class: &SoftClass) -> Self {
        Self::from_parts(
            class,
            class,
            PointMap::identity(class.universe()),
            PointMap::identity(class.attributes()),
        )
    }

    pub fn source(&self) -> &SoftClass {
        &self.source
    }

    pub fn target(&self) -> &SoftClass {
        &self.target
    }

    pub fn element_map(&self) -> &PointMap {
        &self.elements
    }

    pub fn attribute_map(&self) -> &PointMap {
        &self.attributes
    }

    /// Pushes `set` forward. The result is supported on the image of the
    /// attribute map. A cell whose fiber misses the support of `set`, or
    /// whose element has no preimage, is `{0}`.
    pub fn image(&self, set: &Hfss, mode: UnionMode) -> Result<Hfss> {
        if set.class() != &self.source {
            return Err(Error::ClassMismatch);
        }
        let element_fibers = self.elements.fibers();
        let attribute_fibers = self.attributes.fibers();
        let support = attribute_fibers
            .iter()
            .enumerate()
            .filter(|(_, fiber)| !fiber.is_empty())
            .map(|(b, _)| b);
        Ok(Hfss::from_fn(&self.target, support, |b, y| {
            let cells = attribute_fibers[b]
                .iter()
                .filter(|&&a| set.is_supported(a))
                .flat_map(|&a| element_fibers[y].iter().map(move |&x| set.cell(a, x)));
            Hfe::union_all(cells, mode)
        }))
    }

    /// Pulls `set` back: each supported cell copies exactly one cell of
    /// `set`. Attributes sent outside the support of `set` stay unsupported.
    pub fn inverse_image(&self, set: &Hfss) -> Result<Hfss> {
        if set.class() != &self.target {
            return Err(Error::ClassMismatch);
        }
        let attr_images = self.attributes.images();
        let elem_images = self.elements.images();
        let support = (0..attr_images.len()).filter(|&a| set.is_supported(attr_images[a]));
        Ok(Hfss::from_fn(&self.source, support, |a, x| {
            set.cell(attr_images[a], elem_images[x]).clone()
        }))
    }

    pub fn is_injective(&self) -> bool {
        self.elements.is_injective() && self.attributes.is_injective()
    }

    pub fn is_surjective(&self) -> bool {
        self.elements.is_surjective() && self.attributes.is_surjective()
    }

    pub fn is_bijective(&self) -> bool {
        self.elements.is_bijective() && self.attributes.is_bijective()
    }

    /// Some pair of distinct soft sets shares an image exactly when one of
    /// the point maps merges two points.
    pub fn is_many_one(&self) -> bool {
        !self.is_injective()
    }

    pub fn invert(&self) -> Result<SoftMapping> {
        match (self.elements.inverse(), self.attributes.inverse()) {
            (Some(elements), Some(attributes)) => Ok(Self::from_parts(
                &self.target,
                &self.source,
                elements,
                attributes,
            )),
            _ => Err(Error::NotBijective),
        }
    }
}

/// `outer ∘ inner`: apply `inner` first.
pub fn compose(outer: &SoftMapping, inner: &SoftMapping) -> Result<SoftMapping> {
    if inner.target != outer.source {
        return Err(Error::ClassMismatch);
    }
    let elements = inner
        .elements
        .then(&outer.elements)
        .ok_or(Error::ClassMismatch)?;
    let attributes = inner
        .attributes
        .then(&outer.attributes)
        .ok_or(Error::ClassMismatch)?;
    Ok(SoftMapping::from_parts(
        &inner.source,
        &outer.target,
        elements,
        attributes,
    ))
}

/// The action of `outer ∘ inner` on `set`: the image under `outer` of the
/// image under `inner`.
pub fn composite_image(
    outer: &SoftMapping,
    inner: &SoftMapping,
    set: &Hfss,
    mode: UnionMode,
) -> Result<Hfss> {
    if inner.target != outer.source {
        return Err(Error::ClassMismatch);
    }
    outer.image(&inner.image(set, mode)?, mode)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(values: &[f64]) -> Hfe {
        Hfe::new(values).unwrap()
    }

    fn ue() -> SoftClass {
        SoftClass::new(["a", "b", "c"], ["e1", "e2", "e3", "e4"]).unwrap()
    }

    fn ve() -> SoftClass {
        SoftClass::new(["x", "y", "z"], ["e1'", "e2'", "e3'"]).unwrap()
    }

    fn f_35() -> SoftMapping {
        SoftMapping::new(
            &ue(),
            &ve(),
            [("a", "y"), ("b", "x"), ("c", "y")],
            [("e1", "e2'"), ("e2", "e1'"), ("e3", "e2'"), ("e4", "e3'")],
        )
        .unwrap()
    }

    fn f_a() -> Hfss {
        Hfss::from_rows(
            &ue(),
            [
                (
                    "e1",
                    [
                        ("a", &[0.6, 0.8][..]),
                        ("b", &[0.8, 0.4, 0.9]),
                        ("c", &[0.3]),
                    ],
                ),
                (
                    "e2",
                    [
                        ("a", &[0.9, 0.1, 0.2][..]),
                        ("b", &[0.5]),
                        ("c", &[0.2, 0.4, 0.6]),
                    ],
                ),
                (
                    "e4",
                    [("a", &[0.3][..]), ("b", &[0.2, 0.6]), ("c", &[0.4, 0.8])],
                ),
            ],
        )
        .unwrap()
    }

    // Scatter-style oracle: walk the source cells once and drop each into
    // the bucket of its target cell, then fold each bucket.
    fn image_oracle(f: &SoftMapping, set: &Hfss, mode: UnionMode) -> Hfss {
        let (src, tgt) = (f.source(), f.target());
        let mut buckets: Vec<Vec<Vec<Hfe>>> =
            vec![vec![Vec::new(); tgt.universe().len()]; tgt.attributes().len()];
        for (a, attr) in src.attributes().iter().enumerate() {
            if !set.is_supported(a) {
                continue;
            }
            let b = f.attribute_map().apply(attr).unwrap();
            let b = tgt.attribute_index(b).unwrap();
            for (x, elem) in src.universe().iter().enumerate() {
                let y = tgt
                    .element_index(f.element_map().apply(elem).unwrap())
                    .unwrap();
                buckets[b][y].push(set.cell(a, x).clone());
            }
        }
        let mut out = Hfss::empty(tgt);
        for attr in src.attributes() {
            let b = tgt
                .attribute_index(f.attribute_map().apply(attr).unwrap())
                .unwrap();
            let row = buckets[b]
                .iter()
                .map(|cell| Hfe::union_all(cell, mode))
                .collect();
            out.set_row(b, Some(row));
        }
        out
    }

    #[test]
    fn preimages() {
        let f = f_35();
        assert_eq!(f.element_map().preimage("y").unwrap(), ["a", "c"]);
        assert!(f.element_map().preimage("z").unwrap().is_empty());
        assert!(matches!(
            f.element_map().preimage("w"),
            Err(Error::UnknownId { .. })
        ));
        let id = PointMap::identity(ue().universe());
        assert_eq!(id.preimage("a").unwrap(), ["a"]);
    }

    #[test]
    fn point_map_validation() {
        let err = SoftMapping::new(
            &ue(),
            &ve(),
            [("a", "y"), ("b", "x")],
            [("e1", "e2'"), ("e2", "e1'"), ("e3", "e2'"), ("e4", "e3'")],
        )
        .unwrap_err();
        assert_eq!(
            err,
            Error::NonTotalMap {
                map: "elements".into(),
                id: "c".into()
            }
        );
        let err = SoftMapping::new(
            &ue(),
            &ve(),
            [("a", "y"), ("b", "x"), ("c", "w")],
            [("e1", "e2'")],
        )
        .unwrap_err();
        assert_eq!(err, Error::UnknownId { id: "w".into() });
    }

    #[test]
    fn image_of_example_fixture() {
        let fa = f_35().image(&f_a(), UnionMode::Sorted).unwrap();
        assert_eq!(fa.support(), ["e1'", "e2'", "e3'"]);
        assert_eq!(fa.get("e1'", "x").unwrap(), &h(&[0.5]));
        assert_eq!(fa.get("e1'", "y").unwrap(), &h(&[0.2, 0.4, 0.9]));
        assert_eq!(fa.get("e2'", "x").unwrap(), &h(&[0.4, 0.8, 0.9]));
        assert_eq!(fa.get("e2'", "y").unwrap(), &h(&[0.6, 0.8]));
        assert_eq!(fa.get("e3'", "x").unwrap(), &h(&[0.2, 0.6]));
        assert_eq!(fa.get("e3'", "y").unwrap(), &h(&[0.4, 0.8]));
        for b in ["e1'", "e2'", "e3'"] {
            assert!(fa.get(b, "z").unwrap().is_null());
        }
        // The pairwise reading gives a different e1'/y cell.
        let set_mode = f_35().image(&f_a(), UnionMode::Set).unwrap();
        assert_eq!(set_mode.get("e1'", "y").unwrap(), &h(&[0.2, 0.4, 0.6, 0.9]));
    }

    #[test]
    fn identity_image_null_extends() {
        let i = SoftMapping::identity(&ue());
        let image = i.image(&f_a(), UnionMode::Sorted).unwrap();
        assert_eq!(image.support(), ["e1", "e2", "e3", "e4"]);
        assert!(image.equivalent(&f_a()));
        assert!(i.inverse_image(&f_a()).unwrap().equivalent(&f_a()));
        assert!(i.is_bijective());
        assert!(!i.is_many_one());
        assert_eq!(i.invert().unwrap(), i);
    }

    #[test]
    fn inverse_image_with_empty_support() {
        let pulled = f_35().inverse_image(&Hfss::empty(&ve())).unwrap();
        assert!(pulled.support().is_empty());
        assert!(pulled.equivalent(&Hfss::empty(&ue())));
        assert_eq!(
            f_35().inverse_image(&f_a()).unwrap_err(),
            Error::ClassMismatch
        );
        assert_eq!(
            f_35()
                .image(&Hfss::empty(&ve()), UnionMode::Set)
                .unwrap_err(),
            Error::ClassMismatch
        );
    }

    #[test]
    fn predicates_and_inversion() {
        let f = f_35();
        assert!(!f.is_injective());
        assert!(!f.is_surjective());
        assert!(f.is_many_one());
        assert_eq!(f.invert().unwrap_err(), Error::NotBijective);
        assert_eq!(f, f.clone());
        assert_eq!(compose(&SoftMapping::identity(&ve()), &f).unwrap(), f);
        assert_eq!(compose(&f, &SoftMapping::identity(&ue())).unwrap(), f);
        assert_eq!(compose(&f, &f).unwrap_err(), Error::ClassMismatch);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        const GRID: [f64; 5] = [0.0, 0.25, 0.5, 0.75, 1.0];

        fn src() -> SoftClass {
            SoftClass::new(["a", "b", "c"], ["e1", "e2", "e3"]).unwrap()
        }

        fn tgt() -> SoftClass {
            SoftClass::new(["x", "y"], ["d1", "d2", "d3"]).unwrap()
        }

        fn hfe(max_len: usize) -> impl Strategy<Value = Hfe> {
            prop::collection::vec(prop::sample::select(GRID.to_vec()), 1..=max_len)
                .prop_map(|v| Hfe::new(&v).unwrap())
        }

        fn hfss(class: SoftClass, max_len: usize) -> impl Strategy<Value = Hfss> {
            let n = class.universe().len();
            let m = class.attributes().len();
            prop::collection::vec(prop::option::of(prop::collection::vec(hfe(max_len), n)), m)
                .prop_map(move |rows| {
                    let mut s = Hfss::empty(&class);
                    for (a, row) in rows.into_iter().enumerate() {
                        s.set_row(a, row);
                    }
                    s
                })
        }

        fn mapping() -> impl Strategy<Value = SoftMapping> {
            (
                prop::collection::vec(0usize..2, 3),
                prop::collection::vec(0usize..3, 3),
            )
                .prop_map(|(p, q)| {
                    let (s, t) = (src(), tgt());
                    SoftMapping::from_point_maps(
                        &s,
                        &t,
                        PointMap::from_indices(s.universe(), t.universe(), p),
                        PointMap::from_indices(s.attributes(), t.attributes(), q),
                    )
                    .unwrap()
                })
        }

        fn mode() -> impl Strategy<Value = UnionMode> {
            prop_oneof![Just(UnionMode::Set), Just(UnionMode::Sorted)]
        }

        proptest! {
            #[test]
            fn image_matches_scatter_oracle(f in mapping(), set in hfss(src(), 3), m in mode()) {
                let image = f.image(&set, m).unwrap();
                let oracle = image_oracle(&f, &set, m);
                prop_assert_eq!(
                    image.support_indices().collect::<Vec<_>>(),
                    oracle.support_indices().collect::<Vec<_>>()
                );
                prop_assert!(image.equivalent(&oracle));
            }

            #[test]
            fn image_support_is_attribute_image(f in mapping(), set in hfss(src(), 3), m in mode()) {
                let image = f.image(&set, m).unwrap();
                let fibers = f.attribute_map().fibers();
                let expected: Vec<usize> = (0..3).filter(|&b| !fibers[b].is_empty()).collect();
                prop_assert_eq!(image.support_indices().collect::<Vec<_>>(), expected);
                let element_fibers = f.element_map().fibers();
                for (y, fiber) in element_fibers.iter().enumerate() {
                    if fiber.is_empty() {
                        for b in 0..3 {
                            prop_assert!(image.cell(b, y).is_null());
                        }
                    }
                }
            }

            #[test]
            fn pullback_copies_single_cells(f in mapping(), set in hfss(tgt(), 3)) {
                let pulled = f.inverse_image(&set).unwrap();
                let q = f.attribute_map().images();
                let p = f.element_map().images();
                for (a, &qa) in q.iter().enumerate() {
                    prop_assert_eq!(pulled.is_supported(a), set.is_supported(qa));
                    for (x, &px) in p.iter().enumerate() {
                        prop_assert_eq!(pulled.cell(a, x), set.cell(qa, px));
                    }
                }
            }

            #[test]
            fn singleton_sets_give_the_classical_image(f in mapping(), set in hfss(src(), 1)) {
                let by_set = f.image(&set, UnionMode::Set).unwrap();
                let by_sorted = f.image(&set, UnionMode::Sorted).unwrap();
                prop_assert!(by_set.equivalent(&by_sorted));
                let q = f.attribute_map().images();
                let p = f.element_map().images();
                for b in 0..3 {
                    for y in 0..2 {
                        let mut scalar = 0.0f64;
                        for a in (0..3).filter(|&a| q[a] == b && set.is_supported(a)) {
                            for x in (0..3).filter(|&x| p[x] == y) {
                                scalar = scalar.max(set.cell(a, x).values()[0]);
                            }
                        }
                        prop_assert_eq!(by_set.cell(b, y), &h(&[scalar]));
                    }
                }
            }
        }
    }
}
