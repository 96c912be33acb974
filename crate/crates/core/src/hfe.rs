//! Hesitant fuzzy elements.
//!
//! An [`Hfe`] is a non-empty finite set of membership degrees in `[0, 1]`,
//! stored ascending with no two entries closer than [`EPS`]. Union and
//! intersection come in two flavours selected by [`UnionMode`]:
//!
//! * [`UnionMode::Set`] takes every pairwise `max` (or `min`) and keeps the
//!   resulting set.
//! * [`UnionMode::Sorted`] lines the two ascending lists up position by
//!   position. The shorter list is padded with copies of its maximum (union)
//!   or its minimum (intersection) before the position-wise operation.
//!
//! The two agree whenever both operands are singletons.

use std::fmt;
use std::str::FromStr;
use std::sync::LazyLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Absolute tolerance used for every degree comparison.
pub const EPS: f64 = 1e-9;

static NULL_HFE: LazyLock<Hfe> = LazyLock::new(Hfe::null);

/// A membership degree in `[0, 1]`.
#[derive(Debug, Clone, Copy, Serialize)]
#[serde(transparent)]
pub struct Degree(f64);

impl Degree {
    pub const ZERO: Degree = Degree(0.0);
    pub const ONE: Degree = Degree(1.0);

    /// Accepts values in `[-EPS, 1 + EPS]` and clamps them into `[0, 1]`.
    pub fn new(value: f64) -> Result<Self> {
        if !value.is_finite() || !(-EPS..=1.0 + EPS).contains(&value) {
            return Err(Error::DegreeOutOfRange { value });
        }
        Ok(Degree(value.clamp(0.0, 1.0)))
    }

    pub fn value(self) -> f64 {
        self.0
    }

    pub fn complement(self) -> Degree {
        Degree(1.0 - self.0)
    }

    fn max(self, other: Degree) -> Degree {
        Degree(self.0.max(other.0))
    }

    fn min(self, other: Degree) -> Degree {
        Degree(self.0.min(other.0))
    }
}

impl PartialEq for Degree {
    fn eq(&self, other: &Self) -> bool {
        (self.0 - other.0).abs() <= EPS
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_degree(self.0))
    }
}

/// Renders with at most nine decimals, trailing zeros trimmed but keeping one
/// digit after the point (`0.0`, `0.25`, `1.0`).
pub fn format_degree(value: f64) -> String {
    let mut s = format!("{value:.9}");
    while s.ends_with('0') && !s.ends_with(".0") {
        s.pop();
    }
    if s == "-0.0" {
        s.remove(0);
    }
    s
}

/// Rounds to the nine-decimal grid used for rendering.
pub(crate) fn round_degree(value: f64) -> f64 {
    let r = (value * 1e9).round() / 1e9;
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

/// Which semantics [`Hfe::union`] and [`Hfe::intersection`] follow.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize, clap::ValueEnum,
)]
#[serde(rename_all = "lowercase")]
pub enum UnionMode {
    /// Every pairwise `max`/`min`, collected as a set.
    Set,
    /// Position-wise over ascending lists, shorter one padded.
    #[default]
    Sorted,
}

impl UnionMode {
    pub const ALL: [UnionMode; 2] = [UnionMode::Set, UnionMode::Sorted];

    pub fn as_str(self) -> &'static str {
        match self {
            UnionMode::Set => "set",
            UnionMode::Sorted => "sorted",
        }
    }
}

impl fmt::Display for UnionMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for UnionMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "set" => Ok(UnionMode::Set),
            "sorted" => Ok(UnionMode::Sorted),
            other => Err(Error::Parse {
                line: 1,
                column: 1,
                message: format!("unknown union mode `{other}`"),
            }),
        }
    }
}

/// A hesitant fuzzy element in canonical form.
#[derive(Debug, Clone, Serialize)]
#[serde(transparent)]
pub struct Hfe {
    degrees: Vec<Degree>,
}

impl Hfe {
    /// Builds the canonical element: sorted ascending, near-duplicates
    /// collapsed.
    pub fn new(values: &[f64]) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::EmptyHfe);
        }
        let degrees = values
            .iter()
            .map(|&v| Degree::new(v))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_degrees(degrees))
    }

    fn from_degrees(mut degrees: Vec<Degree>) -> Self {
        debug_assert!(!degrees.is_empty());
        degrees.sort_by(|a, b| a.0.total_cmp(&b.0));
        let mut out: Vec<Degree> = Vec::with_capacity(degrees.len());
        for d in degrees {
            match out.last() {
                Some(last) if d.0 - last.0 <= EPS => {}
                _ => out.push(d),
            }
        }
        Hfe { degrees: out }
    }

    /// The null element `{0}`.
    pub fn null() -> Self {
        Hfe {
            degrees: vec![Degree::ZERO],
        }
    }

    pub(crate) fn null_ref() -> &'static Hfe {
        &NULL_HFE
    }

    pub fn singleton(value: f64) -> Result<Self> {
        Self::new(&[value])
    }

    pub fn degrees(&self) -> &[Degree] {
        &self.degrees
    }

    pub fn values(&self) -> Vec<f64> {
        self.degrees.iter().map(|d| d.0).collect()
    }

    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    /// Always false; kept for the usual `len`/`is_empty` pairing.
    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    pub fn is_null(&self) -> bool {
        self.degrees.len() == 1 && self.degrees[0] == Degree::ZERO
    }

    /// `(min, max)` of the element.
    pub fn bounds(&self) -> (Degree, Degree) {
        (self.degrees[0], self.degrees[self.degrees.len() - 1])
    }

    pub fn lower(&self) -> Degree {
        self.bounds().0
    }

    pub fn upper(&self) -> Degree {
        self.bounds().1
    }

    pub fn complement(&self) -> Hfe {
        Self::from_degrees(self.degrees.iter().map(|d| d.complement()).collect())
    }

    pub fn union(&self, other: &Hfe, mode: UnionMode) -> Hfe {
        match mode {
            UnionMode::Set => self.pairwise(other, Degree::max),
            UnionMode::Sorted => self.positionwise(other, Pad::TailMax, Degree::max),
        }
    }

    pub fn intersection(&self, other: &Hfe, mode: UnionMode) -> Hfe {
        match mode {
            UnionMode::Set => self.pairwise(other, Degree::min),
            UnionMode::Sorted => self.positionwise(other, Pad::HeadMin, Degree::min),
        }
    }

    /// Left fold of [`Hfe::union`] in the given order; `{0}` for no items.
    pub fn union_all<'a, I>(items: I, mode: UnionMode) -> Hfe
    where
        I: IntoIterator<Item = &'a Hfe>,
    {
        let mut iter = items.into_iter();
        let Some(first) = iter.next() else {
            return Hfe::null();
        };
        iter.fold(first.clone(), |acc, item| acc.union(item, mode))
    }

    fn pairwise(&self, other: &Hfe, op: fn(Degree, Degree) -> Degree) -> Hfe {
        let mut out = Vec::with_capacity(self.len() * other.len());
        for &a in &self.degrees {
            for &b in &other.degrees {
                out.push(op(a, b));
            }
        }
        Self::from_degrees(out)
    }

    fn positionwise(&self, other: &Hfe, pad: Pad, op: fn(Degree, Degree) -> Degree) -> Hfe {
        let len = self.len().max(other.len());
        let a = pad.apply(&self.degrees, len);
        let b = pad.apply(&other.degrees, len);
        Self::from_degrees(a.iter().zip(&b).map(|(&x, &y)| op(x, y)).collect())
    }
}

#[derive(Clone, Copy)]
enum Pad {
    TailMax,
    HeadMin,
}

impl Pad {
    fn apply(self, degrees: &[Degree], len: usize) -> Vec<Degree> {
        let missing = len - degrees.len();
        let mut out = Vec::with_capacity(len);
        match self {
            Pad::TailMax => {
                out.extend_from_slice(degrees);
                out.extend(std::iter::repeat_n(degrees[degrees.len() - 1], missing));
            }
            Pad::HeadMin => {
                out.extend(std::iter::repeat_n(degrees[0], missing));
                out.extend_from_slice(degrees);
            }
        }
        out
    }
}

impl PartialEq for Hfe {
    fn eq(&self, other: &Self) -> bool {
        self.degrees == other.degrees
    }
}

impl Default for Hfe {
    fn default() -> Self {
        Hfe::null()
    }
}

impl fmt::Display for Hfe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, d) in self.degrees.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{d}")?;
        }
        f.write_str("}")
    }
}

impl FromStr for Hfe {
    type Err = Error;

    /// Parses `{0.8, 0.4, 0.9}`; braces are optional and order is free.
    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        let inner = trimmed
            .strip_prefix('{')
            .and_then(|t| t.strip_suffix('}'))
            .unwrap_or(trimmed);
        let mut values = Vec::new();
        for (i, part) in inner.split(',').enumerate() {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            let v: f64 = part.parse().map_err(|_| Error::Parse {
                line: 1,
                column: i + 1,
                message: format!("`{part}` is not a number"),
            })?;
            values.push(v);
        }
        Hfe::new(&values)
    }
}

impl<'de> Deserialize<'de> for Hfe {
    fn deserialize<D>(deserializer: D) -> std::result::Result<Self, D::Error>
    where
        D: serde::Deserializer<'de>,
    {
        let values = Vec::<f64>::deserialize(deserializer)?;
        Hfe::new(&values).map_err(serde::de::Error::custom)
    }
}
