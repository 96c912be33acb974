//! Soft classes and hesitant fuzzy soft sets.
//!
//! A [`SoftClass`] fixes a universe of element ids and a set of attribute ids,
//! both in declaration order. An [`Hfss`] assigns an [`Hfe`] to every element
//! under each attribute of its support; lookups outside the support read as
//! the null element `{0}`.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::hfe::{Hfe, UnionMode};

#[derive(Debug)]
struct ClassInner {
    universe: Vec<String>,
    attributes: Vec<String>,
    universe_index: HashMap<String, usize>,
    attribute_index: HashMap<String, usize>,
}

/// The pair (universe, attributes) every soft set of the class lives over.
///
/// Cloning is cheap; equality compares the two id lists.
#[derive(Debug, Clone)]
pub struct SoftClass {
    inner: Arc<ClassInner>,
}

fn index_ids(ids: &[String]) -> Result<HashMap<String, usize>> {
    let mut index = HashMap::with_capacity(ids.len());
    for (i, id) in ids.iter().enumerate() {
        if index.insert(id.clone(), i).is_some() {
            return Err(Error::DuplicateId { id: id.clone() });
        }
    }
    Ok(index)
}

impl SoftClass {
    pub fn new<U, A>(universe: U, attributes: A) -> Result<Self>
    where
        U: IntoIterator,
        U::Item: Into<String>,
        A: IntoIterator,
        A::Item: Into<String>,
    {
        let universe: Vec<String> = universe.into_iter().map(Into::into).collect();
        let attributes: Vec<String> = attributes.into_iter().map(Into::into).collect();
        if universe.is_empty() {
            return Err(Error::EmptyUniverse);
        }
        if attributes.is_empty() {
            return Err(Error::EmptyAttributeSet);
        }
        let universe_index = index_ids(&universe)?;
        let attribute_index = index_ids(&attributes)?;
        Ok(SoftClass {
            inner: Arc::new(ClassInner {
                universe,
                attributes,
                universe_index,
                attribute_index,
            }),
        })
    }

    pub fn universe(&self) -> &[String] {
        &self.inner.universe
    }

    pub fn attributes(&self) -> &[String] {
        &self.inner.attributes
    }

    pub fn element_index(&self, id: &str) -> Result<usize> {
        self.inner
            .universe_index
            .get(id)
            .copied()
            .ok_or_else(|| Error::UnknownElement { id: id.to_owned() })
    }

    pub fn attribute_index(&self, id: &str) -> Result<usize> {
        self.inner
            .attribute_index
            .get(id)
            .copied()
            .ok_or_else(|| Error::UnknownAttribute { id: id.to_owned() })
    }
}

impl PartialEq for SoftClass {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.universe == other.inner.universe
                && self.inner.attributes == other.inner.attributes)
    }
}

impl Eq for SoftClass {}

/// A hesitant fuzzy soft set over a [`SoftClass`].
///
/// Rows are stored by attribute position; `None` marks an attribute outside
/// the support.
#[derive(Debug, Clone)]
pub struct Hfss {
    class: SoftClass,
    rows: Vec<Option<Vec<Hfe>>>,
}

impl Hfss {
    /// The soft set with empty support.
    pub fn empty(class: &SoftClass) -> Self {
        Hfss {
            class: class.clone(),
            rows: vec![None; class.attributes().len()],
        }
    }

    /// Validating constructor. `table` must have exactly one row per
    /// supported attribute and each row must cover the whole universe.
    pub fn new<S: AsRef<str>>(
        class: &SoftClass,
        support: &[S],
        table: &BTreeMap<String, BTreeMap<String, Hfe>>,
    ) -> Result<Self> {
        let mut set = Hfss::empty(class);
        let mut declared = HashSet::new();
        for attr in support {
            let attr = attr.as_ref();
            let a = class.attribute_index(attr)?;
            if !declared.insert(a) {
                return Err(Error::DuplicateId {
                    id: attr.to_owned(),
                });
            }
            let row = table.get(attr).ok_or_else(|| Error::MissingRow {
                attribute: attr.to_owned(),
            })?;
            set.rows[a] = Some(Self::build_row(class, attr, row)?);
        }
        for attr in table.keys() {
            let a = class.attribute_index(attr)?;
            if !declared.contains(&a) {
                return Err(Error::RowOutsideSupport {
                    attribute: attr.clone(),
                });
            }
        }
        Ok(set)
    }

    /// Builds from `(attribute, [(element, values)])` rows; the support is
    /// the set of attributes listed.
    pub fn from_rows<'a, R, C>(class: &SoftClass, rows: R) -> Result<Self>
    where
        R: IntoIterator<Item = (&'a str, C)>,
        C: IntoIterator<Item = (&'a str, &'a [f64])>,
    {
        let mut set = Hfss::empty(class);
        for (attr, cells) in rows {
            let a = class.attribute_index(attr)?;
            if set.rows[a].is_some() {
                return Err(Error::DuplicateId {
                    id: attr.to_owned(),
                });
            }
            let mut row = BTreeMap::new();
            for (elem, values) in cells {
                if row.insert(elem.to_owned(), Hfe::new(values)?).is_some() {
                    return Err(Error::DuplicateId {
                        id: elem.to_owned(),
                    });
                }
            }
            set.rows[a] = Some(Self::build_row(class, attr, &row)?);
        }
        Ok(set)
    }

    /// Builds a soft set with the given supported attribute positions; `cell`
    /// receives (attribute position, element position).
    pub(crate) fn from_fn(
        class: &SoftClass,
        support: impl IntoIterator<Item = usize>,
        mut cell: impl FnMut(usize, usize) -> Hfe,
    ) -> Self {
        let mut set = Hfss::empty(class);
        let n = class.universe().len();
        for a in support {
            set.rows[a] = Some((0..n).map(|x| cell(a, x)).collect());
        }
        set
    }

    fn build_row(class: &SoftClass, attr: &str, row: &BTreeMap<String, Hfe>) -> Result<Vec<Hfe>> {
        for elem in row.keys() {
            class.element_index(elem)?;
        }
        class
            .universe()
            .iter()
            .map(|elem| {
                row.get(elem).cloned().ok_or_else(|| Error::MissingElement {
                    attribute: attr.to_owned(),
                    element: elem.clone(),
                })
            })
            .collect()
    }

    pub fn class(&self) -> &SoftClass {
        &self.class
    }

    /// Supported attribute ids in class order.
    pub fn support(&self) -> Vec<&str> {
        self.support_indices()
            .map(|a| self.class.attributes()[a].as_str())
            .collect()
    }

    pub fn support_indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows
            .iter()
            .enumerate()
            .filter_map(|(a, row)| row.as_ref().map(|_| a))
    }

    pub fn is_supported(&self, attribute: usize) -> bool {
        self.rows[attribute].is_some()
    }

    /// Value at `(attribute, element)`; `{0}` outside the support.
    pub fn get(&self, attribute: &str, element: &str) -> Result<&Hfe> {
        let a = self.class.attribute_index(attribute)?;
        let x = self.class.element_index(element)?;
        Ok(self.cell(a, x))
    }

    /// Positional lookup with null-extension.
    pub fn cell(&self, attribute: usize, element: usize) -> &Hfe {
        match &self.rows[attribute] {
            Some(row) => &row[element],
            None => Hfe::null_ref(),
        }
    }

    pub(crate) fn row(&self, attribute: usize) -> Option<&[Hfe]> {
        self.rows[attribute].as_deref()
    }

    pub(crate) fn set_row(&mut self, attribute: usize, row: Option<Vec<Hfe>>) {
        debug_assert!(row
            .as_ref()
            .is_none_or(|r| r.len() == self.class.universe().len()));
        self.rows[attribute] = row;
    }

    pub(crate) fn set_cell(&mut self, attribute: usize, element: usize, value: Hfe) {
        let n = self.class.universe().len();
        self.rows[attribute].get_or_insert_with(|| vec![Hfe::null(); n])[element] = value;
    }

    /// Soft set union: rows from one side only are copied, shared rows are
    /// combined cell by cell.
    pub fn union(&self, other: &Hfss, mode: UnionMode) -> Result<Hfss> {
        if self.class != other.class {
            return Err(Error::ClassMismatch);
        }
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(left, right)| match (left, right) {
                (Some(l), Some(r)) => {
                    Some(l.iter().zip(r).map(|(x, y)| x.union(y, mode)).collect())
                }
                (Some(l), None) => Some(l.clone()),
                (None, Some(r)) => Some(r.clone()),
                (None, None) => None,
            })
            .collect();
        Ok(Hfss {
            class: self.class.clone(),
            rows,
        })
    }

    /// Equality up to null-extension: same class and the same value at every
    /// cell, reading unsupported rows as all `{0}`.
    pub fn equivalent(&self, other: &Hfss) -> bool {
        if self.class != other.class {
            return false;
        }
        let n = self.class.universe().len();
        (0..self.rows.len()).all(|a| (0..n).all(|x| self.cell(a, x) == other.cell(a, x)))
    }

    /// Renders only the supported rows.
    pub fn render_support(&self) -> String {
        self.render_rows(self.support_indices().collect())
    }

    fn render_rows(&self, attributes: Vec<usize>) -> String {
        let mut lines = Vec::with_capacity(attributes.len());
        for a in attributes {
            let cells: Vec<String> = self
                .class
                .universe()
                .iter()
                .enumerate()
                .map(|(x, elem)| format!("{elem}={}", self.cell(a, x)))
                .collect();
            lines.push(format!(
                "{}: {}",
                self.class.attributes()[a],
                cells.join(", ")
            ));
        }
        lines.join("\n")
    }
}

impl PartialEq for Hfss {
    fn eq(&self, other: &Self) -> bool {
        self.equivalent(other)
    }
}

/// One line per class attribute, null rows included:
/// `e1: a={0.6, 0.8}, b={0.4, 0.8, 0.9}, c={0.3}`.
impl fmt::Display for Hfss {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_rows((0..self.rows.len()).collect()))
    }
}
