//! Scenario documents: named classes, mappings and soft sets in one JSON file.
//!
//! ```json
//! {
//!   "classes":  { "UE": { "universe": ["a", "b"], "attributes": ["e1", "e2"] } },
//!   "mappings": { "f": { "source": "UE", "target": "UE",
//!                        "p": { "a": "b", "b": "a" }, "q": { "e1": "e1", "e2": "e2" } } },
//!   "sets":     { "F_A": { "class": "UE", "support": ["e1"],
//!                          "table": { "e1": { "a": [0.6, 0.8], "b": [0.3] } } } },
//!   "options":  { "mode": "sorted" }
//! }
//! ```
//!
//! `support` may be omitted, in which case it is the set of table rows.

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hfe::{round_degree, Hfe, UnionMode};
use crate::hfss::{Hfss, SoftClass};
use crate::mapping::{PointMap, SoftMapping};

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClassDoc {
    pub universe: Vec<String>,
    pub attributes: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MappingDoc {
    pub source: String,
    pub target: String,
    /// Universe map.
    pub p: IndexMap<String, String>,
    /// Attribute map.
    pub q: IndexMap<String, String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SetDoc {
    pub class: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub support: Option<Vec<String>>,
    pub table: IndexMap<String, IndexMap<String, Vec<f64>>>,
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OptionsDoc {
    #[serde(default)]
    pub mode: UnionMode,
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioDoc {
    #[serde(default)]
    pub classes: IndexMap<String, ClassDoc>,
    #[serde(default)]
    pub mappings: IndexMap<String, MappingDoc>,
    #[serde(default)]
    pub sets: IndexMap<String, SetDoc>,
    #[serde(default)]
    pub options: OptionsDoc,
}

#[derive(Debug, Clone)]
pub struct NamedMapping {
    pub source: String,
    pub target: String,
    pub mapping: SoftMapping,
}

#[derive(Debug, Clone)]
pub struct NamedSet {
    pub class: String,
    pub set: Hfss,
}

/// A validated scenario. Declaration order is kept for every section.
#[derive(Debug, Clone, Default)]
pub struct Scenario {
    pub classes: IndexMap<String, SoftClass>,
    pub mappings: IndexMap<String, NamedMapping>,
    pub sets: IndexMap<String, NamedSet>,
    pub mode: UnionMode,
}

/// Parses and validates a scenario document.
pub fn parse_scenario(text: &str) -> Result<Scenario> {
    let doc: ScenarioDoc = serde_json::from_str(text).map_err(|e| {
        let full = e.to_string();
        let suffix = format!(" at line {} column {}", e.line(), e.column());
        Error::Parse {
            line: e.line(),
            column: e.column(),
            message: full.strip_suffix(&suffix).unwrap_or(&full).to_owned(),
        }
    })?;
    Scenario::from_doc(&doc)
}

impl Scenario {
    pub fn from_doc(doc: &ScenarioDoc) -> Result<Self> {
        let mut scenario = Scenario {
            mode: doc.options.mode,
            ..Scenario::default()
        };
        for (name, c) in &doc.classes {
            let class = SoftClass::new(c.universe.iter().cloned(), c.attributes.iter().cloned())?;
            scenario.classes.insert(name.clone(), class);
        }
        for (name, m) in &doc.mappings {
            let source = scenario.class(&m.source)?;
            let target = scenario.class(&m.target)?;
            let elements = PointMap::new(
                &format!("{name}.p"),
                source.universe(),
                target.universe(),
                &m.p,
            )?;
            let attributes = PointMap::new(
                &format!("{name}.q"),
                source.attributes(),
                target.attributes(),
                &m.q,
            )?;
            let mapping = SoftMapping::from_point_maps(source, target, elements, attributes)?;
            scenario.mappings.insert(
                name.clone(),
                NamedMapping {
                    source: m.source.clone(),
                    target: m.target.clone(),
                    mapping,
                },
            );
        }
        for (name, s) in &doc.sets {
            let class = scenario.class(&s.class)?;
            let set = set_from_doc(class, s)?;
            scenario.sets.insert(
                name.clone(),
                NamedSet {
                    class: s.class.clone(),
                    set,
                },
            );
        }
        Ok(scenario)
    }

    pub fn class(&self, name: &str) -> Result<&SoftClass> {
        self.classes.get(name).ok_or_else(|| Error::UnknownClass {
            name: name.to_owned(),
        })
    }

    pub fn mapping(&self, name: &str) -> Result<&NamedMapping> {
        self.mappings
            .get(name)
            .ok_or_else(|| Error::UnknownMapping {
                name: name.to_owned(),
            })
    }

    pub fn set(&self, name: &str) -> Result<&NamedSet> {
        self.sets.get(name).ok_or_else(|| Error::UnknownSet {
            name: name.to_owned(),
        })
    }

    /// Name of the first declared class equal to `class`.
    pub fn class_name(&self, class: &SoftClass) -> Option<&str> {
        self.classes
            .iter()
            .find(|(_, c)| *c == class)
            .map(|(n, _)| n.as_str())
    }

    pub fn to_doc(&self) -> ScenarioDoc {
        ScenarioDoc {
            classes: self
                .classes
                .iter()
                .map(|(n, c)| (n.clone(), class_to_doc(c)))
                .collect(),
            mappings: self
                .mappings
                .iter()
                .map(|(n, m)| (n.clone(), mapping_to_doc(&m.source, &m.target, &m.mapping)))
                .collect(),
            sets: self
                .sets
                .iter()
                .map(|(n, s)| (n.clone(), set_to_doc(&s.class, &s.set)))
                .collect(),
            options: OptionsDoc { mode: self.mode },
        }
    }

    /// Pretty JSON; the same scenario always renders to the same bytes.
    pub fn render(&self) -> String {
        to_json_pretty(&self.to_doc())
    }
}

pub(crate) fn to_json_pretty<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("documents serialize infallibly")
}

fn set_from_doc(class: &SoftClass, doc: &SetDoc) -> Result<Hfss> {
    let support: Vec<String> = match &doc.support {
        Some(s) => s.clone(),
        None => doc.table.keys().cloned().collect(),
    };
    let mut table = std::collections::BTreeMap::new();
    for (attr, row) in &doc.table {
        let mut cells = std::collections::BTreeMap::new();
        for (elem, values) in row {
            cells.insert(elem.clone(), Hfe::new(values)?);
        }
        table.insert(attr.clone(), cells);
    }
    Hfss::new(class, &support, &table)
}

pub fn class_to_doc(class: &SoftClass) -> ClassDoc {
    ClassDoc {
        universe: class.universe().to_vec(),
        attributes: class.attributes().to_vec(),
    }
}

pub fn mapping_to_doc(source: &str, target: &str, mapping: &SoftMapping) -> MappingDoc {
    let pairs = |m: &PointMap| {
        m.pairs()
            .map(|(a, b)| (a.to_owned(), b.to_owned()))
            .collect()
    };
    MappingDoc {
        source: source.to_owned(),
        target: target.to_owned(),
        p: pairs(mapping.element_map()),
        q: pairs(mapping.attribute_map()),
    }
}

/// Machine form of a soft set: the table lists supported rows only, in class
/// order, with degrees rounded to nine decimals.
pub fn set_to_doc(class_name: &str, set: &Hfss) -> SetDoc {
    let class = set.class();
    let support: Vec<String> = set.support().into_iter().map(str::to_owned).collect();
    let table = set
        .support_indices()
        .map(|a| {
            let row = class
                .universe()
                .iter()
                .enumerate()
                .map(|(x, elem)| {
                    let values = set
                        .cell(a, x)
                        .values()
                        .into_iter()
                        .map(round_degree)
                        .collect();
                    (elem.clone(), values)
                })
                .collect();
            (class.attributes()[a].clone(), row)
        })
        .collect();
    SetDoc {
        class: class_name.to_owned(),
        support: Some(support),
        table,
    }
}
