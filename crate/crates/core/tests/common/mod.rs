#![allow(dead_code)]

use std::path::PathBuf;

use hfsoft::scenario::{parse_scenario, Scenario};
use hfsoft::{Hfss, SoftClass};

pub type Row<'a> = (&'a str, &'a [(&'a str, &'a [f64])]);

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
}

pub fn fixture(name: &str) -> Scenario {
    let text = std::fs::read_to_string(fixture_path(name)).expect("fixture is readable");
    parse_scenario(&text).expect("fixture validates")
}

pub fn table(class: &SoftClass, rows: &[Row]) -> Hfss {
    Hfss::from_rows(
        class,
        rows.iter().map(|(a, cells)| (*a, cells.iter().copied())),
    )
    .expect("expected table is well formed")
}

/// Cell-by-cell comparison over the whole class, null-extended.
pub fn assert_same(actual: &Hfss, expected: &Hfss) {
    let class = expected.class();
    for attr in class.attributes() {
        for elem in class.universe() {
            let got = actual.get(attr, elem).expect("cell");
            let want = expected.get(attr, elem).expect("cell");
            assert_eq!(got, want, "cell ({attr}, {elem})");
        }
    }
}

pub fn ue_35_image(class: &SoftClass) -> Hfss {
    table(
        class,
        &[
            (
                "e1'",
                &[("x", &[0.5]), ("y", &[0.2, 0.4, 0.9]), ("z", &[0.0])],
            ),
            (
                "e2'",
                &[("x", &[0.8, 0.4, 0.9]), ("y", &[0.6, 0.8]), ("z", &[0.0])],
            ),
            (
                "e3'",
                &[("x", &[0.2, 0.6]), ("y", &[0.4, 0.8]), ("z", &[0.0])],
            ),
        ],
    )
}

pub fn ue_35_preimage(class: &SoftClass) -> Hfss {
    table(
        class,
        &[
            (
                "e1",
                &[("a", &[0.7]), ("b", &[0.5, 0.3, 0.7]), ("c", &[0.7])],
            ),
            (
                "e2",
                &[
                    ("a", &[0.3, 0.1, 0.8]),
                    ("b", &[0.2, 0.4]),
                    ("c", &[0.3, 0.1, 0.8]),
                ],
            ),
            (
                "e3",
                &[("a", &[0.7]), ("b", &[0.5, 0.3, 0.7]), ("c", &[0.7])],
            ),
            (
                "e4",
                &[("a", &[0.6, 0.8]), ("b", &[0.9]), ("c", &[0.6, 0.8])],
            ),
        ],
    )
}

pub fn ue_310_composite(class: &SoftClass) -> Hfss {
    table(
        class,
        &[
            (
                "e1''",
                &[("h1", &[0.0]), ("h2", &[0.2, 0.6]), ("h3", &[0.4, 0.8])],
            ),
            ("e2''", &[("h1", &[0.0]), ("h2", &[0.0]), ("h3", &[0.0])]),
            (
                "e3''",
                &[
                    ("h1", &[0.0]),
                    ("h2", &[0.5, 0.8, 0.9]),
                    ("h3", &[0.6, 0.8, 0.9]),
                ],
            ),
        ],
    )
}

pub fn bijective_image(class: &SoftClass) -> Hfss {
    table(
        class,
        &[
            (
                "e1'",
                &[
                    ("x", &[0.5]),
                    ("y", &[0.2, 0.4, 0.6]),
                    ("z", &[0.9, 0.1, 0.2]),
                ],
            ),
            (
                "e2'",
                &[("x", &[0.8, 0.4, 0.9]), ("y", &[0.3]), ("z", &[0.6, 0.8])],
            ),
            ("e3'", &[("x", &[0.0]), ("y", &[0.0]), ("z", &[0.0])]),
        ],
    )
}

pub fn bijective_composite(class: &SoftClass) -> Hfss {
    table(
        class,
        &[
            (
                "e1''",
                &[
                    ("h1", &[0.6, 0.8]),
                    ("h2", &[0.8, 0.4, 0.9]),
                    ("h3", &[0.3]),
                ],
            ),
            ("e2''", &[("h1", &[0.0]), ("h2", &[0.0]), ("h3", &[0.0])]),
            (
                "e3''",
                &[
                    ("h1", &[0.9, 0.1, 0.2]),
                    ("h2", &[0.5]),
                    ("h3", &[0.2, 0.4, 0.6]),
                ],
            ),
        ],
    )
}
