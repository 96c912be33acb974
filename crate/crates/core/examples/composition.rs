// Composing soft mappings and applying the composite.

use hfsoft::{compose, composite_image, Hfss, SoftClass, SoftMapping, UnionMode};

pub fn run_example() -> hfsoft::Result<()> {
    let ue = SoftClass::new(["a", "b", "c"], ["e1", "e2", "e3", "e4"])?;
    let ve = SoftClass::new(["x", "y", "z"], ["e1'", "e2'", "e3'"])?;
    let we = SoftClass::new(["h1", "h2", "h3"], ["e1''", "e2''", "e3''"])?;
    let f = SoftMapping::new(
        &ue,
        &ve,
        [("a", "y"), ("b", "x"), ("c", "y")],
        [("e1", "e2'"), ("e2", "e1'"), ("e3", "e2'"), ("e4", "e3'")],
    )?;
    let g = SoftMapping::new(
        &ve,
        &we,
        [("x", "h2"), ("y", "h3"), ("z", "h2")],
        [("e1'", "e3''"), ("e2'", "e3''"), ("e3'", "e1''")],
    )?;
    let fa = Hfss::from_rows(
        &ue,
        [
            (
                "e1",
                vec![
                    ("a", &[0.6, 0.8][..]),
                    ("b", &[0.8, 0.4, 0.9]),
                    ("c", &[0.3]),
                ],
            ),
            (
                "e2",
                vec![
                    ("a", &[0.9, 0.1, 0.2][..]),
                    ("b", &[0.5]),
                    ("c", &[0.2, 0.4, 0.6]),
                ],
            ),
            (
                "e4",
                vec![("a", &[0.3][..]), ("b", &[0.2, 0.6]), ("c", &[0.4, 0.8])],
            ),
        ],
    )?;

    let gf = compose(&g, &f)?;
    println!("g∘f elements:   {}", gf.element_map());
    println!("g∘f attributes: {}", gf.attribute_map());

    let stepwise = composite_image(&g, &f, &fa, UnionMode::Sorted)?;
    println!("(g∘f)(F_A):\n{stepwise}");
    assert_eq!(stepwise.get("e3''", "h2")?.values(), vec![0.5, 0.8, 0.9]);
    assert_eq!(stepwise.get("e3''", "h3")?.values(), vec![0.6, 0.8, 0.9]);

    let direct = gf.image(&fa, UnionMode::Sorted)?;
    println!(
        "direct image agrees with the stepwise one: {}",
        direct.equivalent(&stepwise)
    );
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
