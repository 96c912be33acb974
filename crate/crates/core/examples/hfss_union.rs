// Building soft sets over a class and taking their union.

use hfsoft::{Hfss, SoftClass, UnionMode};

pub fn run_example() -> hfsoft::Result<()> {
    let class = SoftClass::new(["a", "b"], ["e1", "e2", "e3"])?;
    let f = Hfss::from_rows(
        &class,
        [
            ("e1", vec![("a", &[0.2, 0.7][..]), ("b", &[0.5][..])]),
            ("e2", vec![("a", &[0.1][..]), ("b", &[0.3, 0.9][..])]),
        ],
    )?;
    let g = Hfss::from_rows(
        &class,
        [
            ("e2", vec![("a", &[0.4, 0.6][..]), ("b", &[0.8][..])]),
            ("e3", vec![("a", &[1.0][..]), ("b", &[0.0][..])]),
        ],
    )?;
    println!("F, support [{}]:\n{f}", f.support().join(", "));
    println!("G, support [{}]:\n{g}", g.support().join(", "));

    for mode in UnionMode::ALL {
        let u = f.union(&g, mode)?;
        println!("F ∪ G ({mode}), support [{}]:\n{u}", u.support().join(", "));
    }

    // Unlisted attributes read as the null element, so an explicit null row
    // does not change the soft set up to equivalence.
    let padded = Hfss::from_rows(
        &class,
        [
            ("e1", vec![("a", &[0.2, 0.7][..]), ("b", &[0.5][..])]),
            ("e2", vec![("a", &[0.1][..]), ("b", &[0.3, 0.9][..])]),
            ("e3", vec![("a", &[0.0][..]), ("b", &[0.0][..])]),
        ],
    )?;
    assert!(f.equivalent(&padded));
    println!("F ≐ F with a null e3 row: {}", f.equivalent(&padded));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
