// Image and inverse image of a soft set under a soft mapping.

use hfsoft::{Hfss, SoftClass, SoftMapping, UnionMode};

pub fn run_example() -> hfsoft::Result<()> {
    let ue = SoftClass::new(["a", "b", "c"], ["e1", "e2", "e3", "e4"])?;
    let ve = SoftClass::new(["x", "y", "z"], ["e1'", "e2'", "e3'"])?;
    let f = SoftMapping::new(
        &ue,
        &ve,
        [("a", "y"), ("b", "x"), ("c", "y")],
        [("e1", "e2'"), ("e2", "e1'"), ("e3", "e2'"), ("e4", "e3'")],
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

    let image = f.image(&fa, UnionMode::Sorted)?;
    println!("f(F_A):\n{image}");
    assert_eq!(image.get("e1'", "y")?.values(), vec![0.2, 0.4, 0.9]);
    assert!(image.get("e3'", "z")?.is_null());

    let preimage = f.inverse_image(&image)?;
    println!(
        "f^-1(f(F_A)), support [{}]:\n{preimage}",
        preimage.support().join(", ")
    );

    // Set semantics keep every degree that survives the pairwise max.
    let set_image = f.image(&fa, UnionMode::Set)?;
    println!(
        "f(F_A)(e1')(y) under set union = {}",
        set_image.get("e1'", "y")?
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
