// Inverting a bijective soft mapping and undoing an image.

use hfsoft::{compose, Error, Hfss, SoftClass, SoftMapping, UnionMode};

pub fn run_example() -> hfsoft::Result<()> {
    let ue = SoftClass::new(["a", "b", "c"], ["e1", "e2", "e3"])?;
    let ve = SoftClass::new(["x", "y", "z"], ["e1'", "e2'", "e3'"])?;
    let f = SoftMapping::new(
        &ue,
        &ve,
        [("a", "z"), ("b", "x"), ("c", "y")],
        [("e1", "e2'"), ("e2", "e3'"), ("e3", "e1'")],
    )?;
    let la = Hfss::from_rows(
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
            ("e2", vec![("a", &[0.0][..]), ("b", &[0.0]), ("c", &[0.0])]),
            (
                "e3",
                vec![
                    ("a", &[0.9, 0.1, 0.2][..]),
                    ("b", &[0.5]),
                    ("c", &[0.2, 0.4, 0.6]),
                ],
            ),
        ],
    )?;

    let inverse = f.invert()?;
    println!("f^-1 elements:   {}", inverse.element_map());
    println!("f^-1 attributes: {}", inverse.attribute_map());

    let gb = f.image(&la, UnionMode::Sorted)?;
    println!("G_B = f(L_A):\n{gb}");
    let back = inverse.image(&gb, UnionMode::Sorted)?;
    let pulled = f.inverse_image(&gb)?;
    assert!(back.equivalent(&la));
    assert!(pulled.equivalent(&la));
    println!("f^-1(G_B) ≐ L_A: {}", pulled.equivalent(&la));

    let roundtrip = compose(&inverse, &f)?;
    assert!(roundtrip.element_map() == SoftMapping::identity(&ue).element_map());
    println!("f^-1∘f is the identity on UE");

    let squash = SoftMapping::new(
        &ue,
        &ve,
        [("a", "x"), ("b", "x"), ("c", "y")],
        [("e1", "e1'"), ("e2", "e2'"), ("e3", "e3'")],
    )?;
    match squash.invert() {
        Err(Error::NotBijective) => println!("a non-bijective mapping has no inverse"),
        other => panic!("expected NotBijective, got {other:?}"),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
