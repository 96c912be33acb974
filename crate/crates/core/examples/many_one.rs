// A many-one mapping sends distinct soft sets to the same image.

use hfsoft::laws::many_one_witness;
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
    let ma = Hfss::from_rows(
        &ue,
        [
            (
                "e1",
                vec![
                    ("a", &[0.6, 0.5][..]),
                    ("b", &[0.8, 0.4, 0.9]),
                    ("c", &[0.6, 0.8]),
                ],
            ),
            (
                "e2",
                vec![
                    ("a", &[0.3, 0.2, 0.7][..]),
                    ("b", &[0.5]),
                    ("c", &[0.4, 0.1, 0.9]),
                ],
            ),
            (
                "e4",
                vec![("a", &[0.4][..]), ("b", &[0.2, 0.6]), ("c", &[0.3, 0.8])],
            ),
        ],
    )?;
    println!("f is many-one: {}", f.is_many_one());

    for mode in UnionMode::ALL {
        let same = f.image(&fa, mode)?.equivalent(&f.image(&ma, mode)?);
        println!("{mode}: f(F_A) ≐ f(M_A) is {same}");
    }
    assert!(!fa.equivalent(&ma));
    assert!(f
        .image(&fa, UnionMode::Sorted)?
        .equivalent(&f.image(&ma, UnionMode::Sorted)?));

    // A witness that collides under every union mode.
    let (left, right) = many_one_witness(&f, &fa)?;
    for mode in UnionMode::ALL {
        assert!(f.image(&left, mode)?.equivalent(&f.image(&right, mode)?));
    }
    println!("constructed pair, left:\n{left}\nright:\n{right}");
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
