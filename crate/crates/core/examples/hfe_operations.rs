// Union, intersection and complement of hesitant fuzzy elements under both
// union semantics.

use hfsoft::{Hfe, UnionMode};

pub fn run_example() -> hfsoft::Result<()> {
    let h1 = Hfe::new(&[0.9, 0.1, 0.2])?;
    let h2 = Hfe::new(&[0.2, 0.4, 0.6])?;
    println!("h1 = {h1}, h2 = {h2}");

    for mode in UnionMode::ALL {
        let union = h1.union(&h2, mode);
        let meet = h1.intersection(&h2, mode);
        println!("{mode}: h1 ∪ h2 = {union}, h1 ∩ h2 = {meet}");
    }
    assert_eq!(
        h1.union(&h2, UnionMode::Set),
        Hfe::new(&[0.2, 0.4, 0.6, 0.9])?
    );
    assert_eq!(
        h1.union(&h2, UnionMode::Sorted),
        Hfe::new(&[0.2, 0.4, 0.9])?
    );

    // Shorter operands are padded with their own extreme value.
    let short = Hfe::new(&[0.6, 0.8])?;
    let padded = Hfe::new(&[0.2, 0.4, 0.9])?.union(&short, UnionMode::Sorted);
    println!("{{0.2, 0.4, 0.9}} ∪ {short} = {padded}");

    println!("complement of h1 = {}", h1.complement());
    println!("null element = {}", Hfe::null());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
