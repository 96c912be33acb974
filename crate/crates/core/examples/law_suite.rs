// Running the seeded law suite and reading its report.

use hfsoft::laws::{run_suite, GenConfig};

pub fn run_example() -> hfsoft::Result<()> {
    let cfg = GenConfig::with_seed(7).cases(40);
    let report = run_suite(&cfg)?;
    for law in &report.laws {
        let mode = law.mode.map(|m| m.as_str()).unwrap_or("-");
        let tag = if law.asserted { "law" } else { "report" };
        println!(
            "{tag:<6} {:<34} {mode:<6} {} cases, {} failures",
            law.law, law.cases, law.failures
        );
    }
    assert!(report.passed);
    println!("suite passed: {}", report.passed);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
