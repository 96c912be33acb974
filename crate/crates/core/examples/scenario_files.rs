// Loading a JSON scenario and evaluating named mappings and sets.

use hfsoft::scenario::parse_scenario;

const SCENARIO: &str = include_str!(concat!(
    env!("CARGO_MANIFEST_DIR"),
    "/fixtures/example_3_10.json"
));

pub fn run_example() -> hfsoft::Result<()> {
    let scenario = parse_scenario(SCENARIO)?;
    let f = &scenario.mapping("f")?.mapping;
    let g = &scenario.mapping("g")?.mapping;
    let fa = &scenario.set("F_A")?.set;
    println!("mode from the scenario: {}", scenario.mode);

    let image = g.image(&f.image(fa, scenario.mode)?, scenario.mode)?;
    println!("g(f(F_A)):\n{image}");

    // Unknown names and malformed documents surface as errors.
    assert!(scenario.set("nope").is_err());
    let broken = parse_scenario("{ \"classes\": [1, }").unwrap_err();
    println!("malformed input: {broken}");

    println!("normalised document:\n{}", scenario.render());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
