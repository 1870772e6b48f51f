// Counts Sturm permutations by size and runs the property harness.

use sturm_meander::{enumerate_sturm, enumerate_with, property_harness, Engine, EnumerationConfig};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for n in (1..=9).step_by(2) {
        println!("n={n}: {}", enumerate_sturm(n)?.len());
    }
    for p in enumerate_with(
        5,
        &EnumerationConfig {
            bound: 5,
            engine: Engine::Backtrack,
        },
    )? {
        println!("  [{p}]");
    }

    let report = property_harness(7)?;
    for prop in &report.properties {
        println!(
            "{:<32} {:>5} checked {} failed",
            prop.name, prop.checked, prop.failures
        );
    }
    assert!(report.passed());
    Ok(())
}

fn main() {
    if let Err(err) = run_example() {
        eprintln!("error: {err}");
        std::process::exit(1);
    }
}
