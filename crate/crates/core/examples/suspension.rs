// Suspension adds one unstable dimension to every equilibrium.

use sturm_meander::{suspend, verify_suspension, IndexBase, SturmPermutation};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let p: SturmPermutation = "1 4 5 6 3 2 7".parse()?;
    let s = suspend(&p)?;
    println!("suspension: {}", s.to_text(IndexBase::One));
    println!("0-based:    {}", s.to_text(IndexBase::Zero));
    println!("morse:      {}", s.suspended.morse_indices());

    let report = verify_suspension(&p)?;
    for check in &report.checks {
        println!(
            "  {:<26} {}",
            check.name,
            if check.pass { "ok" } else { "FAILED" }
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
