// Validates a few permutations and prints their Morse vectors.
//
// ```bash
// cargo run --example validate
// ```

use sturm_meander::SturmPermutation;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for text in ["1 4 5 6 3 2 7", "1 4 3 2 5", "1 3 2 4 5"] {
        let p: SturmPermutation = text.parse()?;
        println!(
            "[{p}] dissipative={} morse={} meander={} sturm={}",
            p.is_dissipative(),
            p.is_morse(),
            p.is_meander(),
            p.is_sturm()
        );
        println!("  morse vector: {}", p.morse_indices());
    }

    let p: SturmPermutation = "1 4 5 6 3 2 7".parse()?;
    assert_eq!(p.morse_indices().as_slice(), &[0, 1, 2, 1, 0, 1, 0]);
    let orbit = p.klein_orbit()?;
    println!("Klein orbit ({} distinct):", orbit.size());
    for q in orbit.distinct() {
        println!("  [{q}]");
    }
    Ok(())
}

fn main() {
    if let Err(err) = run_example() {
        eprintln!("error: {err}");
        std::process::exit(1);
    }
}
