// Zero number matrix by the boundary recursion, cross-checked pair by pair
// against the Sturm-Liouville formula.

use sturm_meander::{z_matrix, z_pair_nsl, SturmPermutation};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let p: SturmPermutation = "1 4 5 6 3 2 7".parse()?;
    let z = z_matrix(&p)?;
    print!("{z}");

    let n = p.len();
    for j in 1..=n {
        for k in (1..=n).filter(|&k| k != j) {
            assert_eq!(z_pair_nsl(&p, j, k)?, z.get(j, k));
        }
    }
    println!("formula and recursion agree on all {} pairs", n * (n - 1));

    for (j, k) in [(3, 2), (3, 4), (3, 5)] {
        println!("z({k} - {j}) = {}", z.signed(j, k)?);
    }
    Ok(())
}

fn main() {
    if let Err(err) = run_example() {
        eprintln!("error: {err}");
        std::process::exit(1);
    }
}
