// Target sets and minimax equilibria of the 15-crossing completion used for
// the local analysis, and the minimax check for every unstable equilibrium.

use sturm_meander::{AttractorModel, Boundary, Sign, SturmPermutation};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let p: SturmPermutation = "1 14 13 6 5 4 7 12 11 8 9 10 3 2 15".parse()?;
    let model = AttractorModel::build(&p)?;

    let o = 3;
    let q = model.boundary_neighbors(o)?;
    println!("neighbours of {o}: {q:?}");
    println!("E^1_+({o}) = {:?}", model.target_set(o, 1, Sign::Plus)?);

    let m = model.minimax(o, 1, Sign::Plus)?;
    for b in Boundary::BOTH {
        println!(
            "{b}: closest {} most distant {}",
            m.closest(b),
            m.most_distant(b)
        );
    }
    assert_eq!(q.w0_plus, Some(m.closest_x0));
    assert_eq!(m.closest_x0, m.distant_x1);

    let mut cases = 0;
    for report in model.minimax_reports() {
        assert!(report.verdicts.passed());
        cases += report.verdicts.cases.len();
    }
    println!("minimax equality holds in all {cases} applicable cases");
    Ok(())
}

fn main() {
    if let Err(err) = run_example() {
        eprintln!("error: {err}");
        std::process::exit(1);
    }
}
