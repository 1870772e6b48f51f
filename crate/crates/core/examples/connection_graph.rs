// Heteroclinic connections from the Morse drop and z-adjacency.

use sturm_meander::{AttractorModel, SturmPermutation};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let p: SturmPermutation = "1 4 5 6 3 2 7".parse()?;
    let model = AttractorModel::build(&p)?;
    let graph = model.connection_graph();

    for node in &graph.nodes {
        let targets: Vec<String> = graph
            .successors(node.label)
            .map(|t| t.to_string())
            .collect();
        println!(
            "{} (i={}) -> {{{}}}",
            node.label,
            node.morse,
            targets.join(", ")
        );
    }
    println!("sources: {:?}", graph.sources());

    let blocked = model.is_z_adjacent(2, 5)?;
    println!(
        "2 and 5 z-adjacent: {} (blocker {:?})",
        blocked.adjacent, blocked.blocker
    );
    assert!(graph.reaches(2, 5) || !model.connects(2, 5)?);
    Ok(())
}

fn main() {
    if let Err(err) = run_example() {
        eprintln!("error: {err}");
        std::process::exit(1);
    }
}
