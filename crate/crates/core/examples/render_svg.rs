// Writes the meander drawing as SVG and the connection digraph as DOT.
//
// ```bash
// cargo run --example render_svg -- /tmp/meander
// ```

use sturm_meander::cli::render_dot;
use sturm_meander::{render_svg, AttractorModel, SturmPermutation, SvgStyle};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let p: SturmPermutation = "1 4 5 6 3 2 7".parse()?;
    let svg = render_svg(&p, &SvgStyle::default())?;
    let dot = render_dot(&AttractorModel::build(&p)?);

    match std::env::args().nth(1) {
        Some(stem) if !cfg!(test) => {
            std::fs::write(format!("{stem}.svg"), &svg)?;
            std::fs::write(format!("{stem}.dot"), &dot)?;
            println!("wrote {stem}.svg and {stem}.dot");
        }
        _ => {
            println!("{} bytes of SVG", svg.len());
            print!("{dot}");
        }
    }
    Ok(())
}

fn main() {
    if let Err(err) = run_example() {
        eprintln!("error: {err}");
        std::process::exit(1);
    }
}
