// Zero numbers of a 12-label meander segment, knowing only the relative axis
// order of its crossings and the Morse index of its first label.

use sturm_meander::{window_morse, window_z, z_matrix, MeanderWindow, SturmPermutation};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let order = [12, 11, 4, 3, 2, 5, 10, 9, 6, 7, 8, 1];
    let win = MeanderWindow::from_axis_order(&order, 2)?;
    println!("morse: {:?}", window_morse(&win)?);
    let local = window_z(&win)?;
    print!("{local}");

    // any Sturm completion has the same block
    let full: SturmPermutation = "1 14 13 6 5 4 7 12 11 8 9 10 3 2 15".parse()?;
    assert_eq!(z_matrix(&full)?.block(3, 12), local);
    println!("block over labels 3..14 of the completion matches");
    Ok(())
}

fn main() {
    if let Err(err) = run_example() {
        eprintln!("error: {err}");
        std::process::exit(1);
    }
}
