//! Build an optimal radio labeling and print it as a table, (1,1) at the
//! bottom left.
//!
//!     cargo run --example optimal_labeling -- 6 5

use radiogrid::construct::optimal_labeling;
use radiogrid::formulas::rn_formula;
use radiogrid::io::render_ascii;
use radiogrid::labeling::{span, validate};
use radiogrid::GridGraph;

fn main() -> radiogrid::Result<()> {
    let args: Vec<usize> = std::env::args()
        .skip(1)
        .filter_map(|s| s.parse().ok())
        .collect();
    let (a, b) = match args[..] {
        [a, b, ..] => (a, b),
        _ => (6, 5),
    };
    let g = GridGraph::supported(a, b)?;
    let f = optimal_labeling(&g)?;
    print!("{}", render_ascii(&f));
    println!("violations: {}", validate(&f).len());
    println!("span {} / rn {}", span(&f), rn_formula(a, b)?);
    Ok(())
}
