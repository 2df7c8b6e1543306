//! Closed-form radio numbers next to the bounds they sit between.
//!
//!     cargo run --example radio_number -- 12

use radiogrid::formulas::{rn_formula, rn_lower_bound, rn_upper_bound_trivial, t_plus_formula};
use radiogrid::GridGraph;

fn main() -> radiogrid::Result<()> {
    let max: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(8);
    println!(
        "{:>3} {:>3} {:>9} {:>7} {:>7} {:>6} {:>6}",
        "a", "b", "case", "t+", "rn", "rn-lo", "hi-rn"
    );
    for a in 3..=max {
        for b in a..=max {
            let g = GridGraph::new(a, b)?;
            let rn = rn_formula(a, b)?;
            let lo = rn_lower_bound(&g)?;
            let hi = rn_upper_bound_trivial(&g);
            println!(
                "{a:>3} {b:>3} {:>9} {:>7} {rn:>7} {:>6} {:>6}",
                radiogrid::grid::normalize_orientation(a, b)?
                    .0
                    .parity_case()
                    .to_string(),
                t_plus_formula(a, b)?,
                rn - lo,
                hi - rn
            );
        }
    }
    Ok(())
}
