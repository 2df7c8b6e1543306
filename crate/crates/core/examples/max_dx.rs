//! The x-coordinate part of t+: how far an ordering can travel sideways.

use radiogrid::construct::max_dx_ordering;
use radiogrid::formulas::max_dx_formula;
use radiogrid::oracle::{oracle_max_dx, OracleLimits};
use radiogrid::GridGraph;

fn main() -> radiogrid::Result<()> {
    for (a, b) in [(2, 3), (3, 3), (4, 3), (5, 4), (6, 3), (4, 4)] {
        let g = GridGraph::new(a, b)?;
        let s = max_dx_ordering(&g)?;
        let dx: usize = s
            .as_slice()
            .windows(2)
            .map(|w| w[0].x.abs_diff(w[1].x))
            .sum();
        let exact = oracle_max_dx(&g, OracleLimits::default())?.value;
        println!(
            "{g}: ordering {dx}, formula {}, exact {exact}",
            max_dx_formula(a, b)
        );
    }
    Ok(())
}
