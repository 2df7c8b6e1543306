//! Exact searches against the closed forms on every supported grid with at
//! most 20 vertices. Takes a second or two in release mode.
//!
//!     cargo run --release --example oracle_agreement

use radiogrid::formulas::{rn_formula, t_plus_formula};
use radiogrid::oracle::{oracle_rn, oracle_t_plus, OracleLimits};
use radiogrid::GridGraph;

fn main() -> radiogrid::Result<()> {
    let lim = OracleLimits::with_max_n(20);
    for (a, b) in [(3, 3), (3, 4), (3, 5), (3, 6), (4, 4), (4, 5)] {
        let g = GridGraph::new(a, b)?;
        let t = oracle_t_plus(&g, lim)?;
        let r = oracle_rn(&g, lim)?;
        println!(
            "{g}: t+ {} vs {}   rn {} vs {}   ({} nodes, {:?})",
            t.value,
            t_plus_formula(a, b)?,
            r.value,
            rn_formula(a, b)?,
            r.nodes_explored,
            r.elapsed
        );
    }
    Ok(())
}
