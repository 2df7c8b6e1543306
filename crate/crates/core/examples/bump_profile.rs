//! Where the optimal orderings lose to t+. Only the even-even case does,
//! by one unit at each end.

use radiogrid::construct::rn_ordering;
use radiogrid::formulas::t_plus_formula;
use radiogrid::labeling::step_report;
use radiogrid::GridGraph;

fn main() -> radiogrid::Result<()> {
    for (a, b) in [(6, 6), (8, 4), (6, 5), (5, 7), (3, 9)] {
        let g = GridGraph::new(a, b)?;
        let s = rn_ordering(&g)?;
        let r = step_report(&s);
        println!(
            "{g}: sum d = {} (t+ = {}), span = {}",
            r.distance_sum(),
            t_plus_formula(a, b)?,
            r.span()
        );
        for e in &r.bump_events {
            let u = s.as_slice();
            println!(
                "  step {:>3}: {} -> {} bumped by {}, pinned by {} ({} back)",
                e.step,
                u[e.step - 1],
                u[e.step],
                e.magnitude,
                u[e.step - e.offset],
                e.offset
            );
        }
    }
    Ok(())
}
