//! rn(G_{n,n}) against the older interval bounds for square grids.
//! Odd n lands exactly on the lower end.

use radiogrid::formulas::{rn_formula, square_grid_bounds};

fn main() -> radiogrid::Result<()> {
    for n in 3..=15 {
        let (lo, hi) = square_grid_bounds(n);
        let rn = rn_formula(n, n)?;
        println!(
            "n={n:>2}  {lo:>5} <= {rn:>5} <= {hi:>5}  (+{} over the lower end)",
            rn - lo
        );
    }
    Ok(())
}
