//! Optimal radio labelings of grid graphs.
//!
//! A radio labeling of a graph with diameter D assigns nonnegative integers
//! to vertices so that `|f(u) - f(v)| >= D + 1 - d(u,v)` for every pair; the
//! radio number `rn(G)` is the least possible span. For the grid G_{a,b}
//! with `a, b >= 3` this crate gives
//!
//! * closed forms for `rn` and for the upper traceable number `t+`
//!   ([`formulas`]),
//! * explicit orderings whose greedy labelings attain them ([`construct`]),
//! * the labeling machinery to check any of it ([`labeling`]), and
//! * exact exhaustive searches for small grids ([`oracle`]).
//!
//! ```
//! use radiogrid::{construct::optimal_labeling, formulas::rn_formula, grid::GridGraph, labeling};
//!
//! let g = GridGraph::new(6, 5)?;
//! let f = optimal_labeling(&g)?;
//! assert!(labeling::validate(&f).is_empty());
//! assert_eq!(labeling::span(&f), rn_formula(6, 5)?);
//! # Ok::<(), radiogrid::Error>(())
//! ```

pub mod construct;
pub mod error;
pub mod formulas;
pub mod grid;
pub mod io;
pub mod labeling;
pub mod oracle;

pub use error::{Error, Result};
pub use grid::{GridGraph, ParityCase, Region, Vertex};
pub use labeling::{Labeling, Ordering, StepReport};
