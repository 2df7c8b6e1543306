//! Graphviz output. Positions are pinned, so render with
//!
//!     cargo run --example dot_export | neato -n -Tsvg > grid.svg

use radiogrid::construct::optimal_labeling;
use radiogrid::io::render_dot;
use radiogrid::GridGraph;

fn main() -> radiogrid::Result<()> {
    print!("{}", render_dot(&optimal_labeling(&GridGraph::new(5, 5)?)?));
    Ok(())
}
