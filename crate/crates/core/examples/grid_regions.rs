//! Quadrant and median map of a grid, top row first.

use radiogrid::{GridGraph, Region, Vertex};

fn main() -> radiogrid::Result<()> {
    for (a, b) in [(8, 6), (7, 5)] {
        let g = GridGraph::new(a, b)?;
        println!("{g}");
        for y in (1..=b).rev() {
            let row: String = (1..=a)
                .map(|x| match g.classify_region(Vertex::new(x, y)).unwrap() {
                    Region::QuadrantI => '1',
                    Region::QuadrantII => '2',
                    Region::QuadrantIII => '3',
                    Region::QuadrantIV => '4',
                    Region::XMedian => '-',
                    Region::YMedian => '|',
                    Region::MedianIntersection => '+',
                })
                .collect();
            println!("  {row}");
        }
    }
    Ok(())
}
