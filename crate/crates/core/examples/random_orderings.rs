//! Minimal labelings of random orderings: every bump is pinned by the vertex
//! two steps back, exactly when the bounding-rectangle test says so.

use radiogrid::labeling::{bump_condition_holds, step_report};
use radiogrid::{GridGraph, Ordering};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;

fn main() -> radiogrid::Result<()> {
    let mut rng = StdRng::seed_from_u64(1);
    for (a, b) in [(3, 3), (4, 4), (5, 5), (4, 7)] {
        let g = GridGraph::new(a, b)?;
        let mut seq: Vec<_> = g.vertices().collect();
        let (mut bumps, mut offsets, mut agree, mut steps) = (0, [0usize; 4], 0, 0);
        for _ in 0..5000 {
            seq.shuffle(&mut rng);
            let r = step_report(&Ordering::new(g, seq.clone())?);
            bumps += r.bump_events.len();
            for e in &r.bump_events {
                offsets[e.offset.min(3)] += 1;
            }
            for k in 2..seq.len() {
                let predicted =
                    bump_condition_holds(&g, seq[k - 2], seq[k - 1], seq[k], r.bumps[k - 2])?;
                agree += usize::from(predicted == (r.bumps[k - 1] > 0));
                steps += 1;
            }
        }
        println!(
            "{g}: {bumps} bumps, offset 2: {}, offset >= 3: {}; condition agrees on {agree}/{steps} steps",
            offsets[2], offsets[3]
        );
    }
    Ok(())
}
