//! Explicit orderings attaining `max sum |dx|`, `t+` and `rn` on grids.
//!
//! Each builder works on the normalized orientation (even side first when
//! parities differ, otherwise `a <= b`) and maps its result back.

use crate::error::{Error, Result};
use crate::grid::{normalize_orientation, GridGraph, ParityCase, Vertex};
use crate::labeling::{min_span_labeling, Labeling, Ordering};

fn v(x: usize, y: usize) -> Vertex {
    Vertex::new(x, y)
}

/// An ordering whose x-displacements sum to `max_dx_formula(a, b)`.
///
/// Columns left of the middle alternate with columns right of it. For even
/// `a` the walk starts at `x = a/2` and ends at `x = a/2 + 1`; for odd `a` it
/// starts and ends on the middle column.
pub fn max_dx_ordering(g: &GridGraph) -> Result<Ordering> {
    let (a, b) = (g.a(), g.b());
    if a < 2 || b < 2 {
        return Err(Error::UnsupportedSize { a, b });
    }
    let h = a / 2;
    // Left half read from the middle outward, right half from the edge
    // inward, so the first and last vertices land next to the middle.
    let left: Vec<Vertex> = (1..=h)
        .rev()
        .flat_map(|x| (1..=b).map(move |y| v(x, y)))
        .collect();
    let right: Vec<Vertex> = (a - h + 1..=a)
        .rev()
        .flat_map(|x| (1..=b).map(move |y| v(x, y)))
        .collect();
    let mut seq = Vec::with_capacity(a * b);
    if a % 2 == 0 {
        for (l, r) in left.iter().zip(&right) {
            seq.extend([*l, *r]);
        }
    } else {
        let c = h + 1;
        seq.push(v(c, 1));
        for (l, r) in left.iter().zip(&right) {
            seq.extend([*l, *r]);
        }
        seq.extend((2..=b).map(|y| v(c, y)));
    }
    Ordering::new(*g, seq)
}

/// Runs `build` on the normalized grid and maps the ordering back to `g`.
fn oriented(g: &GridGraph, build: fn(usize, usize) -> Vec<Vertex>) -> Result<Ordering> {
    let (ng, transposed) = normalize_orientation(g.a(), g.b())?;
    let s = Ordering::new(ng, build(ng.a(), ng.b()))?;
    Ok(if transposed { s.transposed() } else { s })
}

/// An ordering with `sum d(u_i, u_{i+1}) = t+(G)`.
pub fn t_plus_ordering(g: &GridGraph) -> Result<Ordering> {
    oriented(g, |a, b| {
        match GridGraph::new(a, b).unwrap().parity_case() {
            ParityCase::EvenEven => even_even(a, b),
            // The rn ordering turned half a turn: starts at (a/2, m), ends at (a/2+1, m).
            ParityCase::EvenOdd => even_odd(a, b)
                .into_iter()
                .map(|u| v(a + 1 - u.x, b + 1 - u.y))
                .collect(),
            ParityCase::OddOdd => odd_odd_t_plus(a, b),
        }
    })
}

/// An ordering whose minimal labeling has span `rn(G)`.
pub fn rn_ordering(g: &GridGraph) -> Result<Ordering> {
    oriented(g, |a, b| {
        match GridGraph::new(a, b).unwrap().parity_case() {
            ParityCase::EvenEven => even_even(a, b),
            ParityCase::EvenOdd => even_odd(a, b),
            ParityCase::OddOdd if a == 3 => odd_odd_three(b),
            ParityCase::OddOdd => odd_odd(a, b),
        }
    })
}

/// A radio labeling of span `rn(G)` with smallest label 0.
pub fn optimal_labeling(g: &GridGraph) -> Result<Labeling> {
    Ok(min_span_labeling(&rn_ordering(g)?))
}

/// a even, b odd. Zero bumps.
///
/// Part one alternates the lower-left block with the upper-right block,
/// row by row. Part two threads the middle row, alternating halves. Part
/// three is part one mirrored left to right and run backwards.
fn even_odd(a: usize, b: usize) -> Vec<Vertex> {
    let h = a / 2;
    let m = b.div_ceil(2);
    let mut s = vec![v(h + 1, m)];
    for y in 1..m {
        for x in 1..=h {
            s.extend([v(x, y), v(h + x, m + y)]);
        }
    }
    let part_one = s.clone();
    s.push(v(1, m));
    for p in 1..h {
        s.push(v(h + p + 1, m));
        if p + 1 < h {
            s.push(v(p + 1, m));
        }
    }
    s.extend(part_one.iter().rev().map(|u| v(a + 1 - u.x, u.y)));
    s
}

/// Cells of an `h x k` block, `skip` removed, sweeping anti-diagonals from the
/// far corner inward and each diagonal by increasing `i`.
fn diagonals_down(h: usize, k: usize, skip: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let mut cells: Vec<(usize, usize)> = (1..=h)
        .flat_map(|i| (1..=k).map(move |j| (i, j)))
        .filter(|c| !skip.contains(c))
        .collect();
    cells.sort_by_key(|&(i, j)| (std::cmp::Reverse(i + j), i));
    cells
}

/// Both even. Exactly two unit bumps, at steps 2 and n-2.
///
/// Upper-right and lower-left quadrants alternate first, then lower-right
/// and upper-left. Within each phase the partner cells share local
/// coordinates and are visited by anti-diagonals.
fn even_even(a: usize, b: usize) -> Vec<Vertex> {
    let (h, k) = (a / 2, b / 2);
    let q1 = |i: usize, j: usize| v(h + i, k + j);
    let q3 = |i: usize, j: usize| v(i, j);
    let q4 = |i: usize, j: usize| v(h + i, j);
    let q2 = |i: usize, j: usize| v(i, k + j);
    let mut s = vec![q1(1, 1), q3(1, 1)];
    let first = std::iter::once((h, k)).chain(diagonals_down(h, k, &[(1, 1), (h, k)]));
    for (i, j) in first {
        s.extend([q1(i, j), q3(i, j)]);
    }
    let second = std::iter::once((h, 1))
        .chain(diagonals_down(h, k, &[(h, 1), (h, k), (1, 1)]))
        .chain(std::iter::once((1, 1)));
    for (i, j) in second {
        s.extend([q4(i, k + 1 - j), q2(i, k + 1 - j)]);
    }
    s.extend([q4(h, 1), q2(h, 1)]);
    s
}

/// Offsets from the center of an odd-by-odd grid.
struct Centered {
    cx: i64,
    cy: i64,
    out: Vec<Vertex>,
}

impl Centered {
    fn new(a: usize, b: usize) -> Self {
        let (cx, cy) = ((a as i64 + 1) / 2, (b as i64 + 1) / 2);
        Centered {
            cx,
            cy,
            out: Vec::with_capacity(a * b),
        }
    }

    fn push(&mut self, (p, q): (i64, i64)) {
        self.out
            .push(v((self.cx + p) as usize, (self.cy + q) as usize));
    }

    /// Low member first.
    fn low_first(&mut self, (lo, hi): ((i64, i64), (i64, i64))) {
        self.push(lo);
        self.push(hi);
    }

    fn high_first(&mut self, (lo, hi): ((i64, i64), (i64, i64))) {
        self.push(hi);
        self.push(lo);
    }
}

/// The two families of complementary pairs used by the odd-odd orderings.
/// A pair is `(low, high)`; low and high lie on opposite sides of both
/// medians (or on a median), and consecutive pairs of one family never put
/// two consecutive vertices on the same side of a median.
fn pair_families(al: i64, be: i64) -> (impl Fn(i64, i64) -> PairT, impl Fn(i64, i64) -> PairT) {
    let g1 = move |p: i64, q: i64| ((-p, -q), (al - p, be + 1 - q));
    let g2 = move |p: i64, q: i64| ((p, -q), (-(al + 1 - p), be - q));
    (g1, g2)
}

type PairT = ((i64, i64), (i64, i64));

/// Both odd, `5 <= a <= b`. Zero bumps; ends next to the center.
fn odd_odd(a: usize, b: usize) -> Vec<Vertex> {
    let (al, be) = (((a - 1) / 2) as i64, ((b - 1) / 2) as i64);
    let (g1, g2) = pair_families(al, be);
    let mut c = Centered::new(a, b);
    c.push((0, 0));

    let run1 = std::iter::once((0, 1))
        .chain((1..al).map(|p| (p, 1)))
        .chain((2..=be).map(|q| (0, q)));
    for (p, q) in run1 {
        c.high_first(g1(p, q));
    }

    let reserved = [(1, 0), (al, 0), (al, be)];
    let mut rest: Vec<(i64, i64)> = (1..=al)
        .flat_map(|p| (0..=be).map(move |q| (p, q)))
        .filter(|x| !reserved.contains(x))
        .collect();
    rest.sort_by_key(|&(p, q)| (p + q, -p));
    for (p, q) in std::iter::once((1, 0))
        .chain(rest)
        .chain(std::iter::once((al, 0)))
    {
        c.high_first(g2(p, q));
    }

    let mut run3: Vec<(i64, i64)> = (1..=al)
        .flat_map(|p| (2..=be).map(move |q| (p, q)))
        .collect();
    run3.sort_by_key(|&(p, q)| (-(p + q), -p));
    for (p, q) in run3.into_iter().chain(std::iter::once((al, 1))) {
        c.low_first(g1(p, q));
    }
    c.low_first(g2(al, be));
    c.out
}

/// Both odd, `a = 3`. Zero bumps.
fn odd_odd_three(b: usize) -> Vec<Vertex> {
    let be = ((b - 1) / 2) as i64;
    let (g1, g2) = pair_families(1, be);
    let mut c = Centered::new(3, b);
    c.push((0, 0));
    c.high_first(g1(0, 1));
    c.high_first(g2(1, 0));
    c.low_first(g1(1, be));
    for k in 1..be {
        c.low_first(g2(1, k));
        c.low_first(g1(0, k + 1));
        c.low_first(g1(1, k));
    }
    c.low_first(g2(1, be));
    c.out
}

/// Both odd: a t+ ordering from the center to the vertex just below it.
///
/// With `r = |p| + |q|` measured from the center, an ordering whose
/// consecutive vertices never share a strict side of either median has
/// `sum d = 2 sum r - r(u_1) - r(u_n)`, and that is `t+` for these endpoints.
fn odd_odd_t_plus(a: usize, b: usize) -> Vec<Vertex> {
    let (al, be) = (((a - 1) / 2) as i64, ((b - 1) / 2) as i64);
    let mut c = Centered::new(a, b);
    c.push((0, 0));
    for p in 1..=al {
        for q in 1..=be {
            c.push((p, q));
            c.push((-p, -q));
        }
    }
    c.push((1, 0));
    for p in 1..=al {
        for q in 1..=be {
            c.push((-p, q));
            c.push((p, -q));
        }
    }
    for p in 1..=al {
        c.push((-p, 0));
        if p < al {
            c.push((p + 1, 0));
        }
    }
    for q in (1..=be).rev() {
        c.push((0, q));
        c.push((0, -q));
    }
    c.out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formulas::{max_dx_formula, rn_formula, t_plus_formula};
    use crate::labeling::{span, step_report, validate};

    fn grid(a: usize, b: usize) -> GridGraph {
        GridGraph::new(a, b).unwrap()
    }

    fn dx_sum(s: &Ordering) -> usize {
        s.as_slice()
            .windows(2)
            .map(|w| w[0].x.abs_diff(w[1].x))
            .sum()
    }

    #[test]
    fn max_dx_examples() {
        assert_eq!(dx_sum(&max_dx_ordering(&grid(6, 4)).unwrap()), 71);
        assert_eq!(dx_sum(&max_dx_ordering(&grid(5, 4)).unwrap()), 48);
        for a in 2..=12 {
            for b in 2..=12 {
                let s = max_dx_ordering(&grid(a, b)).unwrap();
                assert_eq!(dx_sum(&s) as u64, max_dx_formula(a, b), "{a}x{b}");
                let (first, last) = (s.as_slice()[0], *s.as_slice().last().unwrap());
                if a % 2 == 0 {
                    assert_eq!((first.x, last.x), (a / 2, a / 2 + 1));
                } else {
                    assert_eq!((first.x, last.x), (a.div_ceil(2), a.div_ceil(2)));
                }
            }
        }
    }

    #[test]
    fn t_plus_endpoints() {
        let ends = |a, b| {
            let s = t_plus_ordering(&grid(a, b)).unwrap();
            (s.as_slice()[0], *s.as_slice().last().unwrap())
        };
        assert_eq!(ends(6, 6), (v(4, 4), v(3, 4)));
        assert_eq!(ends(6, 5), (v(3, 3), v(4, 3)));
        assert_eq!(ends(5, 7), (v(3, 4), v(3, 3)));
        assert_eq!(ends(3, 3), (v(2, 2), v(2, 1)));
    }

    #[test]
    fn small_certificates() {
        for (a, b) in [
            (3, 3),
            (4, 3),
            (3, 4),
            (4, 4),
            (6, 5),
            (6, 6),
            (5, 7),
            (7, 5),
            (3, 9),
            (9, 3),
        ] {
            let g = grid(a, b);
            let t = t_plus_ordering(&g).unwrap();
            assert_eq!(
                t.distance_sum() as u64,
                t_plus_formula(a, b).unwrap(),
                "t+ {a}x{b}"
            );
            let f = optimal_labeling(&g).unwrap();
            assert!(validate(&f).is_empty());
            assert_eq!(span(&f), rn_formula(a, b).unwrap(), "rn {a}x{b}");
        }
    }

    #[test]
    fn even_even_bumps() {
        let g = grid(6, 6);
        let r = step_report(&rn_ordering(&g).unwrap());
        let events: Vec<_> = r
            .bump_events
            .iter()
            .map(|e| (e.step, e.magnitude))
            .collect();
        assert_eq!(events, vec![(2, 1), (34, 1)]);
        assert_eq!(r.span(), 174);
    }

    #[test]
    fn ladders_fail() {
        assert!(rn_ordering(&grid(2, 5)).is_err());
        assert!(t_plus_ordering(&grid(7, 2)).is_err());
        assert!(max_dx_ordering(&grid(1, 5)).is_err());
    }
}
