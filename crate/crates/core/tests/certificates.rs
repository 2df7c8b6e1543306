use radiogrid::construct::{max_dx_ordering, optimal_labeling, rn_ordering, t_plus_ordering};
use radiogrid::formulas::{max_dx_formula, rn_formula, t_plus_formula};
use radiogrid::labeling::{ordering_of, span, step_report, validate};
use radiogrid::{GridGraph, ParityCase, Vertex};

fn sizes() -> impl Iterator<Item = (usize, usize)> {
    (3..=20).flat_map(|a| (3..=20).map(move |b| (a, b)))
}

#[test]
fn rn_labelings_are_optimal_and_valid() {
    for (a, b) in sizes() {
        let g = GridGraph::new(a, b).unwrap();
        let f = optimal_labeling(&g).unwrap();
        assert_eq!(f.grid(), g, "orientation is preserved");
        assert!(validate(&f).is_empty(), "{g}");
        assert_eq!(span(&f), rn_formula(a, b).unwrap(), "{g}");
        assert_eq!(f.as_slice().iter().min(), Some(&0));
        let s = ordering_of(&f).unwrap();
        let labels: Vec<u64> = s.as_slice().iter().map(|&v| f.get(v).unwrap()).collect();
        assert!(labels.windows(2).all(|w| w[0] < w[1]));
    }
}

#[test]
fn t_plus_orderings_attain_the_formula() {
    for (a, b) in sizes() {
        let g = GridGraph::new(a, b).unwrap();
        let s = t_plus_ordering(&g).unwrap();
        assert_eq!(
            s.distance_sum() as u64,
            t_plus_formula(a, b).unwrap(),
            "{g}"
        );
    }
}

#[test]
fn t_plus_orderings_start_and_end_where_stated() {
    for a in 3..=14 {
        for b in 3..=14 {
            let (g, transposed) = radiogrid::grid::normalize_orientation(a, b).unwrap();
            let s = t_plus_ordering(&g).unwrap();
            assert!(!transposed || a != b);
            let (first, last) = (s.as_slice()[0], *s.as_slice().last().unwrap());
            let (a, b) = (g.a(), g.b());
            let want = match g.parity_case() {
                ParityCase::EvenEven => (
                    Vertex::new(a / 2 + 1, b / 2 + 1),
                    Vertex::new(a / 2, b / 2 + 1),
                ),
                ParityCase::EvenOdd => (
                    Vertex::new(a / 2, b.div_ceil(2)),
                    Vertex::new(a / 2 + 1, b.div_ceil(2)),
                ),
                ParityCase::OddOdd => (
                    Vertex::new(a.div_ceil(2), b.div_ceil(2)),
                    Vertex::new(a.div_ceil(2), (b - 1) / 2),
                ),
            };
            assert_eq!((first, last), want, "{g}");
        }
    }
}

#[test]
fn bump_profiles() {
    for (a, b) in sizes() {
        let g = GridGraph::new(a, b).unwrap();
        let r = step_report(&rn_ordering(&g).unwrap());
        let events: Vec<(usize, u64)> = r
            .bump_events
            .iter()
            .map(|e| (e.step, e.magnitude))
            .collect();
        if a % 2 == 0 && b % 2 == 0 {
            assert_eq!(events, vec![(2, 1), (g.n() - 2, 1)], "{g}");
            assert!(r.bump_events.iter().all(|e| e.offset == 2));
        } else {
            assert!(events.is_empty(), "{g}: {events:?}");
        }
        assert_eq!(
            r.distance_sum() as u64,
            t_plus_formula(a, b).unwrap(),
            "{g}"
        );
    }
}

#[test]
fn max_dx_orderings_attain_the_formula() {
    for a in 2..=20 {
        for b in 2..=20 {
            let g = GridGraph::new(a, b).unwrap();
            let s = max_dx_ordering(&g).unwrap();
            let dx: usize = s
                .as_slice()
                .windows(2)
                .map(|w| w[0].x.abs_diff(w[1].x))
                .sum();
            assert_eq!(dx as u64, max_dx_formula(a, b), "{g}");
        }
    }
}

#[test]
fn even_odd_rectangle_slack() {
    // Triples inside the alternating blocks have d_rect exactly (D+1)/2,
    // triples inside the middle-row thread stay within a/2 + 1, and the ones
    // straddling two parts never exceed (D+1)/2.
    for a in (4..=20).step_by(2) {
        for b in (3..=19).step_by(2) {
            let g = GridGraph::new(a, b).unwrap();
            let r = step_report(&rn_ordering(&g).unwrap());
            let (h, m) = (a / 2, b.div_ceil(2));
            let p1 = 1 + 2 * h * (m - 1);
            let p2 = p1 + 2 * h - 2;
            let half = g.diameter().div_ceil(2);
            let part = |i: usize| (i >= p1) as u8 + (i >= p2) as u8;
            for (i, rect) in r.d_rect.iter().enumerate() {
                // d_rect[i] is the triple centered on 0-based position i.
                let Some(rect) = *rect else { continue };
                match (part(i - 1), part(i + 1)) {
                    (0, 0) | (2, 2) => assert_eq!(rect, half, "{g} at {i}"),
                    (1, 1) => assert!(rect <= h + 1, "{g} at {i}: {rect}"),
                    _ => assert!(rect <= half, "{g} at {i}: {rect}"),
                }
            }
        }
    }
}

#[test]
fn constructions_are_deterministic() {
    let g = GridGraph::new(9, 7).unwrap();
    assert_eq!(rn_ordering(&g).unwrap(), rn_ordering(&g).unwrap());
    assert_eq!(t_plus_ordering(&g).unwrap(), t_plus_ordering(&g).unwrap());
}

#[test]
fn bump_condition_on_constructions() {
    use radiogrid::labeling::bump_condition_holds;
    // The even-even opening triple has d_rect = (D+2)/2 and forces the first bump.
    let g = GridGraph::new(6, 6).unwrap();
    let s = rn_ordering(&g).unwrap();
    let u = s.as_slice();
    assert_eq!(g.d_rect(u[0], u[2], u[1]).unwrap(), (g.diameter() + 2) / 2);
    assert!(bump_condition_holds(&g, u[0], u[1], u[2], 0).unwrap());

    // No triple of the even-odd ordering fires.
    let g = GridGraph::new(6, 5).unwrap();
    let s = rn_ordering(&g).unwrap();
    for w in s.as_slice().windows(3) {
        assert!(!bump_condition_holds(&g, w[0], w[1], w[2], 0).unwrap());
    }
}
