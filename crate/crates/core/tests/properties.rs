use proptest::prelude::*;
use radiogrid::formulas::{rn_formula, rn_lower_bound, rn_upper_bound_trivial, t_plus_formula};
use radiogrid::grid::{manhattan, normalize_orientation};
use radiogrid::labeling::{
    bump_condition_holds, min_span_labeling, ordering_of, span, step_report, tightness_neighbors,
    validate,
};
use radiogrid::oracle::exhaustive_min_span_check;
use radiogrid::{GridGraph, Ordering, Vertex};

fn grid_and_ordering(max: usize) -> impl Strategy<Value = Ordering> {
    (3..=max, 3..=max).prop_flat_map(|(a, b)| {
        let g = GridGraph::new(a, b).unwrap();
        Just(g.vertices().collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(move |seq| Ordering::new(g, seq).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn minimal_labeling_is_valid_and_ordered(s in grid_and_ordering(6)) {
        let f = min_span_labeling(&s);
        prop_assert!(validate(&f).is_empty());
        prop_assert_eq!(ordering_of(&f).unwrap(), s.clone());
        let r = step_report(&s);
        prop_assert!(r.labels.windows(2).all(|w| w[0] < w[1]));
        prop_assert_eq!(r.span(), span(&f));
        let g = s.grid();
        let base = (g.n() as u64 - 1) * (g.diameter() as u64 + 1);
        prop_assert_eq!(r.span() + r.distance_sum() as u64, base + r.bump_total());
    }

    #[test]
    fn bumps_match_tightness(s in grid_and_ordering(5)) {
        let f = min_span_labeling(&s);
        let r = step_report(&s);
        let seq = s.as_slice();
        for i in 0..r.bumps.len() {
            let tight = tightness_neighbors(&f, seq[i + 1]).unwrap().contains(&seq[i]);
            prop_assert_eq!(r.bumps[i] == 0, tight);
        }
    }

    #[test]
    fn bumps_come_from_two_back(s in grid_and_ordering(6)) {
        let g = s.grid();
        let r = step_report(&s);
        let seq = s.as_slice();
        for e in &r.bump_events {
            prop_assert_eq!(e.offset, 2);
        }
        for k in 2..seq.len() {
            let predicted = bump_condition_holds(&g, seq[k - 2], seq[k - 1], seq[k], r.bumps[k - 2]).unwrap();
            prop_assert_eq!(predicted, r.bumps[k - 1] > 0, "step {}", k);
        }
    }

    #[test]
    fn triangle_slack(a in 1usize..8, b in 1usize..8, seed in any::<[usize; 6]>()) {
        let g = GridGraph::new(a, b).unwrap();
        let pick = |i: usize, j: usize| Vertex::new(seed[i] % a + 1, seed[j] % b + 1);
        let (u, v, w) = (pick(0, 1), pick(2, 3), pick(4, 5));
        let r = g.d_rect(u, w, v).unwrap();
        prop_assert_eq!(2 * r + manhattan(u, w), manhattan(u, v) + manhattan(v, w));
        prop_assert_eq!(r == 0, manhattan(u, w) == manhattan(u, v) + manhattan(v, w));
    }

    #[test]
    fn formulas_are_transpose_symmetric(a in 3usize..200, b in 3usize..200) {
        prop_assert_eq!(t_plus_formula(a, b).unwrap(), t_plus_formula(b, a).unwrap());
        prop_assert_eq!(rn_formula(a, b).unwrap(), rn_formula(b, a).unwrap());
        let g = GridGraph::new(a, b).unwrap();
        let rn = rn_formula(a, b).unwrap();
        prop_assert!(rn_lower_bound(&g).unwrap() <= rn && rn <= rn_upper_bound_trivial(&g));
        let (n, t) = normalize_orientation(a, b).unwrap();
        prop_assert_eq!(t, (n.a(), n.b()) != (a, b));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn greedy_is_minimal_on_small_grids(s in grid_and_ordering(3)) {
        prop_assert!(exhaustive_min_span_check(&s).unwrap());
    }
}
