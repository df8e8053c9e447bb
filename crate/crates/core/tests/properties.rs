mod common;

use kesq::graph::Girth;
use kesq::invariants::{self, is_dominating, is_maximal_stable};
use kesq::io::{decode_graph6, encode_graph6, parse_edge_list, write_edge_list};
use kesq::recognizers;
use kesq::{Graph, SolverBudget};
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let all = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            Graph::new(n, all.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e).collect::<Vec<_>>()).unwrap()
        })
    })
}

fn budget() -> SolverBudget {
    SolverBudget::default()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn distances_match_floyd_warshall(g in graph(11)) {
        let d = g.distances();
        let fw = common::floyd_warshall(&g);
        for (u, row) in fw.iter().enumerate() {
            for (v, &expected) in row.iter().enumerate() {
                prop_assert_eq!(d.get(u, v), expected);
            }
        }
    }

    #[test]
    fn square_matches_distance_two(g in graph(11)) {
        let sq = g.square();
        prop_assert_eq!(&sq, &common::square(&g));
        // a square keeps every edge and every component
        prop_assert!(g.edges().iter().all(|&(u, v)| sq.has_edge(u, v)));
        prop_assert_eq!(g.component_labels(), sq.component_labels());
    }

    #[test]
    fn inequality_chain(g in graph(10)) {
        let b = budget();
        let a = invariants::alpha(&g, &b).unwrap().0;
        let a2 = invariants::alpha(&g.square(), &b).unwrap().0;
        let t = invariants::theta(&g, &b).unwrap().0;
        let t2 = invariants::theta(&g.square(), &b).unwrap().0;
        let gamma = invariants::gamma(&g, &b).unwrap().0;
        let i = invariants::ind_dom(&g, &b).unwrap().0;
        prop_assert!(a2 <= gamma && gamma <= i && i <= a && a <= t);
        prop_assert!(a2 <= t2 && t2 <= t);
        prop_assert!(invariants::mu(&g.square()).0 >= invariants::mu(&g).0);
    }

    #[test]
    fn witnesses_certify(g in graph(12)) {
        let b = budget();
        let (a, s) = invariants::alpha(&g, &b).unwrap();
        prop_assert!(g.is_stable(&s) && s.len() == a);
        let (d, ds) = invariants::gamma(&g, &b).unwrap();
        prop_assert!(is_dominating(&g, &ds) && ds.len() == d);
        let (i, is) = invariants::ind_dom(&g, &b).unwrap();
        prop_assert!(is_maximal_stable(&g, &is) && is.len() == i);
        let (m, matching) = invariants::mu(&g);
        prop_assert!(matching.is_valid_in(&g) && matching.len() == m);
        let report = kesq::InvariantReport::compute(&g, &b).unwrap();
        prop_assert_eq!(report.certify(&g), Ok(()));
    }

    #[test]
    fn core_is_in_every_maximum_stable_set(g in graph(9)) {
        let b = budget();
        let core = invariants::core_set(&g, &b).unwrap();
        let sets = common::maximum_stable_sets(&g);
        let expected = (0..g.order()).filter(|v| sets.iter().all(|s| s.contains(v))).collect::<Vec<_>>();
        prop_assert_eq!(core.to_vec(), expected);
        prop_assert_eq!(invariants::omega_family(&g, &b).unwrap().len(), sets.len());
    }

    #[test]
    fn codecs_round_trip(g in graph(20)) {
        let code = encode_graph6(&g).unwrap();
        prop_assert_eq!(decode_graph6(&code).unwrap(), g.clone());
        prop_assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn pendants_only_meet_in_k2_components(g in graph(12)) {
        let pendants = g.pendant_vertices();
        for &(u, v) in g.edges() {
            if pendants.contains(u) && pendants.contains(v) {
                prop_assert_eq!(g.degree(u) + g.degree(v), 2);
            }
        }
        let kept = recognizers::pendant_stable_set(&g);
        prop_assert!(g.is_stable(&kept) && kept.is_subset(&pendants));
    }

    #[test]
    fn forests_are_acyclic(g in graph(12)) {
        let components = g.components().len();
        prop_assert_eq!(g.girth() == Girth::Acyclic, g.size() + components == g.order());
    }

    #[test]
    fn square_stability_is_componentwise(g in graph(10), h in graph(6)) {
        let b = budget();
        let u = g.disjoint_union(&h);
        let both = recognizers::is_square_stable(&g, &b).unwrap() && recognizers::is_square_stable(&h, &b).unwrap();
        prop_assert_eq!(recognizers::is_square_stable(&u, &b).unwrap(), both);
    }
}
