use proptest::prelude::*;
use quasidom::domination::{domination_chain, domination_number, is_k_quasiperfect, min_quasiperfect, IlpModel};
use quasidom::enumerate::{enumerate, GraphFilter};
use quasidom::families::FamilySpec;
use quasidom::graph::{canonical_label, graph6_decode, graph6_encode, has_induced_p4, is_claw_free, is_cograph};
use quasidom::{Exec, Graph, VertexSet};

fn graph_from(n: usize, bits: &[bool]) -> Graph {
    let edges: Vec<(usize, usize)> = (1..n)
        .flat_map(|v| (0..v).map(move |u| (u, v)))
        .zip(bits)
        .filter(|(_, &b)| b)
        .map(|(e, _)| e)
        .collect();
    Graph::new(n, &edges).unwrap()
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |b| graph_from(n, &b)))
}

/// A random spanning tree plus random extra edges.
fn arb_connected(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        (
            prop::collection::vec(any::<prop::sample::Index>(), n - 1),
            prop::collection::vec(prop::bool::weighted(0.3), n * (n - 1) / 2),
        )
            .prop_map(move |(parents, extra)| {
                let base = graph_from(n, &extra);
                let mut adj = base.adjacency().to_vec();
                for (i, p) in parents.iter().enumerate() {
                    let v = i + 1;
                    let u = p.index(v);
                    adj[u] |= 1 << v;
                    adj[v] |= 1 << u;
                }
                Graph::from_adjacency(adj).unwrap()
            })
    })
}

fn naive_min(g: &Graph, k: usize) -> usize {
    (1u64..1 << g.order())
        .filter(|&s| is_k_quasiperfect(g, &VertexSet::from_mask(g.order(), s).unwrap(), k))
        .map(|s| s.count_ones() as usize)
        .min()
        .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn join_structure(a in arb_graph(6), b in arb_graph(6)) {
        let j = a.join(&b).unwrap();
        let (n1, n2) = (a.order(), b.order());
        prop_assert_eq!(j.order(), n1 + n2);
        for u in 0..n1 {
            for v in 0..n2 {
                prop_assert!(j.has_edge(u, n1 + v));
            }
        }
        let first = VertexSet::from_vertices(n1 + n2, 0..n1).unwrap();
        let second = first.complement();
        prop_assert_eq!(j.induced_subgraph(&first).unwrap(), a);
        prop_assert_eq!(j.induced_subgraph(&second).unwrap(), b);
    }

    #[test]
    fn canonical_label_ignores_vertex_names(g in arb_graph(9), perm in Just((0..9).collect::<Vec<usize>>()).prop_shuffle()) {
        let p: Vec<usize> = perm.into_iter().filter(|&v| v < g.order()).collect();
        prop_assert_eq!(canonical_label(&g.relabel(&p)), canonical_label(&g));
    }

    #[test]
    fn graph6_round_trip(g in arb_graph(12)) {
        prop_assert_eq!(graph6_decode(&graph6_encode(&g)).unwrap(), g);
    }

    #[test]
    fn cograph_iff_no_induced_p4(g in arb_graph(9)) {
        prop_assert_eq!(is_cograph(&g), !has_induced_p4(&g));
    }

    #[test]
    fn solver_matches_naive_search(g in arb_connected(8), k in 1usize..=4) {
        let k = k.min(g.max_degree().max(1));
        let sol = min_quasiperfect(&g, k).unwrap();
        prop_assert_eq!(sol.value, naive_min(&g, k));
        prop_assert_eq!(sol.witness.len(), sol.value);
        prop_assert!(is_k_quasiperfect(&g, &sol.witness, k));
    }

    #[test]
    fn chain_is_monotone_and_feasible(g in arb_connected(12)) {
        let c = domination_chain(&g).unwrap();
        prop_assert!(c.is_monotone(), "{}", c);
        prop_assert_eq!(c.gamma, domination_number(&g).unwrap().value);
        for (i, w) in c.witnesses.iter().enumerate() {
            let k = i + 1;
            prop_assert!(IlpModel::new(&g, k).unwrap().is_feasible_set(w));
        }
        if c.gamma <= c.max_degree {
            prop_assert!((c.gamma..=c.max_degree).all(|k| c.gamma_1k(k) == c.gamma));
        }
    }

    #[test]
    fn family_specs_round_trip(h in 2usize..6, extra in 0usize..4, slack in 0usize..5) {
        let k = h + extra;
        let n = h + k + slack;
        for spec in [FamilySpec::ClawFreeA { h, k, n }, FamilySpec::PendantJoin { n: k + 2 + slack, k: k.max(4) }] {
            let parsed: FamilySpec = spec.to_string().parse().unwrap();
            prop_assert_eq!(&parsed, &spec);
        }
        let g = FamilySpec::ClawFreeA { h, k, n }.build().unwrap();
        prop_assert!(is_claw_free(&g));
        let c = domination_chain(&g).unwrap();
        prop_assert_eq!((c.gamma, c.gamma_11()), (h, k));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn filters_are_sound(n in 3usize..=7, d in 2usize..=6, leaves in 0usize..=3, claw in any::<bool>(), gamma in 1usize..=3) {
        let mut f = GraphFilter::new(n).with_max_degree(d.min(n - 1)).with_max_leaves(leaves).with_gamma(gamma);
        if claw {
            f = f.claw_free();
        }
        let report = enumerate(&f, Exec::Sequential, &mut |_, _| {}).unwrap();
        let mut labels: Vec<String> = report.graphs.iter().map(canonical_label).collect();
        for g in &report.graphs {
            prop_assert!(g.is_connected());
            prop_assert_eq!(g.max_degree(), d.min(n - 1));
            prop_assert!(g.leaf_count() <= leaves);
            prop_assert_eq!(domination_number(g).unwrap().value, gamma);
            prop_assert!(!claw || is_claw_free(g));
        }
        labels.sort();
        labels.dedup();
        prop_assert_eq!(labels.len(), report.count);
    }
}
