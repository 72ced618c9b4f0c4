use oddsub_core::certify::{
    brute_force_find_subdivision, verify_immersion, verify_subdivision, PatternKind,
};
use oddsub_core::chromatic::chromatic_number_exact;
use oddsub_core::graph::Graph;
use oddsub_core::host::{mycielskian, HostGraph, Vertex};
use oddsub_core::kset::{gaps, isles, kneser_adjacent, KSubset};
use oddsub_core::zigzag::{
    is_zigzag, kempe_chain, max_zigzags, zig, zig_of, ProperColouring, ZigzagCaps,
};
use proptest::prelude::*;

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut it = bits.into_iter();
            for u in 0..n {
                for v in u + 1..n {
                    if it.next().unwrap() {
                        edges.push((u, v));
                    }
                }
            }
            Graph::from_edges((0..n as u32).map(Vertex::Id).collect(), &edges).unwrap()
        })
    })
}

fn subset(n: u32, mask: u128) -> KSubset {
    let full = if n == 128 { u128::MAX } else { (1u128 << n) - 1 };
    KSubset::from_bits(n, mask & full).unwrap()
}

/// Greedy colouring in vertex order, as a cheap proper colouring.
fn greedy(g: &Graph) -> ProperColouring {
    let mut c = vec![0u32; g.order()];
    for v in 0..g.order() {
        let used: Vec<u32> = g.neighbours(v).iter().map(|&u| c[u as usize]).collect();
        c[v] = (1..).find(|x| !used.contains(x)).unwrap();
    }
    let t = c.iter().copied().max().unwrap_or(1);
    ProperColouring::new(g, c, t).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn kneser_adjacency_is_symmetric_disjointness(n in 4u32..40, a in any::<u128>(), b in any::<u128>()) {
        let (a, b) = (subset(n, a), subset(n, b));
        if a.len() == b.len() {
            let ab = kneser_adjacent(&a, &b).unwrap();
            prop_assert_eq!(ab, kneser_adjacent(&b, &a).unwrap());
            prop_assert_eq!(ab, a.elements().all(|x| !b.contains(x)));
        } else {
            prop_assert!(kneser_adjacent(&a, &b).is_err());
        }
    }

    #[test]
    fn isles_and_gaps_match_definition(n in 1u32..=128, bits in any::<u128>()) {
        let a = subset(n, bits);
        let inside = |x: u32| x >= 1 && x <= n && a.contains(x);
        let want_isles: Vec<u32> = (1..=n).filter(|&x| inside(x) && !inside(x - 1) && !inside(x + 1)).collect();
        let want_gaps: Vec<u32> = (1..=n).filter(|&x| !inside(x) && inside(x - 1) && inside(x + 1)).collect();
        prop_assert_eq!(isles(&a), want_isles);
        prop_assert_eq!(gaps(&a), want_gaps);
        let comp = a.complement();
        let inner: Vec<u32> = isles(&comp).into_iter().filter(|&x| x > 1 && x < n).collect();
        prop_assert_eq!(gaps(&a), inner);
    }

    #[test]
    fn schrijver_inside_kneser(n in 5u32..12, k in 1u32..4, bits in any::<u128>()) {
        prop_assume!(2 * k <= n);
        let s = subset(n, bits);
        prop_assume!(s.len() == k);
        let v = Vertex::Set(s);
        let sg = HostGraph::schrijver(n, k).unwrap();
        let kg = HostGraph::kneser(n, k).unwrap();
        if sg.contains(&v) {
            prop_assert!(kg.contains(&v));
            prop_assert!(!s.has_cyclic_neighbours());
        }
    }

    #[test]
    fn oracle_matches_materialized(n in 4u32..10, k in 1u32..4, schrijver in any::<bool>()) {
        prop_assume!(2 * k <= n);
        let host = if schrijver { HostGraph::schrijver(n, k) } else { HostGraph::kneser(n, k) }.unwrap();
        let g = host.materialize(10_000).unwrap();
        prop_assert_eq!(g.order() as u128, host.vertex_count());
        for u in 0..g.order() {
            for v in 0..g.order() {
                prop_assert_eq!(g.has_edge(u, v), host.adjacent(g.label(u), g.label(v)));
            }
        }
    }

    #[test]
    fn mycielski_degrees(g in graph_strategy(8), m in 1u32..4) {
        let n = g.order();
        let my = mycielskian(&g, m);
        prop_assert_eq!(my.order(), n * m as usize + 1);
        prop_assert_eq!(my.degree(my.order() - 1), n);
        for v in 0..n {
            let d = g.degree(v);
            for l in 0..m as usize {
                let mut want = d;
                if l + 1 < m as usize { want += d; }
                if l + 1 == m as usize { want += 1; }
                prop_assert_eq!(my.degree(l * n + v), want, "level {}", l);
            }
        }
        let host = HostGraph::mycielski(HostGraph::Materialized(g.clone()), m).unwrap();
        let mat = host.materialize(1000).unwrap();
        prop_assert_eq!(mat.edge_count(), my.edge_count());
    }

    #[test]
    fn subdivision_implies_immersion(g in graph_strategy(7), t in 2usize..5) {
        if let Some(cert) = brute_force_find_subdivision(&g, t, true, 200_000, 12).unwrap_or(None) {
            prop_assert!(verify_subdivision(&cert, true).passed());
            let mut imm = cert.clone();
            imm.kind = PatternKind::Immersion;
            prop_assert!(verify_immersion(&imm, true).passed());
        }
    }

    #[test]
    fn zig_between_bounds(g in graph_strategy(7)) {
        let r = zig(&g, &ZigzagCaps::default()).unwrap();
        prop_assert!(r.zig <= r.chromatic);
        prop_assert_eq!(r.chromatic, chromatic_number_exact(&g, 40).unwrap());
        let c = greedy(&g);
        prop_assert!(zig_of(&g, &c) >= r.zig);
        if r.zig == r.chromatic {
            let best = ProperColouring::new(&g, r.chromatic_colouring.clone(), r.chromatic as u32).unwrap();
            prop_assert_eq!(zig_of(&g, &best), r.chromatic);
        }
    }

    #[test]
    fn max_zigzags_are_zigzags(g in graph_strategy(8)) {
        let c = greedy(&g);
        let zs = max_zigzags(&g, &c);
        let size = zig_of(&g, &c);
        prop_assert!(!zs.is_empty());
        for z in &zs {
            prop_assert_eq!(z.len(), size);
            prop_assert!(is_zigzag(&g, c.colours(), z));
        }
    }

    #[test]
    fn kempe_chain_matches_union_find(g in graph_strategy(9), i in 1u32..4, j in 1u32..4) {
        prop_assume!(i != j);
        let c = greedy(&g);
        let n = g.order();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut Vec<usize>, x: usize) -> usize {
            if p[x] != x { let r = find(p, p[x]); p[x] = r; }
            p[x]
        }
        let ok = |v: usize| c.colour(v) == i || c.colour(v) == j;
        for (u, v) in g.edges() {
            if ok(u) && ok(v) {
                let (a, b) = (find(&mut parent, u), find(&mut parent, v));
                parent[a] = b;
            }
        }
        for x in (0..n).filter(|&x| ok(x)) {
            let chain = kempe_chain(&g, &c, i, j, x).unwrap();
            let rx = find(&mut parent, x);
            let want: Vec<usize> = (0..n).filter(|&y| ok(y) && find(&mut parent, y) == rx).collect();
            prop_assert_eq!(chain.vertices, want);
        }
    }
}
