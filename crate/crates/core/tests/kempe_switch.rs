//! Switching a union of Kempe chains that holds exactly one twin of a
//! potential zigzag turns it into a maximum zigzag, and every maximum zigzag
//! after the switch either was maximum before or is such a potential zigzag.

use oddsub_core::graph::Graph;
use oddsub_core::host::Vertex;
use oddsub_core::zigzag::{
    build_immersion, for_each_proper_colouring, is_potential_zigzag, is_zigzag, kempe_components,
    max_zigzags, max_zigzags_by, zig, zig_of, ImmersionCaps, ProperColouring, RouteKind,
    ZigzagCaps,
};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

fn random_graph(rng: &mut StdRng, n: usize) -> Graph {
    let p: f64 = rng.gen_range(0.3..0.85);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges((0..n as u32).map(Vertex::Id).collect(), &edges).unwrap()
}

/// Graph with `χ = zig`, returning that common value.
fn balanced_graph(rng: &mut StdRng) -> (Graph, u32) {
    loop {
        let n = rng.gen_range(4..=9);
        let g = random_graph(rng, n);
        let r = zig(&g, &ZigzagCaps::default()).unwrap();
        if r.zig == r.chromatic && r.chromatic >= 3 {
            return (g, r.chromatic as u32);
        }
    }
}

fn potential_zigzags(g: &Graph, c: &ProperColouring, i: u32, j: u32) -> Vec<(Vec<usize>, (usize, usize))> {
    let t = c.t() as usize;
    let mut out = Vec::new();
    for y in 0..g.order() {
        let cy = c.colour(y);
        if cy != i && cy != j {
            continue;
        }
        let mut flipped = c.colours().to_vec();
        flipped[y] = if cy == i { j } else { i };
        for z in max_zigzags_by(g, &flipped) {
            if z.len() != t || !z.contains(&y) {
                continue;
            }
            if let Some(pz) = is_potential_zigzag(g, c, &z, i, j) {
                if !out.iter().any(|(w, _)| *w == z) {
                    out.push((z, pz.twins));
                }
            }
        }
    }
    out
}

#[test]
fn switching_one_twin_region() {
    let mut rng = StdRng::seed_from_u64(12);
    let mut checked = 0;
    let mut attempts = 0;
    while checked < 100 {
        attempts += 1;
        assert!(attempts < 20_000, "too few instances found");
        let (g, t) = balanced_graph(&mut rng);
        let mut all = Vec::new();
        for_each_proper_colouring(&g, t, 10_000_000, |c| all.push(c.to_vec())).unwrap();
        let c = ProperColouring::new(&g, all.choose(&mut rng).unwrap().clone(), t).unwrap();
        let i = rng.gen_range(1..=t);
        let j = loop {
            let j = rng.gen_range(1..=t);
            if j != i {
                break j;
            }
        };
        let pzs = potential_zigzags(&g, &c, i, j);
        let Some((z, (u, v))) = pzs.choose(&mut rng).cloned() else {
            continue;
        };
        let comp = kempe_components(&g, c.colours(), i, j);
        let (inside, outside) = if rng.gen_bool(0.5) { (u, v) } else { (v, u) };
        if comp[inside] == comp[outside] {
            continue;
        }
        let ids: Vec<usize> = {
            let mut ids: Vec<usize> = comp.iter().copied().filter(|&x| x != usize::MAX).collect();
            ids.sort_unstable();
            ids.dedup();
            ids
        };
        let chosen: Vec<usize> = ids
            .into_iter()
            .filter(|&id| id == comp[inside] || (id != comp[outside] && rng.gen_bool(0.4)))
            .collect();
        let region: Vec<bool> = comp.iter().map(|x| chosen.contains(x)).collect();
        assert_eq!(z.iter().filter(|&&x| region[x]).count(), 1);

        let switched = c.switched(&region, i, j);
        ProperColouring::new(&g, switched.colours().to_vec(), t).unwrap();
        assert_eq!(zig_of(&g, &switched), t as usize);
        let mut reordered = z.clone();
        reordered.sort_by_key(|&x| switched.colour(x));
        assert!(is_zigzag(&g, switched.colours(), &reordered), "{z:?} not repaired");

        for w in max_zigzags(&g, &switched) {
            let one_inside = w.iter().filter(|&&x| region[x]).count() == 1;
            let potential = one_inside && is_potential_zigzag(&g, &c, &w, i, j).is_some();
            let mut by_c = w.clone();
            by_c.sort_by_key(|&x| c.colour(x));
            let was_max = is_zigzag(&g, c.colours(), &by_c);
            assert!(potential ^ was_max, "{w:?} after switching {chosen:?}");
        }
        checked += 1;
    }
}

#[test]
fn immersion_on_random_balanced_graphs() {
    let mut rng = StdRng::seed_from_u64(3);
    let mut layered = 0;
    for _ in 0..150 {
        let (g, t) = balanced_graph(&mut rng);
        let out = build_immersion(&g, &ImmersionCaps::default()).unwrap();
        assert_eq!(out.certificate.pattern_order, t as usize / 2 + 1);
        layered += out
            .routes
            .iter()
            .filter(|r| matches!(r.kind, RouteKind::Layers(_)))
            .count();
    }
    assert!(layered > 0, "no pair needed the layered routing");
}
