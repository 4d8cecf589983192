//! The engine, the subset-sweep oracle and the clique-extended oracle must
//! agree on every small graph, and the call-tree statistics must respect the
//! structural bounds of the search.

use std::collections::BTreeSet;

use bbk::engine::run_frame;
use bbk::oracle::{brute_force_maximal_bicliques, clique_extended_enumerate};
use bbk::{bidegeneracy_order, enumerate, Biclique, BipartiteGraph, EnumerateOptions, SideTag, VertexId};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_graph(rng: &mut impl Rng, nu: usize, nv: usize, p: f64) -> BipartiteGraph {
    let mut edges = Vec::new();
    for u in 0..nu {
        for v in 0..nv {
            if rng.gen_bool(p) {
                edges.push((u as VertexId, v as VertexId));
            }
        }
    }
    BipartiteGraph::from_edges(nu, nv, edges).unwrap()
}

fn graph_strategy(max_u: usize, max_v: usize) -> impl Strategy<Value = BipartiteGraph> {
    (1..=max_u, 1..=max_v, 0.0f64..=1.0, any::<u64>()).prop_map(|(nu, nv, p, seed)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        random_graph(&mut rng, nu, nv, p)
    })
}

/// Every `(A, B)` pair of subsets checked directly against the definition of
/// a maximal biclique. Includes one-sided bicliques.
fn exhaustive_pairs(g: &BipartiteGraph) -> BTreeSet<Biclique> {
    let (nu, nv) = (g.u_count(), g.v_count());
    assert!(nu <= 8 && nv <= 10);
    let u_mask: Vec<u32> =
        (0..nu as VertexId).map(|u| g.u().adjacency().neighbors(u).iter().fold(0, |m, &v| m | 1 << v)).collect();
    let v_mask: Vec<u32> =
        (0..nv as VertexId).map(|v| g.v().adjacency().neighbors(v).iter().fold(0, |m, &u| m | 1 << u)).collect();
    let mut out = BTreeSet::new();
    for a in 0u32..1 << nu {
        for b in 0u32..1 << nv {
            if a == 0 && b == 0 {
                continue;
            }
            let complete = (0..nu).all(|u| a & 1 << u == 0 || u_mask[u] & b == b);
            if !complete {
                continue;
            }
            let extendable = (0..nu).any(|u| a & 1 << u == 0 && u_mask[u] & b == b)
                || (0..nv).any(|v| b & 1 << v == 0 && v_mask[v] & a == a);
            if !extendable {
                let left = (0..nu as VertexId).filter(|&u| a & 1 << u != 0).collect();
                let right = (0..nv as VertexId).filter(|&v| b & 1 << v != 0).collect();
                out.insert(Biclique { left, right });
            }
        }
    }
    out
}

fn bbk_set(g: &BipartiteGraph, side: SideTag) -> BTreeSet<Biclique> {
    let order = bidegeneracy_order(g, side);
    let mut out = Vec::new();
    let opts = EnumerateOptions { include_trivial: true, check_invariants: true };
    enumerate(g, &order, &mut out, opts).unwrap();
    let n = out.len();
    let set: BTreeSet<_> = out.into_iter().collect();
    assert_eq!(set.len(), n, "duplicate emission");
    set
}

#[test]
fn double_oracle_cross_check() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..50 {
        let g = random_graph(&mut rng, 8, 10, 0.3);
        assert_eq!(brute_force_maximal_bicliques(&g, true).unwrap(), exhaustive_pairs(&g));
    }
}

#[test]
fn no_one_sided_output_from_the_recursion() {
    // u0 shares v0 with u1 and v1 with u2; u1 and u2 have private neighbors
    // so u0 is selected first. R = {u0, u1, u2} is reachable through U alone.
    let edges = [(0, 0), (0, 1), (1, 0), (1, 2), (1, 3), (2, 1), (2, 4), (2, 5)];
    let g = BipartiteGraph::from_edges(3, 6, edges).unwrap();
    let order = bidegeneracy_order(&g, SideTag::Left);
    assert_eq!(order.sequence()[0], 0);
    assert_eq!(bbk_set(&g, SideTag::Left), exhaustive_pairs(&g));

    // The same frame started by hand must stay silent on {u0, u1, u2}.
    let frame = bbk::engine::CallFrame { r_u: vec![0], p_u: vec![1, 2], p_v: vec![0, 1], ..Default::default() };
    let mut out = Vec::new();
    run_frame(&g, &frame, &mut out, true).unwrap();
    assert!(out.iter().all(|b| !b.right.is_empty()));
}

#[test]
fn excluded_vertices_stay_excluded_after_sibling_subtrees() {
    let rows: [&[VertexId]; 6] =
        [&[1, 3, 4, 5], &[0, 1, 2, 3, 6], &[0, 2, 4, 5], &[0, 1, 4, 5, 6], &[0, 1, 3, 4, 5, 6], &[1, 3, 6]];
    let edges = rows.iter().enumerate().flat_map(|(u, row)| row.iter().map(move |&v| (u as VertexId, v)));
    let g = BipartiteGraph::from_edges(6, 7, edges).unwrap();
    let expected = exhaustive_pairs(&g);
    assert_eq!(bbk_set(&g, SideTag::Left), expected);
    assert_eq!(bbk_set(&g, SideTag::Right), expected);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn engines_agree(g in graph_strategy(10, 12)) {
        let brute = brute_force_maximal_bicliques(&g, true).unwrap();
        let (extended, _) = clique_extended_enumerate(&g).unwrap();
        prop_assert_eq!(&brute, &extended);
        prop_assert_eq!(&bbk_set(&g, SideTag::Left), &brute);
        prop_assert_eq!(&bbk_set(&g, SideTag::Right), &brute);
        let swapped: BTreeSet<_> = bbk_set(&g.swap_sides(), SideTag::Left).into_iter().map(Biclique::swapped).collect();
        prop_assert_eq!(&swapped, &brute);
    }

    #[test]
    fn call_tree_bounds(g in graph_strategy(10, 12)) {
        for side in [SideTag::Left, SideTag::Right] {
            let order = bidegeneracy_order(&g, side);
            let mut out = Vec::new();
            let stats = enumerate(&g, &order, &mut out, EnumerateOptions::default()).unwrap();
            prop_assert_eq!(&stats.root_candidates[..], order.residual_size());
            prop_assert_eq!(stats.max_root_candidates, order.b_max());
            if stats.maximal_count > 0 {
                let r = stats.ratio_r().unwrap();
                prop_assert!(r > 0.0 && r <= 1.0);
                prop_assert_eq!(stats.leaf_bound_holds(), Some(true));
            }
            prop_assert!(stats.max_depth <= stats.q_observed.max(1));
            let q = out.iter().filter(|b| !b.is_trivial()).map(Biclique::len).max().unwrap_or(0);
            prop_assert_eq!(stats.q_observed, q);
            prop_assert!(out.iter().all(|b| b.left.iter().all(|&u| b.right.iter().all(|&v| g.has_edge(u, v)))));
        }
    }
}
