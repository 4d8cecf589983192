//! Independent reference enumerators.
//!
//! * [`brute_force_maximal_bicliques`] sweeps every subset `A` of `U` and keeps
//!   the closed pairs `(A, B)` with `B` the common neighbors of `A` and `A`
//!   the common neighbors of `B`.
//! * [`clique_extended_enumerate`] runs textbook Bron-Kerbosch with pivoting
//!   and a degeneracy order on the graph obtained by turning each side into a
//!   clique; its maximal cliques are exactly the maximal bicliques.
//!
//! Neither shares code with the bidegeneracy-ordered engine.

use std::collections::BTreeSet;

use crate::engine::{emit_trivial_bicliques, Biclique, RunStatistics};
use crate::error::CapacityError;
use crate::graph::{BipartiteGraph, VertexId};

pub const BRUTE_FORCE_LIMIT: usize = 20;
pub const CLIQUE_EXTENDED_LIMIT: usize = 5000;

/// All maximal bicliques by subset enumeration of `U` (at most
/// [`BRUTE_FORCE_LIMIT`] vertices).
pub fn brute_force_maximal_bicliques(
    g: &BipartiteGraph,
    include_trivial: bool,
) -> Result<BTreeSet<Biclique>, CapacityError> {
    let nu = g.u_count();
    let nv = g.v_count();
    if nu > BRUTE_FORCE_LIMIT {
        return Err(CapacityError::BruteForce { limit: BRUTE_FORCE_LIMIT, actual: nu });
    }
    let words = nv.div_ceil(64);
    let u_rows: Vec<Vec<u64>> = (0..nu as VertexId)
        .map(|u| {
            let mut row = vec![0u64; words];
            for &v in g.u().adjacency().neighbors(u) {
                row[v as usize / 64] |= 1 << (v % 64);
            }
            row
        })
        .collect();
    let v_masks: Vec<u32> =
        (0..nv as VertexId).map(|v| g.v().adjacency().neighbors(v).iter().fold(0u32, |m, &u| m | (1 << u))).collect();

    let mut out = BTreeSet::new();
    let mut common = vec![0u64; words];
    for a in 1u32..(1u32 << nu) {
        common.iter_mut().for_each(|w| *w = u64::MAX);
        for (u, row) in u_rows.iter().enumerate() {
            if a & (1 << u) != 0 {
                common.iter_mut().zip(row).for_each(|(c, r)| *c &= r);
            }
        }
        let right: Vec<VertexId> =
            (0..nv as VertexId).filter(|&v| common[v as usize / 64] & (1 << (v % 64)) != 0).collect();
        if right.is_empty() {
            continue;
        }
        let closure = right.iter().fold(u32::MAX, |m, &v| m & v_masks[v as usize]);
        if closure == a {
            let left = (0..nu as VertexId).filter(|&u| a & (1 << u) != 0).collect();
            out.insert(Biclique { left, right });
        }
    }
    if include_trivial {
        let mut trivial = Vec::new();
        let Ok(_) = emit_trivial_bicliques(g, &mut trivial);
        out.extend(trivial);
    }
    Ok(out)
}

/// Maximal cliques of the clique-extended graph, split into their `U` and `V`
/// parts. One-sided maximal bicliques come out naturally.
pub fn clique_extended_enumerate(g: &BipartiteGraph) -> Result<(BTreeSet<Biclique>, RunStatistics), CapacityError> {
    let total = g.u_count() + g.v_count();
    if total > CLIQUE_EXTENDED_LIMIT {
        return Err(CapacityError::CliqueExtended { limit: CLIQUE_EXTENDED_LIMIT, actual: total });
    }
    let ext = CliqueExtendedGraph::new(g);
    let order = ext.degeneracy_order();
    let mut rank = vec![0; total];
    for (i, &x) in order.iter().enumerate() {
        rank[x] = i;
    }

    let mut search = CliqueSearch { ext: &ext, out: BTreeSet::new(), stats: RunStatistics::default() };
    for (i, &x) in order.iter().enumerate() {
        let (p, xs): (Vec<usize>, Vec<usize>) = (0..total).filter(|&y| ext.adjacent(x, y)).partition(|&y| rank[y] > i);
        search.expand(vec![x], p, xs);
    }
    Ok((search.out, search.stats))
}

/// `G^C`: the bipartite edges plus all same-side pairs. Vertices are
/// numbered `U` first (`0..ν`), then `V` (`ν..ν+n_V`); same-side adjacency is
/// implicit.
pub struct CliqueExtendedGraph<'g> {
    g: &'g BipartiteGraph,
    nu: usize,
}

impl<'g> CliqueExtendedGraph<'g> {
    pub fn new(g: &'g BipartiteGraph) -> Self {
        CliqueExtendedGraph { g, nu: g.u_count() }
    }

    pub fn vertex_count(&self) -> usize {
        self.nu + self.g.v_count()
    }

    pub fn is_u(&self, x: usize) -> bool {
        x < self.nu
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        if a == b {
            return false;
        }
        match (self.is_u(a), self.is_u(b)) {
            (true, true) | (false, false) => true,
            (true, false) => self.g.has_edge(a as VertexId, (b - self.nu) as VertexId),
            (false, true) => self.g.has_edge(b as VertexId, (a - self.nu) as VertexId),
        }
    }

    /// `|N^C(x)|`.
    pub fn degree(&self, x: usize) -> usize {
        if self.is_u(x) {
            self.g.u().adjacency().degree(x as VertexId) + self.nu - 1
        } else {
            self.g.v().adjacency().degree((x - self.nu) as VertexId) + self.g.v_count() - 1
        }
    }

    pub fn edge_count(&self) -> usize {
        let (nu, nv) = (self.nu, self.g.v_count());
        self.g.edge_count() + nu * nu.saturating_sub(1) / 2 + nv * nv.saturating_sub(1) / 2
    }

    /// Repeatedly removes a vertex of minimum remaining degree (smallest
    /// index on ties).
    pub fn degeneracy_order(&self) -> Vec<usize> {
        let n = self.vertex_count();
        let mut degree: Vec<usize> = (0..n).map(|x| self.degree(x)).collect();
        let mut removed = vec![false; n];
        let mut order = Vec::with_capacity(n);
        for _ in 0..n {
            let x = (0..n).filter(|&x| !removed[x]).min_by_key(|&x| (degree[x], x)).unwrap();
            removed[x] = true;
            order.push(x);
            for y in 0..n {
                if !removed[y] && self.adjacent(x, y) {
                    degree[y] -= 1;
                }
            }
        }
        order
    }
}

struct CliqueSearch<'a, 'g> {
    ext: &'a CliqueExtendedGraph<'g>,
    out: BTreeSet<Biclique>,
    stats: RunStatistics,
}

impl CliqueSearch<'_, '_> {
    fn expand(&mut self, r: Vec<usize>, mut p: Vec<usize>, mut x: Vec<usize>) {
        if p.is_empty() && x.is_empty() {
            self.stats.leaf_count += 1;
            self.stats.maximal_count += 1;
            let (left, right): (Vec<usize>, Vec<usize>) = r.iter().partition(|&&y| self.ext.is_u(y));
            let nu = self.ext.nu;
            let bic = Biclique::new(
                left.into_iter().map(|y| y as VertexId).collect(),
                right.into_iter().map(|y| (y - nu) as VertexId).collect(),
            );
            if !bic.is_trivial() {
                self.stats.q_observed = self.stats.q_observed.max(bic.len());
            }
            self.out.insert(bic);
            return;
        }
        let ext = self.ext;
        let pivot = p
            .iter()
            .chain(&x)
            .copied()
            .min_by_key(|&c| (p.iter().filter(|&&y| !ext.adjacent(c, y)).count(), c))
            .unwrap();
        let branch: Vec<usize> = p.iter().copied().filter(|&y| !ext.adjacent(pivot, y)).collect();
        if branch.is_empty() {
            self.stats.leaf_count += 1;
            return;
        }
        self.stats.internal_count += 1;
        for v in branch {
            let mut r2 = r.clone();
            r2.push(v);
            let p2 = p.iter().copied().filter(|&y| ext.adjacent(v, y)).collect();
            let x2 = x.iter().copied().filter(|&y| ext.adjacent(v, y)).collect();
            self.expand(r2, p2, x2);
            p.retain(|&y| y != v);
            x.push(v);
        }
    }
}
