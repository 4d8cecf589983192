//! Bidegeneracy ordering of one side of a bipartite graph.
//!
//! The order is built by peeling: repeatedly select the unselected vertex with
//! the fewest projection-extended neighbors `N^P(u) = N(u) ∪ N₂(u)` that are
//! not yet selected. Opposite-side members of `N^P` never leave, so removing
//! `u` only decrements the counts of its same-side second neighbors.
//!
//! The count recorded when a vertex is selected is exactly the size of the
//! root candidate set used by the enumeration for that vertex, and is an upper
//! bound on the vertex's bidegeneracy-based cost.

use std::collections::BTreeSet;

use crate::error::OrderingError;
use crate::graph::{Adjacency, BipartiteGraph, SideTag, VertexId};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BidegeneracyOrder {
    side: SideTag,
    sequence: Vec<VertexId>,
    residual_size: Vec<usize>,
}

impl BidegeneracyOrder {
    /// The side this order ranges over.
    pub fn side(&self) -> SideTag {
        self.side
    }

    /// Vertices in selection order.
    pub fn sequence(&self) -> &[VertexId] {
        &self.sequence
    }

    /// `|N^P(u_i) \ {u_1, …, u_{i-1}}|` for each position `i`.
    pub fn residual_size(&self) -> &[usize] {
        &self.residual_size
    }

    pub fn len(&self) -> usize {
        self.sequence.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sequence.is_empty()
    }

    /// Largest residual; the side's bidegeneracy `b_U`.
    pub fn b_max(&self) -> usize {
        self.residual_size.iter().copied().max().unwrap_or(0)
    }

    pub fn residual_total(&self) -> u64 {
        self.residual_size.iter().map(|&r| r as u64).sum()
    }

    /// Mean residual, `None` for an empty side.
    pub fn b_mean(&self) -> Option<f64> {
        if self.residual_size.is_empty() {
            None
        } else {
            Some(self.residual_total() as f64 / self.residual_size.len() as f64)
        }
    }

    /// Position of each vertex in the order.
    pub fn ranks(&self) -> Vec<usize> {
        let mut rank = vec![0; self.sequence.len()];
        for (i, &u) in self.sequence.iter().enumerate() {
            rank[u as usize] = i;
        }
        rank
    }

    /// Per-vertex bidegeneracy bound, indexed by vertex id.
    pub fn vertex_bounds(&self) -> Vec<usize> {
        let mut bounds = vec![0; self.sequence.len()];
        for (&u, &r) in self.sequence.iter().zip(&self.residual_size) {
            bounds[u as usize] = r;
        }
        bounds
    }
}

/// Calls `visit` once for every `w ∈ N₂(u)`. `stamp` must hold no entry equal
/// to `mark`; entries touched are left equal to `mark`.
fn for_each_second_neighbor(
    own: &Adjacency,
    other: &Adjacency,
    u: VertexId,
    stamp: &mut [usize],
    mark: usize,
    mut visit: impl FnMut(VertexId),
) {
    stamp[u as usize] = mark;
    for &y in own.neighbors(u) {
        for &w in other.neighbors(y) {
            if stamp[w as usize] != mark {
                stamp[w as usize] = mark;
                visit(w);
            }
        }
    }
}

/// Computes a bidegeneracy order of the side tagged `side`. Ties between
/// vertices of equal residual count go to the smallest id.
pub fn bidegeneracy_order(g: &BipartiteGraph, side: SideTag) -> BidegeneracyOrder {
    let (own, other) = g.side(side);
    let own = own.adjacency();
    let other = other.adjacency();
    let n = own.len();

    let mut stamp = vec![usize::MAX; n];
    let mut count = vec![0usize; n];
    for u in 0..n as VertexId {
        let mut second = 0;
        for_each_second_neighbor(own, other, u, &mut stamp, u as usize, |_| second += 1);
        count[u as usize] = own.degree(u) + second;
    }

    let top = count.iter().copied().max().unwrap_or(0);
    let mut buckets: Vec<BTreeSet<VertexId>> = vec![BTreeSet::new(); top + 1];
    for (u, &c) in count.iter().enumerate() {
        buckets[c].insert(u as VertexId);
    }

    let mut selected = vec![false; n];
    let mut sequence = Vec::with_capacity(n);
    let mut residual_size = Vec::with_capacity(n);
    let mut cursor = 0;
    // Stamps for the removal passes start above any vertex id used above.
    for mark in n..2 * n {
        while buckets[cursor].is_empty() {
            cursor += 1;
        }
        let u = buckets[cursor].pop_first().expect("non-empty bucket");
        selected[u as usize] = true;
        sequence.push(u);
        residual_size.push(cursor);

        for_each_second_neighbor(own, other, u, &mut stamp, mark, |w| {
            let w = w as usize;
            if !selected[w] {
                buckets[count[w]].remove(&(w as VertexId));
                count[w] -= 1;
                buckets[count[w]].insert(w as VertexId);
            }
        });
        // Each remaining count dropped by at most one.
        cursor = cursor.saturating_sub(1);
    }

    BidegeneracyOrder { side, sequence, residual_size }
}

/// Per-vertex bidegeneracy bounds of `order`, indexed by vertex id.
pub fn vertex_bidegeneracy_bounds(order: &BidegeneracyOrder) -> Vec<usize> {
    order.vertex_bounds()
}

/// Mean of the residual counts of the side's bidegeneracy order.
pub fn mean_bidegeneracy(g: &BipartiteGraph, side: SideTag) -> Result<f64, OrderingError> {
    bidegeneracy_order(g, side).b_mean().ok_or(OrderingError::EmptySide(side))
}
