//! Immutable two-sided adjacency storage for bipartite graphs.
//!
//! Both directions are materialized as compressed sparse rows: the `U` side
//! maps each vertex to its sorted `V` neighbors and the `V` side maps back.
//! Vertex ids are dense and scoped to their side.

use std::fmt;

use crate::error::GraphError;

/// Dense vertex index, scoped to one side of the graph.
pub type VertexId = u32;

/// Identifies which input column a side originally came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SideTag {
    Left,
    Right,
}

impl SideTag {
    pub fn opposite(self) -> SideTag {
        match self {
            SideTag::Left => SideTag::Right,
            SideTag::Right => SideTag::Left,
        }
    }
}

impl fmt::Display for SideTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SideTag::Left => f.write_str("left"),
            SideTag::Right => f.write_str("right"),
        }
    }
}

/// Compressed sparse rows: `targets[offsets[x]..offsets[x + 1]]` are the
/// neighbors of `x`, sorted ascending and free of duplicates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Adjacency {
    offsets: Vec<usize>,
    targets: Vec<VertexId>,
}

impl Adjacency {
    fn from_sorted_pairs(count: usize, pairs: impl Iterator<Item = (VertexId, VertexId)>) -> Self {
        let mut offsets = vec![0usize; count + 1];
        let mut targets = Vec::new();
        for (src, dst) in pairs {
            offsets[src as usize + 1] += 1;
            targets.push(dst);
        }
        for i in 0..count {
            offsets[i + 1] += offsets[i];
        }
        Adjacency { offsets, targets }
    }

    /// Number of vertices on this side.
    #[inline]
    pub fn len(&self) -> usize {
        self.offsets.len() - 1
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Sorted neighbors of `x`. Panics when `x` is out of range.
    #[inline]
    pub fn neighbors(&self, x: VertexId) -> &[VertexId] {
        let x = x as usize;
        &self.targets[self.offsets[x]..self.offsets[x + 1]]
    }

    #[inline]
    pub fn degree(&self, x: VertexId) -> usize {
        let x = x as usize;
        self.offsets[x + 1] - self.offsets[x]
    }

    pub fn max_degree(&self) -> usize {
        self.offsets.windows(2).map(|w| w[1] - w[0]).max().unwrap_or(0)
    }

    /// Total number of stored neighbor entries.
    pub fn entry_count(&self) -> usize {
        self.targets.len()
    }

    #[inline]
    pub fn contains(&self, x: VertexId, y: VertexId) -> bool {
        self.neighbors(x).binary_search(&y).is_ok()
    }
}

/// One side of the graph: its tag, adjacency towards the other side, and the
/// original label of each dense id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Side {
    tag: SideTag,
    adjacency: Adjacency,
    labels: Vec<String>,
}

impl Side {
    pub fn tag(&self) -> SideTag {
        self.tag
    }

    pub fn adjacency(&self) -> &Adjacency {
        &self.adjacency
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.adjacency.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adjacency.is_empty()
    }
}

/// A bipartite graph `(U, V, E)`.
///
/// `U` and `V` are positional roles; each carries the [`SideTag`] of the input
/// column it came from, so [`BipartiteGraph::swap_sides`] can exchange the
/// roles without losing track of the columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteGraph {
    u: Side,
    v: Side,
    edge_count: usize,
}

/// The two parts of `N^P(u)`: same-side vertices sharing a neighbor with `u`,
/// and the neighbors of `u` themselves.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ProjectedNeighborhood {
    /// `N₂(u)`, sorted.
    pub same_side: Vec<VertexId>,
    /// `N(u)`, sorted.
    pub opposite_side: Vec<VertexId>,
}

impl ProjectedNeighborhood {
    pub fn len(&self) -> usize {
        self.same_side.len() + self.opposite_side.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Degree statistics, expressed with respect to the graph's `U`/`V` roles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct GraphStats {
    pub d_u: usize,
    pub d_v: usize,
    pub d2_u: usize,
    pub d2_v: usize,
    pub d: usize,
}

impl BipartiteGraph {
    /// Builds a graph from edges given as `(u, v)` dense-id pairs. Labels
    /// default to the decimal id. Duplicate edges are collapsed.
    pub fn from_edges<I>(u_count: usize, v_count: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let u_labels = (0..u_count).map(|i| i.to_string()).collect();
        let v_labels = (0..v_count).map(|i| i.to_string()).collect();
        Self::from_labeled_edges(u_labels, v_labels, edges).map(|(g, _)| g)
    }

    /// Builds a graph with explicit labels (`U` tagged left, `V` tagged right).
    /// Returns the graph and the number of duplicate edges that were dropped.
    pub fn from_labeled_edges<I>(
        u_labels: Vec<String>,
        v_labels: Vec<String>,
        edges: I,
    ) -> Result<(Self, usize), GraphError>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let u_count = u_labels.len();
        let v_count = v_labels.len();
        if u_count > VertexId::MAX as usize || v_count > VertexId::MAX as usize {
            return Err(GraphError::TooManyVertices);
        }
        let mut pairs: Vec<(VertexId, VertexId)> = Vec::new();
        for (u, v) in edges {
            if u as usize >= u_count {
                return Err(GraphError::VertexOutOfRange { side: SideTag::Left, id: u, count: u_count });
            }
            if v as usize >= v_count {
                return Err(GraphError::VertexOutOfRange { side: SideTag::Right, id: v, count: v_count });
            }
            pairs.push((u, v));
        }
        let raw = pairs.len();
        pairs.sort_unstable();
        pairs.dedup();
        let duplicates = raw - pairs.len();

        let u_adj = Adjacency::from_sorted_pairs(u_count, pairs.iter().copied());
        // Sorting by (v, u) keeps each v's list sorted by u.
        let mut by_v = pairs.iter().map(|&(u, v)| (v, u)).collect::<Vec<_>>();
        by_v.sort_unstable();
        let v_adj = Adjacency::from_sorted_pairs(v_count, by_v.into_iter());

        let graph = BipartiteGraph {
            u: Side { tag: SideTag::Left, adjacency: u_adj, labels: u_labels },
            v: Side { tag: SideTag::Right, adjacency: v_adj, labels: v_labels },
            edge_count: pairs.len(),
        };
        Ok((graph, duplicates))
    }

    pub fn u(&self) -> &Side {
        &self.u
    }

    pub fn v(&self) -> &Side {
        &self.v
    }

    /// `ν`, the number of `U` vertices.
    pub fn u_count(&self) -> usize {
        self.u.len()
    }

    /// `n_V`, the number of `V` vertices.
    pub fn v_count(&self) -> usize {
        self.v.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// The side carrying `tag`, paired with the opposite side.
    pub fn side(&self, tag: SideTag) -> (&Side, &Side) {
        if self.u.tag == tag {
            (&self.u, &self.v)
        } else {
            (&self.v, &self.u)
        }
    }

    /// Whether `tag` currently plays the `U` role.
    pub fn is_u(&self, tag: SideTag) -> bool {
        self.u.tag == tag
    }

    fn check(&self, side: &Side, x: VertexId) -> Result<(), GraphError> {
        if (x as usize) < side.len() {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { side: side.tag, id: x, count: side.len() })
        }
    }

    /// `N(x)` for a vertex on the side tagged `side`.
    pub fn neighbors(&self, side: SideTag, x: VertexId) -> Result<&[VertexId], GraphError> {
        let (own, _) = self.side(side);
        self.check(own, x)?;
        Ok(own.adjacency.neighbors(x))
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        let (a, b) = (self.u.adjacency.degree(u), self.v.adjacency.degree(v));
        if a <= b {
            self.u.adjacency.contains(u, v)
        } else {
            self.v.adjacency.contains(v, u)
        }
    }

    /// `(N₂(u), N(u))` for a vertex on the side tagged `side`.
    pub fn projection_extended_neighborhood(
        &self,
        side: SideTag,
        u: VertexId,
    ) -> Result<ProjectedNeighborhood, GraphError> {
        let (own, other) = self.side(side);
        self.check(own, u)?;
        let opposite_side = own.adjacency.neighbors(u).to_vec();
        let mut same_side: Vec<VertexId> = opposite_side
            .iter()
            .flat_map(|&v| other.adjacency.neighbors(v).iter().copied())
            .filter(|&w| w != u)
            .collect();
        same_side.sort_unstable();
        same_side.dedup();
        Ok(ProjectedNeighborhood { same_side, opposite_side })
    }

    pub fn stats(&self) -> GraphStats {
        let d_u = self.u.adjacency.max_degree();
        let d_v = self.v.adjacency.max_degree();
        GraphStats {
            d_u,
            d_v,
            d2_u: max_projected_degree(&self.u.adjacency, &self.v.adjacency),
            d2_v: max_projected_degree(&self.v.adjacency, &self.u.adjacency),
            d: d_u.max(d_v),
        }
    }

    /// Returns a copy with the `U` and `V` roles exchanged.
    pub fn swap_sides(&self) -> BipartiteGraph {
        self.clone().into_swapped()
    }

    pub fn into_swapped(self) -> BipartiteGraph {
        BipartiteGraph { u: self.v, v: self.u, edge_count: self.edge_count }
    }
}

/// `max_x |N₂(x)|` over the vertices of `own`, using a stamp array instead of
/// materializing each second neighborhood.
fn max_projected_degree(own: &Adjacency, other: &Adjacency) -> usize {
    let mut stamp = vec![u32::MAX; own.len()];
    let mut best = 0;
    for x in 0..own.len() as VertexId {
        stamp[x as usize] = x;
        let mut count = 0;
        for &y in own.neighbors(x) {
            for &w in other.neighbors(y) {
                if stamp[w as usize] != x {
                    stamp[w as usize] = x;
                    count += 1;
                }
            }
        }
        best = best.max(count);
    }
    best
}
