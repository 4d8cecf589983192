//! Maximal biclique enumeration in sparse bipartite graphs.
//!
//! The main entry point is [`engine::enumerate`], which runs a Bron-Kerbosch
//! style search initiated on one side of the graph, visiting that side in a
//! [bidegeneracy order](ordering::bidegeneracy_order). Two slower reference
//! enumerators live in [`oracle`].
//!
//! ```
//! use bbk::{bidegeneracy_order, maximal_bicliques, BipartiteGraph, SideTag};
//!
//! let g = BipartiteGraph::from_edges(2, 2, [(0, 0), (0, 1), (1, 1)]).unwrap();
//! let order = bidegeneracy_order(&g, SideTag::Left);
//! let found = maximal_bicliques(&g, &order, true);
//! assert_eq!(found.len(), 2);
//! ```

pub mod engine;
pub mod error;
pub mod graph;
pub mod load;
pub mod oracle;
pub mod ordering;

pub use crate::engine::{
    enumerate, maximal_bicliques, Biclique, BicliqueSink, CountSink, EnumerateOptions, RunStatistics,
};
pub use crate::error::{CapacityError, GraphError, LoadError, OrderingError};
pub use crate::graph::{BipartiteGraph, GraphStats, SideTag, VertexId};
pub use crate::load::{load_edge_list, LoadOptions, LoadedGraph};
pub use crate::ordering::{bidegeneracy_order, mean_bidegeneracy, BidegeneracyOrder};
