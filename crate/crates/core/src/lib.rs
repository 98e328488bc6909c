//! Executable vertex-Ramsey theory for small and medium graphs.
//!
//! The crate decides A-degeneracy and computes minimum A-forest
//! decompositions, produces certified "copy of B or an A-avoiding coloring"
//! dichotomies, checks vertex r-Ramseyness exactly, and runs the random
//! copy-hypergraph construction of F-free dense graphs.

pub mod blocks;
pub mod catalogue;
pub mod colorer;
pub mod degeneracy;
pub mod embed;
pub mod error;
pub mod format;
pub mod graph;
pub mod ramsey;
pub mod randcon;

pub use blocks::{articulation_points, block_decomposition, Block, BlockDecomposition};
pub use colorer::{find_b_or_color, verify_coloring, RamseyCertificate};
pub use degeneracy::{extract_core, forest_decomposition, is_a_degenerate, ForestDecomposition};
pub use embed::{automorphism_count, contains_copy, enumerate_copies, Copy, Embedding};
pub use error::{Error, Result};
pub use format::{parse_edge_list, parse_graph6, parse_graph_text, write_graph6};
pub use graph::{Edge, Graph, VertexColoring};
