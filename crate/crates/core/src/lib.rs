//! Graphical transversal matroids.
//!
//! For an undirected multigraph `G` the ground set holds one element
//! `(v, i)` for each `1 <= i <= deg(v)`. The rank of a subset is the largest
//! number of edges that can be labeled by one of their ends when each vertex
//! may be used at most as many times as the subset has elements at it. The
//! resulting matroid `TM(G)` is transversal, equal to its own dual, and has
//! rank `|E|`; deleting the elements of a vertex set `W` gives `TM(G, W)`,
//! whose bases are counted exactly from the out-degree classes of the
//! orientations of `G[V \ W]`.
//!
//! Modules:
//! - [`graph`]: multigraphs, parsing, orientations
//! - [`labeling`]: capacitated labelings and the maximum-height solver
//! - [`matroid`]: ground sets, rank, deletion, presentations, self-duality
//! - [`census`]: out-degree classes and the basis count
//! - [`oracle`]: brute-force checks used to verify all of the above
//! - [`cli`]: the `gtm` command

pub mod census;
pub mod cli;
pub mod error;
pub mod graph;
pub mod labeling;
pub mod matroid;
pub mod oracle;

pub use census::{count_bases, enumerate_classes, OutDegreeClass};
pub use error::{Error, Result};
pub use graph::{Edge, Multigraph, Orientation};
pub use labeling::{max_height, AlphaVector, Label, Labeling};
pub use matroid::{GroundElement, MatroidHandle, Presentation};
