//! Distance-based indices of graphs: pairs at distance `k` (the coefficients
//! of the Wiener polynomial), sums of distances between vertices of equal
//! degree, and the tree and partial-cube algorithms that compute them fast.
//!
//! ```
//! use wiener_core::{graph, oracle, partial_cube, tree_algo};
//!
//! let p = graph::path(10);
//! assert_eq!(tree_algo::gwp_linear(&p, 3).unwrap(), 7);
//! assert_eq!(oracle::wk(&p, 3).unwrap(), 7);
//!
//! let q3 = graph::hypercube(3).unwrap();
//! assert_eq!(partial_cube::twk_cut(&q3, 3).unwrap(), 48);
//! ```

pub mod benzenoid;
pub mod enumerate;
pub mod error;
pub mod extremal;
pub mod graph;
pub mod oracle;
pub mod partial_cube;
pub mod random;
pub mod tree_algo;

pub use error::{Error, Result};
pub use graph::{DistanceMatrix, Graph};
