//! Minimum constrained cost graph homomorphisms.
//!
//! Given graphs `G` and `H`, a cost `c(x)` for every target vertex `x` and a
//! positive weight `w(v)` for every input vertex, find a homomorphism
//! `f: G -> H` minimising `sum_v w(v) * c(f(v))`.
//!
//! The crate provides exact solvers (exhaustive search for any target, a
//! min-cut algorithm for proper interval bigraph targets), a classifier for
//! the complexity of a fixed target, executable gadget reductions from
//! pre-colouring extension and 3-partite independent set, and a plain-text
//! instance format with a small command-line front end.
//!
//! ```
//! use mincost_hom::{Graph, WeightedInstance, solvers::brute_force_min_cost};
//!
//! let inst = WeightedInstance::new(Graph::path(2), Graph::path(2), vec![1, 2], None, None)?;
//! let hom = brute_force_min_cost(&inst)?.expect("K2 maps onto K2");
//! assert_eq!(hom.cost, 3);
//! # Ok::<(), mincost_hom::Error>(())
//! ```

pub mod cli;
pub mod embed;
pub mod error;
pub mod format;
pub mod generate;
pub mod graph;
pub mod instance;
pub mod recognition;
pub mod reductions;
pub mod solvers;

pub use embed::find_induced_embedding;
pub use error::{Error, Result};
pub use graph::{bipartition, odd_cycle, Bipartition, Graph, NamedGraphBuilder, VertexNames};
pub use instance::{
    validate_hom, CostFunction, Homomorphism, Precolouring, WeightFunction, WeightedInstance,
};
