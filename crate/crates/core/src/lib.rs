//! Exact combinatorics for K-theoretic Hall algebras of quivers.
//!
//! The crate covers quiver and weight-lattice data, the zonotope `W̄` with its r-invariant and
//! standard forms, admissible tuples, generator counts with the PBW recursion, the deformed
//! symmetric algebra, and shuffle products for several kernels. All arithmetic is exact.
//!
//! ```
//! use kha::{categories, quiver::Quiver};
//!
//! // one vertex with three loops: a single generator type survives in dimension two
//! let mut ranks = categories::Ranks::new(&Quiver::loops(3)).unwrap();
//! assert_eq!(ranks.n_rank(&[2], 0).unwrap(), 1);
//! ```

pub mod categories;
pub mod dsym;
pub mod error;
pub mod io;
pub mod lp;
pub mod polytope;
pub mod quiver;
pub mod rational;
pub mod shuffle;
pub mod weights;

pub use error::{Error, Result};
pub use rational::Q;
