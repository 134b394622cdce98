//! Shuffle algebras, Borel-Weil-Bott pushforwards and the mutation identity.

pub mod bbw;
pub mod kernel;
pub mod phi;
pub mod poly;
pub mod product;
pub mod relations;

pub use kernel::{Kernel, KernelKind};
pub use poly::LaurentPoly;
pub use product::{shuffle_mul, shuffle_word, symmetrize, ShuffleElement};
