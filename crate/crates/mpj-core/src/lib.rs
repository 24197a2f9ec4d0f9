//! Exact-arithmetic structure theory of split Malcev-Poisson-Jordan
//! algebras: structure constants, axiom verification, root-space
//! decomposition, connections of roots, and decomposition into ideals,
//! with brute-force oracles for every structural claim.

pub mod algebra;
pub mod connections;
pub mod decomposition;
pub mod exactlin;
pub mod families;
pub mod rational;
pub mod split;

pub use algebra::{AlgebraSpec, AxiomReport, Tensor3, Verdict, Witness};
pub use exactlin::{QMatrix, QVec, Subspace};
pub use rational::Rat;
