//! Finite matrix groups: enumeration, orders, commutator subgroup,
//! abelianization and eigenvalues.

mod abelian;
mod eigen;
mod group;
mod matrix;

pub use abelian::{decompose_abelian, FiniteAbelianGroup};
pub use eigen::{eigenvalues, eigenvalues_over, matrix_order, splitting_degree, Eigenvalues, ORDER_CAP};
pub use group::{element_order, enumerate_group, Abelianization, FiniteMatrixGroup, DEFAULT_CAP};
pub use matrix::Matrix;

#[cfg(test)]
mod tests;
