//! Shared numerical substrate: grids with quadrature weights, arbitrary-node
//! finite-difference operators, and a dense complex eigensolver / linear
//! solver. Everything here is pure and reentrant; values are freely shareable
//! across threads.

mod diff;
mod eig;
mod grid;
mod matrix;

pub use diff::{
    active_nodes, derivative_matrix, derivative_matrix_split, fornberg_weights,
    one_sided_first_derivative, second_derivative_matrix, Bc, DiffOp, DEFAULT_STENCIL,
};
pub use eig::{eig_dense, solve_dense, solve_dense_multi, Eigen};
pub use grid::{Domain, Grid, QuadRule};
pub use matrix::CMatrix;
