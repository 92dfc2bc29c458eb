//! Exact rational linear algebra: echelon forms, nullspaces, spans.

mod matrix;
mod rational;

pub use matrix::{in_span, intersect, kernel_basis, rank, rref, span_basis, ExactMatrix};
pub use rational::{ParseRationalError, Rational};
pub(crate) use rational::{big_gcd, big_lcm};
