//! Lowest-weight spaces B^ann, harmonic spaces, module closures and
//! annihilator kernels.

mod closure;
mod graded;
mod group;
mod harmonic;
mod kernel;

pub use closure::{module_closure, module_closure_with, ClosureOptions};
pub use graded::GradedBasis;
pub use group::{cyclic_negative_partials, negative_generators, GroupSpec};
pub use harmonic::{harmonic_space, harmonic_space_by_kernel, invariant_partials, jacobian};
pub use kernel::{annihilator_in, bann, bann_operators, bann_with, monomial_space, BannOptions};
pub(crate) use kernel::{joint_kernel, kernel_of_maps};
