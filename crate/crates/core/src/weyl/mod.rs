//! The Weyl algebra: differential operators acting on polynomials.

mod diffop;
mod group;
mod power;

pub use diffop::DiffOp;
pub use group::{group_act, weight_residue, GroupAction, GroupElement};
pub use power::{
    euler, jm_apply, nabla_falling, nabla_power_op, power_op, power_sum_d, power_sum_nabla, power_sum_x,
    stirling2,
};
