//! Partitions, set partitions, standard tableaux and Newton's identities.

mod newton;
mod partition;
mod setpart;
mod tableau;

pub use newton::newton_f;
pub use partition::{partitions, syt_count, Partition};
pub use setpart::{set_partitions, SetPartition};
pub use tableau::{standard_tableaux, Tableau};
