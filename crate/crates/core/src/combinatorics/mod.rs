//! Partition families and the statistics that weight the moment-cumulant
//! formulas: non-crossing, irreducible, interval and monotone partitions,
//! nesting forests, tree factorials and the omega coefficients.

mod enumerate;
mod forest;
mod monotone;
mod omega;
mod partition;
mod table;

pub use enumerate::{
    enumerate, enumerate_with, interval_partitions, irreducible_partitions, monotone_partitions,
    nc_partitions, Enumeration, Family, Limits,
};
pub use forest::{
    classify, concat_components, monotone_count, nesting_forest, tree_factorial, Classification,
    Component, RootedForest,
};
pub use monotone::{linear_extensions, MonotonePartition};
pub use omega::{omega, omega_k};
pub use partition::{restrict, NoncrossingPartition, PartitionJson};
pub use table::{partition_table, PartitionData};
