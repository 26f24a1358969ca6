//! Named cumulant families of a character or of a pair of characters.
//!
//! [`transforms`] computes them with half-shuffle exponentials and pre-Lie
//! operators; [`oracles`] recomputes them from moment-cumulant sums over
//! partitions, independently of the shuffle machinery.

mod family;
pub mod oracles;
pub(crate) mod partition_sum;
pub mod transforms;

pub use family::{CumulantFamily, CumulantFamilyJson, CumulantKind, PairState, PairStateJson};
pub use transforms::{
    cfree_cumulants, cfree_from_cmonotone, cmonotone_cumulants, cmonotone_from_cfree,
    cumulant_cross, cumulants_of, t_boolean, moments_of, t_boolean_shift, t_companion, t_monotone,
};
