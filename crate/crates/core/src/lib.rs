//! Exact computations with moments, cumulants and additive convolutions of
//! non-commutative distributions, carried out in the dual of the double
//! tensor Hopf algebra and cross-checked against partition sums.

pub mod combinatorics;
pub mod convolutions;
pub mod cumulants;
pub mod error;
pub mod independence;
pub mod rational;
pub mod shuffle;
pub mod ts_expansion;
pub mod verify;

pub use combinatorics::{MonotonePartition, NoncrossingPartition, RootedForest};
pub use error::{Error, Result};
pub use rational::Rational;
pub use shuffle::{Alphabet, BarMonomial, Functional, Kind, Word};
