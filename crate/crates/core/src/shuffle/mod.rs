//! The truncated dual of the double tensor Hopf algebra over a finite
//! alphabet: functionals, convolution and half-shuffle products, the three
//! exponential/logarithm pairs and the pre-Lie Magnus operators.
//!
//! All operations are exact modulo monomials of degree above the truncation.

mod basis;
mod exp;
mod functional;
mod prelie;
mod product;
pub mod random;
mod word;

pub use basis::{coproduct_terms, Basis, Part, MAX_COPRODUCT_TERMS};
pub use exp::{exp_map, log_map, Mode};
pub use functional::{Difference, Functional, FunctionalJson, Kind};
pub use prelie::{
    bernoulli, bernoulli_table, exp_r, magnus, magnus_inverse, omega_operator, pre_lie, r_iter,
    w_operator,
};
pub use product::{conjugate, conv_inverse, conv_inverse_neumann, convolve, half_shuffle};
pub use word::{Alphabet, BarMonomial, Word};
