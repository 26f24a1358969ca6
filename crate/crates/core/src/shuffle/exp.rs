use std::str::FromStr;

use num_traits::Zero;

use super::basis::Part;
use super::functional::{Functional, Kind};
use super::product::{conv_inverse, product, solve_character};
use crate::error::{Error, Result};
use crate::rational::{self, Rational};

/// Which exponential: convolution (`exp*`), left half-shuffle (`E≺`) or right
/// half-shuffle (`E≻`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    Star,
    Left,
    Right,
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "star" => Ok(Mode::Star),
            "left" => Ok(Mode::Left),
            "right" => Ok(Mode::Right),
            _ => Err(Error::Parse(format!("unknown exponential mode {s:?}"))),
        }
    }
}

pub fn exp_map(mode: Mode, alpha: &Functional) -> Result<Functional> {
    alpha.require(Kind::InfChar)?;
    Ok(match mode {
        Mode::Star => exp_star(alpha),
        Mode::Left => exp_left(alpha),
        Mode::Right => exp_right(alpha),
    })
}

pub fn log_map(mode: Mode, phi: &Functional) -> Result<Functional> {
    phi.require(Kind::Character)?;
    Ok(match mode {
        Mode::Star => log_star(phi),
        Mode::Left => log_left(phi)?,
        Mode::Right => log_right(phi)?,
    })
}

/// `sum_n α^{*n}/n!`; `α^{*n}` vanishes below degree `n`.
fn exp_star(alpha: &Functional) -> Functional {
    let eps = Functional::counit(alpha.basis());
    let mut acc = eps.clone().into_general();
    let mut power = eps.into_general();
    for n in 1..=alpha.truncation() {
        power = product(&power, alpha, Part::Full, Kind::General);
        acc = &acc + &power.scale(&(rational::one() / rational::factorial(n)));
    }
    lift_words(&acc, Kind::Character)
}

fn log_star(phi: &Functional) -> Functional {
    let eps = Functional::counit(phi.basis());
    let d = (phi - &eps).into_general();
    let mut acc = Functional::zero(phi.basis()).into_general();
    let mut power = eps.into_general();
    for n in 1..=phi.truncation() {
        power = product(&power, &d, Part::Full, Kind::General);
        let c = rational::sign(n - 1) / rational::int(n as i64);
        acc = &acc + &power.scale(&c);
    }
    lift_words(&acc, Kind::InfChar)
}

fn lift_words(f: &Functional, kind: Kind) -> Functional {
    Functional::from_word_values(f.basis(), kind, &f.word_values())
}

/// Solves `Φ = ε + κ≺Φ` word by word.
fn exp_left(kappa: &Functional) -> Functional {
    let basis = kappa.basis().clone();
    let kv = kappa.values();
    solve_character(&basis, |i, phi| {
        let mut acc = Rational::zero();
        for t in basis.terms(i).iter().filter(|t| t.is_left) {
            let a = &kv[t.left as usize];
            if !a.is_zero() {
                acc += a * &phi[t.right as usize];
            }
        }
        acc
    })
}

/// Solves `Φ = ε + Φ≻β` word by word.
fn exp_right(beta: &Functional) -> Functional {
    let basis = beta.basis().clone();
    let bv = beta.values();
    solve_character(&basis, |i, phi| {
        let mut acc = Rational::zero();
        for t in basis.terms(i).iter().filter(|t| !t.is_left) {
            let b = &bv[t.right as usize];
            if !b.is_zero() {
                acc += &phi[t.left as usize] * b;
            }
        }
        acc
    })
}

/// `L≺(Φ) = (Φ - ε)≺Φ^{*-1}`.
fn log_left(phi: &Functional) -> Result<Functional> {
    let inv = conv_inverse(phi)?;
    let d = phi - &Functional::counit(phi.basis());
    Ok(product(&d, &inv, Part::Left, Kind::InfChar))
}

/// `L≻(Φ) = Φ^{*-1}≻(Φ - ε)`.
fn log_right(phi: &Functional) -> Result<Functional> {
    let inv = conv_inverse(phi)?;
    let d = phi - &Functional::counit(phi.basis());
    Ok(product(&inv, &d, Part::Right, Kind::InfChar))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn moments(ms: &[i64]) -> Functional {
        Functional::univariate_character(&ms.iter().map(|&m| int(m)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn zero_exponentiates_to_counit() {
        let z = Functional::univariate_infchar(&vec![int(0); 4]).unwrap();
        let eps = Functional::counit(z.basis());
        for mode in [Mode::Star, Mode::Left, Mode::Right] {
            assert_eq!(exp_map(mode, &z).unwrap(), eps);
        }
    }

    #[test]
    fn boolean_second_cumulant() {
        let phi = moments(&[3, 7, 2]);
        let b = log_map(Mode::Right, &phi).unwrap();
        assert_eq!(b.at_power(2).unwrap(), &int(7 - 9));
    }

    #[test]
    fn round_trips() {
        let phi = moments(&[1, -2, 3, 5, -1]);
        for mode in [Mode::Star, Mode::Left, Mode::Right] {
            let a = log_map(mode, &phi).unwrap();
            assert_eq!(a.kind(), Kind::InfChar);
            assert_eq!(exp_map(mode, &a).unwrap(), phi, "{mode:?}");
        }
    }

    #[test]
    fn kinds_are_enforced() {
        let phi = moments(&[1, 2]);
        assert!(exp_map(Mode::Star, &phi).is_err());
        let a = log_map(Mode::Star, &phi).unwrap();
        assert!(log_map(Mode::Left, &a).is_err());
    }
}
