use num_traits::{One, Zero};

use super::basis::{Basis, Part};
use super::functional::{Functional, Kind};
use crate::error::{Error, Result};
use crate::rational::{self, Rational};

#[inline]
fn eval_at(basis: &Basis, f: &[Rational], g: &[Rational], i: usize, part: Part) -> Rational {
    let mut acc = Rational::zero();
    for t in basis.terms(i) {
        match part {
            Part::Left if !t.is_left => continue,
            Part::Right if t.is_left => continue,
            _ => {}
        }
        let a = &f[t.left as usize];
        if a.is_zero() {
            continue;
        }
        let b = &g[t.right as usize];
        if b.is_zero() {
            continue;
        }
        acc += a * b;
    }
    acc
}

/// Product of two functionals through one part of the coproduct.
///
/// When `out` is a character or infinitesimal character kind, only word
/// values are computed and the rest is filled in from them; callers use this
/// when the result kind is known in advance.
pub(crate) fn product(f: &Functional, g: &Functional, part: Part, out: Kind) -> Functional {
    let basis = f.basis().clone();
    let (fv, gv) = (f.values(), g.values());
    match out {
        Kind::General => {
            let values = (0..basis.len())
                .map(|i| eval_at(&basis, fv, gv, i, part))
                .collect();
            Functional::general(&basis, values).expect("basis-sized")
        }
        _ => {
            let words: Vec<Rational> = basis
                .word_indices()
                .iter()
                .map(|&i| eval_at(&basis, fv, gv, i as usize, part))
                .collect();
            Functional::from_word_values(&basis, out, &words)
        }
    }
}

/// Convolution `f * g`. Characters convolve to characters.
pub fn convolve(f: &Functional, g: &Functional) -> Result<Functional> {
    f.check_compatible(g)?;
    let out = if f.kind() == Kind::Character && g.kind() == Kind::Character {
        Kind::Character
    } else {
        Kind::General
    };
    Ok(product(f, g, Part::Full, out))
}

/// Half-shuffle `f≺g` (`Part::Left`) or `f≻g` (`Part::Right`), evaluated on
/// every monomial. `Part::Full` gives the convolution.
pub fn half_shuffle(f: &Functional, g: &Functional, side: Part) -> Result<Functional> {
    f.check_compatible(g)?;
    Ok(product(f, g, side, Kind::General))
}

/// Fills a character degree by degree: `word` computes the value at a word
/// from the values of strictly lower degree; other monomials multiply out.
pub(crate) fn solve_character(
    basis: &std::sync::Arc<Basis>,
    mut word: impl FnMut(usize, &[Rational]) -> Rational,
) -> Functional {
    let mut values = vec![Rational::zero(); basis.len()];
    values[0] = Rational::one();
    for i in 1..basis.len() {
        let fs = basis.factors(i);
        values[i] = if fs.len() == 1 {
            word(i, &values)
        } else {
            fs.iter()
                .fold(Rational::one(), |acc, &w| acc * &values[w as usize])
        };
    }
    let mut f = Functional::general(basis, values).expect("basis-sized");
    f = f.with_kind_unchecked(Kind::Character);
    f
}

impl Functional {
    pub(crate) fn with_kind_unchecked(self, kind: Kind) -> Functional {
        let mut f = self;
        f.set_kind(kind);
        f
    }
}

fn require_unital(f: &Functional) -> Result<()> {
    if f.values()[0].is_one() {
        Ok(())
    } else {
        Err(Error::NonUnital(rational::format(&f.values()[0])))
    }
}

/// Convolution inverse of a character, solved word by word from `Φ * X = ε`.
pub fn conv_inverse(phi: &Functional) -> Result<Functional> {
    phi.require(Kind::Character)?;
    let basis = phi.basis().clone();
    let pv = phi.values();
    Ok(solve_character(&basis, |i, x| {
        let mut acc = Rational::zero();
        for t in basis.terms(i) {
            if t.left == 0 {
                continue;
            }
            let a = &pv[t.left as usize];
            if a.is_zero() {
                continue;
            }
            acc -= a * &x[t.right as usize];
        }
        acc
    }))
}

/// Convolution inverse of any unital functional by the graded Neumann series
/// `sum_k (ε - f)^{*k}`, which stops at `k = N`.
pub fn conv_inverse_neumann(f: &Functional) -> Result<Functional> {
    require_unital(f)?;
    let eps = Functional::counit(f.basis());
    let d = (&eps - f).into_general();
    let mut acc = eps.clone().into_general();
    let mut power = eps.into_general();
    for _ in 0..f.truncation() {
        power = product(&power, &d, Part::Full, Kind::General);
        acc = &acc + &power;
    }
    let kind = if f.kind() == Kind::Character {
        Kind::Character
    } else {
        Kind::General
    };
    Ok(acc.with_kind_unchecked(kind))
}

/// `left ≻ α ≺ right` for an infinitesimal character `α`, returned as an
/// infinitesimal character. Meant for `right = left^{*-1}` or
/// `left = right^{*-1}`, where the result is known to be infinitesimal.
pub fn conjugate(left: &Functional, alpha: &Functional, right: &Functional) -> Result<Functional> {
    left.check_compatible(alpha)?;
    alpha.check_compatible(right)?;
    alpha.require(Kind::InfChar)?;
    let inner = product(alpha, right, Part::Left, Kind::General);
    Ok(product(left, &inner, Part::Right, Kind::InfChar))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;
    use crate::shuffle::word::Alphabet;

    fn moments(ms: &[i64]) -> Functional {
        Functional::univariate_character(&ms.iter().map(|&m| int(m)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn counit_is_a_unit() {
        let f = moments(&[2, -1, 3]);
        let eps = Functional::counit(f.basis());
        assert_eq!(convolve(&eps, &f).unwrap(), f);
        assert_eq!(convolve(&f, &eps).unwrap(), f);
    }

    #[test]
    fn inverse_of_all_ones() {
        let f = moments(&[1, 1, 1, 1]);
        let inv = conv_inverse(&f).unwrap();
        assert_eq!(inv.at("a").unwrap(), &int(-1));
        let eps = Functional::counit(f.basis());
        assert_eq!(convolve(&f, &inv).unwrap(), eps);
        assert_eq!(convolve(&inv, &f).unwrap(), eps);
        assert_eq!(conv_inverse_neumann(&f).unwrap(), inv);
        assert_eq!(conv_inverse(&inv).unwrap(), f);
    }

    #[test]
    fn inverse_needs_a_unital_input() {
        let f = moments(&[1, 2]);
        let g = f.scale(&int(2));
        assert!(matches!(conv_inverse_neumann(&g), Err(Error::NonUnital(_))));
        assert!(matches!(conv_inverse(&g), Err(Error::WrongKind { .. })));
    }

    #[test]
    fn mismatched_truncations() {
        let f = moments(&[1, 2]);
        let g = moments(&[1, 2, 3]);
        assert!(matches!(convolve(&f, &g), Err(Error::Mismatch(_))));
        let b = Basis::get(&Alphabet::first(2), 2).unwrap();
        assert!(convolve(&f, &Functional::counit(&b)).is_err());
    }

    #[test]
    fn halves_add_up() {
        let f = moments(&[1, 2, 5]).into_general();
        let g = moments(&[3, -1, 4]);
        let l = half_shuffle(&f, &g, Part::Left).unwrap();
        let r = half_shuffle(&f, &g, Part::Right).unwrap();
        assert_eq!(&l + &r, convolve(&f, &g).unwrap());
    }
}
