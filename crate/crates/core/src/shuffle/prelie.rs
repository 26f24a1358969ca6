use super::basis::Part;
use super::functional::{Functional, Kind};
use super::product::product;
use crate::error::{Error, Result};
use crate::rational::{self, Rational};

fn check_pair(alpha: &Functional, gamma: &Functional) -> Result<()> {
    alpha.check_compatible(gamma)?;
    alpha.require(Kind::InfChar)?;
    gamma.require(Kind::InfChar)
}

/// `α◁γ = α≺γ - γ≻α`.
pub fn pre_lie(alpha: &Functional, gamma: &Functional) -> Result<Functional> {
    check_pair(alpha, gamma)?;
    Ok(pre_lie_unchecked(alpha, gamma))
}

fn pre_lie_unchecked(alpha: &Functional, gamma: &Functional) -> Functional {
    let l = product(alpha, gamma, Part::Left, Kind::InfChar);
    let r = product(gamma, alpha, Part::Right, Kind::InfChar);
    &l - &r
}

/// Right iterations `α, α◁γ, (α◁γ)◁γ, ...` up to the `n`-th, inclusive.
fn iterates(alpha: &Functional, gamma: &Functional, n: usize) -> Vec<Functional> {
    let mut out = vec![alpha.clone()];
    for _ in 0..n {
        let next = pre_lie_unchecked(out.last().unwrap(), gamma);
        out.push(next);
    }
    out
}

/// `r_iter(α, γ, n) = (...(α◁γ)◁γ...)◁γ` with `n` factors of `γ`.
pub fn r_iter(alpha: &Functional, gamma: &Functional, n: usize) -> Result<Functional> {
    check_pair(alpha, gamma)?;
    Ok(iterates(alpha, gamma, n).pop().unwrap())
}

/// `sum_n c_n r_iter(α, γ, n)`; each iteration raises degree, so `n < N` suffices.
fn series(alpha: &Functional, gamma: &Functional, coeff: impl Fn(usize) -> Rational) -> Functional {
    let its = iterates(alpha, gamma, alpha.truncation().saturating_sub(1));
    let mut acc = Functional::zero(alpha.basis());
    for (n, it) in its.iter().enumerate() {
        let c = coeff(n);
        if c != rational::zero() {
            acc = &acc + &it.scale(&c);
        }
    }
    acc
}

/// `W_γ(α) = sum_n r_iter(α, γ, n) / (n+1)!`.
pub fn w_operator(gamma: &Functional, alpha: &Functional) -> Result<Functional> {
    check_pair(alpha, gamma)?;
    Ok(series(alpha, gamma, |n| rational::one() / rational::factorial(n + 1)))
}

/// `Ω_γ(α) = sum_n B_n/n! r_iter(α, γ, n)`, the inverse of `W_γ`.
pub fn omega_operator(gamma: &Functional, alpha: &Functional) -> Result<Functional> {
    check_pair(alpha, gamma)?;
    let b = bernoulli_table(alpha.truncation());
    Ok(series(alpha, gamma, |n| &b[n] / rational::factorial(n)))
}

/// `e^{r_γ}(α) = sum_n r_iter(α, γ, n) / n!`.
pub fn exp_r(gamma: &Functional, alpha: &Functional) -> Result<Functional> {
    check_pair(alpha, gamma)?;
    Ok(series(alpha, gamma, |n| rational::one() / rational::factorial(n)))
}

/// The pre-Lie Magnus element `Ω'(α)`, the solution of `Ω' = Ω_{Ω'}(α)`,
/// found by fixed-point iteration (each round fixes one more degree).
pub fn magnus(alpha: &Functional) -> Result<Functional> {
    alpha.require(Kind::InfChar)?;
    let mut current = alpha.clone();
    for _ in 0..alpha.truncation() {
        let next = omega_operator(&current, alpha)?;
        if next == current {
            return Ok(next);
        }
        current = next;
    }
    let check = omega_operator(&current, alpha)?;
    if check != current {
        return Err(Error::Domain("Magnus fixed point did not settle".into()));
    }
    Ok(current)
}

/// Compositional inverse of [`magnus`]: `W(α) = W_α(α)`.
pub fn magnus_inverse(alpha: &Functional) -> Result<Functional> {
    w_operator(alpha, alpha)
}

/// Bernoulli number `B_n` with `B_1 = -1/2`.
pub fn bernoulli(n: usize) -> Rational {
    bernoulli_table(n).pop().unwrap()
}

/// `B_0, ..., B_n` from `sum_{k<=m} C(m+1, k) B_k = 0`.
pub fn bernoulli_table(n: usize) -> Vec<Rational> {
    let mut b = vec![rational::one()];
    for m in 1..=n {
        let mut s = rational::zero();
        for (k, bk) in b.iter().enumerate() {
            s += rational::binomial(m + 1, k) * bk;
        }
        b.push(-s / rational::int(m as i64 + 1));
    }
    b
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn inf(vals: &[i64]) -> Functional {
        Functional::univariate_infchar(&vals.iter().map(|&v| int(v)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn bernoulli_values() {
        assert_eq!(bernoulli(0), int(1));
        assert_eq!(bernoulli(1), frac(-1, 2));
        assert_eq!(bernoulli(2), frac(1, 6));
        assert_eq!(bernoulli(3), int(0));
        assert_eq!(bernoulli(4), frac(-1, 30));
    }

    #[test]
    fn pre_lie_on_a3() {
        let alpha = inf(&[2, 3, 5]);
        let gamma = inf(&[7, 11, 13]);
        let p = pre_lie(&alpha, &gamma).unwrap();
        assert_eq!(p.at_power(3).unwrap(), &int(3 * 7));
        assert_eq!(p.at_power(2).unwrap(), &int(0));
        assert!(p.is_infchar());
    }

    #[test]
    fn w_on_a3() {
        let alpha = inf(&[2, 3, 5]);
        let gamma = inf(&[7, 11, 13]);
        let w = w_operator(&gamma, &alpha).unwrap();
        assert_eq!(w.at_power(3).unwrap(), &(int(5) + frac(1, 2) * int(3 * 7)));
        assert_eq!(omega_operator(&gamma, &w).unwrap(), alpha);
    }

    #[test]
    fn magnus_inverts_w() {
        let alpha = inf(&[1, -2, 3, 4, -5]);
        let m = magnus(&alpha).unwrap();
        assert_eq!(magnus_inverse(&m).unwrap(), alpha);
        assert_eq!(magnus(&magnus_inverse(&alpha).unwrap()).unwrap(), alpha);
    }

    #[test]
    fn kinds_are_enforced() {
        let alpha = inf(&[1, 2]);
        let phi = Functional::univariate_character(&[int(1), int(2)]).unwrap();
        assert!(pre_lie(&alpha, &phi).is_err());
        assert!(w_operator(&phi, &alpha).is_err());
    }
}
