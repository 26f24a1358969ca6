//! Cumulant transforms through the shuffle operators.

use super::partition_sum::{first_and_rest, nc_terms, solve, Source};
use super::{CumulantFamily, CumulantKind, PairState};
use crate::error::{Error, Result};
use crate::rational::{self, Rational};
use crate::shuffle::{
    conjugate, conv_inverse, exp_map, log_map, omega_operator, w_operator, Functional, Kind,
    Mode,
};

fn family(kind: CumulantKind, values: Functional) -> CumulantFamily {
    CumulantFamily::new_unchecked(kind, values)
}

fn require_basic(kind: &CumulantKind) -> Result<()> {
    if kind.is_basic() {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "expected free, boolean or monotone cumulants, got {kind}"
        )))
    }
}

/// Free (`L≺Φ`), Boolean (`L≻Φ`) or monotone (`log* Φ`) cumulants.
pub fn cumulants_of(phi: &Functional, kind: CumulantKind) -> Result<CumulantFamily> {
    require_basic(&kind)?;
    let mode = match kind {
        CumulantKind::Free => Mode::Left,
        CumulantKind::Boolean => Mode::Right,
        _ => Mode::Star,
    };
    Ok(family(kind, log_map(mode, phi)?))
}

/// Converts between free, Boolean and monotone cumulants by a single sum over
/// irreducible non-crossing partitions.
pub fn cumulant_cross(src: &CumulantFamily, to: CumulantKind) -> Result<CumulantFamily> {
    use CumulantKind::*;
    require_basic(src.kind())?;
    require_basic(&to)?;
    if *src.kind() == to {
        return Ok(src.clone());
    }
    let coeff: fn(&crate::combinatorics::PartitionData) -> Rational = match (src.kind(), &to) {
        (Free, Boolean) => |_| rational::one(),
        (Boolean, Free) => |pd| rational::sign(pd.partition.num_blocks() - 1),
        (Monotone, Boolean) => |pd| inverse_tree_factorial(pd),
        (Monotone, Free) => |pd| {
            rational::sign(pd.partition.num_blocks() - 1) * inverse_tree_factorial(pd)
        },
        (Boolean, Monotone) => |pd| pd.omega.clone().expect("irreducible"),
        (Free, Monotone) => |pd| {
            rational::sign(pd.partition.num_blocks() - 1) * pd.omega.clone().expect("irreducible")
        },
        _ => unreachable!(),
    };
    let v = src.values();
    let words = solve(v.basis(), None, &[Source::Known(v)], |n| {
        nc_terms(n, |pd| {
            pd.partition
                .is_irreducible()
                .then(|| (coeff(pd), first_and_rest(pd, 0, 0)))
        })
    });
    Ok(family(to, infchar(v, &words)))
}

pub(crate) fn inverse_tree_factorial(pd: &crate::combinatorics::PartitionData) -> Rational {
    rational::one() / Rational::from_integer(pd.tree_factorial.into())
}

pub(crate) fn infchar(like: &Functional, words: &[Rational]) -> Functional {
    Functional::from_word_values(like.basis(), Kind::InfChar, words)
}

/// c-free cumulants `K = Ψ≻β≺Ψ^{*-1}` with `β = L≻Φ`.
pub fn cfree_cumulants(p: &PairState) -> Result<CumulantFamily> {
    let beta = log_map(Mode::Right, &p.phi)?;
    let inv = conv_inverse(&p.psi)?;
    Ok(family(CumulantKind::CFree, conjugate(&p.psi, &beta, &inv)?))
}

/// c-monotone cumulants `P = Ω_{ρ'}(β)` with `β = L≻Φ` and `ρ' = log* Ψ`,
/// the solution of `W_{ρ'}(P) = β`.
pub fn cmonotone_cumulants(p: &PairState) -> Result<CumulantFamily> {
    let beta = log_map(Mode::Right, &p.phi)?;
    let rho = log_map(Mode::Star, &p.psi)?;
    Ok(family(CumulantKind::CMonotone, omega_operator(&rho, &beta)?))
}

/// c-free cumulants from c-monotone ones: `K = W_{-ρ'}(P)`.
pub fn cfree_from_cmonotone(p: &PairState) -> Result<CumulantFamily> {
    let pc = cmonotone_cumulants(p)?;
    let rho = log_map(Mode::Star, &p.psi)?;
    Ok(family(CumulantKind::CFree, w_operator(&-&rho, pc.values())?))
}

/// c-monotone cumulants from c-free ones: `P = Ω_{-ρ'}(K)`.
pub fn cmonotone_from_cfree(p: &PairState) -> Result<CumulantFamily> {
    let k = cfree_cumulants(p)?;
    let rho = log_map(Mode::Star, &p.psi)?;
    Ok(family(CumulantKind::CMonotone, omega_operator(&-&rho, k.values())?))
}

/// `Φ_t = E≻(t·L≻Φ)`, the second state of the t-deformed pair.
pub fn t_companion(phi: &Functional, t: &Rational) -> Result<Functional> {
    let beta = log_map(Mode::Right, phi)?;
    exp_map(Mode::Right, &beta.scale(t))
}

/// t-Boolean cumulants `Φ_t≻β≺Φ_t^{*-1}`, the c-free cumulants of `(Φ, Φ_t)`.
pub fn t_boolean(phi: &Functional, t: &Rational) -> Result<CumulantFamily> {
    let p = PairState::new(phi.clone(), t_companion(phi, t)?)?;
    let k = cfree_cumulants(&p)?.into_values();
    Ok(family(CumulantKind::TBoolean(t.clone()), k))
}

/// Moves t-Boolean cumulants from parameter `s` to `t`:
/// `b^(t)_n = sum over irreducible pi of (s-t)^{|pi|-1} b^(s)_pi`.
pub fn t_boolean_shift(src: &CumulantFamily, s: &Rational, t: &Rational) -> Result<CumulantFamily> {
    match src.kind() {
        CumulantKind::TBoolean(k) if k == s => {}
        CumulantKind::Boolean if s == &rational::zero() => {}
        CumulantKind::Free if s == &rational::one() => {}
        other => {
            return Err(Error::Domain(format!(
                "expected t-Boolean cumulants at t = {}, got {other}",
                rational::format(s)
            )))
        }
    }
    let d = s - t;
    let v = src.values();
    let words = solve(v.basis(), None, &[Source::Known(v)], |n| {
        nc_terms(n, |pd| {
            pd.partition.is_irreducible().then(|| {
                let c = rational::pow(&d, pd.partition.num_blocks() - 1);
                (c, first_and_rest(pd, 0, 0))
            })
        })
    });
    Ok(family(CumulantKind::TBoolean(t.clone()), infchar(v, &words)))
}

/// t-monotone cumulants, the c-monotone cumulants of `(Φ, Φ_t)`. They satisfy
/// `log* Φ_t = t·ρ^(t)`; at `t = 0` they are the Boolean cumulants.
pub fn t_monotone(phi: &Functional, t: &Rational) -> Result<CumulantFamily> {
    let p = PairState::new(phi.clone(), t_companion(phi, t)?)?;
    let h = cmonotone_cumulants(&p)?.into_values();
    Ok(family(CumulantKind::TMonotone(t.clone()), h))
}

/// Recovers the moments from a cumulant family. c-free and c-monotone
/// cumulants do not determine `Φ` without `Ψ` and are rejected.
pub fn moments_of(c: &CumulantFamily) -> Result<Functional> {
    let v = c.values();
    match c.kind() {
        CumulantKind::Free => exp_map(Mode::Left, v),
        CumulantKind::Boolean => exp_map(Mode::Right, v),
        CumulantKind::Monotone => exp_map(Mode::Star, v),
        CumulantKind::TBoolean(t) => {
            let beta = t_boolean_shift(c, t, &rational::zero())?;
            exp_map(Mode::Right, beta.values())
        }
        // P = h and ρ' = t·h in W_{ρ'}(P) = β.
        CumulantKind::TMonotone(t) => exp_map(Mode::Right, &w_operator(&v.scale(t), v)?),
        other => Err(Error::Domain(format!(
            "{other} cumulants need the second state to recover moments"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn moments(ms: &[i64]) -> Functional {
        Functional::univariate_character(&ms.iter().map(|&m| int(m)).collect::<Vec<_>>()).unwrap()
    }

    fn powers(f: &Functional) -> Vec<Rational> {
        f.power_values()
    }

    fn ints(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn moments_round_trip() {
        let phi = moments(&[1, 3, 2, 7, -1]);
        let t = frac(2, 3);
        for c in [
            cumulants_of(&phi, CumulantKind::Free).unwrap(),
            cumulants_of(&phi, CumulantKind::Boolean).unwrap(),
            cumulants_of(&phi, CumulantKind::Monotone).unwrap(),
            t_boolean(&phi, &t).unwrap(),
            t_monotone(&phi, &t).unwrap(),
        ] {
            assert_eq!(moments_of(&c).unwrap(), phi, "{}", c.kind());
        }
        let p = PairState::diagonal(phi).unwrap();
        assert!(moments_of(&cfree_cumulants(&p).unwrap()).is_err());
    }

    #[test]
    fn bernoulli() {
        let phi = moments(&[0, 1, 0, 1]);
        let free = cumulants_of(&phi, CumulantKind::Free).unwrap();
        let boolean = cumulants_of(&phi, CumulantKind::Boolean).unwrap();
        assert_eq!(powers(free.values()), ints(&[0, 1, 0, -1]));
        assert_eq!(powers(boolean.values()), ints(&[0, 1, 0, 0]));
        let diag = PairState::diagonal(phi.clone()).unwrap();
        assert_eq!(powers(cfree_cumulants(&diag).unwrap().values()), ints(&[0, 1, 0, -1]));
    }

    #[test]
    fn dirac() {
        let s = 3i64;
        let phi = moments(&[s, s * s, s * s * s, s.pow(4)]);
        for kind in [CumulantKind::Free, CumulantKind::Boolean, CumulantKind::Monotone] {
            let c = cumulants_of(&phi, kind).unwrap();
            assert_eq!(powers(c.values()), ints(&[s, 0, 0, 0]));
        }
    }

    #[test]
    fn cross_at_degree_three() {
        let phi = moments(&[2, -1, 5]);
        let k = cumulants_of(&phi, CumulantKind::Free).unwrap();
        let b = cumulants_of(&phi, CumulantKind::Boolean).unwrap();
        let h = cumulants_of(&phi, CumulantKind::Monotone).unwrap();
        let (k, b, h) = (powers(k.values()), powers(b.values()), powers(h.values()));
        assert_eq!(b[2], &k[2] + &k[1] * &k[0]);
        assert_eq!(b[2], &h[2] + frac(1, 2) * &h[1] * &h[0]);
        assert_eq!(h[2], &b[2] - frac(1, 2) * &b[1] * &b[0]);
    }

    #[test]
    fn cross_round_trips() {
        let phi = moments(&[1, 2, -3, 4, 1]);
        let kinds = [CumulantKind::Free, CumulantKind::Boolean, CumulantKind::Monotone];
        for from in &kinds {
            let src = cumulants_of(&phi, from.clone()).unwrap();
            for to in &kinds {
                let via = cumulant_cross(&src, to.clone()).unwrap();
                assert_eq!(via, cumulants_of(&phi, to.clone()).unwrap(), "{from} -> {to}");
            }
        }
    }

    #[test]
    fn degenerate_pairs() {
        let phi = moments(&[1, -2, 3, 1, 2]);
        let diag = PairState::diagonal(phi.clone()).unwrap();
        let eps = PairState::with_counit(phi.clone()).unwrap();
        let free = cumulants_of(&phi, CumulantKind::Free).unwrap().into_values();
        let boolean = cumulants_of(&phi, CumulantKind::Boolean).unwrap().into_values();
        let mono = cumulants_of(&phi, CumulantKind::Monotone).unwrap().into_values();
        assert_eq!(cfree_cumulants(&diag).unwrap().values(), &free);
        assert_eq!(cfree_cumulants(&eps).unwrap().values(), &boolean);
        assert_eq!(cmonotone_cumulants(&diag).unwrap().values(), &mono);
        assert_eq!(cmonotone_cumulants(&eps).unwrap().values(), &boolean);
        assert_eq!(cmonotone_from_cfree(&eps).unwrap().values(), &boolean);
    }

    #[test]
    fn t_endpoints() {
        let phi = moments(&[1, -2, 3, 1, 2]);
        let free = cumulants_of(&phi, CumulantKind::Free).unwrap().into_values();
        let boolean = cumulants_of(&phi, CumulantKind::Boolean).unwrap().into_values();
        let mono = cumulants_of(&phi, CumulantKind::Monotone).unwrap().into_values();
        assert_eq!(t_boolean(&phi, &int(0)).unwrap().values(), &boolean);
        assert_eq!(t_boolean(&phi, &int(1)).unwrap().values(), &free);
        assert_eq!(t_monotone(&phi, &int(0)).unwrap().values(), &boolean);
        assert_eq!(t_monotone(&phi, &int(1)).unwrap().values(), &mono);
    }

    #[test]
    fn t_boolean_degree_three() {
        let phi = moments(&[2, 3, -1]);
        let t = frac(2, 5);
        let b = powers(cumulants_of(&phi, CumulantKind::Boolean).unwrap().values());
        let bt = powers(t_boolean(&phi, &t).unwrap().values());
        assert_eq!(bt[2], &b[2] - &t * &b[1] * &b[0]);
    }

    #[test]
    fn shift_is_coherent() {
        let phi = moments(&[2, 3, -1, 4, 1]);
        let (s, t) = (frac(-1, 3), frac(5, 2));
        let bs = t_boolean(&phi, &s).unwrap();
        assert_eq!(t_boolean_shift(&bs, &s, &t).unwrap(), t_boolean(&phi, &t).unwrap());
        assert!(t_boolean_shift(&bs, &t, &s).is_err());
    }

    #[test]
    fn t_consistency() {
        let phi = moments(&[2, 3, -1, 4, 1]);
        let t = frac(-3, 4);
        let rho = log_map(Mode::Star, &t_companion(&phi, &t).unwrap()).unwrap();
        assert_eq!(rho, t_monotone(&phi, &t).unwrap().values().scale(&t));
    }

    #[test]
    fn cfree_cmonotone_relation_degree_three() {
        let phi = moments(&[2, 3, -1]);
        let psi = moments(&[-1, 2, 1]);
        let p = PairState::new(phi, psi.clone()).unwrap();
        let k = powers(cfree_cumulants(&p).unwrap().values());
        let h = powers(cmonotone_cumulants(&p).unwrap().values());
        let hp = powers(&log_map(Mode::Star, &psi).unwrap());
        assert_eq!(k[2], &h[2] - frac(1, 2) * &h[1] * &hp[0]);
        assert_eq!(cfree_from_cmonotone(&p).unwrap(), cfree_cumulants(&p).unwrap());
        assert_eq!(cmonotone_from_cfree(&p).unwrap(), cmonotone_cumulants(&p).unwrap());
    }
}
