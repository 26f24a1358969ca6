//! Partition-sum counterparts of the shuffle-side transforms.
//!
//! Every function here works word by word from moment-cumulant formulas
//! over non-crossing, interval or monotone partitions and never calls the
//! half-shuffle exponentials or logarithms, so agreement with
//! [`super::transforms`] is an independent check.

use num_traits::Zero;

use super::partition_sum::{by_depth, first_and_rest, monotone_terms, nc_terms, solve, Source};
use super::transforms::{infchar, inverse_tree_factorial};
use super::{CumulantFamily, CumulantKind, PairState};
use crate::combinatorics::PartitionData;
use crate::error::{Error, Result};
use crate::rational::{self, Rational};
use crate::shuffle::{Functional, Kind};

const UNKNOWN: usize = 0;

fn character(like: &Functional, words: &[Rational]) -> Functional {
    Functional::from_word_values(like.basis(), Kind::Character, words)
}

/// Moment-cumulant weight of a partition for a basic family, `None` when the
/// partition does not take part.
fn basic_weight(kind: &CumulantKind, pd: &PartitionData) -> Option<Rational> {
    match kind {
        CumulantKind::Free => Some(rational::one()),
        CumulantKind::Boolean => pd.partition.is_interval().then(rational::one),
        CumulantKind::Monotone => Some(inverse_tree_factorial(pd)),
        _ => None,
    }
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

/// Moments from free (sum over `NC(n)`), Boolean (over interval partitions)
/// or monotone cumulants (over `NC(n)` with weight `1/t(pi)!`).
pub fn moments_via_partitions(c: &CumulantFamily) -> Result<Functional> {
    require_basic(c.kind())?;
    let v = c.values();
    let words = solve(v.basis(), None, &[Source::Known(v)], |n| {
        nc_terms(n, |pd| {
            basic_weight(c.kind(), pd).map(|w| (w, first_and_rest(pd, 0, 0)))
        })
    });
    Ok(character(v, &words))
}

/// Free, Boolean or monotone cumulants by inverting the moment-cumulant
/// relation degree by degree.
pub fn cumulants_by_partitions(phi: &Functional, kind: CumulantKind) -> Result<CumulantFamily> {
    require_basic(&kind)?;
    phi.require(Kind::Character)?;
    let words = solve(phi.basis(), Some(phi), &[Source::Unknown], |n| {
        nc_terms(n, |pd| {
            basic_weight(&kind, pd).map(|w| (w, first_and_rest(pd, UNKNOWN, UNKNOWN)))
        })
    });
    CumulantFamily::new(kind, infchar(phi, &words))
}

/// c-free cumulants from the recursion
/// `Φ(w) = sum over NC(n) of prod_{outer} K prod_{inner} k'`, where `k'` are
/// the free cumulants of `Ψ`.
pub fn cfree_oracle(p: &PairState) -> Result<CumulantFamily> {
    let kp = cumulants_by_partitions(&p.psi, CumulantKind::Free)?;
    let sources = [Source::Unknown, Source::Known(kp.values())];
    let words = solve(p.phi.basis(), Some(&p.phi), &sources, |n| {
        nc_terms(n, |pd| Some((rational::one(), by_depth(pd, UNKNOWN, 1))))
    });
    CumulantFamily::new(CumulantKind::CFree, infchar(&p.phi, &words))
}

/// c-monotone cumulants from the recursion
/// `Φ(w) = sum over NC(n) of 1/t(pi)! prod_{outer} P prod_{inner} h'`, where
/// `h'` are the monotone cumulants of `Ψ`.
pub fn cmonotone_oracle(p: &PairState) -> Result<CumulantFamily> {
    let hp = cumulants_by_partitions(&p.psi, CumulantKind::Monotone)?;
    let sources = [Source::Unknown, Source::Known(hp.values())];
    let words = solve(p.phi.basis(), Some(&p.phi), &sources, |n| {
        nc_terms(n, |pd| Some((inverse_tree_factorial(pd), by_depth(pd, UNKNOWN, 1))))
    });
    CumulantFamily::new(CumulantKind::CMonotone, infchar(&p.phi, &words))
}

/// Boolean cumulants of `Φ` by inverting the interval-partition sum.
fn boolean_oracle(phi: &Functional) -> Result<Functional> {
    Ok(cumulants_by_partitions(phi, CumulantKind::Boolean)?.into_values())
}

/// c-monotone cumulants from `β(w) = sum over irreducible monotone
/// partitions of 1/|pi|! P(w_{pi_1}) prod_{j>1} ρ'(w_{pi_j})`, summing over
/// every labelling explicitly.
pub fn cmonotone_by_monotone_partitions(p: &PairState) -> Result<CumulantFamily> {
    let beta = boolean_oracle(&p.phi)?;
    let hp = cumulants_by_partitions(&p.psi, CumulantKind::Monotone)?;
    let sources = [Source::Unknown, Source::Known(hp.values())];
    let words = solve(beta.basis(), Some(&beta), &sources, |n| {
        monotone_terms(n, true, |pd, _| {
            let k = pd.partition.num_blocks();
            let c = rational::one() / rational::factorial(k);
            Some((c, first_and_rest(pd, UNKNOWN, 1)))
        })
    });
    CumulantFamily::new(CumulantKind::CMonotone, infchar(&beta, &words))
}

/// Evaluates `W_{ρ'}(P)` by the irreducible monotone partition sum.
pub fn w_rho_by_partitions(pc: &Functional, rho: &Functional) -> Result<Functional> {
    pc.check_compatible(rho)?;
    let sources = [Source::Known(pc), Source::Known(rho)];
    let words = solve(pc.basis(), None, &sources, |n| {
        monotone_terms(n, true, |pd, _| {
            let c = rational::one() / rational::factorial(pd.partition.num_blocks());
            Some((c, first_and_rest(pd, 0, 1)))
        })
    });
    Ok(infchar(pc, &words))
}

/// c-monotone cumulants by solving `W_{ρ'}(P) = β` one degree at a time:
/// `P ← β - (W_{ρ'}(P) - P)`, exact after `N` rounds since `W_{ρ'} - id`
/// raises degree.
pub fn cmonotone_by_inversion(p: &PairState) -> Result<CumulantFamily> {
    use crate::shuffle::{log_map, w_operator, Mode};
    let beta = log_map(Mode::Right, &p.phi)?;
    let rho = log_map(Mode::Star, &p.psi)?;
    let mut pc = beta.clone();
    for _ in 0..beta.truncation() {
        let w = w_operator(&rho, &pc)?;
        pc = &beta - &(&w - &pc);
    }
    CumulantFamily::new(CumulantKind::CMonotone, pc)
}

/// c-free cumulants from c-monotone ones:
/// `K(w) = sum over irreducible pi of (-1)^{|pi|-1}/t(pi)! P(w_{pi_1}) prod h'`.
pub fn cfree_from_cmonotone_partitions(p: &PairState) -> Result<CumulantFamily> {
    let pc = cmonotone_oracle(p)?;
    let hp = cumulants_by_partitions(&p.psi, CumulantKind::Monotone)?;
    let sources = [Source::Known(pc.values()), Source::Known(hp.values())];
    let words = solve(p.phi.basis(), None, &sources, |n| {
        nc_terms(n, |pd| {
            pd.partition.is_irreducible().then(|| {
                let c = rational::sign(pd.partition.num_blocks() - 1) * inverse_tree_factorial(pd);
                (c, first_and_rest(pd, 0, 1))
            })
        })
    });
    CumulantFamily::new(CumulantKind::CFree, infchar(&p.phi, &words))
}

/// c-monotone cumulants from c-free ones:
/// `P(w) = sum over irreducible pi of (-1)^{|pi|-1} ω(pi) K(w_{pi_1}) prod k'`.
pub fn cmonotone_from_cfree_partitions(p: &PairState) -> Result<CumulantFamily> {
    let k = cfree_oracle(p)?;
    let kp = cumulants_by_partitions(&p.psi, CumulantKind::Free)?;
    let sources = [Source::Known(k.values()), Source::Known(kp.values())];
    let words = solve(p.phi.basis(), None, &sources, |n| {
        nc_terms(n, |pd| {
            pd.omega.as_ref().map(|w| {
                let c = rational::sign(pd.partition.num_blocks() - 1) * w;
                (c, first_and_rest(pd, 0, 1))
            })
        })
    });
    CumulantFamily::new(CumulantKind::CMonotone, infchar(&p.phi, &words))
}

/// Right-iterated pre-Lie product `(..(α_1◁α_2)◁..)◁α_k` as a sum over
/// irreducible monotone partitions with `k` blocks, block labelled `j`
/// carrying `α_j`.
pub fn r_iter_by_partitions(alphas: &[&Functional]) -> Result<Functional> {
    let first = *alphas
        .first()
        .ok_or_else(|| Error::Domain("need at least one factor".into()))?;
    for a in alphas {
        first.check_compatible(a)?;
        a.require(Kind::InfChar)?;
    }
    let sources: Vec<Source> = alphas.iter().map(|a| Source::Known(a)).collect();
    let k = alphas.len();
    let words = solve(first.basis(), None, &sources, |n| {
        monotone_terms(n, true, |pd, labels| {
            (pd.partition.num_blocks() == k)
                .then(|| (rational::one(), labels.iter().map(|l| l - 1).collect()))
        })
    });
    Ok(infchar(first, &words))
}

/// `Φ^{*-1}≻α≺Φ` (or, with `inverse_left = false`, `Φ≻α≺Φ^{*-1}`) as a sum
/// over irreducible partitions: `α` on the block of 1, free cumulants of `Φ`
/// elsewhere (resp. Boolean cumulants with sign `(-1)^{|pi|-1}`).
pub fn conjugation_by_partitions(
    alpha: &Functional,
    phi: &Functional,
    inverse_left: bool,
) -> Result<Functional> {
    alpha.check_compatible(phi)?;
    alpha.require(Kind::InfChar)?;
    let kind = if inverse_left {
        CumulantKind::Free
    } else {
        CumulantKind::Boolean
    };
    let c = cumulants_by_partitions(phi, kind)?;
    let sources = [Source::Known(alpha), Source::Known(c.values())];
    let words = solve(alpha.basis(), None, &sources, |n| {
        nc_terms(n, |pd| {
            pd.partition.is_irreducible().then(|| {
                let k = pd.partition.num_blocks();
                let c = if inverse_left {
                    rational::one()
                } else {
                    rational::sign(k - 1)
                };
                (c, first_and_rest(pd, 0, 1))
            })
        })
    });
    Ok(infchar(alpha, &words))
}

/// t-Boolean cumulants by inverting `β = sum over irreducible pi of
/// t^{|pi|-1} b^(t)_pi`.
pub fn t_boolean_oracle(phi: &Functional, t: &Rational) -> Result<CumulantFamily> {
    let beta = boolean_oracle(phi)?;
    let words = solve(beta.basis(), Some(&beta), &[Source::Unknown], |n| {
        nc_terms(n, |pd| {
            pd.partition.is_irreducible().then(|| {
                let c = rational::pow(t, pd.partition.num_blocks() - 1);
                (c, first_and_rest(pd, UNKNOWN, UNKNOWN))
            })
        })
    });
    CumulantFamily::new(CumulantKind::TBoolean(t.clone()), infchar(&beta, &words))
}

fn parameter(c: &CumulantFamily, tmonotone: bool) -> Result<&Rational> {
    match (c.kind(), tmonotone) {
        (CumulantKind::TBoolean(t), false) | (CumulantKind::TMonotone(t), true) => Ok(t),
        (k, _) => Err(Error::Domain(format!("unexpected cumulant family {k}"))),
    }
}

/// Moments from t-Boolean cumulants: sum over `NC(n)` of
/// `t^{inner(pi)} b^(t)_pi`.
pub fn t_boolean_moments(c: &CumulantFamily) -> Result<Functional> {
    let t = parameter(c, false)?.clone();
    t_sum(c, move |pd| Some(rational::pow(&t, pd.inner_count())))
}

/// Boolean cumulants from t-monotone ones: sum over irreducible `pi` of
/// `t^{|pi|-1}/t(pi)! h^(t)_pi`.
pub fn t_monotone_to_boolean(c: &CumulantFamily) -> Result<Functional> {
    let t = parameter(c, true)?.clone();
    t_sum(c, move |pd| {
        pd.partition.is_irreducible().then(|| {
            rational::pow(&t, pd.partition.num_blocks() - 1) * inverse_tree_factorial(pd)
        })
    })
}

/// Moments from t-monotone cumulants: sum over `NC(n)` of
/// `t^{inner(pi)}/t(pi)! h^(t)_pi`.
pub fn t_monotone_moments(c: &CumulantFamily) -> Result<Functional> {
    let t = parameter(c, true)?.clone();
    let m = t_sum(c, move |pd| {
        Some(rational::pow(&t, pd.inner_count()) * inverse_tree_factorial(pd))
    })?;
    Ok(character(&m, &m.word_values()))
}

fn t_sum(c: &CumulantFamily, coeff: impl Fn(&PartitionData) -> Option<Rational>) -> Result<Functional> {
    let v = c.values();
    let words = solve(v.basis(), None, &[Source::Known(v)], |n| {
        nc_terms(n, |pd| {
            coeff(pd)
                .filter(|c| !c.is_zero())
                .map(|c| (c, first_and_rest(pd, 0, 0)))
        })
    });
    Ok(if matches!(c.kind(), CumulantKind::TBoolean(_)) {
        character(v, &words)
    } else {
        infchar(v, &words)
    })
}
