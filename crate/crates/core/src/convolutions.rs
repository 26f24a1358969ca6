//! Additive convolutions of characters and of pairs of characters.

use std::str::FromStr;

use crate::cumulants::{cfree_cumulants, PairState};
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::shuffle::{
    conjugate, conv_inverse, convolve, exp_map, exp_r, log_map, Functional, Kind, Mode,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Additive {
    Free,
    Boolean,
    Monotone,
}

impl FromStr for Additive {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "free" => Ok(Additive::Free),
            "boolean" => Ok(Additive::Boolean),
            "monotone" => Ok(Additive::Monotone),
            _ => Err(Error::Parse(format!("unknown convolution {s:?}"))),
        }
    }
}

fn characters(a: &Functional, b: &Functional) -> Result<()> {
    a.check_compatible(b)?;
    a.require(Kind::Character)?;
    b.require(Kind::Character)
}

/// Free `E≺(κ₁+κ₂)`, Boolean `E≻(β₁+β₂)` or monotone `Φ₁*Φ₂`.
pub fn additive_convolve(f1: &Functional, f2: &Functional, kind: Additive) -> Result<Functional> {
    characters(f1, f2)?;
    let sum_in = |mode| -> Result<Functional> {
        let a = log_map(mode, f1)?;
        let b = log_map(mode, f2)?;
        exp_map(mode, &(&a + &b))
    };
    match kind {
        Additive::Free => sum_in(Mode::Left),
        Additive::Boolean => sum_in(Mode::Right),
        Additive::Monotone => convolve(f1, f2),
    }
}

/// c-free convolution: `Ψ = Ψ₁⊞Ψ₂` and `Φ = E≻(Ψ^{*-1}≻(K₁+K₂)≺Ψ)`.
pub fn cfree_convolve(p1: &PairState, p2: &PairState) -> Result<PairState> {
    characters(&p1.phi, &p2.phi)?;
    let psi = additive_convolve(&p1.psi, &p2.psi, Additive::Free)?;
    let k = &cfree_cumulants(p1)?.into_values() + &cfree_cumulants(p2)?.into_values();
    let inv = conv_inverse(&psi)?;
    let phi = exp_map(Mode::Right, &conjugate(&inv, &k, &psi)?)?;
    PairState::new(phi, psi)
}

/// c-monotone convolution: `Ψ = Ψ₁*Ψ₂` and `Φ = E≻(β₂ + Ψ₂^{*-1}≻β₁≺Ψ₂)`.
pub fn cmonotone_convolve(p1: &PairState, p2: &PairState) -> Result<PairState> {
    characters(&p1.phi, &p2.phi)?;
    let psi = convolve(&p1.psi, &p2.psi)?;
    let b1 = log_map(Mode::Right, &p1.phi)?;
    let b2 = log_map(Mode::Right, &p2.phi)?;
    let inv = conv_inverse(&p2.psi)?;
    let phi = exp_map(Mode::Right, &(&b2 + &conjugate(&inv, &b1, &p2.psi)?))?;
    PairState::new(phi, psi)
}

/// `p * p * ... * p` with `m ≥ 1` factors.
pub fn cmonotone_power(p: &PairState, m: usize) -> Result<PairState> {
    if m == 0 {
        return Err(Error::Domain("the power must be at least 1".into()));
    }
    let mut acc = p.clone();
    for _ in 1..m {
        acc = cmonotone_convolve(&acc, p)?;
    }
    Ok(acc)
}

/// Orthogonal convolution `Φ⊢Ψ = E≻(Ψ^{*-1}≻β≺Ψ)` with `β = L≻Φ`.
pub fn orthogonal(phi: &Functional, psi: &Functional) -> Result<Functional> {
    characters(phi, psi)?;
    let beta = log_map(Mode::Right, phi)?;
    let inv = conv_inverse(psi)?;
    exp_map(Mode::Right, &conjugate(&inv, &beta, psi)?)
}

/// The same product written as `E≻(e^{r_{◁ρ'}}(β))` with `ρ' = log* Ψ`.
pub fn orthogonal_via_pre_lie(phi: &Functional, psi: &Functional) -> Result<Functional> {
    characters(phi, psi)?;
    let beta = log_map(Mode::Right, phi)?;
    let rho = log_map(Mode::Star, psi)?;
    exp_map(Mode::Right, &exp_r(&rho, &beta)?)
}

/// Subordination `Ψ₂⊳Ψ₁ = E≺(Ψ₁^{*-1}≻α₂≺Ψ₁)` with `α₂ = L≺Ψ₂`, so that
/// `Ψ₁⊞Ψ₂ = Ψ₁*(Ψ₂⊳Ψ₁)`.
pub fn subordination(psi2: &Functional, psi1: &Functional) -> Result<Functional> {
    characters(psi1, psi2)?;
    let alpha = log_map(Mode::Left, psi2)?;
    let inv = conv_inverse(psi1)?;
    exp_map(Mode::Left, &conjugate(&inv, &alpha, psi1)?)
}

/// Which logarithm the Belinschi–Nica map is computed from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BnPath {
    /// `E≺(E≺(tκ)^{*-1}≻κ≺E≺(tκ))`.
    Free,
    /// `E≻(E≺(tβ)^{*-1}≻β≺E≺(tβ))`.
    Boolean,
}

/// The Belinschi–Nica map `B_t`.
pub fn belinschi_nica(phi: &Functional, t: &Rational) -> Result<Functional> {
    belinschi_nica_via(phi, t, BnPath::Free)
}

pub fn belinschi_nica_via(phi: &Functional, t: &Rational, path: BnPath) -> Result<Functional> {
    phi.require(Kind::Character)?;
    let mode = match path {
        BnPath::Free => Mode::Left,
        BnPath::Boolean => Mode::Right,
    };
    let c = log_map(mode, phi)?;
    let g = exp_map(Mode::Left, &c.scale(t))?;
    let inv = conv_inverse(&g)?;
    exp_map(mode, &conjugate(&inv, &c, &g)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn moments(ms: &[i64]) -> Functional {
        Functional::univariate_character(&ms.iter().map(|&m| int(m)).collect::<Vec<_>>()).unwrap()
    }

    fn dirac(s: &Rational, n: usize) -> Functional {
        let ms: Vec<Rational> = (1..=n).map(|k| crate::rational::pow(s, k)).collect();
        Functional::univariate_character(&ms).unwrap()
    }

    #[test]
    fn bernoulli_spot_values() {
        let b = moments(&[0, 1, 0, 1]);
        let m4 = |k| additive_convolve(&b, &b, k).unwrap().at("aaaa").unwrap().clone();
        assert_eq!(m4(Additive::Free), int(6));
        assert_eq!(m4(Additive::Boolean), int(4));
        assert_eq!(m4(Additive::Monotone), int(5));
    }

    #[test]
    fn diracs_add() {
        let (s, t) = (frac(2, 3), frac(-5, 2));
        let sum = dirac(&(&s + &t), 6);
        let (ds, dt) = (dirac(&s, 6), dirac(&t, 6));
        for k in [Additive::Free, Additive::Boolean, Additive::Monotone] {
            assert_eq!(additive_convolve(&ds, &dt, k).unwrap(), sum);
        }
        let ps = PairState::diagonal(ds.clone()).unwrap();
        let pt = PairState::new(dt.clone(), dirac(&frac(1, 1), 6)).unwrap();
        assert_eq!(cmonotone_convolve(&ps, &pt).unwrap().phi, sum);
        assert_eq!(cfree_convolve(&ps, &pt).unwrap().phi, sum);
        for t in [frac(0, 1), frac(3, 2)] {
            assert_eq!(belinschi_nica(&ds, &t).unwrap(), ds);
        }
    }

    #[test]
    fn example_collapses() {
        let phi = moments(&[1, 2, -1, 3, 1]);
        let psi = moments(&[-1, 1, 2, 0, 2]);
        let lam = moments(&[2, 2, 1, -1, 1]);
        let eps = Functional::counit(phi.basis());
        let mono = convolve(&phi, &psi).unwrap();
        let out = cmonotone_convolve(
            &PairState::diagonal(phi.clone()).unwrap(),
            &PairState::diagonal(psi.clone()).unwrap(),
        )
        .unwrap();
        assert_eq!((out.phi, out.psi), (mono.clone(), mono));
        let out = cmonotone_convolve(
            &PairState::with_counit(phi.clone()).unwrap(),
            &PairState::with_counit(psi.clone()).unwrap(),
        )
        .unwrap();
        let boolean = additive_convolve(&phi, &psi, Additive::Boolean).unwrap();
        assert_eq!((out.phi, out.psi), (boolean, eps.clone()));
        let out = cmonotone_convolve(
            &PairState::new(phi.clone(), lam.clone()).unwrap(),
            &PairState::new(eps, psi.clone()).unwrap(),
        )
        .unwrap();
        assert_eq!(out.phi, orthogonal(&phi, &psi).unwrap());
        assert_eq!(out.psi, convolve(&lam, &psi).unwrap());
    }

    #[test]
    fn orthogonal_and_subordination() {
        let phi = moments(&[1, 2, -1, 3, 1]);
        let psi = moments(&[-1, 1, 2, 0, 2]);
        let eps = Functional::counit(phi.basis());
        let o = orthogonal(&phi, &psi).unwrap();
        assert_eq!(o, orthogonal_via_pre_lie(&phi, &psi).unwrap());
        assert_eq!(orthogonal(&phi, &eps).unwrap(), phi);
        assert_eq!(orthogonal(&eps, &psi).unwrap(), eps);
        let decomposed = additive_convolve(&o, &psi, Additive::Boolean).unwrap();
        assert_eq!(decomposed, convolve(&phi, &psi).unwrap());
        let sub = subordination(&psi, &phi).unwrap();
        assert_eq!(
            convolve(&phi, &sub).unwrap(),
            additive_convolve(&phi, &psi, Additive::Free).unwrap()
        );
    }

    #[test]
    fn cfree_degenerate() {
        let phi = moments(&[1, 2, -1, 3]);
        let psi = moments(&[-1, 1, 2, 0]);
        let p1 = PairState::new(phi.clone(), psi.clone()).unwrap();
        let unit = PairState::diagonal(Functional::counit(phi.basis())).unwrap();
        assert_eq!(cfree_convolve(&p1, &unit).unwrap(), p1);
        let d = cfree_convolve(
            &PairState::diagonal(phi.clone()).unwrap(),
            &PairState::diagonal(psi.clone()).unwrap(),
        )
        .unwrap();
        let free = additive_convolve(&phi, &psi, Additive::Free).unwrap();
        assert_eq!((d.phi, d.psi), (free.clone(), free));
    }

    #[test]
    fn belinschi_nica_paths() {
        let phi = moments(&[1, 2, -1, 3, 1]);
        let (s, t) = (frac(1, 3), frac(3, 4));
        let bt = belinschi_nica(&phi, &t).unwrap();
        assert_eq!(bt, belinschi_nica_via(&phi, &t, BnPath::Boolean).unwrap());
        assert_eq!(belinschi_nica(&phi, &int(0)).unwrap(), phi);
        let beta = log_map(Mode::Right, &phi).unwrap();
        assert_eq!(crate::cumulants::t_boolean(&bt, &t).unwrap().values(), &beta);
        assert_eq!(
            belinschi_nica(&belinschi_nica(&phi, &t).unwrap(), &s).unwrap(),
            belinschi_nica(&phi, &(&s + &t)).unwrap()
        );
    }
}
