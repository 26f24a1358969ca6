//! Mixed moments of two variables evaluated straight from the monotone and
//! c-monotone independence rules, without any cumulant machinery.

use std::fmt;

use num_traits::{One, Zero};
use rand::Rng;

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::shuffle::Functional;

/// A univariate moment sequence `m_0 = 1, m_1, ..., m_N`.
#[derive(Clone, Debug, PartialEq)]
pub struct Moments(Vec<Rational>);

impl Moments {
    /// From `(m_1, ..., m_N)`.
    pub fn new(ms: &[Rational]) -> Self {
        let mut v = Vec::with_capacity(ms.len() + 1);
        v.push(Rational::one());
        v.extend_from_slice(ms);
        Moments(v)
    }

    /// The values `Φ(a^n)` of a character.
    pub fn of(f: &Functional) -> Self {
        Self::new(&f.power_values())
    }

    pub fn degree(&self) -> usize {
        self.0.len() - 1
    }

    pub fn get(&self, n: usize) -> Result<&Rational> {
        self.0.get(n).ok_or(Error::DegreeOverflow {
            degree: n,
            truncation: self.degree(),
        })
    }
}

/// Moments `φ` and `ψ` of one variable.
#[derive(Clone, Debug, PartialEq)]
pub struct PairMoments {
    pub phi: Moments,
    pub psi: Moments,
}

impl PairMoments {
    pub fn of(p: &crate::cumulants::PairState) -> Self {
        PairMoments {
            phi: Moments::of(&p.phi),
            psi: Moments::of(&p.psi),
        }
    }
}

/// A product `x_{i_1}^{p_1} ... x_{i_r}^{p_r}` of powers of two variables,
/// tags in `{1, 2}`, adjacent tags distinct.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlternatingWord(Vec<(u8, usize)>);

impl AlternatingWord {
    pub fn new(factors: Vec<(u8, usize)>) -> Result<Self> {
        for (i, &(tag, p)) in factors.iter().enumerate() {
            if !(1..=2).contains(&tag) || p == 0 {
                return Err(Error::MalformedWord(format!("bad factor ({tag}, {p})")));
            }
            if i > 0 && factors[i - 1].0 == tag {
                return Err(Error::MalformedWord("adjacent factors share a tag".into()));
            }
        }
        Ok(AlternatingWord(factors))
    }

    /// Merges a tag sequence such as `[1, 1, 2, 1]` into alternating form.
    pub fn from_tags(tags: &[u8]) -> Result<Self> {
        let mut factors: Vec<(u8, usize)> = Vec::new();
        for &t in tags {
            match factors.last_mut() {
                Some((last, p)) if *last == t => *p += 1,
                _ => factors.push((t, 1)),
            }
        }
        Self::new(factors)
    }

    pub fn factors(&self) -> &[(u8, usize)] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|f| f.1).sum()
    }

    /// Drops factor `j`, merging the neighbours it separated.
    fn without(&self, j: usize) -> AlternatingWord {
        let mut out: Vec<(u8, usize)> = Vec::with_capacity(self.0.len());
        for (i, &f) in self.0.iter().enumerate() {
            if i == j {
                continue;
            }
            match out.last_mut() {
                Some((tag, p)) if *tag == f.0 => *p += f.1,
                _ => out.push(f),
            }
        }
        AlternatingWord(out)
    }

    fn slice(&self, range: std::ops::Range<usize>) -> AlternatingWord {
        AlternatingWord(self.0[range].to_vec())
    }

    /// Positions of tag-2 factors: with two variables every one is a peak.
    fn peaks(&self) -> Vec<usize> {
        (0..self.0.len()).filter(|&i| self.0[i].0 == 2).collect()
    }
}

impl fmt::Display for AlternatingWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (tag, p) in &self.0 {
            let x = if *tag == 1 { 'a' } else { 'b' };
            if *p == 1 {
                write!(f, "{x}")?;
            } else {
                write!(f, "{x}^{p}")?;
            }
        }
        Ok(())
    }
}

/// How to choose among several admissible peaks.
pub enum PeakOrder<'a> {
    Leftmost,
    Random(&'a mut dyn rand::RngCore),
}

impl PeakOrder<'_> {
    fn pick(&mut self, peaks: &[usize]) -> usize {
        match self {
            PeakOrder::Leftmost => peaks[0],
            PeakOrder::Random(rng) => peaks[rng.gen_range(0..peaks.len())],
        }
    }
}

fn single(m1: &Moments, m2: &Moments, tag: u8, p: usize) -> Result<Rational> {
    Ok(if tag == 1 { m1.get(p)? } else { m2.get(p)? }.clone())
}

/// `φ(w)` for `a` (tag 1) monotone independent from `b` (tag 2), `b` on top:
/// `φ(..a b^q a..) = φ(b^q) φ(..a a..)`.
pub fn monotone_mixed_moment(nu1: &Moments, nu2: &Moments, w: &AlternatingWord) -> Result<Rational> {
    monotone_with(nu1, nu2, w, &mut PeakOrder::Leftmost)
}

pub fn monotone_with(
    nu1: &Moments,
    nu2: &Moments,
    w: &AlternatingWord,
    order: &mut PeakOrder<'_>,
) -> Result<Rational> {
    let mut w = w.clone();
    let mut acc = Rational::one();
    loop {
        let peaks = w.peaks();
        if peaks.is_empty() {
            break;
        }
        let j = order.pick(&peaks);
        acc *= nu2.get(w.0[j].1)?;
        w = w.without(j);
    }
    match w.0.as_slice() {
        [] => Ok(acc),
        [(_, p)] => Ok(acc * nu1.get(*p)?),
        _ => unreachable!("only tag-1 factors remain"),
    }
}

/// `φ(w)` for c-monotone `(a, b)` with respect to `(φ, ψ)`, `b` on top.
///
/// A leading or trailing `b`-factor splits off as `φ(b^q) φ(rest)`; an interior
/// one contributes `φ(left)(φ(b^q) - ψ(b^q))φ(right) + ψ(b^q)φ(left right)`.
pub fn cmonotone_mixed_moment(
    p1: &PairMoments,
    p2: &PairMoments,
    w: &AlternatingWord,
) -> Result<Rational> {
    cmonotone_with(p1, p2, w, &mut PeakOrder::Leftmost)
}

pub fn cmonotone_with(
    p1: &PairMoments,
    p2: &PairMoments,
    w: &AlternatingWord,
    order: &mut PeakOrder<'_>,
) -> Result<Rational> {
    let f = &w.0;
    match f.len() {
        0 => return Ok(Rational::one()),
        1 => return single(&p1.phi, &p2.phi, f[0].0, f[0].1),
        _ => {}
    }
    let j = order.pick(&w.peaks());
    let q = f[j].1;
    let phi_q = p2.phi.get(q)?;
    if j == 0 || j == f.len() - 1 {
        let rest = w.without(j);
        return Ok(phi_q * cmonotone_with(p1, p2, &rest, order)?);
    }
    let psi_q = p2.psi.get(q)?;
    let mut acc = Rational::zero();
    let d = phi_q - psi_q;
    if !d.is_zero() {
        let left = cmonotone_with(p1, p2, &w.slice(0..j), order)?;
        let right = cmonotone_with(p1, p2, &w.slice(j + 1..f.len()), order)?;
        acc += d * left * right;
    }
    if !psi_q.is_zero() {
        acc += psi_q * cmonotone_with(p1, p2, &w.without(j), order)?;
    }
    Ok(acc)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IndependenceMode {
    Monotone,
    CMonotone,
}

/// `φ((a+b)^n)`, summed over all `2^n` words in `a` and `b`.
pub fn sum_moments(
    p1: &PairMoments,
    p2: &PairMoments,
    mode: IndependenceMode,
    n: usize,
) -> Result<Rational> {
    sum_moments_with(p1, p2, mode, n, &mut PeakOrder::Leftmost)
}

pub fn sum_moments_with(
    p1: &PairMoments,
    p2: &PairMoments,
    mode: IndependenceMode,
    n: usize,
    order: &mut PeakOrder<'_>,
) -> Result<Rational> {
    let limit = p1.phi.degree().min(p2.phi.degree());
    if n > limit {
        return Err(Error::DegreeOverflow {
            degree: n,
            truncation: limit,
        });
    }
    if n >= usize::BITS as usize - 1 {
        return Err(Error::Domain(format!("2^{n} words is too many")));
    }
    let mut acc = Rational::zero();
    let mut tags = vec![0u8; n];
    for mask in 0..1usize << n {
        for (i, t) in tags.iter_mut().enumerate() {
            *t = if mask >> i & 1 == 0 { 1 } else { 2 };
        }
        let w = AlternatingWord::from_tags(&tags)?;
        acc += match mode {
            IndependenceMode::Monotone => monotone_with(&p1.phi, &p2.phi, &w, order)?,
            IndependenceMode::CMonotone => cmonotone_with(p1, p2, &w, order)?,
        };
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn ms(xs: &[i64]) -> Moments {
        Moments::new(&xs.iter().map(|&x| int(x)).collect::<Vec<_>>())
    }

    fn word(f: &[(u8, usize)]) -> AlternatingWord {
        AlternatingWord::new(f.to_vec()).unwrap()
    }

    #[test]
    fn words() {
        let w = AlternatingWord::from_tags(&[1, 1, 2, 1]).unwrap();
        assert_eq!(w.factors(), &[(1, 2), (2, 1), (1, 1)]);
        assert_eq!(w.to_string(), "a^2ba");
        assert_eq!(w.without(1).factors(), &[(1, 3)]);
        assert!(AlternatingWord::new(vec![(1, 1), (1, 2)]).is_err());
        assert!(AlternatingWord::new(vec![(3, 1)]).is_err());
    }

    #[test]
    fn monotone_rules() {
        let (n1, n2) = (ms(&[2, 3, 5, 7, 11]), ms(&[-1, 4, 6, 8, 10]));
        let w = word(&[(1, 1), (2, 2), (1, 2)]);
        assert_eq!(monotone_mixed_moment(&n1, &n2, &w).unwrap(), int(4 * 5));
        assert_eq!(monotone_mixed_moment(&n1, &n2, &word(&[(2, 3)])).unwrap(), int(6));
    }

    #[test]
    fn cmonotone_rules() {
        let p1 = PairMoments { phi: ms(&[2, 3, 5, 7]), psi: ms(&[1, 1, 1, 1]) };
        let p2 = PairMoments { phi: ms(&[-1, 4, 6, 8]), psi: ms(&[3, 2, 0, 1]) };
        let w = word(&[(2, 2), (1, 1)]);
        assert_eq!(cmonotone_mixed_moment(&p1, &p2, &w).unwrap(), int(4 * 2));
        let w = word(&[(1, 1), (2, 1), (1, 2)]);
        let expect = int(2) * (int(-1) - int(3)) * int(3) + int(3) * int(5);
        assert_eq!(cmonotone_mixed_moment(&p1, &p2, &w).unwrap(), expect);
    }

    #[test]
    fn bernoulli_sum() {
        let b = ms(&[0, 1, 0, 1]);
        let p = PairMoments { phi: b.clone(), psi: b };
        assert_eq!(sum_moments(&p, &p, IndependenceMode::Monotone, 4).unwrap(), int(5));
        assert_eq!(sum_moments(&p, &p, IndependenceMode::CMonotone, 4).unwrap(), int(5));
        assert!(sum_moments(&p, &p, IndependenceMode::Monotone, 5).is_err());
    }

    #[test]
    fn diracs() {
        let (s, t) = (frac(1, 2), frac(-3, 1));
        let d = |x: &Rational| Moments::new(&(1..=5).map(|k| crate::rational::pow(x, k)).collect::<Vec<_>>());
        let p1 = PairMoments { phi: d(&s), psi: ms(&[1, 2, 3, 4, 5]) };
        let p2 = PairMoments { phi: d(&t), psi: ms(&[0, 1, 0, 1, 0]) };
        for mode in [IndependenceMode::Monotone, IndependenceMode::CMonotone] {
            for n in 1..=5 {
                assert_eq!(
                    sum_moments(&p1, &p2, mode, n).unwrap(),
                    crate::rational::pow(&(&s + &t), n)
                );
            }
        }
    }

    #[test]
    fn peak_order_does_not_matter() {
        let p1 = PairMoments { phi: ms(&[2, 3, 5, 7, 1]), psi: ms(&[1, -1, 1, 2, 1]) };
        let p2 = PairMoments { phi: ms(&[-1, 4, 6, 8, 2]), psi: ms(&[3, 2, 0, 1, 5]) };
        let mut rng = crate::shuffle::random::seeded(4);
        for mode in [IndependenceMode::Monotone, IndependenceMode::CMonotone] {
            let base = sum_moments(&p1, &p2, mode, 5).unwrap();
            for _ in 0..5 {
                let v = sum_moments_with(&p1, &p2, mode, 5, &mut PeakOrder::Random(&mut rng)).unwrap();
                assert_eq!(v, base);
            }
        }
    }

    #[test]
    fn matches_shuffle_convolutions() {
        use crate::convolutions::{additive_convolve, cmonotone_convolve, Additive};
        use crate::cumulants::PairState;
        use crate::shuffle::random::{random_character, seeded};
        use crate::shuffle::{Alphabet, Basis};
        let b = Basis::get(&Alphabet::univariate(), 5).unwrap();
        let mut rng = seeded(17);
        for _ in 0..3 {
            let mut pair = || {
                PairState::new(random_character(&b, &mut rng), random_character(&b, &mut rng)).unwrap()
            };
            let (s1, s2) = (pair(), pair());
            let (m1, m2) = (PairMoments::of(&s1), PairMoments::of(&s2));
            let c = Moments::of(&cmonotone_convolve(&s1, &s2).unwrap().phi);
            let m = Moments::of(&additive_convolve(&s1.phi, &s2.phi, Additive::Monotone).unwrap());
            for n in 1..=5 {
                assert_eq!(&sum_moments(&m1, &m2, IndependenceMode::CMonotone, n).unwrap(), c.get(n).unwrap());
                assert_eq!(&sum_moments(&m1, &m2, IndependenceMode::Monotone, n).unwrap(), m.get(n).unwrap());
            }
        }
    }
}
