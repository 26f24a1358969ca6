use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_traits::{One, Signed, Zero};

use crate::rational::{self, Rational};

/// A polynomial in `t` and `s`, keyed by the exponents `(i, j)` of `t^i s^j`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Poly(BTreeMap<(u32, u32), Rational>);

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn monomial(i: u32, j: u32, c: Rational) -> Self {
        let mut p = Poly::zero();
        p.add_term(i, j, c);
        p
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(0, 0, c)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<(u32, u32), Rational> {
        &self.0
    }

    pub fn coefficient(&self, i: u32, j: u32) -> Rational {
        self.0.get(&(i, j)).cloned().unwrap_or_else(Rational::zero)
    }

    fn add_term(&mut self, i: u32, j: u32, c: Rational) {
        if c.is_zero() {
            return;
        }
        let e = self.0.entry((i, j)).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.0.remove(&(i, j));
        }
    }

    pub fn eval(&self, t: &Rational, s: &Rational) -> Rational {
        self.0
            .iter()
            .map(|(&(i, j), c)| c * rational::pow(t, i as usize) * rational::pow(s, j as usize))
            .sum()
    }

    /// The restriction to `t = s`, as a polynomial in `s`.
    pub fn diagonal(&self) -> Poly {
        let mut out = Poly::zero();
        for (&(i, j), c) in &self.0 {
            out.add_term(0, i + j, c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        let mut out = Poly::zero();
        for (&(i, j), v) in &self.0 {
            out.add_term(i, j, v * c);
        }
        out
    }

    /// The polynomial with `p(xs[a], ys[b]) = values[a][b]`, of degree below
    /// the number of nodes in each variable.
    pub fn interpolate(xs: &[Rational], ys: &[Rational], values: &[Vec<Rational>]) -> Poly {
        // Interpolate in s for every t-node, then each s-coefficient in t.
        let by_t: Vec<Vec<Rational>> = values.iter().map(|row| interpolate_1d(ys, row)).collect();
        let mut out = Poly::zero();
        for j in 0..ys.len() {
            let column: Vec<Rational> = by_t.iter().map(|c| c[j].clone()).collect();
            for (i, c) in interpolate_1d(xs, &column).into_iter().enumerate() {
                out.add_term(i as u32, j as u32, c);
            }
        }
        out
    }
}

/// Coefficients `c_0..c_{n-1}` of the interpolating polynomial, by Newton
/// divided differences.
fn interpolate_1d(xs: &[Rational], ys: &[Rational]) -> Vec<Rational> {
    let n = xs.len();
    let mut dd = ys.to_vec();
    for k in 1..n {
        for i in (k..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&xs[i] - &xs[i - k]);
        }
    }
    // Expand the Newton form from the innermost factor out.
    let mut coeffs = vec![Rational::zero(); n];
    for k in (0..n).rev() {
        let mut next = vec![Rational::zero(); n];
        for (d, c) in coeffs.iter().enumerate() {
            if d + 1 < n {
                next[d + 1] += c;
            }
            next[d] -= c * &xs[k];
        }
        next[0] += &dd[k];
        coeffs = next;
    }
    coeffs
}

impl Add for &Poly {
    type Output = Poly;

    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.0 {
            out.add_term(i, j, c.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;

    fn sub(self, rhs: &Poly) -> Poly {
        self + &rhs.scale(&-Rational::one())
    }
}

impl Mul for &Poly {
    type Output = Poly;

    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (&(a, b), x) in &self.0 {
            for (&(c, d), y) in &rhs.0 {
                out.add_term(a + c, b + d, x * y);
            }
        }
        out
    }
}

fn power(var: &str, e: u32) -> String {
    match e {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{e}"),
    }
}

/// Highest total degree first, e.g. `1/12 t^2 - 1/4 t s`.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        let mut keys: Vec<_> = self.0.keys().copied().collect();
        keys.sort_by_key(|k| std::cmp::Reverse((k.0 + k.1, k.0)));
        for (n, (i, j)) in keys.into_iter().enumerate() {
            let c = &self.0[&(i, j)];
            let vars: Vec<String> = [power("t", i), power("s", j)]
                .into_iter()
                .filter(|v| !v.is_empty())
                .collect();
            let mag = c.abs();
            let neg = c < &Rational::zero();
            match (n, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let coeff = rational::pretty(&mag);
            if vars.is_empty() {
                f.write_str(&coeff)?;
            } else if mag.is_one() {
                f.write_str(&vars.join(" "))?;
            } else {
                write!(f, "{coeff} {}", vars.join(" "))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    #[test]
    fn recovers_a_polynomial() {
        let p = &(&Poly::monomial(2, 0, frac(1, 12)) - &Poly::monomial(1, 1, frac(1, 4)))
            + &Poly::constant(int(3));
        let nodes: Vec<Rational> = (0..3).map(int).collect();
        let values: Vec<Vec<Rational>> = nodes
            .iter()
            .map(|t| nodes.iter().map(|s| p.eval(t, s)).collect())
            .collect();
        assert_eq!(Poly::interpolate(&nodes, &nodes, &values), p);
        assert_eq!(p.to_string(), "1/12 t^2 - 1/4 t s + 3");
        assert_eq!(p.diagonal().to_string(), "-1/6 s^2 + 3");
    }

    #[test]
    fn product() {
        let a = &Poly::monomial(1, 0, int(1)) - &Poly::monomial(0, 1, int(1));
        let sq = &a * &a;
        assert_eq!(sq.to_string(), "t^2 - 2 t s + s^2");
        assert!(sq.diagonal().is_zero());
    }
}
