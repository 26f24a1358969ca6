//! The expansion of t-monotone cumulants in terms of s-monotone ones,
//! `ρ^(t) = Ω_{tρ^(t)}(W_{sρ^(s)}(ρ^(s)))`, computed in the free pre-Lie
//! algebra on rooted trees with `ρ^(s)` as the generator.
//!
//! Tree coefficients are polynomials in `(t, s)`, recovered exactly from
//! evaluations on a grid of integer points.

mod poly;
pub mod trees;

use std::fmt;

use num_traits::Zero;

pub use poly::Poly;
pub use trees::{Forestal, Tree};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};
use crate::shuffle::{bernoulli_table, pre_lie, Functional};

/// Largest supported number of vertices.
pub const MAX_ORDER: usize = 6;

/// A bracketed product of copies of the generator `x`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Monomial {
    X,
    Pre(Box<Monomial>, Box<Monomial>),
}

impl Monomial {
    pub fn pre(a: Monomial, b: Monomial) -> Monomial {
        Monomial::Pre(Box::new(a), Box::new(b))
    }

    pub fn degree(&self) -> usize {
        match self {
            Monomial::X => 1,
            Monomial::Pre(a, b) => a.degree() + b.degree(),
        }
    }

    /// Parses `x`, `(x◁x)◁x` and so on; `<` may stand in for `◁`. The
    /// product associates to the left when brackets are omitted.
    pub fn parse(s: &str) -> Result<Monomial> {
        let chars: Vec<char> = s
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| if c == '<' { '◁' } else { c })
            .collect();
        let mut pos = 0;
        let m = parse_product(&chars, &mut pos)?;
        if pos != chars.len() {
            return Err(Error::Parse(format!("trailing input in monomial {s:?}")));
        }
        Ok(m)
    }

    /// Expands into trees.
    pub fn trees(&self, order: usize) -> Forestal {
        match self {
            Monomial::X => Forestal::generator(order),
            Monomial::Pre(a, b) => a.trees(order).pre_lie(&b.trees(order)),
        }
    }

    /// Evaluates with `x` replaced by an infinitesimal character.
    pub fn realize(&self, x: &Functional) -> Result<Functional> {
        match self {
            Monomial::X => Ok(x.clone()),
            Monomial::Pre(a, b) => pre_lie(&a.realize(x)?, &b.realize(x)?),
        }
    }
}

fn parse_atom(c: &[char], pos: &mut usize) -> Result<Monomial> {
    match c.get(*pos) {
        Some('x') => {
            *pos += 1;
            Ok(Monomial::X)
        }
        Some('(') => {
            *pos += 1;
            let m = parse_product(c, pos)?;
            if c.get(*pos) != Some(&')') {
                return Err(Error::Parse("missing ')' in monomial".into()));
            }
            *pos += 1;
            Ok(m)
        }
        other => Err(Error::Parse(format!("unexpected {other:?} in monomial"))),
    }
}

fn parse_product(c: &[char], pos: &mut usize) -> Result<Monomial> {
    let mut m = parse_atom(c, pos)?;
    while c.get(*pos) == Some(&'◁') {
        *pos += 1;
        m = Monomial::pre(m, parse_atom(c, pos)?);
    }
    Ok(m)
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Monomial::X => f.write_str("x"),
            Monomial::Pre(a, b) => {
                let wrap = |m: &Monomial| match m {
                    Monomial::X => m.to_string(),
                    _ => format!("({m})"),
                };
                write!(f, "{}◁{}", wrap(a), wrap(b))
            }
        }
    }
}

/// `sum_n c_n r_iter(α, γ, n)` in the tree algebra.
fn series(gamma: &Forestal, alpha: &Forestal, order: usize, coeff: impl Fn(usize) -> Rational) -> Forestal {
    let mut acc = Forestal::zero(order);
    let mut it = alpha.clone();
    for n in 0..order {
        acc = acc.add(&it.scale(&coeff(n)));
        it = it.pre_lie(gamma);
    }
    acc
}

/// `ρ^(t)` in trees over the generator `ρ^(s)`, for numeric `t` and `s`.
pub fn expansion_at(t: &Rational, s: &Rational, order: usize) -> Forestal {
    let x = Forestal::generator(order);
    let beta = series(&x.scale(s), &x, order, |n| rational::one() / rational::factorial(n + 1));
    let b = bernoulli_table(order);
    let mut rho = beta.clone();
    // Each round fixes one more order.
    for _ in 0..order {
        rho = series(&rho.scale(t), &beta, order, |n| &b[n] / rational::factorial(n));
    }
    rho
}

/// Tree coefficients of the expansion as polynomials in `(t, s)`.
#[derive(Clone, Debug, PartialEq)]
pub struct TsExpansion {
    order: usize,
    coefficients: Vec<(Tree, Poly)>,
}

/// Result of rewriting the expansion in a list of monomials.
#[derive(Clone, Debug, PartialEq)]
pub struct MonomialExpansion {
    pub coefficients: Vec<(Monomial, Poly)>,
    /// Parts of the expansion outside the span of the monomials.
    pub remainder: Vec<Poly>,
}

pub fn ts_expansion(order: usize) -> Result<TsExpansion> {
    if order == 0 || order > MAX_ORDER {
        return Err(Error::Limit {
            family: "ts-expansion".into(),
            n: order,
            limit: MAX_ORDER,
        });
    }
    let nodes: Vec<Rational> = (0..order as i64).map(rational::int).collect();
    let grid: Vec<Vec<Forestal>> = nodes
        .iter()
        .map(|t| nodes.iter().map(|s| expansion_at(t, s, order)).collect())
        .collect();
    let coefficients = (1..=order)
        .flat_map(Tree::all)
        .map(|tree| {
            let values: Vec<Vec<Rational>> = grid
                .iter()
                .map(|row| row.iter().map(|f| f.coefficient(&tree)).collect())
                .collect();
            let p = Poly::interpolate(&nodes, &nodes, &values);
            (tree, p)
        })
        .collect();
    Ok(TsExpansion {
        order,
        coefficients,
    })
}

impl TsExpansion {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coefficients(&self) -> &[(Tree, Poly)] {
        &self.coefficients
    }

    pub fn coefficient(&self, tree: &Tree) -> Poly {
        self.coefficients
            .iter()
            .find(|(t, _)| t == tree)
            .map(|(_, p)| p.clone())
            .unwrap_or_default()
    }

    pub fn at(&self, t: &Rational, s: &Rational) -> Forestal {
        let mut out = Forestal::zero(self.order);
        for (tree, p) in &self.coefficients {
            out = out.add(&single_tree(tree, self.order).scale(&p.eval(t, s)));
        }
        out
    }

    /// Trees whose coefficient fails `ρ^(t)|_{t=s} = ρ^(s)`, with the
    /// offending restriction to the diagonal.
    pub fn diagonal_defects(&self) -> Vec<(Tree, Poly)> {
        self.coefficients
            .iter()
            .filter_map(|(tree, p)| {
                let want = if tree.vertices() == 1 {
                    Poly::constant(rational::one())
                } else {
                    Poly::zero()
                };
                let d = &p.diagonal() - &want;
                (!d.is_zero()).then(|| (tree.clone(), d))
            })
            .collect()
    }

    /// Rewrites the expansion in the given monomials by exact elimination.
    /// Fails when the monomials are linearly dependent.
    pub fn in_monomials(&self, monomials: &[Monomial]) -> Result<MonomialExpansion> {
        let trees: Vec<&Tree> = self.coefficients.iter().map(|(t, _)| t).collect();
        let cols: Vec<Forestal> = monomials.iter().map(|m| m.trees(self.order)).collect();
        let mut rows: Vec<(Vec<Rational>, Poly)> = trees
            .iter()
            .zip(&self.coefficients)
            .map(|(t, (_, p))| (cols.iter().map(|c| c.coefficient(t)).collect(), p.clone()))
            .collect();
        let mut pivots = Vec::new();
        let mut r = 0;
        for (c, monomial) in monomials.iter().enumerate() {
            let Some(k) = (r..rows.len()).find(|&k| !rows[k].0[c].is_zero()) else {
                return Err(Error::Domain(format!(
                    "monomial {monomial} depends on the previous ones"
                )));
            };
            rows.swap(r, k);
            let inv = rational::one() / &rows[r].0[c];
            rows[r].0.iter_mut().for_each(|v| *v *= &inv);
            rows[r].1 = rows[r].1.scale(&inv);
            for k in 0..rows.len() {
                if k == r || rows[k].0[c].is_zero() {
                    continue;
                }
                let f = rows[k].0[c].clone();
                let (pivot_row, pivot_rhs) = rows[r].clone();
                for (v, p) in rows[k].0.iter_mut().zip(&pivot_row) {
                    *v -= &f * p;
                }
                rows[k].1 = &rows[k].1 - &pivot_rhs.scale(&f);
            }
            pivots.push(r);
            r += 1;
        }
        let coefficients = monomials
            .iter()
            .zip(&pivots)
            .map(|(m, &r)| (m.clone(), rows[r].1.clone()))
            .collect();
        let remainder = rows[r..]
            .iter()
            .map(|(_, p)| p.clone())
            .filter(|p| !p.is_zero())
            .collect();
        Ok(MonomialExpansion {
            coefficients,
            remainder,
        })
    }

    /// `sum_T c_T(t, s) T(x)` with `x = ρ^(s)`, evaluated in the dual of the
    /// double tensor algebra.
    pub fn realize(&self, t: &Rational, s: &Rational, x: &Functional) -> Result<Functional> {
        let mut acc = Functional::zero(x.basis()).with_kind(crate::Kind::InfChar)?;
        for (tree, p) in &self.coefficients {
            let c = p.eval(t, s);
            if c.is_zero() {
                continue;
            }
            acc = &acc + &realize_tree(tree, x)?.scale(&c);
        }
        Ok(acc)
    }
}

fn single_tree(tree: &Tree, order: usize) -> Forestal {
    let x = Forestal::generator(order);
    let children: Vec<Forestal> = tree.children().iter().map(|c| single_tree(c, order)).collect();
    let op = |a: &Forestal, b: &Forestal| Ok(a.pre_lie(b));
    let sub = |a: &Forestal, b: &Forestal| a.add(&b.scale(&-rational::one()));
    brace(&x, &children, &op, &sub).expect("tree operations are total")
}

/// A tree as a pre-Lie polynomial in `x`.
pub fn realize_tree(tree: &Tree, x: &Functional) -> Result<Functional> {
    let children = tree
        .children()
        .iter()
        .map(|c| realize_tree(c, x))
        .collect::<Result<Vec<_>>>()?;
    brace(x, &children, &|a, b| pre_lie(a, b), &|a, b| a - b)
}

/// The symmetric brace `x{c_1, ..., c_k}`: the root `x` with the `c_i`
/// attached, from
/// `x{c_1..c_k} = x{c_1..c_{k-1}}◁c_k - sum_i x{c_1, .., c_i◁c_k, .., c_{k-1}}`.
fn brace<T: Clone>(
    x: &T,
    children: &[T],
    op: &dyn Fn(&T, &T) -> Result<T>,
    sub: &dyn Fn(&T, &T) -> T,
) -> Result<T> {
    let Some((last, rest)) = children.split_last() else {
        return Ok(x.clone());
    };
    let mut acc = op(&brace(x, rest, op, sub)?, last)?;
    for i in 0..rest.len() {
        let mut cs = rest.to_vec();
        cs[i] = op(&rest[i], last)?;
        acc = sub(&acc, &brace(x, &cs, op, sub)?);
    }
    Ok(acc)
}

impl fmt::Display for TsExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (tree, p) in &self.coefficients {
            writeln!(f, "{tree}\t{p}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    #[test]
    fn parse_and_print() {
        let m = Monomial::parse("x◁(x◁x)").unwrap();
        assert_eq!(m.to_string(), "x◁(x◁x)");
        assert_eq!(Monomial::parse("x<x<x").unwrap().to_string(), "(x◁x)◁x");
        assert_eq!(m.degree(), 3);
        assert!(Monomial::parse("x◁").is_err());
        assert!(Monomial::parse("(x").is_err());
    }

    #[test]
    fn trees_round_trip_through_braces() {
        for n in 1..=5 {
            for t in Tree::all(n) {
                let f = single_tree(&t, 5);
                assert_eq!(f.terms().len(), 1, "{t}");
                assert_eq!(f.coefficient(&t), rational::one());
            }
        }
    }

    #[test]
    fn low_orders() {
        let e = ts_expansion(3).unwrap();
        let l2 = Tree::node(vec![Tree::leaf()]);
        let half = frac(1, 2);
        let want = &Poly::monomial(0, 1, half.clone()) - &Poly::monomial(1, 0, half);
        assert_eq!(e.coefficient(&l2), want);
        assert_eq!(e.coefficient(&Tree::leaf()), Poly::constant(int(1)));
        assert!(e.diagonal_defects().is_empty());
    }

    #[test]
    fn endpoint_rows() {
        // (t, s) = (0, s): only W_{sx}(x) remains.
        let e = ts_expansion(4).unwrap();
        let w = expansion_at(&int(0), &frac(2, 3), 4);
        assert_eq!(e.at(&int(0), &frac(2, 3)), w);
    }

    #[test]
    fn realized_expansion_gives_t_monotone_cumulants() {
        use crate::cumulants::t_monotone;
        use crate::shuffle::random::{random_character, seeded};
        use crate::shuffle::{Alphabet, Basis};
        let e = ts_expansion(4).unwrap();
        let b = Basis::get(&Alphabet::first(2), 5).unwrap();
        let phi = random_character(&b, &mut seeded(8));
        for (t, s) in [(frac(1, 2), frac(-2, 3)), (int(0), int(1)), (int(2), frac(1, 5))] {
            let hs = t_monotone(&phi, &s).unwrap().into_values();
            let ht = t_monotone(&phi, &t).unwrap().into_values();
            assert_eq!(e.realize(&t, &s, &hs).unwrap(), ht);
        }
    }
}
