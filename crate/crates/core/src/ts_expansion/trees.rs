//! The free right pre-Lie algebra on one generator: linear combinations of
//! rooted trees, `a◁b` grafting the root of `b` onto every vertex of `a`.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::rational::{self, Rational};

/// A rooted tree, children kept sorted so that equal trees compare equal.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tree(Vec<Tree>);

impl Tree {
    pub fn leaf() -> Tree {
        Tree(Vec::new())
    }

    pub fn node(mut children: Vec<Tree>) -> Tree {
        children.sort();
        Tree(children)
    }

    pub fn children(&self) -> &[Tree] {
        &self.0
    }

    pub fn vertices(&self) -> usize {
        1 + self.0.iter().map(Tree::vertices).sum::<usize>()
    }

    /// Every tree obtained by attaching `b` below one vertex of `self`.
    fn graft(&self, b: &Tree) -> Vec<Tree> {
        let mut out = Vec::new();
        let mut at_root = self.0.clone();
        at_root.push(b.clone());
        out.push(Tree::node(at_root));
        for (i, c) in self.0.iter().enumerate() {
            for g in c.graft(b) {
                let mut cs = self.0.clone();
                cs[i] = g;
                out.push(Tree::node(cs));
            }
        }
        out
    }

    /// All trees with exactly `n` vertices.
    pub fn all(n: usize) -> Vec<Tree> {
        let mut level: Vec<Vec<Tree>> = vec![Vec::new(), vec![Tree::leaf()]];
        for k in 2..=n {
            let mut found = std::collections::BTreeSet::new();
            for t in &level[k - 1] {
                for g in t.graft(&Tree::leaf()) {
                    found.insert(g);
                }
            }
            level.push(found.into_iter().collect());
        }
        level.get(n).cloned().unwrap_or_default()
    }
}

/// Nested-bracket notation: `•` for the leaf, `•[•,•[•]]` for a root with
/// children.
impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("•")?;
        if !self.0.is_empty() {
            f.write_str("[")?;
            for (i, c) in self.0.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{c}")?;
            }
            f.write_str("]")?;
        }
        Ok(())
    }
}

/// A combination of trees with at most `order` vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Forestal {
    order: usize,
    terms: BTreeMap<Tree, Rational>,
}

impl Forestal {
    pub fn zero(order: usize) -> Self {
        Forestal {
            order,
            terms: BTreeMap::new(),
        }
    }

    /// The generator `•`.
    pub fn generator(order: usize) -> Self {
        let mut f = Self::zero(order);
        f.add_term(Tree::leaf(), rational::one());
        f
    }

    pub fn terms(&self) -> &BTreeMap<Tree, Rational> {
        &self.terms
    }

    pub fn coefficient(&self, t: &Tree) -> Rational {
        self.terms.get(t).cloned().unwrap_or_else(Rational::zero)
    }

    fn add_term(&mut self, t: Tree, c: Rational) {
        if t.vertices() > self.order || c.is_zero() {
            return;
        }
        match self.terms.entry(t) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (t, c) in &other.terms {
            out.add_term(t.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero(self.order);
        for (t, v) in &self.terms {
            out.add_term(t.clone(), v * c);
        }
        out
    }

    pub fn pre_lie(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.order);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                if a.vertices() + b.vertices() > self.order {
                    continue;
                }
                for g in a.graft(b) {
                    out.add_term(g, x * y);
                }
            }
        }
        out
    }
}
