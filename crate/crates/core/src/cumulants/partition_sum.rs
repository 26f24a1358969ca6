//! Word-by-word evaluation of weighted sums of block products.

use std::collections::HashMap;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::combinatorics::{monotone_partitions, partition_table, PartitionData};
use crate::rational::Rational;
use crate::shuffle::{Basis, Functional};

/// One summand: a coefficient times a product over blocks, block `j` taking
/// its value from `sources[slots[j]]`. Blocks are 1-based position sets.
pub(crate) struct Term {
    pub blocks: Vec<Vec<usize>>,
    pub coeff: Rational,
    pub slots: Vec<usize>,
}

/// Where the value of a block comes from.
#[derive(Clone, Copy)]
pub(crate) enum Source<'a> {
    /// The family being solved for.
    Unknown,
    Known(&'a Functional),
}

/// Evaluates `sum_terms coeff * prod_j source_j(w|block_j)` on every word.
///
/// With a `target`, the single-block term is the unknown and is solved for:
/// `unknown(w) = target(w) - (all other terms)`. It must have coefficient 1.
/// Words are visited by increasing length, so every smaller block is known by
/// the time it is needed. Returns word values in canonical word order.
pub(crate) fn solve(
    basis: &Arc<Basis>,
    target: Option<&Functional>,
    sources: &[Source<'_>],
    terms: impl Fn(usize) -> Vec<Term>,
) -> Vec<Rational> {
    let mut cache: HashMap<usize, Vec<Term>> = HashMap::new();
    let mut unknown = vec![Rational::zero(); basis.len()];
    let mut out = Vec::with_capacity(basis.word_indices().len());
    let mut sub = Vec::new();
    for &wi in basis.word_indices() {
        let wi = wi as usize;
        let letters = basis.monomial(wi).words()[0].letters().to_vec();
        let ts = cache.entry(letters.len()).or_insert_with(|| terms(letters.len()));
        let mut acc = Rational::zero();
        for t in ts.iter() {
            if target.is_some() && t.blocks.len() == 1 {
                debug_assert!(t.coeff.is_one());
                continue;
            }
            let mut prod = t.coeff.clone();
            for (block, &s) in t.blocks.iter().zip(&t.slots) {
                sub.clear();
                sub.extend(block.iter().map(|&i| letters[i - 1]));
                let idx = basis.index_of_letters(&sub).expect("subword inside truncation");
                let v = match sources[s] {
                    Source::Known(f) => &f.values()[idx],
                    Source::Unknown => {
                        assert!(target.is_some(), "unknown block in a forward sum");
                        &unknown[idx]
                    }
                };
                if v.is_zero() {
                    prod = Rational::zero();
                    break;
                }
                prod *= v;
            }
            acc += prod;
        }
        let value = match target {
            Some(t) => &t.values()[wi] - acc,
            None => acc,
        };
        unknown[wi] = value.clone();
        out.push(value);
    }
    out
}

/// Terms indexed by `NC(n)`; `pick` returns the coefficient and per-block
/// sources, or `None` to drop the partition.
pub(crate) fn nc_terms(
    n: usize,
    pick: impl Fn(&PartitionData) -> Option<(Rational, Vec<usize>)>,
) -> Vec<Term> {
    partition_table(n)
        .iter()
        .filter_map(|pd| {
            let (coeff, slots) = pick(pd)?;
            Some(Term {
                blocks: pd.partition.blocks().to_vec(),
                coeff,
                slots,
            })
        })
        .collect()
}

/// Terms indexed by monotone partitions of `[n]` (irreducible ones only if
/// asked); `pick` sees the base partition and its block labels.
pub(crate) fn monotone_terms(
    n: usize,
    irreducible_only: bool,
    pick: impl Fn(&PartitionData, &[usize]) -> Option<(Rational, Vec<usize>)>,
) -> Vec<Term> {
    let table = partition_table(n);
    let find = |p: &crate::NoncrossingPartition| {
        table
            .iter()
            .find(|pd| &pd.partition == p)
            .expect("monotone base is non-crossing")
    };
    monotone_partitions(n, irreducible_only)
        .iter()
        .filter_map(|mp| {
            let pd = find(mp.base());
            let (coeff, slots) = pick(pd, mp.labels())?;
            Some(Term {
                blocks: pd.partition.blocks().to_vec(),
                coeff,
                slots,
            })
        })
        .collect()
}

/// Slot list: `first` for the block containing 1, `rest` elsewhere.
pub(crate) fn first_and_rest(pd: &PartitionData, first: usize, rest: usize) -> Vec<usize> {
    (0..pd.partition.num_blocks())
        .map(|b| if b == 0 { first } else { rest })
        .collect()
}

/// Slot list: `outer` for outer blocks, `inner` for the others.
pub(crate) fn by_depth(pd: &PartitionData, outer: usize, inner: usize) -> Vec<usize> {
    pd.outer.iter().map(|&o| if o { outer } else { inner }).collect()
}
