//! Truncated monomial basis and precomputed coproducts.

use std::collections::HashMap;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use super::word::{Alphabet, BarMonomial, Word};
use crate::error::{Error, Result};

/// Which part of the coproduct to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Part {
    Full,
    Left,
    Right,
}

impl FromStr for Part {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "full" => Ok(Part::Full),
            "left" => Ok(Part::Left),
            "right" => Ok(Part::Right),
            _ => Err(Error::Parse(format!("unknown coproduct part {s:?}"))),
        }
    }
}

/// Largest coproduct table built on demand.
pub const MAX_COPRODUCT_TERMS: usize = 4_000_000;

/// Coproduct of a single word: `(w_S, w_J1|...|w_Jr, 1 in S)` for every
/// subset `S`, enumerated by bitmask.
fn word_coproduct(w: &Word) -> Vec<(BarMonomial, BarMonomial, bool)> {
    let n = w.len();
    let letters = w.letters();
    let mut out = Vec::with_capacity(1 << n);
    for mask in 0u32..(1 << n) {
        let mut chosen = Vec::new();
        let mut rest: Vec<Word> = Vec::new();
        let mut run: Vec<u8> = Vec::new();
        for (i, &l) in letters.iter().enumerate() {
            if mask & (1 << i) != 0 {
                chosen.push(l);
                if !run.is_empty() {
                    rest.push(Word::from_vec(std::mem::take(&mut run)));
                }
            } else {
                run.push(l);
            }
        }
        if !run.is_empty() {
            rest.push(Word::from_vec(run));
        }
        let left = if chosen.is_empty() {
            BarMonomial::unit()
        } else {
            BarMonomial::word(Word::from_vec(chosen))
        };
        out.push((left, BarMonomial::new(rest), mask & 1 != 0));
    }
    out
}

fn monomial_coproduct(x: &BarMonomial) -> Vec<(BarMonomial, BarMonomial, bool)> {
    // the unit is assigned to the left part, so that Δ = Δ≺ + Δ≻ everywhere
    let mut acc = vec![(BarMonomial::unit(), BarMonomial::unit(), true)];
    for (i, w) in x.words().iter().enumerate() {
        let terms = word_coproduct(w);
        let mut next = Vec::with_capacity(acc.len() * terms.len());
        for (l, r, left) in &acc {
            for (wl, wr, wleft) in &terms {
                let is_left = if i == 0 { *wleft } else { *left };
                next.push((l.concat(wl), r.concat(wr), is_left));
            }
        }
        acc = next;
    }
    acc
}

/// Terms of `Δ(x)`, `Δ≺(x)` or `Δ≻(x)`, with multiplicity, for any bar-monomial.
///
/// `Δ≺(u|v) = Δ≺(u)Δ(v)`; the unit counts as a left term.
pub fn coproduct_terms(x: &BarMonomial, part: Part) -> Vec<(BarMonomial, BarMonomial)> {
    monomial_coproduct(x)
        .into_iter()
        .filter(|(_, _, left)| match part {
            Part::Full => true,
            Part::Left => *left,
            Part::Right => !*left,
        })
        .map(|(l, r, _)| (l, r))
        .collect()
}

#[derive(Clone, Copy, Debug)]
pub(crate) struct Term {
    pub left: u32,
    pub right: u32,
    pub is_left: bool,
}

/// All bar-monomials of degree at most `N` over an alphabet, with coproduct
/// tables indexed by position. Index 0 is the unit.
#[derive(Debug)]
pub struct Basis {
    alphabet: Alphabet,
    truncation: usize,
    monomials: Vec<BarMonomial>,
    index: HashMap<BarMonomial, u32>,
    by_letters: HashMap<Vec<u8>, u32>,
    /// For every monomial, the basis indices of its words.
    factors: Vec<Vec<u32>>,
    words: Vec<u32>,
    term_offsets: Vec<usize>,
    terms: Vec<Term>,
}

impl Basis {
    /// Shared basis for `(alphabet, truncation)`; built once and cached.
    pub fn get(alphabet: &Alphabet, truncation: usize) -> Result<Arc<Basis>> {
        type Cache = Mutex<HashMap<(Alphabet, usize), Arc<Basis>>>;
        static CACHE: OnceLock<Cache> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        let key = (alphabet.clone(), truncation);
        if let Some(b) = cache.lock().unwrap().get(&key) {
            return Ok(b.clone());
        }
        let basis = Arc::new(Basis::build(alphabet.clone(), truncation)?);
        Ok(cache.lock().unwrap().entry(key).or_insert(basis).clone())
    }

    fn build(alphabet: Alphabet, truncation: usize) -> Result<Basis> {
        if truncation == 0 {
            return Err(Error::Domain("truncation must be at least 1".into()));
        }
        let k = alphabet.len();
        // k^n words of length n, 2^(n-1) compositions, 2^n coproduct terms each
        let mut estimate: usize = 0;
        for n in 1..=truncation {
            let count = k
                .checked_pow(n as u32)
                .and_then(|w| w.checked_mul(1usize << (2 * n - 1)))
                .unwrap_or(usize::MAX);
            estimate = estimate.saturating_add(count);
        }
        if estimate > MAX_COPRODUCT_TERMS {
            return Err(Error::Limit {
                family: format!("coproduct table over {k} letters"),
                n: truncation,
                limit: (1..truncation)
                    .rev()
                    .find(|&m| {
                        (1..=m)
                            .map(|n| k.pow(n as u32) << (2 * n - 1))
                            .sum::<usize>()
                            <= MAX_COPRODUCT_TERMS
                    })
                    .unwrap_or(0),
            });
        }

        let mut monomials = vec![BarMonomial::unit()];
        let mut words_by_len: Vec<Vec<Word>> = vec![Vec::new()];
        for n in 1..=truncation {
            let total = k.pow(n as u32);
            let ws = (0..total)
                .map(|mut code| {
                    let mut letters = vec![0u8; n];
                    for slot in letters.iter_mut().rev() {
                        *slot = (code % k) as u8;
                        code /= k;
                    }
                    Word::from_vec(letters)
                })
                .collect();
            words_by_len.push(ws);
        }
        // bar-monomials of degree n: a first word of length j followed by a monomial of degree n-j
        let mut by_degree: Vec<Vec<BarMonomial>> = vec![vec![BarMonomial::unit()]];
        for n in 1..=truncation {
            let mut level = Vec::new();
            for j in 1..=n {
                for w in &words_by_len[j] {
                    for tail in &by_degree[n - j] {
                        let mut ws = vec![w.clone()];
                        ws.extend(tail.words().iter().cloned());
                        level.push(BarMonomial::new(ws));
                    }
                }
            }
            level.sort();
            monomials.extend(level.iter().cloned());
            by_degree.push(level);
        }

        let index: HashMap<BarMonomial, u32> = monomials
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i as u32))
            .collect();
        let factors: Vec<Vec<u32>> = monomials
            .iter()
            .map(|m| {
                m.words()
                    .iter()
                    .map(|w| index[&BarMonomial::word(w.clone())])
                    .collect()
            })
            .collect();
        let words: Vec<u32> = (0..monomials.len() as u32)
            .filter(|&i| factors[i as usize].len() == 1)
            .collect();
        let by_letters = words
            .iter()
            .map(|&i| (monomials[i as usize].words()[0].letters().to_vec(), i))
            .collect();

        let mut term_offsets = Vec::with_capacity(monomials.len() + 1);
        let mut terms = Vec::new();
        term_offsets.push(0);
        for m in &monomials {
            for (l, r, is_left) in monomial_coproduct(m) {
                terms.push(Term {
                    left: index[&l],
                    right: index[&r],
                    is_left,
                });
            }
            term_offsets.push(terms.len());
        }
        Ok(Basis {
            alphabet,
            truncation,
            monomials,
            index,
            by_letters,
            factors,
            words,
            term_offsets,
            terms,
        })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn monomials(&self) -> &[BarMonomial] {
        &self.monomials
    }

    pub fn monomial(&self, i: usize) -> &BarMonomial {
        &self.monomials[i]
    }

    pub fn index_of(&self, m: &BarMonomial) -> Result<usize> {
        self.index.get(m).map(|&i| i as usize).ok_or_else(|| {
            if m.degree() > self.truncation {
                Error::DegreeOverflow {
                    degree: m.degree(),
                    truncation: self.truncation,
                }
            } else {
                Error::MalformedWord(format!("monomial outside alphabet: {m:?}"))
            }
        })
    }

    pub fn word_index(&self, w: &Word) -> Result<usize> {
        self.index_of(&BarMonomial::word(w.clone()))
    }

    /// Basis index of the word with these letters, if it is inside the truncation.
    pub fn index_of_letters(&self, letters: &[u8]) -> Option<usize> {
        self.by_letters.get(letters).map(|&i| i as usize)
    }

    /// Indices of single-word monomials, in canonical order.
    pub fn word_indices(&self) -> &[u32] {
        &self.words
    }

    pub(crate) fn factors(&self, i: usize) -> &[u32] {
        &self.factors[i]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.monomials[i].degree()
    }

    pub(crate) fn terms(&self, i: usize) -> &[Term] {
        &self.terms[self.term_offsets[i]..self.term_offsets[i + 1]]
    }

    pub fn total_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn render(&self, i: usize) -> String {
        self.alphabet.render_monomial(&self.monomials[i])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn show(ab: &Alphabet, terms: &[(BarMonomial, BarMonomial)]) -> Vec<(String, String)> {
        terms
            .iter()
            .map(|(l, r)| (ab.render_monomial(l), ab.render_monomial(r)))
            .collect()
    }

    fn pair(l: &str, r: &str) -> (String, String) {
        (l.to_string(), r.to_string())
    }

    #[test]
    fn word_coproduct_ab() {
        let ab = Alphabet::first(2);
        let w = ab.parse_monomial("ab").unwrap();
        assert_eq!(
            show(&ab, &coproduct_terms(&w, Part::Full)),
            vec![pair("1", "ab"), pair("a", "b"), pair("b", "a"), pair("ab", "1")]
        );
        assert_eq!(
            show(&ab, &coproduct_terms(&w, Part::Left)),
            vec![pair("a", "b"), pair("ab", "1")]
        );
        assert_eq!(
            show(&ab, &coproduct_terms(&w, Part::Right)),
            vec![pair("1", "ab"), pair("b", "a")]
        );
    }

    #[test]
    fn gaps_become_bars() {
        let abc = Alphabet::first(3);
        let w = abc.parse_monomial("abc").unwrap();
        let terms = show(&abc, &coproduct_terms(&w, Part::Full));
        assert!(terms.contains(&pair("ac", "b")));
        assert!(terms.contains(&pair("b", "a|c")));
        assert_eq!(terms.len(), 8);
    }

    #[test]
    fn bar_monomial_left_part() {
        let ab = Alphabet::first(2);
        let x = ab.parse_monomial("a|b").unwrap();
        let left = show(&ab, &coproduct_terms(&x, Part::Left));
        assert_eq!(left, vec![pair("a", "b"), pair("a|b", "1")]);
        assert_eq!(coproduct_terms(&x, Part::Full).len(), 4);
        let unit = coproduct_terms(&BarMonomial::unit(), Part::Left);
        assert_eq!(unit, vec![(BarMonomial::unit(), BarMonomial::unit())]);
        assert!(coproduct_terms(&BarMonomial::unit(), Part::Right).is_empty());
    }

    #[test]
    fn basis_sizes() {
        let b = Basis::get(&Alphabet::univariate(), 4).unwrap();
        // 1 + 1 + 2 + 4 + 8
        assert_eq!(b.len(), 16);
        assert_eq!(b.word_indices().len(), 4);
        assert_eq!(b.total_terms(), 1 + 2 + 2 * 4 + 4 * 8 + 8 * 16);
        let b2 = Basis::get(&Alphabet::first(2), 3).unwrap();
        assert_eq!(b2.len(), 1 + 2 + 8 + 32);
        assert!(b2.monomials().windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn oversized_basis_is_refused() {
        let err = Basis::get(&Alphabet::first(3), 9).unwrap_err();
        assert!(matches!(err, Error::Limit { .. }));
    }
}
