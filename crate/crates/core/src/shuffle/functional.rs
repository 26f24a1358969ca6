use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;
use std::sync::Arc;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::basis::Basis;
use super::word::{Alphabet, BarMonomial, Word};
use crate::error::{Error, Result};
use crate::rational::{self, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    General,
    Character,
    #[serde(rename = "infchar")]
    InfChar,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::General => "general",
            Kind::Character => "character",
            Kind::InfChar => "infchar",
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "general" => Ok(Kind::General),
            "character" => Ok(Kind::Character),
            "infchar" => Ok(Kind::InfChar),
            _ => Err(Error::Parse(format!("unknown functional kind {s:?}"))),
        }
    }
}

/// A linear form on bar-monomials of degree at most `N`.
///
/// Values are stored densely, one per basis element. Characters and
/// infinitesimal characters keep their multi-bar values consistent with the
/// word values at all times.
#[derive(Clone)]
pub struct Functional {
    basis: Arc<Basis>,
    kind: Kind,
    values: Vec<Rational>,
}

impl fmt::Debug for Functional {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut m = f.debug_map();
        for (i, v) in self.values.iter().enumerate() {
            if !v.is_zero() {
                m.entry(&self.basis.render(i), &rational::pretty(v));
            }
        }
        m.finish()
    }
}

/// Values are compared; the kind tag is not.
impl PartialEq for Functional {
    fn eq(&self, other: &Self) -> bool {
        self.compatible(other) && self.values == other.values
    }
}

impl Eq for Functional {}

impl Functional {
    pub fn zero(basis: &Arc<Basis>) -> Self {
        Functional {
            basis: basis.clone(),
            kind: Kind::InfChar,
            values: vec![Rational::zero(); basis.len()],
        }
    }

    /// The counit `ε`: 1 on the unit, 0 elsewhere.
    pub fn counit(basis: &Arc<Basis>) -> Self {
        let mut f = Self::zero(basis);
        f.kind = Kind::Character;
        f.values[0] = Rational::one();
        f
    }

    pub fn general(basis: &Arc<Basis>, values: Vec<Rational>) -> Result<Self> {
        if values.len() != basis.len() {
            return Err(Error::Mismatch(format!(
                "expected {} values, got {}",
                basis.len(),
                values.len()
            )));
        }
        Ok(Functional {
            basis: basis.clone(),
            kind: Kind::General,
            values,
        })
    }

    /// Lifts word values (indexed like [`Basis::word_indices`]) to a character
    /// or an infinitesimal character.
    pub(crate) fn from_word_values(basis: &Arc<Basis>, kind: Kind, words: &[Rational]) -> Self {
        let mut values = vec![Rational::zero(); basis.len()];
        for (&wi, v) in basis.word_indices().iter().zip(words) {
            values[wi as usize] = v.clone();
        }
        let mut f = Functional {
            basis: basis.clone(),
            kind,
            values,
        };
        f.refresh_multibar();
        f
    }

    /// Fills non-word values from word values according to the kind.
    pub(crate) fn refresh_multibar(&mut self) {
        match self.kind {
            Kind::General => {}
            Kind::InfChar => {
                for i in 0..self.values.len() {
                    if self.basis.factors(i).len() != 1 {
                        self.values[i] = Rational::zero();
                    }
                }
            }
            Kind::Character => {
                self.values[0] = Rational::one();
                for i in 1..self.values.len() {
                    let fs = self.basis.factors(i);
                    if fs.len() > 1 {
                        let mut p = Rational::one();
                        for &w in fs {
                            p *= &self.values[w as usize];
                        }
                        self.values[i] = p;
                    }
                }
            }
        }
    }

    /// Character or infinitesimal character from a word-value map.
    ///
    /// Every word of degree at most `truncation` needs a value.
    pub fn lift(
        kind: Kind,
        word_values: &BTreeMap<Word, Rational>,
        alphabet: &Alphabet,
        truncation: usize,
    ) -> Result<Self> {
        if kind == Kind::General {
            return Err(Error::WrongKind {
                expected: "character or infchar",
                found: "general",
            });
        }
        let basis = Basis::get(alphabet, truncation)?;
        for w in word_values.keys() {
            if w.len() > truncation {
                return Err(Error::DegreeOverflow {
                    degree: w.len(),
                    truncation,
                });
            }
            if w.letters().iter().any(|&l| l as usize >= alphabet.len()) {
                return Err(Error::MalformedWord(format!("{w} uses letters outside the alphabet")));
            }
        }
        let words = basis
            .word_indices()
            .iter()
            .map(|&wi| {
                let w = &basis.monomial(wi as usize).words()[0];
                word_values
                    .get(w)
                    .cloned()
                    .ok_or_else(|| Error::MissingValue(alphabet.render_word(w)))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_word_values(&basis, kind, &words))
    }

    /// Univariate character with `Φ(a^n) = moments[n-1]`, truncated at `moments.len()`.
    pub fn univariate_character(moments: &[Rational]) -> Result<Self> {
        Self::univariate(Kind::Character, moments)
    }

    /// Univariate infinitesimal character with `α(a^n) = values[n-1]`.
    pub fn univariate_infchar(values: &[Rational]) -> Result<Self> {
        Self::univariate(Kind::InfChar, values)
    }

    fn univariate(kind: Kind, values: &[Rational]) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::Domain("need at least one value".into()));
        }
        let basis = Basis::get(&Alphabet::univariate(), values.len())?;
        Ok(Self::from_word_values(&basis, kind, values))
    }

    pub fn basis(&self) -> &Arc<Basis> {
        &self.basis
    }

    pub fn alphabet(&self) -> &Alphabet {
        self.basis.alphabet()
    }

    pub fn truncation(&self) -> usize {
        self.basis.truncation()
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub(crate) fn set_kind(&mut self, kind: Kind) {
        self.kind = kind;
    }

    /// Retags as a general functional; values are unchanged.
    pub fn into_general(mut self) -> Self {
        self.kind = Kind::General;
        self
    }

    /// Retags after checking the defining properties exactly.
    pub fn with_kind(mut self, kind: Kind) -> Result<Self> {
        let ok = match kind {
            Kind::General => true,
            Kind::Character => self.is_character(),
            Kind::InfChar => self.is_infchar(),
        };
        if !ok {
            return Err(Error::WrongKind {
                expected: kind.name(),
                found: "general",
            });
        }
        self.kind = kind;
        Ok(self)
    }

    pub fn is_character(&self) -> bool {
        let mut copy = self.clone();
        copy.kind = Kind::Character;
        copy.refresh_multibar();
        copy.values == self.values
    }

    pub fn is_infchar(&self) -> bool {
        let mut copy = self.clone();
        copy.kind = Kind::InfChar;
        copy.refresh_multibar();
        copy.values == self.values
    }

    pub fn get(&self, m: &BarMonomial) -> Result<&Rational> {
        Ok(&self.values[self.basis.index_of(m)?])
    }

    pub fn word(&self, w: &Word) -> Result<&Rational> {
        Ok(&self.values[self.basis.word_index(w)?])
    }

    /// Value at `a^n` over the first letter.
    pub fn at_power(&self, n: usize) -> Result<&Rational> {
        self.word(&Word::power(n))
    }

    /// Value at a monomial written as `"ab|c"`.
    pub fn at(&self, s: &str) -> Result<&Rational> {
        let m = self.alphabet().parse_monomial(s)?;
        self.get(&m)
    }

    /// `(f(a), f(a^2), ..., f(a^N))`.
    pub fn power_values(&self) -> Vec<Rational> {
        (1..=self.truncation())
            .map(|n| self.at_power(n).cloned().unwrap_or_else(|_| Rational::zero()))
            .collect()
    }

    /// Word values in canonical word order.
    pub fn word_values(&self) -> Vec<Rational> {
        self.basis
            .word_indices()
            .iter()
            .map(|&i| self.values[i as usize].clone())
            .collect()
    }

    pub fn compatible(&self, other: &Functional) -> bool {
        Arc::ptr_eq(&self.basis, &other.basis)
            || (self.basis.alphabet() == other.basis.alphabet()
                && self.basis.truncation() == other.basis.truncation())
    }

    pub(crate) fn check_compatible(&self, other: &Functional) -> Result<()> {
        if self.compatible(other) {
            Ok(())
        } else {
            Err(Error::Mismatch(format!(
                "alphabets {:?}/{:?} with truncations {}/{}",
                self.alphabet().names(),
                other.alphabet().names(),
                self.truncation(),
                other.truncation()
            )))
        }
    }

    pub(crate) fn require(&self, kind: Kind) -> Result<()> {
        if self.kind == kind {
            Ok(())
        } else {
            Err(Error::WrongKind {
                expected: kind.name(),
                found: self.kind.name(),
            })
        }
    }

    pub fn scale(&self, c: &Rational) -> Functional {
        let kind = match self.kind {
            Kind::InfChar => Kind::InfChar,
            _ if c.is_one() => self.kind,
            _ => Kind::General,
        };
        Functional {
            basis: self.basis.clone(),
            kind,
            values: self.values.iter().map(|v| v * c).collect(),
        }
    }

    /// First monomial, in canonical order, where the two functionals differ.
    pub fn first_difference(&self, other: &Functional) -> Option<Difference> {
        if !self.compatible(other) {
            return Some(Difference {
                monomial: "<incompatible>".into(),
                left: Rational::zero(),
                right: Rational::zero(),
            });
        }
        self.values
            .iter()
            .zip(&other.values)
            .position(|(a, b)| a != b)
            .map(|i| Difference {
                monomial: self.basis.render(i),
                left: self.values[i].clone(),
                right: other.values[i].clone(),
            })
    }

    /// Restriction to the word values up to degree `n`, as a new functional.
    pub fn truncate(&self, n: usize) -> Result<Functional> {
        let basis = Basis::get(self.alphabet(), n)?;
        let mut values = Vec::with_capacity(basis.len());
        for m in basis.monomials() {
            values.push(self.get(m)?.clone());
        }
        Ok(Functional {
            basis,
            kind: self.kind,
            values,
        })
    }
}

/// A monomial where two functionals disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Difference {
    pub monomial: String,
    pub left: Rational,
    pub right: Rational,
}

impl fmt::Display for Difference {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "at {}: {} != {}",
            self.monomial,
            rational::format(&self.left),
            rational::format(&self.right)
        )
    }
}

fn combine(a: &Functional, b: &Functional, subtract: bool) -> Functional {
    a.check_compatible(b).expect("incompatible functionals");
    let kind = if a.kind == Kind::InfChar && b.kind == Kind::InfChar {
        Kind::InfChar
    } else {
        Kind::General
    };
    let values = a
        .values
        .iter()
        .zip(&b.values)
        .map(|(x, y)| if subtract { x - y } else { x + y })
        .collect();
    Functional {
        basis: a.basis.clone(),
        kind,
        values,
    }
}

/// Panics on incompatible operands; use [`Functional::compatible`] first
/// when the inputs are untrusted.
impl Add for &Functional {
    type Output = Functional;

    fn add(self, rhs: &Functional) -> Functional {
        combine(self, rhs, false)
    }
}

impl Sub for &Functional {
    type Output = Functional;

    fn sub(self, rhs: &Functional) -> Functional {
        combine(self, rhs, true)
    }
}

impl Neg for &Functional {
    type Output = Functional;

    fn neg(self) -> Functional {
        self.scale(&-Rational::one())
    }
}

/// Serialized form of a [`Functional`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FunctionalJson {
    pub alphabet: Vec<String>,
    pub truncation: usize,
    pub kind: Kind,
    pub words: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bars: Option<BTreeMap<String, String>>,
}

impl Functional {
    pub fn to_json(&self) -> FunctionalJson {
        let mut words = BTreeMap::new();
        let mut bars = BTreeMap::new();
        for (i, v) in self.values.iter().enumerate().skip(1) {
            let key = self.basis.render(i);
            if self.basis.factors(i).len() == 1 {
                words.insert(key, rational::format(v));
            } else if self.kind == Kind::General {
                bars.insert(key, rational::format(v));
            }
        }
        let general = self.kind == Kind::General;
        FunctionalJson {
            alphabet: self.alphabet().names(),
            truncation: self.truncation(),
            kind: self.kind,
            words,
            unit: general.then(|| rational::format(&self.values[0])),
            bars: general.then_some(bars),
        }
    }

    pub fn from_json(j: &FunctionalJson) -> Result<Self> {
        let alphabet = Alphabet::from_names(&j.alphabet)?;
        if j.truncation == 0 {
            return Err(Error::Domain("truncation must be at least 1".into()));
        }
        let basis = Basis::get(&alphabet, j.truncation)?;
        let mut values = vec![Rational::zero(); basis.len()];
        let mut seen = vec![false; basis.len()];
        let mut put = |key: &str, v: &str, want_word: bool| -> Result<()> {
            let m = alphabet.parse_monomial(key)?;
            if (m.words().len() == 1) != want_word {
                return Err(Error::Parse(format!("{key:?} is in the wrong section")));
            }
            let i = basis.index_of(&m)?;
            values[i] = rational::parse(v)?;
            seen[i] = true;
            Ok(())
        };
        for (k, v) in &j.words {
            put(k, v, true)?;
        }
        if let Some(bars) = &j.bars {
            if j.kind != Kind::General {
                return Err(Error::Parse("only general functionals carry bar values".into()));
            }
            for (k, v) in bars {
                put(k, v, false)?;
            }
        }
        for &wi in basis.word_indices() {
            if !seen[wi as usize] {
                return Err(Error::MissingValue(basis.render(wi as usize)));
            }
        }
        if let Some(u) = &j.unit {
            values[0] = rational::parse(u)?;
        }
        let mut f = Functional {
            basis,
            kind: j.kind,
            values,
        };
        f.refresh_multibar();
        Ok(f)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("serializable")
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let j: FunctionalJson = serde_json::from_str(s)?;
        Self::from_json(&j)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    #[test]
    fn character_lift_is_multiplicative() {
        let f = Functional::univariate_character(&[int(1), int(1), int(1)]).unwrap();
        assert_eq!(f.at("1").unwrap(), &int(1));
        assert_eq!(f.at("aa|a").unwrap(), &int(1));
        let ab = Alphabet::first(2);
        let mut vals = BTreeMap::new();
        for s in ["a", "b", "aa", "ab", "ba", "bb"] {
            vals.insert(ab.parse_word(s).unwrap(), int(s.len() as i64 + 1));
        }
        let g = Functional::lift(Kind::Character, &vals, &ab, 2).unwrap();
        assert_eq!(g.at("a|b").unwrap(), &int(4));
        assert!(g.is_character());
    }

    #[test]
    fn infchar_lift_vanishes_on_bars() {
        let f = Functional::univariate_infchar(&[int(2), int(3)]).unwrap();
        assert_eq!(f.at("a|a").unwrap(), &int(0));
        assert_eq!(f.at("1").unwrap(), &int(0));
        assert!(f.is_infchar());
    }

    #[test]
    fn lift_reports_missing_words() {
        let ab = Alphabet::first(2);
        let mut vals = BTreeMap::new();
        vals.insert(ab.parse_word("a").unwrap(), int(1));
        let err = Functional::lift(Kind::Character, &vals, &ab, 1).unwrap_err();
        assert_eq!(err.to_string(), "missing value for word \"b\"");
    }

    #[test]
    fn json_round_trip() {
        let f = Functional::univariate_character(&[frac(1, 2), int(2), frac(-7, 3)]).unwrap();
        let s = f.to_json_string();
        assert!(s.contains("\"aa\": \"2/1\""));
        let g = Functional::from_json_str(&s).unwrap();
        assert_eq!(f, g);
        assert_eq!(g.kind(), Kind::Character);

        let h = (&f - &Functional::counit(f.basis())).into_general();
        let back = Functional::from_json_str(&h.to_json_string()).unwrap();
        assert_eq!(h, back);
        assert_eq!(back.kind(), Kind::General);
    }

    #[test]
    fn json_schema_errors() {
        let bad = r#"{"alphabet":["a"],"truncation":2,"kind":"character","words":{"a":"1/1"}}"#;
        assert!(matches!(Functional::from_json_str(bad), Err(Error::MissingValue(_))));
        let bad = r#"{"alphabet":["a"],"truncation":1,"kind":"character","words":{"a":"1/0"}}"#;
        assert!(Functional::from_json_str(bad).is_err());
        let bad = r#"{"alphabet":["a"],"truncation":1,"kind":"weird","words":{}}"#;
        assert!(Functional::from_json_str(bad).is_err());
    }

    #[test]
    fn kind_checks() {
        let f = Functional::univariate_character(&[int(1), int(5)]).unwrap();
        assert!(!f.is_infchar());
        let g = f.clone().into_general().with_kind(Kind::Character).unwrap();
        assert_eq!(g.kind(), Kind::Character);
        assert!(f.into_general().with_kind(Kind::InfChar).is_err());
    }
}
