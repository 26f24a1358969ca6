use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Ordered list of single-character letter names.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Alphabet {
    letters: Vec<char>,
}

impl Alphabet {
    pub fn new(letters: Vec<char>) -> Result<Self> {
        if letters.is_empty() {
            return Err(Error::Parse("alphabet must contain at least one letter".into()));
        }
        if letters.len() > u8::MAX as usize {
            return Err(Error::Parse("alphabet too large".into()));
        }
        for (i, c) in letters.iter().enumerate() {
            if *c == '|' || c.is_whitespace() {
                return Err(Error::Parse(format!("invalid letter {c:?}")));
            }
            if letters[..i].contains(c) {
                return Err(Error::Parse(format!("duplicate letter {c:?}")));
            }
        }
        Ok(Alphabet { letters })
    }

    /// Alphabet from letter names, each of which must be one character long.
    pub fn from_names<S: AsRef<str>>(names: &[S]) -> Result<Self> {
        let mut letters = Vec::with_capacity(names.len());
        for name in names {
            let mut chars = name.as_ref().chars();
            match (chars.next(), chars.next()) {
                (Some(c), None) => letters.push(c),
                _ => {
                    return Err(Error::Parse(format!(
                        "letter names must be single characters, got {:?}",
                        name.as_ref()
                    )))
                }
            }
        }
        Self::new(letters)
    }

    /// The one-letter alphabet `{a}`.
    pub fn univariate() -> Self {
        Alphabet { letters: vec!['a'] }
    }

    /// `{a, b, ...}` with `k` letters.
    pub fn first(k: usize) -> Self {
        assert!((1..=26).contains(&k), "alphabet size must be in 1..=26");
        Alphabet {
            letters: (0..k as u8).map(|i| (b'a' + i) as char).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[char] {
        &self.letters
    }

    pub fn names(&self) -> Vec<String> {
        self.letters.iter().map(|c| c.to_string()).collect()
    }

    pub fn index_of(&self, c: char) -> Option<u8> {
        self.letters.iter().position(|&l| l == c).map(|i| i as u8)
    }

    pub fn parse_word(&self, s: &str) -> Result<Word> {
        let letters = s
            .chars()
            .map(|c| {
                self.index_of(c)
                    .ok_or_else(|| Error::MalformedWord(format!("letter {c:?} not in alphabet")))
            })
            .collect::<Result<Vec<_>>>()?;
        Word::new(letters)
    }

    /// Parses `"ab|c"`; the empty string and `"1"` denote the unit.
    pub fn parse_monomial(&self, s: &str) -> Result<BarMonomial> {
        if s.is_empty() || s == "1" {
            return Ok(BarMonomial::unit());
        }
        let words = s
            .split('|')
            .map(|w| self.parse_word(w))
            .collect::<Result<Vec<_>>>()?;
        Ok(BarMonomial::new(words))
    }

    pub fn render_word(&self, w: &Word) -> String {
        w.0.iter().map(|&i| self.letters[i as usize]).collect()
    }

    pub fn render_monomial(&self, m: &BarMonomial) -> String {
        if m.is_unit() {
            return "1".into();
        }
        m.0.iter()
            .map(|w| self.render_word(w))
            .collect::<Vec<_>>()
            .join("|")
    }
}

/// A non-empty sequence of letter indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Word(Vec<u8>);

impl Word {
    pub fn new(letters: Vec<u8>) -> Result<Self> {
        if letters.is_empty() {
            return Err(Error::MalformedWord("words must be non-empty".into()));
        }
        Ok(Word(letters))
    }

    pub(crate) fn from_vec(letters: Vec<u8>) -> Self {
        debug_assert!(!letters.is_empty());
        Word(letters)
    }

    /// `a^n` over letter 0.
    pub fn power(n: usize) -> Self {
        Word::new(vec![0; n]).expect("positive power")
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ".")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// `w_1|...|w_r`; the empty sequence is the unit.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct BarMonomial(Vec<Word>);

impl BarMonomial {
    pub fn new(words: Vec<Word>) -> Self {
        BarMonomial(words)
    }

    pub fn unit() -> Self {
        BarMonomial(Vec::new())
    }

    pub fn word(w: Word) -> Self {
        BarMonomial(vec![w])
    }

    pub fn words(&self) -> &[Word] {
        &self.0
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(Word::len).sum()
    }

    /// Bar concatenation.
    pub fn concat(&self, other: &BarMonomial) -> BarMonomial {
        let mut words = self.0.clone();
        words.extend(other.0.iter().cloned());
        BarMonomial(words)
    }
}

impl From<Word> for BarMonomial {
    fn from(w: Word) -> Self {
        BarMonomial::word(w)
    }
}

/// By degree, then lexicographically on the word sequence.
impl Ord for BarMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for BarMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_render() {
        let ab = Alphabet::first(2);
        let m = ab.parse_monomial("ab|b").unwrap();
        assert_eq!(m.degree(), 3);
        assert_eq!(m.words().len(), 2);
        assert_eq!(ab.render_monomial(&m), "ab|b");
        assert!(ab.parse_monomial("1").unwrap().is_unit());
        assert!(ab.parse_monomial("a||b").is_err());
        assert!(ab.parse_word("ac").is_err());
    }

    #[test]
    fn alphabet_validation() {
        assert!(Alphabet::from_names(&["a", "bb"]).is_err());
        assert!(Alphabet::from_names(&["a", "a"]).is_err());
        assert!(Alphabet::from_names::<&str>(&[]).is_err());
        assert_eq!(Alphabet::from_names(&["x", "y"]).unwrap().len(), 2);
    }

    #[test]
    fn canonical_order() {
        let ab = Alphabet::first(2);
        let mut ms: Vec<BarMonomial> = ["b", "a|a", "aa", "1", "a"]
            .iter()
            .map(|s| ab.parse_monomial(s).unwrap())
            .collect();
        ms.sort();
        let shown: Vec<String> = ms.iter().map(|m| ab.render_monomial(m)).collect();
        assert_eq!(shown, ["1", "a", "b", "a|a", "aa"]);
    }
}
