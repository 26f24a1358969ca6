use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};
use crate::shuffle::{Functional, FunctionalJson, Kind};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum CumulantKind {
    Free,
    Boolean,
    Monotone,
    CFree,
    CMonotone,
    TBoolean(Rational),
    TMonotone(Rational),
}

impl CumulantKind {
    pub fn name(&self) -> &'static str {
        match self {
            CumulantKind::Free => "free",
            CumulantKind::Boolean => "boolean",
            CumulantKind::Monotone => "monotone",
            CumulantKind::CFree => "cfree",
            CumulantKind::CMonotone => "cmonotone",
            CumulantKind::TBoolean(_) => "tboolean",
            CumulantKind::TMonotone(_) => "tmonotone",
        }
    }

    pub fn parameter(&self) -> Option<&Rational> {
        match self {
            CumulantKind::TBoolean(t) | CumulantKind::TMonotone(t) => Some(t),
            _ => None,
        }
    }

    /// Free, Boolean or monotone: the families of a single character.
    pub fn is_basic(&self) -> bool {
        matches!(
            self,
            CumulantKind::Free | CumulantKind::Boolean | CumulantKind::Monotone
        )
    }

    /// Builds a kind from its name and the parameter `t` where one is needed.
    pub fn from_name(name: &str, t: Option<Rational>) -> Result<Self> {
        let needs_t = |k: fn(Rational) -> CumulantKind| {
            t.clone()
                .map(k)
                .ok_or_else(|| Error::Parse(format!("{name} cumulants need a parameter t")))
        };
        let kind = match name.replace('-', "").as_str() {
            "free" => CumulantKind::Free,
            "boolean" => CumulantKind::Boolean,
            "monotone" => CumulantKind::Monotone,
            "cfree" => CumulantKind::CFree,
            "cmonotone" => CumulantKind::CMonotone,
            "tboolean" => return needs_t(CumulantKind::TBoolean),
            "tmonotone" => return needs_t(CumulantKind::TMonotone),
            _ => return Err(Error::Parse(format!("unknown cumulant kind {name:?}"))),
        };
        if t.is_some() {
            return Err(Error::Parse(format!("{name} cumulants take no parameter")));
        }
        Ok(kind)
    }
}

impl FromStr for CumulantKind {
    type Err = Error;

    /// Accepts `free`, `c-free`, `tboolean(1/2)`, `t-monotone(-3)` and so on.
    fn from_str(s: &str) -> Result<Self> {
        match s.split_once('(') {
            Some((name, rest)) => {
                let t = rest
                    .strip_suffix(')')
                    .ok_or_else(|| Error::Parse(format!("unbalanced parameter in {s:?}")))?;
                Self::from_name(name, Some(rational::parse(t)?))
            }
            None => Self::from_name(s, None),
        }
    }
}

impl fmt::Display for CumulantKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.parameter() {
            Some(t) => write!(f, "{}({})", self.name(), rational::format(t)),
            None => f.write_str(self.name()),
        }
    }
}

/// Cumulants as an infinitesimal character, tagged by family.
#[derive(Clone, Debug, PartialEq)]
pub struct CumulantFamily {
    kind: CumulantKind,
    values: Functional,
}

impl CumulantFamily {
    pub fn new(kind: CumulantKind, values: Functional) -> Result<Self> {
        values.require(Kind::InfChar)?;
        Ok(CumulantFamily { kind, values })
    }

    pub(crate) fn new_unchecked(kind: CumulantKind, values: Functional) -> Self {
        debug_assert!(values.is_infchar());
        CumulantFamily { kind, values }
    }

    pub fn kind(&self) -> &CumulantKind {
        &self.kind
    }

    pub fn values(&self) -> &Functional {
        &self.values
    }

    pub fn into_values(self) -> Functional {
        self.values
    }

    pub fn at(&self, word: &str) -> Result<&Rational> {
        self.values.at(word)
    }

    pub fn to_json(&self) -> CumulantFamilyJson {
        let j = self.values.to_json();
        CumulantFamilyJson {
            alphabet: j.alphabet,
            truncation: j.truncation,
            kind: self.kind.name().to_string(),
            t: self.kind.parameter().map(rational::format),
            words: j.words,
        }
    }

    pub fn from_json(j: &CumulantFamilyJson) -> Result<Self> {
        let t = j.t.as_deref().map(rational::parse).transpose()?;
        let kind = CumulantKind::from_name(&j.kind, t)?;
        let values = Functional::from_json(&FunctionalJson {
            alphabet: j.alphabet.clone(),
            truncation: j.truncation,
            kind: Kind::InfChar,
            words: j.words.clone(),
            unit: None,
            bars: None,
        })?;
        Ok(CumulantFamily { kind, values })
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("serializable")
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        Self::from_json(&serde_json::from_str(s)?)
    }
}

/// Serialized [`CumulantFamily`]: a functional's fields with `kind` naming
/// the cumulant family (the values are always an infinitesimal character).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CumulantFamilyJson {
    pub alphabet: Vec<String>,
    pub truncation: usize,
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t: Option<String>,
    pub words: BTreeMap<String, String>,
}

/// A pair of characters `(Φ, Ψ)` on the same basis.
#[derive(Clone, Debug, PartialEq)]
pub struct PairState {
    pub phi: Functional,
    pub psi: Functional,
}

impl PairState {
    pub fn new(phi: Functional, psi: Functional) -> Result<Self> {
        phi.check_compatible(&psi)?;
        phi.require(Kind::Character)?;
        psi.require(Kind::Character)?;
        Ok(PairState { phi, psi })
    }

    /// `(Φ, Φ)`.
    pub fn diagonal(phi: Functional) -> Result<Self> {
        Self::new(phi.clone(), phi)
    }

    /// `(Φ, ε)`.
    pub fn with_counit(phi: Functional) -> Result<Self> {
        let eps = Functional::counit(phi.basis());
        Self::new(phi, eps)
    }

    pub fn to_json(&self) -> PairStateJson {
        PairStateJson {
            phi: self.phi.to_json(),
            psi: self.psi.to_json(),
        }
    }

    pub fn from_json(j: &PairStateJson) -> Result<Self> {
        Self::new(Functional::from_json(&j.phi)?, Functional::from_json(&j.psi)?)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("serializable")
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        Self::from_json(&serde_json::from_str(s)?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairStateJson {
    pub phi: FunctionalJson,
    pub psi: FunctionalJson,
}
