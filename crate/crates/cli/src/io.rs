//! Reading inputs and writing outputs.

use std::io::{Read, Write};
use std::path::PathBuf;

use ncshuffle_core::cumulants::{CumulantFamily, PairState};
use ncshuffle_core::{rational, Error, Functional, Rational};
use serde::Serialize;

use crate::error::{CliError, CliResult};

pub const MAX_DEGREE_VAR: &str = "NCSHUFFLE_MAX_DEGREE";
const DEFAULT_MAX_DEGREE: usize = 8;

/// The truncation cap from the environment.
pub fn max_degree() -> CliResult<usize> {
    match std::env::var(MAX_DEGREE_VAR) {
        Err(_) => Ok(DEFAULT_MAX_DEGREE),
        Ok(v) => v
            .trim()
            .parse()
            .ok()
            .filter(|&d| d >= 1)
            .ok_or_else(|| CliError::Usage(format!("{MAX_DEGREE_VAR} must be a positive integer, got {v:?}"))),
    }
}

pub fn check_degree(what: &str, degree: usize) -> CliResult<()> {
    let cap = max_degree()?;
    if degree > cap {
        return Err(Error::Limit {
            family: what.to_string(),
            n: degree,
            limit: cap,
        }
        .into());
    }
    Ok(())
}

pub fn parse_rational(s: &str) -> Result<Rational, String> {
    rational::parse(s).map_err(|e| e.to_string())
}

fn read_source(path: &str) -> CliResult<String> {
    let mut s = String::new();
    if path == "-" {
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::Io(PathBuf::from("<stdin>"), e))?;
    } else {
        s = std::fs::read_to_string(path).map_err(|e| CliError::Io(PathBuf::from(path), e))?;
    }
    Ok(s)
}

/// Applies `--truncation` and the degree cap.
fn fit(f: Functional, truncation: Option<usize>) -> CliResult<Functional> {
    let f = match truncation {
        Some(n) if n != f.truncation() => f.truncate(n)?,
        _ => f,
    };
    check_degree("truncation", f.truncation())?;
    Ok(f)
}

pub fn load_functional(path: &str, truncation: Option<usize>) -> CliResult<Functional> {
    fit(Functional::from_json_str(&read_source(path)?)?, truncation)
}

/// Univariate moments `m_1, m_2, ...` given inline as `1,2,5`.
pub fn inline_moments(list: &str, truncation: Option<usize>) -> CliResult<Functional> {
    let values = list
        .split(',')
        .map(|v| rational::parse(v.trim()))
        .collect::<Result<Vec<_>, _>>()?;
    fit(Functional::univariate_character(&values)?, truncation)
}

pub fn load_cumulants(path: &str, truncation: Option<usize>) -> CliResult<CumulantFamily> {
    let c = CumulantFamily::from_json_str(&read_source(path)?)?;
    let values = fit(c.values().clone(), truncation)?;
    Ok(CumulantFamily::new(c.kind().clone(), values)?)
}

pub fn load_pair(path: &str, truncation: Option<usize>) -> CliResult<PairState> {
    let p = PairState::from_json_str(&read_source(path)?)?;
    Ok(PairState::new(fit(p.phi, truncation)?, fit(p.psi, truncation)?)?)
}

pub struct Output(Option<PathBuf>);

impl Output {
    pub fn new(path: Option<PathBuf>) -> Self {
        Output(path)
    }

    pub fn text(&self, s: &str) -> CliResult<()> {
        match &self.0 {
            None => {
                let mut out = std::io::stdout().lock();
                out.write_all(s.as_bytes())
                    .and_then(|_| out.flush())
                    .map_err(|e| CliError::Io(PathBuf::from("<stdout>"), e))
            }
            Some(p) => std::fs::write(p, s).map_err(|e| CliError::Io(p.clone(), e)),
        }
    }

    pub fn json<T: Serialize>(&self, value: &T) -> CliResult<()> {
        let mut s = serde_json::to_string_pretty(value)?;
        s.push('\n');
        self.text(&s)
    }

}
