use std::fmt;
use std::str::FromStr;

use super::monotone::linear_extensions;
use super::{MonotonePartition, NoncrossingPartition};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Nc,
    NcIrr,
    Interval,
    Monotone,
    MonotoneIrr,
}

impl Family {
    pub fn is_monotone(self) -> bool {
        matches!(self, Family::Monotone | Family::MonotoneIrr)
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::Nc => "nc",
            Family::NcIrr => "nc_irr",
            Family::Interval => "interval",
            Family::Monotone => "monotone",
            Family::MonotoneIrr => "monotone_irr",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.replace('-', "_").as_str() {
            "nc" => Ok(Family::Nc),
            "nc_irr" => Ok(Family::NcIrr),
            "interval" => Ok(Family::Interval),
            "monotone" => Ok(Family::Monotone),
            "monotone_irr" => Ok(Family::MonotoneIrr),
            _ => Err(Error::Parse(format!("unknown partition family {s:?}"))),
        }
    }
}

/// Upper bounds on `n` accepted by [`enumerate_with`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub nc: usize,
    pub monotone: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { nc: 12, monotone: 10 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Enumeration {
    Plain(Vec<NoncrossingPartition>),
    Monotone(Vec<MonotonePartition>),
}

impl Enumeration {
    pub fn len(&self) -> usize {
        match self {
            Enumeration::Plain(v) => v.len(),
            Enumeration::Monotone(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

pub fn enumerate(n: usize, family: Family) -> Result<Enumeration> {
    enumerate_with(n, family, Limits::default())
}

pub fn enumerate_with(n: usize, family: Family, limits: Limits) -> Result<Enumeration> {
    let limit = if family.is_monotone() {
        limits.monotone
    } else {
        limits.nc
    };
    if n == 0 || n > limit {
        return Err(Error::Limit {
            family: family.name().to_string(),
            n,
            limit,
        });
    }
    Ok(match family {
        Family::Nc => Enumeration::Plain(nc_partitions(n)),
        Family::NcIrr => Enumeration::Plain(irreducible_partitions(n)),
        Family::Interval => Enumeration::Plain(interval_partitions(n)),
        Family::Monotone => Enumeration::Monotone(monotone_partitions(n, false)),
        Family::MonotoneIrr => Enumeration::Monotone(monotone_partitions(n, true)),
    })
}

/// `NC(n)` in lexicographic order of the block-index vector.
///
/// Open blocks form a stack; position `i` may join any open block, which
/// closes every block opened after it, or start a new block.
pub fn nc_partitions(n: usize) -> Vec<NoncrossingPartition> {
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    let mut labels = Vec::with_capacity(n);
    let mut stack: Vec<usize> = Vec::new();
    fn rec(
        n: usize,
        labels: &mut Vec<usize>,
        stack: &mut Vec<usize>,
        blocks: usize,
        out: &mut Vec<NoncrossingPartition>,
    ) {
        if labels.len() == n {
            out.push(NoncrossingPartition::from_canonical_labels(labels.clone()));
            return;
        }
        for depth in 0..stack.len() {
            let b = stack[depth];
            let saved: Vec<usize> = stack.drain(depth + 1..).collect();
            labels.push(b);
            rec(n, labels, stack, blocks, out);
            labels.pop();
            stack.extend(saved);
        }
        stack.push(blocks);
        labels.push(blocks);
        rec(n, labels, stack, blocks + 1, out);
        labels.pop();
        stack.pop();
    }
    rec(n, &mut labels, &mut stack, 0, &mut out);
    out
}

/// `NC^irr(n)`: 1 and n in the same block.
pub fn irreducible_partitions(n: usize) -> Vec<NoncrossingPartition> {
    nc_partitions(n)
        .into_iter()
        .filter(|p| p.is_irreducible())
        .collect()
}

/// `I(n)`: all blocks are intervals.
pub fn interval_partitions(n: usize) -> Vec<NoncrossingPartition> {
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    // each of the n-1 gaps is either a cut or not
    for mask in 0u32..(1 << (n - 1)) {
        let mut labels = Vec::with_capacity(n);
        let mut b = 0;
        labels.push(0);
        for gap in 0..n - 1 {
            if mask & (1 << (n - 2 - gap)) != 0 {
                b += 1;
            }
            labels.push(b);
        }
        out.push(NoncrossingPartition::from_canonical_labels(labels));
    }
    out.sort();
    out
}

/// `M(n)` (or `M^irr(n)`), grouped by base partition in `NC(n)` order.
pub fn monotone_partitions(n: usize, irreducible_only: bool) -> Vec<MonotonePartition> {
    let mut out = Vec::new();
    for p in nc_partitions(n) {
        if irreducible_only && !p.is_irreducible() {
            continue;
        }
        for labels in linear_extensions(&p) {
            out.push(MonotonePartition::new_unchecked(p.clone(), labels));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        assert_eq!(nc_partitions(3).len(), 5);
        assert_eq!(nc_partitions(4).len(), 14);
        assert_eq!(irreducible_partitions(4).len(), 5);
        assert_eq!(interval_partitions(4).len(), 8);
        assert_eq!(monotone_partitions(3, false).len(), 12);
    }

    #[test]
    fn singleton_ground_set() {
        for fam in [
            Family::Nc,
            Family::NcIrr,
            Family::Interval,
            Family::Monotone,
            Family::MonotoneIrr,
        ] {
            assert_eq!(enumerate(1, fam).unwrap().len(), 1, "{fam}");
        }
        assert_eq!(nc_partitions(1), vec![NoncrossingPartition::full(1)]);
    }

    #[test]
    fn sorted_output() {
        let v = nc_partitions(6);
        assert!(v.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn limit_errors_name_the_family() {
        let err = enumerate(13, Family::Nc).unwrap_err();
        assert_eq!(err.to_string(), "nc: n = 13 outside supported range 1..=12");
        assert!(enumerate(11, Family::Monotone).is_err());
        assert!(enumerate(0, Family::Interval).is_err());
        let loose = Limits { nc: 13, monotone: 3 };
        assert!(enumerate_with(4, Family::Monotone, loose).is_err());
    }

    #[test]
    fn family_names_parse() {
        for fam in [Family::Nc, Family::NcIrr, Family::MonotoneIrr] {
            assert_eq!(fam.name().parse::<Family>().unwrap(), fam);
        }
        assert_eq!("nc-irr".parse::<Family>().unwrap(), Family::NcIrr);
        assert!("crossing".parse::<Family>().is_err());
    }
}
