use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A non-crossing partition of `[n]`.
///
/// Stored canonically as the block index of each position, with blocks
/// numbered by their minimal element. The derived ordering is therefore the
/// lexicographic order on that vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NoncrossingPartition {
    labels: Vec<usize>,
    blocks: Vec<Vec<usize>>,
}

impl NoncrossingPartition {
    /// Builds a partition from 1-based blocks given in any order.
    pub fn from_blocks(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidPartition("ground set must be non-empty".into()));
        }
        let mut labels = vec![usize::MAX; n];
        for (b, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            for &i in block {
                if i == 0 || i > n {
                    return Err(Error::IndexOutOfRange { index: i, len: n });
                }
                if labels[i - 1] != usize::MAX {
                    return Err(Error::InvalidPartition(format!("index {i} appears twice")));
                }
                labels[i - 1] = b;
            }
        }
        if let Some(i) = labels.iter().position(|&l| l == usize::MAX) {
            return Err(Error::InvalidPartition(format!("index {} not covered", i + 1)));
        }
        Self::from_labels(&labels)
    }

    /// Builds a partition from an arbitrary block labelling of positions.
    pub fn from_labels(raw: &[usize]) -> Result<Self> {
        if raw.is_empty() {
            return Err(Error::InvalidPartition("ground set must be non-empty".into()));
        }
        let mut remap = std::collections::HashMap::new();
        let mut labels = Vec::with_capacity(raw.len());
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for (pos, l) in raw.iter().enumerate() {
            let next = remap.len();
            let b = *remap.entry(*l).or_insert(next);
            if b == blocks.len() {
                blocks.push(Vec::new());
            }
            blocks[b].push(pos + 1);
            labels.push(b);
        }
        let p = NoncrossingPartition { labels, blocks };
        if !p.check_noncrossing() {
            return Err(Error::InvalidPartition(format!("crossing blocks in {p}")));
        }
        Ok(p)
    }

    /// Trusted constructor for canonical labels produced by the enumerators.
    pub(crate) fn from_canonical_labels(labels: Vec<usize>) -> Self {
        let k = labels.iter().copied().max().map_or(0, |m| m + 1);
        let mut blocks = vec![Vec::new(); k];
        for (pos, &b) in labels.iter().enumerate() {
            blocks[b].push(pos + 1);
        }
        NoncrossingPartition { labels, blocks }
    }

    /// Single-block partition `1_n`.
    pub fn full(n: usize) -> Self {
        Self::from_canonical_labels(vec![0; n])
    }

    /// All-singletons partition `0_n`.
    pub fn singletons(n: usize) -> Self {
        Self::from_canonical_labels((0..n).collect())
    }

    fn check_noncrossing(&self) -> bool {
        let n = self.labels.len();
        let last: Vec<usize> = self.blocks.iter().map(|b| *b.last().unwrap()).collect();
        let mut stack: Vec<usize> = Vec::new();
        let mut seen = vec![false; self.blocks.len()];
        for pos in 1..=n {
            let b = self.labels[pos - 1];
            if seen[b] {
                if stack.last() != Some(&b) {
                    return false;
                }
                if last[b] == pos {
                    stack.pop();
                }
            } else {
                seen[b] = true;
                if last[b] != pos {
                    stack.push(b);
                }
            }
        }
        true
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// Blocks as sorted 1-based index sets, ordered by minimum.
    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Block index (0-based, canonical) of each position.
    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn block_of(&self, pos: usize) -> usize {
        self.labels[pos - 1]
    }

    /// `1` and `n` lie in the same block.
    pub fn is_irreducible(&self) -> bool {
        self.labels[0] == self.labels[self.n() - 1]
    }

    pub fn is_interval(&self) -> bool {
        self.blocks
            .iter()
            .all(|b| b.last().unwrap() - b[0] + 1 == b.len())
    }

    /// Whether block `outer` strictly encloses block `inner`.
    pub fn encloses(&self, outer: usize, inner: usize) -> bool {
        if outer == inner {
            return false;
        }
        let a = &self.blocks[outer];
        let b = &self.blocks[inner];
        a[0] < b[0] && b.last() < a.last()
    }

    /// Innermost enclosing block of each block, `None` for outer blocks.
    pub fn parents(&self) -> Vec<Option<usize>> {
        (0..self.num_blocks())
            .map(|b| {
                (0..self.num_blocks())
                    .filter(|&a| self.encloses(a, b))
                    .max_by_key(|&a| self.blocks[a][0])
            })
            .collect()
    }

    pub fn is_outer(&self, block: usize) -> bool {
        (0..self.num_blocks()).all(|a| !self.encloses(a, block))
    }

    pub fn outer_flags(&self) -> Vec<bool> {
        self.parents().iter().map(Option::is_none).collect()
    }

    /// Number of inner blocks.
    pub fn inner_count(&self) -> usize {
        self.parents().iter().filter(|p| p.is_some()).count()
    }
}

impl fmt::Display for NoncrossingPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{{")?;
            for (j, x) in b.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "}}")?;
        }
        write!(f, "}}")
    }
}

/// JSON form `{"n": 4, "blocks": [[1,4],[2,3]]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionJson {
    pub n: usize,
    pub blocks: Vec<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub labels: Option<std::collections::BTreeMap<String, usize>>,
}

impl From<&NoncrossingPartition> for PartitionJson {
    fn from(p: &NoncrossingPartition) -> Self {
        PartitionJson {
            n: p.n(),
            blocks: p.blocks.clone(),
            labels: None,
        }
    }
}

impl TryFrom<&PartitionJson> for NoncrossingPartition {
    type Error = Error;

    fn try_from(j: &PartitionJson) -> Result<Self> {
        NoncrossingPartition::from_blocks(j.n, j.blocks.clone())
    }
}

/// Subword of `word` at the (1-based) positions of `block`, in increasing order.
pub fn restrict<T: Clone>(word: &[T], block: &[usize]) -> Result<Vec<T>> {
    let mut sorted = block.to_vec();
    sorted.sort_unstable();
    sorted
        .into_iter()
        .map(|i| {
            if i == 0 || i > word.len() {
                Err(Error::IndexOutOfRange {
                    index: i,
                    len: word.len(),
                })
            } else {
                Ok(word[i - 1].clone())
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_crossing() {
        let err = NoncrossingPartition::from_blocks(4, vec![vec![1, 3], vec![2, 4]]);
        assert!(matches!(err, Err(Error::InvalidPartition(_))));
    }

    #[test]
    fn rejects_bad_cover() {
        assert!(NoncrossingPartition::from_blocks(3, vec![vec![1, 2]]).is_err());
        assert!(NoncrossingPartition::from_blocks(3, vec![vec![1, 2], vec![2, 3]]).is_err());
        assert!(NoncrossingPartition::from_blocks(2, vec![vec![1, 2], vec![]]).is_err());
        assert!(NoncrossingPartition::from_blocks(2, vec![vec![1, 5]]).is_err());
    }

    #[test]
    fn canonical_block_order() {
        let p = NoncrossingPartition::from_blocks(4, vec![vec![3, 2], vec![4, 1]]).unwrap();
        assert_eq!(p.blocks(), &[vec![1, 4], vec![2, 3]]);
        assert_eq!(p.labels(), &[0, 1, 1, 0]);
        assert!(p.is_irreducible());
        assert!(!p.is_interval());
        assert_eq!(p.inner_count(), 1);
        assert_eq!(p.to_string(), "{{1,4},{2,3}}");
    }

    #[test]
    fn nesting_parents() {
        let p = NoncrossingPartition::from_blocks(6, vec![vec![1, 6], vec![2, 5], vec![3], vec![4]])
            .unwrap();
        assert_eq!(p.parents(), vec![None, Some(0), Some(1), Some(1)]);
    }

    #[test]
    fn restrict_examples() {
        let w: Vec<char> = "abcd".chars().collect();
        assert_eq!(restrict(&w, &[1, 3]).unwrap(), vec!['a', 'c']);
        assert_eq!(restrict(&w, &[1, 2, 3, 4]).unwrap(), w);
        let aaaa: Vec<char> = "aaaa".chars().collect();
        assert_eq!(restrict(&aaaa, &[2, 4]).unwrap(), vec!['a', 'a']);
        assert!(matches!(
            restrict(&w, &[5]),
            Err(Error::IndexOutOfRange { index: 5, len: 4 })
        ));
    }
}
