use std::collections::BTreeMap;

use super::{NoncrossingPartition, PartitionJson};
use crate::error::{Error, Result};

/// A non-crossing partition with an increasing bijection blocks -> `[|pi|]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonotonePartition {
    base: NoncrossingPartition,
    /// `labels[b]` is the (1-based) label of block `b`.
    labels: Vec<usize>,
}

impl MonotonePartition {
    pub fn new(base: NoncrossingPartition, labels: Vec<usize>) -> Result<Self> {
        let k = base.num_blocks();
        if labels.len() != k {
            return Err(Error::InvalidPartition(format!(
                "expected {k} labels, got {}",
                labels.len()
            )));
        }
        let mut seen = vec![false; k];
        for &l in &labels {
            if l == 0 || l > k || seen[l - 1] {
                return Err(Error::InvalidPartition("labelling is not a bijection".into()));
            }
            seen[l - 1] = true;
        }
        for a in 0..k {
            for b in 0..k {
                if base.encloses(a, b) && labels[a] >= labels[b] {
                    return Err(Error::InvalidPartition(
                        "labelling does not increase along nesting".into(),
                    ));
                }
            }
        }
        Ok(MonotonePartition { base, labels })
    }

    pub(crate) fn new_unchecked(base: NoncrossingPartition, labels: Vec<usize>) -> Self {
        MonotonePartition { base, labels }
    }

    pub fn base(&self) -> &NoncrossingPartition {
        &self.base
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    /// Blocks listed by increasing label: `(pi_1, ..., pi_k)`.
    pub fn blocks_by_label(&self) -> Vec<&[usize]> {
        let mut order: Vec<usize> = (0..self.labels.len()).collect();
        order.sort_by_key(|&b| self.labels[b]);
        order
            .into_iter()
            .map(|b| self.base.blocks()[b].as_slice())
            .collect()
    }

    pub fn to_json(&self) -> PartitionJson {
        let mut j = PartitionJson::from(&self.base);
        let labels: BTreeMap<String, usize> = self
            .base
            .blocks()
            .iter()
            .zip(&self.labels)
            .map(|(b, &l)| (format!("{b:?}").replace(' ', ""), l))
            .collect();
        j.labels = Some(labels);
        j
    }
}

/// All increasing labellings (linear extensions of the nesting order),
/// generated by assigning labels 1, 2, ... and trying eligible blocks in
/// block order.
pub fn linear_extensions(p: &NoncrossingPartition) -> Vec<Vec<usize>> {
    let parents = p.parents();
    let k = p.num_blocks();
    let mut out = Vec::new();
    let mut labels = vec![0usize; k];
    fn rec(
        next: usize,
        k: usize,
        parents: &[Option<usize>],
        labels: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if next > k {
            out.push(labels.clone());
            return;
        }
        for b in 0..k {
            if labels[b] != 0 {
                continue;
            }
            let ready = match parents[b] {
                Some(par) => labels[par] != 0,
                None => true,
            };
            if ready {
                labels[b] = next;
                rec(next + 1, k, parents, labels, out);
                labels[b] = 0;
            }
        }
    }
    rec(1, k, &parents, &mut labels, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_decreasing_labels() {
        let p = NoncrossingPartition::from_blocks(3, vec![vec![1, 3], vec![2]]).unwrap();
        assert!(MonotonePartition::new(p.clone(), vec![2, 1]).is_err());
        assert!(MonotonePartition::new(p.clone(), vec![1, 1]).is_err());
        let m = MonotonePartition::new(p, vec![1, 2]).unwrap();
        assert_eq!(m.blocks_by_label(), vec![&[1, 3][..], &[2][..]]);
    }

    #[test]
    fn json_labels() {
        let p = NoncrossingPartition::from_blocks(4, vec![vec![1, 4], vec![2, 3]]).unwrap();
        let m = MonotonePartition::new(p, vec![1, 2]).unwrap();
        let j = serde_json::to_string(&m.to_json()).unwrap();
        assert_eq!(j, r#"{"n":4,"blocks":[[1,4],[2,3]],"labels":{"[1,4]":1,"[2,3]":2}}"#);
    }

    #[test]
    fn extensions_of_vee() {
        let p = NoncrossingPartition::from_blocks(4, vec![vec![1, 4], vec![2], vec![3]]).unwrap();
        assert_eq!(linear_extensions(&p), vec![vec![1, 2, 3], vec![1, 3, 2]]);
    }
}
