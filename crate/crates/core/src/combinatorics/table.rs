use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use super::enumerate::nc_partitions;
use super::forest::nesting_forest;
use super::omega::omega;
use super::NoncrossingPartition;
use crate::rational::Rational;

/// Per-partition statistics used by the partition-sum formulas.
#[derive(Clone, Debug)]
pub struct PartitionData {
    pub partition: NoncrossingPartition,
    pub outer: Vec<bool>,
    pub tree_factorial: u128,
    /// The omega coefficient, present for irreducible partitions only.
    pub omega: Option<Rational>,
}

impl PartitionData {
    pub fn inner_count(&self) -> usize {
        self.outer.iter().filter(|o| !**o).count()
    }
}

/// `NC(n)` with cached statistics, shared across calls.
pub fn partition_table(n: usize) -> Arc<Vec<PartitionData>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Vec<PartitionData>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(t) = cache.lock().unwrap().get(&n) {
        return t.clone();
    }
    let table: Vec<PartitionData> = nc_partitions(n)
        .into_iter()
        .map(|p| PartitionData {
            outer: p.outer_flags(),
            tree_factorial: nesting_forest(&p).tree_factorial(),
            omega: p.is_irreducible().then(|| omega(&p).expect("irreducible")),
            partition: p,
        })
        .collect();
    let table = Arc::new(table);
    cache.lock().unwrap().insert(n, table.clone());
    table
}
