use super::NoncrossingPartition;

/// Nesting forest of a non-crossing partition. Node `i` stands for block `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootedForest {
    children: Vec<Vec<usize>>,
    roots: Vec<usize>,
}

impl RootedForest {
    pub fn from_parents(parents: &[Option<usize>]) -> Self {
        let mut children = vec![Vec::new(); parents.len()];
        let mut roots = Vec::new();
        for (node, parent) in parents.iter().enumerate() {
            match parent {
                Some(p) => children[*p].push(node),
                None => roots.push(node),
            }
        }
        RootedForest { children, roots }
    }

    pub fn node_count(&self) -> usize {
        self.children.len()
    }

    pub fn roots(&self) -> &[usize] {
        &self.roots
    }

    pub fn children(&self, node: usize) -> &[usize] {
        &self.children[node]
    }

    pub fn subtree_size(&self, node: usize) -> usize {
        1 + self.children[node]
            .iter()
            .map(|&c| self.subtree_size(c))
            .sum::<usize>()
    }

    /// `t! = |t| * t_1! ... t_s!`, multiplicative over the trees of the forest;
    /// equivalently the product of all subtree sizes.
    pub fn tree_factorial(&self) -> u128 {
        (0..self.node_count())
            .map(|v| self.subtree_size(v) as u128)
            .product()
    }
}

pub fn nesting_forest(p: &NoncrossingPartition) -> RootedForest {
    RootedForest::from_parents(&p.parents())
}

pub fn tree_factorial(forest: &RootedForest) -> u128 {
    forest.tree_factorial()
}

/// Number of increasing block labellings, `|pi|! / t(pi)!`.
pub fn monotone_count(p: &NoncrossingPartition) -> u128 {
    let k = p.num_blocks() as u128;
    let fact: u128 = (1..=k).product();
    fact / nesting_forest(p).tree_factorial()
}

/// An irreducible component of a partition, living on `[start, start + len)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    /// First (1-based) position covered by the component.
    pub start: usize,
    /// The component renumbered onto `[1, len]`.
    pub partition: NoncrossingPartition,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub outer_blocks: Vec<Vec<usize>>,
    pub inner_blocks: Vec<Vec<usize>>,
    pub irreducible_components: Vec<Component>,
}

pub fn classify(p: &NoncrossingPartition) -> Classification {
    let outer = p.outer_flags();
    let mut outer_blocks = Vec::new();
    let mut inner_blocks = Vec::new();
    for (b, block) in p.blocks().iter().enumerate() {
        if outer[b] {
            outer_blocks.push(block.clone());
        } else {
            inner_blocks.push(block.clone());
        }
    }
    let mut components = Vec::new();
    let mut start = 1;
    while start <= p.n() {
        let head = p.block_of(start);
        let end = *p.blocks()[head].last().unwrap();
        let labels: Vec<usize> = (start..=end).map(|i| p.block_of(i)).collect();
        components.push(Component {
            start,
            partition: NoncrossingPartition::from_labels(&labels)
                .expect("sub-interval of a non-crossing partition is non-crossing"),
        });
        start = end + 1;
    }
    Classification {
        outer_blocks,
        inner_blocks,
        irreducible_components: components,
    }
}

/// Reassembles a partition from consecutive components.
pub fn concat_components(components: &[Component]) -> Option<NoncrossingPartition> {
    let mut labels = Vec::new();
    let mut offset = 0;
    for c in components {
        if c.start != labels.len() + 1 {
            return None;
        }
        labels.extend(c.partition.labels().iter().map(|l| l + offset));
        offset += c.partition.num_blocks();
    }
    NoncrossingPartition::from_labels(&labels).ok()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nc(n: usize, blocks: &[&[usize]]) -> NoncrossingPartition {
        NoncrossingPartition::from_blocks(n, blocks.iter().map(|b| b.to_vec()).collect()).unwrap()
    }

    #[test]
    fn classify_nested() {
        let c = classify(&nc(4, &[&[1, 4], &[2, 3]]));
        assert_eq!(c.outer_blocks, vec![vec![1, 4]]);
        assert_eq!(c.inner_blocks, vec![vec![2, 3]]);
        assert_eq!(c.irreducible_components.len(), 1);
    }

    #[test]
    fn classify_disjoint() {
        let c = classify(&nc(4, &[&[1, 2], &[3, 4]]));
        assert_eq!(c.outer_blocks, vec![vec![1, 2], vec![3, 4]]);
        assert!(c.inner_blocks.is_empty());
        assert_eq!(c.irreducible_components.len(), 2);
        assert_eq!(c.irreducible_components[1].start, 3);
    }

    #[test]
    fn classify_mixed() {
        let p = nc(4, &[&[1, 3], &[2], &[4]]);
        let c = classify(&p);
        assert_eq!(c.outer_blocks, vec![vec![1, 3], vec![4]]);
        assert_eq!(c.inner_blocks, vec![vec![2]]);
        let comps = &c.irreducible_components;
        assert_eq!(comps[0].partition, nc(3, &[&[1, 3], &[2]]));
        assert_eq!(comps[1].partition, nc(1, &[&[1]]));
        assert_eq!(concat_components(comps).unwrap(), p);
    }

    #[test]
    fn factorials_and_counts() {
        let chain = nc(3, &[&[1, 3], &[2]]);
        assert_eq!(nesting_forest(&chain).tree_factorial(), 2);
        assert_eq!(monotone_count(&chain), 1);

        let flat = NoncrossingPartition::singletons(4);
        let f = nesting_forest(&flat);
        assert_eq!(f.roots().len(), 4);
        assert_eq!(f.tree_factorial(), 1);
        assert_eq!(monotone_count(&flat), 24);

        let vee = nc(4, &[&[1, 4], &[2], &[3]]);
        let f = nesting_forest(&vee);
        assert_eq!(f.roots(), &[0]);
        assert_eq!(f.children(0), &[1, 2]);
        assert_eq!(f.tree_factorial(), 3);
        assert_eq!(monotone_count(&vee), 2);
    }
}
