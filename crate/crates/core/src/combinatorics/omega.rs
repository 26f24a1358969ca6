use num_bigint::BigInt;

use super::forest::{nesting_forest, RootedForest};
use super::NoncrossingPartition;
use crate::error::{Error, Result};
use crate::rational::{self, Rational};

/// Number of strictly order-preserving maps from the forest into `[j]`.
fn strict_maps(forest: &RootedForest, j: usize) -> i128 {
    // ways[v][x]: maps of the subtree at v with v sent to x (x in 1..=j)
    fn ways(forest: &RootedForest, v: usize, j: usize) -> Vec<i128> {
        let mut acc = vec![1i128; j + 1];
        acc[0] = 0;
        for &c in forest.children(v) {
            let child = ways(forest, c, j);
            // suffix sums: child values strictly above x
            let mut above = vec![0i128; j + 2];
            for x in (1..=j).rev() {
                above[x] = above[x + 1] + child[x];
            }
            for x in 1..=j {
                acc[x] *= above[x + 1];
            }
        }
        acc
    }
    forest
        .roots()
        .iter()
        .map(|&r| ways(forest, r, j).iter().sum::<i128>())
        .product()
}

fn require_irreducible(p: &NoncrossingPartition) -> Result<()> {
    if p.is_irreducible() {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "omega coefficients are defined on irreducible partitions, got {p}"
        )))
    }
}

/// Surjective strictly order-preserving maps `blocks -> [k]` for the nesting order.
pub fn omega_k(p: &NoncrossingPartition, k: usize) -> Result<u128> {
    require_irreducible(p)?;
    let forest = nesting_forest(p);
    // inclusion-exclusion over the image
    let mut total: i128 = 0;
    for j in 0..=k {
        let binom = rational::binomial(k, j).to_integer();
        let binom: i128 = i128::try_from(binom).expect("small binomial");
        let term = binom * strict_maps(&forest, j);
        if (k - j).is_multiple_of(2) {
            total += term;
        } else {
            total -= term;
        }
    }
    Ok(total as u128)
}

/// `omega(pi) = sum_k (-1)^(k-1) omega_k(pi) / k`.
pub fn omega(p: &NoncrossingPartition) -> Result<Rational> {
    require_irreducible(p)?;
    let mut acc = rational::zero();
    for k in 1..=p.num_blocks() {
        let count = Rational::from_integer(BigInt::from(omega_k(p, k)?));
        acc += rational::sign(k - 1) * count / rational::int(k as i64);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    fn nc(n: usize, blocks: &[&[usize]]) -> NoncrossingPartition {
        NoncrossingPartition::from_blocks(n, blocks.iter().map(|b| b.to_vec()).collect()).unwrap()
    }

    #[test]
    fn single_block() {
        let p = NoncrossingPartition::full(5);
        assert_eq!(omega_k(&p, 1).unwrap(), 1);
        assert_eq!(omega(&p).unwrap(), rational::one());
    }

    #[test]
    fn two_chain() {
        let p = nc(3, &[&[1, 3], &[2]]);
        assert_eq!(omega_k(&p, 1).unwrap(), 0);
        assert_eq!(omega_k(&p, 2).unwrap(), 1);
        assert_eq!(omega(&p).unwrap(), frac(-1, 2));
    }

    #[test]
    fn vee() {
        let p = nc(4, &[&[1, 4], &[2], &[3]]);
        assert_eq!(omega_k(&p, 2).unwrap(), 1);
        assert_eq!(omega_k(&p, 3).unwrap(), 2);
        assert_eq!(omega(&p).unwrap(), frac(1, 6));
    }

    #[test]
    fn reducible_rejected() {
        let p = nc(2, &[&[1], &[2]]);
        assert!(matches!(omega(&p), Err(Error::Domain(_))));
        assert!(omega_k(&p, 1).is_err());
    }
}
