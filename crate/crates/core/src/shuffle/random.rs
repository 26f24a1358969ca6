//! Seeded random inputs for property checks: rationals `p/q` with
//! `p` in `[-9, 9]` and `q` in `[1, 4]`.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::basis::Basis;
use super::functional::{Functional, Kind};
use crate::rational::{self, Rational};

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_rational<R: Rng + ?Sized>(rng: &mut R) -> Rational {
    let p = rng.gen_range(-9i64..=9);
    let q = rng.gen_range(1i64..=4);
    rational::frac(p, q)
}

fn random_words<R: Rng + ?Sized>(basis: &Basis, rng: &mut R) -> Vec<Rational> {
    basis
        .word_indices()
        .iter()
        .map(|_| random_rational(rng))
        .collect()
}

pub fn random_character<R: Rng + ?Sized>(basis: &Arc<Basis>, rng: &mut R) -> Functional {
    let words = random_words(basis, rng);
    Functional::from_word_values(basis, Kind::Character, &words)
}

pub fn random_infchar<R: Rng + ?Sized>(basis: &Arc<Basis>, rng: &mut R) -> Functional {
    let words = random_words(basis, rng);
    Functional::from_word_values(basis, Kind::InfChar, &words)
}

/// Independent random values on every monomial, the unit included.
pub fn random_general<R: Rng + ?Sized>(basis: &Arc<Basis>, rng: &mut R) -> Functional {
    let values = (0..basis.len()).map(|_| random_rational(rng)).collect();
    Functional::general(basis, values).expect("basis-sized")
}

/// Like [`random_general`] but with value 1 at the unit.
pub fn random_unital<R: Rng + ?Sized>(basis: &Arc<Basis>, rng: &mut R) -> Functional {
    let mut values: Vec<Rational> = (0..basis.len()).map(|_| random_rational(rng)).collect();
    values[0] = rational::one();
    Functional::general(basis, values).expect("basis-sized")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shuffle::word::Alphabet;

    #[test]
    fn reproducible() {
        let b = Basis::get(&Alphabet::univariate(), 4).unwrap();
        let f = random_general(&b, &mut seeded(3));
        let g = random_general(&b, &mut seeded(3));
        assert_eq!(f, g);
        assert!(random_character(&b, &mut seeded(1)).is_character());
        assert!(random_infchar(&b, &mut seeded(1)).is_infchar());
    }

    #[test]
    fn range() {
        let mut rng = seeded(9);
        for _ in 0..500 {
            let r = random_rational(&mut rng);
            assert!(r.numer().magnitude() <= &9u32.into());
            assert!(r.denom() <= &4.into());
        }
    }
}
