//! Fixtures shared by the benchmarks.

use ncshuffle_core::cumulants::PairState;
use ncshuffle_core::shuffle::random::{random_character, seeded};
use ncshuffle_core::shuffle::Basis;
use ncshuffle_core::{Alphabet, Functional};

/// A seeded random character on `letters` letters up to degree `n`.
pub fn character(letters: usize, n: usize, seed: u64) -> Functional {
    let basis = Basis::get(&Alphabet::first(letters), n).expect("basis within limits");
    random_character(&basis, &mut seeded(seed))
}

pub fn pair(letters: usize, n: usize, seed: u64) -> PairState {
    PairState::new(character(letters, n, seed), character(letters, n, seed + 1)).expect("compatible")
}

#[cfg(test)]
mod tests {
    #[test]
    fn fixtures_are_deterministic() {
        assert_eq!(super::character(1, 4, 9), super::character(1, 4, 9));
        assert_ne!(super::character(1, 4, 9), super::character(1, 4, 10));
    }
}
