//! Permutations, partitions, bicolored letters and the classical
//! permutation statistics.

pub mod alphabet;
pub mod partition;
pub mod permutation;

pub use alphabet::{format_word, parse_word, BicoloredLetter, MarkedSequence, Word};
pub use partition::{partitions, partitions_by_length, Partition};
pub use permutation::{
    enumerate_by_cycle_type, enumerate_permutations, enumerate_permutations_capped, enumerate_with_first,
    eulerian_poly, next_permutation, Permutation, Statistics, DEFAULT_SIZE_CAP,
};

/// `n choose 2`.
pub fn choose2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}
