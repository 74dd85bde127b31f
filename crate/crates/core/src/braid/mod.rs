//! Words in the Artin braid group, their permutations and exponent sums, and
//! a sound-and-complete equality decision via the left-greedy normal form.

pub mod garside;
mod perm;
mod word;

pub use garside::{equal, is_trivial, GarsideNormalForm};
pub use perm::Permutation;
pub use word::{cycle_braid, BraidWord};
