use std::fmt;

use crate::braid::{BraidWord, Permutation};
use crate::error::{Error, Result};

/// Left-greedy normal form `Delta^inf . f_1 ... f_k` over permutation braids.
///
/// Each factor is a positive braid in which every pair of strands crosses at
/// most once, identified with its permutation. No factor equals the identity
/// or the half twist, and consecutive factors are left-weighted: the finishing
/// set of each factor contains the starting set of the next. Two words are
/// equal in the braid group iff their normal forms agree component-wise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GarsideNormalForm {
    n: usize,
    inf: i64,
    factors: Vec<Permutation>,
}

/// Positions `i` (0-based, `i < n-1`) such that `sigma_{i+1}` is a left
/// divisor of the permutation braid: descents of the permutation.
fn starting_set(p: &Permutation) -> u64 {
    let mut mask = 0u64;
    let im = p.images();
    for i in 0..im.len().saturating_sub(1) {
        if im[i] > im[i + 1] {
            mask |= 1 << i;
        }
    }
    mask
}

/// Positions `i` such that `sigma_{i+1}` is a right divisor: descents of the
/// inverse permutation.
fn finishing_set(p: &Permutation) -> u64 {
    starting_set(&p.inverse())
}

/// Right multiplication of a permutation braid by `sigma_{i+1}` (0-based `i`);
/// swaps the values `i` and `i+1`. Valid as a permutation braid iff
/// `i` is not in the finishing set.
fn append_crossing(p: &Permutation, i: usize) -> Permutation {
    let mut images = p.images().to_vec();
    let a = images.iter().position(|&v| v == i).unwrap();
    let b = images.iter().position(|&v| v == i + 1).unwrap();
    images.swap(a, b);
    Permutation::from_images(images).unwrap()
}

/// Strips `sigma_{i+1}` from the left of a permutation braid (0-based `i`);
/// swaps the entries at positions `i` and `i+1`. Requires `i` in the starting
/// set.
fn strip_crossing(p: &Permutation, i: usize) -> Permutation {
    let mut images = p.images().to_vec();
    images.swap(i, i + 1);
    Permutation::from_images(images).unwrap()
}

/// Conjugation by the half twist: `w0 . p . w0`.
fn flip(p: &Permutation) -> Permutation {
    let n = p.n();
    let images: Vec<usize> = (0..n).map(|x| n - 1 - p.apply(n - 1 - x)).collect();
    Permutation::from_images(images).unwrap()
}

/// Makes the adjacent pair `(a, b)` left-weighted by sliding head crossings of
/// `b` into `a`. Returns true if anything moved.
fn left_weight_pair(a: &mut Permutation, b: &mut Permutation) -> bool {
    let mut moved = false;
    loop {
        let movable = starting_set(b) & !finishing_set(a);
        if movable == 0 {
            return moved;
        }
        let i = movable.trailing_zeros() as usize;
        *a = append_crossing(a, i);
        *b = strip_crossing(b, i);
        moved = true;
    }
}

impl GarsideNormalForm {
    /// Computes the normal form of a word. Letters are converted to
    /// permutation braids (a negative letter contributes `Delta^{-1}` times
    /// the complementary permutation braid), the inverse half twists are
    /// pushed to the front through the flip automorphism, and the positive
    /// part is normalized by local left-weighting passes.
    pub fn of_word(word: &BraidWord) -> GarsideNormalForm {
        let n = word.n();
        let w0 = Permutation::order_reversing(n);
        let mut inf: i64 = 0;
        let mut factors: Vec<Permutation> = Vec::with_capacity(word.len());
        let mut neg_parity = 0usize;
        for &letter in word.letters() {
            let i = letter.unsigned_abs() as usize - 1;
            let simple = if letter > 0 {
                Permutation::adjacent_transposition(n, i + 1).unwrap()
            } else {
                inf -= 1;
                neg_parity ^= 1;
                // permutation of Delta . sigma_{i+1}^{-1}
                let mut images: Vec<usize> = (0..n).rev().collect();
                let a = images.iter().position(|&v| v == i).unwrap();
                let b = images.iter().position(|&v| v == i + 1).unwrap();
                images.swap(a, b);
                Permutation::from_images(images).unwrap()
            };
            // Delta^{-1}s appended later flip this factor once each; flipping
            // now by the running parity and once more at the end by the total
            // parity gives the same result, since the flip is an involution.
            let simple = if neg_parity == 1 { flip(&simple) } else { simple };
            if !simple.is_identity() {
                factors.push(simple);
            }
        }
        if neg_parity == 1 {
            for f in &mut factors {
                *f = flip(f);
            }
        }

        // Local left-weighting passes until stable.
        loop {
            let mut changed = false;
            let mut i = 0;
            while i + 1 < factors.len() {
                let (head, tail) = factors.split_at_mut(i + 1);
                let moved = left_weight_pair(&mut head[i], &mut tail[0]);
                if factors[i + 1].is_identity() {
                    factors.remove(i + 1);
                    changed = true;
                    continue;
                }
                if moved {
                    changed = true;
                    if i > 0 {
                        i -= 1;
                        continue;
                    }
                }
                i += 1;
            }
            if !changed {
                break;
            }
        }
        while factors.first() == Some(&w0) {
            factors.remove(0);
            inf += 1;
        }
        GarsideNormalForm { n, inf, factors }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn inf(&self) -> i64 {
        self.inf
    }

    pub fn factors(&self) -> &[Permutation] {
        &self.factors
    }

    pub fn is_identity(&self) -> bool {
        self.inf == 0 && self.factors.is_empty()
    }

    /// Canonical length: the number of permutation-braid factors.
    pub fn canonical_length(&self) -> usize {
        self.factors.len()
    }

    /// Rebuilds a braid word equal to this normal form.
    pub fn to_word(&self) -> BraidWord {
        let n = self.n;
        let delta_word = simple_to_letters(&Permutation::order_reversing(n));
        let mut letters: Vec<i32> = Vec::new();
        if self.inf >= 0 {
            for _ in 0..self.inf {
                letters.extend_from_slice(&delta_word);
            }
        } else {
            let inv: Vec<i32> = delta_word.iter().rev().map(|&l| -l).collect();
            for _ in 0..(-self.inf) {
                letters.extend_from_slice(&inv);
            }
        }
        for f in &self.factors {
            letters.extend(simple_to_letters(f));
        }
        BraidWord::new(n, letters).unwrap()
    }
}

/// A positive word for a permutation braid, obtained by repeatedly stripping
/// the lowest descent.
pub(crate) fn simple_to_letters(p: &Permutation) -> Vec<i32> {
    let mut p = p.clone();
    let mut out = Vec::with_capacity(p.inversions());
    loop {
        let s = starting_set(&p);
        if s == 0 {
            debug_assert!(p.is_identity());
            return out;
        }
        let i = s.trailing_zeros() as usize;
        out.push((i + 1) as i32);
        p = strip_crossing(&p, i);
    }
}

impl fmt::Display for GarsideNormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D^{}", self.inf)?;
        for factor in &self.factors {
            write!(f, " . {factor}")?;
        }
        Ok(())
    }
}

/// Decides equality in the braid group by comparing normal forms.
pub fn equal(w1: &BraidWord, w2: &BraidWord) -> Result<bool> {
    if w1.n() != w2.n() {
        return Err(Error::StrandMismatch(w1.n(), w2.n()));
    }
    Ok(GarsideNormalForm::of_word(w1) == GarsideNormalForm::of_word(w2))
}

/// True iff the word represents the identity braid.
pub fn is_trivial(w: &BraidWord) -> bool {
    GarsideNormalForm::of_word(w).is_identity()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::cycle_braid;

    fn word(n: usize, letters: &[i32]) -> BraidWord {
        BraidWord::new(n, letters.iter().copied()).unwrap()
    }

    #[test]
    fn braid_relations_hold() {
        assert!(equal(&word(3, &[1, 2, 1]), &word(3, &[2, 1, 2])).unwrap());
        assert!(equal(&word(4, &[1, 3]), &word(4, &[3, 1])).unwrap());
        assert!(!equal(&word(2, &[1]), &word(2, &[-1])).unwrap());
        assert!(equal(&word(4, &[1, 2, 3]), &word(4, &[1, 2, 3])).unwrap());
    }

    #[test]
    fn strand_mismatch_is_an_error() {
        assert!(equal(&word(3, &[1]), &word(4, &[1])).is_err());
    }

    #[test]
    fn normal_form_of_letters() {
        let nf = GarsideNormalForm::of_word(&word(3, &[1]));
        assert_eq!(nf.inf(), 0);
        assert_eq!(nf.factors().len(), 1);

        let nf = GarsideNormalForm::of_word(&word(3, &[-1]));
        assert_eq!(nf.inf(), -1);
        assert_eq!(nf.factors().len(), 1);

        // sigma_1 sigma_2 sigma_1 is the half twist of B_3.
        let nf = GarsideNormalForm::of_word(&word(3, &[1, 2, 1]));
        assert_eq!(nf.inf(), 1);
        assert!(nf.factors().is_empty());

        assert!(GarsideNormalForm::of_word(&word(5, &[])).is_identity());
        assert!(is_trivial(&word(3, &[1, 2, -2, -1])));
    }

    #[test]
    fn two_strand_degenerate_cases() {
        // In B_2 a single letter is already Delta.
        let nf = GarsideNormalForm::of_word(&word(2, &[1]));
        assert_eq!(nf.inf(), 1);
        assert!(nf.factors().is_empty());
        let nf = GarsideNormalForm::of_word(&word(2, &[-1, -1, 1]));
        assert_eq!(nf.inf(), -1);
        assert!(nf.factors().is_empty());
    }

    #[test]
    fn cycle_power_is_the_squared_half_twist() {
        // (sigma_1 ... sigma_{n-1})^n has normal form Delta^2 exactly
        for n in 2..=6usize {
            let nf = GarsideNormalForm::of_word(&cycle_braid(n).unwrap().pow(n as i64));
            assert_eq!(nf.inf(), 2);
            assert!(nf.factors().is_empty());
        }
    }

    #[test]
    fn full_twist_is_central() {
        for n in 2..=5usize {
            let g = cycle_braid(n).unwrap();
            let twist = g.pow(n as i64);
            for i in 1..n {
                let s = BraidWord::generator(n, i).unwrap();
                let lhs = twist.compose(&s).unwrap();
                let rhs = s.compose(&twist).unwrap();
                assert!(equal(&lhs, &rhs).unwrap());
            }
        }
    }

    #[test]
    fn left_weighted_invariant_holds() {
        use rand::{Rng, SeedableRng};
        // After normalization no factor is trivial or the half twist, and
        // every adjacent pair satisfies S(next) ⊆ F(prev).
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..300 {
            let n = rng.gen_range(2..=6usize);
            let len = rng.gen_range(0..=40);
            let letters: Vec<i32> = (0..len)
                .map(|_| {
                    let i = rng.gen_range(1..n) as i32;
                    if rng.gen_bool(0.5) {
                        i
                    } else {
                        -i
                    }
                })
                .collect();
            let w = BraidWord::new(n, letters).unwrap();
            let nf = GarsideNormalForm::of_word(&w);
            let w0 = Permutation::order_reversing(n);
            for f in nf.factors() {
                assert!(!f.is_identity());
                assert_ne!(f, &w0);
            }
            for pair in nf.factors().windows(2) {
                let s = starting_set(&pair[1]);
                let f = finishing_set(&pair[0]);
                assert_eq!(s & !f, 0, "not left-weighted: {} | {}", pair[0], pair[1]);
            }
        }
    }

    #[test]
    fn word_round_trip() {
        let samples: Vec<BraidWord> = vec![
            word(4, &[1, -2, 3, -1, 2, 2, -3, 1]),
            word(3, &[-1, -2, -1, 2]),
            word(2, &[1, 1, 1, -1]),
            word(5, &[4, -3, 2, -1, 1, 2, 3, 4, -4]),
        ];
        for w in samples {
            let nf = GarsideNormalForm::of_word(&w);
            let back = nf.to_word();
            assert!(equal(&w, &back).unwrap());
            assert_eq!(GarsideNormalForm::of_word(&back), nf);
        }
    }

    #[test]
    fn exponent_sum_matches_normal_form_length() {
        // The exponent sum of any word equals inf * len(Delta) + sum of
        // factor lengths, a useful independent consistency identity.
        let w = word(4, &[1, -2, 3, -1, 2, 2, -3, 1, 1, -3]);
        let nf = GarsideNormalForm::of_word(&w);
        let delta_len = (4 * 3 / 2) as i64;
        let total: i64 =
            nf.inf() * delta_len + nf.factors().iter().map(|f| f.inversions() as i64).sum::<i64>();
        assert_eq!(total, w.exponent_sum());
    }
}
