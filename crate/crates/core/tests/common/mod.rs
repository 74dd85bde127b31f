//! Shared test support: an independent braid-equality oracle through the
//! faithful action on a free group, and word generators for fuzzing.
//!
//! The oracle is deliberately unrelated to the normal-form machinery under
//! test: a braid letter acts on an n-generator free group by
//! `x_i -> x_i x_{i+1} x_i^{-1}`, `x_{i+1} -> x_i` (inverse letters by the
//! inverse substitution), and the action is faithful. Substitutions are
//! composed so that each letter costs only the two affected images; the
//! resulting map is the action of the reversed word, which preserves
//! equality because word reversal is an anti-automorphism of the braid
//! group.

use bucert_core::BraidWord;

/// A reduced word in a free group, letters as signed 1-based indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeWord(pub Vec<i32>);

impl FreeWord {
    pub fn generator(i: usize) -> FreeWord {
        FreeWord(vec![i as i32])
    }

    pub fn push(&mut self, letter: i32) {
        if self.0.last() == Some(&-letter) {
            self.0.pop();
        } else {
            self.0.push(letter);
        }
    }

    pub fn concat(&self, other: &FreeWord) -> FreeWord {
        let mut out = self.clone();
        for &l in &other.0 {
            out.push(l);
        }
        out
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord(self.0.iter().rev().map(|&l| -l).collect())
    }
}

/// Images of the free generators under the (reversed-word) Artin action.
pub fn artin_action(word: &BraidWord) -> Vec<FreeWord> {
    let n = word.n();
    let mut images: Vec<FreeWord> = (1..=n).map(FreeWord::generator).collect();
    for &letter in word.letters() {
        let i = letter.unsigned_abs() as usize - 1;
        if letter > 0 {
            // x_i -> T_i T_{i+1} T_i^{-1}, x_{i+1} -> T_i
            let new_i = images[i]
                .concat(&images[i + 1])
                .concat(&images[i].inverse());
            let new_next = images[i].clone();
            images[i] = new_i;
            images[i + 1] = new_next;
        } else {
            // x_i -> T_{i+1}, x_{i+1} -> T_{i+1}^{-1} T_i T_{i+1}
            let new_next = images[i + 1]
                .inverse()
                .concat(&images[i])
                .concat(&images[i + 1]);
            let new_i = images[i + 1].clone();
            images[i] = new_i;
            images[i + 1] = new_next;
        }
    }
    images
}

/// Equality oracle: two words are equal in the braid group iff their actions
/// agree on every free generator.
pub fn oracle_equal(w1: &BraidWord, w2: &BraidWord) -> bool {
    assert_eq!(w1.n(), w2.n());
    artin_action(w1) == artin_action(w2)
}

/// Deterministic pseudorandom braid word.
pub fn random_word(rng: &mut impl rand::Rng, n: usize, max_len: usize) -> BraidWord {
    let len = rng.gen_range(0..=max_len);
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
    BraidWord::new(n, letters).unwrap()
}

/// A word equal to `w` in the braid group, produced by random relation moves
/// and trivial-pair insertions (never by the machinery under test).
pub fn equivalent_variant(rng: &mut impl rand::Rng, w: &BraidWord) -> BraidWord {
    let n = w.n();
    let mut letters: Vec<i32> = w.letters().to_vec();
    for _ in 0..rng.gen_range(1..=6) {
        match rng.gen_range(0..3) {
            // insert a cancelling pair somewhere
            0 => {
                let i = rng.gen_range(1..n) as i32;
                let pos = rng.gen_range(0..=letters.len());
                letters.splice(pos..pos, [i, -i]);
            }
            // commute a distant pair
            1 => {
                if letters.len() >= 2 {
                    let pos = rng.gen_range(0..letters.len() - 1);
                    let (a, b) = (letters[pos], letters[pos + 1]);
                    if (a.unsigned_abs() as i32 - b.unsigned_abs() as i32).abs() >= 2 {
                        letters.swap(pos, pos + 1);
                    }
                }
            }
            // rewrite a positive braid-relation triple in place
            _ => {
                if letters.len() >= 3 {
                    let pos = rng.gen_range(0..letters.len() - 2);
                    let (a, b, c) = (letters[pos], letters[pos + 1], letters[pos + 2]);
                    if a > 0 && a == c && (b - a).abs() == 1 && b > 0 {
                        letters[pos] = b;
                        letters[pos + 1] = a;
                        letters[pos + 2] = b;
                    }
                }
            }
        }
    }
    BraidWord::new(n, letters).unwrap()
}
