use std::fmt;

use serde::{Deserialize, Serialize};

use crate::braid::Permutation;
use crate::error::{Error, Result};

/// A word in the Artin generators of the braid group on `n` strands.
///
/// Letter `+i` encodes the generator crossing strands `i` and `i+1` positively,
/// `-i` its inverse, with `1 <= i <= n-1`. The empty word is the identity.
/// Words are immutable values; constructors eagerly cancel adjacent inverse
/// pairs (an optimization only — equality never depends on it). Strand counts
/// are capped at 64 so permutation-braid divisor sets fit in a machine word.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BraidWord {
    n: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn identity(n: usize) -> Result<Self> {
        if !(1..=64).contains(&n) {
            return Err(Error::InvalidStrandCount(n));
        }
        Ok(BraidWord {
            n,
            letters: Vec::new(),
        })
    }

    pub fn new(n: usize, letters: impl IntoIterator<Item = i32>) -> Result<Self> {
        if !(1..=64).contains(&n) {
            return Err(Error::InvalidStrandCount(n));
        }
        let mut word = BraidWord {
            n,
            letters: Vec::new(),
        };
        for letter in letters {
            word.push_letter(letter)?;
        }
        Ok(word)
    }

    /// The single generator `sigma_i` (1-based index).
    pub fn generator(n: usize, i: usize) -> Result<Self> {
        BraidWord::new(n, [i as i32])
    }

    fn push_letter(&mut self, letter: i32) -> Result<()> {
        let idx = letter.unsigned_abs() as usize;
        if letter == 0 || idx + 1 > self.n {
            return Err(Error::LetterOutOfRange {
                letter,
                n: self.n,
            });
        }
        if self.letters.last() == Some(&-letter) {
            self.letters.pop();
        } else {
            self.letters.push(letter);
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Concatenation `self * other`, read left to right.
    pub fn compose(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.n != other.n {
            return Err(Error::StrandMismatch(self.n, other.n));
        }
        let mut out = self.clone();
        for &letter in &other.letters {
            out.push_letter(letter)?;
        }
        Ok(out)
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            n: self.n,
            letters: self.letters.iter().rev().map(|&l| -l).collect(),
        }
    }

    pub fn pow(&self, e: i64) -> BraidWord {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut out = BraidWord {
            n: self.n,
            letters: Vec::new(),
        };
        for _ in 0..e.unsigned_abs() {
            out = out.compose(&base).expect("same strand count");
        }
        out
    }

    /// Product of several words over the same strand count.
    pub fn product(n: usize, parts: &[&BraidWord]) -> Result<BraidWord> {
        let mut out = BraidWord::identity(n)?;
        for part in parts {
            out = out.compose(part)?;
        }
        Ok(out)
    }

    /// The conjugate `self * other * self^{-1}`.
    pub fn conjugate(&self, other: &BraidWord) -> Result<BraidWord> {
        self.compose(other)?.compose(&self.inverse())
    }

    /// The commutator `self * other * self^{-1} * other^{-1}`.
    pub fn commutator(&self, other: &BraidWord) -> Result<BraidWord> {
        self.compose(other)?
            .compose(&self.inverse())?
            .compose(&other.inverse())
    }

    /// The underlying permutation: each letter maps to the transposition
    /// `(i, i+1)` and the product is read in word order.
    pub fn permutation(&self) -> Permutation {
        let mut images: Vec<usize> = (0..self.n).collect();
        for &letter in &self.letters {
            let i = letter.unsigned_abs() as usize - 1;
            images.swap(i, i + 1);
        }
        // images currently holds, at position x, the point whose image is x
        // when letters act by swapping positions; invert to get x -> image.
        let mut out = vec![0; self.n];
        for (pos, &x) in images.iter().enumerate() {
            out[x] = pos;
        }
        Permutation::from_images(out).expect("swap composition is a bijection")
    }

    /// Sum of letter signs; a homomorphism to the integers, invariant under
    /// conjugation.
    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|&l| l.signum() as i64).sum()
    }

    /// Parses the text form `n=<k> l1 l2 ...` with signed whitespace-separated
    /// letters, e.g. `"n=3 1 2 -2"`.
    pub fn parse(text: &str) -> Result<BraidWord> {
        let mut tokens = text.split_whitespace();
        let head = tokens
            .next()
            .ok_or_else(|| Error::Parse("empty braid word text".into()))?;
        let n_str = head
            .strip_prefix("n=")
            .ok_or_else(|| Error::Parse(format!("expected leading n=<k>, got {head:?}")))?;
        let n: usize = n_str
            .parse()
            .map_err(|_| Error::Parse(format!("bad strand count {n_str:?}")))?;
        let mut letters = Vec::new();
        for tok in tokens {
            let letter: i32 = tok
                .parse()
                .map_err(|_| Error::Parse(format!("bad letter {tok:?}")))?;
            letters.push(letter);
        }
        BraidWord::new(n, letters)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}", self.n)?;
        for letter in &self.letters {
            write!(f, " {letter}")?;
        }
        Ok(())
    }
}

/// The braid `g = sigma_1 sigma_2 ... sigma_{n-1}` whose permutation is the
/// full cycle `(1,n,...,2)`.
pub fn cycle_braid(n: usize) -> Result<BraidWord> {
    BraidWord::new(n, (1..n as i32).collect::<Vec<_>>())
}
