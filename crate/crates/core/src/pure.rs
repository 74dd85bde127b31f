//! The pure braid group: braids whose permutation is the identity.
//!
//! The standard generators are the bands `A_{i,j}` in which strand `j` loops
//! once around strand `i`. The evaluation homomorphism sends every `A_{i,j}`
//! to 1; since each `A_{i,j}` has exponent sum 2 and the bands generate the
//! pure braid group, it is realized here as half the exponent sum.

use std::fmt;

use crate::braid::{garside, BraidWord};
use crate::error::{Error, Result};
use crate::report::Report;

/// A braid word whose permutation is the identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PureBraid {
    word: BraidWord,
}

impl PureBraid {
    pub fn new(word: BraidWord) -> Result<Self> {
        let p = word.permutation();
        if !p.is_identity() {
            return Err(Error::NotPure(p.to_string()));
        }
        Ok(PureBraid { word })
    }

    pub fn identity(n: usize) -> Result<Self> {
        Ok(PureBraid {
            word: BraidWord::identity(n)?,
        })
    }

    pub fn word(&self) -> &BraidWord {
        &self.word
    }

    pub fn n(&self) -> usize {
        self.word.n()
    }

    pub fn into_word(self) -> BraidWord {
        self.word
    }

    pub fn compose(&self, other: &PureBraid) -> Result<PureBraid> {
        Ok(PureBraid {
            word: self.word.compose(&other.word)?,
        })
    }

    pub fn inverse(&self) -> PureBraid {
        PureBraid {
            word: self.word.inverse(),
        }
    }

    /// Conjugate by an arbitrary braid; the result is again pure.
    pub fn conjugated_by(&self, c: &BraidWord) -> Result<PureBraid> {
        PureBraid::new(c.conjugate(&self.word)?)
    }

    /// The evaluation homomorphism: half the exponent sum. Takes the value 1
    /// on every band generator and is invariant under conjugation.
    pub fn epsilon(&self) -> i64 {
        let s = self.word.exponent_sum();
        debug_assert!(s % 2 == 0, "pure braids have even exponent sum");
        s / 2
    }
}

impl fmt::Display for PureBraid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.word.fmt(f)
    }
}

/// The band generator `A_{i,j}`, `1 <= i < j <= n`, as the word
/// `sigma_{j-1} ... sigma_{i+1} . sigma_i^2 . sigma_{i+1}^{-1} ... sigma_{j-1}^{-1}`.
pub fn a_gen(i: usize, j: usize, n: usize) -> Result<PureBraid> {
    check_band_indices(i, j, n)?;
    let mut letters: Vec<i32> = Vec::with_capacity(2 * (j - i));
    for t in ((i + 1)..j).rev() {
        letters.push(t as i32);
    }
    letters.push(i as i32);
    letters.push(i as i32);
    for t in (i + 1)..j {
        letters.push(-(t as i32));
    }
    PureBraid::new(BraidWord::new(n, letters)?)
}

/// The alternative expression for the same band:
/// `sigma_i^{-1} ... sigma_{j-2}^{-1} . sigma_{j-1}^2 . sigma_{j-2} ... sigma_i`.
pub fn a_gen_alt(i: usize, j: usize, n: usize) -> Result<PureBraid> {
    check_band_indices(i, j, n)?;
    let mut letters: Vec<i32> = Vec::with_capacity(2 * (j - i));
    for t in i..(j - 1) {
        letters.push(-(t as i32));
    }
    letters.push((j - 1) as i32);
    letters.push((j - 1) as i32);
    for t in (i..(j - 1)).rev() {
        letters.push(t as i32);
    }
    PureBraid::new(BraidWord::new(n, letters)?)
}

fn check_band_indices(i: usize, j: usize, n: usize) -> Result<()> {
    if i == 0 || j <= i || j > n {
        return Err(Error::IndexOutOfRange { i, j, n });
    }
    Ok(())
}

/// The full twist, built as the ordered product of all bands
/// `prod_{j=2..n} prod_{i=1..j-1} A_{i,j}`; equal in the braid group to
/// `(sigma_1 ... sigma_{n-1})^n`.
pub fn full_twist(n: usize) -> Result<PureBraid> {
    if n < 2 {
        return Err(Error::InvalidStrandCount(n));
    }
    let mut out = PureBraid::identity(n)?;
    for j in 2..=n {
        for i in 1..j {
            out = out.compose(&a_gen(i, j, n)?)?;
        }
    }
    Ok(out)
}

/// Verifies, instance by instance, the conjugation rules for bands:
/// `A_{r,s}^{-1} A_{i,j} A_{r,s}` expressed back in the bands, in the four
/// index patterns. Failures become report entries, never panics.
pub fn check_relations_i(n: usize) -> Result<Report> {
    let mut report = Report::new();
    let a = |i: usize, j: usize| -> Result<BraidWord> { Ok(a_gen(i, j, n)?.into_word()) };

    let push = |name: &str,
                    idx: [usize; 4],
                    lhs: &BraidWord,
                    rhs: &BraidWord,
                    report: &mut Report|
     -> Result<()> {
        let pass = garside::equal(lhs, rhs)?;
        report.record(
            name,
            idx.iter().map(|&x| x as i64).collect(),
            lhs.to_string(),
            rhs.to_string(),
            pass,
        );
        Ok(())
    };

    for r in 1..=n {
        for s in (r + 1)..=n {
            for i in 1..=n {
                for j in (i + 1)..=n {
                    let conj = a(r, s)?.inverse().compose(&a(i, j)?)?.compose(&a(r, s)?)?;
                    if (r < s && s < i && i < j) || (i < r && s < j) {
                        // strands r,s are disjoint from or nested inside (i,j)
                        let rhs = a(i, j)?;
                        push("band_conj_commuting", [r, s, i, j], &conj, &rhs, &mut report)?;
                    } else if r < i && i == s && s < j {
                        let rhs = a(r, j)?.compose(&a(i, j)?)?.compose(&a(r, j)?.inverse())?;
                        push("band_conj_linked_at_i", [r, s, i, j], &conj, &rhs, &mut report)?;
                    } else if i == r && r < s && s < j {
                        let rhs = a(r, j)?
                            .compose(&a(s, j)?)?
                            .compose(&a(i, j)?)?
                            .compose(&a(s, j)?.inverse())?
                            .compose(&a(r, j)?.inverse())?;
                        push("band_conj_shared_base", [r, s, i, j], &conj, &rhs, &mut report)?;
                    } else if r < i && i < s && s < j {
                        let comm = a(r, j)?
                            .compose(&a(s, j)?)?
                            .compose(&a(r, j)?.inverse())?
                            .compose(&a(s, j)?.inverse())?;
                        let rhs = comm
                            .compose(&a(i, j)?)?
                            .compose(&comm.inverse())?;
                        push("band_conj_interleaved", [r, s, i, j], &conj, &rhs, &mut report)?;
                    }
                }
            }
        }
    }
    Ok(report)
}
