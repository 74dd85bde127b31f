//! The subgroup of braids whose permutation is a power of the full cycle
//! `(1,n,...,2)`: membership, the projection onto the cyclic group, the unique
//! decomposition as a pure braid times a power of `g = sigma_1 ... sigma_{n-1}`,
//! and mechanical verification of the remaining presentation relations.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::braid::{cycle_braid, garside, BraidWord, Permutation};
use crate::error::{Error, Result};
use crate::pure::{a_gen, a_gen_alt, full_twist, PureBraid};
use crate::report::Report;

/// A residue modulo `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ZnElement {
    n: usize,
    value: u64,
}

impl ZnElement {
    pub fn new(n: usize, value: i64) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidModulus(n));
        }
        Ok(ZnElement {
            n,
            value: value.rem_euclid(n as i64) as u64,
        })
    }

    pub fn zero(n: usize) -> Self {
        ZnElement { n, value: 0 }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    pub fn add(&self, other: &ZnElement) -> ZnElement {
        debug_assert_eq!(self.n, other.n);
        ZnElement {
            n: self.n,
            value: (self.value + other.value) % self.n as u64,
        }
    }

    pub fn neg(&self) -> ZnElement {
        ZnElement {
            n: self.n,
            value: (self.n as u64 - self.value) % self.n as u64,
        }
    }

    pub fn scaled(&self, c: i64) -> ZnElement {
        let v = (self.value as i128 * c as i128).rem_euclid(self.n as i128);
        ZnElement {
            n: self.n,
            value: v as u64,
        }
    }
}

impl fmt::Display for ZnElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}", self.value, self.n)
    }
}

/// The full cycle `(1,n,...,2)`: the permutation of `g`.
pub fn cyclic_generator_permutation(n: usize) -> Permutation {
    let images: Vec<usize> = (0..n).map(|x| (x + n - 1) % n).collect();
    Permutation::from_images(images).unwrap()
}

/// A braid whose permutation lies in the cyclic subgroup generated by
/// `(1,n,...,2)`; the residue of the power is cached.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicBraid {
    word: BraidWord,
    klass: ZnElement,
}

impl CyclicBraid {
    /// Membership test and wrap: the permutation must be a power of the full
    /// cycle.
    pub fn new(word: BraidWord) -> Result<Self> {
        let n = word.n();
        let p = word.permutation();
        let m = (n - p.apply(0)) % n;
        let shift_ok = (0..n).all(|x| p.apply(x) == (x + n - m % n) % n);
        if !shift_ok {
            return Err(Error::NotCyclicMember(p.to_string()));
        }
        Ok(CyclicBraid {
            word,
            klass: ZnElement::new(n, m as i64)?,
        })
    }

    pub fn word(&self) -> &BraidWord {
        &self.word
    }

    pub fn n(&self) -> usize {
        self.word.n()
    }

    /// The projection onto the cyclic group: the residue `m` with
    /// permutation equal to `(1,n,...,2)^m`. A homomorphism whose kernel is
    /// the pure part of the subgroup.
    pub fn pi2(&self) -> ZnElement {
        self.klass
    }

    pub fn compose(&self, other: &CyclicBraid) -> Result<CyclicBraid> {
        Ok(CyclicBraid {
            word: self.word.compose(&other.word)?,
            klass: self.klass.add(&other.klass),
        })
    }

    pub fn inverse(&self) -> CyclicBraid {
        CyclicBraid {
            word: self.word.inverse(),
            klass: self.klass.neg(),
        }
    }

    pub fn pow(&self, e: i64) -> CyclicBraid {
        CyclicBraid {
            word: self.word.pow(e),
            klass: self.klass.scaled(e),
        }
    }

    /// The unique decomposition `self = w . g^m` with `w` pure and
    /// `0 <= m <= n-1`.
    pub fn decompose(&self) -> Result<(PureBraid, u64)> {
        let m = self.klass.value();
        let g = cycle_braid(self.n())?;
        let w = self.word.compose(&g.pow(-(m as i64)))?;
        Ok((PureBraid::new(w)?, m))
    }
}

impl fmt::Display for CyclicBraid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.word.fmt(f)
    }
}

/// Verifies the conjugation action of `g` on the bands, the full-twist
/// relation `g^n = prod A_{i,j}`, and the agreement of the two band
/// expressions, instance by instance.
pub fn verify_presentation(n: usize) -> Result<Report> {
    if n < 2 {
        return Err(Error::InvalidStrandCount(n));
    }
    let mut report = Report::new();
    let g = cycle_braid(n)?;

    // g A_{i,j} g^{-1} = A_{i+1,j+1} when j <= n-1
    for i in 1..n {
        for j in (i + 1)..n {
            let lhs = g.conjugate(a_gen(i, j, n)?.word())?;
            let rhs = a_gen(i + 1, j + 1, n)?;
            report.record(
                "cycle_conj_shift",
                vec![i as i64, j as i64],
                lhs.to_string(),
                rhs.to_string(),
                garside::equal(&lhs, rhs.word())?,
            );
        }
    }

    // The wrap case: conjugating a last-column band by g lands in the
    // conjugate of a first-row band. The conjugator is the braid taking
    // strand 1 once around all the others,
    //   sigma_1 ... sigma_{n-1} sigma_{n-1} ... sigma_1 = A_{1,2} A_{1,3} ... A_{1,n},
    // checked as its own relation instance below.
    let mut first_row = BraidWord::identity(n)?;
    for j in 2..=n {
        first_row = first_row.compose(a_gen(1, j, n)?.word())?;
    }
    let mut loop_letters: Vec<i32> = (1..n as i32).collect();
    loop_letters.extend((1..n as i32).rev());
    let strand_one_loop = BraidWord::new(n, loop_letters)?;
    report.record(
        "first_row_band_product",
        vec![n as i64],
        strand_one_loop.to_string(),
        first_row.to_string(),
        garside::equal(&strand_one_loop, &first_row)?,
    );
    for i in 1..n {
        let lhs = g.conjugate(a_gen(i, n, n)?.word())?;
        let rhs = first_row.conjugate(a_gen(1, i + 1, n)?.word())?;
        report.record(
            "cycle_conj_wrap",
            vec![i as i64, n as i64],
            lhs.to_string(),
            rhs.to_string(),
            garside::equal(&lhs, &rhs)?,
        );
    }

    // g^n equals the ordered product of all bands (the full twist)
    let gn = g.pow(n as i64);
    let twist = full_twist(n)?;
    report.record(
        "cycle_power_full_twist",
        vec![n as i64],
        gn.to_string(),
        twist.to_string(),
        garside::equal(&gn, twist.word())?,
    );

    // the two band expressions agree
    for i in 1..n {
        for j in (i + 1)..=n {
            let lhs = a_gen(i, j, n)?;
            let rhs = a_gen_alt(i, j, n)?;
            report.record(
                "band_two_expressions",
                vec![i as i64, j as i64],
                lhs.to_string(),
                rhs.to_string(),
                garside::equal(lhs.word(), rhs.word())?,
            );
        }
    }

    Ok(report)
}

/// Relations of both families: the pure-braid conjugation rules plus the
/// cyclic ones above. This is what the command-line verifier runs.
pub fn verify_full_presentation(n: usize) -> Result<Report> {
    let mut report = crate::pure::check_relations_i(n)?;
    report.merge(verify_presentation(n)?);
    Ok(report)
}
