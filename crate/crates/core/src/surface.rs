//! Orbit-surface fundamental groups in their three closed-surface
//! presentations, homomorphisms onto a finite cyclic group modeling free
//! actions, orientation characters, abelianization, and finite-index subgroup
//! presentations.

pub mod schreier;
pub mod smith;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cyclic::ZnElement;
use crate::error::{Error, Result};
use crate::report::Report;

/// Which of the three closed-surface presentations is in play.
///
/// The handle count `m` parameterizes genus as follows: `Orientable` with `m`
/// handles is the orientable surface of genus `m`; `NonOrientableOdd` models
/// non-orientable genus `2m+1` (one crosscap plus `m` handles);
/// `NonOrientableEven` models non-orientable genus `2m+2` (a Klein bottle
/// part plus `m` handles).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SurfaceCase {
    Orientable,
    NonOrientableOdd,
    NonOrientableEven,
}

impl fmt::Display for SurfaceCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SurfaceCase::Orientable => "orientable",
            SurfaceCase::NonOrientableOdd => "nonorientable-odd",
            SurfaceCase::NonOrientableEven => "nonorientable-even",
        };
        f.write_str(s)
    }
}

impl SurfaceCase {
    pub fn parse(s: &str) -> Result<SurfaceCase> {
        match s {
            "orientable" => Ok(SurfaceCase::Orientable),
            "nonorientable-odd" => Ok(SurfaceCase::NonOrientableOdd),
            "nonorientable-even" => Ok(SurfaceCase::NonOrientableEven),
            other => Err(Error::Parse(format!("unknown surface case {other:?}"))),
        }
    }
}

/// One of the three one-relator presentations of a closed surface group:
///
/// - orientable: `< a_1..a_{2m} | [a_1,a_2]...[a_{2m-1},a_{2m}] >`
/// - non-orientable odd genus: `< c, a_1..a_{2m} | c^2 [a_1,a_2]... >`, `delta = c`
/// - non-orientable even genus: `< u, v, a_1..a_{2m} | u v u v^{-1} [a_1,a_2]... >`, `delta = u`
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfacePresentation {
    pub case: SurfaceCase,
    pub m: usize,
}

impl SurfacePresentation {
    pub fn new(case: SurfaceCase, m: usize) -> SurfacePresentation {
        SurfacePresentation { case, m }
    }

    pub fn orientable(m: usize) -> SurfacePresentation {
        SurfacePresentation::new(SurfaceCase::Orientable, m)
    }

    pub fn nonorientable_odd(m: usize) -> SurfacePresentation {
        SurfacePresentation::new(SurfaceCase::NonOrientableOdd, m)
    }

    pub fn nonorientable_even(m: usize) -> SurfacePresentation {
        SurfacePresentation::new(SurfaceCase::NonOrientableEven, m)
    }

    /// Number of special (non-handle) generators: 0, 1 (`c`) or 2 (`u`, `v`).
    fn special_count(&self) -> usize {
        match self.case {
            SurfaceCase::Orientable => 0,
            SurfaceCase::NonOrientableOdd => 1,
            SurfaceCase::NonOrientableEven => 2,
        }
    }

    pub fn generator_count(&self) -> usize {
        self.special_count() + 2 * self.m
    }

    pub fn generator_names(&self) -> Vec<String> {
        let mut names: Vec<String> = match self.case {
            SurfaceCase::Orientable => vec![],
            SurfaceCase::NonOrientableOdd => vec!["c".into()],
            SurfaceCase::NonOrientableEven => vec!["u".into(), "v".into()],
        };
        for i in 1..=2 * self.m {
            names.push(format!("a{i}"));
        }
        names
    }

    /// 0-based index of the distinguished generator (`c` or `u`), if any.
    pub fn delta_index(&self) -> Option<usize> {
        match self.case {
            SurfaceCase::Orientable => None,
            _ => Some(0),
        }
    }

    /// The single relator as signed 1-based generator indices.
    pub fn relator(&self) -> Vec<i32> {
        let mut rel: Vec<i32> = match self.case {
            SurfaceCase::Orientable => vec![],
            SurfaceCase::NonOrientableOdd => vec![1, 1],
            SurfaceCase::NonOrientableEven => vec![1, 2, 1, -2],
        };
        let base = self.special_count() as i32;
        for h in 0..self.m as i32 {
            let x = base + 2 * h + 1;
            let y = x + 1;
            rel.extend_from_slice(&[x, y, -x, -y]);
        }
        rel
    }

    /// Orientation marks: -1 for the orientation-reversing generator (`c` or
    /// `u`), +1 for every other generator.
    pub fn marks(&self) -> Vec<i8> {
        let mut marks = vec![1i8; self.generator_count()];
        if let Some(d) = self.delta_index() {
            marks[d] = -1;
        }
        marks
    }

    pub fn euler_characteristic(&self) -> i64 {
        match self.case {
            SurfaceCase::Orientable => 2 - 2 * self.m as i64,
            SurfaceCase::NonOrientableOdd => 2 - (2 * self.m as i64 + 1),
            SurfaceCase::NonOrientableEven => 2 - (2 * self.m as i64 + 2),
        }
    }

    pub fn is_orientable(&self) -> bool {
        self.case == SurfaceCase::Orientable
    }

    pub fn to_group_presentation(&self) -> GroupPresentation {
        GroupPresentation {
            generators: self.generator_count(),
            relators: if self.generator_count() == 0 {
                vec![]
            } else {
                vec![self.relator()]
            },
        }
    }
}

/// A finitely presented group: a generator count and relators as words of
/// signed 1-based generator indices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupPresentation {
    pub generators: usize,
    pub relators: Vec<Vec<i32>>,
}

impl GroupPresentation {
    pub fn new(generators: usize, relators: Vec<Vec<i32>>) -> Result<GroupPresentation> {
        let p = GroupPresentation {
            generators,
            relators,
        };
        for rel in &p.relators {
            for &letter in rel {
                if letter == 0 || letter.unsigned_abs() as usize > generators {
                    return Err(Error::Parse(format!(
                        "relator letter {letter} out of range for {generators} generators"
                    )));
                }
            }
        }
        Ok(p)
    }

    /// Deficiency-style Euler characteristic of the presentation 2-complex.
    pub fn euler_characteristic(&self) -> i64 {
        1 - self.generators as i64 + self.relators.len() as i64
    }

    /// Exponent-sum matrix: one row per relator, one column per generator.
    pub fn exponent_matrix(&self) -> Vec<Vec<i64>> {
        self.relators
            .iter()
            .map(|rel| {
                let mut row = vec![0i64; self.generators];
                for &letter in rel {
                    let idx = letter.unsigned_abs() as usize - 1;
                    row[idx] += letter.signum() as i64;
                }
                row
            })
            .collect()
    }
}

/// A homomorphism from a surface group onto the cyclic group of order `n`,
/// given by generator images; models the covering data of a free action.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclicHom {
    pub source: SurfacePresentation,
    pub n: usize,
    images: Vec<u64>,
}

impl CyclicHom {
    pub fn new(
        source: SurfacePresentation,
        n: usize,
        images: impl IntoIterator<Item = i64>,
    ) -> Result<CyclicHom> {
        if n < 2 {
            return Err(Error::InvalidModulus(n));
        }
        let images: Vec<u64> = images
            .into_iter()
            .map(|v| v.rem_euclid(n as i64) as u64)
            .collect();
        if images.len() != source.generator_count() {
            return Err(Error::InvalidHom(format!(
                "expected {} generator images, got {}",
                source.generator_count(),
                images.len()
            )));
        }
        Ok(CyclicHom { source, n, images })
    }

    pub fn images(&self) -> &[u64] {
        &self.images
    }

    pub fn theta(&self, idx: usize) -> ZnElement {
        ZnElement::new(self.n, self.images[idx] as i64).unwrap()
    }

    /// Image of a word in the generators (signed 1-based indices).
    pub fn theta_of_word(&self, word: &[i32]) -> ZnElement {
        let mut acc: i64 = 0;
        for &letter in word {
            let idx = letter.unsigned_abs() as usize - 1;
            acc += letter.signum() as i64 * self.images[idx] as i64;
        }
        ZnElement::new(self.n, acc).unwrap()
    }

    /// Image of the distinguished element: trivial for orientable sources,
    /// otherwise the image of `c` resp. `u`. For a valid homomorphism this is
    /// either zero or `n/2`.
    pub fn theta_of_delta(&self) -> ZnElement {
        match self.source.delta_index() {
            None => ZnElement::zero(self.n),
            Some(d) => self.theta(d),
        }
    }

    /// Checks that the relator maps to zero and that the images generate the
    /// whole cyclic group.
    pub fn validate(&self) -> Report {
        let mut report = Report::new();
        let relator_image = self.theta_of_word(&self.source.relator());
        report.record(
            "relator_maps_to_zero",
            vec![self.n as i64],
            relator_image.to_string(),
            ZnElement::zero(self.n).to_string(),
            relator_image.is_zero(),
        );
        let mut d = self.n as u64;
        for &v in &self.images {
            d = gcd(d, v);
        }
        report.record(
            "images_generate",
            vec![self.n as i64],
            format!("gcd(n, images) = {d}"),
            "1".to_string(),
            d == 1,
        );
        report
    }

    pub fn is_valid(&self) -> bool {
        let relator_ok = self.theta_of_word(&self.source.relator()).is_zero();
        let mut d = self.n as u64;
        for &v in &self.images {
            d = gcd(d, v);
        }
        relator_ok && d == 1
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// The orientation character of a word: the product of generator marks over
/// its letters. Marks must cover every generator referenced.
pub fn orientation_character(marks: &[i8], word: &[i32]) -> Result<i8> {
    let mut sign = 1i8;
    for &letter in word {
        let idx = letter.unsigned_abs() as usize;
        if letter == 0 || idx > marks.len() {
            return Err(Error::Parse(format!(
                "letter {letter} has no orientation mark"
            )));
        }
        sign *= marks[idx - 1];
    }
    Ok(sign)
}
