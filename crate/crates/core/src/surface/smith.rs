//! Smith normal form over arbitrary-precision integers, with the column
//! change of basis tracked so torsion generators of a cokernel can be pulled
//! back to the original generator basis.

use num::{BigInt, Signed, Zero};

use crate::surface::GroupPresentation;

/// Diagonalization `D = U . M . V` of an integer matrix with `d_1 | d_2 | ...`
/// nonnegative. Only `V^{-1}` is kept: the class of a generator vector `x` in
/// the cokernel has diagonal-basis coordinates `(V^{-1} x)` read off row-wise,
/// so row `t` of `V^{-1}` is the generator of the `d_t` summand.
#[derive(Debug, Clone)]
pub struct SmithNormalForm {
    pub diag: Vec<BigInt>,
    pub basis_inv: Vec<Vec<BigInt>>,
}

pub fn smith_normal_form(rows: &[Vec<i64>], cols: usize) -> SmithNormalForm {
    let r = rows.len();
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|row| {
            debug_assert_eq!(row.len(), cols);
            row.iter().map(|&x| BigInt::from(x)).collect()
        })
        .collect();
    let mut vinv: Vec<Vec<BigInt>> = (0..cols)
        .map(|i| {
            (0..cols)
                .map(|j| if i == j { BigInt::from(1) } else { BigInt::zero() })
                .collect()
        })
        .collect();

    let steps = r.min(cols);
    let mut t = 0;
    while t < steps {
        // partial pivoting on the smallest nonzero entry
        let mut pivot: Option<(usize, usize)> = None;
        for i in t..r {
            for j in t..cols {
                if !m[i][j].is_zero()
                    && pivot
                        .map(|(pi, pj)| m[i][j].abs() < m[pi][pj].abs())
                        .unwrap_or(true)
                {
                    pivot = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        m.swap(t, pi);
        if pj != t {
            for row in m.iter_mut() {
                row.swap(t, pj);
            }
            vinv.swap(t, pj);
        }

        'reduce: loop {
            // clear column t with row operations
            for i in 0..r {
                if i == t || m[i][t].is_zero() {
                    continue;
                }
                let q = &m[i][t] / &m[t][t];
                if !q.is_zero() {
                    let scaled: Vec<BigInt> = m[t].iter().map(|v| &q * v).collect();
                    for (entry, sub) in m[i].iter_mut().zip(scaled) {
                        *entry -= sub;
                    }
                }
                if !m[i][t].is_zero() {
                    m.swap(i, t);
                    continue 'reduce;
                }
            }
            // clear row t with column operations, tracked on vinv
            for j in 0..cols {
                if j == t || m[t][j].is_zero() {
                    continue;
                }
                let q = &m[t][j] / &m[t][t];
                if !q.is_zero() {
                    for row in m.iter_mut() {
                        let sub = &q * &row[t];
                        row[j] -= sub;
                    }
                    // col_j -= q * col_t  =>  row_t(vinv) += q * row_j(vinv)
                    let scaled: Vec<BigInt> = vinv[j].iter().map(|v| &q * v).collect();
                    for (entry, add) in vinv[t].iter_mut().zip(scaled) {
                        *entry += add;
                    }
                }
                if !m[t][j].is_zero() {
                    for row in m.iter_mut() {
                        row.swap(t, j);
                    }
                    vinv.swap(t, j);
                    continue 'reduce;
                }
            }
            // force divisibility: pull any non-multiple into column t
            for i in (t + 1)..r {
                for j in (t + 1)..cols {
                    if !(&m[i][j] % &m[t][t]).is_zero() {
                        // col_t += col_j  =>  row_j(vinv) -= row_t(vinv)
                        for row in m.iter_mut() {
                            let add = row[j].clone();
                            row[t] += add;
                        }
                        let pivot_row = vinv[t].clone();
                        for (entry, sub) in vinv[j].iter_mut().zip(pivot_row) {
                            *entry -= sub;
                        }
                        continue 'reduce;
                    }
                }
            }
            break;
        }
        t += 1;
    }

    let diag: Vec<BigInt> = (0..steps).map(|i| m[i][i].abs()).collect();
    SmithNormalForm {
        diag,
        basis_inv: vinv,
    }
}

/// First homology data of a presented group: the free rank and the invariant
/// factors greater than one, together with representative vectors (over the
/// original generators) for the torsion generators.
#[derive(Debug, Clone)]
pub struct Abelianization {
    pub rank: usize,
    pub torsion: Vec<BigInt>,
    pub torsion_vectors: Vec<Vec<BigInt>>,
}

pub fn abelianization(p: &GroupPresentation) -> Abelianization {
    let matrix = p.exponent_matrix();
    let snf = smith_normal_form(&matrix, p.generators);
    let nonzero = snf.diag.iter().filter(|d| !d.is_zero()).count();
    let mut torsion = Vec::new();
    let mut torsion_vectors = Vec::new();
    for (i, d) in snf.diag.iter().enumerate() {
        if !d.is_zero() && *d != BigInt::from(1) {
            torsion.push(d.clone());
            torsion_vectors.push(snf.basis_inv[i].clone());
        }
    }
    Abelianization {
        rank: p.generators - nonzero,
        torsion,
        torsion_vectors,
    }
}
