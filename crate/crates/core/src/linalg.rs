//! Exact square-matrix algebra over the integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::bigjson;
use crate::error::{BraidError, Result};
use crate::poly::IntPolynomial;

/// Row-major `n × n` matrix of big integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SquareMatrix {
    size: usize,
    entries: Vec<BigInt>,
}

impl SquareMatrix {
    pub fn zeros(size: usize) -> Self {
        SquareMatrix {
            size,
            entries: vec![BigInt::zero(); size * size],
        }
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let size = rows.len();
        let mut entries = Vec::with_capacity(size * size);
        for row in rows {
            if row.len() != size {
                return Err(BraidError::SizeMismatch {
                    left: size,
                    right: row.len(),
                });
            }
            entries.extend(row);
        }
        Ok(SquareMatrix { size, entries })
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
                .collect(),
        )
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.size + j]
    }

    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut BigInt {
        &mut self.entries[i * self.size + j]
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.size..(i + 1) * self.size]
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.size).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.size).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn transpose(&self) -> SquareMatrix {
        let n = self.size;
        let mut t = SquareMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                *t.get_mut(j, i) = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.size;
        (0..n).all(|i| (i + 1..n).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn trace(&self) -> BigInt {
        (0..self.size).map(|i| self.get(i, i)).sum()
    }

    pub fn has_zero_diagonal(&self) -> bool {
        (0..self.size).all(|i| self.get(i, i).is_zero())
    }
}

impl Serialize for SquareMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<bigjson::Json>> = (0..self.size)
            .map(|i| self.row(i).iter().cloned().map(bigjson::Json).collect())
            .collect();
        rows.serialize(s)
    }
}

impl<'de> Deserialize<'de> for SquareMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<bigjson::Json>>::deserialize(d)?;
        let rows = rows
            .into_iter()
            .map(|r| r.into_iter().map(|j| j.0).collect())
            .collect();
        SquareMatrix::from_rows(rows).map_err(serde::de::Error::custom)
    }
}

/// `det(xI - M)` by Berkowitz's division-free method.
pub fn charpoly(m: &SquareMatrix) -> IntPolynomial {
    let n = m.size();
    // Coefficients of the trailing principal submatrix, highest degree first.
    let mut vector = vec![BigInt::one()];
    for k in (0..n).rev() {
        let s = n - k;
        let a = m.get(k, k);
        let row: Vec<&BigInt> = (k + 1..n).map(|j| m.get(k, j)).collect();
        let mut col: Vec<BigInt> = (k + 1..n).map(|i| m.get(i, k).clone()).collect();

        // 1, -a, -R·C, -R·A·C, ..., -R·A^{s-2}·C
        let mut diags = Vec::with_capacity(s + 1);
        diags.push(BigInt::one());
        diags.push(-a.clone());
        for step in 0..s.saturating_sub(1) {
            let dot: BigInt = row.iter().zip(&col).map(|(r, c)| *r * c).sum();
            diags.push(-dot);
            if step + 2 < s {
                col = (k + 1..n)
                    .map(|i| {
                        (k + 1..n)
                            .zip(&col)
                            .map(|(j, c)| m.get(i, j) * c)
                            .sum::<BigInt>()
                    })
                    .collect();
            }
        }

        // Lower-triangular Toeplitz (s+1)×s times the previous vector.
        let next: Vec<BigInt> = (0..=s)
            .map(|i| {
                (0..s.min(i + 1))
                    .map(|j| &diags[i - j] * &vector[j])
                    .sum::<BigInt>()
            })
            .collect();
        vector = next;
    }
    vector.reverse();
    IntPolynomial::from_coeffs(vector)
}

/// Fraction-free (Bareiss) elimination. Returns the rank and, when the
/// matrix is nonsingular, the determinant.
fn bareiss(m: &SquareMatrix) -> (usize, BigInt) {
    let n = m.size();
    let mut a = m.rows();
    let mut prev = BigInt::one();
    let mut rank = 0;
    let mut negate = false;
    for col in 0..n {
        let Some(pivot) = (rank..n).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        if pivot != rank {
            a.swap(pivot, rank);
            negate = !negate;
        }
        for i in rank + 1..n {
            for j in col + 1..n {
                let num = &a[rank][col] * &a[i][j] - &a[i][col] * &a[rank][j];
                let (q, r) = num.div_rem(&prev);
                debug_assert!(r.is_zero(), "Bareiss division must be exact");
                a[i][j] = q;
            }
            a[i][col] = BigInt::zero();
        }
        prev = a[rank][col].clone();
        rank += 1;
    }
    let det = if rank < n {
        BigInt::zero()
    } else if n == 0 {
        BigInt::one()
    } else if negate {
        -prev
    } else {
        prev
    };
    (rank, det)
}

pub fn determinant(m: &SquareMatrix) -> BigInt {
    bareiss(m).1
}

/// Rank over the rationals.
pub fn rank(m: &SquareMatrix) -> usize {
    bareiss(m).0
}
