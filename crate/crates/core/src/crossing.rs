//! Crossing matrices and permutation equivalence of square matrices.
//!
//! Entry `(i, j)` of `C(b)` is the signed count of crossings where strand
//! `i` passes over strand `j`, strands being numbered by their upper
//! endpoint. In `σ_k` the strand entering at position `k` passes over; in
//! `σ_k^{-1}` the strand entering at position `k + 1` does.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::braid::BraidWord;
use crate::error::{BraidError, Result};
use crate::linalg::SquareMatrix;
use crate::perm::Permutation;

/// Which strand of a crossing counts as the over-strand.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OverStrand {
    /// `σ_k`: left strand over; `σ_k^{-1}`: right strand over.
    #[default]
    Standard,
    /// The mirror convention; transposes every crossing matrix.
    Flipped,
}

/// An `m × m` crossing matrix. The diagonal is always zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "SquareMatrix", into = "SquareMatrix")]
pub struct CrossingMatrix(SquareMatrix);

impl TryFrom<SquareMatrix> for CrossingMatrix {
    type Error = BraidError;
    fn try_from(m: SquareMatrix) -> Result<Self> {
        if !m.has_zero_diagonal() {
            return Err(BraidError::Format(
                "crossing matrix must have a zero diagonal".into(),
            ));
        }
        Ok(CrossingMatrix(m))
    }
}

impl From<CrossingMatrix> for SquareMatrix {
    fn from(c: CrossingMatrix) -> Self {
        c.0
    }
}

impl CrossingMatrix {
    pub fn size(&self) -> usize {
        self.0.size()
    }

    pub fn matrix(&self) -> &SquareMatrix {
        &self.0
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        self.0.get(i, j)
    }
}

fn sweep(word: &BraidWord, reps: u64, convention: OverStrand) -> CrossingMatrix {
    let m = word.degree();
    let mut c = SquareMatrix::zeros(m);
    let mut at: Vec<usize> = (0..m).collect();
    for _ in 0..reps {
        for &l in word.letters() {
            let i = l.unsigned_abs() as usize - 1;
            let (left, right) = (at[i], at[i + 1]);
            let positive = l > 0;
            let left_over = positive == (convention == OverStrand::Standard);
            let (over, under) = if left_over { (left, right) } else { (right, left) };
            *c.get_mut(over, under) += if positive { 1 } else { -1 };
            at.swap(i, i + 1);
        }
    }
    CrossingMatrix(c)
}

pub fn crossing_matrix(word: &BraidWord) -> CrossingMatrix {
    sweep(word, 1, OverStrand::Standard)
}

pub fn crossing_matrix_with(word: &BraidWord, convention: OverStrand) -> CrossingMatrix {
    sweep(word, 1, convention)
}

/// `(r, C(b^r))` where `r` is the order of the braid permutation.
pub fn pure_power_matrix(word: &BraidWord) -> (u64, CrossingMatrix) {
    pure_power_matrix_with(word, OverStrand::Standard)
}

pub fn pure_power_matrix_with(word: &BraidWord, convention: OverStrand) -> (u64, CrossingMatrix) {
    let r = word.permutation_order();
    (r, sweep(word, r, convention))
}

// Per-index signature: diagonal value, sorted row, sorted column.
type Signature = (BigInt, Vec<BigInt>, Vec<BigInt>);

fn signature(m: &SquareMatrix, i: usize) -> Signature {
    let mut row = m.row(i).to_vec();
    row.sort();
    let mut col = m.column(i);
    col.sort();
    (m.get(i, i).clone(), row, col)
}

/// Finds `p` with `n[i][j] == m[p(i)][p(j)]` for all `i, j`.
pub fn permutation_equivalent(m: &SquareMatrix, n: &SquareMatrix) -> Result<Option<Permutation>> {
    if m.size() != n.size() {
        return Err(BraidError::SizeMismatch {
            left: m.size(),
            right: n.size(),
        });
    }
    let size = m.size();
    let sig_m: Vec<Signature> = (0..size).map(|i| signature(m, i)).collect();
    let sig_n: Vec<Signature> = (0..size).map(|i| signature(n, i)).collect();

    let mut count: BTreeMap<&Signature, isize> = BTreeMap::new();
    for s in &sig_m {
        *count.entry(s).or_default() += 1;
    }
    for s in &sig_n {
        *count.entry(s).or_default() -= 1;
    }
    if count.values().any(|&c| c != 0) {
        return Ok(None);
    }

    // Assign the rarest signatures first.
    let mut order: Vec<usize> = (0..size).collect();
    order.sort_by_key(|&i| {
        let k = sig_m.iter().filter(|s| **s == sig_n[i]).count();
        (k, i)
    });
    let candidates: Vec<Vec<usize>> = (0..size)
        .map(|i| (0..size).filter(|&j| sig_m[j] == sig_n[i]).collect())
        .collect();

    let mut assignment = vec![usize::MAX; size];
    let mut used = vec![false; size];
    if search(m, n, &order, &candidates, 0, &mut assignment, &mut used) {
        Ok(Some(
            Permutation::from_images(assignment).expect("search yields a bijection"),
        ))
    } else {
        Ok(None)
    }
}

fn search(
    m: &SquareMatrix,
    n: &SquareMatrix,
    order: &[usize],
    candidates: &[Vec<usize>],
    depth: usize,
    assignment: &mut [usize],
    used: &mut [bool],
) -> bool {
    let Some(&i) = order.get(depth) else {
        return true;
    };
    for &j in &candidates[i] {
        if used[j] {
            continue;
        }
        let consistent = n.get(i, i) == m.get(j, j)
            && order[..depth].iter().all(|&k| {
                let pk = assignment[k];
                n.get(i, k) == m.get(j, pk) && n.get(k, i) == m.get(pk, j)
            });
        if !consistent {
            continue;
        }
        assignment[i] = j;
        used[j] = true;
        if search(m, n, order, candidates, depth + 1, assignment, used) {
            return true;
        }
        used[j] = false;
        assignment[i] = usize::MAX;
    }
    false
}
