//! Braid words over the Artin generators.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{BraidError, Result};
use crate::perm::Permutation;

/// Largest strand count accepted from untrusted input.
pub const MAX_DEGREE: usize = 1024;

/// A word in `σ_1^{±1} .. σ_{m-1}^{±1}`.
///
/// Letters are signed generator indices: `k > 0` is `σ_k`, `k < 0` is
/// `σ_{-k}^{-1}`. Every index satisfies `1 <= |k| <= degree - 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawWord", into = "RawWord")]
pub struct BraidWord {
    degree: usize,
    letters: Vec<i32>,
}

#[derive(Serialize, Deserialize)]
struct RawWord {
    degree: usize,
    letters: Vec<i32>,
}

impl TryFrom<RawWord> for BraidWord {
    type Error = BraidError;
    fn try_from(raw: RawWord) -> Result<Self> {
        BraidWord::new(raw.degree, raw.letters)
    }
}

impl From<BraidWord> for RawWord {
    fn from(w: BraidWord) -> Self {
        RawWord {
            degree: w.degree,
            letters: w.letters,
        }
    }
}

fn check_degree(degree: usize) -> Result<()> {
    if degree == 0 || degree > MAX_DEGREE {
        Err(BraidError::InvalidDegree(degree))
    } else {
        Ok(())
    }
}

fn check_same_degree(a: &BraidWord, b: &BraidWord) -> Result<()> {
    if a.degree != b.degree {
        Err(BraidError::DegreeMismatch {
            left: a.degree,
            right: b.degree,
        })
    } else {
        Ok(())
    }
}

impl BraidWord {
    pub fn new(degree: usize, letters: Vec<i32>) -> Result<Self> {
        check_degree(degree)?;
        for &l in &letters {
            if l == 0 || l.unsigned_abs() as usize >= degree {
                return Err(BraidError::Parse {
                    token: l.to_string(),
                    reason: format!("generator index out of range for degree {degree}"),
                });
            }
        }
        Ok(BraidWord { degree, letters })
    }

    /// The empty word of `B_degree`.
    pub fn identity(degree: usize) -> Result<Self> {
        check_degree(degree)?;
        Ok(BraidWord {
            degree,
            letters: Vec::new(),
        })
    }

    /// `σ_i^{sign}` with 1-based `i`.
    pub fn generator(degree: usize, i: usize, positive: bool) -> Result<Self> {
        let l = i as i32;
        Self::new(degree, vec![if positive { l } else { -l }])
    }

    /// Parses comma/space separated signed generator indices.
    pub fn parse(text: &str, degree: usize) -> Result<Self> {
        check_degree(degree)?;
        let mut letters = Vec::new();
        for token in text
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
        {
            let k: i64 = token.parse().map_err(|_| BraidError::Parse {
                token: token.to_string(),
                reason: "not an integer".into(),
            })?;
            if k == 0 || k.unsigned_abs() >= degree as u64 {
                return Err(BraidError::Parse {
                    token: token.to_string(),
                    reason: format!("generator index must satisfy 1 <= |k| <= {}", degree - 1),
                });
            }
            letters.push(k as i32);
        }
        Ok(BraidWord { degree, letters })
    }

    pub fn degree(&self) -> usize {
        self.degree
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

    /// The braid permutation: upper position `k` to lower position.
    pub fn permutation(&self) -> Permutation {
        // position -> strand, then invert
        let mut at: Vec<usize> = (0..self.degree).collect();
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize - 1;
            at.swap(i, i + 1);
        }
        let mut images = vec![0; self.degree];
        for (pos, &strand) in at.iter().enumerate() {
            images[strand] = pos;
        }
        Permutation::from_images(images).expect("tracked positions form a bijection")
    }

    pub fn permutation_order(&self) -> u64 {
        self.permutation().order()
    }

    pub fn is_pure(&self) -> bool {
        self.permutation().is_identity()
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|&l| l.signum() as i64).sum()
    }

    pub fn product(&self, other: &BraidWord) -> Result<BraidWord> {
        check_same_degree(self, other)?;
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord {
            degree: self.degree,
            letters,
        })
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            degree: self.degree,
            letters: self.letters.iter().rev().map(|&l| -l).collect(),
        }
    }

    /// `k`-fold product; negative `k` repeats the inverse.
    pub fn power(&self, k: i64) -> BraidWord {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let reps = k.unsigned_abs() as usize;
        let mut letters = Vec::with_capacity(base.len() * reps);
        for _ in 0..reps {
            letters.extend_from_slice(&base.letters);
        }
        BraidWord {
            degree: self.degree,
            letters,
        }
    }

    /// The literal word `a^{-1} · self · a`.
    pub fn conjugate(&self, a: &BraidWord) -> Result<BraidWord> {
        check_same_degree(self, a)?;
        let mut letters = Vec::with_capacity(self.len() + 2 * a.len());
        letters.extend(a.letters.iter().rev().map(|&l| -l));
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&a.letters);
        Ok(BraidWord {
            degree: self.degree,
            letters,
        })
    }

    /// The same word read in `B_{m+1}`.
    pub fn iota(&self) -> BraidWord {
        BraidWord {
            degree: self.degree + 1,
            letters: self.letters.clone(),
        }
    }

    /// Cancels adjacent `σ_i σ_i^{-1}` pairs until none remain.
    pub fn free_reduce(&self) -> BraidWord {
        let mut out: Vec<i32> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if out.last() == Some(&-l) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        BraidWord {
            degree: self.degree,
            letters: out,
        }
    }

    /// Largest generator index used, 0 for the empty word.
    pub fn max_index(&self) -> usize {
        self.letters
            .iter()
            .map(|l| l.unsigned_abs() as usize)
            .max()
            .unwrap_or(0)
    }

    /// Renders the word in the same token syntax `parse` accepts.
    pub fn to_token_string(&self) -> String {
        self.letters
            .iter()
            .map(|l| l.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    pub(crate) fn from_parts_unchecked(degree: usize, letters: Vec<i32>) -> BraidWord {
        BraidWord { degree, letters }
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "id");
        }
        for (n, &l) in self.letters.iter().enumerate() {
            if n > 0 {
                write!(f, " ")?;
            }
            if l > 0 {
                write!(f, "s{l}")?;
            } else {
                write!(f, "s{}^-1", -l)?;
            }
        }
        Ok(())
    }
}
