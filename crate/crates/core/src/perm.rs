//! Permutations of strand positions.
//!
//! `images[k]` is the lower-endpoint position of the strand that starts at
//! upper position `k` (0-based internally, 1-based on the wire). Braid
//! products compose left to right: the permutation of `ab` sends `k` to
//! `b[a[k]]`.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{BraidError, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    /// Builds a permutation from 0-based images, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v >= n || seen[v] {
                return Err(BraidError::InvalidPermutation(format!(
                    "{:?} is not a bijection of 0..{n}",
                    images
                )));
            }
            seen[v] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation from 1-based images as written in cycle-free
    /// two-line notation.
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        let mut zero = Vec::with_capacity(images.len());
        for &v in images {
            if v == 0 {
                return Err(BraidError::InvalidPermutation(
                    "1-based image list contains 0".into(),
                ));
            }
            zero.push(v - 1);
        }
        Self::from_images(zero)
    }

    /// The transposition of positions `i` and `i + 1` (0-based `i`).
    pub fn adjacent_transposition(degree: usize, i: usize) -> Self {
        let mut p = Self::identity(degree);
        p.images.swap(i, i + 1);
        p
    }

    /// The permutation of the Garside element: `k -> n - 1 - k`.
    pub fn reversal(degree: usize) -> Self {
        Permutation {
            images: (0..degree).rev().collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.images.iter().map(|v| v + 1).collect()
    }

    pub fn apply(&self, k: usize) -> usize {
        self.images[k]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &v)| k == v)
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self.images.iter().map(|&v| other.images[v]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (k, &v) in self.images.iter().enumerate() {
            inv[v] = k;
        }
        Permutation { images: inv }
    }

    /// Cycle lengths, fixed points included.
    pub fn cycle_lengths(&self) -> Vec<usize> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut lengths = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut k = start;
            while !seen[k] {
                seen[k] = true;
                k = self.images[k];
                len += 1;
            }
            lengths.push(len);
        }
        lengths
    }

    pub fn cycle_count(&self) -> usize {
        self.cycle_lengths().len()
    }

    /// Order in the symmetric group: lcm of the cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycle_lengths()
            .into_iter()
            .fold(1u64, |acc, len| acc.lcm(&(len as u64)))
    }

    pub(crate) fn swap_images(&mut self, a: usize, b: usize) {
        self.images.swap(a, b);
    }

    pub(crate) fn swap_values(&mut self, a: usize, b: usize) {
        for v in self.images.iter_mut() {
            if *v == a {
                *v = b;
            } else if *v == b {
                *v = a;
            }
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, v) in self.images.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", v + 1)?;
        }
        write!(f, "]")
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.one_based().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<usize>::deserialize(deserializer)?;
        Permutation::from_one_based(&raw).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_bijection() {
        assert!(Permutation::from_images(vec![0, 0, 1]).is_err());
        assert!(Permutation::from_images(vec![0, 3, 1]).is_err());
        assert!(Permutation::from_one_based(&[0, 1]).is_err());
    }

    #[test]
    fn order_is_lcm_of_cycles() {
        let p = Permutation::from_one_based(&[2, 1, 4, 5, 3]).unwrap();
        assert_eq!(p.order(), 6);
        assert_eq!(p.cycle_count(), 2);
        assert_eq!(Permutation::identity(4).order(), 1);
    }

    #[test]
    fn then_and_inverse() {
        let p = Permutation::from_one_based(&[4, 1, 2, 3]).unwrap();
        assert!(p.then(&p.inverse()).is_identity());
        let q = Permutation::adjacent_transposition(4, 1);
        assert_eq!(p.then(&q).one_based(), vec![4, 1, 3, 2]);
    }

    #[test]
    fn json_is_one_based() {
        let p = Permutation::from_one_based(&[1, 3, 2]).unwrap();
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, "[1,3,2]");
        let back: Permutation = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
        assert!(serde_json::from_str::<Permutation>("[1,1]").is_err());
    }
}
