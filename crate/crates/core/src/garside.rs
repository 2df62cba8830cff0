//! Left normal form `Δ^p · A_1 ⋯ A_k` with permutation-braid factors.
//!
//! A permutation braid (simple element) is a positive braid in which every
//! pair of strands crosses at most once; it is determined by its
//! permutation. The factors of a normal form are left-weighted: the
//! starting set of `A_{j+1}` is contained in the finishing set of `A_j`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::braid::BraidWord;
use crate::error::{BraidError, Result};
use crate::perm::Permutation;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct NormalForm {
    pub degree: usize,
    pub infimum: i64,
    pub factors: Vec<Permutation>,
}

// σ_i (0-based i) is a left divisor of the simple element.
fn starts_with(a: &Permutation, i: usize) -> bool {
    a.apply(i) > a.apply(i + 1)
}

// σ_i (0-based i) is a right divisor of the simple element.
fn ends_with(inv: &Permutation, i: usize) -> bool {
    inv.apply(i) > inv.apply(i + 1)
}

/// Moves generators from the front of `b` to the back of `a` until the pair
/// is left-weighted. Returns whether anything moved.
fn left_weight(a: &mut Permutation, b: &mut Permutation) -> bool {
    let n = a.degree();
    let mut moved = false;
    loop {
        let a_inv = a.inverse();
        let step = (0..n.saturating_sub(1)).find(|&i| starts_with(b, i) && !ends_with(&a_inv, i));
        match step {
            Some(i) => {
                a.swap_values(i, i + 1);
                b.swap_images(i, i + 1);
                moved = true;
            }
            None => return moved,
        }
    }
}

// Conjugation by Δ on simple elements: σ_i <-> σ_{n-i}.
fn flip(a: &Permutation) -> Permutation {
    let n = a.degree();
    let images = (0..n).map(|k| n - 1 - a.apply(n - 1 - k)).collect();
    Permutation::from_images(images).expect("conjugate of a permutation is a permutation")
}

enum Part {
    Delta(i64),
    Simple(Permutation),
}

/// A positive word for a permutation braid.
fn simple_word(a: &Permutation) -> Vec<i32> {
    let mut p = a.clone();
    let mut out = Vec::new();
    let n = p.degree();
    while let Some(i) = (0..n.saturating_sub(1)).find(|&i| starts_with(&p, i)) {
        out.push(i as i32 + 1);
        p.swap_images(i, i + 1);
    }
    out
}

impl NormalForm {
    pub fn identity(degree: usize) -> Self {
        NormalForm {
            degree,
            infimum: 0,
            factors: Vec::new(),
        }
    }

    pub fn from_word(word: &BraidWord) -> Self {
        let n = word.degree();
        if n < 2 {
            return NormalForm::identity(n);
        }
        let delta = Permutation::reversal(n);
        let mut parts = Vec::with_capacity(word.len() + word.len() / 2);
        for &l in word.letters() {
            let t = Permutation::adjacent_transposition(n, l.unsigned_abs() as usize - 1);
            if l > 0 {
                parts.push(Part::Simple(t));
            } else {
                // σ_i^{-1} = Δ^{-1} · (Δ σ_i^{-1})
                parts.push(Part::Delta(-1));
                parts.push(Part::Simple(delta.then(&t)));
            }
        }
        Self::from_parts(n, parts)
    }

    // Normal form of a product of Δ powers and simple elements. Every Δ^e
    // is slid to the front, flipping the simple elements it passes.
    fn from_parts(n: usize, parts: Vec<Part>) -> Self {
        let mut nf = NormalForm::identity(n);
        if n < 2 {
            return nf;
        }
        let mut pending = Vec::with_capacity(parts.len());
        let mut after = 0i64;
        for part in parts.into_iter().rev() {
            match part {
                Part::Delta(e) => after += e,
                Part::Simple(s) if after.rem_euclid(2) == 1 => pending.push(flip(&s)),
                Part::Simple(s) => pending.push(s),
            }
        }
        nf.infimum = after;
        for simple in pending.into_iter().rev() {
            nf.push_simple(simple);
        }
        nf.settle(&Permutation::reversal(n));
        nf
    }

    fn parts(&self) -> impl Iterator<Item = Part> + '_ {
        std::iter::once(Part::Delta(self.infimum)).chain(self.factors.iter().cloned().map(Part::Simple))
    }

    /// Normal form of the product `self · other`.
    pub fn multiply(&self, other: &NormalForm) -> Result<NormalForm> {
        if self.degree != other.degree {
            return Err(BraidError::DegreeMismatch {
                left: self.degree,
                right: other.degree,
            });
        }
        Ok(Self::from_parts(self.degree, self.parts().chain(other.parts()).collect()))
    }

    /// Normal form of the inverse. Uses `A^{-1} = Δ^{-1} · (Δ A^{-1})` for
    /// each simple factor.
    pub fn inverse(&self) -> NormalForm {
        let n = self.degree;
        if n < 2 {
            return self.clone();
        }
        let delta = Permutation::reversal(n);
        let mut parts = Vec::with_capacity(2 * self.factors.len() + 1);
        for a in self.factors.iter().rev() {
            parts.push(Part::Delta(-1));
            parts.push(Part::Simple(delta.then(&a.inverse())));
        }
        parts.push(Part::Delta(-self.infimum));
        Self::from_parts(n, parts)
    }

    // Right-multiplies a left-weighted factor list by a simple element: one
    // right-to-left pass, stopping at the first pair that is already
    // left-weighted.
    fn push_simple(&mut self, simple: Permutation) {
        if simple.is_identity() {
            return;
        }
        self.factors.push(simple);
        for j in (1..self.factors.len()).rev() {
            let (head, tail) = self.factors.split_at_mut(j);
            if !left_weight(&mut head[j - 1], &mut tail[0]) {
                break;
            }
        }
        while self.factors.last().is_some_and(|f| f.is_identity()) {
            self.factors.pop();
        }
    }

    fn settle(&mut self, delta: &Permutation) {
        loop {
            let mut changed = false;
            for j in (1..self.factors.len()).rev() {
                let (head, tail) = self.factors.split_at_mut(j);
                if left_weight(&mut head[j - 1], &mut tail[0]) {
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        let leading = self.factors.iter().take_while(|f| *f == delta).count();
        self.infimum += leading as i64;
        self.factors.drain(..leading);
        while self.factors.last().is_some_and(|f| f.is_identity()) {
            self.factors.pop();
        }
    }

    pub fn is_identity(&self) -> bool {
        self.infimum == 0 && self.factors.is_empty()
    }

    /// `|infimum|` plus the number of non-Δ factors.
    pub fn canonical_length(&self) -> usize {
        self.infimum.unsigned_abs() as usize + self.factors.len()
    }

    /// Re-expands the normal form into a word.
    pub fn to_word(&self) -> BraidWord {
        let n = self.degree;
        let mut letters = Vec::new();
        if n >= 2 {
            let delta = simple_word(&Permutation::reversal(n));
            let delta_inv: Vec<i32> = delta.iter().rev().map(|&l| -l).collect();
            let block = if self.infimum >= 0 { &delta } else { &delta_inv };
            for _ in 0..self.infimum.unsigned_abs() {
                letters.extend_from_slice(block);
            }
            for f in &self.factors {
                letters.extend(simple_word(f));
            }
        }
        BraidWord::from_parts_unchecked(n, letters)
    }
}

/// `D^p [a_1] [a_2] ...`, each factor shown by its permutation, or `id`.
impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "id");
        }
        let mut parts = Vec::new();
        if self.infimum != 0 {
            parts.push(format!("D^{}", self.infimum));
        }
        parts.extend(self.factors.iter().map(|a| a.to_string()));
        write!(f, "{}", parts.join(" "))
    }
}

pub fn normal_form(word: &BraidWord) -> NormalForm {
    NormalForm::from_word(word)
}

pub fn is_identity(word: &BraidWord) -> bool {
    NormalForm::from_word(word).is_identity()
}

pub fn braids_equal(a: &BraidWord, b: &BraidWord) -> Result<bool> {
    if a.degree() != b.degree() {
        return Err(BraidError::DegreeMismatch {
            left: a.degree(),
            right: b.degree(),
        });
    }
    Ok(NormalForm::from_word(a) == NormalForm::from_word(b))
}

/// The shorter of the free reduction and the normal-form re-expansion.
pub fn compact(word: &BraidWord) -> BraidWord {
    let reduced = word.free_reduce();
    let canonical = NormalForm::from_word(&reduced).to_word();
    if canonical.len() < reduced.len() {
        canonical
    } else {
        reduced
    }
}
