//! Moves on braid systems: Hurwitz action, global conjugation,
//! stabilization, and Euler fusion/fission.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::braid::BraidWord;
use crate::error::{BraidError, Result};
use crate::garside::{braids_equal, is_identity, NormalForm};
use crate::invariants::system_invariants;
use crate::perm::Permutation;
use crate::system::BraidSystem;

/// Minimal group interface for running the Hurwitz action on tuples of
/// any group's elements (braids, permutations, exponent sums).
pub trait GroupElement: Clone {
    fn mul(&self, other: &Self) -> Self;
    fn inv(&self) -> Self;

    /// `self * h = h^{-1} self h`.
    fn conj(&self, h: &Self) -> Self {
        h.inv().mul(self).mul(h)
    }
}

impl GroupElement for BraidWord {
    fn mul(&self, other: &Self) -> Self {
        self.product(other).expect("tuple entries share a degree")
    }
    fn inv(&self) -> Self {
        self.inverse()
    }
}

impl GroupElement for NormalForm {
    fn mul(&self, other: &Self) -> Self {
        self.multiply(other).expect("tuple entries share a degree")
    }
    fn inv(&self) -> Self {
        self.inverse()
    }
}

impl GroupElement for Permutation {
    fn mul(&self, other: &Self) -> Self {
        self.then(other)
    }
    fn inv(&self) -> Self {
        self.inverse()
    }
}

/// The additive group of integers.
impl GroupElement for i64 {
    fn mul(&self, other: &Self) -> Self {
        self + other
    }
    fn inv(&self) -> Self {
        -self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Forward,
    Inverse,
}

/// `σ_index` (forward) or `σ_index^{-1}` (inverse) acting on a tuple;
/// `index` is 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HurwitzMove {
    pub index: usize,
    pub direction: Direction,
}

impl HurwitzMove {
    pub fn forward(index: usize) -> Self {
        HurwitzMove {
            index,
            direction: Direction::Forward,
        }
    }

    pub fn inverse(index: usize) -> Self {
        HurwitzMove {
            index,
            direction: Direction::Inverse,
        }
    }

    /// The move with the opposite direction.
    pub fn reversed(self) -> Self {
        HurwitzMove {
            index: self.index,
            direction: match self.direction {
                Direction::Forward => Direction::Inverse,
                Direction::Inverse => Direction::Forward,
            },
        }
    }

    /// The letter of `B_n` this move represents.
    pub fn letter(self) -> i32 {
        match self.direction {
            Direction::Forward => self.index as i32,
            Direction::Inverse => -(self.index as i32),
        }
    }
}

impl fmt::Display for HurwitzMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = match self.direction {
            Direction::Forward => '+',
            Direction::Inverse => '-',
        };
        write!(f, "H {} {}", self.index, sign)
    }
}

impl FromStr for HurwitzMove {
    type Err = BraidError;

    /// Accepts `H <index> <+|->`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |reason: &str| BraidError::Parse {
            token: s.to_string(),
            reason: reason.to_string(),
        };
        let parts: Vec<&str> = s.split_whitespace().collect();
        match parts.as_slice() {
            ["H", index, dir] => {
                let index: usize = index.parse().map_err(|_| bad("index is not a number"))?;
                if index == 0 {
                    return Err(bad("index is 1-based"));
                }
                let direction = match *dir {
                    "+" => Direction::Forward,
                    "-" => Direction::Inverse,
                    _ => return Err(bad("direction must be + or -")),
                };
                Ok(HurwitzMove { index, direction })
            }
            _ => Err(bad("expected `H <index> <+|->`")),
        }
    }
}

/// Applies one Hurwitz move to a tuple of group elements.
pub fn hurwitz_move_on<G: GroupElement>(tuple: &[G], mv: HurwitzMove) -> Result<Vec<G>> {
    let n = tuple.len();
    if mv.index == 0 || mv.index >= n {
        return Err(BraidError::IndexOutOfRange {
            index: mv.index,
            length: n,
        });
    }
    let i = mv.index - 1;
    let mut out = tuple.to_vec();
    let (a, b) = (&tuple[i], &tuple[i + 1]);
    match mv.direction {
        Direction::Forward => {
            out[i] = b.clone();
            out[i + 1] = a.conj(b);
        }
        Direction::Inverse => {
            out[i] = b.conj(&a.inv());
            out[i + 1] = a.clone();
        }
    }
    Ok(out)
}

fn rebuild(degree: usize, components: Vec<BraidWord>) -> BraidSystem {
    let components = components.iter().map(BraidWord::free_reduce).collect();
    BraidSystem::new(degree, components).expect("moves preserve shape invariants")
}

pub fn hurwitz_move(s: &BraidSystem, mv: HurwitzMove) -> Result<BraidSystem> {
    let out = hurwitz_move_on(s.components(), mv)?;
    Ok(rebuild(s.degree(), out))
}

/// Acts by `beta ∈ B_n`, reading its letters left to right.
pub fn hurwitz_act(s: &BraidSystem, beta: &BraidWord) -> Result<BraidSystem> {
    if beta.degree() != s.len() {
        return Err(BraidError::LengthMismatch {
            word_degree: beta.degree(),
            length: s.len(),
        });
    }
    let mut current = s.clone();
    for &l in beta.letters() {
        let mv = if l > 0 {
            HurwitzMove::forward(l as usize)
        } else {
            HurwitzMove::inverse(l.unsigned_abs() as usize)
        };
        current = hurwitz_move(&current, mv)?;
    }
    Ok(current)
}

/// Conjugates every component by `a`.
pub fn global_conjugate(s: &BraidSystem, a: &BraidWord) -> Result<BraidSystem> {
    let components = s
        .components()
        .iter()
        .map(|b| b.conjugate(a))
        .collect::<Result<Vec<_>>>()?;
    Ok(rebuild(s.degree(), components))
}

/// `(ι(b_1), …, ι(b_n), σ_m, σ_m^{-1})` in `B_{m+1}^{n+2}`.
pub fn stabilize(s: &BraidSystem) -> Result<BraidSystem> {
    let m = s.degree();
    let mut components: Vec<BraidWord> = s.components().iter().map(BraidWord::iota).collect();
    components.push(BraidWord::generator(m + 1, m, true)?);
    components.push(BraidWord::generator(m + 1, m, false)?);
    BraidSystem::new(m + 1, components)
}

/// Inverse of [`stabilize`]. The embedded components are checked
/// syntactically: after free reduction they may not use `σ_m^{±1}`.
pub fn destabilize(s: &BraidSystem) -> Result<BraidSystem> {
    let top = s.degree();
    if top < 2 {
        return Err(BraidError::Destabilize(format!(
            "degree {top} has no generator to remove"
        )));
    }
    let n = s.len();
    if n < 3 {
        return Err(BraidError::Destabilize(format!(
            "length {n} leaves no components after removing the last two"
        )));
    }
    let m = top - 1;
    let plus = BraidWord::generator(top, m, true)?;
    let minus = BraidWord::generator(top, m, false)?;
    let comps = s.components();
    if !braids_equal(&comps[n - 2], &plus)? {
        return Err(BraidError::Destabilize(format!(
            "component {} is not sigma_{m}",
            n - 1
        )));
    }
    if !braids_equal(&comps[n - 1], &minus)? {
        return Err(BraidError::Destabilize(format!(
            "component {n} is not sigma_{m}^-1"
        )));
    }
    let mut kept = Vec::with_capacity(n - 2);
    for (k, c) in comps[..n - 2].iter().enumerate() {
        let reduced = c.free_reduce();
        if reduced.max_index() >= m {
            return Err(BraidError::Destabilize(format!(
                "component {} uses sigma_{m}; rewrite it without that generator first",
                k + 1
            )));
        }
        kept.push(BraidWord::new(m, reduced.letters().to_vec())?);
    }
    BraidSystem::new(m, kept)
}

/// Degree minus the number of components of the closure.
pub fn tau(b: &BraidWord) -> usize {
    b.degree() - b.permutation().cycle_count()
}

/// Replaces components `l ..= l + q` (1-based) by their product. The flag
/// reports whether `τ` is additive over the pieces, i.e. whether the
/// reverse split is an admissible fission.
pub fn euler_fuse(s: &BraidSystem, l: usize, q: usize) -> Result<(BraidSystem, bool)> {
    let n = s.len();
    if l == 0 || q == 0 || l + q > n {
        return Err(BraidError::Precondition(format!(
            "fusion range l={l}, q={q} invalid for length {n} (need 1 <= l, q >= 1, l + q <= n)"
        )));
    }
    let pieces = &s.components()[l - 1..l + q];
    let fused = pieces
        .iter()
        .skip(1)
        .fold(pieces[0].clone(), |acc, p| acc.mul(p));
    let tau_check = tau(&fused) == pieces.iter().map(tau).sum::<usize>();
    let mut components = s.components()[..l - 1].to_vec();
    components.push(fused);
    components.extend_from_slice(&s.components()[l + q..]);
    Ok((rebuild(s.degree(), components), tau_check))
}

/// Whether splitting `whole` into `pieces` is an admissible fission.
pub fn euler_fission_check(whole: &BraidWord, pieces: &[BraidWord]) -> Result<bool> {
    if pieces.len() < 2 {
        return Err(BraidError::Fission(
            "a fission needs at least two pieces".into(),
        ));
    }
    for p in pieces {
        if p.degree() != whole.degree() {
            return Err(BraidError::DegreeMismatch {
                left: whole.degree(),
                right: p.degree(),
            });
        }
    }
    let product = pieces
        .iter()
        .skip(1)
        .fold(pieces[0].clone(), |acc, p| acc.mul(p));
    Ok(braids_equal(whole, &product)?
        && tau(whole) == pieces.iter().map(tau).sum::<usize>()
        && !pieces.iter().any(is_identity))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EulerNecessity {
    Necessary,
    Unknown,
}

/// One-sided indicator: `Necessary` when the essential cores or the
/// `(degree + length) mod 3` classes differ.
pub fn euler_necessity(s1: &BraidSystem, s2: &BraidSystem) -> EulerNecessity {
    let a = system_invariants(s1).invariants;
    let b = system_invariants(s2).invariants;
    if a.essential.core != b.essential.core
        || a.degree_plus_length_mod3 != b.degree_plus_length_mod3
    {
        EulerNecessity::Necessary
    } else {
        EulerNecessity::Unknown
    }
}

/// Componentwise normal forms, usable as a canonical key.
pub fn canonical_key(s: &BraidSystem) -> Vec<NormalForm> {
    s.normal_forms()
}
