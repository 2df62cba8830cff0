//! Dense integer polynomials with exact coefficients.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::bigjson;

/// Coefficients lowest degree first, without trailing zeros. The zero
/// polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "PolyRepr")]
pub struct IntPolynomial {
    #[serde(with = "bigjson::vec")]
    coeffs: Vec<BigInt>,
}

#[derive(Deserialize)]
struct PolyRepr {
    #[serde(with = "bigjson::vec")]
    coeffs: Vec<BigInt>,
}

impl From<PolyRepr> for IntPolynomial {
    fn from(raw: PolyRepr) -> Self {
        IntPolynomial::from_coeffs(raw.coeffs)
    }
}

impl IntPolynomial {
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `x^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::one();
        IntPolynomial { coeffs }
    }

    /// `x - root`.
    pub fn linear(root: &BigInt) -> Self {
        Self::from_coeffs(vec![-root.clone(), BigInt::one()])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn pow(&self, k: usize) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Synthetic division by `x - root`: returns quotient and remainder.
    pub fn div_linear(&self, root: &BigInt) -> (IntPolynomial, BigInt) {
        if self.coeffs.is_empty() {
            return (Self::zero(), BigInt::zero());
        }
        let d = self.coeffs.len() - 1;
        let mut quotient = vec![BigInt::zero(); d];
        let mut carry = BigInt::zero();
        for k in (0..=d).rev() {
            let value = &self.coeffs[k] + &carry * root;
            if k == 0 {
                return (Self::from_coeffs(quotient), value);
            }
            quotient[k - 1] = value.clone();
            carry = value;
        }
        unreachable!()
    }

    /// Divides out `x - root` as often as it divides exactly.
    pub fn strip_root(&self, root: &BigInt) -> (IntPolynomial, usize) {
        let mut p = self.clone();
        let mut mult = 0;
        if p.is_zero() {
            return (p, 0);
        }
        loop {
            let (q, r) = p.div_linear(root);
            if !r.is_zero() || p.degree() == Some(0) {
                return (p, mult);
            }
            p = q;
            mult += 1;
        }
    }

    /// Ordering used for canonical multisets: degree, then coefficients
    /// from the lowest degree up.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

pub fn poly_mul(p: &IntPolynomial, q: &IntPolynomial) -> IntPolynomial {
    p * q
}

pub fn poly_equal(p: &IntPolynomial, q: &IntPolynomial) -> bool {
    p == q
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::from_coeffs(out)
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::from_coeffs((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::from_coeffs((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

fn write_term(f: &mut fmt::Formatter<'_>, c: &BigInt, k: usize, first: bool) -> fmt::Result {
    let neg = c.is_negative();
    let abs = c.abs();
    if first {
        if neg {
            write!(f, "-")?;
        }
    } else {
        write!(f, " {} ", if neg { "-" } else { "+" })?;
    }
    if k == 0 || !abs.is_one() {
        write!(f, "{abs}")?;
    }
    match k {
        0 => Ok(()),
        1 => write!(f, "x"),
        _ => write!(f, "x^{k}"),
    }
}

/// Descending human form, e.g. `x^5 - 21x^3 - 16x^2 + 108x + 144`.
impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for k in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[k];
            if c.is_zero() {
                continue;
            }
            write_term(f, c, k, first)?;
            first = false;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RootMultiplicity {
    #[serde(with = "bigjson")]
    pub root: BigInt,
    pub multiplicity: usize,
}

// Fujiwara-style bound on root moduli, rounded up to an integer.
fn root_bound(p: &IntPolynomial) -> BigInt {
    let d = p.degree().unwrap_or(0);
    if d == 0 {
        return BigInt::zero();
    }
    let lead = p.leading().unwrap().abs();
    let mut best = BigInt::zero();
    for k in 1..=d {
        let c = p.coeff(d - k).abs();
        if c.is_zero() {
            continue;
        }
        let ratio = c.div_ceil(&lead);
        let mut r = ratio.nth_root(k as u32);
        if num_traits::pow(r.clone(), k) < ratio {
            r += 1;
        }
        if r > best {
            best = r;
        }
    }
    best * 2
}

/// All integer roots with multiplicity, in ascending order.
pub fn integer_roots(p: &IntPolynomial) -> Vec<RootMultiplicity> {
    let mut out = Vec::new();
    if p.is_zero() {
        return out;
    }
    let (mut q, zeros) = p.strip_root(&BigInt::zero());
    if zeros > 0 {
        out.push(RootMultiplicity {
            root: BigInt::zero(),
            multiplicity: zeros,
        });
    }
    let bound = root_bound(&q).min(q.coeff(0).abs());
    let mut r = BigInt::one();
    while r <= bound && q.degree().unwrap_or(0) > 0 {
        if q.coeff(0).is_multiple_of(&r) {
            for cand in [r.clone(), -r.clone()] {
                let (rest, mult) = q.strip_root(&cand);
                if mult > 0 {
                    q = rest;
                    out.push(RootMultiplicity {
                        root: cand,
                        multiplicity: mult,
                    });
                }
            }
        }
        r += 1;
    }
    out.sort();
    out
}

/// `original = x^zero_mult (x-1)^one_mult (x+1)^neg_one_mult · core`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ReducedPolynomial {
    #[serde(rename = "x_mult")]
    pub zero_mult: usize,
    #[serde(rename = "x_minus_1_mult")]
    pub one_mult: usize,
    #[serde(rename = "x_plus_1_mult")]
    pub neg_one_mult: usize,
    pub core: IntPolynomial,
}

impl ReducedPolynomial {
    pub fn expand(&self) -> IntPolynomial {
        let x = IntPolynomial::monomial(1);
        let xm1 = IntPolynomial::linear(&BigInt::one());
        let xp1 = IntPolynomial::linear(&-BigInt::one());
        let p = &x.pow(self.zero_mult) * &xm1.pow(self.one_mult);
        let p = &p * &xp1.pow(self.neg_one_mult);
        &p * &self.core
    }

    /// Integer members of the essential multiset and whatever part of the
    /// core has no integer roots.
    pub fn essential_roots(&self) -> (Vec<RootMultiplicity>, IntPolynomial) {
        let roots = integer_roots(&self.core);
        let mut rest = self.core.clone();
        for r in &roots {
            rest = rest.strip_root(&r.root).0;
        }
        (roots, rest)
    }
}

pub fn reduce_poly(p: &IntPolynomial) -> ReducedPolynomial {
    let (q, zero_mult) = p.strip_root(&BigInt::zero());
    let (q, one_mult) = q.strip_root(&BigInt::one());
    let (core, neg_one_mult) = q.strip_root(&-BigInt::one());
    ReducedPolynomial {
        zero_mult,
        one_mult,
        neg_one_mult,
        core,
    }
}

fn linear_factor(root: &BigInt) -> String {
    if root.is_zero() {
        "x".to_string()
    } else if root.is_positive() {
        format!("(x-{root})")
    } else {
        format!("(x+{})", -root)
    }
}

fn with_power(base: String, k: usize) -> String {
    if k == 1 {
        base
    } else {
        format!("{base}^{k}")
    }
}

/// Factored rendering: `x`, `(x+1)`, `(x-1)`, remaining integer roots in
/// descending order, then any unfactored remainder as a dense polynomial.
pub fn factored_string(p: &IntPolynomial) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let roots = integer_roots(p);
    let mut rest = p.clone();
    for r in &roots {
        rest = rest.strip_root(&r.root).0;
    }
    let find = |v: i64| roots.iter().find(|r| r.root == BigInt::from(v));
    let mut parts = Vec::new();
    for v in [0i64, -1, 1] {
        if let Some(r) = find(v) {
            parts.push(with_power(linear_factor(&r.root), r.multiplicity));
        }
    }
    for r in roots.iter().rev() {
        if r.root.abs() > BigInt::one() {
            parts.push(with_power(linear_factor(&r.root), r.multiplicity));
        }
    }
    if rest.degree().unwrap_or(0) > 0 {
        parts.push(format!("({rest})"));
    }
    if rest.degree() == Some(0) && !rest.coeff(0).is_one() {
        parts.insert(0, rest.coeff(0).to_string());
    }
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join(" ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    fn roots(list: &[(i64, usize)]) -> Vec<RootMultiplicity> {
        let mut v: Vec<_> = list
            .iter()
            .map(|&(r, m)| RootMultiplicity {
                root: BigInt::from(r),
                multiplicity: m,
            })
            .collect();
        v.sort();
        v
    }

    #[test]
    fn display_dense() {
        assert_eq!(p(&[144, 108, -16, -21, 0, 1]).to_string(), "x^5 - 21x^3 - 16x^2 + 108x + 144");
        assert_eq!(p(&[0, 0, 0, 1]).to_string(), "x^3");
        assert_eq!(p(&[-3, 8, -6, 0, 1]).to_string(), "x^4 - 6x^2 + 8x - 3");
        assert_eq!(p(&[]).to_string(), "0");
        assert_eq!(p(&[-1]).to_string(), "-1");
    }

    #[test]
    fn product_of_system_factors() {
        let sigma = p(&[0, 0, -1, 0, 1]);
        let a = p(&[1, 0, -2, 0, 1]);
        let b = p(&[-3, 8, -6, 0, 1]);
        assert_eq!(&a * &IntPolynomial::one(), a);
        assert_eq!(
            &a * &sigma.pow(3),
            p(&[0, 0, 0, 0, 0, 0, -1, 0, 5, 0, -10, 0, 10, 0, -5, 0, 1])
        );
        assert_eq!(
            &b * &sigma.pow(3),
            p(&[0, 0, 0, 0, 0, 0, 3, -8, -3, 24, -10, -24, 18, 8, -9, 0, 1])
        );
        assert!(poly_equal(&poly_mul(&a, &b), &(&b * &a)));
    }

    #[test]
    fn integer_root_extraction() {
        assert_eq!(
            integer_roots(&p(&[144, 108, -16, -21, 0, 1])),
            roots(&[(4, 1), (3, 1), (-2, 2), (-3, 1)])
        );
        assert_eq!(integer_roots(&p(&[-3, 8, -6, 0, 1])), roots(&[(1, 3), (-3, 1)]));
        assert_eq!(integer_roots(&IntPolynomial::monomial(5)), roots(&[(0, 5)]));
        // x^2 - 2 has none
        assert!(integer_roots(&p(&[-2, 0, 1])).is_empty());
        assert_eq!(integer_roots(&p(&[0, -2, 0, 1])), roots(&[(0, 1)]));
    }

    #[test]
    fn reduce_examples() {
        let x = IntPolynomial::monomial(1);
        let lin = |r: i64| IntPolynomial::linear(&BigInt::from(r));
        let pb = &(&(&x.pow(6) * &lin(-1).pow(3)) * &lin(1).pow(6)) * &lin(-3);
        let red = reduce_poly(&pb);
        assert_eq!((red.zero_mult, red.one_mult, red.neg_one_mult), (6, 6, 3));
        assert_eq!(red.core, p(&[3, 1]));
        assert_eq!(red.expand(), pb);

        let pc = &(&(&lin(-1).pow(3) * &lin(1).pow(3)) * &lin(-3)) * &lin(3);
        let red = reduce_poly(&pc);
        assert_eq!((red.zero_mult, red.one_mult, red.neg_one_mult), (0, 3, 3));
        assert_eq!(red.core, p(&[-9, 0, 1]));

        let red = reduce_poly(&IntPolynomial::monomial(4));
        assert_eq!(red.zero_mult, 4);
        assert_eq!(red.core, IntPolynomial::one());
    }

    #[test]
    fn factored_rendering() {
        let x = IntPolynomial::monomial(1);
        let lin = |r: i64| IntPolynomial::linear(&BigInt::from(r));
        let pb = &(&(&x.pow(6) * &lin(-1).pow(3)) * &lin(1).pow(6)) * &lin(-3);
        assert_eq!(factored_string(&pb), "x^6 (x+1)^3 (x-1)^6 (x+3)");
        assert_eq!(
            factored_string(&p(&[144, 108, -16, -21, 0, 1])),
            "(x-4) (x-3) (x+2)^2 (x+3)"
        );
        assert_eq!(factored_string(&p(&[-2, 0, 1])), "(x^2 - 2)");
        assert_eq!(factored_string(&p(&[0, -2, 0, 1])), "x (x^2 - 2)");
        assert_eq!(factored_string(&IntPolynomial::one()), "1");
        assert_eq!(factored_string(&p(&[-6, 3])), "3 (x-2)");
    }

    #[test]
    fn json_shape() {
        let q = p(&[-3, 8, -6, 0, 1]);
        assert_eq!(serde_json::to_string(&q).unwrap(), r#"{"coeffs":[-3,8,-6,0,1]}"#);
        let red = reduce_poly(&q);
        let v = serde_json::to_value(&red).unwrap();
        assert_eq!(v["x_minus_1_mult"], 3);
        assert_eq!(v["core"]["coeffs"], serde_json::json!([3, 1]));
    }
}
