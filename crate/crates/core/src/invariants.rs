//! Conjugacy invariants of braids and Hurwitz invariants of braid systems.
//!
//! Every braid-level invariant is read off `C(b^r)`, the crossing matrix
//! of the smallest pure power of `b`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::bigjson;
use crate::braid::BraidWord;
use crate::crossing::{crossing_matrix, pure_power_matrix, CrossingMatrix};
use crate::error::{BraidError, Result};
use crate::garside::NormalForm;
use crate::linalg::{charpoly, determinant, rank};
use crate::monodromy::PermGroup;
use crate::poly::{integer_roots, reduce_poly, IntPolynomial, ReducedPolynomial, RootMultiplicity};
use crate::system::BraidSystem;

/// Conjugacy-invariant data of a single braid.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BraidInvariants {
    pub degree: usize,
    pub r: u64,
    pub charpoly: IntPolynomial,
    #[serde(with = "bigjson")]
    pub determinant: BigInt,
    pub rank: usize,
    #[serde(with = "bigjson::vec")]
    pub s: Vec<BigInt>,
    #[serde(with = "bigjson::vec2")]
    pub s_rows: Vec<Vec<BigInt>>,
    #[serde(with = "bigjson::vec2")]
    pub s_cols: Vec<Vec<BigInt>>,
    pub integer_eigenvalues: Vec<RootMultiplicity>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BraidInvariantReport {
    pub normal_form: NormalForm,
    pub pure_power_matrix: CrossingMatrix,
    #[serde(flatten)]
    pub invariants: BraidInvariants,
}

// Multiset of multisets, inner sorted then outer sorted.
fn sorted_lines(lines: Vec<Vec<BigInt>>) -> Vec<Vec<BigInt>> {
    let mut lines: Vec<Vec<BigInt>> = lines
        .into_iter()
        .map(|mut l| {
            l.sort();
            l
        })
        .collect();
    lines.sort();
    lines
}

pub fn braid_invariants(b: &BraidWord) -> BraidInvariantReport {
    let (r, c) = pure_power_matrix(b);
    let m = c.matrix();
    let poly = charpoly(m);
    let mut s = m.entries().to_vec();
    s.sort();
    let invariants = BraidInvariants {
        degree: b.degree(),
        r,
        determinant: determinant(m),
        rank: rank(m),
        s,
        s_rows: sorted_lines(m.rows()),
        s_cols: sorted_lines((0..m.size()).map(|j| m.column(j)).collect()),
        integer_eigenvalues: integer_roots(&poly),
        charpoly: poly,
    };
    BraidInvariantReport {
        normal_form: NormalForm::from_word(b),
        pure_power_matrix: c,
        invariants,
    }
}

/// `P(b)`: the characteristic polynomial of `C(b^r)`.
pub fn braid_charpoly(b: &BraidWord) -> IntPolynomial {
    charpoly(pure_power_matrix(b).1.matrix())
}

/// Hurwitz-invariant data of a braid system.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SystemInvariants {
    pub charpoly_product: IntPolynomial,
    pub charpoly_multiset: Vec<IntPolynomial>,
    pub essential: ReducedPolynomial,
    pub trace: NormalForm,
    pub trace_is_identity: bool,
    #[serde(with = "bigjson")]
    pub perm_monodromy_order: BigInt,
    pub exponent_sums: Vec<i64>,
    pub degree_plus_length_mod3: u8,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SystemInvariantReport {
    pub degree: usize,
    pub length: usize,
    pub normal_forms: Vec<NormalForm>,
    #[serde(flatten)]
    pub invariants: SystemInvariants,
}

pub fn system_invariants(s: &BraidSystem) -> SystemInvariantReport {
    let mut polys: Vec<IntPolynomial> = s.components().iter().map(braid_charpoly).collect();
    let product = polys
        .iter()
        .fold(IntPolynomial::one(), |acc, p| &acc * p);
    polys.sort_by(|a, b| a.canonical_cmp(b));

    let group = permutation_monodromy(s);

    let mut exponent_sums: Vec<i64> = s.components().iter().map(|c| c.exponent_sum()).collect();
    exponent_sums.sort();

    let normal_forms = s.normal_forms();
    let trace = normal_forms
        .iter()
        .fold(NormalForm::identity(s.degree()), |acc, nf| {
            acc.multiply(nf).expect("components share the degree")
        });
    SystemInvariantReport {
        degree: s.degree(),
        length: s.len(),
        normal_forms,
        invariants: SystemInvariants {
            essential: reduce_poly(&product),
            charpoly_product: product,
            charpoly_multiset: polys,
            trace_is_identity: trace.is_identity(),
            trace,
            perm_monodromy_order: group.order(),
            exponent_sums,
            degree_plus_length_mod3: ((s.degree() + s.len()) % 3) as u8,
        },
    }
}

/// The group generated by the component permutations, inside `S_m`.
pub fn permutation_monodromy(s: &BraidSystem) -> PermGroup {
    let perms: Vec<_> = s.components().iter().map(|c| c.permutation()).collect();
    PermGroup::generated_by(s.degree(), &perms)
}

/// Weaving braid `σ_1 σ_2^{-1} σ_3 ⋯ σ_{m-1}^{-1}` for odd `m >= 3`.
pub fn family_weaving(m: usize) -> Result<BraidWord> {
    if m < 3 || m.is_even() {
        return Err(BraidError::Precondition(format!(
            "weaving family needs an odd degree >= 3, got {m}"
        )));
    }
    let letters = (1..m as i32)
        .map(|i| if i % 2 == 1 { i } else { -i })
        .collect();
    BraidWord::new(m, letters)
}

/// `σ_1 ⋯ σ_{m-2} σ_{m-1}^2 σ_{m-2} ⋯ σ_1` for `m > 2`.
pub fn family_bm(m: usize) -> Result<BraidWord> {
    if m <= 2 {
        return Err(BraidError::Precondition(format!(
            "b_m family needs m > 2, got {m}"
        )));
    }
    let top = m as i32 - 1;
    let mut letters: Vec<i32> = (1..top).collect();
    letters.push(top);
    letters.push(top);
    letters.extend((1..top).rev());
    BraidWord::new(m, letters)
}

/// `b_m σ_1^{2k}`.
pub fn family_bmk(m: usize, k: usize) -> Result<BraidWord> {
    let base = family_bm(m)?;
    let mut letters = base.letters().to_vec();
    letters.extend(std::iter::repeat(1).take(2 * k));
    BraidWord::new(m, letters)
}

/// Closed form for positive pure 3-braids: with `2k, 2l, 2m` crossings
/// between strand pairs (1,2), (1,3), (2,3), the polynomial is
/// `x^3 - (k^2 + l^2 + m^2) x - 2klm`. Independent of the
/// characteristic-polynomial routine.
pub fn pure3_charpoly_oracle(b: &BraidWord) -> Result<IntPolynomial> {
    if b.degree() != 3 {
        return Err(BraidError::Precondition(format!(
            "expected a 3-braid, got degree {}",
            b.degree()
        )));
    }
    if b.letters().iter().any(|&l| l < 0) {
        return Err(BraidError::Precondition("braid is not positive".into()));
    }
    if !b.is_pure() {
        return Err(BraidError::Precondition("braid is not pure".into()));
    }
    let c = crossing_matrix(b);
    let half = |i: usize, j: usize| -> BigInt {
        let total = c.get(i, j) + c.get(j, i);
        debug_assert!(total.is_even());
        total / 2
    };
    let (k, l, m) = (half(0, 1), half(0, 2), half(1, 2));
    let linear = -(&k * &k + &l * &l + &m * &m);
    let constant = -(BigInt::from(2) * &k * &l * &m);
    Ok(IntPolynomial::from_coeffs(vec![
        constant,
        linear,
        BigInt::zero(),
        BigInt::from(1),
    ]))
}

/// Display helper: the essential multiset as integer roots plus any core
/// part without integer roots.
pub fn essential_string(e: &ReducedPolynomial) -> String {
    let (roots, rest) = e.essential_roots();
    let mut items: Vec<String> = Vec::new();
    for r in &roots {
        for _ in 0..r.multiplicity {
            items.push(r.root.to_string());
        }
    }
    if rest.degree().unwrap_or(0) > 0 {
        items.push(format!("roots of {rest}"));
    }
    format!("{{{}}}", items.join(", "))
}
