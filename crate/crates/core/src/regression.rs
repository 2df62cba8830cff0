//! Table of published example values, recomputed from scratch.
//!
//! Each row holds the expected value as text, the recomputed value
//! rendered the same way, and whether the two agree. The over-strand
//! convention can be flipped to check which rows depend on it.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::braid::BraidWord;
use crate::crossing::{crossing_matrix_with, permutation_equivalent, pure_power_matrix_with, OverStrand};
use crate::garside::braids_equal;
use crate::invariants::{family_bm, family_bmk, family_weaving, permutation_monodromy};
use crate::linalg::{charpoly, determinant, SquareMatrix};
use crate::moves::{euler_necessity, hurwitz_move_on, HurwitzMove};
use crate::orbit::find_conjugator;
use crate::poly::{factored_string, reduce_poly, IntPolynomial};
use crate::script::{parse_script, run_script};
use crate::system::BraidSystem;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteRow {
    pub name: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub convention: String,
    pub rows: Vec<SuiteRow>,
}

impl SuiteReport {
    pub fn all_pass(&self) -> bool {
        self.rows.iter().all(|r| r.pass)
    }

    pub fn failures(&self) -> usize {
        self.rows.iter().filter(|r| !r.pass).count()
    }
}

struct Suite {
    convention: OverStrand,
    rows: Vec<SuiteRow>,
}

impl Suite {
    fn row(&mut self, name: &str, expected: impl ToString, computed: impl ToString) {
        let expected = expected.to_string();
        let computed = computed.to_string();
        self.rows.push(SuiteRow {
            name: name.to_string(),
            pass: expected == computed,
            expected,
            computed,
        });
    }

    fn pure_power(&self, b: &BraidWord) -> SquareMatrix {
        pure_power_matrix_with(b, self.convention).1.matrix().clone()
    }

    fn charpoly(&self, b: &BraidWord) -> IntPolynomial {
        charpoly(&self.pure_power(b))
    }

    fn system_charpoly(&self, s: &BraidSystem) -> IntPolynomial {
        s.components()
            .iter()
            .fold(IntPolynomial::one(), |acc, c| &acc * &self.charpoly(c))
    }
}

fn word(text: &str, m: usize) -> BraidWord {
    BraidWord::parse(text, m).expect("suite words are well formed")
}

fn system(m: usize, comps: &[&str]) -> BraidSystem {
    BraidSystem::parse(m, comps).expect("suite systems are well formed")
}

fn poly(c: &[i64]) -> IntPolynomial {
    IntPolynomial::from_i64(c)
}

fn matrix_string(m: &SquareMatrix) -> String {
    let rows: Vec<String> = m
        .rows()
        .iter()
        .map(|r| {
            let cells: Vec<String> = r.iter().map(BigInt::to_string).collect();
            format!("[{}]", cells.join(" "))
        })
        .collect();
    rows.join(" ")
}

fn matrix(rows: &[&[i64]]) -> SquareMatrix {
    SquareMatrix::from_i64_rows(rows).expect("suite matrices are square")
}

/// Recomputes every row under the given over-strand convention.
pub fn run_suite(convention: OverStrand) -> SuiteReport {
    let mut t = Suite {
        convention,
        rows: Vec::new(),
    };

    // Two systems in B_4^4 with the same trace and monodromy group.
    let b = system(4, &["1,2,-3", "3", "-2", "-1"]);
    let b2 = system(4, &["1,-2,3", "-3", "2", "-1"]);
    t.row(
        "system b: P",
        poly(&[0, 0, 0, 0, 0, 0, -1, 0, 5, 0, -10, 0, 10, 0, -5, 0, 1]),
        t.system_charpoly(&b),
    );
    t.row(
        "system b': P",
        poly(&[0, 0, 0, 0, 0, 0, 3, -8, -3, 24, -10, -24, 18, 8, -9, 0, 1]),
        t.system_charpoly(&b2),
    );

    // Fourth powers of two 4-braids.
    let m1 = matrix(&[&[0, 0, 1, 0], &[0, 0, 0, 1], &[1, 0, 0, 0], &[0, 1, 0, 0]]);
    let m2 = matrix(&[&[0, 1, -1, 1], &[1, 0, 1, -1], &[-1, 1, 0, 1], &[1, -1, 1, 0]]);
    let c1 = t.pure_power(&word("1,2,-3", 4));
    let c2 = t.pure_power(&word("1,-2,3", 4));
    t.row("C((s1 s2 s3^-1)^4)", matrix_string(&m1), matrix_string(&c1));
    t.row("C((s1 s2^-1 s3)^4)", matrix_string(&m2), matrix_string(&c2));
    t.row(
        "fourth powers permutation equivalent",
        false,
        matches!(permutation_equivalent(&c1, &c2), Ok(Some(_))),
    );

    // Determinants and polynomials of small braids.
    for text in ["3,-1,4", "4,3,-1"] {
        let c = t.pure_power(&word(text, 5));
        t.row(&format!("det C(({text})^6)"), -144, determinant(&c));
        t.row(
            &format!("P({text})"),
            "(x-4) (x-3) (x+2)^2 (x+3)",
            factored_string(&charpoly(&c)),
        );
    }
    let conj = find_conjugator(&word("3,-1,4", 5), &word("4,3,-1", 5), 2)
        .ok()
        .flatten();
    t.row(
        "short conjugator between 3,-1,4 and 4,3,-1",
        "found",
        if conj.is_some() { "found" } else { "none" },
    );
    let c1_det = determinant(&c1);
    let c2_det = determinant(&c2);
    t.row("det C((s1 s2 s3^-1)^4)", 1, c1_det);
    t.row("det C((s1 s2^-1 s3)^4)", -3, c2_det);
    t.row("P(s1 s2 s3^-1)", "(x+1)^2 (x-1)^2", factored_string(&charpoly(&c1)));
    t.row("P(s1 s2^-1 s3)", "(x-1)^3 (x+3)", factored_string(&charpoly(&c2)));

    // Generators.
    let mut generator_ok = true;
    for m in 2..=8usize {
        let expected = &IntPolynomial::monomial(m - 2) * &poly(&[-1, 0, 1]);
        for i in 1..m {
            for sign in [true, false] {
                let g = BraidWord::generator(m, i, sign).expect("generator in range");
                generator_ok &= t.charpoly(&g) == expected;
            }
        }
    }
    t.row("P(s_i^{+-1}) = x^(m-2) (x+1)(x-1), m <= 8", true, generator_ok);

    // Weaving braids.
    for m in [3usize, 5, 7] {
        let w = family_weaving(m).expect("odd degree");
        t.row(&format!("P(W({m},1))"), IntPolynomial::monomial(m), t.charpoly(&w));
        t.row(
            &format!("P(iota W({m},1))"),
            IntPolynomial::monomial(m + 1),
            t.charpoly(&w.iota()),
        );
    }

    // b_m and b_{m,k}.
    for m in 3..=8usize {
        let mut c = vec![0i64; m + 1];
        c[m] = 1;
        c[m - 2] = -(m as i64 - 1);
        t.row(&format!("P(b_{m})"), poly(&c), t.charpoly(&family_bm(m).expect("m > 2")));
    }
    for m in 3..=6usize {
        for k in 0..=3usize {
            let (mi, ki) = (m as i64, k as i64);
            let mut c = vec![0i64; m + 1];
            c[m] = 1;
            c[m - 2] = -(ki * ki + 2 * ki + mi - 1);
            t.row(
                &format!("P(b_{m},{k})"),
                poly(&c),
                t.charpoly(&family_bmk(m, k).expect("m > 2")),
            );
        }
    }

    // Euler fusion.
    let c = system(4, &["1,-2,3", "-3,2,-1"]);
    let pb = t.system_charpoly(&b2);
    let pc = t.system_charpoly(&c);
    t.row("fusion source: P", "x^6 (x+1)^3 (x-1)^6 (x+3)", factored_string(&pb));
    t.row("fusion source: E core", "x + 3", reduce_poly(&pb).core);
    t.row("fusion result: P", "(x+1)^3 (x-1)^3 (x-3) (x+3)", factored_string(&pc));
    t.row("fusion result: E core", "x^2 - 9", reduce_poly(&pc).core);
    t.row(
        "fusion: euler necessity",
        "Necessary",
        format!("{:?}", euler_necessity(&b2, &c)),
    );
    let fused = parse_script("FUSE 2 1 / FUSE 2 1")
        .and_then(|cmds| run_script(&b2, &cmds))
        .map(|run| {
            run.final_system().braids_equal(&c) && run.steps.iter().all(|s| s.tau_check == Some(true))
        })
        .unwrap_or(false);
    t.row("fusion: two FUSE steps reach c with tau additive", true, fused);

    // Shadows.
    let perms: Vec<String> = b.components().iter().map(|x| x.permutation().to_string()).collect();
    t.row(
        "permutation shadow",
        "[4 1 2 3] [1 2 4 3] [1 3 2 4] [2 1 3 4]",
        perms.join(" "),
    );
    let perms2: Vec<String> = b2.components().iter().map(|x| x.permutation().to_string()).collect();
    t.row("permutation shadows agree", perms.join(" "), perms2.join(" "));
    let sums: Vec<i64> = b.components().iter().map(BraidWord::exponent_sum).collect();
    let sums2: Vec<i64> = b2.components().iter().map(BraidWord::exponent_sum).collect();
    t.row("exponent shadow", "[1, 1, -1, -1]", format!("{sums:?}"));
    t.row(
        "exponent shadow after H 2 +",
        format!("{sums2:?}"),
        format!("{:?}", hurwitz_move_on(&sums, HurwitzMove::forward(2)).unwrap_or_default()),
    );
    t.row("monodromy order b", 24, permutation_monodromy(&b).order());
    t.row("monodromy order b'", 24, permutation_monodromy(&b2).order());
    t.row(
        "traces equal",
        true,
        braids_equal(&b.trace(), &b2.trace()).unwrap_or(false),
    );

    // Asymmetric crossing matrix; the only row that sees the convention.
    t.row(
        "C(s1 s2) in B_3",
        "[0 1 1] [0 0 0] [0 0 0]",
        matrix_string(crossing_matrix_with(&word("1,2", 3), t.convention).matrix()),
    );

    SuiteReport {
        convention: match convention {
            OverStrand::Standard => "standard".into(),
            OverStrand::Flipped => "flipped".into(),
        },
        rows: t.rows,
    }
}
