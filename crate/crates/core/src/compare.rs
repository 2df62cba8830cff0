//! Side-by-side comparison of two braid systems by their invariants.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::invariants::{essential_string, system_invariants, SystemInvariantReport};
use crate::moves::{euler_necessity, EulerNecessity};
use crate::poly::factored_string;
use crate::system::BraidSystem;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantCheck {
    pub name: String,
    pub left: String,
    pub right: String,
    pub equal: bool,
    /// Whether a difference proves the systems are not Hurwitz equivalent.
    pub hurwitz_invariant: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum Verdict {
    DistinguishedBy(String),
    EulerNecessary,
    IndistinguishableByInvariants,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::DistinguishedBy(name) => write!(f, "distinguished_by:{name}"),
            Verdict::EulerNecessary => write!(f, "euler_necessary"),
            Verdict::IndistinguishableByInvariants => write!(f, "indistinguishable_by_invariants"),
        }
    }
}

impl From<Verdict> for String {
    fn from(v: Verdict) -> String {
        v.to_string()
    }
}

impl TryFrom<String> for Verdict {
    type Error = String;
    fn try_from(s: String) -> Result<Self, String> {
        match s.as_str() {
            "euler_necessary" => Ok(Verdict::EulerNecessary),
            "indistinguishable_by_invariants" => Ok(Verdict::IndistinguishableByInvariants),
            _ => match s.strip_prefix("distinguished_by:") {
                Some(name) if !name.is_empty() => Ok(Verdict::DistinguishedBy(name.to_string())),
                _ => Err(format!("unknown verdict `{s}`")),
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Comparison {
    pub verdict: Verdict,
    pub same_shape: bool,
    pub checks: Vec<InvariantCheck>,
}

fn check(name: &str, left: String, right: String, equal: bool, hurwitz_invariant: bool) -> InvariantCheck {
    InvariantCheck {
        name: name.to_string(),
        left,
        right,
        equal,
        hurwitz_invariant,
    }
}

fn list<T: fmt::Display>(items: &[T]) -> String {
    let parts: Vec<String> = items.iter().map(|p| p.to_string()).collect();
    format!("{{{}}}", parts.join(", "))
}

fn checks(a: &SystemInvariantReport, b: &SystemInvariantReport) -> Vec<InvariantCheck> {
    let (x, y) = (&a.invariants, &b.invariants);
    vec![
        check(
            "charpoly_product",
            factored_string(&x.charpoly_product),
            factored_string(&y.charpoly_product),
            x.charpoly_product == y.charpoly_product,
            true,
        ),
        check(
            "charpoly_multiset",
            list(&x.charpoly_multiset),
            list(&y.charpoly_multiset),
            x.charpoly_multiset == y.charpoly_multiset,
            true,
        ),
        check(
            "trace",
            format!("{} (identity: {})", x.trace.to_word(), x.trace_is_identity),
            format!("{} (identity: {})", y.trace.to_word(), y.trace_is_identity),
            x.trace == y.trace,
            true,
        ),
        check(
            "perm_monodromy_order",
            x.perm_monodromy_order.to_string(),
            y.perm_monodromy_order.to_string(),
            x.perm_monodromy_order == y.perm_monodromy_order,
            true,
        ),
        check(
            "exponent_sums",
            list(&x.exponent_sums),
            list(&y.exponent_sums),
            x.exponent_sums == y.exponent_sums,
            true,
        ),
        check(
            "essential",
            essential_string(&x.essential),
            essential_string(&y.essential),
            x.essential.core == y.essential.core,
            false,
        ),
        check(
            "degree_plus_length_mod3",
            x.degree_plus_length_mod3.to_string(),
            y.degree_plus_length_mod3.to_string(),
            x.degree_plus_length_mod3 == y.degree_plus_length_mod3,
            false,
        ),
    ]
}

/// Compares two systems. For systems of the same shape the first
/// differing Hurwitz invariant, in the order of [`Comparison::checks`],
/// names the verdict. Otherwise the Euler indicators are consulted.
pub fn compare_systems(s1: &BraidSystem, s2: &BraidSystem) -> Comparison {
    let a = system_invariants(s1);
    let b = system_invariants(s2);
    let checks = checks(&a, &b);
    let same_shape = s1.degree() == s2.degree() && s1.len() == s2.len();
    let verdict = match checks.iter().find(|c| c.hurwitz_invariant && !c.equal) {
        Some(c) if same_shape => Verdict::DistinguishedBy(c.name.clone()),
        _ => match euler_necessity(s1, s2) {
            EulerNecessity::Necessary => Verdict::EulerNecessary,
            EulerNecessity::Unknown => Verdict::IndistinguishableByInvariants,
        },
    };
    Comparison {
        verdict,
        same_shape,
        checks,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sys(m: usize, comps: &[&str]) -> BraidSystem {
        BraidSystem::parse(m, comps).unwrap()
    }

    #[test]
    fn verdicts() {
        let b = sys(4, &["1,2,-3", "3", "-2", "-1"]);
        let b2 = sys(4, &["1,-2,3", "-3", "2", "-1"]);
        let c = sys(4, &["1,-2,3", "-3,2,-1"]);
        let r = compare_systems(&b, &b2);
        assert_eq!(r.verdict, Verdict::DistinguishedBy("charpoly_product".into()));
        assert_eq!(r.checks.len(), 7);
        assert!(r.checks.iter().filter(|c| c.name != "charpoly_product" && c.name != "charpoly_multiset" && c.name != "essential").all(|c| c.equal));
        assert_eq!(compare_systems(&b2, &c).verdict, Verdict::EulerNecessary);
        assert_eq!(compare_systems(&b, &b).verdict, Verdict::IndistinguishableByInvariants);
    }

    #[test]
    fn verdict_text_round_trip() {
        for v in [
            Verdict::DistinguishedBy("trace".into()),
            Verdict::EulerNecessary,
            Verdict::IndistinguishableByInvariants,
        ] {
            let text = serde_json::to_string(&v).unwrap();
            assert_eq!(serde_json::from_str::<Verdict>(&text).unwrap(), v);
        }
        assert!(serde_json::from_str::<Verdict>("\"distinguished_by:\"").is_err());
    }
}
