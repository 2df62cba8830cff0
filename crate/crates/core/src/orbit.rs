//! Bounded breadth-first search of Hurwitz orbits, a short-word
//! conjugator search, and a randomized invariance checker.

use std::collections::{HashMap, HashSet, VecDeque};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::braid::BraidWord;
use crate::error::{BraidError, Result};
use crate::garside::{compact, NormalForm};
use crate::invariants::{system_invariants, SystemInvariants};
use crate::moves::{
    destabilize, global_conjugate, hurwitz_move, hurwitz_move_on, stabilize, HurwitzMove,
};
use crate::system::BraidSystem;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitLimits {
    pub max_states: usize,
    pub max_depth: usize,
    /// Largest normal-form length (|inf| + factor count) a component may
    /// reach before the state is pruned.
    pub max_component_canonical_length: usize,
}

impl Default for OrbitLimits {
    fn default() -> Self {
        OrbitLimits {
            max_states: 100_000,
            max_depth: 32,
            max_component_canonical_length: 64,
        }
    }
}

impl OrbitLimits {
    fn validate(&self) -> Result<()> {
        if self.max_states == 0 || self.max_depth == 0 || self.max_component_canonical_length == 0 {
            return Err(BraidError::Precondition(
                "orbit limits must all be positive".into(),
            ));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OrbitStatus {
    /// Every state reachable from the source was visited.
    Complete,
    /// A limit stopped the search; nothing is certified.
    Truncated,
    TargetFound,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitResult {
    pub status: OrbitStatus,
    pub states_visited: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<HurwitzMove>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub frontier_exhausted_at_depth: Option<usize>,
}

struct Node {
    key: Vec<NormalForm>,
    parent: Option<(usize, HurwitzMove)>,
    depth: usize,
}

fn compact_system(s: &BraidSystem) -> BraidSystem {
    let comps = s.components().iter().map(compact).collect();
    BraidSystem::new(s.degree(), comps).expect("compaction keeps the shape")
}

fn witness_path(nodes: &[Node], mut at: usize) -> Vec<HurwitzMove> {
    let mut path = Vec::new();
    while let Some((parent, mv)) = nodes[at].parent {
        path.push(mv);
        at = parent;
    }
    path.reverse();
    path
}

/// Moves `σ_1^{±1} … σ_{n-1}^{±1}`, shuffled when a seed is given.
fn generators(n: usize, seed: Option<u64>) -> Vec<HurwitzMove> {
    let mut gens: Vec<HurwitzMove> = (1..n)
        .flat_map(|i| [HurwitzMove::forward(i), HurwitzMove::inverse(i)])
        .collect();
    if let Some(seed) = seed {
        gens.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    }
    gens
}

pub fn hurwitz_orbit(
    s: &BraidSystem,
    limits: OrbitLimits,
    target: Option<&BraidSystem>,
    seed: Option<u64>,
) -> Result<OrbitResult> {
    hurwitz_orbit_visit(s, limits, target, seed, |_, _| {})
}

/// Like [`hurwitz_orbit`], calling `visit(state, depth)` once for every
/// distinct state in the order they are discovered.
pub fn hurwitz_orbit_visit<F>(
    s: &BraidSystem,
    limits: OrbitLimits,
    target: Option<&BraidSystem>,
    seed: Option<u64>,
    mut visit: F,
) -> Result<OrbitResult>
where
    F: FnMut(&BraidSystem, usize),
{
    limits.validate()?;
    let target_key = match target {
        Some(t) if t.degree() != s.degree() || t.len() != s.len() => {
            return Err(BraidError::Precondition(format!(
                "target has shape B_{}^{}, source has B_{}^{}",
                t.degree(),
                t.len(),
                s.degree(),
                s.len()
            )))
        }
        Some(t) => Some(t.normal_forms()),
        None => None,
    };

    let gens = generators(s.len(), seed);
    let mut seen: HashMap<Vec<NormalForm>, usize> = HashMap::new();
    let mut nodes: Vec<Node> = Vec::new();
    let mut queue = VecDeque::new();
    let mut truncated = false;

    let start_key = s.normal_forms();
    seen.insert(start_key.clone(), 0);
    nodes.push(Node {
        key: start_key.clone(),
        parent: None,
        depth: 0,
    });
    visit(&compact_system(s), 0);
    if target_key.as_ref() == Some(&start_key) {
        return Ok(OrbitResult {
            status: OrbitStatus::TargetFound,
            states_visited: 1,
            witness: Some(Vec::new()),
            frontier_exhausted_at_depth: None,
        });
    }
    queue.push_back(0);

    let mut last_depth = 0;
    while let Some(at) = queue.pop_front() {
        let depth = nodes[at].depth;
        last_depth = depth;
        for &mv in &gens {
            let key = hurwitz_move_on(&nodes[at].key, mv)?;
            if seen.contains_key(&key) {
                continue;
            }
            if depth >= limits.max_depth
                || nodes.len() >= limits.max_states
                || key
                    .iter()
                    .any(|nf| nf.canonical_length() > limits.max_component_canonical_length)
            {
                truncated = true;
                continue;
            }
            let system = BraidSystem::new(s.degree(), key.iter().map(NormalForm::to_word).collect())?;
            visit(&system, depth + 1);
            let id = nodes.len();
            seen.insert(key.clone(), id);
            nodes.push(Node {
                key: key.clone(),
                parent: Some((at, mv)),
                depth: depth + 1,
            });
            if target_key.as_ref() == Some(&key) {
                return Ok(OrbitResult {
                    status: OrbitStatus::TargetFound,
                    states_visited: nodes.len(),
                    witness: Some(witness_path(&nodes, id)),
                    frontier_exhausted_at_depth: None,
                });
            }
            queue.push_back(id);
        }
    }

    Ok(OrbitResult {
        status: if truncated {
            OrbitStatus::Truncated
        } else {
            OrbitStatus::Complete
        },
        states_visited: nodes.len(),
        witness: None,
        frontier_exhausted_at_depth: (!truncated).then_some(last_depth),
    })
}

/// Replays a witness from `s`.
pub fn replay(s: &BraidSystem, moves: &[HurwitzMove]) -> Result<BraidSystem> {
    moves.iter().try_fold(s.clone(), |acc, &mv| {
        Ok(compact_system(&hurwitz_move(&acc, mv)?))
    })
}

/// Searches conjugators of length at most `max_len` for `a` with
/// `a^{-1} b a = b2`, breadth first over normal forms of conjugates.
pub fn find_conjugator(b: &BraidWord, b2: &BraidWord, max_len: usize) -> Result<Option<BraidWord>> {
    if b.degree() != b2.degree() {
        return Err(BraidError::DegreeMismatch {
            left: b.degree(),
            right: b2.degree(),
        });
    }
    let m = b.degree();
    let goal = NormalForm::from_word(b2);
    let start = NormalForm::from_word(b);
    if start == goal {
        return Ok(Some(BraidWord::identity(m)?));
    }
    let letters: Vec<i32> = (1..m as i32).flat_map(|i| [i, -i]).collect();
    let mut seen: HashSet<NormalForm> = HashSet::new();
    seen.insert(start);
    let mut frontier = vec![(compact(b), Vec::<i32>::new())];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for (word, path) in &frontier {
            for &l in &letters {
                let h = BraidWord::new(m, vec![l])?;
                let conj = word.conjugate(&h)?;
                let nf = NormalForm::from_word(&conj);
                if seen.contains(&nf) {
                    continue;
                }
                let mut p = path.clone();
                p.push(l);
                if nf == goal {
                    return Ok(Some(BraidWord::new(m, p)?));
                }
                seen.insert(nf.clone());
                next.push((nf.to_word(), p));
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    Ok(None)
}

/// One randomized step of [`verify_invariance`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "snake_case")]
pub enum RandomMove {
    Hurwitz(HurwitzMove),
    GlobalConjugate { word: Vec<i32> },
    StabilizePair,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvarianceFailure {
    pub trial: usize,
    pub moves: Vec<RandomMove>,
    pub invariant: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvarianceReport {
    pub trials: usize,
    pub seed: u64,
    pub moves_applied: usize,
    pub failures: Vec<InvarianceFailure>,
}

impl InvarianceReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn random_move<R: Rng>(rng: &mut R, s: &BraidSystem) -> RandomMove {
    let n = s.len();
    let m = s.degree();
    let roll = rng.gen_range(0..10);
    if n >= 2 && roll < 7 {
        let index = rng.gen_range(1..n);
        return RandomMove::Hurwitz(if rng.gen_bool(0.5) {
            HurwitzMove::forward(index)
        } else {
            HurwitzMove::inverse(index)
        });
    }
    if m >= 2 && roll < 9 {
        let len = rng.gen_range(1..=3);
        let word = (0..len)
            .map(|_| {
                let i = rng.gen_range(1..m as i32);
                if rng.gen_bool(0.5) {
                    i
                } else {
                    -i
                }
            })
            .collect();
        return RandomMove::GlobalConjugate { word };
    }
    RandomMove::StabilizePair
}

// Compares the fields that every move in the mix preserves. The trace is
// handled separately because global conjugation moves it.
fn compare(before: &SystemInvariants, after: &SystemInvariants) -> Option<&'static str> {
    if before.charpoly_product != after.charpoly_product {
        return Some("charpoly_product");
    }
    if before.charpoly_multiset != after.charpoly_multiset {
        return Some("charpoly_multiset");
    }
    if before.essential.core != after.essential.core {
        return Some("essential");
    }
    if before.exponent_sums != after.exponent_sums {
        return Some("exponent_sums");
    }
    if before.degree_plus_length_mod3 != after.degree_plus_length_mod3 {
        return Some("degree_plus_length_mod3");
    }
    None
}

/// Applies `trials` random sequences (up to 15 moves each) of Hurwitz
/// moves, global conjugations and stabilize/destabilize pairs, checking
/// the invariants after every move. Deterministic for a given seed.
pub fn verify_invariance(s: &BraidSystem, trials: usize, seed: u64) -> Result<InvarianceReport> {
    if trials == 0 {
        return Err(BraidError::Precondition("trials must be at least 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let base = system_invariants(s).invariants;
    let mut report = InvarianceReport {
        trials,
        seed,
        moves_applied: 0,
        failures: Vec::new(),
    };
    for trial in 0..trials {
        let len = rng.gen_range(1..=15);
        let mut current = compact_system(s);
        let mut expected_trace = s.trace();
        let mut history = Vec::new();
        for _ in 0..len {
            let mv = random_move(&mut rng, &current);
            history.push(mv.clone());
            let mut failure: Option<String> = None;
            current = match &mv {
                RandomMove::Hurwitz(h) => hurwitz_move(&current, *h)?,
                RandomMove::GlobalConjugate { word } => {
                    let a = BraidWord::new(current.degree(), word.clone())?;
                    expected_trace = expected_trace.conjugate(&a)?;
                    global_conjugate(&current, &a)?
                }
                RandomMove::StabilizePair => {
                    let up = stabilize(&current)?;
                    let up_inv = system_invariants(&up).invariants;
                    if up_inv.essential.core != base.essential.core {
                        failure = Some("essential (stabilized)".into());
                    } else if up_inv.degree_plus_length_mod3 != base.degree_plus_length_mod3 {
                        failure = Some("degree_plus_length_mod3 (stabilized)".into());
                    }
                    let down = destabilize(&up)?;
                    if !down.braids_equal(&current) {
                        failure = Some("destabilize(stabilize(s))".into());
                    }
                    down
                }
            };
            current = compact_system(&current);
            report.moves_applied += 1;
            let now = system_invariants(&current).invariants;
            if failure.is_none() {
                failure = compare(&base, &now).map(str::to_string);
            }
            if failure.is_none() && now.trace != NormalForm::from_word(&expected_trace) {
                failure = Some("trace".into());
            }
            if let Some(invariant) = failure {
                report.failures.push(InvarianceFailure {
                    trial,
                    moves: history.clone(),
                    invariant,
                });
                break;
            }
            expected_trace = compact(&expected_trace);
        }
    }
    Ok(report)
}
