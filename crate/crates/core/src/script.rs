//! Move scripts: one command per line (or separated by `/`), applied in
//! order to a braid system.
//!
//! ```text
//! H 2 +        # Hurwitz move sigma_2 on the tuple
//! H 1 -        # its inverse at index 1
//! GC 1,-2      # global conjugation by a word
//! STAB
//! DESTAB
//! FUSE 2 2     # fuse components 2..=4
//! ```

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::braid::{BraidWord, MAX_DEGREE};
use crate::error::{BraidError, Result};
use crate::invariants::{system_invariants, SystemInvariantReport};
use crate::moves::{destabilize, euler_fuse, global_conjugate, hurwitz_move, stabilize, HurwitzMove};
use crate::system::{BraidSystem, SystemFile};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "snake_case")]
pub enum Command {
    Hurwitz(HurwitzMove),
    /// The word is kept as text; it is parsed against the degree the
    /// system has when the step runs.
    GlobalConjugate { word: String },
    Stabilize,
    Destabilize,
    Fuse { l: usize, q: usize },
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Command::Hurwitz(mv) => write!(f, "{mv}"),
            Command::GlobalConjugate { word } => write!(f, "GC {word}"),
            Command::Stabilize => write!(f, "STAB"),
            Command::Destabilize => write!(f, "DESTAB"),
            Command::Fuse { l, q } => write!(f, "FUSE {l} {q}"),
        }
    }
}

impl FromStr for Command {
    type Err = BraidError;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = |reason: &str| BraidError::Parse {
            token: s.to_string(),
            reason: reason.to_string(),
        };
        let (head, rest) = match s.split_once(char::is_whitespace) {
            Some((h, r)) => (h, r.trim()),
            None => (s, ""),
        };
        match head {
            "H" => s.parse().map(Command::Hurwitz),
            "GC" => {
                // Syntax check only; letters are range-checked on execution.
                BraidWord::parse(rest, MAX_DEGREE)?;
                Ok(Command::GlobalConjugate {
                    word: rest.to_string(),
                })
            }
            "STAB" if rest.is_empty() => Ok(Command::Stabilize),
            "DESTAB" if rest.is_empty() => Ok(Command::Destabilize),
            "STAB" | "DESTAB" => Err(bad("takes no arguments")),
            "FUSE" => {
                let args: Vec<&str> = rest.split_whitespace().collect();
                let [l, q] = args.as_slice() else {
                    return Err(bad("expected `FUSE <l> <q>`"));
                };
                let l = l.parse().map_err(|_| bad("l is not a number"))?;
                let q = q.parse().map_err(|_| bad("q is not a number"))?;
                Ok(Command::Fuse { l, q })
            }
            _ => Err(bad("unknown command; expected H, GC, STAB, DESTAB or FUSE")),
        }
    }
}

/// Parses a script. Blank lines and `#` comments are skipped.
pub fn parse_script(text: &str) -> Result<Vec<Command>> {
    let mut out = Vec::new();
    for line in text.lines() {
        let line = line.split('#').next().unwrap_or("");
        for part in line.split('/') {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            let cmd = part.parse().map_err(|e: BraidError| BraidError::Script {
                step: out.len() + 1,
                command: part.to_string(),
                reason: e.to_string(),
            })?;
            out.push(cmd);
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditEntry {
    pub step: usize,
    pub command: String,
    pub system: SystemFile,
    pub invariants: SystemInvariantReport,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tau_check: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScriptRun {
    pub initial: AuditEntry,
    pub steps: Vec<AuditEntry>,
    pub result: SystemFile,
}

impl ScriptRun {
    pub fn final_system(&self) -> BraidSystem {
        self.result.to_system().expect("script results are valid systems")
    }
}

/// Applies one command, returning the new system and, for fusions, the
/// τ-additivity flag.
pub fn apply_command(s: &BraidSystem, cmd: &Command) -> Result<(BraidSystem, Option<bool>)> {
    match cmd {
        Command::Hurwitz(mv) => Ok((hurwitz_move(s, *mv)?, None)),
        Command::GlobalConjugate { word } => {
            let a = BraidWord::parse(word, s.degree())?;
            Ok((global_conjugate(s, &a)?, None))
        }
        Command::Stabilize => Ok((stabilize(s)?, None)),
        Command::Destabilize => Ok((destabilize(s)?, None)),
        Command::Fuse { l, q } => {
            let (next, flag) = euler_fuse(s, *l, *q)?;
            Ok((next, Some(flag)))
        }
    }
}

fn entry(step: usize, command: String, s: &BraidSystem, tau_check: Option<bool>) -> AuditEntry {
    AuditEntry {
        step,
        command,
        system: s.to_file(None),
        invariants: system_invariants(s),
        tau_check,
    }
}

/// Runs `commands` in order. A failing step aborts the run with its
/// 1-based step number.
pub fn run_script(s: &BraidSystem, commands: &[Command]) -> Result<ScriptRun> {
    let initial = entry(0, "start".into(), s, None);
    let mut current = s.clone();
    let mut steps = Vec::with_capacity(commands.len());
    for (k, cmd) in commands.iter().enumerate() {
        let (next, tau_check) = apply_command(&current, cmd).map_err(|e| BraidError::Script {
            step: k + 1,
            command: cmd.to_string(),
            reason: e.to_string(),
        })?;
        steps.push(entry(k + 1, cmd.to_string(), &next, tau_check));
        current = next;
    }
    Ok(ScriptRun {
        initial,
        steps,
        result: current.to_file(None),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sys(m: usize, comps: &[&str]) -> BraidSystem {
        BraidSystem::parse(m, comps).unwrap()
    }

    #[test]
    fn parses_all_commands() {
        let cmds = parse_script("H 2 + / H 1 -\n# note\nGC 1, -2\n\nSTAB\nDESTAB  # back\nFUSE 2 1").unwrap();
        assert_eq!(
            cmds,
            vec![
                Command::Hurwitz(HurwitzMove::forward(2)),
                Command::Hurwitz(HurwitzMove::inverse(1)),
                Command::GlobalConjugate {
                    word: "1, -2".into()
                },
                Command::Stabilize,
                Command::Destabilize,
                Command::Fuse { l: 2, q: 1 },
            ]
        );
        for c in &cmds {
            assert_eq!(&c.to_string().parse::<Command>().unwrap(), c);
        }
    }

    #[test]
    fn parse_errors_name_the_step() {
        let err = parse_script("H 1 +\nSTAB 3").unwrap_err();
        assert!(matches!(err, BraidError::Script { step: 2, .. }), "{err}");
        assert!(parse_script("JUMP").is_err());
        assert!(parse_script("FUSE 1").is_err());
        assert!(parse_script("GC 1,x").is_err());
        assert!(parse_script("H 0 +").is_err());
        assert_eq!(parse_script("  # only a comment\n").unwrap(), vec![]);
    }

    #[test]
    fn round_trips() {
        let s = sys(4, &["1,2,-3", "3", "-2", "-1"]);
        for script in ["H 1 + / H 1 -", "STAB / DESTAB", "GC 2,-3 / GC 3,-2"] {
            let run = run_script(&s, &parse_script(script).unwrap()).unwrap();
            assert!(run.final_system().braids_equal(&s), "{script}");
            assert_eq!(run.steps.len(), 2);
        }
    }

    #[test]
    fn two_fusions() {
        let b = sys(4, &["1,-2,3", "-3", "2", "-1"]);
        let c = sys(4, &["1,-2,3", "-3,2,-1"]);
        let run = run_script(&b, &parse_script("FUSE 2 1 / FUSE 2 1").unwrap()).unwrap();
        assert!(run.final_system().braids_equal(&c));
        assert!(run.steps.iter().all(|e| e.tau_check == Some(true)));
        let run = run_script(&b, &parse_script("FUSE 2 2").unwrap()).unwrap();
        assert!(run.final_system().braids_equal(&c));
    }

    #[test]
    fn execution_errors_name_the_step() {
        let s = sys(3, &["1", "2"]);
        let err = run_script(&s, &parse_script("H 1 +\nH 2 +").unwrap()).unwrap_err();
        assert!(matches!(err, BraidError::Script { step: 2, .. }), "{err}");
        let err = run_script(&s, &parse_script("GC 5").unwrap()).unwrap_err();
        assert!(matches!(err, BraidError::Script { step: 1, .. }), "{err}");
        let err = run_script(&s, &parse_script("DESTAB").unwrap()).unwrap_err();
        assert!(err.to_string().contains("DESTAB"), "{err}");
    }

    #[test]
    fn audit_json_round_trip() {
        let s = sys(3, &["1", "-2", "1"]);
        let run = run_script(&s, &parse_script("H 1 + / FUSE 1 1").unwrap()).unwrap();
        let text = serde_json::to_string(&run).unwrap();
        assert_eq!(serde_json::from_str::<ScriptRun>(&text).unwrap(), run);
    }
}
