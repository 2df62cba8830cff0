use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use braidsys_core::compare::{compare_systems, Verdict};
use braidsys_core::crossing::OverStrand;
use braidsys_core::invariants::{braid_invariants, essential_string, system_invariants};
use braidsys_core::orbit::{hurwitz_orbit, verify_invariance, OrbitLimits};
use braidsys_core::poly::factored_string;
use braidsys_core::regression::run_suite;
use braidsys_core::script::{parse_script, run_script};
use braidsys_core::system::{BraidSystem, SystemFile};
use braidsys_core::BraidWord;
use clap::{Parser, Subcommand};
use serde::Serialize;

// Writes a line to stdout; a closed pipe (e.g. `| head`) ends the process quietly.
macro_rules! out {
    ($($arg:tt)*) => {{
        use std::io::Write;
        if writeln!(std::io::stdout(), $($arg)*).is_err() {
            std::process::exit(0);
        }
    }};
}

const EXIT_USAGE: u8 = 1;
const EXIT_DISTINGUISHED: u8 = 2;
const EXIT_INTERNAL: u8 = 3;

#[derive(Parser)]
#[command(name = "braidsys", version, about = "Crossing-matrix invariants of braids and braid systems")]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Seed for anything randomized.
    #[arg(long, global = true)]
    seed: Option<u64>,

    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Invariants of one braid or of a braid system.
    Invariants {
        #[arg(long, requires = "word", conflicts_with = "system")]
        degree: Option<usize>,
        /// Signed generator tokens, e.g. "3,-1,4".
        #[arg(long, requires = "degree")]
        word: Option<String>,
        #[arg(long, required_unless_present = "word")]
        system: Option<PathBuf>,
    },
    /// Compares two braid systems.
    Compare { first: PathBuf, second: PathBuf },
    /// Runs a move script on a braid system.
    Apply {
        #[arg(long)]
        script: PathBuf,
        #[arg(long)]
        system: PathBuf,
        /// Also write the resulting system file here.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Breadth-first search of the Hurwitz orbit.
    Orbit {
        #[arg(long)]
        system: PathBuf,
        #[arg(long)]
        target: Option<PathBuf>,
        #[arg(long, default_value_t = OrbitLimits::default().max_states)]
        max_states: usize,
        #[arg(long, default_value_t = OrbitLimits::default().max_depth)]
        max_depth: usize,
        /// Largest normal-form length allowed for a component.
        #[arg(long, default_value_t = OrbitLimits::default().max_component_canonical_length)]
        max_length: usize,
    },
    /// Recomputes the table of published example values.
    Papersuite {
        /// Swap which strand counts as over at a crossing.
        #[arg(long)]
        flip_over_strand: bool,
    },
    /// Applies random moves and checks that the invariants hold.
    Verify {
        #[arg(long)]
        system: PathBuf,
        #[arg(long, default_value_t = 100)]
        trials: usize,
    },
}

struct Failure {
    code: u8,
    error: anyhow::Error,
}

fn usage(error: impl Into<anyhow::Error>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        error: error.into(),
    }
}

fn internal(error: impl Into<anyhow::Error>) -> Failure {
    Failure {
        code: EXIT_INTERNAL,
        error: error.into(),
    }
}

type Outcome = Result<u8, Failure>;

fn read_system(path: &Path) -> Result<BraidSystem, Failure> {
    let text = fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))
        .map_err(usage)?;
    SystemFile::from_json(&text)
        .and_then(|f| f.to_system())
        .with_context(|| format!("parsing {}", path.display()))
        .map_err(usage)
}

fn print_json<T: Serialize>(value: &T) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(value).map_err(internal)?;
    out!("{text}");
    Ok(())
}

fn print_system_text(s: &BraidSystem) {
    let rep = system_invariants(s);
    let inv = &rep.invariants;
    out!("system: {s}");
    out!(
        "E = {}; P = {}",
        essential_string(&inv.essential),
        factored_string(&inv.charpoly_product)
    );
    let multiset: Vec<String> = inv.charpoly_multiset.iter().map(factored_string).collect();
    out!("charpoly multiset: {{{}}}", multiset.join(", "));
    out!("trace: {} (identity: {})", inv.trace, inv.trace_is_identity);
    out!("permutation monodromy order: {}", inv.perm_monodromy_order);
    out!("exponent sums: {:?}", inv.exponent_sums);
    out!("(degree + length) mod 3: {}", inv.degree_plus_length_mod3);
}

fn cmd_invariants(
    json: bool,
    degree: Option<usize>,
    word: Option<String>,
    system: Option<PathBuf>,
) -> Outcome {
    if let Some(path) = system {
        let s = read_system(&path)?;
        if json {
            print_json(&system_invariants(&s))?;
        } else {
            print_system_text(&s);
        }
        return Ok(0);
    }
    let (Some(degree), Some(word)) = (degree, word) else {
        return Err(usage(anyhow!("give --degree and --word, or --system")));
    };
    let b = BraidWord::parse(&word, degree).map_err(usage)?;
    let rep = braid_invariants(&b);
    if json {
        print_json(&rep)?;
        return Ok(0);
    }
    let inv = &rep.invariants;
    out!("braid: {b} in B_{degree}");
    out!("normal form: {}", rep.normal_form);
    out!("r = {}", inv.r);
    out!("C(b^r):");
    for row in rep.pure_power_matrix.matrix().rows() {
        let cells: Vec<String> = row.iter().map(|c| format!("{c:>3}")).collect();
        out!("  {}", cells.join(" "));
    }
    out!("det = {}", inv.determinant);
    out!("rank = {}", inv.rank);
    out!("P = {}", factored_string(&inv.charpoly));
    out!("P = {}", inv.charpoly);
    let roots: Vec<String> = inv
        .integer_eigenvalues
        .iter()
        .map(|r| format!("{} (x{})", r.root, r.multiplicity))
        .collect();
    out!("integer eigenvalues: {}", roots.join(", "));
    Ok(0)
}

fn cmd_compare(json: bool, first: &Path, second: &Path) -> Outcome {
    let a = read_system(first)?;
    let b = read_system(second)?;
    let result = compare_systems(&a, &b);
    if json {
        print_json(&result)?;
    } else {
        for c in &result.checks {
            let mark = if c.equal { "=" } else { "!=" };
            out!("{:<24} {} {} {}", c.name, c.left, mark, c.right);
        }
        out!("verdict: {}", result.verdict);
    }
    Ok(match result.verdict {
        Verdict::DistinguishedBy(_) => EXIT_DISTINGUISHED,
        _ => 0,
    })
}

fn cmd_apply(json: bool, script: &Path, system: &Path, output: Option<PathBuf>) -> Outcome {
    let s = read_system(system)?;
    let text = fs::read_to_string(script)
        .with_context(|| format!("reading {}", script.display()))
        .map_err(usage)?;
    let commands = parse_script(&text).map_err(usage)?;
    let run = run_script(&s, &commands).map_err(usage)?;
    if let Some(path) = output {
        fs::write(&path, run.result.to_json_pretty() + "\n")
            .with_context(|| format!("writing {}", path.display()))
            .map_err(internal)?;
    }
    if json {
        print_json(&run)?;
        return Ok(0);
    }
    for entry in std::iter::once(&run.initial).chain(&run.steps) {
        let inv = &entry.invariants.invariants;
        let tau = match entry.tau_check {
            Some(t) => format!("; tau additive: {t}"),
            None => String::new(),
        };
        out!(
            "{:>3} {:<12} {}; E = {}; P = {}{}",
            entry.step,
            entry.command,
            entry.system.components.join(" | "),
            essential_string(&inv.essential),
            factored_string(&inv.charpoly_product),
            tau
        );
    }
    out!("{}", run.result.to_json_pretty());
    Ok(0)
}

fn cmd_orbit(
    json: bool,
    seed: Option<u64>,
    system: &Path,
    target: Option<PathBuf>,
    limits: OrbitLimits,
) -> Outcome {
    let s = read_system(system)?;
    let t = target.as_deref().map(read_system).transpose()?;
    let result = hurwitz_orbit(&s, limits, t.as_ref(), seed).map_err(usage)?;
    if json {
        print_json(&result)?;
        return Ok(0);
    }
    let status = serde_json::to_value(result.status).map_err(internal)?;
    out!("status: {}", status.as_str().unwrap_or_default());
    out!("states visited: {}", result.states_visited);
    if let Some(d) = result.frontier_exhausted_at_depth {
        out!("frontier exhausted at depth {d}");
    }
    if let Some(w) = &result.witness {
        let moves: Vec<String> = w.iter().map(|m| m.to_string()).collect();
        out!("witness: {}", if moves.is_empty() { "(none needed)".into() } else { moves.join(" / ") });
    }
    Ok(0)
}

fn cmd_papersuite(json: bool, flip: bool) -> Outcome {
    let convention = if flip { OverStrand::Flipped } else { OverStrand::Standard };
    let report = run_suite(convention);
    if json {
        print_json(&report)?;
    } else {
        for row in &report.rows {
            let mark = if row.pass { "pass" } else { "FAIL" };
            out!("{mark}  {:<48} expected {}  computed {}", row.name, row.expected, row.computed);
        }
        out!(
            "{} rows, {} failed ({} convention)",
            report.rows.len(),
            report.failures(),
            report.convention
        );
    }
    Ok(if report.all_pass() { 0 } else { EXIT_INTERNAL })
}

fn cmd_verify(json: bool, seed: Option<u64>, system: &Path, trials: usize) -> Outcome {
    let s = read_system(system)?;
    let report = verify_invariance(&s, trials, seed.unwrap_or(0)).map_err(usage)?;
    if json {
        print_json(&report)?;
    } else {
        out!(
            "{} trials, {} moves, {} failures (seed {})",
            report.trials,
            report.moves_applied,
            report.failures.len(),
            report.seed
        );
        for f in &report.failures {
            out!("trial {}: {} broke after {:?}", f.trial, f.invariant, f.moves);
        }
    }
    Ok(if report.passed() { 0 } else { EXIT_INTERNAL })
}

fn run(cli: Cli) -> Outcome {
    let json = cli.json;
    match cli.command {
        Cmd::Invariants {
            degree,
            word,
            system,
        } => cmd_invariants(json, degree, word, system),
        Cmd::Compare { first, second } => cmd_compare(json, &first, &second),
        Cmd::Apply {
            script,
            system,
            output,
        } => cmd_apply(json, &script, &system, output),
        Cmd::Orbit {
            system,
            target,
            max_states,
            max_depth,
            max_length,
        } => {
            let limits = OrbitLimits {
                max_states,
                max_depth,
                max_component_canonical_length: max_length,
            };
            cmd_orbit(json, cli.seed, &system, target, limits)
        }
        Cmd::Papersuite { flip_over_strand } => cmd_papersuite(json, flip_over_strand),
        Cmd::Verify { system, trials } => cmd_verify(json, cli.seed, &system, trials),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {:#}", f.error);
            ExitCode::from(f.code)
        }
    }
}
