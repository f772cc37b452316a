//! Command-line front end. Stdout carries data, stderr carries progress and
//! diagnostics. Exit codes: 0 success, 1 finding or violation, 2 input error.
//! `-` means standard input wherever a FILE is expected.

use std::fs;
use std::io::{BufRead, Write};
use std::path::PathBuf;
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand, ValueEnum};

use hypertau_core::extremal::{classify, gen_e, gen_t, ExtremalClass, ScopeReason};
use hypertau_core::multigraph::{edge_color_shannon, make_shannon, max_matching};
use hypertau_core::reduction::to_conflict_multigraph;
use hypertau_core::transversal::{cm_bound, meets_bound_with_equality, tau_exact};
use hypertau_core::verify::{
    theorem1_sweep, theorem1_sweep_resume, theorem2_sweep, theorem2_sweep_resume, vizing_sweep,
    vizing_sweep_resume, SweepConfig, SweepMonitor, SweepProgress,
};

use crate::checkpoint::{self, SweepKind};
use crate::formats::{parse_hypergraph, parse_multigraph, write_hypergraph, write_multigraph};
use crate::report;

const PROGRESS_EVERY: u64 = 100_000;

#[derive(Parser)]
#[command(
    name = "hypertau",
    version,
    about = "Hypergraph transversal bounds, extremal families, multigraph matching and coloring, and exhaustive small-instance verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Minimum transversal: prints tau and a witness vertex set
    Tau {
        /// Hypergraph file, `-` for stdin
        file: String,
    },
    /// Exact bound value (n + floor(k/2) m)/floor(3k/2) and whether tau attains it
    Bound {
        file: String,
        #[arg(short)]
        k: usize,
    },
    /// Classify a connected k-uniform hypergraph against the equality characterization
    Classify {
        file: String,
        #[arg(short)]
        k: usize,
    },
    /// Conflict multigraph of a max-degree-2 hypergraph, plus the witness map
    Reduce {
        file: String,
        #[arg(short)]
        k: usize,
    },
    /// Proper edge coloring within floor(3*Delta/2) colors
    Color {
        /// Multigraph file, `-` for stdin
        file: String,
    },
    /// Maximum matching of a multigraph
    Match { file: String },
    /// Emit a generated instance in the matching file format
    Gen {
        what: GenWhat,
        /// Uniformity (ek/tk) or degree (shannon)
        #[arg(short)]
        k: usize,
    },
    /// Exhaustive verification sweeps
    Verify {
        #[command(subcommand)]
        target: VerifyTarget,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum GenWhat {
    /// single k-edge on k vertices
    Ek,
    /// generalized triangle
    Tk,
    /// 3-vertex extremal multigraph of a given degree
    Shannon,
}

#[derive(Subcommand)]
enum VerifyTarget {
    /// Transversal bound over connected k-uniform hypergraphs
    T1 {
        #[arg(short)]
        k: usize,
        #[arg(long)]
        nmax: usize,
        #[arg(long)]
        mmax: usize,
        /// Allow duplicate edges up to this multiplicity (default: simple edges)
        #[arg(long)]
        multi: Option<usize>,
        /// Wall-clock budget in seconds; the sweep stops at the next level boundary
        #[arg(long)]
        budget: Option<u64>,
        /// Checkpoint file: resumed from when present, written when truncated
        #[arg(long)]
        checkpoint: Option<PathBuf>,
    },
    /// Matching bound over connected multigraphs with maximum degree <= d
    T2 {
        #[arg(short)]
        d: usize,
        #[arg(long)]
        vmax: usize,
        #[arg(long)]
        mmax: usize,
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long)]
        checkpoint: Option<PathBuf>,
    },
    /// Chromatic-index extremal structure over multigraphs with maximum degree d
    Vizing {
        #[arg(short)]
        d: usize,
        #[arg(long)]
        vmax: usize,
        #[arg(long)]
        mmax: usize,
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long)]
        checkpoint: Option<PathBuf>,
    },
}

struct Failure {
    code: i32,
    message: String,
}

fn input_error(message: impl Into<String>) -> Failure {
    Failure { code: 2, message: message.into() }
}

type CommandResult = Result<i32, Failure>;

/// Runs the CLI against explicit streams; returns the process exit code.
pub fn run(
    args: impl IntoIterator<Item = String>,
    stdin: &mut dyn BufRead,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // clap renders its own help/usage text; --help and --version are
            // successful exits
            if e.use_stderr() {
                let _ = write!(stderr, "{e}");
                return 2;
            }
            let _ = write!(stdout, "{e}");
            return 0;
        }
    };
    let outcome = dispatch(cli.command, stdin, stdout, stderr);
    match outcome {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(
    command: Command,
    stdin: &mut dyn BufRead,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> CommandResult {
    match command {
        Command::Tau { file } => cmd_tau(&file, stdin, stdout),
        Command::Bound { file, k } => cmd_bound(&file, k, stdin, stdout),
        Command::Classify { file, k } => cmd_classify(&file, k, stdin, stdout),
        Command::Reduce { file, k } => cmd_reduce(&file, k, stdin, stdout),
        Command::Color { file } => cmd_color(&file, stdin, stdout),
        Command::Match { file } => cmd_match(&file, stdin, stdout),
        Command::Gen { what, k } => cmd_gen(what, k, stdout),
        Command::Verify { target } => cmd_verify(target, stdout, stderr),
    }
}

fn read_input(file: &str, stdin: &mut dyn BufRead) -> Result<String, Failure> {
    if file == "-" {
        let mut text = String::new();
        stdin
            .read_to_string(&mut text)
            .map_err(|e| input_error(format!("reading stdin: {e}")))?;
        Ok(text)
    } else {
        fs::read_to_string(file).map_err(|e| input_error(format!("reading {file}: {e}")))
    }
}

fn read_hypergraph(
    file: &str,
    stdin: &mut dyn BufRead,
) -> Result<hypertau_core::Hypergraph, Failure> {
    let text = read_input(file, stdin)?;
    parse_hypergraph(&text).map_err(|e| input_error(e.to_string()))
}

fn read_multigraph(
    file: &str,
    stdin: &mut dyn BufRead,
) -> Result<hypertau_core::multigraph::Multigraph, Failure> {
    let text = read_input(file, stdin)?;
    parse_multigraph(&text).map_err(|e| input_error(e.to_string()))
}

fn emit(out: &mut dyn Write, text: impl AsRef<str>) -> Result<(), Failure> {
    out.write_all(text.as_ref().as_bytes())
        .map_err(|e| input_error(format!("writing output: {e}")))
}

fn join(indices: impl IntoIterator<Item = usize>) -> String {
    indices.into_iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

fn cmd_tau(file: &str, stdin: &mut dyn BufRead, stdout: &mut dyn Write) -> CommandResult {
    let h = read_hypergraph(file, stdin)?;
    let (tau, witness) = tau_exact(&h);
    emit(stdout, format!("{tau}\n{}\n", join(witness.vertices().iter())))?;
    Ok(0)
}

fn cmd_bound(file: &str, k: usize, stdin: &mut dyn BufRead, stdout: &mut dyn Write) -> CommandResult {
    let h = read_hypergraph(file, stdin)?;
    let bound = cm_bound(&h, k).map_err(|e| input_error(e.to_string()))?;
    let equality = meets_bound_with_equality(&h, k).map_err(|e| input_error(e.to_string()))?;
    emit(stdout, format!("{bound}\nequality={equality}\n"))?;
    Ok(0)
}

fn cmd_classify(file: &str, k: usize, stdin: &mut dyn BufRead, stdout: &mut dyn Write) -> CommandResult {
    let h = read_hypergraph(file, stdin)?;
    let class = classify(&h, k).map_err(|e| input_error(e.to_string()))?;
    match class {
        ExtremalClass::IsEk { iso } => {
            emit(stdout, format!("class=E_k\ncertificate={}\n", join(iso)))?;
            Ok(0)
        }
        ExtremalClass::IsTk { iso } => {
            emit(stdout, format!("class=T_k\ncertificate={}\n", join(iso)))?;
            Ok(0)
        }
        ExtremalClass::StrictlyBelowBound { gap } => {
            emit(stdout, format!("class=below_bound\ngap={gap}\n"))?;
            Ok(0)
        }
        ExtremalClass::OutOfTheoremScope { reason } => {
            let reason = match reason {
                ScopeReason::KEqualsThree => "k_equals_3",
                ScopeReason::Disconnected => "disconnected",
            };
            emit(stdout, format!("class=out_of_scope\nreason={reason}\n"))?;
            Ok(0)
        }
        ExtremalClass::TheoremViolation { tau, bound } => {
            emit(stdout, format!("class=theorem_violation\ntau={tau}\nbound={bound}\n"))?;
            Ok(1)
        }
    }
}

fn cmd_reduce(file: &str, k: usize, stdin: &mut dyn BufRead, stdout: &mut dyn Write) -> CommandResult {
    let h = read_hypergraph(file, stdin)?;
    let conflict = to_conflict_multigraph(&h, k).map_err(|e| input_error(e.to_string()))?;
    emit(stdout, write_multigraph(conflict.graph()))?;
    emit(stdout, "# witness map: edge-instance-index : hypergraph-vertex\n")?;
    for (instance, vertex) in conflict.instance_witnesses() {
        emit(stdout, format!("{instance} : {vertex}\n"))?;
    }
    Ok(0)
}

fn cmd_color(file: &str, stdin: &mut dyn BufRead, stdout: &mut dyn Write) -> CommandResult {
    let g = read_multigraph(file, stdin)?;
    let coloring = edge_color_shannon(&g);
    let shannon_bound = 3 * g.max_degree() / 2;
    let within = coloring.num_colors() <= shannon_bound;
    emit(
        stdout,
        format!(
            "colors={}\nshannon_bound={}\nwithin_bound={}\n",
            coloring.num_colors(),
            shannon_bound,
            within
        ),
    )?;
    for (u, v, colors) in coloring.iter() {
        for c in colors {
            emit(stdout, format!("{u} {v} {c}\n"))?;
        }
    }
    // coloring within the bound is a theorem; failing it is a finding
    Ok(if within { 0 } else { 1 })
}

fn cmd_match(file: &str, stdin: &mut dyn BufRead, stdout: &mut dyn Write) -> CommandResult {
    let g = read_multigraph(file, stdin)?;
    let matching = max_matching(&g);
    emit(stdout, format!("{}\n", matching.len()))?;
    for &(u, v) in matching.pairs() {
        emit(stdout, format!("{u} {v}\n"))?;
    }
    Ok(0)
}

fn cmd_gen(what: GenWhat, k: usize, stdout: &mut dyn Write) -> CommandResult {
    let text = match what {
        GenWhat::Ek => {
            let h = gen_e(k).map_err(|e| input_error(e.to_string()))?;
            write_hypergraph(&h).map_err(|e| input_error(e.to_string()))?
        }
        GenWhat::Tk => {
            let h = gen_t(k).map_err(|e| input_error(e.to_string()))?;
            write_hypergraph(&h).map_err(|e| input_error(e.to_string()))?
        }
        GenWhat::Shannon => {
            let g = make_shannon(k).map_err(|e| input_error(e.to_string()))?;
            write_multigraph(&g)
        }
    };
    emit(stdout, text)?;
    Ok(0)
}

/// Wall-clock monitor: enforces the budget and prints progress to stderr.
struct WallClockMonitor<'a> {
    start: Instant,
    budget: Option<Duration>,
    next_progress: u64,
    stderr: &'a mut dyn Write,
}

impl<'a> WallClockMonitor<'a> {
    fn new(budget_secs: Option<u64>, stderr: &'a mut dyn Write) -> WallClockMonitor<'a> {
        WallClockMonitor {
            start: Instant::now(),
            budget: budget_secs.map(Duration::from_secs),
            next_progress: PROGRESS_EVERY,
            stderr,
        }
    }
}

impl SweepMonitor for WallClockMonitor<'_> {
    fn should_stop(&mut self, progress: &SweepProgress) -> bool {
        if progress.instances_checked >= self.next_progress {
            self.next_progress += PROGRESS_EVERY;
            let _ = writeln!(
                self.stderr,
                "progress instances={} level={} elapsed_secs={:.1}",
                progress.instances_checked,
                progress.current_level,
                self.start.elapsed().as_secs_f64()
            );
        }
        self.budget.is_some_and(|b| self.start.elapsed() >= b)
    }

    fn elapsed_secs(&self) -> f64 {
        self.start.elapsed().as_secs_f64()
    }
}

fn load_checkpoint_text(path: &PathBuf) -> Result<Option<String>, Failure> {
    if !path.exists() {
        return Ok(None);
    }
    fs::read_to_string(path)
        .map(Some)
        .map_err(|e| input_error(format!("reading checkpoint {}: {e}", path.display())))
}

fn store_or_clear_checkpoint(
    path: &Option<PathBuf>,
    payload: Option<String>,
    stderr: &mut dyn Write,
) -> Result<(), Failure> {
    let Some(path) = path else {
        if payload.is_some() {
            let _ = writeln!(stderr, "note: sweep truncated; pass --checkpoint to keep resumable state");
        }
        return Ok(());
    };
    match payload {
        Some(text) => fs::write(path, text)
            .map_err(|e| input_error(format!("writing checkpoint {}: {e}", path.display()))),
        None => {
            if path.exists() {
                fs::remove_file(path).map_err(|e| {
                    input_error(format!("removing checkpoint {}: {e}", path.display()))
                })?;
            }
            Ok(())
        }
    }
}

fn cmd_verify(target: VerifyTarget, stdout: &mut dyn Write, stderr: &mut dyn Write) -> CommandResult {
    match target {
        VerifyTarget::T1 { k, nmax, mmax, multi, budget, checkpoint } => {
            let cap = multi.unwrap_or(1);
            let cfg = SweepConfig {
                k,
                n_max: nmax,
                m_max: mmax,
                multiplicity_cap: cap,
                time_budget_secs: budget,
            };
            let kind = SweepKind::Theorem1 { k, n_max: nmax, m_max: mmax, cap };
            let resume = match checkpoint.as_ref() {
                Some(path) => match load_checkpoint_text(path)? {
                    Some(text) => Some(
                        checkpoint::load_theorem1(&text, &kind)
                            .map_err(|e| input_error(e.to_string()))?,
                    ),
                    None => None,
                },
                None => None,
            };
            let outcome = {
                let mut monitor = WallClockMonitor::new(budget, stderr);
                match resume {
                    Some(cp) => theorem1_sweep_resume(&cfg, cp, &mut monitor),
                    None => theorem1_sweep(&cfg, &mut monitor),
                }
                .map_err(|e| input_error(e.to_string()))?
            };
            let payload = outcome
                .checkpoint
                .as_ref()
                .map(|cp| checkpoint::save_theorem1(&kind, cp))
                .transpose()
                .map_err(|e| input_error(e.to_string()))?;
            store_or_clear_checkpoint(&checkpoint, payload, stderr)?;
            report::render_theorem1(&outcome.report, stdout)
                .map_err(|e| input_error(e.to_string()))?;
            Ok(if outcome.report.violations.is_empty() { 0 } else { 1 })
        }
        VerifyTarget::T2 { d, vmax, mmax, budget, checkpoint } => {
            let kind = SweepKind::Theorem2 { d, v_max: vmax, m_max: mmax };
            let resume = match checkpoint.as_ref() {
                Some(path) => match load_checkpoint_text(path)? {
                    Some(text) => Some(
                        checkpoint::load_theorem2(&text, &kind)
                            .map_err(|e| input_error(e.to_string()))?,
                    ),
                    None => None,
                },
                None => None,
            };
            let outcome = {
                let mut monitor = WallClockMonitor::new(budget, stderr);
                match resume {
                    Some(cp) => theorem2_sweep_resume(d, vmax, mmax, cp, &mut monitor),
                    None => theorem2_sweep(d, vmax, mmax, &mut monitor),
                }
                .map_err(|e| input_error(e.to_string()))?
            };
            let payload = outcome
                .checkpoint
                .as_ref()
                .map(|cp| checkpoint::save_theorem2(&kind, cp))
                .transpose()
                .map_err(|e| input_error(e.to_string()))?;
            store_or_clear_checkpoint(&checkpoint, payload, stderr)?;
            report::render_theorem2(&outcome.report, stdout)
                .map_err(|e| input_error(e.to_string()))?;
            Ok(if outcome.report.violations.is_empty() { 0 } else { 1 })
        }
        VerifyTarget::Vizing { d, vmax, mmax, budget, checkpoint } => {
            let kind = SweepKind::Vizing { d, v_max: vmax, m_max: mmax };
            let resume = match checkpoint.as_ref() {
                Some(path) => match load_checkpoint_text(path)? {
                    Some(text) => Some(
                        checkpoint::load_vizing(&text, &kind)
                            .map_err(|e| input_error(e.to_string()))?,
                    ),
                    None => None,
                },
                None => None,
            };
            let outcome = {
                let mut monitor = WallClockMonitor::new(budget, stderr);
                match resume {
                    Some(cp) => vizing_sweep_resume(d, vmax, mmax, cp, &mut monitor),
                    None => vizing_sweep(d, vmax, mmax, &mut monitor),
                }
                .map_err(|e| input_error(e.to_string()))?
            };
            let payload = outcome
                .checkpoint
                .as_ref()
                .map(|cp| checkpoint::save_vizing(&kind, cp))
                .transpose()
                .map_err(|e| input_error(e.to_string()))?;
            store_or_clear_checkpoint(&checkpoint, payload, stderr)?;
            report::render_vizing(&outcome.report, stdout)
                .map_err(|e| input_error(e.to_string()))?;
            Ok(if outcome.report.violations.is_empty() { 0 } else { 1 })
        }
    }
}
