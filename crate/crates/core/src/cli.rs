//! Command-line front end. All knobs are flags; identical inputs give
//! byte-identical output regardless of `--workers`.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::game::{
    localization_number_with, second_difference, verify_hideout_family, Board, PairFamily,
    SolveBudget, Solver, ZetaResult,
};
use crate::graph::{
    all_pairs_distances, cartesian_product, make_complete, make_complete_bipartite, make_cycle,
    make_grid, make_path, make_torus, Graph,
};
use crate::resolving::{metric_dimension, psi, SearchStatus, SubsetBudget, SubsetSearch};
use crate::strategies::{
    product_strategy, robber_family_c2pc4, robber_family_c3c3, short_cycle_family, CopStrategy,
    StrategyParams, TableStrategy,
};
use crate::verifier::{
    acceptance_matrix, check_bounds, verify_cop_strategy, Battery, BoundStatus, BoundsBudget,
    MatrixConfig, RowStatus, DEFAULT_MAX_TURNS,
};

/// Process exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exit {
    Ok = 0,
    Mismatch = 1,
    Budget = 2,
    Usage = 3,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "locgame", version, about = "Localization game on graphs")]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct GlobalArgs {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads (default: all cores).
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    workers: Option<u64>,
    /// Cap on knowledge states per solve.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    budget_states: Option<u64>,
    /// Cap on (state, probe) evaluations per solve.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    budget_evals: Option<u64>,
    /// Wall-clock seconds per solve.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    time_limit: Option<u64>,
    /// Cap on subsets tested by `dim` and `psi`.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    budget_subsets: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Cycle,
    Path,
    Complete,
    CompleteBipartite,
    Torus,
    Grid,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum StrategyTag {
    C5c5,
    C5c3,
    OddEven,
    EvenEven,
    C2pC6,
    /// Solver-derived table strategy with `--cops` cops.
    Solver,
    /// Imagination strategy: solver on `--left`, ψ-witness of `--right`.
    Product,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyTag {
    C3c3,
    C2pc4,
    ShortCycle,
}

#[derive(Debug, Args)]
struct StrategyArgs {
    #[arg(long, value_enum)]
    strategy: StrategyTag,
    #[arg(long)]
    p: Option<usize>,
    #[arg(long)]
    q: Option<usize>,
    #[arg(long)]
    cops: Option<usize>,
    #[arg(long)]
    left: Option<PathBuf>,
    #[arg(long)]
    right: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write a generated graph as JSON.
    Gen {
        family: Family,
        params: Vec<usize>,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Cartesian product of two graph files.
    Product {
        a: PathBuf,
        b: PathBuf,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Metric dimension.
    Dim { graph: PathBuf },
    /// Doubly resolving number.
    Psi { graph: PathBuf },
    /// Localization number by exact solving.
    Zeta {
        graph: PathBuf,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        max_cops: u64,
    },
    /// Classes of equal distance vectors under a probe.
    SafeSets {
        graph: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        probe: Vec<usize>,
    },
    /// Exhaustively verify a Cop strategy.
    VerifyCop {
        graph: PathBuf,
        #[command(flatten)]
        strategy: StrategyArgs,
        #[arg(long, default_value_t = DEFAULT_MAX_TURNS)]
        max_turns: usize,
    },
    /// Check a pair family as a Robber hideout.
    VerifyHideout {
        graph: PathBuf,
        #[arg(long, value_enum, conflicts_with = "pairs", required_unless_present = "pairs")]
        family: Option<FamilyTag>,
        #[arg(long)]
        pairs: Option<PathBuf>,
        #[arg(long)]
        cops: usize,
        #[arg(long)]
        p: Option<usize>,
    },
    /// Evaluate both product bounds on `a □ b`.
    CheckBounds { a: PathBuf, b: PathBuf },
    /// Evaluate the torus battery.
    Acceptance {
        #[arg(long)]
        battery: Option<PathBuf>,
    },
    /// Graphviz export.
    Dot { graph: PathBuf },
}

/// Resolved run settings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub budget: SolveBudget,
    pub subsets: SubsetBudget,
    pub workers: Option<usize>,
    pub format: Format,
}

impl RunConfig {
    fn from_args(g: &GlobalArgs) -> Self {
        let mut budget = SolveBudget::default();
        if let Some(n) = g.budget_states {
            budget.max_states = n as usize;
        }
        if let Some(n) = g.budget_evals {
            budget.max_evaluations = n;
        }
        if let Some(s) = g.time_limit {
            budget.time_limit = Some(Duration::from_secs(s));
        }
        let mut subsets = SubsetBudget::default();
        if let Some(n) = g.budget_subsets {
            subsets.max_subsets = n;
        }
        RunConfig { budget, subsets, workers: g.workers.map(|w| w as usize), format: g.format }
    }
}

struct Output {
    text: String,
    code: Exit,
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<Graph> {
    Graph::from_json(&read(path)?).map_err(|e| match e {
        Error::Malformed(m) => Error::Malformed(format!("{}: {m}", path.display())),
        other => other,
    })
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn emit(cfg: &RunConfig, value: &impl Serialize, text: String, code: Exit) -> Output {
    match cfg.format {
        Format::Json => Output { text: json(value), code },
        Format::Text => Output { text, code },
    }
}

fn write_graph(g: &Graph, out: &Option<PathBuf>) -> Result<Output> {
    let mut text = g.to_json();
    text.push('\n');
    if let Some(path) = out {
        std::fs::write(path, &text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        return Ok(Output { text: String::new(), code: Exit::Ok });
    }
    Ok(Output { text, code: Exit::Ok })
}

fn generate(family: Family, params: &[usize]) -> Result<Graph> {
    let want = |k: usize| -> Result<()> {
        if params.len() != k {
            return Err(Error::InvalidParameter(format!(
                "{family:?} takes {k} parameter(s), got {}",
                params.len()
            )));
        }
        Ok(())
    };
    match family {
        Family::Cycle => want(1).and_then(|_| make_cycle(params[0])),
        Family::Path => want(1).and_then(|_| make_path(params[0])),
        Family::Complete => want(1).and_then(|_| make_complete(params[0])),
        Family::CompleteBipartite => want(2).and_then(|_| make_complete_bipartite(params[0], params[1])),
        Family::Torus => want(2).and_then(|_| make_torus(params[0], params[1])),
        Family::Grid => want(2).and_then(|_| make_grid(params[0], params[1])),
    }
}

fn subset_output(cfg: &RunConfig, name: &str, r: SubsetSearch) -> Output {
    let code = if r.status == SearchStatus::Found { Exit::Ok } else { Exit::Budget };
    let text = match (&r.value, &r.witness) {
        (Some(v), Some(w)) => format!("{name} = {v}\nwitness = {w:?}\n"),
        _ => format!("{name}: budget exceeded after {} subsets\n", r.subsets_tested),
    };
    emit(cfg, &r, text, code)
}

fn required<T>(value: Option<T>, flag: &str) -> Result<T> {
    value.ok_or_else(|| Error::InvalidParameter(format!("--{flag} is required for this strategy")))
}

fn build_strategy(args: &StrategyArgs, board: &Board, cfg: &RunConfig) -> Result<Box<dyn CopStrategy>> {
    let (p, q) = (args.p, args.q);
    let params = match args.strategy {
        StrategyTag::C5c5 => StrategyParams::C5c5,
        StrategyTag::C5c3 => StrategyParams::C5c3,
        StrategyTag::OddEven => StrategyParams::OddEven { p: required(p, "p")?, q: required(q, "q")? },
        StrategyTag::EvenEven => StrategyParams::EvenEven { p: required(p, "p")?, q: required(q, "q")? },
        StrategyTag::C2pC6 => StrategyParams::C2pC6 { p: required(p, "p")? },
        StrategyTag::Solver => {
            let k = required(args.cops, "cops")?;
            let solution = Solver::new(board, k).budget(cfg.budget).solve()?;
            return Ok(Box::new(TableStrategy::new(solution)?));
        }
        StrategyTag::Product => {
            let g = load_graph(required(args.left.as_deref(), "left")?)?;
            let h = load_graph(required(args.right.as_deref(), "right")?)?;
            let g_board = Board::new(&g)?;
            let zeta = localization_number_with(&g_board, g.order().max(2) - 1, cfg.budget, 0)?;
            let ZetaResult::Exact { value } = zeta else {
                return Err(Error::InvalidParameter(format!("ζ of --left unresolved: {zeta:?}")));
            };
            let inner = TableStrategy::new(Solver::new(&g_board, value).budget(cfg.budget).solve()?)?;
            let t = psi(&all_pairs_distances(&h)?, cfg.subsets)?
                .witness
                .ok_or_else(|| Error::InvalidParameter("ψ of --right unresolved".into()))?;
            return Ok(Box::new(product_strategy(inner, &g, &h, &t)?));
        }
    };
    Ok(Box::new(params.build()?))
}

fn run_command(command: Command, cfg: &RunConfig) -> Result<Output> {
    match command {
        Command::Gen { family, params, out } => write_graph(&generate(family, &params)?, &out),
        Command::Product { a, b, out } => {
            write_graph(&cartesian_product(&load_graph(&a)?, &load_graph(&b)?)?, &out)
        }
        Command::Dim { graph } => {
            let r = metric_dimension(&all_pairs_distances(&load_graph(&graph)?)?, cfg.subsets)?;
            Ok(subset_output(cfg, "dim", r))
        }
        Command::Psi { graph } => {
            let r = psi(&all_pairs_distances(&load_graph(&graph)?)?, cfg.subsets)?;
            Ok(subset_output(cfg, "psi", r))
        }
        Command::Zeta { graph, max_cops } => {
            let board = Board::new(&load_graph(&graph)?)?;
            let r = localization_number_with(&board, max_cops as usize, cfg.budget, 0)?;
            let (text, code) = match r {
                ZetaResult::Exact { value } => (format!("zeta = {value}\n"), Exit::Ok),
                ZetaResult::AboveMax { k_max } => (format!("zeta > {k_max}\n"), Exit::Mismatch),
                ZetaResult::BudgetExceeded { k } => (format!("budget exceeded at k = {k}\n"), Exit::Budget),
            };
            Ok(emit(cfg, &r, text, code))
        }
        Command::SafeSets { graph, probe } => {
            let board = Board::new(&load_graph(&graph)?)?;
            board.check_probe(&probe)?;
            #[derive(Serialize)]
            struct Class {
                vector: Vec<u32>,
                #[serde(skip_serializing_if = "Option::is_none")]
                second_difference: Option<i64>,
                vertices: Vec<usize>,
            }
            let mut classes = Vec::new();
            let mut text = String::new();
            for c in board.partition(board.all(), &probe).into_iter().filter(|c| c.len() >= 2) {
                let v0 = c.first().expect("classes are nonempty");
                let dd = (probe.len() == 2).then(|| second_difference(board.distances(), &probe, v0)).transpose()?;
                let vector = board.distance_vector(&probe, v0);
                let dd_note = dd.map_or(String::new(), |d| format!("  (second difference {d})"));
                let _ = writeln!(text, "{vector:?} -> {:?}{dd_note}", c.to_vec());
                classes.push(Class { vector, second_difference: dd, vertices: c.to_vec() });
            }
            Ok(emit(cfg, &classes, text, Exit::Ok))
        }
        Command::VerifyCop { graph, strategy, max_turns } => {
            let board = Board::new(&load_graph(&graph)?)?;
            let s = build_strategy(&strategy, &board, cfg)?;
            let r = verify_cop_strategy(&board, &s, max_turns)?;
            let mut text = format!(
                "{}: {} (max turns {}, {} branches)\n",
                r.strategy,
                if r.won { "wins" } else { "fails" },
                r.max_turns,
                r.branches_explored
            );
            if let Some(f) = &r.failure_trace {
                for step in &f.steps {
                    let _ = writeln!(text, "  probe {:?} -> class {:?}", step.probe, step.class);
                }
                let _ = writeln!(text, "  {}", f.reason);
            }
            let code = if r.won { Exit::Ok } else { Exit::Mismatch };
            Ok(emit(cfg, &r, text, code))
        }
        Command::VerifyHideout { graph, family, pairs, cops, p } => {
            let g = load_graph(&graph)?;
            let fam = match (family, pairs) {
                (_, Some(path)) => PairFamily::from_json(&read(&path)?)?,
                (Some(FamilyTag::C3c3), None) => robber_family_c3c3(),
                (Some(FamilyTag::C2pc4), None) => robber_family_c2pc4(required(p, "p")?)?,
                (Some(FamilyTag::ShortCycle), None) => short_cycle_family(&g)
                    .ok_or_else(|| Error::InvalidParameter("graph has no cycle of length at most 5".into()))?,
                (None, None) => return Err(Error::InvalidParameter("--family or --pairs is required".into())),
            };
            let check = verify_hideout_family(&Board::new(&g)?, cops, &fam)?;
            let text = match &check.counterexample {
                None => format!("certified: {} pairs survive every {cops}-probe\n", fam.len()),
                Some((pair, probe)) => format!("refuted: pair {pair:?} is exposed by probe {probe:?}\n"),
            };
            let code = if check.certified { Exit::Ok } else { Exit::Mismatch };
            Ok(emit(cfg, &check, text, code))
        }
        Command::CheckBounds { a, b } => {
            let budget = BoundsBudget { solve: cfg.budget, subsets: cfg.subsets };
            let r = check_bounds(&load_graph(&a)?, &load_graph(&b)?, budget)?;
            let show = |v: Option<usize>| v.map_or("unresolved".to_string(), |v| v.to_string());
            let text = format!(
                "zeta(G) = {}\nzeta(H) = {}\npsi(H) = {}\nzeta(G□H) = {}\nlower bound: {}\nupper bound: {}\n",
                show(r.zeta_g.value()),
                show(r.zeta_h.value()),
                show(r.psi_h.value),
                show(r.zeta_product.value()),
                format!("{:?}", r.lower).to_lowercase(),
                format!("{:?}", r.upper).to_lowercase()
            );
            let statuses = [r.lower, r.upper];
            let code = if statuses.contains(&BoundStatus::Violated) {
                Exit::Mismatch
            } else if statuses.contains(&BoundStatus::Unresolved) {
                Exit::Budget
            } else {
                Exit::Ok
            };
            Ok(emit(cfg, &r, text, code))
        }
        Command::Acceptance { battery } => {
            let battery = match battery {
                Some(path) => Battery::from_json(&read(&path)?)?,
                None => Battery::builtin(),
            };
            let mcfg = MatrixConfig { budget: cfg.budget, ..MatrixConfig::default() };
            let rows = acceptance_matrix(&battery, &mcfg)?;
            let mut text = format!("{:>3} {:>3} {:>8} {:>5} {:>5}  {:<10} {}\n", "m", "n", "expected", "lower", "upper", "status", "methods");
            for r in &rows {
                let upper = r.upper.as_ref().map_or("-".to_string(), |u| u.value.to_string());
                let methods = format!(
                    "{} / {}",
                    r.lower.method,
                    r.upper.as_ref().map_or("-", |u| u.method.as_str())
                );
                let _ = writeln!(
                    text,
                    "{:>3} {:>3} {:>8} {:>5} {:>5}  {:<10} {}",
                    r.m,
                    r.n,
                    r.expected,
                    r.lower.value,
                    upper,
                    format!("{:?}", r.status).to_lowercase(),
                    methods
                );
            }
            let code = if rows.iter().any(|r| r.status == RowStatus::Mismatch) {
                Exit::Mismatch
            } else if rows.iter().any(|r| r.status == RowStatus::Unresolved) {
                Exit::Budget
            } else {
                Exit::Ok
            };
            Ok(emit(cfg, &rows, text, code))
        }
        Command::Dot { graph } => Ok(Output { text: load_graph(&graph)?.to_dot(), code: Exit::Ok }),
    }
}

fn exit_for(e: &Error) -> Exit {
    match e {
        Error::UnexpectedState { .. } | Error::SoundnessViolation(_) | Error::InvalidCertificate(_) => {
            Exit::Mismatch
        }
        _ => Exit::Usage,
    }
}

/// Runs the CLI on `args` (including the program name), writing results to
/// `stdout` and diagnostics to `stderr`. Returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn std::io::Write, stderr: &mut dyn std::io::Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(stderr, "{}", e.render());
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => Exit::Ok as i32,
                _ => Exit::Usage as i32,
            };
        }
    };
    let cfg = RunConfig::from_args(&cli.global);
    let result = match cfg.workers {
        None => run_command(cli.command, &cfg),
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(|| run_command(cli.command, &cfg)),
            Err(e) => Err(Error::InvalidParameter(format!("--workers: {e}"))),
        },
    };
    match result {
        Ok(out) => {
            let _ = stdout.write_all(out.text.as_bytes());
            out.code as i32
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            exit_for(&e) as i32
        }
    }
}
