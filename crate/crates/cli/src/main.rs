//! Command-line surface for the cd-index toolkit: cd-indices of Eulerian
//! posets, subset lattices, and simplicial spheres; admissible-path
//! listings; multigraded-algebra verification; shelling-calculus
//! evaluation; and coefficient-table checks.
//!
//! Exit status: 0 = success or check passed, 1 = check failure,
//! 2 = usage or input error.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand};

use cdkit::algebra::MultiGradedAlgebra;
use cdkit::analysis::{
    check_inequalities, check_product_inequality, realizable_as_colored_complex, Realizability,
    SearchBudget,
};
use cdkit::cdindex::{
    cd_from_h_bounded, h_from_flag, CdPolynomial, CdWord, TPolynomial, DEFAULT_MAX_SOLVE_DEGREE,
};
use cdkit::paths::{enumerate_admissible, enumerate_weighted, HVector};
use cdkit::poset::GradedPoset;
use cdkit::shelling::{eval_word, opword_from_cd, trace_eval, FanTerm, OpWord};
use cdkit::simplicial::{
    euler_check, f_from_h, f_vector, flag_from_face_counts, SimplicialComplex,
};

#[derive(Parser)]
#[command(
    name = "cdkit",
    version,
    about = "Exact cd-index computation and verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the cd-index of an Eulerian poset or simplicial sphere.
    Cdindex(CdIndexArgs),
    /// List the admissible lattice paths of a cd-word.
    Paths(PathsArgs),
    /// Build a multigraded path algebra and verify its structure.
    AlgebraVerify(AlgebraVerifyArgs),
    /// Evaluate an operator word against a product fan.
    Shell(ShellArgs),
    /// Run coefficient checks on a cd-polynomial file.
    Check(CheckArgs),
}

#[derive(Args)]
struct CdIndexArgs {
    #[command(subcommand)]
    source: CdIndexSource,
}

#[derive(Subcommand)]
enum CdIndexSource {
    /// The lattice of subsets of an N-element set.
    Boolean {
        n: usize,
        /// Largest table degree the solver accepts.
        #[arg(long = "max-n", default_value_t = DEFAULT_MAX_SOLVE_DEGREE)]
        max_n: usize,
    },
    /// A bounded graded poset from a rank/cover file.
    Poset {
        path: PathBuf,
        /// Proceed past a failed Eulerian gate (prints a warning).
        #[arg(long)]
        force: bool,
        /// Largest table degree the solver accepts.
        #[arg(long = "max-n", default_value_t = DEFAULT_MAX_SOLVE_DEGREE)]
        max_n: usize,
    },
    /// A simplicial complex from a facet file.
    Complex {
        path: PathBuf,
        /// Proceed past a failed sphere gate (prints a warning).
        #[arg(long)]
        force: bool,
        /// Largest table degree the solver accepts.
        #[arg(long = "max-n", default_value_t = DEFAULT_MAX_SOLVE_DEGREE)]
        max_n: usize,
    },
}

#[derive(Args)]
struct PathsArgs {
    /// cd-word over the letters c and d.
    word: String,
    /// Comma-separated weights h_0,...,h_n (n = word degree); paths are
    /// then listed with labels.
    #[arg(long)]
    h: Option<String>,
}

#[derive(Args)]
struct AlgebraVerifyArgs {
    /// Rank of the subset-lattice algebra to build.
    n: Option<usize>,
    /// Comma-separated h-vector h_0,...,h_n to build a weighted algebra
    /// instead.
    #[arg(long)]
    h: Option<String>,
    /// Largest rank accepted.
    #[arg(long = "max-n", default_value_t = 8)]
    max_n: usize,
}

#[derive(Args)]
struct ShellArgs {
    /// Word over c/d, or an operator string over C and B (B = boundary).
    word: String,
    /// Start term: "pi N" or "pi K sigma L".
    #[arg(num_args = 2..=4)]
    start: Vec<String>,
    /// Print every evaluation branch with its lattice path.
    #[arg(long)]
    trace: bool,
}

#[derive(Args)]
#[command(group = ArgGroup::new("mode").required(true))]
struct CheckArgs {
    /// cd-polynomial file, one "word coefficient" pair per line.
    path: PathBuf,
    /// Check the split and unit-product coefficient inequalities.
    #[arg(long, group = "mode")]
    inequalities: bool,
    /// Search for a colored simplicial complex realizing the table.
    #[arg(long, group = "mode")]
    realizable: bool,
    /// Node budget for the realizability search.
    #[arg(long, default_value_t = SearchBudget::default().max_nodes)]
    budget: u64,
    /// Vertex budget for the realizability search.
    #[arg(long, default_value_t = SearchBudget::default().max_vertices)]
    max_vertices: usize,
}

/// Failure channel: usage/input problems exit 2 via stderr, diagnostics of
/// failed checks exit 1 via stderr, and structured negative reports (for
/// example the "none" of a realizability search) exit 1 via stdout.
enum Failure {
    Usage(String),
    Check(String),
    Report(String),
}

impl Failure {
    fn usage(e: impl std::fmt::Display) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(output) => {
            print!("{output}");
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
        Err(Failure::Check(message)) => {
            eprintln!("{message}");
            ExitCode::from(1)
        }
        Err(Failure::Report(output)) => {
            print!("{output}");
            ExitCode::from(1)
        }
    }
}

fn run(command: Command) -> Result<String, Failure> {
    match command {
        Command::Cdindex(args) => cmd_cdindex(args),
        Command::Paths(args) => cmd_paths(args),
        Command::AlgebraVerify(args) => cmd_algebra_verify(args),
        Command::Shell(args) => cmd_shell(args),
        Command::Check(args) => cmd_check(args),
    }
}

fn read_file(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))
}

fn parse_h(text: &str) -> Result<HVector, Failure> {
    let entries = text
        .split(',')
        .map(|tok| {
            tok.trim()
                .parse::<i64>()
                .map_err(|_| Failure::Usage(format!("invalid h entry {:?}", tok.trim())))
        })
        .collect::<Result<Vec<i64>, Failure>>()?;
    HVector::new(entries).map_err(Failure::usage)
}

fn solve_cd(h: &TPolynomial, max_n: usize) -> Result<CdPolynomial, Failure> {
    use cdkit::cdindex::CdError;
    cd_from_h_bounded(h, max_n).map_err(|e| match e {
        CdError::DegreeTooLarge { .. } => Failure::usage(e),
        other => Failure::Check(other.to_string()),
    })
}

fn cmd_cdindex(args: CdIndexArgs) -> Result<String, Failure> {
    let (h, gate, force, max_n) = match args.source {
        CdIndexSource::Boolean { n, max_n } => {
            if n == 0 {
                return Err(Failure::Usage(
                    "the subset-lattice rank must be at least 1".to_string(),
                ));
            }
            let poset = GradedPoset::boolean(n).map_err(Failure::usage)?;
            (h_from_flag(&poset.flag_f_vector()), None, false, max_n)
        }
        CdIndexSource::Poset { path, force, max_n } => {
            let poset = GradedPoset::from_text(&read_file(&path)?).map_err(Failure::usage)?;
            let gate = (!poset.is_eulerian())
                .then(|| "input poset is not Eulerian".to_string());
            (h_from_flag(&poset.flag_f_vector()), gate, force, max_n)
        }
        CdIndexSource::Complex { path, force, max_n } => {
            let complex =
                SimplicialComplex::from_text(&read_file(&path)?).map_err(Failure::usage)?;
            let gate = (!euler_check(&complex).map_err(Failure::usage)?)
                .then(|| "input complex fails the sphere gate".to_string());
            let f = f_vector(&complex).map_err(Failure::usage)?;
            let flag = flag_from_face_counts(&f).map_err(Failure::usage)?;
            (h_from_flag(&flag), gate, force, max_n)
        }
    };
    if let Some(reason) = gate {
        if force {
            eprintln!("warning: {reason}; continuing because of --force");
        } else {
            return Err(Failure::Check(format!(
                "{reason}; rerun with --force to attempt the solve anyway"
            )));
        }
    }
    Ok(solve_cd(&h, max_n)?.to_string())
}

fn cmd_paths(args: PathsArgs) -> Result<String, Failure> {
    let word: CdWord = args.word.parse().map_err(Failure::usage)?;
    let mut out = String::new();
    let total = match args.h {
        Some(text) => {
            let h = parse_h(&text)?;
            let labeled = enumerate_weighted(&word, &h).map_err(Failure::usage)?;
            for lp in &labeled {
                out.push_str(&format!("{lp}\n"));
            }
            labeled.len()
        }
        None => {
            let paths = enumerate_admissible(&word);
            for p in &paths {
                out.push_str(&format!("{p}\n"));
            }
            paths.len()
        }
    };
    out.push_str(&format!("total {total}\n"));
    Ok(out)
}

fn cmd_algebra_verify(args: AlgebraVerifyArgs) -> Result<String, Failure> {
    let (algebra, reference) = match (args.n, args.h) {
        (Some(_), Some(_)) => {
            return Err(Failure::Usage(
                "give either a rank or --h, not both".to_string(),
            ));
        }
        (None, None) => {
            return Err(Failure::Usage(
                "give a rank or an --h vector".to_string(),
            ));
        }
        (Some(n), None) => {
            if n > args.max_n {
                return Err(Failure::Usage(format!(
                    "rank {n} exceeds the budget {}; raise --max-n",
                    args.max_n
                )));
            }
            let poset = GradedPoset::boolean(n + 1).map_err(Failure::usage)?;
            let cd = solve_cd(&h_from_flag(&poset.flag_f_vector()), DEFAULT_MAX_SOLVE_DEGREE)?;
            let algebra = MultiGradedAlgebra::boolean(n).map_err(Failure::usage)?;
            (algebra, cd)
        }
        (None, Some(text)) => {
            let h = parse_h(&text)?;
            if h.n() > args.max_n {
                return Err(Failure::Usage(format!(
                    "rank {} exceeds the budget {}; raise --max-n",
                    h.n(),
                    args.max_n
                )));
            }
            // Reference table for the graded dimensions: reconstruct the
            // face counts behind this h-vector and run the flag pipeline.
            let f = f_from_h(&h).map_err(|e| Failure::Check(e.to_string()))?;
            let flag = flag_from_face_counts(&f).map_err(|e| Failure::Check(e.to_string()))?;
            let cd = solve_cd(&h_from_flag(&flag), DEFAULT_MAX_SOLVE_DEGREE)?;
            let algebra = MultiGradedAlgebra::new(h).map_err(Failure::usage)?;
            (algebra, cd)
        }
    };

    let mut out = String::new();
    let axioms = algebra.verify_axioms();
    if !axioms.is_ok() {
        return Err(Failure::Report(format!("{axioms}\nFAIL\n")));
    }
    out.push_str("axioms: ok\n");
    for word in CdWord::words_of_degree(algebra.n()) {
        let dim = algebra.graded_dimension(&word.mdeg());
        let expected = reference.coefficient_of_word(&word);
        if dim as i64 != expected {
            return Err(Failure::Report(format!(
                "{out}dim {word} = {dim}, expected {expected}\nFAIL\n"
            )));
        }
        out.push_str(&format!("dim {word} = {dim}\n"));
    }
    let factorization = algebra.verify_unique_factorization();
    if !factorization.is_ok() {
        return Err(Failure::Report(format!("{out}{factorization}\nFAIL\n")));
    }
    out.push_str("factorization: ok\nPASS\n");
    Ok(out)
}

fn parse_start(tokens: &[String]) -> Result<FanTerm, Failure> {
    let usage = || Failure::Usage("start must be \"pi N\" or \"pi K sigma L\"".to_string());
    match tokens {
        [pi, n] if pi == "pi" => {
            let n: usize = n.parse().map_err(|_| usage())?;
            Ok(FanTerm::complete(n))
        }
        [pi, k, sigma, l] if pi == "pi" && sigma == "sigma" => {
            let k: usize = k.parse().map_err(|_| usage())?;
            let l: usize = l.parse().map_err(|_| usage())?;
            Ok(FanTerm::sigma(k, l))
        }
        _ => Err(usage()),
    }
}

fn cmd_shell(args: ShellArgs) -> Result<String, Failure> {
    let start = parse_start(&args.start)?;
    let op: OpWord = if !args.word.is_empty() && args.word.chars().all(|c| c == 'c' || c == 'd') {
        let word: CdWord = args.word.parse().map_err(Failure::usage)?;
        opword_from_cd(&word)
    } else {
        args.word.parse().map_err(Failure::usage)?
    };
    if args.trace {
        let branches = trace_eval(&op, &start).map_err(Failure::usage)?;
        let mut out = String::new();
        for branch in &branches {
            out.push_str(&format!("{branch}\n"));
        }
        out.push_str(&format!("total {}\n", branches.len()));
        Ok(out)
    } else {
        let count = eval_word(&op, &start).map_err(Failure::usage)?;
        Ok(format!("{count}\n"))
    }
}

fn cmd_check(args: CheckArgs) -> Result<String, Failure> {
    let table = CdPolynomial::from_text(&read_file(&args.path)?).map_err(Failure::usage)?;
    if args.inequalities {
        let split = check_inequalities(&table);
        let product = check_product_inequality(&table);
        if split.is_empty() && product.is_empty() {
            return Ok("split inequalities: ok\nunit product inequality: ok\n".to_string());
        }
        let mut out = String::new();
        for v in &split {
            out.push_str(&format!("split: {v}\n"));
        }
        for v in &product {
            out.push_str(&format!("product: {v}\n"));
        }
        return Err(Failure::Report(out));
    }
    let budget = SearchBudget {
        max_vertices: args.max_vertices,
        max_nodes: args.budget,
    };
    match realizable_as_colored_complex(&table, &budget).map_err(Failure::usage)? {
        Realizability::Realizable(witness) => Ok(format!("realizable\n{witness}")),
        Realizability::Unrealizable => Err(Failure::Report("none\n".to_string())),
        Realizability::Exhausted => Err(Failure::Report("exhausted\n".to_string())),
    }
}
