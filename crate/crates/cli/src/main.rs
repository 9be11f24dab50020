//! `spherecert` command-line front end.
//!
//! Exit codes: 0 success or true, 1 well-formed but unrealizable or false,
//! 2 invalid input or usage, 3 internal error.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use spherecert::dualtree::{enumerate_labeled_trees, NumberedTree};
use spherecert::meshlab::{build_diagonal_scene, obj_string, summarize_scene};
use spherecert::oracle::{self, enumerate_tree_like, SweepReport};
use spherecert::pair_engine::pair_failure;
use spherecert::sketch::{build_sketch, pair_sketches};
use spherecert::triple_engine::{lemma2_split, triple_failure};
use spherecert::{
    realize_pair, realize_triple, verify_pair_certificate, verify_triple_certificate, DegreeSequence, Error, Exec,
    PairCertificate, TripleCertificate,
};

#[derive(Parser)]
#[command(name = "spherecert", version, about = "Intersection patterns of embedded spheres")]
struct Cli {
    /// Print nothing; only the exit code reports the result.
    #[arg(long, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a pattern is realizable.
    Check {
        #[command(subcommand)]
        what: Pattern,
    },
    /// Build a certificate for a realizable pattern.
    Realize {
        #[command(subcommand)]
        what: RealizeTarget,
    },
    /// Split a descending tree-like sequence into two tree-like halves.
    Split {
        #[arg(long)]
        x: String,
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
    },
    /// Nested-circle sketch of one sequence, or of a pair.
    Sketch {
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: Option<String>,
        /// Move unit entries to the end first.
        #[arg(long)]
        normalize: bool,
        /// Write an SVG drawing of the (first) sketch.
        #[arg(long, value_name = "FILE")]
        svg: Option<PathBuf>,
    },
    /// Exact rectilinear meshes realizing the pair (x, x).
    Mesh {
        #[arg(long)]
        x: String,
        #[arg(long, num_args = 2, value_names = ["F_OBJ", "G_OBJ"])]
        out: Option<Vec<PathBuf>>,
    },
    /// List tree-like sequences of a length, or labeled trees of a sequence.
    Enumerate(EnumerateArgs),
    /// Re-check a pair or triple certificate stored as JSON.
    Verify {
        #[arg(long, value_name = "FILE")]
        cert: PathBuf,
    },
    /// Run an exhaustive cross-check.
    Sweep {
        #[arg(long, value_enum)]
        kind: SweepKind,
        #[arg(long)]
        n_max: usize,
        /// Run on the calling thread only.
        #[arg(long)]
        sequential: bool,
    },
}

#[derive(Subcommand)]
enum Pattern {
    Pair(PairArgs),
    Triple(TripleArgs),
}

#[derive(Subcommand)]
enum RealizeTarget {
    Pair {
        #[command(flatten)]
        seqs: PairArgs,
        /// Write Graphviz files for both dual trees.
        #[arg(long, num_args = 2, value_names = ["F_DOT", "G_DOT"])]
        dot: Option<Vec<PathBuf>>,
    },
    Triple(TripleArgs),
}

/// Sequences are comma-separated integers, or `@file.json` holding an array.
#[derive(Args)]
struct PairArgs {
    #[arg(long)]
    x: String,
    #[arg(long)]
    y: String,
}

#[derive(Args)]
struct TripleArgs {
    #[arg(long)]
    x1: String,
    #[arg(long)]
    x2: String,
    #[arg(long)]
    x3: String,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct EnumerateArgs {
    /// Every tree-like sequence of this length.
    #[arg(long)]
    n: Option<usize>,
    /// Every labeled tree with these degrees.
    #[arg(long)]
    x: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum SweepKind {
    Pairs,
    Decision,
    Triples,
    Lemma1,
    Lemma2,
    Sketch,
    Prufer,
    Mesh,
}

/// What a command produced: JSON for stdout and whether it counts as success.
struct Outcome {
    json: String,
    ok: bool,
}

impl Outcome {
    fn new(value: &impl Serialize, ok: bool) -> Self {
        Self { json: serde_json::to_string(value).expect("serializable"), ok }
    }
}

#[derive(Serialize)]
struct Decision<'a> {
    realizable: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    failed: Option<&'a str>,
}

#[derive(Serialize)]
struct Verification<'a> {
    kind: &'a str,
    valid: bool,
    problems: Vec<String>,
}

#[derive(Serialize)]
struct TreeListing {
    x: DegreeSequence,
    count: Option<u128>,
    trees: Vec<NumberedTree>,
}

fn parse_seq(arg: &str) -> Result<DegreeSequence, Error> {
    match arg.strip_prefix('@') {
        Some(path) => {
            let text = read(Path::new(path))?;
            serde_json::from_str(&text).map_err(|e| Error::InvalidInput(format!("{path}: {e}")))
        }
        None => DegreeSequence::parse_csv(arg),
    }
}

fn read(path: &Path) -> Result<String, Error> {
    fs::read_to_string(path).map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Error> {
    fs::write(path, text).map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))
}

fn unrealizable(failed: &str) -> Outcome {
    Outcome::new(&Decision { realizable: false, failed: Some(failed) }, false)
}

fn check_pair(a: &PairArgs) -> Result<Outcome, Error> {
    let (x, y) = (parse_seq(&a.x)?, parse_seq(&a.y)?);
    Ok(match pair_failure(&x, &y) {
        None => Outcome::new(&Decision { realizable: true, failed: None }, true),
        Some(f) => unrealizable(f.as_str()),
    })
}

fn triple_seqs(a: &TripleArgs) -> Result<[DegreeSequence; 3], Error> {
    Ok([parse_seq(&a.x1)?, parse_seq(&a.x2)?, parse_seq(&a.x3)?])
}

fn check_triple(a: &TripleArgs) -> Result<Outcome, Error> {
    let xs = triple_seqs(a)?;
    Ok(match triple_failure([&xs[0], &xs[1], &xs[2]]) {
        None => Outcome::new(&Decision { realizable: true, failed: None }, true),
        Some(f) => unrealizable(f.as_str()),
    })
}

fn realize(target: &RealizeTarget) -> Result<Outcome, Error> {
    match target {
        RealizeTarget::Pair { seqs, dot } => {
            let (x, y) = (parse_seq(&seqs.x)?, parse_seq(&seqs.y)?);
            if let Some(f) = pair_failure(&x, &y) {
                return Ok(unrealizable(f.as_str()));
            }
            let cert = realize_pair(&x, &y)?;
            if let Some(paths) = dot {
                let (f, g) = cert.to_dot()?;
                write(&paths[0], &f)?;
                write(&paths[1], &g)?;
            }
            Ok(Outcome::new(&cert, true))
        }
        RealizeTarget::Triple(a) => {
            let xs = triple_seqs(a)?;
            if let Some(f) = triple_failure([&xs[0], &xs[1], &xs[2]]) {
                return Ok(unrealizable(f.as_str()));
            }
            Ok(Outcome::new(&realize_triple(&xs[0], &xs[1], &xs[2])?, true))
        }
    }
}

fn sketch(x: &str, y: Option<&str>, normalize: bool, svg: Option<&Path>) -> Result<Outcome, Error> {
    let prepare = |s: &str| -> Result<DegreeSequence, Error> {
        let seq = parse_seq(s)?;
        Ok(if normalize { seq.normalize_units_last().0 } else { seq })
    };
    let x = prepare(x)?;
    let y = y.map(prepare).transpose()?;
    for s in std::iter::once(&x).chain(&y) {
        if !s.is_tree_like() {
            return Ok(unrealizable("not_tree_like"));
        }
    }
    let first = build_sketch(&x)?;
    if let Some(path) = svg {
        write(path, &first.to_svg())?;
    }
    Ok(match y {
        Some(y) => Outcome::new(&pair_sketches(&x, &y)?, true),
        None => Outcome::new(&first, true),
    })
}

fn mesh(x: &str, out: Option<&[PathBuf]>) -> Result<Outcome, Error> {
    let x = parse_seq(x)?;
    if !x.is_tree_like() {
        return Ok(unrealizable("not_tree_like"));
    }
    let scene = build_diagonal_scene(&x)?;
    if let Some(paths) = out {
        write(&paths[0], &obj_string(&scene.mesh_f))?;
        write(&paths[1], &obj_string(&scene.mesh_g))?;
    }
    let summary = summarize_scene(&scene);
    let ok = summary.valid;
    Ok(Outcome::new(&summary, ok))
}

fn enumerate(a: &EnumerateArgs) -> Result<Outcome, Error> {
    if let Some(n) = a.n {
        let all: Vec<DegreeSequence> = enumerate_tree_like(n).collect();
        let ok = !all.is_empty();
        return Ok(Outcome::new(&all, ok));
    }
    let x = parse_seq(a.x.as_deref().expect("clap enforces one of --n, --x"))?;
    let labeled = enumerate_labeled_trees(&x);
    let count = labeled.total();
    let trees: Vec<NumberedTree> = labeled.map(|t| NumberedTree::new(&t, &t.regions)).collect();
    let ok = !trees.is_empty();
    Ok(Outcome::new(&TreeListing { x, count, trees }, ok))
}

fn verify(path: &Path) -> Result<Outcome, Error> {
    let text = read(path)?;
    let value: serde_json::Value =
        serde_json::from_str(&text).map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))?;
    let bad_shape = |e: serde_json::Error| Error::InvalidInput(format!("malformed certificate: {e}"));
    let (kind, verdict) = if value.get("tree_s").is_some() {
        let cert: PairCertificate = serde_json::from_value(value).map_err(bad_shape)?;
        ("pair", verify_pair_certificate(&cert, &cert.x, &cert.y))
    } else if value.get("pairs").is_some() {
        let cert: TripleCertificate = serde_json::from_value(value).map_err(bad_shape)?;
        let [a, b, c] = &cert.x;
        ("triple", verify_triple_certificate(&cert, a, b, c))
    } else {
        return Err(Error::InvalidInput("neither a pair nor a triple certificate".into()));
    };
    let valid = verdict.is_valid();
    Ok(Outcome::new(&Verification { kind, valid, problems: verdict.problems }, valid))
}

fn sweep(kind: SweepKind, n_max: usize, sequential: bool) -> Outcome {
    let exec = if sequential { Exec::Sequential } else { Exec::Parallel };
    let report: SweepReport = match kind {
        SweepKind::Pairs => oracle::cross_check_pairs(n_max, exec),
        SweepKind::Decision => oracle::cross_check_pair_decision(n_max, 2 * n_max as i64, exec),
        SweepKind::Triples => oracle::cross_check_triples(n_max, exec),
        SweepKind::Lemma1 => oracle::sweep_lemma1(n_max, exec),
        SweepKind::Lemma2 => oracle::sweep_lemma2(n_max, exec),
        SweepKind::Sketch => oracle::sweep_sketch(n_max, exec),
        SweepKind::Prufer => oracle::sweep_prufer(n_max, exec),
        SweepKind::Mesh => oracle::sweep_mesh(n_max, exec),
    };
    let ok = report.passed();
    Outcome::new(&report, ok)
}

fn run(cli: &Cli) -> Result<Outcome, Error> {
    match &cli.command {
        Command::Check { what: Pattern::Pair(a) } => check_pair(a),
        Command::Check { what: Pattern::Triple(a) } => check_triple(a),
        Command::Realize { what } => realize(what),
        Command::Split { x, p, q } => Ok(Outcome::new(&lemma2_split(&parse_seq(x)?, *p, *q)?, true)),
        Command::Sketch { x, y, normalize, svg } => sketch(x, y.as_deref(), *normalize, svg.as_deref()),
        Command::Mesh { x, out } => mesh(x, out.as_deref()),
        Command::Enumerate(a) => enumerate(a),
        Command::Verify { cert } => verify(cert),
        Command::Sweep { kind, n_max, sequential } => Ok(sweep(*kind, *n_max, *sequential)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            if !cli.quiet {
                println!("{}", out.json);
            }
            ExitCode::from(if out.ok { 0 } else { 1 })
        }
        Err(e) => {
            if !cli.quiet {
                eprintln!("error: {e}");
            }
            ExitCode::from(match e {
                Error::Unrealizable(_) => 1,
                Error::Internal(_) => 3,
                _ => 2,
            })
        }
    }
}
