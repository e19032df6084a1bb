//! Command-line front end for exact quaternion polynomial interpolation.
//!
//! Subcommands wrap the library pipeline: `solve` reduces a problem file
//! and prints the solution family, `verify` checks a polynomial file
//! against every condition, `reduce` prints the normal form with the
//! provenance of removed conditions, `minpoly` builds minimal
//! polynomials of a node list, `sylvester` classifies the solutions of
//! a·q - q·b = delta, and `eval` evaluates a polynomial file at a point.
//!
//! # Exit codes
//!
//! Exit codes are the machine interface:
//!
//! - 0: success, including "no solution" answers to well-posed queries
//! - 1: usage, I/O, or parse errors
//! - 2: inconsistent data: a reduction witness, a failed verification,
//!   or an infeasible constraint
//!
//! Output is deterministic: identical invocations print identical bytes.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use quatpoly::consistency::{reduce, Removal};
use quatpoly::rat::rat;
use quatpoly::{conjclass, lagrange, newton, sylvester};
use quatpoly::{NodeSet, QPoly, Quat, Rat, RawProblem, SylvesterSolution};
use quatpoly_cli::format;
use serde_json::Value;

#[derive(Parser)]
#[command(
    name = "quatpoly",
    version,
    about = "Exact Lagrange interpolation in the quaternion polynomial ring"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve an interpolation problem file and print the solution family.
    Solve(SolveArgs),
    /// Check a polynomial file against every condition of a problem file.
    Verify {
        /// Problem file with "left" and "right" condition lists.
        problem: PathBuf,
        /// Polynomial file, a coefficient list in ascending degree.
        poly: PathBuf,
    },
    /// Reduce a problem file to normal form and report what was removed.
    Reduce {
        /// Problem file with "left" and "right" condition lists.
        problem: PathBuf,
    },
    /// Minimal polynomial of a node list, with its factored form.
    Minpoly {
        /// Which side the polynomial annihilates the nodes from.
        #[arg(long, value_enum)]
        side: CliSide,
        /// JSON list of quaternion literals, such as [[0,1,0,0],[0,0,1,0]].
        nodes: String,
    },
    /// Classify the solutions q of a·q - q·b = delta.
    Sylvester {
        /// Quaternion a in display form, such as "i" or "1/2-k".
        a: String,
        /// Quaternion b in display form.
        b: String,
        /// Right-hand side delta in display form.
        delta: String,
    },
    /// Evaluate a polynomial file at a point.
    Eval {
        /// Substitute the point to the left or to the right of the coefficients.
        #[arg(long, value_enum)]
        side: CliSide,
        /// Polynomial file, a coefficient list in ascending degree.
        poly: PathBuf,
        /// Evaluation point in display form, such as "i" or "1+j".
        point: String,
    },
}

#[derive(Args)]
struct SolveArgs {
    /// Problem file with "left" and "right" condition lists.
    problem: PathBuf,
    /// Interpolation scheme; all three print identical polynomials.
    #[arg(long, value_enum, default_value_t = Method::Lagrange)]
    method: Method,
    /// Plane coordinates "s:u,v" for pair s when instantiating a solution.
    #[arg(long = "mu", value_name = "S:U,V")]
    mu: Vec<String>,
    /// Free polynomial file for the two-sided ideal term when instantiating.
    #[arg(long, value_name = "FILE")]
    h: Option<PathBuf>,
    /// Constraint "s:q" picking the pair-s plane member with backshift value q.
    #[arg(long = "constraint", value_name = "S:Q")]
    constraint: Vec<String>,
    /// Print the solution as JSON instead of the text report.
    #[arg(long)]
    json: bool,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Method {
    Lagrange,
    Newton,
    Vandermonde,
}

impl Method {
    fn name(self) -> &'static str {
        match self {
            Method::Lagrange => "lagrange",
            Method::Newton => "newton",
            Method::Vandermonde => "vandermonde",
        }
    }
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum CliSide {
    Left,
    Right,
}

/// A finished command: the report for stdout and the exit code.
struct Outcome {
    report: String,
    code: u8,
}

/// A failed command: the message for stderr, classified by exit code.
enum Failure {
    /// Usage, I/O, or parse problems: exit 1.
    Usage(String),
    /// Inconsistent or infeasible data: exit 2.
    Data(String),
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{}", e.render());
                return ExitCode::SUCCESS;
            }
            eprint!("{}", e.render());
            return ExitCode::from(1);
        }
    };
    match run(cli) {
        Ok(Outcome { report, code }) => {
            print!("{}", report);
            ExitCode::from(code)
        }
        Err(failure) => {
            let (message, code) = match failure {
                Failure::Usage(m) => (m, 1),
                Failure::Data(m) => (m, 2),
            };
            eprintln!("error: {}", message);
            ExitCode::from(code)
        }
    }
}

fn run(cli: Cli) -> Result<Outcome, Failure> {
    match cli.command {
        Command::Solve(args) => cmd_solve(args),
        Command::Verify { problem, poly } => cmd_verify(&problem, &poly),
        Command::Reduce { problem } => cmd_reduce(&problem),
        Command::Minpoly { side, nodes } => cmd_minpoly(side, &nodes),
        Command::Sylvester { a, b, delta } => cmd_sylvester(&a, &b, &delta),
        Command::Eval { side, poly, point } => cmd_eval(side, &poly, &point),
    }
}

// ---- Shared plumbing ----

fn read_file(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {}", path.display(), e)))
}

fn load_problem(path: &Path) -> Result<RawProblem, Failure> {
    let text = read_file(path)?;
    format::problem_from_json(&text)
        .map_err(|e| Failure::Usage(format!("{}: {}", path.display(), e)))
}

fn load_poly(path: &Path) -> Result<QPoly, Failure> {
    let text = read_file(path)?;
    format::poly_file(&text).map_err(|e| Failure::Usage(format!("{}: {}", path.display(), e)))
}

fn parse_quat_arg(name: &str, text: &str) -> Result<Quat, Failure> {
    format::quat_from_text(text).map_err(|e| Failure::Usage(format!("{}: {}", name, e)))
}

fn plural(n: usize, one: &str, many: &str) -> String {
    format!("{} {}", n, if n == 1 { one } else { many })
}

/// Appends the reduction provenance block: every condition the reduction
/// discharged, with its justification.
fn provenance(removals: &[Removal], out: &mut String) {
    if removals.is_empty() {
        out.push_str("reduction: no conditions removed\n");
        return;
    }
    writeln!(
        out,
        "reduction: {} removed",
        plural(removals.len(), "condition", "conditions")
    )
    .unwrap();
    for removal in removals {
        match removal {
            Removal::Transferred { side, node, value, anchor_side, anchors } => writeln!(
                out,
                "  removed {} condition at {} (value {}): redundant against the {} anchors at {} and {}",
                side, node, value, anchor_side, anchors.0, anchors.1
            )
            .unwrap(),
            Removal::MergedRealDuplicate { node, value } => writeln!(
                out,
                "  merged right condition at real node {} (value {}) into its left twin",
                node, value
            )
            .unwrap(),
        }
    }
}

// ---- solve ----

fn cmd_solve(args: SolveArgs) -> Result<Outcome, Failure> {
    let raw = load_problem(&args.problem)?;
    let reduced = reduce(&raw).map_err(|e| Failure::Data(e.to_string()))?;
    let k = reduced.pair_count();

    if !args.constraint.is_empty() && !args.mu.is_empty() {
        return Err(Failure::Usage(
            "--constraint fixes every plane parameter and cannot be combined with --mu".into(),
        ));
    }
    if args.method != Method::Lagrange && k > 0 {
        return Err(Failure::Usage(format!(
            "--method {} needs a pair-free problem; this one reduces to {}",
            args.method.name(),
            plural(k, "pair", "pairs"),
        )));
    }

    let constraints = parse_constraints(&args.constraint, k)?;
    let (mut family, folded) = match &constraints {
        Some(q) => {
            let (family, mus) =
                lagrange::solve_constrained(&reduced, q).map_err(|e| Failure::Data(e.to_string()))?;
            (family, Some(mus))
        }
        None => (
            lagrange::solve(&reduced).expect("a reduced problem always solves"),
            None,
        ),
    };
    match args.method {
        Method::Lagrange => {}
        Method::Newton => family.particular = newton::two_sided_newton(&reduced),
        Method::Vandermonde => family.particular = newton::two_sided_vandermonde(&reduced),
    }

    let instantiating = folded.is_some() || !args.mu.is_empty() || args.h.is_some();
    let instantiated = if instantiating {
        // A constrained family has its planes folded in, so no coordinates.
        let coords = if folded.is_some() {
            Vec::new()
        } else {
            parse_mus(&args.mu, k)?
        };
        let h = match &args.h {
            Some(path) => load_poly(path)?,
            None => QPoly::zero(),
        };
        Some(
            family
                .instantiate(&coords, &h)
                .expect("coordinate count matches the planes"),
        )
    } else {
        None
    };

    if args.json {
        let mut root = format::solution_json(&family);
        let obj = root.as_object_mut().expect("solutions serialize as objects");
        if let Some(mus) = &folded {
            obj.insert(
                "mu".into(),
                Value::Array(mus.iter().map(format::quat_json).collect()),
            );
        }
        if let Some(g) = &instantiated {
            obj.insert("instantiated".into(), format::poly_json(g));
        }
        let report = serde_json::to_string_pretty(&root).expect("JSON trees serialize") + "\n";
        return Ok(Outcome { report, code: 0 });
    }

    let mut report = String::new();
    provenance(&reduced.removals, &mut report);
    writeln!(report, "particular: {}", family.particular).unwrap();
    for (s, term) in family.paired_terms.iter().enumerate() {
        writeln!(report, "pair {}: plane {}", s, term.plane).unwrap();
        writeln!(report, "  left factor: {}", term.left_factor).unwrap();
        writeln!(report, "  right factor: {}", term.right_factor).unwrap();
    }
    writeln!(report, "ideal left: {}", family.ideal_left).unwrap();
    writeln!(report, "ideal right: {}", family.ideal_right).unwrap();
    if let Some(mus) = &folded {
        for (s, mu) in mus.iter().enumerate() {
            writeln!(report, "mu {}: {}", s, mu).unwrap();
        }
    }
    if let Some(g) = &instantiated {
        writeln!(report, "instantiated: {}", g).unwrap();
    }
    Ok(Outcome { report, code: 0 })
}

fn parse_mus(specs: &[String], pairs: usize) -> Result<Vec<(Rat, Rat)>, Failure> {
    let mut coords = vec![(rat(0, 1), rat(0, 1)); pairs];
    let mut seen = vec![false; pairs];
    for spec in specs {
        let bad = |msg: String| Failure::Usage(format!("--mu '{}': {}", spec, msg));
        let (idx, rest) = spec
            .split_once(':')
            .ok_or_else(|| bad("expected \"s:u,v\" with a pair index and two rationals".into()))?;
        let s: usize = idx
            .trim()
            .parse()
            .map_err(|_| bad(format!("malformed pair index '{}'", idx)))?;
        if s >= pairs {
            return Err(bad(format!(
                "pair index {} out of range ({})",
                s,
                plural(pairs, "pair", "pairs")
            )));
        }
        if seen[s] {
            return Err(bad(format!("pair {} given twice", s)));
        }
        seen[s] = true;
        let (u, v) = rest
            .split_once(',')
            .ok_or_else(|| bad("expected two rationals separated by a comma".into()))?;
        let u = format::rat_from_text(u).map_err(&bad)?;
        let v = format::rat_from_text(v).map_err(&bad)?;
        coords[s] = (u, v);
    }
    Ok(coords)
}

fn parse_constraints(specs: &[String], pairs: usize) -> Result<Option<Vec<Quat>>, Failure> {
    if specs.is_empty() {
        return Ok(None);
    }
    let mut qs: Vec<Option<Quat>> = vec![None; pairs];
    for spec in specs {
        let bad = |msg: String| Failure::Usage(format!("--constraint '{}': {}", spec, msg));
        let (idx, rest) = spec
            .split_once(':')
            .ok_or_else(|| bad("expected \"s:q\" with a pair index and a quaternion".into()))?;
        let s: usize = idx
            .trim()
            .parse()
            .map_err(|_| bad(format!("malformed pair index '{}'", idx)))?;
        if s >= pairs {
            return Err(bad(format!(
                "pair index {} out of range ({})",
                s,
                plural(pairs, "pair", "pairs")
            )));
        }
        if qs[s].is_some() {
            return Err(bad(format!("pair {} given twice", s)));
        }
        qs[s] = Some(format::quat_from_text(rest).map_err(&bad)?);
    }
    let mut out = Vec::with_capacity(pairs);
    for (s, q) in qs.into_iter().enumerate() {
        out.push(q.ok_or_else(|| {
            Failure::Usage(format!("--constraint: no value for pair {}", s))
        })?);
    }
    Ok(Some(out))
}

// ---- verify ----

fn cmd_verify(problem: &Path, poly: &Path) -> Result<Outcome, Failure> {
    let raw = load_problem(problem)?;
    let f = load_poly(poly)?;
    let mut report = String::new();
    let mut all_pass = true;
    for (node, value) in raw.left() {
        let got = f.eval_left(node);
        if got == *value {
            writeln!(report, "left {}: PASS", node).unwrap();
        } else {
            all_pass = false;
            writeln!(
                report,
                "left {}: FAIL (evaluates to {}, requires {})",
                node, got, value
            )
            .unwrap();
        }
    }
    for (node, value) in raw.right() {
        let got = f.eval_right(node);
        if got == *value {
            writeln!(report, "right {}: PASS", node).unwrap();
        } else {
            all_pass = false;
            writeln!(
                report,
                "right {}: FAIL (evaluates to {}, requires {})",
                node, got, value
            )
            .unwrap();
        }
    }
    if raw.left().is_empty() && raw.right().is_empty() {
        report.push_str("no conditions\n");
    }
    Ok(Outcome {
        report,
        code: if all_pass { 0 } else { 2 },
    })
}

// ---- reduce ----

fn cmd_reduce(problem: &Path) -> Result<Outcome, Failure> {
    let raw = load_problem(problem)?;
    let reduced = reduce(&raw).map_err(|e| Failure::Data(e.to_string()))?;
    let mut report = String::new();
    provenance(&reduced.removals, &mut report);
    writeln!(
        report,
        "normal form: {}, {} left-only, {} right-only",
        plural(reduced.pair_count(), "pair", "pairs"),
        reduced.left_only.len(),
        reduced.right_only.len()
    )
    .unwrap();
    for (s, pc) in reduced.paired.iter().enumerate() {
        writeln!(
            report,
            "pair {}: left {} -> {}, right {} -> {}",
            s, pc.alpha, pc.c, pc.beta, pc.d
        )
        .unwrap();
    }
    for (node, value) in &reduced.left_only {
        writeln!(report, "left {} -> {}", node, value).unwrap();
    }
    for (node, value) in &reduced.right_only {
        writeln!(report, "right {} -> {}", node, value).unwrap();
    }
    Ok(Outcome { report, code: 0 })
}

// ---- minpoly ----

fn cmd_minpoly(side: CliSide, nodes_json: &str) -> Result<Outcome, Failure> {
    let v: Value = serde_json::from_str(nodes_json)
        .map_err(|e| Failure::Usage(format!("nodes: invalid JSON: {}", e)))?;
    let arr = v
        .as_array()
        .ok_or_else(|| Failure::Usage("nodes: expected a JSON list of quaternion literals".into()))?;
    let mut nodes = Vec::with_capacity(arr.len());
    for (s, entry) in arr.iter().enumerate() {
        nodes.push(
            format::quat_from_json(entry, &format!("nodes[{}]", s)).map_err(Failure::Usage)?,
        );
    }
    let set = NodeSet::new(nodes).map_err(|e| Failure::Usage(e.to_string()))?;
    let (mp, factors) = match side {
        CliSide::Left => (conjclass::lmp(&set), conjclass::lmp_factored(&set)),
        CliSide::Right => (conjclass::rmp(&set), conjclass::rmp_factored(&set)),
    };
    let mut report = format!("minimal polynomial: {}\n", mp);
    match factors {
        Ok(fs) if fs.is_empty() => report.push_str("factors: 1\n"),
        Ok(fs) => {
            let joined: Vec<String> = fs.iter().map(|p| format!("({})", p)).collect();
            writeln!(report, "factors: {}", joined.join("·")).unwrap();
        }
        // The minimal polynomial still exists, but the per-node linear
        // factorization does not once a class meets three nodes.
        Err(_) => report.push_str(
            "factors: not available, a conjugacy class holds three or more nodes\n",
        ),
    }
    Ok(Outcome { report, code: 0 })
}

// ---- sylvester ----

fn cmd_sylvester(a: &str, b: &str, delta: &str) -> Result<Outcome, Failure> {
    let a = parse_quat_arg("a", a)?;
    let b = parse_quat_arg("b", b)?;
    let delta = parse_quat_arg("delta", delta)?;
    let mut report = String::new();
    match sylvester::solve(&a, &b, &delta) {
        SylvesterSolution::Unique(q) => {
            report.push_str("kind: unique\n");
            writeln!(report, "solution: {}", q).unwrap();
        }
        SylvesterSolution::Affine { particular, plane } => {
            report.push_str("kind: affine plane\n");
            writeln!(report, "particular: {}", particular).unwrap();
            writeln!(report, "plane: {}", plane).unwrap();
        }
        SylvesterSolution::AllOfH => {
            report.push_str("kind: all quaternions\n");
            report.push_str("a·q - q·b vanishes identically; every q solves\n");
        }
        SylvesterSolution::Incompatible { lhs, rhs } => {
            report.push_str("kind: no solution\n");
            writeln!(
                report,
                "witness: conj(a)·delta = {} but delta·b = {}; solvability requires them equal",
                lhs, rhs
            )
            .unwrap();
        }
        SylvesterSolution::IncompatibleReal { delta } => {
            report.push_str("kind: no solution\n");
            writeln!(
                report,
                "witness: a·q - q·b vanishes identically but delta = {} is nonzero",
                delta
            )
            .unwrap();
        }
    }
    Ok(Outcome { report, code: 0 })
}

// ---- eval ----

fn cmd_eval(side: CliSide, poly: &Path, point: &str) -> Result<Outcome, Failure> {
    let f = load_poly(poly)?;
    let point = parse_quat_arg("point", point)?;
    let value = match side {
        CliSide::Left => f.eval_left(&point),
        CliSide::Right => f.eval_right(&point),
    };
    Ok(Outcome {
        report: format!("{}\n", value),
        code: 0,
    })
}
