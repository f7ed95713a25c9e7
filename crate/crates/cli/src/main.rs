use std::fmt::Display;
use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use nccsp::bijections::{
    enumerate_quadrangulations, fold_d, fold_diameter, has_central_polygon, quad_to_tree, tree_to_quad, unfold_d,
    unfold_diameter,
};
use nccsp::formulas::family_qpoly;
use nccsp::harness::{verify_family, verify_identities, FamilyKind};
use nccsp::ncgraph::{count_fixed, enumerate, enumerate_fixed, enumerate_graphs, Family, NcObject};

#[derive(Parser)]
#[command(name = "nc", version, about = "Cyclic sieving checks for non-crossing graph families")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct FamilyArgs {
    /// connected, tree, forest, dissection, partition or graph
    #[arg(long)]
    family: FamilyKind,
    #[arg(long)]
    n: usize,
    /// Edges (diagonals for dissections)
    #[arg(long)]
    k: Option<usize>,
    /// Components, for forests
    #[arg(long)]
    c: Option<usize>,
    /// Blocks, for partitions
    #[arg(long)]
    b: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Number of family members
    Count(FamilyArgs),
    /// List family members, one per line
    Enumerate {
        #[command(flatten)]
        family: FamilyArgs,
        /// Only members fixed by the rotation of this order
        #[arg(long)]
        fixed_d: Option<usize>,
        #[arg(long, value_enum, default_value = "edges")]
        format: Format,
    },
    /// Coefficients of the q-analogue, lowest degree first
    Qpoly(FamilyArgs),
    Csp {
        #[command(subcommand)]
        action: CspAction,
    },
    Series {
        #[command(subcommand)]
        action: SeriesAction,
    },
    /// Run a bijection over every object of the given size
    Bijection {
        #[arg(long, value_enum)]
        which: Which,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: Option<usize>,
        /// Check that the inverse map recovers every input
        #[arg(long)]
        roundtrip: bool,
    },
}

#[derive(Subcommand)]
enum CspAction {
    /// Compare root-of-unity values with fixed-point counts
    Verify {
        #[arg(long)]
        family: FamilyKind,
        #[arg(long)]
        max_n: usize,
        /// Write the JSON report here
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum SeriesAction {
    /// Check the generating-function identities and recurrences
    Verify {
        #[arg(long)]
        order: usize,
        /// Largest size for the enumeration-backed checks
        #[arg(long, default_value_t = 7)]
        max_n: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Edges,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    TreeQuad,
    Fold2,
    FoldD,
}

/// Print a line, exiting quietly when the reader has gone away.
fn emit(line: impl Display) {
    if let Err(e) = writeln!(io::stdout().lock(), "{line}") {
        if e.kind() == io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        panic!("cannot write to stdout: {e}");
    }
}

macro_rules! out {
    ($($arg:tt)*) => {
        emit(format_args!($($arg)*))
    };
}

struct UsageError(String);

fn usage(msg: impl Into<String>) -> UsageError {
    UsageError(msg.into())
}

/// The concrete family and its `k`.
fn resolve(args: &FamilyArgs) -> Result<(Family, usize), UsageError> {
    let n = args.n;
    let need_k = || args.k.ok_or_else(|| usage(format!("--k is required for --family {}", args.family)));
    Ok(match args.family {
        FamilyKind::Connected => (Family::Connected, need_k()?),
        FamilyKind::Dissection => (Family::Dissection, need_k()?),
        FamilyKind::Graph => (Family::AnyGraph, need_k()?),
        FamilyKind::Tree => (Family::Tree, n.saturating_sub(1)),
        FamilyKind::Forest => {
            let c = args.c.ok_or_else(|| usage("--c is required for --family forest"))?;
            (Family::Forest(c), n.saturating_sub(c))
        }
        FamilyKind::Partition => {
            let b = args.b.ok_or_else(|| usage("--b is required for --family partition"))?;
            (Family::Partition(b), n.saturating_sub(b))
        }
    })
}

fn run(cli: Cli) -> Result<ExitCode, UsageError> {
    match cli.command {
        Command::Count(args) => {
            let (family, k) = resolve(&args)?;
            let v = count_fixed(args.n, k, 1, family).map_err(|e| usage(e.to_string()))?;
            out!("{v}");
        }
        Command::Enumerate { family: args, fixed_d, format } => {
            let (family, k) = resolve(&args)?;
            let n = args.n;
            let objects: Box<dyn Iterator<Item = NcObject>> = match fixed_d {
                None => enumerate(n, k, family),
                Some(d) => {
                    if d == 0 || n % d != 0 {
                        return Err(usage(format!("--fixed-d {d} must divide --n {n}")));
                    }
                    let step = (n / d) as i64;
                    match family {
                        Family::Partition(_) => Box::new(enumerate(n, k, family).filter(move |o| o.rotate(step) == *o)),
                        _ => Box::new(
                            enumerate_fixed(n, k, d, family)
                                .map_err(|e| usage(e.to_string()))?
                                .into_iter()
                                .map(NcObject::Graph),
                        ),
                    }
                }
            };
            for o in objects {
                match format {
                    Format::Edges => out!("{o}"),
                    Format::Json => out!("{}", serde_json::to_string(&o).expect("serializable")),
                }
            }
        }
        Command::Qpoly(args) => {
            let (family, k) = resolve(&args)?;
            let f = family_qpoly(family, args.n, k);
            match &f.quotient {
                Some(p) => {
                    let coeffs: Vec<String> = p.coeffs().iter().map(ToString::to_string).collect();
                    out!("{}", if coeffs.is_empty() { "0".to_string() } else { coeffs.join(" ") });
                }
                None => {
                    eprintln!("{} is not a polynomial: ({}) / ({})", f.name, f.numerator, f.denominator);
                    return Ok(ExitCode::from(1));
                }
            }
        }
        Command::Csp { action: CspAction::Verify { family, max_n, json } } => {
            let report = verify_family(family, max_n);
            for c in &report.cells {
                out!("{family} {c}");
            }
            out!(
                "{family}: {} pass, {} fail ({} proved failures)",
                report.summary.pass,
                report.summary.fail,
                report.proved_failures()
            );
            if let Some(path) = json {
                fs::write(&path, report.to_json() + "\n")
                    .map_err(|e| usage(format!("cannot write {}: {e}", path.display())))?;
            }
            return Ok(ExitCode::from(report.exit_code() as u8));
        }
        Command::Series { action: SeriesAction::Verify { order, max_n } } => {
            if order < 2 {
                return Err(usage("--order must be at least 2"));
            }
            let report = verify_identities(max_n, order);
            for c in &report.checks {
                let status = if c.ok() { "pass" } else { "FAIL" };
                out!("{status} {} ({} comparisons)", c.name, c.checked);
                for f in c.failures.iter().take(5) {
                    out!("    {f}");
                }
            }
            return Ok(ExitCode::from(u8::from(!report.ok())));
        }
        Command::Bijection { which, n, d, roundtrip } => return bijection(which, n, d, roundtrip),
    }
    Ok(ExitCode::SUCCESS)
}

fn bijection(which: Which, n: usize, d: Option<usize>, roundtrip: bool) -> Result<ExitCode, UsageError> {
    let mut total = 0;
    let mut failures = 0;
    let mut report = |line: String, ok: bool| {
        total += 1;
        if !ok {
            failures += 1;
        }
        if !roundtrip || !ok {
            out!("{line}");
        }
    };
    match which {
        Which::TreeQuad => {
            if n < 2 {
                return Err(usage("--n must be at least 2"));
            }
            for t in enumerate_graphs(n, n - 1, Family::Tree) {
                match tree_to_quad(&t) {
                    Ok(q) => {
                        let ok = !roundtrip || quad_to_tree(&q).as_ref() == Ok(&t);
                        report(format!("{t} -> {q}"), ok);
                    }
                    Err(e) => report(format!("{t}: {e}"), false),
                }
            }
            if roundtrip {
                for q in enumerate_quadrangulations(2 * n) {
                    let ok = quad_to_tree(&q).and_then(|t| tree_to_quad(&t)).as_ref() == Ok(&q);
                    report(format!("{q} does not round-trip"), ok);
                }
            }
        }
        Which::Fold2 => {
            if n % 2 != 0 {
                return Err(usage("--n must be even"));
            }
            for k in (n.saturating_sub(1)..=(2 * n).saturating_sub(3)).filter(|k| k % 2 == 1) {
                for g in enumerate_fixed(n, k, 2, Family::Connected).map_err(|e| usage(e.to_string()))? {
                    match fold_diameter(&g) {
                        Ok(h) => {
                            let ok = !roundtrip || unfold_diameter(&h).is_ok_and(|u| u.rotate(-((n / 2) as i64)) == u && u.edge_count() == k);
                            report(format!("{g} -> {h}"), ok);
                        }
                        Err(e) => report(format!("{g}: {e}"), false),
                    }
                }
            }
        }
        Which::FoldD => {
            let d = d.ok_or_else(|| usage("--d is required for fold-d"))?;
            if d < 3 || n % d != 0 {
                return Err(usage("--d must be at least 3 and divide --n"));
            }
            for k in (n - 1..=2 * n - 3).filter(|k| k % d == 0) {
                for g in enumerate_fixed(n, k, d, Family::Connected).map_err(|e| usage(e.to_string()))? {
                    if has_central_polygon(&g, d) {
                        continue;
                    }
                    match fold_d(&g, d) {
                        Ok(h) => {
                            let ok = !roundtrip || unfold_d(&h, d).as_ref() == Ok(&g);
                            report(format!("{g} -> {h}"), ok);
                        }
                        Err(e) => report(format!("{g}: {e}"), false),
                    }
                }
            }
        }
    }
    if roundtrip {
        out!("{total} checked, {failures} failed");
    }
    Ok(ExitCode::from(u8::from(failures > 0)))
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
