//! The `schurkit` command line.
//!
//! Exit codes: 0 success, 1 I/O failure, 2 bad arguments, 3 size bound
//! exceeded, 4 a verification check failed.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::Serialize;
use serde_json::Value;

use crate::bases::{enumerate_gz, enumerate_paths, rank_path};
use crate::circuit::{gate_count_report, two_level_decompose};
use crate::clebsch_gordan::cg_block;
use crate::error::Error;
use crate::json::{self, CgBlockJson, GateListJson, SchurJson};
use crate::partition::{dim_p, dim_q, enumerate_partitions, Partition};
use crate::schur::{checked_dim, schur_unitary_with_limit, DEFAULT_MAX_DENSE_DIM};
use crate::verify::run_verify;
use crate::wigner::reduced_wigner_matrix;

pub const EXIT_OK: i32 = 0;
pub const EXIT_IO: i32 = 1;
pub const EXIT_ARGUMENT: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;
pub const EXIT_VERIFY: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "schurkit", version, about = "Schur transforms via Clebsch-Gordan cascades")]
struct Cli {
    /// Also write machine-readable output to FILE.
    #[arg(long, global = true, value_name = "FILE")]
    json: Option<PathBuf>,

    /// Worker threads for parallel construction.
    #[arg(long, global = true, value_name = "K")]
    threads: Option<usize>,

    /// Largest matrix dimension to materialize.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_DENSE_DIM)]
    max_dim: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Copy)]
struct Size {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    d: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// dim Q and dim P for every λ in I_{d,n}.
    Dims(Size),
    /// Partitions of n into at most d parts.
    Partitions(Size),
    /// GZ patterns of λ.
    Gz {
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        d: usize,
    },
    /// Young-Yamanouchi paths of λ with their ranks.
    Paths {
        #[arg(long)]
        lambda: Partition,
    },
    /// The d × d reduced Wigner matrix for (μ, μ'').
    Wigner {
        #[arg(long)]
        mu: Partition,
        #[arg(long = "mu-dprime")]
        mu_dprime: Partition,
        #[arg(long)]
        d: usize,
    },
    /// The CG block of λ.
    Cg {
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        d: usize,
    },
    /// The Schur unitary with its row labels.
    Schur(Size),
    /// Residual report over random (U, s) pairs.
    Verify {
        #[command(flatten)]
        size: Size,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
    },
    /// Two-level gate list for the Schur unitary (or a CG block), or the
    /// cascade's control counts.
    Circuit {
        #[command(flatten)]
        size: Size,
        /// Decompose the CG block of this λ instead of the Schur unitary.
        #[arg(long)]
        cg: Option<Partition>,
        /// Report distinct controlled rotations per cascade step.
        #[arg(long)]
        counts: bool,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
    },
}

enum Failure {
    Lib(Error),
    Io(std::io::Error),
    Verify(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

type Outcome = std::result::Result<(), Failure>;

/// Runs the command line with the process's standard streams.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with(argv, &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}

/// Runs the command line, writing to the given streams; returns the exit code.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ARGUMENT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    let mut buf: Vec<u8> = Vec::new();
    let result = with_threads(cli.threads, || dispatch(&cli, &mut buf));
    let written = out.write_all(&buf).map_err(Failure::Io);
    let result = result.and(written);
    match result {
        Ok(()) => EXIT_OK,
        Err(f) => {
            let (code, msg) = match f {
                Failure::Lib(e @ Error::Argument(_)) => (EXIT_ARGUMENT, e.to_string()),
                Failure::Lib(e @ Error::Resource { .. }) => (EXIT_RESOURCE, e.to_string()),
                Failure::Lib(e @ Error::Consistency(_)) => (EXIT_VERIFY, e.to_string()),
                Failure::Io(e) => (EXIT_IO, format!("i/o error: {e}")),
                Failure::Verify(m) => (EXIT_VERIFY, m),
            };
            let _ = writeln!(err, "schurkit: {msg}");
            code
        }
    }
}

fn with_threads(threads: Option<usize>, f: impl FnOnce() -> Outcome + Send) -> Outcome {
    match threads {
        Some(0) => Err(Error::arg("--threads must be positive").into()),
        #[cfg(feature = "parallel")]
        Some(k) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(k)
                .build()
                .map_err(|e| Error::arg(format!("cannot start {k} threads: {e}")))?;
            pool.install(f)
        }
        #[cfg(not(feature = "parallel"))]
        Some(_) => {
            log::warn!("built without the parallel feature; --threads ignored");
            f()
        }
        None => f(),
    }
}

fn check_d(d: usize) -> Result<(), Error> {
    if d == 0 {
        return Err(Error::arg("d must be positive"));
    }
    Ok(())
}

fn big(v: &BigUint) -> Value {
    match v.to_u64() {
        Some(x) => Value::from(x),
        None => Value::from(v.to_string()),
    }
}

fn write_json<T: Serialize>(path: &Option<PathBuf>, value: &T) -> Outcome {
    if let Some(path) = path {
        let text = json::to_string(value).map_err(|e| Failure::Io(e.into()))?;
        fs::write(path, text)?;
    }
    Ok(())
}

fn fmt_c(z: crate::C64) -> String {
    if z.im == 0.0 {
        format!("{:+.6}", z.re)
    } else {
        format!("({:+.6}{:+.6}i)", z.re, z.im)
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Outcome {
    match &cli.command {
        Command::Dims(Size { n, d }) => {
            check_d(*d)?;
            writeln!(out, "{:<16} {:>12} {:>12}", "lambda", "dim_Q", "dim_P")?;
            let mut rows = Vec::new();
            for lambda in enumerate_partitions(*d, *n) {
                let (q, p) = (dim_q(&lambda, *d), dim_p(&lambda));
                writeln!(out, "{:<16} {:>12} {:>12}", lambda.to_string(), q, p)?;
                rows.push(serde_json::json!({"lambda": lambda.to_string(), "dim_q": big(&q), "dim_p": big(&p)}));
            }
            write_json(&cli.json, &rows)
        }
        Command::Partitions(Size { n, d }) => {
            check_d(*d)?;
            let parts: Vec<String> = enumerate_partitions(*d, *n).iter().map(ToString::to_string).collect();
            for p in &parts {
                writeln!(out, "{p}")?;
            }
            write_json(&cli.json, &parts)
        }
        Command::Gz { lambda, d } => {
            check_d(*d)?;
            if lambda.num_parts() > *d {
                return Err(Error::arg(format!("{lambda} has more than {d} parts")).into());
            }
            let mut rows = Vec::new();
            for (k, q) in enumerate_gz(lambda, *d).iter().enumerate() {
                writeln!(out, "{:>4}  {:<24} weight {:?}", k, q.to_string(), q.weight())?;
                rows.push(serde_json::json!({"ssyt": q.to_string(), "rows": q.rows(), "weight": q.weight()}));
            }
            write_json(&cli.json, &rows)
        }
        Command::Paths { lambda } => {
            if lambda.is_empty() {
                return Err(Error::arg("λ must be nonempty").into());
            }
            let mut rows = Vec::new();
            for path in enumerate_paths(lambda) {
                let rank = rank_path(&path);
                writeln!(out, "{rank:>6}  {path}")?;
                rows.push(serde_json::json!({"rank": rank, "steps": path.steps()}));
            }
            write_json(&cli.json, &rows)
        }
        Command::Wigner { mu, mu_dprime, d } => {
            let m = reduced_wigner_matrix(mu, mu_dprime, *d)?;
            writeln!(out, "rows j = 1..{d}, columns j' = 0..{}", d - 1)?;
            for row in m.outer_iter() {
                let cells: Vec<String> = row.iter().map(|v| format!("{v:+.6}")).collect();
                writeln!(out, "{}", cells.join(" "))?;
            }
            write_json(
                &cli.json,
                &serde_json::json!({"mu": mu.to_string(), "mu_dprime": mu_dprime.to_string(), "d": d, "matrix": json::real_matrix(&m)}),
            )
        }
        Command::Cg { lambda, d } => {
            check_d(*d)?;
            let size = dim_q(lambda, *d) * BigUint::from(*d);
            let required = size.to_u128().unwrap_or(u128::MAX);
            if required > cli.max_dim as u128 {
                return Err(Error::Resource {
                    what: "CG block".into(),
                    required,
                    limit: cli.max_dim as u128,
                }
                .into());
            }
            let b = cg_block(lambda, *d)?;
            writeln!(out, "lambda {} d {} dim {}", b.lambda, b.d, b.dim())?;
            for (j, start, len) in b.output_blocks() {
                writeln!(out, "  j={j} -> {} rows {start}..{}", b.rows[start].pattern.top(), start + len)?;
            }
            writeln!(out, "unitarity residual {:.3e}", b.unitarity_residual())?;
            write_json(&cli.json, &CgBlockJson::from(&b))
        }
        Command::Schur(Size { n, d }) => {
            let s = schur_unitary_with_limit(*n, *d, cli.max_dim)?;
            let width = s.n;
            for (r, label) in s.labels.iter().enumerate() {
                let terms: Vec<String> = s
                    .matrix
                    .row(r)
                    .iter()
                    .enumerate()
                    .filter(|(_, z)| z.norm() > 1e-12)
                    .map(|(x, z)| format!("{}|{}⟩", fmt_c(*z), ket(x, width, s.d)))
                    .collect();
                writeln!(out, "{label} : {}", terms.join(" "))?;
            }
            write_json(&cli.json, &SchurJson::from(&s))
        }
        Command::Verify { size, trials, seed, tol } => {
            checked_dim(size.n, size.d, cli.max_dim, "verification")?;
            let report = run_verify(size.n, size.d, *trials, *seed)?;
            writeln!(out, "{report}")?;
            write_json(&cli.json, &report)?;
            if report.passes(*tol) {
                writeln!(out, "PASS (tol {tol:e})")?;
                Ok(())
            } else {
                Err(Failure::Verify(format!(
                    "residual {:.3e} exceeds tolerance {tol:e}",
                    report.max_residual()
                )))
            }
        }
        Command::Circuit { size, cg, counts, tol } => {
            if *counts {
                let r = gate_count_report(size.n, size.d)?;
                writeln!(out, "{:>4} {:>12} {:>14}", "k", "rotation", "control pairs")?;
                for s in &r.steps {
                    writeln!(out, "{:>4} {:>12} {:>14}", s.k, format!("{0}x{0}", s.rotation_dim), s.control_pairs)?;
                }
                writeln!(out, "distinct control pairs: {}", r.distinct_control_pairs)?;
                return write_json(&cli.json, &r);
            }
            let u = match cg {
                Some(lambda) => {
                    check_d(size.d)?;
                    let dim = dim_q(lambda, size.d) * BigUint::from(size.d);
                    let required = dim.to_u128().unwrap_or(u128::MAX);
                    if required > cli.max_dim as u128 {
                        return Err(Error::Resource {
                            what: "CG block".into(),
                            required,
                            limit: cli.max_dim as u128,
                        }
                        .into());
                    }
                    cg_block(lambda, size.d)?.matrix
                }
                None => schur_unitary_with_limit(size.n, size.d, cli.max_dim)?.matrix,
            };
            let gates = two_level_decompose(&u, *tol)?;
            let residual = gates.reconstruction_residual(&u);
            writeln!(out, "size {}", gates.size)?;
            writeln!(out, "rotations {} (bound {})", gates.rotations(), gates.size * (gates.size - 1) / 2)?;
            writeln!(out, "phases {}", gates.phases())?;
            writeln!(out, "reconstruction residual {residual:.3e}")?;
            write_json(&cli.json, &GateListJson::from(&gates))?;
            if residual < 10.0 * tol {
                Ok(())
            } else {
                Err(Failure::Verify(format!("reconstruction residual {residual:.3e}")))
            }
        }
    }
}

/// Base-`d` digits of `x`, 1-based, most significant first.
fn ket(x: usize, n: usize, d: usize) -> String {
    let mut digits = vec![0; n];
    let mut rest = x;
    for k in (0..n).rev() {
        digits[k] = rest % d + 1;
        rest /= d;
    }
    let sep = if d > 9 { "," } else { "" };
    digits.iter().map(ToString::to_string).collect::<Vec<_>>().join(sep)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("schurkit").chain(args.iter().copied());
        let code = run_with(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn dims_table() {
        let (code, out, _) = run_capture(&["dims", "--d", "2", "--n", "2"]);
        assert_eq!(code, 0);
        let rows: Vec<Vec<&str>> = out.lines().skip(1).map(|l| l.split_whitespace().collect()).collect();
        assert_eq!(rows, vec![vec!["2", "3", "1"], vec!["1,1", "1", "1"]]);
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run_capture(&["dims", "--d", "x", "--n", "2"]).0, EXIT_ARGUMENT);
        assert_eq!(run_capture(&["bogus"]).0, EXIT_ARGUMENT);
        assert_eq!(run_capture(&["gz", "--lambda", "2,1,1", "--d", "2"]).0, EXIT_ARGUMENT);
        assert_eq!(run_capture(&["schur", "--n", "13", "--d", "2"]).0, EXIT_RESOURCE);
        assert_eq!(run_capture(&["schur", "--n", "3", "--d", "2", "--max-dim", "4"]).0, EXIT_RESOURCE);
        assert_eq!(run_capture(&["dims", "--d", "2", "--n", "2", "--threads", "0"]).0, EXIT_ARGUMENT);
        assert_eq!(run_capture(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn kets() {
        assert_eq!(ket(0b01, 2, 2), "12");
        assert_eq!(ket(5, 2, 3), "23");
    }

    #[test]
    fn verify_small() {
        let (code, out, _) = run_capture(&["verify", "--n", "2", "--d", "2", "--trials", "2", "--seed", "1"]);
        assert_eq!(code, 0, "{out}");
        assert!(out.contains("PASS"));
    }
}
