//! The `chernbound` command line.
//!
//! Exit codes: `0` success, `1` a verification failed, `2` usage error or bad
//! input, `3` internal integrity error.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::bounds::{build_p_pm, build_q, build_r_pm, chern_ratio_bound, uniform_bound};
use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::poly::{parse_rational, MultiPoly};
use crate::todd::{eval_tail_bound, hilbert_coefficients, rr_tail_bound, z_degree};
use crate::variety::{Catalog, CATALOG_ENV};
use crate::verify::{verify_catalog, MAX_K, SCHEMA};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INTEGRITY: i32 = 3;

/// Largest dimension accepted without `--max-n`.
pub const DEFAULT_MAX_N: u32 = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Latex,
}

/// Which polynomial `emit` prints.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    /// Linear bounds `P_λ^±` in `x_i = K^i·L^{n−i}`.
    #[value(name = "P")]
    P,
    /// Bounds `R_i^±` on `K^i·L^{n−i}·(L^n)^{i−1}`.
    #[value(name = "R")]
    R,
    /// Bivariate bounds `Q_λ^±`.
    #[value(name = "Qpm")]
    Qpm,
    /// Symmetric bound `Q_λ`.
    #[value(name = "Q")]
    Q,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::P => "P",
            Kind::R => "R",
            Kind::Qpm => "Qpm",
            Kind::Q => "Q",
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "chernbound", version, about = "Universal bounds on Chern numbers of polarized manifolds")]
pub struct Cli {
    /// Largest dimension to accept; coefficients grow quickly beyond 5.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_N)]
    pub max_n: u32,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print one of the bound polynomials.
    Emit {
        #[arg(long)]
        n: u32,
        /// Partition such as `2,1`; required for P, Qpm and Q.
        #[arg(long)]
        lambda: Option<Partition>,
        /// Power of K; required for R.
        #[arg(long)]
        i: Option<u32>,
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Check every inequality on the catalog entries of dimension n.
    Verify {
        #[arg(long)]
        n: u32,
        #[arg(long, env = CATALOG_ENV)]
        catalog: Option<PathBuf>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// The Chern-ratio constant c_n for K or −K ample.
    RatioBound {
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Bound on the Hilbert polynomial beyond its first m + 1 terms.
    RrBound {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m: u32,
        /// Evaluate at this catalog entry and check k = 1..10.
        #[arg(long)]
        variety: Option<String>,
        #[arg(long, env = CATALOG_ENV)]
        catalog: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Bound on |c_λ·L^{n−d}| given L^n ≤ v and K·L^{n−1} ≤ w.
    UniformBound {
        #[arg(long)]
        n: u32,
        #[arg(long, value_parser = parse_rational)]
        v: crate::poly::Rational,
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        w: crate::poly::Rational,
        #[arg(long)]
        lambda: Partition,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

/// Text produced by a command and whether its checks passed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub output: String,
    pub passed: bool,
}

impl Outcome {
    fn ok(output: String) -> Self {
        Outcome { output, passed: true }
    }
}

fn check_n(n: u32, max_n: u32) -> Result<()> {
    if n < 1 || n > max_n {
        return Err(Error::InvalidArgument(format!("n = {n} outside 1..={max_n} (raise with --max-n)")));
    }
    Ok(())
}

fn load_catalog(path: &Option<PathBuf>) -> Result<Catalog> {
    match path {
        Some(p) => Catalog::load(p),
        None => Ok(Catalog::builtin()),
    }
}

fn latex_partition(lambda: &Partition) -> String {
    format!("({lambda})")
}

fn render_pair(kind: Kind, label: &str, n: u32, lower: &MultiPoly, upper: &MultiPoly, format: Format) -> String {
    let name = kind.name();
    match format {
        Format::Text => format!("# {name} {label} n={n}\nlower: {lower}\nupper: {upper}\n"),
        Format::Latex => format!(
            "{name}^{{-}}_{{{label}}} = {}\\\\\n{name}^{{+}}_{{{label}}} = {}\n",
            lower.to_latex(),
            upper.to_latex()
        ),
        Format::Json => unreachable!("json handled by caller"),
    }
}

/// Renders one bound polynomial: `P`, `Qpm` and `Q` need `lambda`, `R`
/// needs `i`.
pub fn emit(n: u32, lambda: Option<Partition>, i: Option<u32>, kind: Kind, format: Format) -> Result<String> {
    let need_lambda = || {
        lambda.clone().ok_or_else(|| Error::InvalidArgument(format!("--lambda is required for kind {}", kind.name())))
    };
    let (label, key, lower, upper) = match kind {
        Kind::P => {
            let l = need_lambda()?;
            let (lo, hi) = build_p_pm(&l, n)?;
            (latex_partition(&l), json!({ "lambda": l }), Some(lo.to_poly()), hi.to_poly())
        }
        Kind::Qpm => {
            let l = need_lambda()?;
            let b = build_q(&l, n)?;
            (latex_partition(&l), json!({ "lambda": l }), Some(b.lower), b.upper)
        }
        Kind::Q => {
            let l = need_lambda()?;
            (latex_partition(&l), json!({ "lambda": l }), None, build_q(&l, n)?.symmetric)
        }
        Kind::R => {
            let i = i.ok_or_else(|| Error::InvalidArgument("--i is required for kind R".into()))?;
            let b = build_r_pm(i, n)?;
            (i.to_string(), json!({ "i": i }), Some(b.lower), b.upper)
        }
    };
    Ok(match (format, lower) {
        (Format::Json, lower) => {
            let mut v = json!({ "schema": SCHEMA, "n": n, "kind": kind.name() });
            v.as_object_mut().expect("object").extend(key.as_object().expect("object").clone());
            match lower {
                Some(lo) => {
                    v["lower"] = serde_json::to_value(&lo)?;
                    v["upper"] = serde_json::to_value(&upper)?;
                }
                None => v["bound"] = serde_json::to_value(&upper)?,
            }
            serde_json::to_string_pretty(&v)? + "\n"
        }
        (_, Some(lo)) => render_pair(kind, &label, n, &lo, &upper, format),
        (Format::Text, None) => format!("# Q {label} n={n}\nbound: {upper}\n"),
        (Format::Latex, None) => format!("Q_{{{label}}} = {}\n", upper.to_latex()),
    })
}

/// Runs a parsed command line and returns its output.
pub fn run(cli: &Cli) -> Result<Outcome> {
    let max_n = cli.max_n;
    match &cli.command {
        Command::Emit { n, lambda, i, kind, format, .. } => {
            check_n(*n, max_n)?;
            emit(*n, lambda.clone(), *i, *kind, *format).map(Outcome::ok)
        }
        Command::Verify { n, catalog, .. } => {
            check_n(*n, max_n)?;
            let report = verify_catalog(&load_catalog(catalog)?, *n)?;
            Ok(Outcome { passed: report.all_pass(), output: report.to_json()? })
        }
        Command::RatioBound { n, format, .. } => {
            check_n(*n, max_n)?;
            let r = chern_ratio_bound(*n)?;
            let slice = if r.sign > 0 { "K ample (y = x)" } else { "-K ample (y = -x)" };
            let output = match format {
                Format::Json => {
                    let v = json!({
                        "schema": SCHEMA, "n": n, "value": r.value.to_string(),
                        "witness": r.witness, "sign": r.sign,
                    });
                    serde_json::to_string_pretty(&v)? + "\n"
                }
                Format::Text => format!("c_{n} = {}\nwitness: ({})\nslice: {slice}\n", r.value, r.witness),
                Format::Latex => format!("c_{{{n}}} = {}\n", MultiPoly::constant(&["x"], r.value).to_latex()),
            };
            Ok(Outcome::ok(output))
        }
        Command::RrBound { n, m, variety, catalog, format, .. } => {
            check_n(*n, max_n)?;
            let q = rr_tail_bound(*n, *m)?;
            rr_bound_output(*n, *m, &q, variety.as_deref(), catalog, *format)
        }
        Command::UniformBound { n, v, w, lambda, format, .. } => {
            check_n(*n, max_n)?;
            let value = uniform_bound(*n, v, w, lambda)?;
            let output = match format {
                Format::Json => {
                    let j = json!({
                        "schema": SCHEMA, "n": n, "lambda": lambda,
                        "v": v.to_string(), "w": w.to_string(), "value": value.to_string(),
                    });
                    serde_json::to_string_pretty(&j)? + "\n"
                }
                Format::Text => format!("c({n}, {v}, {w}) for ({lambda}) = {value}\n"),
                Format::Latex => {
                    format!("c({n}, {v}, {w}) = {}\n", MultiPoly::constant(&["x"], value).to_latex())
                }
            };
            Ok(Outcome::ok(output))
        }
    }
}

fn rr_bound_output(
    n: u32,
    m: u32,
    q: &MultiPoly,
    variety: Option<&str>,
    catalog: &Option<PathBuf>,
    format: Format,
) -> Result<Outcome> {
    let mut rows = Vec::new();
    let mut passed = true;
    let mut point = None;
    if let Some(id) = variety {
        let cat = load_catalog(catalog)?;
        let v = cat.get(id)?;
        if v.dimension() != n {
            return Err(Error::InvalidArgument(format!("{id} has dimension {}, not {n}", v.dimension())));
        }
        let h = hilbert_coefficients(v, m)?;
        let [x, y] = v.intersection_vector()?.point();
        for k in 1..=MAX_K {
            let k = crate::poly::int(k);
            let tail = num_traits::Signed::abs(&h.tail(&k));
            let bound = eval_tail_bound(q, &x, &y, &k)?;
            passed &= tail <= bound;
            rows.push((k, tail.clone(), bound.clone(), bound - tail));
        }
        point = Some((id.to_owned(), x, y));
    }
    let output = match format {
        Format::Json => {
            let mut v = json!({ "schema": SCHEMA, "n": n, "m": m, "z_degree": z_degree(q), "bound": q });
            if let Some((id, x, y)) = &point {
                v["variety"] = json!({
                    "id": id, "x": x.to_string(), "y": y.to_string(), "pass": passed,
                    "rows": rows.iter().map(|(k, t, b, g)| json!({
                        "k": k.to_string(), "tail": t.to_string(), "bound": b.to_string(), "margin": g.to_string(),
                    })).collect::<Vec<_>>(),
                });
            }
            serde_json::to_string_pretty(&v)? + "\n"
        }
        Format::Latex => format!("Q(z) = {}\n", q.to_latex()),
        Format::Text => {
            let mut s = format!("Q(x, y, z) for n={n}, m={m}: {q}\n");
            if let Some((id, x, y)) = &point {
                let _ = writeln!(s, "{id}: x = {x}, y = {y}");
                for (k, t, b, g) in &rows {
                    let _ = writeln!(s, "k={k} tail={t} bound={b} margin={g}");
                }
                let _ = writeln!(s, "{}", if passed { "pass" } else { "FAIL" });
            }
            s
        }
    };
    Ok(Outcome { output, passed })
}

fn output_path(cli: &Cli) -> Option<&PathBuf> {
    match &cli.command {
        Command::Emit { output, .. }
        | Command::Verify { output, .. }
        | Command::RatioBound { output, .. }
        | Command::RrBound { output, .. }
        | Command::UniformBound { output, .. } => output.as_ref(),
    }
}

pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Integrity(_) | Error::DegenerateConstant { .. } => EXIT_INTEGRITY,
        _ => EXIT_USAGE,
    }
}

/// Parses `args`, runs the command, writes its output and returns the exit
/// code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    if cli.max_n > DEFAULT_MAX_N {
        eprintln!("warning: --max-n {} allows very large coefficients", cli.max_n);
    }
    let outcome = match run(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return exit_code(&e);
        }
    };
    let written = match output_path(&cli) {
        Some(path) => std::fs::write(path, &outcome.output),
        None => {
            use std::io::Write;
            std::io::stdout().write_all(outcome.output.as_bytes())
        }
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return EXIT_USAGE;
    }
    if outcome.passed {
        EXIT_OK
    } else {
        eprintln!("verification failed");
        EXIT_FAILED
    }
}
