//! Command-line front end. All results go to stdout as canonical JSON, with
//! diagnostics on stderr.
//!
//! Exit codes: 0 success, 1 failed verification, 2 usage or input error,
//! 3 resource ceiling reached (see [`crate::verify::Limits`]).

use std::ffi::OsString;
use std::io::Read;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::bijections::{
    burge_f, durfee_frobenius, durfee_frobenius_inverse, frobenius_to_overpartition, frobenius_to_path,
    overpartition_to_frobenius, path_to_frobenius, uplift, uplift_inverse, UpliftCertificate,
};
use crate::objects::{
    canonical_json, durfee_dissection, enumerate_frobenius, enumerate_overpartitions, enumerate_partitions,
    enumerate_superpartitions, enumerate_two_modular, generalized_durfee_size, in_b_class, multuple_division,
    successive_ranks, FrobeniusSymbol, Overpartition,
};
use crate::paths::{enumerate_paths, major_index, peaks, relative_heights, validate, LatticePath};
use crate::qseries::{
    d_series, e_n_series, e_series, gamma_n_series, h_series, j_series, overpartition_series, product_side,
    required_input_qmax, ProductSide,
};
use crate::verify::{self, Family, Limits, Report, Specialization};
use crate::{Error, Result};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "gordon", version, about = "Overpartition Andrews-Gordon laboratory")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List every object of a given weight as a JSON array.
    Enumerate(EnumerateArgs),
    /// Statistics of one object read as JSON, or a family count table.
    Stats(StatsArgs),
    /// Apply a bijection to one object read as JSON.
    Biject(BijectArgs),
    /// Print a truncated generating function.
    Series(SeriesArgs),
    /// Run an identity check and print its report.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ObjectKind {
    Overpartition,
    Superpartition,
    Frobenius,
    Path,
    TwoModular,
    Partition,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    B,
    C,
    D,
    E,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::B => Family::B,
            FamilyArg::C => Family::C,
            FamilyArg::D => Family::D,
            FamilyArg::E => Family::E,
        }
    }
}

#[derive(Args, Debug)]
pub struct EnumerateArgs {
    #[arg(long, value_enum, required_unless_present = "family")]
    pub object: Option<ObjectKind>,
    /// Restrict to members of a family; implies the family's object type.
    #[arg(long, value_enum)]
    pub family: Option<FamilyArg>,
    #[arg(long)]
    pub n: u32,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub i: Option<usize>,
}

#[derive(Args, Debug)]
pub struct StatsArgs {
    #[arg(long, value_enum, conflicts_with = "family")]
    pub object: Option<ObjectKind>,
    /// Print the `(n, j, N)` table of a family instead.
    #[arg(long, value_enum)]
    pub family: Option<FamilyArg>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub i: Option<usize>,
    #[arg(long, default_value_t = 10)]
    pub nmax: u32,
    /// JSON input file, `-` for stdin.
    #[arg(long, default_value = "-")]
    pub input: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MapName {
    /// Frobenius symbol to overpartition by the hook algorithm.
    Frobenius,
    /// Frobenius symbol to overpartition with a Durfee square of the same size.
    Durfee,
    /// Path to Frobenius symbol with ranks in the window.
    Ranks,
    /// The multuple map on an overpartition's multiplicity sequence.
    Burge,
    /// Certificate to path by volcanic uplift.
    Uplift,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Direction {
    Forward,
    Inverse,
}

#[derive(Args, Debug)]
pub struct BijectArgs {
    #[arg(long, value_enum)]
    pub map: MapName,
    #[arg(long, value_enum, default_value = "forward")]
    pub direction: Direction,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub i: Option<usize>,
    #[arg(long, default_value = "-")]
    pub input: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SeriesKind {
    /// Bilateral series for paths.
    E,
    /// Durfee multi-sum.
    D,
    /// Paths with exactly `--n` peaks.
    En,
    /// Companion series with exactly `--n` peaks.
    Gamma,
    /// Trivariate series in `a`, `x` and `q` behind the multuple recurrences.
    H,
    /// Trivariate series whose `x` exponent counts parts of B-class members.
    J,
    /// Generating function of all overpartitions.
    Overpartitions,
    /// Specialization selected by `--product`, printed from both sides.
    Product,
}

#[derive(Args, Debug)]
pub struct SeriesArgs {
    #[arg(long, value_enum)]
    pub kind: SeriesKind,
    #[arg(long, default_value_t = 2)]
    pub k: usize,
    #[arg(long, default_value_t = 1)]
    pub i: usize,
    #[arg(long, default_value_t = 30)]
    pub qmax: usize,
    #[arg(long, default_value_t = 0)]
    pub n: usize,
    #[arg(long)]
    pub xmax: Option<usize>,
    #[arg(long, default_value = "eq3")]
    pub product: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Identity {
    Main,
    PathSeries,
    ClosedForms,
    DurfeeSeries,
    Products,
    NDurfee,
    PartSeries,
    RoundtripFrobenius,
    RoundtripRanks,
    RoundtripUplift,
    Moves,
    TwoModular,
    AdjacentSum,
    Superpartitions,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub identity: Identity,
    #[arg(long, default_value_t = 3)]
    pub k: usize,
    #[arg(long, default_value_t = 2)]
    pub i: usize,
    #[arg(long, default_value_t = 12)]
    pub nmax: u32,
    /// Truncation degree; defaults to 30, or 40 for `products`.
    #[arg(long)]
    pub qmax: Option<usize>,
    /// Index of the `n`-Durfee identity.
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    pub n: i64,
    #[arg(long, default_value = "eq3")]
    pub product: String,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 10_000)]
    pub trials: usize,
    /// Replace the rank window of family C, as `lo,hi`.
    #[arg(long, allow_hyphen_values = true)]
    pub window: Option<String>,
}

/// Result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `args` (including the program name) and runs the command, reading
/// JSON input from `stdin` where the command needs it.
pub fn run<I, T>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: EXIT_OK, stdout: text, stderr: String::new() }
            };
        }
    };
    match dispatch(cli.command, stdin) {
        Ok((value, pass)) => Outcome {
            code: if pass { EXIT_OK } else { EXIT_FAILED },
            stdout: format!("{}\n", canonical_json(&value)),
            stderr: String::new(),
        },
        Err(e) => Outcome {
            code: match e {
                Error::ResourceLimit(_) => EXIT_RESOURCE,
                _ => EXIT_USAGE,
            },
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn need(v: Option<usize>, name: &str) -> Result<usize> {
    v.ok_or_else(|| Error::InvalidParameters(format!("--{name} is required here")))
}

fn read_input(path: &str, stdin: &mut dyn Read) -> Result<String> {
    let mut s = String::new();
    if path == "-" {
        stdin.read_to_string(&mut s).map_err(|e| Error::InvalidParameters(format!("cannot read stdin: {e}")))?;
    } else {
        s = std::fs::read_to_string(path).map_err(|e| Error::InvalidParameters(format!("cannot read {path}: {e}")))?;
    }
    Ok(s)
}

fn parse<T: serde::de::DeserializeOwned>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::InvalidObject(format!("bad JSON input: {e}")))
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("domain objects always serialize")
}

fn dispatch(cmd: Command, stdin: &mut dyn Read) -> Result<(Value, bool)> {
    match cmd {
        Command::Enumerate(a) => enumerate(a).map(|v| (v, true)),
        Command::Stats(a) => stats(a, stdin).map(|v| (v, true)),
        Command::Biject(a) => biject(a, stdin).map(|v| (v, true)),
        Command::Series(a) => series(a).map(|v| (v, true)),
        Command::Verify(a) => {
            let r = run_verify(a)?;
            let pass = r.pass;
            Ok((to_value(&r), pass))
        }
    }
}

fn enumerate(a: EnumerateArgs) -> Result<Value> {
    let limits = Limits::from_env()?;
    limits.check_weight(a.n)?;
    if let Some(family) = a.family {
        let (k, i) = (need(a.k, "k")?, need(a.i, "i")?);
        let window = (2 - i as i64, 2 * k as i64 - i as i64 - 1);
        let items: Vec<Value> = match family {
            FamilyArg::B => {
                enumerate_overpartitions(a.n).iter().filter(|op| in_b_class(op, k, i)).map(to_value).collect()
            }
            FamilyArg::C => enumerate_frobenius(a.n)
                .iter()
                .filter(|f| successive_ranks(f).iter().all(|&r| window.0 <= r && r <= window.1))
                .map(to_value)
                .collect(),
            FamilyArg::D => {
                let mut out = Vec::new();
                for op in enumerate_overpartitions(a.n) {
                    if durfee_dissection(&op, k, i)?.is_some() {
                        out.push(to_value(&op));
                    }
                }
                out
            }
            FamilyArg::E => enumerate_paths(k, i, a.n as u64).iter().map(to_value).collect(),
        };
        return Ok(Value::Array(items));
    }
    let items: Vec<Value> = match a.object.expect("clap enforces --object or --family") {
        ObjectKind::Overpartition => enumerate_overpartitions(a.n).iter().map(to_value).collect(),
        ObjectKind::Superpartition => enumerate_superpartitions(a.n).iter().map(to_value).collect(),
        ObjectKind::Frobenius => enumerate_frobenius(a.n).iter().map(to_value).collect(),
        ObjectKind::TwoModular => enumerate_two_modular(a.n).iter().map(to_value).collect(),
        ObjectKind::Partition => enumerate_partitions(a.n).iter().map(to_value).collect(),
        ObjectKind::Path => {
            let (k, i) = (need(a.k, "k")?, need(a.i, "i")?);
            enumerate_paths(k, i, a.n as u64).iter().map(to_value).collect()
        }
    };
    Ok(Value::Array(items))
}

fn stats(a: StatsArgs, stdin: &mut dyn Read) -> Result<Value> {
    if let Some(family) = a.family {
        let (k, i) = (need(a.k, "k")?, need(a.i, "i")?);
        return Ok(verify::count_family(family.into(), k, i, a.nmax)?.to_json());
    }
    let object = a.object.ok_or_else(|| Error::InvalidParameters("--object or --family is required".into()))?;
    let text = read_input(&a.input, stdin)?;
    let ki = a.k.zip(a.i);
    Ok(match object {
        ObjectKind::Overpartition => {
            let op: Overpartition = parse(&text)?;
            let ms = op.multiplicity_sequence();
            let (_, len) = multuple_division(&ms);
            let mut v = json!({
                "weight": op.weight(),
                "parts": op.len(),
                "overlined": op.overlined_count(),
                "multiplicity_sequence": ms.to_string(),
                "multuple_length": len,
                "durfee_size": generalized_durfee_size(&op),
                "frobenius": to_value(&overpartition_to_frobenius(&op)),
            });
            if let Some((k, i)) = ki {
                v["in_b_class"] = json!(in_b_class(&op, k, i));
                v["durfee_dissection"] = json!(durfee_dissection(&op, k, i)?.map(|p| p.sizes));
            }
            v
        }
        ObjectKind::Frobenius => {
            let f: FrobeniusSymbol = parse(&text)?;
            json!({
                "weight": f.weight(),
                "columns": f.columns(),
                "plain_bottom": f.plain_bottom_count(),
                "ranks": successive_ranks(&f),
            })
        }
        ObjectKind::Path => {
            let p: LatticePath = parse(&text)?;
            let pk = peaks(&p);
            let mut v = json!({
                "major_index": major_index(&p),
                "south_steps": p.south_steps(),
                "peaks": to_value(&pk),
                "relative_heights": relative_heights(&p),
            });
            if let Some((k, i)) = ki {
                v["valid"] = json!(validate(&p, k, i));
            }
            v
        }
        other => return Err(Error::InvalidParameters(format!("stats are not available for {other:?}"))),
    })
}

fn biject(a: BijectArgs, stdin: &mut dyn Read) -> Result<Value> {
    let text = read_input(&a.input, stdin)?;
    let ki = || -> Result<(usize, usize)> { Ok((need(a.k, "k")?, need(a.i, "i")?)) };
    use Direction::*;
    Ok(match (a.map, a.direction) {
        (MapName::Frobenius, Forward) => to_value(&frobenius_to_overpartition(&parse(&text)?)),
        (MapName::Frobenius, Inverse) => to_value(&overpartition_to_frobenius(&parse(&text)?)),
        (MapName::Durfee, Forward) => to_value(&durfee_frobenius(&parse(&text)?)),
        (MapName::Durfee, Inverse) => to_value(&durfee_frobenius_inverse(&parse(&text)?)),
        (MapName::Ranks, Forward) => {
            let (k, i) = ki()?;
            to_value(&path_to_frobenius(&parse(&text)?, k, i)?)
        }
        (MapName::Ranks, Inverse) => {
            let (k, i) = ki()?;
            to_value(&frobenius_to_path(&parse(&text)?, k, i)?)
        }
        (MapName::Burge, Forward) => {
            let op: Overpartition = parse(&text)?;
            to_value(&burge_f(&op.multiplicity_sequence()).to_overpartition())
        }
        (MapName::Burge, Inverse) => return Err(Error::InvalidParameters("the multuple map is not invertible".into())),
        (MapName::Uplift, Forward) => {
            let c: UpliftCertificate = parse(&text)?;
            to_value(&uplift(&c)?)
        }
        (MapName::Uplift, Inverse) => {
            let (k, i) = ki()?;
            to_value(&uplift_inverse(&parse(&text)?, k, i)?)
        }
    })
}

fn series(a: SeriesArgs) -> Result<Value> {
    let limits = Limits::from_env()?;
    limits.check_qmax(a.qmax)?;
    limits.check_k(a.k)?;
    let (k, i, q) = (a.k, a.i, a.qmax);
    let s = match a.kind {
        SeriesKind::E => e_series(k, i, q)?,
        SeriesKind::D => d_series(k, i, q)?,
        SeriesKind::En => e_n_series(k, i, a.n, q)?,
        SeriesKind::Gamma => gamma_n_series(k, i, a.n, q)?,
        SeriesKind::H => h_series(k, i, q, a.xmax.unwrap_or(q))?,
        SeriesKind::J => j_series(k, i, q, a.xmax.unwrap_or(q))?,
        SeriesKind::Overpartitions => overpartition_series(q),
        SeriesKind::Product => {
            let which = ProductSide::parse(&a.product)?;
            let (coef, e, m) = which.substitution();
            let input = required_input_qmax(e, m, q);
            limits.check_qmax(input)?;
            let spec = e_series(k, i, input)?.specialize(coef, e, m, q)?;
            let prod = product_side(which, k, i, q)?;
            return Ok(json!({
                "product": which.name(),
                "specialized": spec.to_json(),
                "product_side": prod.to_json(),
                "equal": spec == prod,
            }));
        }
    };
    Ok(s.to_json())
}

fn parse_window(s: &str) -> Result<(i64, i64)> {
    let bad = || Error::InvalidParameters(format!("bad window {s:?}, expected lo,hi"));
    let (lo, hi) = s.split_once(',').ok_or_else(bad)?;
    Ok((lo.trim().parse().map_err(|_| bad())?, hi.trim().parse().map_err(|_| bad())?))
}

fn run_verify(a: VerifyArgs) -> Result<Report> {
    let (k, i, nmax) = (a.k, a.i, a.nmax);
    let qmax = a.qmax.unwrap_or(if a.identity == Identity::Products { 40 } else { 30 });
    match a.identity {
        Identity::Main => match &a.window {
            Some(w) => verify::verify_main_with_window(k, i, nmax, parse_window(w)?),
            None => verify::verify_main(k, i, nmax),
        },
        Identity::PathSeries => verify::check_e_series(k, i, nmax),
        Identity::ClosedForms => verify::check_closed_forms(k, 6, qmax),
        Identity::DurfeeSeries => verify::check_durfee_series(k, i, qmax, nmax),
        Identity::Products => verify::check_product(ProductSide::parse(&a.product)?, k, i, qmax),
        Identity::NDurfee => verify::check_n_durfee(a.n, qmax, nmax),
        Identity::PartSeries => verify::check_j_series(k, i, nmax),
        Identity::RoundtripFrobenius => verify::check_frobenius_roundtrips(nmax),
        Identity::RoundtripRanks => verify::check_rank_roundtrips(k, i, nmax),
        Identity::RoundtripUplift => verify::check_uplift_roundtrips(k, i, nmax),
        Identity::Moves => verify::check_moves(a.seed, a.trials),
        Identity::TwoModular => verify::verify_specialization(Specialization::TwoModular, k, i, nmax),
        Identity::AdjacentSum => verify::verify_specialization(Specialization::AdjacentSum, k, i, nmax),
        Identity::Superpartitions => verify::verify_specialization(Specialization::Superpartitions, k, i, nmax),
    }
}
