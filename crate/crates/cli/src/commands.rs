use std::fs;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use jt_core::jacobitrudi::{self, build, MinorShape, NPoly, QBracket, QyPoly, Specialization};
use jt_core::partitions::lr_coefficient;
use jt_core::theorems::{predict, sweep, verify, SweepConfig, VerifyMethod};
use jt_core::{Partition, SpecializationKind};

pub const EXIT_OK: u8 = 0;
pub const EXIT_MISMATCH: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Debug, Parser)]
#[command(name = "jt", version, about = "Smith normal forms of specialized Jacobi-Trudi matrices")]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    #[arg(long, global = true, value_parser = VerifyMethod::from_str, default_value = "reduce")]
    pub method: VerifyMethod,

    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Ring {
    N,
    Qy,
    Qbracket,
}

impl From<Ring> for SpecializationKind {
    fn from(r: Ring) -> Self {
        match r {
            Ring::N => SpecializationKind::NPoly,
            Ring::Qy => SpecializationKind::QyPoly,
            Ring::Qbracket => SpecializationKind::QBracket,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SweepRing {
    N,
    Qy,
    Qbracket,
    All,
}

#[derive(Debug, Args)]
pub struct ShapeArgs {
    /// Partition, e.g. `7,5,5,2`; `-` is the empty partition.
    #[arg(long, value_parser = Partition::from_str, allow_hyphen_values = true)]
    pub shape: Partition,

    /// Matrix size; defaults to the length of the partition.
    #[arg(short = 't')]
    pub t: Option<usize>,

    #[arg(long, value_enum, default_value_t = Ring::N)]
    pub ring: Ring,
}

impl ShapeArgs {
    fn t(&self) -> usize {
        self.t.unwrap_or(self.shape.len())
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute the Smith normal form and compare it with the prediction.
    Snf(ShapeArgs),
    /// Print the predicted Smith diagonal.
    Predict(ShapeArgs),
    /// Verify every partition up to a weight bound.
    Verify {
        #[arg(long, default_value_t = 6)]
        max_weight: usize,
        #[arg(long, default_value_t = 0)]
        extra_rows: usize,
        #[arg(long, value_enum, default_value_t = SweepRing::N)]
        ring: SweepRing,
        /// Spread cases over a thread pool.
        #[arg(long)]
        parallel: bool,
    },
    /// Inspect one minor: its skew shape, value and divisibility by the corner minor.
    Minor {
        #[command(flatten)]
        shape: ShapeArgs,
        /// 1-based row indices, e.g. `3,4,5`.
        #[arg(long, value_parser = parse_indices)]
        rows: Indices,
        /// 1-based column indices.
        #[arg(long, value_parser = parse_indices)]
        cols: Indices,
    },
    /// Littlewood-Richardson coefficient c^outer_{inner, content}.
    Lr {
        #[arg(long, value_parser = Partition::from_str, allow_hyphen_values = true)]
        outer: Partition,
        #[arg(long, value_parser = Partition::from_str, allow_hyphen_values = true)]
        inner: Partition,
        #[arg(long, value_parser = Partition::from_str, allow_hyphen_values = true)]
        content: Partition,
    },
    /// Print the specialized h_i.
    Qh {
        #[arg(allow_hyphen_values = true)]
        index: i64,
        #[arg(long, value_enum, default_value_t = Ring::Qy)]
        ring: Ring,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Indices(pub Vec<usize>);

fn parse_indices(s: &str) -> Result<Indices, String> {
    let v = s
        .split(',')
        .map(|x| x.trim().parse::<usize>().map_err(|_| format!("bad index {x:?}")))
        .collect::<Result<Vec<_>, _>>()?;
    if v.windows(2).any(|w| w[0] >= w[1]) {
        return Err(format!("indices {v:?} must be strictly increasing"));
    }
    Ok(Indices(v))
}

/// Usage-level failure: bad input that clap cannot catch on its own.
#[derive(Debug)]
pub struct UsageError(pub String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<jt_core::Error> for UsageError {
    fn from(e: jt_core::Error) -> Self {
        UsageError(e.to_string())
    }
}

impl From<std::io::Error> for UsageError {
    fn from(e: std::io::Error) -> Self {
        UsageError(e.to_string())
    }
}

pub fn run(cli: &Cli) -> Result<u8, UsageError> {
    let (code, output) = match &cli.command {
        Command::Snf(args) => cmd_snf(args, cli)?,
        Command::Predict(args) => cmd_predict(args, cli.format)?,
        Command::Verify {
            max_weight,
            extra_rows,
            ring,
            parallel,
        } => cmd_verify(*max_weight, *extra_rows, *ring, *parallel, cli)?,
        Command::Minor { shape, rows, cols } => cmd_minor(shape, &rows.0, &cols.0, cli.format)?,
        Command::Lr {
            outer,
            inner,
            content,
        } => cmd_lr(outer, inner, content, cli.format),
        Command::Qh { index, ring } => cmd_qh(*index, *ring, cli.format),
    };
    match &cli.out {
        Some(path) => fs::write(path, output)?,
        None => print!("{output}"),
    }
    Ok(code)
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("report serializes");
    s.push('\n');
    s
}

fn check_t(args: &ShapeArgs) -> Result<usize, UsageError> {
    let t = args.t();
    if t < args.shape.len() {
        return Err(jt_core::Error::TBelowLength {
            t,
            len: args.shape.len(),
        }
        .into());
    }
    Ok(t)
}

fn cmd_snf(args: &ShapeArgs, cli: &Cli) -> Result<(u8, String), UsageError> {
    let t = check_t(args)?;
    let report = verify(&args.shape, t, args.ring.into(), cli.method)?;
    let code = if report.matches { EXIT_OK } else { EXIT_MISMATCH };
    let out = match cli.format {
        Format::Json => to_json(&report.to_case()),
        Format::Text => {
            let mut s = format!(
                "shape {}  t = {}  ring {}  method {}\n",
                report.shape, report.t, report.kind, report.method
            );
            let factored = report.predicted.factored();
            for (i, (f, c)) in factored.iter().zip(&report.computed).enumerate() {
                s.push_str(&format!("  d{} predicted: {f}\n", i + 1));
                s.push_str(&format!("  d{} computed:  {c}\n", i + 1));
            }
            if let Some(minors) = &report.computed_minors {
                s.push_str(&format!("  minors route: {}\n", minors.join(", ")));
            }
            s.push_str(if report.matches { "match\n" } else { "MISMATCH\n" });
            s
        }
    };
    Ok((code, out))
}

fn cmd_predict(args: &ShapeArgs, format: Format) -> Result<(u8, String), UsageError> {
    let t = check_t(args)?;
    let pred = predict(&args.shape, t, args.ring.into())?;
    let out = match format {
        Format::Json => to_json(&json!({
            "shape": args.shape,
            "t": t,
            "kind": pred.kind,
            "factored": pred.factored(),
            "expanded": pred.expanded(),
        })),
        Format::Text => pred
            .factored()
            .iter()
            .zip(pred.expanded())
            .enumerate()
            .map(|(i, (f, e))| format!("d{} = {f} = {e}\n", i + 1))
            .collect(),
    };
    Ok((EXIT_OK, out))
}

fn cmd_verify(
    max_weight: usize,
    extra_rows: usize,
    ring: SweepRing,
    parallel: bool,
    cli: &Cli,
) -> Result<(u8, String), UsageError> {
    let kinds = match ring {
        SweepRing::N => vec![SpecializationKind::NPoly],
        SweepRing::Qy => vec![SpecializationKind::QyPoly],
        SweepRing::Qbracket => vec![SpecializationKind::QBracket],
        SweepRing::All => SpecializationKind::ALL.to_vec(),
    };
    let mut config = SweepConfig::new(max_weight, extra_rows, &kinds);
    config.method = cli.method;
    config.parallel = parallel;
    let report = sweep(&config);
    let code = if report.failures.is_empty() { EXIT_OK } else { EXIT_MISMATCH };
    let out = match cli.format {
        Format::Json => to_json(&report),
        Format::Text => {
            let mut s = String::new();
            for f in &report.failures {
                s.push_str(&format!(
                    "FAIL shape {} t {} ring {}: predicted [{}] computed [{}]\n",
                    f.shape,
                    f.t,
                    f.kind,
                    f.predicted.join(", "),
                    f.computed.join(", ")
                ));
            }
            s.push_str(&format!(
                "{} cases, {} failures, {:.1} ms\n",
                report.cases,
                report.failures.len(),
                report.total_ms
            ));
            s
        }
    };
    Ok((code, out))
}

fn cmd_minor(args: &ShapeArgs, rows: &[usize], cols: &[usize], format: Format) -> Result<(u8, String), UsageError> {
    let t = check_t(args)?;
    let skew = jacobitrudi::submatrix_to_skew(&args.shape, t, rows, cols)?;
    let k = rows.len();
    let (minor, corner, divisible) = match args.ring {
        Ring::N => minor_info::<NPoly>(&args.shape, t, rows, cols)?,
        Ring::Qy => minor_info::<QyPoly>(&args.shape, t, rows, cols)?,
        Ring::Qbracket => minor_info::<QBracket>(&args.shape, t, rows, cols)?,
    };
    let skew_str = match &skew {
        MinorShape::Skew(s) => s.to_string(),
        MinorShape::Zero => "zero minor".to_string(),
    };
    let out = match format {
        Format::Json => to_json(&json!({
            "shape": args.shape,
            "t": t,
            "rows": rows,
            "cols": cols,
            "skew": skew_str,
            "minor": minor,
            "corner_minor": corner,
            "divisible": divisible,
        })),
        Format::Text => format!(
            "skew shape: {skew_str}\nminor: {minor}\ndet M_{k}: {corner}\ndivisible by det M_{k}: {}\n",
            match divisible {
                Some(true) => "yes",
                Some(false) => "no",
                None => "n/a (det M_k = 0)",
            }
        ),
    };
    Ok((EXIT_OK, out))
}

/// The minor, the corner minor `M_k`, and whether the former is divisible by
/// the latter (`None` when `M_k` is singular).
fn minor_info<S: Specialization>(
    shape: &Partition,
    t: usize,
    rows: &[usize],
    cols: &[usize],
) -> Result<(String, String, Option<bool>), UsageError> {
    let m = build::<S>(shape, t)?;
    let zero_based = |v: &[usize]| v.iter().map(|x| x - 1).collect::<Vec<_>>();
    let minor = m.submatrix(&zero_based(rows), &zero_based(cols)).det()?;
    let k = rows.len();
    let corner_rows: Vec<usize> = (t - k..t).collect();
    let corner_cols: Vec<usize> = (0..k).collect();
    let corner = m.submatrix(&corner_rows, &corner_cols).det()?;
    let divisible = if corner.is_zero() {
        None
    } else {
        Some(minor.is_divisible_by(&corner)?)
    };
    Ok((minor.to_string(), corner.to_string(), divisible))
}

fn cmd_lr(outer: &Partition, inner: &Partition, content: &Partition, format: Format) -> (u8, String) {
    let c = lr_coefficient(outer, inner, content);
    let out = match format {
        Format::Json => to_json(&json!({
            "outer": outer,
            "inner": inner,
            "content": content,
            "coefficient": c,
        })),
        Format::Text => format!("{c}\n"),
    };
    (EXIT_OK, out)
}

fn cmd_qh(index: i64, ring: Ring, format: Format) -> (u8, String) {
    let p = match ring {
        Ring::N => NPoly::h(index).to_string(),
        Ring::Qy => QyPoly::h(index).to_string(),
        Ring::Qbracket => QBracket::h(index).to_string(),
    };
    let out = match format {
        Format::Json => to_json(&json!({
            "index": index,
            "ring": SpecializationKind::from(ring),
            "h": p,
        })),
        Format::Text => format!("{p}\n"),
    };
    (EXIT_OK, out)
}
