//! `tablecli`: exact tables and sequences for m-ary increasing tree counts,
//! degree-chromatic values of complete graphs, the Gessel sequence, and
//! direct access to the Bell/EGF kernels.
//!
//! Exit codes: 0 on success, 2 on usage or parse errors, 3 when an
//! `--oracle-check` run finds a mismatch.

use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use num_traits::{One, ToPrimitive, Zero};

use tablecli::render::{self, Table};
use treecount::bell::{bell, ArgSeq};
use treecount::chromatic::{
    chromatic_at_minus_one, coloring_count_oracle_bounded, degree_chromatic_complete,
    gessel_sequence, DEFAULT_COLORING_BOUND,
};
use treecount::series::EgfSeries;
use treecount::trees::{
    count_mary_trees, insertion_enum_oracle_bounded, DEFAULT_INSERTION_BOUND,
};
use treecount::{ExactInt, ExactRatio};

#[derive(Parser)]
#[command(
    name = "tablecli",
    version,
    about = "Exact tables of m-ary increasing tree counts, degree-chromatic values, and EGF kernels"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Counts of m-ary increasing trees T_n(m)
    Trees(TreesArgs),
    /// Degree-chromatic values of complete graphs (lambda defaults to -1)
    Chromatic(ChromaticArgs),
    /// The Gessel sequence a_n(m)
    Gessel(GesselArgs),
    /// One partial Bell polynomial value B_{n,k}
    Bell(BellArgs),
    /// EGF kernel operations on a coefficient list
    Series(SeriesArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum OutputFormat {
    Csv,
    Markdown,
    Bfile,
    Latex,
}

#[derive(Args)]
#[command(group(ArgGroup::new("rows").required(true).args(["m", "m_max"])))]
struct TreesArgs {
    /// Emit the single row for this m
    #[arg(long)]
    m: Option<usize>,
    /// Emit rows m = 1..=M
    #[arg(long, value_name = "M")]
    m_max: Option<usize>,
    /// Largest n
    #[arg(long, value_name = "N")]
    n_max: usize,
    #[arg(long, value_enum, env = "TABLECLI_FORMAT", default_value = "csv")]
    format: OutputFormat,
    /// Classic layout: columns start at n = 2 and cells with n <= m are blank
    #[arg(long)]
    paper_layout: bool,
    /// Re-check every cell within reach against the insertion-sequence count
    #[arg(long)]
    oracle_check: bool,
    /// Largest n the insertion oracle re-checks (default 10)
    #[arg(long, value_name = "B")]
    oracle_bound: Option<u64>,
}

#[derive(Args)]
#[command(group(ArgGroup::new("rows").required(true).args(["m", "m_max"])))]
struct ChromaticArgs {
    #[arg(long)]
    m: Option<usize>,
    #[arg(long, value_name = "M")]
    m_max: Option<usize>,
    #[arg(long, value_name = "N")]
    n_max: usize,
    /// Evaluation point, an exact integer
    #[arg(long, default_value = "-1", allow_hyphen_values = true)]
    lambda: String,
    #[arg(long, value_enum, env = "TABLECLI_FORMAT", default_value = "csv")]
    format: OutputFormat,
    /// Accepted for symmetry with `trees`; the chromatic table already uses
    /// the classic layout
    #[arg(long)]
    paper_layout: bool,
    /// Re-check cells by exhaustive coloring where lambda >= 0 and lambda^n
    /// stays within the bound
    #[arg(long)]
    oracle_check: bool,
    /// Largest number of colorings the oracle will walk per cell
    #[arg(long, value_name = "B")]
    oracle_bound: Option<u64>,
}

#[derive(Args)]
struct GesselArgs {
    #[arg(long)]
    m: usize,
    /// Largest index; output runs a_0 .. a_n_max
    #[arg(long, value_name = "N")]
    n_max: usize,
    #[arg(long, value_enum, env = "TABLECLI_FORMAT", default_value = "csv")]
    format: OutputFormat,
    /// Verify the sign identity against the chromatic values
    #[arg(long)]
    oracle_check: bool,
}

#[derive(Args)]
struct BellArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    /// Comma-separated exact rationals, or the shorthand ones:m
    #[arg(long, allow_hyphen_values = true)]
    args: String,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum SeriesOp {
    Recip,
    Compinv,
    Integrate,
    Derive,
    Compose,
}

#[derive(Args)]
struct SeriesArgs {
    #[arg(long, value_enum)]
    op: SeriesOp,
    /// Comma-separated exact rationals, or the shorthand ones:m
    #[arg(long, allow_hyphen_values = true)]
    coeffs: String,
    /// Inner series for --op compose
    #[arg(long, allow_hyphen_values = true)]
    inner: Option<String>,
    /// Truncation order; the coefficient list is zero-padded up to it
    #[arg(long, value_name = "N")]
    order: Option<usize>,
    /// Emit the line-based series form instead of one csv line
    #[arg(long)]
    dump_series: bool,
}

enum CliError {
    Usage(String),
    OracleMismatch(String),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Trees(args) => run_trees(args),
        Command::Chromatic(args) => run_chromatic(args),
        Command::Gessel(args) => run_gessel(args),
        Command::Bell(args) => run_bell(args),
        Command::Series(args) => run_series(args),
    };
    match outcome {
        Ok(output) => {
            print!("{output}");
            ExitCode::SUCCESS
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::OracleMismatch(msg)) => {
            eprintln!("oracle mismatch: {msg}");
            ExitCode::from(3)
        }
    }
}

fn run_trees(args: TreesArgs) -> Result<String, CliError> {
    let n_max = positive(args.n_max, "--n-max")?;
    let ms = row_range(args.m, args.m_max)?;
    let mut rows = Vec::with_capacity(ms.len());
    for &m in &ms {
        rows.push(count_mary_trees(m, n_max).map_err(usage)?);
    }
    if args.oracle_check {
        let bound = args.oracle_bound.unwrap_or(DEFAULT_INSERTION_BOUND as u64);
        let reach = n_max.min(bound.min(usize::MAX as u64) as usize);
        for row in &rows {
            for n in 1..=reach {
                let check = insertion_enum_oracle_bounded(row.m(), n, reach).map_err(usage)?;
                if &check != row.count(n) {
                    return Err(CliError::OracleMismatch(format!(
                        "trees m = {}, n = {n}: closed form {} vs insertion count {check}",
                        row.m(),
                        row.count(n)
                    )));
                }
            }
        }
    }
    if args.format == OutputFormat::Bfile {
        let row = single_row(&rows, "trees")?;
        return Ok(render::bfile(1, row.counts()));
    }
    let n_start = if args.paper_layout { 2 } else { 1 };
    let table = Table {
        row_symbol: "m".into(),
        col_symbol: "n".into(),
        col_labels: (n_start..=n_max).map(|n| n.to_string()).collect(),
        rows: rows
            .iter()
            .map(|row| {
                let cells = (n_start..=n_max)
                    .map(|n| {
                        if args.paper_layout && n <= row.m() {
                            None
                        } else {
                            Some(row.count(n).to_string())
                        }
                    })
                    .collect();
                (row.m().to_string(), cells)
            })
            .collect(),
    };
    Ok(format_table(&table, args.format))
}

fn run_chromatic(args: ChromaticArgs) -> Result<String, CliError> {
    let n_max = positive(args.n_max, "--n-max")?;
    let ms = row_range(args.m, args.m_max)?;
    let lambda: ExactInt = args
        .lambda
        .trim()
        .parse()
        .map_err(|_| CliError::Usage(format!("invalid integer literal {:?}", args.lambda)))?;
    let at_minus_one = lambda == ExactInt::from(-1);
    let values: Vec<Vec<ExactInt>> = ms
        .iter()
        .map(|&m| {
            (1..=n_max)
                .map(|n| {
                    if at_minus_one {
                        chromatic_at_minus_one(m, n)
                    } else {
                        degree_chromatic_complete(m, n).eval(&lambda)
                    }
                })
                .collect()
        })
        .collect();
    if args.oracle_check {
        let bound = args.oracle_bound.unwrap_or(DEFAULT_COLORING_BOUND);
        if let Some(colors) = lambda.to_u64() {
            for (row, &m) in values.iter().zip(&ms) {
                for (cell, n) in row.iter().zip(1..=n_max) {
                    match coloring_count_oracle_bounded(m, n, colors, bound) {
                        Ok(count) => {
                            if &count != cell {
                                return Err(CliError::OracleMismatch(format!(
                                    "chromatic m = {m}, n = {n}, lambda = {colors}: \
                                     polynomial {cell} vs coloring count {count}"
                                )));
                            }
                        }
                        // past the bound: the check is best effort, skip
                        Err(_) => continue,
                    }
                }
            }
        }
    }
    if args.format == OutputFormat::Bfile {
        let row = single_row(&values, "chromatic")?;
        return Ok(render::bfile(1, row));
    }
    let table = Table {
        row_symbol: "m".into(),
        col_symbol: "n".into(),
        col_labels: (1..=n_max).map(|n| n.to_string()).collect(),
        rows: ms
            .iter()
            .zip(&values)
            .map(|(m, row)| {
                (
                    m.to_string(),
                    row.iter().map(|v| Some(v.to_string())).collect(),
                )
            })
            .collect(),
    };
    Ok(format_table(&table, args.format))
}

fn run_gessel(args: GesselArgs) -> Result<String, CliError> {
    let m = positive(args.m, "--m")?;
    let n_max = positive(args.n_max, "--n-max")?;
    let sequence = gessel_sequence(m, n_max);
    if args.oracle_check {
        for (n, a_n) in sequence.iter().enumerate().skip(1) {
            let chi = chromatic_at_minus_one(2 * m - 1, n);
            let signed = if n % 2 == 0 { a_n.clone() } else { -a_n.clone() };
            if chi != signed {
                return Err(CliError::OracleMismatch(format!(
                    "gessel m = {m}, n = {n}: (-1)^n a_n = {signed} vs chromatic value {chi}"
                )));
            }
        }
    }
    if args.format == OutputFormat::Bfile {
        return Ok(render::bfile(0, &sequence));
    }
    let table = Table {
        row_symbol: "m".into(),
        col_symbol: "n".into(),
        col_labels: (0..=n_max).map(|n| n.to_string()).collect(),
        rows: vec![(
            m.to_string(),
            sequence.iter().map(|v| Some(v.to_string())).collect(),
        )],
    };
    Ok(format_table(&table, args.format))
}

fn run_bell(args: BellArgs) -> Result<String, CliError> {
    let values = parse_value_list(&args.args)?;
    let arg_seq = ArgSeq::new(values).map_err(usage)?;
    Ok(format!("{}\n", bell(args.n, args.k, &arg_seq)))
}

fn run_series(args: SeriesArgs) -> Result<String, CliError> {
    let series = build_series(parse_value_list(&args.coeffs)?, args.order)?;
    let result = match args.op {
        SeriesOp::Recip => series.reciprocal_bell().map_err(usage)?,
        SeriesOp::Compinv => series.comp_inverse_bell().map_err(usage)?,
        SeriesOp::Integrate => series.integrate(),
        SeriesOp::Derive => series.derivative().map_err(usage)?,
        SeriesOp::Compose => {
            let inner_spec = args
                .inner
                .as_deref()
                .ok_or_else(|| CliError::Usage("--op compose needs --inner".into()))?;
            let inner = build_series(parse_value_list(inner_spec)?, Some(series.order()))?;
            series.compose(&inner).map_err(usage)?
        }
    };
    if args.dump_series {
        return Ok(result.to_text());
    }
    let rendered: Vec<String> = result.coeffs().iter().map(|c| c.to_string()).collect();
    Ok(format!("{}\n", rendered.join(",")))
}

fn format_table(table: &Table, format: OutputFormat) -> String {
    match format {
        OutputFormat::Csv => table.to_csv(),
        OutputFormat::Markdown => table.to_markdown(),
        OutputFormat::Latex => table.to_latex(),
        OutputFormat::Bfile => unreachable!("b-file output is handled per command"),
    }
}

fn usage(err: treecount::Error) -> CliError {
    CliError::Usage(err.to_string())
}

fn positive(value: usize, flag: &str) -> Result<usize, CliError> {
    if value == 0 {
        Err(CliError::Usage(format!("{flag} must be at least 1")))
    } else {
        Ok(value)
    }
}

fn row_range(m: Option<usize>, m_max: Option<usize>) -> Result<Vec<usize>, CliError> {
    match (m, m_max) {
        (Some(m), None) => Ok(vec![positive(m, "--m")?]),
        (None, Some(m_max)) => {
            positive(m_max, "--m-max")?;
            Ok((1..=m_max).collect())
        }
        _ => Err(CliError::Usage(
            "exactly one of --m / --m-max is required".into(),
        )),
    }
}

fn single_row<'a, R>(rows: &'a [R], command: &str) -> Result<&'a R, CliError> {
    if rows.len() == 1 {
        Ok(&rows[0])
    } else {
        Err(CliError::Usage(format!(
            "b-file output needs a single sequence; run `{command}` with --m instead of --m-max"
        )))
    }
}

fn parse_value_list(spec: &str) -> Result<Vec<ExactRatio>, CliError> {
    if let Some(count) = spec.strip_prefix("ones:") {
        let m: usize = count
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("invalid count in {spec:?}")))?;
        if m == 0 {
            return Err(CliError::Usage("ones:m needs m >= 1".into()));
        }
        return Ok(vec![ExactRatio::one(); m]);
    }
    spec.split(',').map(parse_ratio).collect()
}

fn parse_ratio(token: &str) -> Result<ExactRatio, CliError> {
    let token = token.trim();
    let invalid = || CliError::Usage(format!("invalid rational literal {token:?}"));
    if let Some((numer, denom)) = token.split_once('/') {
        let n: ExactInt = numer.trim().parse().map_err(|_| invalid())?;
        let d: ExactInt = denom.trim().parse().map_err(|_| invalid())?;
        if d.is_zero() {
            return Err(invalid());
        }
        Ok(ExactRatio::new(n, d))
    } else {
        let n: ExactInt = token.parse().map_err(|_| invalid())?;
        Ok(ExactRatio::from_integer(n))
    }
}

fn build_series(
    coeffs: Vec<ExactRatio>,
    order: Option<usize>,
) -> Result<EgfSeries<ExactRatio>, CliError> {
    if coeffs.is_empty() {
        return Err(CliError::Usage("empty coefficient list".into()));
    }
    let order = order.unwrap_or(coeffs.len() - 1);
    if coeffs.len() > order + 1 {
        return Err(CliError::Usage(format!(
            "{} coefficients do not fit order {order}",
            coeffs.len()
        )));
    }
    let mut padded = coeffs;
    padded.resize(order + 1, ExactRatio::zero());
    EgfSeries::new(padded).map_err(usage)
}
