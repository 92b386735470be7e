//! `attainable`: command-line access to attainable partitions, their
//! generating functions, p-group invariants, and class-group statistics.
//!
//! Every command prints one record. The default rendering is a single-line
//! JSON object; `--tsv` prints a header row and a value row, and `--plain`
//! prints only the headline value. Exact integers and rationals are written
//! as decimal strings; heuristic estimates live in fields prefixed
//! `heuristic_` and are never mixed with exact values.
//!
//! Violated preconditions exit with status 2 and a one-line diagnostic on
//! stderr.

use std::process::ExitCode;

use attainable_core::class_group::class_group_structure_any;
use attainable_core::group_invariants::aut_order_factored;
use attainable_core::{
    attainable_partitions, attainable_series, class_group_structure, cohen_lenstra_weight, count_attainable,
    count_zero_cyclicity, max_attainable_length, predicted_count, predicted_cumulative, survey, triangular_series,
    triangular_to_zero, z, zero_cyclicity_series, zero_to_triangular, PGroupShape, Partition, Prediction,
    PredictionKind, TriangularMultiset, DEFAULT_CONSTANT,
};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::Value;

/// Enumeration above this size takes noticeably long; warn before starting.
const ENUMERATION_WARN_ABOVE: u64 = 60;

/// Environment variable overriding the default heuristic constant.
const CONSTANT_ENV: &str = "ATTAINABLE_CONSTANT";

#[derive(Parser)]
#[command(name = "attainable", version, about = "Attainable partitions and class-group statistics")]
struct Cli {
    /// Print a header row and a value row, tab separated.
    #[arg(long, global = true, conflicts_with_all = ["plain", "json"])]
    tsv: bool,

    /// Print only the headline value.
    #[arg(long, global = true, conflicts_with = "json")]
    plain: bool,

    /// Print one JSON object (the default).
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Cyclicity index of a partition.
    Cyclicity {
        /// Parts, space or comma separated.
        #[arg(required = true, allow_negative_numbers = true)]
        parts: Vec<String>,
    },
    /// Count (and optionally list) the attainable partitions of n.
    Attainable {
        n: u64,
        /// List the partitions as well.
        #[arg(long)]
        list: bool,
    },
    /// One term of a counting sequence, by enumeration.
    Count { sequence: Sequence, n: u64 },
    /// Coefficients of a generating function up to q^N.
    Series {
        sequence: Sequence,
        #[arg(long)]
        upto: usize,
    },
    /// The bijection between zero-index partitions and triangular multisets.
    Map {
        #[command(subcommand)]
        direction: Direction,
    },
    /// Order of the automorphism group of Z/p^{n_1} x ... x Z/p^{n_r}.
    Aut {
        p: u64,
        #[arg(required = true, allow_negative_numbers = true)]
        parts: Vec<String>,
    },
    /// Cohen-Lenstra probability of the p-group, among groups of the same order.
    Weight {
        p: u64,
        #[arg(required = true, allow_negative_numbers = true)]
        parts: Vec<String>,
    },
    /// Heuristic count of fields whose p-class group has the given shape.
    Predict {
        p: u64,
        #[arg(required = true, allow_negative_numbers = true)]
        parts: Vec<String>,
        /// Heuristic constant (default: $ATTAINABLE_CONSTANT, else 11.317).
        #[arg(long)]
        constant: Option<f64>,
        /// Sum over primes up to x (for cyclicity index 0).
        #[arg(long)]
        cumulative: Option<f64>,
    },
    /// Class number and Sylow structure of a negative discriminant.
    Classgroup {
        #[arg(allow_negative_numbers = true)]
        discriminant: i64,
        /// Read a positive argument as |D|.
        #[arg(long)]
        abs: bool,
        /// Accept non-fundamental discriminants (primitive forms only).
        #[arg(long)]
        non_fundamental: bool,
    },
    /// Tally Sylow partitions over a range of fundamental discriminants.
    Survey {
        #[arg(long, allow_negative_numbers = true)]
        from: i64,
        #[arg(long, allow_negative_numbers = true)]
        to: i64,
        /// Odd primes, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        primes: Vec<u64>,
        /// Largest Sylow partition size tallied individually.
        #[arg(long)]
        nmax: u64,
    },
}

#[derive(Subcommand)]
enum Direction {
    /// Zero-index partition of 2m -> triangular multiset of m.
    ToTriangular {
        #[arg(required = true, allow_negative_numbers = true)]
        parts: Vec<String>,
    },
    /// Triangular multiset of m -> zero-index partition of 2m.
    ToZero {
        #[arg(required = true, allow_negative_numbers = true)]
        values: Vec<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Sequence {
    /// Attainable partitions of n.
    A,
    /// Cyclicity-zero partitions of n.
    Z0,
    /// Cyclicity-zero partitions of 2m.
    Z,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Format {
    Json,
    Tsv,
    Plain,
}

/// A rendered result: ordered fields plus the headline used by `--plain`.
struct Record {
    fields: Vec<(&'static str, Value)>,
    plain: String,
}

impl Record {
    fn new(plain: impl Into<String>) -> Self {
        Record { fields: Vec::new(), plain: plain.into() }
    }

    fn field(mut self, key: &'static str, value: impl Into<Value>) -> Self {
        self.fields.push((key, value.into()));
        self
    }

    fn render(&self, format: Format) -> String {
        match format {
            Format::Plain => self.plain.clone(),
            Format::Json => {
                let body: Vec<String> = self.fields.iter().map(|(k, v)| format!("{}:{}", Value::from(*k), v)).collect();
                format!("{{{}}}", body.join(","))
            }
            Format::Tsv => {
                let header: Vec<&str> = self.fields.iter().map(|(k, _)| *k).collect();
                let values: Vec<String> = self.fields.iter().map(|(_, v)| tsv_cell(v)).collect();
                format!("{}\n{}", header.join("\t"), values.join("\t"))
            }
        }
    }
}

fn tsv_cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        Value::Array(items) => items.iter().map(tsv_cell).collect::<Vec<_>>().join(" "),
        Value::Object(map) => map.iter().map(|(k, v)| format!("{k}:{}", tsv_cell(v))).collect::<Vec<_>>().join(" "),
        other => other.to_string(),
    }
}

/// A failure to report: the message goes to stderr and the process exits 2.
struct Failure(String);

impl From<attainable_core::Error> for Failure {
    fn from(e: attainable_core::Error) -> Self {
        Failure(e.to_string())
    }
}

type CliResult<T> = Result<T, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = if cli.tsv {
        Format::Tsv
    } else if cli.plain {
        Format::Plain
    } else {
        Format::Json
    };
    match run(cli.command, format) {
        Ok(text) => {
            println!("{text}");
            ExitCode::SUCCESS
        }
        Err(Failure(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command, format: Format) -> CliResult<String> {
    let record = match command {
        Command::Cyclicity { parts } => {
            let lambda = parse_partition(&parts)?;
            let c = lambda.cyclicity_index().value();
            Record::new(c.to_string())
                .field("partition", lambda.to_string())
                .field("n", lambda.size().to_string())
                .field("cyclicity", c.to_string())
                .field("attainable", lambda.is_attainable())
        }
        Command::Attainable { n, list } => {
            warn_if_large(n);
            let all = attainable_partitions(n);
            let count = all.len().to_string();
            let max_len = if n == 0 { "0".to_string() } else { max_attainable_length(n)?.to_string() };
            let mut rec =
                Record::new(count.clone()).field("n", n.to_string()).field("count", count).field("max_length", max_len);
            if list {
                let listed: Vec<String> = all.iter().map(|p| p.to_string()).collect();
                rec.plain = listed.join("\n");
                rec = rec.field("partitions", listed);
            }
            rec
        }
        Command::Count { sequence, n } => {
            let (name, value) = match sequence {
                Sequence::A => {
                    warn_if_large(n);
                    ("a", count_attainable(n))
                }
                Sequence::Z0 => {
                    warn_if_large(n);
                    ("z0", count_zero_cyclicity(n))
                }
                Sequence::Z => {
                    warn_if_large(n.saturating_mul(2));
                    ("z", z(n))
                }
            };
            Record::new(value.to_string())
                .field("sequence", name)
                .field("n", n.to_string())
                .field("value", value.to_string())
        }
        Command::Series { sequence, upto } => {
            let (name, series) = match sequence {
                Sequence::A => ("a", attainable_series(upto)),
                Sequence::Z0 => ("z0", zero_cyclicity_series(upto)),
                // z(m) = z0(2m) counts partitions of m into triangular numbers
                Sequence::Z => ("z", triangular_series(upto)),
            };
            let coeffs: Vec<String> = series.coeffs().iter().map(|c| c.to_string()).collect();
            Record::new(coeffs.join(","))
                .field("sequence", name)
                .field("upto", upto.to_string())
                .field("coefficients", coeffs)
        }
        Command::Map { direction } => match direction {
            Direction::ToTriangular { parts } => {
                let lambda = parse_partition(&parts)?;
                let t = zero_to_triangular(&lambda)?;
                Record::new(t.to_string())
                    .field("partition", lambda.to_string())
                    .field("triangular", t.to_string())
                    .field("m", t.total().to_string())
            }
            Direction::ToZero { values } => {
                let values = parse_positive_list(&values)?;
                let t = TriangularMultiset::from_values(&values)?;
                let lambda = triangular_to_zero(&t)?;
                Record::new(lambda.to_string())
                    .field("triangular", t.to_string())
                    .field("partition", lambda.to_string())
                    .field("n", lambda.size().to_string())
            }
        },
        Command::Aut { p, parts } => {
            let shape = PGroupShape::new(p, parse_partition(&parts)?)?;
            let aut = aut_order_factored(&shape).value().to_string();
            Record::new(aut.clone())
                .field("p", p.to_string())
                .field("partition", shape.partition().to_string())
                .field("group_order", shape.group_order().to_string())
                .field("aut_order", aut)
        }
        Command::Weight { p, parts } => {
            let shape = PGroupShape::new(p, parse_partition(&parts)?)?;
            let w = cohen_lenstra_weight(&shape).to_string();
            Record::new(w.clone())
                .field("p", p.to_string())
                .field("partition", shape.partition().to_string())
                .field("weight", w)
        }
        Command::Predict { p, parts, constant, cumulative } => {
            let constant = resolve_constant(constant)?;
            let shape = PGroupShape::new(p, parse_partition(&parts)?)?;
            let prediction = match cumulative {
                Some(x) => predicted_cumulative(shape.partition(), x, constant)?,
                None if shape.partition().cyclicity_index().value() == 0 => {
                    return Err(Failure(
                        "cyclicity index is 0; pass --cumulative <x> for the count over p <= x".into(),
                    ));
                }
                None => predicted_count(&shape, constant)?,
            };
            prediction_record(&shape, &prediction, cumulative)
        }
        Command::Classgroup { discriminant, abs, non_fundamental } => {
            let d = if discriminant > 0 {
                if !abs {
                    return Err(Failure(format!(
                        "discriminant must be negative, got {discriminant} (pass --abs to read it as |D|)"
                    )));
                }
                -discriminant
            } else {
                discriminant
            };
            let s = if non_fundamental { class_group_structure_any(d)? } else { class_group_structure(d)? };
            let sylow: serde_json::Map<String, Value> =
                s.sylow.iter().map(|(q, l)| (q.to_string(), Value::from(l.to_string()))).collect();
            let factors: Vec<String> = s.invariant_factors().iter().map(|f| f.to_string()).collect();
            Record::new(s.class_number.to_string())
                .field("discriminant", d.to_string())
                .field("class_number", s.class_number.to_string())
                .field("sylow", sylow)
                .field("invariant_factors", factors)
        }
        Command::Survey { from, to, primes, nmax } => {
            let report = survey(from, to, &primes, nmax)?;
            // the report has its own multi-table layouts
            return Ok(match format {
                Format::Tsv => report.to_tsv().trim_end().to_string(),
                Format::Json | Format::Plain => report.to_json(),
            });
        }
    };
    Ok(record.render(format))
}

fn prediction_record(shape: &PGroupShape, prediction: &Prediction, cutoff: Option<f64>) -> Record {
    let kind = match prediction.kind {
        PredictionKind::Pointwise => "pointwise",
        PredictionKind::Cumulative => "cumulative",
        PredictionKind::Finite => "finite",
    };
    let value = prediction.value.map(Value::from).unwrap_or(Value::Null);
    let plain = match prediction.value {
        Some(v) => v.to_string(),
        None => "finite".to_string(),
    };
    let mut rec = Record::new(plain)
        .field("p", shape.prime().to_string())
        .field("partition", shape.partition().to_string())
        .field("cyclicity", prediction.cyclicity.to_string())
        .field("kind", kind);
    if let Some(x) = cutoff {
        rec = rec.field("heuristic_cutoff", x);
    }
    rec.field("heuristic_constant", prediction.constant).field("heuristic_value", value)
}

/// Flag, then environment, then the built-in default.
fn resolve_constant(flag: Option<f64>) -> CliResult<f64> {
    let constant = match flag {
        Some(c) => c,
        None => match std::env::var(CONSTANT_ENV) {
            Ok(s) => s.trim().parse::<f64>().map_err(|_| Failure(format!("{CONSTANT_ENV}={s:?} is not a number")))?,
            Err(_) => DEFAULT_CONSTANT,
        },
    };
    if !(constant.is_finite() && constant > 0.0) {
        return Err(Failure(format!("heuristic constant must be positive and finite, got {constant}")));
    }
    Ok(constant)
}

fn warn_if_large(n: u64) {
    if n > ENUMERATION_WARN_ABOVE {
        eprintln!("warning: enumerating partitions of {n}; this may be slow (use `series` for large n)");
    }
}

/// Splits arguments on commas and whitespace and parses signed integers, so
/// that nonpositive parts get a precise diagnostic.
fn parse_signed_list(args: &[String]) -> CliResult<Vec<i128>> {
    args.iter()
        .flat_map(|a| a.split(|c: char| c == ',' || c.is_whitespace()))
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<i128>().map_err(|_| Failure(format!("{s:?} is not an integer"))))
        .collect()
}

fn parse_positive_list(args: &[String]) -> CliResult<Vec<u64>> {
    let values = parse_signed_list(args)?;
    if values.is_empty() {
        return Err(Failure("no values given".into()));
    }
    values
        .into_iter()
        .map(|v| match u64::try_from(v) {
            Ok(v) if v > 0 => Ok(v),
            _ => Err(Failure(format!("values must be positive, got {v}"))),
        })
        .collect()
}

fn parse_partition(args: &[String]) -> CliResult<Partition> {
    let raw = parse_signed_list(args)?;
    if raw.is_empty() {
        return Err(attainable_core::Error::EmptyPartition.into());
    }
    let lambda = Partition::from_signed(raw.iter().copied())?;
    if raw.windows(2).any(|w| w[0] < w[1]) {
        eprintln!("warning: parts reordered to {lambda}");
    }
    Ok(lambda)
}
