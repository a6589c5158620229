//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 on domain errors (and on `verify` finding a
//! counterexample), 2 on usage errors.

use std::io::{self, Write};

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

use crate::brocot::{best_bracket, brocot_table, Approximation, BrocotRow};
use crate::distributivity::distributivity_suite;
use crate::eisenstein::{ei_enumerate, ei_rows};
use crate::enumerate::{enumerate, tree_levels, Order, Rationals, MAX_TREE_DEPTH};
use crate::gcd::{gcd, gcd_traced};
use crate::identities::{identity_suite, IdentityReport};
use crate::matrix::bezout;
use crate::rational::Rational;
use crate::reference::{child_rule_levels, mediant_insertion_levels};
use crate::{Error, Natural};

/// Largest `--count` accepted by `enumerate`.
pub const MAX_COUNT: u64 = 1 << 31;

#[derive(Debug, Parser)]
#[command(
    name = "euclid",
    version,
    about = "Exact gcd algorithms and enumerations of the rationals"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Greatest common divisor of M and N.
    Gcd {
        m: Natural,
        n: Natural,
        /// Print every state of the subtractive loop as "(x, y)".
        #[arg(long)]
        trace: bool,
        /// Print a Bézout certificate "a b" with M*a + N*b = gcd.
        #[arg(long)]
        bezout: bool,
    },
    /// Stream the positive rationals. Newman order prints n/m of its state.
    Enumerate {
        #[arg(long, value_enum)]
        order: OrderArg,
        #[arg(long)]
        count: Natural,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Print tree levels 0..=K, one level per line.
    Tree {
        #[arg(long, value_enum)]
        order: OrderArg,
        #[arg(long)]
        depth: u32,
    },
    /// The Eisenstein array Ei(M, N).
    Ei(EiArgs),
    /// Brocot's approximation table for N/D.
    Brocot {
        n: Natural,
        d: Natural,
        #[arg(long)]
        max_den: Option<Natural>,
        /// Also print the closest approximations below and above N/D.
        #[arg(long)]
        best: bool,
        #[arg(long)]
        jsonl: bool,
    },
    /// Run an exhaustive check suite.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long)]
        bound: u64,
    },
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("what").required(true).args(["rows", "pairs"])))]
struct EiArgs {
    m: Natural,
    n: Natural,
    /// Print rows 0..=K.
    #[arg(long)]
    rows: Option<u32>,
    /// Stream the first C consecutive pairs.
    #[arg(long)]
    pairs: Option<u64>,
    #[arg(long)]
    jsonl: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OrderArg {
    EisensteinStern,
    SternBrocot,
    Newman,
}

impl From<OrderArg> for Order {
    fn from(o: OrderArg) -> Order {
        match o {
            OrderArg::EisensteinStern => Order::EisensteinStern,
            OrderArg::SternBrocot => Order::SternBrocot,
            OrderArg::Newman => Order::Newman,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Jsonl,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Suite {
    Identities,
    Distributivity,
    Enumeration,
}

#[derive(Debug)]
enum Failure {
    Domain(Error),
    Io(io::Error),
    /// `verify` found counterexamples; the reports are already printed.
    Counterexamples,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(rendered.as_bytes())
            } else {
                out.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(()) => 0,
        Err(Failure::Domain(e)) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
        Err(Failure::Counterexamples) => 1,
        // A closed pipe is not worth reporting.
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => 0,
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

fn execute(command: Command, out: &mut dyn Write) -> Result<(), Failure> {
    match command {
        Command::Gcd {
            m,
            n,
            trace,
            bezout: want_bezout,
        } => {
            writeln!(out, "{}", gcd(&m, &n))?;
            if trace {
                for (x, y) in gcd_traced(&m, &n)?.steps {
                    writeln!(out, "({x}, {y})")?;
                }
            }
            if want_bezout {
                let cert = bezout(&m, &n)?;
                writeln!(out, "{} {}", cert.a, cert.b)?;
            }
        }
        Command::Enumerate {
            order,
            count,
            format,
        } => {
            let count = u64::try_from(&count)
                .ok()
                .filter(|&c| c <= MAX_COUNT)
                .ok_or(Error::CountTooLarge {
                    count,
                    max: MAX_COUNT,
                })?;
            for (index, r) in enumerate(order.into(), count).enumerate() {
                match format {
                    Format::Plain => writeln!(out, "{r}")?,
                    Format::Jsonl => writeln!(out, "{}", rational_json(index, &r))?,
                }
            }
        }
        Command::Tree { order, depth } => {
            for level in tree_levels(order.into(), depth)? {
                let line: Vec<String> = level.iter().map(ToString::to_string).collect();
                writeln!(out, "{}", line.join(" "))?;
            }
        }
        Command::Ei(args) => {
            if let Some(depth) = args.rows {
                for row in ei_rows(&args.m, &args.n, depth)? {
                    if args.jsonl {
                        let entries: Vec<String> =
                            row.entries.iter().map(|e| format!("\"{e}\"")).collect();
                        writeln!(
                            out,
                            "{{\"row\":{},\"entries\":[{}]}}",
                            row.index,
                            entries.join(",")
                        )?;
                    } else {
                        let entries: Vec<String> =
                            row.entries.iter().map(ToString::to_string).collect();
                        writeln!(out, "{}", entries.join(" "))?;
                    }
                }
            } else if let Some(count) = args.pairs {
                for (a, b) in ei_enumerate(&args.m, &args.n, count)? {
                    if args.jsonl {
                        writeln!(out, "{{\"a\":\"{a}\",\"b\":\"{b}\"}}")?;
                    } else {
                        writeln!(out, "{a} {b}")?;
                    }
                }
            }
        }
        Command::Brocot {
            n,
            d,
            max_den,
            best,
            jsonl,
        } => {
            let table = brocot_table(&n, &d, max_den.as_ref())?;
            for row in &table.rows {
                write_row(out, row, jsonl)?;
            }
            if best {
                let bound = max_den.unwrap_or_else(|| d.clone());
                match best_bracket(&n, &d, &bound)? {
                    Approximation::Exact(row) => writeln!(out, "exact {}/{}", row.p, row.q)?,
                    Approximation::Bracket { lower, upper } => {
                        match lower {
                            Some(row) => writeln!(out, "lower {}/{}", row.p, row.q)?,
                            None => writeln!(out, "lower none")?,
                        }
                        writeln!(out, "upper {}/{}", upper.p, upper.q)?;
                    }
                }
            }
        }
        Command::Verify { suite, bound } => {
            let reports = match suite {
                Suite::Identities => identity_suite(bound),
                Suite::Distributivity => distributivity_suite(bound),
                Suite::Enumeration => enumeration_suite(bound)?,
            };
            for report in &reports {
                writeln!(out, "{report}")?;
            }
            if !reports.iter().all(IdentityReport::passed) {
                return Err(Failure::Counterexamples);
            }
        }
    }
    Ok(())
}

fn write_row(out: &mut dyn Write, row: &BrocotRow, jsonl: bool) -> io::Result<()> {
    if jsonl {
        writeln!(
            out,
            "{{\"p\":\"{}\",\"q\":\"{}\",\"e\":\"{}\"}}",
            row.p, row.q, row.e
        )
    } else {
        writeln!(out, "{row}")
    }
}

fn rational_json(index: usize, r: &Rational) -> String {
    format!(
        "{{\"index\":{index},\"num\":\"{}\",\"den\":\"{}\"}}",
        r.num(),
        r.den()
    )
}

/// Enumeration checks up to tree depth `bound`: both trees against their
/// reference constructions, Newman against the matrix enumerator, level order,
/// and uniqueness of the first `2^(bound+1) - 1` outputs.
fn enumeration_suite(bound: u64) -> crate::Result<Vec<IdentityReport>> {
    let depth = u32::try_from(bound)
        .ok()
        .filter(|&d| d <= MAX_TREE_DEPTH)
        .ok_or(Error::DepthTooLarge {
            depth: u32::try_from(bound).unwrap_or(u32::MAX),
            max: MAX_TREE_DEPTH,
        })?;
    let sb = tree_levels(Order::SternBrocot, depth)?;
    let es = tree_levels(Order::EisensteinStern, depth)?;

    let mut sb_report = IdentityReport::new("stern-brocot-vs-mediants", bound);
    for (k, (got, want)) in sb.iter().zip(mediant_insertion_levels(depth)).enumerate() {
        sb_report.record(*got == want, || vec![Natural::from(k)]);
    }

    let mut es_report = IdentityReport::new("eisenstein-stern-vs-children", bound);
    for (k, (got, want)) in es.iter().zip(child_rule_levels(depth)).enumerate() {
        es_report.record(*got == want, || vec![Natural::from(k)]);
    }

    let mut ascending = IdentityReport::new("stern-brocot-levels-ascending", bound);
    for (k, level) in sb.iter().enumerate() {
        let holds = level.len() == 1 << k && level.windows(2).all(|w| w[0] < w[1]);
        ascending.record(holds, || vec![Natural::from(k)]);
    }

    let total = (1u64 << (depth + 1)) - 1;
    let mut newman = IdentityReport::new("newman-vs-eisenstein-stern", bound);
    for (i, (a, b)) in Rationals::new(Order::Newman)
        .zip(Rationals::new(Order::EisensteinStern))
        .take(total as usize)
        .enumerate()
    {
        newman.record(a == b, || vec![Natural::from(i)]);
    }

    let mut unique = IdentityReport::new("unique-lowest-form", bound);
    for order in [Order::EisensteinStern, Order::SternBrocot] {
        let mut seen = std::collections::HashSet::new();
        for r in enumerate(order, total) {
            let holds = gcd(r.num(), r.den()) == Natural::from(1u32) && seen.insert(r.clone());
            unique.record(holds, || vec![r.num().clone(), r.den().clone()]);
        }
    }

    Ok(vec![sb_report, es_report, ascending, newman, unique])
}
