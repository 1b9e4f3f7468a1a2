//! `naples`: park, classify, convert, count, render and verify k-Naples
//! parking functions.
//!
//! Exit codes: 0 success, 1 usage or malformed input, 2 domain error,
//! 3 verification failure.

use std::fmt;
use std::io::{self, Read, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use naples::convert::{self, Representation};
use naples::enumeration;
use naples::oracle::Caps;
use naples::paths::{self, StepWord};
use naples::theorems::{self, TheoremReport, THEOREMS};
use naples::trees::BinaryTree;
use naples::{Count, Error, FilledPreference, ParkingOutcome, ParkingPreference, Table};

#[derive(Parser)]
#[command(name = "naples", version, about = "k-Naples parking functions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the parking process and print the spots taken.
    Park {
        /// Preference list, e.g. 6,6,6,5,5,2,1.
        #[arg(long, value_parser = parse_list)]
        pref: SpotList,
        #[arg(long)]
        k: usize,
        /// Spots already occupied; --pref then lists the remaining cars.
        #[arg(long, value_parser = parse_list)]
        parked: Option<SpotList>,
        #[arg(long)]
        json: bool,
    },
    /// Classify a preference.
    Check {
        #[arg(long, value_parser = parse_pref)]
        pref: ParkingPreference,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        json: bool,
    },
    /// Convert between representations. Reads stdin when INPUT is absent.
    Convert {
        #[arg(long, value_parser = parse_repr)]
        from: Representation,
        #[arg(long, value_parser = parse_repr)]
        to: Representation,
        #[arg(long)]
        k: usize,
        input: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Print a count table as CSV, or one column as b-file lines.
    Count {
        #[arg(long, value_enum)]
        table: TableKind,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        k: usize,
        /// CSV output (the default).
        #[arg(long, conflicts_with_all = ["sequence", "json"])]
        csv: bool,
        /// Emit only column k as "index value" lines.
        #[arg(long, conflicts_with = "json")]
        sequence: bool,
        #[arg(long)]
        json: bool,
    },
    /// Draw a path or tree.
    Render {
        #[arg(value_enum)]
        kind: RenderKind,
        input: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Ascii)]
        format: Format,
    },
    /// Run registered exhaustive checks.
    Verify {
        /// A check id, or "all".
        #[arg(default_value = "all")]
        id: String,
        /// Override the largest n of every selected check.
        #[arg(long)]
        n: Option<usize>,
        /// Override the largest k of every selected check.
        #[arg(long)]
        k: Option<usize>,
        /// Print the registered ids and exit.
        #[arg(long)]
        list: bool,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum TableKind {
    /// Ascending k-Naples.
    #[value(name = "I")]
    Ascending,
    /// Ascending k-Naples starting with 1.
    #[value(name = "U")]
    StartsOne,
    /// Descending strictly k-Naples.
    Strict,
    /// Descending k-Naples.
    Total,
    Catalan,
    Fine,
    CatalanFine,
}

#[derive(Clone, Copy, ValueEnum)]
enum RenderKind {
    Path,
    Tree,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Ascii,
    Svg,
    Dot,
}

fn parse_pref(s: &str) -> Result<ParkingPreference, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Comma-separated positive integers, checked against a street length later.
#[derive(Debug, Clone)]
struct SpotList(Vec<usize>);

fn parse_list(s: &str) -> Result<SpotList, String> {
    if s.trim().is_empty() {
        return Ok(SpotList(Vec::new()));
    }
    s.split(',')
        .map(|x| x.trim().parse().map_err(|_| format!("bad entry {x:?}")))
        .collect::<Result<_, _>>()
        .map(SpotList)
}

fn parse_repr(s: &str) -> Result<Representation, String> {
    s.parse().map_err(|_| {
        let names: Vec<&str> = Representation::ALL.iter().map(|r| r.name()).collect();
        format!("expected one of {}", names.join(", "))
    })
}

enum Failure {
    Usage(String),
    Domain(String),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } | Error::EntryOutOfRange { .. } => Failure::Usage(e.to_string()),
            _ => Failure::Domain(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Domain(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Verification) => ExitCode::from(3),
    }
}

/// Writes to stdout; a closed pipe ends the process quietly.
fn emit(args: fmt::Arguments<'_>) {
    if let Err(e) = io::stdout().lock().write_fmt(args) {
        if e.kind() == io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        panic!("writing to stdout: {e}");
    }
}

macro_rules! out {
    () => {
        emit(format_args!("\n"))
    };
    ($($arg:tt)*) => {
        emit(format_args!("{}\n", format_args!($($arg)*)))
    };
}

fn read_input(input: Option<String>) -> Result<String, Failure> {
    match input.as_deref() {
        Some("-") | None => {
            let mut buf = String::new();
            io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| Failure::Usage(e.to_string()))?;
            Ok(buf.trim().to_string())
        }
        Some(s) => Ok(s.trim().to_string()),
    }
}

fn print_json(value: &impl Serialize) {
    out!("{}", serde_json::to_string(value).expect("serializable"));
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Park { pref, k, parked, json } => park(pref, k, parked, json),
        Command::Check { pref, k, json } => check(&pref, k, json),
        Command::Convert {
            from,
            to,
            k,
            input,
            json,
        } => {
            let input = read_input(input)?;
            let output = convert::convert(from, to, &input, k)?;
            if json {
                print_json(&ConvertJson {
                    from: from.name(),
                    to: to.name(),
                    k,
                    input: &input,
                    output: &output,
                });
            } else {
                out!("{output}");
            }
            Ok(())
        }
        Command::Count {
            table,
            n,
            k,
            csv: _,
            sequence,
            json,
        } => {
            count(table, n, k, sequence, json);
            Ok(())
        }
        Command::Render { kind, input, format } => render(kind, &read_input(input)?, format),
        Command::Verify { id, n, k, list, json } => verify(&id, n, k, list, json),
    }
}

#[derive(Serialize)]
struct ParkJson {
    k: usize,
    success: bool,
    assignment: Option<Vec<usize>>,
    failed_car: Option<usize>,
}

fn park(pref: SpotList, k: usize, parked: Option<SpotList>, json: bool) -> Result<(), Failure> {
    let outcome: ParkingOutcome = match parked {
        Some(parked) => naples::park_filled(&FilledPreference::new(parked.0, pref.0)?, k),
        None => naples::park(&ParkingPreference::new(pref.0)?, k),
    };
    if json {
        print_json(&ParkJson {
            k,
            success: outcome.is_success(),
            assignment: outcome.assignment().map(<[usize]>::to_vec),
            failed_car: outcome.failed_car(),
        });
    } else {
        out!("{outcome}");
    }
    Ok(())
}

#[derive(Serialize)]
struct CheckJson {
    preference: String,
    k: usize,
    k_naples: bool,
    strictly_k_naples: bool,
    rearrangement_closed: bool,
    minimal_k: Option<usize>,
}

fn check(pref: &ParkingPreference, k: usize, json: bool) -> Result<(), Failure> {
    let report = CheckJson {
        preference: pref.to_string(),
        k,
        k_naples: naples::is_k_naples(pref, k),
        strictly_k_naples: naples::is_strictly_k_naples(pref, k),
        rearrangement_closed: naples::rearrangements_all_k_naples(pref, k),
        minimal_k: naples::minimal_k(pref).ok(),
    };
    if json {
        print_json(&report);
    } else {
        out!("k-naples: {}", report.k_naples);
        out!("strictly-k-naples: {}", report.strictly_k_naples);
        out!("rearrangement-closed: {}", report.rearrangement_closed);
        match report.minimal_k {
            Some(m) => out!("minimal-k: {m}"),
            None => out!("minimal-k: none"),
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct ConvertJson<'a> {
    from: &'a str,
    to: &'a str,
    k: usize,
    input: &'a str,
    output: &'a str,
}

#[derive(Serialize)]
struct CountJson {
    table: &'static str,
    n_max: usize,
    k_max: usize,
    /// `rows[n][k]`, decimal strings.
    rows: Vec<Vec<String>>,
}

impl TableKind {
    fn name(self) -> &'static str {
        match self {
            TableKind::Ascending => "I",
            TableKind::StartsOne => "U",
            TableKind::Strict => "strict",
            TableKind::Total => "total",
            TableKind::Catalan => "catalan",
            TableKind::Fine => "fine",
            TableKind::CatalanFine => "catalan-fine",
        }
    }

    fn has_k(self) -> bool {
        matches!(
            self,
            TableKind::Ascending | TableKind::StartsOne | TableKind::Strict | TableKind::Total
        )
    }
}

fn count(kind: TableKind, n_max: usize, k_max: usize, sequence: bool, json: bool) {
    let k_max = if kind.has_k() { k_max } else { 0 };
    let table = Table::new(n_max, k_max);
    let value = |n: usize, k: usize| -> Count {
        match kind {
            TableKind::Ascending => table.ascending(n, k).unwrap().clone(),
            TableKind::StartsOne => table.ascending_starts_one(n, k).unwrap().clone(),
            TableKind::Strict => enumeration::count_descending_strict(n, k),
            TableKind::Total => enumeration::count_descending_total(n, k),
            TableKind::Catalan => enumeration::catalan(n),
            TableKind::Fine => enumeration::fine(n),
            TableKind::CatalanFine => enumeration::catalan_fine_convolution(n),
        }
    };
    if sequence {
        for n in 0..=n_max {
            out!("{n} {}", value(n, k_max));
        }
        return;
    }
    let rows: Vec<Vec<String>> = (0..=n_max)
        .map(|n| (0..=k_max).map(|k| value(n, k).to_string()).collect())
        .collect();
    if json {
        print_json(&CountJson {
            table: kind.name(),
            n_max,
            k_max,
            rows,
        });
        return;
    }
    let header: Vec<String> = if kind.has_k() {
        (0..=k_max).map(|k| format!("k={k}")).collect()
    } else {
        vec![kind.name().to_string()]
    };
    out!("n,{}", header.join(","));
    for (n, row) in rows.iter().enumerate() {
        out!("{n},{}", row.join(","));
    }
}

fn render(kind: RenderKind, input: &str, format: Format) -> Result<(), Failure> {
    let out = match kind {
        RenderKind::Path => {
            let word: StepWord = input.parse()?;
            match format {
                Format::Ascii => paths::render_ascii(&word),
                Format::Svg => paths::render_svg(&word),
                Format::Dot => return Err(Failure::Usage("paths render as ascii or svg".into())),
            }
        }
        RenderKind::Tree => {
            let tree: BinaryTree = input.parse()?;
            match format {
                Format::Ascii => tree.render_ascii(),
                Format::Svg => tree.render_svg(),
                Format::Dot => tree.render_dot(),
            }
        }
    };
    emit(format_args!("{out}"));
    Ok(())
}

#[derive(Serialize)]
struct VerifyJson<'a> {
    id: &'a str,
    passed: bool,
    n_max: usize,
    k_max: usize,
    checked: u64,
    counterexamples: &'a [String],
}

fn verify(id: &str, n: Option<usize>, k: Option<usize>, list: bool, json: bool) -> Result<(), Failure> {
    if list {
        for t in THEOREMS {
            out!("{:<26} n<={:<2} k<={}  {}", t.id, t.default_n, t.default_k, t.statement);
        }
        return Ok(());
    }
    let caps = Caps::from_env()?;
    let ids: Vec<&str> = if id == "all" {
        THEOREMS.iter().map(|t| t.id).collect()
    } else {
        vec![id]
    };
    let mut all_passed = true;
    for id in ids {
        let info = theorems::theorem_info(id)?;
        let report: TheoremReport =
            theorems::check_theorem_with(id, n.unwrap_or(info.default_n), k.unwrap_or(info.default_k), &caps)?;
        all_passed &= report.passed();
        if json {
            print_json(&VerifyJson {
                id: report.id,
                passed: report.passed(),
                n_max: report.n_max,
                k_max: report.k_max,
                checked: report.checked,
                counterexamples: &report.counterexamples,
            });
        } else {
            out!("{report}");
        }
    }
    if all_passed {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}
