//! Command-line front end: single-pair bound evaluation, reference-table
//! reproduction, the verification suite, and the minimal-bound region scan.
//!
//! Exit codes: 0 success / all pass, 1 check failure or table mismatch,
//! 2 usage or domain error.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use pangular::error::Error;
use pangular::metrics::{p_angular, PExponent};
use pangular::tables::{compare_table, load_table};
use pangular::verify::{run_prefix, scan_min_regions, ScanBox};
use pangular::{all_bounds, Vector};

#[derive(Parser)]
#[command(name = "pangular", version, about = "p-angular distance bounds, radial maps, and their verification suite")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum Format {
    Text,
    Csv,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate alpha_p and every applicable bound for one point pair.
    Bounds {
        /// First point, comma-separated coordinates, e.g. "-2.0,-2.65".
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        /// Second point, same dimension as x.
        #[arg(long, allow_hyphen_values = true)]
        y: String,
        /// Exponent of the p-angular distance.
        #[arg(long, allow_hyphen_values = true)]
        p: f64,
        /// Significant digits in numeric output.
        #[arg(long, default_value_t = 6)]
        precision: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Recompute one bundled reference table and compare per header,
    /// as a value multiset, and against the caption's minimality claim.
    Table {
        /// Table id, 1..=7.
        #[arg(long)]
        id: u32,
        #[arg(long, default_value_t = 6)]
        precision: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run registered checks (all, or those whose name starts with SUITE).
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 10_000)]
        samples: u64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Classify random pairs from [-3,3]^4 by their minimal bound.
    Scan {
        #[arg(long, allow_hyphen_values = true, default_value_t = 0.5)]
        p: f64,
        #[arg(long, default_value_t = 100_000)]
        samples: u64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 6)]
        precision: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

fn parse_vector(s: &str) -> Result<Vector, Error> {
    let coords: Result<Vec<f64>, Error> = s
        .split(',')
        .map(|c| {
            c.trim()
                .parse::<f64>()
                .map_err(|e| Error::Parse(format!("bad coordinate `{c}`: {e}")))
        })
        .collect();
    Vector::new(coords?)
}

/// Fixed significant-digit decimal formatting.
fn sig(v: f64, digits: usize) -> String {
    if v == 0.0 {
        return "0".to_string();
    }
    if !v.is_finite() {
        return format!("{v}");
    }
    let mag = v.abs().log10().floor() as i32;
    let decimals = (digits as i32 - 1 - mag).max(0) as usize;
    format!("{v:.decimals$}")
}

fn cmd_bounds(x: &str, y: &str, p: f64, precision: usize, format: Format) -> Result<ExitCode, Error> {
    let x = parse_vector(x)?;
    let y = parse_vector(y)?;
    let p = PExponent::new(p)?;
    let alpha = p_angular(&x, &y, p)?;
    let set = all_bounds(&x, &y, p)?;
    let minimal: Vec<String> = set.minimal().iter().map(|s| s.label().to_string()).collect();
    let fmt_opt = |v: Option<f64>, why: &str| match v {
        Some(v) => sig(v, precision),
        None => format!("undefined ({why})"),
    };
    let b_why = "requires p in (0,1)";
    let k_why = if p.get() > 0.0 && p.get() < 1.0 {
        "coincident points"
    } else {
        b_why
    };
    match format {
        Format::Text => {
            println!("alpha_p = {}", sig(alpha, precision));
            println!("B = {}", fmt_opt(set.b, b_why));
            println!("D = {}", sig(set.d, precision));
            println!("K = {}", fmt_opt(set.k, k_why));
            println!("M = {}", sig(set.m, precision));
            println!("minimal = {}", minimal.join(","));
        }
        Format::Csv => {
            println!("quantity,value");
            println!("alpha_p,{}", sig(alpha, precision));
            println!("B,{}", fmt_opt(set.b, b_why));
            println!("D,{}", sig(set.d, precision));
            println!("K,{}", fmt_opt(set.k, k_why));
            println!("M,{}", sig(set.m, precision));
            println!("minimal,{}", minimal.join(";"));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_table(id: u32, precision: usize, format: Format) -> Result<ExitCode, Error> {
    let rows = load_table(id)?;
    let report = compare_table(id)?;
    if format == Format::Csv {
        println!("table,row,header,printed,recomputed,holds_header_value,match");
    } else {
        println!("table {id} (tolerance {})", report.tolerance);
    }
    for (row, rep) in rows.iter().zip(&report.rows) {
        match format {
            Format::Text => {
                let cells: Vec<String> = rep
                    .per_header
                    .iter()
                    .zip(&rep.assigned)
                    .map(|((sym, printed, recomputed, ok), assigned)| {
                        let mark = if *ok {
                            "ok".to_string()
                        } else if assigned != sym {
                            format!("holds {}", assigned.label())
                        } else {
                            "MISMATCH".to_string()
                        };
                        format!(
                            "{}={} (recomputed {}, {})",
                            sym.label(),
                            sig(*printed, precision),
                            sig(*recomputed, precision),
                            mark
                        )
                    })
                    .collect();
                println!(
                    "row {}: {} | multiset {} | caption {} {}",
                    row.row,
                    cells.join("  "),
                    if rep.multiset_ok { "ok" } else { "MISMATCH" },
                    row.caption.label(),
                    if rep.caption_ok { "holds" } else { "FAILS" },
                );
            }
            Format::Csv => {
                for ((sym, printed, recomputed, ok), assigned) in
                    rep.per_header.iter().zip(&rep.assigned)
                {
                    println!(
                        "{},{},{},{},{},{},{}",
                        id,
                        row.row,
                        sym.label(),
                        sig(*printed, precision),
                        sig(*recomputed, precision),
                        assigned.label(),
                        ok
                    );
                }
            }
        }
    }
    if !report.exchanges.is_empty() {
        let pairs: Vec<String> = report
            .exchanges
            .iter()
            .map(|(a, b)| format!("{}<->{}", a.label(), b.label()))
            .collect();
        println!("column exchange detected: {}", pairs.join(", "));
    }
    Ok(if report.all_multiset_ok() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_verify(suite: &str, samples: u64, seed: u64, format: Format) -> Result<ExitCode, Error> {
    let reports = run_prefix(suite, samples, seed)?;
    if format == Format::Csv {
        println!("name,kind,status,samples,violations,max_violation,seed,witness");
    }
    let mut all_pass = true;
    for r in &reports {
        all_pass &= r.passed();
        match format {
            Format::Text => println!("{}", r.line()),
            Format::Csv => println!("{}", r.csv_line()),
        }
    }
    if format == Format::Text {
        println!(
            "{} checks, {} failed",
            reports.len(),
            reports.iter().filter(|r| !r.passed()).count()
        );
    }
    Ok(if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_scan(p: f64, samples: u64, seed: u64, precision: usize, format: Format) -> Result<ExitCode, Error> {
    let report = scan_min_regions(PExponent::new(p)?, ScanBox::default(), samples, seed)?;
    match format {
        Format::Text => {
            println!(
                "scan p={} box=[{},{}]^4 samples={} seed={}",
                report.p, report.boxr.lo, report.boxr.hi, report.samples, report.seed
            );
            for (sym, count) in &report.counts {
                println!("{} minimal: {count}", sym.label());
            }
            for w in &report.witnesses {
                println!(
                    "witness {}: x=({},{}) y=({},{}) value={}",
                    w.sym.label(),
                    sig(w.x.coords()[0], precision),
                    sig(w.x.coords()[1], precision),
                    sig(w.y.coords()[0], precision),
                    sig(w.y.coords()[1], precision),
                    sig(w.value, precision),
                );
            }
        }
        Format::Csv => {
            println!("symbol,count,wx_re,wx_im,wy_re,wy_im,value");
            for (sym, count) in &report.counts {
                if let Some(w) = report.witnesses.iter().find(|w| w.sym == *sym) {
                    println!(
                        "{},{},{},{},{},{},{}",
                        sym.label(),
                        count,
                        sig(w.x.coords()[0], precision),
                        sig(w.x.coords()[1], precision),
                        sig(w.y.coords()[0], precision),
                        sig(w.y.coords()[1], precision),
                        sig(w.value, precision),
                    );
                } else {
                    println!("{},{},,,,,", sym.label(), count);
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn dispatch(cli: Cli) -> Result<ExitCode, Error> {
    match cli.cmd {
        Cmd::Bounds {
            x,
            y,
            p,
            precision,
            format,
        } => cmd_bounds(&x, &y, p, precision, format),
        Cmd::Table {
            id,
            precision,
            format,
        } => cmd_table(id, precision, format),
        Cmd::Verify {
            suite,
            samples,
            seed,
            format,
        } => cmd_verify(&suite, samples, seed, format),
        Cmd::Scan {
            p,
            samples,
            seed,
            precision,
            format,
        } => cmd_scan(p, samples, seed, precision, format),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
