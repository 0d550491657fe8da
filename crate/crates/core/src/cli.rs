//! The `carlos` command line.
//!
//! Exit codes: 0 success, 1 computation error, 2 usage error.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::analysis::{octave_fit, search_generic, Family, DEFAULT_TOLERANCE_CENTS};
use crate::builders::{carlos2, carlos3, general_pair, parse_system, pentatonic};
use crate::error::Error;
use crate::interval::parse_interval;
use crate::optimizer::{optimal_unit, TargetSystem};
use crate::oracle::oracle_check;
use crate::report::{carlos_table_reports, export_scl, render_table, Format, ScaleReport};

#[derive(Debug, Parser)]
#[command(name = "carlos", version, about = "Least-squares equal-step scales")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Derive one scale and print its report.
    Derive {
        #[command(flatten)]
        system: SystemArgs,
        #[arg(long, value_enum, default_value_t = OutputFormat::Table)]
        format: OutputFormat,
    },
    /// Sweep a scale family and list every scale within tolerance.
    Search {
        #[arg(long, value_enum, default_value_t = Preset::Carlos2)]
        preset: Preset,
        /// Upper bound per parameter, or one bound for all.
        #[arg(long, default_value = "40", value_delimiter = ',')]
        max: Vec<u32>,
        #[arg(long, default_value_t = DEFAULT_TOLERANCE_CENTS)]
        tol: f64,
        /// Drop (a,b) pairs with a common factor.
        #[arg(long)]
        no_gcd_trivial: bool,
        /// Interval pair for `--preset pair`, e.g. `P4,P5`.
        #[arg(long, value_delimiter = ',')]
        intervals: Vec<String>,
        /// For `--preset carlos3`: put the fifth at a+b instead of sweeping c.
        #[arg(long)]
        fifth_is_sum: bool,
        #[arg(long, value_enum, default_value_t = OutputFormat::Table)]
        format: OutputFormat,
    },
    /// Reproduce the nine-row table of classic Carlos-type scales.
    Table {
        #[arg(long, value_enum, default_value_t = OutputFormat::Table)]
        format: OutputFormat,
    },
    /// Write a Scala .scl file for one scale.
    ExportScl {
        #[command(flatten)]
        system: SystemArgs,
        /// Number of degrees; defaults to the step count nearest an octave.
        #[arg(long)]
        steps: Option<u32>,
        #[arg(long)]
        description: Option<String>,
        /// Output path; stdout when omitted.
        #[arg(long, short)]
        output: Option<std::path::PathBuf>,
    },
    /// Compare the closed form against golden-section search on random systems.
    OracleCheck {
        #[arg(long, default_value_t = 1000)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Acceptable |closed form − numeric| in octaves.
        #[arg(long, default_value_t = 1e-10)]
        threshold: f64,
    },
}

#[derive(Debug, Args)]
struct SystemArgs {
    #[arg(long, value_enum, conflicts_with = "system")]
    preset: Option<Preset>,
    /// Builder parameters, e.g. `4,5` or `23,28,50`.
    #[arg(long, value_delimiter = ',', requires = "preset")]
    params: Vec<u32>,
    /// Interval pair for `--preset pair`.
    #[arg(long, value_delimiter = ',')]
    intervals: Vec<String>,
    /// Explicit system: `<steps>:<interval>,...` or a JSON array.
    #[arg(long)]
    system: Option<String>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Preset {
    Carlos2,
    Carlos3,
    Pentatonic,
    Pair,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum OutputFormat {
    Table,
    Csv,
    Json,
}

impl From<OutputFormat> for Format {
    fn from(f: OutputFormat) -> Self {
        match f {
            OutputFormat::Table => Format::Table,
            OutputFormat::Csv => Format::Csv,
            OutputFormat::Json => Format::Json,
        }
    }
}

enum Failure {
    Usage(String),
    Compute(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Compute(e)
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return if code == 0 { 0 } else { 2 };
        }
    };
    match execute(cli.command, out) {
        Ok(()) => 0,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(Failure::Compute(e)) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

fn write_out(out: &mut dyn Write, text: &str) -> Result<(), Failure> {
    out.write_all(text.as_bytes())
        .map_err(|e| Failure::Compute(Error::Output(e.to_string())))
}

fn execute(command: Command, out: &mut dyn Write) -> Result<(), Failure> {
    match command {
        Command::Derive { system, format } => {
            let system = resolve_system(&system)?;
            let report = ScaleReport::new(&optimal_unit(&system));
            write_out(out, &render_table(&[report], format.into())?)
        }
        Command::Search {
            preset,
            max,
            tol,
            no_gcd_trivial,
            intervals,
            fifth_is_sum,
            format,
        } => {
            let family = match preset {
                Preset::Carlos2 => Family::Carlos2,
                Preset::Carlos3 => Family::Carlos3 { fifth_is_sum },
                Preset::Pentatonic => Family::Pentatonic,
                Preset::Pair => {
                    let (first, second) = interval_pair(&intervals)?;
                    Family::Pair { first, second }
                }
            };
            let bounds: Vec<Option<u32>> = match max.len() {
                1 => vec![Some(max[0]); family.arity()],
                n if n == family.arity() => max.iter().copied().map(Some).collect(),
                n => {
                    return Err(Failure::Usage(format!(
                        "--max takes 1 or {} values, got {n}",
                        family.arity()
                    )))
                }
            };
            if tol.is_nan() || tol <= 0.0 {
                return Err(Failure::Usage(format!("--tol must be positive, got {tol}")));
            }
            let hits = search_generic(&family, &bounds, tol)?;
            let reports: Vec<ScaleReport> = hits
                .iter()
                .filter(|h| !(no_gcd_trivial && h.gcd_trivial))
                .map(|h| ScaleReport::new(&h.scale))
                .collect();
            if reports.is_empty() {
                return write_out(out, "no scales within tolerance\n");
            }
            write_out(out, &render_table(&reports, format.into())?)
        }
        Command::Table { format } => {
            write_out(out, &render_table(&carlos_table_reports(), format.into())?)
        }
        Command::ExportScl {
            system,
            steps,
            description,
            output,
        } => {
            let system = resolve_system(&system)?;
            let scale = optimal_unit(&system);
            let steps = match steps {
                Some(0) => return Err(Failure::Usage("--steps must be at least 1".into())),
                Some(s) => s,
                None => octave_fit(&scale).nearest_steps.max(1),
            };
            let description = description.unwrap_or_else(|| {
                format!(
                    "{}, {steps} steps of {:.5} cents",
                    system.label(),
                    scale.unit_cents
                )
            });
            let text = export_scl(&scale, steps, &description);
            match output {
                Some(path) => std::fs::write(&path, text).map_err(|e| {
                    Failure::Compute(Error::Output(format!("{}: {e}", path.display())))
                }),
                None => write_out(out, &text),
            }
        }
        Command::OracleCheck {
            count,
            seed,
            threshold,
        } => {
            let s = oracle_check(count, seed, 1e-12);
            let verdict = s.failures == 0 && s.max_discrepancy < threshold;
            let text = format!(
                "systems: {}\nmax |closed form - golden section|: {:.3e} octaves\nmax |stationarity sum|: {:.3e} octaves\nbracket failures: {}\nresult: {}\n",
                s.systems,
                s.max_discrepancy,
                s.max_stationarity,
                s.failures,
                if verdict { "ok" } else { "FAILED" }
            );
            write_out(out, &text)?;
            if verdict {
                Ok(())
            } else {
                Err(Failure::Compute(Error::Domain(format!(
                    "discrepancy {:.3e} exceeds {threshold:.1e}",
                    s.max_discrepancy
                ))))
            }
        }
    }
}

fn interval_pair(
    tokens: &[String],
) -> Result<(crate::interval::JustInterval, crate::interval::JustInterval), Failure> {
    if tokens.len() != 2 {
        return Err(Failure::Usage(
            "--intervals needs exactly two intervals, e.g. P4,P5".into(),
        ));
    }
    let parse = |t: &str| parse_interval(t).map_err(|e| Failure::Usage(e.to_string()));
    Ok((parse(&tokens[0])?, parse(&tokens[1])?))
}

fn resolve_system(args: &SystemArgs) -> Result<TargetSystem, Failure> {
    if let Some(text) = &args.system {
        return parse_system(text).map_err(|e| Failure::Usage(e.to_string()));
    }
    let Some(preset) = args.preset else {
        return Err(Failure::Usage(
            "give either --preset with --params, or --system".into(),
        ));
    };
    let p = &args.params;
    let arity_err =
        |n: usize| Failure::Usage(format!("--preset {preset:?} needs {n} values in --params"));
    let system = match preset {
        Preset::Carlos2 | Preset::Pentatonic | Preset::Pair if p.len() != 2 => {
            return Err(arity_err(2))
        }
        Preset::Carlos3 if p.len() != 3 => return Err(arity_err(3)),
        Preset::Carlos2 => carlos2(p[0], p[1])?,
        Preset::Carlos3 => carlos3(p[0], p[1], p[2])?,
        Preset::Pentatonic => pentatonic(p[0], p[1])?,
        Preset::Pair => {
            let (ia, ib) = interval_pair(&args.intervals)?;
            general_pair(&ia, p[0], &ib, p[1])?
        }
    };
    Ok(system)
}
