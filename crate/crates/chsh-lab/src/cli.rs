//! Command-line surface: every computation as a subcommand with
//! reproducible, scriptable output.
//!
//! Exit codes: 0 success, 2 usage error, 3 scan found |population S| > 2
//! (scripting signal; the document is still written), 4 file/I-O error.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

use crate::core::{equal_spacing_setting, make_grid, AngleDeg, ChshSetting, DEFAULT_GRID_SIZE};
use crate::diffraction::{self, DiffractionSetup};
use crate::error::Error;
use crate::hv;
use crate::qm;
use crate::report::{Format, McMeta, Report, ReportRow, ReportTable};
use crate::stats::{self, ColumnSchema};
use crate::suite::{self, SeriesParams};

const EXIT_OK: u8 = 0;
const EXIT_USAGE: u8 = 2;
const EXIT_BOUND_VIOLATION: u8 = 3;
const EXIT_IO: u8 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "chsh-lab",
    version,
    about = "CHSH/Bell-test calculator: polarization-ensemble model, quantum closed forms, diffraction geometry, grouped statistics",
    after_help = "Exit codes: 0 success, 2 usage error, 3 scan found |population S| > 2, 4 file/I-O error.\n\
                  CHSH_LAB_FORMAT sets the default --format; explicit flags win."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Options shared by every subcommand. Defaults reproduce the tabulated
/// setup exactly: a 32-state grid and JSON output.
#[derive(Debug, Args)]
struct RunConfig {
    /// Number of polarization states in the uniform grid
    #[arg(long, global = true, default_value_t = DEFAULT_GRID_SIZE, value_name = "N")]
    grid_size: usize,

    /// Output format
    #[arg(
        long,
        global = true,
        value_enum,
        env = "CHSH_LAB_FORMAT",
        default_value_t = FormatArg::Json
    )]
    format: FormatArg,

    /// Write output here instead of stdout (a directory for csv)
    #[arg(long, global = true, value_name = "PATH")]
    output: Option<PathBuf>,

    /// Seed for stochastic estimators; echoed in report metadata when used
    #[arg(long, global = true, value_name = "SEED")]
    seed: Option<u64>,

    /// Treat malformed data rows as fatal instead of collecting diagnostics
    #[arg(long, global = true)]
    strict: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
    Markdown,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Csv => Format::Csv,
            FormatArg::Json => Format::Json,
            FormatArg::Markdown => Format::Markdown,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Regenerate the five per-state matrices (pp, nn, pn, np, E) for one
    /// polarization state
    Tables {
        /// 0-based polarization-state index on the grid
        #[arg(long, value_name = "K")]
        lambda_index: usize,
        #[command(flatten)]
        config: RunConfig,
    },

    /// Per-state CHSH values, extrema, and the population S for one setting
    #[command(group(ArgGroup::new("selector").required(true).args(["theta", "setting"])))]
    Scan {
        /// Equal-spacing setup angle in degrees: (0, theta, 2*theta, 3*theta)
        #[arg(long)]
        theta: Option<f64>,
        /// Explicit orientations a,b,a',b' in degrees
        #[arg(long, value_delimiter = ',', value_name = "A,B,AP,BP")]
        setting: Option<Vec<f64>>,
        #[command(flatten)]
        config: RunConfig,
    },

    /// Ensemble-model vs quantum CHSH at one or more equal-spacing thetas
    Compare {
        /// Equal-spacing angles in degrees
        #[arg(long, value_delimiter = ',', default_value = "11.25,22.5,33.75")]
        theta: Vec<f64>,
        /// Also run the Monte-Carlo convergence check with this many samples
        #[arg(long, value_name = "N")]
        mc_samples: Option<u64>,
        #[command(flatten)]
        config: RunConfig,
    },

    /// Four correlator components plus S for one equal-spacing theta
    Breakdown {
        #[arg(long, default_value_t = 22.5)]
        theta: f64,
        #[command(flatten)]
        config: RunConfig,
    },

    /// Population CHSH for the ten tabulated setups theta = 11.25 * m
    Suite {
        #[command(flatten)]
        config: RunConfig,
    },

    /// Diffraction maxima angles and screen positions
    #[command(group(ArgGroup::new("spacing").args(["d", "lines_per_cm"])))]
    Diffract {
        /// Slit spacing; accepts unit suffixes nm, um, mm, cm, m (default m)
        #[arg(long, default_value = "0.01mm")]
        d: String,
        /// Grating density as lines per centimeter (alternative to --d)
        #[arg(long, value_name = "N")]
        lines_per_cm: Option<f64>,
        /// Screen distance; accepts the same unit suffixes
        #[arg(long, default_value = "2.0m")]
        x: String,
        /// Highest diffraction order to tabulate
        #[arg(long, default_value_t = 2)]
        orders: u32,
        /// Wavelength list; entries without a suffix are nanometers
        #[arg(long, value_delimiter = ',', default_value = "485nm,565nm,750nm")]
        wavelengths: Vec<String>,
        #[command(flatten)]
        config: RunConfig,
    },

    /// Grouped summary statistics over a CSV file, with the embedded
    /// completion-time reference rows rendered alongside
    Stats {
        #[arg(long, value_name = "FILE")]
        input: PathBuf,
        /// Columns forming the group identity
        #[arg(long, value_delimiter = ',', required = true, value_name = "COLS")]
        group_by: Vec<String>,
        /// Column holding the numeric value
        #[arg(long, required = true, value_name = "COL")]
        value: String,
        #[command(flatten)]
        config: RunConfig,
    },

    /// Plottable series: fig2 (population correlator, both models, plus
    /// difference) or fig3 (per-state pass/pass curves)
    Series {
        /// Series selector: fig2 or fig3
        #[arg(long, value_name = "KIND")]
        kind: String,
        /// fig2 only: 0-based grid indices of the fixed B orientations
        #[arg(long, value_delimiter = ',', value_name = "IDX")]
        b_indices: Option<Vec<usize>>,
        /// fig3 only: polarization states in degrees
        #[arg(long, value_delimiter = ',', value_name = "DEG")]
        lambdas: Option<Vec<f64>>,
        #[command(flatten)]
        config: RunConfig,
    },
}

/// A failure destined for stderr, carrying its exit code.
#[derive(Debug)]
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    fn io(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_IO,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Io(_) | Error::Csv(_) | Error::MissingColumn(_) | Error::StrictRow { .. } => {
                Failure::io(e.to_string())
            }
            _ => Failure::usage(e.to_string()),
        }
    }
}

pub fn run() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap prints usage itself and reports 2 for errors, 0 for --help
            let _ = e.print();
            return ExitCode::from(e.exit_code().clamp(0, 255) as u8);
        }
    };
    match dispatch(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn dispatch(command: Command) -> Result<u8, Failure> {
    match command {
        Command::Tables {
            lambda_index,
            config,
        } => cmd_tables(lambda_index, &config),
        Command::Scan {
            theta,
            setting,
            config,
        } => cmd_scan(theta, setting, &config),
        Command::Compare {
            theta,
            mc_samples,
            config,
        } => cmd_compare(&theta, mc_samples, &config),
        Command::Breakdown { theta, config } => cmd_breakdown(theta, &config),
        Command::Suite { config } => cmd_suite(&config),
        Command::Diffract {
            d,
            lines_per_cm,
            x,
            orders,
            wavelengths,
            config,
        } => cmd_diffract(&d, lines_per_cm, &x, orders, &wavelengths, &config),
        Command::Stats {
            input,
            group_by,
            value,
            config,
        } => cmd_stats(&input, group_by, value, &config),
        Command::Series {
            kind,
            b_indices,
            lambdas,
            config,
        } => cmd_series(&kind, b_indices, lambdas, &config),
    }
}

fn angle(raw: f64) -> Result<AngleDeg, Failure> {
    AngleDeg::new(raw).map_err(Failure::from)
}

fn grid_for(config: &RunConfig) -> Result<crate::core::PolarizationGrid, Failure> {
    make_grid(config.grid_size).map_err(Failure::from)
}

fn cmd_tables(lambda_index: usize, config: &RunConfig) -> Result<u8, Failure> {
    let grid = grid_for(config)?;
    if lambda_index >= grid.n_states() {
        return Err(Failure::usage(format!(
            "--lambda-index {lambda_index} out of range for a {}-state grid (valid: 0..={})",
            grid.n_states(),
            grid.n_states() - 1
        )));
    }
    let tables = suite::regenerate_appendix_tables(lambda_index, &grid)?;
    let mut report = Report::new(grid.n_states());
    for table in tables.to_tables(&grid) {
        report.push(table);
    }
    emit(&report, config)?;
    Ok(EXIT_OK)
}

fn cmd_scan(
    theta: Option<f64>,
    setting: Option<Vec<f64>>,
    config: &RunConfig,
) -> Result<u8, Failure> {
    let grid = grid_for(config)?;
    let setting = match (theta, setting) {
        (Some(t), None) => equal_spacing_setting(angle(t)?),
        (None, Some(values)) => {
            if values.len() != 4 {
                return Err(Failure::usage(format!(
                    "--setting needs exactly four angles a,b,a',b', got {}",
                    values.len()
                )));
            }
            ChshSetting::new(
                angle(values[0])?,
                angle(values[1])?,
                angle(values[2])?,
                angle(values[3])?,
            )
        }
        // clap's arg group enforces exactly one selector
        _ => unreachable!("selector group guarantees one of --theta/--setting"),
    };
    let scan = suite::scan_individual(&setting, &grid)?;
    let mut report = Report::new(grid.n_states());
    report.push(scan.to_table(&grid));
    emit(&report, config)?;
    if suite::violates_chsh_bound(scan.population_s) {
        Ok(EXIT_BOUND_VIOLATION)
    } else {
        Ok(EXIT_OK)
    }
}

fn cmd_compare(
    thetas: &[f64],
    mc_samples: Option<u64>,
    config: &RunConfig,
) -> Result<u8, Failure> {
    let grid = grid_for(config)?;
    let rows = thetas
        .iter()
        .map(|&t| suite::compare_models(angle(t)?, &grid).map_err(Failure::from))
        .collect::<Result<Vec<_>, _>>()?;
    let mut report = Report::new(grid.n_states());
    report.push(suite::comparison_table(&rows, &grid));

    if let Some(samples) = mc_samples {
        let seed = config.seed.unwrap_or(0);
        let mut table = ReportTable::new(
            "mc_convergence",
            "Monte-Carlo check of the population correlator E(0, theta)",
        );
        for &t in thetas {
            let estimate = hv::mc_expected_value(angle(0.0)?, angle(t)?, samples, seed)?;
            let exact = qm::qm_expected_value(angle(0.0)?, angle(t)?);
            table.rows.push(
                ReportRow::computed(format!("theta_{t}/estimate"), estimate.estimate)
                    .with_paper(exact),
            );
            table.rows.push(ReportRow::computed(
                format!("theta_{t}/std_error"),
                estimate.std_error,
            ));
        }
        report.mc = Some(McMeta {
            seed,
            rng: hv::RNG_ALGORITHM,
            samples,
        });
        report.push(table);
    }
    emit(&report, config)?;
    Ok(EXIT_OK)
}

fn cmd_breakdown(theta: f64, config: &RunConfig) -> Result<u8, Failure> {
    let grid = grid_for(config)?;
    let setting = equal_spacing_setting(angle(theta)?);
    let breakdown = suite::correlator_breakdown(&setting, &grid)?;
    let mut report = Report::new(grid.n_states());
    report.push(suite::breakdown_table(&breakdown, &grid));
    emit(&report, config)?;
    Ok(EXIT_OK)
}

fn cmd_suite(config: &RunConfig) -> Result<u8, Failure> {
    let grid = grid_for(config)?;
    let rows = suite::run_population_suite(&grid)?;
    let mut report = Report::new(grid.n_states());
    report.push(suite::population_suite_table(&rows));
    emit(&report, config)?;
    Ok(EXIT_OK)
}

fn cmd_diffract(
    d: &str,
    lines_per_cm: Option<f64>,
    x: &str,
    orders: u32,
    wavelengths: &[String],
    config: &RunConfig,
) -> Result<u8, Failure> {
    let spacing = match lines_per_cm {
        Some(n) => DiffractionSetup::spacing_from_lines_per_cm(n)?,
        None => parse_length(d, LengthUnit::Meter)?,
    };
    let distance = parse_length(x, LengthUnit::Meter)?;
    let parsed: Vec<(String, f64)> = wavelengths
        .iter()
        .map(|w| {
            let meters = parse_length(w, LengthUnit::Nanometer)?;
            Ok((format!("{}nm", meters * 1e9), meters))
        })
        .collect::<Result<_, Failure>>()?;
    let setup = DiffractionSetup::new(spacing, distance, parsed, orders)?;
    let rows = diffraction::spectrum(&setup)?;
    let mut report = Report::new(config.grid_size);
    report.push(diffraction::spectrum_table(&setup, &rows));
    emit(&report, config)?;
    Ok(EXIT_OK)
}

fn cmd_stats(
    input: &PathBuf,
    group_by: Vec<String>,
    value: String,
    config: &RunConfig,
) -> Result<u8, Failure> {
    let file = fs::File::open(input)
        .map_err(|e| Failure::io(format!("cannot open {}: {e}", input.display())))?;
    let schema = ColumnSchema { group_by, value };
    let ingest = stats::ingest_csv(file, &schema, config.strict)?;
    let summaries = if ingest.records.is_empty() {
        Vec::new()
    } else {
        stats::group_summary(&ingest.records)?
    };

    let mut report = Report::new(config.grid_size);
    report.push(stats::summaries_to_table(&summaries));
    if !ingest.diagnostics.is_empty() {
        let mut table = ReportTable::new("row_diagnostics", "Rejected data rows");
        for d in &ingest.diagnostics {
            table.rows.push(
                ReportRow::absent(format!("line_{}", d.line)).with_reference(d.message.clone()),
            );
        }
        report.push(table);
    }
    report.push(stats::reference_to_table());
    emit(&report, config)?;
    Ok(EXIT_OK)
}

fn cmd_series(
    kind: &str,
    b_indices: Option<Vec<usize>>,
    lambdas: Option<Vec<f64>>,
    config: &RunConfig,
) -> Result<u8, Failure> {
    let grid = grid_for(config)?;
    let params = SeriesParams { b_indices, lambdas };
    let series = suite::emit_series(kind, &params, &grid)?;
    let mut report = Report::new(grid.n_states());
    for table in suite::series_tables(&series) {
        report.push(table);
    }
    emit(&report, config)?;
    Ok(EXIT_OK)
}

#[derive(Clone, Copy)]
enum LengthUnit {
    Nanometer,
    Meter,
}

/// Parses a length with an optional unit suffix (nm, um, mm, cm, m).
/// Bare numbers take `default_unit`.
fn parse_length(input: &str, default_unit: LengthUnit) -> Result<f64, Failure> {
    let trimmed = input.trim();
    let (number, factor) = if let Some(v) = trimmed.strip_suffix("nm") {
        (v, 1e-9)
    } else if let Some(v) = trimmed.strip_suffix("um") {
        (v, 1e-6)
    } else if let Some(v) = trimmed.strip_suffix("mm") {
        (v, 1e-3)
    } else if let Some(v) = trimmed.strip_suffix("cm") {
        (v, 1e-2)
    } else if let Some(v) = trimmed.strip_suffix('m') {
        (v, 1.0)
    } else {
        let factor = match default_unit {
            LengthUnit::Nanometer => 1e-9,
            LengthUnit::Meter => 1.0,
        };
        (trimmed, factor)
    };
    let value: f64 = number
        .trim()
        .parse()
        .map_err(|_| Failure::usage(format!("cannot parse length '{input}'")))?;
    if !value.is_finite() || value <= 0.0 {
        return Err(Failure::usage(format!(
            "length must be positive and finite, got '{input}'"
        )));
    }
    Ok(value * factor)
}

fn emit(report: &Report, config: &RunConfig) -> Result<(), Failure> {
    let format: Format = config.format.into();
    match (&config.output, format) {
        (None, _) => {
            let doc = report.render(format);
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(doc.as_bytes())
                .map_err(|e| Failure::io(e.to_string()))?;
        }
        (Some(path), Format::Csv) => {
            // one file per table
            fs::create_dir_all(path).map_err(|e| Failure::io(e.to_string()))?;
            for (id, csv) in report.to_csv_tables() {
                let name = sanitize_file_name(&id);
                fs::write(path.join(format!("{name}.csv")), csv)
                    .map_err(|e| Failure::io(e.to_string()))?;
            }
        }
        (Some(path), _) => {
            fs::write(path, report.render(format)).map_err(|e| Failure::io(e.to_string()))?;
        }
    }
    Ok(())
}

fn sanitize_file_name(id: &str) -> String {
    id.chars()
        .map(|c| {
            if c.is_ascii_alphanumeric() || c == '-' || c == '_' || c == '.' {
                c
            } else {
                '_'
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn length_parsing() {
        assert!((parse_length("0.01mm", LengthUnit::Meter).unwrap() - 1e-5).abs() < 1e-20);
        assert!((parse_length("2.0m", LengthUnit::Meter).unwrap() - 2.0).abs() < 1e-15);
        assert!((parse_length("485", LengthUnit::Nanometer).unwrap() - 485e-9).abs() < 1e-20);
        assert!((parse_length("485nm", LengthUnit::Nanometer).unwrap() - 485e-9).abs() < 1e-20);
        assert!((parse_length("1um", LengthUnit::Meter).unwrap() - 1e-6).abs() < 1e-20);
        assert!((parse_length("3cm", LengthUnit::Meter).unwrap() - 0.03).abs() < 1e-15);
        assert!(parse_length("xyz", LengthUnit::Meter).is_err());
        assert!(parse_length("-2m", LengthUnit::Meter).is_err());
    }

    #[test]
    fn file_name_sanitization() {
        assert_eq!(sanitize_file_name("fig2/b1(0)/qm"), "fig2_b1_0__qm");
        assert_eq!(sanitize_file_name("pp_matrix"), "pp_matrix");
    }

    #[test]
    fn cli_parses_documented_invocations() {
        use clap::CommandFactory;
        Cli::command().debug_assert();

        for argv in [
            vec!["chsh-lab", "tables", "--lambda-index", "1"],
            vec!["chsh-lab", "scan", "--theta", "11.25"],
            vec!["chsh-lab", "scan", "--setting", "0,22.5,45,67.5"],
            vec!["chsh-lab", "compare", "--theta", "22.5", "--mc-samples", "1000", "--seed", "7"],
            vec!["chsh-lab", "breakdown", "--theta", "22.5"],
            vec!["chsh-lab", "suite", "--format", "markdown"],
            vec![
                "chsh-lab",
                "diffract",
                "--d",
                "0.01mm",
                "--x",
                "2.0m",
                "--orders",
                "2",
                "--wavelengths",
                "485,565,750nm",
            ],
            vec!["chsh-lab", "series", "--kind", "fig3"],
        ] {
            assert!(Cli::try_parse_from(&argv).is_ok(), "{argv:?}");
        }
    }

    #[test]
    fn scan_requires_exactly_one_selector() {
        assert!(Cli::try_parse_from(["chsh-lab", "scan"]).is_err());
        assert!(Cli::try_parse_from([
            "chsh-lab", "scan", "--theta", "1", "--setting", "0,1,2,3"
        ])
        .is_err());
    }

    #[test]
    fn unknown_format_is_rejected_at_parse_time() {
        let err = Cli::try_parse_from(["chsh-lab", "suite", "--format", "yaml"]).unwrap_err();
        assert_eq!(err.exit_code(), 2);
    }
}
