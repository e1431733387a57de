//! Command-line front end.
//!
//! [`run`] takes the argument list and output streams explicitly so tests can
//! drive it without spawning a process.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use georeg_core::dataio::{self, ColumnSelector, DatasetSpec};
use georeg_core::oracle::{self, SearchBox};
use georeg_core::{fit, fixtures, render_report, render_svg, Error, Format, PointCloud, Report};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DATA: i32 = 3;
pub const EXIT_VERIFY: i32 = 4;

/// Largest slope disagreement `--verify` tolerates between the projection
/// fit and the brute-force search.
pub const VERIFY_TOLERANCE: f64 = 1e-5;

#[derive(Debug, Parser)]
#[command(name = "georeg", version, about = "Fit a least-squares line by orthogonal projection")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Fit a dataset and print the report.
    Fit {
        #[command(flatten)]
        data: DataArgs,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
        /// Cross-check the slope against a brute-force search; exit 4 on mismatch.
        #[arg(long)]
        verify: bool,
    },
    /// Write an SVG scatter plot with the fitted line.
    Plot {
        #[command(flatten)]
        data: DataArgs,
        /// Destination file; standard output when omitted.
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long, default_value_t = 640)]
        width: u32,
        #[arg(long, default_value_t = 480)]
        height: u32,
    },
    /// Compare the projection fit with the brute-force oracle.
    Verify {
        #[command(flatten)]
        data: DataArgs,
    },
    /// Write the bundled sample datasets to a directory.
    Examples {
        #[arg(long, default_value = ".")]
        output: PathBuf,
    },
}

#[derive(Debug, Args)]
struct DataArgs {
    #[arg(long)]
    input: PathBuf,
    /// Column name or zero-based index.
    #[arg(long, default_value = "0")]
    x_col: ColumnSelector,
    #[arg(long, default_value = "1")]
    y_col: ColumnSelector,
    #[arg(long, default_value_t = ',')]
    delimiter: char,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

impl From<OutputFormat> for Format {
    fn from(f: OutputFormat) -> Self {
        match f {
            OutputFormat::Text => Format::Text,
            OutputFormat::Json => Format::Json,
        }
    }
}

/// Exit code for a library error.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::SameColumn | Error::PlotTooSmall { .. } => EXIT_USAGE,
        Error::BoxTooSmall { .. } | Error::InvalidSearchBox(_) => EXIT_VERIFY,
        Error::DimensionMismatch { .. }
        | Error::EmptyVector
        | Error::NonFinite { .. }
        | Error::TooFewPoints { .. }
        | Error::DegenerateX
        | Error::DegenerateY
        | Error::AngleOutOfRange(_)
        | Error::Parse { .. }
        | Error::EmptyDataset
        | Error::ColumnNotFound(_)
        | Error::RaggedRow { .. } => EXIT_DATA,
    }
}

#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        Failure {
            code: exit_code(&err),
            message: err.to_string(),
        }
    }
}

fn io_failure(path: &Path, err: std::io::Error) -> Failure {
    Failure {
        code: EXIT_DATA,
        message: format!("{}: {err}", path.display()),
    }
}

fn load(data: &DataArgs) -> Result<PointCloud, Failure> {
    let content = fs::read_to_string(&data.input).map_err(|e| io_failure(&data.input, e))?;
    let spec = DatasetSpec {
        delimiter: data.delimiter,
        has_header: None,
        x_col: data.x_col.clone(),
        y_col: data.y_col.clone(),
    };
    dataio::parse(&spec, &content).map_err(|e| Failure {
        code: exit_code(&e),
        message: format!("{}: {e}", data.input.display()),
    })
}

struct OracleCheck {
    slope: f64,
    intercept: f64,
    oracle_slope: f64,
    oracle_intercept: f64,
    gradient: (f64, f64),
}

impl OracleCheck {
    fn slope_error(&self) -> f64 {
        (self.slope - self.oracle_slope).abs()
    }

    fn passed(&self) -> bool {
        self.slope_error() <= VERIFY_TOLERANCE
    }
}

fn oracle_check(cloud: &PointCloud) -> Result<OracleCheck, Failure> {
    let f = fit(cloud)?;
    let (oracle_slope, oracle_intercept) = oracle::grid_search_fit(cloud, &SearchBox::around(f.slope, f.intercept))?;
    let h = 1e-6 * f.slope.abs().max(f.intercept.abs()).max(1.0);
    Ok(OracleCheck {
        slope: f.slope,
        intercept: f.intercept,
        oracle_slope,
        oracle_intercept,
        gradient: oracle::gradient_check(cloud, f.slope, f.intercept, h),
    })
}

fn write_out(out: &mut dyn Write, text: &str) -> Result<(), Failure> {
    out.write_all(text.as_bytes()).map_err(|e| Failure {
        code: EXIT_DATA,
        message: format!("cannot write output: {e}"),
    })
}

fn execute(cli: Cli, out: &mut dyn Write) -> Result<i32, Failure> {
    match cli.command {
        Command::Fit { data, format, verify } => {
            let cloud = load(&data)?;
            let report = Report::build(&cloud)?;
            write_out(out, &render_report(&report, format.into()))?;
            if verify {
                let check = oracle_check(&cloud)?;
                if !check.passed() {
                    return Err(Failure {
                        code: EXIT_VERIFY,
                        message: format!(
                            "verification failed: slope {} vs brute-force {} (|diff| {:e} > {:e})",
                            check.slope,
                            check.oracle_slope,
                            check.slope_error(),
                            VERIFY_TOLERANCE
                        ),
                    });
                }
            }
            Ok(EXIT_OK)
        }
        Command::Plot {
            data,
            output,
            width,
            height,
        } => {
            let cloud = load(&data)?;
            let f = fit(&cloud)?;
            let svg = render_svg(&cloud, &f, width, height)?;
            match output {
                Some(path) => fs::write(&path, svg).map_err(|e| io_failure(&path, e))?,
                None => write_out(out, &svg)?,
            }
            Ok(EXIT_OK)
        }
        Command::Verify { data } => {
            let cloud = load(&data)?;
            let check = oracle_check(&cloud)?;
            let status = if check.passed() { "ok" } else { "FAILED" };
            let text = format!(
                "projection:  a = {}, b = {}\n\
                 grid search: a = {}, b = {}\n\
                 |slope diff|: {:e} (tolerance {:e})\n\
                 gradient at fit: ({:e}, {:e})\n\
                 verify: {status}\n",
                check.slope,
                check.intercept,
                check.oracle_slope,
                check.oracle_intercept,
                check.slope_error(),
                VERIFY_TOLERANCE,
                check.gradient.0,
                check.gradient.1,
            );
            write_out(out, &text)?;
            Ok(if check.passed() { EXIT_OK } else { EXIT_VERIFY })
        }
        Command::Examples { output } => {
            fs::create_dir_all(&output).map_err(|e| io_failure(&output, e))?;
            for (name, content) in fixtures::ALL {
                let path = output.join(name);
                fs::write(&path, content).map_err(|e| io_failure(&path, e))?;
                write_out(out, &format!("{}\n", path.display()))?;
            }
            Ok(EXIT_OK)
        }
    }
}

/// Runs the command line `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(rendered.as_bytes())
            } else {
                out.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    match execute(cli, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}
