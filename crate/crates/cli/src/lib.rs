//! Command-line front end for `taylorstab-core`: argument parsing, CSV/JSON/SVG
//! emission and the on-disk certificate cache.

mod cache;
mod commands;
mod format;
mod svg;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

pub use cache::Cache;
pub use format::{dyadic_from_decimal, exact_decimal, parse_decimal, parse_n_list};

/// Version string mixed into every cache key.
pub const CODE_VERSION: &str = env!("CARGO_PKG_VERSION");

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_EXHAUSTED: i32 = 2;
pub const EXIT_USAGE: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "taylorstab", version, about = "Certified stability-region computations for Taylor partial sums")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Precision cap in bits for interval evaluation (at least 64).
    #[arg(long, global = true, default_value_t = 128)]
    pub precision_bits: u32,
    /// Branch-and-bound tolerance, e.g. `1e-6`.
    #[arg(long, global = true, default_value = "1e-6")]
    pub tol: String,
    /// Directory for cached certificates.
    #[arg(long, global = true)]
    pub cache_dir: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Worker threads; defaults to the number of CPUs.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Maximum number of boxes per branch-and-bound run.
    #[arg(long, global = true)]
    pub budget: Option<u64>,
    /// Output file, written atomically; stdout when absent.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Svg,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Extremal radii of S_n with the printed-table display column.
    Tables(commands::tables::TablesArgs),
    /// Components of V_n^+ on the imaginary axis.
    Slices(commands::slices::SlicesArgs),
    /// Boundary abscissa x_n^min(y) next to the imaginary axis.
    Trace(commands::trace::TraceArgs),
    /// Extent of S_n along rays in the left half-plane.
    Radial(commands::radial::RadialArgs),
    /// Float-grade complex zeros of a polynomial family.
    Zeros(commands::zeros::ZerosArgs),
    /// Level curves of |z e^(1-z)|.
    SzegoContours(commands::contours::ContourArgs),
    /// Runs the named regression checks and writes a JSON report.
    Verify(commands::verify::VerifyArgs),
}

/// Why a command stopped early.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Exhausted(String),
    Io(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Usage(_) | Failure::Io(_) => EXIT_USAGE,
            Failure::Exhausted(_) => EXIT_EXHAUSTED,
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Usage(m) => write!(f, "usage error: {m}"),
            Failure::Exhausted(m) => write!(f, "exhausted: {m}"),
            Failure::Io(m) => write!(f, "i/o error: {m}"),
        }
    }
}

impl From<taylorstab_core::Error> for Failure {
    fn from(e: taylorstab_core::Error) -> Self {
        use taylorstab_core::Error as E;
        match e {
            E::InvalidInput(_) | E::UnknownCheck(_) => Failure::Usage(e.to_string()),
            _ => Failure::Exhausted(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

/// Rendered output plus the exit code it implies.
pub struct Outcome {
    pub bytes: Vec<u8>,
    pub code: i32,
}

impl Outcome {
    fn ok(bytes: impl Into<Vec<u8>>) -> Outcome {
        Outcome { bytes: bytes.into(), code: EXIT_OK }
    }
}

/// Parses `args` (including the program name), runs the command and returns
/// the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
        }
    };
    match execute(&cli) {
        Ok(out) => match emit(cli.global.output.as_deref(), &out.bytes) {
            Ok(()) => out.code,
            Err(e) => {
                eprintln!("{}", Failure::from(e));
                EXIT_USAGE
            }
        },
        Err(f) => {
            eprintln!("{f}");
            f.code()
        }
    }
}

/// Runs the parsed command without writing anything.
pub fn execute(cli: &Cli) -> Result<Outcome, Failure> {
    let ctx = commands::Ctx::new(&cli.global)?;
    match &cli.command {
        Command::Tables(a) => commands::tables::run(&ctx, a),
        Command::Slices(a) => commands::slices::run(&ctx, a),
        Command::Trace(a) => commands::trace::run(&ctx, a),
        Command::Radial(a) => commands::radial::run(&ctx, a),
        Command::Zeros(a) => commands::zeros::run(&ctx, a),
        Command::SzegoContours(a) => commands::contours::run(&ctx, a),
        Command::Verify(a) => commands::verify::run(&ctx, a),
    }
}

fn emit(path: Option<&Path>, bytes: &[u8]) -> std::io::Result<()> {
    match path {
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(bytes)?;
            out.flush()
        }
        Some(p) => write_atomic(p, bytes),
    }
}

/// Writes through a temporary file in the target directory, then renames.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> std::io::Result<()> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d.to_path_buf(),
        _ => PathBuf::from("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(&dir)?;
    tmp.write_all(bytes)?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}
