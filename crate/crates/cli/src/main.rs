//! `prehull` command line: generate datasets, compute hulls with or without
//! the interior-point prefilter, and benchmark both pipelines.
//!
//! Exit codes: 0 success, 1 usage error, 2 I/O or parse error, 3 hull
//! mismatch between the filtered and direct pipelines.

mod bench;

use std::fs::File;
use std::io::{BufWriter, Write};
use std::num::NonZeroUsize;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

use prehull::datasets::{load_obj_projected, load_xy, DatasetError, DatasetSpec};
use prehull::filter::{prefilter, FilterReport};
use prehull::geom::PointSet;
use prehull::hull::monotone_chain;

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Dataset(#[from] DatasetError),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("hull mismatch: filtered and direct rings differ for {dataset}")]
    HullMismatch { dataset: String },
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Dataset(_) | CliError::Io { .. } => 2,
            CliError::HullMismatch { .. } => 3,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    UniformSquare,
    UniformDisk,
}

impl Family {
    fn spec(self, size: usize, seed: u64) -> DatasetSpec {
        match self {
            Family::UniformSquare => DatasetSpec::UniformSquare { size, seed },
            Family::UniformDisk => DatasetSpec::UniformDisk { size, seed },
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Csv,
    Json,
}

#[derive(Parser)]
#[command(
    name = "prehull",
    version,
    about = "Convex hulls with an interior-point prefilter"
)]
struct Cli {
    /// Worker threads for the data-parallel filter phases (default: all cores).
    /// Results are identical for any thread count; only timings change.
    #[arg(long, global = true)]
    threads: Option<NonZeroUsize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a dataset and write it as `x y` text.
    Generate {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        size: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Output file path.
        #[arg(long)]
        out: PathBuf,
    },
    /// Print the canonical hull ring of a point file as `x y` text.
    ///
    /// Files ending in `.obj` load as OBJ vertices projected onto the XY
    /// plane; everything else loads as `x y` text.
    Hull {
        #[arg(long)]
        input: PathBuf,
        /// Discard interior points before the hull pass; filter statistics
        /// go to stderr.
        #[arg(long)]
        filter: bool,
        /// Rotation angles in degrees for the extreme-point search.
        #[arg(long, value_delimiter = ',', default_values_t = [0.0, 30.0, 45.0, 60.0])]
        angles: Vec<f64>,
    },
    /// Benchmark the hull with and without the prefilter and emit one report
    /// row per dataset.
    Bench {
        #[arg(long, value_enum)]
        family: Option<Family>,
        /// Dataset sizes, comma separated; each becomes one report row.
        #[arg(long = "size", value_delimiter = ',')]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Point files to benchmark alongside (or instead of) generated sets.
        #[arg(long)]
        input: Vec<PathBuf>,
        /// Timed repetitions per dataset; the reported time is their median.
        /// One extra warm-up run is excluded.
        #[arg(long, default_value_t = NonZeroUsize::new(3).unwrap())]
        reps: NonZeroUsize,
        #[arg(long, value_delimiter = ',', default_values_t = [0.0, 30.0, 45.0, 60.0])]
        angles: Vec<f64>,
        #[arg(long, value_enum, default_value_t = ReportFormat::Csv)]
        format: ReportFormat,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            eprint!("{e}");
            return ExitCode::from(1);
        }
    };

    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.threads {
        Some(threads) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(threads.get())
                .build()
                .map_err(|e| CliError::Usage(format!("cannot build thread pool: {e}")))?;
            pool.install(|| dispatch(cli.command))
        }
        None => dispatch(cli.command),
    }
}

fn dispatch(command: Command) -> Result<(), CliError> {
    match command {
        Command::Generate {
            family,
            size,
            seed,
            out,
        } => cmd_generate(family, size, seed, &out),
        Command::Hull {
            input,
            filter,
            angles,
        } => {
            validate_angles(&angles)?;
            cmd_hull(&input, filter, &angles)
        }
        Command::Bench {
            family,
            sizes,
            seed,
            input,
            reps,
            angles,
            format,
        } => {
            validate_angles(&angles)?;
            cmd_bench(family, &sizes, seed, &input, reps.get(), &angles, format)
        }
    }
}

fn validate_angles(angles: &[f64]) -> Result<(), CliError> {
    if angles.is_empty() {
        return Err(CliError::Usage("--angles needs at least one value".into()));
    }
    if let Some(bad) = angles.iter().find(|a| !a.is_finite()) {
        return Err(CliError::Usage(format!(
            "--angles value {bad} is not finite"
        )));
    }
    Ok(())
}

fn cmd_generate(family: Family, size: usize, seed: u64, out: &Path) -> Result<(), CliError> {
    let spec = family.spec(size, seed);
    let points = spec.load()?;

    let io_err = |source| CliError::Io {
        path: out.display().to_string(),
        source,
    };
    let mut writer = BufWriter::new(File::create(out).map_err(io_err)?);
    write_points(
        &mut writer,
        &points,
        Some(&format!("# {} size={}", spec.label(), size)),
    )
    .map_err(io_err)?;
    writer.flush().map_err(io_err)?;
    eprintln!("wrote {} points to {}", points.len(), out.display());
    Ok(())
}

fn cmd_hull(input: &Path, filter: bool, angles: &[f64]) -> Result<(), CliError> {
    let points = load_points(input)?;

    let hull = if filter {
        let (survivors, report) = prefilter(&points, angles);
        print_filter_report(&report);
        monotone_chain(&survivors)
    } else {
        monotone_chain(&points)
    };

    eprintln!(
        "hull: n={} vertices={} elapsed={:.3}ms",
        points.len(),
        hull.polygon.len(),
        hull.elapsed.as_secs_f64() * 1e3
    );
    let stdout = std::io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    write_points_ring(&mut out, &hull)
        .and_then(|_| out.flush())
        .map_err(|source| CliError::Io {
            path: "<stdout>".into(),
            source,
        })
}

fn cmd_bench(
    family: Option<Family>,
    sizes: &[usize],
    seed: u64,
    inputs: &[PathBuf],
    reps: usize,
    angles: &[f64],
    format: ReportFormat,
) -> Result<(), CliError> {
    let mut specs: Vec<DatasetSpec> = Vec::new();
    match family {
        Some(family) => {
            if sizes.is_empty() {
                return Err(CliError::Usage("--family needs --size".into()));
            }
            specs.extend(sizes.iter().map(|&size| family.spec(size, seed)));
        }
        None if !sizes.is_empty() => {
            return Err(CliError::Usage("--size needs --family".into()));
        }
        None => {}
    }
    specs.extend(inputs.iter().map(|path| file_spec(path)));
    if specs.is_empty() {
        return Err(CliError::Usage(
            "nothing to benchmark: give --family with --size, or --input".into(),
        ));
    }

    let mut records = Vec::with_capacity(specs.len());
    for spec in &specs {
        records.push(bench::bench_spec(spec, reps, angles)?);
    }

    let stdout = std::io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    match format {
        ReportFormat::Csv => bench::emit_csv(&mut out, &records),
        ReportFormat::Json => bench::emit_json(&mut out, &records),
    }
    .and_then(|_| out.flush())
    .map_err(|source| CliError::Io {
        path: "<stdout>".into(),
        source,
    })
}

fn file_spec(path: &Path) -> DatasetSpec {
    let is_obj = path
        .extension()
        .is_some_and(|ext| ext.eq_ignore_ascii_case("obj"));
    if is_obj {
        DatasetSpec::FileObjProjected {
            path: path.to_path_buf(),
        }
    } else {
        DatasetSpec::FileXy {
            path: path.to_path_buf(),
        }
    }
}

fn load_points(path: &Path) -> Result<PointSet, CliError> {
    let is_obj = path
        .extension()
        .is_some_and(|ext| ext.eq_ignore_ascii_case("obj"));
    let points = if is_obj {
        let points = load_obj_projected(path)?;
        if points.is_empty() {
            eprintln!("warning: {}: no vertex records found", path.display());
        }
        points
    } else {
        load_xy(path)?
    };
    Ok(points)
}

fn print_filter_report(report: &FilterReport) {
    eprintln!(
        "filter: input={} extremes={} survivors={} remaining={:.4}% skipped={}",
        report.input_size,
        report.extreme_count,
        report.survivor_count,
        report.remaining_fraction * 100.0,
        report.skipped
    );
    eprintln!(
        "filter timings: extremes={:.3}ms polygon={:.3}ms discard={:.3}ms",
        report.timings.extremes.as_secs_f64() * 1e3,
        report.timings.polygon.as_secs_f64() * 1e3,
        report.timings.discard.as_secs_f64() * 1e3
    );
}

fn write_points<W: Write>(
    out: &mut W,
    points: &PointSet,
    header: Option<&str>,
) -> std::io::Result<()> {
    if let Some(header) = header {
        writeln!(out, "{header}")?;
    }
    for p in points.iter() {
        writeln!(out, "{} {}", p.x, p.y)?;
    }
    Ok(())
}

fn write_points_ring<W: Write>(out: &mut W, hull: &prehull::HullResult) -> std::io::Result<()> {
    for v in hull.polygon.vertices() {
        writeln!(out, "{} {}", v.x, v.y)?;
    }
    Ok(())
}
