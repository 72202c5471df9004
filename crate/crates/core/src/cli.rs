//! Command-line front end.
//!
//! Exit codes: 0 success, 1 a check or embedded assertion failed, 2 input
//! could not be parsed, 3 a precondition was violated, 4 unknown repro name.

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::analysis::{
    check_infimum_preservation, check_lipschitz_seeded, check_midpoint_convex_seeded, check_minimizer_preservation,
    check_monotone_in_n, CheckReport, DEFAULT_SEED,
};
use crate::envelope::{envelope, envelope_sequence, inf_conv_bruteforce, EnvelopeResult, Kernel, Witnesses};
use crate::error::{Error, Result};
use crate::extension::{mcshane_extend, verify_minimizer_location, SampleSet};
use crate::grid::io::format_value;
use crate::grid::{Axis, Grid, GridFunction, NormKind};
use crate::{instances, repro};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;
pub const EXIT_UNKNOWN_REPRO: i32 = 4;

const ARGMIN_TOL: f64 = 1e-9;
const ORACLE_LIMIT: usize = 1 << 12;
const BENCH_RUNS: usize = 5;
/// Timings below this are too noisy to assert a scaling ratio on.
const BENCH_NOISE_FLOOR: f64 = 1e-3;

#[derive(Debug, Parser)]
#[command(name = "infconv", version, about = "Inf-convolution envelopes on finite grids")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KernelKind {
    Conical,
    Quadratic,
}

#[derive(Debug, clap::Args)]
pub struct KernelArgs {
    #[arg(long, value_enum, default_value = "conical")]
    pub kernel: KernelKind,
    #[arg(long, default_value_t = 1.0)]
    pub k: f64,
    #[arg(long, default_value = "l2")]
    pub norm: NormKind,
}

impl KernelArgs {
    fn kernel(&self) -> Kernel {
        match self.kernel {
            KernelKind::Conical => Kernel::conical(self.k, self.norm),
            KernelKind::Quadratic => Kernel::quadratic(self.k),
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute an envelope of a grid function file.
    #[command(allow_negative_numbers = true)]
    Envelope {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: PathBuf,
        #[command(flatten)]
        kernel: KernelArgs,
        /// Use the brute-force reference instead of the fast path.
        #[arg(long)]
        oracle: bool,
    },
    /// Run property checks and print a JSON report array.
    #[command(allow_negative_numbers = true)]
    Check {
        #[arg(long)]
        input: PathBuf,
        /// Precomputed envelope; computed from the kernel flags if absent.
        #[arg(long)]
        envelope: Option<PathBuf>,
        /// Directory of envelope files f_1, f_2, ... in filename order.
        #[arg(long)]
        sequence: Option<PathBuf>,
        #[arg(long, value_delimiter = ',', default_value = "prop25")]
        checks: Vec<String>,
        #[arg(long, default_value_t = 5)]
        n_max: usize,
        #[command(flatten)]
        kernel: KernelArgs,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Extend Lipschitz samples to a grid.
    #[command(allow_negative_numbers = true)]
    Extend {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: PathBuf,
        #[arg(long, value_delimiter = ',', required = true, allow_hyphen_values = true)]
        origin: Vec<f64>,
        #[arg(long, value_delimiter = ',', required = true)]
        spacing: Vec<f64>,
        #[arg(long, value_delimiter = ',', required = true)]
        counts: Vec<usize>,
    },
    /// Run a reproduction: example16, weierstrass, norm-attain or remark26.
    #[command(allow_negative_numbers = true)]
    Repro {
        name: String,
        /// Directory for the JSON report and CSV curves.
        #[arg(long, default_value = ".")]
        output: PathBuf,
        #[arg(long, value_delimiter = ',', default_value = "4,10,100,1000")]
        m: Vec<usize>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        coeffs: Option<Vec<f64>>,
        #[arg(long, default_value_t = 1.0)]
        radius: f64,
        #[arg(long, default_value_t = 2)]
        dim: usize,
        #[arg(long, default_value_t = 5)]
        n_max: usize,
        #[arg(long, default_value_t = 1.0)]
        k: f64,
        #[arg(long, default_value = "l2")]
        norm: NormKind,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Time the fast path against the reference and write a CSV.
    #[command(allow_negative_numbers = true)]
    Bench {
        /// Points per axis.
        #[arg(
            long,
            value_delimiter = ',',
            default_value = "1024,2048,4096,8192,16384,32768,65536,131072,262144,524288,1048576"
        )]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 1)]
        dim: usize,
        #[command(flatten)]
        kernel: KernelArgs,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

/// Parses arguments and runs; returns the process exit code.
pub fn run_from<I, T>(args: I) -> i32
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
                _ => EXIT_PARSE,
            };
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) | Error::Io(_) | Error::Json(_) => EXIT_PARSE,
        _ => EXIT_PRECONDITION,
    }
}

pub fn run(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Envelope { input, output, kernel, oracle } => run_envelope(&input, &output, &kernel, oracle),
        Command::Check { input, envelope, sequence, checks, n_max, kernel, seed, output } => run_check(
            &input,
            envelope.as_deref(),
            sequence.as_deref(),
            &checks,
            n_max,
            &kernel,
            seed,
            output.as_deref(),
        ),
        Command::Extend { input, output, origin, spacing, counts } => {
            run_extend(&input, &output, &origin, &spacing, &counts)
        }
        Command::Repro { name, output, m, coeffs, radius, dim, n_max, k, norm, seed } => {
            let params = ReproParams { m, coeffs, radius, dim, n_max, k, norm, seed };
            run_repro(&name, &output, &params)
        }
        Command::Bench { sizes, dim, kernel, seed, output } => run_bench(&sizes, dim, &kernel, seed, output.as_deref()),
    }
}

fn read_function(path: &Path) -> Result<GridFunction> {
    GridFunction::from_json(&fs::read_to_string(path)?)
}

/// `out.json` → `out.argmin.csv`.
pub fn argmin_path(output: &Path) -> PathBuf {
    let stem = output.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    output.with_file_name(format!("{stem}.argmin.csv"))
}

/// One row per lattice point: coordinates, witness index and witness point.
pub fn argmin_csv(result: &EnvelopeResult) -> String {
    let grid = result.grid();
    let d = grid.dim();
    let mut s = String::from("index");
    for a in 1..=d {
        s.push_str(&format!(",x{a}"));
    }
    s.push_str(",value,argmin");
    for a in 1..=d {
        s.push_str(&format!(",y{a}"));
    }
    s.push('\n');
    for (x, arg) in result.argmin.iter().enumerate() {
        s.push_str(&x.to_string());
        for c in grid.coordinate(x) {
            s.push_str(&format!(",{c}"));
        }
        s.push_str(&format!(",{}", format_value(result.values()[x])));
        match (arg, &result.witnesses) {
            (Some(w), Witnesses::Grid) => {
                s.push_str(&format!(",{w}"));
                for c in grid.coordinate(*w) {
                    s.push_str(&format!(",{c}"));
                }
            }
            (Some(w), Witnesses::Points(pts)) => {
                s.push_str(&format!(",{w}"));
                for c in &pts[*w] {
                    s.push_str(&format!(",{c}"));
                }
            }
            (None, _) => s.push_str(&",".repeat(d + 1)),
        }
        s.push('\n');
    }
    s
}

fn write_result(output: &Path, result: &EnvelopeResult) -> Result<()> {
    fs::write(output, result.envelope.to_json())?;
    fs::write(argmin_path(output), argmin_csv(result))?;
    Ok(())
}

pub fn run_envelope(input: &Path, output: &Path, kernel: &KernelArgs, oracle: bool) -> Result<i32> {
    let f = read_function(input)?;
    let k = kernel.kernel();
    let result = if oracle {
        if !(k.k() > 0.0 && k.k().is_finite()) {
            return Err(Error::BadParameter(k.k()));
        }
        if !f.is_proper() {
            return Err(Error::NonProper);
        }
        inf_conv_bruteforce(&f, k)
    } else {
        envelope(&f, k)?
    };
    write_result(output, &result)?;
    Ok(EXIT_OK)
}

fn as_result(envelope: GridFunction) -> EnvelopeResult {
    let argmin = vec![None; envelope.len()];
    EnvelopeResult { envelope, argmin, witnesses: Witnesses::Grid }
}

fn read_sequence(dir: &Path) -> Result<Vec<EnvelopeResult>> {
    let mut paths: Vec<PathBuf> = fs::read_dir(dir)?.map(|e| e.map(|e| e.path())).collect::<std::io::Result<_>>()?;
    paths.retain(|p| p.extension().is_some_and(|e| e == "json"));
    paths.sort();
    if paths.is_empty() {
        return Err(Error::Parse(format!("no .json files in {}", dir.display())));
    }
    paths.iter().map(|p| read_function(p).map(as_result)).collect()
}

#[allow(clippy::too_many_arguments)]
pub fn run_check(
    input: &Path,
    envelope_path: Option<&Path>,
    sequence: Option<&Path>,
    checks: &[String],
    n_max: usize,
    kernel: &KernelArgs,
    seed: u64,
    output: Option<&Path>,
) -> Result<i32> {
    let f = read_function(input)?;
    let env = || -> Result<EnvelopeResult> {
        match envelope_path {
            Some(p) => {
                let e = read_function(p)?;
                if e.grid() != f.grid() {
                    return Err(Error::GridMismatch);
                }
                Ok(as_result(e))
            }
            None if f.has_neg_inf() => Ok(inf_conv_bruteforce(&f, kernel.kernel())),
            None => envelope(&f, kernel.kernel()),
        }
    };
    let mut reports: Vec<CheckReport> = Vec::new();
    for name in checks {
        match name.as_str() {
            "prop25" => {
                let e = env()?;
                reports.push(check_infimum_preservation(&f, &e));
                reports.push(check_minimizer_preservation(&f, &e, ARGMIN_TOL));
            }
            "infimum" => reports.push(check_infimum_preservation(&f, &env()?)),
            "minimizers" => reports.push(check_minimizer_preservation(&f, &env()?, ARGMIN_TOL)),
            "lipschitz" => reports.push(check_lipschitz_seeded(&f, kernel.k, kernel.norm, seed)?),
            "convex" => reports.push(check_midpoint_convex_seeded(&f, seed)),
            "monotone" => {
                let seq = match sequence {
                    Some(dir) => read_sequence(dir)?,
                    None => envelope_sequence(&f, n_max, kernel.norm)?,
                };
                if seq.iter().any(|e| e.grid() != f.grid()) {
                    return Err(Error::GridMismatch);
                }
                reports.push(check_monotone_in_n(&seq, &f));
            }
            other => return Err(Error::Parse(format!("unknown check '{other}'"))),
        }
    }
    let text = serde_json::to_string_pretty(&reports)?;
    match output {
        Some(p) => fs::write(p, text)?,
        None => println!("{text}"),
    }
    Ok(if reports.iter().all(|r| r.passed) { EXIT_OK } else { EXIT_CHECK_FAILED })
}

pub fn run_extend(input: &Path, output: &Path, origin: &[f64], spacing: &[f64], counts: &[usize]) -> Result<i32> {
    let samples = SampleSet::from_json(&fs::read_to_string(input)?)?;
    if origin.len() != spacing.len() || origin.len() != counts.len() {
        return Err(Error::Parse("origin, spacing and counts need the same length".into()));
    }
    let axes = origin.iter().zip(spacing).zip(counts).map(|((&o, &h), &n)| Axis::new(o, h, n)).collect();
    let grid = Grid::new(axes)?;
    let ext = mcshane_extend(&samples, &grid)?;
    write_result(output, &ext)?;
    match verify_minimizer_location(&samples, &ext, ARGMIN_TOL) {
        Ok(r) => {
            println!("{}", r.to_json());
            Ok(if r.passed { EXIT_OK } else { EXIT_CHECK_FAILED })
        }
        // samples between lattice points: the extension is still valid
        Err(Error::SamplesOffGrid(_)) => Ok(EXIT_OK),
        Err(e) => Err(e),
    }
}

#[derive(Debug, Clone)]
pub struct ReproParams {
    pub m: Vec<usize>,
    pub coeffs: Option<Vec<f64>>,
    pub radius: f64,
    pub dim: usize,
    pub n_max: usize,
    pub k: f64,
    pub norm: NormKind,
    pub seed: u64,
}

impl Default for ReproParams {
    fn default() -> Self {
        ReproParams {
            m: vec![4, 10, 100, 1000],
            coeffs: None,
            radius: 1.0,
            dim: 2,
            n_max: 5,
            k: 1.0,
            norm: NormKind::L2,
            seed: DEFAULT_SEED,
        }
    }
}

pub fn run_repro(name: &str, dir: &Path, p: &ReproParams) -> Result<i32> {
    let write = |file: &str, text: String| -> Result<()> {
        fs::create_dir_all(dir)?;
        fs::write(dir.join(file), text)?;
        Ok(())
    };
    let passed = match name {
        "example16" => {
            let r = repro::example16_paper_sequence(&p.m)?;
            write("example16.json", r.to_json())?;
            write("example16_minima.csv", r.minima_csv())?;
            if let Some(&m) = p.m.iter().min() {
                write("example16_nodes.csv", repro::example16_nodes_csv(m)?)?;
            }
            r.passed
        }
        "weierstrass" => {
            let grid = Grid::cube(2, -1.0, 1.0, 101)?;
            let limit = [0.3, -0.2];
            let inst = repro::WeierstrassInstance::spiral(&grid, limit, 0.6, 0.7, 1.1, 60, 40, p.norm)?;
            let (r, f) = repro::weierstrass_demo(&inst, &limit, p.norm, 8)?;
            write("weierstrass.json", r.to_json())?;
            write("weierstrass_values.csv", f.to_csv())?;
            r.passed
        }
        "norm-attain" => {
            let grid = Grid::cube(p.dim, -1.5 * p.radius, 1.5 * p.radius, if p.dim == 1 { 61 } else { 31 })?;
            let coeffs = match &p.coeffs {
                Some(c) => c.clone(),
                None => instances::coefficients(&mut ChaCha8Rng::seed_from_u64(p.seed), p.dim),
            };
            let r = repro::norm_attainment_demo(&coeffs, p.radius, &grid, p.norm, p.n_max)?;
            write("norm_attain.json", r.to_json())?;
            r.passed
        }
        "remark26" => {
            let grid = Grid::line(-1.0, 4.0, 0.25)?;
            let r = repro::remark26_counterexample(&grid, p.k)?;
            write("remark26.json", r.to_json())?;
            r.passed
        }
        other => {
            eprintln!("unknown repro '{other}'; expected example16, weierstrass, norm-attain or remark26");
            return Ok(EXIT_UNKNOWN_REPRO);
        }
    };
    println!("{name}: {}", if passed { "pass" } else { "FAIL" });
    Ok(if passed { EXIT_OK } else { EXIT_CHECK_FAILED })
}

fn median(mut xs: Vec<f64>) -> f64 {
    xs.sort_by(f64::total_cmp);
    xs[xs.len() / 2]
}

fn time_median(mut f: impl FnMut()) -> f64 {
    median(
        (0..BENCH_RUNS)
            .map(|_| {
                let t = Instant::now();
                f();
                t.elapsed().as_secs_f64()
            })
            .collect(),
    )
}

/// One row of a timing run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BenchRow {
    pub size: usize,
    pub points: usize,
    pub fast: f64,
    pub oracle: Option<f64>,
}

/// Median wall time of the fast path, and of the reference when the grid has
/// at most 2^12 points. `size` is points per axis.
pub fn bench_rows(sizes: &[usize], dim: usize, kernel: Kernel, seed: u64) -> Result<Vec<BenchRow>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    sizes
        .iter()
        .map(|&n| {
            let grid = Grid::new(vec![Axis::new(0.0, 1.0 / n as f64, n); dim])?;
            let f = instances::function_with_holes(&mut rng, &grid);
            envelope(&f, kernel)?;
            let fast = time_median(|| {
                envelope(&f, kernel).expect("validated above");
            });
            let oracle = (grid.len() <= ORACLE_LIMIT).then(|| {
                time_median(|| {
                    inf_conv_bruteforce(&f, kernel);
                })
            });
            Ok(BenchRow { size: n, points: grid.len(), fast, oracle })
        })
        .collect()
}

/// Consecutive rows whose runtime grows by more than 1.5x the growth in
/// points (3x per doubling). Rows below the timer noise floor are skipped.
pub fn scaling_violations(rows: &[BenchRow]) -> Vec<(usize, usize)> {
    rows.windows(2)
        .filter(|w| w[0].fast >= BENCH_NOISE_FLOOR && w[1].points > w[0].points)
        .filter(|w| w[1].fast / w[0].fast >= 1.5 * w[1].points as f64 / w[0].points as f64)
        .map(|w| (w[0].size, w[1].size))
        .collect()
}

pub fn run_bench(sizes: &[usize], dim: usize, kernel: &KernelArgs, seed: u64, output: Option<&Path>) -> Result<i32> {
    if sizes.is_empty() || sizes.contains(&0) || !(1..=3).contains(&dim) {
        return Err(Error::Parse("sizes must be positive and dim in 1..=3".into()));
    }
    let rows = bench_rows(sizes, dim, kernel.kernel(), seed)?;
    let mut csv = String::from("size,points,fast_seconds,oracle_seconds\n");
    for r in &rows {
        let oracle = r.oracle.map(|t| format!("{t:.6e}")).unwrap_or_default();
        csv.push_str(&format!("{},{},{:.6e},{}\n", r.size, r.points, r.fast, oracle));
    }
    match output {
        Some(p) => fs::write(p, &csv)?,
        None => print!("{csv}"),
    }
    let bad = scaling_violations(&rows);
    for (a, b) in &bad {
        eprintln!("scaling from {a} to {b} is worse than near-linear");
    }
    Ok(if bad.is_empty() { EXIT_OK } else { EXIT_CHECK_FAILED })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_flags() {
        let cli = Cli::try_parse_from([
            "infconv",
            "envelope",
            "--input",
            "a.json",
            "--output",
            "b.json",
            "--kernel",
            "quadratic",
            "--k",
            "2",
        ])
        .unwrap();
        let Command::Envelope { kernel, oracle, .. } = cli.command else { panic!() };
        assert_eq!(kernel.kernel, KernelKind::Quadratic);
        assert_eq!(kernel.k, 2.0);
        assert_eq!(kernel.norm, NormKind::L2);
        assert!(!oracle);

        let cli = Cli::try_parse_from(["infconv", "repro", "example16", "--m", "4,10"]).unwrap();
        let Command::Repro { name, m, seed, .. } = cli.command else { panic!() };
        assert_eq!((name.as_str(), m, seed), ("example16", vec![4, 10], 42));
        assert!(Cli::try_parse_from(["infconv", "envelope", "--input", "a", "--output", "b", "--norm", "l7"]).is_err());
    }

    #[test]
    fn argmin_path_naming() {
        assert_eq!(argmin_path(Path::new("out/env.json")), PathBuf::from("out/env.argmin.csv"));
        assert_eq!(argmin_path(Path::new("env")), PathBuf::from("env.argmin.csv"));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(exit_code(&Error::Parse("x".into())), EXIT_PARSE);
        assert_eq!(exit_code(&Error::NegInfUnsupported), EXIT_PRECONDITION);
        assert_eq!(run_repro("nope", Path::new("."), &ReproParams::default()).unwrap(), EXIT_UNKNOWN_REPRO);
    }

    #[test]
    fn scaling_rule() {
        let row = |size, fast| BenchRow { size, points: size, fast, oracle: None };
        assert!(scaling_violations(&[row(1, 0.01), row(2, 0.029)]).is_empty());
        assert_eq!(scaling_violations(&[row(1, 0.01), row(2, 0.031)]), vec![(1, 2)]);
        assert!(scaling_violations(&[row(1, 1e-5), row(2, 1e-4)]).is_empty());
    }
}
