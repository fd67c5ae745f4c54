//! Batch command-line front end: run verification suites, emit spectra,
//! export wavefunctions, run oracle comparisons and the relativistic layer.
//!
//! Exit codes: 0 success, 1 check failure (reports are still emitted),
//! 2 usage error, 3 numerical non-convergence.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_traits::ToPrimitive;

use focksym::config::{
    load_key_values, parse_models, parse_rational, parse_rational_list, resolve_output_path,
    GridSpec, OutputFormat, DEFAULT_SEED,
};
use focksym::dirac::{gap_halving_ratio, nonrel_limit_gap, rel_energy, reconstruct_xi};
use focksym::numoracle::{discretize, eigensolve, sample_points, NumError, RadialGrid};
use focksym::report::{
    format_float, format_rational, oracle_rows_to_csv, oracle_rows_to_json, reports_to_csv,
    reports_to_json, spectrum_rows_to_csv, spectrum_rows_to_json, write_wavefunction_csv,
    OracleRow, SpectrumRow, WavefunctionMeta,
};
use focksym::susy::{excited_state, ground_state, laguerre_state, Channel};
use focksym_core::models::{default_j_set, radial_reduce, standard_symbols, ModelId};
use focksym_core::opalg::{parse_radial, parse_three_d_with};
use focksym_core::scalar::{rat, ratio};
use focksym_core::symcheck::run_suite;
use focksym_core::{dirac as core_dirac, susy as core_susy};

#[derive(Parser)]
#[command(
    name = "focksym",
    version,
    about = "Verify hidden-symmetry and SUSY structure of three solvable spin-1/2 models"
)]
struct Cli {
    /// Flat key=value file supplying flag defaults (flags win).
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run all symbolic identity suites for the selected models.
    Verify(VerifyArgs),
    /// Emit the exact bound-state spectrum table.
    Spectrum(SpectrumArgs),
    /// Export a bound state on a radial grid as CSV.
    Wavefunction(WavefunctionArgs),
    /// Compare closed-form eigenvalues against the numerical eigensolver.
    Oracle(OracleArgs),
    /// Relativistic layer: reduction check, energy table, pointwise residuals.
    Dirac(DiracArgs),
    /// Parse an operator expression and print its canonical form.
    Parse(ParseArgs),
}

#[derive(Args)]
struct VerifyArgs {
    /// Model selector: ha, dipole, spin-orbit, or all.
    #[arg(long)]
    model: Option<String>,
    /// Quantum numbers for the shape-invariance checks (default per model).
    #[arg(long)]
    j: Option<String>,
    #[arg(long)]
    format: Option<String>,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct SpectrumArgs {
    #[arg(long)]
    model: Option<String>,
    /// Comma-separated quantum numbers in fraction syntax, e.g. 1/2,3/2.
    #[arg(long)]
    j: Option<String>,
    #[arg(long)]
    n_max: Option<u32>,
    #[arg(long)]
    mass: Option<String>,
    #[arg(long)]
    alpha: Option<String>,
    #[arg(long)]
    format: Option<String>,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct WavefunctionArgs {
    #[arg(long)]
    model: Option<String>,
    #[arg(long)]
    j: Option<String>,
    #[arg(long)]
    n: Option<u32>,
    #[arg(long)]
    kappa: Option<String>,
    /// Spinor channel for single-channel spin-orbit states.
    #[arg(long)]
    channel: Option<String>,
    /// Grid as M:RMAX or M:RMIN:RMAX.
    #[arg(long)]
    grid: Option<String>,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct OracleArgs {
    #[arg(long)]
    model: Option<String>,
    #[arg(long)]
    j: Option<String>,
    #[arg(long)]
    n_max: Option<u32>,
    #[arg(long)]
    grid: Option<String>,
    /// Relative eigenvalue tolerance (default from the grid size).
    #[arg(long)]
    tol: Option<f64>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    format: Option<String>,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct DiracArgs {
    #[arg(long)]
    mass: Option<String>,
    #[arg(long)]
    alpha: Option<String>,
    #[arg(long)]
    j: Option<String>,
    #[arg(long)]
    n_max: Option<u32>,
    /// Sample-point count for the first-order-system residual.
    #[arg(long)]
    points: Option<usize>,
    /// Stencil step for the pointwise derivatives.
    #[arg(long)]
    h: Option<f64>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct ParseArgs {
    /// Expression in the operator grammar.
    expr: String,
    /// Context: three-d or radial.
    #[arg(long, default_value = "three-d")]
    context: String,
    /// Quantum number for the radial context.
    #[arg(long)]
    j: Option<String>,
}

enum CliError {
    Usage(String),
    NonConvergence(String),
    Io(std::io::Error),
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

impl CliError {
    fn usage(e: impl std::fmt::Display) -> Self {
        CliError::Usage(e.to_string())
    }
}

/// Configuration lookup: flag value, then config-file key, then default.
struct Resolver {
    file: BTreeMap<String, String>,
}

impl Resolver {
    fn new(path: Option<&PathBuf>) -> Result<Self, CliError> {
        let file = match path {
            Some(p) => load_key_values(p)?.map_err(CliError::usage)?,
            None => BTreeMap::new(),
        };
        Ok(Resolver { file })
    }

    fn string(&self, flag: Option<&String>, key: &str, default: &str) -> String {
        flag.cloned()
            .or_else(|| self.file.get(key).cloned())
            .unwrap_or_else(|| default.to_string())
    }

    fn parse<T: std::str::FromStr>(
        &self,
        flag: Option<T>,
        key: &str,
    ) -> Result<Option<T>, CliError>
    where
        T::Err: std::fmt::Display,
    {
        if let Some(v) = flag {
            return Ok(Some(v));
        }
        match self.file.get(key) {
            Some(raw) => raw.parse::<T>().map(Some).map_err(CliError::usage),
            None => Ok(None),
        }
    }
}

fn emit(output: Option<&PathBuf>, text: &str) -> Result<(), CliError> {
    match output {
        Some(path) => {
            let path = resolve_output_path(path);
            std::fs::write(&path, text)?;
            Ok(())
        }
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
            if !text.ends_with('\n') {
                println!();
            }
            Ok(())
        }
    }
}

fn parse_format(s: &str) -> Result<OutputFormat, CliError> {
    s.parse::<OutputFormat>().map_err(CliError::Usage)
}

fn run_verify(args: &VerifyArgs, res: &Resolver) -> Result<bool, CliError> {
    let models = parse_models(&res.string(args.model.as_ref(), "model", "all"))
        .map_err(CliError::usage)?;
    let format = parse_format(&res.string(args.format.as_ref(), "format", "json"))?;
    let j_raw = res.string(args.j.as_ref(), "j", "");
    let j_set = if j_raw.is_empty() {
        None
    } else {
        Some(parse_rational_list(&j_raw).map_err(CliError::usage)?)
    };
    let mut reports = Vec::new();
    for model in models {
        let suite = run_suite(model, j_set.as_deref()).map_err(CliError::usage)?;
        reports.extend(suite);
    }
    let all_passed = reports.iter().all(|r| r.passed);
    let text = match format {
        OutputFormat::Json => reports_to_json(&reports),
        OutputFormat::Csv => reports_to_csv(&reports),
    };
    emit(args.output.as_ref(), &text)?;
    Ok(all_passed)
}

fn run_spectrum(args: &SpectrumArgs, res: &Resolver) -> Result<(), CliError> {
    let model: ModelId = res
        .string(args.model.as_ref(), "model", "dipole")
        .parse()
        .map_err(CliError::usage)?;
    let j_raw = res.string(args.j.as_ref(), "j", "");
    let j_set = if j_raw.is_empty() {
        default_j_set(model)
    } else {
        parse_rational_list(&j_raw).map_err(CliError::usage)?
    };
    let n_max = res.parse(args.n_max, "n-max")?.unwrap_or(2);
    let mass = parse_rational(&res.string(args.mass.as_ref(), "mass", "1"))
        .map_err(CliError::usage)?;
    let alpha = parse_rational(&res.string(args.alpha.as_ref(), "alpha", "1"))
        .map_err(CliError::usage)?;
    let format = parse_format(&res.string(args.format.as_ref(), "format", "json"))?;

    let mut rows = Vec::new();
    for j in &j_set {
        let entries = core_susy::spectrum(model, j, n_max).map_err(CliError::usage)?;
        for e in entries {
            rows.push(SpectrumRow {
                model: model.name().to_string(),
                j: format_rational(&e.j),
                n: e.n,
                big_n: format_rational(&e.big_n),
                epsilon: format_rational(&e.epsilon),
                e_phys: format_rational(&e.e_phys(&mass, &alpha)),
                kappa_degeneracy: format_rational(&e.kappa_degeneracy),
            });
        }
    }
    let text = match format {
        OutputFormat::Json => spectrum_rows_to_json(&rows),
        OutputFormat::Csv => spectrum_rows_to_csv(&rows),
    };
    emit(args.output.as_ref(), &text)
}

fn run_wavefunction(args: &WavefunctionArgs, res: &Resolver) -> Result<(), CliError> {
    let model: ModelId = res
        .string(args.model.as_ref(), "model", "dipole")
        .parse()
        .map_err(CliError::usage)?;
    let j = parse_rational(&res.string(args.j.as_ref(), "j", "1/2")).map_err(CliError::usage)?;
    let n = res.parse(args.n, "n")?.unwrap_or(0);
    let kappa = parse_rational(&res.string(args.kappa.as_ref(), "kappa", "1/2"))
        .map_err(CliError::usage)?;
    let spec: GridSpec = res
        .string(args.grid.as_ref(), "grid", "12000:240")
        .parse()
        .map_err(CliError::usage)?;
    let grid = RadialGrid::new(spec.r_min, spec.r_max, spec.m).map_err(CliError::usage)?;
    let channel = match res.string(args.channel.as_ref(), "channel", "upper").as_str() {
        "upper" => Channel::Upper,
        "lower" => Channel::Lower,
        other => return Err(CliError::Usage(format!("unknown channel `{other}`"))),
    };

    let gf = match (model, n) {
        (ModelId::Dipole, n) => excited_state(model, &j, n, &kappa, &grid)
            .map_err(|e| CliError::Usage(e.to_string()))?,
        (ModelId::SpinOrbit, n) => laguerre_state(&j, n, channel, &kappa)
            .map_err(CliError::usage)?
            .sample(&grid),
        (ModelId::Ha, 0) => ground_state(model, &j, &kappa)
            .map_err(CliError::usage)?
            .sample(&grid),
        (ModelId::Ha, _) => {
            return Err(CliError::Usage(
                "excited wavefunction export is defined for dipole (ladder) and spin-orbit (closed form)".into(),
            ))
        }
    };
    let meta = WavefunctionMeta {
        model: model.name().to_string(),
        j: format_rational(&j),
        n,
        kappa: format_rational(&kappa),
        m: spec.m,
        r_min: format_float(spec.r_min),
        r_max: format_float(spec.r_max),
    };
    let mut buf = Vec::new();
    write_wavefunction_csv(&mut buf, &gf, &meta)?;
    emit(args.output.as_ref(), &String::from_utf8(buf).expect("utf8"))
}

fn run_oracle(args: &OracleArgs, res: &Resolver) -> Result<bool, CliError> {
    let models = parse_models(&res.string(args.model.as_ref(), "model", "dipole"))
        .map_err(CliError::usage)?;
    let j_raw = res.string(args.j.as_ref(), "j", "1/2");
    let j_set = parse_rational_list(&j_raw).map_err(CliError::usage)?;
    let n_max = res.parse(args.n_max, "n-max")?.unwrap_or(1);
    let spec: GridSpec = res
        .string(args.grid.as_ref(), "grid", "12000:240")
        .parse()
        .map_err(CliError::usage)?;
    let tol = res
        .parse(args.tol, "tol")?
        .unwrap_or_else(|| spec.default_tolerance());
    let seed = res.parse(args.seed, "seed")?.unwrap_or(DEFAULT_SEED);
    let format = parse_format(&res.string(args.format.as_ref(), "format", "json"))?;
    let grid = RadialGrid::new(spec.r_min, spec.r_max, spec.m).map_err(CliError::usage)?;

    let mut rows = Vec::new();
    let mut all_passed = true;
    for model in models {
        // One eigenvalue per level for the coupled dipole problem, a
        // two-fold component degeneracy for the scalar ones.
        let mult = if model == ModelId::Dipole { 1 } else { 2 };
        for j in &j_set {
            let h_op = radial_reduce(model, j).map_err(CliError::usage)?;
            let a = discretize(&h_op, &grid).map_err(CliError::usage)?;
            let entries = core_susy::spectrum(model, j, n_max + 1).map_err(CliError::usage)?;
            let eps0 = entries[0].epsilon.to_f64().unwrap();
            let eps_last = entries[n_max as usize].epsilon.to_f64().unwrap();
            let eps_next = entries[n_max as usize + 1].epsilon.to_f64().unwrap();
            let window = (1.5 * eps0, 0.5 * (eps_last + eps_next));
            let k = (n_max as usize + 1) * mult;
            let pairs = eigensolve(&a, k, window, seed).map_err(|e| match e {
                NumError::NoConvergence { .. } => CliError::NonConvergence(e.to_string()),
                other => CliError::Usage(other.to_string()),
            })?;
            for n in 0..=n_max {
                let exact = &entries[n as usize].epsilon;
                let exact_f = exact.to_f64().unwrap();
                let numeric = pairs[(n as usize) * mult].0;
                let rel = ((numeric - exact_f) / exact_f).abs();
                let passed = rel <= tol;
                all_passed &= passed;
                rows.push(OracleRow {
                    model: model.name().to_string(),
                    j: format_rational(j),
                    n,
                    epsilon_exact: format_rational(exact),
                    epsilon_numeric: format_float(numeric),
                    relative_error: format_float(rel),
                    tolerance: format_float(tol),
                    passed,
                });
            }
        }
    }
    let text = match format {
        OutputFormat::Json => oracle_rows_to_json(&rows),
        OutputFormat::Csv => oracle_rows_to_csv(&rows),
    };
    emit(args.output.as_ref(), &text)?;
    Ok(all_passed)
}

fn run_dirac(args: &DiracArgs, res: &Resolver) -> Result<bool, CliError> {
    let mass = parse_rational(&res.string(args.mass.as_ref(), "mass", "1"))
        .map_err(CliError::usage)?;
    let alpha = parse_rational(&res.string(args.alpha.as_ref(), "alpha", "1"))
        .map_err(CliError::usage)?;
    let j_raw = res.string(args.j.as_ref(), "j", "1/2");
    let j_set = parse_rational_list(&j_raw).map_err(CliError::usage)?;
    let n_max = res.parse(args.n_max, "n-max")?.unwrap_or(2);
    let n_points = res.parse(args.points, "points")?.unwrap_or(20);
    let h = res.parse(args.h, "h")?.unwrap_or(1e-3);
    let seed = res.parse(args.seed, "seed")?.unwrap_or(DEFAULT_SEED);

    let m_f = mass.to_f64().unwrap();
    let alpha_f = alpha.to_f64().unwrap();

    let reduction = core_dirac::verify_reduction();
    let mut all_passed = reduction.passed;

    #[derive(serde::Serialize)]
    struct EnergyRow {
        j: String,
        n: u32,
        big_n: String,
        e: String,
        nonrel_gap: String,
        gap_halving_ratio: String,
        epsilon_identity_exact: bool,
    }

    let mut energies = Vec::new();
    for j in &j_set {
        for n in 0..=n_max {
            let big_n = j + rat(i64::from(n) + 1);
            let e = rel_energy(m_f, alpha_f, &big_n).map_err(CliError::usage)?;
            let gap = nonrel_limit_gap(m_f, alpha_f, &big_n).map_err(CliError::usage)?;
            let gratio = gap_halving_ratio(m_f, 0.1, &big_n).map_err(CliError::usage)?;
            let eps = core_dirac::epsilon_from_rel_energy(&mass, &alpha, &big_n);
            let identity_exact = eps == ratio(-1, 4) / (&big_n * &big_n);
            all_passed &= identity_exact;
            energies.push(EnergyRow {
                j: format_rational(j),
                n,
                big_n: format_rational(&big_n),
                e: format_float(e),
                nonrel_gap: format_float(gap),
                gap_halving_ratio: format_float(gratio),
                epsilon_identity_exact: identity_exact,
            });
        }
    }

    // Pointwise first-order-system residual on the ground sector of the
    // first requested j.
    let j0 = &j_set[0];
    let state = ground_state(ModelId::Dipole, j0, &ratio(1, 2)).map_err(CliError::usage)?;
    let points = sample_points(&state, n_points, seed, 0.7, 6.0).map_err(CliError::usage)?;
    let sol = reconstruct_xi(m_f, alpha_f, j0, 0, &ratio(1, 2), &points, h)
        .map_err(CliError::usage)?;
    let residual_ok = sol.max_relative_residual <= 1e-4;
    all_passed &= residual_ok;

    #[derive(serde::Serialize)]
    struct DiracOutput {
        reduction: focksym::report::ReportJson,
        energies: Vec<EnergyRow>,
        sys2_residual: String,
        sys2_points: usize,
        sys2_h: String,
        sys2_passed: bool,
    }

    let out = DiracOutput {
        reduction: (&reduction).into(),
        energies,
        sys2_residual: format_float(sol.max_relative_residual),
        sys2_points: n_points,
        sys2_h: format_float(h),
        sys2_passed: residual_ok,
    };
    let text = serde_json::to_string_pretty(&out).expect("serializes");
    emit(args.output.as_ref(), &text)?;
    Ok(all_passed)
}

fn run_parse(args: &ParseArgs, res: &Resolver) -> Result<(), CliError> {
    let text = match args.context.as_str() {
        "three-d" | "3d" => {
            let symbols = standard_symbols();
            let op = parse_three_d_with(&args.expr, &symbols).map_err(CliError::usage)?;
            format!("{op}")
        }
        "radial" => {
            let j = parse_rational(&res.string(args.j.as_ref(), "j", "1/2"))
                .map_err(CliError::usage)?;
            let op = parse_radial(&args.expr, &j).map_err(CliError::usage)?;
            format!("{op}")
        }
        other => {
            return Err(CliError::Usage(format!(
                "unknown context `{other}` (use three-d or radial)"
            )))
        }
    };
    println!("{text}");
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let resolver = match Resolver::new(cli.config.as_ref()) {
        Ok(r) => r,
        Err(e) => return finish(Err::<bool, _>(e)),
    };
    let outcome: Result<bool, CliError> = match &cli.command {
        Command::Verify(args) => run_verify(args, &resolver),
        Command::Spectrum(args) => run_spectrum(args, &resolver).map(|_| true),
        Command::Wavefunction(args) => run_wavefunction(args, &resolver).map(|_| true),
        Command::Oracle(args) => run_oracle(args, &resolver),
        Command::Dirac(args) => run_dirac(args, &resolver),
        Command::Parse(args) => run_parse(args, &resolver).map(|_| true),
    };
    finish(outcome)
}

fn finish(outcome: Result<bool, CliError>) -> ExitCode {
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::NonConvergence(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
        Err(CliError::Io(e)) => {
            eprintln!("io error: {e}");
            ExitCode::from(2)
        }
    }
}
