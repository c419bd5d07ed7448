use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qpdot_core::figures::{all_figures, figure, write_figure, FIGURE_COUNT};
use qpdot_core::sweep::{format_sig, run_sweep, ParameterSet, Quantity, SweepSpec, SweepVariable};
use qpdot_core::thermo::{field_response, thermo_state};
use qpdot_core::{
    verify, Backend, Constants, Error, FieldConfig, PotentialParams, Pseudodot, QuantumNumbers,
};

const EXIT_VALIDATION: u8 = 1;
const EXIT_CONVERGENCE: u8 = 2;
const EXIT_VERIFY: u8 = 3;

/// Spectrum and thermodynamics of a spherical quantum pseudodot in magnetic,
/// Aharonov-Bohm and electric fields.
#[derive(Parser)]
#[command(name = "qpdot", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Energy levels and derived parameters of one state
    Energy(Common),
    /// Thermodynamic quantities of the ladder for azimuthal number m
    Thermo(Common),
    /// Sweep one parameter and write a CSV table
    Sweep(SweepArgs),
    /// Regenerate figure datasets as CSV
    Figure(FigureArgs),
    /// Run the verification suite
    Verify,
}

#[derive(Clone, Copy, ValueEnum)]
enum Units {
    Natural,
}

#[derive(Args, Clone)]
struct Common {
    /// Depth of the pseudoharmonic well
    #[arg(long, default_value_t = 5.0, allow_negative_numbers = true)]
    v0: f64,
    /// Zero point of the well
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    r0: f64,
    /// Axial oscillator constant
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    k: f64,
    /// Magnetic field
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    b: f64,
    /// Aharonov-Bohm flux
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    phi: f64,
    /// Electric field along z
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    eps: f64,
    /// Azimuthal quantum number
    #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
    m: i32,
    #[arg(long, default_value_t = 0)]
    n_r: u32,
    #[arg(long, default_value_t = 1)]
    n_z: u32,
    /// Temperature
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    t: f64,
    #[arg(long, default_value = "closed", value_parser = parse_backend)]
    backend: Backend,
    #[arg(long, value_enum, default_value = "natural")]
    units: Units,
}

#[derive(Args)]
struct SweepArgs {
    #[command(flatten)]
    common: Common,
    /// Swept variable: B, Phi_AB, eps, r0, V0, K, T, m, n_r or n_z
    #[arg(long, value_parser = parse_variable)]
    var: SweepVariable,
    #[arg(long, allow_negative_numbers = true)]
    from: f64,
    #[arg(long, allow_negative_numbers = true)]
    to: f64,
    /// Number of grid points, both ends included
    #[arg(long, default_value_t = 50)]
    steps: usize,
    /// Comma separated quantities: E, X, F, U, S, Cv, I, M, chi
    #[arg(long, value_delimiter = ',', default_value = "E", value_parser = parse_quantity)]
    quantity: Vec<Quantity>,
    /// Output file (stdout when absent)
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct FigureArgs {
    /// Figure number
    #[arg(long, conflicts_with = "all", required_unless_present = "all")]
    id: Option<u32>,
    /// Every figure
    #[arg(long)]
    all: bool,
    #[arg(long, default_value = "figures")]
    out_dir: PathBuf,
}

fn parse_backend(s: &str) -> Result<Backend, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_variable(s: &str) -> Result<SweepVariable, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_quantity(s: &str) -> Result<Quantity, String> {
    s.trim().parse().map_err(|e: Error| e.to_string())
}

enum Failure {
    Core(Error),
    Io(io::Error),
    Verify,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl Common {
    fn system(&self) -> Result<Pseudodot, Error> {
        let consts = match self.units {
            Units::Natural => Constants::NATURAL,
        };
        Ok(Pseudodot::new(
            consts,
            PotentialParams::new(self.v0, self.r0, self.k)?,
            FieldConfig::new(self.b, self.phi, self.eps)?,
        ))
    }

    fn parameters(&self) -> Result<ParameterSet, Error> {
        let p = ParameterSet {
            system: self.system()?,
            n_r: self.n_r,
            n_z: self.n_z,
            m: self.m,
            t: self.t,
        };
        p.validate()?;
        Ok(p)
    }
}

fn line(out: &mut impl Write, label: &str, value: f64) -> io::Result<()> {
    writeln!(out, "{label:<34}{}", format_sig(value))
}

fn energy(c: &Common) -> Result<(), Failure> {
    let p = c.parameters()?;
    let s = p.system;
    let q = QuantumNumbers::new(c.n_r, c.n_z, c.m)?;
    let d = s.derived(c.m);
    let e_r = s.radial_energy(q.n_r, q.m)?;
    let e_z = s.axial_energy(q.n_z)?;
    let ladder = s.ladder(q.m);

    let mut out = io::stdout().lock();
    writeln!(out, "state n_r = {}, n_z = {}, m = {}", q.n_r, q.n_z, q.m)?;
    line(&mut out, "cyclotron frequency omega_c", d.omega_c)?;
    line(&mut out, "flux ratio xi = Phi_AB/Phi_0", d.xi)?;
    line(&mut out, "flux quantum Phi_0", d.phi0)?;
    line(&mut out, "effective angular index gamma", d.gamma)?;
    line(&mut out, "radial frequency omega", d.omega)?;
    line(&mut out, "radial energy E_r", e_r)?;
    line(&mut out, "axial energy E_z", e_z)?;
    line(&mut out, "Stark shift", s.stark_shift())?;
    line(&mut out, "total energy E", e_r + e_z)?;
    line(&mut out, "ladder offset a", ladder.a)?;
    line(&mut out, "ladder Xi = 2a/hbar", ladder.xi)?;
    Ok(())
}

fn thermo(c: &Common) -> Result<(), Failure> {
    let p = c.parameters()?;
    let point = thermo_state(&p.system, p.m, p.t, c.backend)?;
    let mut out = io::stdout().lock();
    writeln!(
        out,
        "ladder m = {}, T = {}, backend {}",
        p.m,
        format_sig(p.t),
        c.backend
    )?;
    line(&mut out, "characteristic function X = ln Z", point.x)?;
    line(&mut out, "free energy F", point.f)?;
    line(&mut out, "mean energy U", point.u)?;
    line(&mut out, "entropy S", point.s)?;
    line(&mut out, "specific heat C_V", point.cv)?;
    match field_response(&p.system, p.m, p.t, c.backend) {
        Ok(r) => {
            line(&mut out, "persistent current I", r.current)?;
            line(&mut out, "magnetization M", r.magnetization)?;
            line(&mut out, "susceptibility chi", r.susceptibility)?;
        }
        Err(e) if e.is_convergence() => return Err(e.into()),
        Err(e) => writeln!(out, "{:<34}undefined: {e}", "field responses")?,
    }
    Ok(())
}

fn sweep(a: &SweepArgs) -> Result<(), Failure> {
    let spec = SweepSpec {
        variable: a.var,
        from: a.from,
        to: a.to,
        steps: a.steps,
        fixed: a.common.parameters()?,
        quantities: a.quantity.clone(),
        backend: a.common.backend,
    };
    let table = run_sweep(&spec)?;
    for note in &table.notes {
        eprintln!("note: {note}");
    }
    match &a.out {
        Some(path) => {
            let mut w = BufWriter::new(File::create(path)?);
            table.write_csv(&mut w)?;
            w.flush()?;
        }
        None => table.write_csv(io::stdout().lock())?,
    }
    Ok(())
}

fn figures(a: &FigureArgs) -> Result<(), Failure> {
    let specs = match a.id {
        Some(id) => vec![figure(id)?],
        None => all_figures(),
    };
    for spec in &specs {
        let (path, table) = write_figure(spec, &a.out_dir)?;
        println!(
            "fig{:02} ({}): {} rows -> {}",
            spec.id,
            spec.title,
            table.rows.len(),
            path.display()
        );
        if !table.notes.is_empty() {
            eprintln!(
                "note: fig{:02}: {} cells undefined, first: {}",
                spec.id,
                table.notes.len(),
                table.notes[0]
            );
        }
    }
    Ok(())
}

fn run(cli: &Cli) -> Result<(), Failure> {
    match &cli.command {
        Command::Energy(c) => energy(c),
        Command::Thermo(c) => thermo(c),
        Command::Sweep(a) => sweep(a),
        Command::Figure(a) => {
            if a.id.is_some_and(|id| !(1..=FIGURE_COUNT).contains(&id)) {
                return Err(Error::InvalidParameter(format!(
                    "figure id must be 1..={FIGURE_COUNT}"
                ))
                .into());
            }
            figures(a)
        }
        Command::Verify => {
            let report = verify::run_all();
            println!("{report}");
            if report.all_passed() {
                Ok(())
            } else {
                Err(Failure::Verify)
            }
        }
    }
}

fn exit_code(failure: &Failure) -> u8 {
    match failure {
        Failure::Core(e) if e.is_convergence() => EXIT_CONVERGENCE,
        Failure::Core(_) | Failure::Io(_) => EXIT_VALIDATION,
        Failure::Verify => EXIT_VERIFY,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_VALIDATION)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            match &failure {
                Failure::Core(e) => eprintln!("error: {e}"),
                Failure::Io(e) => eprintln!("error: {e}"),
                Failure::Verify => eprintln!("error: verification failed"),
            }
            ExitCode::from(exit_code(&failure))
        }
    }
}
