//! Parameter sweeps and the CSV table format shared with the figure datasets.
//!
//! CSV output is UTF-8, comma separated, LF terminated, with a header row and
//! every number printed with 9 significant digits (`%.9g`). A value that
//! cannot be evaluated at a grid point is left empty and explained in
//! [`Table::notes`].

use std::fmt;
use std::io::{self, Write};
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::spectrum::{FieldConfig, PotentialParams, Pseudodot, QuantumNumbers};
use crate::thermo::{
    field_response, paper_current, paper_magnetization, paper_susceptibility, thermo_state, Backend,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepVariable {
    B,
    PhiAb,
    Eps,
    R0,
    V0,
    K,
    T,
    M,
    NR,
    NZ,
}

impl SweepVariable {
    pub const ALL: [SweepVariable; 10] = [
        SweepVariable::B,
        SweepVariable::PhiAb,
        SweepVariable::Eps,
        SweepVariable::R0,
        SweepVariable::V0,
        SweepVariable::K,
        SweepVariable::T,
        SweepVariable::M,
        SweepVariable::NR,
        SweepVariable::NZ,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SweepVariable::B => "B",
            SweepVariable::PhiAb => "Phi_AB",
            SweepVariable::Eps => "eps",
            SweepVariable::R0 => "r0",
            SweepVariable::V0 => "V0",
            SweepVariable::K => "K",
            SweepVariable::T => "T",
            SweepVariable::M => "m",
            SweepVariable::NR => "n_r",
            SweepVariable::NZ => "n_z",
        }
    }

    pub fn is_integer(self) -> bool {
        matches!(
            self,
            SweepVariable::M | SweepVariable::NR | SweepVariable::NZ
        )
    }
}

impl fmt::Display for SweepVariable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SweepVariable {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SweepVariable::ALL
            .into_iter()
            .find(|v| v.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown sweep variable '{s}'")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Quantity {
    E,
    X,
    F,
    U,
    S,
    Cv,
    I,
    M,
    Chi,
}

impl Quantity {
    pub const ALL: [Quantity; 9] = [
        Quantity::E,
        Quantity::X,
        Quantity::F,
        Quantity::U,
        Quantity::S,
        Quantity::Cv,
        Quantity::I,
        Quantity::M,
        Quantity::Chi,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Quantity::E => "E",
            Quantity::X => "X",
            Quantity::F => "F",
            Quantity::U => "U",
            Quantity::S => "S",
            Quantity::Cv => "Cv",
            Quantity::I => "I",
            Quantity::M => "M",
            Quantity::Chi => "chi",
        }
    }

    /// Whether the value depends on the thermodynamic backend.
    pub fn uses_backend(self) -> bool {
        self != Quantity::E
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Quantity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Quantity::ALL
            .into_iter()
            .find(|q| q.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown quantity '{s}'")))
    }
}

/// Everything needed to evaluate any [`Quantity`] at one point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParameterSet {
    pub system: Pseudodot,
    pub n_r: u32,
    pub n_z: u32,
    pub m: i32,
    pub t: f64,
}

impl ParameterSet {
    /// Natural units, `V0 = 5`, `r0 = K = 1`, `n_r = n_z = m = 1`, `B = 2`,
    /// `Phi_AB = 5`, `eps = 5`, `T = 1`.
    pub fn figure_defaults() -> Self {
        ParameterSet {
            system: Pseudodot::default().with_fields(FieldConfig {
                b: 2.0,
                phi_ab: 5.0,
                eps: 5.0,
            }),
            n_r: 1,
            n_z: 1,
            m: 1,
            t: 1.0,
        }
    }

    pub fn quantum_numbers(&self) -> Result<QuantumNumbers> {
        QuantumNumbers::new(self.n_r, self.n_z, self.m)
    }

    pub fn validate(&self) -> Result<()> {
        let s = &self.system;
        crate::spectrum::Constants::new(
            s.consts.hbar,
            s.consts.c,
            s.consts.e,
            s.consts.kb,
            s.consts.mu,
        )?;
        PotentialParams::new(s.potential.v0, s.potential.r0, s.potential.k_osc)?;
        FieldConfig::new(s.fields.b, s.fields.phi_ab, s.fields.eps)?;
        self.quantum_numbers()?;
        if !(self.t.is_finite() && self.t > 0.0) {
            return Err(Error::InvalidParameter(format!(
                "T must be positive, got {}",
                self.t
            )));
        }
        Ok(())
    }

    pub fn get(&self, var: SweepVariable) -> f64 {
        let s = &self.system;
        match var {
            SweepVariable::B => s.fields.b,
            SweepVariable::PhiAb => s.fields.phi_ab,
            SweepVariable::Eps => s.fields.eps,
            SweepVariable::R0 => s.potential.r0,
            SweepVariable::V0 => s.potential.v0,
            SweepVariable::K => s.potential.k_osc,
            SweepVariable::T => self.t,
            SweepVariable::M => self.m as f64,
            SweepVariable::NR => self.n_r as f64,
            SweepVariable::NZ => self.n_z as f64,
        }
    }

    /// Sets `var` to `value`; integer variables must receive integral values.
    pub fn set(&mut self, var: SweepVariable, value: f64) -> Result<()> {
        if var.is_integer() && (value - value.round()).abs() > 1e-9 {
            return Err(Error::InvalidParameter(format!(
                "{var} needs an integer value, got {value}"
            )));
        }
        let s = &mut self.system;
        match var {
            SweepVariable::B => s.fields.b = value,
            SweepVariable::PhiAb => s.fields.phi_ab = value,
            SweepVariable::Eps => s.fields.eps = value,
            SweepVariable::R0 => s.potential.r0 = value,
            SweepVariable::V0 => s.potential.v0 = value,
            SweepVariable::K => s.potential.k_osc = value,
            SweepVariable::T => self.t = value,
            SweepVariable::M => self.m = value.round() as i32,
            SweepVariable::NR | SweepVariable::NZ => {
                if value < -1e-9 {
                    return Err(Error::InvalidParameter(format!(
                        "{var} must be >= 0, got {value}"
                    )));
                }
                let n = value.round() as u32;
                if var == SweepVariable::NR {
                    self.n_r = n;
                } else {
                    self.n_z = n;
                }
            }
        }
        Ok(())
    }
}

/// Value of `quantity` at `p`. `E` is the total energy of `(n_r, n_z, m)`;
/// the thermodynamic quantities use the ladder of azimuthal number `m`.
pub fn evaluate(p: &ParameterSet, quantity: Quantity, backend: Backend) -> Result<f64> {
    let s = &p.system;
    match quantity {
        Quantity::E => s.total_energy(p.quantum_numbers()?),
        Quantity::X | Quantity::F | Quantity::U | Quantity::S | Quantity::Cv => {
            let point = thermo_state(s, p.m, p.t, backend)?;
            Ok(match quantity {
                Quantity::X => point.x,
                Quantity::F => point.f,
                Quantity::U => point.u,
                Quantity::S => point.s,
                _ => point.cv,
            })
        }
        Quantity::I | Quantity::M | Quantity::Chi if backend == Backend::Paper => match quantity {
            Quantity::I => paper_current(s, p.m, p.t),
            Quantity::M => paper_magnetization(s, p.m, p.t),
            _ => paper_susceptibility(s, p.m, p.t),
        },
        Quantity::I | Quantity::M | Quantity::Chi => {
            let r = field_response(s, p.m, p.t, backend)?;
            Ok(match quantity {
                Quantity::I => r.current,
                Quantity::M => r.magnetization,
                _ => r.susceptibility,
            })
        }
    }
}

/// A one-dimensional sweep over `steps` points from `from` to `to`, both
/// endpoints included.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub variable: SweepVariable,
    pub from: f64,
    pub to: f64,
    pub steps: usize,
    pub fixed: ParameterSet,
    pub quantities: Vec<Quantity>,
    pub backend: Backend,
}

impl SweepSpec {
    pub fn grid(&self) -> Result<Vec<f64>> {
        if self.steps < 2 {
            return Err(Error::InvalidParameter(format!(
                "steps must be >= 2, got {}",
                self.steps
            )));
        }
        if !(self.from.is_finite() && self.to.is_finite() && self.from < self.to) {
            return Err(Error::InvalidParameter(format!(
                "sweep range needs from < to, got {} .. {}",
                self.from, self.to
            )));
        }
        let grid = linspace(self.from, self.to, self.steps);
        if self.variable.is_integer() {
            if let Some(x) = grid.iter().find(|x| (*x - x.round()).abs() > 1e-9) {
                return Err(Error::InvalidParameter(format!(
                    "{} sweeps integer grids only; {x} is not an integer",
                    self.variable
                )));
            }
            return Ok(grid.into_iter().map(f64::round).collect());
        }
        Ok(grid)
    }

    pub fn validate(&self) -> Result<()> {
        if self.quantities.is_empty() {
            return Err(Error::InvalidParameter("no quantity requested".into()));
        }
        self.fixed.validate()?;
        for x in self.grid()? {
            let mut p = self.fixed;
            p.set(self.variable, x)?;
            p.validate()?;
        }
        Ok(())
    }
}

pub fn linspace(from: f64, to: f64, steps: usize) -> Vec<f64> {
    let span = to - from;
    (0..steps)
        .map(|i| {
            if i + 1 == steps {
                to
            } else {
                from + span * i as f64 / (steps - 1) as f64
            }
        })
        .collect()
}

/// Evaluates a sweep in parallel; rows come back in grid order.
pub fn run_sweep(spec: &SweepSpec) -> Result<Table> {
    spec.validate()?;
    let grid = spec.grid()?;
    let mut header = vec![spec.variable.name().to_string()];
    header.extend(spec.quantities.iter().map(|q| q.name().to_string()));

    let evaluated: Vec<(Vec<Option<f64>>, Vec<String>)> = grid
        .par_iter()
        .map(|&x| {
            let mut p = spec.fixed;
            p.set(spec.variable, x).expect("grid validated");
            let mut row = vec![Some(x)];
            let mut notes = Vec::new();
            for &q in &spec.quantities {
                match evaluate(&p, q, spec.backend) {
                    Ok(v) => row.push(Some(v)),
                    Err(e) => {
                        notes.push(format!(
                            "{}={}: {q} ({}): {e}",
                            spec.variable,
                            format_sig(x),
                            spec.backend
                        ));
                        row.push(None);
                    }
                }
            }
            (row, notes)
        })
        .collect();

    let mut table = Table::new(header);
    for (row, notes) in evaluated {
        table.rows.push(row);
        table.notes.extend(notes);
    }
    Ok(table)
}

/// Numeric table with optional cells.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<Option<f64>>>,
    /// One line per empty cell, explaining why it could not be evaluated.
    pub notes: Vec<String>,
}

impl Table {
    pub fn new(header: Vec<String>) -> Self {
        Table {
            header,
            rows: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn column_index(&self, name: &str) -> Option<usize> {
        self.header.iter().position(|h| h == name)
    }

    pub fn column(&self, name: &str) -> Option<Vec<Option<f64>>> {
        let i = self.column_index(name)?;
        Some(self.rows.iter().map(|r| r[i]).collect())
    }

    pub fn write_csv<W: Write>(&self, mut w: W) -> io::Result<()> {
        writeln!(w, "{}", self.header.join(","))?;
        for row in &self.rows {
            let cells: Vec<String> = row
                .iter()
                .map(|c| c.map(format_sig).unwrap_or_default())
                .collect();
            writeln!(w, "{}", cells.join(","))?;
        }
        Ok(())
    }

    pub fn to_csv_string(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf)
            .expect("writing to a Vec cannot fail");
        String::from_utf8(buf).expect("CSV is ASCII")
    }
}

/// Formats `x` like C's `%.9g`.
pub fn format_sig(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{x:.8e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-4..9).contains(&exp) {
        let mantissa = trim_zeros(mantissa);
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{mantissa}e{sign}{:02}", exp.abs())
    } else {
        let decimals = (8 - exp) as usize;
        trim_zeros(&format!("{x:.decimals$}")).to_string()
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn nine_significant_digits() {
        assert_eq!(format_sig(0.0), "0");
        assert_eq!(format_sig(-0.0), "0");
        assert_eq!(format_sig(1.0), "1");
        assert_eq!(format_sig(3.16227766016838), "3.16227766");
        assert_eq!(format_sig(-5.25), "-5.25");
        assert_eq!(format_sig(13.806_862_753_297_325), "13.8068628");
        assert_eq!(format_sig(123_456_789.4), "123456789");
        assert_eq!(format_sig(1_234_567_890.0), "1.23456789e+09");
        assert_eq!(format_sig(0.000_123_456_789_1), "0.000123456789");
        assert_eq!(format_sig(0.000_012_345_678_91), "1.23456789e-05");
        assert_eq!(format_sig(2.678_636_961_808e-33), "2.67863696e-33");
        assert_eq!(format_sig(999_999_999.6), "1e+09");
    }

    proptest! {
        #[test]
        fn formatted_values_round_trip_to_nine_digits(x in -1e12f64..1e12) {
            let back: f64 = format_sig(x).parse().unwrap();
            prop_assert!((back - x).abs() <= 5e-9 * x.abs() + 1e-300);
        }
    }

    fn spec(variable: SweepVariable, from: f64, to: f64, steps: usize) -> SweepSpec {
        SweepSpec {
            variable,
            from,
            to,
            steps,
            fixed: ParameterSet::figure_defaults(),
            quantities: vec![Quantity::E],
            backend: Backend::Closed,
        }
    }

    #[test]
    fn row_count_is_steps() {
        let table = run_sweep(&spec(SweepVariable::B, 0.0, 10.0, 50)).unwrap();
        assert_eq!(table.rows.len(), 50);
        assert_eq!(table.header, vec!["B", "E"]);
        let csv = table.to_csv_string();
        assert_eq!(csv.lines().count(), 51);
        assert!(csv.ends_with('\n') && !csv.contains("\r") && !csv.contains(",\n"));
        assert_eq!(table.rows[0][0], Some(0.0));
        assert_eq!(table.rows[49][0], Some(10.0));
    }

    #[test]
    fn landau_energies_are_affine_in_b() {
        let mut s = spec(SweepVariable::B, 0.5, 6.0, 12);
        s.fixed.system.potential.v0 = 0.0;
        s.fixed.system.fields = FieldConfig {
            b: 1.0,
            phi_ab: 0.0,
            eps: 0.0,
        };
        s.fixed.m = 0;
        let e: Vec<f64> = run_sweep(&s)
            .unwrap()
            .column("E")
            .unwrap()
            .into_iter()
            .map(Option::unwrap)
            .collect();
        let d0 = e[1] - e[0];
        for w in e.windows(2) {
            assert!((w[1] - w[0] - d0).abs() < 1e-12);
        }
    }

    #[test]
    fn radial_number_sweep_has_constant_steps() {
        let e: Vec<f64> = run_sweep(&spec(SweepVariable::NR, 0.0, 6.0, 7))
            .unwrap()
            .column("E")
            .unwrap()
            .into_iter()
            .map(Option::unwrap)
            .collect();
        let d0 = e[1] - e[0];
        for w in e.windows(2) {
            assert!((w[1] - w[0] - d0).abs() < 1e-12);
        }
    }

    #[test]
    fn invalid_specs() {
        assert!(run_sweep(&spec(SweepVariable::B, 0.0, 1.0, 1)).is_err());
        assert!(run_sweep(&spec(SweepVariable::B, 1.0, 0.0, 5)).is_err());
        assert!(run_sweep(&spec(SweepVariable::B, -1.0, 1.0, 5)).is_err());
        assert!(run_sweep(&spec(SweepVariable::M, 0.0, 3.0, 5)).is_err());
        assert!(run_sweep(&spec(SweepVariable::M, -3.0, 3.0, 7)).is_ok());
        assert!(run_sweep(&spec(SweepVariable::NZ, 0.0, 3.0, 4)).is_err());
        assert!("Bz".parse::<SweepVariable>().is_err());
        assert_eq!(
            "Phi_AB".parse::<SweepVariable>().unwrap(),
            SweepVariable::PhiAb
        );
        assert_eq!("chi".parse::<Quantity>().unwrap(), Quantity::Chi);
    }

    #[test]
    fn singular_cells_are_left_empty() {
        let mut s = spec(SweepVariable::B, 0.0, 1.0, 3);
        s.fixed.system.potential.v0 = 0.0;
        s.quantities = vec![Quantity::Chi];
        s.backend = Backend::Paper;
        let table = run_sweep(&s).unwrap();
        assert_eq!(table.rows[0][1], None);
        assert!(table.rows[1][1].is_some());
        assert_eq!(table.notes.len(), 1);
        assert!(table.to_csv_string().lines().nth(1).unwrap().ends_with(','));
    }

    #[test]
    fn output_is_deterministic() {
        let mut s = spec(SweepVariable::T, 0.5, 5.0, 40);
        s.quantities = vec![Quantity::F, Quantity::M, Quantity::Cv];
        s.backend = Backend::Exact;
        let a = run_sweep(&s).unwrap().to_csv_string();
        let b = run_sweep(&s).unwrap().to_csv_string();
        assert_eq!(a, b);
    }
}
