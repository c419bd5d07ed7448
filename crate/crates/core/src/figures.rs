//! Datasets behind the eighteen published figures.
//!
//! Each figure is one long-format table: the series variable, the x-axis
//! variable, then the plotted quantity. Energies have a single `E` column;
//! thermodynamic quantities get one column per backend (`U_exact`,
//! `U_closed`, `U_paper`, ...). Parameters not on an axis and not listed in
//! the figure's overrides come from [`ParameterSet::figure_defaults`].

use std::fs;
use std::path::{Path, PathBuf};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::sweep::{evaluate, format_sig, linspace, ParameterSet, Quantity, SweepVariable, Table};
use crate::thermo::Backend;

pub const FIGURE_COUNT: u32 = 18;

/// Points along the x axis of every figure.
pub const FIGURE_POINTS: usize = 50;

#[derive(Debug, Clone, PartialEq)]
pub struct FigureSpec {
    pub id: u32,
    pub name: &'static str,
    pub title: &'static str,
    pub quantity: Quantity,
    pub x: SweepVariable,
    pub x_range: (f64, f64),
    pub series: SweepVariable,
    pub series_values: Vec<f64>,
    /// Fixed values applied on top of the figure defaults.
    pub overrides: Vec<(SweepVariable, f64)>,
}

impl FigureSpec {
    pub fn file_name(&self) -> String {
        format!("fig{:02}_{}.csv", self.id, self.name)
    }

    pub fn base_parameters(&self) -> Result<ParameterSet> {
        let mut p = ParameterSet::figure_defaults();
        for &(var, value) in &self.overrides {
            p.set(var, value)?;
        }
        Ok(p)
    }

    pub fn x_grid(&self) -> Vec<f64> {
        linspace(self.x_range.0, self.x_range.1, FIGURE_POINTS)
    }

    pub fn columns(&self) -> Vec<String> {
        let mut header = vec![self.series.name().to_string(), self.x.name().to_string()];
        if self.quantity.uses_backend() {
            header.extend(
                Backend::ALL
                    .iter()
                    .map(|b| format!("{}_{}", self.quantity, b)),
            );
        } else {
            header.push(self.quantity.name().to_string());
        }
        header
    }
}

const M_SERIES: [f64; 4] = [0.0, 1.0, 2.0, 3.0];
const B_SERIES: [f64; 4] = [1.0, 2.0, 4.0, 8.0];

#[allow(clippy::type_complexity)]
pub fn figure(id: u32) -> Result<FigureSpec> {
    use Quantity as Q;
    use SweepVariable as V;
    let (name, title, quantity, x, x_range, series, series_values, overrides): (
        &str,
        &str,
        Quantity,
        SweepVariable,
        (f64, f64),
        SweepVariable,
        &[f64],
        Vec<(SweepVariable, f64)>,
    ) = match id {
        1 => (
            "energy_vs_b_by_phi",
            "energy versus magnetic field for several AB fluxes",
            Q::E,
            V::B,
            (0.0, 10.0),
            V::PhiAb,
            &[5.0, 10.0, 15.0, 20.0],
            vec![],
        ),
        2 => (
            "energy_vs_b_by_nr",
            "energy versus magnetic field for several radial quantum numbers",
            Q::E,
            V::B,
            (0.0, 10.0),
            V::NR,
            &M_SERIES,
            vec![],
        ),
        3 => (
            "energy_vs_eps_by_m",
            "energy versus electric field for several m",
            Q::E,
            V::Eps,
            (0.0, 10.0),
            V::M,
            &M_SERIES,
            vec![],
        ),
        4 => (
            "energy_vs_b_by_m",
            "energy versus magnetic field for several m",
            Q::E,
            V::B,
            (0.0, 10.0),
            V::M,
            &M_SERIES,
            vec![],
        ),
        5 => (
            "mean_energy_vs_t_by_m",
            "mean energy versus temperature for several m",
            Q::U,
            V::T,
            (0.5, 10.0),
            V::M,
            &M_SERIES,
            vec![],
        ),
        6 => (
            "specific_heat_vs_t_by_m",
            "specific heat versus temperature for several m",
            Q::Cv,
            V::T,
            (0.5, 10.0),
            V::M,
            &M_SERIES,
            vec![],
        ),
        7 => (
            "free_energy_vs_t_by_m",
            "free energy versus temperature for several m",
            Q::F,
            V::T,
            (0.5, 10.0),
            V::M,
            &M_SERIES,
            vec![],
        ),
        8 => (
            "entropy_vs_t_by_m",
            "entropy versus temperature for several m",
            Q::S,
            V::T,
            (0.5, 10.0),
            V::M,
            &M_SERIES,
            vec![],
        ),
        9 => (
            "mean_energy_vs_r0_by_b",
            "mean energy versus dot size for several B",
            Q::U,
            V::R0,
            (0.5, 10.0),
            V::B,
            &B_SERIES,
            vec![],
        ),
        10 => (
            "specific_heat_vs_r0_by_b",
            "specific heat versus dot size for several B",
            Q::Cv,
            V::R0,
            (0.5, 10.0),
            V::B,
            &B_SERIES,
            vec![],
        ),
        11 => (
            "current_vs_r0_by_b",
            "persistent current versus dot size for several B",
            Q::I,
            V::R0,
            (0.5, 10.0),
            V::B,
            &B_SERIES,
            vec![],
        ),
        12 => (
            "magnetization_vs_r0_by_b",
            "magnetization versus dot size for several B",
            Q::M,
            V::R0,
            (0.5, 10.0),
            V::B,
            &B_SERIES,
            vec![],
        ),
        13 => (
            "susceptibility_vs_r0_by_b",
            "susceptibility versus dot size for several B",
            Q::Chi,
            V::R0,
            (0.5, 10.0),
            V::B,
            &B_SERIES,
            vec![],
        ),
        14 => (
            "entropy_vs_r0_by_b",
            "entropy versus dot size for several B",
            Q::S,
            V::R0,
            (0.5, 10.0),
            V::B,
            &B_SERIES,
            vec![],
        ),
        15 => (
            "free_energy_vs_phi_by_r0",
            "free energy versus AB flux for several dot sizes",
            Q::F,
            V::PhiAb,
            (0.0, 20.0),
            V::R0,
            &[1.0, 2.0, 5.0, 10.0],
            vec![],
        ),
        16 => (
            "current_vs_phi_by_m",
            "persistent current versus AB flux for several m",
            Q::I,
            V::PhiAb,
            (0.0, 20.0),
            V::M,
            &M_SERIES,
            vec![(V::R0, 5.0)],
        ),
        17 => (
            "magnetization_vs_phi_by_m",
            "magnetization versus AB flux for several m",
            Q::M,
            V::PhiAb,
            (0.0, 20.0),
            V::M,
            &M_SERIES,
            vec![(V::R0, 5.0)],
        ),
        18 => (
            "susceptibility_vs_phi_by_m",
            "susceptibility versus AB flux for several m",
            Q::Chi,
            V::PhiAb,
            (0.0, 20.0),
            V::M,
            &M_SERIES,
            vec![(V::R0, 20.0)],
        ),
        _ => {
            return Err(Error::InvalidParameter(format!(
                "figure id must be 1..={FIGURE_COUNT}, got {id}"
            )))
        }
    };
    Ok(FigureSpec {
        id,
        name,
        title,
        quantity,
        x,
        x_range,
        series,
        series_values: series_values.to_vec(),
        overrides,
    })
}

pub fn all_figures() -> Vec<FigureSpec> {
    (1..=FIGURE_COUNT)
        .map(|id| figure(id).expect("ids in range"))
        .collect()
}

/// Evaluates every point of a figure. Cells that cannot be computed are left
/// empty with a note.
#[allow(clippy::type_complexity)]
pub fn figure_table(spec: &FigureSpec) -> Result<Table> {
    let base = spec.base_parameters()?;
    let backends: Vec<Backend> = if spec.quantity.uses_backend() {
        Backend::ALL.to_vec()
    } else {
        vec![Backend::Closed]
    };
    let xs = spec.x_grid();
    let points: Vec<(f64, f64)> = spec
        .series_values
        .iter()
        .flat_map(|&s| xs.iter().map(move |&x| (s, x)))
        .collect();

    let evaluated: Vec<Result<(Vec<Option<f64>>, Vec<String>)>> = points
        .par_iter()
        .map(|&(s, x)| {
            let mut p = base;
            p.set(spec.series, s)?;
            p.set(spec.x, x)?;
            p.validate()?;
            let mut row = vec![Some(s), Some(x)];
            let mut notes = Vec::new();
            for &b in &backends {
                match evaluate(&p, spec.quantity, b) {
                    Ok(v) => row.push(Some(v)),
                    Err(e) => {
                        notes.push(format!(
                            "fig{:02} {}={} {}={}: {} ({b}): {e}",
                            spec.id,
                            spec.series,
                            format_sig(s),
                            spec.x,
                            format_sig(x),
                            spec.quantity
                        ));
                        row.push(None);
                    }
                }
            }
            Ok((row, notes))
        })
        .collect();

    let mut table = Table::new(spec.columns());
    for item in evaluated {
        let (row, notes) = item?;
        table.rows.push(row);
        table.notes.extend(notes);
    }
    Ok(table)
}

/// Writes the CSV of one figure into `dir` and returns its path with the table.
pub fn write_figure(spec: &FigureSpec, dir: &Path) -> Result<(PathBuf, Table)> {
    let table = figure_table(spec)?;
    fs::create_dir_all(dir)
        .map_err(|e| Error::InvalidParameter(format!("{}: {e}", dir.display())))?;
    let path = dir.join(spec.file_name());
    fs::write(&path, table.to_csv_string())
        .map_err(|e| Error::InvalidParameter(format!("{}: {e}", path.display())))?;
    Ok((path, table))
}

/// Rows of `table` belonging to one series value, as `(x, y)` pairs of the
/// first value column.
pub fn series_curve(table: &Table, series_value: f64) -> Vec<(f64, Option<f64>)> {
    table
        .rows
        .iter()
        .filter(|r| r[0] == Some(series_value))
        .map(|r| (r[1].expect("x present"), r[2]))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalogue() {
        let figs = all_figures();
        assert_eq!(figs.len(), 18);
        let one = &figs[0];
        assert_eq!(one.series_values, vec![5.0, 10.0, 15.0, 20.0]);
        assert_eq!(one.file_name(), "fig01_energy_vs_b_by_phi.csv");
        assert_eq!(figs[15].base_parameters().unwrap().system.potential.r0, 5.0);
        assert_eq!(
            figs[17].base_parameters().unwrap().system.potential.r0,
            20.0
        );
        assert!(figure(0).is_err() && figure(19).is_err());
        let mut names: Vec<_> = figs.iter().map(|f| f.file_name()).collect();
        names.dedup();
        assert_eq!(names.len(), 18);
    }

    #[test]
    fn energy_figure_shape() {
        let table = figure_table(&figure(1).unwrap()).unwrap();
        assert_eq!(table.header, vec!["Phi_AB", "B", "E"]);
        assert_eq!(table.rows.len(), 4 * FIGURE_POINTS);
        assert!(table.notes.is_empty());
        assert_eq!(series_curve(&table, 10.0).len(), FIGURE_POINTS);
    }

    #[test]
    fn thermo_figure_has_backend_columns() {
        let table = figure_table(&figure(7).unwrap()).unwrap();
        assert_eq!(
            table.header,
            vec!["m", "T", "F_exact", "F_closed", "F_paper"]
        );
        for row in &table.rows {
            assert!(row.iter().all(Option::is_some));
        }
    }
}
