//! Data tables behind the standard plots of the μ-calculus and the μ-Bose gas.
//!
//! | id | rows | columns |
//! |----|------|---------|
//! | 1 | `x` | ordinary and μ-derivatives of `x³`, `ln(1+x)`, `exp(x)` |
//! | 2 | `x` | `exp_μ(x)` for each μ in a list |
//! | 3 | `x` | `ln_μ(x)` for each μ in a list |
//! | 4 | `z` | `g_0 .. g_5` at fixed μ |
//! | 5 | `μ` | `T_c^{(μ)}/T_c` |
//! | 6 | `μ` | `(λ³/v) C_v/N` below `T_c`, and `C_v/N` at `T_c^{(μ)}` |
//!
//! Grid points where a function is undefined or its series fails are left
//! out and counted in [`Figure::omitted`].

use crate::bracket::DeformationParameter;
use crate::calculus::{mu_derivative, mu_derivative_numeric};
use crate::error::{Error, Result};
use crate::polynomial::DensePolynomial;
use crate::quadrature::QuadratureRule;
use crate::special::{mu_exp, mu_ln, mu_polylog, BoseOrder, SummationControl};
use crate::table::{Cell, Table};
use crate::thermo::{tc_ratio, tc_ratio_rounded};

/// Evenly spaced points `min, ..., max` with `steps` intervals.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Grid {
    pub min: f64,
    pub max: f64,
    pub steps: usize,
}

impl Grid {
    pub fn new(min: f64, max: f64, steps: usize) -> Result<Self> {
        if !(min.is_finite() && max.is_finite() && min <= max) {
            return Err(Error::domain(format!("invalid grid [{min}, {max}]")));
        }
        Ok(Self { min, max, steps })
    }

    pub fn points(&self) -> impl Iterator<Item = f64> + '_ {
        let width = self.max - self.min;
        let steps = self.steps;
        (0..=steps).map(move |i| {
            if i == steps {
                self.max
            } else {
                self.min + width * i as f64 / steps as f64
            }
        })
    }
}

/// Overrides for a figure's defaults.
#[derive(Clone, Debug, Default)]
pub struct FigureOptions {
    /// Abscissa grid (`x`, `z` or `μ` depending on the figure).
    pub grid: Option<Grid>,
    /// Deformation for figures 1 and 4.
    pub mu: Option<f64>,
    /// Deformations for figures 2 and 3.
    pub mu_list: Option<Vec<f64>>,
    /// Use the rounded constant 2.61 in figure 5.
    pub rounded_zeta: bool,
    pub control: SummationControl<f64>,
}

/// An emitted figure table and the number of grid points dropped.
#[derive(Clone, Debug)]
pub struct Figure {
    pub table: Table,
    pub omitted: usize,
}

pub const FIGURE_IDS: std::ops::RangeInclusive<u8> = 1..=6;

/// Default μ values for the exponential and logarithm figures.
pub const DEFAULT_MU_LIST: [f64; 3] = [0.0, 0.3, 0.6];

pub fn default_grid(id: u8) -> Option<Grid> {
    let (min, max, steps) = match id {
        1 => (0.0, 2.0, 40),
        2 => (-1.5, 1.5, 60),
        3 => (0.05, 1.95, 38),
        4 => (0.0, 0.99, 99),
        5 | 6 => (0.0, 0.9, 90),
        _ => return None,
    };
    Some(Grid { min, max, steps })
}

pub fn emit_figure(id: u8, opts: &FigureOptions) -> Result<Figure> {
    let grid = match (opts.grid, default_grid(id)) {
        (_, None) => {
            return Err(Error::domain(format!("figure id must be 1..=6, got {id}")))
        }
        (Some(g), _) => g,
        (None, Some(g)) => g,
    };
    let ctl = &opts.control;
    match id {
        1 => {
            let mu = DeformationParameter::new(opts.mu.unwrap_or(0.7))?;
            derivative_figure(&grid, &mu)
        }
        2 | 3 => {
            let list = opts.mu_list.clone().unwrap_or_else(|| DEFAULT_MU_LIST.to_vec());
            let mus = list
                .into_iter()
                .map(DeformationParameter::new)
                .collect::<Result<Vec<_>>>()?;
            let prefix = if id == 2 { "exp_mu" } else { "ln_mu" };
            let columns = std::iter::once("x".to_owned())
                .chain(mus.iter().map(|m| format!("{prefix}_{}", crate::table::format_number(m.get()))));
            sweep(Table::new(columns), &grid, |x| {
                let mut row = vec![Cell::from(x)];
                for m in &mus {
                    let v = if id == 2 { mu_exp(x, m, ctl)? } else { mu_ln(x, m, ctl)? };
                    row.push(v.into());
                }
                Ok(row)
            })
        }
        4 => {
            let mu = DeformationParameter::new(opts.mu.unwrap_or(0.4))?;
            let orders: Vec<BoseOrder> = (0..=5).map(BoseOrder::integer).collect();
            let columns = std::iter::once("z".to_owned()).chain(orders.iter().map(|l| format!("g{l}")));
            sweep(Table::new(columns), &grid, |z| {
                let mut row = vec![Cell::from(z)];
                for &l in &orders {
                    row.push(mu_polylog(l, z, &mu, ctl)?.into());
                }
                Ok(row)
            })
        }
        5 => sweep(Table::new(["mu", "tc_ratio"]), &grid, |m| {
            let mu = DeformationParameter::new(m)?;
            let r = if opts.rounded_zeta {
                tc_ratio_rounded(&mu, ctl)?
            } else {
                tc_ratio(&mu, ctl)?
            };
            Ok(vec![m.into(), r.into()])
        }),
        _ => sweep(
            Table::new(["mu", "cv_scaled", "cv_at_tc"]),
            &grid,
            |m| {
                let mu = DeformationParameter::new(m)?;
                let g52 = mu_polylog(BoseOrder::FIVE_HALVES, 1.0, &mu, ctl)?;
                let g32 = mu_polylog(BoseOrder::THREE_HALVES, 1.0, &mu, ctl)?;
                Ok(vec![m.into(), (3.75 * g52).into(), (3.75 * g52 / g32).into()])
            },
        ),
    }
}

fn sweep(
    mut table: Table,
    grid: &Grid,
    mut row: impl FnMut(f64) -> Result<Vec<Cell>>,
) -> Result<Figure> {
    let mut omitted = 0;
    for x in grid.points() {
        match row(x) {
            Ok(r) => table.push(r),
            Err(_) => omitted += 1,
        }
    }
    Ok(Figure { table, omitted })
}

fn derivative_figure(grid: &Grid, mu: &DeformationParameter<f64>) -> Result<Figure> {
    let rule = QuadratureRule::gauss_legendre(64)?;
    let cube = DensePolynomial::monomial(3, 1.0);
    let cube_mu = mu_derivative(&cube, mu);
    let table = Table::new([
        "x",
        "x3_d",
        "x3_dmu",
        "log1p_d",
        "log1p_dmu",
        "exp_d",
        "exp_dmu",
    ]);
    sweep(table, grid, |x| {
        if x <= -1.0 {
            return Err(Error::domain("ln(1+x) needs x > -1"));
        }
        let log_d = |t: f64| 1.0 / (1.0 + t);
        Ok(vec![
            x.into(),
            (3.0 * x * x).into(),
            cube_mu.eval(&x).into(),
            log_d(x).into(),
            mu_derivative_numeric(log_d, x, mu, &rule)?.into(),
            x.exp().into(),
            mu_derivative_numeric(f64::exp, x, mu, &rule)?.into(),
        ])
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn num(c: &Cell) -> f64 {
        match c {
            Cell::Number(x) => *x,
            other => panic!("not a number: {other:?}"),
        }
    }

    #[test]
    fn grid_points() {
        let g = Grid::new(0.0, 1.0, 4).unwrap();
        assert_eq!(g.points().collect::<Vec<_>>(), [0.0, 0.25, 0.5, 0.75, 1.0]);
        assert_eq!(Grid::new(2.0, 2.0, 0).unwrap().points().count(), 1);
        assert!(Grid::new(1.0, 0.0, 3).is_err());
        assert!(Grid::new(f64::NAN, 0.0, 3).is_err());
        let g = Grid::new(0.0, 0.9, 90).unwrap();
        assert_eq!(g.points().last(), Some(0.9));
    }

    #[test]
    fn undeformed_derivative_curves_coincide() {
        let opts = FigureOptions {
            mu: Some(0.0),
            ..Default::default()
        };
        let fig = emit_figure(1, &opts).unwrap();
        assert_eq!(fig.omitted, 0);
        for row in fig.table.rows() {
            for pair in [(1, 2), (3, 4), (5, 6)] {
                let (a, b) = (num(&row[pair.0]), num(&row[pair.1]));
                assert!((a - b).abs() <= 1e-13 * a.abs().max(1.0));
            }
        }
    }

    #[test]
    fn deformed_derivative_lies_below_ordinary() {
        let fig = emit_figure(1, &FigureOptions::default()).unwrap();
        for row in fig.table.rows().iter().skip(1) {
            for pair in [(1, 2), (3, 4), (5, 6)] {
                assert!(num(&row[pair.1]) < num(&row[pair.0]));
            }
        }
    }

    #[test]
    fn exponential_figure_omits_divergent_points() {
        let opts = FigureOptions {
            mu_list: Some(vec![0.0, 0.9]),
            grid: Some(Grid::new(-2.0, 2.0, 4).unwrap()),
            ..Default::default()
        };
        let fig = emit_figure(2, &opts).unwrap();
        assert_eq!(fig.table.columns(), ["x", "exp_mu_0", "exp_mu_0.9"]);
        assert_eq!(fig.omitted, 2);
        assert_eq!(fig.table.rows().len(), 3);
    }

    #[test]
    fn logarithm_figure_defaults() {
        let fig = emit_figure(3, &FigureOptions::default()).unwrap();
        assert_eq!(fig.table.columns(), ["x", "ln_mu_0", "ln_mu_0.3", "ln_mu_0.6"]);
        assert_eq!(fig.omitted, 0);
        assert_eq!(fig.table.rows().len(), 39);
    }

    #[test]
    fn bose_figure_is_ordered_in_l() {
        let fig = emit_figure(4, &FigureOptions::default()).unwrap();
        assert_eq!(fig.table.columns(), ["z", "g0", "g1", "g2", "g3", "g4", "g5"]);
        for row in fig.table.rows() {
            let z = num(&row[0]);
            if z > 0.0 && z < 1.0 {
                for w in row[1..].windows(2) {
                    assert!(num(&w[0]) > num(&w[1]), "z={z}");
                }
            }
        }
    }

    #[test]
    fn tc_figure_starts_at_one_and_increases() {
        let fig = emit_figure(5, &FigureOptions::default()).unwrap();
        let rows = fig.table.rows();
        assert_eq!(rows.len(), 91);
        assert_eq!(num(&rows[0][1]), 1.0);
        assert!(rows.windows(2).all(|w| num(&w[1][1]) > num(&w[0][1])));
        let rounded = emit_figure(
            5,
            &FigureOptions {
                rounded_zeta: true,
                ..Default::default()
            },
        )
        .unwrap();
        assert!((num(&rounded.table.rows()[0][1]) - 1.0).abs() < 1e-3);
    }

    #[test]
    fn specific_heat_figure_decreases_in_mu() {
        let fig = emit_figure(6, &FigureOptions::default()).unwrap();
        let rows = fig.table.rows();
        assert!((num(&rows[0][2]) - 1.925_671_675_481_954_5).abs() < 1e-10);
        assert!(rows.windows(2).all(|w| num(&w[1][1]) < num(&w[0][1])));
    }

    #[test]
    fn bad_id_and_mu_are_rejected() {
        assert!(emit_figure(0, &FigureOptions::default()).is_err());
        assert!(emit_figure(7, &FigureOptions::default()).is_err());
        let opts = FigureOptions {
            mu: Some(1.5),
            ..Default::default()
        };
        assert!(emit_figure(4, &opts).is_err());
    }
}
