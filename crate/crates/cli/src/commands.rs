use mubose::figures::{default_grid, emit_figure, FigureOptions, Grid};
use mubose::special::mu_polylog_summed;
use mubose::table::{Cell, Table};
use mubose::thermo::{
    critical_temperature, tc_ratio, tc_ratio_rounded, virial_closed_form,
};
use mubose::{
    jackson_derivative, mu_bracket, mu_derivative_iterated, mu_derivative_numeric, mu_factorial,
    mu_shift_product, pq_derivative, virial_from_reversion, Control, GasState, Mu, Polynomial,
    QuadratureRule,
};

use crate::args::{Command, DerivArgs, FigureArgs, Function, Operator, StateArgs};
use crate::CliError;

pub struct Output {
    pub table: Table,
    pub warning: Option<String>,
}

impl From<Table> for Output {
    fn from(table: Table) -> Self {
        Self {
            table,
            warning: None,
        }
    }
}

pub fn run(command: &Command, mu: Option<f64>, ctl: &Control) -> Result<Output, CliError> {
    let param = || Mu::new(mu.unwrap_or(0.0));
    Ok(match command {
        Command::Bracket { n } => {
            let m = param()?;
            let mut t = Table::new(["n", "mu", "bracket", "shift_product", "factorial"]);
            t.push(vec![
                (*n as i64).into(),
                m.get().into(),
                mu_bracket(*n, &m)?.into(),
                mu_shift_product(*n, &m).into(),
                mu_factorial(*n, &m).into(),
            ]);
            t.into()
        }
        Command::Polylog { l, z } => {
            let m = param()?;
            let s = mu_polylog_summed(*l, *z, &m, ctl)?;
            let mut t = Table::new(["l", "z", "mu", "value", "terms", "error_bound"]);
            t.push(vec![
                l.to_string().into(),
                (*z).into(),
                m.get().into(),
                s.value.into(),
                s.terms.into(),
                s.error_bound.into(),
            ]);
            t.into()
        }
        Command::Deriv(args) => deriv(args, mu)?.into(),
        Command::Virial { order } => {
            let m = param()?;
            let closed = virial_closed_form(&m).to_array();
            let series = virial_from_reversion(&m, *order)?;
            let gap = closed
                .iter()
                .zip(&series)
                .map(|(a, b)| ((a - b) / b).abs())
                .fold(0.0, f64::max);
            let names = ["a", "b", "c", "d"];
            let columns = std::iter::once("mu".to_owned())
                .chain(names.iter().map(|n| format!("{n}_closed")))
                .chain(names.iter().map(|n| format!("{n}_series")))
                .chain(std::iter::once("max_rel_gap".to_owned()));
            let mut t = Table::new(columns);
            let mut row = vec![Cell::from(m.get())];
            row.extend(closed.iter().map(|&x| Cell::from(x)));
            row.extend(series.iter().take(4).map(|&x| Cell::from(x)));
            row.push(gap.into());
            t.push(row);
            t.into()
        }
        Command::Eos(s) => {
            let state = GasState::equilibrium(param()?, s.temperature, s.v, ctl)?;
            let virial = virial_closed_form(state.mu());
            let mut t = Table::new([
                "mu",
                "T",
                "v",
                "degeneracy",
                "z",
                "regime",
                "pressure",
                "pv_over_t",
                "pv_over_t_virial",
            ]);
            let p = state.pressure(ctl)?;
            t.push(vec![
                state.mu().get().into(),
                s.temperature.into(),
                s.v.into(),
                state.degeneracy().into(),
                state.fugacity().into(),
                state.regime().to_string().into(),
                p.into(),
                (p * s.v / s.temperature).into(),
                virial.eval(state.degeneracy()).into(),
            ]);
            t.into()
        }
        Command::Tc { v, rounded_zeta } => {
            let m = param()?;
            let ratio = if *rounded_zeta {
                tc_ratio_rounded(&m, ctl)?
            } else {
                tc_ratio(&m, ctl)?
            };
            let mut t = Table::new(["mu", "v", "tc", "tc_ratio"]);
            t.push(vec![
                m.get().into(),
                (*v).into(),
                critical_temperature(*v, &m, ctl)?.into(),
                ratio.into(),
            ]);
            t.into()
        }
        Command::Thermo(s) => thermo(s, param()?, ctl)?.into(),
        Command::Figure(args) => figure(args, mu, ctl)?,
    })
}

fn thermo(s: &StateArgs, mu: Mu, ctl: &Control) -> Result<Table, CliError> {
    let state = GasState::equilibrium(mu, s.temperature, s.v, ctl)?;
    let mut t = Table::new([
        "mu",
        "T",
        "v",
        "lambda",
        "degeneracy",
        "z",
        "regime",
        "pressure",
        "energy",
        "specific_heat",
        "entropy",
        "condensate_fraction",
    ]);
    t.push(vec![
        state.mu().get().into(),
        s.temperature.into(),
        s.v.into(),
        state.wavelength().into(),
        state.degeneracy().into(),
        state.fugacity().into(),
        state.regime().to_string().into(),
        state.pressure(ctl)?.into(),
        state.energy_per_particle(ctl)?.into(),
        state.specific_heat_per_particle(ctl)?.into(),
        state.entropy_per_particle(ctl)?.into(),
        state.condensate_fraction(ctl)?.into(),
    ]);
    Ok(t)
}

fn deriv(args: &DerivArgs, mu: Option<f64>) -> Result<Table, CliError> {
    let m = Mu::new(mu.unwrap_or(0.0))?;
    if let Some(function) = args.function {
        let x = args
            .x
            .ok_or_else(|| CliError::Usage("--function needs --x".into()))?;
        if args.operator != Operator::Mu {
            return Err(CliError::Usage(
                "built-in functions support only the mu operator".into(),
            ));
        }
        let rule = QuadratureRule::gauss_legendre(args.nodes)?;
        let (name, d): (&str, fn(f64) -> f64) = match function {
            Function::Cube => ("cube", |t| 3.0 * t * t),
            Function::Log1p => ("log1p", |t| 1.0 / (1.0 + t)),
            Function::Exp => ("exp", f64::exp),
        };
        let dmu = mu_derivative_numeric(d, x, &m, &rule)?;
        let mut t = Table::new(["function", "x", "mu", "derivative", "mu_derivative"]);
        t.push(vec![name.into(), x.into(), m.get().into(), d(x).into(), dmu.into()]);
        return Ok(t);
    }
    let coeffs = args.coeffs.clone().unwrap_or_default();
    let poly = Polynomial::new(coeffs);
    let q = || {
        args.q
            .ok_or_else(|| CliError::Usage("this operator needs --q".into()))
    };
    let result = match args.operator {
        Operator::Mu => mu_derivative_iterated(&poly, &m, args.times)?,
        Operator::Jackson => jackson_derivative(&poly, &q()?)?,
        Operator::Pq => {
            let p = args
                .p
                .ok_or_else(|| CliError::Usage("the pq operator needs --p".into()))?;
            pq_derivative(&poly, &p, &q()?)?
        }
        Operator::Ordinary => poly.derivative(),
    };
    let mut t = Table::new(["power", "coefficient"]);
    for (k, c) in result.coeffs().iter().enumerate() {
        t.push(vec![k.into(), (*c).into()]);
    }
    Ok(t)
}

fn figure(args: &FigureArgs, mu: Option<f64>, ctl: &Control) -> Result<Output, CliError> {
    let base = default_grid(args.id)
        .ok_or_else(|| CliError::Usage(format!("unknown figure id {}", args.id)))?;
    let grid = if args.min.is_some() || args.max.is_some() || args.steps.is_some() {
        Some(Grid::new(
            args.min.unwrap_or(base.min),
            args.max.unwrap_or(base.max),
            args.steps.unwrap_or(base.steps),
        )?)
    } else {
        None
    };
    let opts = FigureOptions {
        grid,
        mu,
        mu_list: args.mu_list.clone(),
        rounded_zeta: args.rounded_zeta,
        control: *ctl,
    };
    let fig = emit_figure(args.id, &opts)?;
    let warning = (fig.omitted > 0)
        .then(|| format!("{} grid point(s) omitted outside the function domain", fig.omitted));
    Ok(Output {
        table: fig.table,
        warning,
    })
}
