//! Acceptance checks: one PASS/FAIL line per criterion, non-zero exit if any fail.

use std::process::ExitCode;

use mubose::figures::{emit_figure, FigureOptions};
use mubose::table::Cell;
use mubose::thermo::{
    critical_temperature, specific_heat_jump, tc_ratio, thermal_wavelength, virial_closed_form,
};
use mubose::{
    mu_bracket, mu_derivative, mu_derivative_numeric, mu_leibniz, mu_polylog,
    virial_from_reversion, BoseOrder, Control, GasState, Mu, QuadratureRule, RationalMu,
    RationalPolynomial, Regime,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::strategy::{Strategy, ValueTree};
use proptest::test_runner::TestRunner;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn mu(x: f64) -> Mu {
    Mu::new(x).unwrap()
}

fn ctl() -> Control {
    Control::default()
}

fn check(ok: bool, detail: String) -> Outcome {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn classical_virial() -> Outcome {
    let v = virial_closed_form(&mu(0.0));
    let a_exact = -(2f64.powf(-2.5));
    let b_exact = 0.125 - 2.0 * 3.0 / 3f64.powf(3.5);
    let ok = (v.a2 - a_exact).abs() <= 1e-6
        && (v.a3 - b_exact).abs() <= 1e-6
        && (v.a2 + 0.176_777).abs() <= 1e-6
        && (v.a3 + 0.003_300).abs() <= 1e-6;
    check(ok, format!("A = {:.9}, B = {:.9}", v.a2, v.a3))
}

fn reversion_cross_check() -> Outcome {
    let mut worst: f64 = 0.0;
    for m in [0.0, 0.1, 0.4, 0.7, 0.9] {
        let closed = virial_closed_form(&mu(m)).to_array();
        let series = virial_from_reversion(&mu(m), 6).map_err(|e| e.to_string())?;
        for (a, b) in closed.iter().zip(&series) {
            worst = worst.max(((a - b) / b).abs());
        }
    }
    check(worst <= 1e-10, format!("max relative gap {worst:.2e}"))
}

fn zeta_constant() -> Outcome {
    let g = mu_polylog(BoseOrder::THREE_HALVES, 1.0, &mu(0.0), &ctl()).map_err(|e| e.to_string())?;
    check((g - 2.61).abs() <= 5e-3, format!("g_3/2(1) = {g:.12}"))
}

fn tc_ratio_curve() -> Outcome {
    let c = ctl();
    let ratios: Vec<f64> = (0..=18)
        .map(|i| tc_ratio(&mu(0.05 * i as f64), &c))
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    let increasing = ratios.windows(2).all(|w| w[1] > w[0]);
    check(
        (ratios[0] - 1.0).abs() <= 1e-12 && increasing,
        format!("ratio(0) = {}, ratio(0.9) = {:.6}, increasing = {increasing}", ratios[0], ratios[18]),
    )
}

fn derivative_consistency() -> Outcome {
    let rule = QuadratureRule::gauss_legendre(64).map_err(|e| e.to_string())?;
    let mut worst: f64 = 0.0;
    for m in [0.1, 0.4, 0.7] {
        let m = mu(m);
        for n in 1..=10u64 {
            let b = mu_bracket(n, &m).unwrap();
            for x in [0.3, 1.0, 1.7] {
                let exact = b * f64::powi(x, n as i32 - 1);
                let d = mu_derivative_numeric(|t: f64| n as f64 * t.powi(n as i32 - 1), x, &m, &rule)
                    .map_err(|e| e.to_string())?;
                worst = worst.max((d - exact).abs() / exact.abs().max(1.0));
            }
        }
    }
    check(worst <= 1e-10, format!("max error {worst:.2e}"))
}

fn leibniz_oracle() -> Outcome {
    let coeff = (-30i64..=30, 1i64..=6);
    let poly = proptest::collection::vec(coeff, 0..=7).prop_map(|cs| {
        RationalPolynomial::new(
            cs.into_iter()
                .map(|(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
                .collect(),
        )
    });
    let mut runner = TestRunner::deterministic();
    let mus = [(1, 4), (2, 5)].map(|(n, d)| {
        RationalMu::new(BigRational::new(BigInt::from(n), BigInt::from(d))).unwrap()
    });
    let mut mismatches = 0;
    for _ in 0..100 {
        let f = poly.new_tree(&mut runner).unwrap().current();
        let g = poly.new_tree(&mut runner).unwrap().current();
        for m in &mus {
            if mu_leibniz(&f, &g, m) != mu_derivative(&(&f * &g), m) {
                mismatches += 1;
            }
        }
    }
    check(mismatches == 0, format!("200 exact comparisons, {mismatches} mismatches"))
}

fn partition_number_consistency() -> Outcome {
    let c = Control::with_tol(1e-15).unwrap();
    let m = mu(0.4);
    let t = 1.0;
    let volume = 100.0 * thermal_wavelength(t).unwrap().powi(3);
    let ln_z = |s: f64| -> Result<f64, String> {
        GasState::from_fugacity(m.clone(), t, 0.8 * s.exp(), &c)
            .and_then(|st| st.log_partition(volume, &c))
            .map_err(|e| e.to_string())
    };
    let h = 1e-5;
    let fd = (ln_z(h)? - ln_z(-h)?) / (2.0 * h);
    let n = GasState::from_fugacity(m.clone(), t, 0.8, &c)
        .and_then(|st| st.total_particle_number(volume, &c))
        .map_err(|e| e.to_string())?
        .total();
    check((fd - n).abs() <= 1e-6, format!("z d/dz ln Z = {fd:.10}, N = {n:.10}"))
}

fn thermodynamic_identities() -> Outcome {
    let c = ctl();
    let particles = 1000.0;
    let mut worst_u: f64 = 0.0;
    let mut worst_s: f64 = 0.0;
    for m in [0.0, 0.2, 0.4, 0.7, 0.9] {
        let m = mu(m);
        let tc = critical_temperature(1.0, &m, &c).map_err(|e| e.to_string())?;
        for factor in [0.25, 0.7, 1.0, 1.1, 2.0, 10.0] {
            let st = GasState::equilibrium(m.clone(), factor * tc, 1.0, &c).map_err(|e| e.to_string())?;
            let volume = particles * st.specific_volume();
            let u = st.internal_energy(particles, &c).map_err(|e| e.to_string())?;
            let pv = st.pressure(&c).map_err(|e| e.to_string())? * volume;
            worst_u = worst_u.max((u - 1.5 * pv).abs() / u.abs());

            let g52 = mu_polylog(BoseOrder::FIVE_HALVES, st.fugacity(), &m, &c).map_err(|e| e.to_string())?;
            let ln_z = volume / st.wavelength().powi(3) * g52;
            let assembled = ln_z + u / st.temperature() - particles * st.fugacity().ln();
            let s = st.entropy(particles, &c).map_err(|e| e.to_string())?;
            worst_s = worst_s.max((assembled - s).abs() / s.abs());
        }
    }
    let m = mu(0.4);
    let below = GasState::from_fugacity(m.clone(), 2.0, 1.0, &c).map_err(|e| e.to_string())?;
    let above = GasState::from_parts(m, 2.0, below.specific_volume(), 1.0 - f64::EPSILON, Regime::AboveTc)
        .map_err(|e| e.to_string())?;
    let branch_gap = (above.entropy_per_particle(&c).map_err(|e| e.to_string())?
        - below.entropy_per_particle(&c).map_err(|e| e.to_string())?)
    .abs();
    check(
        worst_u <= 1e-12 && worst_s <= 1e-8 && branch_gap <= 1e-8,
        format!("U-3PV/2 {worst_u:.1e}, entropy identity {worst_s:.1e}, branch gap {branch_gap:.1e}"),
    )
}

fn specific_heat_landmark() -> Outcome {
    let c = ctl();
    let m = mu(0.0);
    let tc = critical_temperature(1.0, &m, &c).map_err(|e| e.to_string())?;
    let at = GasState::equilibrium(m.clone(), tc, 1.0, &c)
        .and_then(|s| s.specific_heat_per_particle(&c))
        .map_err(|e| e.to_string())?;
    let just_above = GasState::equilibrium(m.clone(), tc * (1.0 + 1e-9), 1.0, &c)
        .and_then(|s| s.specific_heat_per_particle(&c))
        .map_err(|e| e.to_string())?;
    let jump = specific_heat_jump(&m, &c).map_err(|e| e.to_string())?;
    let landmark = 15.0 / 4.0 * 1.341_487_257_250_917 / 2.612_375_348_685_488;
    check(
        (at - landmark).abs() <= 1e-3 && (just_above - landmark).abs() <= 1e-3 && jump == 0.0,
        format!("Cv/N at Tc = {at:.9}, just above = {just_above:.6}, jump = {jump}"),
    )
}

fn num(c: &Cell) -> f64 {
    match c {
        Cell::Number(x) => *x,
        _ => f64::NAN,
    }
}

fn monotone_deformation() -> Outcome {
    let c = ctl();
    let mus: Vec<f64> = (0..=9).map(|i| 0.1 * i as f64).collect();
    let orders = [0, 1, 2, 3, 4, 5, 10].map(BoseOrder::from_halves);
    let mut checked = 0;
    for l in orders {
        for z in [0.05, 0.3, 0.6, 0.9, 0.99, 1.0] {
            let values: Vec<f64> = mus
                .iter()
                .filter_map(|&m| mu_polylog(l, z, &mu(m), &c).ok())
                .collect();
            if values.windows(2).any(|w| w[1] >= w[0]) {
                return Err(format!("g_{l}({z}) not decreasing in mu"));
            }
            checked += values.len();
        }
    }
    for z in [0.2, 0.8, 1.0] {
        let pressures: Vec<f64> = mus
            .iter()
            .map(|&m| GasState::from_fugacity(mu(m), 1.0, z, &c).and_then(|s| s.pressure(&c)))
            .collect::<Result<_, _>>()
            .map_err(|e| e.to_string())?;
        if pressures.windows(2).any(|w| w[1] >= w[0]) {
            return Err(format!("pressure at z = {z} not decreasing in mu"));
        }
    }
    let fig4 = emit_figure(4, &FigureOptions::default()).map_err(|e| e.to_string())?;
    let fig4_ordered = fig4.table.rows().iter().all(|r| {
        let z = num(&r[0]);
        z == 0.0 || r[1..].windows(2).all(|w| num(&w[0]) > num(&w[1]))
    });
    let fig6 = emit_figure(6, &FigureOptions::default()).map_err(|e| e.to_string())?;
    let fig6_decreasing = fig6
        .table
        .rows()
        .windows(2)
        .all(|w| num(&w[1][1]) < num(&w[0][1]));
    check(
        fig4_ordered && fig6_decreasing,
        format!("{checked} Bose values; figure 4 ordered = {fig4_ordered}; figure 6 decreasing = {fig6_decreasing}"),
    )
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("classical virial coefficients", classical_virial),
        ("closed-form vs reverted virial coefficients", reversion_cross_check),
        ("zeta(3/2) constant", zeta_constant),
        ("Tc ratio curve", tc_ratio_curve),
        ("numeric vs exact mu-derivative", derivative_consistency),
        ("mu-Leibniz rule over rationals", leibniz_oracle),
        ("ln Z vs particle number", partition_number_consistency),
        ("thermodynamic identities", thermodynamic_identities),
        ("classical specific-heat peak", specific_heat_landmark),
        ("monotone deformation", monotone_deformation),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {detail}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
