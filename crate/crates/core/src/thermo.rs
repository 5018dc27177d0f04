//! Thermodynamics of the μ-deformed ideal Bose gas in reduced units
//! (`ħ = m = k_B = 1`).
//!
//! Quantities come in the thermodynamic-limit form built on the deformed Bose
//! functions `g_l^{(μ)}`; only [`GasState::total_particle_number`] and
//! [`GasState::log_partition`] carry the explicit ground-state terms.

use std::f64::consts::PI;
use std::fmt;

use crate::bracket::DeformationParameter;
use crate::error::{Error, Result};
use crate::special::{mu_polylog, BoseOrder, SummationControl};

/// Condensation threshold slack on `λ³/v`: ties go to the condensed phase.
pub const REGIME_SLACK: f64 = 1e-12;

/// Upper end of the fugacity bracket for the uncondensed phase.
const Z_MAX: f64 = 1.0 - 1e-15;

/// Literal value of `ζ(3/2)` as it is usually quoted.
pub const ZETA_3_2_ROUNDED: f64 = 2.61;

type Mu = DeformationParameter<f64>;
type Ctl = SummationControl<f64>;

/// `λ = sqrt(2π/T)`.
pub fn thermal_wavelength(temperature: f64) -> Result<f64> {
    if !(temperature > 0.0) || !temperature.is_finite() {
        return Err(Error::domain(format!(
            "temperature must be positive and finite, got {temperature}"
        )));
    }
    Ok((2.0 * PI / temperature).sqrt())
}

/// Phase of the gas relative to the condensation point.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Regime {
    AboveTc,
    BelowTc,
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Regime::AboveTc => "above_tc",
            Regime::BelowTc => "below_tc",
        })
    }
}

fn g(l: BoseOrder, z: f64, mu: &Mu, ctl: &Ctl) -> Result<f64> {
    mu_polylog(l, z, mu, ctl)
}

/// Solves `g_{3/2}^{(μ)}(z) = y` for the fugacity, where `y = λ³/v`.
///
/// Returns `z = 1` and [`Regime::BelowTc`] once `y` reaches
/// `g_{3/2}^{(μ)}(1)` (less [`REGIME_SLACK`]). Otherwise the root is
/// bracketed on `[0, 1 - 1e-15]` and refined by safeguarded Newton steps,
/// using `z g'_{3/2} = g_{1/2}`.
pub fn fugacity_from_density(y: f64, mu: &Mu, ctl: &Ctl) -> Result<(f64, Regime)> {
    if !(y >= 0.0) || !y.is_finite() {
        return Err(Error::domain(format!(
            "density parameter must be finite and non-negative, got {y}"
        )));
    }
    if y == 0.0 {
        return Ok((0.0, Regime::AboveTc));
    }
    let critical = g(BoseOrder::THREE_HALVES, 1.0, mu, ctl)?;
    if y >= critical - REGIME_SLACK {
        return Ok((1.0, Regime::BelowTc));
    }
    let residual = |z: f64| g(BoseOrder::THREE_HALVES, z, mu, ctl).map(|v| v - y);
    let (mut lo, mut hi) = (0.0, Z_MAX);
    // g_{3/2}(z) >= z [1]_μ, so the root lies below y / [1]_μ.
    hi = f64::min(hi, y / mu.unity());
    if residual(hi)? < 0.0 {
        hi = Z_MAX;
    }
    let mut z = 0.5 * (lo + hi);
    let mut best = (f64::INFINITY, z);
    for _ in 0..300 {
        let r = residual(z)?;
        if r.abs() < best.0 {
            best = (r.abs(), z);
        }
        if r.abs() <= REGIME_SLACK {
            break;
        }
        if r > 0.0 {
            hi = z;
        } else {
            lo = z;
        }
        let slope = g(BoseOrder::HALF, z, mu, ctl)? / z;
        let newton = z - r / slope;
        let next = if newton > lo && newton < hi && slope.is_finite() {
            newton
        } else {
            0.5 * (lo + hi)
        };
        if next == z || hi - lo <= f64::EPSILON * hi {
            break;
        }
        z = next;
    }
    Ok((best.1, Regime::AboveTc))
}

/// Thermal and ground-state contributions to the particle number.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ParticleNumber {
    pub thermal: f64,
    pub ground: f64,
}

impl ParticleNumber {
    pub fn total(&self) -> f64 {
        self.thermal + self.ground
    }
}

/// Equilibrium state of the gas: `(μ, T, v, z)` with `λ` derived.
#[derive(Clone, Debug, PartialEq)]
pub struct GasState {
    mu: Mu,
    temperature: f64,
    volume: f64,
    fugacity: f64,
    wavelength: f64,
    regime: Regime,
}

impl GasState {
    /// State at temperature `T` and specific volume `v`, with the fugacity
    /// fixed by the density equation.
    pub fn equilibrium(mu: Mu, temperature: f64, volume: f64, ctl: &Ctl) -> Result<Self> {
        let wavelength = thermal_wavelength(temperature)?;
        check_volume(volume)?;
        let (fugacity, regime) = fugacity_from_density(wavelength.powi(3) / volume, &mu, ctl)?;
        Ok(Self {
            mu,
            temperature,
            volume,
            fugacity,
            wavelength,
            regime,
        })
    }

    /// State at temperature `T` and fugacity `z`; the specific volume follows
    /// from `λ³/v = g_{3/2}^{(μ)}(z)`. `z = 1` is the onset of condensation.
    pub fn from_fugacity(mu: Mu, temperature: f64, fugacity: f64, ctl: &Ctl) -> Result<Self> {
        let wavelength = thermal_wavelength(temperature)?;
        check_fugacity(fugacity)?;
        if fugacity == 0.0 {
            return Err(Error::domain("an empty gas has no finite specific volume"));
        }
        let y = g(BoseOrder::THREE_HALVES, fugacity, &mu, ctl)?;
        let regime = if fugacity == 1.0 {
            Regime::BelowTc
        } else {
            Regime::AboveTc
        };
        Ok(Self {
            mu,
            temperature,
            volume: wavelength.powi(3) / y,
            fugacity,
            wavelength,
            regime,
        })
    }

    /// State assembled from independent parts.
    ///
    /// The density equation is not enforced, but the regime must match the
    /// fugacity: condensed states have `z = 1`, uncondensed ones `z < 1`.
    pub fn from_parts(
        mu: Mu,
        temperature: f64,
        volume: f64,
        fugacity: f64,
        regime: Regime,
    ) -> Result<Self> {
        let wavelength = thermal_wavelength(temperature)?;
        check_volume(volume)?;
        check_fugacity(fugacity)?;
        match (regime, fugacity == 1.0) {
            (Regime::BelowTc, false) => {
                return Err(Error::State(format!(
                    "condensed state needs z = 1, got z = {fugacity}"
                )))
            }
            (Regime::AboveTc, true) => {
                return Err(Error::State("uncondensed state needs z < 1".into()))
            }
            _ => {}
        }
        Ok(Self {
            mu,
            temperature,
            volume,
            fugacity,
            wavelength,
            regime,
        })
    }

    pub fn mu(&self) -> &Mu {
        &self.mu
    }

    pub fn temperature(&self) -> f64 {
        self.temperature
    }

    /// Specific volume `v = V/N`.
    pub fn specific_volume(&self) -> f64 {
        self.volume
    }

    pub fn fugacity(&self) -> f64 {
        self.fugacity
    }

    pub fn wavelength(&self) -> f64 {
        self.wavelength
    }

    pub fn regime(&self) -> Regime {
        self.regime
    }

    /// `λ³/v`.
    pub fn degeneracy(&self) -> f64 {
        self.wavelength.powi(3) / self.volume
    }

    fn g(&self, l: BoseOrder, ctl: &Ctl) -> Result<f64> {
        g(l, self.fugacity, &self.mu, ctl)
    }

    /// `N = (V/λ³) g_{3/2}^{(μ)}(z) + g_0^{(μ)}(z)`.
    ///
    /// The ground-state series diverges at `z = 1`; use
    /// [`thermal_particle_number`](Self::thermal_particle_number) there.
    pub fn total_particle_number(&self, volume: f64, ctl: &Ctl) -> Result<ParticleNumber> {
        Ok(ParticleNumber {
            thermal: self.thermal_particle_number(volume, ctl)?,
            ground: self.g(BoseOrder::ZERO, ctl)?,
        })
    }

    /// `(V/λ³) g_{3/2}^{(μ)}(z)`.
    pub fn thermal_particle_number(&self, volume: f64, ctl: &Ctl) -> Result<f64> {
        check_volume(volume)?;
        Ok(volume / self.wavelength.powi(3) * self.g(BoseOrder::THREE_HALVES, ctl)?)
    }

    /// `ln Z = (V/λ³) g_{5/2}^{(μ)}(z) + g_1^{(μ)}(z)`.
    pub fn log_partition(&self, volume: f64, ctl: &Ctl) -> Result<f64> {
        check_volume(volume)?;
        let bulk = volume / self.wavelength.powi(3) * self.g(BoseOrder::FIVE_HALVES, ctl)?;
        Ok(bulk + self.g(BoseOrder::ONE, ctl)?)
    }

    /// `P = (T/λ³) g_{5/2}^{(μ)}(z)`.
    pub fn pressure(&self, ctl: &Ctl) -> Result<f64> {
        Ok(self.temperature / self.wavelength.powi(3) * self.g(BoseOrder::FIVE_HALVES, ctl)?)
    }

    /// `U/N = (3/2) T (v/λ³) g_{5/2}^{(μ)}(z)`; `z = 1` in the condensed phase.
    pub fn energy_per_particle(&self, ctl: &Ctl) -> Result<f64> {
        Ok(1.5 * self.temperature / self.degeneracy() * self.g(BoseOrder::FIVE_HALVES, ctl)?)
    }

    pub fn internal_energy(&self, particles: f64, ctl: &Ctl) -> Result<f64> {
        Ok(particles * self.energy_per_particle(ctl)?)
    }

    /// `C_v/N`, dispatched on the regime.
    ///
    /// Above `T_c`: `(15/4)(v/λ³) g_{5/2}(z) - (9/4) g_{3/2}(z)/g_{1/2}(z)`.
    /// Below: `(15/4)(v/λ³) g_{5/2}(1)`.
    pub fn specific_heat_per_particle(&self, ctl: &Ctl) -> Result<f64> {
        let bulk = 3.75 / self.degeneracy() * self.g(BoseOrder::FIVE_HALVES, ctl)?;
        match self.regime {
            Regime::BelowTc => Ok(bulk),
            Regime::AboveTc => Ok(bulk - heat_correction(self.fugacity, &self.mu, ctl)?),
        }
    }

    pub fn specific_heat(&self, particles: f64, ctl: &Ctl) -> Result<f64> {
        Ok(particles * self.specific_heat_per_particle(ctl)?)
    }

    /// `S/N = (5/2)(v/λ³) g_{5/2}^{(μ)}(z) - ln z`.
    pub fn entropy_per_particle(&self, ctl: &Ctl) -> Result<f64> {
        if self.fugacity <= 0.0 {
            return Err(Error::domain("entropy needs z > 0"));
        }
        let bulk = 2.5 / self.degeneracy() * self.g(BoseOrder::FIVE_HALVES, ctl)?;
        Ok(match self.regime {
            Regime::BelowTc => bulk,
            Regime::AboveTc => bulk - self.fugacity.ln(),
        })
    }

    pub fn entropy(&self, particles: f64, ctl: &Ctl) -> Result<f64> {
        Ok(particles * self.entropy_per_particle(ctl)?)
    }

    /// `N_0/N = 1 - (v/λ³) g_{3/2}^{(μ)}(1) = 1 - (T/T_c)^{3/2}`, clamped to
    /// `[0, 1]`; zero above `T_c`.
    pub fn condensate_fraction(&self, ctl: &Ctl) -> Result<f64> {
        match self.regime {
            Regime::AboveTc => Ok(0.0),
            Regime::BelowTc => {
                let critical = g(BoseOrder::THREE_HALVES, 1.0, &self.mu, ctl)?;
                Ok((1.0 - critical / self.degeneracy()).clamp(0.0, 1.0))
            }
        }
    }
}

/// `(9/4) g_{3/2}(z) / g_{1/2}(z)`; zero where `g_{1/2}` diverges (`μ = 0`, `z = 1`).
fn heat_correction(z: f64, mu: &Mu, ctl: &Ctl) -> Result<f64> {
    let g12 = match g(BoseOrder::HALF, z, mu, ctl) {
        Ok(v) => v,
        Err(Error::Divergence(_)) => return Ok(0.0),
        Err(e) => return Err(e),
    };
    Ok(2.25 * g(BoseOrder::THREE_HALVES, z, mu, ctl)? / g12)
}

/// Discontinuity of `C_v/N` at `T_c`: `(9/4) g_{3/2}^{(μ)}(1)/g_{1/2}^{(μ)}(1)`.
///
/// Zero in the undeformed gas, where `g_{1/2}(1)` diverges.
pub fn specific_heat_jump(mu: &Mu, ctl: &Ctl) -> Result<f64> {
    heat_correction(1.0, mu, ctl)
}

fn check_volume(v: f64) -> Result<()> {
    if v > 0.0 && v.is_finite() {
        Ok(())
    } else {
        Err(Error::domain(format!("volume must be positive and finite, got {v}")))
    }
}

fn check_fugacity(z: f64) -> Result<()> {
    if (0.0..=1.0).contains(&z) {
        Ok(())
    } else {
        Err(Error::domain(format!("fugacity must lie in [0, 1], got {z}")))
    }
}

/// Virial coefficients of `Pv/T = 1 + A y + B y² + C y³ + D y⁴ + ...`,
/// `y = λ³/v`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct VirialCoefficients {
    pub a2: f64,
    pub a3: f64,
    pub a4: f64,
    pub a5: f64,
}

impl VirialCoefficients {
    pub fn to_array(&self) -> [f64; 4] {
        [self.a2, self.a3, self.a4, self.a5]
    }

    /// `Pv/T` from the truncated expansion.
    pub fn eval(&self, y: f64) -> f64 {
        1.0 + y * (self.a2 + y * (self.a3 + y * (self.a4 + y * self.a5)))
    }
}

/// Closed-form second to fifth virial coefficients of the μ-deformed gas.
pub fn virial_closed_form(mu: &Mu) -> VirialCoefficients {
    let b = |n: u64| mu.bracket_raw(n);
    let (u, b2, b3, b4, b5) = (b(1), b(2), b(3), b(4), b(5));
    let s2 = 2f64.sqrt();
    let s3 = 3f64.sqrt();
    let s5 = 5f64.sqrt();
    let a2 = -b2 / (8.0 * s2 * u.powi(2));
    let a3 = b2.powi(2) / (32.0 * u.powi(4)) - 2.0 * b3 / (27.0 * s3 * u.powi(3));
    let a4 = -5.0 * b2.powi(3) / (256.0 * s2 * u.powi(6))
        + b2 * b3 / (4.0 * s2 * 3.0 * s3 * u.powi(5))
        - 3.0 * b4 / (128.0 * u.powi(4));
    let a5 = 7.0 * b2.powi(4) / (1024.0 * u.powi(8))
        - b2.powi(2) * b3 / (8.0 * 3.0 * s3 * u.powi(7))
        + 2.0 * b3.powi(2) / (243.0 * u.powi(6))
        + b2 * b4 / (32.0 * s2 * u.powi(6))
        - 4.0 * b5 / (125.0 * s5 * u.powi(5));
    VirialCoefficients { a2, a3, a4, a5 }
}

/// `T_c = 2π / (v g_{3/2}^{(μ)}(1))^{2/3}`.
pub fn critical_temperature(volume: f64, mu: &Mu, ctl: &Ctl) -> Result<f64> {
    check_volume(volume)?;
    let critical = g(BoseOrder::THREE_HALVES, 1.0, mu, ctl)?;
    Ok(2.0 * PI / (volume * critical).powf(2.0 / 3.0))
}

/// `T_c^{(μ)}/T_c = (ζ(3/2) / g_{3/2}^{(μ)}(1))^{2/3}`, with `ζ(3/2)` computed
/// by the same summation so that the ratio is exactly 1 at `μ = 0`.
pub fn tc_ratio(mu: &Mu, ctl: &Ctl) -> Result<f64> {
    let zeta = g(BoseOrder::THREE_HALVES, 1.0, &DeformationParameter::undeformed(), ctl)?;
    ratio_against(zeta, mu, ctl)
}

/// [`tc_ratio`] with the rounded constant 2.61 in the numerator.
pub fn tc_ratio_rounded(mu: &Mu, ctl: &Ctl) -> Result<f64> {
    ratio_against(ZETA_3_2_ROUNDED, mu, ctl)
}

fn ratio_against(numerator: f64, mu: &Mu, ctl: &Ctl) -> Result<f64> {
    let critical = g(BoseOrder::THREE_HALVES, 1.0, mu, ctl)?;
    Ok((numerator / critical).powf(2.0 / 3.0))
}
