//! μ-deformed elementary and Bose functions.
//!
//! All three functions are evaluated by direct accumulation of their
//! defining series, stopping once a provable bound on the remaining tail is
//! below the requested tolerance. Near `z = 1` the Bose function switches to
//! an Euler–Maclaurin tail (see [`mu_polylog`]).

use std::fmt;
use std::str::FromStr;

use crate::bracket::DeformationParameter;
use crate::error::{Error, Result};
use crate::quadrature::{adaptive, QuadratureRule};
use crate::scalar::Real;
use crate::series::TruncatedPowerSeries;

/// Tolerance and term budget for series evaluation.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SummationControl<F> {
    tol: F,
    max_terms: usize,
}

impl<F: Real> SummationControl<F> {
    pub const DEFAULT_MAX_TERMS: usize = 10_000_000;

    pub fn new(tol: F, max_terms: usize) -> Result<Self> {
        if !(tol > F::zero()) || !tol.is_finite() {
            return Err(Error::domain(format!("tolerance must be positive, got {tol:?}")));
        }
        if max_terms == 0 {
            return Err(Error::domain("max_terms must be at least 1"));
        }
        Ok(Self { tol, max_terms })
    }

    pub fn with_tol(tol: F) -> Result<Self> {
        Self::new(tol, Self::DEFAULT_MAX_TERMS)
    }

    pub fn tol(&self) -> F {
        self.tol
    }

    pub fn max_terms(&self) -> usize {
        self.max_terms
    }

    /// Absolute target, floored at the rounding level of `magnitude`.
    fn target(&self, magnitude: F) -> F {
        self.tol.max(F::lit(16.0) * F::epsilon() * magnitude.abs())
    }
}

impl<F: Real> Default for SummationControl<F> {
    fn default() -> Self {
        Self {
            tol: F::lit(1e-12),
            max_terms: Self::DEFAULT_MAX_TERMS,
        }
    }
}

/// A converged sum with its bookkeeping.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Summation<F> {
    pub value: F,
    /// Number of series terms added explicitly.
    pub terms: usize,
    /// Bound on the neglected remainder.
    pub error_bound: F,
}

/// Order `l` of a Bose function, a non-negative half-integer held exactly.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BoseOrder {
    twice: u32,
}

impl BoseOrder {
    pub const ZERO: Self = Self { twice: 0 };
    pub const HALF: Self = Self { twice: 1 };
    pub const ONE: Self = Self { twice: 2 };
    pub const THREE_HALVES: Self = Self { twice: 3 };
    pub const TWO: Self = Self { twice: 4 };
    pub const FIVE_HALVES: Self = Self { twice: 5 };

    /// `numerator / denominator` with denominator 1 or 2.
    pub fn new(numerator: u32, denominator: u32) -> Result<Self> {
        match denominator {
            1 => Ok(Self {
                twice: numerator * 2,
            }),
            2 => Ok(Self { twice: numerator }),
            _ => Err(Error::domain(format!(
                "Bose order must be a half-integer, got {numerator}/{denominator}"
            ))),
        }
    }

    pub fn integer(l: u32) -> Self {
        Self { twice: 2 * l }
    }

    /// The order `k/2`.
    pub fn from_halves(k: u32) -> Self {
        Self { twice: k }
    }

    pub fn halves(self) -> u32 {
        self.twice
    }

    pub fn is_integer(self) -> bool {
        self.twice.is_multiple_of(2)
    }

    pub fn to_f64(self) -> f64 {
        f64::from(self.twice) / 2.0
    }

    /// `n^l`, using an integer power and at most one square root.
    pub fn power<F: Real>(self, n: F) -> F {
        let int = n.powi((self.twice / 2) as i32);
        if self.is_integer() {
            int
        } else {
            int * n.sqrt()
        }
    }
}

impl fmt::Display for BoseOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

impl FromStr for BoseOrder {
    type Err = Error;

    /// Accepts `"3/2"`, `"2"`, or a decimal such as `"1.5"`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::domain(format!("cannot parse Bose order from {s:?}"));
        let s = s.trim();
        if let Some((num, den)) = s.split_once('/') {
            let num: u32 = num.trim().parse().map_err(|_| bad())?;
            let den: u32 = den.trim().parse().map_err(|_| bad())?;
            if den == 2 || den == 1 {
                return Self::new(num, den);
            }
            return Err(bad());
        }
        let x: f64 = s.parse().map_err(|_| bad())?;
        let twice = 2.0 * x;
        if x < 0.0 || twice.fract() != 0.0 || twice > f64::from(u32::MAX) {
            return Err(bad());
        }
        Ok(Self {
            twice: twice as u32,
        })
    }
}

/// `exp_μ(x) = Σ_{n>=0} x^n / [n]_μ!`.
///
/// For `μ > 0` the term ratio tends to `μx`, so the series needs `|x| < 1/μ`.
/// For negative `x` the sum alternates and its rounding error scales with
/// `exp_μ(|x|)` rather than with the result.
pub fn mu_exp<F: Real>(
    x: F,
    mu: &DeformationParameter<F>,
    ctl: &SummationControl<F>,
) -> Result<F> {
    mu_exp_summed(x, mu, ctl).map(|s| s.value)
}

pub fn mu_exp_summed<F: Real>(
    x: F,
    mu: &DeformationParameter<F>,
    ctl: &SummationControl<F>,
) -> Result<Summation<F>> {
    if !x.is_finite() {
        return Err(Error::domain(format!("mu_exp argument must be finite, got {x:?}")));
    }
    let m = *mu.value();
    if m * x.abs() >= F::one() {
        return Err(Error::divergence(format!(
            "mu_exp series needs |x| < 1/mu (x = {x:?}, mu = {m:?})"
        )));
    }
    let one = F::one();
    let mut term = one;
    let mut sum = one;
    for n in 1..=ctl.max_terms {
        let nf = F::from_count(n);
        term = term * x * (one + nf * m) / nf;
        sum = sum + term;
        // For k >= n+1 the ratio |t_{k+1}/t_k| = |x|(1/(k+1) + μ) is at most rho.
        let rho = x.abs() * (one / (nf + F::lit(2.0)) + m);
        if rho < one {
            let next = term.abs() * x.abs() * (one / (nf + one) + m);
            let bound = next / (one - rho);
            if bound <= ctl.target(sum) {
                return Ok(Summation {
                    value: sum,
                    terms: n + 1,
                    error_bound: bound,
                });
            }
        }
        if !sum.is_finite() {
            return Err(Error::NonFinite(format!("mu_exp({x:?}) overflowed")));
        }
    }
    Err(Error::Convergence {
        terms: ctl.max_terms,
        bound: f64::INFINITY,
        tol: ctl.tol.as_f64(),
    })
}

/// `ln_μ(x) = -Σ_{n>=1} (1-x)^n / [n]_μ`, defined for `|1 - x| < 1`.
pub fn mu_ln<F: Real>(
    x: F,
    mu: &DeformationParameter<F>,
    ctl: &SummationControl<F>,
) -> Result<F> {
    let u = F::one() - x;
    if !(u.abs() < F::one()) {
        return Err(Error::domain(format!(
            "mu_ln series needs |1 - x| < 1, got x = {x:?}"
        )));
    }
    let m = *mu.value();
    let one = F::one();
    let ratio_bound = u.abs();
    let mut power = one;
    let mut sum = F::zero();
    for n in 1..=ctl.max_terms {
        let nf = F::from_count(n);
        power = power * u;
        sum = sum + power * (one + m * nf) / nf;
        // Ratio of consecutive terms is below |u|.
        let n1 = nf + one;
        let next = (power * u).abs() * (one + m * n1) / n1;
        let bound = next / (one - ratio_bound);
        if bound <= ctl.target(sum) {
            return Ok(-sum);
        }
    }
    Err(Error::Convergence {
        terms: ctl.max_terms,
        bound: f64::NAN,
        tol: ctl.tol.as_f64(),
    })
}

/// Deformed Bose function `g_l^{(μ)}(z) = Σ_{n>=1} [n]_μ z^n / n^{l+1}`.
pub fn mu_polylog<F: Real>(
    l: BoseOrder,
    z: F,
    mu: &DeformationParameter<F>,
    ctl: &SummationControl<F>,
) -> Result<F> {
    mu_polylog_summed(l, z, mu, ctl).map(|s| s.value)
}

/// Bose function together with its term count and remainder bound.
///
/// Defined for `0 <= z <= 1`. At `z = 1` the series converges only when
/// `l > 0` (for `μ > 0`, where `[n]_μ <= 1/μ`) or `l > 1` (for `μ = 0`).
///
/// For `z <= 0.8` the series is summed directly with the geometric tail bound
/// `t_{n+1}/(1-z)`. Closer to `z = 1` the first [`EM_START`]` - 1` terms are
/// summed directly and the rest by Euler–Maclaurin: the summand
/// `e^{-ax} x^{-l} / (1+μx)` with `a = -ln z` is completely monotone, so the
/// remainder after any correction term is bounded by the next one.
pub fn mu_polylog_summed<F: Real>(
    l: BoseOrder,
    z: F,
    mu: &DeformationParameter<F>,
    ctl: &SummationControl<F>,
) -> Result<Summation<F>> {
    if !(z >= F::zero() && z <= F::one()) {
        return Err(Error::domain(format!(
            "Bose function argument must lie in [0, 1], got {z:?}"
        )));
    }
    let m = *mu.value();
    if z == F::one() {
        let converges = if m > F::zero() {
            l.halves() > 0
        } else {
            l.halves() > 2
        };
        if !converges {
            return Err(Error::divergence(format!(
                "g_{l}^(mu={m:?})(1) diverges"
            )));
        }
    }
    if z == F::zero() {
        return Ok(Summation {
            value: F::zero(),
            terms: 0,
            error_bound: F::zero(),
        });
    }

    let one = F::one();
    let term = |n: usize| -> F {
        let nf = F::from_count(n);
        z.powi(n as i32) / (l.power(nf) * (one + m * nf))
    };
    let use_em = z > F::lit(0.8);
    let mut sum = F::zero();
    for n in 1..=ctl.max_terms {
        if use_em && n == EM_START {
            return euler_maclaurin_tail(l, z, m, ctl, sum, n);
        }
        sum = sum + term(n);
        let bound = if z < one {
            term(n + 1) / (one - z)
        } else {
            direct_tail_at_one(l, m, n)
        };
        if bound <= ctl.target(sum) {
            return Ok(Summation {
                value: sum,
                terms: n,
                error_bound: bound,
            });
        }
    }
    Err(Error::Convergence {
        terms: ctl.max_terms,
        bound: f64::NAN,
        tol: ctl.tol.as_f64(),
    })
}

/// Index at which the Euler–Maclaurin tail takes over.
pub const EM_START: usize = 64;

/// Integral-comparison bound on `Σ_{k>n} k^{-l}/(1+μk)`.
fn direct_tail_at_one<F: Real>(l: BoseOrder, m: F, n: usize) -> F {
    let nf = F::from_count(n);
    let lf = F::lit(l.to_f64());
    if m > F::zero() {
        F::one() / (m * lf * l.power(nf))
    } else {
        nf / (l.power(nf) * (lf - F::one()))
    }
}

// B_2, B_4, ..., B_26.
const BERNOULLI_EVEN: [f64; 13] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
];

/// Taylor coefficients of `e^{-ax} x^{-l} / (1+μx)` about `x = start`.
fn summand_taylor<F: Real>(
    l: BoseOrder,
    a: F,
    m: F,
    start: F,
    order: usize,
) -> TruncatedPowerSeries<F> {
    let one = F::one();
    let lf = F::lit(l.to_f64());
    let mut exp_part = vec![(-a * start).exp()];
    let mut pow_part = vec![one / l.power(start)];
    let denom = one + m * start;
    let mut rat_part = vec![one / denom];
    for k in 1..=order {
        let kf = F::from_count(k);
        exp_part.push(exp_part[k - 1] * (-a) / kf);
        pow_part.push(pow_part[k - 1] * (-lf - kf + one) / (kf * start));
        rat_part.push(rat_part[k - 1] * (-m / denom));
    }
    let e = TruncatedPowerSeries::new(order, exp_part);
    let p = TruncatedPowerSeries::new(order, pow_part);
    let r = TruncatedPowerSeries::new(order, rat_part);
    &(&e * &p) * &r
}

fn euler_maclaurin_tail<F: Real>(
    l: BoseOrder,
    z: F,
    m: F,
    ctl: &SummationControl<F>,
    head: F,
    start: usize,
) -> Result<Summation<F>> {
    let one = F::one();
    let a = -z.ln();
    let nf = F::from_count(start);
    let taylor = summand_taylor(l, a, m, nf, 2 * BERNOULLI_EVEN.len() + 1);
    let correction = |j: usize| F::lit(BERNOULLI_EVEN[j - 1] / (2 * j) as f64) * taylor.coeff(2 * j - 1);

    // ∫_N^∞ f(x) dx with x = N/s²: 2 N^{1-l} e^{-aN/s²} s^{2l-1} / (s² + μN).
    let prefactor = F::lit(2.0) * nf / l.power(nf);
    let exponent = l.halves() as i32 - 1;
    let mu_n = m * nf;
    let a_n = a * nf;
    let integrand = move |s: F| -> F {
        if s <= F::zero() {
            return F::zero();
        }
        let s2 = s * s;
        let damp = if a_n > F::zero() { (-a_n / s2).exp() } else { one };
        if damp == F::zero() {
            return F::zero();
        }
        prefactor * damp * s.powi(exponent) / (s2 + mu_n)
    };
    let rule = QuadratureRule::gauss_legendre(10)?;
    let rough = head + taylor.coeff(0);
    let quad_tol = ctl.target(rough) * F::lit(0.25);
    let integral = adaptive(&rule, &integrand, F::zero(), one, quad_tol, 400);
    if !integral.value.is_finite() {
        return Err(Error::NonFinite(format!(
            "tail integral of g_{l} at z = {z:?} is not finite"
        )));
    }

    let mut tail = integral.value + taylor.coeff(0) * F::lit(0.5);
    let mut remainder = correction(1).abs();
    let target = ctl.target(head + tail);
    let mut j = 1;
    while j < BERNOULLI_EVEN.len() {
        tail = tail - correction(j);
        remainder = correction(j + 1).abs();
        if remainder <= target * F::lit(0.25) {
            break;
        }
        j += 1;
    }
    let value = head + tail;
    let bound = remainder + integral.error;
    if bound > ctl.target(value) {
        return Err(Error::Convergence {
            terms: start - 1,
            bound: bound.as_f64(),
            tol: ctl.tol.as_f64(),
        });
    }
    Ok(Summation {
        value,
        terms: start - 1,
        error_bound: bound,
    })
}
