//! Truncated power series: arithmetic, composition and functional reversion.
//!
//! The virial expansion of the deformed gas is obtained here by reverting
//! the density series and substituting the result into the pressure series,
//! independently of the closed-form coefficients in [`crate::thermo`].

use std::ops::{Add, Mul, Neg, Sub};

use crate::bracket::DeformationParameter;
use crate::error::{Error, Result};
use crate::scalar::{Real, Scalar};

/// `c_0 + c_1 z + ... + c_K z^K + O(z^{K+1})`.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedPowerSeries<S> {
    coeffs: Vec<S>,
}

impl<S: Scalar> TruncatedPowerSeries<S> {
    /// Series of the given order; missing coefficients are zero and any
    /// beyond `order` are dropped.
    pub fn new(order: usize, mut coeffs: Vec<S>) -> Self {
        coeffs.resize(order + 1, S::zero());
        Self { coeffs }
    }

    /// Order taken from the coefficient count. An empty list gives the zero
    /// series of order 0.
    pub fn from_coeffs(coeffs: Vec<S>) -> Self {
        let order = coeffs.len().saturating_sub(1);
        Self::new(order, coeffs)
    }

    pub fn zero(order: usize) -> Self {
        Self::new(order, Vec::new())
    }

    pub fn constant(order: usize, c: S) -> Self {
        Self::new(order, vec![c])
    }

    /// The indeterminate `z` itself.
    pub fn variable(order: usize) -> Self {
        let mut s = Self::zero(order);
        if order >= 1 {
            s.coeffs[1] = S::one();
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    /// Coefficient of `z^k`; zero above the order.
    pub fn coeff(&self, k: usize) -> S {
        self.coeffs.get(k).cloned().unwrap_or_else(S::zero)
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(order, self.coeffs.clone())
    }

    pub fn scale(&self, factor: &S) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| c.clone() * factor.clone()).collect(),
        }
    }

    /// Cauchy product truncated at the smaller order.
    pub fn multiply(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut out = vec![S::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self { coeffs: out }
    }

    /// `outer(inner(z))`; `inner` must have a zero constant term.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if !inner.coeff(0).is_zero() {
            return Err(Error::domain(
                "composition needs an inner series with zero constant term",
            ));
        }
        let order = self.order().min(inner.order());
        let inner = inner.truncate(order);
        let mut acc = Self::zero(order);
        for c in self.coeffs.iter().take(order + 1).rev() {
            acc = acc.multiply(&inner);
            acc.coeffs[0] = acc.coeffs[0].clone() + c.clone();
        }
        Ok(acc)
    }

    /// Compositional inverse `g` with `g(f(z)) = z` to the series order.
    ///
    /// Coefficients are fixed one at a time: with `g_1..g_{k-1}` known, the
    /// `z^k` coefficient of `f(g(z))` is linear in `g_k` with slope `f_1`.
    pub fn revert(&self) -> Result<Self> {
        let order = self.order();
        if !self.coeff(0).is_zero() {
            return Err(Error::domain("reversion needs a zero constant term"));
        }
        let lead = self.coeff(1);
        if order == 0 || lead.is_zero() {
            return Err(Error::domain("reversion needs a nonzero linear coefficient"));
        }
        let mut g = Self::zero(order);
        g.coeffs[1] = S::one() / lead.clone();
        for k in 2..=order {
            let partial = self.truncate(k).compose(&g.truncate(k))?;
            g.coeffs[k] = -partial.coeff(k) / lead.clone();
        }
        Ok(g)
    }

    /// The Euler operator `z d/dz`: multiplies `c_n` by `n`.
    pub fn euler(&self) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(n, c)| c.clone() * S::from_int(n as i64))
                .collect(),
        }
    }

    /// `(z d/dz)^{-1}`: divides `c_n` by `n`. The constant mode is not in the
    /// range of the Euler operator, so `c_0` must vanish.
    pub fn inverse_euler(&self) -> Result<Self> {
        if !self.coeff(0).is_zero() {
            return Err(Error::domain(
                "inverse Euler operator needs a zero constant term",
            ));
        }
        let mut coeffs = self.coeffs.clone();
        for (n, c) in coeffs.iter_mut().enumerate().skip(1) {
            *c = c.clone() / S::from_int(n as i64);
        }
        Ok(Self { coeffs })
    }

    /// Drops the constant term and lowers every power by one, i.e. `(f - c_0)/z`.
    pub fn shift_down(&self) -> Self {
        let order = self.order().saturating_sub(1);
        Self::new(order, self.coeffs.iter().skip(1).cloned().collect())
    }

    pub fn eval(&self, z: &S) -> S {
        self.coeffs
            .iter()
            .rev()
            .fold(S::zero(), |acc, c| acc * z.clone() + c.clone())
    }
}

impl<S: Scalar> Add for &TruncatedPowerSeries<S> {
    type Output = TruncatedPowerSeries<S>;
    fn add(self, rhs: Self) -> TruncatedPowerSeries<S> {
        let order = self.order().min(rhs.order());
        let coeffs = (0..=order).map(|k| self.coeff(k) + rhs.coeff(k)).collect();
        TruncatedPowerSeries { coeffs }
    }
}

impl<S: Scalar> Sub for &TruncatedPowerSeries<S> {
    type Output = TruncatedPowerSeries<S>;
    fn sub(self, rhs: Self) -> TruncatedPowerSeries<S> {
        let order = self.order().min(rhs.order());
        let coeffs = (0..=order).map(|k| self.coeff(k) - rhs.coeff(k)).collect();
        TruncatedPowerSeries { coeffs }
    }
}

impl<S: Scalar> Mul for &TruncatedPowerSeries<S> {
    type Output = TruncatedPowerSeries<S>;
    fn mul(self, rhs: Self) -> TruncatedPowerSeries<S> {
        self.multiply(rhs)
    }
}

impl<S: Scalar> Neg for &TruncatedPowerSeries<S> {
    type Output = TruncatedPowerSeries<S>;
    fn neg(self) -> TruncatedPowerSeries<S> {
        TruncatedPowerSeries {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

/// Coefficients `[n]_μ / n^{5/2}` of the density series `λ³/v = g_{3/2}^{(μ)}(z)`,
/// truncated at `z^order`.
pub fn density_series<F: Real>(
    mu: &DeformationParameter<F>,
    order: usize,
) -> TruncatedPowerSeries<F> {
    let mut coeffs = vec![F::zero(); order + 1];
    for (n, c) in coeffs.iter_mut().enumerate().skip(1) {
        let nf = F::from_count(n);
        *c = mu.bracket_raw(n as u64) / (nf * nf * nf.sqrt());
    }
    TruncatedPowerSeries::new(order, coeffs)
}

/// Virial coefficients from series reversion.
///
/// Reverts `λ³/v = g_{3/2}^{(μ)}(z)` to get `z` as a series in `y = λ³/v`,
/// builds the pressure series `g_{5/2}^{(μ)}` with the inverse Euler
/// operator, and expands `Pv/kT = g_{5/2}^{(μ)}(z(y)) / y`. Returns the
/// coefficients of `y^1 .. y^{order-1}`, i.e. `A, B, C, D, ...`.
pub fn virial_from_reversion<F: Real>(
    mu: &DeformationParameter<F>,
    order: usize,
) -> Result<Vec<F>> {
    if order < 5 {
        return Err(Error::domain(format!(
            "virial expansion needs series order >= 5, got {order}"
        )));
    }
    let density = density_series(mu, order);
    let pressure = density.inverse_euler()?;
    let fugacity = density.revert()?;
    let eos = pressure.compose(&fugacity)?.shift_down();
    Ok(eos.coeffs()[1..].to_vec())
}
