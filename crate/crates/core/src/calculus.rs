//! Deformed derivatives: Jackson (q-), two-parameter (p,q-) and μ-derivatives.
//!
//! On polynomials every operator is diagonal in the monomial basis,
//! `x^n -> [n] x^{n-1}` with its own deformed integer `[n]`, so results are
//! exact over rational scalars. For general smooth functions the μ-derivative
//! is evaluated from its integral representation
//! `D f(x) = ∫_0^1 d/dx f(t^μ x) dt` by quadrature.

use crate::bracket::{mu_falling_factorial, DeformationParameter};
use crate::error::{Error, Result};
use crate::polynomial::DensePolynomial;
use crate::quadrature::QuadratureRule;
use crate::scalar::{Real, Scalar};

/// `[n]_q = (q^n - 1)/(q - 1)`, evaluated as `1 + q + ... + q^{n-1}`.
pub fn q_bracket<S: Scalar>(n: usize, q: &S) -> S {
    pq_bracket(n, &S::one(), q)
}

/// `[n]_{p,q} = (p^n - q^n)/(p - q)`, evaluated as `Σ p^{n-1-j} q^j`.
///
/// The sum form is also the `p = q` limit `n q^{n-1}`.
pub fn pq_bracket<S: Scalar>(n: usize, p: &S, q: &S) -> S {
    let mut sum = S::zero();
    let mut qpow = S::one();
    let mut ppow: Vec<S> = Vec::with_capacity(n);
    let mut acc = S::one();
    for _ in 0..n {
        ppow.push(acc.clone());
        acc = acc * p.clone();
    }
    for j in 0..n {
        sum = sum + ppow[n - 1 - j].clone() * qpow.clone();
        qpow = qpow * q.clone();
    }
    sum
}

/// Jackson derivative `(f(qx) - f(x)) / (qx - x)` on a polynomial.
///
/// `q = 1` gives the ordinary derivative (the `q -> 1` limit).
pub fn jackson_derivative<S: Scalar>(p: &DensePolynomial<S>, q: &S) -> Result<DensePolynomial<S>> {
    if !(q > &S::zero()) {
        return Err(Error::domain(format!("Jackson derivative needs q > 0, got {q:?}")));
    }
    Ok(p.lower_with(|n| q_bracket(n, q)))
}

/// Two-parameter derivative `(f(px) - f(qx)) / (px - qx)` on a polynomial.
pub fn pq_derivative<S: Scalar>(
    poly: &DensePolynomial<S>,
    p: &S,
    q: &S,
) -> Result<DensePolynomial<S>> {
    if !(p > &S::zero()) || !(q > &S::zero()) {
        return Err(Error::domain(format!(
            "p,q-derivative needs p > 0 and q > 0, got p = {p:?}, q = {q:?}"
        )));
    }
    Ok(poly.lower_with(|n| pq_bracket(n, p, q)))
}

/// μ-derivative: `x^n -> [n]_μ x^{n-1}`.
pub fn mu_derivative<S: Scalar>(
    p: &DensePolynomial<S>,
    mu: &DeformationParameter<S>,
) -> DensePolynomial<S> {
    p.lower_with(|n| mu.bracket_raw(n as u64))
}

/// `k`-th power of the μ-derivative via the closed form
/// `x^n -> ([n]_μ! / [n-k]_μ!) x^{n-k}`.
pub fn mu_derivative_iterated<S: Scalar>(
    p: &DensePolynomial<S>,
    mu: &DeformationParameter<S>,
    k: usize,
) -> Result<DensePolynomial<S>> {
    if k == 0 {
        return Err(Error::domain("iterated derivative needs k >= 1"));
    }
    let coeffs = p
        .coeffs()
        .iter()
        .enumerate()
        .skip(k)
        .map(|(n, c)| c.clone() * mu_falling_factorial(n as u64, k as u64, mu))
        .collect();
    Ok(DensePolynomial::new(coeffs))
}

/// Inverse μ-derivative: `x^n -> x^{n+1} / [n+1]_μ`, with zero constant of
/// integration.
pub fn mu_antiderivative<S: Scalar>(
    p: &DensePolynomial<S>,
    mu: &DeformationParameter<S>,
) -> DensePolynomial<S> {
    p.raise_with(|n| S::one() / mu.bracket_raw(n as u64 + 1))
}

/// μ-derivative of the product `f g`, expanded over pairs of monomials:
/// `D(x^i x^j) = [i+j]_μ x^{i+j-1}`.
pub fn mu_leibniz<S: Scalar>(
    f: &DensePolynomial<S>,
    g: &DensePolynomial<S>,
    mu: &DeformationParameter<S>,
) -> DensePolynomial<S> {
    let (Some(df), Some(dg)) = (f.degree(), g.degree()) else {
        return DensePolynomial::zero();
    };
    let mut out = vec![S::zero(); df + dg];
    for (i, a) in f.coeffs().iter().enumerate() {
        for (j, b) in g.coeffs().iter().enumerate() {
            let n = i + j;
            if n == 0 || a.is_zero() || b.is_zero() {
                continue;
            }
            out[n - 1] = out[n - 1].clone() + a.clone() * b.clone() * mu.bracket_raw(n as u64);
        }
    }
    DensePolynomial::new(out)
}

/// μ-derivative of a smooth function at `x`, from the integral form.
///
/// `derivative` is `f'`; the integrand `d/dx f(t^μ x) = t^μ f'(t^μ x)` is
/// integrated after the change of variable `t = s^4`, which turns the
/// endpoint behaviour `t^μ` into `s^{3+4μ}` and keeps Gauss–Legendre
/// convergence fast for every `μ` in `[0, 1)`.
pub fn mu_derivative_numeric<F: Real>(
    derivative: impl Fn(F) -> F,
    x: F,
    mu: &DeformationParameter<F>,
    rule: &QuadratureRule<F>,
) -> Result<F> {
    let m = *mu.value();
    let four = F::lit(4.0);
    let mut bad = None;
    let value = rule.integrate(|s| {
        let scale = s.powf(four * m);
        let v = four * s * s * s * scale * derivative(scale * x);
        if !v.is_finite() && bad.is_none() {
            bad = Some(s);
        }
        v
    });
    if let Some(s) = bad {
        return Err(Error::NonFinite(format!(
            "derivative is not finite at {:?}",
            s.powf(four * m) * x
        )));
    }
    Ok(value)
}
