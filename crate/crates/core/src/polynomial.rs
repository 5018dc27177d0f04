use std::ops::{Add, Mul, Neg, Sub};

use crate::scalar::Scalar;

/// Polynomial with coefficients in ascending powers of `x`.
///
/// Trailing zeros are stripped, so the zero polynomial has no coefficients
/// and equality is structural.
#[derive(Clone, Debug, PartialEq)]
pub struct DensePolynomial<S> {
    coeffs: Vec<S>,
}

impl<S: Scalar> DensePolynomial<S> {
    pub fn new(mut coeffs: Vec<S>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: S) -> Self {
        Self::new(vec![c])
    }

    /// `c x^k`.
    pub fn monomial(k: usize, c: S) -> Self {
        let mut coeffs = vec![S::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> S {
        self.coeffs.get(k).cloned().unwrap_or_else(S::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval(&self, x: &S) -> S {
        self.coeffs
            .iter()
            .rev()
            .fold(S::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn scale(&self, factor: &S) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.clone() * factor.clone()).collect())
    }

    /// Ordinary derivative `d/dx`.
    pub fn derivative(&self) -> Self {
        self.lower_with(|n| S::from_int(n as i64))
    }

    /// Applies `x^n -> weight(n) x^{n-1}` linearly; the constant term drops.
    pub(crate) fn lower_with(&self, mut weight: impl FnMut(usize) -> S) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(n, c)| c.clone() * weight(n))
                .collect(),
        )
    }

    /// Applies `x^n -> weight(n) x^{n+1}` linearly.
    pub(crate) fn raise_with(&self, mut weight: impl FnMut(usize) -> S) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(S::zero());
        coeffs.extend(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(n, c)| c.clone() * weight(n)),
        );
        Self::new(coeffs)
    }

    /// Multiplication by `x`.
    pub fn shift_up(&self) -> Self {
        self.raise_with(|_| S::one())
    }
}

impl<S: Scalar> Add for &DensePolynomial<S> {
    type Output = DensePolynomial<S>;
    fn add(self, rhs: Self) -> DensePolynomial<S> {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        DensePolynomial::new((0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl<S: Scalar> Sub for &DensePolynomial<S> {
    type Output = DensePolynomial<S>;
    fn sub(self, rhs: Self) -> DensePolynomial<S> {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        DensePolynomial::new((0..len).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl<S: Scalar> Mul for &DensePolynomial<S> {
    type Output = DensePolynomial<S>;
    fn mul(self, rhs: Self) -> DensePolynomial<S> {
        if self.is_zero() || rhs.is_zero() {
            return DensePolynomial::zero();
        }
        let mut out = vec![S::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        DensePolynomial::new(out)
    }
}

impl<S: Scalar> Neg for &DensePolynomial<S> {
    type Output = DensePolynomial<S>;
    fn neg(self) -> DensePolynomial<S> {
        DensePolynomial::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}
