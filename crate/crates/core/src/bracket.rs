//! Deformed integers: μ-brackets, shifted products and μ-factorials.

use crate::error::{Error, Result};
use crate::scalar::{Extended, Scalar};

/// Deformation strength `μ`, restricted to `0 <= μ < 1`.
#[derive(Clone, Debug, PartialEq, PartialOrd)]
pub struct DeformationParameter<S> {
    mu: S,
}

impl<S: Scalar> DeformationParameter<S> {
    pub fn new(mu: S) -> Result<Self> {
        // NaN fails both comparisons and is rejected here too.
        if mu >= S::zero() && mu < S::one() {
            Ok(Self { mu })
        } else {
            Err(Error::domain(format!(
                "deformation parameter must satisfy 0 <= mu < 1, got {mu:?}"
            )))
        }
    }

    /// The undeformed case `μ = 0`.
    pub fn undeformed() -> Self {
        Self { mu: S::zero() }
    }

    pub fn value(&self) -> &S {
        &self.mu
    }

    pub fn is_undeformed(&self) -> bool {
        self.mu.is_zero()
    }

    /// `[n]_μ` without the `n >= 1` check; `[0]_μ = 0`.
    pub(crate) fn bracket_raw(&self, n: u64) -> S {
        let n = S::from_int(n as i64);
        n.clone() / (S::one() + self.mu.clone() * n)
    }

    /// The μ-unity `[1]_μ = 1/(1+μ)`.
    pub fn unity(&self) -> S {
        self.bracket_raw(1)
    }
}

impl DeformationParameter<f64> {
    pub fn get(&self) -> f64 {
        self.mu
    }
}

impl DeformationParameter<f32> {
    pub fn get(&self) -> f32 {
        self.mu
    }
}

/// `[n]_μ = n / (1 + μ n)` for `n >= 1`.
pub fn mu_bracket<S: Scalar>(n: u64, mu: &DeformationParameter<S>) -> Result<S> {
    if n == 0 {
        return Err(Error::domain("mu-bracket is defined for n >= 1"));
    }
    Ok(mu.bracket_raw(n))
}

/// `[n; μ] = (1 + μ)(1 + 2μ)...(1 + nμ)`, with `[0; μ] = 1`.
pub fn mu_shift_product<S: Scalar>(n: u64, mu: &DeformationParameter<S>) -> S {
    shift_product_wide(n, mu).to_scalar()
}

fn shift_product_wide<S: Scalar>(n: u64, mu: &DeformationParameter<S>) -> S::Wide {
    let one = S::Wide::from_scalar(S::one());
    let m = S::Wide::from_scalar(mu.value().clone());
    (1..=n).fold(one.clone(), |acc, k| {
        let k = S::Wide::from_scalar(S::from_int(k as i64));
        acc * (one.clone() + m.clone() * k)
    })
}

/// `[n]_μ! = n! / [n; μ]`, with `[0]_μ! = 1`.
///
/// Both the factorial and the shifted product are accumulated in extended
/// precision, so for binary floats the result is within an ulp or so of the
/// exact value even for large `n`.
pub fn mu_factorial<S: Scalar>(n: u64, mu: &DeformationParameter<S>) -> S {
    let factorial = (1..=n).fold(S::Wide::from_scalar(S::one()), |acc, k| {
        acc * S::Wide::from_scalar(S::from_int(k as i64))
    });
    (factorial / shift_product_wide(n, mu)).to_scalar()
}

/// `[1]_μ [2]_μ ... [n]_μ`, the product form of the μ-factorial.
///
/// Agrees with [`mu_factorial`] identically in exact arithmetic; kept as an
/// independent evaluation route.
pub fn mu_factorial_by_brackets<S: Scalar>(n: u64, mu: &DeformationParameter<S>) -> S {
    let one = S::Wide::from_scalar(S::one());
    let m = S::Wide::from_scalar(mu.value().clone());
    (1..=n)
        .fold(one.clone(), |acc, k| {
            let k = S::Wide::from_scalar(S::from_int(k as i64));
            acc * (k.clone() / (one.clone() + m.clone() * k))
        })
        .to_scalar()
}

/// `[n]_μ! / [n-k]_μ! = [n]_μ [n-1]_μ ... [n-k+1]_μ`; zero when `k > n`.
pub fn mu_falling_factorial<S: Scalar>(n: u64, k: u64, mu: &DeformationParameter<S>) -> S {
    if k > n {
        return S::zero();
    }
    mu_factorial(n, mu) / mu_factorial(n - k, mu)
}
