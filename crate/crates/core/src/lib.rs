//! μ-deformed calculus and the thermodynamics of the μ-deformed Bose gas.
//!
//! The algebraic layers ([`bracket`], [`polynomial`], [`calculus`],
//! [`series`]) are generic over the scalar type: `f32`, `f64`, or exact
//! rationals. Summation and quadrature ([`special`], [`quadrature`]) need a
//! floating type; [`thermo`] and [`figures`] work in `f64`.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bracket;
pub mod calculus;
pub mod error;
pub mod figures;
pub mod polynomial;
pub mod quadrature;
pub mod scalar;
pub mod series;
pub mod special;
pub mod table;
pub mod thermo;

use num_rational::BigRational;

pub use bracket::{
    mu_bracket, mu_factorial, mu_factorial_by_brackets, mu_falling_factorial, mu_shift_product,
    DeformationParameter,
};
pub use calculus::{
    jackson_derivative, mu_antiderivative, mu_derivative, mu_derivative_iterated,
    mu_derivative_numeric, mu_leibniz, pq_derivative,
};
pub use error::{Error, Result};
pub use polynomial::DensePolynomial;
pub use quadrature::QuadratureRule;
pub use scalar::{Real, Scalar};
pub use series::{density_series, virial_from_reversion, TruncatedPowerSeries};
pub use special::{mu_exp, mu_ln, mu_polylog, BoseOrder, SummationControl};
pub use thermo::{GasState, Regime, VirialCoefficients};

/// Deformation parameter in double precision.
pub type Mu = DeformationParameter<f64>;
/// Exact deformation parameter.
pub type RationalMu = DeformationParameter<BigRational>;
pub type Polynomial = DensePolynomial<f64>;
pub type RationalPolynomial = DensePolynomial<BigRational>;
pub type PowerSeries = TruncatedPowerSeries<f64>;
pub type RationalPowerSeries = TruncatedPowerSeries<BigRational>;
pub type Control = SummationControl<f64>;
