//! Gauss–Legendre quadrature on the unit interval.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Fixed-order Gauss–Legendre rule mapped to `[0, 1]`.
///
/// Nodes lie strictly inside the interval and the weights are positive with
/// unit sum.
#[derive(Clone, Debug)]
pub struct QuadratureRule<F> {
    nodes: Vec<F>,
    weights: Vec<F>,
}

impl<F: Real> QuadratureRule<F> {
    /// Builds the `node_count`-point rule.
    ///
    /// Nodes are found by Newton iteration on the Legendre three-term
    /// recurrence, in `f64`, and then rounded to `F`.
    pub fn gauss_legendre(node_count: usize) -> Result<Self> {
        if node_count == 0 {
            return Err(Error::domain("quadrature rule needs at least one node"));
        }
        let n = node_count;
        let mut nodes = vec![F::zero(); n];
        let mut weights = vec![F::zero(); n];
        let half = n.div_ceil(2);
        for i in 0..half {
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (p, d) = legendre_with_derivative(n, x);
                dp = d;
                let dx = p / d;
                x -= dx;
                if dx.abs() <= 1e-16 * x.abs().max(1.0) {
                    break;
                }
            }
            let (_, d) = legendre_with_derivative(n, x);
            if d != 0.0 {
                dp = d;
            }
            // Weight on [-1, 1] is 2/((1-x^2) P'(x)^2); halve it for [0, 1].
            let w = 1.0 / ((1.0 - x * x) * dp * dp);
            nodes[i] = F::lit(0.5 * (1.0 - x));
            nodes[n - 1 - i] = F::lit(0.5 * (1.0 + x));
            weights[i] = F::lit(w);
            weights[n - 1 - i] = F::lit(w);
        }
        Ok(Self { nodes, weights })
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn nodes(&self) -> &[F] {
        &self.nodes
    }

    pub fn weights(&self) -> &[F] {
        &self.weights
    }

    /// Approximates `∫_0^1 f(t) dt`.
    pub fn integrate(&self, mut f: impl FnMut(F) -> F) -> F {
        self.nodes
            .iter()
            .zip(&self.weights)
            .fold(F::zero(), |acc, (&t, &w)| acc + w * f(t))
    }

    /// Approximates `∫_a^b f(x) dx`.
    pub fn integrate_on(&self, a: F, b: F, mut f: impl FnMut(F) -> F) -> F {
        let width = b - a;
        width * self.integrate(|t| f(a + width * t))
    }
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=n {
        let k = k as f64;
        let p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    let n = n as f64;
    let d = n * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// Result of an adaptive integration: value and an error estimate.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Adaptive<F> {
    pub value: F,
    pub error: F,
}

struct Panel<F> {
    a: F,
    b: F,
    value: F,
    error: F,
}

impl<F: Real> PartialEq for Panel<F> {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl<F: Real> Eq for Panel<F> {}

impl<F: Real> PartialOrd for Panel<F> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<F: Real> Ord for Panel<F> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.as_f64().total_cmp(&other.error.as_f64())
    }
}

/// Globally adaptive bisection with a fixed Gauss–Legendre panel rule.
///
/// A panel's error is estimated by comparing it with the sum over its two
/// halves. The panel with the largest estimate is split until the total
/// falls below `tol` or `max_panels` panels are in use.
pub(crate) fn adaptive<F: Real>(
    rule: &QuadratureRule<F>,
    f: &dyn Fn(F) -> F,
    a: F,
    b: F,
    tol: F,
    max_panels: usize,
) -> Adaptive<F> {
    let panel = |a: F, b: F| {
        let mid = (a + b) * F::lit(0.5);
        let whole = rule.integrate_on(a, b, f);
        let split = rule.integrate_on(a, mid, f) + rule.integrate_on(mid, b, f);
        Panel {
            a,
            b,
            value: split,
            error: (split - whole).abs(),
        }
    };
    let mut heap = BinaryHeap::new();
    heap.push(panel(a, b));
    loop {
        let (value, error) = heap
            .iter()
            .fold((F::zero(), F::zero()), |(v, e), p| (v + p.value, e + p.error));
        let worst = heap.peek().map(|p| p.error).unwrap_or_else(F::zero);
        if error <= tol || heap.len() >= max_panels || !error.is_finite() || worst == F::zero() {
            return Adaptive { value, error };
        }
        let Some(p) = heap.pop() else {
            return Adaptive { value, error };
        };
        let mid = (p.a + p.b) * F::lit(0.5);
        if !(mid > p.a && mid < p.b) {
            heap.push(p);
            return Adaptive { value, error };
        }
        heap.push(panel(p.a, mid));
        heap.push(panel(mid, p.b));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weights_are_positive_and_sum_to_one() {
        for n in [1, 2, 5, 16, 64, 128] {
            let rule = QuadratureRule::<f64>::gauss_legendre(n).unwrap();
            let sum: f64 = rule.weights().iter().sum();
            assert!((sum - 1.0).abs() < 1e-14, "n={n} sum={sum}");
            assert!(rule.weights().iter().all(|&w| w > 0.0));
            assert!(rule.nodes().iter().all(|&t| t > 0.0 && t < 1.0));
            assert!(rule.nodes().windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn exact_for_polynomials_up_to_degree_2n_minus_1() {
        let rule = QuadratureRule::<f64>::gauss_legendre(8).unwrap();
        for k in 0..16 {
            let v = rule.integrate(|t| t.powi(k));
            assert!((v - 1.0 / (k as f64 + 1.0)).abs() < 1e-15, "k={k}");
        }
    }

    #[test]
    fn zero_nodes_rejected() {
        assert!(QuadratureRule::<f64>::gauss_legendre(0).is_err());
    }

    #[test]
    fn adaptive_resolves_a_narrow_peak() {
        let rule = QuadratureRule::<f64>::gauss_legendre(10).unwrap();
        let width = 1e-4;
        let f = |x: f64| 1.0 / (1.0 + ((x - 0.3) / width).powi(2));
        let exact = width * ((0.7 / width).atan() + (0.3 / width).atan());
        let r = adaptive(&rule, &f, 0.0, 1.0, 1e-14, 2000);
        assert!((r.value - exact).abs() < 1e-12, "{} vs {exact}", r.value);
    }
}
