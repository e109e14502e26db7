//! Gauss quadrature rules built from the Jacobi matrix of the recurrence
//! coefficients: eigenvalues give the nodes (polished by two Newton steps on
//! the orthonormal polynomial), the Christoffel function gives the weights.

use super::gamma::ln_gamma_pos;
use super::poly::{jacobi_coefficients, PolyFamily};
use super::tridiag::symmetric_tridiagonal_eigenvalues;
use crate::error::{Error, Result};

/// Which Gauss rule a [`QuadratureRule`] implements.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GaussKind {
    /// Weight x^alpha e^{-x} on [0, inf), alpha > -1.
    Laguerre { alpha: f64 },
    /// Weight 1 on [a, b].
    Legendre { a: f64, b: f64 },
}

/// Immutable nodes-and-weights pair; shareable across threads.
#[derive(Debug, Clone)]
pub struct QuadratureRule {
    kind: GaussKind,
    nodes: Vec<f64>,
    weights: Vec<f64>,
    /// Weights for integrating a plain function of x (the weight function
    /// divided out). For Legendre these equal `weights`.
    plain_weights: Vec<f64>,
}

impl QuadratureRule {
    pub fn build(kind: GaussKind, n: usize) -> Result<Self> {
        match kind {
            GaussKind::Laguerre { alpha } => Self::gauss_laguerre(alpha, n),
            GaussKind::Legendre { a, b } => Self::gauss_legendre(a, b, n),
        }
    }

    /// N-point generalized Gauss-Laguerre rule; exact for x^alpha e^{-x} p(x)
    /// with deg p <= 2N-1.
    pub fn gauss_laguerre(alpha: f64, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::domain(
                "quadrature rule needs at least 1 node".to_string(),
            ));
        }
        if !(alpha > -1.0) {
            return Err(Error::domain(format!(
                "Gauss-Laguerre weight needs alpha > -1, got {alpha}"
            )));
        }
        let family = PolyFamily::AssocLaguerre { alpha };
        let ln_mu0 = ln_gamma_pos(alpha + 1.0);
        let (nodes, weights, ln_weights) = nodes_and_weights(family, n, ln_mu0)?;
        let plain_weights = nodes
            .iter()
            .zip(&ln_weights)
            .map(|(&x, &lw)| (lw + x - alpha * x.ln()).exp())
            .collect();
        Ok(Self {
            kind: GaussKind::Laguerre { alpha },
            nodes,
            weights,
            plain_weights,
        })
    }

    /// N-point Gauss-Legendre rule on [a, b].
    pub fn gauss_legendre(a: f64, b: f64, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::domain(
                "quadrature rule needs at least 1 node".to_string(),
            ));
        }
        if !(b > a) {
            return Err(Error::domain(format!(
                "Legendre interval must satisfy a < b, got [{a}, {b}]"
            )));
        }
        // Gegenbauer alpha = 1/2 is the Legendre family.
        let family = PolyFamily::Gegenbauer { alpha: 0.5 };
        let ln_mu0 = std::f64::consts::LN_2;
        let (nodes, weights, _) = nodes_and_weights(family, n, ln_mu0)?;
        let mid = 0.5 * (a + b);
        let half = 0.5 * (b - a);
        let nodes: Vec<f64> = nodes.iter().map(|&x| mid + half * x).collect();
        let weights: Vec<f64> = weights.iter().map(|&w| w * half).collect();
        Ok(Self {
            kind: GaussKind::Legendre { a, b },
            plain_weights: weights.clone(),
            nodes,
            weights,
        })
    }

    pub fn kind(&self) -> GaussKind {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// Weights for plain (weight-function-free) integration; see
    /// [`Self::integrate_plain`].
    pub fn plain_weights(&self) -> &[f64] {
        &self.plain_weights
    }

    /// Sum of w_i f(x_i): approximates the integral of weight(x) f(x).
    pub fn integrate(&self, mut f: impl FnMut(f64) -> f64) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(x))
            .sum()
    }

    /// Approximates the integral of g over the rule's domain, with the weight
    /// function divided out; g must supply its own decay on [0, inf).
    pub fn integrate_plain(&self, mut g: impl FnMut(f64) -> f64) -> f64 {
        self.nodes
            .iter()
            .zip(&self.plain_weights)
            .map(|(&x, &pw)| {
                let v = g(x);
                if v == 0.0 {
                    0.0
                } else {
                    pw * v
                }
            })
            .sum()
    }

    /// For a Legendre base rule on [-1, 1]: integral of f over [lo, hi].
    pub fn integrate_affine(&self, lo: f64, hi: f64, mut f: impl FnMut(f64) -> f64) -> f64 {
        debug_assert!(matches!(self.kind, GaussKind::Legendre { a, b } if a == -1.0 && b == 1.0));
        let mid = 0.5 * (lo + hi);
        let half = 0.5 * (hi - lo);
        half * self
            .nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(mid + half * x))
            .sum::<f64>()
    }
}

/// Shared node/weight construction: eigenvalues of the Jacobi matrix,
/// two Newton polish steps, Christoffel weights with overflow-safe rescaling.
fn nodes_and_weights(
    family: PolyFamily,
    n: usize,
    ln_mu0: f64,
) -> Result<(Vec<f64>, Vec<f64>, Vec<f64>)> {
    // One extra recurrence coefficient so the degree-n orthonormal polynomial
    // is available for Newton polishing.
    let (diag, off_sq) = jacobi_coefficients(family, n + 1)?;
    let off: Vec<f64> = off_sq.iter().map(|b| b.sqrt()).collect();
    let mut nodes = symmetric_tridiagonal_eigenvalues(diag[..n].to_vec(), off[..n - 1].to_vec())
        .map_err(|e| match e {
            Error::NoConvergence(msg) => {
                Error::NoConvergence(format!("{family:?} rule with {n} nodes: {msg}"))
            }
            other => other,
        })?;

    let mut weights = Vec::with_capacity(n);
    let mut ln_weights = Vec::with_capacity(n);
    for x in nodes.iter_mut() {
        for _ in 0..2 {
            let (qn, dqn, _, _) = orthonormal_scan(&diag, &off, n, *x);
            if dqn != 0.0 {
                let step = qn / dqn;
                if step.is_finite() {
                    *x -= step;
                }
            }
        }
        let (_, _, ln_sum_sq, _) = orthonormal_scan(&diag, &off, n, *x);
        let ln_w = ln_mu0 - ln_sum_sq;
        ln_weights.push(ln_w);
        weights.push(ln_w.exp());
    }

    // Polishing preserves ordering; enforce it for safety.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| nodes[i].partial_cmp(&nodes[j]).unwrap());
    let nodes_s: Vec<f64> = order.iter().map(|&i| nodes[i]).collect();
    let weights_s: Vec<f64> = order.iter().map(|&i| weights[i]).collect();
    let ln_weights_s: Vec<f64> = order.iter().map(|&i| ln_weights[i]).collect();
    Ok((nodes_s, weights_s, ln_weights_s))
}

/// Runs the orthonormal recurrence q_0..q_n at x (q_0 = 1 scaling), with
/// periodic rescaling against overflow. Returns (q_n, q_n', ln sum_{j<n} q_j^2,
/// rescale exponent) where the first two share a common arbitrary scale.
fn orthonormal_scan(diag: &[f64], off: &[f64], n: usize, x: f64) -> (f64, f64, f64, f64) {
    const BIG: f64 = 1e140;
    const SMALL: f64 = 1e-140;
    let mut q_prev = 0.0_f64;
    let mut q = 1.0_f64;
    let mut d_prev = 0.0_f64;
    let mut d = 0.0_f64;
    let mut sum_sq = 1.0_f64;
    let mut ln_rescale = 0.0_f64;
    for j in 0..n {
        let e_prev = if j == 0 { 0.0 } else { off[j - 1] };
        let e_next = off[j];
        let q_next = ((x - diag[j]) * q - e_prev * q_prev) / e_next;
        let d_next = ((x - diag[j]) * d + q - e_prev * d_prev) / e_next;
        q_prev = q;
        q = q_next;
        d_prev = d;
        d = d_next;
        if j + 1 < n {
            sum_sq += q * q;
        }
        if q.abs() > BIG {
            q *= SMALL;
            q_prev *= SMALL;
            d *= SMALL;
            d_prev *= SMALL;
            sum_sq *= SMALL * SMALL;
            ln_rescale += -(SMALL.ln());
        }
    }
    let ln_sum_sq = sum_sq.ln() + 2.0 * ln_rescale;
    (q, d, ln_sum_sq, ln_rescale)
}
