//! Associated Laguerre and Gegenbauer polynomials: three-term recurrence
//! evaluation, derivatives, and root finding through the Jacobi matrix.

use super::tridiag::symmetric_tridiagonal_eigenvalues;
use crate::error::{Error, Result};

/// Orthogonal polynomial family with its parameter.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PolyFamily {
    /// Generalized Laguerre L_k^(alpha), weight x^alpha e^{-x} on [0, inf); alpha > -1.
    AssocLaguerre { alpha: f64 },
    /// Gegenbauer (ultraspherical) C_k^(alpha), weight (1-x^2)^{alpha-1/2} on [-1, 1]; alpha > -1/2.
    Gegenbauer { alpha: f64 },
}

/// A polynomial identified by family and degree.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolynomialSpec {
    pub family: PolyFamily,
    pub degree: usize,
}

fn check_laguerre_alpha(alpha: f64) -> Result<()> {
    if !(alpha > -1.0) {
        return Err(Error::domain(format!(
            "Laguerre parameter must satisfy alpha > -1, got {alpha}"
        )));
    }
    Ok(())
}

fn check_gegenbauer_args(alpha: f64, x: f64) -> Result<()> {
    if !(alpha > -0.5) {
        return Err(Error::domain(format!(
            "Gegenbauer parameter must satisfy alpha > -1/2, got {alpha}"
        )));
    }
    if !(-1.0..=1.0).contains(&x) {
        return Err(Error::domain(format!(
            "Gegenbauer argument must lie in [-1, 1], got {x}"
        )));
    }
    Ok(())
}

/// Generalized Laguerre polynomial L_k^(alpha)(x).
pub fn eval_assoc_laguerre(k: usize, alpha: f64, x: f64) -> Result<f64> {
    check_laguerre_alpha(alpha)?;
    Ok(laguerre_raw(k, alpha, x))
}

pub(crate) fn laguerre_raw(k: usize, alpha: f64, x: f64) -> f64 {
    if k == 0 {
        return 1.0;
    }
    let mut prev = 1.0;
    let mut cur = 1.0 + alpha - x;
    // (j+1) L_{j+1} = (2j+1+alpha-x) L_j - (j+alpha) L_{j-1}
    for j in 1..k {
        let jf = j as f64;
        let next = ((2.0 * jf + 1.0 + alpha - x) * cur - (jf + alpha) * prev) / (jf + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

/// d/dx L_k^(alpha)(x) = -L_{k-1}^(alpha+1)(x).
pub(crate) fn laguerre_deriv_raw(k: usize, alpha: f64, x: f64) -> f64 {
    if k == 0 {
        0.0
    } else {
        -laguerre_raw(k - 1, alpha + 1.0, x)
    }
}

/// Gegenbauer polynomial C_k^(alpha)(x).
pub fn eval_gegenbauer(k: usize, alpha: f64, x: f64) -> Result<f64> {
    check_gegenbauer_args(alpha, x)?;
    Ok(gegenbauer_raw(k, alpha, x))
}

pub(crate) fn gegenbauer_raw(k: usize, alpha: f64, x: f64) -> f64 {
    if k == 0 {
        return 1.0;
    }
    let mut prev = 1.0;
    let mut cur = 2.0 * alpha * x;
    // (j+1) C_{j+1} = 2(j+alpha) x C_j - (j+2alpha-1) C_{j-1}
    for j in 1..k {
        let jf = j as f64;
        let next = (2.0 * (jf + alpha) * x * cur - (jf + 2.0 * alpha - 1.0) * prev) / (jf + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

/// d/dx C_k^(alpha)(x) = 2 alpha C_{k-1}^(alpha+1)(x).
pub(crate) fn gegenbauer_deriv_raw(k: usize, alpha: f64, x: f64) -> f64 {
    if k == 0 {
        0.0
    } else {
        2.0 * alpha * gegenbauer_raw(k - 1, alpha + 1.0, x)
    }
}

/// Monic-recurrence Jacobi coefficients (diagonal, squared off-diagonal) of a family.
pub(crate) fn jacobi_coefficients(family: PolyFamily, n: usize) -> Result<(Vec<f64>, Vec<f64>)> {
    let mut diag = Vec::with_capacity(n);
    let mut off_sq = Vec::with_capacity(n.saturating_sub(1));
    match family {
        PolyFamily::AssocLaguerre { alpha } => {
            check_laguerre_alpha(alpha)?;
            for i in 0..n {
                diag.push(2.0 * i as f64 + alpha + 1.0);
            }
            for k in 1..n {
                let kf = k as f64;
                off_sq.push(kf * (kf + alpha));
            }
        }
        PolyFamily::Gegenbauer { alpha } => {
            check_gegenbauer_args(alpha, 0.0)?;
            diag.resize(n, 0.0);
            for k in 1..n {
                let kf = k as f64;
                let b = if k == 1 {
                    // k(k+2a-1)/(4(k+a)(k+a-1)) reduced at k = 1 to avoid the 0/0 at alpha = 0
                    1.0 / (2.0 * (1.0 + alpha))
                } else {
                    kf * (kf + 2.0 * alpha - 1.0) / (4.0 * (kf + alpha) * (kf + alpha - 1.0))
                };
                off_sq.push(b);
            }
        }
    }
    Ok((diag, off_sq))
}

/// All real roots of the polynomial, strictly increasing, via the eigenvalues
/// of the Jacobi matrix of the recurrence, then polished by two Newton steps.
pub fn polynomial_roots(spec: &PolynomialSpec) -> Result<Vec<f64>> {
    if spec.degree == 0 {
        return Err(Error::domain(
            "polynomial_roots requires degree >= 1".to_string(),
        ));
    }
    let n = spec.degree;
    let (diag, off_sq) = jacobi_coefficients(spec.family, n)?;
    let off: Vec<f64> = off_sq.iter().map(|b| b.sqrt()).collect();
    let mut roots = symmetric_tridiagonal_eigenvalues(diag, off)?;

    for r in roots.iter_mut() {
        for _ in 0..2 {
            let (value, deriv) = match spec.family {
                PolyFamily::AssocLaguerre { alpha } => {
                    (laguerre_raw(n, alpha, *r), laguerre_deriv_raw(n, alpha, *r))
                }
                PolyFamily::Gegenbauer { alpha } => (
                    gegenbauer_raw(n, alpha, *r),
                    gegenbauer_deriv_raw(n, alpha, *r),
                ),
            };
            if deriv != 0.0 {
                *r -= value / deriv;
            }
        }
    }
    roots.sort_by(|a, b| a.partial_cmp(b).unwrap());
    Ok(roots)
}

#[cfg(test)]
pub(crate) mod oracle {
    //! Explicit finite-sum series used as independent references in tests.

    use crate::specfun::gamma::ln_gamma_pos;

    /// L_k^(a)(x) = sum_i (-1)^i binom(k+a, k-i) x^i / i!, for a > -1 and x >= 0.
    ///
    /// Terms are chained by their exact ratio so per-term rounding is
    /// correlated; returns (value, sum of |terms|) so callers can account for
    /// cancellation in the comparison tolerance.
    pub fn laguerre_series(k: usize, alpha: f64, x: f64) -> (f64, f64) {
        // t_0 = binom(k+alpha, k)
        let mut term = (ln_gamma_pos(k as f64 + alpha + 1.0)
            - ln_gamma_pos(alpha + 1.0)
            - ln_gamma_pos(k as f64 + 1.0))
        .exp();
        let mut sum = term;
        let mut abs_sum = term.abs();
        for i in 0..k {
            let (ifl, kfl) = (i as f64, k as f64);
            term *= -x * (kfl - ifl) / ((alpha + ifl + 1.0) * (ifl + 1.0));
            sum += term;
            abs_sum += term.abs();
        }
        (sum, abs_sum)
    }

    /// C_k^(a)(x) = sum_j (-1)^j Gamma(a+k-j) / (Gamma(a) j! (k-2j)!) (2x)^{k-2j},
    /// for a > 0 and x != 0. Same ratio-chained scheme as `laguerre_series`.
    pub fn gegenbauer_series(k: usize, alpha: f64, x: f64) -> (f64, f64) {
        assert!(alpha > 0.0, "series oracle restricted to alpha > 0");
        if k == 0 {
            return (1.0, 1.0);
        }
        if x == 0.0 {
            // Only the j = k/2 term survives.
            if k % 2 == 1 {
                return (0.0, 0.0);
            }
            let j = k / 2;
            let sign = if j.is_multiple_of(2) { 1.0 } else { -1.0 };
            let mag = (ln_gamma_pos(alpha + (k - j) as f64)
                - ln_gamma_pos(alpha)
                - ln_gamma_pos(j as f64 + 1.0))
            .exp();
            return (sign * mag, mag);
        }
        let mut term =
            (ln_gamma_pos(alpha + k as f64) - ln_gamma_pos(alpha) - ln_gamma_pos(k as f64 + 1.0))
                .exp()
                * (2.0 * x).powi(k as i32);
        let mut sum = term;
        let mut abs_sum = term.abs();
        for j in 0..(k / 2) {
            let (jfl, kfl) = (j as f64, k as f64);
            term *= -(kfl - 2.0 * jfl) * (kfl - 2.0 * jfl - 1.0)
                / ((alpha + kfl - jfl - 1.0) * (jfl + 1.0) * (2.0 * x) * (2.0 * x));
            sum += term;
            abs_sum += term.abs();
        }
        (sum, abs_sum)
    }
}
