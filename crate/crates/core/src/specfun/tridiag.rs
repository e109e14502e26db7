//! Eigenvalues of a real symmetric tridiagonal matrix by the implicit-shift
//! QL iteration. Only eigenvalues are needed: Gauss weights are recovered
//! afterwards from the Christoffel function, and polynomial roots directly.

use crate::error::{Error, Result};

const MAX_SWEEPS: usize = 60;

/// Eigenvalues of the matrix with diagonal `diag` and off-diagonal `off`
/// (`off.len() == diag.len() - 1`), in ascending order.
pub(crate) fn symmetric_tridiagonal_eigenvalues(diag: Vec<f64>, off: Vec<f64>) -> Result<Vec<f64>> {
    let n = diag.len();
    assert!(
        n >= 1 && off.len() + 1 == n,
        "inconsistent tridiagonal sizes"
    );
    let mut d = diag;
    if n == 1 {
        return Ok(d);
    }
    let mut e = off;
    e.push(0.0);

    for l in 0..n {
        let mut iter = 0;
        loop {
            // Look for a negligible subdiagonal element to split the matrix.
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            if iter > MAX_SWEEPS {
                return Err(Error::NoConvergence(format!(
                    "tridiagonal QL sweep {MAX_SWEEPS} exceeded at row {l} of {n} (|e| = {:.3e})",
                    e[l].abs()
                )));
            }
            // Wilkinson-style implicit shift from the leading 2x2 block.
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let mut s = 1.0;
            let mut c = 1.0;
            let mut p = 0.0;
            let mut underflow = false;
            for i in (l..m).rev() {
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    // Recover from underflow by skipping the transformation.
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if underflow {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    d.sort_by(|a, b| a.partial_cmp(b).unwrap());
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn two_by_two() {
        // [[0, 1/2], [1/2, 0]] has eigenvalues -+ 1/2
        let ev = symmetric_tridiagonal_eigenvalues(vec![0.0, 0.0], vec![0.5]).unwrap();
        assert_relative_eq!(ev[0], -0.5, max_relative = 1e-14);
        assert_relative_eq!(ev[1], 0.5, max_relative = 1e-14);
    }

    #[test]
    fn chebyshev_like_matrix() {
        // diag 0, off-diag 1/2: eigenvalues cos(j pi / (n+1)), the U_n roots.
        let n = 21;
        let ev = symmetric_tridiagonal_eigenvalues(vec![0.0; n], vec![0.5; n - 1]).unwrap();
        for (j, &lambda) in ev.iter().enumerate() {
            let expected = (std::f64::consts::PI * (n - j) as f64 / (n as f64 + 1.0)).cos();
            assert!(
                (lambda - expected).abs() < 1e-13,
                "eigenvalue {j}: {lambda} vs {expected}"
            );
        }
    }

    #[test]
    fn trace_preserved() {
        let diag: Vec<f64> = (0..40).map(|i| 2.0 * i as f64 + 1.0).collect();
        let off: Vec<f64> = (1..40).map(|k| (k as f64 * k as f64).sqrt()).collect();
        let trace: f64 = diag.iter().sum();
        let ev = symmetric_tridiagonal_eigenvalues(diag, off).unwrap();
        let sum: f64 = ev.iter().sum();
        assert_relative_eq!(sum, trace, max_relative = 1e-12);
    }
}
