//! Circular states (l = m = n-1) of D-dimensional hydrogenic systems:
//! density construction, LMC complexity by separable 1D quadratures, and the
//! closed-form digamma expression for the same quantity.

use crate::error::{Error, Result};
use crate::measures::panels::{exp_tail, Breakpoint, SplitIntegrator};
use crate::measures::QuadratureSpec;
use crate::specfun::{digamma, ln_gamma, QuadratureRule};

/// (n, D, Z) identifying a circular state of a D-dimensional hydrogenic
/// system, with the hyperquantum number eta = n + (D-3)/2 and length scale
/// lambda = eta / (2Z).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CircularStateD {
    n: u32,
    dim: u32,
    z: f64,
}

impl CircularStateD {
    pub fn new(n: u32, dim: u32, z: f64) -> Result<Self> {
        if n < 1 {
            return Err(Error::domain("n must satisfy n >= 1"));
        }
        if dim < 2 {
            return Err(Error::domain("dimension must satisfy D >= 2"));
        }
        if !(z > 0.0) || !z.is_finite() {
            return Err(Error::domain("Z must satisfy Z > 0"));
        }
        Ok(Self { n, dim, z })
    }

    pub fn n(&self) -> u32 {
        self.n
    }
    pub fn dim(&self) -> u32 {
        self.dim
    }
    pub fn z(&self) -> f64 {
        self.z
    }

    /// eta = n + (D-3)/2 > 0.
    pub fn eta(&self) -> f64 {
        self.n as f64 + (self.dim as f64 - 3.0) / 2.0
    }

    /// lambda = eta / (2Z), the radial scale of u = r / lambda.
    pub fn lambda(&self) -> f64 {
        self.eta() / (2.0 * self.z)
    }

    /// ln of the density prefactor
    /// 2^{D+2-2n} Z^D / (pi^{(D-1)/2} (2n+D-3)^D Gamma(n) Gamma(n+(D-1)/2)).
    fn ln_prefactor(&self) -> f64 {
        let n = self.n as f64;
        let d = self.dim as f64;
        (d + 2.0 - 2.0 * n) * std::f64::consts::LN_2 + d * self.z.ln()
            - 0.5 * (d - 1.0) * std::f64::consts::PI.ln()
            - d * (2.0 * n + d - 3.0).ln()
            - ln_gamma(n).expect("n >= 1")
            - ln_gamma(n + (d - 1.0) / 2.0).expect("positive argument")
    }

    /// The D-dimensional circular-state density at radius r and polar angles
    /// theta_1 ... theta_{D-2} (the azimuthal angle does not enter).
    pub fn density(&self, r: f64, angles: &[f64]) -> Result<f64> {
        if !(r >= 0.0) {
            return Err(Error::domain("r must satisfy r >= 0"));
        }
        if angles.len() != (self.dim - 2) as usize {
            return Err(Error::domain(format!(
                "expected {} polar angles for D = {}, got {}",
                self.dim - 2,
                self.dim,
                angles.len()
            )));
        }
        if angles
            .iter()
            .any(|t| !(0.0..=std::f64::consts::PI).contains(t))
        {
            return Err(Error::domain("polar angles must lie in [0, pi]"));
        }
        let u = r / self.lambda();
        let p = 2 * self.n as i32 - 2;
        let mut value = self.ln_prefactor().exp() * (-u).exp() * u.powi(p);
        if self.n == 1 {
            value = self.ln_prefactor().exp() * (-u).exp();
        }
        for &theta in angles {
            value *= theta.sin().powi(p);
        }
        Ok(value)
    }

    /// Total probability by separable 1D quadratures; equals 1 for a correct
    /// prefactor and surface measure.
    pub fn normalization(&self, spec: &QuadratureSpec) -> Result<f64> {
        let n = self.n as f64;
        let d = self.dim as f64;
        let radial_exp = 2.0 * n + d - 3.0;
        let rule = QuadratureRule::gauss_laguerre(radial_exp, (self.n + 4) as usize)?;
        let radial = rule.integrate(|_| 1.0);
        let mut value = self.ln_prefactor().exp()
            * self.lambda().powi(self.dim as i32)
            * radial
            * 2.0
            * std::f64::consts::PI;
        for j in 1..=(self.dim - 2) {
            let p = (2 * self.n - 2 + self.dim - 1 - j) as f64;
            value *= sin_power_integral(p, spec)?;
        }
        Ok(value)
    }
}

/// integral of sin(theta)^p over [0, pi] by Gauss-Legendre (the integrand is
/// entire, so convergence is spectral).
fn sin_power_integral(p: f64, spec: &QuadratureSpec) -> Result<f64> {
    let rule =
        QuadratureRule::gauss_legendre(0.0, std::f64::consts::PI, spec.angular_nodes.max(64))?;
    Ok(rule.integrate(|t| t.sin().powf(p)))
}

/// integral of sin(theta)^p ln(sin theta) over [0, pi]; log-singular endpoints.
fn sin_power_log_integral(p: f64, spec: &QuadratureSpec) -> Result<f64> {
    let integ = SplitIntegrator::new(spec.panel_order, spec.tol / 10.0, spec.max_panel_depth)?;
    let mut f = |t: f64| {
        let s = t.sin();
        if s <= 0.0 {
            0.0
        } else {
            s.powf(p) * s.ln()
        }
    };
    let est = integ.integrate(
        &mut f,
        &[
            Breakpoint::singular(0.0),
            Breakpoint::singular(std::f64::consts::PI),
        ],
    );
    Ok(est.value)
}

/// integral of e^{-u} u^beta ln(u) over [0, inf): panel quadrature on the
/// bulk plus a mapped Gauss-Laguerre tail (oracle: Gamma(beta+1) psi(beta+1)).
fn exp_power_log_integral(beta: f64, spec: &QuadratureSpec) -> Result<f64> {
    let integ = SplitIntegrator::new(spec.panel_order, spec.tol / 10.0, spec.max_panel_depth)?;
    let cut = beta + 5.0;
    let mut f = |u: f64| {
        if u <= 0.0 {
            0.0
        } else {
            (-u + beta * u.ln()).exp() * u.ln()
        }
    };
    let est = integ.integrate(
        &mut f,
        &[Breakpoint::singular(0.0), Breakpoint::regular(cut)],
    );
    let tail_rule = QuadratureRule::gauss_laguerre(0.0, 48)?;
    Ok(est.value + exp_tail(&tail_rule, cut, 1.0, &mut f))
}

/// Closed-form position LMC complexity of the circular state, via
/// ln_gamma / digamma:
/// Gamma(n-1/2) Gamma(2n+(D-3)/2) / (2^{2n+D-2} sqrt(pi) Gamma(n+(D-1)/2))
/// x exp{ 2n+D-2 - (n-1)[psi(n) + psi(n+(D-1)/2)] }.
pub fn lmc_circular_analytic(n: u32, dim: u32) -> Result<f64> {
    if n < 1 {
        return Err(Error::domain("n must satisfy n >= 1"));
    }
    if dim < 2 {
        return Err(Error::domain("dimension must satisfy D >= 2"));
    }
    let nf = n as f64;
    let d = dim as f64;
    let ln_ratio = ln_gamma(nf - 0.5)? + ln_gamma(2.0 * nf + (d - 3.0) / 2.0)?
        - (2.0 * nf + d - 2.0) * std::f64::consts::LN_2
        - 0.5 * std::f64::consts::PI.ln()
        - ln_gamma(nf + (d - 1.0) / 2.0)?;
    let exponent =
        2.0 * nf + d - 2.0 - (nf - 1.0) * (digamma(nf)? + digamma(nf + (d - 1.0) / 2.0)?);
    Ok((ln_ratio + exponent).exp())
}

/// LMC complexity of the circular state from separable 1D quadratures:
/// disequilibrium W_2 and entropy S assembled from radial Gauss-Laguerre in
/// u = r/lambda plus one angular integral per polar angle.
pub fn lmc_circular_numeric(state: &CircularStateD, spec: &QuadratureSpec) -> Result<f64> {
    spec.validate()?;
    let n = state.n as f64;
    let d = state.dim as f64;
    let ln_p = state.ln_prefactor();
    let lambda = state.lambda();
    let beta0 = 2.0 * n + d - 3.0;

    // W_2 = P^2 lambda^D * integral of e^{-2u} u^{4n+D-5} du * angular * 2 pi
    let w2_rule = QuadratureRule::gauss_laguerre(4.0 * n + d - 5.0, spec.radial_nodes.min(64))?;
    let radial_w2 = w2_rule.integrate(|u| (-u).exp());
    let mut w2 =
        (2.0 * ln_p).exp() * lambda.powi(state.dim as i32) * radial_w2 * 2.0 * std::f64::consts::PI;
    for j in 1..=(state.dim - 2) {
        let p = (2.0 * (2.0 * n - 2.0)) + d - 1.0 - j as f64;
        w2 *= sin_power_integral(p, spec)?;
    }

    // S = -ln P + <u> - (2n-2) [ <ln u> + sum_j <ln sin theta_j> ]
    let norm_rule = QuadratureRule::gauss_laguerre(beta0, spec.radial_nodes.min(64))?;
    let norm = norm_rule.integrate(|_| 1.0);
    let mean_u = norm_rule.integrate(|u| u) / norm;
    let mut entropy = -ln_p + mean_u;
    if state.n > 1 {
        let mean_ln_u = exp_power_log_integral(beta0, spec)? / norm;
        let mut angular_ln = 0.0;
        for j in 1..=(state.dim - 2) {
            let p = 2.0 * n - 2.0 + d - 1.0 - j as f64;
            angular_ln += sin_power_log_integral(p, spec)? / sin_power_integral(p, spec)?;
        }
        entropy -= (2.0 * n - 2.0) * (mean_ln_u + angular_ln);
    }

    Ok(w2 * entropy.exp())
}

/// One row of the dimensionality scan.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Figure3Row {
    pub n: u32,
    pub dim: u32,
    pub c_lmc: f64,
}

/// LMC complexity of circular states over a grid of (n, D); rows ordered by
/// n, then D. The scan is Z-free because the complexity is scale invariant.
pub fn figure3_scan(n_values: &[u32], d_max: u32) -> Result<Vec<Figure3Row>> {
    if d_max < 2 {
        return Err(Error::domain("D range must reach at least 2"));
    }
    let mut rows = Vec::new();
    for &n in n_values {
        for dim in 2..=d_max {
            rows.push(Figure3Row {
                n,
                dim,
                c_lmc: lmc_circular_analytic(n, dim)?,
            });
        }
    }
    Ok(rows)
}
