//! Numerical evaluation of single and composite information-theoretic
//! measures over separable densities rho(r, Omega) = D(r) Pi(theta).
//!
//! Densities plug in through [`RadialProfile`] / [`AngularProfile`];
//! profiles that expose a weight-times-polynomial structure get exact
//! Gauss-Laguerre moments and Fisher integrals, everything else goes through
//! the singularity-aware panel integrator plus a mapped Gauss-Laguerre tail.

pub mod panels;

use crate::error::{Error, Result};
use crate::specfun::QuadratureRule;
use panels::{exp_tail, Breakpoint, SplitIntegrator};

/// Node counts, splitting strategy and tolerances controlling all integration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSpec {
    /// Radial tensor-grid size for the direct 2D Fisher quadrature.
    pub radial_nodes: usize,
    /// Angular grid size (Gauss-Legendre in cos theta).
    pub angular_nodes: usize,
    /// Split entropy-type radial integrals at the polynomial zeros.
    pub split_at_roots: bool,
    /// Target absolute tolerance.
    pub tol: f64,
    /// Gauss-Legendre order of each panel.
    pub panel_order: usize,
    /// Dyadic refinement cap toward integrable singularities.
    pub max_panel_depth: u32,
    /// Refinement depth toward a non-analytic density origin in Fisher
    /// integrals; kept separate because for the relativistic charge densities
    /// that endpoint contribution grows (rather than shrinks) with depth, so
    /// this value pins the reported regularized number.
    pub fisher_origin_depth: u32,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        Self {
            radial_nodes: 200,
            angular_nodes: 128,
            split_at_roots: true,
            tol: 1e-10,
            panel_order: 32,
            max_panel_depth: 48,
            fisher_origin_depth: 16,
        }
    }
}

impl QuadratureSpec {
    pub fn validate(&self) -> Result<()> {
        if self.radial_nodes < 2 {
            return Err(Error::domain("radial node count must be >= 2"));
        }
        if self.angular_nodes < 2 {
            return Err(Error::domain("angular node count must be >= 2"));
        }
        if !(self.tol > 0.0) {
            return Err(Error::domain("tolerance must be positive"));
        }
        Ok(())
    }

    fn splitter(&self, max_depth: u32) -> Result<SplitIntegrator> {
        SplitIntegrator::new(self.panel_order, self.tol / 10.0, max_depth)
    }

    fn tail_rule(&self) -> Result<QuadratureRule> {
        QuadratureRule::gauss_laguerre(0.0, 48)
    }
}

/// Radial factor D(r) of a separable density; the probability of a shell is
/// D(r) r^2 dr and the angular factor integrates to 1 over the sphere.
pub trait RadialProfile {
    fn density(&self, r: f64) -> f64;
    /// ln D(r), finite wherever D does not truly vanish (stable in the far tail).
    fn log_density(&self, r: f64) -> f64;
    fn density_deriv(&self, r: f64) -> f64;
    /// (D')^2 / D with removable 0/0 at density zeros evaluated in the limit.
    fn fisher_ratio(&self, r: f64) -> f64;
    /// Interior radii where D vanishes (log-singular points of entropy integrands).
    fn interior_zeros(&self) -> Vec<f64> {
        Vec::new()
    }
    /// Some(R) for a compactly supported density on [0, R].
    fn support_radius(&self) -> Option<f64> {
        None
    }
    /// Asymptotic decay rate kappa with D ~ e^{-kappa r}.
    fn tail_rate(&self) -> f64;
    /// Non-analytic behavior (fractional power) at r = 0.
    fn origin_singular(&self) -> bool {
        false
    }
    /// Exact Gauss-Laguerre route for the k-th radial moment, if the profile
    /// is weight times polynomial.
    fn moment_exact(&self, _k: i32) -> Option<Result<f64>> {
        None
    }
    /// Exact Gauss-Laguerre route for the radial Fisher integral.
    fn fisher_exact(&self) -> Option<Result<f64>> {
        None
    }
}

/// Angular factor Pi(theta) = |Y(theta, .)|^2 of a separable density,
/// phi-independent, normalized to 1 over the sphere.
pub trait AngularProfile {
    fn density(&self, theta: f64) -> f64;
    fn log_density(&self, theta: f64) -> f64;
    fn density_deriv(&self, theta: f64) -> f64;
    /// (dPi/dtheta)^2 / Pi with removable 0/0 handled.
    fn fisher_ratio(&self, theta: f64) -> f64;
    fn interior_zeros(&self) -> Vec<f64> {
        Vec::new()
    }
    /// Non-analytic (fractional power of sin theta) behavior at theta = 0, pi.
    fn endpoint_singular(&self) -> bool {
        false
    }
}

/// Uniform angular factor 1/(4 pi): the s-wave / spherically-symmetric case.
#[derive(Debug, Clone, Copy, Default)]
pub struct IsotropicAngular;

impl AngularProfile for IsotropicAngular {
    fn density(&self, _theta: f64) -> f64 {
        0.25 / std::f64::consts::PI
    }
    fn log_density(&self, _theta: f64) -> f64 {
        -(4.0 * std::f64::consts::PI).ln()
    }
    fn density_deriv(&self, _theta: f64) -> f64 {
        0.0
    }
    fn fisher_ratio(&self, _theta: f64) -> f64 {
        0.0
    }
}

// ---------------------------------------------------------------------------
// radial building blocks
// ---------------------------------------------------------------------------

/// Breakpoints covering [0, T] (or [0, R] for compact support) plus the tail
/// start when the domain is infinite.
fn radial_layout(
    radial: &dyn RadialProfile,
    spec: &QuadratureSpec,
    rate: f64,
    origin_singular: bool,
    zeros_singular: bool,
) -> (Vec<Breakpoint>, Option<f64>) {
    let zeros = if spec.split_at_roots {
        radial.interior_zeros()
    } else {
        Vec::new()
    };
    let last_zero = zeros.last().copied().unwrap_or(0.0);
    let (end, tail) = match radial.support_radius() {
        Some(radius) => (radius, None),
        None => {
            let t = 1.05 * last_zero + 5.0 / rate;
            (t, Some(t))
        }
    };
    let mut pts = Vec::with_capacity(zeros.len() + 2);
    pts.push(Breakpoint {
        x: 0.0,
        singular: origin_singular,
    });
    for z in zeros {
        if z > 1e-12 && z < end * (1.0 - 1e-12) {
            pts.push(Breakpoint {
                x: z,
                singular: zeros_singular,
            });
        }
    }
    pts.push(Breakpoint::regular(end));
    (pts, tail)
}

fn converged(value: f64, est: f64) -> bool {
    est <= 1e-6 * value.abs().max(1.0)
}

/// -integral of D ln(D) r^2 dr, the radial part of the Shannon entropy.
fn radial_entropy(radial: &dyn RadialProfile, spec: &QuadratureSpec) -> Result<f64> {
    let rate = radial.tail_rate();
    let (pts, tail) = radial_layout(radial, spec, rate, true, true);
    let mut f = |r: f64| {
        let d = radial.density(r);
        if d <= 0.0 {
            0.0
        } else {
            -d * radial.log_density(r) * r * r
        }
    };
    let integ = spec.splitter(spec.max_panel_depth)?;
    let est = integ.integrate(&mut f, &pts);
    let mut value = est.value;
    if let Some(start) = tail {
        value += exp_tail(&spec.tail_rule()?, start, rate, &mut f);
    }
    if !converged(value, est.error_estimate) {
        return Err(Error::Numeric {
            what: "radial entropy integral".to_string(),
            achieved: est.error_estimate,
        });
    }
    Ok(value)
}

/// integral of D^q r^2 dr, the radial factor of the entropic moment W_q.
fn radial_entropic(radial: &dyn RadialProfile, q: f64, spec: &QuadratureSpec) -> Result<f64> {
    let rate = q * radial.tail_rate();
    let (pts, tail) = radial_layout(radial, spec, rate, true, true);
    let mut f = |r: f64| {
        let ld = radial.log_density(r);
        if ld == f64::NEG_INFINITY {
            0.0
        } else {
            (q * ld).exp() * r * r
        }
    };
    let integ = spec.splitter(spec.max_panel_depth)?;
    let est = integ.integrate(&mut f, &pts);
    let mut value = est.value;
    if let Some(start) = tail {
        value += exp_tail(&spec.tail_rule()?, start, rate, &mut f);
    }
    if !converged(value, est.error_estimate) {
        return Err(Error::Numeric {
            what: format!("radial entropic moment q = {q}"),
            achieved: est.error_estimate,
        });
    }
    Ok(value)
}

/// integral of (D')^2/D r^2 dr by quadrature (used when no exact route exists).
fn radial_fisher_quadrature(radial: &dyn RadialProfile, spec: &QuadratureSpec) -> Result<f64> {
    let rate = radial.tail_rate();
    let depth = if radial.origin_singular() {
        spec.fisher_origin_depth
    } else {
        spec.max_panel_depth
    };
    // Density zeros are only kinks of the Fisher integrand: split, don't refine.
    let (pts, tail) = radial_layout(radial, spec, rate, radial.origin_singular(), false);
    let mut f = |r: f64| radial.fisher_ratio(r) * r * r;
    let integ = spec.splitter(depth)?;
    let est = integ.integrate(&mut f, &pts);
    let mut value = est.value;
    if let Some(start) = tail {
        value += exp_tail(&spec.tail_rule()?, start, rate, &mut f);
    }
    Ok(value)
}

fn radial_moment_quadrature(
    radial: &dyn RadialProfile,
    k: i32,
    spec: &QuadratureSpec,
) -> Result<f64> {
    let rate = radial.tail_rate();
    let origin_sing = radial.origin_singular() || k < -2;
    let (pts, tail) = radial_layout(radial, spec, rate, origin_sing, false);
    let mut f = |r: f64| radial.density(r) * r.powi(k + 2);
    let integ = spec.splitter(spec.max_panel_depth)?;
    let est = integ.integrate(&mut f, &pts);
    let mut value = est.value;
    if let Some(start) = tail {
        value += exp_tail(&spec.tail_rule()?, start, rate, &mut f);
    }
    if !converged(value, est.error_estimate) {
        return Err(Error::Numeric {
            what: format!("radial moment <r^{k}>"),
            achieved: est.error_estimate,
        });
    }
    Ok(value)
}

// ---------------------------------------------------------------------------
// angular building blocks
// ---------------------------------------------------------------------------

fn angular_layout(angular: &dyn AngularProfile) -> Vec<Breakpoint> {
    let endpoint = angular.endpoint_singular();
    let mut pts = Vec::new();
    pts.push(Breakpoint {
        x: 0.0,
        singular: endpoint,
    });
    for z in angular.interior_zeros() {
        if z > 1e-12 && z < std::f64::consts::PI - 1e-12 {
            pts.push(Breakpoint::singular(z));
        }
    }
    pts.push(Breakpoint {
        x: std::f64::consts::PI,
        singular: endpoint,
    });
    pts
}

/// integral of Pi dOmega; equals 1 for a normalized angular factor.
pub fn angular_norm(angular: &dyn AngularProfile, spec: &QuadratureSpec) -> Result<f64> {
    let rule = QuadratureRule::gauss_legendre(-1.0, 1.0, spec.angular_nodes)?;
    Ok(2.0 * std::f64::consts::PI * rule.integrate(|x| angular.density(x.clamp(-1.0, 1.0).acos())))
}

/// -integral of Pi ln(Pi) dOmega, the angular part of the Shannon entropy.
fn angular_entropy(angular: &dyn AngularProfile, spec: &QuadratureSpec) -> Result<f64> {
    let mut f = |theta: f64| {
        let p = angular.density(theta);
        if p <= 0.0 {
            0.0
        } else {
            -2.0 * std::f64::consts::PI * p * angular.log_density(theta) * theta.sin()
        }
    };
    let integ = spec.splitter(spec.max_panel_depth)?;
    let est = integ.integrate(&mut f, &angular_layout(angular));
    if !converged(est.value, est.error_estimate) {
        return Err(Error::Numeric {
            what: "angular entropy integral".to_string(),
            achieved: est.error_estimate,
        });
    }
    Ok(est.value)
}

/// integral of Pi^q dOmega, the angular factor of the entropic moment W_q.
fn angular_entropic(angular: &dyn AngularProfile, q: f64, spec: &QuadratureSpec) -> Result<f64> {
    let mut f = |theta: f64| {
        let lp = angular.log_density(theta);
        if lp == f64::NEG_INFINITY {
            0.0
        } else {
            2.0 * std::f64::consts::PI * (q * lp).exp() * theta.sin()
        }
    };
    let integ = spec.splitter(spec.max_panel_depth)?;
    let est = integ.integrate(&mut f, &angular_layout(angular));
    if !converged(est.value, est.error_estimate) {
        return Err(Error::Numeric {
            what: format!("angular entropic moment q = {q}"),
            achieved: est.error_estimate,
        });
    }
    Ok(est.value)
}

/// integral of (Pi')^2/Pi dOmega over the sphere (Gauss-exact in cos theta
/// for polynomial harmonics).
fn angular_fisher(angular: &dyn AngularProfile, spec: &QuadratureSpec) -> Result<f64> {
    let rule = QuadratureRule::gauss_legendre(-1.0, 1.0, spec.angular_nodes)?;
    Ok(2.0
        * std::f64::consts::PI
        * rule.integrate(|x| angular.fisher_ratio(x.clamp(-1.0, 1.0).acos())))
}

// ---------------------------------------------------------------------------
// public measures
// ---------------------------------------------------------------------------

/// Radial Fisher integral of (D')^2/D r^2 dr. For a spherically symmetric
/// density (uniform angular factor) this is the full Fisher information.
pub fn fisher_radial_part(radial: &dyn RadialProfile, spec: &QuadratureSpec) -> Result<f64> {
    spec.validate()?;
    match radial.fisher_exact() {
        Some(res) => res,
        None => radial_fisher_quadrature(radial, spec),
    }
}

/// `<r^k>` of the full density (the angular factor integrates to one).
pub fn radial_moment(radial: &dyn RadialProfile, k: i32, spec: &QuadratureSpec) -> Result<f64> {
    spec.validate()?;
    if let Some(exact) = radial.moment_exact(k) {
        return exact;
    }
    radial_moment_quadrature(radial, k, spec)
}

/// V = `<r^2> - <r>^2`.
pub fn variance(radial: &dyn RadialProfile, spec: &QuadratureSpec) -> Result<f64> {
    let m1 = radial_moment(radial, 1, spec)?;
    let m2 = radial_moment(radial, 2, spec)?;
    Ok(m2 - m1 * m1)
}

/// Fisher information computed along both routes.
#[derive(Debug, Clone, Copy)]
pub struct FisherInfo {
    /// Decomposed value F_r + <r^-2> F_Omega (the reported number).
    pub total: f64,
    /// Direct 2D quadrature of the gradient functional.
    pub direct: f64,
    pub radial_part: f64,
    pub angular_part: f64,
    pub r_inv2: f64,
}

/// F\[rho\] = integral of |grad rho|^2 / rho, evaluated both as a direct 2D
/// quadrature and through the radial/angular decomposition
/// F = F_r + <r^-2> F_Omega; the two must agree within tolerance.
pub fn fisher_information(
    radial: &dyn RadialProfile,
    angular: &dyn AngularProfile,
    spec: &QuadratureSpec,
) -> Result<FisherInfo> {
    spec.validate()?;
    let radial_part = match radial.fisher_exact() {
        Some(res) => res?,
        None => radial_fisher_quadrature(radial, spec)?,
    };
    let r_inv2 = radial_moment(radial, -2, spec)?;
    let angular_part = angular_fisher(angular, spec)?;
    let total = radial_part + r_inv2 * angular_part;

    // Direct tensor quadrature of (d_r rho)^2/rho + r^-2 (d_theta rho)^2/rho,
    // evaluated pointwise on a plain Gauss-Laguerre x Gauss-Legendre grid.
    let c = radial.tail_rate();
    let r_rule = QuadratureRule::gauss_laguerre(0.0, spec.radial_nodes)?;
    let x_rule = QuadratureRule::gauss_legendre(-1.0, 1.0, spec.angular_nodes)?;
    let mut direct = 0.0;
    let support = radial.support_radius().unwrap_or(f64::INFINITY);
    for (i, &xi) in r_rule.nodes().iter().enumerate() {
        let r = xi / c;
        if r > support {
            continue;
        }
        let fr = radial.fisher_ratio(r);
        let d = radial.density(r);
        if fr == 0.0 && d == 0.0 {
            continue;
        }
        let mut slice = 0.0;
        for (&xj, &vj) in x_rule.nodes().iter().zip(x_rule.weights()) {
            let theta = xj.clamp(-1.0, 1.0).acos();
            slice += vj * (angular.density(theta) * fr * r * r + d * angular.fisher_ratio(theta));
        }
        direct += r_rule.plain_weights()[i] / c * slice;
    }
    direct *= 2.0 * std::f64::consts::PI;

    let mismatch = (direct - total).abs();
    if mismatch > spec.tol * (1.0 + total.abs()) * 10.0 {
        return Err(Error::Numeric {
            what: "Fisher two-route consistency".to_string(),
            achieved: mismatch,
        });
    }
    Ok(FisherInfo {
        total,
        direct,
        radial_part,
        angular_part,
        r_inv2,
    })
}

/// Shannon entropy with its radial/angular split.
#[derive(Debug, Clone, Copy)]
pub struct EntropyParts {
    pub total: f64,
    pub radial: f64,
    pub angular: f64,
}

/// S\[rho\] = -integral of rho ln(rho) = S_r + S_Omega for separable densities.
pub fn shannon_entropy(
    radial: &dyn RadialProfile,
    angular: &dyn AngularProfile,
    spec: &QuadratureSpec,
) -> Result<EntropyParts> {
    spec.validate()?;
    let r = radial_entropy(radial, spec)?;
    let a = angular_entropy(angular, spec)?;
    Ok(EntropyParts {
        total: r + a,
        radial: r,
        angular: a,
    })
}

/// Entropy of the non-separated 2D density by nested panel quadrature;
/// a deliberately independent route used to probe S = S_r + S_Omega.
pub fn shannon_entropy_2d(
    radial: &dyn RadialProfile,
    angular: &dyn AngularProfile,
    spec: &QuadratureSpec,
) -> Result<f64> {
    spec.validate()?;
    let inner_pts = angular_layout(angular);
    let inner = spec.splitter(spec.max_panel_depth)?;
    let rate = radial.tail_rate();
    let (pts, tail) = radial_layout(radial, spec, rate, true, true);
    let mut f = |r: f64| {
        let d = radial.density(r);
        if d <= 0.0 {
            return 0.0;
        }
        let ld = radial.log_density(r);
        let mut g = |theta: f64| {
            let p = angular.density(theta);
            if p <= 0.0 {
                0.0
            } else {
                -d * p * (ld + angular.log_density(theta)) * theta.sin()
            }
        };
        2.0 * std::f64::consts::PI * r * r * inner.integrate(&mut g, &inner_pts).value
    };
    let outer = spec.splitter(spec.max_panel_depth)?;
    let est = outer.integrate(&mut f, &pts);
    let mut value = est.value;
    if let Some(start) = tail {
        value += exp_tail(&spec.tail_rule()?, start, rate, &mut f);
    }
    Ok(value)
}

/// W_q = integral of rho^q over R^3, separable into radial x angular factors.
pub fn entropic_moment(
    radial: &dyn RadialProfile,
    angular: &dyn AngularProfile,
    q: f64,
    spec: &QuadratureSpec,
) -> Result<f64> {
    spec.validate()?;
    if !(q > 0.0) {
        return Err(Error::domain(format!(
            "entropic moment needs q > 0 (rho^q is not integrable otherwise), got {q}"
        )));
    }
    let r = radial_entropic(radial, q, spec)?;
    let a = angular_entropic(angular, q, spec)?;
    Ok(r * a)
}

/// Disequilibrium D\[rho\] = W_2\[rho\].
pub fn disequilibrium(
    radial: &dyn RadialProfile,
    angular: &dyn AngularProfile,
    spec: &QuadratureSpec,
) -> Result<f64> {
    entropic_moment(radial, angular, 2.0, spec)
}

/// Renyi entropy ln(W_q)/(1-q), q > 0, q != 1.
pub fn renyi_entropy(
    radial: &dyn RadialProfile,
    angular: &dyn AngularProfile,
    q: f64,
    spec: &QuadratureSpec,
) -> Result<f64> {
    if q == 1.0 {
        return Err(Error::domain(
            "Renyi entropy is undefined at q = 1 (Shannon limit)",
        ));
    }
    let w = entropic_moment(radial, angular, q, spec)?;
    Ok(w.ln() / (1.0 - q))
}

/// Shannon entropy power J = (1/2 pi e) exp(2 S / 3) for 3D densities.
pub fn entropy_power_from(entropy: f64) -> f64 {
    (2.0 * entropy / 3.0).exp() / (2.0 * std::f64::consts::PI * std::f64::consts::E)
}

pub fn entropy_power(
    radial: &dyn RadialProfile,
    angular: &dyn AngularProfile,
    spec: &QuadratureSpec,
) -> Result<f64> {
    Ok(entropy_power_from(
        shannon_entropy(radial, angular, spec)?.total,
    ))
}

/// C_LMC = D\[rho\] exp(S\[rho\]).
pub fn lmc_complexity(
    radial: &dyn RadialProfile,
    angular: &dyn AngularProfile,
    spec: &QuadratureSpec,
) -> Result<f64> {
    let d = disequilibrium(radial, angular, spec)?;
    let s = shannon_entropy(radial, angular, spec)?.total;
    Ok(d * s.exp())
}

/// C_FS = F\[rho\] J\[rho\].
pub fn fisher_shannon_complexity(
    radial: &dyn RadialProfile,
    angular: &dyn AngularProfile,
    spec: &QuadratureSpec,
) -> Result<f64> {
    let f = fisher_information(radial, angular, spec)?.total;
    let j = entropy_power(radial, angular, spec)?;
    Ok(f * j)
}

/// C_CR = F\[rho\] V\[rho\].
pub fn cramer_rao_complexity(
    radial: &dyn RadialProfile,
    angular: &dyn AngularProfile,
    spec: &QuadratureSpec,
) -> Result<f64> {
    let f = fisher_information(radial, angular, spec)?.total;
    let v = variance(radial, spec)?;
    Ok(f * v)
}

// ---------------------------------------------------------------------------
// reporting
// ---------------------------------------------------------------------------

/// A measure selected for a report.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MeasureKind {
    RadialMoment(i32),
    Variance,
    Fisher,
    Shannon,
    EntropicMoment(f64),
    Disequilibrium,
    Renyi(f64),
    EntropyPower,
    Lmc,
    FisherShannon,
    CramerRao,
}

impl MeasureKind {
    pub fn name(&self) -> String {
        match self {
            MeasureKind::RadialMoment(k) => format!("r:k={k}"),
            MeasureKind::Variance => "v".to_string(),
            MeasureKind::Fisher => "f".to_string(),
            MeasureKind::Shannon => "s".to_string(),
            MeasureKind::EntropicMoment(q) => format!("w:q={q}"),
            MeasureKind::Disequilibrium => "d".to_string(),
            MeasureKind::Renyi(q) => format!("renyi:q={q}"),
            MeasureKind::EntropyPower => "j".to_string(),
            MeasureKind::Lmc => "clmc".to_string(),
            MeasureKind::FisherShannon => "cfs".to_string(),
            MeasureKind::CramerRao => "ccr".to_string(),
        }
    }
}

/// One computed measure with its closed-form reference where one exists.
#[derive(Debug, Clone, PartialEq)]
pub struct MeasureEntry {
    pub name: String,
    pub numeric: f64,
    pub analytic: Option<f64>,
    pub abs_dev: Option<f64>,
    pub rel_dev: Option<f64>,
}

impl MeasureEntry {
    pub fn numeric_only(name: impl Into<String>, numeric: f64) -> Self {
        Self {
            name: name.into(),
            numeric,
            analytic: None,
            abs_dev: None,
            rel_dev: None,
        }
    }

    pub fn with_analytic(name: impl Into<String>, numeric: f64, analytic: f64) -> Self {
        let abs = (numeric - analytic).abs();
        let rel = if analytic != 0.0 {
            abs / analytic.abs()
        } else {
            abs
        };
        Self {
            name: name.into(),
            numeric,
            analytic: Some(analytic),
            abs_dev: Some(abs),
            rel_dev: Some(rel),
        }
    }
}

/// Full set of computed measures for one state.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct MeasureReport {
    pub entries: Vec<MeasureEntry>,
}

impl MeasureReport {
    pub fn push(&mut self, entry: MeasureEntry) {
        self.entries.push(entry);
    }

    /// Every numeric entry must be finite.
    pub fn all_finite(&self) -> bool {
        self.entries.iter().all(|e| e.numeric.is_finite())
    }
}
