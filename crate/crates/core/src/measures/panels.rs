//! Panel-based integration of integrands with integrable endpoint
//! singularities (logarithms, fractional powers). The domain is split at
//! known singular points; panels refine dyadically toward each flagged
//! endpoint until the panel contribution drops below the threshold, and
//! regular stretches are handled by bisection-adaptive Gauss-Legendre.

use crate::error::{Error, Result};
use crate::specfun::QuadratureRule;

/// A split point of the integration domain.
#[derive(Debug, Clone, Copy)]
pub struct Breakpoint {
    pub x: f64,
    /// Integrand is non-analytic (log / fractional power) at this point.
    pub singular: bool,
}

impl Breakpoint {
    pub fn regular(x: f64) -> Self {
        Self { x, singular: false }
    }
    pub fn singular(x: f64) -> Self {
        Self { x, singular: true }
    }
}

/// Outcome of a panel integration.
#[derive(Debug, Clone, Copy)]
pub struct Estimate {
    pub value: f64,
    pub error_estimate: f64,
}

/// Roundoff floor: panels are accepted once the bisection residual falls
/// below this fraction of the local contribution, whatever the absolute
/// tolerance asks for.
const REL_FLOOR: f64 = 1e-13;

pub struct SplitIntegrator {
    base: QuadratureRule,
    /// Contribution threshold: refinement toward a singular endpoint stops
    /// once a dyadic panel contributes less than this in absolute value.
    panel_tol: f64,
    max_depth: u32,
}

impl SplitIntegrator {
    pub fn new(order: usize, panel_tol: f64, max_depth: u32) -> Result<Self> {
        if !(panel_tol > 0.0) {
            return Err(Error::domain(
                "panel tolerance must be positive".to_string(),
            ));
        }
        Ok(Self {
            base: QuadratureRule::gauss_legendre(-1.0, 1.0, order.max(2))?,
            panel_tol,
            max_depth,
        })
    }

    /// Integrates f between the first and last breakpoint. Breakpoints must be
    /// strictly increasing; flagged points receive dyadic refinement.
    pub fn integrate(&self, f: &mut impl FnMut(f64) -> f64, pts: &[Breakpoint]) -> Estimate {
        assert!(pts.len() >= 2, "need at least the two domain endpoints");
        let mut value = 0.0;
        let mut err = 0.0;
        for pair in pts.windows(2) {
            let (l, r) = (pair[0], pair[1]);
            assert!(l.x < r.x, "breakpoints must be strictly increasing");
            let est = self.subinterval(f, l, r);
            value += est.value;
            err += est.error_estimate;
        }
        Estimate {
            value,
            error_estimate: err,
        }
    }

    fn subinterval(
        &self,
        f: &mut impl FnMut(f64) -> f64,
        l: Breakpoint,
        r: Breakpoint,
    ) -> Estimate {
        match (l.singular, r.singular) {
            (false, false) => self.adaptive(f, l.x, r.x, 0),
            (true, false) => self.toward_singular(f, l.x, r.x, true),
            (false, true) => self.toward_singular(f, l.x, r.x, false),
            (true, true) => {
                let mid = 0.5 * (l.x + r.x);
                let a = self.toward_singular(f, l.x, mid, true);
                let b = self.toward_singular(f, mid, r.x, false);
                Estimate {
                    value: a.value + b.value,
                    error_estimate: a.error_estimate + b.error_estimate,
                }
            }
        }
    }

    /// Geometric panels shrinking toward the singular endpoint (`at_left`
    /// selects which end). Each panel itself is handled adaptively.
    fn toward_singular(
        &self,
        f: &mut impl FnMut(f64) -> f64,
        a: f64,
        b: f64,
        at_left: bool,
    ) -> Estimate {
        let h = b - a;
        let mut value = 0.0;
        let mut err = 0.0;
        let mut last = f64::INFINITY;
        for j in 0..self.max_depth {
            let (lo, hi) = {
                let outer = h * 0.5f64.powi(j as i32);
                let inner = outer * 0.5;
                if at_left {
                    (a + inner, a + outer)
                } else {
                    (b - outer, b - inner)
                }
            };
            if hi - lo <= f64::EPSILON * (lo.abs() + hi.abs()) {
                break;
            }
            let est = self.adaptive(f, lo, hi, 0);
            value += est.value;
            err += est.error_estimate;
            last = est.value.abs();
            if j >= 2 && last < self.panel_tol.max(REL_FLOOR * value.abs()) {
                return Estimate {
                    value,
                    error_estimate: err + last,
                };
            }
        }
        if !last.is_finite() {
            // The loop never ran (zero depth): nothing was integrated.
            return Estimate {
                value,
                error_estimate: f64::INFINITY,
            };
        }
        // Depth exhausted: the skipped sliver is charged to the estimate.
        Estimate {
            value,
            error_estimate: err + last,
        }
    }

    /// Bisection-adaptive Gauss-Legendre on a regular stretch.
    fn adaptive(&self, f: &mut impl FnMut(f64) -> f64, a: f64, b: f64, depth: u32) -> Estimate {
        let whole = self.base.integrate_affine(a, b, &mut *f);
        let mid = 0.5 * (a + b);
        let left = self.base.integrate_affine(a, mid, &mut *f);
        let right = self.base.integrate_affine(mid, b, &mut *f);
        let diff = (whole - left - right).abs();
        let accept = self.panel_tol.max(REL_FLOOR * (left + right).abs());
        if diff <= accept || depth >= 24 || (b - a) < 1e-14 * (1.0 + a.abs() + b.abs()) {
            return Estimate {
                value: left + right,
                error_estimate: diff,
            };
        }
        let l = self.adaptive(f, a, mid, depth + 1);
        let r = self.adaptive(f, mid, b, depth + 1);
        Estimate {
            value: l.value + r.value,
            error_estimate: l.error_estimate + r.error_estimate,
        }
    }
}

/// Integral of f over [start, inf) for integrands decaying like e^{-rate x},
/// mapped onto a Gauss-Laguerre grid.
pub fn exp_tail(
    rule: &QuadratureRule,
    start: f64,
    rate: f64,
    f: &mut impl FnMut(f64) -> f64,
) -> f64 {
    debug_assert!(rate > 0.0);
    rule.integrate_plain(|u| f(start + u / rate) / rate)
}
