//! Three-dimensional hydrogenic stationary states in atomic units
//! (hbar = m_e = e = 1): quantum-number bookkeeping, radial and angular
//! probability densities, and their derivative / log evaluators consumed by
//! the measure engine.

use crate::error::{Error, Result};
use crate::measures::{AngularProfile, RadialProfile};
use crate::specfun::{
    gegenbauer_deriv_raw, gegenbauer_raw, laguerre_deriv_raw, laguerre_raw, ln_gamma_pos,
    polynomial_roots, PolyFamily, PolynomialSpec, QuadratureRule,
};

/// Quantum labels (n, l, m) plus nuclear charge Z of a 3D hydrogenic state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundState {
    n: u32,
    l: u32,
    m: i32,
    z: f64,
}

impl BoundState {
    pub fn new(n: u32, l: u32, m: i32, z: f64) -> Result<Self> {
        if n < 1 {
            return Err(Error::domain("n must satisfy n >= 1"));
        }
        if l > n - 1 {
            return Err(Error::domain("l must satisfy l <= n-1"));
        }
        if m.unsigned_abs() > l {
            return Err(Error::domain("m must satisfy |m| <= l"));
        }
        if !(z > 0.0) || !z.is_finite() {
            return Err(Error::domain("Z must satisfy Z > 0"));
        }
        Ok(Self { n, l, m, z })
    }

    pub fn n(&self) -> u32 {
        self.n
    }
    pub fn l(&self) -> u32 {
        self.l
    }
    pub fn m(&self) -> i32 {
        self.m
    }
    pub fn z(&self) -> f64 {
        self.z
    }

    /// E_n = -Z^2 / (2 n^2), atomic units.
    pub fn energy(&self) -> f64 {
        let n = self.n as f64;
        -self.z * self.z / (2.0 * n * n)
    }

    pub fn radial(&self) -> RadialDensity {
        RadialDensity::new(*self)
    }

    pub fn angular(&self) -> AngularDensity {
        AngularDensity::new(self.l, self.m)
    }

    /// rho(r, theta) = D_nl(r) |Y_lm(theta)|^2; phi-independent.
    pub fn full_density(&self, r: f64, theta: f64) -> f64 {
        self.radial().density(r) * self.angular().density(theta)
    }
}

/// Radial probability density D_nl(r) = |R_nl(r)|^2, normalized so that
/// the integral of D r^2 dr is 1.
///
/// In the scaled variable x = 2Zr/n: D = N^2 e^{-x} x^{2l} [L_{n-l-1}^{(2l+1)}(x)]^2
/// with N^2 = (2Z/n)^3 (n-l-1)! / (2n (n+l)!).
#[derive(Debug, Clone)]
pub struct RadialDensity {
    state: BoundState,
    /// 2Z/n, the scale of x = scale * r.
    scale: f64,
    /// ln N^2, kept in log form against factorial overflow.
    ln_norm_sq: f64,
    /// Laguerre degree n-l-1 and parameter 2l+1.
    degree: usize,
    alpha: f64,
}

impl RadialDensity {
    fn new(state: BoundState) -> Self {
        let (n, l) = (state.n as f64, state.l as f64);
        let scale = 2.0 * state.z / n;
        let ln_norm_sq =
            3.0 * scale.ln() + ln_gamma_pos(n - l) - (2.0 * n).ln() - ln_gamma_pos(n + l + 1.0);
        Self {
            state,
            scale,
            ln_norm_sq,
            degree: (state.n - state.l - 1) as usize,
            alpha: 2.0 * state.l as f64 + 1.0,
        }
    }

    pub fn state(&self) -> BoundState {
        self.state
    }

    fn laguerre(&self, x: f64) -> f64 {
        laguerre_raw(self.degree, self.alpha, x)
    }

    fn laguerre_deriv(&self, x: f64) -> f64 {
        laguerre_deriv_raw(self.degree, self.alpha, x)
    }
}

impl RadialProfile for RadialDensity {
    fn density(&self, r: f64) -> f64 {
        let x = self.scale * r;
        if x == 0.0 && self.state.l > 0 {
            return 0.0;
        }
        let lag = self.laguerre(x);
        let two_l = 2.0 * self.state.l as f64;
        let ln_env = self.ln_norm_sq - x
            + if self.state.l > 0 {
                two_l * x.ln()
            } else {
                0.0
            };
        ln_env.exp() * lag * lag
    }

    fn log_density(&self, r: f64) -> f64 {
        let x = self.scale * r;
        let lag = self.laguerre(x);
        let two_l = 2.0 * self.state.l as f64;
        let ln_x = if x > 0.0 { x.ln() } else { f64::NEG_INFINITY };
        let ln_lag_sq = if lag == 0.0 {
            f64::NEG_INFINITY
        } else {
            2.0 * lag.abs().ln()
        };
        self.ln_norm_sq - x + if self.state.l > 0 { two_l * ln_x } else { 0.0 } + ln_lag_sq
    }

    fn density_deriv(&self, r: f64) -> f64 {
        let x = self.scale * r;
        let l = self.state.l as f64;
        let lag = self.laguerre(x);
        let dlag = self.laguerre_deriv(x);
        let env = (self.ln_norm_sq - x).exp();
        let core = x.powf(2.0 * l) * (2.0 * lag * dlag - lag * lag)
            + if self.state.l > 0 {
                2.0 * l * x.powf(2.0 * l - 1.0) * lag * lag
            } else {
                0.0
            };
        self.scale * env * core
    }

    fn fisher_ratio(&self, r: f64) -> f64 {
        let x = self.scale * r;
        let l = self.state.l as f64;
        let lag = self.laguerre(x);
        let dlag = self.laguerre_deriv(x);
        let env = (self.ln_norm_sq - x).exp();
        let c2 = self.scale * self.scale;
        if self.state.l == 0 {
            // ((2l-x)L + 2xL')^2 x^{2l-2} reduces to (2L' - L)^2 at l = 0
            let g = 2.0 * dlag - lag;
            c2 * env * g * g
        } else {
            let b = (2.0 * l - x) * lag + 2.0 * x * dlag;
            c2 * env * x.powf(2.0 * l - 2.0) * b * b
        }
    }

    fn interior_zeros(&self) -> Vec<f64> {
        if self.degree == 0 {
            return Vec::new();
        }
        let roots = polynomial_roots(&PolynomialSpec {
            family: PolyFamily::AssocLaguerre { alpha: self.alpha },
            degree: self.degree,
        })
        .expect("valid Laguerre parameter by construction");
        roots.into_iter().map(|x| x / self.scale).collect()
    }

    fn tail_rate(&self) -> f64 {
        self.scale
    }

    fn moment_exact(&self, k: i32) -> Option<Result<f64>> {
        let alpha = 2.0 * self.state.l as f64 + k as f64 + 2.0;
        if alpha <= -1.0 {
            return Some(Err(Error::domain(format!(
                "radial moment <r^{k}> diverges at the origin: needs k > -(2l+3)"
            ))));
        }
        // <r^k> = N^2 c^{-(k+3)} * integral of e^{-x} x^{2l+k+2} L^2 dx
        let nodes = self.degree + 3;
        let rule = match QuadratureRule::gauss_laguerre(alpha, nodes) {
            Ok(r) => r,
            Err(e) => return Some(Err(e)),
        };
        let raw = rule.integrate(|x| {
            let lag = self.laguerre(x);
            lag * lag
        });
        let ln_prefactor = self.ln_norm_sq - (k as f64 + 3.0) * self.scale.ln();
        Some(Ok(ln_prefactor.exp() * raw))
    }

    fn fisher_exact(&self) -> Option<Result<f64>> {
        // F_r = N^2 / c * integral of e^{-x} x^{2l} ((2l-x)L + 2xL')^2 dx
        let l = self.state.l as f64;
        let nodes = self.degree + 4;
        let rule = match QuadratureRule::gauss_laguerre(2.0 * l, nodes) {
            Ok(r) => r,
            Err(e) => return Some(Err(e)),
        };
        let raw = rule.integrate(|x| {
            let b = (2.0 * l - x) * self.laguerre(x) + 2.0 * x * self.laguerre_deriv(x);
            b * b
        });
        Some(Ok((self.ln_norm_sq - self.scale.ln()).exp() * raw))
    }
}

/// Angular probability density |Y_lm(theta, .)|^2, phi-independent since
/// |e^{im phi}|^2 = 1. Built on the Gegenbauer representation
/// Pi(theta) = A (sin theta)^{2|m|} [C_{l-|m|}^{(|m|+1/2)}(cos theta)]^2 with A
/// fixed by unit normalization over the sphere.
#[derive(Debug, Clone)]
pub struct AngularDensity {
    m_abs: u32,
    /// Gegenbauer degree l - |m| and parameter |m| + 1/2.
    degree: usize,
    lambda: f64,
    /// A = 1 / (2 pi h) with h the Gegenbauer squared norm.
    norm: f64,
}

impl AngularDensity {
    fn new(l: u32, m: i32) -> Self {
        let m_abs = m.unsigned_abs();
        let degree = (l - m_abs) as usize;
        let lambda = m_abs as f64 + 0.5;
        let k = degree as f64;
        // h = pi 2^{1-2 lambda} Gamma(k+2 lambda) / (k! (k+lambda) Gamma(lambda)^2)
        let ln_h = std::f64::consts::PI.ln()
            + (1.0 - 2.0 * lambda) * std::f64::consts::LN_2
            + ln_gamma_pos(k + 2.0 * lambda)
            - ln_gamma_pos(k + 1.0)
            - (k + lambda).ln()
            - 2.0 * ln_gamma_pos(lambda);
        let norm = (-(2.0 * std::f64::consts::PI).ln() - ln_h).exp();
        Self {
            m_abs,
            degree,
            lambda,
            norm,
        }
    }

    fn gegenbauer(&self, x: f64) -> f64 {
        gegenbauer_raw(self.degree, self.lambda, x)
    }

    fn gegenbauer_deriv(&self, x: f64) -> f64 {
        gegenbauer_deriv_raw(self.degree, self.lambda, x)
    }

    /// Density as a function of x = cos(theta).
    pub(crate) fn density_cos(&self, x: f64) -> f64 {
        let c = self.gegenbauer(x);
        let s2 = (1.0 - x * x).max(0.0);
        self.norm * s2.powi(self.m_abs as i32) * c * c
    }

    /// (dPi/dtheta)^2 / Pi as a function of x = cos(theta); polynomial in x.
    pub(crate) fn fisher_ratio_cos(&self, x: f64) -> f64 {
        let c = self.gegenbauer(x);
        let dc = self.gegenbauer_deriv(x);
        let s2 = (1.0 - x * x).max(0.0);
        let m = self.m_abs as f64;
        if self.m_abs == 0 {
            self.norm * 4.0 * s2 * dc * dc
        } else {
            let b = 2.0 * m * x * c - 2.0 * s2 * dc;
            self.norm * s2.powi(self.m_abs as i32 - 1) * b * b
        }
    }
}

impl AngularProfile for AngularDensity {
    fn density(&self, theta: f64) -> f64 {
        self.density_cos(theta.cos())
    }

    fn log_density(&self, theta: f64) -> f64 {
        let x = theta.cos();
        let c = self.gegenbauer(x);
        let s2 = (1.0 - x * x).max(0.0);
        let ln_c_sq = if c == 0.0 {
            f64::NEG_INFINITY
        } else {
            2.0 * c.abs().ln()
        };
        let ln_s2 = if s2 > 0.0 { s2.ln() } else { f64::NEG_INFINITY };
        self.norm.ln()
            + if self.m_abs > 0 {
                self.m_abs as f64 * ln_s2
            } else {
                0.0
            }
            + ln_c_sq
    }

    fn density_deriv(&self, theta: f64) -> f64 {
        let x = theta.cos();
        let s = theta.sin();
        let c = self.gegenbauer(x);
        let dc = self.gegenbauer_deriv(x);
        let m = self.m_abs as f64;
        let s2 = (s * s).max(0.0);
        let poly_term = -2.0 * s * c * dc * s2.powi(self.m_abs as i32);
        let power_term = if self.m_abs > 0 {
            2.0 * m * s2.powi(self.m_abs as i32 - 1) * s * x * c * c
        } else {
            0.0
        };
        self.norm * (poly_term + power_term)
    }

    fn fisher_ratio(&self, theta: f64) -> f64 {
        self.fisher_ratio_cos(theta.cos())
    }

    fn interior_zeros(&self) -> Vec<f64> {
        if self.degree == 0 {
            return Vec::new();
        }
        let roots = polynomial_roots(&PolynomialSpec {
            family: PolyFamily::Gegenbauer { alpha: self.lambda },
            degree: self.degree,
        })
        .expect("valid Gegenbauer parameter by construction");
        let mut thetas: Vec<f64> = roots
            .into_iter()
            .map(|x| x.clamp(-1.0, 1.0).acos())
            .collect();
        thetas.sort_by(|a, b| a.partial_cmp(b).unwrap());
        thetas
    }

    fn endpoint_singular(&self) -> bool {
        self.m_abs >= 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    #[test]
    fn quantum_number_validation() {
        assert!(BoundState::new(0, 0, 0, 1.0).is_err());
        assert!(BoundState::new(2, 2, 0, 1.0).is_err());
        assert!(BoundState::new(2, 1, 2, 1.0).is_err());
        assert!(BoundState::new(2, 1, -2, 1.0).is_err());
        assert!(BoundState::new(1, 0, 0, 0.0).is_err());
        assert!(BoundState::new(1, 0, 0, -1.0).is_err());
        assert!(BoundState::new(3, 2, -2, 2.5).is_ok());
    }

    #[test]
    fn energies() {
        let e = |n, z| BoundState::new(n, 0, 0, z).unwrap().energy();
        assert_relative_eq!(e(1, 1.0), -0.5);
        assert_relative_eq!(e(2, 1.0), -0.125);
        assert_relative_eq!(e(1, 2.0), -2.0);
    }

    #[test]
    fn ground_state_radial_density() {
        // D_10(r) = 4 Z^3 e^{-2Zr}
        let d = BoundState::new(1, 0, 0, 1.0).unwrap().radial();
        assert_relative_eq!(d.density(0.0), 4.0, max_relative = 1e-13);
        assert_relative_eq!(d.density(1.0), 4.0 * (-2.0f64).exp(), max_relative = 1e-13);
    }

    #[test]
    fn two_p_radial_density() {
        // D_21(r) = r^2 e^{-r} / 24 at Z = 1
        let d = BoundState::new(2, 1, 0, 1.0).unwrap().radial();
        assert_relative_eq!(d.density(2.0), (-2.0f64).exp() / 6.0, max_relative = 1e-13);
        assert_eq!(d.density(0.0), 0.0);
    }

    #[test]
    fn full_density_ground_state() {
        let s = BoundState::new(1, 0, 0, 1.0).unwrap();
        let inv_pi = 1.0 / std::f64::consts::PI;
        assert_relative_eq!(s.full_density(0.0, 0.7), inv_pi, max_relative = 1e-13);
        assert_relative_eq!(
            s.full_density(1.0, 2.1),
            (-2.0f64).exp() * inv_pi,
            max_relative = 1e-13
        );
    }

    #[test]
    fn angular_density_values() {
        // |Y_00|^2 = 1/(4 pi) everywhere
        let a = AngularDensity::new(0, 0);
        let quarter = 0.25 / std::f64::consts::PI;
        for theta in [0.0, 0.3, 1.5, std::f64::consts::PI] {
            assert_relative_eq!(a.density(theta), quarter, max_relative = 1e-13);
        }
        // |Y_10|^2 = 3/(4 pi) cos^2(theta)
        let a = AngularDensity::new(1, 0);
        assert_relative_eq!(a.density(0.0), 3.0 * quarter, max_relative = 1e-13);
        assert_relative_eq!(
            a.density(1.0),
            3.0 * quarter * 1.0f64.cos().powi(2),
            max_relative = 1e-13
        );
        // |Y_11|^2 = 3/(8 pi) sin^2(theta)
        let a = AngularDensity::new(1, 1);
        assert_relative_eq!(
            a.density(std::f64::consts::FRAC_PI_2),
            3.0 / (8.0 * std::f64::consts::PI),
            max_relative = 1e-13
        );
    }

    #[test]
    fn angular_normalization_all_lm() {
        // 2 pi * integral of Pi(acos x) dx over [-1,1] = 1, Gauss-exact.
        let rule = QuadratureRule::gauss_legendre(-1.0, 1.0, 64).unwrap();
        for l in 0..=6u32 {
            for m in -(l as i32)..=(l as i32) {
                let a = AngularDensity::new(l, m);
                let norm = 2.0 * std::f64::consts::PI * rule.integrate(|x| a.density_cos(x));
                assert_relative_eq!(norm, 1.0, max_relative = 1e-12);
            }
        }
    }

    #[test]
    fn radial_normalization_and_nodal_count() {
        for n in 1..=8u32 {
            for l in 0..n {
                let state = BoundState::new(n, l, 0, 1.3).unwrap();
                let d = state.radial();
                let zeros = d.interior_zeros();
                assert_eq!(zeros.len(), (n - l - 1) as usize);

                // normalization via the exact moment k = 0
                let norm = d.moment_exact(0).unwrap().unwrap();
                assert_relative_eq!(norm, 1.0, max_relative = 1e-12);

                // sign change of R_nl (not squared) across each density zero
                for (i, &r) in zeros.iter().enumerate() {
                    let below = if i == 0 {
                        r * 0.5
                    } else {
                        (zeros[i - 1] + r) / 2.0
                    };
                    let above = if i + 1 == zeros.len() {
                        r * 1.3
                    } else {
                        (r + zeros[i + 1]) / 2.0
                    };
                    let sgn = |rr: f64| d.laguerre(d.scale * rr).signum();
                    assert_eq!(sgn(below) * sgn(above), -1.0, "no sign flip at node {r}");
                }
            }
        }
    }

    #[test]
    fn radial_derivative_matches_finite_difference() {
        let d = BoundState::new(4, 1, 0, 1.0).unwrap().radial();
        for r in [0.3, 1.0, 3.7, 11.0] {
            let h = 1e-6 * (1.0 + r);
            let fd = (d.density(r + h) - d.density(r - h)) / (2.0 * h);
            assert_relative_eq!(d.density_deriv(r), fd, max_relative = 2e-6, epsilon = 1e-12);
        }
    }

    #[test]
    fn angular_derivative_matches_finite_difference() {
        for (l, m) in [(2u32, 0i32), (3, 2), (4, -3)] {
            let a = AngularDensity::new(l, m);
            for theta in [0.4, 1.1, 2.0, 2.9] {
                let h = 1e-6;
                let fd = (a.density(theta + h) - a.density(theta - h)) / (2.0 * h);
                assert_relative_eq!(
                    a.density_deriv(theta),
                    fd,
                    max_relative = 5e-6,
                    epsilon = 1e-12
                );
            }
        }
    }

    #[test]
    fn fisher_ratio_finite_at_laguerre_zeros() {
        let d = BoundState::new(3, 0, 0, 1.0).unwrap().radial();
        for r in d.interior_zeros() {
            let v = d.fisher_ratio(r);
            assert!(v.is_finite() && v >= 0.0);
            let eps = 1e-7;
            assert_relative_eq!(d.fisher_ratio(r + eps), v, max_relative = 1e-4);
        }
    }

    proptest! {
        #[test]
        fn z_scaling_law(
            n in 1u32..6,
            seed_l in 0u32..6,
            z in 0.4f64..4.0,
            r in 0.01f64..20.0,
        ) {
            let l = seed_l % n;
            let unit = BoundState::new(n, l, 0, 1.0).unwrap().radial();
            let scaled = BoundState::new(n, l, 0, z).unwrap().radial();
            // D_Z(r) = Z^3 D_1(Z r)
            let lhs = scaled.density(r);
            let rhs = z.powi(3) * unit.density(z * r);
            let scale = lhs.abs().max(rhs.abs()).max(1e-280);
            prop_assert!((lhs - rhs).abs() <= 1e-12 * scale);
        }

        #[test]
        fn densities_nonnegative(
            n in 1u32..7,
            seed_l in 0u32..7,
            r in 0.0f64..40.0,
            theta in 0.0f64..std::f64::consts::PI,
        ) {
            let l = seed_l % n;
            let state = BoundState::new(n, l, (l / 2) as i32, 1.0).unwrap();
            prop_assert!(state.radial().density(r) >= 0.0);
            prop_assert!(state.angular().density(theta) >= 0.0);
        }
    }
}
