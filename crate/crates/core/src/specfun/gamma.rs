//! Log-gamma and digamma for positive real arguments.

use crate::error::{Error, Result};

/// ln(2*sqrt(e/pi))
const LN_2_SQRT_E_OVER_PI: f64 = 0.620_782_237_635_245_2;

/// Rational coefficients of the Lanczos-type expansion from Pugh's analysis;
/// gives close to full f64 accuracy for x > 0.
const LANCZOS_DK: [f64; 11] = [
    2.485_740_891_387_535_5e-5,
    1.051_423_785_817_219_7,
    -3.456_870_972_220_162_5,
    4.512_277_094_668_948,
    -2.982_852_253_235_766_4,
    1.056_397_115_771_267,
    -1.954_287_731_916_458_7e-1,
    1.709_705_434_044_412e-2,
    -5.719_261_174_043_057e-4,
    4.633_994_733_599_057e-6,
    -2.719_949_084_886_077_2e-9,
];
const LANCZOS_R: f64 = 10.900511;

/// Natural logarithm of the gamma function, x > 0.
pub fn ln_gamma(x: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::domain(format!("ln_gamma requires x > 0, got {x}")));
    }
    Ok(ln_gamma_pos(x))
}

/// Unchecked variant used internally where positivity holds by construction.
pub(crate) fn ln_gamma_pos(x: f64) -> f64 {
    debug_assert!(x > 0.0);
    let s = LANCZOS_DK
        .iter()
        .enumerate()
        .skip(1)
        .fold(LANCZOS_DK[0], |s, (i, dk)| s + dk / (x + i as f64 - 1.0));
    s.ln() + LN_2_SQRT_E_OVER_PI + (x - 0.5) * ((x - 0.5 + LANCZOS_R) / std::f64::consts::E).ln()
}

/// Digamma function psi(x) = Gamma'(x)/Gamma(x), x > 0.
///
/// Upward recurrence to x >= 12 followed by the asymptotic series in 1/x^2.
pub fn digamma(x: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::domain(format!("digamma requires x > 0, got {x}")));
    }
    Ok(digamma_pos(x))
}

pub(crate) fn digamma_pos(x: f64) -> f64 {
    debug_assert!(x > 0.0);
    // Bernoulli-number coefficients B_{2k}/(2k) of the asymptotic expansion.
    const ASY: [f64; 7] = [
        1.0 / 12.0,
        -1.0 / 120.0,
        1.0 / 252.0,
        -1.0 / 240.0,
        1.0 / 132.0,
        -691.0 / 32760.0,
        1.0 / 12.0,
    ];
    let mut value = 0.0;
    let mut z = x;
    while z < 12.0 {
        value -= 1.0 / z;
        z += 1.0;
    }
    let inv = 1.0 / z;
    let inv2 = inv * inv;
    let mut series = 0.0;
    let mut p = inv2;
    for c in ASY {
        series += c * p;
        p *= inv2;
    }
    value + z.ln() - 0.5 * inv - series
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

    #[test]
    fn ln_gamma_integers() {
        // Gamma(1) = Gamma(2) = 1
        assert!(ln_gamma(1.0).unwrap().abs() < 1e-14);
        assert!(ln_gamma(2.0).unwrap().abs() < 1e-14);
        // Gamma(5) = 24
        assert_relative_eq!(ln_gamma(5.0).unwrap(), 24f64.ln(), max_relative = 1e-14);
    }

    #[test]
    fn ln_gamma_half_integers() {
        let ln_sqrt_pi = 0.5 * std::f64::consts::PI.ln();
        assert_relative_eq!(ln_gamma(0.5).unwrap(), ln_sqrt_pi, max_relative = 1e-14);
        // Gamma(3/2) = sqrt(pi)/2
        assert_relative_eq!(
            ln_gamma(1.5).unwrap(),
            ln_sqrt_pi - std::f64::consts::LN_2,
            max_relative = 1e-13
        );
    }

    #[test]
    fn ln_gamma_recurrence_over_range() {
        // Gamma(x+1) = x Gamma(x) across the documented range.
        let mut x = 1e-3;
        while x < 1e3 {
            let lhs = ln_gamma(x + 1.0).unwrap();
            let rhs = ln_gamma(x).unwrap() + x.ln();
            assert!(
                (lhs - rhs).abs() <= 1e-12 * lhs.abs().max(1.0),
                "recurrence violated at x = {x}: {lhs} vs {rhs}"
            );
            x *= 1.37;
        }
    }

    #[test]
    fn digamma_reference_points() {
        // psi(1) = -gamma (high-precision series value frozen below)
        assert_relative_eq!(digamma(1.0).unwrap(), -EULER_GAMMA, max_relative = 1e-13);
        // psi(1/2) = -gamma - 2 ln 2
        assert_relative_eq!(
            digamma(0.5).unwrap(),
            -EULER_GAMMA - 2.0 * std::f64::consts::LN_2,
            max_relative = 1e-13
        );
        assert_relative_eq!(
            digamma(0.5).unwrap(),
            -1.963_510_026_021_423_5,
            max_relative = 1e-12
        );
        // psi(2) = 1 - gamma
        assert_relative_eq!(
            digamma(2.0).unwrap(),
            1.0 - EULER_GAMMA,
            max_relative = 1e-13
        );
    }

    #[test]
    fn digamma_recurrence() {
        // psi(x+1) = psi(x) + 1/x
        let mut x = 1e-3;
        while x < 1e3 {
            let lhs = digamma(x + 1.0).unwrap();
            let rhs = digamma(x).unwrap() + 1.0 / x;
            assert!(
                (lhs - rhs).abs() <= 1e-12 * rhs.abs().max(1.0),
                "digamma recurrence violated at x = {x}"
            );
            x *= 1.61;
        }
    }

    #[test]
    fn rejects_nonpositive() {
        assert!(ln_gamma(0.0).is_err());
        assert!(ln_gamma(-1.5).is_err());
        assert!(digamma(0.0).is_err());
        assert!(digamma(-3.0).is_err());
    }
}
