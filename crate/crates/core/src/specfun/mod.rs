//! Self-contained special functions and quadrature rules used by every
//! density and measure computation: log-gamma/digamma, associated Laguerre
//! and Gegenbauer polynomials, their roots through the Jacobi matrix, and
//! Gauss-Laguerre / Gauss-Legendre rules.

mod gamma;
mod poly;
mod quad;
mod tridiag;

pub(crate) use gamma::ln_gamma_pos;
pub use gamma::{digamma, ln_gamma};
pub use poly::{
    eval_assoc_laguerre, eval_gegenbauer, polynomial_roots, PolyFamily, PolynomialSpec,
};
pub(crate) use poly::{gegenbauer_deriv_raw, gegenbauer_raw, laguerre_deriv_raw, laguerre_raw};
pub use quad::{GaussKind, QuadratureRule};
