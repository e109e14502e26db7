//! The acceptance suite: every release criterion at its stated tolerance,
//! one pass/fail line per criterion.
//!
//! Criterion `rydberg-entropy` is a documented red: the printed asymptote
//! constant disagrees with direct quadrature by ln 4, and even against the
//! corrected constant the ~1.21 n^(-1/3) transient exceeds the stated 0.2
//! for n <= 100 (see the `rydberg-entropy-constant` erratum). The criterion
//! is asserted exactly as stated and expected to fail in exactly that mode;
//! a companion test pins the quantitative failure signature so regressions
//! in the entropy engine still surface.

use qinfo_core::measures::QuadratureSpec;
use qinfo_core::verify::{render_table, run_acceptance, rydberg_deviations, Level};

#[test]
fn acceptance_criteria() {
    let results = run_acceptance(Level::Full);
    println!("{}", render_table(&results));
    assert_eq!(results.len(), 10);

    let mut failures = Vec::new();
    for r in &results {
        if r.id == "rydberg-entropy" {
            if r.passed {
                failures.push(format!(
                    "[{}] unexpectedly green; the printed asymptote defect should keep it red \
                     (did the entropy engine change?): {}",
                    r.id, r.detail
                ));
            } else if !r.detail.contains("rydberg-entropy-constant") {
                failures.push(format!(
                    "[{}] failed outside its documented mode: {}",
                    r.id, r.detail
                ));
            }
        } else if !r.passed {
            failures.push(format!("[{}] {}", r.id, r.detail));
        }
    }
    assert!(failures.is_empty(), "\n{}", failures.join("\n"));
}

#[test]
fn rydberg_documented_defect_signature() {
    // Deviations from the printed asymptote decrease in n and track
    // ln 4 + 1.21 n^(-1/3) to a few percent; deviations from the corrected
    // (+ln 2) constant track 1.21 n^(-1/3).
    let spec = QuadratureSpec::default();
    let rows = rydberg_deviations(&[30, 50, 100], &spec).unwrap();
    let mut prev = f64::MAX;
    for (n, dev_printed, dev_corrected) in rows {
        assert!(
            dev_printed.abs() < prev,
            "deviation not decreasing at n = {n}"
        );
        prev = dev_printed.abs();
        let model = 1.21 * (n as f64).powf(-1.0 / 3.0);
        assert!(
            (dev_corrected - model).abs() < 0.05,
            "n = {n}: corrected-constant deviation {dev_corrected:.4} strays from the \
             documented 1.21 n^(-1/3) transient {model:.4}"
        );
        let ln4 = 2.0 * std::f64::consts::LN_2;
        assert!(
            (dev_printed - ln4 - model).abs() < 0.05,
            "n = {n}: printed-constant deviation {dev_printed:.4} strays from ln4 + transient"
        );
    }
}
