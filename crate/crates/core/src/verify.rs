//! The acceptance suite: every release criterion as an executable check with
//! its tolerance pinned in code. `run_acceptance` powers both the `verify`
//! CLI subcommand and the `acceptance` integration test target.

use crate::analytic;
use crate::ddim::{self, CircularStateD};
use crate::error::Result;
use crate::hydrogenic::BoundState;
use crate::kleingordon::{self, PionicState, FINE_STRUCTURE};
use crate::measures::{self, QuadratureSpec, RadialProfile};

/// Check breadth: `Fast` trims state grids to finish in a few seconds,
/// `Full` runs every criterion at its stated extent.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Level {
    Fast,
    Full,
}

#[derive(Debug, Clone)]
pub struct CheckResult {
    pub id: &'static str,
    pub description: &'static str,
    pub passed: bool,
    pub detail: String,
}

type CheckOutcome = std::result::Result<String, String>;

fn run_check(
    id: &'static str,
    description: &'static str,
    body: impl FnOnce() -> CheckOutcome,
) -> CheckResult {
    match body() {
        Ok(detail) => CheckResult {
            id,
            description,
            passed: true,
            detail,
        },
        Err(detail) => CheckResult {
            id,
            description,
            passed: false,
            detail,
        },
    }
}

fn err_str(e: crate::Error) -> String {
    e.to_string()
}

/// Runs the full acceptance suite and returns one result per criterion.
pub fn run_acceptance(level: Level) -> Vec<CheckResult> {
    let spec = QuadratureSpec::default();
    vec![
        ground_state_constants(&spec),
        ground_state_entropy(&spec),
        fisher_variance_oracles(level, &spec),
        fisher_decomposition(level, &spec),
        z_invariance(level, &spec),
        complexity_bounds(level, &spec),
        figure1_quasicircular(level, &spec),
        ddim_lmc(level, &spec),
        kleingordon_properties(level, &spec),
        rydberg_entropy(level, &spec),
    ]
}

/// Errata entries with the checks that exercise them, for the verify table.
pub fn errata_exercised() -> Vec<(&'static analytic::Erratum, &'static str)> {
    analytic::errata_ledger()
        .iter()
        .map(|e| {
            let by = match e.id {
                "variance-z-exponent" | "fisher-z-exponent" | "cramer-rao-form" => {
                    "fisher-variance-oracles"
                }
                "kg-charge-sign" => "kleingordon-properties",
                "angular-harmonic-form" => "ground-state-constants",
                "rydberg-entropy-constant" => "rydberg-entropy",
                _ => "unexercised",
            };
            (e, by)
        })
        .collect()
}

fn ground_state_constants(spec: &QuadratureSpec) -> CheckResult {
    run_check(
        "ground-state-constants",
        "ground-state C_CR, C_LMC, C_FS match their closed forms (rel 1e-6) for Z in {1,2,5}",
        || {
            let consts = analytic::ground_state_constants();
            let mut worst: f64 = 0.0;
            for z in [1.0, 2.0, 5.0] {
                let s = BoundState::new(1, 0, 0, z).map_err(err_str)?;
                let (rad, ang) = (s.radial(), s.angular());
                let ccr = measures::cramer_rao_complexity(&rad, &ang, spec).map_err(err_str)?;
                let clmc = measures::lmc_complexity(&rad, &ang, spec).map_err(err_str)?;
                let cfs = measures::fisher_shannon_complexity(&rad, &ang, spec).map_err(err_str)?;
                for (num, exact) in [
                    (ccr, consts.cramer_rao),
                    (clmc, consts.lmc),
                    (cfs, consts.fisher_shannon),
                ] {
                    worst = worst.max(((num - exact) / exact).abs());
                }
            }
            if worst <= 1e-6 {
                Ok(format!("max relative deviation {worst:.2e}"))
            } else {
                Err(format!("relative deviation {worst:.2e} exceeds 1e-6"))
            }
        },
    )
}

fn ground_state_entropy(spec: &QuadratureSpec) -> CheckResult {
    run_check(
        "ground-state-entropy",
        "S(1s) within 1e-8 of 3 + ln(pi) - 3 ln(Z) for Z in {1,2,10}",
        || {
            let mut worst: f64 = 0.0;
            for z in [1.0, 2.0, 10.0] {
                let s = BoundState::new(1, 0, 0, z).map_err(err_str)?;
                let parts =
                    measures::shannon_entropy(&s.radial(), &s.angular(), spec).map_err(err_str)?;
                worst = worst.max((parts.total - analytic::shannon_ground(z)).abs());
            }
            if worst <= 1e-8 {
                Ok(format!("max absolute deviation {worst:.2e}"))
            } else {
                Err(format!("absolute deviation {worst:.2e} exceeds 1e-8"))
            }
        },
    )
}

fn fisher_variance_oracles(level: Level, spec: &QuadratureSpec) -> CheckResult {
    run_check(
        "fisher-variance-oracles",
        "quadrature F and V match the corrected closed forms (rel 1e-6 / 1e-10) for all n <= 5; \
         errata ledger documents the corrections",
        || {
            let n_max = if level == Level::Full { 5 } else { 3 };
            let mut worst_f: f64 = 0.0;
            let mut worst_v: f64 = 0.0;
            for z in [1.0, 2.5] {
                for n in 1..=n_max {
                    for l in 0..n {
                        for m in -(l as i32)..=(l as i32) {
                            let s = BoundState::new(n, l, m, z).map_err(err_str)?;
                            let f = measures::fisher_information(&s.radial(), &s.angular(), spec)
                                .map_err(err_str)?
                                .total;
                            let v = measures::variance(&s.radial(), spec).map_err(err_str)?;
                            let f_ref = analytic::fisher_analytic(n, m, z).map_err(err_str)?.value;
                            let v_ref =
                                analytic::variance_analytic(n, l, z).map_err(err_str)?.value;
                            worst_f = worst_f.max(((f - f_ref) / f_ref).abs());
                            worst_v = worst_v.max(((v - v_ref) / v_ref).abs());
                        }
                    }
                }
            }
            let ids: Vec<&str> = analytic::errata_ledger().iter().map(|e| e.id).collect();
            for required in [
                "variance-z-exponent",
                "fisher-z-exponent",
                "cramer-rao-form",
            ] {
                if !ids.contains(&required) {
                    return Err(format!("errata ledger is missing `{required}`"));
                }
            }
            if worst_f <= 1e-6 && worst_v <= 1e-10 {
                Ok(format!(
                    "max rel dev F {worst_f:.2e}, V {worst_v:.2e}; ledger complete"
                ))
            } else {
                Err(format!(
                    "fisher_analytic vs quadrature rel dev {worst_f:.2e} (limit 1e-6); \
                     variance_analytic vs quadrature rel dev {worst_v:.2e} (limit 1e-10)"
                ))
            }
        },
    )
}

fn fisher_decomposition(level: Level, spec: &QuadratureSpec) -> CheckResult {
    run_check(
        "fisher-decomposition",
        "direct 2D Fisher quadrature equals F_r + <r^-2> F_Omega (rel 1e-6) for 20 states",
        || {
            let n_max = if level == Level::Full { 4 } else { 3 };
            let mut worst: f64 = 0.0;
            let mut count = 0;
            for n in 1..=n_max {
                for l in 0..n {
                    for m in 0..=(l as i32) {
                        let s = BoundState::new(n, l, m, 1.0).map_err(err_str)?;
                        let info = measures::fisher_information(&s.radial(), &s.angular(), spec)
                            .map_err(err_str)?;
                        worst = worst.max(((info.direct - info.total) / info.total).abs());
                        count += 1;
                    }
                }
            }
            if worst <= 1e-6 {
                Ok(format!("{count} states, max rel mismatch {worst:.2e}"))
            } else {
                Err(format!("rel mismatch {worst:.2e} exceeds 1e-6"))
            }
        },
    )
}

fn z_invariance(level: Level, spec: &QuadratureSpec) -> CheckResult {
    run_check(
        "z-invariance",
        "C_LMC, C_FS, C_CR spread over Z in {0.5,1,2,4} stays below 1e-6 for 10 states",
        || {
            let states: &[(u32, u32, i32)] = if level == Level::Full {
                &[
                    (1, 0, 0),
                    (2, 0, 0),
                    (2, 1, 0),
                    (2, 1, 1),
                    (3, 0, 0),
                    (3, 1, 1),
                    (3, 2, 0),
                    (4, 2, 1),
                    (4, 3, 3),
                    (5, 1, 0),
                ]
            } else {
                &[(1, 0, 0), (2, 1, 0), (3, 2, 2), (4, 1, 1)]
            };
            let mut worst: f64 = 0.0;
            for &(n, l, m) in states {
                let mut series = [[0.0; 4]; 3];
                for (zi, &z) in [0.5, 1.0, 2.0, 4.0].iter().enumerate() {
                    let s = BoundState::new(n, l, m, z).map_err(err_str)?;
                    let (rad, ang) = (s.radial(), s.angular());
                    series[0][zi] = measures::lmc_complexity(&rad, &ang, spec).map_err(err_str)?;
                    series[1][zi] =
                        measures::fisher_shannon_complexity(&rad, &ang, spec).map_err(err_str)?;
                    series[2][zi] =
                        measures::cramer_rao_complexity(&rad, &ang, spec).map_err(err_str)?;
                }
                for row in &series {
                    let max = row.iter().cloned().fold(f64::MIN, f64::max);
                    let min = row.iter().cloned().fold(f64::MAX, f64::min);
                    worst = worst.max((max - min) / min.abs());
                }
            }
            if worst <= 1e-6 {
                Ok(format!("max relative spread {worst:.2e}"))
            } else {
                Err(format!("relative spread {worst:.2e} exceeds 1e-6"))
            }
        },
    )
}

fn complexity_bounds(level: Level, spec: &QuadratureSpec) -> CheckResult {
    run_check(
        "complexity-bounds",
        "C_LMC >= 1 and C_FS >= 3 for all states n <= 5; C_CR > 0 recorded (the printed \
         9-bound refers to a different variance convention and is not asserted)",
        || {
            let n_max = if level == Level::Full { 5 } else { 3 };
            let mut min_lmc = f64::MAX;
            let mut min_fs = f64::MAX;
            let mut min_cr = f64::MAX;
            for n in 1..=n_max {
                for l in 0..n {
                    for m in -(l as i32)..=(l as i32) {
                        let s = BoundState::new(n, l, m, 1.0).map_err(err_str)?;
                        let (rad, ang) = (s.radial(), s.angular());
                        let lmc = measures::lmc_complexity(&rad, &ang, spec).map_err(err_str)?;
                        let fs = measures::fisher_shannon_complexity(&rad, &ang, spec)
                            .map_err(err_str)?;
                        let cr =
                            measures::cramer_rao_complexity(&rad, &ang, spec).map_err(err_str)?;
                        min_lmc = min_lmc.min(lmc);
                        min_fs = min_fs.min(fs);
                        min_cr = min_cr.min(cr);
                    }
                }
            }
            if min_lmc >= 1.0 && min_fs >= 3.0 && min_cr > 0.0 {
                Ok(format!(
                    "min C_LMC {min_lmc:.6}, min C_FS {min_fs:.6}, min C_CR {min_cr:.6}"
                ))
            } else {
                Err(format!(
                    "bound violated: min C_LMC {min_lmc:.6}, min C_FS {min_fs:.6}, \
                     min C_CR {min_cr:.6}"
                ))
            }
        },
    )
}

fn figure1_quasicircular(level: Level, spec: &QuadratureSpec) -> CheckResult {
    run_check(
        "figure1-quasicircular",
        "C_FS of quasi-circular states (n, l=n-1, m=n-1) strictly increases for n = 1..8",
        || {
            let n_max = if level == Level::Full { 8 } else { 5 };
            let mut prev = f64::MIN;
            let mut values = Vec::new();
            for n in 1..=n_max {
                let v = analytic::fs_numeric_reference(n, n - 1, n as i32 - 1, spec)
                    .map_err(err_str)?;
                if v <= prev {
                    return Err(format!("C_FS({n}) = {v:.6} <= C_FS({}) = {prev:.6}", n - 1));
                }
                prev = v;
                values.push(format!("{v:.4}"));
            }
            Ok(format!("strictly increasing: {}", values.join(" < ")))
        },
    )
}

fn ddim_lmc(level: Level, spec: &QuadratureSpec) -> CheckResult {
    run_check(
        "ddim-lmc",
        "D-dimensional circular LMC: quadrature vs digamma closed form (rel 1e-6) for \
         n in {1,2,3}, D in {2..12}; n=1 column equals (e/2)^D to 1e-12; growth in D",
        || {
            let d_max = if level == Level::Full { 12 } else { 6 };
            let mut worst: f64 = 0.0;
            for n in 1..=3u32 {
                let mut prev = f64::MIN;
                for dim in 2..=d_max {
                    let analytic_v = ddim::lmc_circular_analytic(n, dim).map_err(err_str)?;
                    let state = CircularStateD::new(n, dim, 1.0).map_err(err_str)?;
                    let numeric = ddim::lmc_circular_numeric(&state, spec).map_err(err_str)?;
                    worst = worst.max(((numeric - analytic_v) / analytic_v).abs());
                    if dim >= 3 && analytic_v <= prev {
                        return Err(format!("no growth at n={n}, D={dim}"));
                    }
                    if dim >= 3 {
                        prev = analytic_v;
                    }
                }
            }
            let half_e = std::f64::consts::E / 2.0;
            for dim in 2..=d_max {
                let v = ddim::lmc_circular_analytic(1, dim).map_err(err_str)?;
                let exact = half_e.powi(dim as i32);
                if ((v - exact) / exact).abs() > 1e-12 {
                    return Err(format!("n=1 column deviates from (e/2)^D at D={dim}"));
                }
            }
            // (n=1, D=3) must coincide with the 3D ground-state LMC complexity.
            let d3 = ddim::lmc_circular_analytic(1, 3).map_err(err_str)?;
            let ground = analytic::lmc_numeric_reference(1, 0, 0, spec).map_err(err_str)?;
            let dev = ((d3 - ground) / ground).abs();
            if dev > 1e-6 {
                return Err(format!("(1,3) vs 3D ground LMC deviates by {dev:.2e}"));
            }
            if worst <= 1e-6 {
                Ok(format!("max rel dev numeric vs analytic {worst:.2e}"))
            } else {
                Err(format!("rel dev {worst:.2e} exceeds 1e-6"))
            }
        },
    )
}

/// Delegating wrapper that hides the exact Gauss-Laguerre hooks, so the check
/// below goes through the independent panel quadrature.
struct QuadratureOnly<'a>(&'a dyn RadialProfile);

impl RadialProfile for QuadratureOnly<'_> {
    fn density(&self, r: f64) -> f64 {
        self.0.density(r)
    }
    fn log_density(&self, r: f64) -> f64 {
        self.0.log_density(r)
    }
    fn density_deriv(&self, r: f64) -> f64 {
        self.0.density_deriv(r)
    }
    fn fisher_ratio(&self, r: f64) -> f64 {
        self.0.fisher_ratio(r)
    }
    fn interior_zeros(&self) -> Vec<f64> {
        self.0.interior_zeros()
    }
    fn support_radius(&self) -> Option<f64> {
        self.0.support_radius()
    }
    fn tail_rate(&self) -> f64 {
        self.0.tail_rate()
    }
    fn origin_singular(&self) -> bool {
        self.0.origin_singular()
    }
}

fn kleingordon_properties(level: Level, spec: &QuadratureSpec) -> CheckResult {
    run_check(
        "kleingordon-properties",
        "KG ground C_FS tends to 2e/pi^(1/3) as Z->0 (1e-3), grows on Z in {10..60}, unit \
         charge to 1e-8, supercritical rejection at Z alpha >= 1/2",
        || {
            let schr = analytic::ground_state_constants().fisher_shannon;
            let limit =
                kleingordon::fisher_shannon_ground(0.1, FINE_STRUCTURE, spec).map_err(err_str)?;
            if (limit - schr).abs() > 1e-3 {
                return Err(format!(
                    "Z->0 limit {limit:.6} deviates from {schr:.6} by {:.2e}",
                    (limit - schr).abs()
                ));
            }
            let zs: &[f64] = if level == Level::Full {
                &[10.0, 20.0, 30.0, 40.0, 50.0, 60.0]
            } else {
                &[10.0, 30.0, 60.0]
            };
            let mut prev = f64::MIN;
            for &z in zs {
                let v =
                    kleingordon::fisher_shannon_ground(z, FINE_STRUCTURE, spec).map_err(err_str)?;
                if v <= prev {
                    return Err(format!("C_FS not increasing at Z = {z}"));
                }
                prev = v;
            }
            let z_grid: &[f64] = if level == Level::Full {
                &[1.0, 10.0, 30.0, 60.0]
            } else {
                &[1.0, 30.0]
            };
            let mut worst_norm: f64 = 0.0;
            for &z in z_grid {
                for n in 1..=3u32 {
                    for l in 0..n {
                        let state =
                            PionicState::new(n, l, 0, z, FINE_STRUCTURE).map_err(err_str)?;
                        let profile = state.charge_profile().map_err(err_str)?;
                        let independent = QuadratureOnly(&profile);
                        let norm =
                            measures::radial_moment(&independent, 0, spec).map_err(err_str)?;
                        worst_norm = worst_norm.max((norm - 1.0).abs());
                    }
                }
            }
            if worst_norm > 1e-8 {
                return Err(format!("charge normalization off by {worst_norm:.2e}"));
            }
            let alpha = FINE_STRUCTURE;
            let z_crit = 0.5 / alpha;
            if PionicState::new(1, 0, 0, z_crit + 1e-9, alpha).is_ok() {
                return Err("supercritical construction was not rejected".to_string());
            }
            if PionicState::new(1, 0, 0, z_crit - 1e-6, alpha).is_err() {
                return Err("subcritical construction was wrongly rejected".to_string());
            }
            Ok(format!(
                "Z->0 dev {:.2e}; monotone on {} points; worst |charge-1| {worst_norm:.2e}; \
                 supercritical boundary enforced",
                (limit - schr).abs(),
                zs.len()
            ))
        },
    )
}

/// Deviations of numeric S(n,0,0) from the printed and from the corrected
/// asymptote, for the Rydberg criterion and its companion regression test.
pub fn rydberg_deviations(ns: &[u32], spec: &QuadratureSpec) -> Result<Vec<(u32, f64, f64)>> {
    let mut rows = Vec::with_capacity(ns.len());
    for &n in ns {
        let s = BoundState::new(n, 0, 0, 1.0)?;
        let numeric = measures::shannon_entropy(&s.radial(), &s.angular(), spec)?.total;
        rows.push((
            n,
            numeric - analytic::shannon_rydberg_ns(n),
            numeric - analytic::shannon_rydberg_ns_corrected(n),
        ));
    }
    Ok(rows)
}

fn rydberg_entropy(level: Level, spec: &QuadratureSpec) -> CheckResult {
    run_check(
        "rydberg-entropy",
        "S(n,0,0) approaches 6 ln n - ln 2 + 2 ln pi within 0.2, deviation shrinking in n",
        || {
            let ns: &[u32] = if level == Level::Full {
                &[30, 50, 100]
            } else {
                &[30, 50]
            };
            let rows = rydberg_deviations(ns, spec).map_err(err_str)?;
            let mut prev_dev = f64::MAX;
            let mut decreasing = true;
            let mut worst: f64 = 0.0;
            let mut details = Vec::new();
            for &(n, dev_printed, dev_corrected) in &rows {
                let dev = dev_printed.abs();
                decreasing &= dev < prev_dev;
                prev_dev = dev;
                worst = worst.max(dev);
                details.push(format!(
                    "n={n}: dev {dev:.4} (vs +ln2 constant: {:.4})",
                    dev_corrected.abs()
                ));
            }
            let summary = details.join("; ");
            if !decreasing {
                return Err(format!("deviation not decreasing: {summary}"));
            }
            if worst > 0.2 {
                // Documented defect: the printed constant is off by ln 4 (the
                // quadrature-forced asymptote has +ln 2), and even against the
                // corrected constant the ~1.21 n^(-1/3) transient exceeds 0.2
                // for n <= 100. See the rydberg-entropy-constant erratum.
                return Err(format!(
                    "deviation decreasing but above 0.2: {summary}; the printed constant \
                     disagrees with quadrature by ln 4 (erratum rydberg-entropy-constant)"
                ));
            }
            Ok(summary)
        },
    )
}

/// True when every check passed.
pub fn all_passed(results: &[CheckResult]) -> bool {
    results.iter().all(|r| r.passed)
}

/// Renders the pass/fail table (one line per criterion plus the errata
/// entries exercised).
pub fn render_table(results: &[CheckResult]) -> String {
    let mut out = String::new();
    for r in results {
        let status = if r.passed { "PASS" } else { "FAIL" };
        out.push_str(&format!("[{status}] {:<26} {}\n", r.id, r.detail));
    }
    out.push_str("errata ledger entries exercised:\n");
    for (e, by) in errata_exercised() {
        out.push_str(&format!("  - {:<22} via {by}\n", e.id));
    }
    out
}
