//! CSV / JSON emission. CSV output is deterministic: header always present,
//! `.` decimal separator from Rust's float formatting, no trailing
//! whitespace, fixed column order.

use qinfo_core::measures::MeasureReport;
use serde_json::{json, Value};

pub fn measure_csv(report: &MeasureReport) -> String {
    let mut out = String::from("name,numeric,analytic,abs_dev,rel_dev\n");
    for e in &report.entries {
        let opt = |v: Option<f64>| v.map(|x| x.to_string()).unwrap_or_default();
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            e.name,
            e.numeric,
            opt(e.analytic),
            opt(e.abs_dev),
            opt(e.rel_dev)
        ));
    }
    out
}

pub fn measure_json(state: Value, report: &MeasureReport) -> Value {
    let measures: Vec<Value> = report
        .entries
        .iter()
        .map(|e| {
            json!({
                "name": e.name,
                "numeric": e.numeric,
                "analytic": e.analytic,
                "abs_dev": e.abs_dev,
                "rel_dev": e.rel_dev,
            })
        })
        .collect();
    json!({ "state": state, "measures": measures })
}

/// Rows -> CSV with the given header; every cell formatted by `Display`.
pub fn rows_csv(header: &str, rows: &[Vec<String>]) -> String {
    let mut out = String::from(header);
    out.push('\n');
    for row in rows {
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

/// A small generic gnuplot script for a figure CSV.
pub fn plot_script(csv_name: &str, x_col: usize, y_cols: &[(usize, &str)]) -> String {
    let mut out = String::new();
    out.push_str("# Generic gnuplot companion; any plotting tool reading the CSV works.\n");
    out.push_str("set datafile separator ','\n");
    out.push_str("set key autotitle columnhead\n");
    let series: Vec<String> = y_cols
        .iter()
        .map(|(col, title)| {
            format!("'{csv_name}' using {x_col}:{col} with linespoints title '{title}'")
        })
        .collect();
    out.push_str(&format!("plot {}\n", series.join(", \\\n     ")));
    out
}
