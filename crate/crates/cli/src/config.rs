//! Runtime defaults: built-in values mirrored by the repository's
//! `qinfo.toml`, optionally replaced by the file named in `QINFO_CONFIG`,
//! then overridden by command-line flags.

use qinfo_core::measures::QuadratureSpec;
use serde::Deserialize;

#[derive(Debug, Clone, Deserialize, PartialEq)]
#[serde(default, deny_unknown_fields)]
pub struct QuadratureConfig {
    pub radial_nodes: usize,
    pub angular_nodes: usize,
    pub split_at_roots: bool,
    pub tolerance: f64,
    pub panel_order: usize,
    pub max_panel_depth: u32,
    pub fisher_origin_depth: u32,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        let spec = QuadratureSpec::default();
        Self {
            radial_nodes: spec.radial_nodes,
            angular_nodes: spec.angular_nodes,
            split_at_roots: spec.split_at_roots,
            tolerance: spec.tol,
            panel_order: spec.panel_order,
            max_panel_depth: spec.max_panel_depth,
            fisher_origin_depth: spec.fisher_origin_depth,
        }
    }
}

#[derive(Debug, Clone, Deserialize, PartialEq)]
#[serde(default, deny_unknown_fields)]
pub struct FigureConfig {
    /// fig1: quasi-circular states n = 1..n_max.
    pub n_max: u32,
    /// fig3: dimensions D = 2..d_max for n in {1, 2, 3}.
    pub d_max: u32,
    /// fig2: nuclear charges of the relativistic scan.
    pub z_values: Vec<f64>,
    /// fine-structure constant of the pionic states.
    pub fine_structure: f64,
}

impl Default for FigureConfig {
    fn default() -> Self {
        Self {
            n_max: 8,
            d_max: 12,
            z_values: (1..=16).map(|i| 4.0 * i as f64).collect(),
            fine_structure: qinfo_core::kleingordon::FINE_STRUCTURE,
        }
    }
}

#[derive(Debug, Clone, Default, Deserialize, PartialEq)]
#[serde(default, deny_unknown_fields)]
pub struct Config {
    pub quadrature: QuadratureConfig,
    pub figures: FigureConfig,
}

impl Config {
    /// Built-in defaults, replaced wholesale by the file in `QINFO_CONFIG`
    /// when that variable is set.
    pub fn load() -> Result<Self, String> {
        match std::env::var_os("QINFO_CONFIG") {
            None => Ok(Self::default()),
            Some(path) => {
                let text = std::fs::read_to_string(&path).map_err(|e| {
                    format!(
                        "cannot read QINFO_CONFIG file {}: {e}",
                        path.to_string_lossy()
                    )
                })?;
                toml::from_str(&text)
                    .map_err(|e| format!("invalid config {}: {e}", path.to_string_lossy()))
            }
        }
    }

    pub fn quadrature_spec(&self) -> QuadratureSpec {
        QuadratureSpec {
            radial_nodes: self.quadrature.radial_nodes,
            angular_nodes: self.quadrature.angular_nodes,
            split_at_roots: self.quadrature.split_at_roots,
            tol: self.quadrature.tolerance,
            panel_order: self.quadrature.panel_order,
            max_panel_depth: self.quadrature.max_panel_depth,
            fisher_origin_depth: self.quadrature.fisher_origin_depth,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shipped_config_file_matches_builtin_defaults() {
        let text = include_str!("../../../qinfo.toml");
        let parsed: Config = toml::from_str(text).expect("shipped qinfo.toml must parse");
        assert_eq!(parsed, Config::default());
    }
}
