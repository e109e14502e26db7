//! `qinfo` - information-theoretic measures of hydrogenic-type quantum
//! densities: per-state measure reports, figure-data scans, and the
//! verification suite.
//!
//! Exit codes: 0 ok, 2 invalid input, 3 numeric failure.

mod config;
mod output;

use clap::{Args, Parser, Subcommand, ValueEnum};
use config::Config;
use qinfo_core::analytic;
use qinfo_core::ddim::{self, CircularStateD};
use qinfo_core::hydrogenic::BoundState;
use qinfo_core::kleingordon::{self, PionicState};
use qinfo_core::measures::{self, MeasureEntry, MeasureKind, MeasureReport, QuadratureSpec};
use qinfo_core::verify::{self, Level};
use serde_json::json;
use std::io::Write;
use std::path::{Path, PathBuf};

#[derive(Parser)]
#[command(
    name = "qinfo",
    about = "Information-theoretic measures of hydrogenic, D-dimensional and Klein-Gordon densities",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Radial node count override.
    #[arg(long = "nodes-radial", global = true)]
    nodes_radial: Option<usize>,

    /// Angular node count override.
    #[arg(long = "nodes-angular", global = true)]
    nodes_angular: Option<usize>,

    /// Absolute tolerance override.
    #[arg(long = "tol", global = true)]
    tol: Option<f64>,
}

#[derive(Subcommand)]
enum Command {
    /// Compute measures of one state and report numeric vs analytic values.
    Measure(MeasureArgs),
    /// Emit figure data as CSV (fig1, fig2, fig3).
    Figure(FigureArgs),
    /// Run the verification suite and print a pass/fail table.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct MeasureArgs {
    /// Principal quantum number.
    #[arg(long)]
    n: u32,

    /// Orbital quantum number (hydrogenic / pionic states).
    #[arg(long, default_value_t = 0)]
    l: u32,

    /// Magnetic quantum number.
    #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
    m: i32,

    /// Nuclear charge.
    #[arg(long = "Z", default_value_t = 1.0)]
    z: f64,

    /// Dimension: selects a D-dimensional circular state (n, D, Z).
    #[arg(long)]
    dim: Option<u32>,

    /// Fine-structure constant: selects a Klein-Gordon (pionic) state.
    #[arg(long)]
    alpha: Option<f64>,

    /// Comma-separated measures, e.g. "v,f,s,cfs,w:q=2,r:k=-2,renyi:q=3".
    #[arg(long)]
    measures: Option<String>,

    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct FigureArgs {
    /// Which figure data to generate.
    #[arg(value_enum)]
    id: FigureId,

    /// Output format (figure data is CSV).
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,

    /// Output path; standard output when omitted.
    #[arg(long)]
    out: Option<PathBuf>,

    /// Also write a generic gnuplot script next to the CSV.
    #[arg(long = "plot-script")]
    plot_script: bool,
}

#[derive(Copy, Clone, ValueEnum)]
enum FigureId {
    /// Fisher-Shannon complexity of quasi-circular states vs n.
    Fig1,
    /// Klein-Gordon vs Schroedinger ground-state C_FS as a function of Z.
    Fig2,
    /// LMC complexity of D-dimensional circular states vs D.
    Fig3,
}

#[derive(Args)]
struct VerifyArgs {
    /// Breadth of the suite.
    #[arg(value_enum, default_value_t = VerifyLevel::Full)]
    level: VerifyLevel,
}

#[derive(Copy, Clone, ValueEnum)]
enum VerifyLevel {
    Fast,
    Full,
}

#[derive(Args)]
struct OutputArgs {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Output path; standard output when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Copy, Clone, PartialEq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

/// Failure carrying the process exit code.
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn invalid(message: impl Into<String>) -> Self {
        Self {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<qinfo_core::Error> for Failure {
    fn from(e: qinfo_core::Error) -> Self {
        let code = match e {
            qinfo_core::Error::Domain(_) => 2,
            qinfo_core::Error::Numeric { .. } | qinfo_core::Error::NoConvergence(_) => 3,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Self {
            code: 1,
            message: e.to_string(),
        }
    }
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            std::process::exit(f.code);
        }
    }
}

fn run(cli: Cli) -> Result<i32, Failure> {
    let config = Config::load().map_err(Failure::invalid)?;
    let mut spec = config.quadrature_spec();
    if let Some(n) = cli.nodes_radial {
        spec.radial_nodes = n;
    }
    if let Some(n) = cli.nodes_angular {
        spec.angular_nodes = n;
    }
    if let Some(t) = cli.tol {
        spec.tol = t;
    }
    spec.validate()?;

    match cli.command {
        Command::Measure(args) => run_measure(args, &spec),
        Command::Figure(args) => run_figure(args, &config, &spec),
        Command::Verify(args) => Ok(run_verify(args)),
    }
}

// ---------------------------------------------------------------------------
// measure
// ---------------------------------------------------------------------------

fn parse_measure_token(token: &str) -> Result<MeasureKind, Failure> {
    let parse_param = |tok: &str, prefix: &str| -> Result<f64, Failure> {
        tok.strip_prefix(prefix)
            .and_then(|v| v.parse().ok())
            .ok_or_else(|| Failure::invalid(format!("malformed measure `{tok}`")))
    };
    Ok(match token {
        "v" => MeasureKind::Variance,
        "f" => MeasureKind::Fisher,
        "s" => MeasureKind::Shannon,
        "d" => MeasureKind::Disequilibrium,
        "j" => MeasureKind::EntropyPower,
        "clmc" => MeasureKind::Lmc,
        "cfs" => MeasureKind::FisherShannon,
        "ccr" => MeasureKind::CramerRao,
        t if t.starts_with("w:q=") => {
            let q = parse_param(t, "w:q=")?;
            MeasureKind::EntropicMoment(q)
        }
        t if t.starts_with("renyi:q=") => {
            let q = parse_param(t, "renyi:q=")?;
            MeasureKind::Renyi(q)
        }
        t if t.starts_with("r:k=") => {
            let k = t
                .strip_prefix("r:k=")
                .and_then(|v| v.parse::<i32>().ok())
                .ok_or_else(|| Failure::invalid(format!("malformed measure `{t}`")))?;
            MeasureKind::RadialMoment(k)
        }
        other => {
            return Err(Failure::invalid(format!("unknown measure `{other}`")));
        }
    })
}

fn run_measure(args: MeasureArgs, spec: &QuadratureSpec) -> Result<i32, Failure> {
    if args.dim.is_some() && args.alpha.is_some() {
        return Err(Failure::invalid(
            "--dim and --alpha select different state families; pass at most one",
        ));
    }
    let (state_json, report) = if let Some(dim) = args.dim {
        circular_report(&args, dim, spec)?
    } else if let Some(alpha) = args.alpha {
        pionic_report(&args, alpha, spec)?
    } else {
        hydrogenic_report(&args, spec)?
    };

    let text = match args.out.format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&output::measure_json(state_json, &report))
                .expect("serializable");
            s.push('\n');
            s
        }
        Format::Csv => output::measure_csv(&report),
    };
    emit(&args.out.out, &text)?;
    Ok(0)
}

fn hydrogenic_report(
    args: &MeasureArgs,
    spec: &QuadratureSpec,
) -> Result<(serde_json::Value, MeasureReport), Failure> {
    let state = BoundState::new(args.n, args.l, args.m, args.z)?;
    let kinds = match &args.measures {
        None => vec![
            MeasureKind::RadialMoment(1),
            MeasureKind::Variance,
            MeasureKind::Fisher,
            MeasureKind::Shannon,
            MeasureKind::Disequilibrium,
            MeasureKind::EntropyPower,
            MeasureKind::Lmc,
            MeasureKind::FisherShannon,
            MeasureKind::CramerRao,
        ],
        Some(list) => list
            .split(',')
            .map(parse_measure_token)
            .collect::<Result<_, _>>()?,
    };
    let report = analytic::report_for(&state, &kinds, spec)?;
    let state_json = json!({
        "kind": "hydrogenic",
        "n": args.n, "l": args.l, "m": args.m, "z": args.z,
    });
    Ok((state_json, report))
}

fn circular_report(
    args: &MeasureArgs,
    dim: u32,
    spec: &QuadratureSpec,
) -> Result<(serde_json::Value, MeasureReport), Failure> {
    if let Some(list) = &args.measures {
        for token in list.split(',') {
            if token != "clmc" {
                return Err(Failure::invalid(format!(
                    "measure `{token}` is not available for D-dimensional circular states \
                     (only clmc)"
                )));
            }
        }
    }
    let state = CircularStateD::new(args.n, dim, args.z)?;
    let numeric = ddim::lmc_circular_numeric(&state, spec)?;
    let reference = ddim::lmc_circular_analytic(args.n, dim)?;
    let mut report = MeasureReport::default();
    report.push(MeasureEntry::with_analytic("clmc", numeric, reference));
    let state_json = json!({
        "kind": "circular_d",
        "n": args.n, "dim": dim, "z": args.z,
    });
    Ok((state_json, report))
}

fn pionic_report(
    args: &MeasureArgs,
    alpha: f64,
    spec: &QuadratureSpec,
) -> Result<(serde_json::Value, MeasureReport), Failure> {
    let state = PionicState::new(args.n, args.l, args.m, args.z, alpha)?;
    let tokens: Vec<String> = match &args.measures {
        Some(list) => list.split(',').map(str::to_string).collect(),
        None if args.l == 0 && args.m == 0 => {
            vec!["energy".into(), "s".into(), "cfs".into()]
        }
        None => vec!["energy".into(), "s".into()],
    };
    let profile = state.charge_profile()?;
    let angular = BoundState::new(args.n, args.l, args.m, args.z)?.angular();
    let mut report = MeasureReport::default();
    for token in &tokens {
        let entry = match token.as_str() {
            "energy" => MeasureEntry::numeric_only("energy", state.energy()),
            "s" => {
                let s = measures::shannon_entropy(&profile, &angular, spec)?.total;
                MeasureEntry::numeric_only("s", s)
            }
            "j" => {
                let s = measures::shannon_entropy(&profile, &angular, spec)?.total;
                MeasureEntry::numeric_only("j", measures::entropy_power_from(s))
            }
            "f" => {
                require_s_state(&state)?;
                let f = measures::fisher_radial_part(&profile, spec)?;
                MeasureEntry::numeric_only("f", f)
            }
            "cfs" => {
                require_s_state(&state)?;
                let cfs = kleingordon::fisher_shannon_of(&state, spec)?;
                MeasureEntry::numeric_only("cfs", cfs)
            }
            other => {
                return Err(Failure::invalid(format!(
                    "measure `{other}` is not available for pionic states \
                     (energy, s, j, f, cfs)"
                )));
            }
        };
        report.push(entry);
    }
    let state_json = json!({
        "kind": "pionic",
        "n": args.n, "l": args.l, "m": args.m, "z": args.z, "alpha": alpha,
    });
    Ok((state_json, report))
}

fn require_s_state(state: &PionicState) -> Result<(), Failure> {
    if state.l() != 0 || state.m() != 0 {
        return Err(Failure::invalid(
            "Fisher-based measures of pionic states need l = m = 0",
        ));
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// figure
// ---------------------------------------------------------------------------

fn run_figure(args: FigureArgs, config: &Config, spec: &QuadratureSpec) -> Result<i32, Failure> {
    if args.format != Format::Csv {
        return Err(Failure::invalid("figure data is CSV; pass --format csv"));
    }
    let (csv, x_col, y_cols): (String, usize, Vec<(usize, &str)>) = match args.id {
        FigureId::Fig1 => {
            let mut rows = Vec::new();
            for n in 1..=config.figures.n_max {
                let c_fs = analytic::fs_numeric_reference(n, n - 1, n as i32 - 1, spec)?;
                rows.push(vec![n.to_string(), c_fs.to_string()]);
            }
            (output::rows_csv("n,c_fs", &rows), 1, vec![(2, "C_FS")])
        }
        FigureId::Fig2 => {
            let scan = kleingordon::figure2_scan(
                &config.figures.z_values,
                config.figures.fine_structure,
                spec,
            )?;
            let rows: Vec<Vec<String>> = scan
                .iter()
                .map(|r| {
                    vec![
                        r.z.to_string(),
                        r.c_fs_kg.to_string(),
                        r.c_fs_schrodinger.to_string(),
                    ]
                })
                .collect();
            (
                output::rows_csv("Z,c_fs_kg,c_fs_schrodinger", &rows),
                1,
                vec![(2, "Klein-Gordon"), (3, "Schrodinger")],
            )
        }
        FigureId::Fig3 => {
            let scan = ddim::figure3_scan(&[1, 2, 3], config.figures.d_max)?;
            let rows: Vec<Vec<String>> = scan
                .iter()
                .map(|r| vec![r.n.to_string(), r.dim.to_string(), r.c_lmc.to_string()])
                .collect();
            (output::rows_csv("n,D,c_lmc", &rows), 2, vec![(3, "C_LMC")])
        }
    };
    emit(&args.out, &csv)?;
    if args.plot_script {
        let Some(path) = &args.out else {
            return Err(Failure::invalid(
                "--plot-script needs --out to name the CSV",
            ));
        };
        let csv_name = path
            .file_name()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_default();
        let script = output::plot_script(&csv_name, x_col, &y_cols);
        std::fs::write(path.with_extension("gnuplot"), script)?;
    }
    Ok(0)
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

fn run_verify(args: VerifyArgs) -> i32 {
    let level = match args.level {
        VerifyLevel::Fast => Level::Fast,
        VerifyLevel::Full => Level::Full,
    };
    let start = std::time::Instant::now();
    let results = verify::run_acceptance(level);
    print!("{}", verify::render_table(&results));
    println!("elapsed: {:.2?}", start.elapsed());
    if verify::all_passed(&results) {
        0
    } else {
        1
    }
}

fn emit(path: &Option<PathBuf>, text: &str) -> Result<(), Failure> {
    match path {
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
        Some(p) => {
            if let Some(parent) = Path::new(p).parent() {
                if !parent.as_os_str().is_empty() {
                    std::fs::create_dir_all(parent)?;
                }
            }
            std::fs::write(p, text)?;
            Ok(())
        }
    }
}
