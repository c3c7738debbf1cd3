use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use korobov::{
    approximate, c_tau_q, classify, count_box_oracle, curse_witness, fit_exponent, h_norm,
    info_complexity_upper_bound, info_complexity_with_budget, l2_error, parse_config,
    riemann_zeta, worst_case_error, ComplexityQuery, Error as KorobovError, FourierPoly,
    KorobovParams, SmoothnessSpec, SpectrumIterator, Trivalent, WeightSpec, FRONTIER_CAP,
    NODE_BUDGET,
};
use num_complex::Complex64;
use rayon::prelude::*;
use serde_json::{json, Map, Value};

#[derive(Parser)]
#[command(
    name = "korobov",
    version,
    about = "Worst-case L2 approximation on weighted Korobov spaces: spectra, \
             information complexity, optimal algorithms, tractability"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Worker threads for independent grid points; results never depend on it
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
}

#[derive(Args)]
struct ParamArgs {
    /// Weight sequence: const:C | poly:A | geom:Q | list:G1,G2,...
    #[arg(long)]
    gamma: Option<String>,

    /// Smoothness sequence: const:A | logaffine:BASE,SLOPE | list:A1,A2,...
    #[arg(long)]
    alpha: Option<String>,

    /// key=value file providing gamma and alpha; flags override its entries
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Args)]
struct OutputArgs {
    /// Output format; grids default to csv, single results to json
    #[arg(long, value_enum)]
    format: Option<Format>,

    /// Write output to a file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate the leading eigenpairs in spectral order
    Spectrum {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        d: usize,
        /// How many eigenpairs to emit
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = FRONTIER_CAP)]
        frontier_cap: usize,
        #[command(flatten)]
        output: OutputArgs,
    },

    /// Exact information complexity on a point or grid
    Complexity {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, conflicts_with = "d_grid")]
        d: Option<usize>,
        #[arg(long, value_delimiter = ',')]
        d_grid: Option<Vec<usize>>,
        #[arg(long, conflicts_with = "eps_grid")]
        eps: Option<f64>,
        #[arg(long, value_delimiter = ',')]
        eps_grid: Option<Vec<f64>>,
        /// Also report the closed-form upper bound at this tau
        #[arg(long)]
        tau: Option<f64>,
        #[arg(long, default_value_t = NODE_BUDGET)]
        node_budget: u64,
        #[command(flatten)]
        output: OutputArgs,
    },

    /// Tractability classification from the weight decay exponent
    Classify {
        #[command(flatten)]
        params: ParamArgs,
        #[command(flatten)]
        output: OutputArgs,
    },

    /// Least-squares estimate of the complexity exponent at fixed dimension
    Fit {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        d: usize,
        /// Strictly decreasing accuracies, at least four
        #[arg(long, value_delimiter = ',', required = true)]
        eps_grid: Vec<f64>,
        #[command(flatten)]
        output: OutputArgs,
    },

    /// Curse-of-dimensionality evidence along a dimension grid
    Curse {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, value_delimiter = ',', required = true)]
        d_grid: Vec<usize>,
        #[arg(long)]
        eps: f64,
        #[arg(long, default_value_t = NODE_BUDGET)]
        node_budget: u64,
        #[command(flatten)]
        output: OutputArgs,
    },

    /// Truncate a coefficient file with the optimal rank-n algorithm
    Approx {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        n: usize,
        /// JSON file mapping "k1,k2,..." to [re, im]
        #[arg(long)]
        input: PathBuf,
        #[command(flatten)]
        output: OutputArgs,
    },

    /// Riemann zeta with a certified error bound
    Zeta {
        #[arg(long)]
        s: f64,
        #[command(flatten)]
        output: OutputArgs,
    },

    /// Tractability constant sup_d of the normalized eigenvalue power sum
    CTauQ {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        tau: f64,
        #[arg(long, default_value_t = 0.0)]
        q: f64,
        #[arg(long, default_value_t = 50)]
        d_max: usize,
        #[command(flatten)]
        output: OutputArgs,
    },

    /// Independent exhaustive box count for cross-checking
    BoxCount {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        eps: f64,
        #[arg(long)]
        kmax: u32,
        #[command(flatten)]
        output: OutputArgs,
    },
}

struct CliError {
    code: i32,
    message: String,
}

impl CliError {
    fn validation(message: impl Into<String>) -> Self {
        CliError {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<KorobovError> for CliError {
    fn from(e: KorobovError) -> Self {
        let code = match e {
            KorobovError::ResourceLimit { .. } => 3,
            _ => 2,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::validation(format!("io error: {e}"))
    }
}

fn main() {
    let cli = Cli::parse();
    if let Err(e) = run(cli) {
        eprintln!("error: {}", e.message);
        std::process::exit(e.code);
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    if cli.threads == 0 {
        return Err(CliError::validation("--threads must be at least 1"));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.threads)
        .build()
        .map_err(|e| CliError::validation(format!("thread pool: {e}")))?;

    let (text, out) = match cli.command {
        Command::Spectrum {
            params,
            d,
            n,
            frontier_cap,
            output,
        } => (run_spectrum(&params, d, n, frontier_cap, &output)?, output),
        Command::Complexity {
            params,
            d,
            d_grid,
            eps,
            eps_grid,
            tau,
            node_budget,
            output,
        } => (
            run_complexity(
                &pool,
                &params,
                d,
                d_grid,
                eps,
                eps_grid,
                tau,
                node_budget,
                &output,
            )?,
            output,
        ),
        Command::Classify { params, output } => (run_classify(&params, &output)?, output),
        Command::Fit {
            params,
            d,
            eps_grid,
            output,
        } => (run_fit(&params, d, &eps_grid, &output)?, output),
        Command::Curse {
            params,
            d_grid,
            eps,
            node_budget,
            output,
        } => (
            run_curse(&pool, &params, &d_grid, eps, node_budget, &output)?,
            output,
        ),
        Command::Approx {
            params,
            d,
            n,
            input,
            output,
        } => (run_approx(&params, d, n, &input, &output)?, output),
        Command::Zeta { s, output } => (run_zeta(s, &output)?, output),
        Command::CTauQ {
            params,
            tau,
            q,
            d_max,
            output,
        } => (run_c_tau_q(&params, tau, q, d_max, &output)?, output),
        Command::BoxCount {
            params,
            d,
            eps,
            kmax,
            output,
        } => (run_box_count(&params, d, eps, kmax, &output)?, output),
    };

    match &out.out {
        Some(path) => fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

/// Resolves gamma/alpha from flags and/or a config file, flags winning.
fn resolve_params(args: &ParamArgs) -> Result<KorobovParams, CliError> {
    let from_file = match &args.config {
        Some(path) => {
            let text = fs::read_to_string(path)?;
            Some(parse_config(&text)?)
        }
        None => None,
    };
    let gamma: WeightSpec = match (&args.gamma, &from_file) {
        (Some(flag), _) => flag.parse()?,
        (None, Some(file)) => file.weights().clone(),
        (None, None) => return Err(CliError::validation("missing --gamma (or --config)")),
    };
    let alpha: SmoothnessSpec = match (&args.alpha, &from_file) {
        (Some(flag), _) => flag.parse()?,
        (None, Some(file)) => file.smoothness().clone(),
        (None, None) => return Err(CliError::validation("missing --alpha (or --config)")),
    };
    Ok(KorobovParams::new(gamma, alpha)?)
}

fn gamma_flag(p: &KorobovParams) -> String {
    match p.weights() {
        WeightSpec::Constant(c) => format!("const:{c}"),
        WeightSpec::PolyDecay(a) => format!("poly:{a}"),
        WeightSpec::Geometric(q) => format!("geom:{q}"),
        WeightSpec::Explicit(list) => format!("list:{}", join_displayed(list, ",")),
    }
}

fn alpha_flag(p: &KorobovParams) -> String {
    match p.smoothness() {
        SmoothnessSpec::Constant(a) => format!("const:{a}"),
        SmoothnessSpec::LogAffine { base, slope } => format!("logaffine:{base},{slope}"),
        SmoothnessSpec::Explicit(list) => format!("list:{}", join_displayed(list, ",")),
    }
}

fn join_displayed<T: std::fmt::Display>(items: &[T], sep: &str) -> String {
    items
        .iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(sep)
}

/// 17-significant-digit scientific notation used for every floating CSV cell.
fn cell(x: f64) -> String {
    format!("{x:.16e}")
}

/// JSON value for a possibly infinite quantity; infinities become "inf".
fn json_num(x: f64) -> Value {
    if x.is_finite() {
        json!(x)
    } else if x > 0.0 {
        json!("inf")
    } else {
        json!("-inf")
    }
}

fn trivalent_str(t: Trivalent) -> &'static str {
    match t {
        Trivalent::Yes => "yes",
        Trivalent::No => "no",
        Trivalent::EmpiricalOnly => "empirical_only",
    }
}

fn config_header(pairs: &[(&str, String)]) -> String {
    let mut s = String::new();
    for (key, value) in pairs {
        s.push_str(&format!("# {key}={value}\n"));
    }
    s
}

fn config_json(pairs: &[(&str, String)]) -> Value {
    let mut map = Map::new();
    for (key, value) in pairs {
        map.insert((*key).to_string(), json!(value));
    }
    Value::Object(map)
}

fn render_json(value: &Value) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("json rendering");
    text.push('\n');
    text
}

fn format_or(output: &OutputArgs, default: Format) -> Format {
    output.format.unwrap_or(default)
}

fn run_spectrum(
    params: &ParamArgs,
    d: usize,
    n: usize,
    frontier_cap: usize,
    output: &OutputArgs,
) -> Result<String, CliError> {
    let p = resolve_params(params)?;
    let entries: Vec<_> = SpectrumIterator::new(&p, d)
        .with_frontier_cap(frontier_cap)
        .take(n)
        .collect::<Result<_, _>>()?;
    let config = [
        ("gamma", gamma_flag(&p)),
        ("alpha", alpha_flag(&p)),
        ("d", d.to_string()),
        ("n", n.to_string()),
        ("frontier_cap", frontier_cap.to_string()),
    ];
    match format_or(output, Format::Csv) {
        Format::Csv => {
            let mut s = config_header(&config);
            s.push_str("rank,index,value\n");
            for (rank, entry) in entries.iter().enumerate() {
                s.push_str(&format!(
                    "{},{},{}\n",
                    rank + 1,
                    join_displayed(&entry.index, ";"),
                    cell(entry.value)
                ));
            }
            Ok(s)
        }
        Format::Json => {
            let list: Vec<Value> = entries
                .iter()
                .map(|e| json!({ "index": e.index, "value": e.value }))
                .collect();
            Ok(render_json(&json!({
                "config": config_json(&config),
                "entries": list,
            })))
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn run_complexity(
    pool: &rayon::ThreadPool,
    params: &ParamArgs,
    d: Option<usize>,
    d_grid: Option<Vec<usize>>,
    eps: Option<f64>,
    eps_grid: Option<Vec<f64>>,
    tau: Option<f64>,
    node_budget: u64,
    output: &OutputArgs,
) -> Result<String, CliError> {
    let p = resolve_params(params)?;
    let single = d.is_some() && eps.is_some();
    let ds: Vec<usize> = match (d, d_grid) {
        (Some(d), None) => vec![d],
        (None, Some(grid)) if !grid.is_empty() => grid,
        _ => return Err(CliError::validation("provide exactly one of --d or --d-grid")),
    };
    let epsilons: Vec<f64> = match (eps, eps_grid) {
        (Some(e), None) => vec![e],
        (None, Some(grid)) if !grid.is_empty() => grid,
        _ => {
            return Err(CliError::validation(
                "provide exactly one of --eps or --eps-grid",
            ))
        }
    };

    let cells: Vec<(usize, f64)> = ds
        .iter()
        .flat_map(|&dd| epsilons.iter().map(move |&e| (dd, e)))
        .collect();
    let results: Vec<Result<(u64, u64, Option<f64>), KorobovError>> = pool.install(|| {
        cells
            .par_iter()
            .map(|&(dd, e)| {
                let query = ComplexityQuery::new(p.clone(), dd, e)?;
                let r = info_complexity_with_budget(&query, node_budget)?;
                let bound = match tau {
                    Some(t) => Some(info_complexity_upper_bound(&query, t)?),
                    None => None,
                };
                Ok((r.count, r.nodes_visited, bound))
            })
            .collect()
    });

    let mut rows = Vec::with_capacity(cells.len());
    for (&(dd, e), result) in cells.iter().zip(results) {
        let (count, nodes, bound) = result?;
        rows.push((dd, e, count, nodes, bound));
    }

    let mut config = vec![("gamma", gamma_flag(&p)), ("alpha", alpha_flag(&p))];
    if single {
        config.push(("d", ds[0].to_string()));
        config.push(("eps", epsilons[0].to_string()));
    } else {
        config.push(("d_grid", join_displayed(&ds, ";")));
        config.push(("eps_grid", join_displayed(&epsilons, ";")));
    }
    if let Some(t) = tau {
        config.push(("tau", t.to_string()));
    }
    config.push(("node_budget", node_budget.to_string()));

    let default = if single { Format::Json } else { Format::Csv };
    match format_or(output, default) {
        Format::Json if single => {
            let (dd, e, count, nodes, bound) = rows[0];
            Ok(render_json(&json!({
                "config": config_json(&config),
                "d": dd,
                "epsilon": e,
                "count": count,
                "nodes_visited": nodes,
                "upper_bound": bound.map(json_num).unwrap_or(Value::Null),
            })))
        }
        Format::Json => {
            let list: Vec<Value> = rows
                .iter()
                .map(|&(dd, e, count, nodes, bound)| {
                    json!({
                        "d": dd,
                        "epsilon": e,
                        "count": count,
                        "nodes_visited": nodes,
                        "upper_bound": bound.map(json_num).unwrap_or(Value::Null),
                    })
                })
                .collect();
            Ok(render_json(&json!({
                "config": config_json(&config),
                "results": list,
            })))
        }
        Format::Csv => {
            let mut s = config_header(&config);
            if tau.is_some() {
                s.push_str("d,epsilon,count,nodes_visited,upper_bound\n");
            } else {
                s.push_str("d,epsilon,count,nodes_visited\n");
            }
            for (dd, e, count, nodes, bound) in rows {
                match bound {
                    Some(b) => s.push_str(&format!(
                        "{dd},{},{count},{nodes},{}\n",
                        cell(e),
                        cell(b)
                    )),
                    None => s.push_str(&format!("{dd},{},{count},{nodes}\n", cell(e))),
                }
            }
            Ok(s)
        }
    }
}

fn delta_json(p: &KorobovParams) -> Value {
    let delta = p.delta(None);
    json!({
        "value": json_num(delta.value),
        "exact": delta.exact,
        "window": delta.window.map(|(a, b)| json!([a, b])).unwrap_or(Value::Null),
    })
}

fn run_classify(params: &ParamArgs, output: &OutputArgs) -> Result<String, CliError> {
    let p = resolve_params(params)?;
    let report = classify(&p);
    let config = [("gamma", gamma_flag(&p)), ("alpha", alpha_flag(&p))];
    match format_or(output, Format::Json) {
        Format::Json => Ok(render_json(&json!({
            "config": config_json(&config),
            "delta": delta_json(&p),
            "strong_polynomial": trivalent_str(report.strong_polynomial),
            "polynomial": trivalent_str(report.polynomial),
            "p_str": report.p_str.map(json_num).unwrap_or(Value::Null),
            "curse": trivalent_str(report.curse),
            "weak_t1_gt_1": report.weak_t1_gt_1,
            "notes": report.notes,
        }))),
        Format::Csv => {
            let mut s = config_header(&config);
            s.push_str("delta,delta_exact,strong_polynomial,polynomial,p_str,curse,weak_t1_gt_1,notes\n");
            let p_str = report
                .p_str
                .map(|v| if v.is_finite() { cell(v) } else { "inf".to_string() })
                .unwrap_or_default();
            let delta_cell = if report.delta.value.is_finite() {
                cell(report.delta.value)
            } else {
                "inf".to_string()
            };
            s.push_str(&format!(
                "{delta_cell},{},{},{},{p_str},{},{},\"{}\"\n",
                report.delta.exact,
                trivalent_str(report.strong_polynomial),
                trivalent_str(report.polynomial),
                trivalent_str(report.curse),
                report.weak_t1_gt_1,
                report.notes.join("; "),
            ));
            Ok(s)
        }
    }
}

fn run_fit(
    params: &ParamArgs,
    d: usize,
    eps_grid: &[f64],
    output: &OutputArgs,
) -> Result<String, CliError> {
    let p = resolve_params(params)?;
    let fit = fit_exponent(&p, d, eps_grid)?;
    let config = [
        ("gamma", gamma_flag(&p)),
        ("alpha", alpha_flag(&p)),
        ("d", d.to_string()),
        ("eps_grid", join_displayed(eps_grid, ";")),
    ];
    match format_or(output, Format::Json) {
        Format::Json => {
            let points: Vec<Value> = fit
                .epsilons
                .iter()
                .zip(&fit.counts)
                .map(|(e, c)| json!({ "epsilon": e, "count": c }))
                .collect();
            Ok(render_json(&json!({
                "config": config_json(&config),
                "d": fit.d,
                "points": points,
                "slope": fit.slope,
                "intercept": fit.intercept,
                "residual": fit.residual,
            })))
        }
        Format::Csv => {
            let mut s = config_header(&config);
            s.push_str(&format!("# slope={}\n", cell(fit.slope)));
            s.push_str(&format!("# intercept={}\n", cell(fit.intercept)));
            s.push_str(&format!("# residual={}\n", cell(fit.residual)));
            s.push_str("epsilon,count\n");
            for (e, c) in fit.epsilons.iter().zip(&fit.counts) {
                s.push_str(&format!("{},{c}\n", cell(*e)));
            }
            Ok(s)
        }
    }
}

fn run_curse(
    pool: &rayon::ThreadPool,
    params: &ParamArgs,
    d_grid: &[usize],
    eps: f64,
    node_budget: u64,
    output: &OutputArgs,
) -> Result<String, CliError> {
    let p = resolve_params(params)?;
    let _ = node_budget;
    let witnesses: Vec<Result<korobov::CurseWitness, KorobovError>> = pool.install(|| {
        d_grid
            .par_iter()
            .map(|&d| curse_witness(&p, eps, d))
            .collect()
    });
    let mut rows = Vec::new();
    for (&d, witness) in d_grid.iter().zip(witnesses) {
        rows.push((d, witness?));
    }
    let config = [
        ("gamma", gamma_flag(&p)),
        ("alpha", alpha_flag(&p)),
        ("d_grid", join_displayed(d_grid, ";")),
        ("eps", eps.to_string()),
    ];
    match format_or(output, Format::Csv) {
        Format::Csv => {
            let mut s = config_header(&config);
            s.push_str("d,lower_bound,hypothesis_holds,exact_count\n");
            for (d, w) in rows {
                let count = w.exact_count.map(|c| c.to_string()).unwrap_or_default();
                s.push_str(&format!("{d},{},{},{count}\n", w.lower_bound, w.holds));
            }
            Ok(s)
        }
        Format::Json => {
            let list: Vec<Value> = rows
                .iter()
                .map(|(d, w)| {
                    json!({
                        "d": d,
                        "lower_bound": w.lower_bound.to_string(),
                        "hypothesis_holds": w.holds,
                        "exact_count": w.exact_count,
                    })
                })
                .collect();
            Ok(render_json(&json!({
                "config": config_json(&config),
                "results": list,
            })))
        }
    }
}

fn parse_coefficients(d: usize, text: &str) -> Result<FourierPoly, CliError> {
    let value: Value = serde_json::from_str(text)
        .map_err(|e| CliError::validation(format!("coefficient file: {e}")))?;
    let map = value
        .as_object()
        .ok_or_else(|| CliError::validation("coefficient file must be a JSON object"))?;
    let mut poly = FourierPoly::new(d);
    for (key, entry) in map {
        let index: Vec<i64> = key
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<i64>()
                    .map_err(|_| CliError::validation(format!("bad frequency {key:?}")))
            })
            .collect::<Result<_, _>>()?;
        let pair = entry
            .as_array()
            .filter(|a| a.len() == 2)
            .ok_or_else(|| CliError::validation(format!("coefficient {key:?} must be [re, im]")))?;
        let re = pair[0]
            .as_f64()
            .ok_or_else(|| CliError::validation(format!("coefficient {key:?}: re not a number")))?;
        let im = pair[1]
            .as_f64()
            .ok_or_else(|| CliError::validation(format!("coefficient {key:?}: im not a number")))?;
        poly.set(index, Complex64::new(re, im))?;
    }
    Ok(poly)
}

fn run_approx(
    params: &ParamArgs,
    d: usize,
    n: usize,
    input: &PathBuf,
    output: &OutputArgs,
) -> Result<String, CliError> {
    let p = resolve_params(params)?;
    let f = parse_coefficients(d, &fs::read_to_string(input)?)?;
    let truncated = approximate(&f, &p, n)?;
    let err = l2_error(&f, &truncated)?;
    let bound = worst_case_error(&p, d, n)?;
    let norm = h_norm(&f, &p)?;
    let config = [
        ("gamma", gamma_flag(&p)),
        ("alpha", alpha_flag(&p)),
        ("d", d.to_string()),
        ("n", n.to_string()),
        ("input", input.display().to_string()),
    ];
    match format_or(output, Format::Json) {
        Format::Json => {
            let mut kept = Map::new();
            for (index, c) in truncated.terms() {
                kept.insert(join_displayed(index, ","), json!([c.re, c.im]));
            }
            Ok(render_json(&json!({
                "config": config_json(&config),
                "input_support": f.support_size(),
                "kept_support": truncated.support_size(),
                "h_norm": json_num(norm),
                "l2_error": err,
                "worst_case_bound_unit_ball": bound,
                "coefficients": Value::Object(kept),
            })))
        }
        Format::Csv => {
            let mut s = config_header(&config);
            s.push_str(&format!("# input_support={}\n", f.support_size()));
            s.push_str(&format!("# kept_support={}\n", truncated.support_size()));
            s.push_str(&format!("# l2_error={}\n", cell(err)));
            s.push_str(&format!("# worst_case_bound_unit_ball={}\n", cell(bound)));
            s.push_str("index,re,im\n");
            for (index, c) in truncated.terms() {
                s.push_str(&format!(
                    "{},{},{}\n",
                    join_displayed(index, ";"),
                    cell(c.re),
                    cell(c.im)
                ));
            }
            Ok(s)
        }
    }
}

fn run_zeta(s: f64, output: &OutputArgs) -> Result<String, CliError> {
    let z = riemann_zeta(s)?;
    match format_or(output, Format::Json) {
        Format::Json => Ok(render_json(&json!({
            "s": z.s,
            "value": z.value,
            "abs_error_bound": z.abs_error_bound,
        }))),
        Format::Csv => {
            let mut out = String::from("s,value,abs_error_bound\n");
            out.push_str(&format!(
                "{},{},{}\n",
                cell(z.s),
                cell(z.value),
                cell(z.abs_error_bound)
            ));
            Ok(out)
        }
    }
}

fn run_c_tau_q(
    params: &ParamArgs,
    tau: f64,
    q: f64,
    d_max: usize,
    output: &OutputArgs,
) -> Result<String, CliError> {
    let p = resolve_params(params)?;
    let report = c_tau_q(&p, tau, q, d_max)?;
    let config = [
        ("gamma", gamma_flag(&p)),
        ("alpha", alpha_flag(&p)),
        ("tau", tau.to_string()),
        ("q", q.to_string()),
        ("d_max", d_max.to_string()),
    ];
    match format_or(output, Format::Json) {
        Format::Json => Ok(render_json(&json!({
            "config": config_json(&config),
            "value": json_num(report.value),
            "attained_d": report.attained_d,
            "still_increasing": report.still_increasing,
        }))),
        Format::Csv => {
            let mut s = config_header(&config);
            s.push_str("value,attained_d,still_increasing\n");
            s.push_str(&format!(
                "{},{},{}\n",
                cell(report.value),
                report.attained_d,
                report.still_increasing
            ));
            Ok(s)
        }
    }
}

fn run_box_count(
    params: &ParamArgs,
    d: usize,
    eps: f64,
    kmax: u32,
    output: &OutputArgs,
) -> Result<String, CliError> {
    let p = resolve_params(params)?;
    let query = ComplexityQuery::new(p.clone(), d, eps)?;
    let count = count_box_oracle(&query, kmax)?;
    let config = [
        ("gamma", gamma_flag(&p)),
        ("alpha", alpha_flag(&p)),
        ("d", d.to_string()),
        ("eps", eps.to_string()),
        ("kmax", kmax.to_string()),
    ];
    match format_or(output, Format::Json) {
        Format::Json => Ok(render_json(&json!({
            "config": config_json(&config),
            "count": count,
        }))),
        Format::Csv => {
            let mut s = config_header(&config);
            s.push_str("count\n");
            s.push_str(&format!("{count}\n"));
            Ok(s)
        }
    }
}
