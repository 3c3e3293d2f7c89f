//! `quantopia` — construct finite quantales, quantale-valued ordered sets and
//! topologies, and run the verification checks from the command line.
//!
//! Exit codes: 0 when every check passes, 1 when some check fails, 2 on
//! structural problems (unreadable or malformed files, unknown names,
//! enumeration caps).

mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;
use std::time::Instant;

use clap::{Parser, Subcommand};

use quantopia_core::error::Error;
use quantopia_core::flat::{flat_ideals, interpolation_check, is_f_domain, way_below};
use quantopia_core::interval::{
    alpha_r_coweight_checks, alpha_r_f_domain, d_eval, domain_condition, is_weight_alpha_l,
    scott_open_alpha_l, sierpinski_equals_scott, Grid, IntervalFun,
};
use quantopia_core::io;
use quantopia_core::module::QModule;
use quantopia_core::qorder::QOrderedSet;
use quantopia_core::qtop::{scott_topology, sierpinski, validate_topology, QTopSpace};
use quantopia_core::quantale::FiniteQuantale;
use quantopia_core::sober::{eta, is_spatial, open_set_module, sobrify, SobrietyVerdict};
use quantopia_core::suites;
use quantopia_core::tnorm::{TNorm, REAL_TOL};

use report::{CheckEntry, RunReport};

#[derive(Parser)]
#[command(
    name = "quantopia",
    version,
    about = "Verification engine for quantale-valued orders and topologies"
)]
struct Cli {
    /// Emit the report as JSON instead of aligned text
    #[arg(long, global = true)]
    json: bool,

    /// Enumeration cap on |Q|^|X|-style candidate counts
    /// (QUANTOPIA_CAP overrides the default)
    #[arg(long, global = true)]
    cap: Option<u64>,

    /// Grid resolution for checks on [0,1]
    #[arg(long, global = true, default_value_t = 101)]
    grid: usize,

    /// Comparison tolerance for grid checks (default 1.5/grid)
    #[arg(long, global = true)]
    tolerance: Option<f64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the axioms of a quantale, an ordered set or a space
    Validate {
        /// Quantale file (shorthand for --quantale <file>)
        file: Option<PathBuf>,
        #[arg(long)]
        quantale: Option<String>,
        /// alphaL, alphaR or an ordered-set file
        #[arg(long)]
        order: Option<String>,
        /// sierpinski or a space file
        #[arg(long)]
        space: Option<String>,
    },
    /// Integrality, frameness and idempotents of a quantale
    Props {
        #[arg(long)]
        quantale: String,
    },
    /// Enumerate the flat ideals of an ordered set
    FlatIdeals {
        #[arg(long)]
        order: String,
        #[arg(long)]
        quantale: Option<String>,
    },
    /// The way-below matrix and its laws
    Waybelow {
        #[arg(long)]
        order: String,
        #[arg(long)]
        quantale: Option<String>,
    },
    /// F-domain recognition with the down-set certificate
    Fdomain {
        #[arg(long)]
        order: String,
        #[arg(long)]
        quantale: Option<String>,
    },
    /// Build the Scott topology and check its axioms
    Scott {
        #[arg(long)]
        order: String,
        #[arg(long)]
        quantale: Option<String>,
        /// Additional check: sober
        #[arg(long)]
        check: Option<String>,
    },
    /// Sobriety of a space
    Sober {
        #[arg(long)]
        space: String,
        #[arg(long)]
        quantale: Option<String>,
    },
    /// The space of points of the open-set module
    Sobrify {
        #[arg(long)]
        space: String,
        #[arg(long)]
        quantale: Option<String>,
    },
    /// Spatiality of the open-set module of a space, or of (Q, &) itself
    Spatial {
        #[arg(long)]
        space: Option<String>,
        #[arg(long)]
        quantale: Option<String>,
    },
    /// Closed-form analytics on [0,1] under a continuous t-norm
    Tnorm {
        #[command(subcommand)]
        verb: TnormVerb,
    },
    /// Run a named verification suite, or all of them
    Suite {
        /// One of the suite names, or "all"
        name: String,
    },
}

#[derive(Subcommand)]
enum TnormVerb {
    /// Evaluate the smallest flat ideal d(x) on the grid
    D {
        #[arg(long)]
        tnorm: String,
        #[arg(long)]
        x: f64,
    },
    /// Scott-openness of a coweight of ([0,1], alphaL)
    ScottOpen {
        #[arg(long)]
        tnorm: String,
        /// Interval function file
        #[arg(long)]
        fun: PathBuf,
    },
    /// Whether ([0,1], alphaL) is a domain
    DomainCond {
        #[arg(long)]
        tnorm: String,
    },
    /// Whether the Sierpinski topology equals the Scott topology
    SierpinskiEq {
        #[arg(long)]
        tnorm: String,
    },
    /// alphaR domain decision, optionally checking a coweight
    #[command(name = "alphaR")]
    AlphaR {
        #[arg(long)]
        tnorm: String,
        #[arg(long)]
        fun: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cap = cli
        .cap
        .or_else(|| {
            std::env::var("QUANTOPIA_CAP")
                .ok()
                .and_then(|v| v.parse().ok())
        })
        .unwrap_or(quantopia_core::DEFAULT_CAP);
    let grid = match Grid::new(cli.grid) {
        Ok(g) => g,
        Err(e) => return structural(&e),
    };
    let tolerance = cli.tolerance.unwrap_or(grid.tol());

    match run(&cli.command, cap, grid, tolerance) {
        Ok(report) => {
            print!("{}", report.render(cli.json));
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => structural(&e),
    }
}

fn structural(e: &Error) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(2)
}

// ---------------------------------------------------------------------------
// instance loading

fn read_file(path: &str) -> Result<(String, String), Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Structure(format!("cannot read {path}: {e}")))?;
    let tag = format!("{path}#{}", io::digest(text.as_bytes()));
    Ok((text, tag))
}

fn load_quantale(spec: &str) -> Result<(Arc<FiniteQuantale>, String), Error> {
    if let Some(q) = io::builtin_quantale(spec) {
        let tag = format!("{spec}#{}", io::digest(spec.as_bytes()));
        return Ok((Arc::new(q), tag));
    }
    if spec.ends_with(".json") || std::path::Path::new(spec).exists() {
        let (text, tag) = read_file(spec)?;
        return Ok((Arc::new(io::quantale_from_json(&text)?), tag));
    }
    Err(Error::Structure(format!(
        "unknown quantale {spec:?}: not a builtin name and no such file"
    )))
}

fn load_order(order: &str, quantale: Option<&str>) -> Result<(QOrderedSet, Vec<String>), Error> {
    match order {
        "alphaL" | "alphaR" => {
            let name = quantale
                .ok_or_else(|| Error::Structure(format!("--order {order} needs --quantale")))?;
            let (q, tag) = load_quantale(name)?;
            let x = if order == "alphaL" {
                QOrderedSet::alpha_l(q)
            } else {
                QOrderedSet::alpha_r(q)
            };
            Ok((
                x,
                vec![format!("{order}#{}", io::digest(order.as_bytes())), tag],
            ))
        }
        path => {
            let (text, tag) = read_file(path)?;
            Ok((io::qorder_from_json(&text)?, vec![tag]))
        }
    }
}

fn load_space(
    space: &str,
    quantale: Option<&str>,
    cap: u64,
) -> Result<(QTopSpace, Vec<String>), Error> {
    match space {
        "sierpinski" => {
            let name = quantale.ok_or_else(|| {
                Error::Structure("--space sierpinski needs --quantale".to_string())
            })?;
            let (q, tag) = load_quantale(name)?;
            Ok((
                sierpinski(q, cap)?,
                vec![format!("sierpinski#{}", io::digest(b"sierpinski")), tag],
            ))
        }
        path => {
            let (text, tag) = read_file(path)?;
            Ok((io::space_from_json(&text, cap)?, vec![tag]))
        }
    }
}

fn load_tnorm(spec: &str) -> Result<(TNorm, String), Error> {
    if let Some(t) = TNorm::by_name(spec) {
        return Ok((t, format!("{spec}#{}", io::digest(spec.as_bytes()))));
    }
    if spec.ends_with(".json") || std::path::Path::new(spec).exists() {
        let (text, tag) = read_file(spec)?;
        return Ok((io::tnorm_from_json(&text)?, tag));
    }
    Err(Error::Structure(format!(
        "unknown t-norm {spec:?}: not a builtin name and no such file"
    )))
}

fn load_interval_fun(path: &std::path::Path) -> Result<(IntervalFun, String), Error> {
    let (text, tag) = read_file(&path.display().to_string())?;
    Ok((io::interval_fun_from_json(&text)?, tag))
}

// ---------------------------------------------------------------------------
// command dispatch

fn run(cmd: &Command, cap: u64, grid: Grid, tolerance: f64) -> Result<RunReport, Error> {
    match cmd {
        Command::Validate {
            file,
            quantale,
            order,
            space,
        } => cmd_validate(
            file.as_deref(),
            quantale.as_deref(),
            order.as_deref(),
            space.as_deref(),
            cap,
        ),
        Command::Props { quantale } => cmd_props(quantale),
        Command::FlatIdeals { order, quantale } => cmd_flat_ideals(order, quantale.as_deref(), cap),
        Command::Waybelow { order, quantale } => cmd_waybelow(order, quantale.as_deref(), cap),
        Command::Fdomain { order, quantale } => cmd_fdomain(order, quantale.as_deref(), cap),
        Command::Scott {
            order,
            quantale,
            check,
        } => cmd_scott(order, quantale.as_deref(), check.as_deref(), cap),
        Command::Sober { space, quantale } => cmd_sober(space, quantale.as_deref(), cap),
        Command::Sobrify { space, quantale } => cmd_sobrify(space, quantale.as_deref(), cap),
        Command::Spatial { space, quantale } => {
            cmd_spatial(space.as_deref(), quantale.as_deref(), cap)
        }
        Command::Tnorm { verb } => cmd_tnorm(verb, grid, tolerance),
        Command::Suite { name } => cmd_suite(name, cap),
    }
}

fn violations_witness(rep: &quantopia_core::ValidationReport) -> String {
    if rep.is_valid() {
        "all axioms hold".to_string()
    } else {
        rep.violations
            .iter()
            .map(|v| format!("{}: {}", v.law, v.witness))
            .collect::<Vec<_>>()
            .join("; ")
    }
}

fn cmd_validate(
    file: Option<&std::path::Path>,
    quantale: Option<&str>,
    order: Option<&str>,
    space: Option<&str>,
    cap: u64,
) -> Result<RunReport, Error> {
    let mut checks = Vec::new();
    let mut instances = Vec::new();
    let quantale_spec = match (file, quantale) {
        (Some(p), None) => Some(p.display().to_string()),
        (None, q) => q.map(str::to_string),
        (Some(_), Some(_)) => {
            return Err(Error::Structure(
                "give either a positional file or --quantale, not both".into(),
            ))
        }
    };
    if quantale_spec.is_none() && order.is_none() && space.is_none() {
        return Err(Error::Structure(
            "nothing to validate: give a file, --quantale, --order or --space".into(),
        ));
    }
    if let Some(spec) = &quantale_spec {
        let t0 = Instant::now();
        let (q, tag) = load_quantale(spec)?;
        let rep = q.validate();
        instances.push(tag);
        checks.push(
            CheckEntry::new("quantale-axioms", rep.is_valid())
                .witness(violations_witness(&rep))
                .runtime(t0.elapsed().as_millis() as u64),
        );
    }
    if let Some(o) = order {
        let t0 = Instant::now();
        let (x, tags) = load_order(o, quantale_spec.as_deref())?;
        let rep = x.validate();
        instances.extend(tags);
        checks.push(
            CheckEntry::new("order-axioms", rep.is_valid())
                .witness(violations_witness(&rep))
                .runtime(t0.elapsed().as_millis() as u64),
        );
    }
    if let Some(s) = space {
        let t0 = Instant::now();
        let (t, tags) = load_space(s, quantale_spec.as_deref(), cap)?;
        let rep = validate_topology(&t);
        instances.extend(tags);
        checks.push(
            CheckEntry::new("topology-axioms", rep.is_valid())
                .witness(violations_witness(&rep))
                .runtime(t0.elapsed().as_millis() as u64),
        );
    }
    instances.dedup();
    Ok(RunReport::new("validate", instances, checks))
}

fn cmd_props(quantale: &str) -> Result<RunReport, Error> {
    let t0 = Instant::now();
    let (q, tag) = load_quantale(quantale)?;
    let rep = q.validate();
    let mut checks =
        vec![CheckEntry::new("quantale-axioms", rep.is_valid()).witness(violations_witness(&rep))];
    if rep.is_valid() {
        let props = q.properties();
        let idem: Vec<&str> = props.idempotents.iter().map(|&e| q.name(e)).collect();
        checks.push(
            CheckEntry::new("properties", true)
                .witness(format!(
                    "integral={} frame={} idempotents={{{}}}",
                    props.is_integral,
                    props.is_frame,
                    idem.join(",")
                ))
                .runtime(t0.elapsed().as_millis() as u64),
        );
    }
    Ok(RunReport::new("props", vec![tag], checks))
}

fn cmd_flat_ideals(order: &str, quantale: Option<&str>, cap: u64) -> Result<RunReport, Error> {
    let t0 = Instant::now();
    let (x, instances) = load_order(order, quantale)?;
    let ideals = flat_ideals(&x, cap)?;
    let q = &x.quantale;
    let listed: Vec<String> = ideals.ideals.iter().map(|f| f.display(q)).collect();
    let representables = x.points().all(|a| ideals.index_of(&x.yoneda(a)).is_some());
    let elapsed = t0.elapsed().as_millis() as u64;
    let checks = vec![
        CheckEntry::new("flat-ideals", true)
            .witness(format!("{}: {}", ideals.len(), listed.join(" ")))
            .runtime(elapsed),
        CheckEntry::new("contains-representables", representables),
    ];
    Ok(RunReport::new("flat-ideals", instances, checks))
}

fn cmd_waybelow(order: &str, quantale: Option<&str>, cap: u64) -> Result<RunReport, Error> {
    let t0 = Instant::now();
    let (x, instances) = load_order(order, quantale)?;
    let w = way_below(&x, cap)?;
    let q = &x.quantale;
    let rows: Vec<String> = x
        .points()
        .map(|a| {
            let row: Vec<&str> = w.w[a].iter().map(|&v| q.name(v)).collect();
            format!("{}:[{}]", x.carrier[a], row.join(","))
        })
        .collect();
    let mut law_failure = None;
    for a in x.points() {
        for b in x.points() {
            if !q.leq(w.w[a][b], x.order[a][b]) {
                law_failure.get_or_insert(format!("w({a},{b}) ≰ X({a},{b})"));
            }
            for c in x.points() {
                if !q.leq(q.mul(w.w[b][c], x.order[a][b]), w.w[a][c])
                    || !q.leq(q.mul(x.order[c][a], w.w[b][c]), w.w[b][a])
                {
                    law_failure.get_or_insert(format!("composition law at ({a},{b},{c})"));
                }
            }
        }
    }
    let elapsed = t0.elapsed().as_millis() as u64;
    let checks = vec![
        CheckEntry::new("way-below-matrix", true)
            .witness(rows.join(" "))
            .runtime(elapsed),
        CheckEntry::new("way-below-laws", law_failure.is_none())
            .witness(law_failure.unwrap_or_else(|| "bounded by X and compatible with it".into())),
    ];
    Ok(RunReport::new("waybelow", instances, checks))
}

fn cmd_fdomain(order: &str, quantale: Option<&str>, cap: u64) -> Result<RunReport, Error> {
    let t0 = Instant::now();
    let (x, instances) = load_order(order, quantale)?;
    let rep = is_f_domain(&x, cap)?;
    let q = &x.quantale;
    let mut checks = vec![
        CheckEntry::new("separated", rep.separated),
        CheckEntry::new("f-cocomplete", rep.f_cocomplete),
        CheckEntry::new("down-sets-flat-with-sup", rep.failures.is_empty()).witness(
            if rep.failures.is_empty() {
                let downs: Vec<String> = x
                    .points()
                    .map(|p| format!("⇓{}={}", x.carrier[p], rep.down_sets[p].display(q)))
                    .collect();
                downs.join(" ")
            } else {
                rep.failures.join("; ")
            },
        ),
    ];
    if rep.holds {
        let witness = interpolation_check(&x, cap)?;
        checks.push(
            CheckEntry::new("interpolation", witness.is_none()).witness(match witness {
                None => "w(x,y) = ⋁ w(z,y) & w(x,z) everywhere".to_string(),
                Some((a, b)) => format!("fails at ({}, {})", x.carrier[a], x.carrier[b]),
            }),
        );
    }
    checks.push(CheckEntry::new("f-domain", rep.holds).runtime(t0.elapsed().as_millis() as u64));
    Ok(RunReport::new("fdomain", instances, checks))
}

fn cmd_scott(
    order: &str,
    quantale: Option<&str>,
    check: Option<&str>,
    cap: u64,
) -> Result<RunReport, Error> {
    let t0 = Instant::now();
    let (x, instances) = load_order(order, quantale)?;
    let scott = scott_topology(&x, cap)?;
    let axioms = validate_topology(&scott.space);
    let mut checks = vec![CheckEntry::new("scott-axioms", axioms.is_valid())
        .witness(format!(
            "{} opens; {}",
            scott.space.opens.len(),
            violations_witness(&axioms)
        ))
        .runtime(t0.elapsed().as_millis() as u64)];

    let ideals = flat_ideals(&x, cap)?;
    let mut equality_failure = None;
    for psi in &scott.space.opens {
        for phi in &ideals.ideals {
            if let Some(s) = x.weight_sup(phi) {
                if psi.0[s] != quantopia_core::flat::pitchfork(&x, phi, psi)? {
                    equality_failure.get_or_insert(format!(
                        "ψ(sup φ) ≠ φ ⋔ ψ at ψ={} φ={}",
                        psi.display(&x.quantale),
                        phi.display(&x.quantale)
                    ));
                }
            }
        }
    }
    checks.push(
        CheckEntry::new("open-pitchfork-equality", equality_failure.is_none())
            .witness(equality_failure.unwrap_or_else(|| "ψ(sup φ) = φ ⋔ ψ on every pair".into())),
    );

    match check {
        None => {}
        Some("sober") => {
            let t1 = Instant::now();
            let cert = eta(&scott.space, cap)?;
            checks.push(
                CheckEntry::new("sober", cert.is_sober())
                    .witness(verdict_witness(&scott.space, &cert.verdict))
                    .runtime(t1.elapsed().as_millis() as u64),
            );
        }
        Some(other) => {
            return Err(Error::Structure(format!(
                "unknown --check {other:?}; supported: sober"
            )))
        }
    }
    Ok(RunReport::new("scott", instances, checks))
}

fn verdict_witness(t: &QTopSpace, verdict: &SobrietyVerdict) -> String {
    match verdict {
        SobrietyVerdict::Sober => {
            "every point of the open-set module is a unique evaluation".into()
        }
        SobrietyVerdict::NotT0 { x, y } => {
            format!(
                "not T0: {} and {} agree on every open",
                t.carrier[*x], t.carrier[*y]
            )
        }
        SobrietyVerdict::MissingPoint(p) => {
            let vals: Vec<&str> = p.values.iter().map(|&v| t.quantale.name(v)).collect();
            format!("unrealized module point [{}]", vals.join(","))
        }
    }
}

fn cmd_sober(space: &str, quantale: Option<&str>, cap: u64) -> Result<RunReport, Error> {
    let t0 = Instant::now();
    let (t, instances) = load_space(space, quantale, cap)?;
    let cert = eta(&t, cap)?;
    let checks = vec![CheckEntry::new("sober", cert.is_sober())
        .witness(verdict_witness(&t, &cert.verdict))
        .runtime(t0.elapsed().as_millis() as u64)];
    Ok(RunReport::new("sober", instances, checks))
}

fn cmd_sobrify(space: &str, quantale: Option<&str>, cap: u64) -> Result<RunReport, Error> {
    let t0 = Instant::now();
    let (t, instances) = load_space(space, quantale, cap)?;
    let sob = sobrify(&t, cap)?;
    let sober = quantopia_core::sober::is_sober(&sob, cap)?;
    let elapsed = t0.elapsed().as_millis() as u64;
    let checks = vec![
        CheckEntry::new("sobrify", true)
            .witness(format!(
                "{} points, {} opens (input: {} points, {} opens)",
                sob.len(),
                sob.opens.len(),
                t.len(),
                t.opens.len()
            ))
            .runtime(elapsed),
        CheckEntry::new("sobrification-sober", sober),
    ];
    Ok(RunReport::new("sobrify", instances, checks))
}

fn cmd_spatial(space: Option<&str>, quantale: Option<&str>, cap: u64) -> Result<RunReport, Error> {
    let t0 = Instant::now();
    let (module, instances, what) = match (space, quantale) {
        (Some(s), q) => {
            let (t, tags) = load_space(s, q, cap)?;
            (open_set_module(&t)?, tags, "open-set module")
        }
        (None, Some(qn)) => {
            let (q, tag) = load_quantale(qn)?;
            (QModule::self_module(q), vec![tag], "self module")
        }
        (None, None) => {
            return Err(Error::Structure(
                "spatial needs --space or --quantale".into(),
            ))
        }
    };
    let spatial = is_spatial(&module, cap)?;
    let checks = vec![CheckEntry::new("spatial", spatial)
        .witness(format!("{what} with {} elements", module.len()))
        .runtime(t0.elapsed().as_millis() as u64)];
    Ok(RunReport::new("spatial", instances, checks))
}

fn cmd_tnorm(verb: &TnormVerb, grid: Grid, tolerance: f64) -> Result<RunReport, Error> {
    match verb {
        TnormVerb::D { tnorm, x } => {
            if !(0.0..=1.0).contains(x) {
                return Err(Error::Domain(format!("{x} is outside [0,1]")));
            }
            let t0 = Instant::now();
            let (t, tag) = load_tnorm(tnorm)?;
            let v: Vec<f64> = grid.points().map(|s| d_eval(&t, *x, s)).collect();
            // d(x) must be a weight of ([0,1], α_L) on the grid
            let weight = is_weight_alpha_l(&t, &v, &grid);
            let inhabited = v.iter().cloned().fold(0.0f64, f64::max) >= 1.0 - tolerance;
            let elapsed = t0.elapsed().as_millis() as u64;
            let checks = vec![
                CheckEntry::new("d-values", true)
                    .witness(format!(
                        "d({x})(0)={:.6} d({x})(1/2)={:.6} d({x})(1)={:.6} on {} points",
                        v[0],
                        v[(grid.n - 1) / 2],
                        v[grid.n - 1],
                        grid.n
                    ))
                    .runtime(elapsed),
                CheckEntry::new("d-is-weight", weight).tolerance(tolerance),
                CheckEntry::new("d-inhabited", inhabited).tolerance(tolerance),
            ];
            Ok(RunReport::new("tnorm d", vec![tag], checks))
        }
        TnormVerb::ScottOpen { tnorm, fun } => {
            let t0 = Instant::now();
            let (t, tag) = load_tnorm(tnorm)?;
            let (f, ftag) = load_interval_fun(fun)?;
            let check = match scott_open_alpha_l(&t, &f, &grid) {
                Ok(open) => CheckEntry::new("scott-open", open)
                    .witness(format!("criterion evaluated on {} grid points", grid.n))
                    .tolerance(REAL_TOL),
                Err(Error::Precondition(msg)) => CheckEntry::new("scott-open", false).witness(msg),
                Err(e) => return Err(e),
            };
            let checks = vec![check.runtime(t0.elapsed().as_millis() as u64)];
            Ok(RunReport::new("tnorm scott-open", vec![tag, ftag], checks))
        }
        TnormVerb::DomainCond { tnorm } => {
            let t0 = Instant::now();
            let (t, tag) = load_tnorm(tnorm)?;
            let holds = domain_condition(&t);
            let checks = vec![CheckEntry::new("domain-condition", holds)
                .witness(if holds {
                    "every Łukasiewicz piece starts at 0; ([0,1], αL) is an F-domain".into()
                } else {
                    "some Łukasiewicz piece starts above 0; ([0,1], αL) is not an F-domain"
                        .to_string()
                })
                .runtime(t0.elapsed().as_millis() as u64)];
            Ok(RunReport::new("tnorm domain-cond", vec![tag], checks))
        }
        TnormVerb::SierpinskiEq { tnorm } => {
            let t0 = Instant::now();
            let (t, tag) = load_tnorm(tnorm)?;
            let holds = sierpinski_equals_scott(&t);
            let checks = vec![CheckEntry::new("sierpinski-equals-scott", holds)
                .witness(if holds {
                    "the t-norm is minimum".into()
                } else {
                    "a non-idempotent element yields a Scott open outside the Sierpiński family"
                        .to_string()
                })
                .runtime(t0.elapsed().as_millis() as u64)];
            Ok(RunReport::new("tnorm sierpinski-eq", vec![tag], checks))
        }
        TnormVerb::AlphaR { tnorm, fun } => {
            let t0 = Instant::now();
            let (t, tag) = load_tnorm(tnorm)?;
            let mut instances = vec![tag];
            let holds = alpha_r_f_domain(&t);
            let mut checks = vec![
                CheckEntry::new("alpha-r-f-domain", holds).witness(if holds {
                    "Archimedean: ([0,1], αR) is an F-domain and its Scott space is sober"
                        .to_string()
                } else {
                    "not Archimedean: ([0,1], αR) is not an F-domain".into()
                }),
            ];
            if let Some(path) = fun {
                let (f, ftag) = load_interval_fun(path)?;
                instances.push(ftag);
                let entry = match alpha_r_coweight_checks(&t, &f, &grid) {
                    Ok(rep) => {
                        let mut notes = Vec::new();
                        if let Some(w) = &rep.floor_violation {
                            notes.push(w.clone());
                        }
                        if let Some(w) = &rep.idempotent_violation {
                            notes.push(w.clone());
                        }
                        if let Some(w) = &rep.bound_violation {
                            notes.push(w.clone());
                        }
                        if let Some(b) = rep.bound {
                            notes.push(format!("nontrivial idempotent bound {b}"));
                        }
                        CheckEntry::new("coweight-checks", rep.passes()).witness(
                            if notes.is_empty() {
                                "necessary conditions hold".to_string()
                            } else {
                                notes.join("; ")
                            },
                        )
                    }
                    Err(Error::Precondition(msg)) => {
                        CheckEntry::new("coweight-checks", false).witness(msg)
                    }
                    Err(e) => return Err(e),
                };
                checks.push(entry);
            }
            if let Some(first) = checks.first_mut() {
                first.runtime_ms = t0.elapsed().as_millis() as u64;
            }
            Ok(RunReport::new("tnorm alphaR", instances, checks))
        }
    }
}

fn cmd_suite(name: &str, cap: u64) -> Result<RunReport, Error> {
    let results = if name == "all" {
        suites::run_all(cap)?
    } else {
        vec![suites::run_suite(name, cap)?]
    };
    let mut checks = Vec::new();
    for result in &results {
        for c in &result.checks {
            let mut entry = CheckEntry::new(format!("{}/{}", result.suite, c.name), c.passed)
                .witness(c.detail.clone())
                .runtime(c.runtime_ms);
            if let Some(t) = c.tolerance {
                entry = entry.tolerance(t);
            }
            checks.push(entry);
        }
    }
    let tag = format!("{name}#{}", io::digest(name.as_bytes()));
    Ok(RunReport::new(format!("suite {name}"), vec![tag], checks))
}
