//! `smirnov`: randomized verification of extremal polynomial inequalities
//! for the modified Smirnov operator.
//!
//! Exit codes: 0 all pass, 1 counterexample or sharpness/link failure,
//! 2 usage or config error, 3 numerical non-convergence.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use smirnov_core::{
    links, reduction_check, registry, sharpness_scan, AlphaDomain, CampaignConfig, Complex64,
    ComplexPolynomial, Error, FamilyParams, OperatorContext, Tolerances, ZDomain,
};

#[derive(Parser)]
#[command(name = "smirnov", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the inequality registry and the reduction links.
    List,
    /// Run randomized verification campaigns.
    Verify(VerifyArgs),
    /// Probe extremal-family sharpness for an entry.
    Sharpness {
        /// Entry id, or "all".
        #[arg(long)]
        ineq: String,
    },
    /// Check reduction links on random instances.
    Reduce {
        /// Link id, or "all".
        #[arg(long, default_value = "all")]
        link: String,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Apply an operator to a polynomial given as a JSON literal
    /// `[[re,im],...]` (ascending powers) or a path to a file holding one.
    Eval(EvalArgs),
}

#[derive(Args)]
struct VerifyArgs {
    /// Entry id, comma-separated ids, or "all".
    #[arg(long)]
    ineq: Option<String>,
    #[arg(long)]
    trials: Option<u64>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    degree_min: Option<usize>,
    #[arg(long)]
    degree_max: Option<usize>,
    /// Requested relative tolerance for certified circle extrema.
    #[arg(long)]
    tol: Option<f64>,
    /// Write the JSON report here.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Write one CSV row per trial here.
    #[arg(long)]
    csv: Option<PathBuf>,
    /// Load a JSON campaign config; explicit flags override its fields.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Also run the sharpness grid per entry.
    #[arg(long)]
    sharpness: bool,
    /// Also run the reduction links sourced at each entry.
    #[arg(long)]
    reductions: bool,
}

#[derive(Args)]
struct EvalArgs {
    #[arg(long)]
    poly: String,
    /// One of: smirnov, smirnov-alpha, derivative, dilate,
    /// conjugate-reciprocal.
    #[arg(long)]
    op: String,
    /// Operator parameter as "re,im".
    #[arg(long)]
    a: Option<String>,
    /// Classical operator parameter as "re,im".
    #[arg(long)]
    alpha: Option<String>,
    /// Dilation factor.
    #[arg(long)]
    r: Option<f64>,
    /// Degree class; defaults to the polynomial degree.
    #[arg(long)]
    n: Option<usize>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(classify_error(&err))
        }
    }
}

fn classify_error(err: &Error) -> u8 {
    match err {
        Error::RootsUnconverged { .. }
        | Error::ExtremumTolUnreachable { .. }
        | Error::RetryExhausted { .. } => 3,
        Error::LinkMismatch { .. } => 1,
        _ => 2,
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::List => {
            list();
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify(args) => verify(args),
        Command::Sharpness { ineq } => sharpness(&ineq),
        Command::Reduce { link, trials, seed } => reduce(&link, trials, seed),
        Command::Eval(args) => {
            eval(args)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn list() {
    // Write through a fallible sink so a closed pipe (e.g. `| head`) ends
    // the listing quietly instead of panicking.
    use std::io::Write;
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let mut emit = move |line: String| {
        let _ = writeln!(out, "{line}");
    };
    emit(format!("inequality registry ({} entries):", registry().len()));
    for e in registry() {
        let mut params = Vec::new();
        if e.schema.uses_a {
            params.push("a");
        }
        match e.schema.alpha {
            AlphaDomain::UnitDisk => params.push("alpha"),
            AlphaDomain::OmegaOfZ => params.push("alpha in omega(|z|)"),
            AlphaDomain::NotUsed => {}
        }
        if e.schema.uses_beta {
            params.push("beta");
        }
        if e.schema.uses_r {
            params.push("R");
        }
        match e.schema.z {
            ZDomain::UnitCircle => params.push("z on circle"),
            ZDomain::ClosedExterior => params.push("z, |z| >= 1"),
            ZDomain::NotUsed => {}
        }
        if e.schema.uses_cap {
            params.push("k");
        }
        emit(format!(
            "  {:<18} {:<22} {:<9} [{}]  {}",
            e.id,
            format!("{:?}", e.hypothesis),
            match e.direction {
                smirnov_core::Direction::LhsLeqRhs => "lhs<=rhs",
                smirnov_core::Direction::LhsGeqRhs => "lhs>=rhs",
            },
            params.join(", "),
            e.citation,
        ));
    }
    emit(format!("\nreduction links ({}):", links().len()));
    for l in links() {
        emit(format!(
            "  {:<18} {} -> {}: {}",
            l.id, l.source, l.target, l.description
        ));
    }
}

fn verify(args: VerifyArgs) -> Result<ExitCode, Error> {
    let mut config = match &args.config {
        Some(path) => CampaignConfig::from_json(&std::fs::read_to_string(path)?)?,
        None => CampaignConfig::default(),
    };
    if let Some(ineq) = args.ineq {
        config.entries = ineq.split(',').map(|s| s.trim().to_string()).collect();
    }
    if let Some(trials) = args.trials {
        config.trials = trials;
    }
    if let Some(seed) = args.seed {
        config.seed = seed;
    }
    if let Some(d) = args.degree_min {
        config.degree_min = d;
    }
    if let Some(d) = args.degree_max {
        config.degree_max = d;
    }
    if let Some(tol) = args.tol {
        config.tolerances = Tolerances {
            extremum: tol,
            ..config.tolerances
        };
    }
    if let Some(out) = args.out {
        config.out = Some(out.display().to_string());
    }
    if let Some(csv) = args.csv {
        config.csv = Some(csv.display().to_string());
    }
    config.sharpness |= args.sharpness;
    config.reductions |= args.reductions;
    if config.degree_min < 1 || config.degree_min > config.degree_max {
        return Err(Error::Config("invalid degree range".into()));
    }

    let file = smirnov_core::run_campaign(&config)?;
    let mut failures = 0u64;
    let mut errors = 0u64;
    for r in &file.reports {
        println!(
            "{:<18} trials {:>6}  passes {:>6}  failures {:>3}  errors {:>3}  min slack {:>12}  ({:.2}s)",
            r.entry,
            r.trials,
            r.passes,
            r.failures,
            r.errors,
            r.min_slack.map_or("-".to_string(), |s| format!("{s:.3e}")),
            r.wall_time_secs,
        );
        if let Some(s) = &r.sharpness {
            println!(
                "  sharpness {}: min gap {:.3e} over {} grid points",
                s.family, s.min_gap, s.grid_points
            );
            if s.min_gap > 1e-6 {
                failures += 1;
            }
        }
        if let Some(links) = &r.reductions {
            for l in links {
                println!(
                    "  link {:<18} pass {}  mismatch {:.3e}{}",
                    l.link,
                    l.pass,
                    l.max_rel_mismatch,
                    l.min_order
                        .map_or(String::new(), |o| format!("  order {o:.2}")),
                );
                if !l.pass {
                    failures += 1;
                }
            }
        }
        if let Some(ce) = &r.counterexample {
            println!(
                "  counterexample after {} shrink steps: {}",
                ce.shrink_steps,
                serde_summary(&ce.instance)
            );
        }
        failures += r.failures;
        errors += r.errors;
    }
    if let Some(path) = &config.out {
        println!("report written to {path}");
    }
    if let Some(path) = &config.csv {
        println!("trial rows written to {path}");
    }
    Ok(if failures > 0 {
        ExitCode::from(1)
    } else if errors > 0 {
        ExitCode::from(3)
    } else {
        ExitCode::SUCCESS
    })
}

fn serde_summary(inst: &smirnov_core::InequalityInstance) -> String {
    format!(
        "p = {}, a = {:.4}+{:.4}i, alpha = {:.4}+{:.4}i, beta = {:.4}+{:.4}i, R = {:.4}, z = {:.4}+{:.4}i",
        inst.p.to_json_literal(),
        inst.a.re,
        inst.a.im,
        inst.alpha.re,
        inst.alpha.im,
        inst.beta.re,
        inst.beta.im,
        inst.r,
        inst.z.re,
        inst.z.im,
    )
}

fn sharpness(ineq: &str) -> Result<ExitCode, Error> {
    let ids: Vec<&str> = if ineq == "all" {
        registry().iter().map(|e| e.id).collect()
    } else {
        vec![ineq]
    };
    let mut worst = 0.0f64;
    for id in ids {
        let report = sharpness_scan(id, &FamilyParams::default())?;
        println!(
            "{:<18} family {:<24} min gap {:.3e}  max gap {:.3e}  ({} grid points)",
            report.entry, report.family, report.min_gap, report.max_gap, report.grid_points
        );
        worst = worst.max(report.min_gap);
    }
    Ok(if worst <= 1e-6 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn reduce(link: &str, trials: usize, seed: u64) -> Result<ExitCode, Error> {
    let ids: Vec<&str> = if link == "all" {
        links().iter().map(|l| l.id).collect()
    } else {
        vec![link]
    };
    for id in ids {
        let report = reduction_check(id, trials, seed)?;
        println!(
            "{:<18} trials {:>5}  max mismatch {:.3e}{}",
            report.link,
            report.trials,
            report.max_rel_mismatch,
            report
                .min_order
                .map_or(String::new(), |o| format!("  min order {o:.2}")),
        );
    }
    Ok(ExitCode::SUCCESS)
}

fn parse_complex(s: &str) -> Result<Complex64, Error> {
    let parts: Vec<&str> = s.split(',').collect();
    let parse = |t: &str| {
        t.trim()
            .parse::<f64>()
            .map_err(|_| Error::Config(format!("cannot parse `{t}` as a number")))
    };
    match parts.as_slice() {
        [re] => Ok(Complex64::new(parse(re)?, 0.0)),
        [re, im] => Ok(Complex64::new(parse(re)?, parse(im)?)),
        _ => Err(Error::Config(format!(
            "expected RE or RE,IM, got `{s}`"
        ))),
    }
}

fn load_poly(spec: &str) -> Result<ComplexPolynomial, Error> {
    let text = if spec.trim_start().starts_with('[') {
        spec.to_string()
    } else {
        std::fs::read_to_string(spec)?
    };
    ComplexPolynomial::from_json_literal(&text)
}

fn eval(args: EvalArgs) -> Result<(), Error> {
    let p = load_poly(&args.poly)?;
    let n = args.n.unwrap_or_else(|| p.degree());
    let result = match args.op.as_str() {
        "smirnov" => {
            let a = parse_complex(args.a.as_deref().unwrap_or("0,0"))?;
            let ctx = OperatorContext::new(a, n.max(1))?;
            smirnov_core::modified_smirnov(&p, &ctx)?
        }
        "smirnov-alpha" => {
            let alpha = parse_complex(args.alpha.as_deref().unwrap_or("0,0"))?;
            smirnov_core::smirnov_alpha(&p, alpha, n.max(1))?
        }
        "derivative" => p.derivative(),
        "dilate" => {
            let r = args
                .r
                .ok_or_else(|| Error::Config("dilate requires --r".into()))?;
            if r < 1.0 {
                return Err(Error::ParamOutOfDomain(format!("R = {r} must be >= 1")));
            }
            p.dilate(r)
        }
        "conjugate-reciprocal" => p.conjugate_reciprocal(n)?,
        other => {
            return Err(Error::Config(format!(
                "unknown op `{other}`; expected smirnov, smirnov-alpha, derivative, dilate, conjugate-reciprocal"
            )))
        }
    };
    println!("{}", result.to_json_literal());
    Ok(())
}
