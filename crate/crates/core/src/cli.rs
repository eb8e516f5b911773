//! Command-line entry points: `gin`, `check-cs`, `predict`, `classify`,
//! `kpoly`, and `psi`. JSON reports go to standard output (or `--output`);
//! human-readable notes go to standard error. Exit codes: 0 success or
//! CS_CERTIFIED, 10 NOT_CS, 20 INCONCLUSIVE or timeout, 30 inverse-psi on a
//! ideal outside the radical Borel-fixed class, 1 usage or input errors.

use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::algebra::{parse_polynomial, parse_t_monomials, RingConfig, TermOrder, DEFAULT_PRIME};
use crate::combinatorics::{
    classify_hypergraph, connected_subsets, parse_hypergraph_file, Graph, Hypergraph,
};
use crate::error::{Error, Result};
use crate::groebner::{EngineLimits, Ideal, MonomialIdeal};
use crate::hilbert::{k_polynomial_with, psi, psi_inverse, verify_numerator_identity, BoundedMonomialIdeal};
use crate::models::{binomial_edge_ideal, hypergraph_minor_ideal, row_graded_minor_ideal};
use crate::multigrading::{check_cs_with, multigraded_gin_with, CsStatus, CsVerdict};
use crate::report::{
    ideal_json, k_polynomial_json, ConfigEcho, Report, Timings,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NOT_CS: i32 = 10;
pub const EXIT_INCONCLUSIVE: i32 = 20;
pub const EXIT_NOT_BRAD: i32 = 30;

#[derive(Parser, Debug)]
#[command(
    name = "csgin",
    about = "Multigraded generic initial ideals and Cartwright-Sturmfels certification over prime fields",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Sample the multigraded generic initial ideal.
    Gin(GinArgs),
    /// Certify or refute the Cartwright-Sturmfels property.
    CheckCs(CheckCsArgs),
    /// Closed-form gin prediction for generalized binomial edge ideals.
    Predict(PredictArgs),
    /// Combinatorial CS classification of a hypergraph minor ideal.
    Classify(ClassifyArgs),
    /// K-polynomial (multigraded Hilbert numerator).
    Kpoly(KpolyArgs),
    /// The polarize-then-dualize bijection and its inverse.
    Psi(PsiArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum OrderArg {
    Lex,
    Degrevlex,
}

impl OrderArg {
    fn to_order(self) -> TermOrder {
        match self {
            OrderArg::Lex => TermOrder::lex(),
            OrderArg::Degrevlex => TermOrder::degrevlex(),
        }
    }

    fn name(self) -> &'static str {
        match self {
            OrderArg::Lex => "lex",
            OrderArg::Degrevlex => "degrevlex",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum GradingArg {
    Columns,
    Rows,
}

impl GradingArg {
    fn name(self) -> &'static str {
        match self {
            GradingArg::Columns => "columns",
            GradingArg::Rows => "rows",
        }
    }
}

#[derive(Args, Debug)]
pub struct RunArgs {
    /// Term order (variable priority is row-major in either case).
    #[arg(long, value_enum, default_value_t = OrderArg::Degrevlex)]
    pub order: OrderArg,
    /// Grade by matrix columns or rows (rows are realized by transposition).
    #[arg(long, value_enum, default_value_t = GradingArg::Columns)]
    pub grading: GradingArg,
    /// Independent generic coordinate changes to sample.
    #[arg(long, default_value_t = 3)]
    pub samples: usize,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    /// Field characteristic.
    #[arg(long, default_value_t = DEFAULT_PRIME)]
    pub prime: u64,
    /// Repeat the verdict over a second prime and report disagreement.
    #[arg(long)]
    pub cross_check_prime: Option<u64>,
    /// Write the JSON report here instead of standard output.
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Include wall-clock timings in the report (breaks byte-determinism).
    #[arg(long)]
    pub timings: bool,
    /// Per-command wall-clock budget; exceeding it exits 20.
    #[arg(long, default_value_t = 300)]
    pub timeout_secs: u64,
}

impl RunArgs {
    fn limits(&self) -> EngineLimits {
        EngineLimits::with_deadline(Instant::now() + Duration::from_secs(self.timeout_secs))
    }
}

#[derive(Args, Debug)]
pub struct InputArgs {
    /// Graph file (`n s` header with s = 2, one edge per line).
    #[arg(long)]
    pub graph: Option<PathBuf>,
    /// Hypergraph file (`n s` header, one edge per line).
    #[arg(long)]
    pub hypergraph: Option<PathBuf>,
    /// Generator expressions, one per line (needs ring flags).
    #[arg(long)]
    pub gens: Option<PathBuf>,
    /// Matrix rows (block size) for graph/hypergraph instances.
    #[arg(long)]
    pub rows: Option<usize>,
    /// Columns for a uniform ring (with --rows) when parsing --gens.
    #[arg(long)]
    pub cols: Option<usize>,
    /// Explicit per-column block sizes, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub blocks: Option<Vec<usize>>,
}

#[derive(Args, Debug)]
pub struct GinArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[command(flatten)]
    pub run: RunArgs,
}

#[derive(Args, Debug)]
pub struct CheckCsArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[command(flatten)]
    pub run: RunArgs,
}

#[derive(Args, Debug)]
pub struct PredictArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[command(flatten)]
    pub run: RunArgs,
    /// Also run the engine and assert ideal equality.
    #[arg(long)]
    pub verify: bool,
    /// Ignore --graph and sweep every labeled graph on `[N]`.
    #[arg(long)]
    pub all_graphs: Option<usize>,
}

#[derive(Args, Debug)]
pub struct ClassifyArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[command(flatten)]
    pub run: RunArgs,
    /// Cross-check decisive verdicts against check-cs.
    #[arg(long)]
    pub verify: bool,
}

#[derive(Args, Debug)]
pub struct KpolyArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[command(flatten)]
    pub run: RunArgs,
}

#[derive(Args, Debug)]
pub struct PsiArgs {
    /// Monomial ideal of T = K[y1..yn], e.g. "y1*y2^2, y3" (forward map).
    #[arg(long)]
    pub t_ideal: Option<String>,
    /// Monomial ideal of S, e.g. "`x[1,1]*x[1,2]`, `x[1,3]`" (with --inverse).
    #[arg(long)]
    pub s_ideal: Option<String>,
    /// Apply the inverse map instead.
    #[arg(long)]
    pub inverse: bool,
    #[command(flatten)]
    pub input: InputArgs,
    #[command(flatten)]
    pub run: RunArgs,
}

/// Executes a parsed command line: writes the report, returns the exit code.
pub fn run(cli: Cli) -> i32 {
    let started = Instant::now();
    let outcome = match &cli.command {
        Command::Gin(a) => cmd_gin(a),
        Command::CheckCs(a) => cmd_check_cs(a),
        Command::Predict(a) => cmd_predict(a),
        Command::Classify(a) => cmd_classify(a),
        Command::Kpoly(a) => cmd_kpoly(a),
        Command::Psi(a) => cmd_psi(a),
    };
    let run_args = match &cli.command {
        Command::Gin(a) => &a.run,
        Command::CheckCs(a) => &a.run,
        Command::Predict(a) => &a.run,
        Command::Classify(a) => &a.run,
        Command::Kpoly(a) => &a.run,
        Command::Psi(a) => &a.run,
    };
    match outcome {
        Ok((mut report, code)) => {
            if run_args.timings {
                report.timings = Some(Timings {
                    total_ms: started.elapsed().as_millis(),
                });
            }
            if let Err(e) = emit(&report, run_args.output.as_deref()) {
                eprintln!("error: {e}");
                return 1;
            }
            code
        }
        Err(Error::Timeout) => {
            eprintln!("error: computation exceeded {}s", run_args.timeout_secs);
            EXIT_INCONCLUSIVE
        }
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}

fn emit(report: &Report, output: Option<&Path>) -> Result<()> {
    let text = report.to_json();
    match output {
        Some(path) => std::fs::write(path, text + "\n")?,
        None => println!("{text}"),
    }
    Ok(())
}

fn read_file(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| {
        Error::InvalidParameter(format!("cannot read {}: {e}", path.display()))
    })
}

fn ring_from_flags(input: &InputArgs, prime: u64) -> Result<RingConfig> {
    if let Some(blocks) = &input.blocks {
        return RingConfig::new(blocks.clone(), prime);
    }
    match (input.cols, input.rows) {
        (Some(c), Some(r)) => RingConfig::uniform(c, r, prime),
        _ => Err(Error::InvalidParameter(
            "--gens needs --blocks or both --cols and --rows".into(),
        )),
    }
}

struct ResolvedIdeal {
    ideal: Ideal,
    input_desc: String,
    rows: Option<usize>,
}

fn resolve_ideal(input: &InputArgs, run: &RunArgs, prime: u64) -> Result<ResolvedIdeal> {
    let sources = [
        input.graph.is_some(),
        input.hypergraph.is_some(),
        input.gens.is_some(),
    ];
    if sources.iter().filter(|&&b| b).count() != 1 {
        return Err(Error::InvalidParameter(
            "give exactly one of --graph, --hypergraph, --gens".into(),
        ));
    }
    if let Some(path) = &input.graph {
        let h = parse_hypergraph_file(&read_file(path)?)?;
        if h.s() != 2 {
            return Err(Error::InvalidParameter(format!(
                "--graph expects uniformity 2, file has s = {}",
                h.s()
            )));
        }
        let rows = input.rows.ok_or_else(|| {
            Error::InvalidParameter("--graph instances need --rows".into())
        })?;
        let ideal = match run.grading {
            GradingArg::Columns => {
                binomial_edge_ideal(&h.as_graph().expect("s = 2"), rows, prime)?
            }
            GradingArg::Rows => row_graded_minor_ideal(&h, rows, prime)?,
        };
        return Ok(ResolvedIdeal {
            ideal,
            input_desc: path.display().to_string(),
            rows: Some(rows),
        });
    }
    if let Some(path) = &input.hypergraph {
        let h = parse_hypergraph_file(&read_file(path)?)?;
        let rows = input.rows.ok_or_else(|| {
            Error::InvalidParameter("--hypergraph instances need --rows".into())
        })?;
        let ideal = match run.grading {
            GradingArg::Columns => hypergraph_minor_ideal(&h, rows, prime)?,
            GradingArg::Rows => row_graded_minor_ideal(&h, rows, prime)?,
        };
        return Ok(ResolvedIdeal {
            ideal,
            input_desc: path.display().to_string(),
            rows: Some(rows),
        });
    }
    let path = input.gens.as_ref().expect("checked above");
    let ring = ring_from_flags(input, prime)?;
    let mut gens = Vec::new();
    for line in read_file(path)?.lines() {
        let line = match line.find('#') {
            Some(k) => &line[..k],
            None => line,
        };
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        gens.push(parse_polynomial(line, &ring)?);
    }
    Ok(ResolvedIdeal {
        ideal: Ideal::new(ring, gens),
        input_desc: path.display().to_string(),
        rows: input.rows,
    })
}

fn echo(run: &RunArgs, resolved: Option<&ResolvedIdeal>, blocks: Vec<usize>) -> ConfigEcho {
    ConfigEcho {
        blocks,
        prime: run.prime,
        order: run.order.name().to_string(),
        grading: run.grading.name().to_string(),
        samples: run.samples,
        seed: run.seed,
        cross_check_prime: run.cross_check_prime,
        input: resolved.map(|r| r.input_desc.clone()),
        rows: resolved.and_then(|r| r.rows),
    }
}

fn cmd_gin(args: &GinArgs) -> Result<(Report, i32)> {
    let resolved = resolve_ideal(&args.input, &args.run, args.run.prime)?;
    let order = args.run.order.to_order();
    let rep = multigraded_gin_with(
        &resolved.ideal,
        &order,
        args.run.samples,
        args.run.seed,
        &args.run.limits(),
    )?;
    let result = json!({
        "stable": rep.stable,
        "samples": rep.samples.len(),
        "generators": rep.gin.as_ref().map(ideal_json),
        "sample_generators": rep.samples.iter().map(ideal_json).collect::<Vec<_>>(),
    });
    let blocks = resolved.ideal.ring().blocks().to_vec();
    eprintln!(
        "gin: {} with {} minimal generators",
        if rep.stable { "stable" } else { "UNSTABLE" },
        rep.gin.as_ref().map_or(0, |g| g.gens().len())
    );
    let report = Report::new("gin", echo(&args.run, Some(&resolved), blocks), result);
    Ok((report, EXIT_OK))
}

fn verdict_json(verdict: &CsVerdict) -> serde_json::Value {
    json!({
        "status": verdict.status.name(),
        "stable": verdict.report.stable,
        "witness": verdict.witness.as_ref().map(|w| json!({
            "sample": verdict.witness_sample,
            "generators": ideal_json(w),
        })),
        "reason": verdict.reason.map(|r| r.name()),
    })
}

fn exit_for(status: CsStatus) -> i32 {
    match status {
        CsStatus::Certified => EXIT_OK,
        CsStatus::NotCs => EXIT_NOT_CS,
        CsStatus::Inconclusive => EXIT_INCONCLUSIVE,
    }
}

fn cmd_check_cs(args: &CheckCsArgs) -> Result<(Report, i32)> {
    let limits = args.run.limits();
    let resolved = resolve_ideal(&args.input, &args.run, args.run.prime)?;
    let order = args.run.order.to_order();
    let verdict = check_cs_with(
        &resolved.ideal,
        &order,
        args.run.samples,
        args.run.seed,
        &limits,
    )?;
    let mut result = verdict_json(&verdict);
    let mut exit = exit_for(verdict.status);
    if let Some(q) = args.run.cross_check_prime {
        let second = resolve_ideal(&args.input, &args.run, q)?;
        let v2 = check_cs_with(&second.ideal, &order, args.run.samples, args.run.seed, &limits)?;
        let agrees = v2.status == verdict.status;
        result["cross_check"] = json!({
            "prime": q,
            "status": v2.status.name(),
            "agrees": agrees,
        });
        if !agrees {
            exit = EXIT_INCONCLUSIVE;
        }
    }
    eprintln!("check-cs: {} (prime {})", verdict.status.name(), args.run.prime);
    let blocks = resolved.ideal.ring().blocks().to_vec();
    let report = Report::new("check-cs", echo(&args.run, Some(&resolved), blocks), result);
    Ok((report, exit))
}

fn graph_from_args(args: &InputArgs) -> Result<Graph> {
    let path = args
        .graph
        .as_ref()
        .ok_or_else(|| Error::InvalidParameter("predict needs --graph".into()))?;
    let h = parse_hypergraph_file(&read_file(path)?)?;
    h.as_graph().ok_or_else(|| {
        Error::InvalidParameter("predict expects a graph file (s = 2)".into())
    })
}

fn predict_one(
    g: &Graph,
    rows: usize,
    run: &RunArgs,
    verify: bool,
    limits: &EngineLimits,
) -> Result<(serde_json::Value, bool)> {
    let predicted = crate::combinatorics::predict_gin_generators(g, rows, run.prime)?;
    let mut matched = true;
    let verify_json = if verify {
        let ideal = binomial_edge_ideal(g, rows, run.prime)?;
        let rep = multigraded_gin_with(&ideal, &run.order.to_order(), run.samples, run.seed, limits)?;
        matched = rep.stable && rep.gin.as_ref() == Some(&predicted);
        Some(json!({
            "stable": rep.stable,
            "engine_generators": rep.gin.as_ref().map(ideal_json),
            "match": matched,
        }))
    } else {
        None
    };
    Ok((
        json!({
            "edges": g.edges().map(|(a, b)| vec![a, b]).collect::<Vec<_>>(),
            "generators": ideal_json(&predicted),
            "verify": verify_json,
        }),
        matched,
    ))
}

fn cmd_predict(args: &PredictArgs) -> Result<(Report, i32)> {
    let limits = args.run.limits();
    let rows = args
        .input
        .rows
        .ok_or_else(|| Error::InvalidParameter("predict needs --rows".into()))?;
    if let Some(n) = args.all_graphs {
        if n > 5 {
            return Err(Error::InvalidParameter(
                "--all-graphs supports n <= 5".into(),
            ));
        }
        let graphs = Graph::enumerate_all(n);
        let results: Result<Vec<(serde_json::Value, bool)>> = std::thread::scope(|scope| {
            let workers = std::thread::available_parallelism()
                .map(|p| p.get())
                .unwrap_or(1)
                .min(8);
            let mut handles = Vec::new();
            for w in 0..workers {
                let graphs = &graphs;
                let run = &args.run;
                let limits = &limits;
                handles.push(scope.spawn(move || {
                    let mut out = Vec::new();
                    for (k, g) in graphs.iter().enumerate() {
                        if k % workers == w {
                            out.push((k, predict_one(g, rows, run, args.verify, limits)));
                        }
                    }
                    out
                }));
            }
            let mut merged: Vec<Option<(serde_json::Value, bool)>> =
                (0..graphs.len()).map(|_| None).collect();
            for h in handles {
                for (k, r) in h.join().expect("worker panicked") {
                    merged[k] = Some(r?);
                }
            }
            Ok(merged.into_iter().map(|o| o.expect("all filled")).collect())
        });
        let results = results?;
        let all_match = results.iter().all(|(_, m)| *m);
        let result = json!({
            "all_graphs": n,
            "instances": results.iter().map(|(v, _)| v).collect::<Vec<_>>(),
            "all_match": all_match,
        });
        eprintln!(
            "predict --all-graphs {n}: {} instances, {}",
            results.len(),
            if all_match { "MATCH" } else { "MISMATCH" }
        );
        let config = ConfigEcho {
            blocks: vec![rows; n],
            prime: args.run.prime,
            order: args.run.order.name().to_string(),
            grading: args.run.grading.name().to_string(),
            samples: args.run.samples,
            seed: args.run.seed,
            cross_check_prime: None,
            input: None,
            rows: Some(rows),
        };
        let exit = if all_match { EXIT_OK } else { 1 };
        return Ok((Report::new("predict", config, result), exit));
    }

    let g = graph_from_args(&args.input)?;
    let (result, matched) = predict_one(&g, rows, &args.run, args.verify, &limits)?;
    eprintln!(
        "predict: {}{}",
        result["generators"].as_array().map_or(0, |a| a.len()),
        if args.verify {
            if matched {
                " generators, MATCH"
            } else {
                " generators, MISMATCH"
            }
        } else {
            " generators"
        }
    );
    let config = ConfigEcho {
        blocks: vec![rows; g.n()],
        prime: args.run.prime,
        order: args.run.order.name().to_string(),
        grading: args.run.grading.name().to_string(),
        samples: args.run.samples,
        seed: args.run.seed,
        cross_check_prime: None,
        input: args.input.graph.as_ref().map(|p| p.display().to_string()),
        rows: Some(rows),
    };
    let exit = if matched { EXIT_OK } else { 1 };
    Ok((Report::new("predict", config, result), exit))
}

fn cmd_classify(args: &ClassifyArgs) -> Result<(Report, i32)> {
    let limits = args.run.limits();
    let path = args
        .input
        .hypergraph
        .as_ref()
        .or(args.input.graph.as_ref())
        .ok_or_else(|| Error::InvalidParameter("classify needs --hypergraph".into()))?;
    let h = parse_hypergraph_file(&read_file(path)?)?;
    let rows = args
        .input
        .rows
        .ok_or_else(|| Error::InvalidParameter("classify needs --rows".into()))?;
    let classification = classify_hypergraph(&h, rows, args.run.prime)?;

    let mut concordant = true;
    let verify_json = if args.verify && classification.class.is_decisive() {
        let ideal = hypergraph_minor_ideal(&h, rows, args.run.prime)?;
        let verdict = check_cs_with(
            &ideal,
            &args.run.order.to_order(),
            args.run.samples,
            args.run.seed,
            &limits,
        )?;
        use crate::combinatorics::HypergraphClass;
        concordant = match classification.class {
            HypergraphClass::CsMaximalMinors | HypergraphClass::CsByForest => {
                verdict.status == CsStatus::Certified
            }
            HypergraphClass::NotCsByCycle => verdict.status == CsStatus::NotCs,
            HypergraphClass::Unknown => true,
        };
        Some(json!({
            "check_cs": verdict.status.name(),
            "concordant": concordant,
        }))
    } else {
        None
    };

    let result = json!({
        "class": classification.class.name(),
        "forest_steps": classification.forest.as_ref().map(|t| {
            t.steps
                .iter()
                .map(|s| json!({"cluster": s.cluster, "edges_removed": s.edges_removed}))
                .collect::<Vec<_>>()
        }),
        "cycle": classification.cycle.as_ref().map(|c| {
            c.iter()
                .map(|e| json!({"a": e.a + 1, "b": e.b + 1, "label": e.label}))
                .collect::<Vec<_>>()
        }),
        "regular_sequence": classification.regular_sequence.as_ref().map(|r| match r {
            crate::combinatorics::RegSeqCertificate::LeadCoprime => json!("lead_coprime"),
            crate::combinatorics::RegSeqCertificate::WindowChainPlusOne { windows, extra } => {
                json!({"window_starts": windows, "extra_edge": extra})
            }
        }),
        "verify": verify_json,
    });
    eprintln!("classify: {}", classification.class.name());
    let config = ConfigEcho {
        blocks: vec![rows; h.n()],
        prime: args.run.prime,
        order: args.run.order.name().to_string(),
        grading: args.run.grading.name().to_string(),
        samples: args.run.samples,
        seed: args.run.seed,
        cross_check_prime: None,
        input: Some(path.display().to_string()),
        rows: Some(rows),
    };
    let exit = if concordant { EXIT_OK } else { 1 };
    Ok((Report::new("classify", config, result), exit))
}

fn cmd_kpoly(args: &KpolyArgs) -> Result<(Report, i32)> {
    let limits = args.run.limits();
    let resolved = resolve_ideal(&args.input, &args.run, args.run.prime)?;
    let k = k_polynomial_with(&resolved.ideal, &args.run.order.to_order(), &limits)?;
    let result = json!({
        "k_polynomial": k_polynomial_json(&k),
    });
    eprintln!("kpoly: {} terms", k.terms().count());
    let blocks = resolved.ideal.ring().blocks().to_vec();
    let report = Report::new("kpoly", echo(&args.run, Some(&resolved), blocks), result);
    Ok((report, EXIT_OK))
}

fn cmd_psi(args: &PsiArgs) -> Result<(Report, i32)> {
    let ring = ring_from_flags(&args.input, args.run.prime)?;
    let config = ConfigEcho {
        blocks: ring.blocks().to_vec(),
        prime: args.run.prime,
        order: args.run.order.name().to_string(),
        grading: args.run.grading.name().to_string(),
        samples: args.run.samples,
        seed: args.run.seed,
        cross_check_prime: None,
        input: None,
        rows: None,
    };
    if args.inverse {
        let text = args.s_ideal.as_ref().ok_or_else(|| {
            Error::InvalidParameter("psi --inverse needs --s-ideal".into())
        })?;
        let mut gens = Vec::new();
        for chunk in split_outside_brackets(text) {
            let chunk = chunk.trim();
            if chunk.is_empty() {
                continue;
            }
            let p = parse_polynomial(chunk, &ring)?;
            if p.num_terms() != 1 || p.terms()[0].1 != 1 {
                return Err(Error::InvalidParameter(format!(
                    "--s-ideal expects plain monomials, got {chunk:?}"
                )));
            }
            gens.push(p.terms()[0].0.clone());
        }
        let j = MonomialIdeal::new(ring.clone(), gens);
        let pre = match psi_inverse(&j) {
            Ok(pre) => pre,
            Err(Error::NotRadicalBorelFixed(why)) => {
                eprintln!("psi: input is not radical Borel-fixed ({why})");
                let result = json!({
                    "direction": "inverse",
                    "error": format!("not radical Borel-fixed: {why}"),
                });
                return Ok((Report::new("psi", config, result), EXIT_NOT_BRAD));
            }
            Err(e) => return Err(e),
        };
        let back = psi(&pre, &ring)?;
        let roundtrip_ok = back == j;
        let numerator_identity_ok = verify_numerator_identity(&pre, &j);
        let result = json!({
            "direction": "inverse",
            "input_generators": ideal_json(&j),
            "preimage": pre.render(),
            "preimage_exponents": pre.gens(),
            "roundtrip_ok": roundtrip_ok,
            "numerator_identity_ok": numerator_identity_ok,
        });
        eprintln!("psi: inverse image {}", pre.render());
        return Ok((Report::new("psi", config, result), EXIT_OK));
    }

    let text = args.t_ideal.as_ref().ok_or_else(|| {
        Error::InvalidParameter("psi needs --t-ideal (or --inverse with --s-ideal)".into())
    })?;
    let exps = parse_t_monomials(text, ring.cols())?;
    let bounds: Vec<u32> = ring.blocks().iter().map(|&m| m as u32).collect();
    let ideal = BoundedMonomialIdeal::new(bounds, exps)?;
    let image = psi(&ideal, &ring)?;
    let back = psi_inverse(&image)?;
    let roundtrip_ok = back == ideal;
    let numerator_identity_ok = verify_numerator_identity(&ideal, &image);
    let result = json!({
        "direction": "forward",
        "preimage": ideal.render(),
        "preimage_exponents": ideal.gens(),
        "image_generators": ideal_json(&image),
        "roundtrip_ok": roundtrip_ok,
        "numerator_identity_ok": numerator_identity_ok,
    });
    eprintln!(
        "psi: image has {} generators, roundtrip {}",
        image.gens().len(),
        if roundtrip_ok { "OK" } else { "FAILED" }
    );
    Ok((Report::new("psi", config, result), EXIT_OK))
}

/// Splits a generator list on commas that sit outside variable brackets.
fn split_outside_brackets(text: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut current = String::new();
    for ch in text.chars() {
        match ch {
            '[' => {
                depth += 1;
                current.push(ch);
            }
            ']' => {
                depth = depth.saturating_sub(1);
                current.push(ch);
            }
            ',' if depth == 0 => {
                out.push(std::mem::take(&mut current));
            }
            _ => current.push(ch),
        }
    }
    out.push(current);
    out
}

/// Connected subsets as a reusable helper for scripted verification runs.
pub fn connected_family(g: &Graph) -> Result<Vec<Vec<usize>>> {
    Ok(connected_subsets(g)?
        .into_iter()
        .map(|s| s.into_iter().collect())
        .collect())
}

/// Parses a hypergraph fixture from disk.
pub fn load_hypergraph(path: &Path) -> Result<Hypergraph> {
    parse_hypergraph_file(&read_file(path)?)
}
