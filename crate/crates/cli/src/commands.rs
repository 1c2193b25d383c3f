use std::fmt;
use std::io::Read;

use indseq::analysis::{self, ShapeReport};
use indseq::counting::{
    brute_force_sequence_with, gab_sequence, generalized_sequence, sequence_by_recurrence_with,
    CountingLimits,
};
use indseq::graph::{
    build_gab, build_generalized, random_tree, GabConstruction, GeneralizedConstruction, Graph,
};
use indseq::graph6::{parse_graph6, serialize_graph6};
use indseq::sequence::IndependenceSequence;
use serde::Serialize;

use crate::{Cli, Command, Family, GraphInput, Method, OutputFormat};

pub enum CliError {
    Usage(String),
    Lib(indseq::Error),
    Mismatch(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Lib(e) => match e {
                indseq::Error::InvalidParameters(_) | indseq::Error::Graph6Parse { .. } => 1,
                indseq::Error::Graph6TooLarge { .. }
                | indseq::Error::SizeCapExceeded { .. }
                | indseq::Error::MemoBudgetExceeded { .. } => 2,
            },
            CliError::Mismatch(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) | CliError::Mismatch(msg) => f.write_str(msg),
            CliError::Lib(e) => write!(f, "{e}"),
        }
    }
}

impl From<indseq::Error> for CliError {
    fn from(e: indseq::Error) -> Self {
        CliError::Lib(e)
    }
}

pub fn run(cli: Cli) -> Result<(), CliError> {
    let limits = cli.limits();
    let format = cli.output;
    match cli.command {
        Command::Construct { family } => cmd_construct(family, format),
        Command::Sequence { input, only_t } => cmd_sequence(input, only_t, format, &limits),
        Command::Analyze { input } => cmd_analyze(input, format, &limits),
        Command::ReproducePaper => cmd_reproduce(format),
        Command::Search { a, b_offset } => cmd_search(&a, b_offset, format),
        Command::Trees { n, count, seed } => cmd_trees(n, count, seed, format, &limits),
    }
}

fn print_json<T: Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string(value).expect("output structs serialize")
    );
}

fn reject_csv(format: OutputFormat, command: &str) -> Result<(), CliError> {
    if format == OutputFormat::Csv {
        return Err(CliError::Usage(format!(
            "csv output is not available for {command}; use json or text"
        )));
    }
    Ok(())
}

// ---- argument parsing helpers ----

fn parse_u64(text: &str, what: &str) -> Result<u64, CliError> {
    text.trim().parse().map_err(|_| {
        CliError::Usage(format!(
            "{what}: expected an unsigned integer, got {text:?}"
        ))
    })
}

fn parse_u64_list(text: &str, what: &str) -> Result<Vec<u64>, CliError> {
    text.split(',').map(|p| parse_u64(p, what)).collect()
}

fn parse_gab_params(text: &str) -> Result<GabConstruction, CliError> {
    let parts = parse_u64_list(text, "--gab")?;
    if parts.len() != 2 {
        return Err(CliError::Usage(format!(
            "--gab expects two comma-separated integers, got {text:?}"
        )));
    }
    Ok(GabConstruction::new(parts[0], parts[1])?)
}

fn parse_range(text: &str) -> Result<(u64, u64), CliError> {
    let err = || {
        CliError::Usage(format!(
            "--a expects an inclusive range LO..HI, got {text:?}"
        ))
    };
    let (lo, hi) = text.split_once("..").ok_or_else(err)?;
    let lo = lo.trim().parse().map_err(|_| err())?;
    let hi = hi.trim().parse().map_err(|_| err())?;
    if lo < 1 || hi < lo {
        return Err(err());
    }
    Ok((lo, hi))
}

fn resolve_parts(
    a: u64,
    parts: &str,
    k: Option<usize>,
) -> Result<GeneralizedConstruction, CliError> {
    if parts == "from-balance" {
        let k = k.ok_or_else(|| CliError::Usage("--parts from-balance needs --k".into()))?;
        return Ok(analysis::balance_generalized(a, k)?);
    }
    if k.is_some() {
        return Err(CliError::Usage(
            "--k only applies together with --parts from-balance".into(),
        ));
    }
    let sizes = parse_u64_list(parts, "--parts")?;
    Ok(GeneralizedConstruction::new(a, sizes)?)
}

enum ResolvedInput {
    Gab(GabConstruction),
    Generalized(GeneralizedConstruction),
    Graph(Graph),
}

impl ResolvedInput {
    fn vertex_count(&self) -> u64 {
        match self {
            ResolvedInput::Gab(p) => p.vertex_count(),
            ResolvedInput::Generalized(p) => p.vertex_count(),
            ResolvedInput::Graph(g) => g.n() as u64,
        }
    }
}

fn resolve_input(input: &GraphInput) -> Result<ResolvedInput, CliError> {
    let sources = [
        input.gab.is_some(),
        input.generalized.is_some(),
        input.graph6.is_some(),
    ];
    if sources.iter().filter(|&&s| s).count() != 1 {
        return Err(CliError::Usage(
            "give exactly one input: --gab, --generalized, or --graph6".into(),
        ));
    }
    if let Some(gab) = &input.gab {
        return Ok(ResolvedInput::Gab(parse_gab_params(gab)?));
    }
    if let Some(a) = input.generalized {
        let parts = input
            .parts
            .as_deref()
            .ok_or_else(|| CliError::Usage("--generalized needs --parts".into()))?;
        return Ok(ResolvedInput::Generalized(resolve_parts(
            a, parts, input.k,
        )?));
    }
    let source = input.graph6.as_deref().expect("one source is set");
    let text = if source == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| CliError::Usage(format!("reading stdin: {e}")))?;
        buf
    } else {
        std::fs::read_to_string(source)
            .map_err(|e| CliError::Usage(format!("reading {source}: {e}")))?
    };
    let graph = parse_graph6(text.trim_end_matches(['\n', '\r']))?;
    Ok(ResolvedInput::Graph(graph))
}

fn compute_sequence(
    input: &ResolvedInput,
    method: Method,
    limits: &CountingLimits,
) -> Result<IndependenceSequence, CliError> {
    let built;
    let graph = match (input, method) {
        (ResolvedInput::Gab(p), Method::Auto | Method::Closed) => {
            return Ok(gab_sequence(p.a(), p.b())?);
        }
        (ResolvedInput::Generalized(p), Method::Auto | Method::Closed) => {
            return Ok(generalized_sequence(p));
        }
        (ResolvedInput::Graph(_), Method::Closed) => {
            return Err(CliError::Usage(
                "--method closed only applies to --gab or --generalized inputs".into(),
            ));
        }
        (ResolvedInput::Gab(p), _) => {
            built = build_gab(p);
            &built
        }
        (ResolvedInput::Generalized(p), _) => {
            built = build_generalized(p);
            &built
        }
        (ResolvedInput::Graph(g), _) => g,
    };
    let seq = match method {
        Method::Brute => brute_force_sequence_with(graph, limits)?,
        _ => sequence_by_recurrence_with(graph, limits)?,
    };
    Ok(seq)
}

// ---- construct ----

#[derive(Serialize)]
struct BlockOut {
    label: String,
    start: u64,
    end: u64,
}

#[derive(Serialize)]
struct ConstructOut {
    family: &'static str,
    n: u64,
    edges: u64,
    blocks: Vec<BlockOut>,
    graph6: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    adjacency: Option<Vec<String>>,
}

fn block(label: String, range: std::ops::Range<u64>) -> BlockOut {
    BlockOut {
        label,
        start: range.start,
        end: range.end,
    }
}

fn cmd_construct(family: Family, format: OutputFormat) -> Result<(), CliError> {
    reject_csv(format, "construct")?;
    let (graph, family_name, blocks, adjacency) = match family {
        Family::Gab { a, b, adjacency } => {
            let params = GabConstruction::new(a, b)?;
            let blocks = vec![
                block("V1".into(), params.v1()),
                block("V2".into(), params.v2()),
                block("V3".into(), params.v3()),
            ];
            (build_gab(&params), "gab", blocks, adjacency)
        }
        Family::Generalized {
            a,
            parts,
            k,
            adjacency,
        } => {
            let params = resolve_parts(a, &parts, k)?;
            let mut blocks = vec![block("A0".into(), params.a0_block())];
            for i in 1..=params.k() {
                blocks.push(block(format!("A{i}"), params.a_block(i)));
            }
            for j in 1..=params.k() {
                blocks.push(block(format!("B{j}"), params.b_block(j)));
            }
            (build_generalized(&params), "generalized", blocks, adjacency)
        }
    };
    let mut out = ConstructOut {
        family: family_name,
        n: graph.n() as u64,
        edges: graph.edge_count() as u64,
        blocks,
        graph6: serialize_graph6(&graph)?,
        adjacency: adjacency.then(|| {
            graph
                .adjacency_listing()
                .lines()
                .map(String::from)
                .collect()
        }),
    };
    match format {
        OutputFormat::Json => print_json(&out),
        _ => {
            let listing = out.adjacency.take();
            print_json(&out);
            println!("{}", out.graph6);
            if let Some(lines) = listing {
                for line in lines {
                    println!("{line}");
                }
            }
        }
    }
    Ok(())
}

// ---- sequence ----

#[derive(Serialize)]
struct SequenceOut {
    n: u64,
    alpha: usize,
    coefficients: IndependenceSequence,
}

#[derive(Serialize)]
struct TermOut {
    t: u64,
    value: String,
}

#[derive(Serialize)]
struct SequenceTermsOut {
    n: u64,
    alpha: usize,
    terms: Vec<TermOut>,
}

fn cmd_sequence(
    input: GraphInput,
    only_t: Option<String>,
    format: OutputFormat,
    limits: &CountingLimits,
) -> Result<(), CliError> {
    let resolved = resolve_input(&input)?;
    let seq = compute_sequence(&resolved, input.method, limits)?;
    let n = resolved.vertex_count();
    let alpha = seq.alpha();
    if let Some(list) = only_t {
        let terms: Vec<TermOut> = parse_u64_list(&list, "--only-t")?
            .into_iter()
            .map(|t| TermOut {
                t,
                value: seq.coefficient(t as usize).to_string(),
            })
            .collect();
        match format {
            OutputFormat::Json => print_json(&SequenceTermsOut { n, alpha, terms }),
            OutputFormat::Text => {
                println!("n = {n}, alpha = {alpha}");
                for term in terms {
                    println!("i_{} = {}", term.t, term.value);
                }
            }
            OutputFormat::Csv => {
                println!("t,i_t");
                for term in terms {
                    println!("{},{}", term.t, term.value);
                }
            }
        }
        return Ok(());
    }
    match format {
        OutputFormat::Json => print_json(&SequenceOut {
            n,
            alpha,
            coefficients: seq,
        }),
        OutputFormat::Text => {
            println!("n = {n}, alpha = {alpha}");
            for (t, value) in seq.coefficients().iter().enumerate() {
                println!("i_{t} = {value}");
            }
        }
        OutputFormat::Csv => {
            println!("t,i_t");
            for (t, value) in seq.coefficients().iter().enumerate() {
                println!("{t},{value}");
            }
        }
    }
    Ok(())
}

// ---- analyze ----

fn cmd_analyze(
    input: GraphInput,
    format: OutputFormat,
    limits: &CountingLimits,
) -> Result<(), CliError> {
    reject_csv(format, "analyze")?;
    let resolved = resolve_input(&input)?;
    let seq = compute_sequence(&resolved, input.method, limits)?;
    let report = analysis::analyze(seq.coefficients());
    match format {
        OutputFormat::Json => print_json(&report),
        _ => print_report_text(&report),
    }
    Ok(())
}

fn print_report_text(report: &ShapeReport) {
    println!("is_unimodal: {}", report.is_unimodal);
    println!("is_log_concave: {}", report.is_log_concave);
    println!("local_maxima:");
    for p in &report.local_maxima {
        println!("  t in [{}, {}], value {}", p.start, p.end, p.value);
    }
    match &report.dip_witness {
        None => println!("dip_witness: none"),
        Some(w) => {
            println!(
                "dip_witness: t = ({}, {}, {}), values = ({}, {}, {})",
                w.t_low, w.t_mid, w.t_high, w.values[0], w.values[1], w.values[2]
            );
        }
    }
    println!("global_mode: {}", report.global_mode);
}

// ---- reproduce-paper ----

// The three counts that certify the dip in G(100, 159).
const DIP_A: u64 = 100;
const DIP_B: u64 = 159;
const DIP_LOW_T: usize = 67;
const DIP_MID_T: usize = 74;
const DIP_HIGH_T: usize = 79;
const DIP_LOW: &str = "49984570869694708771111099844838813533288847750";
const DIP_MID: &str = "44836126125886591149869334343833780227595935550";
const DIP_HIGH: &str = "47256780307562808533825730975714923168070091770";

#[derive(Serialize)]
struct ReproduceOut {
    a: u64,
    b: u64,
    i67: String,
    i74: String,
    i79: String,
    constants_match: bool,
    is_unimodal: bool,
    dip_t: [usize; 3],
    dip_holds: bool,
    ok: bool,
}

fn cmd_reproduce(format: OutputFormat) -> Result<(), CliError> {
    reject_csv(format, "reproduce-paper")?;
    let seq = gab_sequence(DIP_A, DIP_B)?;
    let low = seq.coefficient(DIP_LOW_T);
    let mid = seq.coefficient(DIP_MID_T);
    let high = seq.coefficient(DIP_HIGH_T);
    let constants_match =
        low.to_string() == DIP_LOW && mid.to_string() == DIP_MID && high.to_string() == DIP_HIGH;
    let dip_holds = mid < low && mid < high;
    let unimodal = analysis::is_unimodal(seq.coefficients());
    let out = ReproduceOut {
        a: DIP_A,
        b: DIP_B,
        i67: low.to_string(),
        i74: mid.to_string(),
        i79: high.to_string(),
        constants_match,
        is_unimodal: unimodal,
        dip_t: [DIP_LOW_T, DIP_MID_T, DIP_HIGH_T],
        dip_holds,
        ok: constants_match && dip_holds && !unimodal,
    };
    match format {
        OutputFormat::Json => print_json(&out),
        _ => {
            println!(
                "G({DIP_A}, {DIP_B}): n = {}, alpha = {}",
                DIP_A + DIP_B,
                seq.alpha()
            );
            println!("i_{DIP_LOW_T} = {}", out.i67);
            println!("i_{DIP_MID_T} = {}", out.i74);
            println!("i_{DIP_HIGH_T} = {}", out.i79);
            println!("constants_match: {constants_match}");
            println!("is_unimodal: {unimodal}");
            println!("dip i_{DIP_MID_T} < min(i_{DIP_LOW_T}, i_{DIP_HIGH_T}): {dip_holds}");
            println!("result: {}", if out.ok { "ok" } else { "MISMATCH" });
        }
    }
    if !out.ok {
        return Err(CliError::Mismatch(
            "reproduction check failed: recomputed values disagree with the expected dip".into(),
        ));
    }
    Ok(())
}

// ---- search ----

#[derive(Serialize)]
struct SearchRow {
    a: u64,
    b: u64,
    is_unimodal: bool,
    plateaus: usize,
}

#[derive(Serialize)]
struct SearchOut {
    rows: Vec<SearchRow>,
    first_non_unimodal: Option<u64>,
}

fn cmd_search(range: &str, b_offset: i64, format: OutputFormat) -> Result<(), CliError> {
    let (lo, hi) = parse_range(range)?;
    let mut rows = Vec::new();
    for a in lo..=hi {
        // clamp to the smallest legal b; relevant for a = 1 and negative offsets
        let suggested = analysis::suggest_b(a) as i64 + b_offset;
        let b = suggested.max(a as i64 + 1) as u64;
        let seq = gab_sequence(a, b)?;
        rows.push(SearchRow {
            a,
            b,
            is_unimodal: analysis::is_unimodal(seq.coefficients()),
            plateaus: analysis::local_maxima(seq.coefficients()).len(),
        });
    }
    let first_non_unimodal = rows.iter().find(|r| !r.is_unimodal).map(|r| r.a);
    match format {
        OutputFormat::Json => print_json(&SearchOut {
            rows,
            first_non_unimodal,
        }),
        OutputFormat::Text => {
            for r in &rows {
                println!(
                    "a={} b={} unimodal={} plateaus={}",
                    r.a, r.b, r.is_unimodal, r.plateaus
                );
            }
            match first_non_unimodal {
                Some(a) => println!("first_non_unimodal: {a}"),
                None => println!("first_non_unimodal: none"),
            }
        }
        OutputFormat::Csv => {
            println!("a,b,is_unimodal,plateaus");
            for r in &rows {
                println!("{},{},{},{}", r.a, r.b, r.is_unimodal, r.plateaus);
            }
        }
    }
    Ok(())
}

// ---- trees ----

#[derive(Serialize)]
struct TreesOut {
    n: u64,
    count: u64,
    seed: u64,
    unimodal_count: u64,
    violations: Vec<String>,
}

fn cmd_trees(
    n: u64,
    count: u64,
    seed: u64,
    format: OutputFormat,
    limits: &CountingLimits,
) -> Result<(), CliError> {
    reject_csv(format, "trees")?;
    let mut violations = Vec::new();
    for i in 0..count {
        let tree = random_tree(n, seed.wrapping_add(i))?;
        let seq = sequence_by_recurrence_with(&tree, limits)?;
        if !analysis::is_unimodal(seq.coefficients()) {
            let encoded = serialize_graph6(&tree)?;
            eprintln!("VIOLATION: non-unimodal tree {encoded}");
            violations.push(encoded);
        }
    }
    let out = TreesOut {
        n,
        count,
        seed,
        unimodal_count: count - violations.len() as u64,
        violations,
    };
    match format {
        OutputFormat::Json => print_json(&out),
        _ => {
            println!("trees: n={} count={} seed={}", out.n, out.count, out.seed);
            println!("unimodal: {}/{}", out.unimodal_count, out.count);
            if out.violations.is_empty() {
                println!("violations: none");
            } else {
                println!("violations: {}", out.violations.join(" "));
            }
        }
    }
    if !out.violations.is_empty() {
        return Err(CliError::Mismatch(format!(
            "{} of {} sampled trees have non-unimodal sequences",
            out.violations.len(),
            out.count
        )));
    }
    Ok(())
}
