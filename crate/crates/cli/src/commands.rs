use std::fs;
use std::path::Path;

use serde_json::{json, Value};

use leavitt::algebra::check_relations;
use leavitt::algebra::rewrite::{rewrite, Strategy};
use leavitt::graph::{hereditary_saturated_closure, is_acyclic, line_points, parse_graph, to_dot};
use leavitt::random::{random_nonzero_element, random_raw_combination, rng};
use leavitt::reduction::{is_simple, vertex_ideal_minimal};
use leavitt::socle::{matrix_sizes, socle_structure, SocleReport};
use leavitt::{
    in_socle, nondegeneracy_witness, reduce, verify_witness, Algebra, AlgebraError, Element, Field,
    Graph, GraphError, SummandSize, VertexSet,
};

use crate::{Cli, Command, Format};

/// Number of random elements and word combinations per `check --seed` run.
const SPOT_CHECKS: usize = 200;

#[derive(Debug)]
pub enum CliError {
    /// Bad arguments, unreadable input or a parse error: exit status 2.
    Usage(String),
    /// Well-formed input the operation does not apply to: exit status 1.
    Domain(String),
}

impl CliError {
    pub fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Domain(_) => 1,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Domain(m) => m,
        }
    }
}

impl From<GraphError> for CliError {
    fn from(e: GraphError) -> Self {
        use GraphError::*;
        match e {
            Syntax { .. }
            | DuplicateName { .. }
            | UndeclaredEndpoint { .. }
            | UnknownVertex(_)
            | UnknownEdge(_)
            | EmptySet
            | NotAPath => CliError::Usage(e.to_string()),
            NotHereditarySaturated | NotACycle | HasCycle => CliError::Domain(e.to_string()),
        }
    }
}

impl From<AlgebraError> for CliError {
    fn from(e: AlgebraError) -> Self {
        match e {
            AlgebraError::Graph(g) => g.into(),
            AlgebraError::Syntax { .. }
            | AlgebraError::UnknownName(_)
            | AlgebraError::Scalar(_) => CliError::Usage(e.to_string()),
            AlgebraError::MixedAlgebras
            | AlgebraError::ZeroElement
            | AlgebraError::MalformedWitness(_) => CliError::Domain(e.to_string()),
        }
    }
}

fn load(path: &Path) -> Result<Graph, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    parse_graph(&text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

fn names(g: &Graph, s: &VertexSet) -> Vec<String> {
    s.names(g).into_iter().map(str::to_string).collect()
}

fn name_list(xs: &[String]) -> String {
    if xs.is_empty() {
        "(none)".into()
    } else {
        xs.join(" ")
    }
}

fn with_schema(mut v: Value) -> String {
    if let Value::Object(map) = &mut v {
        map.insert("schema".into(), json!(1));
    }
    let mut s = serde_json::to_string_pretty(&v).expect("json values serialize");
    s.push('\n');
    s
}

fn bool_answer(format: Format, key: &str, answer: bool) -> String {
    match format {
        Format::Json => with_schema(json!({ key: answer })),
        _ => format!("{answer}\n"),
    }
}

fn field_name(f: Field) -> String {
    match f {
        Field::Rational => "Q".into(),
        Field::Prime(p) => format!("GF({p})"),
    }
}

fn matrix_sum(sizes: &[String], k: &str) -> String {
    if sizes.is_empty() {
        "0".into()
    } else {
        sizes
            .iter()
            .map(|n| format!("M_{n}({k})"))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

fn hedgehog_dot(report: &SocleReport) -> Result<String, CliError> {
    report
        .hedgehog
        .as_ref()
        .map(|hh| to_dot(&hh.graph))
        .ok_or_else(|| CliError::Domain("socle is zero: there is no hedgehog graph".into()))
}

pub fn run(cli: &Cli) -> Result<String, CliError> {
    let dot_allowed = matches!(
        cli.command,
        Command::Dot { .. } | Command::Socle { .. } | Command::Structure { .. }
    );
    if cli.format == Format::Dot && !dot_allowed {
        return Err(CliError::Usage(
            "--format dot is only available for dot, socle and structure".into(),
        ));
    }
    let format = cli.format;
    let algebra = |path: &Path| load(path).map(|g| Algebra::new(g, cli.field));
    let element =
        |alg: &Algebra, expr: &str| -> Result<Element, CliError> { Ok(alg.parse_element(expr)?) };

    match &cli.command {
        Command::Linepoints { graph } => {
            let g = load(graph)?;
            let lp = names(&g, &line_points(&g));
            Ok(match format {
                Format::Json => with_schema(json!({ "line_points": lp })),
                _ => format!("{}\n", name_list(&lp)),
            })
        }
        Command::Closure { set, graph } => {
            let g = load(graph)?;
            let xs = g.vertex_set(set.iter().map(String::as_str))?;
            let closure = names(&g, &hereditary_saturated_closure(&g, &xs)?);
            Ok(match format {
                Format::Json => with_schema(json!({ "closure": closure })),
                _ => format!("{}\n", name_list(&closure)),
            })
        }
        Command::Socle { graph } => {
            let g = load(graph)?;
            let report = socle_structure(&g, cli.depth);
            match format {
                Format::Json => Ok(with_schema(
                    serde_json::to_value(report.to_repr(&g)).expect("report serializes"),
                )),
                Format::Dot => hedgehog_dot(&report),
                Format::Text => Ok(report.to_text(&g)),
            }
        }
        Command::Structure { graph } => {
            let g = load(graph)?;
            let report = socle_structure(&g, cli.depth);
            let socle: Vec<String> = report.sizes().iter().map(SummandSize::to_string).collect();
            let algebra: Option<Vec<String>> = is_acyclic(&g).then(|| {
                let mut sizes = matrix_sizes(&g).expect("graph is acyclic");
                sizes.sort();
                sizes.iter().map(usize::to_string).collect()
            });
            let k = field_name(cli.field);
            match format {
                Format::Json => Ok(with_schema(json!({
                    "field": cli.field.to_string(),
                    "socle": socle,
                    "algebra": algebra,
                }))),
                Format::Dot => hedgehog_dot(&report),
                Format::Text => {
                    let mut out = format!("socle: {}\n", matrix_sum(&socle, &k));
                    match &algebra {
                        Some(sizes) => {
                            out.push_str(&format!("algebra: {}\n", matrix_sum(sizes, &k)))
                        }
                        None => {
                            out.push_str("algebra: infinite-dimensional (the graph has a cycle)\n")
                        }
                    }
                    Ok(out)
                }
            }
        }
        Command::Reduce { expr, graph } => {
            let alg = algebra(graph)?;
            let x = element(&alg, expr)?;
            let w = reduce(&x)?;
            let verified = verify_witness(&x, &w);
            let out = match format {
                Format::Json => with_schema(json!({
                    "witness": serde_json::to_value(w.to_repr(alg.graph())).expect("witness serializes"),
                    "verified": verified,
                })),
                _ => format!("{}verified: {verified}\n", w.to_text(alg.graph())),
            };
            if verified {
                Ok(out)
            } else {
                Err(CliError::Domain(format!(
                    "witness failed verification:\n{out}"
                )))
            }
        }
        Command::Nondegen { expr, graph } => {
            let alg = algebra(graph)?;
            let x = element(&alg, expr)?;
            let a = nondegeneracy_witness(&x)?;
            let xax = &(&x * &a) * &x;
            Ok(match format {
                Format::Json => with_schema(json!({
                    "a": a.to_string(),
                    "xax": xax.to_string(),
                })),
                _ => format!("a: {a}\nx a x: {xax}\n"),
            })
        }
        Command::Simple { graph } => Ok(bool_answer(format, "simple", is_simple(&load(graph)?))),
        Command::Minimal { vertex, graph } => {
            let g = load(graph)?;
            let u = g.vertex_id(vertex)?;
            Ok(bool_answer(format, "minimal", vertex_ideal_minimal(&g, u)?))
        }
        Command::Member { expr, graph } => {
            let alg = algebra(graph)?;
            let x = element(&alg, expr)?;
            Ok(bool_answer(format, "in_socle", in_socle(&x)))
        }
        Command::Eval { expr, graph } => {
            let alg = algebra(graph)?;
            let x = element(&alg, expr)?;
            Ok(match format {
                Format::Json => with_schema(json!({ "normal_form": x.to_string() })),
                _ => format!("{x}\n"),
            })
        }
        Command::Dot { graph } => {
            let dot = to_dot(&load(graph)?);
            Ok(match format {
                Format::Json => with_schema(json!({ "dot": dot })),
                _ => dot,
            })
        }
        Command::Check { graph } => check(&algebra(graph)?, cli.seed, format),
    }
}

fn check(alg: &Algebra, seed: Option<u64>, format: Format) -> Result<String, CliError> {
    let report = check_relations(alg);
    let failures: Vec<&str> = report.failures().map(|c| c.instance.as_str()).collect();
    let spot = seed.map(|s| spot_checks(alg, s));
    let ok = failures.is_empty() && spot.as_ref().is_none_or(|r| r.failures.is_empty());

    let out = match format {
        Format::Json => with_schema(json!({
            "relations": report.checks.len(),
            "relation_failures": failures,
            "spot_checks": spot.as_ref().map(|r| json!({
                "seed": r.seed,
                "witnesses": r.witnesses,
                "combinations": r.combinations,
                "failures": r.failures,
            })),
            "ok": ok,
        })),
        _ => {
            let mut out = format!(
                "relations: {} instances, {} failures\n",
                report.checks.len(),
                failures.len()
            );
            for f in &failures {
                out.push_str(&format!("  fails: {f}\n"));
            }
            if let Some(r) = &spot {
                out.push_str(&format!(
                    "spot checks (seed {}): {} witnesses, {} word combinations, {} failures\n",
                    r.seed,
                    r.witnesses,
                    r.combinations,
                    r.failures.len()
                ));
                for f in &r.failures {
                    out.push_str(&format!("  fails: {f}\n"));
                }
            }
            out
        }
    };
    if ok {
        Ok(out)
    } else {
        Err(CliError::Domain(format!("checks failed\n{out}")))
    }
}

struct SpotReport {
    seed: u64,
    witnesses: usize,
    combinations: usize,
    failures: Vec<String>,
}

/// Reduces seeded random elements and rewrites seeded random word
/// combinations under two strategies, comparing with direct multiplication.
fn spot_checks(alg: &Algebra, seed: u64) -> SpotReport {
    let mut r = rng(seed);
    let mut failures = Vec::new();
    for _ in 0..SPOT_CHECKS {
        let x = random_nonzero_element(&mut r, alg, 4, 3);
        match reduce(&x) {
            Ok(w) if verify_witness(&x, &w) => {}
            Ok(_) => failures.push(format!("witness for {x} does not verify")),
            Err(e) => failures.push(format!("reduce {x}: {e}")),
        }
    }
    for i in 0..SPOT_CHECKS as u64 {
        let raw = random_raw_combination(&mut r, alg, 3, 3);
        let direct = raw
            .iter()
            .fold(alg.zero(), |acc, (k, w)| &acc + &alg.product_of(w).scale(k));
        let lm = rewrite(alg, &raw, Strategy::LeftmostInnermost).element;
        let rnd = rewrite(alg, &raw, Strategy::Random { seed: seed ^ i }).element;
        if lm != direct || rnd != direct {
            failures.push(format!("rewriting disagrees with multiplication: {direct}"));
        }
    }
    SpotReport {
        seed,
        witnesses: SPOT_CHECKS,
        combinations: SPOT_CHECKS,
        failures,
    }
}
