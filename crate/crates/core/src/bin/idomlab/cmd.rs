use std::io::Read as _;
use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context, Result};
use serde::Serialize;
use serde_json::json;

use idomlab::bounds::{self, BoundId, BoundVerdict};
use idomlab::families::{FamilyKind, FamilySpec};
use idomlab::generate;
use idomlab::invariants::{self, greedy_maximal_independent_set};
use idomlab::io::{self, print_pattern, write_bundle, Certificate, Claim, GraphFormat, Subject, Verdict};
use idomlab::labelling::{minimize_weight, to_independent_set, PathOrCycle};
use idomlab::reproduce::{self, ReproduceError, Target};
use idomlab::scan;
use idomlab::{direct_product, Graph, Invariant, SolveError, SolveOptions, DEFAULT_CAP, VERIFY_CAP};

use crate::{Common, Input, Out};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Status {
    Ok = 0,
    Mismatch = 1,
    Usage = 2,
    Budget = 3,
}

/// Canonical JSON: object keys sorted.
fn to_json<T: Serialize>(v: &T) -> String {
    let value = serde_json::to_value(v).expect("serialisable");
    serde_json::to_string_pretty(&value).expect("serialisable")
}

fn to_json_line<T: Serialize>(v: &T) -> String {
    serde_json::to_value(v).expect("serialisable").to_string()
}

fn csv_out(header: &[&str], rows: &[Vec<String>]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for r in rows {
        w.write_record(r)?;
    }
    Ok(String::from_utf8(w.into_inner().map_err(|e| anyhow!("{}", e.error()))?)?)
}

fn read_source(path: &Path) -> Result<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).context("reading stdin")?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

fn infer_format(path: &Path, given: Option<GraphFormat>) -> GraphFormat {
    given.unwrap_or_else(|| match path.extension().and_then(|e| e.to_str()) {
        Some("g6" | "graph6") => GraphFormat::Graph6,
        _ => GraphFormat::EdgeList,
    })
}

struct Loaded {
    graph: Graph,
    subject: Subject,
    spec: Option<FamilySpec>,
}

fn load(input: &Input) -> Result<Loaded> {
    if let Some(spec) = &input.graph {
        let f = spec.build()?;
        return Ok(Loaded {
            graph: f.graph,
            subject: Subject::family(spec),
            spec: Some(spec.clone()),
        });
    }
    let Some(path) = &input.graph_file else {
        bail!("give a graph with --graph or --graph-file");
    };
    let text = read_source(path)?;
    let graph = io::read_graph(&text, infer_format(path, input.format))?;
    Ok(Loaded {
        subject: Subject::inline(&graph),
        graph,
        spec: None,
    })
}

fn write_to(output: Option<&Path>, text: &str) -> Result<()> {
    match output {
        Some(p) => std::fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            if !text.ends_with('\n') {
                println!();
            }
            Ok(())
        }
    }
}

fn with_suffix(p: &Path, suffix: &str) -> PathBuf {
    let mut s = p.as_os_str().to_owned();
    s.push(suffix);
    PathBuf::from(s)
}

struct Answer {
    certs: Vec<Certificate>,
    line: String,
    status: Status,
}

fn verified(mut c: Certificate) -> Certificate {
    c.verdict = Verdict::Verified;
    c
}

fn decision(inv: Invariant, value: usize, k: Option<usize>) -> String {
    match k {
        None => String::new(),
        Some(k) if inv.is_minimum() => format!("; {inv} <= {k}: {}", if value <= k { "yes" } else { "no" }),
        Some(k) => format!("; {inv} >= {k}: {}", if value >= k { "yes" } else { "no" }),
    }
}

fn solve_direct(
    g: &Loaded,
    second: Option<&FamilySpec>,
    inv: Invariant,
    k: Option<usize>,
    opts: &SolveOptions,
) -> Result<Answer> {
    let (target, subject) = match second {
        Some(spec) => {
            let h = spec.build()?.graph;
            let p = direct_product(&g.graph, &h)?;
            (p.graph().clone(), g.subject.clone().times(Subject::family(spec)))
        }
        None => (g.graph.clone(), g.subject.clone()),
    };
    match invariants::compute(&target, inv, opts) {
        Ok(r) => Ok(Answer {
            line: format!("{inv}({subject}) = {}{}", r.value, decision(inv, r.value, k)),
            certs: vec![verified(
                Certificate::new(Claim::InvariantValue, subject, r.value, "exact solve")
                    .with_invariant(inv)
                    .with_witness(&r.witness),
            )],
            status: Status::Ok,
        }),
        Err(e @ (SolveError::CapExceeded { .. } | SolveError::BudgetExhausted)) => {
            if matches!(inv, Invariant::IndependentDomination | Invariant::Domination) {
                let w = greedy_maximal_independent_set(&target);
                let c = Certificate::new(Claim::UpperBoundWitness, subject.clone(), w.len(), "greedy maximal independent set")
                    .with_invariant(inv)
                    .with_witness(&w)
                    .sealed(opts)?;
                Ok(Answer {
                    line: format!("{inv}({subject}) <= {} (unchecked: {e})", w.len()),
                    certs: vec![c],
                    status: Status::Budget,
                })
            } else {
                Ok(Answer {
                    line: format!("{inv}({subject}) unchecked: {e}"),
                    certs: vec![],
                    status: Status::Budget,
                })
            }
        }
        Err(e) => Err(e.into()),
    }
}

fn solve_labelling(g: &Loaded, spec: &FamilySpec, n: usize, k: Option<usize>, opts: &SolveOptions) -> Result<Answer> {
    let subject = g.subject.clone().times(Subject::family(spec));
    let l = match minimize_weight(&g.graph, n, opts) {
        Ok(l) => l,
        Err(e @ (SolveError::CapExceeded { .. } | SolveError::BudgetExhausted)) => {
            return Ok(Answer {
                line: format!("i({subject}) unchecked: {e}"),
                certs: vec![],
                status: Status::Budget,
            })
        }
        Err(e) => return Err(e.into()),
    };
    let w = l.weight();
    let family = g.spec.as_ref().and_then(|s| match s.kind {
        FamilyKind::Path => Some(PathOrCycle::Path),
        FamilyKind::Cycle => Some(PathOrCycle::Cycle),
        _ => None,
    });
    let legality = Certificate::new(Claim::Legality, g.subject.clone(), w, "minimum-weight labelling")
        .with_labelling(&l)
        .sealed(opts)?;
    let mut certs = vec![legality];
    let order = g.graph.order() * n;
    let (note, status) = if order <= opts.cap {
        let p = direct_product(&g.graph, &spec.build()?.graph)?;
        match invariants::independent_domination_number(p.graph(), opts) {
            Ok(r) if r.value == w => {
                let set = to_independent_set(&g.graph, &l)?;
                certs.push(verified(
                    Certificate::new(Claim::InvariantValue, subject.clone(), w, "labelling weight equals i(G x K_n)")
                        .with_invariant(Invariant::IndependentDomination)
                        .with_witness(&set),
                ));
                ("cross-checked on the product".to_string(), Status::Ok)
            }
            Ok(r) => (format!("MISMATCH: product solver gives {}", r.value), Status::Mismatch),
            Err(SolveError::BudgetExhausted) => ("product cross-check ran out of budget".into(), Status::Ok),
            Err(e) => return Err(e.into()),
        }
    } else {
        (format!("product cross-check skipped: {order} vertices above cap {}", opts.cap), Status::Ok)
    };
    Ok(Answer {
        line: format!(
            "i({subject}) = {w}{} (labelling {}; {note})",
            decision(Invariant::IndependentDomination, w, k),
            print_pattern(&l, family)
        ),
        certs,
        status,
    })
}

pub fn compute(
    c: &Common,
    input: &Input,
    product: Option<FamilySpec>,
    n: Option<usize>,
    invs: &[Invariant],
    k: Option<usize>,
) -> Result<Status> {
    let opts = c.options(DEFAULT_CAP);
    let g = load(input)?;
    let second = product.or(n.map(|n| FamilySpec::new(FamilyKind::Complete, &[n])));
    if let Some(s) = &second {
        s.build()?;
    }
    let mut answers = Vec::new();
    for &inv in invs {
        let a = match &second {
            Some(s) if s.kind == FamilyKind::Complete && s.params[0] >= 2 && inv == Invariant::IndependentDomination => {
                solve_labelling(&g, s, s.params[0], k, &opts)?
            }
            s => solve_direct(&g, s.as_ref(), inv, k, &opts)?,
        };
        answers.push(a);
    }
    let status = answers.iter().map(|a| a.status).max().unwrap_or(Status::Ok);
    let certs: Vec<Certificate> = answers.iter().flat_map(|a| a.certs.iter().cloned()).collect();
    match c.out {
        Out::Json => println!("{}", write_bundle(&certs)),
        Out::Csv => {
            let rows: Vec<Vec<String>> = certs
                .iter()
                .map(|c| {
                    vec![
                        to_json_line(&c.claim).trim_matches('"').to_string(),
                        c.subject.to_string(),
                        c.invariant.map(|i| i.to_string()).unwrap_or_default(),
                        c.value.to_string(),
                        to_json_line(&c.verdict).trim_matches('"').to_string(),
                    ]
                })
                .collect();
            print!("{}", csv_out(&["claim", "subject", "invariant", "value", "verdict"], &rows)?);
        }
        Out::Human => {
            for a in &answers {
                println!("{}", a.line);
            }
        }
    }
    Ok(status)
}

pub fn product(c: &Common, input: &Input, spec: &FamilySpec, to: GraphFormat, output: Option<&Path>) -> Result<Status> {
    let g = load(input)?;
    let h = spec.build()?.graph;
    let p = direct_product(&g.graph, &h)?;
    let text = io::write_graph(p.graph(), to);
    let sidecar = to_json(&p.sidecar());
    match output {
        Some(path) => {
            write_to(Some(path), &text)?;
            let side = with_suffix(path, ".json");
            std::fs::write(&side, format!("{sidecar}\n"))?;
            if c.out == Out::Human {
                eprintln!("wrote {} and {}", path.display(), side.display());
            }
        }
        None if c.out == Out::Json => {
            println!("{}", to_json(&json!({ "graph": text, "format": to.to_string(), "sidecar": p.sidecar() })));
        }
        None => write_to(None, &text)?,
    }
    Ok(Status::Ok)
}

pub fn export(
    c: &Common,
    input: &Input,
    certificates: Option<&str>,
    n: usize,
    to: GraphFormat,
    output: Option<&Path>,
) -> Result<Status> {
    if let Some(which) = certificates {
        let opts = c.options(VERIFY_CAP);
        let bundle = match which {
            "thm12" => reproduce::thm12_bundle(n, &opts)?,
            _ => reproduce::conj_bundle(&opts)?,
        };
        write_to(output, &format!("{}\n", write_bundle(&bundle)))?;
        let worst = bundle.iter().map(|c| c.verdict).fold(Status::Ok, |s, v| {
            s.max(match v {
                Verdict::Verified => Status::Ok,
                Verdict::Refuted => Status::Mismatch,
                Verdict::Unchecked => Status::Budget,
            })
        });
        return Ok(worst);
    }
    let g = load(input)?;
    let text = io::write_graph(&g.graph, to);
    let labels = g.graph.labels().map(|l| l.to_vec());
    match output {
        Some(path) => {
            write_to(Some(path), &text)?;
            if let Some(labels) = &labels {
                std::fs::write(with_suffix(path, ".labels.json"), format!("{}\n", to_json(&json!({ "labels": labels }))))?;
            }
        }
        None if c.out == Out::Json => {
            println!("{}", to_json(&json!({ "graph": text, "format": to.to_string(), "labels": labels })));
        }
        None => write_to(None, &text)?,
    }
    Ok(Status::Ok)
}

pub fn verify(c: &Common, file: &Path) -> Result<Status> {
    let opts = c.options(VERIFY_CAP);
    let text = read_source(file)?;
    let certs = io::read_bundle(&text)?;
    let mut rows = Vec::new();
    let mut status = Status::Ok;
    for (i, cert) in certs.iter().enumerate() {
        let (verdict, detail) = match io::verify_certificate(cert, &opts) {
            Ok(o) => (o.verdict, o.detail),
            Err(e) => (Verdict::Refuted, e.to_string()),
        };
        status = status.max(match verdict {
            Verdict::Verified => Status::Ok,
            Verdict::Refuted => Status::Mismatch,
            Verdict::Unchecked => Status::Budget,
        });
        if verdict == Verdict::Refuted {
            eprintln!("certificate {i} ({:?} on {}) refuted: {detail}", cert.claim, cert.subject);
        }
        rows.push(json!({
            "index": i,
            "claim": cert.claim,
            "subject": cert.subject.to_string(),
            "value": cert.value,
            "verdict": verdict,
            "detail": detail,
        }));
    }
    match c.out {
        Out::Json => println!("{}", to_json(&rows)),
        Out::Csv => {
            let field = |r: &serde_json::Value, k: &str| match &r[k] {
                serde_json::Value::String(s) => s.clone(),
                v => v.to_string(),
            };
            let keys = ["index", "claim", "subject", "value", "verdict", "detail"];
            let table: Vec<Vec<String>> = rows.iter().map(|r| keys.iter().map(|k| field(r, k)).collect()).collect();
            print!("{}", csv_out(&keys, &table)?);
        }
        Out::Human => {
            for r in &rows {
                println!(
                    "{:<10} {} on {} = {}: {}",
                    r["verdict"].as_str().unwrap_or_default(),
                    r["claim"].as_str().unwrap_or_default(),
                    r["subject"].as_str().unwrap_or_default(),
                    r["value"],
                    r["detail"].as_str().unwrap_or_default()
                );
            }
            let count = |v: &str| rows.iter().filter(|r| r["verdict"] == v).count();
            println!(
                "{} certificates: {} verified, {} refuted, {} unchecked",
                rows.len(),
                count("verified"),
                count("refuted"),
                count("unchecked")
            );
        }
    }
    Ok(status)
}

pub fn reproduce(c: &Common, target: &str, n: usize) -> Result<Status> {
    let opts = c.options(DEFAULT_CAP);
    let t = match target.parse::<Target>()? {
        Target::Thm12(_) => Target::Thm12(n),
        t => t,
    };
    let report = match reproduce::run(t, &opts) {
        Ok(r) => r,
        Err(ReproduceError::Solve(e @ (SolveError::BudgetExhausted | SolveError::CapExceeded { .. }))) => {
            eprintln!("{t}: {e}");
            return Ok(Status::Budget);
        }
        Err(e) => return Err(e.into()),
    };
    match c.out {
        Out::Json => println!("{}", to_json(&report)),
        Out::Csv => {
            let rows: Vec<Vec<String>> = report
                .rows
                .iter()
                .map(|r| vec![r.item.clone(), r.expected.clone(), r.computed.clone(), r.pass.to_string()])
                .collect();
            print!("{}", csv_out(&["item", "expected", "computed", "pass"], &rows)?);
        }
        Out::Human => {
            let width = report.rows.iter().map(|r| r.item.len()).max().unwrap_or(0);
            for r in &report.rows {
                let mark = if r.pass { "PASS" } else { "FAIL" };
                println!("{mark}  {:<width$}  expected {}  computed {}", r.item, r.expected, r.computed);
            }
            println!("{}: {}/{} rows match", report.target, report.pass_count(), report.rows.len());
        }
    }
    Ok(if report.passed() { Status::Ok } else { Status::Mismatch })
}

fn search_graphs(input: &Input, connected: Option<usize>) -> Result<Vec<Graph>> {
    if let Some(n) = connected {
        if n > generate::MAX_ENUMERATION_ORDER {
            bail!("--connected supports at most {} vertices", generate::MAX_ENUMERATION_ORDER);
        }
        return Ok(generate::connected_graphs_up_to(n));
    }
    if let Some(path) = &input.graph_file {
        let text = read_source(path)?;
        return Ok(match infer_format(path, input.format.or(Some(GraphFormat::Graph6))) {
            GraphFormat::Graph6 => io::read_graph6_lines(&text)?,
            GraphFormat::EdgeList => vec![io::read_graph(&text, GraphFormat::EdgeList)?],
        });
    }
    Ok(vec![load(input)?.graph])
}

pub fn batch(c: &Common, manifest: &Path) -> Result<Status> {
    let opts = c.options(DEFAULT_CAP);
    let rows = bounds::run_manifest(&read_source(manifest)?, &opts)?;
    match c.out {
        Out::Json => {
            let items: Vec<_> = rows.iter().map(|r| json!({ "pair": r.pair, "report": r.report })).collect();
            println!("{}", to_json(&json!(items)));
        }
        _ => print!("{}", bounds::batch_csv(&rows)?),
    }
    let status = if rows.iter().any(|r| !r.report.consistent()) {
        Status::Mismatch
    } else if rows.iter().any(|r| r.report.verdict == BoundVerdict::Unchecked) {
        Status::Budget
    } else {
        Status::Ok
    };
    Ok(status)
}

pub fn search(c: &Common, input: &Input, connected: Option<usize>, bound: BoundId) -> Result<Status> {
    let opts = c.options(DEFAULT_CAP);
    let graphs = search_graphs(input, connected)?;
    if c.out == Out::Csv {
        println!("bound_id,first,second,lhs,rhs,verdict");
    }
    let summary = scan::scan(&graphs, bound, &opts, |v| match c.out {
        Out::Json => println!("{}", to_json_line(&json!({ "violation": v }))),
        Out::Csv => println!(
            "{},{},{},{},{},{}",
            bound,
            v.first,
            v.second.map(|s| s.to_string()).unwrap_or_default(),
            v.report.lhs.or(v.report.witness_bound).map(|x| x.to_string()).unwrap_or_default(),
            v.report.rhs.map(|x| x.to_string()).unwrap_or_default(),
            v.report.verdict
        ),
        Out::Human => println!(
            "violation: {} lhs {} rhs {} ({})",
            v.graphs.join(" x "),
            v.report.lhs.or(v.report.witness_bound).map(|x| x.to_string()).unwrap_or("-".into()),
            v.report.rhs.map(|x| x.to_string()).unwrap_or("-".into()),
            v.report.verdict
        ),
    })?;
    match c.out {
        Out::Json => println!("{}", to_json_line(&json!({ "summary": summary }))),
        Out::Csv => eprintln!("{}", to_json_line(&summary)),
        Out::Human => println!(
            "{}: {} graphs, {} checked, {} inapplicable, {} skipped over cap, {} violations{}",
            summary.bound,
            summary.graphs,
            summary.checked,
            summary.inapplicable,
            summary.skipped,
            summary.violations,
            if summary.partial { " (partial scan: budget exhausted)" } else { "" }
        ),
    }
    Ok(if summary.partial {
        Status::Budget
    } else if summary.violations > 0 && bound.is_proved() {
        Status::Mismatch
    } else {
        Status::Ok
    })
}
