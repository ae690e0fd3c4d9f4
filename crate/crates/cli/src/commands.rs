use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use serde::Serialize;
use serde_json::{json, Value};
use sumdiam_core::constructions::{
    add_isolated, add_vertex, disjoint_union_scaled, disjoint_union_translated, ispum_cycle_odd,
    ispum_matching, join, modify, sd_general, sd_path, spum_cycle4, spum_matching, spum_path_even,
    translate, ConstructionReport, Modification,
};
use sumdiam_core::hypergraph::{
    hyper_general, hyper_isomorphic, hyper_sd_lower_bound, induce_hyper, search_hyper_sd_with,
    HyperSearch, Hypergraph,
};
use sumdiam_core::search::{
    check_conjecture_with, reproduce_table_with, solve, Invariant, SearchCertificate,
    SearchProblem, Target, DEFAULT_BUDGET,
};
use sumdiam_core::{
    generate, induce, is_valid_labeling, isd_lower_bound, known_values, recognize,
    sd_lower_bound, Error, FamilySpec, Labeling, SimpleGraph, DEFAULT_ISO_CAP,
};

use crate::args::{
    BoundsArgs, CombineArgs, ConjectureArgs, ConstructArgs, Format, InduceArgs, Op, SearchArgs,
    TableArgs, TargetArgs, VerifyArgs,
};

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Core(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Core(Error::Parse(_)) => 2,
            CliError::Core(Error::BudgetExceeded { .. }) => 3,
            CliError::Core(_) => 1,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => f.write_str(m),
            CliError::Core(e) => write!(f, "{e}"),
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

/// What a command prints, and whether it counts as success.
pub struct Outcome {
    pub stdout: String,
    pub stderr: Vec<String>,
    pub ok: bool,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self { stdout, stderr: Vec::new(), ok: true }
    }
}

pub enum ParsedTarget {
    Family(FamilySpec),
    Graph(SimpleGraph),
    Hyper(Hypergraph),
}

impl ParsedTarget {
    fn describe(&self) -> String {
        match self {
            ParsedTarget::Family(spec) => spec.to_string(),
            ParsedTarget::Graph(g) => g.to_json(),
            ParsedTarget::Hyper(h) => h.to_json(),
        }
    }

    fn simple(self) -> CliResult<(Target, SimpleGraph)> {
        match self {
            ParsedTarget::Family(spec) => Ok((Target::Family(spec), generate(spec)?)),
            ParsedTarget::Graph(g) => Ok((Target::Graph(g.clone()), g)),
            ParsedTarget::Hyper(_) => {
                Err(CliError::Usage("this command needs a graph, not a hypergraph".into()))
            }
        }
    }
}

fn read_graph_file(path: &Path) -> CliResult<ParsedTarget> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    let value: Value = serde_json::from_str(&text)
        .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    if value.get("k").is_some() {
        Ok(ParsedTarget::Hyper(Hypergraph::from_json(&text)?))
    } else {
        Ok(ParsedTarget::Graph(SimpleGraph::from_json(&text)?))
    }
}

fn target_from(spec: Option<&str>, file: Option<&Path>, what: &str) -> CliResult<ParsedTarget> {
    match (spec, file) {
        (Some(s), None) => Ok(ParsedTarget::Family(s.parse()?)),
        (None, Some(p)) => read_graph_file(p),
        (Some(_), Some(_)) => Err(CliError::Usage(format!("give only one {what}"))),
        (None, None) => Err(CliError::Usage(format!("missing {what}"))),
    }
}

fn parse_target(t: &TargetArgs) -> CliResult<ParsedTarget> {
    target_from(t.target.as_deref(), t.graph.as_deref(), "of --target or --graph")
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("output serializes")
}

fn no_csv(format: Format) -> CliResult<()> {
    if format == Format::Csv {
        return Err(CliError::Usage("csv output is only available for table".into()));
    }
    Ok(())
}

/// Candidate cap from `SUMDIAM_BUDGET`.
pub fn budget() -> CliResult<u64> {
    match std::env::var("SUMDIAM_BUDGET") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("SUMDIAM_BUDGET must be a count, got {v:?}"))),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

pub fn induce_cmd(a: &InduceArgs) -> CliResult<Outcome> {
    no_csv(a.format)?;
    if a.k >= 3 {
        let r = induce_hyper(&a.labels, a.k)?;
        let edges: Vec<Vec<i64>> = r.label_edges().into_iter().collect();
        return Ok(Outcome::ok(match a.format {
            Format::Json => to_json(&json!({
                "labels": a.labels,
                "k": a.k,
                "edges": edges,
                "isolated": r.isolated_labels,
                "isolate_count": r.isolate_count,
            })),
            _ => {
                let shown: Vec<String> = edges.iter().map(|e| join_dash(e)).collect();
                format!(
                    "edges: {}\nisolated: {}",
                    shown.join(" "),
                    join_comma(&r.isolated_labels)
                )
            }
        }));
    }
    if a.k != 2 {
        return Err(CliError::Usage("--k must be at least 2".into()));
    }
    let r = induce(&a.labels);
    let edges: Vec<[i64; 2]> = r.label_edges().into_iter().map(|(u, v)| [u, v]).collect();
    Ok(Outcome::ok(match a.format {
        Format::Json => to_json(&json!({
            "labels": a.labels,
            "edges": edges,
            "isolated": r.isolated_labels,
            "isolate_count": r.isolate_count,
        })),
        _ => {
            let shown: Vec<String> = edges.iter().map(|e| join_dash(e)).collect();
            format!("edges: {}\nisolated: {}", shown.join(" "), join_comma(&r.isolated_labels))
        }
    }))
}

fn join_comma(v: &[i64]) -> String {
    v.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
}

fn join_dash(v: &[i64]) -> String {
    v.iter().map(i64::to_string).collect::<Vec<_>>().join("-")
}

pub fn verify_cmd(a: &VerifyArgs) -> CliResult<Outcome> {
    no_csv(a.format)?;
    let target = parse_target(&a.target)?;
    let described = target.describe();
    let (valid, isolates) = match target {
        ParsedTarget::Hyper(h) => {
            let r = induce_hyper(&a.labels, h.k())?;
            let count_ok = a.isolates.is_none_or(|k| k == r.isolate_count);
            (count_ok && hyper_isomorphic(&r.core, &h)?, r.isolate_count)
        }
        ParsedTarget::Family(spec) => {
            let g = generate(spec)?;
            let r = induce(&a.labels);
            let count_ok = a.isolates.is_none_or(|k| k == r.isolate_count);
            let shape_ok = if g.n() <= DEFAULT_ISO_CAP {
                is_valid_labeling(&a.labels, &g, None)?
            } else {
                recognize(&r.core_graph, spec)
            };
            (count_ok && shape_ok, r.isolate_count)
        }
        ParsedTarget::Graph(g) => {
            let r = induce(&a.labels);
            (is_valid_labeling(&a.labels, &g, a.isolates)?, r.isolate_count)
        }
    };
    let stdout = match a.format {
        Format::Json => to_json(&json!({
            "labels": a.labels,
            "target": described,
            "valid": valid,
            "isolate_count": isolates,
            "range": a.labels.range(),
        })),
        _ => format!(
            "{}: {} for {} ({} isolates, range {})",
            a.labels,
            if valid { "valid" } else { "invalid" },
            described,
            isolates,
            a.labels.range()
        ),
    };
    Ok(Outcome { stdout, stderr: Vec::new(), ok: valid })
}

fn need_n(a: &ConstructArgs) -> CliResult<usize> {
    a.n.ok_or_else(|| CliError::Usage(format!("{} needs --n", a.name)))
}

pub fn construct_cmd(a: &ConstructArgs) -> CliResult<Outcome> {
    no_csv(a.format)?;
    if a.name == "hyper-general" {
        let ParsedTarget::Hyper(h) = parse_target(&a.target)? else {
            return Err(CliError::Usage("hyper-general needs a hypergraph --graph file".into()));
        };
        let report = hyper_general(&h)?;
        let verified = if a.verify {
            let r = induce_hyper(&report.labeling, h.k())?;
            Some(r.isolate_count == h.edge_count() && hyper_isomorphic(&r.core, &h)?)
        } else {
            None
        };
        let mut value = serde_json::to_value(&report).expect("report serializes");
        return Ok(finish_report(a, &mut value, &report.labeling, report.achieved_range,
            report.claimed_range_bound, report.isolate_count, verified));
    }
    let report: ConstructionReport = match a.name.as_str() {
        "spum-path-even" => spum_path_even(need_n(a)?)?,
        "sd-path" => sd_path(need_n(a)?)?,
        "spum-cycle4" => spum_cycle4()?,
        "ispum-cycle-odd" => ispum_cycle_odd(need_n(a)?)?,
        "spum-matching" => spum_matching(need_n(a)?)?,
        "ispum-matching" => ispum_matching(need_n(a)?)?,
        "sd-general" => sd_general(&parse_target(&a.target)?.simple()?.1)?,
        other => return Err(CliError::Usage(format!("unknown construction {other:?}"))),
    };
    let verified = if a.verify { Some(independent_check(&report)?) } else { None };
    let mut value = serde_json::to_value(&report).expect("report serializes");
    Ok(finish_report(
        a,
        &mut value,
        &report.labeling,
        report.achieved_range,
        report.claimed_range_bound,
        report.isolate_count,
        verified,
    ))
}

fn independent_check(report: &ConstructionReport) -> CliResult<bool> {
    let r = induce(&report.labeling);
    if r.isolate_count != report.isolate_count {
        return Ok(false);
    }
    if report.target.n() <= DEFAULT_ISO_CAP {
        return Ok(is_valid_labeling(&report.labeling, &report.target, None)?);
    }
    // large family members: compare degree sequences and component counts
    let mut a = r.core_graph.degrees();
    let mut b = report.target.degrees();
    a.sort_unstable();
    b.sort_unstable();
    let count = |g: &SimpleGraph| g.components().into_iter().max().map_or(0, |c| c + 1);
    Ok(a == b
        && r.core_graph.edge_count() == report.target.edge_count()
        && count(&r.core_graph) == count(&report.target))
}

fn finish_report(
    a: &ConstructArgs,
    value: &mut Value,
    labeling: &Labeling,
    achieved: i64,
    bound: i64,
    isolates: usize,
    verified: Option<bool>,
) -> Outcome {
    let ok = verified.unwrap_or(true);
    let stdout = match a.format {
        Format::Json => {
            let obj = value.as_object_mut().expect("report is an object");
            obj.insert("name".into(), json!(a.name));
            if let Some(v) = verified {
                obj.insert("verified".into(), json!(v));
            }
            to_json(value)
        }
        _ => {
            let mut s = format!(
                "{}: {labeling}\nrange {achieved} (bound {bound}), {isolates} isolates, valid=true",
                a.name
            );
            if let Some(v) = verified {
                let _ = write!(s, "\nverified: {v}");
            }
            s
        }
    };
    Outcome { stdout, stderr: Vec::new(), ok }
}

fn render_certificate(cert: &SearchCertificate, format: Format) -> String {
    match format {
        Format::Json => cert.without_timing().to_json(),
        _ => format!(
            "{}({}) = {}\nwitness: {}\nexhausted below: {}\ncandidates examined: {}\nwindow: {}",
            cert.invariant,
            cert.target,
            cert.value,
            cert.witness,
            cert.exhausted_below,
            cert.candidates_examined,
            cert.window_bound_used
        ),
    }
}

fn timing(cert: &SearchCertificate) -> Vec<String> {
    cert.wall_time_ms.map(|ms| format!("wall time: {ms} ms")).into_iter().collect()
}

pub fn search_cmd(a: &SearchArgs) -> CliResult<Outcome> {
    no_csv(a.format)?;
    let budget = budget()?;
    let target = parse_target(&a.target)?;
    if let ParsedTarget::Hyper(h) = &target {
        if a.invariant != Invariant::Sd {
            return Err(CliError::Usage("hypergraph search supports only sd".into()));
        }
        let opts = HyperSearch { max_range: a.max_range, jobs: a.jobs, budget };
        let cert = search_hyper_sd_with(h, &opts)?;
        return Ok(Outcome {
            stdout: render_certificate(&cert, a.format),
            stderr: timing(&cert),
            ok: true,
        });
    }
    let (target, _) = target.simple()?;
    let isolates = match a.invariant {
        Invariant::Spum => a.sigma.or(a.isolates),
        Invariant::Ispum => a.zeta.or(a.isolates),
        _ => None,
    };
    if a.invariant.fixed_isolates() && isolates.is_none() && matches!(target, Target::Graph(_)) {
        let flag = if a.invariant == Invariant::Spum { "--sigma" } else { "--zeta" };
        return Err(CliError::Usage(format!("{} of a graph file needs {flag}", a.invariant)));
    }
    let mut p = SearchProblem::new(a.invariant, target)
        .jobs(a.jobs)
        .budget(budget)
        .doubling_prune(a.doubling_prune);
    if let Some(k) = isolates {
        p = p.isolates(k);
    }
    if let Some(x) = a.max_range {
        p = p.max_range(x);
    }
    if let Some(x) = a.start_range {
        p = p.start_range(x);
    }
    let cert = solve(&p)?;
    Ok(Outcome { stdout: render_certificate(&cert, a.format), stderr: timing(&cert), ok: true })
}

pub fn table_cmd(a: &TableArgs) -> CliResult<Outcome> {
    let name = a
        .positional
        .or(a.name)
        .ok_or_else(|| CliError::Usage("missing table name".into()))?;
    let rows = reproduce_table_with(name, a.to, a.jobs, budget()?)?;
    let stdout = match a.format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["n", "witness", "value"]).expect("in-memory write");
            for r in &rows {
                w.write_record([r.n.to_string(), r.witness.to_string(), r.value.to_string()])
                    .expect("in-memory write");
            }
            let bytes = w.into_inner().expect("in-memory flush");
            String::from_utf8(bytes).expect("csv is utf-8").trim_end().to_string()
        }
        Format::Json => to_json(&rows),
        Format::Text => {
            let width = rows.iter().map(|r| r.witness.to_string().len()).max().unwrap_or(7).max(7);
            let mut s = format!("{:>3}  {:<width$}  value", "n", "witness");
            for r in &rows {
                let _ = write!(s, "\n{:>3}  {:<width$}  {}", r.n, r.witness.to_string(), r.value);
            }
            s
        }
    };
    Ok(Outcome::ok(stdout))
}

pub fn bounds_cmd(a: &BoundsArgs) -> CliResult<Outcome> {
    no_csv(a.format)?;
    let target = parse_target(&a.target)?;
    let described = target.describe();
    let value = match target {
        ParsedTarget::Hyper(h) => json!({
            "target": described,
            "n": h.n(),
            "k": h.k(),
            "sd_lower_bound": hyper_sd_lower_bound(&h)?,
        }),
        ParsedTarget::Family(spec) => {
            let g = generate(spec)?;
            let mut v = graph_bounds(&described, &g)?;
            v["known"] = serde_json::to_value(known_values(spec)).expect("known values serialize");
            v
        }
        ParsedTarget::Graph(g) => graph_bounds(&described, &g)?,
    };
    let stdout = match a.format {
        Format::Json => to_json(&value),
        _ => {
            let obj = value.as_object().expect("bounds object");
            let mut lines = Vec::new();
            for (k, v) in obj {
                if k == "known" {
                    for (name, iv) in v.as_object().expect("known object") {
                        lines.push(format!("known {name}: {}", render_known(iv)));
                    }
                } else {
                    lines.push(format!("{k}: {}", v.as_str().map_or(v.to_string(), str::to_string)));
                }
            }
            lines.join("\n")
        }
    };
    Ok(Outcome::ok(stdout))
}

fn render_known(v: &Value) -> String {
    if v.is_null() {
        return "?".into();
    }
    if let Some(n) = v.as_i64() {
        return n.to_string();
    }
    let end = |k: &str| v.get(k).and_then(Value::as_i64).map_or("?".into(), |x| x.to_string());
    let (lo, hi) = (end("lo"), end("hi"));
    if lo == hi && lo != "?" {
        lo
    } else {
        format!("[{lo}, {hi}]")
    }
}

fn graph_bounds(described: &str, g: &SimpleGraph) -> CliResult<Value> {
    Ok(json!({
        "target": described,
        "n": g.n(),
        "edges": g.edge_count(),
        "max_degree": g.max_degree(),
        "min_degree": g.min_degree(),
        "sd_lower_bound": sd_lower_bound(g)?,
        "isd_lower_bound": isd_lower_bound(g)?,
    }))
}

fn second(a: &CombineArgs) -> CliResult<(Labeling, SimpleGraph)> {
    let l = a
        .labels2
        .clone()
        .ok_or_else(|| CliError::Usage("this op needs --labels2".into()))?;
    let (_, g) =
        target_from(a.target2.as_deref(), a.graph2.as_deref(), "of --target2 or --graph2")?
            .simple()?;
    Ok((l, g))
}

fn edge_arg(a: &CombineArgs) -> CliResult<(usize, usize)> {
    match a.neighbors[..] {
        [u, v] => Ok((u, v)),
        _ => Err(CliError::Usage("edge ops need --neighbors u,v".into())),
    }
}

pub fn combine_cmd(a: &CombineArgs) -> CliResult<Outcome> {
    no_csv(a.format)?;
    let (_, g) = parse_target(&a.target)?.simple()?;
    let l = &a.labels;
    if a.op == Op::Translate {
        let x = a.x.ok_or_else(|| CliError::Usage("translate needs --x".into()))?;
        let out = translate(l, &g, x)?;
        return Ok(Outcome::ok(match a.format {
            Format::Json => to_json(&json!({ "labeling": out, "range": out.range() })),
            _ => format!("{out}\nrange {}", out.range()),
        }));
    }
    let report = match a.op {
        Op::UnionScaled => {
            let (l2, g2) = second(a)?;
            disjoint_union_scaled(l, &g, &l2, &g2)?
        }
        Op::UnionTranslated => {
            let (l2, g2) = second(a)?;
            disjoint_union_translated(l, &g, &l2, &g2)?
        }
        Op::Join => {
            let (l2, g2) = second(a)?;
            join(l, &g, &l2, &g2)?
        }
        Op::AddIsolated => {
            let k = a.k.ok_or_else(|| CliError::Usage("add-isolated needs --k".into()))?;
            add_isolated(l, &g, k)?
        }
        Op::AddVertex => add_vertex(l, &g, &a.neighbors)?,
        Op::DeleteVertex => match a.neighbors[..] {
            [v] => modify(l, &g, &Modification::DeleteVertex(v))?,
            _ => return Err(CliError::Usage("delete-vertex needs one --neighbors id".into())),
        },
        Op::InducedSubgraph => modify(l, &g, &Modification::InducedSubgraph(a.neighbors.clone()))?,
        Op::DeleteEdge => {
            let (u, v) = edge_arg(a)?;
            modify(l, &g, &Modification::DeleteEdge(u, v))?
        }
        Op::ContractEdge => {
            let (u, v) = edge_arg(a)?;
            modify(l, &g, &Modification::ContractEdge(u, v))?
        }
        Op::AddEdge => {
            let (u, v) = edge_arg(a)?;
            modify(l, &g, &Modification::AddEdge(u, v))?
        }
        Op::Translate => unreachable!("handled above"),
    };
    Ok(Outcome::ok(match a.format {
        Format::Json => to_json(&report),
        _ => format!(
            "{}\ntarget: {}\nrange {} (bound {}), {} isolates",
            report.labeling,
            report.target.to_json(),
            report.achieved_range,
            report.claimed_range_bound,
            report.isolate_count
        ),
    }))
}

pub fn conjecture_cmd(a: &ConjectureArgs) -> CliResult<Outcome> {
    no_csv(a.format)?;
    let report = check_conjecture_with(a.name, a.n, a.jobs, budget()?)?;
    let stdout = match a.format {
        Format::Json => to_json(&report),
        _ => format!(
            "n = {}: conjectured {}, searched {} ({})\nwitness: {}",
            report.n,
            report.conjectured,
            report.value,
            if report.matches { "agrees" } else { "disagrees" },
            report.witness
        ),
    };
    Ok(Outcome { stdout, stderr: Vec::new(), ok: report.matches })
}
