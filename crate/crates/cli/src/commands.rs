use std::time::{Duration, Instant};

use jetscheme::analysis::{self, Status, SuiteOptions, Verdict};
use jetscheme::groebner::krull_dim;
use jetscheme::jets::{jacobian_ideal, jetify, JetIdeal};
use jetscheme::par::Parallelism;
use jetscheme::{Budget, Coeff, DimReport, Field, Ideal};
use serde_json::{json, Map, Value};

use crate::error::CliError;
use crate::spec::JobSpec;

pub struct Ctx {
    pub limit: Duration,
    pub verbose: bool,
}

impl Ctx {
    fn budget(&self) -> Budget {
        Budget::default().with_time_limit(self.limit)
    }
}

pub struct Report {
    lines: Vec<String>,
    json: Map<String, Value>,
    pub exit: u8,
}

impl Report {
    fn new() -> Self {
        Report {
            lines: Vec::new(),
            json: Map::new(),
            exit: 0,
        }
    }

    fn line(&mut self, s: impl Into<String>) {
        self.lines.push(s.into());
    }

    fn set(&mut self, key: &str, v: impl Into<Value>) {
        self.json.insert(key.to_string(), v.into());
    }

    fn timing(&mut self, ctx: &Ctx, start: Instant) {
        if ctx.verbose {
            let ms = start.elapsed().as_millis() as u64;
            self.line(format!("elapsed: {ms} ms"));
            self.set("elapsed_ms", ms);
        }
    }

    pub fn render(&self, json: bool) -> String {
        if json {
            let mut s = serde_json::to_string_pretty(&self.json).expect("serializable");
            s.push('\n');
            s
        } else {
            self.lines.iter().map(|l| format!("{l}\n")).collect()
        }
    }
}

fn jets(job: &JobSpec) -> Result<JetIdeal, CliError> {
    Ok(jetify(&job.ideal()?, job.m)?)
}

fn dim_json(r: &DimReport) -> Value {
    json!({ "dim": r.dim, "witness": r.witness })
}

fn basis_strings(ideal: &Ideal, budget: &Budget) -> Result<Vec<String>, CliError> {
    Ok(ideal
        .groebner(budget)?
        .elements()
        .iter()
        .map(|g| g.to_string())
        .collect())
}

pub fn compute(ctx: &Ctx, job: &JobSpec) -> Result<Report, CliError> {
    let start = Instant::now();
    let jets = jets(job)?;
    let mut r = Report::new();
    let (mut weights, mut equations) = (Vec::new(), Vec::new());
    for (e, f) in jets.listing() {
        r.line(format!("[{e}] {f}"));
        weights.push(e);
        equations.push(f.to_string());
    }
    r.set("weights", weights);
    r.set("equations", equations);
    r.timing(ctx, start);
    Ok(r)
}

pub fn dim(ctx: &Ctx, job: &JobSpec) -> Result<Report, CliError> {
    let start = Instant::now();
    let jets = jets(job)?;
    let report = krull_dim(jets.ideal(), &ctx.budget())?;
    let mut r = Report::new();
    r.line(report.dim.to_string());
    if ctx.verbose {
        r.line(format!("witness: {}", report.witness.join(", ")));
    }
    r.json = dim_json(&report).as_object().cloned().unwrap_or_default();
    r.timing(ctx, start);
    Ok(r)
}

pub fn member(ctx: &Ctx, job: &JobSpec, with_square: bool) -> Result<Report, CliError> {
    let start = Instant::now();
    let src = job
        .f
        .as_deref()
        .ok_or_else(|| CliError::Input("member needs --f".into()))?;
    let jets = jets(job)?;
    let f = jets
        .context()
        .jet_ring()
        .parse(src)
        .map_err(|e| CliError::Input(e.to_string()))?;
    let budget = ctx.budget();
    let inside = jets.ideal().contains(&f, &budget)?;
    let mut text = if inside { "member" } else { "not a member" }.to_string();
    let mut r = Report::new();
    r.set("member", inside);
    r.set("normal_form", jets.ideal().normal_form(&f, &budget)?.to_string());
    if with_square {
        let sq = jets.ideal().contains(&f.pow(2), &budget)?;
        text.push_str(if sq {
            "; square is a member"
        } else {
            "; square is not a member"
        });
        r.set("square_member", sq);
    }
    r.line(text);
    r.timing(ctx, start);
    Ok(r)
}

fn point_coords(job: &JobSpec) -> Result<Vec<Coeff>, CliError> {
    let coords = job
        .point
        .as_ref()
        .ok_or_else(|| CliError::Input("fiber needs --point".into()))?;
    let ring = job.ring()?;
    coords
        .iter()
        .map(|c| {
            let p = ring
                .parse(c)
                .map_err(|e| CliError::Input(format!("point coordinate `{c}`: {e}")))?;
            if !p.is_constant() {
                return Err(CliError::Input(format!("point coordinate `{c}` is not a constant")));
            }
            Ok(p.terms()
                .first()
                .map(|(_, c)| c.clone())
                .unwrap_or_else(|| ring.field().zero()))
        })
        .collect()
}

pub fn fiber(ctx: &Ctx, job: &JobSpec) -> Result<Report, CliError> {
    let start = Instant::now();
    let point = point_coords(job)?;
    let jets = jets(job)?;
    let fiber = jets.fiber_ideal(&point)?;
    let report = krull_dim(&fiber, &ctx.budget())?;
    let mut r = Report::new();
    r.line(report.dim.to_string());
    if ctx.verbose {
        r.line(format!("witness: {}", report.witness.join(", ")));
    }
    r.json = dim_json(&report).as_object().cloned().unwrap_or_default();
    r.timing(ctx, start);
    Ok(r)
}

fn ideal_report(ctx: &Ctx, ideal: &Ideal, report: &DimReport, start: Instant) -> Result<Report, CliError> {
    let basis = basis_strings(ideal, &ctx.budget())?;
    let mut r = Report::new();
    r.line(format!("dim {}", report.dim));
    r.line(format!("witness: {}", report.witness.join(", ")));
    for g in &basis {
        r.line(format!("  {g}"));
    }
    r.json = dim_json(report).as_object().cloned().unwrap_or_default();
    r.set("generators", basis);
    r.timing(ctx, start);
    Ok(r)
}

pub fn main_component(ctx: &Ctx, job: &JobSpec) -> Result<Report, CliError> {
    let start = Instant::now();
    let mc = analysis::main_component(&job.ideal()?, job.m, None, &ctx.budget())?;
    ideal_report(ctx, &mc.ideal, &mc.dim, start)
}

pub fn sing(ctx: &Ctx, job: &JobSpec) -> Result<Report, CliError> {
    let start = Instant::now();
    let jets = jets(job)?;
    let budget = ctx.budget();
    let sing = jacobian_ideal(jets.ideal(), &budget)?;
    let report = krull_dim(&sing, &budget)?;
    ideal_report(ctx, &sing, &report, start)
}

fn row(v: &Verdict, verbose: bool) -> String {
    let mut s = format!("{:<22} {}  {}", v.claim, v.status, v.computed_summary());
    if !v.expected.is_empty() {
        s.push_str(&format!("  [expected: {}]", v.expected));
    }
    if v.char_p() {
        s.push_str("  char p");
    }
    if !v.note.is_empty() {
        s.push_str(&format!("  ({})", v.note));
    }
    if verbose {
        s.push_str(&format!("  {} ms", v.elapsed.as_millis()));
    }
    s
}

fn verdict_json(v: &Verdict, verbose: bool) -> Value {
    let computed: Map<String, Value> = v
        .computed
        .iter()
        .map(|(k, val)| {
            let j = match val {
                analysis::Value::Int(n) => json!(n),
                analysis::Value::Bool(b) => json!(b),
                analysis::Value::Text(t) => json!(t),
            };
            (k.clone(), j)
        })
        .collect();
    let mut o = json!({
        "claim": v.claim,
        "status": v.status.to_string(),
        "computed": computed,
        "expected": v.expected,
        "field": v.field.to_string(),
        "char_p": v.char_p(),
        "note": v.note,
    });
    if verbose {
        o["elapsed_ms"] = json!(v.elapsed.as_millis() as u64);
    }
    o
}

pub fn paper_examples(
    ctx: &Ctx,
    field: Field,
    filter: Vec<String>,
    slow: bool,
    sequential: bool,
) -> Result<Report, CliError> {
    let ids = analysis::claim_ids();
    for f in &filter {
        if !ids.iter().any(|id| id == f || id.starts_with(&format!("{f}-"))) {
            return Err(CliError::Input(format!("no claim matches filter `{f}`")));
        }
    }
    let opts = SuiteOptions {
        field,
        filter,
        per_claim: ctx.limit,
        slow,
        parallelism: if sequential {
            Parallelism::Sequential
        } else {
            Parallelism::Parallel
        },
    };
    let start = Instant::now();
    let rows = analysis::run_suite(&opts);
    let mut r = Report::new();
    for v in &rows {
        r.line(row(v, ctx.verbose));
    }
    let count = |s: Status| rows.iter().filter(|v| v.status == s).count();
    let (pass, fail, skip) = (count(Status::Pass), count(Status::Fail), count(Status::Skipped));
    r.line(format!("{pass} passed, {fail} failed, {skip} skipped"));
    r.set(
        "rows",
        rows.iter().map(|v| verdict_json(v, ctx.verbose)).collect::<Vec<_>>(),
    );
    r.set("summary", json!({ "passed": pass, "failed": fail, "skipped": skip }));
    r.exit = if fail > 0 { 1 } else { 0 };
    r.timing(ctx, start);
    Ok(r)
}
