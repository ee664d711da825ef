//! Command implementations behind the `rankfour` binary. Each command returns
//! its JSON payload, a short human summary and an exit code.

use clap::{Parser, Subcommand, ValueEnum};
use rankfour::families::catalog::{evaluate, table1_targets, Verdict};
use rankfour::families::{self, params_closed_form, FamilyId, Limits, DEFAULT_MAX_V};
use rankfour::graph::io::{from_edgelist, from_graph6, to_edgelist, to_graph6};
use rankfour::graph::{check_drg, check_srg, Graph};
use rankfour::orbitals::{compute_orbitals, PermGroupAction};
use rankfour::schemes::symbolic::{dual_polar_symbolic, g2_symbolic, grassmann_f2, CertificateRange, DualPolarE};
use rankfour::schemes::{srg_union_criterion, tensor_from_int_array};
use rankfour::Error;
use serde::Serialize;
use serde_json::{json, Value};
use std::path::{Path, PathBuf};
use std::time::Instant;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_SCALE: i32 = 3;
pub const EXIT_INFEASIBLE: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "rankfour", version, about = "Build and verify rank four strongly regular graphs")]
pub struct Cli {
    /// Refuse constructions with more vertices than this.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_V)]
    pub max_v: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build a family member and write it to a file.
    Gen {
        family: String,
        #[arg(short, long)]
        output: PathBuf,
        #[arg(short, long, value_enum, default_value_t = Format::Graph6)]
        format: Format,
    },
    /// Check a family member or a graph file (graph6 or edge list).
    Verify { input: String },
    /// Intersection numbers of an array `b0,b1,..;c1,c2,..`, or one of the jobs
    /// `g2`, `dualpolar:<e>` (e in 1/2, 1, 3/2), `grassmann`.
    Scheme { job: String },
    /// Rebuild and check every catalogued graph.
    Table1,
    /// Orbitals of the permutation group in a `.gens` file.
    Orbitals { file: PathBuf },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Graph6,
    Edgelist,
}

/// What a command produced.
#[derive(Debug)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub summary: String,
}

impl Outcome {
    fn json(code: i32, payload: &Value, summary: impl Into<String>) -> Outcome {
        let stdout = serde_json::to_string_pretty(payload).expect("JSON values serialise") + "\n";
        Outcome { code, stdout, summary: summary.into() }
    }

    fn error(e: &Error) -> Outcome {
        let code = exit_code(e);
        Outcome { code, stdout: String::new(), summary: format!("error: {e}") }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::InvalidInput(_) | Error::Intransitive { .. } => EXIT_INPUT,
        Error::ScaleGuard { .. } => EXIT_SCALE,
        Error::InfeasibleArray(_) | Error::RelationViolated { .. } | Error::NonExactDivision(_) => EXIT_INFEASIBLE,
        _ => EXIT_FAIL,
    }
}

pub fn run(cli: &Cli) -> Outcome {
    let limits = Limits { max_v: cli.max_v };
    let result = match &cli.command {
        Command::Gen { family, output, format } => cmd_gen(family, output, *format, &limits),
        Command::Verify { input } => cmd_verify(input, &limits),
        Command::Scheme { job } => cmd_scheme(job),
        Command::Table1 => Ok(cmd_table1(&limits)),
        Command::Orbitals { file } => cmd_orbitals(file),
    };
    result.unwrap_or_else(|e| Outcome::error(&e))
}

fn read_input(path: &Path) -> Result<String, Error> {
    std::fs::read_to_string(path).map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))
}

pub fn cmd_gen(family: &str, output: &Path, format: Format, limits: &Limits) -> Result<Outcome, Error> {
    let id: FamilyId = family.parse()?;
    let g = families::build(&id, limits)?;
    let text = match format {
        Format::Graph6 => to_graph6(&g) + "\n",
        Format::Edgelist => to_edgelist(&g),
    };
    std::fs::write(output, text)
        .map_err(|e| Error::InvalidInput(format!("cannot write {}: {e}", output.display())))?;
    let payload = json!({
        "family": id.to_string(),
        "vertices": g.n(),
        "edges": g.edge_count(),
        "output": output.display().to_string(),
    });
    Ok(Outcome::json(EXIT_PASS, &payload, format!("{id}: wrote {} vertices to {}", g.n(), output.display())))
}

#[derive(Serialize)]
struct Check<T: Serialize> {
    #[serde(flatten)]
    verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    value: Option<T>,
}

fn load_graph(input: &str, limits: &Limits) -> Result<(Option<FamilyId>, Graph), Error> {
    let path = Path::new(input);
    if path.exists() {
        let text = read_input(path)?;
        let first = text.lines().find(|l| !l.trim().is_empty()).unwrap_or("");
        let g6 = path.extension().is_some_and(|e| e == "g6") || !first.trim().contains(char::is_whitespace);
        let g = if g6 { from_graph6(&text)? } else { from_edgelist(&text)? };
        return Ok((None, g));
    }
    let id: FamilyId = input.parse()?;
    let g = families::build(&id, limits)?;
    Ok((Some(id), g))
}

pub fn cmd_verify(input: &str, limits: &Limits) -> Result<Outcome, Error> {
    let start = Instant::now();
    let (id, g) = load_graph(input, limits)?;
    let srg = match check_srg(&g) {
        Ok(p) => Check { verdict: Verdict::Pass, value: Some(p) },
        Err(f) => Check { verdict: Verdict::Fail { witness: f.to_string() }, value: None },
    };
    let drg = match check_drg(&g) {
        Ok(a) => Check { verdict: Verdict::Pass, value: Some(a.to_string()) },
        Err(f) => Check { verdict: Verdict::Fail { witness: f.to_string() }, value: None },
    };
    let closed = match id.as_ref().map(params_closed_form) {
        None => Check { verdict: Verdict::Skipped { reason: "input is a graph file".into() }, value: None },
        Some(Err(e)) => Check { verdict: Verdict::Skipped { reason: e.to_string() }, value: None },
        Some(Ok(expected)) => {
            let verdict = match srg.value {
                Some(p) if p == expected => Verdict::Pass,
                Some(p) => Verdict::Fail { witness: format!("built SRG{p}, closed form SRG{expected}") },
                None => Verdict::Fail { witness: format!("not strongly regular, closed form SRG{expected}") },
            };
            Check { verdict, value: Some(expected) }
        }
    };
    // Distance-regular families are judged on the array, everything else on strong regularity.
    let drg_family = matches!(id, Some(FamilyId::DualPolarSp6 { .. }) | Some(FamilyId::Grassmann { .. }));
    let primary = match (&id, drg_family) {
        (Some(_), true) => drg.verdict.is_pass(),
        (Some(_), false) => srg.verdict.is_pass(),
        (None, _) => srg.verdict.is_pass() || drg.verdict.is_pass(),
    };
    let passed = primary && !matches!(closed.verdict, Verdict::Fail { .. });
    let name = id.as_ref().map_or_else(|| input.to_string(), |i| i.to_string());
    let payload = json!({
        "family": name,
        "tag": id.as_ref().map(|i| i.tag()),
        "vertices": g.n(),
        "srg": srg,
        "drg": drg,
        "closed_form": closed,
        "passed": passed,
        "millis": start.elapsed().as_millis() as u64,
    });
    let summary = match (&srg.value, &srg.verdict) {
        (Some(p), _) => format!("{name}: SRG{p}"),
        (None, Verdict::Fail { witness }) => format!("{name}: not strongly regular: {witness}"),
        _ => name.clone(),
    };
    Ok(Outcome::json(if passed { EXIT_PASS } else { EXIT_FAIL }, &payload, summary))
}

fn parse_array(s: &str) -> Result<(Vec<i64>, Vec<i64>), Error> {
    let (b, c) = s.split_once(';').ok_or_else(|| Error::InvalidInput(format!("array {s:?} needs a ';'")))?;
    let list = |part: &str| -> Result<Vec<i64>, Error> {
        part.split(',')
            .map(|t| t.trim().parse::<i64>().map_err(|_| Error::InvalidInput(format!("{t:?} is not an integer"))))
            .collect()
    };
    Ok((list(b)?, list(c)?))
}

pub fn cmd_scheme(job: &str) -> Result<Outcome, Error> {
    let job = job.trim();
    if job == "g2" {
        let r = g2_symbolic()?;
        let code = if r.passed() { EXIT_PASS } else { EXIT_FAIL };
        return Ok(Outcome::json(code, &json!({"job": "g2", "passed": r.passed(), "report": r}), "g2 identities"));
    }
    if let Some(e) = job.strip_prefix("dualpolar:") {
        let e: DualPolarE = e.parse()?;
        let r = dual_polar_symbolic(e)?;
        let code = if r.passed() { EXIT_PASS } else { EXIT_FAIL };
        let payload = json!({"job": format!("dualpolar:{e}"), "passed": r.passed(), "report": r});
        return Ok(Outcome::json(code, &payload, format!("dual polar e={e}")));
    }
    if job == "grassmann" {
        let r = grassmann_f2(CertificateRange::default())?;
        let code = if r.passed() { EXIT_PASS } else { EXIT_FAIL };
        let payload = json!({"job": "grassmann", "passed": r.passed(), "report": r});
        return Ok(Outcome::json(code, &payload, format!("grassmann: f2 = {}", r.f2)));
    }
    if !job.contains(';') {
        return Err(Error::InvalidInput(format!("unknown scheme job {job:?}")));
    }
    let (b, c) = parse_array(job)?;
    let t = tensor_from_int_array(&b, &c)?;
    let audit: Vec<Value> = t
        .relation_checks()
        .into_iter()
        .map(|(name, failure)| json!({"relation": name, "holds": failure.is_none()}))
        .collect();
    let unions = if t.rank() == 4 {
        let mut out = Vec::new();
        for i in 1..4 {
            let u = srg_union_criterion(&t, i)?;
            out.push(json!({
                "relation": i,
                "values": u.values.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                "all_equal": u.all_equal,
                "strongly_regular": u.strongly_regular,
            }));
        }
        json!({"status": "pass", "relations": out})
    } else {
        json!({"status": "skipped", "reason": format!("rank {} is not 4", t.rank())})
    };
    let payload = json!({"array": job, "tensor": t.to_json(), "audit": audit, "unions": unions});
    Ok(Outcome::json(EXIT_PASS, &payload, format!("{{{job}}}: rank {}", t.rank())))
}

pub fn cmd_table1(limits: &Limits) -> Outcome {
    let rows: Vec<_> = table1_targets().iter().map(|t| evaluate(t, limits)).collect();
    let count = |f: fn(&Verdict) -> bool| rows.iter().filter(|r| f(&r.verdict)).count();
    let passed = count(|v| v.is_pass());
    let failed = count(|v| matches!(v, Verdict::Fail { .. }));
    let skipped = count(|v| matches!(v, Verdict::Skipped { .. }));
    let mut summary = String::new();
    for r in &rows {
        let status = match &r.verdict {
            Verdict::Pass => "PASS".to_string(),
            Verdict::Fail { witness } => format!("FAIL ({witness})"),
            Verdict::Skipped { reason } => format!("SKIP ({reason})"),
        };
        summary.push_str(&format!("{:<22} {status}\n", r.family));
    }
    summary.push_str(&format!("{passed} passed, {failed} failed, {skipped} skipped"));
    let payload = json!({"rows": rows, "passed": passed, "failed": failed, "skipped": skipped});
    Outcome::json(if failed > 0 { EXIT_FAIL } else { EXIT_PASS }, &payload, summary)
}

pub fn cmd_orbitals(file: &Path) -> Result<Outcome, Error> {
    let action = PermGroupAction::from_gens(&read_input(file)?)?;
    let orbitals = compute_orbitals(&action)?;
    let lengths = orbitals.suborbit_lengths();
    let mut graphs = Vec::new();
    for c in 1..orbitals.rank() {
        if c > orbitals.paired(c) {
            continue;
        }
        let g = orbitals.orbital_graph(c)?;
        let check = match check_srg(&g) {
            Ok(p) => Check { verdict: Verdict::Pass, value: Some(p) },
            Err(f) => Check { verdict: Verdict::Fail { witness: f.to_string() }, value: None },
        };
        graphs.push(json!({"class": c, "paired": orbitals.paired(c), "length": lengths[c], "srg": check}));
    }
    let payload = json!({
        "degree": action.degree(),
        "generators": action.generators().len(),
        "rank": orbitals.rank(),
        "suborbit_lengths": lengths,
        "orbital_graphs": graphs,
    });
    Ok(Outcome::json(EXIT_PASS, &payload, format!("rank {}, suborbits {lengths:?}", orbitals.rank())))
}
