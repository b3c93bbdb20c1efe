use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use qtlink::catalog::{self, CatalogKind};
use qtlink::coloring::{ArcColoring, ColoringProblem};
use qtlink::exec::Exec;
use qtlink::homology::{Cochain2, CocycleCondition, QuandleComplex};
use qtlink::invariant::{cocycle_invariant, refined_invariant, InvariantMode, InvariantReport};
use qtlink::quandle::{Elem, FiniteQuandle, QuandleError};
use serde_json::{json, Value};

use crate::inputs;

pub enum Failure {
    /// Bad invocation or unreadable input; exit code 2.
    Usage(String),
    /// Input that fails validation; exit code 1.
    Invalid(String),
}

/// A command's result in both output formats.
pub struct Output {
    pub text: String,
    pub doc: Value,
    /// `false` turns a printed report into exit code 1.
    pub ok: bool,
}

fn invalid(e: impl std::fmt::Display) -> Failure {
    Failure::Invalid(e.to_string())
}

fn labels(q: &FiniteQuandle, xs: &[Elem]) -> Vec<String> {
    xs.iter().map(|&x| q.label(x)).collect()
}

fn mode_name(mode: InvariantMode) -> &'static str {
    match mode {
        InvariantMode::LinkHomotopy => "link-homotopy",
        InvariantMode::Ambient => "ambient",
    }
}

fn with_modulus(theta: Cochain2, m: Option<u64>) -> Result<Cochain2, Failure> {
    match m {
        Some(m) if m != theta.modulus() => theta.with_modulus(m).map_err(invalid),
        _ => Ok(theta),
    }
}

pub fn check_quandle(slot: &str, inn_cap: usize) -> Result<Output, Failure> {
    let q = match inputs::quandle_result(slot)? {
        Ok(q) => q,
        Err(QuandleError::Axiom(v)) => {
            return Ok(Output {
                text: format!("quandle: invalid\nviolation: {v}\n"),
                doc: json!({ "quandle": "fails", "violation": v.to_string() }),
                ok: false,
            })
        }
        Err(e) => return Err(invalid(format!("{slot}: {e}"))),
    };
    let witness = q.quasi_triviality_witness();
    let orbits = q.orbits();
    let inn = q.inner_group(inn_cap);
    let mut text = String::from("quandle: ok\n");
    match witness {
        None => text.push_str("quasi-trivial: yes\n"),
        Some((x, y)) => {
            let _ = writeln!(text, "quasi-trivial: no ({} * {} != {})", q.label(x), q.label(y), q.label(x));
        }
    }
    let _ = writeln!(text, "orbits: {}", orbits.len());
    if inn.truncated {
        let _ = writeln!(text, "inn-order: >= {} (truncated)", inn.order());
    } else {
        let _ = writeln!(text, "inn-order: {}", inn.order());
    }
    let doc = json!({
        "quandle": "ok",
        "size": q.size(),
        "quasi_trivial": witness.is_none(),
        "witness": witness.map(|(x, y)| labels(&q, &[x, y])),
        "orbits": orbits.orbit_members.iter().map(|o| labels(&q, o)).collect::<Vec<_>>(),
        "inn_order": inn.order(),
        "inn_truncated": inn.truncated,
    });
    Ok(Output { text, doc, ok: true })
}

pub fn check_cocycle(qs: &str, cs: &str, mode: InvariantMode, m: Option<u64>) -> Result<Output, Failure> {
    let q = inputs::quandle(qs)?;
    let theta = with_modulus(inputs::cochain(cs)?, m)?;
    let cx = QuandleComplex::new(&q, mode.degeneracy()).map_err(invalid)?;
    let report = cx.check_cocycle(&theta).map_err(invalid)?;
    let mut text = format!("mode: {}\nmodulus: {}\n", mode_name(mode), theta.modulus());
    let mut conditions = serde_json::Map::new();
    for (cond, name) in [(CocycleCondition::C1, "C1"), (CocycleCondition::C2, "C2"), (CocycleCondition::C3, "C3")] {
        let count = report.count(cond);
        match report.first(cond) {
            None => {
                let _ = writeln!(text, "{name}: ok");
            }
            Some(v) => {
                let _ = writeln!(text, "{name}: {count} violations, first at ({})", labels(&q, &v.witness).join(", "));
            }
        }
        conditions.insert(
            name.to_string(),
            json!({ "violations": count, "first": report.first(cond).map(|v| labels(&q, &v.witness)) }),
        );
    }
    let ok = report.is_cocycle();
    let _ = writeln!(text, "cocycle: {}", if ok { "yes" } else { "no" });
    let doc = json!({
        "mode": mode_name(mode),
        "modulus": theta.modulus(),
        "conditions": conditions,
        "cocycle": ok,
    });
    Ok(Output { text, doc, ok })
}

pub fn colorings(qs: &str, ls: &str, dump: bool, orbits: Option<&[usize]>, exec: Exec) -> Result<Output, Failure> {
    let q = inputs::quandle(qs)?;
    let d = inputs::link(ls)?;
    let problem = match orbits {
        None => ColoringProblem::new(&d, &q),
        Some(t) => ColoringProblem::in_orbits(&d, &q, t).map_err(invalid)?,
    };
    let mut text = String::new();
    let mut doc = json!({ "components": d.component_count() });
    let count = if dump {
        let all: Vec<ArcColoring> = problem.collect(exec);
        for a in &all {
            let _ = writeln!(text, "{}", a.dump());
        }
        doc["colorings"] = json!(all.iter().map(ArcColoring::dump).collect::<Vec<_>>());
        all.len() as u64
    } else {
        problem.count(exec)
    };
    let _ = writeln!(text, "colorings: {count}");
    doc["count"] = json!(count);
    Ok(Output { text, doc, ok: true })
}

fn report_doc(r: &InvariantReport) -> Value {
    let comps: Vec<Value> = r
        .components
        .iter()
        .map(|m| Value::Array(m.iter().map(|(v, c)| json!({ "value": v, "count": c })).collect()))
        .collect();
    json!({ "modulus": r.modulus, "colorings": r.colorings, "components": comps })
}

pub fn invariant(
    qs: &str,
    cs: &str,
    ls: &str,
    mode: InvariantMode,
    m: Option<u64>,
    exec: Exec,
) -> Result<Output, Failure> {
    let q = inputs::quandle(qs)?;
    let theta = with_modulus(inputs::cochain(cs)?, m)?;
    let d = inputs::link(ls)?;
    let r = cocycle_invariant(&d, &q, &theta, mode, exec).map_err(invalid)?;
    let text = format!("colorings: {}\n{r}", r.colorings);
    let mut doc = report_doc(&r);
    doc["mode"] = json!(mode_name(mode));
    Ok(Output { text, doc, ok: true })
}

pub fn refined(
    qs: &str,
    cs: &str,
    ls: &str,
    mode: InvariantMode,
    m: Option<u64>,
    exec: Exec,
) -> Result<Output, Failure> {
    let q = inputs::quandle(qs)?;
    let theta = with_modulus(inputs::cochain(cs)?, m)?;
    let d = inputs::link(ls)?;
    let r = refined_invariant(&d, &q, &theta, mode, exec).map_err(invalid)?;
    let entries: Vec<Value> = r
        .entries
        .iter()
        .map(|(t, rep)| {
            let mut v = report_doc(rep);
            v["orbits"] = json!(t);
            v
        })
        .collect();
    let doc =
        json!({ "mode": mode_name(mode), "modulus": r.modulus, "orbit_count": r.orbit_count, "entries": entries });
    Ok(Output { text: r.to_text(), doc, ok: true })
}

pub fn cohomology(
    qs: &str,
    cs: Option<&str>,
    mode: InvariantMode,
    m: Option<u64>,
    exec: Exec,
) -> Result<Output, Failure> {
    let q = inputs::quandle(qs)?;
    let theta = cs.map(inputs::cochain).transpose()?;
    let modulus = m.or(theta.as_ref().map(Cochain2::modulus)).unwrap_or(2);
    let cx = QuandleComplex::new(&q, mode.degeneracy()).map_err(invalid)?.with_exec(exec);
    let h = cx.cohomology_h2(modulus).map_err(invalid)?;
    let mut text = format!("mode: {}\nH2: {h}\n", mode_name(mode));
    let mut doc = json!({ "mode": mode_name(mode), "modulus": modulus, "factors": h.factors, "h2": h.to_string() });
    if let Some(r) = h.rank {
        let _ = writeln!(text, "rank: {r}");
        doc["rank"] = json!(r);
    }
    if let Some(theta) = theta {
        let theta = with_modulus(theta, Some(modulus))?;
        match cx.is_coboundary(&theta).map_err(invalid)? {
            None => {
                text.push_str("coboundary: no\n");
                doc["coboundary"] = Value::Null;
            }
            Some(f) => {
                let vals: Vec<String> = f.values.iter().map(i64::to_string).collect();
                let _ = writeln!(text, "coboundary: yes (f = {})", vals.join(" "));
                doc["coboundary"] = json!(f.values);
            }
        }
    }
    Ok(Output { text, doc, ok: true })
}

pub fn linking(ls: &str) -> Result<Output, Failure> {
    let d = inputs::link(ls)?;
    let lk = d.linking_matrix().map_err(invalid)?;
    let mut text = format!("components: {}\nwrithe: {}\n", d.component_count(), d.writhe());
    for row in &lk {
        let cells: Vec<String> = row.iter().map(i64::to_string).collect();
        let _ = writeln!(text, "{}", cells.join(" "));
    }
    let doc = json!({ "components": d.component_count(), "writhe": d.writhe(), "linking": lk });
    Ok(Output { text, doc, ok: true })
}

pub fn flip(ls: &str, crossing: usize, output: Option<&Path>) -> Result<Output, Failure> {
    let d = inputs::link(ls)?;
    if crossing == 0 || crossing > d.crossing_count() {
        return Err(Failure::Usage(format!("crossing {crossing} out of range 1..={}", d.crossing_count())));
    }
    let f = d.flip_crossing(crossing - 1).map_err(invalid)?;
    let pd = f.diagram.to_pd_text();
    let self_crossing = if f.self_crossing { "yes" } else { "no" };
    let mut doc = json!({ "crossing": crossing, "self_crossing": f.self_crossing, "link": pd });
    let text = match output {
        None => pd,
        Some(path) => {
            fs::write(path, &pd).map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))?;
            doc["output"] = json!(path.display().to_string());
            format!("crossing: {crossing}\nself-crossing: {self_crossing}\nwritten: {}\n", path.display())
        }
    };
    Ok(Output { text, doc, ok: true })
}

pub fn catalog(kind: Option<CatalogKind>) -> Result<Output, Failure> {
    let mut text = String::new();
    let mut items = Vec::new();
    for e in catalog::entries().filter(|e| kind.is_none_or(|k| e.kind == k)) {
        let _ = writeln!(text, "{:<8} {:<14} {}", e.kind.as_str(), e.name, e.description);
        items.push(json!({ "kind": e.kind.as_str(), "name": e.name, "description": e.description }));
    }
    Ok(Output { text, doc: Value::Array(items), ok: true })
}
