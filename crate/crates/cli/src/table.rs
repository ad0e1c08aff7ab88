//! Plain-text rendering for `--table`.

use std::fmt::Write;

use boundary_spectra::Verdict;

use crate::report::{ResultItem, RunReport};

fn fixed(v: f64) -> String {
    let s = format!("{v:.10}");
    // drop the sign of values that round to zero
    if s.trim_start_matches('-').bytes().all(|b| b == b'0' || b == b'.') {
        s.trim_start_matches('-').to_string()
    } else {
        s
    }
}

fn num(x: Option<f64>) -> String {
    x.map_or_else(|| "-".into(), fixed)
}

fn list(values: &[f64]) -> String {
    values.iter().map(|&v| fixed(v)).collect::<Vec<_>>().join(", ")
}

fn verdict(v: &Verdict) -> String {
    match v {
        Verdict::Holds => "holds".into(),
        Verdict::FailsAt(idx) => format!("FAILS at {idx:?}"),
        Verdict::NotApplicable(reason) => format!("not applicable ({reason})"),
    }
}

pub fn render(report: &RunReport) -> String {
    let mut out = String::new();
    if let Some(d) = &report.graph_digest {
        let _ = writeln!(out, "graph sha256 {d}");
    }
    for item in &report.results {
        render_item(&mut out, item);
    }
    out
}

fn render_item(out: &mut String, item: &ResultItem) {
    match item {
        ResultItem::Valid(s) => {
            let _ = writeln!(
                out,
                "valid: {} vertices, {} edges, boundary {:?}, unit weight {}, normalized {}",
                s.vertices, s.edges, s.boundary, s.unit_weight, s.normalized
            );
        }
        ResultItem::Invalid(e) => {
            let _ = writeln!(out, "invalid: {}", e.error);
        }
        ResultItem::Spectrum { operator, eigenvalues } => {
            let _ = writeln!(out, "{operator:?}: [{}]", list(eigenvalues));
        }
        ResultItem::SingularValues { singular_values } => {
            let _ = writeln!(out, "singular values of Deg^-1/2 A_Omega: [{}]", list(singular_values));
        }
        ResultItem::Certificate(c) => {
            let variant = c.variant.as_deref().map(|v| format!(" [{v}]")).unwrap_or_default();
            let _ = writeln!(out, "{}{variant}: {} (tolerance {:e})", c.theorem, verdict(&c.verdict), c.tolerance);
            if !c.records.is_empty() {
                let _ = writeln!(out, "  {:>3}  {:<28} {:>16} {:>16} {:>16} {:>16}  eq", "i", "quantity", "value", "lower", "upper", "margin");
            }
            for r in &c.records {
                let _ = writeln!(
                    out,
                    "  {:>3}  {:<28} {:>16} {:>16} {:>16} {:>16}  {}",
                    r.index,
                    r.quantity,
                    num(Some(r.value)),
                    num(r.lower),
                    num(r.upper),
                    num(Some(r.margin)),
                    if r.equality { "=" } else { "" }
                );
            }
        }
        ResultItem::Rigidity(r) => {
            let _ = writeln!(out, "{} rigidity: conclusion {}", r.theorem, r.conclusion);
            for c in &r.conditions {
                let _ = writeln!(out, "  {:<6} {}", if c.holds { "holds" } else { "fails" }, c.name);
            }
            if let Some(o) = r.observed_equality {
                let _ = writeln!(out, "  observed equality {o}");
            }
        }
        ResultItem::Curvature { on, result } => {
            let _ = writeln!(out, "{:?} on {on}: minimum {}", result.kind, fixed(result.global_min));
            for c in &result.per_location {
                let _ = writeln!(out, "  {:?} {}", c.vertices, fixed(c.value));
            }
        }
        ResultItem::Operator { operator, order, measure, rows } => {
            let _ = writeln!(out, "{operator:?} on vertices {order:?}, measure [{}]", list(measure));
            for row in rows {
                let _ = writeln!(out, "  [{}]", list(row));
            }
        }
        ResultItem::Audit(a) => {
            let _ = writeln!(
                out,
                "{} instances (unit {}, normalized {}, lognormal {}), {} certificates, {} not applicable",
                a.instances, a.models.unit, a.models.normalized, a.models.lognormal, a.certificates, a.not_applicable
            );
            let _ = writeln!(out, "failures: {}, worst relative margin {:e}", a.failure_count, a.worst_relative_margin);
            for f in &a.failures {
                let _ = writeln!(out, "  instance {} ({:?}): {} margin {:e}", f.index, f.model, f.theorem, f.min_margin);
            }
            if !a.rigidity_inconsistencies.is_empty() {
                let _ = writeln!(out, "rigidity inconsistencies at {:?}", a.rigidity_inconsistencies);
            }
        }
    }
}
