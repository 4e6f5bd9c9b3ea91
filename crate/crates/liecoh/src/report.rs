//! Deterministic text and JSON rendering of validation, cohomology and
//! sequence results. JSON objects are emitted with sorted keys; matrices
//! are arrays of string scalars so no precision is lost.

use serde_json::{json, Value};

use crate::ce::CohomologySpace;
use crate::exterior::Cochain;
use crate::field::Field;
use crate::linalg::Matrix;
use crate::problem::ProblemFile;
use crate::seven::SevenTermReport;

/// Output format of every CLI command.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

impl Format {
    pub fn parse_flag(s: &str) -> Option<Format> {
        match s {
            "text" => Some(Format::Text),
            "json" => Some(Format::Json),
            _ => None,
        }
    }
}

fn matrix_json<F: Field>(m: &Matrix<F>) -> Value {
    Value::Array(
        m.format_rows()
            .into_iter()
            .map(|row| Value::Array(row.into_iter().map(Value::String).collect()))
            .collect(),
    )
}

fn cochain_json<F: Field>(c: &Cochain<F>) -> Value {
    let f = c.field();
    let blocks: Vec<Value> = (0..c.index().len())
        .map(|pos| {
            json!({
                "tuple": c.index().tuple(pos),
                "value": c.block(pos).iter().map(|v| f.format(v)).collect::<Vec<_>>(),
            })
        })
        .collect();
    json!({
        "degree": c.degree(),
        "blocks": blocks,
    })
}

fn matrix_text<F: Field>(m: &Matrix<F>) -> String {
    if m.rows() == 0 || m.cols() == 0 {
        return format!("({}x{} empty)", m.rows(), m.cols());
    }
    m.format_rows()
        .into_iter()
        .map(|row| format!("[{}]", row.join(", ")))
        .collect::<Vec<_>>()
        .join(" ")
}

fn problem_header<F: Field>(p: &ProblemFile<F>) -> Value {
    json!({
        "name": p.name,
        "field": p.field.spec().to_string(),
        "algebra_dim": p.algebra.dim(),
        "ideal_dim": p.ideal.as_ref().map(|i| i.dim()),
        "module_dim": p.module.dim(),
    })
}

pub fn render_validate<F: Field>(p: &ProblemFile<F>, format: Format) -> String {
    match format {
        Format::Json => {
            let v = json!({
                "command": "validate",
                "ok": true,
                "problem": problem_header(p),
            });
            pretty(v)
        }
        Format::Text => {
            let mut out = String::new();
            out.push_str(&format!("problem {} (field {})\n", p.name, p.field.spec()));
            out.push_str(&format!("algebra: dim {} ok\n", p.algebra.dim()));
            if let Some(i) = &p.ideal {
                out.push_str(&format!("ideal: dim {} ok\n", i.dim()));
            }
            out.push_str(&format!("module: dim {} ok\n", p.module.dim()));
            out
        }
    }
}

pub fn render_cohomology<F: Field>(
    p: &ProblemFile<F>,
    degree: usize,
    h: &CohomologySpace<F>,
    format: Format,
) -> String {
    match format {
        Format::Json => {
            let v = json!({
                "command": "cohomology",
                "degree": degree,
                "dim": h.dim(),
                "cocycles_dim": h.cocycles.dim(),
                "coboundaries_dim": h.coboundaries.dim(),
                "representatives": matrix_json(h.quotient.reps()),
                "problem": problem_header(p),
            });
            pretty(v)
        }
        Format::Text => {
            let mut out = String::new();
            out.push_str(&format!("problem {} (field {})\n", p.name, p.field.spec()));
            out.push_str(&format!(
                "dim H^{} = {} (cocycles {}, coboundaries {})\n",
                degree,
                h.dim(),
                h.cocycles.dim(),
                h.coboundaries.dim()
            ));
            out
        }
    }
}

const NODE_NAMES: [&str; 5] = [
    "H1(g,M)",
    "H1(h,M)^(g/h)",
    "H2(g/h,M^h)",
    "H2(g,M)_1",
    "H1(g/h,H1(h,M))",
];

const SPACE_NAMES: [&str; 7] = [
    "H1(g/h,M^h)",
    "H1(g,M)",
    "H1(h,M)^(g/h)",
    "H2(g/h,M^h)",
    "H2(g,M)_1",
    "H1(g/h,H1(h,M))",
    "H3(g/h,M^h)",
];

pub fn render_sequence<F: Field>(
    p: &ProblemFile<F>,
    rep: &SevenTermReport<F>,
    format: Format,
) -> String {
    match format {
        Format::Json => {
            let witnesses = json!({
                "alpha": matrix_json(&rep.alpha),
                "f_alpha": cochain_json(&rep.f_alpha),
                "tr": rep.tr_witnesses.iter().map(|w| json!({
                    "eta": matrix_json(&w.eta),
                    "cocycle": cochain_json(&w.cocycle),
                })).collect::<Vec<_>>(),
                "rho": rep.rho_witnesses.iter().map(|w| json!({
                    "gamma": matrix_json(&w.gamma),
                    "derivation": matrix_json(&w.derivation),
                })).collect::<Vec<_>>(),
                "lambda": rep.lambda_witnesses.iter().map(|w| json!({
                    "section": matrix_json(&w.section),
                    "alternating": cochain_json(&w.alternating),
                    "cocycle": cochain_json(&w.cocycle),
                })).collect::<Vec<_>>(),
            });
            let v = json!({
                "command": "sequence",
                "dims": rep.dims.to_vec(),
                "spaces": SPACE_NAMES.iter().zip(rep.dims.iter())
                    .map(|(n, d)| json!({"space": n, "dim": d}))
                    .collect::<Vec<_>>(),
                "maps": {
                    "infl1": matrix_json(&rep.infl1),
                    "res1": matrix_json(&rep.res1),
                    "tr": matrix_json(&rep.tr),
                    "infl2": matrix_json(&rep.infl2),
                    "rho": matrix_json(&rep.rho),
                    "lambda": matrix_json(&rep.lambda),
                },
                "exact_at": rep.exact_at.to_vec(),
                "infl1_injective": rep.infl1_injective,
                "all_exact": rep.all_exact(),
                "witnesses": witnesses,
                "problem": problem_header(p),
            });
            pretty(v)
        }
        Format::Text => {
            let mut out = String::new();
            out.push_str(&format!("problem {} (field {})\n", p.name, p.field.spec()));
            for (name, d) in SPACE_NAMES.iter().zip(rep.dims.iter()) {
                out.push_str(&format!("dim {name} = {d}\n"));
            }
            out.push_str(&format!(
                "infl1 injective: {}\n",
                verdict(rep.infl1_injective)
            ));
            for (name, ok) in NODE_NAMES.iter().zip(rep.exact_at.iter()) {
                out.push_str(&format!("exact at {name}: {}\n", verdict(*ok)));
            }
            out.push_str(&format!("map infl1 = {}\n", matrix_text(&rep.infl1)));
            out.push_str(&format!("map res1 = {}\n", matrix_text(&rep.res1)));
            out.push_str(&format!("map tr = {}\n", matrix_text(&rep.tr)));
            out.push_str(&format!("map infl2 = {}\n", matrix_text(&rep.infl2)));
            out.push_str(&format!("map rho = {}\n", matrix_text(&rep.rho)));
            out.push_str(&format!("map lambda = {}\n", matrix_text(&rep.lambda)));
            out.push_str(&format!("all exact: {}\n", verdict(rep.all_exact())));
            out
        }
    }
}

fn verdict(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "NO"
    }
}

fn pretty(v: Value) -> String {
    let mut s = serde_json::to_string_pretty(&v).expect("serializable");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ce::cohomology_space;
    use crate::problem::heisenberg_problem;
    use crate::field::Rationals;

    #[test]
    fn reports_are_deterministic_and_sorted() {
        let p = heisenberg_problem(Rationals, 2);
        let h1 = cohomology_space(&p.algebra, &p.module, 1);
        let a = render_cohomology(&p, 1, &h1, Format::Json);
        let b = render_cohomology(&p, 1, &h1, Format::Json);
        assert_eq!(a, b);
        // serde_json maps sort keys: "coboundaries_dim" < "cocycles_dim" < "command"
        let ca = a.find("coboundaries_dim").unwrap();
        let cb = a.find("cocycles_dim").unwrap();
        let cc = a.find("\"command\"").unwrap();
        assert!(ca < cb && cb < cc);
        assert!(a.contains("\"dim\": 4"));

        let t = render_cohomology(&p, 1, &h1, Format::Text);
        assert!(t.contains("dim H^1 = 4"));
    }
}
