//! Serialization of generated systems: the JSON schema, the CSV rows, and
//! the appendix-style Markdown layout (LHS block, vertical bar, right-hand
//! side written as aN+b plus weight terms, grouped by first_r).

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::combinatorics::Params;
use crate::engine::{ExclusionInequality, GeneratedSystem, OccupationMatrix, RhsAffine};
use crate::error::Result;
use crate::Rat;

#[derive(Serialize, Deserialize)]
struct SystemJson {
    params: Params,
    occupation_vectors: Vec<OccupationMatrix>,
    inequalities: Vec<InequalityJson>,
    equation: EquationJson,
}

#[derive(Serialize, Deserialize)]
struct InequalityJson {
    lhs: Vec<i64>,
    rhs_w: Vec<i64>,
    rhs_affine: RhsAffine,
    first_r: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    rhs_value: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    rhs_decimal: Option<String>,
}

#[derive(Serialize, Deserialize)]
struct EquationJson {
    coeffs: Vec<i64>,
    value: i64,
}

fn decimal_string(q: &Rat, decimals: u32) -> String {
    let scale = num_bigint::BigInt::from(10u32).pow(decimals);
    let scaled = (q * Rat::from(scale.clone())).round();
    let value = scaled.numer().to_f64().unwrap_or(f64::NAN) / scale.to_f64().unwrap_or(f64::NAN);
    format!("~{value:.*}", decimals as usize)
}

pub fn render_json(
    system: &GeneratedSystem,
    weights: Option<&[Rat]>,
    decimals: Option<u32>,
) -> Result<String> {
    let inequalities = system
        .inequalities
        .iter()
        .map(|ineq| {
            let rhs_value = weights.map(|w| ineq.rhs_value(w));
            InequalityJson {
                lhs: ineq.lhs.clone(),
                rhs_w: ineq.rhs_w.clone(),
                rhs_affine: ineq.rhs_affine.clone(),
                first_r: ineq.first_r,
                rhs_decimal: rhs_value
                    .as_ref()
                    .and_then(|q| decimals.map(|k| decimal_string(q, k))),
                rhs_value: rhs_value.map(|q| q.to_string()),
            }
        })
        .collect();
    let (coeffs, value) = system.equation();
    let doc = SystemJson {
        params: system.params,
        occupation_vectors: system.occupation_vectors.clone(),
        inequalities,
        equation: EquationJson { coeffs, value },
    };
    Ok(serde_json::to_string_pretty(&doc)?)
}

pub fn system_from_json(text: &str) -> Result<GeneratedSystem> {
    let doc: SystemJson = serde_json::from_str(text)?;
    let inequalities = doc
        .inequalities
        .into_iter()
        .map(|i| ExclusionInequality {
            lhs: i.lhs,
            rhs_w: i.rhs_w,
            rhs_affine: i.rhs_affine,
            first_r: i.first_r,
        })
        .collect();
    Ok(GeneratedSystem {
        params: doc.params,
        occupation_vectors: doc.occupation_vectors,
        inequalities,
    })
}

pub fn render_vec_i64(v: &[i64]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

/// Human form of `a*N + b + sum c_j w_j`.
pub fn render_affine(rhs: &RhsAffine) -> String {
    let mut out = String::new();
    match rhs.a {
        0 => {}
        1 => out.push('N'),
        a => out.push_str(&format!("{a}N")),
    }
    if rhs.b != 0 || out.is_empty() {
        if out.is_empty() {
            out.push_str(&rhs.b.to_string());
        } else if rhs.b > 0 {
            out.push_str(&format!("+{}", rhs.b));
        } else if rhs.b < 0 {
            out.push_str(&rhs.b.to_string());
        }
    }
    for (j, &c) in rhs.c.iter().enumerate() {
        if c == 0 {
            continue;
        }
        if c == 1 {
            out.push_str(&format!("+w{}", j + 1));
        } else {
            out.push_str(&format!("+{}w{}", c, j + 1));
        }
    }
    out
}

pub fn render_csv(system: &GeneratedSystem) -> String {
    let mut out = String::from("lhs|a|b|c|first_r\n");
    for ineq in &system.inequalities {
        let lhs: Vec<String> = ineq.lhs.iter().map(|x| x.to_string()).collect();
        let c: Vec<String> = ineq.rhs_affine.c.iter().map(|x| x.to_string()).collect();
        out.push_str(&format!(
            "{}|{}|{}|{}|{}\n",
            lhs.join(","),
            ineq.rhs_affine.a,
            ineq.rhs_affine.b,
            c.join(","),
            ineq.first_r
        ));
    }
    out
}

pub fn render_markdown(
    system: &GeneratedSystem,
    weights: Option<&[Rat]>,
    decimals: Option<u32>,
) -> String {
    let params = &system.params;
    let mut out = format!(
        "## {} spectral polytope, r={}, N={}, d={}\n\n",
        params.statistics, params.r, params.n, params.d
    );
    out.push_str(&format!(
        "Equation: x1 + ... + x{} = {}\n\n",
        params.d, params.n
    ));

    out.push_str("### Occupation vectors\n\n");
    for m in &system.occupation_vectors {
        out.push_str(&format!("- ({})\n", m.render_symbolic().join(", ")));
    }
    out.push('\n');

    out.push_str("### Inequalities on the decreasingly sorted spectrum\n\n");
    out.push_str("| r | lhs | rhs |");
    if weights.is_some() {
        out.push_str(" rhs(w) |");
    }
    out.push('\n');
    out.push_str("|---|---|---|");
    if weights.is_some() {
        out.push_str("---|");
    }
    out.push('\n');
    for ineq in &system.inequalities {
        let lhs: Vec<String> = ineq.lhs.iter().map(|x| x.to_string()).collect();
        out.push_str(&format!(
            "| {} | {} | {} |",
            ineq.first_r,
            lhs.join(" "),
            render_affine(&ineq.rhs_affine)
        ));
        if let Some(w) = weights {
            let q = ineq.rhs_value(w);
            match decimals {
                Some(k) => out.push_str(&format!(" {} ({}) |", q, decimal_string(&q, k))),
                None => out.push_str(&format!(" {q} |")),
            }
        }
        out.push('\n');
    }
    out
}
