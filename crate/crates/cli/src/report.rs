use serde_json::{json, Value};

use zonotope_core::oracle::f_vector_oracle_with_budget;
use zonotope_core::qsym::{psi_q_with_budget, IntegerPartition};
use zonotope_core::zonotope::{f_poly_flats, f_poly_main_with_budget, AntipodeExpansion, FVector};
use zonotope_core::{Error, Graph, IntPolynomial};

use crate::Failure;

/// Result of running the flat, theorem and covector routes on one graph.
#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub graph: Graph,
    pub f_flats: IntPolynomial,
    pub f_main: IntPolynomial,
    /// `None` when the covector sweep was over budget and skipped.
    pub f_oracle: Option<FVector>,
    pub agree: bool,
}

pub fn run_verify(
    g: &Graph,
    psi_budget: usize,
    oracle_budget: usize,
) -> Result<VerifyReport, Failure> {
    let f_flats = f_poly_flats(g);
    let f_main = f_poly_main_with_budget(g, psi_budget)?;
    let f_oracle = match f_vector_oracle_with_budget(g, oracle_budget) {
        Ok(fv) => Some(fv),
        Err(Error::Budget { .. }) => None,
        Err(e) => return Err(e.into()),
    };
    let oracle_ok = f_oracle
        .as_ref()
        .is_none_or(|fv| fv.to_polynomial() == f_flats);
    Ok(VerifyReport {
        graph: g.clone(),
        agree: f_flats == f_main && oracle_ok,
        f_flats,
        f_main,
        f_oracle,
    })
}

impl VerifyReport {
    pub fn to_json(&self) -> Value {
        json!({
            "graph": self.graph,
            "f_flats": self.f_flats.to_decimal_strings(),
            "f_main": self.f_main.to_decimal_strings(),
            "f_oracle": self.f_oracle.as_ref().map(FVector::to_decimal_strings),
            "agree": self.agree,
        })
    }

    pub fn to_text(&self) -> String {
        let oracle = match &self.f_oracle {
            Some(fv) => fv.to_string(),
            None => "skipped (over budget)".into(),
        };
        format!(
            "graph:     {}\nflats:     {}\ntheorem:   {}\ncovectors: {}\nagree:     {}",
            self.graph, self.f_flats, self.f_main, oracle, self.agree
        )
    }
}

/// Invariants of a graph and its Whitney twist side by side.
#[derive(Debug, Clone)]
pub struct TwistReport {
    pub original: Graph,
    pub twisted: Graph,
    pub f_original: IntPolynomial,
    pub f_twisted: IntPolynomial,
    pub f_match: bool,
    /// Coefficients of `m_{3,1^(n-3)}` in both q-chromatic functions, for
    /// `3 <= n <= 8`.
    pub m3_coefficients: Option<(IntPolynomial, IntPolynomial)>,
}

/// The `m_{3,1^(n-3)}` coefficient of `Psi_q`.
pub fn m3_coefficient(g: &Graph) -> Result<IntPolynomial, Error> {
    let mut parts = vec![3];
    parts.extend(std::iter::repeat_n(1, g.n() - 3));
    let lambda = IntegerPartition::new(parts)?;
    Ok(psi_q_with_budget(g, 8)?.coeff(&lambda))
}

pub fn run_twist_demo(original: &Graph, twisted: &Graph) -> Result<TwistReport, Failure> {
    let f_original = f_poly_flats(original);
    let f_twisted = f_poly_flats(twisted);
    let n = original.n();
    let m3_coefficients = if (3..=8).contains(&n) {
        Some((m3_coefficient(original)?, m3_coefficient(twisted)?))
    } else {
        None
    };
    Ok(TwistReport {
        original: original.clone(),
        twisted: twisted.clone(),
        f_match: f_original == f_twisted,
        f_original,
        f_twisted,
        m3_coefficients,
    })
}

impl TwistReport {
    fn m3_label(&self) -> String {
        let mut parts = vec![3];
        parts.extend(std::iter::repeat_n(1, self.original.n() - 3));
        format!("m{}", IntegerPartition::new(parts).expect("positive parts"))
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "original: {}\n  f = {}\ntwisted:  {}\n  f = {}\nf-polynomials match: {}",
            self.original, self.f_original, self.twisted, self.f_twisted, self.f_match
        );
        if let Some((a, b)) = &self.m3_coefficients {
            let label = self.m3_label();
            out.push_str(&format!(
                "\n{label} coefficient: original {a}, twisted {b} ({})",
                if a == b { "equal" } else { "different" }
            ));
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "original": self.original,
            "twisted": self.twisted,
            "f_original": self.f_original.to_decimal_strings(),
            "f_twisted": self.f_twisted.to_decimal_strings(),
            "f_match": self.f_match,
        });
        if let Some((a, b)) = &self.m3_coefficients {
            v["m3_partition"] = json!(self.m3_label());
            v["m3_original"] = json!(a.to_decimal_strings());
            v["m3_twisted"] = json!(b.to_decimal_strings());
        }
        v
    }
}

pub fn antipode_text(s: &AntipodeExpansion) -> String {
    s.terms
        .iter()
        .map(|t| {
            let edges: Vec<String> = t
                .flat_edges
                .iter()
                .map(|(i, j)| format!("{i}-{j}"))
                .collect();
            format!(
                "{:>8}  rank {}  {{{}}}",
                t.coefficient,
                t.rank,
                edges.join(",")
            )
        })
        .collect::<Vec<_>>()
        .join("\n")
}

pub fn antipode_json(s: &AntipodeExpansion) -> Value {
    json!({
        "graph": s.host,
        "terms": s.terms.iter().map(|t| json!({
            "coefficient": t.coefficient.to_string(),
            "rank": t.rank,
            "flat": t.flat_edges.iter().map(|&(i, j)| [i, j]).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
    })
}
