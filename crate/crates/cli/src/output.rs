use std::fmt::Write as _;

use serde::Serialize;
use sibirsky::groebner::GroebnerStats;
use sibirsky::poly::{Polynomial, PolynomialRecord};
use sibirsky::reversibility::{
    CoefficientPoint, GammaRelation, MonoidVector, SibirskyIdeal, SystemFamily, Verdict,
};

#[derive(Debug, Serialize)]
pub struct FamilyEcho {
    pub pairs: Vec<[i64; 2]>,
    pub order: &'static str,
    /// Coefficient variables, greatest first.
    pub variables: Vec<String>,
}

impl FamilyEcho {
    pub fn new(family: &SystemFamily, order: &'static str, ideal: &SibirskyIdeal) -> Self {
        FamilyEcho {
            pairs: family.pairs().iter().map(|&(p, q)| [p, q]).collect(),
            order,
            variables: ideal.ring.vars().names().to_vec(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct GeneratorEntry {
    pub text: String,
    pub record: PolynomialRecord,
}

impl GeneratorEntry {
    pub fn new(p: &Polynomial) -> Self {
        GeneratorEntry {
            text: p.to_string(),
            record: p.to_record(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct HilbertEntry {
    pub vector: Vec<u32>,
    pub monomial: String,
}

#[derive(Debug, Serialize)]
pub struct OracleReport {
    pub bound: u32,
    pub vectors: Vec<Vec<u32>>,
    pub agreement: bool,
}

#[derive(Debug, Serialize)]
pub struct VerdictReport {
    pub kind: &'static str,
    /// 1-based pair index of the zero pattern.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_index: Option<usize>,
    /// 1-based generator number and text of a generator that does not vanish.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_generator: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_text: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<String>,
}

impl VerdictReport {
    pub fn new(verdict: &Verdict, generators: &[Polynomial]) -> Self {
        let empty = VerdictReport {
            kind: "reversible",
            witness_index: None,
            witness_generator: None,
            witness_text: None,
            value: None,
        };
        match verdict {
            Verdict::Reversible => empty,
            Verdict::OnVarietyNotReversible { index } => VerdictReport {
                kind: "on_variety_not_reversible",
                witness_index: Some(*index),
                ..empty
            },
            Verdict::OffVariety { generator, value } => VerdictReport {
                kind: "off_variety",
                witness_generator: Some(generator + 1),
                witness_text: Some(generators[*generator].to_string()),
                value: Some(value.to_string()),
                ..empty
            },
        }
    }
}

#[derive(Debug, Serialize)]
pub struct GammaReport {
    pub exponent: u64,
    pub value: Option<String>,
    pub text: String,
}

impl GammaReport {
    pub fn new(rel: &GammaRelation) -> Self {
        GammaReport {
            exponent: rel.exponent,
            value: rel.value.as_ref().map(|v| v.to_string()),
            text: rel.to_string(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct Timing {
    pub seconds: f64,
    pub pairs_reduced: usize,
    pub zero_reductions: usize,
    pub generators_added: usize,
    pub max_degree: u64,
}

impl Timing {
    pub fn new(stats: &GroebnerStats) -> Self {
        Timing {
            seconds: stats.elapsed.as_secs_f64(),
            pairs_reduced: stats.pairs_reduced,
            zero_reductions: stats.zero_reductions,
            generators_added: stats.generators_added,
            max_degree: stats.max_degree_seen,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct CheckSection {
    pub point: Vec<String>,
    pub verdict: VerdictReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gamma_relation: Option<GammaReport>,
}

impl CheckSection {
    pub fn new(
        point: &CoefficientPoint,
        verdict: &Verdict,
        gamma: Option<&GammaRelation>,
        generators: &[Polynomial],
    ) -> Self {
        CheckSection {
            point: point.0.iter().map(|v| v.to_string()).collect(),
            verdict: VerdictReport::new(verdict, generators),
            gamma_relation: gamma.map(GammaReport::new),
        }
    }
}

/// Everything a command reports. Sections a command does not produce are
/// omitted from the JSON form.
#[derive(Debug, Serialize)]
pub struct ResultDocument {
    pub command: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input: Option<Vec<String>>,
    pub family: FamilyEcho,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generators: Option<Vec<GeneratorEntry>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hilbert_basis: Option<Vec<HilbertEntry>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub check: Option<CheckSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing: Option<Timing>,
}

fn vector_text(v: &[u32]) -> String {
    let parts: Vec<String> = v.iter().map(u32::to_string).collect();
    format!("({})", parts.join(","))
}

pub fn hilbert_entries(basis: &[MonoidVector], monomials: &[Polynomial]) -> Vec<HilbertEntry> {
    basis
        .iter()
        .zip(monomials)
        .map(|(v, m)| HilbertEntry {
            vector: v.0.clone(),
            monomial: m.to_string(),
        })
        .collect()
}

impl ResultDocument {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("document serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let pairs: Vec<String> = self
            .family
            .pairs
            .iter()
            .map(|[p, q]| format!("({p},{q})"))
            .collect();
        let _ = writeln!(out, "family: {}", pairs.join(" "));
        if let Some(input) = &self.input {
            let _ = writeln!(out, "input: {}", input.join(" "));
        }
        let _ = writeln!(out, "order: {}", self.family.order);
        let _ = writeln!(out, "variables: {}", self.family.variables.join(" > "));
        if let Some(gens) = &self.generators {
            let _ = writeln!(out, "generators: {}", gens.len());
            for (i, g) in gens.iter().enumerate() {
                let _ = writeln!(out, "  f{} = {}", i + 1, g.text);
            }
        }
        if let Some(basis) = &self.hilbert_basis {
            let _ = writeln!(out, "hilbert basis: {}", basis.len());
            for e in basis {
                let _ = writeln!(out, "  {}  {}", vector_text(&e.vector), e.monomial);
            }
        }
        if let Some(oracle) = &self.oracle {
            let _ = writeln!(
                out,
                "oracle (bound {}): {} vectors, agreement: {}",
                oracle.bound,
                oracle.vectors.len(),
                oracle.agreement
            );
        }
        if let Some(check) = &self.check {
            let _ = writeln!(out, "point: ({})", check.point.join(", "));
            let v = &check.verdict;
            let line = match v.kind {
                "reversible" => match &check.gamma_relation {
                    Some(g) => format!("reversible, {}", g.text),
                    None => "reversible".to_string(),
                },
                "on_variety_not_reversible" => format!(
                    "on variety, not reversible, witness index {}",
                    v.witness_index.unwrap_or(0)
                ),
                _ => format!(
                    "off variety, witness f{} = {} (value {})",
                    v.witness_generator.unwrap_or(0),
                    v.witness_text.as_deref().unwrap_or(""),
                    v.value.as_deref().unwrap_or("")
                ),
            };
            let _ = writeln!(out, "verdict: {line}");
        }
        if let Some(t) = &self.timing {
            let _ = writeln!(
                out,
                "timing: {:.3}s, {} pairs reduced ({} to zero), {} generators added, max degree {}",
                t.seconds, t.pairs_reduced, t.zero_reductions, t.generators_added, t.max_degree
            );
        }
        out
    }
}
