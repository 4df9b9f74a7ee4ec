//! Serializable report document, schema version 1. Big integers are decimal
//! strings so downstream tooling never loses precision.

use serde::{Deserialize, Serialize};

use fullerene::{Exp2Bound, MatchingReport};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Exp2Doc {
    pub coefficient: f64,
    pub exponent_num: i64,
    pub exponent_den: i64,
    pub value: f64,
}

impl From<Exp2Bound> for Exp2Doc {
    fn from(b: Exp2Bound) -> Self {
        Exp2Doc {
            coefficient: b.coefficient,
            exponent_num: b.exponent_num,
            exponent_den: b.exponent_den,
            value: b.value(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BoundsDoc {
    pub theorem1: Exp2Doc,
    pub zz: u64,
    pub km: Exp2Doc,
    pub corollary: Exp2Doc,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ReportDocument {
    pub schema: u32,
    pub p: usize,
    pub faces: usize,
    pub witness_count: usize,
    pub class_resonant_counts: [usize; 3],
    pub best_class: String,
    pub disjoint_resonant_count: usize,
    pub switch_count: String,
    pub exact_count: Option<String>,
    pub bounds: BoundsDoc,
    pub certified: bool,
    pub warnings: Vec<String>,
}

impl From<&MatchingReport> for ReportDocument {
    fn from(r: &MatchingReport) -> Self {
        ReportDocument {
            schema: 1,
            p: r.p,
            faces: r.faces,
            witness_count: r.witness_count,
            class_resonant_counts: r.class_resonant_counts,
            best_class: r.best_class.to_string(),
            disjoint_resonant_count: r.disjoint_resonant_count,
            switch_count: r.switch_count.to_string(),
            exact_count: r.exact_count.as_ref().map(|c| c.to_string()),
            bounds: BoundsDoc {
                theorem1: r.bounds.theorem1.into(),
                zz: r.bounds.zz,
                km: r.bounds.km.into(),
                corollary: r.bounds.corollary.into(),
            },
            certified: r.certified,
            warnings: r.warnings.clone(),
        }
    }
}

impl ReportDocument {
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        s.push_str(&format!("p: {}\n", self.p));
        s.push_str(&format!("faces: {}\n", self.faces));
        s.push_str(&format!("witness_count: {}\n", self.witness_count));
        s.push_str(&format!(
            "class_resonant_counts: a={} b={} c={}\n",
            self.class_resonant_counts[0],
            self.class_resonant_counts[1],
            self.class_resonant_counts[2]
        ));
        s.push_str(&format!("best_class: {}\n", self.best_class));
        s.push_str(&format!("disjoint_resonant_count: {}\n", self.disjoint_resonant_count));
        s.push_str(&format!("switch_count: {}\n", self.switch_count));
        if let Some(exact) = &self.exact_count {
            s.push_str(&format!("exact_count: {exact}\n"));
        }
        s.push_str(&format!(
            "bounds: theorem1=2^({}/{})={:.6} zz={} km={:.6} corollary={:.6}\n",
            self.bounds.theorem1.exponent_num,
            self.bounds.theorem1.exponent_den,
            self.bounds.theorem1.value,
            self.bounds.zz,
            self.bounds.km.value,
            self.bounds.corollary.value
        ));
        s.push_str(&format!("certified: {}\n", self.certified));
        for w in &self.warnings {
            s.push_str(&format!("warning: {w}\n"));
        }
        s
    }
}
