use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;

use super::audit::AuditStats;
use super::corpus::Corpus;
use super::registry::{Outcome, Status, Theorem};

#[derive(Clone, Debug, Serialize)]
pub struct TheoremResult {
    pub theorem_id: String,
    pub anchor: String,
    pub instance_spec: String,
    pub status: Status,
    pub parts: Vec<Value>,
    pub witness: Option<Value>,
    pub counterexample: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    pub millis: Option<f64>,
}

impl TheoremResult {
    pub fn new(t: &Theorem, spec: &str, out: Outcome, millis: Option<f64>) -> TheoremResult {
        TheoremResult {
            theorem_id: t.id.into(),
            anchor: t.anchor.into(),
            instance_spec: spec.into(),
            status: out.status,
            parts: out.parts,
            witness: out.witness,
            counterexample: out.counterexample,
            note: out.note,
            millis,
        }
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Counts {
    pub pass: u64,
    pub violation: u64,
    pub inapplicable: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct Probe {
    pub claim: String,
    pub found: u64,
    pub instances: Vec<String>,
}

impl Probe {
    pub fn new(claim: &str) -> Probe {
        Probe { claim: claim.into(), found: 0, instances: Vec::new() }
    }

    pub fn record(&mut self, spec: String) {
        self.found += 1;
        self.instances.push(spec);
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CorpusStats {
    pub instances: usize,
    pub modules: usize,
    pub rings: usize,
    pub set_choices: usize,
    pub labeled_sets: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema: u32,
    pub corpus: CorpusStats,
    pub theorems: Vec<String>,
    pub summary: BTreeMap<String, Counts>,
    pub violations: u64,
    pub probes: Vec<Probe>,
    pub witness_audit: AuditStats,
    pub uniform_consistency: Value,
    pub notes: Vec<String>,
    pub results: Vec<TheoremResult>,
}

impl Report {
    pub fn new(corpus: &Corpus, theorems: &[Theorem]) -> Report {
        Report {
            schema: 1,
            corpus: CorpusStats {
                instances: corpus.instances.len(),
                modules: corpus.modules(),
                rings: corpus.menus.len(),
                set_choices: corpus.menus.iter().map(|m| m.choices.len()).sum(),
                labeled_sets: corpus.menus.iter().map(|m| m.labeled).sum(),
            },
            theorems: theorems.iter().map(|t| t.id.to_string()).collect(),
            summary: theorems.iter().map(|t| (t.id.to_string(), Counts::default())).collect(),
            violations: 0,
            probes: Vec::new(),
            witness_audit: AuditStats::default(),
            uniform_consistency: Value::Null,
            notes: Vec::new(),
            results: Vec::new(),
        }
    }

    /// Sorts results by theorem and instance and fills in the summary.
    pub fn finish(&mut self) {
        self.results.sort_by(|a, b| (&a.theorem_id, &a.instance_spec).cmp(&(&b.theorem_id, &b.instance_spec)));
        for r in &self.results {
            let c = self.summary.entry(r.theorem_id.clone()).or_default();
            match r.status {
                Status::Pass => c.pass += 1,
                Status::Violation => c.violation += 1,
                Status::Inapplicable => c.inapplicable += 1,
            }
        }
        self.violations = self.summary.values().map(|c| c.violation).sum();
    }

    pub fn is_clean(&self) -> bool {
        self.violations == 0 && self.witness_audit.witnesses_failed == 0 && self.witness_audit.refutations_failed == 0
    }

    /// Theorems run with no applicable instance.
    pub fn vacuous(&self) -> Vec<&str> {
        self.summary.iter().filter(|(_, c)| c.pass + c.violation == 0).map(|(k, _)| k.as_str()).collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
