//! JSON report types. Field declaration order is alphabetical so the
//! serialized documents have sorted keys; every list is sorted at
//! construction, making reports byte-deterministic for a fixed input and
//! flag set (except `elapsed_ms`).

use serde::Serialize;

#[derive(Serialize, Debug, Clone)]
pub struct AnalysisReport {
    pub aut_g_order: u64,
    pub aut_order: u64,
    pub cayley_edges: u64,
    pub cayley_vertices: u64,
    pub classification: String,
    pub criterion_used: String,
    pub edges: Vec<[usize; 2]>,
    pub elapsed_ms: u64,
    pub expected_normal_order: u64,
    pub generates_sn: bool,
    pub is_normal: bool,
    pub lemma_results: Option<Vec<LemmaResult>>,
    pub n: usize,
    pub stab_order: u64,
}

#[derive(Serialize, Debug, Clone)]
pub struct LemmaResult {
    pub instances_checked: u64,
    pub instances_skipped: u64,
    pub lemma: String,
    pub pass: bool,
    pub violations: u64,
}

#[derive(Serialize, Debug, Clone)]
pub struct SweepSummary {
    pub classes: Vec<SweepClass>,
    pub classes_normal: u64,
    pub classes_total: u64,
    pub corollary_violations: Vec<CorollaryViolation>,
    pub exceptions: Vec<SweepException>,
    pub n: usize,
}

#[derive(Serialize, Debug, Clone)]
pub struct SweepClass {
    pub aut_g_order: u64,
    pub aut_order: u64,
    pub canonical_form: String,
    pub classification: String,
    pub direct_product_ok: Option<bool>,
    pub edges: Vec<[usize; 2]>,
    pub expected_normal_order: u64,
    pub is_normal: bool,
    pub stab_order: u64,
}

#[derive(Serialize, Debug, Clone)]
pub struct SweepException {
    pub canonical_form: String,
    pub reason: String,
}

#[derive(Serialize, Debug, Clone)]
pub struct CorollaryViolation {
    pub canonical_form: String,
    pub detail: String,
}

#[derive(Serialize, Debug, Clone)]
pub struct LemmasReport {
    pub lemmas: Vec<LemmaDetail>,
    pub n: usize,
    pub pass: bool,
    pub seed: u64,
    pub sigmas: Vec<String>,
}

#[derive(Serialize, Debug, Clone)]
pub struct LemmaDetail {
    pub families: Option<Vec<FamilyCount>>,
    pub instances_checked: u64,
    pub instances_skipped: u64,
    pub lemma: String,
    pub pass: bool,
    pub survivors: Option<u64>,
    pub violation_details: Vec<String>,
    pub violations: u64,
}

#[derive(Serialize, Debug, Clone)]
pub struct FamilyCount {
    pub count: u64,
    pub id: u8,
    pub parametric: bool,
}

#[derive(Serialize, Debug, Clone)]
pub struct LiftReport {
    pub aut_g_order: u64,
    pub aut_lg_order: u64,
    pub bijective: bool,
    pub line_edges: Vec<[usize; 2]>,
    pub line_vertices: usize,
    pub n: usize,
    pub pairs: Vec<LiftPair>,
}

#[derive(Serialize, Debug, Clone)]
pub struct LiftPair {
    pub graph_automorphism: String,
    pub line_automorphism: String,
}
