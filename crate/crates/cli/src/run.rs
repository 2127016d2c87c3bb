//! Drivers behind the subcommands: full per-graph analysis, the exhaustive
//! sweep over connected transposition-graph classes, the lemma suites, and
//! the line-graph automorphism correspondence.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::time::Instant;

use rayon::prelude::*;

use cayley_core::cayley::CayleyGraph;
use cayley_core::graph::connected_classes;
use cayley_core::perm::Perm;
use cayley_core::structure::{self, ClassifiedTuple, Lemma, LemmaReport, Violation};
use cayley_core::symmetry::{
    aut_summary, is_normal_with, verify_direct_product_with, Method,
};
use cayley_core::transgraph::{GraphKind, TranspositionSet};
use cayley_core::{Error, Result};

use crate::report::*;
use crate::rng::{random_perm, SplitMix64};

/// Normality criterion selection on the command line.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MethodArg {
    FixNeighborhood,
    Conjugation,
    Both,
}

#[derive(Clone, Debug)]
pub struct AnalyzeOptions {
    /// `None` picks the default: both criteria for `n >= 5`, conjugation
    /// otherwise.
    pub method: Option<MethodArg>,
    pub skip_lemmas: bool,
    pub sigmas: usize,
    pub seed: u64,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        AnalyzeOptions {
            method: None,
            skip_lemmas: false,
            sigmas: crate::DEFAULT_SIGMAS,
            seed: crate::DEFAULT_SEED,
        }
    }
}

/// The fix-neighborhood criterion needs `n >= 5`; smaller inputs fall back
/// to conjugation, which is valid for every `n`.
fn effective_method(requested: Option<MethodArg>, n: usize) -> Method {
    let arg = requested.unwrap_or(if n >= 5 {
        MethodArg::Both
    } else {
        MethodArg::Conjugation
    });
    match arg {
        MethodArg::Conjugation => Method::Conjugation,
        MethodArg::FixNeighborhood if n >= 5 => Method::FixNeighborhood,
        MethodArg::Both if n >= 5 => Method::Both,
        _ => Method::Conjugation,
    }
}

fn edges_1based(tset: &TranspositionSet) -> Vec<[usize; 2]> {
    tset.members()
        .iter()
        .map(|t| [t.lo() + 1, t.hi() + 1])
        .collect()
}

pub fn analyze(tset: &TranspositionSet, opts: &AnalyzeOptions) -> Result<AnalysisReport> {
    let start = Instant::now();
    if !tset.generates_symmetric_group() {
        return Err(Error::NotGenerating);
    }
    let classification = tset.classify()?;
    let aut_g_order = if tset.n() >= 2 {
        tset.graph().automorphisms()?.len() as u64
    } else {
        1
    };
    let g = CayleyGraph::build(tset.clone())?;
    let summary = aut_summary(&g)?;
    let method = effective_method(opts.method, tset.n());
    let verdict = is_normal_with(&g, &summary, method)?;
    let lemma_results = if opts.skip_lemmas {
        None
    } else {
        Some(lemma_results_for(&g, opts.sigmas, opts.seed)?)
    };
    Ok(AnalysisReport {
        aut_g_order,
        aut_order: summary.aut_order,
        cayley_edges: g.edge_count() as u64,
        cayley_vertices: g.vertex_count() as u64,
        classification: classification.kind.to_string(),
        criterion_used: method.as_str().to_string(),
        edges: edges_1based(tset),
        elapsed_ms: start.elapsed().as_millis() as u64,
        expected_normal_order: verdict.expected_normal_order,
        generates_sn: true,
        is_normal: verdict.is_normal,
        lemma_results,
        n: tset.n(),
        stab_order: summary.stab_order,
    })
}

fn base_points(n: usize, count: usize, seed: u64) -> Vec<Perm> {
    let mut rng = SplitMix64::new(seed);
    let mut sigmas = vec![Perm::identity(n)];
    for _ in 0..count {
        sigmas.push(random_perm(n, &mut rng));
    }
    sigmas
}

struct LemmaAgg {
    lemma: Lemma,
    checked: u64,
    skipped: u64,
    violations: u64,
    details: Vec<String>,
}

impl LemmaAgg {
    fn new(lemma: Lemma) -> Self {
        LemmaAgg {
            lemma,
            checked: 0,
            skipped: 0,
            violations: 0,
            details: Vec::new(),
        }
    }

    fn absorb(&mut self, report: &LemmaReport) {
        self.checked += report.instances_checked;
        self.skipped += report.instances_skipped;
        self.violations += report.violations.len() as u64;
        for v in &report.violations {
            if self.details.len() < 20 {
                self.details.push(render_violation(v));
            }
        }
    }
}

fn render_violation(v: &Violation) -> String {
    let mut s = String::new();
    if let Some(sigma) = &v.sigma {
        let _ = write!(s, "sigma={sigma} ");
    }
    let _ = write!(s, "transpositions=[");
    for (i, t) in v.transpositions.iter().enumerate() {
        if i > 0 {
            let _ = write!(s, ", ");
        }
        let _ = write!(s, "{t}");
    }
    let _ = write!(s, "]: {}", v.detail);
    s
}

/// Runs the five lemma suites: the base-point-free ones once, the others
/// at the identity plus `sigmas` seeded random base points.
fn run_lemma_suites(
    g: &CayleyGraph,
    sigmas: usize,
    seed: u64,
) -> Result<(Vec<LemmaAgg>, Option<Vec<ClassifiedTuple>>)> {
    let mut commute = LemmaAgg::new(Lemma::CommuteDisjoint);
    commute.absorb(&structure::verify_commute_disjoint(g.tset()));

    let mut four = LemmaAgg::new(Lemma::FourCycle);
    let mut k33 = LemmaAgg::new(Lemma::K33);
    let mut six = LemmaAgg::new(Lemma::SixCycle);
    for sigma in base_points(g.n(), sigmas, seed) {
        four.absorb(&structure::verify_four_cycle(g, &sigma)?);
        k33.absorb(&structure::verify_k33(g, &sigma)?);
        six.absorb(&structure::verify_six_cycle(g, &sigma)?);
    }

    let mut aggs = vec![commute, four, k33];
    let mut tuples = None;
    if g.n() >= 3 {
        let mut tuple_agg = LemmaAgg::new(Lemma::TupleEnumeration);
        let (report, classified) = structure::verify_tuple_families(g.n())?;
        tuple_agg.absorb(&report);
        aggs.push(tuple_agg);
        tuples = Some(classified);
    }
    aggs.push(six);
    aggs.sort_by_key(|a| a.lemma.as_str());
    Ok((aggs, tuples))
}

fn lemma_results_for(g: &CayleyGraph, sigmas: usize, seed: u64) -> Result<Vec<LemmaResult>> {
    let (aggs, _) = run_lemma_suites(g, sigmas, seed)?;
    Ok(aggs
        .iter()
        .map(|a| LemmaResult {
            instances_checked: a.checked,
            instances_skipped: a.skipped,
            lemma: a.lemma.as_str().to_string(),
            pass: a.violations == 0,
            violations: a.violations,
        })
        .collect())
}

pub fn lemmas(tset: &TranspositionSet, sigmas: usize, seed: u64) -> Result<LemmasReport> {
    if !tset.generates_symmetric_group() {
        return Err(Error::NotGenerating);
    }
    let g = CayleyGraph::build(tset.clone())?;
    let (aggs, tuples) = run_lemma_suites(&g, sigmas, seed)?;
    let family_counts = tuples.as_ref().map(|classified| {
        structure::tuple_families()
            .iter()
            .map(|f| FamilyCount {
                count: classified.iter().filter(|c| c.family == f.id).count() as u64,
                id: f.id,
                parametric: f.parametric,
            })
            .collect::<Vec<_>>()
    });
    let lemmas: Vec<LemmaDetail> = aggs
        .iter()
        .map(|a| {
            let is_tuples = a.lemma == Lemma::TupleEnumeration;
            LemmaDetail {
                families: if is_tuples { family_counts.clone() } else { None },
                instances_checked: a.checked,
                instances_skipped: a.skipped,
                lemma: a.lemma.as_str().to_string(),
                pass: a.violations == 0,
                survivors: if is_tuples {
                    tuples.as_ref().map(|t| t.len() as u64)
                } else {
                    None
                },
                violation_details: a.details.clone(),
                violations: a.violations,
            }
        })
        .collect();
    let pass = lemmas.iter().all(|l| l.pass);
    Ok(LemmasReport {
        lemmas,
        n: tset.n(),
        pass,
        seed,
        sigmas: base_points(tset.n(), sigmas, seed)
            .iter()
            .map(|p| p.to_string())
            .collect(),
    })
}

struct ClassOutcome {
    class: SweepClass,
    kind: GraphKind,
    canonical: String,
}

fn analyze_class(graph: &cayley_core::graph::Graph, n: usize) -> Result<ClassOutcome> {
    let tset = TranspositionSet::from_graph(graph)?;
    let canonical = graph.canonical_form()?.bit_string();
    let kind = tset.classify()?.kind;
    let aut_g_order = graph.automorphisms()?.len() as u64;
    let g = CayleyGraph::build(tset.clone())?;
    let summary = aut_summary(&g)?;
    let method = if n >= 5 { Method::Both } else { Method::Conjugation };
    let verdict = is_normal_with(&g, &summary, method)?;
    let direct_product_ok = if verdict.is_normal {
        Some(verify_direct_product_with(&g, &summary)?)
    } else {
        None
    };
    Ok(ClassOutcome {
        class: SweepClass {
            aut_g_order,
            aut_order: summary.aut_order,
            canonical_form: canonical.clone(),
            classification: kind.to_string(),
            direct_product_ok,
            edges: edges_1based(&tset),
            expected_normal_order: verdict.expected_normal_order,
            is_normal: verdict.is_normal,
            stab_order: summary.stab_order,
        },
        kind,
        canonical,
    })
}

/// Analyzes every connected isomorphism class at `n`, checking that the
/// non-normal classes are exactly the four-cycle and the complete graph
/// and that each normal class realizes the expected order and the
/// direct-product structure. `jobs = 0` uses all cores.
pub fn sweep(n: usize, jobs: usize) -> Result<SweepSummary> {
    if n < 3 {
        return Err(Error::DomainTooSmall { n, min: 3 });
    }
    if n > 6 {
        return Err(Error::Capacity {
            what: "sweep points",
            limit: 6,
            requested: n,
        });
    }
    let classes = connected_classes(n)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|_| Error::Precondition("failed to build thread pool"))?;
    let outcomes: Result<Vec<ClassOutcome>> =
        pool.install(|| classes.par_iter().map(|g| analyze_class(g, n)).collect());
    let outcomes = outcomes?;

    let mut exceptions = Vec::new();
    let mut corollary_violations = Vec::new();
    let mut classes_normal = 0;
    for o in &outcomes {
        let expected_exception =
            matches!(o.kind, GraphKind::FourCycle | GraphKind::CompleteGraph);
        if o.class.is_normal {
            classes_normal += 1;
            if expected_exception {
                corollary_violations.push(CorollaryViolation {
                    canonical_form: o.canonical.clone(),
                    detail: format!("{} class is unexpectedly normal", o.class.classification),
                });
            }
            if o.class.aut_order != o.class.expected_normal_order {
                corollary_violations.push(CorollaryViolation {
                    canonical_form: o.canonical.clone(),
                    detail: format!(
                        "normal class has order {} instead of {}",
                        o.class.aut_order, o.class.expected_normal_order
                    ),
                });
            }
            if o.class.direct_product_ok != Some(true) {
                corollary_violations.push(CorollaryViolation {
                    canonical_form: o.canonical.clone(),
                    detail: "direct product verification failed".to_string(),
                });
            }
        } else if expected_exception {
            exceptions.push(SweepException {
                canonical_form: o.canonical.clone(),
                reason: o.class.classification.clone(),
            });
        } else {
            corollary_violations.push(CorollaryViolation {
                canonical_form: o.canonical.clone(),
                detail: "non-normal class outside the known exceptions".to_string(),
            });
        }
    }
    Ok(SweepSummary {
        classes: outcomes.into_iter().map(|o| o.class).collect(),
        classes_normal,
        classes_total: classes.len() as u64,
        corollary_violations,
        exceptions,
        n,
    })
}

/// Lists the automorphism correspondence between a connected transposition
/// graph on at least five vertices and its line graph: every line-graph
/// automorphism lifts to a unique graph automorphism and back.
pub fn lift(tset: &TranspositionSet) -> Result<LiftReport> {
    let g = tset.graph();
    if !g.is_connected() {
        return Err(Error::NotGenerating);
    }
    if tset.n() < 5 {
        return Err(Error::Precondition("lift requires n >= 5"));
    }
    let (lg, line_edges) = g.line_graph()?;
    let g_auts = g.automorphisms()?;
    let lg_auts = lg.automorphisms()?;
    let mut lifted: BTreeSet<Perm> = BTreeSet::new();
    let mut pairs = Vec::new();
    for psi in &lg_auts {
        let phi = cayley_core::transgraph::lift_line_automorphism(&g, psi)?;
        let roundtrip = cayley_core::transgraph::induce_line_automorphism(&g, &phi)?;
        if roundtrip != *psi {
            return Err(Error::NotLiftable);
        }
        lifted.insert(phi.clone());
        pairs.push(LiftPair {
            graph_automorphism: phi.to_string(),
            line_automorphism: psi.to_string(),
        });
    }
    let bijective = lifted.len() == lg_auts.len() && lifted.len() == g_auts.len();
    Ok(LiftReport {
        aut_g_order: g_auts.len() as u64,
        aut_lg_order: lg_auts.len() as u64,
        bijective,
        line_edges: line_edges.iter().map(|&(a, b)| [a + 1, b + 1]).collect(),
        line_vertices: lg.n(),
        n: tset.n(),
        pairs,
    })
}

/// Writes the transposition graph (and, for `n <= 4`, the Cayley graph) as
/// DOT files. Returns the paths written.
pub fn write_dot(
    tset: &TranspositionSet,
    path: &std::path::Path,
) -> std::io::Result<Vec<std::path::PathBuf>> {
    let mut written = Vec::new();
    std::fs::write(path, tset.graph().to_dot())?;
    written.push(path.to_path_buf());
    if tset.n() <= cayley_core::cayley::MAX_DOT_N {
        if let Ok(g) = CayleyGraph::build(tset.clone()) {
            if let Ok(dot) = g.to_dot() {
                let cayley_path = path.with_extension("cayley.dot");
                std::fs::write(&cayley_path, dot)?;
                written.push(cayley_path);
            }
        }
    }
    Ok(written)
}

fn kv(out: &mut String, key: &str, value: impl std::fmt::Display) {
    let _ = writeln!(out, "{key:<24} {value}");
}

pub fn render_analysis_human(r: &AnalysisReport) -> String {
    let mut s = String::new();
    kv(&mut s, "n", r.n);
    let edges: Vec<String> = r.edges.iter().map(|e| format!("({} {})", e[0], e[1])).collect();
    kv(&mut s, "edges", edges.join(" "));
    kv(&mut s, "classification", &r.classification);
    kv(&mut s, "generates_sn", r.generates_sn);
    kv(&mut s, "aut_g_order", r.aut_g_order);
    kv(&mut s, "cayley_vertices", r.cayley_vertices);
    kv(&mut s, "cayley_edges", r.cayley_edges);
    kv(&mut s, "stab_order", r.stab_order);
    kv(&mut s, "aut_order", r.aut_order);
    kv(&mut s, "expected_normal_order", r.expected_normal_order);
    kv(&mut s, "is_normal", r.is_normal);
    kv(&mut s, "criterion_used", &r.criterion_used);
    if let Some(lemmas) = &r.lemma_results {
        for l in lemmas {
            kv(
                &mut s,
                &format!("lemma {}", l.lemma),
                format!(
                    "{} (checked {}, skipped {}, violations {})",
                    if l.pass { "pass" } else { "FAIL" },
                    l.instances_checked,
                    l.instances_skipped,
                    l.violations
                ),
            );
        }
    }
    kv(&mut s, "elapsed_ms", r.elapsed_ms);
    s
}

pub fn render_sweep_human(r: &SweepSummary) -> String {
    let mut s = String::new();
    kv(&mut s, "n", r.n);
    kv(&mut s, "classes_total", r.classes_total);
    kv(&mut s, "classes_normal", r.classes_normal);
    for e in &r.exceptions {
        kv(&mut s, "exception", format!("{} [{}]", e.reason, e.canonical_form));
    }
    for v in &r.corollary_violations {
        kv(&mut s, "VIOLATION", format!("{} [{}]", v.detail, v.canonical_form));
    }
    let _ = writeln!(
        s,
        "{:<16} {:>6} {:>10} {:>10} {:>7} edges",
        "classification", "aut_g", "aut_order", "expected", "normal"
    );
    for c in &r.classes {
        let edges: Vec<String> = c.edges.iter().map(|e| format!("{}-{}", e[0], e[1])).collect();
        let _ = writeln!(
            s,
            "{:<16} {:>6} {:>10} {:>10} {:>7} {}",
            c.classification,
            c.aut_g_order,
            c.aut_order,
            c.expected_normal_order,
            c.is_normal,
            edges.join(",")
        );
    }
    s
}

pub fn render_lemmas_human(r: &LemmasReport) -> String {
    let mut s = String::new();
    kv(&mut s, "n", r.n);
    kv(&mut s, "seed", r.seed);
    kv(&mut s, "sigmas", r.sigmas.join(" "));
    for l in &r.lemmas {
        kv(
            &mut s,
            &format!("lemma {}", l.lemma),
            format!(
                "{} (checked {}, skipped {}, violations {})",
                if l.pass { "pass" } else { "FAIL" },
                l.instances_checked,
                l.instances_skipped,
                l.violations
            ),
        );
        for d in &l.violation_details {
            kv(&mut s, "  violation", d);
        }
    }
    kv(&mut s, "pass", r.pass);
    s
}

pub fn render_lift_human(r: &LiftReport) -> String {
    let mut s = String::new();
    kv(&mut s, "n", r.n);
    kv(&mut s, "line_vertices", r.line_vertices);
    kv(&mut s, "aut_g_order", r.aut_g_order);
    kv(&mut s, "aut_lg_order", r.aut_lg_order);
    kv(&mut s, "bijective", r.bijective);
    for p in &r.pairs {
        kv(&mut s, "pair", format!("{} <-> {}", p.line_automorphism, p.graph_automorphism));
    }
    s
}
