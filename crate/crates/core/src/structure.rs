//! Executable verification of the structural facts about transpositions
//! and the substructures they induce in the Cayley graph: commutation vs
//! disjointness, unique four-cycles, complete bipartite `K_{3,3}` blocks
//! vs triangles, the eight-family classification of generator 4-tuples
//! multiplying to a fixed 3-cycle, and the unique non-commuting 6-cycle.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::cayley::CayleyGraph;
use crate::perm::{all_transpositions, Perm, Transposition};
use crate::transgraph::TranspositionSet;
use crate::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Lemma {
    CommuteDisjoint,
    FourCycle,
    K33,
    TupleEnumeration,
    SixCycle,
}

impl Lemma {
    pub fn as_str(&self) -> &'static str {
        match self {
            Lemma::CommuteDisjoint => "commute_disjoint",
            Lemma::FourCycle => "four_cycle",
            Lemma::K33 => "k33",
            Lemma::TupleEnumeration => "tuple_families",
            Lemma::SixCycle => "six_cycle",
        }
    }
}

/// A counterexample record: the base point, the transpositions involved
/// and what was actually found.
#[derive(Clone, Debug)]
pub struct Violation {
    pub sigma: Option<Perm>,
    pub transpositions: Vec<Transposition>,
    pub detail: String,
}

/// Outcome of one lemma suite. `instances_skipped` counts instances whose
/// hypothesis does not hold (nothing is asserted about those).
#[derive(Clone, Debug)]
pub struct LemmaReport {
    pub lemma: Lemma,
    pub instances_checked: u64,
    pub instances_skipped: u64,
    pub violations: Vec<Violation>,
}

impl LemmaReport {
    fn new(lemma: Lemma) -> Self {
        LemmaReport {
            lemma,
            instances_checked: 0,
            instances_skipped: 0,
            violations: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Symbol of a tuple-family pattern: one of the three fixed points of the
/// target 3-cycle, or the parameter `k` ranging over all other points.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Sym {
    One,
    Two,
    Three,
    K,
}

impl Sym {
    fn point(&self, k: usize) -> usize {
        match self {
            Sym::One => 0,
            Sym::Two => 1,
            Sym::Three => 2,
            Sym::K => k,
        }
    }
}

/// One of the eight families of generator 4-tuples whose product is the
/// 3-cycle `(1 2 3)` under the non-commuting chain condition. Six families
/// are parametric in `k`, two are single tuples.
#[derive(Clone, Copy, Debug)]
pub struct TupleFamily {
    pub id: u8,
    pub pattern: [(Sym, Sym); 4],
    pub parametric: bool,
}

use Sym::{K, One, Three, Two};

const FAMILIES: [TupleFamily; 8] = [
    TupleFamily {
        id: 1,
        pattern: [(One, Three), (Two, Three), (One, Two), (One, Three)],
        parametric: false,
    },
    TupleFamily {
        id: 2,
        pattern: [(One, Three), (One, K), (One, Two), (Two, K)],
        parametric: true,
    },
    TupleFamily {
        id: 3,
        pattern: [(Two, Three), (One, Two), (Two, Three), (One, Two)],
        parametric: false,
    },
    TupleFamily {
        id: 4,
        pattern: [(Two, Three), (Three, K), (One, K), (Three, K)],
        parametric: true,
    },
    TupleFamily {
        id: 5,
        pattern: [(Two, K), (Two, Three), (Three, K), (One, Three)],
        parametric: true,
    },
    TupleFamily {
        id: 6,
        pattern: [(Two, K), (One, K), (Three, K), (Two, K)],
        parametric: true,
    },
    TupleFamily {
        id: 7,
        pattern: [(One, K), (Three, K), (One, K), (One, Two)],
        parametric: true,
    },
    TupleFamily {
        id: 8,
        pattern: [(One, K), (One, Two), (Two, Three), (Three, K)],
        parametric: true,
    },
];

pub fn tuple_families() -> &'static [TupleFamily; 8] {
    &FAMILIES
}

impl TupleFamily {
    /// The concrete tuple for a parameter value (`k >= 3`, 0-based;
    /// ignored for non-parametric families).
    pub fn instantiate(&self, k: usize) -> [Transposition; 4] {
        let mk = |s: &(Sym, Sym)| {
            Transposition::new(s.0.point(k), s.1.point(k)).expect("patterns are proper pairs")
        };
        [
            mk(&self.pattern[0]),
            mk(&self.pattern[1]),
            mk(&self.pattern[2]),
            mk(&self.pattern[3]),
        ]
    }

    fn matches(&self, tuple: &[Transposition; 4], n: usize) -> Option<Option<usize>> {
        if !self.parametric {
            return (self.instantiate(3) == *tuple).then_some(None);
        }
        (3..n).find_map(|k| (self.instantiate(k) == *tuple).then_some(Some(k)))
    }
}

/// A surviving 4-tuple with its unique family and parameter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassifiedTuple {
    pub tuple: [Transposition; 4],
    pub family: u8,
    pub k: Option<usize>,
}

/// Classifies a tuple into exactly one family; ambiguity or failure to
/// classify is an error rather than a silent resolution.
pub fn classify_tuple(tuple: &[Transposition; 4], n: usize) -> Result<(u8, Option<usize>)> {
    let mut hits = Vec::new();
    for fam in FAMILIES.iter() {
        if let Some(k) = fam.matches(tuple, n) {
            hits.push((fam.id, k));
        }
    }
    match hits.as_slice() {
        [one] => Ok(*one),
        [] => Err(Error::Precondition("tuple matches no family")),
        _ => Err(Error::Precondition("tuple matches multiple families")),
    }
}

fn target_three_cycle(n: usize) -> Perm {
    // (1 2 3): 0 -> 1 -> 2 -> 0
    let mut images: Vec<usize> = (0..n).collect();
    images[0] = 1;
    images[1] = 2;
    images[2] = 0;
    Perm::from_images(images).expect("valid cycle")
}

/// Brute force over all 4-tuples of transpositions of `{1..n}`: keep those
/// multiplying to `(1 2 3)` (rightmost factor applied first) such that no
/// two consecutive entries of the chain `(1 2), a, b, c, d, (2 3)` commute,
/// and classify each survivor into its unique family.
pub fn enumerate_tuple_families(n: usize) -> Result<Vec<ClassifiedTuple>> {
    if n < 3 {
        return Err(Error::DomainTooSmall { n, min: 3 });
    }
    let trans = all_transpositions(n)?;
    let perms: Vec<Perm> = trans
        .iter()
        .map(|t| t.as_perm(n))
        .collect::<Result<_>>()?;
    let target = target_three_cycle(n);
    let t12 = Transposition::new(0, 1)?;
    let t23 = Transposition::new(1, 2)?;
    let mut out = Vec::new();
    for (ai, a) in trans.iter().enumerate() {
        if t12.commutes_with(a) {
            continue;
        }
        for (bi, b) in trans.iter().enumerate() {
            if a.commutes_with(b) {
                continue;
            }
            let pab = perms[ai].compose(&perms[bi])?;
            for (ci, c) in trans.iter().enumerate() {
                if b.commutes_with(c) {
                    continue;
                }
                for (di, d) in trans.iter().enumerate() {
                    if c.commutes_with(d) || d.commutes_with(&t23) {
                        continue;
                    }
                    let product = pab.compose(&perms[ci])?.compose(&perms[di])?;
                    if product == target {
                        let tuple = [*a, *b, *c, *d];
                        let (family, k) = classify_tuple(&tuple, n)?;
                        out.push(ClassifiedTuple { tuple, family, k });
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Exhaustiveness check: the brute-force survivor set must equal the union
/// of all family instantiations, with a unique classification each.
pub fn verify_tuple_families(n: usize) -> Result<(LemmaReport, Vec<ClassifiedTuple>)> {
    let mut report = LemmaReport::new(Lemma::TupleEnumeration);
    if n < 3 {
        return Err(Error::DomainTooSmall { n, min: 3 });
    }
    let trans = all_transpositions(n)?;
    let perms: Vec<Perm> = trans
        .iter()
        .map(|t| t.as_perm(n))
        .collect::<Result<_>>()?;
    let target = target_three_cycle(n);
    let t12 = Transposition::new(0, 1)?;
    let t23 = Transposition::new(1, 2)?;

    // raw survivors, no classification involved
    let mut survivors: BTreeSet<[Transposition; 4]> = BTreeSet::new();
    for (ai, a) in trans.iter().enumerate() {
        for (bi, b) in trans.iter().enumerate() {
            for (ci, c) in trans.iter().enumerate() {
                for (di, d) in trans.iter().enumerate() {
                    if t12.commutes_with(a)
                        || a.commutes_with(b)
                        || b.commutes_with(c)
                        || c.commutes_with(d)
                        || d.commutes_with(&t23)
                    {
                        continue;
                    }
                    let product = perms[ai]
                        .compose(&perms[bi])?
                        .compose(&perms[ci])?
                        .compose(&perms[di])?;
                    if product == target {
                        survivors.insert([*a, *b, *c, *d]);
                    }
                }
            }
        }
    }

    // expected: every instantiation of the eight families
    let mut expected: BTreeSet<[Transposition; 4]> = BTreeSet::new();
    for fam in FAMILIES.iter() {
        if fam.parametric {
            for k in 3..n {
                expected.insert(fam.instantiate(k));
            }
        } else {
            expected.insert(fam.instantiate(3));
        }
    }

    for extra in survivors.difference(&expected) {
        report.violations.push(Violation {
            sigma: None,
            transpositions: extra.to_vec(),
            detail: String::from("survivor tuple outside the eight families"),
        });
    }
    for miss in expected.difference(&survivors) {
        report.violations.push(Violation {
            sigma: None,
            transpositions: miss.to_vec(),
            detail: String::from("family tuple not produced by the brute force"),
        });
    }

    let mut classified = Vec::new();
    for tuple in &survivors {
        match classify_tuple(tuple, n) {
            Ok((family, k)) => classified.push(ClassifiedTuple {
                tuple: *tuple,
                family,
                k,
            }),
            Err(_) => report.violations.push(Violation {
                sigma: None,
                transpositions: tuple.to_vec(),
                detail: String::from("classification not total and unambiguous"),
            }),
        }
    }
    report.instances_checked = survivors.len() as u64;
    Ok((report, classified))
}

/// Two distinct generators commute exactly when their edges are disjoint.
pub fn verify_commute_disjoint(t: &TranspositionSet) -> LemmaReport {
    let mut report = LemmaReport::new(Lemma::CommuteDisjoint);
    let n = t.n();
    let members = t.members();
    for i in 0..members.len() {
        for j in i + 1..members.len() {
            let (a, b) = (members[i], members[j]);
            let pa = a.as_perm(n).expect("member in range");
            let pb = b.as_perm(n).expect("member in range");
            let commute = pa.compose(&pb).unwrap() == pb.compose(&pa).unwrap();
            report.instances_checked += 1;
            if commute != a.is_disjoint(&b) {
                report.violations.push(Violation {
                    sigma: None,
                    transpositions: alloc::vec![a, b],
                    detail: format!(
                        "commute={commute} but disjoint={}",
                        a.is_disjoint(&b)
                    ),
                });
            }
        }
    }
    report
}

fn common_neighbors(g: &CayleyGraph, x: usize, y: usize) -> Vec<u32> {
    let mut out: Vec<u32> = g
        .row(x)
        .iter()
        .copied()
        .filter(|&w| g.has_edge(y, w as usize))
        .collect();
    out.sort_unstable();
    out
}

/// For every generator pair through a base vertex: commuting pairs have
/// exactly one extra common neighbor (their product); non-commuting pairs
/// have none when the third edge of their triangle is absent and exactly
/// the two 3-cycle translates when it is present.
pub fn verify_four_cycle(g: &CayleyGraph, sigma: &Perm) -> Result<LemmaReport> {
    let mut report = LemmaReport::new(Lemma::FourCycle);
    if sigma.n() != g.n() {
        return Err(Error::SizeMismatch {
            left: sigma.n(),
            right: g.n(),
        });
    }
    let members = g.tset().members();
    let gens = g.generators();
    let v_sigma = sigma.rank() as u32;
    for i in 0..members.len() {
        for j in i + 1..members.len() {
            let (a, b) = (members[i], members[j]);
            let va = gens[i].compose(sigma)?.rank();
            let vb = gens[j].compose(sigma)?.rank();
            let mut common = common_neighbors(g, va, vb);
            common.retain(|&w| w != v_sigma);
            let mut expect: Vec<u32> = if a.is_disjoint(&b) {
                alloc::vec![gens[i].compose(&gens[j])?.compose(sigma)?.rank() as u32]
            } else {
                let shared = a.shared_point(&b).expect("overlapping pair");
                let other_a = if a.lo() == shared { a.hi() } else { a.lo() };
                let other_b = if b.lo() == shared { b.hi() } else { b.lo() };
                if g.tset().contains(&Transposition::new(other_a, other_b)?) {
                    alloc::vec![
                        gens[i].compose(&gens[j])?.compose(sigma)?.rank() as u32,
                        gens[j].compose(&gens[i])?.compose(sigma)?.rank() as u32,
                    ]
                } else {
                    Vec::new()
                }
            };
            expect.sort_unstable();
            report.instances_checked += 1;
            if common != expect {
                report.violations.push(Violation {
                    sigma: Some(sigma.clone()),
                    transpositions: alloc::vec![a, b],
                    detail: format!(
                        "common neighbors besides the base: found {} expected {}",
                        common.len(),
                        expect.len()
                    ),
                });
            }
        }
    }
    Ok(report)
}

/// Triangles of the transposition graph correspond exactly to induced
/// `K_{3,3}` subgraphs through a base vertex and two of its neighbors.
pub fn verify_k33(g: &CayleyGraph, sigma: &Perm) -> Result<LemmaReport> {
    let mut report = LemmaReport::new(Lemma::K33);
    if sigma.n() != g.n() {
        return Err(Error::SizeMismatch {
            left: sigma.n(),
            right: g.n(),
        });
    }
    let tset = g.tset();
    let members = tset.members();
    let gens = g.generators();
    let v_sigma = sigma.rank();

    // forward: every triangle {p,q,r} induces a K_{3,3} with the stated
    // parts and product identities
    let tg = tset.graph();
    for p in 0..g.n() {
        for q in p + 1..g.n() {
            if !tg.has_edge(p, q) {
                continue;
            }
            for r in q + 1..g.n() {
                if !tg.has_edge(p, r) || !tg.has_edge(q, r) {
                    continue;
                }
                report.instances_checked += 1;
                let a = Transposition::new(p, q)?;
                let b = Transposition::new(q, r)?;
                let c = Transposition::new(p, r)?;
                let pa = a.as_perm(g.n())?;
                let pb = b.as_perm(g.n())?;
                let pc = c.as_perm(g.n())?;
                let ab = pa.compose(&pb)?;
                let ba = pb.compose(&pa)?;
                let identities = ab == pc.compose(&pa)?
                    && ab == pb.compose(&pc)?
                    && ba == pa.compose(&pc)?
                    && ba == pc.compose(&pb)?;
                let part_x = [
                    v_sigma,
                    ab.compose(sigma)?.rank(),
                    ba.compose(sigma)?.rank(),
                ];
                let part_y = [
                    pa.compose(sigma)?.rank(),
                    pb.compose(sigma)?.rank(),
                    pc.compose(sigma)?.rank(),
                ];
                let mut distinct: BTreeSet<usize> = BTreeSet::new();
                distinct.extend(part_x);
                distinct.extend(part_y);
                let complete = part_x
                    .iter()
                    .all(|&x| part_y.iter().all(|&y| g.has_edge(x, y)));
                if !(identities && complete && distinct.len() == 6) {
                    report.violations.push(Violation {
                        sigma: Some(sigma.clone()),
                        transpositions: alloc::vec![a, b, c],
                        detail: format!(
                            "triangle without its K33: identities={identities} complete={complete} distinct={}",
                            distinct.len()
                        ),
                    });
                }
            }
        }
    }

    // converse: a K_{3,3} through the base vertex and two generator
    // neighbors forces a triangle
    for i in 0..members.len() {
        for j in i + 1..members.len() {
            let (a, b) = (members[i], members[j]);
            let va = gens[i].compose(sigma)?.rank();
            let vb = gens[j].compose(sigma)?.rank();
            let mut found = false;
            for (ci, _) in members.iter().enumerate() {
                if ci == i || ci == j {
                    continue;
                }
                let vc = gens[ci].compose(sigma)?.rank();
                let mut common = common_neighbors(g, va, vb);
                common.retain(|&w| g.has_edge(vc, w as usize));
                if common.len() >= 3 {
                    found = true;
                    break;
                }
            }
            let expected = match a.shared_point(&b) {
                None => false,
                Some(shared) => {
                    let other_a = if a.lo() == shared { a.hi() } else { a.lo() };
                    let other_b = if b.lo() == shared { b.hi() } else { b.lo() };
                    tset.contains(&Transposition::new(other_a, other_b)?)
                }
            };
            report.instances_checked += 1;
            if found != expected {
                report.violations.push(Violation {
                    sigma: Some(sigma.clone()),
                    transpositions: alloc::vec![a, b],
                    detail: format!("K33 found={found} but triangle={expected}"),
                });
            }
        }
    }
    Ok(report)
}

/// For every ordered non-commuting generator pair whose edges avoid common
/// cycles of length at most four: there is exactly one 6-cycle through
/// `(t sigma, sigma, s sigma)` with pairwise non-commuting consecutive edge
/// labels, and its vertices are the translates of `ts`, `sts` and `st`.
/// Pairs failing the hypothesis are counted but nothing is asserted.
pub fn verify_six_cycle(g: &CayleyGraph, sigma: &Perm) -> Result<LemmaReport> {
    let mut report = LemmaReport::new(Lemma::SixCycle);
    if sigma.n() != g.n() {
        return Err(Error::SizeMismatch {
            left: sigma.n(),
            right: g.n(),
        });
    }
    let tset = g.tset();
    let members = tset.members();
    let gens = g.generators();
    let deg = g.degree();
    let comm: Vec<Vec<bool>> = members
        .iter()
        .map(|a| members.iter().map(|b| a.commutes_with(b)).collect())
        .collect();
    let v_sigma = sigma.rank();
    for si in 0..deg {
        for ti in 0..deg {
            if si == ti || comm[si][ti] {
                continue;
            }
            if tset.edges_share_short_cycle(&members[si], &members[ti])? {
                report.instances_skipped += 1;
                continue;
            }
            report.instances_checked += 1;
            let v1 = g.row(v_sigma)[si] as usize; // s sigma
            let vt = g.row(v_sigma)[ti] as usize; // t sigma
            let mut found: Vec<[usize; 3]> = Vec::new();
            for l2 in 0..deg {
                if comm[l2][si] {
                    continue;
                }
                let p = g.row(v1)[l2] as usize;
                for l3 in 0..deg {
                    if comm[l3][l2] {
                        continue;
                    }
                    let q = g.row(p)[l3] as usize;
                    for l4 in 0..deg {
                        if comm[l4][l3] {
                            continue;
                        }
                        let r = g.row(q)[l4] as usize;
                        let Some(l5) = g.edge_label(r, vt) else {
                            continue;
                        };
                        if comm[l5][l4] || comm[l5][ti] {
                            continue;
                        }
                        let verts = [v_sigma, v1, p, q, r, vt];
                        let set: BTreeSet<usize> = verts.iter().copied().collect();
                        if set.len() == 6 {
                            found.push([p, q, r]);
                        }
                    }
                }
            }
            let ts = gens[ti].compose(&gens[si])?;
            let sts = gens[si].compose(&ts)?;
            let st = gens[si].compose(&gens[ti])?;
            let expect = [
                ts.compose(sigma)?.rank(),
                sts.compose(sigma)?.rank(),
                st.compose(sigma)?.rank(),
            ];
            if found.len() != 1 || found[0] != expect {
                report.violations.push(Violation {
                    sigma: Some(sigma.clone()),
                    transpositions: alloc::vec![members[si], members[ti]],
                    detail: format!("found {} qualifying 6-cycles, expected 1", found.len()),
                });
            }
        }
    }
    Ok(report)
}
