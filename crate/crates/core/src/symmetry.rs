//! Automorphism groups of Cayley graphs and normality decisions.
//!
//! The right translations form a vertex-transitive subgroup, so the full
//! automorphism group factors as `|Aut| = n! * |Stab(id)|` and only the
//! stabilizer of the identity vertex has to be searched. Normality is
//! decided two independent ways: the fix-the-neighborhood criterion (for
//! `n >= 5`: the graph is normal iff only the identity automorphism fixes
//! the identity vertex and all of its neighbors pointwise) and direct
//! conjugation of the generator translations by stabilizer elements.

use alloc::vec;
use alloc::vec::Vec;

use crate::cayley::{CayleyGraph, VertexPerm};
use crate::perm::factorial;
use crate::{Error, Result};

/// Largest point count for stabilizer searches.
pub const MAX_SEARCH_N: usize = 7;

/// Which normality criterion to apply.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Method {
    /// Only valid for `n >= 5`.
    FixNeighborhood,
    /// Valid for every `n`.
    Conjugation,
    /// Run both and require agreement; valid for `n >= 5`.
    Both,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::FixNeighborhood => "fix-neighborhood",
            Method::Conjugation => "conjugation",
            Method::Both => "both",
        }
    }
}

/// The automorphism-group computation: stabilizer elements are stored in
/// full, sorted by image table.
#[derive(Clone, Debug)]
pub struct AutSummary {
    pub stab_order: u64,
    pub aut_order: u64,
    pub stab_elements: Vec<VertexPerm>,
}

/// Outcome of a normality decision. A negative verdict always carries a
/// witness: either a non-identity automorphism fixing the identity vertex
/// and its whole neighborhood pointwise, or a stabilizer element whose
/// conjugate of some generator translation leaves the right regular
/// representation.
#[derive(Clone, Debug)]
pub struct NormalityVerdict {
    pub is_normal: bool,
    pub witness: Option<VertexPerm>,
    pub expected_normal_order: u64,
    pub actual_order: u64,
    pub method: Method,
}

/// All automorphisms fixing the identity vertex.
///
/// Search order: first the image of the identity's neighborhood, as a
/// bijection of the generators restricted to those preserving the
/// commuting relation (commuting pairs of generators have a different
/// common-neighbor count through the identity than non-commuting pairs,
/// so every stabilizer element preserves commutation); then the remaining
/// vertices in breadth-first order, where each vertex's image must be a
/// yet-unused vertex at the same distance from the identity adjacent to
/// the images of all its already-assigned neighbors. A vertex with a
/// unique consistent image is forced; branching happens only otherwise,
/// and complete assignments are verified edge-by-edge before being kept.
pub fn stabilizer_of_identity(g: &CayleyGraph) -> Result<Vec<VertexPerm>> {
    search_stabilizer(g, false)
}

/// All automorphisms fixing the identity vertex and each of its neighbors
/// pointwise: the same search with the neighborhood images pinned.
pub fn fix_neighborhood_stabilizer(g: &CayleyGraph) -> Result<Vec<VertexPerm>> {
    search_stabilizer(g, true)
}

/// Orbit–stabilizer factorization of the automorphism group order. The
/// orbit of the identity vertex is everything (the right translations act
/// transitively), so `|Aut| = n! * |Stab(id)|`.
pub fn aut_summary(g: &CayleyGraph) -> Result<AutSummary> {
    let stab_elements = stabilizer_of_identity(g)?;
    let stab_order = stab_elements.len() as u64;
    Ok(AutSummary {
        stab_order,
        aut_order: factorial(g.n()) as u64 * stab_order,
        stab_elements,
    })
}

/// The order the automorphism group has exactly when the graph is normal:
/// `n!` times the number of group automorphisms preserving the generator
/// set, which equals `|Aut(G(T))|` for `n >= 3` (conjugation) and is
/// trivial for `n = 2`.
pub fn expected_normal_order(g: &CayleyGraph) -> Result<u64> {
    let n = g.n();
    let graph_auts = if n >= 3 {
        g.tset().graph().automorphisms()?.len() as u64
    } else {
        1
    };
    Ok(factorial(n) as u64 * graph_auts)
}

/// Decides normality, computing the stabilizer internally.
pub fn is_normal(g: &CayleyGraph, method: Method) -> Result<NormalityVerdict> {
    let summary = aut_summary(g)?;
    is_normal_with(g, &summary, method)
}

/// Decides normality reusing an already-computed stabilizer.
pub fn is_normal_with(
    g: &CayleyGraph,
    summary: &AutSummary,
    method: Method,
) -> Result<NormalityVerdict> {
    let expected = expected_normal_order(g)?;
    let base = NormalityVerdict {
        is_normal: true,
        witness: None,
        expected_normal_order: expected,
        actual_order: summary.aut_order,
        method,
    };
    match method {
        Method::FixNeighborhood => {
            if g.n() < 5 {
                return Err(Error::Precondition(
                    "fix-neighborhood criterion requires n >= 5",
                ));
            }
            let fixers = fix_neighborhood_stabilizer(g)?;
            let witness = fixers.into_iter().find(|p| !p.is_identity());
            Ok(NormalityVerdict {
                is_normal: witness.is_none(),
                witness,
                ..base
            })
        }
        Method::Conjugation => {
            let witness = conjugation_witness(g, summary)?;
            Ok(NormalityVerdict {
                is_normal: witness.is_none(),
                witness,
                ..base
            })
        }
        Method::Both => {
            let fix = is_normal_with(g, summary, Method::FixNeighborhood)?;
            let conj = is_normal_with(g, summary, Method::Conjugation)?;
            if fix.is_normal != conj.is_normal {
                return Err(Error::Precondition(
                    "normality criteria disagree; implementation bug",
                ));
            }
            Ok(NormalityVerdict {
                is_normal: fix.is_normal,
                witness: fix.witness.or(conj.witness),
                method: Method::Both,
                ..base
            })
        }
    }
}

/// Finds a stabilizer element conjugating some generator translation out
/// of the right regular representation, if one exists.
///
/// Conjugating only the generator translations suffices: the translations
/// by the generators generate the whole right regular representation since
/// the generators generate the group, conjugation by a fixed automorphism
/// is a homomorphism, and the full automorphism group is generated by the
/// right translations together with the stabilizer.
fn conjugation_witness(g: &CayleyGraph, summary: &AutSummary) -> Result<Option<VertexPerm>> {
    let gen_translations: Vec<VertexPerm> = g
        .generators()
        .iter()
        .map(|t| g.right_translation(t))
        .collect::<Result<_>>()?;
    for pi in &summary.stab_elements {
        if pi.is_identity() {
            continue;
        }
        let pi_inv = pi.inverse();
        for rho in &gen_translations {
            let conj = pi.compose(rho)?.compose(&pi_inv)?;
            if g.as_right_translation(&conj).is_none() {
                return Ok(Some(pi.clone()));
            }
        }
    }
    Ok(None)
}

/// Verifies the internal-direct-product structure of a normal Cayley
/// graph's automorphism group: every left translation by a transposition-
/// graph automorphism is a graph automorphism, commutes with every
/// generator translation, meets the right regular representation only in
/// the identity, and the group orders multiply out exactly.
pub fn verify_direct_product(g: &CayleyGraph) -> Result<bool> {
    let summary = aut_summary(g)?;
    verify_direct_product_with(g, &summary)
}

pub fn verify_direct_product_with(g: &CayleyGraph, summary: &AutSummary) -> Result<bool> {
    if g.n() < 3 {
        return Err(Error::Precondition("direct product check requires n >= 3"));
    }
    if conjugation_witness(g, summary)?.is_some() {
        return Err(Error::Precondition(
            "direct product check requires a normal graph",
        ));
    }
    let graph_auts = g.tset().graph().automorphisms()?;
    let gen_translations: Vec<VertexPerm> = g
        .generators()
        .iter()
        .map(|t| g.right_translation(t))
        .collect::<Result<_>>()?;
    for phi in &graph_auts {
        let lam = g.left_translation(phi)?;
        if !g.is_automorphism(&lam) {
            return Ok(false);
        }
        for rho in &gen_translations {
            if lam.compose(rho)? != rho.compose(&lam)? {
                return Ok(false);
            }
        }
        if !phi.is_identity() && g.as_right_translation(&lam).is_some() {
            return Ok(false);
        }
    }
    Ok(factorial(g.n()) as u64 * graph_auts.len() as u64 == summary.aut_order)
}

const UNASSIGNED: u32 = u32::MAX;

struct StabSearch<'g> {
    g: &'g CayleyGraph,
    dist: Vec<u16>,
    order: Vec<u32>,
    nbr_ids: Vec<u32>,
    comm: Vec<Vec<bool>>,
    img: Vec<u32>,
    used: Vec<bool>,
    assigned: usize,
    queue: alloc::collections::VecDeque<u32>,
    cursor: usize,
    results: Vec<VertexPerm>,
}

fn search_stabilizer(g: &CayleyGraph, pin_neighborhood: bool) -> Result<Vec<VertexPerm>> {
    if g.n() > MAX_SEARCH_N {
        return Err(Error::Capacity {
            what: "stabilizer search points",
            limit: MAX_SEARCH_N,
            requested: g.n(),
        });
    }
    let (dist, order) = g.bfs_from_identity();
    let deg = g.degree();
    let nbr_ids: Vec<u32> = g.row(0).to_vec();
    let members = g.tset().members();
    let comm: Vec<Vec<bool>> = members
        .iter()
        .map(|a| members.iter().map(|b| a.commutes_with(b)).collect())
        .collect();
    let nv = g.vertex_count();
    let mut search = StabSearch {
        g,
        dist,
        order,
        nbr_ids,
        comm,
        img: vec![UNASSIGNED; nv],
        used: vec![false; nv],
        assigned: 0,
        queue: alloc::collections::VecDeque::new(),
        cursor: 0,
        results: Vec::new(),
    };
    if pin_neighborhood {
        let beta: Vec<usize> = (0..deg).collect();
        search.run_beta(&beta);
    } else {
        let mut beta = vec![usize::MAX; deg];
        let mut beta_used = vec![false; deg];
        search.enumerate_betas(0, &mut beta, &mut beta_used);
    }
    search.results.sort_unstable();
    Ok(search.results)
}

impl<'g> StabSearch<'g> {
    /// Neighborhood images in lexicographic generator order, pruned by
    /// preservation of the commuting relation.
    fn enumerate_betas(&mut self, i: usize, beta: &mut Vec<usize>, beta_used: &mut Vec<bool>) {
        let deg = self.g.degree();
        if i == deg {
            self.run_beta(beta);
            return;
        }
        for w in 0..deg {
            if beta_used[w] {
                continue;
            }
            if (0..i).any(|j| self.comm[j][i] != self.comm[beta[j]][w]) {
                continue;
            }
            beta[i] = w;
            beta_used[w] = true;
            self.enumerate_betas(i + 1, beta, beta_used);
            beta[i] = usize::MAX;
            beta_used[w] = false;
        }
    }

    fn run_beta(&mut self, beta: &[usize]) {
        let mut trail: Vec<u32> = Vec::new();
        self.assign(0, 0, &mut trail);
        for (gi, &bg) in beta.iter().enumerate() {
            self.assign(self.nbr_ids[gi] as usize, self.nbr_ids[bg], &mut trail);
        }
        self.cursor = 0;
        self.dfs();
        for &v in trail.iter().rev() {
            self.unassign(v as usize);
        }
    }

    fn assign(&mut self, v: usize, w: u32, trail: &mut Vec<u32>) {
        self.img[v] = w;
        self.used[w as usize] = true;
        self.assigned += 1;
        trail.push(v as u32);
        for &u in self.g.row(v) {
            if self.img[u as usize] == UNASSIGNED {
                self.queue.push_back(u);
            }
        }
    }

    fn unassign(&mut self, v: usize) {
        self.used[self.img[v] as usize] = false;
        self.img[v] = UNASSIGNED;
        self.assigned -= 1;
    }

    /// Candidate images of `v`: unused vertices at the same distance from
    /// the identity, adjacent to the images of every assigned neighbor.
    fn candidates(&self, v: usize) -> Vec<u32> {
        let vd = self.dist[v];
        let row_v = self.g.row(v);
        let Some(&u0) = row_v
            .iter()
            .find(|&&u| self.img[u as usize] != UNASSIGNED)
        else {
            // no information yet; defer until a neighbor is assigned
            return Vec::new();
        };
        let mut cands: Vec<u32> = Vec::new();
        'cand: for &w in self.g.row(self.img[u0 as usize] as usize) {
            if self.used[w as usize] || self.dist[w as usize] != vd {
                continue;
            }
            for &u in row_v {
                let iu = self.img[u as usize];
                if u != u0 && iu != UNASSIGNED && !self.g.row(iu as usize).contains(&w) {
                    continue 'cand;
                }
            }
            cands.push(w);
        }
        cands.sort_unstable();
        cands
    }

    /// Drains the propagation queue: a vertex with exactly one consistent
    /// image is assigned immediately, one with none rejects the branch.
    /// Vertices with several candidates are revisited when a further
    /// neighbor is assigned.
    fn propagate(&mut self, trail: &mut Vec<u32>) -> bool {
        while let Some(v) = self.queue.pop_front() {
            let v = v as usize;
            if self.img[v] != UNASSIGNED {
                continue;
            }
            let cands = self.candidates(v);
            match cands.as_slice() {
                [] => {
                    self.queue.clear();
                    return false;
                }
                [w] => self.assign(v, *w, trail),
                _ => {}
            }
        }
        true
    }

    /// Depth-first search interleaving forced propagation with branching
    /// on the first unassigned vertex in BFS order.
    fn dfs(&mut self) {
        let mut trail: Vec<u32> = Vec::new();
        if self.propagate(&mut trail) {
            if self.assigned == self.order.len() {
                if self.is_full_automorphism() {
                    let images = self.img.clone();
                    self.results
                        .push(VertexPerm::from_images(images).expect("search keeps a bijection"));
                }
            } else {
                let saved_cursor = self.cursor;
                while self.img[self.order[self.cursor] as usize] != UNASSIGNED {
                    self.cursor += 1;
                }
                let v = self.order[self.cursor] as usize;
                for w in self.candidates(v) {
                    let mut branch_trail: Vec<u32> = Vec::new();
                    self.assign(v, w, &mut branch_trail);
                    self.dfs();
                    for &x in branch_trail.iter().rev() {
                        self.unassign(x as usize);
                    }
                    self.queue.clear();
                }
                self.cursor = saved_cursor;
            }
        }
        for &v in trail.iter().rev() {
            self.unassign(v as usize);
        }
    }

    fn is_full_automorphism(&self) -> bool {
        for v in 0..self.g.vertex_count() {
            let pv = self.img[v] as usize;
            for &w in self.g.row(v) {
                if !self.g.has_edge(pv, self.img[w as usize] as usize) {
                    return false;
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{all_transpositions, Perm, Transposition};
    use crate::transgraph::TranspositionSet;
    use alloc::collections::BTreeSet;

    fn t(a: usize, b: usize) -> Transposition {
        Transposition::new(a - 1, b - 1).unwrap()
    }

    fn build(n: usize, pairs: &[(usize, usize)]) -> CayleyGraph {
        let members = pairs.iter().map(|&(a, b)| t(a, b)).collect();
        CayleyGraph::build(TranspositionSet::new(n, members).unwrap()).unwrap()
    }

    fn path(n: usize) -> CayleyGraph {
        let pairs: Vec<(usize, usize)> = (1..n).map(|i| (i, i + 1)).collect();
        build(n, &pairs)
    }

    fn star(n: usize) -> CayleyGraph {
        let pairs: Vec<(usize, usize)> = (2..=n).map(|i| (1, i)).collect();
        build(n, &pairs)
    }

    fn full(n: usize) -> CayleyGraph {
        CayleyGraph::build(TranspositionSet::new(n, all_transpositions(n).unwrap()).unwrap())
            .unwrap()
    }

    fn c4() -> CayleyGraph {
        build(4, &[(1, 2), (2, 3), (3, 4), (1, 4)])
    }

    #[test]
    fn stabilizer_orders() {
        assert_eq!(stabilizer_of_identity(&c4()).unwrap().len(), 32);
        assert_eq!(stabilizer_of_identity(&path(5)).unwrap().len(), 2);
        assert_eq!(stabilizer_of_identity(&full(3)).unwrap().len(), 12);
    }

    #[test]
    fn aut_orders() {
        assert_eq!(aut_summary(&c4()).unwrap().aut_order, 768);
        assert_eq!(aut_summary(&path(5)).unwrap().aut_order, 240);
        assert_eq!(aut_summary(&full(3)).unwrap().aut_order, 72);
        assert_eq!(aut_summary(&build(2, &[(1, 2)])).unwrap().aut_order, 2);
    }

    #[test]
    fn stabilizer_contains_identity_and_is_closed() {
        for g in [c4(), path(4), full(3)] {
            let stab = stabilizer_of_identity(&g).unwrap();
            assert!(stab.iter().any(|p| p.is_identity()));
            let set: BTreeSet<VertexPerm> = stab.iter().cloned().collect();
            assert_eq!(set.len(), stab.len());
            for a in &stab {
                assert!(set.contains(&a.inverse()));
                for b in &stab {
                    assert!(set.contains(&a.compose(b).unwrap()));
                }
            }
        }
    }

    #[test]
    fn stabilizer_elements_are_automorphisms() {
        let g = c4();
        for pi in stabilizer_of_identity(&g).unwrap() {
            assert!(g.is_automorphism(&pi));
            assert_eq!(pi.get(0), 0);
        }
    }

    #[test]
    fn stabilizer_neighborhood_action_preserves_commuting() {
        for g in [c4(), path(5)] {
            let members = g.tset().members();
            let nbrs: Vec<usize> = g.row(0).iter().map(|&w| w as usize).collect();
            for pi in stabilizer_of_identity(&g).unwrap() {
                for (i, &vi) in nbrs.iter().enumerate() {
                    for (j, &vj) in nbrs.iter().enumerate() {
                        if i >= j {
                            continue;
                        }
                        let ii = nbrs.iter().position(|&x| x == pi.get(vi)).unwrap();
                        let jj = nbrs.iter().position(|&x| x == pi.get(vj)).unwrap();
                        assert_eq!(
                            members[i].commutes_with(&members[j]),
                            members[ii].commutes_with(&members[jj])
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn fix_neighborhood_examples() {
        let p5 = path(5);
        let fixers = fix_neighborhood_stabilizer(&p5).unwrap();
        assert_eq!(fixers.len(), 1);
        assert!(fixers[0].is_identity());

        let k5 = full(5);
        let fixers = fix_neighborhood_stabilizer(&k5).unwrap();
        assert!(fixers.iter().any(|p| !p.is_identity()));

        let fixers = fix_neighborhood_stabilizer(&c4()).unwrap();
        assert!(fixers.iter().any(|p| !p.is_identity()));
    }

    #[test]
    fn normality_verdicts() {
        let p5 = path(5);
        for method in [Method::FixNeighborhood, Method::Conjugation, Method::Both] {
            let v = is_normal(&p5, method).unwrap();
            assert!(v.is_normal, "{method:?}");
            assert!(v.witness.is_none());
            assert_eq!(v.actual_order, 240);
            assert_eq!(v.expected_normal_order, 240);
        }

        let v = is_normal(&c4(), Method::Conjugation).unwrap();
        assert!(!v.is_normal);
        assert!(v.witness.is_some());
        assert_eq!(v.actual_order, 768);
        assert_eq!(v.expected_normal_order, 192);

        assert!(matches!(
            is_normal(&c4(), Method::FixNeighborhood),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn k5_is_not_normal_with_paper_order() {
        let k5 = full(5);
        let v = is_normal(&k5, Method::Both).unwrap();
        assert!(!v.is_normal);
        assert_eq!(v.actual_order, 28800); // 2 * (5!)^2
        assert_eq!(v.expected_normal_order, 14400); // 5! * |Aut(K5)|
    }

    #[test]
    fn conjugation_witness_is_genuine() {
        let g = c4();
        let summary = aut_summary(&g).unwrap();
        let v = is_normal_with(&g, &summary, Method::Conjugation).unwrap();
        let pi = v.witness.expect("non-normal needs a witness");
        let pi_inv = pi.inverse();
        let mut violated = false;
        for t in g.generators() {
            let rho = g.right_translation(t).unwrap();
            let conj = pi.compose(&rho).unwrap().compose(&pi_inv).unwrap();
            if g.as_right_translation(&conj).is_none() {
                violated = true;
            }
        }
        assert!(violated);
    }

    /// Conjugating only the generator translations must agree with
    /// conjugating every right translation.
    #[test]
    fn generator_conjugation_agrees_with_full_conjugation() {
        use crate::graph::connected_classes;
        for n in [3usize, 4] {
            for graph in connected_classes(n).unwrap() {
                let ts = TranspositionSet::from_graph(&graph).unwrap();
                let g = CayleyGraph::build(ts).unwrap();
                let summary = aut_summary(&g).unwrap();
                let by_generators = is_normal_with(&g, &summary, Method::Conjugation)
                    .unwrap()
                    .is_normal;
                let mut by_all = true;
                'outer: for pi in &summary.stab_elements {
                    let pi_inv = pi.inverse();
                    for r in 0..g.vertex_count() {
                        let rho = g.right_translation(g.perm_of(r)).unwrap();
                        let conj = pi.compose(&rho).unwrap().compose(&pi_inv).unwrap();
                        if g.as_right_translation(&conj).is_none() {
                            by_all = false;
                            break 'outer;
                        }
                    }
                }
                assert_eq!(by_generators, by_all);
            }
        }
    }

    #[test]
    fn direct_product_examples() {
        assert!(verify_direct_product(&path(5)).unwrap());

        let s5 = star(5);
        let summary = aut_summary(&s5).unwrap();
        assert_eq!(summary.aut_order, 2880); // 120 * 24
        assert!(verify_direct_product_with(&s5, &summary).unwrap());

        let s6 = star(6);
        let summary = aut_summary(&s6).unwrap();
        assert_eq!(summary.aut_order, 86400); // 720 * 120
        assert!(verify_direct_product_with(&s6, &summary).unwrap());

        assert!(matches!(
            verify_direct_product(&c4()),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            verify_direct_product(&build(2, &[(1, 2)])),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn normal_orders_match_expected_exactly() {
        use crate::graph::connected_classes;
        for graph in connected_classes(4).unwrap() {
            let ts = TranspositionSet::from_graph(&graph).unwrap();
            let g = CayleyGraph::build(ts).unwrap();
            let summary = aut_summary(&g).unwrap();
            let v = is_normal_with(&g, &summary, Method::Conjugation).unwrap();
            if v.is_normal {
                assert_eq!(v.actual_order, v.expected_normal_order);
            } else {
                assert!(v.actual_order > v.expected_normal_order);
            }
        }
    }

    #[test]
    fn search_capacity() {
        let pairs: Vec<(usize, usize)> = (1..8).map(|i| (i, i + 1)).collect();
        let g = build(8, &pairs);
        assert!(matches!(
            stabilizer_of_identity(&g),
            Err(Error::Capacity { .. })
        ));
    }

    #[test]
    fn n2_edge_case() {
        let g = build(2, &[(1, 2)]);
        let summary = aut_summary(&g).unwrap();
        assert_eq!(summary.stab_order, 1);
        let v = is_normal_with(&g, &summary, Method::Conjugation).unwrap();
        assert!(v.is_normal);
        assert_eq!(v.expected_normal_order, 2);
        assert_eq!(v.actual_order, 2);
    }

    #[test]
    fn full_enumeration_cross_check_small() {
        // stabilizer order times orbit size equals the independently
        // enumerated automorphism count on the 6-vertex graph of S3
        let g = full(3);
        let stab = stabilizer_of_identity(&g).unwrap();
        let mut count = 0u64;
        // brute force: all 6! vertex bijections
        for r in 0..factorial(6) {
            let p = Perm::unrank(r, 6).unwrap();
            let images: Vec<u32> = p.images().iter().map(|&x| x as u32).collect();
            let vp = VertexPerm::from_images(images).unwrap();
            if g.is_automorphism(&vp) {
                count += 1;
            }
        }
        assert_eq!(count, 72);
        assert_eq!(stab.len() as u64 * 6, count);
    }
}
