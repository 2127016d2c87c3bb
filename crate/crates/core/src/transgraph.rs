//! The bridge between transposition sets and their transposition graphs:
//! generation test, structural classification, short-cycle predicates, and
//! the lifting of line-graph automorphisms back to graph automorphisms.

use alloc::vec::Vec;
use core::fmt;

use crate::graph::{Graph, GraphMap};
use crate::perm::{Perm, Transposition};
use crate::{Error, Result};

/// A non-empty set of distinct transpositions over `{0..n-1}`; equally the
/// edge set of the transposition graph on `n` vertices.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TranspositionSet {
    n: usize,
    members: Vec<Transposition>,
}

impl TranspositionSet {
    /// Members are sorted and must be distinct, non-empty and within range.
    pub fn new(n: usize, mut members: Vec<Transposition>) -> Result<Self> {
        if n > crate::graph::MAX_VERTICES {
            return Err(Error::Capacity {
                what: "transposition set points",
                limit: crate::graph::MAX_VERTICES,
                requested: n,
            });
        }
        if members.is_empty() {
            return Err(Error::Precondition("transposition set must be non-empty"));
        }
        for t in &members {
            if t.hi() >= n {
                return Err(Error::OutOfRange {
                    index: t.hi(),
                    bound: n,
                });
            }
        }
        members.sort_unstable();
        for w in members.windows(2) {
            if w[0] == w[1] {
                return Err(Error::Precondition("duplicate transposition"));
            }
        }
        Ok(TranspositionSet { n, members })
    }

    /// The edge set of a graph read back as a transposition set.
    pub fn from_graph(g: &Graph) -> Result<Self> {
        let members = g
            .edges()
            .into_iter()
            .map(|(a, b)| Transposition::new(a, b))
            .collect::<Result<Vec<_>>>()?;
        TranspositionSet::new(g.n(), members)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn members(&self) -> &[Transposition] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, t: &Transposition) -> bool {
        self.members.binary_search(t).is_ok()
    }

    /// The transposition graph: `n` vertices, one edge per member.
    pub fn graph(&self) -> Graph {
        let mut g = Graph::new(self.n).expect("n capped at construction");
        for t in &self.members {
            g.add_edge(t.lo(), t.hi()).expect("members validated");
        }
        g
    }

    /// The members generate the full symmetric group iff the transposition
    /// graph is connected.
    pub fn generates_symmetric_group(&self) -> bool {
        self.graph().is_connected()
    }

    /// Structural classification of the transposition graph of a
    /// generating set. Exactly one kind is reported; a tree is Tree even
    /// though a forest's girth is vacuously at least five.
    pub fn classify(&self) -> Result<Classification> {
        let g = self.graph();
        if !g.is_connected() {
            return Err(Error::NotGenerating);
        }
        let n = self.n;
        let kind = if self.members.len() == n - 1 {
            GraphKind::Tree
        } else if n == 4 && g.canonical_form()? == four_cycle_canonical_form() {
            GraphKind::FourCycle
        } else if self.members.len() == n * (n - 1) / 2 {
            GraphKind::CompleteGraph
        } else if g.girth().is_none_or(|c| c >= 5) {
            GraphKind::GirthAtLeastFive
        } else {
            GraphKind::Other
        };
        Ok(Classification {
            kind,
            connected: true,
        })
    }

    /// Whether two adjacent edges of the transposition graph lie on a
    /// common cycle of length at most four: with `e1 = {i,j}`, `e2 = {i,k}`,
    /// that is a shared triangle `{j,k}` or a shared four-cycle through
    /// some fourth vertex adjacent to both `j` and `k`.
    pub fn edges_share_short_cycle(
        &self,
        e1: &Transposition,
        e2: &Transposition,
    ) -> Result<bool> {
        if !self.contains(e1) || !self.contains(e2) {
            return Err(Error::Precondition("edges must belong to the set"));
        }
        if e1 == e2 {
            return Err(Error::Precondition("edges must be distinct"));
        }
        let Some(i) = e1.shared_point(e2) else {
            return Err(Error::Precondition("edges must share exactly one endpoint"));
        };
        let j = if e1.lo() == i { e1.hi() } else { e1.lo() };
        let k = if e2.lo() == i { e2.hi() } else { e2.lo() };
        if self.contains(&Transposition::new(j, k)?) {
            return Ok(true);
        }
        for l in 0..self.n {
            if l == i || l == j || l == k {
                continue;
            }
            if self.contains(&Transposition::new(j, l)?) && self.contains(&Transposition::new(k, l)?)
            {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

fn four_cycle_canonical_form() -> crate::graph::CanonicalForm {
    Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (0, 3)])
        .expect("four-cycle fits")
        .canonical_form()
        .expect("within canonical capacity")
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GraphKind {
    Tree,
    GirthAtLeastFive,
    FourCycle,
    CompleteGraph,
    Other,
}

impl fmt::Display for GraphKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            GraphKind::Tree => "Tree",
            GraphKind::GirthAtLeastFive => "GirthAtLeast5",
            GraphKind::FourCycle => "FourCycle",
            GraphKind::CompleteGraph => "CompleteGraph",
            GraphKind::Other => "Other",
        };
        write!(f, "{s}")
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Classification {
    pub kind: GraphKind,
    pub connected: bool,
}

/// The automorphism of the line graph induced by a graph automorphism:
/// the edge `{i,j}` is sent to `{phi(i), phi(j)}`, expressed on line-graph
/// vertex indices in lexicographic edge order.
pub fn induce_line_automorphism(g: &Graph, phi: &Perm) -> Result<Perm> {
    GraphMap::new(g, phi.clone())?;
    let (_, edges) = g.line_graph()?;
    let mut images = Vec::with_capacity(edges.len());
    for &(a, b) in &edges {
        let (x, y) = (phi.apply(a), phi.apply(b));
        let target = (x.min(y), x.max(y));
        let idx = edges
            .binary_search(&target)
            .expect("automorphism maps edges to edges");
        images.push(idx);
    }
    Perm::from_images(images)
}

/// The unique graph automorphism inducing a given line-graph automorphism.
///
/// For every vertex of degree at least two, the image of its edge star must
/// have a unique common endpoint, which becomes the image vertex; degree-one
/// vertices inherit the remaining endpoint of their image edge. Any failure
/// (no unique common endpoint, not a bijection, round trip mismatch) is
/// reported as `NotLiftable` rather than special-casing the exceptional
/// graphs for which no lift exists.
pub fn lift_line_automorphism(g: &Graph, psi: &Perm) -> Result<Perm> {
    if !g.is_connected() {
        return Err(Error::Precondition("graph must be connected"));
    }
    let (lg, edges) = g.line_graph()?;
    if psi.n() != lg.n() {
        return Err(Error::SizeMismatch {
            left: psi.n(),
            right: lg.n(),
        });
    }
    if GraphMap::new(&lg, psi.clone()).is_err() {
        return Err(Error::NotLiftable);
    }
    let n = g.n();
    if n == 1 {
        return Ok(Perm::identity(1));
    }
    let mut images = alloc::vec![usize::MAX; n];
    // star of each high-degree vertex first: the image edges must share a
    // unique endpoint
    let branch_vertices: Vec<usize> = (0..n).filter(|&u| g.degree(u) >= 2).collect();
    for u in branch_vertices {
        let mut shared: Option<Vec<usize>> = None;
        for (idx, &(a, b)) in edges.iter().enumerate() {
            if a != u && b != u {
                continue;
            }
            let (x, y) = edges[psi.apply(idx)];
            match shared {
                None => shared = Some(alloc::vec![x, y]),
                Some(ref mut s) => s.retain(|&p| p == x || p == y),
            }
        }
        match shared.as_deref() {
            Some([single]) => images[u] = *single,
            _ => return Err(Error::NotLiftable),
        }
    }
    // leaves inherit the other endpoint of their image edge
    let leaves: Vec<usize> = (0..n).filter(|&u| g.degree(u) == 1).collect();
    for u in leaves {
        let (idx, &(a, b)) = edges
            .iter()
            .enumerate()
            .find(|(_, &(a, b))| a == u || b == u)
            .expect("degree-one vertex has an edge");
        let w = if a == u { b } else { a };
        let (x, y) = edges[psi.apply(idx)];
        if images[w] == x {
            images[u] = y;
        } else if images[w] == y {
            images[u] = x;
        } else {
            return Err(Error::NotLiftable);
        }
    }
    if images.contains(&usize::MAX) {
        return Err(Error::NotLiftable);
    }
    let phi = Perm::from_images(images).map_err(|_| Error::NotLiftable)?;
    match induce_line_automorphism(g, &phi) {
        Ok(round) if round == *psi => Ok(phi),
        _ => Err(Error::NotLiftable),
    }
}
