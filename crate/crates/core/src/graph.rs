//! Simple undirected graphs of small order: line graphs, connectivity,
//! automorphism enumeration, canonical forms and isomorph-free enumeration
//! of connected graphs.
//!
//! Vertices are `0..n-1`; adjacency is stored as one 64-bit row per vertex,
//! which caps this module at 64 vertices (far above every caller: the
//! transposition-graph side stays at `n <= 7` and line graphs at `n(n-1)/2`).

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write;

use crate::perm::Perm;
use crate::{Error, Result};

/// Hard representation cap (one `u64` adjacency row per vertex).
pub const MAX_VERTICES: usize = 64;
/// Cap for full automorphism enumeration.
pub const MAX_AUT_VERTICES: usize = 32;
/// Cap for canonical forms (the form is packed into a `u64`).
pub const MAX_CANONICAL_VERTICES: usize = 8;
/// Cap for isomorph-free enumeration of connected graphs.
pub const MAX_CLASS_VERTICES: usize = 7;

/// A simple undirected graph: no loops, no multi-edges.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Graph {
    n: usize,
    rows: Vec<u64>,
}

impl Graph {
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::Capacity {
                what: "graph vertices",
                limit: MAX_VERTICES,
                requested: n,
            });
        }
        Ok(Graph {
            n,
            rows: vec![0; n],
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n)?;
        for &(a, b) in edges {
            g.add_edge(a, b)?;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add_edge(&mut self, a: usize, b: usize) -> Result<()> {
        if a >= self.n {
            return Err(Error::OutOfRange {
                index: a,
                bound: self.n,
            });
        }
        if b >= self.n {
            return Err(Error::OutOfRange {
                index: b,
                bound: self.n,
            });
        }
        if a == b {
            return Err(Error::Precondition("no self-loops"));
        }
        self.rows[a] |= 1 << b;
        self.rows[b] |= 1 << a;
        Ok(())
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n && b < self.n && self.rows[a] >> b & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let row = self.rows[v];
        (0..self.n).filter(move |&w| row >> w & 1 == 1)
    }

    /// Edges in lexicographic `(lo, hi)` order; every table in the crate
    /// that indexes edges relies on this single ordering.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.has_edge(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Connected components as sorted vertex lists, ordered by smallest
    /// vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut queue = vec![start];
            while let Some(v) = queue.pop() {
                for w in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.components().len() == 1
    }

    /// The graph with vertex `i` renamed to `p(i)`.
    pub fn relabel(&self, p: &Perm) -> Result<Graph> {
        if p.n() != self.n {
            return Err(Error::SizeMismatch {
                left: p.n(),
                right: self.n,
            });
        }
        let mut g = Graph::new(self.n)?;
        for (a, b) in self.edges() {
            g.add_edge(p.apply(a), p.apply(b))?;
        }
        Ok(g)
    }

    /// Line graph plus the table mapping line-graph vertex index to the
    /// original edge, in lexicographic edge order. The edgeless graph
    /// yields the empty graph.
    pub fn line_graph(&self) -> Result<(Graph, Vec<(usize, usize)>)> {
        let edges = self.edges();
        let mut lg = Graph::new(edges.len())?;
        for i in 0..edges.len() {
            for j in i + 1..edges.len() {
                let (a, b) = edges[i];
                let (c, d) = edges[j];
                if a == c || a == d || b == c || b == d {
                    lg.add_edge(i, j)?;
                }
            }
        }
        Ok((lg, edges))
    }

    /// Length of a shortest cycle; `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for (u, v) in self.edges() {
            // shortest u-v path avoiding the edge itself, plus the edge
            let mut dist = vec![usize::MAX; self.n];
            dist[u] = 0;
            let mut queue = alloc::collections::VecDeque::new();
            queue.push_back(u);
            while let Some(x) = queue.pop_front() {
                for y in self.neighbors(x) {
                    if (x == u && y == v) || (x == v && y == u) {
                        continue;
                    }
                    if dist[y] == usize::MAX {
                        dist[y] = dist[x] + 1;
                        queue.push_back(y);
                    }
                }
            }
            if dist[v] != usize::MAX {
                let cycle = dist[v] + 1;
                best = Some(best.map_or(cycle, |b| b.min(cycle)));
            }
        }
        best
    }

    /// Subgraph induced by the given vertices (duplicates ignored), plus
    /// the relabeling table: entry `i` is the original vertex that became
    /// vertex `i` of the subgraph.
    pub fn induced(&self, vertices: &[usize]) -> Result<(Graph, Vec<usize>)> {
        let mut verts: Vec<usize> = vertices.to_vec();
        verts.sort_unstable();
        verts.dedup();
        for &v in &verts {
            if v >= self.n {
                return Err(Error::OutOfRange {
                    index: v,
                    bound: self.n,
                });
            }
        }
        let mut g = Graph::new(verts.len())?;
        for i in 0..verts.len() {
            for j in i + 1..verts.len() {
                if self.has_edge(verts[i], verts[j]) {
                    g.add_edge(i, j)?;
                }
            }
        }
        Ok((g, verts))
    }

    /// All automorphisms, by image-assignment backtracking in vertex order.
    /// Candidates are restricted to vertices of equal degree and must
    /// preserve adjacency and non-adjacency to every previously assigned
    /// vertex, so every complete assignment is an automorphism.
    pub fn automorphisms(&self) -> Result<Vec<Perm>> {
        if self.n > MAX_AUT_VERTICES {
            return Err(Error::Capacity {
                what: "automorphism search vertices",
                limit: MAX_AUT_VERTICES,
                requested: self.n,
            });
        }
        if self.n == 0 {
            return Ok(Vec::new());
        }
        let mut out = Vec::new();
        let mut img = vec![usize::MAX; self.n];
        let mut used = vec![false; self.n];
        self.aut_backtrack(0, &mut img, &mut used, &mut out);
        Ok(out)
    }

    fn aut_backtrack(
        &self,
        v: usize,
        img: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<Perm>,
    ) {
        if v == self.n {
            out.push(Perm::from_images(img.clone()).expect("assignment is a bijection"));
            return;
        }
        'cand: for w in 0..self.n {
            if used[w] || self.degree(w) != self.degree(v) {
                continue;
            }
            for (u, &iu) in img.iter().enumerate().take(v) {
                if self.has_edge(u, v) != self.has_edge(iu, w) {
                    continue 'cand;
                }
            }
            img[v] = w;
            used[w] = true;
            self.aut_backtrack(v + 1, img, used, out);
            img[v] = usize::MAX;
            used[w] = false;
        }
    }

    /// The lexicographically minimal packed adjacency bit-string over all
    /// `n!` relabelings. Two graphs have equal canonical form iff they are
    /// isomorphic.
    ///
    /// The minimum is found by branch-and-bound over vertex orderings
    /// rather than a literal scan of all `n!` relabelings; every ordering
    /// that could still produce a smaller bit-string is explored, so the
    /// result is the exact minimum.
    pub fn canonical_form(&self) -> Result<CanonicalForm> {
        if self.n > MAX_CANONICAL_VERTICES {
            return Err(Error::Capacity {
                what: "canonical form vertices",
                limit: MAX_CANONICAL_VERTICES,
                requested: self.n,
            });
        }
        let total_bits = self.n * (self.n - 1) / 2;
        let mut best: Option<u64> = None;
        let mut sel: Vec<usize> = Vec::with_capacity(self.n);
        let mut used = vec![false; self.n];
        self.canon_backtrack(0, 0, total_bits, &mut sel, &mut used, &mut best);
        Ok(CanonicalForm {
            n: self.n,
            bits: best.unwrap_or(0),
        })
    }

    fn canon_backtrack(
        &self,
        prefix: u64,
        bits_done: usize,
        total_bits: usize,
        sel: &mut Vec<usize>,
        used: &mut Vec<bool>,
        best: &mut Option<u64>,
    ) {
        let k = sel.len();
        if k == self.n {
            if best.is_none_or(|b| prefix < b) {
                *best = Some(prefix);
            }
            return;
        }
        // adjacency word of each candidate towards the already-placed
        // vertices; explore in ascending word order so a small complete
        // value is found early and prunes the rest
        let mut cands: Vec<(u64, usize)> = Vec::new();
        for (v, &v_used) in used.iter().enumerate() {
            if v_used {
                continue;
            }
            let mut word: u64 = 0;
            for &u in sel.iter() {
                word = word << 1 | u64::from(self.has_edge(u, v));
            }
            cands.push((word, v));
        }
        cands.sort_unstable();
        for (word, v) in cands {
            let next_prefix = prefix << k | word;
            let next_done = bits_done + k;
            if let Some(b) = *best {
                if next_prefix > b >> (total_bits - next_done) {
                    continue;
                }
            }
            sel.push(v);
            used[v] = true;
            self.canon_backtrack(next_prefix, next_done, total_bits, sel, used, best);
            sel.pop();
            used[v] = false;
        }
    }

    /// DOT rendering with 1-based vertex labels.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph G {\n");
        for v in 0..self.n {
            let _ = writeln!(s, "  {};", v + 1);
        }
        for (a, b) in self.edges() {
            let _ = writeln!(s, "  {} -- {};", a + 1, b + 1);
        }
        s.push_str("}\n");
        s
    }
}

/// Canonical form of a graph on `n <= 8` vertices: the upper-triangle
/// adjacency bits of the minimal relabeling, packed into a `u64`. Bit
/// order is by placement level: pairs `(0,1), (0,2), (1,2), (0,3), ...`
/// from the most significant used bit down.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CanonicalForm {
    n: usize,
    bits: u64,
}

impl CanonicalForm {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    /// The `n(n-1)/2` adjacency bits as a `0`/`1` string.
    pub fn bit_string(&self) -> String {
        let total = self.n * (self.n - 1) / 2;
        let mut s = String::with_capacity(total);
        for i in (0..total).rev() {
            s.push(if self.bits >> i & 1 == 1 { '1' } else { '0' });
        }
        s
    }

    /// The canonical representative graph itself.
    pub fn to_graph(&self) -> Graph {
        let mut g = Graph::new(self.n).expect("canonical n within cap");
        let total = self.n * (self.n - 1) / 2;
        let mut pos = total;
        for k in 1..self.n {
            for i in 0..k {
                pos -= 1;
                if self.bits >> pos & 1 == 1 {
                    g.add_edge(i, k).expect("valid pair");
                }
            }
        }
        g
    }
}

/// Exactly one representative per isomorphism class of connected graphs on
/// `n` labeled vertices, ordered by canonical form.
pub fn connected_classes(n: usize) -> Result<Vec<Graph>> {
    if n < 2 {
        return Err(Error::DomainTooSmall { n, min: 2 });
    }
    if n > MAX_CLASS_VERTICES {
        return Err(Error::Capacity {
            what: "connected class enumeration vertices",
            limit: MAX_CLASS_VERTICES,
            requested: n,
        });
    }
    let pairs: Vec<(usize, usize)> = {
        let mut p = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                p.push((i, j));
            }
        }
        p
    };
    let mut forms = BTreeSet::new();
    for mask in 0u64..1 << pairs.len() {
        let mut g = Graph::new(n)?;
        for (idx, &(a, b)) in pairs.iter().enumerate() {
            if mask >> idx & 1 == 1 {
                g.add_edge(a, b)?;
            }
        }
        if g.is_connected() {
            forms.insert(g.canonical_form()?);
        }
    }
    Ok(forms.into_iter().map(|f| f.to_graph()).collect())
}

/// A permutation asserted to be an automorphism of a particular graph.
pub struct GraphMap<'g> {
    graph: &'g Graph,
    map: Perm,
}

impl<'g> GraphMap<'g> {
    /// Validates that `map` sends edges to edges and non-edges to
    /// non-edges.
    pub fn new(graph: &'g Graph, map: Perm) -> Result<Self> {
        if map.n() != graph.n() {
            return Err(Error::SizeMismatch {
                left: map.n(),
                right: graph.n(),
            });
        }
        for i in 0..graph.n() {
            for j in i + 1..graph.n() {
                if graph.has_edge(i, j) != graph.has_edge(map.apply(i), map.apply(j)) {
                    return Err(Error::NotAnAutomorphism);
                }
            }
        }
        Ok(GraphMap { graph, map })
    }

    pub fn graph(&self) -> &Graph {
        self.graph
    }

    pub fn map(&self) -> &Perm {
        &self.map
    }
}
