//! Explicit construction of the Cayley graph of the symmetric group over a
//! generating set of transpositions, with generator-labeled edges and the
//! left/right regular representations as vertex permutations.
//!
//! Vertices are the `n!` permutations indexed by lexicographic rank; the
//! edge `{a, ta}` joins each vertex `a` to its left multiple by each
//! generator `t`.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write;

use crate::perm::{factorial, Perm};
use crate::transgraph::TranspositionSet;
use crate::{Error, Result};

/// Largest supported point count (`8! = 40320` vertices, best effort; all
/// quantitative guarantees are stated for `n <= 7`).
pub const MAX_CAYLEY_N: usize = 8;
/// Point count up to which DOT export stays readable.
pub const MAX_DOT_N: usize = 4;

/// The Cayley graph: a `|T|`-regular graph on all `n!` permutations with
/// dense adjacency `(vertex rank, generator index) -> vertex rank`.
#[derive(Clone)]
pub struct CayleyGraph {
    tset: TranspositionSet,
    gens: Vec<Perm>,
    perms: Vec<Perm>,
    adj: Vec<u32>,
    nv: usize,
    deg: usize,
}

impl CayleyGraph {
    /// Builds the full adjacency table. The generators must generate the
    /// symmetric group and `n` must be within capacity.
    pub fn build(tset: TranspositionSet) -> Result<Self> {
        let n = tset.n();
        if n > MAX_CAYLEY_N {
            return Err(Error::Capacity {
                what: "cayley graph points",
                limit: MAX_CAYLEY_N,
                requested: n,
            });
        }
        if !tset.generates_symmetric_group() {
            return Err(Error::NotGenerating);
        }
        let gens: Vec<Perm> = tset
            .members()
            .iter()
            .map(|t| t.as_perm(n))
            .collect::<Result<_>>()?;
        let nv = factorial(n);
        let deg = gens.len();
        let mut perms = Vec::with_capacity(nv);
        for r in 0..nv {
            perms.push(Perm::unrank(r, n)?);
        }
        let mut adj = vec![0u32; nv * deg];
        for (r, sigma) in perms.iter().enumerate() {
            for (g, t) in gens.iter().enumerate() {
                adj[r * deg + g] = t.compose(sigma)?.rank() as u32;
            }
        }
        Ok(CayleyGraph {
            tset,
            gens,
            perms,
            adj,
            nv,
            deg,
        })
    }

    pub fn n(&self) -> usize {
        self.tset.n()
    }

    pub fn vertex_count(&self) -> usize {
        self.nv
    }

    pub fn degree(&self) -> usize {
        self.deg
    }

    pub fn edge_count(&self) -> usize {
        self.nv * self.deg / 2
    }

    pub fn tset(&self) -> &TranspositionSet {
        &self.tset
    }

    /// Generators as permutations, in the member order of the set.
    pub fn generators(&self) -> &[Perm] {
        &self.gens
    }

    /// The permutation at a vertex rank.
    pub fn perm_of(&self, v: usize) -> &Perm {
        &self.perms[v]
    }

    /// Neighbor ranks of `v`; entry `g` is the vertex of `t_g * v`.
    pub fn neighbors(&self, v: usize) -> Result<&[u32]> {
        if v >= self.nv {
            return Err(Error::OutOfRange {
                index: v,
                bound: self.nv,
            });
        }
        Ok(self.row(v))
    }

    #[inline]
    pub(crate) fn row(&self, v: usize) -> &[u32] {
        &self.adj[v * self.deg..(v + 1) * self.deg]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.row(u).contains(&(v as u32))
    }

    /// Generator index labeling the edge `{u, v}`, if present.
    pub fn edge_label(&self, u: usize, v: usize) -> Option<usize> {
        self.row(u).iter().position(|&w| w == v as u32)
    }

    /// Right multiplication `b -> ba` as a vertex permutation; always an
    /// automorphism of the graph.
    pub fn right_translation(&self, a: &Perm) -> Result<VertexPerm> {
        if a.n() != self.n() {
            return Err(Error::SizeMismatch {
                left: a.n(),
                right: self.n(),
            });
        }
        let mut images = Vec::with_capacity(self.nv);
        for sigma in &self.perms {
            images.push(sigma.compose(a)?.rank() as u32);
        }
        Ok(VertexPerm { images })
    }

    /// Left multiplication `b -> fb` as a vertex permutation. An
    /// automorphism of the graph exactly when conjugation by `f` preserves
    /// the generator set, in particular for automorphisms of the
    /// transposition graph.
    pub fn left_translation(&self, f: &Perm) -> Result<VertexPerm> {
        if f.n() != self.n() {
            return Err(Error::SizeMismatch {
                left: f.n(),
                right: self.n(),
            });
        }
        let mut images = Vec::with_capacity(self.nv);
        for sigma in &self.perms {
            images.push(f.compose(sigma)?.rank() as u32);
        }
        Ok(VertexPerm { images })
    }

    /// If `pi` is the right translation by some permutation, returns it.
    /// A vertex permutation is a right translation iff `pi(x) = x * pi(id)`
    /// pointwise.
    pub fn as_right_translation(&self, pi: &VertexPerm) -> Option<Perm> {
        if pi.len() != self.nv {
            return None;
        }
        let a = self.perms[pi.get(0)].clone();
        for (r, sigma) in self.perms.iter().enumerate() {
            let expect = sigma.compose(&a).ok()?.rank() as u32;
            if pi.images[r] != expect {
                return None;
            }
        }
        Some(a)
    }

    /// Whether a vertex permutation preserves every edge.
    pub fn is_automorphism(&self, pi: &VertexPerm) -> bool {
        if pi.len() != self.nv {
            return false;
        }
        for v in 0..self.nv {
            let pv = pi.get(v);
            for &w in self.row(v) {
                if !self.has_edge(pv, pi.get(w as usize)) {
                    return false;
                }
            }
        }
        true
    }

    /// Distances from the identity vertex and the vertices in BFS
    /// discovery order (deterministic: generator order within each layer).
    pub fn bfs_from_identity(&self) -> (Vec<u16>, Vec<u32>) {
        let mut dist = vec![u16::MAX; self.nv];
        let mut order = Vec::with_capacity(self.nv);
        dist[0] = 0;
        order.push(0u32);
        let mut head = 0;
        while head < order.len() {
            let v = order[head] as usize;
            head += 1;
            for &w in self.row(v) {
                if dist[w as usize] == u16::MAX {
                    dist[w as usize] = dist[v] + 1;
                    order.push(w);
                }
            }
        }
        (dist, order)
    }

    pub fn is_connected(&self) -> bool {
        self.bfs_from_identity().1.len() == self.nv
    }

    /// DOT rendering with cycle-notation vertex labels and generator edge
    /// labels; capped at `n <= 4` (24 vertices) where the drawing is still
    /// legible.
    pub fn to_dot(&self) -> Result<String> {
        if self.n() > MAX_DOT_N {
            return Err(Error::Capacity {
                what: "cayley dot export points",
                limit: MAX_DOT_N,
                requested: self.n(),
            });
        }
        let mut s = String::from("graph Cayley {\n");
        for (r, sigma) in self.perms.iter().enumerate() {
            let _ = writeln!(s, "  v{r} [label=\"{sigma}\"];");
        }
        for v in 0..self.nv {
            for (g, &w) in self.row(v).iter().enumerate() {
                if v < w as usize {
                    let _ = writeln!(
                        s,
                        "  v{v} -- v{w} [label=\"{}\"];",
                        self.tset.members()[g]
                    );
                }
            }
        }
        s.push_str("}\n");
        Ok(s)
    }
}

/// A bijection on Cayley-graph vertex ranks; candidate or confirmed graph
/// automorphism.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct VertexPerm {
    images: Vec<u32>,
}

impl VertexPerm {
    pub fn identity(nv: usize) -> Self {
        VertexPerm {
            images: (0..nv as u32).collect(),
        }
    }

    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let nv = images.len();
        let mut seen = vec![false; nv];
        for &x in &images {
            let x = x as usize;
            if x >= nv {
                return Err(Error::OutOfRange { index: x, bound: nv });
            }
            if seen[x] {
                return Err(Error::NotABijection);
            }
            seen[x] = true;
        }
        Ok(VertexPerm { images })
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn get(&self, v: usize) -> usize {
        self.images[v] as usize
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// `self` after `other`.
    pub fn compose(&self, other: &VertexPerm) -> Result<VertexPerm> {
        if self.len() != other.len() {
            return Err(Error::SizeMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        Ok(VertexPerm {
            images: other
                .images
                .iter()
                .map(|&x| self.images[x as usize])
                .collect(),
        })
    }

    pub fn inverse(&self) -> VertexPerm {
        let mut images = vec![0u32; self.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize] = i as u32;
        }
        VertexPerm { images }
    }
}
