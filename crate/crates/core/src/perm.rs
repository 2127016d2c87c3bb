//! Permutations of `{0..n-1}` and transpositions, with lexicographic
//! ranking so that the `n!` elements of the symmetric group can index arrays.
//!
//! Points are 0-based internally; rendering (cycle notation, transposition
//! labels) is 1-based to stay readable against pen-and-paper computations.

use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

/// `n!` for `n <= 20` (the largest factorial that fits in 64 bits).
pub fn factorial(n: usize) -> usize {
    assert!(n <= 20, "factorial({n}) overflows 64 bits");
    (1..=n).product()
}

/// A permutation of `{0..n-1}` stored as its one-line image table:
/// position `i` holds the image of `i`.
///
/// Values are immutable after construction and compared by their image
/// tables. Composition is right-to-left: `f.compose(&g)` applies `g` first.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    /// The identity permutation on `n` points (`n >= 1`).
    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "permutations act on at least one point");
        Perm {
            images: (0..n).collect(),
        }
    }

    /// Builds a permutation from a one-line image table, rejecting tables
    /// that are not bijections of `{0..n-1}`.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        if images.is_empty() {
            return Err(Error::DomainTooSmall { n: 0, min: 1 });
        }
        let n = images.len();
        let mut seen = alloc::vec![false; n];
        for &x in &images {
            if x >= n {
                return Err(Error::OutOfRange { index: x, bound: n });
            }
            if seen[x] {
                return Err(Error::NotABijection);
            }
            seen[x] = true;
        }
        Ok(Perm { images })
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// The image of point `x`.
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    /// `self` after `other`: the result maps `x` to `self(other(x))`.
    pub fn compose(&self, other: &Perm) -> Result<Perm> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        Ok(Perm {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        })
    }

    pub fn inverse(&self) -> Perm {
        let mut images = alloc::vec![0; self.n()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x] = i;
        }
        Perm { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// Position of this permutation in lexicographic order of one-line
    /// tables (the Lehmer code read in the factorial number system).
    /// The identity has rank 0, the reversal has rank `n! - 1`.
    pub fn rank(&self) -> usize {
        let n = self.n();
        let mut r = 0;
        for i in 0..n {
            let smaller_later = self.images[i + 1..]
                .iter()
                .filter(|&&x| x < self.images[i])
                .count();
            r = r * (n - i) + smaller_later;
        }
        r
    }

    /// Inverse of [`Perm::rank`].
    pub fn unrank(r: usize, n: usize) -> Result<Perm> {
        if n == 0 {
            return Err(Error::DomainTooSmall { n: 0, min: 1 });
        }
        let nf = factorial(n);
        if r >= nf {
            return Err(Error::OutOfRange { index: r, bound: nf });
        }
        let mut avail: Vec<usize> = (0..n).collect();
        let mut images = Vec::with_capacity(n);
        let mut rem = r;
        for i in 0..n {
            let f = factorial(n - 1 - i);
            let d = rem / f;
            rem %= f;
            images.push(avail.remove(d));
        }
        Ok(Perm { images })
    }

    /// True for even permutations. Transpositions are odd, so this is the
    /// bipartition class of the corresponding Cayley-graph vertex.
    pub fn is_even(&self) -> bool {
        let mut seen = alloc::vec![false; self.n()];
        let mut transpositions = 0;
        for start in 0..self.n() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x];
                len += 1;
            }
            transpositions += len - 1;
        }
        transpositions % 2 == 0
    }

    /// Nontrivial cycles, each starting at its smallest point, ordered by
    /// that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = alloc::vec![false; self.n()];
        let mut out = Vec::new();
        for start in 0..self.n() {
            if seen[start] || self.images[start] == start {
                seen[start] = true;
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }
}

/// Cycle notation with 1-based labels and fixed points omitted;
/// the identity renders as `id`.
impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "id");
        }
        for cycle in cycles {
            write!(f, "(")?;
            for (i, x) in cycle.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", x + 1)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm[{self}]")
    }
}

/// A transposition as a normalized unordered pair `lo < hi` of 0-based
/// points; doubles as an edge of the transposition graph.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Transposition {
    lo: usize,
    hi: usize,
}

impl Transposition {
    pub fn new(a: usize, b: usize) -> Result<Self> {
        if a == b {
            return Err(Error::Precondition("transposition needs two distinct points"));
        }
        Ok(Transposition {
            lo: a.min(b),
            hi: a.max(b),
        })
    }

    pub fn lo(&self) -> usize {
        self.lo
    }

    pub fn hi(&self) -> usize {
        self.hi
    }

    pub fn points(&self) -> [usize; 2] {
        [self.lo, self.hi]
    }

    pub fn moves(&self, p: usize) -> bool {
        p == self.lo || p == self.hi
    }

    pub fn is_disjoint(&self, other: &Transposition) -> bool {
        !self.moves(other.lo) && !self.moves(other.hi)
    }

    /// Transpositions commute iff they are equal or disjoint.
    pub fn commutes_with(&self, other: &Transposition) -> bool {
        self == other || self.is_disjoint(other)
    }

    /// The unique shared point of two transpositions that overlap in
    /// exactly one point; `None` when disjoint or equal.
    pub fn shared_point(&self, other: &Transposition) -> Option<usize> {
        if self == other {
            return None;
        }
        let mut shared = None;
        for p in self.points() {
            if other.moves(p) {
                match shared {
                    None => shared = Some(p),
                    Some(_) => return None,
                }
            }
        }
        shared
    }

    /// This transposition as a permutation of `{0..n-1}`.
    pub fn as_perm(&self, n: usize) -> Result<Perm> {
        if self.hi >= n {
            return Err(Error::OutOfRange {
                index: self.hi,
                bound: n,
            });
        }
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(self.lo, self.hi);
        Ok(Perm { images })
    }
}

impl fmt::Display for Transposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} {})", self.lo + 1, self.hi + 1)
    }
}

impl fmt::Debug for Transposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// All `n(n-1)/2` transpositions of `{0..n-1}` in lexicographic order.
pub fn all_transpositions(n: usize) -> Result<Vec<Transposition>> {
    if n < 2 {
        return Err(Error::DomainTooSmall { n, min: 2 });
    }
    let mut out = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            out.push(Transposition { lo: i, hi: j });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;
    use alloc::vec;

    fn t(a: usize, b: usize) -> Transposition {
        // 1-based labels, matching written cycle notation
        Transposition::new(a - 1, b - 1).unwrap()
    }

    #[test]
    fn compose_matches_written_products() {
        // All three decompositions of the 3-cycle (1 3 2) as a product of
        // two transpositions, applied right to left.
        let n = 3;
        let p = |tr: Transposition| tr.as_perm(n).unwrap();
        let expect = Perm::from_images(vec![2, 0, 1]).unwrap();
        assert_eq!(format!("{expect}"), "(1 3 2)");
        assert_eq!(p(t(2, 3)).compose(&p(t(1, 2))).unwrap(), expect);
        assert_eq!(p(t(1, 3)).compose(&p(t(2, 3))).unwrap(), expect);
        assert_eq!(p(t(1, 2)).compose(&p(t(1, 3))).unwrap(), expect);
    }

    #[test]
    fn compose_identity_and_involution() {
        let sigma = Perm::from_images(vec![3, 1, 0, 2, 4]).unwrap();
        let id = Perm::identity(5);
        assert_eq!(sigma.compose(&id).unwrap(), sigma);
        assert_eq!(id.compose(&sigma).unwrap(), sigma);
        let swap = t(1, 2).as_perm(5).unwrap();
        assert!(swap.compose(&swap).unwrap().is_identity());
    }

    #[test]
    fn compose_rejects_size_mismatch() {
        let a = Perm::identity(3);
        let b = Perm::identity(4);
        assert_eq!(
            a.compose(&b),
            Err(Error::SizeMismatch { left: 3, right: 4 })
        );
    }

    #[test]
    fn inverse_examples() {
        // (1 2 3) maps 1->2, 2->3, 3->1
        let c = Perm::from_images(vec![1, 2, 0]).unwrap();
        assert_eq!(format!("{c}"), "(1 2 3)");
        assert_eq!(format!("{}", c.inverse()), "(1 3 2)");
        let swap = t(1, 2).as_perm(4).unwrap();
        assert_eq!(swap.inverse(), swap);
        assert!(Perm::identity(6).inverse().is_identity());
        let sigma = Perm::from_images(vec![4, 2, 0, 1, 3]).unwrap();
        assert!(sigma.compose(&sigma.inverse()).unwrap().is_identity());
    }

    #[test]
    fn rank_extremes() {
        for n in 1..=7 {
            assert_eq!(Perm::identity(n).rank(), 0);
            let rev = Perm::from_images((0..n).rev().collect()).unwrap();
            assert_eq!(rev.rank(), factorial(n) - 1);
        }
    }

    #[test]
    fn unrank_extremes_and_range() {
        assert!(Perm::unrank(0, 4).unwrap().is_identity());
        assert_eq!(
            Perm::unrank(factorial(4) - 1, 4).unwrap().images(),
            &[3, 2, 1, 0]
        );
        assert_eq!(
            Perm::unrank(120, 5).err(),
            Some(Error::OutOfRange {
                index: 120,
                bound: 120
            })
        );
    }

    #[test]
    fn rank_unrank_roundtrip_exhaustive_n5() {
        for r in 0..factorial(5) {
            assert_eq!(Perm::unrank(r, 5).unwrap().rank(), r);
        }
    }

    #[test]
    fn unrank_is_lexicographic() {
        let mut prev = Perm::unrank(0, 4).unwrap();
        for r in 1..factorial(4) {
            let cur = Perm::unrank(r, 4).unwrap();
            assert!(prev.images() < cur.images());
            prev = cur;
        }
    }

    #[test]
    fn all_transpositions_examples() {
        assert_eq!(
            all_transpositions(3).unwrap(),
            vec![t(1, 2), t(1, 3), t(2, 3)]
        );
        assert_eq!(all_transpositions(5).unwrap().len(), 10);
        assert_eq!(all_transpositions(2).unwrap(), vec![t(1, 2)]);
        assert_eq!(
            all_transpositions(1).err(),
            Some(Error::DomainTooSmall { n: 1, min: 2 })
        );
    }

    #[test]
    fn transposition_as_perm_swaps_and_fixes() {
        let p = t(2, 5).as_perm(6).unwrap();
        for x in 0..6 {
            let expect = match x {
                1 => 4,
                4 => 1,
                other => other,
            };
            assert_eq!(p.apply(x), expect);
        }
        assert!(!p.is_even());
    }

    #[test]
    fn apply_consistency_exhaustive_to_n5() {
        for n in 2..=5 {
            let all: Vec<Perm> = (0..factorial(n))
                .map(|r| Perm::unrank(r, n).unwrap())
                .collect();
            for f in &all {
                for g in &all {
                    let fg = f.compose(g).unwrap();
                    for x in 0..n {
                        assert_eq!(fg.apply(x), f.apply(g.apply(x)));
                    }
                }
            }
        }
    }

    #[test]
    fn cycle_notation_rendering() {
        assert_eq!(format!("{}", Perm::identity(5)), "id");
        // (1 2 3)(4 5): 0->1,1->2,2->0,3->4,4->3
        let p = Perm::from_images(vec![1, 2, 0, 4, 3]).unwrap();
        assert_eq!(format!("{p}"), "(1 2 3)(4 5)");
        // fixed points omitted
        let q = t(2, 4).as_perm(6).unwrap();
        assert_eq!(format!("{q}"), "(2 4)");
        assert_eq!(format!("{}", t(1, 3)), "(1 3)");
    }

    #[test]
    fn shared_point_and_commuting() {
        assert!(t(1, 2).commutes_with(&t(3, 4)));
        assert!(!t(1, 2).commutes_with(&t(2, 3)));
        assert!(t(1, 2).commutes_with(&t(1, 2)));
        assert_eq!(t(1, 2).shared_point(&t(2, 3)), Some(1));
        assert_eq!(t(1, 2).shared_point(&t(3, 4)), None);
        assert_eq!(t(1, 2).shared_point(&t(1, 2)), None);
    }

    #[test]
    fn from_images_rejects_bad_tables() {
        assert_eq!(
            Perm::from_images(vec![0, 0, 1]).err(),
            Some(Error::NotABijection)
        );
        assert_eq!(
            Perm::from_images(vec![0, 3]).err(),
            Some(Error::OutOfRange { index: 3, bound: 2 })
        );
    }
}
