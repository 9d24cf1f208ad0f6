//! Vertex sets as bitmasks, plus closure of a family of sets under the
//! three Boolean operations (union, intersection, difference).

use std::collections::BTreeSet;
use std::fmt;
use std::ops::{BitAnd, BitOr, Sub};

/// A finite set of vertices, stored as a bitmask over vertex indices.
///
/// Index `i` corresponds to the `i`-th declared vertex of the owning
/// ultragraph. All set operations are O(1) word operations; iteration
/// yields indices in ascending order, which is the canonical ordering
/// used throughout for deterministic output.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn singleton(index: usize) -> Self {
        debug_assert!(index < 64);
        VertexSet(1 << index)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for i in indices {
            s.insert(i);
        }
        s
    }

    /// The full set {0, .., n-1}.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= 64);
        if n == 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub fn contains(self, index: usize) -> bool {
        index < 64 && self.0 & (1 << index) != 0
    }

    pub fn insert(&mut self, index: usize) {
        debug_assert!(index < 64);
        self.0 |= 1 << index;
    }

    pub fn remove(&mut self, index: usize) {
        self.0 &= !(1 << index);
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersects(self, other: VertexSet) -> bool {
        self.0 & other.0 != 0
    }

    /// Indices of the members, ascending.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }
}

impl BitAnd for VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & rhs.0)
    }
}

impl BitOr for VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 | rhs.0)
    }
}

impl Sub for VertexSet {
    type Output = VertexSet;
    fn sub(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & !rhs.0)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

/// Closes `generators` under union, intersection, and difference.
///
/// Returns the smallest family of subsets of `universe` containing every
/// generator and closed under the three operations, sorted by bitmask
/// value. The empty family yields an empty result; otherwise the empty
/// set is always present (as `A - A`). The full `universe` appears only
/// if the generators happen to produce it — complements are not taken.
pub fn generated_algebra(universe: VertexSet, generators: &[VertexSet]) -> Vec<VertexSet> {
    let mut family: BTreeSet<VertexSet> = BTreeSet::new();
    for g in generators {
        debug_assert!(g.is_subset(universe), "generator outside the universe");
        family.insert(*g);
    }
    // Worklist fixpoint: combine every new set with everything seen so far.
    let mut queue: Vec<VertexSet> = family.iter().copied().collect();
    while let Some(a) = queue.pop() {
        let snapshot: Vec<VertexSet> = family.iter().copied().collect();
        for b in snapshot {
            for c in [a | b, a & b, a - b, b - a] {
                if family.insert(c) {
                    queue.push(c);
                }
            }
        }
    }
    family.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let a = VertexSet::from_indices([0, 2]);
        let b = VertexSet::from_indices([2, 3]);
        assert_eq!(a | b, VertexSet::from_indices([0, 2, 3]));
        assert_eq!(a & b, VertexSet::singleton(2));
        assert_eq!(a - b, VertexSet::singleton(0));
        assert!(a.is_subset(a | b));
        assert!(!b.is_subset(a));
        assert_eq!((a | b).len(), 3);
        assert_eq!(a.iter().collect::<Vec<_>>(), vec![0, 2]);
    }

    #[test]
    fn full_set_edge_cases() {
        assert_eq!(VertexSet::full(0), VertexSet::EMPTY);
        assert_eq!(VertexSet::full(3).len(), 3);
        assert_eq!(VertexSet::full(64).len(), 64);
    }

    #[test]
    fn algebra_from_two_disjoint_singletons() {
        // {v} and {a} inside a four-element universe generate exactly
        // the four sets {}, {v}, {a}, {v,a}.
        let universe = VertexSet::full(4);
        let v = VertexSet::singleton(1);
        let a = VertexSet::singleton(3);
        let alg = generated_algebra(universe, &[v, a]);
        assert_eq!(
            alg,
            vec![VertexSet::EMPTY, v, a, v | a],
            "closure of two disjoint singletons"
        );
    }

    #[test]
    fn algebra_single_generator() {
        let universe = VertexSet::full(4);
        let v = VertexSet::singleton(1);
        assert_eq!(generated_algebra(universe, &[v]), vec![VertexSet::EMPTY, v]);
    }

    #[test]
    fn algebra_no_generators() {
        assert!(generated_algebra(VertexSet::full(3), &[]).is_empty());
    }

    #[test]
    fn algebra_all_singletons_gives_power_set() {
        let n = 4;
        let singles: Vec<VertexSet> = (0..n).map(VertexSet::singleton).collect();
        let alg = generated_algebra(VertexSet::full(n), &singles);
        assert_eq!(alg.len(), 1 << n);
    }

    #[test]
    fn algebra_is_closed() {
        let universe = VertexSet::full(5);
        let gens = [
            VertexSet::from_indices([0, 1, 3]),
            VertexSet::from_indices([1, 2]),
            VertexSet::from_indices([3, 4]),
        ];
        let alg = generated_algebra(universe, &gens);
        for &a in &alg {
            for &b in &alg {
                assert!(alg.binary_search(&(a | b)).is_ok());
                assert!(alg.binary_search(&(a & b)).is_ok());
                assert!(alg.binary_search(&(a - b)).is_ok());
            }
        }
    }
}
