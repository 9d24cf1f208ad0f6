//! Hereditary saturated vertex sets, breaking vertices, and admissible
//! pairs.
//!
//! With finitely many vertices, a hereditary collection of vertex sets
//! that is closed under unions and subsets is determined by the set of
//! vertices it contains: a set belongs to the collection exactly when it
//! is a subset of that vertex set. Everything here works with that
//! collapsed representation, written `h1`.

use crate::graph::{Cardinal, Multiplicity, Ultragraph, VertexId, VertexKind};
use crate::set::VertexSet;

/// Default cap on vertex count for the exhaustive enumerations, which
/// walk all `2^n` subsets.
pub const DEFAULT_VERTEX_BOUND: usize = 20;

#[derive(Clone, PartialEq, Eq, Debug, thiserror::Error)]
pub enum HeredityError {
    #[error("vertex set {0} is not hereditary")]
    NotHereditary(String),
    #[error("vertex set {0} is not saturated")]
    NotSaturated(String),
    #[error("breaker set {b} is not contained in the breaking vertices {breaking}")]
    InvalidBreakers { b: String, breaking: String },
    #[error("graph has {0} vertices, above the configured bound of {1}")]
    Capacity(usize, usize),
}

/// True when every edge emitted from inside `h1` lands inside `h1`.
pub fn is_hereditary(g: &Ultragraph, h1: VertexSet) -> bool {
    g.edges().iter().all(|e| !h1.contains(e.source.0) || e.range.is_subset(h1))
}

/// True when `h1` already contains every regular vertex all of whose
/// out-ranges sit inside `h1`. Sinks and infinite emitters are exempt.
pub fn is_saturated(g: &Ultragraph, h1: VertexSet) -> bool {
    g.vertices().all(|v| {
        g.vertex_kind(v) != VertexKind::Regular
            || h1.contains(v.0)
            || g.out_classes(v).any(|(_, e)| !e.range.is_subset(h1))
    })
}

/// A hereditary and saturated set of vertices. The wrapped set is the
/// collapsed form of an ideal-defining collection: a vertex set belongs
/// to the collection iff it is a subset of `vertex_set()`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct SatHereditary {
    h1: VertexSet,
}

impl SatHereditary {
    /// Validates both properties; prefer [`SatHereditary::closure`] when
    /// starting from arbitrary seeds.
    pub fn new(g: &Ultragraph, h1: VertexSet) -> Result<Self, HeredityError> {
        if !is_hereditary(g, h1) {
            return Err(HeredityError::NotHereditary(g.set_to_string(h1)));
        }
        if !is_saturated(g, h1) {
            return Err(HeredityError::NotSaturated(g.set_to_string(h1)));
        }
        Ok(SatHereditary { h1 })
    }

    /// The empty set, hereditary and saturated in every graph (ranges
    /// are nonempty, so no regular vertex can have all ranges inside it).
    pub fn empty() -> Self {
        SatHereditary { h1: VertexSet::EMPTY }
    }

    /// Smallest hereditary saturated set containing every seed set.
    ///
    /// Alternates two monotone steps to a fixpoint: push ranges forward
    /// across edges whose source is already in, and pull in regular
    /// vertices all of whose ranges are already in.
    pub fn closure(g: &Ultragraph, seeds: &[VertexSet]) -> Self {
        let mut h1 = seeds.iter().fold(VertexSet::EMPTY, |acc, s| acc | *s);
        loop {
            let mut changed = false;
            for e in g.edges() {
                if h1.contains(e.source.0) && !e.range.is_subset(h1) {
                    h1 = h1 | e.range;
                    changed = true;
                }
            }
            for v in g.vertices() {
                if !h1.contains(v.0)
                    && g.vertex_kind(v) == VertexKind::Regular
                    && g.out_classes(v).all(|(_, e)| e.range.is_subset(h1))
                {
                    h1.insert(v.0);
                    changed = true;
                }
            }
            if !changed {
                return SatHereditary { h1 };
            }
        }
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.h1
    }

    /// Membership of a vertex set in the collapsed collection.
    pub fn contains_set(&self, a: VertexSet) -> bool {
        a.is_subset(self.h1)
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.h1.contains(v.0)
    }

    /// True when the set swallows the whole graph; such a pair describes
    /// the improper (full) ideal.
    pub fn is_full(&self, g: &Ultragraph) -> bool {
        self.h1 == g.full_set()
    }
}

/// Vertices that emit infinitely many edges overall but only finitely
/// many (and at least one) that leave `h`.
///
/// "Leaving" is counted over edges, weighted by multiplicity: an edge
/// class leaves `h` when its range is not contained in `h1`, and an
/// infinite class that leaves pushes the count to infinity. See
/// [`breaking_vertices_by_range_sets`] for the alternative count over
/// distinct range sets.
pub fn breaking_vertices(g: &Ultragraph, h: &SatHereditary) -> VertexSet {
    let h1 = h.vertex_set();
    let mut out = VertexSet::EMPTY;
    for v in g.vertices() {
        if g.out_multiplicity(v) != Cardinal::Infinite {
            continue;
        }
        let leaving: Cardinal = g
            .out_classes(v)
            .filter(|(_, e)| !e.range.is_subset(h1))
            .map(|(_, e)| e.multiplicity.as_cardinal())
            .sum();
        if !leaving.is_zero() && !leaving.is_infinite() {
            out.insert(v.0);
        }
    }
    out
}

/// Variant of [`breaking_vertices`] counting distinct range sets rather
/// than edges: here an infinite family of parallel edges sharing one
/// range counts once. The two readings disagree exactly when some
/// infinite emitter's leaving edges form finitely many distinct ranges
/// but infinitely many edges (or the converse is impossible: edge count
/// is always at least the range count). Reports surface the vertices
/// where the readings differ.
pub fn breaking_vertices_by_range_sets(g: &Ultragraph, h: &SatHereditary) -> VertexSet {
    let h1 = h.vertex_set();
    let mut out = VertexSet::EMPTY;
    for v in g.vertices() {
        if g.out_multiplicity(v) != Cardinal::Infinite {
            continue;
        }
        let mut ranges: Vec<VertexSet> =
            g.out_classes(v).filter(|(_, e)| !e.range.is_subset(h1)).map(|(_, e)| e.range).collect();
        ranges.sort_unstable();
        ranges.dedup();
        if !ranges.is_empty() {
            out.insert(v.0);
        }
    }
    out
}

/// A hereditary saturated set together with a chosen subset of its
/// breaking vertices. These pairs index the gauge-invariant ideals.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct AdmissiblePair {
    h: SatHereditary,
    b: VertexSet,
}

impl AdmissiblePair {
    pub fn new(g: &Ultragraph, h: SatHereditary, b: VertexSet) -> Result<Self, HeredityError> {
        let breaking = breaking_vertices(g, &h);
        if !b.is_subset(breaking) {
            return Err(HeredityError::InvalidBreakers {
                b: g.set_to_string(b),
                breaking: g.set_to_string(breaking),
            });
        }
        Ok(AdmissiblePair { h, b })
    }

    /// The pair `({}, {})`, admissible in every graph. Its quotient is
    /// the graph itself.
    pub fn trivial() -> Self {
        AdmissiblePair { h: SatHereditary::empty(), b: VertexSet::EMPTY }
    }

    pub fn hereditary(&self) -> &SatHereditary {
        &self.h
    }

    pub fn h1(&self) -> VertexSet {
        self.h.vertex_set()
    }

    pub fn breakers(&self) -> VertexSet {
        self.b
    }
}

/// All admissible pairs of `g`: every hereditary saturated vertex set,
/// combined with every subset of its breaking vertices. Sorted by
/// `(h1, b)` bitmask value.
pub fn enumerate_admissible_pairs(g: &Ultragraph) -> Result<Vec<AdmissiblePair>, HeredityError> {
    enumerate_admissible_pairs_bounded(g, DEFAULT_VERTEX_BOUND)
}

pub fn enumerate_admissible_pairs_bounded(
    g: &Ultragraph,
    max_vertices: usize,
) -> Result<Vec<AdmissiblePair>, HeredityError> {
    let n = g.vertex_count();
    if n > max_vertices {
        return Err(HeredityError::Capacity(n, max_vertices));
    }
    let mut pairs = Vec::new();
    for bits in 0..(1u64 << n) {
        let h1 = VertexSet::from_bits(bits);
        if !is_hereditary(g, h1) || !is_saturated(g, h1) {
            continue;
        }
        let h = SatHereditary { h1 };
        let breaking = breaking_vertices(g, &h);
        // Walk the subsets of `breaking` in ascending bitmask order.
        let mut b_bits: u64 = 0;
        loop {
            pairs.push(AdmissiblePair { h, b: VertexSet::from_bits(b_bits) });
            if b_bits == breaking.bits() {
                break;
            }
            b_bits = (b_bits.wrapping_sub(breaking.bits())) & breaking.bits();
        }
    }
    Ok(pairs)
}

/// Out-degree of `v` restricted to edges leaving `h`, weighted by
/// multiplicity. Used by reports to explain breaking-vertex status.
pub fn leaving_multiplicity(g: &Ultragraph, h: &SatHereditary, v: VertexId) -> Cardinal {
    g.out_classes(v)
        .filter(|(_, e)| !e.range.is_subset(h.vertex_set()))
        .map(|(_, e)| e.multiplicity.as_cardinal())
        .sum()
}

/// `true` when some edge class at an infinite emitter is itself an
/// infinite family; relevant to how the two breaking-vertex readings
/// can diverge.
pub fn has_infinite_class(g: &Ultragraph, v: VertexId) -> bool {
    g.out_classes(v).any(|(_, e)| e.multiplicity == Multiplicity::Infinite)
}
