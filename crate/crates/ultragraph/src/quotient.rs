//! Quotients of an ultragraph by an admissible pair.
//!
//! Building a quotient has two stages. First the graph is *extended*:
//! every breaking vertex left out of the chosen breaker set is split in
//! two, with the edges landing inside the hereditary set moving to the
//! new twin. Then vertex sets are taken modulo the hereditary set: two
//! sets are identified when they differ only inside it, and each class
//! is represented canonically by its part outside. The quotient keeps a
//! vertex for every surviving class of a single vertex and an edge for
//! every edge class whose range survives.

use std::collections::hash_map::DefaultHasher;
use std::fmt;
use std::hash::{Hash, Hasher};

use crate::graph::{Cardinal, EdgeClass, Multiplicity, Ultragraph, UltragraphSpec, VertexId};
use crate::heredity::{breaking_vertices, AdmissiblePair};
use crate::set::VertexSet;

#[derive(Clone, PartialEq, Eq, Debug, thiserror::Error)]
pub enum QuotientError {
    #[error("class sets come from different quotient contexts")]
    MixedContext,
    #[error("set is not a canonical class representative for this context")]
    NotCanonical,
    #[error("split index {0} out of range")]
    BadSplit(usize),
}

/// Identifies the `(graph, pair)` context a class representative belongs
/// to, so that class operations across unrelated quotients fail loudly
/// instead of combining incompatible bitmasks.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct ContextStamp(u64);

/// A vertex of the extended graph: either an original vertex or the
/// split twin of a breaking vertex that was left out of the breaker set.
/// Ordering puts all originals (in index order) before all twins.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum ExtVertex {
    Base(VertexId),
    Split(usize),
}

/// A set of extended vertices: a base part plus a mask over split twins.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct ExtSet {
    pub base: VertexSet,
    pub splits: u32,
}

impl ExtSet {
    pub fn from_base(base: VertexSet) -> Self {
        ExtSet { base, splits: 0 }
    }

    pub fn is_empty(self) -> bool {
        self.base.is_empty() && self.splits == 0
    }

    pub fn contains(self, v: ExtVertex) -> bool {
        match v {
            ExtVertex::Base(VertexId(i)) => self.base.contains(i),
            ExtVertex::Split(k) => self.splits & (1 << k) != 0,
        }
    }
}

/// The result of splitting the missed breaking vertices of an admissible
/// pair. Owns a copy of the base graph; edges keep their identity and
/// multiplicity, only their endpoints are rewritten.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExtendedUltragraph {
    graph: Ultragraph,
    pair: AdmissiblePair,
    /// Base vertex shadowed by each split twin, in base index order.
    splits: Vec<VertexId>,
    /// Rewritten source of every edge class.
    src: Vec<ExtVertex>,
    /// Rewritten range of every edge class.
    rng: Vec<ExtSet>,
    stamp: ContextStamp,
}

impl ExtendedUltragraph {
    pub fn new(g: &Ultragraph, pair: AdmissiblePair) -> Self {
        let h1 = pair.h1();
        let missed = breaking_vertices(g, pair.hereditary()) - pair.breakers();
        let splits: Vec<VertexId> = missed.iter().map(VertexId).collect();
        debug_assert!(splits.len() <= 32);

        let split_index = |v: VertexId| splits.iter().position(|&s| s == v);
        let mut src = Vec::with_capacity(g.edges().len());
        let mut rng = Vec::with_capacity(g.edges().len());
        for e in g.edges() {
            // An edge whose range stays inside the hereditary set moves
            // to the twin of a missed breaking source.
            let s = match split_index(e.source) {
                Some(k) if e.range.is_subset(h1) => ExtVertex::Split(k),
                _ => ExtVertex::Base(e.source),
            };
            src.push(s);
            let splits_mask = splits
                .iter()
                .enumerate()
                .filter(|(_, &w)| e.range.contains(w.0))
                .fold(0u32, |m, (k, _)| m | (1 << k));
            rng.push(ExtSet { base: e.range, splits: splits_mask });
        }

        let mut hasher = DefaultHasher::new();
        g.vertex_names().hash(&mut hasher);
        for e in g.edges() {
            e.id.hash(&mut hasher);
            e.source.0.hash(&mut hasher);
            e.range.bits().hash(&mut hasher);
            e.multiplicity.is_infinite().hash(&mut hasher);
        }
        h1.bits().hash(&mut hasher);
        pair.breakers().bits().hash(&mut hasher);
        let stamp = ContextStamp(hasher.finish());

        ExtendedUltragraph { graph: g.clone(), pair, splits, src, rng, stamp }
    }

    pub fn graph(&self) -> &Ultragraph {
        &self.graph
    }

    pub fn pair(&self) -> &AdmissiblePair {
        &self.pair
    }

    pub fn stamp(&self) -> ContextStamp {
        self.stamp
    }

    /// Base vertices that were split, in order; `Split(k)` twins the
    /// `k`-th entry.
    pub fn split_vertices(&self) -> &[VertexId] {
        &self.splits
    }

    pub fn split_name(&self, k: usize) -> String {
        format!("{}'", self.graph.vertex_name(self.splits[k]))
    }

    pub fn ext_vertex_name(&self, v: ExtVertex) -> String {
        match v {
            ExtVertex::Base(b) => self.graph.vertex_name(b).to_string(),
            ExtVertex::Split(k) => self.split_name(k),
        }
    }

    /// Rewritten source of edge class `i`.
    pub fn source(&self, i: usize) -> ExtVertex {
        self.src[i]
    }

    /// Rewritten range of edge class `i`.
    pub fn range(&self, i: usize) -> ExtSet {
        self.rng[i]
    }

    /// Adjoins to `set` the twin of every split vertex it contains.
    pub fn bar(&self, set: VertexSet) -> ExtSet {
        let splits = self
            .splits
            .iter()
            .enumerate()
            .filter(|(_, &w)| set.contains(w.0))
            .fold(0u32, |m, (k, _)| m | (1 << k));
        ExtSet { base: set, splits }
    }

    /// The class of an extended vertex set, represented canonically by
    /// its part outside the hereditary set. Twins are never inside.
    pub fn class_of(&self, set: ExtSet) -> ClassSet {
        ClassSet {
            base: set.base - self.pair.h1(),
            splits: set.splits,
            stamp: self.stamp,
        }
    }

    /// Convenience: the class of a plain vertex set after adjoining
    /// twins.
    pub fn class_of_base(&self, set: VertexSet) -> ClassSet {
        self.class_of(self.bar(set))
    }

    /// Renders the extended graph as a standalone ultragraph whose twin
    /// vertices are named with a trailing apostrophe. Vertex indices
    /// 0..n match the base graph, twins follow in split order.
    pub fn to_ultragraph(&self) -> Ultragraph {
        let mut vertices: Vec<String> =
            self.graph.vertex_names().to_vec();
        for k in 0..self.splits.len() {
            vertices.push(self.split_name(k));
        }
        let name_of = |v: ExtVertex| match v {
            ExtVertex::Base(b) => self.graph.vertex_name(b).to_string(),
            ExtVertex::Split(k) => self.split_name(k),
        };
        let n = self.graph.vertex_count();
        let edges = self
            .graph
            .edges()
            .iter()
            .enumerate()
            .map(|(i, e)| crate::graph::EdgeSpec {
                id: e.id.clone(),
                source: name_of(self.src[i]),
                range: self.rng[i]
                    .base
                    .iter()
                    .map(|j| vertices[j].clone())
                    .chain((0..self.splits.len()).filter_map(|k| {
                        (self.rng[i].splits & (1 << k) != 0).then(|| vertices[n + k].clone())
                    }))
                    .collect(),
                multiplicity: e.multiplicity,
            })
            .collect();
        UltragraphSpec { vertices, edges }.build().expect("extended graph is well formed")
    }
}

/// Which Boolean operation to apply to a pair of classes.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SetOp {
    Union,
    Inter,
    Diff,
}

/// The class of an extended vertex set modulo the hereditary set,
/// stored as its canonical representative (the part outside). Classes
/// remember their context; operations across contexts are rejected.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct ClassSet {
    base: VertexSet,
    splits: u32,
    stamp: ContextStamp,
}

impl ClassSet {
    pub fn rep_base(&self) -> VertexSet {
        self.base
    }

    pub fn rep_splits(&self) -> u32 {
        self.splits
    }

    pub fn is_empty(&self) -> bool {
        self.base.is_empty() && self.splits == 0
    }

    pub fn stamp(&self) -> ContextStamp {
        self.stamp
    }

    pub fn contains(&self, v: ExtVertex) -> bool {
        match v {
            ExtVertex::Base(VertexId(i)) => self.base.contains(i),
            ExtVertex::Split(k) => self.splits & (1 << k) != 0,
        }
    }

    /// Members of the representative, originals before twins.
    pub fn members(&self) -> Vec<ExtVertex> {
        let mut out: Vec<ExtVertex> = self.base.iter().map(|i| ExtVertex::Base(VertexId(i))).collect();
        for k in 0..32 {
            if self.splits & (1 << k) != 0 {
                out.push(ExtVertex::Split(k));
            }
        }
        out
    }

    fn check(self, other: ClassSet) -> Result<(), QuotientError> {
        if self.stamp != other.stamp {
            return Err(QuotientError::MixedContext);
        }
        Ok(())
    }

    /// Class operations act on representatives; identifying sets modulo
    /// the hereditary part makes these well defined.
    pub fn apply(self, op: SetOp, other: ClassSet) -> Result<ClassSet, QuotientError> {
        self.check(other)?;
        let (base, splits) = match op {
            SetOp::Union => (self.base | other.base, self.splits | other.splits),
            SetOp::Inter => (self.base & other.base, self.splits & other.splits),
            SetOp::Diff => (self.base - other.base, self.splits & !other.splits),
        };
        Ok(ClassSet { base, splits, stamp: self.stamp })
    }

    pub fn union(self, other: ClassSet) -> Result<ClassSet, QuotientError> {
        self.apply(SetOp::Union, other)
    }

    pub fn inter(self, other: ClassSet) -> Result<ClassSet, QuotientError> {
        self.apply(SetOp::Inter, other)
    }

    pub fn diff(self, other: ClassSet) -> Result<ClassSet, QuotientError> {
        self.apply(SetOp::Diff, other)
    }

    /// Containment of classes: `[A] <= [B]` iff `[A] ∩ [B] = [A]`.
    pub fn subset_of(self, other: ClassSet) -> Result<bool, QuotientError> {
        self.check(other)?;
        Ok(self.base.is_subset(other.base) && self.splits & !other.splits == 0)
    }
}

/// An edge class of a quotient: the surviving edge with its rewritten
/// endpoints. `class` indexes the edge list of the base graph.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuotientEdge {
    pub class: usize,
    pub source: ExtVertex,
    pub range: ClassSet,
}

/// The quotient of an ultragraph by an admissible pair.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuotientUltragraph {
    ext: ExtendedUltragraph,
    vertices: Vec<ExtVertex>,
    edges: Vec<QuotientEdge>,
}

impl QuotientUltragraph {
    pub fn new(g: &Ultragraph, pair: AdmissiblePair) -> Self {
        Self::from_extended(ExtendedUltragraph::new(g, pair))
    }

    pub fn from_extended(ext: ExtendedUltragraph) -> Self {
        let h1 = ext.pair().h1();
        let mut vertices: Vec<ExtVertex> = ext
            .graph()
            .vertices()
            .filter(|v| !h1.contains(v.0))
            .map(ExtVertex::Base)
            .collect();
        vertices.extend((0..ext.split_vertices().len()).map(ExtVertex::Split));

        let edges = (0..ext.graph().edges().len())
            .filter(|&i| {
                // Keep an edge when its rewritten range survives the
                // quotient, i.e. is not swallowed by the hereditary set.
                let r = ext.range(i);
                !(r.base.is_subset(h1) && r.splits == 0)
            })
            .map(|i| QuotientEdge {
                class: i,
                source: ext.source(i),
                range: ext.class_of(ext.range(i)),
            })
            .collect();

        QuotientUltragraph { ext, vertices, edges }
    }

    pub fn extended(&self) -> &ExtendedUltragraph {
        &self.ext
    }

    pub fn base_graph(&self) -> &Ultragraph {
        self.ext.graph()
    }

    pub fn pair(&self) -> &AdmissiblePair {
        self.ext.pair()
    }

    pub fn stamp(&self) -> ContextStamp {
        self.ext.stamp()
    }

    /// Vertex classes, originals (in index order) before twins.
    pub fn vertices(&self) -> &[ExtVertex] {
        &self.vertices
    }

    pub fn vertex_position(&self, v: ExtVertex) -> Option<usize> {
        self.vertices.iter().position(|&x| x == v)
    }

    /// Surviving edge classes, in base declaration order.
    pub fn edges(&self) -> &[QuotientEdge] {
        &self.edges
    }

    pub fn edge_id(&self, e: &QuotientEdge) -> &str {
        &self.ext.graph().edges()[e.class].id
    }

    pub fn edge_multiplicity(&self, e: &QuotientEdge) -> Multiplicity {
        self.ext.graph().edges()[e.class].multiplicity
    }

    pub fn edge_by_id(&self, id: &str) -> Option<usize> {
        self.edges.iter().position(|e| self.edge_id(e) == id)
    }

    /// The singleton class of a quotient vertex.
    pub fn vertex_class(&self, v: ExtVertex) -> ClassSet {
        let set = match v {
            ExtVertex::Base(b) => ExtSet::from_base(VertexSet::singleton(b.0)),
            ExtVertex::Split(k) => ExtSet { base: VertexSet::EMPTY, splits: 1 << k },
        };
        self.ext.class_of(set)
    }

    /// Edges emitted by a vertex class, with their indices into
    /// [`Self::edges`].
    pub fn out_edges(&self, v: ExtVertex) -> impl Iterator<Item = (usize, &QuotientEdge)> {
        self.edges.iter().enumerate().filter(move |(_, e)| e.source == v)
    }

    pub fn out_multiplicity(&self, v: ExtVertex) -> Cardinal {
        self.out_edges(v).map(|(_, e)| self.edge_multiplicity(e).as_cardinal()).sum()
    }

    /// Vertex classes that emit nothing or infinitely much.
    pub fn singular_vertices(&self) -> Vec<ExtVertex> {
        self.vertices
            .iter()
            .copied()
            .filter(|&v| {
                let m = self.out_multiplicity(v);
                m.is_zero() || m.is_infinite()
            })
            .collect()
    }

    pub fn render_vertex(&self, v: ExtVertex) -> String {
        format!("[{}]", self.ext.ext_vertex_name(v))
    }

    /// Renders a class as `[a,b,c']`; the empty class is `[]`.
    pub fn render_class(&self, c: &ClassSet) -> String {
        let names: Vec<String> =
            c.members().iter().map(|&m| self.ext.ext_vertex_name(m)).collect();
        format!("[{}]", names.join(","))
    }

    /// True when `edges` (indices into [`Self::edges`]) forms a path:
    /// each source class is contained in the preceding range class.
    pub fn is_path(&self, edges: &[usize]) -> bool {
        !edges.is_empty()
            && edges.iter().all(|&i| i < self.edges.len())
            && edges.windows(2).all(|w| {
                let prev = &self.edges[w[0]];
                let next = &self.edges[w[1]];
                self.vertex_class(next.source).subset_of(prev.range).unwrap()
            })
    }

    pub fn is_loop(&self, edges: &[usize]) -> bool {
        self.is_path(edges) && {
            let first = &self.edges[edges[0]];
            let last = &self.edges[*edges.last().unwrap()];
            self.vertex_class(first.source).subset_of(last.range).unwrap()
        }
    }
}

impl fmt::Display for QuotientUltragraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self.vertices.iter().map(|&v| self.render_vertex(v)).collect();
        writeln!(f, "vertices: {}", names.join(" "))?;
        for e in &self.edges {
            writeln!(
                f,
                "edge {} : {} -> {}{}",
                self.edge_id(e),
                self.render_vertex(e.source),
                self.render_class(&e.range),
                match self.edge_multiplicity(e) {
                    Multiplicity::Finite(1) => String::new(),
                    m => format!(" * {m}"),
                }
            )?;
        }
        Ok(())
    }
}

/// Type-level guard: every public structure is shareable across threads.
#[allow(dead_code)]
fn _assert_send_sync() {
    fn ok<T: Send + Sync>() {}
    ok::<Ultragraph>();
    ok::<ExtendedUltragraph>();
    ok::<QuotientUltragraph>();
    ok::<ClassSet>();
    ok::<EdgeClass>();
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::heredity::{is_hereditary, SatHereditary};
    use crate::testutil as fixtures;

    fn named_set(g: &Ultragraph, names: &[&str]) -> VertexSet {
        VertexSet::from_indices(names.iter().map(|n| g.vertex_by_name(n).unwrap().0))
    }

    fn ex1_pair(b: &[&str]) -> (Ultragraph, AdmissiblePair) {
        let g = fixtures::ex1();
        let h = SatHereditary::new(&g, named_set(&g, &["v", "a"])).unwrap();
        let b = named_set(&g, b);
        let pair = AdmissiblePair::new(&g, h, b).unwrap();
        (g, pair)
    }

    #[test]
    fn extension_splits_the_missed_breaker() {
        let (g, pair) = ex1_pair(&[]);
        let ext = ExtendedUltragraph::new(&g, pair);
        assert_eq!(ext.split_vertices(), &[g.vertex_by_name("w").unwrap()]);
        assert_eq!(ext.split_name(0), "w'");

        let e = g.edge_by_id("e").unwrap();
        let f = g.edge_by_id("f").unwrap();
        let gg = g.edge_by_id("g").unwrap();
        let h = g.edge_by_id("h").unwrap();
        // Edges from w landing inside {v,a} move to the twin.
        assert_eq!(ext.source(f), ExtVertex::Split(0));
        assert_eq!(ext.source(h), ExtVertex::Split(0));
        assert_eq!(ext.source(gg), ExtVertex::Base(g.vertex_by_name("w").unwrap()));
        assert_eq!(ext.source(e), ExtVertex::Base(g.vertex_by_name("u").unwrap()));
        // The range of e picks up the twin of w.
        assert_eq!(ext.range(e), ExtSet { base: named_set(&g, &["v", "w"]), splits: 1 });
        assert_eq!(ext.range(f), ExtSet { base: named_set(&g, &["a"]), splits: 0 });
    }

    #[test]
    fn bar_adjoins_twins() {
        let (g, pair) = ex1_pair(&[]);
        let ext = ExtendedUltragraph::new(&g, pair);
        assert_eq!(
            ext.bar(named_set(&g, &["v", "w"])),
            ExtSet { base: named_set(&g, &["v", "w"]), splits: 1 }
        );
        assert_eq!(ext.bar(named_set(&g, &["a"])), ExtSet { base: named_set(&g, &["a"]), splits: 0 });
    }

    #[test]
    fn extension_with_all_breakers_changes_nothing() {
        let (g, pair) = ex1_pair(&["w"]);
        let ext = ExtendedUltragraph::new(&g, pair);
        assert!(ext.split_vertices().is_empty());
        for i in 0..g.edges().len() {
            assert_eq!(ext.source(i), ExtVertex::Base(g.edges()[i].source));
            assert_eq!(ext.range(i), ExtSet::from_base(g.edges()[i].range));
        }
    }

    #[test]
    fn extended_graph_has_no_breaking_vertices_left() {
        // Splitting removes exactly the missed breakers: recomputing the
        // breaking vertices of H in the extended graph gives B back.
        let (g, pair) = ex1_pair(&[]);
        let ext = ExtendedUltragraph::new(&g, pair);
        let eg = ext.to_ultragraph();
        assert!(is_hereditary(&eg, pair.h1()));
        let h = SatHereditary::new(&eg, pair.h1()).unwrap();
        assert_eq!(breaking_vertices(&eg, &h), pair.breakers());
    }

    #[test]
    fn class_representatives_and_ops() {
        let (g, pair) = ex1_pair(&[]);
        let ext = ExtendedUltragraph::new(&g, pair);
        let c = ext.class_of_base(named_set(&g, &["v", "w"]));
        // {v,w} picks up w' and loses v: representative {w,w'}.
        assert_eq!(c.rep_base(), named_set(&g, &["w"]));
        assert_eq!(c.rep_splits(), 1);

        let u = ext.class_of_base(named_set(&g, &["u"]));
        assert!(u.inter(c).unwrap().is_empty());
        assert_eq!(u.union(c).unwrap().rep_base(), named_set(&g, &["u", "w"]));
        assert!(!u.subset_of(c).unwrap());
        assert!(ext.class_of_base(named_set(&g, &["w"])).subset_of(c).unwrap());

        // Sets differing only inside the hereditary part share a class.
        let c2 = ext.class_of_base(named_set(&g, &["v", "w", "a"]));
        assert_eq!(c, c2);
    }

    #[test]
    fn mixed_contexts_are_rejected() {
        let (g, pair) = ex1_pair(&[]);
        let ext = ExtendedUltragraph::new(&g, pair);
        let (g2, pair2) = ex1_pair(&["w"]);
        let ext2 = ExtendedUltragraph::new(&g2, pair2);
        let a = ext.class_of_base(named_set(&g, &["u"]));
        let b = ext2.class_of_base(named_set(&g2, &["u"]));
        assert_eq!(a.union(b), Err(QuotientError::MixedContext));
    }

    #[test]
    fn quotient_of_demo_pair() {
        let (g, pair) = ex1_pair(&[]);
        let q = QuotientUltragraph::new(&g, pair);
        let rendered: Vec<String> = q.vertices().iter().map(|&v| q.render_vertex(v)).collect();
        assert_eq!(rendered, vec!["[u]", "[w]", "[w']"]);
        let ids: Vec<&str> = q.edges().iter().map(|e| q.edge_id(e)).collect();
        assert_eq!(ids, vec!["e", "g"]);
        let e = &q.edges()[0];
        assert_eq!(q.render_class(&e.range), "[w,w']");
        assert_eq!(q.render_vertex(e.source), "[u]");
        let gg = &q.edges()[1];
        assert_eq!(q.render_class(&gg.range), "[u]");
        assert_eq!(q.render_vertex(gg.source), "[w]");
    }

    #[test]
    fn quotient_with_full_breaker_set() {
        let (g, pair) = ex1_pair(&["w"]);
        let q = QuotientUltragraph::new(&g, pair);
        let rendered: Vec<String> = q.vertices().iter().map(|&v| q.render_vertex(v)).collect();
        assert_eq!(rendered, vec!["[u]", "[w]"]);
        let ids: Vec<&str> = q.edges().iter().map(|e| q.edge_id(e)).collect();
        assert_eq!(ids, vec!["e", "g"]);
        assert_eq!(q.render_class(&q.edges()[0].range), "[w]");
    }

    #[test]
    fn quotient_by_trivial_pair_is_the_graph() {
        let g = fixtures::ex1();
        let q = QuotientUltragraph::new(&g, AdmissiblePair::trivial());
        assert_eq!(q.vertices().len(), g.vertex_count());
        assert_eq!(q.edges().len(), g.edges().len());
        for (qe, e) in q.edges().iter().zip(g.edges()) {
            assert_eq!(qe.source, ExtVertex::Base(e.source));
            assert_eq!(qe.range.rep_base(), e.range);
            assert_eq!(qe.range.rep_splits(), 0);
        }
    }

    #[test]
    fn singular_vertices_of_quotients() {
        let (g, pair) = ex1_pair(&[]);
        let q = QuotientUltragraph::new(&g, pair);
        let sing: Vec<String> =
            q.singular_vertices().iter().map(|&v| q.render_vertex(v)).collect();
        assert_eq!(sing, vec!["[w']"], "the twin is a sink; [u] and [w] emit one edge each");

        let q = QuotientUltragraph::new(&g, AdmissiblePair::trivial());
        let sing: Vec<String> =
            q.singular_vertices().iter().map(|&v| q.render_vertex(v)).collect();
        assert_eq!(sing, vec!["[v]", "[w]", "[a]"]);
    }

    #[test]
    fn quotient_edges_never_have_empty_range() {
        let g = fixtures::ex1();
        for pair in crate::heredity::enumerate_admissible_pairs(&g).unwrap() {
            let q = QuotientUltragraph::new(&g, pair);
            for e in q.edges() {
                assert!(!e.range.is_empty());
                assert!(q.vertices().contains(&e.source));
            }
        }
    }

    #[test]
    fn quotient_paths() {
        let (g, pair) = ex1_pair(&[]);
        let q = QuotientUltragraph::new(&g, pair);
        let e = q.edge_by_id("e").unwrap();
        let gg = q.edge_by_id("g").unwrap();
        assert!(q.is_path(&[e, gg]));
        assert!(q.is_loop(&[e, gg]));
        assert!(q.is_loop(&[gg, e]));
        assert!(!q.is_path(&[e, e]));
    }
}
