//! Dual graphs of quotient fragments.
//!
//! A fragment picks finitely much of a quotient: some vertex classes
//! that emit nothing or infinitely much, and some individual edge
//! copies from finite families. Over the picked edges, a pattern marks
//! which of them a point lies under; the overlap range of a pattern is
//! what lies under exactly the marked edges, and its residual range is
//! what is left after removing the picked vertices. The dual graph has
//! a node per picked vertex, per picked edge copy, and per pattern
//! whose residual neither vanishes nor is fed back entirely through
//! picked edges; its arrows record containment of sources in ranges.

use std::fmt;

use crate::graph::Multiplicity;
use crate::paths::{functional_cycles, ConditionReport};
use crate::quotient::{ClassSet, ExtVertex, QuotientUltragraph};

/// Most edge copies a fragment may pick; patterns are enumerated as
/// subsets of the picks.
pub const MAX_FRAGMENT_EDGES: usize = 16;

#[derive(Clone, PartialEq, Eq, Debug, thiserror::Error)]
pub enum FragmentError {
    #[error("unknown vertex or edge name {0:?}")]
    UnknownName(String),
    #[error("vertex {0} emits finitely many edges and cannot be picked")]
    NotSingular(String),
    #[error("family {0} has infinitely many copies; none can be picked")]
    InfiniteFamily(String),
    #[error("family {id} has {mult} copies; copy {copy} does not exist")]
    CopyOutOfRange { id: String, copy: u32, mult: u32 },
    #[error("duplicate pick {0}")]
    DuplicatePick(String),
    #[error("fragment picks {count} edge copies, more than the supported {max}")]
    TooManyEdges { count: usize, max: usize },
}

/// One picked copy of a finite edge family: `class` indexes the
/// quotient's edge list, `copy` runs below the multiplicity.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct EdgePick {
    pub class: usize,
    pub copy: u32,
}

/// A finite selection from a quotient: singular vertex classes plus
/// edge copies, both kept sorted and duplicate-free.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Fragment {
    vertices: Vec<ExtVertex>,
    picks: Vec<EdgePick>,
}

impl Fragment {
    pub fn new(
        q: &QuotientUltragraph,
        vertices: Vec<ExtVertex>,
        picks: Vec<EdgePick>,
    ) -> Result<Self, FragmentError> {
        let mut vertices = vertices;
        vertices.sort_by_key(|&v| q.vertex_position(v));
        for pair in vertices.windows(2) {
            if pair[0] == pair[1] {
                return Err(FragmentError::DuplicatePick(q.render_vertex(pair[0])));
            }
        }
        let singular = q.singular_vertices();
        for &v in &vertices {
            if q.vertex_position(v).is_none() {
                return Err(FragmentError::UnknownName(q.render_vertex(v)));
            }
            if !singular.contains(&v) {
                return Err(FragmentError::NotSingular(q.render_vertex(v)));
            }
        }

        let mut picks = picks;
        picks.sort();
        for pair in picks.windows(2) {
            if pair[0] == pair[1] {
                return Err(FragmentError::DuplicatePick(render_pick(q, pair[0])));
            }
        }
        for &p in &picks {
            let Some(e) = q.edges().get(p.class) else {
                return Err(FragmentError::UnknownName(format!("edge #{}", p.class)));
            };
            match q.edge_multiplicity(e) {
                Multiplicity::Infinite => {
                    return Err(FragmentError::InfiniteFamily(q.edge_id(e).to_string()))
                }
                Multiplicity::Finite(m) if p.copy >= m => {
                    return Err(FragmentError::CopyOutOfRange {
                        id: q.edge_id(e).to_string(),
                        copy: p.copy,
                        mult: m,
                    })
                }
                Multiplicity::Finite(_) => {}
            }
        }
        if picks.len() > MAX_FRAGMENT_EDGES {
            return Err(FragmentError::TooManyEdges {
                count: picks.len(),
                max: MAX_FRAGMENT_EDGES,
            });
        }
        Ok(Fragment { vertices, picks })
    }

    /// Builds a fragment from names: a vertex name picks that singular
    /// class, an edge id picks every copy of a finite family, and
    /// `id#k` picks the single copy `k`. Brackets around vertex names
    /// are accepted and ignored.
    pub fn from_names<S: AsRef<str>>(
        q: &QuotientUltragraph,
        names: &[S],
    ) -> Result<Self, FragmentError> {
        let mut vertices = Vec::new();
        let mut picks = Vec::new();
        for name in names {
            let raw = name.as_ref().trim();
            let bare = raw.strip_prefix('[').and_then(|r| r.strip_suffix(']')).unwrap_or(raw);
            if let Some((id, copy)) = bare.split_once('#') {
                let class = q
                    .edge_by_id(id)
                    .ok_or_else(|| FragmentError::UnknownName(raw.to_string()))?;
                let copy: u32 = copy
                    .parse()
                    .map_err(|_| FragmentError::UnknownName(raw.to_string()))?;
                picks.push(EdgePick { class, copy });
            } else if let Some(v) =
                q.vertices().iter().copied().find(|&v| q.extended().ext_vertex_name(v) == bare)
            {
                vertices.push(v);
            } else if let Some(class) = q.edge_by_id(bare) {
                match q.edge_multiplicity(&q.edges()[class]) {
                    Multiplicity::Infinite => {
                        return Err(FragmentError::InfiniteFamily(bare.to_string()))
                    }
                    Multiplicity::Finite(m) => {
                        picks.extend((0..m).map(|copy| EdgePick { class, copy }));
                    }
                }
            } else {
                return Err(FragmentError::UnknownName(raw.to_string()));
            }
        }
        Fragment::new(q, vertices, picks)
    }

    pub fn vertices(&self) -> &[ExtVertex] {
        &self.vertices
    }

    pub fn picks(&self) -> &[EdgePick] {
        &self.picks
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty() && self.picks.is_empty()
    }

    /// Union of the picked vertex classes.
    pub fn vertex_part(&self, q: &QuotientUltragraph) -> ClassSet {
        let mut acc = q.extended().class_of(crate::quotient::ExtSet {
            base: crate::set::VertexSet::EMPTY,
            splits: 0,
        });
        for &v in &self.vertices {
            acc = acc.union(q.vertex_class(v)).unwrap();
        }
        acc
    }
}

/// Renders a pick as the bare family id when the family has a single
/// copy, and as `id#k` otherwise.
pub fn render_pick(q: &QuotientUltragraph, p: EdgePick) -> String {
    let e = &q.edges()[p.class];
    match q.edge_multiplicity(e) {
        Multiplicity::Finite(1) => q.edge_id(e).to_string(),
        _ => format!("{}#{}", q.edge_id(e), p.copy),
    }
}

/// A subset of a fragment's edge picks, stored positionally: bit `i`
/// marks the `i`-th pick. Rendered with pick 0 first, so `"10"` marks
/// exactly the first of two picks.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Pattern {
    bits: u32,
    width: u8,
}

impl Pattern {
    pub fn includes(self, pick: usize) -> bool {
        self.bits >> pick & 1 == 1
    }

    pub fn width(self) -> usize {
        self.width as usize
    }

    pub fn render(self) -> String {
        (0..self.width).map(|i| if self.bits >> i & 1 == 1 { '1' } else { '0' }).collect()
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// All nonzero patterns over the fragment's picks, in rendered order.
pub fn patterns(fragment: &Fragment) -> Vec<Pattern> {
    let width = fragment.picks.len() as u8;
    let mut all: Vec<Pattern> =
        (1u32..1 << fragment.picks.len()).map(|bits| Pattern { bits, width }).collect();
    all.sort_by_key(|p| p.render());
    all
}

/// What lies under exactly the marked picks: the intersection of their
/// ranges minus the ranges of every unmarked pick.
pub fn overlap_range(q: &QuotientUltragraph, fragment: &Fragment, omega: Pattern) -> ClassSet {
    let ranges = |marked: bool| {
        fragment
            .picks
            .iter()
            .enumerate()
            .filter(move |&(i, _)| omega.includes(i) == marked)
            .map(|(_, &p)| q.edges()[p.class].range)
    };
    let mut acc = ranges(true).next().expect("pattern marks at least one pick");
    for r in ranges(true).skip(1) {
        acc = acc.inter(r).unwrap();
    }
    for r in ranges(false) {
        acc = acc.diff(r).unwrap();
    }
    acc
}

/// The overlap range with the fragment's picked vertices removed.
pub fn residual_range(q: &QuotientUltragraph, fragment: &Fragment, omega: Pattern) -> ClassSet {
    overlap_range(q, fragment, omega).diff(fragment.vertex_part(q)).unwrap()
}

/// Patterns with a nonempty residual range, split by whether the
/// residual is fed back through the fragment.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PatternSplit {
    /// Residual decomposes into vertex classes, each emitting at least
    /// one family and having every copy of every family it emits among
    /// the picks; such patterns need no node of their own.
    pub fed: Vec<Pattern>,
    /// The rest; each becomes a node of the dual graph.
    pub residual: Vec<Pattern>,
}

/// Splits the nonzero patterns of a fragment.
pub fn pattern_split(q: &QuotientUltragraph, fragment: &Fragment) -> PatternSplit {
    let mut fed = Vec::new();
    let mut residual = Vec::new();
    for omega in patterns(fragment) {
        let rep = residual_range(q, fragment, omega);
        if rep.is_empty() {
            continue;
        }
        let all_fed = rep.members().iter().all(|&m| {
            let mut emitted = 0usize;
            let covered = q.out_edges(m).all(|(class, e)| {
                emitted += 1;
                match q.edge_multiplicity(e) {
                    Multiplicity::Infinite => false,
                    Multiplicity::Finite(mult) => {
                        let held =
                            fragment.picks.iter().filter(|p| p.class == class).count();
                        held as u32 == mult
                    }
                }
            });
            covered && emitted > 0
        });
        if all_fed {
            fed.push(omega);
        } else {
            residual.push(omega);
        }
    }
    PatternSplit { fed, residual }
}

/// A node of a dual graph.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum DualNode {
    Vertex(ExtVertex),
    Edge(EdgePick),
    Pattern(Pattern),
}

/// The dual graph of a fragment: picked vertices, picked edge copies,
/// and unfed patterns as nodes; arrows from each picked edge to
/// whatever its range contains — picked vertices inside it, picked
/// edges whose source lies in it, and the patterns marking it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DualGraph {
    nodes: Vec<DualNode>,
    names: Vec<String>,
    edges: Vec<(usize, usize)>,
    split: PatternSplit,
}

impl DualGraph {
    pub fn new(q: &QuotientUltragraph, fragment: &Fragment) -> Self {
        let split = pattern_split(q, fragment);
        let mut nodes: Vec<DualNode> =
            fragment.vertices().iter().map(|&v| DualNode::Vertex(v)).collect();
        nodes.extend(fragment.picks().iter().map(|&p| DualNode::Edge(p)));
        nodes.extend(split.residual.iter().map(|&p| DualNode::Pattern(p)));
        let names: Vec<String> = nodes
            .iter()
            .map(|n| match *n {
                DualNode::Vertex(v) => q.render_vertex(v),
                DualNode::Edge(p) => render_pick(q, p),
                DualNode::Pattern(p) => p.render(),
            })
            .collect();

        let first_pick = fragment.vertices().len();
        let mut edges = Vec::new();
        for (i, &p) in fragment.picks().iter().enumerate() {
            let src = first_pick + i;
            let range = q.edges()[p.class].range;
            for (tgt, node) in nodes.iter().enumerate() {
                let hit = match *node {
                    DualNode::Vertex(v) => q.vertex_class(v).subset_of(range).unwrap(),
                    DualNode::Edge(f) => {
                        q.vertex_class(q.edges()[f.class].source).subset_of(range).unwrap()
                    }
                    DualNode::Pattern(omega) => omega.includes(i),
                };
                if hit {
                    edges.push((src, tgt));
                }
            }
        }
        DualGraph { nodes, names, edges, split }
    }

    pub fn nodes(&self) -> &[DualNode] {
        &self.nodes
    }

    pub fn node_name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn split(&self) -> &PatternSplit {
        &self.split
    }

    pub fn out_degree(&self, node: usize) -> usize {
        self.edges.iter().filter(|&&(s, _)| s == node).count()
    }

    /// Decides whether every cycle of the dual graph has an exit: an
    /// exitless cycle forces out-degree one along it, so cycles of the
    /// unique-successor function are exactly the failures.
    pub fn condition_l(&self) -> ConditionReport<Vec<usize>> {
        let succ: Vec<Option<usize>> = (0..self.nodes.len())
            .map(|i| {
                let mut outs = self.edges.iter().filter(|&&(s, _)| s == i);
                match (outs.next(), outs.next()) {
                    (Some(&(_, t)), None) => Some(t),
                    _ => None,
                }
            })
            .collect();
        match functional_cycles(&succ).into_iter().next() {
            None => ConditionReport::holds("every cycle has an exit"),
            Some(cyc) => {
                let names: Vec<&str> = cyc.iter().map(|&i| self.node_name(i)).collect();
                let detail = format!("cycle {} has no exit", names.join(" -> "));
                ConditionReport::fails(cyc, detail)
            }
        }
    }
}

impl fmt::Display for DualGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "nodes: {}", self.names.join(" "))?;
        for &(s, t) in &self.edges {
            writeln!(f, "{} -> {}", self.names[s], self.names[t])?;
        }
        Ok(())
    }
}
