//! The ultragraph data model.
//!
//! An ultragraph is a directed graph whose edges carry a *set* of target
//! vertices instead of a single one. Parallel edges sharing a source and
//! range are collapsed into one edge class with a multiplicity, which may
//! be infinite; an edge class of multiplicity `m` stands for `m`
//! interchangeable parallel edges.

use std::collections::HashMap;
use std::fmt;
use std::iter::Sum;
use std::ops::Add;

use crate::set::VertexSet;

/// Index of a vertex in declaration order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct VertexId(pub usize);

/// How many parallel edges an edge class stands for. Finite counts are
/// at least 1; this is validated when a graph is built or parsed.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Multiplicity {
    Finite(u32),
    Infinite,
}

impl Multiplicity {
    pub const ONE: Multiplicity = Multiplicity::Finite(1);

    pub fn is_infinite(self) -> bool {
        matches!(self, Multiplicity::Infinite)
    }

    pub fn as_cardinal(self) -> Cardinal {
        match self {
            Multiplicity::Finite(n) => Cardinal::Finite(n as u64),
            Multiplicity::Infinite => Cardinal::Infinite,
        }
    }
}

impl fmt::Display for Multiplicity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Multiplicity::Finite(n) => write!(f, "{n}"),
            Multiplicity::Infinite => write!(f, "inf"),
        }
    }
}

/// A possibly-infinite count. Addition saturates: infinity plus anything
/// is infinity. Ordering places every finite value below `Infinite`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Cardinal {
    Finite(u64),
    Infinite,
}

impl Cardinal {
    pub const ZERO: Cardinal = Cardinal::Finite(0);

    pub fn is_zero(self) -> bool {
        self == Cardinal::ZERO
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, Cardinal::Infinite)
    }
}

impl Add for Cardinal {
    type Output = Cardinal;
    fn add(self, rhs: Cardinal) -> Cardinal {
        match (self, rhs) {
            (Cardinal::Finite(a), Cardinal::Finite(b)) => Cardinal::Finite(a.saturating_add(b)),
            _ => Cardinal::Infinite,
        }
    }
}

impl Sum for Cardinal {
    fn sum<I: Iterator<Item = Cardinal>>(iter: I) -> Cardinal {
        iter.fold(Cardinal::ZERO, Add::add)
    }
}

impl fmt::Display for Cardinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cardinal::Finite(n) => write!(f, "{n}"),
            Cardinal::Infinite => write!(f, "inf"),
        }
    }
}

/// One edge class: a named family of parallel edges from `source` into
/// the nonempty vertex set `range`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EdgeClass {
    pub id: String,
    pub source: VertexId,
    pub range: VertexSet,
    pub multiplicity: Multiplicity,
}

/// Classification of a vertex by its weighted out-degree.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum VertexKind {
    /// Emits nothing.
    Sink,
    /// Emits finitely many edges, at least one.
    Regular,
    /// Emits infinitely many edges.
    InfiniteEmitter,
}

/// Plain description of an ultragraph, convenient to construct by hand
/// or from parsed text. `build` turns it into a validated [`Ultragraph`].
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct UltragraphSpec {
    pub vertices: Vec<String>,
    pub edges: Vec<EdgeSpec>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EdgeSpec {
    pub id: String,
    pub source: String,
    pub range: Vec<String>,
    pub multiplicity: Multiplicity,
}

/// Errors detected while building an ultragraph from a description.
#[derive(Clone, PartialEq, Eq, Debug, thiserror::Error)]
pub enum BuildError {
    #[error("duplicate name `{0}`")]
    DuplicateName(String),
    #[error("edge `{0}` has an empty range")]
    EmptyRange(String),
    #[error("edge `{edge}` refers to undeclared vertex `{vertex}`")]
    UnknownVertex { edge: String, vertex: String },
    #[error("edge `{0}` has multiplicity 0; finite multiplicities start at 1")]
    ZeroMultiplicity(String),
    #[error("too many vertices: {0} (at most 64 are representable)")]
    TooManyVertices(usize),
}

impl UltragraphSpec {
    pub fn build(&self) -> Result<Ultragraph, BuildError> {
        if self.vertices.len() > 64 {
            return Err(BuildError::TooManyVertices(self.vertices.len()));
        }
        let mut index: HashMap<&str, usize> = HashMap::new();
        for (i, name) in self.vertices.iter().enumerate() {
            if index.insert(name, i).is_some() {
                return Err(BuildError::DuplicateName(name.clone()));
            }
        }
        let mut edge_ids: HashMap<&str, ()> = HashMap::new();
        let mut edges = Vec::with_capacity(self.edges.len());
        for e in &self.edges {
            // Edge ids share a namespace with vertex names so that
            // mixed selections (for dual-graph fragments) stay
            // unambiguous.
            if index.contains_key(e.id.as_str()) || edge_ids.insert(&e.id, ()).is_some() {
                return Err(BuildError::DuplicateName(e.id.clone()));
            }
            if e.multiplicity == Multiplicity::Finite(0) {
                return Err(BuildError::ZeroMultiplicity(e.id.clone()));
            }
            let source = *index.get(e.source.as_str()).ok_or_else(|| BuildError::UnknownVertex {
                edge: e.id.clone(),
                vertex: e.source.clone(),
            })?;
            let mut range = VertexSet::EMPTY;
            for v in &e.range {
                let i = *index.get(v.as_str()).ok_or_else(|| BuildError::UnknownVertex {
                    edge: e.id.clone(),
                    vertex: v.clone(),
                })?;
                range.insert(i);
            }
            if range.is_empty() {
                return Err(BuildError::EmptyRange(e.id.clone()));
            }
            edges.push(EdgeClass {
                id: e.id.clone(),
                source: VertexId(source),
                range,
                multiplicity: e.multiplicity,
            });
        }
        Ok(Ultragraph { names: self.vertices.clone(), edges })
    }
}

/// A validated ultragraph with finitely many vertices.
///
/// Vertices and edge classes keep their declaration order; every
/// derived listing in this crate is reported in that order (or sorted
/// by bitmask for families of sets), so equal inputs give bytewise
/// equal output.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Ultragraph {
    names: Vec<String>,
    edges: Vec<EdgeClass>,
}

impl Ultragraph {
    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        (0..self.names.len()).map(VertexId)
    }

    pub fn vertex_name(&self, v: VertexId) -> &str {
        &self.names[v.0]
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.names
    }

    pub fn vertex_by_name(&self, name: &str) -> Option<VertexId> {
        self.names.iter().position(|n| n == name).map(VertexId)
    }

    /// The set of all vertices.
    pub fn full_set(&self) -> VertexSet {
        VertexSet::full(self.names.len())
    }

    pub fn edges(&self) -> &[EdgeClass] {
        &self.edges
    }

    pub fn edge_by_id(&self, id: &str) -> Option<usize> {
        self.edges.iter().position(|e| e.id == id)
    }

    /// Edge classes emitted by `v`, with their indices.
    pub fn out_classes(&self, v: VertexId) -> impl Iterator<Item = (usize, &EdgeClass)> {
        self.edges.iter().enumerate().filter(move |(_, e)| e.source == v)
    }

    /// Number of edges emitted by `v`, counting multiplicities.
    pub fn out_multiplicity(&self, v: VertexId) -> Cardinal {
        self.out_classes(v).map(|(_, e)| e.multiplicity.as_cardinal()).sum()
    }

    pub fn vertex_kind(&self, v: VertexId) -> VertexKind {
        match self.out_multiplicity(v) {
            Cardinal::Finite(0) => VertexKind::Sink,
            Cardinal::Finite(_) => VertexKind::Regular,
            Cardinal::Infinite => VertexKind::InfiniteEmitter,
        }
    }

    /// Renders a vertex set as `{a,b,c}` using vertex names, members in
    /// index order.
    pub fn set_to_string(&self, set: VertexSet) -> String {
        let mut s = String::from("{");
        for (k, i) in set.iter().enumerate() {
            if k > 0 {
                s.push(',');
            }
            s.push_str(&self.names[i]);
        }
        s.push('}');
        s
    }

    /// True when `edges` is a valid path: consecutive sources lie in the
    /// preceding range. The empty sequence is not a path.
    pub fn is_path(&self, edges: &[usize]) -> bool {
        !edges.is_empty()
            && edges.iter().all(|&i| i < self.edges.len())
            && edges.windows(2).all(|w| self.edges[w[0]].range.contains(self.edges[w[1]].source.0))
    }

    /// True when `edges` is a path that closes up: the first source lies
    /// in the last range.
    pub fn is_loop(&self, edges: &[usize]) -> bool {
        self.is_path(edges)
            && self.edges[*edges.last().unwrap()].range.contains(self.edges[edges[0]].source.0)
    }
}
