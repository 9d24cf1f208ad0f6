//! Combinatorial structure theory of ultragraphs: directed graphs
//! whose edges land on nonempty *sets* of vertices.
//!
//! The crate models finite ultragraphs with edge multiplicities,
//! computes the set algebras their ranges generate, and builds the
//! structures the subject revolves around:
//!
//! * saturated hereditary vertex sets, breaking vertices, and
//!   admissible pairs ([`heredity`]);
//! * quotients by admissible pairs, via splitting missed breaking
//!   vertices and passing to set classes ([`quotient`]);
//! * loop conditions — every loop has an exit, no vertex has a unique
//!   first-return loop — decided exactly with witnesses ([`paths`]);
//! * dual graphs of finite fragments of a quotient ([`dual`]);
//! * the lattice of admissible pairs, closures isolating a lone loop,
//!   and primitivity of quotients ([`ideals`]);
//! * Graphviz renderings of everything ([`dot`]).

pub mod dot;
pub mod dual;
pub mod graph;
pub mod heredity;
pub mod ideals;
pub mod paths;
pub mod quotient;
pub mod set;
#[cfg(test)]
mod testutil;

pub use dot::{base_dot, dual_dot, extended_dot, quotient_dot};
pub use dual::{
    overlap_range, pattern_split, patterns, render_pick, residual_range, DualGraph, DualNode,
    EdgePick, Fragment, FragmentError, Pattern, PatternSplit, MAX_FRAGMENT_EDGES,
};
pub use graph::{
    BuildError, Cardinal, EdgeClass, EdgeSpec, Multiplicity, Ultragraph, UltragraphSpec,
    VertexId, VertexKind,
};
pub use heredity::{
    breaking_vertices, breaking_vertices_by_range_sets, enumerate_admissible_pairs,
    enumerate_admissible_pairs_bounded, is_hereditary, is_saturated, AdmissiblePair,
    HeredityError, SatHereditary, DEFAULT_VERTEX_BOUND,
};
pub use ideals::{
    classify_primitivity, isolating_closure, pair_leq, IdealPoset, IsolatingError, LatticeError,
    PrimitivityRule, PrimitivityVerdict,
};
pub use paths::{
    condition_k, condition_l, downward_directed, exitless_loops_in_complement,
    first_return_loops_at, reachable_vertices, reaches, ConditionReport, GraphLoop, LoopCount,
    QuotientLoop,
};
pub use quotient::{
    ClassSet, ContextStamp, ExtSet, ExtVertex, ExtendedUltragraph, QuotientEdge, QuotientError,
    QuotientUltragraph, SetOp,
};
pub use set::{generated_algebra, VertexSet};
