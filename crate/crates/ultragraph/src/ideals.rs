//! The order structure of admissible pairs and what it says about the
//! quotients: which pairs sit below which, meets and joins, growing a
//! pair around a lone loop, and deciding primitivity.

use crate::graph::{Ultragraph, VertexId, VertexKind};
use crate::heredity::{
    breaking_vertices, enumerate_admissible_pairs, enumerate_admissible_pairs_bounded,
    AdmissiblePair, HeredityError, SatHereditary,
};
use crate::paths::{
    downward_directed, exitless_loops_in_complement, first_return_loops_at, reachable_vertices,
    reaches, GraphLoop, LoopCount,
};
use crate::set::VertexSet;

/// The order on admissible pairs: the hereditary part must grow, and
/// every earlier breaking choice must be absorbed or kept.
pub fn pair_leq(a: &AdmissiblePair, b: &AdmissiblePair) -> bool {
    a.h1().is_subset(b.h1()) && a.breakers().is_subset(b.h1() | b.breakers())
}

#[derive(Clone, PartialEq, Eq, Debug, thiserror::Error)]
pub enum LatticeError {
    #[error("no lower bound of nodes {0} and {1} dominates every other")]
    MeetMissing(usize, usize),
    #[error("no upper bound of nodes {0} and {1} lies below every other")]
    JoinMissing(usize, usize),
}

/// All admissible pairs of a graph, ordered by [`pair_leq`]; node
/// indices follow the enumeration (hereditary part ascending as a
/// bitmask, then breaker set ascending).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IdealPoset {
    nodes: Vec<AdmissiblePair>,
}

impl IdealPoset {
    pub fn new(g: &Ultragraph) -> Result<Self, HeredityError> {
        Ok(IdealPoset { nodes: enumerate_admissible_pairs(g)? })
    }

    /// Like [`IdealPoset::new`] with an explicit vertex-count cap on the
    /// underlying pair enumeration.
    pub fn with_bound(g: &Ultragraph, max_vertices: usize) -> Result<Self, HeredityError> {
        Ok(IdealPoset { nodes: enumerate_admissible_pairs_bounded(g, max_vertices)? })
    }

    pub fn nodes(&self) -> &[AdmissiblePair] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn index_of(&self, pair: &AdmissiblePair) -> Option<usize> {
        self.nodes.iter().position(|p| p == pair)
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        pair_leq(&self.nodes[i], &self.nodes[j])
    }

    fn strictly_below(&self, i: usize, j: usize) -> bool {
        i != j && self.leq(i, j)
    }

    /// Covering relations: pairs `(i, j)` with `i` strictly below `j`
    /// and nothing strictly between.
    pub fn hasse_covers(&self) -> Vec<(usize, usize)> {
        let mut covers = Vec::new();
        for i in 0..self.nodes.len() {
            for j in 0..self.nodes.len() {
                if self.strictly_below(i, j)
                    && !(0..self.nodes.len()).any(|k| {
                        self.strictly_below(i, k) && self.strictly_below(k, j)
                    })
                {
                    covers.push((i, j));
                }
            }
        }
        covers.sort();
        covers
    }

    /// The greatest lower bound, found by search over the nodes.
    pub fn meet(&self, i: usize, j: usize) -> Result<usize, LatticeError> {
        let lower: Vec<usize> =
            (0..self.nodes.len()).filter(|&k| self.leq(k, i) && self.leq(k, j)).collect();
        lower
            .iter()
            .copied()
            .find(|&m| lower.iter().all(|&k| self.leq(k, m)))
            .ok_or(LatticeError::MeetMissing(i, j))
    }

    /// The least upper bound, found by search over the nodes.
    pub fn join(&self, i: usize, j: usize) -> Result<usize, LatticeError> {
        let upper: Vec<usize> =
            (0..self.nodes.len()).filter(|&k| self.leq(i, k) && self.leq(j, k)).collect();
        upper
            .iter()
            .copied()
            .find(|&m| upper.iter().all(|&k| self.leq(m, k)))
            .ok_or(LatticeError::JoinMissing(i, j))
    }

    /// Primitivity verdicts for every node at or above `context`.
    pub fn primitivity_above(
        &self,
        g: &Ultragraph,
        context: &AdmissiblePair,
    ) -> Vec<(usize, PrimitivityVerdict)> {
        (0..self.nodes.len())
            .filter(|&k| pair_leq(context, &self.nodes[k]))
            .map(|k| (k, classify_primitivity(g, &self.nodes[k])))
            .collect()
    }
}

#[derive(Clone, PartialEq, Eq, Debug, thiserror::Error)]
pub enum IsolatingError {
    #[error("loop base {0} lies inside the hereditary set")]
    BaseSwallowed(String),
    #[error("vertex {0} is not the base of exactly one first-return loop")]
    NotUnique(String),
    #[error("the unique first-return loop at {0} differs from the one given")]
    WrongLoop(String),
}

/// Grows an admissible pair around a lone loop: the result swallows
/// everything reachable from the loop except the loop's own vertices,
/// then takes every breaking vertex, so that the quotient by it keeps
/// the loop alive with no exit.
///
/// `gamma` must be the unique first-return loop at its base, with the
/// base outside the pair's hereditary part. Uniqueness is load-bearing:
/// it forbids any chain off the loop from landing back on it (that
/// would splice into a second return loop), which is exactly what makes
/// the swallowed set hereditary while missing the loop.
pub fn isolating_closure(
    g: &Ultragraph,
    pair: &AdmissiblePair,
    gamma: &GraphLoop,
) -> Result<AdmissiblePair, IsolatingError> {
    if pair.h1().contains(gamma.base.0) {
        return Err(IsolatingError::BaseSwallowed(g.vertex_name(gamma.base).to_string()));
    }
    match first_return_loops_at(g, gamma.base) {
        LoopCount::One(found) if &found == gamma => {}
        LoopCount::One(_) => {
            return Err(IsolatingError::WrongLoop(g.vertex_name(gamma.base).to_string()))
        }
        _ => return Err(IsolatingError::NotUnique(g.vertex_name(gamma.base).to_string())),
    }

    let loop_vertices =
        VertexSet::from_indices(gamma.edges.iter().map(|&i| g.edges()[i].source.0));
    let reach = reachable_vertices(g, loop_vertices);
    let mut k1 = pair.h1();
    for e in g.edges() {
        if reach.contains(e.source.0) {
            k1 = k1 | (e.range - loop_vertices);
        }
    }
    // Absorb vertices whose every range already fell in: regular ones
    // to saturate, chosen breaking vertices to keep them accounted for.
    // Loop vertices never qualify — each has the next loop vertex in a
    // range — and sinks qualify for neither clause.
    loop {
        let mut grown = k1;
        for v in g.vertices() {
            if !k1.contains(v.0)
                && (g.vertex_kind(v) == VertexKind::Regular || pair.breakers().contains(v.0))
                && g.out_classes(v).all(|(_, e)| e.range.is_subset(k1))
            {
                grown.insert(v.0);
            }
        }
        if grown == k1 {
            break;
        }
        k1 = grown;
    }
    let k = SatHereditary::new(g, k1).expect("grown set is saturated hereditary");
    let breakers = breaking_vertices(g, &k);
    Ok(AdmissiblePair::new(g, k, breakers).expect("the full breaking set is admissible"))
}

/// Which rule of the primitivity classification applied.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum PrimitivityRule {
    /// The pair swallows every vertex; nothing is left to act on.
    Improper,
    /// Every breaking vertex chosen: primitivity asks for a downward
    /// directed reach order and no exitless loop off the hereditary
    /// part.
    FullBreakerSet,
    /// Exactly one breaking vertex missing: primitivity asks for every
    /// surviving vertex to reach it.
    OneMissingBreaker(VertexId),
    /// Two or more breaking vertices missing: never primitive.
    ManyMissingBreakers(VertexSet),
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PrimitivityVerdict {
    pub primitive: bool,
    pub rule: PrimitivityRule,
    pub detail: String,
}

/// Decides whether the quotient by the pair is primitive.
pub fn classify_primitivity(g: &Ultragraph, pair: &AdmissiblePair) -> PrimitivityVerdict {
    if pair.h1() == g.full_set() {
        return PrimitivityVerdict {
            primitive: false,
            rule: PrimitivityRule::Improper,
            detail: "the pair swallows every vertex".to_string(),
        };
    }
    let missing = breaking_vertices(g, pair.hereditary()) - pair.breakers();
    match missing.len() {
        0 => {
            let dd = downward_directed(g, pair.hereditary());
            if !dd.holds {
                return PrimitivityVerdict {
                    primitive: false,
                    rule: PrimitivityRule::FullBreakerSet,
                    detail: dd.detail,
                };
            }
            if let Some(lp) = exitless_loops_in_complement(g, pair.hereditary()).first() {
                return PrimitivityVerdict {
                    primitive: false,
                    rule: PrimitivityRule::FullBreakerSet,
                    detail: format!(
                        "loop {} has no exit off the hereditary part",
                        lp.render(g)
                    ),
                };
            }
            PrimitivityVerdict {
                primitive: true,
                rule: PrimitivityRule::FullBreakerSet,
                detail: "reach order downward directed, every surviving loop has an exit"
                    .to_string(),
            }
        }
        1 => {
            let w = VertexId(missing.iter().next().unwrap());
            let rule = PrimitivityRule::OneMissingBreaker(w);
            for v in g.vertices() {
                if pair.h1().contains(v.0) || v == w {
                    continue;
                }
                if !reaches(g, VertexSet::singleton(v.0), VertexSet::singleton(w.0)) {
                    return PrimitivityVerdict {
                        primitive: false,
                        rule,
                        detail: format!(
                            "vertex {} does not reach the missing breaking vertex {}",
                            g.vertex_name(v),
                            g.vertex_name(w)
                        ),
                    };
                }
            }
            PrimitivityVerdict {
                primitive: true,
                rule,
                detail: format!(
                    "every surviving vertex reaches the missing breaking vertex {}",
                    g.vertex_name(w)
                ),
            }
        }
        _ => PrimitivityVerdict {
            primitive: false,
            rule: PrimitivityRule::ManyMissingBreakers(missing),
            detail: format!(
                "{} breaking vertices are missing; one is the most a primitive quotient allows",
                missing.len()
            ),
        },
    }
}
