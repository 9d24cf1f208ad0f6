//! Slow reference implementations.
//!
//! Each oracle works as close to the defining property as it can get,
//! enumerating loops, labeled paths, or whole subset collections, so
//! that the fast decision procedures have something independent to
//! agree with. All are exact on the sizes they are used at; the
//! loop-counting oracle enforces a hard step budget and panics rather
//! than silently truncating.

use ultragraph::{
    breaking_vertices, reaches, AdmissiblePair, Multiplicity, QuotientUltragraph, SatHereditary,
    Ultragraph, VertexId, VertexKind, VertexSet,
};

/// Whether every loop of the quotient has an exit, by enumerating all
/// edge-class sequences up to the vertex-class count and testing the
/// exit clauses directly.
///
/// The length bound loses nothing: in a loop with no exit each range
/// is exactly the next source's class, so between two visits of the
/// same source the wrap-around edge must coincide with the unique edge
/// there, and the segment between the visits is itself a loop with no
/// exit. A shortest one therefore never repeats a source.
pub fn condition_l_oracle(q: &QuotientUltragraph) -> bool {
    fn has_exit(q: &QuotientUltragraph, seq: &[usize]) -> bool {
        let edges = q.edges();
        (0..seq.len()).any(|i| {
            let next = seq[(i + 1) % seq.len()];
            let range = edges[seq[i]].range;
            let edge_exit = edges.iter().enumerate().any(|(fi, f)| {
                q.vertex_class(f.source).subset_of(range).unwrap()
                    && (fi != next || q.edge_multiplicity(f) != Multiplicity::ONE)
            });
            let vertex_exit = q.vertices().iter().any(|&x| {
                q.vertex_class(x).subset_of(range).unwrap() && x != edges[next].source
            });
            edge_exit || vertex_exit
        })
    }

    fn exitless_loop_from(q: &QuotientUltragraph, seq: &mut Vec<usize>, bound: usize) -> bool {
        let last = &q.edges()[*seq.last().unwrap()];
        let closes = q.vertex_class(q.edges()[seq[0]].source).subset_of(last.range).unwrap();
        if closes && !has_exit(q, seq) {
            return true;
        }
        if seq.len() == bound {
            return false;
        }
        for (fi, f) in q.edges().iter().enumerate() {
            if q.vertex_class(f.source).subset_of(last.range).unwrap() {
                seq.push(fi);
                if exitless_loop_from(q, seq, bound) {
                    return true;
                }
                seq.pop();
            }
        }
        false
    }

    let bound = q.vertices().len();
    for start in 0..q.edges().len() {
        let mut seq = vec![start];
        if exitless_loop_from(q, &mut seq, bound) {
            return false;
        }
    }
    true
}

/// Hard ceiling on labeled paths the loop counter may visit.
const RETURN_ORACLE_BUDGET: usize = 5_000_000;

/// The number of first-return loops based at `v`, capped at two, by
/// exhaustive search over labeled paths.
///
/// Copies are capped at two per family — extra copies cannot move a
/// count that only distinguishes zero, one, and many. Length is capped
/// at four times the vertex count, enough for the shortest pair of
/// distinct loops: two simple loops, or one simple loop with a simple
/// cycle spliced into it. Paths that can no longer return (no range
/// vertex has a way back to `v` avoiding it) are pruned.
pub fn first_return_count_oracle(g: &Ultragraph, v: VertexId) -> usize {
    // Vertices with an edge chain back to v whose sources all avoid v,
    // plus v itself.
    let mut back = VertexSet::singleton(v.0);
    loop {
        let mut grown = back;
        for e in g.edges() {
            if e.source != v && e.range.intersects(back) {
                grown.insert(e.source.0);
            }
        }
        if grown == back {
            break;
        }
        back = grown;
    }

    let copies = |e: usize| match g.edges()[e].multiplicity {
        Multiplicity::Finite(1) => 1u32,
        _ => 2,
    };
    let useful = |e: usize| g.edges()[e].range.intersects(back);

    struct Search<'g> {
        g: &'g Ultragraph,
        v: VertexId,
        back: VertexSet,
        visited: usize,
        found: usize,
    }
    impl Search<'_> {
        fn go(&mut self, last: usize, len: usize, cap: usize) {
            self.visited += 1;
            assert!(
                self.visited <= RETURN_ORACLE_BUDGET,
                "first-return oracle budget exceeded"
            );
            let range = self.g.edges()[last].range;
            if range.contains(self.v.0) {
                self.found += 1;
                if self.found >= 2 {
                    return;
                }
            }
            if len == cap {
                return;
            }
            for (fi, f) in self.g.edges().iter().enumerate() {
                if f.source != self.v
                    && range.contains(f.source.0)
                    && self.back.contains(f.source.0)
                    && f.range.intersects(self.back)
                {
                    let copies = match f.multiplicity {
                        Multiplicity::Finite(1) => 1,
                        _ => 2,
                    };
                    for _ in 0..copies {
                        self.go(fi, len + 1, cap);
                        if self.found >= 2 {
                            return;
                        }
                    }
                }
            }
        }
    }

    let cap = 4 * g.vertex_count().max(1);
    let mut search = Search { g, v, back, visited: 0, found: 0 };
    for (ei, e) in g.edges().iter().enumerate() {
        if e.source == v && useful(ei) {
            for _ in 0..copies(ei) {
                search.go(ei, 1, cap);
                if search.found >= 2 {
                    return 2;
                }
            }
        }
    }
    search.found
}

/// Whether every vertex outside the hereditary set has a first-return
/// count other than one.
pub fn condition_k_oracle(g: &Ultragraph, h: &SatHereditary) -> bool {
    g.vertices()
        .filter(|&v| !h.contains_vertex(v))
        .all(|v| first_return_count_oracle(g, v) != 1)
}

/// Downward directedness straight from the definition: every two
/// vertex sets not swallowed by the hereditary part must both reach
/// some third such set. All subsets are enumerated.
pub fn downward_directed_oracle(g: &Ultragraph, h: &SatHereditary) -> bool {
    let h1 = h.vertex_set();
    let sets: Vec<VertexSet> = (0..1u64 << g.vertex_count())
        .map(VertexSet::from_bits)
        .filter(|s| !s.is_subset(h1))
        .collect();
    sets.iter().all(|&a| {
        sets.iter().all(|&b| {
            sets.iter().any(|&c| reaches(g, a, c) && reaches(g, b, c))
        })
    })
}

/// Checks from the definition that the family of all subsets of `h1`
/// is a hereditary saturated collection: ranges of edges rooted in a
/// member are members, unions of members are members, and a regular
/// vertex whose every range is a member is itself a member.
pub fn sat_hereditary_collection_oracle(g: &Ultragraph, h1: VertexSet) -> bool {
    let members: Vec<VertexSet> = (0..1u64 << g.vertex_count())
        .map(VertexSet::from_bits)
        .filter(|a| a.is_subset(h1))
        .collect();
    let is_member = |s: VertexSet| s.is_subset(h1);
    let hereditary = members
        .iter()
        .all(|&a| g.edges().iter().all(|e| !a.contains(e.source.0) || is_member(e.range)));
    let unions = members.iter().all(|&a| members.iter().all(|&b| is_member(a | b)));
    let saturated = g.vertices().all(|v| {
        g.vertex_kind(v) != VertexKind::Regular
            || !g.out_classes(v).all(|(_, e)| is_member(e.range))
            || is_member(VertexSet::singleton(v.0))
    });
    hereditary && unions && saturated
}

/// Primitivity from the characterization, with the expensive parts
/// delegated to enumerating oracles: a proper pair missing at most one
/// breaking vertex, downward directed with a loop-exit-satisfying
/// full-choice quotient when missing none, every survivor reaching the
/// missing vertex when missing one.
pub fn primitivity_oracle(g: &Ultragraph, pair: &AdmissiblePair) -> bool {
    if pair.h1() == g.full_set() {
        return false;
    }
    let full = breaking_vertices(g, pair.hereditary());
    let missing = full - pair.breakers();
    match missing.len() {
        0 => {
            let all_chosen =
                AdmissiblePair::new(g, pair.hereditary().clone(), full).unwrap();
            downward_directed_oracle(g, pair.hereditary())
                && condition_l_oracle(&QuotientUltragraph::new(g, all_chosen))
        }
        1 => {
            let w = missing.iter().next().unwrap();
            g.vertices().all(|x| {
                pair.h1().contains(x.0)
                    || x.0 == w
                    || reaches(g, VertexSet::singleton(x.0), VertexSet::singleton(w))
            })
        }
        _ => false,
    }
}
