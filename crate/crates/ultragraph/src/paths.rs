//! Decision procedures for loops and reachability.
//!
//! The two central conditions both ask for escape routes from loops:
//! one demands that every loop of a quotient admit an exit, the other
//! that no vertex carry exactly one way of returning to itself. Both
//! are decided exactly, with witnesses, by reductions to finite graph
//! searches: exitless loops are cycles of a deterministic successor
//! function, and return-loop counting reduces to enumerating simple
//! loops plus one cycle check per vertex on the unique candidate.

use crate::graph::{Multiplicity, Ultragraph, VertexId};
use crate::heredity::SatHereditary;
use crate::quotient::{ExtVertex, QuotientUltragraph};
use crate::set::VertexSet;

/// Outcome of a yes/no structural check, with a witness on failure and
/// a human-readable explanation either way.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ConditionReport<W> {
    pub holds: bool,
    pub witness: Option<W>,
    pub detail: String,
}

impl<W> ConditionReport<W> {
    pub fn holds(detail: impl Into<String>) -> Self {
        ConditionReport { holds: true, witness: None, detail: detail.into() }
    }

    pub fn fails(witness: W, detail: impl Into<String>) -> Self {
        ConditionReport { holds: false, witness: Some(witness), detail: detail.into() }
    }
}

/// A loop in a graph: edge class indices forming a path whose first
/// source lies in the last range.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GraphLoop {
    pub base: VertexId,
    pub edges: Vec<usize>,
}

impl GraphLoop {
    pub fn render(&self, g: &Ultragraph) -> String {
        let ids: Vec<&str> = self.edges.iter().map(|&i| g.edges()[i].id.as_str()).collect();
        format!("{} @ {}", ids.join(","), g.vertex_name(self.base))
    }

    pub fn edge_ids<'g>(&self, g: &'g Ultragraph) -> Vec<&'g str> {
        self.edges.iter().map(|&i| g.edges()[i].id.as_str()).collect()
    }
}

/// A loop in a quotient, as indices into the quotient's edge list.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct QuotientLoop {
    pub base: ExtVertex,
    pub edges: Vec<usize>,
}

impl QuotientLoop {
    pub fn render(&self, q: &QuotientUltragraph) -> String {
        let ids: Vec<&str> = self.edges.iter().map(|&i| q.edge_id(&q.edges()[i])).collect();
        format!("{} @ {}", ids.join(","), q.render_vertex(self.base))
    }
}

/// Cycles of a partial successor function on `0..succ.len()`, each
/// rotated to start at its smallest node and listed in order of that
/// node. Every node has at most one successor, so cycles are disjoint.
pub(crate) fn functional_cycles(succ: &[Option<usize>]) -> Vec<Vec<usize>> {
    let n = succ.len();
    // 0 = unvisited, 1 = on the current walk, 2 = settled
    let mut color = vec![0u8; n];
    let mut cycles = Vec::new();
    for start in 0..n {
        if color[start] != 0 {
            continue;
        }
        let mut walk = Vec::new();
        let mut x = start;
        loop {
            match color[x] {
                0 => {
                    color[x] = 1;
                    walk.push(x);
                    match succ[x] {
                        Some(y) => x = y,
                        None => break,
                    }
                }
                1 => {
                    let pos = walk.iter().position(|&w| w == x).unwrap();
                    let mut cyc = walk[pos..].to_vec();
                    let (min_pos, _) =
                        cyc.iter().enumerate().min_by_key(|&(_, &w)| w).unwrap();
                    cyc.rotate_left(min_pos);
                    cycles.push(cyc);
                    break;
                }
                _ => break,
            }
        }
        for &w in &walk {
            color[w] = 2;
        }
    }
    cycles.sort_by_key(|c| c[0]);
    cycles
}

/// Decides whether every loop of the quotient has an exit.
///
/// A loop with no exit pins down each vertex class on it completely:
/// the class must emit exactly one edge class, with a single copy,
/// whose range is exactly the next vertex class — any extra edge, copy,
/// or range member would be an exit. Those forced successor links form
/// a partial function on the quotient's vertex classes, and the loops
/// without exits are precisely its cycles.
pub fn condition_l(q: &QuotientUltragraph) -> ConditionReport<QuotientLoop> {
    let mut succ_edge = vec![None; q.vertices().len()];
    let succ: Vec<Option<usize>> = q
        .vertices()
        .iter()
        .enumerate()
        .map(|(vi, &v)| {
            let out: Vec<usize> = q.out_edges(v).map(|(i, _)| i).collect();
            if out.len() != 1 {
                return None;
            }
            let ei = out[0];
            let e = &q.edges()[ei];
            if q.edge_multiplicity(e) != Multiplicity::ONE {
                return None;
            }
            let members = e.range.members();
            if members.len() != 1 {
                return None;
            }
            let target = q.vertex_position(members[0])?;
            succ_edge[vi] = Some(ei);
            Some(target)
        })
        .collect();
    match functional_cycles(&succ).into_iter().next() {
        None => ConditionReport::holds("every loop has an exit"),
        Some(cyc) => {
            let lp = QuotientLoop {
                base: q.vertices()[cyc[0]],
                edges: cyc.iter().map(|&vi| succ_edge[vi].unwrap()).collect(),
            };
            let detail = format!("loop {} has no exit", lp.render(q));
            ConditionReport::fails(lp, detail)
        }
    }
}

/// How many loops return a vertex to itself for the first time: none,
/// exactly one (carried as a witness), or at least two.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum LoopCount {
    None,
    One(GraphLoop),
    Many,
}

/// Counts the first-return loops based at `v`, capped at two.
///
/// A first-return loop starts at `v`, ends in a range containing `v`,
/// and keeps its intermediate sources away from `v`; parallel copies of
/// an edge class count as distinct loops. Cutting the segment between
/// two equal intermediate sources out of such a loop yields a shorter
/// one, so loops exist exactly when simple ones do (pairwise distinct
/// intermediate sources), and those are enumerated outright. When the
/// enumeration finds exactly one simple loop, all on single-copy
/// classes, a second loop exists precisely when some intermediate
/// source of it lies on a cycle avoiding `v`: splicing that cycle in
/// gives a longer first-return loop, and conversely the last cut in
/// reducing any second loop happens at an intermediate source of the
/// survivor and removes such a cycle.
pub fn first_return_loops_at(g: &Ultragraph, v: VertexId) -> LoopCount {
    fn dfs(
        g: &Ultragraph,
        v: VertexId,
        path: &mut Vec<usize>,
        used: VertexSet,
        weighted: &mut u32,
        single: &mut Option<GraphLoop>,
    ) {
        let tail = g.edges()[*path.last().unwrap()].range;
        if tail.contains(v.0) {
            let wide = path.iter().any(|&i| g.edges()[i].multiplicity != Multiplicity::ONE);
            *weighted += if wide { 2 } else { 1 };
            if single.is_none() {
                *single = Some(GraphLoop { base: v, edges: path.clone() });
            }
            if *weighted >= 2 {
                return;
            }
        }
        for (i, e) in g.edges().iter().enumerate() {
            if tail.contains(e.source.0) && e.source != v && !used.contains(e.source.0) {
                let mut used = used;
                used.insert(e.source.0);
                path.push(i);
                dfs(g, v, path, used, weighted, single);
                path.pop();
                if *weighted >= 2 {
                    return;
                }
            }
        }
    }

    let mut weighted = 0u32;
    let mut single = None;
    for (i, e) in g.edges().iter().enumerate() {
        if e.source == v {
            let mut path = vec![i];
            dfs(g, v, &mut path, VertexSet::EMPTY, &mut weighted, &mut single);
            if weighted >= 2 {
                return LoopCount::Many;
            }
        }
    }
    match weighted {
        0 => LoopCount::None,
        _ => {
            let gamma = single.unwrap();
            for &i in &gamma.edges[1..] {
                if on_cycle_avoiding(g, g.edges()[i].source, v) {
                    return LoopCount::Many;
                }
            }
            LoopCount::One(gamma)
        }
    }
}

/// Whether `u` lies on a cycle of the vertex digraph that never touches
/// `avoid` (step from `y` to any member of any range emitted at `y`).
fn on_cycle_avoiding(g: &Ultragraph, u: VertexId, avoid: VertexId) -> bool {
    let avoid_set = VertexSet::singleton(avoid.0);
    let step = |from: VertexSet| {
        let mut out = VertexSet::EMPTY;
        for e in g.edges() {
            if from.contains(e.source.0) && e.source != avoid {
                out = out | (e.range - avoid_set);
            }
        }
        out
    };
    let mut reach = step(VertexSet::singleton(u.0));
    loop {
        if reach.contains(u.0) {
            return true;
        }
        let next = reach | step(reach);
        if next == reach {
            return false;
        }
        reach = next;
    }
}

/// Decides whether every vertex outside the hereditary set carries
/// either no first-return loop or at least two.
///
/// Loops based outside the set never enter it: once a source fell into
/// the hereditary part, every later range would stay inside and the
/// loop could not return to its base.
pub fn condition_k(g: &Ultragraph, h: &SatHereditary) -> ConditionReport<GraphLoop> {
    for v in g.vertices() {
        if h.contains_vertex(v) {
            continue;
        }
        if let LoopCount::One(lp) = first_return_loops_at(g, v) {
            let detail = format!(
                "vertex {} is the base of exactly one first-return loop: {}",
                g.vertex_name(v),
                lp.render(g)
            );
            return ConditionReport::fails(lp, detail);
        }
    }
    ConditionReport::holds(
        "every vertex outside the hereditary set has zero or at least two first-return loops",
    )
}

/// All vertices reachable from `from`: the set itself plus everything
/// in ranges of edge chains starting there.
pub fn reachable_vertices(g: &Ultragraph, from: VertexSet) -> VertexSet {
    let mut reach = from;
    loop {
        let mut next = reach;
        for e in g.edges() {
            if reach.contains(e.source.0) {
                next = next | e.range;
            }
        }
        if next == reach {
            return reach;
        }
        reach = next;
    }
}

/// Whether `from` reaches `to`: containment outright, or an edge chain
/// starting in `from` whose final range covers all of `to`.
pub fn reaches(g: &Ultragraph, from: VertexSet, to: VertexSet) -> bool {
    if to.is_subset(from) {
        return true;
    }
    let reach = reachable_vertices(g, from);
    g.edges().iter().any(|e| reach.contains(e.source.0) && to.is_subset(e.range))
}

/// Decides whether the reach order on vertex sets not swallowed by the
/// hereditary part is downward directed, reporting the first vertex
/// pair with no common lower bound.
///
/// Checking singletons suffices: a set reaches whatever its members
/// reach, and everything reachable below a singleton `{v}` is either
/// `{v}` itself or contains the full range of an edge chained from
/// `v` — so those ranges are the only candidates worth intersecting.
pub fn downward_directed(
    g: &Ultragraph,
    h: &SatHereditary,
) -> ConditionReport<(VertexId, VertexId)> {
    let h1 = h.vertex_set();
    let outside: Vec<VertexId> = g.vertices().filter(|v| !h1.contains(v.0)).collect();
    let candidates: Vec<Vec<VertexSet>> = outside
        .iter()
        .map(|&v| {
            let mut sets = vec![VertexSet::singleton(v.0)];
            let reach = reachable_vertices(g, VertexSet::singleton(v.0));
            sets.extend(
                g.edges().iter().filter(|e| reach.contains(e.source.0)).map(|e| e.range),
            );
            sets
        })
        .collect();
    for (i, &v) in outside.iter().enumerate() {
        for (j, &w) in outside.iter().enumerate().skip(i + 1) {
            let ok = candidates[i]
                .iter()
                .any(|&x| candidates[j].iter().any(|&y| !(x & y).is_subset(h1)));
            if !ok {
                let detail = format!(
                    "vertices {} and {} reach no common set outside the hereditary part",
                    g.vertex_name(v),
                    g.vertex_name(w)
                );
                return ConditionReport::fails((v, w), detail);
            }
        }
    }
    ConditionReport::holds("any two vertices outside the hereditary set share a lower bound")
}

/// The loops that survive deleting the hereditary part and admit no
/// exit among the surviving edges, one representative per cycle, each
/// starting at its smallest vertex and ordered by that vertex.
///
/// After deletion only edges with some range left count, and ranges
/// lose their deleted members. An exitless loop again forces a
/// deterministic successor: each vertex on it emits exactly one
/// surviving class, with one copy, whose surviving range is a single
/// vertex. Cycles of that partial function are exactly the loops
/// sought.
pub fn exitless_loops_in_complement(g: &Ultragraph, h: &SatHereditary) -> Vec<GraphLoop> {
    let h1 = h.vertex_set();
    let n = g.vertex_count();
    let mut succ = vec![None; n];
    let mut succ_edge = vec![None; n];
    for v in 0..n {
        if h1.contains(v) {
            continue;
        }
        let leaving: Vec<usize> = g
            .edges()
            .iter()
            .enumerate()
            .filter(|(_, e)| e.source.0 == v && !e.range.is_subset(h1))
            .map(|(i, _)| i)
            .collect();
        if let [ei] = leaving[..] {
            let e = &g.edges()[ei];
            let out = e.range - h1;
            if e.multiplicity == Multiplicity::ONE && out.len() == 1 {
                succ[v] = Some(out.iter().next().unwrap());
                succ_edge[v] = Some(ei);
            }
        }
    }
    functional_cycles(&succ)
        .into_iter()
        .map(|cyc| GraphLoop {
            base: VertexId(cyc[0]),
            edges: cyc.iter().map(|&v| succ_edge[v].unwrap()).collect(),
        })
        .collect()
}
