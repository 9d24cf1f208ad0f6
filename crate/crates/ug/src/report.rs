//! Rendering of command results as human text and as stable JSON.
//!
//! Every builder returns both forms at once so the two can never
//! drift. JSON stability contract: object keys serialize sorted
//! (serde_json's default map is ordered), arrays follow a canonical
//! order (declaration order for vertices and edges, bitmask order for
//! pairs, node order for dual graphs), and nothing time- or
//! path-dependent is ever embedded.

use serde_json::{json, Value};

use ultragraph::{
    breaking_vertices, breaking_vertices_by_range_sets, condition_k, condition_l,
    downward_directed, exitless_loops_in_complement, pair_leq, AdmissiblePair, Cardinal,
    ConditionReport, DualGraph, ExtSet, ExtendedUltragraph, Fragment, GraphLoop, IdealPoset,
    Multiplicity, PrimitivityRule, PrimitivityVerdict, QuotientLoop, QuotientUltragraph,
    SatHereditary, Ultragraph, VertexId, VertexKind, VertexSet,
};

/// One command result, rendered both ways.
pub struct Rendered {
    pub text: String,
    pub json: Value,
}

/// Serializes a JSON document the way every command emits it: pretty,
/// two-space indent, sorted keys, trailing newline.
pub fn to_json_string(value: &Value) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("JSON serialization cannot fail");
    out.push('\n');
    out
}

fn count(n: usize, one: &str, many: &str) -> String {
    if n == 1 {
        format!("{n} {one}")
    } else {
        format!("{n} {many}")
    }
}

fn set_names(g: &Ultragraph, set: VertexSet) -> Vec<String> {
    set.iter().map(|i| g.vertex_name(VertexId(i)).to_string()).collect()
}

fn multiplicity_json(m: Multiplicity) -> Value {
    match m {
        Multiplicity::Finite(n) => json!(n),
        Multiplicity::Infinite => json!("inf"),
    }
}

fn cardinal_json(c: Cardinal) -> Value {
    match c {
        Cardinal::Finite(n) => json!(n),
        Cardinal::Infinite => json!("inf"),
    }
}

fn kind_str(k: VertexKind) -> &'static str {
    match k {
        VertexKind::Sink => "sink",
        VertexKind::Regular => "regular",
        VertexKind::InfiniteEmitter => "infinite-emitter",
    }
}

fn multiplicity_suffix(m: Multiplicity) -> String {
    match m {
        Multiplicity::Finite(1) => String::new(),
        Multiplicity::Finite(n) => format!(" * {n}"),
        Multiplicity::Infinite => " * inf".to_string(),
    }
}

/// Members of an extended vertex set, base vertices first, as names.
fn ext_set_names(ext: &ExtendedUltragraph, set: ExtSet) -> Vec<String> {
    let mut names: Vec<String> =
        set.base.iter().map(|i| ext.graph().vertex_name(VertexId(i)).to_string()).collect();
    for k in 0..ext.split_vertices().len() {
        if set.splits & (1 << k) != 0 {
            names.push(ext.split_name(k));
        }
    }
    names
}

fn pair_string(g: &Ultragraph, p: &AdmissiblePair) -> String {
    format!("({},{})", g.set_to_string(p.h1()), g.set_to_string(p.breakers()))
}

fn pair_json(g: &Ultragraph, p: &AdmissiblePair) -> Value {
    json!({
        "B": set_names(g, p.breakers()),
        "H": set_names(g, p.h1()),
    })
}

// ---------------------------------------------------------------------------
// Per-command builders
// ---------------------------------------------------------------------------

pub fn validate(g: &Ultragraph) -> Rendered {
    Rendered {
        text: format!(
            "ok: {}, {}\n",
            count(g.vertex_count(), "vertex", "vertices"),
            count(g.edges().len(), "edge class", "edge classes")
        ),
        json: json!({
            "edge_classes": g.edges().len(),
            "ok": true,
            "vertices": g.vertex_count(),
        }),
    }
}

fn edge_lines(g: &Ultragraph) -> String {
    let mut text = String::new();
    for e in g.edges() {
        text.push_str(&format!(
            "  {} : {} -> {}{}\n",
            e.id,
            g.vertex_name(e.source),
            g.set_to_string(e.range),
            multiplicity_suffix(e.multiplicity)
        ));
    }
    text
}

pub fn info(g: &Ultragraph) -> Rendered {
    let mut text = String::from("vertices:\n");
    for v in g.vertices() {
        text.push_str(&format!(
            "  {}  {}  out={}\n",
            g.vertex_name(v),
            kind_str(g.vertex_kind(v)),
            g.out_multiplicity(v)
        ));
    }
    text.push_str("edges:\n");
    text.push_str(&edge_lines(g));

    let vertices: Vec<Value> = g
        .vertices()
        .map(|v| {
            json!({
                "kind": kind_str(g.vertex_kind(v)),
                "name": g.vertex_name(v),
                "out_multiplicity": cardinal_json(g.out_multiplicity(v)),
            })
        })
        .collect();
    let edges: Vec<Value> = g
        .edges()
        .iter()
        .map(|e| {
            json!({
                "id": e.id,
                "multiplicity": multiplicity_json(e.multiplicity),
                "range": set_names(g, e.range),
                "source": g.vertex_name(e.source),
            })
        })
        .collect();
    Rendered { text, json: json!({ "edges": edges, "vertices": vertices }) }
}

pub fn closure(g: &Ultragraph, seeds: VertexSet, closed: &SatHereditary) -> Rendered {
    Rendered {
        text: format!("closure = {}\n", g.set_to_string(closed.vertex_set())),
        json: json!({
            "closure": set_names(g, closed.vertex_set()),
            "hereditary_input": ultragraph::is_hereditary(g, seeds),
            "saturated_input": ultragraph::is_saturated(g, seeds),
            "seeds": set_names(g, seeds),
        }),
    }
}

pub fn breaking(g: &Ultragraph, h: &SatHereditary) -> Rendered {
    let by_edges = breaking_vertices(g, h);
    let by_ranges = breaking_vertices_by_range_sets(g, h);
    let divergent = by_edges != by_ranges;
    let mut text = format!("B_H = {}\n", g.set_to_string(by_edges));
    if divergent {
        text.push_str(&format!(
            "note: counting distinct range sets instead of edges would give {}\n",
            g.set_to_string(by_ranges)
        ));
    }
    Rendered {
        text,
        json: json!({
            "breaking": set_names(g, by_edges),
            "divergent": divergent,
            "range_set_reading": set_names(g, by_ranges),
        }),
    }
}

pub fn pairs(g: &Ultragraph, list: &[AdmissiblePair]) -> Rendered {
    let mut text = String::new();
    for p in list {
        text.push_str(&pair_string(g, p));
        text.push('\n');
    }
    text.push_str(&format!("{}\n", count(list.len(), "admissible pair", "admissible pairs")));
    let pairs: Vec<Value> = list.iter().map(|p| pair_json(g, p)).collect();
    Rendered { text, json: json!({ "count": list.len(), "pairs": pairs }) }
}

fn extension_json(ext: &ExtendedUltragraph) -> Value {
    let g = ext.graph();
    let splits: Vec<String> = (0..ext.split_vertices().len()).map(|k| ext.split_name(k)).collect();
    let edges: Vec<Value> = g
        .edges()
        .iter()
        .enumerate()
        .map(|(i, e)| {
            json!({
                "id": e.id,
                "multiplicity": multiplicity_json(e.multiplicity),
                "range": ext_set_names(ext, ext.range(i)),
                "source": ext.ext_vertex_name(ext.source(i)),
            })
        })
        .collect();
    json!({ "edges": edges, "splits": splits })
}

fn quotient_json(q: &QuotientUltragraph) -> Value {
    let ext = q.extended();
    let vertices: Vec<String> = q.vertices().iter().map(|&v| ext.ext_vertex_name(v)).collect();
    let edges: Vec<Value> = q
        .edges()
        .iter()
        .map(|e| {
            let members: Vec<String> =
                e.range.members().iter().map(|&v| ext.ext_vertex_name(v)).collect();
            json!({
                "id": q.edge_id(e),
                "multiplicity": multiplicity_json(q.edge_multiplicity(e)),
                "range": members,
                "source": ext.ext_vertex_name(e.source),
            })
        })
        .collect();
    let singular: Vec<String> =
        q.singular_vertices().iter().map(|&v| ext.ext_vertex_name(v)).collect();
    json!({ "edges": edges, "singular": singular, "vertices": vertices })
}

fn joined_or_none(items: &[String]) -> String {
    if items.is_empty() {
        "(none)".to_string()
    } else {
        items.join(", ")
    }
}

pub fn quotient(q: &QuotientUltragraph) -> Rendered {
    let g = q.base_graph();
    let ext = q.extended();
    let pair = q.pair();

    let mut text = format!("pair {}\n", pair_string(g, pair));
    text.push_str(&format!(
        "B_H = {}\n",
        g.set_to_string(breaking_vertices(g, pair.hereditary()))
    ));
    let splits: Vec<String> = (0..ext.split_vertices().len()).map(|k| ext.split_name(k)).collect();
    text.push_str(&format!("splits: {}\n", joined_or_none(&splits)));
    text.push_str("extended edges:\n");
    for (i, e) in g.edges().iter().enumerate() {
        text.push_str(&format!(
            "  {} : {} -> {{{}}}{}\n",
            e.id,
            ext.ext_vertex_name(ext.source(i)),
            ext_set_names(ext, ext.range(i)).join(","),
            multiplicity_suffix(e.multiplicity)
        ));
    }
    let vertex_names: Vec<String> =
        q.vertices().iter().map(|&v| q.render_vertex(v)).collect();
    text.push_str(&format!("quotient vertices: {}\n", joined_or_none(&vertex_names)));
    text.push_str("quotient edges:\n");
    for e in q.edges() {
        text.push_str(&format!(
            "  {} : {} -> {}{}\n",
            q.edge_id(e),
            q.render_vertex(e.source),
            q.render_class(&e.range),
            multiplicity_suffix(q.edge_multiplicity(e))
        ));
    }
    let singular: Vec<String> =
        q.singular_vertices().iter().map(|&v| q.render_vertex(v)).collect();
    text.push_str(&format!("singular: {}\n", joined_or_none(&singular)));

    let json = json!({
        "breaking": set_names(g, breaking_vertices(g, pair.hereditary())),
        "extension": extension_json(ext),
        "pair": pair_json(g, pair),
        "quotient": quotient_json(q),
    });
    Rendered { text, json }
}

fn quotient_loop_json(q: &QuotientUltragraph, l: &QuotientLoop) -> Value {
    let ids: Vec<&str> = l.edges.iter().map(|&i| q.edge_id(&q.edges()[i])).collect();
    json!({
        "base": q.extended().ext_vertex_name(l.base),
        "edges": ids,
    })
}

fn graph_loop_json(g: &Ultragraph, l: &GraphLoop) -> Value {
    json!({
        "base": g.vertex_name(l.base),
        "edges": l.edge_ids(g),
    })
}

fn check_json(condition: &str, holds: bool, detail: &str, witness: Value) -> Value {
    json!({
        "condition": condition,
        "detail": detail,
        "holds": holds,
        "witness": witness,
    })
}

pub fn check_l(q: &QuotientUltragraph, rep: &ConditionReport<QuotientLoop>) -> Rendered {
    let (text, witness) = match &rep.witness {
        None => ("Condition (L): holds\n".to_string(), Value::Null),
        Some(l) => {
            let ids: Vec<&str> = l.edges.iter().map(|&i| q.edge_id(&q.edges()[i])).collect();
            (
                format!(
                    "Condition (L): FAILS at {} (loop {})\n",
                    q.render_vertex(l.base),
                    ids.join(" ")
                ),
                quotient_loop_json(q, l),
            )
        }
    };
    Rendered { text, json: check_json("L", rep.holds, &rep.detail, witness) }
}

pub fn check_k(g: &Ultragraph, rep: &ConditionReport<GraphLoop>) -> Rendered {
    let (text, witness) = match &rep.witness {
        None => ("Condition (K): holds\n".to_string(), Value::Null),
        Some(l) => (
            format!(
                "Condition (K): FAILS at {} (loop {})\n",
                g.vertex_name(l.base),
                l.edge_ids(g).join(" ")
            ),
            graph_loop_json(g, l),
        ),
    };
    Rendered { text, json: check_json("K", rep.holds, &rep.detail, witness) }
}

pub fn dual(q: &QuotientUltragraph, fragment: &Fragment, dg: &DualGraph) -> Rendered {
    let node_names: Vec<String> = (0..dg.nodes().len()).map(|i| dg.node_name(i).to_string()).collect();
    let arrows: Vec<Value> = dg
        .edges()
        .iter()
        .map(|&(a, b)| json!([dg.node_name(a), dg.node_name(b)]))
        .collect();
    let fed: Vec<String> = dg.split().fed.iter().map(|p| p.render()).collect();
    let residual: Vec<String> = dg.split().residual.iter().map(|p| p.render()).collect();
    let l = dg.condition_l();
    let witness = match &l.witness {
        None => Value::Null,
        Some(cycle) => {
            let names: Vec<&str> = cycle.iter().map(|&i| dg.node_name(i)).collect();
            json!(names)
        }
    };

    let frag_vertices: Vec<String> =
        fragment.vertices().iter().map(|&v| q.render_vertex(v)).collect();
    let frag_picks: Vec<String> =
        fragment.picks().iter().map(|&p| ultragraph::render_pick(q, p)).collect();

    let mut text = format!("nodes: {}\n", joined_or_none(&node_names));
    text.push_str("arrows:\n");
    for &(a, b) in dg.edges() {
        text.push_str(&format!("  {} -> {}\n", dg.node_name(a), dg.node_name(b)));
    }
    text.push_str(&format!("fed patterns: {}\n", joined_or_none(&fed)));
    text.push_str(&format!("residual patterns: {}\n", joined_or_none(&residual)));
    match &l.witness {
        None => text.push_str("graph condition (L): holds\n"),
        Some(cycle) => {
            let names: Vec<&str> = cycle.iter().map(|&i| dg.node_name(i)).collect();
            text.push_str(&format!(
                "graph condition (L): FAILS (cycle {})\n",
                names.join(" ")
            ));
        }
    }

    let json = json!({
        "arrows": arrows,
        "condition_l": { "detail": l.detail, "holds": l.holds, "witness": witness },
        "fed": fed,
        "fragment": { "picks": frag_picks, "vertices": frag_vertices },
        "nodes": node_names,
        "residual": residual,
    });
    Rendered { text, json }
}

fn rule_str(rule: &PrimitivityRule) -> &'static str {
    match rule {
        PrimitivityRule::Improper => "improper",
        PrimitivityRule::FullBreakerSet => "full-breaker-set",
        PrimitivityRule::OneMissingBreaker(_) => "one-missing-breaker",
        PrimitivityRule::ManyMissingBreakers(_) => "many-missing-breakers",
    }
}

fn rule_witness(g: &Ultragraph, rule: &PrimitivityRule) -> Value {
    match rule {
        PrimitivityRule::Improper | PrimitivityRule::FullBreakerSet => Value::Null,
        PrimitivityRule::OneMissingBreaker(v) => json!(g.vertex_name(*v)),
        PrimitivityRule::ManyMissingBreakers(set) => json!(set_names(g, *set)),
    }
}

fn rule_label(g: &Ultragraph, rule: &PrimitivityRule) -> String {
    match rule {
        PrimitivityRule::Improper => "improper".to_string(),
        PrimitivityRule::FullBreakerSet => "full breaker set".to_string(),
        PrimitivityRule::OneMissingBreaker(v) => {
            format!("one missing breaker {}", g.vertex_name(*v))
        }
        PrimitivityRule::ManyMissingBreakers(set) => {
            format!("missing breakers {}", g.set_to_string(*set))
        }
    }
}

fn verdict_json(g: &Ultragraph, pair: &AdmissiblePair, v: &PrimitivityVerdict) -> Value {
    json!({
        "B": set_names(g, pair.breakers()),
        "H": set_names(g, pair.h1()),
        "detail": v.detail,
        "primitive": v.primitive,
        "rule": rule_str(&v.rule),
        "witness": rule_witness(g, &v.rule),
    })
}

/// Indices of poset nodes at or above `context`, in poset order.
fn nodes_above(poset: &IdealPoset, context: &AdmissiblePair) -> Vec<usize> {
    (0..poset.len()).filter(|&k| pair_leq(context, &poset.nodes()[k])).collect()
}

/// Hasse covers of the sub-poset spanned by `selected`, as positions
/// into `selected`, sorted lexicographically.
fn sub_hasse(poset: &IdealPoset, selected: &[usize]) -> Vec<(usize, usize)> {
    let lt = |a: usize, b: usize| a != b && poset.leq(selected[a], selected[b]);
    let mut covers = Vec::new();
    for a in 0..selected.len() {
        for b in 0..selected.len() {
            if lt(a, b) && !(0..selected.len()).any(|m| lt(a, m) && lt(m, b)) {
                covers.push((a, b));
            }
        }
    }
    covers.sort_unstable();
    covers
}

fn ideals_sections(
    g: &Ultragraph,
    poset: &IdealPoset,
    context: &AdmissiblePair,
) -> (Vec<usize>, Vec<PrimitivityVerdict>, Vec<(usize, usize)>) {
    let selected = nodes_above(poset, context);
    let verdicts: Vec<PrimitivityVerdict> =
        poset.primitivity_above(g, context).into_iter().map(|(_, v)| v).collect();
    debug_assert_eq!(selected.len(), verdicts.len());
    let hasse = sub_hasse(poset, &selected);
    (selected, verdicts, hasse)
}

fn ideals_json(
    g: &Ultragraph,
    poset: &IdealPoset,
    context: &AdmissiblePair,
) -> Value {
    let (selected, verdicts, hasse) = ideals_sections(g, poset, context);
    let pairs: Vec<Value> = selected
        .iter()
        .zip(&verdicts)
        .map(|(&k, v)| verdict_json(g, &poset.nodes()[k], v))
        .collect();
    let hasse: Vec<Value> = hasse.iter().map(|&(a, b)| json!([a, b])).collect();
    json!({ "context": pair_json(g, context), "hasse": hasse, "pairs": pairs })
}

pub fn ideals(g: &Ultragraph, poset: &IdealPoset, context: &AdmissiblePair) -> Rendered {
    let (selected, verdicts, hasse) = ideals_sections(g, poset, context);
    let mut text = format!("context {}\n", pair_string(g, context));
    for (pos, (&k, v)) in selected.iter().zip(&verdicts).enumerate() {
        text.push_str(&format!(
            "{}: {}  {}  [{}]\n",
            pos,
            pair_string(g, &poset.nodes()[k]),
            if v.primitive { "primitive" } else { "not primitive" },
            rule_label(g, &v.rule)
        ));
    }
    let covers: Vec<String> = hasse.iter().map(|&(a, b)| format!("{a}<{b}")).collect();
    text.push_str(&format!("covers: {}\n", joined_or_none(&covers)));
    Rendered { text, json: ideals_json(g, poset, context) }
}

pub fn primitive(g: &Ultragraph, poset: &IdealPoset, context: &AdmissiblePair) -> Rendered {
    let (selected, verdicts, _) = ideals_sections(g, poset, context);
    let mut text = format!("context {}\n", pair_string(g, context));
    let mut pairs = Vec::new();
    let mut found = 0;
    for (&k, v) in selected.iter().zip(&verdicts) {
        if !v.primitive {
            continue;
        }
        found += 1;
        let pair = &poset.nodes()[k];
        text.push_str(&format!("{}  [{}]\n", pair_string(g, pair), rule_label(g, &v.rule)));
        pairs.push(verdict_json(g, pair, v));
    }
    text.push_str(&format!("{}\n", count(found, "primitive ideal", "primitive ideals")));
    Rendered {
        text,
        json: json!({ "context": pair_json(g, context), "pairs": pairs }),
    }
}

/// Classification of a single pair, for `primitive --K ... --S ...`.
pub fn primitive_single(
    g: &Ultragraph,
    pair: &AdmissiblePair,
    verdict: &PrimitivityVerdict,
) -> Rendered {
    let text = format!(
        "{}  {}  [{}]\n",
        pair_string(g, pair),
        if verdict.primitive { "primitive" } else { "not primitive" },
        rule_label(g, &verdict.rule)
    );
    Rendered {
        text,
        json: json!({
            "pair": pair_json(g, pair),
            "pairs": [verdict_json(g, pair, verdict)],
        }),
    }
}

pub fn report(g: &Ultragraph, pair: &AdmissiblePair, poset: &IdealPoset) -> Rendered {
    let h = pair.hereditary();
    let q = QuotientUltragraph::new(g, pair.clone());
    let ext = q.extended();

    let by_edges = breaking_vertices(g, h);
    let by_ranges = breaking_vertices_by_range_sets(g, h);
    let l = condition_l(&q);
    let k = condition_k(g, h);
    let dd = downward_directed(g, h);
    let exitless = exitless_loops_in_complement(g, h);

    let splits: Vec<String> = (0..ext.split_vertices().len()).map(|k| ext.split_name(k)).collect();
    let quotient_edge_ids: Vec<String> =
        q.edges().iter().map(|e| q.edge_id(e).to_string()).collect();
    let vertex_names: Vec<String> =
        q.vertices().iter().map(|&v| q.render_vertex(v)).collect();

    let (selected, verdicts, _) = ideals_sections(g, poset, pair);
    let primitive_count = verdicts.iter().filter(|v| v.primitive).count();

    let mut text = format!(
        "graph: {}, {}\n",
        count(g.vertex_count(), "vertex", "vertices"),
        count(g.edges().len(), "edge class", "edge classes")
    );
    text.push_str(&format!("pair {}\n", pair_string(g, pair)));
    text.push_str(&format!("B_H = {}\n", g.set_to_string(by_edges)));
    if by_edges != by_ranges {
        text.push_str(&format!(
            "note: counting distinct range sets instead of edges would give {}\n",
            g.set_to_string(by_ranges)
        ));
    }
    text.push_str(&format!("splits: {}\n", joined_or_none(&splits)));
    text.push_str(&format!("quotient vertices: {}\n", joined_or_none(&vertex_names)));
    text.push_str(&format!("quotient edges: {}\n", joined_or_none(&quotient_edge_ids)));
    text.push_str(&check_l(&q, &l).text);
    text.push_str(&check_k(g, &k).text);
    text.push_str(&format!("downward directed: {}\n", if dd.holds { "yes" } else { "no" }));
    let exitless_rendered: Vec<String> = exitless.iter().map(|l| l.render(g)).collect();
    text.push_str(&format!(
        "loops without exit in complement: {}\n",
        joined_or_none(&exitless_rendered)
    ));
    text.push_str(&format!(
        "ideal poset: {}, {} primitive\n",
        count(selected.len(), "node", "nodes"),
        primitive_count
    ));

    let dd_witness = match &dd.witness {
        None => Value::Null,
        Some((a, b)) => json!({ "vertices": [g.vertex_name(*a), g.vertex_name(*b)] }),
    };
    let exitless_json: Vec<Value> =
        exitless.iter().map(|l| graph_loop_json(g, l)).collect();

    let json = json!({
        "breaking": {
            "breaking": set_names(g, by_edges),
            "divergent": by_edges != by_ranges,
            "range_set_reading": set_names(g, by_ranges),
        },
        "condition_k": check_json("K", k.holds, &k.detail, match &k.witness {
            None => Value::Null,
            Some(l) => graph_loop_json(g, l),
        }),
        "condition_l": check_json("L", l.holds, &l.detail, match &l.witness {
            None => Value::Null,
            Some(w) => quotient_loop_json(&q, w),
        }),
        "downward_directed": {
            "detail": dd.detail,
            "holds": dd.holds,
            "witness": dd_witness,
        },
        "exitless_loops": exitless_json,
        "extension": extension_json(ext),
        "graph": info(g).json,
        "ideals": ideals_json(g, poset, pair),
        "pair": {
            "B": set_names(g, pair.breakers()),
            "H": set_names(g, pair.h1()),
            "hereditary": true,
            "saturated": true,
        },
        "quotient": quotient_json(&q),
    });
    Rendered { text, json }
}

pub fn dot(source: String) -> Rendered {
    Rendered { json: json!({ "dot": source }), text: source }
}
