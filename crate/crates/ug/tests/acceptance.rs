//! Acceptance suite: one test per criterion of the delivery contract,
//! each printing its own pass/fail line (visible with `--nocapture`).
//!
//! The exhaustive criteria run over every ultragraph with at most three
//! vertices and three edge families, multiplicities drawn from one and
//! infinity, paired with every admissible pair of each graph.

use std::collections::HashMap;
use std::panic::{catch_unwind, UnwindSafe};
use std::path::{Path, PathBuf};
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde_json::{json, Value};
use ug_testkit::{corpus, fixtures, oracles, random};
use ultragraph::{
    breaking_vertices, condition_k, condition_l, downward_directed, enumerate_admissible_pairs,
    exitless_loops_in_complement, isolating_closure, overlap_range, pair_leq, patterns,
    AdmissiblePair, DualGraph, EdgePick, ExtVertex, ExtendedUltragraph, Fragment, IdealPoset,
    Multiplicity, PrimitivityRule, QuotientUltragraph, SatHereditary, SetOp, Ultragraph,
    VertexSet,
};

fn criterion<F: FnOnce() + UnwindSafe>(number: u32, what: &str, body: F) {
    match catch_unwind(body) {
        Ok(()) => println!("criterion {number}: PASS ({what})"),
        Err(cause) => {
            println!("criterion {number}: FAIL ({what})");
            std::panic::resume_unwind(cause);
        }
    }
}

fn corpus_graphs() -> &'static [Ultragraph] {
    static CORPUS: OnceLock<Vec<Ultragraph>> = OnceLock::new();
    CORPUS.get_or_init(|| corpus::small_graphs(3, 3))
}

fn repo_root() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../..").canonicalize().unwrap()
}

/// All sub-bitmasks of `mask`, the empty one included.
fn submasks(mask: u64) -> Vec<u64> {
    let mut out = vec![0];
    let mut sub = mask;
    while sub != 0 {
        out.push(sub);
        sub = (sub - 1) & mask;
    }
    out.sort_unstable();
    out
}

#[test]
fn criterion_1_worked_example_golden_report() {
    criterion(1, "worked example golden report", || {
        let started = Instant::now();
        let out = std::process::Command::new(env!("CARGO_BIN_EXE_ug"))
            .args(["report", "fixtures/ex1.ug", "--H", "v,a", "--json"])
            .current_dir(repo_root())
            .output()
            .expect("binary runs");
        let elapsed = started.elapsed();
        assert_eq!(out.status.code(), Some(0), "report must succeed");
        assert!(elapsed < Duration::from_secs(1), "report took {elapsed:?}");

        let golden = std::fs::read(repo_root().join("crates/ug/tests/golden/ex1_report.json"))
            .expect("golden file present");
        assert!(out.stdout == golden, "report JSON differs from the golden file");

        let v: Value = serde_json::from_slice(&out.stdout).unwrap();
        assert_eq!(v["breaking"]["breaking"], json!(["w"]));
        let ext_edges = v["extension"]["edges"].as_array().unwrap();
        let ext = |id: &str| -> &Value {
            ext_edges.iter().find(|e| e["id"] == id).unwrap()
        };
        assert_eq!(ext("f")["source"], json!("w'"));
        assert_eq!(ext("h")["source"], json!("w'"));
        assert_eq!(ext("g")["source"], json!("w"));
        assert_eq!(ext("e")["range"], json!(["v", "w", "w'"]));
        assert_eq!(v["quotient"]["vertices"], json!(["u", "w", "w'"]));
        let quotient_ids: Vec<&str> = v["quotient"]["edges"]
            .as_array()
            .unwrap()
            .iter()
            .map(|e| e["id"].as_str().unwrap())
            .collect();
        assert_eq!(quotient_ids, ["e", "g"]);
    });
}

#[test]
fn criterion_2_condition_k_matches_quotients_above() {
    criterion(2, "second loop condition matches all quotients above", || {
        let started = Instant::now();
        for g in corpus_graphs() {
            let pairs = enumerate_admissible_pairs(g).unwrap();
            let quotient_l: Vec<bool> = pairs
                .iter()
                .map(|p| condition_l(&QuotientUltragraph::new(g, p.clone())).holds)
                .collect();
            let mut k_by_h: HashMap<u64, bool> = HashMap::new();
            for (i, pair) in pairs.iter().enumerate() {
                let k_holds = *k_by_h
                    .entry(pair.h1().bits())
                    .or_insert_with(|| condition_k(g, pair.hereditary()).holds);
                let every_quotient_above = pairs
                    .iter()
                    .enumerate()
                    .all(|(j, above)| !pair_leq(pair, above) || quotient_l[j]);
                assert_eq!(
                    k_holds, every_quotient_above,
                    "equivalence fails at pair {i} of {g:?}"
                );
            }
        }
        let elapsed = started.elapsed();
        assert!(elapsed < Duration::from_secs(300), "sweep took {elapsed:?}");
    });
}

#[test]
fn criterion_3_isolating_closure_postconditions() {
    criterion(3, "isolating closure postconditions", || {
        let mut witnesses = 0usize;
        for g in corpus_graphs() {
            let mut k_by_h: HashMap<u64, Option<ultragraph::GraphLoop>> = HashMap::new();
            for pair in enumerate_admissible_pairs(g).unwrap() {
                let witness = k_by_h
                    .entry(pair.h1().bits())
                    .or_insert_with(|| condition_k(g, pair.hereditary()).witness)
                    .clone();
                let Some(gamma) = witness else { continue };
                witnesses += 1;
                let grown = isolating_closure(g, &pair, &gamma)
                    .unwrap_or_else(|e| panic!("isolating closure failed on {g:?}: {e}"));
                let k1 = grown.h1();
                assert!(
                    oracles::sat_hereditary_collection_oracle(g, k1),
                    "grown set must be saturated hereditary"
                );
                assert!(pair.h1().is_subset(k1), "grown set must contain the original");
                let b_k = grown.breakers();
                assert_eq!(
                    b_k,
                    breaking_vertices(g, grown.hereditary()),
                    "the isolating pair must choose every breaking vertex"
                );
                assert!(
                    pair.breakers().is_subset(k1 | b_k),
                    "original breakers must be swallowed or still breaking"
                );
                let loop_vertices = VertexSet::from_indices(
                    gamma.edges.iter().map(|&i| g.edges()[i].source.0),
                );
                assert!(
                    !k1.intersects(loop_vertices),
                    "grown set must avoid the witness loop"
                );
                assert!(
                    !condition_l(&QuotientUltragraph::new(g, grown)).holds,
                    "quotient by the isolating pair must keep the loop exitless"
                );
            }
        }
        assert!(witnesses > 1000, "only {witnesses} failing witnesses found");
    });
}

/// Every fragment of `q` with at most `cap` vertices and picks total.
fn fragments_up_to(q: &QuotientUltragraph, cap: u32) -> Vec<Fragment> {
    let singular = q.singular_vertices();
    let mut pick_universe = Vec::new();
    for (class, e) in q.edges().iter().enumerate() {
        if let Multiplicity::Finite(m) = q.edge_multiplicity(e) {
            pick_universe.extend((0..m).map(|copy| EdgePick { class, copy }));
        }
    }
    let mut out = Vec::new();
    for vbits in 0..1u32 << singular.len() {
        if vbits.count_ones() > cap {
            continue;
        }
        let vertices: Vec<ExtVertex> = singular
            .iter()
            .enumerate()
            .filter(|&(i, _)| vbits >> i & 1 == 1)
            .map(|(_, &v)| v)
            .collect();
        for pbits in 0..1u32 << pick_universe.len() {
            if vbits.count_ones() + pbits.count_ones() > cap {
                continue;
            }
            let picks: Vec<EdgePick> = pick_universe
                .iter()
                .enumerate()
                .filter(|&(i, _)| pbits >> i & 1 == 1)
                .map(|(_, &p)| p)
                .collect();
            out.push(Fragment::new(q, vertices.clone(), picks).unwrap());
        }
    }
    out
}

#[test]
fn criterion_4_dual_graphs_inherit_the_exit_condition() {
    criterion(4, "dual graphs of exit-satisfying quotients", || {
        let mut checked = 0usize;
        for g in corpus_graphs() {
            for pair in enumerate_admissible_pairs(g).unwrap() {
                let q = QuotientUltragraph::new(g, pair);
                if !condition_l(&q).holds {
                    continue;
                }
                for fragment in fragments_up_to(&q, 4) {
                    let all = patterns(&fragment);
                    for (i, &a) in all.iter().enumerate() {
                        let ra = overlap_range(&q, &fragment, a);
                        for &b in &all[i + 1..] {
                            let rb = overlap_range(&q, &fragment, b);
                            assert!(
                                ra.clone().inter(rb).unwrap().is_empty(),
                                "overlap ranges of distinct patterns must be disjoint"
                            );
                        }
                    }
                    let dual = DualGraph::new(&q, &fragment);
                    assert!(
                        dual.condition_l().holds,
                        "dual graph of {fragment:?} loses the exit condition in {g:?}"
                    );
                    checked += 1;
                }
            }
        }
        assert!(checked > 100_000, "only {checked} dual graphs checked");
    });
}

#[test]
fn criterion_5_class_operations_are_well_defined() {
    criterion(5, "class operations ignore hereditary noise", || {
        let mut rng = StdRng::seed_from_u64(0x0005);
        for op in [SetOp::Union, SetOp::Inter, SetOp::Diff] {
            let mut held: Option<(Ultragraph, Vec<AdmissiblePair>)> = None;
            for trial in 0..10_000 {
                if trial % 20 == 0 || held.is_none() {
                    let g = random::random_graph(&mut rng, 6, 6);
                    let pairs = enumerate_admissible_pairs(&g).unwrap();
                    held = Some((g, pairs));
                }
                let (g, pairs) = held.as_ref().unwrap();
                let pair = pairs[rng.gen_range(0..pairs.len())].clone();
                let ext = ExtendedUltragraph::new(g, pair);
                let h1 = ext.pair().h1();
                let a = random::random_subset(&mut rng, g.full_set());
                let b = random::random_subset(&mut rng, g.full_set());
                let v = random::random_subset(&mut rng, h1);
                let w = random::random_subset(&mut rng, h1);
                let noisy = ext
                    .class_of_base(a | v)
                    .apply(op, ext.class_of_base(b | w))
                    .unwrap();
                let plain = match op {
                    SetOp::Union => a | b,
                    SetOp::Inter => a & b,
                    SetOp::Diff => a - b,
                };
                assert_eq!(
                    noisy,
                    ext.class_of_base(plain),
                    "{op:?} fails on A={a:?} B={b:?} V={v:?} W={w:?} in {g:?}"
                );
            }
        }
    });
}

#[test]
fn criterion_6_decision_procedures_match_oracles() {
    criterion(6, "decision procedures match enumeration oracles", || {
        for g in corpus_graphs() {
            let mut seen_h = std::collections::HashSet::new();
            for pair in enumerate_admissible_pairs(g).unwrap() {
                let q = QuotientUltragraph::new(g, pair.clone());
                if q.vertices().len() <= 6 {
                    assert_eq!(
                        condition_l(&q).holds,
                        oracles::condition_l_oracle(&q),
                        "exit condition disagrees on a quotient of {g:?}"
                    );
                }
                if seen_h.insert(pair.h1().bits()) {
                    let h = pair.hereditary();
                    assert_eq!(
                        condition_k(g, h).holds,
                        oracles::condition_k_oracle(g, h),
                        "return-loop condition disagrees on {g:?}"
                    );
                    assert_eq!(
                        downward_directed(g, h).holds,
                        oracles::downward_directed_oracle(g, h),
                        "directedness disagrees on {g:?}"
                    );
                }
            }
        }

        let mut rng = StdRng::seed_from_u64(0x0006);
        for _ in 0..150 {
            let g = random::random_graph(&mut rng, 4, 4);
            for pair in enumerate_admissible_pairs(&g).unwrap() {
                let h = pair.hereditary();
                assert_eq!(condition_k(&g, h).holds, oracles::condition_k_oracle(&g, h));
                let q = QuotientUltragraph::new(&g, pair.clone());
                if q.vertices().len() <= 6 {
                    assert_eq!(condition_l(&q).holds, oracles::condition_l_oracle(&q));
                }
            }
        }
        for _ in 0..100 {
            let g = random::random_graph(&mut rng, 5, 4);
            let mut seen_h = std::collections::HashSet::new();
            for pair in enumerate_admissible_pairs(&g).unwrap() {
                if seen_h.insert(pair.h1().bits()) {
                    let h = pair.hereditary();
                    assert_eq!(
                        downward_directed(&g, h).holds,
                        oracles::downward_directed_oracle(&g, h),
                    );
                }
            }
        }
    });
}

#[test]
fn criterion_7_exitless_loops_bridge_the_quotient_conditions() {
    criterion(7, "exitless complement loops match every quotient verdict", || {
        for g in corpus_graphs() {
            let mut seen_h = std::collections::HashSet::new();
            for pair in enumerate_admissible_pairs(g).unwrap() {
                if !seen_h.insert(pair.h1().bits()) {
                    continue;
                }
                let h = pair.hereditary();
                let loops = exitless_loops_in_complement(g, h);
                let b_h = breaking_vertices(g, h);
                let mut all_hold = true;
                let mut at_full = true;
                for bits in submasks(b_h.bits()) {
                    let chosen = VertexSet::from_bits(bits);
                    let p = AdmissiblePair::new(g, h.clone(), chosen).unwrap();
                    let holds = condition_l(&QuotientUltragraph::new(g, p)).holds;
                    all_hold &= holds;
                    if chosen == b_h {
                        at_full = holds;
                    }
                }
                assert_eq!(
                    loops.is_empty(),
                    all_hold,
                    "bridge fails for H={:?} in {g:?}",
                    h.vertex_set()
                );
                assert_eq!(
                    all_hold, at_full,
                    "universal verdict must be decided at the full breaking set"
                );
            }
        }
    });
}

#[test]
fn criterion_8_ideal_posets_are_bounded_lattices() {
    criterion(8, "ideal posets are bounded lattices; context chain", || {
        for g in corpus_graphs() {
            let poset = IdealPoset::new(g).unwrap();
            let n = poset.len();
            for i in 0..n {
                for j in 0..n {
                    let m = poset
                        .meet(i, j)
                        .unwrap_or_else(|e| panic!("no meet in {g:?}: {e}"));
                    assert!(poset.leq(m, i) && poset.leq(m, j));
                    let s = poset
                        .join(i, j)
                        .unwrap_or_else(|e| panic!("no join in {g:?}: {e}"));
                    assert!(poset.leq(i, s) && poset.leq(j, s));
                    for k in 0..n {
                        if poset.leq(k, i) && poset.leq(k, j) {
                            assert!(poset.leq(k, m), "meet is not greatest in {g:?}");
                        }
                        if poset.leq(i, k) && poset.leq(j, k) {
                            assert!(poset.leq(s, k), "join is not least in {g:?}");
                        }
                    }
                }
            }
            let bottom = (0..n)
                .position(|b| (0..n).all(|k| poset.leq(b, k)))
                .expect("minimum exists");
            assert!(poset.nodes()[bottom].h1().is_empty());
            assert!(poset.nodes()[bottom].breakers().is_empty());
            let top = (0..n)
                .position(|t| (0..n).all(|k| poset.leq(k, t)))
                .expect("maximum exists");
            assert_eq!(poset.nodes()[top].h1(), g.full_set());
            assert!(poset.nodes()[top].breakers().is_empty());
        }

        // The worked example, restricted to the context pair: a three
        // element chain holding exactly one primitive ideal, recognized
        // by the one-missing-breaker rule at the context itself.
        let g = fixtures::ex1();
        let names = |list: &[&str]| {
            VertexSet::from_indices(list.iter().map(|s| g.vertex_by_name(s).unwrap().0))
        };
        let h = SatHereditary::new(&g, names(&["v", "a"])).unwrap();
        let context = AdmissiblePair::new(&g, h, VertexSet::EMPTY).unwrap();
        let poset = IdealPoset::new(&g).unwrap();
        let above: Vec<usize> =
            (0..poset.len()).filter(|&k| pair_leq(&context, &poset.nodes()[k])).collect();
        assert_eq!(above.len(), 3, "context restriction must be a three element chain");
        assert!(poset.leq(above[0], above[1]) && poset.leq(above[1], above[2]));
        let verdicts = poset.primitivity_above(&g, &context);
        let primitive: Vec<_> = verdicts.iter().filter(|(_, v)| v.primitive).collect();
        assert_eq!(primitive.len(), 1, "exactly one primitive ideal above the context");
        let (index, verdict) = primitive[0];
        assert_eq!(poset.nodes()[*index], context);
        assert!(
            matches!(verdict.rule, PrimitivityRule::OneMissingBreaker(_)),
            "the primitive node must be recognized by the one-missing-breaker rule"
        );
    });
}

#[test]
fn criterion_9_trivial_pair_reproduces_the_graph() {
    criterion(9, "trivial quotient reproduces the graph", || {
        for g in corpus_graphs() {
            let q = QuotientUltragraph::new(g, AdmissiblePair::trivial());
            assert_eq!(q.vertices().len(), g.vertex_count());
            for (&qv, v) in q.vertices().iter().zip(g.vertices()) {
                assert_eq!(qv, ExtVertex::Base(v));
                assert_eq!(q.vertex_class(qv).members(), vec![ExtVertex::Base(v)]);
                assert_eq!(q.render_vertex(qv), format!("[{}]", g.vertex_name(v)));
            }
            assert_eq!(q.edges().len(), g.edges().len());
            for (qe, e) in q.edges().iter().zip(g.edges()) {
                assert_eq!(q.edge_id(qe), e.id);
                assert_eq!(qe.source, ExtVertex::Base(e.source));
                assert_eq!(q.edge_multiplicity(qe), e.multiplicity);
                let members: Vec<ExtVertex> = qe.range.members();
                let expected: Vec<ExtVertex> =
                    e.range.iter().map(|i| ExtVertex::Base(ultragraph::VertexId(i))).collect();
                assert_eq!(members, expected);
            }
            assert_eq!(&q.extended().to_ultragraph(), g);
        }
    });
}
