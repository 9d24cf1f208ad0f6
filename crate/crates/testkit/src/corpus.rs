//! Exhaustive enumeration of small ultragraphs.
//!
//! A graph on `n` named vertices is determined by a multiset of edge
//! shapes, each shape a source, a nonempty range, and a multiplicity
//! drawn from one or infinity. Enumerating multisets (rather than
//! sequences) skips graphs differing only in edge order; two equal
//! shapes still yield two distinct parallel families.

use ultragraph::{EdgeSpec, Multiplicity, Ultragraph, UltragraphSpec};

#[derive(Clone, Copy)]
struct Shape {
    source: usize,
    range_bits: u64,
    multiplicity: Multiplicity,
}

fn shapes(n: usize) -> Vec<Shape> {
    let mut out = Vec::new();
    for source in 0..n {
        for range_bits in 1..1u64 << n {
            for multiplicity in [Multiplicity::ONE, Multiplicity::Infinite] {
                out.push(Shape { source, range_bits, multiplicity });
            }
        }
    }
    out
}

fn build(n: usize, picked: &[Shape]) -> Ultragraph {
    let vertices: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
    let edges = picked
        .iter()
        .enumerate()
        .map(|(k, s)| EdgeSpec {
            id: format!("e{k}"),
            source: vertices[s.source].clone(),
            range: (0..n).filter(|i| s.range_bits >> i & 1 == 1).map(|i| vertices[i].clone()).collect(),
            multiplicity: s.multiplicity,
        })
        .collect();
    UltragraphSpec { vertices, edges }.build().expect("enumerated shape builds")
}

/// Every ultragraph with up to `max_vertices` vertices and up to
/// `max_edges` edge families, one per shape multiset.
pub fn small_graphs(max_vertices: usize, max_edges: usize) -> Vec<Ultragraph> {
    fn extend(
        n: usize,
        all: &[Shape],
        budget: usize,
        start: usize,
        current: &mut Vec<Shape>,
        out: &mut Vec<Ultragraph>,
    ) {
        out.push(build(n, current));
        if budget == 0 {
            return;
        }
        for i in start..all.len() {
            current.push(all[i]);
            extend(n, all, budget - 1, i, current, out);
            current.pop();
        }
    }

    let mut out = Vec::new();
    for n in 0..=max_vertices {
        extend(n, &shapes(n), max_edges, 0, &mut Vec::new(), &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_sizes() {
        // One empty graph; n=1 has 2 shapes, n=2 has 12, n=3 has 42;
        // multisets of size at most three.
        assert_eq!(small_graphs(0, 3).len(), 1);
        assert_eq!(small_graphs(1, 3).len(), 1 + 10);
        let full = small_graphs(3, 3).len();
        let choose = |s: usize, k: usize| -> usize {
            // multisets of size exactly k over s shapes
            match k {
                0 => 1,
                _ => (s..s + k).product::<usize>() / (1..=k).product::<usize>(),
            }
        };
        let per_n = |s: usize| choose(s, 0) + choose(s, 1) + choose(s, 2) + choose(s, 3);
        assert_eq!(full, 1 + per_n(2) + per_n(12) + per_n(42));
    }

    #[test]
    fn corpus_members_are_distinct_and_valid() {
        let graphs = small_graphs(2, 2);
        for g in &graphs {
            assert!(g.vertex_count() <= 2);
            assert!(g.edges().len() <= 2);
        }
        // Graphs are pairwise distinct as structures.
        for (i, a) in graphs.iter().enumerate() {
            for b in &graphs[i + 1..] {
                assert!(a != b);
            }
        }
    }
}
