//! Seeded random graphs and sets for probabilistic sweeps.

use rand::rngs::StdRng;
use rand::Rng;
use ultragraph::{EdgeSpec, Multiplicity, Ultragraph, UltragraphSpec, VertexSet};

/// A random graph with `1..=max_vertices` vertices and up to
/// `max_edges` edge families; multiplicities mix one, two, and
/// infinity.
pub fn random_graph(rng: &mut StdRng, max_vertices: usize, max_edges: usize) -> Ultragraph {
    let n = rng.gen_range(1..=max_vertices);
    let k = rng.gen_range(0..=max_edges);
    let vertices: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
    let edges = (0..k)
        .map(|idx| {
            let source = rng.gen_range(0..n);
            let range_bits = rng.gen_range(1..1u64 << n);
            let multiplicity = match rng.gen_range(0..4) {
                0 | 1 => Multiplicity::ONE,
                2 => Multiplicity::Finite(2),
                _ => Multiplicity::Infinite,
            };
            EdgeSpec {
                id: format!("e{idx}"),
                source: vertices[source].clone(),
                range: (0..n)
                    .filter(|i| range_bits >> i & 1 == 1)
                    .map(|i| vertices[i].clone())
                    .collect(),
                multiplicity,
            }
        })
        .collect();
    UltragraphSpec { vertices, edges }.build().expect("random spec builds")
}

/// A uniformly random subset of `universe`.
pub fn random_subset(rng: &mut StdRng, universe: VertexSet) -> VertexSet {
    VertexSet::from_bits(rng.gen::<u64>() & universe.bits())
}
