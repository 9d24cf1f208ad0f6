//! Fixture graphs for the unit tests. Integration tests use the
//! shared test-support crate instead; unit tests cannot, because the
//! crate under test is rebuilt with `cfg(test)` and its types would
//! not match the ones the support crate was compiled against.

use crate::graph::{EdgeSpec, Multiplicity, Ultragraph, UltragraphSpec};

fn build(vertices: &[&str], edges: &[(&str, &str, &[&str], Multiplicity)]) -> Ultragraph {
    UltragraphSpec {
        vertices: vertices.iter().map(|s| s.to_string()).collect(),
        edges: edges
            .iter()
            .map(|&(id, source, range, multiplicity)| EdgeSpec {
                id: id.to_string(),
                source: source.to_string(),
                range: range.iter().map(|s| s.to_string()).collect(),
                multiplicity,
            })
            .collect(),
    }
    .build()
    .expect("fixture builds")
}

/// The running demonstration graph: `u` feeds `{v,w}`; `w` feeds back
/// to `u`, feeds the sink `a`, and emits infinitely many edges to `v`.
pub fn ex1() -> Ultragraph {
    build(
        &["u", "v", "w", "a"],
        &[
            ("e", "u", &["v", "w"], Multiplicity::ONE),
            ("f", "w", &["a"], Multiplicity::ONE),
            ("g", "w", &["u"], Multiplicity::ONE),
            ("h", "w", &["v"], Multiplicity::Infinite),
        ],
    )
}

/// One vertex with a single one-copy loop.
pub fn cyc1() -> Ultragraph {
    build(&["x"], &[("l", "x", &["x"], Multiplicity::ONE)])
}

/// One vertex with two parallel loop families.
pub fn two() -> Ultragraph {
    build(
        &["x"],
        &[
            ("l1", "x", &["x"], Multiplicity::ONE),
            ("l2", "x", &["x"], Multiplicity::ONE),
        ],
    )
}

/// A one-copy loop at `x` next to an infinite family to a sink `y`.
pub fn inf_loop_plus_sink() -> Ultragraph {
    build(
        &["x", "y"],
        &[
            ("l", "x", &["x"], Multiplicity::ONE),
            ("m", "x", &["y"], Multiplicity::Infinite),
        ],
    )
}
