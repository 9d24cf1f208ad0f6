//! Hand-picked graphs reused across the test suites.

use ultragraph::{EdgeSpec, Multiplicity, Ultragraph, UltragraphSpec};

/// Builds a graph from terse shape tuples.
pub fn build(
    vertices: &[&str],
    edges: &[(&str, &str, &[&str], Multiplicity)],
) -> Ultragraph {
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
///
/// The set `{v,a}` is the saturated hereditary set most examples
/// quotient by; `w` is its one breaking vertex.
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

/// One vertex with a single one-copy loop: the minimal graph violating
/// both loop conditions.
pub fn cyc1() -> Ultragraph {
    build(&["x"], &[("l", "x", &["x"], Multiplicity::ONE)])
}

/// One vertex with two parallel loop families: each is the other's
/// exit, so both loop conditions hold.
pub fn two() -> Ultragraph {
    build(
        &["x"],
        &[
            ("l1", "x", &["x"], Multiplicity::ONE),
            ("l2", "x", &["x"], Multiplicity::ONE),
        ],
    )
}

/// A one-copy loop at `x` next to an infinite family from `x` to a
/// sink `y`. Deleting `{y}` leaves the loop exitless, yet the quotient
/// by `({y}, {})` satisfies the loop-exit condition: the infinite
/// family makes `x` a breaking vertex, splitting gives the class
/// `[x,x']`, and the loop's range class is no longer its own source.
pub fn inf_loop_plus_sink() -> Ultragraph {
    build(
        &["x", "y"],
        &[
            ("l", "x", &["x"], Multiplicity::ONE),
            ("m", "x", &["y"], Multiplicity::Infinite),
        ],
    )
}
