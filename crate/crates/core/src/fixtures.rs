//! Small named graphs with known behavior.
//!
//! Vertex names map to ids in the order they are listed in `names`; a
//! fixture's id for name `x` is `fixture.id("x")`.

use crate::graph::Graph;

#[derive(Debug, Clone)]
pub struct Fixture {
    pub name: &'static str,
    pub names: Vec<&'static str>,
    pub graph: Graph,
}

impl Fixture {
    fn build(name: &'static str, names: &[&'static str], edges: &[(&str, &str)]) -> Fixture {
        let id = |x: &str| {
            names
                .iter()
                .position(|&y| y == x)
                .unwrap_or_else(|| panic!("unknown vertex {x}"))
        };
        let graph =
            Graph::new(names.len(), edges.iter().map(|&(u, v)| (id(u), id(v)))).expect("fixture edges are valid");
        Fixture {
            name,
            names: names.to_vec(),
            graph,
        }
    }

    /// Id of a named vertex. Panics on unknown names.
    pub fn id(&self, name: &str) -> usize {
        self.names
            .iter()
            .position(|&y| y == name)
            .unwrap_or_else(|| panic!("{} has no vertex {name}", self.name))
    }

    pub fn ids(&self, names: &[&str]) -> Vec<usize> {
        let mut v = names.iter().map(|x| self.id(x)).collect::<Vec<_>>();
        v.sort_unstable();
        v
    }
}

/// Triangle b-c-d with pendant a on b (also known as K3+e).
pub fn triangle_with_pendant() -> Fixture {
    Fixture::build(
        "triangle_with_pendant",
        &["a", "b", "c", "d"],
        &[("a", "b"), ("b", "c"), ("b", "d"), ("c", "d")],
    )
}

/// Path b1-b2-b3-b4 with t6-t7 hanging off b1 and b3, and a pendant t8 on b3.
pub fn ke_seven() -> Fixture {
    Fixture::build(
        "ke_seven",
        &["b1", "b2", "b3", "b4", "t6", "t7", "t8"],
        &[
            ("b1", "b2"),
            ("b2", "b3"),
            ("b3", "b4"),
            ("t6", "t7"),
            ("b3", "t7"),
            ("b1", "t6"),
            ("b3", "t8"),
        ],
    )
}

/// Triangle b-c-e with the path d-a attached at b. Not Koenig-Egervary.
pub fn not_ke_triangle_with_tail() -> Fixture {
    Fixture::build(
        "not_ke_triangle_with_tail",
        &["a", "b", "c", "d", "e"],
        &[("a", "b"), ("b", "c"), ("a", "d"), ("b", "e"), ("e", "c")],
    )
}

/// Six vertices around a K4 on b2, b3, t2, t3 with pendants b1 and t1.
pub fn square_stable_six() -> Fixture {
    Fixture::build(
        "square_stable_six",
        &["b1", "b2", "b3", "t1", "t2", "t3"],
        &[
            ("b1", "b2"),
            ("b2", "b3"),
            ("b2", "t3"),
            ("t2", "b3"),
            ("b3", "t3"),
            ("t2", "t3"),
            ("b1", "t1"),
            ("b2", "t2"),
        ],
    )
}

/// Path c4..c9 with a K4 on c5, c6, t5, t6, a triangle c7-c8-t8 and
/// pendants t4, t9.
pub fn square_stable_eleven() -> Fixture {
    Fixture::build(
        "square_stable_eleven",
        &["c4", "c5", "c6", "c7", "c8", "c9", "t4", "t5", "t6", "t8", "t9"],
        &[
            ("c4", "c5"),
            ("c5", "c6"),
            ("c6", "c7"),
            ("c7", "c8"),
            ("c8", "c9"),
            ("t5", "c6"),
            ("c5", "t6"),
            ("t5", "t6"),
            ("c6", "t6"),
            ("c7", "t8"),
            ("c4", "t4"),
            ("c5", "t5"),
            ("c8", "t8"),
            ("c9", "t9"),
        ],
    )
}

/// Path d10..d13 with a ladder rung pattern underneath. Not square-stable.
pub fn not_square_stable_seven() -> Fixture {
    Fixture::build(
        "not_square_stable_seven",
        &["d10", "d11", "d12", "d13", "e10", "e11", "e12"],
        &[
            ("d10", "d11"),
            ("d11", "d12"),
            ("d12", "d13"),
            ("d10", "e10"),
            ("e11", "e12"),
            ("d11", "e11"),
            ("d12", "e12"),
        ],
    )
}

/// Simplicial vertices v2, v4, v5, v8; the core of its square is {v2, v5}.
pub fn simplicial_core_eight() -> Fixture {
    Fixture::build(
        "simplicial_core_eight",
        &["v1", "v2", "v3", "v4", "v5", "v6", "v7", "v8"],
        &[
            ("v6", "v7"),
            ("v3", "v4"),
            ("v1", "v5"),
            ("v2", "v6"),
            ("v3", "v7"),
            ("v4", "v8"),
            ("v1", "v6"),
            ("v2", "v7"),
            ("v3", "v8"),
        ],
    )
}

/// The square has a single maximum stable set {x, y} while alpha = 3.
pub fn unique_square_maximum() -> Fixture {
    Fixture::build(
        "unique_square_maximum",
        &["a", "b", "c", "x", "y", "z"],
        &[
            ("a", "b"),
            ("a", "x"),
            ("a", "z"),
            ("c", "y"),
            ("a", "c"),
            ("x", "b"),
            ("b", "c"),
            ("z", "c"),
        ],
    )
}

/// Square-stable, two maximum stable sets and no perfect matching.
pub fn square_stable_without_matching() -> Fixture {
    Fixture::build(
        "square_stable_without_matching",
        &["p", "q", "r", "s", "t"],
        &[("p", "q"), ("s", "t"), ("q", "s"), ("q", "t"), ("p", "r")],
    )
}

/// Path u0..u5 with pendants and a diagonal triangle: its unique perfect
/// matching uses non-pendant edges. Square-stable, not Koenig-Egervary.
pub fn unique_matching_not_only_pendant() -> Fixture {
    Fixture::build(
        "unique_matching_not_only_pendant",
        &["u0", "u1", "u2", "u3", "u4", "u5", "w4", "w5", "w8", "w9"],
        &[
            ("u0", "u1"),
            ("u1", "u2"),
            ("u2", "u3"),
            ("u3", "u4"),
            ("u4", "u5"),
            ("w5", "u2"),
            ("u3", "w8"),
            ("u0", "w4"),
            ("u1", "w5"),
            ("u4", "w8"),
            ("u5", "w9"),
        ],
    )
}

/// Path a-b-c-d with e on b and f on c joined by e-f. Very well-covered
/// bipartite, not square-stable.
pub fn very_well_covered_bipartite() -> Fixture {
    Fixture::build(
        "very_well_covered_bipartite",
        &["a", "b", "c", "d", "e", "f"],
        &[("a", "b"), ("b", "c"), ("c", "d"), ("b", "e"), ("c", "f"), ("e", "f")],
    )
}

/// Path a-b-c-d with apex e on a, b, c. Square-stable, not Koenig-Egervary.
pub fn apex_over_path() -> Fixture {
    Fixture::build(
        "apex_over_path",
        &["a", "b", "c", "d", "e"],
        &[("a", "b"), ("b", "c"), ("c", "d"), ("b", "e"), ("c", "e"), ("a", "e")],
    )
}

/// Comb on four teeth: path b1..b4 with a pendant on each vertex.
pub fn comb_four() -> Fixture {
    Fixture::build(
        "comb_four",
        &["b1", "b2", "b3", "b4", "t1", "t2", "t3", "t4"],
        &[
            ("b1", "b2"),
            ("b2", "b3"),
            ("b3", "b4"),
            ("b1", "t1"),
            ("b2", "t2"),
            ("b3", "t3"),
            ("b4", "t4"),
        ],
    )
}

/// Two parallel paths of four joined by the two middle rungs.
pub fn ladder_eight() -> Fixture {
    Fixture::build(
        "ladder_eight",
        &["b5", "b6", "b7", "b8", "t5", "t6", "t7", "t8"],
        &[
            ("b5", "b6"),
            ("b6", "b7"),
            ("b7", "b8"),
            ("t5", "t6"),
            ("t6", "t7"),
            ("t7", "t8"),
            ("b6", "t6"),
            ("b7", "t7"),
        ],
    )
}

/// Triangle b10-b11-t10 with pendants b9, b12 and t9.
pub fn triangle_with_three_pendants() -> Fixture {
    Fixture::build(
        "triangle_with_three_pendants",
        &["b9", "b10", "b11", "b12", "t9", "t10"],
        &[
            ("b9", "b10"),
            ("b10", "b11"),
            ("b11", "b12"),
            ("t9", "t10"),
            ("b10", "t10"),
            ("t10", "b11"),
        ],
    )
}

/// Every fixture, in a fixed order.
pub fn all() -> Vec<Fixture> {
    vec![
        triangle_with_pendant(),
        ke_seven(),
        not_ke_triangle_with_tail(),
        square_stable_six(),
        square_stable_eleven(),
        not_square_stable_seven(),
        simplicial_core_eight(),
        unique_square_maximum(),
        square_stable_without_matching(),
        unique_matching_not_only_pendant(),
        very_well_covered_bipartite(),
        apex_over_path(),
        comb_four(),
        ladder_eight(),
        triangle_with_three_pendants(),
    ]
}
