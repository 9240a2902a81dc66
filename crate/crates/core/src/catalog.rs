//! Named source graphs used by the verification suites and the CLI.

use crate::error::{Error, Result};
use crate::graph::generators::*;
use crate::graph::Multigraph;

/// Catalog names, in the order the suites visit them. `2K2` and `3K2` are
/// K_2 with its edge doubled and tripled.
pub const NAMES: &[&str] = &[
    "K3", "K4", "K5", "K6", "2K2", "3K2", "C4", "C5", "C6", "P3", "P4", "K1,3", "K3,3", "K2,3", "Q3", "prism",
    "P4xK2", "octahedron", "petersen",
];

/// Looks a name up case-insensitively. `p4-prism` is accepted for `P4xK2`.
pub fn graph(name: &str) -> Result<Multigraph> {
    let g = match name.to_ascii_lowercase().as_str() {
        "k3" => complete(3),
        "k4" => complete(4),
        "k5" => complete(5),
        "k6" => complete(6),
        "2k2" => multi_edge(2),
        "3k2" => multi_edge(3),
        "c4" => cycle(4),
        "c5" => cycle(5),
        "c6" => cycle(6),
        "p3" => path(3),
        "p4" => path(4),
        "k1,3" => star(3),
        "k3,3" => complete_bipartite(3, 3),
        "k2,3" => complete_bipartite(2, 3),
        "q3" => hypercube(3),
        "prism" => prism(3),
        "p4xk2" | "p4-prism" => cartesian_product(&path(4), &complete(2)),
        "octahedron" => octahedron(),
        "petersen" => petersen(),
        _ => return Err(Error::UnknownGraph(name.to_string())),
    };
    Ok(g)
}

/// Every catalog graph with its name.
pub fn all() -> Vec<(&'static str, Multigraph)> {
    NAMES.iter().map(|&n| (n, graph(n).expect("catalog name"))).collect()
}

/// The named subset, in the given order.
pub fn select(names: &[String]) -> Result<Vec<(String, Multigraph)>> {
    names.iter().map(|n| Ok((n.clone(), graph(n)?))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_shapes() {
        let expected = [
            ("K3", 3, 3),
            ("K4", 4, 6),
            ("K5", 5, 10),
            ("K6", 6, 15),
            ("2K2", 2, 2),
            ("3K2", 2, 3),
            ("C4", 4, 4),
            ("C5", 5, 5),
            ("C6", 6, 6),
            ("P3", 3, 2),
            ("P4", 4, 3),
            ("K1,3", 4, 3),
            ("K3,3", 6, 9),
            ("K2,3", 5, 6),
            ("Q3", 8, 12),
            ("prism", 6, 9),
            ("P4xK2", 8, 10),
            ("octahedron", 6, 12),
            ("petersen", 10, 15),
        ];
        assert_eq!(expected.len(), NAMES.len());
        for (name, order, size) in expected {
            let g = graph(name).unwrap();
            assert_eq!((g.order(), g.size()), (order, size), "{name}");
            assert_eq!(g.is_simple(), !matches!(name, "2K2" | "3K2"), "{name}");
        }
        assert_eq!(graph("p4-prism").unwrap(), graph("P4xK2").unwrap());
        assert_eq!(graph("k33").unwrap_err(), Error::UnknownGraph("k33".into()));
    }
}
