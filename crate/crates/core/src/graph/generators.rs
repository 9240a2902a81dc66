//! Standard families. Edge order is part of the contract: catalog files and
//! golden outputs depend on it.

use super::Multigraph;

fn build(order: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Multigraph {
    Multigraph::from_edges(order, edges).expect("generator edges in range")
}

/// `K_n`, edges in lexicographic order.
pub fn complete(n: usize) -> Multigraph {
    build(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
}

/// `C_n` as `0-1-...-(n-1)-0`.
pub fn cycle(n: usize) -> Multigraph {
    assert!(n >= 3, "cycle needs n >= 3");
    build(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// The path of order `n`.
pub fn path(n: usize) -> Multigraph {
    build(n, (1..n).map(|i| (i - 1, i)))
}

/// `K_{a,b}` with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Multigraph {
    build(a + b, (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))))
}

pub fn star(leaves: usize) -> Multigraph {
    complete_bipartite(1, leaves)
}

/// `mK_2`: two vertices joined by `m` parallel edges.
pub fn multi_edge(m: usize) -> Multigraph {
    build(2, (0..m).map(|_| (0, 1)))
}

/// `m` disjoint edges.
pub fn perfect_matching(m: usize) -> Multigraph {
    build(2 * m, (0..m).map(|i| (2 * i, 2 * i + 1)))
}

pub fn hypercube(dim: u32) -> Multigraph {
    let n = 1usize << dim;
    build(
        n,
        (0..n).flat_map(|v| {
            (0..dim)
                .map(move |b| (v, v ^ (1 << b)))
                .filter(|&(v, w)| v < w)
        }),
    )
}

/// Cartesian product; vertex `(a, b)` is `a * order(h) + b`. Edges of the
/// `g` copies come first, then those of the `h` copies.
pub fn cartesian_product(g: &Multigraph, h: &Multigraph) -> Multigraph {
    let m = h.order();
    let mut out = Multigraph::new(g.order() * m);
    for &(a, c) in g.edges() {
        for b in 0..m {
            out.add_edge(a * m + b, c * m + b).expect("in range");
        }
    }
    for a in 0..g.order() {
        for &(b, d) in h.edges() {
            out.add_edge(a * m + b, a * m + d).expect("in range");
        }
    }
    out
}

/// `C_n □ K_2`: two `n`-cycles `0..n` and `n..2n` with rungs `i -- i+n`.
pub fn prism(n: usize) -> Multigraph {
    let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    edges.extend((0..n).map(|i| (n + i, n + (i + 1) % n)));
    edges.extend((0..n).map(|i| (i, n + i)));
    build(2 * n, edges)
}

/// Outer 5-cycle `0..5`, spokes `i -- i+5`, inner pentagram.
pub fn petersen() -> Multigraph {
    let mut edges: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
    edges.extend((0..5).map(|i| (i, i + 5)));
    edges.extend((0..5).map(|i| (5 + i, 5 + (i + 2) % 5)));
    build(10, edges)
}

/// `K_{2,2,2}`: every pair except the antipodal pairs `{i, i+3}`.
pub fn octahedron() -> Multigraph {
    build(
        6,
        (0..6).flat_map(|i| (i + 1..6).filter(move |&j| j != i + 3).map(move |j| (i, j))),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        assert_eq!(complete(5).size(), 10);
        assert_eq!(cycle(7).size(), 7);
        assert_eq!(path(4).size(), 3);
        assert_eq!(complete_bipartite(3, 3).size(), 9);
        assert_eq!(hypercube(3).size(), 12);
        assert_eq!(hypercube(3).regular_valency(), Some(3));
        assert_eq!(prism(3).regular_valency(), Some(3));
        assert_eq!(petersen().regular_valency(), Some(3));
        assert_eq!(octahedron().regular_valency(), Some(4));
        assert_eq!(octahedron().size(), 12);
        assert_eq!(cartesian_product(&path(4), &complete(2)).size(), 10);
        assert!(petersen().is_simple());
    }
}
