//! Text formats for graphs and truncations.
//!
//! A graph file has a header `p <order> <size>` followed by one `e <u> <v>`
//! line per edge, in edge-id order. Lines starting with `c` are comments.
//! A truncation file is the graph file of Y plus `# cluster <y> <v>` lines
//! giving the source vertex of every vertex of Y and `# matching <e>` lines
//! listing the matching edges in source edge order.

use std::fmt::Write;

use trunkit::truncation::Truncation;
use trunkit::Multigraph;

use crate::error::CliError;

fn parse_err(line: usize, msg: impl Into<String>) -> CliError {
    CliError::Parse { line, msg: msg.into() }
}

fn numbers<const N: usize>(line: usize, fields: &[&str]) -> Result<[usize; N], CliError> {
    if fields.len() != N {
        return Err(parse_err(line, format!("expected {N} numbers, got {}", fields.len())));
    }
    let mut out = [0; N];
    for (slot, f) in out.iter_mut().zip(fields) {
        *slot = f
            .parse()
            .map_err(|_| parse_err(line, format!("not a non-negative integer: {f:?}")))?;
    }
    Ok(out)
}

/// Graph plus the `#` directives found in the same file.
struct Parsed {
    graph: Multigraph,
    clusters: Vec<(usize, usize, usize)>,
    matching: Vec<(usize, usize)>,
}

fn parse(text: &str, allow_directives: bool) -> Result<Parsed, CliError> {
    let mut header: Option<(usize, usize)> = None;
    let mut graph = Multigraph::new(0);
    let mut clusters = Vec::new();
    let mut matching = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let fields: Vec<&str> = raw.split_whitespace().collect();
        let Some((&kind, rest)) = fields.split_first() else {
            continue;
        };
        match kind {
            "c" => {}
            "p" => {
                if header.is_some() {
                    return Err(parse_err(line, "second header line"));
                }
                let [order, size] = numbers::<2>(line, rest)?;
                header = Some((order, size));
                graph = Multigraph::new(order);
            }
            "e" => {
                if header.is_none() {
                    return Err(parse_err(line, "edge before the header"));
                }
                let [u, v] = numbers::<2>(line, rest)?;
                graph.add_edge(u, v).map_err(|e| parse_err(line, e.to_string()))?;
            }
            "#" if allow_directives => match rest.split_first() {
                Some((&"cluster", args)) => {
                    let [y, v] = numbers::<2>(line, args)?;
                    clusters.push((line, y, v));
                }
                Some((&"matching", args)) => {
                    let [e] = numbers::<1>(line, args)?;
                    matching.push((line, e));
                }
                _ => return Err(parse_err(line, format!("unknown directive {raw:?}"))),
            },
            _ => return Err(parse_err(line, format!("unrecognised line {raw:?}"))),
        }
    }
    let Some((_, size)) = header else {
        return Err(parse_err(0, "missing header line `p <order> <size>`"));
    };
    if graph.size() != size {
        return Err(parse_err(0, format!("header declares {size} edges, found {}", graph.size())));
    }
    Ok(Parsed {
        graph,
        clusters,
        matching,
    })
}

pub fn parse_graph(text: &str) -> Result<Multigraph, CliError> {
    Ok(parse(text, false)?.graph)
}

pub fn write_graph(g: &Multigraph) -> String {
    let mut out = format!("p {} {}\n", g.order(), g.size());
    for &(u, v) in g.edges() {
        writeln!(out, "e {u} {v}").expect("string write");
    }
    out
}

pub fn parse_truncation(text: &str) -> Result<Truncation, CliError> {
    let p = parse(text, true)?;
    let order = p.graph.order();
    let mut cluster_of = vec![None; order];
    for &(line, y, v) in &p.clusters {
        if y >= order {
            return Err(parse_err(line, format!("cluster line for vertex {y} outside order {order}")));
        }
        if cluster_of[y].replace(v).is_some() {
            return Err(parse_err(line, format!("vertex {y} has two cluster lines")));
        }
    }
    let cluster_of = cluster_of
        .into_iter()
        .enumerate()
        .map(|(y, c)| c.ok_or_else(|| parse_err(0, format!("vertex {y} has no cluster line"))))
        .collect::<Result<Vec<_>, _>>()?;
    let matching = p.matching.iter().map(|&(_, e)| e).collect();
    Ok(Truncation::from_parts(p.graph, cluster_of, matching)?)
}

pub fn write_truncation(t: &Truncation) -> String {
    let mut out = write_graph(t.graph());
    for (y, v) in t.cluster_map().iter().enumerate() {
        writeln!(out, "# cluster {y} {v}").expect("string write");
    }
    for e in t.matching_edges() {
        writeln!(out, "# matching {e}").expect("string write");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use trunkit::graph::generators::{complete, petersen};
    use trunkit::truncation::{complete_truncation, random_truncation};

    #[test]
    fn graph_round_trip() {
        let mut g = Multigraph::from_edges(3, [(0, 1), (0, 1), (2, 2)]).unwrap();
        g.add_vertex();
        let text = write_graph(&g);
        assert_eq!(text, "p 4 3\ne 0 1\ne 0 1\ne 2 2\n");
        assert_eq!(parse_graph(&text).unwrap(), g);
        let commented = "c a comment\n\np 2 1\nc more\ne 1 0\n";
        assert_eq!(parse_graph(commented).unwrap().edges(), &[(1, 0)]);
    }

    #[test]
    fn truncation_round_trip() {
        for t in [complete_truncation(&complete(4)).unwrap(), random_truncation(&petersen(), 0.4, 3).unwrap()] {
            let back = parse_truncation(&write_truncation(&t)).unwrap();
            assert_eq!(back.graph(), t.graph());
            assert_eq!(back.cluster_map(), t.cluster_map());
            assert_eq!(back.matching_edges(), t.matching_edges());
            // the format keeps source edges only as unordered pairs
            let unordered = |g: &Multigraph| -> Vec<(usize, usize)> {
                g.edges().iter().map(|&(a, b)| (a.min(b), a.max(b))).collect()
            };
            assert_eq!(unordered(back.source()), unordered(t.source()));
        }
    }

    #[test]
    fn malformed_inputs() {
        let cases = [
            ("e 0 1\n", "edge before the header"),
            ("p 2 2\ne 0 1\n", "declares 2 edges"),
            ("p 2 1\ne 0 5\n", "out of range"),
            ("p 2 1\ne 0 x\n", "not a non-negative integer"),
            ("p 2 1\nq\n", "unrecognised line"),
            ("", "missing header"),
        ];
        for (text, needle) in cases {
            let err = parse_graph(text).unwrap_err().to_string();
            assert!(err.contains(needle), "{text:?}: {err}");
        }
        assert!(parse_graph("p 2 1\ne 0 1\n# cluster 0 0\n").is_err());
        let err = parse_truncation("p 2 1\ne 0 1\n# cluster 0 0\n# matching 0\n").unwrap_err();
        assert!(err.to_string().contains("no cluster line"));
    }
}
