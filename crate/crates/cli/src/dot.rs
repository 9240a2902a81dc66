//! Graphviz export of a truncation: one cluster subgraph per constituent,
//! matching edges drawn bold and dashed.

use std::fmt::Write;

use trunkit::truncation::Truncation;

pub fn truncation_dot(t: &Truncation) -> String {
    let y = t.graph();
    let mut out = String::from("graph truncation {\n  node [shape=circle, fontsize=10];\n");
    for v in 0..t.source().order() {
        writeln!(out, "  subgraph cluster_{v} {{").unwrap();
        writeln!(out, "    label=\"{v}\";").unwrap();
        let members: Vec<String> = t.cluster(v).iter().map(|a| a.to_string()).collect();
        writeln!(out, "    {};", members.join("; ")).unwrap();
        for &e in t.constituent_edges(v) {
            let (a, b) = y.endpoints(e);
            writeln!(out, "    {a} -- {b};").unwrap();
        }
        out.push_str("  }\n");
    }
    for &e in t.matching_edges() {
        let (a, b) = y.endpoints(e);
        writeln!(out, "  {a} -- {b} [style=\"bold,dashed\", color=\"#c0392b\"];").unwrap();
    }
    out.push_str("}\n");
    out
}
