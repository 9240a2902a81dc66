//! Planarity and outerplanarity tests, and the planarity checks for
//! cohesive truncations.
//!
//! Planarity is decided block by block with the Demoucron-Malgrange-Pertuiset
//! path-embedding procedure.

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{find_subdivision, vertex_connectivity, Multigraph, Pattern, Subdivision, Vertex};
use crate::report::VerificationReport;
use crate::truncation::Truncation;

/// Largest order for which a Kuratowski witness is searched.
pub const WITNESS_ORDER: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Planarity {
    pub planar: bool,
    /// A K_5 or K_{3,3} subdivision, for non-planar graphs of order at most
    /// [`WITNESS_ORDER`].
    pub witness: Option<Subdivision>,
}

/// Exact planarity of a simple graph, with a Kuratowski witness when the
/// answer is no and the graph is small.
pub fn is_planar(g: &Multigraph) -> Result<Planarity> {
    if !g.is_simple() {
        return Err(Error::NotSimple);
    }
    let planar = planar_simple(g);
    let witness = if !planar && g.order() <= WITNESS_ORDER {
        match find_subdivision(g, Pattern::K5)? {
            Some(w) => Some(w),
            None => find_subdivision(g, Pattern::K33)?,
        }
    } else {
        None
    };
    Ok(Planarity { planar, witness })
}

/// Outerplanar exactly when planar after adding a vertex adjacent to every
/// vertex. Parallel edges and loops are ignored.
pub fn is_outerplanar(g: &Multigraph) -> bool {
    let mut h = g.underlying_simple();
    let n = h.order();
    if n >= 2 && h.size() > 2 * n - 3 {
        return false;
    }
    let apex = h.add_vertex();
    for v in 0..n {
        h.add_edge(apex, v).expect("in range");
    }
    planar_simple(&h)
}

fn planar_simple(g: &Multigraph) -> bool {
    let n = g.order();
    if n >= 3 && g.size() > 3 * n - 6 {
        return false;
    }
    blocks(g).into_iter().all(|block| {
        let (sub, _) = g.induced_subgraph(&block_vertices(g, &block));
        let edges: Vec<(Vertex, Vertex)> = sub.edges().to_vec();
        block_planar(sub.order(), &edges)
    })
}

fn block_vertices(g: &Multigraph, block: &[usize]) -> Vec<Vertex> {
    let mut vs: Vec<Vertex> = block
        .iter()
        .flat_map(|&e| {
            let (a, b) = g.endpoints(e);
            [a, b]
        })
        .collect();
    vs.sort_unstable();
    vs.dedup();
    vs
}

/// Edge sets of the biconnected components.
fn blocks(g: &Multigraph) -> Vec<Vec<usize>> {
    struct State<'a> {
        g: &'a Multigraph,
        disc: Vec<usize>,
        low: Vec<usize>,
        time: usize,
        stack: Vec<usize>,
        out: Vec<Vec<usize>>,
    }
    fn visit(s: &mut State, v: Vertex, parent_edge: Option<usize>) {
        s.time += 1;
        s.disc[v] = s.time;
        s.low[v] = s.time;
        for &e in s.g.incident(v) {
            if Some(e) == parent_edge {
                continue;
            }
            let w = s.g.other_end(e, v);
            if s.disc[w] == 0 {
                s.stack.push(e);
                visit(s, w, Some(e));
                s.low[v] = s.low[v].min(s.low[w]);
                if s.low[w] >= s.disc[v] {
                    let mut block = Vec::new();
                    while let Some(f) = s.stack.pop() {
                        block.push(f);
                        if f == e {
                            break;
                        }
                    }
                    s.out.push(block);
                }
            } else if s.disc[w] < s.disc[v] {
                s.stack.push(e);
                s.low[v] = s.low[v].min(s.disc[w]);
            }
        }
    }
    let n = g.order();
    let mut s = State {
        g,
        disc: vec![0; n],
        low: vec![0; n],
        time: 0,
        stack: Vec::new(),
        out: Vec::new(),
    };
    for v in 0..n {
        if s.disc[v] == 0 {
            visit(&mut s, v, None);
        }
    }
    s.out
}

/// A fragment of the graph relative to the embedded part: either a single
/// edge joining two embedded vertices or a component of the rest together
/// with its attaching edges.
struct Fragment {
    attachments: Vec<Vertex>,
    /// Unembedded vertices of the fragment; empty for an edge fragment.
    inner: Vec<Vertex>,
    edge: Option<(Vertex, Vertex)>,
}

/// Planarity of a biconnected simple graph by path embedding.
fn block_planar(n: usize, edges: &[(Vertex, Vertex)]) -> bool {
    if n <= 4 || edges.len() <= n {
        return true;
    }
    if edges.len() > 3 * n - 6 {
        return false;
    }
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut placed = vec![false; n];
    let mut edge_placed = vec![vec![false; n]; n];
    let cycle = find_cycle(&adj);
    for i in 0..cycle.len() {
        let (a, b) = (cycle[i], cycle[(i + 1) % cycle.len()]);
        placed[a] = true;
        edge_placed[a][b] = true;
        edge_placed[b][a] = true;
    }
    let mut faces = vec![cycle.clone(), cycle.into_iter().rev().collect::<Vec<_>>()];
    let mut remaining = edges.len() - faces[0].len();

    while remaining > 0 {
        let fragments = fragments(&adj, &placed, &edge_placed);
        let mut choice: Option<(usize, usize)> = None;
        for (i, f) in fragments.iter().enumerate() {
            let admissible: Vec<usize> = (0..faces.len())
                .filter(|&k| f.attachments.iter().all(|a| faces[k].contains(a)))
                .collect();
            match admissible.len() {
                0 => return false,
                1 => {
                    choice = Some((i, admissible[0]));
                    break;
                }
                _ => {
                    if choice.is_none() {
                        choice = Some((i, admissible[0]));
                    }
                }
            }
        }
        let (i, k) = choice.expect("some fragment remains");
        let path = fragment_path(&adj, &placed, &fragments[i]);
        for w in path.windows(2) {
            edge_placed[w[0]][w[1]] = true;
            edge_placed[w[1]][w[0]] = true;
        }
        for &v in &path {
            placed[v] = true;
        }
        remaining -= path.len() - 1;
        let (f1, f2) = split_face(&faces[k], &path);
        faces[k] = f1;
        faces.push(f2);
    }
    true
}

fn find_cycle(adj: &[Vec<Vertex>]) -> Vec<Vertex> {
    // depth-first search until a back edge closes a cycle
    let n = adj.len();
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![usize::MAX; n];
    let mut stack = vec![(0, 0)];
    depth[0] = 0;
    while let Some((v, i)) = stack.pop() {
        if i < adj[v].len() {
            stack.push((v, i + 1));
            let w = adj[v][i];
            if depth[w] == usize::MAX {
                depth[w] = depth[v] + 1;
                parent[w] = v;
                stack.push((w, 0));
            } else if w != parent[v] && depth[w] < depth[v] {
                let mut cycle = vec![v];
                let mut x = v;
                while x != w {
                    x = parent[x];
                    cycle.push(x);
                }
                return cycle;
            }
        }
    }
    unreachable!("a biconnected graph with more edges than vertices has a cycle")
}

fn fragments(adj: &[Vec<Vertex>], placed: &[bool], edge_placed: &[Vec<bool>]) -> Vec<Fragment> {
    let n = adj.len();
    let mut out = Vec::new();
    for a in (0..n).filter(|&a| placed[a]) {
        for &b in &adj[a] {
            if a < b && placed[b] && !edge_placed[a][b] {
                out.push(Fragment {
                    attachments: vec![a, b],
                    inner: Vec::new(),
                    edge: Some((a, b)),
                });
            }
        }
    }
    let mut seen = vec![false; n];
    for s in 0..n {
        if placed[s] || seen[s] {
            continue;
        }
        let mut inner = vec![s];
        let mut attachments = Vec::new();
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if placed[w] {
                    if !attachments.contains(&w) {
                        attachments.push(w);
                    }
                } else if !seen[w] {
                    seen[w] = true;
                    inner.push(w);
                    queue.push_back(w);
                }
            }
        }
        out.push(Fragment {
            attachments,
            inner,
            edge: None,
        });
    }
    out
}

/// A path through the fragment joining two distinct attachments.
fn fragment_path(adj: &[Vec<Vertex>], placed: &[bool], f: &Fragment) -> Vec<Vertex> {
    if let Some((a, b)) = f.edge {
        return vec![a, b];
    }
    let start = f.attachments[0];
    let n = adj.len();
    let mut prev = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for &w in &adj[start] {
        if !placed[w] && f.inner.contains(&w) && prev[w] == usize::MAX {
            prev[w] = start;
            queue.push_back(w);
        }
    }
    while let Some(v) = queue.pop_front() {
        if let Some(&end) = adj[v].iter().find(|&&w| placed[w] && w != start) {
            let mut path = vec![end, v];
            let mut x = v;
            while prev[x] != start {
                x = prev[x];
                path.push(x);
            }
            path.push(start);
            path.reverse();
            return path;
        }
        for &w in &adj[v] {
            if !placed[w] && prev[w] == usize::MAX {
                prev[w] = v;
                queue.push_back(w);
            }
        }
    }
    unreachable!("a fragment of a biconnected graph has two attachments")
}

/// Splits the face cycle `face` along `path`, whose ends lie on the face.
fn split_face(face: &[Vertex], path: &[Vertex]) -> (Vec<Vertex>, Vec<Vertex>) {
    let k = face.len();
    let (a, b) = (path[0], path[path.len() - 1]);
    let i = face.iter().position(|&v| v == a).expect("on face");
    let j = face.iter().position(|&v| v == b).expect("on face");
    let arc = |from: usize, to: usize| {
        let mut out = vec![face[from]];
        let mut x = from;
        while x != to {
            x = (x + 1) % k;
            out.push(face[x]);
        }
        out
    };
    let interior = &path[1..path.len() - 1];
    // a .. b along the face, then back to a through the path
    let mut f1 = arc(i, j);
    f1.extend(interior.iter().rev());
    // b .. a along the face, then back to b through the path
    let mut f2 = arc(j, i);
    f2.extend(interior);
    (f1, f2)
}

/// For a 2-connected planar source, a cohesive truncation is planar exactly
/// when every constituent is outerplanar. Preconditions that fail are
/// reported as skipped.
pub fn check_cohesive_planarity_theorem(t: &Truncation, subject: &str) -> Result<VerificationReport> {
    let report = VerificationReport::new("cohesive-planarity", subject);
    let x = t.source().underlying_simple();
    if !t.is_cohesive() {
        return Ok(report.skipped("truncation is not cohesive"));
    }
    if x.order() < 3 || vertex_connectivity(&x)? < 2 {
        return Ok(report.skipped("source is not 2-connected"));
    }
    if !planar_simple(&x) {
        return Ok(report.skipped("source is not planar"));
    }
    let y = is_planar(t.graph())?;
    let outer: Vec<bool> = t.constituents().graphs().iter().map(is_outerplanar).collect();
    let all_outer = outer.iter().all(|&o| o);
    let report = report
        .fact("truncation_planar", y.planar)
        .fact("constituents_outerplanar", all_outer);
    if y.planar == all_outer {
        return Ok(report);
    }
    let first_bad = outer.iter().position(|&o| !o);
    let direction = if all_outer {
        "outerplanar constituents, non-planar truncation"
    } else {
        "planar truncation with a non-outerplanar constituent"
    };
    // the failure is certified independently of the embedding procedure
    let witness = match y.witness {
        Some(w) => Some(w),
        None if !y.planar => match find_subdivision(t.graph(), Pattern::K33)? {
            Some(w) => Some(w),
            None => find_subdivision(t.graph(), Pattern::K5)?,
        },
        None => None,
    };
    Ok(report
        .fact("direction", direction)
        .require(false, (first_bad, &witness)))
}

/// A non-planar source has only non-planar cohesive truncations.
pub fn check_nonplanar_lemma(t: &Truncation, subject: &str) -> Result<VerificationReport> {
    let report = VerificationReport::new("nonplanar-source", subject);
    if !t.is_cohesive() {
        return Ok(report.skipped("truncation is not cohesive"));
    }
    let x_planar = planar_simple(&t.source().underlying_simple());
    let y = is_planar(t.graph())?;
    Ok(report
        .fact("source_planar", x_planar)
        .fact("truncation_planar", y.planar)
        .require(x_planar || !y.planar, &y.witness))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators::*;
    use crate::truncation::{assemble, complete_truncation, excise, spanning_path_truncation, ConstituentAssignment};

    #[test]
    fn planarity_examples() {
        for g in [complete(4), cycle(7), hypercube(3), octahedron(), prism(5), path(4), complete_bipartite(2, 5)] {
            let p = is_planar(&g).unwrap();
            assert!(p.planar && p.witness.is_none());
        }
        let p = is_planar(&complete(5)).unwrap();
        assert!(!p.planar);
        let w = p.witness.unwrap();
        assert_eq!(w.pattern, Pattern::K5);
        assert!(w.paths.iter().all(|p| p.len() == 2));
        for g in [complete_bipartite(3, 3), petersen(), complete(6), hypercube(4)] {
            let p = is_planar(&g).unwrap();
            assert!(!p.planar);
            if g.order() <= WITNESS_ORDER {
                assert!(p.witness.unwrap().validate(&g));
            }
        }
        let doubled = Multigraph::from_edges(2, [(0, 1), (0, 1)]).unwrap();
        assert_eq!(is_planar(&doubled).unwrap_err(), Error::NotSimple);
    }

    #[test]
    fn complete_truncation_of_k5() {
        let t = complete_truncation(&complete(5)).unwrap();
        let p = is_planar(t.graph()).unwrap();
        assert!(!p.planar);
        assert!(p.witness.unwrap().validate(t.graph()));
    }

    #[test]
    fn outerplanarity_examples() {
        for n in 3..9 {
            assert!(is_outerplanar(&cycle(n)));
        }
        assert!(!is_outerplanar(&complete(4)));
        assert!(!is_outerplanar(&complete_bipartite(2, 3)));
        assert!(is_outerplanar(&path(5)));
        assert!(is_outerplanar(&star(6)));
        let fan = Multigraph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert!(is_outerplanar(&fan));
    }

    #[test]
    fn cohesive_theorem_examples() {
        let t = complete_truncation(&complete(4)).unwrap();
        let r = check_cohesive_planarity_theorem(&t, "K4").unwrap();
        assert!(r.passed());
        assert_eq!(r.facts["truncation_planar"], true);

        // octahedron with one K_4 constituent, paths elsewhere
        let x = octahedron();
        let lm = excise(&x).unwrap();
        let mut graphs: Vec<Multigraph> = ConstituentAssignment::paths(&lm).graphs().to_vec();
        graphs[0] = complete(4);
        let t = assemble(lm, ConstituentAssignment::new(graphs)).unwrap();
        let r = check_cohesive_planarity_theorem(&t, "octahedron").unwrap();
        assert!(r.passed());
        assert_eq!(r.facts["truncation_planar"], false);

        for x in [complete(4), cycle(5), hypercube(3), octahedron(), prism(4)] {
            let t = spanning_path_truncation(&x).unwrap();
            let r = check_cohesive_planarity_theorem(&t, "x").unwrap();
            assert!(r.passed());
            assert_eq!(r.facts["truncation_planar"], true);
        }
        let t = spanning_path_truncation(&path(3)).unwrap();
        assert!(!check_cohesive_planarity_theorem(&t, "P3").unwrap().passed());
    }

    #[test]
    fn nonplanar_lemma_examples() {
        for t in [
            spanning_path_truncation(&complete(5)).unwrap(),
            spanning_path_truncation(&complete_bipartite(3, 3)).unwrap(),
            complete_truncation(&petersen()).unwrap(),
        ] {
            let r = check_nonplanar_lemma(&t, "x").unwrap();
            assert!(r.passed());
            assert_eq!(r.facts["truncation_planar"], false);
        }
    }

    /// A planar source with a cut vertex of valency 4 whose constituent is
    /// K_4: the pendant edge sits inside the constituent's triangle.
    #[test]
    fn cut_vertex_allows_k4_constituent() {
        let x = Multigraph::from_edges(5, [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (3, 1), (0, 4)]).unwrap();
        assert_eq!(vertex_connectivity(&x).unwrap(), 1);
        let lm = excise(&x).unwrap();
        let mut graphs = ConstituentAssignment::complete(&lm).graphs().to_vec();
        assert_eq!(graphs[0].order(), 4);
        graphs[0] = complete(4);
        let t = assemble(lm, ConstituentAssignment::new(graphs)).unwrap();
        assert!(t.is_cohesive());
        assert!(!is_outerplanar(t.constituent(0)));
        assert!(is_planar(t.graph()).unwrap().planar);
        let r = check_cohesive_planarity_theorem(&t, "cut").unwrap();
        assert!(!r.passed() && !r.failed());
    }

    /// Outerplanar constituents in the wrong cyclic order against the fixed
    /// rotation of the octahedron: every constituent is outerplanar, yet the
    /// truncation contains a Kuratowski subdivision.
    #[test]
    fn outerplanar_constituents_can_still_cross() {
        use crate::truncation::random_cohesive_truncation;
        let t = random_cohesive_truncation(&octahedron(), 0.25, 1).unwrap();
        assert!(t.constituents().graphs().iter().all(is_outerplanar));
        assert!(!is_planar(t.graph()).unwrap().planar);
        let r = check_cohesive_planarity_theorem(&t, "octahedron").unwrap();
        assert!(r.failed());
        assert!(!r.certificate.unwrap()[1].is_null());
        let w = find_subdivision(t.graph(), Pattern::K33).unwrap().unwrap();
        assert!(w.validate(t.graph()));
    }
}
