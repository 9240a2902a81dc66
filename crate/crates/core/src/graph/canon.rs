//! Canonical forms by individualization-refinement.
//!
//! The ordered partition is refined to an equitable one (cells split by
//! their multiplicity counts into every other cell), then the first
//! non-singleton cell is individualized vertex by vertex. Each discrete leaf
//! orders the vertices; the canonical form is the lexicographically largest
//! lower-triangular multiplicity matrix over all leaves. Leaves that tie
//! with the best one reveal automorphisms, which prune sibling branches in
//! the same orbit.

use super::Multigraph;
use crate::caps::Caps;
use crate::error::Result;

/// Byte string identifying a multigraph up to isomorphism, including edge
/// multiplicities and loops.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

pub fn canonical_form(g: &Multigraph) -> Result<CanonicalForm> {
    Caps::check("canonical form", Caps::current().canonical_order, g.order())?;
    let labeling = canonical_labeling(g);
    let m = g.multiplicity_matrix();
    let mut bytes = Vec::with_capacity(8 + 4 * g.order() * g.order());
    bytes.extend_from_slice(&(g.order() as u32).to_le_bytes());
    bytes.extend_from_slice(&(g.size() as u32).to_le_bytes());
    for entry in leaf_string(&m, &labeling) {
        bytes.extend_from_slice(&entry.to_le_bytes());
    }
    Ok(CanonicalForm(bytes))
}

/// Vertex order (position -> vertex) of the canonical leaf.
pub(crate) fn canonical_labeling(g: &Multigraph) -> Vec<usize> {
    let m = g.multiplicity_matrix();
    let n = g.order();
    let mut search = Search {
        m: &m,
        best: None,
        first: None,
        automorphisms: Vec::new(),
    };
    let root = refine(&m, vec![(0..n).collect()]);
    search.visit(root, &mut Vec::new());
    search.best.map(|(_, perm)| perm).unwrap_or_default()
}

type Partition = Vec<Vec<usize>>;

fn leaf_string(m: &[Vec<usize>], perm: &[usize]) -> Vec<u32> {
    let mut s = Vec::with_capacity(perm.len() * (perm.len() + 1) / 2);
    for i in 0..perm.len() {
        for j in 0..=i {
            s.push(m[perm[i]][perm[j]] as u32);
        }
    }
    s
}

/// Refines to the coarsest equitable partition below `p`; split cells keep
/// their position and are ordered by signature.
fn refine(m: &[Vec<usize>], mut p: Partition) -> Partition {
    let n = m.len();
    let mut cell_of = vec![0; n];
    loop {
        for (i, cell) in p.iter().enumerate() {
            for &v in cell {
                cell_of[v] = i;
            }
        }
        let mut next: Partition = Vec::with_capacity(p.len());
        for cell in &p {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<usize>, usize)> = cell
                .iter()
                .map(|&v| {
                    let mut sig = vec![0; p.len()];
                    for w in 0..n {
                        sig[cell_of[w]] += m[v][w];
                    }
                    (sig, v)
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|(_, v)| *v).collect());
                    start = i;
                }
            }
        }
        let stable = next.len() == p.len();
        p = next;
        if stable {
            return p;
        }
    }
}

struct Search<'a> {
    m: &'a [Vec<usize>],
    best: Option<(Vec<u32>, Vec<usize>)>,
    first: Option<(Vec<u32>, Vec<usize>)>,
    automorphisms: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn visit(&mut self, p: Partition, prefix: &mut Vec<usize>) {
        let Some(target) = p.iter().position(|c| c.len() > 1) else {
            self.leaf(p.iter().map(|c| c[0]).collect());
            return;
        };
        let cell = p[target].clone();
        let mut tried: Vec<usize> = Vec::new();
        for &v in &cell {
            if !tried.is_empty() && self.same_orbit(prefix, &tried, v) {
                continue;
            }
            tried.push(v);
            let mut child = p.clone();
            let rest: Vec<usize> = cell.iter().copied().filter(|&w| w != v).collect();
            child.splice(target..=target, [vec![v], rest]);
            let child = refine(self.m, child);
            prefix.push(v);
            self.visit(child, prefix);
            prefix.pop();
        }
    }

    fn leaf(&mut self, perm: Vec<usize>) {
        let s = leaf_string(self.m, &perm);
        for reference in [&self.first, &self.best].into_iter().flatten() {
            if reference.0 == s {
                // reference.1[i] -> perm[i] preserves the matrix
                let mut gamma = vec![0; perm.len()];
                for (i, &v) in reference.1.iter().enumerate() {
                    gamma[v] = perm[i];
                }
                if gamma.iter().enumerate().any(|(i, &g)| i != g) {
                    self.automorphisms.push(gamma);
                }
                return;
            }
        }
        if self.first.is_none() {
            self.first = Some((s.clone(), perm.clone()));
        }
        if self.best.as_ref().is_none_or(|(b, _)| s > *b) {
            self.best = Some((s, perm));
        }
    }

    /// Is `v` in the orbit of a tried vertex under the automorphisms found
    /// so far that fix `prefix` pointwise?
    fn same_orbit(&self, prefix: &[usize], tried: &[usize], v: usize) -> bool {
        let n = self.m.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for gamma in &self.automorphisms {
            if prefix.iter().any(|&x| gamma[x] != x) {
                continue;
            }
            for x in 0..n {
                let (a, b) = (find(&mut parent, x), find(&mut parent, gamma[x]));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        let rv = find(&mut parent, v);
        tried.iter().any(|&t| find(&mut parent, t) == rv)
    }
}
