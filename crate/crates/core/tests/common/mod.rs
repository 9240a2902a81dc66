//! Brute-force oracles shared by the integration tests. None of them call
//! into the library's own search code.

#![allow(dead_code, clippy::needless_range_loop)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use trunkit::Multigraph;

pub fn matrix(g: &Multigraph) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut m = vec![vec![0; n]; n];
    for &(a, b) in g.edges() {
        m[a][b] += 1;
        if a != b {
            m[b][a] += 1;
        }
    }
    m
}

/// Isomorphism by permutation search, pruned by matching loop counts and
/// valencies.
pub fn isomorphic(g: &Multigraph, h: &Multigraph) -> bool {
    if g.order() != h.order() || g.size() != h.size() {
        return false;
    }
    let (mg, mh) = (matrix(g), matrix(h));
    let (dg, dh) = (g.valencies(), h.valencies());
    let mut sg = dg.clone();
    let mut sh = dh.clone();
    sg.sort_unstable();
    sh.sort_unstable();
    if sg != sh {
        return false;
    }
    let n = g.order();
    let mut image = vec![usize::MAX; n];
    let mut taken = vec![false; n];
    fn extend(
        i: usize,
        mg: &[Vec<usize>],
        mh: &[Vec<usize>],
        dg: &[usize],
        dh: &[usize],
        image: &mut [usize],
        taken: &mut [bool],
    ) -> bool {
        let n = mg.len();
        if i == n {
            return true;
        }
        for j in 0..n {
            if taken[j] || dg[i] != dh[j] || mg[i][i] != mh[j][j] {
                continue;
            }
            if (0..i).any(|k| mg[i][k] != mh[j][image[k]]) {
                continue;
            }
            image[i] = j;
            taken[j] = true;
            if extend(i + 1, mg, mh, dg, dh, image, taken) {
                return true;
            }
            taken[j] = false;
        }
        false
    }
    extend(0, &mg, &mh, &dg, &dh, &mut image, &mut taken)
}

fn connected_without(m: &[Vec<usize>], removed: u64) -> bool {
    let n = m.len();
    let Some(start) = (0..n).find(|&v| removed >> v & 1 == 0) else {
        return true;
    };
    let mut seen = removed | 1 << start;
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for w in 0..n {
            if m[v][w] > 0 && seen >> w & 1 == 0 {
                seen |= 1 << w;
                stack.push(w);
            }
        }
    }
    seen == (1u64 << n) - 1
}

/// Minimum number of edges crossing a proper nonempty vertex subset.
pub fn brute_edge_connectivity(g: &Multigraph) -> usize {
    let n = g.order();
    assert!(n <= 24);
    let mut best = usize::MAX;
    // vertex 0 always on the inside
    for s in 0..(1u64 << (n - 1)) {
        let inside = s << 1 | 1;
        if inside == (1u64 << n) - 1 {
            continue;
        }
        let cut = g
            .edges()
            .iter()
            .filter(|&&(a, b)| (inside >> a & 1) != (inside >> b & 1))
            .count();
        best = best.min(cut);
    }
    best
}

/// Fewest vertices whose removal disconnects the graph or leaves one
/// vertex; n - 1 when no such separator exists.
pub fn brute_vertex_connectivity(g: &Multigraph) -> usize {
    let n = g.order();
    assert!(n <= 24);
    let m = matrix(g);
    let mut best = n - 1;
    for s in 0..(1u64 << n) {
        let k = s.count_ones() as usize;
        if k >= best || n - k < 2 {
            continue;
        }
        if !connected_without(&m, s) {
            best = k;
        }
    }
    best
}

/// Number of perfect matchings, parallel edges counted separately, by
/// dynamic programming over covered vertex sets.
pub fn perfect_matching_count(g: &Multigraph) -> u64 {
    let n = g.order();
    assert!(n <= 20);
    let m = matrix(g);
    let full = (1usize << n) - 1;
    let mut ways = vec![0u64; 1 << n];
    ways[0] = 1;
    for covered in 0..=full {
        if ways[covered] == 0 || covered == full {
            continue;
        }
        let v = (!covered).trailing_zeros() as usize;
        for w in v + 1..n {
            if covered >> w & 1 == 0 && m[v][w] > 0 {
                ways[covered | 1 << v | 1 << w] += ways[covered] * m[v][w] as u64;
            }
        }
    }
    ways[full]
}

/// A random loopless multigraph with the given order and edge count.
pub fn random_multigraph(order: usize, size: usize, seed: u64) -> Multigraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Multigraph::new(order);
    for _ in 0..size {
        let a = rng.gen_range(0..order);
        let mut b = rng.gen_range(0..order - 1);
        if b >= a {
            b += 1;
        }
        g.add_edge(a, b).unwrap();
    }
    g
}

/// A random simple graph, each pair present with probability `p`.
pub fn random_simple(order: usize, p: f64, seed: u64) -> Multigraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Multigraph::new(order);
    for a in 0..order {
        for b in a + 1..order {
            if rng.gen_bool(p) {
                g.add_edge(a, b).unwrap();
            }
        }
    }
    g
}

pub fn relabel_randomly(g: &Multigraph, seed: u64) -> Multigraph {
    use rand::seq::SliceRandom;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut perm: Vec<usize> = (0..g.order()).collect();
    perm.shuffle(&mut rng);
    g.relabel(&perm)
}

/// Drops isolated vertices.
pub fn without_isolated(g: &Multigraph) -> Multigraph {
    let keep: Vec<usize> = (0..g.order()).filter(|&v| g.valency(v) > 0).collect();
    g.induced_subgraph(&keep).0
}

/// Deleting `removed` leaves `g` disconnected.
pub fn is_disconnected_without(g: &Multigraph, removed: &[usize]) -> bool {
    !g.without_edges(removed).0.is_connected()
}

/// Proper edge colouring with `k` colours exists, by plain backtracking in
/// edge order.
pub fn edge_colorable(g: &Multigraph, k: usize) -> bool {
    fn go(g: &Multigraph, k: usize, e: usize, color: &mut Vec<usize>) -> bool {
        if e == g.size() {
            return true;
        }
        let (a, b) = g.endpoints(e);
        for c in 0..k {
            let clash = (0..e).any(|f| {
                color[f] == c && {
                    let (p, q) = g.endpoints(f);
                    p == a || p == b || q == a || q == b
                }
            });
            if !clash {
                color.push(c);
                if go(g, k, e + 1, color) {
                    return true;
                }
                color.pop();
            }
        }
        false
    }
    go(g, k, 0, &mut Vec::new())
}

/// A Hamilton cycle exists, by depth-first extension of paths from vertex 0.
pub fn hamiltonian(g: &Multigraph) -> bool {
    let n = g.order();
    if n < 3 {
        return false;
    }
    let m = matrix(g);
    fn go(m: &[Vec<usize>], path: &mut Vec<usize>, seen: &mut [bool]) -> bool {
        let n = m.len();
        let v = *path.last().unwrap();
        if path.len() == n {
            return m[v][0] > 0;
        }
        for w in 0..n {
            if !seen[w] && m[v][w] > 0 {
                seen[w] = true;
                path.push(w);
                if go(m, path, seen) {
                    return true;
                }
                path.pop();
                seen[w] = false;
            }
        }
        false
    }
    let mut seen = vec![false; n];
    seen[0] = true;
    go(&m, &mut vec![0], &mut seen)
}
