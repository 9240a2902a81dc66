use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{assemble, excise, ConstituentAssignment, Truncation};
use crate::error::{Error, Result};
use crate::graph::Multigraph;

/// Every constituent complete.
pub fn complete_truncation(x: &Multigraph) -> Result<Truncation> {
    x.require_loopless()?;
    let lm = excise(x)?;
    let ca = ConstituentAssignment::complete(&lm);
    assemble(lm, ca)
}

/// Every constituent a spanning path through its cluster in ascending order.
pub fn spanning_path_truncation(x: &Multigraph) -> Result<Truncation> {
    x.require_loopless()?;
    let lm = excise(x)?;
    let ca = ConstituentAssignment::paths(&lm);
    assemble(lm, ca)
}

/// Every constituent a perfect matching pairing consecutive cluster
/// vertices, so every vertex of the result has valency 2.
pub fn matching_constituent_truncation(x: &Multigraph) -> Result<Truncation> {
    x.require_loopless()?;
    if let Some(v) = (0..x.order()).find(|&v| x.valency(v) % 2 == 1) {
        return Err(Error::OddValency {
            vertex: v,
            valency: x.valency(v),
        });
    }
    let lm = excise(x)?;
    let graphs = lm
        .clusters()
        .iter()
        .map(|c| {
            let k = c.len();
            Multigraph::from_edges(k, (0..k / 2).map(|i| (2 * i, 2 * i + 1))).expect("in range")
        })
        .collect();
    assemble(lm, ConstituentAssignment::new(graphs))
}

fn check_density(density: f64) -> Result<()> {
    if (0.0..=1.0).contains(&density) {
        Ok(())
    } else {
        Err(Error::InvalidDensity(density.to_string()))
    }
}

/// Each constituent includes every pair of its cluster independently with
/// probability `density`. The same seed gives the same truncation.
pub fn random_truncation(x: &Multigraph, density: f64, seed: u64) -> Result<Truncation> {
    check_density(density)?;
    x.require_loopless()?;
    let lm = excise(x)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let graphs = lm
        .clusters()
        .iter()
        .map(|c| {
            let k = c.len();
            let mut g = Multigraph::new(k);
            for a in 0..k {
                for b in a + 1..k {
                    if rng.gen_bool(density) {
                        g.add_edge(a, b).expect("in range");
                    }
                }
            }
            g
        })
        .collect();
    assemble(lm, ConstituentAssignment::new(graphs))
}

/// Like [`random_truncation`], but each constituent first receives a random
/// spanning tree, so the result is cohesive.
pub fn random_cohesive_truncation(x: &Multigraph, density: f64, seed: u64) -> Result<Truncation> {
    check_density(density)?;
    x.require_loopless()?;
    let lm = excise(x)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let graphs = lm
        .clusters()
        .iter()
        .map(|c| {
            let k = c.len();
            let mut g = Multigraph::new(k);
            let mut order: Vec<usize> = (0..k).collect();
            order.shuffle(&mut rng);
            for i in 1..k {
                let j = rng.gen_range(0..i);
                g.add_edge(order[i], order[j]).expect("in range");
            }
            for a in 0..k {
                for b in a + 1..k {
                    if !g.adjacent(a, b) && rng.gen_bool(density) {
                        g.add_edge(a, b).expect("in range");
                    }
                }
            }
            g
        })
        .collect();
    assemble(lm, ConstituentAssignment::new(graphs))
}
