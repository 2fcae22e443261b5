//! Induced subgraphs in which every vertex has odd degree.
//!
//! The exact finder scans vertex subsets in descending size (so it can stop
//! at the first hit) and is limited to small orders; the heuristic runs a
//! seeded local search that always returns a valid, nonempty set but makes
//! no promises about its size beyond the single-edge fallback.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::gf2::BitVector;
use crate::graph::Graph;

/// Largest order [`exact_max_odd_subgraph`] accepts: 2^20 subsets, each
/// checked in a handful of word operations.
pub const EXACT_SEARCH_LIMIT: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OddSubgraphError {
    #[error("order {n} exceeds the exact search limit {limit}; use the heuristic")]
    TooLarge { n: usize, limit: usize },
    #[error("vertex {0} is isolated")]
    IsolatedVertex(usize),
}

/// Checks by direct counting that every vertex of `set` has odd degree in
/// the subgraph induced on `set`.
pub fn is_odd_subgraph(g: &Graph, set: &[usize]) -> bool {
    let mask = BitVector::from_indices(g.n(), set);
    set.iter().all(|&v| g.neighbors(v).dot(&mask))
}

/// Gosper's hack: next bit pattern with the same popcount.
fn next_same_weight(v: u32) -> u32 {
    let t = v | (v - 1);
    (t + 1) | (((!t & (t + 1)) - 1) >> (v.trailing_zeros() + 1))
}

/// A maximum-cardinality vertex set inducing an all-odd-degrees subgraph,
/// found by scanning subsets grouped by descending size. Returns the empty
/// set when no nonempty set qualifies (an edgeless graph).
pub fn exact_max_odd_subgraph(g: &Graph) -> Result<Vec<usize>, OddSubgraphError> {
    let n = g.n();
    if n > EXACT_SEARCH_LIMIT {
        return Err(OddSubgraphError::TooLarge {
            n,
            limit: EXACT_SEARCH_LIMIT,
        });
    }
    let rows: Vec<u32> = (0..n)
        .map(|v| {
            g.neighbors(v)
                .ones()
                .fold(0u32, |acc, u| acc | 1 << u)
        })
        .collect();
    let full = if n == 0 { 0 } else { 1u32 << n };
    for size in (1..=n).rev() {
        let mut mask = (1u32 << size) - 1;
        while mask < full {
            let mut rest = mask;
            let mut ok = true;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                if (rows[v] & mask).count_ones() % 2 == 0 {
                    ok = false;
                    break;
                }
                rest &= rest - 1;
            }
            if ok {
                return Ok((0..n).filter(|&v| mask >> v & 1 == 1).collect());
            }
            mask = next_same_weight(mask);
        }
    }
    Ok(Vec::new())
}

/// Best-effort odd induced subgraph for graphs of any order without
/// isolated vertices.
///
/// Runs a seeded local search: start from a random subset, repeatedly flip
/// either a parity-violating vertex or one of its neighbors, restart after
/// a fixed number of steps, and keep the largest valid set seen. A single
/// edge is always valid, so the result is never smaller than 2 (except on
/// the empty graph, which yields the empty set).
pub fn heuristic_odd_subgraph(g: &Graph, seed: u64) -> Result<Vec<usize>, OddSubgraphError> {
    let n = g.n();
    if n == 0 {
        return Ok(Vec::new());
    }
    if let Some(&v) = g.isolated_vertices().first() {
        return Err(OddSubgraphError::IsolatedVertex(v));
    }

    let first_edge = (0..n)
        .find_map(|u| g.neighbors(u).ones().next().map(|v| (u, v)))
        .expect("a graph without isolated vertices has an edge");
    let mut best = BitVector::from_indices(n, &[first_edge.0, first_edge.1]);

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let restarts = 10;
    let steps = 4 * n;
    for _ in 0..restarts {
        let mut current = BitVector::random(n, &mut rng);
        for _ in 0..steps {
            let violating: Vec<usize> = current
                .ones()
                .filter(|&v| !g.neighbors(v).dot(&current))
                .collect();
            if violating.is_empty() {
                if current.count_ones() > best.count_ones() {
                    best = current.clone();
                }
                break;
            }
            let v = violating[rng.random_range(0..violating.len())];
            if rng.random_bool(0.5) {
                current.flip(v);
            } else {
                let nbrs: Vec<usize> = g.neighbors(v).ones().collect();
                current.flip(nbrs[rng.random_range(0..nbrs.len())]);
            }
        }
        if best.count_ones() == n {
            break;
        }
    }
    Ok(best.ones().collect())
}
