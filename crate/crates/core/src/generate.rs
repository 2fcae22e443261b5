//! Seeded random instance generators.

use rand::Rng;

use crate::gf2::BitVector;
use crate::graph::{Digraph, Graph, LabelFn};

/// Erdős–Rényi graph: each of the `n(n-1)/2` possible edges appears
/// independently with probability `p`.
pub fn gnp(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Random digraph: each of the `n(n-1)` possible arcs appears independently
/// with probability `p`.
pub fn gnp_digraph(n: usize, p: f64, rng: &mut impl Rng) -> Digraph {
    let mut d = Digraph::empty(n);
    for u in 0..n {
        for v in 0..n {
            if u != v && rng.random_bool(p) {
                d.add_arc(u, v);
            }
        }
    }
    d
}

/// Random graph with isolated vertices patched up by attaching each one to
/// a random other vertex. Requires `n >= 2`.
pub fn gnp_without_isolates(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
    assert!(n >= 2, "need at least two vertices to avoid isolated ones");
    let mut g = gnp(n, p, rng);
    for v in g.isolated_vertices() {
        let mut other = rng.random_range(0..n - 1);
        if other >= v {
            other += 1;
        }
        g.add_edge(v, other);
    }
    g
}

/// Star with center 0 and `n - 1` leaves.
pub fn star(n: usize) -> Graph {
    assert!(n >= 1, "star needs a center");
    Graph::from_edges(n, &(1..n).map(|v| (0, v)).collect::<Vec<_>>())
}

/// Perfect matching on `n` vertices: edges `{0,1}, {2,3}, ...`.
///
/// # Panics
///
/// Panics if `n` is odd.
pub fn perfect_matching(n: usize) -> Graph {
    assert!(n % 2 == 0, "perfect matching needs an even order");
    Graph::from_edges(n, &(0..n / 2).map(|i| (2 * i, 2 * i + 1)).collect::<Vec<_>>())
}

/// Random digraph in which every out-degree is even: out-neighborhoods are
/// sampled with density `p`, then trimmed or padded by one arc when odd.
pub fn even_out_digraph(n: usize, p: f64, rng: &mut impl Rng) -> Digraph {
    let mut d = Digraph::empty(n);
    for u in 0..n {
        let mut outs: Vec<usize> = (0..n)
            .filter(|&v| v != u && rng.random_bool(p))
            .collect();
        if outs.len() % 2 == 1 {
            if outs.len() == n - 1 {
                outs.pop();
            } else {
                let extra = (0..n).find(|&v| v != u && !outs.contains(&v)).unwrap();
                outs.push(extra);
            }
        }
        for v in outs {
            d.add_arc(u, v);
        }
    }
    d
}

/// Random labels, each vertex drawing label 1 with probability `p_one`.
pub fn random_labels(n: usize, p_one: f64, rng: &mut impl Rng) -> LabelFn {
    let mut bits = BitVector::zeros(n);
    for v in 0..n {
        if rng.random_bool(p_one) {
            bits.set(v, true);
        }
    }
    LabelFn::new(bits)
}
