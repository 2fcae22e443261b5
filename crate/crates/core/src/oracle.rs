//! Brute-force reference implementations.
//!
//! These scan every vertex subset and count degrees with plain per-vertex
//! loops, deliberately avoiding the packed-word counting used elsewhere, so
//! a bug in the fast paths cannot hide behind a shared primitive. They are
//! meant for tests and small cross-checks, not for production sizes.

use crate::digraph_parity::PartitionKind;
use crate::gf2::BitVector;
use crate::graph::{Digraph, Graph, LabelFn, Partition};

/// Largest order the subset scans accept (2^16 subsets).
pub const MAX_ORDER: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("order {n} exceeds the brute-force limit {MAX_ORDER}")]
pub struct OrderTooLarge {
    pub n: usize,
}

fn check_order(n: usize) -> Result<(), OrderTooLarge> {
    if n > MAX_ORDER {
        Err(OrderTooLarge { n })
    } else {
        Ok(())
    }
}

/// A maximum-size vertex set whose induced subgraph gives every member the
/// degree parity its label demands. The empty set qualifies vacuously, so
/// a result is always found.
///
/// # Panics
///
/// Panics if the label length does not match the order.
pub fn brute_max_parity_subgraph(g: &Graph, f: &LabelFn) -> Result<Vec<usize>, OrderTooLarge> {
    let n = g.n();
    check_order(n)?;
    assert_eq!(f.len(), n, "label length does not match graph order");
    let mut best_mask = 0u32;
    let mut best_size = 0u32;
    for mask in 0u32..1 << n {
        if mask.count_ones() <= best_size && mask != 0 {
            continue;
        }
        let mut ok = true;
        for u in 0..n {
            if mask >> u & 1 == 0 {
                continue;
            }
            let mut degree = 0usize;
            for v in 0..n {
                if v != u && mask >> v & 1 == 1 && g.has_edge(u, v) {
                    degree += 1;
                }
            }
            if (degree % 2 == 1) != f.get(u) {
                ok = false;
                break;
            }
        }
        if ok && mask.count_ones() > best_size {
            best_size = mask.count_ones();
            best_mask = mask;
        }
    }
    Ok((0..n).filter(|&v| best_mask >> v & 1 == 1).collect())
}

/// Scans all side vectors in ascending numeric order and returns the first
/// one whose same-part out-neighbor counts satisfy `kind`, checking the
/// counts directly.
pub fn brute_partition_exists(
    d: &Digraph,
    kind: PartitionKind,
) -> Result<Option<Partition>, OrderTooLarge> {
    let n = d.n();
    check_order(n)?;
    for mask in 0u32..1 << n {
        let side = |v: usize| mask >> v & 1 == 1;
        let mut ok = true;
        for v in 0..n {
            let mut same = 0usize;
            for u in 0..n {
                if u != v && d.has_arc(v, u) && side(u) == side(v) {
                    same += 1;
                }
            }
            let want_odd = match kind {
                PartitionKind::EvenEven => false,
                PartitionKind::EvenOdd => side(v),
            };
            if (same % 2 == 1) != want_odd {
                ok = false;
                break;
            }
        }
        if ok {
            let bits: Vec<bool> = (0..n).map(side).collect();
            return Ok(Some(Partition::from_side(BitVector::from_bools(&bits))));
        }
    }
    Ok(None)
}
