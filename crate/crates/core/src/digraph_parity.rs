//! Out-degree parity partitions of digraphs.
//!
//! Unlike the undirected case these do not always exist. Existence is
//! equivalent to the consistency of a GF(2) linear system: with `M` the
//! adjacency matrix and `p` the out-degree parity vector, the parity of the
//! number of out-neighbors of `v` inside its own part under side vector `s`
//! is `(M s)_v + p_v s_v + p_v`, so even-even partitions are the solutions
//! of `(M + diag(p)) s = p` and even-odd partitions the solutions of
//! `(M + I + diag(p)) s = p`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::gallai;
use crate::gf2::{self, BitMatrix, BitVector};
use crate::graph::{Digraph, Graph, Partition};

/// Which parity pattern the two parts must realize.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PartitionKind {
    /// Every vertex has an even number of out-neighbors in its own part.
    EvenEven,
    /// Vertices of `V0` have even, vertices of `V1` odd counts.
    EvenOdd,
}

impl std::fmt::Display for PartitionKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PartitionKind::EvenEven => write!(f, "even-even"),
            PartitionKind::EvenOdd => write!(f, "even-odd"),
        }
    }
}

/// A partition together with the recomputed per-vertex parity counts.
#[derive(Clone, Debug)]
pub struct ParityWitness {
    pub partition: Partition,
    /// Bit `v` is the parity of the number of out-neighbors of `v` lying in
    /// the same part as `v`, counted directly from the digraph.
    pub per_vertex_check: BitVector,
}

impl ParityWitness {
    /// Recomputes the per-vertex checks for `partition` by direct counting.
    pub fn compute(d: &Digraph, partition: &Partition) -> Self {
        let mut check = BitVector::zeros(d.n());
        for v in 0..d.n() {
            check.set(v, same_part_out_parity(d, partition.side(), v));
        }
        Self {
            partition: partition.clone(),
            per_vertex_check: check,
        }
    }

    /// Whether the counted parities match the required pattern.
    pub fn satisfies(&self, kind: PartitionKind) -> bool {
        match kind {
            PartitionKind::EvenEven => self.per_vertex_check.is_zero(),
            PartitionKind::EvenOdd => (0..self.partition.n())
                .all(|v| self.per_vertex_check.get(v) == self.partition.side_of(v)),
        }
    }
}

/// The coefficient matrix and right-hand side of the parity system.
fn parity_system(d: &Digraph, kind: PartitionKind) -> (BitMatrix, BitVector) {
    let p = d.out_parity_vector();
    let mut a = d.adjacency().clone();
    match kind {
        PartitionKind::EvenEven => {
            for v in p.ones() {
                a.flip(v, v);
            }
        }
        PartitionKind::EvenOdd => {
            for v in 0..d.n() {
                if !p.get(v) {
                    a.set(v, v, true);
                }
            }
        }
    }
    (a, p)
}

/// Solution of the parity system, keeping the kernel around so callers can
/// walk the full solution set.
pub struct PartitionSolve {
    /// The solver's particular solution (free variables zero), if any.
    pub partition: Option<Partition>,
    /// Kernel basis of the system; the solution set is the particular
    /// solution shifted by its span, so there are `2^kernel.len()` in total.
    pub kernel: Vec<BitVector>,
}

/// Decides existence for the requested kind and returns the solver's
/// partition plus the kernel of the system.
pub fn solve_partition(d: &Digraph, kind: PartitionKind) -> PartitionSolve {
    let (a, p) = parity_system(d, kind);
    let outcome = gf2::solve_with_kernel(&a, &p);
    PartitionSolve {
        partition: outcome.particular.map(Partition::from_side),
        kernel: outcome.kernel,
    }
}

/// A partition where every vertex has an even number of out-neighbors in
/// its own part, or `None` when no such partition exists.
pub fn even_even_partition(d: &Digraph) -> Option<Partition> {
    solve_partition(d, PartitionKind::EvenEven).partition
}

/// A partition where `V0` vertices have even and `V1` vertices odd
/// same-part out-neighbor counts, or `None` when none exists.
pub fn even_odd_partition(d: &Digraph) -> Option<Partition> {
    solve_partition(d, PartitionKind::EvenOdd).partition
}

/// Parity of `|{u : v -> u, s_u = s_v}|`, counted from the adjacency row.
///
/// # Panics
///
/// Panics if `s.len() != d.n()`.
pub fn same_part_out_parity(d: &Digraph, s: &BitVector, v: usize) -> bool {
    assert_eq!(s.len(), d.n(), "side vector length does not match order");
    let row = d.out_neighbors(v);
    let mut in_side = 0u32;
    let mut total = 0u32;
    for (rw, sw) in row.words().iter().zip(s.words()) {
        in_side ^= (rw & sw).count_ones();
        total ^= rw.count_ones();
    }
    let odd_in_side = in_side & 1 == 1;
    if s.get(v) {
        odd_in_side
    } else {
        odd_in_side ^ (total & 1 == 1)
    }
}

/// Up to `limit` distinct valid partitions of the requested kind, starting
/// from the particular solution and walking the kernel span in index order.
/// When the system is consistent the full solution set has size
/// `2^(kernel dimension)`.
pub fn enumerate_partitions(d: &Digraph, kind: PartitionKind, limit: usize) -> Vec<Partition> {
    let solve = solve_partition(d, kind);
    let Some(base) = solve.partition else {
        return Vec::new();
    };
    let dim = solve.kernel.len();
    let total = if dim >= usize::BITS as usize {
        usize::MAX
    } else {
        1usize << dim
    };
    let count = total.min(limit);
    let mut out = Vec::with_capacity(count);
    for index in 0..count {
        let mut side = base.side().clone();
        for (j, basis) in solve.kernel.iter().enumerate().take(usize::BITS as usize) {
            if index >> j & 1 == 1 {
                side.xor_assign(basis);
            }
        }
        out.push(Partition::from_side(side));
    }
    out
}

/// Precondition failure of [`remark_family_generate`].
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("vertex {vertex} of the inner digraph has odd out-degree {degree}")]
pub struct RemarkFamilyError {
    pub vertex: usize,
    pub degree: usize,
}

/// Builds a member of a digraph family guaranteed to admit both an
/// even-even and an even-odd partition.
///
/// The output consists of the symmetrization of `symmetric_part` on
/// vertices `0..w`, a copy of `even_part` (which must have all out-degrees
/// even) on vertices `w..w+u`, and seeded random cross arcs from the second
/// block into the first, chosen so that every second-block vertex sends an
/// even number of arcs into the even side of each degree-parity partition
/// of `symmetric_part`. Those two evenness constraints are independent per
/// vertex once the first block is cut into the four intersections of the
/// two partitions, so each block gets an even-size random subset.
pub fn remark_family_generate(
    symmetric_part: &Graph,
    even_part: &Digraph,
    cross_arc_seed: u64,
) -> Result<Digraph, RemarkFamilyError> {
    for v in 0..even_part.n() {
        let degree = even_part.out_degree(v);
        if degree % 2 == 1 {
            return Err(RemarkFamilyError { vertex: v, degree });
        }
    }
    let w = symmetric_part.n();
    let u = even_part.n();

    let even_side = gallai::even_even_partition(symmetric_part);
    let odd_side = gallai::odd_even_partition(symmetric_part);
    let mut blocks: [Vec<usize>; 4] = Default::default();
    for x in 0..w {
        let idx = (even_side.side_of(x) as usize) << 1 | odd_side.side_of(x) as usize;
        blocks[idx].push(x);
    }

    let mut d = Digraph::empty(w + u);
    for (a, b) in symmetric_part.edges() {
        d.add_arc(a, b);
        d.add_arc(b, a);
    }
    for (a, b) in even_part.arcs() {
        d.add_arc(w + a, w + b);
    }

    let mut rng = ChaCha8Rng::seed_from_u64(cross_arc_seed);
    for x in 0..u {
        for block in &blocks {
            let mut chosen: Vec<usize> = block
                .iter()
                .copied()
                .filter(|_| rng.random_bool(0.5))
                .collect();
            if chosen.len() % 2 == 1 {
                // Flip one member to restore even size.
                let pick = block[rng.random_range(0..block.len())];
                match chosen.iter().position(|&c| c == pick) {
                    Some(at) => {
                        chosen.remove(at);
                    }
                    None => chosen.push(pick),
                }
            }
            for target in chosen {
                d.add_arc(w + x, target);
            }
        }
    }
    Ok(d)
}
