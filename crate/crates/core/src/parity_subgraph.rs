//! Parity-constrained induced subgraphs.
//!
//! Given a graph without isolated vertices and a 0/1 label per vertex,
//! [`find_parity_subgraph`] produces an induced subgraph in which every
//! 0-labeled vertex has even degree and every 1-labeled vertex has odd
//! degree. The construction splits on how the labels fall:
//!
//! * **Case I** — the 0-labeled side is large: take the bigger half of an
//!   even-even partition of the subgraph it induces.
//! * **Case II** — the 0-labeled side is small and few 1-labeled vertices
//!   lose all their neighbors when it is removed: find an all-odd induced
//!   subgraph among the rest.
//! * **Case III** — many 1-labeled vertices depend entirely on the
//!   0-labeled side: dominate them by a minimal set `D`, keep a subset `D'`
//!   of it, attach the outside vertices with an odd number of `D'`
//!   neighbors, and patch each kept dominator's parity with its private
//!   neighbor. Choosing `D'` by conditional expectations guarantees at
//!   least half the dependent vertices make it into the output.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::gallai;
use crate::gf2::BitVector;
use crate::graph::{Graph, LabelFn};
use crate::odd_subgraph::{self, EXACT_SEARCH_LIMIT};

/// Dispatch threshold as an exact fraction, constrained to `(0, 1/2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Beta {
    num: u32,
    den: u32,
}

impl Beta {
    pub fn new(num: u32, den: u32) -> Result<Self, ParitySubgraphError> {
        if num == 0 || den == 0 || 2 * num as u64 >= den as u64 {
            return Err(ParitySubgraphError::InvalidBeta { num, den });
        }
        Ok(Self { num, den })
    }

    pub fn num(&self) -> u32 {
        self.num
    }

    pub fn den(&self) -> u32 {
        self.den
    }
}

impl Default for Beta {
    fn default() -> Self {
        Self { num: 1, den: 10 }
    }
}

impl std::str::FromStr for Beta {
    type Err = String;

    /// Parses `"<num>/<den>"`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (num, den) = s
            .split_once('/')
            .ok_or_else(|| format!("expected a fraction like 1/10, got `{s}`"))?;
        let num: u32 = num.trim().parse().map_err(|_| format!("bad numerator `{num}`"))?;
        let den: u32 = den.trim().parse().map_err(|_| format!("bad denominator `{den}`"))?;
        Beta::new(num, den).map_err(|e| e.to_string())
    }
}

/// An exact fraction used to report claimed size bounds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Ratio {
    pub num: u64,
    pub den: u64,
}

impl Ratio {
    pub fn new(num: u64, den: u64) -> Self {
        assert!(den != 0, "zero denominator");
        let g = gcd(num, den);
        Self {
            num: num / g,
            den: den / g,
        }
    }

    /// Smallest integer at least as large as the fraction.
    pub fn ceil(&self) -> u64 {
        self.num.div_ceil(self.den)
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl std::fmt::Display for Ratio {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

/// Which branch of the construction produced the output.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Case {
    I,
    II,
    III,
}

impl std::fmt::Display for Case {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Case::I => write!(f, "I"),
            Case::II => write!(f, "II"),
            Case::III => write!(f, "III"),
        }
    }
}

/// A parity-correct vertex set plus provenance.
#[derive(Clone, Debug)]
pub struct SubgraphResult {
    /// The vertex set `U`, ascending. Every member's degree in the induced
    /// subgraph matches its label modulo 2.
    pub vertices: Vec<usize>,
    pub case_used: Case,
    /// The lower bound on `|U|` claimed by the case that fired.
    pub size_bound_claimed: Ratio,
}

/// How Case III picks the kept dominator subset.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Case3Mode {
    /// Fix dominators one at a time, never letting the conditional
    /// expectation of the output size drop. Guarantees the half bound.
    Derandomized,
    /// Sample uniformly with the given seed and retry until the half bound
    /// holds (a few tries suffice on average); falls back to the
    /// derandomized rule after [`RANDOM_ATTEMPTS`] misses.
    SeededRandom { seed: u64 },
}

/// Retry budget of [`Case3Mode::SeededRandom`] before falling back.
pub const RANDOM_ATTEMPTS: usize = 32;

/// Tunables for [`find_parity_subgraph_with`].
#[derive(Clone, Copy, Debug)]
pub struct Options {
    pub beta: Beta,
    pub case3_mode: Case3Mode,
    /// Order up to which Case II uses the exact subset search instead of
    /// the local-search heuristic.
    pub exact_limit: usize,
    /// Seed for the Case II heuristic.
    pub heuristic_seed: u64,
}

impl Default for Options {
    fn default() -> Self {
        Self {
            beta: Beta::default(),
            case3_mode: Case3Mode::Derandomized,
            exact_limit: EXACT_SEARCH_LIMIT,
            heuristic_seed: 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParitySubgraphError {
    #[error("vertex {0} is isolated")]
    IsolatedVertex(usize),
    #[error("label count {got} does not match vertex count {expected}")]
    LabelLength { got: usize, expected: usize },
    #[error("threshold must lie strictly between 0 and 1/2, got {num}/{den}")]
    InvalidBeta { num: u32, den: u32 },
    #[error("vertex {0} has no neighbor among the candidate dominators")]
    Undominatable(usize),
    #[error("vertices {0} and {1} are adjacent but should form an independent set")]
    NotIndependent(usize, usize),
}

/// Runs the construction with default options: threshold 1/10 and the
/// derandomized Case III rule.
pub fn find_parity_subgraph(g: &Graph, f: &LabelFn) -> Result<SubgraphResult, ParitySubgraphError> {
    find_parity_subgraph_with(g, f, &Options::default())
}

/// Runs the construction, dispatching on the label balance exactly as the
/// case analysis dictates: Case I iff `|V0| >= beta * n`; otherwise Case II
/// iff at most `(1 - 2 beta) * n` of the 1-labeled vertices are isolated
/// once `V0` is removed; otherwise Case III. Ties resolve toward Case II.
pub fn find_parity_subgraph_with(
    g: &Graph,
    f: &LabelFn,
    opts: &Options,
) -> Result<SubgraphResult, ParitySubgraphError> {
    let n = g.n();
    if f.len() != n {
        return Err(ParitySubgraphError::LabelLength {
            got: f.len(),
            expected: n,
        });
    }
    if n == 0 {
        return Ok(SubgraphResult {
            vertices: Vec::new(),
            case_used: Case::I,
            size_bound_claimed: Ratio::new(0, 1),
        });
    }
    if let Some(&v) = g.isolated_vertices().first() {
        return Err(ParitySubgraphError::IsolatedVertex(v));
    }
    let beta = opts.beta;
    let v0 = f.vertices_labeled(false);

    if v0.len() as u64 * beta.den as u64 >= beta.num as u64 * n as u64 {
        let vertices = case1(g, &v0);
        return Ok(SubgraphResult {
            vertices,
            case_used: Case::I,
            size_bound_claimed: Ratio::new(v0.len() as u64, 2),
        });
    }

    let dependent = isolated_after_removal(g, f);
    if dependent.len() as u64 * beta.den as u64
        <= (beta.den as u64 - 2 * beta.num as u64) * n as u64
    {
        let vertices = case2(g, &v0, opts.exact_limit, opts.heuristic_seed);
        Ok(SubgraphResult {
            vertices,
            case_used: Case::II,
            // The linear-size target of the odd-subgraph step: c * beta * n
            // with c = 1/10000. Validity always holds; the size is
            // best-effort above the exact-search limit.
            size_bound_claimed: Ratio::new(n as u64 * beta.num as u64, 10_000 * beta.den as u64),
        })
    } else {
        let state = case3_state(g, &v0, &dependent, opts.case3_mode)?;
        Ok(SubgraphResult {
            vertices: state.vertices(),
            case_used: Case::III,
            size_bound_claimed: Ratio::new(dependent.len() as u64, 2),
        })
    }
}

/// 1-labeled vertices that become isolated when the 0-labeled side is
/// removed, i.e. whose neighbors all carry label 0.
fn isolated_after_removal(g: &Graph, f: &LabelFn) -> Vec<usize> {
    (0..g.n())
        .filter(|&v| f.get(v) && g.neighbors(v).and(f.bits()).is_zero())
        .collect()
}

/// Runs every applicable branch and returns the largest valid output.
/// Case I applies when some vertex is 0-labeled, Case II when a 1-labeled
/// vertex keeps a 1-labeled neighbor, Case III when some 1-labeled vertex
/// depends entirely on the 0-labeled side.
pub fn best_effort_parity_subgraph(
    g: &Graph,
    f: &LabelFn,
    opts: &Options,
) -> Result<SubgraphResult, ParitySubgraphError> {
    let n = g.n();
    if f.len() != n {
        return Err(ParitySubgraphError::LabelLength {
            got: f.len(),
            expected: n,
        });
    }
    if n == 0 {
        return find_parity_subgraph_with(g, f, opts);
    }
    if let Some(&v) = g.isolated_vertices().first() {
        return Err(ParitySubgraphError::IsolatedVertex(v));
    }
    let v0 = f.vertices_labeled(false);
    let dependent = isolated_after_removal(g, f);

    let mut candidates: Vec<SubgraphResult> = Vec::new();
    if !v0.is_empty() {
        candidates.push(SubgraphResult {
            vertices: case1(g, &v0),
            case_used: Case::I,
            size_bound_claimed: Ratio::new(v0.len() as u64, 2),
        });
    }
    if v0.len() + dependent.len() < n {
        candidates.push(SubgraphResult {
            vertices: case2(g, &v0, opts.exact_limit, opts.heuristic_seed),
            case_used: Case::II,
            size_bound_claimed: Ratio::new(
                n as u64 * opts.beta.num as u64,
                10_000 * opts.beta.den as u64,
            ),
        });
    }
    if !dependent.is_empty() {
        let state = case3_state(g, &v0, &dependent, opts.case3_mode)?;
        candidates.push(SubgraphResult {
            vertices: state.vertices(),
            case_used: Case::III,
            size_bound_claimed: Ratio::new(dependent.len() as u64, 2),
        });
    }
    Ok(candidates
        .into_iter()
        .max_by_key(|c| c.vertices.len())
        .expect("some branch applies to a nonempty graph without isolated vertices"))
}

/// Case I: the larger part of an even-even partition of the subgraph
/// induced on `v0`. Every returned vertex keeps even degree, and the
/// result has at least `ceil(|v0| / 2)` vertices.
pub fn case1(g: &Graph, v0: &[usize]) -> Vec<usize> {
    let (sub, map) = g.induced_subgraph(v0);
    let partition = gallai::even_even_partition(&sub);
    let mut zeros = Vec::new();
    let mut ones = Vec::new();
    for i in 0..sub.n() {
        if partition.side_of(i) {
            ones.push(map[i]);
        } else {
            zeros.push(map[i]);
        }
    }
    if zeros.len() >= ones.len() {
        zeros
    } else {
        ones
    }
}

/// Case II: an all-odd induced subgraph of what remains after dropping
/// `v0` and the vertices it leaves isolated. Uses the exact search up to
/// `exact_limit` vertices and the seeded heuristic beyond.
pub fn case2(g: &Graph, v0: &[usize], exact_limit: usize, seed: u64) -> Vec<usize> {
    let n = g.n();
    let v0_mask = BitVector::from_indices(n, v0);
    let rest: Vec<usize> = (0..n).filter(|&v| !v0_mask.get(v)).collect();
    let (g1, map1) = g.induced_subgraph(&rest);
    let keep: Vec<usize> = (0..g1.n()).filter(|&i| g1.degree(i) > 0).collect();
    let (h, maph) = g1.induced_subgraph(&keep);
    let found = if h.n() <= exact_limit {
        odd_subgraph::exact_max_odd_subgraph(&h).expect("order is within the exact limit")
    } else {
        odd_subgraph::heuristic_odd_subgraph(&h, seed)
            .expect("isolated vertices were removed above")
    };
    let mut out: Vec<usize> = found.into_iter().map(|i| map1[maph[i]]).collect();
    out.sort_unstable();
    out
}

/// The pieces of the Case III construction.
#[derive(Clone, Debug)]
pub struct Case3State {
    /// Minimal subset of the 0-labeled side dominating the dependent set.
    pub dominating: Vec<usize>,
    /// For each dominator `w`, a dependent vertex adjacent to `w` and to no
    /// other dominator, as `(w, private)` pairs.
    pub private: Vec<(usize, usize)>,
    /// The kept dominators `D'`.
    pub chosen: Vec<usize>,
    /// Non-private dependent vertices with an odd number of neighbors in
    /// `chosen`.
    pub i0: Vec<usize>,
    /// Private neighbors added to make their dominator's degree even.
    pub i1: Vec<usize>,
}

impl Case3State {
    /// The output vertex set `D' ∪ I0 ∪ I1`, ascending.
    pub fn vertices(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .chosen
            .iter()
            .chain(&self.i0)
            .chain(&self.i1)
            .copied()
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}

/// Case III: returns just the output vertex set; see [`case3_state`] for
/// the intermediate pieces.
pub fn case3(
    g: &Graph,
    v0: &[usize],
    dependent: &[usize],
    mode: Case3Mode,
) -> Result<Vec<usize>, ParitySubgraphError> {
    Ok(case3_state(g, v0, dependent, mode)?.vertices())
}

/// Runs the dominating-set construction on the `dependent` vertices (each
/// must have a neighbor in `v0` and no neighbor inside `dependent`).
///
/// In derandomized mode the output has at least `ceil(|dependent| / 2)`
/// vertices; in seeded-random mode sampling retries until that bound holds,
/// falling back to the derandomized rule after [`RANDOM_ATTEMPTS`] misses.
pub fn case3_state(
    g: &Graph,
    v0: &[usize],
    dependent: &[usize],
    mode: Case3Mode,
) -> Result<Case3State, ParitySubgraphError> {
    let n = g.n();
    let dep_mask = BitVector::from_indices(n, dependent);
    for &u in dependent {
        if let Some(nb) = g.neighbors(u).and(&dep_mask).ones().next() {
            return Err(ParitySubgraphError::NotIndependent(u, nb));
        }
    }

    let (dominating, private) = minimal_dominating_set(g, dependent, v0)?;
    let private_mask = BitVector::from_indices(n, &private.iter().map(|&(_, u)| u).collect::<Vec<_>>());
    let fringe: Vec<usize> = dependent
        .iter()
        .copied()
        .filter(|&u| !private_mask.get(u))
        .collect();

    let target = dependent.len().div_ceil(2);
    let chosen = match mode {
        Case3Mode::Derandomized => derandomized_choice(g, &dominating, &fringe),
        Case3Mode::SeededRandom { seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut found = None;
            for _ in 0..RANDOM_ATTEMPTS {
                let sample: Vec<usize> = dominating
                    .iter()
                    .copied()
                    .filter(|_| rng.random_bool(0.5))
                    .collect();
                let (i0, i1) = attach_sets(g, &sample, &fringe, &private);
                if sample.len() + i0.len() + i1.len() >= target {
                    found = Some(sample);
                    break;
                }
            }
            found.unwrap_or_else(|| derandomized_choice(g, &dominating, &fringe))
        }
    };

    let (i0, i1) = attach_sets(g, &chosen, &fringe, &private);
    let state = Case3State {
        dominating,
        private,
        chosen,
        i0,
        i1,
    };
    debug_assert!(state.vertices().len() >= target);
    Ok(state)
}

/// Given the kept dominators, derives the two attachment sets: fringe
/// vertices with an odd number of kept neighbors, and private neighbors of
/// kept dominators whose degree among kept-plus-attached is odd.
fn attach_sets(
    g: &Graph,
    chosen: &[usize],
    fringe: &[usize],
    private: &[(usize, usize)],
) -> (Vec<usize>, Vec<usize>) {
    let n = g.n();
    let chosen_mask = BitVector::from_indices(n, chosen);
    let i0: Vec<usize> = fringe
        .iter()
        .copied()
        .filter(|&u| g.neighbors(u).dot(&chosen_mask))
        .collect();
    let mut with_i0 = chosen_mask.clone();
    for &u in &i0 {
        with_i0.set(u, true);
    }
    let i1: Vec<usize> = private
        .iter()
        .filter(|&&(w, _)| chosen_mask.get(w) && g.neighbors(w).dot(&with_i0))
        .map(|&(_, u)| u)
        .collect();
    (i0, i1)
}

/// Fixes the dominators one at a time in index order, keeping each one iff
/// doing so does not lower the conditional expectation of
/// `|D'| + |I0|` (fringe vertices count 1/2 until their last undecided
/// dominator neighbor is fixed). The final value is therefore at least the
/// initial expectation `(|D| + |fringe|) / 2`.
fn derandomized_choice(g: &Graph, dominating: &[usize], fringe: &[usize]) -> Vec<usize> {
    let n = g.n();
    let dom_mask = BitVector::from_indices(n, dominating);
    let fringe_mask = BitVector::from_indices(n, fringe);
    let mut undecided = vec![0u32; n];
    let mut parity = vec![false; n];
    for &u in fringe {
        undecided[u] = g.neighbors(u).and(&dom_mask).count_ones() as u32;
    }
    let mut chosen = Vec::new();
    for &w in dominating {
        // Doubled difference E[in] - E[out]; only fringe vertices whose last
        // undecided dominator is w change their contribution.
        let mut delta: i64 = 2;
        for u in g.neighbors(w).ones() {
            if fringe_mask.get(u) && undecided[u] == 1 {
                delta += if parity[u] { -2 } else { 2 };
            }
        }
        let include = delta >= 0;
        for u in g.neighbors(w).ones() {
            if fringe_mask.get(u) {
                undecided[u] -= 1;
                if include {
                    parity[u] = !parity[u];
                }
            }
        }
        if include {
            chosen.push(w);
        }
    }
    chosen
}

/// A minimal subset of `pool` dominating `targets`, together with a private
/// neighbor for each member: a target adjacent to it and to no other member.
///
/// Built greedily by repeatedly taking the pool vertex covering the most
/// uncovered targets (ties to the lowest index), then pruning redundant
/// members in index order; minimality makes the private map total.
pub fn minimal_dominating_set(
    g: &Graph,
    targets: &[usize],
    pool: &[usize],
) -> Result<(Vec<usize>, Vec<(usize, usize)>), ParitySubgraphError> {
    let n = g.n();
    let pool_mask = BitVector::from_indices(n, pool);
    for &u in targets {
        if g.neighbors(u).and(&pool_mask).is_zero() {
            return Err(ParitySubgraphError::Undominatable(u));
        }
    }

    let mut uncovered = BitVector::from_indices(n, targets);
    let mut dom: Vec<usize> = Vec::new();
    while !uncovered.is_zero() {
        let mut best = usize::MAX;
        let mut best_cover = 0;
        for &w in pool {
            let cover = g.neighbors(w).and(&uncovered).count_ones();
            if cover > best_cover {
                best_cover = cover;
                best = w;
            }
        }
        debug_assert!(best_cover > 0, "every target has a pool neighbor");
        uncovered.and_not_assign(g.neighbors(best));
        dom.push(best);
    }
    dom.sort_unstable();

    // Prune in index order: a member stays only if some target depends on it.
    let mut keep = dom.clone();
    let mut idx = 0;
    while idx < keep.len() {
        let without: Vec<usize> = keep
            .iter()
            .copied()
            .filter(|&w| w != keep[idx])
            .collect();
        let mask = BitVector::from_indices(n, &without);
        let still_dominated = targets.iter().all(|&u| !g.neighbors(u).and(&mask).is_zero());
        if still_dominated {
            keep.remove(idx);
        } else {
            idx += 1;
        }
    }

    let keep_mask = BitVector::from_indices(n, &keep);
    let mut private = Vec::with_capacity(keep.len());
    for &w in &keep {
        let u = targets
            .iter()
            .copied()
            .find(|&u| {
                g.has_edge(u, w) && g.neighbors(u).and(&keep_mask).count_ones() == 1
            })
            .expect("minimality guarantees a private neighbor");
        private.push((w, u));
    }
    Ok((keep, private))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    /// Direct-count validity: every chosen vertex's degree inside the
    /// choice matches its label.
    fn verify(g: &Graph, f: &LabelFn, chosen: &[usize]) -> bool {
        chosen.iter().all(|&u| {
            let degree = chosen
                .iter()
                .filter(|&&v| v != u && g.has_edge(u, v))
                .count();
            (degree % 2 == 1) == f.get(u)
        })
    }

    #[test]
    fn all_ones_on_single_edge() {
        let g = Graph::from_edges(2, &[(0, 1)]);
        let res = find_parity_subgraph(&g, &LabelFn::all_one(2)).unwrap();
        assert_eq!(res.vertices, vec![0, 1]);
        assert!(verify(&g, &LabelFn::all_one(2), &res.vertices));
    }

    #[test]
    fn all_zeros_goes_through_case1() {
        let mut rng = ChaCha8Rng::seed_from_u64(701);
        for _ in 0..50 {
            let n = rng.random_range(2..=30);
            let g = generate::gnp_without_isolates(n, 0.3, &mut rng);
            let f = LabelFn::all_zero(n);
            let res = find_parity_subgraph(&g, &f).unwrap();
            assert_eq!(res.case_used, Case::I);
            assert!(res.vertices.len() >= n.div_ceil(2));
            assert!(verify(&g, &f, &res.vertices));
        }
    }

    #[test]
    fn big_star_goes_through_case3() {
        // Center labeled 0, 19 leaves labeled 1: removing the center
        // isolates every leaf, and 19 > (1 - 2/10) * 20.
        let g = generate::star(20);
        let mut bits = BitVector::zeros(20);
        for v in 1..20 {
            bits.set(v, true);
        }
        let f = LabelFn::new(bits);
        let res = find_parity_subgraph(&g, &f).unwrap();
        assert_eq!(res.case_used, Case::III);
        assert!(res.vertices.len() >= 10);
        assert!(verify(&g, &f, &res.vertices));
    }

    #[test]
    fn empty_graph_yields_empty_set() {
        let res = find_parity_subgraph(&Graph::empty(0), &LabelFn::all_zero(0)).unwrap();
        assert!(res.vertices.is_empty());
    }

    #[test]
    fn isolated_vertex_is_reported() {
        let mut g = Graph::empty(3);
        g.add_edge(0, 2);
        let err = find_parity_subgraph(&g, &LabelFn::all_one(3)).unwrap_err();
        assert_eq!(err, ParitySubgraphError::IsolatedVertex(1));
    }

    #[test]
    fn beta_validation() {
        assert!(Beta::new(1, 10).is_ok());
        assert!(Beta::new(1, 3).is_ok());
        assert!(Beta::new(0, 5).is_err());
        assert!(Beta::new(1, 2).is_err());
        assert!(Beta::new(3, 5).is_err());
        assert_eq!("2/5".parse::<Beta>().unwrap(), Beta::new(2, 5).unwrap());
        assert!("half".parse::<Beta>().is_err());
    }

    #[test]
    fn case1_trivial_inputs() {
        // Edgeless induced subgraph: the whole side is valid whenever the
        // solver returns the empty odd side.
        let g = Graph::from_edges(4, &[(0, 1)]);
        let picked = case1(&g, &[2, 3]);
        assert_eq!(picked.len(), 2);

        // A triangle already has all degrees even.
        let k3 = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]);
        let picked = case1(&k3, &[0, 1, 2]);
        assert_eq!(picked, vec![0, 1, 2]);
    }

    #[test]
    fn case1_random_bound_and_parity() {
        let mut rng = ChaCha8Rng::seed_from_u64(709);
        for _ in 0..50 {
            let g = generate::gnp(30, 0.4, &mut rng);
            let v0: Vec<usize> = (0..15).collect();
            let picked = case1(&g, &v0);
            assert!(picked.len() >= 8);
            let f = LabelFn::all_zero(30);
            assert!(verify(&g, &f, &picked));
            assert!(picked.iter().all(|v| v0.contains(v)));
        }
    }

    #[test]
    fn case2_on_perfect_matching_keeps_everything() {
        let g = generate::perfect_matching(8);
        let picked = case2(&g, &[], EXACT_SEARCH_LIMIT, 0);
        assert_eq!(picked, (0..8).collect::<Vec<_>>());
    }

    #[test]
    fn case2_on_path_keeps_an_edge() {
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]);
        let picked = case2(&p3, &[], EXACT_SEARCH_LIMIT, 0);
        assert_eq!(picked.len(), 2);
        assert!(odd_subgraph::is_odd_subgraph(&p3, &picked));
    }

    #[test]
    fn case3_single_pair() {
        let g = Graph::from_edges(2, &[(0, 1)]);
        let state = case3_state(&g, &[0], &[1], Case3Mode::Derandomized).unwrap();
        assert_eq!(state.dominating, vec![0]);
        assert_eq!(state.private, vec![(0, 1)]);
        let u = state.vertices();
        assert!(u.len() >= 1);
        let mut bits = BitVector::zeros(2);
        bits.set(1, true);
        assert!(verify(&g, &LabelFn::new(bits), &u));
    }

    #[test]
    fn case3_star_keeps_center_and_most_leaves() {
        let g = generate::star(10);
        let leaves: Vec<usize> = (1..10).collect();
        let state = case3_state(&g, &[0], &leaves, Case3Mode::Derandomized).unwrap();
        let u = state.vertices();
        assert!(u.len() >= 5);
        let mut bits = BitVector::zeros(10);
        for v in 1..10 {
            bits.set(v, true);
        }
        assert!(verify(&g, &LabelFn::new(bits), &u));
    }

    #[test]
    fn case3_random_instances_meet_the_half_bound() {
        let mut rng = ChaCha8Rng::seed_from_u64(719);
        for round in 0..500u64 {
            let holders = rng.random_range(1..=6);
            let leaves = rng.random_range(1..=30);
            let n = holders + leaves;
            let mut g = Graph::empty(n);
            // Every leaf attaches to a nonempty random subset of holders.
            for u in holders..n {
                let mut any = false;
                for w in 0..holders {
                    if rng.random_bool(0.4) {
                        g.add_edge(u, w);
                        any = true;
                    }
                }
                if !any {
                    g.add_edge(u, rng.random_range(0..holders));
                }
            }
            // Optional edges among holders.
            for a in 0..holders {
                for b in a + 1..holders {
                    if rng.random_bool(0.3) {
                        g.add_edge(a, b);
                    }
                }
            }
            let v0: Vec<usize> = (0..holders).collect();
            let dependent: Vec<usize> = (holders..n).collect();
            let mode = if round % 2 == 0 {
                Case3Mode::Derandomized
            } else {
                Case3Mode::SeededRandom { seed: round }
            };
            let state = case3_state(&g, &v0, &dependent, mode).unwrap();
            let u = state.vertices();
            assert!(
                u.len() >= dependent.len().div_ceil(2),
                "|U| = {} below half of {}",
                u.len(),
                dependent.len()
            );
            let mut bits = BitVector::zeros(n);
            for v in &dependent {
                bits.set(*v, true);
            }
            assert!(verify(&g, &LabelFn::new(bits), &u));

            // The kept dominators' parity bookkeeping, both sides computed
            // independently.
            let u_mask = BitVector::from_indices(n, &u);
            for &w in &state.chosen {
                let in_u = g.neighbors(w).and(&u_mask).count_ones();
                assert_eq!(in_u % 2, 0);
                let in_chosen = state
                    .chosen
                    .iter()
                    .filter(|&&x| x != w && g.has_edge(w, x))
                    .count();
                let in_i0 = state.i0.iter().filter(|&&x| g.has_edge(w, x)).count();
                let patched = state
                    .private
                    .iter()
                    .any(|&(pw, pu)| pw == w && state.i1.contains(&pu));
                assert_eq!((in_chosen + in_i0 + patched as usize) % 2, 0);
            }
        }
    }

    #[test]
    fn case3_rejects_bad_preconditions() {
        let mut g = Graph::empty(4);
        g.add_edge(0, 1);
        g.add_edge(2, 3);
        // 3 has no neighbor in the pool {0}.
        let err = case3(&g, &[0], &[1, 3], Case3Mode::Derandomized).unwrap_err();
        assert_eq!(err, ParitySubgraphError::Undominatable(3));
        // 2 and 3 are adjacent.
        let err = case3(&g, &[0, 1], &[2, 3], Case3Mode::Derandomized).unwrap_err();
        assert!(matches!(err, ParitySubgraphError::NotIndependent(_, _)));
    }

    #[test]
    fn dominating_set_trivial_shapes() {
        // One pool vertex adjacent to everything.
        let g = generate::star(6);
        let (dom, private) = minimal_dominating_set(&g, &[1, 2, 3, 4, 5], &[0]).unwrap();
        assert_eq!(dom, vec![0]);
        assert_eq!(private.len(), 1);

        // Perfect matching: every pool vertex is needed.
        let g = Graph::from_edges(6, &[(0, 3), (1, 4), (2, 5)]);
        let (dom, private) = minimal_dominating_set(&g, &[3, 4, 5], &[0, 1, 2]).unwrap();
        assert_eq!(dom, vec![0, 1, 2]);
        assert_eq!(
            private,
            vec![(0, 3), (1, 4), (2, 5)]
        );
    }

    #[test]
    fn dominating_set_is_minimal_with_true_privates() {
        let mut rng = ChaCha8Rng::seed_from_u64(727);
        for _ in 0..200 {
            let pool_size = rng.random_range(1..=6);
            let target_count = rng.random_range(1..=8);
            let n = pool_size + target_count;
            let mut g = Graph::empty(n);
            for u in pool_size..n {
                let mut any = false;
                for w in 0..pool_size {
                    if rng.random_bool(0.5) {
                        g.add_edge(u, w);
                        any = true;
                    }
                }
                if !any {
                    g.add_edge(u, rng.random_range(0..pool_size));
                }
            }
            let pool: Vec<usize> = (0..pool_size).collect();
            let targets: Vec<usize> = (pool_size..n).collect();
            let (dom, private) = minimal_dominating_set(&g, &targets, &pool).unwrap();

            //

            // Dominates, and no single removal still dominates.
            let dominates = |set: &[usize]| {
                targets
                    .iter()
                    .all(|&u| set.iter().any(|&w| g.has_edge(u, w)))
            };
            assert!(dominates(&dom));
            for &w in &dom {
                let without: Vec<usize> = dom.iter().copied().filter(|&x| x != w).collect();
                assert!(!dominates(&without), "{w} is redundant in {dom:?}");
            }
            for &(w, u) in &private {
                assert!(g.has_edge(u, w));
                assert_eq!(dom.iter().filter(|&&x| g.has_edge(u, x)).count(), 1);
            }
            assert_eq!(private.len(), dom.len());
        }
    }

    #[test]
    fn dispatch_is_a_function_of_the_counts() {
        // beta = 1/10, n = 20: |V0| >= 2 fires Case I; otherwise |I| <= 16
        // fires Case II, else Case III.
        let g = generate::star(20);
        let mut bits = BitVector::zeros(20);
        for v in 2..20 {
            bits.set(v, true);
        }
        // Two zeros: Case I.
        let res = find_parity_subgraph(&g, &LabelFn::new(bits.clone())).unwrap();
        assert_eq!(res.case_used, Case::I);

        // One zero (the center): every leaf is dependent, Case III.
        bits.set(1, true);
        let res = find_parity_subgraph(&g, &LabelFn::new(bits)).unwrap();
        assert_eq!(res.case_used, Case::III);

        // All ones on a matching: nothing is dependent, Case II.
        let m = generate::perfect_matching(20);
        let res = find_parity_subgraph(&m, &LabelFn::all_one(20)).unwrap();
        assert_eq!(res.case_used, Case::II);
    }

    #[test]
    fn strict_and_best_effort_agree_on_validity() {
        let mut rng = ChaCha8Rng::seed_from_u64(733);
        for round in 0..200u64 {
            let n = rng.random_range(2..=40);
            let g = generate::gnp_without_isolates(n, 0.25, &mut rng);
            let f = generate::random_labels(n, 0.7, &mut rng);
            let opts = Options {
                heuristic_seed: round,
                ..Options::default()
            };
            let strict = find_parity_subgraph_with(&g, &f, &opts).unwrap();
            assert!(verify(&g, &f, &strict.vertices));
            let best = best_effort_parity_subgraph(&g, &f, &opts).unwrap();
            assert!(verify(&g, &f, &best.vertices));
            assert!(best.vertices.len() >= strict.vertices.len());
        }
    }

    #[test]
    fn random_subset_parity_is_roughly_balanced() {
        // Smoke-scale version of the frequency property: fringe vertices see
        // an odd kept-neighbor count about half the time.
        let mut rng = ChaCha8Rng::seed_from_u64(739);
        let g = generate::star(12);
        let leaves: Vec<usize> = (1..12).collect();
        let (dom, private) = minimal_dominating_set(&g, &leaves, &[0]).unwrap();
        let private_first = private[0].1;
        let samples = 2000;
        let mut odd = vec![0u32; 12];
        for _ in 0..samples {
            let chosen: Vec<usize> = dom
                .iter()
                .copied()
                .filter(|_| rng.random_bool(0.5))
                .collect();
            for &u in leaves.iter().filter(|&&u| u != private_first) {
                let c = chosen.iter().filter(|&&w| g.has_edge(u, w)).count();
                if c % 2 == 1 {
                    odd[u] += 1;
                }
            }
        }
        for &u in leaves.iter().filter(|&&u| u != private_first) {
            let freq = odd[u] as f64 / samples as f64;
            assert!((freq - 0.5).abs() < 0.05, "vertex {u}: {freq}");
        }
    }
}
