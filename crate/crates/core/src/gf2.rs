//! Dense linear algebra over GF(2) with word-packed rows.
//!
//! Vectors and matrices store 64 bits per machine word. Gaussian
//! elimination works row by row on whole words, which is what makes the
//! solver fast enough for systems with a few thousand unknowns.

use std::fmt;

use rand::Rng;

const WORD_BITS: usize = 64;

fn words_for(len: usize) -> usize {
    len.div_ceil(WORD_BITS)
}

/// A vector over GF(2), packed 64 bits per word (little-endian bit order
/// within each word).
///
/// Invariant: bits at positions `>= len` in the last word are always zero,
/// so word-level operations never leak stray bits.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct BitVector {
    len: usize,
    words: Vec<u64>,
}

impl BitVector {
    /// The zero vector of the given length.
    pub fn zeros(len: usize) -> Self {
        Self {
            len,
            words: vec![0; words_for(len)],
        }
    }

    /// Builds a vector from explicit bits.
    pub fn from_bools(bits: &[bool]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b {
                v.words[i / WORD_BITS] |= 1 << (i % WORD_BITS);
            }
        }
        v
    }

    /// Builds a vector of length `len` with exactly the given indices set.
    ///
    /// # Panics
    ///
    /// Panics if any index is out of range.
    pub fn from_indices(len: usize, indices: &[usize]) -> Self {
        let mut v = Self::zeros(len);
        for &i in indices {
            v.set(i, true);
        }
        v
    }

    /// Parses a string of `0`/`1` characters; position `i` becomes bit `i`.
    /// Returns `None` on any other character.
    pub fn from_bitstring(s: &str) -> Option<Self> {
        let mut v = Self::zeros(s.len());
        for (i, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => v.words[i / WORD_BITS] |= 1 << (i % WORD_BITS),
                _ => return None,
            }
        }
        Some(v)
    }

    /// A uniformly random vector of the given length.
    pub fn random(len: usize, rng: &mut impl Rng) -> Self {
        let mut v = Self {
            len,
            words: (0..words_for(len)).map(|_| rng.random()).collect(),
        };
        v.mask_tail();
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// # Panics
    ///
    /// Panics if `i >= len`.
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit index {i} out of range (len {})", self.len);
        (self.words[i / WORD_BITS] >> (i % WORD_BITS)) & 1 == 1
    }

    /// # Panics
    ///
    /// Panics if `i >= len`.
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit index {i} out of range (len {})", self.len);
        let mask = 1 << (i % WORD_BITS);
        if value {
            self.words[i / WORD_BITS] |= mask;
        } else {
            self.words[i / WORD_BITS] &= !mask;
        }
    }

    /// # Panics
    ///
    /// Panics if `i >= len`.
    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len, "bit index {i} out of range (len {})", self.len);
        self.words[i / WORD_BITS] ^= 1 << (i % WORD_BITS);
    }

    /// GF(2) addition: `self ^= other`.
    ///
    /// # Panics
    ///
    /// Panics if the lengths differ.
    pub fn xor_assign(&mut self, other: &Self) {
        assert_eq!(self.len, other.len, "length mismatch in xor_assign");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    /// Bitwise intersection.
    ///
    /// # Panics
    ///
    /// Panics if the lengths differ.
    pub fn and(&self, other: &Self) -> Self {
        assert_eq!(self.len, other.len, "length mismatch in and");
        Self {
            len: self.len,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    /// Clears every bit that is set in `other`.
    ///
    /// # Panics
    ///
    /// Panics if the lengths differ.
    pub fn and_not_assign(&mut self, other: &Self) {
        assert_eq!(self.len, other.len, "length mismatch in and_not_assign");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    /// Parity of the number of set bits.
    pub fn parity(&self) -> bool {
        self.words.iter().fold(0u32, |acc, w| acc ^ w.count_ones()) & 1 == 1
    }

    /// GF(2) inner product with `other`.
    ///
    /// # Panics
    ///
    /// Panics if the lengths differ.
    pub fn dot(&self, other: &Self) -> bool {
        assert_eq!(self.len, other.len, "length mismatch in dot");
        self.words
            .iter()
            .zip(&other.words)
            .fold(0u32, |acc, (a, b)| acc ^ (a & b).count_ones())
            & 1
            == 1
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Iterates over the indices of set bits in ascending order.
    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let base = wi * WORD_BITS;
            std::iter::successors(if w == 0 { None } else { Some(w) }, |&m| {
                let next = m & (m - 1);
                (next != 0).then_some(next)
            })
            .map(move |m| base + m.trailing_zeros() as usize)
        })
    }

    /// The packed words backing this vector.
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    /// Renders the vector as a `0`/`1` string, bit 0 first.
    pub fn bitstring(&self) -> String {
        (0..self.len)
            .map(|i| if self.get(i) { '1' } else { '0' })
            .collect()
    }

    fn mask_tail(&mut self) {
        let rem = self.len % WORD_BITS;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVector({})", self.bitstring())
    }
}

/// A dense matrix over GF(2), one packed [`BitVector`] per row.
#[derive(Clone, PartialEq, Eq)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BitVector>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: (0..rows).map(|_| BitVector::zeros(cols)).collect(),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// A matrix with each entry set independently with probability 1/2.
    pub fn random(rows: usize, cols: usize, rng: &mut impl Rng) -> Self {
        Self {
            rows,
            cols,
            data: (0..rows).map(|_| BitVector::random(cols, rng)).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// # Panics
    ///
    /// Panics if the position is out of range.
    pub fn get(&self, r: usize, c: usize) -> bool {
        assert!(r < self.rows, "row {r} out of range ({} rows)", self.rows);
        self.data[r].get(c)
    }

    /// # Panics
    ///
    /// Panics if the position is out of range.
    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        assert!(r < self.rows, "row {r} out of range ({} rows)", self.rows);
        self.data[r].set(c, value);
    }

    /// # Panics
    ///
    /// Panics if the position is out of range.
    pub fn flip(&mut self, r: usize, c: usize) {
        assert!(r < self.rows, "row {r} out of range ({} rows)", self.rows);
        self.data[r].flip(c);
    }

    pub fn row(&self, r: usize) -> &BitVector {
        &self.data[r]
    }

    /// Matrix-vector product over GF(2): bit `v` of the result is the
    /// parity of the AND-popcount of row `v` with `x`.
    ///
    /// # Panics
    ///
    /// Panics if `x.len() != cols`.
    pub fn mat_vec(&self, x: &BitVector) -> BitVector {
        assert_eq!(
            x.len(),
            self.cols,
            "vector length {} does not match column count {}",
            x.len(),
            self.cols
        );
        let mut out = BitVector::zeros(self.rows);
        for r in 0..self.rows {
            if self.data[r].dot(x) {
                out.set(r, true);
            }
        }
        out
    }

    pub fn is_symmetric(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        for r in 0..self.rows {
            for c in r + 1..self.cols {
                if self.data[r].get(c) != self.data[c].get(r) {
                    return false;
                }
            }
        }
        true
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix({}x{})", self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(f, "  {}", self.data[r].bitstring())?;
        }
        Ok(())
    }
}

/// Result of a single elimination pass over an augmented system.
#[derive(Debug)]
pub struct SolveOutcome {
    /// A solution with all free variables set to zero, if the system is
    /// consistent.
    pub particular: Option<BitVector>,
    /// Basis of the kernel of the coefficient matrix; every solution is the
    /// particular one plus a combination of these.
    pub kernel: Vec<BitVector>,
    /// Rank of the coefficient matrix.
    pub rank: usize,
}

/// Reduces `m` in place to reduced row echelon form and returns the pivot
/// columns in ascending order.
///
/// Pivot choice is the first row with a set bit in the current column;
/// elimination clears the column in every other row immediately, so the
/// result needs no separate back-substitution pass. Row operations only
/// touch words from the pivot column onward (everything to the left is
/// already zero).
fn reduce_in_place(m: &mut BitMatrix) -> Vec<usize> {
    let rows = m.rows;
    let mut pivot_cols = Vec::new();
    let mut next_row = 0;
    for col in 0..m.cols {
        if next_row == rows {
            break;
        }
        let Some(pivot_row) = (next_row..rows).find(|&r| m.data[r].get(col)) else {
            continue;
        };
        m.data.swap(next_row, pivot_row);
        let pivot = std::mem::take(&mut m.data[next_row]);
        let word_start = col / WORD_BITS;
        for r in 0..rows {
            if r != next_row && m.data[r].get(col) {
                for (dst, src) in m.data[r].words[word_start..]
                    .iter_mut()
                    .zip(&pivot.words[word_start..])
                {
                    *dst ^= src;
                }
            }
        }
        m.data[next_row] = pivot;
        pivot_cols.push(col);
        next_row += 1;
    }
    pivot_cols
}

fn augmented(a: &BitMatrix, b: &BitVector) -> BitMatrix {
    assert_eq!(
        b.len(),
        a.rows,
        "right-hand side length {} does not match row count {}",
        b.len(),
        a.rows
    );
    let mut aug = BitMatrix::zeros(a.rows, a.cols + 1);
    for r in 0..a.rows {
        let width = a.data[r].words.len();
        aug.data[r].words[..width].copy_from_slice(&a.data[r].words);
        aug.data[r].set(a.cols, b.get(r));
    }
    aug
}

/// Reads the particular solution (free variables zero) off a reduced
/// augmented matrix, or reports inconsistency.
fn particular_solution(reduced: &BitMatrix, pivot_cols: &[usize], cols: usize) -> Option<BitVector> {
    if pivot_cols.last() == Some(&cols) {
        return None; // pivot in the right-hand-side column
    }
    let mut x = BitVector::zeros(cols);
    for (row, &pc) in pivot_cols.iter().enumerate() {
        if reduced.data[row].get(cols) {
            x.set(pc, true);
        }
    }
    Some(x)
}

/// Reads a kernel basis of the coefficient part off a reduced matrix.
/// `cols` is the number of genuine columns; anything beyond is augmentation.
fn kernel_from_reduced(reduced: &BitMatrix, pivot_cols: &[usize], cols: usize) -> Vec<BitVector> {
    let coeff_pivots: Vec<usize> = pivot_cols.iter().copied().filter(|&c| c < cols).collect();
    let mut is_pivot = vec![false; cols];
    for &c in &coeff_pivots {
        is_pivot[c] = true;
    }
    let mut basis = Vec::with_capacity(cols - coeff_pivots.len());
    for free in (0..cols).filter(|&c| !is_pivot[c]) {
        let mut v = BitVector::zeros(cols);
        v.set(free, true);
        for (row, &pc) in coeff_pivots.iter().enumerate() {
            if reduced.data[row].get(free) {
                v.set(pc, true);
            }
        }
        basis.push(v);
    }
    basis
}

/// Solves `A x = b` over GF(2).
///
/// Returns the solution with all free variables set to zero, or `None` when
/// `b` lies outside the column space of `A`. Callers wanting the other
/// solutions add vectors from [`kernel_basis`].
///
/// # Panics
///
/// Panics if `b.len() != a.rows()`.
pub fn solve(a: &BitMatrix, b: &BitVector) -> Option<BitVector> {
    let mut aug = augmented(a, b);
    let pivots = reduce_in_place(&mut aug);
    particular_solution(&aug, &pivots, a.cols)
}

/// Rank of `a` over GF(2).
pub fn rank(a: &BitMatrix) -> usize {
    let mut m = a.clone();
    reduce_in_place(&mut m).len()
}

/// A basis of `{x : A x = 0}`. The basis vectors are linearly independent
/// and there are exactly `cols - rank(A)` of them.
pub fn kernel_basis(a: &BitMatrix) -> Vec<BitVector> {
    let mut m = a.clone();
    let pivots = reduce_in_place(&mut m);
    kernel_from_reduced(&m, &pivots, a.cols)
}

/// Solve, rank and kernel extraction in a single elimination pass.
///
/// # Panics
///
/// Panics if `b.len() != a.rows()`.
pub fn solve_with_kernel(a: &BitMatrix, b: &BitVector) -> SolveOutcome {
    let mut aug = augmented(a, b);
    let pivots = reduce_in_place(&mut aug);
    SolveOutcome {
        particular: particular_solution(&aug, &pivots, a.cols),
        kernel: kernel_from_reduced(&aug, &pivots, a.cols),
        rank: pivots.iter().filter(|&&c| c < a.cols).count(),
    }
}
