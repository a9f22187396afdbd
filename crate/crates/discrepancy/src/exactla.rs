//! Exact and floating linear-algebra kernel.
//!
//! Integer matrices carry arbitrary-precision entries and their determinants
//! are computed by fraction-free elimination, so determinant witnesses are
//! exact certificates. The blockwise determinant bound evaluates its inner
//! minors exactly as well; floating point appears only in the final square
//! roots and products, and in the symmetric eigenvalue routines.
//!
//! Matrix row/column indices are 0-based throughout; ground-set elements of a
//! `SetSystem` stay 1-based, so column `j` of an incidence matrix corresponds
//! to element `j + 1`.

use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::core::SetSystem;
use crate::error::{Error, Result};

/// A dense matrix of exact integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>, // row-major
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {}x{} matrix",
                entries.len(),
                rows,
                cols
            )));
        }
        Ok(IntMatrix { rows, cols, entries })
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        IntMatrix {
            rows: r,
            cols: c,
            entries: rows.iter().flatten().map(|&v| BigInt::from(v)).collect(),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> i64) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(BigInt::from(f(i, j)));
            }
        }
        IntMatrix { rows, cols, entries }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| i64::from(i == j))
    }

    /// The 0/1 incidence matrix of a set system: entry `(i, j)` is 1 iff
    /// element `j + 1` belongs to set `i`.
    pub fn incidence(system: &SetSystem) -> Self {
        let mut m = IntMatrix {
            rows: system.num_sets(),
            cols: system.n(),
            entries: vec![BigInt::zero(); system.num_sets() * system.n()],
        };
        for (i, set) in system.sets().iter().enumerate() {
            for &e in set {
                m.entries[i * m.cols + (e - 1)] = BigInt::from(1);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.cols + j]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    /// Submatrix on the given 0-based row and column indices, in the order given.
    pub fn submatrix(&self, row_idx: &[usize], col_idx: &[usize]) -> IntMatrix {
        let mut entries = Vec::with_capacity(row_idx.len() * col_idx.len());
        for &i in row_idx {
            for &j in col_idx {
                entries.push(self.entry(i, j).clone());
            }
        }
        IntMatrix { rows: row_idx.len(), cols: col_idx.len(), entries }
    }

    /// Columns selected by 0-based indices, all rows.
    pub fn select_columns(&self, col_idx: &[usize]) -> IntMatrix {
        self.submatrix(&(0..self.rows).collect::<Vec<_>>(), col_idx)
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut entries = Vec::with_capacity(self.entries.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                entries.push(self.entry(i, j).clone());
            }
        }
        IntMatrix { rows: self.cols, cols: self.rows, entries }
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut entries = vec![BigInt::zero(); self.rows * other.cols];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.entry(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    entries[i * other.cols + j] += a * other.entry(k, j);
                }
            }
        }
        Ok(IntMatrix { rows: self.rows, cols: other.cols, entries })
    }

    pub fn to_f64(&self) -> DMatrix<f64> {
        DMatrix::from_fn(self.rows, self.cols, |i, j| big_to_f64(self.entry(i, j)))
    }
}

pub fn big_to_f64(x: &BigInt) -> f64 {
    x.to_f64().unwrap_or(if x.is_negative() { f64::NEG_INFINITY } else { f64::INFINITY })
}

/// Natural log of `|x|`; `-inf` for zero. Exact-integer input, floating output.
pub fn ln_abs(x: &BigInt) -> f64 {
    if x.is_zero() {
        return f64::NEG_INFINITY;
    }
    let bits = x.bits();
    if bits <= 1000 {
        big_to_f64(&x.abs()).ln()
    } else {
        // top 64 bits carry all the precision an f64 log can use
        let shift = bits - 64;
        let top = (x.abs() >> shift).to_f64().unwrap();
        top.ln() + shift as f64 * std::f64::consts::LN_2
    }
}

/// Exact determinant by Bareiss fraction-free elimination.
///
/// Every intermediate value is an exact integer; row swaps only flip the
/// sign, so the result is deterministic and overflow-free.
pub fn int_det(b: &IntMatrix) -> Result<BigInt> {
    if b.rows != b.cols {
        return Err(Error::NotSquare { rows: b.rows, cols: b.cols });
    }
    let n = b.rows;
    if n == 0 {
        return Ok(BigInt::from(1)); // empty product convention
    }
    let mut m: Vec<BigInt> = b.entries.clone();
    let mut sign = BigInt::from(1);
    let mut prev = BigInt::from(1);
    for k in 0..n - 1 {
        if m[k * n + k].is_zero() {
            match (k + 1..n).find(|&i| !m[i * n + k].is_zero()) {
                Some(p) => {
                    for j in 0..n {
                        m.swap(k * n + j, p * n + j);
                    }
                    sign = -sign;
                }
                None => return Ok(BigInt::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i * n + j] * &m[k * n + k] - &m[i * n + k] * &m[k * n + j];
                m[i * n + j] = num / &prev; // exact division, Bareiss invariant
            }
            m[i * n + k] = BigInt::zero();
        }
        prev = m[k * n + k].clone();
    }
    Ok(sign * m.swap_remove(n * n - 1))
}

/// A partition of the row indices `0..k` into disjoint blocks (empty blocks
/// allowed). Block order matters only for reporting.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowPartition {
    blocks: Vec<Vec<usize>>,
}

impl RowPartition {
    pub fn new(blocks: Vec<Vec<usize>>, k: usize) -> Result<Self> {
        let mut seen = vec![false; k];
        for block in &blocks {
            for &i in block {
                if i >= k {
                    return Err(Error::InvalidPartition(format!("row {i} out of range for k={k}")));
                }
                if seen[i] {
                    return Err(Error::InvalidPartition(format!("row {i} appears twice")));
                }
                seen[i] = true;
            }
        }
        if let Some(missing) = seen.iter().position(|&s| !s) {
            return Err(Error::InvalidPartition(format!("row {missing} not covered")));
        }
        Ok(RowPartition { blocks })
    }

    /// Single block containing all of `0..k`.
    pub fn trivial(k: usize) -> Self {
        RowPartition { blocks: vec![(0..k).collect()] }
    }

    /// One singleton block per row.
    pub fn singletons(k: usize) -> Self {
        RowPartition { blocks: (0..k).map(|i| vec![i]).collect() }
    }

    /// Groups rows by a label per row (labels need not be contiguous).
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut uniq: Vec<usize> = labels.to_vec();
        uniq.sort_unstable();
        uniq.dedup();
        let blocks = uniq
            .iter()
            .map(|&l| labels.iter().enumerate().filter(|(_, &x)| x == l).map(|(i, _)| i).collect())
            .collect();
        RowPartition { blocks }
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b.len()).collect()
    }
}

/// Calls `f` with every `k`-subset of `0..n` in lexicographic order.
/// Returns the number of subsets visited, or an error once `budget` runs out.
pub fn for_each_combination(
    n: usize,
    k: usize,
    budget: u64,
    mut f: impl FnMut(&[usize]),
) -> Result<u64> {
    if k > n {
        return Ok(0);
    }
    let mut idx: Vec<usize> = (0..k).collect();
    let mut count = 0u64;
    loop {
        if count >= budget {
            return Err(Error::BudgetExceeded { budget, needed: count + 1 });
        }
        f(&idx);
        count += 1;
        if k == 0 {
            return Ok(count);
        }
        // advance to the next k-subset
        let mut i = k;
        loop {
            if i == 0 {
                return Ok(count);
            }
            i -= 1;
            if idx[i] < n - (k - i) {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Binomial coefficient in `u128`; callers stay at desk scale (`n <= 64`).
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// Upper bound on `|det B|` from per-block Gram volumes: orthogonalizing the
/// rows inside each block and applying the Hadamard bound across blocks gives
///
/// `|det B| <= prod_l ( sum_{|J| = |I_l|} det(B[I_l, J])^2 )^{1/2}`,
///
/// with every inner minor computed exactly; only the final square roots and
/// product are floating. With a single block this is `|det B|` itself, with
/// all-singleton blocks it is the product of Euclidean row norms.
pub fn blockwise_det_bound(b: &IntMatrix, p: &RowPartition, minor_budget: u64) -> Result<f64> {
    if b.rows != b.cols {
        return Err(Error::NotSquare { rows: b.rows, cols: b.cols });
    }
    let k = b.rows;
    // validate against this matrix's row count
    RowPartition::new(p.blocks.clone(), k)?;
    let mut remaining = minor_budget;
    let mut bound = 1.0f64;
    for block in &p.blocks {
        if block.is_empty() {
            continue; // a 0x0 Gram block contributes a factor of 1
        }
        let kl = block.len();
        let mut sum_sq = BigInt::zero();
        let visited = for_each_combination(k, kl, remaining, |cols| {
            let minor = int_det(&b.submatrix(block, cols)).expect("square by construction");
            sum_sq += &minor * &minor;
        })?;
        remaining -= visited;
        bound *= big_to_f64(&sum_sq).sqrt();
    }
    Ok(bound)
}

/// A dense symmetric matrix of floats; mirrored entries are stored
/// identically, not merely approximately equal.
#[derive(Debug, Clone, PartialEq)]
pub struct SymMatrix {
    inner: DMatrix<f64>,
}

impl SymMatrix {
    /// Builds from a function evaluated once per unordered pair.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut inner = DMatrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let v = f(i, j);
                inner[(i, j)] = v;
                inner[(j, i)] = v;
            }
        }
        SymMatrix { inner }
    }

    pub fn from_diagonal(diag: &[f64]) -> Self {
        Self::from_fn(diag.len(), |i, j| if i == j { diag[i] } else { 0.0 })
    }

    /// Symmetrizes an arbitrary square matrix by mirroring its lower triangle.
    pub fn symmetrize(m: &DMatrix<f64>) -> Self {
        assert_eq!(m.nrows(), m.ncols());
        Self::from_fn(m.nrows(), |i, j| if i == j { m[(i, j)] } else { 0.5 * (m[(i, j)] + m[(j, i)]) })
    }

    pub fn order(&self) -> usize {
        self.inner.nrows()
    }

    pub fn entry(&self, i: usize, j: usize) -> f64 {
        self.inner[(i, j)]
    }

    pub fn as_dmatrix(&self) -> &DMatrix<f64> {
        &self.inner
    }

    /// Largest absolute entry.
    pub fn max_abs(&self) -> f64 {
        self.inner.iter().fold(0.0f64, |a, &v| a.max(v.abs()))
    }
}

/// Smallest eigenvalue of a symmetric matrix, accurate to
/// `1e-9 * (1 + max |entry|)`. Infinity for the empty matrix.
pub fn min_eigenvalue(s: &SymMatrix) -> f64 {
    if s.order() == 0 {
        return f64::INFINITY;
    }
    let eigen = s.inner.clone().symmetric_eigenvalues();
    eigen.iter().copied().fold(f64::INFINITY, f64::min)
}

/// Whether the smallest eigenvalue is at least `-tol`.
pub fn psd_check(s: &SymMatrix, tol: f64) -> bool {
    min_eigenvalue(s) >= -tol
}
