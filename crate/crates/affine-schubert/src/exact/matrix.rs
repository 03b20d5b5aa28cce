//! Dense matrices over exact rationals with fraction-free elimination.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar, always kept in lowest terms with a positive denominator.
pub type ExactScalar = BigRational;

/// Builds an exact scalar from a machine integer.
pub fn int(v: i64) -> ExactScalar {
    BigRational::from_integer(BigInt::from(v))
}

/// Builds the exact scalar `num / den`.
pub fn ratio(num: i64, den: i64) -> ExactScalar {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Dense row-major matrix of exact rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<ExactScalar>,
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ExactMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl ExactMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<ExactScalar>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::InvalidArgument(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(Self { rows, cols, entries })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, entries: vec![ExactScalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = ExactScalar::one();
        }
        m
    }

    /// Builds a matrix from integer rows. Panics if the rows are ragged.
    pub fn from_int_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        let entries = rows.iter().flatten().map(|&v| int(v)).collect();
        Self { rows: rows.len(), cols, entries }
    }

    /// Builds a matrix from a row-major slice of integers.
    pub fn from_ints(rows: usize, cols: usize, data: &[i64]) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count does not match shape");
        Self { rows, cols, entries: data.iter().map(|&v| int(v)).collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[ExactScalar] {
        &self.entries
    }

    /// Entry at 0-based position `(i, j)`.
    pub fn get(&self, i: usize, j: usize) -> &ExactScalar {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: ExactScalar) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[ExactScalar] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    /// Integer entries as `i64`, if every entry is an integer that fits.
    pub fn to_i64(&self) -> Option<Vec<i64>> {
        self.entries
            .iter()
            .map(|x| if x.is_integer() { x.to_integer().to_i64() } else { None })
            .collect()
    }

    pub fn mul(&self, other: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.entries[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> ExactMatrix {
        assert_eq!(self.rows, self.cols, "power of a non-square matrix");
        let mut out = Self::identity(self.rows);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    pub fn scale(&self, c: &ExactScalar) -> ExactMatrix {
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|x| x * c).collect(),
        }
    }

    pub fn add(&self, other: &ExactMatrix) -> ExactMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch in sum");
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn transpose(&self) -> ExactMatrix {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.entries[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        out
    }

    /// Stacks matrices with equal column counts on top of each other.
    pub fn vstack(blocks: &[&ExactMatrix]) -> ExactMatrix {
        let cols = blocks.first().map_or(0, |b| b.cols);
        assert!(blocks.iter().all(|b| b.cols == cols), "column counts differ");
        let entries: Vec<_> = blocks.iter().flat_map(|b| b.entries.iter().cloned()).collect();
        Self { rows: entries.len() / cols.max(1), cols, entries }
    }

    /// Places matrices with equal row counts side by side.
    pub fn hstack(blocks: &[&ExactMatrix]) -> ExactMatrix {
        let rows = blocks.first().map_or(0, |b| b.rows);
        assert!(blocks.iter().all(|b| b.rows == rows), "row counts differ");
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for b in blocks {
                entries.extend(b.row(i).iter().cloned());
            }
        }
        Self { rows, cols, entries }
    }

    /// Submatrix on 0-based row and column lists, in the given order.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> ExactMatrix {
        let mut entries = Vec::with_capacity(rows.len() * cols.len());
        for &i in rows {
            for &j in cols {
                entries.push(self.get(i, j).clone());
            }
        }
        Self { rows: rows.len(), cols: cols.len(), entries }
    }

    /// Determinant of the submatrix on the given 1-based row and column labels.
    ///
    /// Lists keep their order, so a transposition of two labels flips the sign.
    /// A repeated label gives 0 and empty lists give 1.
    pub fn minor(&self, rows: &[usize], cols: &[usize]) -> Result<ExactScalar> {
        if rows.len() != cols.len() {
            return Err(Error::NonSquareMinor);
        }
        if rows.iter().any(|&i| i == 0 || i > self.rows)
            || cols.iter().any(|&j| j == 0 || j > self.cols)
        {
            return Err(Error::IndexOutOfRange);
        }
        if has_repeat(rows) || has_repeat(cols) {
            return Ok(ExactScalar::zero());
        }
        let r0: Vec<usize> = rows.iter().map(|i| i - 1).collect();
        let c0: Vec<usize> = cols.iter().map(|j| j - 1).collect();
        Ok(self.select(&r0, &c0).determinant())
    }

    /// Determinant by fraction-free elimination. Panics on non-square input.
    pub fn determinant(&self) -> ExactScalar {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return ExactScalar::one();
        }
        if let Some(ints) = self.to_i64() {
            return BigRational::from_integer(int_determinant(&ints, n));
        }
        let (scaled, denom) = self.clear_denominators();
        BigRational::new(det_bigint(scaled, n), denom)
    }

    /// Exact rank by fraction-free elimination.
    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        let (scaled, _) = self.clear_denominators();
        rank_bigint(scaled, self.rows, self.cols)
    }

    /// A nonzero vector `v` with `M v = 0`, if the columns are dependent.
    pub fn kernel_vector(&self) -> Option<Vec<ExactScalar>> {
        let (rref, pivots) = self.rref();
        let free = (0..self.cols).find(|j| !pivots.contains(j))?;
        let mut v = vec![ExactScalar::zero(); self.cols];
        v[free] = ExactScalar::one();
        for (r, &p) in pivots.iter().enumerate() {
            v[p] = -rref.get(r, free).clone();
        }
        Some(v)
    }

    /// Inverse of a square matrix, if it is invertible.
    pub fn inverse(&self) -> Option<ExactMatrix> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let n = self.rows;
        let (rref, pivots) = ExactMatrix::hstack(&[self, &Self::identity(n)]).rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let cols: Vec<usize> = (n..2 * n).collect();
        let rows: Vec<usize> = (0..n).collect();
        Some(rref.select(&rows, &cols))
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (ExactMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).recip();
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c).clone();
                for j in c..m.cols {
                    let v = m.get(i, j) - &f * m.get(r, j);
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Scales each row by the lcm of its denominators; returns the integer
    /// entries and the product of the scale factors.
    fn clear_denominators(&self) -> (Vec<BigInt>, BigInt) {
        let mut out = Vec::with_capacity(self.entries.len());
        let mut total = BigInt::one();
        for i in 0..self.rows {
            let row = self.row(i);
            let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            for x in row {
                out.push(x.numer() * (&l / x.denom()));
            }
            total *= l;
        }
        (out, total)
    }
}

fn has_repeat(xs: &[usize]) -> bool {
    xs.iter().enumerate().any(|(k, x)| xs[..k].contains(x))
}

/// Determinant of a `k x k` integer matrix, using 128-bit arithmetic when no
/// intermediate overflows and big integers otherwise.
pub fn int_determinant(entries: &[i64], k: usize) -> BigInt {
    let wide: Vec<i128> = entries.iter().map(|&v| v as i128).collect();
    match det_i128(wide, k) {
        Some(d) => BigInt::from(d),
        None => det_bigint(entries.iter().map(|&v| BigInt::from(v)).collect(), k),
    }
}

/// Bareiss determinant with checked 128-bit arithmetic; `None` on overflow.
pub fn det_i128(mut a: Vec<i128>, n: usize) -> Option<i128> {
    if n == 0 {
        return Some(1);
    }
    let mut prev: i128 = 1;
    let mut sign: i128 = 1;
    for k in 0..n - 1 {
        if a[k * n + k] == 0 {
            let p = (k + 1..n).find(|&i| a[i * n + k] != 0)?;
            for j in 0..n {
                a.swap(k * n + j, p * n + j);
            }
            sign = -sign;
        }
        let pivot = a[k * n + k];
        for i in k + 1..n {
            let lead = a[i * n + k];
            for j in k + 1..n {
                let num = a[i * n + j].checked_mul(pivot)?.checked_sub(lead.checked_mul(a[k * n + j])?)?;
                a[i * n + j] = num / prev;
            }
            a[i * n + k] = 0;
        }
        prev = pivot;
    }
    Some(sign * a[n * n - 1])
}

fn det_bigint(mut a: Vec<BigInt>, n: usize) -> BigInt {
    if n == 0 {
        return BigInt::one();
    }
    let mut prev = BigInt::one();
    let mut negate = false;
    for k in 0..n - 1 {
        if a[k * n + k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i * n + k].is_zero()) else {
                return BigInt::zero();
            };
            for j in 0..n {
                a.swap(k * n + j, p * n + j);
            }
            negate = !negate;
        }
        let pivot = a[k * n + k].clone();
        for i in k + 1..n {
            let lead = a[i * n + k].clone();
            for j in k + 1..n {
                let num = &a[i * n + j] * &pivot - &lead * &a[k * n + j];
                a[i * n + j] = num / &prev;
            }
            a[i * n + k] = BigInt::zero();
        }
        prev = pivot;
    }
    let d = a[n * n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// Rank of a `rows x cols` integer matrix by fraction-free elimination.
pub fn rank_bigint(mut a: Vec<BigInt>, rows: usize, cols: usize) -> usize {
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i * cols + c].is_zero()) else {
            continue;
        };
        if p != r {
            for j in 0..cols {
                a.swap(r * cols + j, p * cols + j);
            }
        }
        let pivot = a[r * cols + c].clone();
        for i in r + 1..rows {
            let lead = a[i * cols + c].clone();
            if lead.is_zero() {
                for j in c + 1..cols {
                    let v = &a[i * cols + j] * &pivot / &prev;
                    a[i * cols + j] = v;
                }
                continue;
            }
            for j in c + 1..cols {
                let num = &a[i * cols + j] * &pivot - &lead * &a[r * cols + j];
                a[i * cols + j] = num / &prev;
            }
            a[i * cols + c] = BigInt::zero();
        }
        prev = pivot;
        r += 1;
    }
    r
}

/// Exact rank of a list of rational row vectors of equal length.
pub fn rank_of_rows(rows: &[Vec<ExactScalar>]) -> usize {
    let Some(first) = rows.first() else {
        return 0;
    };
    let cols = first.len();
    let entries = rows.iter().flatten().cloned().collect();
    ExactMatrix { rows: rows.len(), cols, entries }.rank()
}
