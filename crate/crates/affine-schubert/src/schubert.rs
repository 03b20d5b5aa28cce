//! Normalized matrix presentation of the open cells of the chain elements and
//! evaluation of Plücker coordinates at exact points.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::matrix::{int, int_determinant};
use crate::exact::{ExactMatrix, ExactScalar, RandomSource};
use crate::weyl::{ChainElement, IndexTuple};

/// Content of one cell of the generic matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CellEntry {
    Zero,
    One,
    /// Index into the parameter list.
    Param(usize),
}

/// Label `a_{row,1}` of a free parameter; `row` is an absolute 1-based row.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParamLabel {
    pub row: usize,
}

impl fmt::Display for ParamLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a_{{{},1}}", self.row)
    }
}

/// Pivot and parameter layout of the open cell of a chain element.
///
/// Only rows `pn+1 ..= rn` are stored; rows above are identically zero and
/// rows below `rn` belong to the implicit identity tail.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenericCellMatrix {
    phi: ChainElement,
    row_offset: usize,
    rows: usize,
    cols: usize,
    entries: Vec<CellEntry>,
    params: Vec<ParamLabel>,
}

/// Builds the generic cell matrix of `φ_{ik}`.
///
/// With `(i-1)n + 1 + k - i = pn + q`, the first `r+1-i` columns are shifts by
/// multiples of `n` of one generating column supported on rows `pn+q ..= rn`,
/// which has a 1 in row `pn+q`, zeros in the pivotal rows `mn+q` and in the
/// tail rows `[rn+2-i, rn]`, and a free parameter elsewhere. The remaining
/// `i-1` columns are the unit vectors of the tail rows.
pub fn build_cell_matrix(phi: &ChainElement) -> GenericCellMatrix {
    let n = phi.amb.n;
    let r = phi.amb.r();
    let rn = r * n;
    let i = phi.group;
    let (p, q) = phi.p_q();
    let start = p * n + q;
    let tail_lo = rn + 2 - i;
    let in_tail = |row: usize| row >= tail_lo;

    let mut params = Vec::new();
    let mut generator: HashMap<usize, CellEntry> = HashMap::new();
    for row in start..=rn {
        let e = if row == start {
            CellEntry::One
        } else if in_tail(row) || row % n == q % n {
            CellEntry::Zero
        } else {
            params.push(ParamLabel { row });
            CellEntry::Param(params.len() - 1)
        };
        generator.insert(row, e);
    }

    let row_offset = p * n;
    let rows = rn - row_offset;
    let mut entries = vec![CellEntry::Zero; rows * r];
    for c in 1..=r + 1 - i {
        for row in row_offset + 1..=rn {
            if in_tail(row) {
                continue;
            }
            let shift = (c - 1) * n;
            if row < start + shift {
                continue;
            }
            entries[(row - row_offset - 1) * r + c - 1] = generator[&(row - shift)];
        }
    }
    for c in r + 2 - i..=r {
        let row = rn - r + c;
        entries[(row - row_offset - 1) * r + c - 1] = CellEntry::One;
    }
    GenericCellMatrix { phi: phi.clone(), row_offset, rows, cols: r, entries, params }
}

impl GenericCellMatrix {
    pub fn phi(&self) -> &ChainElement {
        &self.phi
    }

    pub fn params(&self) -> &[ParamLabel] {
        &self.params
    }

    pub fn param_count(&self) -> usize {
        self.params.len()
    }

    /// Absolute row index of the first stored row minus one.
    pub fn row_offset(&self) -> usize {
        self.row_offset
    }

    pub fn stored_rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Entry at absolute 1-based row and column.
    pub fn entry(&self, row: usize, col: usize) -> CellEntry {
        if row <= self.row_offset || row > self.row_offset + self.rows {
            return CellEntry::Zero;
        }
        self.entries[(row - self.row_offset - 1) * self.cols + col - 1]
    }

    /// Absolute rows whose only nonzero entry is a 1.
    pub fn pivotal_rows(&self) -> Vec<usize> {
        (self.row_offset + 1..=self.row_offset + self.rows)
            .filter(|&row| {
                let cells: Vec<CellEntry> = (1..=self.cols).map(|c| self.entry(row, c)).collect();
                cells.iter().filter(|&&e| e == CellEntry::One).count() == 1
                    && !cells.iter().any(|e| matches!(e, CellEntry::Param(_)))
            })
            .collect()
    }

    /// Index of the parameter labelled `a_{row,1}`.
    pub fn param_index(&self, row: usize) -> Option<usize> {
        self.params.iter().position(|l| l.row == row)
    }

    /// The parameter `a_{pn+q+1,1}` governing the first steps below `φ`.
    pub fn leading_param(&self) -> Option<usize> {
        let (p, q) = self.phi.p_q();
        self.param_index(p * self.phi.amb.n + q + 1)
    }

    /// Substitutes exact values for the parameters.
    pub fn specialize(&self, values: &[ExactScalar]) -> Result<CellPoint> {
        if values.len() != self.params.len() {
            return Err(Error::WrongValueCount { expected: self.params.len(), got: values.len() });
        }
        let rn = self.phi.amb.rows();
        let r = self.cols;
        let mut m = ExactMatrix::zeros(rn, r);
        for row in self.row_offset + 1..=rn {
            for c in 1..=r {
                let v = match self.entry(row, c) {
                    CellEntry::Zero => continue,
                    CellEntry::One => int(1),
                    CellEntry::Param(k) => values[k].clone(),
                };
                m.set(row - 1, c - 1, v);
            }
        }
        let ints = m.to_i64();
        Ok(CellPoint { phi: self.phi.clone(), values: values.to_vec(), matrix: m, ints })
    }

    /// Specializes every parameter to a uniform integer in `[-bound, bound]`.
    pub fn random_point(&self, rng: &mut RandomSource, bound: i64) -> CellPoint {
        let values: Vec<ExactScalar> =
            (0..self.params.len()).map(|_| int(rng.small_int(bound))).collect();
        self.specialize(&values).expect("value count matches")
    }

    /// `count` random points drawn from independent forks of `rng`.
    pub fn random_points(&self, rng: &RandomSource, count: usize, bound: i64) -> Vec<CellPoint> {
        (0..count).map(|k| self.random_point(&mut rng.fork(k as u64), bound)).collect()
    }
}

/// A point of an open cell: parameter values and the induced `rn x r` matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellPoint {
    phi: ChainElement,
    values: Vec<ExactScalar>,
    matrix: ExactMatrix,
    ints: Option<Vec<i64>>,
}

impl CellPoint {
    pub fn values(&self) -> &[ExactScalar] {
        &self.values
    }

    pub fn matrix(&self) -> &ExactMatrix {
        &self.matrix
    }

    pub fn phi(&self) -> &ChainElement {
        &self.phi
    }

    /// Integer entries of the matrix, if the point is integral.
    pub fn int_entries(&self) -> Option<&[i64]> {
        self.ints.as_deref()
    }

    /// The maximal minor on the (sorted) rows of `tuple`; rows beyond `rn` give 0.
    pub fn plucker(&self, tuple: &IndexTuple) -> ExactScalar {
        self.plucker_rows(tuple.entries())
    }

    /// The maximal minor on sorted, distinct 1-based rows.
    pub fn plucker_rows(&self, rows: &[usize]) -> ExactScalar {
        let rn = self.matrix.rows();
        if rows.iter().any(|&x| x == 0 || x > rn) {
            return ExactScalar::zero();
        }
        let r = self.matrix.cols();
        if let Some(ints) = &self.ints {
            let mut sub = Vec::with_capacity(r * r);
            for &x in rows {
                sub.extend_from_slice(&ints[(x - 1) * r..x * r]);
            }
            return BigRational::from_integer(int_determinant(&sub, r));
        }
        let cols: Vec<usize> = (1..=r).collect();
        self.matrix.minor(rows, &cols).expect("rows are in range")
    }
}

/// Values of `p_I` at one integral point, cached by row set.
#[derive(Debug)]
pub struct MinorCache<'a> {
    ints: &'a [i64],
    rn: usize,
    r: usize,
    cache: HashMap<u64, BigInt>,
}

impl<'a> MinorCache<'a> {
    /// Panics if the point is not integral or has more than 64 rows.
    pub fn new(point: &'a CellPoint) -> Self {
        let ints = point.int_entries().expect("integral point");
        let rn = point.matrix().rows();
        assert!(rn <= 64, "row sets are encoded as 64-bit masks");
        Self { ints, rn, r: point.matrix().cols(), cache: HashMap::new() }
    }

    /// `p_rows` for sorted distinct 1-based rows.
    pub fn get(&mut self, rows: &[usize]) -> BigInt {
        if rows.iter().any(|&x| x == 0 || x > self.rn) {
            return BigInt::zero();
        }
        let mask = rows.iter().fold(0u64, |m, &x| m | (1 << (x - 1)));
        if let Some(v) = self.cache.get(&mask) {
            return v.clone();
        }
        let r = self.r;
        let mut sub = Vec::with_capacity(r * r);
        for &x in rows {
            sub.extend_from_slice(&self.ints[(x - 1) * r..x * r]);
        }
        let v = int_determinant(&sub, r);
        self.cache.insert(mask, v.clone());
        v
    }
}

/// True iff `p_I` restricts to zero on the Schubert variety of `φ`,
/// i.e. `I` does not dominate `I_φ` componentwise.
pub fn vanishing_criterion(tuple: &IndexTuple, phi: &ChainElement) -> bool {
    !tuple.dominates(&phi.tuple)
}

/// Rank of `[M | tM]`, where `t` shifts rows down by `n` inside `[1, rn]`.
/// A t-stable column space gives rank `r`.
pub fn shifted_span_rank(m: &ExactMatrix, n: usize) -> usize {
    let shifted = shift_rows_down(m, n);
    ExactMatrix::hstack(&[m, &shifted]).rank()
}

/// `t M`: row `j + n` of the result is row `j` of `M`; the first `n` rows are zero.
pub fn shift_rows_down(m: &ExactMatrix, n: usize) -> ExactMatrix {
    let mut out = ExactMatrix::zeros(m.rows(), m.cols());
    for i in 0..m.rows().saturating_sub(n) {
        for j in 0..m.cols() {
            out.set(i + n, j, m.get(i, j).clone());
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::{enumerate_admissible, reduced_chain, z_stratification, Ambient};
    use num_traits::One;

    fn amb(n: usize, s: usize) -> Ambient {
        Ambient::new(n, s).unwrap()
    }

    fn t(n: usize, e: &[usize]) -> IndexTuple {
        IndexTuple::new(n, e.to_vec()).unwrap()
    }

    #[test]
    fn top_cell_layout_n2() {
        let chain = reduced_chain(amb(2, 1));
        let g = build_cell_matrix(&chain[0]);
        assert_eq!(g.params(), &[ParamLabel { row: 2 }, ParamLabel { row: 4 }]);
        let p = g.specialize(&[int(2), int(5)]).unwrap();
        assert_eq!(*p.matrix(), ExactMatrix::from_int_rows(&[vec![1, 0], vec![2, 0], vec![0, 1], vec![5, 2]]));
        assert_eq!(g.pivotal_rows(), vec![1, 3]);
        assert_eq!(g.specialize(&[int(1)]), Err(Error::WrongValueCount { expected: 2, got: 1 }));
    }

    #[test]
    fn zero_point_is_coordinate_point() {
        for (n, s) in [(2, 1), (3, 1), (2, 2)] {
            for phi in reduced_chain(amb(n, s)) {
                let g = build_cell_matrix(&phi);
                let zeros = vec![int(0); g.param_count()];
                let p = g.specialize(&zeros).unwrap();
                assert!(p.plucker(&phi.tuple).is_one());
                // the only nonzero coordinate at the origin of the cell
                for other in crate::weyl::all_tuples(phi.amb) {
                    if other != phi.tuple {
                        assert!(p.plucker(&other).is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn parameter_counts_match_dimension() {
        for (n, s) in [(2, 1), (3, 1), (2, 2), (4, 1), (3, 2)] {
            for phi in reduced_chain(amb(n, s)) {
                let g = build_cell_matrix(&phi);
                assert_eq!(g.param_count(), phi.dimension(), "{:?}", phi.tuple);
            }
        }
    }

    #[test]
    fn pivotal_rows_match_layout() {
        for (n, s) in [(2, 1), (3, 1), (2, 2)] {
            for phi in reduced_chain(amb(n, s)) {
                let g = build_cell_matrix(&phi);
                let (p, q) = phi.p_q();
                let (r, i) = (phi.amb.r(), phi.group);
                let mut expected: Vec<usize> = (p..=r + p - i).map(|m| m * n + q).collect();
                expected.extend(r * n + 2 - i..=r * n);
                expected.sort();
                assert_eq!(g.pivotal_rows(), expected);
            }
        }
    }

    #[test]
    fn special_values_on_chain() {
        let rng = RandomSource::new(11);
        for (n, s) in [(2, 1), (3, 1), (2, 2)] {
            for phi in reduced_chain(amb(n, s)) {
                let Some(next) = phi.next() else { continue };
                let g = build_cell_matrix(&phi);
                let a = g.leading_param().unwrap();
                let r2 = z_stratification(&phi).r2.unwrap();
                let exp = (phi.amb.r() + 1 - phi.group) as i32;
                for pt in g.random_points(&rng, 10, 10) {
                    let av = pt.values()[a].clone();
                    assert!(pt.plucker(&phi.tuple).is_one());
                    assert_eq!(pt.plucker(&next.tuple), num_traits::pow::Pow::pow(&av, exp));
                    assert_eq!(pt.plucker(&r2), av);
                }
            }
        }
    }

    #[test]
    fn minor_cache_agrees() {
        let phi = &reduced_chain(amb(3, 1))[0];
        let g = build_cell_matrix(phi);
        let pt = g.random_point(&mut RandomSource::new(3), 10);
        let mut cache = MinorCache::new(&pt);
        for tup in crate::weyl::all_tuples(phi.amb) {
            let v = cache.get(tup.entries());
            assert_eq!(BigRational::from_integer(v), pt.plucker(&tup));
        }
    }

    #[test]
    fn vanishing_examples() {
        let chain = reduced_chain(amb(2, 1));
        assert!(vanishing_criterion(&t(2, &[1, 3]), &chain[1]));
        assert!(!vanishing_criterion(&chain[1].tuple, &chain[1]));
        assert!(!vanishing_criterion(&t(2, &[2, 4]), &chain[1]));
    }

    #[test]
    fn cell_points_are_t_stable() {
        let rng = RandomSource::new(5);
        for (n, s) in [(2, 1), (3, 1), (2, 2)] {
            for phi in reduced_chain(amb(n, s)) {
                let g = build_cell_matrix(&phi);
                for pt in g.random_points(&rng, 3, 10) {
                    assert_eq!(shifted_span_rank(pt.matrix(), n), phi.amb.r());
                }
            }
        }
    }

    #[test]
    fn admissible_tuples_do_not_vanish_generically() {
        let rng = RandomSource::new(8);
        for phi in reduced_chain(amb(3, 1)) {
            let g = build_cell_matrix(&phi);
            let pts = g.random_points(&rng, 5, 10);
            for s in enumerate_admissible(&phi) {
                assert!(pts.iter().any(|p| !p.plucker(&s).is_zero()), "{s}");
            }
        }
    }
}
