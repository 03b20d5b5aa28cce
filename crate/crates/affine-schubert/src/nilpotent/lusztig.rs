//! The embedding `N ↦ [N^{n-1}; ...; N; I]` of nilpotent matrices into the
//! affine Grassmannian at level one.

use itertools::Itertools;

use crate::error::Result;
use crate::exact::{ExactMatrix, ExactScalar};
use crate::nilpotent::orbits::NilpotentPoint;
use crate::partition::Partition;
use crate::schubert::shift_rows_down;
use crate::weyl::{index_tuple_of_weyl, AffineWeylElement, Ambient, IndexTuple};

/// Stacked powers `[N^{n-1}; ...; N; I]`, an `n^2 x n` matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LusztigMatrix {
    n: usize,
    nilpotent: ExactMatrix,
    matrix: ExactMatrix,
}

pub fn lusztig_embed(point: &NilpotentPoint) -> LusztigMatrix {
    let n = point.size();
    let mut blocks = Vec::with_capacity(n);
    let mut power = ExactMatrix::identity(n);
    for _ in 0..n {
        blocks.push(power.clone());
        power = power.mul(point.matrix());
    }
    blocks.reverse();
    let refs: Vec<&ExactMatrix> = blocks.iter().collect();
    LusztigMatrix { n, nilpotent: point.matrix().clone(), matrix: ExactMatrix::vstack(&refs) }
}

impl LusztigMatrix {
    pub fn matrix(&self) -> &ExactMatrix {
        &self.matrix
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Maximal minor on sorted 1-based rows.
    pub fn plucker(&self, rows: &[usize]) -> ExactScalar {
        let cols: Vec<usize> = (1..=self.n).collect();
        self.matrix.minor(rows, &cols).expect("rows in range")
    }

    /// The minor on the bottom block, which is always 1.
    pub fn bottom_minor(&self) -> ExactScalar {
        let rows: Vec<usize> = (self.n * self.n - self.n + 1..=self.n * self.n).collect();
        self.plucker(&rows)
    }

    /// Shifting rows down by `n` equals multiplying on the right by `N`, so the
    /// column span is stable under the shift.
    pub fn is_shift_stable(&self) -> bool {
        shift_rows_down(&self.matrix, self.n) == self.matrix.mul(&self.nilpotent)
    }

    /// All nonvanishing maximal minors, as tuples in the level-one ambient.
    pub fn nonvanishing_tuples(&self) -> Vec<IndexTuple> {
        (1..=self.n * self.n)
            .combinations(self.n)
            .filter(|rows| !num_traits::Zero::is_zero(&self.plucker(rows)))
            .map(|rows| IndexTuple::new(self.n, rows).expect("increasing"))
            .collect()
    }
}

/// Index tuple of the level-one Schubert variety attached to the orbit of type
/// `μ`, from `c_i = n - μ_i`.
pub fn orbit_schubert_tuple(mu: &Partition) -> Result<IndexTuple> {
    let n = mu.size();
    let amb = Ambient::new(n, 1)?;
    index_tuple_of_weyl(&AffineWeylElement::from_partition(mu, amb)?, amb)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, RandomSource};
    use crate::nilpotent::orbits::random_orbit_point;
    use crate::partition::partitions_of;

    #[test]
    fn zero_matrix_embedding() {
        let z = NilpotentPoint::new(ExactMatrix::zeros(2, 2)).unwrap();
        let l = lusztig_embed(&z);
        assert_eq!(*l.matrix(), ExactMatrix::from_int_rows(&[vec![0, 0], vec![0, 0], vec![1, 0], vec![0, 1]]));
        assert!(l.is_shift_stable());
    }

    #[test]
    fn two_by_two_minors() {
        // a = 2, b = -4, c = 1: a^2 + bc = 0
        let (a, b, c) = (2, -4, 1);
        let pt = NilpotentPoint::new(ExactMatrix::from_int_rows(&[vec![a, b], vec![c, -a]])).unwrap();
        let l = lusztig_embed(&pt);
        let got: Vec<_> = (1..=4).combinations(2).map(|r| l.plucker(&r)).collect();
        assert_eq!(got, vec![int(0), int(-b), int(a), int(a), int(c), int(1)]);
    }

    #[test]
    fn bottom_minor_and_shift() {
        let rng = RandomSource::new(5);
        for n in 2..=4 {
            for mu in partitions_of(n) {
                let pt = random_orbit_point(&mu, &mut rng.fork(n as u64)).unwrap();
                let l = lusztig_embed(&pt);
                assert_eq!(l.bottom_minor(), int(1));
                assert!(l.is_shift_stable());
            }
        }
    }

    #[test]
    fn schubert_tuples() {
        let p = |v: &[usize]| Partition::new(v.to_vec()).unwrap();
        assert_eq!(orbit_schubert_tuple(&p(&[2, 1])).unwrap().entries(), &[4, 7, 8]);
        assert_eq!(orbit_schubert_tuple(&p(&[3])).unwrap().entries(), &[1, 4, 7]);
        assert_eq!(orbit_schubert_tuple(&p(&[1, 1, 1])).unwrap().entries(), &[7, 8, 9]);
    }

    #[test]
    fn nonvanishing_minors_dominate_orbit_tuple() {
        let rng = RandomSource::new(6);
        for n in 2..=3 {
            for mu in partitions_of(n) {
                let target = orbit_schubert_tuple(&mu).unwrap();
                for k in 0..5 {
                    let pt = random_orbit_point(&mu, &mut rng.fork(k)).unwrap();
                    let nz = lusztig_embed(&pt).nonvanishing_tuples();
                    assert!(nz.iter().all(|t| t.dominates(&target)), "{mu}");
                    assert!(nz.contains(&target), "{mu}");
                }
            }
        }
    }
}
