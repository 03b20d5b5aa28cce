//! Orbit membership by ranks of powers, Jordan forms and random orbit points.

use crate::error::{Error, Result};
use num_traits::One;

use crate::exact::{random_invertible, ExactMatrix, ExactScalar, RandomSource};
use crate::partition::Partition;

/// A nilpotent matrix, optionally tagged with the orbit it was sampled from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NilpotentPoint {
    matrix: ExactMatrix,
    claimed: Option<Partition>,
}

impl NilpotentPoint {
    /// Fails with [`Error::NotNilpotent`] unless the matrix is square with `N^n = 0`.
    pub fn new(matrix: ExactMatrix) -> Result<Self> {
        if matrix.rows() != matrix.cols() || !matrix.pow(matrix.rows() as u32).is_zero() {
            return Err(Error::NotNilpotent);
        }
        Ok(Self { matrix, claimed: None })
    }

    pub fn with_claim(mut self, mu: Partition) -> Self {
        self.claimed = Some(mu);
        self
    }

    pub fn matrix(&self) -> &ExactMatrix {
        &self.matrix
    }

    pub fn claimed(&self) -> Option<&Partition> {
        self.claimed.as_ref()
    }

    pub fn size(&self) -> usize {
        self.matrix.rows()
    }

    /// `rank(N^i)` for `i = 1..=n`.
    pub fn power_ranks(&self) -> Vec<usize> {
        let n = self.size();
        let mut out = Vec::with_capacity(n);
        let mut p = self.matrix.clone();
        for _ in 0..n {
            out.push(p.rank());
            p = p.mul(&self.matrix);
        }
        out
    }

    /// Jordan type, read off from the ranks of powers.
    pub fn jordan_type(&self) -> Partition {
        let n = self.size();
        let mut ranks = vec![n];
        ranks.extend(self.power_ranks());
        let conj: Vec<usize> = ranks.windows(2).map(|w| w[0] - w[1]).collect();
        Partition::new(conj).expect("rank drops decrease").conjugate()
    }
}

/// Nilpotent Jordan matrix with one block of size `μ_i` per part; each block has
/// ones on the superdiagonal.
pub fn jordan_matrix(mu: &Partition) -> ExactMatrix {
    let n = mu.size();
    let mut m = ExactMatrix::zeros(n, n);
    let mut start = 0;
    for &b in mu.parts() {
        for k in 0..b.saturating_sub(1) {
            m.set(start + k, start + k + 1, ExactScalar::one());
        }
        start += b;
    }
    m
}

/// `(in_closure, in_open_orbit)` for `N` and the orbit of Jordan type `μ`:
/// `rank(N^i) <= n - (λ_1 + ... + λ_i)` for all `i`, with `λ = μ'`, and the
/// same with equality.
pub fn orbit_membership(point: &NilpotentPoint, mu: &Partition) -> Result<(bool, bool)> {
    let n = point.size();
    if mu.size() != n {
        return Err(Error::SizeMismatch(mu.size(), n));
    }
    let lambda = mu.conjugate();
    let mut closure = true;
    let mut open = true;
    let mut partial = 0;
    for (i, rank) in point.power_ranks().into_iter().enumerate() {
        partial += lambda.part(i + 1);
        let bound = n - partial;
        closure &= rank <= bound;
        open &= rank == bound;
    }
    Ok((closure, open))
}

/// `g J_μ g^{-1}` for a random invertible integer `g`.
pub fn random_orbit_point(mu: &Partition, rng: &mut RandomSource) -> Result<NilpotentPoint> {
    let n = mu.size();
    let g = random_invertible(n, rng)?;
    let inv = g.inverse().ok_or(Error::SamplingFailed)?;
    let m = g.mul(&jordan_matrix(mu)).mul(&inv);
    let point = NilpotentPoint::new(m)?.with_claim(mu.clone());
    let (_, open) = orbit_membership(&point, mu)?;
    if !open {
        return Err(Error::SamplingFailed);
    }
    Ok(point)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions_of;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn membership_examples() {
        let zero = NilpotentPoint::new(ExactMatrix::zeros(3, 3)).unwrap();
        for mu in partitions_of(3) {
            assert!(orbit_membership(&zero, &mu).unwrap().0);
        }
        let j3 = NilpotentPoint::new(jordan_matrix(&p(&[3]))).unwrap();
        assert_eq!(orbit_membership(&j3, &p(&[3])).unwrap(), (true, true));
        let j21 = NilpotentPoint::new(jordan_matrix(&p(&[2, 1]))).unwrap();
        assert_eq!(orbit_membership(&j21, &p(&[3])).unwrap(), (true, false));
        assert_eq!(
            NilpotentPoint::new(ExactMatrix::identity(2)),
            Err(Error::NotNilpotent)
        );
    }

    #[test]
    fn jordan_types_roundtrip() {
        for n in 1..=5 {
            for mu in partitions_of(n) {
                let pt = NilpotentPoint::new(jordan_matrix(&mu)).unwrap();
                assert_eq!(pt.jordan_type(), mu);
            }
        }
    }

    #[test]
    fn random_points_land_in_open_orbit() {
        let rng = RandomSource::new(17);
        for n in 1..=4 {
            for mu in partitions_of(n) {
                for k in 0..10 {
                    let pt = random_orbit_point(&mu, &mut rng.fork(k)).unwrap();
                    assert_eq!(pt.jordan_type(), mu);
                    assert!(pt.matrix().pow(n as u32).is_zero());
                }
            }
        }
        let zero = random_orbit_point(&p(&[1, 1, 1]), &mut rng.fork(99)).unwrap();
        assert!(zero.matrix().is_zero());
    }
}
