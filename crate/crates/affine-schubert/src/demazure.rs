//! Linear independence of the admissible Plücker coordinates on a chain
//! element, certified by exact evaluation rank, and the resulting degree-one
//! dimension count.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{ExactMatrix, ExactScalar, RandomSource};
use crate::schubert::{build_cell_matrix, vanishing_criterion, CellPoint};
use crate::straighten::POINT_BOUND;
use crate::weyl::{all_tuples, enumerate_admissible, ChainElement, IndexTuple};

/// Points beyond the number of tuples used by default.
pub const EXTRA_POINTS: usize = 10;

/// Evaluation of the admissible coordinates of `φ` at random points of its cell.
#[derive(Clone, Debug)]
pub struct IndependenceCertificate {
    pub phi: ChainElement,
    pub tuples: Vec<IndexTuple>,
    pub points: Vec<CellPoint>,
    /// Rows are points, columns are tuples.
    pub evaluation: ExactMatrix,
    pub rank: usize,
    /// A candidate linear relation among the tuples when the rank is deficient.
    pub witness: Option<Vec<ExactScalar>>,
}

impl IndependenceCertificate {
    pub fn expected(&self) -> usize {
        self.tuples.len()
    }

    pub fn is_valid(&self) -> bool {
        self.rank == self.tuples.len()
    }
}

impl Serialize for IndependenceCertificate {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Report<'a> {
            phi: usize,
            tuples: &'a [IndexTuple],
            rank: usize,
            expected: usize,
            valid: bool,
            #[serde(skip_serializing_if = "Option::is_none")]
            witness: Option<Vec<String>>,
        }
        Report {
            phi: self.phi.position,
            tuples: &self.tuples,
            rank: self.rank,
            expected: self.expected(),
            valid: self.is_valid(),
            witness: self.witness.as_ref().map(|w| w.iter().map(|x| x.to_string()).collect()),
        }
        .serialize(s)
    }
}

/// Exact evaluation matrix of `tuples` at `points`.
pub fn evaluation_matrix(points: &[CellPoint], tuples: &[IndexTuple]) -> ExactMatrix {
    let rows: Vec<Vec<ExactScalar>> = points
        .par_iter()
        .map(|p| tuples.iter().map(|t| p.plucker(t)).collect())
        .collect();
    let entries = rows.into_iter().flatten().collect();
    ExactMatrix::new(points.len(), tuples.len(), entries).expect("shape matches")
}

/// Certifies independence with `#A_φ + 10` random points.
pub fn independence_check(phi: &ChainElement, rng: &RandomSource) -> IndependenceCertificate {
    independence_check_with(phi, rng, EXTRA_POINTS)
}

/// Certifies independence with `#A_φ + extra` random points.
pub fn independence_check_with(
    phi: &ChainElement,
    rng: &RandomSource,
    extra: usize,
) -> IndependenceCertificate {
    let tuples = enumerate_admissible(phi);
    let cell = build_cell_matrix(phi);
    let points = cell.random_points(rng, tuples.len() + extra, POINT_BOUND);
    let evaluation = evaluation_matrix(&points, &tuples);
    let rank = evaluation.rank();
    let witness = (rank < tuples.len()).then(|| evaluation.kernel_vector()).flatten();
    IndependenceCertificate { phi: phi.clone(), tuples, points, evaluation, rank, witness }
}

/// `dim K[X(φ)]_1 = #A_φ`, after certifying independence.
pub fn demazure_dimension(phi: &ChainElement, rng: &RandomSource) -> Result<usize> {
    let cert = independence_check(phi, rng);
    if cert.is_valid() {
        Ok(cert.rank)
    } else {
        Err(Error::NotCertified)
    }
}

/// Result of checking that admissible coordinates span all coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpanningReport {
    pub phi: usize,
    pub admissible: usize,
    pub nonvanishing: usize,
    pub points: usize,
    pub combined_rank: usize,
    pub pass: bool,
}

/// Checks that the value vector of every nonvanishing coordinate lies in the
/// span of the admissible columns, at `#A_φ + extra` random points.
pub fn spanning_check(phi: &ChainElement, rng: &RandomSource, extra: usize) -> SpanningReport {
    let adm = enumerate_admissible(phi);
    let nonvanishing: Vec<IndexTuple> =
        all_tuples(phi.amb).into_iter().filter(|t| !vanishing_criterion(t, phi)).collect();
    let cell = build_cell_matrix(phi);
    let points = cell.random_points(rng, adm.len() + extra, POINT_BOUND);
    let mut cols = adm.clone();
    cols.extend(nonvanishing.iter().cloned());
    let combined_rank = evaluation_matrix(&points, &cols).rank();
    SpanningReport {
        phi: phi.position,
        admissible: adm.len(),
        nonvanishing: nonvanishing.len(),
        points: points.len(),
        combined_rank,
        pass: combined_rank == adm.len(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::{reduced_chain, Ambient};

    #[test]
    fn small_certificates() {
        let rng = RandomSource::new(1);
        let chain = reduced_chain(Ambient::new(2, 1).unwrap());
        let c = independence_check(&chain[0], &rng);
        assert_eq!((c.rank, c.expected()), (4, 4));
        assert!(c.is_valid() && c.witness.is_none());
        assert_eq!(demazure_dimension(&chain[1], &rng), Ok(2));
        assert_eq!(demazure_dimension(&chain[2], &rng), Ok(1));
        let json = serde_json::to_value(&c).unwrap();
        assert_eq!(json["valid"], true);
        assert_eq!(json["phi"], 1);
    }

    #[test]
    fn top_cell_n3() {
        let rng = RandomSource::new(2);
        let chain = reduced_chain(Ambient::new(3, 1).unwrap());
        let c = independence_check(&chain[0], &rng);
        assert_eq!(c.evaluation.rows(), 37);
        assert_eq!(c.rank, 27);
    }

    #[test]
    fn dependent_columns_produce_witness() {
        let rng = RandomSource::new(3);
        let chain = reduced_chain(Ambient::new(2, 1).unwrap());
        let cell = build_cell_matrix(&chain[0]);
        let points = cell.random_points(&rng, 6, POINT_BOUND);
        // (1,4) and (2,3) agree on the whole variety
        let tuples = vec![
            IndexTuple::new(2, vec![1, 4]).unwrap(),
            IndexTuple::new(2, vec![2, 3]).unwrap(),
        ];
        let m = evaluation_matrix(&points, &tuples);
        assert_eq!(m.rank(), 1);
        let w = m.kernel_vector().unwrap();
        assert_eq!(w[0], -w[1].clone());
    }

    #[test]
    fn spanning_small() {
        let rng = RandomSource::new(4);
        for phi in reduced_chain(Ambient::new(2, 1).unwrap()) {
            assert!(spanning_check(&phi, &rng, 20).pass);
        }
    }
}
