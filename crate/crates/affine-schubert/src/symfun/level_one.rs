//! Graded dimensions of the first filtration piece `F_{1,μ}` against the
//! Kostka–Foulkes decomposition over level-one weights.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::RandomSource;
use crate::nilpotent::filtration::{filtration_dimensions, DEFAULT_MAX_M};
use crate::partition::{partitions_with_rows, Partition};
use crate::schur::weyl_dimension;
use crate::symfun::kostka::cocharge_kostka;

pub const MAX_N: usize = 3;

/// A dominant weight of `GL_n` with coordinates summing to zero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DominantWeight {
    pub alpha: Vec<i64>,
}

impl DominantWeight {
    pub fn new(alpha: Vec<i64>) -> Result<Self> {
        if alpha.windows(2).any(|w| w[0] < w[1]) || alpha.iter().sum::<i64>() != 0 {
            return Err(Error::InvalidArgument(format!("{alpha:?} is not a dominant weight of sum zero")));
        }
        Ok(Self { alpha })
    }

    /// `◇(α) = (α_1 + 1, ..., α_n + 1)`, a partition of `n` when `α_n >= -1`.
    pub fn diamond(&self) -> Result<Partition> {
        if self.alpha.last().is_some_and(|&a| a < -1) {
            return Err(Error::InvalidArgument("weight is below level one".into()));
        }
        Partition::new(self.alpha.iter().map(|&a| (a + 1) as usize).collect())
    }

    pub fn dimension(&self) -> u128 {
        weyl_dimension(&self.alpha)
    }
}

/// The weights with `α_n = -1`, in the order of their partitions `◇(α)`.
pub fn level_one_weights(n: usize) -> Vec<DominantWeight> {
    partitions_with_rows(n, n - 1)
        .into_iter()
        .map(|nu| DominantWeight::new(nu.padded(n).iter().map(|&x| x as i64 - 1).collect()).expect("dominant"))
        .collect()
}

/// Predicted `dim F_{1,μ,d}`: the constants in degree 0 plus
/// `Σ_α [q^d] K̃_{◇(α)',μ'}(q) dim S_α E` with the cocharge normalization.
pub fn predicted_degree_dimension(mu: &Partition, d: usize) -> u128 {
    let n = mu.size();
    let mut total = u128::from(d == 0);
    for w in level_one_weights(n) {
        let nu = w.diamond().expect("level one");
        let c = cocharge_kostka(&nu.conjugate(), &mu.conjugate()).coeff(d);
        total += c as u128 * w.dimension();
    }
    total
}

/// The same sum with `K̃_{μ',◇(α)}` in place of `K̃_{◇(α)',μ'}`.
pub fn literal_degree_dimension(mu: &Partition, d: usize) -> u128 {
    let n = mu.size();
    let mut total = u128::from(d == 0);
    for w in level_one_weights(n) {
        let nu = w.diamond().expect("level one");
        let c = cocharge_kostka(&mu.conjugate(), &nu).coeff(d);
        total += c as u128 * w.dimension();
    }
    total
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeRow {
    pub degree: usize,
    pub filtration: usize,
    pub predicted: u128,
    #[serde(rename = "match")]
    pub matches: bool,
    pub literal: u128,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LevelOneReport {
    pub mu: Partition,
    pub convention: &'static str,
    pub degrees: Vec<DegreeRow>,
    pub pass: bool,
    pub literal_pass: bool,
}

pub fn level_one_check(mu: &Partition, max_degree: usize, rng: &RandomSource) -> Result<LevelOneReport> {
    let n = mu.size();
    if n > MAX_N {
        return Err(Error::EnumerationTooLarge { estimate: n as u128, cap: MAX_N as u128 });
    }
    let data = filtration_dimensions(mu, 1, rng, None, (MAX_N, DEFAULT_MAX_M))?;
    let degrees: Vec<DegreeRow> = (0..=max_degree)
        .map(|d| {
            let filtration = data.degree_dims[1].get(&(d as u32)).copied().unwrap_or(0);
            let predicted = predicted_degree_dimension(mu, d);
            DegreeRow {
                degree: d,
                filtration,
                predicted,
                matches: filtration as u128 == predicted,
                literal: literal_degree_dimension(mu, d),
            }
        })
        .collect();
    let pass = degrees.iter().all(|r| r.matches);
    let literal_pass = degrees.iter().all(|r| r.filtration as u128 == r.literal);
    Ok(LevelOneReport { mu: mu.clone(), convention: "cocharge", degrees, pass, literal_pass })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions_of;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn weights() {
        let w = level_one_weights(3);
        let alphas: Vec<Vec<i64>> = w.iter().map(|w| w.alpha.clone()).collect();
        assert_eq!(alphas, vec![vec![2, -1, -1], vec![1, 0, -1]]);
        assert_eq!(w[1].dimension(), 8);
        assert_eq!(w[0].dimension(), 10);
        assert!(DominantWeight::new(vec![0, 1, -1]).is_err());
    }

    #[test]
    fn hand_values() {
        let pred = |mu: &[usize]| (0..5).map(|d| predicted_degree_dimension(&p(mu), d)).collect::<Vec<_>>();
        assert_eq!(pred(&[2]), vec![1, 3, 0, 0, 0]);
        assert_eq!(pred(&[2, 1]), vec![1, 8, 0, 0, 0]);
        assert_eq!(pred(&[3]), vec![1, 8, 8, 10, 0]);
        assert_eq!(pred(&[1, 1, 1]), vec![1, 0, 0, 0, 0]);
    }

    #[test]
    fn checks_pass() {
        let rng = RandomSource::new(8);
        for n in 2..=3 {
            for mu in partitions_of(n) {
                let r = level_one_check(&mu, 6, &rng).unwrap();
                assert!(r.pass, "{mu}: {:?}", r.degrees);
            }
        }
        let r = level_one_check(&p(&[3]), 6, &rng).unwrap();
        assert!(!r.literal_pass);
    }
}
