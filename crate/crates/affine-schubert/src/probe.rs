//! Finite test of the claim that the shuffle relations cut out the t-stable
//! subspaces: sampled `r`-dimensional subspaces of `K^{rn}` are classified by
//! "every shuffle vanishes" and by "stable under the shift `t`".

use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{random_invertible, ExactMatrix, ExactScalar, RandomSource};
use crate::schubert::{build_cell_matrix, shifted_span_rank};
use crate::straighten::{shuffle, shuffle_bases, ShuffleRelation, POINT_BOUND};
use crate::weyl::{reduced_chain, Ambient};

pub const DEFAULT_SAMPLES: usize = 200;

/// Every shuffle relation of the ambient, over all bases and levels.
pub fn all_shuffles(amb: Ambient) -> Vec<ShuffleRelation> {
    shuffle_bases(amb)
        .iter()
        .flat_map(|b| (1..=amb.r()).map(move |l| shuffle(b, l, amb).expect("well-formed base")))
        .collect()
}

fn plucker(m: &ExactMatrix, rows: &[usize]) -> ExactScalar {
    let cols: Vec<usize> = (1..=m.cols()).collect();
    m.minor(rows, &cols).expect("rows in range")
}

pub fn shuffles_vanish(m: &ExactMatrix, relations: &[ShuffleRelation]) -> bool {
    relations.iter().all(|rel| {
        rel.terms
            .iter()
            .map(|t| ExactScalar::from_integer(t.sign.into()) * plucker(m, t.tuple.entries()))
            .sum::<ExactScalar>()
            .is_zero()
    })
}

/// Full column rank and `t` maps the column span into itself.
pub fn is_t_stable(m: &ExactMatrix, n: usize) -> bool {
    let r = m.cols();
    m.rank() == r && shifted_span_rank(m, n) == r
}

/// `Σ_k t^k A_k` as an `rn x rn` matrix with `A_0` invertible; it commutes
/// with the shift, so it preserves t-stability.
pub fn random_toeplitz(amb: Ambient, rng: &mut RandomSource) -> Result<ExactMatrix> {
    let (n, r) = (amb.n, amb.r());
    let mut blocks = vec![random_invertible(n, rng)?];
    for _ in 1..r {
        let entries: Vec<i64> = (0..n * n).map(|_| rng.small_int(3)).collect();
        blocks.push(ExactMatrix::from_ints(n, n, &entries));
    }
    let mut g = ExactMatrix::zeros(r * n, r * n);
    for a in 0..r {
        for b in 0..=a {
            let blk = &blocks[a - b];
            for i in 0..n {
                for j in 0..n {
                    g.set(a * n + i, b * n + j, blk.get(i, j).clone());
                }
            }
        }
    }
    Ok(g)
}

/// A point of a random cell of the reduced chain, moved by a random
/// shift-commuting automorphism.
pub fn random_t_stable(amb: Ambient, rng: &mut RandomSource) -> Result<ExactMatrix> {
    let chain = reduced_chain(amb);
    let phi = &chain[rng.below(chain.len() as u64) as usize];
    let point = build_cell_matrix(phi).random_point(rng, POINT_BOUND);
    Ok(random_toeplitz(amb, rng)?.mul(point.matrix()))
}

/// A random integer `rn x r` matrix of full rank.
pub fn random_subspace(amb: Ambient, rng: &mut RandomSource) -> Result<ExactMatrix> {
    let (rows, r) = (amb.rows(), amb.r());
    for _ in 0..1000 {
        let entries: Vec<i64> = (0..rows * r).map(|_| rng.small_int(POINT_BOUND)).collect();
        let m = ExactMatrix::from_ints(rows, r, &entries);
        if m.rank() == r {
            return Ok(m);
        }
    }
    Err(Error::SamplingFailed)
}

/// A sample on which the two predicates disagree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub source: &'static str,
    pub index: usize,
    pub matrix: Vec<Vec<String>>,
    pub shuffles_vanish: bool,
    pub t_stable: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProbeReport {
    pub n: usize,
    pub s: usize,
    pub relations: usize,
    pub random_samples: usize,
    pub stable_samples: usize,
    /// Random samples that turned out t-stable.
    pub random_stable: usize,
    pub misclassified: usize,
    pub counterexamples: Vec<Counterexample>,
}

fn classify(
    source: &'static str,
    index: usize,
    m: &ExactMatrix,
    relations: &[ShuffleRelation],
    n: usize,
) -> (bool, Option<Counterexample>) {
    let vanish = shuffles_vanish(m, relations);
    let stable = is_t_stable(m, n);
    let bad = (vanish != stable).then(|| Counterexample {
        source,
        index,
        matrix: (0..m.rows()).map(|i| m.row(i).iter().map(|x| x.to_string()).collect()).collect(),
        shuffles_vanish: vanish,
        t_stable: stable,
    });
    (stable, bad)
}

pub fn shuffle_probe(amb: Ambient, rng: &RandomSource, random: usize, stable: usize) -> Result<ProbeReport> {
    let relations = all_shuffles(amb);
    let rand_rng = rng.fork(0);
    let stable_rng = rng.fork(1);
    let random_results: Vec<(bool, Option<Counterexample>)> = (0..random)
        .into_par_iter()
        .map(|k| {
            let m = random_subspace(amb, &mut rand_rng.fork(k as u64))?;
            Ok(classify("random", k, &m, &relations, amb.n))
        })
        .collect::<Result<_>>()?;
    let stable_results: Vec<(bool, Option<Counterexample>)> = (0..stable)
        .into_par_iter()
        .map(|k| {
            let m = random_t_stable(amb, &mut stable_rng.fork(k as u64))?;
            Ok(classify("t-stable", k, &m, &relations, amb.n))
        })
        .collect::<Result<_>>()?;
    let random_stable = random_results.iter().filter(|(s, _)| *s).count();
    let counterexamples: Vec<Counterexample> =
        random_results.into_iter().chain(stable_results).filter_map(|(_, c)| c).collect();
    Ok(ProbeReport {
        n: amb.n,
        s: amb.s,
        relations: relations.len(),
        random_samples: random,
        stable_samples: stable,
        random_stable,
        misclassified: counterexamples.len(),
        counterexamples,
    })
}
