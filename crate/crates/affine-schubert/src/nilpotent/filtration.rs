//! The filtration `F_{m,μ}` of the coordinate ring of a nilpotent orbit closure
//! by products of at most `m` maximal minors of the stacked-powers matrix, and
//! its comparison with products of rectangular Weyl module dimensions.
//!
//! Every maximal minor is homogeneous in the matrix entries and has a weight
//! for conjugation by diagonal matrices, and the orbit closure is stable under
//! both actions. The span of any family of such functions is therefore the
//! direct sum of its bihomogeneous pieces, and ranks are computed one piece at
//! a time. Values are taken modulo a 61-bit prime at points of the orbit over
//! that prime field. A linear relation over the rationals reduces to a
//! relation modulo the prime, so the computed dimension never exceeds the true
//! one; a surplus of sample points makes it exact with overwhelming probability.

use std::collections::BTreeMap;

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{check_cap, Error, Result};
use crate::exact::modp::{self, Echelon};
use crate::exact::{ExactMatrix, ExactScalar, RandomSource};
use crate::nilpotent::lusztig::lusztig_embed;
use crate::nilpotent::orbits::random_orbit_point;
use crate::partition::Partition;
use crate::schur::weyl_rectangle_dim;

pub const DEFAULT_MAX_N: usize = 4;
pub const DEFAULT_MAX_M: usize = 3;

/// Cap on `(n^n)^m`, which bounds the number of candidate products formed at
/// the last step.
pub const MAX_CANDIDATES: u128 = 100_000;

/// Sample points beyond the largest bihomogeneous rank.
pub const POINT_SURPLUS: usize = 20;

const INITIAL_POINTS: usize = 64;

/// Orientation of the rectangles `L_{λ_i^m} E` in the predicted dimension.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Convention {
    /// `λ_i` rows and `m` columns.
    Rows,
    /// `m` rows and `λ_i` columns.
    Cols,
}

impl Convention {
    pub fn other(self) -> Self {
        match self {
            Convention::Rows => Convention::Cols,
            Convention::Cols => Convention::Rows,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Convention::Rows => "rows",
            Convention::Cols => "cols",
        }
    }
}

impl std::str::FromStr for Convention {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "rows" => Ok(Convention::Rows),
            "cols" => Ok(Convention::Cols),
            _ => Err(Error::InvalidArgument(format!("unknown convention {s:?}"))),
        }
    }
}

/// Polynomial degree and torus weight of a function on `n x n` matrices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bidegree {
    pub degree: u32,
    pub weight: Vec<i32>,
}

impl Bidegree {
    fn add(&self, other: &Bidegree) -> Bidegree {
        Bidegree {
            degree: self.degree + other.degree,
            weight: self.weight.iter().zip(&other.weight).map(|(a, b)| a + b).collect(),
        }
    }
}

/// Bidegree of the maximal minor on sorted 1-based `rows` of the stacked
/// matrix: row `(b-1)n + a` lies in block `b` holding `N^{n-b}` and carries
/// the weight of `e_a`; the columns contribute `-(1, ..., 1)`.
pub fn minor_bidegree(n: usize, rows: &[usize]) -> Bidegree {
    let mut weight = vec![-1; n];
    let mut degree = 0;
    for &row in rows {
        let block = (row - 1) / n + 1;
        let a = (row - 1) % n;
        degree += (n - block) as u32;
        weight[a] += 1;
    }
    Bidegree { degree, weight }
}

fn jordan_modp(mu: &Partition) -> Vec<u64> {
    let n = mu.size();
    let mut m = vec![0; n * n];
    let mut start = 0;
    for &b in mu.parts() {
        for k in 0..b.saturating_sub(1) {
            m[(start + k) * n + start + k + 1] = 1;
        }
        start += b;
    }
    m
}

fn inverse_modp(a: &[u64], n: usize) -> Option<Vec<u64>> {
    let w = 2 * n;
    let mut m = vec![0; n * w];
    for i in 0..n {
        m[i * w..i * w + n].copy_from_slice(&a[i * n..(i + 1) * n]);
        m[i * w + n + i] = 1;
    }
    for c in 0..n {
        let p = (c..n).find(|&i| m[i * w + c] != 0)?;
        for j in 0..w {
            m.swap(c * w + j, p * w + j);
        }
        let inv = modp::inv(m[c * w + c]);
        for j in 0..w {
            m[c * w + j] = modp::mul(m[c * w + j], inv);
        }
        for i in 0..n {
            let f = m[i * w + c];
            if i == c || f == 0 {
                continue;
            }
            for j in 0..w {
                m[i * w + j] = modp::sub(m[i * w + j], modp::mul(f, m[c * w + j]));
            }
        }
    }
    Some((0..n).flat_map(|i| m[i * w + n..(i + 1) * w].to_vec()).collect())
}

/// A point `g J_μ g^{-1}` of the orbit over the prime field.
pub fn orbit_point_modp(mu: &Partition, rng: &mut RandomSource) -> Result<Vec<u64>> {
    let n = mu.size();
    for _ in 0..1000 {
        let g: Vec<u64> = (0..n * n).map(|_| rng.below(modp::PRIME)).collect();
        if let Some(inv) = inverse_modp(&g, n) {
            let j = jordan_modp(mu);
            return Ok(modp::mat_mul(&modp::mat_mul(&g, &j, n), &inv, n));
        }
    }
    Err(Error::SamplingFailed)
}

/// Values of every maximal minor of `[N^{n-1}; ...; N; I]` modulo the prime,
/// in the order of `(1..=n^2).combinations(n)`.
fn minor_values_modp(point: &[u64], n: usize, labels: &[Vec<usize>]) -> Vec<u64> {
    let mut stacked = vec![0u64; n * n * n];
    let mut power: Vec<u64> = (0..n * n).map(|k| u64::from(k % (n + 1) == 0)).collect();
    for b in (0..n).rev() {
        stacked[b * n * n..(b + 1) * n * n].copy_from_slice(&power);
        power = modp::mat_mul(&power, point, n);
    }
    labels
        .iter()
        .map(|rows| {
            let sub: Vec<u64> =
                rows.iter().flat_map(|&x| stacked[(x - 1) * n..x * n].iter().copied()).collect();
            modp::determinant(sub, n)
        })
        .collect()
}

/// Dimensions of the filtration pieces, overall and by polynomial degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiltrationData {
    pub mu: Partition,
    /// `dims[m] = dim F_{m,μ}` for `m = 0..=max_m`.
    pub dims: Vec<usize>,
    /// `degree_dims[m][d]` is the dimension of the degree-`d` part of `F_{m,μ}`.
    pub degree_dims: Vec<BTreeMap<u32, usize>>,
    /// Number of sample points used.
    pub points: usize,
}

type Basis = Vec<(Bidegree, Vec<u64>)>;

fn independent_by_group(candidates: Vec<(Bidegree, Vec<u64>)>, len: usize) -> (Basis, usize) {
    let mut groups: BTreeMap<Bidegree, Vec<Vec<u64>>> = BTreeMap::new();
    for (key, v) in candidates {
        groups.entry(key).or_default().push(v);
    }
    let groups: Vec<(Bidegree, Vec<Vec<u64>>)> = groups.into_iter().collect();
    let picked: Vec<(Bidegree, Vec<Vec<u64>>)> = groups
        .into_par_iter()
        .map(|(key, vs)| {
            let mut ech = Echelon::new(len);
            let mut kept = Vec::new();
            for v in vs {
                if ech.insert(v.clone()) {
                    kept.push(v);
                }
            }
            (key, kept)
        })
        .collect();
    let max_rank = picked.iter().map(|(_, k)| k.len()).max().unwrap_or(0);
    let basis = picked
        .into_iter()
        .flat_map(|(key, kept)| kept.into_iter().map(move |v| (key.clone(), v)))
        .collect();
    (basis, max_rank)
}

fn degree_profile(basis: &Basis) -> BTreeMap<u32, usize> {
    let mut out = BTreeMap::new();
    for (k, _) in basis {
        *out.entry(k.degree).or_insert(0) += 1;
    }
    out
}

/// Upper bound `(n^n)^m` for the number of candidate products.
pub fn filtration_size_estimate(n: usize, m: usize) -> u128 {
    (n as u128).pow(n as u32).pow(m as u32)
}

/// Computes `dim F_{m,μ}` for `m = 0..=max_m`.
///
/// With `points = None` the number of sample points grows until every
/// bihomogeneous rank is at least [`POINT_SURPLUS`] below it.
pub fn filtration_dimensions(
    mu: &Partition,
    max_m: usize,
    rng: &RandomSource,
    points: Option<usize>,
    caps: (usize, usize),
) -> Result<FiltrationData> {
    let n = mu.size();
    let estimate = filtration_size_estimate(n, max_m);
    if n > caps.0 || max_m > caps.1 || estimate > MAX_CANDIDATES {
        return Err(Error::EnumerationTooLarge { estimate, cap: MAX_CANDIDATES });
    }
    let labels: Vec<Vec<usize>> = (1..=n * n).combinations(n).collect();
    let keys: Vec<Bidegree> = labels.iter().map(|r| minor_bidegree(n, r)).collect();
    let mut count = points.unwrap_or(INITIAL_POINTS);
    loop {
        let values: Vec<Vec<u64>> = (0..count)
            .into_par_iter()
            .map(|k| {
                let pt = orbit_point_modp(mu, &mut rng.fork(k as u64))?;
                Ok(minor_values_modp(&pt, n, &labels))
            })
            .collect::<Result<_>>()?;
        let columns: Vec<(Bidegree, Vec<u64>)> = (0..labels.len())
            .map(|l| (keys[l].clone(), values.iter().map(|row| row[l]).collect()))
            .collect();

        let zero_key = Bidegree { degree: 0, weight: vec![0; n] };
        let mut dims = vec![1];
        let mut degree_dims = vec![BTreeMap::from([(0, 1)])];
        let (b1, mut max_rank) = independent_by_group(columns, count);
        let mut current = b1.clone();
        for _ in 1..=max_m {
            dims.push(current.len());
            degree_dims.push(degree_profile(&current));
            if dims.len() > max_m {
                break;
            }
            let candidates: Vec<(Bidegree, Vec<u64>)> = b1
                .iter()
                .flat_map(|(k1, v1)| {
                    current.iter().map(move |(k2, v2)| {
                        (k1.add(k2), v1.iter().zip(v2).map(|(a, b)| modp::mul(*a, *b)).collect())
                    })
                })
                .collect();
            let (next, rank) = independent_by_group(candidates, count);
            max_rank = max_rank.max(rank);
            current = next;
        }
        debug_assert!(max_m == 0 || b1.iter().any(|(k, _)| *k == zero_key));
        if max_m == 0 {
            dims.truncate(1);
            degree_dims.truncate(1);
        }
        if points.is_some() || max_rank + POINT_SURPLUS <= count {
            return Ok(FiltrationData { mu: mu.clone(), dims, degree_dims, points: count });
        }
        count = (2 * count).max(max_rank + 2 * POINT_SURPLUS);
    }
}

/// `dim F_{m,μ}`.
pub fn filtration_dimension(
    mu: &Partition,
    m: usize,
    rng: &RandomSource,
    points: Option<usize>,
) -> Result<usize> {
    Ok(filtration_dimensions(mu, m, rng, points, (DEFAULT_MAX_N, DEFAULT_MAX_M))?.dims[m])
}

/// `dim F_{m,μ}` straight from the definition: every product of at most `m`
/// maximal minors, evaluated exactly at rational points of the orbit. Only
/// practical for very small cases.
pub fn filtration_dimension_exact(
    mu: &Partition,
    m: usize,
    rng: &RandomSource,
    cap: u128,
) -> Result<usize> {
    let n = mu.size();
    let labels: Vec<Vec<usize>> = (1..=n * n).combinations(n).collect();
    let products: Vec<Vec<usize>> = (0..=m)
        .flat_map(|k| (0..labels.len()).combinations_with_replacement(k))
        .collect();
    check_cap(products.len() as u128, cap)?;
    let count = products.len() + POINT_SURPLUS;
    let rows: Vec<Vec<ExactScalar>> = (0..count)
        .into_par_iter()
        .map(|k| {
            let pt = random_orbit_point(mu, &mut rng.fork(k as u64))?;
            let l = lusztig_embed(&pt);
            let minors: Vec<ExactScalar> = labels.iter().map(|r| l.plucker(r)).collect();
            Ok(products
                .iter()
                .map(|prod| prod.iter().map(|&i| minors[i].clone()).product())
                .collect())
        })
        .collect::<Result<_>>()?;
    let entries = rows.into_iter().flatten().collect();
    Ok(ExactMatrix::new(count, products.len(), entries)?.rank())
}

/// `Π_i dim L_{rect_i} E` with `λ = μ'` and rectangles oriented by `convention`.
pub fn predicted_dimension(mu: &Partition, m: usize, convention: Convention) -> u128 {
    let n = mu.size();
    mu.conjugate()
        .parts()
        .iter()
        .map(|&l| match convention {
            Convention::Rows => weyl_rectangle_dim(n, l, m),
            Convention::Cols => weyl_rectangle_dim(n, m, l),
        })
        .product()
}

/// Comparison of `dim F_{m,μ}` with the rectangle-product prediction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjectureReport {
    pub mu: Partition,
    pub m: usize,
    pub filtration_dim: usize,
    pub predicted: u128,
    pub convention: Convention,
    #[serde(rename = "match")]
    pub matches: bool,
    pub alternate: AlternateReading,
}

/// The prediction under the other rectangle orientation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlternateReading {
    pub convention: Convention,
    pub predicted: u128,
    #[serde(rename = "match")]
    pub matches: bool,
}

pub fn conjecture_check(
    mu: &Partition,
    m: usize,
    rng: &RandomSource,
    convention: Convention,
) -> Result<ConjectureReport> {
    let dim = filtration_dimension(mu, m, rng, None)?;
    Ok(conjecture_report(mu, m, dim, convention))
}

/// Builds the report for an already computed filtration dimension.
pub fn conjecture_report(mu: &Partition, m: usize, dim: usize, convention: Convention) -> ConjectureReport {
    let predicted = predicted_dimension(mu, m, convention);
    let alt = convention.other();
    let alt_predicted = predicted_dimension(mu, m, alt);
    ConjectureReport {
        mu: mu.clone(),
        m,
        filtration_dim: dim,
        predicted,
        convention,
        matches: dim as u128 == predicted,
        alternate: AlternateReading {
            convention: alt,
            predicted: alt_predicted,
            matches: dim as u128 == alt_predicted,
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions_of;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn bidegrees() {
        // n = 2: rows (1,2) is N itself, degree 2; the bottom block is the identity
        assert_eq!(minor_bidegree(2, &[3, 4]), Bidegree { degree: 0, weight: vec![0, 0] });
        assert_eq!(minor_bidegree(2, &[1, 4]), Bidegree { degree: 1, weight: vec![0, 0] });
        assert_eq!(minor_bidegree(2, &[1, 3]), Bidegree { degree: 1, weight: vec![1, -1] });
    }

    #[test]
    fn modp_points_are_in_orbit() {
        let rng = RandomSource::new(3);
        let mu = p(&[2, 1]);
        let pt = orbit_point_modp(&mu, &mut rng.fork(0)).unwrap();
        let sq = modp::mat_mul(&pt, &pt, 3);
        assert!(sq.iter().all(|&x| x == 0));
        assert!(pt.iter().any(|&x| x != 0));
    }

    #[test]
    fn n2_small_values() {
        let rng = RandomSource::new(1);
        let d = filtration_dimensions(&p(&[2]), 3, &rng, None, (4, 3)).unwrap();
        assert_eq!(d.dims, vec![1, 4, 9, 16]);
        assert_eq!(d.degree_dims[1], BTreeMap::from([(0, 1), (1, 3)]));
        assert_eq!(filtration_dimension(&p(&[1, 1]), 2, &rng, None).unwrap(), 1);
    }

    #[test]
    fn exact_route_agrees_on_small_cases() {
        let rng = RandomSource::new(2);
        assert_eq!(filtration_dimension_exact(&p(&[2]), 1, &rng, 1000).unwrap(), 4);
        assert_eq!(filtration_dimension_exact(&p(&[2]), 2, &rng, 1000).unwrap(), 9);
        for mu in partitions_of(3) {
            let exact = filtration_dimension_exact(&mu, 1, &rng, 1000).unwrap();
            assert_eq!(filtration_dimension(&mu, 1, &rng, None).unwrap(), exact, "{mu}");
        }
    }

    #[test]
    fn caps_are_enforced() {
        let rng = RandomSource::new(0);
        let r = filtration_dimensions(&p(&[5]), 1, &rng, None, (4, 3));
        assert!(matches!(r, Err(Error::EnumerationTooLarge { .. })));
        let r = filtration_dimensions(&p(&[2, 2]), 3, &rng, None, (4, 3));
        assert!(matches!(r, Err(Error::EnumerationTooLarge { .. })));
    }

    #[test]
    fn predictions() {
        assert_eq!(predicted_dimension(&p(&[2]), 1, Convention::Rows), 4);
        assert_eq!(predicted_dimension(&p(&[2]), 2, Convention::Rows), 9);
        assert_eq!(predicted_dimension(&p(&[2]), 2, Convention::Cols), 1);
        assert_eq!(predicted_dimension(&p(&[1, 1, 1]), 3, Convention::Rows), 1);
        assert_eq!(predicted_dimension(&p(&[3]), 1, Convention::Rows), 27);
        let rep = conjecture_report(&p(&[2]), 2, 9, Convention::Rows);
        let json = serde_json::to_value(&rep).unwrap();
        assert_eq!(json["match"], true);
        assert_eq!(json["convention"], "rows");
        assert_eq!(json["alternate"]["match"], false);
    }
}
