//! Equations of nilpotent orbit closures: the invariants `V_{0,p}` and the
//! partial-trace spaces `V_{i,μ(i)}` spanned by `Σ_{|J|=p-i} X(P,J|Q,J)`.

use itertools::Itertools;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{ExactMatrix, ExactScalar, Poly, RandomSource};
use crate::nilpotent::orbits::{jordan_matrix, random_orbit_point};
use crate::partition::{partitions_of, Partition};

/// Largest matrix size accepted by the equation routines.
pub const MAX_N: usize = 6;

/// Points sampled per orbit in [`cutout_check`].
pub const CUTOUT_POINTS: usize = 30;

/// One minor `X(rows|cols)` with a coefficient. Indices are 1-based and the
/// order of the lists fixes the sign.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinorTerm {
    pub coeff: i64,
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
}

/// A linear combination of minors of the generic `n x n` matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinorSum {
    pub label: String,
    pub n: usize,
    pub terms: Vec<MinorTerm>,
}

impl MinorSum {
    pub fn evaluate(&self, x: &ExactMatrix) -> ExactScalar {
        self.terms
            .iter()
            .map(|t| ExactScalar::from_integer(t.coeff.into()) * x.minor(&t.rows, &t.cols).expect("indices in range"))
            .sum()
    }

    /// Expansion in the entries `x_{ij}`, variable `(i-1)n + (j-1)`.
    pub fn to_poly(&self) -> Poly {
        let n = self.n;
        let vars = n * n;
        let mut out = Poly::zero(vars);
        for t in &self.terms {
            let k = t.rows.len();
            for perm in (0..k).permutations(k) {
                let inversions =
                    (0..k).tuple_combinations().filter(|&(a, b)| perm[a] > perm[b]).count();
                let mut mono = vec![0u32; vars];
                for (a, &b) in perm.iter().enumerate() {
                    mono[(t.rows[a] - 1) * n + t.cols[b] - 1] += 1;
                }
                let sign = if inversions % 2 == 0 { t.coeff } else { -t.coeff };
                out.add_term(mono, ExactScalar::from_integer(sign.into()));
            }
        }
        out
    }

    pub fn degree(&self) -> usize {
        self.terms.first().map_or(0, |t| t.rows.len())
    }
}

/// `μ(i) = μ_1 + ... + μ_i - i + 1` with `μ` padded by zeros.
pub fn mu_index(mu: &Partition, i: usize) -> i64 {
    let s: usize = (1..=i).map(|j| mu.part(j)).sum();
    s as i64 - i as i64 + 1
}

/// `V_{0,p} = Σ_{|J|=p} X(J|J)`, the `p`-th coefficient of the characteristic
/// polynomial up to sign.
pub fn invariant(n: usize, p: usize) -> MinorSum {
    let terms = (1..=n)
        .combinations(p)
        .map(|j| MinorTerm { coeff: 1, rows: j.clone(), cols: j })
        .collect();
    MinorSum { label: format!("V_{{0,{p}}}"), n, terms }
}

/// The spanning set `Σ_{|J|=p-i} X(P,J|Q,J)` of `V_{i,p}`, one element per
/// pair of `i`-subsets `P, Q`. Terms with `J` meeting `P` or `Q` are zero and
/// are left out; empty sums are skipped.
pub fn partial_trace_space(n: usize, i: usize, p: usize) -> Vec<MinorSum> {
    let mut out = Vec::new();
    for pp in (1..=n).combinations(i) {
        for qq in (1..=n).combinations(i) {
            let free: Vec<usize> = (1..=n).filter(|x| !pp.contains(x) && !qq.contains(x)).collect();
            let terms: Vec<MinorTerm> = free
                .into_iter()
                .combinations(p - i)
                .map(|j| MinorTerm {
                    coeff: 1,
                    rows: pp.iter().chain(&j).copied().collect(),
                    cols: qq.iter().chain(&j).copied().collect(),
                })
                .collect();
            if !terms.is_empty() {
                out.push(MinorSum { label: format!("V_{{{i},{p}}}(P={pp:?},Q={qq:?})"), n, terms });
            }
        }
    }
    out
}

/// Generators of the ideal of the closure of the orbit of type `μ`: all
/// `V_{0,p}` and `V_{i,μ(i)}` for `i >= 1` with `i <= min(μ(i), n - μ(i))`.
pub fn orbit_equation_spaces(mu: &Partition) -> Result<Vec<MinorSum>> {
    let n = mu.size();
    if n > MAX_N {
        return Err(Error::EnumerationTooLarge { estimate: n as u128, cap: MAX_N as u128 });
    }
    let mut gens: Vec<MinorSum> = (1..=n).map(|p| invariant(n, p)).collect();
    for i in 1..=n {
        let p = mu_index(mu, i);
        if (i as i64) <= p.min(n as i64 - p) {
            gens.extend(partial_trace_space(n, i, p as usize));
        }
    }
    Ok(gens)
}

/// Outcome for one orbit in [`cutout_check`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitCutout {
    pub nu: Partition,
    /// Whether `ν <= μ` in dominance order.
    pub contained: bool,
    pub pass: bool,
    /// Generators that failed to vanish on a contained orbit.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub nonvanishing: Vec<String>,
    /// A generator nonzero at `J_ν` for an orbit outside the closure.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub separating: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CutoutReport {
    pub mu: Partition,
    pub generators: usize,
    pub points: usize,
    pub orbits: Vec<OrbitCutout>,
    pub pass: bool,
}

/// Checks that the generators vanish at random points of every orbit `ν <= μ`
/// and that some generator is nonzero at `J_ν` for every other `ν`.
pub fn cutout_check(mu: &Partition, rng: &RandomSource, points: usize) -> Result<CutoutReport> {
    let n = mu.size();
    let gens = orbit_equation_spaces(mu)?;
    let mut orbits = Vec::new();
    for (idx, nu) in partitions_of(n).into_iter().enumerate() {
        let contained = nu.dominance_leq(mu)?;
        if contained {
            let sub = rng.fork(idx as u64);
            let mut bad = vec![false; gens.len()];
            for k in 0..points {
                let pt = random_orbit_point(&nu, &mut sub.fork(k as u64))?;
                for (g, flag) in gens.iter().zip(bad.iter_mut()) {
                    if !*flag && !g.evaluate(pt.matrix()).is_zero() {
                        *flag = true;
                    }
                }
            }
            let nonvanishing: Vec<String> =
                gens.iter().zip(&bad).filter(|(_, b)| **b).map(|(g, _)| g.label.clone()).collect();
            orbits.push(OrbitCutout {
                pass: nonvanishing.is_empty(),
                nu,
                contained,
                nonvanishing,
                separating: None,
            });
        } else {
            let j = jordan_matrix(&nu);
            let separating = gens.iter().find(|g| !g.evaluate(&j).is_zero()).map(|g| g.label.clone());
            orbits.push(OrbitCutout {
                pass: separating.is_some(),
                nu,
                contained,
                nonvanishing: Vec::new(),
                separating,
            });
        }
    }
    let pass = orbits.iter().all(|o| o.pass);
    Ok(CutoutReport { mu: mu.clone(), generators: gens.len(), points, orbits, pass })
}

/// Checks `V_{1,2}(p,q) + (X^2)_{pq} = x_{pq} tr(X)` as polynomials, which
/// expresses the entries of `X^2` through `V_{1,2}` and the trace.
pub fn square_entries_identity(n: usize) -> bool {
    let vars = n * n;
    let x = |i: usize, j: usize| Poly::var(vars, (i - 1) * n + j - 1);
    let trace = invariant(n, 1).to_poly();
    partial_trace_space(n, 1, 2).iter().all(|g| {
        let t = &g.terms[0];
        let (p, q) = (t.rows[0], t.cols[0]);
        let mut sq = Poly::zero(vars);
        for k in 1..=n {
            sq = sq.add(&x(p, k).mul(&x(k, q)));
        }
        g.to_poly().add(&sq) == x(p, q).mul(&trace)
    })
}

/// Value of every generator at a matrix, exactly.
pub fn generator_values(gens: &[MinorSum], x: &ExactMatrix) -> Vec<ExactScalar> {
    gens.iter().map(|g| g.evaluate(x)).collect()
}

/// Whether every value is zero.
pub fn all_vanish(values: &[ExactScalar]) -> bool {
    values.iter().all(|v| v.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn n2_invariants() {
        let gens = orbit_equation_spaces(&p(&[2])).unwrap();
        assert_eq!(gens.len(), 2);
        let mut trace = Poly::var(4, 0);
        trace = trace.add(&Poly::var(4, 3));
        assert_eq!(gens[0].to_poly(), trace);
        let det = Poly::var(4, 0).mul(&Poly::var(4, 3)).sub(&Poly::var(4, 1).mul(&Poly::var(4, 2)));
        assert_eq!(gens[1].to_poly(), det);
    }

    #[test]
    fn mu_indices() {
        let mu = p(&[2, 2]);
        let got: Vec<i64> = (1..=4).map(|i| mu_index(&mu, i)).collect();
        assert_eq!(got, vec![2, 3, 2, 1]);
    }

    #[test]
    fn hook_has_all_two_by_two_minors() {
        let gens = orbit_equation_spaces(&p(&[2, 1, 1])).unwrap();
        for rows in (1..=4).combinations(2) {
            for cols in (1..=4).combinations(2) {
                let target = MinorTerm { coeff: 1, rows: rows.clone(), cols: cols.clone() };
                assert!(gens.iter().any(|g| g.terms == vec![target.clone()]));
            }
        }
    }

    #[test]
    fn square_entries_through_partial_traces() {
        for n in 2..=4 {
            assert!(square_entries_identity(n));
        }
        let gens = orbit_equation_spaces(&p(&[2, 2])).unwrap();
        assert!(gens.iter().any(|g| g.label.starts_with("V_{1,2}")));
        assert!(!gens.iter().any(|g| g.label.starts_with("V_{2,")));
    }

    #[test]
    fn evaluation_matches_polynomial() {
        let x = ExactMatrix::from_int_rows(&[vec![1, 2, 0], vec![-1, 3, 4], vec![2, 0, 5]]);
        let values: Vec<ExactScalar> = x.entries().to_vec();
        for g in orbit_equation_spaces(&p(&[2, 1])).unwrap() {
            assert_eq!(g.evaluate(&x), g.to_poly().eval(&values), "{}", g.label);
        }
        assert_eq!(invariant(3, 3).evaluate(&x), x.determinant());
        assert_eq!(invariant(3, 1).evaluate(&x), int(9));
    }

    #[test]
    fn cutout_small() {
        let rng = RandomSource::new(11);
        let r = cutout_check(&p(&[3]), &rng, 5).unwrap();
        assert!(r.pass && r.orbits.iter().all(|o| o.contained));
        let r = cutout_check(&p(&[2, 1]), &rng, 5).unwrap();
        assert!(r.pass);
        let outside = r.orbits.iter().find(|o| o.nu == p(&[3])).unwrap();
        assert!(!outside.contained);
        assert!(outside.separating.as_deref().unwrap().starts_with("V_{1,2}"));
    }

    #[test]
    fn cutout_n4() {
        let rng = RandomSource::new(12);
        for mu in partitions_of(4) {
            assert!(cutout_check(&mu, &rng, 5).unwrap().pass, "{mu}");
        }
    }
}
