//! The graded quotient `B = K[y_1, ..., y_n] / I` with `I` generated by the
//! subset elementary symmetric functions `C_μ`, and its graded `S_n`-character.

use std::collections::{BTreeMap, HashMap};

use itertools::Itertools;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::poly::{monomials_of_degree, Monomial};
use crate::exact::{ExactScalar, Poly, QPolynomial};
use crate::partition::{partitions_of, Partition};
use crate::symfun::characters::{class_representative, sn_character, SnClassFunction};

pub const MAX_N: usize = 6;
pub const DEFAULT_MAX_DEGREE: usize = 10;

/// `e_r(S)` for a subset `S` of `{1, ..., n}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubsetElementary {
    pub subset: Vec<usize>,
    pub r: usize,
    #[serde(skip)]
    pub poly: Poly,
}

pub fn elementary_on_subset(n: usize, subset: &[usize], r: usize) -> Poly {
    let mut out = Poly::zero(n);
    for choice in subset.iter().combinations(r) {
        let mut mono = vec![0u32; n];
        for &&i in &choice {
            mono[i - 1] = 1;
        }
        out.add_term(mono, ExactScalar::one());
    }
    out
}

/// `d_k(μ) = μ_{n-k+1} + ... + μ_n` with `μ` padded to length `n`.
pub fn tail_sum(mu: &Partition, k: usize) -> usize {
    let n = mu.size();
    (n - k + 1..=n).map(|i| mu.part(i)).sum()
}

/// `C_μ = { e_r(S) : |S| = k, k >= r > k - d_k(μ) }`.
pub fn c_mu_generators(mu: &Partition) -> Vec<SubsetElementary> {
    let n = mu.size();
    let mut out = Vec::new();
    for k in 1..=n {
        let lo = (k + 1).saturating_sub(tail_sum(mu, k)).max(1);
        for subset in (1..=n).combinations(k) {
            for r in lo..=k {
                let poly = elementary_on_subset(n, &subset, r);
                out.push(SubsetElementary { subset: subset.clone(), r, poly });
            }
        }
    }
    out
}

/// Echelon rows over the monomials of one degree, each normalized to 1 at its
/// pivot and zero before it.
struct Echelon {
    pivots: BTreeMap<usize, Vec<ExactScalar>>,
}

impl Echelon {
    fn new() -> Self {
        Self { pivots: BTreeMap::new() }
    }

    fn reduce(&self, mut v: Vec<ExactScalar>) -> Vec<ExactScalar> {
        for (&c, row) in &self.pivots {
            if v[c].is_zero() {
                continue;
            }
            let f = v[c].clone();
            for (x, r) in v.iter_mut().zip(row).skip(c) {
                if !r.is_zero() {
                    *x -= &f * r;
                }
            }
        }
        v
    }

    fn insert(&mut self, v: Vec<ExactScalar>) {
        let mut v = self.reduce(v);
        let Some(c) = v.iter().position(|x| !x.is_zero()) else {
            return;
        };
        let inv = v[c].recip();
        for x in v.iter_mut() {
            *x *= &inv;
        }
        // keep earlier rows reduced against the new pivot so that reduction in
        // pivot order clears every pivot column
        for row in self.pivots.values_mut() {
            if !row[c].is_zero() {
                let f = row[c].clone();
                for (x, r) in row.iter_mut().zip(&v) {
                    if !r.is_zero() {
                        *x -= &f * r;
                    }
                }
            }
        }
        self.pivots.insert(c, v);
    }

    fn rank(&self) -> usize {
        self.pivots.len()
    }
}

/// One graded piece of the quotient.
struct Piece {
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    ideal: Echelon,
}

impl Piece {
    fn standard(&self) -> Vec<usize> {
        (0..self.monomials.len()).filter(|c| !self.ideal.pivots.contains_key(c)).collect()
    }

    fn vector(&self, p: &Poly) -> Vec<ExactScalar> {
        let mut v = vec![ExactScalar::zero(); self.monomials.len()];
        for (m, c) in p.terms() {
            v[self.index[m]] += c;
        }
        v
    }

    /// Trace of `y_i -> y_{perm[i]}` on the quotient.
    fn trace(&self, perm: &[usize]) -> ExactScalar {
        self.standard()
            .into_iter()
            .map(|c| {
                let m = &self.monomials[c];
                let mut image = vec![0u32; m.len()];
                for (i, &e) in m.iter().enumerate() {
                    image[perm[i]] = e;
                }
                let mut v = vec![ExactScalar::zero(); self.monomials.len()];
                v[self.index[&image]] = ExactScalar::one();
                self.ideal.reduce(v)[c].clone()
            })
            .sum()
    }
}

/// The graded `S_n`-character of the quotient, degree by degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GradedCharacter {
    pub mu: Partition,
    pub dims: Vec<usize>,
    pub characters: Vec<SnClassFunction>,
    /// Whether a zero degree was reached, so that all higher degrees vanish.
    pub complete: bool,
}

impl GradedCharacter {
    pub fn total_dimension(&self) -> usize {
        self.dims.iter().sum()
    }
}

/// Computes the quotient by `C_μ` in degrees `0..=max_degree`, stopping early
/// at the first zero degree.
pub fn b_mu_graded_character(mu: &Partition, max_degree: usize) -> Result<GradedCharacter> {
    let n = mu.size();
    if n > MAX_N || max_degree > 2 * DEFAULT_MAX_DEGREE {
        return Err(Error::EnumerationTooLarge {
            estimate: n.max(max_degree) as u128,
            cap: MAX_N.max(2 * DEFAULT_MAX_DEGREE) as u128,
        });
    }
    let gens = c_mu_generators(mu);
    let classes = partitions_of(n);
    let reps: Vec<Vec<usize>> = classes.iter().map(class_representative).collect();
    let mut dims = Vec::new();
    let mut characters = Vec::new();
    let mut prev: Option<Piece> = None;
    let mut complete = false;
    for d in 0..=max_degree {
        let monomials = monomials_of_degree(n, d as u32);
        let index: HashMap<Monomial, usize> =
            monomials.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let mut piece = Piece { monomials, index, ideal: Echelon::new() };
        if let Some(prev) = &prev {
            for row in prev.ideal.pivots.values() {
                for i in 0..n {
                    let mut v = vec![ExactScalar::zero(); piece.monomials.len()];
                    for (c, x) in row.iter().enumerate() {
                        if !x.is_zero() {
                            let mut m = prev.monomials[c].clone();
                            m[i] += 1;
                            v[piece.index[&m]] = x.clone();
                        }
                    }
                    piece.ideal.insert(v);
                }
            }
        }
        for g in gens.iter().filter(|g| g.r == d) {
            let v = piece.vector(&g.poly);
            piece.ideal.insert(v);
        }
        let dim = piece.monomials.len() - piece.ideal.rank();
        let values: Vec<i64> = reps
            .par_iter()
            .map(|perm| {
                let t = piece.trace(perm);
                assert!(t.is_integer(), "permutation traces are integers");
                i64::try_from(t.to_integer()).expect("trace fits")
            })
            .collect();
        dims.push(dim);
        characters.push(SnClassFunction { classes: classes.clone(), values });
        prev = Some(piece);
        if dim == 0 {
            complete = true;
            break;
        }
    }
    Ok(GradedCharacter { mu: mu.clone(), dims, characters, complete })
}

/// `r_{μ,λ}(q) = Σ_d <char B_d, χ^λ> q^d`.
pub fn graded_multiplicity(chars: &GradedCharacter, lambda: &Partition) -> Result<QPolynomial> {
    let chi = sn_character(lambda)?;
    let coeffs = chars.characters.iter().map(|c| c.inner_product(&chi)).collect::<Result<Vec<_>>>()?;
    Ok(QPolynomial::from_coeffs(coeffs))
}

/// `n! / Π μ_i!`.
pub fn multinomial(mu: &Partition) -> u128 {
    let f = crate::symfun::characters::factorial;
    f(mu.size()) / mu.parts().iter().map(|&p| f(p)).product::<u128>()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn generator_ranges() {
        let g = c_mu_generators(&p(&[2]));
        let polys: Vec<String> = g.iter().map(|g| format!("{:?}/{}", g.subset, g.r)).collect();
        assert_eq!(polys, vec!["[1, 2]/1", "[1, 2]/2"]);
        // the zero orbit: every e_r(S), in particular every y_i
        let g = c_mu_generators(&p(&[1, 1, 1]));
        assert!(g.iter().any(|g| g.subset == vec![2] && g.r == 1));
        let full = c_mu_generators(&p(&[3]));
        assert!(full.iter().all(|g| g.subset.len() == 3));
        assert_eq!(full.len(), 3);
    }

    #[test]
    fn n2_quotient() {
        let c = b_mu_graded_character(&p(&[2]), 5).unwrap();
        assert_eq!(c.dims, vec![1, 1, 0]);
        assert!(c.complete);
        // classes (2), (1,1): swap acts by -1 on y_1 mod y_1 + y_2
        assert_eq!(c.characters[1].values, vec![-1, 1]);
        assert_eq!(c.characters[0].values, vec![1, 1]);
    }

    #[test]
    fn zero_orbit_quotient_is_constants() {
        let c = b_mu_graded_character(&p(&[1, 1, 1]), 5).unwrap();
        assert_eq!(c.dims, vec![1, 0]);
    }

    #[test]
    fn total_dimensions() {
        for n in 1..=4 {
            for mu in partitions_of(n) {
                let c = b_mu_graded_character(&mu, 10).unwrap();
                assert!(c.complete);
                assert_eq!(c.total_dimension() as u128, multinomial(&mu.conjugate()), "{mu}");
            }
        }
    }

    #[test]
    fn coinvariant_multiplicities() {
        let c = b_mu_graded_character(&p(&[3]), 10).unwrap();
        assert_eq!(graded_multiplicity(&c, &p(&[3])).unwrap().coeffs(), &[1]);
        assert_eq!(graded_multiplicity(&c, &p(&[2, 1])).unwrap().coeffs(), &[0, 1, 1]);
        assert_eq!(graded_multiplicity(&c, &p(&[1, 1, 1])).unwrap().coeffs(), &[0, 0, 0, 1]);
    }
}
