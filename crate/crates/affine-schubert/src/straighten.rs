//! Shuffle relations, straightening of Plücker coordinates into admissible
//! ones, degree-one ideal generators and the degree-two relations.

use std::collections::{BTreeMap, HashMap};

use itertools::Itertools;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{ExactMatrix, ExactScalar, RandomSource};
use crate::schubert::{build_cell_matrix, vanishing_criterion, CellPoint, MinorCache};
use crate::weyl::{
    all_tuples, z_index, z_stratification, Ambient, ChainElement, IndexTuple,
};

/// Default bound for random parameter values.
pub const POINT_BOUND: i64 = 10;

/// One signed Plücker coordinate in a shuffle relation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShuffleTerm {
    pub sign: i32,
    pub tuple: IndexTuple,
}

/// `sh_I = Σ_{J ⊂ I, |J| = ℓ} p_{I \ J ∪ (J - n)}`, with each term written as a
/// sorted tuple times the sign of the sorting permutation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShuffleRelation {
    pub base: IndexTuple,
    pub level: usize,
    pub terms: Vec<ShuffleTerm>,
}

/// Sorts `rows` in place and returns the sign of the sorting permutation,
/// or 0 if two entries coincide.
pub fn sort_with_sign(rows: &mut [usize]) -> i32 {
    let mut sign = 1;
    for i in 1..rows.len() {
        let mut j = i;
        while j > 0 && rows[j - 1] > rows[j] {
            rows.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
        if j > 0 && rows[j - 1] == rows[j] {
            return 0;
        }
    }
    sign
}

/// The level-`ℓ` shuffle relation with base `I`.
pub fn shuffle(base: &IndexTuple, level: usize, amb: Ambient) -> Result<ShuffleRelation> {
    let (n, r) = (amb.n, amb.r());
    let e = base.entries();
    if base.r() != r || e[0] < n + 1 || e[r - 1] > amb.rows() || level == 0 || level > r {
        return Err(Error::ShuffleNotDefined);
    }
    let mut terms = Vec::new();
    for positions in (0..r).combinations(level) {
        let mut rows = e.to_vec();
        for &p in &positions {
            rows[p] -= n;
        }
        let sign = sort_with_sign(&mut rows);
        if sign != 0 {
            terms.push(ShuffleTerm { sign, tuple: IndexTuple::new(n, rows).expect("sorted") });
        }
    }
    Ok(ShuffleRelation { base: base.clone(), level, terms })
}

impl ShuffleRelation {
    pub fn evaluate(&self, point: &CellPoint) -> ExactScalar {
        self.terms.iter().map(|t| ExactScalar::from_integer(t.sign.into()) * point.plucker(&t.tuple)).sum()
    }

    /// Value at an integral point through a shared minor cache.
    pub fn evaluate_cached(&self, cache: &mut MinorCache<'_>) -> num_bigint::BigInt {
        self.terms.iter().map(|t| cache.get(t.tuple.entries()) * t.sign).sum()
    }
}

/// Every well-formed base tuple: `i_1 >= n+1` and `i_r <= rn`.
pub fn shuffle_bases(amb: Ambient) -> Vec<IndexTuple> {
    (amb.n + 1..=amb.rows())
        .combinations(amb.r())
        .map(|e| IndexTuple::new(amb.n, e).expect("increasing"))
        .collect()
}

/// Sum of the determinants obtained from `a` by replacing `ℓ` of its rows by
/// the corresponding rows of `b`.
pub fn row_replacement_sum(a: &ExactMatrix, b: &ExactMatrix, level: usize) -> ExactScalar {
    let m = a.rows();
    (0..m)
        .combinations(level)
        .map(|rows| {
            let mut c = a.clone();
            for &i in &rows {
                for j in 0..m {
                    c.set(i, j, b.get(i, j).clone());
                }
            }
            c.determinant()
        })
        .sum()
}

/// Column analogue of [`row_replacement_sum`].
pub fn column_replacement_sum(a: &ExactMatrix, b: &ExactMatrix, level: usize) -> ExactScalar {
    row_replacement_sum(&a.transpose(), &b.transpose(), level)
}

/// Linear combination of Plücker coordinates, sorted by tuple.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LinearForm {
    pub terms: Vec<(ExactScalar, IndexTuple)>,
}

impl LinearForm {
    fn from_map(map: BTreeMap<IndexTuple, ExactScalar>) -> Self {
        Self { terms: map.into_iter().filter(|(_, c)| !c.is_zero()).map(|(t, c)| (c, t)).collect() }
    }

    pub fn single(tuple: IndexTuple) -> Self {
        Self { terms: vec![(ExactScalar::one(), tuple)] }
    }

    pub fn evaluate(&self, point: &CellPoint) -> ExactScalar {
        self.terms.iter().map(|(c, t)| c * point.plucker(t)).sum()
    }

    pub fn tuples(&self) -> impl Iterator<Item = &IndexTuple> {
        self.terms.iter().map(|(_, t)| t)
    }
}

impl Serialize for LinearForm {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term<'a> {
            coeff: String,
            tuple: &'a IndexTuple,
        }
        let terms: Vec<Term<'_>> =
            self.terms.iter().map(|(c, t)| Term { coeff: c.to_string(), tuple: t }).collect();
        terms.serialize(s)
    }
}

/// Straightening on the largest Schubert variety `X(w_s)` of an ambient.
///
/// Expansions are memoized; keep one instance per task.
#[derive(Debug)]
pub struct Straightener {
    amb: Ambient,
    memo: HashMap<IndexTuple, LinearForm>,
}

impl Straightener {
    pub fn new(amb: Ambient) -> Self {
        Self { amb, memo: HashMap::new() }
    }

    pub fn ambient(&self) -> Ambient {
        self.amb
    }

    /// Expansion of `p_I` on `X(w_s)` in admissible coordinates.
    ///
    /// Picks the first gap `i_{ℓ+1} - i_ℓ > n`, shifts the first `ℓ` entries up
    /// by `n` and solves the level-`ℓ` shuffle of the result for `p_I`. All
    /// other terms are lexicographically larger, so the recursion terminates.
    pub fn expand(&mut self, tuple: &IndexTuple) -> Result<LinearForm> {
        if tuple.r() != self.amb.r() || !tuple.is_nonvanishing_on_top_cell() {
            return Err(Error::VanishingCoordinate);
        }
        if tuple.is_admissible() {
            return Ok(LinearForm::single(tuple.clone()));
        }
        if let Some(f) = self.memo.get(tuple) {
            return Ok(f.clone());
        }
        let n = self.amb.n;
        let e = tuple.entries();
        let level = (1..e.len())
            .find(|&l| e[l] - e[l - 1] > n)
            .ok_or(Error::ShuffleNotDefined)?;
        let mut shifted = e.to_vec();
        for x in shifted.iter_mut().take(level) {
            *x += n;
        }
        let base = IndexTuple::new(n, shifted).map_err(|_| Error::ShuffleNotDefined)?;
        let relation = shuffle(&base, level, self.amb)?;

        let mut own = ExactScalar::zero();
        let mut others: Vec<(ExactScalar, IndexTuple)> = Vec::new();
        for term in relation.terms {
            let c = ExactScalar::from_integer(term.sign.into());
            if term.tuple == *tuple {
                own += c;
            } else if term.tuple.is_nonvanishing_on_top_cell() {
                if term.tuple <= *tuple {
                    return Err(Error::ShuffleNotDefined);
                }
                others.push((c, term.tuple));
            }
        }
        if own.is_zero() {
            return Err(Error::ShuffleNotDefined);
        }
        // process larger tuples first
        others.sort_by(|a, b| b.1.cmp(&a.1));
        let mut acc: BTreeMap<IndexTuple, ExactScalar> = BTreeMap::new();
        for (c, t) in others {
            let factor = -c / &own;
            for (d, s) in self.expand(&t)?.terms {
                *acc.entry(s).or_insert_with(ExactScalar::zero) += &factor * d;
            }
        }
        let form = LinearForm::from_map(acc);
        self.memo.insert(tuple.clone(), form.clone());
        Ok(form)
    }
}

/// Outcome of straightening one coordinate, with its evaluation certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StraighteningResult {
    pub input: IndexTuple,
    pub expansion: LinearForm,
    pub certificate: Vec<CellPoint>,
    /// Both sides agree at every certificate point.
    pub verified: bool,
}

/// Default number of certificate points: `dim X(w_s) + 5`.
pub fn default_certificate_size(amb: Ambient) -> usize {
    amb.top_dimension() + 5
}

/// Straightens `p_I` on `X(w_s)` and checks the expansion at random points.
pub fn straighten(
    straightener: &mut Straightener,
    tuple: &IndexTuple,
    rng: &RandomSource,
    points: usize,
) -> Result<StraighteningResult> {
    let amb = straightener.ambient();
    let expansion = straightener.expand(tuple)?;
    let top = ChainElement::at(amb, 1)?;
    let cell = build_cell_matrix(&top);
    let certificate = cell.random_points(rng, points, POINT_BOUND);
    let verified = certificate.iter().all(|p| p.plucker(tuple) == expansion.evaluate(p));
    Ok(StraighteningResult { input: tuple.clone(), expansion, certificate, verified })
}

/// A degree-one generator of the ideal of a Schubert variety.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdealGenerator {
    pub label: IndexTuple,
    /// True if `p_label` itself vanishes on the variety.
    pub vanishing: bool,
    /// The generator `p_label - Σ a_S p_S`, with `p_label` listed among the terms.
    pub form: LinearForm,
}

/// Degree-one ideal generators of the chain element `φ`, one per non-basis label,
/// together with the admissible basis labels.
pub fn degree_one_ideal_generators(
    straightener: &mut Straightener,
    phi: &ChainElement,
) -> Result<(Vec<IdealGenerator>, Vec<IndexTuple>)> {
    let mut gens = Vec::new();
    let mut basis = Vec::new();
    for label in all_tuples(phi.amb) {
        if vanishing_criterion(&label, phi) {
            gens.push(IdealGenerator {
                form: LinearForm::single(label.clone()),
                label,
                vanishing: true,
            });
        } else if label.is_admissible() {
            basis.push(label);
        } else {
            let expansion = straightener.expand(&label)?;
            let mut map: BTreeMap<IndexTuple, ExactScalar> = BTreeMap::new();
            map.insert(label.clone(), ExactScalar::one());
            for (c, s) in expansion.terms {
                if !vanishing_criterion(&s, phi) {
                    *map.entry(s).or_insert_with(ExactScalar::zero) -= c;
                }
            }
            gens.push(IdealGenerator { label, vanishing: false, form: LinearForm::from_map(map) });
        }
    }
    Ok((gens, basis))
}

/// Checks `f_{R_2} f_S = f_φ f_{S'}` at `points` random points of the open cell
/// of `φ`, where `S ∈ Z_j(φ)` and `S'` raises entry `j + 1` by one.
pub fn degree_two_check(
    phi: &ChainElement,
    s: &IndexTuple,
    rng: &RandomSource,
    points: usize,
) -> Result<bool> {
    let z = z_stratification(phi);
    if !z.z.contains(s) {
        return Err(Error::NotInZSet);
    }
    let r2 = z.r2.ok_or(Error::NotInZSet)?;
    let j = z_index(s, &phi.tuple);
    let s_prime = s.bump(j + 1).ok_or(Error::NotInZSet)?;
    let cell = build_cell_matrix(phi);
    Ok(cell.random_points(rng, points, POINT_BOUND).par_iter().all(|p| {
        p.plucker(&r2) * p.plucker(s) == p.plucker(&phi.tuple) * p.plucker(&s_prime)
    }))
}

/// `S'` for `S ∈ Z(φ)`; fails if `S` is not in the Z-set.
pub fn bumped(phi: &ChainElement, s: &IndexTuple) -> Result<IndexTuple> {
    let z = z_stratification(phi);
    if !z.z.contains(s) {
        return Err(Error::NotInZSet);
    }
    s.bump(z_index(s, &phi.tuple) + 1).ok_or(Error::NotInZSet)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;
    use crate::weyl::reduced_chain;

    fn amb(n: usize, s: usize) -> Ambient {
        Ambient::new(n, s).unwrap()
    }

    fn t(n: usize, e: &[usize]) -> IndexTuple {
        IndexTuple::new(n, e.to_vec()).unwrap()
    }

    #[test]
    fn sign_of_sorting() {
        let mut a = vec![3, 1, 2];
        assert_eq!(sort_with_sign(&mut a), 1);
        assert_eq!(a, vec![1, 2, 3]);
        let mut b = vec![2, 1];
        assert_eq!(sort_with_sign(&mut b), -1);
        let mut c = vec![2, 1, 2];
        assert_eq!(sort_with_sign(&mut c), 0);
    }

    #[test]
    fn small_shuffles() {
        let a = amb(2, 1);
        let s1 = shuffle(&t(2, &[3, 4]), 1, a).unwrap();
        assert_eq!(
            s1.terms,
            vec![
                ShuffleTerm { sign: 1, tuple: t(2, &[1, 4]) },
                ShuffleTerm { sign: -1, tuple: t(2, &[2, 3]) }
            ]
        );
        let s2 = shuffle(&t(2, &[3, 4]), 2, a).unwrap();
        assert_eq!(s2.terms, vec![ShuffleTerm { sign: 1, tuple: t(2, &[1, 2]) }]);
        assert_eq!(shuffle(&t(2, &[2, 4]), 1, a), Err(Error::ShuffleNotDefined));
        assert_eq!(shuffle(&t(2, &[3, 4]), 3, a), Err(Error::ShuffleNotDefined));
        let json = serde_json::to_string(&s1).unwrap();
        assert_eq!(
            json,
            r#"{"base":[3,4],"level":1,"terms":[{"sign":1,"tuple":[1,4]},{"sign":-1,"tuple":[2,3]}]}"#
        );
    }

    #[test]
    fn shuffles_vanish_on_top_cell() {
        let rng = RandomSource::new(21);
        for (n, s) in [(2, 1), (3, 1), (2, 2)] {
            let a = amb(n, s);
            let cell = build_cell_matrix(&reduced_chain(a)[0]);
            let pts = cell.random_points(&rng, 5, POINT_BOUND);
            for base in shuffle_bases(a) {
                for level in 1..=a.r() {
                    let rel = shuffle(&base, level, a).unwrap();
                    assert!(rel.terms.len() <= crate::weyl::binomial(a.r() as u128, level as u128) as usize);
                    for p in &pts {
                        assert!(rel.evaluate(p).is_zero(), "{base} level {level}");
                    }
                }
            }
        }
    }

    #[test]
    fn row_column_replacement_small() {
        let a = ExactMatrix::from_int_rows(&[vec![1, 2], vec![3, 4]]);
        let b = ExactMatrix::from_int_rows(&[vec![5, 6], vec![7, 8]]);
        // rows: det[[5,6],[3,4]] + det[[1,2],[7,8]] = 2 + (-6)
        assert_eq!(row_replacement_sum(&a, &b, 1), int(-4));
        assert_eq!(column_replacement_sum(&a, &b, 1), int(-4));
        assert_eq!(row_replacement_sum(&a, &b, 2), b.determinant());
        assert_eq!(row_replacement_sum(&a, &b, 0), a.determinant());
    }

    #[test]
    fn straightening_examples() {
        let mut st = Straightener::new(amb(2, 1));
        assert_eq!(st.expand(&t(2, &[1, 4])).unwrap(), LinearForm::single(t(2, &[2, 3])));
        assert_eq!(st.expand(&t(2, &[2, 4])).unwrap(), LinearForm::single(t(2, &[2, 4])));
        assert_eq!(st.expand(&t(2, &[1, 2])), Err(Error::VanishingCoordinate));
    }

    #[test]
    fn straightening_is_correct_n3() {
        let a = amb(3, 1);
        let mut st = Straightener::new(a);
        let rng = RandomSource::new(4);
        for label in all_tuples(a) {
            if !label.is_nonvanishing_on_top_cell() || label.is_admissible() {
                continue;
            }
            let res = straighten(&mut st, &label, &rng, 20).unwrap();
            assert!(res.verified, "{label}");
            assert!(res.expansion.tuples().all(IndexTuple::is_admissible));
        }
    }

    #[test]
    fn generators_small() {
        let a = amb(2, 1);
        let chain = reduced_chain(a);
        let mut st = Straightener::new(a);
        let (gens, basis) = degree_one_ideal_generators(&mut st, &chain[0]).unwrap();
        assert_eq!(gens.len() + basis.len(), 6);
        assert!(gens.iter().any(|g| g.label == t(2, &[1, 2]) && g.vanishing));
        let g14 = gens.iter().find(|g| g.label == t(2, &[1, 4])).unwrap();
        assert_eq!(g14.form.terms, vec![(int(1), t(2, &[1, 4])), (int(-1), t(2, &[2, 3]))]);
        let (gens_id, basis_id) = degree_one_ideal_generators(&mut st, &chain[2]).unwrap();
        assert_eq!(basis_id, vec![t(2, &[3, 4])]);
        assert_eq!(gens_id.len(), 5);
    }

    #[test]
    fn generators_vanish_on_their_cells() {
        let rng = RandomSource::new(9);
        for (n, s) in [(2, 1), (3, 1), (2, 2)] {
            let a = amb(n, s);
            let mut st = Straightener::new(a);
            for phi in reduced_chain(a) {
                let (gens, _) = degree_one_ideal_generators(&mut st, &phi).unwrap();
                let pts = build_cell_matrix(&phi).random_points(&rng, 6, POINT_BOUND);
                for g in &gens {
                    for p in &pts {
                        assert!(g.form.evaluate(p).is_zero(), "{:?} on {}", g.label, phi.tuple);
                    }
                }
            }
        }
    }

    #[test]
    fn degree_two_examples() {
        let a = amb(2, 1);
        let chain = reduced_chain(a);
        let rng = RandomSource::new(2);
        assert_eq!(bumped(&chain[0], &t(2, &[2, 3])).unwrap(), t(2, &[2, 4]));
        assert!(degree_two_check(&chain[0], &t(2, &[2, 3]), &rng, 30).unwrap());
        assert!(degree_two_check(&chain[0], &t(2, &[1, 3]), &rng, 30).unwrap());
        assert_eq!(degree_two_check(&chain[0], &t(2, &[3, 4]), &rng, 30), Err(Error::NotInZSet));
    }
}
