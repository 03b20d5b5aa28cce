//! Kostka–Foulkes polynomials from the charge statistic.

use rayon::prelude::*;

use crate::exact::QPolynomial;
use crate::partition::Partition;
use crate::symfun::tableau::semistandard_tableaux;

/// `K_{λ,μ}(q) = Σ_T q^{charge(T)}` over semistandard tableaux of shape `λ`
/// and content `μ`. Zero when `|λ| != |μ|` or `λ` does not dominate `μ`.
pub fn kostka_foulkes(lambda: &Partition, mu: &Partition) -> QPolynomial {
    let tableaux = semistandard_tableaux(lambda, mu.parts());
    let charges: Vec<usize> =
        tableaux.par_iter().map(|t| t.charge().expect("content is a partition")).collect();
    let mut coeffs = vec![0i64; charges.iter().max().map_or(0, |&c| c + 1)];
    for c in charges {
        coeffs[c] += 1;
    }
    QPolynomial::from_coeffs(coeffs)
}

/// Cocharge normalization `q^{n(μ)} K_{λ,μ}(1/q)`: equal to 1 at `λ = (n)` and
/// to the graded multiplicity of the Specht module `Σ^λ` in the ring of
/// coinvariants when `μ = (1^n)`.
pub fn cocharge_kostka(lambda: &Partition, mu: &Partition) -> QPolynomial {
    kostka_foulkes(lambda, mu).reflect(mu.n_statistic())
}

/// Number of semistandard tableaux of shape `λ` and content `μ`.
pub fn kostka_number(lambda: &Partition, mu: &Partition) -> usize {
    semistandard_tableaux(lambda, mu.parts()).len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions_of;
    use crate::exact::QPolynomial;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(kostka_foulkes(&p(&[2, 1]), &p(&[1, 1, 1])).coeffs(), &[0, 1, 1]);
        assert_eq!(kostka_foulkes(&p(&[2]), &p(&[1, 1])).coeffs(), &[0, 1]);
        assert_eq!(kostka_foulkes(&p(&[1, 1]), &p(&[1, 1])).coeffs(), &[1]);
        assert_eq!(kostka_foulkes(&p(&[3]), &p(&[1, 1, 1])).coeffs(), &[0, 0, 0, 1]);
        assert!(kostka_foulkes(&p(&[1, 1, 1]), &p(&[2, 1])).is_zero());
        assert!(kostka_foulkes(&p(&[2]), &p(&[2, 1])).is_zero());
    }

    #[test]
    fn diagonal_is_one() {
        for n in 1..=6 {
            for l in partitions_of(n) {
                assert_eq!(kostka_foulkes(&l, &l).coeffs(), &[1]);
                assert_eq!(cocharge_kostka(&l, &l), QPolynomial::monomial(l.n_statistic(), 1));
                assert_eq!(cocharge_kostka(&p(&[n]), &l).coeffs(), &[1]);
            }
        }
    }

    #[test]
    fn value_at_one_counts_tableaux() {
        for n in 1..=5 {
            for l in partitions_of(n) {
                for m in partitions_of(n) {
                    let k = kostka_foulkes(&l, &m);
                    assert!(k.has_nonnegative_coeffs());
                    assert_eq!(k.eval(1), kostka_number(&l, &m) as i64);
                }
            }
        }
    }

    #[test]
    fn degree_bound() {
        // deg K_{λ,μ} = n(μ) - n(λ) when λ dominates μ
        for l in partitions_of(5) {
            for m in partitions_of(5) {
                if m.dominance_leq(&l).unwrap() {
                    let k = kostka_foulkes(&l, &m);
                    assert_eq!(k.degree(), Some(m.n_statistic() - l.n_statistic()));
                }
            }
        }
    }
}
