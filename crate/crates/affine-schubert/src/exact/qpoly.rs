//! Univariate integer polynomials in q.

use std::fmt;
use std::ops::{Add, Mul};

use serde::{Deserialize, Serialize};

/// Polynomial in `q` with integer coefficients; `poly[d]` is the coefficient of `q^d`.
#[derive(Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QPolynomial {
    poly: Vec<i64>,
}

impl fmt::Debug for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_empty() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        for (d, &c) in self.poly.iter().enumerate() {
            if c == 0 {
                continue;
            }
            parts.push(match d {
                0 => c.to_string(),
                1 if c == 1 => "q".to_string(),
                1 => format!("{c}q"),
                _ if c == 1 => format!("q^{d}"),
                _ => format!("{c}q^{d}"),
            });
        }
        write!(f, "{}", parts.join(" + "))
    }
}

impl QPolynomial {
    pub fn from_coeffs(mut poly: Vec<i64>) -> Self {
        while poly.last() == Some(&0) {
            poly.pop();
        }
        Self { poly }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    /// `c * q^d`.
    pub fn monomial(d: usize, c: i64) -> Self {
        let mut poly = vec![0; d + 1];
        poly[d] = c;
        Self::from_coeffs(poly)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.poly
    }

    pub fn coeff(&self, d: usize) -> i64 {
        self.poly.get(d).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.poly.len().checked_sub(1)
    }

    pub fn eval(&self, q: i64) -> i64 {
        self.poly.iter().rev().fold(0, |acc, &c| acc * q + c)
    }

    /// `q^shift * p(1/q)`; requires `shift >= degree`.
    pub fn reflect(&self, shift: usize) -> Self {
        let Some(deg) = self.degree() else {
            return Self::zero();
        };
        assert!(shift >= deg, "reflection would produce negative exponents");
        let mut out = vec![0; shift + 1];
        for (d, &c) in self.poly.iter().enumerate() {
            out[shift - d] = c;
        }
        Self::from_coeffs(out)
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.poly.iter().all(|&c| c >= 0)
    }
}

impl Add for &QPolynomial {
    type Output = QPolynomial;
    fn add(self, rhs: &QPolynomial) -> QPolynomial {
        let len = self.poly.len().max(rhs.poly.len());
        QPolynomial::from_coeffs((0..len).map(|d| self.coeff(d) + rhs.coeff(d)).collect())
    }
}

impl Mul for &QPolynomial {
    type Output = QPolynomial;
    fn mul(self, rhs: &QPolynomial) -> QPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return QPolynomial::zero();
        }
        let mut out = vec![0; self.poly.len() + rhs.poly.len() - 1];
        for (i, &a) in self.poly.iter().enumerate() {
            for (j, &b) in rhs.poly.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPolynomial::from_coeffs(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let p = QPolynomial::from_coeffs(vec![0, 1, 1, 0]);
        assert_eq!(p.degree(), Some(2));
        assert_eq!(p.eval(1), 2);
        assert_eq!(p.to_string(), "q + q^2");
        assert_eq!(p.reflect(3), QPolynomial::from_coeffs(vec![0, 1, 1]));
        let sq = &p * &p;
        assert_eq!(sq.coeffs(), &[0, 0, 1, 2, 1]);
        assert_eq!(&p + &QPolynomial::one(), QPolynomial::from_coeffs(vec![1, 1, 1]));
    }

    #[test]
    fn json_shape() {
        let p = QPolynomial::from_coeffs(vec![1, 0, 2]);
        assert_eq!(serde_json::to_string(&p).unwrap(), r#"{"poly":[1,0,2]}"#);
    }
}
