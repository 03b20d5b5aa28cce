//! Arithmetic modulo the Mersenne prime 2^61 − 1.
//!
//! A rank computed modulo p never exceeds the rank over the rationals of an
//! integer matrix with the same entries, so it is a certified lower bound.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

pub const PRIME: u64 = (1 << 61) - 1;

pub fn reduce_i64(v: i64) -> u64 {
    v.rem_euclid(PRIME as i64) as u64
}

pub fn reduce_bigint(v: &BigInt) -> u64 {
    v.mod_floor(&BigInt::from(PRIME)).to_u64().expect("residue fits in u64")
}

pub fn add(a: u64, b: u64) -> u64 {
    let s = a + b;
    if s >= PRIME {
        s - PRIME
    } else {
        s
    }
}

pub fn sub(a: u64, b: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + PRIME - b
    }
}

pub fn mul(a: u64, b: u64) -> u64 {
    let p = (a as u128) * (b as u128);
    let lo = (p as u64) & PRIME;
    let hi = (p >> 61) as u64;
    add(lo, hi)
}

pub fn neg(a: u64) -> u64 {
    if a == 0 {
        0
    } else {
        PRIME - a
    }
}

pub fn pow(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mul(r, a);
        }
        a = mul(a, a);
        e >>= 1;
    }
    r
}

/// Multiplicative inverse; panics on zero.
pub fn inv(a: u64) -> u64 {
    assert!(a != 0, "inverse of zero");
    pow(a, PRIME - 2)
}

/// Square matrix product modulo p, row-major.
pub fn mat_mul(a: &[u64], b: &[u64], n: usize) -> Vec<u64> {
    let mut out = vec![0; n * n];
    for i in 0..n {
        for k in 0..n {
            let x = a[i * n + k];
            if x == 0 {
                continue;
            }
            for j in 0..n {
                out[i * n + j] = add(out[i * n + j], mul(x, b[k * n + j]));
            }
        }
    }
    out
}

/// Determinant of a square matrix modulo p.
pub fn determinant(mut a: Vec<u64>, n: usize) -> u64 {
    let mut det = 1;
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| a[i * n + c] != 0) else {
            return 0;
        };
        if p != c {
            for j in 0..n {
                a.swap(c * n + j, p * n + j);
            }
            det = neg(det);
        }
        let pivot = a[c * n + c];
        det = mul(det, pivot);
        let pinv = inv(pivot);
        for i in c + 1..n {
            let f = mul(a[i * n + c], pinv);
            if f == 0 {
                continue;
            }
            for j in c..n {
                a[i * n + j] = sub(a[i * n + j], mul(f, a[c * n + j]));
            }
        }
    }
    det
}

/// Incrementally maintained echelon basis of a subspace of `F_p^len`.
#[derive(Clone, Debug)]
pub struct Echelon {
    len: usize,
    rows: Vec<(usize, Vec<u64>)>,
}

impl Echelon {
    pub fn new(len: usize) -> Self {
        Self { len, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Adds `v` to the spanning set; returns true if it was independent.
    pub fn insert(&mut self, mut v: Vec<u64>) -> bool {
        assert_eq!(v.len(), self.len, "vector length mismatch");
        for (p, row) in &self.rows {
            let f = v[*p];
            if f != 0 {
                for j in *p..self.len {
                    v[j] = sub(v[j], mul(f, row[j]));
                }
            }
        }
        let Some(p) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let pinv = inv(v[p]);
        for x in v.iter_mut().skip(p) {
            *x = mul(*x, pinv);
        }
        self.rows.push((p, v));
        true
    }
}

/// Rank of a list of vectors modulo p.
pub fn rank(rows: &[Vec<u64>]) -> usize {
    let Some(first) = rows.first() else {
        return 0;
    };
    let mut e = Echelon::new(first.len());
    for r in rows {
        e.insert(r.clone());
    }
    e.rank()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_laws() {
        let a = PRIME - 3;
        let b = 123_456_789_012_345;
        assert_eq!(mul(a, inv(a)), 1);
        assert_eq!(add(sub(a, b), b), a);
        assert_eq!(reduce_i64(-1), PRIME - 1);
        assert_eq!(reduce_bigint(&BigInt::from(-5)), PRIME - 5);
        assert_eq!(mul(PRIME - 1, PRIME - 1), 1);
    }

    #[test]
    fn determinant_matches_integer() {
        let m = [2, 0, 1, 3, 1, 0, 1, 1, 1];
        // 2*(1-0) - 0 + 1*(3-1) = 4
        assert_eq!(determinant(m.iter().map(|&v| reduce_i64(v)).collect(), 3), 4);
    }

    #[test]
    fn echelon_rank() {
        let rows = vec![vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]];
        assert_eq!(rank(&rows), 2);
    }
}
