//! Irreducible characters of the symmetric group by the Murnaghan–Nakayama rule.

use std::collections::HashMap;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};

/// Largest `n` accepted for character tables.
pub const MAX_N: usize = 8;

/// An integer class function on `S_n`, one value per cycle type in the order
/// of [`partitions_of`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SnClassFunction {
    pub classes: Vec<Partition>,
    pub values: Vec<i64>,
}

impl SnClassFunction {
    pub fn zero(n: usize) -> Self {
        let classes = partitions_of(n);
        let values = vec![0; classes.len()];
        Self { classes, values }
    }

    pub fn n(&self) -> usize {
        self.classes.first().map_or(0, Partition::size)
    }

    /// Value at the identity.
    pub fn degree(&self) -> i64 {
        let n = self.n();
        self.classes
            .iter()
            .position(|c| c.parts().iter().all(|&x| x == 1) && c.size() == n)
            .map_or(0, |i| self.values[i])
    }

    /// `(1/n!) Σ_g f(g) h(g)`; fails unless the result is an integer.
    pub fn inner_product(&self, other: &SnClassFunction) -> Result<i64> {
        let n = self.n();
        let total: i128 = self
            .classes
            .iter()
            .zip(self.values.iter().zip(&other.values))
            .map(|(c, (a, b))| class_size(c) as i128 * *a as i128 * *b as i128)
            .sum();
        let order = factorial(n) as i128;
        let (q, r) = total.div_rem(&order);
        if r != 0 {
            return Err(Error::InvalidArgument("inner product is not an integer".into()));
        }
        Ok(q as i64)
    }
}

pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// `z_ρ = Π_i i^{m_i} m_i!` for `m_i` parts equal to `i`.
pub fn centralizer_order(rho: &Partition) -> u128 {
    let mut counts: HashMap<usize, usize> = HashMap::new();
    for &p in rho.parts() {
        *counts.entry(p).or_insert(0) += 1;
    }
    counts.iter().map(|(&i, &m)| (i as u128).pow(m as u32) * factorial(m)).product()
}

/// Number of permutations of cycle type `ρ`.
pub fn class_size(rho: &Partition) -> u128 {
    factorial(rho.size()) / centralizer_order(rho)
}

/// A permutation of `0..n` with cycle type `ρ`, cycles on consecutive points.
pub fn class_representative(rho: &Partition) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..rho.size()).collect();
    let mut start = 0;
    for &len in rho.parts() {
        for k in 0..len {
            perm[start + k] = start + (k + 1) % len;
        }
        start += len;
    }
    perm
}

/// `χ^λ(ρ)` by removing border strips of length `ρ_1`.
pub fn character_value(lambda: &Partition, rho: &Partition) -> i64 {
    fn rec(shape: Vec<usize>, rho: &[usize], memo: &mut HashMap<(Vec<usize>, usize), i64>) -> i64 {
        let Some((&k, rest)) = rho.split_first() else {
            return i64::from(shape.is_empty());
        };
        if let Some(&v) = memo.get(&(shape.clone(), rho.len())) {
            return v;
        }
        // beta numbers: shape[i] + (len - 1 - i), distinct and decreasing
        let len = shape.len();
        let beta: Vec<usize> = shape.iter().enumerate().map(|(i, &p)| p + len - 1 - i).collect();
        let mut total = 0;
        for (i, &b) in beta.iter().enumerate() {
            if b < k || beta.contains(&(b - k)) {
                continue;
            }
            let mut nb = beta.clone();
            nb[i] = b - k;
            // height = number of beta numbers strictly between b - k and b
            let height = beta.iter().filter(|&&x| x > b - k && x < b).count();
            nb.sort_unstable_by(|a, b| b.cmp(a));
            let mut parts: Vec<usize> = nb.iter().enumerate().map(|(j, &x)| x - (len - 1 - j)).collect();
            while parts.last() == Some(&0) {
                parts.pop();
            }
            let sign = if height % 2 == 0 { 1 } else { -1 };
            total += sign * rec(parts, rest, memo);
        }
        memo.insert((shape, rho.len()), total);
        total
    }
    rec(lambda.parts().to_vec(), rho.parts(), &mut HashMap::new())
}

/// The irreducible character `χ^λ` of `S_n`.
pub fn sn_character(lambda: &Partition) -> Result<SnClassFunction> {
    let n = lambda.size();
    if n > MAX_N {
        return Err(Error::EnumerationTooLarge { estimate: factorial(n), cap: factorial(MAX_N) });
    }
    let classes = partitions_of(n);
    let values = classes.iter().map(|rho| character_value(lambda, rho)).collect();
    Ok(SnClassFunction { classes, values })
}
