//! Dimensions of irreducible polynomial and rational representations of `GL_n`.

use std::collections::HashMap;

use crate::partition::Partition;

/// Number of semistandard tableaux of `shape` with entries in `1..=n`.
///
/// Peels off the cells holding the largest entry, which form a horizontal strip.
pub fn ssyt_count(shape: &Partition, n: usize) -> u128 {
    fn rec(shape: Vec<usize>, n: usize, memo: &mut HashMap<(Vec<usize>, usize), u128>) -> u128 {
        if shape.is_empty() {
            return 1;
        }
        if n == 0 || shape.len() > n {
            return 0;
        }
        if let Some(&v) = memo.get(&(shape.clone(), n)) {
            return v;
        }
        let mut total = 0;
        let mut inner = vec![0; shape.len()];
        fn strips(
            i: usize,
            shape: &[usize],
            inner: &mut Vec<usize>,
            n: usize,
            total: &mut u128,
            memo: &mut HashMap<(Vec<usize>, usize), u128>,
        ) {
            if i == shape.len() {
                let mut mu = inner.clone();
                while mu.last() == Some(&0) {
                    mu.pop();
                }
                *total += rec(mu, n - 1, memo);
                return;
            }
            let lo = shape.get(i + 1).copied().unwrap_or(0);
            for v in lo..=shape[i] {
                inner[i] = v;
                strips(i + 1, shape, inner, n, total, memo);
            }
        }
        strips(0, &shape, &mut inner, n, &mut total, memo);
        memo.insert((shape, n), total);
        total
    }
    rec(shape.parts().to_vec(), n, &mut HashMap::new())
}

/// Weyl dimension formula `Π_{i<j} (α_i - α_j + j - i) / (j - i)` for a weakly
/// decreasing integer weight `α` of length `n`.
pub fn weyl_dimension(alpha: &[i64]) -> u128 {
    let n = alpha.len();
    assert!(alpha.windows(2).all(|w| w[0] >= w[1]), "weight must be dominant");
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..n {
        for j in i + 1..n {
            num *= (alpha[i] - alpha[j]) as u128 + (j - i) as u128;
            den *= (j - i) as u128;
            let g = gcd(num, den);
            num /= g;
            den /= g;
        }
    }
    assert_eq!(den, 1, "Weyl dimension must be an integer");
    num
}

fn gcd(a: u128, b: u128) -> u128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Dimension of the irreducible `GL_n`-module with rectangular highest weight
/// `(cols^rows)`; zero if `rows > n`.
pub fn weyl_rectangle_dim(n: usize, rows: usize, cols: usize) -> u128 {
    if rows > n {
        return 0;
    }
    ssyt_count(&Partition::rectangle(rows, cols), n)
}

/// Dimension by the product formula for a partition with at most `n` parts.
pub fn weyl_dimension_of_partition(shape: &Partition, n: usize) -> u128 {
    if shape.len() > n {
        return 0;
    }
    let alpha: Vec<i64> = shape.padded(n).iter().map(|&x| x as i64).collect();
    weyl_dimension(&alpha)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions_of;

    #[test]
    fn rectangles() {
        assert_eq!(weyl_rectangle_dim(3, 3, 5), 1);
        assert_eq!(weyl_rectangle_dim(2, 1, 1), 2);
        assert_eq!(weyl_rectangle_dim(3, 2, 2), 6);
        assert_eq!(weyl_rectangle_dim(2, 3, 1), 0);
        assert_eq!(weyl_rectangle_dim(3, 1, 3), 10);
    }

    #[test]
    fn count_matches_product_formula() {
        for n in 1..=5 {
            for size in 0..=7 {
                for p in partitions_of(size) {
                    assert_eq!(ssyt_count(&p, n), weyl_dimension_of_partition(&p, n), "{p} n={n}");
                }
            }
        }
    }

    #[test]
    fn rational_weights() {
        // adjoint representation of GL_2 and GL_3
        assert_eq!(weyl_dimension(&[1, -1]), 3);
        assert_eq!(weyl_dimension(&[1, 0, -1]), 8);
        assert_eq!(weyl_dimension(&[0, 0, 0]), 1);
    }
}
