//! Semistandard tableaux, reading words and the charge statistic.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::Partition;

/// A semistandard tableau in English notation; entries start at 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Tableau {
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    /// Fails unless rows weakly increase, columns strictly increase and the
    /// row lengths form a partition.
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape_ok = rows.windows(2).all(|w| w[0].len() >= w[1].len()) && rows.iter().all(|r| !r.is_empty());
        let rows_ok = rows.iter().all(|r| r.windows(2).all(|w| w[0] <= w[1]) && r.iter().all(|&x| x >= 1));
        let cols_ok = rows.windows(2).all(|w| w[1].iter().zip(&w[0]).all(|(lo, hi)| lo > hi));
        if !(shape_ok && rows_ok && cols_ok) {
            return Err(Error::InvalidArgument("not a semistandard tableau".into()));
        }
        Ok(Self { rows })
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(Vec::len).collect()).expect("rows form a partition")
    }

    /// `content[i]` is the number of entries equal to `i + 1`.
    pub fn content(&self) -> Vec<usize> {
        let max = self.rows.iter().flatten().copied().max().unwrap_or(0);
        let mut c = vec![0; max];
        for &x in self.rows.iter().flatten() {
            c[x - 1] += 1;
        }
        c
    }

    /// Rows read left to right, from the bottom row up.
    pub fn reading_word(&self) -> Vec<usize> {
        self.rows.iter().rev().flatten().copied().collect()
    }

    pub fn charge(&self) -> Result<usize> {
        charge(&self.reading_word())
    }
}

/// All semistandard tableaux of shape `shape` and content `content`, built by
/// adding the entries equal to `k` as a horizontal strip for `k = 1, 2, ...`.
pub fn semistandard_tableaux(shape: &Partition, content: &[usize]) -> Vec<Tableau> {
    if content.iter().sum::<usize>() != shape.size() {
        return Vec::new();
    }
    let target = shape.parts().to_vec();
    let mut out = Vec::new();
    let mut rows: Vec<Vec<usize>> = vec![Vec::new(); target.len()];
    fill(&target, content, 0, &mut rows, &mut out);
    out
}

fn fill(target: &[usize], content: &[usize], k: usize, rows: &mut Vec<Vec<usize>>, out: &mut Vec<Tableau>) {
    if k == content.len() {
        if rows.iter().zip(target).all(|(r, &t)| r.len() == t) {
            out.push(Tableau { rows: rows.clone() });
        }
        return;
    }
    let before: Vec<usize> = rows.iter().map(Vec::len).collect();
    strip(target, &before, content[k], 0, k + 1, rows, &mut |rows| fill(target, content, k + 1, rows, out));
}

/// Adds `left` copies of `letter` in rows `i..` as a horizontal strip over the
/// shape `before`.
fn strip(
    target: &[usize],
    before: &[usize],
    left: usize,
    i: usize,
    letter: usize,
    rows: &mut Vec<Vec<usize>>,
    next: &mut dyn FnMut(&mut Vec<Vec<usize>>),
) {
    if left == 0 {
        next(rows);
        return;
    }
    if i == target.len() {
        return;
    }
    // a new cell in row i must sit under a cell of row i-1 from the old shape
    let cap_above = if i == 0 { usize::MAX } else { before[i - 1] };
    let max_add = target[i].min(cap_above).saturating_sub(before[i]).min(left);
    for add in (0..=max_add).rev() {
        rows[i].extend(std::iter::repeat_n(letter, add));
        strip(target, before, left - add, i + 1, letter, rows, next);
        rows[i].truncate(before[i]);
    }
}

/// Lascoux–Schützenberger charge of a word whose content is a partition.
///
/// Standard subwords are extracted by scanning leftwards cyclically from the
/// right end for `1, 2, ...`. Within a subword, letter `r + 1` has the index of
/// `r` plus one when it lies to the right of `r`; the charge is the sum of all
/// indices.
pub fn charge(word: &[usize]) -> Result<usize> {
    let max = word.iter().copied().max().unwrap_or(0);
    let mut content = vec![0; max];
    for &x in word {
        if x == 0 {
            return Err(Error::ContentNotPartition);
        }
        content[x - 1] += 1;
    }
    if content.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::ContentNotPartition);
    }
    let mut used = vec![false; word.len()];
    let mut total = 0;
    let mut remaining = word.len();
    while remaining > 0 {
        let top = (1..=max).take_while(|&r| word.iter().zip(&used).any(|(&x, &u)| x == r && !u)).count();
        let mut pos = word.len();
        let mut index = 0;
        for r in 1..=top {
            let len = word.len();
            let mut wrapped = false;
            let mut found = None;
            for step in 1..=len {
                let p = (pos + len - step) % len;
                if step > pos {
                    wrapped = true;
                }
                if !used[p] && word[p] == r {
                    found = Some(p);
                    break;
                }
            }
            let p = found.expect("letter present");
            if r > 1 && wrapped {
                index += 1;
            }
            total += index;
            used[p] = true;
            pos = p;
        }
        remaining -= top;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn small_charges() {
        let col = Tableau::new(vec![vec![1], vec![2]]).unwrap();
        assert_eq!(col.charge(), Ok(0));
        let row = Tableau::new(vec![vec![1, 2]]).unwrap();
        assert_eq!(row.charge(), Ok(1));
        let mut got: Vec<usize> = semistandard_tableaux(&p(&[2, 1]), &[1, 1, 1])
            .iter()
            .map(|t| t.charge().unwrap())
            .collect();
        got.sort();
        assert_eq!(got, vec![1, 2]);
    }

    #[test]
    fn charge_of_permutation_words() {
        // 1 2 3 reads left to right: each letter to the right of its predecessor
        assert_eq!(charge(&[1, 2, 3]), Ok(3));
        assert_eq!(charge(&[3, 2, 1]), Ok(0));
        assert_eq!(charge(&[2, 1, 2]), Err(Error::ContentNotPartition));
        assert_eq!(charge(&[2, 1, 1]), Ok(0));
    }

    #[test]
    fn tableau_counts() {
        assert_eq!(semistandard_tableaux(&p(&[2, 1]), &[1, 1, 1]).len(), 2);
        assert_eq!(semistandard_tableaux(&p(&[2, 2]), &[2, 1, 1]).len(), 1);
        assert_eq!(semistandard_tableaux(&p(&[3, 1]), &[2, 1, 1]).len(), 2);
        assert_eq!(semistandard_tableaux(&p(&[1, 1]), &[2]).len(), 0);
        for t in semistandard_tableaux(&p(&[3, 2, 1]), &[2, 2, 1, 1]) {
            assert_eq!(t.shape(), p(&[3, 2, 1]));
            assert_eq!(t.content(), vec![2, 2, 1, 1]);
            assert!(Tableau::new(t.rows().to_vec()).is_ok());
        }
    }

    #[test]
    fn rejects_bad_tableaux() {
        assert!(Tableau::new(vec![vec![2, 1]]).is_err());
        assert!(Tableau::new(vec![vec![1, 2], vec![1]]).is_err());
        assert!(Tableau::new(vec![vec![1], vec![2, 3]]).is_err());
    }
}
