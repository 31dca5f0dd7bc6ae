//! Standard Young tableaux, plain and `r`-colored, in English notation.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::partition::Partition;
use super::rank_set::RankSet;
use crate::error::{Error, Result};

/// A standard Young tableau: the entries `1..=n` placed once each, rows increasing
/// left to right and columns increasing top to bottom.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StandardTableau {
    rows: Vec<Vec<usize>>,
    shape: Partition,
}

impl StandardTableau {
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect()).map_err(|_| {
            Error::InvalidTableau(format!("rows {rows:?} do not form a partition shape"))
        })?;
        let n = shape.size();
        let mut seen = vec![false; n + 1];
        for &e in rows.iter().flatten() {
            if e == 0 || e > n || seen[e] {
                return Err(Error::InvalidTableau(format!(
                    "entries of {rows:?} are not 1..={n}"
                )));
            }
            seen[e] = true;
        }
        for (i, row) in rows.iter().enumerate() {
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::InvalidTableau(format!(
                    "row {i} of {rows:?} is not increasing"
                )));
            }
            if i > 0
                && row
                    .iter()
                    .zip(&rows[i - 1])
                    .any(|(below, above)| below <= above)
            {
                return Err(Error::InvalidTableau(format!(
                    "a column of {rows:?} is not increasing"
                )));
            }
        }
        Ok(Self { rows, shape })
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn size(&self) -> usize {
        self.shape.size()
    }

    /// `row_index()[e]` is the (0-based) row containing entry `e`; index 0 is unused.
    pub fn row_index(&self) -> Vec<usize> {
        let mut idx = vec![0; self.size() + 1];
        for (i, row) in self.rows.iter().enumerate() {
            for &e in row {
                idx[e] = i;
            }
        }
        idx
    }

    /// `Des(Q)`: the `i` in `[n-1]` for which `i + 1` sits in a strictly lower row than `i`.
    pub fn descent_set(&self) -> RankSet {
        let idx = self.row_index();
        let elements = (1..self.size()).filter(|&i| idx[i + 1] > idx[i]).collect();
        RankSet::new(elements, self.size()).expect("descents lie in [n-1]")
    }

    /// Largest `j` such that `1, ..., j` all appear in the first row.
    pub fn first_row_prefix(&self) -> usize {
        self.rows.first().map_or(0, |row| {
            row.iter()
                .enumerate()
                .take_while(|&(i, &e)| e == i + 1)
                .count()
        })
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| {
                format!(
                    "[{}]",
                    r.iter()
                        .map(|e| e.to_string())
                        .collect::<Vec<_>>()
                        .join(",")
                )
            })
            .collect();
        write!(f, "{}", rows.join(""))
    }
}

/// A standard Young tableau whose entries each carry a color in `Z_r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ColoredTableau {
    tableau: StandardTableau,
    /// `colors[e - 1]` is the color of entry `e`.
    colors: Vec<usize>,
}

impl ColoredTableau {
    pub fn new(tableau: StandardTableau, colors: Vec<usize>, r: usize) -> Result<Self> {
        if colors.len() != tableau.size() {
            return Err(Error::SizeMismatch(colors.len(), tableau.size()));
        }
        if let Some(&color) = colors.iter().find(|&&c| c >= r) {
            return Err(Error::InvalidColor { color, r });
        }
        Ok(Self { tableau, colors })
    }

    /// Every entry colored zero; this is how an uncolored tableau embeds.
    pub fn uncolored(tableau: StandardTableau) -> Self {
        let colors = vec![0; tableau.size()];
        Self { tableau, colors }
    }

    pub fn tableau(&self) -> &StandardTableau {
        &self.tableau
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn color_of(&self, entry: usize) -> usize {
        self.colors[entry - 1]
    }

    pub fn size(&self) -> usize {
        self.tableau.size()
    }

    /// Largest `j` such that `1, ..., j` all appear in the first row with color zero.
    pub fn zero_first_row_prefix(&self) -> usize {
        let prefix = self.tableau.first_row_prefix();
        self.colors[..prefix]
            .iter()
            .take_while(|&&c| c == 0)
            .count()
    }
}

/// All standard Young tableaux of `shape`.
///
/// Tableaux are generated by placing `1, 2, ..., n` in turn, trying rows top to
/// bottom, so for `(2,1)` the order is `[1,2][3]` then `[1,3][2]`.
pub fn enumerate_syt(shape: &Partition) -> Vec<StandardTableau> {
    let target = shape.parts();
    let mut rows: Vec<Vec<usize>> = vec![Vec::new(); target.len()];
    let mut out = Vec::new();
    place_entry(1, shape.size(), target, &mut rows, &mut |rows| {
        out.push(StandardTableau {
            rows: rows.to_vec(),
            shape: shape.clone(),
        })
    });
    out
}

fn place_entry(
    entry: usize,
    n: usize,
    target: &[usize],
    rows: &mut Vec<Vec<usize>>,
    visit: &mut dyn FnMut(&[Vec<usize>]),
) {
    if entry > n {
        visit(rows);
        return;
    }
    for i in 0..target.len() {
        let len = rows[i].len();
        if len < target[i] && (i == 0 || rows[i - 1].len() > len) {
            rows[i].push(entry);
            place_entry(entry + 1, n, target, rows, visit);
            rows[i].pop();
        }
    }
}

/// `f^λ`, the number of standard Young tableaux of shape `λ`.
pub fn f_lambda(shape: &Partition) -> BigUint {
    shape.hook_length_count()
}

/// `f^{λ,j}`: standard Young tableaux of shape `λ` whose first row contains `1, ..., j`.
///
/// Counts saturated chains in Young's lattice from `(j)` up to `λ`. Returns 0 when the
/// first row of `λ` is shorter than `j`, and `f^λ` when `j = 0`.
pub fn f_lambda_first_row(shape: &Partition, j: usize) -> BigUint {
    if j > shape.first_part() {
        return BigUint::zero();
    }
    let mut memo = HashMap::new();
    count_growths(shape.parts().to_vec(), j, &mut memo)
}

fn count_growths(shape: Vec<usize>, j: usize, memo: &mut HashMap<Vec<usize>, BigUint>) -> BigUint {
    let size: usize = shape.iter().sum();
    if size == j {
        // shape ⊇ (j) with |shape| = j forces shape = (j)
        return BigUint::one();
    }
    if let Some(v) = memo.get(&shape) {
        return v.clone();
    }
    let mut total = BigUint::zero();
    for i in 0..shape.len() {
        let is_corner = i + 1 == shape.len() || shape[i + 1] < shape[i];
        if !is_corner || (i == 0 && shape[0] == j) {
            continue;
        }
        let mut smaller = shape.clone();
        smaller[i] -= 1;
        if smaller[i] == 0 {
            smaller.pop();
        }
        total += count_growths(smaller, j, memo);
    }
    memo.insert(shape, total.clone());
    total
}

/// Streams all `r^n · f^λ` colored tableaux of `shape`; colorings vary fastest,
/// with entry 1's color as the least significant digit.
pub fn enumerate_colored_syt(shape: &Partition, r: usize) -> ColoredTableaux {
    ColoredTableaux {
        tableaux: enumerate_syt(shape),
        r,
        index: 0,
        colors: vec![0; shape.size()],
        done: r == 0,
    }
}

pub struct ColoredTableaux {
    tableaux: Vec<StandardTableau>,
    r: usize,
    index: usize,
    colors: Vec<usize>,
    done: bool,
}

impl Iterator for ColoredTableaux {
    type Item = ColoredTableau;

    fn next(&mut self) -> Option<ColoredTableau> {
        if self.done || self.index >= self.tableaux.len() {
            return None;
        }
        let item = ColoredTableau {
            tableau: self.tableaux[self.index].clone(),
            colors: self.colors.clone(),
        };
        // advance the base-r counter, carrying into the next tableau
        let mut pos = 0;
        loop {
            if pos == self.colors.len() {
                self.colors.iter_mut().for_each(|c| *c = 0);
                self.index += 1;
                break;
            }
            self.colors[pos] += 1;
            if self.colors[pos] < self.r {
                break;
            }
            self.colors[pos] = 0;
            pos += 1;
        }
        Some(item)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::partition::{enumerate_partitions, factorial};

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn t(rows: &[&[usize]]) -> StandardTableau {
        StandardTableau::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn syt_of_small_shapes() {
        assert_eq!(
            enumerate_syt(&p(&[2, 1])),
            vec![t(&[&[1, 2], &[3]]), t(&[&[1, 3], &[2]])]
        );
        assert_eq!(enumerate_syt(&p(&[4])).len(), 1);
        assert_eq!(
            enumerate_syt(&p(&[2, 2])),
            vec![t(&[&[1, 2], &[3, 4]]), t(&[&[1, 3], &[2, 4]])]
        );
    }

    #[test]
    fn syt_are_valid_and_distinct() {
        for lambda in enumerate_partitions(6) {
            let all = enumerate_syt(&lambda);
            for q in &all {
                assert!(StandardTableau::from_rows(q.rows().to_vec()).is_ok());
            }
            let distinct: std::collections::HashSet<_> = all.iter().collect();
            assert_eq!(distinct.len(), all.len());
        }
    }

    #[test]
    fn tableau_descents() {
        assert_eq!(t(&[&[1, 2], &[3]]).descent_set().elements(), &[2]);
        assert_eq!(t(&[&[1, 3], &[2]]).descent_set().elements(), &[1]);
        assert!(t(&[&[1, 2, 3]]).descent_set().is_empty());
    }

    #[test]
    fn rejects_non_standard_fillings() {
        assert!(StandardTableau::from_rows(vec![vec![2, 1]]).is_err());
        assert!(StandardTableau::from_rows(vec![vec![1, 2], vec![1]]).is_err());
        assert!(StandardTableau::from_rows(vec![vec![1, 3], vec![2, 4, 5]]).is_err());
        assert!(StandardTableau::from_rows(vec![vec![2, 3], vec![1]]).is_err());
    }

    #[test]
    fn hook_length_matches_enumeration() {
        for n in 0..=6 {
            for lambda in enumerate_partitions(n) {
                assert_eq!(
                    f_lambda(&lambda),
                    BigUint::from(enumerate_syt(&lambda).len()),
                    "{lambda}"
                );
            }
        }
        assert_eq!(f_lambda(&p(&[2, 1])), BigUint::from(2u32));
        assert_eq!(f_lambda(&p(&[1, 1, 1])), BigUint::one());
    }

    #[test]
    fn sum_of_squares_is_factorial() {
        for n in 1..=7 {
            let total: BigUint = enumerate_partitions(n)
                .iter()
                .map(|l| f_lambda(l).pow(2))
                .sum();
            assert_eq!(total, factorial(n));
        }
    }

    #[test]
    fn first_row_counts_match_enumeration() {
        for n in 0..=6 {
            for lambda in enumerate_partitions(n) {
                let all = enumerate_syt(&lambda);
                let mut previous = None;
                for j in 0..=n {
                    let brute = all.iter().filter(|q| q.first_row_prefix() >= j).count();
                    let fast = f_lambda_first_row(&lambda, j);
                    assert_eq!(fast, BigUint::from(brute), "{lambda} j={j}");
                    if let Some(prev) = previous {
                        assert!(fast <= prev);
                    }
                    previous = Some(fast);
                }
                assert_eq!(f_lambda_first_row(&lambda, 0), f_lambda(&lambda));
            }
        }
    }

    #[test]
    fn first_row_examples() {
        assert_eq!(f_lambda_first_row(&p(&[2, 1]), 0), BigUint::from(2u32));
        assert_eq!(f_lambda_first_row(&p(&[2, 1]), 2), BigUint::one());
        assert_eq!(f_lambda_first_row(&p(&[1, 1, 1]), 1), BigUint::one());
        assert_eq!(f_lambda_first_row(&p(&[1, 1, 1]), 2), BigUint::zero());
    }

    #[test]
    fn colored_tableau_streams() {
        assert_eq!(enumerate_colored_syt(&p(&[2, 1]), 1).count(), 2);
        assert_eq!(enumerate_colored_syt(&p(&[2, 1]), 2).count(), 16);
        assert_eq!(enumerate_colored_syt(&p(&[1]), 3).count(), 3);
        let all: std::collections::HashSet<_> = enumerate_colored_syt(&p(&[2, 1]), 3).collect();
        assert_eq!(all.len(), 2 * 27);
    }

    #[test]
    fn zero_prefix_respects_colors() {
        let q = ColoredTableau::new(t(&[&[1, 2, 4], &[3]]), vec![0, 1, 0, 0], 2).unwrap();
        assert_eq!(q.tableau().first_row_prefix(), 2);
        assert_eq!(q.zero_first_row_prefix(), 1);
        assert!(ColoredTableau::new(t(&[&[1]]), vec![2], 2).is_err());
    }
}
