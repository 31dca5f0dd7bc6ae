//! Permutations in one-line notation, descent classes and Boolean-lattice chain counts.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use super::rank_set::RankSet;
use crate::error::{Error, Result};

/// A permutation `w` of `[n]` in one-line notation `w(1), ..., w(n)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in &images {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation(images));
            }
            seen[v] = true;
        }
        Ok(Self { images })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            images: (1..=n).collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `w(i)` for `i` in `1..=n`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: other.images.iter().map(|&i| self.apply(i)).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.size()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v - 1] = i + 1;
        }
        Permutation { images }
    }

    /// Positions `i` in `[n-1]` with `w(i) > w(i+1)`.
    pub fn descent_set(&self) -> RankSet {
        let elements = self
            .images
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] > w[1])
            .map(|(i, _)| i + 1)
            .collect();
        RankSet::new(elements, self.size()).expect("descents lie in [n-1]")
    }

    /// Coxeter length.
    pub fn inversions(&self) -> usize {
        let w = &self.images;
        (0..w.len())
            .map(|i| w[i + 1..].iter().filter(|&&v| v < w[i]).count())
            .sum()
    }

    /// Cycles of the permutation, each starting at its least element, ordered by that element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.size();
        let mut seen = vec![false; n + 1];
        let mut out = Vec::new();
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }

    pub fn fixed_points(&self) -> impl Iterator<Item = usize> + '_ {
        (1..=self.size()).filter(move |&i| self.apply(i) == i)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// All permutations of `[n]` in lexicographic order.
pub fn enumerate_permutations(n: usize) -> Vec<Permutation> {
    enumerate_with_descents(n, None)
}

/// Every `w ∈ S_n` whose descent set is exactly `descents`, in lexicographic order.
pub fn enumerate_descent_class(n: usize, descents: &RankSet) -> Result<Vec<Permutation>> {
    descents.check_within(n.saturating_sub(1))?;
    Ok(enumerate_with_descents(n, Some(descents)))
}

fn enumerate_with_descents(n: usize, descents: Option<&RankSet>) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut used = vec![false; n + 1];
    let mut word = Vec::with_capacity(n);
    extend_word(n, descents, &mut used, &mut word, &mut out);
    out
}

fn extend_word(
    n: usize,
    descents: Option<&RankSet>,
    used: &mut [bool],
    word: &mut Vec<usize>,
    out: &mut Vec<Permutation>,
) {
    if word.len() == n {
        out.push(Permutation {
            images: word.clone(),
        });
        return;
    }
    let pos = word.len();
    for v in 1..=n {
        if used[v] {
            continue;
        }
        if let (Some(s), Some(&prev)) = (descents, word.last()) {
            // position `pos` (1-based) is a descent iff word[pos-1] > word[pos]
            if s.contains(pos) != (prev > v) {
                continue;
            }
        }
        used[v] = true;
        word.push(v);
        extend_word(n, descents, used, word, out);
        word.pop();
        used[v] = false;
    }
}

/// `w_S`: the permutation with descent set `S` and the most inversions.
///
/// Positions are cut into consecutive blocks at the elements of `S`; the leftmost block
/// receives the largest unused values in increasing order, then the next block, and so on.
pub fn w_max(n: usize, descents: &RankSet) -> Result<Permutation> {
    descents.check_within(n.saturating_sub(1))?;
    let mut cuts = vec![0];
    cuts.extend_from_slice(descents.elements());
    cuts.push(n);
    let mut images = Vec::with_capacity(n);
    let mut top = n;
    for block in cuts.windows(2) {
        let len = block[1] - block[0];
        images.extend(top + 1 - len..=top);
        top -= len;
    }
    Ok(Permutation { images })
}

/// `a_n(T)`: chains in the Boolean lattice `B_n` whose set of ranks is `T`,
/// i.e. the multinomial `n! / (t_1! (t_2 - t_1)! ... (n - t_k)!)`.
pub fn boolean_chain_count(n: usize, ranks: &RankSet) -> Result<BigUint> {
    ranks.check_within(n.saturating_sub(1))?;
    let mut prev = 0;
    let mut total = BigUint::one();
    for &t in ranks.elements().iter().chain(std::iter::once(&n)) {
        total *= binomial(n - prev, t - prev);
        prev = t;
    }
    Ok(total)
}

/// `b_n(S)`: the number of permutations of `[n]` with descent set `S`, by
/// inclusion–exclusion over the Boolean chain counts of subsets of `S`.
pub fn descent_count(n: usize, descents: &RankSet) -> Result<BigUint> {
    descents.check_within(n.saturating_sub(1))?;
    let mut total = BigInt::zero();
    for t in descents.subsets() {
        let term = BigInt::from(boolean_chain_count(n, &t)?);
        if (descents.len() - t.len()).is_multiple_of(2) {
            total += term;
        } else {
            total -= term;
        }
    }
    Ok(total
        .to_biguint()
        .expect("descent class sizes are nonnegative"))
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}
