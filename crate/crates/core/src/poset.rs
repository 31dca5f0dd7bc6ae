//! The poset `P_{n,r}` of `r`-colored injective words and generic rank-selection machinery.
//!
//! Words are ordered by the subword relation, with the empty word as `0̂` and an artificial
//! top element `1̂` of rank `n + 1`. Nothing quadratic is stored: the down-set of a word at a
//! given rank is produced on demand by deleting letters, and maximal chains of a
//! rank-selected subposet are streamed depth-first from the top.

use std::fmt;

use itertools::Itertools;
use num_bigint::{BigInt, BigUint};
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;

use crate::characters::{ClassFunction, CycleType};
use crate::combinatorics::{binomial, boolean_chain_count, factorial, Permutation, RankSet};
use crate::error::{Error, Result};

/// Default cap on the number of poset elements [`InjectiveWordPoset::build`] will allocate.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// A finite graded poset with `0̂` and `1̂`, where `1̂` has rank `n + 1`.
pub trait GradedPoset: Sync {
    type Element: Clone + Eq + Send + Sync + fmt::Debug;

    /// `n`, so that selectable ranks are `1..=n` and `1̂` has rank `n + 1`.
    fn inner_rank(&self) -> usize;

    fn bottom(&self) -> Self::Element;

    fn top(&self) -> Self::Element;

    fn rank(&self, x: &Self::Element) -> usize;

    /// Elements `y ≤ x` with `rank(y) = rank`.
    fn below_of_rank(&self, x: &Self::Element, rank: usize) -> Vec<Self::Element>;
}

/// A graded poset on which `S_n` acts by automorphisms.
pub trait SymmetricAction: GradedPoset {
    /// The `n` of the acting group `S_n`.
    fn group_degree(&self) -> usize;

    fn act(&self, g: &Permutation, x: &Self::Element) -> Self::Element;

    fn is_fixed(&self, g: &Permutation, x: &Self::Element) -> bool {
        self.act(g, x) == *x
    }
}

/// One letter: a value in `[n]` and a color in `Z_r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub value: usize,
    pub color: usize,
}

/// A word over `[n] × Z_r` whose letters have pairwise distinct values.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColoredWord {
    letters: Vec<Letter>,
}

impl ColoredWord {
    pub fn new(letters: Vec<Letter>) -> Result<Self> {
        let mut values: Vec<_> = letters.iter().map(|l| l.value).collect();
        values.sort_unstable();
        if values.windows(2).any(|w| w[0] == w[1]) || values.first() == Some(&0) {
            return Err(Error::InvalidArgument(format!(
                "{letters:?} is not an injective word"
            )));
        }
        Ok(Self { letters })
    }

    /// Builds a word from `(value, color)` pairs.
    pub fn from_pairs(pairs: &[(usize, usize)]) -> Result<Self> {
        Self::new(
            pairs
                .iter()
                .map(|&(value, color)| Letter { value, color })
                .collect(),
        )
    }

    /// Uncolored word from values, every letter colored zero.
    pub fn from_values(values: &[usize]) -> Result<Self> {
        Self::new(
            values
                .iter()
                .map(|&value| Letter { value, color: 0 })
                .collect(),
        )
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Whether `self` is obtained from `other` by deleting letters.
    pub fn is_subword_of(&self, other: &ColoredWord) -> bool {
        let mut it = other.letters.iter();
        self.letters.iter().all(|l| it.any(|m| m == l))
    }

    /// All subwords of length `k`, one per choice of positions, in lexicographic
    /// order of the kept positions.
    pub fn subwords(&self, k: usize) -> Vec<ColoredWord> {
        (0..self.len())
            .combinations(k)
            .map(|pos| ColoredWord {
                letters: pos.into_iter().map(|i| self.letters[i]).collect(),
            })
            .collect()
    }
}

impl fmt::Display for ColoredWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "ε");
        }
        for l in &self.letters {
            write!(f, "({},{})", l.value, l.color)?;
        }
        Ok(())
    }
}

/// `g · w`: `g` applied to the value of each letter, colors unchanged.
pub fn apply_action(g: &Permutation, w: &ColoredWord) -> ColoredWord {
    ColoredWord {
        letters: w
            .letters
            .iter()
            .map(|l| Letter {
                value: g.apply(l.value),
                color: l.color,
            })
            .collect(),
    }
}

/// An element of `P_{n,r}`: a word (the empty word is `0̂`) or the artificial `1̂`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Element {
    Word(ColoredWord),
    Top,
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Word(w) => w.fmt(f),
            Element::Top => write!(f, "1̂"),
        }
    }
}

/// `Σ_{k=0}^{n} C(n,k) k! r^k + 1`, the number of elements of `P_{n,r}` including `1̂`.
pub fn poset_size(n: usize, r: usize) -> BigUint {
    let words: BigUint = (0..=n)
        .map(|k| binomial(n, k) * factorial(k) * BigUint::from(r).pow(k as u32))
        .sum();
    words + 1u32
}

/// The poset of `r`-colored injective words over `[n]`, materialised rank by rank.
#[derive(Clone, Debug)]
pub struct InjectiveWordPoset {
    n: usize,
    r: usize,
    /// `layers[k]`: all words of length `k`, lexicographic in `(value, color)`.
    layers: Vec<Vec<ColoredWord>>,
}

impl InjectiveWordPoset {
    /// Builds `P_{n,r}`, refusing if it would have more than `budget` elements.
    pub fn build(n: usize, r: usize, budget: u64) -> Result<Self> {
        if n == 0 || r == 0 {
            return Err(Error::InvalidArgument(format!(
                "need n, r >= 1, got n = {n}, r = {r}"
            )));
        }
        let size = poset_size(n, r);
        if size.to_u64().is_none_or(|s| s > budget) {
            return Err(Error::BudgetExceeded {
                what: "poset elements",
                needed: size.to_string(),
                budget,
            });
        }
        let mut layers = vec![vec![ColoredWord::default()]];
        for k in 1..=n {
            let mut next = Vec::new();
            for w in &layers[k - 1] {
                // extending in (value, color) order keeps each layer lexicographic
                for value in 1..=n {
                    if w.letters.iter().any(|l| l.value == value) {
                        continue;
                    }
                    for color in 0..r {
                        let mut letters = w.letters.clone();
                        letters.push(Letter { value, color });
                        next.push(ColoredWord { letters });
                    }
                }
            }
            layers.push(next);
        }
        Ok(Self { n, r, layers })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    /// Words of length `k`.
    pub fn layer(&self, k: usize) -> &[ColoredWord] {
        &self.layers[k]
    }

    /// Number of elements, counting `0̂` and `1̂`.
    pub fn element_count(&self) -> usize {
        self.layers.iter().map(Vec::len).sum::<usize>() + 1
    }

    /// All elements, rank by rank, ending with `1̂`.
    pub fn elements(&self) -> impl Iterator<Item = Element> + '_ {
        self.layers
            .iter()
            .flatten()
            .cloned()
            .map(Element::Word)
            .chain(std::iter::once(Element::Top))
    }

    /// Elements covered by `x`: single-letter deletions, or the top layer for `1̂`.
    pub fn lower_covers(&self, x: &Element) -> Vec<Element> {
        match x {
            Element::Top => self.layers[self.n]
                .iter()
                .cloned()
                .map(Element::Word)
                .collect(),
            Element::Word(w) if w.is_empty() => Vec::new(),
            Element::Word(w) => w
                .subwords(w.len() - 1)
                .into_iter()
                .map(Element::Word)
                .collect(),
        }
    }

    pub fn le(&self, x: &Element, y: &Element) -> bool {
        match (x, y) {
            (_, Element::Top) => true,
            (Element::Top, Element::Word(_)) => false,
            (Element::Word(u), Element::Word(v)) => u.is_subword_of(v),
        }
    }
}

impl GradedPoset for InjectiveWordPoset {
    type Element = Element;

    fn inner_rank(&self) -> usize {
        self.n
    }

    fn bottom(&self) -> Element {
        Element::Word(ColoredWord::default())
    }

    fn top(&self) -> Element {
        Element::Top
    }

    fn rank(&self, x: &Element) -> usize {
        match x {
            Element::Word(w) => w.len(),
            Element::Top => self.n + 1,
        }
    }

    fn below_of_rank(&self, x: &Element, rank: usize) -> Vec<Element> {
        match x {
            Element::Top if rank == self.n + 1 => vec![Element::Top],
            Element::Top => self.layers[rank]
                .iter()
                .cloned()
                .map(Element::Word)
                .collect(),
            Element::Word(w) if rank <= w.len() => {
                w.subwords(rank).into_iter().map(Element::Word).collect()
            }
            Element::Word(_) => Vec::new(),
        }
    }
}

impl SymmetricAction for InjectiveWordPoset {
    fn group_degree(&self) -> usize {
        self.n
    }

    fn act(&self, g: &Permutation, x: &Element) -> Element {
        match x {
            Element::Word(w) => Element::Word(apply_action(g, w)),
            Element::Top => Element::Top,
        }
    }

    fn is_fixed(&self, g: &Permutation, x: &Element) -> bool {
        match x {
            Element::Word(w) => w.letters.iter().all(|l| g.apply(l.value) == l.value),
            Element::Top => true,
        }
    }
}

/// A maximal chain of a rank-selected subposet, from `0̂` to `1̂` inclusive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chain<E> {
    pub elements: Vec<E>,
}

impl<E> Chain<E> {
    /// Elements strictly between `0̂` and `1̂`.
    pub fn interior(&self) -> &[E] {
        &self.elements[1..self.elements.len() - 1]
    }
}

struct Frame<E> {
    candidates: Vec<E>,
    index: usize,
}

/// Lazy depth-first stream of the maximal chains of `P_S`, built from the top down.
pub struct MaximalChains<'a, P: GradedPoset> {
    poset: &'a P,
    ranks: Vec<usize>,
    frames: Vec<Frame<P::Element>>,
    started: bool,
    done: bool,
}

impl<'a, P: GradedPoset> Iterator for MaximalChains<'a, P> {
    type Item = Chain<P::Element>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        let k = self.ranks.len();
        if !self.started {
            self.started = true;
            if k == 0 {
                self.done = true;
                return Some(Chain {
                    elements: vec![self.poset.bottom(), self.poset.top()],
                });
            }
            let candidates = self
                .poset
                .below_of_rank(&self.poset.top(), self.ranks[k - 1]);
            self.frames.push(Frame {
                candidates,
                index: 0,
            });
        }
        loop {
            let depth = self.frames.len();
            let Some(last) = self.frames.last_mut() else {
                self.done = true;
                return None;
            };
            if last.index >= last.candidates.len() {
                self.frames.pop();
                if let Some(parent) = self.frames.last_mut() {
                    parent.index += 1;
                }
                continue;
            }
            if depth == k {
                let mut elements = Vec::with_capacity(k + 2);
                elements.push(self.poset.bottom());
                elements.extend(
                    self.frames
                        .iter()
                        .rev()
                        .map(|f| f.candidates[f.index].clone()),
                );
                elements.push(self.poset.top());
                self.frames.last_mut().expect("non-empty").index += 1;
                return Some(Chain { elements });
            }
            let below = self
                .poset
                .below_of_rank(&last.candidates[last.index], self.ranks[k - 1 - depth]);
            self.frames.push(Frame {
                candidates: below,
                index: 0,
            });
        }
    }
}

/// Streams every maximal chain of the rank-selected subposet `P_S`, each exactly once.
pub fn enumerate_maximal_chains<'a, P: GradedPoset>(
    poset: &'a P,
    s: &RankSet,
) -> Result<MaximalChains<'a, P>> {
    s.check_within(poset.inner_rank())?;
    Ok(MaximalChains {
        poset,
        ranks: s.elements().to_vec(),
        frames: Vec::new(),
        started: false,
        done: false,
    })
}

/// `a_P(S)`: the number of maximal chains of `P_S`.
pub fn chain_count<P: GradedPoset>(poset: &P, s: &RankSet) -> Result<BigUint> {
    Ok(BigUint::from(enumerate_maximal_chains(poset, s)?.count()))
}

/// `b_P(S) = Σ_{T ⊆ S} (-1)^{|S - T|} a_P(T)`. With `S = ∅` this is `a_P(∅) = 1`.
pub fn chain_count_alternating<P: GradedPoset>(poset: &P, s: &RankSet) -> Result<BigInt> {
    let mut total = BigInt::zero();
    for t in s.subsets() {
        let a = BigInt::from(chain_count(poset, &t)?);
        if (s.len() - t.len()).is_multiple_of(2) {
            total += a;
        } else {
            total -= a;
        }
    }
    Ok(total)
}

/// Number of maximal chains of `P_S` fixed elementwise by `g`, by streaming every chain.
pub fn fixed_chain_count<P: SymmetricAction>(
    poset: &P,
    s: &RankSet,
    g: &Permutation,
) -> Result<u64> {
    let count = enumerate_maximal_chains(poset, s)?
        .filter(|c| c.interior().iter().all(|x| poset.is_fixed(g, x)))
        .count();
    Ok(count as u64)
}

/// `α_P(S)`: the permutation character on maximal chains of `P_S`, by counting fixed
/// chains of one canonical representative per conjugacy class. Classes are evaluated
/// in parallel and merged in canonical order.
pub fn alpha_character<P: SymmetricAction>(poset: &P, s: &RankSet) -> Result<ClassFunction> {
    s.check_within(poset.inner_rank())?;
    class_function_par(poset.group_degree(), |g| {
        fixed_chain_count(poset, s, g).map(BigInt::from)
    })
}

/// `α_P(S)` through the good-action shortcut: a chain is fixed iff its top interior
/// element is, and below a rank-`m` element the chains are those of the Boolean
/// lattice `B_m`. Valid when `P ∖ {1̂}` is simplicial and the action is good.
pub fn alpha_character_good_action<P: SymmetricAction>(
    poset: &P,
    s: &RankSet,
) -> Result<ClassFunction> {
    s.check_within(poset.inner_rank())?;
    let Some(m) = s.largest() else {
        return Ok(ClassFunction::trivial(poset.group_degree()));
    };
    let lower = boolean_chain_count(m, &s.without(m))?;
    let top_layer = poset.below_of_rank(&poset.top(), m);
    class_function_par(poset.group_degree(), |g| {
        let fixed = top_layer.iter().filter(|x| poset.is_fixed(g, x)).count();
        Ok(BigInt::from(fixed) * BigInt::from(lower.clone()))
    })
}

fn class_function_par(
    n: usize,
    eval: impl Fn(&Permutation) -> Result<BigInt> + Sync,
) -> Result<ClassFunction> {
    let classes = crate::combinatorics::enumerate_partitions(n);
    let values = classes
        .into_par_iter()
        .map(|mu| eval(&CycleType(mu).representative()))
        .collect::<Result<Vec<_>>>()?;
    ClassFunction::from_values(n, values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::small_values;
    use crate::combinatorics::enumerate_permutations;
    use std::collections::HashSet;

    fn s(elements: &[usize], bound: usize) -> RankSet {
        RankSet::new(elements.to_vec(), bound).unwrap()
    }

    fn word(values: &[usize]) -> Element {
        Element::Word(ColoredWord::from_values(values).unwrap())
    }

    #[test]
    fn poset_sizes() {
        let p3 = InjectiveWordPoset::build(3, 1, DEFAULT_BUDGET).unwrap();
        assert_eq!(p3.element_count(), 17);
        let layer_sizes: Vec<_> = (0..=3).map(|k| p3.layer(k).len()).collect();
        assert_eq!(layer_sizes, vec![1, 3, 6, 6]);
        assert_eq!(
            InjectiveWordPoset::build(1, 1, DEFAULT_BUDGET)
                .unwrap()
                .element_count(),
            3
        );
        assert_eq!(
            InjectiveWordPoset::build(2, 2, DEFAULT_BUDGET)
                .unwrap()
                .element_count(),
            14
        );
        for n in 1..=4 {
            for r in 1..=3 {
                let p = InjectiveWordPoset::build(n, r, DEFAULT_BUDGET).unwrap();
                assert_eq!(BigUint::from(p.element_count()), poset_size(n, r));
            }
        }
    }

    #[test]
    fn budget_is_enforced() {
        assert!(matches!(
            InjectiveWordPoset::build(20, 1, DEFAULT_BUDGET),
            Err(Error::BudgetExceeded { .. })
        ));
        assert!(InjectiveWordPoset::build(3, 1, 16).is_err());
        assert!(InjectiveWordPoset::build(3, 1, 17).is_ok());
        assert!(InjectiveWordPoset::build(0, 1, 17).is_err());
    }

    #[test]
    fn ranks() {
        let p = InjectiveWordPoset::build(3, 1, DEFAULT_BUDGET).unwrap();
        assert_eq!(p.rank(&p.bottom()), 0);
        assert_eq!(p.rank(&word(&[3, 1])), 2);
        assert_eq!(p.rank(&Element::Top), 4);
    }

    #[test]
    fn covers_are_single_deletions() {
        let p = InjectiveWordPoset::build(3, 1, DEFAULT_BUDGET).unwrap();
        let covers = p.lower_covers(&word(&[3, 1, 2]));
        assert_eq!(covers, vec![word(&[3, 1]), word(&[3, 2]), word(&[1, 2])]);
        assert_eq!(p.lower_covers(&Element::Top).len(), 6);
        assert!(p.lower_covers(&p.bottom()).is_empty());
        // every cover relation from the Hasse diagram goes up exactly one rank
        for x in p.elements() {
            for y in p.lower_covers(&x) {
                assert!(p.le(&y, &x));
                assert_eq!(p.rank(&y) + 1, p.rank(&x));
            }
        }
    }

    #[test]
    fn intervals_below_words_are_boolean() {
        for (n, r) in [(1, 1), (2, 2), (3, 1), (3, 2), (4, 1), (4, 2)] {
            let p = InjectiveWordPoset::build(n, r, DEFAULT_BUDGET).unwrap();
            for k in 0..=n {
                for w in p.layer(k) {
                    let below: HashSet<_> = (0..=k).flat_map(|j| w.subwords(j)).collect();
                    assert_eq!(below.len(), 1 << k);
                }
            }
        }
    }

    #[test]
    fn action_examples() {
        let g = Permutation::new(vec![2, 3, 1]).unwrap();
        let w = ColoredWord::from_pairs(&[(1, 0), (3, 1)]).unwrap();
        assert_eq!(
            apply_action(&g, &w),
            ColoredWord::from_pairs(&[(2, 0), (1, 1)]).unwrap()
        );
        assert_eq!(apply_action(&Permutation::identity(3), &w), w);
        let empty = ColoredWord::default();
        assert_eq!(
            apply_action(&Permutation::new(vec![2, 1]).unwrap(), &empty),
            empty
        );
    }

    #[test]
    fn chain_streams() {
        let p = InjectiveWordPoset::build(3, 1, DEFAULT_BUDGET).unwrap();
        let empty: Vec<_> = enumerate_maximal_chains(&p, &RankSet::empty())
            .unwrap()
            .collect();
        assert_eq!(
            empty,
            vec![Chain {
                elements: vec![p.bottom(), Element::Top]
            }]
        );
        assert_eq!(
            enumerate_maximal_chains(&p, &RankSet::full(3))
                .unwrap()
                .count(),
            36
        );
        assert_eq!(
            enumerate_maximal_chains(&p, &s(&[1], 3)).unwrap().count(),
            3
        );
        assert!(enumerate_maximal_chains(&p, &s(&[4], 4)).is_err());
    }

    #[test]
    fn chains_are_valid_and_distinct() {
        let p = InjectiveWordPoset::build(3, 2, DEFAULT_BUDGET).unwrap();
        for set in RankSet::all_subsets(3) {
            let chains: Vec<_> = enumerate_maximal_chains(&p, &set).unwrap().collect();
            let ranks: Vec<_> = std::iter::once(0)
                .chain(set.elements().iter().copied())
                .chain([4])
                .collect();
            for c in &chains {
                let got: Vec<_> = c.elements.iter().map(|x| p.rank(x)).collect();
                assert_eq!(got, ranks);
                assert!(c.elements.windows(2).all(|w| p.le(&w[0], &w[1])));
            }
            let distinct: HashSet<_> = chains.iter().map(|c| format!("{:?}", c.elements)).collect();
            assert_eq!(distinct.len(), chains.len());
        }
    }

    #[test]
    fn chain_counts() {
        let p = InjectiveWordPoset::build(3, 1, DEFAULT_BUDGET).unwrap();
        assert_eq!(
            chain_count(&p, &RankSet::empty()).unwrap(),
            BigUint::from(1u32)
        );
        assert_eq!(
            chain_count_alternating(&p, &RankSet::empty()).unwrap(),
            BigInt::from(1)
        );
        assert_eq!(
            chain_count_alternating(&p, &RankSet::full(3)).unwrap(),
            BigInt::from(2)
        );
        let p22 = InjectiveWordPoset::build(2, 2, DEFAULT_BUDGET).unwrap();
        assert_eq!(
            chain_count_alternating(&p22, &RankSet::full(2)).unwrap(),
            BigInt::from(5)
        );
    }

    #[test]
    fn alternating_counts_invert() {
        let p = InjectiveWordPoset::build(3, 2, DEFAULT_BUDGET).unwrap();
        for set in RankSet::all_subsets(3) {
            let b_sum: BigInt = set
                .subsets()
                .map(|t| chain_count_alternating(&p, &t).unwrap())
                .sum();
            assert_eq!(b_sum, BigInt::from(chain_count(&p, &set).unwrap()));
        }
    }

    #[test]
    fn alpha_examples() {
        let p2 = InjectiveWordPoset::build(2, 1, DEFAULT_BUDGET).unwrap();
        assert_eq!(
            alpha_character(&p2, &RankSet::empty()).unwrap(),
            ClassFunction::trivial(2)
        );
        assert_eq!(
            small_values(&alpha_character(&p2, &s(&[2], 2)).unwrap()),
            vec![0, 2]
        );
        let p3 = InjectiveWordPoset::build(3, 1, DEFAULT_BUDGET).unwrap();
        assert_eq!(
            small_values(&alpha_character(&p3, &s(&[1], 3)).unwrap()),
            vec![0, 1, 3]
        );
    }

    #[test]
    fn rank_m_dimensions() {
        for (n, r) in [(3, 1), (3, 2), (4, 2)] {
            let p = InjectiveWordPoset::build(n, r, DEFAULT_BUDGET).unwrap();
            for m in 1..=n {
                let alpha = alpha_character(&p, &s(&[m], n)).unwrap();
                let expected = BigUint::from(r).pow(m as u32) * factorial(n) / factorial(n - m);
                assert_eq!(alpha.dimension(), &BigInt::from(expected));
            }
        }
    }

    #[test]
    fn good_action_law() {
        for (n, r) in [(2, 2), (3, 1), (3, 2), (4, 1)] {
            let p = InjectiveWordPoset::build(n, r, DEFAULT_BUDGET).unwrap();
            let group = enumerate_permutations(n);
            for set in RankSet::all_subsets(n).filter(|t| !t.is_empty()) {
                for c in enumerate_maximal_chains(&p, &set).unwrap() {
                    let top = c.interior().last().unwrap();
                    for g in &group {
                        let all = c.interior().iter().all(|x| p.is_fixed(g, x));
                        assert_eq!(all, p.is_fixed(g, top));
                    }
                }
            }
        }
    }

    #[test]
    fn fast_and_oracle_alpha_agree() {
        for (n, r) in [(1, 2), (2, 2), (3, 2), (4, 1)] {
            let p = InjectiveWordPoset::build(n, r, DEFAULT_BUDGET).unwrap();
            for set in RankSet::all_subsets(n) {
                assert_eq!(
                    alpha_character(&p, &set).unwrap(),
                    alpha_character_good_action(&p, &set).unwrap(),
                    "n={n} r={r} S={set}"
                );
            }
        }
    }

    #[test]
    fn fixed_check_matches_action() {
        let p = InjectiveWordPoset::build(3, 2, DEFAULT_BUDGET).unwrap();
        for g in enumerate_permutations(3) {
            for x in p.elements() {
                assert_eq!(p.is_fixed(&g, &x), p.act(&g, &x) == x);
            }
        }
    }
}
