//! Exact class functions of the symmetric group.
//!
//! A [`ClassFunction`] stores one integer per conjugacy class of `S_n`, indexed by cycle
//! type in the canonical partition order of [`enumerate_partitions`]. Irreducible
//! characters come from the Murnaghan–Nakayama rule, evaluated on beta-sets (first-column
//! hook lengths) so that removing a border strip of length `k` is moving one bead `k` steps.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::combinatorics::{enumerate_partitions, f_lambda, factorial, Partition, Permutation};
use crate::error::{Error, Result};

/// The cycle type of a permutation, indexing its conjugacy class.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleType(pub Partition);

impl CycleType {
    pub fn partition(&self) -> &Partition {
        &self.0
    }

    /// The identity class `(1^n)`.
    pub fn identity(n: usize) -> Self {
        CycleType(Partition::column(n))
    }

    /// Canonical representative: cycles `(1 2 .. μ_1)(μ_1+1 ..)...` taken in order of the
    /// parts of `μ`, each mapping `i ↦ i + 1` and its last element back to its first.
    pub fn representative(&self) -> Permutation {
        let n = self.0.size();
        let mut images = vec![0; n];
        let mut start = 1;
        for &len in self.0.parts() {
            for i in start..start + len {
                images[i - 1] = if i + 1 < start + len { i + 1 } else { start };
            }
            start += len;
        }
        Permutation::new(images).expect("cycle representative is a bijection")
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

pub fn cycle_type(w: &Permutation) -> CycleType {
    let lengths = w.cycles().iter().map(Vec::len).collect();
    CycleType(Partition::from_unsorted(lengths).expect("cycle lengths are positive"))
}

/// `n! / z_μ` with `z_μ = ∏ i^{m_i} m_i!`.
pub fn class_size(mu: &CycleType) -> BigUint {
    let z =
        mu.0.multiplicities()
            .iter()
            .enumerate()
            .skip(1)
            .fold(BigUint::one(), |acc, (i, &m)| {
                acc * BigUint::from(i).pow(m as u32) * factorial(m)
            });
    factorial(mu.0.size()) / z
}

/// An integer-valued class function on `S_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ClassFunction {
    n: usize,
    values: Vec<BigInt>,
}

impl ClassFunction {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            values: vec![BigInt::zero(); enumerate_partitions(n).len()],
        }
    }

    /// Builds from values listed in canonical cycle-type order.
    pub fn from_values(n: usize, values: Vec<BigInt>) -> Result<Self> {
        let expected = enumerate_partitions(n).len();
        if values.len() != expected {
            return Err(Error::SizeMismatch(values.len(), expected));
        }
        Ok(Self { n, values })
    }

    /// Evaluates `f` on the canonical representative of every class.
    pub fn from_fn(n: usize, mut f: impl FnMut(&CycleType) -> BigInt) -> Self {
        let values = enumerate_partitions(n)
            .into_iter()
            .map(|p| f(&CycleType(p)))
            .collect();
        Self { n, values }
    }

    /// Trivial character `1_G`.
    pub fn trivial(n: usize) -> Self {
        Self::from_fn(n, |_| BigInt::one())
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    /// Value at the class with the given cycle type.
    pub fn value(&self, mu: &CycleType) -> &BigInt {
        let idx = enumerate_partitions(self.n)
            .iter()
            .position(|p| p == &mu.0)
            .expect("cycle type of the right size");
        &self.values[idx]
    }

    /// Value at the identity, i.e. the dimension of a (virtual) representation.
    pub fn dimension(&self) -> &BigInt {
        self.values.last().expect("S_n has at least one class")
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Zero::is_zero)
    }

    /// Classes paired with values, in canonical order.
    pub fn iter(&self) -> impl Iterator<Item = (CycleType, &BigInt)> {
        enumerate_partitions(self.n)
            .into_iter()
            .map(CycleType)
            .zip(self.values.iter())
    }

    fn check_same(&self, other: &Self) {
        assert_eq!(
            self.n, other.n,
            "class functions on different symmetric groups"
        );
    }
}

impl fmt::Display for ClassFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.iter().map(|(mu, v)| format!("{mu}:{v}")).collect();
        write!(f, "[{}]", body.join(" "))
    }
}

impl AddAssign<&ClassFunction> for ClassFunction {
    fn add_assign(&mut self, rhs: &ClassFunction) {
        self.check_same(rhs);
        self.values
            .iter_mut()
            .zip(&rhs.values)
            .for_each(|(a, b)| *a += b);
    }
}

impl SubAssign<&ClassFunction> for ClassFunction {
    fn sub_assign(&mut self, rhs: &ClassFunction) {
        self.check_same(rhs);
        self.values
            .iter_mut()
            .zip(&rhs.values)
            .for_each(|(a, b)| *a -= b);
    }
}

impl Add<&ClassFunction> for &ClassFunction {
    type Output = ClassFunction;
    fn add(self, rhs: &ClassFunction) -> ClassFunction {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&ClassFunction> for &ClassFunction {
    type Output = ClassFunction;
    fn sub(self, rhs: &ClassFunction) -> ClassFunction {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for ClassFunction {
    type Output = ClassFunction;
    fn neg(mut self) -> ClassFunction {
        self.values.iter_mut().for_each(|v| *v = -v.clone());
        self
    }
}

impl Mul<&ClassFunction> for &BigInt {
    type Output = ClassFunction;
    fn mul(self, rhs: &ClassFunction) -> ClassFunction {
        ClassFunction {
            n: rhs.n,
            values: rhs.values.iter().map(|v| v * self).collect(),
        }
    }
}

/// The regular character: `n!` at the identity, zero elsewhere.
pub fn regular_character(n: usize) -> ClassFunction {
    let id = CycleType::identity(n);
    ClassFunction::from_fn(n, |mu| {
        if *mu == id {
            BigInt::from(factorial(n))
        } else {
            BigInt::zero()
        }
    })
}

type MnKey = (Vec<usize>, Vec<usize>);

/// Beta-set `{λ_i + ℓ - i}` of a partition with `ℓ` parts, in decreasing order.
fn beta_set(parts: &[usize]) -> Vec<usize> {
    let l = parts.len();
    parts
        .iter()
        .enumerate()
        .map(|(i, &p)| p + l - 1 - i)
        .collect()
}

fn from_beta_set(mut beta: Vec<usize>) -> Vec<usize> {
    beta.sort_unstable_by(|a, b| b.cmp(a));
    let l = beta.len();
    beta.iter()
        .enumerate()
        .map(|(i, &b)| b - (l - 1 - i))
        .filter(|&p| p > 0)
        .collect()
}

/// Every way to strip a border strip of length `k` from `shape`, with its sign `(-1)^{height}`.
fn border_strip_removals(shape: &[usize], k: usize) -> Vec<(Vec<usize>, bool)> {
    let beta = beta_set(shape);
    let mut out = Vec::new();
    for (idx, &b) in beta.iter().enumerate() {
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        let target = b - k;
        let crossed = beta.iter().filter(|&&c| c > target && c < b).count();
        let mut moved = beta.clone();
        moved[idx] = target;
        out.push((from_beta_set(moved), crossed % 2 == 1));
    }
    out
}

/// `χ^λ(μ)` by the plain Murnaghan–Nakayama recursion, without memoisation.
pub fn mn_value_naive(shape: &[usize], cycle_lengths: &[usize]) -> BigInt {
    match cycle_lengths.split_first() {
        None => {
            if shape.is_empty() {
                BigInt::one()
            } else {
                BigInt::zero()
            }
        }
        Some((&k, rest)) => border_strip_removals(shape, k)
            .into_iter()
            .map(|(smaller, negative)| {
                let v = mn_value_naive(&smaller, rest);
                if negative {
                    -v
                } else {
                    v
                }
            })
            .sum(),
    }
}

fn mn_value(shape: &[usize], cycle_lengths: &[usize], memo: &mut HashMap<MnKey, BigInt>) -> BigInt {
    let Some((&k, rest)) = cycle_lengths.split_first() else {
        return if shape.is_empty() {
            BigInt::one()
        } else {
            BigInt::zero()
        };
    };
    let key = (shape.to_vec(), cycle_lengths.to_vec());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let mut total = BigInt::zero();
    for (smaller, negative) in border_strip_removals(shape, k) {
        let v = mn_value(&smaller, rest, memo);
        if negative {
            total -= v;
        } else {
            total += v;
        }
    }
    memo.insert(key, total.clone());
    total
}

/// All irreducible characters of `S_n`, indexed like the partitions of `n`.
#[derive(Debug)]
pub struct CharacterTable {
    n: usize,
    shapes: Vec<Partition>,
    characters: Vec<ClassFunction>,
}

impl CharacterTable {
    pub fn compute(n: usize) -> Self {
        let shapes = enumerate_partitions(n);
        let mut memo = HashMap::new();
        let characters = shapes
            .iter()
            .map(|lambda| {
                let values = shapes
                    .iter()
                    .map(|mu| mn_value(lambda.parts(), mu.parts(), &mut memo))
                    .collect();
                ClassFunction { n, values }
            })
            .collect();
        Self {
            n,
            shapes,
            characters,
        }
    }

    /// Shared table for `S_n`, filled on first use. The cache only ever holds the
    /// table [`CharacterTable::compute`] would return.
    pub fn shared(n: usize) -> Arc<CharacterTable> {
        static CACHE: OnceLock<RwLock<HashMap<usize, Arc<CharacterTable>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(t) = cache.read().expect("character cache poisoned").get(&n) {
            return Arc::clone(t);
        }
        let table = Arc::new(Self::compute(n));
        let mut guard = cache.write().expect("character cache poisoned");
        Arc::clone(guard.entry(n).or_insert(table))
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn shapes(&self) -> &[Partition] {
        &self.shapes
    }

    pub fn character(&self, lambda: &Partition) -> &ClassFunction {
        let idx = self
            .shapes
            .iter()
            .position(|p| p == lambda)
            .expect("shape of the right size");
        &self.characters[idx]
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &ClassFunction)> {
        self.shapes.iter().zip(&self.characters)
    }
}

/// `χ^λ` as a class function.
pub fn irreducible_character(lambda: &Partition) -> ClassFunction {
    CharacterTable::shared(lambda.size())
        .character(lambda)
        .clone()
}

/// `⟨f, g⟩ = (1/n!) Σ_μ |C_μ| f(μ) g(μ)`. All characters here are real-valued.
pub fn inner_product(f: &ClassFunction, g: &ClassFunction) -> Result<BigRational> {
    if f.n != g.n {
        return Err(Error::SizeMismatch(f.n, g.n));
    }
    let mut sum = BigInt::zero();
    for ((mu, a), b) in f.iter().zip(&g.values) {
        sum += BigInt::from(class_size(&mu)) * a * b;
    }
    Ok(BigRational::new(sum, BigInt::from(factorial(f.n))))
}

/// Multiplicity of each irreducible in a virtual character. Zero multiplicities are omitted.
pub fn decompose(f: &ClassFunction) -> Result<BTreeMap<Partition, BigInt>> {
    let table = CharacterTable::shared(f.n);
    let mut out = BTreeMap::new();
    for (lambda, chi) in table.iter() {
        let m = inner_product(f, chi)?;
        if !m.is_integer() {
            return Err(Error::NotVirtualCharacter {
                partition: lambda.to_string(),
                value: m.to_string(),
            });
        }
        let m = m.to_integer();
        if !m.is_zero() {
            out.insert(lambda.clone(), m);
        }
    }
    Ok(out)
}

/// `Σ_λ m_λ χ^λ`.
pub fn reconstruct(
    n: usize,
    multiplicities: &BTreeMap<Partition, BigInt>,
) -> Result<ClassFunction> {
    let table = CharacterTable::shared(n);
    let mut out = ClassFunction::zero(n);
    for (lambda, m) in multiplicities {
        if lambda.size() != n {
            return Err(Error::SizeMismatch(lambda.size(), n));
        }
        out += &(m * table.character(lambda));
    }
    Ok(out)
}

/// Dimension `Σ_λ m_λ f^λ` of a representation given by multiplicities.
pub fn dimension_of(multiplicities: &BTreeMap<Partition, BigInt>) -> BigInt {
    multiplicities
        .iter()
        .map(|(lambda, m)| m * BigInt::from(f_lambda(lambda)))
        .sum()
}

/// Whether every multiplicity is nonnegative.
pub fn is_genuine(multiplicities: &BTreeMap<Partition, BigInt>) -> bool {
    multiplicities.values().all(|m| !m.is_negative())
}

/// Convenience for tests and examples: `i64` view of small values.
pub fn small_values(f: &ClassFunction) -> Vec<i64> {
    f.values
        .iter()
        .map(|v| v.to_i64().expect("value fits in i64"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{enumerate_permutations, f_lambda};

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn ct(parts: &[usize]) -> CycleType {
        CycleType(p(parts))
    }

    #[test]
    fn cycle_types() {
        assert_eq!(cycle_type(&Permutation::identity(3)), ct(&[1, 1, 1]));
        assert_eq!(
            cycle_type(&Permutation::new(vec![2, 1, 3]).unwrap()),
            ct(&[2, 1])
        );
        assert_eq!(
            cycle_type(&Permutation::new(vec![2, 3, 1]).unwrap()),
            ct(&[3])
        );
    }

    #[test]
    fn representatives_have_their_cycle_type() {
        for n in 1..=7 {
            for mu in enumerate_partitions(n) {
                let mu = CycleType(mu);
                assert_eq!(cycle_type(&mu.representative()), mu);
            }
        }
    }

    #[test]
    fn class_sizes_match_counting() {
        assert_eq!(class_size(&ct(&[1, 1, 1])), BigUint::one());
        assert_eq!(class_size(&ct(&[2, 1])), BigUint::from(3u32));
        assert_eq!(class_size(&ct(&[3])), BigUint::from(2u32));
        for n in 1..=6 {
            let perms = enumerate_permutations(n);
            let mut total = BigUint::zero();
            for mu in enumerate_partitions(n) {
                let mu = CycleType(mu);
                let brute = perms.iter().filter(|w| cycle_type(w) == mu).count();
                assert_eq!(class_size(&mu), BigUint::from(brute));
                total += class_size(&mu);
            }
            assert_eq!(total, factorial(n));
        }
    }

    #[test]
    fn small_characters() {
        assert_eq!(
            small_values(&irreducible_character(&p(&[2, 1]))),
            vec![-1, 0, 2]
        );
        for n in 1..=6 {
            assert_eq!(
                irreducible_character(&Partition::row(n)),
                ClassFunction::trivial(n)
            );
            let sign = irreducible_character(&Partition::column(n));
            let expected = if n % 2 == 1 { 1 } else { -1 };
            assert_eq!(sign.value(&ct(&[n])), &BigInt::from(expected));
        }
    }

    #[test]
    fn identity_value_is_f_lambda() {
        for n in 1..=7 {
            for lambda in enumerate_partitions(n) {
                assert_eq!(
                    irreducible_character(&lambda).dimension(),
                    &BigInt::from(f_lambda(&lambda))
                );
            }
        }
    }

    #[test]
    fn orthonormality() {
        for n in 1..=6 {
            let table = CharacterTable::compute(n);
            for (a, chi) in table.iter() {
                for (b, psi) in table.iter() {
                    let expected = if a == b {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    };
                    assert_eq!(inner_product(chi, psi).unwrap(), expected, "{a} {b}");
                }
            }
        }
    }

    #[test]
    fn column_sums_give_regular_character() {
        for n in 1..=6 {
            let mut total = ClassFunction::zero(n);
            for lambda in enumerate_partitions(n) {
                total += &(&BigInt::from(f_lambda(&lambda)) * &irreducible_character(&lambda));
            }
            assert_eq!(total, regular_character(n));
        }
    }

    #[test]
    fn memoised_matches_naive() {
        for n in 1..=5 {
            let table = CharacterTable::compute(n);
            for (lambda, chi) in table.iter() {
                for (mu, v) in chi.iter() {
                    assert_eq!(&mn_value_naive(lambda.parts(), mu.0.parts()), v);
                }
            }
        }
    }

    #[test]
    fn decompositions() {
        let chi = irreducible_character(&p(&[2, 1]));
        assert_eq!(
            decompose(&chi).unwrap(),
            BTreeMap::from([(p(&[2, 1]), BigInt::one())])
        );
        let reg = decompose(&regular_character(3)).unwrap();
        assert_eq!(
            reg,
            BTreeMap::from([
                (p(&[3]), BigInt::one()),
                (p(&[2, 1]), BigInt::from(2)),
                (p(&[1, 1, 1]), BigInt::one())
            ])
        );
        assert!(decompose(&ClassFunction::zero(4)).unwrap().is_empty());
        for n in 1..=5 {
            for (lambda, m) in decompose(&regular_character(n)).unwrap() {
                assert_eq!(m, BigInt::from(f_lambda(&lambda)));
            }
        }
    }

    #[test]
    fn regular_characters() {
        assert_eq!(small_values(&regular_character(3)), vec![0, 0, 6]);
        assert_eq!(small_values(&regular_character(1)), vec![1]);
        assert_eq!(regular_character(4).dimension(), &BigInt::from(24));
    }

    #[test]
    fn non_virtual_is_rejected() {
        let mut values = vec![BigInt::zero(); 3];
        values[2] = BigInt::one();
        let f = ClassFunction::from_values(3, values).unwrap();
        assert!(matches!(
            decompose(&f),
            Err(Error::NotVirtualCharacter { .. })
        ));
        assert!(inner_product(&f, &ClassFunction::zero(2)).is_err());
    }
}
