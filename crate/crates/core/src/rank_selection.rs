//! The representations `β_P(S)` and their multiplicities `b_{r,λ}(S)`.
//!
//! Three routes produce the same numbers:
//!
//! * **oracle**: fixed-chain characters `α_P(T)` from the explicit poset, combined by
//!   inclusion–exclusion over `T ⊆ S` ([`beta_by_inclusion_exclusion`]);
//! * **closed**: the good-action formula, which needs only the rank-`m` characters
//!   `α_P({m})`, evaluated either on the poset ([`beta_good_action`]) or through the
//!   first-row tableau counts ([`beta_multiplicities_closed_form`]);
//! * **tau**: parity counts of the `τ` statistic ([`crate::tau::count_pairs_by_parity`]).
//!
//! [`BetaTable`] collects one route's multiplicities for many rank sets.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, ToPrimitive, Zero};

use crate::characters::{decompose, reconstruct, regular_character, CharacterTable, ClassFunction};
use crate::combinatorics::{
    descent_count, enumerate_partitions, f_lambda, f_lambda_first_row, factorial, Partition,
    RankSet,
};
use crate::error::{Error, Result};
use crate::poset::{alpha_character, InjectiveWordPoset, SymmetricAction};
use crate::report::CheckRecord;
use crate::tau::count_pairs_by_parity;

fn signed(term: BigInt, negative: bool) -> BigInt {
    if negative {
        -term
    } else {
        term
    }
}

/// `β_P(S) = Σ_{T ⊆ S} (-1)^{|S - T|} α_P(T)` with every `α_P(T)` counted on the poset.
pub fn beta_by_inclusion_exclusion<P: SymmetricAction>(
    poset: &P,
    s: &RankSet,
) -> Result<ClassFunction> {
    s.check_within(poset.inner_rank())?;
    let mut beta = ClassFunction::zero(poset.group_degree());
    for t in s.subsets() {
        let alpha = alpha_character(poset, &t)?;
        if (s.len() - t.len()).is_multiple_of(2) {
            beta += &alpha;
        } else {
            beta -= &alpha;
        }
    }
    Ok(beta)
}

/// Evaluates the good-action formula on a poset, computing each `α_P({m})` at most once.
pub struct GoodActionEngine<'a, P: SymmetricAction> {
    poset: &'a P,
    rank_alphas: HashMap<usize, ClassFunction>,
}

impl<'a, P: SymmetricAction> GoodActionEngine<'a, P> {
    pub fn new(poset: &'a P) -> Self {
        Self {
            poset,
            rank_alphas: HashMap::new(),
        }
    }

    /// `α_P({m})`, memoised.
    pub fn rank_alpha(&mut self, m: usize) -> Result<&ClassFunction> {
        if !self.rank_alphas.contains_key(&m) {
            let single = RankSet::new(vec![m], self.poset.inner_rank())?;
            let alpha = alpha_character(self.poset, &single)?;
            self.rank_alphas.insert(m, alpha);
        }
        Ok(&self.rank_alphas[&m])
    }

    /// `β_P(S) = (-1)^k 1 + Σ_{i=1}^{k} (-1)^{k-i} b_{s_i}({s_1, ..., s_{i-1}}) α_P({s_i})`.
    ///
    /// Requires `P ∖ {1̂}` simplicial and the action good; both hold for colored
    /// injective words.
    pub fn beta(&mut self, s: &RankSet) -> Result<ClassFunction> {
        s.check_within(self.poset.inner_rank())?;
        let k = s.len();
        let n = self.poset.group_degree();
        let mut beta = ClassFunction::trivial(n);
        if k % 2 == 1 {
            beta = -beta;
        }
        let elems = s.elements();
        for (i, &si) in elems.iter().enumerate() {
            let earlier = RankSet::new(elems[..i].to_vec(), si)?;
            let coeff = signed(
                BigInt::from(descent_count(si, &earlier)?),
                (k - i - 1) % 2 == 1,
            );
            let alpha = self.rank_alpha(si)?;
            beta += &(&coeff * alpha);
        }
        Ok(beta)
    }
}

/// One-shot form of [`GoodActionEngine::beta`].
pub fn beta_good_action<P: SymmetricAction>(poset: &P, s: &RankSet) -> Result<ClassFunction> {
    GoodActionEngine::new(poset).beta(s)
}

/// `α_P({m}) = r^m Σ_λ f^{λ, n-m} χ^λ`, the permutation character on colored words of
/// length `m`, without building the poset.
pub fn alpha_rank_m_closed_form(n: usize, r: usize, m: usize) -> Result<ClassFunction> {
    if m == 0 || m > n {
        return Err(Error::InvalidArgument(format!("rank {m} outside 1..={n}")));
    }
    let table = CharacterTable::shared(n);
    let scale = BigUint::from(r).pow(m as u32);
    let mut out = ClassFunction::zero(n);
    for (lambda, chi) in table.iter() {
        let coeff = BigInt::from(&scale * f_lambda_first_row(lambda, n - m));
        out += &(&coeff * chi);
    }
    Ok(out)
}

/// `b_{r,λ}(S) = (-1)^k δ_{λ,(n)} + Σ_{i=1}^{k} (-1)^{k-i} b_{s_i}({s_1, ..., s_{i-1}}) r^{s_i} f^{λ, n-s_i}`
/// for every `λ ⊢ n`, zeros included, in canonical partition order.
///
/// Accepts any `S ⊆ [n]`; when `n ∈ S` the last term uses `f^{λ,0} = f^λ`.
pub fn beta_multiplicities_closed_form(n: usize, r: usize, s: &RankSet) -> Result<Vec<BigInt>> {
    s.check_within(n)?;
    let k = s.len();
    let shapes = enumerate_partitions(n);
    let elems = s.elements();
    let mut coeffs = Vec::with_capacity(k);
    for (i, &si) in elems.iter().enumerate() {
        let earlier = RankSet::new(elems[..i].to_vec(), si)?;
        let c = BigInt::from(descent_count(si, &earlier)? * BigUint::from(r).pow(si as u32));
        coeffs.push((si, signed(c, (k - i - 1) % 2 == 1)));
    }
    let row = Partition::row(n);
    Ok(shapes
        .iter()
        .map(|lambda| {
            let mut m = if *lambda == row {
                signed(BigInt::from(1), k % 2 == 1)
            } else {
                BigInt::zero()
            };
            for (si, c) in &coeffs {
                m += c * BigInt::from(f_lambda_first_row(lambda, n - si));
            }
            m
        })
        .collect())
}

/// How a [`BetaTable`] is filled.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    /// Parity counts of `τ` on pairs of permutations and colored tableaux.
    Tau,
    /// The good-action closed form with first-row tableau counts.
    Closed,
    /// Fixed maximal chains of the explicit poset, then inclusion–exclusion.
    Oracle,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::Tau, Method::Closed, Method::Oracle];

    pub fn name(self) -> &'static str {
        match self {
            Method::Tau => "tau",
            Method::Closed => "closed",
            Method::Oracle => "oracle",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "tau" => Ok(Method::Tau),
            "closed" => Ok(Method::Closed),
            "oracle" => Ok(Method::Oracle),
            other => Err(Error::InvalidArgument(format!("unknown method `{other}`"))),
        }
    }
}

/// Multiplicities of `β_P(S)` for one rank set, dense over the partitions of `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BetaRow {
    pub set: RankSet,
    pub multiplicities: Vec<BigInt>,
}

impl BetaRow {
    /// `b_P(S) = Σ_λ b_{r,λ}(S) f^λ`.
    pub fn dimension(&self, shapes: &[Partition]) -> BigInt {
        shapes
            .iter()
            .zip(&self.multiplicities)
            .map(|(lambda, m)| m * BigInt::from(f_lambda(lambda)))
            .sum()
    }

    pub fn as_map(&self, shapes: &[Partition]) -> BTreeMap<Partition, BigInt> {
        shapes
            .iter()
            .cloned()
            .zip(self.multiplicities.iter().cloned())
            .filter(|(_, m)| !m.is_zero())
            .collect()
    }
}

/// `b_{r,λ}(T)` for a list of rank sets `T ⊆ [n]`, computed by one [`Method`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BetaTable {
    pub n: usize,
    pub r: usize,
    pub method: Method,
    pub shapes: Vec<Partition>,
    pub rows: Vec<BetaRow>,
}

impl BetaTable {
    /// Table over every `T ⊆ [n]`, in increasing mask order.
    pub fn compute(n: usize, r: usize, method: Method, budget: u64) -> Result<Self> {
        let sets: Vec<_> = RankSet::all_subsets(n).collect();
        Self::compute_for(n, r, method, &sets, budget)
    }

    /// Table restricted to the given rank sets, in the given order.
    pub fn compute_for(
        n: usize,
        r: usize,
        method: Method,
        sets: &[RankSet],
        budget: u64,
    ) -> Result<Self> {
        if n == 0 || r == 0 {
            return Err(Error::InvalidArgument(format!(
                "need n, r >= 1, got n = {n}, r = {r}"
            )));
        }
        for s in sets {
            s.check_within(n)?;
        }
        let shapes = enumerate_partitions(n);
        let rows = match method {
            Method::Closed => sets
                .iter()
                .map(|s| {
                    Ok(BetaRow {
                        set: s.clone(),
                        multiplicities: beta_multiplicities_closed_form(n, r, s)?,
                    })
                })
                .collect::<Result<Vec<_>>>()?,
            Method::Oracle => oracle_rows(n, r, sets, &shapes, budget)?,
            Method::Tau => tau_rows(n, r, sets, &shapes, budget)?,
        };
        Ok(Self {
            n,
            r,
            method,
            shapes,
            rows,
        })
    }

    pub fn row(&self, s: &RankSet) -> Option<&BetaRow> {
        self.rows.iter().find(|row| &row.set == s)
    }

    /// `β_P(T)` as a class function, rebuilt from its multiplicities.
    pub fn character(&self, s: &RankSet) -> Option<ClassFunction> {
        self.row(s).map(|row| {
            reconstruct(self.n, &row.as_map(&self.shapes)).expect("shapes are partitions of n")
        })
    }

    pub fn all_nonnegative(&self) -> bool {
        self.rows
            .iter()
            .flat_map(|r| &r.multiplicities)
            .all(|m| !m.is_negative())
    }
}

fn oracle_rows(
    n: usize,
    r: usize,
    sets: &[RankSet],
    shapes: &[Partition],
    budget: u64,
) -> Result<Vec<BetaRow>> {
    let poset = InjectiveWordPoset::build(n, r, budget)?;
    let mut alphas: HashMap<RankSet, ClassFunction> = HashMap::new();
    let mut rows = Vec::with_capacity(sets.len());
    for s in sets {
        let mut beta = ClassFunction::zero(n);
        for t in s.subsets() {
            if !alphas.contains_key(&t) {
                let alpha = alpha_character(&poset, &t)?;
                alphas.insert(t.clone(), alpha);
            }
            if (s.len() - t.len()) % 2 == 0 {
                beta += &alphas[&t];
            } else {
                beta -= &alphas[&t];
            }
        }
        let decomposition = decompose(&beta)?;
        let multiplicities = shapes
            .iter()
            .map(|l| decomposition.get(l).cloned().unwrap_or_default())
            .collect();
        rows.push(BetaRow {
            set: s.clone(),
            multiplicities,
        });
    }
    Ok(rows)
}

/// Pairs visited when counting `τ` parities for one descent set, over all shapes.
pub fn tau_pair_workload(n: usize, r: usize, descents: &RankSet) -> Result<BigUint> {
    let per_w: BigUint = enumerate_partitions(n)
        .iter()
        .map(f_lambda)
        .sum::<BigUint>()
        * BigUint::from(r).pow(n as u32);
    Ok(per_w * descent_count(n, descents)?)
}

fn tau_rows(
    n: usize,
    r: usize,
    sets: &[RankSet],
    shapes: &[Partition],
    budget: u64,
) -> Result<Vec<BetaRow>> {
    let mut counts: HashMap<RankSet, Vec<(BigUint, BigUint)>> = HashMap::new();
    let mut rows = Vec::with_capacity(sets.len());
    for s in sets {
        let base = s.without(n);
        if !counts.contains_key(&base) {
            let work = tau_pair_workload(n, r, &base)?;
            if work.to_u64().is_none_or(|w| w > budget) {
                return Err(Error::BudgetExceeded {
                    what: "tau pairs",
                    needed: work.to_string(),
                    budget,
                });
            }
            let per_shape = shapes
                .iter()
                .map(|lambda| count_pairs_by_parity(n, r, &base, lambda).map(|c| (c.odd, c.even)))
                .collect::<Result<Vec<_>>>()?;
            counts.insert(base.clone(), per_shape);
        }
        let include_n = s.contains(n);
        let multiplicities = counts[&base]
            .iter()
            .map(|(odd, even)| BigInt::from(if include_n { even.clone() } else { odd.clone() }))
            .collect();
        rows.push(BetaRow {
            set: s.clone(),
            multiplicities,
        });
    }
    Ok(rows)
}

/// Checks `b_{r,λ}(S) + b_{r,λ}(S ∪ {n}) = b_n(S) r^n f^λ` for every `λ`, with both summands
/// nonnegative, and the matching class-function identity
/// `β(S) + β(S ∪ {n}) = b_n(S) r^n ρ^reg`.
pub fn beta_complement_sum_check(table: &BetaTable, s: &RankSet) -> Result<Vec<CheckRecord>> {
    let n = table.n;
    s.check_within(n.saturating_sub(1))?;
    let with_n = s.with(n);
    let (Some(lower), Some(upper)) = (table.row(s), table.row(&with_n)) else {
        return Err(Error::InvalidArgument(format!(
            "table lacks rows {s} and {with_n}"
        )));
    };
    let scale = descent_count(n, s)? * BigUint::from(table.r).pow(n as u32);
    let expected: Vec<BigInt> = table
        .shapes
        .iter()
        .map(|l| BigInt::from(&scale * f_lambda(l)))
        .collect();
    let actual: Vec<BigInt> = lower
        .multiplicities
        .iter()
        .zip(&upper.multiplicities)
        .map(|(a, b)| a + b)
        .collect();
    let nonnegative = lower
        .multiplicities
        .iter()
        .chain(&upper.multiplicities)
        .all(|m| !m.is_negative());
    let params = format!("n={n} r={} S={s} method={}", table.r, table.method);
    let per_shape = CheckRecord::compare(
        "complement-sum",
        "b_{r,λ}(S) + b_{r,λ}(S ∪ {n}) = b_n(S) r^n f^λ, both summands ≥ 0",
        params.clone(),
        expected,
        actual,
        nonnegative,
    );
    let reg = regular_character(n);
    let expected_char = &BigInt::from(scale) * &reg;
    let actual_char =
        &table.character(s).expect("row present") + &table.character(&with_n).expect("row present");
    let as_characters = CheckRecord::compare(
        "complement-sum-character",
        "β(S) + β(S ∪ {n}) = b_n(S) r^n ρ^reg",
        params,
        expected_char.values().to_vec(),
        actual_char.values().to_vec(),
        true,
    );
    Ok(vec![per_shape, as_characters])
}

/// Checks `Σ_{T ⊆ [n]} β(T) = r^n n! ρ^reg` on a full table.
pub fn total_beta_sum_check(table: &BetaTable) -> Result<CheckRecord> {
    let n = table.n;
    let mut total = ClassFunction::zero(n);
    for t in RankSet::all_subsets(n) {
        let beta = table
            .character(&t)
            .ok_or_else(|| Error::InvalidArgument(format!("table lacks row {t}")))?;
        total += &beta;
    }
    let scale = BigInt::from(BigUint::from(table.r).pow(n as u32) * factorial(n));
    let expected = &scale * &regular_character(n);
    Ok(CheckRecord::compare(
        "total-sum",
        "Σ_{T ⊆ [n]} β(T) = r^n n! ρ^reg",
        format!("n={n} r={} method={}", table.r, table.method),
        expected.values().to_vec(),
        total.values().to_vec(),
        true,
    ))
}
