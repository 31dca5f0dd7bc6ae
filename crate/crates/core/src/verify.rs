//! Verification suites cross-checking the poset oracle, the closed forms and the
//! `τ` counts. Each suite returns [`CheckRecord`]s; work above the budget becomes a
//! skipped record instead of an error.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::Signed;

use crate::characters::{decompose, ClassFunction};
use crate::combinatorics::{
    enumerate_descent_class, enumerate_partitions, enumerate_syt, f_lambda, factorial,
    ColoredTableau, Partition, RankSet,
};
use crate::error::{Error, Result};
use crate::poset::{
    alpha_character, alpha_character_good_action, chain_count_alternating, poset_size,
    InjectiveWordPoset,
};
use crate::rank_selection::{
    alpha_rank_m_closed_form, beta_complement_sum_check, beta_multiplicities_closed_form,
    total_beta_sum_check, BetaTable, GoodActionEngine, Method,
};
use crate::report::{CheckRecord, Report};
use crate::tau::{
    colored_rsk, count_colored_perms_by_parity, derangement_count_direct, derangement_number,
    desarmenien_count, enumerate_colored_permutations, tau_colored_permutation, tau_tableau,
    tau_tableau_descent_form,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    OracleVsTau,
    OracleVsClosedForm,
    Agood,
    Blambdacolor,
    Betacolortrivial,
    RskTau,
    Derangement,
    R1Equivalence,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::OracleVsTau,
        Suite::OracleVsClosedForm,
        Suite::Agood,
        Suite::Blambdacolor,
        Suite::Betacolortrivial,
        Suite::RskTau,
        Suite::Derangement,
        Suite::R1Equivalence,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::OracleVsTau => "oracle-vs-tau",
            Suite::OracleVsClosedForm => "oracle-vs-closed-form",
            Suite::Agood => "agood",
            Suite::Blambdacolor => "blambdacolor",
            Suite::Betacolortrivial => "betacolortrivial",
            Suite::RskTau => "rsk-tau",
            Suite::Derangement => "derangement",
            Suite::R1Equivalence => "r1-equivalence",
        }
    }

    /// Whether the suite builds the explicit poset.
    pub fn needs_poset(self) -> bool {
        matches!(
            self,
            Suite::OracleVsTau | Suite::OracleVsClosedForm | Suite::Agood
        )
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `all`, `oracle` (suites that build the poset), `identities` (the rest), or one suite by name.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SuiteSelector {
    All,
    Oracle,
    Identities,
    Single(Suite),
}

impl SuiteSelector {
    pub fn suites(self) -> Vec<Suite> {
        match self {
            SuiteSelector::All => Suite::ALL.to_vec(),
            SuiteSelector::Oracle => Suite::ALL.into_iter().filter(|s| s.needs_poset()).collect(),
            SuiteSelector::Identities => Suite::ALL
                .into_iter()
                .filter(|s| !s.needs_poset())
                .collect(),
            SuiteSelector::Single(s) => vec![s],
        }
    }
}

impl FromStr for SuiteSelector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" => Ok(SuiteSelector::All),
            "oracle" => Ok(SuiteSelector::Oracle),
            "identities" => Ok(SuiteSelector::Identities),
            other => Suite::ALL
                .into_iter()
                .find(|suite| suite.name() == other)
                .map(SuiteSelector::Single)
                .ok_or_else(|| Error::InvalidArgument(format!("unknown suite `{other}`"))),
        }
    }
}

fn over_budget(work: &BigUint, budget: u64) -> bool {
    work > &BigUint::from(budget)
}

fn big(x: impl Into<BigInt>) -> BigInt {
    x.into()
}

/// Elements of the poset, or maximal chains of the full poset, whichever is larger.
pub fn oracle_workload(n: usize, r: usize) -> BigUint {
    let chains = BigUint::from(r).pow(n as u32) * factorial(n) * factorial(n);
    poset_size(n, r).max(chains)
}

/// Pairs visited by the `τ` table over every `S ⊆ [n-1]`.
pub fn tau_table_workload(n: usize, r: usize) -> BigUint {
    let syt: BigUint = enumerate_partitions(n).iter().map(f_lambda).sum();
    factorial(n) * BigUint::from(r).pow(n as u32) * syt
}

fn closed_table_workload(n: usize) -> BigUint {
    (BigUint::from(1u32) << n) * BigUint::from(enumerate_partitions(n).len())
}

fn rsk_workload(n: usize, r: usize) -> BigUint {
    factorial(n) * factorial(n) * BigUint::from(r).pow(n as u32)
}

fn params(n: usize, r: usize) -> String {
    format!("n={n} r={r}")
}

/// Poset characters shared by the oracle suites, each `α_P(T)` computed once.
struct Oracle {
    poset: InjectiveWordPoset,
    alphas: HashMap<RankSet, ClassFunction>,
}

impl Oracle {
    fn new(n: usize, r: usize, budget: u64) -> Result<Self> {
        Ok(Self {
            poset: InjectiveWordPoset::build(n, r, budget)?,
            alphas: HashMap::new(),
        })
    }

    fn alpha(&mut self, t: &RankSet) -> Result<ClassFunction> {
        if let Some(a) = self.alphas.get(t) {
            return Ok(a.clone());
        }
        let a = alpha_character(&self.poset, t)?;
        self.alphas.insert(t.clone(), a.clone());
        Ok(a)
    }

    fn beta(&mut self, s: &RankSet) -> Result<ClassFunction> {
        let n = self.poset.n();
        let mut beta = ClassFunction::zero(n);
        for t in s.subsets() {
            let a = self.alpha(&t)?;
            if (s.len() - t.len()).is_multiple_of(2) {
                beta += &a;
            } else {
                beta -= &a;
            }
        }
        Ok(beta)
    }

    fn multiplicities(&mut self, s: &RankSet, shapes: &[Partition]) -> Result<Vec<BigInt>> {
        let d = decompose(&self.beta(s)?)?;
        Ok(shapes
            .iter()
            .map(|l| d.get(l).cloned().unwrap_or_default())
            .collect())
    }
}

/// Runs the selected suites at `(n, r)` and collects their records in suite order.
pub fn run(selector: SuiteSelector, n: usize, r: usize, budget: u64) -> Result<Report> {
    if n == 0 || r == 0 {
        return Err(Error::InvalidArgument(format!(
            "need n, r >= 1, got n = {n}, r = {r}"
        )));
    }
    let suites = selector.suites();
    let mut oracle = None;
    if suites.iter().any(|s| s.needs_poset()) && !over_budget(&oracle_workload(n, r), budget) {
        oracle = Some(Oracle::new(n, r, budget)?);
    }
    let mut report = Report::default();
    for suite in suites {
        let records = match suite {
            Suite::OracleVsTau => oracle_vs_tau(oracle.as_mut(), n, r, budget)?,
            Suite::OracleVsClosedForm => oracle_vs_closed(oracle.as_mut(), n, r, budget)?,
            Suite::Agood => agood(oracle.as_mut(), n, r, budget)?,
            Suite::Blambdacolor => blambdacolor(n, r, budget)?,
            Suite::Betacolortrivial => betacolortrivial(n, r, budget)?,
            Suite::RskTau => rsk_tau(n, r, budget)?,
            Suite::Derangement => derangement(n, r, budget)?,
            Suite::R1Equivalence => r1_equivalence(n, budget)?,
        };
        report.extend(records);
    }
    Ok(report)
}

/// Runs one suite on its own.
pub fn run_suite(suite: Suite, n: usize, r: usize, budget: u64) -> Result<Vec<CheckRecord>> {
    Ok(run(SuiteSelector::Single(suite), n, r, budget)?.checks)
}

fn oracle_skip(suite: Suite, n: usize, r: usize, budget: u64) -> Vec<CheckRecord> {
    vec![CheckRecord::skipped(
        suite.name(),
        "poset oracle",
        params(n, r),
        format!(
            "oracle workload {} exceeds budget {budget}",
            oracle_workload(n, r)
        ),
    )]
}

fn oracle_vs_tau(
    oracle: Option<&mut Oracle>,
    n: usize,
    r: usize,
    budget: u64,
) -> Result<Vec<CheckRecord>> {
    let Some(oracle) = oracle else {
        return Ok(oracle_skip(Suite::OracleVsTau, n, r, budget));
    };
    let work = tau_table_workload(n, r);
    if over_budget(&work, budget) {
        return Ok(vec![CheckRecord::skipped(
            Suite::OracleVsTau.name(),
            "τ parity counts",
            params(n, r),
            format!("τ workload {work} exceeds budget {budget}"),
        )]);
    }
    let tau = BetaTable::compute(n, r, Method::Tau, budget)?;
    let mut out = Vec::new();
    for s in RankSet::all_subsets(n.saturating_sub(1)) {
        let with_n = s.with(n);
        let mut expected = oracle.multiplicities(&s, &tau.shapes)?;
        expected.extend(oracle.multiplicities(&with_n, &tau.shapes)?);
        let mut actual = tau.row(&s).expect("full table").multiplicities.clone();
        actual.extend(
            tau.row(&with_n)
                .expect("full table")
                .multiplicities
                .iter()
                .cloned(),
        );
        let nonnegative = expected.iter().all(|m| !m.is_negative());
        out.push(CheckRecord::compare(
            Suite::OracleVsTau.name(),
            "b_{r,λ}(S) = #{odd τ(w,Q)}, b_{r,λ}(S ∪ {n}) = #{even τ(w,Q)}",
            format!("n={n} r={r} S={s}"),
            expected,
            actual,
            nonnegative,
        ));
    }
    Ok(out)
}

fn oracle_vs_closed(
    oracle: Option<&mut Oracle>,
    n: usize,
    r: usize,
    budget: u64,
) -> Result<Vec<CheckRecord>> {
    let Some(oracle) = oracle else {
        return Ok(oracle_skip(Suite::OracleVsClosedForm, n, r, budget));
    };
    let name = Suite::OracleVsClosedForm.name();
    let shapes = enumerate_partitions(n);
    let mut out = Vec::new();
    for m in 1..=n {
        let single = RankSet::new(vec![m], n)?;
        out.push(CheckRecord::compare(
            name,
            "α_P({m}) = r^m Σ_λ f^{λ,n-m} χ^λ",
            format!("n={n} r={r} m={m}"),
            oracle.alpha(&single)?.values().to_vec(),
            alpha_rank_m_closed_form(n, r, m)?.values().to_vec(),
            true,
        ));
    }
    let mut engine = GoodActionEngine::new(&oracle.poset);
    let mut good = Vec::new();
    for s in RankSet::all_subsets(n) {
        good.push(engine.beta(&s)?);
    }
    for (s, good_beta) in RankSet::all_subsets(n).zip(good) {
        let beta = oracle.beta(&s)?;
        let p = format!("n={n} r={r} S={s}");
        out.push(CheckRecord::compare(
            name,
            "β_P(S) by good action = Σ_{T ⊆ S} (-1)^{|S-T|} α_P(T)",
            p.clone(),
            beta.values().to_vec(),
            good_beta.values().to_vec(),
            true,
        ));
        let d = decompose(&beta)?;
        let expected: Vec<BigInt> = shapes
            .iter()
            .map(|l| d.get(l).cloned().unwrap_or_default())
            .collect();
        let nonnegative = expected.iter().all(|m| !m.is_negative());
        out.push(CheckRecord::compare(
            name,
            "b_{r,λ}(S) closed form = ⟨β_P(S), χ^λ⟩",
            p.clone(),
            expected,
            beta_multiplicities_closed_form(n, r, &s)?,
            nonnegative,
        ));
        out.push(CheckRecord::compare(
            name,
            "dim β_P(S) = b_P(S)",
            p,
            vec![chain_count_alternating(&oracle.poset, &s)?],
            vec![beta.dimension().clone()],
            true,
        ));
    }
    Ok(out)
}

fn agood(oracle: Option<&mut Oracle>, n: usize, r: usize, budget: u64) -> Result<Vec<CheckRecord>> {
    let Some(oracle) = oracle else {
        return Ok(oracle_skip(Suite::Agood, n, r, budget));
    };
    let mut out = Vec::new();
    for s in RankSet::all_subsets(n) {
        out.push(CheckRecord::compare(
            Suite::Agood.name(),
            "α_P(S) = a_m(S ∖ {m}) α_P({m}), m = max S",
            format!("n={n} r={r} S={s}"),
            oracle.alpha(&s)?.values().to_vec(),
            alpha_character_good_action(&oracle.poset, &s)?
                .values()
                .to_vec(),
            true,
        ));
    }
    Ok(out)
}

/// The closed-form table always when it fits, and the `τ` table when it fits.
fn identity_tables(
    suite: Suite,
    n: usize,
    r: usize,
    budget: u64,
) -> Result<(Vec<BetaTable>, Vec<CheckRecord>)> {
    let mut tables = Vec::new();
    let mut skips = Vec::new();
    let closed_work = closed_table_workload(n);
    if over_budget(&closed_work, budget) {
        skips.push(CheckRecord::skipped(
            suite.name(),
            "closed-form table",
            format!("n={n} r={r} method=closed"),
            format!("table size {closed_work} exceeds budget {budget}"),
        ));
    } else {
        tables.push(BetaTable::compute(n, r, Method::Closed, budget)?);
    }
    let tau_work = tau_table_workload(n, r);
    if over_budget(&tau_work, budget) || over_budget(&closed_work, budget) {
        skips.push(CheckRecord::skipped(
            suite.name(),
            "τ table",
            format!("n={n} r={r} method=tau"),
            format!("τ workload {tau_work} exceeds budget {budget}"),
        ));
    } else {
        tables.push(BetaTable::compute(n, r, Method::Tau, budget)?);
    }
    Ok((tables, skips))
}

fn blambdacolor(n: usize, r: usize, budget: u64) -> Result<Vec<CheckRecord>> {
    let (tables, mut out) = identity_tables(Suite::Blambdacolor, n, r, budget)?;
    for table in &tables {
        for s in RankSet::all_subsets(n - 1) {
            for mut rec in beta_complement_sum_check(table, &s)? {
                rec.name = format!("{}:{}", Suite::Blambdacolor.name(), rec.name);
                out.push(rec);
            }
        }
    }
    Ok(out)
}

fn betacolortrivial(n: usize, r: usize, budget: u64) -> Result<Vec<CheckRecord>> {
    let (tables, mut out) = identity_tables(Suite::Betacolortrivial, n, r, budget)?;
    for table in &tables {
        let mut rec = total_beta_sum_check(table)?;
        rec.name = format!("{}:{}", Suite::Betacolortrivial.name(), rec.name);
        out.push(rec);
    }
    Ok(out)
}

fn rsk_tau(n: usize, r: usize, budget: u64) -> Result<Vec<CheckRecord>> {
    let name = Suite::RskTau.name();
    let work = rsk_workload(n, r);
    if over_budget(&work, budget) {
        return Ok(vec![CheckRecord::skipped(
            name,
            "colored RSK",
            params(n, r),
            format!("pair count {work} exceeds budget {budget}"),
        )]);
    }
    let perms: Vec<_> = enumerate_colored_permutations(n, r).collect();
    let images: Vec<_> = perms.iter().map(colored_rsk).collect();
    let same_shape = images.iter().all(|(p, q)| p.shape() == q.tableau().shape());
    let distinct: HashSet<_> = images.iter().collect();
    let rn = BigUint::from(r).pow(n as u32);
    let total = &rn * factorial(n);
    let pair_count: BigUint = enumerate_partitions(n)
        .iter()
        .map(|l| f_lambda(l) * &rn * f_lambda(l))
        .sum();
    let mut out = vec![CheckRecord::compare(
        name,
        "colored RSK is a bijection onto same-shape pairs, Σ_λ f^λ r^n f^λ = r^n n!",
        params(n, r),
        vec![big(total.clone()), big(total)],
        vec![big(distinct.len()), big(pair_count)],
        same_shape,
    )];
    for s in RankSet::all_subsets(n - 1) {
        let class = enumerate_descent_class(n, &s)?;
        let mut agree = 0usize;
        for w in &class {
            for (u, (_, q0)) in perms.iter().zip(&images) {
                if tau_colored_permutation(w, &s, u)? == tau_tableau(w, &s, q0)? {
                    agree += 1;
                }
            }
        }
        out.push(CheckRecord::compare(
            name,
            "τ(w, u) = τ(w, Q0(u))",
            format!("n={n} r={r} S={s}"),
            vec![big(class.len() * perms.len())],
            vec![big(agree)],
            true,
        ));
    }
    Ok(out)
}

fn derangement(n: usize, r: usize, budget: u64) -> Result<Vec<CheckRecord>> {
    let name = Suite::Derangement.name();
    let work = BigUint::from(r).pow(n as u32) * factorial(n);
    if over_budget(&work, budget) {
        return Ok(vec![CheckRecord::skipped(
            name,
            "colored permutations",
            params(n, r),
            format!("{work} colored permutations exceed budget {budget}"),
        )]);
    }
    let d = derangement_number(n, r);
    let full = RankSet::full(n);
    let closed_dim: BigInt = enumerate_partitions(n)
        .iter()
        .zip(beta_multiplicities_closed_form(n, r, &full)?)
        .map(|(l, m)| m * BigInt::from(f_lambda(l)))
        .sum();
    let even = count_colored_perms_by_parity(n, r, &RankSet::full(n - 1))?.even;
    Ok(vec![CheckRecord::compare(
        name,
        "D_{n,r} = direct count = E_{n,r} = b_P([n]) by closed form = #{even τ(w_[n-1], u)}",
        params(n, r),
        vec![d.clone(); 4],
        vec![
            big(derangement_count_direct(n, r)),
            big(desarmenien_count(n, r)),
            closed_dim,
            big(even),
        ],
        true,
    )])
}

fn r1_equivalence(n: usize, budget: u64) -> Result<Vec<CheckRecord>> {
    let name = Suite::R1Equivalence.name();
    let work = tau_table_workload(n, 1);
    if over_budget(&work, budget) {
        return Ok(vec![CheckRecord::skipped(
            name,
            "uncolored pairs",
            params(n, 1),
            format!("pair count {work} exceeds budget {budget}"),
        )]);
    }
    let tableaux: Vec<_> = enumerate_partitions(n)
        .iter()
        .flat_map(enumerate_syt)
        .collect();
    let mut out = Vec::new();
    for s in RankSet::all_subsets(n - 1) {
        let class = enumerate_descent_class(n, &s)?;
        let mut agree = 0usize;
        for w in &class {
            for q in &tableaux {
                let colored = ColoredTableau::uncolored(q.clone());
                if tau_tableau(w, &s, &colored)? == tau_tableau_descent_form(w, &s, q)? {
                    agree += 1;
                }
            }
        }
        out.push(CheckRecord::compare(
            name,
            "zero-colored first-row prefix form = no-descent-below form of τ at r = 1",
            format!("n={n} r=1 S={s}"),
            vec![big(class.len() * tableaux.len())],
            vec![big(agree)],
            true,
        ));
    }
    Ok(out)
}
