//! Rank and multiplicity bookkeeping for tilting bundles on (generalized)
//! Brauer–Severi varieties and towers of them.
//!
//! Nothing here builds descent data. Every summand is tracked by the split
//! bundle it becomes over a splitting field, the multiplicity with which that
//! split bundle occurs, and the Hom dimensions of the split collection, which
//! do not change under base extension.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::collections::{cartesian, verify_tilting, wedge_collection};
use crate::error::{Error, Result};
use crate::partitions::{binomial, enumerate_box_partitions, OrderTag};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IndexModel {
    /// `ind(A^{⊗i}) = p / gcd(p, i)`, as for cyclic classes.
    PeriodEqualsIndex,
    /// Residue mod the period to index.
    Explicit(BTreeMap<u64, u64>),
}

/// Degree, period and index data of a central simple algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CSAClass {
    degree: u64,
    period: u64,
    index_model: IndexModel,
}

impl CSAClass {
    pub fn new(degree: u64, period: u64, index_model: IndexModel) -> Result<Self> {
        if degree == 0 || period == 0 || !degree.is_multiple_of(period) {
            return Err(Error::InvalidAlgebra(format!("period {period} must divide degree {degree}")));
        }
        if let IndexModel::Explicit(table) = &index_model {
            if table.get(&0).is_some_and(|&v| v != 1) {
                return Err(Error::InvalidAlgebra("ind(A^0) must be 1".into()));
            }
            for (&r, &v) in table {
                if r >= period || v == 0 || !degree.is_multiple_of(v) {
                    return Err(Error::InvalidAlgebra(format!("entry {r} -> {v} (degree {degree}, period {period})")));
                }
            }
        }
        Ok(Self { degree, period, index_model })
    }

    pub fn cyclic(degree: u64, period: u64) -> Result<Self> {
        Self::new(degree, period, IndexModel::PeriodEqualsIndex)
    }

    pub fn split(degree: u64) -> Result<Self> {
        Self::cyclic(degree, 1)
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }

    pub fn period(&self) -> u64 {
        self.period
    }

    pub fn index_model(&self) -> &IndexModel {
        &self.index_model
    }
}

pub fn index_of_power(a: &CSAClass, i: i64) -> Result<u64> {
    let r = i.rem_euclid(a.period as i64) as u64;
    match &a.index_model {
        IndexModel::PeriodEqualsIndex => Ok(a.period / a.period.gcd(&r)),
        IndexModel::Explicit(table) => {
            if r == 0 {
                return Ok(1);
            }
            table.get(&r).copied().ok_or(Error::MissingIndex(r))
        }
    }
}

/// Summand inventory of a descended tilting bundle.
///
/// `ranks[k]` is the rank of the `k`-th descended summand, which already
/// includes its multiplicity over the splitting field, so
/// `total_rank = Σ ranks`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DescentSummary {
    pub labels: Vec<String>,
    pub multiplicities: Vec<BigUint>,
    pub ranks: Vec<BigUint>,
    pub total_rank: BigUint,
    pub end_dim: BigUint,
    /// Number of split-field collection objects counted with multiplicity.
    pub split_summand_count: BigUint,
    pub notes: Vec<String>,
}

impl DescentSummary {
    pub fn summand_count(&self) -> usize {
        self.labels.len()
    }

    fn finish(labels: Vec<String>, multiplicities: Vec<BigUint>, ranks: Vec<BigUint>, end_dim: BigUint, notes: Vec<String>) -> Self {
        let total_rank = ranks.iter().sum();
        let split_summand_count = multiplicities.iter().sum();
        Self { labels, multiplicities, ranks, total_rank, end_dim, split_summand_count, notes }
    }
}

/// Summands `W_0, ..., W_{len-1}` on the Brauer–Severi variety of `a`.
///
/// Over a splitting field `W_i` becomes `O(i)^{⊕ ind(A^{⊗i})}` on `P^{n-1}`.
/// `range_len` defaults to the degree `n`, the length of the Beilinson range.
pub fn bs_tilting_summary(a: &CSAClass, range_len: Option<usize>) -> Result<DescentSummary> {
    let n = a.degree as usize;
    let len = range_len.unwrap_or(n);
    if len == 0 {
        return Err(Error::InvalidArgument("empty twist range".into()));
    }
    let mut labels = Vec::with_capacity(len);
    let mut mults = Vec::with_capacity(len);
    for i in 0..len {
        labels.push(format!("W_{i}"));
        mults.push(BigUint::from(index_of_power(a, i as i64)?));
    }
    let dim = (n - 1) as u64;
    let mut end_dim = BigUint::zero();
    for i in 0..len {
        for j in i..len {
            let homs = binomial(dim + (j - i) as u64, dim);
            end_dim += &mults[i] * &mults[j] * BigUint::from(homs);
        }
    }
    let mut notes = vec![format!(
        "twist range has {len} terms on a variety of dimension {}; the range length is a parameter (default dimension + 1)",
        n - 1
    )];
    if len != n {
        notes.push(format!("range length {len} differs from the Beilinson length {n}; the result need not be tilting"));
    }
    let ranks = mults.clone();
    Ok(DescentSummary::finish(labels, mults, ranks, end_dim, notes))
}

/// `λ ↦ Π_i n·λ'_i` over the non-zero parts of the conjugate.
pub fn descent_multiplicity(n: u64, lambda: &crate::partitions::Partition) -> BigUint {
    lambda.conjugate().parts().iter().map(|&c| BigUint::from(n * c as u64)).product()
}

/// Summands `N_{λ'}` on the generalized Brauer–Severi variety `BS(d, A)`.
///
/// Over a splitting field `N_{λ'}` becomes `(∧^{λ'_1} ⊗ ... ⊗ ∧^{λ'_k})(R^∨)`
/// with multiplicity `Π n·λ'_i`.
pub fn generalized_bs_summary(a: &CSAClass, d: usize) -> Result<DescentSummary> {
    let n = a.degree as usize;
    if d == 0 || d >= n {
        return Err(Error::InvalidArgument(format!("d = {d} must lie strictly between 0 and the degree {n}")));
    }
    let set = enumerate_box_partitions(d, (n - d) as u32, OrderTag::SizeOrder)?;
    let collection = wedge_collection(d, n)?;
    let mut labels = Vec::with_capacity(set.len());
    let mut mults = Vec::with_capacity(set.len());
    let mut ranks = Vec::with_capacity(set.len());
    for lam in &set.members {
        let m = descent_multiplicity(a.degree, lam);
        let split_rank: u128 = lam.conjugate().parts().iter().map(|&c| binomial(d as u64, c as u64)).product();
        labels.push(lam.to_string());
        ranks.push(&m * BigUint::from(split_rank));
        mults.push(m);
    }
    let report = verify_tilting(&collection.with_multiplicities(mults.clone())?)?;
    let mut notes = vec!["multiplicities are sufficient for descent; minimality is not claimed".to_string()];
    if !report.passed() {
        notes.push(format!("split wedge collection failed verification: {:?}", report.first_violation));
    }
    Ok(DescentSummary::finish(labels, mults, ranks, report.end_algebra_dim, notes))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind", content = "params")]
pub enum StageKind {
    /// A Brauer–Severi stage, optionally with a non-default twist range.
    Bs {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        range: Option<usize>,
    },
    /// A generalized Brauer–Severi stage of `d`-dimensional subspaces.
    Gbs { d: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraRecord {
    pub degree: u64,
    pub period: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub index_table: Option<BTreeMap<u64, u64>>,
}

impl AlgebraRecord {
    pub fn to_class(&self) -> Result<CSAClass> {
        let model = match &self.index_table {
            None => IndexModel::PeriodEqualsIndex,
            Some(t) => IndexModel::Explicit(t.clone()),
        };
        CSAClass::new(self.degree, self.period, model)
    }
}

/// One record of a tower file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TowerStage {
    pub algebra: AlgebraRecord,
    #[serde(flatten)]
    pub params: StageKind,
}

pub fn parse_tower(json: &str) -> Result<Vec<TowerStage>> {
    Ok(serde_json::from_str(json)?)
}

pub fn stage_summary(stage: &TowerStage) -> Result<DescentSummary> {
    let a = stage.algebra.to_class()?;
    match &stage.params {
        StageKind::Bs { range } => bs_tilting_summary(&a, *range),
        StageKind::Gbs { d } => generalized_bs_summary(&a, *d),
    }
}

/// Composes stage summaries over a tower of (generalized) Brauer–Severi fibrations.
///
/// Summands are tuples of stage summands; multiplicities, ranks and
/// endomorphism dimensions multiply, as for an external tensor product.
pub fn twisted_tower_summary(stages: &[TowerStage]) -> Result<DescentSummary> {
    if stages.is_empty() {
        return Err(Error::InvalidArgument("a tower needs at least one stage".into()));
    }
    let summaries = stages.iter().map(stage_summary).collect::<Result<Vec<_>>>()?;
    if summaries.len() == 1 {
        return Ok(summaries.into_iter().next().unwrap());
    }
    let indices: Vec<Vec<usize>> = summaries.iter().map(|s| (0..s.labels.len()).collect()).collect();
    let mut labels = Vec::new();
    let mut mults = Vec::new();
    let mut ranks = Vec::new();
    for combo in cartesian(&indices) {
        let parts: Vec<&str> = combo.iter().zip(&summaries).map(|(&k, s)| s.labels[k].as_str()).collect();
        labels.push(parts.join(" ⊗ "));
        mults.push(combo.iter().zip(&summaries).map(|(&k, s)| s.multiplicities[k].clone()).product());
        ranks.push(combo.iter().zip(&summaries).map(|(&k, s)| s.ranks[k].clone()).product());
    }
    let end_dim: BigUint = summaries.iter().map(|s| s.end_dim.clone()).product();
    let mut notes = vec!["end_dim is the product of the stage endomorphism dimensions".to_string()];
    for (k, s) in summaries.iter().enumerate() {
        notes.extend(s.notes.iter().map(|n| format!("stage {k}: {n}")));
    }
    Ok(DescentSummary::finish(labels, mults, ranks, end_dim, notes))
}
