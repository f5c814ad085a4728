//! Kapranov-type collections on Grassmannians and partial flag varieties,
//! their Ext tables, and the tilting / strong-exceptionality verdict.
//!
//! Objects are direct sums of `⊗_k Σ^{α_k}(R_k^∨)` over the tautological
//! subbundles `R_1 ⊂ ... ⊂ R_m` of a flag variety. Cohomology is computed by
//! pushing forward one Grassmann-bundle stage at a time: on `Grass(l_k, R_{k+1})`
//! the relative Borel–Weil–Bott rule turns `Σ^δ(R_k^∨)` into a single
//! `Σ^{δ'}(R_{k+1}^∨)` in a single degree, which is then tensored with the
//! next stage's factor.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::bwb::{bott_sort, FlagSpace, HomogeneousBundle};
use crate::error::{Error, Result};
use crate::partitions::{enumerate_box_partitions, OrderTag, Partition};
use crate::schur::{schur_dimension, tensor_weights, GLWeight, WeightExpansion};

/// One summand `⊗_k Σ^{stages[k]}(R_k^∨)` with a multiplicity.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StageTerm {
    pub stages: Vec<GLWeight>,
    pub mult: BigUint,
}

/// A direct sum of stage terms on a fixed flag variety.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TautologicalBundle {
    pub terms: Vec<StageTerm>,
}

impl TautologicalBundle {
    pub fn irreducible(stages: Vec<GLWeight>) -> Self {
        Self { terms: vec![StageTerm { stages, mult: BigUint::one() }] }
    }

    /// `⊗_k Σ^{α_k}(R_k^∨)` for partitions, padded to the stage ranks.
    pub fn from_partitions(space: &FlagSpace, alphas: &[Partition]) -> Result<Self> {
        if alphas.len() != space.steps().len() {
            return Err(Error::MalformedBundle(format!("{} stage weights on {space}", alphas.len())));
        }
        let stages = alphas.iter().zip(space.steps()).map(|(a, &l)| GLWeight::from_partition(a, l)).collect::<Result<Vec<_>>>()?;
        Ok(Self::irreducible(stages))
    }

    pub fn check(&self, space: &FlagSpace) -> Result<()> {
        for t in &self.terms {
            let lens: Vec<usize> = t.stages.iter().map(GLWeight::len).collect();
            if lens != space.steps() {
                return Err(Error::MalformedBundle(format!("stage lengths {lens:?} on {space}")));
            }
        }
        if self.terms.is_empty() {
            return Err(Error::MalformedBundle("empty direct sum".into()));
        }
        Ok(())
    }

    /// Tensors every summand with `⊗_k det(R_k^∨)^{twists[k]}`.
    pub fn twisted(&self, twists: &[i64]) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|t| StageTerm { stages: t.stages.iter().zip(twists).map(|(w, &k)| w.shifted(k)).collect(), mult: t.mult.clone() })
            .collect();
        Self { terms }
    }

    /// Rank as a vector bundle.
    pub fn rank(&self, space: &FlagSpace) -> Result<BigUint> {
        let mut total = BigUint::zero();
        for t in &self.terms {
            let mut r = t.mult.clone();
            for (w, &l) in t.stages.iter().zip(space.steps()) {
                r *= schur_dimension(w, l)?;
            }
            total += r;
        }
        Ok(total)
    }

    /// The single-block homogeneous bundle, when this is one `Σ^λ(R_1^∨)` on a Grassmannian.
    pub fn as_homogeneous(&self, space: &FlagSpace) -> Option<HomogeneousBundle> {
        match self.terms.as_slice() {
            [t] if t.stages.len() == 1 && t.mult.is_one() => HomogeneousBundle::of_sub_dual(space, &t.stages[0]).ok(),
            _ => None,
        }
    }
}

/// Whether the collection is meant to be strongly exceptional, or is a list
/// of tilting summands whose objects need not be exceptional themselves.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CollectionKind {
    Exceptional,
    TiltingSummands,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CollectionSpec {
    pub space: FlagSpace,
    pub labels: Vec<String>,
    pub objects: Vec<TautologicalBundle>,
    pub multiplicities: Vec<BigUint>,
    pub order_tag: OrderTag,
    pub kind: CollectionKind,
}

impl CollectionSpec {
    pub fn new(
        space: FlagSpace,
        labels: Vec<String>,
        objects: Vec<TautologicalBundle>,
        order_tag: OrderTag,
        kind: CollectionKind,
    ) -> Result<Self> {
        if labels.len() != objects.len() {
            return Err(Error::InvalidArgument("label count differs from object count".into()));
        }
        for (i, o) in objects.iter().enumerate() {
            o.check(&space)?;
            if objects[..i].contains(o) {
                return Err(Error::InvalidArgument(format!("object {} repeated", labels[i])));
            }
        }
        let multiplicities = vec![BigUint::one(); objects.len()];
        Ok(Self { space, labels, objects, multiplicities, order_tag, kind })
    }

    pub fn len(&self) -> usize {
        self.objects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.objects.is_empty()
    }

    pub fn with_multiplicities(mut self, mults: Vec<BigUint>) -> Result<Self> {
        if mults.len() != self.objects.len() || mults.iter().any(Zero::is_zero) {
            return Err(Error::InvalidArgument("multiplicities must be positive, one per object".into()));
        }
        self.multiplicities = mults;
        Ok(self)
    }

    /// Same objects tensored with a common line bundle.
    pub fn twisted(&self, twists: &[i64]) -> Self {
        let mut out = self.clone();
        out.objects = self.objects.iter().map(|o| o.twisted(twists)).collect();
        out
    }

    /// Same objects listed in the opposite order.
    pub fn reversed(&self) -> Self {
        let mut out = self.clone();
        out.labels.reverse();
        out.objects.reverse();
        out.multiplicities.reverse();
        out
    }
}

fn stage_label(parts: &[Partition]) -> String {
    parts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join("x")
}

/// `Σ^λ(R^∨)` for `λ` in the `d x (n-d)` box, in containment order.
pub fn kapranov_collection(d: usize, n: usize) -> Result<CollectionSpec> {
    let space = FlagSpace::grassmannian(d, n)?;
    let set = enumerate_box_partitions(d, (n - d) as u32, OrderTag::ContainmentOrder)?;
    let mut labels = Vec::new();
    let mut objects = Vec::new();
    for lam in &set.members {
        labels.push(lam.to_string());
        objects.push(TautologicalBundle::from_partitions(&space, std::slice::from_ref(lam))?);
    }
    CollectionSpec::new(space, labels, objects, OrderTag::ContainmentOrder, CollectionKind::Exceptional)
}

/// `Σ^λ(R)` for `λ` in the `d x (n-d)` box, listed in containment order.
pub fn kapranov_sub_collection(d: usize, n: usize) -> Result<CollectionSpec> {
    let c = kapranov_collection(d, n)?;
    let objects =
        c.objects.iter().map(|o| TautologicalBundle::irreducible(o.terms[0].stages.iter().map(GLWeight::dual).collect())).collect();
    CollectionSpec::new(c.space, c.labels, objects, OrderTag::ContainmentOrder, CollectionKind::Exceptional)
}

/// `O, O(1), ..., O(n)` on `P^n`.
pub fn beilinson_collection(n: usize) -> Result<CollectionSpec> {
    kapranov_collection(1, n + 1)
}

/// Products `⊗_k Σ^{α_k}(R_k^∨)` with `α_k` in the `l_k x (l_{k+1} - l_k)` box.
///
/// Ordered lexicographically by the stage indices, the first stage varying slowest.
pub fn flag_collection(space: &FlagSpace) -> Result<CollectionSpec> {
    let steps = space.steps();
    let mut boxes = Vec::with_capacity(steps.len());
    for (k, &l) in steps.iter().enumerate() {
        let next = steps.get(k + 1).copied().unwrap_or(space.n());
        boxes.push(enumerate_box_partitions(l, (next - l) as u32, OrderTag::ContainmentOrder)?.members);
    }
    let mut labels = Vec::new();
    let mut objects = Vec::new();
    for combo in cartesian(&boxes) {
        labels.push(stage_label(&combo));
        objects.push(TautologicalBundle::from_partitions(space, &combo)?);
    }
    CollectionSpec::new(space.clone(), labels, objects, OrderTag::ContainmentOrder, CollectionKind::Exceptional)
}

pub(crate) fn cartesian<T: Clone>(lists: &[Vec<T>]) -> Vec<Vec<T>> {
    let mut out: Vec<Vec<T>> = vec![Vec::new()];
    for list in lists {
        let mut next = Vec::with_capacity(out.len() * list.len());
        for prefix in &out {
            for item in list {
                let mut v = prefix.clone();
                v.push(item.clone());
                next.push(v);
            }
        }
        out = next;
    }
    out
}

/// `∧^{λ'_1}(R^∨) ⊗ ... ⊗ ∧^{λ'_k}(R^∨)` for `λ` in the `d x (n-d)` box, in size order.
pub fn wedge_collection(d: usize, n: usize) -> Result<CollectionSpec> {
    let space = FlagSpace::grassmannian(d, n)?;
    let set = enumerate_box_partitions(d, (n - d) as u32, OrderTag::SizeOrder)?;
    let mut labels = Vec::new();
    let mut objects = Vec::new();
    for lam in &set.members {
        let mut acc = WeightExpansion::single(GLWeight::zero(d));
        for &c in lam.conjugate().parts() {
            let column = GLWeight::from_partition(&Partition::new(vec![1; c as usize])?, d)?;
            let mut next = WeightExpansion::default();
            for (w, m) in acc.iter() {
                for (v, k) in tensor_weights(w, &column)?.iter() {
                    next.add(v.clone(), m * k);
                }
            }
            acc = next;
        }
        let terms = acc.iter().map(|(w, m)| StageTerm { stages: vec![w.clone()], mult: m.clone() }).collect();
        labels.push(lam.to_string());
        objects.push(TautologicalBundle { terms });
    }
    CollectionSpec::new(space, labels, objects, OrderTag::SizeOrder, CollectionKind::TiltingSummands)
}

/// `dim H^s` of `⊗_k E_k` where `E_k` is a direct sum of `Σ^γ(R_k^∨)`.
pub fn stage_cohomology(space: &FlagSpace, factors: &[WeightExpansion]) -> Result<BTreeMap<usize, BigUint>> {
    let steps = space.steps();
    if factors.len() != steps.len() {
        return Err(Error::MalformedBundle(format!("{} stage factors on {space}", factors.len())));
    }
    let mut state: BTreeMap<(usize, GLWeight), BigUint> = BTreeMap::new();
    for (k, factor) in factors.iter().enumerate() {
        let mut tensored: BTreeMap<(usize, GLWeight), BigUint> = BTreeMap::new();
        if k == 0 {
            for (w, m) in factor.iter() {
                *tensored.entry((0, w.clone())).or_default() += m;
            }
        } else {
            for ((deg, delta), m) in &state {
                for (g, c) in factor.iter() {
                    for (v, e) in tensor_weights(delta, g)?.iter() {
                        *tensored.entry((*deg, v.clone())).or_default() += m * c * e;
                    }
                }
            }
        }
        let next_rank = steps.get(k + 1).copied().unwrap_or(space.n());
        state = BTreeMap::new();
        for ((deg, delta), m) in tensored {
            let mut padded = delta.entries().to_vec();
            padded.resize(next_rank, 0);
            if let Some((s, dominant)) = bott_sort(&padded) {
                *state.entry((deg + s, GLWeight::new(dominant)?)).or_default() += m;
            }
        }
    }
    let mut out = BTreeMap::new();
    for ((deg, w), m) in state {
        let dim = schur_dimension(&w, space.n())? * m;
        *out.entry(deg).or_insert_with(BigUint::zero) += dim;
    }
    out.retain(|_, v| !v.is_zero());
    Ok(out)
}

/// `dim Ext^s(E, F)` for two tautological bundles.
pub fn ext_between(space: &FlagSpace, e: &TautologicalBundle, f: &TautologicalBundle) -> Result<BTreeMap<usize, BigUint>> {
    let mut out: BTreeMap<usize, BigUint> = BTreeMap::new();
    for t in &e.terms {
        for u in &f.terms {
            let factors = t.stages.iter().zip(&u.stages).map(|(a, b)| tensor_weights(&a.dual(), b)).collect::<Result<Vec<_>>>()?;
            let scale = &t.mult * &u.mult;
            for (s, d) in stage_cohomology(space, &factors)? {
                *out.entry(s).or_default() += d * &scale;
            }
        }
    }
    Ok(out)
}

/// `dims[(i, j, s)] = dim Ext^s(E_i, E_j)`; absent keys are zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtTable {
    pub size: usize,
    pub max_degree: usize,
    pub dims: BTreeMap<(usize, usize, usize), BigUint>,
}

impl ExtTable {
    pub fn get(&self, i: usize, j: usize, s: usize) -> BigUint {
        self.dims.get(&(i, j, s)).cloned().unwrap_or_default()
    }

    pub fn hom_matrix(&self) -> Vec<Vec<BigUint>> {
        (0..self.size).map(|i| (0..self.size).map(|j| self.get(i, j, 0)).collect()).collect()
    }

    /// Entries in positive degree, in index order.
    pub fn higher(&self) -> impl Iterator<Item = (&(usize, usize, usize), &BigUint)> {
        self.dims.iter().filter(|((_, _, s), _)| *s > 0)
    }
}

pub fn ext_table(c: &CollectionSpec) -> Result<ExtTable> {
    let n = c.len();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect();
    let rows = pairs
        .par_iter()
        .map(|&(i, j)| ext_between(&c.space, &c.objects[i], &c.objects[j]).map(|m| (i, j, m)))
        .collect::<Result<Vec<_>>>()?;
    let mut dims = BTreeMap::new();
    for (i, j, m) in rows {
        for (s, d) in m {
            dims.insert((i, j, s), d);
        }
    }
    Ok(ExtTable { size: n, max_degree: c.space.dim(), dims })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ViolationKind {
    /// `Ext^s(E_i, E_j) != 0` for some `s > 0`.
    HigherExt,
    /// `Ext^s(E_i, E_j) != 0` with `i` after `j`.
    BackwardHom,
    /// `End(E_i)` is not the ground field.
    NotSimpleEndo,
}

impl ViolationKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ViolationKind::HigherExt => "higher_ext",
            ViolationKind::BackwardHom => "backward_hom",
            ViolationKind::NotSimpleEndo => "not_simple_endo",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub kind: ViolationKind,
    pub i: usize,
    pub j: usize,
    pub degree: usize,
    pub dim: BigUint,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: Ext^{}(E_{}, E_{}) has dimension {}", self.kind.as_str(), self.degree, self.i, self.j, self.dim)
    }
}

/// Direction in which the Hom matrix is triangular, relative to the listed order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HomOrientation {
    Diagonal,
    Upper,
    Lower,
    Mixed,
}

impl HomOrientation {
    pub fn as_str(self) -> &'static str {
        match self {
            HomOrientation::Diagonal => "diagonal",
            HomOrientation::Upper => "upper",
            HomOrientation::Lower => "lower",
            HomOrientation::Mixed => "mixed",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub kind: CollectionKind,
    /// No higher Ext between any two objects (the Ext-vanishing half of tilting).
    pub is_tilting: bool,
    pub is_exceptional_each: bool,
    pub is_strong_exceptional: bool,
    pub triangularity_witness: Option<(usize, usize)>,
    pub first_violation: Option<Violation>,
    pub hom_orientation: HomOrientation,
    pub k0_rank: usize,
    pub end_algebra_dim: BigUint,
    pub table: ExtTable,
}

impl VerificationReport {
    /// The verdict for the collection's declared kind.
    pub fn passed(&self) -> bool {
        match self.kind {
            CollectionKind::Exceptional => self.is_strong_exceptional,
            CollectionKind::TiltingSummands => self.is_tilting,
        }
    }
}

pub fn verify_tilting(c: &CollectionSpec) -> Result<VerificationReport> {
    let table = ext_table(c)?;
    Ok(verify_table(c, table))
}

pub fn verify_table(c: &CollectionSpec, table: ExtTable) -> VerificationReport {
    let n = c.len();
    let mut higher: Option<Violation> = None;
    let mut backward: Option<Violation> = None;
    let mut endo: Option<Violation> = None;
    for (&(i, j, s), d) in &table.dims {
        if d.is_zero() {
            continue;
        }
        let v = |kind| Violation { kind, i, j, degree: s, dim: d.clone() };
        if s > 0 && higher.is_none() {
            higher = Some(v(ViolationKind::HigherExt));
        }
        if i > j && backward.is_none() {
            backward = Some(v(ViolationKind::BackwardHom));
        }
        if i == j && s == 0 && !d.is_one() && endo.is_none() {
            endo = Some(v(ViolationKind::NotSimpleEndo));
        }
    }
    let is_tilting = higher.is_none();
    let is_exceptional_each =
        (0..n).all(|i| (0..=table.max_degree).all(|s| table.get(i, i, s) == if s == 0 { BigUint::one() } else { BigUint::zero() }));
    let is_strong_exceptional = is_tilting && backward.is_none() && is_exceptional_each;

    let mut upper = false;
    let mut lower = false;
    let mut witness = None;
    for i in 0..n {
        for j in 0..n {
            if i != j && !table.get(i, j, 0).is_zero() {
                if i < j {
                    upper = true;
                } else {
                    lower = true;
                    witness.get_or_insert((i, j));
                }
            }
        }
    }
    let hom_orientation = match (upper, lower) {
        (false, false) => HomOrientation::Diagonal,
        (true, false) => HomOrientation::Upper,
        (false, true) => HomOrientation::Lower,
        (true, true) => HomOrientation::Mixed,
    };
    let mut end_algebra_dim = BigUint::zero();
    for i in 0..n {
        for j in 0..n {
            end_algebra_dim += table.get(i, j, 0) * &c.multiplicities[i] * &c.multiplicities[j];
        }
    }
    let first_violation = match c.kind {
        CollectionKind::Exceptional => higher.or(backward).or(endo),
        CollectionKind::TiltingSummands => higher,
    };
    VerificationReport {
        kind: c.kind,
        is_tilting,
        is_exceptional_each,
        is_strong_exceptional,
        triangularity_witness: witness,
        first_violation,
        hom_orientation,
        k0_rank: n,
        end_algebra_dim,
        table,
    }
}

/// The Hom-dimension matrix of a collection that passed verification.
pub fn end_quiver_dims(report: &VerificationReport) -> Result<Vec<Vec<BigUint>>> {
    if !report.passed() {
        return Err(Error::NotVerified);
    }
    Ok(report.table.hom_matrix())
}
