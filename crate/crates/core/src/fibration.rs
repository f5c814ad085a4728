//! Relative tilting bundles `R = ⊕_{a,i} π^*(T_a ⊗ M^{i·m}) ⊗ E_i` on a
//! fibration `π: Y → Z`. The search looks for the smallest twist exponent
//! `m` that kills every higher Ext.
//!
//! Two computable models are supported. Over a point or a projective space,
//! fibers are Grassmann bundles of split bundles `⊕ O(a_k)` (or fiber tables
//! supplied as data) and every Ext reduces, through the projection formula, to
//! line-bundle cohomology on the root. Over a point, towers of tautological
//! stages build partial flag varieties, and Ext groups come from the absolute
//! flag-variety engine.
//!
//! Summand `(a, i)` (base summand `a`, fiber object `i`) has index
//! `i * |base| + a`.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use num_bigint::BigUint;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bwb::{grass_pushforward, pn_line_cohomology, FlagSpace};
use crate::collections::{ext_between, ExtTable, TautologicalBundle, Violation, ViolationKind};
use crate::error::{Error, Result};
use crate::partitions::{enumerate_box_partitions, OrderTag, Partition};
use crate::schur::{hom_expand, split_bundle_expand, GLWeight, WeightExpansion};

/// One record of a fiber table: `R^s π_*(E_j ⊗ E_i^∨)` contains
/// `O(base_degree)` with the given multiplicity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberRecord {
    pub j: usize,
    pub i: usize,
    pub s: usize,
    pub base_degree: i64,
    pub multiplicity: u64,
}

/// Relative Hom data for a fiberwise strongly exceptional collection.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberTable {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source: Option<String>,
    pub fiber_dim: usize,
    pub objects: Vec<String>,
    pub records: Vec<FiberRecord>,
}

impl FiberTable {
    pub fn from_json(text: &str) -> Result<Self> {
        let t: FiberTable = serde_json::from_str(text)?;
        t.validate()?;
        Ok(t)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|source| Error::Io { path: path.display().to_string(), source })?;
        Self::from_json(&text)
    }

    /// Pretty-printed JSON with a trailing newline; the format shipped tables use.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("fiber tables always serialize");
        s.push('\n');
        s
    }

    /// Only degree-0 direct images, nothing from later to earlier objects,
    /// and `O` alone on the diagonal.
    pub fn validate(&self) -> Result<()> {
        let n = self.objects.len();
        if n == 0 {
            return Err(Error::InvalidFiberTable("no objects".into()));
        }
        let mut seen = std::collections::BTreeSet::new();
        let mut diagonal = vec![0usize; n];
        for r in &self.records {
            let at = format!("record (j={}, i={}, s={}, base_degree={})", r.j, r.i, r.s, r.base_degree);
            if r.j >= n || r.i >= n {
                return Err(Error::InvalidFiberTable(format!("{at}: index out of range")));
            }
            if r.multiplicity == 0 {
                return Err(Error::InvalidFiberTable(format!("{at}: zero multiplicity")));
            }
            if r.s != 0 {
                return Err(Error::InvalidFiberTable(format!("{at}: higher direct image")));
            }
            if r.j < r.i {
                return Err(Error::InvalidFiberTable(format!("{at}: backward direct image")));
            }
            if !seen.insert((r.j, r.i, r.s, r.base_degree)) {
                return Err(Error::InvalidFiberTable(format!("{at}: duplicate")));
            }
            if r.j == r.i {
                if r.base_degree != 0 || r.multiplicity != 1 {
                    return Err(Error::InvalidFiberTable(format!("{at}: diagonal must be O")));
                }
                diagonal[r.i] += 1;
            }
        }
        if let Some(i) = diagonal.iter().position(|&c| c != 1) {
            return Err(Error::InvalidFiberTable(format!("object {i} has no diagonal record")));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FiberCollectionModel {
    /// A single object `O`: the fibration is the identity.
    Trivial,
    /// `Grass(l, E)` for `E = ⊕ O(split_degrees[k])`, with objects `Σ^λ(R^∨)`.
    Grass {
        l: usize,
        split_degrees: Vec<i64>,
    },
    /// `Grass(l, R_1)` over a flag variety with first tautological bundle `R_1`.
    Tautological {
        l: usize,
    },
    Table(FiberTable),
}

impl FiberCollectionModel {
    pub fn kind(&self) -> &'static str {
        match self {
            FiberCollectionModel::Trivial => "trivial",
            FiberCollectionModel::Grass { .. } => "grass",
            FiberCollectionModel::Tautological { .. } => "tautological",
            FiberCollectionModel::Table(_) => "table",
        }
    }
}

/// Direct images `π_*(E_j ⊗ E_i^∨)` as base degree to multiplicity.
pub fn relative_pushforward(fiber: &FiberCollectionModel, j: usize, i: usize) -> Result<BTreeMap<i64, BigUint>> {
    let mut out = BTreeMap::new();
    match fiber {
        FiberCollectionModel::Trivial => {
            if i != 0 || j != 0 {
                return Err(Error::InvalidArgument("the trivial fiber has one object".into()));
            }
            out.insert(0, BigUint::from(1u32));
        }
        FiberCollectionModel::Grass { l, split_degrees } => {
            let parts = grass_objects(*l, split_degrees.len())?;
            let (a, b) = (parts.get(i), parts.get(j));
            let (Some(a), Some(b)) = (a, b) else {
                return Err(Error::InvalidArgument(format!("fiber index ({j}, {i}) out of range")));
            };
            let dual: Vec<i64> = split_degrees.iter().map(|d| -d).collect();
            for (g, m) in hom_expand(a, b, *l)?.iter() {
                if let Some(w) = grass_pushforward(g, *l, split_degrees.len())? {
                    let p = w.as_partition().expect("pushforward weights are partitions");
                    for (deg, c) in split_bundle_expand(&p, &dual)? {
                        *out.entry(deg).or_insert_with(BigUint::zero) += c * m;
                    }
                }
            }
        }
        FiberCollectionModel::Tautological { .. } => {
            return Err(Error::UnsupportedStage {
                stage: 0,
                reason: "tautological fibers push forward to Schur functors of R, not to line bundles".into(),
            })
        }
        FiberCollectionModel::Table(t) => {
            if i >= t.objects.len() || j >= t.objects.len() {
                return Err(Error::InvalidArgument(format!("fiber index ({j}, {i}) out of range")));
            }
            for r in t.records.iter().filter(|r| r.j == j && r.i == i) {
                *out.entry(r.base_degree).or_insert_with(BigUint::zero) += r.multiplicity;
            }
        }
    }
    Ok(out)
}

/// `Σ^γ(R_1^∨)` summands of `π_*(E_j ⊗ E_i^∨)` for a tautological fiber over
/// a base whose first tautological bundle has rank `base_rank`.
pub fn tautological_pushforward(l: usize, base_rank: usize, j: usize, i: usize) -> Result<WeightExpansion> {
    let parts = grass_objects(l, base_rank)?;
    let (Some(a), Some(b)) = (parts.get(i), parts.get(j)) else {
        return Err(Error::InvalidArgument(format!("fiber index ({j}, {i}) out of range")));
    };
    let mut out = WeightExpansion::default();
    for (g, m) in hom_expand(a, b, l)?.iter() {
        if let Some(w) = grass_pushforward(g, l, base_rank)? {
            out.add(w, m.clone());
        }
    }
    Ok(out)
}

fn grass_objects(l: usize, rank: usize) -> Result<Vec<Partition>> {
    if l == 0 || l >= rank {
        return Err(Error::InvalidArgument(format!("Grass({l}, {rank}) needs 0 < l < rank")));
    }
    Ok(enumerate_box_partitions(l, (rank - l) as u32, OrderTag::ContainmentOrder)?.members)
}

/// The base of a fibration, carrying its own tilting bundle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BaseModel {
    Point,
    /// `P^dim` with tilting bundle `⊕ O(t)` over `tilting`.
    Projective {
        dim: usize,
        tilting: Vec<i64>,
    },
    Plan(Box<FibrationPlan>),
}

impl BaseModel {
    /// `P^dim`, by default with the Beilinson range `0..=dim`; the range is checked to be tilting.
    pub fn projective(dim: usize, tilting: Option<Vec<i64>>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidArgument("use the point base for P^0".into()));
        }
        let tilting = tilting.unwrap_or_else(|| (0..=dim as i64).collect());
        if tilting.is_empty() {
            return Err(Error::InvalidArgument("empty tilting range".into()));
        }
        for &a in &tilting {
            for &b in &tilting {
                let h = pn_line_cohomology(b - a, dim);
                if h.degree().is_some_and(|s| s > 0) {
                    return Err(Error::InvalidArgument(format!("O({a}) and O({b}) have higher Ext on P^{dim}")));
                }
            }
        }
        Ok(BaseModel::Projective { dim, tilting })
    }

    pub fn from_plan(plan: FibrationPlan) -> Result<Self> {
        if !plan.verified {
            return Err(Error::NotVerified);
        }
        Ok(BaseModel::Plan(Box::new(plan)))
    }

    pub fn summand_count(&self) -> usize {
        match self {
            BaseModel::Point => 1,
            BaseModel::Projective { tilting, .. } => tilting.len(),
            BaseModel::Plan(p) => p.summand_count(),
        }
    }

    pub fn labels(&self) -> Vec<String> {
        match self {
            BaseModel::Point => vec!["O".into()],
            BaseModel::Projective { tilting, .. } => tilting.iter().map(|t| format!("O({t})")).collect(),
            BaseModel::Plan(p) => p.labels.clone(),
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            BaseModel::Point => 0,
            BaseModel::Projective { dim, .. } => *dim,
            BaseModel::Plan(p) => p.dim,
        }
    }

    fn root_is_point(&self) -> bool {
        match self {
            BaseModel::Point => true,
            BaseModel::Projective { .. } => false,
            BaseModel::Plan(p) => p.base.root_is_point(),
        }
    }

    fn flag(&self) -> Option<&FlagGeometry> {
        match self {
            BaseModel::Plan(p) => p.flag.as_ref(),
            _ => None,
        }
    }

    /// `Ext^•(T_a, T_b ⊗ L)` summed over `L = O(w)` from the root, with multiplicities.
    fn ext(&self, a: usize, b: usize, degrees: &BTreeMap<i64, BigUint>) -> Result<BTreeMap<usize, BigUint>> {
        let mut out: BTreeMap<usize, BigUint> = BTreeMap::new();
        match self {
            BaseModel::Point => {
                let total: BigUint = degrees.values().sum();
                if !total.is_zero() {
                    out.insert(0, total);
                }
            }
            BaseModel::Projective { dim, tilting } => {
                for (w, m) in degrees {
                    let h = pn_line_cohomology(tilting[b] - tilting[a] + w, *dim);
                    if let Some(s) = h.degree() {
                        *out.entry(s).or_insert_with(BigUint::zero) += h.dimension() * m;
                    }
                }
            }
            BaseModel::Plan(p) => {
                if p.base.root_is_point() {
                    let total: BigUint = degrees.values().sum();
                    if !total.is_zero() {
                        for s in 0..=p.ext_table.max_degree {
                            let d = p.ext_table.get(a, b, s);
                            if !d.is_zero() {
                                out.insert(s, d * &total);
                            }
                        }
                    }
                } else {
                    let nb = p.base.summand_count();
                    let (ab, i) = (a % nb, a / nb);
                    let (bb, j) = (b % nb, b / nb);
                    let push = relative_pushforward(&p.fiber, j, i)?;
                    let shift = (j as i64 - i as i64) * p.twist as i64;
                    let mut next: BTreeMap<i64, BigUint> = BTreeMap::new();
                    for (w, m) in degrees {
                        for (v, c) in &push {
                            *next.entry(w + v + shift).or_insert_with(BigUint::zero) += m * c;
                        }
                    }
                    return p.base.ext(ab, bb, &next);
                }
            }
        }
        Ok(out)
    }
}

/// A plan whose total space is a partial flag variety, with its summands as bundles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlagGeometry {
    pub space: FlagSpace,
    pub summands: Vec<TautologicalBundle>,
}

/// A candidate tilting bundle on a fibration, with its full Ext table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FibrationPlan {
    pub base: BaseModel,
    pub fiber: FiberCollectionModel,
    pub twist: u32,
    pub verified: bool,
    pub labels: Vec<String>,
    pub ext_table: ExtTable,
    pub witness: Option<Violation>,
    pub dim: usize,
    pub flag: Option<FlagGeometry>,
}

impl FibrationPlan {
    pub fn summand_count(&self) -> usize {
        self.labels.len()
    }

    /// Twists chosen at every stage, root first.
    pub fn stage_twists(&self) -> Vec<u32> {
        let mut v = match &self.base {
            BaseModel::Plan(p) => p.stage_twists(),
            _ => Vec::new(),
        };
        v.push(self.twist);
        v
    }

    /// Fiber kinds of every stage, root first.
    pub fn stage_kinds(&self) -> Vec<&'static str> {
        let mut v = match &self.base {
            BaseModel::Plan(p) => p.stage_kinds(),
            _ => Vec::new(),
        };
        v.push(self.fiber.kind());
        v
    }

    pub fn root(&self) -> &BaseModel {
        match &self.base {
            BaseModel::Plan(p) => p.root(),
            other => other,
        }
    }
}

fn fiber_setup(base: &BaseModel, fiber: &FiberCollectionModel) -> Result<(Vec<String>, usize)> {
    match fiber {
        FiberCollectionModel::Trivial => Ok((vec!["O".into()], 0)),
        FiberCollectionModel::Grass { l, split_degrees } => {
            let r = split_degrees.len();
            let objs = grass_objects(*l, r)?;
            if base.root_is_point() && split_degrees.iter().any(|&d| d != 0) {
                return Err(Error::UnsupportedStage {
                    stage: stage_index(base),
                    reason: "line bundles pulled back from a point are trivial; split degrees must be 0".into(),
                });
            }
            Ok((objs.iter().map(schur_label).collect(), l * (r - l)))
        }
        FiberCollectionModel::Tautological { l } => {
            let Some(g) = base.flag() else {
                return Err(Error::UnsupportedStage {
                    stage: stage_index(base),
                    reason: "a tautological stage needs a flag-variety base built over a point".into(),
                });
            };
            let first = g.space.steps()[0];
            let objs = grass_objects(*l, first)?;
            Ok((objs.iter().map(schur_label).collect(), l * (first - l)))
        }
        FiberCollectionModel::Table(t) => {
            t.validate()?;
            Ok((t.objects.clone(), t.fiber_dim))
        }
    }
}

fn schur_label(p: &Partition) -> String {
    if p.is_empty() {
        "O".into()
    } else {
        format!("S{p}R*")
    }
}

fn stage_index(base: &BaseModel) -> usize {
    match base {
        BaseModel::Plan(p) => p.stage_twists().len(),
        _ => 0,
    }
}

fn flag_geometry(base: &BaseModel, fiber: &FiberCollectionModel, m: u32) -> Result<Option<FlagGeometry>> {
    match (base, fiber) {
        (BaseModel::Point, FiberCollectionModel::Grass { l, split_degrees }) => {
            let space = FlagSpace::grassmannian(*l, split_degrees.len())?;
            let summands = grass_objects(*l, split_degrees.len())?
                .iter()
                .map(|p| TautologicalBundle::from_partitions(&space, std::slice::from_ref(p)))
                .collect::<Result<Vec<_>>>()?;
            Ok(Some(FlagGeometry { space, summands }))
        }
        (BaseModel::Plan(p), FiberCollectionModel::Tautological { l }) => {
            let g = p.flag.as_ref().expect("checked by fiber_setup");
            let mut steps = vec![*l];
            steps.extend_from_slice(g.space.steps());
            let space = FlagSpace::new(steps, g.space.n())?;
            let mut summands = Vec::new();
            for (i, alpha) in grass_objects(*l, g.space.steps()[0])?.iter().enumerate() {
                let twist = i as i64 * m as i64;
                for t in &g.summands {
                    let mut terms = t.twisted(&vec![twist; g.space.steps().len()]).terms;
                    for term in &mut terms {
                        term.stages.insert(0, GLWeight::from_partition(alpha, *l)?);
                    }
                    summands.push(TautologicalBundle { terms });
                }
            }
            Ok(Some(FlagGeometry { space, summands }))
        }
        _ => Ok(None),
    }
}

/// Ext table of the candidate `⊕ π^*(T_a ⊗ M^{i·m}) ⊗ E_i`.
pub fn candidate_ext_table(base: &BaseModel, fiber: &FiberCollectionModel, m: u32) -> Result<ExtTable> {
    Ok(evaluate(base, fiber, m)?.ext_table)
}

/// Builds the candidate at twist `m` and records whether it is tilting.
pub fn evaluate(base: &BaseModel, fiber: &FiberCollectionModel, m: u32) -> Result<FibrationPlan> {
    let (fiber_labels, fiber_dim) = fiber_setup(base, fiber)?;
    let base_labels = base.labels();
    let nb = base_labels.len();
    let labels: Vec<String> = fiber_labels
        .iter()
        .flat_map(|f| base_labels.iter().map(move |b| if b == "O" { f.clone() } else { format!("{b} ; {f}") }))
        .collect();
    let total = labels.len();
    let dim = base.dim() + fiber_dim;
    let flag = flag_geometry(base, fiber, m)?;
    let pairs: Vec<(usize, usize)> = (0..total).flat_map(|x| (0..total).map(move |y| (x, y))).collect();
    let entries = pairs
        .par_iter()
        .map(|&(x, y)| {
            let res = match &flag {
                Some(g) => ext_between(&g.space, &g.summands[x], &g.summands[y])?,
                None => {
                    let (a, i) = (x % nb, x / nb);
                    let (b, j) = (y % nb, y / nb);
                    let push = relative_pushforward(fiber, j, i)?;
                    let shift = (j as i64 - i as i64) * m as i64;
                    let degrees = push.into_iter().map(|(w, c)| (w + shift, c)).collect();
                    base.ext(a, b, &degrees)?
                }
            };
            Ok((x, y, res))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut dims = BTreeMap::new();
    for (x, y, res) in entries {
        for (s, d) in res {
            if !d.is_zero() {
                dims.insert((x, y, s), d);
            }
        }
    }
    let ext_table = ExtTable { size: total, max_degree: dim, dims };
    let witness =
        ext_table.higher().next().map(|(&(i, j, s), d)| Violation { kind: ViolationKind::HigherExt, i, j, degree: s, dim: d.clone() });
    Ok(FibrationPlan {
        base: base.clone(),
        fiber: fiber.clone(),
        twist: m,
        verified: witness.is_none(),
        labels,
        ext_table,
        witness,
        dim,
        flag,
    })
}

/// Smallest `m` in `0..=cap` whose candidate has no higher Ext; otherwise the
/// candidate at `cap`, unverified, with its first obstruction.
pub fn twist_search(base: &BaseModel, fiber: &FiberCollectionModel, cap: u32) -> Result<FibrationPlan> {
    let mut last = None;
    for m in 0..=cap {
        let plan = evaluate(base, fiber, m)?;
        if plan.verified {
            return Ok(plan);
        }
        last = Some(plan);
    }
    Ok(last.expect("loop runs at least once"))
}

/// Folds [`twist_search`] over the stages. Stops at the first stage that
/// cannot be made tilting below the cap and returns that unverified plan.
pub fn tower_compose(stages: &[FiberCollectionModel], root: BaseModel, cap: u32) -> Result<FibrationPlan> {
    fold_stages(stages, root, |base, fiber, _| twist_search(base, fiber, cap))
}

/// Evaluates every stage at a fixed twist instead of searching.
pub fn tower_at_twists(stages: &[FiberCollectionModel], twists: &[u32], root: BaseModel) -> Result<FibrationPlan> {
    if twists.len() != stages.len() {
        return Err(Error::InvalidArgument("one twist per stage".into()));
    }
    fold_stages(stages, root, |base, fiber, k| evaluate(base, fiber, twists[k]))
}

fn fold_stages(
    stages: &[FiberCollectionModel],
    root: BaseModel,
    mut step: impl FnMut(&BaseModel, &FiberCollectionModel, usize) -> Result<FibrationPlan>,
) -> Result<FibrationPlan> {
    if stages.is_empty() {
        return evaluate(&root, &FiberCollectionModel::Trivial, 0);
    }
    let mut base = root;
    for (k, fiber) in stages.iter().enumerate() {
        let plan = step(&base, fiber, k).map_err(|e| match e {
            Error::UnsupportedStage { reason, .. } => Error::UnsupportedStage { stage: k, reason },
            other => other,
        })?;
        if k + 1 == stages.len() || !plan.verified {
            return Ok(plan);
        }
        base = BaseModel::from_plan(plan)?;
    }
    unreachable!()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum RootRecord {
    Point,
    Projective {
        dim: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        tilting: Option<Vec<i64>>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum StageRecord {
    Trivial {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        twist: Option<u32>,
    },
    Grass {
        l: usize,
        split_degrees: Vec<i64>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        twist: Option<u32>,
    },
    Tautological {
        l: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        twist: Option<u32>,
    },
    Table {
        path: PathBuf,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        twist: Option<u32>,
    },
}

impl StageRecord {
    fn twist(&self) -> Option<u32> {
        match self {
            StageRecord::Trivial { twist }
            | StageRecord::Grass { twist, .. }
            | StageRecord::Tautological { twist, .. }
            | StageRecord::Table { twist, .. } => *twist,
        }
    }
}

/// A plan file: root, fiber stages from the bottom up, search cap.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlanFile {
    pub root: RootRecord,
    pub stages: Vec<StageRecord>,
    #[serde(default = "default_cap")]
    pub cap: u32,
}

fn default_cap() -> u32 {
    8
}

/// A plan file with its fiber tables loaded.
#[derive(Clone, Debug)]
pub struct LoadedPlan {
    pub root: BaseModel,
    pub stages: Vec<FiberCollectionModel>,
    pub twists: Vec<u32>,
    pub cap: u32,
}

impl PlanFile {
    /// Resolves table paths relative to `dir`.
    pub fn resolve(&self, dir: &Path) -> Result<LoadedPlan> {
        let root = match &self.root {
            RootRecord::Point => BaseModel::Point,
            RootRecord::Projective { dim, tilting } => BaseModel::projective(*dim, tilting.clone())?,
        };
        let mut stages = Vec::with_capacity(self.stages.len());
        for s in &self.stages {
            stages.push(match s {
                StageRecord::Trivial { .. } => FiberCollectionModel::Trivial,
                StageRecord::Grass { l, split_degrees, .. } => FiberCollectionModel::Grass { l: *l, split_degrees: split_degrees.clone() },
                StageRecord::Tautological { l, .. } => FiberCollectionModel::Tautological { l: *l },
                StageRecord::Table { path, .. } => FiberCollectionModel::Table(FiberTable::load(&dir.join(path))?),
            });
        }
        let twists = self.stages.iter().map(|s| s.twist().unwrap_or(0)).collect();
        Ok(LoadedPlan { root, stages, twists, cap: self.cap })
    }

    pub fn load(path: &Path) -> Result<LoadedPlan> {
        let text = std::fs::read_to_string(path).map_err(|source| Error::Io { path: path.display().to_string(), source })?;
        let file: PlanFile = serde_json::from_str(&text)?;
        file.resolve(path.parent().unwrap_or(Path::new(".")))
    }
}
