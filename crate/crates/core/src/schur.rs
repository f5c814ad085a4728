//! Schur-functor arithmetic over characteristic zero.
//!
//! Weights of arbitrary sign are handled through the determinant shift
//! `Σ^w(F) = Σ^{w+m}(F) ⊗ det(F)^{-m}` with `m = max(0, -min w)`. Products are
//! computed by explicit Littlewood–Richardson tableau enumeration.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::Partition;

/// A non-increasing integer weight of a fixed length (the rank it applies to).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct GLWeight {
    entries: Vec<i64>,
}

impl GLWeight {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if entries.is_empty() || entries.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidWeight(entries));
        }
        Ok(Self { entries })
    }

    pub fn zero(len: usize) -> Self {
        assert!(len > 0);
        Self { entries: vec![0; len] }
    }

    /// Constant weight `(k, ..., k)`: the `k`-th power of the determinant.
    pub fn constant(len: usize, k: i64) -> Self {
        assert!(len > 0);
        Self { entries: vec![k; len] }
    }

    /// The partition padded with zeros to `len` entries.
    pub fn from_partition(p: &Partition, len: usize) -> Result<Self> {
        if p.len() > len {
            return Err(Error::RankTooSmall { weight: p.parts().iter().map(|&x| x as i64).collect(), n: len });
        }
        Ok(Self { entries: p.padded(len).into_iter().map(i64::from).collect() })
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn first(&self) -> i64 {
        self.entries[0]
    }

    pub fn last(&self) -> i64 {
        *self.entries.last().unwrap()
    }

    pub fn size(&self) -> i64 {
        self.entries.iter().sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.last() >= 0
    }

    /// Weight of the dual: `-w` reversed.
    pub fn dual(&self) -> GLWeight {
        Self { entries: self.entries.iter().rev().map(|&x| -x).collect() }
    }

    /// Adds `k` to every entry (tensoring with `det^k`).
    pub fn shifted(&self, k: i64) -> GLWeight {
        Self { entries: self.entries.iter().map(|&x| x + k).collect() }
    }

    /// Minimal determinant shift making the weight a partition.
    pub fn normalizing_shift(&self) -> i64 {
        (-self.last()).max(0)
    }

    /// `(partition, m)` with `self = partition - m`.
    pub fn normalized(&self) -> (Partition, i64) {
        let m = self.normalizing_shift();
        let parts = self.entries.iter().map(|&x| (x + m) as u32).collect();
        (Partition::new(parts).expect("shifted weight is a partition"), m)
    }

    /// The weight as a partition, if it has no negative entries.
    pub fn as_partition(&self) -> Option<Partition> {
        if self.is_nonnegative() {
            Some(Partition::new(self.entries.iter().map(|&x| x as u32).collect()).unwrap())
        } else {
            None
        }
    }

    pub fn concat(blocks: &[GLWeight]) -> Vec<i64> {
        blocks.iter().flat_map(|b| b.entries.iter().copied()).collect()
    }
}

impl TryFrom<Vec<i64>> for GLWeight {
    type Error = Error;

    fn try_from(v: Vec<i64>) -> Result<Self> {
        GLWeight::new(v)
    }
}

impl From<GLWeight> for Vec<i64> {
    fn from(w: GLWeight) -> Self {
        w.entries
    }
}

impl fmt::Display for GLWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// A direct sum `⊕ Σ^γ` with positive multiplicities; all keys share one length.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WeightExpansion {
    pub terms: BTreeMap<GLWeight, BigUint>,
}

impl WeightExpansion {
    pub fn single(w: GLWeight) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(w, BigUint::one());
        Self { terms }
    }

    pub fn add(&mut self, w: GLWeight, mult: BigUint) {
        if mult.is_zero() {
            return;
        }
        *self.terms.entry(w).or_default() += mult;
    }

    pub fn iter(&self) -> impl Iterator<Item = (&GLWeight, &BigUint)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn get(&self, w: &GLWeight) -> BigUint {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    /// Total dimension when every term is evaluated on an `n`-dimensional space.
    pub fn dimension(&self, n: usize) -> Result<BigUint> {
        let mut total = BigUint::zero();
        for (w, m) in &self.terms {
            total += schur_dimension(w, n)? * m;
        }
        Ok(total)
    }
}

type LrKey = (Vec<u32>, Vec<u32>, usize);
type LrTable = Vec<(Partition, u64)>;

fn lr_cache() -> &'static Mutex<HashMap<LrKey, Arc<LrTable>>> {
    static CACHE: OnceLock<Mutex<HashMap<LrKey, Arc<LrTable>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Littlewood–Richardson coefficients `c^ν_{a,b}` for all `ν` with at most
/// `max_rows` rows, by enumerating LR skew tableaux of shape `ν/a` and
/// content `b`.
pub fn lr_coefficients(a: &Partition, b: &Partition, max_rows: usize) -> Arc<LrTable> {
    let key = (a.parts().to_vec(), b.parts().to_vec(), max_rows);
    if let Some(hit) = lr_cache().lock().unwrap().get(&key) {
        return Arc::clone(hit);
    }
    let table = Arc::new(lr_enumerate(a, b, max_rows));
    lr_cache().lock().unwrap().insert(key, Arc::clone(&table));
    table
}

fn lr_enumerate(a: &Partition, b: &Partition, max_rows: usize) -> LrTable {
    let mut out: BTreeMap<Partition, u64> = BTreeMap::new();
    if a.len() > max_rows || b.len() > max_rows {
        return Vec::new();
    }
    let shape = a.padded(max_rows);
    let mut placements: Vec<Vec<u32>> = Vec::with_capacity(b.len());
    place_label(&shape, b.parts(), &mut placements, max_rows, &mut out);
    out.into_iter().collect()
}

// Places the boxes labelled `placements.len()` as a horizontal strip, checks
// the lattice-word condition against the previous label, then recurses.
fn place_label(shape: &[u32], content: &[u32], placements: &mut Vec<Vec<u32>>, rows: usize, out: &mut BTreeMap<Partition, u64>) {
    let label = placements.len();
    if label == content.len() {
        let nu = Partition::new(shape.to_vec()).expect("strip additions keep the shape a partition");
        *out.entry(nu).or_insert(0) += 1;
        return;
    }
    let mut counts = vec![0u32; rows];
    horizontal_strips(shape, content[label], 0, &mut counts, &mut |counts| {
        if label > 0 && !lattice_ok(&placements[label - 1], counts) {
            return;
        }
        let grown: Vec<u32> = shape.iter().zip(counts).map(|(s, c)| s + c).collect();
        placements.push(counts.to_vec());
        place_label(&grown, content, placements, rows, out);
        placements.pop();
    });
}

// Reading rows top to bottom, right to left: within a row the larger label is
// read first, so the running count of `label` through row r must not exceed
// the count of `label - 1` strictly above row r.
fn lattice_ok(prev: &[u32], cur: &[u32]) -> bool {
    let mut prev_above = 0u32;
    let mut cur_through = 0u32;
    for r in 0..cur.len() {
        cur_through += cur[r];
        if cur_through > prev_above {
            return false;
        }
        prev_above += prev[r];
    }
    true
}

fn horizontal_strips(shape: &[u32], remaining: u32, row: usize, counts: &mut [u32], f: &mut dyn FnMut(&[u32])) {
    if remaining == 0 {
        for c in counts[row..].iter_mut() {
            *c = 0;
        }
        f(counts);
        return;
    }
    if row == shape.len() {
        return;
    }
    let cap = if row == 0 { remaining } else { (shape[row - 1] - shape[row]).min(remaining) };
    for c in (0..=cap).rev() {
        counts[row] = c;
        horizontal_strips(shape, remaining - c, row + 1, counts, f);
    }
    counts[row] = 0;
}

/// `Σ^a ⊗ Σ^b` on a space of dimension `rank`.
pub fn lr_expand(a: &Partition, b: &Partition, rank: usize) -> Result<WeightExpansion> {
    if rank == 0 {
        return Err(Error::InvalidArgument("rank must be positive".into()));
    }
    let mut exp = WeightExpansion::default();
    for (nu, c) in lr_coefficients(a, b, rank).iter() {
        exp.add(GLWeight::from_partition(nu, rank)?, BigUint::from(*c));
    }
    Ok(exp)
}

/// `Σ^α ⊗ Σ^β` for extended (possibly negative) weights of one common length.
pub fn tensor_weights(alpha: &GLWeight, beta: &GLWeight) -> Result<WeightExpansion> {
    if alpha.len() != beta.len() {
        return Err(Error::InvalidArgument(format!("weights of different lengths: {alpha} and {beta}")));
    }
    let rank = alpha.len();
    let (pa, ma) = alpha.normalized();
    let (pb, mb) = beta.normalized();
    let mut exp = WeightExpansion::default();
    for (nu, c) in lr_coefficients(&pa, &pb, rank).iter() {
        let w = GLWeight::from_partition(nu, rank)?.shifted(-(ma + mb));
        exp.add(w, BigUint::from(*c));
    }
    Ok(exp)
}

/// `Σ^{-a} ⊗ Σ^b`, i.e. `Hom(Σ^a F, Σ^b F)` for a rank-`rank` bundle `F`.
pub fn hom_expand(a: &Partition, b: &Partition, rank: usize) -> Result<WeightExpansion> {
    let wa = GLWeight::from_partition(a, rank)?;
    let wb = GLWeight::from_partition(b, rank)?;
    tensor_weights(&wa.dual(), &wb)
}

/// Expands a tensor product of several weights of the same length.
pub fn tensor_many(factors: &[GLWeight]) -> Result<WeightExpansion> {
    let Some((first, rest)) = factors.split_first() else {
        return Err(Error::InvalidArgument("empty tensor product".into()));
    };
    let mut acc = WeightExpansion::single(first.clone());
    for f in rest {
        let mut next = WeightExpansion::default();
        for (w, m) in acc.iter() {
            for (v, c) in tensor_weights(w, f)?.iter() {
                next.add(v.clone(), m * c);
            }
        }
        acc = next;
    }
    Ok(acc)
}

/// Dimension of the irreducible `GL_n` representation with highest weight `w`,
/// by the hook-content formula.
pub fn schur_dimension(w: &GLWeight, n: usize) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    let lambda = if w.len() <= n {
        if w.len() < n && w.last() < 0 {
            return Err(Error::InvalidWeight(w.entries().to_vec()));
        }
        w.normalized().0
    } else {
        let shifted = w.shifted(-w.last());
        let p = shifted.as_partition().expect("shift by the last entry is non-negative");
        if p.len() > n {
            return Err(Error::RankTooSmall { weight: w.entries().to_vec(), n });
        }
        p
    };
    Ok(hook_content(&lambda, n))
}

pub(crate) fn hook_content(lambda: &Partition, n: usize) -> BigUint {
    if lambda.len() > n {
        return BigUint::zero();
    }
    let conj = lambda.conjugate();
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for (i, &row) in lambda.parts().iter().enumerate() {
        for j in 0..row as usize {
            let content = n as i64 + j as i64 - i as i64;
            let hook = (row as usize - j) + (conj.part(j) as usize - i) - 1;
            num *= content as u64;
            den *= hook as u64;
        }
    }
    num / den
}

type BranchKey = (Vec<u32>, usize);

/// Degrees of the line-bundle summands of `Σ^w(⊕ O(d_k))`, with multiplicity.
///
/// One summand per semistandard tableau of shape `w` in the letters indexing
/// `degrees`; its degree is the sum of the letters' degrees. Computed through
/// the branching rule `s_λ(x_1..x_N) = Σ_{μ interlacing λ} s_μ(x_1..x_{N-1}) x_N^{|λ|-|μ|}`.
pub fn split_bundle_expand(w: &Partition, degrees: &[i64]) -> Result<BTreeMap<i64, BigUint>> {
    if w.len() > degrees.len() {
        return Err(Error::RankTooSmall { weight: w.parts().iter().map(|&x| x as i64).collect(), n: degrees.len() });
    }
    let mut memo: HashMap<BranchKey, BTreeMap<i64, BigUint>> = HashMap::new();
    Ok(branch(&w.padded(degrees.len()), degrees, &mut memo))
}

fn branch(lambda: &[u32], degrees: &[i64], memo: &mut HashMap<BranchKey, BTreeMap<i64, BigUint>>) -> BTreeMap<i64, BigUint> {
    let n = degrees.len();
    if n == 0 {
        let mut m = BTreeMap::new();
        m.insert(0, BigUint::one());
        return m;
    }
    if n == 1 {
        let mut m = BTreeMap::new();
        m.insert(lambda[0] as i64 * degrees[0], BigUint::one());
        return m;
    }
    let key = (lambda.to_vec(), n);
    if let Some(hit) = memo.get(&key) {
        return hit.clone();
    }
    let size: u32 = lambda.iter().sum();
    let mut out: BTreeMap<i64, BigUint> = BTreeMap::new();
    let mut mu = vec![0u32; n - 1];
    interlacing(lambda, 0, &mut mu, &mut |mu| {
        let last = (size - mu.iter().sum::<u32>()) as i64 * degrees[n - 1];
        for (deg, m) in branch(mu, &degrees[..n - 1], memo) {
            *out.entry(deg + last).or_default() += m;
        }
    });
    memo.insert(key, out.clone());
    out
}

fn interlacing(lambda: &[u32], i: usize, mu: &mut Vec<u32>, f: &mut dyn FnMut(&[u32])) {
    if i == mu.len() {
        f(mu);
        return;
    }
    for v in lambda[i + 1]..=lambda[i] {
        mu[i] = v;
        interlacing(lambda, i + 1, mu, f);
    }
}

/// `Σ^w(F ⊗ L^p) = Σ^w(F) ⊗ L^{p|w|}` for `w ≥ 0`; returns `(w, p|w|)`.
pub fn twist_weight(w: &GLWeight, line_power: i64) -> Result<(GLWeight, i64)> {
    if !w.is_nonnegative() {
        return Err(Error::NegativeWeight(w.entries().to_vec()));
    }
    Ok((w.clone(), w.size() * line_power))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{enumerate_box_partitions, OrderTag};
    use proptest::prelude::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn w(v: &[i64]) -> GLWeight {
        GLWeight::new(v.to_vec()).unwrap()
    }

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    // --- independent oracles -------------------------------------------------

    // All SSYT of shape `lambda` with entries in 0..n, as content vectors.
    fn ssyt_contents(lambda: &Partition, n: usize) -> Vec<Vec<usize>> {
        let cells: Vec<(usize, usize)> =
            lambda.parts().iter().enumerate().flat_map(|(i, &r)| (0..r as usize).map(move |j| (i, j))).collect();
        let mut filling = vec![vec![0usize; lambda.part(0) as usize]; lambda.len()];
        let mut out = Vec::new();
        fn go(k: usize, cells: &[(usize, usize)], filling: &mut Vec<Vec<usize>>, n: usize, out: &mut Vec<Vec<usize>>) {
            if k == cells.len() {
                let mut content = vec![0; n];
                for &(i, j) in cells {
                    content[filling[i][j]] += 1;
                }
                out.push(content);
                return;
            }
            let (i, j) = cells[k];
            let lo_row = if j > 0 { filling[i][j - 1] } else { 0 };
            let lo_col = if i > 0 { filling[i - 1][j] + 1 } else { 0 };
            for v in lo_row.max(lo_col)..n {
                filling[i][j] = v;
                go(k + 1, cells, filling, n, out);
            }
        }
        go(0, &cells, &mut filling, n, &mut out);
        out
    }

    // Schur polynomial as a map monomial-exponent -> coefficient.
    fn schur_poly(lambda: &Partition, n: usize) -> BTreeMap<Vec<usize>, i64> {
        let mut m = BTreeMap::new();
        for c in ssyt_contents(lambda, n) {
            *m.entry(c).or_insert(0) += 1;
        }
        m
    }

    fn poly_mul(a: &BTreeMap<Vec<usize>, i64>, b: &BTreeMap<Vec<usize>, i64>) -> BTreeMap<Vec<usize>, i64> {
        let mut out = BTreeMap::new();
        for (ea, ca) in a {
            for (eb, cb) in b {
                let e: Vec<usize> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                *out.entry(e).or_insert(0) += ca * cb;
            }
        }
        out.retain(|_, v| *v != 0);
        out
    }

    // Decompose a symmetric polynomial into Schur polynomials by peeling off
    // the lexicographically largest dominant monomial.
    fn schur_decompose(mut f: BTreeMap<Vec<usize>, i64>, n: usize) -> BTreeMap<Partition, i64> {
        let mut out = BTreeMap::new();
        while let Some((lead, &c)) = f.iter().filter(|(e, _)| e.windows(2).all(|w| w[0] >= w[1])).max_by(|a, b| a.0.cmp(b.0)) {
            let lead = lead.clone();
            let lam = Partition::new(lead.iter().map(|&x| x as u32).collect()).unwrap();
            for (e, k) in schur_poly(&lam, n) {
                let entry = f.entry(e).or_insert(0);
                *entry -= c * k;
            }
            f.retain(|_, v| *v != 0);
            out.insert(lam, c);
        }
        assert!(f.is_empty(), "not symmetric?");
        out
    }

    fn oracle_lr(a: &Partition, b: &Partition, n: usize) -> BTreeMap<Partition, i64> {
        schur_decompose(poly_mul(&schur_poly(a, n), &schur_poly(b, n)), n)
    }

    fn expansion_as_partitions(e: &WeightExpansion) -> BTreeMap<Partition, i64> {
        e.iter().map(|(w, m)| (w.as_partition().unwrap(), i64::try_from(m.clone()).unwrap())).collect()
    }

    // --- examples ----------------------------------------------------------

    #[test]
    fn lr_box_times_box_rank_two() {
        let e = lr_expand(&p(&[1]), &p(&[1]), 2).unwrap();
        assert_eq!(e.len(), 2);
        assert_eq!(e.get(&w(&[2, 0])), big(1));
        assert_eq!(e.get(&w(&[1, 1])), big(1));
        assert_eq!(expansion_as_partitions(&e), oracle_lr(&p(&[1]), &p(&[1]), 2));
    }

    #[test]
    fn lr_unit() {
        for lam in [p(&[]), p(&[2, 1]), p(&[3, 3, 1])] {
            let e = lr_expand(&lam, &Partition::empty(), 3).unwrap();
            assert_eq!(e, WeightExpansion::single(GLWeight::from_partition(&lam, 3).unwrap()));
        }
    }

    #[test]
    fn lr_two_one_times_one_rank_three() {
        let e = lr_expand(&p(&[2, 1]), &p(&[1]), 3).unwrap();
        let expected: BTreeMap<Partition, i64> = [(p(&[3, 1]), 1), (p(&[2, 2]), 1), (p(&[2, 1, 1]), 1)].into_iter().collect();
        assert_eq!(expansion_as_partitions(&e), expected);
        assert_eq!(oracle_lr(&p(&[2, 1]), &p(&[1]), 3), expected);
    }

    #[test]
    fn lr_matches_polynomial_oracle_on_small_boxes() {
        let boxes = enumerate_box_partitions(3, 2, OrderTag::SizeOrder).unwrap().members;
        for a in &boxes {
            for b in &boxes {
                for n in 1..=3 {
                    if a.len() > n || b.len() > n {
                        continue;
                    }
                    let ours = expansion_as_partitions(&lr_expand(a, b, n).unwrap());
                    assert_eq!(ours, oracle_lr(a, b, n), "{a} x {b} in rank {n}");
                }
            }
        }
    }

    #[test]
    fn lr_coefficient_two_appears() {
        // s_{21} * s_{21} contains s_{321} twice.
        let e = lr_expand(&p(&[2, 1]), &p(&[2, 1]), 3).unwrap();
        assert_eq!(e.get(&w(&[3, 2, 1])), big(2));
    }

    #[test]
    fn hom_expand_examples() {
        let e = hom_expand(&Partition::empty(), &p(&[2, 1]), 3).unwrap();
        assert_eq!(e, WeightExpansion::single(w(&[2, 1, 0])));

        let e = hom_expand(&p(&[1]), &p(&[1]), 2).unwrap();
        assert_eq!(e.len(), 2);
        assert_eq!(e.get(&w(&[1, -1])), big(1));
        assert_eq!(e.get(&w(&[0, 0])), big(1));
        assert_eq!(e.dimension(2).unwrap(), big(4));

        let e = hom_expand(&p(&[1, 1]), &Partition::empty(), 2).unwrap();
        assert_eq!(e, WeightExpansion::single(w(&[-1, -1])));
    }

    #[test]
    fn schur_dimension_examples() {
        assert_eq!(schur_dimension(&w(&[1, 1]), 4).unwrap(), big(6));
        assert_eq!(schur_dimension(&w(&[2]), 4).unwrap(), big(10));
        assert_eq!(schur_dimension(&w(&[2, 1]), 3).unwrap(), big(8));
        assert_eq!(ssyt_contents(&p(&[2, 1]), 3).len(), 8);
        // shift invariance
        assert_eq!(schur_dimension(&w(&[1, -1]), 2).unwrap(), big(3));
        assert_eq!(schur_dimension(&w(&[-3, -3, -3]), 3).unwrap(), big(1));
    }

    #[test]
    fn schur_dimension_rejects_small_rank() {
        assert!(schur_dimension(&w(&[2, 1, 0]), 1).is_err());
        assert!(schur_dimension(&w(&[1, 1, 0]), 1).is_err());
        assert_eq!(schur_dimension(&w(&[1, 1, 1]), 2).unwrap(), big(1));
        assert!(schur_dimension(&w(&[0, -1]), 3).is_err());
        assert_eq!(schur_dimension(&w(&[2, 2, 2]), 2).unwrap(), big(1));
    }

    #[test]
    fn schur_dimension_matches_ssyt_count() {
        for lam in enumerate_box_partitions(3, 3, OrderTag::SizeOrder).unwrap().members {
            for n in lam.len().max(1)..=4 {
                let d = schur_dimension(&GLWeight::from_partition(&lam, n).unwrap(), n).unwrap();
                assert_eq!(d, big(ssyt_contents(&lam, n).len() as u64), "{lam} n={n}");
            }
        }
    }

    #[test]
    fn split_bundle_examples() {
        let m = split_bundle_expand(&p(&[1]), &[0, 1]).unwrap();
        assert_eq!(m, [(0, big(1)), (1, big(1))].into_iter().collect());
        let m = split_bundle_expand(&p(&[2]), &[0, 1]).unwrap();
        assert_eq!(m, [(0, big(1)), (1, big(1)), (2, big(1))].into_iter().collect());
        let m = split_bundle_expand(&p(&[1, 1]), &[0, 1]).unwrap();
        assert_eq!(m, [(1, big(1))].into_iter().collect());
    }

    #[test]
    fn split_bundle_matches_ssyt_oracle() {
        let degrees = [-1i64, 0, 2, 5];
        for lam in enumerate_box_partitions(3, 2, OrderTag::SizeOrder).unwrap().members {
            let mut oracle: BTreeMap<i64, BigUint> = BTreeMap::new();
            for c in ssyt_contents(&lam, degrees.len()) {
                let deg: i64 = c.iter().zip(degrees.iter()).map(|(k, d)| *k as i64 * d).sum();
                *oracle.entry(deg).or_default() += 1u32;
            }
            assert_eq!(split_bundle_expand(&lam, &degrees).unwrap(), oracle, "{lam}");
        }
    }

    #[test]
    fn twist_weight_examples() {
        assert_eq!(twist_weight(&w(&[2, 1]), 1).unwrap(), (w(&[2, 1]), 3));
        assert_eq!(twist_weight(&w(&[3, 0]), 0).unwrap(), (w(&[3, 0]), 0));
        assert_eq!(twist_weight(&w(&[1, 1]), -2).unwrap(), (w(&[1, 1]), -4));
        assert!(twist_weight(&w(&[1, -1]), 1).is_err());
    }

    #[test]
    fn invalid_weights_rejected() {
        assert!(GLWeight::new(vec![0, 1]).is_err());
        assert!(GLWeight::new(vec![]).is_err());
    }

    #[test]
    fn hom_weights_respect_lower_bound() {
        for (rows, cols) in [(2usize, 2u32), (2, 3), (3, 2), (3, 3)] {
            let set = enumerate_box_partitions(rows, cols, OrderTag::SizeOrder).unwrap().members;
            for a in &set {
                for b in &set {
                    for (g, _) in hom_expand(a, b, rows).unwrap().iter() {
                        assert!(g.last() >= -(cols as i64));
                        assert!(g.last() >= -(a.part(0) as i64));
                    }
                }
            }
        }
    }

    fn box_partition() -> impl Strategy<Value = Partition> {
        proptest::collection::vec(0u32..=3, 3).prop_map(|mut v| {
            v.sort_unstable_by(|a, b| b.cmp(a));
            Partition::new(v).unwrap()
        })
    }

    proptest! {
        #[test]
        fn lr_is_symmetric(a in box_partition(), b in box_partition(), r in 1usize..=4) {
            prop_assume!(a.len() <= r && b.len() <= r);
            prop_assert_eq!(lr_expand(&a, &b, r).unwrap(), lr_expand(&b, &a, r).unwrap());
        }

        #[test]
        fn lr_dimension_bookkeeping(a in box_partition(), b in box_partition(), n in 1usize..=5) {
            prop_assume!(a.len() <= n && b.len() <= n);
            let da = schur_dimension(&GLWeight::from_partition(&a, n).unwrap(), n).unwrap();
            let db = schur_dimension(&GLWeight::from_partition(&b, n).unwrap(), n).unwrap();
            prop_assert_eq!(lr_expand(&a, &b, n).unwrap().dimension(n).unwrap(), da * db);
        }

        #[test]
        fn hom_dimension_bookkeeping(a in box_partition(), b in box_partition(), r in 1usize..=4) {
            prop_assume!(a.len() <= r && b.len() <= r);
            let da = schur_dimension(&GLWeight::from_partition(&a, r).unwrap(), r).unwrap();
            let db = schur_dimension(&GLWeight::from_partition(&b, r).unwrap(), r).unwrap();
            prop_assert_eq!(hom_expand(&a, &b, r).unwrap().dimension(r).unwrap(), da * db);
        }

        #[test]
        fn split_expand_total_and_permutation(a in box_partition(), mut degs in proptest::collection::vec(-3i64..4, 3..5)) {
            let total: BigUint = split_bundle_expand(&a, &degs).unwrap().values().sum();
            let n = degs.len();
            prop_assert_eq!(total, schur_dimension(&GLWeight::from_partition(&a, n).unwrap(), n).unwrap());
            let before = split_bundle_expand(&a, &degs).unwrap();
            degs.reverse();
            prop_assert_eq!(split_bundle_expand(&a, &degs).unwrap(), before);
        }
    }
}
