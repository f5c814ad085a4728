//! Cohomology of homogeneous bundles on `GL_n` partial flag varieties.
//!
//! A bundle is described by one weight block per successive quotient of the
//! tautological filtration `0 ⊂ R_1 ⊂ ... ⊂ R_m ⊂ V`. Block `χ_k` stands for
//! `Σ^{χ_k}((R_k/R_{k-1})^∨)`, the last block for the final quotient `V/R_m`.
//! With this convention a dominant concatenated weight `w` has
//! `H^0 = Σ^w(V^∨)`; so `Σ^λ(R^∨)` on `Grass(d, n)` is the block list `[λ, 0]`
//! and `O(m)` on `P^{n-1} = Grass(1, n)` is `[(m), 0]`.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::schur::{hom_expand, schur_dimension, GLWeight};

/// `Flag(l_1 < ... < l_m; n)`. One step is a Grassmannian.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FlagSpace {
    n: usize,
    steps: Vec<usize>,
}

impl FlagSpace {
    pub fn new(steps: Vec<usize>, n: usize) -> Result<Self> {
        let ok = !steps.is_empty() && steps[0] >= 1 && *steps.last().unwrap() <= n && steps.windows(2).all(|w| w[0] < w[1]);
        if !ok {
            return Err(Error::InvalidSpace(format!("steps {steps:?} with n = {n}")));
        }
        Ok(Self { n, steps })
    }

    pub fn grassmannian(d: usize, n: usize) -> Result<Self> {
        Self::new(vec![d], n)
    }

    /// `P^m`, realized as lines in a space of dimension `m + 1`.
    pub fn projective(m: usize) -> Result<Self> {
        Self::new(vec![1], m + 1)
    }

    pub fn full_flag(n: usize) -> Result<Self> {
        Self::new((1..n).collect(), n)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn steps(&self) -> &[usize] {
        &self.steps
    }

    /// Ranks of the successive quotients, sub first. A last step equal to `n`
    /// leaves no final quotient, and no block for it.
    pub fn block_sizes(&self) -> Vec<usize> {
        let mut prev = 0;
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        for &l in self.steps.iter().chain(std::iter::once(&self.n)) {
            if l > prev {
                out.push(l - prev);
            }
            prev = l;
        }
        out
    }

    pub fn dim(&self) -> usize {
        let sq: usize = self.block_sizes().iter().map(|b| b * b).sum();
        (self.n * self.n - sq) / 2
    }

    /// Weight of the canonical bundle, up to a global determinant twist.
    pub fn canonical_blocks(&self) -> Vec<GLWeight> {
        let sizes = self.block_sizes();
        let mut before = 0usize;
        sizes
            .iter()
            .map(|&s| {
                let after = self.n - before - s;
                let w = GLWeight::constant(s, before as i64 - after as i64);
                before += s;
                w
            })
            .collect()
    }
}

impl fmt::Display for FlagSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Flag(")?;
        for (i, l) in self.steps.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, ";{})", self.n)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HomogeneousBundle {
    space: FlagSpace,
    blocks: Vec<GLWeight>,
}

impl HomogeneousBundle {
    pub fn new(space: FlagSpace, blocks: Vec<GLWeight>) -> Result<Self> {
        let sizes = space.block_sizes();
        if blocks.len() != sizes.len() || blocks.iter().zip(&sizes).any(|(b, &s)| b.len() != s) {
            let got: Vec<usize> = blocks.iter().map(GLWeight::len).collect();
            return Err(Error::MalformedBundle(format!("block lengths {got:?}, expected {sizes:?} on {space}")));
        }
        Ok(Self { space, blocks })
    }

    pub fn structure_sheaf(space: FlagSpace) -> Self {
        let blocks = space.block_sizes().into_iter().map(GLWeight::zero).collect();
        Self { space, blocks }
    }

    fn with_block(space: &FlagSpace, index: usize, w: GLWeight) -> Result<Self> {
        let mut b = Self::structure_sheaf(space.clone());
        if w.len() != b.blocks[index].len() {
            return Err(Error::RankTooSmall { weight: w.entries().to_vec(), n: b.blocks[index].len() });
        }
        b.blocks[index] = w;
        Ok(b)
    }

    /// `Σ^λ(R^∨)` for the first tautological subbundle `R = R_1`.
    pub fn of_sub_dual(space: &FlagSpace, lambda: &GLWeight) -> Result<Self> {
        Self::with_block(space, 0, lambda.clone())
    }

    /// `Σ^λ(R)` for `R = R_1`.
    pub fn of_sub(space: &FlagSpace, lambda: &GLWeight) -> Result<Self> {
        Self::with_block(space, 0, lambda.dual())
    }

    /// `Σ^λ(Q)` for the final quotient `Q = V/R_m`.
    pub fn of_quot(space: &FlagSpace, lambda: &GLWeight) -> Result<Self> {
        if space.steps.last() == Some(&space.n) {
            return Err(Error::InvalidSpace(format!("{space} has no final quotient")));
        }
        let last = space.block_sizes().len() - 1;
        Self::with_block(space, last, lambda.dual())
    }

    /// Convenience for partitions: `Σ^λ(R^∨)` with `λ` padded to the rank of `R`.
    pub fn sub_dual_partition(space: &FlagSpace, lambda: &Partition) -> Result<Self> {
        Self::of_sub_dual(space, &GLWeight::from_partition(lambda, space.steps()[0])?)
    }

    pub fn space(&self) -> &FlagSpace {
        &self.space
    }

    pub fn blocks(&self) -> &[GLWeight] {
        &self.blocks
    }

    pub fn weight(&self) -> Vec<i64> {
        GLWeight::concat(&self.blocks)
    }

    pub fn dual(&self) -> Self {
        Self { space: self.space.clone(), blocks: self.blocks.iter().map(GLWeight::dual).collect() }
    }

    /// Tensor with the line bundle `⊗_k det(B_k^∨)^{t_k}`; `twists` has one entry per block.
    pub fn twisted(&self, twists: &[i64]) -> Self {
        let blocks = self.blocks.iter().zip(twists).map(|(b, &t)| b.shifted(t)).collect();
        Self { space: self.space.clone(), blocks }
    }

    /// `E^∨ ⊗ K`, the bundle whose cohomology is Serre dual to that of `E`.
    pub fn serre_dual(&self) -> Self {
        let k = self.space.canonical_blocks();
        let twists: Vec<i64> = k.iter().map(GLWeight::first).collect();
        self.dual().twisted(&twists)
    }
}

impl fmt::Display for HomogeneousBundle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                write!(f, "|")?;
            }
            write!(f, "{b}")?;
        }
        write!(f, " on {}", self.space)
    }
}

/// Cohomology of an irreducible homogeneous bundle: zero, or a single
/// irreducible representation sitting in a single degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CohomologyResult {
    Zero,
    Concentrated { degree: usize, weight: GLWeight, dimension: BigUint },
}

impl CohomologyResult {
    pub fn is_zero(&self) -> bool {
        matches!(self, CohomologyResult::Zero)
    }

    pub fn degree(&self) -> Option<usize> {
        match self {
            CohomologyResult::Zero => None,
            CohomologyResult::Concentrated { degree, .. } => Some(*degree),
        }
    }

    pub fn dimension(&self) -> BigUint {
        match self {
            CohomologyResult::Zero => BigUint::zero(),
            CohomologyResult::Concentrated { dimension, .. } => dimension.clone(),
        }
    }

    /// `dim H^s`.
    pub fn dim_in(&self, s: usize) -> BigUint {
        match self {
            CohomologyResult::Concentrated { degree, dimension, .. } if *degree == s => dimension.clone(),
            _ => BigUint::zero(),
        }
    }

    pub fn euler(&self) -> BigInt {
        match self {
            CohomologyResult::Zero => BigInt::zero(),
            CohomologyResult::Concentrated { degree, dimension, .. } => {
                let d = BigInt::from(dimension.clone());
                if degree % 2 == 0 {
                    d
                } else {
                    -d
                }
            }
        }
    }
}

/// The dotted Weyl action on a weight vector: `None` if `w + ρ` has a repeated
/// entry, otherwise `(ℓ, dominant weight)` with `ℓ` the number of inversions.
pub fn bott_sort(w: &[i64]) -> Option<(usize, Vec<i64>)> {
    bott_sort_with_rho(w, 0)
}

fn bott_sort_with_rho(w: &[i64], rho_shift: i64) -> Option<(usize, Vec<i64>)> {
    let n = w.len();
    let mut v: Vec<i64> = w.iter().enumerate().map(|(i, &x)| x + (n - 1 - i) as i64 + rho_shift).collect();
    let mut inversions = 0;
    for i in 0..n {
        for j in i + 1..n {
            match v[i].cmp(&v[j]) {
                std::cmp::Ordering::Equal => return None,
                std::cmp::Ordering::Less => inversions += 1,
                std::cmp::Ordering::Greater => {}
            }
        }
    }
    v.sort_unstable_by(|a, b| b.cmp(a));
    let dominant = v.iter().enumerate().map(|(i, &x)| x - (n - 1 - i) as i64 - rho_shift).collect();
    Some((inversions, dominant))
}

pub fn flag_cohomology(b: &HomogeneousBundle) -> Result<CohomologyResult> {
    let n = b.space.n;
    match bott_sort(&b.weight()) {
        None => Ok(CohomologyResult::Zero),
        Some((degree, dominant)) => {
            let weight = GLWeight::new(dominant).expect("sorted weight is dominant");
            let dimension = schur_dimension(&weight, n)?;
            Ok(CohomologyResult::Concentrated { degree, weight, dimension })
        }
    }
}

/// `H^•(P^n, O(m))` by counting (Laurent) monomials in `n + 1` variables.
pub fn pn_line_cohomology(m: i64, n: usize) -> CohomologyResult {
    let vars = n + 1;
    if m >= 0 {
        let count = count_compositions(m as usize, vars);
        return CohomologyResult::Concentrated { degree: 0, weight: GLWeight::new(vec![m]).unwrap(), dimension: count };
    }
    // H^n is spanned by monomials with every exponent at most -1.
    let deficit = -m - vars as i64;
    if deficit >= 0 {
        let count = count_compositions(deficit as usize, vars);
        return CohomologyResult::Concentrated { degree: n, weight: GLWeight::new(vec![m]).unwrap(), dimension: count };
    }
    CohomologyResult::Zero
}

// Number of exponent vectors in `vars` non-negative entries summing to `total`.
fn count_compositions(total: usize, vars: usize) -> BigUint {
    let mut ways = vec![BigUint::zero(); total + 1];
    ways[0] = BigUint::one();
    for _ in 0..vars {
        for t in 1..=total {
            let prev = ways[t - 1].clone();
            ways[t] += prev;
        }
    }
    ways[total].clone()
}

/// Relative `Σ^γ(R^∨)` pushforward from `Grass(l, E)` with `rank E = ambient_rank`.
///
/// Returns the weight to apply to `E^∨` (degree 0), or `None` when every
/// direct image vanishes. Weights below `-(ambient_rank - l)` are rejected.
pub fn grass_pushforward(gamma: &GLWeight, l: usize, ambient_rank: usize) -> Result<Option<GLWeight>> {
    if gamma.len() != l || l == 0 || l >= ambient_rank {
        return Err(Error::InvalidArgument(format!("weight {gamma} on a rank-{l} subbundle of a rank-{ambient_rank} bundle")));
    }
    if gamma.last() < -((ambient_rank - l) as i64) {
        return Err(Error::OutOfBound(gamma.entries().to_vec()));
    }
    if !gamma.is_nonnegative() {
        return Ok(None);
    }
    let mut entries = gamma.entries().to_vec();
    entries.resize(ambient_rank, 0);
    Ok(Some(GLWeight::new(entries)?))
}

/// The same Euler characteristic as [`localization_euler`], from Bott's
/// theorem applied to each summand of `Σ^a(R^∨) ⊗ Σ^b(R)`.
pub fn bott_euler(a: &Partition, b: &Partition, d: usize, n: usize) -> Result<BigInt> {
    let space = FlagSpace::grassmannian(d, n)?;
    let mut chi = BigInt::zero();
    for (g, m) in hom_expand(b, a, d)?.iter() {
        let bundle = HomogeneousBundle::of_sub_dual(&space, g)?;
        chi += flag_cohomology(&bundle)?.euler() * BigInt::from(m.clone());
    }
    Ok(chi)
}

const PRIMES: [i64; 20] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71];

/// `χ(Σ^a(R)^∨ ⊗ Σ^b(R))` on `Grass(d, n)` by summing over torus-fixed points.
///
/// The fixed-point sum is a rational function of the torus parameters whose
/// value at the identity is the Euler characteristic. We substitute
/// `x_i = 1 + c_i ε` for distinct integers `c_i`; each fixed point then has a
/// pole of order `N = d(n - d)` in `ε`, so its contribution to the constant
/// term is the `ε^N` coefficient of the numerator over `Π (c_j - c_i)`.
pub fn localization_euler(a: &Partition, b: &Partition, d: usize, n: usize) -> Result<BigInt> {
    if d == 0 || d >= n {
        return Err(Error::InvalidSpace(format!("Grass({d},{n})")));
    }
    let cols = (n - d) as u32;
    if !a.fits_box(d, cols) || !b.fits_box(d, cols) {
        return Err(Error::InvalidArgument(format!("{a} or {b} outside the {d}x{} box", n - d)));
    }
    if n > PRIMES.len() {
        return Err(Error::InvalidArgument(format!("n = {n} exceeds the parameter table")));
    }
    const ATTEMPTS: usize = 5;
    let mut last_err = None;
    for attempt in 0..ATTEMPTS {
        let params: Vec<i64> = PRIMES[attempt..attempt + n].to_vec();
        match localization_with(a, b, d, &params) {
            Ok(v) => return Ok(v),
            Err(e @ Error::NonIntegralEuler(_)) => return Err(e),
            Err(e) => last_err = Some(e),
        }
    }
    Err(last_err.unwrap_or_else(|| Error::NonIntegralEuler("no usable parameters".into())))
}

fn localization_with(a: &Partition, b: &Partition, d: usize, params: &[i64]) -> Result<BigInt> {
    let n = params.len();
    let order = d * (n - d);
    let subsets = k_subsets(n, d);
    let terms: Result<Vec<BigRational>> = subsets
        .par_iter()
        .map(|subset| {
            let outside: Vec<usize> = (0..n).filter(|j| !subset.contains(j)).collect();
            let mut denom = BigInt::one();
            for &i in subset {
                for &j in &outside {
                    let diff = params[j] - params[i];
                    if diff == 0 {
                        return Err(Error::InvalidArgument("torus parameters collide".into()));
                    }
                    denom *= diff;
                }
            }
            let x: Vec<Series> = subset.iter().map(|&i| Series::linear(params[i], order)).collect();
            let x_inv: Vec<Series> = subset.iter().map(|&i| Series::inverse_linear(params[i], order)).collect();
            let mut num = schur_series(a, &x_inv, order).mul(&schur_series(b, &x, order));
            for &j in &outside {
                let xj = Series::linear(params[j], order);
                for _ in 0..d {
                    num = num.mul(&xj);
                }
            }
            Ok(BigRational::new(num.coeffs[order].clone(), denom))
        })
        .collect();
    let total = terms?.into_iter().fold(BigRational::zero(), |acc, t| acc + t);
    if !total.is_integer() {
        return Err(Error::NonIntegralEuler(total.to_string()));
    }
    Ok(total.to_integer())
}

fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

// Power series in ε truncated after degree `order`.
#[derive(Clone, Debug)]
struct Series {
    coeffs: Vec<BigInt>,
}

impl Series {
    fn constant(c: i64, order: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); order + 1];
        coeffs[0] = BigInt::from(c);
        Self { coeffs }
    }

    // 1 + c ε
    fn linear(c: i64, order: usize) -> Self {
        let mut s = Self::constant(1, order);
        if order >= 1 {
            s.coeffs[1] = BigInt::from(c);
        }
        s
    }

    // 1 / (1 + c ε) = Σ (-c)^k ε^k
    fn inverse_linear(c: i64, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut term = BigInt::one();
        for _ in 0..=order {
            coeffs.push(term.clone());
            term *= -c;
        }
        Self { coeffs }
    }

    fn mul(&self, other: &Series) -> Series {
        let order = self.coeffs.len() - 1;
        let mut coeffs = vec![BigInt::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                coeffs[i + j] += a * b;
            }
        }
        Series { coeffs }
    }

    fn add_assign(&mut self, other: &Series, sign: i64) {
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            if sign >= 0 {
                *a += b;
            } else {
                *a -= b;
            }
        }
    }
}

// Complete homogeneous polynomials h_0..h_max in the given series variables.
fn complete_homogeneous(vars: &[Series], max: usize, order: usize) -> Vec<Series> {
    let mut h: Vec<Series> = (0..=max).map(|k| Series::constant(if k == 0 { 1 } else { 0 }, order)).collect();
    for v in vars {
        // h_k(x_1..x_m) = Σ_j x_m^j h_{k-j}(x_1..x_{m-1}), folded as h_k += x_m h_{k-1}.
        for k in 1..=max {
            let prev = h[k - 1].mul(v);
            h[k].add_assign(&prev, 1);
        }
    }
    h
}

// Jacobi–Trudi determinant `det(h_{λ_i - i + j})`, expanded over permutations.
fn schur_series(lambda: &Partition, vars: &[Series], order: usize) -> Series {
    let rows = lambda.len();
    if rows == 0 {
        return Series::constant(1, order);
    }
    if rows > vars.len() {
        return Series::constant(0, order);
    }
    let max = (lambda.part(0) as usize) + rows;
    let h = complete_homogeneous(vars, max, order);
    let entry = |i: usize, j: usize| -> Option<&Series> {
        let idx = lambda.part(i) as i64 - i as i64 + j as i64;
        if idx < 0 {
            None
        } else {
            h.get(idx as usize)
        }
    };
    let mut total = Series::constant(0, order);
    let mut perm: Vec<usize> = (0..rows).collect();
    permutations(&mut perm, 0, &mut |p, sign| {
        let mut prod = Series::constant(1, order);
        for (i, &j) in p.iter().enumerate() {
            match entry(i, j) {
                Some(s) => prod = prod.mul(s),
                None => return,
            }
        }
        total.add_assign(&prod, sign);
    });
    total
}

fn permutations(p: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize], i64)) {
    fn go(p: &mut Vec<usize>, k: usize, sign: i64, f: &mut dyn FnMut(&[usize], i64)) {
        if k == p.len() {
            f(p, sign);
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            go(p, k + 1, if i == k { sign } else { -sign }, f);
            p.swap(k, i);
        }
    }
    go(p, k, 1, f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{binomial, enumerate_box_partitions, OrderTag};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn w(v: &[i64]) -> GLWeight {
        GLWeight::new(v.to_vec()).unwrap()
    }

    fn grass(d: usize, n: usize) -> FlagSpace {
        FlagSpace::grassmannian(d, n).unwrap()
    }

    fn line_on_projective(m: i64, n: usize) -> HomogeneousBundle {
        let space = FlagSpace::projective(n).unwrap();
        HomogeneousBundle::of_sub_dual(&space, &w(&[m])).unwrap()
    }

    #[test]
    fn flag_space_validation() {
        assert!(FlagSpace::new(vec![], 3).is_err());
        assert!(FlagSpace::new(vec![0], 3).is_err());
        assert!(FlagSpace::new(vec![4], 3).is_err());
        assert!(FlagSpace::new(vec![2, 1], 3).is_err());
        let point = FlagSpace::new(vec![3], 3).unwrap();
        assert_eq!((point.block_sizes(), point.dim()), (vec![3], 0));
        assert!(HomogeneousBundle::of_quot(&point, &w(&[1, 0, 0])).is_err());
        assert_eq!(grass(2, 4).dim(), 4);
        assert_eq!(FlagSpace::full_flag(3).unwrap().dim(), 3);
        assert_eq!(FlagSpace::new(vec![1, 2], 4).unwrap().block_sizes(), vec![1, 1, 2]);
    }

    #[test]
    fn malformed_blocks_rejected() {
        let err = HomogeneousBundle::new(grass(2, 4), vec![w(&[0]), w(&[0, 0, 0])]);
        assert!(matches!(err, Err(Error::MalformedBundle(_))));
    }

    #[test]
    fn structure_sheaf_has_one_section() {
        for space in [grass(2, 4), FlagSpace::full_flag(4).unwrap(), FlagSpace::new(vec![1, 3], 5).unwrap()] {
            let r = flag_cohomology(&HomogeneousBundle::structure_sheaf(space)).unwrap();
            assert_eq!(r.degree(), Some(0));
            assert_eq!(r.dimension(), BigUint::one());
        }
    }

    #[test]
    fn out_of_positive_range_weight_vanishes() {
        let b = HomogeneousBundle::of_sub_dual(&grass(2, 4), &w(&[0, -1])).unwrap();
        assert!(flag_cohomology(&b).unwrap().is_zero());
    }

    #[test]
    fn canonical_of_p3() {
        let r = flag_cohomology(&line_on_projective(-4, 3)).unwrap();
        assert_eq!(r.degree(), Some(3));
        assert_eq!(r.dimension(), BigUint::one());
        assert_eq!(
            HomogeneousBundle::structure_sheaf(FlagSpace::projective(3).unwrap()).serre_dual(),
            line_on_projective(-4, 3).twisted(&[1, 1])
        );
    }

    #[test]
    fn sections_of_tautological_duals() {
        let space = grass(2, 4);
        let r = flag_cohomology(&HomogeneousBundle::of_sub_dual(&space, &w(&[1, 0])).unwrap()).unwrap();
        assert_eq!((r.degree(), r.dimension()), (Some(0), BigUint::from(4u32)));
        let r = flag_cohomology(&HomogeneousBundle::of_sub(&space, &w(&[1, 0])).unwrap()).unwrap();
        assert!(r.is_zero());
        let r = flag_cohomology(&HomogeneousBundle::of_quot(&space, &w(&[1, 0])).unwrap()).unwrap();
        assert_eq!((r.degree(), r.dimension()), (Some(0), BigUint::from(4u32)));
    }

    #[test]
    fn pn_examples() {
        assert_eq!(pn_line_cohomology(2, 2).dim_in(0), BigUint::from(6u32));
        assert!(pn_line_cohomology(-1, 1).is_zero());
        let r = pn_line_cohomology(-4, 3);
        assert_eq!((r.degree(), r.dimension()), (Some(3), BigUint::one()));
    }

    #[test]
    fn pn_counts_match_binomials() {
        for n in 1..=5usize {
            for m in -12i64..=12 {
                let r = pn_line_cohomology(m, n);
                if m >= 0 {
                    assert_eq!(r.dim_in(0), BigUint::from(binomial(n as u64 + m as u64, n as u64)));
                } else if m < -(n as i64) {
                    assert_eq!(r.dim_in(n), BigUint::from(binomial((-m - 1) as u64, n as u64)));
                } else {
                    assert!(r.is_zero());
                }
            }
        }
    }

    #[test]
    fn bott_agrees_with_monomial_counting_on_projective_spaces() {
        for n in 0..=5usize {
            for m in -10i64..=10 {
                let ours = flag_cohomology(&line_on_projective(m, n)).unwrap();
                let classical = pn_line_cohomology(m, n);
                assert_eq!(ours.degree(), classical.degree(), "O({m}) on P^{n}");
                assert_eq!(ours.dimension(), classical.dimension(), "O({m}) on P^{n}");
            }
        }
    }

    #[test]
    fn rho_shift_invariance() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let mut v: Vec<i64> = (0..5).map(|_| rng.gen_range(-6..=6)).collect();
            v.sort_unstable_by(|a, b| b.cmp(a));
            v.swap(1, 3);
            for shift in [-3i64, 1, 10] {
                assert_eq!(bott_sort(&v), bott_sort_with_rho(&v, shift));
            }
        }
    }

    #[test]
    fn pushforward_branches() {
        assert_eq!(grass_pushforward(&w(&[0, 0]), 2, 4).unwrap(), Some(w(&[0, 0, 0, 0])));
        assert_eq!(grass_pushforward(&w(&[1, 0]), 2, 4).unwrap(), Some(w(&[1, 0, 0, 0])));
        assert_eq!(grass_pushforward(&w(&[0, -1]), 2, 4).unwrap(), None);
        assert!(matches!(grass_pushforward(&w(&[0, -3]), 2, 4), Err(Error::OutOfBound(_))));
    }

    #[test]
    fn pushforward_matches_absolute_bott_in_bound() {
        for (l, n) in [(1usize, 3usize), (2, 4), (2, 5), (3, 5)] {
            let space = grass(l, n);
            let lo = -((n - l) as i64);
            let mut stack = vec![Vec::<i64>::new()];
            while let Some(v) = stack.pop() {
                if v.len() == l {
                    let g = w(&v);
                    let abs = flag_cohomology(&HomogeneousBundle::of_sub_dual(&space, &g).unwrap()).unwrap();
                    match grass_pushforward(&g, l, n).unwrap() {
                        Some(target) => {
                            assert_eq!(abs.degree(), Some(0));
                            match abs {
                                CohomologyResult::Concentrated { weight, .. } => assert_eq!(weight, target),
                                CohomologyResult::Zero => unreachable!(),
                            }
                        }
                        None => assert!(abs.is_zero(), "{g} on {space}"),
                    }
                    continue;
                }
                let top = v.last().copied().unwrap_or(3);
                for x in lo..=top {
                    let mut next = v.clone();
                    next.push(x);
                    stack.push(next);
                }
            }
        }
    }

    #[test]
    fn localization_examples() {
        let e = Partition::empty();
        let one = Partition::new(vec![1]).unwrap();
        for (d, n) in [(1, 2), (2, 4), (3, 5)] {
            assert_eq!(localization_euler(&e, &e, d, n).unwrap(), BigInt::one());
        }
        assert_eq!(localization_euler(&one, &e, 2, 4).unwrap(), BigInt::from(4));
        assert_eq!(localization_euler(&e, &one, 2, 4).unwrap(), BigInt::zero());
    }

    #[test]
    fn localization_agrees_with_bott_on_full_boxes() {
        for (d, n) in [(2usize, 4usize), (2, 5), (1, 4)] {
            let set = enumerate_box_partitions(d, (n - d) as u32, OrderTag::SizeOrder).unwrap().members;
            for a in &set {
                for b in &set {
                    assert_eq!(localization_euler(a, b, d, n).unwrap(), bott_euler(a, b, d, n).unwrap(), "{a} {b} on Grass({d},{n})");
                }
            }
        }
    }

    #[test]
    fn serre_duality_on_random_bundles() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for (d, n) in [(2usize, 4usize), (2, 5), (3, 6)] {
            let space = grass(d, n);
            let top = space.dim();
            for _ in 0..50 {
                let mut sub: Vec<i64> = (0..d).map(|_| rng.gen_range(-5..=5)).collect();
                let mut quot: Vec<i64> = (0..n - d).map(|_| rng.gen_range(-5..=5)).collect();
                sub.sort_unstable_by(|a, b| b.cmp(a));
                quot.sort_unstable_by(|a, b| b.cmp(a));
                let e = HomogeneousBundle::new(space.clone(), vec![w(&sub), w(&quot)]).unwrap();
                let h = flag_cohomology(&e).unwrap();
                let hd = flag_cohomology(&e.serre_dual()).unwrap();
                assert_eq!(h.dimension(), hd.dimension());
                if let (Some(s), Some(t)) = (h.degree(), hd.degree()) {
                    assert_eq!(s + t, top);
                }
            }
        }
    }
}
