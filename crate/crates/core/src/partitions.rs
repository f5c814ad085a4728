//! Box-bounded partitions and the total orders used to index collections.
//!
//! A [`Partition`] is stored with trailing zeros stripped, so there is exactly
//! one value per Young diagram. Box membership is always checked against an
//! explicit `(rows, cols)` pair, never against the stored length.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A non-increasing sequence of non-negative integers, trailing zeros removed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    /// Builds a partition, rejecting sequences that increase anywhere.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(parts));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Self { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of non-zero rows.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `i`, reading missing rows as zero.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Total number of boxes.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn fits_box(&self, rows: usize, cols: u32) -> bool {
        self.len() <= rows && self.part(0) <= cols
    }

    /// Parts padded with zeros to `len` entries. Panics if the partition is longer.
    pub fn padded(&self, len: usize) -> Vec<u32> {
        assert!(self.len() <= len, "partition {self} does not fit in {len} rows");
        let mut v = self.parts.clone();
        v.resize(len, 0);
        v
    }

    /// The transposed diagram.
    pub fn conjugate(&self) -> Partition {
        let cols = self.part(0) as usize;
        let parts = (0..cols).map(|c| self.parts.iter().filter(|&&p| p as usize > c).count() as u32).collect();
        Partition { parts }
    }

    /// True iff the diagram of `other` sits inside the diagram of `self`.
    pub fn contains(&self, other: &Partition) -> bool {
        (0..other.len()).all(|i| other.part(i) <= self.part(i))
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// `contains(p, q)`: every row of `q` is at most the matching row of `p`.
pub fn contains(p: &Partition, q: &Partition) -> bool {
    p.contains(q)
}

pub fn conjugate(p: &Partition) -> Partition {
    p.conjugate()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OrderTag {
    /// Ascending size, ties broken graded-reverse-lexicographically.
    SizeOrder,
    /// A linear extension of diagram containment (smaller diagrams first).
    ContainmentOrder,
}

impl OrderTag {
    pub fn as_str(self) -> &'static str {
        match self {
            OrderTag::SizeOrder => "size_order",
            OrderTag::ContainmentOrder => "containment_order",
        }
    }
}

/// Graded reverse-lexicographic comparison.
///
/// Smaller size first; on equal size the partition with the larger entry at
/// the last differing row comes first, so `(1,1)` precedes `(2)`.
pub fn grevlex_cmp(a: &Partition, b: &Partition) -> Ordering {
    a.size().cmp(&b.size()).then_with(|| {
        let len = a.len().max(b.len());
        for i in (0..len).rev() {
            match a.part(i).cmp(&b.part(i)) {
                Ordering::Equal => continue,
                other => return other.reverse(),
            }
        }
        Ordering::Equal
    })
}

/// Comparison realizing `tag` as a total order.
///
/// Both tags resolve to graded reverse-lex: it orders by size, so it is
/// already a linear extension of containment, and using the same tie-break
/// keeps the two orders reproducible.
pub fn order_cmp(tag: OrderTag, a: &Partition, b: &Partition) -> Ordering {
    match tag {
        OrderTag::SizeOrder | OrderTag::ContainmentOrder => grevlex_cmp(a, b),
    }
}

/// The partitions of a `box_rows x box_cols` box, sorted by `order_tag`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderedPartitionSet {
    pub box_rows: usize,
    pub box_cols: u32,
    pub members: Vec<Partition>,
    pub order_tag: OrderTag,
}

impl OrderedPartitionSet {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn index_of(&self, p: &Partition) -> Option<usize> {
        self.members.iter().position(|q| q == p)
    }
}

/// All partitions with at most `rows` rows and at most `cols` columns.
pub fn enumerate_box_partitions(rows: usize, cols: u32, order_tag: OrderTag) -> Result<OrderedPartitionSet> {
    if rows == 0 {
        return Err(Error::InvalidArgument("box must have at least one row".into()));
    }
    let mut members = Vec::new();
    let mut current = Vec::with_capacity(rows);
    fill_box(rows, cols, &mut current, &mut members);
    members.sort_by(|a, b| order_cmp(order_tag, a, b));
    Ok(OrderedPartitionSet { box_rows: rows, box_cols: cols, members, order_tag })
}

fn fill_box(rows: usize, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if current.len() == rows {
        let mut parts = current.clone();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        out.push(Partition { parts });
        return;
    }
    for p in 0..=max_part {
        current.push(p);
        fill_box(rows, p, current, out);
        current.pop();
    }
}

/// Binomial coefficient as u128; enough for every box this crate enumerates.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    // Independent oracle: every lattice point of [0, cols]^rows, keep the monotone ones.
    fn brute_force_box(rows: usize, cols: u32) -> Vec<Partition> {
        let total = (cols as usize + 1).pow(rows as u32);
        let mut out = Vec::new();
        for code in 0..total {
            let mut c = code;
            let mut v = Vec::with_capacity(rows);
            for _ in 0..rows {
                v.push((c % (cols as usize + 1)) as u32);
                c /= cols as usize + 1;
            }
            if v.windows(2).all(|w| w[0] >= w[1]) {
                out.push(p(&v));
            }
        }
        out
    }

    #[test]
    fn two_by_two_box_in_size_order() {
        let set = enumerate_box_partitions(2, 2, OrderTag::SizeOrder).unwrap();
        let expected = vec![p(&[]), p(&[1]), p(&[1, 1]), p(&[2]), p(&[2, 1]), p(&[2, 2])];
        assert_eq!(set.members, expected);
        assert_eq!(brute_force_box(2, 2).len(), 6);
    }

    #[test]
    fn empty_box_is_singleton() {
        let set = enumerate_box_partitions(1, 0, OrderTag::SizeOrder).unwrap();
        assert_eq!(set.members, vec![Partition::empty()]);
    }

    #[test]
    fn three_by_two_box_has_ten() {
        let set = enumerate_box_partitions(3, 2, OrderTag::SizeOrder).unwrap();
        assert_eq!(set.len(), 10);
        assert_eq!(brute_force_box(3, 2).len(), 10);
    }

    #[test]
    fn zero_rows_rejected() {
        assert!(enumerate_box_partitions(0, 3, OrderTag::SizeOrder).is_err());
    }

    #[test]
    fn counts_match_brute_force_and_binomial() {
        for rows in 1..=6usize {
            for cols in 0..=(12 - rows) as u32 {
                let set = enumerate_box_partitions(rows, cols, OrderTag::ContainmentOrder).unwrap();
                let mut brute = brute_force_box(rows, cols);
                brute.sort();
                let mut ours = set.members.clone();
                ours.sort();
                assert_eq!(ours, brute, "box {rows}x{cols}");
                assert_eq!(set.len() as u128, binomial((rows as u64) + cols as u64, rows as u64));
            }
        }
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[2, 2]).conjugate(), p(&[2, 2]));
    }

    #[test]
    fn contains_examples() {
        assert!(contains(&p(&[2, 1]), &p(&[1, 1])));
        assert!(!contains(&p(&[2]), &p(&[1, 1])));
        assert!(contains(&p(&[4, 2, 1]), &Partition::empty()));
        assert!(contains(&Partition::empty(), &Partition::empty()));
    }

    #[test]
    fn trailing_zeros_are_normalized() {
        assert_eq!(p(&[2, 1, 0, 0]), p(&[2, 1]));
        assert!(Partition::new(vec![1, 2]).is_err());
    }

    #[test]
    fn conjugate_maps_box_onto_transposed_box() {
        for rows in 1..=4usize {
            for cols in 1..=4u32 {
                let set = enumerate_box_partitions(rows, cols, OrderTag::SizeOrder).unwrap();
                let mut images: Vec<_> = set.members.iter().map(|q| q.conjugate()).collect();
                assert!(images.iter().all(|q| q.fits_box(cols as usize, rows as u32)));
                images.sort();
                let mut target = enumerate_box_partitions(cols as usize, rows as u32, OrderTag::SizeOrder).unwrap().members;
                target.sort();
                assert_eq!(images, target);
            }
        }
    }

    proptest! {
        #[test]
        fn conjugate_is_involution(v in proptest::collection::vec(0u32..6, 0..6)) {
            let mut v = v;
            v.sort_unstable_by(|a, b| b.cmp(a));
            let q = Partition::new(v).unwrap();
            prop_assert_eq!(q.conjugate().conjugate(), q.clone());
            prop_assert_eq!(q.conjugate().size(), q.size());
        }

        #[test]
        fn orders_are_linear_extensions(rows in 1usize..5, cols in 0u32..5) {
            for tag in [OrderTag::SizeOrder, OrderTag::ContainmentOrder] {
                let set = enumerate_box_partitions(rows, cols, tag).unwrap();
                for (i, a) in set.members.iter().enumerate() {
                    for (j, b) in set.members.iter().enumerate() {
                        if a.size() < b.size() {
                            prop_assert!(i < j);
                        }
                        if b.contains(a) && a != b {
                            prop_assert!(i < j);
                        }
                    }
                }
            }
        }
    }
}
