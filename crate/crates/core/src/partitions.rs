//! Partitions, skew shapes and generalized partitions.
//!
//! A [`Partition`] stores strictly positive, weakly decreasing parts; trailing
//! zeros are trimmed on construction, so `(2,1,0)` and `(2,1)` are the same
//! value.  A [`GeneralizedPartition`] is a weakly decreasing tuple of
//! arbitrary integers with a *declared* length: zeros are significant and are
//! kept, so `(1,0)` and `(1)` differ.

use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PartitionError {
    #[error("parts must be weakly decreasing, got {0:?}")]
    NotDecreasing(Vec<i64>),
    #[error("partition parts must be nonnegative, got {0:?}")]
    NegativePart(Vec<i64>),
    #[error("cannot parse {0:?} as an integer tuple")]
    Parse(String),
    #[error("declared length {declared} is shorter than the {given} given parts")]
    TooManyParts { given: usize, declared: usize },
}

fn is_weakly_decreasing(parts: &[i64]) -> bool {
    parts.windows(2).all(|w| w[0] >= w[1])
}

fn parse_int_tuple(s: &str) -> Result<Vec<i64>, PartitionError> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|tok| {
            tok.trim()
                .parse::<i64>()
                .map_err(|_| PartitionError::Parse(s.to_string()))
        })
        .collect()
}

/// An integer partition: weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<i64>,
}

impl Partition {
    /// Builds a partition, trimming trailing zeros.  Panics if the parts are
    /// not weakly decreasing or contain a negative entry.
    pub fn new(parts: impl Into<Vec<i64>>) -> Self {
        Self::try_new(parts.into()).expect("invalid partition")
    }

    pub fn try_new(mut parts: Vec<i64>) -> Result<Self, PartitionError> {
        if !is_weakly_decreasing(&parts) {
            return Err(PartitionError::NotDecreasing(parts));
        }
        if parts.last().is_some_and(|&p| p < 0) {
            return Err(PartitionError::NegativePart(parts));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Self { parts })
    }

    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    /// Parses a comma separated list such as `"3,2,2"`.  The empty string and
    /// `"0"` both denote the empty partition.
    pub fn parse(s: &str) -> Result<Self, PartitionError> {
        Self::try_new(parse_int_tuple(s)?)
    }

    pub fn parts(&self) -> &[i64] {
        &self.parts
    }

    /// The i-th part, 0-indexed; zero beyond the length.
    pub fn part(&self, i: usize) -> i64 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn size(&self) -> i64 {
        self.parts.iter().sum()
    }

    pub fn length(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Containment of Young diagrams: `other` fits inside `self`.
    pub fn contains(&self, other: &Partition) -> bool {
        (0..other.length()).all(|i| self.part(i) >= other.part(i))
    }

    /// Conjugate (transposed) diagram: column lengths become rows.
    pub fn conjugate(&self) -> Partition {
        let mut cols = Vec::new();
        let mut j = 1;
        loop {
            let len = self.parts.iter().filter(|&&p| p >= j).count() as i64;
            if len == 0 {
                break;
            }
            cols.push(len);
            j += 1;
        }
        Partition { parts: cols }
    }

    /// Pads with zeros to a generalized partition of declared length `l`.
    /// Panics if the partition has more than `l` parts.
    pub fn to_generalized(&self, l: usize) -> GeneralizedPartition {
        assert!(self.length() <= l, "partition longer than declared length");
        let mut parts = self.parts.clone();
        parts.resize(l, 0);
        GeneralizedPartition { parts }
    }

    /// Parse-compatible compact form: `"3,2,1"`, with `"0"` for the empty
    /// partition.
    pub fn compact(&self) -> String {
        if self.parts.is_empty() {
            "0".to_string()
        } else {
            self.parts
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(",")
        }
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

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A skew shape `outer/inner` with `inner` contained in `outer`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ShapeError {
    #[error("inner shape {inner} not contained in outer shape {outer}")]
    NotContained { outer: Partition, inner: Partition },
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self, ShapeError> {
        if !outer.contains(&inner) {
            return Err(ShapeError::NotContained { outer, inner });
        }
        Ok(Self { outer, inner })
    }

    pub fn from_partition(outer: Partition) -> Self {
        Self {
            outer,
            inner: Partition::empty(),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn cell_count(&self) -> i64 {
        self.outer.size() - self.inner.size()
    }

    /// Transposed skew shape.
    pub fn conjugate(&self) -> SkewShape {
        SkewShape {
            outer: self.outer.conjugate(),
            inner: self.inner.conjugate(),
        }
    }
}

/// A weakly decreasing tuple of integers with significant length.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GeneralizedPartition {
    parts: Vec<i64>,
}

impl GeneralizedPartition {
    /// Panics if the parts are not weakly decreasing.
    pub fn new(parts: impl Into<Vec<i64>>) -> Self {
        Self::try_new(parts.into()).expect("invalid generalized partition")
    }

    pub fn try_new(parts: Vec<i64>) -> Result<Self, PartitionError> {
        if !is_weakly_decreasing(&parts) {
            return Err(PartitionError::NotDecreasing(parts));
        }
        Ok(Self { parts })
    }

    /// Parses a comma separated list and zero-pads it to declared length
    /// `rank` (zeros are inserted at the correct sorted position).
    pub fn parse(s: &str, rank: usize) -> Result<Self, PartitionError> {
        let parts = parse_int_tuple(s)?;
        // Special case: "0" denotes the zero weight at any rank.
        let parts = if parts == [0] { Vec::new() } else { parts };
        if parts.len() > rank {
            return Err(PartitionError::TooManyParts {
                given: parts.len(),
                declared: rank,
            });
        }
        Ok(Self::try_new(parts)?.pad_to(rank))
    }

    pub fn parts(&self) -> &[i64] {
        &self.parts
    }

    /// Declared length (zeros count).
    pub fn length(&self) -> usize {
        self.parts.len()
    }

    pub fn size(&self) -> i64 {
        self.parts.iter().sum()
    }

    /// The i-th part, 1-indexed as in the column-length formulas; zero
    /// outside `1..=length`.
    pub fn part1(&self, i: i64) -> i64 {
        if i >= 1 && (i as usize) <= self.parts.len() {
            self.parts[i as usize - 1]
        } else {
            0
        }
    }

    /// Generalized column length, defined for every integer `j`:
    /// for `j >= 1` the number of parts `>= j`; for `j <= 0` minus the number
    /// of parts `<= j - 1`.  For `(5,3,2,1,-1,-2)` this gives column lengths
    /// `4` at `j = 1`, `-2` at `j = 0` and `-1` at `j = -1`.
    pub fn column_length(&self, j: i64) -> i64 {
        if j >= 1 {
            self.parts.iter().filter(|&&p| p >= j).count() as i64
        } else {
            -(self.parts.iter().filter(|&&p| p <= j - 1).count() as i64)
        }
    }

    /// Inserts zeros (at the sorted position) to reach declared length `l`.
    /// Panics if already longer than `l`.
    pub fn pad_to(&self, l: usize) -> GeneralizedPartition {
        assert!(self.parts.len() <= l, "cannot pad, already longer");
        let split = self.parts.iter().position(|&p| p < 0).unwrap_or(self.parts.len());
        let mut parts = Vec::with_capacity(l);
        parts.extend_from_slice(&self.parts[..split]);
        parts.resize(l - (self.parts.len() - split), 0);
        parts.extend_from_slice(&self.parts[split..]);
        GeneralizedPartition { parts }
    }

    /// Adds `d` to every part.
    pub fn shifted(&self, d: i64) -> GeneralizedPartition {
        GeneralizedPartition {
            parts: self.parts.iter().map(|p| p + d).collect(),
        }
    }

    /// `(-p_l - 1, ..., -p_1 - 1)`: the dual weight of the same length.
    pub fn dual(&self) -> GeneralizedPartition {
        GeneralizedPartition {
            parts: self.parts.iter().rev().map(|p| -p - 1).collect(),
        }
    }

    pub fn is_partition_shape(&self) -> bool {
        self.parts.last().is_none_or(|&p| p >= 0)
    }

    pub fn to_partition(&self) -> Option<Partition> {
        if self.is_partition_shape() {
            Some(Partition::new(self.parts.clone()))
        } else {
            None
        }
    }

    pub fn compact(&self) -> String {
        if self.parts.is_empty() {
            "0".to_string()
        } else {
            self.parts
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(",")
        }
    }
}

impl fmt::Display for GeneralizedPartition {
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

impl fmt::Debug for GeneralizedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All partitions with `size <= max_size` and `length <= max_length`,
/// ordered by size, then lexicographically descending within a size.
pub fn enumerate_partitions(max_size: i64, max_length: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    for n in 0..=max_size.max(0) {
        let mut buf = Vec::new();
        fill_partitions(n, n, max_length, &mut buf, &mut out);
    }
    out
}

fn fill_partitions(
    remaining: i64,
    max_part: i64,
    slots: usize,
    buf: &mut Vec<i64>,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        out.push(Partition {
            parts: buf.clone(),
        });
        return;
    }
    if slots == 0 {
        return;
    }
    let hi = max_part.min(remaining);
    for p in (1..=hi).rev() {
        buf.push(p);
        fill_partitions(remaining - p, p, slots - 1, buf, out);
        buf.pop();
    }
}

/// All generalized partitions of exactly the given length with every part in
/// `[-max_abs, max_abs]`, in lexicographically ascending order.
pub fn enumerate_generalized(max_abs: i64, length: usize) -> Vec<GeneralizedPartition> {
    let mut out = Vec::new();
    let mut buf = Vec::new();
    fill_generalized(max_abs, length, &mut buf, &mut out);
    out
}

fn fill_generalized(
    max_abs: i64,
    slots: usize,
    buf: &mut Vec<i64>,
    out: &mut Vec<GeneralizedPartition>,
) {
    if slots == 0 {
        out.push(GeneralizedPartition { parts: buf.clone() });
        return;
    }
    let hi = buf.last().copied().unwrap_or(max_abs);
    for p in -max_abs..=hi {
        buf.push(p);
        fill_generalized(max_abs, slots - 1, buf, out);
        buf.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(parts: &[i64]) -> Partition {
        Partition::new(parts.to_vec())
    }

    /// Transposes by building the boolean cell grid, independently of the
    /// column-counting rule used by `conjugate`.
    fn conjugate_by_grid(lam: &Partition) -> Partition {
        let rows = lam.length();
        let cols = lam.part(0) as usize;
        let mut out = Vec::new();
        for c in 0..cols {
            let mut len = 0;
            for r in 0..rows {
                if (lam.part(r) as usize) > c {
                    len += 1;
                }
            }
            out.push(len);
        }
        Partition::new(out)
    }

    /// Number of partitions of `n`, by the classical two-variable recurrence
    /// p(n, k) = p(n-k, k) + p(n, k-1).
    fn partition_count(n: i64) -> i64 {
        fn count(n: i64, max: i64) -> i64 {
            if n == 0 {
                return 1;
            }
            if n < 0 || max == 0 {
                return 0;
            }
            count(n - max, max) + count(n, max - 1)
        }
        count(n, n)
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[5, 3, 2, 1]).conjugate(), p(&[4, 3, 2, 1, 1]));
        assert_eq!(conjugate_by_grid(&p(&[5, 3, 2, 1])), p(&[4, 3, 2, 1, 1]));
        assert_eq!(p(&[]).conjugate(), p(&[]));
        assert_eq!(p(&[1, 1, 1]).conjugate(), p(&[3]));
    }

    #[test]
    fn trailing_zeros_trimmed() {
        assert_eq!(p(&[2, 1, 0, 0]), p(&[2, 1]));
        assert_eq!(p(&[0]), Partition::empty());
    }

    #[test]
    #[should_panic(expected = "invalid partition")]
    fn rejects_increasing() {
        p(&[1, 2]);
    }

    #[test]
    fn containment() {
        assert!(p(&[3, 2]).contains(&p(&[2, 2])));
        assert!(!p(&[3, 2]).contains(&p(&[2, 2, 1])));
        assert!(p(&[3, 2]).contains(&p(&[])));
        assert!(!p(&[2, 2]).contains(&p(&[3])));
    }

    #[test]
    fn enumerate_small() {
        let all = enumerate_partitions(2, 2);
        assert_eq!(all, vec![p(&[]), p(&[1]), p(&[2]), p(&[1, 1])]);
        // size <= 4, length <= 4 gives 1+1+2+3+5 = 12 shapes
        assert_eq!(enumerate_partitions(4, 4).len(), 12);
        let total: i64 = (0..=4).map(partition_count).sum();
        assert_eq!(total, 12);
    }

    #[test]
    fn enumerate_respects_length_bound() {
        let all = enumerate_partitions(4, 2);
        assert!(all.iter().all(|q| q.length() <= 2));
        assert!(!all.contains(&p(&[2, 1, 1])));
        assert!(all.contains(&p(&[2, 2])));
    }

    #[test]
    fn generalized_column_lengths() {
        let gp = GeneralizedPartition::new(vec![5, 3, 2, 1, -1, -2]);
        assert_eq!(gp.column_length(1), 4);
        assert_eq!(gp.column_length(0), -2);
        assert_eq!(gp.column_length(-1), -1);
        assert_eq!(gp.column_length(-2), 0);
        assert_eq!(gp.column_length(5), 1);
        assert_eq!(gp.column_length(6), 0);
    }

    #[test]
    fn column_length_matches_conjugate_on_partitions() {
        for lam in enumerate_partitions(8, 5) {
            let gp = GeneralizedPartition::new(lam.parts().to_vec());
            let conj = lam.conjugate();
            for j in 1..=9 {
                assert_eq!(gp.column_length(j), conj.part(j as usize - 1));
            }
            for j in -3..=0 {
                assert_eq!(gp.column_length(j), 0);
            }
        }
    }

    #[test]
    fn generalized_enumeration_order() {
        let all = enumerate_generalized(1, 2);
        let expect: Vec<GeneralizedPartition> = [
            vec![-1, -1],
            vec![0, -1],
            vec![0, 0],
            vec![1, -1],
            vec![1, 0],
            vec![1, 1],
        ]
        .into_iter()
        .map(GeneralizedPartition::new)
        .collect();
        assert_eq!(all, expect);
    }

    #[test]
    fn padding_and_shift() {
        let gp = GeneralizedPartition::new(vec![1, -1]);
        assert_eq!(gp.pad_to(4), GeneralizedPartition::new(vec![1, 0, 0, -1]));
        assert_eq!(gp.shifted(2), GeneralizedPartition::new(vec![3, 1]));
        assert_eq!(gp.dual(), GeneralizedPartition::new(vec![0, -2]));
        assert_eq!(gp.dual().dual(), gp);
    }

    #[test]
    fn parse_forms() {
        assert_eq!(Partition::parse("3,2,2").unwrap(), p(&[3, 2, 2]));
        assert_eq!(Partition::parse("").unwrap(), Partition::empty());
        assert_eq!(Partition::parse("0").unwrap(), Partition::empty());
        assert!(Partition::parse("2,3").is_err());
        assert!(Partition::parse("a,b").is_err());
        assert!(Partition::parse("-1").is_err());
        let gp = GeneralizedPartition::parse("2,-1", 3).unwrap();
        assert_eq!(gp, GeneralizedPartition::new(vec![2, 0, -1]));
        assert_eq!(GeneralizedPartition::parse("0", 2).unwrap().parts(), &[0, 0]);
        assert!(GeneralizedPartition::parse("1,1,1", 2).is_err());
    }

    #[test]
    fn skew_validation() {
        assert!(SkewShape::new(p(&[3, 2]), p(&[2])).is_ok());
        assert!(SkewShape::new(p(&[2]), p(&[3])).is_err());
        let sk = SkewShape::new(p(&[3, 2]), p(&[1, 1])).unwrap();
        assert_eq!(sk.cell_count(), 3);
        let skc = sk.conjugate();
        assert_eq!(skc.outer(), &p(&[2, 2, 1]));
        assert_eq!(skc.inner(), &p(&[2]));
    }

    #[test]
    fn display_forms() {
        assert_eq!(p(&[3, 2]).to_string(), "(3,2)");
        assert_eq!(Partition::empty().to_string(), "()");
        assert_eq!(p(&[3, 2]).compact(), "3,2");
        assert_eq!(Partition::empty().compact(), "0");
        assert_eq!(
            GeneralizedPartition::new(vec![1, 0, -2]).to_string(),
            "(1,0,-2)"
        );
    }

    #[test]
    fn conjugate_involution_exhaustive() {
        for lam in enumerate_partitions(12, 12) {
            assert_eq!(lam.conjugate().conjugate(), lam);
            assert_eq!(lam.conjugate(), conjugate_by_grid(&lam));
            assert_eq!(lam.conjugate().size(), lam.size());
        }
        assert_eq!(enumerate_partitions(12, 12).len(), {
            let total: i64 = (0..=12).map(partition_count).sum();
            total as usize
        });
    }

    proptest! {
        #[test]
        fn prop_pad_keeps_order(parts in proptest::collection::vec(-5i64..=5, 0..5), extra in 0usize..4) {
            let mut sorted = parts.clone();
            sorted.sort_unstable_by(|a, b| b.cmp(a));
            let gp = GeneralizedPartition::new(sorted);
            let padded = gp.pad_to(gp.length() + extra);
            prop_assert!(padded.parts().windows(2).all(|w| w[0] >= w[1]));
            prop_assert_eq!(padded.size(), gp.size());
            prop_assert_eq!(padded.length(), gp.length() + extra);
        }

        #[test]
        fn prop_contains_conjugate(a in 0i64..=8, b in 0i64..=8) {
            // containment is preserved under conjugation
            let all = enumerate_partitions(a.min(b), 6);
            for lam in &all {
                for mu in &all {
                    prop_assert_eq!(
                        lam.contains(mu),
                        lam.conjugate().contains(&mu.conjugate())
                    );
                }
            }
        }
    }
}
