//! Eventually periodic bi-infinite integer sequences.
//!
//! A [`PeriodicSeq`] is a finite core flanked by two periodic tails. The left
//! period is laid out so that its last element sits at `core_start - 1`; the
//! right period starts at `core_start + core.len()`.

use alloc::vec::Vec;
use core::cmp::Ordering;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeqError {
    #[error("the left period must be nonempty")]
    EmptyLeftPeriod,
    #[error("the right period must be nonempty")]
    EmptyRightPeriod,
    #[error("a periodic tail consists only of zeros")]
    ZeroTail,
}

/// Left period, core and right period of the canonical form.
pub type ShapeKey = (Vec<i64>, Vec<i64>, Vec<i64>);

/// Finite presentation of a bi-infinite, eventually periodic sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PeriodicSeq {
    left_period: Vec<i64>,
    core: Vec<i64>,
    right_period: Vec<i64>,
    core_start: i64,
}

impl PeriodicSeq {
    pub fn new(
        left_period: Vec<i64>,
        core: Vec<i64>,
        right_period: Vec<i64>,
        core_start: i64,
    ) -> Result<Self, SeqError> {
        if left_period.is_empty() {
            return Err(SeqError::EmptyLeftPeriod);
        }
        if right_period.is_empty() {
            return Err(SeqError::EmptyRightPeriod);
        }
        Ok(Self { left_period, core, right_period, core_start })
    }

    /// The purely periodic sequence whose block `period` starts at index 0.
    pub fn periodic(period: Vec<i64>) -> Result<Self, SeqError> {
        Self::new(period.clone(), Vec::new(), period, 0)
    }

    pub fn constant(value: i64) -> Self {
        Self { left_period: alloc::vec![value], core: Vec::new(), right_period: alloc::vec![value], core_start: 0 }
    }

    pub fn left_period(&self) -> &[i64] {
        &self.left_period
    }

    pub fn core(&self) -> &[i64] {
        &self.core
    }

    pub fn right_period(&self) -> &[i64] {
        &self.right_period
    }

    pub fn core_start(&self) -> i64 {
        self.core_start
    }

    /// One past the last core index.
    pub fn core_end(&self) -> i64 {
        self.core_start + self.core.len() as i64
    }

    pub fn value_at(&self, i: i64) -> i64 {
        let end = self.core_end();
        if i < self.core_start {
            let p = self.left_period.len() as i64;
            self.left_period[(i - self.core_start).rem_euclid(p) as usize]
        } else if i >= end {
            let p = self.right_period.len() as i64;
            self.right_period[(i - end).rem_euclid(p) as usize]
        } else {
            self.core[(i - self.core_start) as usize]
        }
    }

    /// `shift(n).value_at(i) == self.value_at(i - n)`.
    pub fn shift(&self, n: i64) -> Self {
        let mut out = self.clone();
        out.core_start += n;
        out
    }

    /// Values on the inclusive index range `lo..=hi`.
    pub fn window(&self, lo: i64, hi: i64) -> Vec<i64> {
        (lo..=hi).map(|i| self.value_at(i)).collect()
    }

    pub fn values(&self) -> impl Iterator<Item = i64> + '_ {
        self.left_period.iter().chain(&self.core).chain(&self.right_period).copied()
    }

    /// Every value of the sequence satisfies `pred`.
    pub fn all(&self, pred: impl FnMut(i64) -> bool) -> bool {
        self.values().all(pred)
    }

    pub fn any(&self, pred: impl FnMut(i64) -> bool) -> bool {
        self.values().any(pred)
    }

    fn max_period(&self) -> i64 {
        self.left_period.len().max(self.right_period.len()) as i64
    }

    /// Smallest `j > i` with a nonzero value, if one exists.
    pub fn next_nonzero(&self, i: i64) -> Option<i64> {
        let bound = self.core_end().max(i) + self.right_period.len() as i64 + 1;
        (i + 1..=bound).find(|&j| self.value_at(j) != 0)
    }

    /// Largest `j < i` with a nonzero value, if one exists.
    pub fn prev_nonzero(&self, i: i64) -> Option<i64> {
        let bound = self.core_start.min(i) - self.left_period.len() as i64 - 1;
        (bound..i).rev().find(|&j| self.value_at(j) != 0)
    }

    /// The same sequence with minimal periods and the shortest possible core.
    ///
    /// Two descriptors describe the same sequence exactly when their canonical
    /// forms are equal. A globally periodic sequence gets an empty core, the
    /// lexicographically least rotation of its period, and
    /// `0 <= core_start < period`.
    pub fn canonical(&self) -> Self {
        let lp = primitive(&self.left_period);
        let rp = primitive(&self.right_period);
        let (cs, ce) = (self.core_start, self.core_end());
        let (pl, pr) = (lp.len() as i64, rp.len() as i64);
        let left_ext = |x: i64| lp[(x - cs).rem_euclid(pl) as usize];
        let right_ext = |x: i64| rp[(x - ce).rem_euclid(pr) as usize];
        let reach = pl * pr + pl + pr + 1;

        let mut l = cs;
        while l < ce + reach && self.value_at(l) == left_ext(l) {
            l += 1;
        }
        if l >= ce + reach {
            let (rot, offset) = least_rotation(&lp);
            let start = (cs + offset as i64).rem_euclid(pl);
            return Self { left_period: rot.clone(), core: Vec::new(), right_period: rot, core_start: start };
        }
        let mut r = ce;
        while r > cs - reach && self.value_at(r - 1) == right_ext(r - 1) {
            r -= 1;
        }
        let r = r.max(l);
        let left_period = (l - pl..l).map(left_ext).collect();
        let right_period = (r..r + pr).map(right_ext).collect();
        let core = (l..r).map(|i| self.value_at(i)).collect();
        Self { left_period, core, right_period, core_start: l }
    }

    /// Returns `n` with `other == self.shift(n)` pointwise, if such `n` exists.
    ///
    /// For periodic sequences the returned shift is one representative of its
    /// residue class modulo the period.
    pub fn shift_to(&self, other: &Self) -> Option<i64> {
        let a = self.canonical();
        let b = other.canonical();
        (a.left_period == b.left_period && a.core == b.core && a.right_period == b.right_period)
            .then(|| b.core_start - a.core_start)
    }

    /// Pointwise equality of the described sequences.
    pub fn same_sequence(&self, other: &Self) -> bool {
        self.shift_to(other) == Some(0) || self.canonical() == other.canonical()
    }

    /// The sequence of nonzero values, in order, re-anchored at index 0.
    ///
    /// Only the order of nonzero entries survives, so the result is meaningful
    /// up to shift.
    pub fn without_zeros(&self) -> Result<Self, SeqError> {
        let strip = |v: &[i64]| v.iter().copied().filter(|&x| x != 0).collect::<Vec<_>>();
        let left_period = strip(&self.left_period);
        let right_period = strip(&self.right_period);
        if left_period.is_empty() || right_period.is_empty() {
            return Err(SeqError::ZeroTail);
        }
        Ok(Self { left_period, core: strip(&self.core), right_period, core_start: 0 })
    }

    /// Shift-invariant key: equal keys iff the sequences agree up to shift.
    pub fn shape_key(&self) -> ShapeKey {
        let c = self.canonical();
        (c.left_period, c.core, c.right_period)
    }

    pub(crate) fn from_parts_unchecked(
        left_period: Vec<i64>,
        core: Vec<i64>,
        right_period: Vec<i64>,
        core_start: i64,
    ) -> Self {
        debug_assert!(!left_period.is_empty() && !right_period.is_empty());
        Self { left_period, core, right_period, core_start }
    }

    /// Rebuilds the sequence after applying a local rule to every index.
    ///
    /// `rule(self, i)` may only inspect indices within `max_period` of `i`
    /// once `i` is inside a tail; the result is then periodic there with the
    /// same period lengths.
    pub(crate) fn map_local<E>(
        &self,
        mut rule: impl FnMut(&Self, i64) -> Result<i64, E>,
    ) -> Result<Self, E> {
        let (pl, pr) = (self.left_period.len() as i64, self.right_period.len() as i64);
        let reach = self.max_period();
        let new_start = self.core_start - 2 * reach;
        let new_end = self.core_end() + 2 * reach;
        let core = (new_start..new_end).map(|i| rule(self, i)).collect::<Result<Vec<_>, E>>()?;
        let left = (new_start - pl..new_start).map(|i| rule(self, i)).collect::<Result<Vec<_>, E>>()?;
        let right = (new_end..new_end + pr).map(|i| rule(self, i)).collect::<Result<Vec<_>, E>>()?;
        Ok(Self::from_parts_unchecked(left, core, right, new_start).canonical())
    }
}

/// Shortest block whose repetition gives `period`.
fn primitive(period: &[i64]) -> Vec<i64> {
    let n = period.len();
    for p in 1..=n {
        if n % p == 0 && (p..n).all(|i| period[i] == period[i - p]) {
            return period[..p].to_vec();
        }
    }
    period.to_vec()
}

fn least_rotation(period: &[i64]) -> (Vec<i64>, usize) {
    let n = period.len();
    let rotated = |k: usize| (0..n).map(move |i| period[(k + i) % n]);
    let best = (0..n)
        .min_by(|&a, &b| {
            rotated(a).cmp(rotated(b)).then(Ordering::Equal)
        })
        .unwrap_or(0);
    (rotated(best).collect(), best)
}
