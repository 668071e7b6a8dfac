//! Quiddity sequences `(a_i)` of infinite friezes.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::seq::{PeriodicSeq, SeqError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuiddityError {
    #[error(transparent)]
    Shape(#[from] SeqError),
    #[error("quiddity value {value} at index {index} is below 1")]
    NonPositive { index: i64, value: i64 },
    #[error("validation depth must be at least 2, got {0}")]
    DepthTooSmall(i64),
}

/// An eventually periodic sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuiddityDescriptor {
    seq: PeriodicSeq,
}

impl QuiddityDescriptor {
    pub fn new(
        left_period: Vec<i64>,
        core: Vec<i64>,
        right_period: Vec<i64>,
        core_start: i64,
    ) -> Result<Self, QuiddityError> {
        Self::from_seq(PeriodicSeq::new(left_period, core, right_period, core_start)?)
    }

    pub fn from_seq(seq: PeriodicSeq) -> Result<Self, QuiddityError> {
        let cs = seq.core_start();
        let lp = seq.left_period().len() as i64;
        let checks = seq
            .left_period()
            .iter()
            .enumerate()
            .map(|(k, &v)| (cs - lp + k as i64, v))
            .chain(seq.core().iter().enumerate().map(|(k, &v)| (cs + k as i64, v)))
            .chain(seq.right_period().iter().enumerate().map(|(k, &v)| (seq.core_end() + k as i64, v)));
        for (index, value) in checks {
            if value < 1 {
                return Err(QuiddityError::NonPositive { index, value });
            }
        }
        Ok(Self { seq })
    }

    pub fn constant(value: i64) -> Result<Self, QuiddityError> {
        Self::from_seq(PeriodicSeq::constant(value))
    }

    pub fn periodic(period: Vec<i64>) -> Result<Self, QuiddityError> {
        Self::from_seq(PeriodicSeq::periodic(period)?)
    }

    pub fn seq(&self) -> &PeriodicSeq {
        &self.seq
    }

    pub fn left_period(&self) -> &[i64] {
        self.seq.left_period()
    }

    pub fn core(&self) -> &[i64] {
        self.seq.core()
    }

    pub fn right_period(&self) -> &[i64] {
        self.seq.right_period()
    }

    pub fn core_start(&self) -> i64 {
        self.seq.core_start()
    }

    pub fn core_end(&self) -> i64 {
        self.seq.core_end()
    }

    pub fn value_at(&self, i: i64) -> i64 {
        self.seq.value_at(i)
    }

    pub fn shift(&self, n: i64) -> Self {
        Self { seq: self.seq.shift(n) }
    }

    pub fn window(&self, lo: i64, hi: i64) -> Vec<i64> {
        self.seq.window(lo, hi)
    }

    /// Checks `t(i, j) >= 1` for every `0 < j - i <= depth` whose row starts
    /// within one period of the core on either side.
    ///
    /// The first nonpositive entry in order of increasing `j - i`, then
    /// increasing `i`, is reported as the witness.
    pub fn validate(&self, depth: i64) -> Result<ValidationReport, QuiddityError> {
        if depth < 2 {
            return Err(QuiddityError::DepthTooSmall(depth));
        }
        let lo = self.core_start() - self.left_period().len() as i64 - depth;
        let hi = self.core_end() + self.right_period().len() as i64;
        let mut best: Option<(i64, i64, BigInt)> = None;
        for i in lo..hi {
            // t(i, i+1) = 1, t(i, j+1) = a_j t(i, j) - t(i, j-1)
            let (mut prev, mut cur) = (BigInt::zero(), BigInt::one());
            for band in 2..=depth {
                if best.as_ref().is_some_and(|(bi, bj, _)| band > bj - bi) {
                    break;
                }
                let j = i + band - 1;
                let next = &cur * self.value_at(j) - &prev;
                prev = core::mem::replace(&mut cur, next);
                if !cur.is_positive() {
                    let better = match &best {
                        None => true,
                        Some((bi, bj, _)) => (band, i) < (bj - bi, *bi),
                    };
                    if better {
                        best = Some((i, i + band, cur.clone()));
                    }
                    break;
                }
            }
        }
        Ok(match best {
            Some(w) => ValidationReport { status: ValidationStatus::Invalid, witness: Some(w), depth },
            None => ValidationReport { status: ValidationStatus::ValidToDepth(depth), witness: None, depth },
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ValidationStatus {
    ValidToDepth(i64),
    Invalid,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub status: ValidationStatus,
    /// `(i, j, t(i, j))` with `t(i, j) <= 0`.
    pub witness: Option<(i64, i64, BigInt)>,
    pub depth: i64,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        matches!(self.status, ValidationStatus::ValidToDepth(_))
    }
}
