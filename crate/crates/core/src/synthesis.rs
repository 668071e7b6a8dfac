//! Construction of an admissible strip triangulation from a quiddity sequence.
//!
//! Step A repeatedly cuts ears: every position holding a 1 receives the
//! peripheral arc over it, is set to 0, and its nearest nonzero neighbours
//! lose one. The residual after Step A has only zeros and values `>= 2`.
//!
//! Step B joins every position `p` with residual `b_p >= 2` to the
//! consecutive upper points `u_p, ..., u_p + d_p`, where `d_p = b_p - 2` and
//! `u_q = u_p + d_p` for consecutive such positions `p < q`. This is the
//! fountain construction in closed form; in particular a run of 2s between
//! two larger values is joined to the upper point the two share.
//!
//! Step C reads the shape of the upper boundary off which tails still
//! contain values above 2.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use thiserror::Error;

use crate::frieze::FriezeView;
use crate::quiddity::QuiddityDescriptor;
use crate::seq::{PeriodicSeq, SeqError, ShapeKey};
use crate::strip::{Arc, M2Class, StripError, StripTriangulation};

pub const DEFAULT_CAP: usize = 1000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SynthesisError {
    #[error("positions {0} and {1} both hold 1 with only zeros between them")]
    AdjacentOnes(i64, i64),
    #[error("residual at {index} would drop to {value}")]
    Exhausted { index: i64, value: i64 },
    #[error(transparent)]
    Seq(#[from] SeqError),
    #[error("quiddity is invalid: t({i}, {j}) = {value}")]
    InvalidQuiddity { i: i64, j: i64, value: alloc::string::String },
    #[error("step A did not settle within {0} passes")]
    CapReached(usize),
    #[error("anchor {index} has residual {value}, not above 2")]
    BadAnchor { index: i64, value: i64 },
    #[error("step flags are inconsistent")]
    InconsistentFlags,
    #[error("window [{0}, {1}] is empty")]
    EmptyWindow(i64, i64),
    #[error(transparent)]
    Strip(#[from] StripError),
}

/// What happened during one Step A pass, restricted to the tracked region.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PassRecord {
    /// Positions holding 1 before the pass.
    pub ones: Vec<i64>,
    /// Peripheral arcs added by the pass.
    pub arcs: Vec<(i64, i64)>,
    /// Positions that lost 2 because both nearest nonzero neighbours were 1.
    pub double_drops: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SynthesisState {
    residual: PeriodicSeq,
    passes: usize,
    region: (i64, i64),
    arcs: BTreeSet<(i64, i64)>,
    trace: Vec<PassRecord>,
}

impl SynthesisState {
    /// Starts Step A on `q`, recording arcs with an endpoint in `region`.
    pub fn new(q: &QuiddityDescriptor, region: (i64, i64)) -> Self {
        Self { residual: q.seq().clone(), passes: 0, region, arcs: BTreeSet::new(), trace: Vec::new() }
    }

    pub fn residual(&self) -> &PeriodicSeq {
        &self.residual
    }

    pub fn passes(&self) -> usize {
        self.passes
    }

    pub fn region(&self) -> (i64, i64) {
        self.region
    }

    pub fn arcs(&self) -> &BTreeSet<(i64, i64)> {
        &self.arcs
    }

    pub fn trace(&self) -> &[PassRecord] {
        &self.trace
    }

    fn in_region(&self, i: i64) -> bool {
        self.region.0 <= i && i <= self.region.1
    }

    pub fn has_ones(&self) -> bool {
        self.residual.any(|v| v == 1)
    }

    fn region_cleared(&self) -> bool {
        (self.region.0..=self.region.1).all(|i| self.residual.value_at(i) == 0)
    }

    /// One simultaneous Step A pass over the whole sequence.
    pub fn step_a_pass(&self) -> Result<Self, SynthesisError> {
        let r = &self.residual;
        let neighbours = |i: i64| -> Result<(i64, i64), SynthesisError> {
            let prev = r.prev_nonzero(i).ok_or(SeqError::ZeroTail)?;
            let next = r.next_nonzero(i).ok_or(SeqError::ZeroTail)?;
            Ok((prev, next))
        };
        let next = r.map_local(|r, i| {
            let v = r.value_at(i);
            if v == 0 {
                return Ok(0);
            }
            let (prev, next) = neighbours(i)?;
            let (lp, ln) = (r.value_at(prev) == 1, r.value_at(next) == 1);
            if v == 1 {
                if ln {
                    return Err(SynthesisError::AdjacentOnes(i, next));
                }
                if lp {
                    return Err(SynthesisError::AdjacentOnes(prev, i));
                }
                return Ok(0);
            }
            let value = v - lp as i64 - ln as i64;
            if value <= 0 {
                return Err(SynthesisError::Exhausted { index: i, value });
            }
            Ok(value)
        })?;
        next.without_zeros()?;

        let (lo, hi) = self.region;
        let mut scan: Vec<i64> = (lo..=hi).collect();
        scan.extend(r.prev_nonzero(lo));
        scan.extend(r.next_nonzero(hi));
        let mut record = PassRecord { ones: Vec::new(), arcs: Vec::new(), double_drops: Vec::new() };
        let mut arcs = self.arcs.clone();
        for i in scan {
            if r.value_at(i) != 1 {
                if self.in_region(i) && r.value_at(i) >= 2 {
                    let (prev, next) = neighbours(i)?;
                    if r.value_at(prev) == 1 && r.value_at(next) == 1 {
                        record.double_drops.push(i);
                    }
                }
                continue;
            }
            if self.in_region(i) {
                record.ones.push(i);
            }
            let (prev, next) = neighbours(i)?;
            if self.in_region(prev) || self.in_region(next) {
                arcs.insert((prev, next));
                record.arcs.push((prev, next));
            }
        }
        record.arcs.sort_unstable();
        let mut trace = self.trace.clone();
        trace.push(record);
        Ok(Self { residual: next, passes: self.passes + 1, region: self.region, arcs, trace })
    }

    /// Runs Step A until no 1 is left, a repetition proves it never stops,
    /// or `cap` passes have been made.
    ///
    /// Step A only sees the order of the nonzero values, so a repeat of the
    /// residual with zeros removed, up to shift, repeats forever. After such
    /// a repeat the passes continue until the tracked region is all zero, at
    /// which point every arc touching it has been recorded.
    pub fn run_step_a(self, cap: usize) -> Result<(Self, StepAVerdict), SynthesisError> {
        let mut state = self;
        let mut seen: BTreeMap<ShapeKey, usize> = BTreeMap::new();
        let mut repeat: Option<(usize, usize)> = None;
        loop {
            if !state.has_ones() {
                return Ok((state.clone(), StepAVerdict::Terminated { passes: state.passes }));
            }
            if let Some((first, period)) = repeat {
                if state.region_cleared() {
                    let passes = state.passes;
                    return Ok((state, StepAVerdict::NonterminatingDetected { first, period, passes }));
                }
            } else {
                let key = state.residual.without_zeros()?.shape_key();
                if let Some(&first) = seen.get(&key) {
                    repeat = Some((first, state.passes - first));
                    continue;
                }
                seen.insert(key, state.passes);
            }
            if state.passes >= cap {
                let passes = state.passes;
                return Ok((state, StepAVerdict::CapReached { passes }));
            }
            state = state.step_a_pass()?;
        }
    }

    /// `d_p = b_p - 2` for residual `b_p >= 2`, else 0.
    pub fn excess(&self, p: i64) -> i64 {
        (self.residual.value_at(p) - 2).max(0)
    }

    /// Sum of `d_q` over `from <= q < to`, negated when `to < from`.
    pub fn excess_between(&self, from: i64, to: i64) -> i64 {
        if from <= to {
            (from..to).map(|q| self.excess(q)).sum()
        } else {
            -(to..from).map(|q| self.excess(q)).sum::<i64>()
        }
    }

    /// The `n` with `T_to = D^n(T_from)` for Step B anchored at `from` and
    /// at `to` on a bi-infinite upper boundary.
    pub fn dehn_offset(&self, from: i64, to: i64) -> i64 {
        -self.excess_between(from, to)
    }

    /// Default Step B anchor: the first residual above 2 at or right of
    /// `mid`, else the last one left of it.
    pub fn default_anchor(&self, mid: i64) -> Option<i64> {
        let r = &self.residual;
        let right_bound = r.core_end().max(mid) + r.right_period().len() as i64;
        let left_bound = r.core_start().min(mid) - r.left_period().len() as i64;
        (mid..=right_bound)
            .find(|&i| r.value_at(i) > 2)
            .or_else(|| (left_bound..mid).rev().find(|&i| r.value_at(i) > 2))
    }

    /// Step B on a terminated residual.
    pub fn step_b(&self, mid: i64, anchor: Option<i64>) -> Result<StepB, SynthesisError> {
        let r = self.residual.canonical();
        let b1 = !r.right_period().iter().any(|&v| v > 2);
        let b2 = !r.left_period().iter().any(|&v| v > 2);
        let anchor = match anchor {
            Some(a) if r.value_at(a) > 2 => Some(a),
            Some(a) => return Err(SynthesisError::BadAnchor { index: a, value: r.value_at(a) }),
            None => self.default_anchor(mid),
        };
        let (lo, hi) = self.region;
        let Some(i0) = anchor else {
            // N = 1: all residuals are 0 or 2
            let arcs = (lo..=hi).filter(|&p| r.value_at(p) == 2).map(|p| (1, p)).collect();
            return Ok(StepB { arcs, anchor: None, b1_terminates: true, b2_terminates: true, n: Some(1) });
        };
        let (cs, ce) = (r.core_start().min(i0), r.core_end().max(i0 + 1));
        // with the tail on that side free of values above 2, the sums are finite
        let left_sum: i64 = (cs..i0).map(|q| self.excess(q)).sum();
        let right_sum: i64 = (i0..ce).map(|q| self.excess(q)).sum();
        let base = match (b1, b2) {
            (true, true) => 1 + left_sum,
            (false, true) => left_sum,
            (true, false) => -right_sum,
            (false, false) => 1,
        };
        let n = (b1 && b2).then(|| (1 + left_sum + right_sum) as u64);
        let mut arcs = Vec::new();
        let mut label = base - self.excess_between(lo, i0);
        for p in lo..=hi {
            let b = r.value_at(p);
            if b >= 2 {
                for k in 0..=b - 2 {
                    arcs.push((label + k, p));
                }
            }
            label += self.excess(p);
        }
        Ok(StepB { arcs, anchor: Some(i0), b1_terminates: b1, b2_terminates: b2, n })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StepAVerdict {
    Terminated { passes: usize },
    /// The zero-free residual at pass `first + period` repeats the one
    /// at pass `first` up to shift; `passes` were run to clear the region.
    NonterminatingDetected { first: usize, period: usize, passes: usize },
    CapReached { passes: usize },
}

/// Bridging arcs as `(upper, lower)` pairs, plus the termination flags.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepB {
    pub arcs: Vec<(i64, i64)>,
    pub anchor: Option<i64>,
    pub b1_terminates: bool,
    pub b2_terminates: bool,
    pub n: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StepFlags {
    pub step_a_terminated: bool,
    pub b1_terminated: Option<bool>,
    pub b2_terminated: Option<bool>,
    pub n: Option<u64>,
}

/// The shape of the upper boundary given how the steps ended.
pub fn m2_class(flags: StepFlags) -> Result<M2Class, SynthesisError> {
    let StepFlags { step_a_terminated, b1_terminated, b2_terminated, n } = flags;
    match (step_a_terminated, b1_terminated, b2_terminated, n) {
        (false, None, None, None) => Ok(M2Class::Empty),
        (true, Some(true), Some(true), Some(n)) if n >= 1 => Ok(M2Class::Finite(n)),
        (true, Some(true), Some(false), None) => Ok(M2Class::NatLeft),
        (true, Some(false), Some(true), None) => Ok(M2Class::NatRight),
        (true, Some(false), Some(false), None) => Ok(M2Class::BiInfinite),
        _ => Err(SynthesisError::InconsistentFlags),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SynthesisOptions {
    pub window: (i64, i64),
    /// Defaults to `max(2 * (hi - lo), 4)`.
    pub margin: Option<i64>,
    pub cap: usize,
    pub anchor: Option<i64>,
    /// Validate the quiddity to this depth first.
    pub validation_depth: Option<i64>,
}

impl SynthesisOptions {
    pub fn new(window: (i64, i64)) -> Self {
        Self { window, margin: None, cap: DEFAULT_CAP, anchor: None, validation_depth: None }
    }

    pub fn margin(&self) -> i64 {
        self.margin.unwrap_or_else(|| (2 * (self.window.1 - self.window.0)).max(4))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SynthesisOutcome {
    pub triangulation: StripTriangulation,
    pub step_a: StepAVerdict,
    pub flags: StepFlags,
    pub anchor: Option<i64>,
    pub state: SynthesisState,
}

/// Runs the whole construction on `q` and materializes the result on the
/// window plus margin.
pub fn psi(q: &QuiddityDescriptor, opts: &SynthesisOptions) -> Result<SynthesisOutcome, SynthesisError> {
    let (lo, hi) = opts.window;
    if lo > hi {
        return Err(SynthesisError::EmptyWindow(lo, hi));
    }
    if let Some(depth) = opts.validation_depth {
        let report = q.validate(depth).map_err(|_| SynthesisError::InconsistentFlags)?;
        if let Some((i, j, value)) = report.witness {
            return Err(SynthesisError::InvalidQuiddity { i, j, value: alloc::format!("{value}") });
        }
    }
    let margin = opts.margin();
    let region = (lo - margin, hi + margin);
    let (state, verdict) = SynthesisState::new(q, region).run_step_a(opts.cap)?;
    let peripheral = state.arcs.iter().map(|&(a, b)| Arc::peripheral(a, b));
    let peripheral: Vec<Arc> = peripheral.collect::<Result<_, _>>()?;
    match verdict {
        StepAVerdict::CapReached { passes } => Err(SynthesisError::CapReached(passes)),
        StepAVerdict::NonterminatingDetected { .. } => {
            let flags = StepFlags { step_a_terminated: false, b1_terminated: None, b2_terminated: None, n: None };
            let triangulation = StripTriangulation::new(opts.window, margin, m2_class(flags)?, peripheral)?;
            Ok(SynthesisOutcome { triangulation, step_a: verdict, flags, anchor: None, state })
        }
        StepAVerdict::Terminated { .. } => {
            let b = state.step_b((lo + hi).div_euclid(2), opts.anchor)?;
            let flags = StepFlags {
                step_a_terminated: true,
                b1_terminated: Some(b.b1_terminates),
                b2_terminated: Some(b.b2_terminates),
                n: b.n,
            };
            let arcs = peripheral.into_iter().chain(b.arcs.iter().map(|&(u, p)| Arc::bridging(u, p)));
            let triangulation = StripTriangulation::new(opts.window, margin, m2_class(flags)?, arcs)?;
            Ok(SynthesisOutcome { triangulation, step_a: verdict, flags, anchor: b.anchor, state })
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EnoughOnes {
    Yes,
    /// `(i, j)` lies under no pair `(i', j')` with `t(i', j') = 1`.
    No { witness: (i64, i64) },
    UnknownAtDepth { uncovered: Option<(i64, i64)> },
}

/// Decides whether `t` has enough ones from the shape of its triangulation:
/// exactly when the upper boundary carries no marked points.
pub fn has_enough_ones(t: &FriezeView, window: (i64, i64), depth: i64) -> EnoughOnes {
    let (lo, hi) = window;
    match psi(t.quiddity(), &SynthesisOptions::new(window)) {
        Ok(out) if out.triangulation.m2_class() == M2Class::Empty => EnoughOnes::Yes,
        Ok(out) => {
            if let Some(witness) = t.first_uncovered(lo, hi, depth) {
                return EnoughOnes::No { witness };
            }
            // a bridging arc at p rules out any peripheral arc over p
            let mid = (lo + hi).div_euclid(2);
            let p = out
                .triangulation
                .bridging_arcs()
                .map(|(_, p)| p)
                .min_by_key(|p| (p - mid).abs())
                .expect("a nonempty upper boundary carries bridging arcs");
            EnoughOnes::No { witness: (p - 1, p + 1) }
        }
        Err(_) => EnoughOnes::UnknownAtDepth { uncovered: t.first_uncovered(lo, hi, depth) },
    }
}
