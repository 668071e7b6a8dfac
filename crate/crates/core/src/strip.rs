//! Triangulations of the infinite strip, materialized on a finite region.
//!
//! A [`StripTriangulation`] stores every arc with a lower endpoint in its
//! region `[lo - margin, hi + margin]`, so the star of each lower marked point
//! in the region is complete.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Boundary {
    Lower,
    Upper,
}

/// `(index, 0)` on the lower boundary or `(index, 1)` on the upper one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MarkedPoint {
    pub boundary: Boundary,
    pub index: i64,
}

impl MarkedPoint {
    pub fn lower(index: i64) -> Self {
        Self { boundary: Boundary::Lower, index }
    }

    pub fn upper(index: i64) -> Self {
        Self { boundary: Boundary::Upper, index }
    }
}

impl fmt::Display for MarkedPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let y = match self.boundary {
            Boundary::Lower => 0,
            Boundary::Upper => 1,
        };
        write!(f, "({},{})", self.index, y)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArcKind {
    Peripheral,
    Bridging,
}

/// An arc with endpoints stored in increasing order, lower points first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Arc {
    a: MarkedPoint,
    b: MarkedPoint,
}

impl Arc {
    pub fn new(x: MarkedPoint, y: MarkedPoint) -> Result<Self, StripError> {
        let (a, b) = if x <= y { (x, y) } else { (y, x) };
        match (a.boundary, b.boundary) {
            (Boundary::Upper, Boundary::Upper) => Err(StripError::UpperPeripheral(a.index, b.index)),
            (Boundary::Lower, Boundary::Lower) if b.index - a.index < 2 => {
                Err(StripError::Contractible(a.index, b.index))
            }
            _ => Ok(Self { a, b }),
        }
    }

    pub fn peripheral(i: i64, j: i64) -> Result<Self, StripError> {
        Self::new(MarkedPoint::lower(i), MarkedPoint::lower(j))
    }

    /// The arc from `(upper, 1)` to `(lower, 0)`.
    pub fn bridging(upper: i64, lower: i64) -> Self {
        Self { a: MarkedPoint::lower(lower), b: MarkedPoint::upper(upper) }
    }

    pub fn endpoints(&self) -> (MarkedPoint, MarkedPoint) {
        (self.a, self.b)
    }

    pub fn kind(&self) -> ArcKind {
        match self.b.boundary {
            Boundary::Lower => ArcKind::Peripheral,
            Boundary::Upper => ArcKind::Bridging,
        }
    }

    /// `(i, j)` with `i < j` for a peripheral arc.
    pub fn as_peripheral(&self) -> Option<(i64, i64)> {
        (self.kind() == ArcKind::Peripheral).then_some((self.a.index, self.b.index))
    }

    /// `(upper, lower)` for a bridging arc.
    pub fn as_bridging(&self) -> Option<(i64, i64)> {
        (self.kind() == ArcKind::Bridging).then_some((self.b.index, self.a.index))
    }

    pub fn touches_lower(&self, i: i64) -> bool {
        self.a.index == i || (self.kind() == ArcKind::Peripheral && self.b.index == i)
    }

    pub fn shares_endpoint(&self, other: &Arc) -> bool {
        self.a == other.a || self.a == other.b || self.b == other.a || self.b == other.b
    }
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.a, self.b)
    }
}

/// Whether two arcs cross in the interior of the strip.
pub fn cross(x: &Arc, y: &Arc) -> bool {
    if x.shares_endpoint(y) {
        return false;
    }
    match (x.as_peripheral(), y.as_peripheral()) {
        (Some((i, j)), Some((k, l))) => (i < k && k < j && j < l) || (k < i && i < l && l < j),
        (Some((i, j)), None) => {
            let (_, p) = y.as_bridging().unwrap();
            i < p && p < j
        }
        (None, Some((i, j))) => {
            let (_, p) = x.as_bridging().unwrap();
            i < p && p < j
        }
        (None, None) => {
            let (u, p) = x.as_bridging().unwrap();
            let (v, q) = y.as_bridging().unwrap();
            (u - v).signum() * (p - q).signum() < 0
        }
    }
}

/// Shape of the set of upper marked points.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum M2Class {
    Empty,
    /// Points `1..=N`.
    Finite(u64),
    /// Points `0, 1, 2, ...`.
    NatRight,
    /// Points `..., -2, -1, 0`.
    NatLeft,
    BiInfinite,
}

impl M2Class {
    pub fn contains(&self, u: i64) -> bool {
        match *self {
            M2Class::Empty => false,
            M2Class::Finite(n) => u >= 1 && (u as u64) <= n,
            M2Class::NatRight => u >= 0,
            M2Class::NatLeft => u <= 0,
            M2Class::BiInfinite => true,
        }
    }
}

impl fmt::Display for M2Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            M2Class::Empty => write!(f, "empty"),
            M2Class::Finite(n) => write!(f, "finite:{n}"),
            M2Class::NatRight => write!(f, "nat"),
            M2Class::NatLeft => write!(f, "neg_nat"),
            M2Class::BiInfinite => write!(f, "int"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StripError {
    #[error("peripheral arcs on the upper boundary are not supported: ({0},1)-({1},1)")]
    UpperPeripheral(i64, i64),
    #[error("arc ({0},0)-({1},0) is contractible or degenerate")]
    Contractible(i64, i64),
    #[error("window [{0}, {1}] is empty")]
    EmptyWindow(i64, i64),
    #[error("margin must be nonnegative, got {0}")]
    NegativeMargin(i64),
    #[error("arc {0} has no lower endpoint in the materialized region")]
    OutsideRegion(Arc),
    #[error("upper point ({0},1) is not allowed by the upper boundary class {1}")]
    NotInClass(i64, M2Class),
    #[error("the star of ({0},0) is not materialized")]
    Truncated(i64),
    #[error("Dehn twists need a bi-infinite upper boundary, got {0}")]
    NotBiInfinite(M2Class),
    #[error("triangulations are not comparable: {0}")]
    Mismatch(&'static str),
    #[error("arcs {0} and {1} cross")]
    Crossing(Arc, Arc),
    #[error("arc {0} could be added without crossing")]
    NotMaximal(Arc),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StripTriangulation {
    window: (i64, i64),
    margin: i64,
    m2_class: M2Class,
    arcs: BTreeSet<Arc>,
    upper_points: BTreeSet<i64>,
}

impl StripTriangulation {
    /// Upper marked points default to the endpoints of the bridging arcs.
    pub fn new(
        window: (i64, i64),
        margin: i64,
        m2_class: M2Class,
        arcs: impl IntoIterator<Item = Arc>,
    ) -> Result<Self, StripError> {
        Self::with_upper_points(window, margin, m2_class, arcs, [])
    }

    pub fn with_upper_points(
        window: (i64, i64),
        margin: i64,
        m2_class: M2Class,
        arcs: impl IntoIterator<Item = Arc>,
        extra_upper: impl IntoIterator<Item = i64>,
    ) -> Result<Self, StripError> {
        if window.0 > window.1 {
            return Err(StripError::EmptyWindow(window.0, window.1));
        }
        if margin < 0 {
            return Err(StripError::NegativeMargin(margin));
        }
        let (rlo, rhi) = (window.0 - margin, window.1 + margin);
        let arcs: BTreeSet<Arc> = arcs.into_iter().collect();
        let mut upper_points: BTreeSet<i64> = extra_upper.into_iter().collect();
        for arc in &arcs {
            let in_region = |i: i64| rlo <= i && i <= rhi;
            let (a, b) = arc.endpoints();
            let lower_in = in_region(a.index) || (b.boundary == Boundary::Lower && in_region(b.index));
            if !lower_in {
                return Err(StripError::OutsideRegion(*arc));
            }
            if let Some((u, _)) = arc.as_bridging() {
                upper_points.insert(u);
            }
        }
        if let Some(&u) = upper_points.iter().find(|&&u| !m2_class.contains(u)) {
            return Err(StripError::NotInClass(u, m2_class));
        }
        Ok(Self { window, margin, m2_class, arcs, upper_points })
    }

    pub fn window(&self) -> (i64, i64) {
        self.window
    }

    pub fn margin(&self) -> i64 {
        self.margin
    }

    pub fn m2_class(&self) -> M2Class {
        self.m2_class
    }

    pub fn arcs(&self) -> &BTreeSet<Arc> {
        &self.arcs
    }

    pub fn upper_points(&self) -> &BTreeSet<i64> {
        &self.upper_points
    }

    /// Lower indices whose stars are fully materialized.
    pub fn region(&self) -> (i64, i64) {
        (self.window.0 - self.margin, self.window.1 + self.margin)
    }

    pub fn in_region(&self, i: i64) -> bool {
        let (lo, hi) = self.region();
        lo <= i && i <= hi
    }

    pub fn peripheral_arcs(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.arcs.iter().filter_map(Arc::as_peripheral)
    }

    /// `(upper, lower)` pairs.
    pub fn bridging_arcs(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.arcs.iter().filter_map(Arc::as_bridging)
    }

    pub fn degree(&self, i: i64) -> Result<usize, StripError> {
        if !self.in_region(i) {
            return Err(StripError::Truncated(i));
        }
        Ok(self.arcs.iter().filter(|a| a.touches_lower(i)).count())
    }

    /// Triangles at `(i, 0)`, one more than its degree.
    pub fn phi_at(&self, i: i64) -> Result<i64, StripError> {
        Ok(self.degree(i)? as i64 + 1)
    }

    /// The quiddity sequence `a_lo, ..., a_hi`.
    pub fn quiddity_on(&self, lo: i64, hi: i64) -> Result<Vec<i64>, StripError> {
        (lo..=hi).map(|i| self.phi_at(i)).collect()
    }

    /// The quiddity sequence on the window.
    pub fn quiddity_of(&self) -> Result<Vec<i64>, StripError> {
        self.quiddity_on(self.window.0, self.window.1)
    }

    /// `D^n`: every bridging arc `(u,1)-(j,0)` becomes `(u+n,1)-(j,0)`.
    pub fn dehn_twist(&self, n: i64) -> Result<Self, StripError> {
        if self.m2_class != M2Class::BiInfinite {
            return Err(StripError::NotBiInfinite(self.m2_class));
        }
        let arcs = self
            .arcs
            .iter()
            .map(|a| match a.as_bridging() {
                Some((u, p)) => Arc::bridging(u + n, p),
                None => *a,
            })
            .collect();
        let upper_points = self.upper_points.iter().map(|u| u + n).collect();
        Ok(Self { arcs, upper_points, ..self.clone() })
    }

    /// `Some(n)` when `other == D^n(self)`.
    pub fn dehn_equivalent(&self, other: &Self) -> Result<Option<i64>, StripError> {
        if self.m2_class != M2Class::BiInfinite {
            return Err(StripError::NotBiInfinite(self.m2_class));
        }
        if other.m2_class != M2Class::BiInfinite {
            return Err(StripError::NotBiInfinite(other.m2_class));
        }
        if self.window != other.window || self.margin != other.margin {
            return Err(StripError::Mismatch("different window or margin"));
        }
        let n = match (self.upper_points.first(), other.upper_points.first()) {
            (Some(a), Some(b)) => b - a,
            (None, None) => 0,
            _ => return Ok(None),
        };
        Ok((self.dehn_twist(n)? == *other).then_some(n))
    }

    /// Materialized upper points that no arc reaches.
    pub fn special_upper_points(&self) -> Vec<MarkedPoint> {
        let used: BTreeSet<i64> = self.bridging_arcs().map(|(u, _)| u).collect();
        self.upper_points.iter().filter(|u| !used.contains(u)).map(|&u| MarkedPoint::upper(u)).collect()
    }

    /// Some peripheral arc `(a, b)` with `a <= m` and `b >= n`.
    pub fn has_peripheral_over(&self, m: i64, n: i64) -> bool {
        self.peripheral_arcs().any(|(a, b)| a <= m && b >= n)
    }

    /// The passing-over criterion on every pair `lo <= m < n <= hi` of the
    /// window: a peripheral arc over both, or bridging arcs `(u,1)-(p,0)` and
    /// `(v,1)-(q,0)` with `p <= m < n <= q` and `u <= v`.
    pub fn is_admissible_window(&self) -> bool {
        let (lo, hi) = self.window;
        let bridging: Vec<(i64, i64)> = self.bridging_arcs().collect();
        for m in lo..hi {
            let min_left = bridging.iter().filter(|&&(_, p)| p <= m).map(|&(u, _)| u).min();
            for n in m + 1..=hi {
                if self.has_peripheral_over(m, n) {
                    continue;
                }
                let max_right = bridging.iter().filter(|&&(_, q)| q >= n).map(|&(v, _)| v).max();
                match (min_left, max_right) {
                    (Some(u), Some(v)) if u <= v => {}
                    _ => return false,
                }
            }
        }
        true
    }

    pub fn crossing_pair(&self) -> Option<(Arc, Arc)> {
        let list: Vec<&Arc> = self.arcs.iter().collect();
        for (x, a) in list.iter().enumerate() {
            for b in &list[x + 1..] {
                if cross(a, b) {
                    return Some((**a, **b));
                }
            }
        }
        None
    }

    fn compatible_with_all(&self, candidate: &Arc) -> bool {
        !self.arcs.contains(candidate) && self.arcs.iter().all(|a| !cross(a, candidate))
    }

    /// Arcs with lower endpoints in the region that cross nothing stored.
    ///
    /// Bridging candidates are limited to upper indices bracketed by stored
    /// bridging arcs on both sides, since arcs beyond the region are unknown.
    pub fn addable_arcs(&self) -> Vec<Arc> {
        let (lo, hi) = self.region();
        let mut out = Vec::new();
        for a in lo..=hi {
            for b in a + 2..=hi {
                let c = Arc::peripheral(a, b).unwrap();
                if self.compatible_with_all(&c) {
                    out.push(c);
                }
            }
        }
        let bridging: Vec<(i64, i64)> = self.bridging_arcs().collect();
        if let (Some(&umin), Some(&umax)) = (self.upper_points.first(), self.upper_points.last()) {
            for x in lo..=hi {
                for w in umin..=umax {
                    let left = bridging.iter().any(|&(u, q)| q <= x && u <= w);
                    let right = bridging.iter().any(|&(u, q)| q >= x && u >= w);
                    if !(left && right) || !self.m2_class.contains(w) {
                        continue;
                    }
                    let c = Arc::bridging(w, x);
                    if self.compatible_with_all(&c) {
                        out.push(c);
                    }
                }
            }
        }
        out
    }

    /// Pairwise compatibility and maximality on the region.
    pub fn check(&self) -> Result<(), StripError> {
        if let Some((a, b)) = self.crossing_pair() {
            return Err(StripError::Crossing(a, b));
        }
        if let Some(a) = self.addable_arcs().first() {
            return Err(StripError::NotMaximal(*a));
        }
        Ok(())
    }
}
