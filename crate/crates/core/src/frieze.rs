//! Entries `t(i, j)` of the infinite frieze attached to a quiddity sequence.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cell::RefCell;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::quiddity::QuiddityDescriptor;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FriezeError {
    #[error("continuant needs q >= p + 2, got p = {p}, q = {q}")]
    ContinuantRange { p: i64, q: i64 },
    #[error("reconstruction rows must differ, got i = j = {0}")]
    SameRows(i64),
    #[error("reconstruction of t({p}, {q}) is not an exact division")]
    InexactDivision { p: i64, q: i64 },
    #[error("f-row must satisfy f(-2) = -1, f(-1) = 0, f(0) = 1 where given (index {0})")]
    BadNormalization(i64),
    #[error("a(-1) must be at least 1, got {0}")]
    BadAMinusOne(i64),
    #[error("f({0}) = 0 although index {0} is not -1")]
    ZeroEntry(i64),
    #[error("f({prev}) + f({next}) is not divisible by f({s})", prev = s - 1, next = s + 1)]
    NotDivisible { s: i64 },
    #[error("recovered a({s}) = {value} is not positive")]
    NonPositive { s: i64, value: BigInt },
    #[error("recovered a({s}) does not fit in i64")]
    TooLarge { s: i64 },
}

/// Memoized evaluator of `t(i, j)` over a quiddity descriptor.
///
/// The cache lives in a `RefCell`, so a view is confined to one thread.
#[derive(Debug, Clone)]
pub struct FriezeView {
    quiddity: QuiddityDescriptor,
    memo: RefCell<BTreeMap<(i64, i64), BigInt>>,
}

impl FriezeView {
    pub fn new(quiddity: QuiddityDescriptor) -> Self {
        Self { quiddity, memo: RefCell::new(BTreeMap::new()) }
    }

    pub fn quiddity(&self) -> &QuiddityDescriptor {
        &self.quiddity
    }

    pub fn a(&self, i: i64) -> i64 {
        self.quiddity.value_at(i)
    }

    /// `t(i, j)`, by the forward recurrence `t(i, k+1) = a_k t(i, k) - t(i, k-1)`.
    pub fn entry(&self, i: i64, j: i64) -> BigInt {
        if i == j {
            return BigInt::zero();
        }
        if i > j {
            return -self.entry(j, i);
        }
        if j == i + 1 {
            return BigInt::one();
        }
        if let Some(v) = self.memo.borrow().get(&(i, j)) {
            return v.clone();
        }
        let mut memo = self.memo.borrow_mut();
        // resume from the furthest cached pair on row i
        let (mut k, mut prev, mut cur) = match memo.range((i, i + 2)..(i, j)).next_back() {
            Some((&(_, k), v)) if k == i + 2 => (k, BigInt::one(), v.clone()),
            Some((&(_, k), v)) => match memo.get(&(i, k - 1)) {
                Some(p) => (k, p.clone(), v.clone()),
                None => (i + 1, BigInt::zero(), BigInt::one()),
            },
            _ => (i + 1, BigInt::zero(), BigInt::one()),
        };
        while k < j {
            let next = &cur * self.a(k) - &prev;
            prev = core::mem::replace(&mut cur, next);
            k += 1;
            memo.insert((i, k), cur.clone());
        }
        cur
    }

    pub fn entries(&self, rows: (i64, i64), cols: (i64, i64)) -> Vec<Vec<BigInt>> {
        (rows.0..=rows.1).map(|i| (cols.0..=cols.1).map(|j| self.entry(i, j)).collect()).collect()
    }

    /// The tridiagonal determinant in `a_{p+1}, ..., a_{q-1}`.
    pub fn continuant(&self, p: i64, q: i64) -> Result<BigInt, FriezeError> {
        if q < p + 2 {
            return Err(FriezeError::ContinuantRange { p, q });
        }
        let (mut prev, mut cur) = (BigInt::one(), BigInt::from(self.a(p + 1)));
        for k in p + 2..q {
            let next = &cur * self.a(k) - &prev;
            prev = core::mem::replace(&mut cur, next);
        }
        Ok(cur)
    }

    /// `f_i = t(-1, i)`.
    pub fn f(&self, i: i64) -> BigInt {
        self.entry(-1, i)
    }

    /// `g_i = t(0, i)`.
    pub fn g(&self, i: i64) -> BigInt {
        self.entry(0, i)
    }

    pub fn ptolemy_holds(&self, i: i64, j: i64, p: i64, q: i64) -> bool {
        let t = |x, y| self.entry(x, y);
        t(i, p) * t(j, q) == t(i, j) * t(p, q) + t(i, q) * t(j, p)
    }

    /// `t(p, q)` recovered from rows `i` and `j` alone.
    pub fn reconstruct_entry(&self, i: i64, j: i64, p: i64, q: i64) -> Result<BigInt, FriezeError> {
        let t = |x, y| self.entry(x, y);
        reconstruct_from_rows(&t(i, j), &t(i, p), &t(i, q), &t(j, p), &t(j, q))
            .map_err(|e| match e {
                FriezeError::SameRows(_) => FriezeError::SameRows(i),
                FriezeError::InexactDivision { .. } => FriezeError::InexactDivision { p, q },
                other => other,
            })
    }

    /// `det [[t(i,k), t(i,k+1)], [t(j,k), t(j,k+1)]]`.
    pub fn c_coeff(&self, i: i64, j: i64, k: i64) -> BigInt {
        let t = |x, y| self.entry(x, y);
        t(i, k) * t(j, k + 1) - t(i, k + 1) * t(j, k)
    }

    /// `det [[t(k,i), t(k,j)], [t(k+1,i), t(k+1,j)]]`.
    pub fn d_coeff(&self, i: i64, j: i64, k: i64) -> BigInt {
        let t = |x, y| self.entry(x, y);
        t(k, i) * t(k + 1, j) - t(k, j) * t(k + 1, i)
    }

    /// First pair `(i, j)`, `lo <= i <= j <= hi`, with no `t(i', j') = 1`
    /// for `i - depth <= i' <= i <= j <= j' <= j + depth`.
    ///
    /// Pairs are visited by increasing `i`, then `j`.
    pub fn first_uncovered(&self, lo: i64, hi: i64, depth: i64) -> Option<(i64, i64)> {
        let ones: BTreeMap<i64, Vec<i64>> = (lo - depth..=hi)
            .map(|ip| (ip, (ip + 1..=hi + depth).filter(|&jp| self.entry(ip, jp).is_one()).collect()))
            .collect();
        for i in lo..=hi {
            for j in i..=hi {
                let covered = (i - depth..=i)
                    .any(|ip| ones[&ip].iter().any(|&jp| jp >= j && jp <= j + depth));
                if !covered {
                    return Some((i, j));
                }
            }
        }
        None
    }
}

/// `t(p, q) = det [[f_p, f_q], [g_p, g_q]]`.
pub fn entry_from_fg(f_p: &BigInt, f_q: &BigInt, g_p: &BigInt, g_q: &BigInt) -> BigInt {
    f_p * g_q - f_q * g_p
}

/// `(t(i,p) t(j,q) - t(i,q) t(j,p)) / t(i,j)` with exactness enforced.
pub fn reconstruct_from_rows(
    t_ij: &BigInt,
    t_ip: &BigInt,
    t_iq: &BigInt,
    t_jp: &BigInt,
    t_jq: &BigInt,
) -> Result<BigInt, FriezeError> {
    if t_ij.is_zero() {
        return Err(FriezeError::SameRows(0));
    }
    let num = t_ip * t_jq - t_iq * t_jp;
    let (quot, rem) = num.div_rem(t_ij);
    if !rem.is_zero() {
        return Err(FriezeError::InexactDivision { p: 0, q: 0 });
    }
    Ok(quot)
}

/// Recovers `a_s = (f_{s-1} + f_{s+1}) / f_s` wherever both neighbours are
/// given, with `a_{-1}` supplied separately since `f_{-1} = 0`.
pub fn quiddity_from_f(
    f: &BTreeMap<i64, BigInt>,
    a_minus1: i64,
) -> Result<BTreeMap<i64, i64>, FriezeError> {
    if a_minus1 < 1 {
        return Err(FriezeError::BadAMinusOne(a_minus1));
    }
    for (idx, want) in [(-2, -1), (-1, 0), (0, 1)] {
        if f.get(&idx).is_some_and(|v| *v != BigInt::from(want)) {
            return Err(FriezeError::BadNormalization(idx));
        }
    }
    let mut out = BTreeMap::new();
    for (&s, fs) in f {
        let (Some(prev), Some(next)) = (f.get(&(s - 1)), f.get(&(s + 1))) else {
            continue;
        };
        if s == -1 {
            out.insert(s, a_minus1);
            continue;
        }
        if fs.is_zero() {
            return Err(FriezeError::ZeroEntry(s));
        }
        let (a, rem) = (prev + next).div_rem(fs);
        if !rem.is_zero() {
            return Err(FriezeError::NotDivisible { s });
        }
        if !a.is_positive() {
            return Err(FriezeError::NonPositive { s, value: a });
        }
        let a = i64::try_from(&a).map_err(|_| FriezeError::TooLarge { s })?;
        out.insert(s, a);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn constant_two() -> FriezeView {
        FriezeView::new(QuiddityDescriptor::constant(2).unwrap())
    }

    fn bumped() -> FriezeView {
        FriezeView::new(QuiddityDescriptor::new(vec![2], vec![3], vec![2], -1).unwrap())
    }

    fn enough_ones() -> FriezeView {
        FriezeView::new(QuiddityDescriptor::new(vec![5, 1], vec![2, 3], vec![1, 5], 0).unwrap())
    }

    fn triangulation_example() -> FriezeView {
        FriezeView::new(QuiddityDescriptor::new(vec![3], vec![4, 2, 1, 6], vec![2], -3).unwrap())
    }

    #[test]
    fn entry_examples() {
        assert_eq!(constant_two().entry(-5, 5), big(10));
        assert_eq!(triangulation_example().entry(4, 4), big(0));
        assert_eq!(bumped().entry(-2, 0), big(3));
        assert_eq!(enough_ones().entry(-5, -1), big(15));
    }

    #[test]
    fn entry_is_antisymmetric_and_memo_consistent() {
        let t = enough_ones();
        let first = t.entry(-3, 7);
        assert_eq!(t.entry(7, -3), -first.clone());
        assert_eq!(t.entry(-3, 7), first);
        // a cached longer row must not disturb shorter reads
        let long = t.entry(-3, 12);
        assert_eq!(t.entry(-3, 5), t.continuant(-3, 5).unwrap());
        assert_eq!(t.entry(-3, 12), long);
    }

    #[test]
    fn continuant_examples() {
        assert_eq!(constant_two().continuant(0, 4).unwrap(), big(4));
        let t = triangulation_example();
        assert_eq!(t.continuant(2, 4).unwrap(), big(t.a(3)));
        assert_eq!(t.continuant(-2, 1).unwrap(), big(5));
        assert_eq!(t.continuant(0, 1), Err(FriezeError::ContinuantRange { p: 0, q: 1 }));
    }

    #[test]
    fn entry_from_fg_examples() {
        assert_eq!(entry_from_fg(&big(4), &big(6), &big(3), &big(5)), big(2));
        assert_eq!(entry_from_fg(&big(7), &big(7), &big(2), &big(2)), big(0));
        assert_eq!(entry_from_fg(&big(2), &big(5), &big(1), &big(4)), big(3));
        let t = bumped();
        assert_eq!(entry_from_fg(&t.f(1), &t.f(4), &t.g(1), &t.g(4)), t.entry(1, 4));
    }

    #[test]
    fn ptolemy_examples() {
        assert!(constant_two().ptolemy_holds(0, 1, 2, 3));
        assert!(enough_ones().ptolemy_holds(2, 2, -3, 4));
    }

    #[test]
    fn reconstruct_examples() {
        assert_eq!(constant_two().reconstruct_entry(-1, 0, 2, 5).unwrap(), big(3));
        assert_eq!(constant_two().reconstruct_entry(-1, 0, 3, 3).unwrap(), big(0));
        assert_eq!(bumped().reconstruct_entry(-1, 0, -4, 2).unwrap(), big(15));
        assert_eq!(bumped().reconstruct_entry(1, 1, 0, 2), Err(FriezeError::SameRows(1)));
    }

    #[test]
    fn inexact_division_is_an_error() {
        assert!(matches!(
            reconstruct_from_rows(&big(2), &big(1), &big(0), &big(0), &big(1)),
            Err(FriezeError::InexactDivision { .. })
        ));
    }

    #[test]
    fn c_and_d_examples() {
        let t = enough_ones();
        for k in -4..4 {
            assert_eq!(t.c_coeff(3, 4, k), big(1));
            assert_eq!(t.d_coeff(2, 2, k), big(0));
        }
        let c = constant_two();
        for k in 0..=10 {
            assert_eq!(c.c_coeff(-1, 1, k), big(2));
        }
    }

    fn f_row(lo: i64, hi: i64) -> BTreeMap<i64, BigInt> {
        (lo..=hi).map(|s| (s, big(s + 1))).collect()
    }

    #[test]
    fn quiddity_from_f_examples() {
        let a = quiddity_from_f(&f_row(-2, 6), 2).unwrap();
        assert_eq!(a.keys().copied().collect::<Vec<_>>(), (-1..=5).collect::<Vec<_>>());
        assert!(a.values().all(|&v| v == 2));
        let a = quiddity_from_f(&f_row(-2, 6), 3).unwrap();
        assert_eq!(a[&-1], 3);
        assert!((0..=5).all(|s| a[&s] == 2));
    }

    #[test]
    fn quiddity_from_f_round_trip_and_rejects() {
        let t = triangulation_example();
        let f: BTreeMap<i64, BigInt> = (-2..=8).map(|s| (s, t.f(s))).collect();
        let a = quiddity_from_f(&f, t.a(-1)).unwrap();
        for (s, v) in a {
            assert_eq!(v, t.a(s));
        }
        let mut bad = f_row(-2, 4);
        bad.insert(2, big(4));
        assert!(matches!(quiddity_from_f(&bad, 2), Err(FriezeError::NotDivisible { .. })));
        let mut bad = f_row(-2, 4);
        bad.insert(0, big(2));
        assert_eq!(quiddity_from_f(&bad, 2), Err(FriezeError::BadNormalization(0)));
        assert_eq!(quiddity_from_f(&f_row(-2, 4), 0), Err(FriezeError::BadAMinusOne(0)));
    }

    #[test]
    fn coverage_search() {
        assert_eq!(enough_ones().first_uncovered(-4, 4, 12), None);
        assert_eq!(constant_two().first_uncovered(0, 3, 10), Some((0, 2)));
    }
}
