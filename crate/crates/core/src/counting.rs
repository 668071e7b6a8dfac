//! Frieze entries counted on a strip triangulation by cutting out a polygon.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use thiserror::Error;

use crate::polygon::{PolygonError, PolygonTriangulation};
use crate::strip::StripTriangulation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CountingError {
    #[error("need i <= j, got i = {0}, j = {1}")]
    Reversed(i64, i64),
    #[error("no cut around ({0}, {1}) among the materialized arcs")]
    NoCut(i64, i64),
    #[error("the polygon cut around ({0}, {1}) is not fully materialized")]
    Truncated(i64, i64),
    #[error(transparent)]
    Polygon(#[from] PolygonError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CutKind {
    /// Along the peripheral arc `(p, q)`.
    Peripheral { p: i64, q: i64 },
    /// Along the bridging arcs `(u,1)-(p,0)` and `(v,1)-(q,0)`.
    Bridging { p: i64, u: i64, q: i64, v: i64 },
}

/// A finite triangulated polygon cut from a strip triangulation.
///
/// Lower points `p..=q` become vertices `1..`, followed by the upper points
/// from right to left.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolygonCut {
    pub polygon: PolygonTriangulation,
    pub kind: CutKind,
    pub lower: BTreeMap<i64, u32>,
    pub upper: BTreeMap<i64, u32>,
}

/// Cuts along the shortest peripheral arc passing over `i - 1` and `j + 1`,
/// or else along the nearest bridging arcs left of `i` and right of `j`.
pub fn cut_polygon(t: &StripTriangulation, i: i64, j: i64) -> Result<PolygonCut, CountingError> {
    if i > j {
        return Err(CountingError::Reversed(i, j));
    }
    let over = t
        .peripheral_arcs()
        .filter(|&(a, b)| a < i && b > j)
        .min_by_key(|&(a, b)| (b - a, a));
    let (kind, lower, upper) = if let Some((p, q)) = over {
        (CutKind::Peripheral { p, q }, (p..=q).collect::<Vec<_>>(), Vec::new())
    } else {
        let bridging: Vec<(i64, i64)> = t.bridging_arcs().collect();
        let p = bridging.iter().filter(|&&(_, x)| x < i).map(|&(_, x)| x).max();
        let q = bridging.iter().filter(|&&(_, x)| x > j).map(|&(_, x)| x).min();
        let (Some(p), Some(q)) = (p, q) else {
            return Err(CountingError::NoCut(i, j));
        };
        let u = bridging.iter().filter(|&&(_, x)| x == p).map(|&(w, _)| w).max().unwrap();
        let v = bridging.iter().filter(|&&(_, x)| x == q).map(|&(w, _)| w).min().unwrap();
        if u > v {
            return Err(CountingError::NoCut(i, j));
        }
        (CutKind::Bridging { p, u, q, v }, (p..=q).collect(), (u..=v).rev().collect())
    };
    let lower_map: BTreeMap<i64, u32> = lower.iter().zip(1..).map(|(&x, k)| (x, k)).collect();
    let offset = lower.len() as u32;
    let upper_map: BTreeMap<i64, u32> = upper.iter().zip(offset + 1..).map(|(&w, k)| (w, k)).collect();
    let (lo, hi) = (lower[0], lower[lower.len() - 1]);
    let cut_arcs = match kind {
        CutKind::Peripheral { .. } => Vec::new(),
        CutKind::Bridging { p, u, q, v } => alloc::vec![(u, p), (v, q)],
    };
    let mut chords = Vec::new();
    for (a, b) in t.peripheral_arcs() {
        if lo <= a && b <= hi && (a, b) != (lo, hi) {
            chords.push((lower_map[&a], lower_map[&b]));
        }
    }
    for (w, x) in t.bridging_arcs() {
        if let (Some(&xv), Some(&wv)) = (lower_map.get(&x), upper_map.get(&w)) {
            if !cut_arcs.contains(&(w, x)) {
                chords.push((xv, wv));
            }
        }
    }
    let n = (lower.len() + upper.len()) as u32;
    let polygon = PolygonTriangulation::new(n, chords).map_err(|e| match e {
        PolygonError::WrongChordCount { .. } => CountingError::Truncated(i, j),
        other => CountingError::Polygon(other),
    })?;
    Ok(PolygonCut { polygon, kind, lower: lower_map, upper: upper_map })
}

/// `t(i, j)` by Conway-Coxeter labelling on the cut polygon.
pub fn cc_entry(t: &StripTriangulation, i: i64, j: i64) -> Result<u64, CountingError> {
    let cut = cut_polygon(t, i, j)?;
    Ok(cut.polygon.cc(cut.lower[&i], cut.lower[&j])?)
}

/// `t(i, j)` by counting triangle tuples along the lower walk `i, ..., j`.
pub fn bci_entry(t: &StripTriangulation, i: i64, j: i64) -> Result<u64, CountingError> {
    let cut = cut_polygon(t, i, j)?;
    let walk: Vec<u32> = (i..=j).map(|x| cut.lower[&x]).collect();
    Ok(cut.polygon.bci_count(&walk)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiddity::QuiddityDescriptor;
    use crate::synthesis::{psi, SynthesisOptions};
    use alloc::vec;

    fn synth(q: QuiddityDescriptor, window: (i64, i64)) -> StripTriangulation {
        psi(&q, &SynthesisOptions::new(window)).unwrap().triangulation
    }

    #[test]
    fn constant_two_cut_uses_the_single_upper_point() {
        let t = synth(QuiddityDescriptor::constant(2).unwrap(), (-4, 8));
        let cut = cut_polygon(&t, 0, 3).unwrap();
        assert_eq!(cut.kind, CutKind::Bridging { p: -1, u: 1, q: 4, v: 1 });
        assert_eq!(cut.polygon.n(), 7);
        assert_eq!(cc_entry(&t, 0, 4).unwrap(), 4);
        assert_eq!(bci_entry(&t, 0, 4).unwrap(), 4);
    }

    #[test]
    fn example_cut_along_peripheral_arc() {
        let q = QuiddityDescriptor::new(vec![3], vec![4, 2, 1, 6], vec![2], -3).unwrap();
        let t = synth(q, (-8, 8));
        let cut = cut_polygon(&t, -2, -1).unwrap();
        assert_eq!(cut.kind, CutKind::Peripheral { p: -3, q: 0 });
        assert_eq!(cc_entry(&t, -2, -1).unwrap(), 1);
    }

    #[test]
    fn trivial_entries() {
        let q = QuiddityDescriptor::new(vec![5, 1], vec![2, 3], vec![1, 5], 0).unwrap();
        let t = synth(q, (-6, 6));
        assert_eq!(cc_entry(&t, 2, 2).unwrap(), 0);
        assert_eq!(cc_entry(&t, 2, 3).unwrap(), 1);
        assert_eq!(bci_entry(&t, -5, -3).unwrap(), 5);
        assert!(cut_polygon(&t, 1, 1).unwrap().polygon.n() >= 3);
        assert_eq!(cc_entry(&t, 3, 1), Err(CountingError::Reversed(3, 1)));
    }
}
