//! Triangulated polygons, Conway-Coxeter labels and frieze patterns of finite
//! rank.
//!
//! Vertices are labelled `1..=n` in cyclic order and chords are stored as
//! pairs `(u, v)` with `u < v`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolygonError {
    #[error("a polygon needs at least 3 vertices, got {0}")]
    TooSmall(u32),
    #[error("vertex {vertex} is outside 1..={n}")]
    VertexOutOfRange { vertex: u32, n: u32 },
    #[error("chord ({0}, {1}) joins adjacent or equal vertices")]
    NotAChord(u32, u32),
    #[error("chords ({0}, {1}) and ({2}, {3}) cross")]
    Crossing(u32, u32, u32, u32),
    #[error("expected {expected} chords, got {got}")]
    WrongChordCount { expected: usize, got: usize },
    #[error("walk does not follow consecutive boundary vertices")]
    NotBoundaryWalk,
    #[error("quiddity is not realizable: {0}")]
    NotRealizable(&'static str),
    #[error("count overflows u64")]
    Overflow,
}

fn crossing(a: (u32, u32), b: (u32, u32)) -> bool {
    let (i, j) = a;
    let (k, l) = b;
    (i < k && k < j && j < l) || (k < i && i < l && l < j)
}

/// A polygon with `n` vertices and `n - 3` noncrossing chords.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolygonTriangulation {
    n: u32,
    chords: BTreeSet<(u32, u32)>,
}

impl PolygonTriangulation {
    pub fn new(n: u32, chords: impl IntoIterator<Item = (u32, u32)>) -> Result<Self, PolygonError> {
        if n < 3 {
            return Err(PolygonError::TooSmall(n));
        }
        let mut set = BTreeSet::new();
        for (a, b) in chords {
            for v in [a, b] {
                if v < 1 || v > n {
                    return Err(PolygonError::VertexOutOfRange { vertex: v, n });
                }
            }
            let (u, v) = (a.min(b), a.max(b));
            if v - u < 2 || (u == 1 && v == n) {
                return Err(PolygonError::NotAChord(a, b));
            }
            set.insert((u, v));
        }
        let expected = n as usize - 3;
        if set.len() != expected {
            return Err(PolygonError::WrongChordCount { expected, got: set.len() });
        }
        let list: Vec<_> = set.iter().copied().collect();
        for (x, &a) in list.iter().enumerate() {
            for &b in &list[x + 1..] {
                if crossing(a, b) {
                    return Err(PolygonError::Crossing(a.0, a.1, b.0, b.1));
                }
            }
        }
        Ok(Self { n, chords: set })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn chords(&self) -> &BTreeSet<(u32, u32)> {
        &self.chords
    }

    /// Sides and chords.
    pub fn is_edge(&self, a: u32, b: u32) -> bool {
        let (u, v) = (a.min(b), a.max(b));
        v - u == 1 || (u == 1 && v == self.n) || self.chords.contains(&(u, v))
    }

    /// The `n - 2` triangles, each as an increasing triple.
    pub fn faces(&self) -> Vec<[u32; 3]> {
        let mut out = Vec::new();
        let mut stack = vec![(1..=self.n).collect::<Vec<u32>>()];
        while let Some(verts) = stack.pop() {
            if verts.len() == 3 {
                out.push([verts[0], verts[1], verts[2]]);
                continue;
            }
            let m = verts.len();
            let split = (0..m)
                .flat_map(|x| (x + 2..m).map(move |y| (x, y)))
                .find(|&(x, y)| !(x == 0 && y == m - 1) && self.chords.contains(&(verts[x], verts[y])))
                .expect("a valid triangulation always has a splitting chord");
            let (x, y) = split;
            stack.push(verts[x..=y].to_vec());
            let mut rest = verts[..=x].to_vec();
            rest.extend_from_slice(&verts[y..]);
            stack.push(rest);
        }
        out.sort_unstable();
        out
    }

    /// Number of triangles at each vertex, in vertex order.
    pub fn quiddity(&self) -> Vec<u32> {
        let mut q = vec![0; self.n as usize];
        for f in self.faces() {
            for v in f {
                q[v as usize - 1] += 1;
            }
        }
        q
    }

    /// Vertices incident to exactly one triangle.
    pub fn ears(&self) -> Vec<u32> {
        self.quiddity().iter().zip(1..).filter(|(&c, _)| c == 1).map(|(_, v)| v).collect()
    }

    /// Conway-Coxeter labels seen from `a`: 0 at `a`, 1 at its neighbours,
    /// and the sum of the other two across every triangle.
    pub fn cc_labels(&self, a: u32) -> Result<BTreeMap<u32, u64>, PolygonError> {
        if a < 1 || a > self.n {
            return Err(PolygonError::VertexOutOfRange { vertex: a, n: self.n });
        }
        let mut label: BTreeMap<u32, u64> = BTreeMap::new();
        label.insert(a, 0);
        for v in 1..=self.n {
            if v != a && self.is_edge(a, v) {
                label.insert(v, 1);
            }
        }
        let faces = self.faces();
        while label.len() < self.n as usize {
            let mut progressed = false;
            for f in &faces {
                let known: Vec<_> = f.iter().filter(|v| label.contains_key(v)).collect();
                if known.len() == 2 {
                    let unknown = *f.iter().find(|v| !label.contains_key(v)).unwrap();
                    let sum = label[known[0]].checked_add(label[known[1]]).ok_or(PolygonError::Overflow)?;
                    label.insert(unknown, sum);
                    progressed = true;
                }
            }
            assert!(progressed, "label propagation stalled on a valid triangulation");
        }
        Ok(label)
    }

    pub fn cc(&self, a: u32, b: u32) -> Result<u64, PolygonError> {
        let labels = self.cc_labels(a)?;
        labels.get(&b).copied().ok_or(PolygonError::VertexOutOfRange { vertex: b, n: self.n })
    }

    /// Ordered tuples of pairwise distinct triangles, the `k`-th incident to
    /// the `k`-th interior vertex of `walk`.
    pub fn bci_count(&self, walk: &[u32]) -> Result<u64, PolygonError> {
        for &v in walk {
            if v < 1 || v > self.n {
                return Err(PolygonError::VertexOutOfRange { vertex: v, n: self.n });
            }
        }
        let n = self.n;
        let step_ok = |a: u32, b: u32| a % n + 1 == b || b % n + 1 == a;
        if walk.is_empty() || walk.windows(2).any(|w| !step_ok(w[0], w[1])) {
            return Err(PolygonError::NotBoundaryWalk);
        }
        let direction = |w: &[u32]| w[0] % n + 1 == w[1];
        if walk.len() > 2 {
            let forward = direction(&walk[..2]);
            if walk.windows(2).any(|w| direction(w) != forward) || walk.len() > n as usize {
                return Err(PolygonError::NotBoundaryWalk);
            }
        }
        match walk.len() {
            1 => return Ok(0),
            2 => return Ok(1),
            _ => {}
        }
        let faces = self.faces();
        let inner = &walk[1..walk.len() - 1];
        let incident: Vec<Vec<usize>> = inner
            .iter()
            .map(|v| (0..faces.len()).filter(|&f| faces[f].contains(v)).collect())
            .collect();
        if faces.len() <= 128 {
            count_memo(&incident).ok_or(PolygonError::Overflow)
        } else {
            let mut used = vec![false; faces.len()];
            count_plain(&incident, 0, &mut used)
        }
    }

    /// Rank-`n` frieze pattern read off by the glide reflection.
    pub fn frieze_pattern(&self) -> Result<FriezePattern, PolygonError> {
        let cc = (1..=self.n)
            .map(|a| self.cc_labels(a).map(|l| l.values().copied().collect()))
            .collect::<Result<Vec<Vec<u64>>, _>>()?;
        Ok(FriezePattern { n: self.n, cc })
    }

    /// Rebuilds a triangulation with the given per-vertex triangle counts by
    /// repeatedly cutting the ear with the smallest label.
    pub fn from_quiddity(q: &[u32]) -> Result<Self, PolygonError> {
        let n = q.len() as u32;
        if n < 3 {
            return Err(PolygonError::TooSmall(n));
        }
        if q.iter().any(|&c| c < 1) {
            return Err(PolygonError::NotRealizable("counts must be at least 1"));
        }
        if q.iter().map(|&c| c as u64).sum::<u64>() != 3 * n as u64 - 6 {
            return Err(PolygonError::NotRealizable("counts must sum to 3n - 6"));
        }
        let mut cycle: Vec<(u32, u32)> = q.iter().zip(1..).map(|(&c, v)| (v, c)).collect();
        let mut chords = Vec::new();
        while cycle.len() > 3 {
            let m = cycle.len();
            let pos = (0..m).find(|&x| cycle[x].1 == 1).ok_or(PolygonError::NotRealizable("no ear left"))?;
            let (before, after) = ((pos + m - 1) % m, (pos + 1) % m);
            for x in [before, after] {
                cycle[x].1 -= 1;
                if cycle[x].1 == 0 {
                    return Err(PolygonError::NotRealizable("a vertex ran out of triangles"));
                }
            }
            chords.push((cycle[before].0, cycle[after].0));
            cycle.remove(pos);
        }
        if cycle.iter().any(|&(_, c)| c != 1) {
            return Err(PolygonError::NotRealizable("last triangle does not close"));
        }
        Self::new(n, chords).map_err(|_| PolygonError::NotRealizable("ears produced an invalid chord set"))
    }
}

fn count_memo(incident: &[Vec<usize>]) -> Option<u64> {
    let r = incident.len();
    // future[k]: triangles that positions k.. could still use
    let mut future = vec![0u128; r + 1];
    for k in (0..r).rev() {
        future[k] = future[k + 1] | incident[k].iter().fold(0u128, |m, &f| m | (1u128 << f));
    }
    let mut memo: BTreeMap<(usize, u128), u64> = BTreeMap::new();
    fn go(
        k: usize,
        used: u128,
        incident: &[Vec<usize>],
        future: &[u128],
        memo: &mut BTreeMap<(usize, u128), u64>,
    ) -> Option<u64> {
        if k == incident.len() {
            return Some(1);
        }
        let key = (k, used & future[k]);
        if let Some(&v) = memo.get(&key) {
            return Some(v);
        }
        let mut total = 0u64;
        for &f in &incident[k] {
            let bit = 1u128 << f;
            if used & bit == 0 {
                total = total.checked_add(go(k + 1, used | bit, incident, future, memo)?)?;
            }
        }
        memo.insert(key, total);
        Some(total)
    }
    go(0, 0, incident, &future, &mut memo)
}

fn count_plain(incident: &[Vec<usize>], k: usize, used: &mut [bool]) -> Result<u64, PolygonError> {
    if k == incident.len() {
        return Ok(1);
    }
    let mut total = 0u64;
    for &f in &incident[k] {
        if !used[f] {
            used[f] = true;
            let sub = count_plain(incident, k + 1, used);
            used[f] = false;
            total = total.checked_add(sub?).ok_or(PolygonError::Overflow)?;
        }
    }
    Ok(total)
}

/// Every triangulation of the `n`-gon.
pub fn all_triangulations(n: u32) -> Vec<PolygonTriangulation> {
    fn rec(verts: &[u32]) -> Vec<Vec<(u32, u32)>> {
        let k = verts.len() - 1;
        if k < 2 {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for m in 1..k {
            let left = rec(&verts[..=m]);
            let right = rec(&verts[m..]);
            for l in &left {
                for r in &right {
                    let mut c = l.clone();
                    c.extend_from_slice(r);
                    if m > 1 {
                        c.push((verts[0], verts[m]));
                    }
                    if m < k - 1 {
                        c.push((verts[m], verts[k]));
                    }
                    out.push(c);
                }
            }
        }
        out
    }
    if n < 3 {
        return Vec::new();
    }
    let verts: Vec<u32> = (1..=n).collect();
    rec(&verts)
        .into_iter()
        .map(|c| PolygonTriangulation::new(n, c).expect("enumeration yields valid triangulations"))
        .collect()
}

/// A triangulation of the `n`-gon built by the same recursion as
/// [`all_triangulations`], with `pick(k)` choosing among `k` apexes.
pub fn triangulation_from_picks(n: u32, mut pick: impl FnMut(usize) -> usize) -> Result<PolygonTriangulation, PolygonError> {
    if n < 3 {
        return Err(PolygonError::TooSmall(n));
    }
    let mut chords = Vec::new();
    let mut stack = vec![(1..=n).collect::<Vec<u32>>()];
    while let Some(verts) = stack.pop() {
        let k = verts.len() - 1;
        if k < 2 {
            continue;
        }
        let m = 1 + pick(k - 1) % (k - 1);
        if m > 1 {
            chords.push((verts[0], verts[m]));
        }
        if m < k - 1 {
            chords.push((verts[m], verts[k]));
        }
        stack.push(verts[..=m].to_vec());
        stack.push(verts[m..].to_vec());
    }
    PolygonTriangulation::new(n, chords)
}

/// A frieze pattern of rank `n`, stored through its table of
/// Conway-Coxeter labels `cc[a - 1][b - 1] = CC(a, b)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FriezePattern {
    n: u32,
    cc: Vec<Vec<u64>>,
}

impl FriezePattern {
    pub fn from_table(n: u32, cc: Vec<Vec<u64>>) -> Option<Self> {
        let ok = cc.len() == n as usize && cc.iter().all(|r| r.len() == n as usize);
        ok.then_some(Self { n, cc })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn table(&self) -> &[Vec<u64>] {
        &self.cc
    }

    fn reduce(&self, r: i64) -> usize {
        (r - 1).rem_euclid(self.n as i64) as usize
    }

    /// `f(i, j)` for `0 < j - i < n`, `None` off the band.
    pub fn get(&self, i: i64, j: i64) -> Option<u64> {
        let d = j - i;
        (0 < d && d < self.n as i64).then(|| self.cc[self.reduce(i)][self.reduce(j)])
    }

    /// Border ones and the unimodular rule on every 2x2 block inside the band.
    pub fn satisfies_rules(&self) -> bool {
        let n = self.n as i64;
        for i in 0..n {
            if self.get(i, i + 1) != Some(1) || self.get(i, i + n - 1) != Some(1) {
                return false;
            }
            for j in i + 1..i + n - 1 {
                let (Some(a), Some(b), Some(c), Some(d)) =
                    (self.get(i, j), self.get(i, j + 1), self.get(i + 1, j), self.get(i + 1, j + 1))
                else {
                    continue;
                };
                if a as i128 * d as i128 - b as i128 * c as i128 != 1 {
                    return false;
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn heptagon() -> PolygonTriangulation {
        PolygonTriangulation::from_quiddity(&[1, 2, 3, 1, 3, 1, 4]).unwrap()
    }

    #[test]
    fn triangle_and_fan_faces() {
        let t = PolygonTriangulation::new(3, []).unwrap();
        assert_eq!(t.faces(), vec![[1, 2, 3]]);
        let fan = PolygonTriangulation::new(5, [(1, 3), (1, 4)]).unwrap();
        assert_eq!(fan.faces(), vec![[1, 2, 3], [1, 3, 4], [1, 4, 5]]);
    }

    #[test]
    fn heptagon_from_quiddity() {
        let h = heptagon();
        assert_eq!(h.faces().len(), 5);
        assert_eq!(h.quiddity(), vec![1, 2, 3, 1, 3, 1, 4]);
        let chords: Vec<_> = h.chords().iter().copied().collect();
        assert_eq!(chords, vec![(2, 7), (3, 5), (3, 7), (5, 7)]);
    }

    #[test]
    fn heptagon_cc_rows() {
        let h = heptagon();
        let from1: Vec<u64> = (2..=7).map(|v| h.cc(1, v).unwrap()).collect();
        assert_eq!(from1, vec![1, 2, 5, 3, 4, 1]);
        let from2: Vec<u64> = (3..=7).map(|v| h.cc(2, v).unwrap()).collect();
        assert_eq!(from2, vec![1, 3, 2, 3, 1]);
        let l = h.cc_labels(4).unwrap();
        assert_eq!((l[&4], l[&3], l[&5]), (0, 1, 1));
    }

    #[test]
    fn heptagon_bci() {
        let h = heptagon();
        assert_eq!(h.bci_count(&[1, 2]).unwrap(), 1);
        assert_eq!(h.bci_count(&[4]).unwrap(), 0);
        assert_eq!(h.bci_count(&[1, 2, 3]).unwrap(), 2);
        assert_eq!(h.bci_count(&[1, 2, 3, 4, 5]).unwrap(), 3);
        assert_eq!(h.bci_count(&[1, 7, 6, 5]).unwrap(), 3);
        assert_eq!(h.bci_count(&[1, 3]), Err(PolygonError::NotBoundaryWalk));
        assert_eq!(h.bci_count(&[1, 2, 1]), Err(PolygonError::NotBoundaryWalk));
    }

    #[test]
    fn heptagon_pattern() {
        let p = heptagon().frieze_pattern().unwrap();
        assert_eq!(p.get(1, 4), Some(5));
        assert_eq!(p.get(2, 5), Some(2));
        for x in 2..=7 {
            assert_eq!(p.get(x, 8), heptagon().cc(1, x as u32).ok());
        }
        assert_eq!(p.get(3, 3), None);
        assert_eq!(p.get(3, 10), None);
        assert!(p.satisfies_rules());
    }

    #[test]
    fn quiddity_rejects() {
        assert_eq!(PolygonTriangulation::from_quiddity(&[1, 1, 1]).unwrap().chords().len(), 0);
        assert!(matches!(PolygonTriangulation::from_quiddity(&[2, 2, 2]), Err(PolygonError::NotRealizable(_))));
        assert!(PolygonTriangulation::from_quiddity(&[2, 2, 2, 2, 1]).is_err());
    }

    #[test]
    fn invalid_chord_sets() {
        assert_eq!(PolygonTriangulation::new(5, [(1, 2), (1, 3)]), Err(PolygonError::NotAChord(1, 2)));
        assert_eq!(PolygonTriangulation::new(5, [(1, 5), (1, 3)]), Err(PolygonError::NotAChord(1, 5)));
        assert!(matches!(PolygonTriangulation::new(4, [(1, 3), (2, 4)]), Err(PolygonError::WrongChordCount { .. })));
        assert!(matches!(PolygonTriangulation::new(6, [(1, 3), (2, 5), (1, 5)]), Err(PolygonError::Crossing(..))));
        assert_eq!(PolygonTriangulation::new(2, []), Err(PolygonError::TooSmall(2)));
    }

    #[test]
    fn catalan_counts() {
        let counts: Vec<usize> = (3..=9).map(|n| all_triangulations(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 5, 14, 42, 132, 429]);
    }

    #[test]
    fn picks_build_valid_triangulations() {
        let mut state = 7usize;
        for n in 3..20 {
            let t = triangulation_from_picks(n, |k| {
                state = state.wrapping_mul(1103515245).wrapping_add(12345);
                (state >> 8) % k
            })
            .unwrap();
            assert_eq!(t.faces().len(), n as usize - 2);
        }
    }
}
