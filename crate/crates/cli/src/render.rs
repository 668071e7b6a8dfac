//! ASCII grids and SVG drawings.

use std::collections::BTreeMap;
use std::fmt::Write;

use frieze_core::{FriezePattern, FriezeView, PolygonTriangulation, StripTriangulation};

/// Right-aligned cells of one common width, header row of column labels
/// first, rows top to bottom. Ranges are inclusive; `lo > hi` is empty.
pub fn grid(rows: (i64, i64), cols: (i64, i64), cell: impl Fn(i64, i64) -> String) -> String {
    let cols: Vec<i64> = (cols.0..=cols.1).collect();
    let mut table = vec![std::iter::once(String::new()).chain(cols.iter().map(|j| format!("({j})"))).collect::<Vec<_>>()];
    for i in rows.0..=rows.1 {
        let mut row = vec![format!("({i})")];
        row.extend(cols.iter().map(|&j| cell(i, j)));
        table.push(row);
    }
    let width = table.iter().flatten().map(String::len).max().unwrap_or(0);
    let mut out = String::new();
    for row in &table {
        let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
        out.push_str(line.join(" ").trim_end());
        out.push('\n');
    }
    out
}

pub fn render_frieze(t: &FriezeView, rows: (i64, i64), cols: (i64, i64)) -> String {
    grid(rows, cols, |i, j| t.entry(i, j).to_string())
}

/// Cells outside the band of the pattern print as `-`.
pub fn render_pattern(p: &FriezePattern, rows: (i64, i64), cols: (i64, i64)) -> String {
    grid(rows, cols, |i, j| p.get(i, j).map_or_else(|| "-".to_string(), |v| v.to_string()))
}

const PAD: f64 = 20.0;

/// Lower boundary at the bottom, upper boundary `scale` above it; lower
/// points sit `scale` apart. Upper points are placed over the mean of the
/// lower ends of their arcs, pushed right where needed to keep their order.
pub fn render_strip(t: &StripTriangulation, scale: f64) -> String {
    let (lo, hi) = t.region();
    let x_lower = |i: i64| PAD + (i - lo) as f64 * scale;
    let y_lower = PAD + scale;
    let y_upper = PAD;
    let mut ends: BTreeMap<i64, Vec<i64>> = t.upper_points().iter().map(|&u| (u, Vec::new())).collect();
    for (u, p) in t.bridging_arcs() {
        ends.entry(u).or_default().push(p);
    }
    let mut x_upper = BTreeMap::new();
    let mut prev = f64::NEG_INFINITY;
    for (u, ps) in &ends {
        let mean = if ps.is_empty() { x_lower(lo) } else { ps.iter().map(|&p| x_lower(p)).sum::<f64>() / ps.len() as f64 };
        let x = mean.max(prev + scale / 4.0);
        x_upper.insert(*u, x);
        prev = x;
    }
    let right = x_upper.values().copied().fold(x_lower(hi), f64::max);
    let width = right + PAD;
    let height = y_lower + PAD;
    let mut s = String::new();
    writeln!(s, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.1}" height="{height:.1}" viewBox="0 0 {width:.1} {height:.1}">"#).unwrap();
    writeln!(s, r#"<g stroke="black" fill="none" stroke-width="1">"#).unwrap();
    writeln!(s, r#"<line x1="{:.1}" y1="{y_lower:.1}" x2="{:.1}" y2="{y_lower:.1}"/>"#, PAD / 2.0, width - PAD / 2.0).unwrap();
    writeln!(s, r#"<line x1="{:.1}" y1="{y_upper:.1}" x2="{:.1}" y2="{y_upper:.1}"/>"#, PAD / 2.0, width - PAD / 2.0).unwrap();
    for (a, b) in t.peripheral_arcs() {
        let (x1, x2) = (x_lower(a), x_lower(b));
        let rx = (x2 - x1) / 2.0;
        let ry = rx.min(scale * 0.9);
        writeln!(s, r#"<path d="M {x1:.1} {y_lower:.1} A {rx:.1} {ry:.1} 0 0 1 {x2:.1} {y_lower:.1}"/>"#).unwrap();
    }
    for (u, p) in t.bridging_arcs() {
        writeln!(s, r#"<line x1="{:.1}" y1="{y_upper:.1}" x2="{:.1}" y2="{y_lower:.1}"/>"#, x_upper[&u], x_lower(p)).unwrap();
    }
    writeln!(s, "</g>").unwrap();
    writeln!(s, r#"<g font-family="monospace" font-size="10" text-anchor="middle">"#).unwrap();
    for i in lo..=hi {
        let x = x_lower(i);
        writeln!(s, r#"<circle cx="{x:.1}" cy="{y_lower:.1}" r="2"/><text x="{x:.1}" y="{:.1}">{i}</text>"#, y_lower + 14.0).unwrap();
    }
    for (u, x) in &x_upper {
        writeln!(s, r#"<circle cx="{x:.1}" cy="{y_upper:.1}" r="2"/><text x="{x:.1}" y="{:.1}">{u}</text>"#, y_upper - 6.0).unwrap();
    }
    writeln!(s, "</g>\n</svg>").unwrap();
    s
}

/// Vertices `1..=n` counterclockwise on a circle of radius `scale`,
/// vertex 1 at the top.
pub fn render_polygon(p: &PolygonTriangulation, scale: f64) -> String {
    let n = p.n();
    let c = scale + PAD;
    let pos = |v: u32| {
        let angle = std::f64::consts::FRAC_PI_2 + std::f64::consts::TAU * (v - 1) as f64 / n as f64;
        (c + scale * angle.cos(), c - scale * angle.sin())
    };
    let size = 2.0 * c;
    let mut s = String::new();
    writeln!(s, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{size:.1}" height="{size:.1}" viewBox="0 0 {size:.1} {size:.1}">"#).unwrap();
    let outline: Vec<String> = (1..=n).map(|v| {
        let (x, y) = pos(v);
        format!("{x:.1},{y:.1}")
    }).collect();
    writeln!(s, r#"<polygon points="{}" stroke="black" fill="none"/>"#, outline.join(" ")).unwrap();
    for &(a, b) in p.chords() {
        let ((x1, y1), (x2, y2)) = (pos(a), pos(b));
        writeln!(s, r#"<line x1="{x1:.1}" y1="{y1:.1}" x2="{x2:.1}" y2="{y2:.1}" stroke="black"/>"#).unwrap();
    }
    for v in 1..=n {
        let (x, y) = pos(v);
        let (lx, ly) = (c + (x - c) * (1.0 + 12.0 / scale), c + (y - c) * (1.0 + 12.0 / scale));
        writeln!(s, r#"<text x="{lx:.1}" y="{ly:.1}" font-family="monospace" font-size="10" text-anchor="middle">{v}</text>"#).unwrap();
    }
    writeln!(s, "</svg>").unwrap();
    s
}
