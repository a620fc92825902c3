use std::f64::consts::PI;
use std::fmt::Write;

use crate::commands::AtlasEntry;

const COLUMNS: usize = 6;
const PANEL: f64 = 160.0;
const RADIUS: f64 = 58.0;

fn vertex(n: usize, v: usize, cx: f64, cy: f64) -> (f64, f64) {
    let a = 2.0 * PI * v as f64 / n as f64 - PI / 2.0;
    (cx + RADIUS * a.cos(), cy + RADIUS * a.sin())
}

/// One panel per class: the representative drawn on a regular polygon,
/// labeled `n.k.i` with its class size.
pub fn atlas_svg(entries: &[AtlasEntry]) -> String {
    let cols = entries.len().clamp(1, COLUMNS);
    let rows = entries.len().div_ceil(COLUMNS).max(1);
    let (w, h) = (cols as f64 * PANEL, rows as f64 * (PANEL + 20.0));
    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w:.0}" height="{h:.0}" viewBox="0 0 {w:.0} {h:.0}">"#
    );
    let _ = writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#);
    for (idx, e) in entries.iter().enumerate() {
        let r = &e.record;
        let n = r.n;
        let cx = (idx % COLUMNS) as f64 * PANEL + PANEL / 2.0;
        let cy = (idx / COLUMNS) as f64 * (PANEL + 20.0) + PANEL / 2.0;
        let _ = writeln!(s, r#"<g id="class-{}">"#, r.label());
        let points: Vec<String> = (0..n)
            .map(|v| {
                let (x, y) = vertex(n, v, cx, cy);
                format!("{x:.3},{y:.3}")
            })
            .collect();
        let _ = writeln!(
            s,
            r#"<polygon points="{}" fill="none" stroke="black" stroke-width="1.5"/>"#,
            points.join(" ")
        );
        for d in r.representative.diagonals() {
            let (a, b) = d.ends();
            let (x1, y1) = vertex(n, a, cx, cy);
            let (x2, y2) = vertex(n, b, cx, cy);
            let _ = writeln!(
                s,
                r#"<line x1="{x1:.3}" y1="{y1:.3}" x2="{x2:.3}" y2="{y2:.3}" stroke="steelblue" stroke-width="1.5"/>"#
            );
        }
        let ty = cy + RADIUS + 22.0;
        let _ = writeln!(
            s,
            r#"<text x="{cx:.3}" y="{ty:.3}" text-anchor="middle" font-family="sans-serif" font-size="12">{} &#954;={}</text>"#,
            r.label(),
            r.kappa
        );
        let _ = writeln!(s, "</g>");
    }
    s.push_str("</svg>\n");
    s
}
