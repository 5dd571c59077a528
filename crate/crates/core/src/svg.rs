//! SVG drawings of fans and annuli: straight-line (or, for annuli, polar)
//! embeddings, red arrowheads on oriented edges, gray fill for the triangles
//! under a highlighted path or loop.

use std::f64::consts::TAU;
use std::fmt::Write;

use crate::annulus::AnnulusTriangulation;
use crate::error::{Error, Result};
use crate::geometry::Point;
use crate::polygon::FanTriangulation;

const W: f64 = 640.0;
const MARGIN: f64 = 40.0;
const ARROW: &str = "#d62728";

fn header(out: &mut String, w: f64, h: f64) {
    let _ = writeln!(
        out,
        r#"<?xml version="1.0" encoding="UTF-8"?>
<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w:.0}" height="{h:.0}" viewBox="0 0 {w:.0} {h:.0}">
<rect width="100%" height="100%" fill="white"/>"#
    );
}

fn arrowhead(out: &mut String, from: (f64, f64), to: (f64, f64)) {
    let (mx, my) = ((from.0 + to.0) / 2.0, (from.1 + to.1) / 2.0);
    let (dx, dy) = (to.0 - from.0, to.1 - from.1);
    let len = (dx * dx + dy * dy).sqrt().max(1e-9);
    let (ux, uy) = (dx / len, dy / len);
    let s = 7.0;
    let tip = (mx + ux * s * 0.6, my + uy * s * 0.6);
    let left = (mx - ux * s * 0.6 - uy * s * 0.5, my - uy * s * 0.6 + ux * s * 0.5);
    let right = (mx - ux * s * 0.6 + uy * s * 0.5, my - uy * s * 0.6 - ux * s * 0.5);
    let _ = writeln!(
        out,
        r#"<polygon points="{:.2},{:.2} {:.2},{:.2} {:.2},{:.2}" fill="{ARROW}"/>"#,
        tip.0, tip.1, left.0, left.1, right.0, right.1
    );
}

fn polyline(out: &mut String, pts: &[(f64, f64)], stroke: &str, width: f64) {
    let coords: Vec<String> = pts.iter().map(|p| format!("{:.2},{:.2}", p.0, p.1)).collect();
    let _ = writeln!(
        out,
        r#"<polyline points="{}" fill="none" stroke="{stroke}" stroke-width="{width}"/>"#,
        coords.join(" ")
    );
}

fn filled(out: &mut String, pts: &[(f64, f64)], fill: &str) {
    let coords: Vec<String> = pts.iter().map(|p| format!("{:.2},{:.2}", p.0, p.1)).collect();
    let _ = writeln!(
        out,
        r#"<polygon points="{}" fill="{fill}" stroke="none"/>"#,
        coords.join(" ")
    );
}

fn label(out: &mut String, at: (f64, f64), text: &str) {
    let _ = writeln!(
        out,
        r#"<text x="{:.2}" y="{:.2}" font-family="sans-serif" font-size="13" text-anchor="middle">{text}</text>"#,
        at.0, at.1
    );
}

/// The fan with its oriented edges and weights. With `highlight = Some(i)`
/// the `i`-th path from `k+1` to `1` is drawn in blue over its gray coarea.
pub fn render_fan(t: &FanTriangulation, highlight: Option<usize>) -> Result<String> {
    let max_x = t.coords.iter().map(|p| p.0).max().unwrap_or(1).max(1) as f64;
    let h = 300.0;
    let map = |p: Point| {
        (
            MARGIN + p.0 as f64 / max_x * (W - 2.0 * MARGIN),
            if p.1 == 1 { 60.0 } else { h - 60.0 },
        )
    };
    let mut out = String::new();
    header(&mut out, W, h);

    let path = match highlight {
        Some(i) => {
            let paths = t.enumerate_paths(t.k + 1, 1)?;
            let n = paths.len();
            Some(paths.into_iter().nth(i).ok_or_else(|| {
                Error::Parse(format!("path index {i} out of range (0..{n})"))
            })?)
        }
        None => None,
    };
    if let Some(p) = &path {
        for ti in t.coarea_triangles(&p.vertices) {
            let pts: Vec<_> = t.triangles[ti].vertices.iter().map(|&v| map(t.coords[v])).collect();
            filled(&mut out, &pts, "#cccccc");
        }
    }
    let (l0, l1) = (map(t.coords[0]), map(t.coords[1]));
    polyline(&mut out, &[l0, l1], "black", 1.5);
    for (&(u, v), &e) in &t.edges {
        let (a, b) = (map(t.coords[u]), map(t.coords[v]));
        polyline(&mut out, &[a, b], "black", 1.5);
        arrowhead(&mut out, a, b);
        let mid = ((a.0 + b.0) / 2.0 + 8.0, (a.1 + b.1) / 2.0 - 4.0);
        if e != 0 {
            label(&mut out, mid, &format!("q{e}"));
        }
    }
    if let Some(p) = &path {
        let pts: Vec<_> = p.vertices.iter().map(|&v| map(t.coords[v])).collect();
        polyline(&mut out, &pts, "#1f77b4", 3.0);
    }
    for v in 0..t.n {
        let (x, y) = map(t.coords[v]);
        let dy = if t.is_top(v) { -10.0 } else { 20.0 };
        let _ = writeln!(out, r#"<circle cx="{x:.2}" cy="{y:.2}" r="3" fill="black"/>"#);
        label(&mut out, (x, y + dy), &v.to_string());
    }
    out.push_str("</svg>\n");
    Ok(out)
}

/// The annulus drawn on two concentric circles, arcs following the polar
/// image of their straight lifts. `highlight` picks a loop by index.
pub fn render_annulus(a: &AnnulusTriangulation, highlight: Option<usize>) -> Result<String> {
    let size = W;
    let c = size / 2.0;
    let (r_in, r_out) = (90.0, 260.0);
    let period = a.period as f64;
    let map = |x: f64, y: f64| {
        let theta = TAU * x / period;
        let r = r_out + (r_in - r_out) * y;
        (c + r * theta.cos(), c - r * theta.sin())
    };
    let curve = |p: Point, q: Point| -> Vec<(f64, f64)> {
        (0..=24)
            .map(|i| {
                let s = i as f64 / 24.0;
                map(
                    p.0 as f64 + s * (q.0 - p.0) as f64,
                    p.1 as f64 + s * (q.1 - p.1) as f64,
                )
            })
            .collect()
    };
    let mut out = String::new();
    header(&mut out, size, size);
    for r in [r_in, r_out] {
        let _ = writeln!(
            out,
            r#"<circle cx="{c:.2}" cy="{c:.2}" r="{r:.2}" fill="none" stroke="black" stroke-width="1.5"/>"#
        );
    }

    let chosen = match highlight {
        Some(i) => {
            let loops = a.enumerate_loops()?;
            let n = loops.len();
            Some(loops.into_iter().nth(i).ok_or_else(|| {
                Error::Parse(format!("loop index {i} out of range (0..{n})"))
            })?)
        }
        None => None,
    };
    if let Some(lp) = &chosen {
        for ti in a.coarea_triangles(lp)? {
            let [p, q, r] = a.triangles[ti].cover;
            let mut pts = curve(p, q);
            pts.extend(curve(q, r));
            pts.extend(curve(r, p));
            filled(&mut out, &pts, "#cccccc");
        }
    }
    for (i, arc) in a.arcs.iter().enumerate() {
        let pts = curve(a.position(arc.from, 0), a.position(arc.to, arc.shift));
        let on_loop = chosen.as_ref().is_some_and(|lp| lp.arcs.contains(&i));
        let (stroke, width) = if on_loop { ("#1f77b4", 3.0) } else { ("black", 1.2) };
        polyline(&mut out, &pts, stroke, width);
        let m = pts.len() / 2;
        arrowhead(&mut out, pts[m - 1], pts[m + 1]);
    }
    for node in a.nodes() {
        let p = a.position(node, 0);
        let (x, y) = map(p.0 as f64, p.1 as f64);
        let _ = writeln!(out, r#"<circle cx="{x:.2}" cy="{y:.2}" r="3.5" fill="black"/>"#);
        let (dx, dy) = ((x - c) * 0.08, (y - c) * 0.08);
        label(&mut out, (x + dx, y + dy + 4.0), &a.label(node).to_string());
    }
    out.push_str("</svg>\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::farey::RegularCF;

    #[test]
    fn fan_svg_has_every_edge() {
        let t = FanTriangulation::from_regular(&RegularCF::new(vec![1, 2, 1, 1]).unwrap());
        let svg = render_fan(&t, Some(0)).unwrap();
        assert!(svg.starts_with("<?xml"));
        assert!(svg.trim_end().ends_with("</svg>"));
        // 10 oriented edges, one arrowhead each.
        assert_eq!(svg.matches(&format!("fill=\"{ARROW}\"")).count(), 10);
        assert!(render_fan(&t, Some(99)).is_err());
    }

    #[test]
    fn annulus_svg() {
        let a = AnnulusTriangulation::build(crate::annulus::AnnulusKind::Minus, &[2, 2, 3]).unwrap();
        let svg = render_annulus(&a, Some(2)).unwrap();
        assert_eq!(svg.matches(&format!("fill=\"{ARROW}\"")).count(), a.arcs.len());
        assert!(svg.contains("#cccccc") || a.enumerate_loops().unwrap()[2].coarea == 0);
    }
}
