//! Deterministic SVG drawings of chart images: lattice dots over the padded
//! bounding box, region filled 50% gray, marked elements as larger dots.

use crate::geometry::{Region, P2};
use crate::scalar::Q;
use num_traits::ToPrimitive;
use std::fmt::Write;

const UNIT: f64 = 40.0;

fn f(x: f64) -> String {
    let s = format!("{x:.3}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" { "0".into() } else { s.into() }
}

fn qf(x: &Q) -> f64 {
    x.to_f64().unwrap_or(0.0)
}

/// Integer box `[lo, hi]` covering the finite part of the drawing, padded by 1.
pub fn view_box(region: Option<&Region>, marks: &[P2]) -> (P2, P2) {
    let mut pts: Vec<P2> = marks.to_vec();
    let mut unbounded = false;
    match region {
        Some(Region::Bounded(p)) => pts.extend(p.vertices().iter().cloned()),
        Some(Region::Unbounded(u)) => {
            pts.extend(u.vertices.iter().cloned());
            unbounded = true;
        }
        _ => {}
    }
    if pts.is_empty() || unbounded {
        pts.push((Q::from_integer((-2).into()), Q::from_integer((-2).into())));
        pts.push((Q::from_integer(2.into()), Q::from_integer(2.into())));
    }
    let one = Q::from_integer(1.into());
    let lx = pts.iter().map(|p| p.0.floor()).min().unwrap() - &one;
    let ly = pts.iter().map(|p| p.1.floor()).min().unwrap() - &one;
    let hx = pts.iter().map(|p| p.0.ceil()).max().unwrap() + &one;
    let hy = pts.iter().map(|p| p.1.ceil()).max().unwrap() + &one;
    ((lx, ly), (hx, hy))
}

/// The drawn polygon: the region itself, or its part inside the box.
pub fn drawn_vertices(region: &Region, lo: &P2, hi: &P2) -> Vec<P2> {
    match region {
        Region::Bounded(p) => p.vertices().to_vec(),
        Region::Empty => vec![],
        r => match r.clip(lo, hi) {
            Region::Bounded(p) => p.vertices().to_vec(),
            _ => vec![],
        },
    }
}

pub fn chart_svg(title: &str, region: Option<&Region>, marks: &[P2]) -> String {
    let (lo, hi) = view_box(region, marks);
    let (lx, ly, hx, hy) = (qf(&lo.0), qf(&lo.1), qf(&hi.0), qf(&hi.1));
    let w = (hx - lx) * UNIT;
    let h = (hy - ly) * UNIT;
    let px = |x: f64| (x - lx) * UNIT;
    let py = |y: f64| (hy - y) * UNIT;
    let mut out = String::new();
    let _ = writeln!(out, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{}" height="{}" viewBox="0 0 {} {}">"#, f(w), f(h), f(w), f(h));
    let _ = writeln!(out, "<title>{title}</title>");
    let _ = writeln!(out, r##"<rect x="0" y="0" width="{}" height="{}" fill="#ffffff"/>"##, f(w), f(h));
    if let Some(r) = region {
        let vs = drawn_vertices(r, &lo, &hi);
        if !vs.is_empty() {
            let pts: Vec<String> = vs.iter().map(|v| format!("{},{}", f(px(qf(&v.0))), f(py(qf(&v.1))))).collect();
            let _ = writeln!(out, r##"<polygon points="{}" fill="#808080" stroke="#000000" stroke-width="1.5"/>"##, pts.join(" "));
        }
    }
    if lx <= 0.0 && hx >= 0.0 {
        let _ = writeln!(out, r##"<line x1="{0}" y1="0" x2="{0}" y2="{1}" stroke="#a0a0a0"/>"##, f(px(0.0)), f(h));
    }
    if ly <= 0.0 && hy >= 0.0 {
        let _ = writeln!(out, r##"<line x1="0" y1="{0}" x2="{1}" y2="{0}" stroke="#a0a0a0"/>"##, f(py(0.0)), f(w));
    }
    let (ix, iy, jx, jy) = (lx as i64, ly as i64, hx as i64, hy as i64);
    for x in ix..=jx {
        for y in iy..=jy {
            let _ = writeln!(out, r##"<circle cx="{}" cy="{}" r="2" fill="#000000"/>"##, f(px(x as f64)), f(py(y as f64)));
        }
    }
    for m in marks {
        let _ = writeln!(out, r##"<circle cx="{}" cy="{}" r="5" fill="#c00000"/>"##, f(px(qf(&m.0))), f(py(qf(&m.1))));
    }
    out.push_str("</svg>\n");
    out
}
