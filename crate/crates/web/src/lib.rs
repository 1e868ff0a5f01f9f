//! Browser bindings. Each export takes plain strings and returns a JSON
//! string; the `*_json` functions hold the logic so they run natively too.

use polyptych::convex::{point_convex_hull, PlHalfSpace, PlPolytope};
use polyptych::detrop::valuation;
use polyptych::figures::{polytope_panel, Panel};
use polyptych::lattice::{ChartId, Element, MElement};
use polyptych::scalar::{fmt_q, parse_q};
use polyptych::svg::chart_svg;
use polyptych::algebra::AlgebraElement;
use polyptych::{PointTriple, ShearParam, Q};
use serde::{Deserialize, Serialize};
use wasm_bindgen::prelude::*;

#[derive(Deserialize)]
#[serde(untagged)]
enum Num {
    Int(i64),
    Str(String),
}

fn num(n: &Num) -> Result<Q, String> {
    match n {
        Num::Int(i) => Ok(Q::from_integer((*i).into())),
        Num::Str(t) => parse_q(t).ok_or_else(|| format!("bad rational {t:?}")),
    }
}

fn shear(s: i32) -> Result<ShearParam, String> {
    ShearParam::new(s as i64).map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct View {
    panels: Vec<Panel>,
    /// `[panel][chart]` SVG documents.
    svgs: Vec<[String; 2]>,
}

fn view(items: &[(&str, &PlPolytope, &[MElement])]) -> String {
    let mut v = View { panels: vec![], svgs: vec![] };
    for (label, p, marks) in items {
        v.panels.push(polytope_panel(label, p));
        v.svgs.push(ChartId::BOTH.map(|c| {
            let ms: Vec<_> = marks.iter().map(|m| m.to_q().chart(p.s, c)).collect();
            chart_svg(&format!("{label} chart {}", c.index()), Some(p.chart_image(c)), &ms)
        }));
    }
    serde_json::to_string(&v).expect("serializable")
}

/// `points` is a JSON list of `[a, b, c]` (integers or "p/q" strings), each
/// with threshold -1. Returns P and its dual.
pub fn polytope_json(s: i32, points: &str) -> Result<String, String> {
    let s = shear(s)?;
    let raw: Vec<[Num; 3]> = serde_json::from_str(points).map_err(|e| e.to_string())?;
    if raw.is_empty() {
        return Err("no points".into());
    }
    let mut hs = Vec::new();
    for [a, b, c] in &raw {
        let p = PointTriple::new(s, num(a)?, num(b)?, num(c)?).map_err(|e| e.to_string())?;
        hs.push(PlHalfSpace::new(p, Q::from_integer((-1).into())));
    }
    let p = PlPolytope::new(s, hs);
    if !p.is_compact() {
        return Err("polytope is not compact".into());
    }
    let d = p.dual().map_err(|e| e.to_string())?;
    Ok(view(&[("P", &p, &[]), ("dual", &d, &[])]))
}

/// `elements` is a JSON list of chart-1 integer pairs.
pub fn hull_json(s: i32, elements: &str) -> Result<String, String> {
    let s = shear(s)?;
    let raw: Vec<[i64; 2]> = serde_json::from_str(elements).map_err(|e| e.to_string())?;
    let els: Vec<MElement> = raw.iter().map(|&[x, y]| Element::new(x, y)).collect();
    let h = point_convex_hull(s, &els).map_err(|e| e.to_string())?;
    Ok(view(&[("p-conv(S)", &h, &els)]))
}

#[derive(Serialize)]
struct ValuationView {
    canonical: String,
    infinity: bool,
    pieces: Vec<[String; 3]>,
    point: Option<[String; 3]>,
}

pub fn valuation_json(s: i32, expr: &str) -> Result<String, String> {
    let s = shear(s)?;
    let f = AlgebraElement::parse(expr, s).map_err(|e| e.to_string())?;
    let v = valuation(&f, s);
    let tr = |p: &PointTriple<Q>| [fmt_q(&p.a), fmt_q(&p.b), fmt_q(&p.c)];
    let out = ValuationView { canonical: f.display(s), infinity: v.is_infinity(), pieces: v.pieces().iter().map(tr).collect(), point: v.as_point(s).map(tr) };
    Ok(serde_json::to_string(&out).expect("serializable"))
}

#[wasm_bindgen]
pub fn polytope_view(s: i32, points: &str) -> Result<String, JsError> {
    polytope_json(s, points).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn hull_view(s: i32, elements: &str) -> Result<String, JsError> {
    hull_json(s, elements).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn valuation_view(s: i32, expr: &str) -> Result<String, JsError> {
    valuation_json(s, expr).map_err(|e| JsError::new(&e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::Value;

    #[test]
    fn polytope_and_dual() {
        let v: Value = serde_json::from_str(&polytope_json(4, "[[-2,-2,-1],[0,0,1]]").unwrap()).unwrap();
        assert_eq!(v["panels"][1]["charts_identical"], Value::Bool(true));
        assert!(v["svgs"][0][0].as_str().unwrap().starts_with("<svg"));
        assert!(polytope_json(1, "[[1,1,1]]").unwrap_err().contains("T_s"));
        assert!(polytope_json(1, r#"[["1","-1","1"]]"#).unwrap_err().contains("compact"));
        assert!(polytope_json(0, "[]").is_err());
    }

    #[test]
    fn hull() {
        let v: Value = serde_json::from_str(&hull_json(1, "[[0,0],[0,1],[0,-1]]").unwrap()).unwrap();
        assert_eq!(v["panels"][0]["charts"][0]["witness"], serde_json::json!(["1/2", "0"]));
        assert!(hull_json(1, "[]").is_err());
    }

    #[test]
    fn valuations() {
        let v: Value = serde_json::from_str(&valuation_json(1, "x1").unwrap()).unwrap();
        assert_eq!(v["point"], serde_json::json!(["0", "0", "1"]));
        let v: Value = serde_json::from_str(&valuation_json(1, "0").unwrap()).unwrap();
        assert_eq!(v["infinity"], Value::Bool(true));
        assert!(valuation_json(1, "x3").is_err());
    }
}
