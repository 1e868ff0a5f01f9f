//! Catalog of the worked examples: the three-element set, its half-spaces,
//! point-convex hull, and the chart-Gorenstein-Fano polytopes with duals.

use crate::convex::{point_convex_hull, PlHalfSpace, PlPolytope};
use crate::geometry::{pt, Region, P2};
use crate::lattice::{ChartId, Element, MElement, ShearParam};
use crate::points::PointTriple;
use crate::scalar::fmt_q;
use crate::svg::{chart_svg, drawn_vertices};
use crate::Result;
use serde::Serialize;

#[derive(Debug, Clone)]
pub enum Content {
    Set(Vec<MElement>),
    HalfSpace(PlHalfSpace),
    Hull(Vec<MElement>),
    Polytope(PlPolytope),
    Dual(PlPolytope),
    PolytopeAndDual(PlPolytope),
}

#[derive(Debug, Clone)]
pub struct FigureSpec {
    pub id: &'static str,
    pub title: &'static str,
    pub s: ShearParam,
    pub content: Content,
}

fn sh(s: i64) -> ShearParam {
    ShearParam::new(s).unwrap()
}

fn poly(s: i64, pts: &[(i64, i64, i64)]) -> PlPolytope {
    let s = sh(s);
    let ps: Vec<PointTriple<i64>> = pts.iter().map(|&(a, b, c)| PointTriple::new(s, a, b, c).unwrap()).collect();
    PlPolytope::from_points(s, &ps, &vec![-1; ps.len()])
}

fn half(a: i64, b: i64, c: i64) -> PlHalfSpace {
    PlHalfSpace::from_ints(&PointTriple::new(sh(1), a, b, c).unwrap(), -1)
}

pub fn three_collinear() -> Vec<MElement> {
    vec![Element::new(0, 0), Element::new(0, 1), Element::new(0, -1)]
}

pub fn example_quadrilateral() -> PlPolytope {
    poly(1, &[(-2, 2, 1), (0, -1, -1), (1, -1, 1)])
}

pub fn example_hexagon() -> PlPolytope {
    poly(1, &[(-1, 0, -1), (1, -1, 0), (-1, 1, 0), (0, 0, 1), (1, -1, 1)])
}

pub fn example_s2() -> PlPolytope {
    poly(2, &[(-1, -1, -1), (1, -1, 1), (0, 0, 1), (-1, 1, 0)])
}

pub fn example_s3() -> PlPolytope {
    poly(3, &[(-2, -1, -1), (1, -1, 1), (0, 0, 1)])
}

pub fn example_s4() -> PlPolytope {
    poly(4, &[(-2, -2, -1), (0, 0, 1)])
}

pub fn example_nonintegral_dual() -> PlPolytope {
    poly(1, &[(0, 0, 1), (2, -2, 1), (-1, 0, -1)])
}

pub fn catalog() -> Vec<FigureSpec> {
    use Content::*;
    let f = |id, title, s, content| FigureSpec { id, title, s: sh(s), content };
    vec![
        f("fig3", "three collinear elements S", 1, Set(three_collinear())),
        f("fig4", "half-space of p = (-2,2,1) at -1", 1, HalfSpace(half(-2, 2, 1))),
        f("fig5", "half-space of q = (0,-1,-1) at -1", 1, HalfSpace(half(0, -1, -1))),
        f("fig6", "half-space of r = (1,-1,1) at -1", 1, HalfSpace(half(1, -1, 1))),
        f("fig7", "P = H_p ∩ H_q ∩ H_r", 1, Polytope(example_quadrilateral())),
        f("fig8", "dual of P", 1, Dual(example_quadrilateral())),
        f("fig9", "point-convex hull of S", 1, Hull(three_collinear())),
        f("fig10", "hexagon, s = 1, with dual", 1, PolytopeAndDual(example_hexagon())),
        f("fig11", "s = 2 example with dual", 2, PolytopeAndDual(example_s2())),
        f("fig12", "s = 3 example with dual", 3, PolytopeAndDual(example_s3())),
        f("fig13", "s = 4 example", 4, Polytope(example_s4())),
        f("fig14", "dual of the s = 4 example", 4, Dual(example_s4())),
        f("fig15", "s = 1 example with non-integral dual", 1, Polytope(example_nonintegral_dual())),
        f("fig16", "non-integral dual", 1, Dual(example_nonintegral_dual())),
    ]
}

pub fn lookup(id: &str) -> Option<FigureSpec> {
    catalog().into_iter().find(|f| f.id == id)
}

/// Drawing window for unbounded chart images.
pub const WINDOW: i64 = 2;

pub type QPair = [String; 2];

fn qpair(p: &P2) -> QPair {
    [fmt_q(&p.0), fmt_q(&p.1)]
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChartData {
    pub chart: u8,
    pub bounded: bool,
    /// Vertices of the image, or of its part inside the window when unbounded.
    pub vertices: Vec<QPair>,
    /// `n·v >= t` as `[n1, n2, t]`.
    pub halfplanes: Vec<[String; 3]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub window: Option<[QPair; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub integral: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<QPair>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub marks: Vec<QPair>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Constraint {
    pub point: [String; 3],
    pub threshold: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Panel {
    pub label: String,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub constraints: Vec<Constraint>,
    pub charts: Vec<ChartData>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub integral: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chart_gorenstein_fano: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lattice_equivalent: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub charts_identical: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FigureData {
    pub id: String,
    pub title: String,
    pub s: i64,
    pub panels: Vec<Panel>,
}

/// Geometry behind one panel: a region per chart (if any) and marked elements.
pub struct PanelGeometry {
    pub label: String,
    pub regions: [Option<Region>; 2],
    pub marks: [Vec<P2>; 2],
    pub polytope: Option<PlPolytope>,
}

fn marks(s: ShearParam, set: &[MElement]) -> [Vec<P2>; 2] {
    ChartId::BOTH.map(|c| set.iter().map(|m| m.to_q().chart(s, c)).collect())
}

fn of_polytope(label: &str, p: PlPolytope) -> PanelGeometry {
    PanelGeometry {
        label: label.into(),
        regions: ChartId::BOTH.map(|c| Some(p.chart_image(c).clone())),
        marks: [vec![], vec![]],
        polytope: Some(p),
    }
}

impl FigureSpec {
    pub fn geometry(&self) -> Result<Vec<PanelGeometry>> {
        let s = self.s;
        Ok(match &self.content {
            Content::Set(set) => vec![PanelGeometry { label: "S".into(), regions: [None, None], marks: marks(s, set), polytope: None }],
            Content::HalfSpace(h) => {
                let p = PlPolytope::new(s, vec![h.clone()]);
                vec![of_polytope("half-space", p)]
            }
            Content::Hull(set) => {
                let mut g = of_polytope("p-conv(S)", point_convex_hull(s, set)?);
                g.marks = marks(s, set);
                vec![g]
            }
            Content::Polytope(p) => vec![of_polytope("P", p.clone())],
            Content::Dual(p) => vec![of_polytope("dual", p.dual()?)],
            Content::PolytopeAndDual(p) => vec![of_polytope("P", p.clone()), of_polytope("dual", p.dual()?)],
        })
    }

    pub fn data(&self) -> Result<FigureData> {
        let panels = self.geometry()?.into_iter().map(|g| panel_data(&g)).collect();
        Ok(FigureData { id: self.id.into(), title: self.title.into(), s: self.s.get(), panels })
    }

    /// One SVG per panel and chart, named `<id>[-<panel>]-chart<k>.svg`.
    pub fn svgs(&self) -> Result<Vec<(String, String)>> {
        let geo = self.geometry()?;
        let multi = geo.len() > 1;
        let mut out = Vec::new();
        for (pi, g) in geo.iter().enumerate() {
            for (ci, c) in ChartId::BOTH.iter().enumerate() {
                let name = if multi {
                    format!("{}-{}-chart{}.svg", self.id, if pi == 0 { "p" } else { "dual" }, c.index())
                } else {
                    format!("{}-chart{}.svg", self.id, c.index())
                };
                let title = format!("{} {} chart {}", self.id, g.label, c.index());
                out.push((name, chart_svg(&title, g.regions[ci].as_ref(), &g.marks[ci])));
            }
        }
        Ok(out)
    }
}

fn constraint(h: &PlHalfSpace) -> Constraint {
    Constraint { point: [fmt_q(&h.p.a), fmt_q(&h.p.b), fmt_q(&h.p.c)], threshold: fmt_q(&h.a) }
}

pub fn chart_data(chart: ChartId, region: Option<&Region>, marks: &[P2]) -> ChartData {
    let w = WINDOW;
    let (lo, hi) = (pt(-w, -w), pt(w, w));
    let mut d = ChartData {
        chart: chart.index() as u8,
        bounded: true,
        vertices: vec![],
        halfplanes: vec![],
        window: None,
        integral: None,
        witness: None,
        marks: marks.iter().map(qpair).collect(),
    };
    let Some(r) = region else { return d };
    d.bounded = r.is_bounded();
    d.vertices = drawn_vertices(r, &lo, &hi).iter().map(qpair).collect();
    let mut hs: Vec<[String; 3]> = r.hrep().iter().map(|h| [fmt_q(&h.n.0), fmt_q(&h.n.1), fmt_q(&h.t)]).collect();
    hs.sort();
    hs.dedup();
    d.halfplanes = hs;
    if let Some(p) = r.polygon() {
        d.integral = Some(p.is_integral());
        d.witness = p.vertices().iter().find(|v| !v.0.is_integer() || !v.1.is_integer()).map(qpair);
    } else if !r.is_bounded() {
        d.window = Some([qpair(&lo), qpair(&hi)]);
    }
    d
}

/// Panel for a single polytope, as in the figure JSON.
pub fn polytope_panel(label: &str, p: &PlPolytope) -> Panel {
    panel_data(&of_polytope(label, p.clone()))
}

fn panel_data(g: &PanelGeometry) -> Panel {
    let charts: Vec<ChartData> = ChartId::BOTH
        .iter()
        .enumerate()
        .map(|(i, &c)| chart_data(c, g.regions[i].as_ref(), &g.marks[i]))
        .collect();
    let mut panel = Panel {
        label: g.label.clone(),
        constraints: vec![],
        charts,
        integral: None,
        chart_gorenstein_fano: None,
        lattice_equivalent: None,
        charts_identical: None,
    };
    if let Some(p) = &g.polytope {
        panel.constraints = p.constraints.iter().map(constraint).collect();
        if p.is_compact() {
            let (a, b) = (p.polygon(ChartId::Chart1).unwrap(), p.polygon(ChartId::Chart2).unwrap());
            panel.integral = Some(a.is_integral() && b.is_integral());
            panel.chart_gorenstein_fano = Some(p.is_chart_gorenstein_fano());
            panel.charts_identical = Some(a == b);
            panel.lattice_equivalent = Some(matches!(a.lattice_equivalent(b), Ok(Some(_))));
        }
    }
    panel
}
