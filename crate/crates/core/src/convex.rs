//! PL half-spaces and PL polytopes in `M_s ⊗ Q`, their duals, and point-convex hulls.

use crate::geometry::{convex_hull, intersect, perp, prim, refine_cones, sub, Cone2, ConvexPolygon, HalfPlane, Region, P2};
use crate::lattice::{ChartId, Element, MElement, MElementR, ShearParam};
use crate::points::{dual_pairing_w, PointTriple};
use crate::scalar::{q, Q};
use crate::{Error, Result};
use num_traits::{Signed, Zero};

/// `{m : p(m) >= a}`
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PlHalfSpace {
    pub p: PointTriple<Q>,
    pub a: Q,
}

impl PlHalfSpace {
    pub fn new(p: PointTriple<Q>, a: Q) -> Self {
        PlHalfSpace { p, a }
    }

    pub fn from_ints(p: &PointTriple<i64>, a: i64) -> Self {
        PlHalfSpace { p: p.to_q(), a: q(a) }
    }

    /// A point is the min of its two linear extensions in either chart, so
    /// the chart image is the intersection of two half-planes.
    pub fn chart_halfplanes(&self, s: ShearParam, chart: ChartId) -> Vec<HalfPlane> {
        let mut out: Vec<HalfPlane> = Vec::new();
        for f in self.p.forms(s, chart) {
            let h = HalfPlane::new(f, self.a.clone());
            if !out.contains(&h) {
                out.push(h);
            }
        }
        out
    }

    pub fn contains(&self, m: &MElementR) -> bool {
        self.p.evaluate(m) >= self.a
    }
}

pub fn halfspace_chart_image(h: &PlHalfSpace, s: ShearParam, chart: ChartId) -> Region {
    intersect(&h.chart_halfplanes(s, chart))
}

#[derive(Debug, Clone)]
pub struct PlPolytope {
    pub s: ShearParam,
    pub constraints: Vec<PlHalfSpace>,
    chart1: Region,
    chart2: Region,
}

fn chart_region(s: ShearParam, cs: &[PlHalfSpace], chart: ChartId) -> Region {
    let hs: Vec<HalfPlane> = cs.iter().flat_map(|h| h.chart_halfplanes(s, chart)).collect();
    intersect(&hs)
}

impl PlPolytope {
    pub fn new(s: ShearParam, constraints: Vec<PlHalfSpace>) -> Self {
        let chart1 = chart_region(s, &constraints, ChartId::Chart1);
        let chart2 = chart_region(s, &constraints, ChartId::Chart2);
        PlPolytope { s, constraints, chart1, chart2 }
    }

    /// Constraints `(p_i, a_i)` with integer data.
    pub fn from_points(s: ShearParam, pts: &[PointTriple<i64>], thresholds: &[i64]) -> Self {
        let cs = pts.iter().zip(thresholds).map(|(p, &a)| PlHalfSpace::from_ints(p, a)).collect();
        PlPolytope::new(s, cs)
    }

    pub fn chart_image(&self, chart: ChartId) -> &Region {
        match chart {
            ChartId::Chart1 => &self.chart1,
            ChartId::Chart2 => &self.chart2,
        }
    }

    pub fn polygon(&self, chart: ChartId) -> Option<&ConvexPolygon> {
        self.chart_image(chart).polygon()
    }

    pub fn is_compact(&self) -> bool {
        self.chart1.is_bounded() && self.chart2.is_bounded()
    }

    pub fn contains(&self, m: &MElementR) -> bool {
        self.constraints.iter().all(|h| h.contains(m))
    }

    pub fn pl_vertices(&self) -> Result<Vec<MElementR>> {
        if !self.is_compact() {
            return Err(Error::NotCompact);
        }
        let mut out: Vec<MElementR> = Vec::new();
        for chart in ChartId::BOTH {
            if let Some(p) = self.polygon(chart) {
                for v in p.vertices() {
                    let e = Element::from_chart(self.s, chart, v.clone());
                    if !out.contains(&e) {
                        out.push(e);
                    }
                }
            }
        }
        out.sort();
        Ok(out)
    }

    pub fn is_chart_gorenstein_fano(&self) -> bool {
        self.is_compact()
            && self.constraints.iter().all(|h| h.a == q(-1))
            && ChartId::BOTH.iter().all(|&c| self.polygon(c).is_some_and(|p| p.dim() == 2 && p.is_integral()))
    }

    /// `min over u in P of w(u)(n)`. The map `u -> w(u)(n)` is linear on each
    /// half of the chart-1 image cut along `y = 0`.
    pub fn support_function(&self, n: &MElementR) -> Result<Q> {
        if !self.is_compact() {
            return Err(Error::NotCompact);
        }
        let base = self.chart1.hrep();
        let mut best: Option<Q> = None;
        for side in [1i64, -1] {
            let mut hs = base.clone();
            hs.push(HalfPlane::new((q(0), q(side)), q(0)));
            if let Region::Bounded(p) = intersect(&hs) {
                for v in p.vertices() {
                    let u = Element::new(v.0.clone(), v.1.clone());
                    let val = dual_pairing_w(self.s, &u).evaluate(n);
                    best = Some(best.map_or(val.clone(), |b: Q| b.min(val)));
                }
            }
        }
        best.ok_or(Error::EmptyInput)
    }

    pub fn origin_interior(&self) -> bool {
        ChartId::BOTH.iter().all(|&c| {
            self.constraints.iter().flat_map(|h| h.chart_halfplanes(self.s, c)).all(|h| {
                if h.n.0.is_zero() && h.n.1.is_zero() {
                    !h.t.is_positive()
                } else {
                    h.t.is_negative()
                }
            })
        })
    }

    /// Intersection of `H_{w(m), -1}` over the vertices `m`.
    pub fn dual(&self) -> Result<PlPolytope> {
        if !self.is_compact() {
            return Err(Error::NotCompact);
        }
        if !self.origin_interior() {
            return Err(Error::OriginNotInterior);
        }
        let cs = self
            .pl_vertices()?
            .iter()
            .map(|m| PlHalfSpace::new(dual_pairing_w(self.s, m), q(-1)))
            .collect();
        Ok(PlPolytope::new(self.s, cs))
    }

    pub fn dilate(&self, k: &Q) -> PlPolytope {
        let cs = self.constraints.iter().map(|h| PlHalfSpace::new(h.p.clone(), &h.a * k)).collect();
        PlPolytope::new(self.s, cs)
    }

    /// Drops constraints implied by the others in both charts, keeping order.
    pub fn remove_redundant(&self) -> PlPolytope {
        let mut cs: Vec<PlHalfSpace> = Vec::new();
        for h in &self.constraints {
            if !cs.contains(h) {
                cs.push(h.clone());
            }
        }
        let mut i = 0;
        while i < cs.len() {
            let mut rest = cs.clone();
            let h = rest.remove(i);
            let implied = !rest.is_empty()
                && ChartId::BOTH.iter().all(|&c| {
                    let r = chart_region(self.s, &rest, c);
                    h.chart_halfplanes(self.s, c).iter().all(|hp| r.within(hp))
                });
            if implied {
                cs = rest;
            } else {
                i += 1;
            }
        }
        PlPolytope::new(self.s, cs)
    }

    /// Same chart images.
    pub fn same_set(&self, o: &PlPolytope) -> bool {
        self.chart1.same_set(&o.chart1) && self.chart2.same_set(&o.chart2)
    }
}

/// Rays of the parameter half-plane `{l : l.0 >= 0}` after cutting along the
/// lines orthogonal to the edges of the hull of `pts`.
fn parameter_rays(pts: &[P2]) -> Vec<P2> {
    let hull = convex_hull(pts);
    let k = hull.len();
    let mut cutters: Vec<Cone2> = Vec::new();
    if k >= 2 {
        let edges = if k == 2 { 1 } else { k };
        for i in 0..edges {
            let e = sub(&hull[(i + 1) % k], &hull[i]);
            cutters.push(Cone2::Line(prim(&perp(&e))));
        }
    }
    let mut rays: Vec<P2> = Vec::new();
    for c in refine_cones(&Cone2::HalfPlane((q(1), q(0))), &cutters) {
        for r in c.generators() {
            if !rays.contains(&r) {
                rays.push(r);
            }
        }
    }
    rays
}

/// Point-convex hull of a finite set of lattice elements.
///
/// Points linear on chart 1 are `(a, -a, c)` with `c >= 0` and act as the
/// functional `(c, a)` on chart-1 coordinates; points linear on chart 2 are
/// `(a, s*c - a, c)` with `c <= 0` and act as `(-c, a)` on chart-2
/// coordinates. On each cone of the refinement below both the threshold
/// `min_S p` and `p(u)` are linear in the parameters, so the rays suffice.
pub fn point_convex_hull(s: ShearParam, set: &[MElement]) -> Result<PlPolytope> {
    if set.is_empty() {
        return Err(Error::EmptyInput);
    }
    let elems: Vec<MElementR> = set.iter().map(|m| m.to_q()).collect();
    let pts1: Vec<P2> = elems.iter().map(|m| m.chart(s, ChartId::Chart1)).collect();
    let pts2: Vec<P2> = elems.iter().map(|m| m.chart(s, ChartId::Chart2)).collect();
    let sq = q(s.get());
    let mut triples: Vec<PointTriple<Q>> = Vec::new();
    for (l1, l2) in parameter_rays(&pts1) {
        triples.push(PointTriple::raw(l2.clone(), -l2, l1));
    }
    for (l1, l2) in parameter_rays(&pts2) {
        let c = -l1;
        let b = &sq * &c - &l2;
        triples.push(PointTriple::raw(l2, b, c));
    }
    let mut cs: Vec<PlHalfSpace> = Vec::new();
    for p in triples {
        let p = p.primitive();
        let lam = elems.iter().map(|m| p.evaluate(m)).min().unwrap();
        let h = PlHalfSpace::new(p, lam);
        if !cs.contains(&h) {
            cs.push(h);
        }
    }
    cs.sort();
    Ok(PlPolytope::new(s, cs).remove_redundant())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::pt;
    use crate::scalar::qr;

    fn sh(s: i64) -> ShearParam {
        ShearParam::new(s).unwrap()
    }

    fn tri(a: i64, b: i64, c: i64) -> PointTriple<i64> {
        PointTriple::raw(a, b, c)
    }

    fn verts(p: &PlPolytope, c: ChartId) -> Vec<P2> {
        let mut v = p.polygon(c).unwrap().vertices().to_vec();
        v.sort();
        v
    }

    fn sorted(v: &[(i64, i64)]) -> Vec<P2> {
        let mut v: Vec<P2> = v.iter().map(|&(x, y)| pt(x, y)).collect();
        v.sort();
        v
    }

    fn example1() -> PlPolytope {
        PlPolytope::from_points(sh(1), &[tri(-2, 2, 1), tri(0, -1, -1), tri(1, -1, 1)], &[-1, -1, -1])
    }

    #[test]
    fn halfspace_images() {
        let h = PlHalfSpace::from_ints(&tri(-2, 2, 1), -1);
        assert_eq!(h.chart_halfplanes(sh(1), ChartId::Chart1), vec![HalfPlane::new(pt(1, -2), q(-1))]);
        let h = PlHalfSpace::from_ints(&tri(0, -1, -1), -1);
        assert_eq!(h.chart_halfplanes(sh(1), ChartId::Chart2), vec![HalfPlane::new(pt(1, 0), q(-1))]);
        let h = PlHalfSpace::from_ints(&tri(0, 0, 0), 0);
        assert!(matches!(halfspace_chart_image(&h, sh(1), ChartId::Chart1), Region::Unbounded(_)));
    }

    #[test]
    fn first_example() {
        let p = example1();
        assert!(p.is_compact());
        assert_eq!(verts(&p, ChartId::Chart1), sorted(&[(0, -1), (1, 0), (1, 1), (-1, 0)]));
        assert_eq!(verts(&p, ChartId::Chart2), sorted(&[(-1, -1), (-1, 1), (1, 0)]));
        assert!(p.is_chart_gorenstein_fano());
        assert!(p.pl_vertices().unwrap().contains(&Element::new(q(1), q(1))));
        let d = p.dual().unwrap();
        assert_eq!(verts(&d, ChartId::Chart1), sorted(&[(-2, 1), (1, 1), (1, 0), (0, -1)]));
        assert_eq!(verts(&d, ChartId::Chart2), sorted(&[(-1, -1), (-1, 1), (2, 1), (1, 0)]));
        assert_eq!(p.support_function(&Element::new(q(1), q(0))).unwrap(), q(-1));
        assert_eq!(p.support_function(&Element::zero()).unwrap(), q(0));
    }

    #[test]
    fn compactness() {
        let p = PlPolytope::from_points(sh(4), &[tri(-2, -2, -1), tri(0, 0, 1)], &[-1, -1]);
        assert!(p.is_compact());
        let one = PlPolytope::from_points(sh(1), &[tri(-2, 2, 1)], &[-1]);
        assert!(!one.is_compact());
        assert!(!one.is_chart_gorenstein_fano());
        assert_eq!(one.pl_vertices(), Err(Error::NotCompact));
    }

    #[test]
    fn section_polytope_not_integral() {
        let p = PlPolytope::from_points(sh(1), &[tri(1, -1, 1), tri(-2, 2, 1), tri(1, -3, -2)], &[-1, -1, -1]);
        assert!(p.is_compact());
        assert!(!p.is_chart_gorenstein_fano());
    }

    #[test]
    fn figure_nine_hull() {
        let s = sh(1);
        let set = [Element::new(0, 0), Element::new(0, 1), Element::new(0, -1)];
        let h = point_convex_hull(s, &set).unwrap();
        let mut want1 = vec![pt(0, 1), (qr(1, 2), q(0)), pt(0, -1)];
        want1.sort();
        assert_eq!(verts(&h, ChartId::Chart1), want1);
        assert_eq!(verts(&h, ChartId::Chart2), sorted(&[(-1, -1), (0, 0), (0, 1)]));
    }

    #[test]
    fn hull_small_cases() {
        let s = sh(1);
        let h = point_convex_hull(s, &[Element::new(2, -3)]).unwrap();
        assert_eq!(verts(&h, ChartId::Chart1), sorted(&[(2, -3)]));
        assert_eq!(verts(&h, ChartId::Chart2), sorted(&[(-5, -3)]));
        let h = point_convex_hull(s, &[Element::new(0, 0), Element::new(1, 0)]).unwrap();
        assert_eq!(verts(&h, ChartId::Chart1), sorted(&[(0, 0), (1, 0)]));
        assert_eq!(verts(&h, ChartId::Chart2), sorted(&[(0, 0), (-1, 0)]));
        assert_eq!(point_convex_hull(s, &[]).unwrap_err(), Error::EmptyInput);
    }

    #[test]
    fn dilation_scales_support() {
        let p = example1();
        let p2 = p.dilate(&q(2));
        for (x, y) in [(1, 0), (0, 1), (-1, -1), (2, -1), (-3, 2)] {
            let n = Element::new(q(x), q(y));
            assert_eq!(p2.support_function(&n).unwrap(), q(2) * p.support_function(&n).unwrap());
        }
    }
}
