//! Exact rational plane geometry: half-planes, polygons, cones in the plane.

use crate::scalar::{primitive, q, Q};
use crate::{Error, Result};
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;

pub type P2 = (Q, Q);

pub fn pt(x: i64, y: i64) -> P2 {
    (q(x), q(y))
}

pub fn dot(a: &P2, b: &P2) -> Q {
    &a.0 * &b.0 + &a.1 * &b.1
}

pub fn cross(a: &P2, b: &P2) -> Q {
    &a.0 * &b.1 - &a.1 * &b.0
}

pub fn sub(a: &P2, b: &P2) -> P2 {
    (&a.0 - &b.0, &a.1 - &b.1)
}

pub fn neg(a: &P2) -> P2 {
    (-&a.0, -&a.1)
}

/// Rotation by +90 degrees.
pub fn perp(a: &P2) -> P2 {
    (-&a.1, a.0.clone())
}

pub fn is_zero(a: &P2) -> bool {
    a.0.is_zero() && a.1.is_zero()
}

/// Primitive integer vector on the ray through `a`.
pub fn prim(a: &P2) -> P2 {
    let v = primitive(&[a.0.clone(), a.1.clone()]);
    (Q::from_integer(v[0].clone()), Q::from_integer(v[1].clone()))
}

fn half(v: &P2) -> u8 {
    if v.1.is_positive() || (v.1.is_zero() && v.0.is_positive()) {
        0
    } else {
        1
    }
}

/// Counterclockwise angle order starting at the positive x-axis.
pub fn angle_cmp(a: &P2, b: &P2) -> Ordering {
    half(a).cmp(&half(b)).then_with(|| Q::zero().cmp(&cross(a, b)))
}

/// Angle order measured counterclockwise from `start`.
pub fn angle_cmp_from(start: &P2, a: &P2, b: &P2) -> Ordering {
    let rel = |v: &P2| (dot(start, v), cross(start, v));
    angle_cmp(&rel(a), &rel(b))
}

/// `{v : n·v >= t}`
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HalfPlane {
    pub n: P2,
    pub t: Q,
}

impl HalfPlane {
    pub fn new(n: P2, t: Q) -> Self {
        HalfPlane { n, t }
    }

    pub fn contains(&self, v: &P2) -> bool {
        dot(&self.n, v) >= self.t
    }

    pub fn scale_threshold(&self, k: &Q) -> Self {
        HalfPlane { n: self.n.clone(), t: &self.t * k }
    }
}

/// A cone in the plane. Rays are primitive integer vectors; `Pointed(r1, r2)`
/// runs counterclockwise from `r1` to `r2` through an angle below pi;
/// `HalfPlane(n)` is `{d : n·d >= 0}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Cone2 {
    Zero,
    Ray(P2),
    Line(P2),
    Pointed(P2, P2),
    HalfPlane(P2),
    Full,
}

fn line_rep(r: &P2) -> P2 {
    let r = prim(r);
    if half(&r) == 0 {
        r
    } else {
        neg(&r)
    }
}

impl Cone2 {
    /// `{d : n·d >= 0 for all n}`; normals must be nonzero.
    pub fn from_normals(normals: &[P2]) -> Cone2 {
        if normals.is_empty() {
            return Cone2::Full;
        }
        let mut cands: Vec<P2> = Vec::new();
        for n in normals {
            for d in [perp(n), neg(&perp(n))] {
                let d = prim(&d);
                if normals.iter().all(|m| !dot(m, &d).is_negative()) && !cands.contains(&d) {
                    cands.push(d);
                }
            }
        }
        match cands.len() {
            0 => Cone2::Zero,
            1 => Cone2::Ray(cands.pop().unwrap()),
            _ => {
                let (a, b) = (cands[0].clone(), cands[1].clone());
                if cross(&a, &b).is_zero() {
                    // opposite rays: every normal is orthogonal to them
                    let n0 = prim(&normals[0]);
                    if normals.iter().all(|m| prim(m) == n0) {
                        Cone2::HalfPlane(n0)
                    } else {
                        Cone2::Line(line_rep(&a))
                    }
                } else if cross(&a, &b).is_positive() {
                    Cone2::Pointed(a, b)
                } else {
                    Cone2::Pointed(b, a)
                }
            }
        }
    }

    pub fn contains(&self, d: &P2) -> bool {
        match self {
            Cone2::Zero => is_zero(d),
            Cone2::Ray(r) => cross(r, d).is_zero() && !dot(r, d).is_negative(),
            Cone2::Line(r) => cross(r, d).is_zero(),
            Cone2::Pointed(a, b) => !cross(a, d).is_negative() && !cross(d, b).is_negative(),
            Cone2::HalfPlane(n) => !dot(n, d).is_negative(),
            Cone2::Full => true,
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            Cone2::Zero => 0,
            Cone2::Ray(_) | Cone2::Line(_) => 1,
            _ => 2,
        }
    }

    /// Rays bounding the cone (the lines of a half-plane count as two rays).
    pub fn boundary_rays(&self) -> Vec<P2> {
        match self {
            Cone2::Zero | Cone2::Full => vec![],
            Cone2::Ray(r) => vec![r.clone()],
            Cone2::Line(r) => vec![r.clone(), neg(r)],
            Cone2::Pointed(a, b) => vec![a.clone(), b.clone()],
            Cone2::HalfPlane(n) => {
                let p = prim(&perp(n));
                vec![neg(&p), p]
            }
        }
    }

    /// A finite set of primitive rays whose nonnegative span is the cone.
    pub fn generators(&self) -> Vec<P2> {
        match self {
            Cone2::HalfPlane(n) => {
                let mut v = self.boundary_rays();
                v.insert(1, prim(n));
                v
            }
            Cone2::Full => vec![pt(1, 0), pt(0, 1), pt(-1, 0), pt(0, -1)],
            _ => self.boundary_rays(),
        }
    }
}

pub fn extreme_rays(c: &Cone2) -> Vec<P2> {
    c.generators()
}

/// Subdivide `base` along the boundary rays of the `cutters`. The pieces cover
/// `base` and meet only along rays.
pub fn refine_cones(base: &Cone2, cutters: &[Cone2]) -> Vec<Cone2> {
    let cut_rays: Vec<P2> = cutters.iter().flat_map(|c| c.boundary_rays()).collect();
    match base {
        Cone2::Zero | Cone2::Ray(_) => vec![base.clone()],
        Cone2::Line(r) => {
            if cut_rays.iter().any(|c| !cross(c, r).is_zero()) {
                vec![Cone2::Ray(r.clone()), Cone2::Ray(neg(r))]
            } else {
                vec![base.clone()]
            }
        }
        _ => {
            let mut rays: Vec<P2> = base.boundary_rays();
            for r in &cut_rays {
                let r = prim(r);
                if base.contains(&r) && !rays.contains(&r) {
                    rays.push(r);
                }
            }
            if let Cone2::Full = base {
                let negs: Vec<P2> = rays.iter().map(neg).collect();
                for r in negs {
                    if !rays.contains(&r) {
                        rays.push(r);
                    }
                }
                if rays.is_empty() {
                    return vec![Cone2::Full];
                }
                rays.sort_by(angle_cmp);
                let k = rays.len();
                return (0..k).map(|i| sector(&rays[i], &rays[(i + 1) % k])).collect();
            }
            let start = base.boundary_rays()[0].clone();
            rays.sort_by(|a, b| angle_cmp_from(&start, a, b));
            rays.windows(2).map(|w| sector(&w[0], &w[1])).collect()
        }
    }
}

fn sector(a: &P2, b: &P2) -> Cone2 {
    let c = cross(a, b);
    if c.is_positive() {
        Cone2::Pointed(a.clone(), b.clone())
    } else {
        Cone2::HalfPlane(prim(&perp(a)))
    }
}

/// Convex hull, counterclockwise from the lexicographic minimum, without
/// collinear points. Two points give a segment, one point a point.
pub fn convex_hull(points: &[P2]) -> Vec<P2> {
    let mut p: Vec<P2> = points.to_vec();
    p.sort();
    p.dedup();
    if p.len() <= 2 {
        return p;
    }
    let mut lower: Vec<P2> = Vec::new();
    for v in &p {
        while lower.len() >= 2 && !cross(&sub(&lower[lower.len() - 1], &lower[lower.len() - 2]), &sub(v, &lower[lower.len() - 2])).is_positive() {
            lower.pop();
        }
        lower.push(v.clone());
    }
    let mut upper: Vec<P2> = Vec::new();
    for v in p.iter().rev() {
        while upper.len() >= 2 && !cross(&sub(&upper[upper.len() - 1], &upper[upper.len() - 2]), &sub(v, &upper[upper.len() - 2])).is_positive() {
            upper.pop();
        }
        upper.push(v.clone());
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// A bounded nonempty convex polygon (possibly a point or a segment).
#[derive(Debug, Clone)]
pub struct ConvexPolygon {
    pub hrep: Vec<HalfPlane>,
    vrep: Vec<P2>,
}

impl PartialEq for ConvexPolygon {
    fn eq(&self, o: &Self) -> bool {
        self.vrep == o.vrep
    }
}

pub type Mat2 = [[Q; 2]; 2];

pub fn mat_apply(m: &Mat2, v: &P2) -> P2 {
    (&m[0][0] * &v.0 + &m[0][1] * &v.1, &m[1][0] * &v.0 + &m[1][1] * &v.1)
}

fn mat_det(m: &Mat2) -> Q {
    &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0]
}

fn mat_from_cols(a: &P2, b: &P2) -> Mat2 {
    [[a.0.clone(), b.0.clone()], [a.1.clone(), b.1.clone()]]
}

fn mat_mul(a: &Mat2, b: &Mat2) -> Mat2 {
    let e = |i: usize, j: usize| &a[i][0] * &b[0][j] + &a[i][1] * &b[1][j];
    [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
}

fn mat_inv(m: &Mat2) -> Option<Mat2> {
    let d = mat_det(m);
    if d.is_zero() {
        return None;
    }
    Some([[&m[1][1] / &d, -&m[0][1] / &d], [-&m[1][0] / &d, &m[0][0] / &d]])
}

/// Completes a primitive integer vector to a determinant-one integer basis.
fn complete_basis(v: &P2) -> Mat2 {
    use num_bigint::BigInt;
    use num_integer::Integer;
    let a = v.0.to_integer();
    let b = v.1.to_integer();
    let e = a.extended_gcd(&b);
    // a*x + b*y = g = 1 for primitive v
    let (x, y) = if e.gcd == BigInt::one() { (e.x, e.y) } else { (-e.x, -e.y) };
    mat_from_cols(v, &(Q::from_integer(-y), Q::from_integer(x)))
}

fn hrep_of(vrep: &[P2]) -> Vec<HalfPlane> {
    match vrep.len() {
        0 => vec![],
        1 => {
            let (x, y) = &vrep[0];
            vec![
                HalfPlane::new(pt(1, 0), x.clone()),
                HalfPlane::new(pt(-1, 0), -x),
                HalfPlane::new(pt(0, 1), y.clone()),
                HalfPlane::new(pt(0, -1), -y),
            ]
        }
        2 => {
            let e = sub(&vrep[1], &vrep[0]);
            let n = perp(&e);
            vec![
                HalfPlane::new(n.clone(), dot(&n, &vrep[0])),
                HalfPlane::new(neg(&n), -dot(&n, &vrep[0])),
                HalfPlane::new(e.clone(), dot(&e, &vrep[0])),
                HalfPlane::new(neg(&e), -dot(&e, &vrep[1])),
            ]
        }
        k => (0..k)
            .map(|i| {
                let n = perp(&sub(&vrep[(i + 1) % k], &vrep[i]));
                let t = dot(&n, &vrep[i]);
                HalfPlane::new(n, t)
            })
            .collect(),
    }
}

impl ConvexPolygon {
    pub fn from_points(points: &[P2]) -> Result<ConvexPolygon> {
        let vrep = convex_hull(points);
        if vrep.is_empty() {
            return Err(Error::EmptyInput);
        }
        Ok(ConvexPolygon { hrep: hrep_of(&vrep), vrep })
    }

    pub fn vertices(&self) -> &[P2] {
        &self.vrep
    }

    pub fn dim(&self) -> usize {
        self.vrep.len().min(3) - 1
    }

    pub fn contains(&self, v: &P2) -> bool {
        self.hrep.iter().all(|h| h.contains(v))
    }

    pub fn is_integral(&self) -> bool {
        self.vrep.iter().all(|(x, y)| x.is_integer() && y.is_integer())
    }

    pub fn min_linear(&self, n: &P2) -> Q {
        self.vrep.iter().map(|v| dot(n, v)).min().unwrap()
    }

    pub fn dilate(&self, k: &Q) -> ConvexPolygon {
        ConvexPolygon {
            hrep: self.hrep.iter().map(|h| h.scale_threshold(k)).collect(),
            vrep: self.vrep.iter().map(|(x, y)| (x * k, y * k)).collect(),
        }
    }

    /// MIN-normal fan: the cone at `v` holds the functionals minimized at `v`.
    pub fn normal_fan(&self) -> Result<Vec<(Cone2, P2)>> {
        if self.dim() < 2 {
            return Err(Error::DegenerateInput);
        }
        let k = self.vrep.len();
        Ok((0..k)
            .map(|i| {
                let prev = &self.vrep[(i + k - 1) % k];
                let v = &self.vrep[i];
                let next = &self.vrep[(i + 1) % k];
                let n_in = prim(&perp(&sub(v, prev)));
                let n_out = prim(&perp(&sub(next, v)));
                (Cone2::Pointed(n_in, n_out), v.clone())
            })
            .collect())
    }

    /// Searches for `U` in GL(2,Z) and integer `t` with `U·self + t = other`.
    pub fn lattice_equivalent(&self, other: &ConvexPolygon) -> Result<Option<(Mat2, P2)>> {
        if !self.is_integral() || !other.is_integral() {
            return Err(Error::NotIntegral);
        }
        let (p, w) = (&self.vrep, &other.vrep);
        if p.len() != w.len() {
            return Ok(None);
        }
        let ident: Mat2 = [[q(1), q(0)], [q(0), q(1)]];
        match p.len() {
            1 => return Ok(Some((ident, sub(&w[0], &p[0])))),
            2 => {
                let e = sub(&p[1], &p[0]);
                let f = sub(&w[1], &w[0]);
                if lattice_len(&e) == lattice_len(&f) {
                    let (pe, pf) = (prim(&e), prim(&f));
                    let u = mat_mul(&complete_basis(&pf), &mat_inv(&complete_basis(&pe)).unwrap());
                    let t = sub(&w[0], &mat_apply(&u, &p[0]));
                    return Ok(Some((u, t)));
                }
                return Ok(None);
            }
            _ => {}
        }
        let k = p.len();
        let e = mat_from_cols(&sub(&p[1], &p[0]), &sub(&p[k - 1], &p[0]));
        let einv = mat_inv(&e).unwrap();
        let mut target: Vec<P2> = w.clone();
        target.sort();
        for j in 0..k {
            let next = sub(&w[(j + 1) % k], &w[j]);
            let prev = sub(&w[(j + k - 1) % k], &w[j]);
            for f in [mat_from_cols(&next, &prev), mat_from_cols(&prev, &next)] {
                let u = mat_mul(&f, &einv);
                if !u.iter().flatten().all(|x| x.is_integer()) || mat_det(&u).abs() != q(1) {
                    continue;
                }
                let t = sub(&w[j], &mat_apply(&u, &p[0]));
                let mut img: Vec<P2> = p.iter().map(|v| {
                    let a = mat_apply(&u, v);
                    (&a.0 + &t.0, &a.1 + &t.1)
                }).collect();
                img.sort();
                if img == target {
                    return Ok(Some((u, t)));
                }
            }
        }
        Ok(None)
    }
}

fn lattice_len(e: &P2) -> Q {
    use num_integer::Integer;
    Q::from_integer(e.0.to_integer().gcd(&e.1.to_integer()))
}

/// Lower bound of a linear functional over a region.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bound {
    NegInf,
    Val(Q),
    PosInf,
}

#[derive(Debug, Clone)]
pub struct UnboundedRegion {
    pub hrep: Vec<HalfPlane>,
    pub recession: Cone2,
    /// Vertices when the region is pointed.
    pub vertices: Vec<P2>,
    /// `lo <= n·v <= hi` when the recession cone contains a line.
    pub strip: Option<(P2, Option<Q>, Option<Q>)>,
}

#[derive(Debug, Clone)]
pub enum Region {
    Empty,
    Bounded(ConvexPolygon),
    Unbounded(UnboundedRegion),
}

impl Region {
    pub fn is_bounded(&self) -> bool {
        !matches!(self, Region::Unbounded(_))
    }

    pub fn polygon(&self) -> Option<&ConvexPolygon> {
        match self {
            Region::Bounded(p) => Some(p),
            _ => None,
        }
    }

    pub fn contains(&self, v: &P2) -> bool {
        match self {
            Region::Empty => false,
            Region::Bounded(p) => p.contains(v),
            Region::Unbounded(u) => u.hrep.iter().all(|h| h.contains(v)),
        }
    }

    pub fn min_linear(&self, n: &P2) -> Bound {
        match self {
            Region::Empty => Bound::PosInf,
            Region::Bounded(p) => Bound::Val(p.min_linear(n)),
            Region::Unbounded(u) => {
                if u.recession.generators().iter().any(|g| dot(n, g).is_negative()) {
                    return Bound::NegInf;
                }
                if !u.vertices.is_empty() {
                    return Bound::Val(u.vertices.iter().map(|v| dot(n, v)).min().unwrap());
                }
                match &u.strip {
                    None => Bound::Val(q(0)),
                    Some((big_n, lo, hi)) => {
                        let lam = dot(n, big_n) / dot(big_n, big_n);
                        if lam.is_zero() {
                            Bound::Val(q(0))
                        } else if lam.is_positive() {
                            lo.as_ref().map_or(Bound::NegInf, |lo| Bound::Val(&lam * lo))
                        } else {
                            hi.as_ref().map_or(Bound::NegInf, |hi| Bound::Val(&lam * hi))
                        }
                    }
                }
            }
        }
    }

    /// Whether the whole region satisfies `h`.
    pub fn within(&self, h: &HalfPlane) -> bool {
        match self.min_linear(&h.n) {
            Bound::PosInf => true,
            Bound::NegInf => false,
            Bound::Val(v) => v >= h.t,
        }
    }

    pub fn hrep(&self) -> Vec<HalfPlane> {
        match self {
            Region::Empty => vec![HalfPlane::new(pt(1, 0), q(1)), HalfPlane::new(pt(-1, 0), q(0))],
            Region::Bounded(p) => p.hrep.clone(),
            Region::Unbounded(u) => u.hrep.clone(),
        }
    }

    /// Same point set.
    pub fn same_set(&self, o: &Region) -> bool {
        o.hrep().iter().all(|h| self.within(h)) && self.hrep().iter().all(|h| o.within(h))
    }

    pub fn clip(&self, lo: &P2, hi: &P2) -> Region {
        let mut hs = self.hrep();
        hs.push(HalfPlane::new(pt(1, 0), lo.0.clone()));
        hs.push(HalfPlane::new(pt(0, 1), lo.1.clone()));
        hs.push(HalfPlane::new(pt(-1, 0), -&hi.0));
        hs.push(HalfPlane::new(pt(0, -1), -&hi.1));
        intersect(&hs)
    }
}

fn line_meet(a: &HalfPlane, b: &HalfPlane) -> Option<P2> {
    let d = cross(&a.n, &b.n);
    if d.is_zero() {
        return None;
    }
    let x = (&a.t * &b.n.1 - &b.t * &a.n.1) / &d;
    let y = (&a.n.0 * &b.t - &b.n.0 * &a.t) / &d;
    Some((x, y))
}

/// Exact intersection of half-planes.
pub fn intersect(hs: &[HalfPlane]) -> Region {
    let mut kept: Vec<HalfPlane> = Vec::new();
    for h in hs {
        if is_zero(&h.n) {
            if h.t.is_positive() {
                return Region::Empty;
            }
        } else if !kept.contains(h) {
            kept.push(h.clone());
        }
    }
    let normals: Vec<P2> = kept.iter().map(|h| h.n.clone()).collect();
    let recession = Cone2::from_normals(&normals);
    match recession {
        Cone2::Full => {
            return Region::Unbounded(UnboundedRegion { hrep: kept, recession, vertices: vec![], strip: None });
        }
        Cone2::Line(_) | Cone2::HalfPlane(_) => {
            let big_n = kept[0].n.clone();
            let nn = dot(&big_n, &big_n);
            let (mut lo, mut hi): (Option<Q>, Option<Q>) = (None, None);
            for h in &kept {
                let lam = dot(&h.n, &big_n) / &nn;
                let bound = &h.t / &lam;
                if lam.is_positive() {
                    lo = Some(lo.map_or(bound.clone(), |l: Q| l.max(bound)));
                } else {
                    hi = Some(hi.map_or(bound.clone(), |u: Q| u.min(bound)));
                }
            }
            if let (Some(l), Some(u)) = (&lo, &hi) {
                if l > u {
                    return Region::Empty;
                }
            }
            return Region::Unbounded(UnboundedRegion { hrep: kept, recession, vertices: vec![], strip: Some((big_n, lo, hi)) });
        }
        _ => {}
    }
    let mut verts: Vec<P2> = Vec::new();
    for i in 0..kept.len() {
        for j in i + 1..kept.len() {
            if let Some(v) = line_meet(&kept[i], &kept[j]) {
                if kept.iter().all(|h| h.contains(&v)) && !verts.contains(&v) {
                    verts.push(v);
                }
            }
        }
    }
    if verts.is_empty() {
        return Region::Empty;
    }
    if recession == Cone2::Zero {
        let vrep = convex_hull(&verts);
        Region::Bounded(ConvexPolygon { hrep: kept, vrep })
    } else {
        verts.sort();
        Region::Unbounded(UnboundedRegion { hrep: kept, recession, vertices: verts, strip: None })
    }
}
