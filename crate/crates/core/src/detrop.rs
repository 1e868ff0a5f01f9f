//! The valuation `v_s : A_s -> P_{M_s}` and what it controls: supports,
//! section spaces of PL polytopes, units.

use crate::algebra::{AlgebraElement, Monomial};
use crate::convex::{point_convex_hull, PlPolytope};
use crate::geometry::Region;
use crate::lattice::{ChartId, Element, MElement, ShearParam};
use crate::plfn::PlFunction;
use crate::points::{phi, tilde_w, PointTriple};
use crate::scalar::{q, to_i64};
use crate::{Error, Result};

/// `Φ(w̃(w1, w2, z1, z2))`; t-exponents are ignored.
pub fn valuation_monomial(s: ShearParam, m: &Monomial) -> PointTriple<i64> {
    let t = tilde_w(s, &m.mvec(s)).expect("basis exponent lies in M_s");
    phi(s, &t).expect("w̃ lands in T_s")
}

pub fn valuation(f: &AlgebraElement, s: ShearParam) -> PlFunction {
    PlFunction::from_pieces(f.terms().map(|(m, _)| valuation_monomial(s, m).to_q()).collect())
}

fn exponent_elements(f: &AlgebraElement, s: ShearParam) -> Vec<MElement> {
    let mut v: Vec<MElement> = f.terms().map(|(m, _)| m.chart1(s)).collect();
    v.sort();
    v.dedup();
    v
}

pub fn support(f: &AlgebraElement, s: ShearParam) -> Result<PlPolytope> {
    if f.is_zero() {
        return Err(Error::ZeroElement);
    }
    point_convex_hull(s, &exponent_elements(f, s))
}

/// `supp(f) ⊆ kP`, checked on the exponents of `f`.
pub fn section_membership(f: &AlgebraElement, p: &PlPolytope, k: u32) -> Result<bool> {
    if !p.is_compact() {
        return Err(Error::NotCompact);
    }
    let k = q(k as i64);
    Ok(exponent_elements(f, p.s)
        .iter()
        .all(|m| p.constraints.iter().all(|h| h.p.evaluate(&m.to_q()) >= &k * &h.a)))
}

/// Basis monomials `m` with `p_i(m) + r_i >= 0` for every constraint point `p_i`.
pub fn graded_piece(p: &PlPolytope, rbar: &[i64]) -> Result<Vec<Monomial>> {
    if !p.is_compact() {
        return Err(Error::NotCompact);
    }
    assert_eq!(rbar.len(), p.constraints.len(), "one degree per constraint");
    let shifted = PlPolytope::new(
        p.s,
        p.constraints.iter().zip(rbar).map(|(h, &r)| crate::convex::PlHalfSpace::new(h.p.clone(), q(-r))).collect(),
    );
    let poly = match shifted.chart_image(ChartId::Chart1) {
        Region::Empty => return Ok(vec![]),
        Region::Bounded(poly) => poly.clone(),
        Region::Unbounded(_) => return Err(Error::NotCompact),
    };
    let xs: Vec<_> = poly.vertices().iter().map(|v| v.0.clone()).collect();
    let ys: Vec<_> = poly.vertices().iter().map(|v| v.1.clone()).collect();
    let lo = |v: &Vec<num_rational::BigRational>| to_i64(&v.iter().min().unwrap().floor()).unwrap();
    let hi = |v: &Vec<num_rational::BigRational>| to_i64(&v.iter().max().unwrap().ceil()).unwrap();
    let mut out = Vec::new();
    for x in lo(&xs)..=hi(&xs) {
        for y in lo(&ys)..=hi(&ys) {
            let m = Element::new(x, y);
            if shifted.contains(&m.to_q()) {
                out.push(Monomial::from_chart1(p.s, &m));
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Generator `y1 y2^-1` of the unit group modulo scalars.
pub fn unit_group(_s: ShearParam) -> Monomial {
    Monomial::new(0, 0, 1, vec![]).unwrap()
}

/// Nonzero scalar times a power of `y1 y2^-1`.
pub fn is_unit(f: &AlgebraElement) -> bool {
    let mut it = f.terms();
    match (it.next(), it.next()) {
        (Some((m, _)), None) => m.w1 == 0 && m.w2 == 0 && !m.has_t(),
        _ => false,
    }
}
