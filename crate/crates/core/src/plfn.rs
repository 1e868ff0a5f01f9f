//! Piecewise-linear functions generated by points under `+` and `min`.
//!
//! A piece `(a, b, c)` takes the value `c*x + a*y` on `y >= 0` and `c*x - b*y`
//! on `y <= 0`; a function is the min of its pieces.

use crate::geometry::{perp, P2};
use crate::lattice::{Element, MElementR, ShearParam};
use crate::points::PointTriple;
use crate::scalar::{q, Q};
use num_traits::{Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PlFunction {
    /// The valuation of 0, above everything.
    Infinity,
    Pieces(Vec<PointTriple<Q>>),
}

impl PlFunction {
    pub fn point(p: PointTriple<Q>) -> Self {
        PlFunction::Pieces(vec![p])
    }

    pub fn from_pieces(ps: Vec<PointTriple<Q>>) -> Self {
        if ps.is_empty() {
            PlFunction::Infinity
        } else {
            PlFunction::Pieces(ps).canonicalize()
        }
    }

    pub fn pieces(&self) -> &[PointTriple<Q>] {
        match self {
            PlFunction::Infinity => &[],
            PlFunction::Pieces(p) => p,
        }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, PlFunction::Infinity)
    }

    /// `None` stands for infinity.
    pub fn eval(&self, m: &MElementR) -> Option<Q> {
        self.pieces().iter().map(|p| p.evaluate(m)).min()
    }

    /// The single point this function is, if it is one.
    pub fn as_point(&self, s: ShearParam) -> Option<&PointTriple<Q>> {
        match self.pieces() {
            [p] if p.is_valid(s) => Some(p),
            _ => None,
        }
    }

    /// Removes duplicate and dominated pieces and sorts the rest.
    pub fn canonicalize(&self) -> Self {
        let PlFunction::Pieces(ps) = self else {
            return PlFunction::Infinity;
        };
        let mut ps = ps.clone();
        ps.sort();
        ps.dedup();
        let mut i = 0;
        while i < ps.len() && ps.len() > 1 {
            let mut rest = ps.clone();
            let p = rest.remove(i);
            if geq_pieces(&[p], &rest) {
                ps = rest;
            } else {
                i += 1;
            }
        }
        PlFunction::Pieces(ps)
    }
}

pub fn pl_min(f: &PlFunction, g: &PlFunction) -> PlFunction {
    let mut v = f.pieces().to_vec();
    v.extend(g.pieces().iter().cloned());
    PlFunction::from_pieces(v)
}

pub fn pl_add(f: &PlFunction, g: &PlFunction) -> PlFunction {
    if f.is_infinity() || g.is_infinity() {
        return PlFunction::Infinity;
    }
    let mut v = Vec::new();
    for a in f.pieces() {
        for b in g.pieces() {
            v.push(a.add(b));
        }
    }
    PlFunction::from_pieces(v)
}

pub fn pl_eval(f: &PlFunction, m: &MElementR) -> Option<Q> {
    f.eval(m)
}

/// Directions where the comparison of two min-of-linear functions can
/// change sign: the axis rays of each half-plane plus every ray in that
/// half-plane where two of the pieces' linear forms tie.
fn test_directions(pieces: &[&PointTriple<Q>]) -> Vec<P2> {
    let mut dirs: Vec<P2> = vec![(q(1), q(0)), (q(-1), q(0)), (q(0), q(1)), (q(0), q(-1))];
    for upper in [true, false] {
        let forms: Vec<P2> = pieces
            .iter()
            .map(|p| if upper { (p.c.clone(), p.a.clone()) } else { (p.c.clone(), -p.b.clone()) })
            .collect();
        for i in 0..forms.len() {
            for j in i + 1..forms.len() {
                let delta = (&forms[i].0 - &forms[j].0, &forms[i].1 - &forms[j].1);
                if delta.0.is_zero() && delta.1.is_zero() {
                    continue;
                }
                let d = perp(&delta);
                for d in [d.clone(), (-&d.0, -&d.1)] {
                    let inside = if upper { !d.1.is_negative() } else { !d.1.is_positive() };
                    if inside && !dirs.contains(&d) {
                        dirs.push(d);
                    }
                }
            }
        }
    }
    dirs
}

fn geq_pieces(f: &[PointTriple<Q>], g: &[PointTriple<Q>]) -> bool {
    let all: Vec<&PointTriple<Q>> = f.iter().chain(g.iter()).collect();
    test_directions(&all).iter().all(|d| {
        let m = Element::new(d.0.clone(), d.1.clone());
        let fv = f.iter().map(|p| p.evaluate(&m)).min().unwrap();
        let gv = g.iter().map(|p| p.evaluate(&m)).min().unwrap();
        fv >= gv
    })
}

/// `f >= g` pointwise, decided exactly.
pub fn pl_geq(f: &PlFunction, g: &PlFunction) -> bool {
    match (f, g) {
        (_, PlFunction::Infinity) => f.is_infinity(),
        (PlFunction::Infinity, _) => true,
        (PlFunction::Pieces(a), PlFunction::Pieces(b)) => geq_pieces(a, b),
    }
}

pub fn pl_eq(f: &PlFunction, g: &PlFunction) -> bool {
    pl_geq(f, g) && pl_geq(g, f)
}
