//! Points of `M_s` as triples `(a, b, c)` with `a + b = min(0, s*c)`, plus the
//! four-coordinate models `𝕄_s` and `𝕋_s`.

use crate::lattice::{mutate, ChartId, Element, ShearParam};
use crate::scalar::{min, primitive, Scalar, Q};
use crate::{Error, Result};
use serde::Serialize;

/// `a = p(e2)`, `b = p(e2')`, `c = p(e1)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PointTriple<T> {
    pub a: T,
    pub b: T,
    pub c: T,
}

pub fn on_ts<T: Scalar>(s: ShearParam, a: &T, b: &T, c: &T) -> bool {
    a.clone() + b.clone() == min(T::zero(), T::from_i64(s.get()) * c.clone())
}

impl<T: Scalar> PointTriple<T> {
    pub fn new(s: ShearParam, a: T, b: T, c: T) -> Result<Self> {
        if on_ts(s, &a, &b, &c) {
            Ok(PointTriple { a, b, c })
        } else {
            Err(Error::InvalidTriple { a: format!("{a:?}"), b: format!("{b:?}"), c: format!("{c:?}") })
        }
    }

    /// No validation; used for sums of points and for deliberately invalid triples.
    pub fn raw(a: T, b: T, c: T) -> Self {
        PointTriple { a, b, c }
    }

    pub fn is_valid(&self, s: ShearParam) -> bool {
        on_ts(s, &self.a, &self.b, &self.c)
    }

    /// Value at a chart-1 element.
    pub fn evaluate(&self, m: &Element<T>) -> T {
        if m.y.is_negative() {
            self.c.clone() * m.x.clone() - self.b.clone() * m.y.clone()
        } else {
            self.c.clone() * m.x.clone() + self.a.clone() * m.y.clone()
        }
    }

    /// Value at chart-2 coordinates `(x', y')`.
    pub fn evaluate_chart2(&self, s: ShearParam, v: (T, T)) -> T {
        let (x, y) = v;
        let lin = -(self.c.clone() * x);
        if y.is_negative() {
            lin + (T::from_i64(s.get()) * self.c.clone() - self.b.clone()) * y
        } else {
            lin + self.a.clone() * y
        }
    }

    pub fn linear_charts(&self, s: ShearParam) -> Vec<ChartId> {
        let sum = self.a.clone() + self.b.clone();
        let mut out = Vec::new();
        if sum.is_zero() {
            out.push(ChartId::Chart1);
        }
        if sum == T::from_i64(s.get()) * self.c.clone() {
            out.push(ChartId::Chart2);
        }
        out
    }

    /// The two linear extensions on chart 1, `(c, a)` and `(c, -b)`, as
    /// functionals on `(x, y)`.
    pub fn chart1_forms(&self) -> [(T, T); 2] {
        [(self.c.clone(), self.a.clone()), (self.c.clone(), -self.b.clone())]
    }

    /// The two linear extensions on chart 2.
    pub fn chart2_forms(&self, s: ShearParam) -> [(T, T); 2] {
        let sc = T::from_i64(s.get()) * self.c.clone();
        [(-self.c.clone(), self.a.clone()), (-self.c.clone(), sc - self.b.clone())]
    }

    pub fn forms(&self, s: ShearParam, chart: ChartId) -> [(T, T); 2] {
        match chart {
            ChartId::Chart1 => self.chart1_forms(),
            ChartId::Chart2 => self.chart2_forms(s),
        }
    }

    pub fn to_q(&self) -> PointTriple<Q> {
        PointTriple { a: self.a.to_q(), b: self.b.to_q(), c: self.c.to_q() }
    }

    pub fn add(&self, o: &Self) -> Self {
        PointTriple {
            a: self.a.clone() + o.a.clone(),
            b: self.b.clone() + o.b.clone(),
            c: self.c.clone() + o.c.clone(),
        }
    }

    pub fn scale(&self, k: &T) -> Self {
        PointTriple { a: self.a.clone() * k.clone(), b: self.b.clone() * k.clone(), c: self.c.clone() * k.clone() }
    }
}

impl PointTriple<Q> {
    /// Positive rescaling to a primitive integer triple. Scaling by a positive
    /// number keeps the `T_s` equation.
    pub fn primitive(&self) -> PointTriple<Q> {
        let v = primitive(&[self.a.clone(), self.b.clone(), self.c.clone()]);
        let f = |x: &num_bigint::BigInt| Q::from_integer(x.clone());
        PointTriple { a: f(&v[0]), b: f(&v[1]), c: f(&v[2]) }
    }

    pub fn is_integral(&self) -> bool {
        self.a.is_integer() && self.b.is_integer() && self.c.is_integer()
    }
}

pub fn point_from_triple<T: Scalar>(s: ShearParam, a: T, b: T, c: T) -> Result<PointTriple<T>> {
    PointTriple::new(s, a, b, c)
}

/// `p(m) + p(m2) = min_α p(m +_α m2)`.
pub fn point_axiom_check<T: Scalar>(s: ShearParam, p: &PointTriple<T>, m: &Element<T>, m2: &Element<T>) -> bool {
    let lhs = p.evaluate(m) + p.evaluate(m2);
    let rhs = ChartId::BOTH
        .iter()
        .map(|&c| p.evaluate(&crate::lattice::add_in_chart(s, m, m2, c)))
        .min()
        .unwrap();
    lhs == rhs
}

/// The self-dual pairing `w_s : M_s -> Sp(M_s)`.
pub fn dual_pairing_w<T: Scalar>(s: ShearParam, m: &Element<T>) -> PointTriple<T> {
    let x = m.x.clone();
    let y = m.y.clone();
    if y.is_negative() {
        let b = T::from_i64(s.get()) * y.clone() - x.clone();
        PointTriple { a: x, b, c: y }
    } else {
        PointTriple { a: x.clone(), b: -x, c: y }
    }
}

pub fn check_symmetry<T: Scalar>(s: ShearParam, m: &Element<T>, m2: &Element<T>) -> bool {
    dual_pairing_w(s, m).evaluate(m2) == dual_pairing_w(s, m2).evaluate(m)
}

/// Element of `𝕄_s`: `min(w1, w2) = 0`, `z1 + z2 = -s*w2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct MVec4 {
    pub w1: i64,
    pub w2: i64,
    pub z1: i64,
    pub z2: i64,
}

impl MVec4 {
    pub fn new(s: ShearParam, w1: i64, w2: i64, z1: i64, z2: i64) -> Result<Self> {
        if w1.min(w2) != 0 || z1 + z2 != -s.get() * w2 {
            return Err(Error::DomainViolation(format!("({w1},{w2},{z1},{z2}) is not in M_s")));
        }
        Ok(MVec4 { w1, w2, z1, z2 })
    }

    /// Chart-1 image `Θ1⁻¹(Ψ1(v)) = (z2, w1 - w2)`.
    pub fn chart1(&self) -> Element<i64> {
        Element::new(self.z2, self.w1 - self.w2)
    }

    pub fn from_chart1(s: ShearParam, m: &Element<i64>) -> Self {
        psi1_inv(s, theta1((m.x, m.y))).expect("theta1 lands in M_s(1)")
    }
}

/// Element of `𝕋_s`: `β2 = 0`, `α1 + α2 = s*min(β1, β2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct TVec4 {
    pub a1: i64,
    pub a2: i64,
    pub b1: i64,
    pub b2: i64,
}

impl TVec4 {
    pub fn new(s: ShearParam, a1: i64, a2: i64, b1: i64, b2: i64) -> Result<Self> {
        if b2 != 0 || a1 + a2 != s.get() * b1.min(b2) {
            return Err(Error::DomainViolation(format!("({a1},{a2},{b1},{b2}) is not in T_s")));
        }
        Ok(TVec4 { a1, a2, b1, b2 })
    }

    /// `α1 w1 + α2 w2 + β1 z1 + β2 z2`
    pub fn pair(&self, v: &MVec4) -> i64 {
        self.a1 * v.w1 + self.a2 * v.w2 + self.b1 * v.z1 + self.b2 * v.z2
    }
}

pub fn theta1(v: (i64, i64)) -> [i64; 4] {
    [v.1, 0, 0, v.0]
}

pub fn theta1_inv(v: [i64; 4]) -> Result<(i64, i64)> {
    if v[1] != 0 || v[2] != 0 {
        return Err(Error::DomainViolation(format!("{v:?} is not in M_s(1)")));
    }
    Ok((v[3], v[0]))
}

pub fn theta2(v: (i64, i64)) -> [i64; 4] {
    [v.1, 0, v.0, 0]
}

pub fn theta2_inv(v: [i64; 4]) -> Result<(i64, i64)> {
    if v[1] != 0 || v[3] != 0 {
        return Err(Error::DomainViolation(format!("{v:?} is not in M_s(2)")));
    }
    Ok((v[2], v[0]))
}

pub fn psi1(v: &MVec4) -> [i64; 4] {
    [v.w1 - v.w2, 0, 0, v.z2]
}

pub fn psi2(v: &MVec4) -> [i64; 4] {
    [v.w1 - v.w2, 0, v.z1, 0]
}

pub fn psi1_inv(s: ShearParam, v: [i64; 4]) -> Result<MVec4> {
    let (_, _) = theta1_inv(v)?;
    let (a, b) = (v[0], v[3]);
    if a >= 0 {
        MVec4::new(s, a, 0, -b, b)
    } else {
        MVec4::new(s, 0, -a, s.get() * a - b, b)
    }
}

pub fn psi2_inv(s: ShearParam, v: [i64; 4]) -> Result<MVec4> {
    let (_, _) = theta2_inv(v)?;
    let (a, c) = (v[0], v[2]);
    if a >= 0 {
        MVec4::new(s, a, 0, c, -c)
    } else {
        MVec4::new(s, 0, -a, c, -c + s.get() * a)
    }
}

pub fn phi(s: ShearParam, t: &TVec4) -> Result<PointTriple<i64>> {
    TVec4::new(s, t.a1, t.a2, t.b1, t.b2)?;
    Ok(PointTriple { a: t.a1, b: t.a2 - s.get() * t.b1, c: -t.b1 })
}

pub fn upsilon(s: ShearParam, p: &PointTriple<i64>) -> Result<TVec4> {
    if !p.is_valid(s) {
        return Err(Error::DomainViolation(format!("{p:?} is not on T_s")));
    }
    TVec4::new(s, p.a, p.b - s.get() * p.c, -p.c, 0)
}

pub fn tilde_w(s: ShearParam, v: &MVec4) -> Result<TVec4> {
    MVec4::new(s, v.w1, v.w2, v.z1, v.z2)?;
    let d = v.w1 - v.w2;
    if d >= 0 {
        TVec4::new(s, v.z2, -v.z2 - s.get() * d, -d, 0)
    } else {
        TVec4::new(s, v.z2, -v.z2, -d, 0)
    }
}

pub fn evaluate_on_mvec(p: &PointTriple<i64>, v: &MVec4) -> i64 {
    p.evaluate(&v.chart1())
}

/// Chart-2 coordinates of a chart-1 element.
pub fn to_chart2<T: Scalar>(s: ShearParam, m: &Element<T>) -> (T, T) {
    mutate(s, ChartId::Chart1, (m.x.clone(), m.y.clone()))
}
