//! The two charts of `M_s`, the shear mutation between them, and the PL fan.

use crate::scalar::{min, Scalar, Q};
use crate::{Error, Result};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ShearParam(i64);

impl ShearParam {
    pub fn new(s: i64) -> Result<Self> {
        if s >= 1 {
            Ok(ShearParam(s))
        } else {
            Err(Error::BadShear(s))
        }
    }

    pub fn get(self) -> i64 {
        self.0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ChartId {
    Chart1,
    Chart2,
}

impl ChartId {
    pub const BOTH: [ChartId; 2] = [ChartId::Chart1, ChartId::Chart2];

    pub fn index(self) -> usize {
        match self {
            ChartId::Chart1 => 1,
            ChartId::Chart2 => 2,
        }
    }
}

/// Shear mutation. It is an involution, so `from` only documents intent.
pub fn mutate<T: Scalar>(s: ShearParam, _from: ChartId, v: (T, T)) -> (T, T) {
    let (x, y) = v;
    let sy = T::from_i64(s.get()) * y.clone();
    (min(T::zero(), sy) - x, y)
}

/// An element of `M_s`, stored by its chart-1 coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element<T> {
    pub x: T,
    pub y: T,
}

pub type MElement = Element<i64>;
pub type MElementR = Element<Q>;

impl<T: Scalar> Element<T> {
    pub fn new(x: T, y: T) -> Self {
        Element { x, y }
    }

    pub fn zero() -> Self {
        Element { x: T::zero(), y: T::zero() }
    }

    pub fn from_chart(s: ShearParam, chart: ChartId, v: (T, T)) -> Self {
        let (x, y) = match chart {
            ChartId::Chart1 => v,
            ChartId::Chart2 => mutate(s, ChartId::Chart2, v),
        };
        Element { x, y }
    }

    pub fn chart(&self, s: ShearParam, chart: ChartId) -> (T, T) {
        match chart {
            ChartId::Chart1 => (self.x.clone(), self.y.clone()),
            ChartId::Chart2 => mutate(s, ChartId::Chart1, (self.x.clone(), self.y.clone())),
        }
    }

    pub fn to_q(&self) -> MElementR {
        Element { x: self.x.to_q(), y: self.y.to_q() }
    }
}

pub fn add_in_chart<T: Scalar>(s: ShearParam, m: &Element<T>, m2: &Element<T>, chart: ChartId) -> Element<T> {
    let (a, b) = m.chart(s, chart);
    let (c, d) = m2.chart(s, chart);
    Element::from_chart(s, chart, (a + c, b + d))
}

/// Maximal cones of the PL fan, as chart-1 half-planes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum PlCone2 {
    /// `y >= 0`
    HPlus,
    /// `y <= 0`
    HMinus,
}

impl PlCone2 {
    pub fn contains<T: Scalar>(self, m: &Element<T>) -> bool {
        match self {
            PlCone2::HPlus => !m.y.is_negative(),
            PlCone2::HMinus => !m.y.is_positive(),
        }
    }
}

pub fn pl_fan(_s: ShearParam) -> (PlCone2, PlCone2) {
    (PlCone2::HPlus, PlCone2::HMinus)
}

pub fn mutation_matrix(s: ShearParam, cone: PlCone2) -> [[i64; 2]; 2] {
    match cone {
        PlCone2::HPlus => [[-1, 0], [0, 1]],
        PlCone2::HMinus => [[-1, s.get()], [0, 1]],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sh(s: i64) -> ShearParam {
        ShearParam::new(s).unwrap()
    }

    #[test]
    fn mutation_examples() {
        assert_eq!(mutate(sh(1), ChartId::Chart1, (0i64, -1)), (-1, -1));
        assert_eq!(mutate(sh(3), ChartId::Chart1, (0i64, 0)), (0, 0));
        assert_eq!(mutate(sh(2), ChartId::Chart1, (1i64, -2)), (-5, -2));
    }

    #[test]
    fn zero_shear_rejected() {
        assert_eq!(ShearParam::new(0), Err(Error::BadShear(0)));
        assert!(ShearParam::new(-2).is_err());
    }

    #[test]
    fn chart_addition() {
        let s = sh(1);
        let a = Element::new(0i64, 1);
        let b = Element::new(0i64, -1);
        assert_eq!(add_in_chart(s, &a, &b, ChartId::Chart1), Element::new(0, 0));
        assert_eq!(add_in_chart(s, &a, &b, ChartId::Chart2), Element::new(1, 0));
        assert_eq!(add_in_chart(s, &a, &Element::zero(), ChartId::Chart2), a);
    }

    #[test]
    fn fan_and_matrices() {
        let (p, m) = pl_fan(sh(1));
        assert_eq!((p, m), (PlCone2::HPlus, PlCone2::HMinus));
        let e = Element::new(3i64, 0);
        assert!(p.contains(&e) && m.contains(&e));
        let e = Element::new(0i64, -2);
        assert!(!p.contains(&e) && m.contains(&e));
        assert_eq!(mutation_matrix(sh(1), PlCone2::HMinus), [[-1, 1], [0, 1]]);
        assert_eq!(mutation_matrix(sh(5), PlCone2::HPlus), [[-1, 0], [0, 1]]);
    }

    proptest! {
        #[test]
        fn involution(s in 1i64..6, x in -50i64..50, y in -50i64..50) {
            let s = sh(s);
            let v = mutate(s, ChartId::Chart1, (x, y));
            prop_assert_eq!(mutate(s, ChartId::Chart2, v), (x, y));
        }

        #[test]
        fn matrix_agrees_on_cones(s in 1i64..6, x in -50i64..50, y in -50i64..50) {
            let s = sh(s);
            let e = Element::new(x, y);
            for cone in [PlCone2::HPlus, PlCone2::HMinus] {
                if cone.contains(&e) {
                    let m = mutation_matrix(s, cone);
                    let img = (m[0][0] * x + m[0][1] * y, m[1][0] * x + m[1][1] * y);
                    prop_assert_eq!(img, mutate(s, ChartId::Chart1, (x, y)));
                }
            }
        }

        #[test]
        fn seam_continuity(s in 1i64..6, x in -50i64..50) {
            let a = mutation_matrix(sh(s), PlCone2::HPlus);
            let b = mutation_matrix(sh(s), PlCone2::HMinus);
            prop_assert_eq!(a[0][0] * x, b[0][0] * x);
        }

        #[test]
        fn chart_addition_laws(s in 1i64..4, v in proptest::collection::vec(-20i64..20, 6), c in 0usize..2) {
            let s = sh(s);
            let chart = ChartId::BOTH[c];
            let a = Element::new(v[0], v[1]);
            let b = Element::new(v[2], v[3]);
            let d = Element::new(v[4], v[5]);
            prop_assert_eq!(add_in_chart(s, &a, &b, chart), add_in_chart(s, &b, &a, chart));
            let l = add_in_chart(s, &add_in_chart(s, &a, &b, chart), &d, chart);
            let r = add_in_chart(s, &a, &add_in_chart(s, &b, &d, chart), chart);
            prop_assert_eq!(l, r);
            prop_assert_eq!(add_in_chart(s, &a, &Element::zero(), chart), a);
        }
    }
}
