//! `A_s[t±] = K[x1, x2, y1±, y2±][t±] / (x1 x2 - y1^s - y2^s, y2 - 1)` in the
//! basis `x1^w1 x2^w2 y1^z1 y2^z2 t^r` with `min(w1, w2) = 0`, `z2 = -z1 - s*w2`.

use crate::lattice::{Element, ShearParam};
use crate::points::MVec4;
use crate::scalar::{fmt_q, parse_q, q, Q};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    pub w1: i64,
    pub w2: i64,
    pub z1: i64,
    t: Vec<i64>,
}

fn trim(mut t: Vec<i64>) -> Vec<i64> {
    while t.last() == Some(&0) {
        t.pop();
    }
    t
}

impl Monomial {
    pub fn new(w1: i64, w2: i64, z1: i64, t: Vec<i64>) -> Result<Self> {
        if w1.min(w2) != 0 {
            return Err(Error::DomainViolation(format!("min(w1, w2) must be 0, got ({w1}, {w2})")));
        }
        Ok(Monomial { w1, w2, z1, t: trim(t) })
    }

    pub fn one() -> Self {
        Monomial { w1: 0, w2: 0, z1: 0, t: vec![] }
    }

    /// t-exponents, padded with zeros to length `l`.
    pub fn t(&self, l: usize) -> Vec<i64> {
        let mut v = self.t.clone();
        v.resize(l.max(v.len()), 0);
        v
    }

    pub fn t_raw(&self) -> &[i64] {
        &self.t
    }

    pub fn has_t(&self) -> bool {
        !self.t.is_empty()
    }

    pub fn without_t(&self) -> Monomial {
        Monomial { t: vec![], ..self.clone() }
    }

    pub fn with_t(&self, t: Vec<i64>) -> Monomial {
        Monomial { t: trim(t), ..self.clone() }
    }

    pub fn z2(&self, s: ShearParam) -> i64 {
        -self.z1 - s.get() * self.w2
    }

    pub fn mvec(&self, s: ShearParam) -> MVec4 {
        MVec4 { w1: self.w1, w2: self.w2, z1: self.z1, z2: self.z2(s) }
    }

    /// Chart-1 image `(z2, w1 - w2)` of the exponent.
    pub fn chart1(&self, s: ShearParam) -> Element<i64> {
        self.mvec(s).chart1()
    }

    /// Basis monomial whose exponent has the given chart-1 image.
    pub fn from_chart1(s: ShearParam, m: &Element<i64>) -> Monomial {
        let v = MVec4::from_chart1(s, m);
        Monomial { w1: v.w1, w2: v.w2, z1: v.z1, t: vec![] }
    }

    /// Printed with the derived y2 exponent, e.g. `x2*y2^-1*t1^2`.
    pub fn display(&self, s: ShearParam) -> String {
        let mut parts: Vec<String> = Vec::new();
        let mut push = |name: String, e: i64| {
            if e == 1 {
                parts.push(name);
            } else if e != 0 {
                parts.push(format!("{name}^{e}"));
            }
        };
        push("x1".into(), self.w1);
        push("x2".into(), self.w2);
        push("y1".into(), self.z1);
        push("y2".into(), self.z2(s));
        for (i, &e) in self.t.iter().enumerate() {
            push(format!("t{}", i + 1), e);
        }
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }
}

fn add_t(a: &[i64], b: &[i64]) -> Vec<i64> {
    let n = a.len().max(b.len());
    (0..n).map(|i| a.get(i).unwrap_or(&0) + b.get(i).unwrap_or(&0)).collect()
}

fn binomial(k: i64, j: i64) -> BigInt {
    let mut r = BigInt::one();
    for i in 0..j {
        r = r * BigInt::from(k - i) / BigInt::from(i + 1);
    }
    r
}

/// Finite sum of basis monomials with nonzero rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AlgebraElement {
    terms: BTreeMap<Monomial, Q>,
}

impl AlgebraElement {
    pub fn zero() -> Self {
        AlgebraElement::default()
    }

    pub fn one() -> Self {
        Self::monomial(Monomial::one())
    }

    pub fn constant(c: Q) -> Self {
        let mut e = Self::zero();
        e.add_term(Monomial::one(), c);
        e
    }

    pub fn monomial(m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(m, q(1));
        AlgebraElement { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Q)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, m: Monomial, c: Q) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(m.clone()).or_insert_with(Q::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(m.clone(), c.clone());
        }
        r
    }

    pub fn scale(&self, k: &Q) -> Self {
        let mut r = Self::zero();
        for (m, c) in &self.terms {
            r.add_term(m.clone(), c * k);
        }
        r
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&q(-1)))
    }

    pub fn multiply(&self, o: &Self, s: ShearParam) -> Self {
        let mut r = Self::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                let c = c1 * c2;
                for (m, k) in mono_mul(s, m1, m2) {
                    r.add_term(m, &c * Q::from_integer(k));
                }
            }
        }
        r
    }

    pub fn pow(&self, e: u32, s: ShearParam) -> Self {
        let mut r = Self::one();
        for _ in 0..e {
            r = r.multiply(self, s);
        }
        r
    }

    /// Substitutes each monomial independently.
    pub fn map_monomials(&self, f: impl Fn(&Monomial) -> Monomial) -> Self {
        let mut r = Self::zero();
        for (m, c) in &self.terms {
            r.add_term(f(m), c.clone());
        }
        r
    }

    pub fn display(&self, s: ShearParam) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let body = m.display(s);
            if a.is_one() {
                out.push_str(&body);
            } else if body == "1" {
                out.push_str(&fmt_q(&a));
            } else {
                out.push_str(&format!("{}*{}", fmt_q(&a), body));
            }
        }
        out
    }

    /// Parses a sum of terms over `x1, x2, y1, y2, t1..t9`.
    pub fn parse(input: &str, s: ShearParam) -> Result<Self> {
        let terms = parse_terms(input)?;
        let mut r = Self::zero();
        for term in terms {
            let mut e = Self::constant(term.coef);
            for f in &term.factors {
                e = e.multiply(&factor_element(f)?, s);
            }
            r = r.add(&e);
        }
        Ok(r)
    }
}

fn factor_element(f: &Factor) -> Result<AlgebraElement> {
    let err = |msg: &str| Error::Parse { pos: f.pos, msg: msg.into() };
    let e = f.exp;
    let m = match f.name.as_str() {
        "x1" | "x2" => {
            if e < 0 {
                return Err(err("negative exponent on x1/x2"));
            }
            if f.name == "x1" {
                Monomial { w1: e, w2: 0, z1: 0, t: vec![] }
            } else {
                Monomial { w1: 0, w2: e, z1: 0, t: vec![] }
            }
        }
        "y1" => Monomial { w1: 0, w2: 0, z1: e, t: vec![] },
        "y2" => Monomial::one(),
        name => {
            let idx = name
                .strip_prefix('t')
                .and_then(|d| d.parse::<usize>().ok())
                .filter(|&i| (1..=9).contains(&i))
                .ok_or_else(|| err(&format!("unknown variable {name}")))?;
            let mut t = vec![0; idx];
            t[idx - 1] = e;
            Monomial { w1: 0, w2: 0, z1: 0, t: trim(t) }
        }
    };
    Ok(AlgebraElement::monomial(m))
}

fn mono_mul(s: ShearParam, a: &Monomial, b: &Monomial) -> Vec<(Monomial, BigInt)> {
    let (w1, w2) = (a.w1 + b.w1, a.w2 + b.w2);
    let k = w1.min(w2);
    let t = trim(add_t(&a.t, &b.t));
    let z1 = a.z1 + b.z1;
    // (x1 x2)^k = (y1^s + 1)^k
    (0..=k)
        .map(|j| (Monomial { w1: w1 - k, w2: w2 - k, z1: z1 + s.get() * j, t: t.clone() }, binomial(k, j)))
        .collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct Factor {
    pub name: String,
    pub exp: i64,
    pub pos: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Term {
    pub coef: Q,
    pub factors: Vec<Factor>,
}

/// Tokenizes `[+-] term ([+-] term)*` with `term = factor (* factor)*`,
/// `factor = number | ident [^ int]`. Whitespace is ignored.
pub fn parse_terms(input: &str) -> Result<Vec<Term>> {
    let chars: Vec<(usize, char)> = input.char_indices().filter(|(_, c)| !c.is_whitespace()).collect();
    let end = input.len();
    let mut i = 0;
    let at = |i: usize| chars.get(i).map(|x| x.1);
    let pos = |i: usize| chars.get(i).map_or(end, |x| x.0);
    let mut terms = Vec::new();
    if chars.is_empty() {
        return Err(Error::Parse { pos: 0, msg: "empty expression".into() });
    }
    loop {
        let mut sign = q(1);
        while let Some(c @ ('+' | '-')) = at(i) {
            if c == '-' {
                sign = -sign;
            }
            i += 1;
        }
        let mut term = Term { coef: sign, factors: vec![] };
        let mut first = true;
        loop {
            if !first {
                match at(i) {
                    Some('*') => i += 1,
                    Some(c) if c.is_ascii_alphabetic() => {}
                    _ => break,
                }
            }
            first = false;
            match at(i) {
                Some(c) if c.is_ascii_digit() => {
                    let start = i;
                    while at(i).is_some_and(|c| c.is_ascii_digit() || c == '/') {
                        i += 1;
                    }
                    let text: String = chars[start..i].iter().map(|x| x.1).collect();
                    let v = parse_q(&text).ok_or(Error::Parse { pos: pos(start), msg: format!("bad number {text}") })?;
                    term.coef *= v;
                }
                Some(c) if c.is_ascii_alphabetic() => {
                    let start = i;
                    while at(i).is_some_and(|c| c.is_ascii_alphanumeric()) {
                        i += 1;
                    }
                    let name: String = chars[start..i].iter().map(|x| x.1).collect();
                    let mut exp = 1;
                    if at(i) == Some('^') {
                        i += 1;
                        let es = i;
                        if at(i) == Some('-') {
                            i += 1;
                        }
                        while at(i).is_some_and(|c| c.is_ascii_digit()) {
                            i += 1;
                        }
                        let text: String = chars[es..i].iter().map(|x| x.1).collect();
                        exp = text.parse().map_err(|_| Error::Parse { pos: pos(es), msg: "expected integer exponent".into() })?;
                    }
                    term.factors.push(Factor { name, exp, pos: pos(start) });
                }
                Some(c) => return Err(Error::Parse { pos: pos(i), msg: format!("unexpected '{c}'") }),
                None => return Err(Error::Parse { pos: end, msg: "unexpected end of input".into() }),
            }
        }
        terms.push(term);
        match at(i) {
            None => break,
            Some('+' | '-') => continue,
            Some(c) => return Err(Error::Parse { pos: pos(i), msg: format!("unexpected '{c}'") }),
        }
    }
    Ok(terms)
}
