//! Generators and relations for the ring of sections of a PL polytope
//! `P = ∩ {p_i >= -1}` over `A_s[t1±, ..., tl±] / J`.
//!
//! Everything is recomputed from the constraint points; printed data supplied
//! as [`Claims`] is only compared against, never used.

use crate::algebra::{parse_terms, AlgebraElement, Monomial};
use crate::convex::{PlHalfSpace, PlPolytope};
use crate::detrop::unit_group;
use crate::hilbert::{hilbert_basis_parts, IneqSystem};
use crate::lattice::{ChartId, ShearParam};
use crate::points::{evaluate_on_mvec, PointTriple};
use crate::scalar::{fmt_q, Q};
use crate::verify::{check_hilbert_basis, OracleReport};
use crate::{Error, Result};
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use std::collections::BTreeSet;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoxInstance {
    pub s: ShearParam,
    /// Constraint points; every threshold is `-1`.
    pub points: Vec<PointTriple<i64>>,
}

impl CoxInstance {
    pub fn new(s: ShearParam, points: Vec<PointTriple<i64>>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::EmptyInput);
        }
        let inst = CoxInstance { s, points };
        if !inst.polytope().is_compact() {
            return Err(Error::NotCompact);
        }
        Ok(inst)
    }

    /// `s = 1`, `p = (1,-1,1)`, `q = (-2,2,1)`, `r = (1,-3,-2)`.
    pub fn pqr() -> Self {
        let s = ShearParam::new(1).unwrap();
        let pts = [(1, -1, 1), (-2, 2, 1), (1, -3, -2)]
            .iter()
            .map(|&(a, b, c)| PointTriple::new(s, a, b, c).unwrap())
            .collect();
        CoxInstance::new(s, pts).unwrap()
    }

    pub fn ell(&self) -> usize {
        self.points.len()
    }

    pub fn polytope(&self) -> PlPolytope {
        PlPolytope::new(self.s, self.points.iter().map(|p| PlHalfSpace::from_ints(p, -1)).collect())
    }
}

/// Order of vanishing of the basis monomial `m` along the divisor of `p`.
pub fn ord_along(s: ShearParam, p: &PointTriple<i64>, m: &Monomial) -> i64 {
    evaluate_on_mvec(p, &m.mvec(s))
}

pub fn ord_vector(inst: &CoxInstance, m: &Monomial) -> Vec<i64> {
    inst.points.iter().map(|p| ord_along(inst.s, p, m)).collect()
}

pub fn unit_degree(inst: &CoxInstance) -> Vec<i64> {
    ord_vector(inst, &unit_group(inst.s))
}

fn t_monomial(t: Vec<i64>) -> Monomial {
    Monomial::one().with_t(t)
}

pub fn unit_ideal(inst: &CoxInstance) -> Vec<AlgebraElement> {
    let u = AlgebraElement::monomial(unit_group(inst.s));
    vec![u.sub(&AlgebraElement::monomial(t_monomial(unit_degree(inst))))]
}

/// Monomial with free coordinates `(w, z1)` on the given half of the fan:
/// chart 1 has `w1 = 0`, chart 2 has `w2 = 0`.
fn piece_monomial(piece: ChartId, w: i64, z1: i64, t: Vec<i64>) -> Monomial {
    match piece {
        ChartId::Chart1 => Monomial::new(0, w, z1, t).unwrap(),
        ChartId::Chart2 => Monomial::new(w, 0, z1, t).unwrap(),
    }
}

/// Free coordinates of `m` on a piece, if it lies there.
pub fn piece_coordinates(piece: ChartId, m: &Monomial) -> Option<(i64, i64)> {
    match piece {
        ChartId::Chart1 if m.w1 == 0 => Some((m.w2, m.z1)),
        ChartId::Chart2 if m.w2 == 0 => Some((m.w1, m.z1)),
        _ => None,
    }
}

/// `{(w, z1, r) : w >= 0, p_i(m) + r_i >= 0}` in `Z^(2 + l)`.
pub fn section_semigroup(inst: &CoxInstance, piece: ChartId) -> IneqSystem {
    let n = 2 + inst.ell();
    let mut nonneg = vec![0; n];
    nonneg[0] = 1;
    let mut rows = vec![nonneg];
    let ew = piece_monomial(piece, 1, 0, vec![]);
    let ez = piece_monomial(piece, 0, 1, vec![]);
    for (i, p) in inst.points.iter().enumerate() {
        let mut row = vec![0; n];
        row[0] = ord_along(inst.s, p, &ew);
        row[1] = ord_along(inst.s, p, &ez);
        row[2 + i] = 1;
        rows.push(row);
    }
    IneqSystem::new(n, rows)
}

fn vector_monomial(piece: ChartId, v: &[i64]) -> Monomial {
    piece_monomial(piece, v[0], v[1], v[2..].to_vec())
}

/// `y1^z1 -> t^(z1 * d_u)`: canonical representative modulo `J`.
pub fn reduce_mod_j(f: &AlgebraElement, inst: &CoxInstance) -> AlgebraElement {
    let d = unit_degree(inst);
    f.map_monomials(|m| {
        let t: Vec<i64> = m.t(d.len()).iter().zip(&d).map(|(a, b)| a + m.z1 * b).collect();
        Monomial::new(m.w1, m.w2, 0, t).unwrap()
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Generator {
    pub symbol: String,
    pub monomial: String,
    pub piece: String,
    pub vector: Vec<i64>,
    #[serde(skip)]
    pub value: Monomial,
}

/// Generators ordered as: positive `w` (chart 1 piece, then chart 2 piece),
/// pure `t_i` by index, remaining `w = 0` ones, lineality pairs with `z1 > 0`
/// first. Lineality generators shared by both pieces appear once.
pub fn cox_generators(inst: &CoxInstance) -> Vec<Generator> {
    let mut seen = BTreeSet::new();
    let mut all: Vec<(u8, Vec<i64>, Generator)> = Vec::new();
    for piece in ChartId::BOTH {
        let sys = section_semigroup(inst, piece);
        for v in hilbert_basis_parts(&sys).all() {
            let m = vector_monomial(piece, &v);
            if !seen.insert(m.clone()) {
                continue;
            }
            let height: i64 = sys.values(&v).iter().sum();
            let unit_t = v[0] == 0 && v[1] == 0 && v[2..].iter().filter(|&&x| x != 0).count() == 1 && v[2..].iter().all(|&x| x >= 0);
            let (class, key) = if v[0] > 0 {
                (if piece == ChartId::Chart1 { 0 } else { 1 }, v.clone())
            } else if unit_t {
                (2, v[2..].iter().map(|x| -x).collect())
            } else if height > 0 {
                (3, v.clone())
            } else {
                (4, vec![-v[1]])
            };
            let name = match piece {
                ChartId::Chart1 => "chart1",
                ChartId::Chart2 => "chart2",
            };
            all.push((class, key, Generator { symbol: String::new(), monomial: m.display(inst.s), piece: name.into(), vector: v, value: m }));
        }
    }
    all.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
    all.into_iter()
        .enumerate()
        .map(|(i, (_, _, mut g))| {
            g.symbol = format!("W{}", i + 1);
            g
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelationVerdict {
    pub word: String,
    /// Zero in `A_s[t±]` before passing to the quotient by `J`.
    pub zero_before_quotient: bool,
    pub zero: bool,
    pub normal_form: String,
}

/// Evaluates a polynomial in `W1..Wn` at the generator monomials.
pub fn evaluate_word(word: &str, gens: &[Generator], s: ShearParam) -> Result<AlgebraElement> {
    let mut total = AlgebraElement::zero();
    for term in parse_terms(word)? {
        let mut e = AlgebraElement::constant(term.coef);
        for f in &term.factors {
            let idx = f
                .name
                .strip_prefix('W')
                .and_then(|d| d.parse::<usize>().ok())
                .filter(|&i| (1..=gens.len()).contains(&i))
                .ok_or_else(|| Error::UnboundSymbol(f.name.clone()))?;
            if f.exp < 0 {
                return Err(Error::Parse { pos: f.pos, msg: "negative exponent on a generator symbol".into() });
            }
            e = e.multiply(&AlgebraElement::monomial(gens[idx - 1].value.clone()).pow(f.exp as u32, s), s);
        }
        total = total.add(&e);
    }
    Ok(total)
}

pub fn relation_check_with(word: &str, inst: &CoxInstance, gens: &[Generator]) -> Result<RelationVerdict> {
    let f = evaluate_word(word, gens, inst.s)?;
    let nf = reduce_mod_j(&f, inst);
    Ok(RelationVerdict {
        word: word.to_string(),
        zero_before_quotient: f.is_zero(),
        zero: nf.is_zero(),
        normal_form: nf.display(inst.s),
    })
}

pub fn relation_check(word: &str, inst: &CoxInstance) -> Result<RelationVerdict> {
    relation_check_with(word, inst, &cox_generators(inst))
}

fn word_string(w: &[usize], gens: &[Generator]) -> String {
    if w.is_empty() {
        return "1".into();
    }
    let mut parts = Vec::new();
    let mut i = 0;
    while i < w.len() {
        let j = w[i..].iter().take_while(|&&x| x == w[i]).count();
        let sym = &gens[w[i]].symbol;
        parts.push(if j == 1 { sym.clone() } else { format!("{sym}^{j}") });
        i += j;
    }
    parts.join("*")
}

fn combination_string(coefs: &[Q], words: &[Vec<usize>], gens: &[Generator]) -> String {
    let mut out = String::new();
    for (c, w) in coefs.iter().zip(words) {
        if c.is_zero() {
            continue;
        }
        let body = word_string(w, gens);
        let mag = c.abs();
        let term = if body == "1" {
            fmt_q(&mag)
        } else if mag.is_one() {
            body
        } else {
            format!("{}*{}", fmt_q(&mag), body)
        };
        if out.is_empty() {
            out = if c.is_negative() { format!("-{term}") } else { term };
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
            out.push_str(&term);
        }
    }
    out
}

/// Kernel vectors of a dense rational matrix (rows x cols).
fn nullspace(mut m: Vec<Vec<Q>>, cols: usize) -> Vec<Vec<Q>> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let d = m[r][c].clone();
        m[r].iter_mut().for_each(|x| *x = &*x / &d);
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                let src = m[r].clone();
                for (x, y) in m[i].iter_mut().zip(&src) {
                    *x = &*x - &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Q::zero(); cols];
            v[f] = Q::one();
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = -m[i][f].clone();
            }
            v
        })
        .collect()
}

fn primitive_positive(v: &[Q]) -> Vec<Q> {
    let ints = crate::scalar::primitive(v);
    let sign = ints.iter().find(|x| !x.is_zero()).map_or(1, |x| if x.is_negative() { -1 } else { 1 });
    ints.into_iter().map(|x| Q::from_integer(x * sign)).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Presentation {
    /// Generators whose normal form modulo `J` is `1`.
    pub eliminated: Vec<String>,
    pub generators: Vec<String>,
    /// Basis of all linear relations among words of degree at most `max_degree`.
    pub relations: Vec<String>,
    pub max_degree: usize,
    pub text: String,
}

fn multisets(n: usize, k: usize, start: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for i in start..n {
        for mut rest in multisets(n, k - 1, i) {
            rest.insert(0, i);
            out.push(rest);
        }
    }
    out
}

/// Drops generators that become `1` and finds every relation of degree at
/// most `max_degree` among the rest by exact linear algebra on normal forms.
pub fn presentation(inst: &CoxInstance, gens: &[Generator], max_degree: usize) -> Presentation {
    let s = inst.s;
    let one = AlgebraElement::one();
    let nf = |g: &Generator| reduce_mod_j(&AlgebraElement::monomial(g.value.clone()), inst);
    let (elim, keep): (Vec<&Generator>, Vec<&Generator>) = gens.iter().partition(|g| nf(g) == one);
    let kept: Vec<Generator> = keep.into_iter().cloned().collect();
    let mut words = Vec::new();
    for k in 0..=max_degree {
        words.extend(multisets(kept.len(), k, 0));
    }
    let forms: Vec<AlgebraElement> = words
        .iter()
        .map(|w| {
            let mut e = AlgebraElement::one();
            for &i in w {
                e = e.multiply(&AlgebraElement::monomial(kept[i].value.clone()), s);
            }
            reduce_mod_j(&e, inst)
        })
        .collect();
    let monos: Vec<Monomial> = forms.iter().flat_map(|f| f.terms().map(|(m, _)| m.clone())).collect::<BTreeSet<_>>().into_iter().collect();
    let matrix: Vec<Vec<Q>> = monos
        .iter()
        .map(|m| forms.iter().map(|f| f.terms().find(|(x, _)| *x == m).map_or(Q::zero(), |(_, c)| c.clone())).collect())
        .collect();
    let relations: Vec<String> = nullspace(matrix, words.len())
        .iter()
        .map(|v| combination_string(&primitive_positive(v), &words, &kept))
        .collect();
    let names: Vec<String> = kept.iter().map(|g| g.symbol.clone()).collect();
    let text = format!("Q[{}] / <{}>", names.join(", "), relations.join(", "));
    Presentation {
        eliminated: elim.iter().map(|g| g.symbol.clone()).collect(),
        generators: names,
        relations,
        max_degree,
        text,
    }
}

/// Printed data to compare against.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Claims {
    pub ord_vector: Vec<i64>,
    pub ideal: Vec<String>,
    pub rows_chart1: Vec<Vec<i64>>,
    pub rows_chart2: Vec<Vec<i64>>,
    pub basis_chart1: Vec<Vec<i64>>,
    pub basis_chart2: Vec<Vec<i64>>,
    pub generators: Vec<String>,
    pub kernel: Vec<String>,
    pub final_relations: Vec<String>,
}

impl Claims {
    /// The printed data accompanying [`CoxInstance::pqr`].
    pub fn pqr() -> Self {
        Claims {
            ord_vector: vec![-1, -1, 2],
            ideal: vec!["y1*y2^-1 - t1^-1*t2^-1*t3^2".into()],
            rows_chart1: vec![vec![1, 0, 0, 0, 0], vec![-2, -1, 1, 0, 0], vec![1, -1, 0, 1, 0], vec![-1, 2, 0, 0, 1]],
            rows_chart2: vec![vec![1, 0, 0, 0, 0], vec![1, -1, 1, 0, 0], vec![-2, -1, 0, 1, 0], vec![1, 2, 0, 0, 1]],
            basis_chart1: vec![
                vec![1, 0, 2, -1, 1],
                vec![0, 0, 1, 0, 0],
                vec![0, 0, 0, 1, 0],
                vec![0, 0, 0, 0, 1],
                vec![0, -1, -1, -1, 2],
                vec![0, 1, 1, 1, -2],
            ],
            basis_chart2: vec![
                vec![1, 0, -1, 2, -1],
                vec![0, 0, 1, 0, 0],
                vec![0, 0, 0, 1, 0],
                vec![0, 0, 0, 0, 1],
                vec![0, -1, -1, -1, 2],
                vec![0, 1, 1, 1, -2],
            ],
            generators: vec![
                "x2*y1^-1*t1^2*t2^-1*t3".into(),
                "x1*t1^-1*t2^2*t3^-1".into(),
                "t1".into(),
                "t2".into(),
                "t3".into(),
                "y1*y2^-1*t1*t2*t3^-2".into(),
                "y1^-1*y2*t1^-1*t2^-1*t3^2".into(),
            ],
            kernel: vec!["W6 - 1".into(), "W5 - 1".into(), "W2*W3 - W1*W7 + W4".into()],
            final_relations: vec!["W2*W3 - W1*W5 + W4".into()],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Discrepancy {
    pub item: String,
    pub claimed: String,
    pub recomputed: String,
    pub evidence: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SectionReport {
    pub piece: String,
    pub coordinates: Vec<String>,
    pub rows: Vec<Vec<i64>>,
    pub rows_match: bool,
    pub hilbert_basis: Vec<Vec<i64>>,
    pub basis_matches: bool,
    pub oracle: OracleReport,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoxReport {
    pub s: i64,
    pub points: Vec<[i64; 3]>,
    pub unit: String,
    pub ord_vector: Vec<i64>,
    pub ideal: Vec<String>,
    pub sections: Vec<SectionReport>,
    pub generator_order: String,
    pub generators: Vec<Generator>,
    pub relations: Vec<RelationVerdict>,
    pub presentation: Presentation,
    pub discrepancies: Vec<Discrepancy>,
    /// All Hilbert bases confirmed by the brute-force oracle.
    pub oracle_ok: bool,
}

fn vecs(v: &[Vec<i64>]) -> String {
    let parts: Vec<String> = v.iter().map(|x| format!("{x:?}")).collect();
    format!("[{}]", parts.join(", "))
}

fn sorted(v: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let mut v = v.to_vec();
    v.sort();
    v
}

/// Why a claimed generator monomial fails to be a section, if it does.
fn section_evidence(inst: &CoxInstance, m: &Monomial) -> String {
    for piece in ChartId::BOTH {
        if let Some((w, z1)) = piece_coordinates(piece, m) {
            let sys = section_semigroup(inst, piece);
            let mut v = vec![w, z1];
            v.extend(m.t(inst.ell()));
            let bad: Vec<String> = sys
                .rows
                .iter()
                .zip(sys.values(&v))
                .filter(|(_, x)| *x < 0)
                .map(|(r, x)| format!("row {r:?} gives {x}"))
                .collect();
            if bad.is_empty() {
                return format!("vector {v:?} lies in the section semigroup but is not a listed generator");
            }
            return format!("vector {v:?} violates: {}", bad.join("; "));
        }
    }
    "not a basis monomial times a t-monomial".into()
}

pub const GENERATOR_ORDER: &str = "positive w on the chart 1 piece, positive w on the chart 2 piece, pure t_i by index, other w = 0 generators, lineality pair with z1 > 0 first";

pub fn verify_claims(inst: &CoxInstance, claims: &Claims) -> Result<CoxReport> {
    let s = inst.s;
    let mut disc = Vec::new();
    let ord = unit_degree(inst);
    if !claims.ord_vector.is_empty() && ord != claims.ord_vector {
        disc.push(Discrepancy {
            item: "unit order vector".into(),
            claimed: format!("{:?}", claims.ord_vector),
            recomputed: format!("{ord:?}"),
            evidence: "orders of y1*y2^-1 along each divisor".into(),
        });
    }
    let ideal = unit_ideal(inst);
    for (i, c) in claims.ideal.iter().enumerate() {
        let claimed = AlgebraElement::parse(c, s)?;
        if ideal.get(i) != Some(&claimed) {
            disc.push(Discrepancy {
                item: format!("ideal generator {}", i + 1),
                claimed: c.clone(),
                recomputed: ideal.get(i).map_or("none".into(), |f| f.display(s)),
                evidence: "u - t^d for the unit generator u".into(),
            });
        }
    }
    let mut sections = Vec::new();
    let mut oracle_ok = true;
    for (piece, rows_c, basis_c) in [
        (ChartId::Chart1, &claims.rows_chart1, &claims.basis_chart1),
        (ChartId::Chart2, &claims.rows_chart2, &claims.basis_chart2),
    ] {
        let sys = section_semigroup(inst, piece);
        let hb = hilbert_basis_parts(&sys).all();
        let oracle = check_hilbert_basis(&sys, &hb, 6);
        oracle_ok &= oracle.ok();
        let (name, free) = match piece {
            ChartId::Chart1 => ("chart1", "w2"),
            ChartId::Chart2 => ("chart2", "w1"),
        };
        let rows_match = rows_c.is_empty() || &sys.rows == rows_c;
        if !rows_match {
            disc.push(Discrepancy {
                item: format!("{name} inequality rows"),
                claimed: vecs(rows_c),
                recomputed: vecs(&sys.rows),
                evidence: "rows are the orders of the piece coordinates along each divisor".into(),
            });
        }
        let basis_matches = basis_c.is_empty() || sorted(&hb) == sorted(basis_c);
        if !basis_matches {
            let claimed_ok = check_hilbert_basis(&sys, basis_c, 6);
            disc.push(Discrepancy {
                item: format!("{name} Hilbert basis"),
                claimed: vecs(basis_c),
                recomputed: vecs(&hb),
                evidence: format!("oracle on claimed set: {claimed_ok:?}"),
            });
        }
        let mut coordinates = vec![free.to_string(), "z1".to_string()];
        coordinates.extend((1..=inst.ell()).map(|i| format!("r{i}")));
        sections.push(SectionReport { piece: name.into(), coordinates, rows: sys.rows.clone(), rows_match, hilbert_basis: hb, basis_matches, oracle });
    }
    let gens = cox_generators(inst);
    if !claims.generators.is_empty() && gens.len() != claims.generators.len() {
        disc.push(Discrepancy {
            item: "generator count".into(),
            claimed: claims.generators.len().to_string(),
            recomputed: gens.len().to_string(),
            evidence: "union of both Hilbert bases".into(),
        });
    }
    for (i, c) in claims.generators.iter().enumerate() {
        let claimed = AlgebraElement::parse(c, s)?;
        let ours = gens.get(i).map(|g| AlgebraElement::monomial(g.value.clone()));
        if ours.as_ref() != Some(&claimed) {
            let evidence = match claimed.terms().next() {
                Some((m, _)) if claimed.len() == 1 => section_evidence(inst, m),
                _ => "not a monomial".into(),
            };
            disc.push(Discrepancy {
                item: format!("generator X{}", i + 1),
                claimed: c.clone(),
                recomputed: gens.get(i).map_or("none".into(), |g| g.monomial.clone()),
                evidence,
            });
        }
    }
    let mut relations = Vec::new();
    let mut checked: Vec<String> = Vec::new();
    if *inst == CoxInstance::pqr() {
        checked.push("W1*W2 - W5^2*W6 - W3*W4".into());
        checked.push("W6*W7 - 1".into());
    }
    let pres = presentation(inst, &gens, 2);
    checked.extend(pres.eliminated.iter().map(|e| format!("{e} - 1")));
    checked.extend(pres.relations.iter().cloned());
    for w in &checked {
        relations.push(relation_check_with(w, inst, &gens)?);
    }
    for (item, list) in [("kernel element", &claims.kernel), ("final relation", &claims.final_relations)] {
        for w in list {
            let v = match relation_check_with(w, inst, &gens) {
                Ok(v) => v,
                Err(e) => {
                    disc.push(Discrepancy { item: item.into(), claimed: w.clone(), recomputed: "unevaluable".into(), evidence: e.to_string() });
                    continue;
                }
            };
            if !v.zero {
                disc.push(Discrepancy {
                    item: item.into(),
                    claimed: format!("{w} = 0"),
                    recomputed: format!("normal form {}", v.normal_form),
                    evidence: format!("recomputed presentation {}", pres.text),
                });
            }
            relations.push(v);
        }
    }
    Ok(CoxReport {
        s: s.get(),
        points: inst.points.iter().map(|p| [p.a, p.b, p.c]).collect(),
        unit: unit_group(s).display(s),
        ord_vector: ord,
        ideal: ideal.iter().map(|f| f.display(s)).collect(),
        sections,
        generator_order: GENERATOR_ORDER.into(),
        generators: gens,
        relations,
        presentation: pres,
        discrepancies: disc,
        oracle_ok,
    })
}


#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn inst() -> CoxInstance {
        CoxInstance::pqr()
    }

    #[test]
    fn unit_orders() {
        let i = inst();
        assert_eq!(unit_degree(&i), vec![-1, -1, 2]);
        assert_eq!(ord_vector(&i, &Monomial::one()), vec![0, 0, 0]);
        let x1 = Monomial::new(1, 0, 0, vec![]).unwrap();
        assert_eq!(ord_along(i.s, &i.points[0], &x1), 1);
        let j = unit_ideal(&i);
        assert_eq!(j.len(), 1);
        assert_eq!(j[0].display(i.s), "y1*y2^-1 - t1^-1*t2^-1*t3^2");
        assert!(reduce_mod_j(&j[0], &i).is_zero());
    }

    #[test]
    fn inequality_rows() {
        let i = inst();
        let c = Claims::pqr();
        assert_eq!(section_semigroup(&i, ChartId::Chart1).rows, c.rows_chart1);
        assert_eq!(section_semigroup(&i, ChartId::Chart2).rows, c.rows_chart2);
    }

    #[test]
    fn rows_are_linear_on_pieces() {
        let i = inst();
        for piece in ChartId::BOTH {
            let sys = section_semigroup(&i, piece);
            for w in 0..5 {
                for z in -5..5 {
                    let m = piece_monomial(piece, w, z, vec![]);
                    let direct = ord_vector(&i, &m);
                    let lin: Vec<i64> = sys.rows[1..].iter().map(|r| r[0] * w + r[1] * z).collect();
                    assert_eq!(direct, lin);
                }
            }
        }
    }

    #[test]
    fn generators_and_bindings() {
        let i = inst();
        let g = cox_generators(&i);
        let shown: Vec<&str> = g.iter().map(|g| g.monomial.as_str()).collect();
        assert_eq!(
            shown,
            vec![
                "x2*y2^-1*t1^2*t2^-1*t3",
                "x1*t1^-1*t2^2*t3^-1",
                "t1",
                "t2",
                "t3",
                "y1*y2^-1*t1*t2*t3^-2",
                "y1^-1*y2*t1^-1*t2^-1*t3^2"
            ]
        );
        let x6 = AlgebraElement::monomial(g[5].value.clone());
        assert_eq!(reduce_mod_j(&x6, &i), AlgebraElement::one());
    }

    #[test]
    fn relations() {
        let i = inst();
        let v = relation_check("W1*W2 - W5^2*W6 - W3*W4", &i).unwrap();
        assert!(v.zero_before_quotient && v.zero);
        let v = relation_check("W6*W7 - 1", &i).unwrap();
        assert!(v.zero_before_quotient);
        for w in ["W6 - 1", "W7 - 1"] {
            let v = relation_check(w, &i).unwrap();
            assert!(!v.zero_before_quotient && v.zero);
        }
        let v = relation_check("W2*W3 - W1*W7 + W4", &i).unwrap();
        assert!(!v.zero);
        assert!(v.normal_form.contains("x1") && v.normal_form.contains("x2"));
        assert!(!relation_check("W5 - 1", &i).unwrap().zero);
        assert_eq!(relation_check("W8", &i), Err(Error::UnboundSymbol("W8".into())));
    }

    #[test]
    fn recomputed_presentation() {
        let i = inst();
        let p = presentation(&i, &cox_generators(&i), 2);
        assert_eq!(p.eliminated, vec!["W6", "W7"]);
        assert_eq!(p.relations, vec!["W1*W2 - W3*W4 - W5^2"]);
    }

    #[test]
    fn report_flags_printed_claims() {
        let r = verify_claims(&inst(), &Claims::pqr()).unwrap();
        assert!(r.oracle_ok);
        assert!(r.sections.iter().all(|s| s.rows_match && s.basis_matches));
        let items: Vec<(&str, &str)> = r.discrepancies.iter().map(|d| (d.item.as_str(), d.claimed.as_str())).collect();
        assert_eq!(
            items,
            vec![
                ("generator X1", "x2*y1^-1*t1^2*t2^-1*t3"),
                ("kernel element", "W5 - 1 = 0"),
                ("kernel element", "W2*W3 - W1*W7 + W4 = 0"),
                ("final relation", "W2*W3 - W1*W5 + W4 = 0"),
            ]
        );
        assert!(r.discrepancies[0].evidence.contains("[-1, 2, 0, 0, 1] gives -2"));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn unit_multiple_keeps_verdict(k in -3i64..4, w in 0usize..6) {
            let words = ["W1*W2 - W5^2*W6 - W3*W4", "W6 - 1", "W5 - 1", "W2*W3 - W1*W7 + W4", "W1*W2 - W3*W4 - W5^2", "W3"];
            let i = inst();
            let g = cox_generators(&i);
            let f = evaluate_word(words[w], &g, i.s).unwrap();
            let u = AlgebraElement::monomial(Monomial::new(0, 0, k, vec![]).unwrap());
            let a = reduce_mod_j(&f, &i).is_zero();
            let b = reduce_mod_j(&f.multiply(&u, i.s), &i).is_zero();
            prop_assert_eq!(a, b);
        }

        #[test]
        fn reduction_keeps_grading(w1 in 0i64..3, z1 in -4i64..5, t in proptest::collection::vec(-3i64..4, 3)) {
            // class of r in Z^3 / Z d_u: pairing with a vector orthogonal to d_u
            let i = inst();
            let d = unit_degree(&i);
            let orth = [[1i64, -1, 0], [2, 0, 1]];
            for o in orth { prop_assert_eq!(o.iter().zip(&d).map(|(a, b)| a * b).sum::<i64>(), 0); }
            let m = Monomial::new(w1, 0, z1, t.clone()).unwrap();
            let r = reduce_mod_j(&AlgebraElement::monomial(m), &i);
            for (n, _) in r.terms() {
                let nt = n.t(3);
                for o in orth {
                    let a: i64 = o.iter().zip(&t).map(|(a, b)| a * b).sum();
                    let b: i64 = o.iter().zip(&nt).map(|(a, b)| a * b).sum();
                    prop_assert_eq!(a, b);
                }
            }
        }
    }

    #[test]
    fn other_instance_without_claims() {
        let s = ShearParam::new(1).unwrap();
        let pts = vec![PointTriple::new(s, -2, 2, 1).unwrap(), PointTriple::new(s, 0, -1, -1).unwrap(), PointTriple::new(s, 1, -1, 1).unwrap()];
        let inst = CoxInstance::new(s, pts).unwrap();
        let rep = verify_claims(&inst, &Claims::default()).unwrap();
        assert!(rep.oracle_ok);
        assert!(rep.discrepancies.is_empty());
        assert!(rep.relations.iter().all(|r| r.zero));
    }

}
