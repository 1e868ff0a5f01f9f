//! Hilbert bases of semigroups `{v in Z^n : A v >= 0}`.
//!
//! The lineality lattice `L = ker A ∩ Z^n` is split off with a column Hermite
//! form; the pointed quotient cone is handled by enumerating lattice points of
//! the zonotope spanned by its extreme rays and keeping the irreducible ones.

use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IneqSystem {
    pub n: usize,
    pub rows: Vec<Vec<i64>>,
}

impl IneqSystem {
    pub fn new(n: usize, rows: Vec<Vec<i64>>) -> Self {
        assert!(rows.iter().all(|r| r.len() == n && r.iter().any(|&x| x != 0)), "rows must be nonzero of length n");
        IneqSystem { n, rows }
    }

    pub fn values(&self, v: &[i64]) -> Vec<i64> {
        self.rows.iter().map(|r| r.iter().zip(v).map(|(a, b)| a * b).sum()).collect()
    }

    pub fn contains(&self, v: &[i64]) -> bool {
        self.values(v).iter().all(|&x| x >= 0)
    }
}

type Mat = Vec<Vec<i128>>;

/// Column operations bringing `a` (m x n) to `[H | 0]`; returns the transformed
/// matrix, the unimodular `U` with `a U = [H | 0]`, and the rank.
fn column_echelon(a: &Mat, n: usize) -> (Mat, Mat, usize) {
    let mut m = a.clone();
    let mut u: Mat = (0..n).map(|i| (0..n).map(|j| (i == j) as i128).collect()).collect();
    let col_op = |m: &mut Mat, u: &mut Mat, dst: usize, src: usize, k: i128| {
        for row in m.iter_mut() {
            row[dst] -= k * row[src];
        }
        for row in u.iter_mut() {
            row[dst] -= k * row[src];
        }
    };
    let swap = |m: &mut Mat, u: &mut Mat, i: usize, j: usize| {
        for row in m.iter_mut() {
            row.swap(i, j);
        }
        for row in u.iter_mut() {
            row.swap(i, j);
        }
    };
    let mut r = 0;
    for i in 0..m.len() {
        if r == n {
            break;
        }
        loop {
            let nz: Vec<usize> = (r..n).filter(|&j| m[i][j] != 0).collect();
            if nz.len() <= 1 {
                if let Some(&j) = nz.first() {
                    swap(&mut m, &mut u, r, j);
                    if m[i][r] < 0 {
                        for row in m.iter_mut() {
                            row[r] = -row[r];
                        }
                        for row in u.iter_mut() {
                            row[r] = -row[r];
                        }
                    }
                    r += 1;
                }
                break;
            }
            let p = *nz.iter().min_by_key(|&&j| m[i][j].abs()).unwrap();
            for &j in &nz {
                if j != p {
                    let k = m[i][j].div_euclid(m[i][p]);
                    col_op(&mut m, &mut u, j, p, k);
                }
            }
        }
    }
    (m, u, r)
}

fn to128(rows: &[Vec<i64>]) -> Mat {
    rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect()
}

fn col(u: &Mat, j: usize) -> Vec<i128> {
    u.iter().map(|row| row[j]).collect()
}

/// Basis of the integer kernel of `rows` (n columns).
pub fn kernel_basis(rows: &[Vec<i64>], n: usize) -> Vec<Vec<i64>> {
    let (_, u, r) = column_echelon(&to128(rows), n);
    (r..n).map(|j| col(&u, j).into_iter().map(|x| x as i64).collect()).collect()
}

/// Row Hermite normal form of a lattice basis: pivots positive, entries above
/// a pivot reduced into `[0, pivot)`.
pub fn row_hnf(basis: &[Vec<i64>], n: usize) -> Vec<Vec<i64>> {
    let mut b: Mat = to128(basis);
    let mut out: Mat = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();
    for c in 0..n {
        loop {
            let nz: Vec<usize> = (0..b.len()).filter(|&i| b[i][c] != 0).collect();
            if nz.len() <= 1 {
                if let Some(&i) = nz.first() {
                    let mut row = b.remove(i);
                    if row[c] < 0 {
                        row.iter_mut().for_each(|x| *x = -*x);
                    }
                    for (k, prev) in out.iter_mut().enumerate() {
                        let _ = k;
                        let f = prev[c].div_euclid(row[c]);
                        for j in 0..n {
                            prev[j] -= f * row[j];
                        }
                    }
                    out.push(row);
                    pivots.push(c);
                }
                break;
            }
            let p = *nz.iter().min_by_key(|&&i| b[i][c].abs()).unwrap();
            for &i in &nz {
                if i != p {
                    let f = b[i][c].div_euclid(b[p][c]);
                    let src = b[p].clone();
                    for j in 0..n {
                        b[i][j] -= f * src[j];
                    }
                }
            }
        }
    }
    out.into_iter().map(|r| r.into_iter().map(|x| x as i64).collect()).collect()
}

fn reduce_mod(v: &mut [i64], hnf: &[Vec<i64>]) {
    for row in hnf {
        let c = row.iter().position(|&x| x != 0).unwrap();
        let f = v[c].div_euclid(row[c]);
        for (x, r) in v.iter_mut().zip(row) {
            *x -= f * r;
        }
    }
}

fn primitive(v: &[i128]) -> Vec<i128> {
    fn gcd(a: i128, b: i128) -> i128 {
        if b == 0 { a.abs() } else { gcd(b, a % b) }
    }
    let g = v.iter().fold(0, |g, &x| gcd(g, x));
    if g == 0 { v.to_vec() } else { v.iter().map(|x| x / g).collect() }
}

fn subsets(m: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if m < k {
        return vec![];
    }
    let mut out = subsets(m - 1, k);
    for mut s in subsets(m - 1, k - 1) {
        s.push(m - 1);
        out.push(s);
    }
    out
}

fn mat_vec(h: &Mat, u: &[i128]) -> Vec<i128> {
    h.iter().map(|r| r.iter().zip(u).map(|(a, b)| a * b).sum()).collect()
}

/// Extreme rays of the pointed cone `{u : H u >= 0}` (H has full column rank).
fn extreme_rays(h: &Mat, r: usize) -> Vec<Vec<i128>> {
    let mut rays: Vec<Vec<i128>> = Vec::new();
    for sub in subsets(h.len(), r.saturating_sub(1)) {
        let rows: Mat = sub.iter().map(|&i| h[i].clone()).collect();
        let (_, u, rank) = column_echelon(&rows, r);
        if rank + 1 != r {
            continue;
        }
        let k = primitive(&col(&u, r - 1));
        for k in [k.clone(), k.iter().map(|x| -x).collect()] {
            if mat_vec(h, &k).iter().all(|&x| x >= 0) && !rays.contains(&k) {
                rays.push(k);
            }
        }
    }
    rays
}

fn pointed_hilbert_basis(h: &Mat, r: usize) -> Vec<Vec<i128>> {
    let rays = extreme_rays(h, r);
    if rays.is_empty() {
        return vec![];
    }
    let lo: Vec<i128> = (0..r).map(|j| rays.iter().map(|v| v[j].min(0)).sum()).collect();
    let hi: Vec<i128> = (0..r).map(|j| rays.iter().map(|v| v[j].max(0)).sum()).collect();
    let mut cands: Vec<(i128, Vec<i128>)> = Vec::new();
    let mut cur = lo.clone();
    loop {
        let hv = mat_vec(h, &cur);
        if hv.iter().all(|&x| x >= 0) && cur.iter().any(|&x| x != 0) {
            cands.push((hv.iter().sum(), cur.clone()));
        }
        let mut j = 0;
        while j < r {
            if cur[j] < hi[j] {
                cur[j] += 1;
                break;
            }
            cur[j] = lo[j];
            j += 1;
        }
        if j == r {
            break;
        }
    }
    cands.sort();
    let mut basis: Vec<Vec<i128>> = Vec::new();
    for (_, x) in cands {
        let reducible = basis.iter().any(|g| {
            let d: Vec<i128> = x.iter().zip(g).map(|(a, b)| a - b).collect();
            mat_vec(h, &d).iter().all(|&v| v >= 0)
        });
        if !reducible {
            basis.push(x);
        }
    }
    basis
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HilbertBasis {
    /// Lifts of the Hilbert basis of the pointed quotient, reduced modulo `L`.
    pub pointed: Vec<Vec<i64>>,
    /// Hermite-reduced basis of the lineality lattice `L`; `±` each is a generator.
    pub lineality: Vec<Vec<i64>>,
}

impl HilbertBasis {
    pub fn all(&self) -> Vec<Vec<i64>> {
        let mut v = self.pointed.clone();
        for l in &self.lineality {
            v.push(l.clone());
            v.push(l.iter().map(|x| -x).collect());
        }
        v
    }
}

pub fn hilbert_basis_parts(sys: &IneqSystem) -> HilbertBasis {
    let n = sys.n;
    let (m, u, r) = column_echelon(&to128(&sys.rows), n);
    let lin: Vec<Vec<i64>> = (r..n).map(|j| col(&u, j).into_iter().map(|x| x as i64).collect()).collect();
    let lin = row_hnf(&lin, n);
    let h: Mat = m.iter().map(|row| row[..r].to_vec()).collect();
    let mut pointed: Vec<Vec<i64>> = pointed_hilbert_basis(&h, r)
        .iter()
        .map(|x| {
            let mut v: Vec<i64> = (0..n).map(|i| (0..r).map(|j| u[i][j] * x[j]).sum::<i128>() as i64).collect();
            reduce_mod(&mut v, &lin);
            v
        })
        .collect();
    pointed.sort_by(|a, b| b.cmp(a));
    HilbertBasis { pointed, lineality: lin }
}

/// Minimal generating set: pointed part followed by `±` the lineality basis.
pub fn hilbert_basis(sys: &IneqSystem) -> Vec<Vec<i64>> {
    hilbert_basis_parts(sys).all()
}
