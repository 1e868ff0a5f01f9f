//! Brute-force checks that only use the defining inequalities.

use crate::hilbert::IneqSystem;
use num_rational::Ratio;
use serde::Serialize;
use std::collections::HashMap;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleReport {
    pub box_radius: i64,
    pub box_points_in_semigroup: usize,
    /// Every generator satisfies the inequalities.
    pub generators_in_semigroup: bool,
    /// Every semigroup point of the box is a nonnegative combination.
    pub box_points_decompose: bool,
    /// No generator outside the lineality lattice splits as a sum of two
    /// semigroup points outside it.
    pub minimal_modulo_lineality: bool,
    /// Exactly `±` a basis of the lineality lattice is present.
    pub lineality_basis: bool,
}

impl OracleReport {
    pub fn ok(&self) -> bool {
        self.generators_in_semigroup && self.box_points_decompose && self.minimal_modulo_lineality && self.lineality_basis
    }
}

fn box_points(n: usize, r: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut cur = vec![-r; n];
    loop {
        out.push(cur.clone());
        let mut j = 0;
        while j < n {
            if cur[j] < r {
                cur[j] += 1;
                break;
            }
            cur[j] = -r;
            j += 1;
        }
        if j == n {
            return out;
        }
    }
}

/// Rank of an integer matrix over Q.
fn rank(rows: &[Vec<i64>]) -> usize {
    solve_rank(rows.iter().map(|r| r.iter().map(|&x| Ratio::from_integer(x as i128)).collect()).collect())
}

fn solve_rank(mut m: Vec<Vec<Ratio<i128>>>) -> usize {
    let cols = m.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| m[i][c] != Ratio::from_integer(0)) else { continue };
        m.swap(r, p);
        for i in 0..m.len() {
            if i != r && m[i][c] != Ratio::from_integer(0) {
                let f = m[i][c] / m[r][c];
                let src = m[r].clone();
                for j in 0..cols {
                    m[i][j] = m[i][j] - f * src[j];
                }
            }
        }
        r += 1;
    }
    r
}

/// Is `x` an integer combination of the linearly independent `gens`?
fn in_integer_span(gens: &[Vec<i64>], x: &[i64]) -> bool {
    let k = gens.len();
    let n = x.len();
    // columns are the generators, augmented by x
    let mut m: Vec<Vec<Ratio<i128>>> = (0..n)
        .map(|i| {
            let mut row: Vec<Ratio<i128>> = gens.iter().map(|g| Ratio::from_integer(g[i] as i128)).collect();
            row.push(Ratio::from_integer(x[i] as i128));
            row
        })
        .collect();
    let zero = Ratio::from_integer(0);
    let mut r = 0;
    let mut piv = Vec::new();
    for c in 0..k {
        let Some(p) = (r..n).find(|&i| m[i][c] != zero) else { return false };
        m.swap(r, p);
        let d = m[r][c];
        for j in 0..=k {
            m[r][j] = m[r][j] / d;
        }
        for i in 0..n {
            if i != r && m[i][c] != zero {
                let f = m[i][c];
                let src = m[r].clone();
                for j in 0..=k {
                    m[i][j] = m[i][j] - f * src[j];
                }
            }
        }
        piv.push(r);
        r += 1;
    }
    if (r..n).any(|i| m[i][k] != zero) {
        return false;
    }
    piv.iter().all(|&i| m[i][k].is_integer())
}

pub fn check_hilbert_basis(sys: &IneqSystem, gens: &[Vec<i64>], radius: i64) -> OracleReport {
    let height = |v: &[i64]| -> i64 { sys.values(v).iter().sum() };
    let generators_in_semigroup = gens.iter().all(|g| g.len() == sys.n && sys.contains(g));
    let lin: Vec<Vec<i64>> = gens.iter().filter(|g| height(g) == 0).cloned().collect();
    let pointed: Vec<Vec<i64>> = gens.iter().filter(|g| height(g) > 0).cloned().collect();
    let dim_l = sys.n - rank(&sys.rows);
    // lin holds ± pairs; one of each pair spans
    let mut half: Vec<Vec<i64>> = Vec::new();
    for g in &lin {
        let ng: Vec<i64> = g.iter().map(|x| -x).collect();
        if !half.contains(&ng) {
            half.push(g.clone());
        }
    }
    let lineality_basis = lin.len() == 2 * dim_l && half.len() == dim_l && rank(&half) == dim_l
        && half.iter().all(|g| lin.contains(&g.iter().map(|x| -x).collect()));

    let pts: Vec<Vec<i64>> = box_points(sys.n, radius).into_iter().filter(|v| sys.contains(v)).collect();
    let mut memo: HashMap<Vec<i64>, bool> = HashMap::new();
    fn decomposes(
        x: &[i64],
        sys: &IneqSystem,
        pointed: &[Vec<i64>],
        half: &[Vec<i64>],
        memo: &mut HashMap<Vec<i64>, bool>,
    ) -> bool {
        if let Some(&b) = memo.get(x) {
            return b;
        }
        let h: i64 = sys.values(x).iter().sum();
        let ans = if h == 0 {
            in_integer_span(half, x)
        } else {
            pointed.iter().any(|g| {
                let y: Vec<i64> = x.iter().zip(g).map(|(a, b)| a - b).collect();
                sys.contains(&y) && decomposes(&y, sys, pointed, half, memo)
            })
        };
        memo.insert(x.to_vec(), ans);
        ans
    }
    let box_points_decompose = pts.iter().all(|x| decomposes(x, sys, &pointed, &half, &mut memo));
    let nonlin: Vec<&Vec<i64>> = pts.iter().filter(|v| height(v) > 0).collect();
    let minimal_modulo_lineality = pointed.iter().all(|g| {
        !nonlin.iter().any(|y| {
            let z: Vec<i64> = g.iter().zip(y.iter()).map(|(a, b)| a - b).collect();
            sys.contains(&z) && height(&z) > 0
        })
    });
    OracleReport {
        box_radius: radius,
        box_points_in_semigroup: pts.len(),
        generators_in_semigroup,
        box_points_decompose,
        minimal_modulo_lineality,
        lineality_basis,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catches_bad_sets() {
        let q = IneqSystem::new(2, vec![vec![1, 0], vec![0, 1]]);
        assert!(check_hilbert_basis(&q, &[vec![1, 0], vec![0, 1]], 5).ok());
        // missing generator
        assert!(!check_hilbert_basis(&q, &[vec![1, 0]], 5).box_points_decompose);
        // redundant generator
        assert!(!check_hilbert_basis(&q, &[vec![1, 0], vec![0, 1], vec![1, 1]], 5).minimal_modulo_lineality);
        // generator outside
        assert!(!check_hilbert_basis(&q, &[vec![1, 0], vec![0, 1], vec![-1, 0]], 5).generators_in_semigroup);
        let h = IneqSystem::new(2, vec![vec![1, 0]]);
        assert!(check_hilbert_basis(&h, &[vec![1, 0], vec![0, 1], vec![0, -1]], 5).ok());
        assert!(!check_hilbert_basis(&h, &[vec![1, 0], vec![0, 2], vec![0, -2]], 5).ok());
        assert!(!check_hilbert_basis(&h, &[vec![1, 0], vec![0, 1]], 5).ok());
    }

    #[test]
    fn span_test() {
        assert!(in_integer_span(&[vec![0, 1, 1]], &[0, -3, -3]));
        assert!(!in_integer_span(&[vec![0, 2, 2]], &[0, 1, 1]));
        assert!(in_integer_span(&[], &[0, 0]));
    }
}
