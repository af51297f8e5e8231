//! Reference implementations used as oracles. Each one is written
//! independently of the library code it checks.

#![allow(dead_code)]

use std::collections::BTreeSet;

use oclab::linalg::{q, Rational};

/// Determinant by Leibniz expansion over all permutations.
pub fn leibniz_det(rows: &[Vec<Rational>]) -> Rational {
    let n = rows.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut total = Rational::zero();
    permute(&mut perm, 0, rows, &mut total);
    total
}

fn permute(perm: &mut Vec<usize>, k: usize, rows: &[Vec<Rational>], total: &mut Rational) {
    let n = perm.len();
    if k == n {
        let mut inversions = 0;
        for i in 0..n {
            for j in i + 1..n {
                if perm[i] > perm[j] {
                    inversions += 1;
                }
            }
        }
        let mut term = Rational::one();
        for (i, &p) in perm.iter().enumerate() {
            term = &term * &rows[i][p];
        }
        if inversions % 2 == 1 {
            term = -term;
        }
        *total += &term;
        return;
    }
    for i in k..n {
        perm.swap(k, i);
        permute(perm, k + 1, rows, total);
        perm.swap(k, i);
    }
}

/// Solve a square system exactly by Cramer's rule (small systems only).
pub fn cramer_solve(a: &[Vec<Rational>], b: &[Rational]) -> Vec<Rational> {
    let det = leibniz_det(a);
    assert!(!det.is_zero(), "singular system");
    (0..a.len())
        .map(|c| {
            let replaced: Vec<Vec<Rational>> = a
                .iter()
                .zip(b)
                .map(|(row, bi)| {
                    let mut r = row.clone();
                    r[c] = bi.clone();
                    r
                })
                .collect();
            &leibniz_det(&replaced) / &det
        })
        .collect()
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Squared distance from `b` to the span of linearly independent `columns`,
/// via the normal equations solved exactly.
pub fn projection_distance_squared(columns: &[Vec<Rational>], b: &[Rational]) -> Rational {
    if columns.is_empty() {
        return dot(b, b);
    }
    let gram: Vec<Vec<Rational>> = columns
        .iter()
        .map(|ci| columns.iter().map(|cj| dot(ci, cj)).collect())
        .collect();
    let rhs: Vec<Rational> = columns.iter().map(|c| dot(c, b)).collect();
    let coeffs = cramer_solve(&gram, &rhs);
    let mut r = b.to_vec();
    for (c, col) in coeffs.iter().zip(columns) {
        for (ri, x) in r.iter_mut().zip(col) {
            *ri -= &(c * x);
        }
    }
    dot(&r, &r)
}

/// Largest free set by exhaustive search over all subsets.
pub fn brute_force_max_free(f: &[BTreeSet<usize>]) -> usize {
    let n = f.len();
    let mut best = 0;
    for mask in 0u32..(1 << n) {
        let size = mask.count_ones() as usize;
        if size <= best {
            continue;
        }
        let free = (0..n).filter(|&a| mask & (1 << a) != 0).all(|a| {
            f[a].iter().all(|&b| b == a || mask & (1 << b) == 0)
        });
        if free {
            best = size;
        }
    }
    best
}

/// `g_k` coordinates straight from the defining formula:
/// `y_k(n) + (n+2)^{-k}` for `n ≤ k`, with `y_k(n) = 2^{-n-1}` for `n < T`.
pub fn g_k_direct(k: usize, cutoff: usize, dim: usize) -> Vec<Rational> {
    (0..dim)
        .map(|n| {
            let mut v = if n < cutoff { q(1, 2).pow(n as i32 + 1) } else { Rational::zero() };
            if n <= k {
                v += &q(1, n as i64 + 2).pow(k as i32);
            }
            v
        })
        .collect()
}

/// `‖Σ a_j x_j‖₁` by direct rational accumulation.
pub fn combination_l1(xs: &[&[Rational]], a: &[Rational]) -> Rational {
    let dim = xs[0].len();
    (0..dim)
        .map(|c| xs.iter().zip(a).map(|(x, aj)| aj * &x[c]).sum::<Rational>().abs())
        .sum()
}

/// Packing bound `(1 + δ/2)^d / (δ/2)^d` for δ-separated points in a unit ball.
pub fn packing_bound(delta: f64, d: i32) -> f64 {
    (1.0 + delta / 2.0).powi(d) / (delta / 2.0).powi(d)
}
