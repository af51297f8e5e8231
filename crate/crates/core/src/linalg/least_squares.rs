//! Float-mode density diagnostic: the least-squares residual via
//! Householder QR with column pivoting.

use super::{FloatMatrix, FloatVector};

/// `min_c ‖A c − b‖₂`.
///
/// Columns whose remaining norm falls below `max(m, n) · ε · ‖A‖` are
/// treated as dependent; the residual is the norm of the part of `Qᵀ b`
/// outside the retained columns. Pivot ties go to the lowest index.
pub fn least_squares_residual(a: &FloatMatrix, b: &FloatVector) -> f64 {
    let m = a.nrows();
    assert_eq!(b.dim(), m, "right-hand side must have one entry per row of A");
    let n = a.ncols();
    let mut w: Vec<Vec<f64>> = a.rows().to_vec();
    let mut rhs: Vec<f64> = b.coords().to_vec();

    let col_norm = |w: &[Vec<f64>], from: usize, j: usize| -> f64 {
        let v = FloatVector::new(w[from..].iter().map(|r| r[j]).collect(), b.norm_tag());
        v.l2()
    };
    let scale = (0..n).map(|j| col_norm(&w, 0, j)).fold(0.0, f64::max);
    let tol = (m.max(n) as f64) * f64::EPSILON * scale;

    let mut rank = 0;
    for k in 0..m.min(n) {
        let (best, best_norm) = (k..n)
            .map(|j| (j, col_norm(&w, k, j)))
            .fold((k, -1.0), |acc, (j, nj)| if nj > acc.1 { (j, nj) } else { acc });
        if best_norm <= tol {
            break;
        }
        for row in w.iter_mut() {
            row.swap(k, best);
        }
        // Reflector v with H = I - 2 v vᵀ / vᵀv mapping column k onto -sign·‖x‖ e_k.
        let alpha = if w[k][k] >= 0.0 { -best_norm } else { best_norm };
        let mut v: Vec<f64> = w[k..].iter().map(|r| r[k]).collect();
        v[0] -= alpha;
        let vtv: f64 = v.iter().map(|x| x * x).sum();
        if vtv > 0.0 {
            for j in k..n {
                let dot: f64 = v.iter().zip(&w[k..]).map(|(vi, r)| vi * r[j]).sum();
                let f = 2.0 * dot / vtv;
                for (vi, r) in v.iter().zip(w[k..].iter_mut()) {
                    r[j] -= f * vi;
                }
            }
            let dot: f64 = v.iter().zip(&rhs[k..]).map(|(vi, r)| vi * r).sum();
            let f = 2.0 * dot / vtv;
            for (vi, r) in v.iter().zip(rhs[k..].iter_mut()) {
                *r -= f * vi;
            }
        }
        rank = k + 1;
    }

    if rank == m {
        return 0.0;
    }
    FloatVector::new(rhs[rank..].to_vec(), b.norm_tag()).l2()
}
