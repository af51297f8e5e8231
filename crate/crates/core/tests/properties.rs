//! Invariants checked on random inputs.

mod common;

use std::collections::BTreeSet;

use oclab::certify::*;
use oclab::constructors::*;
use oclab::linalg::*;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn small_rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| q(n, d))
}

fn matrix(max: usize) -> impl Strategy<Value = ExactMatrix> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop::collection::vec(small_rational(), c), r).prop_map(ExactMatrix::from_rows)
    })
}

/// Low-rank matrices are rare under uniform entries, so build some as
/// products.
fn low_rank_matrix() -> impl Strategy<Value = ExactMatrix> {
    (1usize..=6, 1usize..=6, 1usize..=3).prop_flat_map(|(r, c, k)| {
        (
            prop::collection::vec(prop::collection::vec(small_rational(), k), r),
            prop::collection::vec(prop::collection::vec(small_rational(), c), k),
        )
            .prop_map(|(a, b)| {
                let rows = a
                    .iter()
                    .map(|ar| (0..b[0].len()).map(|j| ar.iter().zip(&b).map(|(x, br)| x * &br[j]).sum()).collect())
                    .collect();
                ExactMatrix::from_rows(rows)
            })
    })
}

fn any_matrix() -> impl Strategy<Value = ExactMatrix> {
    prop_oneof![matrix(8), low_rank_matrix()]
}

fn distinct_nodes(min: usize, max: usize) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::btree_set((1i64..200, 1i64..50), min..=max).prop_filter_map("distinct values", |pairs| {
        let values: BTreeSet<Rational> = pairs.iter().map(|&(n, d)| q(n, d)).collect();
        (values.len() == pairs.len()).then(|| values.into_iter().collect())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn rank_is_transpose_invariant(m in any_matrix()) {
        prop_assert_eq!(rank_exact(&m).rank, rank_exact(&m.transpose()).rank);
    }

    #[test]
    fn pivot_logs_replay(m in any_matrix()) {
        let cert = rank_exact(&m);
        prop_assert_eq!(replay_pivot_log(&m, &cert.pivots).unwrap(), cert.rank);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn nullspace_is_annihilated(m in any_matrix()) {
        let basis = nullspace_exact(&m);
        prop_assert_eq!(basis.len(), m.ncols() - rank_exact(&m).rank);
        for f in &basis {
            prop_assert!(!f.is_zero());
            for row in m.rows() {
                let p: Rational = row.iter().zip(f.coords()).map(|(a, b)| a * b).sum();
                prop_assert!(p.is_zero());
            }
        }
    }

    #[test]
    fn density_certificates_are_sound(m in any_matrix()) {
        let d = m.ncols();
        let vs: Vec<ExactVector> = (0..m.nrows()).map(|r| m.row_vector(r, NormTag::L1)).collect();
        let subset: Vec<usize> = (0..vs.len()).collect();
        let cert = density_certificate(&vs, &subset, d).unwrap();
        cert.verify(&vs).unwrap();
        prop_assert_eq!(cert.is_full(), rank_exact(&m).rank == d);
    }

    #[test]
    fn small_determinants_match_leibniz(rows in (1usize..=4).prop_flat_map(|n| prop::collection::vec(prop::collection::vec(small_rational(), n), n))) {
        let m = ExactMatrix::from_rows(rows.clone());
        prop_assert_eq!(det_exact(&m).unwrap(), common::leibniz_det(&rows));
    }

    #[test]
    fn l1_restriction_is_additive(v in prop::collection::vec(small_rational(), 1..30), cut in 0usize..40) {
        let x = ExactVector::new(v, NormTag::L1);
        let n = x.dim();
        prop_assert_eq!(x.restrict(0..cut).l1() + x.restrict(cut..n).l1(), x.l1());
    }

    #[test]
    fn least_squares_consistency(cols in prop::collection::vec(prop::collection::vec(-5i64..=5, 4), 1..=3), coeffs in prop::collection::vec(-3i64..=3, 3), noise in prop::collection::vec(-5i64..=5, 4)) {
        let columns: Vec<FloatVector> = cols.iter().map(|c| FloatVector::new(c.iter().map(|&x| x as f64).collect(), NormTag::L2)).collect();
        let a = FloatMatrix::from_columns(&columns);
        let mut b = vec![0.0; 4];
        for (col, &k) in cols.iter().zip(&coeffs) {
            for (bi, &x) in b.iter_mut().zip(col) {
                *bi += (k * x) as f64;
            }
        }
        let inside = FloatVector::new(b.clone(), NormTag::L2);
        prop_assert!(least_squares_residual(&a, &inside) < 1e-9);
        let outside = FloatVector::new(noise.iter().map(|&x| x as f64).collect(), NormTag::L2);
        let r = least_squares_residual(&a, &outside);
        prop_assert!(r <= outside.l2() + 1e-12);
        prop_assert!(r >= -1e-12);
    }

    #[test]
    fn n_alpha_is_monotone(seed in any::<u64>(), len in 4usize..40, members in 1usize..6) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let family: Vec<ExactVector> = (0..members).map(|_| {
            let w: Vec<i64> = (0..len).map(|_| rng.gen_range(-3i64..=3)).collect();
            let total: i64 = w.iter().map(|x| x.abs()).sum::<i64>().max(1);
            let mut v = ExactVector::new(w.iter().map(|&x| q(x, total)).collect(), NormTag::L1);
            if v.is_zero() {
                v.set(0, q(1, 1));
            }
            v
        }).collect();
        let table = n_alpha_table(&family, len);
        prop_assert_eq!(table[0].clone(), q(0, 1));
        for w in table.windows(2) {
            prop_assert!(w[0] <= w[1]);
        }
    }

    #[test]
    fn cover_is_a_partition(points in prop::collection::vec(prop::collection::vec(-2i64..=2, 3), 1..8), hs in prop::collection::vec(prop::collection::vec(-2i64..=2, 3), 1..4)) {
        let points: Vec<ExactVector> = points.iter().map(|p| ExactVector::from_ints(p, NormTag::L1)).collect();
        let hs: Vec<HyperplaneFunctional> = hs.iter().filter_map(|h| HyperplaneFunctional::new(ExactVector::from_ints(h, NormTag::L1)).ok()).collect();
        prop_assume!(!hs.is_empty());
        let covered = points.iter().all(|p| hs.iter().any(|h| h.contains(p)));
        match hyperplane_cover(&points, &hs).unwrap() {
            CoverOutcome::Covered { assignment } => {
                prop_assert!(covered);
                for (i, &h) in assignment.iter().enumerate() {
                    prop_assert!(hs[h].contains(&points[i]));
                }
                let m = pigeonhole_majority(&points, &hs).unwrap();
                prop_assert!(m.members.len() >= points.len().div_ceil(hs.len()));
            }
            CoverOutcome::Escape { point, pairings } => {
                prop_assert!(!covered);
                prop_assert!(pairings.iter().all(|p| !p.is_zero()));
                prop_assert_eq!(pairings.len(), hs.len());
                for (h, p) in hs.iter().zip(&pairings) {
                    prop_assert_eq!(&h.pair(&points[point]), p);
                }
            }
        }
    }

    #[test]
    fn greedy_separation_is_maximal(points in prop::collection::vec(prop::collection::vec(small_rational(), 2), 1..25), d in (1i64..=8).prop_map(|n| q(n, 4))) {
        let pts: Vec<ExactVector> = points.into_iter().map(|c| ExactVector::new(c, NormTag::L2)).collect();
        for tag in [NormTag::L1, NormTag::L2, NormTag::Linf] {
            let kept = greedy_separated_subset(&pts, &d.clone().into(), tag).unwrap();
            let dist_ge = |a: &ExactVector, b: &ExactVector| {
                let diff = a.sub(b);
                match tag {
                    NormTag::L1 => diff.l1() >= d,
                    NormTag::L2 => diff.l2_squared() >= &d * &d,
                    NormTag::Linf => diff.linf() >= d,
                }
            };
            for (i, &a) in kept.iter().enumerate() {
                for &b in &kept[i + 1..] {
                    prop_assert!(dist_ge(&pts[a], &pts[b]));
                }
            }
            for i in (0..pts.len()).filter(|i| !kept.contains(i)) {
                prop_assert!(kept.iter().any(|&j| !dist_ge(&pts[i], &pts[j])));
            }
        }
    }

    #[test]
    fn vandermonde_product_matches_elimination(nodes in distinct_nodes(2, 10)) {
        let m = vandermonde_matrix(&nodes);
        prop_assert_eq!(vandermonde_det(&nodes).unwrap(), det_exact(&m).unwrap());
    }

    #[test]
    fn rationals_round_trip(r in small_rational()) {
        let s = serde_json::to_string(&r).unwrap();
        let back: Rational = serde_json::from_str(&s).unwrap();
        prop_assert_eq!(back, r);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn vandermonde_five_hundred_tuples(nodes in distinct_nodes(2, 10)) {
        let fam = klee_vectors_any(&nodes);
        let rows: Vec<Vec<Rational>> = fam.iter().map(|r| r.to_vec()).collect();
        prop_assert_eq!(vandermonde_det(&nodes).unwrap(), det_exact(&ExactMatrix::from_rows(rows)).unwrap());
    }
}

/// Rows `(1, λ, …, λ^{n-1})` without the (0, 1/2) restriction.
fn klee_vectors_any(nodes: &[Rational]) -> Vec<Vec<Rational>> {
    nodes.iter().map(|l| powers(l, nodes.len())).collect()
}

#[test]
fn klee_density_by_subset_size() {
    let lambdas: Vec<Rational> = (1..=7).map(|i| q(i, 16)).collect();
    for d in 2..=4 {
        let fam = klee_vectors(&lambdas, d).unwrap();
        for size in 1..=lambdas.len() {
            let certs = certify_subsets(fam.vectors(), &all_subsets(lambdas.len(), size), d).unwrap();
            assert!(certs.iter().all(|c| c.is_full() == (size >= d)), "d = {d}, size = {size}");
            for c in &certs {
                c.verify(fam.vectors()).unwrap();
            }
        }
    }
}

#[test]
fn free_sets_on_ten_thousand_random_mappings() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xF4EE);
    for _ in 0..10_000 {
        let n = rng.gen_range(1..=64);
        let f: Vec<BTreeSet<usize>> = (0..n)
            .map(|_| {
                let k = rng.gen_range(0..=4);
                (0..k).map(|_| rng.gen_range(0..n)).collect()
            })
            .collect();
        let inst = free_set_extract(n, &f).unwrap();
        assert!(inst.is_free());
        // Maximality: every rejected index conflicts with H.
        for a in (0..n).filter(|a| !inst.h.contains(a)) {
            let conflicts = f[a].iter().any(|b| *b != a && inst.h.contains(b)) || inst.h.iter().any(|&b| f[b].contains(&a));
            assert!(conflicts);
        }
    }
}

#[test]
fn greedy_free_sets_within_factor_three_on_random_mappings() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xB0B);
    for _ in 0..2000 {
        let n = rng.gen_range(1..=12);
        let f: Vec<BTreeSet<usize>> = (0..n)
            .map(|_| {
                let k = rng.gen_range(0..=4);
                (0..k).map(|_| rng.gen_range(0..n)).collect()
            })
            .collect();
        let h = free_set_extract(n, &f).unwrap().h.len();
        let opt = common::brute_force_max_free(&f);
        assert!(3 * h >= opt, "greedy {h}, optimum {opt}, f = {f:?}");
    }
}

#[test]
fn disjoint_supports_give_exact_sample_norms() {
    let family: Vec<ExactVector> = (0..6).map(|i| ExactVector::unit(30, 5 * i + 2, NormTag::L1)).collect();
    let data = sliding_hump_extract(&family, &q(1, 10)).unwrap();
    let samples = coefficient_samples(data.extracted.len(), 500, 2);
    let xs: Vec<&ExactVector> = data.extracted_vectors();
    for norm in combination_norms(&xs, &samples) {
        assert_eq!(norm, q(1, 1));
    }
}
