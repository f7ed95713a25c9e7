use num_bigint::BigInt;
use proptest::prelude::*;

use nccsp::algebra::{
    binomial, cyclotomic, eval_at_root, eval_limit_at_root, poly_exact_div, q_binomial, q_binomial_by_division, IntPoly,
};
use nccsp::bijections::{quad_to_tree, tree_to_quad};
use nccsp::ncgraph::{enumerate_graphs, Family, NcGraph};

fn poly(max_len: usize) -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(-9i64..=9, 0..max_len).prop_map(|c| IntPoly::from_i64(&c))
}

fn nonzero_poly(max_len: usize) -> impl Strategy<Value = IntPoly> {
    poly(max_len).prop_filter("nonzero", |p| !p.is_zero())
}

/// A random member of `family` with `k` edges on `n` vertices.
fn pick(n: usize, k: usize, family: Family, idx: usize) -> Option<NcGraph> {
    let all: Vec<NcGraph> = enumerate_graphs(n, k, family).collect();
    (!all.is_empty()).then(|| all[idx % all.len()].clone())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn exact_division_inverts_multiplication(a in poly(8), b in nonzero_poly(6)) {
        prop_assert_eq!(poly_exact_div(&(&a * &b), &b), Ok(a));
    }

    #[test]
    fn root_evaluation_is_a_ring_map(a in poly(10), b in poly(10), d in 1usize..=12) {
        prop_assert_eq!(eval_at_root(&(&a * &b), d), &eval_at_root(&a, d) * &eval_at_root(&b, d));
        prop_assert_eq!(eval_at_root(&(&a + &b), d), &eval_at_root(&a, d) + &eval_at_root(&b, d));
    }

    #[test]
    fn limit_cancels_common_cyclotomic_factors(
        a in poly(6),
        b in nonzero_poly(5),
        d in 1usize..=10,
        j in 0u32..3,
    ) {
        let phi = cyclotomic(d);
        prop_assume!(!eval_at_root(&b, d).is_zero());
        let m = phi.pow(j);
        let got = eval_limit_at_root(&(&a * &m), &(&b * &m), d).unwrap();
        let want = &eval_at_root(&a, d) * &eval_at_root(&b, d).inverse().unwrap();
        prop_assert_eq!(got, want);
    }

    #[test]
    fn gaussian_binomials_agree_and_specialize(n in 0usize..=18, k in 0i64..=18) {
        let p = q_binomial(n, k);
        prop_assert_eq!(&p, &q_binomial_by_division(n, k));
        prop_assert_eq!(p.eval_one(), binomial(n as i64, k));
        prop_assert!(p.is_nonnegative() && p.is_symmetric());
    }

    #[test]
    fn rotations_compose(n in 3usize..=8, extra in 0usize..6, idx in 0usize..10_000, a in -20i64..20, b in -20i64..20) {
        let k = (n - 1 + extra).min(2 * n - 3);
        let g = pick(n, k, Family::Connected, idx).unwrap();
        prop_assert_eq!(g.rotate(a).rotate(b), g.rotate(a + b));
        prop_assert_eq!(g.rotate(n as i64), g.clone());
        prop_assert_eq!(g.rotate(a).edge_count(), g.edge_count());
        prop_assert!(g.rotate(a).is_connected());
    }

    #[test]
    fn graph_text_round_trips(n in 2usize..=8, k in 0usize..10, idx in 0usize..10_000) {
        if let Some(g) = pick(n, k.min(2 * n - 3), Family::AnyGraph, idx) {
            prop_assert_eq!(g.to_string().parse::<NcGraph>(), Ok(g));
        }
    }

    #[test]
    fn trees_round_trip_through_quadrangulations(n in 2usize..=9, idx in 0usize..100_000, s in 0i64..9) {
        let t = pick(n, n - 1, Family::Tree, idx).unwrap();
        let q = tree_to_quad(&t).unwrap();
        prop_assert_eq!(quad_to_tree(&q).unwrap(), t.clone());
        prop_assert_eq!(tree_to_quad(&t.rotate(s)).unwrap(), q.rotate(2 * s));
    }
}

#[test]
fn constant_limit_is_plain_value() {
    let p = IntPoly::new(vec![BigInt::from(3)]);
    let v = eval_limit_at_root(&p, &IntPoly::one(), 5).unwrap();
    assert_eq!(v.to_integer(), Some(BigInt::from(3)));
}
