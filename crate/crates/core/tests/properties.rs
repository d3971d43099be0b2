use num_traits::Zero;
use proptest::prelude::*;
use spinquandle::embeddings::{iota_n_map, inn_map};
use spinquandle::groups::{Automorphism, FiniteGroup};
use spinquandle::numerics::{inverse_stereographic, Matrix};
use spinquandle::quandle::{
    alexander_table, check_axioms, core_table, sphere_op, twisted_conj_table, FiniteQuandle, SpherePoint, SphereQuandle,
};
use spinquandle::verify::{check_hom, find_collisions, ReportDocument};
use spinquandle::Rational;

fn rational_point(n: usize) -> impl Strategy<Value = SpherePoint<Rational>> {
    (prop::collection::vec(-7i64..=7, n), 1i64..=6).prop_map(|(q, d)| {
        SpherePoint::new(inverse_stereographic(&q, d).expect("d != 0"), 0.0).expect("unit")
    })
}

fn two(s: &Rational) -> Rational {
    s.clone() + s.clone()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn sphere_op_matches_reflection_formula((x, y) in (1usize..=6).prop_flat_map(|n| (rational_point(n), rational_point(n)))) {
        let z = sphere_op(&x, &y).unwrap();
        let (xs, ys) = (x.vector().coords(), y.vector().coords());
        let dot = xs.iter().zip(ys).fold(Rational::zero(), |acc, (a, b)| acc + a * b);
        let expected: Vec<Rational> = xs.iter().zip(ys).map(|(a, b)| two(&dot) * b - a).collect();
        prop_assert_eq!(z.vector().coords(), &expected[..]);
        prop_assert!(sphere_op(&x, &x).unwrap() == x);
        prop_assert!(sphere_op(&z, &y).unwrap() == x);
    }

    #[test]
    fn sphere_op_is_right_distributive((x, y, w) in (1usize..=5).prop_flat_map(|n| (rational_point(n), rational_point(n), rational_point(n)))) {
        let lhs = sphere_op(&sphere_op(&x, &y).unwrap(), &w).unwrap();
        let rhs = sphere_op(&sphere_op(&x, &w).unwrap(), &sphere_op(&y, &w).unwrap()).unwrap();
        prop_assert!(lhs == rhs);
    }

    #[test]
    fn inn_is_a_symmetric_involution(x in (1usize..=6).prop_flat_map(rational_point)) {
        let m = inn_map(&x);
        let n = x.sphere_dim() + 1;
        prop_assert!(m.transpose() == m);
        prop_assert!(m.mat_mul(&m).unwrap() == Matrix::identity(n).unwrap());
        prop_assert!(inn_map(&x.antipode()) == m);
    }

    #[test]
    fn iota_n_is_a_homomorphism_for_any_seed(n in 2usize..=5, seed in any::<u64>()) {
        let r = check_hom(&iota_n_map::<Rational>(n, 0.0), 6, seed, 0.0);
        prop_assert!(r.pass, "{}", r);
        prop_assert_eq!(r.residual, 0.0);
    }

    #[test]
    fn abelian_core_twisted_alexander_agree(k in 1usize..=24) {
        let z = FiniteGroup::cyclic(k);
        let inv = Automorphism::inversion(&z);
        let core = core_table(&z);
        for x in 0..k {
            for y in 0..k {
                prop_assert_eq!(core.get(x, y), (2 * y + k - x) % k);
            }
        }
        prop_assert_eq!(twisted_conj_table(&z, &inv).rows(), core.rows());
        prop_assert_eq!(alexander_table(&z, &inv).rows(), core.rows());
    }

    #[test]
    fn table_text_round_trips(k in 1usize..=12) {
        let q = core_table(&FiniteGroup::dihedral(k.max(3)));
        let back = FiniteQuandle::parse(&q.to_string()).unwrap();
        prop_assert_eq!(back.rows(), q.rows());
    }

    #[test]
    fn collision_sweep_matches_brute_force(keys in prop::collection::vec(-5.0f64..5.0, 0..60), window in 0.0f64..0.5) {
        let near = |i: usize, j: usize| (keys[i] - keys[j]).abs() <= window;
        let mut expected = Vec::new();
        for i in 0..keys.len() {
            for j in i + 1..keys.len() {
                if near(i, j) {
                    expected.push((i, j));
                }
            }
        }
        prop_assert_eq!(find_collisions(&keys, window, near), expected);
    }

    #[test]
    fn sampled_checks_are_deterministic(n in 1usize..=6, seed in any::<u64>()) {
        let q = SphereQuandle::<f64>::new(n);
        let a = check_axioms(&q, 300, seed, 1e-9);
        let b = check_axioms(&q, 300, seed, 1e-9);
        let doc = ReportDocument::new(vec![a.clone()]);
        prop_assert_eq!(&a, &b);
        prop_assert_eq!(ReportDocument::from_json(&doc.to_json()).unwrap().reports, vec![a]);
    }
}
