use embedcheck_algebra::bareiss::{determinant, rank};
use embedcheck_algebra::ideal::normal_form_mod;
use embedcheck_algebra::poly::Exponent;
use embedcheck_algebra::{AbGroupRing, GkRing, LaurentPoly, Matrix, Ring};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};

type P = LaurentPoly<BigInt>;

fn poly(nvars: usize, max_terms: usize) -> impl Strategy<Value = P> {
    prop::collection::vec((prop::collection::vec(-3i64..=3, nvars), -6i64..=6), 0..=max_terms)
        .prop_map(move |ts| P::from_terms(nvars, ts.into_iter().map(|(e, c)| (e, BigInt::from(c)))))
}

/// Product of random elementary matrices: determinant ±1 by construction.
fn unimodular(n: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec((0..n, 0..n, -2i64..=2, any::<bool>()), 0..6).prop_map(move |ops| {
        let mut m: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
        for (i, j, c, flip) in ops {
            if i != j {
                for k in 0..n {
                    m[i][k] += c * m[j][k];
                }
            }
            if flip {
                m[i].iter_mut().for_each(|x| *x = -*x);
            }
        }
        m
    })
}

/// Columns of `m` are images of the variables.
fn images(m: &[Vec<i64>]) -> Vec<Exponent> {
    let n = m.len();
    (0..n).map(|j| (0..n).map(|i| m[i][j]).collect()).collect()
}

fn matmul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum()).collect()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn laurent_ring_axioms(a in poly(2, 4), b in poly(2, 4), c in poly(2, 4)) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&(&a - &b) + &b) == a);
    }

    #[test]
    fn exact_division_inverts_multiplication(a in poly(2, 4), b in poly(2, 3)) {
        prop_assume!(!b.is_zero());
        let prod = &a * &b;
        prop_assert_eq!(prod.div_exact(&b), Some(a));
    }

    #[test]
    fn text_round_trip(a in poly(3, 5)) {
        let names = ["x", "y", "z"];
        prop_assert_eq!(P::parse(&a.to_text(&names), &names).unwrap(), a);
    }

    #[test]
    fn substitution_is_functorial(p in poly(3, 5), b1 in unimodular(3), b2 in unimodular(3)) {
        let once = p.substitute_monomial(&images(&matmul(&b1, &b2)), 3).unwrap();
        let twice = p
            .substitute_monomial(&images(&b2), 3).unwrap()
            .substitute_monomial(&images(&b1), 3).unwrap();
        prop_assert_eq!(once, twice);
    }

    #[test]
    fn ideal_members_reduce_to_zero(p in poly(2, 4), q in poly(2, 4), c in 2i64..6) {
        let m = P::parse("x^2 - x + 1", &["x", "y"]).unwrap();
        let c = BigInt::from(c);
        let member = &(&p * &m) + &q.scale(&c);
        prop_assert!(normal_form_mod(&member, &m, &c).unwrap().is_zero());
        // The normal form is a function of the class.
        let shifted = &p + &member;
        prop_assert_eq!(normal_form_mod(&shifted, &m, &c).unwrap(), normal_form_mod(&p, &m, &c).unwrap());
    }

    #[test]
    fn group_ring_axioms(a in poly(2, 4), b in poly(2, 4), c in poly(2, 4), k in 2i64..6) {
        let g = AbGroupRing::new(1, vec![k]);
        let (a, b, c) = (g.reduce(&a), g.reduce(&b), g.reduce(&c));
        prop_assert_eq!(g.mul(&g.mul(&a, &b), &c), g.mul(&a, &g.mul(&b, &c)));
        prop_assert_eq!(g.mul(&a, &g.add(&b, &c)), g.add(&g.mul(&a, &b), &g.mul(&a, &c)));
        prop_assert_eq!(g.augmentation(&g.mul(&a, &b)), g.augmentation(&a) * g.augmentation(&b));
    }

    #[test]
    fn rank_matches_random_evaluations(rows in 1usize..4, cols in 1usize..4,
                                       entries in prop::collection::vec(poly(2, 3), 9), seed in any::<u64>()) {
        let m = Matrix::from_rows(
            (0..rows).map(|i| (0..cols).map(|j| entries[i * 3 + j].clone()).collect()).collect(), cols);
        let r = rank(&m);
        let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
        let mut best = 0;
        for _ in 0..3 {
            let point: Vec<BigRational> = (0..2)
                .map(|_| BigRational::new(rng.gen_range(-1000i64..=1000).into(), rng.gen_range(1i64..=997).into()))
                .map(|x| if x.is_zero() { BigRational::new(1.into(), 1009.into()) } else { x })
                .collect();
            let evaluated = Matrix::from_rows(
                (0..rows).map(|i| (0..cols).map(|j| {
                    LaurentPoly::<BigRational>::constant(0, m[(i, j)].evaluate(&point))
                }).collect()).collect(), cols);
            best = best.max(rank(&evaluated));
        }
        prop_assert_eq!(r, best);
    }
}

#[test]
fn gk_norm_identities() {
    for k in 2..=8 {
        let g = GkRing::new(k);
        let a_minus_1 = g.sub(&g.a(), &g.one());
        assert!(g.mul(&g.rho(), &a_minus_1).is_zero(), "k = {k}");
        for n in 1..k {
            let lhs = g.mul(&g.rho(), &g.nu(n));
            assert_eq!(lhs, g.ring().scalar_mul(n, &g.rho()), "k = {k}, n = {n}");
        }
    }
}

#[test]
fn determinant_of_vandermonde() {
    let v = |s: &str| P::parse(s, &["x", "y"]).unwrap();
    let m = Matrix::from_rows(vec![vec![v("1"), v("x"), v("x^2")], vec![v("1"), v("y"), v("y^2")], vec![v("1"), v("1"), v("1")]], 3);
    assert_eq!(determinant(&m, 2), &(&(&v("y") - &v("x")) * &(&v("1") - &v("x"))) * &(&v("1") - &v("y")));
}
