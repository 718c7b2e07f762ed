use embedcheck_algebra::{
    smith_normal_form, EuclideanDomain, Integers, LaurentPid, Matrix, PrimeField, Rationals, Ring, UniLaurent,
};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

fn int_matrix(max_dim: usize, bound: i64) -> impl Strategy<Value = Matrix<BigInt>> {
    (0..=max_dim, 0..=max_dim).prop_flat_map(move |(r, c)| {
        prop::collection::vec(prop::collection::vec(-bound..=bound, c), r)
            .prop_map(move |rows| Matrix::from_rows(rows.into_iter().map(|r| r.into_iter().map(BigInt::from).collect()).collect(), c))
    })
}

/// Cofactor expansion; only used on tiny matrices.
fn det(m: &[Vec<BigInt>]) -> BigInt {
    match m.len() {
        0 => BigInt::from(1),
        1 => m[0][0].clone(),
        n => (0..n)
            .map(|j| {
                let minor: Vec<Vec<BigInt>> =
                    m[1..].iter().map(|row| row.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, x)| x.clone()).collect()).collect();
                let term = &m[0][j] * det(&minor);
                if j % 2 == 0 {
                    term
                } else {
                    -term
                }
            })
            .sum(),
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// gcd of all k×k minors.
fn determinantal_divisor(a: &Matrix<BigInt>, k: usize) -> BigInt {
    let mut g = BigInt::zero();
    for rs in subsets(a.rows(), k) {
        for cs in subsets(a.cols(), k) {
            let m: Vec<Vec<BigInt>> = rs.iter().map(|&i| cs.iter().map(|&j| a[(i, j)].clone()).collect()).collect();
            g = g.gcd(&det(&m));
        }
    }
    g
}

fn laurent_matrix(max_dim: usize) -> impl Strategy<Value = Vec<Vec<Vec<(i64, i64)>>>> {
    (1..=max_dim, 1..=max_dim).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop::collection::vec(prop::collection::vec((-2i64..=2, -3i64..=3), 0..4), c), r)
    })
}

fn to_pid<F: embedcheck_algebra::Field>(pid: &LaurentPid<F>, raw: &[Vec<Vec<(i64, i64)>>]) -> Matrix<UniLaurent<F::Elem>> {
    let cols = raw[0].len();
    let f = pid.field();
    Matrix::from_rows(
        raw.iter()
            .map(|row| row.iter().map(|terms| pid.from_terms(terms.iter().map(|&(e, c)| (e, f.from_int(&BigInt::from(c)))))).collect())
            .collect(),
        cols,
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn integer_snf_is_certified(a in int_matrix(6, 40)) {
        let snf = smith_normal_form(&Integers, &a);
        prop_assert!(snf.certify(&Integers, &a));
        prop_assert!(snf.invariant_factors.iter().all(|d| d.is_positive()));
    }

    #[test]
    fn integer_snf_matches_determinantal_divisors(a in int_matrix(4, 9)) {
        let snf = smith_normal_form(&Integers, &a);
        let mut prod = BigInt::from(1);
        for k in 1..=a.rows().min(a.cols()) {
            let dk = determinantal_divisor(&a, k);
            if k <= snf.rank() {
                prod *= &snf.invariant_factors[k - 1];
                prop_assert_eq!(&prod, &dk);
            } else {
                prop_assert!(dk.is_zero());
            }
        }
    }

    #[test]
    fn rational_laurent_snf_is_certified(raw in laurent_matrix(4)) {
        let pid = LaurentPid::new(Rationals);
        let a = to_pid(&pid, &raw);
        let snf = smith_normal_form(&pid, &a);
        prop_assert!(snf.certify(&pid, &a));
        for d in &snf.invariant_factors {
            prop_assert_eq!(d.low(), 0);
            prop_assert_eq!(pid.leading_coeff(d), BigRational::from_integer(1.into()));
        }
    }

    #[test]
    fn prime_field_laurent_snf_is_certified(raw in laurent_matrix(4), pi in 0usize..4) {
        let p = [2u64, 3, 7, 97][pi];
        let pid = LaurentPid::new(PrimeField::new(p).unwrap());
        let a = to_pid(&pid, &raw);
        let snf = smith_normal_form(&pid, &a);
        prop_assert!(snf.certify(&pid, &a));
    }

    #[test]
    fn laurent_division_identity(a in prop::collection::vec((-4i64..=4, -5i64..=5), 0..6),
                                 b in prop::collection::vec((-4i64..=4, -5i64..=5), 1..5)) {
        let pid = LaurentPid::new(Rationals);
        let conv = |v: &[(i64, i64)]| pid.from_terms(v.iter().map(|&(e, c)| (e, BigRational::from_integer(c.into()))));
        let (a, b) = (conv(&a), conv(&b));
        prop_assume!(!b.is_zero());
        let (q, r) = pid.div_rem(&a, &b);
        prop_assert_eq!(pid.add(&pid.mul(&q, &b), &r), a);
        prop_assert!(r.is_zero() || pid.norm(&r) < pid.norm(&b));
    }
}

#[test]
fn documented_examples() {
    let m = |rows: Vec<Vec<i64>>| {
        let c = rows.first().map_or(0, |r| r.len());
        Matrix::from_rows(rows.into_iter().map(|r| r.into_iter().map(BigInt::from).collect()).collect(), c)
    };
    let factors = |a: Matrix<BigInt>| smith_normal_form(&Integers, &a).invariant_factors;
    assert_eq!(factors(m(vec![vec![0, 2], vec![2, 0]])), vec![BigInt::from(2), BigInt::from(2)]);
    assert_eq!(factors(m(vec![vec![2, 1], vec![1, 2]])), vec![BigInt::from(1), BigInt::from(3)]);
    assert_eq!(factors(m(vec![vec![4]])), vec![BigInt::from(4)]);

    let pid = LaurentPid::new(Rationals);
    let q = |c: i64| BigRational::from_integer(c.into());
    let t_minus_1 = pid.t_pow_minus_one(1);
    let t_plus_1 = pid.from_terms([(1, q(1)), (0, q(1))]);
    let row = Matrix::from_rows(vec![vec![t_minus_1.clone(), t_plus_1]], 2);
    let snf = smith_normal_form(&pid, &row);
    assert_eq!(snf.invariant_factors, vec![pid.one()]);
    let tri = pid.from_terms([(2, q(1)), (1, q(-1)), (0, q(1))]);
    let snf = smith_normal_form(&pid, &Matrix::from_rows(vec![vec![tri.clone()]], 1));
    assert_eq!(snf.invariant_factors, vec![tri]);
    let zero_col = Matrix::from_rows(vec![vec![t_minus_1.clone(), pid.zero()]], 2);
    let snf = smith_normal_form(&pid, &zero_col);
    assert_eq!(snf.invariant_factors, vec![t_minus_1]);
    assert_eq!(zero_col.cols() - snf.rank(), 1);
}
