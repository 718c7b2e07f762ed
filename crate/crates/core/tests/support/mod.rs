//! Strategies and property checks shared by the property suite and the
//! acceptance runner.
#![allow(dead_code)]

use embedcheck::catalog::{linking_matrix, shipped_catalog, surgered_group, EntryKind, SurgeryDescription};
use embedcheck::cover::rs_cover;
use embedcheck::crowell::{alexander_module_rank, infinite_cyclic_cover_homology};
use embedcheck::fox::{fundamental_identity_check, RingMap};
use embedcheck::presentation::{cokernel_of_rows, epimorphisms_to_cyclic};
use embedcheck::{abelianize, GroupPresentation, Word};
use embedcheck_algebra::poly::Exponent;
use embedcheck_algebra::{
    smith_normal_form, AbGroupRing, EuclideanDomain, Integers, LaurentPid, LaurentPoly, Matrix, Rationals, UniLaurent,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

pub type Check = Result<(), TestCaseError>;

pub fn word(gens: usize, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec((0..gens, prop_oneof![-3i64..=-1, 1i64..=3]), 0..=max_len).prop_map(Word::from_letters)
}

/// Presentations with fewer relators than generators, so `β ≥ 1`.
pub fn presentation() -> impl Strategy<Value = GroupPresentation> {
    (2usize..=3).prop_flat_map(|g| {
        prop::collection::vec(word(g, 6), 0..g).prop_map(move |rels| {
            let names = ["a", "b", "c"][..g].iter().map(|s| s.to_string()).collect();
            GroupPresentation::new(names, rels).expect("valid presentation")
        })
    })
}

// Fox calculus

pub fn fox_case() -> impl Strategy<Value = (Word, Vec<Exponent>)> {
    (word(3, 10), prop::collection::vec(prop::collection::vec(-2i64..=2, 3), 3))
}

/// Fundamental identity into `ℤ[ℤ² ⊕ ℤ/3]`.
pub fn check_fox_identity((w, images): (Word, Vec<Exponent>)) -> Check {
    let phi = RingMap::new(AbGroupRing::new(2, vec![3]), images).expect("image sizes match");
    prop_assert!(fundamental_identity_check(&w, &phi));
    Ok(())
}

// Smith normal forms

pub fn int_matrix() -> impl Strategy<Value = Matrix<BigInt>> {
    (0usize..=5, 0usize..=5).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop::collection::vec(-20i64..=20, c), r)
            .prop_map(move |rows| Matrix::from_rows(rows.into_iter().map(|r| r.into_iter().map(BigInt::from).collect()).collect(), c))
    })
}

fn divisibility_chain<R: EuclideanDomain>(ring: &R, factors: &[R::Elem]) -> bool {
    factors.windows(2).all(|w| ring.divides(&w[0], &w[1]))
}

pub fn check_integer_snf(a: Matrix<BigInt>) -> Check {
    let snf = smith_normal_form(&Integers, &a);
    prop_assert!(snf.certify(&Integers, &a));
    prop_assert!(divisibility_chain(&Integers, &snf.invariant_factors));
    Ok(())
}

/// Entries as lists of `(exponent, coefficient)` terms.
pub fn laurent_matrix() -> impl Strategy<Value = Vec<Vec<Vec<(i64, i64)>>>> {
    (1usize..=3, 1usize..=3).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop::collection::vec(prop::collection::vec((-2i64..=3, -3i64..=3), 0..=3), c), r)
    })
}

pub fn check_rational_laurent_snf(raw: Vec<Vec<Vec<(i64, i64)>>>) -> Check {
    let pid = LaurentPid::new(Rationals);
    let cols = raw[0].len();
    let rows: Vec<Vec<UniLaurent<BigRational>>> = raw
        .iter()
        .map(|r| {
            r.iter()
                .map(|terms| pid.from_terms(terms.iter().map(|&(e, c)| (e, BigRational::from_integer(c.into())))))
                .collect()
        })
        .collect();
    let a = Matrix::from_rows(rows, cols);
    let snf = smith_normal_form(&pid, &a);
    prop_assert!(snf.certify(&pid, &a));
    prop_assert!(divisibility_chain(&pid, &snf.invariant_factors));
    Ok(())
}

// Reidemeister–Schreier

pub fn cover_case() -> impl Strategy<Value = (GroupPresentation, u64, usize)> {
    (presentation(), 2u64..=5, 0usize..64)
}

/// `ℓ(g − 1) + 1` generators and `ℓ·r` relators; free groups abelianize to
/// the free abelian group of that rank.
pub fn check_schreier_counts((p, ell, pick): (GroupPresentation, u64, usize)) -> Check {
    let epis = epimorphisms_to_cyclic(&p, ell, 0);
    prop_assume!(!epis.is_empty());
    let f = &epis[pick % epis.len()];
    let c = rs_cover(&p, f).expect("surjective");
    let (g, r, l) = (p.num_generators() as u64, p.relators().len() as u64, ell);
    prop_assert_eq!(c.group.num_generators() as u64, l * (g - 1) + 1);
    prop_assert_eq!(c.group.relators().len() as u64, l * r);
    if r == 0 {
        let ab = abelianize(&c.group);
        prop_assert_eq!(ab.free_rank as u64, l * (g - 1) + 1);
        prop_assert!(ab.torsion.is_empty());
    }
    Ok(())
}

// Crowell sequence

pub fn crowell_case() -> impl Strategy<Value = (GroupPresentation, usize)> {
    (presentation(), 0usize..64)
}

/// Over `ℚ(t)` the relative module has rank one more than `H₁` of the cover.
pub fn check_crowell_rank((p, pick): (GroupPresentation, usize)) -> Check {
    let epis = epimorphisms_to_cyclic(&p, 0, 2);
    prop_assume!(!epis.is_empty());
    let f = &epis[pick % epis.len()].images;
    let relative = alexander_module_rank(&p, f, Rationals).expect("valid map");
    let h1 = infinite_cyclic_cover_homology(&p, f, Rationals).expect("valid map");
    prop_assert_eq!(relative, h1.free_rank + 1);
    Ok(())
}

// Surgery homology

pub fn framing_case() -> impl Strategy<Value = (usize, Vec<i64>)> {
    (0usize..64, prop::collection::vec(-4i64..=4, 4))
}

fn link_entries() -> Vec<SurgeryDescription> {
    shipped_catalog().into_iter().filter(|e| e.kind == EntryKind::Link).collect()
}

/// A shipped link entry with random framings: `H₁` of the surgered group is
/// the cokernel of the linking matrix.
pub fn check_surgery_homology((pick, framings): (usize, Vec<i64>)) -> Check {
    let links = link_entries();
    let mut s = links[pick % links.len()].clone();
    let n = s.components();
    s.framings = framings[..n].to_vec();
    let ab = abelianize(&surgered_group(&s).expect("valid entry"));
    let lk = cokernel_of_rows(&linking_matrix(&s).expect("link entry"));
    prop_assert_eq!((ab.free_rank, ab.torsion), (lk.free_rank, lk.torsion));
    Ok(())
}

// Monomial substitution

type P = LaurentPoly<BigInt>;

pub fn substitution_case() -> impl Strategy<Value = (P, Vec<Vec<i64>>, Vec<Vec<i64>>)> {
    let poly = prop::collection::vec((prop::collection::vec(-3i64..=3, 3), -6i64..=6), 0..=5)
        .prop_map(|ts| P::from_terms(3, ts.into_iter().map(|(e, c)| (e, BigInt::from(c)))));
    (poly, unimodular(3), unimodular(3))
}

/// Product of random elementary matrices.
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

fn columns(m: &[Vec<i64>]) -> Vec<Exponent> {
    let n = m.len();
    (0..n).map(|j| (0..n).map(|i| m[i][j]).collect()).collect()
}

pub fn check_substitution((p, b1, b2): (P, Vec<Vec<i64>>, Vec<Vec<i64>>)) -> Check {
    let n = b1.len();
    let prod: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| (0..n).map(|k| b1[i][k] * b2[k][j]).sum()).collect()).collect();
    let once = p.substitute_monomial(&columns(&prod), 3).expect("square substitution");
    let twice = p
        .substitute_monomial(&columns(&b2), 3)
        .and_then(|q| q.substitute_monomial(&columns(&b1), 3))
        .expect("square substitution");
    prop_assert_eq!(once, twice);
    Ok(())
}
