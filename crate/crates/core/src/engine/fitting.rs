//! Consequences of a presentation of `H₁` of the maximal free abelian cover
//! that can be decided without a module-isomorphism test: maximal minors
//! modulo an ideal, finite-field dimensions of specialisations, vanishing
//! after tensoring with `ℚ`, and the dimension at the augmentation.

use embedcheck_algebra::ideal::normal_form_mod;
use embedcheck_algebra::{bareiss, LaurentPid, LaurentPoly, Matrix, PrimeField, Rationals, Ring};
use itertools::Itertools;
use num_bigint::BigInt;
use rayon::prelude::*;

use super::{free_images, prepare};
use crate::catalog::SurgeryDescription;
use crate::crowell::{cokernel_module, two_variable_presentation};
use crate::error::{EmbedError, Result};

type P = LaurentPoly<BigInt>;

/// Presentation over `ℤ[x^±, y^±]` of `H₁` of the cover belonging to the
/// covectors `fx`, `fy` (given on the designated basis).
pub fn two_variable_module(s: &SurgeryDescription, fx: &[i64], fy: &[i64]) -> Result<Matrix<P>> {
    let prep = prepare(s)?;
    let (x, y) = (free_images(s, &prep.ab, fx), free_images(s, &prep.ab, fy));
    let images: Vec<Vec<i64>> = x.iter().zip(&y).map(|(&a, &b)| vec![a, b]).collect();
    two_variable_presentation(&prep.group, &images)
}

/// The standard two-variable module of an entry with `H₁ ≅ ℤ²`.
pub fn standard_two_variable_module(s: &SurgeryDescription) -> Result<Matrix<P>> {
    let prep = prepare(s)?;
    if prep.ab.free_rank != 2 || !prep.ab.torsion.is_empty() {
        return Err(EmbedError::OutOfRange(format!("H1 = {} is not Z^2", prep.ab.describe())));
    }
    two_variable_module(s, &[1, 0], &[0, 1])
}

/// All maximal minors (size = column count), in lexicographic order of the
/// chosen rows.
pub fn maximal_minors(m: &Matrix<P>) -> Vec<P> {
    let c = m.cols();
    let nvars = m.entries().next().map_or(0, |p| p.nvars());
    let cols: Vec<usize> = (0..c).collect();
    let choices: Vec<Vec<usize>> = (0..m.rows()).combinations(c).collect();
    choices.par_iter().map(|rows| bareiss::determinant(&m.select(rows, &cols), nvars)).collect()
}

/// Whether every minor lies in the ideal `(modulus, c)`, where `modulus` is
/// monic in the first variable.
pub fn minors_in_ideal(minors: &[P], modulus: &P, c: &BigInt) -> Result<bool> {
    for m in minors {
        if !normal_form_mod(m, modulus, c)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `dim_{F_p}` of the module specialised at `y = 1` and reduced modulo the
/// univariate `modulus` in `x`; `None` when infinite.
pub fn fp_dimension_at_y_one(m: &Matrix<P>, modulus: &P, p: u64) -> Result<Option<usize>> {
    let pid = LaurentPid::new(PrimeField::new(p)?);
    let c = m.cols();
    let mut rows: Vec<Vec<_>> = (0..m.rows())
        .map(|i| (0..c).map(|j| m[(i, j)].evaluate_var_at_one(1).to_univariate(&pid, &[1, 0])).collect())
        .collect();
    let q = modulus.to_univariate(&pid, &[1, 0]);
    for j in 0..c {
        rows.push((0..c).map(|k| if k == j { q.clone() } else { pid.zero() }).collect());
    }
    let module = cokernel_module(&pid, &Matrix::from_rows(rows, c));
    Ok((module.free_rank == 0).then(|| module.factors.iter().map(|d| pid.degree_span(d)).sum()))
}

/// `dim_ℚ` of the module reduced at all variables equal to 1.
pub fn dimension_at_augmentation(m: &Matrix<P>) -> usize {
    let at_one = m.map(|p| (0..p.nvars()).fold(p.clone(), |acc, v| acc.evaluate_var_at_one(v)));
    m.cols() - bareiss::rank(&at_one)
}

/// Certificate that the minors have no common zero in `(ℂ*)²`, so the module
/// vanishes after tensoring with `ℚ`: a unit gcd in `ℚ[x^±]` of the `y`-free
/// minors and the resultants in `y` of pairs of minors. Returns the number of
/// polynomials used.
pub fn rational_vanishing_certificate(minors: &[P]) -> Option<usize> {
    let pid = LaurentPid::new(Rationals);
    let nonzero: Vec<&P> = minors.iter().filter(|m| !m.is_zero()).collect();
    let y_free = |p: &P| p.terms().all(|(e, _)| e[1] == 0);
    let with_y: Vec<&P> = nonzero.iter().copied().filter(|p| !y_free(p)).collect();
    let resultants = with_y
        .iter()
        .enumerate()
        .flat_map(|(i, a)| with_y[i + 1..].iter().map(move |b| bareiss::resultant(a, b, 1)))
        .filter(|r| !r.is_zero());
    let candidates = nonzero.iter().filter(|p| y_free(p)).map(|p| (*p).clone()).chain(resultants);
    let mut g = pid.zero();
    for (used, p) in candidates.enumerate() {
        g = pid.gcd(&g, &p.to_univariate(&pid, &[1, 0]));
        if pid.is_one(&g) {
            return Some(used + 1);
        }
    }
    None
}
