//! Fraction-free (Bareiss) elimination over `C[x₁^±, …, xₖ^±]`, giving exact
//! ranks over the fraction field and determinants without rational blow-up.

use crate::matrix::Matrix;
use crate::poly::{Coeff, LaurentPoly};

/// Echelon form by Bareiss elimination. Returns the pivot count and the sign
/// of the row permutation applied.
fn eliminate<C: Coeff>(m: &mut Matrix<LaurentPoly<C>>) -> (usize, i32, Option<LaurentPoly<C>>) {
    let (rows, cols) = (m.rows(), m.cols());
    let nvars = m.entries().next().map_or(0, |p| p.nvars());
    let mut prev = LaurentPoly::<C>::one(nvars);
    let mut r = 0;
    let mut sign = 1;
    let mut last_pivot = None;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[(i, c)].is_zero()) else {
            continue;
        };
        if p != r {
            m.swap_rows(p, r);
            sign = -sign;
        }
        let pivot = m[(r, c)].clone();
        for i in r + 1..rows {
            let lead = m[(i, c)].clone();
            for j in c + 1..cols {
                let num = &(&pivot * &m[(i, j)]) - &(&lead * &m[(r, j)]);
                m[(i, j)] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
            m[(i, c)] = LaurentPoly::zero(nvars);
        }
        prev = pivot.clone();
        last_pivot = Some(pivot);
        r += 1;
    }
    (r, sign, last_pivot)
}

/// Rank over the rational function field.
pub fn rank<C: Coeff>(a: &Matrix<LaurentPoly<C>>) -> usize {
    let mut m = a.clone();
    eliminate(&mut m).0
}

/// Determinant of a square matrix. `nvars` fixes the variable count for the
/// empty matrix, whose determinant is 1.
pub fn determinant<C: Coeff>(a: &Matrix<LaurentPoly<C>>, nvars: usize) -> LaurentPoly<C> {
    assert_eq!(a.rows(), a.cols(), "determinant needs a square matrix");
    if a.rows() == 0 {
        return LaurentPoly::one(nvars);
    }
    let mut m = a.clone();
    let (r, sign, last) = eliminate(&mut m);
    if r < a.rows() {
        return LaurentPoly::zero(nvars);
    }
    let d = last.expect("full rank has a pivot");
    if sign < 0 {
        -&d
    } else {
        d
    }
}

/// Coefficient of `var^k`, with that variable's exponent set to 0.
pub fn coeff_in_var<C: Coeff>(p: &LaurentPoly<C>, var: usize, k: i64) -> LaurentPoly<C> {
    LaurentPoly::from_terms(
        p.nvars(),
        p.terms().filter(|(e, _)| e[var] == k).map(|(e, c)| {
            let mut e = e.clone();
            e[var] = 0;
            (e, c.clone())
        }),
    )
}

/// Resultant in `var` after clearing negative powers of `var`. The result
/// does not involve `var`. Both inputs must be nonzero.
pub fn resultant<C: Coeff>(p: &LaurentPoly<C>, q: &LaurentPoly<C>, var: usize) -> LaurentPoly<C> {
    assert!(!p.is_zero() && !q.is_zero(), "resultant of zero polynomial");
    let n = p.nvars();
    let coeffs = |f: &LaurentPoly<C>| -> Vec<LaurentPoly<C>> {
        let lo = f.min_exponents()[var];
        let hi = f.max_exponents()[var];
        (lo..=hi).map(|k| coeff_in_var(f, var, k)).collect()
    };
    let (pc, qc) = (coeffs(p), coeffs(q));
    let (dp, dq) = (pc.len() - 1, qc.len() - 1);
    let size = dp + dq;
    let mut rows = Vec::with_capacity(size);
    for i in 0..dq {
        let mut row = vec![LaurentPoly::zero(n); size];
        for (k, c) in pc.iter().rev().enumerate() {
            row[i + k] = c.clone();
        }
        rows.push(row);
    }
    for i in 0..dp {
        let mut row = vec![LaurentPoly::zero(n); size];
        for (k, c) in qc.iter().rev().enumerate() {
            row[i + k] = c.clone();
        }
        rows.push(row);
    }
    determinant(&Matrix::from_rows(rows, size), n)
}
