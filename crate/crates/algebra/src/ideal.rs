//! Normal forms modulo ideals `(m, c)` with `m` monic in the first variable
//! and `c` an integer.
//!
//! `ℤ[x^±, y^±, …]/(m, c)` is free over `(ℤ/c)[y^±, …]` on `1, x, …, x^(d-1)`
//! when `m` has unit leading and trailing coefficients in `x`, so the reduced
//! form is canonical and zero exactly on ideal members.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::AlgebraError;
use crate::poly::{Exponent, LaurentPoly};

type P = LaurentPoly<BigInt>;

/// Coefficient of `x^k` (variable 0) as a polynomial in the remaining slots,
/// kept in the same variable count with the x-exponent set to 0.
fn x_coeff(p: &P, k: i64) -> P {
    P::from_terms(
        p.nvars(),
        p.terms().filter(|(e, _)| e[0] == k).map(|(e, c)| {
            let mut e = e.clone();
            e[0] = 0;
            (e, c.clone())
        }),
    )
}

fn x_unit(nvars: usize, k: i64) -> Exponent {
    let mut e = vec![0; nvars];
    e[0] = k;
    e
}

/// A unit of `ℤ[y^±, …]`: `±` a monomial. Returns its inverse.
fn unit_inverse(u: &P) -> Option<P> {
    let (e, c) = u.as_monomial()?;
    if !c.abs().is_one() {
        return None;
    }
    let neg: Exponent = e.iter().map(|v| -v).collect();
    Some(P::monomial(u.nvars(), neg, c.clone()))
}

/// Reduces `p` (non-negative x-exponents) by monic `m` of x-degree `d`.
fn reduce_poly(p: &P, m: &P, d: i64) -> P {
    let n = p.nvars();
    let mut r = p.clone();
    loop {
        let top = r.max_exponents()[0];
        if r.is_zero() || top < d {
            return r;
        }
        let lead = x_coeff(&r, top);
        let shifted = m.mul_monomial(&x_unit(n, top - d), &BigInt::one());
        r = &r - &(&lead * &shifted);
    }
}

/// Canonical remainder of `p` modulo `(m, c)`, `m` monic in variable 0.
///
/// Coefficients end up in `[0, c)`; `c = 0` means no integer reduction.
pub fn normal_form_mod(p: &P, m: &P, c: &BigInt) -> Result<P, AlgebraError> {
    if p.nvars() != m.nvars() {
        return Err(AlgebraError::DimensionMismatch { expected: p.nvars(), found: m.nvars() });
    }
    let n = p.nvars();
    if m.is_zero() {
        return Err(AlgebraError::NotMonic);
    }
    // Put m in x-degrees 0..=d and make the top coefficient exactly 1.
    let low = m.min_exponents()[0];
    let m0 = m.mul_monomial(&x_unit(n, -low), &BigInt::one());
    let d = m0.max_exponents()[0];
    let lead_inv = unit_inverse(&x_coeff(&m0, d)).ok_or(AlgebraError::NotMonic)?;
    let m0 = &m0 * &lead_inv;
    let trail = x_coeff(&m0, 0);
    let trail_inv = unit_inverse(&trail).ok_or(AlgebraError::NonUnitTrailing)?;
    if d == 0 {
        // m is a unit: the ideal is everything.
        return Ok(P::zero(n));
    }

    // x⁻¹ ≡ -u₀⁻¹·h where m = x·h + u₀.
    let h = (&m0 - &trail).mul_monomial(&x_unit(n, -1), &BigInt::one());
    let x_inv = -&(&h * &trail_inv);

    let shift = (-p.min_exponents()[0]).max(0);
    let mut r = reduce_poly(&p.mul_monomial(&x_unit(n, shift), &BigInt::one()), &m0, d);
    for _ in 0..shift {
        r = reduce_poly(&(&r * &x_inv), &m0, d);
    }
    if c.is_zero() {
        return Ok(r);
    }
    let modulus = c.abs();
    Ok(r.reduce_coeffs_mod(&modulus))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> P {
        P::parse(s, &["x", "y"]).unwrap()
    }

    #[test]
    fn members_reduce_to_zero() {
        let m = p("x^2 - x + 1");
        let three = BigInt::from(3);
        assert!(normal_form_mod(&p("3*y"), &m, &three).unwrap().is_zero());
        assert!(normal_form_mod(&p("x^2 - x + 1 + 3*x^5"), &m, &three).unwrap().is_zero());
        assert_eq!(normal_form_mod(&p("x"), &m, &three).unwrap(), p("x"));
    }

    #[test]
    fn negative_powers_use_inverse_of_x() {
        let m = p("x^2 - x + 1");
        // x⁻¹ = 1 - x modulo m.
        assert_eq!(normal_form_mod(&p("x^-1"), &m, &BigInt::zero()).unwrap(), p("1 - x"));
        assert!(normal_form_mod(&p("x^-3*(x^2 - x + 1)*y^-2"), &m, &BigInt::zero()).unwrap().is_zero());
        // x³ = -1, so x⁻³ + 1 ≡ 0.
        assert!(normal_form_mod(&p("x^-3 + 1"), &m, &BigInt::zero()).unwrap().is_zero());
    }

    #[test]
    fn rejects_bad_divisors() {
        let c = BigInt::from(3);
        assert_eq!(normal_form_mod(&p("x"), &p("2*x^2 + 1"), &c), Err(AlgebraError::NotMonic));
        assert_eq!(normal_form_mod(&p("x"), &p("x^2 + 2"), &c), Err(AlgebraError::NonUnitTrailing));
        assert_eq!(normal_form_mod(&p("x"), &p("x^2 + y + 1"), &c), Err(AlgebraError::NonUnitTrailing));
    }

    #[test]
    fn coefficients_land_in_range() {
        let r = normal_form_mod(&p("-x + 4*y"), &p("x^2 - x + 1"), &BigInt::from(3)).unwrap();
        assert_eq!(r, p("2*x + y"));
    }
}
