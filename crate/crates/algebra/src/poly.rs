//! Sparse multivariate Laurent polynomials.
//!
//! Terms live in a `BTreeMap` keyed by exponent vector, so iteration order is
//! ascending lexicographic. Lex order on ℤⁿ is compatible with addition of
//! exponents, which is all exact division needs.

use std::collections::BTreeMap;
use std::fmt::{self, Debug, Display};
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::AlgebraError;
use crate::ring::{Field, Ring};
use crate::unipoly::{LaurentPid, UniLaurent};

/// Scalar coefficients: ℤ or ℚ.
pub trait Coeff:
    Clone + Eq + Debug + Display + Zero + One + Neg<Output = Self> + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self> + for<'a> Mul<&'a Self, Output = Self>
{
    /// `Some(a / b)` when the quotient exists in the coefficient ring.
    fn div_exact(&self, other: &Self) -> Option<Self>;
    fn from_bigint(n: &BigInt) -> Self;
    fn is_negative_coeff(&self) -> bool;
}

impl Coeff for BigInt {
    fn div_exact(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(other);
        r.is_zero().then_some(q)
    }
    fn from_bigint(n: &BigInt) -> Self {
        n.clone()
    }
    fn is_negative_coeff(&self) -> bool {
        self.is_negative()
    }
}

impl Coeff for BigRational {
    fn div_exact(&self, other: &Self) -> Option<Self> {
        (!other.is_zero()).then(|| self / other)
    }
    fn from_bigint(n: &BigInt) -> Self {
        BigRational::from_integer(n.clone())
    }
    fn is_negative_coeff(&self) -> bool {
        self.is_negative()
    }
}

pub type Exponent = Vec<i64>;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly<C> {
    nvars: usize,
    terms: BTreeMap<Exponent, C>,
}

impl<C: Coeff> LaurentPoly<C> {
    pub fn zero(nvars: usize) -> Self {
        LaurentPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, C::one())
    }

    pub fn constant(nvars: usize, c: C) -> Self {
        Self::monomial(nvars, vec![0; nvars], c)
    }

    pub fn monomial(nvars: usize, exp: Exponent, c: C) -> Self {
        assert_eq!(exp.len(), nvars, "exponent length");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        LaurentPoly { nvars, terms }
    }

    /// The variable `xᵢ`.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(nvars, e, C::one())
    }

    /// `x^exp - 1`
    pub fn monomial_minus_one(nvars: usize, exp: &[i64]) -> Self {
        &Self::monomial(nvars, exp.to_vec(), C::one()) - &Self::one(nvars)
    }

    pub fn from_terms<I: IntoIterator<Item = (Exponent, C)>>(nvars: usize, terms: I) -> Self {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&vec![0; self.nvars]).map_or(false, |c| c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exp: &[i64]) -> C {
        self.terms.get(exp).cloned().unwrap_or_else(C::zero)
    }

    pub fn add_term(&mut self, exp: Exponent, c: C) {
        assert_eq!(exp.len(), self.nvars, "exponent length");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().clone() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn leading_term(&self) -> Option<(&Exponent, &C)> {
        self.terms.iter().next_back()
    }

    pub fn trailing_term(&self) -> Option<(&Exponent, &C)> {
        self.terms.iter().next()
    }

    /// A single term `c·x^e`.
    pub fn as_monomial(&self) -> Option<(&Exponent, &C)> {
        (self.terms.len() == 1).then(|| self.terms.iter().next().unwrap())
    }

    pub fn mul_monomial(&self, exp: &[i64], c: &C) -> Self {
        let mut out = Self::zero(self.nvars);
        if c.is_zero() {
            return out;
        }
        for (e, x) in &self.terms {
            let ne: Exponent = e.iter().zip(exp).map(|(a, b)| a + b).collect();
            out.terms.insert(ne, x.clone() * c);
        }
        out
    }

    pub fn scale(&self, c: &C) -> Self {
        self.mul_monomial(&vec![0; self.nvars], c)
    }

    pub fn map_coeffs<D: Coeff, F: Fn(&C) -> D>(&self, f: F) -> LaurentPoly<D> {
        LaurentPoly::from_terms(self.nvars, self.terms.iter().map(|(e, c)| (e.clone(), f(c))))
    }

    /// Minimum exponent of each variable; zero vector for the zero polynomial.
    pub fn min_exponents(&self) -> Exponent {
        let mut m = vec![i64::MAX; self.nvars];
        for e in self.terms.keys() {
            for (a, b) in m.iter_mut().zip(e) {
                *a = (*a).min(*b);
            }
        }
        if self.terms.is_empty() {
            m.iter_mut().for_each(|a| *a = 0);
        }
        m
    }

    pub fn max_exponents(&self) -> Exponent {
        let mut m = vec![i64::MIN; self.nvars];
        for e in self.terms.keys() {
            for (a, b) in m.iter_mut().zip(e) {
                *a = (*a).max(*b);
            }
        }
        if self.terms.is_empty() {
            m.iter_mut().for_each(|a| *a = 0);
        }
        m
    }

    /// Divides out the largest monomial factor, returning the result and the
    /// exponent removed. The result has every variable's minimum exponent 0.
    pub fn strip_monomial(&self) -> (Self, Exponent) {
        let m = self.min_exponents();
        let neg: Exponent = m.iter().map(|x| -x).collect();
        (self.mul_monomial(&neg, &C::one()), m)
    }

    /// Ring homomorphism sending variable `i` to the monomial `x^images[i]`.
    pub fn substitute_monomial(&self, images: &[Exponent], target_vars: usize) -> Result<Self, AlgebraError> {
        if images.len() != self.nvars {
            return Err(AlgebraError::DimensionMismatch { expected: self.nvars, found: images.len() });
        }
        if let Some(bad) = images.iter().find(|im| im.len() != target_vars) {
            return Err(AlgebraError::DimensionMismatch { expected: target_vars, found: bad.len() });
        }
        let mut out = Self::zero(target_vars);
        for (e, c) in &self.terms {
            let mut ne = vec![0i64; target_vars];
            for (k, &ek) in e.iter().enumerate() {
                for (slot, im) in ne.iter_mut().zip(&images[k]) {
                    *slot += ek * im;
                }
            }
            out.add_term(ne, c.clone());
        }
        Ok(out)
    }

    /// Sets variable `var` to `xᵛᵃˡᵘᵉ = 1` by evaluation at 1, dropping no
    /// variables (the exponent becomes 0).
    pub fn evaluate_var_at_one(&self, var: usize) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut ne = e.clone();
            ne[var] = 0;
            out.add_term(ne, c.clone());
        }
        out
    }

    /// Exact division. Returns `None` when `other` does not divide `self`.
    pub fn div_exact(&self, other: &Self) -> Option<Self> {
        assert!(!other.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(Self::zero(self.nvars));
        }
        let (lt_e, lt_c) = other.leading_term().map(|(e, c)| (e.clone(), c.clone()))?;
        // The quotient's lowest term is forced; anything below it means failure.
        let (self_low, _) = self.trailing_term()?;
        let (other_low, _) = other.trailing_term()?;
        let q_floor: Exponent = self_low.iter().zip(other_low).map(|(a, b)| a - b).collect();

        let mut rem = self.clone();
        let mut quot = Self::zero(self.nvars);
        while let Some((e, c)) = rem.leading_term().map(|(e, c)| (e.clone(), c.clone())) {
            let qe: Exponent = e.iter().zip(&lt_e).map(|(a, b)| a - b).collect();
            if qe < q_floor {
                return None;
            }
            let qc = c.div_exact(&lt_c)?;
            rem = &rem - &other.mul_monomial(&qe, &qc);
            quot.add_term(qe, qc);
        }
        Some(quot)
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Image in `F[t^±]` under variable `i ↦ t^weights[i]`.
    pub fn to_univariate<F: Field>(&self, pid: &LaurentPid<F>, weights: &[i64]) -> UniLaurent<F::Elem>
    where
        C: IntoFieldElem,
    {
        assert_eq!(weights.len(), self.nvars);
        let f = pid.field();
        let terms = self.terms.iter().map(|(e, c)| {
            let deg: i64 = e.iter().zip(weights).map(|(a, w)| a * w).sum();
            (deg, c.into_field_elem(f))
        });
        pid.from_terms(terms)
    }

    pub fn evaluate(&self, point: &[BigRational]) -> BigRational
    where
        C: IntoFieldElem,
    {
        assert_eq!(point.len(), self.nvars);
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            let mut term = c.into_field_elem(&crate::ring::Rationals);
            for (x, &k) in point.iter().zip(e) {
                let p = num_traits::pow(x.clone(), k.unsigned_abs() as usize);
                term *= if k < 0 { p.recip() } else { p };
            }
            acc += term;
        }
        acc
    }
}

/// Coefficient map into any field (ℚ, F_p).
pub trait IntoFieldElem {
    fn into_field_elem<F: Field>(&self, field: &F) -> F::Elem;
}

impl IntoFieldElem for BigInt {
    fn into_field_elem<F: Field>(&self, field: &F) -> F::Elem {
        field.from_int(self)
    }
}

impl IntoFieldElem for BigRational {
    fn into_field_elem<F: Field>(&self, field: &F) -> F::Elem {
        let n = field.from_int(self.numer());
        let d = field.from_int(self.denom());
        field.mul(&n, &field.inv(&d))
    }
}

impl LaurentPoly<BigInt> {
    pub fn to_rational(&self) -> LaurentPoly<BigRational> {
        self.map_coeffs(|c| BigRational::from_integer(c.clone()))
    }

    /// Reduces every coefficient into `[0, modulus)`.
    pub fn reduce_coeffs_mod(&self, modulus: &BigInt) -> Self {
        if modulus.is_zero() {
            return self.clone();
        }
        self.map_coeffs(|c| c.mod_floor(modulus))
    }
}

impl<'a, C: Coeff> Add<&'a LaurentPoly<C>> for &'a LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn add(self, rhs: &'a LaurentPoly<C>) -> LaurentPoly<C> {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl<'a, C: Coeff> Sub<&'a LaurentPoly<C>> for &'a LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn sub(self, rhs: &'a LaurentPoly<C>) -> LaurentPoly<C> {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }
}

impl<'a, C: Coeff> Mul<&'a LaurentPoly<C>> for &'a LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn mul(self, rhs: &'a LaurentPoly<C>) -> LaurentPoly<C> {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = LaurentPoly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e: Exponent = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1.clone() * c2);
            }
        }
        out
    }
}

impl<C: Coeff> Neg for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn neg(self) -> LaurentPoly<C> {
        LaurentPoly { nvars: self.nvars, terms: self.terms.iter().map(|(e, c)| (e.clone(), -c.clone())).collect() }
    }
}

impl<C: Coeff> Debug for LaurentPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text(&crate::text::default_names(self.nvars)))
    }
}

impl<C: Coeff> Display for LaurentPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text(&crate::text::default_names(self.nvars)))
    }
}

/// Ring context for `C[x₁^±, …, xₙ^±]`, so generic matrix code applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LaurentRing {
    pub nvars: usize,
}

impl Ring for LaurentRing {
    type Elem = LaurentPoly<BigInt>;

    fn zero(&self) -> Self::Elem {
        LaurentPoly::zero(self.nvars)
    }
    fn one(&self) -> Self::Elem {
        LaurentPoly::one(self.nvars)
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a + b
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        -a
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a * b
    }
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a - b
    }
    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.is_zero()
    }
    fn format(&self, a: &Self::Elem) -> String {
        a.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type P = LaurentPoly<BigInt>;

    fn x() -> P {
        P::var(2, 0)
    }
    fn y() -> P {
        P::var(2, 1)
    }
    fn c(n: i64) -> P {
        P::constant(2, BigInt::from(n))
    }

    #[test]
    fn exact_division_recovers_factor() {
        let a = &(&x() - &c(1)) * &(&(&y() * &y()) + &x().mul_monomial(&[-3, 0], &BigInt::from(2)));
        let q = a.div_exact(&(&x() - &c(1))).unwrap();
        assert_eq!(&q * &(&x() - &c(1)), a);
    }

    #[test]
    fn inexact_division_fails() {
        let a = &x() + &c(1);
        assert!(a.div_exact(&(&x() - &c(1))).is_none());
        assert!(c(3).div_exact(&c(2)).is_none());
        // Laurent: x⁻¹ is a unit.
        let inv = P::monomial(2, vec![-1, 0], BigInt::one());
        assert_eq!(c(5).div_exact(&x()).unwrap(), inv.scale(&BigInt::from(5)));
    }

    #[test]
    fn substitution_relabels() {
        let p = &x() * &y();
        let q = p.substitute_monomial(&[vec![0, 1], vec![1, 0]], 2).unwrap();
        assert_eq!(q, p);
        let r = &(&(&y() * &y()) - &y()) + &c(1);
        // x ↦ x, y ↦ y is the identity; (r in y) under y ↦ y stays y²−y+1.
        assert_eq!(r.substitute_monomial(&[vec![1, 0], vec![0, 1]], 2).unwrap(), r);
        assert!(r.substitute_monomial(&[vec![1, 0]], 2).is_err());
    }

    #[test]
    fn strip_monomial_normalises_exponents() {
        let p = &x().mul_monomial(&[-2, 3], &BigInt::one()) + &c(1).mul_monomial(&[0, 1], &BigInt::one());
        let (s, m) = p.strip_monomial();
        assert_eq!(m, vec![-1, 1]);
        assert_eq!(s.min_exponents(), vec![0, 0]);
    }
}
