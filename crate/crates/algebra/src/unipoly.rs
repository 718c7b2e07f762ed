//! Univariate Laurent polynomials over a field: the PID `F[t, t⁻¹]`.
//!
//! Euclidean size is the exponent span (highest minus lowest exponent), which
//! makes the Laurent ring Euclidean directly: divide the span-normalised
//! polynomial parts and shift back. Units are `c·tᵏ`; the canonical associate
//! is monic with lowest term `t⁰`.

use crate::ring::{EuclideanDomain, Field, Ring};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UniLaurent<E> {
    /// Exponent of `coeffs[0]`.
    low: i64,
    /// Empty for zero, otherwise first and last entries are nonzero.
    coeffs: Vec<E>,
}

impl<E: Clone> UniLaurent<E> {
    pub fn low(&self) -> i64 {
        self.low
    }

    pub fn high(&self) -> i64 {
        self.low + self.coeffs.len() as i64 - 1
    }

    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Exponent span; 0 for monomials.
    pub fn span(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeff(&self, exp: i64) -> Option<&E> {
        if exp < self.low {
            return None;
        }
        self.coeffs.get((exp - self.low) as usize)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LaurentPid<F> {
    field: F,
}

impl<F: Field> LaurentPid<F> {
    pub fn new(field: F) -> Self {
        LaurentPid { field }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    /// Builds `Σ coeffs[i]·t^(low+i)`, trimming zeros.
    pub fn from_coeffs(&self, low: i64, coeffs: Vec<F::Elem>) -> UniLaurent<F::Elem> {
        let f = &self.field;
        let start = coeffs.iter().position(|c| !f.is_zero(c));
        let Some(start) = start else {
            return UniLaurent { low: 0, coeffs: Vec::new() };
        };
        let end = coeffs.iter().rposition(|c| !f.is_zero(c)).unwrap();
        UniLaurent { low: low + start as i64, coeffs: coeffs[start..=end].to_vec() }
    }

    pub fn from_terms<I>(&self, terms: I) -> UniLaurent<F::Elem>
    where
        I: IntoIterator<Item = (i64, F::Elem)>,
    {
        let terms: Vec<(i64, F::Elem)> = terms.into_iter().collect();
        if terms.is_empty() {
            return self.zero();
        }
        let low = terms.iter().map(|t| t.0).min().unwrap();
        let high = terms.iter().map(|t| t.0).max().unwrap();
        let mut coeffs = vec![self.field.zero(); (high - low + 1) as usize];
        for (e, c) in terms {
            let slot = &mut coeffs[(e - low) as usize];
            *slot = self.field.add(slot, &c);
        }
        self.from_coeffs(low, coeffs)
    }

    pub fn monomial(&self, c: F::Elem, exp: i64) -> UniLaurent<F::Elem> {
        self.from_coeffs(exp, vec![c])
    }

    /// `t`
    pub fn t(&self) -> UniLaurent<F::Elem> {
        self.monomial(self.field.one(), 1)
    }

    /// `tᵏ - 1`
    pub fn t_pow_minus_one(&self, k: i64) -> UniLaurent<F::Elem> {
        let one = self.field.one();
        self.from_terms([(k, one.clone()), (0, self.field.neg(&one))])
    }

    pub fn degree_span(&self, a: &UniLaurent<F::Elem>) -> usize {
        a.span()
    }

    /// Shift by `tᵏ`.
    pub fn shift(&self, a: &UniLaurent<F::Elem>, k: i64) -> UniLaurent<F::Elem> {
        if a.is_zero() {
            return a.clone();
        }
        UniLaurent { low: a.low + k, coeffs: a.coeffs.clone() }
    }

    pub fn scale(&self, a: &UniLaurent<F::Elem>, c: &F::Elem) -> UniLaurent<F::Elem> {
        self.from_coeffs(a.low, a.coeffs.iter().map(|x| self.field.mul(x, c)).collect())
    }

    pub fn leading_coeff(&self, a: &UniLaurent<F::Elem>) -> F::Elem {
        a.coeffs.last().cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn gcd(&self, a: &UniLaurent<F::Elem>, b: &UniLaurent<F::Elem>) -> UniLaurent<F::Elem> {
        let (mut x, mut y) = (a.clone(), b.clone());
        while !y.is_zero() {
            let r = self.div_rem(&x, &y).1;
            x = y;
            y = r;
        }
        let (u, _) = self.normalize(&x);
        self.mul(&u, &x)
    }

    pub fn lcm(&self, a: &UniLaurent<F::Elem>, b: &UniLaurent<F::Elem>) -> UniLaurent<F::Elem> {
        if a.is_zero() || b.is_zero() {
            return self.zero();
        }
        let g = self.gcd(a, b);
        let (q, _) = self.div_rem(&self.mul(a, b), &g);
        let (u, _) = self.normalize(&q);
        self.mul(&u, &q)
    }

    /// Canonical text in the variable `var`, highest exponent first.
    pub fn to_text(&self, a: &UniLaurent<F::Elem>, var: &str) -> String {
        if a.is_zero() {
            return "0".to_string();
        }
        let f = &self.field;
        let mut out = String::new();
        for (i, c) in a.coeffs.iter().enumerate().rev() {
            if f.is_zero(c) {
                continue;
            }
            let e = a.low + i as i64;
            let s = f.format(c);
            let (negative, mag) = match s.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, s),
            };
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let unit_mag = mag == "1";
            match e {
                0 => out.push_str(&mag),
                _ => {
                    if !unit_mag {
                        out.push_str(&mag);
                        out.push('*');
                    }
                    out.push_str(var);
                    if e != 1 {
                        out.push('^');
                        out.push_str(&e.to_string());
                    }
                }
            }
        }
        out
    }
}

impl<F: Field> Ring for LaurentPid<F> {
    type Elem = UniLaurent<F::Elem>;

    fn zero(&self) -> Self::Elem {
        UniLaurent { low: 0, coeffs: Vec::new() }
    }

    fn one(&self) -> Self::Elem {
        self.monomial(self.field.one(), 0)
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        if a.is_zero() {
            return b.clone();
        }
        if b.is_zero() {
            return a.clone();
        }
        let low = a.low.min(b.low);
        let high = a.high().max(b.high());
        let f = &self.field;
        let coeffs = (low..=high)
            .map(|e| match (a.coeff(e), b.coeff(e)) {
                (Some(x), Some(y)) => f.add(x, y),
                (Some(x), None) => x.clone(),
                (None, Some(y)) => y.clone(),
                (None, None) => f.zero(),
            })
            .collect();
        self.from_coeffs(low, coeffs)
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        UniLaurent { low: a.low, coeffs: a.coeffs.iter().map(|c| self.field.neg(c)).collect() }
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        if a.is_zero() || b.is_zero() {
            return self.zero();
        }
        let f = &self.field;
        let mut coeffs = vec![f.zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if f.is_zero(x) {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                coeffs[i + j] = f.add(&coeffs[i + j], &f.mul(x, y));
            }
        }
        self.from_coeffs(a.low + b.low, coeffs)
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.is_zero()
    }

    fn format(&self, a: &Self::Elem) -> String {
        self.to_text(a, "t")
    }
}

impl<F: Field> EuclideanDomain for LaurentPid<F> {
    type Norm = usize;

    fn norm(&self, a: &Self::Elem) -> usize {
        a.span()
    }

    fn div_rem(&self, a: &Self::Elem, b: &Self::Elem) -> (Self::Elem, Self::Elem) {
        assert!(!b.is_zero(), "division by zero in Laurent ring");
        if a.is_zero() {
            return (self.zero(), self.zero());
        }
        let f = &self.field;
        // Polynomial parts: a = t^la·A(t), b = t^lb·B(t) with A(0), B(0) ≠ 0.
        let mut rem: Vec<F::Elem> = a.coeffs.clone();
        let divisor = &b.coeffs;
        let db = divisor.len() - 1;
        let lc_inv = f.inv(divisor.last().unwrap());
        let mut quot = vec![f.zero(); rem.len().saturating_sub(db).max(1)];
        if rem.len() > db {
            for i in (0..=rem.len() - 1 - db).rev() {
                let c = f.mul(&rem[i + db], &lc_inv);
                if f.is_zero(&c) {
                    continue;
                }
                for (j, d) in divisor.iter().enumerate() {
                    rem[i + j] = f.sub(&rem[i + j], &f.mul(&c, d));
                }
                quot[i] = c;
            }
        }
        // a = t^la (Q B + R) = (t^(la-lb) Q) b + t^la R
        let q = self.from_coeffs(a.low - b.low, quot);
        let r = self.from_coeffs(a.low, rem);
        (q, r)
    }

    fn normalize(&self, a: &Self::Elem) -> (Self::Elem, Self::Elem) {
        if a.is_zero() {
            return (self.one(), self.one());
        }
        let f = &self.field;
        let lc = a.coeffs.last().unwrap();
        let unit = self.monomial(f.inv(lc), -a.low);
        let unit_inv = self.monomial(lc.clone(), a.low);
        (unit, unit_inv)
    }

    fn is_unit(&self, a: &Self::Elem) -> bool {
        a.coeffs.len() == 1
    }
}
