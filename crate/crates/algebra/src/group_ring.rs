//! Integral group rings of finitely generated abelian groups `ℤ^r ⊕ ⊕ ℤ/kᵢ`.
//!
//! Elements are Laurent polynomials in `r + s` variables whose last `s`
//! exponents are kept in `[0, kᵢ)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::poly::LaurentPoly;
use crate::ring::Ring;

type P = LaurentPoly<BigInt>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbGroupRing {
    free: usize,
    torsion: Vec<i64>,
}

impl AbGroupRing {
    /// Panics if a torsion order is below 2.
    pub fn new(free: usize, torsion: Vec<i64>) -> Self {
        assert!(torsion.iter().all(|&k| k >= 2), "torsion orders must be at least 2");
        AbGroupRing { free, torsion }
    }

    pub fn nvars(&self) -> usize {
        self.free + self.torsion.len()
    }

    pub fn free_rank(&self) -> usize {
        self.free
    }

    pub fn torsion(&self) -> &[i64] {
        &self.torsion
    }

    pub fn reduce(&self, p: &P) -> P {
        assert_eq!(p.nvars(), self.nvars(), "variable count mismatch");
        if self.torsion.is_empty() {
            return p.clone();
        }
        P::from_terms(
            self.nvars(),
            p.terms().map(|(e, c)| {
                let mut e = e.clone();
                for (slot, k) in e[self.free..].iter_mut().zip(&self.torsion) {
                    *slot = slot.mod_floor(k);
                }
                (e, c.clone())
            }),
        )
    }

    /// The group element with the given exponent vector.
    pub fn group_element(&self, exp: &[i64]) -> P {
        self.reduce(&P::monomial(self.nvars(), exp.to_vec(), BigInt::one()))
    }

    pub fn generator(&self, i: usize) -> P {
        self.reduce(&P::var(self.nvars(), i))
    }

    pub fn constant(&self, n: i64) -> P {
        P::constant(self.nvars(), BigInt::from(n))
    }

    /// Sum of coefficients.
    pub fn augmentation(&self, p: &P) -> BigInt {
        p.terms().fold(BigInt::zero(), |acc, (_, c)| acc + c)
    }

    pub fn scalar_mul(&self, n: i64, p: &P) -> P {
        p.scale(&BigInt::from(n))
    }

    pub fn pow(&self, p: &P, n: u32) -> P {
        let mut acc = self.one();
        for _ in 0..n {
            acc = self.mul(&acc, p);
        }
        acc
    }
}

impl Ring for AbGroupRing {
    type Elem = P;

    fn zero(&self) -> P {
        P::zero(self.nvars())
    }
    fn one(&self) -> P {
        P::one(self.nvars())
    }
    fn add(&self, a: &P, b: &P) -> P {
        a + b
    }
    fn neg(&self, a: &P) -> P {
        -a
    }
    fn mul(&self, a: &P, b: &P) -> P {
        self.reduce(&(a * b))
    }
    fn sub(&self, a: &P, b: &P) -> P {
        a - b
    }
    fn is_zero(&self, a: &P) -> bool {
        a.is_zero()
    }
    fn format(&self, a: &P) -> String {
        let mut names: Vec<String> = (0..self.free).map(|i| if self.free == 1 { "t".to_string() } else { format!("t{}", i + 1) }).collect();
        let s = self.torsion.len();
        names.extend((0..s).map(|i| if s == 1 { "a".to_string() } else { format!("a{}", i + 1) }));
        a.to_text(&names)
    }
}

/// `ℤ[ℤ ⊕ ℤ/k]` with generators `t` (infinite order) and `a` (order `k`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GkRing {
    k: i64,
    inner: AbGroupRing,
}

impl GkRing {
    /// Panics if `k < 2`.
    pub fn new(k: i64) -> Self {
        GkRing { k, inner: AbGroupRing::new(1, vec![k]) }
    }

    pub fn order(&self) -> i64 {
        self.k
    }

    pub fn ring(&self) -> &AbGroupRing {
        &self.inner
    }

    pub fn t(&self) -> P {
        self.inner.generator(0)
    }

    pub fn a(&self) -> P {
        self.inner.generator(1)
    }

    /// `1 + a + … + a^(n-1)`
    pub fn nu(&self, n: i64) -> P {
        let terms = (0..n).map(|i| (vec![0, i], BigInt::one()));
        self.inner.reduce(&P::from_terms(2, terms))
    }

    /// The norm element `ν_k`.
    pub fn rho(&self) -> P {
        self.nu(self.k)
    }
}

impl Ring for GkRing {
    type Elem = P;

    fn zero(&self) -> P {
        self.inner.zero()
    }
    fn one(&self) -> P {
        self.inner.one()
    }
    fn add(&self, a: &P, b: &P) -> P {
        self.inner.add(a, b)
    }
    fn neg(&self, a: &P) -> P {
        self.inner.neg(a)
    }
    fn mul(&self, a: &P, b: &P) -> P {
        self.inner.mul(a, b)
    }
    fn sub(&self, a: &P, b: &P) -> P {
        self.inner.sub(a, b)
    }
    fn is_zero(&self, a: &P) -> bool {
        a.is_zero()
    }
    fn format(&self, a: &P) -> String {
        self.inner.format(a)
    }
}
