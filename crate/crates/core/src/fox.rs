//! Fox derivatives and Alexander (Jacobian) matrices over group rings of
//! abelian quotients.

use embedcheck_algebra::poly::Exponent;
use embedcheck_algebra::{AbGroupRing, LaurentPoly, Matrix, Ring};
use num_bigint::BigInt;
use num_traits::One;

use crate::error::{EmbedError, Result};
use crate::presentation::GroupPresentation;
use crate::word::Word;

pub type GroupRingElem = LaurentPoly<BigInt>;

/// Homomorphism from a free group to the units `±g` of `ℤ[G]`, given by the
/// group element each generator goes to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingMap {
    ring: AbGroupRing,
    images: Vec<Exponent>,
}

impl RingMap {
    pub fn new(ring: AbGroupRing, images: Vec<Exponent>) -> Result<Self> {
        if let Some(bad) = images.iter().find(|e| e.len() != ring.nvars()) {
            return Err(EmbedError::CountMismatch(format!(
                "image has {} coordinates, ring has {}",
                bad.len(),
                ring.nvars()
            )));
        }
        Ok(RingMap { ring, images })
    }

    /// Into `ℤ[ℤ^k]`; `images[g]` is the exponent vector of generator `g`.
    pub fn free_abelian(k: usize, images: Vec<Exponent>) -> Result<Self> {
        Self::new(AbGroupRing::new(k, Vec::new()), images)
    }

    /// Into `ℤ[t^±]` with generator `g ↦ t^f[g]`.
    pub fn cyclic(f: &[i64]) -> Self {
        RingMap { ring: AbGroupRing::new(1, Vec::new()), images: f.iter().map(|&x| vec![x]).collect() }
    }

    pub fn ring(&self) -> &AbGroupRing {
        &self.ring
    }

    pub fn images(&self) -> &[Exponent] {
        &self.images
    }

    pub fn num_generators(&self) -> usize {
        self.images.len()
    }

    /// Exponent vector of the image of `w`, torsion coordinates reduced.
    pub fn word_exponent(&self, w: &Word) -> Exponent {
        let mut e = vec![0i64; self.ring.nvars()];
        for &(g, k) in w.letters() {
            for (slot, x) in e.iter_mut().zip(&self.images[g]) {
                *slot += k * x;
            }
        }
        self.reduce_exponent(e)
    }

    fn reduce_exponent(&self, mut e: Exponent) -> Exponent {
        let free = self.ring.free_rank();
        for (slot, k) in e[free..].iter_mut().zip(self.ring.torsion()) {
            *slot = slot.rem_euclid(*k);
        }
        e
    }

    pub fn word_image(&self, w: &Word) -> GroupRingElem {
        self.ring.group_element(&self.word_exponent(w))
    }

    pub fn kills(&self, w: &Word) -> bool {
        self.word_exponent(w).iter().all(|&x| x == 0)
    }

    /// Post-composition with the monomial map sending ring variable `i` to
    /// `x^images[i]` in a free abelian target with `k` variables.
    pub fn compose_monomial(&self, images: &[Exponent], k: usize) -> Result<Self> {
        if !self.ring.torsion().is_empty() {
            return Err(EmbedError::OutOfRange("monomial composition needs a torsion-free source ring".into()));
        }
        let new: Vec<Exponent> = self
            .images
            .iter()
            .map(|e| {
                let mut out = vec![0i64; k];
                for (i, &ei) in e.iter().enumerate() {
                    for (slot, v) in out.iter_mut().zip(&images[i]) {
                        *slot += ei * v;
                    }
                }
                out
            })
            .collect();
        Self::free_abelian(k, new)
    }
}

/// `∂w/∂g` under `φ`, using `∂(uv) = ∂u + φ(u)∂v`.
pub fn fox_derivative(w: &Word, g: usize, phi: &RingMap) -> GroupRingElem {
    let ring = phi.ring();
    let n = ring.nvars();
    let mut acc = ring.zero();
    let mut prefix = vec![0i64; n];
    let step = &phi.images[g];
    for &(h, e) in w.letters() {
        if h == g {
            if e > 0 {
                for k in 0..e {
                    let exp: Exponent = prefix.iter().zip(step).map(|(p, s)| p + k * s).collect();
                    acc.add_term(phi.reduce_exponent(exp), BigInt::one());
                }
            } else {
                for k in 1..=-e {
                    let exp: Exponent = prefix.iter().zip(step).map(|(p, s)| p - k * s).collect();
                    acc.add_term(phi.reduce_exponent(exp), -BigInt::one());
                }
            }
        }
        for (p, s) in prefix.iter_mut().zip(&phi.images[h]) {
            *p += e * s;
        }
    }
    ring.reduce(&acc)
}

/// Checks `Σⱼ (∂w/∂gⱼ)(φ(gⱼ) − 1) = φ(w) − 1`.
pub fn fundamental_identity_check(w: &Word, phi: &RingMap) -> bool {
    let ring = phi.ring();
    let mut lhs = ring.zero();
    for g in 0..phi.num_generators() {
        let d = fox_derivative(w, g, phi);
        let gm1 = ring.sub(&ring.group_element(&phi.images[g]), &ring.one());
        lhs = ring.add(&lhs, &ring.mul(&d, &gm1));
    }
    let rhs = ring.sub(&phi.word_image(w), &ring.one());
    lhs == rhs
}

/// A module given as the cokernel of `relations` (rows = relations) acting on
/// the free module with `generators` basis elements.
#[derive(Debug, Clone, PartialEq)]
pub struct ModulePresentation {
    pub ring: AbGroupRing,
    pub generators: usize,
    pub relations: Matrix<GroupRingElem>,
}

/// Entry `(i, j)` is `φ(∂rᵢ/∂gⱼ)`. Fails if `φ` does not kill a relator.
pub fn jacobian(p: &GroupPresentation, phi: &RingMap) -> Result<ModulePresentation> {
    let g = p.num_generators();
    if phi.num_generators() != g {
        return Err(EmbedError::CountMismatch(format!("map has {} generators, presentation {}", phi.num_generators(), g)));
    }
    if let Some(index) = p.relators().iter().position(|r| !phi.kills(r)) {
        return Err(EmbedError::RelatorNotKilled { index });
    }
    let rows = p.relators().iter().map(|r| (0..g).map(|j| fox_derivative(r, j, phi)).collect()).collect();
    Ok(ModulePresentation { ring: phi.ring().clone(), generators: g, relations: Matrix::from_rows(rows, g) })
}
