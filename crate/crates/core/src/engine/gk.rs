//! The chain complex `C(k, n)` over `ℤ[G_k]`, `G_k = ℤ ⊕ ℤ/k`, of the
//! presentation `⟨a, t | [t, aⁿ], aᵏ⟩`, and the stated generators of its
//! second homology.

use embedcheck_algebra::{GkRing, Ring};
use num_integer::Integer;
use serde::Serialize;

use crate::error::{EmbedError, Result};
use crate::fox::{fox_derivative, GroupRingElem, RingMap};
use crate::word::Word;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GkRecord {
    pub k: i64,
    pub n: i64,
    /// `∂₂` as columns of Fox derivatives, one per relator, in canonical text.
    pub boundary2: Vec<Vec<String>>,
    pub boundary_composite_zero: bool,
    pub h0_is_z: bool,
    pub g_in_kernel: bool,
    pub h_in_kernel: bool,
    /// `(a − 1)g = n(t − 1)h`.
    pub relation_ag_nth: bool,
    /// `(a − 1)g = −n(t − 1)h`, recorded for comparison.
    pub relation_ag_minus_nth: bool,
    /// `ρh = 0`.
    pub relation_rho_h: bool,
    /// Whether `∂₁∂₂ = 0` still holds with lower-left entry `1 − a`.
    pub lower_left_one_minus_a_works: bool,
}

impl GkRecord {
    pub fn passes(&self) -> bool {
        self.boundary_composite_zero
            && self.h0_is_z
            && self.g_in_kernel
            && self.h_in_kernel
            && self.relation_ag_nth
            && self.relation_rho_h
    }
}

type Vector = [GroupRingElem; 2];

/// `∂₂ v` where `cols[c]` is the image of `e_c`.
fn apply(r: &GkRing, cols: &[Vector; 2], v: &Vector) -> Vector {
    let entry = |i: usize| r.add(&r.mul(&cols[0][i], &v[0]), &r.mul(&cols[1][i], &v[1]));
    [entry(0), entry(1)]
}

fn is_zero_vector(r: &GkRing, v: &Vector) -> bool {
    v.iter().all(|x| r.is_zero(x))
}

fn composite_zero(r: &GkRing, d1: &Vector, cols: &[Vector; 2]) -> bool {
    cols.iter().all(|c| r.is_zero(&r.add(&r.mul(&d1[0], &c[0]), &r.mul(&d1[1], &c[1]))))
}

pub fn verify_gk_complex(k: i64, n: i64) -> Result<GkRecord> {
    if k < 2 || n <= 0 || n >= k || n.gcd(&k) != 1 {
        return Err(EmbedError::OutOfRange(format!("need k >= 2, 0 < n < k, gcd(n, k) = 1; got k={k}, n={n}")));
    }
    let r = GkRing::new(k);
    let (t, a, one) = (r.t(), r.a(), r.one());
    // Generators in the order a, t; ring variables are (t, a).
    let phi = RingMap::new(r.ring().clone(), vec![vec![0, 1], vec![1, 0]])?;
    let (ga, gt) = (Word::generator(0), Word::generator(1));
    let relators = [gt.commutator(&ga.pow(n)), ga.pow(k)];
    let cols: [Vector; 2] = relators.map(|w| [fox_derivative(&w, 0, &phi), fox_derivative(&w, 1, &phi)]);
    let d1: Vector = [r.sub(&a, &one), r.sub(&t, &one)];

    let n_el = r.ring().constant(n);
    let t1 = r.sub(&t, &one);
    let a1 = r.sub(&a, &one);
    let g: Vector = [r.rho(), r.neg(&r.mul(&n_el, &t1))];
    let h: Vector = [r.zero(), a1.clone()];

    let ag: Vector = [r.mul(&a1, &g[0]), r.mul(&a1, &g[1])];
    let nth: Vector = [r.mul(&r.mul(&n_el, &t1), &h[0]), r.mul(&r.mul(&n_el, &t1), &h[1])];
    let diff = |x: &Vector, y: &Vector| -> Vector { [r.sub(&x[0], &y[0]), r.sub(&x[1], &y[1])] };
    let sum = |x: &Vector, y: &Vector| -> Vector { [r.add(&x[0], &y[0]), r.add(&x[1], &y[1])] };
    let rho_h: Vector = [r.mul(&r.rho(), &h[0]), r.mul(&r.rho(), &h[1])];

    // H₀ = Λ/(a − 1, t − 1) is ℤ because a and t generate G_k.
    let h0_is_z = d1.iter().all(|x| r.ring().augmentation(x) == 0.into()) && d1[0] == a1 && d1[1] == t1;

    let mut printed = cols.clone();
    printed[0][1] = r.sub(&one, &a);

    let names = ["t", "a"];
    Ok(GkRecord {
        k,
        n,
        boundary2: cols.iter().map(|c| c.iter().map(|x| x.to_text(&names)).collect()).collect(),
        boundary_composite_zero: composite_zero(&r, &d1, &cols),
        h0_is_z,
        g_in_kernel: is_zero_vector(&r, &apply(&r, &cols, &g)),
        h_in_kernel: is_zero_vector(&r, &apply(&r, &cols, &h)),
        relation_ag_nth: is_zero_vector(&r, &diff(&ag, &nth)),
        relation_ag_minus_nth: is_zero_vector(&r, &sum(&ag, &nth)),
        relation_rho_h: is_zero_vector(&r, &rho_h),
        lower_left_one_minus_a_works: composite_zero(&r, &d1, &printed),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fox_columns_match_closed_form() {
        let rec = verify_gk_complex(5, 2).unwrap();
        assert_eq!(rec.boundary2[0], vec!["-1 - a + t + t*a", "1 - a^2"]);
        assert!(rec.boundary_composite_zero);
        assert!(!rec.lower_left_one_minus_a_works);
        assert!(verify_gk_complex(2, 1).unwrap().lower_left_one_minus_a_works);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(verify_gk_complex(4, 2).is_err());
        assert!(verify_gk_complex(1, 1).is_err());
        assert!(verify_gk_complex(3, 3).is_err());
    }
}
