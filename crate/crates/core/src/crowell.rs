//! Homology of infinite cyclic covers over `F[t^±]` via the Crowell sequence,
//! and integral presentations for the homology-handle check.

use embedcheck_algebra::{
    bareiss, smith_normal_form, Field, Integers, LaurentPid, LaurentPoly, Matrix, Ring, UniLaurent,
};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use crate::error::{EmbedError, Result};
use crate::fox::{jacobian, GroupRingElem, RingMap};
use crate::presentation::GroupPresentation;
use crate::word::Word;

/// `F[t^±]^free ⊕ ⊕ F[t^±]/(dᵢ)` with only non-unit `dᵢ` kept.
#[derive(Debug, Clone, PartialEq)]
pub struct PidModule<E> {
    pub free_rank: usize,
    pub factors: Vec<UniLaurent<E>>,
}

impl<E: Clone> PidModule<E> {
    pub fn is_zero(&self) -> bool {
        self.free_rank == 0 && self.factors.is_empty()
    }

    /// Minimal number of generators.
    pub fn generator_count(&self) -> usize {
        self.free_rank + self.factors.len()
    }

    pub fn is_cyclic(&self) -> bool {
        self.generator_count() <= 1
    }

    pub fn is_torsion(&self) -> bool {
        self.free_rank == 0
    }

    pub fn factor_texts<F: Field<Elem = E>>(&self, pid: &LaurentPid<F>) -> Vec<String> {
        self.factors.iter().map(|d| pid.to_text(d, "t")).collect()
    }
}

/// Cokernel of the row space of `m` over the PID.
pub fn cokernel_module<F: Field>(pid: &LaurentPid<F>, m: &Matrix<UniLaurent<F::Elem>>) -> PidModule<F::Elem> {
    let snf = smith_normal_form(pid, m);
    let factors = snf.invariant_factors.iter().filter(|d| !pid.is_one(d)).cloned().collect();
    PidModule { free_rank: m.cols() - snf.rank(), factors }
}

/// Image of a `ℤ[t^±]` matrix in `F[t^±]`.
pub fn to_pid_matrix<F: Field>(pid: &LaurentPid<F>, m: &Matrix<GroupRingElem>) -> Matrix<UniLaurent<F::Elem>> {
    m.map(|p| p.to_univariate(pid, &[1]))
}

fn check_epimorphism(p: &GroupPresentation, f: &[i64]) -> Result<RingMap> {
    if f.len() != p.num_generators() {
        return Err(EmbedError::CountMismatch(format!("{} images for {} generators", f.len(), p.num_generators())));
    }
    if f.iter().fold(0i64, |g, x| g.gcd(x)) != 1 {
        return Err(EmbedError::NotSurjective);
    }
    Ok(RingMap::cyclic(f))
}

/// Relation matrix over `F[t^±]` presenting `H₁` of the infinite cyclic cover
/// determined by `f`: the Fox Jacobian rewritten in a basis of the kernel of
/// the Crowell map `eⱼ ↦ t^f(gⱼ) − 1`.
pub fn crowell_presentation<F: Field>(
    p: &GroupPresentation,
    f: &[i64],
    pid: &LaurentPid<F>,
) -> Result<Matrix<UniLaurent<F::Elem>>> {
    let phi = check_epimorphism(p, f)?;
    let j = to_pid_matrix(pid, &jacobian(p, &phi)?.relations);
    let g = p.num_generators();
    let column = Matrix::from_rows(f.iter().map(|&e| vec![pid.t_pow_minus_one(e)]).collect(), 1);
    let snf = smith_normal_form(pid, &column);
    // x·c = 0 iff (x·U⁻¹) has first coordinate 0.
    let moved = j.mul(pid, &snf.u_inv);
    debug_assert!((0..moved.rows()).all(|i| pid.is_zero(&moved[(i, 0)])), "Jacobian rows lie in the Crowell kernel");
    let rest: Vec<usize> = (1..g).collect();
    let all_rows: Vec<usize> = (0..moved.rows()).collect();
    Ok(moved.select(&all_rows, &rest))
}

/// `H₁(M_f; F)` as a module over `F[t^±]`.
pub fn infinite_cyclic_cover_homology<F: Field>(
    p: &GroupPresentation,
    f: &[i64],
    field: F,
) -> Result<PidModule<F::Elem>> {
    let pid = LaurentPid::new(field);
    let m = crowell_presentation(p, f, &pid)?;
    Ok(cokernel_module(&pid, &m))
}

/// Rank over `F(t)` of the relative module `coker(J)`.
pub fn alexander_module_rank<F: Field>(p: &GroupPresentation, f: &[i64], field: F) -> Result<usize> {
    let phi = check_epimorphism(p, f)?;
    let pid = LaurentPid::new(field);
    let j = to_pid_matrix(&pid, &jacobian(p, &phi)?.relations);
    Ok(cokernel_module(&pid, &j).free_rank)
}

/// Integral presentation of `H₁(M_f; ℤ)` over `ℤ[t^±]`, obtained by deleting
/// the Jacobian column of a generator with `f = ±1`. `None` when no generator
/// has unit image.
pub fn integral_presentation(p: &GroupPresentation, f: &[i64]) -> Result<Option<Matrix<LaurentPoly<BigInt>>>> {
    let phi = check_epimorphism(p, f)?;
    let Some(col) = f.iter().position(|x| x.abs() == 1) else {
        return Ok(None);
    };
    let j = jacobian(p, &phi)?.relations;
    Ok(Some(j.drop_col(col)))
}

/// Surjectivity onto `ℤ^k` of generator images given as exponent vectors.
fn onto_free_abelian(images: &[Vec<i64>], k: usize) -> Option<Matrix<BigInt>> {
    let m = Matrix::from_rows((0..k).map(|i| images.iter().map(|e| BigInt::from(e[i])).collect()).collect(), images.len());
    let snf = smith_normal_form(&Integers, &m);
    (snf.rank() == k && snf.invariant_factors.iter().all(|d| d.is_one())).then(|| {
        // M·V[:, :k]·U = I, so the columns of V[:, :k]·U are preimages of the
        // standard basis.
        let g = images.len();
        let rows: Vec<usize> = (0..g).collect();
        let cols: Vec<usize> = (0..k).collect();
        snf.v.select(&rows, &cols).mul(&Integers, &snf.u)
    })
}

/// Rank over `ℚ(x₁, …, x_k)` of the relative Alexander module for the map
/// sending generator `g` to `x^images[g]`.
pub fn alexander_rank_multivariate(p: &GroupPresentation, images: &[Vec<i64>], k: usize) -> Result<usize> {
    if onto_free_abelian(images, k).is_none() {
        return Err(EmbedError::NotSurjective);
    }
    let phi = RingMap::free_abelian(k, images.to_vec())?;
    let j = jacobian(p, &phi)?.relations;
    Ok(p.num_generators() - bareiss::rank(&j))
}

/// Relation matrix over `ℤ[x^±, y^±]` for `H₁` of the `ℤ²` cover given by
/// `images` (one `(a, b)` per generator).
///
/// Two generators are added by Tietze moves so that some generators map to
/// exactly `x` and `y`. The Crowell kernel is then free on
/// `eⱼ − αⱼe_x − βⱼe_y` and `(y − 1)e_x − (x − 1)e_y`, and the Jacobian rows
/// are rewritten in that basis.
pub fn two_variable_presentation(p: &GroupPresentation, images: &[Vec<i64>]) -> Result<Matrix<LaurentPoly<BigInt>>> {
    let g = p.num_generators();
    if images.len() != g || images.iter().any(|e| e.len() != 2) {
        return Err(EmbedError::CountMismatch("need one (a, b) image per generator".into()));
    }
    let pre = onto_free_abelian(images, 2).ok_or(EmbedError::NotSurjective)?;
    let shift = |w: &Word| Word::from_letters(w.letters().iter().map(|&(h, e)| (h + 2, e)));
    let lift = |col: usize| -> Word {
        Word::from_letters((0..g).map(|j| (j + 2, pre[(j, col)].to_i64().expect("small preimage"))))
    };
    let mut names = vec![fresh_name(p, "xi_x"), fresh_name(p, "xi_y")];
    names.extend(p.names().iter().cloned());
    let mut relators: Vec<Word> = p.relators().iter().map(shift).collect();
    relators.push(Word::generator(0).mul(&lift(0).inverse()));
    relators.push(Word::generator(1).mul(&lift(1).inverse()));
    let q = GroupPresentation::new(names, relators)?;
    let mut all_images = vec![vec![1, 0], vec![0, 1]];
    all_images.extend(images.iter().cloned());
    let phi = RingMap::free_abelian(2, all_images.clone())?;
    let j = jacobian(&q, &phi)?.relations;

    type P = LaurentPoly<BigInt>;
    let one = BigInt::one();
    let xm1 = P::monomial_minus_one(2, &[1, 0]);
    let ym1 = P::monomial_minus_one(2, &[0, 1]);
    // xᵃyᵇ − 1 = (xᵃ − 1) + xᵃ(yᵇ − 1)
    let alphas: Vec<P> = all_images[2..]
        .iter()
        .map(|e| P::monomial_minus_one(2, &[e[0], 0]).div_exact(&xm1).expect("x - 1 divides x^a - 1"))
        .collect();
    let betas: Vec<P> = all_images[2..]
        .iter()
        .map(|e| {
            P::monomial_minus_one(2, &[0, e[1]])
                .div_exact(&ym1)
                .expect("y - 1 divides y^b - 1")
                .mul_monomial(&[e[0], 0], &one)
        })
        .collect();
    let mut rows = Vec::with_capacity(j.rows());
    for i in 0..j.rows() {
        let mut lhs = j[(i, 0)].clone();
        let mut rhs = j[(i, 1)].clone();
        for (jj, (a, b)) in alphas.iter().zip(&betas).enumerate() {
            lhs = &lhs + &(&j[(i, jj + 2)] * a);
            rhs = &rhs + &(&j[(i, jj + 2)] * b);
        }
        let c = lhs.div_exact(&ym1).expect("Jacobian rows lie in the Crowell kernel");
        debug_assert_eq!(&c * &xm1, -&rhs);
        let mut row: Vec<P> = (2..g + 2).map(|jj| j[(i, jj)].clone()).collect();
        row.push(c);
        rows.push(row);
    }
    Ok(Matrix::from_rows(rows, g + 1))
}

fn fresh_name(p: &GroupPresentation, base: &str) -> String {
    let mut name = base.to_string();
    while p.names().iter().any(|n| *n == name) {
        name.push('\'');
    }
    name
}
