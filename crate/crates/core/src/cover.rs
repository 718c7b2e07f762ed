//! Presentations of finite cyclic covers by Reidemeister–Schreier rewriting.
//!
//! Cosets of `ker(f: π → ℤ/ℓ)` are labelled by `0..ℓ`. When some generator
//! `g` has unit image the transversal is `{g^k}`; otherwise a breadth-first
//! Schreier tree over the generators is used.

use std::collections::{HashMap, VecDeque};

use embedcheck_algebra::{IntMatrix, Matrix};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{EmbedError, Result};
use crate::presentation::{abelianize, AbelianStructure, Epimorphism, GroupPresentation};
use crate::word::Word;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverPresentation {
    pub index: u64,
    pub group: GroupPresentation,
    /// Image of each subgroup generator under conjugation by a lift of `1`.
    pub deck: Vec<Word>,
    /// Coset representatives as words in the base group.
    pub transversal: Vec<Word>,
}

struct Rewriter {
    ell: i64,
    images: Vec<i64>,
    /// Subgroup generator index of `(coset, base generator)`, `None` for tree edges.
    schreier: HashMap<(i64, usize), Option<usize>>,
}

impl Rewriter {
    fn rewrite(&self, w: &Word, start: i64) -> Word {
        let mut c = start;
        let mut out = Word::identity();
        for &(g, e) in w.letters() {
            let step = self.images[g];
            for _ in 0..e.unsigned_abs() {
                if e > 0 {
                    if let Some(s) = self.schreier[&(c, g)] {
                        out = out.mul(&Word::generator(s));
                    }
                    c = (c + step).rem_euclid(self.ell);
                } else {
                    c = (c - step).rem_euclid(self.ell);
                    if let Some(s) = self.schreier[&(c, g)] {
                        out = out.mul(&Word::from_letters([(s, -1)]));
                    }
                }
            }
        }
        debug_assert_eq!(c, start, "rewritten word must be a loop in the coset graph");
        out
    }
}

fn transversal(images: &[i64], ell: i64) -> Vec<Word> {
    if let Some(g) = images.iter().position(|&x| x.gcd(&ell) == 1) {
        let inv = modular_inverse(images[g], ell);
        return (0..ell).map(|i| Word::from_letters([(g, (i * inv).rem_euclid(ell))])).collect();
    }
    let mut reps: Vec<Option<Word>> = vec![None; ell as usize];
    reps[0] = Some(Word::identity());
    let mut queue = VecDeque::from([0i64]);
    while let Some(c) = queue.pop_front() {
        let here = reps[c as usize].clone().expect("visited");
        for (g, &x) in images.iter().enumerate() {
            for e in [1i64, -1] {
                let next = (c + e * x).rem_euclid(ell);
                if reps[next as usize].is_none() {
                    reps[next as usize] = Some(here.mul(&Word::from_letters([(g, e)])));
                    queue.push_back(next);
                }
            }
        }
    }
    reps.into_iter().map(|r| r.expect("surjective map reaches every coset")).collect()
}

fn modular_inverse(a: i64, m: i64) -> i64 {
    let e = a.extended_gcd(&m);
    e.x.rem_euclid(m)
}

/// Reidemeister–Schreier presentation of `ker f` for `f: π ↠ ℤ/ℓ`.
pub fn rs_cover(p: &GroupPresentation, f: &Epimorphism) -> Result<CoverPresentation> {
    let ell = f.modulus as i64;
    if ell < 2 {
        return Err(EmbedError::OutOfRange("cover index must be at least 2".into()));
    }
    if !f.is_surjective() {
        return Err(EmbedError::NotSurjective);
    }
    let images: Vec<i64> = f.images.iter().map(|x| x.rem_euclid(ell)).collect();
    let reps = transversal(&images, ell);
    let coset_of = |w: &Word| -> i64 { w.letters().iter().map(|&(g, e)| images[g] * e).sum::<i64>().rem_euclid(ell) };
    debug_assert!(reps.iter().enumerate().all(|(i, r)| coset_of(r) == i as i64));

    let mut schreier = HashMap::new();
    let mut names = Vec::new();
    let mut words = Vec::new();
    for (g, name) in p.names().iter().enumerate() {
        for c in 0..ell {
            let target = (c + images[g]).rem_euclid(ell);
            let w = reps[c as usize].mul(&Word::generator(g)).mul(&reps[target as usize].inverse());
            if w.is_identity() {
                schreier.insert((c, g), None);
            } else {
                schreier.insert((c, g), Some(names.len()));
                names.push(format!("{name}_{c}"));
                words.push(w);
            }
        }
    }
    let rw = Rewriter { ell, images: images.clone(), schreier };
    let relators: Vec<Word> =
        (0..ell).flat_map(|c| p.relators().iter().map(move |r| (c, r))).map(|(c, r)| rw.rewrite(r, c)).collect();
    let lift = &reps[1];
    let deck = words.iter().map(|w| rw.rewrite(&w.conjugate_by(lift), 0)).collect();
    let group = GroupPresentation::new(names, relators)?;
    Ok(CoverPresentation { index: f.modulus, group, deck, transversal: reps })
}

/// Abelianization of the cover with the deck action on its canonical
/// coordinates (column `i` is the image of basis element `i`).
pub fn cover_h1(c: &CoverPresentation) -> (AbelianStructure, IntMatrix) {
    let ab = abelianize(&c.group);
    let n = c.group.num_generators();
    let k = ab.num_coordinates();
    let mut cols = Vec::with_capacity(k);
    for i in 0..k {
        // Lift basis element i to the free abelian group on generators, push
        // through the deck map, then read off coordinates.
        let mut image = vec![0i64; n];
        for (g, coeff) in ab.lifts.row(i).iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            let coeff: i64 = coeff.try_into().expect("lift coefficient fits in i64");
            for (slot, e) in image.iter_mut().zip(c.deck[g].exponent_sums(n)) {
                *slot += coeff * e;
            }
        }
        cols.push(ab.coordinates(&image));
    }
    let action = Matrix::from_rows((0..k).map(|r| (0..k).map(|col| cols[col][r].clone()).collect()).collect(), k);
    (ab, action)
}

/// `D^ℓ` acts as the identity on `H₁` of the cover.
pub fn deck_order_divides_index(ab: &AbelianStructure, action: &IntMatrix, ell: u64) -> bool {
    let k = action.rows();
    let mut power: Vec<Vec<BigInt>> = (0..k).map(|i| (0..k).map(|j| BigInt::from(i64::from(i == j))).collect()).collect();
    for _ in 0..ell {
        power = (0..k)
            .map(|i| (0..k).map(|j| (0..k).map(|m| &action[(i, m)] * &power[m][j]).sum()).collect())
            .collect();
    }
    (0..k).all(|i| {
        (0..k).all(|j| {
            let d = ab.coordinate_order(i);
            let diff = &power[i][j] - BigInt::from(i64::from(i == j));
            if d.is_zero() {
                diff.is_zero()
            } else {
                diff.mod_floor(&d).is_zero()
            }
        })
    })
}
