//! Finite group presentations, the presentation DSL, abelianization and
//! epimorphisms onto cyclic groups.
//!
//! DSL: a `gens: a, b, c` line followed by `rel: <word>` lines; `#` starts a
//! comment. `rel: u = v = w` adds the relators `u v⁻¹` and `v w⁻¹`.

use embedcheck_algebra::{smith_normal_form, IntMatrix, Integers, Matrix};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{EmbedError, Result};
use crate::word::{parse_word, Word};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupPresentation {
    names: Vec<String>,
    relators: Vec<Word>,
}

impl GroupPresentation {
    pub fn new(names: Vec<String>, relators: Vec<Word>) -> Result<Self> {
        let mut seen = std::collections::HashSet::new();
        for n in &names {
            if n.is_empty() {
                return Err(EmbedError::InvalidPresentation("empty generator name".into()));
            }
            if !seen.insert(n) {
                return Err(EmbedError::InvalidPresentation(format!("duplicate generator '{n}'")));
            }
        }
        if let Some((i, _)) = relators.iter().enumerate().find(|(_, r)| r.max_generator().map_or(false, |g| g >= names.len())) {
            return Err(EmbedError::InvalidPresentation(format!("relator {i} uses an undeclared generator")));
        }
        Ok(GroupPresentation { names, relators })
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn num_generators(&self) -> usize {
        self.names.len()
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn parse_word(&self, text: &str) -> Result<Word> {
        parse_word(text, &self.names)
    }

    /// The same group with extra relators.
    pub fn with_relators<I: IntoIterator<Item = Word>>(&self, extra: I) -> Self {
        let mut p = self.clone();
        p.relators.extend(extra);
        p
    }

    /// Rows = relators, columns = generators.
    pub fn exponent_sum_matrix(&self) -> IntMatrix {
        let g = self.num_generators();
        Matrix::from_rows(self.relators.iter().map(|r| r.exponent_sums(g).into_iter().map(BigInt::from).collect()).collect(), g)
    }

    pub fn to_dsl(&self) -> String {
        let mut out = format!("gens: {}\n", self.names.join(", "));
        for r in &self.relators {
            out.push_str(&format!("rel: {}\n", r.display(&self.names)));
        }
        out
    }
}

/// Parses `u = v = …` into relators `u v⁻¹, v w⁻¹, …`; a lone word is itself
/// a relator.
pub fn parse_relation<S: AsRef<str>>(text: &str, names: &[S]) -> Result<Vec<Word>> {
    let mut parts = Vec::new();
    let mut offset = 0;
    for piece in text.split('=') {
        let w = parse_word(piece, names).map_err(|e| shift_column(e, offset))?;
        parts.push(w);
        offset += piece.len() + 1;
    }
    if parts.len() == 1 {
        return Ok(parts);
    }
    Ok(parts.windows(2).map(|p| p[0].mul(&p[1].inverse())).collect())
}

pub(crate) fn shift_column(e: EmbedError, by: usize) -> EmbedError {
    match e {
        EmbedError::Syntax { pos, msg } => EmbedError::Syntax { pos: pos + by, msg },
        EmbedError::UnknownGenerator { name, pos } => EmbedError::UnknownGenerator { name, pos: pos + by },
        other => other,
    }
}

pub fn parse_generator_list(text: &str) -> Vec<String> {
    text.split(',').map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect()
}

pub fn parse_presentation(text: &str) -> Result<GroupPresentation> {
    let mut names: Option<Vec<String>> = None;
    let mut relators = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let at = |e: EmbedError| EmbedError::Catalog { line: line_no, msg: e.to_string() };
        if let Some(rest) = line.strip_prefix("gens:") {
            if names.is_some() {
                return Err(EmbedError::Catalog { line: line_no, msg: "second 'gens:' line".into() });
            }
            let list = parse_generator_list(rest);
            if list.is_empty() {
                return Err(EmbedError::Catalog { line: line_no, msg: "no generators".into() });
            }
            names = Some(list);
        } else if let Some(rest) = line.strip_prefix("rel:") {
            let Some(ns) = names.as_ref() else {
                return Err(EmbedError::Catalog { line: line_no, msg: "'rel:' before 'gens:'".into() });
            };
            relators.extend(parse_relation(rest, ns).map_err(at)?);
        } else {
            return Err(EmbedError::Catalog { line: line_no, msg: format!("expected 'gens:' or 'rel:', found '{line}'") });
        }
    }
    let names = names.ok_or(EmbedError::Catalog { line: 0, msg: "missing 'gens:' line".into() })?;
    GroupPresentation::new(names, relators)
}

/// `ℤ^free ⊕ ⊕ ℤ/dᵢ` with `d₁ | d₂ | …`.
///
/// Coordinates are ordered free first, then torsion. `generator_images` has a
/// column per generator; `lifts` has a row per coordinate expressing that
/// basis element as an integer combination of generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianStructure {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
    pub generator_images: IntMatrix,
    pub lifts: IntMatrix,
}

impl AbelianStructure {
    pub fn num_coordinates(&self) -> usize {
        self.free_rank + self.torsion.len()
    }

    /// Order of coordinate `i` (0 for free coordinates).
    pub fn coordinate_order(&self, i: usize) -> BigInt {
        if i < self.free_rank {
            BigInt::zero()
        } else {
            self.torsion[i - self.free_rank].clone()
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.num_coordinates() == 0
    }

    /// Number of generators as an abelian group.
    pub fn rank_of_generation(&self) -> usize {
        self.num_coordinates()
    }

    /// `(ℤ/ℓ)²` returns `Some(ℓ)`.
    pub fn square_torsion_order(&self) -> Option<BigInt> {
        (self.free_rank == 0 && self.torsion.len() == 2 && self.torsion[0] == self.torsion[1]).then(|| self.torsion[0].clone())
    }

    /// Canonical coordinates of an element given by generator exponents.
    pub fn coordinates(&self, exponents: &[i64]) -> Vec<BigInt> {
        (0..self.num_coordinates())
            .map(|i| {
                let v: BigInt = exponents.iter().enumerate().map(|(j, &e)| &self.generator_images[(i, j)] * e).sum();
                let d = self.coordinate_order(i);
                if d.is_zero() {
                    v
                } else {
                    v.mod_floor(&d)
                }
            })
            .collect()
    }

    /// Human-readable form such as `Z^2 + Z/4`.
    pub fn describe(&self) -> String {
        let mut parts = Vec::new();
        if self.free_rank == 1 {
            parts.push("Z".to_string());
        } else if self.free_rank > 1 {
            parts.push(format!("Z^{}", self.free_rank));
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

/// `ℤ^g / (row space of the relator exponent sums)` via a certified SNF.
pub fn abelianize(p: &GroupPresentation) -> AbelianStructure {
    cokernel_of_rows(&p.exponent_sum_matrix())
}

/// Cokernel of the row space of `m` inside `ℤ^cols`.
pub fn cokernel_of_rows(m: &IntMatrix) -> AbelianStructure {
    let g = m.cols();
    let snf = smith_normal_form(&Integers, m);
    debug_assert!(snf.certify(&Integers, m));
    // With y = x·V the relations become the rows of S.
    let rank = snf.rank();
    let mut coords: Vec<usize> = (rank..g).collect();
    let mut torsion = Vec::new();
    for (i, d) in snf.invariant_factors.iter().enumerate() {
        if !d.is_one() {
            torsion.push(d.clone());
            coords.push(i);
        }
    }
    let free_rank = g - rank;
    let images = Matrix::from_rows(
        coords
            .iter()
            .enumerate()
            .map(|(k, &i)| {
                (0..g)
                    .map(|j| {
                        let v = snf.v[(j, i)].clone();
                        if k < free_rank {
                            v
                        } else {
                            v.mod_floor(&torsion[k - free_rank])
                        }
                    })
                    .collect()
            })
            .collect(),
        g,
    );
    let lifts = Matrix::from_rows(coords.iter().map(|&i| snf.v_inv.row(i).to_vec()).collect(), g);
    AbelianStructure { free_rank, torsion, generator_images: images, lifts }
}

/// A surjection `π → ℤ/ℓ` (or `π → ℤ` when `modulus` is 0).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, PartialOrd, Ord)]
pub struct Epimorphism {
    pub modulus: u64,
    /// Value on canonical coordinates of `H₁`.
    pub covector: Vec<i64>,
    /// Value on each generator, reduced into `[0, ℓ)` when `ℓ > 0`.
    pub images: Vec<i64>,
}

impl Epimorphism {
    pub fn from_covector(ab: &AbelianStructure, modulus: u64, covector: Vec<i64>) -> Self {
        let g = ab.generator_images.cols();
        let images = (0..g)
            .map(|j| {
                let v: BigInt = covector.iter().enumerate().map(|(i, &c)| &ab.generator_images[(i, j)] * c).sum();
                if modulus == 0 {
                    v.to_i64().expect("image fits in i64")
                } else {
                    v.mod_floor(&BigInt::from(modulus)).to_i64().expect("residue fits")
                }
            })
            .collect();
        Epimorphism { modulus, covector, images }
    }

    pub fn is_surjective(&self) -> bool {
        let m = self.modulus as i64;
        self.images.iter().fold(m, |g, &x| g.gcd(&x)) == 1
    }

    /// Value on a word.
    pub fn evaluate(&self, w: &Word) -> i64 {
        let v: i64 = w.letters().iter().map(|&(g, e)| self.images[g] * e).sum();
        if self.modulus == 0 {
            v
        } else {
            v.rem_euclid(self.modulus as i64)
        }
    }
}

/// Vectors of `[-bound, bound]^n` that are primitive, first nonzero entry
/// positive, in lexicographic order.
pub fn primitive_covectors(n: usize, bound: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut v = vec![-bound; n];
    if n == 0 {
        return out;
    }
    loop {
        let first = v.iter().find(|x| **x != 0);
        if first.map_or(false, |x| *x > 0) && v.iter().fold(0i64, |g, x| g.gcd(x)) == 1 {
            out.push(v.clone());
        }
        let mut i = n;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if v[i] < bound {
                v[i] += 1;
                break;
            }
            v[i] = -bound;
        }
    }
}

/// All epimorphisms onto `ℤ/ℓ` for `ℓ > 0`; for `ℓ = 0`, the primitive
/// covectors on the free part with entries in `[-bound, bound]`, up to sign.
pub fn epimorphisms_to_cyclic(p: &GroupPresentation, modulus: u64, bound: i64) -> Vec<Epimorphism> {
    let ab = abelianize(p);
    epimorphisms_from_structure(&ab, modulus, bound)
}

pub fn epimorphisms_from_structure(ab: &AbelianStructure, modulus: u64, bound: i64) -> Vec<Epimorphism> {
    if modulus == 0 {
        return primitive_covectors(ab.free_rank, bound)
            .into_iter()
            .map(|mut c| {
                c.resize(ab.num_coordinates(), 0);
                Epimorphism::from_covector(ab, 0, c)
            })
            .collect();
    }
    let l = BigInt::from(modulus);
    // Allowed values per coordinate: c with c·d ≡ 0 (mod ℓ).
    let choices: Vec<Vec<i64>> = (0..ab.num_coordinates())
        .map(|i| {
            let d = ab.coordinate_order(i);
            (0..modulus as i64).filter(|&c| (&d * c).mod_floor(&l).is_zero()).collect()
        })
        .collect();
    let mut out = Vec::new();
    let mut idx = vec![0usize; choices.len()];
    loop {
        let cov: Vec<i64> = idx.iter().zip(&choices).map(|(&k, ch)| ch[k]).collect();
        let e = Epimorphism::from_covector(ab, modulus, cov);
        if e.is_surjective() {
            out.push(e);
        }
        let mut i = idx.len();
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            idx[i] += 1;
            if idx[i] < choices[i].len() {
                break;
            }
            idx[i] = 0;
        }
    }
}
