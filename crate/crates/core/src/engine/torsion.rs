//! `H₁ ≅ (ℤ/ℓ)²`: for some basis pair of `Hom(π, ℤ/ℓ)`, the `ℓ`-fold cyclic
//! covers must have `H₁` a quotient of the augmentation ideal of `ℤ[ℤ/ℓ]`.

use embedcheck_algebra::{bareiss, IntMatrix, LaurentPoly};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;

use super::{prepare, show_vector, square_order, Battery, CriterionRecord, RecordVerdict, Verdict};
use crate::catalog::SurgeryDescription;
use crate::cover::{cover_h1, rs_cover};
use crate::error::Result;
use crate::presentation::{epimorphisms_from_structure, AbelianStructure, Epimorphism, GroupPresentation};

/// Largest `p^d` for which cyclic vectors are searched exhaustively.
const SEARCH_LIMIT: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq)]
pub struct CoverCheck {
    /// Values on the designated basis.
    pub label: Vec<i64>,
    pub pass: bool,
    pub record: CriterionRecord,
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Rank over `F_p` of the rows.
fn rank_mod_p(mut rows: Vec<Vec<u64>>, p: u64) -> usize {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = mod_inverse(rows[rank][c], p);
        for i in 0..rows.len() {
            if i != rank && rows[i][c] != 0 {
                let factor = rows[i][c] * inv % p;
                for j in c..cols {
                    rows[i][j] = (rows[i][j] + p * p - factor * rows[rank][j] % p) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    let (mut r, mut base, mut e) = (1u64, a % p, p - 2);
    while e > 0 {
        if e & 1 == 1 {
            r = r * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    r
}

fn apply(d: &[Vec<u64>], v: &[u64], p: u64) -> Vec<u64> {
    d.iter().map(|row| row.iter().zip(v).map(|(a, b)| a * b % p).sum::<u64>() % p).collect()
}

/// Outcome of the cyclic-vector search over `F_p[ℤ/ℓ]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
enum SearchOutcome {
    Cyclic,
    NotCyclic,
    Skipped,
}

/// Whether `F_p^n` with the action `d` has a vector whose translates span.
fn fp_cyclic(d: &[Vec<u64>], p: u64, ell: u64) -> SearchOutcome {
    let n = d.len();
    if n == 0 {
        return SearchOutcome::Cyclic;
    }
    if n as u64 > ell {
        return SearchOutcome::NotCyclic;
    }
    let size = (p as f64).powi(n as i32);
    if size > SEARCH_LIMIT as f64 {
        return SearchOutcome::Skipped;
    }
    let total = p.pow(n as u32);
    for code in 1..total {
        let mut v = Vec::with_capacity(n);
        let mut c = code;
        for _ in 0..n {
            v.push(c % p);
            c /= p;
        }
        let mut orbit = vec![v];
        for _ in 1..ell.min(n as u64) {
            let next = apply(d, orbit.last().expect("nonempty"), p);
            orbit.push(next);
        }
        if rank_mod_p(orbit, p) == n {
            return SearchOutcome::Cyclic;
        }
    }
    SearchOutcome::NotCyclic
}

/// Action on `H₁ ⊗ F_p`.
fn action_mod_p(h1: &AbelianStructure, action: &IntMatrix, p: u64) -> Vec<Vec<u64>> {
    let pb = BigInt::from(p);
    let kept: Vec<usize> = (0..h1.num_coordinates())
        .filter(|&i| {
            let d = h1.coordinate_order(i);
            d.is_zero() || d.is_multiple_of(&pb)
        })
        .collect();
    kept.iter()
        .map(|&r| kept.iter().map(|&c| action[(r, c)].mod_floor(&pb).to_u64().expect("residue")).collect())
        .collect()
}

/// Whether the action on `H₁ ⊗ ℚ` has a cyclic vector, i.e. its minimal
/// polynomial has full degree.
fn rational_cyclic(h1: &AbelianStructure, action: &IntMatrix) -> bool {
    let r = h1.free_rank;
    if r == 0 {
        return true;
    }
    let block: Vec<Vec<BigInt>> = (0..r).map(|i| (0..r).map(|j| action[(i, j)].clone()).collect()).collect();
    let mut power: Vec<Vec<BigInt>> = (0..r).map(|i| (0..r).map(|j| BigInt::from(i64::from(i == j))).collect()).collect();
    let mut rows = Vec::with_capacity(r);
    for _ in 0..r {
        rows.push(power.iter().flatten().map(|x| LaurentPoly::constant(1, x.clone())).collect::<Vec<_>>());
        power = (0..r)
            .map(|i| (0..r).map(|j| (0..r).map(|m| &block[i][m] * &power[m][j]).sum()).collect())
            .collect();
    }
    bareiss::rank(&embedcheck_algebra::Matrix::from_rows(rows, r * r)) == r
}

/// `H₁` of the cover of one epimorphism and the tests it must pass.
pub fn cover_record(s: &SurgeryDescription, group: &GroupPresentation, epi: &Epimorphism) -> Result<CoverCheck> {
    let ell = epi.modulus;
    let cover = rs_cover(group, epi)?;
    let (h1, action) = cover_h1(&cover);
    let label: Vec<i64> = s.designated_basis().iter().map(|w| epi.evaluate(w)).collect();
    let generators = h1.num_coordinates();
    let mut pass = generators as u64 <= ell - 1;
    let mut primes: Vec<u64> = prime_factors(ell);
    for d in &h1.torsion {
        if let Some(d) = d.to_u64() {
            primes.extend(prime_factors(d));
        }
    }
    primes.sort_unstable();
    primes.dedup();
    let mut modular = std::collections::BTreeMap::new();
    for p in primes {
        let outcome = fp_cyclic(&action_mod_p(&h1, &action, p), p, ell);
        pass &= outcome != SearchOutcome::NotCyclic;
        modular.insert(format!("F_{p}"), outcome);
    }
    let rational = rational_cyclic(&h1, &action);
    pass &= rational;
    let verdict = if pass { RecordVerdict::Pass } else { RecordVerdict::Fail };
    let action_rows: Vec<Vec<String>> = action.to_rows().iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect();
    let record = CriterionRecord::new("cover_is_augmentation_quotient", format!("lambda{}", show_vector(&label)), verdict)
        .with("images", &epi.images)
        .with("h1", h1.describe())
        .with("generator_count", generators)
        .with("deck_action", action_rows)
        .with("modular_cyclic", modular)
        .with("rational_cyclic", rational);
    Ok(CoverCheck { label, pass, record })
}

/// All epimorphisms onto `ℤ/ℓ` are enumerated, so the verdict is certified.
pub fn check_torsion_case(s: &SurgeryDescription) -> Result<Battery> {
    let prep = prepare(s)?;
    let Some(ell) = square_order(&prep.ab) else {
        return Ok(Battery::not_applicable("torsion", format!("H1 = {} is not (Z/l)^2", prep.ab.describe())));
    };
    let epis = epimorphisms_from_structure(&prep.ab, ell, 0);
    let checks: Vec<Result<CoverCheck>> = epis.par_iter().map(|e| cover_record(s, &prep.group, e)).collect();
    let checks: Vec<CoverCheck> = checks.into_iter().collect::<Result<_>>()?;
    let mut records: Vec<CriterionRecord> = checks.iter().map(|c| c.record.clone()).collect();
    let l = ell as i64;
    let mut any_pass = false;
    for i in 0..epis.len() {
        for j in i + 1..epis.len() {
            let (a, b) = (&epis[i].covector, &epis[j].covector);
            let det = (a[0] * b[1] - a[1] * b[0]).rem_euclid(l);
            if det.gcd(&l) != 1 {
                continue;
            }
            let pass = checks[i].pass && checks[j].pass;
            any_pass |= pass;
            let verdict = if pass { RecordVerdict::Pass } else { RecordVerdict::Fail };
            records.push(CriterionRecord::new(
                "basis_pair",
                format!("lambda{} lambda{}", show_vector(&checks[i].label), show_vector(&checks[j].label)),
                verdict,
            ));
        }
    }
    let failing = checks.iter().filter(|c| !c.pass).count();
    let notes = vec![format!("{} epimorphisms onto Z/{ell}, {failing} with failing covers", epis.len())];
    let verdict = if any_pass { Verdict::Consistent } else { Verdict::Obstructed };
    Ok(Battery { battery: "torsion".into(), records, verdict, notes })
}
