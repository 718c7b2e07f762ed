//! Homology handles: an abelian embedding exists iff the commutator subgroup
//! is perfect, i.e. the infinite cyclic cover has vanishing `H₁`.

use embedcheck_algebra::ring::primes_up_to;
use embedcheck_algebra::{bareiss, Field, LaurentPid, LaurentPoly, Matrix, PrimeField, Rationals};
use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::Signed;
use rayon::prelude::*;

use super::{free_images, prepare, Battery, Config, CriterionRecord, ModuleData, RecordVerdict, Verdict};
use crate::catalog::SurgeryDescription;
use crate::crowell::{infinite_cyclic_cover_homology, integral_presentation};
use crate::error::Result;
use crate::presentation::GroupPresentation;

/// Maximal minors tried when looking for a unit in the integral Fitting ideal.
const MINOR_LIMIT: usize = 20_000;

fn cover_module<F: Field + Clone>(group: &GroupPresentation, f: &[i64], field: F) -> Result<ModuleData> {
    let pid = LaurentPid::new(field.clone());
    let m = infinite_cyclic_cover_homology(group, f, field)?;
    Ok(ModuleData::new(&m, &pid))
}

fn field_record(tested: String, data: ModuleData) -> CriterionRecord {
    let verdict = if data.is_zero() { RecordVerdict::Pass } else { RecordVerdict::Obstructed };
    CriterionRecord::new("cover_homology_vanishes", tested, verdict)
        .with("free_rank", data.free_rank)
        .with("factors", data.factors)
}

fn is_unit(p: &LaurentPoly<BigInt>) -> bool {
    p.as_monomial().is_some_and(|(_, c)| c.abs() == BigInt::from(1))
}

/// A maximal minor `±t^k` of the integral presentation, proving the module
/// over `ℤ[t^±]` is zero.
fn unit_minor(m: &Matrix<LaurentPoly<BigInt>>) -> Option<(Vec<usize>, String)> {
    let c = m.cols();
    if c == 0 {
        return Some((Vec::new(), "1".into()));
    }
    if m.rows() < c {
        return None;
    }
    let cols: Vec<usize> = (0..c).collect();
    (0..m.rows()).combinations(c).take(MINOR_LIMIT).find_map(|rows| {
        let d = bareiss::determinant(&m.select(&rows, &cols), 1);
        is_unit(&d).then(|| (rows, d.to_text(&["t"])))
    })
}

/// Vanishing of `H₁` of the infinite cyclic cover over `ℚ` and `F_p` for
/// `p ≤ prime_bound`, followed by an integral certificate when possible.
pub fn check_beta1(s: &SurgeryDescription, cfg: &Config) -> Result<Battery> {
    let prep = prepare(s)?;
    if prep.ab.free_rank != 1 || !prep.ab.torsion.is_empty() {
        return Ok(Battery::not_applicable("homology-handle", format!("H1 = {} is not Z", prep.ab.describe())));
    }
    let f = free_images(s, &prep.ab, &[1]);
    let mut records = vec![field_record("Q".into(), cover_module(&prep.group, &f, Rationals)?)];
    let primes = primes_up_to(cfg.prime_bound);
    let per_prime: Vec<Result<CriterionRecord>> = primes
        .par_iter()
        .map(|&p| {
            let field = PrimeField::new(p).expect("prime");
            Ok(field_record(format!("F_{p}"), cover_module(&prep.group, &f, field)?))
        })
        .collect();
    for r in per_prime {
        records.push(r?);
    }
    let mut notes = Vec::new();
    let verdict = if records.iter().any(|r| r.verdict == RecordVerdict::Obstructed) {
        Verdict::Obstructed
    } else {
        match integral_presentation(&prep.group, &f)?.as_ref().and_then(unit_minor) {
            Some((rows, minor)) => {
                records.push(
                    CriterionRecord::new("commutator_subgroup_perfect", "Z[t,t^-1]", RecordVerdict::Pass)
                        .with("minor_rows", rows)
                        .with("minor", minor),
                );
                Verdict::Consistent
            }
            None => {
                notes.push(format!(
                    "no unit maximal minor found; vanishing checked over Q and F_p for p <= {}",
                    cfg.prime_bound
                ));
                Verdict::ConsistentWithinBound
            }
        }
    };
    Ok(Battery { battery: "homology-handle".into(), records, verdict, notes })
}
