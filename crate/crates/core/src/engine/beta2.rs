//! `H₁ ≅ ℤ²`: for some basis `(f_x, f_y)` of `Hom(π, ℤ)` both infinite
//! cyclic covers must have cyclic `H₁` over `ℚ[t^±]`.

use std::collections::BTreeMap;

use embedcheck_algebra::{Field, LaurentPid, PrimeField, Rationals};
use rayon::prelude::*;

use super::{free_images, prepare, show_vector, Battery, CriterionRecord, ModuleData, RecordVerdict, Verdict};
use crate::catalog::SurgeryDescription;
use crate::crowell::infinite_cyclic_cover_homology;
use crate::error::Result;
use crate::presentation::{primitive_covectors, GroupPresentation};

/// Characteristics reported next to the rational data.
const REPORTED_PRIMES: [u64; 2] = [2, 3];

struct CovectorData {
    rational: ModuleData,
    modular: BTreeMap<String, ModuleData>,
}

fn module_over<F: Field + Clone>(group: &GroupPresentation, f: &[i64], field: F) -> Result<ModuleData> {
    let pid = LaurentPid::new(field.clone());
    Ok(ModuleData::new(&infinite_cyclic_cover_homology(group, f, field)?, &pid))
}

fn covector_data(group: &GroupPresentation, f: &[i64]) -> Result<CovectorData> {
    let rational = module_over(group, f, Rationals)?;
    let mut modular = BTreeMap::new();
    for p in REPORTED_PRIMES {
        modular.insert(format!("F_{p}"), module_over(group, f, PrimeField::new(p)?)?);
    }
    Ok(CovectorData { rational, modular })
}

/// Every basis with entries in `[-bound, bound]` in designated-basis
/// coordinates, up to sign and order, is tested.
pub fn check_beta2(s: &SurgeryDescription, bound: i64) -> Result<Battery> {
    let prep = prepare(s)?;
    if prep.ab.free_rank != 2 || !prep.ab.torsion.is_empty() {
        return Ok(Battery::not_applicable("beta2", format!("H1 = {} is not Z^2", prep.ab.describe())));
    }
    let covectors = primitive_covectors(2, bound);
    let data: Vec<Result<CovectorData>> = covectors
        .par_iter()
        .map(|c| covector_data(&prep.group, &free_images(s, &prep.ab, c)))
        .collect();
    let data: Vec<CovectorData> = data.into_iter().collect::<Result<_>>()?;
    let mut records = Vec::new();
    for i in 0..covectors.len() {
        for j in i + 1..covectors.len() {
            let (a, b) = (&covectors[i], &covectors[j]);
            if (a[0] * b[1] - a[1] * b[0]).abs() != 1 {
                continue;
            }
            let (x, y) = (&data[i], &data[j]);
            let pass = x.rational.is_cyclic() && y.rational.is_cyclic();
            let verdict = if pass { RecordVerdict::Pass } else { RecordVerdict::Fail };
            records.push(
                CriterionRecord::new("cyclic_cover_modules", format!("x={} y={}", show_vector(a), show_vector(b)), verdict)
                    .with("x_module", &x.rational)
                    .with("y_module", &y.rational)
                    .with("x_modular", &x.modular)
                    .with("y_modular", &y.modular),
            );
        }
    }
    let verdict = if records.iter().any(|r| r.verdict == RecordVerdict::Pass) {
        Verdict::ConsistentWithinBound
    } else {
        Verdict::FailsAllBasesWithinBound
    };
    let notes = vec![format!(
        "bases enumerated up to sign and order with entries in [-{bound}, {bound}] on the designated basis; cyclicity decided over Q"
    )];
    Ok(Battery { battery: "beta2".into(), records, verdict, notes })
}
