//! Necessary-condition batteries for abelian embeddings, dispatched on the
//! shape of `H₁(M; ℤ)`, and the report they produce.

mod beta1;
mod beta2;
pub mod fitting;
mod gk;
mod higher;
mod torsion;

use std::collections::BTreeMap;
use std::fmt::Write as _;

use embedcheck_algebra::{Field, LaurentPid};
use num_traits::ToPrimitive;
use serde::Serialize;
use serde_json::Value;

use crate::catalog::{covector_from_basis_values, surgered_group, SurgeryDescription};
use crate::crowell::PidModule;
use crate::error::Result;
use crate::presentation::{abelianize, AbelianStructure, Epimorphism, GroupPresentation};

pub use beta1::check_beta1;
pub use beta2::check_beta2;
pub use gk::{verify_gk_complex, GkRecord};
pub use higher::{check_beta3plus, completion_rank};
pub use torsion::{check_torsion_case, cover_record, CoverCheck};

pub const SCHEMA_VERSION: &str = "embedcheck-report/1";

/// Search bounds shared by all batteries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Config {
    /// Largest absolute entry of a tested basis covector.
    pub basis_bound: i64,
    /// Primes up to this bound are used for the homology-handle check.
    pub prime_bound: u64,
}

impl Default for Config {
    fn default() -> Self {
        Config { basis_bound: 3, prime_bound: 97 }
    }
}

/// Outcome of a single tested basis, epimorphism or field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum RecordVerdict {
    Pass,
    Fail,
    Obstructed,
    NotApplicable,
}

/// Overall outcome of a battery.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    /// A complete finite check failed.
    Obstructed,
    /// A complete finite check passed.
    Consistent,
    ConsistentWithinBound,
    FailsAllBasesWithinBound,
    NotApplicable,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Obstructed => "OBSTRUCTED",
            Verdict::Consistent => "CONSISTENT",
            Verdict::ConsistentWithinBound => "CONSISTENT_WITHIN_BOUND",
            Verdict::FailsAllBasesWithinBound => "FAILS_ALL_BASES_WITHIN_BOUND",
            Verdict::NotApplicable => "NOT_APPLICABLE",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CriterionRecord {
    pub criterion: String,
    /// Basis, epimorphism or coefficient field the record is about.
    pub tested: String,
    /// Certificate data, keyed by name.
    pub invariants: BTreeMap<String, Value>,
    pub verdict: RecordVerdict,
}

impl CriterionRecord {
    pub fn new(criterion: &str, tested: impl Into<String>, verdict: RecordVerdict) -> Self {
        CriterionRecord { criterion: criterion.into(), tested: tested.into(), invariants: BTreeMap::new(), verdict }
    }

    pub fn with(mut self, key: &str, value: impl Serialize) -> Self {
        self.invariants.insert(key.into(), serde_json::to_value(value).expect("serializable invariant"));
        self
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Battery {
    pub battery: String,
    pub records: Vec<CriterionRecord>,
    pub verdict: Verdict,
    pub notes: Vec<String>,
}

impl Battery {
    fn not_applicable(name: &str, why: impl Into<String>) -> Self {
        Battery { battery: name.into(), records: Vec::new(), verdict: Verdict::NotApplicable, notes: vec![why.into()] }
    }

    /// Records with the given criterion id.
    pub fn records_for<'a>(&'a self, criterion: &'a str) -> impl Iterator<Item = &'a CriterionRecord> + 'a {
        self.records.iter().filter(move |r| r.criterion == criterion)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ObstructionReport {
    pub schema: &'static str,
    pub name: String,
    pub beta: usize,
    pub torsion: Vec<String>,
    pub h1: String,
    pub config: Config,
    pub battery: String,
    pub records: Vec<CriterionRecord>,
    pub verdict: Verdict,
    pub notes: Vec<String>,
}

impl ObstructionReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{}: H1 = {} ({} battery)", self.name, self.h1, self.battery);
        for r in &self.records {
            let data: Vec<String> = r.invariants.iter().map(|(k, v)| format!("{k}={v}")).collect();
            let _ = writeln!(out, "  [{:?}] {} {}: {}", r.verdict, r.criterion, r.tested, data.join(" "));
        }
        for n in &self.notes {
            let _ = writeln!(out, "  note: {n}");
        }
        let _ = writeln!(out, "verdict: {}", self.verdict.as_str());
        out
    }
}

/// Free rank and nontrivial invariant factors of a module over `F[t^±]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ModuleData {
    pub free_rank: usize,
    pub factors: Vec<String>,
}

impl ModuleData {
    pub fn new<F: Field>(m: &PidModule<F::Elem>, pid: &LaurentPid<F>) -> Self {
        ModuleData { free_rank: m.free_rank, factors: m.factor_texts(pid) }
    }

    /// At most one generator.
    pub fn is_cyclic(&self) -> bool {
        self.free_rank + self.factors.len() <= 1
    }

    pub fn is_zero(&self) -> bool {
        self.free_rank == 0 && self.factors.is_empty()
    }
}

/// Group and homology every battery starts from.
pub(crate) struct Prepared {
    pub group: GroupPresentation,
    pub ab: AbelianStructure,
}

pub(crate) fn prepare(s: &SurgeryDescription) -> Result<Prepared> {
    let group = surgered_group(s)?;
    let ab = abelianize(&group);
    Ok(Prepared { group, ab })
}

/// Generator images in `ℤ` of the map taking `values` on the designated basis,
/// or on the canonical free coordinates when the entry has no usable basis.
pub(crate) fn free_images(s: &SurgeryDescription, ab: &AbelianStructure, values: &[i64]) -> Vec<i64> {
    let covector = covector_from_basis_values(s, ab, values).unwrap_or_else(|| {
        let mut c = values.to_vec();
        c.resize(ab.num_coordinates(), 0);
        c
    });
    Epimorphism::from_covector(ab, 0, covector).images
}

pub(crate) fn show_vector(v: &[i64]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

/// Runs the battery that applies to the shape of `H₁`.
pub fn run_report(s: &SurgeryDescription, cfg: &Config) -> Result<ObstructionReport> {
    let Prepared { ab, .. } = prepare(s)?;
    let beta = ab.free_rank;
    let battery = if ab.is_trivial() {
        Battery {
            battery: "homology-sphere".into(),
            records: Vec::new(),
            verdict: Verdict::Consistent,
            notes: vec!["integral homology spheres bound contractible 4-manifolds and always embed abelianly".into()],
        }
    } else if beta == 0 && ab.square_torsion_order().is_some() {
        check_torsion_case(s)?
    } else if !ab.torsion.is_empty() {
        Battery::not_applicable("none", format!("H1 = {} is outside the classified shapes", ab.describe()))
    } else {
        match beta {
            1 => check_beta1(s, cfg)?,
            2 => check_beta2(s, cfg.basis_bound)?,
            3 | 4 | 6 => check_beta3plus(s, cfg.basis_bound)?,
            _ => Battery::not_applicable("none", format!("beta = {beta} admits no abelian embedding shape")),
        }
    };
    Ok(ObstructionReport {
        schema: SCHEMA_VERSION,
        name: s.name.clone(),
        beta,
        torsion: ab.torsion.iter().map(|d| d.to_string()).collect(),
        h1: ab.describe(),
        config: *cfg,
        battery: battery.battery,
        records: battery.records,
        verdict: battery.verdict,
        notes: battery.notes,
    })
}

/// `ℓ` for `H₁ ≅ (ℤ/ℓ)²`.
pub(crate) fn square_order(ab: &AbelianStructure) -> Option<u64> {
    ab.square_torsion_order().and_then(|d| d.to_u64())
}
