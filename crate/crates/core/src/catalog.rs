//! Surgery descriptions: a group presentation with meridians, longitudes and
//! integral framings, or a direct presentation of the surgered manifold's
//! group with a designated homology basis.
//!
//! Catalog format (UTF-8, one `key = value` per line, split at the first
//! `=`; `#` starts a comment):
//!
//! ```text
//! [entry]
//! name = 4^2_1
//! kind = link            # or: direct
//! gens = x, y
//! rel = (xy)^2 = (yx)^2  # repeated; `u = v` means u*v^-1
//! meridian = x           # repeated, one per component
//! longitude = (xy)^2 x^-2
//! framing = 0,0
//! basis = x, y           # direct entries only, optional
//! ```

use std::path::Path;

use embedcheck_algebra::{smith_normal_form, IntMatrix, Integers, Matrix};
use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{EmbedError, Result};
use crate::presentation::{abelianize, cokernel_of_rows, parse_generator_list, parse_relation, AbelianStructure, GroupPresentation};
use crate::word::Word;

const SHIPPED: &str = include_str!("../data/paper.cat");

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EntryKind {
    Link,
    Direct,
}

impl EntryKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            EntryKind::Link => "link",
            EntryKind::Direct => "direct",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurgeryDescription {
    pub name: String,
    pub kind: EntryKind,
    /// The link group for `Link` entries, the manifold group for `Direct`.
    pub group: GroupPresentation,
    pub meridians: Vec<Word>,
    pub longitudes: Vec<Word>,
    pub framings: Vec<i64>,
    /// Designated homology basis for direct entries.
    pub basis: Vec<Word>,
}

impl SurgeryDescription {
    pub fn components(&self) -> usize {
        self.meridians.len()
    }

    /// Meridians for links, the declared basis for direct entries.
    pub fn designated_basis(&self) -> &[Word] {
        match self.kind {
            EntryKind::Link => &self.meridians,
            EntryKind::Direct => &self.basis,
        }
    }
}

/// Link group plus `mᵢ^fᵢ·λᵢ` for each component.
pub fn surgered_group(s: &SurgeryDescription) -> Result<GroupPresentation> {
    check_counts(s)?;
    if s.kind == EntryKind::Direct {
        return Ok(s.group.clone());
    }
    let extra = s.meridians.iter().zip(&s.longitudes).zip(&s.framings).map(|((m, l), &f)| m.pow(f).mul(l));
    Ok(s.group.with_relators(extra))
}

fn check_counts(s: &SurgeryDescription) -> Result<()> {
    let c = s.meridians.len();
    if s.longitudes.len() != c || s.framings.len() != c {
        return Err(EmbedError::CountMismatch(format!(
            "{} meridians, {} longitudes, {} framings",
            c,
            s.longitudes.len(),
            s.framings.len()
        )));
    }
    Ok(())
}

/// Inverse of a square integer matrix with determinant ±1.
pub fn unimodular_inverse(m: &IntMatrix) -> Option<IntMatrix> {
    if m.rows() != m.cols() {
        return None;
    }
    let snf = smith_normal_form(&Integers, m);
    if snf.rank() != m.rows() || !snf.invariant_factors.iter().all(|d| d.is_one()) {
        return None;
    }
    // U·M·V = I, so M⁻¹ = V·U.
    Some(snf.v.mul(&Integers, &snf.u))
}

/// Symmetric matrix with framings on the diagonal and linking numbers off it,
/// read from the longitudes' classes in the link group's homology.
pub fn linking_matrix(s: &SurgeryDescription) -> Result<IntMatrix> {
    check_counts(s)?;
    if s.kind == EntryKind::Direct {
        return Err(EmbedError::OutOfRange("direct entries have no linking matrix".into()));
    }
    let mut out = raw_linking(s)?;
    for (i, f) in s.framings.iter().enumerate() {
        out[(i, i)] = BigInt::from(*f);
    }
    Ok(out)
}

/// Named violations of the entry invariants; empty when valid.
pub fn validate_entry(s: &SurgeryDescription) -> Vec<String> {
    let mut errs = Vec::new();
    if let Err(e) = check_counts(s) {
        errs.push(e.to_string());
        return errs;
    }
    match s.kind {
        EntryKind::Link => {
            if !s.basis.is_empty() {
                errs.push("basis is only allowed for direct entries".into());
            }
            match raw_linking(s) {
                Err(e) => errs.push(e.to_string()),
                Ok(lk) => {
                    let c = s.components();
                    for i in 0..c {
                        if !lk[(i, i)].is_zero() {
                            errs.push(format!("longitude {} has nonzero self-linking {}", i + 1, lk[(i, i)]));
                        }
                        for j in 0..i {
                            if lk[(i, j)] != lk[(j, i)] {
                                errs.push(format!("linking numbers of components {} and {} disagree", j + 1, i + 1));
                            }
                        }
                    }
                }
            }
            if errs.is_empty() {
                if let Err(e) = h1_of_surgery(s) {
                    errs.push(e.to_string());
                }
            }
        }
        EntryKind::Direct => {
            if s.components() != 0 {
                errs.push("direct entries take no meridians or longitudes".into());
            }
            let ab = abelianize(&s.group);
            if !s.basis.is_empty() && s.basis.len() != ab.num_coordinates() {
                errs.push(format!("basis has {} elements, homology {} needs {}", s.basis.len(), ab.describe(), ab.num_coordinates()));
            }
        }
    }
    errs
}

/// Longitude classes in meridian coordinates, self terms included.
fn raw_linking(s: &SurgeryDescription) -> Result<IntMatrix> {
    let c = s.components();
    let ab = abelianize(&s.group);
    let g = s.group.num_generators();
    if ab.free_rank != c || !ab.torsion.is_empty() {
        return Err(EmbedError::InvalidPresentation(format!("link group homology is {}, expected Z^{c}", ab.describe())));
    }
    let coords = |w: &Word| ab.coordinates(&w.exponent_sums(g));
    let mer = Matrix::from_rows((0..c).map(|i| s.meridians.iter().map(|m| coords(m)[i].clone()).collect()).collect(), c);
    let inv = unimodular_inverse(&mer)
        .ok_or_else(|| EmbedError::InvalidPresentation("meridians do not form a homology basis".into()))?;
    let lon = Matrix::from_rows((0..c).map(|i| s.longitudes.iter().map(|l| coords(l)[i].clone()).collect()).collect(), c);
    Ok(inv.mul(&Integers, &lon))
}

/// Homology of the surgered manifold, cross-checked against the cokernel of
/// the linking matrix for link entries.
pub fn h1_of_surgery(s: &SurgeryDescription) -> Result<AbelianStructure> {
    let ab = abelianize(&surgered_group(s)?);
    if s.kind == EntryKind::Link {
        let lk = linking_matrix(s)?;
        let expected = cokernel_of_rows(&lk);
        if expected.free_rank != ab.free_rank || expected.torsion != ab.torsion {
            return Err(EmbedError::InvalidPresentation(format!(
                "surgered homology {} differs from linking-matrix cokernel {} (inconsistent longitudes)",
                ab.describe(),
                expected.describe()
            )));
        }
    }
    Ok(ab)
}

pub fn shipped_catalog() -> Vec<SurgeryDescription> {
    load_catalog_str(SHIPPED).expect("shipped catalog is valid")
}

pub fn shipped_entry(name: &str) -> Result<SurgeryDescription> {
    shipped_catalog().into_iter().find(|e| e.name == name).ok_or_else(|| EmbedError::UnknownEntry(name.to_string()))
}

pub fn load_catalog(path: &Path) -> Result<Vec<SurgeryDescription>> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| EmbedError::Catalog { line: 0, msg: format!("cannot read {}: {e}", path.display()) })?;
    load_catalog_str(&text)
}

#[derive(Default)]
struct RawEntry {
    line: usize,
    name: Option<String>,
    kind: Option<EntryKind>,
    gens: Option<Vec<String>>,
    rels: Vec<(usize, String)>,
    meridians: Vec<(usize, String)>,
    longitudes: Vec<(usize, String)>,
    framing: Option<(usize, String)>,
    basis: Option<(usize, String)>,
}

impl RawEntry {
    fn build(self) -> Result<SurgeryDescription> {
        let at = |line: usize, msg: String| EmbedError::Catalog { line, msg };
        let name = self.name.ok_or_else(|| at(self.line, "entry without name".into()))?;
        let kind = self.kind.ok_or_else(|| at(self.line, format!("entry '{name}' has no kind")))?;
        let names = self.gens.ok_or_else(|| at(self.line, format!("entry '{name}' has no gens")))?;
        let word = |line: usize, text: &str| crate::word::parse_word(text, &names).map_err(|e| at(line, e.to_string()));
        let mut relators = Vec::new();
        for (line, text) in &self.rels {
            relators.extend(parse_relation(text, &names).map_err(|e| at(*line, e.to_string()))?);
        }
        let group = GroupPresentation::new(names.clone(), relators).map_err(|e| at(self.line, e.to_string()))?;
        let meridians = self.meridians.iter().map(|(l, t)| word(*l, t)).collect::<Result<Vec<_>>>()?;
        let longitudes = self.longitudes.iter().map(|(l, t)| word(*l, t)).collect::<Result<Vec<_>>>()?;
        let framings = match &self.framing {
            None => Vec::new(),
            Some((line, text)) => text
                .split(',')
                .map(|f| f.trim().parse::<i64>().map_err(|_| at(*line, format!("bad framing '{}' (integers only)", f.trim()))))
                .collect::<Result<Vec<_>>>()?,
        };
        let basis = match &self.basis {
            None => Vec::new(),
            Some((line, text)) => text.split(',').map(|t| word(*line, t)).collect::<Result<Vec<_>>>()?,
        };
        let entry = SurgeryDescription { name, kind, group, meridians, longitudes, framings, basis };
        let violations = validate_entry(&entry);
        if !violations.is_empty() {
            return Err(at(self.line, format!("entry '{}': {}", entry.name, violations.join("; "))));
        }
        Ok(entry)
    }
}

pub fn load_catalog_str(text: &str) -> Result<Vec<SurgeryDescription>> {
    let mut entries = Vec::new();
    let mut current: Option<RawEntry> = None;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        if content == "[entry]" {
            if let Some(e) = current.take() {
                entries.push(e.build()?);
            }
            current = Some(RawEntry { line, ..RawEntry::default() });
            continue;
        }
        let Some(e) = current.as_mut() else {
            return Err(EmbedError::Catalog { line, msg: "expected '[entry]'".into() });
        };
        let Some((key, value)) = content.split_once('=') else {
            return Err(EmbedError::Catalog { line, msg: format!("expected 'key = value', found '{content}'") });
        };
        let (key, value) = (key.trim(), value.trim().to_string());
        let dup = |present: bool| {
            if present {
                Err(EmbedError::Catalog { line, msg: format!("duplicate key '{key}'") })
            } else {
                Ok(())
            }
        };
        match key {
            "name" => {
                dup(e.name.is_some())?;
                e.name = Some(value);
            }
            "kind" => {
                dup(e.kind.is_some())?;
                e.kind = Some(match value.as_str() {
                    "link" => EntryKind::Link,
                    "direct" => EntryKind::Direct,
                    other => return Err(EmbedError::Catalog { line, msg: format!("unknown kind '{other}'") }),
                });
            }
            "gens" => {
                dup(e.gens.is_some())?;
                e.gens = Some(parse_generator_list(&value));
            }
            "rel" => e.rels.push((line, value)),
            "meridian" => e.meridians.push((line, value)),
            "longitude" => e.longitudes.push((line, value)),
            "framing" => {
                dup(e.framing.is_some())?;
                e.framing = Some((line, value));
            }
            "basis" => {
                dup(e.basis.is_some())?;
                e.basis = Some((line, value));
            }
            other => return Err(EmbedError::Catalog { line, msg: format!("unknown key '{other}'") }),
        }
    }
    if let Some(e) = current.take() {
        entries.push(e.build()?);
    }
    Ok(entries)
}

/// Canonical text: relators written as reduced words.
pub fn serialize_catalog(entries: &[SurgeryDescription]) -> String {
    let mut out = String::new();
    for (i, s) in entries.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        let names = s.group.names();
        let show = |w: &Word| w.display(names).to_string();
        out.push_str("[entry]\n");
        out.push_str(&format!("name = {}\n", s.name));
        out.push_str(&format!("kind = {}\n", s.kind.as_str()));
        out.push_str(&format!("gens = {}\n", names.join(", ")));
        for r in s.group.relators() {
            out.push_str(&format!("rel = {}\n", show(r)));
        }
        for m in &s.meridians {
            out.push_str(&format!("meridian = {}\n", show(m)));
        }
        for l in &s.longitudes {
            out.push_str(&format!("longitude = {}\n", show(l)));
        }
        if !s.framings.is_empty() {
            let f: Vec<String> = s.framings.iter().map(|x| x.to_string()).collect();
            out.push_str(&format!("framing = {}\n", f.join(",")));
        }
        if !s.basis.is_empty() {
            let b: Vec<String> = s.basis.iter().map(show).collect();
            out.push_str(&format!("basis = {}\n", b.join(", ")));
        }
    }
    out
}

/// Coordinates of the designated basis elements (columns) in the free part of
/// `ab`; `None` unless they form a basis of the free part.
pub fn designated_free_basis(s: &SurgeryDescription, ab: &AbelianStructure) -> Option<IntMatrix> {
    let basis = s.designated_basis();
    let r = ab.free_rank;
    if basis.len() != r {
        return None;
    }
    let g = s.group.num_generators();
    let cols: Vec<Vec<BigInt>> = basis.iter().map(|w| ab.coordinates(&w.exponent_sums(g))).collect();
    let m = Matrix::from_rows((0..r).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect(), r);
    unimodular_inverse(&m).map(|_| m)
}

/// Generator images of the covector that takes value `values[i]` on the
/// i-th designated basis element (free part only).
pub fn covector_from_basis_values(s: &SurgeryDescription, ab: &AbelianStructure, values: &[i64]) -> Option<Vec<i64>> {
    let b = designated_free_basis(s, ab)?;
    let inv = unimodular_inverse(&b)?;
    // Canonical covector c satisfies c·B = values, so c = values·B⁻¹.
    let r = ab.free_rank;
    let c: Vec<BigInt> = (0..r).map(|j| (0..r).map(|i| &inv[(i, j)] * values[i]).sum()).collect();
    let mut cov: Vec<i64> = c.iter().map(|x| x.to_i64().expect("small covector")).collect();
    cov.resize(ab.num_coordinates(), 0);
    Some(cov)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shipped_catalog_loads() {
        let names: Vec<String> = shipped_catalog().into_iter().map(|e| e.name).collect();
        for expected in ["unknot", "trefoil", "4^2_1", "5^2_1", "8^2_13", "9^3_21", "wh-reef", "M_2,4", "borromean"] {
            assert!(names.iter().any(|n| n == expected), "{expected} missing");
        }
    }

    #[test]
    fn count_mismatch_is_reported() {
        let text = "[entry]\nname = bad\nkind = link\ngens = a, b\nrel = [a,b]\nmeridian = a\nmeridian = b\nlongitude = b\nframing = 0,0\n";
        let err = load_catalog_str(text).unwrap_err();
        assert!(err.to_string().contains("count mismatch"), "{err}");
    }

    #[test]
    fn framing_contradiction_is_reported() {
        // Hopf link with a longitude carrying a meridian twist.
        let text = "[entry]\nname = bad\nkind = link\ngens = a, b\nrel = [a,b]\nmeridian = a\nmeridian = b\nlongitude = b a\nlongitude = a\nframing = 0,0\n";
        let err = load_catalog_str(text).unwrap_err();
        assert!(err.to_string().contains("self-linking"), "{err}");
        let rational = "[entry]\nname = q\nkind = link\ngens = a\nmeridian = a\nlongitude = 1\nframing = 1/2\n";
        assert!(matches!(load_catalog_str(rational), Err(EmbedError::Catalog { line: 7, .. })));
    }

    #[test]
    fn homology_of_basic_entries() {
        assert_eq!(h1_of_surgery(&shipped_entry("unknot").unwrap()).unwrap().describe(), "Z");
        assert_eq!(h1_of_surgery(&shipped_entry("4^2_1").unwrap()).unwrap().describe(), "Z/2 + Z/2");
        assert_eq!(h1_of_surgery(&shipped_entry("8^2_13").unwrap()).unwrap().describe(), "Z^2");
        assert_eq!(h1_of_surgery(&shipped_entry("M_2,4").unwrap()).unwrap().describe(), "Z/4 + Z/4");
    }

    #[test]
    fn round_trip() {
        let all = shipped_catalog();
        let text = serialize_catalog(&all);
        let again = load_catalog_str(&text).unwrap();
        assert_eq!(again, all);
        assert_eq!(serialize_catalog(&again), text);
    }
}
