//! Corpus files and the three incidence-matrix derivations.
//!
//! A corpus file holds one JSON object per line:
//!
//! ```text
//! {"id":"P1","authors":["R1","R2"],"venue":"J1","references":["X","Y"]}
//! ```
//!
//! `affiliations`, `venue` and `references` are optional. Blank lines are
//! ignored.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fs;
use std::io::{BufRead, BufReader, Write};
use std::path::Path;

use crate::corpus::{PublicationRecord, UnitKind, UnitRegistry};
use crate::error::{Error, Result};
use crate::incidence::{IncidenceMatrix, Semantics};

/// Maps a cited item id to the units credited for it (co-citation).
pub type CreditMap = BTreeMap<String, Vec<String>>;

pub fn parse_corpus(path: impl AsRef<Path>) -> Result<Vec<PublicationRecord>> {
    let path = path.as_ref();
    let file = fs::File::open(path).map_err(|e| Error::io(path, e))?;
    read_corpus(BufReader::new(file)).map_err(|e| match e {
        Error::Io { source, .. } => Error::io(path, source),
        other => other,
    })
}

pub fn read_corpus(reader: impl BufRead) -> Result<Vec<PublicationRecord>> {
    let mut records = Vec::new();
    let mut seen = HashSet::new();
    for (n, line) in reader.lines().enumerate() {
        let line_no = n + 1;
        let line = line.map_err(|e| Error::io("<corpus>", e))?;
        if line.trim().is_empty() {
            continue;
        }
        let mut record: PublicationRecord =
            serde_json::from_str(&line).map_err(|e| Error::Parse {
                line: line_no,
                message: e.to_string(),
            })?;
        if record.id.is_empty() {
            return Err(Error::Parse {
                line: line_no,
                message: "empty publication id".into(),
            });
        }
        if !seen.insert(record.id.clone()) {
            return Err(Error::DuplicateId(record.id));
        }
        record.dedup();
        records.push(record);
    }
    Ok(records)
}

/// Serializes records in the corpus file format, one line each.
pub fn write_corpus(records: &[PublicationRecord], mut out: impl Write) -> std::io::Result<()> {
    for record in records {
        serde_json::to_writer(&mut out, record)?;
        out.write_all(b"\n")?;
    }
    Ok(())
}

/// Reads a co-citation credit sidecar: `item-id<TAB>unit-id` per line.
pub fn parse_credits(path: impl AsRef<Path>) -> Result<CreditMap> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    read_credits(&text)
}

pub fn read_credits(text: &str) -> Result<CreditMap> {
    let mut credits = CreditMap::new();
    for (n, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let (item, unit) = line
            .split_once('\t')
            .filter(|(item, unit)| !item.is_empty() && !unit.is_empty() && !unit.contains('\t'))
            .ok_or_else(|| Error::Parse {
                line: n + 1,
                message: "expected `item-id<TAB>unit-id`".into(),
            })?;
        let units = credits.entry(item.to_string()).or_default();
        if !units.iter().any(|u| u == unit) {
            units.push(unit.to_string());
        }
    }
    Ok(credits)
}

/// Credits every corpus record to its own units of `kind`.
pub fn default_credits(corpus: &[PublicationRecord], kind: UnitKind) -> CreditMap {
    corpus
        .iter()
        .filter(|r| !r.units(kind).is_empty())
        .map(|r| (r.id.clone(), r.units(kind).to_vec()))
        .collect()
}

/// Overlays sidecar credits on the defaults. An item listed in the sidecar
/// takes the sidecar's units only.
pub fn merge_credits(mut base: CreditMap, sidecar: CreditMap) -> CreditMap {
    base.extend(sidecar);
    base
}

fn unit_indices<'a>(
    registry: &UnitRegistry,
    units: impl IntoIterator<Item = &'a String>,
) -> Result<Vec<usize>> {
    let mut seen = BTreeSet::new();
    for unit in units {
        let i = registry
            .index_of(unit)
            .ok_or_else(|| Error::UnknownUnit(unit.clone()))?;
        seen.insert(i);
    }
    Ok(seen.into_iter().collect())
}

fn distinct(ids: &[String]) -> impl Iterator<Item = &String> {
    let mut seen = HashSet::new();
    ids.iter().filter(move |id| seen.insert(id.as_str()))
}

/// Authorship matrix over the registry's unit kind; one column per record, in corpus order.
pub fn derive_authorship(
    corpus: &[PublicationRecord],
    registry: &UnitRegistry,
) -> Result<IncidenceMatrix> {
    let kind = registry.kind();
    let mut triplets = Vec::new();
    for (k, record) in corpus.iter().enumerate() {
        for i in unit_indices(registry, record.units(kind))? {
            triplets.push((i, k, 1));
        }
    }
    IncidenceMatrix::from_triplets(
        Semantics::Authorship,
        registry.ids().to_vec(),
        corpus.iter().map(|r| r.id.clone()).collect(),
        triplets,
    )
}

/// Coupling matrix: columns are the distinct cited items (sorted) and
/// `c_ik` counts the records of unit `i` citing item `k`.
pub fn derive_citations_given(
    corpus: &[PublicationRecord],
    registry: &UnitRegistry,
) -> Result<IncidenceMatrix> {
    let kind = registry.kind();
    let items: Vec<String> = corpus
        .iter()
        .flat_map(|r| r.references.iter().cloned())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let item_index: BTreeMap<&str, usize> = items
        .iter()
        .enumerate()
        .map(|(k, id)| (id.as_str(), k))
        .collect();

    let mut triplets = Vec::new();
    for record in corpus {
        let units = unit_indices(registry, record.units(kind))?;
        if units.is_empty() {
            continue;
        }
        for reference in distinct(&record.references) {
            let k = item_index[reference.as_str()];
            triplets.extend(units.iter().map(|&i| (i, k, 1)));
        }
    }
    IncidenceMatrix::from_triplets(
        Semantics::CitationsGivenByUnit,
        registry.ids().to_vec(),
        items,
        triplets,
    )
}

/// Co-citation matrix: columns are the citing records (corpus order) and
/// `c_ik` counts the references of record `k` credited to unit `i`.
///
/// References without a credit entry cite no analyzed unit and are skipped.
pub fn derive_citations_received(
    corpus: &[PublicationRecord],
    registry: &UnitRegistry,
    credits: &CreditMap,
) -> Result<IncidenceMatrix> {
    let mut triplets = Vec::new();
    for (k, record) in corpus.iter().enumerate() {
        for reference in distinct(&record.references) {
            if let Some(units) = credits.get(reference) {
                for i in unit_indices(registry, units)? {
                    triplets.push((i, k, 1));
                }
            }
        }
    }
    IncidenceMatrix::from_triplets(
        Semantics::CitationsReceivedByUnit,
        registry.ids().to_vec(),
        corpus.iter().map(|r| r.id.clone()).collect(),
        triplets,
    )
}
