//! Publication records and the registry of analyzed units.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One corpus entry.
///
/// `references` hold cited item ids, which need not be records of the same corpus.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PublicationRecord {
    pub id: String,
    pub authors: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub affiliations: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub venue: Option<String>,
    #[serde(default)]
    pub references: Vec<String>,
}

impl PublicationRecord {
    pub fn new(id: impl Into<String>, authors: &[&str]) -> Self {
        PublicationRecord {
            id: id.into(),
            authors: authors.iter().map(|a| a.to_string()).collect(),
            affiliations: None,
            venue: None,
            references: Vec::new(),
        }
    }

    pub fn with_references(mut self, references: &[&str]) -> Self {
        self.references = references.iter().map(|r| r.to_string()).collect();
        self
    }

    pub fn with_affiliations(mut self, affiliations: &[&str]) -> Self {
        self.affiliations = Some(affiliations.iter().map(|a| a.to_string()).collect());
        self
    }

    pub fn with_venue(mut self, venue: &str) -> Self {
        self.venue = Some(venue.to_string());
        self
    }

    /// Drops repeated authors, affiliations and references, keeping first occurrences.
    pub fn dedup(&mut self) {
        dedup_in_place(&mut self.authors);
        if let Some(affiliations) = self.affiliations.as_mut() {
            dedup_in_place(affiliations);
        }
        dedup_in_place(&mut self.references);
    }

    /// The units this record contributes under `kind`.
    ///
    /// A record without the field contributes no unit.
    pub fn units(&self, kind: UnitKind) -> &[String] {
        match kind {
            UnitKind::Author => &self.authors,
            UnitKind::Affiliation => self.affiliations.as_deref().unwrap_or(&[]),
            UnitKind::Venue => self.venue.as_slice(),
        }
    }
}

fn dedup_in_place(ids: &mut Vec<String>) {
    let mut seen = HashSet::with_capacity(ids.len());
    ids.retain(|id| seen.insert(id.clone()));
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum UnitKind {
    Author,
    Affiliation,
    Venue,
}

impl fmt::Display for UnitKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            UnitKind::Author => "author",
            UnitKind::Affiliation => "affiliation",
            UnitKind::Venue => "venue",
        })
    }
}

impl FromStr for UnitKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "author" => Ok(UnitKind::Author),
            "affiliation" => Ok(UnitKind::Affiliation),
            "venue" => Ok(UnitKind::Venue),
            other => Err(Error::Invalid(format!("unknown unit kind `{other}`"))),
        }
    }
}

/// Dense indexing of unit ids, ascending lexicographic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitRegistry {
    kind: UnitKind,
    ids: Vec<String>,
    index: HashMap<String, usize>,
}

impl UnitRegistry {
    pub fn from_ids<I, S>(kind: UnitKind, ids: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let sorted: BTreeSet<String> = ids.into_iter().map(Into::into).collect();
        let ids: Vec<String> = sorted.into_iter().collect();
        let index = ids
            .iter()
            .enumerate()
            .map(|(i, id)| (id.clone(), i))
            .collect();
        UnitRegistry { kind, ids, index }
    }

    pub fn kind(&self) -> UnitKind {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn ids(&self) -> &[String] {
        &self.ids
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.index.get(id).copied()
    }

    pub fn id(&self, index: usize) -> &str {
        &self.ids[index]
    }
}

/// Collects every distinct unit of `kind` in the corpus.
///
/// Authors are always defined, so an empty corpus yields an empty author
/// registry. Affiliation and venue registries require at least one record
/// carrying the field.
pub fn registry_from_corpus(corpus: &[PublicationRecord], kind: UnitKind) -> Result<UnitRegistry> {
    let present = match kind {
        UnitKind::Author => true,
        UnitKind::Affiliation => corpus.iter().any(|r| r.affiliations.is_some()),
        UnitKind::Venue => corpus.iter().any(|r| r.venue.is_some()),
    };
    if !present {
        return Err(Error::UnitKindAbsent(kind));
    }
    Ok(UnitRegistry::from_ids(
        kind,
        corpus.iter().flat_map(|r| r.units(kind).iter().cloned()),
    ))
}
