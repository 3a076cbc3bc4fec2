//! Corpus to incidence matrix to network, as wired by the command-line tool.

use crate::corpus::{registry_from_corpus, PublicationRecord, UnitKind, UnitRegistry};
use crate::error::Result;
use crate::incidence::IncidenceMatrix;
use crate::ingest::{
    default_credits, derive_authorship, derive_citations_given, derive_citations_received,
    merge_credits, CreditMap,
};
use crate::network::{NetworkKind, NetworkMatrix};
use crate::project::{project, ProjectionConfig};

/// Derives the incidence matrix behind a network of `kind`.
///
/// For co-citation, in-corpus records are credited to their own units and
/// `sidecar` entries replace those defaults item by item. Units named only
/// in the sidecar join the registry.
pub fn incidence_for(
    corpus: &[PublicationRecord],
    kind: NetworkKind,
    unit: UnitKind,
    sidecar: Option<&CreditMap>,
) -> Result<IncidenceMatrix> {
    match kind {
        NetworkKind::Coauthorship => {
            derive_authorship(corpus, &registry_from_corpus(corpus, unit)?)
        }
        NetworkKind::Coupling => {
            derive_citations_given(corpus, &registry_from_corpus(corpus, unit)?)
        }
        NetworkKind::Cocitation => {
            let mut credits = default_credits(corpus, unit);
            let registry = match sidecar {
                None => registry_from_corpus(corpus, unit)?,
                Some(extra) => {
                    credits = merge_credits(credits, extra.clone());
                    let corpus_units = corpus.iter().flat_map(|r| r.units(unit).iter().cloned());
                    let sidecar_units = extra.values().flatten().cloned();
                    UnitRegistry::from_ids(unit, corpus_units.chain(sidecar_units))
                }
            };
            derive_citations_received(corpus, &registry, &credits)
        }
    }
}

pub fn build_network(
    corpus: &[PublicationRecord],
    kind: NetworkKind,
    unit: UnitKind,
    sidecar: Option<&CreditMap>,
    cfg: &ProjectionConfig,
) -> Result<NetworkMatrix> {
    project(&incidence_for(corpus, kind, unit, sidecar)?, cfg)
}
