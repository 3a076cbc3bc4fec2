//! Weighted bibliometric networks under full and fractional counting.
//!
//! A corpus of publication records is turned into a sparse unit-by-item
//! [`IncidenceMatrix`] (authorship, citations given, or citations received)
//! and projected onto a unit-by-unit [`NetworkMatrix`] under a
//! [`CountingScheme`]. Full counting gives every link weight one, so an
//! action spawning `n` links weighs `n`; fractional counting splits a weight
//! of one over those links.
//!
//! ```
//! use bibnet::{project, registry_from_corpus, derive_authorship};
//! use bibnet::{CountingScheme, ProjectionConfig, PublicationRecord, UnitKind};
//!
//! let corpus = vec![
//!     PublicationRecord::new("P1", &["R1", "R2", "R3"]),
//!     PublicationRecord::new("P2", &["R1", "R3"]),
//! ];
//! let registry = registry_from_corpus(&corpus, UnitKind::Author).unwrap();
//! let authorship = derive_authorship(&corpus, &registry).unwrap();
//! let net = project(&authorship, &ProjectionConfig::new(CountingScheme::FractionalMinusOne)).unwrap();
//! assert_eq!(net.weight_by_id("R1", "R3"), Some(1.5));
//! ```

pub mod analyze;
pub mod corpus;
pub mod error;
pub mod export;
pub mod incidence;
pub mod ingest;
pub mod network;
pub mod pipeline;
pub mod project;
pub mod report;
pub mod scheme;
pub mod synth;

pub use analyze::{contributions, count_link_pairs, rank_related, sweep};
pub use corpus::{registry_from_corpus, PublicationRecord, UnitKind, UnitRegistry};
pub use error::{Error, Result};
pub use export::Format;
pub use incidence::{IncidenceMatrix, Semantics};
pub use ingest::{
    derive_authorship, derive_citations_given, derive_citations_received, parse_corpus,
};
pub use network::{NetworkKind, NetworkMatrix};
pub use project::{project, project_matrix_form, Execution, ProjectionConfig};
pub use scheme::CountingScheme;
pub use synth::{generate, SynthConfig};
