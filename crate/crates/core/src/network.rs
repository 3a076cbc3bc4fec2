//! Weighted unit-by-unit networks produced by projection.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::scheme::CountingScheme;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NetworkKind {
    Coauthorship,
    Coupling,
    Cocitation,
}

impl fmt::Display for NetworkKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NetworkKind::Coauthorship => "coauthorship",
            NetworkKind::Coupling => "coupling",
            NetworkKind::Cocitation => "cocitation",
        })
    }
}

impl FromStr for NetworkKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "coauthorship" => Ok(NetworkKind::Coauthorship),
            "coupling" => Ok(NetworkKind::Coupling),
            "cocitation" => Ok(NetworkKind::Cocitation),
            other => Err(Error::Invalid(format!("unknown network kind `{other}`"))),
        }
    }
}

/// A weighted network over the units of an incidence matrix.
///
/// Symmetric networks store each unordered pair once as `(i, j)` with
/// `i < j`. Asymmetric networks (self-adjusted fractional counting) store
/// ordered pairs. Edges are sorted, positive and never on the diagonal.
#[derive(Debug, Clone, PartialEq)]
pub struct NetworkMatrix {
    unit_ids: Vec<String>,
    scheme: CountingScheme,
    kind: NetworkKind,
    symmetric: bool,
    edges: Vec<(usize, usize, f64)>,
}

impl NetworkMatrix {
    /// Validates and sorts `edges`.
    ///
    /// For symmetric schemes a pair may be given in either orientation but
    /// only once.
    pub fn from_edges(
        unit_ids: Vec<String>,
        scheme: CountingScheme,
        kind: NetworkKind,
        edges: Vec<(usize, usize, f64)>,
    ) -> Result<Self> {
        let symmetric = scheme.is_symmetric();
        let n = unit_ids.len();
        let mut edges: Vec<_> = edges
            .into_iter()
            .map(|(i, j, w)| {
                if symmetric && j < i {
                    (j, i, w)
                } else {
                    (i, j, w)
                }
            })
            .collect();
        for &(i, j, w) in &edges {
            if i >= n || j >= n {
                return Err(Error::Invalid(format!("edge ({i}, {j}) outside {n} units")));
            }
            if i == j {
                return Err(Error::Invalid(format!("self-link on `{}`", unit_ids[i])));
            }
            if !(w > 0.0 && w.is_finite()) {
                return Err(Error::Invalid(format!(
                    "non-positive weight {w} on ({i}, {j})"
                )));
            }
        }
        edges.sort_by_key(|&(i, j, _)| (i, j));
        if let Some(win) = edges
            .windows(2)
            .find(|w| (w[0].0, w[0].1) == (w[1].0, w[1].1))
        {
            return Err(Error::Invalid(format!(
                "duplicate edge ({}, {})",
                unit_ids[win[0].0], unit_ids[win[0].1]
            )));
        }
        Ok(Self::from_sorted(unit_ids, scheme, kind, edges))
    }

    pub(crate) fn from_sorted(
        unit_ids: Vec<String>,
        scheme: CountingScheme,
        kind: NetworkKind,
        edges: Vec<(usize, usize, f64)>,
    ) -> Self {
        NetworkMatrix {
            unit_ids,
            scheme,
            kind,
            symmetric: scheme.is_symmetric(),
            edges,
        }
    }

    pub fn size(&self) -> usize {
        self.unit_ids.len()
    }

    pub fn unit_ids(&self) -> &[String] {
        &self.unit_ids
    }

    pub fn unit_index(&self, id: &str) -> Option<usize> {
        self.unit_ids
            .binary_search_by(|u| u.as_str().cmp(id))
            .ok()
            .or_else(|| {
                // Registries are sorted; fall back for hand-built networks.
                self.unit_ids.iter().position(|u| u == id)
            })
    }

    pub fn scheme(&self) -> CountingScheme {
        self.scheme
    }

    pub fn kind(&self) -> NetworkKind {
        self.kind
    }

    pub fn is_symmetric(&self) -> bool {
        self.symmetric
    }

    /// Stored edges, sorted by `(i, j)`.
    pub fn edges(&self) -> &[(usize, usize, f64)] {
        &self.edges
    }

    /// Number of stored pairs.
    pub fn link_count(&self) -> usize {
        self.edges.len()
    }

    pub fn total_weight(&self) -> f64 {
        self.edges.iter().map(|e| e.2).sum()
    }

    /// Weight of `(i, j)`; zero for absent pairs and the diagonal.
    pub fn weight(&self, i: usize, j: usize) -> f64 {
        if i == j {
            return 0.0;
        }
        let key = if self.symmetric && j < i {
            (j, i)
        } else {
            (i, j)
        };
        self.edges
            .binary_search_by_key(&key, |&(a, b, _)| (a, b))
            .map_or(0.0, |pos| self.edges[pos].2)
    }

    pub fn weight_by_id(&self, a: &str, b: &str) -> Option<f64> {
        Some(self.weight(self.unit_index(a)?, self.unit_index(b)?))
    }

    /// Sum of each unit's link weights (outgoing for asymmetric networks).
    pub fn row_totals(&self) -> Vec<f64> {
        let mut totals = vec![0.0; self.size()];
        for &(i, j, w) in &self.edges {
            totals[i] += w;
            if self.symmetric {
                totals[j] += w;
            }
        }
        totals
    }

    /// `(neighbor, weight)` pairs of unit `i`, neighbors ascending.
    pub fn neighbors(&self, i: usize) -> Vec<(usize, f64)> {
        let mut out: Vec<(usize, f64)> = self
            .edges
            .iter()
            .filter_map(|&(a, b, w)| {
                if a == i {
                    Some((b, w))
                } else if self.symmetric && b == i {
                    Some((a, w))
                } else {
                    None
                }
            })
            .collect();
        out.sort_by_key(|&(j, _)| j);
        out
    }
}
