//! Diagnostics over incidence matrices and projected networks: link counts
//! under a column-size threshold, relatedness rankings and the per-item
//! decomposition of a coupling weight.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::incidence::{IncidenceMatrix, Semantics};
use crate::network::NetworkMatrix;
use crate::project::{column_kept, project, ProjectionConfig};
use crate::scheme::CountingScheme;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LinkCount {
    pub publications_kept: usize,
    /// Unweighted co-authorship links: every column's pairs counted separately.
    pub link_pairs: u64,
}

fn require_authorship(m: &IncidenceMatrix) -> Result<()> {
    if m.semantics() != Semantics::Authorship {
        return Err(Error::Invalid(format!(
            "link counting needs an authorship matrix, got {}",
            m.semantics()
        )));
    }
    Ok(())
}

/// Counts multi-unit columns with at most `threshold` units and the unit
/// pairs they spawn.
pub fn count_link_pairs(m: &IncidenceMatrix, threshold: Option<usize>) -> Result<LinkCount> {
    require_authorship(m)?;
    let mut count = LinkCount {
        publications_kept: 0,
        link_pairs: 0,
    };
    for k in 0..m.n_cols() {
        if column_kept(m, k, threshold) {
            let n = m.distinct_units(k) as u64;
            count.publications_kept += 1;
            count.link_pairs += n * (n - 1) / 2;
        }
    }
    Ok(count)
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    /// `None` is the unbounded row.
    pub threshold: Option<usize>,
    pub publications_kept: usize,
    pub publications_pct: f64,
    pub link_pairs_kept: u64,
    pub link_pairs_pct: f64,
    /// Total fractional action weight (sum of all units' link weights).
    pub fractional_weight_kept: f64,
    pub fractional_weight_pct: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Sweep {
    /// All columns, including those with fewer than two units.
    pub total_records: usize,
    pub rows: Vec<SweepRow>,
}

fn pct(part: f64, whole: f64) -> f64 {
    if whole == 0.0 {
        100.0
    } else {
        100.0 * part / whole
    }
}

fn fractional_action_weight(m: &IncidenceMatrix, threshold: Option<usize>) -> Result<f64> {
    if threshold.is_some_and(|t| t < 2) {
        return Ok(0.0);
    }
    let cfg = ProjectionConfig {
        max_column_margin: threshold,
        ..ProjectionConfig::new(CountingScheme::FractionalMinusOne)
    };
    Ok(project(m, &cfg)?.row_totals().iter().sum())
}

/// One row per threshold plus the unbounded row, percentages relative to the latter.
pub fn sweep(m: &IncidenceMatrix, thresholds: &[usize]) -> Result<Sweep> {
    require_authorship(m)?;
    if thresholds.contains(&0) {
        return Err(Error::Invalid("thresholds must be positive".into()));
    }
    if thresholds.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::NonIncreasingThresholds);
    }

    let all = count_link_pairs(m, None)?;
    let all_weight = fractional_action_weight(m, None)?;
    let mut rows = Vec::with_capacity(thresholds.len() + 1);
    for threshold in thresholds.iter().copied().map(Some).chain([None]) {
        let (count, weight) = match threshold {
            None => (all, all_weight),
            t => (count_link_pairs(m, t)?, fractional_action_weight(m, t)?),
        };
        rows.push(SweepRow {
            threshold,
            publications_kept: count.publications_kept,
            publications_pct: pct(count.publications_kept as f64, all.publications_kept as f64),
            link_pairs_kept: count.link_pairs,
            link_pairs_pct: pct(count.link_pairs as f64, all.link_pairs as f64),
            fractional_weight_kept: weight,
            fractional_weight_pct: pct(weight, all_weight),
        });
    }
    Ok(Sweep {
        total_records: m.n_cols(),
        rows,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct RankedUnit {
    pub rank: usize,
    pub unit: String,
    pub weight: f64,
}

/// Units most strongly linked to `focal`: weight descending, ties by id ascending.
pub fn rank_related(net: &NetworkMatrix, focal: &str, top_k: usize) -> Result<Vec<RankedUnit>> {
    let i = net
        .unit_index(focal)
        .ok_or_else(|| Error::UnknownUnit(focal.to_string()))?;
    if top_k == 0 {
        return Err(Error::Invalid("top_k must be positive".into()));
    }
    let ids = net.unit_ids();
    let mut neighbors: Vec<(usize, f64)> = net.neighbors(i);
    neighbors.retain(|&(_, w)| w > 0.0);
    neighbors.sort_by(|a, b| {
        b.1.partial_cmp(&a.1)
            .unwrap_or(Ordering::Equal)
            .then_with(|| ids[a.0].cmp(&ids[b.0]))
    });
    Ok(neighbors
        .into_iter()
        .take(top_k)
        .enumerate()
        .map(|(r, (j, weight))| RankedUnit {
            rank: r + 1,
            unit: ids[j].clone(),
            weight,
        })
        .collect())
}

#[derive(Debug, Clone, PartialEq)]
pub struct ContributionRow {
    pub item_id: String,
    pub citations_from_a: u64,
    pub citations_from_b: u64,
    /// Always `citations_from_a * citations_from_b`.
    pub full_links: u64,
    /// `citations_from_a * citations_from_b / (n_k - 1)`.
    pub fractional_weight: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Contributions {
    pub rows: Vec<ContributionRow>,
    pub total_full_links: u64,
    pub total_fractional_weight: f64,
}

/// Splits the link between `unit_a` and `unit_b` into per-column parts.
pub fn contributions(m: &IncidenceMatrix, unit_a: &str, unit_b: &str) -> Result<Contributions> {
    if !m.semantics().is_citation() {
        return Err(Error::Invalid(format!(
            "contributions need a citation matrix, got {}",
            m.semantics()
        )));
    }
    let a = m
        .row_index(unit_a)
        .ok_or_else(|| Error::UnknownUnit(unit_a.to_string()))?;
    let b = m
        .row_index(unit_b)
        .ok_or_else(|| Error::UnknownUnit(unit_b.to_string()))?;
    if a == b {
        return Err(Error::Invalid(
            "contributions need two distinct units".into(),
        ));
    }

    let mut rows = Vec::new();
    let mut total_fractional_weight = 0.0;
    // Ascending columns, the same summation order as `project`.
    for k in 0..m.n_cols() {
        let (c_a, c_b) = (m.get(a, k), m.get(b, k));
        if c_a == 0 || c_b == 0 {
            continue;
        }
        let full_links = c_a * c_b;
        let fractional_weight = full_links as f64 / (m.column_margin(k) - 1) as f64;
        total_fractional_weight += fractional_weight;
        rows.push(ContributionRow {
            item_id: m.col_ids()[k].clone(),
            citations_from_a: c_a,
            citations_from_b: c_b,
            full_links,
            fractional_weight,
        });
    }
    let total_full_links = rows.iter().map(|r| r.full_links).sum();
    rows.sort_by(|x, y| {
        y.full_links
            .cmp(&x.full_links)
            .then_with(|| x.item_id.cmp(&y.item_id))
    });
    Ok(Contributions {
        rows,
        total_full_links,
        total_fractional_weight,
    })
}
