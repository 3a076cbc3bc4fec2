//! Projection of an incidence matrix onto a unit-by-unit network.
//!
//! Each column `k` with margin `n_k` and entries `c_ik` adds
//! `c_ik * c_jk / d` to every pair of distinct units `(i, j)` in that
//! column, where `d` depends on the [`CountingScheme`]. Columns with fewer
//! than two citing/authoring units spawn no links and are skipped, as are
//! columns above the optional `max_column_margin`.
//!
//! The sparse path walks the matrix row by row and accumulates each row's
//! pairs in a dense scratch vector. Every pair's sum is therefore taken over
//! columns in ascending order no matter how rows are scheduled, so the
//! sequential and parallel paths agree bit for bit.

use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::incidence::{IncidenceMatrix, RowView, Semantics};
use crate::network::{NetworkKind, NetworkMatrix};
use crate::scheme::CountingScheme;

/// Default cap on `N * M` for [`project_matrix_form`].
pub const DEFAULT_DENSE_CAP: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    Sequential,
    /// Rows are distributed over the rayon pool. Falls back to sequential
    /// when the crate is built without the `parallel` feature.
    #[default]
    Parallel,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProjectionConfig {
    pub scheme: CountingScheme,
    /// Skip columns with more than this many distinct units.
    pub max_column_margin: Option<usize>,
    pub execution: Execution,
}

impl ProjectionConfig {
    pub fn new(scheme: CountingScheme) -> Self {
        ProjectionConfig {
            scheme,
            max_column_margin: None,
            execution: Execution::default(),
        }
    }

    pub fn with_max_column_margin(mut self, max: usize) -> Self {
        self.max_column_margin = Some(max);
        self
    }

    pub fn with_execution(mut self, execution: Execution) -> Self {
        self.execution = execution;
        self
    }

    pub fn validate_for(&self, semantics: Semantics) -> Result<()> {
        if let Some(max) = self.max_column_margin {
            if max < 2 {
                return Err(Error::InvalidThreshold(max));
            }
        }
        if self.scheme == CountingScheme::FractionalSelfAdjusted && !semantics.is_citation() {
            return Err(Error::SchemeMismatch {
                scheme: self.scheme,
                semantics,
            });
        }
        Ok(())
    }
}

pub fn network_kind_for(semantics: Semantics) -> NetworkKind {
    match semantics {
        Semantics::Authorship => NetworkKind::Coauthorship,
        Semantics::CitationsGivenByUnit => NetworkKind::Coupling,
        Semantics::CitationsReceivedByUnit => NetworkKind::Cocitation,
    }
}

/// Whether column `k` contributes links under `max_column_margin`.
pub fn column_kept(m: &IncidenceMatrix, k: usize, max_column_margin: Option<usize>) -> bool {
    let distinct = m.distinct_units(k);
    distinct >= 2 && m.column_margin(k) >= 2 && max_column_margin.is_none_or(|t| distinct <= t)
}

pub fn project(m: &IncidenceMatrix, cfg: &ProjectionConfig) -> Result<NetworkMatrix> {
    cfg.validate_for(m.semantics())?;
    let kept: Vec<bool> = (0..m.n_cols())
        .map(|k| column_kept(m, k, cfg.max_column_margin))
        .collect();
    let rows = m.rows();
    let job = RowJob {
        m,
        rows: &rows,
        kept: &kept,
        scheme: cfg.scheme,
    };

    let per_row: Vec<Vec<(usize, f64)>> = match cfg.execution {
        Execution::Sequential => {
            let mut acc = Accumulator::new(m.n_rows());
            (0..m.n_rows()).map(|i| job.row(i, &mut acc)).collect()
        }
        Execution::Parallel => job.all_rows_parallel(),
    };

    let edges = per_row
        .into_iter()
        .enumerate()
        .flat_map(|(i, row)| row.into_iter().map(move |(j, w)| (i, j, w)))
        .collect();
    Ok(NetworkMatrix::from_sorted(
        m.row_ids().to_vec(),
        cfg.scheme,
        network_kind_for(m.semantics()),
        edges,
    ))
}

struct RowJob<'a> {
    m: &'a IncidenceMatrix,
    rows: &'a RowView,
    kept: &'a [bool],
    scheme: CountingScheme,
}

impl RowJob<'_> {
    fn row(&self, i: usize, acc: &mut Accumulator) -> Vec<(usize, f64)> {
        let symmetric = self.scheme.is_symmetric();
        let (cols, entries) = self.rows.row(i);
        for (&k, &c_i) in cols.iter().zip(entries) {
            if !self.kept[k] {
                continue;
            }
            let denom = self.scheme.denominator(self.m.column_margin(k), c_i);
            let (partners, counts) = self.m.column(k);
            // Symmetric schemes only fill the upper triangle.
            let start = if symmetric {
                partners.partition_point(|&j| j <= i)
            } else {
                0
            };
            for (&j, &c_j) in partners[start..].iter().zip(&counts[start..]) {
                if j != i {
                    acc.add(j, (c_i * c_j) as f64 / denom);
                }
            }
        }
        acc.drain()
    }

    #[cfg(feature = "parallel")]
    fn all_rows_parallel(&self) -> Vec<Vec<(usize, f64)>> {
        use rayon::prelude::*;
        let n = self.m.n_rows();
        (0..n)
            .into_par_iter()
            .map_init(|| Accumulator::new(n), |acc, i| self.row(i, acc))
            .collect()
    }

    #[cfg(not(feature = "parallel"))]
    fn all_rows_parallel(&self) -> Vec<Vec<(usize, f64)>> {
        let mut acc = Accumulator::new(self.m.n_rows());
        (0..self.m.n_rows())
            .map(|i| self.row(i, &mut acc))
            .collect()
    }
}

/// Dense scratch row with a touched list.
struct Accumulator {
    values: Vec<f64>,
    touched: Vec<usize>,
    seen: Vec<bool>,
}

impl Accumulator {
    fn new(n: usize) -> Self {
        Accumulator {
            values: vec![0.0; n],
            touched: Vec::new(),
            seen: vec![false; n],
        }
    }

    #[inline]
    fn add(&mut self, j: usize, w: f64) {
        if !self.seen[j] {
            self.seen[j] = true;
            self.touched.push(j);
        }
        self.values[j] += w;
    }

    fn drain(&mut self) -> Vec<(usize, f64)> {
        self.touched.sort_unstable();
        let out = self.touched.iter().map(|&j| (j, self.values[j])).collect();
        for &j in &self.touched {
            self.values[j] = 0.0;
            self.seen[j] = false;
        }
        self.touched.clear();
        out
    }
}

/// Dense `A A^T` or `A diag(A^T 1 - 1)^-1 A^T` with the diagonal zeroed.
///
/// Only for cross-checking [`project`] on small inputs.
pub fn project_matrix_form(m: &IncidenceMatrix, cfg: &ProjectionConfig) -> Result<NetworkMatrix> {
    project_matrix_form_capped(m, cfg, DEFAULT_DENSE_CAP)
}

pub fn project_matrix_form_capped(
    m: &IncidenceMatrix,
    cfg: &ProjectionConfig,
    dense_cap: usize,
) -> Result<NetworkMatrix> {
    cfg.validate_for(m.semantics())?;
    if !matches!(
        cfg.scheme,
        CountingScheme::Full | CountingScheme::FractionalMinusOne
    ) {
        return Err(Error::MatrixFormUnsupported(format!(
            "the {} scheme",
            cfg.scheme
        )));
    }
    if cfg.max_column_margin.is_some() {
        return Err(Error::MatrixFormUnsupported("column thresholds".into()));
    }
    let (n, cols) = (m.n_rows(), m.n_cols());
    let cells = n.saturating_mul(cols);
    if cells > dense_cap {
        return Err(Error::DenseCapExceeded {
            cells,
            cap: dense_cap,
        });
    }

    let a = DMatrix::<f64>::from_fn(n, cols, |i, k| m.get(i, k) as f64);
    let ones = DMatrix::<f64>::from_element(n, 1, 1.0);
    // A^T 1 recovers the margins independently of the cached ones.
    let margins = a.transpose() * ones;
    let scale = DMatrix::<f64>::from_fn(cols, cols, |k, l| {
        if k != l {
            0.0
        } else {
            match cfg.scheme {
                CountingScheme::Full => 1.0,
                // Columns with n_k < 2 spawn no links; zero keeps the inverse finite.
                _ if margins[k] < 2.0 => 0.0,
                _ => 1.0 / (margins[k] - 1.0),
            }
        }
    });
    let product = &a * scale * a.transpose();

    let mut edges = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let w = product[(i, j)];
            if w > 0.0 {
                edges.push((i, j, w));
            }
        }
    }
    Ok(NetworkMatrix::from_sorted(
        m.row_ids().to_vec(),
        cfg.scheme,
        network_kind_for(m.semantics()),
        edges,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ids(prefix: &str, n: usize) -> Vec<String> {
        (1..=n).map(|i| format!("{prefix}{i}")).collect()
    }

    fn three_records() -> IncidenceMatrix {
        IncidenceMatrix::from_dense(
            Semantics::Authorship,
            ids("R", 4),
            ids("P", 3),
            &[vec![1, 1, 0], vec![1, 0, 1], vec![1, 1, 0], vec![0, 0, 1]],
        )
        .unwrap()
    }

    fn five_units() -> IncidenceMatrix {
        IncidenceMatrix::from_dense(
            Semantics::CitationsGivenByUnit,
            ids("R", 5),
            ids("P", 4),
            &[
                vec![3, 1, 2, 0],
                vec![2, 0, 1, 0],
                vec![1, 2, 0, 0],
                vec![0, 0, 0, 1],
                vec![0, 1, 0, 1],
            ],
        )
        .unwrap()
    }

    fn run(m: &IncidenceMatrix, scheme: CountingScheme) -> NetworkMatrix {
        project(m, &ProjectionConfig::new(scheme)).unwrap()
    }

    #[test]
    fn three_records_full() {
        let u = run(&three_records(), CountingScheme::Full);
        assert_eq!(
            u.edges(),
            [(0, 1, 1.0), (0, 2, 2.0), (1, 2, 1.0), (1, 3, 1.0)]
        );
        assert_eq!(u.row_totals(), [3.0, 3.0, 3.0, 1.0]);
        assert_eq!(u.kind(), NetworkKind::Coauthorship);
    }

    #[test]
    fn three_records_fractional() {
        let u = run(&three_records(), CountingScheme::FractionalMinusOne);
        assert_eq!(u.weight(0, 2), 1.5);
        assert_eq!(u.weight(0, 1), 0.5);
        assert_eq!(u.weight(1, 3), 1.0);
        assert_eq!(u.weight(0, 3), 0.0);
        assert_eq!(u.row_totals(), [2.0, 2.0, 2.0, 1.0]);
    }

    #[test]
    fn five_units_full_and_fractional() {
        let v = run(&five_units(), CountingScheme::Full);
        assert_eq!(v.weight(0, 1), 8.0);
        assert_eq!(v.weight(0, 2), 5.0);
        assert_eq!(v.weight(2, 4), 2.0);
        assert_eq!(v.weight(3, 4), 1.0);
        assert_eq!(v.row_totals(), [14.0, 10.0, 9.0, 1.0, 4.0]);

        let f = run(&five_units(), CountingScheme::FractionalMinusOne);
        assert!((f.weight(0, 1) - 2.2).abs() < 1e-12);
        assert!((f.weight(0, 2) - 19.0 / 15.0).abs() < 1e-12);
        assert!((f.weight(0, 4) - 1.0 / 3.0).abs() < 1e-12);
        assert_eq!(f.weight(3, 4), 1.0);
        let expected = [3.8, 2.6, 7.0 / 3.0, 1.0, 2.0];
        for (got, want) in f.row_totals().iter().zip(expected) {
            assert!((got - want).abs() < 1e-12, "{got} vs {want}");
        }
    }

    #[test]
    fn table_a1_alternatives() {
        let plain = run(&three_records(), CountingScheme::FractionalPlain);
        assert!((plain.weight(0, 2) - 5.0 / 6.0).abs() < 1e-12);
        assert_eq!(plain.weight(1, 3), 0.5);
        let sq = run(&three_records(), CountingScheme::FractionalSquared);
        assert!((sq.weight(0, 2) - 13.0 / 36.0).abs() < 1e-12);
        assert_eq!(sq.weight(1, 3), 0.25);
    }

    #[test]
    fn minimal_pair() {
        let m = IncidenceMatrix::from_dense(
            Semantics::Authorship,
            ids("R", 2),
            ids("P", 1),
            &[vec![1], vec![1]],
        )
        .unwrap();
        assert_eq!(run(&m, CountingScheme::Full).edges(), [(0, 1, 1.0)]);
        assert_eq!(
            run(&m, CountingScheme::FractionalMinusOne).edges(),
            [(0, 1, 1.0)]
        );
        assert_eq!(
            run(&m, CountingScheme::FractionalPlain).edges(),
            [(0, 1, 0.5)]
        );
        assert_eq!(
            run(&m, CountingScheme::FractionalSquared).edges(),
            [(0, 1, 0.25)]
        );
    }

    #[test]
    fn self_adjusted_is_asymmetric_with_unit_action_weight() {
        let f = run(&five_units(), CountingScheme::FractionalSelfAdjusted);
        assert!(!f.is_symmetric());
        // R1 -> R2: 3*2/(6-3) on P1 plus 2*1/(3-2) on P3.
        assert!((f.weight(0, 1) - 4.0).abs() < 1e-12);
        // R2 -> R1: 2*3/(6-2) on P1 plus 1*2/(3-1) on P3.
        assert!((f.weight(1, 0) - 2.5).abs() < 1e-12);
        // Every citation given into a shared column carries weight one.
        let totals = f.row_totals();
        for (t, want) in totals.iter().zip([6.0, 3.0, 3.0, 1.0, 2.0]) {
            assert!((t - want).abs() < 1e-12, "{t} vs {want}");
        }
    }

    #[test]
    fn self_adjusted_requires_citations() {
        let err = project(
            &three_records(),
            &ProjectionConfig::new(CountingScheme::FractionalSelfAdjusted),
        )
        .unwrap_err();
        assert!(matches!(err, Error::SchemeMismatch { .. }));
    }

    #[test]
    fn threshold_must_be_at_least_two() {
        let cfg = ProjectionConfig::new(CountingScheme::Full).with_max_column_margin(1);
        assert!(matches!(
            project(&three_records(), &cfg),
            Err(Error::InvalidThreshold(1))
        ));
    }

    #[test]
    fn threshold_drops_large_columns() {
        let cfg = ProjectionConfig::new(CountingScheme::Full).with_max_column_margin(2);
        let u = project(&three_records(), &cfg).unwrap();
        assert_eq!(u.edges(), [(0, 2, 1.0), (1, 3, 1.0)]);
    }

    #[test]
    fn sequential_and_parallel_agree_bitwise() {
        for scheme in CountingScheme::ALL {
            let seq = project(
                &five_units(),
                &ProjectionConfig::new(scheme).with_execution(Execution::Sequential),
            )
            .unwrap();
            let par = project(
                &five_units(),
                &ProjectionConfig::new(scheme).with_execution(Execution::Parallel),
            )
            .unwrap();
            assert_eq!(seq, par);
        }
    }

    #[test]
    fn matrix_form_matches_tables() {
        let full = project_matrix_form(
            &three_records(),
            &ProjectionConfig::new(CountingScheme::Full),
        )
        .unwrap();
        assert_eq!(full, run(&three_records(), CountingScheme::Full));
        let cfg = ProjectionConfig::new(CountingScheme::FractionalMinusOne);
        let dense = project_matrix_form(&five_units(), &cfg).unwrap();
        let sparse = run(&five_units(), CountingScheme::FractionalMinusOne);
        assert_eq!(dense.link_count(), sparse.link_count());
        for (&(i, j, w), &(a, b, v)) in dense.edges().iter().zip(sparse.edges()) {
            assert_eq!((i, j), (a, b));
            assert!((w - v).abs() <= 1e-12 * v.abs());
        }
    }

    #[test]
    fn matrix_form_skips_margin_one_column() {
        let m = IncidenceMatrix::from_dense(
            Semantics::Authorship,
            ids("R", 2),
            ids("P", 1),
            &[vec![1], vec![0]],
        )
        .unwrap();
        for scheme in [CountingScheme::Full, CountingScheme::FractionalMinusOne] {
            let cfg = ProjectionConfig::new(scheme);
            assert_eq!(project_matrix_form(&m, &cfg).unwrap().link_count(), 0);
            assert_eq!(project(&m, &cfg).unwrap().link_count(), 0);
        }
    }

    #[test]
    fn matrix_form_refuses_large_or_unsupported() {
        let cfg = ProjectionConfig::new(CountingScheme::Full);
        assert!(matches!(
            project_matrix_form_capped(&three_records(), &cfg, 11),
            Err(Error::DenseCapExceeded { cells: 12, cap: 11 })
        ));
        let plain = ProjectionConfig::new(CountingScheme::FractionalPlain);
        assert!(project_matrix_form(&three_records(), &plain).is_err());
        let thresholded = cfg.with_max_column_margin(3);
        assert!(project_matrix_form(&three_records(), &thresholded).is_err());
    }
}
