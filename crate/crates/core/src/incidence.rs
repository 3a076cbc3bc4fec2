//! Sparse unit-by-item incidence matrices.

use std::fmt;

use crate::error::{Error, Result};

/// What an incidence entry counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Semantics {
    /// `a_ik = 1` iff unit `i` authored publication `k`.
    Authorship,
    /// Number of citations item `k` received from unit `i`.
    CitationsGivenByUnit,
    /// Number of references in publication `k` credited to unit `i`.
    CitationsReceivedByUnit,
}

impl Semantics {
    pub fn is_citation(self) -> bool {
        !matches!(self, Semantics::Authorship)
    }
}

impl fmt::Display for Semantics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Semantics::Authorship => "authorship",
            Semantics::CitationsGivenByUnit => "citations-given",
            Semantics::CitationsReceivedByUnit => "citations-received",
        })
    }
}

/// Column-compressed integer matrix with cached column margins.
///
/// Rows are units, columns are items. Row indices within a column are
/// strictly increasing and every stored value is positive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceMatrix {
    semantics: Semantics,
    row_ids: Vec<String>,
    col_ids: Vec<String>,
    col_ptr: Vec<usize>,
    row_idx: Vec<usize>,
    values: Vec<u64>,
    margins: Vec<u64>,
}

impl IncidenceMatrix {
    /// Builds a matrix from `(row, col, count)` triplets in any order.
    ///
    /// Repeated coordinates are summed and zero counts are dropped.
    pub fn from_triplets(
        semantics: Semantics,
        row_ids: Vec<String>,
        col_ids: Vec<String>,
        triplets: impl IntoIterator<Item = (usize, usize, u64)>,
    ) -> Result<Self> {
        let (n_rows, n_cols) = (row_ids.len(), col_ids.len());
        let mut entries: Vec<(usize, usize, u64)> = Vec::new();
        for (i, k, v) in triplets {
            if i >= n_rows || k >= n_cols {
                return Err(Error::Invalid(format!(
                    "incidence entry ({i}, {k}) outside a {n_rows}x{n_cols} matrix"
                )));
            }
            if v > 0 {
                entries.push((k, i, v));
            }
        }
        entries.sort_unstable_by_key(|&(k, i, _)| (k, i));

        let mut col_ptr = vec![0usize; n_cols + 1];
        let mut row_idx = Vec::with_capacity(entries.len());
        let mut values: Vec<u64> = Vec::with_capacity(entries.len());
        let mut last: Option<(usize, usize)> = None;
        for (k, i, v) in entries {
            if last == Some((k, i)) {
                *values.last_mut().unwrap() += v;
                continue;
            }
            last = Some((k, i));
            row_idx.push(i);
            values.push(v);
            col_ptr[k + 1] += 1;
        }
        for k in 0..n_cols {
            col_ptr[k + 1] += col_ptr[k];
        }

        if semantics == Semantics::Authorship {
            if let Some(pos) = values.iter().position(|&v| v != 1) {
                let k = col_ptr.partition_point(|&p| p <= pos) - 1;
                return Err(Error::Invalid(format!(
                    "authorship entry ({}, {}) is {}, expected 0 or 1",
                    row_ids[row_idx[pos]], col_ids[k], values[pos]
                )));
            }
        }

        let margins = (0..n_cols)
            .map(|k| values[col_ptr[k]..col_ptr[k + 1]].iter().sum())
            .collect();

        Ok(IncidenceMatrix {
            semantics,
            row_ids,
            col_ids,
            col_ptr,
            row_idx,
            values,
            margins,
        })
    }

    /// Builds a matrix from a dense row-major table; handy for small fixtures.
    pub fn from_dense(
        semantics: Semantics,
        row_ids: Vec<String>,
        col_ids: Vec<String>,
        dense: &[Vec<u64>],
    ) -> Result<Self> {
        if dense.len() != row_ids.len() || dense.iter().any(|row| row.len() != col_ids.len()) {
            return Err(Error::Invalid(
                "dense table shape does not match ids".into(),
            ));
        }
        let triplets = dense
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.iter().enumerate().map(move |(k, &v)| (i, k, v)));
        Self::from_triplets(semantics, row_ids, col_ids, triplets)
    }

    pub fn semantics(&self) -> Semantics {
        self.semantics
    }

    pub fn n_rows(&self) -> usize {
        self.row_ids.len()
    }

    pub fn n_cols(&self) -> usize {
        self.col_ids.len()
    }

    pub fn nnz(&self) -> usize {
        self.values.len()
    }

    pub fn row_ids(&self) -> &[String] {
        &self.row_ids
    }

    pub fn col_ids(&self) -> &[String] {
        &self.col_ids
    }

    /// `n_k`, the column sums.
    pub fn column_margins(&self) -> &[u64] {
        &self.margins
    }

    pub fn column_margin(&self, k: usize) -> u64 {
        self.margins[k]
    }

    /// Stored rows and counts of column `k`, rows ascending.
    pub fn column(&self, k: usize) -> (&[usize], &[u64]) {
        let span = self.col_ptr[k]..self.col_ptr[k + 1];
        (&self.row_idx[span.clone()], &self.values[span])
    }

    /// Number of distinct units with a positive entry in column `k`.
    pub fn distinct_units(&self, k: usize) -> usize {
        self.col_ptr[k + 1] - self.col_ptr[k]
    }

    pub fn get(&self, i: usize, k: usize) -> u64 {
        let (rows, values) = self.column(k);
        rows.binary_search(&i).map_or(0, |pos| values[pos])
    }

    pub fn row_index(&self, id: &str) -> Option<usize> {
        // Rows come from a sorted registry in every derivation, but fixtures
        // may use any order.
        self.row_ids.iter().position(|r| r == id)
    }

    /// Iterates `(row, col, count)` over stored entries, column-major.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        (0..self.n_cols()).flat_map(move |k| {
            let (rows, values) = self.column(k);
            rows.iter().zip(values).map(move |(&i, &v)| (i, k, v))
        })
    }

    /// Row-compressed view: for each row, its `(col, count)` pairs with columns ascending.
    pub fn rows(&self) -> RowView {
        let n = self.n_rows();
        let mut row_ptr = vec![0usize; n + 1];
        for &i in &self.row_idx {
            row_ptr[i + 1] += 1;
        }
        for i in 0..n {
            row_ptr[i + 1] += row_ptr[i];
        }
        let mut fill = row_ptr.clone();
        let mut cols = vec![0usize; self.nnz()];
        let mut values = vec![0u64; self.nnz()];
        for (i, k, v) in self.entries() {
            cols[fill[i]] = k;
            values[fill[i]] = v;
            fill[i] += 1;
        }
        RowView {
            row_ptr,
            cols,
            values,
        }
    }

    /// Dense copy, row-major. Test and oracle use only.
    pub fn to_dense(&self) -> Vec<Vec<u64>> {
        let mut dense = vec![vec![0u64; self.n_cols()]; self.n_rows()];
        for (i, k, v) in self.entries() {
            dense[i][k] = v;
        }
        dense
    }
}

/// Row-compressed transpose of an [`IncidenceMatrix`].
#[derive(Debug, Clone)]
pub struct RowView {
    row_ptr: Vec<usize>,
    cols: Vec<usize>,
    values: Vec<u64>,
}

impl RowView {
    pub fn row(&self, i: usize) -> (&[usize], &[u64]) {
        let span = self.row_ptr[i]..self.row_ptr[i + 1];
        (&self.cols[span.clone()], &self.values[span])
    }
}
