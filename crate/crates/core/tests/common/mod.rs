//! Test-only oracles and random inputs. Nothing here calls into the
//! projection code it is used to check.
#![allow(dead_code, clippy::needless_range_loop)]

use std::path::PathBuf;

use bibnet::{CountingScheme, IncidenceMatrix, NetworkMatrix, PublicationRecord, Semantics};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn ids(prefix: &str, n: usize) -> Vec<String> {
    (0..n).map(|i| format!("{prefix}{i:02}")).collect()
}

/// Records with up to `max_team` authors (repeats allowed, to exercise dedup)
/// and up to `max_refs` references into `n_items` items.
pub fn random_corpus(
    rng: &mut ChaCha8Rng,
    n_records: usize,
    n_units: usize,
    max_team: usize,
    n_items: usize,
    max_refs: usize,
) -> Vec<PublicationRecord> {
    (0..n_records)
        .map(|k| {
            let team = rng.random_range(1..=max_team);
            let refs = rng.random_range(0..=max_refs);
            PublicationRecord {
                id: format!("rec{k:03}"),
                authors: (0..team)
                    .map(|_| format!("u{:02}", rng.random_range(0..n_units)))
                    .collect(),
                affiliations: None,
                venue: None,
                references: (0..refs)
                    .map(|_| format!("item{:02}", rng.random_range(0..n_items)))
                    .collect(),
            }
        })
        .collect()
}

/// Dense `n x m` table with entries in `0..=max`, about `density` nonzero.
pub fn random_dense(
    rng: &mut ChaCha8Rng,
    n: usize,
    m: usize,
    max: u64,
    density: f64,
) -> Vec<Vec<u64>> {
    (0..n)
        .map(|_| {
            (0..m)
                .map(|_| {
                    if rng.random::<f64>() < density {
                        rng.random_range(1..=max)
                    } else {
                        0
                    }
                })
                .collect()
        })
        .collect()
}

pub fn matrix(semantics: Semantics, dense: &[Vec<u64>]) -> IncidenceMatrix {
    let n = dense.len();
    let m = dense.first().map_or(0, Vec::len);
    IncidenceMatrix::from_dense(semantics, ids("u", n), ids("k", m), dense).unwrap()
}

/// Triple loop over `(k, i, j)`, straight from the elementwise definitions.
pub fn dense_projection(
    dense: &[Vec<u64>],
    scheme: CountingScheme,
    max_units: Option<usize>,
) -> Vec<Vec<f64>> {
    let n = dense.len();
    let m = dense.first().map_or(0, Vec::len);
    let mut w = vec![vec![0.0; n]; n];
    for k in 0..m {
        let margin: u64 = (0..n).map(|i| dense[i][k]).sum();
        let units = (0..n).filter(|&i| dense[i][k] > 0).count();
        if margin < 2 || units < 2 || max_units.is_some_and(|t| units > t) {
            continue;
        }
        for i in 0..n {
            for j in 0..n {
                let (ci, cj) = (dense[i][k], dense[j][k]);
                if i == j || ci == 0 || cj == 0 {
                    continue;
                }
                let nk = margin as f64;
                let d = match scheme {
                    CountingScheme::Full => 1.0,
                    CountingScheme::FractionalMinusOne => nk - 1.0,
                    CountingScheme::FractionalPlain => nk,
                    CountingScheme::FractionalSquared => nk * nk,
                    CountingScheme::FractionalSelfAdjusted => nk - ci as f64,
                };
                w[i][j] += (ci * cj) as f64 / d;
            }
        }
    }
    w
}

/// Same nonzero structure, weights within `rel` relative error.
pub fn assert_matches_dense(net: &NetworkMatrix, dense: &[Vec<f64>], rel: f64) {
    let n = dense.len();
    assert_eq!(net.size(), n);
    let mut expected = 0;
    for i in 0..n {
        assert_eq!(net.weight(i, i), 0.0);
        for j in 0..n {
            if i == j || (net.is_symmetric() && j < i) {
                continue;
            }
            let (got, want) = (net.weight(i, j), dense[i][j]);
            if want > 0.0 {
                expected += 1;
            }
            assert_eq!(
                got > 0.0,
                want > 0.0,
                "structure differs at ({i}, {j}): {got} vs {want}"
            );
            assert!(
                (got - want).abs() <= rel * want.abs(),
                "weight differs at ({i}, {j}): {got} vs {want}"
            );
        }
    }
    assert_eq!(net.link_count(), expected);
}
