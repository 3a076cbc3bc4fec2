//! Seeded synthetic corpora.
//!
//! Record `k` draws everything from its own ChaCha8 stream: the generator is
//! seeded with `seed` and switched to stream `k`. Records are therefore
//! independent of each other and of the order (or thread) they are built on.

use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Geometric};

use crate::corpus::PublicationRecord;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct SynthConfig {
    pub seed: u64,
    pub n_units: usize,
    pub n_records: usize,
    /// Probability that a regular (non-hyperauthored) record has one author.
    pub p_single: f64,
    /// Mean team size of multi-author regular records; sizes are `2 + Geometric`.
    pub mean_small_team: f64,
    pub hyper_fraction: f64,
    /// Inclusive team-size range of hyperauthored records.
    pub hyper_size: (usize, usize),
    /// Inclusive range of reference draws per record (repeats collapse).
    pub references: (usize, usize),
    /// Zipf exponent of cited-item popularity.
    pub citation_skew: f64,
    /// Number of distinct citable items; `None` means five per record.
    pub item_universe: Option<usize>,
    /// Assign each record one of this many venues; zero leaves venues unset.
    pub n_venues: usize,
}

impl Default for SynthConfig {
    fn default() -> Self {
        SynthConfig {
            seed: 42,
            n_units: 2000,
            n_records: 10_000,
            p_single: 0.7,
            mean_small_team: 4.0,
            hyper_fraction: 0.001,
            hyper_size: (100, 150),
            references: (5, 30),
            citation_skew: 1.0,
            item_universe: None,
            n_venues: 0,
        }
    }
}

impl SynthConfig {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidConfig(msg));
        for (name, p) in [
            ("p_single", self.p_single),
            ("hyper_fraction", self.hyper_fraction),
        ] {
            if !(0.0..=1.0).contains(&p) {
                return bad(format!("{name} = {p} is not a probability"));
            }
        }
        if !(self.mean_small_team >= 2.0 && self.mean_small_team.is_finite()) {
            return bad(format!(
                "mean_small_team = {} must be at least 2",
                self.mean_small_team
            ));
        }
        if !(self.citation_skew >= 0.0 && self.citation_skew.is_finite()) {
            return bad(format!(
                "citation_skew = {} must be nonnegative",
                self.citation_skew
            ));
        }
        let (lo, hi) = self.hyper_size;
        if lo == 0 || lo > hi {
            return bad(format!("hyper size range ({lo}, {hi}) is empty"));
        }
        if self.references.0 > self.references.1 {
            return bad(format!("reference range {:?} is empty", self.references));
        }
        if self.n_units == 0 {
            return bad("n_units must be positive".into());
        }
        if self.hyper_fraction > 0.0 && hi > self.n_units {
            return bad(format!(
                "hyperauthored team of {hi} exceeds {} units",
                self.n_units
            ));
        }
        if self.p_single < 1.0 && self.n_units < 2 {
            return bad("multi-author teams need at least two units".into());
        }
        if self.references.1 > 0 && self.universe() == 0 {
            return bad("references requested from an empty item universe".into());
        }
        Ok(())
    }

    fn universe(&self) -> usize {
        self.item_universe.unwrap_or(5 * self.n_records)
    }
}

fn width(n: usize) -> usize {
    n.max(1).to_string().len()
}

struct Generator<'a> {
    cfg: &'a SynthConfig,
    small_extra: Geometric,
    /// Cumulative Zipf weights, unnormalized.
    zipf_cdf: Vec<f64>,
    unit_width: usize,
    record_width: usize,
    item_width: usize,
    venue_width: usize,
}

impl<'a> Generator<'a> {
    fn new(cfg: &'a SynthConfig) -> Result<Self> {
        cfg.validate()?;
        let small_extra = Geometric::new(1.0 / (cfg.mean_small_team - 1.0))
            .map_err(|e| Error::InvalidConfig(e.to_string()))?;
        let universe = if cfg.references.1 > 0 {
            cfg.universe()
        } else {
            0
        };
        let mut total = 0.0;
        let zipf_cdf = (1..=universe)
            .map(|rank| {
                total += (rank as f64).powf(-cfg.citation_skew);
                total
            })
            .collect();
        Ok(Generator {
            cfg,
            small_extra,
            zipf_cdf,
            unit_width: width(cfg.n_units),
            record_width: width(cfg.n_records),
            item_width: width(universe),
            venue_width: width(cfg.n_venues),
        })
    }

    fn team_size(&self, rng: &mut ChaCha8Rng) -> usize {
        let cfg = self.cfg;
        if rng.random::<f64>() < cfg.hyper_fraction {
            return rng.random_range(cfg.hyper_size.0..=cfg.hyper_size.1);
        }
        if rng.random::<f64>() < cfg.p_single {
            return 1;
        }
        let extra = self.small_extra.sample(rng).min(cfg.n_units as u64) as usize;
        (2 + extra).min(cfg.n_units)
    }

    fn cited_item(&self, rng: &mut ChaCha8Rng) -> usize {
        let total = *self.zipf_cdf.last().expect("nonempty universe");
        let u = rng.random::<f64>() * total;
        self.zipf_cdf
            .partition_point(|&c| c <= u)
            .min(self.zipf_cdf.len() - 1)
    }

    fn record(&self, k: usize) -> PublicationRecord {
        let cfg = self.cfg;
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        rng.set_stream(k as u64);

        let size = self.team_size(&mut rng);
        let mut members = index::sample(&mut rng, cfg.n_units, size).into_vec();
        members.sort_unstable();
        let authors = members
            .into_iter()
            .map(|u| format!("U{:0w$}", u, w = self.unit_width))
            .collect();

        let n_refs = rng.random_range(cfg.references.0..=cfg.references.1);
        let mut items: Vec<usize> = (0..n_refs).map(|_| self.cited_item(&mut rng)).collect();
        items.sort_unstable();
        items.dedup();
        let references = items
            .into_iter()
            .map(|i| format!("I{:0w$}", i, w = self.item_width))
            .collect();

        let venue = (cfg.n_venues > 0).then(|| {
            format!(
                "V{:0w$}",
                rng.random_range(0..cfg.n_venues),
                w = self.venue_width
            )
        });

        PublicationRecord {
            id: format!("P{:0w$}", k, w = self.record_width),
            authors,
            affiliations: None,
            venue,
            references,
        }
    }
}

/// Generates `cfg.n_records` records; a pure function of `cfg`.
pub fn generate(cfg: &SynthConfig) -> Result<Vec<PublicationRecord>> {
    let generator = Generator::new(cfg)?;
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        Ok((0..cfg.n_records)
            .into_par_iter()
            .map(|k| generator.record(k))
            .collect())
    }
    #[cfg(not(feature = "parallel"))]
    {
        Ok((0..cfg.n_records).map(|k| generator.record(k)).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> SynthConfig {
        SynthConfig {
            n_units: 200,
            n_records: 1000,
            ..SynthConfig::default()
        }
    }

    #[test]
    fn same_seed_same_corpus() {
        let cfg = small();
        assert_eq!(generate(&cfg).unwrap(), generate(&cfg).unwrap());
    }

    #[test]
    fn different_seed_different_corpus() {
        let a = generate(&small()).unwrap();
        let b = generate(&SynthConfig {
            seed: 43,
            ..small()
        })
        .unwrap();
        assert_ne!(a, b);
    }

    #[test]
    fn records_are_well_formed() {
        let cfg = SynthConfig {
            n_venues: 7,
            ..small()
        };
        for r in generate(&cfg).unwrap() {
            assert!(!r.authors.is_empty());
            let mut sorted = r.authors.clone();
            sorted.dedup();
            assert_eq!(sorted.len(), r.authors.len());
            assert!(r.references.len() <= cfg.references.1);
            assert!(r.venue.is_some());
        }
    }

    #[test]
    fn all_single_author_when_asked() {
        let cfg = SynthConfig {
            hyper_fraction: 0.0,
            p_single: 1.0,
            ..small()
        };
        assert!(generate(&cfg).unwrap().iter().all(|r| r.authors.len() == 1));
    }

    #[test]
    fn hyper_records_fall_in_range() {
        let cfg = SynthConfig {
            hyper_fraction: 1.0,
            hyper_size: (10, 12),
            n_records: 50,
            ..small()
        };
        for r in generate(&cfg).unwrap() {
            assert!((10..=12).contains(&r.authors.len()));
        }
    }

    #[test]
    fn mean_two_gives_pairs() {
        let cfg = SynthConfig {
            hyper_fraction: 0.0,
            p_single: 0.0,
            mean_small_team: 2.0,
            ..small()
        };
        assert!(generate(&cfg).unwrap().iter().all(|r| r.authors.len() == 2));
    }

    #[test]
    fn zipf_favours_low_ranks() {
        let cfg = SynthConfig {
            citation_skew: 1.5,
            item_universe: Some(1000),
            ..small()
        };
        let corpus = generate(&cfg).unwrap();
        let count = |id: &str| {
            corpus
                .iter()
                .filter(|r| r.references.iter().any(|x| x == id))
                .count()
        };
        assert!(count("I0000") > 10 * count("I0500").max(1));
    }

    #[test]
    fn infeasible_configs_are_rejected() {
        let too_big = SynthConfig {
            n_units: 50,
            ..small()
        };
        assert!(matches!(generate(&too_big), Err(Error::InvalidConfig(_))));
        assert!(generate(&SynthConfig {
            p_single: 1.5,
            ..small()
        })
        .is_err());
        assert!(generate(&SynthConfig {
            mean_small_team: 1.5,
            ..small()
        })
        .is_err());
        assert!(generate(&SynthConfig {
            hyper_size: (20, 10),
            ..small()
        })
        .is_err());
        assert!(generate(&SynthConfig {
            references: (3, 2),
            ..small()
        })
        .is_err());
    }
}
