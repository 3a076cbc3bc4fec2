//! Tab-separated report tables printed by the command-line tool.

use std::io::{self, Write};

use crate::analyze::{Contributions, RankedUnit, Sweep};
use crate::export::format_weight;
use crate::scheme::CountingScheme;

pub fn write_ranking(
    ranked: &[RankedUnit],
    scheme: CountingScheme,
    mut out: impl Write,
) -> io::Result<()> {
    writeln!(out, "rank\tunit\tweight")?;
    for r in ranked {
        writeln!(
            out,
            "{}\t{}\t{}",
            r.rank,
            r.unit,
            format_weight(r.weight, scheme)
        )?;
    }
    Ok(())
}

pub fn write_sweep(sweep: &Sweep, mut out: impl Write) -> io::Result<()> {
    writeln!(out, "# records={}", sweep.total_records)?;
    writeln!(
        out,
        "threshold\tpubs\tpubs%\tpairs\tpairs%\tfrac_weight\tfrac_weight%"
    )?;
    for row in &sweep.rows {
        let threshold = row
            .threshold
            .map_or_else(|| "none".to_string(), |t| t.to_string());
        writeln!(
            out,
            "{threshold}\t{}\t{:.2}\t{}\t{:.2}\t{:.6}\t{:.2}",
            row.publications_kept,
            row.publications_pct,
            row.link_pairs_kept,
            row.link_pairs_pct,
            row.fractional_weight_kept,
            row.fractional_weight_pct,
        )?;
    }
    Ok(())
}

pub fn write_contributions(c: &Contributions, mut out: impl Write) -> io::Result<()> {
    writeln!(out, "item\tcites_a\tcites_b\tfull_links\tfrac_weight")?;
    for row in &c.rows {
        writeln!(
            out,
            "{}\t{}\t{}\t{}\t{:.6}",
            row.item_id,
            row.citations_from_a,
            row.citations_from_b,
            row.full_links,
            row.fractional_weight
        )?;
    }
    let cites_a: u64 = c.rows.iter().map(|r| r.citations_from_a).sum();
    let cites_b: u64 = c.rows.iter().map(|r| r.citations_from_b).sum();
    writeln!(
        out,
        "total\t{cites_a}\t{cites_b}\t{}\t{:.6}",
        c.total_full_links, c.total_fractional_weight
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analyze::{ContributionRow, SweepRow};

    fn text(f: impl FnOnce(&mut Vec<u8>)) -> String {
        let mut buf = Vec::new();
        f(&mut buf);
        String::from_utf8(buf).unwrap()
    }

    #[test]
    fn ranking_table() {
        let ranked = [RankedUnit {
            rank: 1,
            unit: "R2".into(),
            weight: 2.2,
        }];
        let s = text(|b| write_ranking(&ranked, CountingScheme::FractionalMinusOne, b).unwrap());
        assert_eq!(s, "rank\tunit\tweight\n1\tR2\t2.200000\n");
    }

    #[test]
    fn sweep_table() {
        let sweep = Sweep {
            total_records: 3,
            rows: vec![SweepRow {
                threshold: None,
                publications_kept: 2,
                publications_pct: 100.0,
                link_pairs_kept: 4,
                link_pairs_pct: 100.0,
                fractional_weight_kept: 5.0,
                fractional_weight_pct: 100.0,
            }],
        };
        let s = text(|b| write_sweep(&sweep, b).unwrap());
        assert!(
            s.ends_with("none\t2\t100.00\t4\t100.00\t5.000000\t100.00\n"),
            "{s}"
        );
    }

    #[test]
    fn contributions_table() {
        let c = Contributions {
            rows: vec![ContributionRow {
                item_id: "K1".into(),
                citations_from_a: 8659,
                citations_from_b: 2,
                full_links: 17318,
                fractional_weight: 17318.0 / 30797.0,
            }],
            total_full_links: 17318,
            total_fractional_weight: 17318.0 / 30797.0,
        };
        let s = text(|b| write_contributions(&c, b).unwrap());
        assert_eq!(
            s,
            "item\tcites_a\tcites_b\tfull_links\tfrac_weight\nK1\t8659\t2\t17318\t0.562327\ntotal\t8659\t2\t17318\t0.562327\n"
        );
    }
}
