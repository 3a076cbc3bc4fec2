//! Network file formats.
//!
//! Weights are printed as integers under full counting and with six
//! fractional digits otherwise. `{:.6}` rounds the exact binary value, so
//! exact ties at the seventh digit go to the even neighbour.

use std::fmt;
use std::io::{self, BufRead, Write};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::network::NetworkMatrix;
use crate::scheme::CountingScheme;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    /// `a<TAB>b<TAB>weight` per pair.
    EdgeList,
    Pajek,
    /// One JSON object `{"a","b","weight"}` per line, weights at full precision.
    Records,
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::EdgeList => "edgelist",
            Format::Pajek => "pajek",
            Format::Records => "records",
        })
    }
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "edgelist" => Ok(Format::EdgeList),
            "pajek" => Ok(Format::Pajek),
            "records" => Ok(Format::Records),
            other => Err(Error::Invalid(format!("unknown format `{other}`"))),
        }
    }
}

pub fn format_weight(weight: f64, scheme: CountingScheme) -> String {
    match scheme {
        CountingScheme::Full => format!("{weight:.0}"),
        _ => format!("{weight:.6}"),
    }
}

pub fn write_network(net: &NetworkMatrix, format: Format, out: impl Write) -> io::Result<()> {
    match format {
        Format::EdgeList => write_edgelist(net, out),
        Format::Pajek => write_pajek(net, out),
        Format::Records => write_records(net, out),
    }
}

pub fn write_edgelist(net: &NetworkMatrix, mut out: impl Write) -> io::Result<()> {
    let ids = net.unit_ids();
    for &(i, j, w) in net.edges() {
        writeln!(
            out,
            "{}\t{}\t{}",
            ids[i],
            ids[j],
            format_weight(w, net.scheme())
        )?;
    }
    Ok(())
}

pub fn write_pajek(net: &NetworkMatrix, mut out: impl Write) -> io::Result<()> {
    writeln!(out, "*Vertices {}", net.size())?;
    for (i, id) in net.unit_ids().iter().enumerate() {
        writeln!(out, "{} \"{}\"", i + 1, id)?;
    }
    writeln!(
        out,
        "{}",
        if net.is_symmetric() {
            "*Edges"
        } else {
            "*Arcs"
        }
    )?;
    for &(i, j, w) in net.edges() {
        writeln!(
            out,
            "{} {} {}",
            i + 1,
            j + 1,
            format_weight(w, net.scheme())
        )?;
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EdgeRecord {
    pub a: String,
    pub b: String,
    pub weight: f64,
}

pub fn write_records(net: &NetworkMatrix, mut out: impl Write) -> io::Result<()> {
    let ids = net.unit_ids();
    for &(i, j, weight) in net.edges() {
        let rec = EdgeRecord {
            a: ids[i].clone(),
            b: ids[j].clone(),
            weight,
        };
        serde_json::to_writer(&mut out, &rec)?;
        out.write_all(b"\n")?;
    }
    Ok(())
}

pub fn read_records(reader: impl BufRead) -> Result<Vec<EdgeRecord>> {
    let mut edges = Vec::new();
    for (n, line) in reader.lines().enumerate() {
        let line = line.map_err(|e| Error::io("<records>", e))?;
        if line.trim().is_empty() {
            continue;
        }
        edges.push(serde_json::from_str(&line).map_err(|e| Error::Parse {
            line: n + 1,
            message: e.to_string(),
        })?);
    }
    Ok(edges)
}

pub fn read_edgelist(reader: impl BufRead) -> Result<Vec<EdgeRecord>> {
    let mut edges = Vec::new();
    for (n, line) in reader.lines().enumerate() {
        let line = line.map_err(|e| Error::io("<edgelist>", e))?;
        if line.is_empty() {
            continue;
        }
        let parse_err = |message: String| Error::Parse {
            line: n + 1,
            message,
        };
        let fields: Vec<&str> = line.split('\t').collect();
        let [a, b, w] = fields[..] else {
            return Err(parse_err(format!(
                "expected 3 tab-separated fields, got {}",
                fields.len()
            )));
        };
        let weight = w
            .parse()
            .map_err(|e| parse_err(format!("bad weight `{w}`: {e}")))?;
        edges.push(EdgeRecord {
            a: a.to_string(),
            b: b.to_string(),
            weight,
        });
    }
    Ok(edges)
}
