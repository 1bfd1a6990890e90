//! Design dump files.
//!
//! ```text
//! spread M=4 b=2 q=2 method=gabidulin-echelon
//! blocks 5
//! 2 2 4
//! 1 0 0 0
//! 0 1 0 0
//! ...
//! units 0 4
//! ```
//!
//! The header names the design kind (`spread`, `std` or `blocks`) followed by
//! `key=value` parameters. Each block is its RREF basis in the matrix text
//! format. Transversal designs end with `classes N` and one line of block
//! indices per parallel class; spreads may end with `units` listing the unit
//! subspace positions. Plain `blocks` files describe an arbitrary block set.

use std::collections::BTreeMap;
use std::fmt::Write;

use super::{SpreadDesign, TransversalDesign};
use crate::gf::FieldContext;
use crate::linalg::text::{write_matrix, TextReader};
use crate::linalg::Subspace;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DesignDump {
    pub kind: String,
    pub params: BTreeMap<String, String>,
    pub q: u32,
    pub blocks: Vec<Subspace>,
    pub classes: Vec<Vec<usize>>,
    pub units: Vec<usize>,
}

impl DesignDump {
    pub fn param<T: std::str::FromStr>(&self, key: &str) -> Result<T> {
        self.params
            .get(key)
            .and_then(|v| v.parse().ok())
            .ok_or_else(|| Error::Parse {
                line: 1,
                msg: format!("missing or invalid header parameter `{key}`"),
            })
    }

    pub fn ambient(&self) -> Option<usize> {
        self.blocks.first().map(|b| b.ambient())
    }
}

fn write_blocks(out: &mut String, q: u32, blocks: &[Subspace]) {
    writeln!(out, "blocks {}", blocks.len()).unwrap();
    for b in blocks {
        write_matrix(out, q, b.basis());
    }
}

pub fn write_spread(d: &SpreadDesign, q: u32) -> String {
    let mut out = format!(
        "spread M={} b={} q={} method={}\n",
        d.ambient, d.b, q, d.method
    );
    write_blocks(&mut out, q, &d.blocks);
    if !d.unit_indices.is_empty() {
        let u: Vec<String> = d.unit_indices.iter().map(|x| x.to_string()).collect();
        writeln!(out, "units {}", u.join(" ")).unwrap();
    }
    out
}

pub fn write_std(d: &TransversalDesign) -> String {
    let mut out = format!("std t={} b={} m={} q={}\n", d.t, d.b, d.m, d.q);
    write_blocks(&mut out, d.q, &d.blocks);
    writeln!(out, "classes {}", d.classes.len()).unwrap();
    for c in &d.classes {
        let s: Vec<String> = c.iter().map(|x| x.to_string()).collect();
        writeln!(out, "{}", s.join(" ")).unwrap();
    }
    out
}

pub fn write_block_set(blocks: &[Subspace], q: u32) -> String {
    let (m, b) = blocks
        .first()
        .map_or((0, 0), |s| (s.ambient(), s.dim()));
    let mut out = format!("blocks M={m} b={b} q={q}\n");
    write_blocks(&mut out, q, blocks);
    out
}

/// Parses a dump. Block bases are re-canonicalized, so hand-written files
/// need not be in RREF.
pub fn parse_design(text: &str) -> Result<DesignDump> {
    let mut rd = TextReader::new(text);
    let header = rd.next_line()?;
    let mut tokens = header.split_whitespace();
    let kind = tokens.next().unwrap_or_default().to_string();
    if !matches!(kind.as_str(), "spread" | "std" | "blocks") {
        return Err(Error::Parse {
            line: 1,
            msg: format!("unknown design kind {kind:?}"),
        });
    }
    let mut params = BTreeMap::new();
    for t in tokens {
        let (k, v) = t.split_once('=').ok_or_else(|| Error::Parse {
            line: 1,
            msg: format!("expected key=value, found {t:?}"),
        })?;
        params.insert(k.to_string(), v.to_string());
    }
    let count: usize = rd
        .expect_key("blocks")?
        .parse()
        .map_err(|_| rd.error("bad block count"))?;
    let mut q = params.get("q").and_then(|v| v.parse().ok()).unwrap_or(0);
    let mut field: Option<FieldContext> = None;
    let mut blocks = Vec::with_capacity(count);
    for _ in 0..count {
        let (mq, m) = rd.read_matrix()?;
        if q == 0 {
            q = mq;
        }
        if mq != q {
            return Err(rd.error(format!("block over GF({mq}) in a GF({q}) design")));
        }
        let f = match &field {
            Some(f) => f,
            None => field.insert(FieldContext::of_order(q)?),
        };
        blocks.push(Subspace::row_space(f, &m));
    }
    let mut classes = Vec::new();
    let mut units = Vec::new();
    while !rd.is_done() {
        let line = rd.next_line()?;
        let (key, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        match key {
            "classes" => {
                let n: usize = rest.trim().parse().map_err(|_| rd.error("bad class count"))?;
                for _ in 0..n {
                    let l = rd.next_line()?;
                    let idx: Vec<usize> = rd.parse_numbers(l)?;
                    if let Some(bad) = idx.iter().find(|&&i| i >= blocks.len()) {
                        return Err(rd.error(format!("block index {bad} out of range")));
                    }
                    classes.push(idx);
                }
            }
            "units" => units = rd.parse_numbers(rest)?,
            _ => return Err(rd.error(format!("unexpected line {line:?}"))),
        }
    }
    Ok(DesignDump {
        kind,
        params,
        q,
        blocks,
        classes,
        units,
    })
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::designs::{build_spread, build_std, SpreadMethod};
    use crate::Limits;

    #[test]
    fn spread_round_trip() {
        let f = Arc::new(FieldContext::new(2, 1).unwrap());
        let s = build_spread(&f, 4, 2, SpreadMethod::GabidulinEchelon, &Limits::default()).unwrap();
        let text = write_spread(&s, 2);
        assert!(text.starts_with("spread M=4 b=2 q=2 method=gabidulin-echelon\nblocks 5\n2 2 4\n"));
        let d = parse_design(&text).unwrap();
        assert_eq!(d.kind, "spread");
        assert_eq!(d.blocks, s.blocks);
        assert_eq!(d.units, vec![0, 4]);
        assert_eq!(d.param::<usize>("M").unwrap(), 4);
        assert_eq!(write_spread(&s, 2), text);
    }

    #[test]
    fn std_round_trip() {
        let f = Arc::new(FieldContext::new(2, 1).unwrap());
        let d = build_std(&f, 2, 2, 2, &Limits::default()).unwrap();
        let parsed = parse_design(&write_std(&d)).unwrap();
        assert_eq!(parsed.blocks, d.blocks);
        assert_eq!(parsed.classes, d.classes);
        assert_eq!(parsed.param::<usize>("t").unwrap(), 2);
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_design("nonsense\n").is_err());
        assert!(parse_design("blocks q=2\nblocks 1\n2 1 2\n1 1\nclasses 1\n0 3\n").is_err());
        assert!(parse_design("blocks q=2\nblocks 1\n2 1 2\n1 1\nfoo\n").is_err());
    }
}
