//! Code bundle files.
//!
//! ```text
//! field gf(2)
//! b 2
//! n 7
//! M 3
//! provenance all-subspaces M=3 b=2
//! generator
//! 2 3 14
//! ...
//! subspaces
//! 2 2 3
//! ...
//! ```
//!
//! The `subspaces` section holds one RREF basis per thick column. On reading
//! it is checked against the column spaces of the generator.

use std::fmt::Write;
use std::sync::Arc;

use super::{ArrayCode, Provenance};
use crate::gf::{descriptor, parse_descriptor, FieldContext};
use crate::linalg::text::{write_matrix, TextReader};
use crate::linalg::Subspace;
use crate::{Error, Result};

pub fn write_bundle(c: &ArrayCode) -> String {
    let f = c.field();
    let mut out = String::new();
    writeln!(out, "field {}", descriptor(f.characteristic(), f.degree())).unwrap();
    writeln!(out, "b {}", c.b()).unwrap();
    writeln!(out, "n {}", c.n()).unwrap();
    writeln!(out, "M {}", c.dim()).unwrap();
    writeln!(out, "provenance {}", c.provenance()).unwrap();
    out.push_str("generator\n");
    write_matrix(&mut out, c.q(), c.generator());
    out.push_str("subspaces\n");
    for s in c.subspaces() {
        write_matrix(&mut out, c.q(), s.basis());
    }
    out
}

pub fn read_bundle(text: &str) -> Result<ArrayCode> {
    let mut rd = TextReader::new(text);
    let (p, m) = parse_descriptor(rd.expect_key("field")?)?;
    let field = Arc::new(FieldContext::new(p, m)?);
    let number = |rd: &mut TextReader, key: &str| -> Result<usize> {
        let v = rd.expect_key(key)?;
        v.parse().map_err(|_| rd.error(format!("bad value for {key}: {v:?}")))
    };
    let b = number(&mut rd, "b")?;
    let n = number(&mut rd, "n")?;
    let dim = number(&mut rd, "M")?;
    let provenance = Provenance::parse(rd.expect_key("provenance")?);
    rd.expect_key("generator")?;
    let (q, g) = rd.read_matrix()?;
    if q != field.order() {
        return Err(rd.error(format!("generator over GF({q}) in a {} bundle", field.descriptor())));
    }
    if g.rows() != dim || g.cols() != b * n {
        return Err(rd.error(format!(
            "generator is {}x{}, expected {dim}x{}",
            g.rows(),
            g.cols(),
            b * n
        )));
    }
    let code = ArrayCode::from_generator(field.clone(), b, g, provenance)?;
    rd.expect_key("subspaces")?;
    for j in 0..n {
        let (_, basis) = rd.read_matrix()?;
        let stored = Subspace::row_space(&field, &basis);
        if &stored != code.subspaces().get(j).ok_or_else(|| rd.error("too many subspaces"))? {
            return Err(Error::Inconsistent(format!(
                "stored subspace {j} differs from the column space of thick column {j}"
            )));
        }
    }
    if !rd.is_done() {
        return Err(rd.error("trailing content after subspaces"));
    }
    Ok(code)
}
