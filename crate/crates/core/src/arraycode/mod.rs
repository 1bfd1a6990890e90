//! Linear array codes whose columns are associated with subspaces.
//!
//! A `[b×n, M, d]` array code is stored through its `M×bn` generator matrix
//! `G`. Thick column `j` is the block of columns `jb..(j+1)b`; its column
//! space is the subspace associated with codeword column `j`. Codewords are
//! flattened column by column, so entry `(i, j)` of a codeword is coordinate
//! `jb + i` of `mᵀG`.

pub mod bundle;
mod constructions;
mod distance;
mod report;

pub use constructions::{
    code_from_subspaces, construction_all_subspaces, construction_from_blocks, construction_spread,
    construction_spread_with, construction_std, steiner_strengths, StdScope,
};
pub use distance::{DistanceMethod, MinDistance};
pub use report::{perfectness, CodeReport, Parameters, Perfectness};

use std::fmt;
use std::sync::Arc;

use crate::gf::{Elem, FieldContext};
use crate::linalg::{rank, Mat, Subspace};
use crate::{Error, Result};

/// Where a code came from: a construction name and its parameters, written
/// as `name key=value ...`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Provenance {
    pub construction: String,
    pub params: Vec<(String, String)>,
}

impl Provenance {
    pub fn new(construction: impl Into<String>) -> Self {
        Provenance {
            construction: construction.into(),
            params: Vec::new(),
        }
    }

    pub fn with(mut self, key: &str, value: impl ToString) -> Self {
        self.params.push((key.to_string(), value.to_string()));
        self
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.params
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }

    pub fn parse(s: &str) -> Self {
        let mut it = s.split_whitespace();
        let construction = it.next().unwrap_or("unknown").to_string();
        let params = it
            .filter_map(|t| t.split_once('='))
            .map(|(k, v)| (k.to_string(), v.to_string()))
            .collect();
        Provenance {
            construction,
            params,
        }
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.construction)?;
        for (k, v) in &self.params {
            write!(f, " {k}={v}")?;
        }
        Ok(())
    }
}

/// A `b×n` array over `GF(q)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Codeword(pub Mat);

impl Codeword {
    /// Reshapes a flattened word of length `bn`, column by column.
    pub fn from_flat(b: usize, flat: &[Elem]) -> Self {
        let n = flat.len() / b.max(1);
        let mut m = Mat::zeros(b, n);
        for j in 0..n {
            for i in 0..b {
                m.set(i, j, flat[j * b + i]);
            }
        }
        Codeword(m)
    }

    pub fn flatten(&self) -> Vec<Elem> {
        let (b, n) = (self.0.rows(), self.0.cols());
        let mut out = Vec::with_capacity(b * n);
        for j in 0..n {
            out.extend(self.0.column(j));
        }
        out
    }

    pub fn column(&self, j: usize) -> Vec<Elem> {
        self.0.column(j)
    }

    /// Number of nonzero columns.
    pub fn weight(&self) -> usize {
        (0..self.0.cols())
            .filter(|&j| (0..self.0.rows()).any(|i| self.0.get(i, j) != 0))
            .count()
    }
}

/// Number of nonzero thick columns in a flattened word.
pub fn flat_weight(b: usize, flat: &[Elem]) -> usize {
    flat.chunks(b.max(1))
        .filter(|c| c.iter().any(|&x| x != 0))
        .count()
}

#[derive(Debug, Clone)]
pub struct ArrayCode {
    field: Arc<FieldContext>,
    b: usize,
    n: usize,
    dim: usize,
    generator: Mat,
    subspaces: Vec<Subspace>,
    provenance: Provenance,
}

impl ArrayCode {
    /// Wraps a generator matrix of full row rank whose column count is a
    /// multiple of `b`. The associated subspaces are computed from it.
    pub fn from_generator(field: Arc<FieldContext>, b: usize, generator: Mat, provenance: Provenance) -> Result<Self> {
        if b == 0 || !generator.cols().is_multiple_of(b) {
            return Err(Error::BadParams(format!(
                "generator width {} is not a multiple of b={b}",
                generator.cols()
            )));
        }
        let dim = generator.rows();
        let r = rank(&field, &generator);
        if r != dim {
            return Err(Error::RankDeficient { rank: r, expected: dim });
        }
        let n = generator.cols() / b;
        let subspaces = (0..n)
            .map(|j| Subspace::column_space(&field, &generator.select_columns(j * b..(j + 1) * b)))
            .collect();
        Ok(ArrayCode {
            field,
            b,
            n,
            dim,
            generator,
            subspaces,
            provenance,
        })
    }

    pub fn field(&self) -> &Arc<FieldContext> {
        &self.field
    }

    pub fn q(&self) -> u32 {
        self.field.order()
    }

    /// Rows per codeword column.
    pub fn b(&self) -> usize {
        self.b
    }

    /// Number of codeword columns (storage nodes).
    pub fn n(&self) -> usize {
        self.n
    }

    /// Dimension `M` over `GF(q)`.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generator(&self) -> &Mat {
        &self.generator
    }

    pub fn subspaces(&self) -> &[Subspace] {
        &self.subspaces
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn set_provenance(&mut self, p: Provenance) {
        self.provenance = p;
    }

    /// The `M×b` block of `G` for codeword column `j`.
    pub fn thick_column(&self, j: usize) -> Mat {
        self.generator.select_columns(j * self.b..(j + 1) * self.b)
    }

    /// Column `g_{jb+i}` of `G`.
    pub fn symbol_column(&self, i: usize, j: usize) -> Vec<Elem> {
        self.generator.column(j * self.b + i)
    }

    pub fn is_full_column_rank(&self) -> bool {
        self.subspaces.iter().all(|s| s.dim() == self.b)
    }

    pub fn summary(&self) -> String {
        format!("[{}x{}, {}]", self.b, self.n, self.dim)
    }

    pub fn encode(&self, message: &[Elem]) -> Result<Codeword> {
        if message.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: message.len(),
            });
        }
        if let Some(&bad) = message.iter().find(|&&x| x >= self.q()) {
            return Err(Error::BadParams(format!("{bad} is not an element of GF({})", self.q())));
        }
        let flat = self.generator.left_mul_vec(&self.field, message)?;
        Ok(Codeword::from_flat(self.b, &flat))
    }

    /// Is `w` in the code? Decided by solving `mᵀG = flatten(w)`.
    pub fn contains(&self, w: &Codeword) -> bool {
        self.message_of(w).is_some()
    }

    /// A message encoding to `w`, if there is one.
    pub fn message_of(&self, w: &Codeword) -> Option<Vec<Elem>> {
        if w.0.rows() != self.b || w.0.cols() != self.n {
            return None;
        }
        crate::linalg::solve(&self.field, &self.generator.transpose(), &w.flatten())
    }

    /// The dual code: its generator spans the null space of `G`, and `G`
    /// becomes its parity-check matrix.
    pub fn dual(&self) -> Result<ArrayCode> {
        let ns = Subspace::null_space(&self.field, &self.generator);
        let prov = Provenance::parse(&format!("dual-of-{}", self.provenance));
        ArrayCode::from_generator(self.field.clone(), self.b, ns.basis().clone(), prov)
    }

    /// A basis of the dual code, one row per parity check.
    pub fn parity_check(&self) -> Mat {
        Subspace::null_space(&self.field, &self.generator).basis().clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_column_code() {
        let f = Arc::new(FieldContext::new(2, 1).unwrap());
        let c = code_from_subspaces(f, &[Subspace::full(3)], 3, Provenance::new("t")).unwrap();
        assert_eq!(c.generator(), &Mat::identity(3));
        assert_eq!((c.b(), c.n(), c.dim()), (3, 1, 3));
        let w = c.encode(&[1, 0, 1]).unwrap();
        assert_eq!(w.weight(), 1);
        assert_eq!(c.encode(&[0, 0, 0]).unwrap().weight(), 0);
        assert!(c.encode(&[1, 0]).is_err());
    }

    #[test]
    fn flatten_round_trip() {
        let w = Codeword::from_flat(2, &[1, 2, 3, 4, 5, 6]);
        assert_eq!(w.0.row(0), &[1, 3, 5]);
        assert_eq!(w.flatten(), vec![1, 2, 3, 4, 5, 6]);
        assert_eq!(flat_weight(2, &[0, 0, 1, 0, 0, 1]), 2);
    }

    #[test]
    fn provenance_text() {
        let p = Provenance::new("std-par").with("t", 1).with("b", 3);
        assert_eq!(p.to_string(), "std-par t=1 b=3");
        assert_eq!(Provenance::parse("std-par t=1 b=3"), p);
        assert_eq!(p.get("b"), Some("3"));
    }

    #[test]
    fn rank_deficient_generator_rejected() {
        let f = Arc::new(FieldContext::new(2, 1).unwrap());
        let g = Mat::from_rows(&[[1, 0], [1, 0]]).unwrap();
        assert!(matches!(
            ArrayCode::from_generator(f, 1, g, Provenance::new("x")),
            Err(Error::RankDeficient { rank: 1, expected: 2 })
        ));
    }
}
