use crate::gf::{Elem, FieldContext};
use crate::linalg::mat::{axpy, rref, Mat};
use crate::{Error, Result};

/// A subspace of `F_q^M` in canonical form.
///
/// The basis is the nonzero part of the reduced row echelon form of any
/// spanning set, so two subspaces are equal exactly when their bases are
/// entry-wise equal. The derived ordering compares the ambient dimension, then
/// the dimension, then the basis entries lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subspace {
    ambient: usize,
    basis: Mat,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Mat::zeros(0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Mat::identity(ambient),
            pivots: (0..ambient).collect(),
        }
    }

    /// Span of the rows of `m`.
    pub fn row_space(f: &FieldContext, m: &Mat) -> Self {
        let r = rref(f, m);
        Subspace {
            ambient: m.cols(),
            basis: r.matrix.select_rows(0..r.rank),
            pivots: r.pivots,
        }
    }

    /// Span of the columns of `m`.
    pub fn column_space(f: &FieldContext, m: &Mat) -> Self {
        Self::row_space(f, &m.transpose())
    }

    /// Span of a list of vectors of length `ambient`.
    pub fn span<V: AsRef<[Elem]>>(f: &FieldContext, ambient: usize, vectors: &[V]) -> Result<Self> {
        if vectors.is_empty() {
            return Ok(Self::zero(ambient));
        }
        let m = Mat::from_rows(vectors)?;
        if m.cols() != ambient {
            return Err(Error::AmbientMismatch(ambient, m.cols()));
        }
        Ok(Self::row_space(f, &m))
    }

    /// `{x : m·x = 0}`, a subspace of `F_q^{cols}`.
    pub fn null_space(f: &FieldContext, m: &Mat) -> Self {
        let r = rref(f, m);
        let n = m.cols();
        let free: Vec<usize> = (0..n).filter(|c| !r.pivots.contains(c)).collect();
        let mut rows = Vec::with_capacity(free.len());
        for &fc in &free {
            let mut v = vec![0; n];
            v[fc] = 1;
            for (i, &p) in r.pivots.iter().enumerate() {
                v[p] = f.neg(r.matrix.get(i, fc));
            }
            rows.push(v);
        }
        if rows.is_empty() {
            return Self::zero(n);
        }
        Self::row_space(f, &Mat::from_rows(&rows).expect("equal lengths"))
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    /// The `k×M` reduced row echelon basis.
    pub fn basis(&self) -> &Mat {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn check_ambient(&self, n: usize) -> Result<()> {
        if self.ambient == n {
            Ok(())
        } else {
            Err(Error::AmbientMismatch(self.ambient, n))
        }
    }

    /// Reduces `v` against the basis: the result has zeros at every pivot and
    /// is the same for all vectors of one coset.
    pub fn reduce(&self, f: &FieldContext, v: &[Elem]) -> Result<Vec<Elem>> {
        self.check_ambient(v.len())?;
        let mut w = v.to_vec();
        for (i, &p) in self.pivots.iter().enumerate() {
            let c = w[p];
            if c != 0 {
                axpy(f, &mut w, f.neg(c), self.basis.row(i));
            }
        }
        Ok(w)
    }

    pub fn contains_vector(&self, f: &FieldContext, v: &[Elem]) -> Result<bool> {
        Ok(self.reduce(f, v)?.iter().all(|&x| x == 0))
    }

    pub fn contains(&self, f: &FieldContext, other: &Subspace) -> Result<bool> {
        self.check_ambient(other.ambient)?;
        if other.dim() > self.dim() {
            return Ok(false);
        }
        for r in 0..other.dim() {
            if !self.contains_vector(f, other.basis.row(r))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, f: &FieldContext, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other.ambient)?;
        if other.dim() == 0 {
            return Ok(self.clone());
        }
        if self.dim() == 0 {
            return Ok(other.clone());
        }
        let stacked = self.basis.vstack(&other.basis)?;
        Ok(Subspace::row_space(f, &stacked))
    }

    pub fn intersection_dim(&self, f: &FieldContext, other: &Subspace) -> Result<usize> {
        let s = self.sum(f, other)?;
        Ok(self.dim() + other.dim() - s.dim())
    }

    /// Number of vectors, `q^k`, if it fits in a `u128`.
    pub fn size(&self, q: u32) -> Option<u128> {
        (q as u128).checked_pow(self.dim() as u32)
    }

    /// All `q^k` vectors, ordered lexicographically by their coefficient
    /// vectors over the basis (first coefficient most significant).
    pub fn enumerate_vectors(&self, f: &FieldContext, limit: u64) -> Result<Vec<Vec<Elem>>> {
        let q = f.order();
        let count = self.size(q).unwrap_or(u128::MAX);
        if count > limit as u128 {
            return Err(Error::TooLarge {
                what: "subspace vectors",
                count,
                limit,
            });
        }
        let k = self.dim();
        let mut out = Vec::with_capacity(count as usize);
        let mut coeffs = vec![0 as Elem; k];
        loop {
            let v = self
                .basis
                .left_mul_vec(f, &coeffs)
                .expect("coefficient vector has length k");
            out.push(v);
            // odometer increment, last coefficient fastest
            let mut i = k;
            loop {
                if i == 0 {
                    return Ok(out);
                }
                i -= 1;
                coeffs[i] += 1;
                if coeffs[i] < q {
                    break;
                }
                coeffs[i] = 0;
            }
        }
    }

    /// One representative per coset of `self` in `F_q^M`: the lexicographically
    /// smallest member, which is the one with zeros at every pivot.
    pub fn coset_representatives(&self, f: &FieldContext, limit: u64) -> Result<Vec<Vec<Elem>>> {
        let q = f.order();
        let free: Vec<usize> = (0..self.ambient)
            .filter(|c| !self.pivots.contains(c))
            .collect();
        let count = (q as u128)
            .checked_pow(free.len() as u32)
            .unwrap_or(u128::MAX);
        if count > limit as u128 {
            return Err(Error::TooLarge {
                what: "coset representatives",
                count,
                limit,
            });
        }
        let mut out = Vec::with_capacity(count as usize);
        let mut v = vec![0 as Elem; self.ambient];
        loop {
            out.push(v.clone());
            let mut i = free.len();
            loop {
                if i == 0 {
                    return Ok(out);
                }
                i -= 1;
                let c = free[i];
                v[c] += 1;
                if v[c] < q {
                    break;
                }
                v[c] = 0;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(q: u32) -> FieldContext {
        FieldContext::of_order(q).unwrap()
    }

    #[test]
    fn column_space_examples() {
        let f = gf(2);
        assert_eq!(Subspace::column_space(&f, &Mat::identity(3)), Subspace::full(3));
        let f3 = gf(3);
        let v = Mat::from_columns(3, &[[0, 2, 1]]).unwrap();
        let s = Subspace::column_space(&f3, &v);
        assert_eq!(s.dim(), 1);
        assert_eq!(s.basis().row(0), &[0, 1, 2]);
    }

    #[test]
    fn null_space_examples() {
        let f = gf(2);
        assert_eq!(Subspace::null_space(&f, &Mat::identity(4)).dim(), 0);
        assert_eq!(Subspace::null_space(&f, &Mat::zeros(1, 3)), Subspace::full(3));
        let ones = Mat::from_rows(&[[1, 1, 1]]).unwrap();
        let ns = Subspace::null_space(&f, &ones);
        assert_eq!(ns.dim(), 2);
        // brute force over F_2^3
        let mut members = 0;
        for x in 0..8u32 {
            let v = [x & 1, (x >> 1) & 1, (x >> 2) & 1];
            let in_kernel = (v[0] ^ v[1] ^ v[2]) == 0;
            assert_eq!(ns.contains_vector(&f, &v).unwrap(), in_kernel);
            members += in_kernel as usize;
        }
        assert_eq!(members, 4);
    }

    #[test]
    fn sums() {
        let f = gf(2);
        let e1 = Subspace::span(&f, 3, &[[1, 0, 0]]).unwrap();
        let e2 = Subspace::span(&f, 3, &[[0, 1, 0]]).unwrap();
        let s = e1.sum(&f, &e2).unwrap();
        assert_eq!(s.dim(), 2);
        assert_eq!(e1.sum(&f, &Subspace::zero(3)).unwrap(), e1);
        assert_eq!(e1.sum(&f, &e1).unwrap(), e1);
        assert_eq!(e1.intersection_dim(&f, &e2).unwrap(), 0);
        assert!(s.contains(&f, &e1).unwrap());
        assert!(Subspace::full(3).contains(&f, &s).unwrap());
        assert!(s.contains_vector(&f, &[0, 0, 0]).unwrap());
        assert_eq!(
            e1.sum(&f, &Subspace::zero(4)),
            Err(Error::AmbientMismatch(3, 4))
        );
    }

    #[test]
    fn vector_enumeration() {
        let f = gf(2);
        assert_eq!(
            Subspace::zero(2).enumerate_vectors(&f, 16).unwrap(),
            vec![vec![0, 0]]
        );
        assert_eq!(Subspace::full(2).enumerate_vectors(&f, 16).unwrap().len(), 4);
        let f3 = gf(3);
        let plane = Subspace::span(&f3, 3, &[[1, 0, 2], [0, 1, 1]]).unwrap();
        let vs = plane.enumerate_vectors(&f3, 100).unwrap();
        assert_eq!(vs.len(), 9);
        assert_eq!(vs.iter().filter(|v| v.iter().any(|&x| x != 0)).count(), 8);
        assert!(matches!(
            Subspace::full(5).enumerate_vectors(&f3, 100),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn coset_examples() {
        let f = gf(2);
        assert_eq!(
            Subspace::full(3).coset_representatives(&f, 100).unwrap(),
            vec![vec![0, 0, 0]]
        );
        assert_eq!(Subspace::zero(2).coset_representatives(&f, 100).unwrap().len(), 4);
    }

    #[test]
    fn coset_reps_are_lex_smallest() {
        let f = gf(3);
        let s = Subspace::span(&f, 3, &[[1, 2, 0]]).unwrap();
        let members = s.enumerate_vectors(&f, 100).unwrap();
        for rep in s.coset_representatives(&f, 100).unwrap() {
            let coset: Vec<Vec<u32>> = members
                .iter()
                .map(|m| rep.iter().zip(m).map(|(&a, &b)| f.add(a, b)).collect())
                .collect();
            assert_eq!(coset.iter().min().unwrap(), &rep);
        }
    }
}
