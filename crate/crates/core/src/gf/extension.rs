use std::sync::Arc;

use super::{poly, Elem, FieldContext};
use crate::{Error, Limits, Result};

/// `GF(q^s)` viewed as an `s`-dimensional vector space over `GF(q)`.
///
/// The big field is built as `GF(p^{ms})` in its own encoding. The base field
/// embeds into it through the smallest root of the base modulus, and the fixed
/// basis over the base field is `1, x, …, x^{s-1}` where `x` is the class of
/// the indeterminate of the big field's modulus.
#[derive(Debug, Clone)]
pub struct ExtensionContext {
    base: Arc<FieldContext>,
    big: FieldContext,
    s: u32,
    embed: Vec<Elem>,
    basis: Vec<Elem>,
    /// `expansion[x*s..(x+1)*s]` holds the coordinates of `x` over the basis.
    expansion: Vec<Elem>,
}

impl ExtensionContext {
    pub fn new(base: Arc<FieldContext>, s: u32) -> Result<Self> {
        Self::with_limit(base, s, Limits::default().field_order)
    }

    pub fn with_limit(base: Arc<FieldContext>, s: u32, limit: u64) -> Result<Self> {
        if s == 0 {
            return Err(Error::BadParams("extension degree must be positive".into()));
        }
        let (p, m) = (base.characteristic(), base.degree());
        let big = FieldContext::with_limit(p, m * s, limit)?;

        // Smallest root of the base modulus inside the big field.
        let f = base.modulus();
        let beta = big
            .elements()
            .find(|&y| {
                f.iter()
                    .rev()
                    .fold(0, |acc, &c| big.add(big.mul(acc, y), big.from_int(c as u64)))
                    == 0
            })
            .expect("the big field contains a copy of the base field");
        let embed: Vec<Elem> = base
            .elements()
            .map(|a| {
                let digits = poly::digits(a as u64, m as usize, p);
                digits.iter().enumerate().fold(0, |acc, (i, &d)| {
                    big.add(acc, big.mul(big.from_int(d as u64), big.pow(beta, i as u64)))
                })
            })
            .collect();

        let basis: Vec<Elem> = if m * s == 1 {
            vec![1]
        } else {
            // p is the encoding of the indeterminate x
            (0..s).map(|i| big.pow(p, i as u64)).collect()
        };

        let q = base.order() as usize;
        let total = big.order() as usize;
        let mut expansion = vec![0; total * s as usize];
        let mut seen = vec![false; total];
        for idx in 0..total {
            let coords = poly::digits(idx as u64, s as usize, q as u32);
            let x = coords.iter().zip(&basis).fold(0, |acc, (&c, &b)| {
                big.add(acc, big.mul(embed[c as usize], b))
            });
            assert!(!seen[x as usize], "extension basis must be independent");
            seen[x as usize] = true;
            expansion[x as usize * s as usize..(x as usize + 1) * s as usize]
                .copy_from_slice(&coords);
        }

        Ok(ExtensionContext {
            base,
            big,
            s,
            embed,
            basis,
            expansion,
        })
    }

    pub fn base(&self) -> &Arc<FieldContext> {
        &self.base
    }

    pub fn big(&self) -> &FieldContext {
        &self.big
    }

    pub fn degree(&self) -> u32 {
        self.s
    }

    /// The fixed basis of `GF(q^s)` over `GF(q)`, as big-field elements.
    pub fn basis(&self) -> &[Elem] {
        &self.basis
    }

    /// Image of a base-field element in the big field.
    pub fn embed(&self, a: Elem) -> Elem {
        self.embed[a as usize]
    }

    /// Coordinates of `x` over the fixed basis.
    pub fn expand(&self, x: Elem) -> Vec<Elem> {
        let s = self.s as usize;
        self.expansion[x as usize * s..(x as usize + 1) * s].to_vec()
    }

    pub fn recombine(&self, v: &[Elem]) -> Result<Elem> {
        if v.len() != self.s as usize {
            return Err(Error::DimensionMismatch {
                expected: self.s as usize,
                found: v.len(),
            });
        }
        Ok(v.iter().zip(&self.basis).fold(0, |acc, (&c, &b)| {
            self.big.add(acc, self.big.mul(self.embed(c), b))
        }))
    }

    /// `x^(q^i)`.
    pub fn frobenius(&self, x: Elem, i: u32) -> Elem {
        let q = self.base.order() as u64;
        let n = self.big.order() as u64 - 1;
        // q^i mod (q^s - 1), computed without overflow
        let mut e = 1u64;
        for _ in 0..i {
            e = e * q % n.max(1);
        }
        if x == 0 {
            0
        } else {
            self.big.pow(x, if e == 0 { n } else { e })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ext(p: u32, m: u32, s: u32) -> ExtensionContext {
        ExtensionContext::new(Arc::new(FieldContext::new(p, m).unwrap()), s).unwrap()
    }

    #[test]
    fn gf4_over_gf2() {
        let e = ext(2, 1, 2);
        assert_eq!(e.frobenius(0, 1), 0);
        for x in 0..4 {
            assert_eq!(e.frobenius(x, 2), x);
            assert_eq!(e.frobenius(x, 1), e.big().mul(x, x));
        }
    }

    #[test]
    fn round_trip_gf8() {
        let e = ext(2, 1, 3);
        assert_eq!(e.expand(0), vec![0, 0, 0]);
        for x in 0..8 {
            assert_eq!(e.recombine(&e.expand(x)).unwrap(), x);
        }
        assert!(matches!(
            e.recombine(&[1, 0]),
            Err(Error::DimensionMismatch { expected: 3, found: 2 })
        ));
    }

    #[test]
    fn expansion_is_additive_gf9() {
        let e = ext(3, 1, 2);
        let base = e.base().clone();
        for a in 0..9 {
            for b in 0..9 {
                let lhs = e.expand(e.big().add(a, b));
                let rhs: Vec<_> = e
                    .expand(a)
                    .iter()
                    .zip(e.expand(b))
                    .map(|(&x, y)| base.add(x, y))
                    .collect();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn non_prime_base_embeds_as_subfield() {
        // GF(16) over GF(4)
        let e = ext(2, 2, 2);
        let base = e.base().clone();
        for a in 0..4 {
            for b in 0..4 {
                assert_eq!(e.embed(base.mul(a, b)), e.big().mul(e.embed(a), e.embed(b)));
                assert_eq!(e.embed(base.add(a, b)), e.big().add(e.embed(a), e.embed(b)));
            }
            // embedded elements are fixed by the q-power map
            assert_eq!(e.frobenius(e.embed(a), 1), e.embed(a));
        }
        for x in 0..16 {
            assert_eq!(e.recombine(&e.expand(x)).unwrap(), x);
            assert_eq!(e.frobenius(x, 2), x);
        }
    }
}
