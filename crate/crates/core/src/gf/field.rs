use std::fmt;

use super::{descriptor, is_prime, poly};
use crate::{Error, Limits, Result};

/// A field element, encoded as an index in `0..q`.
pub type Elem = u32;

/// Fields up to this order get full `q×q` multiplication and addition tables.
const FULL_TABLE_MAX: u32 = 1 << 10;

/// Arithmetic for `GF(p^m)`.
///
/// The modulus is the lexicographically smallest monic irreducible polynomial
/// of degree `m`, ordering candidates by the integer encoding of their lower
/// coefficients. The context is immutable once built.
#[derive(Clone)]
pub struct FieldContext {
    p: u32,
    m: u32,
    q: u32,
    modulus: Vec<u32>,
    exp: Vec<u32>,
    log: Vec<u32>,
    neg: Vec<u32>,
    mul_table: Option<Vec<u16>>,
    add_table: Option<Vec<u16>>,
}

impl fmt::Debug for FieldContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldContext")
            .field("p", &self.p)
            .field("m", &self.m)
            .field("modulus", &self.modulus)
            .finish()
    }
}

impl PartialEq for FieldContext {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.m == other.m
    }
}

impl Eq for FieldContext {}

impl FieldContext {
    /// `GF(p^m)` with the default table limit of `2^16`.
    pub fn new(p: u32, m: u32) -> Result<Self> {
        Self::with_limit(p, m, Limits::default().field_order)
    }

    /// The field of order `q`, which must be a prime power.
    pub fn of_order(q: u32) -> Result<Self> {
        let (p, m) = super::prime_power(q as u64).ok_or(Error::NotPrime(q as u64))?;
        Self::new(p as u32, m)
    }

    pub fn with_limit(p: u32, m: u32, limit: u64) -> Result<Self> {
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        if m == 0 {
            return Err(Error::BadParams("field degree must be positive".into()));
        }
        let order = (p as u64).checked_pow(m).unwrap_or(u64::MAX);
        if order > limit || order > u16::MAX as u64 + 1 {
            return Err(Error::OrderTooLarge { order, limit });
        }
        let q = order as u32;
        let modulus = (0..(q as u64))
            .map(|i| poly::monic_from_index(i, m, p))
            .find(|f| poly::is_irreducible(f, p))
            .expect("an irreducible polynomial of every degree exists");

        let mut ctx = FieldContext {
            p,
            m,
            q,
            modulus,
            exp: Vec::new(),
            log: Vec::new(),
            neg: Vec::new(),
            mul_table: None,
            add_table: None,
        };
        ctx.neg = (0..q).map(|a| ctx.digitwise(a, 0, |x, _| (p - x) % p)).collect();
        ctx.build_log_tables();
        if q <= FULL_TABLE_MAX {
            let mut mul = vec![0u16; (q * q) as usize];
            let mut add = vec![0u16; (q * q) as usize];
            for a in 0..q {
                for b in 0..q {
                    mul[(a * q + b) as usize] = ctx.mul_log(a, b) as u16;
                    add[(a * q + b) as usize] = ctx.digitwise(a, b, |x, y| (x + y) % p) as u16;
                }
            }
            ctx.mul_table = Some(mul);
            ctx.add_table = Some(add);
        }
        Ok(ctx)
    }

    fn to_poly(&self, a: Elem) -> Vec<u32> {
        let mut c = poly::digits(a as u64, self.m as usize, self.p);
        poly::trim(&mut c);
        c
    }

    fn encode_poly(&self, c: &[u32]) -> Elem {
        c.iter().rev().fold(0, |acc, &d| acc * self.p + d)
    }

    fn digitwise(&self, a: Elem, b: Elem, f: impl Fn(u32, u32) -> u32) -> Elem {
        let (mut a, mut b) = (a, b);
        let (mut out, mut scale) = (0, 1);
        for _ in 0..self.m {
            out += f(a % self.p, b % self.p) * scale;
            a /= self.p;
            b /= self.p;
            scale *= self.p;
        }
        out
    }

    fn poly_mul(&self, a: Elem, b: Elem) -> Elem {
        let prod = poly::mul(&self.to_poly(a), &self.to_poly(b), self.p);
        self.encode_poly(&poly::rem(&prod, &self.modulus, self.p))
    }

    fn build_log_tables(&mut self) {
        let n = self.q - 1;
        if n == 1 {
            self.exp = vec![1, 1];
            self.log = vec![0, 0];
            return;
        }
        for g in 2..self.q {
            let mut powers = Vec::with_capacity(n as usize);
            let mut x = 1;
            loop {
                powers.push(x);
                x = self.poly_mul(x, g);
                if x == 1 {
                    break;
                }
            }
            if powers.len() as u32 == n {
                let mut log = vec![0; self.q as usize];
                for (i, &v) in powers.iter().enumerate() {
                    log[v as usize] = i as u32;
                }
                let mut exp = powers.clone();
                exp.extend_from_slice(&powers);
                self.exp = exp;
                self.log = log;
                return;
            }
        }
        unreachable!("the multiplicative group of a finite field is cyclic");
    }

    fn mul_log(&self, a: Elem, b: Elem) -> Elem {
        if a == 0 || b == 0 {
            0
        } else {
            self.exp[(self.log[a as usize] + self.log[b as usize]) as usize]
        }
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    /// Coefficients of the modulus polynomial, low to high, monic.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn descriptor(&self) -> String {
        descriptor(self.p, self.m)
    }

    /// A fixed generator of the multiplicative group.
    pub fn primitive(&self) -> Elem {
        self.exp[1]
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.q
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        debug_assert!(a < self.q && b < self.q);
        if self.p == 2 {
            a ^ b
        } else if let Some(t) = &self.add_table {
            t[(a * self.q + b) as usize] as Elem
        } else {
            self.digitwise(a, b, |x, y| (x + y) % self.p)
        }
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        self.neg[a as usize]
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        debug_assert!(a < self.q && b < self.q);
        match &self.mul_table {
            Some(t) => t[(a * self.q + b) as usize] as Elem,
            None => self.mul_log(a, b),
        }
    }

    pub fn inv(&self, a: Elem) -> Result<Elem> {
        if a == 0 {
            return Err(Error::DivisionByZero);
        }
        let n = self.q - 1;
        Ok(self.exp[((n - self.log[a as usize]) % n) as usize])
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: Elem, e: u64) -> Elem {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let n = (self.q - 1) as u64;
        let l = (self.log[a as usize] as u64 * (e % n)) % n;
        self.exp[l as usize]
    }

    /// `a + c·b`, the row-operation primitive.
    #[inline]
    pub fn add_scaled(&self, a: Elem, c: Elem, b: Elem) -> Elem {
        self.add(a, self.mul(c, b))
    }

    /// The element of the prime subfield with integer value `k mod p`.
    pub fn from_int(&self, k: u64) -> Elem {
        (k % self.p as u64) as Elem
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_fields() {
        let f = FieldContext::new(2, 1).unwrap();
        assert_eq!(f.order(), 2);
        assert_eq!(f.add(1, 1), 0);
        let f3 = FieldContext::new(3, 1).unwrap();
        assert_eq!(f3.inv(2).unwrap(), 2);
        assert_eq!(f3.neg(1), 2);
    }

    #[test]
    fn gf4_modulus_and_products() {
        let f = FieldContext::new(2, 2).unwrap();
        assert_eq!(f.modulus(), &[1, 1, 1]);
        // x·(x+1) = x²+x = 1 mod x²+x+1
        assert_eq!(f.mul(2, 3), 1);
        assert_eq!(f.mul(2, 2), 3);
    }

    #[test]
    fn errors() {
        assert_eq!(FieldContext::new(4, 1).unwrap_err(), Error::NotPrime(4));
        assert!(matches!(
            FieldContext::new(2, 17),
            Err(Error::OrderTooLarge { .. })
        ));
        assert!(matches!(
            FieldContext::with_limit(3, 3, 10),
            Err(Error::OrderTooLarge { order: 27, limit: 10 })
        ));
        let f = FieldContext::new(5, 1).unwrap();
        assert_eq!(f.inv(0), Err(Error::DivisionByZero));
        assert_eq!(f.div(3, 0), Err(Error::DivisionByZero));
    }

    #[test]
    fn gf8_modulus_is_smallest_irreducible() {
        let f = FieldContext::new(2, 3).unwrap();
        assert_eq!(f.modulus(), &[1, 1, 0, 1]);
    }

    #[test]
    fn log_tables_used_above_table_size() {
        let f = FieldContext::new(2, 11).unwrap();
        assert!(f.mul_table.is_none());
        for a in [1u32, 2, 3, 777, 2047] {
            assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
            assert_eq!(f.mul(a, 1), a);
        }
        let f = FieldContext::new(3, 7).unwrap();
        for a in [1u32, 2, 100, 2186] {
            assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
            assert_eq!(f.add(a, f.neg(a)), 0);
        }
    }
}
