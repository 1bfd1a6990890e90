//! Finite fields `GF(p^m)` and extensions `GF(q^s)` over them.
//!
//! Elements are plain integers: the element with index `e` is the polynomial
//! whose coefficients are the base-`p` digits of `e`, least significant digit
//! first. So in `GF(4)` with modulus `x²+x+1`, `2` is `x` and `3` is `x+1`.

mod extension;
mod field;
mod poly;

pub use extension::ExtensionContext;
pub use field::{Elem, FieldContext};

use crate::{Error, Result};

/// Parses a field descriptor such as `gf(2)`, `gf(3)`, `gf(2^2)` or `gf(4)`
/// into `(p, m)`.
pub fn parse_descriptor(s: &str) -> Result<(u32, u32)> {
    let bad = || Error::Parse {
        line: 0,
        msg: format!("bad field descriptor {s:?}, expected gf(p) or gf(p^m)"),
    };
    let inner = s
        .trim()
        .strip_prefix("gf(")
        .or_else(|| s.trim().strip_prefix("GF("))
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(bad)?;
    let (p, m) = match inner.split_once('^') {
        Some((p, m)) => (
            p.trim().parse::<u64>().map_err(|_| bad())?,
            m.trim().parse::<u32>().map_err(|_| bad())?,
        ),
        None => {
            let q = inner.trim().parse::<u64>().map_err(|_| bad())?;
            prime_power(q).ok_or(Error::NotPrime(q))?
        }
    };
    if m == 0 || p > u32::MAX as u64 {
        return Err(bad());
    }
    Ok((p as u32, m))
}

/// Canonical descriptor for a field of characteristic `p` and degree `m`.
pub fn descriptor(p: u32, m: u32) -> String {
    if m == 1 {
        format!("gf({p})")
    } else {
        format!("gf({p}^{m})")
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits `q` as `p^m` with `p` prime, if possible.
pub(crate) fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let (mut r, mut m) = (q, 0);
    while r % p == 0 {
        r /= p;
        m += 1;
    }
    (r == 1).then_some((p, m))
}
