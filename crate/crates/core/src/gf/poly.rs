//! Dense polynomials over a prime field `GF(p)`, coefficients low to high.

pub(crate) fn trim(a: &mut Vec<u32>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

fn inv_mod(a: u32, p: u32) -> u32 {
    // p is prime, so a^(p-2) is the inverse
    let (mut base, mut e, mut acc) = (a as u64 % p as u64, p as u64 - 2, 1u64);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    acc as u32
}

/// Remainder of `a` modulo a nonzero `d`.
pub(crate) fn rem(a: &[u32], d: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    trim(&mut r);
    let mut d = d.to_vec();
    trim(&mut d);
    let dl = d.len();
    let lead_inv = inv_mod(*d.last().expect("nonzero divisor"), p) as u64;
    while r.len() >= dl {
        let shift = r.len() - dl;
        let factor = *r.last().unwrap() as u64 * lead_inv % p as u64;
        for (i, &c) in d.iter().enumerate() {
            let sub = factor * c as u64 % p as u64;
            let x = &mut r[shift + i];
            *x = ((*x as u64 + p as u64 - sub) % p as u64) as u32;
        }
        trim(&mut r);
    }
    r
}

pub(crate) fn mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x as u64 * y as u64) % p as u64;
        }
    }
    let mut out: Vec<u32> = out.into_iter().map(|c| c as u32).collect();
    trim(&mut out);
    out
}

/// Monic polynomial of degree `deg` whose lower coefficients are the base-`p`
/// digits of `index`.
pub(crate) fn monic_from_index(index: u64, deg: u32, p: u32) -> Vec<u32> {
    let mut c = digits(index, deg as usize, p);
    c.push(1);
    c
}

pub(crate) fn digits(mut x: u64, len: usize, p: u32) -> Vec<u32> {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push((x % p as u64) as u32);
        x /= p as u64;
    }
    out
}

/// Trial division by every monic polynomial of degree `1..=deg/2`.
pub(crate) fn is_irreducible(f: &[u32], p: u32) -> bool {
    let deg = f.len() as u32 - 1;
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d);
        for idx in 0..count {
            let g = monic_from_index(idx, d, p);
            if rem(f, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn irreducible_quadratics_over_gf2() {
        // x², x²+1, x²+x, x²+x+1: only the last is irreducible
        let irr: Vec<u64> = (0..4)
            .filter(|&i| is_irreducible(&monic_from_index(i, 2, 2), 2))
            .collect();
        assert_eq!(irr, vec![3]);
    }

    #[test]
    fn remainder() {
        // x³ mod (x²+x+1) over GF(2) = 1
        assert_eq!(rem(&[0, 0, 0, 1], &[1, 1, 1], 2), vec![1]);
        // (x+1)(x+2) = x²+3x+2 = x²+2 over GF(3)
        assert_eq!(mul(&[1, 1], &[2, 1], 3), vec![2, 0, 1]);
    }
}
