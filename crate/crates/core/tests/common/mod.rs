//! Independent reference computations shared by the integration tests.

#![allow(dead_code)]

use rand::Rng;
use subspace_lrc::arraycode::ArrayCode;
use subspace_lrc::gf::{Elem, FieldContext};
use subspace_lrc::linalg::Mat;

/// Prime powers up to 64.
pub const SMALL_ORDERS: [u32; 27] = [
    2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32, 37, 41, 43, 47, 49, 53, 59, 61, 64,
];

/// Schoolbook polynomial arithmetic on base-`p` digit encodings, reduced
/// by the given monic modulus.
pub struct PolyField {
    pub p: u32,
    pub m: u32,
    pub modulus: Vec<u32>,
}

impl PolyField {
    pub fn of(f: &FieldContext) -> Self {
        PolyField {
            p: f.characteristic(),
            m: f.degree(),
            modulus: f.modulus().to_vec(),
        }
    }

    fn digits(&self, mut a: u32) -> Vec<u32> {
        (0..self.m)
            .map(|_| {
                let d = a % self.p;
                a /= self.p;
                d
            })
            .collect()
    }

    fn undigits(&self, d: &[u32]) -> u32 {
        d.iter().rev().fold(0, |acc, &x| acc * self.p + x)
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        let (x, y) = (self.digits(a), self.digits(b));
        let s: Vec<u32> = x.iter().zip(&y).map(|(u, v)| (u + v) % self.p).collect();
        self.undigits(&s)
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        let (x, y) = (self.digits(a), self.digits(b));
        let m = self.m as usize;
        let mut prod = vec![0u64; 2 * m];
        for i in 0..m {
            for j in 0..m {
                prod[i + j] += x[i] as u64 * y[j] as u64;
            }
        }
        let p = self.p as u64;
        for i in (m..2 * m).rev() {
            let c = prod[i] % p;
            prod[i] = 0;
            if c == 0 {
                continue;
            }
            // x^i = x^{i-m} * (x^m) and x^m = -(modulus without its leading term)
            for k in 0..m {
                prod[i - m + k] += (p - self.modulus[k] as u64 % p) % p * c;
            }
        }
        let d: Vec<u32> = prod[..m].iter().map(|&c| (c % p) as u32).collect();
        self.undigits(&d)
    }
}

/// `[n k]_q` from the product formula.
pub fn gaussian(n: u32, k: u32, q: u128) -> u128 {
    if k > n {
        return 0;
    }
    let mut num = 1u128;
    let mut den = 1u128;
    for i in 0..k {
        num *= q.pow(n - i) - 1;
        den *= q.pow(i + 1) - 1;
    }
    num / den
}

pub fn pow(q: u32, e: usize) -> u64 {
    (q as u64).pow(e as u32)
}

/// Every vector of `F_q^len`, in lexicographic order.
pub fn all_vectors(q: u32, len: usize) -> Vec<Vec<Elem>> {
    let total = pow(q, len);
    (0..total)
        .map(|mut x| {
            let mut v = vec![0; len];
            for slot in v.iter_mut().rev() {
                *slot = (x % q as u64) as Elem;
                x /= q as u64;
            }
            v
        })
        .collect()
}

/// `mᵀG` by direct summation.
pub fn encode_flat(f: &FieldContext, g: &Mat, msg: &[Elem]) -> Vec<Elem> {
    (0..g.cols())
        .map(|c| (0..g.rows()).fold(0, |acc, r| f.add(acc, f.mul(msg[r], g.get(r, c)))))
        .collect()
}

/// Number of nonzero thick columns of a flattened codeword.
pub fn weight(b: usize, flat: &[Elem]) -> usize {
    flat.chunks(b).filter(|c| c.iter().any(|&x| x != 0)).count()
}

/// Weight histogram of a code computed message by message.
pub fn weight_histogram(c: &ArrayCode) -> std::collections::BTreeMap<usize, u64> {
    let mut h = std::collections::BTreeMap::new();
    for msg in all_vectors(c.q(), c.dim()) {
        *h.entry(weight(c.b(), &encode_flat(c.field(), c.generator(), &msg))).or_insert(0) += 1;
    }
    h
}

/// Rank by plain Gaussian elimination over the field.
pub fn rank(f: &FieldContext, m: &Mat) -> usize {
    let mut a: Vec<Vec<Elem>> = (0..m.rows()).map(|r| m.row(r).to_vec()).collect();
    let mut rank = 0;
    for col in 0..m.cols() {
        let Some(p) = (rank..a.len()).find(|&r| a[r][col] != 0) else {
            continue;
        };
        a.swap(rank, p);
        let inv = f.inv(a[rank][col]).unwrap();
        let pivot = a[rank].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r != rank && row[col] != 0 {
                let factor = f.mul(row[col], inv);
                for (x, &p) in row.iter_mut().zip(&pivot) {
                    *x = f.sub(*x, f.mul(factor, p));
                }
            }
        }
        rank += 1;
    }
    rank
}

pub fn random_matrix(f: &FieldContext, rows: usize, cols: usize, rng: &mut impl Rng) -> Mat {
    let data = (0..rows * cols).map(|_| rng.gen_range(0..f.order())).collect();
    Mat::from_vec(rows, cols, data).unwrap()
}

pub fn random_invertible(f: &FieldContext, n: usize, rng: &mut impl Rng) -> Mat {
    loop {
        let m = random_matrix(f, n, n, rng);
        if rank(f, &m) == n {
            return m;
        }
    }
}
