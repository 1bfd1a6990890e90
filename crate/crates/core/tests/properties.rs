mod common;

use std::sync::Arc;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use subspace_lrc::arraycode::{code_from_subspaces, construction_spread, ArrayCode, Provenance};
use subspace_lrc::designs::{
    build_mrd_fullrank, build_spread, build_std, count_intersecting, enumerate_grassmannian, verify_spread,
    verify_std, SpreadMethod,
};
use subspace_lrc::gf::{Elem, FieldContext};
use subspace_lrc::linalg::{rref, Mat, Subspace};
use subspace_lrc::locality::{node_locality, symbol_locality};
use subspace_lrc::{Error, Limits};

use common::{all_vectors, encode_flat, gaussian, pow, random_invertible, rank, weight, weight_histogram};

fn field(q: u32) -> Arc<FieldContext> {
    Arc::new(FieldContext::of_order(q).unwrap())
}

fn matrix(q: u32, rows: usize, cols: usize, data: &[u32]) -> Mat {
    Mat::from_vec(rows, cols, data.iter().map(|&x| x % q).collect()).unwrap()
}

fn small_matrix() -> impl Strategy<Value = (u32, usize, usize, Vec<u32>)> {
    (prop::sample::select(vec![2u32, 3, 4, 5]), 1usize..5, 1usize..6)
        .prop_flat_map(|(q, r, c)| (Just(q), Just(r), Just(c), prop::collection::vec(0u32..q, r * c)))
}

fn is_rref(m: &Mat, rank: usize, pivots: &[usize]) -> bool {
    let leading_one = pivots.iter().enumerate().all(|(r, &p)| {
        m.get(r, p) == 1 && (0..p).all(|c| m.get(r, c) == 0) && (0..m.rows()).all(|o| o == r || m.get(o, p) == 0)
    });
    let increasing = pivots.windows(2).all(|w| w[0] < w[1]);
    let zero_tail = (rank..m.rows()).all(|r| m.row(r).iter().all(|&x| x == 0));
    leading_one && increasing && zero_tail && pivots.len() == rank
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rref_is_canonical_and_row_equivalent((q, r, c, data) in small_matrix()) {
        let f = field(q);
        let m = matrix(q, r, c, &data);
        let red = rref(&f, &m);
        prop_assert!(is_rref(&red.matrix, red.rank, &red.pivots));
        prop_assert_eq!(red.rank, rank(&f, &m));
        let stacked = m.vstack(&red.matrix).unwrap();
        prop_assert_eq!(rank(&f, &stacked), red.rank);
    }

    #[test]
    fn column_space_ignores_basis_change((q, r, c, data) in small_matrix(), seed in any::<u64>()) {
        let f = field(q);
        let b = matrix(q, r, c, &data);
        let t = random_invertible(&f, c, &mut ChaCha8Rng::seed_from_u64(seed));
        let bt = b.mul(&f, &t).unwrap();
        prop_assert_eq!(Subspace::column_space(&f, &b), Subspace::column_space(&f, &bt));
    }

    #[test]
    fn sum_and_intersection_dimensions(
        q in prop::sample::select(vec![2u32, 3, 4]),
        ambient in 1usize..6,
        seed in any::<u64>(),
    ) {
        let f = field(q);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = Subspace::row_space(&f, &common::random_matrix(&f, 3, ambient, &mut rng));
        let b = Subspace::row_space(&f, &common::random_matrix(&f, 2, ambient, &mut rng));
        let s = a.sum(&f, &b).unwrap();
        prop_assert_eq!(a.dim() + b.dim(), s.dim() + a.intersection_dim(&f, &b).unwrap());
        prop_assert!(s.contains(&f, &a).unwrap() && s.contains(&f, &b).unwrap());
    }

    #[test]
    fn null_space_annihilates((q, r, c, data) in small_matrix()) {
        let f = field(q);
        let m = matrix(q, r, c, &data);
        let k = Subspace::null_space(&f, &m);
        prop_assert_eq!(k.dim(), c - rank(&f, &m));
        for v in k.enumerate_vectors(&f, 1 << 12).unwrap() {
            prop_assert!(m.mul_vec(&f, &v).unwrap().iter().all(|&x| x == 0));
        }
    }

    #[test]
    fn encoding_is_linear_and_weights_are_column_counts(
        q in prop::sample::select(vec![2u32, 3]),
        seed in any::<u64>(),
    ) {
        let f = field(q);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (b, n, m) = (2, 4, 3);
        let g = common::random_matrix(&f, m, b * n, &mut rng);
        prop_assume!(rank(&f, &g) == m);
        let code = ArrayCode::from_generator(f.clone(), b, g.clone(), Provenance::new("random")).unwrap();
        let vs = all_vectors(q, m);
        let (x, y) = (&vs[seed as usize % vs.len()], &vs[(seed >> 20) as usize % vs.len()]);
        let sum: Vec<Elem> = x.iter().zip(y).map(|(&a, &b)| f.add(a, b)).collect();
        let cx = code.encode(x).unwrap().flatten();
        let cy = code.encode(y).unwrap().flatten();
        let cs = code.encode(&sum).unwrap().flatten();
        let added: Vec<Elem> = cx.iter().zip(&cy).map(|(&a, &b)| f.add(a, b)).collect();
        prop_assert_eq!(&cs, &added);
        prop_assert_eq!(&cs, &encode_flat(&f, &g, &sum));
        let w = code.encode(&sum).unwrap();
        let nonzero_symbols = cs.iter().filter(|&&s| s != 0).count();
        prop_assert_eq!(w.weight(), weight(b, &cs));
        prop_assert!(w.weight() * b >= nonzero_symbols);
    }

    #[test]
    fn random_codes_match_direct_scan(
        q in prop::sample::select(vec![2u32, 3]),
        seed in any::<u64>(),
    ) {
        let f = field(q);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = common::random_matrix(&f, 3, 10, &mut rng);
        prop_assume!(rank(&f, &g) == 3);
        let code = ArrayCode::from_generator(f, 2, g, Provenance::new("random")).unwrap();
        let limits = Limits::default();
        let hist = weight_histogram(&code);
        prop_assert_eq!(code.weight_distribution(&limits).unwrap(), hist.clone());
        let d = hist.keys().copied().find(|&w| w > 0).unwrap();
        prop_assert_eq!(code.min_distance(&limits).unwrap().distance, d);
    }

    #[test]
    fn dual_codewords_are_orthogonal_and_dual_distance_is_bounded_by_symbol_recovery(
        q in prop::sample::select(vec![2u32, 3]),
        seed in any::<u64>(),
    ) {
        let f = field(q);
        let limits = Limits::default();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let ambient = 3;
        let blocks: Vec<Subspace> = (0..5)
            .map(|_| Subspace::row_space(&f, &common::random_matrix(&f, 2, ambient, &mut rng)))
            .collect();
        prop_assume!(blocks.iter().all(|s| s.dim() == 2));
        let code = match code_from_subspaces(f.clone(), &blocks, 2, Provenance::new("random")) {
            Ok(c) => c,
            Err(Error::RankDeficient { .. }) => return Ok(()),
            Err(e) => return Err(TestCaseError::fail(e.to_string())),
        };
        let dual = code.dual().unwrap();
        let g = code.generator();
        for r in 0..dual.dim() {
            for s in 0..g.rows() {
                let dot = subspace_lrc::linalg::dot(&f, dual.generator().row(r), g.row(s));
                prop_assert_eq!(dot, 0);
            }
        }
        if let Ok((rs, witnesses)) = symbol_locality(&code, &limits) {
            let smallest = witnesses.iter().map(|w| w.size()).min().unwrap();
            prop_assert!(dual.min_distance(&limits).unwrap().distance <= smallest + 1);
            if let Ok((rn, _)) = node_locality(&code, &limits) {
                prop_assert!(rs <= rn);
            }
        }
    }
}

#[test]
fn coset_representatives_partition_the_space() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for q in [2u32, 3] {
        let f = field(q);
        for ambient in 1..=4 {
            let every = all_vectors(q, ambient);
            for k in 0..=ambient {
                let s = Subspace::row_space(&f, &common::random_matrix(&f, k, ambient, &mut rng));
                let reps = s.coset_representatives(&f, 1 << 12).unwrap();
                assert_eq!(reps.len() as u64, pow(q, ambient - s.dim()));
                for (i, a) in reps.iter().enumerate() {
                    for b in &reps[i + 1..] {
                        let diff: Vec<Elem> = a.iter().zip(b).map(|(&x, &y)| f.sub(x, y)).collect();
                        assert!(!s.contains_vector(&f, &diff).unwrap());
                    }
                }
                let members = s.enumerate_vectors(&f, 1 << 12).unwrap();
                let mut covered: Vec<Vec<Elem>> = Vec::new();
                for r in &reps {
                    for x in &members {
                        covered.push(r.iter().zip(x).map(|(&a, &b)| f.add(a, b)).collect());
                    }
                }
                covered.sort();
                assert_eq!(covered, every);
            }
        }
    }
}

/// For `V' ⊂ F_q^{M-1}` of dimension `b-1` and a nonzero `u ⟂ V'`, `uᵀx` is
/// constant on cosets of `V'` and takes each value on `q^{M-b-1}` cosets.
#[test]
fn orthogonal_functional_is_constant_on_cosets() {
    let limits = Limits::default();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for q in [2u32, 3, 4, 5, 7, 8] {
        let f = field(q);
        for m in 2..=12usize {
            if pow(q, m) > 1 << 12 {
                break;
            }
            for b in 2..m {
                let ambient = m - 1;
                let subspaces: Vec<Subspace> = if gaussian(ambient as u32, (b - 1) as u32, q as u128) <= 200 {
                    enumerate_grassmannian(&f, ambient, b - 1, &limits).unwrap()
                } else {
                    (0..20)
                        .map(|_| loop {
                            let s = Subspace::row_space(&f, &common::random_matrix(&f, b - 1, ambient, &mut rng));
                            if s.dim() == b - 1 {
                                break s;
                            }
                        })
                        .collect()
                };
                for v in subspaces {
                    let orth = Subspace::null_space(&f, v.basis());
                    let us = orth.enumerate_vectors(&f, 1 << 12).unwrap();
                    let members = v.enumerate_vectors(&f, 1 << 12).unwrap();
                    let reps = v.coset_representatives(&f, 1 << 12).unwrap();
                    for u in us.iter().filter(|u| u.iter().any(|&x| x != 0)).take(4) {
                        let mut per_value = vec![0u64; q as usize];
                        for r in &reps {
                            let value = subspace_lrc::linalg::dot(&f, u, r);
                            for x in &members {
                                let y: Vec<Elem> = r.iter().zip(x).map(|(&a, &b)| f.add(a, b)).collect();
                                assert_eq!(subspace_lrc::linalg::dot(&f, u, &y), value);
                            }
                            per_value[value as usize] += 1;
                        }
                        assert!(per_value.iter().all(|&c| c == pow(q, m - b - 1)), "{per_value:?}");
                    }
                }
            }
        }
    }
}

#[test]
fn grassmannian_sizes_match_product_formula() {
    let limits = Limits::default();
    for q in [2u32, 3, 4, 5, 7, 8, 9, 16] {
        let f = field(q);
        for m in 1..=12usize {
            if pow(q, m) > 1 << 12 {
                break;
            }
            for k in 0..=m {
                let expected = gaussian(m as u32, k as u32, q as u128);
                if expected > 20_000 {
                    continue;
                }
                let all = enumerate_grassmannian(&f, m, k, &limits).unwrap();
                assert_eq!(all.len() as u128, expected, "q={q} M={m} k={k}");
                assert!(all.windows(2).all(|w| w[0] < w[1]));
                assert!(all.iter().all(|s| s.dim() == k));
            }
        }
    }
}

#[test]
fn intersection_counts_match_enumeration() {
    let limits = Limits::default();
    for q in [2u32, 3] {
        let f = field(q);
        for n in 1..=5usize {
            for k in 0..=n {
                let fixed = Subspace::span(&f, n, &(0..k).map(|i| unit(n, i)).collect::<Vec<_>>()).unwrap();
                for k2 in 0..=n {
                    let all = enumerate_grassmannian(&f, n, k2, &limits).unwrap();
                    for i in 0..=k.min(k2) {
                        let counted = all.iter().filter(|s| s.intersection_dim(&f, &fixed).unwrap() == i).count();
                        match count_intersecting(n, k, k2, i, q as u64) {
                            Ok(c) => assert_eq!(c, counted.into(), "n={n} k={k} k'={k2} i={i}"),
                            Err(_) => assert_eq!(counted, 0),
                        }
                    }
                }
            }
        }
    }
}

fn unit(n: usize, i: usize) -> Vec<Elem> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

#[test]
fn every_small_spread_is_valid() {
    let limits = Limits::default();
    for q in [2u32, 3, 4] {
        let f = field(q);
        for m in 1..=12usize {
            if pow(q, m) > 1 << 12 {
                break;
            }
            for b in (1..=m).filter(|b| m % b == 0) {
                for method in [SpreadMethod::GabidulinEchelon, SpreadMethod::Desarguesian] {
                    let d = build_spread(&f, m, b, method, &limits).unwrap();
                    let report = verify_spread(&f, &d, &limits).unwrap();
                    assert!(report.all_passed(), "q={q} M={m} b={b} {method}: {report:?}");
                    let blocks = (pow(q, m) - 1) / (pow(q, b) - 1);
                    assert_eq!(d.blocks.len() as u64, blocks);
                }
            }
        }
    }
    let f = field(2);
    let code = construction_spread(f, 4, 2, &limits).unwrap();
    assert_eq!(code.n(), 5);
}

#[test]
fn every_small_transversal_design_is_valid() {
    let limits = Limits::default();
    for q in [2u32, 3] {
        let f = field(q);
        for b in 1..=3usize {
            for m in b..=4usize {
                if pow(q, b + m) > 1 << 8 {
                    continue;
                }
                for t in 1..=b {
                    let d = build_std(&f, t, b, m, &limits).unwrap();
                    let report = verify_std(&f, &d, &limits).unwrap();
                    assert!(report.all_passed(), "q={q} t={t} b={b} m={m}: {report:?}");
                    assert_eq!(d.blocks.len() as u64, pow(q, m * t));
                    assert_eq!(d.classes.len() as u64, pow(q, m * (t - 1)));
                }
            }
        }
    }
}

#[test]
fn fullrank_mrd_codes_meet_the_bound() {
    let limits = Limits::default();
    for q in [2u32, 3] {
        let f = field(q);
        for b in 1..=3usize {
            for s in b..=4usize {
                if pow(q, s) > 100 {
                    continue;
                }
                let code = build_mrd_fullrank(&f, b, s, &limits).unwrap();
                assert_eq!(code.codewords.len() as u64, pow(q, s));
                for (i, x) in code.codewords.iter().enumerate() {
                    for y in &code.codewords[i + 1..] {
                        let diff: Vec<Elem> = x.data().iter().zip(y.data()).map(|(&a, &c)| f.sub(a, c)).collect();
                        assert_eq!(rank(&f, &Mat::from_vec(b, s, diff).unwrap()), b);
                    }
                }
            }
        }
    }
}
