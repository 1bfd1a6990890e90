//! Canonical subspaces of F_2^4: spans, sums, intersections, null spaces
//! and coset representatives.

use subspace_lrc::gf::FieldContext;
use subspace_lrc::linalg::{rref, Mat, Subspace};

fn main() -> subspace_lrc::Result<()> {
    let f = FieldContext::of_order(2)?;
    let m = Mat::from_rows(&[[1, 1, 0, 1], [0, 1, 1, 1], [1, 0, 1, 0]])?;
    let r = rref(&f, &m);
    println!("rank {} with pivots {:?}", r.rank, r.pivots);

    let a = Subspace::row_space(&f, &m);
    let shuffled = Mat::from_rows(&[[1, 0, 1, 0], [1, 1, 0, 1]])?;
    let b = Subspace::row_space(&f, &shuffled);
    println!("same subspace from two bases: {}", a == b);

    let e = Subspace::span(&f, 4, &[[0, 0, 0, 1], [0, 0, 1, 0]])?;
    let s = a.sum(&f, &e)?;
    println!(
        "dim a = {}, dim e = {}, dim(a+e) = {}, dim(a∩e) = {}",
        a.dim(),
        e.dim(),
        s.dim(),
        a.intersection_dim(&f, &e)?
    );

    let kernel = Subspace::null_space(&f, &Mat::from_rows(&[[1, 1, 1, 1]])?);
    println!("vectors with even weight form a {}-dimensional subspace:", kernel.dim());
    for v in kernel.enumerate_vectors(&f, 1 << 10)? {
        println!("  {v:?}");
    }
    let reps = a.coset_representatives(&f, 1 << 10)?;
    println!("cosets of a: {reps:?}");
    Ok(())
}
