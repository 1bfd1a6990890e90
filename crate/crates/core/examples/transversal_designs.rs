//! Resolvable subspace transversal designs and the two codes built from
//! them: one parallel class, and the full block set.

use std::sync::Arc;

use subspace_lrc::arraycode::{construction_std, perfectness, StdScope};
use subspace_lrc::designs::{build_std, verify_std};
use subspace_lrc::gf::FieldContext;
use subspace_lrc::locality::symbol_locality;
use subspace_lrc::Limits;

fn main() -> subspace_lrc::Result<()> {
    let limits = Limits::default();
    let gf2 = Arc::new(FieldContext::of_order(2)?);

    let design = build_std(&gf2, 2, 2, 2, &limits)?;
    println!(
        "design t=2 b=2 m=2: {} points, {} groups, {} blocks, {} parallel classes",
        design.points.len(),
        design.groups.len(),
        design.blocks.len(),
        design.classes.len()
    );
    for check in verify_std(&gf2, &design, &limits)?.checks {
        println!("  {:<28} {}", check.name, if check.passed { "ok" } else { "FAILED" });
    }

    let par = construction_std(gf2.clone(), 1, 3, 6, StdScope::Par(0), &limits)?;
    let p = perfectness(&par.dual()?);
    println!(
        "one parallel class, b=3 M=6: {} distance {} weights {:?}, dual ratio {}/{}",
        par.summary(),
        par.min_distance(&limits)?.distance,
        par.weight_distribution(&limits)?,
        p.ratio_num,
        p.ratio_den
    );

    let full = construction_std(gf2, 2, 2, 4, StdScope::Full, &limits)?;
    let (rs, _) = symbol_locality(&full, &limits)?;
    println!(
        "full block set, t=2 b=2 M=4: {} distance {} r_s={rs}",
        full.summary(),
        full.min_distance(&limits)?.distance
    );
    Ok(())
}
