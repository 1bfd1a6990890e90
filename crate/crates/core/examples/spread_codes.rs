//! Spread codes: constant weight q^{M-b}, MDS when M = 2b, and perfect duals.

use std::sync::Arc;

use subspace_lrc::arraycode::{construction_spread, perfectness};
use subspace_lrc::designs::{build_spread, verify_spread, SpreadMethod};
use subspace_lrc::gf::FieldContext;
use subspace_lrc::Limits;

fn main() -> subspace_lrc::Result<()> {
    let limits = Limits::default();
    for (q, m, b) in [(2u32, 4usize, 2usize), (3, 4, 2), (2, 6, 2), (2, 6, 3)] {
        let field = Arc::new(FieldContext::of_order(q)?);
        let design = build_spread(&field, m, b, SpreadMethod::GabidulinEchelon, &limits)?;
        let report = verify_spread(&field, &design, &limits)?;
        let code = construction_spread(field, m, b, &limits)?;
        let weights = code.weight_distribution(&limits)?;
        let dual = code.dual()?;
        let p = perfectness(&dual);
        println!(
            "q={q} M={m} b={b}: {} blocks (design valid: {}), code {} weights {weights:?}, MDS {}",
            design.blocks.len(),
            report.all_passed(),
            code.summary(),
            code.is_mds(&limits)?,
        );
        println!(
            "  dual {} distance {}, ball size {} vs q^M = {}, perfect {}",
            dual.summary(),
            dual.min_distance(&limits)?.distance,
            p.ball_size,
            (q as u64).pow(m as u32),
            p.is_perfect
        );
    }
    Ok(())
}
