//! Codes whose columns are all b-dimensional subspaces of F_q^M: constant
//! weight, distance and locality.

use std::sync::Arc;

use subspace_lrc::arraycode::{construction_all_subspaces, CodeReport};
use subspace_lrc::designs::gaussian;
use subspace_lrc::gf::FieldContext;
use subspace_lrc::locality::{node_locality, symbol_locality};
use subspace_lrc::Limits;

fn main() -> subspace_lrc::Result<()> {
    let limits = Limits::default();
    for (q, m, b) in [(2u32, 3usize, 1usize), (2, 3, 2), (2, 4, 2), (3, 3, 2)] {
        let field = Arc::new(FieldContext::of_order(q)?);
        let code = construction_all_subspaces(field, m, b, &limits)?;
        let report = CodeReport::build(&code, &limits)?;
        let expected = gaussian(m, b, q as u64)? - gaussian(m - 1, b, q as u64)?;
        let (rs, _) = symbol_locality(&code, &limits)?;
        let (rn, _) = node_locality(&code, &limits)?;
        println!(
            "q={q} M={m} b={b}: {} d={} (closed form {expected}) weights {:?} r_s={rs} r_n={rn}",
            code.summary(),
            report.distance.unwrap_or_default(),
            report.weight_distribution.unwrap_or_default(),
        );
    }
    Ok(())
}
