//! Erase each column of a codeword and rebuild it from a minimal recovery
//! set.

use std::sync::Arc;

use subspace_lrc::arraycode::{construction_std, StdScope};
use subspace_lrc::gf::FieldContext;
use subspace_lrc::linalg::text::matrix_to_string;
use subspace_lrc::locality::repair;
use subspace_lrc::{Error, Limits};

fn main() -> subspace_lrc::Result<()> {
    let limits = Limits::default();
    let gf2 = Arc::new(FieldContext::of_order(2)?);
    let code = construction_std(gf2, 1, 3, 6, StdScope::Par(0), &limits)?;
    let w = code.encode(&[1, 0, 1, 1, 0, 1])?;
    print!("codeword\n{}", matrix_to_string(code.q(), &w.0));

    for j in 0..code.n() {
        let r = repair(&code, &w, j, &limits)?;
        println!(
            "column {j}: rebuilt {:?} from columns {:?} ({} nodes), correct {}",
            r.column,
            r.recovery.columns,
            r.contacted,
            r.column == w.column(j)
        );
    }

    let mut broken = w.clone();
    let (row, col) = (0, 3);
    broken.0.set(row, col, 1 - broken.0.get(row, col));
    match repair(&code, &broken, 0, &limits) {
        Err(Error::Inconsistent(msg)) => println!("corrupted input detected: {msg}"),
        other => println!("unexpected outcome: {other:?}"),
    }
    Ok(())
}
