//! Disjoint recovery sets: exact packing search against the explicit
//! pairing of 2-dimensional subspaces.

use std::sync::Arc;

use subspace_lrc::arraycode::construction_all_subspaces;
use subspace_lrc::gf::FieldContext;
use subspace_lrc::locality::{grassmann_pairing, node_availability, pairing_columns, symbol_availability};
use subspace_lrc::Limits;

fn main() -> subspace_lrc::Result<()> {
    let limits = Limits::default();
    for (q, m) in [(2u32, 3usize), (2, 4), (4, 3), (3, 3)] {
        let field = Arc::new(FieldContext::of_order(q)?);
        let code = construction_all_subspaces(field.clone(), m, 2, &limits)?;
        let node = node_availability(&code, 0, 2, &limits)?;
        let symbol = symbol_availability(&code, 0, 0, 1, &limits)?;
        let pairs = grassmann_pairing(&field, &code.subspaces()[0], &limits)?;
        println!(
            "q={q} M={m}: column 0 has {} disjoint pairs (exact {}), pairing construction gives {}; symbol (0,0) has {} singletons",
            node.t,
            node.exact,
            pairs.len(),
            symbol.t
        );
        if m == 3 && q == 2 {
            for [a, b] in pairing_columns(&code, 0, &limits)? {
                println!("  columns {a} and {b} together recover column 0");
            }
        }
    }
    Ok(())
}
