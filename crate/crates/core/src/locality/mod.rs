//! Recovery sets, locality, availability and erased-column repair.
//!
//! A set `S` of columns recovers column `j` when `V_j ⊆ Σ_{k∈S} V_k`, and
//! recovers symbol `(i, j)` when column `g_{jb+i}` of `G` lies in that sum.
//! Searches run by increasing `|S|` and lexicographically within a size, so
//! witnesses are deterministic and minimal.

mod packing;
mod pairing;
mod profile;
mod recovery;
mod search;

pub use packing::{greedy_packing, max_disjoint_packing, Packing};
pub use pairing::{grassmann_pairing, pairing_columns};
pub use profile::{AvailabilityOptions, LocalityProfile, TargetLocality};
pub use recovery::{
    availability, min_node_recovery, min_recovery, min_symbol_recovery, minimal_recovery_sets, node_availability,
    node_locality, repair, symbol_availability, symbol_locality, Availability, RecoverySet, Repair, Target,
};
