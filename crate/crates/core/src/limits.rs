/// Size caps for the exhaustive computations.
///
/// Every enumeration in the crate checks its size against one of these before
/// allocating, so that a mistyped parameter fails fast with
/// [`Error::TooLarge`](crate::Error::TooLarge) instead of running forever.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest field order for which arithmetic tables are built.
    pub field_order: u64,
    /// Largest number of vectors, subspaces or subsets enumerated at once.
    pub enumeration: u64,
    /// Largest number of messages scanned for weights and distance.
    pub exhaustive: u64,
    /// Largest candidate family handed to the exact packing search.
    pub packing_candidates: usize,
    /// Node budget of one exact packing search before it falls back to a bound.
    pub packing_nodes: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            field_order: 1 << 16,
            enumeration: 1 << 20,
            exhaustive: 1 << 20,
            packing_candidates: 5000,
            packing_nodes: 20_000_000,
        }
    }
}

impl Limits {
    pub const ENV_VAR: &'static str = "SUBSPACE_LRC_LIMIT";

    /// Defaults, with the enumeration and exhaustive caps replaced by
    /// `SUBSPACE_LRC_LIMIT` when it is set to a positive integer.
    pub fn from_env() -> Self {
        let mut limits = Limits::default();
        if let Some(v) = std::env::var(Self::ENV_VAR)
            .ok()
            .and_then(|s| s.trim().parse::<u64>().ok())
            .filter(|&v| v > 0)
        {
            limits.enumeration = v;
            limits.exhaustive = v;
        }
        limits
    }

    pub(crate) fn check(&self, what: &'static str, count: u128, limit: u64) -> crate::Result<()> {
        if count > limit as u128 {
            Err(crate::Error::TooLarge { what, count, limit })
        } else {
            Ok(())
        }
    }
}
