//! Size guards for the combinatorial search cores. Defaults keep every
//! exhaustive search at desk scale; `QLAB_MAX_ORDER` raises them.

use std::sync::OnceLock;

fn env_override() -> usize {
    static V: OnceLock<usize> = OnceLock::new();
    *V.get_or_init(|| {
        std::env::var("QLAB_MAX_ORDER")
            .ok()
            .and_then(|s| s.parse().ok())
            .unwrap_or(0)
    })
}

fn raised(default: usize) -> usize {
    default.max(env_override())
}

/// Full congruence enumeration refuses larger orders.
pub fn congruence_order_limit() -> usize {
    raised(12)
}

/// Base-lattice size for endomorphism quantales (the map count is n^n).
pub fn endomorphism_base_limit() -> usize {
    raised(6)
}

/// Exhaustive quantale enumeration order.
pub fn enumeration_order_limit() -> usize {
    raised(4)
}

/// Exhaustive subset search used as the cyclic-set oracle.
pub fn subset_oracle_limit() -> usize {
    raised(12)
}

/// Lattice enumeration order.
pub fn lattice_enumeration_limit() -> usize {
    raised(6)
}
