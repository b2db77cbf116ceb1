//! Permutation statistics behind the moment count: zigzag and forth-back
//! permutations, Euler zigzag numbers, signed sums over even-cycle
//! permutations with transit cancellation, and the bijections that identify
//! the surviving terms with alternating permutations.

mod bijection;
mod digraph;
mod perm;
mod signed;
mod zigzag;

pub use bijection::{
    cyclic_forthback_count, cyclic_perms, cyclic_to_zagzig, forthback_perms, fundamental_transform,
    inverse_fundamental, zagzig_to_cyclic,
};
pub use digraph::{
    alternating_digraph_signed_sum, alternating_digraph_signed_sum_brute, AlternatingDigraph, Arc, ARC_TUPLE_CAP,
};
pub use perm::{AllPermutations, Permutation};
pub use signed::{
    cancel_partner, enumerate_even_cycle_perms, enumerate_even_cycle_perms_with_cap, signed_sum_d,
    signed_sum_d_with_cap, sn_pair, sn_perm, transits, visit_even_cycle_perms, EvenCyclePerms,
};
pub use zigzag::{
    euler_zigzag_enumerate, euler_zigzag_enumerate_with_cap, euler_zigzag_fast, euler_zigzag_table, is_forthback,
    is_zagzig, is_zigzag,
};

/// Exact signed integer count.
pub type SignedCount = num_bigint::BigInt;

/// Default largest `n` for scans over all of `S_n`.
pub const ENUMERATION_CAP: usize = 10;

/// Default largest `2m` for walks over `D_{2m}`.
pub const EVEN_CYCLE_CAP: usize = 12;
