//! Minuscule fundamental weights and dimensions of `G/P`.

use alloc::vec::Vec;

use crate::error::Result;
use crate::rootsys::{Family, Parabolic, RootSystem, RootSystemType};

/// Largest `⟨ω_d, β∨⟩` over positive roots, i.e. the `α_d∨` coefficient of
/// the highest coroot.
pub fn max_pairing(rs: &RootSystem, d: usize) -> Result<i64> {
    let omega = rs.fundamental_weight(d)?;
    let mut best = 0;
    for k in 0..rs.positive_roots().len() {
        best = best.max(rs.pairing_positive(omega.coords(), k));
    }
    Ok(best)
}

pub fn is_minuscule(rs: &RootSystem, d: usize) -> Result<bool> {
    Ok(max_pairing(rs, d)? == 1)
}

/// Indices `d` with `ω_d` minuscule, ascending.
pub fn list_minuscule(rs: &RootSystem) -> Vec<usize> {
    (0..rs.rank())
        .filter(|&d| matches!(is_minuscule(rs, d), Ok(true)))
        .collect()
}

/// `dim G/P = |R⁺| − |R⁺_P|`.
pub fn dim_gp(rs: &RootSystem, parabolic: &Parabolic) -> usize {
    rs.positive_roots().len() - rs.levi_positive_count(parabolic)
}

/// Every valid root-system type of rank at most `max_rank`, by family then
/// rank.
pub fn all_types(max_rank: usize) -> Vec<RootSystemType> {
    let families = [
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::E,
        Family::F,
        Family::G,
    ];
    families
        .into_iter()
        .flat_map(|f| (1..=max_rank).filter_map(move |n| RootSystemType::new(f, n).ok()))
        .collect()
}
