//! Exact root-system combinatorics for the order of vanishing of the
//! canonical splitting section along `P/B` on minuscule flag varieties.
//!
//! The pipeline for a parabolic `P` and a fundamental index `d`:
//!
//! 1. `τ` is the longest element of the Levi Weyl group `W_P`
//!    ([`weyl::longest_element`]).
//! 2. The target `ω_d + τ(i(ω_d))`, with `i = −w₀` the Weyl involution, is a
//!    non-negative integral combination of simple roots
//!    ([`vanishing::target_weight`]).
//! 3. `m_d` is the cost of the cheapest ladder of reflections through the
//!    extremal weights of `V(i(ω_d))`, from `τ(i(ω_d))` down to `−ω_d`, using
//!    only roots that involve `α_d` ([`vanishing::dijkstra_order`]). Two
//!    independent lower bounds and explicit certificates cross-check it.
//!
//! All indices are 0-based; index `i` is Bourbaki's `α_{i+1}` / `ω_{i+1}`.
//! User-facing surfaces (CLI, reports, certificate files) use Bourbaki's
//! 1-based labels.

#![no_std]

extern crate alloc;

pub mod analysis;
pub mod certificates;
pub mod classify;
pub mod error;
pub mod rootsys;
pub mod vanishing;
pub mod weyl;

pub use error::{Error, Result};
pub use rootsys::{Family, Parabolic, Rational, Root, RootSystem, RootSystemType, Weight};
pub use weyl::WeylWord;
