//! Exact combinatorics of finite Weyl groups.
//!
//! This crate computes, with integer arithmetic throughout:
//!
//! - finite crystallographic root systems from a series label or a
//!   Coxeter/Cartan matrix ([`rootdata`]);
//! - the full Weyl group with inversion sets, lengths, descents,
//!   generator multiplication, the longest element and the opposition
//!   involution ([`weyl`]);
//! - the Bruhat order ([`bruhat`]);
//! - parabolic double-coset posets `W_{θ,η}` with minimal representatives
//!   and the longest-element action ([`parabolic`]);
//! - complete enumeration and classification of balanced ideals
//!   ([`ideals`]);
//! - closed-form existence criteria and structural cross-checks
//!   ([`criteria`]).
//!
//! Simple roots use the Bourbaki numbering; all textual interfaces are
//! 1-based.

pub mod bitset;
pub mod bruhat;
pub mod cache;
pub mod criteria;
pub mod error;
pub mod ideals;
pub mod parabolic;
pub mod rootdata;
pub mod signed;
pub mod util;
pub mod weyl;

pub use bitset::Bitset;
pub use error::{Error, Result};
pub use rootdata::{CoxeterDiagram, MultiplicityProfile, RootSystem, Series};
pub use util::SimpleSet;
pub use weyl::GroupTable;
