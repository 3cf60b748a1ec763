//! Desk-scale models of the categorical semantics of syntax with binders.
//!
//! Every structure in this crate is finite, or is an infinite object
//! presented by finite truncations, so that each law can be checked by
//! exhaustive enumeration:
//!
//! * [`fincat`]: table-driven finite categories, functors and natural
//!   transformations.
//! * [`monoidal`]: tensors presented as whiskered bifunctors, monoidal
//!   categories, monoids, and the endofunctor instance where monoids are monads.
//! * [`displayed`]: displayed (monoidal) categories, total categories and
//!   sections.
//! * [`omega`]: omega-chains, Adámek initial algebras, generalized Mendler
//!   iteration and parametrized initiality.
//! * [`signature`] and [`syntax`]: binding signatures, well-scoped terms and
//!   substitution.
//!
//! Composition is always written `comp(g, f)` = "g after f".

pub mod cli;
pub mod displayed;
pub mod fincat;
pub mod monoidal;
pub mod omega;
pub mod report;
pub mod signature;
pub mod syntax;

pub use report::{LawReport, Violation};
