//! Tensors in whiskered form, monoidal categories, monoids and monads.

mod category;
mod endofunctor;
mod json;
pub mod laws;
mod monad;
mod whiskered;

pub use category::{check_monoid, check_monoidal_laws, enumerate_monoids, monoid_candidates, MonoidalCategory, Monoid};
pub use endofunctor::{
    endofunctor_monoidal, enumerate_endofunctors, enumerate_transformations, EndofunctorMonoidal,
    DEFAULT_FUNCTOR_BOUND,
};
pub use json::MonoidalDoc;
pub use laws::{check_monoidal_tables, check_whisker_laws, MonoidalOps, WhiskerOps};
pub use monad::{check_monad, monad_to_monoid, monoid_to_monad, Monad};
pub use whiskered::{
    check_whiskered_bifunctor, classical_from_whiskered, whiskered_from_classical, ClassicalBifunctor,
    WhiskeredBifunctor,
};

use thiserror::Error;

use crate::fincat::FincatError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MonoidalError {
    #[error("malformed {0}")]
    Shape(String),
    #[error("functor is not a bifunctor on a product of one category with itself")]
    NotABifunctor,
    #[error("object `{0}` has no identity")]
    MissingIdentity(String),
    #[error("ill-typed data: {0}")]
    IllTyped(String),
    #[error("enumeration exceeded the bound of {0}")]
    EnumerationOverflow(usize),
    #[error("not over the endofunctor monoidal category: {0}")]
    NotEndofunctorMonoid(String),
    #[error("internal inconsistency: {0}")]
    Internal(String),
    #[error(transparent)]
    Fincat(#[from] FincatError),
}
