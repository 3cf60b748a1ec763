//! Displayed categories over a finite base, indexed strictly by base data.

mod category;
mod json;
mod monoidal;
mod section;

pub use category::{
    check_displayed_category, total_category, DispMorData, DispObjData, DisplayedBuilder, DisplayedCategory,
    DisplayedTables, TotalCategory,
};
pub use json::{DisplayedDoc, DispMorDoc};
pub use monoidal::{check_displayed_monoidal, check_strict_monoidal, total_monoidal, DisplayedMonoidal};
pub use section::{check_section, lift_section, Section};

use thiserror::Error;

use crate::fincat::FincatError;
use crate::monoidal::MonoidalError;

/// Index of a displayed object.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DispObj(pub usize);

/// Index of a displayed morphism.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DispMor(pub usize);

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DisplayedError {
    #[error("dangling {kind} reference `{id}`")]
    Dangling { kind: &'static str, id: String },
    #[error("duplicate displayed {kind} id `{id}`")]
    Duplicate { kind: &'static str, id: String },
    #[error("malformed {0}")]
    Shape(String),
    #[error("cannot read base category `{path}`: {message}")]
    Io { path: String, message: String },
    #[error(transparent)]
    Fincat(#[from] FincatError),
    #[error(transparent)]
    Monoidal(#[from] MonoidalError),
}
