//! Finite categories given by explicit tables.

mod category;
mod functor;
mod json;
mod laws;
mod product;

pub use category::{CategoryBuilder, FinCategory, MorphismData};
pub use functor::{check_functor, check_nat_trans, FinFunctor, FinNatTrans};
pub use json::{CategoryDoc, CompDoc, MorphismDoc};
pub use laws::{check_category_tables, CategoryTables};
pub use product::{product_category, ProductCategory};

use thiserror::Error;

use crate::report::LawReport;

/// Index of an object in its [`FinCategory`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Obj(pub usize);

/// Index of a morphism in its [`FinCategory`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Mor(pub usize);

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FincatError {
    #[error("dangling {kind} reference `{id}`")]
    Dangling { kind: &'static str, id: String },
    #[error("duplicate {kind} id `{id}`")]
    Duplicate { kind: &'static str, id: String },
    #[error("conflicting composition entries for ({after}, {first})")]
    ConflictingComposite { after: String, first: String },
    #[error("{what} mapping is not total: no image for `{id}`")]
    NotTotal { what: &'static str, id: String },
    #[error("natural transformation has no component at `{0}`")]
    MissingComponent(String),
    #[error("functors are not parallel")]
    NotParallel,
    #[error("functors are not composable: target of the first is not the source of the second")]
    NotComposable,
    #[error("unknown object `{0}`")]
    UnknownObject(String),
    #[error("invalid document: {0}")]
    Document(String),
}

/// Checks identity typing, totality and domain of composition, unit laws
/// and associativity. Every violated instance is reported.
pub fn check_category_laws(c: &FinCategory) -> LawReport {
    check_category_tables(c)
}

/// The morphisms `x -> y`, in table order.
pub fn hom_enumerate(c: &FinCategory, x: Obj, y: Obj) -> Result<Vec<Mor>, FincatError> {
    for o in [x, y] {
        if o.0 >= c.object_count() {
            return Err(FincatError::UnknownObject(format!("#{}", o.0)));
        }
    }
    Ok(c.hom(x, y).to_vec())
}
