//! Well-scoped de Bruijn terms over a binding signature: enumeration,
//! renaming, substitution and the monad laws.

mod enumerate;
mod laws;
mod mendler;
mod subst;
mod term;

pub use enumerate::{count_terms, enumerate_terms};
pub use laws::{
    all_substitutions, check_adamek_oracle, check_monad_laws, check_monad_laws_with, check_rename_laws, LawBounds,
    SubstFn,
};
pub use mendler::{check_mendler_agreement, subst_via_mendler, MendlerSubstitution};
pub use subst::{compose_substitutions, rename, substitute, substitute_without_lift, Renaming, Substitution};
pub use term::{check_term, parse_term, term_to_value, value_to_term, Term, Tm};

use crate::omega::OmegaError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SyntaxError {
    #[error("scope mismatch: expected {expected}, found {found}")]
    ScopeMismatch { expected: usize, found: usize },
    #[error("variable {index} is not in scope {scope}")]
    VarOutOfScope { index: usize, scope: usize },
    #[error("unknown constructor `{0}`")]
    UnknownConstructor(String),
    #[error("constructor `{name}` takes {expected} arguments, found {found}")]
    ArgCount { name: String, expected: usize, found: usize },
    #[error("column {col}: {message}")]
    Parse { col: usize, message: String },
    #[error("invalid renaming {0}")]
    BadRenaming(String),
    #[error("not a term: {0}")]
    NotATerm(String),
    #[error(transparent)]
    Omega(#[from] OmegaError),
}
