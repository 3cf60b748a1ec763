//! Initial algebras of ω-cocontinuous functors on enumerable scoped families,
//! Mendler iteration and parametrized initiality.

mod adamek;
pub mod demos;
mod functor;
mod mendler;
mod param;
mod poset;
mod value;

pub use adamek::{adamek_initial_algebra, check_initiality, fold, InitialAlgebra, StructureMap, TargetAlgebra};
pub use functor::{check_enum_functor, EnumEndofunctor, EnumSetObj, Factor, Family, FamilyMap, FiniteSet, PolyFunctor};
pub use mendler::{
    evenness_step, gen_mendler_iteration, numeral, ConstL, IdentityL, LFunctor, MendlerIteration, MendlerStep,
    MendlerTarget, Recur,
};
pub use param::{
    check_mu_functor, check_param_bifunctor, leaf, leaves_family, leftmost_leaf_family, mu_on_morphism, node,
    parametrized_initiality, AlgebraMap, FinMap, IdentityG, MuMap, ParamAlgebraFamily, ParamBifunctor, ParamCorpus,
    ParamFactor, ParamFunctor, ParamInitial, ParamMediators, PowersetG, SEARCH_BOUND,
};
pub use poset::{check_finite_initiality, finite_initial_algebra, FiniteInitialAlgebra};
pub use value::Value;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OmegaError {
    #[error("chain did not stabilize within {max} steps")]
    NotStabilized { max: usize },
    #[error("step is not natural: {0}")]
    PsiNotNatural(String),
    #[error("step used an element outside the current stage: {0}")]
    OutsideStage(String),
    #[error("no map out of the initial stage into the target")]
    NoInitialMap,
    #[error("enumeration bound {0} exceeded")]
    EnumerationBound(usize),
    #[error("not an element of the initial algebra: {0}")]
    NotInCarrier(String),
    #[error("algebra family is not natural in the parameter: {0}")]
    PhiNotNatural(String),
    #[error("{0}")]
    Shape(String),
}
