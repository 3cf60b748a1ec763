use crate::fincat::{FinCategory, FinFunctor, Mor, Obj};
use crate::report::LawReport;

use super::OmegaError;

/// The initial algebra of an endofunctor of a finite category, reached by
/// iterating from an initial object until the connecting map is invertible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteInitialAlgebra {
    /// `x_0, x_1 = F x_0, …`, up to the first stage whose connecting map is
    /// an isomorphism.
    pub stages: Vec<Obj>,
    /// Connecting maps `x_k -> x_{k+1}`.
    pub connecting: Vec<Mor>,
    pub carrier: Obj,
    /// `str: F(μ) -> μ`.
    pub str: Mor,
    pub str_inv: Mor,
}

fn initial_object(c: &FinCategory) -> Option<Obj> {
    c.objects().find(|&x| c.objects().all(|y| c.hom(x, y).len() == 1))
}

/// Errors if `c` has no initial object or the chain has not stabilized
/// after `max_steps` steps.
pub fn finite_initial_algebra(f: &FinFunctor, max_steps: usize) -> Result<FiniteInitialAlgebra, OmegaError> {
    let c = &*f.source;
    let zero = initial_object(c).ok_or_else(|| OmegaError::Shape("category has no initial object".into()))?;
    let mut stages = vec![zero];
    let mut connecting = vec![c.hom(zero, f.obj(zero))[0]];
    for _ in 0..max_steps {
        let k = stages.len() - 1;
        let a = connecting[k];
        if let Some(inv) = c.inverse(a) {
            return Ok(FiniteInitialAlgebra {
                carrier: stages[k],
                str: inv,
                str_inv: a,
                stages,
                connecting,
            });
        }
        let next = f.obj(stages[k]);
        stages.push(next);
        connecting.push(f.mor(a));
    }
    Err(OmegaError::NotStabilized { max: max_steps })
}

/// Brute force over `hom(μ, x)`: exactly one `h` with `h ∘ str = g ∘ F(h)`.
pub fn check_finite_initiality(f: &FinFunctor, alg: &FiniteInitialAlgebra, targets: &[(Obj, Mor)]) -> LawReport {
    let c = &*f.source;
    let mut r = LawReport::new();
    for &(x, g) in targets {
        let name = || format!("({}, {})", c.obj_name(x), c.mor_name(g));
        let typed = c.src(g) == f.obj(x) && c.tgt(g) == x;
        r.check("target-typing", typed, name);
        if !typed {
            continue;
        }
        let solutions = c
            .hom(alg.carrier, x)
            .iter()
            .filter(|&&h| {
                let lhs = c.compose(h, alg.str);
                lhs.is_some() && lhs == c.compose(g, f.mor(h))
            })
            .count();
        r.check("initiality-existence", solutions >= 1, name);
        r.check("initiality-uniqueness", solutions <= 1, name);
    }
    r
}
