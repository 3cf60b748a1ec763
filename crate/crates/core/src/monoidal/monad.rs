use std::sync::Arc;

use super::{EndofunctorMonoidal, Monoid, MonoidalError};
use crate::fincat::{check_functor, check_nat_trans, FinCategory, FinFunctor, FinNatTrans, Obj};
use crate::report::LawReport;

/// A monad on a finite category: `η: Id => T` and `μ: T∘T => T`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Monad {
    pub endofunctor: FinFunctor,
    pub unit: FinNatTrans,
    pub mult: FinNatTrans,
}

impl Monad {
    pub fn identity(c: Arc<FinCategory>) -> Self {
        let id = FinFunctor::identity(c);
        let t = FinNatTrans::identity(&id);
        Self {
            endofunctor: id,
            unit: t.clone(),
            mult: t,
        }
    }
}

/// Functoriality of `T`, naturality of `η` and `μ`, and the unit and
/// associativity laws, componentwise.
pub fn check_monad(m: &Monad) -> Result<LawReport, MonoidalError> {
    let t = &m.endofunctor;
    let c = t.source.clone();
    let mut r = check_functor(t)?;
    let tt = t.then(t)?;
    let typed = m.unit.source == FinFunctor::identity(c.clone())
        && m.unit.target == *t
        && m.mult.source == tt
        && m.mult.target == *t;
    r.check("monad-typing", typed, || "unit: Id => T, mult: T∘T => T".into());
    if !typed {
        return Ok(r);
    }
    r.merge(check_nat_trans(&m.unit)?);
    r.merge(check_nat_trans(&m.mult)?);
    let (eta, mu) = (&m.unit, &m.mult);
    for x in c.objects() {
        let tx = t.obj(x);
        let idtx = c.identity(tx);
        let name = || c.obj_name(x).to_string();
        let lhs = c.compose(mu.component(x), eta.component(tx));
        r.check("monad-left-unit", lhs.is_some() && lhs == idtx, name);
        let lhs = c.compose(mu.component(x), t.mor(eta.component(x)));
        r.check("monad-right-unit", lhs.is_some() && lhs == idtx, name);
        let lhs = c.compose(mu.component(x), t.mor(mu.component(x)));
        let rhs = c.compose(mu.component(x), mu.component(tx));
        r.check("monad-associativity", lhs.is_some() && lhs == rhs, name);
    }
    Ok(r)
}

/// Reads a monoid of the endofunctor monoidal category as a monad. No data
/// is recomputed: the carrier, unit and multiplication are looked up.
pub fn monoid_to_monad(e: &EndofunctorMonoidal, m: &Monoid) -> Result<Monad, MonoidalError> {
    let base = &e.monoidal.base;
    if m.carrier.0 >= e.functors.len()
        || m.unit_map.0 >= e.transformations.len()
        || m.mult.0 >= e.transformations.len()
    {
        return Err(MonoidalError::NotEndofunctorMonoid("index out of range".into()));
    }
    let typed = base.src(m.unit_map) == e.monoidal.unit
        && base.tgt(m.unit_map) == m.carrier
        && base.src(m.mult) == e.monoidal.tensor(m.carrier, m.carrier)
        && base.tgt(m.mult) == m.carrier;
    if !typed {
        return Err(MonoidalError::NotEndofunctorMonoid("ill-typed unit or multiplication".into()));
    }
    Ok(Monad {
        endofunctor: e.functors[m.carrier.0].clone(),
        unit: e.transformations[m.unit_map.0].clone(),
        mult: e.transformations[m.mult.0].clone(),
    })
}

/// Inverse of [`monoid_to_monad`].
pub fn monad_to_monoid(e: &EndofunctorMonoidal, t: &Monad) -> Result<Monoid, MonoidalError> {
    let carrier: Obj = e
        .functor_index(&t.endofunctor)
        .ok_or_else(|| MonoidalError::NotEndofunctorMonoid("endofunctor not enumerated".into()))?;
    let unit_map = e
        .transformation_index(&t.unit)
        .ok_or_else(|| MonoidalError::NotEndofunctorMonoid("unit not enumerated".into()))?;
    let mult = e
        .transformation_index(&t.mult)
        .ok_or_else(|| MonoidalError::NotEndofunctorMonoid("multiplication not enumerated".into()))?;
    Ok(Monoid {
        carrier,
        unit_map,
        mult,
    })
}
