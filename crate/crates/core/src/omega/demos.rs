//! Ready-made instances used by the command line and the acceptance suite.

use std::collections::BTreeSet;
use std::sync::Arc;

use super::{
    adamek_initial_algebra, check_mu_functor, check_param_bifunctor, evenness_step, gen_mendler_iteration, leaf,
    leaves_family, leftmost_leaf_family, mu_on_morphism, node, numeral, parametrized_initiality, IdentityL,
    MendlerTarget, OmegaError, ParamBifunctor, ParamCorpus, ParamInitial, PolyFunctor, Value,
};
use crate::report::LawReport;

/// Evenness on the naturals by Mendler iteration: the fixed-point equation
/// up to `levels`, the values against direct recursion, and brute-force
/// uniqueness on every level up to `min(levels, 4)`.
pub fn evenness_demo(levels: usize, bound: usize) -> Result<LawReport, OmegaError> {
    let alg = Arc::new(adamek_initial_algebra(Arc::new(PolyFunctor::naturals())));
    let bools = MendlerTarget::finite(vec![Value::Bool(false), Value::Bool(true)]);
    let it = gen_mendler_iteration(alg, Arc::new(IdentityL), bools, evenness_step(), 3)?;
    let mut r = it.check_fixed_point(levels);
    for k in 0..levels.max(5) {
        let got = it.apply(&numeral(k))?;
        r.check("evenness-oracle", got == Value::Bool(k % 2 == 0), || format!("h({k}) = {got}"));
    }
    for level in 1..=levels.min(4) {
        let count = it.count_solutions(level, bound)?;
        r.check("mendler-uniqueness", count == 1, || format!("{count} solutions at level {level}"));
    }
    Ok(r)
}

fn tree_leaves(t: &Value, out: &mut Vec<Value>) {
    match t.unroll() {
        Some(Value::Inj(0, body)) => {
            if let Value::Tuple(parts) = &**body {
                out.extend(parts.iter().cloned());
            }
        }
        Some(Value::Inj(_, body)) => {
            if let Value::Tuple(parts) = &**body {
                parts.iter().for_each(|p| tree_leaves(p, out));
            }
        }
        _ => {}
    }
}

/// Trees `F(Z, X) = Z ⊎ X × X` over the parameters `∅`, `{1, 2}`, `{7}`:
/// leftmost-leaf and set-of-leaves families, `μ` on morphisms, and the
/// worked examples.
pub fn param_initial_demo(depth: usize) -> Result<LawReport, OmegaError> {
    let pb = ParamBifunctor::trees();
    let corpus = ParamCorpus::standard();
    let mut r = check_param_bifunctor(&pb, &corpus);
    let mu = ParamInitial::new(&pb, corpus.clone());

    let leftmost = parametrized_initiality(&pb, &mu, &leftmost_leaf_family(), depth)?;
    r.merge(leftmost.report.clone().prefixed("leftmost-leaf"));
    let leaves = parametrized_initiality(&pb, &mu, &leaves_family(), depth)?;
    r.merge(leaves.report.clone().prefixed("set-of-leaves"));
    for (z, alg) in mu.algebras.iter().enumerate() {
        for t in alg.stage(depth, 0).iter() {
            let mut ls = Vec::new();
            tree_leaves(t, &mut ls);
            let first = leftmost.apply(z, t).ok();
            r.check("leftmost-leaf-oracle", first.as_ref() == ls.first(), || format!("{t}"));
            let set = leaves.apply(z, t).ok();
            let want = Value::Set(ls.into_iter().collect::<BTreeSet<_>>());
            r.check("set-of-leaves-oracle", set == Some(want), || format!("{t}"));
        }
    }
    r.check("empty-parameter", mu.algebras[0].stage(depth, 0).is_empty(), || "μ_∅".into());

    r.merge(check_mu_functor(&pb, &mu, depth)?);
    if let Some(f) = corpus.maps(1, 2).pop() {
        let t = node(leaf(Value::Nat(1)), leaf(Value::Nat(2)));
        let got = mu_on_morphism(&pb, &mu, &f, depth)?.apply(&t)?;
        let want = node(leaf(Value::Nat(7)), leaf(Value::Nat(7)));
        r.check("mu-oracle", got == want, || format!("{t} ↦ {got}"));
    }

    let nine = ParamInitial::new(&pb, ParamCorpus::discrete(vec![(1..=9).map(Value::Nat).collect()]));
    let hs = parametrized_initiality(&pb, &nine, &leftmost_leaf_family(), depth)?;
    r.merge(hs.report.clone().prefixed("leftmost-leaf {1..9}"));
    let t = node(node(leaf(Value::Nat(2)), leaf(Value::Nat(5))), leaf(Value::Nat(9)));
    let got = hs.apply(0, &t)?;
    r.check("leftmost-leaf-example", got == Value::Nat(2), || format!("{t} ↦ {got}"));
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn evenness_demo_passes() {
        let r = evenness_demo(6, 10_000).unwrap();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn param_demo_passes() {
        let r = param_initial_demo(3).unwrap();
        assert!(r.passed(), "{r}");
        assert!(r.checks_run > 1000);
    }
}
