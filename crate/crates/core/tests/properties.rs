use std::sync::Arc;

use binders::fincat::{check_category_laws, check_functor, product_category, FinCategory, Obj};
use binders::monoidal::{
    check_monoidal_laws, check_whiskered_bifunctor, classical_from_whiskered, whiskered_from_classical,
    MonoidalCategory,
};
use binders::omega::{adamek_initial_algebra, Factor, PolyFunctor};
use binders::signature::BindingSignature;
use binders::syntax::{
    check_term, compose_substitutions, rename, subst_via_mendler, substitute, term_to_value, value_to_term,
    Renaming, Substitution, Term, Tm,
};
use proptest::prelude::*;

fn lam_body(scope: usize, depth: u32) -> BoxedStrategy<Tm> {
    let var = if scope == 0 {
        Just(Tm::op("abs", vec![Tm::var(0)])).boxed()
    } else {
        (0..scope).prop_map(Tm::Var).boxed()
    };
    if depth == 0 {
        return var;
    }
    prop_oneof![
        2 => var,
        1 => (lam_body(scope, depth - 1), lam_body(scope, depth - 1)).prop_map(|(a, b)| Tm::op("app", vec![a, b])),
        1 => lam_body(scope + 1, depth - 1).prop_map(|b| Tm::op("abs", vec![b])),
    ]
    .boxed()
}

fn term(scope: usize) -> impl Strategy<Value = Term> {
    lam_body(scope, 4).prop_map(move |b| Term::new(scope, b))
}

fn substitution(source: usize, target: usize) -> impl Strategy<Value = Substitution> {
    proptest::collection::vec(lam_body(target, 2), source).prop_map(move |images| Substitution {
        source,
        target,
        images,
    })
}

fn renaming(source: usize, target: usize) -> impl Strategy<Value = Renaming> {
    proptest::collection::vec(0..target, source).prop_map(move |map| Renaming::new(source, target, map).unwrap())
}

proptest! {
    #[test]
    fn renaming_preserves_scope_and_composes(
        t in term(2), r1 in renaming(2, 3), r2 in renaming(3, 2)
    ) {
        let sig = BindingSignature::lambda();
        let once = rename(&sig, &t, &r1).unwrap();
        prop_assert!(check_term(&sig, &once).is_ok());
        prop_assert_eq!(rename(&sig, &once, &r2).unwrap(), rename(&sig, &t, &r1.then(&r2)).unwrap());
        prop_assert_eq!(rename(&sig, &t, &Renaming::identity(2)).unwrap(), t);
    }

    #[test]
    fn substitution_is_associative(t in term(2), s in substitution(2, 3), u in substitution(3, 1)) {
        let sig = BindingSignature::lambda();
        let once = substitute(&sig, &t, &s).unwrap();
        prop_assert!(check_term(&sig, &once).is_ok());
        let lhs = substitute(&sig, &once, &u).unwrap();
        let rhs = substitute(&sig, &t, &compose_substitutions(&sig, &u, &s).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(substitute(&sig, &t, &Substitution::unit(2)).unwrap(), t);
    }

    #[test]
    fn renaming_is_substitution_by_variables(t in term(2), r in renaming(2, 3)) {
        let sig = BindingSignature::lambda();
        let s = Substitution::new(2, 3, r.map.iter().map(|&j| Tm::var(j)).collect()).unwrap();
        prop_assert_eq!(rename(&sig, &t, &r).unwrap(), substitute(&sig, &t, &s).unwrap());
    }

    #[test]
    fn terms_round_trip_through_values(t in term(3)) {
        let sig = BindingSignature::lambda();
        let v = term_to_value(&sig, &t.body).unwrap();
        prop_assert_eq!(value_to_term(&sig, &v).unwrap(), t.body);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn mendler_substitution_matches_structural(t in term(1), s in substitution(1, 2)) {
        let sig = BindingSignature::lambda();
        let m = subst_via_mendler(&sig, 1, 1).unwrap();
        prop_assert_eq!(m.apply(&t, &s).unwrap(), substitute(&sig, &t, &s).unwrap());
    }

    #[test]
    fn chains_and_their_products_are_categories(n in 1usize..5, m in 1usize..4) {
        let a = Arc::new(FinCategory::chain(n));
        let b = Arc::new(FinCategory::chain(m));
        prop_assert!(check_category_laws(&a).passed());
        let p = product_category(a, b);
        prop_assert!(check_category_laws(&p.category).passed());
    }

    #[test]
    fn max_on_a_chain_is_monoidal_and_round_trips(n in 1usize..5) {
        let c = Arc::new(FinCategory::chain(n));
        let m = MonoidalCategory::thin(c, Obj(0), |x, y| Obj(x.0.max(y.0))).unwrap();
        prop_assert!(check_monoidal_laws(&m).unwrap().passed());
        let classical = classical_from_whiskered(&m.tensor).unwrap();
        prop_assert!(check_functor(&classical.functor).unwrap().passed());
        prop_assert_eq!(whiskered_from_classical(&classical).unwrap(), m.tensor.clone());
        prop_assert!(check_whiskered_bifunctor(&m.tensor).unwrap().passed());
    }

    #[test]
    fn adamek_structure_map_is_invertible(consts in 1usize..4, levels in 1usize..4) {
        let f = PolyFunctor::new(vec![
            vec![Factor::Const((0..consts).map(binders::omega::Value::Nat).collect())],
            vec![Factor::Scope, Factor::Rec(1)],
        ]);
        let alg = adamek_initial_algebra(Arc::new(f));
        prop_assert!(alg.check_iso(levels, &[0, 1, 2]).passed());
    }
}
