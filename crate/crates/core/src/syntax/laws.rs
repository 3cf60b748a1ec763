use std::sync::Arc;

use rayon::prelude::*;

use super::{
    check_term, enumerate_terms, rename, substitute, value_to_term, Renaming, Substitution, SyntaxError, Term, Tm,
};
use crate::omega::{adamek_initial_algebra, Value};
use crate::report::LawReport;
use crate::signature::{signature_functor, BindingSignature};

/// A substitution operation under test.
pub type SubstFn = fn(&BindingSignature, &Term, &Substitution) -> Result<Term, SyntaxError>;

/// Bounds for the monad-law suite: terms of depth `< depth` in scopes
/// `0..=max_scope`, substitutions whose images have depth `< subst_depth`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LawBounds {
    pub depth: usize,
    pub max_scope: usize,
    pub subst_depth: usize,
}

impl LawBounds {
    pub fn new(depth: usize, max_scope: usize) -> Self {
        Self {
            depth,
            max_scope,
            subst_depth: depth.saturating_sub(1),
        }
    }
}

/// Every substitution `n -> m` whose images are drawn from `images`.
pub fn all_substitutions(n: usize, m: usize, images: &[Term]) -> Vec<Substitution> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<Tm>| {
                images.iter().map(move |t| {
                    let mut p = prefix.clone();
                    p.push(t.body.clone());
                    p
                })
            })
            .collect();
    }
    out.into_iter()
        .map(|images| Substitution {
            source: n,
            target: m,
            images,
        })
        .collect()
}

pub fn check_monad_laws(sig: &BindingSignature, depth: usize, max_scope: usize) -> LawReport {
    check_monad_laws_with(sig, LawBounds::new(depth, max_scope), substitute)
}

/// Left unit, right unit and associativity of `subst`, plus
/// scope-correctness of every result, over all terms and substitutions
/// within `bounds`.
pub fn check_monad_laws_with(sig: &BindingSignature, bounds: LawBounds, subst: SubstFn) -> LawReport {
    let scopes = 0..=bounds.max_scope;
    let terms: Vec<Vec<Term>> = scopes.clone().map(|n| enumerate_terms(sig, n, bounds.depth)).collect();
    let images: Vec<Vec<Term>> = scopes.clone().map(|m| enumerate_terms(sig, m, bounds.subst_depth)).collect();
    let subs: Vec<Vec<Vec<Substitution>>> = scopes
        .clone()
        .map(|n| scopes.clone().map(|m| all_substitutions(n, m, &images[m])).collect())
        .collect();

    let run = |t: &Term, s: &Substitution| -> Option<Term> {
        subst(sig, t, s).ok().filter(|r| check_term(sig, r).is_ok())
    };
    let compose = |tau: &Substitution, sigma: &Substitution| -> Option<Substitution> {
        let images = sigma
            .images
            .iter()
            .map(|i| run(&Term::new(sigma.target, i.clone()), tau).map(|r| r.body))
            .collect::<Option<Vec<_>>>()?;
        Some(Substitution {
            source: sigma.source,
            target: tau.target,
            images,
        })
    };

    let mut report = LawReport::new();
    for n in scopes.clone() {
        for s in subs[n].iter().flatten() {
            for i in 0..n {
                let got = run(&Term::var(n, i), s);
                report.check("left-unit", got.map(|g| g.body) == Some(s.images[i].clone()), || {
                    format!("(var {i}, {s})")
                });
            }
        }
        for t in &terms[n] {
            report.check("right-unit", run(t, &Substitution::unit(n)).as_ref() == Some(t), || {
                format!("({t}, {})", Substitution::unit(n))
            });
        }
    }

    let work: Vec<&Term> = terms.iter().flatten().collect();
    let parts: Vec<LawReport> = work
        .par_iter()
        .map(|t| {
            let mut r = LawReport::new();
            for sigma in subs[t.scope].iter().flatten() {
                let once = run(t, sigma);
                r.check("scope-correctness", once.is_some(), || format!("({t}, {sigma})"));
                for tau in subs[sigma.target].iter().flatten() {
                    let lhs = once.as_ref().and_then(|u| run(u, tau));
                    let rhs = compose(tau, sigma).and_then(|ts| run(t, &ts));
                    r.check("associativity", lhs.is_some() && lhs == rhs, || {
                        format!("({t}, {sigma}, {tau})")
                    });
                }
            }
            r
        })
        .collect();
    for p in parts {
        report.merge(p);
    }
    report
}

/// `rename(t, id) = t` and `rename(rename(t, ρ), ρ') = rename(t, ρ' ∘ ρ)`
/// over all renamings between scopes `0..=max_scope`.
pub fn check_rename_laws(sig: &BindingSignature, depth: usize, max_scope: usize) -> LawReport {
    let mut r = LawReport::new();
    for n in 0..=max_scope {
        for t in enumerate_terms(sig, n, depth) {
            r.check("rename-identity", rename(sig, &t, &Renaming::identity(n)).as_ref() == Ok(&t), || {
                format!("{t}")
            });
            for m in 0..=max_scope {
                for rho in Renaming::all(n, m) {
                    let once = rename(sig, &t, &rho);
                    r.check(
                        "scope-correctness",
                        once.as_ref().is_ok_and(|u| check_term(sig, u).is_ok()),
                        || format!("({t}, {:?})", rho.map),
                    );
                    for p in 0..=max_scope {
                        for rho2 in Renaming::all(m, p) {
                            let lhs = once.as_ref().ok().and_then(|u| rename(sig, u, &rho2).ok());
                            let rhs = rename(sig, &t, &rho.then(&rho2)).ok();
                            r.check("rename-composition", lhs.is_some() && lhs == rhs, || {
                                format!("({t}, {:?}, {:?})", rho.map, rho2.map)
                            });
                        }
                    }
                }
            }
        }
    }
    r
}

/// Compares the chain stages of the initial algebra of the signature functor
/// with `enumerate_terms`, element for element and in order.
pub fn check_adamek_oracle(sig: &BindingSignature, levels: &[usize], scopes: &[usize]) -> LawReport {
    let alg = adamek_initial_algebra(Arc::new(signature_functor(sig)));
    let mut r = LawReport::new();
    for &d in levels {
        for &n in scopes {
            let stage: Vec<Result<Tm, SyntaxError>> = alg.stage(d, n).iter().map(|v: &Value| value_to_term(sig, v)).collect();
            let terms: Vec<Result<Tm, SyntaxError>> = enumerate_terms(sig, n, d).into_iter().map(|t| Ok(t.body)).collect();
            r.check("adamek-oracle", stage == terms, || {
                format!("level {d}, scope {n}: {} stage elements, {} terms", stage.len(), terms.len())
            });
        }
    }
    r
}
