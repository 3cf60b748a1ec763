use std::sync::Arc;

use super::laws::all_substitutions;
use super::{enumerate_terms, substitute, term_to_value, value_to_term, Substitution, SyntaxError, Term};
use crate::omega::{
    adamek_initial_algebra, gen_mendler_iteration, Family, FamilyMap, LFunctor, MendlerIteration, MendlerTarget,
    OmegaError, Recur, Value,
};
use crate::report::LawReport;
use crate::signature::{signature_functor, BindingSignature};

/// `L(A) = ⨆_n A(n) × Sub(n, −)`: a term together with a substitution out
/// of its scope. Elements are `(n, a, σ)`. Only the substitutions listed
/// in `corpus` are enumerated; `map` accepts any.
struct SubstL {
    corpus: Vec<Vec<Value>>,
}

impl LFunctor for SubstL {
    fn apply(&self, a: Family<'_>) -> Vec<Value> {
        let mut out = Vec::new();
        for (n, sigmas) in self.corpus.iter().enumerate() {
            for t in a(n).iter() {
                for s in sigmas {
                    out.push(Value::Tuple(vec![Value::Nat(n), t.clone(), s.clone()]));
                }
            }
        }
        out
    }

    fn map(&self, f: FamilyMap<'_>, l: &Value) -> Value {
        match l {
            Value::Tuple(parts) if parts.len() == 3 => {
                let n = parts[0].as_nat().unwrap_or(0);
                Value::Tuple(vec![parts[0].clone(), f(n, &parts[1]), parts[2].clone()])
            }
            other => other.clone(),
        }
    }
}

fn subst_to_value(sig: &BindingSignature, s: &Substitution) -> Result<Value, SyntaxError> {
    let images = s.images.iter().map(|t| term_to_value(sig, t)).collect::<Result<_, _>>()?;
    Ok(Value::Tuple(vec![Value::Nat(s.source), Value::Nat(s.target), Value::Tuple(images)]))
}

fn value_to_subst(sig: &BindingSignature, v: &Value) -> Result<Substitution, OmegaError> {
    let bad = || OmegaError::Shape(format!("not a substitution: {v}"));
    let Value::Tuple(parts) = v else { return Err(bad()) };
    let [Value::Nat(n), Value::Nat(m), Value::Tuple(images)] = parts.as_slice() else {
        return Err(bad());
    };
    let images = images
        .iter()
        .map(|i| value_to_term(sig, i))
        .collect::<Result<_, _>>()
        .map_err(|e| OmegaError::Shape(e.to_string()))?;
    Substitution::new(*n, *m, images).map_err(|e| OmegaError::Shape(e.to_string()))
}

/// `ψ(h)(n, var i, σ) = σ(i)` and
/// `ψ(h)(n, c(a_1, …), σ) = c(h(n + k_1, a_1, σ↑k_1), …)`.
fn substitution_step(sig: Arc<BindingSignature>) -> impl Fn(Recur<'_>, &Value) -> Result<Value, OmegaError> + Send + Sync {
    move |h, l| {
        let bad = || OmegaError::Shape(format!("not an element of L(F A): {l}"));
        let Value::Tuple(parts) = l else { return Err(bad()) };
        let [Value::Nat(n), Value::Inj(c, body), sv] = parts.as_slice() else {
            return Err(bad());
        };
        let Value::Tuple(args) = &**body else { return Err(bad()) };
        let sigma = value_to_subst(&sig, sv)?;
        if *c == 0 {
            let i = args.first().and_then(Value::as_nat).ok_or_else(bad)?;
            let image = sigma.images.get(i).ok_or_else(bad)?;
            return term_to_value(&sig, image).map_err(|e| OmegaError::Shape(e.to_string()));
        }
        let ctor = sig.constructors.get(c - 1).ok_or_else(bad)?;
        let mut out = Vec::with_capacity(args.len());
        for (a, &k) in args.iter().zip(&ctor.arity) {
            let lifted = subst_to_value(&sig, &sigma.lift(&sig, k)).map_err(|e| OmegaError::Shape(e.to_string()))?;
            out.push(h(&Value::Tuple(vec![Value::Nat(n + k), a.clone(), lifted]))?);
        }
        Ok(Value::roll(Value::inj(*c, Value::Tuple(out))))
    }
}

/// Substitution obtained from generalized Mendler iteration on the
/// signature functor.
pub struct MendlerSubstitution {
    sig: Arc<BindingSignature>,
    iteration: MendlerIteration,
}

/// Builds the Mendler instance; `ψ` is checked for naturality on the chain
/// stages up to level 2 against substitutions out of scopes `0..=max_scope`
/// with images of depth `< image_depth`.
pub fn subst_via_mendler(
    sig: &BindingSignature,
    max_scope: usize,
    image_depth: usize,
) -> Result<MendlerSubstitution, SyntaxError> {
    let sig = Arc::new(sig.clone());
    let images: Vec<Vec<Term>> = (0..=max_scope).map(|m| enumerate_terms(&sig, m, image_depth)).collect();
    let corpus = (0..=max_scope)
        .map(|n| {
            (0..=max_scope)
                .flat_map(|m| all_substitutions(n, m, &images[m]))
                .map(|s| subst_to_value(&sig, &s))
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    let samples = [Term::var(1, 0)]
        .iter()
        .chain(images.iter().flatten().take(2))
        .map(|t| term_to_value(&sig, &t.body))
        .collect::<Result<Vec<_>, _>>()?;
    let alg = Arc::new(adamek_initial_algebra(Arc::new(signature_functor(&sig))));
    let iteration = gen_mendler_iteration(
        alg,
        Arc::new(SubstL { corpus }),
        MendlerTarget::open(samples),
        Arc::new(substitution_step(sig.clone())),
        2,
    )?;
    Ok(MendlerSubstitution { sig, iteration })
}

impl MendlerSubstitution {
    pub fn apply(&self, t: &Term, sigma: &Substitution) -> Result<Term, SyntaxError> {
        if t.scope != sigma.source {
            return Err(SyntaxError::ScopeMismatch {
                expected: sigma.source,
                found: t.scope,
            });
        }
        let l = Value::Tuple(vec![
            Value::Nat(t.scope),
            term_to_value(&self.sig, &t.body)?,
            subst_to_value(&self.sig, sigma)?,
        ]);
        let v = self.iteration.apply(&l)?;
        Ok(Term::new(sigma.target, value_to_term(&self.sig, &v)?))
    }

    /// The Mendler fixed-point equation on the corpus up to `levels`.
    pub fn check_fixed_point(&self, levels: usize) -> LawReport {
        self.iteration.check_fixed_point(levels)
    }
}

/// `subst_via_mendler` against `substitute` on every term of depth
/// `< depth` in scopes `0..=max_scope` and every substitution with images
/// of depth `< image_depth`.
pub fn check_mendler_agreement(
    sig: &BindingSignature,
    depth: usize,
    max_scope: usize,
    image_depth: usize,
) -> Result<LawReport, SyntaxError> {
    let m = subst_via_mendler(sig, max_scope, image_depth)?;
    let images: Vec<Vec<Term>> = (0..=max_scope).map(|k| enumerate_terms(sig, k, image_depth)).collect();
    let mut r = LawReport::new();
    for n in 0..=max_scope {
        for t in enumerate_terms(sig, n, depth) {
            for (k, ims) in images.iter().enumerate() {
                for s in all_substitutions(n, k, ims) {
                    let got = m.apply(&t, &s);
                    let want = substitute(sig, &t, &s);
                    r.check("mendler-agrees-with-substitute", got.is_ok() && got == want, || {
                        format!("({t}, {s})")
                    });
                }
            }
        }
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::signature::parse_signature;
    use crate::syntax::{parse_term, Tm};

    #[test]
    fn agrees_with_structural_substitution() {
        let r = check_mendler_agreement(&BindingSignature::lambda(), 3, 2, 2).unwrap();
        assert!(r.passed(), "{r}");
        assert!(r.checks_run > 1000);
    }

    #[test]
    fn capture_avoiding_example() {
        let sig = BindingSignature::lambda();
        let m = subst_via_mendler(&sig, 1, 2).unwrap();
        let t = parse_term(&sig, "app(var 0, abs(var 1))", 1).unwrap();
        let s = Substitution::new(1, 0, vec![Tm::op("abs", vec![Tm::var(0)])]).unwrap();
        assert_eq!(m.apply(&t, &s).unwrap().to_string(), "app(abs(var 0), abs(abs(var 0)))");
        assert_eq!(m.apply(&t, &Substitution::unit(1)).unwrap(), t);
        assert!(m.check_fixed_point(2).passed());
    }

    #[test]
    fn empty_signature_is_lookup() {
        let sig = parse_signature("sig e { }").unwrap();
        let m = subst_via_mendler(&sig, 2, 2).unwrap();
        let s = Substitution::new(2, 3, vec![Tm::var(2), Tm::var(0)]).unwrap();
        assert_eq!(m.apply(&Term::var(2, 0), &s).unwrap(), Term::var(3, 2));
        assert!(check_mendler_agreement(&sig, 3, 2, 2).unwrap().passed());
    }
}
