use std::fmt;

use super::{SyntaxError, Term, Tm};
use crate::signature::BindingSignature;

/// `ρ: n -> m`, sending variable `i` to `map[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Renaming {
    pub source: usize,
    pub target: usize,
    pub map: Vec<usize>,
}

impl Renaming {
    pub fn new(source: usize, target: usize, map: Vec<usize>) -> Result<Self, SyntaxError> {
        if map.len() != source || map.iter().any(|&j| j >= target) {
            return Err(SyntaxError::BadRenaming(format!("{map:?} : {source} -> {target}")));
        }
        Ok(Self { source, target, map })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            source: n,
            target: n,
            map: (0..n).collect(),
        }
    }

    /// The inclusion `n -> n + k` that makes room for `k` new bound variables.
    pub fn weakening(n: usize, k: usize) -> Self {
        Self {
            source: n,
            target: n + k,
            map: (k..n + k).collect(),
        }
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &Renaming) -> Self {
        Self {
            source: self.source,
            target: other.target,
            map: self.map.iter().map(|&j| other.map[j]).collect(),
        }
    }

    /// All renamings `n -> m`.
    pub fn all(n: usize, m: usize) -> Vec<Renaming> {
        let mut out = Vec::new();
        if n > 0 && m == 0 {
            return out;
        }
        let mut map = vec![0; n];
        loop {
            out.push(Self {
                source: n,
                target: m,
                map: map.clone(),
            });
            let mut i = 0;
            loop {
                if i == n {
                    return out;
                }
                map[i] += 1;
                if map[i] < m {
                    break;
                }
                map[i] = 0;
                i += 1;
            }
        }
    }
}

/// Bound variables are untouched; a free variable `i` seen under `k`
/// binders becomes `ρ(i - k) + k`. Binding depth is read off the
/// signature, so the term must conform to it.
pub fn rename(sig: &BindingSignature, t: &Term, rho: &Renaming) -> Result<Term, SyntaxError> {
    if t.scope != rho.source {
        return Err(SyntaxError::ScopeMismatch {
            expected: rho.source,
            found: t.scope,
        });
    }
    Ok(Term::new(rho.target, rename_with(sig, &t.body, 0, &rho.map)))
}

fn rename_with(sig: &BindingSignature, t: &Tm, lift: usize, map: &[usize]) -> Tm {
    match t {
        Tm::Var(i) if *i < lift => Tm::Var(*i),
        Tm::Var(i) => Tm::Var(map[i - lift] + lift),
        Tm::Op(c, args) => {
            let arity = sig.constructor(c).map(|(_, k)| k.arity.clone()).unwrap_or_default();
            Tm::Op(
                c.clone(),
                args.iter()
                    .enumerate()
                    .map(|(j, a)| rename_with(sig, a, lift + arity.get(j).copied().unwrap_or(0), map))
                    .collect(),
            )
        }
    }
}

/// `σ: n -> m`, sending variable `i` to a term in scope `m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Substitution {
    pub source: usize,
    pub target: usize,
    pub images: Vec<Tm>,
}

impl Substitution {
    pub fn new(source: usize, target: usize, images: Vec<Tm>) -> Result<Self, SyntaxError> {
        if images.len() != source {
            return Err(SyntaxError::ScopeMismatch {
                expected: source,
                found: images.len(),
            });
        }
        Ok(Self { source, target, images })
    }

    /// Variables to themselves.
    pub fn unit(n: usize) -> Self {
        Self {
            source: n,
            target: n,
            images: (0..n).map(Tm::Var).collect(),
        }
    }

    /// `σ` under `k` binders: `i < k` stays, `i >= k` goes to the weakened
    /// image of `i - k`.
    pub fn lift(&self, sig: &BindingSignature, k: usize) -> Self {
        if k == 0 {
            return self.clone();
        }
        let w = Renaming::weakening(self.target, k);
        let images = (0..k)
            .map(Tm::Var)
            .chain(self.images.iter().map(|t| rename_with(sig, t, 0, &w.map)))
            .collect();
        Self {
            source: self.source + k,
            target: self.target + k,
            images,
        }
    }
}

impl fmt::Display for Substitution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.images.iter().map(ToString::to_string).collect();
        write!(f, "[{}] : {} -> {}", items.join(", "), self.source, self.target)
    }
}

fn check_source(t: &Term, sigma: &Substitution) -> Result<(), SyntaxError> {
    if t.scope != sigma.source {
        return Err(SyntaxError::ScopeMismatch {
            expected: sigma.source,
            found: t.scope,
        });
    }
    Ok(())
}

fn subst_tm(sig: &BindingSignature, t: &Tm, sigma: &Substitution) -> Tm {
    match t {
        Tm::Var(i) => sigma.images[*i].clone(),
        Tm::Op(c, args) => {
            let arity = sig.constructor(c).map(|(_, k)| k.arity.clone()).unwrap_or_default();
            Tm::Op(
                c.clone(),
                args.iter()
                    .enumerate()
                    .map(|(j, a)| subst_tm(sig, a, &sigma.lift(sig, arity.get(j).copied().unwrap_or(0))))
                    .collect(),
            )
        }
    }
}

/// Capture-avoiding substitution by structural recursion.
pub fn substitute(sig: &BindingSignature, t: &Term, sigma: &Substitution) -> Result<Term, SyntaxError> {
    check_source(t, sigma)?;
    Ok(Term::new(sigma.target, subst_tm(sig, &t.body, sigma)))
}

/// A deliberately wrong substitution that forgets to lift `σ` under
/// binders. Variables outside `σ` are left as they are.
pub fn substitute_without_lift(
    _sig: &BindingSignature,
    t: &Term,
    sigma: &Substitution,
) -> Result<Term, SyntaxError> {
    check_source(t, sigma)?;
    fn go(t: &Tm, sigma: &Substitution) -> Tm {
        match t {
            Tm::Var(i) => sigma.images.get(*i).cloned().unwrap_or(Tm::Var(*i)),
            Tm::Op(c, args) => Tm::Op(c.clone(), args.iter().map(|a| go(a, sigma)).collect()),
        }
    }
    Ok(Term::new(sigma.target, go(&t.body, sigma)))
}

/// `(τ ⊙ σ)(i) = τ(σ(i))`.
pub fn compose_substitutions(
    sig: &BindingSignature,
    tau: &Substitution,
    sigma: &Substitution,
) -> Result<Substitution, SyntaxError> {
    if sigma.target != tau.source {
        return Err(SyntaxError::ScopeMismatch {
            expected: tau.source,
            found: sigma.target,
        });
    }
    Ok(Substitution {
        source: sigma.source,
        target: tau.target,
        images: sigma.images.iter().map(|t| subst_tm(sig, t, tau)).collect(),
    })
}
