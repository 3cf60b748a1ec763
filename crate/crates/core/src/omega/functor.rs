use std::collections::BTreeSet;
use std::sync::Arc;

use super::Value;
use crate::report::LawReport;

/// A scope-indexed family of finite sets at one truncation level.
pub type Family<'a> = &'a dyn Fn(usize) -> Arc<Vec<Value>>;

/// A scope-preserving map between families: `(scope, element) -> element`.
pub type FamilyMap<'a> = &'a dyn Fn(usize, &Value) -> Value;

/// A set-like object presented by cumulative truncation levels. Plain sets
/// ignore the scope argument.
pub trait EnumSetObj: Send + Sync {
    fn level(&self, d: usize, n: usize) -> Arc<Vec<Value>>;
}

/// A finite set, the same at every level and scope.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteSet(pub Vec<Value>);

impl EnumSetObj for FiniteSet {
    fn level(&self, _d: usize, _n: usize) -> Arc<Vec<Value>> {
        Arc::new(self.0.clone())
    }
}

/// An endofunctor on scope-indexed families of enumerable sets.
pub trait EnumEndofunctor: Send + Sync {
    /// Elements of `F(X)(n)`, in a fixed order.
    fn apply(&self, x: Family<'_>, n: usize) -> Vec<Value>;

    /// `F(f)` at scope `n` on an element of `F(X)(n)`.
    fn map(&self, f: FamilyMap<'_>, n: usize, v: &Value) -> Value;

    /// Cocontinuity witness: level `d` of `F(X)` is computed from level
    /// `level_shift(d)` of `X`.
    fn level_shift(&self, d: usize) -> usize {
        d.saturating_sub(1)
    }

    /// Human-readable description, e.g. `F(X)(n) = n ⊎ X(n+1)`.
    fn describe(&self) -> String {
        "F".into()
    }
}

/// One factor of a product summand.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Factor {
    /// A fixed finite set.
    Const(Vec<Value>),
    /// The `n`-element set of variables in scope `n`.
    Scope,
    /// `X(n + k)`.
    Rec(usize),
}

/// `F(X)(n) = ⨆_i ∏_j factor_ij`. An element of summand `i` is
/// `Inj(i, Tuple(components))`; products are enumerated with the first
/// factor outermost.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyFunctor {
    pub summands: Vec<Vec<Factor>>,
}

impl PolyFunctor {
    pub fn new(summands: Vec<Vec<Factor>>) -> Self {
        Self { summands }
    }

    /// `F(X) = C`, one summand with one constant factor.
    pub fn constant(c: Vec<Value>) -> Self {
        Self::new(vec![vec![Factor::Const(c)]])
    }

    /// `F(X) = 1 ⊎ X`, whose initial algebra is the naturals.
    pub fn naturals() -> Self {
        Self::new(vec![vec![Factor::Const(vec![Value::Unit])], vec![Factor::Rec(0)]])
    }
}

/// Cartesian product, first list outermost.
pub(crate) fn product(lists: &[Arc<Vec<Value>>]) -> Vec<Vec<Value>> {
    let mut out = vec![Vec::new()];
    for l in lists {
        let mut next = Vec::with_capacity(out.len() * l.len());
        for prefix in &out {
            for v in l.iter() {
                let mut p = prefix.clone();
                p.push(v.clone());
                next.push(p);
            }
        }
        out = next;
    }
    out
}

impl EnumEndofunctor for PolyFunctor {
    fn apply(&self, x: Family<'_>, n: usize) -> Vec<Value> {
        let mut out = Vec::new();
        for (i, summand) in self.summands.iter().enumerate() {
            let lists: Vec<Arc<Vec<Value>>> = summand
                .iter()
                .map(|f| match f {
                    Factor::Const(c) => Arc::new(c.clone()),
                    Factor::Scope => Arc::new((0..n).map(Value::Nat).collect()),
                    Factor::Rec(k) => x(n + k),
                })
                .collect();
            out.extend(
                product(&lists)
                    .into_iter()
                    .map(|p| Value::inj(i, Value::Tuple(p))),
            );
        }
        out
    }

    fn map(&self, f: FamilyMap<'_>, n: usize, v: &Value) -> Value {
        let Value::Inj(i, body) = v else {
            panic!("not an element of a polynomial functor: {v}");
        };
        let Value::Tuple(parts) = &**body else {
            panic!("not an element of a polynomial functor: {v}");
        };
        let parts = self.summands[*i]
            .iter()
            .zip(parts)
            .map(|(factor, p)| match factor {
                Factor::Rec(k) => f(n + k, p),
                _ => p.clone(),
            })
            .collect();
        Value::inj(*i, Value::Tuple(parts))
    }

    fn describe(&self) -> String {
        if self.summands.is_empty() {
            return "F(X)(n) = 0".into();
        }
        let summands: Vec<String> = self
            .summands
            .iter()
            .map(|s| {
                if s.is_empty() {
                    return "1".into();
                }
                let parts: Vec<String> = s
                    .iter()
                    .map(|f| match f {
                        Factor::Const(c) if c.len() == 1 => "1".into(),
                        Factor::Const(c) => format!("{}", c.len()),
                        Factor::Scope => "n".into(),
                        Factor::Rec(0) => "X(n)".into(),
                        Factor::Rec(k) => format!("X(n+{k})"),
                    })
                    .collect();
                parts.join("×")
            })
            .collect();
        format!("F(X)(n) = {}", summands.join(" ⊎ "))
    }
}

/// Functor laws on corpus maps and colimit preservation along the given
/// chains: every element of `F(X_top)` already occurs in some `F(X_d)`, and
/// the `F(X_d)` are cumulative.
pub fn check_enum_functor(
    f: &dyn EnumEndofunctor,
    chains: &[&dyn EnumSetObj],
    levels: usize,
    scopes: &[usize],
) -> LawReport {
    let mut r = LawReport::new();
    for (ci, x) in chains.iter().enumerate() {
        for &n in scopes {
            let fam = |d: usize| move |m: usize| x.level(d, m);
            let mut union = BTreeSet::new();
            let mut prev: Option<BTreeSet<Value>> = None;
            for d in 0..=levels {
                let here: BTreeSet<Value> = f.apply(&fam(d), n).into_iter().collect();
                if let Some(p) = &prev {
                    r.check("cocontinuity-cumulative", p.is_subset(&here), || {
                        format!("chain {ci}, scope {n}, level {d}")
                    });
                }
                union.extend(here.iter().cloned());
                prev = Some(here);
            }
            let top: BTreeSet<Value> = f.apply(&fam(levels), n).into_iter().collect();
            r.check("cocontinuity-colimit", top == union, || format!("chain {ci}, scope {n}"));

            let elems = f.apply(&fam(levels), n);
            let id = |_: usize, v: &Value| v.clone();
            let wrap = |_: usize, v: &Value| Value::Tuple(vec![v.clone()]);
            let pair = |_: usize, v: &Value| Value::Tuple(vec![v.clone(), v.clone()]);
            for v in &elems {
                r.check("functor-identity", f.map(&id, n, v) == *v, || format!("{v}"));
                let both = |m: usize, w: &Value| pair(m, &wrap(m, w));
                let lhs = f.map(&both, n, v);
                let rhs = f.map(&pair, n, &f.map(&wrap, n, v));
                r.check("functor-composition", lhs == rhs, || format!("{v}"));
            }
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn naturals_functor_shapes() {
        let f = PolyFunctor::naturals();
        let empty = |_: usize| Arc::new(Vec::new());
        assert_eq!(f.apply(&empty, 0), vec![Value::inj(0, Value::Tuple(vec![Value::Unit]))]);
        assert_eq!(f.describe(), "F(X)(n) = 1 ⊎ X(n)");
    }

    #[test]
    fn scope_factor_lists_variables() {
        let f = PolyFunctor::new(vec![vec![Factor::Scope]]);
        let empty = |_: usize| Arc::new(Vec::new());
        assert_eq!(f.apply(&empty, 3).len(), 3);
        assert!(f.apply(&empty, 0).is_empty());
    }

    #[test]
    fn map_touches_only_recursive_positions() {
        let f = PolyFunctor::new(vec![vec![Factor::Scope, Factor::Rec(1)]]);
        let v = Value::inj(0, Value::Tuple(vec![Value::Nat(0), Value::Nat(5)]));
        let seen = std::sync::Mutex::new(Vec::new());
        let g = |n: usize, x: &Value| {
            seen.lock().unwrap().push(n);
            Value::Bool(x == &Value::Nat(5))
        };
        let out = f.map(&g, 2, &v);
        assert_eq!(out, Value::inj(0, Value::Tuple(vec![Value::Nat(0), Value::Bool(true)])));
        assert_eq!(*seen.lock().unwrap(), vec![3]);
    }

    #[test]
    fn finite_chains_pass_the_functor_checks() {
        let f = PolyFunctor::naturals();
        let set = FiniteSet(vec![Value::Nat(1), Value::Nat(2)]);
        let r = check_enum_functor(&f, &[&set], 3, &[0]);
        assert!(r.passed(), "{r}");
    }
}
