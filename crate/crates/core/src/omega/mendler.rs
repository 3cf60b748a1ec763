use std::sync::{Arc, Mutex};

use super::{Family, FamilyMap, InitialAlgebra, OmegaError, Value};
use crate::report::LawReport;

/// The functor `L` of the scheme, from scope-indexed families to plain sets.
pub trait LFunctor: Send + Sync {
    /// Elements of `L(A)`.
    fn apply(&self, a: Family<'_>) -> Vec<Value>;

    /// `L(f)` on an element of `L(A)`.
    fn map(&self, f: FamilyMap<'_>, l: &Value) -> Value;
}

/// `L(A) = A(0)`.
#[derive(Debug, Clone, Copy, Default)]
pub struct IdentityL;

impl LFunctor for IdentityL {
    fn apply(&self, a: Family<'_>) -> Vec<Value> {
        a(0).to_vec()
    }
    fn map(&self, f: FamilyMap<'_>, l: &Value) -> Value {
        f(0, l)
    }
}

/// `L(A) = C` for a fixed set `C`.
#[derive(Debug, Clone, Default)]
pub struct ConstL(pub Vec<Value>);

impl LFunctor for ConstL {
    fn apply(&self, _a: Family<'_>) -> Vec<Value> {
        self.0.clone()
    }
    fn map(&self, _f: FamilyMap<'_>, l: &Value) -> Value {
        l.clone()
    }
}

/// A recursive call available to a step: `h: L(A) -> X`.
pub type Recur<'a> = &'a dyn Fn(&Value) -> Result<Value, OmegaError>;

type BoxedRecur<'a> = Box<dyn Fn(&Value) -> Result<Value, OmegaError> + 'a>;

/// The step `ψ_A: hom(L A, X) -> hom(L(F A), X)`, given uniformly in `A`.
pub trait MendlerStep: Send + Sync {
    fn step(&self, h: Recur<'_>, l: &Value) -> Result<Value, OmegaError>;
}

impl<T> MendlerStep for T
where
    T: Fn(Recur<'_>, &Value) -> Result<Value, OmegaError> + Send + Sync,
{
    fn step(&self, h: Recur<'_>, l: &Value) -> Result<Value, OmegaError> {
        self(h, l)
    }
}

/// The target object `X`: its elements when finite, and sample elements
/// for building corpus maps into it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MendlerTarget {
    pub elements: Option<Vec<Value>>,
    pub samples: Vec<Value>,
}

impl MendlerTarget {
    pub fn finite(elements: Vec<Value>) -> Self {
        Self {
            samples: elements.clone(),
            elements: Some(elements),
        }
    }

    pub fn open(samples: Vec<Value>) -> Self {
        Self {
            elements: None,
            samples,
        }
    }
}

/// `h: L(μF) -> X` with `h ∘ L(str) = ψ(h)`, computed as the colimit of the
/// stage maps `h_0` (the map out of `L(A_0)`) and `h_{n+1} = ψ(h_n)`.
pub struct MendlerIteration {
    alg: Arc<InitialAlgebra>,
    l: Arc<dyn LFunctor>,
    psi: Arc<dyn MendlerStep>,
    target: MendlerTarget,
    h0: Option<Value>,
}

/// Checks `ψ` for naturality on the corpus (chain stages up to
/// `corpus_levels`, constant and rotating endomaps of each stage, and
/// constant and spread maps into `X`), then builds the iteration.
pub fn gen_mendler_iteration(
    alg: Arc<InitialAlgebra>,
    l: Arc<dyn LFunctor>,
    target: MendlerTarget,
    psi: Arc<dyn MendlerStep>,
    corpus_levels: usize,
) -> Result<MendlerIteration, OmegaError> {
    let empty = |_: usize| Arc::new(Vec::new());
    let h0 = if l.apply(&empty).is_empty() {
        None
    } else {
        match &target.elements {
            Some(xs) if xs.len() == 1 => Some(xs[0].clone()),
            _ => return Err(OmegaError::NoInitialMap),
        }
    };
    let it = MendlerIteration {
        alg,
        l,
        psi,
        target,
        h0,
    };
    it.check_naturality(corpus_levels)?;
    Ok(it)
}

impl MendlerIteration {
    pub fn algebra(&self) -> &Arc<InitialAlgebra> {
        &self.alg
    }

    /// Least `n` with `ℓ ∈ L(A_n)`, read off the `A`-components of `ℓ`.
    pub fn stage_of(&self, l: &Value) -> Result<usize, OmegaError> {
        let worst = Mutex::new(Ok(0usize));
        let visit = |n: usize, v: &Value| {
            let mut w = worst.lock().expect("stage");
            if let Ok(cur) = *w {
                *w = match self.alg.rank(n, v) {
                    Some(r) => Ok(cur.max(r)),
                    None => Err(OmegaError::NotInCarrier(v.to_string())),
                };
            }
            v.clone()
        };
        self.l.map(&visit, l);
        worst.into_inner().expect("stage")
    }

    fn eval(&self, n: usize, l: &Value) -> Result<Value, OmegaError> {
        if n == 0 {
            return self.h0.clone().ok_or(OmegaError::NoInitialMap);
        }
        let unroll = |_: usize, v: &Value| v.unroll().cloned().unwrap_or(Value::Unit);
        let unrolled = self.l.map(&unroll, l);
        let below = |m: &Value| {
            let s = self.stage_of(m)?;
            if s > n - 1 {
                return Err(OmegaError::OutsideStage(format!("{m} is not in stage {}", n - 1)));
            }
            self.eval(n - 1, m)
        };
        self.psi.step(&below, &unrolled)
    }

    /// `h(ℓ)` for `ℓ ∈ L(μF)`.
    pub fn apply(&self, l: &Value) -> Result<Value, OmegaError> {
        self.eval(self.stage_of(l)?, l)
    }

    fn f_stage(&self, k: usize) -> impl Fn(usize) -> Arc<Vec<Value>> + '_ {
        move |n| {
            let below = |m: usize| self.alg.stage(k, m);
            Arc::new(self.alg.functor().apply(&below, n))
        }
    }

    fn check_naturality(&self, levels: usize) -> Result<(), OmegaError> {
        let f = self.alg.functor();
        let samples = &self.target.samples;
        for k in 0..=levels {
            let stage = |n: usize| self.alg.stage(k, n);
            let fa = self.f_stage(k);
            let elems = self.l.apply(&fa);
            let constant = |n: usize, _: &Value| stage(n)[0].clone();
            let rotate = |n: usize, v: &Value| {
                let s = stage(n);
                let i = s.iter().position(|w| w == v).unwrap_or(0);
                s[(i + 1) % s.len()].clone()
            };
            let endomaps: [(&str, FamilyMap<'_>); 2] = [("constant", &constant), ("rotate", &rotate)];
            let mut hs: Vec<(String, BoxedRecur<'_>)> = Vec::new();
            for s in samples.iter().take(3) {
                hs.push((format!("const {s}"), Box::new(move |_: &Value| Ok(s.clone()))));
            }
            if !samples.is_empty() {
                hs.push((
                    "spread".into(),
                    Box::new(move |v: &Value| Ok(samples[v.size() % samples.len()].clone())),
                ));
            }
            for (aname, a) in endomaps {
                for (hname, h) in &hs {
                    let h_after_la = |v: &Value| h(&self.l.map(a, v));
                    let fa_map = |n: usize, v: &Value| f.map(a, n, v);
                    for l in &elems {
                        let lhs = self.psi.step(&h_after_la, l);
                        let rhs = self.psi.step(&**h, &self.l.map(&fa_map, l));
                        let same = match (&lhs, &rhs) {
                            (Ok(x), Ok(y)) => x == y,
                            _ => false,
                        };
                        if !same {
                            return Err(OmegaError::PsiNotNatural(format!(
                                "at {l} with endomap {aname} of stage {k} and h = {hname}"
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// `h(L(str)(ℓ)) = ψ(h)(ℓ)` for every `ℓ ∈ L(F A_k)`, `k < levels`.
    pub fn check_fixed_point(&self, levels: usize) -> LawReport {
        let mut r = LawReport::new();
        let str_ = |_: usize, u: &Value| Value::roll(u.clone());
        let h = |v: &Value| self.apply(v);
        for k in 0..levels {
            let fa = self.f_stage(k);
            for l in self.l.apply(&fa) {
                let lhs = self.apply(&self.l.map(&str_, &l));
                let rhs = self.psi.step(&h, &l);
                let ok = matches!((&lhs, &rhs), (Ok(x), Ok(y)) if x == y);
                r.check("mendler-fixed-point", ok, || format!("{l}"));
            }
        }
        r
    }

    /// Counts all maps `L(A_level) -> X` satisfying the fixed-point equation
    /// on `L(F A_{level-1})`, by plain enumeration of function tables.
    pub fn count_solutions(&self, level: usize, bound: usize) -> Result<usize, OmegaError> {
        let xs = self
            .target
            .elements
            .as_ref()
            .ok_or_else(|| OmegaError::Shape("target has no finite element list".into()))?;
        let stage = |n: usize| self.alg.stage(level, n);
        let domain = self.l.apply(&stage);
        let total = (xs.len() as u128).checked_pow(domain.len() as u32);
        if total.is_none_or(|t| t > bound as u128) {
            return Err(OmegaError::EnumerationBound(bound));
        }
        let below = if level == 0 {
            Vec::new()
        } else {
            self.l.apply(&self.f_stage(level - 1))
        };
        let str_ = |_: usize, u: &Value| Value::roll(u.clone());
        let mut table = vec![0usize; domain.len()];
        let mut count = 0;
        loop {
            let h = |v: &Value| {
                domain
                    .iter()
                    .position(|d| d == v)
                    .map(|i| xs[table[i]].clone())
                    .ok_or_else(|| OmegaError::OutsideStage(v.to_string()))
            };
            let ok = below.iter().all(|l| {
                let lhs = h(&self.l.map(&str_, l));
                let rhs = self.psi.step(&h, l);
                matches!((&lhs, &rhs), (Ok(x), Ok(y)) if x == y)
            });
            if ok {
                count += 1;
            }
            let mut i = 0;
            loop {
                if i == table.len() {
                    return Ok(count);
                }
                table[i] += 1;
                if table[i] < xs.len() {
                    break;
                }
                table[i] = 0;
                i += 1;
            }
        }
    }
}

/// The numeral `k` in the initial algebra of `1 ⊎ X`.
pub fn numeral(k: usize) -> Value {
    let zero = Value::roll(Value::inj(0, Value::Tuple(vec![Value::Unit])));
    (0..k).fold(zero, |acc, _| Value::roll(Value::inj(1, Value::Tuple(vec![acc]))))
}

/// Evenness on the naturals: `ψ(h)(inl ()) = true`, `ψ(h)(inr a) = ¬h(a)`.
pub fn evenness_step() -> Arc<dyn MendlerStep> {
    Arc::new(|h: Recur<'_>, l: &Value| -> Result<Value, OmegaError> {
        match l {
            Value::Inj(0, _) => Ok(Value::Bool(true)),
            Value::Inj(1, body) => {
                let Value::Tuple(parts) = &**body else {
                    return Err(OmegaError::Shape(format!("{l}")));
                };
                let b = h(&parts[0])?.as_bool().ok_or_else(|| OmegaError::Shape("not a boolean".into()))?;
                Ok(Value::Bool(!b))
            }
            _ => Err(OmegaError::Shape(format!("{l}"))),
        }
    })
}
