use std::collections::BTreeSet;
use std::fmt;
use std::sync::{Arc, Mutex};

use super::adamek::{check_initiality, fold, TargetAlgebra};
use super::mendler::{gen_mendler_iteration, IdentityL, MendlerIteration, MendlerTarget, Recur};
use super::{adamek_initial_algebra, EnumEndofunctor, Factor, InitialAlgebra, OmegaError, PolyFunctor, Value};
use crate::report::LawReport;

/// Node budget for the uniqueness searches.
pub const SEARCH_BOUND: usize = 2_000_000;

/// A finite category of parameters: finite sets and a list of functions
/// between them containing the identities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParamCorpus {
    pub objects: Vec<Vec<Value>>,
    pub morphisms: Vec<FinMap>,
}

/// A function between two corpus objects, as a table of codomain positions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinMap {
    pub dom: usize,
    pub cod: usize,
    pub table: Vec<usize>,
}

fn show_set(z: &[Value]) -> String {
    let items: Vec<String> = z.iter().map(ToString::to_string).collect();
    format!("{{{}}}", items.join(", "))
}

impl ParamCorpus {
    /// The full subcategory of finite sets on `objects`.
    pub fn new(objects: Vec<Vec<Value>>) -> Self {
        let mut c = Self::discrete(objects);
        let n = c.objects.len();
        let all: Vec<FinMap> = (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).flat_map(|(a, b)| c.maps(a, b)).collect();
        c.morphisms = all;
        c
    }

    /// Only identity maps.
    pub fn discrete(objects: Vec<Vec<Value>>) -> Self {
        let mut c = Self {
            objects,
            morphisms: Vec::new(),
        };
        let ids: Vec<FinMap> = (0..c.objects.len()).map(|z| c.identity(z)).collect();
        c.morphisms = ids;
        c
    }

    /// `∅`, `{1, 2}` and `{7}` with all functions.
    pub fn standard() -> Self {
        Self::new(vec![vec![], vec![Value::Nat(1), Value::Nat(2)], vec![Value::Nat(7)]])
    }

    pub fn name(&self, z: usize) -> String {
        show_set(&self.objects[z])
    }

    pub fn identity(&self, z: usize) -> FinMap {
        FinMap {
            dom: z,
            cod: z,
            table: (0..self.objects[z].len()).collect(),
        }
    }

    /// All functions `a -> b`.
    pub fn maps(&self, a: usize, b: usize) -> Vec<FinMap> {
        let (na, nb) = (self.objects[a].len(), self.objects[b].len());
        if na > 0 && nb == 0 {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut table = vec![0usize; na];
        loop {
            out.push(FinMap {
                dom: a,
                cod: b,
                table: table.clone(),
            });
            let mut i = 0;
            loop {
                if i == na {
                    return out;
                }
                table[i] += 1;
                if table[i] < nb {
                    break;
                }
                table[i] = 0;
                i += 1;
            }
        }
    }

    pub fn all_maps(&self) -> Vec<FinMap> {
        self.morphisms.clone()
    }

    /// `g ∘ f`.
    pub fn compose(&self, g: &FinMap, f: &FinMap) -> FinMap {
        assert_eq!(f.cod, g.dom, "composing non-composable maps");
        FinMap {
            dom: f.dom,
            cod: g.cod,
            table: f.table.iter().map(|&i| g.table[i]).collect(),
        }
    }

    /// `f` on an element of its domain; elements outside the domain are
    /// returned unchanged.
    pub fn apply(&self, f: &FinMap, v: &Value) -> Value {
        match self.objects[f.dom].iter().position(|w| w == v) {
            Some(i) => self.objects[f.cod][f.table[i]].clone(),
            None => v.clone(),
        }
    }

    pub fn describe(&self, f: &FinMap) -> String {
        let pairs: Vec<String> = self.objects[f.dom]
            .iter()
            .zip(&f.table)
            .map(|(v, &j)| format!("{v}↦{}", self.objects[f.cod][j]))
            .collect();
        format!("{} -> {} [{}]", self.name(f.dom), self.name(f.cod), pairs.join(", "))
    }
}

/// A polynomial factor that may mention the parameter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParamFactor {
    Param,
    Const(Vec<Value>),
    Scope,
    Rec(usize),
}

/// `F(Z, X)` polynomial in both arguments. Only the whiskering in the
/// parameter is modelled: `F(f, X)` relabels the parameter positions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParamBifunctor {
    pub summands: Vec<Vec<ParamFactor>>,
}

impl ParamBifunctor {
    pub fn new(summands: Vec<Vec<ParamFactor>>) -> Self {
        Self { summands }
    }

    /// `F(Z, X) = Z ⊎ X × X`: binary trees with leaves labelled in `Z`.
    pub fn trees() -> Self {
        Self::new(vec![vec![ParamFactor::Param], vec![ParamFactor::Rec(0), ParamFactor::Rec(0)]])
    }

    /// `F(Z, −)`.
    pub fn at(&self, z: &[Value]) -> PolyFunctor {
        PolyFunctor::new(
            self.summands
                .iter()
                .map(|s| {
                    s.iter()
                        .map(|f| match f {
                            ParamFactor::Param => Factor::Const(z.to_vec()),
                            ParamFactor::Const(c) => Factor::Const(c.clone()),
                            ParamFactor::Scope => Factor::Scope,
                            ParamFactor::Rec(k) => Factor::Rec(*k),
                        })
                        .collect()
                })
                .collect(),
        )
    }

    /// `F(f, X)` on an element of `F(Z, X)`.
    pub fn whisker(&self, corpus: &ParamCorpus, f: &FinMap, u: &Value) -> Value {
        let Value::Inj(i, body) = u else {
            return u.clone();
        };
        let Value::Tuple(parts) = &**body else {
            return u.clone();
        };
        let parts = self.summands[*i]
            .iter()
            .zip(parts)
            .map(|(factor, p)| match factor {
                ParamFactor::Param => corpus.apply(f, p),
                _ => p.clone(),
            })
            .collect();
        Value::inj(*i, Value::Tuple(parts))
    }
}

/// Whiskering identity and composition, and interchange with the action on
/// `X`, checked on `F(Z, X)(0)` for a two-element `X` and all corpus maps.
pub fn check_param_bifunctor(pb: &ParamBifunctor, corpus: &ParamCorpus) -> LawReport {
    let mut r = LawReport::new();
    let xs = Arc::new(vec![Value::Nat(0), Value::Nat(1)]);
    let fam = |_: usize| xs.clone();
    let constant = |_: usize, _: &Value| Value::Nat(0);
    let swap = |_: usize, v: &Value| Value::Nat(1 - v.as_nat().unwrap_or(0));
    let maps = corpus.all_maps();
    for (z, zs) in corpus.objects.iter().enumerate() {
        let fz = pb.at(zs);
        let elems = fz.apply(&fam, 0);
        let id = corpus.identity(z);
        for u in &elems {
            r.check("param-whisker-identity", pb.whisker(corpus, &id, u) == *u, || format!("{u}"));
        }
        for f in maps.iter().filter(|f| f.dom == z) {
            let fz2 = pb.at(&corpus.objects[f.cod]);
            for u in &elems {
                let fu = pb.whisker(corpus, f, u);
                for g in maps.iter().filter(|g| g.dom == f.cod) {
                    let gf = corpus.compose(g, f);
                    r.check(
                        "param-whisker-composition",
                        pb.whisker(corpus, &gf, u) == pb.whisker(corpus, g, &fu),
                        || format!("{u} along {} then {}", corpus.describe(f), corpus.describe(g)),
                    );
                }
                for a in [&constant as &dyn Fn(usize, &Value) -> Value, &swap] {
                    let lhs = pb.whisker(corpus, f, &fz.map(a, 0, u));
                    let rhs = fz2.map(a, 0, &fu);
                    r.check("param-whisker-interchange", lhs == rhs, || {
                        format!("{u} along {}", corpus.describe(f))
                    });
                }
            }
        }
    }
    r
}

/// A functor `G` from the parameter corpus to finite sets.
pub trait ParamFunctor: Send + Sync {
    fn carrier(&self, z: &[Value]) -> Vec<Value>;
    /// `G(f)`, given the underlying function of `f`.
    fn map(&self, f: &dyn Fn(&Value) -> Value, v: &Value) -> Value;
}

#[derive(Debug, Clone, Copy, Default)]
pub struct IdentityG;

impl ParamFunctor for IdentityG {
    fn carrier(&self, z: &[Value]) -> Vec<Value> {
        z.to_vec()
    }
    fn map(&self, f: &dyn Fn(&Value) -> Value, v: &Value) -> Value {
        f(v)
    }
}

/// The finite powerset functor, with direct images.
#[derive(Debug, Clone, Copy, Default)]
pub struct PowersetG;

impl ParamFunctor for PowersetG {
    fn carrier(&self, z: &[Value]) -> Vec<Value> {
        (0u64..1 << z.len())
            .map(|mask| {
                Value::Set(
                    z.iter()
                        .enumerate()
                        .filter(|(i, _)| mask & (1 << i) != 0)
                        .map(|(_, v)| v.clone())
                        .collect(),
                )
            })
            .collect()
    }
    fn map(&self, f: &dyn Fn(&Value) -> Value, v: &Value) -> Value {
        match v {
            Value::Set(s) => Value::Set(s.iter().map(f).collect()),
            other => other.clone(),
        }
    }
}

pub type AlgebraMap = Arc<dyn Fn(&[Value], &Value) -> Value + Send + Sync>;

/// A parametrized algebra: `G` and `φ_Z: F(Z, G Z) -> G Z`.
#[derive(Clone)]
pub struct ParamAlgebraFamily {
    pub g: Arc<dyn ParamFunctor>,
    pub phi: AlgebraMap,
}

impl fmt::Debug for ParamAlgebraFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ParamAlgebraFamily").finish_non_exhaustive()
    }
}

/// `μ F(Z, −)` for every `Z` in the corpus.
#[derive(Debug)]
pub struct ParamInitial {
    pub corpus: ParamCorpus,
    pub algebras: Vec<Arc<InitialAlgebra>>,
}

impl ParamInitial {
    pub fn new(pb: &ParamBifunctor, corpus: ParamCorpus) -> Self {
        let algebras = corpus
            .objects
            .iter()
            .map(|z| Arc::new(adamek_initial_algebra(Arc::new(pb.at(z)))))
            .collect();
        Self { corpus, algebras }
    }
}

/// The mediating family `h_Z: μ_Z -> G Z` and what was verified about it.
pub struct ParamMediators {
    pub maps: Vec<MendlerIteration>,
    pub report: LawReport,
}

impl ParamMediators {
    pub fn apply(&self, z: usize, t: &Value) -> Result<Value, OmegaError> {
        self.maps[z].apply(t)
    }
}

fn mapped_by_result(f: &dyn EnumEndofunctor, h: Recur<'_>, u: &Value) -> Result<Value, OmegaError> {
    let err = Mutex::new(None);
    let rec = |_: usize, w: &Value| match h(w) {
        Ok(x) => x,
        Err(e) => {
            err.lock().expect("rec").get_or_insert(e);
            Value::Unit
        }
    };
    let out = f.map(&rec, 0, u);
    match err.into_inner().expect("rec") {
        Some(e) => Err(e),
        None => Ok(out),
    }
}

fn check_phi_natural(
    pb: &ParamBifunctor,
    corpus: &ParamCorpus,
    fam: &ParamAlgebraFamily,
) -> Result<(), OmegaError> {
    for f in corpus.all_maps() {
        let (z, z2) = (&corpus.objects[f.dom], &corpus.objects[f.cod]);
        let gz = Arc::new(fam.g.carrier(z));
        let fz2 = pb.at(z2);
        let under = |v: &Value| corpus.apply(&f, v);
        let gf = |_: usize, v: &Value| fam.g.map(&under, v);
        for u in pb.at(z).apply(&|_| gz.clone(), 0) {
            let lhs = fam.g.map(&under, &(fam.phi)(z, &u));
            let rhs = (fam.phi)(z2, &fz2.map(&gf, 0, &pb.whisker(corpus, &f, &u)));
            if lhs != rhs {
                return Err(OmegaError::PhiNotNatural(format!("at {u} along {}", corpus.describe(&f))));
            }
        }
    }
    Ok(())
}

/// The unique family `h_Z` with `h_Z ∘ str_Z = φ_Z ∘ F(Z, h_Z)`, each built
/// by Mendler iteration with `L = Id` and `ψ(h) = φ_Z ∘ F(Z, h)`.
///
/// Verified at `depth`: the fixed-point equation, naturality in `Z` along
/// every corpus map, and uniqueness among all maps on the truncation.
pub fn parametrized_initiality(
    pb: &ParamBifunctor,
    mu: &ParamInitial,
    fam: &ParamAlgebraFamily,
    depth: usize,
) -> Result<ParamMediators, OmegaError> {
    let corpus = &mu.corpus;
    check_phi_natural(pb, corpus, fam)?;
    let mut maps = Vec::with_capacity(corpus.objects.len());
    let mut report = LawReport::new();
    for (zi, z) in corpus.objects.iter().enumerate() {
        let alg = mu.algebras[zi].clone();
        let fz: Arc<dyn EnumEndofunctor> = alg.functor().clone();
        let (phi, zv) = (fam.phi.clone(), z.clone());
        let psi = Arc::new(move |h: Recur<'_>, u: &Value| Ok(phi(&zv, &mapped_by_result(&*fz, h, u)?)));
        let carrier = fam.g.carrier(z);
        let it = gen_mendler_iteration(
            alg.clone(),
            Arc::new(IdentityL),
            MendlerTarget::finite(carrier.clone()),
            psi,
            2,
        )?;
        report.merge(it.check_fixed_point(depth).prefixed(&corpus.name(zi)));

        let (phi, zv) = (fam.phi.clone(), z.clone());
        let target = TargetAlgebra {
            name: corpus.name(zi),
            carrier: Arc::new(move |_| carrier.clone()),
            structure: Arc::new(move |_, u| phi(&zv, u)),
        };
        let init = check_initiality(&alg, std::slice::from_ref(&target), depth, &[0], SEARCH_BOUND)?;
        report.merge(init);
        for t in alg.stage(depth, 0).iter() {
            let ok = it.apply(t).ok() == fold(&alg, &target, 0, t).ok();
            report.check("mendler-agrees-with-fold", ok, || format!("{} at {t}", corpus.name(zi)));
        }
        maps.push(it);
    }

    for f in corpus.all_maps() {
        let muf = mu_on_morphism(pb, mu, &f, depth)?;
        let under = |v: &Value| corpus.apply(&f, v);
        for t in mu.algebras[f.dom].stage(depth, 0).iter() {
            let lhs = muf.apply(t).and_then(|s| maps[f.cod].apply(&s));
            let rhs = maps[f.dom].apply(t).map(|v| fam.g.map(&under, &v));
            report.check("param-naturality", lhs.is_ok() && lhs.ok() == rhs.ok(), || {
                format!("{t} along {}", corpus.describe(&f))
            });
        }
    }
    Ok(ParamMediators { maps, report })
}

/// `μ(f): μ_Z -> μ_{Z'}`, the fold into `str_{Z'} ∘ F(f, μ_{Z'})`.
pub struct MuMap {
    alg: Arc<InitialAlgebra>,
    target: TargetAlgebra,
}

impl MuMap {
    pub fn apply(&self, t: &Value) -> Result<Value, OmegaError> {
        fold(&self.alg, &self.target, 0, t)
    }
}

pub fn mu_on_morphism(pb: &ParamBifunctor, mu: &ParamInitial, f: &FinMap, depth: usize) -> Result<MuMap, OmegaError> {
    if f.dom >= mu.algebras.len() || f.cod >= mu.algebras.len() || f.table.len() != mu.corpus.objects[f.dom].len() {
        return Err(OmegaError::Shape("map outside the parameter corpus".into()));
    }
    let (pb, corpus, f2) = (pb.clone(), mu.corpus.clone(), f.clone());
    let cod = mu.algebras[f.cod].clone();
    let target = TargetAlgebra {
        name: format!("mu({})", mu.corpus.describe(f)),
        carrier: Arc::new(move |n| cod.stage(depth, n).to_vec()),
        structure: Arc::new(move |_, u| Value::roll(pb.whisker(&corpus, &f2, u))),
    };
    Ok(MuMap {
        alg: mu.algebras[f.dom].clone(),
        target,
    })
}

/// `μ(id) = id`, `μ(g ∘ f) = μ(g) ∘ μ(f)` on `A_depth`, and uniqueness of
/// each `μ(f)` as an algebra map.
pub fn check_mu_functor(pb: &ParamBifunctor, mu: &ParamInitial, depth: usize) -> Result<LawReport, OmegaError> {
    let corpus = &mu.corpus;
    let mut r = LawReport::new();
    for z in 0..corpus.objects.len() {
        let id = mu_on_morphism(pb, mu, &corpus.identity(z), depth)?;
        for t in mu.algebras[z].stage(depth, 0).iter() {
            r.check("mu-identity", id.apply(t).ok().as_ref() == Some(t), || format!("{t}"));
        }
    }
    let maps = corpus.all_maps();
    for f in &maps {
        let muf = mu_on_morphism(pb, mu, f, depth)?;
        r.merge(
            check_initiality(&mu.algebras[f.dom], std::slice::from_ref(&muf.target), depth, &[0], SEARCH_BOUND)?
                .prefixed("mu"),
        );
        for g in maps.iter().filter(|g| g.dom == f.cod) {
            let mug = mu_on_morphism(pb, mu, g, depth)?;
            let mugf = mu_on_morphism(pb, mu, &corpus.compose(g, f), depth)?;
            for t in mu.algebras[f.dom].stage(depth, 0).iter() {
                let lhs = mugf.apply(t).ok();
                let rhs = muf.apply(t).and_then(|s| mug.apply(&s)).ok();
                r.check("mu-composition", lhs.is_some() && lhs == rhs, || {
                    format!("{t} along {} then {}", corpus.describe(f), corpus.describe(g))
                });
            }
        }
    }
    Ok(r)
}

pub fn leaf(z: Value) -> Value {
    Value::roll(Value::inj(0, Value::Tuple(vec![z])))
}

pub fn node(l: Value, r: Value) -> Value {
    Value::roll(Value::inj(1, Value::Tuple(vec![l, r])))
}

fn tree_case(u: &Value) -> (usize, &[Value]) {
    match u {
        Value::Inj(i, body) => match &**body {
            Value::Tuple(parts) => (*i, parts.as_slice()),
            _ => (usize::MAX, &[]),
        },
        _ => (usize::MAX, &[]),
    }
}

/// `G = Id`, `φ(leaf z) = z`, `φ(node(l, r)) = l`.
pub fn leftmost_leaf_family() -> ParamAlgebraFamily {
    ParamAlgebraFamily {
        g: Arc::new(IdentityG),
        phi: Arc::new(|_, u| match tree_case(u) {
            (0 | 1, [first, ..]) => first.clone(),
            _ => Value::Unit,
        }),
    }
}

/// `G = P`, `φ(leaf z) = {z}`, `φ(node(l, r)) = l ∪ r`.
pub fn leaves_family() -> ParamAlgebraFamily {
    ParamAlgebraFamily {
        g: Arc::new(PowersetG),
        phi: Arc::new(|_, u| match tree_case(u) {
            (0, [z]) => Value::Set(BTreeSet::from([z.clone()])),
            (1, [Value::Set(l), Value::Set(r)]) => Value::Set(l.union(r).cloned().collect()),
            _ => Value::Unit,
        }),
    }
}
