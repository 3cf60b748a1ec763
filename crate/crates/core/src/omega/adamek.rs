use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, RwLock};

use super::{EnumEndofunctor, EnumSetObj, OmegaError, Value};
use crate::report::LawReport;

type StageCache = HashMap<(usize, usize), Arc<Vec<Value>>>;

/// The initial algebra of `F` as the colimit of `0 -> F0 -> F²0 -> …`.
///
/// Stage `A_{k+1}(n)` is `str[F(A_k)(n)]`, so the connecting maps are
/// inclusions and the carrier at level `d` is `A_d`. Stages are computed on
/// demand and memoized; concurrent readers may race to fill a stage, which
/// is harmless because stages are deterministic.
pub struct InitialAlgebra {
    functor: Arc<dyn EnumEndofunctor>,
    stages: RwLock<StageCache>,
}

impl std::fmt::Debug for InitialAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("InitialAlgebra")
            .field("functor", &self.functor.describe())
            .finish_non_exhaustive()
    }
}

pub fn adamek_initial_algebra(functor: Arc<dyn EnumEndofunctor>) -> InitialAlgebra {
    InitialAlgebra {
        functor,
        stages: RwLock::new(HashMap::new()),
    }
}

impl InitialAlgebra {
    pub fn functor(&self) -> &Arc<dyn EnumEndofunctor> {
        &self.functor
    }

    /// Chain stage `A_k(n)`.
    pub fn stage(&self, k: usize, n: usize) -> Arc<Vec<Value>> {
        if k == 0 {
            return Arc::new(Vec::new());
        }
        if let Some(s) = self.stages.read().expect("stage memo").get(&(k, n)) {
            return s.clone();
        }
        let below = |m: usize| self.stage(k - 1, m);
        let s: Arc<Vec<Value>> = Arc::new(self.functor.apply(&below, n).into_iter().map(Value::roll).collect());
        self.stages
            .write()
            .expect("stage memo")
            .entry((k, n))
            .or_insert(s)
            .clone()
    }

    pub fn str(&self, u: &Value) -> Value {
        Value::roll(u.clone())
    }

    pub fn str_inv(&self, v: &Value) -> Option<Value> {
        v.unroll().cloned()
    }

    /// Index of the first stage containing `v`, found structurally; `None`
    /// if `v` is not of the form `str(u)`.
    pub fn rank(&self, n: usize, v: &Value) -> Option<usize> {
        let u = v.unroll()?;
        let worst = Mutex::new(Some(0usize));
        let visit = |m: usize, w: &Value| {
            let r = self.rank(m, w);
            let mut g = worst.lock().expect("rank");
            *g = match (*g, r) {
                (Some(a), Some(b)) => Some(a.max(b)),
                _ => None,
            };
            w.clone()
        };
        self.functor.map(&visit, n, u);
        let r = worst.into_inner().expect("rank")?;
        Some(r + 1)
    }

    pub fn contains(&self, d: usize, n: usize, v: &Value) -> bool {
        self.rank(n, v)
            .is_some_and(|r| r <= d && self.stage(r, n).contains(v))
    }

    /// The least `k ≤ max` with `A_k(n) = A_{k+1}(n)`.
    pub fn stabilization(&self, n: usize, max: usize) -> Option<usize> {
        (0..=max).find(|&k| self.stage(k, n) == self.stage(k + 1, n))
    }

    /// The whole carrier at scope `n`, if the chain stabilizes within `max`
    /// stages.
    pub fn carrier_exact(&self, n: usize, max: usize) -> Result<Arc<Vec<Value>>, OmegaError> {
        self.stabilization(n, max)
            .map(|k| self.stage(k, n))
            .ok_or(OmegaError::NotStabilized { max })
    }

    /// Cumulative stages and `str ∘ str_inv = id`, `str_inv ∘ str = id` at
    /// every level up to `levels`.
    pub fn check_iso(&self, levels: usize, scopes: &[usize]) -> LawReport {
        let mut r = LawReport::new();
        for &n in scopes {
            for d in 0..levels {
                let here = self.stage(d, n);
                let next = self.stage(d + 1, n);
                for v in here.iter() {
                    r.check("chain-inclusion", next.contains(v), || format!("{v} at level {d}, scope {n}"));
                }
                let below = |m: usize| self.stage(d, m);
                let f_stage = self.functor.apply(&below, n);
                for u in &f_stage {
                    let back = self.str_inv(&self.str(u));
                    r.check("str-inv-after-str", back.as_ref() == Some(u), || format!("{u}"));
                    r.check("str-into-carrier", next.contains(&self.str(u)), || format!("{u}"));
                }
                for v in next.iter() {
                    let ok = self
                        .str_inv(v)
                        .is_some_and(|u| f_stage.contains(&u) && self.str(&u) == *v);
                    r.check("str-after-str-inv", ok, || format!("{v}"));
                }
            }
        }
        r
    }
}

impl EnumSetObj for InitialAlgebra {
    fn level(&self, d: usize, n: usize) -> Arc<Vec<Value>> {
        self.stage(d, n)
    }
}

pub type StructureMap = Arc<dyn Fn(usize, &Value) -> Value + Send + Sync>;

/// An `F`-algebra with a finite carrier at each scope.
#[derive(Clone)]
pub struct TargetAlgebra {
    pub name: String,
    pub carrier: Arc<dyn Fn(usize) -> Vec<Value> + Send + Sync>,
    /// `g: F(X)(n) -> X(n)`.
    pub structure: StructureMap,
}

/// The canonical fold `h(str u) = g(F(h)(u))`.
pub fn fold(alg: &InitialAlgebra, target: &TargetAlgebra, n: usize, v: &Value) -> Result<Value, OmegaError> {
    let u = alg
        .str_inv(v)
        .ok_or_else(|| OmegaError::NotInCarrier(v.to_string()))?;
    let err = Mutex::new(None);
    let rec = |m: usize, w: &Value| match fold(alg, target, m, w) {
        Ok(x) => x,
        Err(e) => {
            err.lock().expect("fold").get_or_insert(e);
            Value::Unit
        }
    };
    let fu = alg.functor().map(&rec, n, &u);
    if let Some(e) = err.into_inner().expect("fold") {
        return Err(e);
    }
    Ok((target.structure)(n, &fu))
}

/// Elements of `A_d(n)` for the given scopes together with all their
/// sub-elements, ordered so that sub-elements come first.
pub(crate) fn closed_elements(alg: &InitialAlgebra, d: usize, scopes: &[usize]) -> Vec<(usize, Value)> {
    let mut by_rank: BTreeMap<usize, Vec<(usize, Value)>> = BTreeMap::new();
    let mut seen = std::collections::HashSet::new();
    let mut todo: Vec<(usize, Value)> = scopes
        .iter()
        .flat_map(|&n| alg.stage(d, n).iter().map(move |v| (n, v.clone())).collect::<Vec<_>>())
        .collect();
    while let Some((n, v)) = todo.pop() {
        if !seen.insert((n, v.clone())) {
            continue;
        }
        if let Some(u) = v.unroll() {
            let kids = Mutex::new(Vec::new());
            let visit = |m: usize, w: &Value| {
                kids.lock().expect("kids").push((m, w.clone()));
                w.clone()
            };
            alg.functor().map(&visit, n, u);
            todo.extend(kids.into_inner().expect("kids"));
        }
        let r = alg.rank(n, &v).unwrap_or(0);
        by_rank.entry(r).or_default().push((n, v));
    }
    by_rank
        .into_values()
        .flat_map(|mut vs| {
            vs.sort();
            vs
        })
        .collect()
}

/// Depth-first search over all assignments `elements[i] ↦ candidates(i)`,
/// pruning a branch as soon as `holds(i, partial)` fails for the newly
/// assigned position. Stops after two solutions or `bound` nodes.
pub(crate) fn search(
    len: usize,
    candidates: &dyn Fn(usize) -> Vec<Value>,
    holds: &dyn Fn(usize, &[Value]) -> bool,
    bound: usize,
) -> Result<(usize, Option<Vec<Value>>, usize), OmegaError> {
    let cands: Vec<Vec<Value>> = (0..len).map(candidates).collect();
    let mut choice = vec![0usize; len];
    let mut assigned: Vec<Value> = Vec::with_capacity(len);
    let mut solutions = 0;
    let mut first = None;
    let mut nodes = 0;
    let mut i = 0;
    if len == 0 {
        return Ok((1, Some(Vec::new()), 0));
    }
    loop {
        if choice[i] < cands[i].len() {
            nodes += 1;
            if nodes > bound {
                return Err(OmegaError::EnumerationBound(bound));
            }
            assigned.truncate(i);
            assigned.push(cands[i][choice[i]].clone());
            choice[i] += 1;
            if !holds(i, &assigned) {
                continue;
            }
            if i + 1 == len {
                solutions += 1;
                if first.is_none() {
                    first = Some(assigned.clone());
                }
                if solutions == 2 {
                    break;
                }
                continue;
            }
            i += 1;
            choice[i] = 0;
        } else {
            if i == 0 {
                break;
            }
            i -= 1;
        }
    }
    Ok((solutions, first, nodes))
}

/// For each target, exhaustively searches the maps `h: A_d -> X` (on the
/// given scopes, closed under sub-elements) satisfying `h ∘ str = g ∘ F(h)`,
/// and checks that exactly one exists and that it is the canonical fold.
pub fn check_initiality(
    alg: &InitialAlgebra,
    targets: &[TargetAlgebra],
    d: usize,
    scopes: &[usize],
    bound: usize,
) -> Result<LawReport, OmegaError> {
    let elements = closed_elements(alg, d, scopes);
    let index: HashMap<(usize, Value), usize> = elements
        .iter()
        .enumerate()
        .map(|(i, e)| (e.clone(), i))
        .collect();
    let mut r = LawReport::new();
    for t in targets {
        let candidates = |i: usize| (t.carrier)(elements[i].0);
        let holds = |i: usize, h: &[Value]| {
            let (n, v) = &elements[i];
            let Some(u) = v.unroll() else { return false };
            let lookup = |m: usize, w: &Value| h[index[&(m, w.clone())]].clone();
            (t.structure)(*n, &alg.functor().map(&lookup, *n, u)) == h[i]
        };
        let (count, first, _) = search(elements.len(), &candidates, &holds, bound)?;
        r.check("initiality-existence", count >= 1, || t.name.clone());
        r.check("initiality-uniqueness", count <= 1, || t.name.clone());
        if let Some(h) = first {
            for (i, (n, v)) in elements.iter().enumerate() {
                let canon = fold(alg, t, *n, v)?;
                r.check("initiality-fold", canon == h[i], || format!("{} at {v}", t.name));
            }
        }
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::omega::{Factor, PolyFunctor};

    fn lam() -> InitialAlgebra {
        adamek_initial_algebra(Arc::new(PolyFunctor::new(vec![
            vec![Factor::Scope],
            vec![Factor::Rec(0), Factor::Rec(0)],
            vec![Factor::Rec(1)],
        ])))
    }

    #[test]
    fn lam_stage_two_at_scope_zero_is_the_identity_function() {
        let a = lam();
        let s = a.stage(2, 0);
        let var0 = Value::roll(Value::inj(0, Value::Tuple(vec![Value::Nat(0)])));
        let id = Value::roll(Value::inj(2, Value::Tuple(vec![var0])));
        assert_eq!(*s, vec![id]);
    }

    #[test]
    fn lam_stage_sizes() {
        // |A_1(n)| = n, |A_2(n)| = n + n² + (n + 1), |A_3(n)| = n + |A_2(n)|² + |A_2(n+1)|.
        let a = lam();
        let a2 = |n: usize| n + n * n + n + 1;
        for n in 0..3 {
            assert_eq!(a.stage(1, n).len(), n);
            assert_eq!(a.stage(2, n).len(), a2(n));
            assert_eq!(a.stage(3, n).len(), n + a2(n) * a2(n) + a2(n + 1));
        }
        assert!(a.check_iso(3, &[0, 1, 2]).passed());
    }

    #[test]
    fn constant_functor_stabilizes_at_one() {
        let c: Vec<Value> = (0..3).map(Value::Nat).collect();
        let a = adamek_initial_algebra(Arc::new(PolyFunctor::constant(c.clone())));
        assert_eq!(a.stabilization(0, 5), Some(1));
        let carrier = a.carrier_exact(0, 5).unwrap();
        let unrolled: Vec<Value> = carrier
            .iter()
            .map(|v| match a.str_inv(v).unwrap() {
                Value::Inj(0, t) => match *t {
                    Value::Tuple(mut xs) => xs.remove(0),
                    _ => unreachable!(),
                },
                _ => unreachable!(),
            })
            .collect();
        assert_eq!(unrolled, c);
    }

    #[test]
    fn naturals_never_stabilize() {
        let a = adamek_initial_algebra(Arc::new(PolyFunctor::naturals()));
        assert_eq!(a.carrier_exact(0, 10), Err(OmegaError::NotStabilized { max: 10 }));
    }

    #[test]
    fn rank_matches_stage() {
        let a = lam();
        for n in 0..3 {
            for d in 1..=3 {
                for v in a.stage(d, n).iter() {
                    let r = a.rank(n, v).unwrap();
                    assert!(r <= d);
                    assert!(r == 1 || !a.stage(r - 1, n).contains(v));
                }
            }
        }
        assert_eq!(a.rank(0, &Value::Unit), None);
    }

    #[test]
    fn concurrent_readers_agree() {
        let a = Arc::new(lam());
        let handles: Vec<_> = (0..8)
            .map(|i| {
                let a = a.clone();
                std::thread::spawn(move || a.stage(3, i % 3).len())
            })
            .collect();
        let sizes: Vec<usize> = handles.into_iter().map(|h| h.join().unwrap()).collect();
        assert_eq!(sizes, vec![5, 26, 99, 5, 26, 99, 5, 26]);
    }

    #[test]
    fn initiality_against_itself_and_a_depth_counter() {
        let a = Arc::new(lam());
        let d = 3;
        let itself = {
            let a = a.clone();
            TargetAlgebra {
                name: "initial".into(),
                carrier: Arc::new(move |n| a.stage(d, n).to_vec()),
                structure: Arc::new(|_, u| Value::roll(u.clone())),
            }
        };
        let depth = TargetAlgebra {
            name: "depth".into(),
            carrier: Arc::new(|_| (0..=3).map(Value::Nat).collect()),
            structure: Arc::new(|_, u| {
                let Value::Inj(i, body) = u else { unreachable!() };
                let Value::Tuple(parts) = &**body else { unreachable!() };
                if *i == 0 {
                    return Value::Nat(1);
                }
                let m = parts.iter().filter_map(Value::as_nat).max().unwrap_or(0);
                Value::Nat((m + 1).min(3))
            }),
        };
        let r = check_initiality(&a, &[itself.clone(), depth.clone()], d, &[0, 1], 1_000_000).unwrap();
        assert!(r.passed(), "{r}");
        for n in 0..2 {
            for v in a.stage(d, n).iter() {
                assert_eq!(fold(&a, &itself, n, v).unwrap(), *v);
                assert_eq!(fold(&a, &depth, n, v).unwrap(), Value::Nat(a.rank(n, v).unwrap()));
            }
        }
    }

    #[test]
    fn target_without_room_has_no_morphism() {
        let a = lam();
        let t = TargetAlgebra {
            name: "broken".into(),
            carrier: Arc::new(|_| vec![Value::Nat(0)]),
            structure: Arc::new(|_, _| Value::Nat(1)),
        };
        let r = check_initiality(&a, &[t], 2, &[0], 10_000).unwrap();
        assert!(r.has_law("initiality-existence"));
    }

    #[test]
    fn search_counts_two_free_solutions() {
        let (count, _, _) = search(2, &|_| vec![Value::Bool(false), Value::Bool(true)], &|_, _| true, 100).unwrap();
        assert_eq!(count, 2);
        assert_eq!(
            search(20, &|_| vec![Value::Unit, Value::Bool(true)], &|_, _| true, 5),
            Err(OmegaError::EnumerationBound(5))
        );
    }
}
