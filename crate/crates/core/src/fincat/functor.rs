use std::collections::BTreeMap;
use std::sync::Arc;

use super::{FinCategory, FincatError, Mor, Obj};
use crate::report::LawReport;

/// A functor between finite categories as a pair of mapping tables.
#[derive(Debug, Clone)]
pub struct FinFunctor {
    pub source: Arc<FinCategory>,
    pub target: Arc<FinCategory>,
    pub on_obj: Vec<Obj>,
    pub on_mor: Vec<Mor>,
}

/// Same category, either by pointer or by table equality.
pub(crate) fn same_category(a: &Arc<FinCategory>, b: &Arc<FinCategory>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl PartialEq for FinFunctor {
    fn eq(&self, other: &Self) -> bool {
        self.on_obj == other.on_obj
            && self.on_mor == other.on_mor
            && same_category(&self.source, &other.source)
            && same_category(&self.target, &other.target)
    }
}

impl Eq for FinFunctor {}

impl FinFunctor {
    /// Builds a functor from name maps; every object and morphism of the
    /// source needs an image.
    pub fn from_maps(
        source: Arc<FinCategory>,
        target: Arc<FinCategory>,
        obj_map: &BTreeMap<String, String>,
        mor_map: &BTreeMap<String, String>,
    ) -> Result<Self, FincatError> {
        let on_obj = source
            .objects()
            .map(|x| {
                let name = source.obj_name(x);
                let img = obj_map.get(name).ok_or_else(|| FincatError::NotTotal {
                    what: "object",
                    id: name.to_string(),
                })?;
                target.obj(img).ok_or_else(|| FincatError::Dangling {
                    kind: "object",
                    id: img.clone(),
                })
            })
            .collect::<Result<_, _>>()?;
        let on_mor = source
            .morphisms()
            .map(|m| {
                let name = source.mor_name(m);
                let img = mor_map.get(name).ok_or_else(|| FincatError::NotTotal {
                    what: "morphism",
                    id: name.to_string(),
                })?;
                target.mor(img).ok_or_else(|| FincatError::Dangling {
                    kind: "morphism",
                    id: img.clone(),
                })
            })
            .collect::<Result<_, _>>()?;
        Ok(Self {
            source,
            target,
            on_obj,
            on_mor,
        })
    }

    pub fn identity(c: Arc<FinCategory>) -> Self {
        Self {
            on_obj: c.objects().collect(),
            on_mor: c.morphisms().collect(),
            source: c.clone(),
            target: c,
        }
    }

    /// Constant functor at `x`; every morphism goes to `id_x`.
    pub fn constant(source: Arc<FinCategory>, target: Arc<FinCategory>, x: Obj) -> Self {
        let idx = target.id(x);
        Self {
            on_obj: vec![x; source.object_count()],
            on_mor: vec![idx; source.morphism_count()],
            source,
            target,
        }
    }

    pub fn obj(&self, x: Obj) -> Obj {
        self.on_obj[x.0]
    }

    pub fn mor(&self, m: Mor) -> Mor {
        self.on_mor[m.0]
    }

    /// `after ∘ self`.
    pub fn then(&self, after: &FinFunctor) -> Result<FinFunctor, FincatError> {
        if !same_category(&self.target, &after.source) {
            return Err(FincatError::NotComposable);
        }
        Ok(FinFunctor {
            source: self.source.clone(),
            target: after.target.clone(),
            on_obj: self.on_obj.iter().map(|&x| after.obj(x)).collect(),
            on_mor: self.on_mor.iter().map(|&m| after.mor(m)).collect(),
        })
    }

    pub fn is_identity(&self) -> bool {
        same_category(&self.source, &self.target)
            && self.on_obj.iter().enumerate().all(|(i, x)| x.0 == i)
            && self.on_mor.iter().enumerate().all(|(i, m)| m.0 == i)
    }
}

/// Checks typing, identities and composition, exhaustively.
pub fn check_functor(f: &FinFunctor) -> Result<LawReport, FincatError> {
    let (s, t) = (&*f.source, &*f.target);
    if f.on_obj.len() != s.object_count() {
        return Err(FincatError::NotTotal {
            what: "object",
            id: format!("{} of {} objects mapped", f.on_obj.len(), s.object_count()),
        });
    }
    if f.on_mor.len() != s.morphism_count() {
        return Err(FincatError::NotTotal {
            what: "morphism",
            id: format!("{} of {} morphisms mapped", f.on_mor.len(), s.morphism_count()),
        });
    }
    if f.on_obj.iter().any(|x| x.0 >= t.object_count())
        || f.on_mor.iter().any(|m| m.0 >= t.morphism_count())
    {
        return Err(FincatError::Dangling {
            kind: "image",
            id: "functor table".into(),
        });
    }
    let mut r = LawReport::new();
    for m in s.morphisms() {
        let img = f.mor(m);
        r.check(
            "functor-typing",
            t.src(img) == f.obj(s.src(m)) && t.tgt(img) == f.obj(s.tgt(m)),
            || format!("{} -> {}", s.mor_name(m), t.mor_name(img)),
        );
    }
    for x in s.objects() {
        let (Some(i), Some(j)) = (s.identity(x), t.identity(f.obj(x))) else {
            r.fail("functor-identity", format!("no identity at {}", s.obj_name(x)));
            continue;
        };
        r.check("functor-identity", f.mor(i) == j, || {
            format!("{} -> {}", s.mor_name(i), t.mor_name(f.mor(i)))
        });
    }
    for (&(g, h), &gh) in s.composition_table() {
        let img = t.compose(f.mor(g), f.mor(h));
        r.check("functor-composition", img == Some(f.mor(gh)), || {
            format!("({}, {})", s.mor_name(g), s.mor_name(h))
        });
    }
    Ok(r)
}

/// A natural transformation between parallel functors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinNatTrans {
    pub source: FinFunctor,
    pub target: FinFunctor,
    pub components: Vec<Mor>,
}

impl FinNatTrans {
    pub fn from_map(
        source: FinFunctor,
        target: FinFunctor,
        components: &BTreeMap<String, String>,
    ) -> Result<Self, FincatError> {
        let c = source.source.clone();
        let d = source.target.clone();
        let components = c
            .objects()
            .map(|x| {
                let name = c.obj_name(x);
                let m = components
                    .get(name)
                    .ok_or_else(|| FincatError::MissingComponent(name.to_string()))?;
                d.mor(m).ok_or_else(|| FincatError::Dangling {
                    kind: "morphism",
                    id: m.clone(),
                })
            })
            .collect::<Result<_, _>>()?;
        Ok(Self {
            source,
            target,
            components,
        })
    }

    pub fn identity(f: &FinFunctor) -> Self {
        Self {
            components: f.on_obj.iter().map(|&x| f.target.id(x)).collect(),
            source: f.clone(),
            target: f.clone(),
        }
    }

    pub fn component(&self, x: Obj) -> Mor {
        self.components[x.0]
    }
}

/// Checks component typing and every naturality square.
pub fn check_nat_trans(t: &FinNatTrans) -> Result<LawReport, FincatError> {
    let (f, g) = (&t.source, &t.target);
    if !same_category(&f.source, &g.source) || !same_category(&f.target, &g.target) {
        return Err(FincatError::NotParallel);
    }
    let (c, d) = (&*f.source, &*f.target);
    if t.components.len() < c.object_count() {
        let missing = c.obj_name(Obj(t.components.len()));
        return Err(FincatError::MissingComponent(missing.to_string()));
    }
    if t.components.len() > c.object_count() || t.components.iter().any(|m| m.0 >= d.morphism_count()) {
        return Err(FincatError::Document("component table does not match the categories".into()));
    }
    let mut r = LawReport::new();
    for x in c.objects() {
        let a = t.component(x);
        r.check(
            "component-typing",
            d.src(a) == f.obj(x) && d.tgt(a) == g.obj(x),
            || format!("{} at {}", d.mor_name(a), c.obj_name(x)),
        );
    }
    for m in c.morphisms() {
        let (x, y) = (c.src(m), c.tgt(m));
        let lhs = d.compose(g.mor(m), t.component(x));
        let rhs = d.compose(t.component(y), f.mor(m));
        r.check("naturality", lhs.is_some() && lhs == rhs, || {
            format!("square at {}", c.mor_name(m))
        });
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(pairs: &[(&str, &str)]) -> BTreeMap<String, String> {
        pairs
            .iter()
            .map(|(a, b)| (a.to_string(), b.to_string()))
            .collect()
    }

    #[test]
    fn identity_and_constant_functors_pass() {
        let c = Arc::new(FinCategory::walking_arrow());
        let id = FinFunctor::identity(c.clone());
        assert!(check_functor(&id).unwrap().passed());
        let k = FinFunctor::constant(c.clone(), c.clone(), c.obj("b").unwrap());
        assert!(check_functor(&k).unwrap().passed());
    }

    #[test]
    fn misplaced_arrow_names_the_morphism() {
        let c = Arc::new(FinCategory::walking_arrow());
        let f = FinFunctor::from_maps(
            c.clone(),
            c.clone(),
            &names(&[("a", "a"), ("b", "b")]),
            &names(&[("id_a", "id_a"), ("id_b", "id_b"), ("f", "id_a")]),
        )
        .unwrap();
        let r = check_functor(&f).unwrap();
        let v: Vec<_> = r.violations_of("functor-typing").collect();
        assert_eq!(v.len(), 1);
        assert!(v[0].witness.starts_with("f "));
    }

    #[test]
    fn partial_map_is_an_error() {
        let c = Arc::new(FinCategory::walking_arrow());
        let err = FinFunctor::from_maps(
            c.clone(),
            c.clone(),
            &names(&[("a", "a")]),
            &names(&[]),
        )
        .unwrap_err();
        assert!(matches!(err, FincatError::NotTotal { what: "object", .. }));
    }

    #[test]
    fn identity_transformation_is_natural() {
        let c = Arc::new(FinCategory::chain(3));
        let f = FinFunctor::constant(c.clone(), c.clone(), c.obj("1").unwrap());
        assert!(check_nat_trans(&FinNatTrans::identity(&f)).unwrap().passed());
    }

    #[test]
    fn any_typed_choice_is_natural_on_a_poset() {
        // Id => const_2 on the 3-chain: the only typed choice per object.
        let c = Arc::new(FinCategory::chain(3));
        let top = c.obj("2").unwrap();
        let id = FinFunctor::identity(c.clone());
        let k = FinFunctor::constant(c.clone(), c.clone(), top);
        let components = c.objects().map(|x| c.hom(x, top)[0]).collect();
        let t = FinNatTrans {
            source: id,
            target: k,
            components,
        };
        assert!(check_nat_trans(&t).unwrap().passed());
    }

    #[test]
    fn swapped_component_breaks_the_unique_square() {
        // Target: objects x, y, arrows m, sm: x -> y and an involution s on y
        // exchanging them. Source: the walking arrow, whose only
        // non-identity square sits at f.
        let d = Arc::new(
            FinCategory::builder()
                .object("x")
                .object("y")
                .morphism("m", "x", "y")
                .morphism("s", "y", "y")
                .morphism("sm", "x", "y")
                .compose("s", "s", "id_y")
                .compose("s", "m", "sm")
                .compose("s", "sm", "m")
                .build()
                .unwrap(),
        );
        assert!(crate::fincat::check_category_laws(&d).passed());
        let c = Arc::new(FinCategory::walking_arrow());
        let f = FinFunctor::from_maps(
            c.clone(),
            d.clone(),
            &names(&[("a", "x"), ("b", "y")]),
            &names(&[("id_a", "id_x"), ("id_b", "id_y"), ("f", "m")]),
        )
        .unwrap();
        assert!(check_functor(&f).unwrap().passed());
        let lawful =
            FinNatTrans::from_map(f.clone(), f.clone(), &names(&[("a", "id_x"), ("b", "id_y")]))
                .unwrap();
        assert!(check_nat_trans(&lawful).unwrap().passed());

        let swapped =
            FinNatTrans::from_map(f.clone(), f, &names(&[("a", "id_x"), ("b", "s")])).unwrap();
        let r = check_nat_trans(&swapped).unwrap();
        // Independent recount of failing squares.
        let failing: Vec<_> = c
            .morphisms()
            .filter(|&m| {
                let (x, y) = (c.src(m), c.tgt(m));
                let g = swapped.target.mor(m);
                let h = swapped.source.mor(m);
                d.compose(g, swapped.component(x)) != d.compose(swapped.component(y), h)
            })
            .map(|m| format!("square at {}", c.mor_name(m)))
            .collect();
        let reported: Vec<_> = r
            .violations_of("naturality")
            .map(|v| v.witness.clone())
            .collect();
        assert_eq!(reported, failing);
        assert_eq!(reported, vec!["square at f"]);
    }

    #[test]
    fn missing_component_is_an_error() {
        let c = Arc::new(FinCategory::walking_arrow());
        let id = FinFunctor::identity(c);
        let err = FinNatTrans::from_map(id.clone(), id, &names(&[("a", "id_a")])).unwrap_err();
        assert_eq!(err, FincatError::MissingComponent("b".into()));
    }
}
