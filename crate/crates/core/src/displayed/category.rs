use std::collections::BTreeMap;
use std::sync::Arc;

use super::{DispMor, DispObj, DisplayedError};
use crate::fincat::{CategoryTables, FinCategory, FinFunctor, MorphismData, Mor, Obj};
use crate::report::LawReport;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DispObjData {
    pub id: String,
    pub over: Obj,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DispMorData {
    pub id: String,
    pub over: Mor,
    pub src: DispObj,
    pub tgt: DispObj,
}

/// A displayed category: objects and morphisms each lie over exactly one
/// base object or morphism, and composition is keyed `(after, first)` like
/// in the base. Nothing is transported: "lies over" is index equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DisplayedCategory {
    pub base: Arc<FinCategory>,
    pub objects: Vec<DispObjData>,
    pub morphisms: Vec<DispMorData>,
    pub identity: Vec<Option<DispMor>>,
    pub comp: BTreeMap<(DispMor, DispMor), DispMor>,
}

impl DisplayedCategory {
    /// Validates that every reference resolves and ids are unique.
    pub fn new(
        base: Arc<FinCategory>,
        objects: Vec<DispObjData>,
        morphisms: Vec<DispMorData>,
        identity: Vec<Option<DispMor>>,
        comp: BTreeMap<(DispMor, DispMor), DispMor>,
    ) -> Result<Self, DisplayedError> {
        let mut seen = std::collections::HashSet::new();
        for o in &objects {
            if o.over.0 >= base.object_count() {
                return Err(DisplayedError::Dangling {
                    kind: "base object",
                    id: format!("under {}", o.id),
                });
            }
            if !seen.insert(o.id.as_str()) {
                return Err(DisplayedError::Duplicate {
                    kind: "object",
                    id: o.id.clone(),
                });
            }
        }
        let mut seen = std::collections::HashSet::new();
        for m in &morphisms {
            if m.over.0 >= base.morphism_count() {
                return Err(DisplayedError::Dangling {
                    kind: "base morphism",
                    id: format!("under {}", m.id),
                });
            }
            if m.src.0 >= objects.len() || m.tgt.0 >= objects.len() {
                return Err(DisplayedError::Dangling {
                    kind: "displayed object",
                    id: format!("endpoint of {}", m.id),
                });
            }
            if !seen.insert(m.id.as_str()) {
                return Err(DisplayedError::Duplicate {
                    kind: "morphism",
                    id: m.id.clone(),
                });
            }
        }
        if identity.len() != objects.len() {
            return Err(DisplayedError::Shape("displayed identity table".into()));
        }
        let ok = |m: DispMor| m.0 < morphisms.len();
        if identity.iter().flatten().any(|&m| !ok(m)) || comp.iter().any(|(&(g, f), &r)| !ok(g) || !ok(f) || !ok(r)) {
            return Err(DisplayedError::Dangling {
                kind: "displayed morphism",
                id: "identity or composition entry".into(),
            });
        }
        Ok(Self {
            base,
            objects,
            morphisms,
            identity,
            comp,
        })
    }

    pub fn builder(base: Arc<FinCategory>) -> DisplayedBuilder {
        DisplayedBuilder {
            base,
            objects: Vec::new(),
            morphisms: Vec::new(),
            comps: Vec::new(),
        }
    }

    /// One displayed object `pt_x` over each `x` and one displayed morphism
    /// `pt_f` over each `f`, with the base's identities and composition.
    pub fn trivial(base: Arc<FinCategory>) -> Self {
        let objects = base
            .objects()
            .map(|x| DispObjData {
                id: format!("pt_{}", base.obj_name(x)),
                over: x,
            })
            .collect();
        let morphisms = base
            .morphisms()
            .map(|f| DispMorData {
                id: format!("pt_{}", base.mor_name(f)),
                over: f,
                src: DispObj(base.src(f).0),
                tgt: DispObj(base.tgt(f).0),
            })
            .collect();
        let identity = base.objects().map(|x| base.identity(x).map(|m| DispMor(m.0))).collect();
        let comp = base
            .composition_table()
            .iter()
            .map(|(&(g, f), &r)| ((DispMor(g.0), DispMor(f.0)), DispMor(r.0)))
            .collect();
        Self {
            base,
            objects,
            morphisms,
            identity,
            comp,
        }
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn morphism_count(&self) -> usize {
        self.morphisms.len()
    }

    pub fn over_obj(&self, xx: DispObj) -> Obj {
        self.objects[xx.0].over
    }

    pub fn over_mor(&self, ff: DispMor) -> Mor {
        self.morphisms[ff.0].over
    }

    pub fn src(&self, ff: DispMor) -> DispObj {
        self.morphisms[ff.0].src
    }

    pub fn tgt(&self, ff: DispMor) -> DispObj {
        self.morphisms[ff.0].tgt
    }

    pub fn obj(&self, id: &str) -> Option<DispObj> {
        self.objects.iter().position(|o| o.id == id).map(DispObj)
    }

    pub fn mor(&self, id: &str) -> Option<DispMor> {
        self.morphisms.iter().position(|m| m.id == id).map(DispMor)
    }

    pub fn identity(&self, xx: DispObj) -> Option<DispMor> {
        self.identity[xx.0]
    }

    pub fn compose(&self, gg: DispMor, ff: DispMor) -> Option<DispMor> {
        self.comp.get(&(gg, ff)).copied()
    }

    /// Displayed objects over `x`, in table order.
    pub fn fiber(&self, x: Obj) -> Vec<DispObj> {
        (0..self.objects.len())
            .filter(|&i| self.objects[i].over == x)
            .map(DispObj)
            .collect()
    }

    /// Displayed morphisms `xx -> yy` over `f`, in table order.
    pub fn disp_hom(&self, f: Mor, xx: DispObj, yy: DispObj) -> Vec<DispMor> {
        (0..self.morphisms.len())
            .map(DispMor)
            .filter(|&m| {
                let d = &self.morphisms[m.0];
                d.over == f && d.src == xx && d.tgt == yy
            })
            .collect()
    }

    pub fn tables(&self) -> DisplayedTables<'_> {
        DisplayedTables(self)
    }
}

/// Name-based construction. Each displayed object `p` gets an identity
/// `d<p>` over the base identity; unit compositions are filled in unless
/// given explicitly.
#[derive(Debug, Clone)]
pub struct DisplayedBuilder {
    base: Arc<FinCategory>,
    objects: Vec<(String, String)>,
    morphisms: Vec<(String, String, String, String)>,
    comps: Vec<(String, String, String)>,
}

impl DisplayedBuilder {
    pub fn object(mut self, id: &str, over: &str) -> Self {
        self.objects.push((id.into(), over.into()));
        self
    }

    pub fn morphism(mut self, id: &str, over: &str, src: &str, tgt: &str) -> Self {
        self.morphisms.push((id.into(), over.into(), src.into(), tgt.into()));
        self
    }

    pub fn compose(mut self, after: &str, first: &str, result: &str) -> Self {
        self.comps.push((after.into(), first.into(), result.into()));
        self
    }

    pub fn build(self) -> Result<DisplayedCategory, DisplayedError> {
        let base = self.base;
        let dangling = |kind, id: &str| DisplayedError::Dangling {
            kind,
            id: id.to_string(),
        };
        let mut objects = Vec::new();
        for (id, over) in &self.objects {
            let over = base.obj(over).ok_or_else(|| dangling("base object", over))?;
            objects.push(DispObjData { id: id.clone(), over });
        }
        let dobj = |name: &str| {
            objects
                .iter()
                .position(|o: &DispObjData| o.id == name)
                .map(DispObj)
                .ok_or_else(|| dangling("displayed object", name))
        };
        let mut morphisms = Vec::new();
        let mut identity = Vec::new();
        for (i, o) in objects.iter().enumerate() {
            let over = base
                .identity(o.over)
                .ok_or_else(|| dangling("base identity", base.obj_name(o.over)))?;
            identity.push(Some(DispMor(morphisms.len())));
            morphisms.push(DispMorData {
                id: format!("d{}", o.id),
                over,
                src: DispObj(i),
                tgt: DispObj(i),
            });
        }
        for (id, over, s, t) in &self.morphisms {
            morphisms.push(DispMorData {
                id: id.clone(),
                over: base.mor(over).ok_or_else(|| dangling("base morphism", over))?,
                src: dobj(s)?,
                tgt: dobj(t)?,
            });
        }
        let dmor = |name: &str| {
            morphisms
                .iter()
                .position(|m: &DispMorData| m.id == name)
                .map(DispMor)
                .ok_or_else(|| dangling("displayed morphism", name))
        };
        let mut comp = BTreeMap::new();
        for (g, f, r) in &self.comps {
            comp.insert((dmor(g)?, dmor(f)?), dmor(r)?);
        }
        for (i, m) in morphisms.iter().enumerate() {
            let (ids, idt) = (identity[m.src.0].unwrap(), identity[m.tgt.0].unwrap());
            comp.entry((idt, DispMor(i))).or_insert(DispMor(i));
            comp.entry((DispMor(i), ids)).or_insert(DispMor(i));
        }
        DisplayedCategory::new(base, objects, morphisms, identity, comp)
    }
}

/// Displayed data seen as bare category tables, for the shared checkers.
#[derive(Debug, Clone, Copy)]
pub struct DisplayedTables<'a>(pub &'a DisplayedCategory);

impl CategoryTables for DisplayedTables<'_> {
    fn object_count(&self) -> usize {
        self.0.objects.len()
    }
    fn morphism_count(&self) -> usize {
        self.0.morphisms.len()
    }
    fn source(&self, m: usize) -> usize {
        self.0.morphisms[m].src.0
    }
    fn target(&self, m: usize) -> usize {
        self.0.morphisms[m].tgt.0
    }
    fn identity_of(&self, x: usize) -> Option<usize> {
        self.0.identity[x].map(|m| m.0)
    }
    fn composite(&self, g: usize, f: usize) -> Option<usize> {
        self.0.comp.get(&(DispMor(g), DispMor(f))).map(|m| m.0)
    }
    fn tabulated_pairs(&self) -> Vec<(usize, usize)> {
        self.0.comp.keys().map(|&(g, f)| (g.0, f.0)).collect()
    }
    fn object_label(&self, x: usize) -> String {
        self.0.objects[x].id.clone()
    }
    fn morphism_label(&self, m: usize) -> String {
        self.0.morphisms[m].id.clone()
    }
    /// `(g, f, xx, yy, zz)`: the base pair and the displayed objects.
    fn pair_label(&self, g: usize, f: usize) -> String {
        let d = self.0;
        let (gg, ff) = (&d.morphisms[g], &d.morphisms[f]);
        format!(
            "({}, {}, {}, {}, {})",
            d.base.mor_name(gg.over),
            d.base.mor_name(ff.over),
            d.objects[ff.src.0].id,
            d.objects[ff.tgt.0].id,
            d.objects[gg.tgt.0].id
        )
    }
}

/// Lying-over conditions plus the category laws of the displayed tables,
/// the latter under the prefix `displayed`.
pub fn check_displayed_category(d: &DisplayedCategory) -> LawReport {
    let b = &*d.base;
    let mut r = LawReport::new();
    for (i, o) in d.objects.iter().enumerate() {
        if let Some(ii) = d.identity[i] {
            let over = d.morphisms[ii.0].over;
            r.check("over-identity", b.identity(o.over) == Some(over), || {
                format!("{} over {}", d.morphisms[ii.0].id, b.mor_name(over))
            });
        }
    }
    for m in &d.morphisms {
        let typed = d.objects[m.src.0].over == b.src(m.over) && d.objects[m.tgt.0].over == b.tgt(m.over);
        r.check("over-typing", typed, || format!("{} over {}", m.id, b.mor_name(m.over)));
    }
    for (&(gg, ff), &hh) in &d.comp {
        let expected = b.compose(d.over_mor(gg), d.over_mor(ff));
        r.check("over-composition", expected == Some(d.over_mor(hh)), || {
            d.tables().pair_label(gg.0, ff.0)
        });
    }
    r.merge(crate::fincat::check_category_tables(&d.tables()).prefixed("displayed"));
    r
}

/// A total category with its projection to the base. Object `i` of
/// `category` is displayed object `i`, and likewise for morphisms.
#[derive(Debug, Clone)]
pub struct TotalCategory {
    pub category: Arc<FinCategory>,
    pub projection: FinFunctor,
}

/// Objects `(x,xx)` and morphisms `(f,ff)`; identities and composition are
/// the displayed ones. Unlawful input is totalized as is.
pub fn total_category(d: &DisplayedCategory) -> TotalCategory {
    let b = &*d.base;
    let objects = d
        .objects
        .iter()
        .map(|o| format!("({},{})", b.obj_name(o.over), o.id))
        .collect();
    let morphisms = d
        .morphisms
        .iter()
        .map(|m| MorphismData {
            id: format!("({},{})", b.mor_name(m.over), m.id),
            src: Obj(m.src.0),
            tgt: Obj(m.tgt.0),
        })
        .collect();
    let identity = d.identity.iter().map(|m| m.map(|m| Mor(m.0))).collect();
    let comp = d
        .comp
        .iter()
        .map(|(&(g, f), &r)| ((Mor(g.0), Mor(f.0)), Mor(r.0)))
        .collect();
    let category = Arc::new(
        FinCategory::from_parts(objects, morphisms, identity, comp)
            .expect("displayed tables were validated on construction"),
    );
    let projection = FinFunctor {
        source: category.clone(),
        target: d.base.clone(),
        on_obj: d.objects.iter().map(|o| o.over).collect(),
        on_mor: d.morphisms.iter().map(|m| m.over).collect(),
    };
    TotalCategory { category, projection }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::fincat::{check_category_laws, check_functor};

    /// Over the walking arrow: `p` over `a`, `q1` and `q2` over `b`, and one
    /// displayed morphism `k: p -> q1` over `f`.
    pub(crate) fn three_object() -> DisplayedCategory {
        DisplayedCategory::builder(Arc::new(FinCategory::walking_arrow()))
            .object("p", "a")
            .object("q1", "b")
            .object("q2", "b")
            .morphism("k", "f", "p", "q1")
            .build()
            .unwrap()
    }

    #[test]
    fn trivial_total_is_the_base() {
        let base = Arc::new(FinCategory::chain(3));
        let d = DisplayedCategory::trivial(base.clone());
        assert!(check_displayed_category(&d).passed());
        let t = total_category(&d);
        assert_eq!(t.category.object_count(), base.object_count());
        assert_eq!(t.category.morphism_count(), base.morphism_count());
        assert!(check_functor(&t.projection).unwrap().passed());
        assert_eq!(t.projection.on_obj, base.objects().collect::<Vec<_>>());
        assert_eq!(t.projection.on_mor, base.morphisms().collect::<Vec<_>>());
    }

    #[test]
    fn three_object_example_counts() {
        let d = three_object();
        let r = check_displayed_category(&d);
        assert!(r.passed(), "{r}");
        let t = total_category(&d);
        assert_eq!(t.category.object_count(), 3);
        assert_eq!(t.category.morphism_count(), 4);
        assert!(check_category_laws(&t.category).passed());
        assert!(check_functor(&t.projection).unwrap().passed());
        assert_eq!(t.category.object_names()[0], "(a,p)");
        let k = t.category.mor("(f,k)").unwrap();
        assert_eq!(t.projection.mor(k), d.base.mor("f").unwrap());
    }

    #[test]
    fn empty_fiber_is_allowed() {
        let d = DisplayedCategory::builder(Arc::new(FinCategory::walking_arrow()))
            .object("q", "b")
            .build()
            .unwrap();
        assert!(d.fiber(d.base.obj("a").unwrap()).is_empty());
        assert!(check_displayed_category(&d).passed());
        assert!(check_category_laws(&total_category(&d).category).passed());
    }

    #[test]
    fn dropped_composite_names_the_fiber_instance() {
        let mut d = three_object();
        let k = d.mor("k").unwrap();
        let dq1 = d.mor("dq1").unwrap();
        d.comp.remove(&(dq1, k));
        let r = check_displayed_category(&d);
        let v: Vec<_> = r.violations_of("displayed composition-total").collect();
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].witness, "(id_b, f, p, q1, q1)");
        // The same defect surfaces in the total category.
        let t = check_category_laws(&total_category(&d).category);
        assert!(t.has_law("composition-total"));
    }

    #[test]
    fn morphism_over_wrong_base_is_reported() {
        let mut d = three_object();
        let k = d.mor("k").unwrap();
        d.morphisms[k.0].over = d.base.mor("id_a").unwrap();
        let r = check_displayed_category(&d);
        assert!(r.has_law("over-typing"));
    }

    #[test]
    fn dangling_base_reference_is_an_error() {
        let err = DisplayedCategory::builder(Arc::new(FinCategory::walking_arrow()))
            .object("p", "c")
            .build()
            .unwrap_err();
        assert!(matches!(err, DisplayedError::Dangling { .. }));
    }
}
