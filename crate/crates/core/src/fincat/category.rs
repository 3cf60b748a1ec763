use std::collections::{BTreeMap, HashMap};

use super::{FincatError, Mor, Obj};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MorphismData {
    pub id: String,
    pub src: Obj,
    pub tgt: Obj,
}

/// A finite category as explicit tables.
///
/// Tables are only required to resolve; identity and composition may be
/// partial or wrong, which [`super::check_category_laws`] reports. Composition
/// is keyed `(after, first)`.
#[derive(Debug, Clone)]
pub struct FinCategory {
    objects: Vec<String>,
    morphisms: Vec<MorphismData>,
    identity: Vec<Option<Mor>>,
    comp: BTreeMap<(Mor, Mor), Mor>,
    obj_index: HashMap<String, Obj>,
    mor_index: HashMap<String, Mor>,
    homs: HashMap<(Obj, Obj), Vec<Mor>>,
}

impl PartialEq for FinCategory {
    fn eq(&self, other: &Self) -> bool {
        self.objects == other.objects
            && self.morphisms == other.morphisms
            && self.identity == other.identity
            && self.comp == other.comp
    }
}

impl Eq for FinCategory {}

impl FinCategory {
    pub fn from_parts(
        objects: Vec<String>,
        morphisms: Vec<MorphismData>,
        identity: Vec<Option<Mor>>,
        comp: BTreeMap<(Mor, Mor), Mor>,
    ) -> Result<Self, FincatError> {
        let mut obj_index = HashMap::with_capacity(objects.len());
        for (i, o) in objects.iter().enumerate() {
            if obj_index.insert(o.clone(), Obj(i)).is_some() {
                return Err(FincatError::Duplicate {
                    kind: "object",
                    id: o.clone(),
                });
            }
        }
        let mut mor_index = HashMap::with_capacity(morphisms.len());
        let mut homs: HashMap<(Obj, Obj), Vec<Mor>> = HashMap::new();
        for (i, m) in morphisms.iter().enumerate() {
            if m.src.0 >= objects.len() || m.tgt.0 >= objects.len() {
                return Err(FincatError::Dangling {
                    kind: "object",
                    id: format!("endpoint of {}", m.id),
                });
            }
            if mor_index.insert(m.id.clone(), Mor(i)).is_some() {
                return Err(FincatError::Duplicate {
                    kind: "morphism",
                    id: m.id.clone(),
                });
            }
            homs.entry((m.src, m.tgt)).or_default().push(Mor(i));
        }
        if identity.len() != objects.len() {
            return Err(FincatError::Document(
                "identity table length differs from object count".into(),
            ));
        }
        let in_range = |m: Mor| m.0 < morphisms.len();
        if identity.iter().flatten().any(|&m| !in_range(m)) {
            return Err(FincatError::Dangling {
                kind: "morphism",
                id: "identity entry".into(),
            });
        }
        if comp
            .iter()
            .any(|(&(g, f), &r)| !in_range(g) || !in_range(f) || !in_range(r))
        {
            return Err(FincatError::Dangling {
                kind: "morphism",
                id: "composition entry".into(),
            });
        }
        Ok(Self {
            objects,
            morphisms,
            identity,
            comp,
            obj_index,
            mor_index,
            homs,
        })
    }

    pub fn builder() -> CategoryBuilder {
        CategoryBuilder::default()
    }

    /// One object `*` with its identity.
    pub fn terminal() -> Self {
        Self::builder().object("*").build().expect("terminal table")
    }

    /// Objects `a`, `b` and a single non-identity arrow `f: a -> b`.
    pub fn walking_arrow() -> Self {
        Self::builder()
            .object("a")
            .object("b")
            .morphism("f", "a", "b")
            .build()
            .expect("walking arrow table")
    }

    /// The finite poset `0 < 1 < ... < n-1` viewed as a category.
    pub fn chain(n: usize) -> Self {
        let names: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        Self::poset(&names, |i, j| i <= j)
    }

    /// A finite preorder as a thin category. `leq(i, j)` must be reflexive
    /// and transitive; the arrow `i -> j` is named `i<=j`.
    pub fn poset(elements: &[String], leq: impl Fn(usize, usize) -> bool) -> Self {
        let mut b = Self::builder();
        for e in elements {
            b = b.object(e);
        }
        for i in 0..elements.len() {
            for j in 0..elements.len() {
                if i != j && leq(i, j) {
                    b = b.morphism(
                        &format!("{}<={}", elements[i], elements[j]),
                        &elements[i],
                        &elements[j],
                    );
                }
            }
        }
        // Thin: every composable pair has exactly one candidate.
        let mut c = b.build().expect("poset table");
        let mut comp = BTreeMap::new();
        for f in c.morphisms() {
            for g in c.morphisms() {
                if c.tgt(f) == c.src(g) {
                    let r = c.hom(c.src(f), c.tgt(g))[0];
                    comp.insert((g, f), r);
                }
            }
        }
        c.comp = comp;
        c
    }

    /// The indiscrete category: exactly one arrow between any two objects.
    pub fn codiscrete(elements: &[String]) -> Self {
        Self::poset(elements, |_, _| true)
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn morphism_count(&self) -> usize {
        self.morphisms.len()
    }

    pub fn objects(&self) -> impl Iterator<Item = Obj> + '_ {
        (0..self.objects.len()).map(Obj)
    }

    pub fn morphisms(&self) -> impl Iterator<Item = Mor> + '_ {
        (0..self.morphisms.len()).map(Mor)
    }

    pub fn obj(&self, id: &str) -> Option<Obj> {
        self.obj_index.get(id).copied()
    }

    pub fn mor(&self, id: &str) -> Option<Mor> {
        self.mor_index.get(id).copied()
    }

    pub fn obj_name(&self, x: Obj) -> &str {
        &self.objects[x.0]
    }

    pub fn mor_name(&self, m: Mor) -> &str {
        &self.morphisms[m.0].id
    }

    pub fn src(&self, m: Mor) -> Obj {
        self.morphisms[m.0].src
    }

    pub fn tgt(&self, m: Mor) -> Obj {
        self.morphisms[m.0].tgt
    }

    pub fn morphism_data(&self) -> &[MorphismData] {
        &self.morphisms
    }

    pub fn object_names(&self) -> &[String] {
        &self.objects
    }

    pub fn identity(&self, x: Obj) -> Option<Mor> {
        self.identity[x.0]
    }

    /// Identity of a lawful category. Panics if the table has no entry.
    pub fn id(&self, x: Obj) -> Mor {
        self.identity[x.0]
            .unwrap_or_else(|| panic!("no identity for object {}", self.objects[x.0]))
    }

    /// `g` after `f`, if tabulated.
    pub fn compose(&self, g: Mor, f: Mor) -> Option<Mor> {
        self.comp.get(&(g, f)).copied()
    }

    /// Composes a path given in application order: `compose_path(&[f, g, h])`
    /// is `h ∘ g ∘ f`.
    pub fn compose_path(&self, path: &[Mor]) -> Option<Mor> {
        let (first, rest) = path.split_first()?;
        rest.iter().try_fold(*first, |acc, &m| self.compose(m, acc))
    }

    pub fn composition_table(&self) -> &BTreeMap<(Mor, Mor), Mor> {
        &self.comp
    }

    pub fn hom(&self, x: Obj, y: Obj) -> &[Mor] {
        self.homs.get(&(x, y)).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn is_iso(&self, m: Mor) -> bool {
        self.inverse(m).is_some()
    }

    pub fn inverse(&self, m: Mor) -> Option<Mor> {
        let (x, y) = (self.src(m), self.tgt(m));
        let (idx, idy) = (self.identity(x)?, self.identity(y)?);
        self.hom(y, x).iter().copied().find(|&n| {
            self.compose(n, m) == Some(idx) && self.compose(m, n) == Some(idy)
        })
    }
}

/// Name-based construction. Each object gets an identity `id_<name>`;
/// compositions with identities are filled in by [`CategoryBuilder::build`]
/// unless an explicit entry for the pair was given.
#[derive(Debug, Default, Clone)]
pub struct CategoryBuilder {
    objects: Vec<String>,
    morphisms: Vec<(String, String, String)>,
    comps: Vec<(String, String, String)>,
}

impl CategoryBuilder {
    pub fn object(mut self, name: &str) -> Self {
        self.objects.push(name.to_string());
        self
    }

    pub fn morphism(mut self, id: &str, src: &str, tgt: &str) -> Self {
        self.morphisms
            .push((id.to_string(), src.to_string(), tgt.to_string()));
        self
    }

    pub fn compose(mut self, after: &str, first: &str, result: &str) -> Self {
        self.comps
            .push((after.to_string(), first.to_string(), result.to_string()));
        self
    }

    pub fn build(self) -> Result<FinCategory, FincatError> {
        let mut morphisms = Vec::new();
        let mut identity = Vec::new();
        let lookup = |objs: &[String], name: &str| {
            objs.iter()
                .position(|o| o == name)
                .map(Obj)
                .ok_or_else(|| FincatError::Dangling {
                    kind: "object",
                    id: name.to_string(),
                })
        };
        for (i, o) in self.objects.iter().enumerate() {
            identity.push(Some(Mor(morphisms.len())));
            morphisms.push(MorphismData {
                id: format!("id_{o}"),
                src: Obj(i),
                tgt: Obj(i),
            });
        }
        for (id, s, t) in &self.morphisms {
            morphisms.push(MorphismData {
                id: id.clone(),
                src: lookup(&self.objects, s)?,
                tgt: lookup(&self.objects, t)?,
            });
        }
        let mor_of = |name: &str| {
            morphisms
                .iter()
                .position(|m| m.id == name)
                .map(Mor)
                .ok_or_else(|| FincatError::Dangling {
                    kind: "morphism",
                    id: name.to_string(),
                })
        };
        let mut comp = BTreeMap::new();
        for (g, f, r) in &self.comps {
            comp.insert((mor_of(g)?, mor_of(f)?), mor_of(r)?);
        }
        for (i, m) in morphisms.iter().enumerate() {
            let (ids, idt) = (identity[m.src.0].unwrap(), identity[m.tgt.0].unwrap());
            comp.entry((idt, Mor(i))).or_insert(Mor(i));
            comp.entry((Mor(i), ids)).or_insert(Mor(i));
        }
        FinCategory::from_parts(self.objects, morphisms, identity, comp)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn walking_arrow_tables() {
        let c = FinCategory::walking_arrow();
        assert_eq!(c.object_count(), 2);
        assert_eq!(c.morphism_count(), 3);
        let (a, b) = (c.obj("a").unwrap(), c.obj("b").unwrap());
        let f = c.mor("f").unwrap();
        assert_eq!(c.compose(c.id(b), f), Some(f));
        assert_eq!(c.compose(f, c.id(a)), Some(f));
        assert_eq!(c.compose(f, f), None);
    }

    #[test]
    fn chain_is_thin() {
        let c = FinCategory::chain(3);
        assert_eq!(c.morphism_count(), 6);
        for x in c.objects() {
            for y in c.objects() {
                assert!(c.hom(x, y).len() <= 1);
            }
        }
    }

    #[test]
    fn duplicate_ids_rejected() {
        let err = FinCategory::builder()
            .object("a")
            .object("a")
            .build()
            .unwrap_err();
        assert!(matches!(err, FincatError::Duplicate { kind: "object", .. }));
    }

    #[test]
    fn codiscrete_inverses() {
        let c = FinCategory::codiscrete(&["P".into(), "Q".into()]);
        let u = c.mor("P<=Q").unwrap();
        assert_eq!(c.inverse(u), c.mor("Q<=P"));
    }
}
