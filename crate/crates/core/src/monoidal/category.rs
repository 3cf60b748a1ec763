use std::sync::Arc;

use super::laws::{check_monoidal_tables, MonoidalOps, WhiskerOps};
use super::{MonoidalError, WhiskeredBifunctor};
use crate::fincat::{FinCategory, Mor, Obj};
use crate::report::LawReport;

/// A monoidal category over a finite base with a whiskered tensor.
///
/// Structural isomorphisms and their inverses are stored tables; the
/// associator is indexed `x·n² + y·n + z`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonoidalCategory {
    pub base: Arc<FinCategory>,
    pub unit: Obj,
    pub tensor: WhiskeredBifunctor,
    pub lunitor: Vec<Mor>,
    pub lunitor_inv: Vec<Mor>,
    pub runitor: Vec<Mor>,
    pub runitor_inv: Vec<Mor>,
    pub associator: Vec<Mor>,
    pub associator_inv: Vec<Mor>,
}

impl MonoidalCategory {
    pub fn tensor(&self, x: Obj, y: Obj) -> Obj {
        self.tensor.tensor(x, y)
    }

    pub fn triple_index(&self, x: Obj, y: Obj, z: Obj) -> usize {
        let n = self.base.object_count();
        (x.0 * n + y.0) * n + z.0
    }

    pub fn associator_at(&self, x: Obj, y: Obj, z: Obj) -> Mor {
        self.associator[self.triple_index(x, y, z)]
    }

    pub fn associator_inv_at(&self, x: Obj, y: Obj, z: Obj) -> Mor {
        self.associator_inv[self.triple_index(x, y, z)]
    }

    /// Monoidal structure on a thin category (at most one arrow between
    /// two objects), where all whiskers and structural maps are forced.
    /// Fails if a required arrow does not exist.
    pub fn thin(
        base: Arc<FinCategory>,
        unit: Obj,
        tensor_obj: impl Fn(Obj, Obj) -> Obj,
    ) -> Result<Self, MonoidalError> {
        let c = &base;
        let arrow = |x: Obj, y: Obj| {
            c.hom(x, y).first().copied().ok_or_else(|| {
                MonoidalError::IllTyped(format!("no arrow {} -> {}", c.obj_name(x), c.obj_name(y)))
            })
        };
        let objs: Vec<Obj> = c.objects().collect();
        let on_obj: Vec<Vec<Obj>> = objs
            .iter()
            .map(|&x| objs.iter().map(|&y| tensor_obj(x, y)).collect())
            .collect();
        let t = |x: Obj, y: Obj| on_obj[x.0][y.0];
        let left = objs
            .iter()
            .map(|&x| {
                c.morphisms()
                    .map(|f| arrow(t(x, c.src(f)), t(x, c.tgt(f))))
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        let right = c
            .morphisms()
            .map(|f| {
                objs.iter()
                    .map(|&z| arrow(t(c.src(f), z), t(c.tgt(f), z)))
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        let per_obj = |src: &dyn Fn(Obj) -> Obj, tgt: &dyn Fn(Obj) -> Obj| {
            objs.iter().map(|&x| arrow(src(x), tgt(x))).collect::<Result<Vec<_>, _>>()
        };
        let lunitor = per_obj(&|x| t(unit, x), &|x| x)?;
        let lunitor_inv = per_obj(&|x| x, &|x| t(unit, x))?;
        let runitor = per_obj(&|x| t(x, unit), &|x| x)?;
        let runitor_inv = per_obj(&|x| x, &|x| t(x, unit))?;
        let mut associator = Vec::new();
        let mut associator_inv = Vec::new();
        for &x in &objs {
            for &y in &objs {
                for &z in &objs {
                    let (s, d) = (t(t(x, y), z), t(x, t(y, z)));
                    associator.push(arrow(s, d)?);
                    associator_inv.push(arrow(d, s)?);
                }
            }
        }
        Ok(Self {
            tensor: WhiskeredBifunctor {
                base: base.clone(),
                on_obj,
                left_whisker: left,
                right_whisker: right,
            },
            base,
            unit,
            lunitor,
            lunitor_inv,
            runitor,
            runitor_inv,
            associator,
            associator_inv,
        })
    }

    pub(crate) fn validate_shape(&self) -> Result<(), MonoidalError> {
        let same = Arc::ptr_eq(&self.base, &self.tensor.base) || *self.base == *self.tensor.base;
        if !same {
            return Err(MonoidalError::Shape("tensor is over a different category".into()));
        }
        self.tensor.validate_shape()?;
        let (no, nm) = (self.base.object_count(), self.base.morphism_count());
        let ok = |v: &Vec<Mor>, len: usize| v.len() == len && v.iter().all(|m| m.0 < nm);
        if self.unit.0 >= no
            || !ok(&self.lunitor, no)
            || !ok(&self.lunitor_inv, no)
            || !ok(&self.runitor, no)
            || !ok(&self.runitor_inv, no)
            || !ok(&self.associator, no * no * no)
            || !ok(&self.associator_inv, no * no * no)
        {
            return Err(MonoidalError::Shape("structural tables".into()));
        }
        Ok(())
    }
}

impl WhiskerOps for MonoidalCategory {
    fn tensor_obj(&self, x: usize, y: usize) -> usize {
        self.tensor.tensor_obj(x, y)
    }
    fn left_whisker(&self, x: usize, f: usize) -> usize {
        self.tensor.left_whisker(x, f)
    }
    fn right_whisker(&self, f: usize, z: usize) -> usize {
        self.tensor.right_whisker(f, z)
    }
}

impl MonoidalOps for MonoidalCategory {
    fn unit(&self) -> usize {
        self.unit.0
    }
    fn lunitor(&self, x: usize) -> usize {
        self.lunitor[x].0
    }
    fn lunitor_inv(&self, x: usize) -> usize {
        self.lunitor_inv[x].0
    }
    fn runitor(&self, x: usize) -> usize {
        self.runitor[x].0
    }
    fn runitor_inv(&self, x: usize) -> usize {
        self.runitor_inv[x].0
    }
    fn associator(&self, x: usize, y: usize, z: usize) -> usize {
        self.associator_at(Obj(x), Obj(y), Obj(z)).0
    }
    fn associator_inv(&self, x: usize, y: usize, z: usize) -> usize {
        self.associator_inv_at(Obj(x), Obj(y), Obj(z)).0
    }
}

/// Base category laws plus every monoidal law; see
/// [`super::laws::check_monoidal_tables`].
pub fn check_monoidal_laws(m: &MonoidalCategory) -> Result<LawReport, MonoidalError> {
    m.validate_shape()?;
    let mut r = crate::fincat::check_category_laws(&m.base);
    r.merge(check_monoidal_tables(&*m.base, m));
    Ok(r)
}

/// A monoid `(carrier, η: I -> m, μ: m ⊗ m -> m)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monoid {
    pub carrier: Obj,
    pub unit_map: Mor,
    pub mult: Mor,
}

impl Monoid {
    /// `(I, id_I, λ_I)`.
    pub fn unit_object(m: &MonoidalCategory) -> Self {
        Self {
            carrier: m.unit,
            unit_map: m.base.id(m.unit),
            mult: m.lunitor[m.unit.0],
        }
    }
}

/// Typing, both unit diagrams (through the unitors) and the associativity
/// diagram (through the associator).
pub fn check_monoid(m: &MonoidalCategory, mon: &Monoid) -> Result<LawReport, MonoidalError> {
    m.validate_shape()?;
    let c = &*m.base;
    if mon.carrier.0 >= c.object_count()
        || mon.unit_map.0 >= c.morphism_count()
        || mon.mult.0 >= c.morphism_count()
    {
        return Err(MonoidalError::Shape("monoid references".into()));
    }
    let (x, eta, mu) = (mon.carrier, mon.unit_map, mon.mult);
    let xx = m.tensor(x, x);
    let name = || {
        format!(
            "({}, {}, {})",
            c.obj_name(x),
            c.mor_name(eta),
            c.mor_name(mu)
        )
    };
    let mut r = LawReport::new();
    let typed = c.src(eta) == m.unit && c.tgt(eta) == x && c.src(mu) == xx && c.tgt(mu) == x;
    r.check("monoid-typing", typed, name);
    if !typed {
        return Ok(r);
    }
    let lhs = c.compose(mu, m.tensor.rw(eta, x));
    r.check("monoid-left-unit", lhs.is_some() && lhs == Some(m.lunitor[x.0]), name);
    let lhs = c.compose(mu, m.tensor.lw(x, eta));
    r.check("monoid-right-unit", lhs.is_some() && lhs == Some(m.runitor[x.0]), name);
    let lhs = c.compose_path(&[m.tensor.rw(mu, x), mu]);
    let rhs = c.compose_path(&[m.associator_at(x, x, x), m.tensor.lw(x, mu), mu]);
    r.check("monoid-associativity", lhs.is_some() && lhs == rhs, name);
    Ok(r)
}

/// Every well-typed triple `(m, η, μ)`, lawful or not.
pub fn monoid_candidates(m: &MonoidalCategory) -> Vec<Monoid> {
    let c = &*m.base;
    let mut out = Vec::new();
    for x in c.objects() {
        for &eta in c.hom(m.unit, x) {
            for &mu in c.hom(m.tensor(x, x), x) {
                out.push(Monoid {
                    carrier: x,
                    unit_map: eta,
                    mult: mu,
                });
            }
        }
    }
    out
}

/// All monoids, by exhaustive search over [`monoid_candidates`].
pub fn enumerate_monoids(m: &MonoidalCategory) -> Result<Vec<Monoid>, MonoidalError> {
    let mut out = Vec::new();
    for cand in monoid_candidates(m) {
        if check_monoid(m, &cand)?.passed() {
            out.push(cand);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nand_example() -> MonoidalCategory {
        // Two isomorphic objects P, Q; P is the unit; P ⊗ P = Q, otherwise P.
        // The tensor is not associative on objects, so the associator is
        // non-trivial, yet every diagram commutes because homs are singletons.
        let c = Arc::new(FinCategory::codiscrete(&["P".into(), "Q".into()]));
        let (p, q) = (Obj(0), Obj(1));
        MonoidalCategory::thin(c, p, move |x, y| if x == p && y == p { q } else { p }).unwrap()
    }

    #[test]
    fn thin_codiscrete_example_is_lawful() {
        let m = nand_example();
        let r = check_monoidal_laws(&m).unwrap();
        assert!(r.passed(), "{r}");
        let p = Obj(0);
        let q = Obj(1);
        assert_ne!(m.associator_at(p, p, q), m.base.id(p));
    }

    #[test]
    fn swapping_associator_with_inverse_breaks_pentagon() {
        let mut m = nand_example();
        std::mem::swap(&mut m.associator, &mut m.associator_inv);
        let r = check_monoidal_laws(&m).unwrap();
        assert!(r.has_law("pentagon"), "{r}");
        let w = &r.violations_of("pentagon").next().unwrap().witness;
        assert_eq!(w.matches(',').count(), 3);
    }

    #[test]
    fn involutive_associator_breaks_pentagon_with_well_typed_sides() {
        // One object, automorphism group Z/2 = {id, s}; α = s.
        let c = Arc::new(
            FinCategory::builder()
                .object("I")
                .morphism("s", "I", "I")
                .compose("s", "s", "id_I")
                .build()
                .unwrap(),
        );
        let i = Obj(0);
        let mut m = MonoidalCategory::thin(
            Arc::new(FinCategory::terminal()),
            i,
            |_, _| i,
        )
        .unwrap();
        let s = c.mor("s").unwrap();
        m.base = c.clone();
        m.tensor = WhiskeredBifunctor {
            base: c.clone(),
            on_obj: vec![vec![i]],
            left_whisker: vec![vec![c.id(i), s]],
            right_whisker: vec![vec![c.id(i)], vec![s]],
        };
        assert!(check_monoidal_laws(&m).unwrap().passed());
        m.associator = vec![s];
        m.associator_inv = vec![s];
        let r = check_monoidal_laws(&m).unwrap();
        assert!(r.has_law("pentagon"));
        assert!(r.has_law("triangle"));
        assert!(!r.has_law("associator-iso"));
    }

    #[test]
    fn unit_object_is_a_monoid() {
        for m in [
            nand_example(),
            MonoidalCategory::thin(Arc::new(FinCategory::chain(3)), Obj(2), |x, y| {
                Obj(x.0.min(y.0))
            })
            .unwrap(),
        ] {
            assert!(check_monoid(&m, &Monoid::unit_object(&m)).unwrap().passed());
        }
    }

    #[test]
    fn meet_semilattice_has_only_the_top_monoid() {
        // (3-chain, min, top): every x has η: 2 -> x only for x = 2.
        let m = MonoidalCategory::thin(Arc::new(FinCategory::chain(3)), Obj(2), |x, y| {
            Obj(x.0.min(y.0))
        })
        .unwrap();
        assert!(check_monoidal_laws(&m).unwrap().passed());
        let monoids = enumerate_monoids(&m).unwrap();
        assert_eq!(monoids.len(), 1);
        assert_eq!(monoids[0].carrier, Obj(2));
    }
}
