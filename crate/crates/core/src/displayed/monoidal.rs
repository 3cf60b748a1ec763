use std::sync::Arc;

use super::{check_displayed_category, total_category, DispMor, DispObj, DisplayedCategory, DisplayedError};
use crate::fincat::{FinFunctor, Mor, Obj};
use crate::monoidal::{check_monoidal_laws, check_monoidal_tables, MonoidalCategory, MonoidalOps, WhiskerOps, WhiskeredBifunctor};
use crate::report::LawReport;

/// Displayed monoidal structure over a monoidal base. The displayed tensor
/// is curried: `tensor_obj[xx][yy]`, `left_whisker[xx][ff]`,
/// `right_whisker[ff][zz]`. The associator tables are indexed like the
/// base's, over displayed objects.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DisplayedMonoidal {
    pub base: MonoidalCategory,
    pub disp: Arc<DisplayedCategory>,
    pub unit: DispObj,
    pub tensor_obj: Vec<Vec<DispObj>>,
    pub left_whisker: Vec<Vec<DispMor>>,
    pub right_whisker: Vec<Vec<DispMor>>,
    pub lunitor: Vec<DispMor>,
    pub lunitor_inv: Vec<DispMor>,
    pub runitor: Vec<DispMor>,
    pub runitor_inv: Vec<DispMor>,
    pub associator: Vec<DispMor>,
    pub associator_inv: Vec<DispMor>,
}

impl DisplayedMonoidal {
    /// The trivial displayed monoidal category: every table mirrors the
    /// base through [`DisplayedCategory::trivial`].
    pub fn trivial(base: MonoidalCategory) -> Self {
        let disp = Arc::new(DisplayedCategory::trivial(base.base.clone()));
        let o = |x: &Obj| DispObj(x.0);
        let m = |f: &Mor| DispMor(f.0);
        Self {
            unit: o(&base.unit),
            tensor_obj: base.tensor.on_obj.iter().map(|r| r.iter().map(o).collect()).collect(),
            left_whisker: base.tensor.left_whisker.iter().map(|r| r.iter().map(m).collect()).collect(),
            right_whisker: base.tensor.right_whisker.iter().map(|r| r.iter().map(m).collect()).collect(),
            lunitor: base.lunitor.iter().map(m).collect(),
            lunitor_inv: base.lunitor_inv.iter().map(m).collect(),
            runitor: base.runitor.iter().map(m).collect(),
            runitor_inv: base.runitor_inv.iter().map(m).collect(),
            associator: base.associator.iter().map(m).collect(),
            associator_inv: base.associator_inv.iter().map(m).collect(),
            disp,
            base,
        }
    }

    fn triple_index(&self, x: usize, y: usize, z: usize) -> usize {
        let n = self.disp.object_count();
        (x * n + y) * n + z
    }

    fn validate_shape(&self) -> Result<(), DisplayedError> {
        let d = &self.disp;
        let same = Arc::ptr_eq(&d.base, &self.base.base) || *d.base == *self.base.base;
        if !same {
            return Err(DisplayedError::Shape("displayed category is over a different base".into()));
        }
        let (no, nm) = (d.object_count(), d.morphism_count());
        let objs = |v: &Vec<DispObj>, len| v.len() == len && v.iter().all(|o| o.0 < no);
        let mors = |v: &Vec<DispMor>, len| v.len() == len && v.iter().all(|m| m.0 < nm);
        let ok = self.unit.0 < no
            && self.tensor_obj.len() == no
            && self.tensor_obj.iter().all(|r| objs(r, no))
            && self.left_whisker.len() == no
            && self.left_whisker.iter().all(|r| mors(r, nm))
            && self.right_whisker.len() == nm
            && self.right_whisker.iter().all(|r| mors(r, no))
            && mors(&self.lunitor, no)
            && mors(&self.lunitor_inv, no)
            && mors(&self.runitor, no)
            && mors(&self.runitor_inv, no)
            && mors(&self.associator, no * no * no)
            && mors(&self.associator_inv, no * no * no);
        if ok {
            Ok(())
        } else {
            Err(DisplayedError::Shape("displayed monoidal tables".into()))
        }
    }
}

impl WhiskerOps for DisplayedMonoidal {
    fn tensor_obj(&self, x: usize, y: usize) -> usize {
        self.tensor_obj[x][y].0
    }
    fn left_whisker(&self, x: usize, f: usize) -> usize {
        self.left_whisker[x][f].0
    }
    fn right_whisker(&self, f: usize, z: usize) -> usize {
        self.right_whisker[f][z].0
    }
}

impl MonoidalOps for DisplayedMonoidal {
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
        self.associator[self.triple_index(x, y, z)].0
    }
    fn associator_inv(&self, x: usize, y: usize, z: usize) -> usize {
        self.associator_inv[self.triple_index(x, y, z)].0
    }
}

/// Base monoidal laws (prefix `base`), the displayed category laws, the
/// lying-over conditions for every displayed table, and the displayed
/// whiskering, isomorphism, naturality, triangle and pentagon laws (prefix
/// `displayed`).
pub fn check_displayed_monoidal(dm: &DisplayedMonoidal) -> Result<LawReport, DisplayedError> {
    dm.validate_shape()?;
    let d = &*dm.disp;
    let b = &dm.base;
    let mut r = check_monoidal_laws(b)?.prefixed("base");
    r.merge(check_displayed_category(d));

    let on = |xx: DispObj| d.objects[xx.0].id.clone();
    let mn = |ff: DispMor| d.morphisms[ff.0].id.clone();
    r.check("over-unit", d.over_obj(dm.unit) == b.unit, || on(dm.unit));
    for xx in (0..d.object_count()).map(DispObj) {
        let x = d.over_obj(xx);
        for yy in (0..d.object_count()).map(DispObj) {
            let y = d.over_obj(yy);
            r.check("over-tensor", d.over_obj(dm.tensor_obj[xx.0][yy.0]) == b.tensor(x, y), || {
                format!("({}, {})", on(xx), on(yy))
            });
        }
        for ff in (0..d.morphism_count()).map(DispMor) {
            let f = d.over_mor(ff);
            r.check(
                "over-left-whisker",
                d.over_mor(dm.left_whisker[xx.0][ff.0]) == b.tensor.lw(x, f),
                || format!("({}, {})", on(xx), mn(ff)),
            );
            r.check(
                "over-right-whisker",
                d.over_mor(dm.right_whisker[ff.0][xx.0]) == b.tensor.rw(f, x),
                || format!("({}, {})", mn(ff), on(xx)),
            );
        }
        let unitors = [
            ("over-lunitor", dm.lunitor[xx.0], b.lunitor[x.0]),
            ("over-lunitor", dm.lunitor_inv[xx.0], b.lunitor_inv[x.0]),
            ("over-runitor", dm.runitor[xx.0], b.runitor[x.0]),
            ("over-runitor", dm.runitor_inv[xx.0], b.runitor_inv[x.0]),
        ];
        for (law, disp, base) in unitors {
            r.check(law, d.over_mor(disp) == base, || format!("{} at {}", mn(disp), on(xx)));
        }
    }
    let n = d.object_count();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let (bx, by, bz) = (d.objects[x].over, d.objects[y].over, d.objects[z].over);
                let i = dm.triple_index(x, y, z);
                let label = || format!("({}, {}, {})", on(DispObj(x)), on(DispObj(y)), on(DispObj(z)));
                r.check(
                    "over-associator",
                    d.over_mor(dm.associator[i]) == b.associator_at(bx, by, bz)
                        && d.over_mor(dm.associator_inv[i]) == b.associator_inv_at(bx, by, bz),
                    label,
                );
            }
        }
    }
    r.merge(check_monoidal_tables(&d.tables(), dm).prefixed("displayed"));
    Ok(r)
}

/// The total monoidal category. Indices of total objects and morphisms are
/// those of the displayed data, so every table carries over unchanged.
pub fn total_monoidal(dm: &DisplayedMonoidal) -> Result<(MonoidalCategory, FinFunctor), DisplayedError> {
    dm.validate_shape()?;
    let total = total_category(&dm.disp);
    let base = total.category.clone();
    let o = |x: &DispObj| Obj(x.0);
    let m = |f: &DispMor| Mor(f.0);
    let mc = MonoidalCategory {
        unit: o(&dm.unit),
        tensor: WhiskeredBifunctor {
            base: base.clone(),
            on_obj: dm.tensor_obj.iter().map(|r| r.iter().map(o).collect()).collect(),
            left_whisker: dm.left_whisker.iter().map(|r| r.iter().map(m).collect()).collect(),
            right_whisker: dm.right_whisker.iter().map(|r| r.iter().map(m).collect()).collect(),
        },
        lunitor: dm.lunitor.iter().map(m).collect(),
        lunitor_inv: dm.lunitor_inv.iter().map(m).collect(),
        runitor: dm.runitor.iter().map(m).collect(),
        runitor_inv: dm.runitor_inv.iter().map(m).collect(),
        associator: dm.associator.iter().map(m).collect(),
        associator_inv: dm.associator_inv.iter().map(m).collect(),
        base,
    };
    Ok((mc, total.projection))
}

/// On-the-nose preservation of unit, tensor, both whiskerings, unitors and
/// associator by `f: source -> target`.
pub fn check_strict_monoidal(source: &MonoidalCategory, target: &MonoidalCategory, f: &FinFunctor) -> LawReport {
    let c = &*source.base;
    let mut r = LawReport::new();
    r.check("strict-unit", f.obj(source.unit) == target.unit, || c.obj_name(source.unit).to_string());
    for x in c.objects() {
        for y in c.objects() {
            r.check(
                "strict-tensor",
                f.obj(source.tensor(x, y)) == target.tensor(f.obj(x), f.obj(y)),
                || format!("({}, {})", c.obj_name(x), c.obj_name(y)),
            );
        }
        for g in c.morphisms() {
            r.check(
                "strict-left-whisker",
                f.mor(source.tensor.lw(x, g)) == target.tensor.lw(f.obj(x), f.mor(g)),
                || format!("({}, {})", c.obj_name(x), c.mor_name(g)),
            );
            r.check(
                "strict-right-whisker",
                f.mor(source.tensor.rw(g, x)) == target.tensor.rw(f.mor(g), f.obj(x)),
                || format!("({}, {})", c.mor_name(g), c.obj_name(x)),
            );
        }
        let fx = f.obj(x).0;
        r.check(
            "strict-unitors",
            f.mor(source.lunitor[x.0]) == target.lunitor[fx]
                && f.mor(source.lunitor_inv[x.0]) == target.lunitor_inv[fx]
                && f.mor(source.runitor[x.0]) == target.runitor[fx]
                && f.mor(source.runitor_inv[x.0]) == target.runitor_inv[fx],
            || c.obj_name(x).to_string(),
        );
    }
    for x in c.objects() {
        for y in c.objects() {
            for z in c.objects() {
                let (fx, fy, fz) = (f.obj(x), f.obj(y), f.obj(z));
                r.check(
                    "strict-associator",
                    f.mor(source.associator_at(x, y, z)) == target.associator_at(fx, fy, fz)
                        && f.mor(source.associator_inv_at(x, y, z)) == target.associator_inv_at(fx, fy, fz),
                    || format!("({}, {}, {})", c.obj_name(x), c.obj_name(y), c.obj_name(z)),
                );
            }
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::{check_functor, FinCategory};
    use crate::monoidal::endofunctor_monoidal;

    fn trivial_over_two_chain() -> DisplayedMonoidal {
        let e = endofunctor_monoidal(Arc::new(FinCategory::chain(2)), 100).unwrap();
        DisplayedMonoidal::trivial(e.monoidal)
    }

    #[test]
    fn trivial_over_endofunctors_totalizes_strictly() {
        let dm = trivial_over_two_chain();
        let r = check_displayed_monoidal(&dm).unwrap();
        assert!(r.passed(), "{r}");
        let (total, p) = total_monoidal(&dm).unwrap();
        let laws = check_monoidal_laws(&total).unwrap();
        assert!(laws.passed(), "{laws}");
        assert!(laws.checks_run > 0);
        assert!(check_functor(&p).unwrap().passed());
        let strict = check_strict_monoidal(&total, &dm.base, &p);
        assert!(strict.passed(), "{strict}");
    }

    #[test]
    fn trivial_total_associator_pairs_base_and_point() {
        let dm = trivial_over_two_chain();
        let (total, p) = total_monoidal(&dm).unwrap();
        let a = total.associator[0];
        let name = total.base.mor_name(a);
        let base_name = dm.base.base.mor_name(dm.base.associator[0]);
        assert_eq!(name, format!("({base_name},pt_{base_name})"));
        assert_eq!(p.mor(a), dm.base.associator[0]);
    }

    #[test]
    fn wrong_associator_inverse_is_caught_before_totalizing() {
        let mut dm = trivial_over_two_chain();
        // Fibers are singletons, so point one inverse at a non-endomorphism.
        let n = dm.disp.morphism_count();
        let bad = (0..n).map(DispMor).find(|&m| dm.disp.src(m) != dm.disp.tgt(m)).unwrap();
        dm.associator_inv[0] = bad;
        let r = check_displayed_monoidal(&dm).unwrap();
        assert!(r.has_law("displayed associator-iso"), "{r}");
    }

    #[test]
    fn strictness_detects_a_moved_unit() {
        let dm = trivial_over_two_chain();
        let (mut total, p) = total_monoidal(&dm).unwrap();
        total.unit = Obj((total.unit.0 + 1) % total.base.object_count());
        assert!(check_strict_monoidal(&total, &dm.base, &p).has_law("strict-unit"));
    }
}
