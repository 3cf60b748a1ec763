use std::collections::BTreeMap;
use std::sync::Arc;

use super::{FinCategory, MorphismData, Mor, Obj};

/// `left × right` together with the pairing bookkeeping.
///
/// Object `(x, y)` sits at index `x * |right objects| + y`, and likewise for
/// morphisms.
#[derive(Debug, Clone)]
pub struct ProductCategory {
    pub left: Arc<FinCategory>,
    pub right: Arc<FinCategory>,
    pub category: Arc<FinCategory>,
}

impl ProductCategory {
    pub fn pair_obj(&self, x: Obj, y: Obj) -> Obj {
        Obj(x.0 * self.right.object_count() + y.0)
    }

    pub fn pair_mor(&self, f: Mor, g: Mor) -> Mor {
        Mor(f.0 * self.right.morphism_count() + g.0)
    }

    pub fn split_obj(&self, p: Obj) -> (Obj, Obj) {
        let n = self.right.object_count();
        (Obj(p.0 / n), Obj(p.0 % n))
    }

    pub fn split_mor(&self, p: Mor) -> (Mor, Mor) {
        let n = self.right.morphism_count();
        (Mor(p.0 / n), Mor(p.0 % n))
    }
}

/// Componentwise product. Pair ids are rendered `(x,y)`.
pub fn product_category(c: Arc<FinCategory>, d: Arc<FinCategory>) -> ProductCategory {
    let (no_d, nm_d) = (d.object_count(), d.morphism_count());
    let mut objects = Vec::with_capacity(c.object_count() * no_d);
    for x in c.objects() {
        for y in d.objects() {
            objects.push(format!("({},{})", c.obj_name(x), d.obj_name(y)));
        }
    }
    let mut morphisms = Vec::with_capacity(c.morphism_count() * nm_d);
    for f in c.morphisms() {
        for g in d.morphisms() {
            morphisms.push(MorphismData {
                id: format!("({},{})", c.mor_name(f), d.mor_name(g)),
                src: Obj(c.src(f).0 * no_d + d.src(g).0),
                tgt: Obj(c.tgt(f).0 * no_d + d.tgt(g).0),
            });
        }
    }
    let mut identity = Vec::with_capacity(objects.len());
    for x in c.objects() {
        for y in d.objects() {
            identity.push(match (c.identity(x), d.identity(y)) {
                (Some(i), Some(j)) => Some(Mor(i.0 * nm_d + j.0)),
                _ => None,
            });
        }
    }
    let mut comp = BTreeMap::new();
    for (&(g1, f1), &r1) in c.composition_table() {
        for (&(g2, f2), &r2) in d.composition_table() {
            comp.insert(
                (Mor(g1.0 * nm_d + g2.0), Mor(f1.0 * nm_d + f2.0)),
                Mor(r1.0 * nm_d + r2.0),
            );
        }
    }
    let category = FinCategory::from_parts(objects, morphisms, identity, comp)
        .expect("product of resolved tables resolves");
    ProductCategory {
        left: c,
        right: d,
        category: Arc::new(category),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::{check_category_laws, hom_enumerate};

    #[test]
    fn walking_arrow_squared() {
        let w = Arc::new(FinCategory::walking_arrow());
        let p = product_category(w.clone(), w.clone());
        assert_eq!(p.category.object_count(), 4);
        assert_eq!(p.category.morphism_count(), 9);
        assert!(check_category_laws(&p.category).passed());
        let (a, b) = (w.obj("a").unwrap(), w.obj("b").unwrap());
        let homs = hom_enumerate(&p.category, p.pair_obj(a, a), p.pair_obj(b, b)).unwrap();
        assert_eq!(homs.len(), 1);
        assert_eq!(p.category.mor_name(homs[0]), "(f,f)");
    }

    #[test]
    fn terminal_factor_is_neutral() {
        let t = Arc::new(FinCategory::terminal());
        let c = Arc::new(FinCategory::chain(3));
        for p in [
            product_category(t.clone(), c.clone()),
            product_category(c.clone(), t.clone()),
        ] {
            assert_eq!(p.category.object_count(), c.object_count());
            assert_eq!(p.category.morphism_count(), c.morphism_count());
            assert_eq!(p.category.composition_table().len(), c.composition_table().len());
            assert!(check_category_laws(&p.category).passed());
        }
    }

    #[test]
    fn hom_in_walking_arrow() {
        let w = FinCategory::walking_arrow();
        let (a, b) = (w.obj("a").unwrap(), w.obj("b").unwrap());
        assert_eq!(hom_enumerate(&w, a, b).unwrap(), vec![w.mor("f").unwrap()]);
        assert!(hom_enumerate(&w, b, a).unwrap().is_empty());
        assert!(hom_enumerate(&w, a, Obj(7)).is_err());
    }

    #[test]
    fn pairing_round_trips() {
        let w = Arc::new(FinCategory::walking_arrow());
        let c = Arc::new(FinCategory::chain(3));
        let p = product_category(w.clone(), c.clone());
        for x in w.objects() {
            for y in c.objects() {
                assert_eq!(p.split_obj(p.pair_obj(x, y)), (x, y));
            }
        }
        for f in w.morphisms() {
            for g in c.morphisms() {
                assert_eq!(p.split_mor(p.pair_mor(f, g)), (f, g));
            }
        }
    }
}
