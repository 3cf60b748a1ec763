use std::sync::Arc;

use super::{total_category, DispMor, DispObj, DisplayedCategory, DisplayedError};
use crate::fincat::{FinFunctor, Mor, Obj};
use crate::report::LawReport;

/// A choice of displayed object over every base object and displayed
/// morphism over every base morphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Section {
    pub disp: Arc<DisplayedCategory>,
    pub on_obj: Vec<DispObj>,
    pub on_mor: Vec<DispMor>,
}

impl Section {
    fn validate(&self) -> Result<(), DisplayedError> {
        let b = &self.disp.base;
        if self.on_obj.len() != b.object_count() || self.on_mor.len() != b.morphism_count() {
            return Err(DisplayedError::Shape("section tables are not total".into()));
        }
        if self.on_obj.iter().any(|o| o.0 >= self.disp.object_count())
            || self.on_mor.iter().any(|m| m.0 >= self.disp.morphism_count())
        {
            return Err(DisplayedError::Dangling {
                kind: "displayed data",
                id: "section entry".into(),
            });
        }
        Ok(())
    }
}

/// Lying over, endpoints, identities and composition.
pub fn check_section(s: &Section) -> Result<LawReport, DisplayedError> {
    s.validate()?;
    let d = &*s.disp;
    let b = &*d.base;
    let mut r = LawReport::new();
    for x in b.objects() {
        r.check("section-over", d.over_obj(s.on_obj[x.0]) == x, || b.obj_name(x).to_string());
        if let Some(idx) = b.identity(x) {
            r.check("section-identity", d.identity(s.on_obj[x.0]) == Some(s.on_mor[idx.0]), || {
                b.obj_name(x).to_string()
            });
        }
    }
    for f in b.morphisms() {
        let ff = s.on_mor[f.0];
        let typed = d.over_mor(ff) == f
            && d.src(ff) == s.on_obj[b.src(f).0]
            && d.tgt(ff) == s.on_obj[b.tgt(f).0];
        r.check("section-over", typed, || b.mor_name(f).to_string());
    }
    for (&(g, f), &gf) in b.composition_table() {
        let lhs = d.compose(s.on_mor[g.0], s.on_mor[f.0]);
        r.check("section-composition", lhs == Some(s.on_mor[gf.0]), || {
            format!("({}, {})", b.mor_name(g), b.mor_name(f))
        });
    }
    Ok(r)
}

/// The functor `base -> total` picking out the section. Its composite with
/// the projection is the identity exactly when the section lies over the
/// base data.
pub fn lift_section(s: &Section) -> Result<FinFunctor, DisplayedError> {
    s.validate()?;
    let total = total_category(&s.disp);
    Ok(FinFunctor {
        source: s.disp.base.clone(),
        target: total.category,
        on_obj: s.on_obj.iter().map(|o| Obj(o.0)).collect(),
        on_mor: s.on_mor.iter().map(|m| Mor(m.0)).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::displayed::category::tests::three_object;
    use crate::fincat::{check_functor, FinCategory};

    #[test]
    fn trivial_section_lifts_to_a_right_inverse() {
        let base = Arc::new(FinCategory::chain(3));
        let d = Arc::new(DisplayedCategory::trivial(base.clone()));
        let s = Section {
            disp: d.clone(),
            on_obj: base.objects().map(|x| DispObj(x.0)).collect(),
            on_mor: base.morphisms().map(|f| DispMor(f.0)).collect(),
        };
        assert!(check_section(&s).unwrap().passed());
        let lifted = lift_section(&s).unwrap();
        assert!(check_functor(&lifted).unwrap().passed());
        let p = total_category(&d).projection;
        assert!(lifted.then(&p).unwrap().is_identity());
    }

    #[test]
    fn three_object_section() {
        let d = Arc::new(three_object());
        let b = d.base.clone();
        let pick = |name: &str| d.mor(name).unwrap();
        let mut on_mor = vec![DispMor(0); b.morphism_count()];
        on_mor[b.mor("id_a").unwrap().0] = pick("dp");
        on_mor[b.mor("id_b").unwrap().0] = pick("dq1");
        on_mor[b.mor("f").unwrap().0] = pick("k");
        let s = Section {
            disp: d.clone(),
            on_obj: vec![d.obj("p").unwrap(), d.obj("q1").unwrap()],
            on_mor,
        };
        assert!(check_section(&s).unwrap().passed());
        let lifted = lift_section(&s).unwrap();
        assert!(check_functor(&lifted).unwrap().passed());
        let composite = lifted.then(&total_category(&d).projection).unwrap();
        assert_eq!(composite, FinFunctor::identity(b));
    }

    #[test]
    fn wrong_choice_over_an_identity_breaks_functoriality() {
        // Over id_b there are two displayed endomorphisms of q: its identity
        // and an idempotent e; over f there are k1 and k2 with e ∘ k1 = k2.
        let d = Arc::new(
            DisplayedCategory::builder(Arc::new(FinCategory::walking_arrow()))
                .object("p", "a")
                .object("q", "b")
                .morphism("e", "id_b", "q", "q")
                .morphism("k1", "f", "p", "q")
                .morphism("k2", "f", "p", "q")
                .compose("e", "e", "e")
                .compose("e", "k1", "k2")
                .compose("e", "k2", "k2")
                .build()
                .unwrap(),
        );
        assert!(crate::displayed::check_displayed_category(&d).passed());
        let b = d.base.clone();
        let mut on_mor = vec![DispMor(0); 3];
        on_mor[b.mor("id_a").unwrap().0] = d.mor("dp").unwrap();
        on_mor[b.mor("id_b").unwrap().0] = d.mor("e").unwrap();
        on_mor[b.mor("f").unwrap().0] = d.mor("k1").unwrap();
        let s = Section {
            disp: d.clone(),
            on_obj: vec![d.obj("p").unwrap(), d.obj("q").unwrap()],
            on_mor,
        };
        assert!(check_section(&s).unwrap().has_law("section-identity"));
        let r = check_functor(&lift_section(&s).unwrap()).unwrap();
        assert!(r.has_law("functor-identity"), "{r}");
        assert!(r.has_law("functor-composition"), "{r}");
        // Still a right inverse on tables: the defect is functoriality only.
        let composite = lift_section(&s).unwrap().then(&total_category(&d).projection).unwrap();
        assert!(composite.is_identity());
    }

    #[test]
    fn partial_section_is_an_error() {
        let d = Arc::new(three_object());
        let s = Section {
            disp: d,
            on_obj: vec![DispObj(0)],
            on_mor: vec![],
        };
        assert!(matches!(lift_section(&s), Err(DisplayedError::Shape(_))));
    }
}
