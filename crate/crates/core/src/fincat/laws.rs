use std::collections::HashMap;

use super::{FinCategory, Mor, Obj};
use crate::report::LawReport;

/// Raw category tables, indexed by position. Implemented by
/// [`FinCategory`] and by the data of a displayed category, so that both
/// share one law checker.
pub trait CategoryTables {
    fn object_count(&self) -> usize;
    fn morphism_count(&self) -> usize;
    fn source(&self, m: usize) -> usize;
    fn target(&self, m: usize) -> usize;
    fn identity_of(&self, x: usize) -> Option<usize>;
    fn composite(&self, g: usize, f: usize) -> Option<usize>;
    /// Every `(g, f)` with a tabulated composite.
    fn tabulated_pairs(&self) -> Vec<(usize, usize)>;
    fn object_label(&self, x: usize) -> String;
    fn morphism_label(&self, m: usize) -> String;

    /// Witness for a composable pair `g ∘ f`.
    fn pair_label(&self, g: usize, f: usize) -> String {
        format!("({}, {})", self.morphism_label(g), self.morphism_label(f))
    }

    fn compose_path(&self, path: &[usize]) -> Option<usize> {
        let (first, rest) = path.split_first()?;
        rest.iter()
            .try_fold(*first, |acc, &m| self.composite(m, acc))
    }
}

impl CategoryTables for FinCategory {
    fn object_count(&self) -> usize {
        FinCategory::object_count(self)
    }
    fn morphism_count(&self) -> usize {
        FinCategory::morphism_count(self)
    }
    fn source(&self, m: usize) -> usize {
        self.src(Mor(m)).0
    }
    fn target(&self, m: usize) -> usize {
        self.tgt(Mor(m)).0
    }
    fn identity_of(&self, x: usize) -> Option<usize> {
        self.identity(Obj(x)).map(|m| m.0)
    }
    fn composite(&self, g: usize, f: usize) -> Option<usize> {
        self.compose(Mor(g), Mor(f)).map(|m| m.0)
    }
    fn tabulated_pairs(&self) -> Vec<(usize, usize)> {
        self.composition_table()
            .keys()
            .map(|&(g, f)| (g.0, f.0))
            .collect()
    }
    fn object_label(&self, x: usize) -> String {
        self.obj_name(Obj(x)).to_string()
    }
    fn morphism_label(&self, m: usize) -> String {
        self.mor_name(Mor(m)).to_string()
    }
}

/// Exhaustive category-law check over raw tables.
pub fn check_category_tables<C: CategoryTables + ?Sized>(c: &C) -> LawReport {
    let mut r = LawReport::new();
    let n_mor = c.morphism_count();

    for x in 0..c.object_count() {
        match c.identity_of(x) {
            None => r.fail("identity-total", c.object_label(x)),
            Some(i) => r.check(
                "identity-typing",
                c.source(i) == x && c.target(i) == x,
                || format!("{} for {}", c.morphism_label(i), c.object_label(x)),
            ),
        }
    }

    for (g, f) in c.tabulated_pairs() {
        r.check("composition-domain", c.target(f) == c.source(g), || {
            c.pair_label(g, f)
        });
    }

    let mut outgoing: HashMap<usize, Vec<usize>> = HashMap::new();
    for m in 0..n_mor {
        outgoing.entry(c.source(m)).or_default().push(m);
    }
    let after = |f: usize| outgoing.get(&c.target(f)).map(Vec::as_slice).unwrap_or(&[]);

    for f in 0..n_mor {
        for &g in after(f) {
            match c.composite(g, f) {
                None => r.fail("composition-total", c.pair_label(g, f)),
                Some(gf) => r.check(
                    "composition-typing",
                    c.source(gf) == c.source(f) && c.target(gf) == c.target(g),
                    || format!("{} = {}", c.pair_label(g, f), c.morphism_label(gf)),
                ),
            }
        }
    }

    for f in 0..n_mor {
        if let Some(idy) = c.identity_of(c.target(f)) {
            r.check("left-unit", c.composite(idy, f) == Some(f), || {
                c.pair_label(idy, f)
            });
        }
        if let Some(idx) = c.identity_of(c.source(f)) {
            r.check("right-unit", c.composite(f, idx) == Some(f), || {
                c.pair_label(f, idx)
            });
        }
    }

    for f in 0..n_mor {
        for &g in after(f) {
            for &h in after(g) {
                let lhs = c.composite(g, f).and_then(|gf| c.composite(h, gf));
                let rhs = c.composite(h, g).and_then(|hg| c.composite(hg, f));
                r.check("associativity", lhs.is_some() && lhs == rhs, || {
                    format!(
                        "({}, {}, {})",
                        c.morphism_label(h),
                        c.morphism_label(g),
                        c.morphism_label(f)
                    )
                });
            }
        }
    }
    r
}
