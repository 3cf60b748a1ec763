//! Law checkers shared by monoidal categories and their displayed versions.

use crate::fincat::CategoryTables;
use crate::report::LawReport;

/// Curried tensor: object action plus left and right whiskering.
pub trait WhiskerOps {
    fn tensor_obj(&self, x: usize, y: usize) -> usize;
    /// `x ⊗ f : x⊗y -> x⊗z` for `f: y -> z`.
    fn left_whisker(&self, x: usize, f: usize) -> usize;
    /// `f ⊗ z : x⊗z -> y⊗z` for `f: x -> y`.
    fn right_whisker(&self, f: usize, z: usize) -> usize;
}

/// Unit and structural isomorphisms.
pub trait MonoidalOps: WhiskerOps {
    fn unit(&self) -> usize;
    fn lunitor(&self, x: usize) -> usize;
    fn lunitor_inv(&self, x: usize) -> usize;
    fn runitor(&self, x: usize) -> usize;
    fn runitor_inv(&self, x: usize) -> usize;
    fn associator(&self, x: usize, y: usize, z: usize) -> usize;
    fn associator_inv(&self, x: usize, y: usize, z: usize) -> usize;
}

fn has_type<C: CategoryTables + ?Sized>(c: &C, m: usize, src: usize, tgt: usize) -> bool {
    c.source(m) == src && c.target(m) == tgt
}

/// Identity, composition and interchange laws of a whiskered bifunctor.
pub fn check_whisker_laws<C, W>(c: &C, w: &W) -> LawReport
where
    C: CategoryTables + ?Sized,
    W: WhiskerOps + ?Sized,
{
    let mut r = LawReport::new();
    let objs = 0..c.object_count();
    let mors = 0..c.morphism_count();
    let o = |x| c.object_label(x);
    let m = |f| c.morphism_label(f);

    for x in objs.clone() {
        for f in mors.clone() {
            let (y, z) = (c.source(f), c.target(f));
            let lw = w.left_whisker(x, f);
            r.check(
                "whisker-typing",
                has_type(c, lw, w.tensor_obj(x, y), w.tensor_obj(x, z)),
                || format!("left ({}, {})", o(x), m(f)),
            );
            let rw = w.right_whisker(f, x);
            r.check(
                "whisker-typing",
                has_type(c, rw, w.tensor_obj(y, x), w.tensor_obj(z, x)),
                || format!("right ({}, {})", m(f), o(x)),
            );
        }
    }

    for x in objs.clone() {
        for y in objs.clone() {
            let (Some(idy), Some(idxy), Some(idyx)) = (
                c.identity_of(y),
                c.identity_of(w.tensor_obj(x, y)),
                c.identity_of(w.tensor_obj(y, x)),
            ) else {
                r.fail("whisker-identity", format!("missing identity near ({}, {})", o(x), o(y)));
                continue;
            };
            r.check("left-whisker-identity", w.left_whisker(x, idy) == idxy, || {
                format!("({}, {})", o(x), m(idy))
            });
            r.check("right-whisker-identity", w.right_whisker(idy, x) == idyx, || {
                format!("({}, {})", m(idy), o(x))
            });
        }
    }

    for f in mors.clone() {
        for g in mors.clone() {
            if c.target(f) != c.source(g) {
                continue;
            }
            let gf = c.composite(g, f);
            for x in objs.clone() {
                let lhs = gf.map(|gf| w.left_whisker(x, gf));
                let rhs = c.composite(w.left_whisker(x, g), w.left_whisker(x, f));
                r.check("left-whisker-composition", lhs.is_some() && lhs == rhs, || {
                    format!("({}, {} ∘ {})", o(x), m(g), m(f))
                });
                let lhs = gf.map(|gf| w.right_whisker(gf, x));
                let rhs = c.composite(w.right_whisker(g, x), w.right_whisker(f, x));
                r.check("right-whisker-composition", lhs.is_some() && lhs == rhs, || {
                    format!("({} ∘ {}, {})", m(g), m(f), o(x))
                });
            }
        }
    }

    // f: y -> y' on the right, g: x -> x' on the left.
    for f in mors.clone() {
        for g in mors.clone() {
            let (y, y2) = (c.source(f), c.target(f));
            let (x, x2) = (c.source(g), c.target(g));
            let lhs = c.composite(w.right_whisker(g, y2), w.left_whisker(x, f));
            let rhs = c.composite(w.left_whisker(x2, f), w.right_whisker(g, y));
            r.check("interchange", lhs.is_some() && lhs == rhs, || {
                format!("({}, {})", m(g), m(f))
            });
        }
    }
    r
}

/// Whisker laws, structural isomorphisms, their naturality, triangle and
/// pentagon.
pub fn check_monoidal_tables<C, M>(c: &C, s: &M) -> LawReport
where
    C: CategoryTables + ?Sized,
    M: MonoidalOps + ?Sized,
{
    let mut r = check_whisker_laws(c, s);
    let n = c.object_count();
    let i = s.unit();
    let t = |x, y| s.tensor_obj(x, y);
    let o = |x| c.object_label(x);
    let m = |f| c.morphism_label(f);
    let comp = |path: &[usize]| c.compose_path(path);
    let is_id = |f: Option<usize>, x: usize| f.is_some() && f == c.identity_of(x);

    for x in 0..n {
        let (l, li) = (s.lunitor(x), s.lunitor_inv(x));
        r.check("lunitor-typing", has_type(c, l, t(i, x), x) && has_type(c, li, x, t(i, x)), || o(x));
        r.check(
            "lunitor-iso",
            is_id(c.composite(l, li), x) && is_id(c.composite(li, l), t(i, x)),
            || o(x),
        );
        let (p, pi) = (s.runitor(x), s.runitor_inv(x));
        r.check("runitor-typing", has_type(c, p, t(x, i), x) && has_type(c, pi, x, t(x, i)), || o(x));
        r.check(
            "runitor-iso",
            is_id(c.composite(p, pi), x) && is_id(c.composite(pi, p), t(x, i)),
            || o(x),
        );
    }

    for f in 0..c.morphism_count() {
        let (x, y) = (c.source(f), c.target(f));
        let lhs = c.composite(f, s.lunitor(x));
        let rhs = c.composite(s.lunitor(y), s.left_whisker(i, f));
        r.check("lunitor-naturality", lhs.is_some() && lhs == rhs, || m(f));
        let lhs = c.composite(f, s.runitor(x));
        let rhs = c.composite(s.runitor(y), s.right_whisker(f, i));
        r.check("runitor-naturality", lhs.is_some() && lhs == rhs, || m(f));
    }

    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let (a, ai) = (s.associator(x, y, z), s.associator_inv(x, y, z));
                let (src, tgt) = (t(t(x, y), z), t(x, t(y, z)));
                let triple = || format!("({}, {}, {})", o(x), o(y), o(z));
                r.check(
                    "associator-typing",
                    has_type(c, a, src, tgt) && has_type(c, ai, tgt, src),
                    triple,
                );
                r.check(
                    "associator-iso",
                    is_id(c.composite(a, ai), tgt) && is_id(c.composite(ai, a), src),
                    triple,
                );
            }
        }
    }

    for f in 0..c.morphism_count() {
        let (a, b) = (c.source(f), c.target(f));
        for y in 0..n {
            for z in 0..n {
                // f in the left slot.
                let lhs = comp(&[s.right_whisker(s.right_whisker(f, y), z), s.associator(b, y, z)]);
                let rhs = comp(&[s.associator(a, y, z), s.right_whisker(f, t(y, z))]);
                r.check("associator-naturality", lhs.is_some() && lhs == rhs, || {
                    format!("({}, {}, {})", m(f), o(y), o(z))
                });
                // f in the middle slot.
                let (x, z2) = (y, z);
                let lhs = comp(&[
                    s.right_whisker(s.left_whisker(x, f), z2),
                    s.associator(x, b, z2),
                ]);
                let rhs = comp(&[
                    s.associator(x, a, z2),
                    s.left_whisker(x, s.right_whisker(f, z2)),
                ]);
                r.check("associator-naturality", lhs.is_some() && lhs == rhs, || {
                    format!("({}, {}, {})", o(x), m(f), o(z2))
                });
                // f in the right slot.
                let (x, y2) = (y, z);
                let lhs = comp(&[s.left_whisker(t(x, y2), f), s.associator(x, y2, b)]);
                let rhs = comp(&[
                    s.associator(x, y2, a),
                    s.left_whisker(x, s.left_whisker(y2, f)),
                ]);
                r.check("associator-naturality", lhs.is_some() && lhs == rhs, || {
                    format!("({}, {}, {})", o(x), o(y2), m(f))
                });
            }
        }
    }

    for x in 0..n {
        for y in 0..n {
            let lhs = Some(s.right_whisker(s.runitor(x), y));
            let rhs = comp(&[s.associator(x, i, y), s.left_whisker(x, s.lunitor(y))]);
            r.check("triangle", lhs == rhs, || format!("({}, {})", o(x), o(y)));
        }
    }

    for w in 0..n {
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let lhs = comp(&[s.associator(t(w, x), y, z), s.associator(w, x, t(y, z))]);
                    let rhs = comp(&[
                        s.right_whisker(s.associator(w, x, y), z),
                        s.associator(w, t(x, y), z),
                        s.left_whisker(w, s.associator(x, y, z)),
                    ]);
                    r.check("pentagon", lhs.is_some() && lhs == rhs, || {
                        format!("({}, {}, {}, {})", o(w), o(x), o(y), o(z))
                    });
                }
            }
        }
    }
    r
}
