use std::sync::Arc;

use super::laws::{check_whisker_laws, WhiskerOps};
use super::MonoidalError;
use crate::fincat::{product_category, FinCategory, FinFunctor, Mor, Obj, ProductCategory};
use crate::report::LawReport;

/// A tensor in curried form: `on_obj[x][y] = x ⊗ y`, `left_whisker[x][f] = x ⊗ f`
/// and `right_whisker[f][z] = f ⊗ z`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WhiskeredBifunctor {
    pub base: Arc<FinCategory>,
    pub on_obj: Vec<Vec<Obj>>,
    pub left_whisker: Vec<Vec<Mor>>,
    pub right_whisker: Vec<Vec<Mor>>,
}

impl WhiskeredBifunctor {
    pub fn tensor(&self, x: Obj, y: Obj) -> Obj {
        self.on_obj[x.0][y.0]
    }

    pub fn lw(&self, x: Obj, f: Mor) -> Mor {
        self.left_whisker[x.0][f.0]
    }

    pub fn rw(&self, f: Mor, z: Obj) -> Mor {
        self.right_whisker[f.0][z.0]
    }

    /// Table dimensions and index ranges.
    pub(crate) fn validate_shape(&self) -> Result<(), MonoidalError> {
        let (no, nm) = (self.base.object_count(), self.base.morphism_count());
        let ok = self.on_obj.len() == no
            && self.on_obj.iter().all(|row| row.len() == no && row.iter().all(|o| o.0 < no))
            && self.left_whisker.len() == no
            && self
                .left_whisker
                .iter()
                .all(|row| row.len() == nm && row.iter().all(|m| m.0 < nm))
            && self.right_whisker.len() == nm
            && self
                .right_whisker
                .iter()
                .all(|row| row.len() == no && row.iter().all(|m| m.0 < nm));
        if ok {
            Ok(())
        } else {
            Err(MonoidalError::Shape("tensor tables".into()))
        }
    }
}

impl WhiskerOps for WhiskeredBifunctor {
    fn tensor_obj(&self, x: usize, y: usize) -> usize {
        self.on_obj[x][y].0
    }
    fn left_whisker(&self, x: usize, f: usize) -> usize {
        self.left_whisker[x][f].0
    }
    fn right_whisker(&self, f: usize, z: usize) -> usize {
        self.right_whisker[f][z].0
    }
}

/// A bifunctor in the classical presentation: a functor `C × C -> C`.
#[derive(Debug, Clone)]
pub struct ClassicalBifunctor {
    pub product: ProductCategory,
    pub functor: FinFunctor,
}

impl PartialEq for ClassicalBifunctor {
    fn eq(&self, other: &Self) -> bool {
        self.functor == other.functor
    }
}

impl ClassicalBifunctor {
    /// Wraps `functor`, whose source must be `product.category` and whose
    /// target must be both factors of the product.
    pub fn new(product: ProductCategory, functor: FinFunctor) -> Result<Self, MonoidalError> {
        let same = |a: &Arc<FinCategory>, b: &Arc<FinCategory>| Arc::ptr_eq(a, b) || **a == **b;
        if !same(&product.left, &product.right)
            || !same(&product.left, &functor.target)
            || !same(&product.category, &functor.source)
        {
            return Err(MonoidalError::NotABifunctor);
        }
        Ok(Self { product, functor })
    }

    /// Builds the classical form from an object rule and a morphism rule on
    /// pairs; used for fixtures.
    pub fn from_fn(
        base: Arc<FinCategory>,
        on_obj: impl Fn(Obj, Obj) -> Obj,
        on_mor: impl Fn(Mor, Mor) -> Mor,
    ) -> Self {
        let product = product_category(base.clone(), base.clone());
        let p = &product.category;
        let functor = FinFunctor {
            source: p.clone(),
            target: base,
            on_obj: p
                .objects()
                .map(|q| {
                    let (x, y) = product.split_obj(q);
                    on_obj(x, y)
                })
                .collect(),
            on_mor: p
                .morphisms()
                .map(|q| {
                    let (f, g) = product.split_mor(q);
                    on_mor(f, g)
                })
                .collect(),
        };
        Self { product, functor }
    }
}

/// Curries a classical bifunctor: `x ⊗ f = F(id_x, f)`, `f ⊗ z = F(f, id_z)`.
pub fn whiskered_from_classical(f: &ClassicalBifunctor) -> Result<WhiskeredBifunctor, MonoidalError> {
    let p = &f.product;
    let c = p.left.clone();
    let id = |x: Obj| c.identity(x).ok_or(MonoidalError::MissingIdentity(c.obj_name(x).to_string()));
    let mut on_obj = Vec::with_capacity(c.object_count());
    let mut left = Vec::with_capacity(c.object_count());
    for x in c.objects() {
        on_obj.push(c.objects().map(|y| f.functor.obj(p.pair_obj(x, y))).collect());
        let idx = id(x)?;
        left.push(c.morphisms().map(|g| f.functor.mor(p.pair_mor(idx, g))).collect());
    }
    let mut right = Vec::with_capacity(c.morphism_count());
    for g in c.morphisms() {
        right.push(
            c.objects()
                .map(|z| Ok(f.functor.mor(p.pair_mor(g, id(z)?))))
                .collect::<Result<_, MonoidalError>>()?,
        );
    }
    Ok(WhiskeredBifunctor {
        base: c,
        on_obj,
        left_whisker: left,
        right_whisker: right,
    })
}

/// Uncurries a whiskered bifunctor. On a pair `(g: x -> x', f: y -> y')` the
/// result is `(g ⊗ y') ∘ (x ⊗ f)`; fails if that composite is not tabulated.
pub fn classical_from_whiskered(t: &WhiskeredBifunctor) -> Result<ClassicalBifunctor, MonoidalError> {
    t.validate_shape()?;
    let c = t.base.clone();
    let product = product_category(c.clone(), c.clone());
    let p = &product.category;
    let on_obj = p
        .objects()
        .map(|q| {
            let (x, y) = product.split_obj(q);
            t.tensor(x, y)
        })
        .collect();
    let on_mor = p
        .morphisms()
        .map(|q| {
            let (g, f) = product.split_mor(q);
            let (x, y2) = (c.src(g), c.tgt(f));
            c.compose(t.rw(g, y2), t.lw(x, f))
                .ok_or_else(|| MonoidalError::IllTyped(format!("({}, {})", c.mor_name(g), c.mor_name(f))))
        })
        .collect::<Result<_, _>>()?;
    let functor = FinFunctor {
        source: p.clone(),
        target: c,
        on_obj,
        on_mor,
    };
    Ok(ClassicalBifunctor { product, functor })
}

/// Whiskering identity, composition and interchange laws.
pub fn check_whiskered_bifunctor(t: &WhiskeredBifunctor) -> Result<LawReport, MonoidalError> {
    t.validate_shape()?;
    Ok(check_whisker_laws(&*t.base, t))
}
