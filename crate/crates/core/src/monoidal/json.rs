use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::{MonoidalCategory, MonoidalError, WhiskeredBifunctor};
use crate::fincat::{CategoryDoc, CompDoc, FinCategory, FincatError, MorphismDoc, Mor, Obj};

/// On-disk form of a [`MonoidalCategory`]: the category document plus
/// unit, tensor tables and structural isomorphisms, all by id.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MonoidalDoc {
    pub objects: Vec<String>,
    pub morphisms: Vec<MorphismDoc>,
    pub identity: BTreeMap<String, String>,
    pub comp: Vec<CompDoc>,
    pub unit: String,
    pub tensor: TensorDoc,
    pub lunitor: BTreeMap<String, String>,
    pub lunitor_inv: BTreeMap<String, String>,
    pub runitor: BTreeMap<String, String>,
    pub runitor_inv: BTreeMap<String, String>,
    pub associator: Vec<AssociatorDoc>,
    pub associator_inv: Vec<AssociatorDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TensorDoc {
    pub objects: Vec<TensorObjDoc>,
    pub left_whisker: Vec<LeftWhiskerDoc>,
    pub right_whisker: Vec<RightWhiskerDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TensorObjDoc {
    pub left: String,
    pub right: String,
    pub result: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LeftWhiskerDoc {
    pub object: String,
    pub morphism: String,
    pub result: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RightWhiskerDoc {
    pub morphism: String,
    pub object: String,
    pub result: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AssociatorDoc {
    pub objects: [String; 3],
    pub morphism: String,
}

fn dangling(kind: &'static str, id: &str) -> MonoidalError {
    FincatError::Dangling {
        kind,
        id: id.to_string(),
    }
    .into()
}

fn missing(what: String) -> MonoidalError {
    MonoidalError::Shape(format!("table: no entry for {what}"))
}

/// Fills a dense table from sparse entries, rejecting conflicts and gaps.
fn dense<K: Ord + Copy, V: PartialEq + Copy>(
    keys: impl Iterator<Item = K>,
    entries: Vec<(K, V)>,
    label: impl Fn(K) -> String,
) -> Result<Vec<V>, MonoidalError> {
    let mut map = BTreeMap::new();
    for (k, v) in entries {
        if let Some(prev) = map.insert(k, v) {
            if prev != v {
                return Err(MonoidalError::Shape(format!("conflicting entries for {}", label(k))));
            }
        }
    }
    keys.map(|k| map.get(&k).copied().ok_or_else(|| missing(label(k))))
        .collect()
}

impl MonoidalCategory {
    pub fn from_doc(doc: &MonoidalDoc) -> Result<Self, MonoidalError> {
        let base = Arc::new(FinCategory::from_doc(&CategoryDoc {
            objects: doc.objects.clone(),
            morphisms: doc.morphisms.clone(),
            identity: doc.identity.clone(),
            comp: doc.comp.clone(),
        })?);
        let c = &*base;
        let obj = |s: &str| c.obj(s).ok_or_else(|| dangling("object", s));
        let mor = |s: &str| c.mor(s).ok_or_else(|| dangling("morphism", s));
        let no = c.object_count();

        let on_obj_flat = dense(
            (0..no).flat_map(|x| (0..no).map(move |y| (x, y))),
            doc.tensor
                .objects
                .iter()
                .map(|e| Ok(((obj(&e.left)?.0, obj(&e.right)?.0), obj(&e.result)?)))
                .collect::<Result<_, MonoidalError>>()?,
            |(x, y)| format!("tensor ({}, {})", c.obj_name(Obj(x)), c.obj_name(Obj(y))),
        )?;
        let left_flat = dense(
            (0..no).flat_map(|x| c.morphisms().map(move |f| (x, f.0))),
            doc.tensor
                .left_whisker
                .iter()
                .map(|e| Ok(((obj(&e.object)?.0, mor(&e.morphism)?.0), mor(&e.result)?)))
                .collect::<Result<_, MonoidalError>>()?,
            |(x, f)| format!("left_whisker ({}, {})", c.obj_name(Obj(x)), c.mor_name(Mor(f))),
        )?;
        let right_flat = dense(
            c.morphisms().flat_map(|f| (0..no).map(move |z| (f.0, z))),
            doc.tensor
                .right_whisker
                .iter()
                .map(|e| Ok(((mor(&e.morphism)?.0, obj(&e.object)?.0), mor(&e.result)?)))
                .collect::<Result<_, MonoidalError>>()?,
            |(f, z)| format!("right_whisker ({}, {})", c.mor_name(Mor(f)), c.obj_name(Obj(z))),
        )?;
        let per_obj = |name: &str, m: &BTreeMap<String, String>| {
            dense(
                0..no,
                m.iter()
                    .map(|(k, v)| Ok((obj(k)?.0, mor(v)?)))
                    .collect::<Result<_, MonoidalError>>()?,
                |x| format!("{name} at {}", c.obj_name(Obj(x))),
            )
        };
        let per_triple = |name: &str, v: &[AssociatorDoc]| {
            dense(
                0..no * no * no,
                v.iter()
                    .map(|e| {
                        let [x, y, z] = &e.objects;
                        Ok((((obj(x)?.0 * no) + obj(y)?.0) * no + obj(z)?.0, mor(&e.morphism)?))
                    })
                    .collect::<Result<_, MonoidalError>>()?,
                |i| {
                    format!(
                        "{name} at ({}, {}, {})",
                        c.obj_name(Obj(i / (no * no))),
                        c.obj_name(Obj(i / no % no)),
                        c.obj_name(Obj(i % no))
                    )
                },
            )
        };
        let nm = c.morphism_count();
        let tensor = WhiskeredBifunctor {
            base: base.clone(),
            on_obj: on_obj_flat.chunks(no.max(1)).map(<[Obj]>::to_vec).collect(),
            left_whisker: left_flat.chunks(nm.max(1)).map(<[Mor]>::to_vec).collect(),
            right_whisker: right_flat.chunks(no.max(1)).map(<[Mor]>::to_vec).collect(),
        };
        let m = MonoidalCategory {
            unit: obj(&doc.unit)?,
            tensor,
            lunitor: per_obj("lunitor", &doc.lunitor)?,
            lunitor_inv: per_obj("lunitor_inv", &doc.lunitor_inv)?,
            runitor: per_obj("runitor", &doc.runitor)?,
            runitor_inv: per_obj("runitor_inv", &doc.runitor_inv)?,
            associator: per_triple("associator", &doc.associator)?,
            associator_inv: per_triple("associator_inv", &doc.associator_inv)?,
            base,
        };
        m.validate_shape()?;
        Ok(m)
    }

    pub fn from_json(text: &str) -> Result<Self, MonoidalError> {
        let doc: MonoidalDoc = serde_json::from_str(text)
            .map_err(|e| MonoidalError::Fincat(FincatError::Document(e.to_string())))?;
        Self::from_doc(&doc)
    }

    pub fn to_doc(&self) -> MonoidalDoc {
        let c = &*self.base;
        let on = |x: Obj| c.obj_name(x).to_string();
        let mn = |f: Mor| c.mor_name(f).to_string();
        let cat = c.to_doc();
        let per_obj = |v: &[Mor]| c.objects().map(|x| (on(x), mn(v[x.0]))).collect();
        let mut triples = Vec::new();
        for x in c.objects() {
            for y in c.objects() {
                for z in c.objects() {
                    triples.push((x, y, z));
                }
            }
        }
        let per_triple = |f: &dyn Fn(Obj, Obj, Obj) -> Mor| {
            triples
                .iter()
                .map(|&(x, y, z)| AssociatorDoc {
                    objects: [on(x), on(y), on(z)],
                    morphism: mn(f(x, y, z)),
                })
                .collect()
        };
        MonoidalDoc {
            objects: cat.objects,
            morphisms: cat.morphisms,
            identity: cat.identity,
            comp: cat.comp,
            unit: on(self.unit),
            tensor: TensorDoc {
                objects: c
                    .objects()
                    .flat_map(|x| c.objects().map(move |y| (x, y)))
                    .map(|(x, y)| TensorObjDoc {
                        left: on(x),
                        right: on(y),
                        result: on(self.tensor(x, y)),
                    })
                    .collect(),
                left_whisker: c
                    .objects()
                    .flat_map(|x| c.morphisms().map(move |f| (x, f)))
                    .map(|(x, f)| LeftWhiskerDoc {
                        object: on(x),
                        morphism: mn(f),
                        result: mn(self.tensor.lw(x, f)),
                    })
                    .collect(),
                right_whisker: c
                    .morphisms()
                    .flat_map(|f| c.objects().map(move |z| (f, z)))
                    .map(|(f, z)| RightWhiskerDoc {
                        morphism: mn(f),
                        object: on(z),
                        result: mn(self.tensor.rw(f, z)),
                    })
                    .collect(),
            },
            lunitor: per_obj(&self.lunitor),
            lunitor_inv: per_obj(&self.lunitor_inv),
            runitor: per_obj(&self.runitor),
            runitor_inv: per_obj(&self.runitor_inv),
            associator: per_triple(&|x, y, z| self.associator_at(x, y, z)),
            associator_inv: per_triple(&|x, y, z| self.associator_inv_at(x, y, z)),
        }
    }
}
