use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{FinCategory, FincatError, MorphismData, Mor};

/// On-disk form of a [`FinCategory`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CategoryDoc {
    pub objects: Vec<String>,
    pub morphisms: Vec<MorphismDoc>,
    pub identity: BTreeMap<String, String>,
    pub comp: Vec<CompDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismDoc {
    pub id: String,
    pub src: String,
    pub tgt: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CompDoc {
    pub after: String,
    pub first: String,
    pub result: String,
}

impl FinCategory {
    pub fn from_doc(doc: &CategoryDoc) -> Result<Self, FincatError> {
        let obj = |id: &str| {
            doc.objects
                .iter()
                .position(|o| o == id)
                .map(super::Obj)
                .ok_or_else(|| FincatError::Dangling {
                    kind: "object",
                    id: id.to_string(),
                })
        };
        let morphisms = doc
            .morphisms
            .iter()
            .map(|m| {
                Ok(MorphismData {
                    id: m.id.clone(),
                    src: obj(&m.src)?,
                    tgt: obj(&m.tgt)?,
                })
            })
            .collect::<Result<Vec<_>, FincatError>>()?;
        let mor = |id: &str| {
            morphisms
                .iter()
                .position(|m| m.id == id)
                .map(Mor)
                .ok_or_else(|| FincatError::Dangling {
                    kind: "morphism",
                    id: id.to_string(),
                })
        };
        for key in doc.identity.keys() {
            obj(key)?;
        }
        let identity = doc
            .objects
            .iter()
            .map(|o| doc.identity.get(o).map(|m| mor(m)).transpose())
            .collect::<Result<Vec<_>, _>>()?;
        let mut comp = BTreeMap::new();
        for c in &doc.comp {
            let key = (mor(&c.after)?, mor(&c.first)?);
            let result = mor(&c.result)?;
            if let Some(prev) = comp.insert(key, result) {
                if prev != result {
                    return Err(FincatError::ConflictingComposite {
                        after: c.after.clone(),
                        first: c.first.clone(),
                    });
                }
            }
        }
        FinCategory::from_parts(doc.objects.clone(), morphisms, identity, comp)
    }

    pub fn from_json(text: &str) -> Result<Self, FincatError> {
        let doc: CategoryDoc =
            serde_json::from_str(text).map_err(|e| FincatError::Document(e.to_string()))?;
        Self::from_doc(&doc)
    }

    pub fn to_doc(&self) -> CategoryDoc {
        CategoryDoc {
            objects: self.object_names().to_vec(),
            morphisms: self
                .morphism_data()
                .iter()
                .map(|m| MorphismDoc {
                    id: m.id.clone(),
                    src: self.obj_name(m.src).to_string(),
                    tgt: self.obj_name(m.tgt).to_string(),
                })
                .collect(),
            identity: self
                .objects()
                .filter_map(|x| {
                    self.identity(x)
                        .map(|m| (self.obj_name(x).to_string(), self.mor_name(m).to_string()))
                })
                .collect(),
            comp: self
                .composition_table()
                .iter()
                .map(|(&(g, f), &r)| CompDoc {
                    after: self.mor_name(g).to_string(),
                    first: self.mor_name(f).to_string(),
                    result: self.mor_name(r).to_string(),
                })
                .collect(),
        }
    }
}
