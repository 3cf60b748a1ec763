use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::{DispMor, DispMorData, DispObj, DispObjData, DisplayedCategory, DisplayedError};
use crate::fincat::{CompDoc, FinCategory, FincatError};

/// On-disk form of a [`DisplayedCategory`]. `base` is the path of a
/// category document, relative to this document's directory.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DisplayedDoc {
    pub base: String,
    pub fibers: BTreeMap<String, Vec<String>>,
    pub homs: BTreeMap<String, Vec<DispMorDoc>>,
    pub identity: BTreeMap<String, String>,
    pub comp: Vec<CompDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DispMorDoc {
    pub id: String,
    pub src: String,
    pub tgt: String,
}

fn dangling(kind: &'static str, id: &str) -> DisplayedError {
    DisplayedError::Dangling {
        kind,
        id: id.to_string(),
    }
}

impl DisplayedCategory {
    /// Objects are ordered by base object, then by fiber list; morphisms
    /// likewise by base morphism.
    pub fn from_doc(doc: &DisplayedDoc, base: Arc<FinCategory>) -> Result<Self, DisplayedError> {
        for key in doc.fibers.keys() {
            base.obj(key).ok_or_else(|| dangling("base object", key))?;
        }
        for key in doc.homs.keys() {
            base.mor(key).ok_or_else(|| dangling("base morphism", key))?;
        }
        let mut objects = Vec::new();
        for x in base.objects() {
            for id in doc.fibers.get(base.obj_name(x)).into_iter().flatten() {
                objects.push(DispObjData { id: id.clone(), over: x });
            }
        }
        let dobj = |id: &str| {
            objects
                .iter()
                .position(|o: &DispObjData| o.id == id)
                .map(DispObj)
                .ok_or_else(|| dangling("displayed object", id))
        };
        let mut morphisms = Vec::new();
        for f in base.morphisms() {
            for m in doc.homs.get(base.mor_name(f)).into_iter().flatten() {
                morphisms.push(DispMorData {
                    id: m.id.clone(),
                    over: f,
                    src: dobj(&m.src)?,
                    tgt: dobj(&m.tgt)?,
                });
            }
        }
        let dmor = |id: &str| {
            morphisms
                .iter()
                .position(|m: &DispMorData| m.id == id)
                .map(DispMor)
                .ok_or_else(|| dangling("displayed morphism", id))
        };
        for key in doc.identity.keys() {
            dobj(key)?;
        }
        let identity = objects
            .iter()
            .map(|o| doc.identity.get(&o.id).map(|m| dmor(m)).transpose())
            .collect::<Result<Vec<_>, _>>()?;
        let mut comp = BTreeMap::new();
        for c in &doc.comp {
            let key = (dmor(&c.after)?, dmor(&c.first)?);
            let result = dmor(&c.result)?;
            if comp.insert(key, result).is_some_and(|prev| prev != result) {
                return Err(DisplayedError::Shape(format!(
                    "conflicting composition entries for ({}, {})",
                    c.after, c.first
                )));
            }
        }
        DisplayedCategory::new(base, objects, morphisms, identity, comp)
    }

    /// Reads a displayed document and the base category it points to.
    pub fn load(path: &Path) -> Result<Self, DisplayedError> {
        let read = |p: &Path| {
            std::fs::read_to_string(p).map_err(|e| DisplayedError::Io {
                path: p.display().to_string(),
                message: e.to_string(),
            })
        };
        let doc: DisplayedDoc =
            serde_json::from_str(&read(path)?).map_err(|e| FincatError::Document(e.to_string()))?;
        let base_path = path.parent().unwrap_or(Path::new(".")).join(&doc.base);
        let base = FinCategory::from_json(&read(&base_path)?)?;
        Self::from_doc(&doc, Arc::new(base))
    }

    pub fn to_doc(&self, base_path: &str) -> DisplayedDoc {
        let b = &*self.base;
        let mut fibers: BTreeMap<String, Vec<String>> = BTreeMap::new();
        for o in &self.objects {
            fibers.entry(b.obj_name(o.over).to_string()).or_default().push(o.id.clone());
        }
        let mut homs: BTreeMap<String, Vec<DispMorDoc>> = BTreeMap::new();
        for m in &self.morphisms {
            homs.entry(b.mor_name(m.over).to_string()).or_default().push(DispMorDoc {
                id: m.id.clone(),
                src: self.objects[m.src.0].id.clone(),
                tgt: self.objects[m.tgt.0].id.clone(),
            });
        }
        let identity = self
            .objects
            .iter()
            .zip(&self.identity)
            .filter_map(|(o, m)| m.map(|m| (o.id.clone(), self.morphisms[m.0].id.clone())))
            .collect();
        let comp = self
            .comp
            .iter()
            .map(|(&(g, f), &r)| CompDoc {
                after: self.morphisms[g.0].id.clone(),
                first: self.morphisms[f.0].id.clone(),
                result: self.morphisms[r.0].id.clone(),
            })
            .collect();
        DisplayedDoc {
            base: base_path.to_string(),
            fibers,
            homs,
            identity,
            comp,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::displayed::category::tests::three_object;

    #[test]
    fn round_trip_through_files() {
        let dir = tempfile::tempdir().unwrap();
        let d = three_object();
        let base = serde_json::to_string(&d.base.to_doc()).unwrap();
        std::fs::write(dir.path().join("base.json"), base).unwrap();
        let doc = serde_json::to_string(&d.to_doc("base.json")).unwrap();
        let path = dir.path().join("disp.json");
        std::fs::write(&path, doc).unwrap();
        assert_eq!(DisplayedCategory::load(&path).unwrap(), d);
    }

    #[test]
    fn missing_base_file_is_an_io_error() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("disp.json");
        std::fs::write(&path, serde_json::to_string(&three_object().to_doc("nope.json")).unwrap()).unwrap();
        assert!(matches!(DisplayedCategory::load(&path), Err(DisplayedError::Io { .. })));
    }

    #[test]
    fn fiber_keyed_by_unknown_object_is_dangling() {
        let d = three_object();
        let mut doc = d.to_doc("base.json");
        doc.fibers.insert("zzz".into(), vec!["r".into()]);
        assert!(matches!(
            DisplayedCategory::from_doc(&doc, d.base.clone()),
            Err(DisplayedError::Dangling { .. })
        ));
    }
}
