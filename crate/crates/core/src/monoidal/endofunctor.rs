use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use super::{MonoidalCategory, MonoidalError, WhiskeredBifunctor};
use crate::fincat::{FinCategory, FinFunctor, FinNatTrans, MorphismData, Mor, Obj};

/// Default cap on the number of enumerated endofunctors.
pub const DEFAULT_FUNCTOR_BOUND: usize = 10_000;

/// The monoidal category of endofunctors of a finite category `C`, with
/// composition as tensor. Object `i` of `monoidal.base` is `functors[i]` and
/// morphism `j` is `transformations[j]`.
///
/// The tensor is `F ⊗ G = F ∘ G` (apply `G` first).
#[derive(Debug, Clone)]
pub struct EndofunctorMonoidal {
    pub category: Arc<FinCategory>,
    pub functors: Vec<FinFunctor>,
    pub transformations: Vec<FinNatTrans>,
    pub monoidal: MonoidalCategory,
}

impl EndofunctorMonoidal {
    pub fn functor_index(&self, f: &FinFunctor) -> Option<Obj> {
        self.functors.iter().position(|g| g == f).map(Obj)
    }

    pub fn transformation_index(&self, t: &FinNatTrans) -> Option<Mor> {
        self.transformations.iter().position(|s| s == t).map(Mor)
    }

    pub fn functor_named(&self, name: &str) -> Option<Obj> {
        self.monoidal.base.obj(name)
    }
}

fn compose_functors(g: &FinFunctor, f: &FinFunctor) -> FinFunctor {
    FinFunctor {
        source: f.source.clone(),
        target: g.target.clone(),
        on_obj: f.on_obj.iter().map(|&x| g.obj(x)).collect(),
        on_mor: f.on_mor.iter().map(|&m| g.mor(m)).collect(),
    }
}

/// All functors `C -> C`, in lexicographic order of their tables.
pub fn enumerate_endofunctors(c: &Arc<FinCategory>, bound: usize) -> Result<Vec<FinFunctor>, MonoidalError> {
    let mut out = Vec::new();
    let mut on_obj = vec![Obj(0); c.object_count()];

    fn assign_mors(
        c: &Arc<FinCategory>,
        on_obj: &[Obj],
        i: usize,
        on_mor: &mut Vec<Mor>,
        out: &mut Vec<FinFunctor>,
        bound: usize,
    ) -> Result<(), MonoidalError> {
        if i == c.morphism_count() {
            let f = FinFunctor {
                source: c.clone(),
                target: c.clone(),
                on_obj: on_obj.to_vec(),
                on_mor: on_mor.clone(),
            };
            let preserves_comp = c
                .composition_table()
                .iter()
                .all(|(&(g, h), &gh)| c.compose(f.mor(g), f.mor(h)) == Some(f.mor(gh)));
            if preserves_comp {
                if out.len() == bound {
                    return Err(MonoidalError::EnumerationOverflow(bound));
                }
                out.push(f);
            }
            return Ok(());
        }
        let m = Mor(i);
        let (x, y) = (on_obj[c.src(m).0], on_obj[c.tgt(m).0]);
        let is_identity = c.objects().any(|o| c.identity(o) == Some(m));
        for &cand in c.hom(x, y) {
            if is_identity && Some(cand) != c.identity(x) {
                continue;
            }
            on_mor.push(cand);
            assign_mors(c, on_obj, i + 1, on_mor, out, bound)?;
            on_mor.pop();
        }
        Ok(())
    }

    fn assign_objs(
        c: &Arc<FinCategory>,
        on_obj: &mut Vec<Obj>,
        i: usize,
        out: &mut Vec<FinFunctor>,
        bound: usize,
    ) -> Result<(), MonoidalError> {
        if i == on_obj.len() {
            let mut on_mor = Vec::with_capacity(c.morphism_count());
            return assign_mors(c, on_obj, 0, &mut on_mor, out, bound);
        }
        for y in c.objects() {
            on_obj[i] = y;
            assign_objs(c, on_obj, i + 1, out, bound)?;
        }
        Ok(())
    }

    assign_objs(c, &mut on_obj, 0, &mut out, bound)?;
    Ok(out)
}

/// All natural transformations `f => g`.
pub fn enumerate_transformations(f: &FinFunctor, g: &FinFunctor) -> Vec<FinNatTrans> {
    let c = &f.source;
    let d = &f.target;
    let choices: Vec<&[Mor]> = c.objects().map(|x| d.hom(f.obj(x), g.obj(x))).collect();
    let mut out = Vec::new();
    let mut comps = Vec::with_capacity(choices.len());

    fn go(
        i: usize,
        choices: &[&[Mor]],
        comps: &mut Vec<Mor>,
        f: &FinFunctor,
        g: &FinFunctor,
        out: &mut Vec<FinNatTrans>,
    ) {
        if i == choices.len() {
            let (c, d) = (&f.source, &f.target);
            let natural = c.morphisms().all(|m| {
                let (x, y) = (c.src(m), c.tgt(m));
                let lhs = d.compose(g.mor(m), comps[x.0]);
                lhs.is_some() && lhs == d.compose(comps[y.0], f.mor(m))
            });
            if natural {
                out.push(FinNatTrans {
                    source: f.clone(),
                    target: g.clone(),
                    components: comps.clone(),
                });
            }
            return;
        }
        for &m in choices[i] {
            comps.push(m);
            go(i + 1, choices, comps, f, g, out);
            comps.pop();
        }
    }

    go(0, &choices, &mut comps, f, g, &mut out);
    out
}

fn functor_name(c: &FinCategory, f: &FinFunctor, k: usize) -> String {
    if f.is_identity() {
        return "Id".into();
    }
    let first = f.on_obj.first().copied();
    if let Some(x) = first {
        let constant = f.on_obj.iter().all(|&y| y == x)
            && f.on_mor.iter().all(|&m| Some(m) == c.identity(x));
        if constant {
            return format!("const_{}", c.obj_name(x));
        }
    }
    format!("F{k}")
}

/// Materializes the endofunctor monoidal category of `c` by enumeration.
///
/// Unitors and associators are the pointwise-identity transformations
/// `Id ∘ F => F`, `F ∘ Id => F` and `(F ∘ G) ∘ H => F ∘ (G ∘ H)`; functor
/// composition is strictly associative and unital on tables, so these are
/// identity morphisms of the enumerated category.
pub fn endofunctor_monoidal(c: Arc<FinCategory>, bound: usize) -> Result<EndofunctorMonoidal, MonoidalError> {
    let functors = enumerate_endofunctors(&c, bound)?;
    let index: HashMap<(Vec<Obj>, Vec<Mor>), usize> = functors
        .iter()
        .enumerate()
        .map(|(i, f)| ((f.on_obj.clone(), f.on_mor.clone()), i))
        .collect();
    let find = |f: &FinFunctor| -> Result<usize, MonoidalError> {
        index
            .get(&(f.on_obj.clone(), f.on_mor.clone()))
            .copied()
            .ok_or_else(|| MonoidalError::Internal("composite functor not enumerated".into()))
    };
    let names: Vec<String> = {
        let mut k = 0;
        functors
            .iter()
            .map(|f| {
                let n = functor_name(&c, f, k);
                if n.starts_with('F') {
                    k += 1;
                }
                n
            })
            .collect()
    };

    let mut transformations = Vec::new();
    let mut morphisms = Vec::new();
    let mut identity = vec![None; functors.len()];
    let mut nt_index: HashMap<(usize, usize, Vec<Mor>), usize> = HashMap::new();
    for (i, f) in functors.iter().enumerate() {
        for (j, g) in functors.iter().enumerate() {
            let ts = enumerate_transformations(f, g);
            let several = ts.len() > 1;
            for (k, t) in ts.into_iter().enumerate() {
                let is_id = i == j && t == FinNatTrans::identity(f);
                let id = if is_id {
                    identity[i] = Some(Mor(morphisms.len()));
                    format!("id_{}", names[i])
                } else if several {
                    format!("{}=>{}#{k}", names[i], names[j])
                } else {
                    format!("{}=>{}", names[i], names[j])
                };
                if transformations.len() == bound {
                    return Err(MonoidalError::EnumerationOverflow(bound));
                }
                nt_index.insert((i, j, t.components.clone()), morphisms.len());
                morphisms.push(MorphismData {
                    id,
                    src: Obj(i),
                    tgt: Obj(j),
                });
                transformations.push(t);
            }
        }
    }
    let find_nt = |src: usize, tgt: usize, comps: Vec<Mor>| -> Result<Mor, MonoidalError> {
        nt_index
            .get(&(src, tgt, comps))
            .map(|&m| Mor(m))
            .ok_or_else(|| MonoidalError::Internal("transformation not enumerated".into()))
    };

    let mut comp = BTreeMap::new();
    for (a, alpha) in transformations.iter().enumerate() {
        for (b, beta) in transformations.iter().enumerate() {
            // beta ∘ alpha
            if morphisms[a].tgt != morphisms[b].src {
                continue;
            }
            let comps = c
                .objects()
                .map(|x| {
                    c.compose(beta.component(x), alpha.component(x))
                        .ok_or_else(|| MonoidalError::Internal("vertical composite".into()))
                })
                .collect::<Result<Vec<_>, _>>()?;
            let r = find_nt(morphisms[a].src.0, morphisms[b].tgt.0, comps)?;
            comp.insert((Mor(b), Mor(a)), r);
        }
    }

    let base = Arc::new(
        FinCategory::from_parts(names.clone(), morphisms.clone(), identity, comp)
            .map_err(|e| MonoidalError::Internal(e.to_string()))?,
    );

    let n = functors.len();
    let mut on_obj = vec![vec![Obj(0); n]; n];
    for (i, f) in functors.iter().enumerate() {
        for (j, g) in functors.iter().enumerate() {
            on_obj[i][j] = Obj(find(&compose_functors(f, g))?);
        }
    }
    // F ⊗ β : F∘G => F∘G', components F(β_x).
    let mut left = vec![Vec::with_capacity(transformations.len()); n];
    for (i, f) in functors.iter().enumerate() {
        for (b, beta) in transformations.iter().enumerate() {
            let comps = beta.components.iter().map(|&m| f.mor(m)).collect();
            let (s, t) = (morphisms[b].src.0, morphisms[b].tgt.0);
            left[i].push(find_nt(on_obj[i][s].0, on_obj[i][t].0, comps)?);
        }
    }
    // α ⊗ H : F∘H => F'∘H, components α_{H x}.
    let mut right = Vec::with_capacity(transformations.len());
    for (a, alpha) in transformations.iter().enumerate() {
        let (s, t) = (morphisms[a].src.0, morphisms[a].tgt.0);
        let mut row = Vec::with_capacity(n);
        for (h, hf) in functors.iter().enumerate() {
            let comps = c.objects().map(|x| alpha.component(hf.obj(x))).collect();
            row.push(find_nt(on_obj[s][h].0, on_obj[t][h].0, comps)?);
        }
        right.push(row);
    }

    let unit = Obj(
        functors
            .iter()
            .position(FinFunctor::is_identity)
            .ok_or_else(|| MonoidalError::Internal("identity functor missing".into()))?,
    );
    // Pointwise identity transformation between two equal functor tables.
    let pointwise_id = |src: Obj, tgt: Obj| -> Result<Mor, MonoidalError> {
        let f = &functors[src.0];
        let comps = f.on_obj.iter().map(|&x| c.id(x)).collect();
        find_nt(src.0, tgt.0, comps)
    };
    let mut lunitor = Vec::with_capacity(n);
    let mut runitor = Vec::with_capacity(n);
    for (i, row) in on_obj.iter().enumerate() {
        lunitor.push(pointwise_id(on_obj[unit.0][i], Obj(i))?);
        runitor.push(pointwise_id(row[unit.0], Obj(i))?);
    }
    let mut associator = Vec::with_capacity(n * n * n);
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let src = on_obj[on_obj[x][y].0][z];
                let tgt = on_obj[x][on_obj[y][z].0];
                associator.push(pointwise_id(src, tgt)?);
            }
        }
    }

    let tensor = WhiskeredBifunctor {
        base: base.clone(),
        on_obj,
        left_whisker: left,
        right_whisker: right,
    };
    let monoidal = MonoidalCategory {
        base,
        unit,
        tensor,
        lunitor_inv: lunitor.clone(),
        lunitor,
        runitor_inv: runitor.clone(),
        runitor,
        associator_inv: associator.clone(),
        associator,
    };
    Ok(EndofunctorMonoidal {
        category: c,
        functors,
        transformations,
        monoidal,
    })
}
