//! SSJ: a canonical JSON interchange format for simplicial sets with
//! optional group, action, and retractive structure.
//!
//! Canonical form: struct fields in declaration order, map keys sorted,
//! two-space pretty printing, no floating point anywhere, and a trailing
//! newline.  Documents produced by `to_canonical_json` round-trip
//! byte-identically through `from_json`.

use crate::error::{Error, Result};
use crate::fincat::Group;
use crate::retract::{REnv, RObj};
use crate::sset::{DeltaOp, Gen, GroupAction, SMap, SSet, Simplex};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// A simplex as a degeneracy word applied to a named generator.  The
/// word lists the s_j indices in application order (innermost last), so
/// `[1, 0]` with target `v` denotes s₁ s₀ v.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct SsjSimplex(pub Vec<usize>, pub String);

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct SsjGen {
    pub id: String,
    pub dim: usize,
}

/// A finite group given by its labelled multiplication table; row g,
/// column h holds the label of g·h, and the first label is the unit.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct SsjGroup {
    pub labels: Vec<String>,
    pub mul: Vec<Vec<String>>,
}

/// Retractive structure over a base simplicial set contained in the same
/// document: the retraction maps total generators to base simplices, the
/// section maps base generators to total simplices.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct SsjBase {
    pub generators: Vec<SsjGen>,
    pub faces: BTreeMap<String, Vec<SsjSimplex>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub action: Option<BTreeMap<String, Vec<String>>>,
    pub retraction: BTreeMap<String, SsjSimplex>,
    pub section: BTreeMap<String, SsjSimplex>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct SsjDocument {
    pub name: String,
    pub generators: Vec<SsjGen>,
    pub faces: BTreeMap<String, Vec<SsjSimplex>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub group: Option<SsjGroup>,
    /// per group element label, the generator images of all generators
    #[serde(skip_serializing_if = "Option::is_none")]
    pub action: Option<BTreeMap<String, Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub base: Option<SsjBase>,
}

pub fn to_canonical_json(doc: &SsjDocument) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("document serialises");
    s.push('\n');
    s
}

pub fn from_json(text: &str) -> Result<SsjDocument> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

fn simplex_out(x: &SSet, s: &Simplex) -> SsjSimplex {
    SsjSimplex(s.surj.degeneracy_word(), x.gen_label(s.gen).to_string())
}

fn simplex_in(
    x: &SSet,
    index: &BTreeMap<String, usize>,
    s: &SsjSimplex,
) -> Result<Simplex> {
    let id = *index
        .get(&s.1)
        .ok_or_else(|| Error::Parse(format!("unknown generator `{}`", s.1)))?;
    let dim = x.gens()[id].dim;
    let surj = DeltaOp::from_degeneracy_word(&s.0, dim + s.0.len())?;
    Ok(Simplex { surj, gen: id })
}

fn space_out(x: &SSet) -> (Vec<SsjGen>, BTreeMap<String, Vec<SsjSimplex>>) {
    let generators = x
        .gens()
        .iter()
        .map(|g| SsjGen { id: g.label.clone(), dim: g.dim })
        .collect();
    let mut faces = BTreeMap::new();
    for g in x.gens() {
        if g.dim > 0 {
            faces.insert(
                g.label.clone(),
                g.faces.iter().map(|f| simplex_out(x, f)).collect(),
            );
        }
    }
    (generators, faces)
}

fn space_in(
    generators: &[SsjGen],
    faces: &BTreeMap<String, Vec<SsjSimplex>>,
) -> Result<SSet> {
    let index: BTreeMap<String, usize> = generators
        .iter()
        .enumerate()
        .map(|(i, g)| (g.id.clone(), i))
        .collect();
    if index.len() != generators.len() {
        return Err(Error::Parse("duplicate generator id".into()));
    }
    for key in faces.keys() {
        if !index.contains_key(key) {
            return Err(Error::Parse(format!("faces given for unknown generator `{key}`")));
        }
    }
    let mut gens = Vec::new();
    for g in generators {
        let entry = faces.get(&g.id);
        let listed = entry.map(|v| v.len()).unwrap_or(0);
        if g.dim == 0 && listed != 0 {
            return Err(Error::Parse(format!("0-generator `{}` has faces", g.id)));
        }
        if g.dim > 0 && listed != g.dim + 1 {
            return Err(Error::Parse(format!(
                "generator `{}` needs {} faces, found {listed}",
                g.id,
                g.dim + 1
            )));
        }
        let mut gfaces = Vec::new();
        if let Some(list) = entry {
            for s in list {
                let id = *index
                    .get(&s.1)
                    .ok_or_else(|| Error::Parse(format!("unknown generator `{}`", s.1)))?;
                let dim = generators[id].dim;
                let surj = DeltaOp::from_degeneracy_word(&s.0, dim + s.0.len())?;
                gfaces.push(Simplex { surj, gen: id });
            }
        }
        gens.push(Gen { label: g.id.clone(), dim: g.dim, faces: gfaces });
    }
    SSet::new(gens)
}

fn group_out(g: &Group) -> SsjGroup {
    let labels: Vec<String> = g.elements().map(|h| g.label(h).to_string()).collect();
    let mul = g
        .elements()
        .map(|a| g.elements().map(|b| g.label(g.mul(a, b)).to_string()).collect())
        .collect();
    SsjGroup { labels, mul }
}

fn group_in(sg: &SsjGroup) -> Result<Group> {
    let index: BTreeMap<&str, usize> =
        sg.labels.iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect();
    let mut table = Vec::new();
    for row in &sg.mul {
        table.push(
            row.iter()
                .map(|l| {
                    index
                        .get(l.as_str())
                        .copied()
                        .ok_or_else(|| Error::Parse(format!("unknown group element `{l}`")))
                })
                .collect::<Result<Vec<_>>>()?,
        );
    }
    Group::from_table(sg.labels.clone(), table)
}

fn action_out(x: &SSet, action: &GroupAction) -> BTreeMap<String, Vec<String>> {
    let mut out = BTreeMap::new();
    for g in action.group.elements() {
        out.insert(
            action.group.label(g).to_string(),
            (0..x.gen_count())
                .map(|id| x.gen_label(action.act_gen(id, g)).to_string())
                .collect(),
        );
    }
    out
}

fn action_in(
    x: &SSet,
    group: &Group,
    table: &BTreeMap<String, Vec<String>>,
) -> Result<GroupAction> {
    let mut maps = Vec::new();
    for g in group.elements() {
        let row = table
            .get(group.label(g))
            .ok_or_else(|| Error::Parse(format!("action missing element `{}`", group.label(g))))?;
        if row.len() != x.gen_count() {
            return Err(Error::Parse("action row length mismatch".into()));
        }
        let images = row
            .iter()
            .map(|l| {
                x.find_gen(l)
                    .map(|id| Simplex::gen(id, x.gens()[id].dim))
                    .ok_or_else(|| Error::Parse(format!("unknown generator `{l}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        maps.push(SMap { images });
    }
    GroupAction::new(group.clone(), maps, x)
}

fn map_out(src: &SSet, tgt: &SSet, m: &SMap) -> BTreeMap<String, SsjSimplex> {
    src.gens()
        .iter()
        .zip(&m.images)
        .map(|(g, im)| (g.label.clone(), simplex_out(tgt, im)))
        .collect()
}

fn map_in(
    src: &SSet,
    tgt: &SSet,
    table: &BTreeMap<String, SsjSimplex>,
) -> Result<SMap> {
    let tindex: BTreeMap<String, usize> = tgt
        .gens()
        .iter()
        .enumerate()
        .map(|(i, g)| (g.label.clone(), i))
        .collect();
    let images = src
        .gens()
        .iter()
        .map(|g| {
            let s = table
                .get(&g.label)
                .ok_or_else(|| Error::Parse(format!("map missing generator `{}`", g.label)))?;
            simplex_in(tgt, &tindex, s)
        })
        .collect::<Result<Vec<_>>>()?;
    let m = SMap { images };
    m.validate(src, tgt)?;
    Ok(m)
}

/// Serialises a bare simplicial set, optionally with a group action.
pub fn space_to_doc(name: &str, x: &SSet, action: Option<&GroupAction>) -> SsjDocument {
    let (generators, faces) = space_out(x);
    let (group, action) = match action {
        Some(a) if a.group.order() > 1 => {
            (Some(group_out(&a.group)), Some(action_out(x, a)))
        }
        _ => (None, None),
    };
    SsjDocument { name: name.to_string(), generators, faces, group, action, base: None }
}

/// Serialises a retractive object together with its base environment.
pub fn robj_to_doc(name: &str, env: &REnv, y: &RObj) -> SsjDocument {
    let mut doc = space_to_doc(name, &y.total, Some(&y.action));
    let (bgens, bfaces) = space_out(&env.w);
    let baction = if env.group().order() > 1 {
        Some(action_out(&env.w, &env.action))
    } else {
        None
    };
    doc.base = Some(SsjBase {
        generators: bgens,
        faces: bfaces,
        action: baction,
        retraction: map_out(&y.total, &env.w, &y.r),
        section: map_out(&env.w, &y.total, &y.s),
    });
    doc
}

/// Parses the total space and its action (trivial if no group block).
pub fn doc_to_space(doc: &SsjDocument) -> Result<(SSet, GroupAction)> {
    let x = space_in(&doc.generators, &doc.faces)?;
    let action = match (&doc.group, &doc.action) {
        (Some(sg), Some(table)) => {
            let group = group_in(sg)?;
            action_in(&x, &group, table)?
        }
        (None, None) => GroupAction::trivial(&x),
        _ => return Err(Error::Parse("group and action blocks must appear together".into())),
    };
    Ok((x, action))
}

/// Parses a full retractive object; requires the base block.
pub fn doc_to_robj(doc: &SsjDocument) -> Result<(REnv, RObj)> {
    let (total, taction) = doc_to_space(doc)?;
    let base = doc
        .base
        .as_ref()
        .ok_or_else(|| Error::Parse("document has no base block".into()))?;
    let w = space_in(&base.generators, &base.faces)?;
    let group = taction.group.clone();
    let waction = match &base.action {
        Some(table) => action_in(&w, &group, table)?,
        None => {
            let maps = vec![SMap::identity(&w); group.order()];
            GroupAction::new(group.clone(), maps, &w)?
        }
    };
    let env = REnv::new(w, waction)?;
    let r = map_in(&total, &env.w, &base.retraction)?;
    let s = map_in(&env.w, &total, &base.section)?;
    let y = RObj { total, action: taction, r, s };
    y.validate(&env)?;
    Ok((env, y))
}
