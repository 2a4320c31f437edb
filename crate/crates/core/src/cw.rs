//! Finite CW filtrations of retractive objects and their abelian
//! counterparts: attaching generating cofibrations, replay verification,
//! and the categorical-finiteness checker with explicit certificates.

use crate::error::{Error, Result};
use crate::homalg::matrix::IntMatrix;
use crate::linab::linearise::{linearise, linearise_map};
use crate::linab::{AbMap, AbObj};
use crate::retract::functors::pushout_gen_images;
use crate::retract::{
    boundary_cell_with_origins, cell_cofibration, cell_with_origins, is_isomorphic, CellGen,
    REnv, RMap, RObj,
};
use crate::sset::build::{boundary, pushout, standard_simplex};
use crate::sset::{DeltaOp, GroupAction, SMap, SSet, Simplex};
use std::collections::BTreeMap;

/// One attachment step: the base simplex of the attached cell and the
/// attaching map from its boundary into the previous stage.
#[derive(Clone, Debug)]
pub struct Attachment {
    pub w: Simplex,
    pub map: RMap,
}

/// A finite filtration * = Z₀ → Z₁ → … → Z_n where every step is the
/// pushout of a single generating cofibration.
#[derive(Clone, Debug)]
pub struct Filtration {
    pub stages: Vec<RObj>,
    pub attachments: Vec<Attachment>,
}

impl Filtration {
    pub fn len(&self) -> usize {
        self.attachments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.attachments.is_empty()
    }

    pub fn top(&self) -> &RObj {
        self.stages.last().expect("filtration has at least the initial stage")
    }
}

/// Verdict of a filtration replay.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Accepted,
    /// index of the first stage that does not match its replayed pushout
    RejectedAt(usize),
}

/// Pushout of Z along the generating cofibration ∂Δ[n,w] → Δ[n,w] with
/// the given attaching map.  Returns the new stage together with the
/// stage inclusion Z → Z' and the characteristic map Δ[n,w] → Z'.
pub fn attach_cell(
    env: &REnv,
    z: &RObj,
    w: &Simplex,
    attach: &RMap,
) -> Result<(RObj, RMap, RMap)> {
    let (bnd, cl, incl) = cell_cofibration(env, w)?;
    attach.validate(env, &bnd, z)?;
    let (q, b_to_q, c_to_q) = pushout(&bnd.total, &cl.total, &z.total, &incl, &attach.map)?;

    let r_images = pushout_gen_images(
        &q,
        &b_to_q,
        &c_to_q,
        |cg| Ok(z.r.images[cg].clone()),
        |bg| Ok(cl.r.images[bg].clone()),
    )?;
    let r = SMap { images: r_images };
    r.validate(&q, &env.w)?;
    let s = c_to_q.compose(&z.s, &z.total, &q)?;

    let mut maps = Vec::new();
    for g in env.group().elements() {
        let images = pushout_gen_images(
            &q,
            &b_to_q,
            &c_to_q,
            |cg| {
                let moved =
                    z.action.act(&z.total, &Simplex::gen(cg, z.total.gens()[cg].dim), g)?;
                c_to_q.apply(&z.total, &q, &moved)
            },
            |bg| {
                let moved =
                    cl.action.act(&cl.total, &Simplex::gen(bg, cl.total.gens()[bg].dim), g)?;
                b_to_q.apply(&cl.total, &q, &moved)
            },
        )?;
        maps.push(SMap { images });
    }
    let action = GroupAction::new(env.group().clone(), maps, &q)?;

    let obj = RObj { total: q, action, r, s };
    obj.validate(env)?;
    Ok((obj, RMap { map: c_to_q }, RMap { map: b_to_q }))
}

/// Pushout in the abelian category along ∂Δ^ab[n,w] → Δ^ab[n,w]: the
/// value at each object is (Z(t) ⊕ Δ^ab(t)) / ⟨(attach(a), −incl(a))⟩,
/// with blockwise structure maps.
pub fn attach_cell_ab(env: &REnv, z: &AbObj, w: &Simplex, attach: &AbMap) -> Result<AbObj> {
    let d = z.d;
    let (bnd_s, cl_s, incl_s) = cell_cofibration(env, w)?;
    let bnd = linearise(env, &bnd_s, d)?;
    let cl = linearise(env, &cl_s, d)?;
    let incl = linearise_map(env, &bnd_s, &cl_s, &incl_s, d)?;
    attach.validate(env, &bnd, z)?;

    let mut values = Vec::new();
    for t in 0..z.objects.len() {
        let free = IntMatrix::block_diag(&[&z.values[t].rels, &cl.values[t].rels]);
        let glue = attach.mats[t].vstack(&incl.mats[t].neg());
        values.push(crate::homalg::fp::FpGroup {
            ambient: z.values[t].ambient + cl.values[t].ambient,
            rels: free.hstack(&glue),
        });
    }
    let mut maps = BTreeMap::new();
    for (key, zm) in &z.maps {
        maps.insert(key.clone(), IntMatrix::block_diag(&[zm, &cl.maps[key]]));
    }
    let out = AbObj {
        d,
        objects: z.objects.clone(),
        index: z.index.clone(),
        values,
        maps,
    };
    out.validate(env)?;
    Ok(out)
}

/// Replays every pushout of the filtration and compares the recorded
/// stages with the replayed ones up to exact isomorphism.
pub fn verify_filtration(env: &REnv, f: &Filtration) -> Result<Verdict> {
    if f.stages.len() != f.attachments.len() + 1 {
        return Err(Error::Invalid("stage and attachment counts disagree".into()));
    }
    let d0 = f.stages[0].total.top_dim().max(env.w.top_dim());
    if !is_isomorphic(env, &f.stages[0], &RObj::terminal(env), d0)? {
        return Ok(Verdict::RejectedAt(0));
    }
    for (i, att) in f.attachments.iter().enumerate() {
        let replay = match attach_cell(env, &f.stages[i], &att.w, &att.map) {
            Ok((obj, _, _)) => obj,
            Err(_) => return Ok(Verdict::RejectedAt(i + 1)),
        };
        let d = replay.total.top_dim().max(f.stages[i + 1].total.top_dim());
        if !is_isomorphic(env, &replay, &f.stages[i + 1], d)? {
            return Ok(Verdict::RejectedAt(i + 1));
        }
    }
    Ok(Verdict::Accepted)
}

/// The simplex (ρ, generator ι of a simplex shape) as a Δ-operator into
/// [n], read off the generator's dot-separated vertex label.
fn shape_simplex_op(shape: &SSet, sx: &Simplex, n: usize) -> Result<DeltaOp> {
    let vals: Vec<usize> = shape.gens()[sx.gen]
        .label
        .split('.')
        .map(|t| t.parse().map_err(|_| Error::Invalid("bad vertex label".into())))
        .collect::<Result<_>>()?;
    DeltaOp::new(vals, n)?.compose(&sx.surj)
}

/// Categorical finiteness over a trivial group: counts the nondegenerate
/// simplices of Y outside the section and returns a verified filtration
/// reconstructing Y by attaching them in order of dimension, so the
/// certificate length is that count.
pub fn is_categorically_finite(env: &REnv, y: &RObj) -> Result<Filtration> {
    if env.group().order() != 1 {
        return Err(Error::Invalid("finiteness certificates require a trivial group".into()));
    }
    y.validate(env)?;
    let mut in_section = vec![false; y.total.gen_count()];
    for im in &y.s.images {
        if im.is_degenerate() {
            return Err(Error::Invalid("section is not injective on generators".into()));
        }
        in_section[im.gen] = true;
    }
    let mut relative: Vec<usize> =
        (0..y.total.gen_count()).filter(|&g| !in_section[g]).collect();
    relative.sort_by_key(|&g| (y.total.gens()[g].dim, g));

    let mut stage = RObj::terminal(env);
    let mut embed = y.s.clone(); // stage ↪ Y, extended at every step
    // reverse lookup: generator of Y ↦ generator of the current stage
    let mut inv_gen: BTreeMap<usize, usize> = BTreeMap::new();
    for (i, im) in y.s.images.iter().enumerate() {
        inv_gen.insert(im.gen, i);
    }
    let mut stages = vec![stage.clone()];
    let mut attachments = Vec::new();

    for &g in &relative {
        let n = y.total.gens()[g].dim;
        let x = Simplex::gen(g, n);
        let wbase = y.r.images[g].clone();
        // attaching map: a boundary generator (ι, e) goes to the stage
        // preimage of Y(ι)(x); base generators go through the section
        let (bnd, bnd_origins) = boundary_cell_with_origins(env, &wbase)?;
        let bshape = if n == 0 { None } else { Some(boundary(n)?) };
        let mut att_images = Vec::with_capacity(bnd.total.gen_count());
        for origin in &bnd_origins {
            att_images.push(match origin {
                CellGen::Base(i) => stage.s.images[*i].clone(),
                CellGen::Pair(sx, _) => {
                    let op = shape_simplex_op(bshape.as_ref().unwrap(), sx, n)?;
                    let t = y.total.apply(&x, &op)?;
                    let sg = *inv_gen
                        .get(&t.gen)
                        .ok_or_else(|| Error::Invalid("face not yet attached".into()))?;
                    Simplex { surj: t.surj, gen: sg }
                }
            });
        }
        let attach = RMap { map: SMap { images: att_images } };
        let (next, z_inc, cl_inc) = attach_cell(env, &stage, &wbase, &attach)?;

        // extend the embedding: old stage generators keep their image,
        // cell generators map through the characteristic map of x
        let (_, cl_origins) = cell_with_origins(env, &wbase)?;
        let cshape = standard_simplex(n)?;
        let embed_images = pushout_gen_images(
            &next.total,
            &cl_inc.map,
            &z_inc.map,
            |cg| Ok(embed.images[cg].clone()),
            |bg| match &cl_origins[bg] {
                CellGen::Base(i) => Ok(y.s.images[*i].clone()),
                CellGen::Pair(sx, _) => {
                    let op = shape_simplex_op(&cshape, sx, n)?;
                    y.total.apply(&x, &op)
                }
            },
        )?;
        embed = SMap { images: embed_images };
        embed.validate(&next.total, &y.total)?;
        inv_gen.clear();
        for (sg, im) in embed.images.iter().enumerate() {
            if !im.is_degenerate() {
                inv_gen.insert(im.gen, sg);
            }
        }
        stage = next;
        stages.push(stage.clone());
        attachments.push(Attachment { w: wbase, map: attach });
    }
    if stage.total.gen_count() != y.total.gen_count() {
        return Err(Error::Invalid("reconstruction does not exhaust the object".into()));
    }
    RMap { map: embed }.validate(env, &stage, y)?;
    Ok(Filtration { stages, attachments })
}
