//! Functors between retractive categories: tensor with a simplicial set,
//! collapse of the base, pullback along a bundle projection, and
//! induction of equivariant structure.

use super::{REnv, RObj};
use crate::error::{Error, Result};
use crate::sset::build::{discrete, point, product, pushout, Product};
use crate::sset::{DeltaOp, Gen, GroupAction, SMap, SSet, Simplex};

/// Structure maps of a pushout B ⊔_A C built in `pushout` form: assigns
/// to every generator of the pushout its preimage data.
pub(crate) fn pushout_gen_images<FB, FC>(
    q: &SSet,
    b_to_q: &SMap,
    c_to_q: &SMap,
    mut from_c: FC,
    mut from_b: FB,
) -> Result<Vec<Simplex>>
where
    FC: FnMut(usize) -> Result<Simplex>,
    FB: FnMut(usize) -> Result<Simplex>,
{
    let mut images: Vec<Option<Simplex>> = vec![None; q.gen_count()];
    for (cg, im) in c_to_q.images.iter().enumerate() {
        if !im.is_degenerate() {
            images[im.gen] = Some(from_c(cg)?);
        }
    }
    for (bg, im) in b_to_q.images.iter().enumerate() {
        if !im.is_degenerate() && images[im.gen].is_none() {
            images[im.gen] = Some(from_b(bg)?);
        }
    }
    images
        .into_iter()
        .map(|o| o.ok_or_else(|| Error::Invalid("pushout generator not covered".into())))
        .collect()
}

/// Y ⊗ K = (Y × K) ∪_{W × K} W, gluing along the projection W × K → W.
pub fn tensor(env: &REnv, y: &RObj, k: &SSet) -> Result<RObj> {
    let yk = product(&y.total, k)?;
    let wk = product(&env.w, k)?;
    let mut f_images = Vec::new();
    for (sw, sk) in &wk.pairs {
        f_images.push(yk.classify(&y.s.apply(&env.w, &y.total, sw)?, sk));
    }
    let f = SMap { images: f_images };
    f.validate(&wk.sset, &yk.sset)?;
    let (q, b_to_q, c_to_q) = pushout(&wk.sset, &yk.sset, &env.w, &f, &wk.fst)?;

    let r_images = pushout_gen_images(
        &q,
        &b_to_q,
        &c_to_q,
        |cg| Ok(Simplex::gen(cg, env.w.gens()[cg].dim)),
        |bg| y.r.apply(&y.total, &env.w, &yk.pairs[bg].0),
    )?;
    let r = SMap { images: r_images };
    r.validate(&q, &env.w)?;

    let mut maps = Vec::new();
    for g in env.group().elements() {
        let images = pushout_gen_images(
            &q,
            &b_to_q,
            &c_to_q,
            |cg| {
                let wg =
                    env.action.act(&env.w, &Simplex::gen(cg, env.w.gens()[cg].dim), g)?;
                c_to_q.apply(&env.w, &q, &wg)
            },
            |bg| {
                let (sy, sk) = &yk.pairs[bg];
                let moved = yk.classify(&y.action.act(&y.total, sy, g)?, sk);
                b_to_q.apply(&yk.sset, &q, &moved)
            },
        )?;
        maps.push(SMap { images });
    }
    let action = GroupAction::new(env.group().clone(), maps, &q)?;

    let obj = RObj { total: q, action, r, s: c_to_q };
    obj.validate(env)?;
    Ok(obj)
}

/// Collapses the base: Y ↦ Y/W as a retractive object over the point
/// (with the same group acting, trivially on the base).
pub fn collapse(env: &REnv, y: &RObj) -> Result<(REnv, RObj)> {
    let (env_pt, obj, _) = collapse_with_quot(env, y)?;
    Ok((env_pt, obj))
}

/// As `collapse`, but also returns the quotient map Y → Y/W.
pub fn collapse_with_quot(env: &REnv, y: &RObj) -> Result<(REnv, RObj, SMap)> {
    let env_pt = REnv::with_trivial_action(point(), env.group().clone())?;
    let to_pt = |n: usize| -> Result<Simplex> {
        Ok(Simplex { surj: DeltaOp::new(vec![0; n + 1], 0)?, gen: 0 })
    };
    let cmap = SMap {
        images: env
            .w
            .gens()
            .iter()
            .map(|spec| to_pt(spec.dim))
            .collect::<Result<_>>()?,
    };
    cmap.validate(&env.w, &env_pt.w)?;
    let (q, b_to_q, c_to_q) = pushout(&env.w, &y.total, &env_pt.w, &y.s, &cmap)?;

    let mut r_images = Vec::new();
    for spec in q.gens() {
        r_images.push(to_pt(spec.dim)?);
    }
    let r = SMap { images: r_images };

    let mut maps = Vec::new();
    for g in env.group().elements() {
        let images = pushout_gen_images(
            &q,
            &b_to_q,
            &c_to_q,
            |cg| Ok(Simplex::gen(cg, 0)),
            |bg| {
                let moved =
                    y.action.act(&y.total, &Simplex::gen(bg, y.total.gens()[bg].dim), g)?;
                b_to_q.apply(&y.total, &q, &moved)
            },
        )?;
        maps.push(SMap { images });
    }
    let action = GroupAction::new(env.group().clone(), maps, &q)?;

    let obj = RObj { total: q, action, r, s: c_to_q };
    obj.validate(&env_pt)?;
    Ok((env_pt, obj, b_to_q))
}

/// The restriction of a product to the generator pairs satisfying a
/// fibre-product constraint closed under the simplicial operators.
fn restrict_product(prod: &Product, keep: &[bool]) -> Result<(SSet, Vec<Option<usize>>)> {
    let mut remap: Vec<Option<usize>> = vec![None; prod.sset.gen_count()];
    let mut gens = Vec::new();
    for (i, spec) in prod.sset.gens().iter().enumerate() {
        if !keep[i] {
            continue;
        }
        remap[i] = Some(gens.len());
        let mut faces = Vec::new();
        for face in &spec.faces {
            let gen = remap[face.gen]
                .ok_or_else(|| Error::Invalid("constraint not closed under faces".into()))?;
            faces.push(Simplex { surj: face.surj.clone(), gen });
        }
        gens.push(Gen { label: spec.label.clone(), dim: spec.dim, faces });
    }
    Ok((SSet::new(gens)?, remap))
}

fn remap_simplex(remap: &[Option<usize>], x: &Simplex) -> Result<Simplex> {
    Ok(Simplex {
        surj: x.surj.clone(),
        gen: remap[x.gen].ok_or_else(|| Error::Invalid("simplex outside restriction".into()))?,
    })
}

/// Pullback Y ×_X P along a bundle projection ξ: P → X that is constant
/// on G-orbits of P; the result is retractive over P with G acting on
/// both coordinates.
pub fn pullback(env_p: &REnv, env_x: &REnv, y: &RObj, xi: &SMap) -> Result<RObj> {
    let (obj, _) = pullback_with_proj(env_p, env_x, y, xi)?;
    Ok(obj)
}

/// As `pullback`, but also returns the projection Y ×_X P → Y.
pub fn pullback_with_proj(
    env_p: &REnv,
    env_x: &REnv,
    y: &RObj,
    xi: &SMap,
) -> Result<(RObj, SMap)> {
    xi.validate(&env_p.w, &env_x.w)?;
    for g in env_p.group().elements() {
        for (pg, spec) in env_p.w.gens().iter().enumerate() {
            let p = Simplex::gen(pg, spec.dim);
            let moved = env_p.action.act(&env_p.w, &p, g)?;
            if xi.apply(&env_p.w, &env_x.w, &moved)? != xi.images[pg] {
                return Err(Error::Invalid("projection is not constant on orbits".into()));
            }
        }
    }
    let prod = product(&y.total, &env_p.w)?;
    let mut keep = vec![false; prod.sset.gen_count()];
    for (i, (sy, sp)) in prod.pairs.iter().enumerate() {
        keep[i] = y.r.apply(&y.total, &env_x.w, sy)? == xi.apply(&env_p.w, &env_x.w, sp)?;
    }
    let (total, remap) = restrict_product(&prod, &keep)?;

    let mut r_images = Vec::new();
    let mut kept_pairs = Vec::new();
    for (i, (sy, sp)) in prod.pairs.iter().enumerate() {
        if keep[i] {
            r_images.push(sp.clone());
            kept_pairs.push((sy.clone(), sp.clone()));
        }
    }
    let r = SMap { images: r_images };
    r.validate(&total, &env_p.w)?;

    let mut s_images = Vec::new();
    for (pg, spec) in env_p.w.gens().iter().enumerate() {
        let p = Simplex::gen(pg, spec.dim);
        let sy = y.s.apply(&env_x.w, &y.total, &xi.images[pg])?;
        s_images.push(remap_simplex(&remap, &prod.classify(&sy, &p))?);
    }
    let s = SMap { images: s_images };
    s.validate(&env_p.w, &total)?;

    let mut maps = Vec::new();
    for g in env_p.group().elements() {
        let mut images = Vec::new();
        for (sy, sp) in &kept_pairs {
            let moved = prod.classify(
                &y.action.act(&y.total, sy, g)?,
                &env_p.action.act(&env_p.w, sp, g)?,
            );
            images.push(remap_simplex(&remap, &moved)?);
        }
        maps.push(SMap { images });
    }
    let action = GroupAction::new(env_p.group().clone(), maps, &total)?;

    let proj = SMap { images: kept_pairs.iter().map(|(sy, _)| sy.clone()).collect() };
    proj.validate(&total, &y.total)?;

    let obj = RObj { total, action, r, s };
    obj.validate(env_p)?;
    Ok((obj, proj))
}

/// Induction of equivariant structure: a plain retractive space (Y, r, s)
/// over the underlying base is sent to (Y × G) ∪_{W × G} W, glued along
/// the action map W × G → W, carrying the free action on the added part.
pub fn induce(env: &REnv, total: &SSet, r: &SMap, s: &SMap) -> Result<RObj> {
    r.validate(total, &env.w)?;
    s.validate(&env.w, total)?;
    let group = env.group().clone();
    let dg = discrete(&(0..group.order()).map(|g| group.label(g).to_string()).collect::<Vec<_>>())?;
    let yg = product(total, &dg)?;
    let wg = product(&env.w, &dg)?;
    let mut f_images = Vec::new();
    let mut glue_images = Vec::new();
    for (sw, sh) in &wg.pairs {
        f_images.push(yg.classify(&s.apply(&env.w, total, sw)?, sh));
        glue_images.push(env.action.act(&env.w, sw, sh.gen)?);
    }
    let f = SMap { images: f_images };
    f.validate(&wg.sset, &yg.sset)?;
    let glue = SMap { images: glue_images };
    glue.validate(&wg.sset, &env.w)?;
    let (q, b_to_q, c_to_q) = pushout(&wg.sset, &yg.sset, &env.w, &f, &glue)?;

    let r_images = pushout_gen_images(
        &q,
        &b_to_q,
        &c_to_q,
        |cg| Ok(Simplex::gen(cg, env.w.gens()[cg].dim)),
        |bg| {
            let (sy, sh) = &yg.pairs[bg];
            env.action.act(&env.w, &r.apply(total, &env.w, sy)?, sh.gen)
        },
    )?;
    let r_q = SMap { images: r_images };
    r_q.validate(&q, &env.w)?;

    let mut maps = Vec::new();
    for g in group.elements() {
        let images = pushout_gen_images(
            &q,
            &b_to_q,
            &c_to_q,
            |cg| {
                let wg2 =
                    env.action.act(&env.w, &Simplex::gen(cg, env.w.gens()[cg].dim), g)?;
                c_to_q.apply(&env.w, &q, &wg2)
            },
            |bg| {
                let (sy, sh) = &yg.pairs[bg];
                let moved = Simplex { surj: sh.surj.clone(), gen: group.mul(sh.gen, g) };
                b_to_q.apply(&yg.sset, &q, &yg.classify(sy, &moved))
            },
        )?;
        maps.push(SMap { images });
    }
    let action = GroupAction::new(group, maps, &q)?;

    let obj = RObj { total: q, action, r: r_q, s: c_to_q };
    obj.validate(env)?;
    Ok(obj)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::retract::cells::{boundary_cell, cell};
    use crate::retract::hom::is_isomorphic;
    use crate::sset::build;

    #[test]
    fn tensor_with_point_is_identity() {
        let env = REnv::plain(build::circle().unwrap());
        let e = env.w.find_gen("e").unwrap();
        let c = cell(&env, &Simplex::gen(e, 1)).unwrap();
        let t = tensor(&env, &c, &build::point()).unwrap();
        assert!(is_isomorphic(&env, &c, &t, 2).unwrap());
    }

    #[test]
    fn edge_cell_tensor_interval_counts() {
        // Δ[1,w] ⊗ Δ¹ over Δ¹, trivial group: the part added to the base
        // is Δ¹ × Δ¹ with 4 vertices, 5 edges, 2 triangles
        let env = REnv::plain(build::standard_simplex(1).unwrap());
        let w = env.w.find_gen("0.1").unwrap();
        let c = cell(&env, &Simplex::gen(w, 1)).unwrap();
        let t = tensor(&env, &c, &build::standard_simplex(1).unwrap()).unwrap();
        let base_gens: Vec<usize> = (0..=2).map(|n| env.w.gens_in_dim(n).len()).collect();
        let added: Vec<usize> =
            (0..=2).map(|n| t.total.gens_in_dim(n).len() - base_gens[n]).collect();
        assert_eq!(added, vec![4, 5, 2]);
    }

    #[test]
    fn collapse_counts_and_terminal() {
        let (w, action) = build::double_cover_circle().unwrap();
        let env = REnv::new(w, action).unwrap();
        let (env_pt, pt) = collapse(&env, &RObj::terminal(&env)).unwrap();
        for n in 0..=2 {
            assert_eq!(pt.total.simplices(n).len(), 1);
        }
        let e0 = env.w.find_gen("e0").unwrap();
        let c = cell(&env, &Simplex::gen(e0, 1)).unwrap();
        let (_, cc) = collapse(&env, &c).unwrap();
        for n in 0..=3 {
            assert_eq!(
                cc.total.simplices(n).len(),
                c.total.simplices(n).len() - env.w.simplices(n).len() + 1
            );
        }
        cc.validate(&env_pt).unwrap();
    }

    #[test]
    fn pullback_of_terminal_is_terminal() {
        let (p, action) = build::double_cover_circle().unwrap();
        let env_p = REnv::new(p, action).unwrap();
        let x = build::circle().unwrap();
        let (q, xi) = crate::sset::action::quotient(&env_p.w, &env_p.action).unwrap();
        assert_eq!(q.gen_count(), x.gen_count());
        let env_x = REnv::with_trivial_action(q, env_p.group().clone()).unwrap();
        let t = RObj::terminal(&env_x);
        let pb = pullback(&env_p, &env_x, &t, &xi).unwrap();
        for n in 0..=2 {
            assert_eq!(pb.total.simplices(n).len(), env_p.w.simplices(n).len());
        }
    }

    #[test]
    fn pullback_of_edge_cell_along_double_cover() {
        let (p, action) = build::double_cover_circle().unwrap();
        let env_p = REnv::new(p, action).unwrap();
        let (q, xi) = crate::sset::action::quotient(&env_p.w, &env_p.action).unwrap();
        let env_x = REnv::with_trivial_action(q.clone(), env_p.group().clone()).unwrap();
        let e = env_x.w.gens_in_dim(1)[0];
        // a plain (non-equivariant) cell, regarded with trivial action
        let c0 = cell(&REnv::plain(q), &Simplex::gen(e, 1)).unwrap();
        let c = RObj {
            action: GroupAction::new(
                env_p.group().clone(),
                vec![SMap::identity(&c0.total); env_p.group().order()],
                &c0.total,
            )
            .unwrap(),
            total: c0.total,
            r: c0.r,
            s: c0.s,
        };
        c.validate(&env_x).unwrap();
        let pb = pullback(&env_p, &env_x, &c, &xi).unwrap();
        // the first summand doubles: 2 edges over the cell edge
        assert_eq!(pb.total.gens_in_dim(1).len() - env_p.w.gens_in_dim(1).len(), 2);
        // degreewise count is the fibre sum
        for n in 0..=2 {
            let mut sum = 0;
            for sp in env_p.w.simplices(n) {
                let xp = xi.apply(&env_p.w, &env_x.w, &sp).unwrap();
                sum += c
                    .total
                    .simplices(n)
                    .iter()
                    .filter(|sy| c.r.apply(&c.total, &env_x.w, sy).unwrap() == xp)
                    .count();
            }
            assert_eq!(pb.total.simplices(n).len(), sum);
        }
    }

    #[test]
    fn induce_trivial_group_is_identity() {
        let env = REnv::plain(build::circle().unwrap());
        let e = env.w.find_gen("e").unwrap();
        let c = cell(&env, &Simplex::gen(e, 1)).unwrap();
        let got = induce(&env, &c.total, &c.r, &c.s).unwrap();
        assert!(is_isomorphic(&env, &c, &got, 2).unwrap());
    }

    #[test]
    fn induce_sends_plain_cells_to_equivariant_cells() {
        let (w, action) = build::double_cover_circle().unwrap();
        let env = REnv::new(w, action).unwrap();
        let plain = REnv::plain(env.w.clone());
        let e0 = env.w.find_gen("e0").unwrap();
        let small = cell(&plain, &Simplex::gen(e0, 1)).unwrap();
        let got = induce(&env, &small.total, &small.r, &small.s).unwrap();
        let want = cell(&env, &Simplex::gen(e0, 1)).unwrap();
        assert!(is_isomorphic(&env, &want, &got, 2).unwrap());
        let small_b = boundary_cell(&plain, &Simplex::gen(e0, 1)).unwrap();
        let got_b = induce(&env, &small_b.total, &small_b.r, &small_b.s).unwrap();
        let want_b = boundary_cell(&env, &Simplex::gen(e0, 1)).unwrap();
        assert!(is_isomorphic(&env, &want_b, &got_b, 2).unwrap());
    }
}
