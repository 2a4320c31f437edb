//! Cells Δ[n,w] and their boundary/horn variants.
//!
//! The cell on a base simplex w of degree n has total space (Δⁿ × G) ⨿ W,
//! retraction the equivariant extension of the characteristic map of w on
//! the first summand and the identity on the second, and section the
//! second-summand inclusion.

use super::{REnv, RObj};
use crate::error::{Error, Result};
use crate::sset::build::{boundary, discrete, disjoint_union, horn, product, standard_simplex};
use crate::sset::{DeltaOp, GroupAction, SMap, SSet, Simplex};

/// The simplicial map Δⁿ ⊇ S → W classifying w: the generator given by a
/// monotone injection ι goes to W(ι)(w).  Works for any subcomplex of Δⁿ
/// whose generators are labelled by dot-separated vertex lists.
pub fn characteristic_map(shape: &SSet, w_set: &SSet, w: &Simplex) -> Result<SMap> {
    let mut images = Vec::new();
    for gen in shape.gens() {
        let vals: Vec<usize> = gen
            .label
            .split('.')
            .map(|t| t.parse().map_err(|_| Error::Invalid("bad vertex label".into())))
            .collect::<Result<_>>()?;
        let op = DeltaOp::new(vals, w.dim())?;
        images.push(w_set.apply(w, &op)?);
    }
    let m = SMap { images };
    m.validate(shape, w_set)?;
    Ok(m)
}

/// Shared construction for cells, boundaries, and horns: glue
/// (shape × G) ⨿ W with the twisted characteristic retraction.
fn cell_like(env: &REnv, shape: &SSet, w: &Simplex) -> Result<RObj> {
    Ok(cell_like_parts(env, shape, w)?.0)
}

/// As `cell_like`, but also returns the product structure of the first
/// summand and the two coproduct inclusions.
fn cell_like_parts(
    env: &REnv,
    shape: &SSet,
    w: &Simplex,
) -> Result<(RObj, crate::sset::build::Product, SMap, SMap)> {
    if w.gen >= env.w.gen_count() || env.w.gens()[w.gen].dim != w.surj.cod() {
        return Err(Error::Invalid("base simplex does not live in the base".into()));
    }
    let group = env.group().clone();
    let dg = discrete(&(0..group.order()).map(|g| group.label(g).to_string()).collect::<Vec<_>>())?;
    let prod = product(shape, &dg)?;
    let chi = characteristic_map(shape, &env.w, w)?;
    let (total, inc1, inc2) = disjoint_union(&prod.sset, &env.w)?;

    let mut r_images: Vec<Option<Simplex>> = vec![None; total.gen_count()];
    for (i, im) in inc1.images.iter().enumerate() {
        let (sx, sy) = &prod.pairs[i];
        let base = chi.apply(shape, &env.w, sx)?;
        r_images[im.gen] = Some(env.action.act(&env.w, &base, sy.gen)?);
    }
    for (i, im) in inc2.images.iter().enumerate() {
        r_images[im.gen] = Some(Simplex::gen(i, env.w.gens()[i].dim));
    }
    let r = SMap { images: r_images.into_iter().map(|o| o.unwrap()).collect() };
    r.validate(&total, &env.w)?;

    let mut maps = Vec::new();
    for g in group.elements() {
        let mut images: Vec<Option<Simplex>> = vec![None; total.gen_count()];
        for (i, im) in inc1.images.iter().enumerate() {
            let (sx, sy) = &prod.pairs[i];
            let moved = Simplex { surj: sy.surj.clone(), gen: group.mul(sy.gen, g) };
            let target = prod.classify(sx, &moved);
            images[im.gen] = Some(inc1.apply(&prod.sset, &total, &target)?);
        }
        for (i, im) in inc2.images.iter().enumerate() {
            let wg = env.action.act(&env.w, &Simplex::gen(i, env.w.gens()[i].dim), g)?;
            images[im.gen] = Some(inc2.apply(&env.w, &total, &wg)?);
        }
        maps.push(SMap { images: images.into_iter().map(|o| o.unwrap()).collect() });
    }
    let action = GroupAction::new(group, maps, &total)?;

    let obj = RObj { total, action, r, s: inc2.clone() };
    obj.validate(env)?;
    Ok((obj, prod, inc1, inc2))
}

/// The cell Δ[n,w] on a degree-n base simplex w.
pub fn cell(env: &REnv, w: &Simplex) -> Result<RObj> {
    cell_like(env, &standard_simplex(w.dim())?, w)
}

/// Origin of a generator of a cell-like total space: a first-summand
/// pair (shape simplex, group element) or a base generator.
#[derive(Clone, Debug)]
pub enum CellGen {
    Pair(Simplex, usize),
    Base(usize),
}

fn cell_like_with_origins(
    env: &REnv,
    shape: &SSet,
    w: &Simplex,
) -> Result<(RObj, Vec<CellGen>)> {
    let (obj, prod, inc1, inc2) = cell_like_parts(env, shape, w)?;
    let mut origins: Vec<Option<CellGen>> = vec![None; obj.total.gen_count()];
    for (i, im) in inc1.images.iter().enumerate() {
        let (sx, sy) = &prod.pairs[i];
        origins[im.gen] = Some(CellGen::Pair(sx.clone(), sy.gen));
    }
    for (i, im) in inc2.images.iter().enumerate() {
        origins[im.gen] = Some(CellGen::Base(i));
    }
    Ok((obj, origins.into_iter().map(|o| o.unwrap()).collect()))
}

/// The cell with the origin of each total-space generator.
pub fn cell_with_origins(env: &REnv, w: &Simplex) -> Result<(RObj, Vec<CellGen>)> {
    cell_like_with_origins(env, &standard_simplex(w.dim())?, w)
}

/// The boundary cell with the origin of each total-space generator; for
/// n = 0 the boundary is the terminal object, all of whose generators
/// are base generators.
pub fn boundary_cell_with_origins(env: &REnv, w: &Simplex) -> Result<(RObj, Vec<CellGen>)> {
    if w.dim() == 0 {
        let t = RObj::terminal(env);
        let origins = (0..t.total.gen_count()).map(CellGen::Base).collect();
        return Ok((t, origins));
    }
    cell_like_with_origins(env, &boundary(w.dim())?, w)
}

/// The generating cofibration ∂Δ[n,w] → Δ[n,w], with the section
/// W → Δ[0,w] standing in for the boundary inclusion when n = 0.
/// Returns (boundary object, cell object, inclusion of total spaces).
pub fn cell_cofibration(env: &REnv, w: &Simplex) -> Result<(RObj, RObj, SMap)> {
    let n = w.dim();
    let full = standard_simplex(n)?;
    let (cl, clprod, cl_inc1, cl_inc2) = cell_like_parts(env, &full, w)?;
    if n == 0 {
        let bnd = RObj::terminal(env);
        let incl = cl.s.clone();
        return Ok((bnd, cl, incl));
    }
    let bshape = boundary(n)?;
    let (bnd, bprod, b_inc1, b_inc2) = cell_like_parts(env, &bshape, w)?;
    // the shape inclusion ∂Δⁿ → Δⁿ classifies the top simplex
    let iota = Simplex::gen(full.gen_count() - 1, n);
    let shape_incl = characteristic_map(&bshape, &full, &iota)?;
    let mut images: Vec<Option<Simplex>> = vec![None; bnd.total.gen_count()];
    for (i, im) in b_inc1.images.iter().enumerate() {
        let (sx, sy) = &bprod.pairs[i];
        let tx = shape_incl.apply(&bshape, &full, sx)?;
        let target = clprod.classify(&tx, sy);
        images[im.gen] = Some(cl_inc1.apply(&clprod.sset, &cl.total, &target)?);
    }
    for (i, im) in b_inc2.images.iter().enumerate() {
        images[im.gen] = Some(cl_inc2.images[i].clone());
    }
    let incl = SMap { images: images.into_iter().map(|o| o.unwrap()).collect() };
    incl.validate(&bnd.total, &cl.total)?;
    super::RMap { map: incl.clone() }.validate(env, &bnd, &cl)?;
    Ok((bnd, cl, incl))
}

/// The boundary ∂Δ[n,w]; requires n ≥ 1.
pub fn boundary_cell(env: &REnv, w: &Simplex) -> Result<RObj> {
    cell_like(env, &boundary(w.dim())?, w)
}

/// The horn Λᵏ[n,w]; requires n ≥ 1 and 0 ≤ k ≤ n.
pub fn horn_cell(env: &REnv, w: &Simplex, k: usize) -> Result<RObj> {
    cell_like(env, &horn(w.dim(), k)?, w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::Group;
    use crate::sset::build;

    #[test]
    fn vertex_cell_over_point_is_two_points() {
        let env = REnv::plain(build::point());
        let c = cell(&env, &Simplex::gen(0, 0)).unwrap();
        assert_eq!(c.total.gens_in_dim(0).len(), 2);
        assert_eq!(c.total.top_dim(), 0);
    }

    #[test]
    fn vertex_cell_with_z2_has_two_free_vertices() {
        let env = REnv::with_trivial_action(build::point(), Group::cyclic(2)).unwrap();
        let c = cell(&env, &Simplex::gen(0, 0)).unwrap();
        // first summand Δ⁰ × G has |G| = 2 vertices, plus the base point
        assert_eq!(c.total.gens_in_dim(0).len(), 3);
    }

    #[test]
    fn edge_cell_over_circle_counts() {
        let env = REnv::plain(build::circle().unwrap());
        let e = env.w.find_gen("e").unwrap();
        let c = cell(&env, &Simplex::gen(e, 1)).unwrap();
        // Δ¹ ⨿ S¹: vertices 2 + 1, edges 1 + 1
        assert_eq!(c.total.gens_in_dim(0).len(), 3);
        assert_eq!(c.total.gens_in_dim(1).len(), 2);
        let b = boundary_cell(&env, &Simplex::gen(e, 1)).unwrap();
        assert_eq!(b.total.gens_in_dim(0).len(), 3);
        assert_eq!(b.total.gens_in_dim(1).len(), 1);
    }

    #[test]
    fn cells_over_equivariant_base_validate() {
        let (w, action) = build::double_cover_circle().unwrap();
        let env = REnv::new(w, action).unwrap();
        let e0 = env.w.find_gen("e0").unwrap();
        let c = cell(&env, &Simplex::gen(e0, 1)).unwrap();
        // (Δ¹ × Z/2) ⨿ W: vertices 2·2 + 2, edges 2 + 2
        assert_eq!(c.total.gens_in_dim(0).len(), 6);
        assert_eq!(c.total.gens_in_dim(1).len(), 4);
        horn_cell(&env, &Simplex::gen(e0, 1), 0).unwrap();
    }

    #[test]
    fn cell_on_degenerate_base_simplex() {
        let env = REnv::plain(build::circle().unwrap());
        // s₀v is a degenerate edge of the circle
        let v = env.w.find_gen("v").unwrap();
        let w = env.w.degeneracy(&Simplex::gen(v, 0), 0);
        let c = cell(&env, &w).unwrap();
        c.validate(&env).unwrap();
        assert_eq!(c.total.gens_in_dim(1).len(), 2);
    }
}
