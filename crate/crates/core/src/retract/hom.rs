//! Exact morphism enumeration in the retractive category, by backtracking
//! over images of nondegenerate generators.

use super::{REnv, RMap, RObj};
use crate::error::{Error, Result};
use crate::sset::{SMap, Simplex};

const NODE_LIMIT: usize = 1_000_000;

struct Search<'a> {
    env: &'a REnv,
    a: &'a RObj,
    b: &'a RObj,
    order: Vec<usize>,
    assign: Vec<Option<Simplex>>,
    nodes: usize,
    found: Vec<SMap>,
}

impl Search<'_> {
    /// Assigns a generator image and propagates it around the G-orbit;
    /// returns the touched generators for undoing, or None on conflict.
    fn propagate(&mut self, gen: usize, img: &Simplex) -> Result<Option<Vec<usize>>> {
        let mut touched = Vec::new();
        for g in self.env.group().elements() {
            let xg = self.a.action.act_gen(gen, g);
            let img_g = self.b.action.act(&self.b.total, img, g)?;
            match &self.assign[xg] {
                Some(prev) if *prev != img_g => {
                    for t in touched {
                        self.assign[t] = None;
                    }
                    return Ok(None);
                }
                Some(_) => {}
                None => {
                    self.assign[xg] = Some(img_g);
                    touched.push(xg);
                }
            }
        }
        Ok(Some(touched))
    }

    fn consistent(&self, gen: usize, img: &Simplex) -> Result<bool> {
        // retraction compatibility
        if self.b.r.apply(&self.b.total, &self.env.w, img)? != self.a.r.images[gen] {
            return Ok(false);
        }
        // face compatibility with already-assigned lower generators
        let n = self.a.total.gens()[gen].dim;
        for i in 0..=n {
            if n == 0 {
                break;
            }
            let fa = self.a.total.face(&Simplex::gen(gen, n), i)?;
            let pushed = match &self.assign[fa.gen] {
                Some(im) => self.b.total.apply(im, &fa.surj)?,
                None => return Err(Error::Invalid("face assigned out of order".into())),
            };
            if self.b.total.face(img, i)? != pushed {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn run(&mut self, pos: usize) -> Result<()> {
        if pos == self.order.len() {
            let images: Vec<Simplex> =
                self.assign.iter().map(|o| o.clone().unwrap()).collect();
            self.found.push(SMap { images });
            return Ok(());
        }
        let gen = self.order[pos];
        if self.assign[gen].is_some() {
            // forced earlier (section image or orbit propagation): verify faces
            let img = self.assign[gen].clone().unwrap();
            if self.consistent(gen, &img)? {
                self.run(pos + 1)?;
            }
            return Ok(());
        }
        let n = self.a.total.gens()[gen].dim;
        for img in self.b.total.simplices(n) {
            self.nodes += 1;
            if self.nodes > NODE_LIMIT {
                return Err(Error::TooLarge("morphism search exceeded node budget".into()));
            }
            if !self.consistent(gen, &img)? {
                continue;
            }
            if let Some(touched) = self.propagate(gen, &img)? {
                self.run(pos + 1)?;
                for t in touched {
                    self.assign[t] = None;
                }
            }
        }
        Ok(())
    }
}

/// Enumerates all morphisms A → B in the retractive category, requiring
/// d at least the top generator degree of A.
pub fn hom_maps(env: &REnv, a: &RObj, b: &RObj, d: usize) -> Result<Vec<SMap>> {
    if d < a.total.top_dim() {
        return Err(Error::Invalid("dimension bound below the source generators".into()));
    }
    let mut order: Vec<usize> = (0..a.total.gen_count()).collect();
    order.sort_by_key(|&g| a.total.gens()[g].dim);
    let mut search = Search {
        env,
        a,
        b,
        order,
        assign: vec![None; a.total.gen_count()],
        nodes: 0,
        found: Vec::new(),
    };
    // section images are forced
    for (wg, im) in a.s.images.iter().enumerate() {
        if im.is_degenerate() {
            return Err(Error::Invalid("section hits a degenerate simplex".into()));
        }
        let target = b.s.images[wg].clone();
        if search.propagate(im.gen, &target)?.is_none() {
            return Ok(Vec::new());
        }
    }
    search.run(0)?;
    for m in &search.found {
        RMap { map: m.clone() }.validate(env, a, b)?;
    }
    Ok(search.found)
}

/// The exact number of morphisms A → B.
pub fn hom_count(env: &REnv, a: &RObj, b: &RObj, d: usize) -> Result<usize> {
    Ok(hom_maps(env, a, b, d)?.len())
}

/// Whether A and B are isomorphic in the retractive category.  An
/// isomorphism restricts to a dimension-preserving bijection on
/// nondegenerate generators, so the search assigns generators in
/// dimension order, pruning on retraction, section and face agreement,
/// and the winning assignment is re-validated as a morphism.
pub fn is_isomorphic(env: &REnv, a: &RObj, b: &RObj, _d: usize) -> Result<bool> {
    let na = a.total.gen_count();
    if na != b.total.gen_count() {
        return Ok(false);
    }
    for n in 0..=a.total.top_dim().max(b.total.top_dim()) {
        if a.total.gens_in_dim(n).len() != b.total.gens_in_dim(n).len() {
            return Ok(false);
        }
    }
    // generator images forced by the sections
    let mut assign: Vec<Option<usize>> = vec![None; na];
    let mut used = vec![false; b.total.gen_count()];
    for (wg, im_a) in a.s.images.iter().enumerate() {
        let im_b = &b.s.images[wg];
        if im_a.surj != im_b.surj {
            return Ok(false);
        }
        match assign[im_a.gen] {
            Some(prev) if prev != im_b.gen => return Ok(false),
            Some(_) => {}
            None => {
                if used[im_b.gen] {
                    return Ok(false);
                }
                assign[im_a.gen] = Some(im_b.gen);
                used[im_b.gen] = true;
            }
        }
    }
    let mut order: Vec<usize> = (0..na).collect();
    order.sort_by_key(|&g| (a.total.gens()[g].dim, g));

    fn compatible(a: &RObj, b: &RObj, assign: &[Option<usize>], g: usize, h: usize) -> Result<bool> {
        let n = a.total.gens()[g].dim;
        if b.total.gens()[h].dim != n {
            return Ok(false);
        }
        if b.r.images[h] != a.r.images[g] {
            return Ok(false);
        }
        for i in 0..=n {
            if n == 0 {
                break;
            }
            let fa = a.total.face(&Simplex::gen(g, n), i)?;
            let fb = b.total.face(&Simplex::gen(h, n), i)?;
            match assign[fa.gen] {
                Some(m) => {
                    if fb.gen != m || fb.surj != fa.surj {
                        return Ok(false);
                    }
                }
                None => return Err(Error::Invalid("face assigned out of order".into())),
            }
        }
        Ok(true)
    }

    fn search(
        a: &RObj,
        b: &RObj,
        env: &REnv,
        order: &[usize],
        k: usize,
        assign: &mut Vec<Option<usize>>,
        used: &mut Vec<bool>,
    ) -> Result<bool> {
        if k == order.len() {
            let images: Vec<Simplex> = (0..assign.len())
                .map(|g| Simplex::gen(assign[g].unwrap(), a.total.gens()[g].dim))
                .collect();
            let map = RMap { map: SMap { images } };
            return Ok(map.validate(env, a, b).is_ok());
        }
        let g = order[k];
        if let Some(h) = assign[g] {
            if !compatible(a, b, assign, g, h)? {
                return Ok(false);
            }
            return search(a, b, env, order, k + 1, assign, used);
        }
        let n = a.total.gens()[g].dim;
        for &h in b.total.gens_in_dim(n) {
            if used[h] || !compatible(a, b, assign, g, h)? {
                continue;
            }
            assign[g] = Some(h);
            used[h] = true;
            if search(a, b, env, order, k + 1, assign, used)? {
                return Ok(true);
            }
            assign[g] = None;
            used[h] = false;
        }
        Ok(false)
    }

    search(a, b, env, &order, 0, &mut assign, &mut used)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::retract::cells::{boundary_cell, cell};
    use crate::retract::presheaf::to_presheaf;
    use crate::sset::build;

    #[test]
    fn hom_into_terminal_is_singleton() {
        let (w, action) = build::double_cover_circle().unwrap();
        let env = REnv::new(w, action).unwrap();
        let e0 = env.w.find_gen("e0").unwrap();
        let c = cell(&env, &Simplex::gen(e0, 1)).unwrap();
        assert_eq!(hom_count(&env, &c, &RObj::terminal(&env), 2).unwrap(), 1);
    }

    #[test]
    fn yoneda_on_plain_base() {
        let env = REnv::plain(build::circle().unwrap());
        let e = env.w.find_gen("e").unwrap();
        let v = env.w.find_gen("v").unwrap();
        let y = cell(&env, &Simplex::gen(e, 1)).unwrap();
        let f = to_presheaf(&env, &y, 2).unwrap();
        for w in [Simplex::gen(v, 0), Simplex::gen(e, 1)] {
            let probe = cell(&env, &w).unwrap();
            assert_eq!(
                hom_count(&env, &probe, &y, 2).unwrap(),
                f.elems[f.index[&(w.dim(), w.clone())]].len()
            );
        }
    }

    #[test]
    fn yoneda_on_equivariant_base() {
        let (w, action) = build::double_cover_circle().unwrap();
        let env = REnv::new(w, action).unwrap();
        let e0 = env.w.find_gen("e0").unwrap();
        let v0 = env.w.find_gen("v0").unwrap();
        let y = cell(&env, &Simplex::gen(e0, 1)).unwrap();
        let f = to_presheaf(&env, &y, 2).unwrap();
        for w in [Simplex::gen(v0, 0), Simplex::gen(e0, 1)] {
            let probe = cell(&env, &w).unwrap();
            assert_eq!(
                hom_count(&env, &probe, &y, 2).unwrap(),
                f.elems[f.index[&(w.dim(), w.clone())]].len()
            );
        }
    }

    #[test]
    fn boundary_into_cell_regression() {
        let env = REnv::plain(build::standard_simplex(1).unwrap());
        let w = env.w.find_gen("0.1").unwrap();
        let a = boundary_cell(&env, &Simplex::gen(w, 1)).unwrap();
        let b = cell(&env, &Simplex::gen(w, 1)).unwrap();
        // frozen brute-force value: each boundary vertex maps into the
        // 2-element fibre over its base vertex, independently
        assert_eq!(hom_count(&env, &a, &b, 1).unwrap(), 4);
    }
}
