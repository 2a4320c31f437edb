//! The equivalence between retractive objects and pointed presheaves on
//! the equivariant simplex category of the base.
//!
//! The presheaf of (Y, r, s) sends a base simplex (n, w) to the fibre
//! r⁻¹(w) ⊆ Y_n pointed by s(w); the morphism (α, g): (m, v) → (n, w)
//! (where v = W(α)(w)·g) acts on fibres by y ↦ Y(α)(y)·g.

use super::{REnv, RObj};
use crate::error::{Error, Result};
use crate::sset::tabulate::{tabulate, ElementTable};
use crate::sset::{DeltaOp, GroupAction, SMap, Simplex};
use std::collections::BTreeMap;

/// A pointed-set-valued presheaf on the truncated equivariant simplex
/// category, stored as full value tables.  Element 0 of every value is
/// the basepoint.
#[derive(Clone, Debug)]
pub struct PointedPresheaf {
    pub d: usize,
    /// objects (n, w) for every simplex w of the base with n ≤ d
    pub objects: Vec<(usize, Simplex)>,
    pub index: BTreeMap<(usize, Simplex), usize>,
    /// element labels per object; index 0 is the basepoint
    pub elems: Vec<Vec<String>>,
    /// value of the presheaf on the morphism (α, g) into object `t`:
    /// key (t, α, g), value the map F(n,w) → F(m, v) as an index vector
    pub maps: BTreeMap<(usize, DeltaOp, usize), Vec<usize>>,
}

impl PointedPresheaf {
    /// Index of the source object of the morphism (α, g) into object t.
    pub fn source(&self, env: &REnv, t: usize, alpha: &DeltaOp, g: usize) -> Result<usize> {
        let (_, w) = &self.objects[t];
        let v = env.action.act(&env.w, &env.w.apply(w, alpha)?, g)?;
        self.index
            .get(&(alpha.dom(), v))
            .copied()
            .ok_or_else(|| Error::Invalid("source object missing".into()))
    }

    /// Checks identities, basepoint preservation, and functoriality
    /// against the composition law of the equivariant simplex category.
    pub fn validate(&self, env: &REnv) -> Result<()> {
        let e = env.group().e();
        for (t, (n, _)) in self.objects.iter().enumerate() {
            let id = self
                .maps
                .get(&(t, DeltaOp::identity(*n), e))
                .ok_or_else(|| Error::Invalid("identity map missing".into()))?;
            if id.iter().enumerate().any(|(i, &j)| i != j) {
                return Err(Error::Invalid("identity morphism does not act as identity".into()));
            }
        }
        for ((t, alpha, g), tab) in &self.maps {
            if tab.len() != self.elems[*t].len() {
                return Err(Error::Invalid("value map has wrong source size".into()));
            }
            let s = self.source(env, *t, alpha, *g)?;
            if tab.iter().any(|&j| j >= self.elems[s].len()) {
                return Err(Error::Invalid("value map exceeds target".into()));
            }
            if tab.first() != Some(&0) && !tab.is_empty() {
                return Err(Error::Invalid("basepoint not preserved".into()));
            }
        }
        // functoriality: (α, g): (m,v) → (n,w) followed by (β, h): (l,u) → (m,v)
        // composes to (α∘β, g·h): (l,u) → (n,w)
        for t in 0..self.objects.len() {
            let (n, _) = self.objects[t];
            for m in 0..=self.d {
                for alpha in DeltaOp::all(m, n) {
                    for g in env.group().elements() {
                        let s = self.source(env, t, &alpha, g)?;
                        let first = &self.maps[&(t, alpha.clone(), g)];
                        for l in 0..=self.d {
                            for beta in DeltaOp::all(l, m) {
                                for h in env.group().elements() {
                                    let second = &self.maps[&(s, beta.clone(), h)];
                                    let comp = &self.maps[&(
                                        t,
                                        alpha.compose(&beta)?,
                                        env.group().mul(g, h),
                                    )];
                                    for y in 0..first.len() {
                                        if second[first[y]] != comp[y] {
                                            return Err(Error::Invalid(
                                                "presheaf is not functorial".into(),
                                            ));
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// Reads off the fibre presheaf of a retractive object through degree d.
pub fn to_presheaf(env: &REnv, y: &RObj, d: usize) -> Result<PointedPresheaf> {
    let mut objects = Vec::new();
    let mut index = BTreeMap::new();
    let mut elems = Vec::new();
    let mut members: Vec<Vec<Simplex>> = Vec::new();
    let mut member_index: Vec<BTreeMap<Simplex, usize>> = Vec::new();
    for n in 0..=d {
        for w in env.w.simplices(n) {
            let fibre = y.fibre(env, &w)?;
            index.insert((n, w.clone()), objects.len());
            objects.push((n, w));
            elems.push(fibre.iter().map(|x| y.total.simplex_label(x)).collect());
            member_index.push(fibre.iter().cloned().zip(0..).collect());
            members.push(fibre);
        }
    }
    let mut maps = BTreeMap::new();
    for (t, (n, w)) in objects.iter().enumerate() {
        for m in 0..=d {
            for alpha in DeltaOp::all(m, *n) {
                for g in env.group().elements() {
                    let v = env.action.act(&env.w, &env.w.apply(w, &alpha)?, g)?;
                    let s = index[&(m, v)];
                    let mut tab = Vec::new();
                    for x in &members[t] {
                        let img = y.action.act(&y.total, &y.total.apply(x, &alpha)?, g)?;
                        tab.push(
                            *member_index[s]
                                .get(&img)
                                .ok_or_else(|| Error::Invalid("fibre map escapes fibre".into()))?,
                        );
                    }
                    maps.insert((t, alpha.clone(), g), tab);
                }
            }
        }
    }
    Ok(PointedPresheaf { d, objects, index, elems, maps })
}

struct PresheafTable<'a> {
    env: &'a REnv,
    f: &'a PointedPresheaf,
}

impl ElementTable for PresheafTable<'_> {
    type Elem = (usize, usize); // (object index, element index)

    fn elements(&self, n: usize) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (t, (m, _)) in self.f.objects.iter().enumerate() {
            if *m == n {
                out.extend((0..self.f.elems[t].len()).map(|i| (t, i)));
            }
        }
        out
    }

    fn face(&self, n: usize, e: &(usize, usize), i: usize) -> Result<(usize, usize)> {
        let key = (e.0, DeltaOp::coface(i, n)?, self.env.group().e());
        let s = self.f.source(self.env, e.0, &key.1, key.2)?;
        Ok((s, self.f.maps[&key][e.1]))
    }

    fn degeneracy(&self, n: usize, e: &(usize, usize), j: usize) -> Result<(usize, usize)> {
        let key = (e.0, DeltaOp::codegeneracy(j, n)?, self.env.group().e());
        let s = self.f.source(self.env, e.0, &key.1, key.2)?;
        Ok((s, self.f.maps[&key][e.1]))
    }

    fn label(&self, _n: usize, e: &(usize, usize)) -> String {
        self.f.elems[e.0][e.1].clone()
    }
}

/// Rebuilds a retractive object from a presheaf: the total space is the
/// disjoint union of the values, the action comes from (id, g), the
/// operators from (α, e), the retraction from the indexing and the
/// section from the basepoints.  Returns the object together with the
/// total-space simplex of every (object, element) pair.
pub fn from_presheaf(
    env: &REnv,
    f: &PointedPresheaf,
) -> Result<(RObj, BTreeMap<(usize, (usize, usize)), Simplex>)> {
    f.validate(env)?;
    if f.d < env.w.top_dim() {
        return Err(Error::Invalid("presheaf truncated below base dimension".into()));
    }
    let table = PresheafTable { env, f };
    let tabbed = tabulate(&table, f.d)?;
    let total = tabbed.sset;

    let mut r_images = Vec::new();
    for (n, (t, _)) in &tabbed.gen_elems {
        let (m, w) = &f.objects[*t];
        debug_assert_eq!(m, n);
        r_images.push(w.clone());
    }
    let r = SMap { images: r_images };
    r.validate(&total, &env.w)?;

    let mut s_images = Vec::new();
    for (wg, spec) in env.w.gens().iter().enumerate() {
        let t = f.index[&(spec.dim, Simplex::gen(wg, spec.dim))];
        s_images.push(tabbed.classes[&(spec.dim, (t, 0))].clone());
    }
    let s = SMap { images: s_images };
    s.validate(&env.w, &total)?;

    let mut maps = Vec::new();
    for g in env.group().elements() {
        let mut images = Vec::new();
        for (n, (t, i)) in &tabbed.gen_elems {
            let key = (*t, DeltaOp::identity(*n), g);
            let s_obj = f.source(env, *t, &key.1, g)?;
            let j = f.maps[&key][*i];
            images.push(tabbed.classes[&(*n, (s_obj, j))].clone());
        }
        maps.push(SMap { images });
    }
    let action = GroupAction::new(env.group().clone(), maps, &total)?;

    let obj = RObj { total, action, r, s };
    obj.validate(env)?;
    Ok((obj, tabbed.classes))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::Group;
    use crate::retract::cells::cell;
    use crate::sset::build;

    fn roundtrip_is_isomorphism(env: &REnv, y: &RObj, d: usize) {
        let f = to_presheaf(env, y, d).unwrap();
        let (y2, classes) = from_presheaf(env, &f).unwrap();
        // the explicit bijection Y_n → Y2_n: y ↦ class of (object of r(y), index in fibre)
        let send = |x: &Simplex| -> Simplex {
            let n = x.dim();
            let w = y.r.apply(&y.total, &env.w, x).unwrap();
            let t = f.index[&(n, w.clone())];
            let i = y.fibre(env, &w).unwrap().iter().position(|z| z == x).unwrap();
            classes[&(n, (t, i))].clone()
        };
        for n in 0..=d {
            let xs = y.total.simplices(n);
            assert_eq!(xs.len(), y2.total.simplices(n).len());
            let mut seen = std::collections::BTreeSet::new();
            for x in &xs {
                let img = send(x);
                assert!(seen.insert(img.clone()), "bijection fails");
                for i in 0..=n {
                    if n > 0 {
                        assert_eq!(
                            send(&y.total.face(x, i).unwrap()),
                            y2.total.face(&img, i).unwrap()
                        );
                    }
                }
                if n < d {
                    for j in 0..=n {
                        assert_eq!(
                            send(&y.total.degeneracy(x, j)),
                            y2.total.degeneracy(&img, j)
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn terminal_gives_constant_one_point_presheaf() {
        let (w, action) = build::double_cover_circle().unwrap();
        let env = REnv::new(w, action).unwrap();
        let f = to_presheaf(&env, &RObj::terminal(&env), 2).unwrap();
        assert!(f.elems.iter().all(|e| e.len() == 1));
        f.validate(&env).unwrap();
        let (back, _) = from_presheaf(&env, &f).unwrap();
        for n in 0..=2 {
            assert_eq!(back.total.simplices(n).len(), env.w.simplices(n).len());
        }
    }

    #[test]
    fn vertex_cell_fibre_has_two_elements() {
        let env = REnv::plain(build::point());
        let c = cell(&env, &Simplex::gen(0, 0)).unwrap();
        let f = to_presheaf(&env, &c, 1).unwrap();
        assert_eq!(f.elems[f.index[&(0, Simplex::gen(0, 0))]].len(), 2);
    }

    #[test]
    fn fibre_cardinalities_partition_total() {
        let env = REnv::plain(build::circle().unwrap());
        let e = env.w.find_gen("e").unwrap();
        let c = cell(&env, &Simplex::gen(e, 1)).unwrap();
        let f = to_presheaf(&env, &c, 2).unwrap();
        for n in 0..=2 {
            let sum: usize = f
                .objects
                .iter()
                .enumerate()
                .filter(|(_, (m, _))| *m == n)
                .map(|(t, _)| f.elems[t].len())
                .sum();
            assert_eq!(sum, c.total.simplices(n).len());
        }
    }

    #[test]
    fn round_trip_on_cells() {
        let env = REnv::plain(build::circle().unwrap());
        let e = env.w.find_gen("e").unwrap();
        let c = cell(&env, &Simplex::gen(e, 1)).unwrap();
        roundtrip_is_isomorphism(&env, &c, 2);

        let (w, action) = build::double_cover_circle().unwrap();
        let env2 = REnv::new(w, action).unwrap();
        let e0 = env2.w.find_gen("e0").unwrap();
        let c2 = cell(&env2, &Simplex::gen(e0, 1)).unwrap();
        roundtrip_is_isomorphism(&env2, &c2, 2);
    }

    #[test]
    fn round_trip_with_nontrivial_group_on_point_base() {
        let env = REnv::with_trivial_action(build::point(), Group::cyclic(2)).unwrap();
        let c = cell(&env, &Simplex::gen(0, 0)).unwrap();
        roundtrip_is_isomorphism(&env, &c, 2);
    }
}
