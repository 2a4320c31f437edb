//! Equivariant retractive spaces over a fixed base with group action.
//!
//! Objects are triples (Y, r, s): a simplicial set Y with G-action, an
//! equivariant retraction r: Y → W and an equivariant section s: W → Y
//! with r ∘ s = id.  Morphisms are equivariant simplicial maps commuting
//! with retractions and sections.

pub mod cells;
pub mod functors;
pub mod hom;
pub mod orbits;
pub mod presheaf;

pub use cells::{
    boundary_cell, boundary_cell_with_origins, cell, cell_cofibration, cell_with_origins,
    characteristic_map, horn_cell, CellGen,
};
pub use functors::{
    collapse, collapse_with_quot, induce, pullback, pullback_with_proj, tensor,
};
pub use hom::{hom_count, hom_maps, is_isomorphic};
pub use orbits::homotopy_orbits;
pub use presheaf::{from_presheaf, to_presheaf, PointedPresheaf};

use crate::error::{Error, Result};
use crate::fincat::Group;
use crate::sset::{GroupAction, SMap, SSet, Simplex};

/// The base datum: a degreewise finite simplicial set W with a right
/// action of a finite group G.
#[derive(Clone, Debug)]
pub struct REnv {
    pub w: SSet,
    pub action: GroupAction,
}

impl REnv {
    pub fn new(w: SSet, action: GroupAction) -> Result<REnv> {
        action.validate(&w)?;
        Ok(REnv { w, action })
    }

    /// Base with trivial action of the trivial group.
    pub fn plain(w: SSet) -> REnv {
        let action = GroupAction::trivial(&w);
        REnv { w, action }
    }

    /// Base with trivial action of a given group.
    pub fn with_trivial_action(w: SSet, group: Group) -> Result<REnv> {
        let maps = vec![SMap::identity(&w); group.order()];
        let action = GroupAction::new(group, maps, &w)?;
        Ok(REnv { w, action })
    }

    pub fn group(&self) -> &Group {
        &self.action.group
    }
}

/// A retractive object (Y, r, s) over the environment's base.
#[derive(Clone, Debug)]
pub struct RObj {
    pub total: SSet,
    pub action: GroupAction,
    pub r: SMap,
    pub s: SMap,
}

impl RObj {
    /// The terminal object (W, id, id).
    pub fn terminal(env: &REnv) -> RObj {
        RObj {
            total: env.w.clone(),
            action: env.action.clone(),
            r: SMap::identity(&env.w),
            s: SMap::identity(&env.w),
        }
    }

    pub fn validate(&self, env: &REnv) -> Result<()> {
        if self.action.group.order() != env.group().order() {
            return Err(Error::Invalid("object and base group orders differ".into()));
        }
        self.action.validate(&self.total)?;
        self.r.validate(&self.total, &env.w)?;
        self.s.validate(&env.w, &self.total)?;
        let rs = self.r.compose(&self.s, &self.total, &env.w)?;
        if rs.images != SMap::identity(&env.w).images {
            return Err(Error::Invalid("retraction does not split the section".into()));
        }
        for g in env.group().elements() {
            for (id, spec) in self.total.gens().iter().enumerate() {
                let x = Simplex::gen(id, spec.dim);
                let xg = self.action.act(&self.total, &x, g)?;
                let lhs = self.r.apply(&self.total, &env.w, &xg)?;
                let rhs = env.action.act(&env.w, &self.r.images[id], g)?;
                if lhs != rhs {
                    return Err(Error::Invalid("retraction is not equivariant".into()));
                }
            }
            for (id, spec) in env.w.gens().iter().enumerate() {
                let w = Simplex::gen(id, spec.dim);
                let wg = env.action.act(&env.w, &w, g)?;
                let lhs = self.s.apply(&env.w, &self.total, &wg)?;
                let rhs = self.action.act(&self.total, &self.s.images[id], g)?;
                if lhs != rhs {
                    return Err(Error::Invalid("section is not equivariant".into()));
                }
            }
        }
        Ok(())
    }

    /// The fibre of r over a base simplex: all simplices of the total
    /// space of the same degree retracting onto it, basepoint first.
    pub fn fibre(&self, env: &REnv, w: &Simplex) -> Result<Vec<Simplex>> {
        let base = self.s.apply(&env.w, &self.total, w)?;
        let mut out = vec![base.clone()];
        for y in self.total.simplices(w.dim()) {
            if y != base && self.r.apply(&self.total, &env.w, &y)? == *w {
                out.push(y);
            }
        }
        Ok(out)
    }
}

/// A pointed G-space regarded as retractive over the one-point base:
/// the retraction is constant and the section picks the base vertex,
/// which must be fixed by the action.
pub fn pointed(env_pt: &REnv, total: SSet, action: GroupAction, v: usize) -> Result<RObj> {
    if env_pt.w.gen_count() != 1 || env_pt.w.gens()[0].dim != 0 {
        return Err(Error::Invalid("base is not a point".into()));
    }
    let r = SMap {
        images: total
            .gens()
            .iter()
            .map(|spec| {
                Ok(Simplex {
                    surj: crate::sset::DeltaOp::new(vec![0; spec.dim + 1], 0)?,
                    gen: 0,
                })
            })
            .collect::<Result<_>>()?,
    };
    let s = SMap { images: vec![Simplex::gen(v, 0)] };
    let obj = RObj { total, action, r, s };
    obj.validate(env_pt)?;
    Ok(obj)
}

/// A morphism in the retractive category; `map` acts on total spaces.
#[derive(Clone, Debug)]
pub struct RMap {
    pub map: SMap,
}

impl RMap {
    pub fn validate(&self, env: &REnv, a: &RObj, b: &RObj) -> Result<()> {
        self.map.validate(&a.total, &b.total)?;
        let rf = b.r.compose(&self.map, &a.total, &env.w)?;
        if rf.images != a.r.images {
            return Err(Error::Invalid("morphism does not commute with retractions".into()));
        }
        let fs = self.map.compose(&a.s, &env.w, &b.total)?;
        if fs.images != b.s.images {
            return Err(Error::Invalid("morphism does not commute with sections".into()));
        }
        for g in env.group().elements() {
            for (id, spec) in a.total.gens().iter().enumerate() {
                let x = Simplex::gen(id, spec.dim);
                let xg = a.action.act(&a.total, &x, g)?;
                let lhs = self.map.apply(&a.total, &b.total, &xg)?;
                let rhs = b.action.act(&b.total, &self.map.images[id], g)?;
                if lhs != rhs {
                    return Err(Error::Invalid("morphism is not equivariant".into()));
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sset::build;

    #[test]
    fn terminal_object_is_valid() {
        let (w, action) = build::double_cover_circle().unwrap();
        let env = REnv::new(w, action).unwrap();
        RObj::terminal(&env).validate(&env).unwrap();
    }

    #[test]
    fn fibre_of_terminal_is_singleton() {
        let env = REnv::plain(build::circle().unwrap());
        let t = RObj::terminal(&env);
        for n in 0..=2 {
            for w in env.w.simplices(n) {
                assert_eq!(t.fibre(&env, &w).unwrap().len(), 1);
            }
        }
    }
}
