//! Right actions of a finite group on a simplicial set by automorphisms.

use super::{Gen, SMap, SSet, Simplex};
use crate::error::{Error, Result};
use crate::fincat::Group;

/// A right action: `maps[g]` is the automorphism – · g.  Automorphisms
/// send generators to generators, so each image must be nondegenerate.
#[derive(Clone, Debug)]
pub struct GroupAction {
    pub group: Group,
    pub maps: Vec<SMap>,
}

impl GroupAction {
    pub fn trivial(x: &SSet) -> GroupAction {
        GroupAction { group: Group::trivial(), maps: vec![SMap::identity(x)] }
    }

    pub fn new(group: Group, maps: Vec<SMap>, x: &SSet) -> Result<GroupAction> {
        let a = GroupAction { group, maps };
        a.validate(x)?;
        Ok(a)
    }

    pub fn validate(&self, x: &SSet) -> Result<()> {
        if self.maps.len() != self.group.order() {
            return Err(Error::Invalid("one automorphism per group element required".into()));
        }
        for (g, m) in self.maps.iter().enumerate() {
            m.validate(x, x)?;
            if !m.is_injective(x) || !m.is_surjective(x) {
                return Err(Error::Invalid(format!(
                    "action of `{}` is not an automorphism",
                    self.group.label(g)
                )));
            }
        }
        if self.maps[self.group.e()] != SMap::identity(x) {
            return Err(Error::Invalid("identity element must act as the identity".into()));
        }
        for g in self.group.elements() {
            for h in self.group.elements() {
                // right action: x·(gh) = (x·g)·h
                let gh = &self.maps[self.group.mul(g, h)];
                let comp = self.maps[h].compose(&self.maps[g], x, x)?;
                if *gh != comp {
                    return Err(Error::Invalid(format!(
                        "action is not compatible with multiplication at ({}, {})",
                        self.group.label(g),
                        self.group.label(h)
                    )));
                }
            }
        }
        Ok(())
    }

    /// x · g.
    pub fn act(&self, x: &SSet, s: &Simplex, g: usize) -> Result<Simplex> {
        self.maps[g].apply(x, x, s)
    }

    /// Action on generator ids (automorphisms permute generators).
    pub fn act_gen(&self, id: usize, g: usize) -> usize {
        self.maps[g].images[id].gen
    }

    /// Orbit partition of the generators; each orbit is sorted.
    pub fn gen_orbits(&self, x: &SSet) -> Vec<Vec<usize>> {
        let mut seen = vec![false; x.gen_count()];
        let mut orbits = Vec::new();
        for id in 0..x.gen_count() {
            if seen[id] {
                continue;
            }
            let mut orbit: Vec<usize> = self.group.elements().map(|g| self.act_gen(id, g)).collect();
            orbit.sort_unstable();
            orbit.dedup();
            for &o in &orbit {
                seen[o] = true;
            }
            orbits.push(orbit);
        }
        orbits
    }
}

/// The orbit space X/G together with the projection X → X/G.  Generators
/// of the quotient are the orbit representatives (smallest generator id).
pub fn quotient(x: &SSet, action: &GroupAction) -> Result<(SSet, SMap)> {
    let orbits = action.gen_orbits(x);
    let mut rep_of = vec![usize::MAX; x.gen_count()];
    for orbit in &orbits {
        for &id in orbit {
            rep_of[id] = orbit[0];
        }
    }
    // quotient generator index per representative
    let mut q_id = vec![usize::MAX; x.gen_count()];
    for (k, orbit) in orbits.iter().enumerate() {
        q_id[orbit[0]] = k;
    }
    let mut gens = Vec::new();
    for orbit in &orbits {
        let rep = &x.gens()[orbit[0]];
        let faces: Vec<Simplex> = rep
            .faces
            .iter()
            .map(|f| Simplex { surj: f.surj.clone(), gen: q_id[rep_of[f.gen]] })
            .collect();
        gens.push(Gen { label: format!("[{}]", rep.label), dim: rep.dim, faces });
    }
    let q = SSet::new(gens)?;
    let proj = SMap {
        images: (0..x.gen_count())
            .map(|id| Simplex::gen(q_id[rep_of[id]], x.gens()[id].dim))
            .collect(),
    };
    proj.validate(x, &q)?;
    Ok((q, proj))
}
