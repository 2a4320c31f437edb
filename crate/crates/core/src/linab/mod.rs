//! Abelian group objects over an equivariant base: contravariant functors
//! from the equivariant simplex category to finitely generated abelian
//! groups, stored as full value tables through a dimension bound.

pub mod adj;
pub mod hcoeff;
pub mod homabs;
pub mod linearise;
pub mod sab;
pub mod tensor;

pub use adj::{collapse_ab_map, coinduce_t_map, ct_counit, ct_unit};
pub use hcoeff::{homology_coefficients, homology_coefficients_map};
pub use homabs::{ab_hom_group, ab_hom_maps, underlying};
pub use linearise::{ab_boundary, ab_cell, ab_horn, linearise, linearise_map};
pub use sab::{collapse_ab, sum_over_w, SAb};
pub use tensor::{tensor_ab, tensor_space_ab};

use crate::error::{Error, Result};
use crate::homalg::fp::{FpGroup, FpMap};
use crate::homalg::matrix::IntMatrix;
use crate::retract::REnv;
use crate::sset::{DeltaOp, Simplex};
use std::collections::BTreeMap;

/// An abelian object: a finitely generated abelian group for every base
/// simplex (n, w) with n ≤ d, and a structure matrix for every morphism
/// (α, g) of the truncated equivariant simplex category.
#[derive(Clone, Debug)]
pub struct AbObj {
    pub d: usize,
    pub objects: Vec<(usize, Simplex)>,
    pub index: BTreeMap<(usize, Simplex), usize>,
    pub values: Vec<FpGroup>,
    /// matrix of the map value(t) → value(source) along (α, g) into t
    pub maps: BTreeMap<(usize, DeltaOp, usize), IntMatrix>,
}

/// The object scaffold shared by all abelian objects over a base.
pub fn base_objects(
    env: &REnv,
    d: usize,
) -> (Vec<(usize, Simplex)>, BTreeMap<(usize, Simplex), usize>) {
    let mut objects = Vec::new();
    let mut index = BTreeMap::new();
    for n in 0..=d {
        for w in env.w.simplices(n) {
            index.insert((n, w.clone()), objects.len());
            objects.push((n, w));
        }
    }
    (objects, index)
}

impl AbObj {
    /// The zero object.
    pub fn zero(env: &REnv, d: usize) -> AbObj {
        let (objects, index) = base_objects(env, d);
        let values = vec![FpGroup::zero(); objects.len()];
        let mut maps = BTreeMap::new();
        for (t, (n, _)) in objects.iter().enumerate() {
            for m in 0..=d {
                for alpha in DeltaOp::all(m, *n) {
                    for g in env.group().elements() {
                        maps.insert((t, alpha.clone(), g), IntMatrix::zeros(0, 0));
                    }
                }
            }
        }
        AbObj { d, objects, index, values, maps }
    }

    pub fn source(&self, env: &REnv, t: usize, alpha: &DeltaOp, g: usize) -> Result<usize> {
        let (_, w) = &self.objects[t];
        let v = env.action.act(&env.w, &env.w.apply(w, alpha)?, g)?;
        self.index
            .get(&(alpha.dom(), v))
            .copied()
            .ok_or_else(|| Error::Invalid("source object missing".into()))
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| v.is_trivial())
    }

    /// Validates well-definedness of all structure maps, identity maps,
    /// and functoriality on generating morphisms (cofaces, codegeneracies
    /// and group elements) composed with arbitrary stored morphisms.
    pub fn validate(&self, env: &REnv) -> Result<()> {
        let e = env.group().e();
        for ((t, alpha, g), mat) in &self.maps {
            let s = self.source(env, *t, alpha, *g)?;
            let f = FpMap::new(mat.clone());
            if !f.is_well_defined(&self.values[*t], &self.values[s]) {
                return Err(Error::Invalid("structure map not well defined".into()));
            }
        }
        for (t, (n, _)) in self.objects.iter().enumerate() {
            let id = &self.maps[&(t, DeltaOp::identity(*n), e)];
            if !FpMap::new(id.clone())
                .same_map(&FpMap::identity(self.values[t].ambient), &self.values[t])
            {
                return Err(Error::Invalid("identity morphism does not act as identity".into()));
            }
        }
        // generating (β, h) into the source of every stored (α, g)
        for ((t, alpha, g), first) in &self.maps {
            let s = self.source(env, *t, alpha, *g)?;
            let m = alpha.dom();
            let mut generators: Vec<(DeltaOp, usize)> = Vec::new();
            if m >= 1 {
                for i in 0..=m {
                    generators.push((DeltaOp::coface(i, m)?, e));
                }
            }
            if m < self.d {
                for j in 0..=m {
                    generators.push((DeltaOp::codegeneracy(j, m)?, e));
                }
            }
            for h in env.group().elements() {
                generators.push((DeltaOp::identity(m), h));
            }
            for (beta, h) in generators {
                let second = &self.maps[&(s, beta.clone(), h)];
                let key = (*t, alpha.compose(&beta)?, env.group().mul(*g, h));
                let target = self.source(env, *t, &key.1, key.2)?;
                let comp = &self.maps[&key];
                if !FpMap::new(second.mul(first))
                    .same_map(&FpMap::new(comp.clone()), &self.values[target])
                {
                    return Err(Error::Invalid("abelian object is not functorial".into()));
                }
            }
        }
        Ok(())
    }
}

/// A morphism of abelian objects: one matrix per base object.
#[derive(Clone, Debug)]
pub struct AbMap {
    pub mats: Vec<IntMatrix>,
}

impl AbMap {
    pub fn identity(y: &AbObj) -> AbMap {
        AbMap { mats: y.values.iter().map(|v| IntMatrix::identity(v.ambient)).collect() }
    }

    pub fn validate(&self, env: &REnv, a: &AbObj, b: &AbObj) -> Result<()> {
        if self.mats.len() != a.objects.len() || a.objects.len() != b.objects.len() {
            return Err(Error::Invalid("object count mismatch".into()));
        }
        for (t, mat) in self.mats.iter().enumerate() {
            if !FpMap::new(mat.clone()).is_well_defined(&a.values[t], &b.values[t]) {
                return Err(Error::Invalid("component not well defined".into()));
            }
        }
        for ((t, alpha, g), am) in &a.maps {
            let s = a.source(env, *t, alpha, *g)?;
            let bm = &b.maps[&(*t, alpha.clone(), *g)];
            let lhs = self.mats[s].mul(am);
            let rhs = bm.mul(&self.mats[*t]);
            if !FpMap::new(lhs).same_map(&FpMap::new(rhs), &b.values[s]) {
                return Err(Error::Invalid("morphism is not natural".into()));
            }
        }
        Ok(())
    }

    /// Componentwise isomorphism test (kernel and cokernel trivial).
    pub fn is_isomorphism(&self, a: &AbObj, b: &AbObj) -> bool {
        self.mats
            .iter()
            .enumerate()
            .all(|(t, m)| FpMap::new(m.clone()).is_isomorphism(&a.values[t], &b.values[t]))
    }
}

/// Coinduction T: precomposition with the projection of the equivariant
/// simplex category of P onto that of the point; the value of T(M) at
/// (n, p) is M_n, with structure maps taken from M.
pub fn coinduce_t(env_p: &REnv, env_pt: &REnv, m: &AbObj) -> Result<AbObj> {
    if m.d < env_p.w.top_dim() {
        return Err(Error::Invalid("truncation too small".into()));
    }
    let d = m.d;
    let (objects, index) = base_objects(env_p, d);
    let mut values = Vec::new();
    for (n, _) in &objects {
        let t_pt = m.index[&(*n, pt_simplex(env_pt, *n))];
        values.push(m.values[t_pt].clone());
    }
    let mut maps = BTreeMap::new();
    for (t, (n, _)) in objects.iter().enumerate() {
        let t_pt = m.index[&(*n, pt_simplex(env_pt, *n))];
        for mm in 0..=d {
            for alpha in DeltaOp::all(mm, *n) {
                for g in env_p.group().elements() {
                    maps.insert(
                        (t, alpha.clone(), g),
                        m.maps[&(t_pt, alpha.clone(), g)].clone(),
                    );
                }
            }
        }
    }
    let out = AbObj { d, objects, index, values, maps };
    out.validate(env_p)?;
    Ok(out)
}

/// The unique n-simplex of the one-point base.
pub fn pt_simplex(env_pt: &REnv, n: usize) -> Simplex {
    let mut x = Simplex::gen(0, 0);
    for j in 0..n {
        x = env_pt.w.degeneracy(&x, j);
    }
    x
}

/// Pullback Ξ*: the value of Ξ*(Y) at (n, p) is Y(n, ξ(p)).
pub fn pullback_ab(env_p: &REnv, env_x: &REnv, y: &AbObj, xi: &crate::sset::SMap) -> Result<AbObj> {
    xi.validate(&env_p.w, &env_x.w)?;
    let d = y.d;
    let (objects, index) = base_objects(env_p, d);
    let mut values = Vec::new();
    let mut xobj = Vec::new();
    for (n, p) in &objects {
        let xp = xi.apply(&env_p.w, &env_x.w, p)?;
        let t_x = y.index[&(*n, xp)];
        xobj.push(t_x);
        values.push(y.values[t_x].clone());
    }
    let mut maps = BTreeMap::new();
    for (t, (n, _)) in objects.iter().enumerate() {
        for m in 0..=d {
            for alpha in DeltaOp::all(m, *n) {
                for g in env_p.group().elements() {
                    maps.insert(
                        (t, alpha.clone(), g),
                        y.maps[&(xobj[t], alpha.clone(), g)].clone(),
                    );
                }
            }
        }
    }
    let out = AbObj { d, objects, index, values, maps };
    out.validate(env_p)?;
    Ok(out)
}
