//! Linearisation: the left adjoint of the forgetful functor, applying
//! the reduced free abelian group construction to the fibres of the
//! retraction (basepoint goes to zero).

use super::{base_objects, AbMap, AbObj};
use crate::error::Result;
use crate::homalg::fp::FpGroup;
use crate::homalg::matrix::IntMatrix;
use crate::retract::presheaf::to_presheaf;
use crate::retract::{boundary_cell, cell, horn_cell, REnv, RObj};
use crate::sset::{SMap, Simplex};
use num_bigint::BigInt;
use num_traits::One;
use std::collections::BTreeMap;

/// The matrix of the reduced linearisation of a map of pointed sets,
/// given as an index table with basepoints at index 0.
fn linearise_table(tab: &[usize], target_size: usize) -> IntMatrix {
    let mut m = IntMatrix::zeros(target_size - 1, tab.len() - 1);
    for (y, &img) in tab.iter().enumerate().skip(1) {
        if img > 0 {
            m.set(img - 1, y - 1, BigInt::one());
        }
    }
    m
}

/// Z̃_W(Y): free abelian group on the non-basepoint fibre elements.
pub fn linearise(env: &REnv, y: &RObj, d: usize) -> Result<AbObj> {
    let f = to_presheaf(env, y, d)?;
    let (objects, index) = base_objects(env, d);
    debug_assert_eq!(objects.len(), f.objects.len());
    let values: Vec<FpGroup> =
        f.elems.iter().map(|e| FpGroup::free(e.len() - 1)).collect();
    let mut maps = BTreeMap::new();
    for ((t, alpha, g), tab) in &f.maps {
        let s = f.source(env, *t, alpha, *g)?;
        maps.insert((*t, alpha.clone(), *g), linearise_table(tab, f.elems[s].len()));
    }
    let out = AbObj { d, objects, index, values, maps };
    out.validate(env)?;
    Ok(out)
}

/// The matrix form of a retractive map after linearisation.
pub fn linearise_map(env: &REnv, a: &RObj, b: &RObj, f: &SMap, d: usize) -> Result<AbMap> {
    let fa = to_presheaf(env, a, d)?;
    let fb = to_presheaf(env, b, d)?;
    let mut mats = Vec::new();
    for (t, (_, w)) in fa.objects.iter().enumerate() {
        let fib_a = a.fibre(env, w)?;
        let fib_b = b.fibre(env, w)?;
        let pos: BTreeMap<Simplex, usize> = fib_b.iter().cloned().zip(0..).collect();
        let mut tab = Vec::new();
        for x in &fib_a {
            tab.push(pos[&f.apply(&a.total, &b.total, x)?]);
        }
        mats.push(linearise_table(&tab, fb.elems[t].len()));
    }
    Ok(AbMap { mats })
}

/// Δ^ab[n,w] := Z̃_W(Δ[n,w]).
pub fn ab_cell(env: &REnv, w: &Simplex, d: usize) -> Result<AbObj> {
    linearise(env, &cell(env, w)?, d)
}

pub fn ab_boundary(env: &REnv, w: &Simplex, d: usize) -> Result<AbObj> {
    linearise(env, &boundary_cell(env, w)?, d)
}

pub fn ab_horn(env: &REnv, w: &Simplex, k: usize, d: usize) -> Result<AbObj> {
    linearise(env, &horn_cell(env, w, k)?, d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::retract::{hom_maps, induce, is_isomorphic};
    use crate::sset::build;

    #[test]
    fn terminal_linearises_to_zero() {
        let (w, action) = build::double_cover_circle().unwrap();
        let env = REnv::new(w, action).unwrap();
        let z = linearise(&env, &RObj::terminal(&env), 2).unwrap();
        assert!(z.is_zero());
    }

    #[test]
    fn cell_fibre_ranks() {
        let env = REnv::plain(build::point());
        let c = ab_cell(&env, &Simplex::gen(0, 0), 1).unwrap();
        // value at (0,*) is free of rank 1
        assert_eq!(
            c.values[c.index[&(0, Simplex::gen(0, 0))]].invariants(),
            vec![BigInt::from(0)]
        );
    }

    #[test]
    fn sum_rank_is_relative_simplex_count() {
        let env = REnv::plain(build::circle().unwrap());
        let e = env.w.find_gen("e").unwrap();
        let c = cell(&env, &Simplex::gen(e, 1)).unwrap();
        let z = linearise(&env, &c, 2).unwrap();
        for n in 0..=2 {
            let rank: usize = z
                .objects
                .iter()
                .enumerate()
                .filter(|(_, (m, _))| *m == n)
                .map(|(t, _)| z.values[t].ambient)
                .sum();
            assert_eq!(rank, c.total.simplices(n).len() - env.w.simplices(n).len());
        }
    }

    #[test]
    fn linearisation_commutes_with_induction_on_cells() {
        // G_*(Δ^ab[n,w]) ≅ Δ^ab[n,w]: compute the left side through the
        // space level, where induction is an explicit pushout
        let (w, action) = build::double_cover_circle().unwrap();
        let env = REnv::new(w, action).unwrap();
        let plain = REnv::plain(env.w.clone());
        let e0 = env.w.find_gen("e0").unwrap();
        let small = cell(&plain, &Simplex::gen(e0, 1)).unwrap();
        let induced = induce(&env, &small.total, &small.r, &small.s).unwrap();
        let g_star = linearise(&env, &induced, 2).unwrap();
        let want_space = cell(&env, &Simplex::gen(e0, 1)).unwrap();
        let want = ab_cell(&env, &Simplex::gen(e0, 1), 2).unwrap();
        assert!(is_isomorphic(&env, &induced, &want_space, 2).unwrap());
        // find the explicit space-level isomorphism and linearise it
        let fs = hom_maps(&env, &induced, &want_space, 2).unwrap();
        let witness = fs
            .iter()
            .find_map(|f| {
                let m = linearise_map(&env, &induced, &want_space, f, 2).unwrap();
                if m.is_isomorphism(&g_star, &want) {
                    Some(m)
                } else {
                    None
                }
            })
            .expect("an isomorphism must linearise to an isomorphism");
        witness.validate(&env, &g_star, &want).unwrap();
    }
}
