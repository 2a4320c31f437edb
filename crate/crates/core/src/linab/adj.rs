//! The adjunction between collapse C (to the point base) and coinduction
//! T: unit, counit, their action on morphisms, and the triangle
//! identities.

use super::sab::sum_over_w;
use super::{base_objects, coinduce_t, pt_simplex, AbMap, AbObj};
use crate::error::Result;
use crate::homalg::matrix::IntMatrix;
use crate::retract::REnv;
use num_bigint::BigInt;
use num_traits::One;

/// Unit η_Y: Y → T(C(Y)); the component at (n, p) is the inclusion of
/// the p-indexed block into ⊕_{p' ∈ P_n} Y(n, p').
pub fn ct_unit(env_p: &REnv, y: &AbObj) -> Result<AbMap> {
    let sab = sum_over_w(env_p, y)?;
    let mut mats = Vec::new();
    for (t, (n, _)) in y.objects.iter().enumerate() {
        let k = sab.blocks[*n].iter().position(|&b| b == t).unwrap();
        let off = sab.offsets[*n][k];
        let mut m = IntMatrix::zeros(sab.groups[*n].ambient, y.values[t].ambient);
        for j in 0..y.values[t].ambient {
            m.set(off + j, j, BigInt::one());
        }
        mats.push(m);
    }
    Ok(AbMap { mats })
}

/// Counit ε_M: C(T(M)) → M; the component in degree n folds the copies
/// of M_n indexed by P_n.
pub fn ct_counit(env_p: &REnv, env_pt: &REnv, m: &AbObj) -> Result<AbMap> {
    let tm = coinduce_t(env_p, env_pt, m)?;
    let sab = sum_over_w(env_p, &tm)?;
    let mut mats = Vec::new();
    for (t, (n, _)) in m.objects.iter().enumerate() {
        let amb = m.values[t].ambient;
        let mut fold = IntMatrix::zeros(amb, sab.groups[*n].ambient);
        for c in 0..sab.blocks[*n].len() {
            for j in 0..amb {
                fold.set(j, sab.offsets[*n][c] + j, BigInt::one());
            }
        }
        mats.push(fold);
    }
    Ok(AbMap { mats })
}

/// C applied to a morphism f: A → B over P: block sums per degree.
pub fn collapse_ab_map(env_p: &REnv, a: &AbObj, b: &AbObj, f: &AbMap) -> Result<AbMap> {
    let sa = sum_over_w(env_p, a)?;
    let sb = sum_over_w(env_p, b)?;
    let mut mats = Vec::new();
    for n in 0..=a.d {
        let mut m = IntMatrix::zeros(sb.groups[n].ambient, sa.groups[n].ambient);
        for (k, &t) in sa.blocks[n].iter().enumerate() {
            let kb = sb.blocks[n].iter().position(|&u| u == t).unwrap();
            for r in 0..f.mats[t].rows() {
                for c in 0..f.mats[t].cols() {
                    m.set(
                        sb.offsets[n][kb] + r,
                        sa.offsets[n][k] + c,
                        f.mats[t].get(r, c).clone(),
                    );
                }
            }
        }
        mats.push(m);
    }
    Ok(AbMap { mats })
}

/// T applied to a morphism f: M → N over the point: the component at
/// (n, p) is the degree-n component of f.
pub fn coinduce_t_map(env_p: &REnv, env_pt: &REnv, m: &AbObj, f: &AbMap) -> Result<AbMap> {
    let (objects, _) = base_objects(env_p, m.d);
    let mats = objects
        .iter()
        .map(|(n, _)| f.mats[m.index[&(*n, pt_simplex(env_pt, *n))]].clone())
        .collect();
    Ok(AbMap { mats })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linab::sab::collapse_ab;
    use crate::fincat::Group;
    use crate::homalg::fp::{induced_on_homology, FpMap};
    use crate::linab::linearise::{ab_cell, linearise};
    use crate::retract::cell;
    use crate::sgrp::bundle::eg_bundle;
    use crate::sset::{build, Simplex};

    /// Double-cover circle base with its Z/2 environment and the matching
    /// one-point environment.
    fn covers() -> (REnv, REnv) {
        let (p, action) = build::double_cover_circle().unwrap();
        let group = action.group.clone();
        let env_p = REnv::new(p, action).unwrap();
        let env_pt = REnv::with_trivial_action(build::point(), group).unwrap();
        (env_p, env_pt)
    }

    fn is_identity_map(f: &AbMap, y: &AbObj) -> bool {
        f.mats.iter().enumerate().all(|(t, m)| {
            FpMap::new(m.clone())
                .same_map(&FpMap::new(IntMatrix::identity(m.cols())), &y.values[t])
        })
    }

    #[test]
    fn unit_and_counit_are_natural() {
        let (env_p, env_pt) = covers();
        let e = env_p.w.find_gen("e0").or_else(|| env_p.w.find_gen("e")).unwrap();
        let y = linearise(&env_p, &cell(&env_p, &Simplex::gen(e, 1)).unwrap(), 2).unwrap();
        let tcy = coinduce_t(&env_p, &env_pt, &collapse_ab(&env_p, &env_pt, &y).unwrap()).unwrap();
        ct_unit(&env_p, &y).unwrap().validate(&env_p, &y, &tcy).unwrap();

        let m = ab_cell(&env_pt, &Simplex::gen(0, 0), 2).unwrap();
        let ctm =
            collapse_ab(&env_p, &env_pt, &coinduce_t(&env_p, &env_pt, &m).unwrap()).unwrap();
        ct_counit(&env_p, &env_pt, &m).unwrap().validate(&env_pt, &ctm, &m).unwrap();
    }

    #[test]
    fn triangle_identities() {
        let (env_p, env_pt) = covers();
        let e = env_p.w.find_gen("e0").or_else(|| env_p.w.find_gen("e")).unwrap();
        let y = linearise(&env_p, &cell(&env_p, &Simplex::gen(e, 1)).unwrap(), 2).unwrap();
        let cy = collapse_ab(&env_p, &env_pt, &y).unwrap();
        let tcy = coinduce_t(&env_p, &env_pt, &cy).unwrap();

        // ε_{C(Y)} ∘ C(η_Y) = id_{C(Y)}
        let eta = ct_unit(&env_p, &y).unwrap();
        let ceta = collapse_ab_map(&env_p, &y, &tcy, &eta).unwrap();
        let eps_cy = ct_counit(&env_p, &env_pt, &cy).unwrap();
        let comp1 = AbMap {
            mats: (0..cy.objects.len()).map(|t| eps_cy.mats[t].mul(&ceta.mats[t])).collect(),
        };
        assert!(is_identity_map(&comp1, &cy));

        // T(ε_M) ∘ η_{T(M)} = id_{T(M)} for M = Z[G]
        let m = ab_cell(&env_pt, &Simplex::gen(0, 0), 2).unwrap();
        let tm = coinduce_t(&env_p, &env_pt, &m).unwrap();
        let eta_tm = ct_unit(&env_p, &tm).unwrap();
        let eps = ct_counit(&env_p, &env_pt, &m).unwrap();
        let teps = coinduce_t_map(&env_p, &env_pt, &m, &eps).unwrap();
        let comp2 = AbMap {
            mats: (0..tm.objects.len()).map(|t| teps.mats[t].mul(&eta_tm.mats[t])).collect(),
        };
        assert!(is_identity_map(&comp2, &tm));
    }

    #[test]
    fn counit_is_homology_iso_over_contractible_base() {
        // P = the universal Z/2 bundle truncated above dimension 3,
        // M = Z[G]; the counit C(T(M)) → M induces isomorphisms on
        // homotopy groups through degree 2.
        let group = Group::cyclic(2);
        let eg = eg_bundle(&group, 3).unwrap();
        let env_p = REnv::new(eg.total, eg.action).unwrap();
        let env_pt = REnv::with_trivial_action(build::point(), group).unwrap();
        let m = ab_cell(&env_pt, &Simplex::gen(0, 0), 4).unwrap();
        let tm = coinduce_t(&env_p, &env_pt, &m).unwrap();
        let ctm = collapse_ab(&env_p, &env_pt, &tm).unwrap();
        let eps = ct_counit(&env_p, &env_pt, &m).unwrap();
        eps.validate(&env_pt, &ctm, &m).unwrap();
        let ca = sum_over_w(&env_pt, &ctm).unwrap().unnormalized().unwrap();
        let cb = sum_over_w(&env_pt, &m).unwrap().unnormalized().unwrap();
        let chain_maps: Vec<FpMap> = (0..=m.d)
            .map(|n| FpMap::new(eps.mats[m.index[&(n, pt_simplex(&env_pt, n))]].clone()))
            .collect();
        for n in 0..=2 {
            let (ha, hb, induced) = induced_on_homology(&ca, &cb, &chain_maps, n);
            assert!(induced.is_isomorphism(&ha.group, &hb.group), "degree {n}");
        }
    }
}
