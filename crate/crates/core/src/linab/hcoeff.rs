//! The homology coefficient functor H̃_*(K; Y) = π_* ⊕_W (Z̃_W K ⊗ Y),
//! in object and map form.  The map form carries the weak-equivalence
//! verdict for the given test object K.

use super::sab::sum_over_w;
use super::tensor::tensor_ab;
use super::{AbMap, AbObj};
use crate::error::{Error, Result};
use crate::homalg::fp::{induced_on_homology, FpMap};
use crate::homalg::matrix::IntMatrix;
use crate::linab::linearise::linearise;
use crate::retract::{REnv, RObj};
use num_bigint::BigInt;

/// H̃_*(K; Y) for degrees 0..=range.
pub fn homology_coefficients(
    env: &REnv,
    k: &RObj,
    y: &AbObj,
    range: usize,
) -> Result<Vec<Vec<BigInt>>> {
    if range >= y.d {
        return Err(Error::Dimension("range exceeds truncation bound".into()));
    }
    let zk = linearise(env, k, y.d)?;
    let sab = sum_over_w(env, &tensor_ab(env, &zk, y)?)?;
    sab.homotopy(range)
}

/// H̃_*(K; f) for a morphism f: Y → Z of abelian objects: the induced
/// matrices on homology and an isomorphism verdict per degree.
pub fn homology_coefficients_map(
    env: &REnv,
    k: &RObj,
    y: &AbObj,
    z: &AbObj,
    f: &AbMap,
    range: usize,
) -> Result<Vec<(FpMap, bool)>> {
    if range >= y.d.min(z.d) {
        return Err(Error::Dimension("range exceeds truncation bound".into()));
    }
    f.validate(env, y, z)?;
    let zk = linearise(env, k, y.d.min(z.d))?;
    let ty = tensor_ab(env, &zk, y)?;
    let tz = tensor_ab(env, &zk, z)?;
    let sy = sum_over_w(env, &ty)?;
    let sz = sum_over_w(env, &tz)?;
    // blockwise id ⊗ f per degree
    let mut chain_maps = Vec::new();
    for n in 0..=sy.d {
        let mut m = IntMatrix::zeros(sz.groups[n].ambient, sy.groups[n].ambient);
        for (bi, &t) in sy.blocks[n].iter().enumerate() {
            let comp = IntMatrix::identity(zk.values[t].ambient).kronecker(&f.mats[t]);
            let bj = sz.blocks[n].iter().position(|&u| u == t).unwrap();
            for r in 0..comp.rows() {
                for c in 0..comp.cols() {
                    m.set(sz.offsets[n][bj] + r, sy.offsets[n][bi] + c, comp.get(r, c).clone());
                }
            }
        }
        chain_maps.push(FpMap::new(m));
    }
    let cy = sy.unnormalized()?;
    let cz = sz.unnormalized()?;
    let mut out = Vec::new();
    for n in 0..=range {
        let (ha, hb, induced) = induced_on_homology(&cy, &cz, &chain_maps, n);
        let iso = induced.is_isomorphism(&ha.group, &hb.group);
        out.push((induced, iso));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linab::linearise::ab_cell;
    use crate::linab::tensor::base_times;
    use crate::sset::build;
    use crate::sset::Simplex;

    fn inv(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn pointed_circle(env: &REnv) -> crate::retract::RObj {
        let circle = build::circle().unwrap();
        let v = circle.find_gen("v").unwrap();
        let action = crate::sset::GroupAction::trivial(&circle);
        crate::retract::pointed(env, circle, action, v).unwrap()
    }

    #[test]
    fn circle_coefficients_over_point() {
        // K = S⁰ over the point, Y = Z̃(pointed S¹): H̃_0 = 0, H̃_1 = Z
        let env = REnv::plain(build::point());
        let k = base_times(&env, &build::point()).unwrap();
        let y = linearise(&env, &pointed_circle(&env), 3).unwrap();
        let h = homology_coefficients(&env, &k, &y, 2).unwrap();
        assert_eq!(h, vec![inv(&[]), inv(&[0]), inv(&[])]);
    }

    #[test]
    fn zero_coefficients_vanish() {
        let env = REnv::plain(build::circle().unwrap());
        let e = env.w.find_gen("e").unwrap();
        let k = crate::retract::cell(&env, &Simplex::gen(e, 1)).unwrap();
        let h = homology_coefficients(&env, &k, &AbObj::zero(&env, 3), 2).unwrap();
        assert!(h.iter().all(|d| d.is_empty()));
    }

    #[test]
    fn identity_map_gives_iso_verdicts() {
        let env = REnv::plain(build::circle().unwrap());
        let e = env.w.find_gen("e").unwrap();
        let k = crate::retract::cell(&env, &Simplex::gen(e, 1)).unwrap();
        let y = ab_cell(&env, &Simplex::gen(e, 1), 3).unwrap();
        let verdicts =
            homology_coefficients_map(&env, &k, &y, &y, &AbMap::identity(&y), 2).unwrap();
        assert!(verdicts.iter().all(|(_, iso)| *iso));
    }

    #[test]
    fn zero_map_to_zero_object_detected() {
        let env = REnv::plain(build::point());
        let k = base_times(&env, &build::point()).unwrap();
        let y = linearise(&env, &pointed_circle(&env), 3).unwrap();
        let z = AbObj::zero(&env, 3);
        let f = AbMap { mats: y.values.iter().map(|v| IntMatrix::zeros(0, v.ambient)).collect() };
        let verdicts = homology_coefficients_map(&env, &k, &y, &z, &f, 2).unwrap();
        // H̃_1(K;Y) = Z but H̃_1(K;0) = 0, so the verdict in degree 1 is negative
        assert!(!verdicts[1].1);
        assert!(verdicts[2].1);
    }
}
