//! Classifying bundles EG → BG and twisted cartesian products.

use super::word::Word;
use super::LoopGroup;
use crate::error::{Error, Result};
use crate::fincat::{transport_category, Group};
use crate::sset::{Gen, GroupAction, SMap, SSet, Simplex};
use std::collections::BTreeMap;

/// The universal bundle of a finite group H, truncated at `bound`:
/// EH_n = H^{n+1} with coordinate-deleting faces and the diagonal right
/// action; the base is the nerve of H and the projection sends
/// (h₀, …, h_n) to the chain (h₁h₀⁻¹, …, h_nh_{n-1}⁻¹).
pub struct EgBundle {
    pub group: Group,
    pub total: SSet,
    pub action: GroupAction,
    pub base: SSet,
    pub proj: SMap,
    /// the tuple of each total-space generator
    pub tuples: Vec<Vec<usize>>,
    index: BTreeMap<Vec<usize>, usize>,
}

/// Normal form of an arbitrary tuple as a simplex over the nondegenerate
/// (consecutive-distinct) tuples: a repeat at position j is the
/// degeneracy s_j of the tuple with the repeat removed.
fn tuple_normal_form(
    tuple: &[usize],
    index: &BTreeMap<Vec<usize>, usize>,
) -> Result<Simplex> {
    if let Some(j) = tuple.windows(2).position(|w| w[0] == w[1]) {
        let mut sub = tuple.to_vec();
        sub.remove(j + 1);
        let inner = tuple_normal_form(&sub, index)?;
        let sigma = crate::sset::DeltaOp::codegeneracy(j, tuple.len() - 2)?;
        return Ok(Simplex { surj: inner.surj.compose(&sigma)?, gen: inner.gen });
    }
    let id = *index
        .get(tuple)
        .ok_or_else(|| Error::Invalid("tuple outside tabulated range".into()))?;
    Ok(Simplex::gen(id, tuple.len() - 1))
}

pub fn eg_bundle(group: &Group, bound: usize) -> Result<EgBundle> {
    let mut gens = Vec::new();
    let mut tuples: Vec<Vec<usize>> = Vec::new();
    let mut index: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    let mut level: Vec<Vec<usize>> = group.elements().map(|h| vec![h]).collect();
    for n in 0..=bound {
        for t in &level {
            let mut faces = Vec::new();
            for i in 0..=n {
                if n == 0 {
                    break;
                }
                let mut sub = t.clone();
                sub.remove(i);
                faces.push(tuple_normal_form(&sub, &index)?);
            }
            index.insert(t.clone(), gens.len());
            tuples.push(t.clone());
            let label = format!(
                "{{{}}}",
                t.iter().map(|&h| group.label(h).to_string()).collect::<Vec<_>>().join(",")
            );
            gens.push(Gen { label, dim: n, faces });
        }
        level = level
            .iter()
            .flat_map(|t| {
                group.elements().filter_map(move |h| {
                    if *t.last().unwrap() == h {
                        None
                    } else {
                        let mut t2 = t.clone();
                        t2.push(h);
                        Some(t2)
                    }
                })
            })
            .collect();
    }
    let total = SSet::new(gens)?;
    let maps: Vec<SMap> = group
        .elements()
        .map(|g| SMap {
            images: tuples
                .iter()
                .map(|t| {
                    let moved: Vec<usize> = t.iter().map(|&h| group.mul(h, g)).collect();
                    Simplex::gen(index[&moved], t.len() - 1)
                })
                .collect(),
        })
        .collect();
    let action = GroupAction::new(group.clone(), maps, &total)?;

    let one_object = transport_category(group, &["*".to_string()], |w, _| w)?;
    let (base, chain_ids) = one_object.nerve_with_chains(bound)?;
    let proj_images: Result<Vec<Simplex>> = tuples
        .iter()
        .map(|t| {
            if t.len() == 1 {
                return Ok(Simplex::gen(0, 0));
            }
            // morphism ids in the one-object category coincide with group
            // element indices
            let chain: Vec<usize> =
                t.windows(2).map(|w| group.mul(w[1], group.inv(w[0]))).collect();
            one_object.chain_simplex(&chain, &chain_ids)
        })
        .collect();
    let proj = SMap { images: proj_images? };
    proj.validate(&total, &base)?;
    Ok(EgBundle { group: group.clone(), total, action, base, proj, tuples, index })
}

impl EgBundle {
    /// Normal-form simplex of an arbitrary tuple.
    pub fn tuple_simplex(&self, tuple: &[usize]) -> Result<Simplex> {
        tuple_normal_form(tuple, &self.index)
    }

    /// The contracting extra degeneracy (h₀, …, h_n) ↦ (e, h₀, …, h_n).
    pub fn contract(&self, tuple: &[usize]) -> Vec<usize> {
        let mut t = vec![self.group.e()];
        t.extend_from_slice(tuple);
        t
    }
}

/// Checks the twisting-function axioms for a function τ: X_n → H (n ≥ 1)
/// into a constant finite group, for all simplices of dimension ≤ bound:
/// τ(s₀x) = e, τ(s_jx) = τ(x) (j ≥ 1), τ(d_jx) = τ(x) (j ≥ 2), and
/// τ(d₁x) = τ(d₀x)·τ(x).
pub fn verify_twisting_finite<F>(x: &SSet, group: &Group, tau: F, bound: usize) -> Result<()>
where
    F: Fn(&Simplex) -> usize,
{
    for v in x.simplices(0) {
        if tau(&x.degeneracy(&v, 0)) != group.e() {
            return Err(Error::Invalid("twisting: τ(s₀v) ≠ e".into()));
        }
    }
    for n in 1..=bound {
        for s in x.simplices(n) {
            let t = tau(&s);
            if tau(&x.degeneracy(&s, 0)) != group.e() {
                return Err(Error::Invalid("twisting: τ(s₀x) ≠ e".into()));
            }
            for j in 1..=n {
                if tau(&x.degeneracy(&s, j)) != t {
                    return Err(Error::Invalid(format!("twisting: τ(s_{j}x) ≠ τ(x)")));
                }
            }
            if n >= 2 {
                for j in 2..=n {
                    if tau(&x.face(&s, j)?) != t {
                        return Err(Error::Invalid(format!("twisting: τ(d_{j}x) ≠ τ(x)")));
                    }
                }
                let lhs = tau(&x.face(&s, 1)?);
                let rhs = group.mul(tau(&x.face(&s, 0)?), t);
                if lhs != rhs {
                    return Err(Error::Invalid("twisting: τ(d₁x) ≠ τ(d₀x)·τ(x)".into()));
                }
            }
        }
    }
    Ok(())
}

/// The twisted cartesian product X ×_τ H for a constant finite group:
/// P_n = X_n × H, d₀(x, h) = (d₀x, τ(x)·h), dᵢ(x, h) = (dᵢx, h) for
/// i ≥ 1, with H acting on the right of the fibre coordinate.  Returns
/// (total, action, projection to X).
pub fn twisted_bundle_finite<F>(
    x: &SSet,
    group: &Group,
    tau: F,
    bound: usize,
) -> Result<(SSet, GroupAction, SMap)>
where
    F: Fn(&Simplex) -> usize,
{
    verify_twisting_finite(x, group, &tau, bound)?;
    let ord = group.order();
    // generator ids equal pid(xg, h) by the layout below
    let pid = |xg: usize, h: usize| xg * ord + h;
    let mut gens = Vec::new();
    for (xg, spec) in x.gens().iter().enumerate() {
        for h in group.elements() {
            let mut faces = Vec::new();
            for i in 0..=spec.dim {
                if spec.dim == 0 {
                    break;
                }
                let f = &spec.faces[i];
                let h2 = if i == 0 {
                    group.mul(tau(&Simplex::gen(xg, spec.dim)), h)
                } else {
                    h
                };
                faces.push(Simplex { surj: f.surj.clone(), gen: pid(f.gen, h2) });
            }
            gens.push(Gen {
                label: format!("({},{})", spec.label, group.label(h)),
                dim: spec.dim,
                faces,
            });
        }
    }
    let total = SSet::new(gens)?;
    let maps: Vec<SMap> = group
        .elements()
        .map(|k| SMap {
            images: x
                .gens()
                .iter()
                .enumerate()
                .flat_map(|(xg, spec)| {
                    group
                        .elements()
                        .map(move |h| Simplex::gen(pid(xg, group.mul(h, k)), spec.dim))
                })
                .collect(),
        })
        .collect();
    let action = GroupAction::new(group.clone(), maps, &total)?;
    let proj = SMap {
        images: x
            .gens()
            .iter()
            .enumerate()
            .flat_map(|(xg, spec)| group.elements().map(move |_| Simplex::gen(xg, spec.dim)))
            .collect(),
    };
    proj.validate(&total, x)?;
    Ok((total, action, proj))
}

/// The canonical twisting function for the loop group, τ(x) = ⟨x⟩⁻¹.
pub fn loop_twist(lg: &LoopGroup, x: &Simplex) -> Result<Word> {
    Ok(lg.letter(x)?.inv())
}

/// Verifies the twisting axioms for τ(x) = ⟨x⟩⁻¹ into the loop group, on
/// all simplices of dimension ≤ bound:
/// τ(d_jx) = d_{j-1}τ(x) (j ≥ 2), τ(d₁x) = τ(d₀x)·d₀τ(x),
/// τ(s_jx) = s_{j-1}τ(x) (j ≥ 1), τ(s₀x) = e.
pub fn verify_twisting_loop(x: &SSet, bound: usize) -> Result<()> {
    let lg = LoopGroup::new(x);
    for n in 1..=bound {
        for s in x.simplices(n) {
            let t = loop_twist(&lg, &s)?;
            if !loop_twist(&lg, &x.degeneracy(&s, 0))?.is_identity() {
                return Err(Error::Invalid("loop twisting: τ(s₀x) ≠ e".into()));
            }
            for j in 1..=n {
                if loop_twist(&lg, &x.degeneracy(&s, j))? != lg.degeneracy(&t, j - 1)? {
                    return Err(Error::Invalid(format!("loop twisting: τ(s_{j}x) fails")));
                }
            }
            if n >= 2 {
                for j in 2..=n {
                    if loop_twist(&lg, &x.face(&s, j)?)? != lg.face(&t, j - 1)? {
                        return Err(Error::Invalid(format!("loop twisting: τ(d_{j}x) fails")));
                    }
                }
                let lhs = loop_twist(&lg, &x.face(&s, 1)?)?;
                let rhs = loop_twist(&lg, &x.face(&s, 0)?)?.mul(&lg.face(&t, 0)?);
                if lhs != rhs {
                    return Err(Error::Invalid("loop twisting: τ(d₁x) fails".into()));
                }
            }
        }
    }
    Ok(())
}

/// Face map of the twisted cartesian product X ×_τ GX, acting on a pair
/// (x, w) with x ∈ X_n and w of loop degree n.
pub fn loop_bundle_face(
    lg: &LoopGroup,
    x: &Simplex,
    w: &Word,
    i: usize,
) -> Result<(Simplex, Word)> {
    if i == 0 {
        Ok((lg.space.face(x, 0)?, loop_twist(lg, x)?.mul(&lg.face(w, 0)?)))
    } else {
        Ok((lg.space.face(x, i)?, lg.face(w, i)?))
    }
}

pub fn loop_bundle_degeneracy(
    lg: &LoopGroup,
    x: &Simplex,
    w: &Word,
    j: usize,
) -> Result<(Simplex, Word)> {
    Ok((lg.space.degeneracy(x, j), lg.degeneracy(w, j)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sset::build;
    use num_bigint::BigInt;

    fn inv(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&k| BigInt::from(k)).collect()
    }

    #[test]
    fn eg_of_z2_is_contractible_sphere_tower() {
        let e = eg_bundle(&Group::cyclic(2), 4).unwrap();
        for n in 0..=4 {
            assert_eq!(e.total.gens_in_dim(n).len(), 2);
        }
        // truncated EZ/2 is 3-connected: homology of a point through deg 3
        let h = e.total.normalized_chains(4).unwrap().homology(3).unwrap();
        assert_eq!(h, vec![inv(&[0]), inv(&[]), inv(&[]), inv(&[])]);
        // the projection is invariant under the action
        for g in e.group.elements() {
            let moved = e.proj.compose(&SMap::identity(&e.total), &e.total, &e.base).unwrap();
            let twisted = e
                .proj
                .compose(&e.action.maps[g], &e.total, &e.base)
                .unwrap();
            assert_eq!(moved, twisted);
        }
    }

    #[test]
    fn bz2_homology() {
        // base of EZ/2 is BZ/2 = RP^∞: Z, Z/2, 0, Z/2 in degrees 0..3
        let e = eg_bundle(&Group::cyclic(2), 4).unwrap();
        let h = e.base.normalized_chains(4).unwrap().homology(3).unwrap();
        assert_eq!(h, vec![inv(&[0]), inv(&[2]), inv(&[]), inv(&[2])]);
    }

    #[test]
    fn contraction_identities() {
        let e = eg_bundle(&Group::cyclic(3), 3).unwrap();
        for t in &e.tuples {
            if t.len() > 3 {
                continue;
            }
            let c = e.contract(t);
            let cs = e.tuple_simplex(&c).unwrap();
            // d₀ ∘ c = id
            assert_eq!(e.total.face(&cs, 0).unwrap(), e.tuple_simplex(t).unwrap());
            // d_{i+1} ∘ c = c ∘ d_i
            for i in 0..t.len() - 1 {
                let mut dt = t.clone();
                dt.remove(i);
                assert_eq!(
                    e.total.face(&cs, i + 1).unwrap(),
                    e.tuple_simplex(&e.contract(&dt)).unwrap()
                );
            }
        }
    }

    #[test]
    fn twisted_circle_bundle_is_double_cover() {
        let c = build::circle().unwrap();
        let g = Group::cyclic(2);
        // τ(e-generator) = the nontrivial element; degenerate simplices
        // follow from the axioms
        let tau = |s: &Simplex| -> usize {
            if s.gen == 1 && !s.is_degenerate() {
                1
            } else if s.gen == 1 {
                // s_j e with j ≥ 1 keeps τ, s₀-degeneracies kill it
                if s.surj.degeneracy_word().contains(&0) { 0 } else { 1 }
            } else {
                0
            }
        };
        let (total, action, proj) = twisted_bundle_finite(&c, &g, tau, 4).unwrap();
        assert!(proj.is_surjective(&c));
        action.validate(&total).unwrap();
        // connected double cover of S¹ ≃ S¹
        let h = total.normalized_chains(2).unwrap().homology(1).unwrap();
        assert_eq!(h, vec![inv(&[0]), inv(&[0])]);
        // and the quotient by the action recovers the base
        let (q, _) = crate::sset::action::quotient(&total, &action).unwrap();
        let hq = q.normalized_chains(2).unwrap().homology(1).unwrap();
        assert_eq!(hq, vec![inv(&[0]), inv(&[0])]);
    }

    #[test]
    fn untwisted_bundle_is_product() {
        let c = build::circle().unwrap();
        let g = Group::cyclic(2);
        let (total, _, _) = twisted_bundle_finite(&c, &g, |_| 0, 4).unwrap();
        // trivial τ gives S¹ × Z/2: two circles
        let h = total.normalized_chains(2).unwrap().homology(1).unwrap();
        assert_eq!(h, vec![inv(&[0, 0]), inv(&[0, 0])]);
    }

    #[test]
    fn loop_twisting_axioms_hold() {
        for x in [build::circle().unwrap(), build::rp2().unwrap(), build::torus().unwrap()] {
            verify_twisting_loop(&x, 3).unwrap();
        }
    }

    #[test]
    fn loop_bundle_simplicial_identities() {
        let x = build::rp2().unwrap();
        let lg = LoopGroup::new(&x);
        for n in 2..=3usize {
            for s in x.simplices(n) {
                // sample fibre coordinates: identity and a letter
                let mut ws = vec![Word::identity()];
                if let Some(y) = x.simplices(n + 1).into_iter().find(|y| {
                    !y.surj.degeneracy_word().contains(&0)
                }) {
                    ws.push(lg.letter(&y).unwrap());
                }
                for w in ws {
                    for j in 1..=n {
                        for i in 0..j {
                            let (s1, w1) = loop_bundle_face(&lg, &s, &w, j).unwrap();
                            let a = loop_bundle_face(&lg, &s1, &w1, i).unwrap();
                            let (s2, w2) = loop_bundle_face(&lg, &s, &w, i).unwrap();
                            let b = loop_bundle_face(&lg, &s2, &w2, j - 1).unwrap();
                            assert_eq!(a, b, "d_{i} d_{j} on ({}, w)", x.simplex_label(&s));
                        }
                    }
                }
            }
        }
    }
}
