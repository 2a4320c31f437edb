//! The underlying pointed presheaf of an abelian object with finite
//! values, and exact enumeration of morphisms between abelian objects.

use super::{AbMap, AbObj};
use crate::error::{Error, Result};
use crate::homalg::fp::{preimage_lattice, FpGroup};
use crate::homalg::matrix::IntMatrix;
use crate::homalg::snf::solve_mat;
use crate::retract::presheaf::PointedPresheaf;
use crate::retract::REnv;
use crate::sset::DeltaOp;
use num_bigint::BigInt;
use num_traits::Zero;
use std::collections::BTreeMap;

const CANDIDATE_LIMIT: u128 = 1_000_000;

/// Element tables of the values: coset representatives, zero first.
fn value_elements(y: &AbObj) -> Result<Vec<Vec<Vec<BigInt>>>> {
    y.values
        .iter()
        .map(|v| {
            v.elements()
                .ok_or_else(|| Error::TooLarge("abelian object has infinite values".into()))
        })
        .collect()
}

/// The underlying pointed presheaf U(Z) of an abelian object whose
/// values are all finite; the basepoint is the zero element.
pub fn underlying(env: &REnv, z: &AbObj) -> Result<PointedPresheaf> {
    let elements = value_elements(z)?;
    let mut pos: Vec<BTreeMap<Vec<BigInt>, usize>> = Vec::new();
    for elems in &elements {
        pos.push(elems.iter().cloned().zip(0..).collect());
    }
    let elems: Vec<Vec<String>> = elements
        .iter()
        .enumerate()
        .map(|(t, es)| {
            es.iter()
                .map(|x| {
                    let coords: Vec<String> = x.iter().map(|c| c.to_string()).collect();
                    format!("{t}:[{}]", coords.join(","))
                })
                .collect()
        })
        .collect();
    let mut maps = BTreeMap::new();
    for (key, mat) in &z.maps {
        let s = z.source(env, key.0, &key.1, key.2)?;
        let mut tab = Vec::new();
        for x in &elements[key.0] {
            let img = z.values[s].reduce(&mat.mul_vec(x));
            tab.push(pos[s][&img]);
        }
        maps.insert(key.clone(), tab);
    }
    Ok(PointedPresheaf {
        d: z.d,
        objects: z.objects.clone(),
        index: z.index.clone(),
        elems,
        maps,
    })
}

/// All morphisms a → b of abelian objects, enumerated over the images of
/// the ambient generators of a when b has finite values.
pub fn ab_hom_maps(env: &REnv, a: &AbObj, b: &AbObj) -> Result<Vec<AbMap>> {
    let elements = value_elements(b)?;
    // slots: one per (object, ambient generator of a)
    let mut slots: Vec<(usize, usize)> = Vec::new();
    let mut total: u128 = 1;
    for (t, v) in a.values.iter().enumerate() {
        for i in 0..v.ambient {
            slots.push((t, i));
            total = total.saturating_mul(elements[t].len() as u128);
        }
    }
    if total > CANDIDATE_LIMIT {
        return Err(Error::TooLarge("morphism enumeration exceeds candidate budget".into()));
    }
    let mut found = Vec::new();
    let mut choice = vec![0usize; slots.len()];
    loop {
        let mut mats = Vec::new();
        for (t, v) in a.values.iter().enumerate() {
            let mut m = IntMatrix::zeros(b.values[t].ambient, v.ambient);
            for (k, &(st, i)) in slots.iter().enumerate() {
                if st == t {
                    m.set_column(i, &elements[t][choice[k]]);
                }
            }
            mats.push(m);
        }
        let cand = AbMap { mats };
        if cand.validate(env, a, b).is_ok() {
            found.push(cand);
        }
        let mut k = 0;
        while k < slots.len() {
            choice[k] += 1;
            if choice[k] < elements[slots[k].0].len() {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
        if k == slots.len() {
            break;
        }
    }
    Ok(found)
}

/// The additive order of a morphism in the hom group (the target values
/// must be finite).
pub fn hom_element_order(env: &REnv, b: &AbObj, f: &AbMap) -> usize {
    let _ = env;
    let mut order = 1usize;
    let mut acc = f.mats.clone();
    loop {
        let zero = acc.iter().enumerate().all(|(t, m)| {
            (0..m.cols()).all(|j| {
                b.values[t].reduce(&m.column(j)).iter().all(|c| c.is_zero())
            })
        });
        if zero {
            return order;
        }
        acc = acc
            .iter()
            .enumerate()
            .map(|(t, m)| {
                IntMatrix::from_fn(m.rows(), m.cols(), |i, j| m.get(i, j) + f.mats[t].get(i, j))
            })
            .collect();
        order += 1;
        assert!(order < 1_000_000, "unexpectedly large element order");
    }
}

/// The hom group Hom(a, b) of abelian objects as a finitely presented
/// abelian group, by integer linear algebra: a morphism is a family of
/// matrices (one per base object), constrained by well-definedness on
/// the relations of `a` and by naturality against the generating
/// morphisms, both as congruences modulo the relations of `b`; two
/// families are identified when they differ by relations of `b`.
pub fn ab_hom_group(env: &REnv, a: &AbObj, b: &AbObj) -> Result<FpGroup> {
    let nt = a.objects.len();
    if nt != b.objects.len() {
        return Err(Error::Invalid("object count mismatch".into()));
    }
    let amb_a: Vec<usize> = a.values.iter().map(|v| v.ambient).collect();
    let amb_b: Vec<usize> = b.values.iter().map(|v| v.ambient).collect();
    let mut off = vec![0usize; nt];
    let mut total = 0usize;
    for t in 0..nt {
        off[t] = total;
        total += amb_a[t] * amb_b[t];
    }
    // entry (r, c) of the component at object t
    let slot = |t: usize, r: usize, c: usize| off[t] + c * amb_b[t] + r;

    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    let mut blocks: Vec<IntMatrix> = Vec::new();
    // one congruence vector of length amb_b[s], taken modulo rels of b at s
    let mut congruence = |s: usize, fill: &mut dyn FnMut(usize, &mut Vec<BigInt>)| {
        for r in 0..amb_b[s] {
            let mut row = vec![BigInt::zero(); total];
            fill(r, &mut row);
            rows.push(row);
        }
        blocks.push(b.values[s].rels.clone());
    };

    for t in 0..nt {
        // well-definedness: m_t · (relation column of a) ≡ 0
        for k in 0..a.values[t].rels.cols() {
            congruence(t, &mut |r, row| {
                for c in 0..amb_a[t] {
                    row[slot(t, r, c)] += a.values[t].rels.get(c, k);
                }
            });
        }
        // naturality against generating morphisms (β, h) into object t
        let n = a.objects[t].0;
        let e = env.group().e();
        let mut gens: Vec<(DeltaOp, usize)> = Vec::new();
        if n >= 1 {
            for i in 0..=n {
                gens.push((DeltaOp::coface(i, n)?, e));
            }
        }
        if n < a.d {
            for j in 0..=n {
                gens.push((DeltaOp::codegeneracy(j, n)?, e));
            }
        }
        for h in env.group().elements() {
            if h != e {
                gens.push((DeltaOp::identity(n), h));
            }
        }
        for (beta, h) in gens {
            let s = a.source(env, t, &beta, h)?;
            let am = &a.maps[&(t, beta.clone(), h)];
            let bm = &b.maps[&(t, beta, h)];
            // m_s · am − bm · m_t ≡ 0, one congruence per column of am
            for c in 0..amb_a[t] {
                congruence(s, &mut |r, row| {
                    for k in 0..amb_a[s] {
                        row[slot(s, r, k)] += am.get(k, c);
                    }
                    for k in 0..amb_b[t] {
                        row[slot(t, k, c)] -= bm.get(r, k);
                    }
                });
            }
        }
    }

    let nrows = rows.len();
    let l = IntMatrix::from_fn(nrows, total, |i, j| rows[i][j].clone());
    let lambda = IntMatrix::block_diag(&blocks.iter().collect::<Vec<_>>());
    let k = if nrows == 0 {
        IntMatrix::identity(total)
    } else {
        preimage_lattice(&l, &lambda)
    };

    // families that are zero as morphisms: a relation of b in one column
    let mut zero_cols: Vec<Vec<BigInt>> = Vec::new();
    for t in 0..nt {
        for c in 0..amb_a[t] {
            for j in 0..b.values[t].rels.cols() {
                let mut col = vec![BigInt::zero(); total];
                for r in 0..amb_b[t] {
                    col[slot(t, r, c)] = b.values[t].rels.get(r, j).clone();
                }
                zero_cols.push(col);
            }
        }
    }
    let d = IntMatrix::from_fn(total, zero_cols.len(), |i, j| zero_cols[j][i].clone());
    let rels = solve_mat(&k, &d)
        .ok_or_else(|| Error::Invalid("zero morphisms escape the hom lattice".into()))?;
    Ok(FpGroup { ambient: k.cols(), rels })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homalg::fp::FpGroup;
    use crate::linab::linearise::ab_cell;
    use crate::retract::presheaf::from_presheaf;
    use crate::retract::{cell, hom_count};
    use crate::sset::{DeltaOp, Simplex};

    /// The constant abelian object Z/n over the one-point plain base.
    fn constant_mod(env: &REnv, n: i64, d: usize) -> AbObj {
        let (objects, index) = super::super::base_objects(env, d);
        let values = vec![FpGroup::cyclic(n); objects.len()];
        let mut maps = BTreeMap::new();
        for (t, (m, _)) in objects.iter().enumerate() {
            for l in 0..=d {
                for alpha in DeltaOp::all(l, *m) {
                    maps.insert((t, alpha, 0), IntMatrix::identity(1));
                }
            }
        }
        let out = AbObj { d, objects, index, values, maps };
        out.validate(env).unwrap();
        out
    }

    #[test]
    fn representability_as_groups() {
        // hom(Δ^ab[0,*], Y) ≅ Y(0,*) for Y the constant Z/4 object:
        // same cardinality and the same multiset of element orders
        let env = REnv::plain(crate::sset::build::point());
        let a = ab_cell(&env, &Simplex::gen(0, 0), 2).unwrap();
        let y = constant_mod(&env, 4, 2);
        let homs = ab_hom_maps(&env, &a, &y).unwrap();
        assert_eq!(homs.len(), 4);
        let mut orders: Vec<usize> =
            homs.iter().map(|f| hom_element_order(&env, &y, f)).collect();
        orders.sort();
        assert_eq!(orders, vec![1, 2, 4, 4]);
        // the evaluation at the distinguished generator is a bijection
        let t0 = a.index[&(0, Simplex::gen(0, 0))];
        let mut images: Vec<Vec<BigInt>> = homs
            .iter()
            .map(|f| y.values[t0].reduce(&f.mats[t0].column(0)))
            .collect();
        images.sort();
        images.dedup();
        assert_eq!(images.len(), 4);
    }

    #[test]
    fn hom_group_of_representable_is_the_value() {
        let env = REnv::plain(crate::sset::build::point());
        let a = ab_cell(&env, &Simplex::gen(0, 0), 2).unwrap();
        let z4 = constant_mod(&env, 4, 2);
        let h = ab_hom_group(&env, &a, &z4).unwrap();
        assert_eq!(h.invariants(), vec![BigInt::from(4)]);
        // endomorphisms of the 0-cell: hom ≅ value (0,*) ≅ Z
        let h2 = ab_hom_group(&env, &a, &a).unwrap();
        assert_eq!(h2.invariants(), vec![BigInt::from(0)]);
    }

    #[test]
    fn free_forget_adjunction_by_counting() {
        // Hom_ab(Z̃Y, Z) ≅ Hom(Y, UZ) for Y = Δ[0,*], Z = constant Z/2
        let env = REnv::plain(crate::sset::build::point());
        let y = cell(&env, &Simplex::gen(0, 0)).unwrap();
        let zy = ab_cell(&env, &Simplex::gen(0, 0), 2).unwrap();
        let z = constant_mod(&env, 2, 2);
        let lhs = ab_hom_maps(&env, &zy, &z).unwrap().len();
        let u = underlying(&env, &z).unwrap();
        let (uz, _) = from_presheaf(&env, &u).unwrap();
        let rhs = hom_count(&env, &y, &uz, 2).unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(lhs, 2);
    }
}
