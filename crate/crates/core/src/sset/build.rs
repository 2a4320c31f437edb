//! Standard simplicial sets, concrete models, and colimit constructions.

use super::{DeltaOp, Gen, GroupAction, SMap, SSet, Simplex};
use crate::error::{Error, Result};
use crate::fincat::Group;
use std::collections::BTreeMap;

fn injection_label(op: &DeltaOp) -> String {
    op.values().iter().map(|v| v.to_string()).collect::<Vec<_>>().join(".")
}

/// Builds the simplicial subset of Δ[n] spanned by a set of monotone
/// injections closed under faces.
fn from_injections(injections: Vec<DeltaOp>) -> Result<SSet> {
    let mut index: BTreeMap<DeltaOp, usize> = BTreeMap::new();
    let mut sorted = injections;
    sorted.sort_by_key(|op| (op.dom(), op.values().to_vec()));
    for (i, op) in sorted.iter().enumerate() {
        index.insert(op.clone(), i);
    }
    let mut gens = Vec::new();
    for op in &sorted {
        let k = op.dom();
        let mut faces = Vec::new();
        for i in 0..=k {
            if k == 0 {
                break;
            }
            let f = op.compose(&DeltaOp::coface(i, k)?)?;
            let id = *index
                .get(&f)
                .ok_or_else(|| Error::Invalid("injection set not closed under faces".into()))?;
            faces.push(Simplex::gen(id, k - 1));
        }
        gens.push(Gen { label: injection_label(op), dim: k, faces });
    }
    SSet::new(gens)
}

/// The standard n-simplex Δ[n]; nondegenerate k-simplices are the
/// monotone injections [k] ↪ [n], labelled by their vertex lists.
pub fn standard_simplex(n: usize) -> Result<SSet> {
    let mut inj = Vec::new();
    for k in 0..=n {
        inj.extend(DeltaOp::all(k, n).into_iter().filter(|o| o.is_injective()));
    }
    from_injections(inj)
}

/// The boundary ∂Δ[n]: all injections except the identity.
pub fn boundary(n: usize) -> Result<SSet> {
    if n == 0 {
        return Err(Error::Invalid("∂Δ[0] is empty".into()));
    }
    let mut inj = Vec::new();
    for k in 0..n {
        inj.extend(DeltaOp::all(k, n).into_iter().filter(|o| o.is_injective()));
    }
    from_injections(inj)
}

/// The horn Λ^k[n]: injections missing some value other than k.
pub fn horn(n: usize, k: usize) -> Result<SSet> {
    if n == 0 || k > n {
        return Err(Error::Dimension(format!("horn Λ^{k}[{n}]")));
    }
    let mut inj = Vec::new();
    for m in 0..n {
        inj.extend(
            DeltaOp::all(m, n)
                .into_iter()
                .filter(|o| o.is_injective() && o.missed_values().iter().any(|&v| v != k)),
        );
    }
    from_injections(inj)
}

/// The discrete (constant) simplicial set on a finite label set.
pub fn discrete(labels: &[String]) -> Result<SSet> {
    SSet::new(
        labels
            .iter()
            .map(|l| Gen { label: l.clone(), dim: 0, faces: vec![] })
            .collect(),
    )
}

/// A single point.
pub fn point() -> SSet {
    discrete(&["*".to_string()]).unwrap()
}

/// S¹ = Δ[1]/∂Δ[1]: one vertex `v`, one edge `e`.
pub fn circle() -> Result<SSet> {
    SSet::new(vec![
        Gen { label: "v".into(), dim: 0, faces: vec![] },
        Gen { label: "e".into(), dim: 1, faces: vec![Simplex::gen(0, 0), Simplex::gen(0, 0)] },
    ])
}

/// A wedge of two circles: one vertex `*`, edges `a` and `b`.
pub fn wedge_two_circles() -> Result<SSet> {
    let v = Simplex::gen(0, 0);
    SSet::new(vec![
        Gen { label: "*".into(), dim: 0, faces: vec![] },
        Gen { label: "a".into(), dim: 1, faces: vec![v.clone(), v.clone()] },
        Gen { label: "b".into(), dim: 1, faces: vec![v.clone(), v] },
    ])
}

/// S² with a single nondegenerate 2-simplex whose faces are all
/// degenerate.
pub fn sphere2() -> Result<SSet> {
    let sv = Simplex { surj: DeltaOp::codegeneracy(0, 0)?, gen: 0 };
    SSet::new(vec![
        Gen { label: "*".into(), dim: 0, faces: vec![] },
        Gen { label: "t".into(), dim: 2, faces: vec![sv.clone(), sv.clone(), sv] },
    ])
}

/// RP² as a one-vertex simplicial set: an edge `e` with both ends at the
/// vertex and a triangle `t` with faces (e, s₀*, e), realising the
/// identification of the boundary of a 2-cell with e·e.
pub fn rp2() -> Result<SSet> {
    let v = Simplex::gen(0, 0);
    let sv = Simplex { surj: DeltaOp::codegeneracy(0, 0)?, gen: 0 };
    let e = Simplex::gen(1, 1);
    SSet::new(vec![
        Gen { label: "*".into(), dim: 0, faces: vec![] },
        Gen { label: "e".into(), dim: 1, faces: vec![v.clone(), v] },
        Gen { label: "t".into(), dim: 2, faces: vec![e.clone(), sv, e] },
    ])
}

/// The torus as the classical two-triangle Δ-complex on one vertex and
/// three edges a, b, c, with triangles U (faces b, c, a) and L
/// (faces a, c, b).
pub fn torus() -> Result<SSet> {
    let v = Simplex::gen(0, 0);
    let a = Simplex::gen(1, 1);
    let b = Simplex::gen(2, 1);
    let c = Simplex::gen(3, 1);
    SSet::new(vec![
        Gen { label: "*".into(), dim: 0, faces: vec![] },
        Gen { label: "a".into(), dim: 1, faces: vec![v.clone(), v.clone()] },
        Gen { label: "b".into(), dim: 1, faces: vec![v.clone(), v.clone()] },
        Gen { label: "c".into(), dim: 1, faces: vec![v.clone(), v] },
        Gen { label: "U".into(), dim: 2, faces: vec![b.clone(), c.clone(), a.clone()] },
        Gen { label: "L".into(), dim: 2, faces: vec![a, c, b] },
    ])
}

/// The connected double cover of the circle: vertices v0, v1 and edges
/// e0: v0 → v1, e1: v1 → v0, with the free Z/2 action swapping the two
/// sheets.
pub fn double_cover_circle() -> Result<(SSet, GroupAction)> {
    let v0 = Simplex::gen(0, 0);
    let v1 = Simplex::gen(1, 0);
    let x = SSet::new(vec![
        Gen { label: "v0".into(), dim: 0, faces: vec![] },
        Gen { label: "v1".into(), dim: 0, faces: vec![] },
        // d_1 = source, d_0 = target (edges run from vertex d_1 to d_0)
        Gen { label: "e0".into(), dim: 1, faces: vec![v1.clone(), v0.clone()] },
        Gen { label: "e1".into(), dim: 1, faces: vec![v0, v1] },
    ])?;
    let swap = SMap {
        images: vec![
            Simplex::gen(1, 0),
            Simplex::gen(0, 0),
            Simplex::gen(3, 1),
            Simplex::gen(2, 1),
        ],
    };
    let action = GroupAction::new(Group::cyclic(2), vec![SMap::identity(&x), swap], &x)?;
    Ok((x, action))
}

/// Disjoint union, with the two inclusion maps.  Labels from the second
/// summand are suffixed with `'` when they collide.
pub fn disjoint_union(x: &SSet, y: &SSet) -> Result<(SSet, SMap, SMap)> {
    let nx = x.gen_count();
    let mut gens: Vec<Gen> = x.gens().to_vec();
    let mut used: BTreeMap<String, ()> = gens.iter().map(|g| (g.label.clone(), ())).collect();
    for g in y.gens() {
        let mut label = g.label.clone();
        while used.contains_key(&label) {
            label.push('\'');
        }
        used.insert(label.clone(), ());
        let faces = g
            .faces
            .iter()
            .map(|f| Simplex { surj: f.surj.clone(), gen: f.gen + nx })
            .collect();
        gens.push(Gen { label, dim: g.dim, faces });
    }
    let u = SSet::new(gens)?;
    let inx = SMap { images: (0..nx).map(|i| Simplex::gen(i, x.gens()[i].dim)).collect() };
    let iny = SMap {
        images: (0..y.gen_count()).map(|i| Simplex::gen(i + nx, y.gens()[i].dim)).collect(),
    };
    Ok((u, inx, iny))
}

/// Factors `op` as op = op' ∘ rho, given that rho's duplicate positions
/// are contained in op's.
fn factor_through(op: &DeltaOp, rho: &DeltaOp) -> DeltaOp {
    let mut vals = vec![0usize; rho.cod() + 1];
    for k in 0..=rho.dom() {
        vals[rho.apply(k)] = op.apply(k);
    }
    DeltaOp::new(vals, op.cod()).expect("factorisation is monotone")
}

/// Normal form of a pair of simplices of equal dimension in a product:
/// returns (rho, x', y') with (x, y) = (X×Y)(rho)(x', y') and (x', y')
/// jointly nondegenerate.
pub(crate) fn pair_normal_form(x: &Simplex, y: &Simplex) -> (DeltaOp, Simplex, Simplex) {
    let n = x.dim();
    let dx = x.surj.duplicate_positions();
    let dy = y.surj.duplicate_positions();
    let mut common: Vec<usize> = dx.iter().filter(|j| dy.contains(j)).copied().collect();
    common.reverse();
    let rho = DeltaOp::from_degeneracy_word(&common, n).expect("valid common word");
    let xp = Simplex { surj: factor_through(&x.surj, &rho), gen: x.gen };
    let yp = Simplex { surj: factor_through(&y.surj, &rho), gen: y.gen };
    (rho, xp, yp)
}

/// The product X × Y with its two projections.  Generators are the
/// jointly nondegenerate pairs, labelled `(x,y)` by the factors'
/// simplex labels.
pub struct Product {
    pub sset: SSet,
    pub fst: SMap,
    pub snd: SMap,
    /// the factor pair of each product generator
    pub pairs: Vec<(Simplex, Simplex)>,
    /// lookup from jointly nondegenerate pairs to generator ids
    pub index: BTreeMap<(Simplex, Simplex), usize>,
}

impl Product {
    /// Generator id of the normal form of an arbitrary same-dimension
    /// pair, together with the degeneracy applied to it.
    pub fn classify(&self, x: &Simplex, y: &Simplex) -> Simplex {
        let (rho, xp, yp) = pair_normal_form(x, y);
        Simplex { surj: rho, gen: self.index[&(xp, yp)] }
    }
}

pub fn product(x: &SSet, y: &SSet) -> Result<Product> {
    let top = x.top_dim() + y.top_dim();
    let mut gens = Vec::new();
    let mut pairs = Vec::new();
    let mut index: BTreeMap<(Simplex, Simplex), usize> = BTreeMap::new();
    for n in 0..=top {
        let xs = x.simplices(n);
        let ys = y.simplices(n);
        for sx in &xs {
            for sy in &ys {
                let dx = sx.surj.duplicate_positions();
                let dy = sy.surj.duplicate_positions();
                if dx.iter().any(|j| dy.contains(j)) {
                    continue; // jointly degenerate
                }
                let mut faces = Vec::new();
                for i in 0..=n {
                    if n == 0 {
                        break;
                    }
                    let fx = x.face(sx, i)?;
                    let fy = y.face(sy, i)?;
                    let (rho, xp, yp) = pair_normal_form(&fx, &fy);
                    let id = *index
                        .get(&(xp, yp))
                        .ok_or_else(|| Error::Invalid("product face not tabulated".into()))?;
                    faces.push(Simplex { surj: rho, gen: id });
                }
                index.insert((sx.clone(), sy.clone()), gens.len());
                pairs.push((sx.clone(), sy.clone()));
                gens.push(Gen {
                    label: format!("({},{})", x.simplex_label(sx), y.simplex_label(sy)),
                    dim: n,
                    faces,
                });
            }
        }
    }
    let sset = SSet::new(gens)?;
    let fst = SMap { images: pairs.iter().map(|(a, _)| a.clone()).collect() };
    let snd = SMap { images: pairs.iter().map(|(_, b)| b.clone()).collect() };
    fst.validate(&sset, x)?;
    snd.validate(&sset, y)?;
    Ok(Product { sset, fst, snd, pairs, index })
}

/// Pushout of B ←f– A –g→ C where f is degreewise injective.  Returns
/// (Q, B → Q, C → Q).
pub fn pushout(
    a: &SSet,
    b: &SSet,
    c: &SSet,
    f: &SMap,
    g: &SMap,
) -> Result<(SSet, SMap, SMap)> {
    f.validate(a, b)?;
    g.validate(a, c)?;
    if !f.is_injective(a) {
        return Err(Error::Invalid("pushout requires an injective first leg".into()));
    }
    // which B-generators come from A, and from which generator
    let mut from_a: Vec<Option<usize>> = vec![None; b.gen_count()];
    for (ag, im) in f.images.iter().enumerate() {
        from_a[im.gen] = Some(ag);
    }
    // Q generators: all of C, then B ∖ f(A)
    let mut q_gens: Vec<Gen> = Vec::new();
    let mut used: BTreeMap<String, ()> = BTreeMap::new();
    let mut c_to_q_id = vec![usize::MAX; c.gen_count()];
    for (cg, spec) in c.gens().iter().enumerate() {
        c_to_q_id[cg] = q_gens.len();
        used.insert(spec.label.clone(), ());
        q_gens.push(spec.clone()); // faces fixed up below (ids unchanged)
    }
    let mut b_to_q_id = vec![usize::MAX; b.gen_count()];
    let mut fresh_b: Vec<usize> = Vec::new();
    for (bg, spec) in b.gens().iter().enumerate() {
        if from_a[bg].is_some() {
            continue;
        }
        b_to_q_id[bg] = q_gens.len();
        fresh_b.push(bg);
        let mut label = spec.label.clone();
        while used.contains_key(&label) {
            label.push('\'');
        }
        used.insert(label.clone(), ());
        q_gens.push(Gen { label, dim: spec.dim, faces: vec![] });
    }
    // class in Q of a B-simplex
    let b_class = |s: &Simplex| -> Result<Simplex> {
        if let Some(ag) = from_a[s.gen] {
            // s = B(surj)(f(a)) = f(A(surj)(a)) ↦ class of g(A(surj)(a))
            let t = c.apply(&g.images[ag], &s.surj)?;
            Ok(Simplex { surj: t.surj, gen: c_to_q_id[t.gen] })
        } else {
            Ok(Simplex { surj: s.surj.clone(), gen: b_to_q_id[s.gen] })
        }
    };
    for &bg in &fresh_b {
        let faces: Result<Vec<Simplex>> = b.gens()[bg].faces.iter().map(&b_class).collect();
        q_gens[b_to_q_id[bg]].faces = faces?;
    }
    let q = SSet::new(q_gens)?;
    let c_to_q = SMap {
        images: (0..c.gen_count())
            .map(|cg| Simplex::gen(c_to_q_id[cg], c.gens()[cg].dim))
            .collect(),
    };
    let b_to_q = SMap {
        images: (0..b.gen_count())
            .map(|bg| b_class(&Simplex::gen(bg, b.gens()[bg].dim)))
            .collect::<Result<Vec<_>>>()?,
    };
    b_to_q.validate(b, &q)?;
    c_to_q.validate(c, &q)?;
    Ok((q, b_to_q, c_to_q))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn inv(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&k| BigInt::from(k)).collect()
    }

    #[test]
    fn standard_simplices_and_boundaries() {
        let d3 = standard_simplex(3).unwrap();
        assert_eq!(d3.gens_in_dim(0).len(), 4);
        assert_eq!(d3.gens_in_dim(1).len(), 6);
        assert_eq!(d3.gens_in_dim(2).len(), 4);
        assert_eq!(d3.gens_in_dim(3).len(), 1);
        let b3 = boundary(3).unwrap();
        // ∂Δ[3] ≃ S²: H₀ = Z, H₁ = 0, H₂ = Z
        let h = b3.normalized_chains(3).unwrap().homology(2).unwrap();
        assert_eq!(h, vec![inv(&[0]), inv(&[]), inv(&[0])]);
        let horn21 = horn(2, 1).unwrap();
        assert_eq!(horn21.gens_in_dim(1).len(), 2);
    }

    #[test]
    fn model_homology() {
        let h = rp2().unwrap().normalized_chains(3).unwrap().homology(2).unwrap();
        assert_eq!(h, vec![inv(&[0]), inv(&[2]), inv(&[])]);

        let h = torus().unwrap().normalized_chains(3).unwrap().homology(2).unwrap();
        assert_eq!(h, vec![inv(&[0]), inv(&[0, 0]), inv(&[0])]);

        let h = sphere2().unwrap().normalized_chains(3).unwrap().homology(2).unwrap();
        assert_eq!(h, vec![inv(&[0]), inv(&[]), inv(&[0])]);
    }

    #[test]
    fn product_of_circles_is_torus() {
        let c = circle().unwrap();
        let p = product(&c, &c).unwrap();
        assert_eq!(p.sset.gens_in_dim(0).len(), 1);
        assert_eq!(p.sset.gens_in_dim(1).len(), 3);
        assert_eq!(p.sset.gens_in_dim(2).len(), 2);
        let h = p.sset.normalized_chains(3).unwrap().homology(2).unwrap();
        assert_eq!(h, vec![inv(&[0]), inv(&[0, 0]), inv(&[0])]);
    }

    #[test]
    fn product_counts_match_kan_formula() {
        // |（X×Y)_n| = |X_n|·|Y_n|, counting degenerate simplices too
        let c = circle().unwrap();
        let r = rp2().unwrap();
        let p = product(&c, &r).unwrap();
        for n in 0..=4 {
            assert_eq!(
                p.sset.simplices(n).len(),
                c.simplices(n).len() * r.simplices(n).len(),
                "dimension {n}"
            );
        }
    }

    #[test]
    fn collapse_boundary_gives_sphere() {
        // Δ[2]/∂Δ[2] ≃ S²
        let d2 = standard_simplex(2).unwrap();
        let b2 = boundary(2).unwrap();
        let pt = point();
        let incl = SMap::by_labels(&b2, &d2, |l| l.to_string()).unwrap();
        let cst = SMap {
            images: b2
                .gens()
                .iter()
                .map(|g| {
                    let mut s = Simplex::gen(0, 0);
                    for _ in 0..g.dim {
                        s = pt.degeneracy(&s, 0);
                    }
                    s
                })
                .collect(),
        };
        let (q, _bq, _cq) = pushout(&b2, &d2, &pt, &incl, &cst).unwrap();
        let h = q.normalized_chains(3).unwrap().homology(2).unwrap();
        assert_eq!(h, vec![inv(&[0]), inv(&[]), inv(&[0])]);
    }
}
