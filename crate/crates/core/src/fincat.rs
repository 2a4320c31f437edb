//! Finite categories, finite groups given by multiplication tables, the
//! transport category of a group action, and the Grothendieck
//! construction.

use crate::error::{Error, Result};
use crate::sset::{DeltaOp, Gen, SSet, Simplex};
use std::collections::BTreeMap;

/// A finite group presented by its multiplication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Group {
    labels: Vec<String>,
    mul: Vec<Vec<usize>>,
    e: usize,
    inv: Vec<usize>,
}

impl Group {
    pub fn from_table(labels: Vec<String>, mul: Vec<Vec<usize>>) -> Result<Group> {
        let n = labels.len();
        if n == 0 || mul.len() != n || mul.iter().any(|r| r.len() != n) {
            return Err(Error::Invalid("multiplication table must be square".into()));
        }
        if mul.iter().flatten().any(|&v| v >= n) {
            return Err(Error::Invalid("multiplication table entry out of range".into()));
        }
        let e = (0..n)
            .find(|&e| (0..n).all(|a| mul[e][a] == a && mul[a][e] == a))
            .ok_or_else(|| Error::Invalid("no identity element".into()))?;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if mul[mul[a][b]][c] != mul[a][mul[b][c]] {
                        return Err(Error::Invalid("multiplication is not associative".into()));
                    }
                }
            }
        }
        let mut inv = vec![usize::MAX; n];
        for a in 0..n {
            inv[a] = (0..n)
                .find(|&b| mul[a][b] == e && mul[b][a] == e)
                .ok_or_else(|| Error::Invalid("element without inverse".into()))?;
        }
        Ok(Group { labels, mul, e, inv })
    }

    pub fn trivial() -> Group {
        Group::from_table(vec!["e".into()], vec![vec![0]]).unwrap()
    }

    pub fn cyclic(n: usize) -> Group {
        assert!(n > 0);
        let labels = (0..n)
            .map(|k| if k == 0 { "e".to_string() } else { format!("g{k}") })
            .collect();
        let mul = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        Group::from_table(labels, mul).unwrap()
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn e(&self) -> usize {
        self.e
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn elements(&self) -> impl Iterator<Item = usize> {
        0..self.labels.len()
    }
}

/// A morphism in a finite category.
#[derive(Clone, Debug)]
pub struct Mor {
    pub label: String,
    pub src: usize,
    pub dst: usize,
}

/// A finite category: labelled objects and morphisms with an explicit
/// composition table.  `comp[(f, g)]` is f ∘ g (g first).
#[derive(Clone, Debug)]
pub struct FinCategory {
    pub objects: Vec<String>,
    pub morphisms: Vec<Mor>,
    pub identities: Vec<usize>,
    pub comp: BTreeMap<(usize, usize), usize>,
}

impl FinCategory {
    pub fn validate(&self) -> Result<()> {
        if self.identities.len() != self.objects.len() {
            return Err(Error::Invalid("one identity per object required".into()));
        }
        for (o, &i) in self.identities.iter().enumerate() {
            let m = &self.morphisms[i];
            if m.src != o || m.dst != o {
                return Err(Error::Invalid(format!("identity of `{}` has wrong ends", self.objects[o])));
            }
        }
        for (f, mf) in self.morphisms.iter().enumerate() {
            for (g, mg) in self.morphisms.iter().enumerate() {
                let composable = mg.dst == mf.src;
                match self.comp.get(&(f, g)) {
                    None if composable => {
                        return Err(Error::Invalid(format!(
                            "missing composite {} ∘ {}",
                            mf.label, mg.label
                        )))
                    }
                    Some(_) if !composable => {
                        return Err(Error::Invalid("composite of non-composable pair".into()))
                    }
                    Some(&h) if composable => {
                        let mh = &self.morphisms[h];
                        if mh.src != mg.src || mh.dst != mf.dst {
                            return Err(Error::Invalid("composite has wrong ends".into()));
                        }
                    }
                    _ => {}
                }
            }
        }
        // unit laws
        for (f, mf) in self.morphisms.iter().enumerate() {
            if self.comp[&(f, self.identities[mf.src])] != f
                || self.comp[&(self.identities[mf.dst], f)] != f
            {
                return Err(Error::Invalid(format!("unit law fails at {}", mf.label)));
            }
        }
        // associativity
        for (f, mf) in self.morphisms.iter().enumerate() {
            for (g, mg) in self.morphisms.iter().enumerate() {
                if mg.dst != mf.src {
                    continue;
                }
                for (h, mh) in self.morphisms.iter().enumerate() {
                    if mh.dst != mg.src {
                        continue;
                    }
                    if self.comp[&(self.comp[&(f, g)], h)] != self.comp[&(f, self.comp[&(g, h)])] {
                        return Err(Error::Invalid("composition is not associative".into()));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn compose(&self, f: usize, g: usize) -> usize {
        self.comp[&(f, g)]
    }

    pub fn is_identity(&self, f: usize) -> bool {
        self.identities[self.morphisms[f].src] == f && self.morphisms[f].src == self.morphisms[f].dst
    }

    pub fn find_object(&self, label: &str) -> Option<usize> {
        self.objects.iter().position(|o| o == label)
    }

    pub fn find_morphism(&self, label: &str) -> Option<usize> {
        self.morphisms.iter().position(|m| m.label == label)
    }

    /// Exact comparison up to the labelling: same object labels, same
    /// morphisms keyed by (label, source label, target label), matching
    /// identities and composition.  Order of storage is allowed to
    /// differ.  Keys must be unique within each category.
    pub fn isomorphic_by_labels(&self, other: &FinCategory) -> bool {
        if self.objects.len() != other.objects.len()
            || self.morphisms.len() != other.morphisms.len()
        {
            return false;
        }
        let mut obj_map = vec![usize::MAX; self.objects.len()];
        for (i, l) in self.objects.iter().enumerate() {
            match other.find_object(l) {
                Some(j) => obj_map[i] = j,
                None => return false,
            }
        }
        let key = |cat: &FinCategory, m: &Mor| {
            (m.label.clone(), cat.objects[m.src].clone(), cat.objects[m.dst].clone())
        };
        let mut other_index = BTreeMap::new();
        for (j, m) in other.morphisms.iter().enumerate() {
            if other_index.insert(key(other, m), j).is_some() {
                return false;
            }
        }
        let mut mor_map = vec![usize::MAX; self.morphisms.len()];
        let mut seen = vec![false; other.morphisms.len()];
        for (i, m) in self.morphisms.iter().enumerate() {
            match other_index.get(&key(self, m)) {
                Some(&j) => {
                    let n = &other.morphisms[j];
                    if n.src != obj_map[m.src] || n.dst != obj_map[m.dst] || seen[j] {
                        return false;
                    }
                    seen[j] = true;
                    mor_map[i] = j;
                }
                None => return false,
            }
        }
        for (o, &i) in self.identities.iter().enumerate() {
            if other.identities[obj_map[o]] != mor_map[i] {
                return false;
            }
        }
        for (&(f, g), &h) in &self.comp {
            if other.comp.get(&(mor_map[f], mor_map[g])) != Some(&mor_map[h]) {
                return false;
            }
        }
        true
    }

    /// The nerve, tabulated up to dimension `bound`: n-generators are
    /// chains of n composable non-identity morphisms.
    pub fn nerve(&self, bound: usize) -> Result<SSet> {
        Ok(self.nerve_with_chains(bound)?.0)
    }

    /// The nerve together with the lookup from morphism chains (without
    /// identities; 0-chains are handled by object id = generator id) to
    /// generator ids.
    pub fn nerve_with_chains(
        &self,
        bound: usize,
    ) -> Result<(SSet, BTreeMap<Vec<usize>, usize>)> {
        // chains[n]: list of (object for n = 0, morphism chain for n > 0)
        // 0-generators are the objects, with gen id = object id
        let mut gens: Vec<Gen> = Vec::new();
        let mut chain_ids: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
        for l in &self.objects {
            gens.push(Gen { label: l.clone(), dim: 0, faces: vec![] });
        }
        let mut prev: Vec<Vec<usize>> = Vec::new(); // chains of previous dim
        for n in 1..=bound {
            let level: Vec<Vec<usize>> = if n == 1 {
                (0..self.morphisms.len())
                    .filter(|&f| !self.is_identity(f))
                    .map(|f| vec![f])
                    .collect()
            } else {
                let mut v = Vec::new();
                for c in &prev {
                    for (f, mf) in self.morphisms.iter().enumerate() {
                        if self.is_identity(f) {
                            continue;
                        }
                        if mf.src == self.morphisms[*c.last().unwrap()].dst {
                            let mut c2 = c.clone();
                            c2.push(f);
                            v.push(c2);
                        }
                    }
                }
                v
            };
            for c in &level {
                let label = c
                    .iter()
                    .map(|&f| self.morphisms[f].label.clone())
                    .collect::<Vec<_>>()
                    .join("|");
                let mut faces = Vec::new();
                for i in 0..=n {
                    faces.push(self.chain_face(c, i, &chain_ids)?);
                }
                chain_ids.insert(c.clone(), gens.len());
                gens.push(Gen { label, dim: n, faces });
            }
            prev = level;
        }
        Ok((SSet::new(gens)?, chain_ids))
    }

    /// Normal-form simplex of an arbitrary morphism chain (which may
    /// contain identities) in a nerve produced by `nerve_with_chains`.
    pub fn chain_simplex(
        &self,
        chain: &[usize],
        ids: &BTreeMap<Vec<usize>, usize>,
    ) -> Result<Simplex> {
        self.chain_normal_form(chain, ids)
    }

    /// Face d_i of a chain of non-identity morphisms, as a normal-form
    /// simplex of the nerve.
    fn chain_face(
        &self,
        chain: &[usize],
        i: usize,
        ids: &BTreeMap<Vec<usize>, usize>,
    ) -> Result<Simplex> {
        let n = chain.len();
        if n == 1 {
            let o = if i == 0 { self.morphisms[chain[0]].dst } else { self.morphisms[chain[0]].src };
            return Ok(Simplex::gen(o, 0));
        }
        let reduced: Vec<usize> = if i == 0 {
            chain[1..].to_vec()
        } else if i == n {
            chain[..n - 1].to_vec()
        } else {
            // compose chain[i] after chain[i-1] (morphism indices are
            // 1-based positions i and i+1 in the chain)
            let mut c = chain[..i - 1].to_vec();
            c.push(self.compose(chain[i], chain[i - 1]));
            c.extend_from_slice(&chain[i..].iter().skip(1).copied().collect::<Vec<_>>());
            c
        };
        self.chain_normal_form(&reduced, ids)
    }

    fn chain_normal_form(
        &self,
        chain: &[usize],
        ids: &BTreeMap<Vec<usize>, usize>,
    ) -> Result<Simplex> {
        let n = chain.len();
        if let Some(k) = chain.iter().position(|&f| self.is_identity(f)) {
            // chain = s_k(chain with entry k removed)
            let mut sub = chain.to_vec();
            sub.remove(k);
            let inner = if sub.is_empty() {
                Simplex::gen(self.morphisms[chain[k]].src, 0)
            } else {
                self.chain_normal_form(&sub, ids)?
            };
            let sigma = DeltaOp::codegeneracy(k, n - 1)?;
            return Ok(Simplex { surj: inner.surj.compose(&sigma)?, gen: inner.gen });
        }
        let id = *ids
            .get(chain)
            .ok_or_else(|| Error::Invalid("chain not tabulated".into()))?;
        Ok(Simplex { surj: DeltaOp::identity(n), gen: id })
    }
}

/// Objects 0..n_objects with morphism data supplied by closures, used to
/// assemble a `FinCategory` with a composition table.
pub struct CatBuilder {
    pub objects: Vec<String>,
    pub morphisms: Vec<Mor>,
}

impl CatBuilder {
    /// Builds the composition table from `compose(f, g) -> index of f∘g`.
    pub fn finish<F>(self, identities: Vec<usize>, compose: F) -> Result<FinCategory>
    where
        F: Fn(usize, usize) -> usize,
    {
        let mut comp = BTreeMap::new();
        for f in 0..self.morphisms.len() {
            for g in 0..self.morphisms.len() {
                if self.morphisms[g].dst == self.morphisms[f].src {
                    comp.insert((f, g), compose(f, g));
                }
            }
        }
        let cat = FinCategory { objects: self.objects, morphisms: self.morphisms, identities, comp };
        cat.validate()?;
        Ok(cat)
    }
}

/// The transport category of a right action of `group` on a finite set:
/// objects are the set's elements, and Hom(s, t) = { h : s = t·h }, so the
/// morphism indexed by (t, h) runs t·h → t.  Morphism labels are `t:h`.
pub fn transport_category<F>(group: &Group, set: &[String], act: F) -> Result<FinCategory>
where
    F: Fn(usize, usize) -> usize,
{
    let mut morphisms = Vec::new();
    let mut index = BTreeMap::new();
    for t in 0..set.len() {
        for h in group.elements() {
            index.insert((t, h), morphisms.len());
            morphisms.push(Mor {
                label: format!("{}:{}", set[t], group.label(h)),
                src: act(t, h),
                dst: t,
            });
        }
    }
    let identities: Vec<usize> = (0..set.len()).map(|t| index[&(t, group.e())]).collect();
    let decode: Vec<(usize, usize)> = {
        let mut v = vec![(0, 0); morphisms.len()];
        for (&k, &i) in &index {
            v[i] = k;
        }
        v
    };
    CatBuilder { objects: set.to_vec(), morphisms }.finish(identities, |f, g| {
        // f = (t, k): t·k → t, g = (t·k, h): t·k·h → t·k;
        // f∘g = (t, k·h) since t·(kh) = (t·k)·h
        let (t, k) = decode[f];
        let (_, h) = decode[g];
        index[&(t, group.mul(k, h))]
    })
}

/// Data for the Grothendieck construction of a contravariant functor
/// F: B^op → Cat.
pub struct GrData<'a> {
    pub base: &'a FinCategory,
    /// Fibre category over each base object.
    pub fibres: Vec<FinCategory>,
    /// For each base morphism f: a → b, the induced functor
    /// F(f): fibre(b) → fibre(a), as (object map, morphism map).
    pub on_mor: Vec<(Vec<usize>, Vec<usize>)>,
}

/// The Grothendieck construction Gr(F): objects are pairs (a, x) with x
/// in the fibre over a, labelled `(a|x)`; a morphism (a,x) → (b,y) is a
/// pair (f: a → b, φ: x → F(f)(y)), labelled `(f;φ)`; composition is
/// (f,φ)∘(g,ψ) = (f∘g, F(g)(φ)∘ψ).
pub fn grothendieck(data: &GrData) -> Result<FinCategory> {
    let base = data.base;
    let mut objects = Vec::new();
    let mut obj_index = BTreeMap::new();
    for (a, al) in base.objects.iter().enumerate() {
        for (x, xl) in data.fibres[a].objects.iter().enumerate() {
            obj_index.insert((a, x), objects.len());
            objects.push(format!("({al}|{xl})"));
        }
    }
    let mut morphisms = Vec::new();
    let mut mor_index = BTreeMap::new();
    for (f, mf) in base.morphisms.iter().enumerate() {
        let (a, b) = (mf.src, mf.dst);
        for y in 0..data.fibres[b].objects.len() {
            let fy = data.on_mor[f].0[y];
            for (phi, mphi) in data.fibres[a].morphisms.iter().enumerate() {
                if mphi.dst != fy {
                    continue;
                }
                mor_index.insert((f, y, phi), morphisms.len());
                morphisms.push(Mor {
                    label: format!("({};{})", mf.label, mphi.label),
                    src: obj_index[&(a, mphi.src)],
                    dst: obj_index[&(b, y)],
                });
            }
        }
    }
    let decode: Vec<(usize, usize, usize)> = {
        let mut v = vec![(0, 0, 0); morphisms.len()];
        for (&k, &i) in &mor_index {
            v[i] = k;
        }
        v
    };
    let identities: Vec<usize> = {
        let mut v = Vec::new();
        for (a, _) in base.objects.iter().enumerate() {
            for x in 0..data.fibres[a].objects.len() {
                v.push(mor_index[&(base.identities[a], x, data.fibres[a].identities[x])]);
            }
        }
        v
    };
    let cat = CatBuilder { objects, morphisms }.finish(identities, |m2, m1| {
        // m2 = (f, y, φ): (a, src φ) → (b, y), m1 = (g, x', ψ) into (a, x')
        // with x' = src of φ; composite = (f∘g, F(g)(φ)∘ψ)
        let (f, y, phi) = decode[m2];
        let (g, _, psi) = decode[m1];
        let fg = base.compose(f, g);
        let g_phi = data.on_mor[g].1[phi];
        let c = base.morphisms[g].src;
        let comp = data.fibres[c].compose(g_phi, psi);
        mor_index[&(fg, y, comp)]
    })?;
    Ok(cat)
}

/// The truncated simplex category Δ≤d: objects [0], …, [d], morphisms all
/// monotone maps, labelled by their value lists.
pub fn delta_category(d: usize) -> Result<FinCategory> {
    Ok(delta_category_with_ops(d)?.0)
}

/// Δ≤d together with the operator of each morphism id.
pub fn delta_category_with_ops(d: usize) -> Result<(FinCategory, Vec<DeltaOp>)> {
    let objects: Vec<String> = (0..=d).map(|n| format!("[{n}]")).collect();
    let mut morphisms = Vec::new();
    let mut index = BTreeMap::new();
    let mut ops: Vec<DeltaOp> = Vec::new();
    for m in 0..=d {
        for n in 0..=d {
            for op in DeltaOp::all(m, n) {
                index.insert(op.clone(), morphisms.len());
                morphisms.push(Mor { label: op.to_string(), src: m, dst: n });
                ops.push(op);
            }
        }
    }
    let identities: Vec<usize> = (0..=d).map(|n| index[&DeltaOp::identity(n)]).collect();
    let ops_for_compose = ops.clone();
    let cat = CatBuilder { objects, morphisms }.finish(identities, |f, g| {
        index[&ops_for_compose[f].compose(&ops_for_compose[g]).expect("composable")]
    })?;
    Ok((cat, ops))
}

/// The truncated equivariant simplex category Simp_G(W) for a right
/// G-action on W: objects are all simplices of W in degrees ≤ d, labelled
/// `([n]|w)`; a morphism (m,v) → (n,w) is a pair (α: [m] → [n], g) with
/// v = W(α)(w)·g, labelled `(α;W(α)(w):g)`; composition is
/// (β,h)∘(α,g) = (β∘α, h·g).
pub fn simplex_category_trunc(
    w: &SSet,
    action: &crate::sset::GroupAction,
    d: usize,
) -> Result<FinCategory> {
    let group = &action.group;
    let levels: Vec<Vec<Simplex>> = (0..=d).map(|n| w.simplices(n)).collect();
    let mut objects = Vec::new();
    let mut obj_list: Vec<Simplex> = Vec::new();
    let mut obj_index: BTreeMap<Simplex, usize> = BTreeMap::new();
    for (n, level) in levels.iter().enumerate() {
        for s in level {
            obj_index.insert(s.clone(), objects.len());
            obj_list.push(s.clone());
            objects.push(format!("([{n}]|{})", w.simplex_label(s)));
        }
    }
    let mut morphisms = Vec::new();
    let mut mor_index: BTreeMap<(DeltaOp, Simplex, usize), usize> = BTreeMap::new();
    for m in 0..=d {
        for n in 0..=d {
            for alpha in DeltaOp::all(m, n) {
                for t in &levels[n] {
                    let wt = w.apply(t, &alpha)?;
                    for g in group.elements() {
                        let src = action.act(w, &wt, g)?;
                        mor_index.insert((alpha.clone(), t.clone(), g), morphisms.len());
                        morphisms.push(Mor {
                            label: format!(
                                "({};{}:{})",
                                alpha,
                                w.simplex_label(&wt),
                                group.label(g)
                            ),
                            src: obj_index[&src],
                            dst: obj_index[t],
                        });
                    }
                }
            }
        }
    }
    let decode: Vec<(DeltaOp, Simplex, usize)> = {
        let mut v = vec![(DeltaOp::identity(0), Simplex::gen(0, 0), 0); morphisms.len()];
        for (k, &i) in &mor_index {
            v[i] = k.clone();
        }
        v
    };
    let identities: Vec<usize> = obj_list
        .iter()
        .map(|s| mor_index[&(DeltaOp::identity(s.dim()), s.clone(), group.e())])
        .collect();
    CatBuilder { objects, morphisms }.finish(identities, |m2, m1| {
        // m2 = (β, u, h), m1 = (α, w, g) with w = target of m1 = W(β)(u)·h
        let (beta, u, h) = decode[m2].clone();
        let (alpha, _, g) = decode[m1].clone();
        let ba = beta.compose(&alpha).expect("composable operators");
        mor_index[&(ba, u, group.mul(h, g))]
    })
}

/// Simp_G(W) assembled instead as the Grothendieck construction of the
/// Δ^op-indexed transport functor [n] ↦ Tr_G(W_n); labels match
/// `simplex_category_trunc` exactly.
pub fn simplex_cat_via_grothendieck(
    w: &SSet,
    action: &crate::sset::GroupAction,
    d: usize,
) -> Result<FinCategory> {
    let group = &action.group;
    let (base, base_ops) = delta_category_with_ops(d)?;
    let levels: Vec<Vec<Simplex>> = (0..=d).map(|n| w.simplices(n)).collect();
    let mut fibres = Vec::new();
    for level in &levels {
        let labels: Vec<String> = level.iter().map(|s| w.simplex_label(s)).collect();
        fibres.push(transport_category(group, &labels, |t, h| {
            let moved = action.act(w, &level[t], h).expect("action total");
            level.iter().position(|s| *s == moved).expect("closed under action")
        })?);
    }
    let mut on_mor = Vec::new();
    for (mid, mor) in base.morphisms.iter().enumerate() {
        let (m, n) = (mor.src, mor.dst);
        let alpha = base_ops[mid].clone();
        // object map: t ↦ W(α)(t); morphism map: (t, h) ↦ (W(α)(t), h)
        let obj_map: Vec<usize> = levels[n]
            .iter()
            .map(|t| {
                let wt = w.apply(t, &alpha).expect("operator applies");
                levels[m].iter().position(|s| *s == wt).expect("tabulated")
            })
            .collect();
        // fibre morphisms are indexed by (t, h) in construction order:
        // index = t·|G| + h
        let mor_map: Vec<usize> = (0..fibres[n].morphisms.len())
            .map(|fm| {
                let (t_idx, h) = (fm / group.order(), fm % group.order());
                obj_map[t_idx] * group.order() + h
            })
            .collect();
        on_mor.push((obj_map, mor_map));
    }
    grothendieck(&GrData { base: &base, fibres, on_mor })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sset::SMap;

    #[test]
    fn cyclic_groups() {
        let g = Group::cyclic(4);
        assert_eq!(g.order(), 4);
        assert_eq!(g.mul(3, 2), 1);
        assert_eq!(g.inv(1), 3);
        assert!(Group::from_table(
            vec!["a".into(), "b".into()],
            vec![vec![0, 1], vec![1, 1]],
        )
        .is_err());
    }

    #[test]
    fn delta_category_validates() {
        let d = delta_category(2).unwrap();
        assert_eq!(d.objects.len(), 3);
        d.validate().unwrap();
    }

    #[test]
    fn nerve_of_group_counts() {
        // nerve of Z/2 as a one-object category: one nondegenerate
        // generator in every dimension
        let g = Group::cyclic(2);
        let tr = transport_category(&g, &["*".to_string()], |w, _| w).unwrap();
        let n = tr.nerve(4).unwrap();
        for k in 0..=4 {
            assert_eq!(n.gens_in_dim(k).len(), 1, "dim {k}");
        }
        // |N(Z/2)_n| = 2^n
        assert_eq!(n.simplices(3).len(), 8);
    }

    #[test]
    fn transport_category_of_swap() {
        let g = Group::cyclic(2);
        let set = vec!["a".to_string(), "b".to_string()];
        let tr = transport_category(&g, &set, |w, h| if h == 0 { w } else { 1 - w }).unwrap();
        tr.validate().unwrap();
        assert_eq!(tr.morphisms.len(), 4);
    }

    #[test]
    fn simplex_category_counts() {
        // W = Δ⁰, G trivial, d = 2: objects are the three simplices *,
        // s₀*, s₀s₀*; |Hom((m,·),(n,·))| = |Δ([m],[n])|
        let w = crate::sset::build::point();
        let act = crate::sset::GroupAction::trivial(&w);
        let cat = simplex_category_trunc(&w, &act, 2).unwrap();
        cat.validate().unwrap();
        assert_eq!(cat.objects.len(), 3);
        let hom = |a: usize, b: usize| {
            cat.morphisms.iter().filter(|m| m.src == a && m.dst == b).count()
        };
        assert_eq!(hom(0, 1), 2); // |Δ([0],[1])|
        assert_eq!(hom(2, 1), 4); // |Δ([2],[1])| = C(4,3)

        // W = Δ⁰, G = Z/2 trivial action, d = 0: one object, two
        // endomorphisms
        let g = Group::cyclic(2);
        let maps = vec![SMap::identity(&w), SMap::identity(&w)];
        let act2 = crate::sset::GroupAction::new(g, maps, &w).unwrap();
        let cat2 = simplex_category_trunc(&w, &act2, 0).unwrap();
        assert_eq!(cat2.objects.len(), 1);
        assert_eq!(cat2.morphisms.len(), 2);
    }

    #[test]
    fn simplex_category_is_grothendieck_construction() {
        let (cover, action) = crate::sset::build::double_cover_circle().unwrap();
        let direct = simplex_category_trunc(&cover, &action, 2).unwrap();
        direct.validate().unwrap();
        let via_gr = simplex_cat_via_grothendieck(&cover, &action, 2).unwrap();
        via_gr.validate().unwrap();
        assert!(direct.isomorphic_by_labels(&via_gr));
        assert!(via_gr.isomorphic_by_labels(&direct));
    }

    #[test]
    fn grothendieck_of_constant_functor_is_product() {
        // constant functor on Δ≤1 with fibre a two-object discrete category
        let base = delta_category(1).unwrap();
        let disc = CatBuilder {
            objects: vec!["x".into(), "y".into()],
            morphisms: vec![
                Mor { label: "1x".into(), src: 0, dst: 0 },
                Mor { label: "1y".into(), src: 1, dst: 1 },
            ],
        }
        .finish(vec![0, 1], |f, _| f)
        .unwrap();
        let n_base_mors = base.morphisms.len();
        let data = GrData {
            base: &base,
            fibres: vec![disc.clone(), disc.clone()],
            on_mor: (0..n_base_mors).map(|_| (vec![0, 1], vec![0, 1])).collect(),
        };
        let gr = grothendieck(&data).unwrap();
        gr.validate().unwrap();
        assert_eq!(gr.objects.len(), 4);
        assert_eq!(gr.morphisms.len(), 2 * n_base_mors);
    }
}
