//! Finitely presented simplicial sets.
//!
//! A simplicial set is given by its nondegenerate simplices (the
//! *generators*) together with the faces of each generator, expressed in
//! Eilenberg–Zilber normal form: every simplex is uniquely a degeneracy
//! operator applied to a generator, so a simplex is stored as a pair
//! (surjection in Δ, generator).  All structure maps are computed from the
//! generator face tables by operator calculus, and the usual simplicial
//! identities are verified on construction.

pub mod action;
pub mod build;
pub mod op;
pub mod tabulate;
pub mod smap;

pub use action::GroupAction;
pub use op::DeltaOp;
pub use smap::SMap;

use crate::error::{Error, Result};
use crate::homalg::{ChainComplex, IntMatrix};
use num_bigint::BigInt;
use std::collections::BTreeMap;
use std::fmt;

/// A simplex in normal form: the degeneracy operator `surj` (a surjection
/// in Δ onto the generator's dimension) applied to generator `gen`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Simplex {
    pub surj: DeltaOp,
    pub gen: usize,
}

impl Simplex {
    pub fn gen(id: usize, dim: usize) -> Self {
        Simplex { surj: DeltaOp::identity(dim), gen: id }
    }

    pub fn dim(&self) -> usize {
        self.surj.dom()
    }

    pub fn is_degenerate(&self) -> bool {
        !self.surj.is_identity()
    }
}

/// A nondegenerate generator: its label, dimension, and face list
/// (faces[i] = d_i, each already in normal form).
#[derive(Clone, Debug)]
pub struct Gen {
    pub label: String,
    pub dim: usize,
    pub faces: Vec<Simplex>,
}

/// A finitely presented simplicial set.
#[derive(Clone, Debug)]
pub struct SSet {
    gens: Vec<Gen>,
    by_dim: Vec<Vec<usize>>,
    label_index: BTreeMap<String, usize>,
}

impl SSet {
    /// Builds a simplicial set from generator data and verifies the
    /// simplicial identities d_i d_j = d_{j-1} d_i (i < j) on every
    /// generator.
    pub fn new(gens: Vec<Gen>) -> Result<SSet> {
        let mut label_index = BTreeMap::new();
        for (id, g) in gens.iter().enumerate() {
            if label_index.insert(g.label.clone(), id).is_some() {
                return Err(Error::Invalid(format!("duplicate generator label `{}`", g.label)));
            }
            if g.dim == 0 {
                if !g.faces.is_empty() {
                    return Err(Error::Invalid(format!("0-generator `{}` has faces", g.label)));
                }
            } else if g.faces.len() != g.dim + 1 {
                return Err(Error::Invalid(format!(
                    "generator `{}` of dimension {} must have {} faces, found {}",
                    g.label,
                    g.dim,
                    g.dim + 1,
                    g.faces.len()
                )));
            }
            for (i, f) in g.faces.iter().enumerate() {
                if f.gen >= gens.len() {
                    return Err(Error::Invalid(format!(
                        "face d_{i} of `{}` refers to unknown generator {}",
                        g.label, f.gen
                    )));
                }
                if !f.surj.is_surjective() || f.surj.cod() != gens[f.gen].dim {
                    return Err(Error::Invalid(format!(
                        "face d_{i} of `{}` is not in normal form",
                        g.label
                    )));
                }
                if f.dim() + 1 != g.dim {
                    return Err(Error::Dimension(format!(
                        "face d_{i} of `{}` has dimension {}, expected {}",
                        g.label,
                        f.dim(),
                        g.dim - 1
                    )));
                }
            }
        }
        let top = gens.iter().map(|g| g.dim).max().unwrap_or(0);
        let mut by_dim = vec![Vec::new(); top + 1];
        for (id, g) in gens.iter().enumerate() {
            by_dim[g.dim].push(id);
        }
        let x = SSet { gens, by_dim, label_index };
        x.check_identities()?;
        Ok(x)
    }

    fn check_identities(&self) -> Result<()> {
        for (id, g) in self.gens.iter().enumerate() {
            if g.dim < 2 {
                continue;
            }
            let x = Simplex::gen(id, g.dim);
            for j in 1..=g.dim {
                for i in 0..j {
                    let a = self.face(&self.face(&x, j)?, i)?;
                    let b = self.face(&self.face(&x, i)?, j - 1)?;
                    if a != b {
                        return Err(Error::Invalid(format!(
                            "simplicial identity fails on `{}`: d_{i} d_{j} ≠ d_{} d_{i}",
                            g.label,
                            j - 1
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn gens(&self) -> &[Gen] {
        &self.gens
    }

    pub fn gen_count(&self) -> usize {
        self.gens.len()
    }

    pub fn gen_label(&self, id: usize) -> &str {
        &self.gens[id].label
    }

    pub fn find_gen(&self, label: &str) -> Option<usize> {
        self.label_index.get(label).copied()
    }

    /// Largest dimension carrying a generator.
    pub fn top_dim(&self) -> usize {
        self.by_dim.len() - 1
    }

    /// Generator ids in dimension `n`, in insertion order.
    pub fn gens_in_dim(&self, n: usize) -> &[usize] {
        if n < self.by_dim.len() { &self.by_dim[n] } else { &[] }
    }

    /// All simplices in dimension `n` (including degenerate ones), in a
    /// canonical order: by generator id, then by surjection.
    pub fn simplices(&self, n: usize) -> Vec<Simplex> {
        let mut out = Vec::new();
        for m in 0..=n.min(self.top_dim()) {
            for &id in self.gens_in_dim(m) {
                for surj in DeltaOp::all_surjections(n, m) {
                    out.push(Simplex { surj, gen: id });
                }
            }
        }
        out.sort();
        out
    }

    /// The face d_i of a simplex, in normal form.
    pub fn face(&self, x: &Simplex, i: usize) -> Result<Simplex> {
        let n = x.dim();
        if n == 0 || i > n {
            return Err(Error::Dimension(format!("face d_{i} in dimension {n}")));
        }
        if !x.is_degenerate() {
            return Ok(self.gens[x.gen].faces[i].clone());
        }
        // x = s_j(y) with j the outermost (largest) letter of the word
        let word = x.surj.degeneracy_word();
        let j = word[0];
        let inner = DeltaOp::from_degeneracy_word(&word[1..], n - 1)?;
        let y = Simplex { surj: inner, gen: x.gen };
        if i == j || i == j + 1 {
            Ok(y)
        } else if i < j {
            let dy = self.face(&y, i)?;
            Ok(self.degeneracy(&dy, j - 1))
        } else {
            let dy = self.face(&y, i - 1)?;
            Ok(self.degeneracy(&dy, j))
        }
    }

    /// The degeneracy s_j of a simplex, in normal form.
    pub fn degeneracy(&self, x: &Simplex, j: usize) -> Simplex {
        let sigma = DeltaOp::codegeneracy(j, x.dim()).expect("degeneracy index in range");
        Simplex { surj: x.surj.compose(&sigma).expect("dimensions agree"), gen: x.gen }
    }

    /// Applies an arbitrary operator α: [k] → [n] to an n-simplex,
    /// giving X(α)(x) in normal form.
    pub fn apply(&self, x: &Simplex, alpha: &DeltaOp) -> Result<Simplex> {
        if alpha.cod() != x.dim() {
            return Err(Error::Dimension(format!(
                "operator into [{}] applied to {}-simplex",
                alpha.cod(),
                x.dim()
            )));
        }
        let total = x.surj.compose(alpha)?;
        let (mono, epi) = total.epi_mono();
        // contravariance: X(mono ∘ epi) = X(epi) ∘ X(mono); strip the
        // values missed by `mono` as faces, largest first
        let mut y = Simplex::gen(x.gen, self.gens[x.gen].dim);
        for &i in mono.missed_values().iter().rev() {
            y = self.face(&y, i)?;
        }
        Ok(Simplex { surj: y.surj.compose(&epi)?, gen: y.gen })
    }

    /// Printable name of a simplex, e.g. `s_2 s_0 e`.
    pub fn simplex_label(&self, x: &Simplex) -> String {
        let mut s = String::new();
        for j in x.surj.degeneracy_word() {
            s.push_str(&format!("s_{j} "));
        }
        s.push_str(&self.gens[x.gen].label);
        s
    }

    /// The normalised chain complex in degrees 0..=max_n: degree-n rank is
    /// the number of n-generators, and the boundary is the alternating
    /// face sum with degenerate faces sent to zero.
    pub fn normalized_chains(&self, max_n: usize) -> Result<ChainComplex> {
        let ranks: Vec<usize> = (0..=max_n).map(|n| self.gens_in_dim(n).len()).collect();
        let mut boundaries = vec![IntMatrix::zeros(0, 0)];
        for n in 1..=max_n {
            let src = self.gens_in_dim(n);
            let dst = self.gens_in_dim(n - 1);
            let pos: BTreeMap<usize, usize> =
                dst.iter().enumerate().map(|(k, &id)| (id, k)).collect();
            let mut m = IntMatrix::zeros(dst.len(), src.len());
            for (c, &id) in src.iter().enumerate() {
                for (i, f) in self.gens[id].faces.iter().enumerate() {
                    if f.is_degenerate() {
                        continue;
                    }
                    let r = pos[&f.gen];
                    let sign = if i % 2 == 0 { 1 } else { -1 };
                    let cur = m.get(r, c).clone();
                    m.set(r, c, cur + BigInt::from(sign));
                }
            }
            boundaries.push(m);
        }
        ChainComplex::new(ranks, boundaries)
    }

    /// Connected components of the underlying graph of 0- and 1-simplices,
    /// as a partition of the 0-generators.
    pub fn pi0(&self) -> Vec<Vec<usize>> {
        let verts = self.gens_in_dim(0);
        let mut parent: BTreeMap<usize, usize> = verts.iter().map(|&v| (v, v)).collect();
        fn find(p: &mut BTreeMap<usize, usize>, v: usize) -> usize {
            let mut v = v;
            while p[&v] != v {
                let g = p[&p[&v]];
                p.insert(v, g);
                v = g;
            }
            v
        }
        for &e in self.gens_in_dim(1) {
            let a = self.gens[e].faces[0].gen;
            let b = self.gens[e].faces[1].gen;
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent.insert(ra, rb);
            }
        }
        let mut classes: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for &v in verts {
            classes.entry(find(&mut parent, v)).or_default().push(v);
        }
        classes.into_values().collect()
    }
}

impl fmt::Display for SSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, ids) in self.by_dim.iter().enumerate() {
            let labels: Vec<&str> = ids.iter().map(|&i| self.gens[i].label.as_str()).collect();
            writeln!(f, "dim {n}: {}", labels.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::build;
    use super::*;

    #[test]
    fn circle_structure() {
        let s1 = build::circle().unwrap();
        assert_eq!(s1.gens_in_dim(0).len(), 1);
        assert_eq!(s1.gens_in_dim(1).len(), 1);
        // |S¹_n| = n + 1 (one generator in each of the n+1 surjection slots
        // onto dim ≤ 1 ... concretely: 1 + n)
        assert_eq!(s1.simplices(0).len(), 1);
        assert_eq!(s1.simplices(1).len(), 2);
        assert_eq!(s1.simplices(2).len(), 3);
        assert_eq!(s1.simplices(3).len(), 4);
    }

    #[test]
    fn face_degeneracy_identities_on_degenerate_simplices() {
        let x = build::rp2().unwrap();
        for n in 1..=3usize {
            for s in x.simplices(n) {
                if n >= 2 {
                    for j in 1..=n {
                        for i in 0..j {
                            let a = x.face(&x.face(&s, j).unwrap(), i).unwrap();
                            let b = x.face(&x.face(&s, i).unwrap(), j - 1).unwrap();
                            assert_eq!(a, b);
                        }
                    }
                }
                for j in 0..n {
                    // d_j s_j = id = d_{j+1} s_j
                    let sj = x.degeneracy(&s, j);
                    assert_eq!(x.face(&sj, j).unwrap(), s);
                    assert_eq!(x.face(&sj, j + 1).unwrap(), s);
                }
            }
        }
    }

    #[test]
    fn operator_application_is_functorial() {
        let x = build::torus().unwrap();
        for s in x.simplices(2) {
            for alpha in DeltaOp::all(1, 2) {
                for beta in DeltaOp::all(2, 1) {
                    let ab = alpha.compose(&beta).unwrap();
                    let one = x.apply(&s, &ab).unwrap();
                    let two = x.apply(&x.apply(&s, &alpha).unwrap(), &beta).unwrap();
                    assert_eq!(one, two);
                }
            }
        }
    }

    #[test]
    fn rejects_inconsistent_faces() {
        // a 2-simplex whose faces do not close up
        let bad = SSet::new(vec![
            Gen { label: "p".into(), dim: 0, faces: vec![] },
            Gen { label: "q".into(), dim: 0, faces: vec![] },
            Gen {
                label: "e".into(),
                dim: 1,
                faces: vec![Simplex::gen(0, 0), Simplex::gen(1, 0)],
            },
            Gen {
                label: "f".into(),
                dim: 1,
                faces: vec![Simplex::gen(0, 0), Simplex::gen(0, 0)],
            },
            Gen {
                label: "t".into(),
                dim: 2,
                faces: vec![Simplex::gen(2, 1), Simplex::gen(3, 1), Simplex::gen(3, 1)],
            },
        ]);
        assert!(bad.is_err());
    }
}
