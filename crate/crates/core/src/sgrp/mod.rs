//! Simplicial groups: free words, the Kan loop group, classifying
//! bundles EG → BG, twisting functions and twisted cartesian products.

pub mod bundle;
pub mod word;

pub use bundle::{eg_bundle, twisted_bundle_finite, verify_twisting_finite, EgBundle};
pub use word::Word;

use crate::error::{Error, Result};
use crate::homalg::{FpGroup, IntMatrix};
use crate::sset::{SSet, Simplex};
use num_bigint::BigInt;

/// The Kan loop group GX of a simplicial set X.  The group in degree n is
/// free on the letters ⟨x⟩ for x ∈ X_{n+1}, modulo ⟨s₀y⟩ = e, with
///
///   d₀⟨x⟩ = ⟨d₁x⟩·⟨d₀x⟩⁻¹,  dᵢ⟨x⟩ = ⟨dᵢ₊₁x⟩ (i ≥ 1),  sⱼ⟨x⟩ = ⟨sⱼ₊₁x⟩.
pub struct LoopGroup<'a> {
    pub space: &'a SSet,
}

impl<'a> LoopGroup<'a> {
    pub fn new(space: &'a SSet) -> LoopGroup<'a> {
        LoopGroup { space }
    }

    /// The letter ⟨x⟩ for x ∈ X_{n+1}, a degree-n element; returns the
    /// empty word when x is an s₀-degeneracy.
    pub fn letter(&self, x: &Simplex) -> Result<Word> {
        if x.dim() == 0 {
            return Err(Error::Dimension("letters require dimension ≥ 1".into()));
        }
        if x.surj.degeneracy_word().contains(&0) {
            return Ok(Word::identity());
        }
        Ok(Word::letter(x.clone(), 1))
    }

    fn map_letters<F>(&self, w: &Word, f: F) -> Result<Word>
    where
        F: Fn(&Simplex) -> Result<Word>,
    {
        let mut out = Word::identity();
        for (x, e) in w.letters() {
            let img = f(x)?;
            let img = if *e == 1 { img } else { img.inv() };
            out = out.mul(&img);
        }
        Ok(out)
    }

    /// Face dᵢ: degree n → degree n−1.
    pub fn face(&self, w: &Word, i: usize) -> Result<Word> {
        self.map_letters(w, |x| {
            if i == 0 {
                let a = self.letter(&self.space.face(x, 1)?)?;
                let b = self.letter(&self.space.face(x, 0)?)?;
                Ok(a.mul(&b.inv()))
            } else {
                self.letter(&self.space.face(x, i + 1)?)
            }
        })
    }

    /// Degeneracy sⱼ: degree n → degree n+1.
    pub fn degeneracy(&self, w: &Word, j: usize) -> Result<Word> {
        self.map_letters(w, |x| self.letter(&self.space.degeneracy(x, j + 1)))
    }

    /// Verifies the simplicial identities on all letters of degree < bound.
    pub fn check_identities(&self, bound: usize) -> Result<()> {
        for n in 1..=bound {
            for x in self.space.simplices(n + 1) {
                let w = self.letter(&x)?;
                for j in 1..=n {
                    for i in 0..j {
                        if n < 2 {
                            continue;
                        }
                        let a = self.face(&self.face(&w, j)?, i)?;
                        let b = self.face(&self.face(&w, i)?, j - 1)?;
                        if a != b {
                            return Err(Error::Invalid(format!(
                                "loop group: d_{i} d_{j} fails on ⟨{}⟩",
                                self.space.simplex_label(&x)
                            )));
                        }
                    }
                }
                for j in 0..n {
                    let sj = self.degeneracy(&w, j)?;
                    if self.face(&sj, j)? != w || self.face(&sj, j + 1)? != w {
                        return Err(Error::Invalid(format!(
                            "loop group: d s = id fails on ⟨{}⟩",
                            self.space.simplex_label(&x)
                        )));
                    }
                    for i in 0..j {
                        let a = self.face(&sj, i)?;
                        let b = self.degeneracy(&self.face(&w, i)?, j - 1)?;
                        if a != b {
                            return Err(Error::Invalid("loop group: d s commutation fails".into()));
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// A finite group presentation with labelled generators; relators are
/// exponent words over generator indices.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub gen_labels: Vec<String>,
    pub relators: Vec<Vec<(usize, i32)>>,
}

impl Presentation {
    /// The abelianisation as a finitely presented abelian group.
    pub fn abelianization(&self) -> FpGroup {
        let mut rels = IntMatrix::zeros(self.gen_labels.len(), self.relators.len());
        for (c, r) in self.relators.iter().enumerate() {
            for &(g, e) in r {
                let cur = rels.get(g, c).clone();
                rels.set(g, c, cur + BigInt::from(e));
            }
        }
        FpGroup { ambient: self.gen_labels.len(), rels }
    }
}

/// Presentation of π₀(GX) ≅ π₁(X) for a reduced simplicial set X (one
/// vertex): one generator per nondegenerate 1-simplex, one relator
/// ⟨d₁x⟩⟨d₀x⟩⁻¹⟨d₂x⟩⁻¹ per nondegenerate 2-simplex.
pub fn pi1_presentation(x: &SSet) -> Result<Presentation> {
    if x.gens_in_dim(0).len() != 1 {
        return Err(Error::Invalid(
            "fundamental group presentation requires a reduced simplicial set".into(),
        ));
    }
    let lg = LoopGroup::new(x);
    let edge_gens = x.gens_in_dim(1).to_vec();
    let gen_index = |id: usize| edge_gens.iter().position(|&g| g == id);
    let gen_labels = edge_gens.iter().map(|&g| x.gen_label(g).to_string()).collect();
    let mut relators = Vec::new();
    for &t in x.gens_in_dim(2) {
        let gamma = lg.letter(&Simplex::gen(t, 2))?;
        let rel = lg.face(&gamma, 0)?.mul(&lg.face(&gamma, 1)?.inv());
        let word: Vec<(usize, i32)> = rel
            .letters()
            .iter()
            .map(|(s, e)| {
                debug_assert!(!s.is_degenerate());
                (gen_index(s.gen).expect("degree-0 letter is an edge generator"), *e)
            })
            .collect();
        if !word.is_empty() {
            relators.push(word);
        }
    }
    Ok(Presentation { gen_labels, relators })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sset::build;

    #[test]
    fn loop_group_identities() {
        for x in [build::circle().unwrap(), build::rp2().unwrap(), build::torus().unwrap()] {
            LoopGroup::new(&x).check_identities(3).unwrap();
        }
    }

    #[test]
    fn fundamental_groups_of_models() {
        let p = pi1_presentation(&build::circle().unwrap()).unwrap();
        assert_eq!(p.gen_labels, vec!["e"]);
        assert!(p.relators.is_empty());
        assert_eq!(p.abelianization().invariants(), vec![BigInt::from(0)]);

        let p = pi1_presentation(&build::rp2().unwrap()).unwrap();
        assert_eq!(p.gen_labels, vec!["e"]);
        // a single relator ē^{±2}
        assert_eq!(p.relators.len(), 1);
        let total: i32 = p.relators[0].iter().map(|&(_, e)| e).sum();
        assert_eq!(total.abs(), 2);
        assert_eq!(p.abelianization().invariants(), vec![BigInt::from(2)]);

        let p = pi1_presentation(&build::torus().unwrap()).unwrap();
        assert_eq!(
            p.abelianization().invariants(),
            vec![BigInt::from(0), BigInt::from(0)]
        );

        let p = pi1_presentation(&build::sphere2().unwrap()).unwrap();
        assert!(p.gen_labels.is_empty());
        assert!(p.abelianization().invariants().is_empty());
    }

    #[test]
    fn pi1_matches_first_homology_for_abelian_cases() {
        for x in [build::torus().unwrap(), build::rp2().unwrap()] {
            let h1 = x.normalized_chains(2).unwrap().homology(1).unwrap()[1].clone();
            assert_eq!(pi1_presentation(&x).unwrap().abelianization().invariants(), h1);
        }
    }
}
