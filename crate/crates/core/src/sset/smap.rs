//! Maps of finitely presented simplicial sets.

use super::{SSet, Simplex};
use crate::error::{Error, Result};

/// A simplicial map, determined by the images of the source's generators.
/// `images[g]` is the (possibly degenerate) image of generator `g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SMap {
    pub images: Vec<Simplex>,
}

impl SMap {
    pub fn identity(x: &SSet) -> SMap {
        SMap {
            images: (0..x.gen_count()).map(|g| Simplex::gen(g, x.gens()[g].dim)).collect(),
        }
    }

    /// Builds a map from generator labels: `assign(label) -> target label`
    /// must name a generator of the same dimension in the target.
    pub fn by_labels<F>(src: &SSet, tgt: &SSet, assign: F) -> Result<SMap>
    where
        F: Fn(&str) -> String,
    {
        let mut images = Vec::new();
        for g in src.gens() {
            let tl = assign(&g.label);
            let id = tgt
                .find_gen(&tl)
                .ok_or_else(|| Error::Invalid(format!("no target generator `{tl}`")))?;
            images.push(Simplex::gen(id, tgt.gens()[id].dim));
        }
        let f = SMap { images };
        f.validate(src, tgt)?;
        Ok(f)
    }

    /// Checks dimensions and commutation with faces on all generators
    /// (degeneracies then commute automatically).
    pub fn validate(&self, src: &SSet, tgt: &SSet) -> Result<()> {
        if self.images.len() != src.gen_count() {
            return Err(Error::Invalid("image list length mismatch".into()));
        }
        for (g, spec) in src.gens().iter().enumerate() {
            if self.images[g].dim() != spec.dim {
                return Err(Error::Dimension(format!(
                    "image of `{}` has dimension {}, expected {}",
                    spec.label,
                    self.images[g].dim(),
                    spec.dim
                )));
            }
            if self.images[g].gen >= tgt.gen_count() {
                return Err(Error::Invalid("image refers to unknown generator".into()));
            }
            let x = Simplex::gen(g, spec.dim);
            for i in 0..=spec.dim {
                if spec.dim == 0 {
                    break;
                }
                let a = self.apply(src, tgt, &src.face(&x, i)?)?;
                let b = tgt.face(&self.images[g], i)?;
                if a != b {
                    return Err(Error::Invalid(format!(
                        "map does not commute with d_{i} on `{}`",
                        spec.label
                    )));
                }
            }
        }
        Ok(())
    }

    /// Image of an arbitrary simplex: f(X(π)(g)) = Y(π)(f(g)).
    pub fn apply(&self, _src: &SSet, tgt: &SSet, x: &Simplex) -> Result<Simplex> {
        tgt.apply(&self.images[x.gen], &x.surj)
    }

    /// self ∘ other.
    pub fn compose(&self, other: &SMap, mid: &SSet, tgt: &SSet) -> Result<SMap> {
        let mut images = Vec::new();
        for im in &other.images {
            images.push(self.apply(mid, tgt, im)?);
        }
        Ok(SMap { images })
    }

    /// Degreewise injectivity.  For finitely presented sets this holds
    /// exactly when generators map to pairwise distinct nondegenerate
    /// simplices.
    pub fn is_injective(&self, src: &SSet) -> bool {
        let _ = src;
        if self.images.iter().any(|s| s.is_degenerate()) {
            return false;
        }
        let mut seen: Vec<usize> = self.images.iter().map(|s| s.gen).collect();
        seen.sort_unstable();
        seen.windows(2).all(|w| w[0] != w[1])
    }

    /// Degreewise surjectivity: every target generator is the image of
    /// some simplex, i.e. appears as the generator part of some image.
    pub fn is_surjective(&self, tgt: &SSet) -> bool {
        let mut hit = vec![false; tgt.gen_count()];
        for s in &self.images {
            hit[s.gen] = true;
        }
        hit.into_iter().all(|h| h)
    }
}

#[cfg(test)]
mod tests {
    use super::super::build;
    use super::*;

    #[test]
    fn fold_map_wedge_to_circle() {
        let w = build::wedge_two_circles().unwrap();
        let c = build::circle().unwrap();
        let f = SMap::by_labels(&w, &c, |l| {
            if l == "*" { "v".to_string() } else { "e".to_string() }
        })
        .unwrap();
        assert!(!f.is_injective(&w));
        assert!(f.is_surjective(&c));
    }

    #[test]
    fn covering_projection_validates() {
        let (cover, _action) = build::double_cover_circle().unwrap();
        let c = build::circle().unwrap();
        let p = SMap::by_labels(&cover, &c, |l| {
            if l.starts_with('v') { "v".to_string() } else { "e".to_string() }
        })
        .unwrap();
        // p maps both vertices to v and both edges to e
        assert!(p.is_surjective(&c));
    }
}
