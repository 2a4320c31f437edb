//! Building a presented simplicial set from degreewise element tables.

use super::{DeltaOp, Gen, SSet, Simplex};
use crate::error::{Error, Result};
use std::collections::BTreeMap;

/// A degreewise description of a simplicial set: elements per degree and
/// face/degeneracy functions on them.
pub trait ElementTable {
    type Elem: Ord + Clone;
    /// All elements of degree n (0 ≤ n ≤ bound).
    fn elements(&self, n: usize) -> Vec<Self::Elem>;
    fn face(&self, n: usize, e: &Self::Elem, i: usize) -> Result<Self::Elem>;
    fn degeneracy(&self, n: usize, e: &Self::Elem, j: usize) -> Result<Self::Elem>;
    fn label(&self, n: usize, e: &Self::Elem) -> String;
}

/// Result of tabulation: the presented set plus the correspondence
/// between table elements and normal-form simplices.
pub struct Tabulated<E: Ord + Clone> {
    pub sset: SSet,
    /// normal-form simplex of every element, keyed by (degree, element)
    pub classes: BTreeMap<(usize, E), Simplex>,
    /// the element of each generator
    pub gen_elems: Vec<(usize, E)>,
}

/// Tabulates degrees 0..=bound.  An element e is degenerate exactly when
/// s_j(d_j(e)) = e for some j; generators are the nondegenerate elements.
pub fn tabulate<T: ElementTable>(table: &T, bound: usize) -> Result<Tabulated<T::Elem>> {
    let mut gens: Vec<Gen> = Vec::new();
    let mut classes: BTreeMap<(usize, T::Elem), Simplex> = BTreeMap::new();
    let mut gen_elems: Vec<(usize, T::Elem)> = Vec::new();
    for n in 0..=bound {
        // first pass: identify nondegenerate elements and their classes
        let mut level_faces: Vec<(T::Elem, Vec<Simplex>)> = Vec::new();
        for e in table.elements(n) {
            let mut degenerate = false;
            for j in 0..n {
                let dj = table.face(n, &e, j)?;
                if table.degeneracy(n - 1, &dj, j)? == e {
                    // e = s_j(d_j e); the class of d_j e is already known
                    let inner = classes
                        .get(&(n - 1, dj))
                        .ok_or_else(|| Error::Invalid("face element missing from table".into()))?
                        .clone();
                    let sigma = DeltaOp::codegeneracy(j, n - 1)?;
                    classes.insert(
                        (n, e.clone()),
                        Simplex { surj: inner.surj.compose(&sigma)?, gen: inner.gen },
                    );
                    degenerate = true;
                    break;
                }
            }
            if degenerate {
                continue;
            }
            let mut faces = Vec::new();
            for i in 0..=n {
                if n == 0 {
                    break;
                }
                let f = table.face(n, &e, i)?;
                faces.push(
                    classes
                        .get(&(n - 1, f))
                        .ok_or_else(|| Error::Invalid("face element missing from table".into()))?
                        .clone(),
                );
            }
            classes.insert((n, e.clone()), Simplex::gen(gens.len() + level_faces.len(), n));
            level_faces.push((e, faces));
        }
        for (e, faces) in level_faces {
            gen_elems.push((n, e.clone()));
            gens.push(Gen { label: table.label(n, &e), dim: n, faces });
        }
    }
    // generator ids were assigned level-by-level in insertion order, which
    // matches the gens vector; rebuild classes is not needed
    let sset = SSet::new(gens)?;
    Ok(Tabulated { sset, classes, gen_elems })
}
