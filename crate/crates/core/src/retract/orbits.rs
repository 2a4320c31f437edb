//! Homotopy orbits of a group action: the diagonal of the bisimplicial
//! set whose n-th row is the nerve of the transport category of Y_n.
//!
//! An n-simplex is a pair (y, [h₁,…,hₙ]) recording the final object y of
//! a transport chain together with the morphism letters; the i-th chain
//! object is y·(hₙ⋯h_{i+1}).

use crate::error::Result;
use crate::sset::tabulate::{tabulate, ElementTable};
use crate::sset::{GroupAction, SSet, Simplex};

struct OrbitTable<'a> {
    y: &'a SSet,
    action: &'a GroupAction,
}

impl ElementTable for OrbitTable<'_> {
    type Elem = (Simplex, Vec<usize>);

    fn elements(&self, n: usize) -> Vec<Self::Elem> {
        let order = self.action.group.order();
        let mut out = Vec::new();
        for y in self.y.simplices(n) {
            let mut word = vec![0usize; n];
            loop {
                out.push((y.clone(), word.clone()));
                let mut k = 0;
                while k < n {
                    word[k] += 1;
                    if word[k] < order {
                        break;
                    }
                    word[k] = 0;
                    k += 1;
                }
                if k == n {
                    break;
                }
            }
        }
        out
    }

    fn face(&self, n: usize, e: &Self::Elem, i: usize) -> Result<Self::Elem> {
        let (y, word) = e;
        let fy = self.y.face(y, i)?;
        if i == 0 {
            Ok((fy, word[1..].to_vec()))
        } else if i == n {
            // the final chain object becomes y·hₙ
            Ok((self.action.act(self.y, &fy, word[n - 1])?, word[..n - 1].to_vec()))
        } else {
            // merge the letters around the dropped object: hᵢ₊₁·hᵢ
            let mut w = word.clone();
            let merged = self.action.group.mul(w[i], w[i - 1]);
            w.remove(i);
            w[i - 1] = merged;
            Ok((fy, w))
        }
    }

    fn degeneracy(&self, n: usize, e: &Self::Elem, j: usize) -> Result<Self::Elem> {
        let (y, word) = e;
        let _ = n;
        let mut w = word.clone();
        w.insert(j, self.action.group.e());
        Ok((self.y.degeneracy(y, j), w))
    }

    fn label(&self, _n: usize, e: &Self::Elem) -> String {
        let letters: Vec<&str> =
            e.1.iter().map(|&h| self.action.group.label(h)).collect();
        format!("({}|{})", self.y.simplex_label(&e.0), letters.join(","))
    }
}

/// The homotopy orbit space Y_{hG} through the given dimension bound.
pub fn homotopy_orbits(y: &SSet, action: &GroupAction, bound: usize) -> Result<SSet> {
    Ok(tabulate(&OrbitTable { y, action }, bound)?.sset)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sset::action::quotient;
    use crate::sset::build;
    use num_bigint::BigInt;

    fn inv(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn homology(x: &SSet, range: usize) -> Vec<Vec<BigInt>> {
        x.normalized_chains(range + 1).unwrap().homology(range).unwrap()
    }

    #[test]
    fn trivial_action_gives_the_space_back() {
        let x = build::rp2().unwrap();
        let ho = homotopy_orbits(&x, &GroupAction::trivial(&x), 3).unwrap();
        for n in 0..=3 {
            assert_eq!(ho.simplices(n).len(), x.simplices(n).len());
        }
        assert_eq!(homology(&ho, 2), homology(&x, 2));
    }

    #[test]
    fn point_mod_z2_is_classifying_space() {
        let (pt, action) = z2_point();
        let ho = homotopy_orbits(&pt, &action, 4).unwrap();
        assert_eq!(homology(&ho, 3), vec![inv(&[0]), inv(&[2]), inv(&[]), inv(&[2])]);
    }

    fn z2_point() -> (SSet, GroupAction) {
        let pt = build::point();
        let g = crate::fincat::Group::cyclic(2);
        let maps = vec![crate::sset::SMap::identity(&pt); 2];
        (pt.clone(), GroupAction::new(g, maps, &pt).unwrap())
    }

    #[test]
    fn free_action_on_two_points_is_contractible() {
        let two = build::discrete(&["a".into(), "b".into()]).unwrap();
        let g = crate::fincat::Group::cyclic(2);
        let swap = crate::sset::SMap::by_labels(&two, &two, |l| match l {
            "a" => "b".to_string(),
            _ => "a".to_string(),
        })
        .unwrap();
        let action =
            GroupAction::new(g, vec![crate::sset::SMap::identity(&two), swap], &two).unwrap();
        let ho = homotopy_orbits(&two, &action, 4).unwrap();
        assert_eq!(homology(&ho, 3), vec![inv(&[0]), inv(&[]), inv(&[]), inv(&[])]);
    }

    #[test]
    fn free_action_matches_quotient_homology() {
        let (p, action) = build::double_cover_circle().unwrap();
        let ho = homotopy_orbits(&p, &action, 4).unwrap();
        let (q, _) = quotient(&p, &action).unwrap();
        assert_eq!(homology(&ho, 3), homology(&q, 3));
    }
}
