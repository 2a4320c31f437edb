//! Bounded chain complexes of finitely generated free abelian groups and
//! homology by Smith normal form.

use super::matrix::IntMatrix;
use super::snf::snf;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// A bounded complex of free abelian groups given by integer boundary
/// matrices. `boundary[n]` maps degree n → n−1 for 1 ≤ n ≤ top degree;
/// `boundary[0]` is an empty matrix.
#[derive(Clone, Debug)]
pub struct ChainComplex {
    pub ranks: Vec<usize>,
    pub boundaries: Vec<IntMatrix>,
}

impl ChainComplex {
    pub fn new(ranks: Vec<usize>, boundaries: Vec<IntMatrix>) -> Result<Self> {
        if boundaries.len() != ranks.len() {
            return Err(Error::Invalid("boundary count must equal rank count".into()));
        }
        for n in 1..ranks.len() {
            if boundaries[n].rows() != ranks[n - 1] || boundaries[n].cols() != ranks[n] {
                return Err(Error::Invalid(format!("boundary {n} has wrong shape")));
            }
        }
        let c = ChainComplex { ranks, boundaries };
        c.check_square_zero()?;
        Ok(c)
    }

    pub fn top_degree(&self) -> usize {
        self.ranks.len().saturating_sub(1)
    }

    pub fn check_square_zero(&self) -> Result<()> {
        for n in 2..self.ranks.len() {
            if !self.boundaries[n - 1].mul(&self.boundaries[n]).is_zero() {
                return Err(Error::Invalid(format!("∂∂ ≠ 0 at degree {n}")));
            }
        }
        Ok(())
    }

    /// Homology H_n for 0 ≤ n ≤ range, as invariant factors per degree
    /// (torsion coefficients > 1 in divisibility order, then one 0 per Z).
    ///
    /// Degrees only valid when the complex extends one degree higher; the
    /// caller must ensure `range < top_degree()` or accept that the top
    /// degree reports the homology of the truncated complex.
    pub fn homology(&self, range: usize) -> Result<Vec<Vec<BigInt>>> {
        self.check_square_zero()?;
        if range >= self.ranks.len() {
            return Err(Error::Dimension(format!(
                "homology range {range} exceeds complex top degree {}",
                self.top_degree()
            )));
        }
        let mut out = Vec::new();
        for n in 0..=range {
            let rank_dn = if n == 0 { 0 } else { snf(&self.boundaries[n]).rank };
            let (rank_dn1, torsion) = if n + 1 < self.ranks.len() {
                let s = snf(&self.boundaries[n + 1]);
                let t: Vec<BigInt> =
                    s.invariant_factors().into_iter().filter(|d| !d.is_one()).collect();
                (s.rank, t)
            } else {
                (0, Vec::new())
            };
            let free = self.ranks[n] - rank_dn - rank_dn1;
            let mut inv = torsion;
            for _ in 0..free {
                inv.push(BigInt::zero());
            }
            out.push(inv);
        }
        Ok(out)
    }
}

/// Render invariant factors like `[2, 0]` for Z/2 ⊕ Z.
pub fn format_invariants(inv: &[BigInt]) -> String {
    let items: Vec<String> = inv.iter().map(|d| d.to_string()).collect();
    format!("[{}]", items.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn boundary_of_tetrahedron_boundary() {
        // ∂Δ³: 4 vertices, 6 edges, 4 triangles; H_0 = Z, H_1 = 0, H_2 = Z
        // vertices 0..4, edges (i,j) i<j in lex order, faces = all 3-subsets
        let verts = 4usize;
        let edges: Vec<(usize, usize)> =
            (0..verts).flat_map(|i| (i + 1..verts).map(move |j| (i, j))).collect();
        let tris: Vec<(usize, usize, usize)> = (0..verts)
            .flat_map(|i| {
                (i + 1..verts).flat_map(move |j| (j + 1..verts).map(move |k| (i, j, k)))
            })
            .collect();
        let mut d1 = IntMatrix::zeros(verts, edges.len());
        for (e, &(a, b)) in edges.iter().enumerate() {
            d1.set(b, e, BigInt::from(1));
            d1.set(a, e, BigInt::from(-1));
        }
        let edge_idx = |a: usize, b: usize| edges.iter().position(|&e| e == (a, b)).unwrap();
        let mut d2 = IntMatrix::zeros(edges.len(), tris.len());
        for (t, &(a, b, c)) in tris.iter().enumerate() {
            // ∂(abc) = bc - ac + ab
            d2.set(edge_idx(b, c), t, BigInt::from(1));
            let v = d2.get(edge_idx(a, c), t) - 1;
            d2.set(edge_idx(a, c), t, v);
            let v = d2.get(edge_idx(a, b), t) + 1;
            d2.set(edge_idx(a, b), t, v);
        }
        let c = ChainComplex::new(
            vec![verts, edges.len(), tris.len()],
            vec![IntMatrix::zeros(0, verts), d1, d2],
        )
        .unwrap();
        let h = c.homology(2).unwrap();
        assert_eq!(h[0], vec![BigInt::zero()]);
        assert!(h[1].is_empty());
        assert_eq!(h[2], vec![BigInt::zero()]);
    }

    #[test]
    fn zero_complex() {
        let c = ChainComplex::new(vec![0, 0], vec![IntMatrix::zeros(0, 0); 2]).unwrap();
        let h = c.homology(1).unwrap();
        assert!(h[0].is_empty() && h[1].is_empty());
    }

    #[test]
    fn torus_delta_complex() {
        // 1 vertex, 3 edges, 2 triangles; ∂2 sends both triangles to a+b-c
        let d1 = IntMatrix::zeros(1, 3);
        let d2 = IntMatrix::from_rows(&[vec![1, 1], vec![1, 1], vec![-1, -1]]);
        let c = ChainComplex::new(vec![1, 3, 2], vec![IntMatrix::zeros(0, 1), d1, d2]).unwrap();
        let h = c.homology(1).unwrap();
        assert_eq!(h[1], vec![BigInt::zero(), BigInt::zero()]);
    }
}
