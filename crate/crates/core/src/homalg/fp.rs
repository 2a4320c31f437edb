//! Finitely presented abelian groups and exact subquotient computations.
//!
//! A group is presented as Z^ambient modulo the column lattice of a
//! relation matrix. Kernels of maps between presented groups are computed
//! by lifting to free covers and augmenting with relation columns.

use super::matrix::IntMatrix;
use super::snf::{kernel_basis, snf, solve_mat};
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Z^ambient / column-lattice(rels).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpGroup {
    pub ambient: usize,
    pub rels: IntMatrix,
}

impl FpGroup {
    pub fn free(rank: usize) -> Self {
        FpGroup { ambient: rank, rels: IntMatrix::zeros(rank, 0) }
    }

    pub fn zero() -> Self {
        Self::free(0)
    }

    /// Cyclic group Z/n (n = 0 gives Z).
    pub fn cyclic(n: i64) -> Self {
        FpGroup { ambient: 1, rels: IntMatrix::from_rows(&[vec![n]]) }
    }

    /// Invariant factors: torsion coefficients > 1 in divisibility order,
    /// followed by one 0 per free rank.
    pub fn invariants(&self) -> Vec<BigInt> {
        invariants_of(self.ambient, &self.rels)
    }

    pub fn is_trivial(&self) -> bool {
        self.invariants().is_empty()
    }

    /// Quotient by additional relation columns (in the same ambient).
    pub fn quotient(&self, extra: &IntMatrix) -> FpGroup {
        assert_eq!(extra.rows(), self.ambient);
        FpGroup { ambient: self.ambient, rels: self.rels.hstack(extra) }
    }

    pub fn is_finite(&self) -> bool {
        self.invariants().iter().all(|d| !d.is_zero())
    }

    /// Canonical coset representative of an ambient vector: write the
    /// relation lattice as u·D (columns), reduce the u-coordinates modulo
    /// the diagonal, and map back.
    pub fn reduce(&self, x: &[BigInt]) -> Vec<BigInt> {
        use num_integer::Integer;
        assert_eq!(x.len(), self.ambient);
        let s = snf(&self.rels);
        let y = s.p.mul_vec(x);
        let mut reduced = y;
        for (i, r) in reduced.iter_mut().enumerate() {
            if i < s.rank {
                let d = s.d.get(i, i);
                if !d.is_zero() {
                    *r = r.mod_floor(d);
                }
            }
        }
        s.u.mul_vec(&reduced)
    }

    /// All elements, as canonical coset representatives, with 0 first;
    /// None if the group is infinite.
    pub fn elements(&self) -> Option<Vec<Vec<BigInt>>> {
        let s = snf(&self.rels);
        if s.rank < self.ambient {
            return None;
        }
        let mods: Vec<BigInt> = (0..self.ambient).map(|i| s.d.get(i, i).clone()).collect();
        let mut out = Vec::new();
        let mut digits: Vec<BigInt> = vec![BigInt::zero(); self.ambient];
        loop {
            out.push(self.reduce(&s.u.mul_vec(&digits)));
            let mut k = 0;
            while k < self.ambient {
                digits[k] += 1;
                if digits[k] < mods[k] {
                    break;
                }
                digits[k] = BigInt::zero();
                k += 1;
            }
            if k == self.ambient {
                break;
            }
        }
        Some(out)
    }
}

pub fn invariants_of(ambient: usize, rels: &IntMatrix) -> Vec<BigInt> {
    let s = snf(rels);
    let mut out: Vec<BigInt> = s
        .invariant_factors()
        .into_iter()
        .filter(|d| !d.is_one())
        .collect();
    for _ in 0..ambient.saturating_sub(s.rank) {
        out.push(BigInt::zero());
    }
    out
}

/// A homomorphism of presented groups, given on free covers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpMap {
    pub mat: IntMatrix,
}

impl FpMap {
    pub fn new(mat: IntMatrix) -> Self {
        FpMap { mat }
    }

    pub fn identity(n: usize) -> Self {
        FpMap { mat: IntMatrix::identity(n) }
    }

    pub fn zero(dst: usize, src: usize) -> Self {
        FpMap { mat: IntMatrix::zeros(dst, src) }
    }

    /// self ∘ other.
    pub fn compose(&self, other: &FpMap) -> FpMap {
        FpMap { mat: self.mat.mul(&other.mat) }
    }

    /// Does the matrix descend to a homomorphism src → dst?
    pub fn is_well_defined(&self, src: &FpGroup, dst: &FpGroup) -> bool {
        self.mat.rows() == dst.ambient
            && self.mat.cols() == src.ambient
            && lattice_contains(&dst.rels, &self.mat.mul(&src.rels))
    }

    /// Equality of homomorphisms src → dst (matrices may differ by relations).
    pub fn same_map(&self, other: &FpMap, dst: &FpGroup) -> bool {
        let mut diff = self.mat.clone();
        for i in 0..diff.rows() {
            for j in 0..diff.cols() {
                let v = diff.get(i, j) - other.mat.get(i, j);
                diff.set(i, j, v);
            }
        }
        lattice_contains(&dst.rels, &diff)
    }

    pub fn cokernel_invariants(&self, dst: &FpGroup) -> Vec<BigInt> {
        invariants_of(dst.ambient, &dst.rels.hstack(&self.mat))
    }

    pub fn kernel_invariants(&self, src: &FpGroup, dst: &FpGroup) -> Vec<BigInt> {
        let (k, _) = kernel(self, src, dst);
        k.invariants()
    }

    /// Isomorphism test: trivial kernel and trivial cokernel.
    pub fn is_isomorphism(&self, src: &FpGroup, dst: &FpGroup) -> bool {
        self.cokernel_invariants(dst).is_empty() && self.kernel_invariants(src, dst).is_empty()
    }
}

/// Is every column of `m` in the column lattice of `lat`?
pub fn lattice_contains(lat: &IntMatrix, m: &IntMatrix) -> bool {
    if m.is_zero() {
        return true;
    }
    solve_mat(lat, m).is_some()
}

/// Generators of the lattice { x : f x ∈ column-lattice(sub) }.
pub fn preimage_lattice(f: &IntMatrix, sub: &IntMatrix) -> IntMatrix {
    let aug = f.hstack(&sub.neg());
    let k = kernel_basis(&aug);
    k.top_rows(f.cols())
}

/// Kernel of a map of presented groups, with the inclusion matrix of its
/// generators into the ambient of `src`.
pub fn kernel(f: &FpMap, src: &FpGroup, dst: &FpGroup) -> (FpGroup, IntMatrix) {
    let gens = preimage_lattice(&f.mat, &dst.rels);
    let rels = preimage_lattice(&gens, &src.rels);
    (FpGroup { ambient: gens.cols(), rels }, gens)
}

/// Factor the columns of `f` through the subgroup generated by the columns
/// of `gens` inside Z^n / rels: find s with gens·s ≡ f (mod rels).
pub fn factor_through(f: &IntMatrix, gens: &IntMatrix, rels: &IntMatrix) -> Option<IntMatrix> {
    let aug = gens.hstack(rels);
    let sol = solve_mat(&aug, f)?;
    Some(sol.top_rows(gens.cols()))
}

/// A chain complex of finitely presented abelian groups.
/// `diffs[n]` maps degree n → n−1 for n ≥ 1 (`diffs[0]` is the zero map).
#[derive(Clone, Debug)]
pub struct FpComplex {
    pub groups: Vec<FpGroup>,
    pub diffs: Vec<FpMap>,
}

/// Homology in one degree: the group and the matrix whose columns are the
/// cycle representatives of its generators (in the ambient of C_n).
#[derive(Clone, Debug)]
pub struct HomologyAt {
    pub group: FpGroup,
    pub cycle_gens: IntMatrix,
}

impl FpComplex {
    pub fn validate(&self) -> Result<(), String> {
        if self.diffs.len() != self.groups.len() {
            return Err("diff count must match group count".into());
        }
        for n in 0..self.groups.len() {
            let dst = if n == 0 { FpGroup::zero() } else { self.groups[n - 1].clone() };
            if !self.diffs[n].is_well_defined(&self.groups[n], &dst) {
                return Err(format!("differential at degree {n} is not well defined"));
            }
        }
        for n in 1..self.groups.len() {
            let sq = self.diffs[n - 1].compose(&self.diffs[n]);
            let dst = if n >= 2 { self.groups[n - 2].clone() } else { FpGroup::zero() };
            if !sq.same_map(&FpMap::zero(dst.ambient, self.groups[n].ambient), &dst) {
                return Err(format!("d² ≠ 0 at degree {n}"));
            }
        }
        Ok(())
    }

    pub fn homology_at(&self, n: usize) -> HomologyAt {
        let cn = &self.groups[n];
        // cycles: preimage of the relation lattice below
        let cycles = if n == 0 {
            IntMatrix::identity(cn.ambient)
        } else {
            preimage_lattice(&self.diffs[n].mat, &self.groups[n - 1].rels)
        };
        // boundaries + relations of C_n
        let bnd = if n + 1 < self.groups.len() {
            self.diffs[n + 1].mat.hstack(&cn.rels)
        } else {
            cn.rels.clone()
        };
        let rels = preimage_lattice(&cycles, &bnd);
        HomologyAt { group: FpGroup { ambient: cycles.cols(), rels }, cycle_gens: cycles }
    }

    pub fn homology_invariants(&self, range: usize) -> Vec<Vec<BigInt>> {
        (0..=range).map(|n| self.homology_at(n).group.invariants()).collect()
    }
}

/// The map induced on degree-n homology by a degreewise chain map.
pub fn induced_on_homology(
    src: &FpComplex,
    dst: &FpComplex,
    chain_maps: &[FpMap],
    n: usize,
) -> (HomologyAt, HomologyAt, FpMap) {
    let ha = src.homology_at(n);
    let hb = dst.homology_at(n);
    let mapped = chain_maps[n].mat.mul(&ha.cycle_gens);
    // every image cycle lies in the cycle lattice of dst, up to relations
    let coords = factor_through(&mapped, &hb.cycle_gens, &dst.groups[n].rels)
        .expect("chain map must carry cycles to cycles");
    (ha, hb, FpMap::new(coords))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn invariants_basic() {
        assert_eq!(FpGroup::free(2).invariants(), vec![BigInt::zero(), BigInt::zero()]);
        assert_eq!(FpGroup::cyclic(4).invariants(), vec![BigInt::from(4)]);
        assert!(FpGroup::cyclic(1).is_trivial());
    }

    #[test]
    fn kernel_of_times_two_mod_four() {
        // Z --2--> Z/4 has kernel 2Z ≅ Z
        let src = FpGroup::free(1);
        let dst = FpGroup::cyclic(4);
        let f = FpMap::new(IntMatrix::from_rows(&[vec![2]]));
        assert!(f.is_well_defined(&src, &dst));
        let (k, incl) = kernel(&f, &src, &dst);
        assert_eq!(k.invariants(), vec![BigInt::zero()]);
        // inclusion lands in 2Z
        assert!((incl.get(0, 0) % 2u8).is_zero());
    }

    #[test]
    fn complex_homology_circle() {
        // 0 -> Z --0--> Z -> 0 : H_0 = Z, H_1 = Z
        let c = FpComplex {
            groups: vec![FpGroup::free(1), FpGroup::free(1)],
            diffs: vec![FpMap::zero(0, 1), FpMap::zero(1, 1)],
        };
        c.validate().unwrap();
        let h = c.homology_invariants(1);
        assert_eq!(h[0], vec![BigInt::zero()]);
        assert_eq!(h[1], vec![BigInt::zero()]);
    }

    #[test]
    fn complex_homology_projective_plane_shape() {
        // Z --2--> Z --0--> Z : H_0 = Z, H_1 = Z/2, H_2 = 0
        let c = FpComplex {
            groups: vec![FpGroup::free(1), FpGroup::free(1), FpGroup::free(1)],
            diffs: vec![
                FpMap::zero(0, 1),
                FpMap::zero(1, 1),
                FpMap::new(IntMatrix::from_rows(&[vec![2]])),
            ],
        };
        c.validate().unwrap();
        let h = c.homology_invariants(2);
        assert_eq!(h[0], vec![BigInt::zero()]);
        assert_eq!(h[1], vec![BigInt::from(2)]);
        assert!(h[2].is_empty());
    }
}
