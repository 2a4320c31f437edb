//! Simplicial abelian groups assembled from abelian objects: the sum
//! over the base (forgetting the group action) and the collapse functor
//! (which remembers it as an action on the sum over a point base).

use super::{base_objects, AbObj};
use crate::error::{Error, Result};
use crate::homalg::fp::{kernel, factor_through, FpComplex, FpGroup, FpMap};
use crate::homalg::matrix::IntMatrix;
use crate::retract::REnv;
use crate::sset::DeltaOp;
use num_bigint::BigInt;
use std::collections::BTreeMap;

/// A simplicial finitely generated abelian group through degree d,
/// remembering the block decomposition by base objects.
#[derive(Clone, Debug)]
pub struct SAb {
    pub d: usize,
    pub groups: Vec<FpGroup>,
    /// faces[n][i]: degree n → n−1 (n ≥ 1; faces[0] is empty)
    pub faces: Vec<Vec<IntMatrix>>,
    /// degens[n][j]: degree n → n+1 (for n < d)
    pub degens: Vec<Vec<IntMatrix>>,
    /// object indices of the blocks per degree
    pub blocks: Vec<Vec<usize>>,
    /// ambient offset of each block
    pub offsets: Vec<Vec<usize>>,
}

impl SAb {
    pub fn validate(&self) -> Result<()> {
        for n in 2..=self.d {
            for i in 0..n {
                for j in (i + 1)..=n {
                    // d_i d_j = d_{j-1} d_i
                    let lhs = self.faces[n - 1][i].mul(&self.faces[n][j]);
                    let rhs = self.faces[n - 1][j - 1].mul(&self.faces[n][i]);
                    if !FpMap::new(lhs).same_map(&FpMap::new(rhs), &self.groups[n - 2]) {
                        return Err(Error::Invalid("simplicial identity fails".into()));
                    }
                }
            }
        }
        for n in 1..=self.d {
            for j in 0..n {
                let sd = self.faces[n][j].mul(&self.degens[n - 1][j]);
                let id = IntMatrix::identity(self.groups[n - 1].ambient);
                if !FpMap::new(sd).same_map(&FpMap::new(id), &self.groups[n - 1]) {
                    return Err(Error::Invalid("face-degeneracy identity fails".into()));
                }
            }
        }
        Ok(())
    }

    /// The unnormalised chain complex with alternating face sums.
    pub fn unnormalized(&self) -> Result<FpComplex> {
        let mut diffs = vec![FpMap::zero(0, self.groups[0].ambient)];
        for n in 1..=self.d {
            let mut m = IntMatrix::zeros(self.groups[n - 1].ambient, self.groups[n].ambient);
            for (i, face) in self.faces[n].iter().enumerate() {
                let signed = if i % 2 == 0 { face.clone() } else { face.neg() };
                m = add_matrices(&m, &signed);
            }
            diffs.push(FpMap::new(m));
        }
        let c = FpComplex { groups: self.groups.clone(), diffs };
        c.validate().map_err(Error::Invalid)?;
        Ok(c)
    }

    /// The normalised chain complex: the unnormalised complex with the
    /// degenerate summands collapsed (images of the degeneracies join the
    /// relations); its homology agrees with the Moore complex.
    pub fn normalized(&self) -> Result<FpComplex> {
        let unn = self.unnormalized()?;
        let mut groups = Vec::new();
        for n in 0..=self.d {
            let mut rels = self.groups[n].rels.clone();
            if n >= 1 {
                for sj in &self.degens[n - 1] {
                    rels = rels.hstack(sj);
                }
            }
            groups.push(FpGroup { ambient: self.groups[n].ambient, rels });
        }
        let c = FpComplex { groups, diffs: unn.diffs };
        c.validate().map_err(Error::Invalid)?;
        Ok(c)
    }

    /// The Moore complex: N_n = ∩_{i≥1} ker dᵢ with differential d₀.
    pub fn moore(&self) -> Result<FpComplex> {
        let mut groups = vec![self.groups[0].clone()];
        let mut incls = vec![IntMatrix::identity(self.groups[0].ambient)];
        for n in 1..=self.d {
            let mut cur = self.groups[n].clone();
            let mut incl = IntMatrix::identity(self.groups[n].ambient);
            for i in 1..=n {
                let f = FpMap::new(self.faces[n][i].mul(&incl));
                let (k, j) = kernel(&f, &cur, &self.groups[n - 1]);
                incl = incl.mul(&j);
                cur = k;
            }
            groups.push(cur);
            incls.push(incl);
        }
        let mut diffs = vec![FpMap::zero(0, groups[0].ambient)];
        for n in 1..=self.d {
            let img = self.faces[n][0].mul(&incls[n]);
            let coords = factor_through(&img, &incls[n - 1], &self.groups[n - 1].rels)
                .ok_or_else(|| Error::Invalid("Moore differential escapes the complex".into()))?;
            diffs.push(FpMap::new(coords));
        }
        let c = FpComplex { groups, diffs };
        c.validate().map_err(Error::Invalid)?;
        Ok(c)
    }

    /// Moore-complex homotopy groups, as invariant factors per degree.
    pub fn homotopy(&self, range: usize) -> Result<Vec<Vec<BigInt>>> {
        if range >= self.d {
            return Err(Error::Dimension("homotopy range exceeds truncation".into()));
        }
        Ok(self.moore()?.homology_invariants(range))
    }
}

fn add_matrices(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    IntMatrix::from_fn(a.rows(), a.cols(), |i, j| a.get(i, j) + b.get(i, j))
}

/// The blockwise matrix of the structure maps along (α, e) between two
/// degrees of the sum decomposition.
fn assemble(
    env: &REnv,
    y: &AbObj,
    blocks: &[Vec<usize>],
    offsets: &[Vec<usize>],
    ambients: &[usize],
    n: usize,
    alpha: &DeltaOp,
    g: usize,
) -> Result<IntMatrix> {
    let m = alpha.dom();
    let mut out = IntMatrix::zeros(ambients[m], ambients[n]);
    for (bi, &t) in blocks[n].iter().enumerate() {
        let s = y.source(env, t, alpha, g)?;
        let row_block = blocks[m]
            .iter()
            .position(|&u| u == s)
            .ok_or_else(|| Error::Invalid("missing summand".into()))?;
        let mat = &y.maps[&(t, alpha.clone(), g)];
        for r in 0..mat.rows() {
            for c in 0..mat.cols() {
                let prev = out.get(offsets[m][row_block] + r, offsets[n][bi] + c).clone();
                out.set(
                    offsets[m][row_block] + r,
                    offsets[n][bi] + c,
                    prev + mat.get(r, c),
                );
            }
        }
    }
    Ok(out)
}

/// ⊕_W Y: degreewise direct sum over the base simplices, with operators
/// from the morphisms (δᵢ, e) and (σⱼ, e); the group action is forgotten.
pub fn sum_over_w(env: &REnv, y: &AbObj) -> Result<SAb> {
    let d = y.d;
    let mut blocks = Vec::new();
    let mut offsets = Vec::new();
    let mut groups = Vec::new();
    for n in 0..=d {
        let mut blk = Vec::new();
        let mut off = Vec::new();
        let mut ambient = 0usize;
        let mut rels: Vec<&IntMatrix> = Vec::new();
        for (t, (m, _)) in y.objects.iter().enumerate() {
            if *m == n {
                blk.push(t);
                off.push(ambient);
                ambient += y.values[t].ambient;
                rels.push(&y.values[t].rels);
            }
        }
        groups.push(FpGroup { ambient, rels: IntMatrix::block_diag(&rels) });
        blocks.push(blk);
        offsets.push(off);
    }
    let ambients: Vec<usize> = groups.iter().map(|gr| gr.ambient).collect();
    let e = env.group().e();
    let mut faces = vec![Vec::new()];
    for n in 1..=d {
        let mut row = Vec::new();
        for i in 0..=n {
            row.push(assemble(
                env,
                y,
                &blocks,
                &offsets,
                &ambients,
                n,
                &DeltaOp::coface(i, n)?,
                e,
            )?);
        }
        faces.push(row);
    }
    let mut degens = Vec::new();
    for n in 0..d {
        let mut row = Vec::new();
        for j in 0..=n {
            row.push(assemble(
                env,
                y,
                &blocks,
                &offsets,
                &ambients,
                n,
                &DeltaOp::codegeneracy(j, n)?,
                e,
            )?);
        }
        degens.push(row);
    }
    let sab = SAb { d, groups, faces, degens, blocks, offsets };
    sab.validate()?;
    Ok(sab)
}

/// C: collapse to the point base.  The value of C(Y) at degree n is
/// ⊕_{p ∈ P_n} Y(n,p), with all equivariant structure maps assembled
/// blockwise; the result is an abelian object over the point.
pub fn collapse_ab(env_p: &REnv, env_pt: &REnv, y: &AbObj) -> Result<AbObj> {
    let d = y.d;
    let sab = sum_over_w(env_p, y)?;
    let (objects, index) = base_objects(env_pt, d);
    let mut values = Vec::new();
    for (n, _) in &objects {
        values.push(sab.groups[*n].clone());
    }
    let ambients: Vec<usize> = sab.groups.iter().map(|gr| gr.ambient).collect();
    let mut maps = BTreeMap::new();
    for (t, (n, _)) in objects.iter().enumerate() {
        for m in 0..=d {
            for alpha in DeltaOp::all(m, *n) {
                for g in env_p.group().elements() {
                    maps.insert(
                        (t, alpha.clone(), g),
                        assemble(env_p, y, &sab.blocks, &sab.offsets, &ambients, *n, &alpha, g)?,
                    );
                }
            }
        }
    }
    let out = AbObj { d, objects, index, values, maps };
    out.validate(env_pt)?;
    Ok(out)
}
