//! The simplex category Δ: weakly monotone maps [m] → [n].
//!
//! An operator is stored as the map itself, which is its own canonical
//! form: the epi-mono factorisation (cofaces with increasing indices,
//! codegeneracies with decreasing indices) is recovered on demand, and
//! composition of canonical forms is function composition.

use crate::error::{Error, Result};
use std::fmt;

/// A morphism [m] → [n] in Δ: `vals[i] = α(i)`, weakly increasing,
/// with values in 0..=cod.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DeltaOp {
    vals: Vec<usize>,
    cod: usize,
}

impl DeltaOp {
    pub fn new(vals: Vec<usize>, cod: usize) -> Result<Self> {
        if vals.is_empty() {
            return Err(Error::Invalid("Δ has no empty objects".into()));
        }
        for w in vals.windows(2) {
            if w[0] > w[1] {
                return Err(Error::Invalid("operator values must be monotone".into()));
            }
        }
        if *vals.last().unwrap() > cod {
            return Err(Error::Invalid("operator value out of range".into()));
        }
        Ok(DeltaOp { vals, cod })
    }

    pub fn identity(n: usize) -> Self {
        DeltaOp { vals: (0..=n).collect(), cod: n }
    }

    /// Coface δ_i : [n−1] → [n] (skips i).
    pub fn coface(i: usize, n: usize) -> Result<Self> {
        if n == 0 || i > n {
            return Err(Error::Dimension(format!("coface δ_{i} into [{n}]")));
        }
        Ok(DeltaOp { vals: (0..n).map(|k| if k < i { k } else { k + 1 }).collect(), cod: n })
    }

    /// Codegeneracy σ_j : [n+1] → [n] (repeats j).
    pub fn codegeneracy(j: usize, n: usize) -> Result<Self> {
        if j > n {
            return Err(Error::Dimension(format!("codegeneracy σ_{j} onto [{n}]")));
        }
        Ok(DeltaOp { vals: (0..=n + 1).map(|k| if k <= j { k } else { k - 1 }).collect(), cod: n })
    }

    pub fn dom(&self) -> usize {
        self.vals.len() - 1
    }

    pub fn cod(&self) -> usize {
        self.cod
    }

    pub fn apply(&self, k: usize) -> usize {
        self.vals[k]
    }

    pub fn values(&self) -> &[usize] {
        &self.vals
    }

    /// self ∘ other (other first).
    pub fn compose(&self, other: &DeltaOp) -> Result<Self> {
        if other.cod != self.dom() {
            return Err(Error::Dimension(format!(
                "cannot compose [{}]→[{}] after [{}]→[{}]",
                self.dom(),
                self.cod,
                other.dom(),
                other.cod
            )));
        }
        Ok(DeltaOp { vals: other.vals.iter().map(|&v| self.vals[v]).collect(), cod: self.cod })
    }

    pub fn is_identity(&self) -> bool {
        self.cod == self.dom() && self.vals.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn is_injective(&self) -> bool {
        self.vals.windows(2).all(|w| w[0] < w[1])
    }

    pub fn is_surjective(&self) -> bool {
        let mut next = 0usize;
        for &v in &self.vals {
            if v == next {
                next += 1;
            }
        }
        next == self.cod + 1
    }

    /// Missing values (the coface indices), in increasing order.
    pub fn missed_values(&self) -> Vec<usize> {
        let mut hit = vec![false; self.cod + 1];
        for &v in &self.vals {
            hit[v] = true;
        }
        (0..=self.cod).filter(|&i| !hit[i]).collect()
    }

    /// Positions j with α(j) = α(j+1) (the codegeneracy indices),
    /// in increasing order.
    pub fn duplicate_positions(&self) -> Vec<usize> {
        (0..self.dom()).filter(|&j| self.vals[j] == self.vals[j + 1]).collect()
    }

    /// Epi-mono factorisation: self = mono ∘ epi.
    pub fn epi_mono(&self) -> (DeltaOp, DeltaOp) {
        let image: Vec<usize> = {
            let mut v = self.vals.clone();
            v.dedup();
            v
        };
        let r = image.len() - 1;
        let mono = DeltaOp { vals: image.clone(), cod: self.cod };
        let epi = DeltaOp {
            vals: self.vals.iter().map(|&v| image.iter().position(|&x| x == v).unwrap()).collect(),
            cod: r,
        };
        (mono, epi)
    }

    /// All monotone maps [m] → [n], in lexicographic order.
    pub fn all(m: usize, n: usize) -> Vec<DeltaOp> {
        let mut out = Vec::new();
        let mut cur = vec![0usize; m + 1];
        loop {
            out.push(DeltaOp { vals: cur.clone(), cod: n });
            // next monotone tuple
            let mut k = m + 1;
            loop {
                if k == 0 {
                    return out;
                }
                k -= 1;
                if cur[k] < n {
                    cur[k] += 1;
                    for t in k + 1..=m {
                        cur[t] = cur[k];
                    }
                    break;
                }
            }
        }
    }

    /// All surjective monotone maps [n] ↠ [m].
    pub fn all_surjections(n: usize, m: usize) -> Vec<DeltaOp> {
        if m > n {
            return Vec::new();
        }
        Self::all(n, m).into_iter().filter(|o| o.is_surjective()).collect()
    }

    /// Canonical degeneracy word for a surjection: indices j with
    /// α(j) = α(j+1), listed in decreasing order (the word s_{j1}…s_{jl}
    /// with j1 > … > jl).
    pub fn degeneracy_word(&self) -> Vec<usize> {
        debug_assert!(self.is_surjective());
        let mut w = self.duplicate_positions();
        w.reverse();
        w
    }

    /// Surjection [n] ↠ [m] with the given canonical degeneracy word
    /// (decreasing indices), built as σ_{jl} ∘ … ∘ σ_{j1}.
    pub fn from_degeneracy_word(word: &[usize], dom: usize) -> Result<DeltaOp> {
        let mut op = DeltaOp::identity(dom);
        let mut cur = dom;
        for &j in word.iter() {
            if cur == 0 || j > cur - 1 {
                return Err(Error::Dimension(format!("degeneracy index {j} out of range")));
            }
            let sj = DeltaOp::codegeneracy(j, cur - 1)?;
            op = sj.compose(&op)?;
            cur -= 1;
        }
        Ok(op)
    }
}

impl fmt::Display for DeltaOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vs: Vec<String> = self.vals.iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]>{}", vs.join(","), self.cod)
    }
}

/// Number of monotone injections [k] ↪ [n]: C(n+1, k+1).
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: u128 = 1;
    for i in 0..k {
        r = r * (n - i) as u128 / (i + 1) as u128;
    }
    r as usize
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn count_monotone_maps() {
        // |Δ([m],[n])| = C(m+n+1, m+1)
        for m in 0..3 {
            for n in 0..4 {
                assert_eq!(DeltaOp::all(m, n).len(), binomial(m + n + 1, m + 1));
            }
        }
    }

    #[test]
    fn epi_mono_roundtrip() {
        for op in DeltaOp::all(3, 2) {
            let (mono, epi) = op.epi_mono();
            assert!(mono.is_injective());
            assert!(epi.is_surjective());
            assert_eq!(mono.compose(&epi).unwrap(), op);
        }
    }

    #[test]
    fn simplicial_identity_on_operators() {
        // δ_j ∘ δ_i = δ_i ∘ δ_{j-1} for i < j (as maps into [n])
        let n = 3;
        for j in 0..=n {
            for i in 0..j {
                let a = DeltaOp::coface(j, n).unwrap().compose(&DeltaOp::coface(i, n - 1).unwrap());
                let b = DeltaOp::coface(i, n)
                    .unwrap()
                    .compose(&DeltaOp::coface(j - 1, n - 1).unwrap());
                assert_eq!(a.unwrap(), b.unwrap());
            }
        }
    }

    #[test]
    fn degeneracy_word_roundtrip() {
        for op in DeltaOp::all_surjections(4, 2) {
            let w = op.degeneracy_word();
            assert!(w.windows(2).all(|p| p[0] > p[1]));
            assert_eq!(DeltaOp::from_degeneracy_word(&w, 4).unwrap(), op);
        }
    }
}
