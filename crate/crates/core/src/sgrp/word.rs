//! Reduced words in a free group whose letters are simplices.

use crate::sset::Simplex;

/// A reduced word: letters with exponents ±1, adjacent inverse pairs
/// cancelled.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<(Simplex, i32)>,
}

impl Word {
    pub fn identity() -> Word {
        Word { letters: Vec::new() }
    }

    pub fn letter(x: Simplex, exp: i32) -> Word {
        assert!(exp == 1 || exp == -1);
        Word { letters: vec![(x, exp)] }
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[(Simplex, i32)] {
        &self.letters
    }

    pub fn mul(&self, other: &Word) -> Word {
        let mut out = self.letters.clone();
        for l in &other.letters {
            if let Some(last) = out.last() {
                if last.0 == l.0 && last.1 == -l.1 {
                    out.pop();
                    continue;
                }
            }
            out.push(l.clone());
        }
        Word { letters: out }
    }

    pub fn inv(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().map(|(x, e)| (x.clone(), -e)).collect(),
        }
    }

    pub fn pow(&self, n: i32) -> Word {
        let base = if n < 0 { self.inv() } else { self.clone() };
        let mut out = Word::identity();
        for _ in 0..n.abs() {
            out = out.mul(&base);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sset::Simplex;

    #[test]
    fn reduction_and_inverses() {
        let a = Word::letter(Simplex::gen(0, 1), 1);
        let b = Word::letter(Simplex::gen(1, 1), 1);
        let w = a.mul(&b).mul(&b.inv()).mul(&a);
        assert_eq!(w, a.pow(2));
        assert!(w.mul(&w.inv()).is_identity());
        assert_eq!(a.pow(-2), a.inv().mul(&a.inv()));
    }
}
