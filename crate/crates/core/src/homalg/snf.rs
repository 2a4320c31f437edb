//! Smith normal form over the integers, with full transform bookkeeping.

use super::matrix::IntMatrix;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// Smith normal form of a matrix `a`: `a = u * d * v` with `u`, `v`
/// unimodular and `d` diagonal with successive divisibility. The inverse
/// transforms are tracked as well, so `d = p * a * q` with `p = u⁻¹`,
/// `q = v⁻¹`.
#[derive(Clone, Debug)]
pub struct Snf {
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
    pub p: IntMatrix,
    pub q: IntMatrix,
    pub rank: usize,
}

impl Snf {
    /// Diagonal entries that are nonzero, in divisibility order.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        (0..self.rank).map(|i| self.d.get(i, i).clone()).collect()
    }
}

struct Work {
    m: IntMatrix,
    u: IntMatrix,
    p: IntMatrix,
    v: IntMatrix,
    q: IntMatrix,
}

impl Work {
    // m' = L m with L an elementary row op; u ← u L⁻¹, p ← L p.
    fn swap_rows(&mut self, a: usize, b: usize) {
        self.m.swap_rows(a, b);
        self.u.swap_cols(a, b);
        self.p.swap_rows(a, b);
    }
    fn add_row(&mut self, src: usize, dst: usize, k: &BigInt) {
        self.m.add_row(src, dst, k);
        let nk = -k;
        self.u.add_col(dst, src, &nk);
        self.p.add_row(src, dst, k);
    }
    fn negate_row(&mut self, i: usize) {
        self.m.negate_row(i);
        self.u.negate_col(i);
        self.p.negate_row(i);
    }
    // m' = m R with R an elementary column op; v ← R⁻¹ v, q ← q R.
    fn swap_cols(&mut self, a: usize, b: usize) {
        self.m.swap_cols(a, b);
        self.v.swap_rows(a, b);
        self.q.swap_cols(a, b);
    }
    fn add_col(&mut self, src: usize, dst: usize, k: &BigInt) {
        self.m.add_col(src, dst, k);
        let nk = -k;
        self.v.add_row(dst, src, &nk);
        self.q.add_col(src, dst, k);
    }
}

/// Compute the Smith normal form. Pivots are chosen with minimal absolute
/// value to limit entry growth.
pub fn snf(a: &IntMatrix) -> Snf {
    let rows = a.rows();
    let cols = a.cols();
    let mut w = Work {
        m: a.clone(),
        u: IntMatrix::identity(rows),
        p: IntMatrix::identity(rows),
        v: IntMatrix::identity(cols),
        q: IntMatrix::identity(cols),
    };
    let mut t = 0usize;
    while t < rows && t < cols {
        // minimal-absolute-value pivot in the trailing submatrix
        let mut pivot: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if !w.m.get(i, j).is_zero() {
                    match pivot {
                        None => pivot = Some((i, j)),
                        Some((pi, pj)) => {
                            if w.m.get(i, j).abs() < w.m.get(pi, pj).abs() {
                                pivot = Some((i, j));
                            }
                        }
                    }
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);
        'reduce: loop {
            // clear column t
            for i in t + 1..rows {
                if !w.m.get(i, t).is_zero() {
                    let k = -(w.m.get(i, t) / w.m.get(t, t));
                    w.add_row(t, i, &k);
                    if !w.m.get(i, t).is_zero() {
                        // remainder is strictly smaller; make it the pivot
                        w.swap_rows(t, i);
                        continue 'reduce;
                    }
                }
            }
            // clear row t
            for j in t + 1..cols {
                if !w.m.get(t, j).is_zero() {
                    let k = -(w.m.get(t, j) / w.m.get(t, t));
                    w.add_col(t, j, &k);
                    if !w.m.get(t, j).is_zero() {
                        w.swap_cols(t, j);
                        continue 'reduce;
                    }
                }
            }
            // enforce divisibility of the pivot into the trailing block
            for i in t + 1..rows {
                for j in t + 1..cols {
                    if !(w.m.get(i, j) % w.m.get(t, t)).is_zero() {
                        let one = BigInt::from(1);
                        w.add_row(i, t, &one);
                        continue 'reduce;
                    }
                }
            }
            break;
        }
        if w.m.get(t, t).is_negative() {
            w.negate_row(t);
        }
        t += 1;
    }
    let rank = t;
    Snf { d: w.m, u: w.u, v: w.v, p: w.p, q: w.q, rank }
}

/// Columns generating the integer kernel of `a`.
pub fn kernel_basis(a: &IntMatrix) -> IntMatrix {
    let s = snf(a);
    let cols = a.cols();
    let free: Vec<Vec<BigInt>> = (s.rank..cols).map(|j| s.q.column(j)).collect();
    IntMatrix::from_columns(cols, &free)
}

/// Solve `a x = b` exactly over the integers, if possible.
pub fn solve(a: &IntMatrix, b: &[BigInt]) -> Option<Vec<BigInt>> {
    let s = snf(a);
    let c = s.p.mul_vec(b);
    let mut y = vec![BigInt::zero(); a.cols()];
    for i in 0..a.rows() {
        if i < s.rank {
            let d = s.d.get(i, i);
            if (&c[i] % d).is_zero() {
                y[i] = &c[i] / d;
            } else {
                return None;
            }
        } else if !c[i].is_zero() {
            return None;
        }
    }
    Some(s.q.mul_vec(&y))
}

/// Solve `a x = b` columnwise: returns `x` with `a x = b`.
pub fn solve_mat(a: &IntMatrix, b: &IntMatrix) -> Option<IntMatrix> {
    let s = snf(a);
    let mut out = IntMatrix::zeros(a.cols(), b.cols());
    for j in 0..b.cols() {
        let c = s.p.mul_vec(&b.column(j));
        let mut y = vec![BigInt::zero(); a.cols()];
        for i in 0..a.rows() {
            if i < s.rank {
                let d = s.d.get(i, i);
                if (&c[i] % d).is_zero() {
                    y[i] = &c[i] / d;
                } else {
                    return None;
                }
            } else if !c[i].is_zero() {
                return None;
            }
        }
        out.set_column(j, &s.q.mul_vec(&y));
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(a: &IntMatrix) -> Snf {
        let s = snf(a);
        // reconstruction and unimodularity
        assert_eq!(&s.u.mul(&s.d).mul(&s.v), a, "a = u d v");
        assert_eq!(s.p.mul(a).mul(&s.q), s.d, "d = p a q");
        assert!(s.u.is_unimodular());
        assert!(s.v.is_unimodular());
        // diagonal with divisibility chain
        for i in 0..s.d.rows() {
            for j in 0..s.d.cols() {
                if i != j {
                    assert!(s.d.get(i, j).is_zero());
                }
            }
        }
        for i in 1..s.rank {
            assert!((s.d.get(i, i) % s.d.get(i - 1, i - 1)).is_zero());
        }
        s
    }

    #[test]
    fn single_entry() {
        let s = check(&IntMatrix::from_rows(&[vec![2]]));
        assert_eq!(s.invariant_factors(), vec![BigInt::from(2)]);
    }

    #[test]
    fn rank_one() {
        let s = check(&IntMatrix::from_rows(&[vec![1, 0], vec![0, 0]]));
        assert_eq!(s.invariant_factors(), vec![BigInt::from(1)]);
    }

    #[test]
    fn two_by_two() {
        // gcd of entries is 2 and |det| = 8, so the factors are 2 and 4
        let s = check(&IntMatrix::from_rows(&[vec![2, 4], vec![6, 8]]));
        assert_eq!(s.invariant_factors(), vec![BigInt::from(2), BigInt::from(4)]);
    }

    #[test]
    fn kernel_and_solve() {
        let a = IntMatrix::from_rows(&[vec![1, 2, 3], vec![2, 4, 6]]);
        let k = kernel_basis(&a);
        assert_eq!(k.cols(), 2);
        assert!(a.mul(&k).is_zero());
        let b = vec![BigInt::from(6), BigInt::from(12)];
        let x = solve(&a, &b).unwrap();
        assert_eq!(a.mul_vec(&x), b);
        assert!(solve(&a, &[BigInt::from(1), BigInt::from(1)]).is_none());
    }
}
