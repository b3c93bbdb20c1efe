//! Smith normal form over the integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::{BigMatrix, IntMatrix};

/// `U · M · V = D` with `U`, `V` unimodular and `D` diagonal, `d₁ | d₂ | …`.
#[derive(Clone, Debug)]
pub struct SmithForm {
    /// The `min(rows, cols)` diagonal entries of `D`, nonnegative, nonzero
    /// ones first.
    pub diagonal: Vec<BigInt>,
    /// Row transform, `rows × rows`.
    pub left: BigMatrix,
    /// Column transform, `cols × cols`.
    pub right: BigMatrix,
    rows: usize,
    cols: usize,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.diagonal.iter().filter(|d| !d.is_zero()).count()
    }

    pub fn d_matrix(&self) -> BigMatrix {
        let mut d = BigMatrix::zeros(self.rows, self.cols);
        for (i, v) in self.diagonal.iter().enumerate() {
            d.data[i][i] = v.clone();
        }
        d
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let mut w = Work::new(m, true);
    w.run();
    let diagonal = w.diagonal();
    SmithForm { diagonal, left: w.u.expect("tracked"), right: w.v.expect("tracked"), rows: m.rows(), cols: m.cols() }
}

/// Nonzero invariant factors of `m`, skipping the transforms.
pub fn invariant_factors(m: &IntMatrix) -> Vec<BigInt> {
    let mut w = Work::new(m, false);
    w.run();
    w.diagonal().into_iter().filter(|d| !d.is_zero()).collect()
}

struct Work {
    a: Vec<Vec<BigInt>>,
    u: Option<BigMatrix>,
    v: Option<BigMatrix>,
    rows: usize,
    cols: usize,
}

impl Work {
    fn new(m: &IntMatrix, track: bool) -> Self {
        Work {
            a: m.to_big().data,
            u: track.then(|| BigMatrix::identity(m.rows())),
            v: track.then(|| BigMatrix::identity(m.cols())),
            rows: m.rows(),
            cols: m.cols(),
        }
    }

    fn diagonal(&self) -> Vec<BigInt> {
        (0..self.rows.min(self.cols)).map(|i| self.a[i][i].clone()).collect()
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i != j {
            self.a.swap(i, j);
            if let Some(u) = &mut self.u {
                u.data.swap(i, j);
            }
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i != j {
            for row in &mut self.a {
                row.swap(i, j);
            }
            if let Some(v) = &mut self.v {
                for row in &mut v.data {
                    row.swap(i, j);
                }
            }
        }
    }

    /// row[dst] += k · row[src]
    fn add_row(&mut self, dst: usize, src: usize, k: &BigInt, from_col: usize) {
        let (d, s) = pair_mut(&mut self.a, dst, src);
        for j in from_col..d.len() {
            if !s[j].is_zero() {
                d[j] += k * &s[j];
            }
        }
        if let Some(u) = &mut self.u {
            let (d, s) = pair_mut(&mut u.data, dst, src);
            for (x, y) in d.iter_mut().zip(s.iter()) {
                if !y.is_zero() {
                    *x += k * y;
                }
            }
        }
    }

    /// col[dst] += k · col[src]
    fn add_col(&mut self, dst: usize, src: usize, k: &BigInt, from_row: usize) {
        for row in &mut self.a[from_row..] {
            if !row[src].is_zero() {
                let t = k * &row[src];
                row[dst] += t;
            }
        }
        if let Some(v) = &mut self.v {
            for row in &mut v.data {
                if !row[src].is_zero() {
                    let t = k * &row[src];
                    row[dst] += t;
                }
            }
        }
    }

    fn negate_row(&mut self, i: usize) {
        for x in &mut self.a[i] {
            *x = -&*x;
        }
        if let Some(u) = &mut self.u {
            for x in &mut u.data[i] {
                *x = -&*x;
            }
        }
    }

    fn smallest_in(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize, BigInt)> = None;
        for i in t..self.rows {
            for j in t..self.cols {
                let v = &self.a[i][j];
                if v.is_zero() {
                    continue;
                }
                let abs = v.abs();
                if best.as_ref().is_none_or(|(_, _, b)| abs < *b) {
                    let one = abs.is_one();
                    best = Some((i, j, abs));
                    if one {
                        return best.map(|(i, j, _)| (i, j));
                    }
                }
            }
        }
        best.map(|(i, j, _)| (i, j))
    }

    fn run(&mut self) {
        for t in 0..self.rows.min(self.cols) {
            loop {
                let Some((pi, pj)) = self.smallest_in(t) else {
                    return;
                };
                self.swap_rows(t, pi);
                self.swap_cols(t, pj);
                let mut clean = true;
                for i in t + 1..self.rows {
                    if self.a[i][t].is_zero() {
                        continue;
                    }
                    let q = -self.a[i][t].div_floor(&self.a[t][t]);
                    self.add_row(i, t, &q, t);
                    if !self.a[i][t].is_zero() {
                        clean = false;
                    }
                }
                for j in t + 1..self.cols {
                    if self.a[t][j].is_zero() {
                        continue;
                    }
                    let q = -self.a[t][j].div_floor(&self.a[t][t]);
                    self.add_col(j, t, &q, t);
                    if !self.a[t][j].is_zero() {
                        clean = false;
                    }
                }
                if !clean {
                    continue;
                }
                let pivot = self.a[t][t].clone();
                let bad_row =
                    (t + 1..self.rows).find(|&i| (t + 1..self.cols).any(|j| !self.a[i][j].is_multiple_of(&pivot)));
                match bad_row {
                    Some(i) => self.add_row(t, i, &BigInt::one(), t),
                    None => break,
                }
            }
            if self.a[t][t].is_negative() {
                self.negate_row(t);
            }
        }
    }
}

fn pair_mut<T>(v: &mut [T], dst: usize, src: usize) -> (&mut T, &T) {
    assert_ne!(dst, src);
    if dst < src {
        let (a, b) = v.split_at_mut(src);
        (&mut a[dst], &b[0])
    } else {
        let (a, b) = v.split_at_mut(dst);
        (&mut b[0], &a[src])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(m: &IntMatrix) -> SmithForm {
        let s = smith_normal_form(m);
        let d = s.left.mul(&m.to_big()).mul(&s.right);
        assert!(d.is_diagonal());
        assert_eq!(d, s.d_matrix());
        for w in s.diagonal.windows(2) {
            assert!(w[1].is_multiple_of(&w[0]), "{} does not divide {}", w[0], w[1]);
        }
        s
    }

    #[test]
    fn two_by_two_example() {
        let s = check(&IntMatrix::from_dense(&[[2i64, 4], [6, 8]]));
        assert_eq!(s.diagonal, vec![BigInt::from(2), BigInt::from(4)]);
    }

    #[test]
    fn zero_matrix_keeps_identity_transforms() {
        let s = check(&IntMatrix::zeros(2, 3));
        assert!(s.diagonal.iter().all(Zero::is_zero));
        assert_eq!(s.left, BigMatrix::identity(2));
        assert_eq!(s.right, BigMatrix::identity(3));
    }

    #[test]
    fn identity_is_fixed() {
        let s = check(&IntMatrix::identity(3));
        assert_eq!(s.diagonal, vec![BigInt::one(); 3]);
    }

    #[test]
    fn classic_torsion_example() {
        // coker ≅ Z2 ⊕ Z6 ⊕ Z12 in the standard textbook example
        let m = IntMatrix::from_dense(&[[2i64, 4, 4], [-6, 6, 12], [10, -4, -16]]);
        let s = check(&m);
        assert_eq!(s.diagonal, vec![BigInt::from(2), BigInt::from(6), BigInt::from(12)]);
        assert_eq!(invariant_factors(&m), s.diagonal);
    }

    #[test]
    fn rectangular_and_rank_deficient() {
        let m = IntMatrix::from_dense(&[[1i64, 2, 3, 4], [2, 4, 6, 8], [1, 0, 1, 0]]);
        let s = check(&m);
        assert_eq!(s.rank(), 2);
        let m = m.transpose();
        assert_eq!(check(&m).rank(), 2);
    }
}
