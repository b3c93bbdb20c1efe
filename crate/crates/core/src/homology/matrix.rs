use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Sparse integer matrix stored by columns.
///
/// Boundary matrices have at most `2(n - 1)` nonzeros per column, so the
/// dense form of `∂₄` for a 12-element quandle would waste almost all of its
/// memory on zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    // each column sorted by row, no explicit zeros
    columns: Vec<Vec<(usize, i64)>>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, columns: vec![Vec::new(); cols] }
    }

    pub fn identity(n: usize) -> Self {
        IntMatrix { rows: n, cols: n, columns: (0..n).map(|i| vec![(i, 1)]).collect() }
    }

    /// Builds from unsorted `(row, value)` lists; duplicates are summed.
    pub fn from_columns(rows: usize, columns: Vec<Vec<(usize, i64)>>) -> Self {
        let cols = columns.len();
        let columns = columns
            .into_iter()
            .map(|mut c| {
                c.sort_unstable_by_key(|&(r, _)| r);
                let mut out: Vec<(usize, i64)> = Vec::with_capacity(c.len());
                for (r, v) in c {
                    assert!(r < rows, "row index {r} out of range");
                    match out.last_mut() {
                        Some(last) if last.0 == r => last.1 += v,
                        _ => out.push((r, v)),
                    }
                }
                out.retain(|&(_, v)| v != 0);
                out
            })
            .collect();
        IntMatrix { rows, cols, columns }
    }

    pub fn from_dense<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.as_ref().len());
        let mut columns = vec![Vec::new(); c];
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            assert_eq!(row.len(), c, "ragged dense matrix");
            for (j, &v) in row.iter().enumerate() {
                if v != 0 {
                    columns[j].push((i, v));
                }
            }
        }
        IntMatrix { rows: r, cols: c, columns }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn column(&self, j: usize) -> &[(usize, i64)] {
        &self.columns[j]
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.columns[j].binary_search_by_key(&i, |&(r, _)| r).map_or(0, |k| self.columns[j][k].1)
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut d = vec![vec![0; self.cols]; self.rows];
        for (j, col) in self.columns.iter().enumerate() {
            for &(i, v) in col {
                d[i][j] = v;
            }
        }
        d
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut columns = vec![Vec::new(); self.rows];
        for (j, col) in self.columns.iter().enumerate() {
            for &(i, v) in col {
                columns[i].push((j, v));
            }
        }
        IntMatrix { rows: self.cols, cols: self.rows, columns }
    }

    /// `self · other`.
    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let columns = other
            .columns
            .iter()
            .map(|col| {
                let mut acc: Vec<(usize, i64)> = Vec::new();
                for &(k, w) in col {
                    for &(i, v) in &self.columns[k] {
                        acc.push((i, v * w));
                    }
                }
                acc
            })
            .collect();
        IntMatrix::from_columns(self.rows, columns)
    }

    /// Transposed action on a row vector: `(vᵀ · self)_j = Σ_i v_i · self[i][j]`.
    pub fn left_apply(&self, v: &[i64]) -> Vec<i64> {
        assert_eq!(v.len(), self.rows);
        self.columns.iter().map(|col| col.iter().map(|&(i, a)| a * v[i]).sum()).collect()
    }

    pub fn to_big(&self) -> BigMatrix {
        let mut m = BigMatrix::zeros(self.rows, self.cols);
        for (j, col) in self.columns.iter().enumerate() {
            for &(i, v) in col {
                m.data[i][j] = BigInt::from(v);
            }
        }
        m
    }
}

/// Dense arbitrary-precision integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BigMatrix {
    rows: usize,
    cols: usize,
    pub(crate) data: Vec<Vec<BigInt>>,
}

impl BigMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        BigMatrix { rows, cols, data: vec![vec![BigInt::zero(); cols]; rows] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i][i] = BigInt::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i][j]
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i]
    }

    pub fn mul(&self, other: &BigMatrix) -> BigMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = BigMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[i][k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other.data[k][j];
                    if !b.is_zero() {
                        out.data[i][j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len());
        self.data.iter().map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum()).collect()
    }

    pub fn is_diagonal(&self) -> bool {
        self.data.iter().enumerate().all(|(i, row)| row.iter().enumerate().all(|(j, v)| i == j || v.is_zero()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_columns_merges_and_drops_zeros() {
        let m = IntMatrix::from_columns(3, vec![vec![(2, 1), (0, 4), (2, -1)], vec![]]);
        assert_eq!(m.column(0), &[(0, 4)]);
        assert_eq!(m.get(2, 0), 0);
        assert_eq!(m.nnz(), 1);
    }

    #[test]
    fn product_and_transpose_agree_with_dense() {
        let a = IntMatrix::from_dense(&[[1i64, 2, 0], [0, -1, 3]]);
        let b = IntMatrix::from_dense(&[[2i64, 0], [1, 1], [0, 5]]);
        assert_eq!(a.mul(&b).to_dense(), vec![vec![4, 2], vec![-1, 14]]);
        assert_eq!(a.transpose().to_dense(), vec![vec![1, 0], vec![2, -1], vec![0, 3]]);
        assert_eq!(a.left_apply(&[1, 2]), vec![1, 0, 6]);
        let big = a.to_big().mul(&b.to_big());
        assert_eq!(big.get(1, 1), &BigInt::from(14));
    }
}
