//! Dense exact linear algebra over F_p: reduced row echelon form, kernel
//! bases, and matrix inversion. Row operations use the field context.

use crate::algebra::PrimeField;

#[derive(Clone, Debug)]
pub struct MatFp {
    pub rows: usize,
    pub cols: usize,
    data: Vec<u64>,
    field: PrimeField,
}

impl MatFp {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        MatFp {
            rows,
            cols,
            data: vec![0; rows * cols],
            field,
        }
    }

    pub fn from_rows(field: PrimeField, rows: Vec<Vec<u64>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c);
            data.extend(row);
        }
        MatFp {
            rows: r,
            cols: c,
            data,
            field,
        }
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        self.data[i * self.cols + j] = v;
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for k in 0..self.cols {
            self.data.swap(a * self.cols + k, b * self.cols + k);
        }
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let f = self.field;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| self.get(i, c) != 0) else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = f.inv(self.get(r, c));
            for k in c..self.cols {
                self.set(r, k, f.mul(self.get(r, k), inv));
            }
            for i in 0..self.rows {
                if i != r && self.get(i, c) != 0 {
                    let factor = self.get(i, c);
                    for k in c..self.cols {
                        let v = f.sub(self.get(i, k), f.mul(factor, self.get(r, k)));
                        self.set(i, k, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(mut self) -> usize {
        self.rref().len()
    }

    /// Basis of the right kernel {v : M v = 0}, one vector per free column.
    pub fn kernel_basis(mut self) -> Vec<Vec<u64>> {
        let f = self.field;
        let pivots = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if is_pivot[free] {
                continue;
            }
            let mut v = vec![0u64; self.cols];
            v[free] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(self.get(r, free));
            }
            basis.push(v);
        }
        basis
    }

    /// Inverse of a square matrix, or None when singular.
    pub fn inverse(&self) -> Option<Vec<Vec<u64>>> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let f = self.field;
        let mut aug = MatFp::zeros(f, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, n + i, 1);
        }
        let pivots = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        let inv = (0..n)
            .map(|i| (0..n).map(|j| aug.get(i, n + j)).collect())
            .collect();
        Some(inv)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field() -> PrimeField {
        PrimeField::new(32003).unwrap()
    }

    #[test]
    fn kernel_of_rank_one() {
        // rows (1,2,3) and (2,4,6): kernel has dimension 2
        let m = MatFp::from_rows(field(), vec![vec![1, 2, 3], vec![2, 4, 6]]);
        let basis = m.kernel_basis();
        assert_eq!(basis.len(), 2);
        let f = field();
        for v in basis {
            let dot = f.add(f.add(f.mul(1, v[0]), f.mul(2, v[1])), f.mul(3, v[2]));
            assert_eq!(dot, 0);
        }
    }

    #[test]
    fn invert_and_multiply() {
        let f = field();
        let m = MatFp::from_rows(f, vec![vec![1, 2], vec![3, 5]]);
        let inv = m.inverse().unwrap();
        // m * inv == identity
        for i in 0..2 {
            for (j, _) in inv.iter().enumerate() {
                let mut s = 0;
                for (k, row) in inv.iter().enumerate() {
                    s = f.add(s, f.mul(m.get(i, k), row[j]));
                }
                assert_eq!(s, (i == j) as u64);
            }
        }
        let singular = MatFp::from_rows(f, vec![vec![1, 2], vec![2, 4]]);
        assert!(singular.inverse().is_none());
    }
}
