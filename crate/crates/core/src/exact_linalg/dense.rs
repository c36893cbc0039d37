use super::field::Field;

/// Row-major dense matrix, used for the small per-block computations.
#[derive(Clone, Debug, PartialEq)]
pub struct DenseMatrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

impl<E: Clone + PartialEq> DenseMatrix<E> {
    pub fn filled(rows: usize, cols: usize, value: E) -> Self {
        DenseMatrix {
            rows,
            cols,
            data: vec![value; rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &E {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: E) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[E] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn zero<F: Field<Elem = E>>(field: &F, rows: usize, cols: usize) -> Self {
        Self::filled(rows, cols, field.zero())
    }

    pub fn identity<F: Field<Elem = E>>(field: &F, n: usize) -> Self {
        let mut m = Self::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn mul<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows);
        let mut out = Self::zero(field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if field.is_zero(a) {
                    continue;
                }
                let base = i * other.cols;
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !field.is_zero(b) {
                        field.add_mul_assign(&mut out.data[base + j], a, b);
                    }
                }
            }
        }
        out
    }

    pub fn add<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        DenseMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| field.add(a, b))
                .collect(),
        }
    }

    pub fn is_zero<F: Field<Elem = E>>(&self, field: &F) -> bool {
        self.data.iter().all(|v| field.is_zero(v))
    }

    /// Reduced row-echelon form (in place) and the pivot columns.
    pub fn rref_in_place<F: Field<Elem = E>>(&mut self, field: &F) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !field.is_zero(self.get(i, c))) else {
                continue;
            };
            if p != r {
                for j in 0..self.cols {
                    self.data.swap(p * self.cols + j, r * self.cols + j);
                }
            }
            let inv = field.inv(self.get(r, c));
            for j in c..self.cols {
                let v = field.mul(&inv, self.get(r, j));
                self.set(r, j, v);
            }
            let pivot_row: Vec<E> = self.row(r).to_vec();
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let factor = self.get(i, c).clone();
                if field.is_zero(&factor) {
                    continue;
                }
                let minus = field.neg(&factor);
                for j in c..self.cols {
                    if !field.is_zero(&pivot_row[j]) {
                        let mut v = self.get(i, j).clone();
                        field.add_mul_assign(&mut v, &minus, &pivot_row[j]);
                        self.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank<F: Field<Elem = E>>(&self, field: &F) -> usize {
        self.clone().rref_in_place(field).len()
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j).clone());
            }
        }
        DenseMatrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    /// Reduced echelon basis of the column space, each vector as a dense row.
    pub fn column_space_basis<F: Field<Elem = E>>(&self, field: &F) -> Vec<Vec<E>> {
        let mut t = self.transpose();
        let rank = t.rref_in_place(field).len();
        (0..rank).map(|i| t.row(i).to_vec()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_linalg::field::GaussianRationals;

    #[test]
    fn rank_and_column_space() {
        let f = GaussianRationals;
        let mut m = DenseMatrix::zero(&f, 3, 3);
        m.set(0, 0, f.one());
        m.set(1, 0, f.from_i64(2));
        m.set(0, 2, f.from_i64(3));
        m.set(1, 2, f.from_i64(6));
        assert_eq!(m.rank(&f), 1);
        let basis = m.column_space_basis(&f);
        assert_eq!(basis, vec![vec![f.one(), f.from_i64(2), f.zero()]]);
        let id = DenseMatrix::identity(&f, 3);
        assert_eq!(m.mul(&f, &id), m);
        assert_eq!(id.rank(&f), 3);
    }
}
