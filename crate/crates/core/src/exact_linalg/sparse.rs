use super::field::Field;

/// Sparse vector: `(index, value)` pairs sorted by index, no stored zeros.
pub type SparseVec<E> = Vec<(usize, E)>;

/// Sums duplicate indices and drops zeros. Input need not be sorted.
pub fn normalize<F: Field>(field: &F, mut terms: Vec<(usize, F::Elem)>) -> SparseVec<F::Elem> {
    terms.sort_unstable_by_key(|t| t.0);
    let mut out: SparseVec<F::Elem> = Vec::with_capacity(terms.len());
    for (i, v) in terms {
        match out.last_mut() {
            Some(last) if last.0 == i => last.1 = field.add(&last.1, &v),
            _ => out.push((i, v)),
        }
    }
    out.retain(|(_, v)| !field.is_zero(v));
    out
}

/// `x + c·y` for sorted sparse vectors.
pub fn axpy<F: Field>(
    field: &F,
    x: &[(usize, F::Elem)],
    c: &F::Elem,
    y: &[(usize, F::Elem)],
) -> SparseVec<F::Elem> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let take_x = j == y.len() || (i < x.len() && x[i].0 < y[j].0);
        let take_y = i == x.len() || (j < y.len() && y[j].0 < x[i].0);
        if take_x {
            out.push(x[i].clone());
            i += 1;
        } else if take_y {
            out.push((y[j].0, field.mul(c, &y[j].1)));
            j += 1;
        } else {
            let mut v = x[i].1.clone();
            field.add_mul_assign(&mut v, c, &y[j].1);
            if !field.is_zero(&v) {
                out.push((x[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub fn scale<F: Field>(field: &F, c: &F::Elem, x: &[(usize, F::Elem)]) -> SparseVec<F::Elem> {
    if field.is_zero(c) {
        return Vec::new();
    }
    x.iter().map(|(i, v)| (*i, field.mul(c, v))).collect()
}

/// Value at `index`, if nonzero.
pub fn get<E>(x: &[(usize, E)], index: usize) -> Option<&E> {
    x.binary_search_by_key(&index, |t| t.0)
        .ok()
        .map(|pos| &x[pos].1)
}

/// Sparse matrix in compressed row form.
#[derive(Clone, Debug, PartialEq)]
pub struct SparseMatrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<SparseVec<E>>,
}

impl<E: Clone + PartialEq> SparseMatrix<E> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            cols,
            data: vec![Vec::new(); rows],
        }
    }

    /// Rows must be sorted, zero-free and within `cols`.
    pub fn from_rows(cols: usize, data: Vec<SparseVec<E>>) -> Self {
        debug_assert!(data
            .iter()
            .all(|r| r.windows(2).all(|w| w[0].0 < w[1].0) && r.iter().all(|t| t.0 < cols)));
        SparseMatrix {
            rows: data.len(),
            cols,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[(usize, E)] {
        &self.data[i]
    }

    pub fn row_data(&self) -> &[SparseVec<E>] {
        &self.data
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn get(&self, i: usize, j: usize) -> Option<&E> {
        get(&self.data[i], j)
    }

    /// True if every row and every column holds exactly one nonzero.
    pub fn is_monomial(&self) -> bool {
        if self.rows != self.cols || self.data.iter().any(|r| r.len() != 1) {
            return false;
        }
        let mut seen = vec![false; self.cols];
        self.data.iter().all(|r| !std::mem::replace(&mut seen[r[0].0], true))
    }

    pub fn transpose(&self) -> Self {
        let mut data = vec![Vec::new(); self.cols];
        for (i, row) in self.data.iter().enumerate() {
            for (j, v) in row {
                data[*j].push((i, v.clone()));
            }
        }
        SparseMatrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    /// Row-major flattening into a vector of length `rows * cols`.
    pub fn to_vector(&self) -> SparseVec<E> {
        let mut out = Vec::with_capacity(self.nnz());
        for (i, row) in self.data.iter().enumerate() {
            out.extend(row.iter().map(|(j, v)| (i * self.cols + j, v.clone())));
        }
        out
    }

    pub fn from_vector(rows: usize, cols: usize, v: &[(usize, E)]) -> Self {
        let mut data = vec![Vec::new(); rows];
        for (idx, val) in v {
            data[idx / cols].push((idx % cols, val.clone()));
        }
        SparseMatrix { rows, cols, data }
    }
}

impl<E: Clone + PartialEq> SparseMatrix<E> {
    pub fn identity<F: Field<Elem = E>>(field: &F, n: usize) -> Self {
        SparseMatrix {
            rows: n,
            cols: n,
            data: (0..n).map(|i| vec![(i, field.one())]).collect(),
        }
    }

    pub fn scaled<F: Field<Elem = E>>(&self, field: &F, c: &E) -> Self {
        SparseMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|r| scale(field, c, r)).collect(),
        }
    }

    pub fn add<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let one = field.one();
        SparseMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| axpy(field, a, &one, b))
                .collect(),
        }
    }

    pub fn sub<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        let minus = field.neg(&field.one());
        SparseMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| axpy(field, a, &minus, b))
                .collect(),
        }
    }

    pub fn mul<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let data = self
            .data
            .iter()
            .map(|row| {
                let mut terms = Vec::new();
                for (k, a) in row {
                    for (j, b) in &other.data[*k] {
                        terms.push((*j, field.mul(a, b)));
                    }
                }
                normalize(field, terms)
            })
            .collect();
        SparseMatrix {
            rows: self.rows,
            cols: other.cols,
            data,
        }
    }

    pub fn apply<F: Field<Elem = E>>(&self, field: &F, v: &[(usize, E)]) -> SparseVec<E> {
        // column-oriented: y = Σ_j v_j · column_j
        let t = self.transpose();
        let mut terms = Vec::new();
        for (j, x) in v {
            for (i, a) in &t.data[*j] {
                terms.push((*i, field.mul(a, x)));
            }
        }
        normalize(field, terms)
    }

    pub fn trace<F: Field<Elem = E>>(&self, field: &F) -> E {
        let mut acc = field.zero();
        for i in 0..self.rows.min(self.cols) {
            if let Some(v) = self.get(i, i) {
                acc = field.add(&acc, v);
            }
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Vec::is_empty)
    }
}
