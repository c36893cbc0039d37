use std::collections::HashMap;

use super::field::Field;
use super::sparse::{axpy, get, normalize, scale, SparseMatrix, SparseVec};
use super::LinalgError;

/// A subspace of `F^D` held as its reduced row-echelon basis.
///
/// Every basis row has a leading 1 at its pivot and zeros in all other pivot
/// columns, so two equal subspaces always carry identical bases.
#[derive(Clone, Debug)]
pub struct Subspace<F: Field> {
    field: F,
    ambient: usize,
    rows: Vec<SparseVec<F::Elem>>,
    pivot_row: HashMap<usize, usize>,
    /// Rows that may hold a nonzero in a given non-pivot column. Entries can
    /// be stale or repeated; they are confirmed before use.
    col_rows: HashMap<usize, Vec<usize>>,
}

impl<F: Field> Subspace<F> {
    pub fn zero(field: F, ambient: usize) -> Self {
        Subspace {
            field,
            ambient,
            rows: Vec::new(),
            pivot_row: HashMap::new(),
            col_rows: HashMap::new(),
        }
    }

    pub fn whole(field: F, ambient: usize) -> Self {
        let rows = (0..ambient).map(|i| vec![(i, field.one())]).collect();
        Self::from_rref_rows(field, ambient, rows)
    }

    pub fn from_vectors<'a, I>(field: F, ambient: usize, vectors: I) -> Self
    where
        I: IntoIterator<Item = &'a SparseVec<F::Elem>>,
        F::Elem: 'a,
    {
        let mut s = Self::zero(field, ambient);
        for v in vectors {
            s.insert(v);
        }
        s
    }

    /// Wraps rows that are already in reduced echelon form.
    pub(crate) fn from_rref_rows(field: F, ambient: usize, rows: Vec<SparseVec<F::Elem>>) -> Self {
        let pivot_row: HashMap<usize, usize> =
            rows.iter().enumerate().map(|(i, r)| (r[0].0, i)).collect();
        debug_assert_eq!(pivot_row.len(), rows.len());
        debug_assert!(rows.iter().all(|r| field.is_one(&r[0].1)));
        debug_assert!(rows.iter().all(|r| r[1..]
            .iter()
            .all(|(j, _)| !pivot_row.contains_key(j))));
        let mut col_rows: HashMap<usize, Vec<usize>> = HashMap::new();
        for (i, r) in rows.iter().enumerate() {
            for (j, _) in &r[1..] {
                col_rows.entry(*j).or_default().push(i);
            }
        }
        Subspace {
            field,
            ambient,
            rows,
            pivot_row,
            col_rows,
        }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Basis rows ordered by pivot column.
    pub fn basis(&self) -> Vec<&SparseVec<F::Elem>> {
        let mut rows: Vec<_> = self.rows.iter().collect();
        rows.sort_unstable_by_key(|r| r[0].0);
        rows
    }

    pub fn pivots(&self) -> Vec<usize> {
        let mut p: Vec<usize> = self.pivot_row.keys().copied().collect();
        p.sort_unstable();
        p
    }

    /// Remainder of `v` after clearing every pivot column.
    pub fn reduce(&self, v: &[(usize, F::Elem)]) -> SparseVec<F::Elem> {
        let mut terms = Vec::with_capacity(v.len());
        let mut hit_pivot = false;
        for (c, a) in v {
            match self.pivot_row.get(c) {
                Some(&r) => {
                    hit_pivot = true;
                    let minus_a = self.field.neg(a);
                    terms.extend(
                        self.rows[r][1..]
                            .iter()
                            .map(|(j, b)| (*j, self.field.mul(&minus_a, b))),
                    );
                }
                None => terms.push((*c, a.clone())),
            }
        }
        if !hit_pivot {
            return v.to_vec();
        }
        normalize(&self.field, terms)
    }

    pub fn contains(&self, v: &[(usize, F::Elem)]) -> bool {
        self.reduce(v).is_empty()
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, v: &[(usize, F::Elem)]) -> bool {
        debug_assert!(v.iter().all(|(i, _)| *i < self.ambient));
        let w = self.reduce(v);
        if w.is_empty() {
            return false;
        }
        let q = w[0].0;
        let w = scale(&self.field, &self.field.inv(&w[0].1), &w);
        for r in self.col_rows.remove(&q).unwrap_or_default() {
            let row = &mut self.rows[r];
            if let Some(c) = get(row, q) {
                let minus_c = self.field.neg(c);
                *row = axpy(&self.field, row, &minus_c, &w);
                for (j, _) in &w[1..] {
                    self.col_rows.entry(*j).or_default().push(r);
                }
            }
        }
        let new = self.rows.len();
        for (j, _) in &w[1..] {
            self.col_rows.entry(*j).or_default().push(new);
        }
        self.pivot_row.insert(q, new);
        self.rows.push(w);
        true
    }

    pub fn span_grow(mut self, v: &[(usize, F::Elem)]) -> (Self, bool) {
        let grew = self.insert(v);
        (self, grew)
    }

    fn check_ambient(&self, other: &Self) -> Result<(), LinalgError> {
        if self.ambient != other.ambient {
            return Err(LinalgError::AmbientMismatch {
                left: self.ambient,
                right: other.ambient,
            });
        }
        Ok(())
    }

    pub fn sum(&self, other: &Self) -> Result<Self, LinalgError> {
        self.check_ambient(other)?;
        let mut s = self.clone();
        for r in &other.rows {
            s.insert(r);
        }
        Ok(s)
    }

    /// Intersection by Zassenhaus: echelonize `(s | s)` and `(t | 0)` in a
    /// doubled ambient space; rows whose left half vanishes span `S ∩ T`.
    pub fn intersect(&self, other: &Self) -> Result<Self, LinalgError> {
        self.check_ambient(other)?;
        let d = self.ambient;
        let mut z = Subspace::zero(self.field.clone(), 2 * d);
        for r in &self.rows {
            let doubled: SparseVec<F::Elem> = r
                .iter()
                .cloned()
                .chain(r.iter().map(|(j, v)| (j + d, v.clone())))
                .collect();
            z.insert(&doubled);
        }
        for r in &other.rows {
            z.insert(r);
        }
        let rows = z
            .rows
            .into_iter()
            .filter(|r| r[0].0 >= d)
            .map(|r| r.into_iter().map(|(j, v)| (j - d, v)).collect())
            .collect();
        // rows with pivots in the right half are already reduced among themselves
        Ok(Self::from_rref_rows(self.field.clone(), d, rows))
    }

    pub fn equals(&self, other: &Self) -> Result<bool, LinalgError> {
        self.check_ambient(other)?;
        Ok(self.dim() == other.dim() && self.basis() == other.basis())
    }

    pub fn is_subspace_of(&self, other: &Self) -> Result<bool, LinalgError> {
        self.check_ambient(other)?;
        Ok(self.rows.iter().all(|r| other.contains(r)))
    }

    /// Image under a linear map given as a matrix acting on column vectors.
    pub fn image_under(&self, op: &SparseMatrix<F::Elem>) -> Result<Self, LinalgError> {
        if op.cols() != self.ambient {
            return Err(LinalgError::AmbientMismatch {
                left: op.cols(),
                right: self.ambient,
            });
        }
        let t = op.transpose();
        let mut out = Subspace::zero(self.field.clone(), op.rows());
        for r in &self.rows {
            let mut terms = Vec::new();
            for (j, x) in r {
                for (i, a) in t.row(*j) {
                    terms.push((*i, self.field.mul(a, x)));
                }
            }
            out.insert(&normalize(&self.field, terms));
        }
        Ok(out)
    }

    /// Canonical basis as a matrix whose rows are sorted by pivot.
    pub fn to_matrix(&self) -> SparseMatrix<F::Elem> {
        SparseMatrix::from_rows(self.ambient, self.basis().into_iter().cloned().collect())
    }
}
