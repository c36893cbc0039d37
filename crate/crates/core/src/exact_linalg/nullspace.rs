use std::collections::HashMap;

use super::field::Field;
use super::sparse::{axpy, scale, SparseMatrix, SparseVec};
use super::subspace::Subspace;

/// Reduced row-echelon form of `m` and its rank.
///
/// The result is the unique RREF: rows ordered by pivot, each pivot the first
/// nonzero column of its row and normalized to 1.
pub fn rref<F: Field>(field: &F, m: &SparseMatrix<F::Elem>) -> (SparseMatrix<F::Elem>, usize) {
    let s = Subspace::from_vectors(field.clone(), m.cols(), m.row_data());
    let rank = s.dim();
    (s.to_matrix(), rank)
}

pub fn rank<F: Field>(field: &F, m: &SparseMatrix<F::Elem>) -> usize {
    rref(field, m).1
}

/// `{x : M x = 0}`.
///
/// Systems in which every equation has at most two terms (the shape produced
/// by signed-permutation generators) are solved by a weighted union–find over
/// the unknowns; everything else goes through sparse elimination.
pub fn nullspace<F: Field>(field: &F, m: &SparseMatrix<F::Elem>) -> Subspace<F> {
    if m.row_data().iter().all(|r| r.len() <= 2) {
        binomial_nullspace(field, m.cols(), m.row_data())
    } else {
        elimination_nullspace(field, m.cols(), m.row_data())
    }
}

/// Nullspace through forward elimination into echelon form followed by
/// back-substitution.
pub(crate) fn elimination_nullspace<F: Field>(
    field: &F,
    cols: usize,
    equations: &[SparseVec<F::Elem>],
) -> Subspace<F> {
    let mut pivots: HashMap<usize, SparseVec<F::Elem>> = HashMap::new();
    for eq in equations {
        let mut row = eq.clone();
        while let Some((lead, coeff)) = row.first().cloned() {
            match pivots.get(&lead) {
                Some(p) => row = axpy(field, &row, &field.neg(&coeff), p),
                None => {
                    let normalized = scale(field, &field.inv(&coeff), &row);
                    pivots.insert(lead, normalized);
                    break;
                }
            }
        }
    }

    // back-substitute from the highest pivot down so every row is fully reduced
    let mut order: Vec<usize> = pivots.keys().copied().collect();
    order.sort_unstable_by(|a, b| b.cmp(a));
    let mut reduced: HashMap<usize, SparseVec<F::Elem>> = HashMap::with_capacity(order.len());
    for &p in &order {
        let mut row = pivots.remove(&p).unwrap();
        let hits: Vec<(usize, F::Elem)> = row[1..]
            .iter()
            .filter(|(j, _)| reduced.contains_key(j))
            .cloned()
            .collect();
        for (j, c) in hits {
            row = axpy(field, &row, &field.neg(&c), &reduced[&j]);
        }
        reduced.insert(p, row);
    }

    let mut basis: HashMap<usize, SparseVec<F::Elem>> = HashMap::new();
    for (&p, row) in &reduced {
        for (f, a) in &row[1..] {
            basis.entry(*f).or_default().push((p, field.neg(a)));
        }
    }
    let mut vectors = Vec::with_capacity(cols - reduced.len());
    for f in (0..cols).filter(|c| !reduced.contains_key(c)) {
        let mut v = basis.remove(&f).unwrap_or_default();
        v.push((f, field.one()));
        v.sort_unstable_by_key(|t| t.0);
        vectors.push(v);
    }
    Subspace::from_vectors(field.clone(), cols, &vectors)
}

struct WeightedUnionFind<E> {
    parent: Vec<usize>,
    /// `x_u = ratio[u] · x_parent[u]`
    ratio: Vec<E>,
    forced_zero: Vec<bool>,
}

impl<E: Clone> WeightedUnionFind<E> {
    fn find<F: Field<Elem = E>>(&mut self, field: &F, u: usize) -> (usize, E) {
        let mut path = Vec::new();
        let mut cur = u;
        while self.parent[cur] != cur {
            path.push(cur);
            cur = self.parent[cur];
        }
        let root = cur;
        // compress, accumulating ratios from the top of the path down
        let mut acc = field.one();
        for &node in path.iter().rev() {
            acc = field.mul(&self.ratio[node], &acc);
            self.ratio[node] = acc.clone();
            self.parent[node] = root;
        }
        let r = if u == root { field.one() } else { self.ratio[u].clone() };
        (root, r)
    }
}

/// Solves systems whose equations are `a·x_u = 0` or `a·x_u + b·x_v = 0`.
pub(crate) fn binomial_nullspace<F: Field>(
    field: &F,
    cols: usize,
    equations: &[SparseVec<F::Elem>],
) -> Subspace<F> {
    let mut solver = BinomialSolver::new(field, cols);
    for eq in equations {
        match eq.as_slice() {
            [] => {}
            [(u, _)] => solver.force_zero(*u),
            [(u, a), (v, b)] => solver.link(*u, a, *v, b),
            _ => unreachable!("binomial solver called on a longer equation"),
        }
    }
    solver.finish()
}

/// Incremental weighted union–find over the unknowns of a binomial system.
pub(crate) struct BinomialSolver<'a, F: Field> {
    field: &'a F,
    uf: WeightedUnionFind<F::Elem>,
}

impl<'a, F: Field> BinomialSolver<'a, F> {
    pub(crate) fn new(field: &'a F, cols: usize) -> Self {
        BinomialSolver {
            field,
            uf: WeightedUnionFind {
                parent: (0..cols).collect(),
                ratio: vec![field.one(); cols],
                forced_zero: vec![false; cols],
            },
        }
    }

    pub(crate) fn force_zero(&mut self, u: usize) {
        let (r, _) = self.uf.find(self.field, u);
        self.uf.forced_zero[r] = true;
    }

    /// Records `a·x_u + b·x_v = 0`.
    pub(crate) fn link(&mut self, u: usize, a: &F::Elem, v: usize, b: &F::Elem) {
        let field = self.field;
        let uf = &mut self.uf;
        let (ru, rho_u) = uf.find(field, u);
        let (rv, rho_v) = uf.find(field, v);
        // a·ρ_u·x_ru + b·ρ_v·x_rv = 0
        let cu = field.mul(a, &rho_u);
        let cv = field.mul(b, &rho_v);
        if ru == rv {
            if !field.is_zero(&field.add(&cu, &cv)) {
                uf.forced_zero[ru] = true;
            }
        } else {
            // x_ru = -(cv / cu) · x_rv
            let link = field.neg(&field.mul(&cv, &field.inv(&cu)));
            uf.parent[ru] = rv;
            uf.ratio[ru] = link;
            if uf.forced_zero[ru] {
                uf.forced_zero[rv] = true;
            }
        }
    }

    pub(crate) fn finish(mut self) -> Subspace<F> {
        let field = self.field;
        let cols = self.uf.parent.len();
        let mut components: Vec<Vec<(usize, F::Elem)>> = Vec::new();
        let mut slot: HashMap<usize, usize> = HashMap::new();
        for u in 0..cols {
            let (root, r) = self.uf.find(field, u);
            if self.uf.forced_zero[root] {
                continue;
            }
            let idx = *slot.entry(root).or_insert_with(|| {
                components.push(Vec::new());
                components.len() - 1
            });
            components[idx].push((u, r));
        }
        // components have disjoint supports and are visited in increasing order,
        // so scaling each by its first entry yields the reduced echelon basis
        let rows = components
            .into_iter()
            .map(|c| {
                let lead_inv = field.inv(&c[0].1);
                scale(field, &lead_inv, &c)
            })
            .collect();
        Subspace::from_rref_rows(field.clone(), cols, rows)
    }
}

/// `{X : X·G = G·X for every generator G}` as a subspace of vectorized
/// `d × d` matrices (row-major, `X_ab` at index `a·d + b`).
pub fn commutant<F: Field>(field: &F, generators: &[SparseMatrix<F::Elem>]) -> Subspace<F> {
    let Some(first) = generators.first() else {
        panic!("commutant needs at least one generator to fix the dimension");
    };
    let d = first.rows();
    assert!(
        generators.iter().all(|g| g.rows() == d && g.cols() == d),
        "generators must all be square of the same size"
    );
    if generators.iter().all(SparseMatrix::is_monomial) {
        return monomial_commutant(field, d, generators);
    }
    let mut equations = Vec::with_capacity(generators.len() * d * d);
    for g in generators {
        let gt = g.transpose();
        for a in 0..d {
            for b in 0..d {
                // (XG)_ab = Σ_c X_ac G_cb,  (GX)_ab = Σ_c G_ac X_cb
                let mut terms: Vec<(usize, F::Elem)> = gt
                    .row(b)
                    .iter()
                    .map(|(c, v)| (a * d + c, v.clone()))
                    .collect();
                terms.extend(g.row(a).iter().map(|(c, v)| (c * d + b, field.neg(v))));
                let eq = super::sparse::normalize(field, terms);
                if !eq.is_empty() {
                    equations.push(eq);
                }
            }
        }
    }
    nullspace(field, &SparseMatrix::from_rows(d * d, equations))
}

/// Same equations as the generic path, streamed straight into the union–find.
fn monomial_commutant<F: Field>(
    field: &F,
    d: usize,
    generators: &[SparseMatrix<F::Elem>],
) -> Subspace<F> {
    let mut solver = BinomialSolver::new(field, d * d);
    for g in generators {
        let gt = g.transpose();
        for a in 0..d {
            let (ga, gv) = &g.row(a)[0];
            let minus_gv = field.neg(gv);
            for b in 0..d {
                let (c, v) = &gt.row(b)[0];
                // X_{a c}·G_{c b} - G_{a ga}·X_{ga b}
                let (u, w) = (a * d + c, ga * d + b);
                if u == w {
                    let s = field.add(v, &minus_gv);
                    if !field.is_zero(&s) {
                        solver.force_zero(u);
                    }
                } else {
                    solver.link(u, v, w, &minus_gv);
                }
            }
        }
    }
    solver.finish()
}
