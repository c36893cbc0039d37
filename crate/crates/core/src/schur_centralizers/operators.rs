//! Operators on `V^⊗n` flattened to vectors of length `d²` (row-major,
//! entry `X_ab` at index `a·d + b`), and the subspaces they span.

use num_bigint::BigUint;

use crate::exact_linalg::{
    commutant, normalize, DenseMatrix, Field, SparseMatrix, SparseVec, Subspace,
};
use crate::super_action::SignedPerm;

pub fn vec_of_signed<F: Field>(field: &F, p: &SignedPerm) -> SparseVec<F::Elem> {
    let d = p.dim();
    let mut out: SparseVec<F::Elem> = (0..d)
        .map(|w| {
            let (t, s) = p.image(w);
            (t * d + w, field.from_sign(s < 0))
        })
        .collect();
    out.sort_unstable_by_key(|t| t.0);
    out
}

/// `P·X`.
pub fn left_mul<F: Field>(field: &F, p: &SignedPerm, x: &[(usize, F::Elem)]) -> SparseVec<F::Elem> {
    let d = p.dim();
    let mut out: SparseVec<F::Elem> = x
        .iter()
        .map(|(idx, v)| {
            let (t, s) = p.image(idx / d);
            (t * d + idx % d, if s < 0 { field.neg(v) } else { v.clone() })
        })
        .collect();
    out.sort_unstable_by_key(|t| t.0);
    out
}

/// `X·P`, given `P⁻¹`.
pub fn right_mul_by_inverse_of<F: Field>(
    field: &F,
    x: &[(usize, F::Elem)],
    p_inv: &SignedPerm,
) -> SparseVec<F::Elem> {
    let d = p_inv.dim();
    let mut out: SparseVec<F::Elem> = x
        .iter()
        .map(|(idx, v)| {
            let (b, s) = p_inv.image(idx % d);
            (idx / d * d + b, if s < 0 { field.neg(v) } else { v.clone() })
        })
        .collect();
    out.sort_unstable_by_key(|t| t.0);
    out
}

/// `X·Y` for flattened `d × d` matrices.
pub fn mat_mul<F: Field>(
    field: &F,
    d: usize,
    x: &[(usize, F::Elem)],
    y: &[(usize, F::Elem)],
) -> SparseVec<F::Elem> {
    let mut terms = Vec::new();
    for (i, a) in x {
        let (row, c) = (i / d, i % d);
        let lo = y.partition_point(|t| t.0 < c * d);
        let hi = y.partition_point(|t| t.0 < (c + 1) * d);
        for (j, b) in &y[lo..hi] {
            terms.push((row * d + j % d, field.mul(a, b)));
        }
    }
    normalize(field, terms)
}

/// Span of the flattened operators.
pub fn span_of<F: Field>(field: &F, ambient: usize, vectors: &[SparseVec<F::Elem>]) -> Subspace<F> {
    let mut s = Subspace::zero(field.clone(), ambient);
    for v in vectors {
        s.insert(v);
        if s.dim() == ambient {
            break;
        }
    }
    s
}

/// Rank of the Gram matrix `⟨P_i, P_j⟩ = Σ_w [P_i w ∥ P_j w] s_i s_j` of
/// signed permutations. For real vectors this equals the dimension of their span.
pub fn gram_rank<F: Field>(field: &F, ops: &[SignedPerm]) -> usize {
    let m = ops.len();
    let mut gram = DenseMatrix::zero(field, m, m);
    let rows: Vec<Vec<i64>> = {
        use rayon::prelude::*;
        (0..m)
            .into_par_iter()
            .map(|i| {
                (0..m)
                    .map(|j| {
                        if j < i {
                            return 0;
                        }
                        (0..ops[i].dim())
                            .map(|w| {
                                let (a, s) = ops[i].image(w);
                                let (b, t) = ops[j].image(w);
                                if a == b {
                                    (s * t) as i64
                                } else {
                                    0
                                }
                            })
                            .sum()
                    })
                    .collect()
            })
            .collect()
    };
    for i in 0..m {
        for j in i..m {
            let v = field.from_i64(rows[i][j]);
            gram.set(i, j, v.clone());
            gram.set(j, i, v);
        }
    }
    gram.rank(field)
}

/// Commutant of a possibly empty generator list acting on a space of dimension `d`.
pub fn commutant_or_whole<F: Field>(
    field: &F,
    d: usize,
    gens: &[SparseMatrix<F::Elem>],
) -> Subspace<F> {
    if gens.is_empty() {
        Subspace::whole(field.clone(), d * d)
    } else {
        commutant(field, gens)
    }
}

pub fn to_u64(x: &BigUint) -> u64 {
    u64::try_from(x).expect("dimension fits in 64 bits")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_linalg::PrimeField;
    use crate::sn_characters::Permutation;
    use crate::super_action::{phi_star, GradedSpace};

    #[test]
    fn flattened_products_agree_with_matrices() {
        let f = PrimeField::new(101).unwrap();
        let sp = GradedSpace::new(1, 1).unwrap();
        let p = phi_star(&sp, &Permutation::cycle(3, &[0, 2, 1])).unwrap();
        let q = phi_star(&sp, &Permutation::transposition(3, 0, 1)).unwrap();
        let (pm, qm) = (p.to_matrix(&f), q.to_matrix(&f));
        let pv = vec_of_signed(&f, &p);
        let qv = vec_of_signed(&f, &q);
        assert_eq!(pv, pm.to_vector());
        assert_eq!(left_mul(&f, &p, &qv), pm.mul(&f, &qm).to_vector());
        assert_eq!(
            right_mul_by_inverse_of(&f, &qv, &p.inverse()),
            qm.mul(&f, &pm).to_vector()
        );
        assert_eq!(mat_mul(&f, 8, &pv, &qv), pm.mul(&f, &qm).to_vector());
        assert_eq!(gram_rank(&f, &[p.clone(), q.clone(), p]), 2);
    }
}
