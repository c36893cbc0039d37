use proptest::prelude::*;

use superschur::exact_linalg::{
    commutant, nullspace, prime_pair, rank, Field, GaussianRationals, PrimeField, SparseMatrix,
    SparseVec, Subspace,
};
use superschur::schur_centralizers::isotypic;
use superschur::sn_characters::Permutation;
use superschur::super_action::{phi_star, GradedSpace, SignedPerm};

fn permutation(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::new(v).unwrap())
}

fn signed_perm(d: usize) -> impl Strategy<Value = SignedPerm> {
    (
        Just((0..d).collect::<Vec<usize>>()).prop_shuffle(),
        proptest::collection::vec(any::<bool>(), d),
    )
        .prop_map(|(t, s)| SignedPerm::from_parts(t, s))
}

fn int_matrix(max_rows: usize, cols: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    proptest::collection::vec(proptest::collection::vec(-2i64..=2, cols), 0..=max_rows)
}

fn to_vectors<F: Field>(f: &F, m: &[Vec<i64>]) -> Vec<SparseVec<F::Elem>> {
    m.iter()
        .map(|r| {
            r.iter()
                .enumerate()
                .filter(|(_, v)| **v != 0)
                .map(|(j, v)| (j, f.from_i64(*v)))
                .collect()
        })
        .collect()
}

fn span<F: Field>(f: &F, dim: usize, m: &[Vec<i64>]) -> Subspace<F> {
    Subspace::from_vectors(f.clone(), dim, to_vectors(f, m).iter())
}

/// `XG − GX = 0` written out with one extra equation that is the sum of two
/// others, so the system no longer has the two-term shape.
fn padded_commutant_equations<F: Field>(f: &F, gens: &[SparseMatrix<F::Elem>]) -> SparseMatrix<F::Elem> {
    let d = gens[0].rows();
    let mut rows = Vec::new();
    for g in gens {
        let dense = |i: usize, j: usize| g.get(i, j).cloned().unwrap_or_else(|| f.zero());
        for a in 0..d {
            for b in 0..d {
                let mut terms: Vec<(usize, F::Elem)> = Vec::new();
                for c in 0..d {
                    terms.push((a * d + c, dense(c, b)));
                    terms.push((c * d + b, f.neg(&dense(a, c))));
                }
                rows.push(superschur::exact_linalg::normalize(f, terms));
            }
        }
    }
    if rows.len() >= 2 {
        let extra = superschur::exact_linalg::axpy(f, &rows[0], &f.one(), &rows[1]);
        rows.push(extra);
    }
    SparseMatrix::from_rows(d * d, rows)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn phi_star_is_a_homomorphism(
        (k, l) in (0usize..=2, 0usize..=2).prop_filter("nonzero", |(k, l)| k + l > 0),
        (s, t) in (1usize..=5).prop_flat_map(|n| (permutation(n), permutation(n))),
    ) {
        let sp = GradedSpace::new(k, l).unwrap();
        let lhs = phi_star(&sp, &s.compose(&t).unwrap()).unwrap();
        let rhs = phi_star(&sp, &s).unwrap().compose(&phi_star(&sp, &t).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
        let inv = phi_star(&sp, &s.inverse()).unwrap();
        prop_assert_eq!(inv, phi_star(&sp, &s).unwrap().inverse());
    }

    #[test]
    fn grassmann_identity(a in int_matrix(6, 6), b in int_matrix(6, 6)) {
        let q = GaussianRationals;
        let (u, w) = (span(&q, 6, &a), span(&q, 6, &b));
        let sum = u.sum(&w).unwrap();
        let meet = u.intersect(&w).unwrap();
        prop_assert_eq!(sum.dim() + meet.dim(), u.dim() + w.dim());
        prop_assert!(meet.is_subspace_of(&u).unwrap() && meet.is_subspace_of(&w).unwrap());
        prop_assert!(u.is_subspace_of(&sum).unwrap() && w.is_subspace_of(&sum).unwrap());
    }

    #[test]
    fn modular_rank_matches_exact(m in int_matrix(9, 9), seed in any::<u64>()) {
        // entries are tiny, so no 61-bit prime divides a nonzero minor
        let q = GaussianRationals;
        let (p1, p2) = prime_pair(seed);
        let exact = rank(&q, &SparseMatrix::from_rows(9, to_vectors(&q, &m)));
        prop_assert_eq!(rank(&p1, &SparseMatrix::from_rows(9, to_vectors(&p1, &m))), exact);
        prop_assert_eq!(rank(&p2, &SparseMatrix::from_rows(9, to_vectors(&p2, &m))), exact);
    }

    #[test]
    fn canonical_basis_ignores_generating_set(m in int_matrix(5, 7), scale in 1i64..5) {
        let q = GaussianRationals;
        let a = span(&q, 7, &m);
        let mut scaled: Vec<Vec<i64>> = m.iter().rev().map(|r| r.iter().map(|x| x * scale).collect()).collect();
        if let (Some(first), Some(last)) = (m.first(), m.last()) {
            scaled.push(first.iter().zip(last).map(|(x, y)| x + y).collect());
        }
        prop_assert!(a.equals(&span(&q, 7, &scaled)).unwrap());
    }

    #[test]
    fn binomial_and_elimination_commutants_agree(gens in (2usize..=6).prop_flat_map(|d| proptest::collection::vec(signed_perm(d), 1..=2))) {
        let f = PrimeField::new(1_000_000_009).unwrap();
        let mats: Vec<_> = gens.iter().map(|g| g.to_matrix(&f)).collect();
        let fast = commutant(&f, &mats);
        let slow = nullspace(&f, &padded_commutant_equations(&f, &mats));
        prop_assert!(fast.equals(&slow).unwrap());
    }

    #[test]
    fn projectors_are_orthogonal_idempotents(
        (k, l) in (0usize..=2, 0usize..=1).prop_filter("nonzero", |(k, l)| k + l > 0),
        n in 2usize..=4,
    ) {
        let f = PrimeField::new(1_000_000_009).unwrap();
        let data = isotypic(&f, &GradedSpace::new(k, l).unwrap(), n).unwrap();
        for (name, ok) in data.relation_checks(&f) {
            prop_assert!(ok, "{}", name);
        }
    }
}
