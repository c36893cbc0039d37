//! The graded tensor space `V^⊗n` and the signed operators acting on it.
//!
//! `V = V_0 ⊕ V_1` has basis letters `0..k` (even) followed by `k..k+l`
//! (odd). A basis word of `V^⊗n` is ranked in base `k+l` with the leftmost
//! letter most significant. A permutation moves the letter in position `j`
//! to position `σ(j)` and picks up a factor `-1` for every pair of odd
//! letters whose relative order it reverses.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::exact_linalg::{nullspace, Field, SparseMatrix, SparseVec, Subspace};
use crate::sn_characters::{generators, Group, Permutation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ActionError {
    #[error("graded space must be nonzero (k + l >= 1)")]
    EmptySpace,
    #[error("grading swap needs dim V0 = dim V1, got k = {k}, l = {l}")]
    Unbalanced { k: usize, l: usize },
    #[error("tensor power ({base})^{n} is too large")]
    TooLarge { base: usize, n: usize },
    #[error("operator on {left} basis words cannot combine with one on {right}")]
    DimensionMismatch { left: usize, right: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
pub struct GradedSpace {
    pub k: usize,
    pub l: usize,
}

impl GradedSpace {
    pub fn new(k: usize, l: usize) -> Result<Self, ActionError> {
        if k + l == 0 {
            return Err(ActionError::EmptySpace);
        }
        Ok(GradedSpace { k, l })
    }

    pub fn dim(&self) -> usize {
        self.k + self.l
    }

    pub fn degree(&self, letter: usize) -> u8 {
        u8::from(letter >= self.k)
    }

    /// `(k+l)^n`, refusing anything that would not fit in memory as a basis.
    pub fn tensor_dim(&self, n: usize) -> Result<usize, ActionError> {
        u32::try_from(n)
            .ok()
            .and_then(|e| self.dim().checked_pow(e))
            .filter(|&d| d <= 1 << 26)
            .ok_or(ActionError::TooLarge {
                base: self.dim(),
                n,
            })
    }

    pub fn rank_word(&self, word: &[usize]) -> usize {
        word.iter().fold(0, |acc, &x| acc * self.dim() + x)
    }

    pub fn unrank_word(&self, mut index: usize, n: usize) -> Vec<usize> {
        let mut word = vec![0; n];
        for slot in word.iter_mut().rev() {
            *slot = index % self.dim();
            index /= self.dim();
        }
        word
    }
}

/// A signed permutation of basis vectors: `e_w ↦ ±e_{target[w]}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedPerm {
    target: Vec<usize>,
    negative: Vec<bool>,
}

impl SignedPerm {
    pub fn identity(d: usize) -> Self {
        SignedPerm {
            target: (0..d).collect(),
            negative: vec![false; d],
        }
    }

    pub fn from_parts(target: Vec<usize>, negative: Vec<bool>) -> Self {
        assert_eq!(target.len(), negative.len());
        debug_assert!({
            let mut seen = vec![false; target.len()];
            target.iter().all(|&t| !std::mem::replace(&mut seen[t], true))
        });
        SignedPerm { target, negative }
    }

    pub fn dim(&self) -> usize {
        self.target.len()
    }

    /// Image of basis vector `w` as `(index, sign)`.
    pub fn image(&self, w: usize) -> (usize, i32) {
        (self.target[w], if self.negative[w] { -1 } else { 1 })
    }

    pub fn negated(&self) -> Self {
        SignedPerm {
            target: self.target.clone(),
            negative: self.negative.iter().map(|b| !b).collect(),
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &SignedPerm) -> Result<SignedPerm, ActionError> {
        if self.dim() != other.dim() {
            return Err(ActionError::DimensionMismatch {
                left: self.dim(),
                right: other.dim(),
            });
        }
        let (target, negative) = other
            .target
            .iter()
            .zip(&other.negative)
            .map(|(&t, &s)| (self.target[t], s ^ self.negative[t]))
            .unzip();
        Ok(SignedPerm { target, negative })
    }

    pub fn inverse(&self) -> SignedPerm {
        let mut target = vec![0; self.dim()];
        let mut negative = vec![false; self.dim()];
        for (w, (&t, &s)) in self.target.iter().zip(&self.negative).enumerate() {
            target[t] = w;
            negative[t] = s;
        }
        SignedPerm { target, negative }
    }

    /// `self ∘ other ∘ self⁻¹`.
    pub fn conjugate(&self, other: &SignedPerm) -> Result<SignedPerm, ActionError> {
        self.compose(other)?.compose(&self.inverse())
    }

    pub fn trace(&self) -> i64 {
        self.target
            .iter()
            .zip(&self.negative)
            .enumerate()
            .filter(|(w, (t, _))| w == *t)
            .map(|(_, (_, &s))| if s { -1 } else { 1 })
            .sum()
    }

    /// `Some(c)` if the operator is `c·I` with `c = ±1`.
    pub fn scalar(&self) -> Option<i32> {
        if !self.target.iter().enumerate().all(|(w, &t)| w == t) {
            return None;
        }
        match self.negative.first() {
            None => Some(1),
            Some(&first) if self.negative.iter().all(|&s| s == first) => {
                Some(if first { -1 } else { 1 })
            }
            _ => None,
        }
    }

    pub fn apply<F: Field>(&self, field: &F, v: &[(usize, F::Elem)]) -> SparseVec<F::Elem> {
        let mut out: SparseVec<F::Elem> = v
            .iter()
            .map(|(w, x)| {
                let x = if self.negative[*w] { field.neg(x) } else { x.clone() };
                (self.target[*w], x)
            })
            .collect();
        out.sort_unstable_by_key(|t| t.0);
        out
    }

    /// Matrix acting on column vectors: entry `±1` at `(target[w], w)`.
    pub fn to_matrix<F: Field>(&self, field: &F) -> SparseMatrix<F::Elem> {
        let inv = self.inverse();
        let rows = inv
            .target
            .iter()
            .zip(&inv.negative)
            .map(|(&w, &s)| vec![(w, field.from_sign(s))])
            .collect();
        SparseMatrix::from_rows(self.dim(), rows)
    }

    /// Recovers the signed-permutation form of a matrix, if it has one.
    pub fn from_matrix<F: Field>(field: &F, m: &SparseMatrix<F::Elem>) -> Option<SignedPerm> {
        if !m.is_monomial() {
            return None;
        }
        let minus_one = field.neg(&field.one());
        let mut target = vec![0; m.cols()];
        let mut negative = vec![false; m.cols()];
        for i in 0..m.rows() {
            let (w, v) = &m.row(i)[0];
            target[*w] = i;
            negative[*w] = if field.is_one(v) {
                false
            } else if *v == minus_one {
                true
            } else {
                return None;
            };
        }
        Some(SignedPerm { target, negative })
    }
}

/// `φ*_σ` on `V^⊗n`.
pub fn phi_star(space: &GradedSpace, sigma: &Permutation) -> Result<SignedPerm, ActionError> {
    let n = sigma.len();
    let d = space.tensor_dim(n)?;
    let mut target = Vec::with_capacity(d);
    let mut negative = Vec::with_capacity(d);
    let mut moved = vec![0; n];
    for w in 0..d {
        let word = space.unrank_word(w, n);
        let mut flips = 0usize;
        for a in 0..n {
            moved[sigma.apply(a)] = word[a];
            if space.degree(word[a]) == 1 {
                flips += (a + 1..n)
                    .filter(|&b| space.degree(word[b]) == 1 && sigma.apply(a) > sigma.apply(b))
                    .count();
            }
        }
        target.push(space.rank_word(&moved));
        negative.push(flips % 2 == 1);
    }
    Ok(SignedPerm { target, negative })
}

/// `φ*_σ` for each of `sigmas`.
pub fn phi_star_all(
    space: &GradedSpace,
    sigmas: &[Permutation],
) -> Result<Vec<SignedPerm>, ActionError> {
    sigmas.iter().map(|s| phi_star(space, s)).collect()
}

/// `η*_σ(L) = φ*_σ L φ*_{σ⁻¹}` on an arbitrary matrix.
pub fn eta_star<F: Field>(
    field: &F,
    space: &GradedSpace,
    sigma: &Permutation,
    op: &SparseMatrix<F::Elem>,
) -> Result<SparseMatrix<F::Elem>, ActionError> {
    let p = phi_star(space, sigma)?;
    if op.rows() != p.dim() || op.cols() != p.dim() {
        return Err(ActionError::DimensionMismatch {
            left: p.dim(),
            right: op.rows(),
        });
    }
    let left = p.to_matrix(field);
    let right = p.inverse().to_matrix(field);
    Ok(left.mul(field, op).mul(field, &right))
}

fn require_balanced(space: &GradedSpace) -> Result<(), ActionError> {
    if space.k != space.l {
        return Err(ActionError::Unbalanced {
            k: space.k,
            l: space.l,
        });
    }
    Ok(())
}

/// The odd involution `τ` of `V` exchanging the `i`-th even and odd basis letters.
pub fn tau(space: &GradedSpace) -> Result<SignedPerm, ActionError> {
    require_balanced(space)?;
    let k = space.k;
    let target = (0..2 * k).map(|i| if i < k { i + k } else { i - k }).collect();
    Ok(SignedPerm {
        target,
        negative: vec![false; 2 * k],
    })
}

/// `T = τ^⊗n` with the Koszul sign `(-1)^{Σ_j deg(w_j)(n-1-j)}`.
pub fn big_t(space: &GradedSpace, n: usize) -> Result<SignedPerm, ActionError> {
    let t = tau(space)?;
    let d = space.tensor_dim(n)?;
    let mut target = Vec::with_capacity(d);
    let mut negative = Vec::with_capacity(d);
    for w in 0..d {
        let word = space.unrank_word(w, n);
        let exponent: usize = word
            .iter()
            .enumerate()
            .map(|(j, &x)| space.degree(x) as usize * (n - 1 - j))
            .sum();
        let swapped: Vec<usize> = word.iter().map(|&x| t.target[x]).collect();
        target.push(space.rank_word(&swapped));
        negative.push(exponent % 2 == 1);
    }
    Ok(SignedPerm { target, negative })
}

/// Which subgroup must fix a vector, and whether the action is twisted by sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum InvariantKind {
    /// `σ v = v` for all `σ ∈ S_n`.
    Sym,
    /// `σ v = sgn(σ) v` for all `σ ∈ S_n`.
    Antisym,
    /// `σ v = v` for all `σ ∈ A_n`.
    Alt,
}

impl InvariantKind {
    fn group(self) -> Group {
        match self {
            InvariantKind::Sym | InvariantKind::Antisym => Group::Symmetric,
            InvariantKind::Alt => Group::Alternating,
        }
    }

    fn twist(self, sigma: &Permutation) -> i32 {
        match self {
            InvariantKind::Antisym => sigma.sign(),
            _ => 1,
        }
    }
}

fn twisted_generators(
    space: &GradedSpace,
    n: usize,
    kind: InvariantKind,
) -> Result<Vec<(SignedPerm, i32)>, ActionError> {
    generators(kind.group(), n)
        .iter()
        .map(|g| Ok((phi_star(space, g)?, kind.twist(g))))
        .collect()
}

/// Invariant vectors in `V^⊗n`: the kernel of every `φ*_g - c_g I`.
pub fn invariant_space<F: Field>(
    field: &F,
    space: &GradedSpace,
    n: usize,
    kind: InvariantKind,
) -> Result<Subspace<F>, ActionError> {
    let d = space.tensor_dim(n)?;
    let mut equations = Vec::new();
    for (g, c) in twisted_generators(space, n, kind)? {
        let c = field.from_i64(-(c as i64));
        // (φ*_g v)_{t(w)} = ±v_w, so row t(w) of φ*_g - cI reads ±v_w - c·v_{t(w)}
        for w in 0..d {
            let (t, s) = g.image(w);
            let terms = vec![(w, field.from_i64(s as i64)), (t, c.clone())];
            let eq = crate::exact_linalg::normalize(field, terms);
            if !eq.is_empty() {
                equations.push(eq);
            }
        }
    }
    Ok(nullspace(field, &SparseMatrix::from_rows(d, equations)))
}

/// Operators `L` on `V^⊗n` with `φ*_g L φ*_g⁻¹ = c_g L` for all generators,
/// as `d²`-vectors (row-major).
///
/// For `e_a ↦ s_a e_{π(a)}` conjugation sends `L_{ab}` to position
/// `(π(a), π(b))` with factor `s_a s_b`, so every equation has two terms.
pub fn operator_invariant_space<F: Field>(
    field: &F,
    space: &GradedSpace,
    n: usize,
    kind: InvariantKind,
) -> Result<Subspace<F>, ActionError> {
    let d = space.tensor_dim(n)?;
    let unknowns = d.checked_mul(d).ok_or(ActionError::TooLarge {
        base: space.dim(),
        n,
    })?;
    let mut equations = Vec::new();
    for (g, c) in twisted_generators(space, n, kind)? {
        for a in 0..d {
            let (pa, sa) = g.image(a);
            for b in 0..d {
                let (pb, sb) = g.image(b);
                let coeff = (sa * sb * c) as i64;
                let terms = vec![(pa * d + pb, field.one()), (a * d + b, field.from_i64(-coeff))];
                let eq = crate::exact_linalg::normalize(field, terms);
                if !eq.is_empty() {
                    equations.push(eq);
                }
            }
        }
    }
    Ok(nullspace(field, &SparseMatrix::from_rows(unknowns, equations)))
}

/// Basis words grouped by content (the multiset of letters). Every `φ*_σ`
/// and every element of the image algebra preserves each block.
#[derive(Debug, Clone)]
pub struct ContentBlocks {
    pub blocks: Vec<Vec<usize>>,
    /// `(block, position within block)` of each basis word.
    pub locate: Vec<(usize, usize)>,
}

pub fn content_blocks(space: &GradedSpace, n: usize) -> Result<ContentBlocks, ActionError> {
    let d = space.tensor_dim(n)?;
    let mut by_content: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut locate = Vec::with_capacity(d);
    for w in 0..d {
        let mut counts = vec![0usize; space.dim()];
        for x in space.unrank_word(w, n) {
            counts[x] += 1;
        }
        let b = *by_content.entry(counts).or_insert_with(|| {
            blocks.push(Vec::new());
            blocks.len() - 1
        });
        locate.push((b, blocks[b].len()));
        blocks[b].push(w);
    }
    Ok(ContentBlocks { blocks, locate })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_linalg::{commutant, GaussianRationals, PrimeField};
    use crate::sn_characters::{all_permutations, phi_star_trace};
    use num_traits::ToPrimitive;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn space(k: usize, l: usize) -> GradedSpace {
        GradedSpace::new(k, l).unwrap()
    }

    /// Applies σ to a word by successive adjacent swaps, each picking up
    /// `(-1)^{deg x deg y}`. Independent of the inversion-count rule.
    fn sign_by_adjacent_swaps(sp: &GradedSpace, sigma: &Permutation, word: &[usize]) -> (Vec<usize>, i32) {
        // place letter j at position σ(j): bubble-sort positions by target
        let mut items: Vec<(usize, usize)> = word.iter().enumerate().map(|(j, &x)| (sigma.apply(j), x)).collect();
        let mut sign = 1;
        for i in 0..items.len() {
            for j in 0..items.len() - 1 - i {
                if items[j].0 > items[j + 1].0 {
                    if sp.degree(items[j].1) == 1 && sp.degree(items[j + 1].1) == 1 {
                        sign = -sign;
                    }
                    items.swap(j, j + 1);
                }
            }
        }
        (items.into_iter().map(|t| t.1).collect(), sign)
    }

    #[test]
    fn word_ranking_round_trips() {
        let sp = space(2, 1);
        for w in 0..27 {
            assert_eq!(sp.rank_word(&sp.unrank_word(w, 3)), w);
        }
        assert_eq!(sp.unrank_word(5, 3), vec![0, 1, 2]);
        assert!(GradedSpace::new(0, 0).is_err());
        assert!(sp.tensor_dim(100).is_err());
    }

    #[test]
    fn two_letter_swap_sign() {
        let sp = space(1, 1);
        let swap = phi_star(&sp, &Permutation::transposition(2, 0, 1)).unwrap();
        let odd_odd = sp.rank_word(&[1, 1]);
        assert_eq!(swap.image(odd_odd), (odd_odd, -1));
        let even_odd = sp.rank_word(&[0, 1]);
        assert_eq!(swap.image(even_odd), (sp.rank_word(&[1, 0]), 1));
        for w in 0..4 {
            let word = sp.unrank_word(w, 2);
            let sign = if sp.degree(word[0]) * sp.degree(word[1]) == 1 { -1 } else { 1 };
            assert_eq!(swap.image(w), (sp.rank_word(&[word[1], word[0]]), sign));
        }
        assert_eq!(
            phi_star(&sp, &Permutation::identity(3)).unwrap(),
            SignedPerm::identity(8)
        );
    }

    #[test]
    fn sign_rule_matches_adjacent_swaps() {
        let sp = space(1, 2);
        for sigma in all_permutations(4) {
            let op = phi_star(&sp, &sigma).unwrap();
            for w in 0..81 {
                let (word, sign) = sign_by_adjacent_swaps(&sp, &sigma, &sp.unrank_word(w, 4));
                assert_eq!(op.image(w), (sp.rank_word(&word), sign));
            }
        }
    }

    #[test]
    fn group_action_on_random_pairs() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for k in 0..=2 {
            for l in 0..=2 {
                if k + l == 0 {
                    continue;
                }
                let sp = space(k, l);
                for n in 1..=5 {
                    let perms = all_permutations(n);
                    for _ in 0..200 {
                        let s = perms.choose(&mut rng).unwrap();
                        let t = perms.choose(&mut rng).unwrap();
                        let lhs = phi_star(&sp, &s.compose(t).unwrap()).unwrap();
                        let rhs = phi_star(&sp, s).unwrap().compose(&phi_star(&sp, t).unwrap()).unwrap();
                        assert_eq!(lhs, rhs);
                        assert_eq!(
                            phi_star(&sp, &s.inverse()).unwrap(),
                            phi_star(&sp, s).unwrap().inverse()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn traces_match_closed_form() {
        for (k, l) in [(1, 1), (2, 1), (1, 2)] {
            let sp = space(k, l);
            for sigma in all_permutations(4) {
                let op = phi_star(&sp, &sigma).unwrap();
                let expected = phi_star_trace(&sigma.cycle_type(), k, l).to_i64().unwrap();
                assert_eq!(op.trace(), expected);
            }
        }
    }

    #[test]
    fn even_space_is_signless() {
        let sp = space(3, 0);
        for sigma in all_permutations(3) {
            let op = phi_star(&sp, &sigma).unwrap();
            assert!((0..27).all(|w| op.image(w).1 == 1));
        }
    }

    #[test]
    fn matrix_form_round_trips() {
        let f = PrimeField::new(13).unwrap();
        let sp = space(1, 1);
        let a = phi_star(&sp, &Permutation::cycle(3, &[0, 1, 2])).unwrap();
        let b = phi_star(&sp, &Permutation::transposition(3, 0, 2)).unwrap();
        let m = a.to_matrix(&f);
        assert_eq!(SignedPerm::from_matrix(&f, &m), Some(a.clone()));
        assert_eq!(
            a.compose(&b).unwrap().to_matrix(&f),
            m.mul(&f, &b.to_matrix(&f))
        );
        let v = vec![(3, 2u64), (5, 7)];
        assert_eq!(a.apply(&f, &v), m.apply(&f, &v));
        assert!(m.row_data().iter().all(|r| r.len() == 1 && (r[0].1 == 1 || r[0].1 == 12)));
        assert!(m.transpose().row_data().iter().all(|r| r.len() == 1));
    }

    #[test]
    fn conjugation_examples() {
        let f = GaussianRationals;
        let sp = space(1, 1);
        let n = 3;
        let id = SparseMatrix::identity(&f, 8);
        for sigma in all_permutations(n) {
            assert_eq!(eta_star(&f, &sp, &sigma, &id).unwrap(), id);
            for tau in all_permutations(n) {
                let lhs = eta_star(&f, &sp, &sigma, &phi_star(&sp, &tau).unwrap().to_matrix(&f)).unwrap();
                let conj = sigma.compose(&tau).unwrap().compose(&sigma.inverse()).unwrap();
                assert_eq!(lhs, phi_star(&sp, &conj).unwrap().to_matrix(&f));
            }
        }
        for n in 1..=4 {
            let t = big_t(&sp, n).unwrap();
            for sigma in all_permutations(n) {
                let lhs = eta_star(&f, &sp, &sigma, &t.to_matrix(&f)).unwrap();
                let expected = t.to_matrix(&f).scaled(&f, &f.from_i64(sigma.sign() as i64));
                assert_eq!(lhs, expected);
            }
        }
    }

    #[test]
    fn swap_operator_properties() {
        assert!(matches!(tau(&space(2, 1)), Err(ActionError::Unbalanced { k: 2, l: 1 })));
        let sp = space(1, 1);
        let t1 = tau(&sp).unwrap();
        assert_eq!(t1.image(0), (1, 1));
        assert_eq!(t1.image(1), (0, 1));
        for k in 1..=2 {
            let sp = space(k, k);
            let t = tau(&sp).unwrap();
            assert_eq!(t.compose(&t).unwrap(), SignedPerm::identity(2 * k));
            for y in 0..2 * k {
                assert_eq!(sp.degree(y) + sp.degree(t.image(y).0), 1);
            }
        }
        // n = 2: T(y1 ⊗ y2) = (-1)^{deg y1} τy1 ⊗ τy2
        let t = big_t(&sp, 2).unwrap();
        for w in 0..4 {
            let word = sp.unrank_word(w, 2);
            let sign = if sp.degree(word[0]) == 1 { -1 } else { 1 };
            assert_eq!(t.image(w), (sp.rank_word(&[1 - word[0], 1 - word[1]]), sign));
        }
        for k in 1..=2 {
            let sp = space(k, k);
            for n in 1..=4 {
                let t = big_t(&sp, n).unwrap();
                let eps = if (n * (n - 1) / 2) % 2 == 0 { 1 } else { -1 };
                assert_eq!(t.compose(&t).unwrap().scalar(), Some(eps));
                for sigma in generators(Group::Symmetric, n) {
                    let p = phi_star(&sp, &sigma).unwrap();
                    assert_eq!(p.compose(&t).unwrap(), t.compose(&p).unwrap().negated());
                }
                for sigma in generators(Group::Alternating, n) {
                    let p = phi_star(&sp, &sigma).unwrap();
                    assert_eq!(p.compose(&t).unwrap(), t.compose(&p).unwrap());
                }
            }
        }
        assert_eq!(big_t(&sp, 2).unwrap().compose(&big_t(&sp, 2).unwrap()).unwrap().scalar(), Some(-1));
        assert_eq!(big_t(&sp, 4).unwrap().compose(&big_t(&sp, 4).unwrap()).unwrap().scalar(), Some(1));
    }

    #[test]
    fn invariant_space_examples() {
        let f = GaussianRationals;
        let sp = space(1, 1);
        let plus = invariant_space(&f, &sp, 2, InvariantKind::Sym).unwrap();
        let minus = invariant_space(&f, &sp, 2, InvariantKind::Antisym).unwrap();
        assert_eq!((plus.dim(), minus.dim()), (2, 2));
        let t = big_t(&sp, 2).unwrap().to_matrix(&f);
        assert!(plus.image_under(&t).unwrap().equals(&minus).unwrap());
        let classical = space(1, 0);
        assert_eq!(invariant_space(&f, &classical, 2, InvariantKind::Antisym).unwrap().dim(), 0);
    }

    #[test]
    fn swap_exchanges_symmetric_and_antisymmetric() {
        let f = PrimeField::new(1_000_000_009).unwrap();
        for k in 1..=2 {
            let sp = space(k, k);
            for n in 1..=4 {
                let plus = invariant_space(&f, &sp, n, InvariantKind::Sym).unwrap();
                let minus = invariant_space(&f, &sp, n, InvariantKind::Antisym).unwrap();
                let t = big_t(&sp, n).unwrap().to_matrix(&f);
                assert!(plus.image_under(&t).unwrap().equals(&minus).unwrap());
                assert!(minus.image_under(&t).unwrap().equals(&plus).unwrap());
            }
        }
    }

    #[test]
    fn operator_invariants_match_commutants() {
        let f = PrimeField::new(97).unwrap();
        for (k, l, n) in [(1, 1, 2), (1, 1, 3), (2, 1, 3), (1, 0, 3)] {
            let sp = space(k, l);
            for (kind, group) in [
                (InvariantKind::Sym, Group::Symmetric),
                (InvariantKind::Alt, Group::Alternating),
            ] {
                let fixed = operator_invariant_space(&f, &sp, n, kind).unwrap();
                let gens: Vec<_> = generators(group, n)
                    .iter()
                    .map(|g| phi_star(&sp, g).unwrap().to_matrix(&f))
                    .collect();
                if gens.is_empty() {
                    let d = sp.tensor_dim(n).unwrap();
                    assert_eq!(fixed.dim(), d * d);
                    continue;
                }
                assert!(fixed.equals(&commutant(&f, &gens)).unwrap());
            }
        }
        let sp = space(1, 1);
        assert_eq!(operator_invariant_space(&f, &sp, 2, InvariantKind::Sym).unwrap().dim(), 8);
        assert_eq!(operator_invariant_space(&f, &sp, 2, InvariantKind::Alt).unwrap().dim(), 16);
    }

    #[test]
    fn content_blocks_are_invariant() {
        let sp = space(2, 1);
        let blocks = content_blocks(&sp, 3).unwrap();
        assert_eq!(blocks.blocks.iter().map(Vec::len).sum::<usize>(), 27);
        assert_eq!(blocks.blocks.len(), 10);
        for sigma in all_permutations(3) {
            let op = phi_star(&sp, &sigma).unwrap();
            for w in 0..27 {
                assert_eq!(blocks.locate[w].0, blocks.locate[op.image(w).0].0);
            }
        }
    }
}
