//! Images of the central idempotents `e_λ = (f^λ/n!) Σ_σ χ^λ(σ) σ` under the
//! sign-permutation action.
//!
//! Every `φ*_σ` preserves the content (multiset of letters) of a basis word,
//! so each projector is block diagonal and is stored one dense block per content.

use num_bigint::BigInt;
use rayon::prelude::*;

use super::{VerifyError, MAX_ACTION_ENTRIES, MAX_COMMUTANT_UNKNOWNS};
use crate::exact_linalg::{DenseMatrix, Field, SparseMatrix};
use crate::partitions::{f_lambda, factorial, Partition};
use crate::sn_characters::{all_permutations, CharacterTable, Multiplicities, multiplicities_with};
use crate::super_action::{content_blocks, phi_star, ContentBlocks, GradedSpace, SignedPerm};

/// A block-diagonal operator, one dense block per content class.
#[derive(Debug, Clone, PartialEq)]
pub struct BlockOperator<E> {
    pub blocks: Vec<DenseMatrix<E>>,
}

impl<E: Clone + PartialEq + Send + Sync> BlockOperator<E> {
    pub fn zero<F: Field<Elem = E>>(field: &F, content: &ContentBlocks) -> Self {
        BlockOperator {
            blocks: content
                .blocks
                .iter()
                .map(|b| DenseMatrix::zero(field, b.len(), b.len()))
                .collect(),
        }
    }

    pub fn identity<F: Field<Elem = E>>(field: &F, content: &ContentBlocks) -> Self {
        BlockOperator {
            blocks: content
                .blocks
                .iter()
                .map(|b| DenseMatrix::identity(field, b.len()))
                .collect(),
        }
    }

    pub fn add<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        BlockOperator {
            blocks: self
                .blocks
                .iter()
                .zip(&other.blocks)
                .map(|(a, b)| a.add(field, b))
                .collect(),
        }
    }

    pub fn mul<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        BlockOperator {
            blocks: self
                .blocks
                .par_iter()
                .zip(&other.blocks)
                .map(|(a, b)| a.mul(field, b))
                .collect(),
        }
    }

    pub fn rank<F: Field<Elem = E>>(&self, field: &F) -> usize {
        self.blocks.par_iter().map(|b| b.rank(field)).sum()
    }

    pub fn is_zero<F: Field<Elem = E>>(&self, field: &F) -> bool {
        self.blocks.iter().all(|b| b.is_zero(field))
    }
}

#[derive(Debug, Clone)]
pub struct IsotypicComponent<E> {
    pub lambda: Partition,
    /// `φ*(e_λ)`.
    pub projector: BlockOperator<E>,
    pub rank: usize,
}

#[derive(Debug, Clone)]
pub struct IsotypicData<F: Field> {
    pub space: GradedSpace,
    pub n: usize,
    pub content: ContentBlocks,
    pub multiplicities: Multiplicities,
    pub components: Vec<IsotypicComponent<F::Elem>>,
}

fn check_size(content: &ContentBlocks, n: usize) -> Result<(), VerifyError> {
    let entries: usize = content.blocks.iter().map(|b| b.len() * b.len()).sum();
    if entries > MAX_COMMUTANT_UNKNOWNS {
        return Err(VerifyError::ResourceBound(format!(
            "projector blocks hold {entries} entries, limit {MAX_COMMUTANT_UNKNOWNS}"
        )));
    }
    let action = (1..=n).product::<usize>().saturating_mul(content.locate.len());
    if action > MAX_ACTION_ENTRIES {
        return Err(VerifyError::ResourceBound(format!(
            "n!·d = {action} exceeds {MAX_ACTION_ENTRIES}"
        )));
    }
    Ok(())
}

/// Builds `φ*(e_λ)` for every `λ ⊢ n` and records its rank.
pub fn isotypic<F: Field>(
    field: &F,
    space: &GradedSpace,
    n: usize,
) -> Result<IsotypicData<F>, VerifyError> {
    let content = content_blocks(space, n)?;
    check_size(&content, n)?;
    let table = CharacterTable::new(n as u32);
    let perms = all_permutations(n);
    let ops: Vec<(SignedPerm, Partition)> = perms
        .par_iter()
        .map(|s| Ok((phi_star(space, s)?, s.cycle_type())))
        .collect::<Result<_, VerifyError>>()?;
    let order = BigInt::from(factorial(n as u32));

    let components = table
        .partitions()
        .par_iter()
        .map(|lambda| {
            // integer matrix Σ_σ χ^λ(σ) φ*_σ, scaled by f^λ/n! at the end
            let mut acc: Vec<Vec<i64>> =
                content.blocks.iter().map(|b| vec![0; b.len() * b.len()]).collect();
            for (op, mu) in &ops {
                let chi = i64::try_from(table.value(lambda, mu)).expect("character fits in i64");
                if chi == 0 {
                    continue;
                }
                for w in 0..op.dim() {
                    let (t, s) = op.image(w);
                    let (b, col) = content.locate[w];
                    let row = content.locate[t].1;
                    let size = content.blocks[b].len();
                    acc[b][row * size + col] += s as i64 * chi;
                }
            }
            let scale = field.from_ratio(&BigInt::from(f_lambda(lambda)), &order);
            let blocks: Vec<DenseMatrix<F::Elem>> = acc
                .into_iter()
                .zip(&content.blocks)
                .map(|(entries, b)| {
                    let mut m = DenseMatrix::zero(field, b.len(), b.len());
                    for (idx, v) in entries.into_iter().enumerate() {
                        if v != 0 {
                            m.set(idx / b.len(), idx % b.len(), field.mul(&scale, &field.from_i64(v)));
                        }
                    }
                    m
                })
                .collect();
            let projector = BlockOperator { blocks };
            let rank = projector.rank(field);
            IsotypicComponent {
                lambda: lambda.clone(),
                projector,
                rank,
            }
        })
        .collect();

    let multiplicities = multiplicities_with(&table, space.k, space.l)?;
    Ok(IsotypicData {
        space: *space,
        n,
        content,
        multiplicities,
        components,
    })
}

impl<F: Field> IsotypicData<F> {
    pub fn component(&self, lambda: &Partition) -> &IsotypicComponent<F::Elem> {
        self.components
            .iter()
            .find(|c| &c.lambda == lambda)
            .expect("every partition of n has a component")
    }

    /// `Σ_{λ ∈ shapes} φ*(e_λ)`.
    pub fn sum_projector(&self, field: &F, shapes: &[Partition]) -> BlockOperator<F::Elem> {
        shapes.iter().fold(BlockOperator::zero(field, &self.content), |acc, l| {
            acc.add(field, &self.component(l).projector)
        })
    }

    /// Idempotency, pairwise orthogonality and completeness of the projectors,
    /// as `(name, holds)` pairs.
    pub fn relation_checks(&self, field: &F) -> Vec<(String, bool)> {
        let mut out = Vec::new();
        let mut total = BlockOperator::zero(field, &self.content);
        for (i, a) in self.components.iter().enumerate() {
            total = total.add(field, &a.projector);
            out.push((
                format!("projector {} is idempotent", a.lambda),
                a.projector.mul(field, &a.projector) == a.projector,
            ));
            for b in &self.components[i + 1..] {
                let ab = a.projector.mul(field, &b.projector);
                let ba = b.projector.mul(field, &a.projector);
                out.push((
                    format!("projectors {} and {} are orthogonal", a.lambda, b.lambda),
                    ab.is_zero(field) && ba.is_zero(field),
                ));
            }
        }
        out.push((
            "projectors sum to the identity".to_string(),
            total == BlockOperator::identity(field, &self.content),
        ));
        out
    }
}

/// Coordinates on a sum of content-graded pieces `W = ⊕_B W_B`, taken from
/// the reduced echelon basis of each `W_B`. A vector of `W` has coordinate
/// `j` equal to its entry at the `j`-th pivot.
#[derive(Debug, Clone)]
pub struct SubmoduleCoordinates<E> {
    blocks: Vec<BlockBasis<E>>,
    offsets: Vec<usize>,
    dim: usize,
}

#[derive(Debug, Clone)]
struct BlockBasis<E> {
    pivots: Vec<usize>,
    rows: Vec<Vec<E>>,
}

impl<E: Clone + PartialEq + Send + Sync> SubmoduleCoordinates<E> {
    /// Coordinates on the column space of `projector`.
    pub fn from_projector<F: Field<Elem = E>>(field: &F, projector: &BlockOperator<E>) -> Self {
        let blocks: Vec<BlockBasis<E>> = projector
            .blocks
            .par_iter()
            .map(|m| {
                let rows = m.column_space_basis(field);
                let pivots = rows
                    .iter()
                    .map(|r| r.iter().position(|x| !field.is_zero(x)).unwrap())
                    .collect();
                BlockBasis { pivots, rows }
            })
            .collect();
        let mut offsets = Vec::with_capacity(blocks.len());
        let mut dim = 0;
        for b in &blocks {
            offsets.push(dim);
            dim += b.rows.len();
        }
        SubmoduleCoordinates {
            blocks,
            offsets,
            dim,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Matrix of `op` restricted to `W`, which `op` must preserve.
    pub fn restrict<F: Field<Elem = E>>(
        &self,
        field: &F,
        content: &ContentBlocks,
        op: &SignedPerm,
    ) -> SparseMatrix<E> {
        let inv = op.inverse();
        let mut rows = Vec::with_capacity(self.dim);
        for (b, basis) in self.blocks.iter().enumerate() {
            let off = self.offsets[b];
            for &p in &basis.pivots {
                // (op v)[x] = s · v[op⁻¹ x]
                let (src, s) = inv.image(content.blocks[b][p]);
                let q = content.locate[src].1;
                let row = basis
                    .rows
                    .iter()
                    .enumerate()
                    .filter(|(_, r)| !field.is_zero(&r[q]))
                    .map(|(i, r)| {
                        let v = if s < 0 { field.neg(&r[q]) } else { r[q].clone() };
                        (off + i, v)
                    })
                    .collect();
                rows.push(row);
            }
        }
        SparseMatrix::from_rows(self.dim, rows)
    }
}
