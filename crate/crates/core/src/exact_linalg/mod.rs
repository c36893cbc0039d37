//! Exact linear algebra over `Q(i)` and over prime fields `F_p` with `p ≡ 1 (mod 4)`.
//!
//! Everything is generic over [`Field`]. Modular runs are certified by
//! repeating the computation over two independently drawn primes and
//! refusing to answer when they disagree.

mod dense;
mod field;
mod nullspace;
mod sparse;
mod subspace;

use std::fmt::Debug;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;
use thiserror::Error;

pub use dense::DenseMatrix;
pub use field::{is_prime_u64, Field, GaussQ, GaussianRationals, PrimeField};
pub use nullspace::{commutant, nullspace, rank, rref};
pub use sparse::{axpy, normalize, scale, SparseMatrix, SparseVec};
pub use subspace::Subspace;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("ambient dimensions differ: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },
    #[error("modular results disagree between {first} and {second}: {detail}")]
    PrimeDisagreement {
        first: String,
        second: String,
        detail: String,
    },
}

/// Number of matrix unknowns above which `auto` switches to modular arithmetic.
pub const AUTO_EXACT_LIMIT: usize = 4096;

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Arithmetic {
    Exact,
    Modular,
    Auto,
}

impl Arithmetic {
    /// Settles `auto` for a problem with the given number of unknowns.
    pub fn resolve(self, unknowns: usize) -> Arithmetic {
        match self {
            Arithmetic::Auto if unknowns > AUTO_EXACT_LIMIT => Arithmetic::Modular,
            Arithmetic::Auto => Arithmetic::Exact,
            other => other,
        }
    }
}

impl FromStr for Arithmetic {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "exact" => Ok(Arithmetic::Exact),
            "modular" => Ok(Arithmetic::Modular),
            "auto" => Ok(Arithmetic::Auto),
            other => Err(format!("unknown arithmetic mode '{other}'")),
        }
    }
}

/// A computation that can be carried out over any admissible field.
pub trait FieldTask {
    type Output: PartialEq + Debug + Send;

    fn run<F: Field>(&self, field: &F) -> Self::Output;
}

/// Result of a task together with the field(s) it was computed over.
#[derive(Debug, Clone)]
pub struct Certified<T> {
    pub value: T,
    pub fields: Vec<String>,
}

/// Two primes derived deterministically from `seed`.
pub fn prime_pair(seed: u64) -> (PrimeField, PrimeField) {
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    let first = PrimeField::random(&mut rng);
    loop {
        let second = PrimeField::random(&mut rng);
        if second != first {
            return (first, second);
        }
    }
}

/// Runs `task` under a resolved arithmetic mode.
///
/// `mode` must not be `Auto`; call [`Arithmetic::resolve`] first.
pub fn run_certified<T: FieldTask + Sync>(
    task: &T,
    mode: Arithmetic,
    seed: u64,
) -> Result<Certified<T::Output>, LinalgError> {
    match mode {
        Arithmetic::Exact | Arithmetic::Auto => {
            debug_assert!(mode != Arithmetic::Auto, "resolve auto before running");
            let f = GaussianRationals;
            Ok(Certified {
                value: task.run(&f),
                fields: vec![f.describe()],
            })
        }
        Arithmetic::Modular => {
            let (p, q) = prime_pair(seed);
            let (a, b) = rayon::join(|| task.run(&p), || task.run(&q));
            if a != b {
                return Err(LinalgError::PrimeDisagreement {
                    first: p.describe(),
                    second: q.describe(),
                    detail: format!("{a:?} vs {b:?}"),
                });
            }
            Ok(Certified {
                value: a,
                fields: vec![p.describe(), q.describe()],
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    struct RankOf(Vec<Vec<i64>>);

    impl FieldTask for RankOf {
        type Output = usize;

        fn run<F: Field>(&self, field: &F) -> usize {
            let cols = self.0[0].len();
            let rows = self
                .0
                .iter()
                .map(|r| {
                    r.iter()
                        .enumerate()
                        .filter(|(_, v)| **v != 0)
                        .map(|(j, v)| (j, field.from_i64(*v)))
                        .collect()
                })
                .collect();
            rank(field, &SparseMatrix::from_rows(cols, rows))
        }
    }

    #[test]
    fn auto_resolution_threshold() {
        assert_eq!(Arithmetic::Auto.resolve(4096), Arithmetic::Exact);
        assert_eq!(Arithmetic::Auto.resolve(4097), Arithmetic::Modular);
        assert_eq!(Arithmetic::Exact.resolve(1 << 20), Arithmetic::Exact);
        assert_eq!("modular".parse::<Arithmetic>(), Ok(Arithmetic::Modular));
        assert!("fast".parse::<Arithmetic>().is_err());
    }

    #[test]
    fn prime_pair_is_seeded() {
        assert_eq!(prime_pair(3), prime_pair(3));
        assert_ne!(prime_pair(3).0, prime_pair(4).0);
    }

    #[test]
    fn certified_modes_agree() {
        let task = RankOf(vec![vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 5]]);
        let exact = run_certified(&task, Arithmetic::Exact, 0).unwrap();
        let modular = run_certified(&task, Arithmetic::Modular, 0).unwrap();
        assert_eq!(exact.value, 2);
        assert_eq!(modular.value, 2);
        assert_eq!(modular.fields.len(), 2);
    }
}
