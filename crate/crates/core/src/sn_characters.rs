//! Permutations, conjugacy classes and irreducible characters of `S_n`, and
//! the dimension formulas for images and centralizers that follow from them.
//!
//! Character values come from the Murnaghan–Nakayama rule on beta-sets. The
//! multiplicity `m_λ` of the irreducible `J_λ` in the graded tensor power is
//! the inner product of `χ^λ` with the trace of the sign-permutation action,
//! which has the closed form `Π_c (k + (-1)^(c+1) l)` over the cycles of `σ`.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::partitions::{enumerate_partitions, f_lambda, factorial, hook_sets, Partition};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CharacterError {
    #[error("cannot compose permutations of {0} and {1} letters")]
    SizeMismatch(usize, usize),
    #[error("images {0:?} do not form a permutation")]
    NotBijective(Vec<usize>),
    #[error("multiplicity of {lambda} is not an integer: {value}")]
    NonIntegral { lambda: Partition, value: String },
    #[error("the alternating group on {0} letters is trivial; formula needs n >= 2")]
    DegenerateAlternating(u32),
}

/// A permutation of `{0, …, n-1}`, stored as its image list.
///
/// Displayed 1-based in cycle notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self, CharacterError> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || std::mem::replace(&mut seen[i], true) {
                return Err(CharacterError::NotBijective(images));
            }
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// The transposition of letters `a` and `b` (0-based).
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(a, b);
        Permutation { images }
    }

    /// The cycle `c[0] → c[1] → … → c[0]` (0-based letters).
    pub fn cycle(n: usize, c: &[usize]) -> Self {
        let mut images: Vec<usize> = (0..n).collect();
        for (i, &a) in c.iter().enumerate() {
            images[a] = c[(i + 1) % c.len()];
        }
        Permutation { images }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation, CharacterError> {
        if self.len() != other.len() {
            return Err(CharacterError::SizeMismatch(self.len(), other.len()));
        }
        Ok(self.then_unchecked(other))
    }

    pub(crate) fn then_unchecked(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: other.images.iter().map(|&j| self.images[j]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.len()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            let mut c = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                c.push(i);
                i = self.images[i];
            }
            out.push(c);
        }
        out
    }

    pub fn cycle_type(&self) -> Partition {
        Partition::from_composition(self.cycles().iter().map(|c| c.len() as u32).collect())
    }

    /// `+1` or `-1`.
    pub fn sign(&self) -> i32 {
        if (self.len() - self.cycles().len()) % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn is_even(&self) -> bool {
        self.sign() == 1
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles: Vec<_> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if cycles.is_empty() {
            return write!(f, "id");
        }
        for c in cycles {
            let letters: Vec<String> = c.iter().map(|i| (i + 1).to_string()).collect();
            write!(f, "({})", letters.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
pub enum Group {
    Symmetric,
    Alternating,
}

impl Group {
    pub fn contains(self, sigma: &Permutation) -> bool {
        match self {
            Group::Symmetric => true,
            Group::Alternating => sigma.is_even(),
        }
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Group::Symmetric => write!(f, "S"),
            Group::Alternating => write!(f, "A"),
        }
    }
}

/// Adjacent transpositions for `S_n`; the 3-cycles `(1 2 i)` for `A_n`.
pub fn generators(group: Group, n: usize) -> Vec<Permutation> {
    match group {
        Group::Symmetric => (0..n.saturating_sub(1))
            .map(|i| Permutation::transposition(n, i, i + 1))
            .collect(),
        Group::Alternating => (2..n).map(|i| Permutation::cycle(n, &[0, 1, i])).collect(),
    }
}

/// Every element of the group generated by `gens`, by breadth-first closure.
pub fn closure(n: usize, gens: &[Permutation]) -> Vec<Permutation> {
    let id = Permutation::identity(n);
    let mut seen: HashSet<Permutation> = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    let mut out = Vec::new();
    while let Some(g) = queue.pop_front() {
        for s in gens {
            let h = s.then_unchecked(&g);
            if seen.insert(h.clone()) {
                queue.push_back(h);
            }
        }
        out.push(g);
    }
    out.sort();
    out
}

/// All permutations of `n` letters in lexicographic order of image lists.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut cur: Vec<usize> = (0..n).collect();
    let mut out = vec![Permutation {
        images: cur.clone(),
    }];
    loop {
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(Permutation {
            images: cur.clone(),
        });
    }
}

/// All elements of `S_n` or `A_n`.
pub fn group_elements(group: Group, n: usize) -> Vec<Permutation> {
    let mut all = all_permutations(n);
    all.retain(|s| group.contains(s));
    all
}

/// `|C_μ| = n! / z_μ` with `z_μ = Π_i i^{a_i} a_i!`.
pub fn class_size(mu: &Partition) -> BigUint {
    let mut counts: HashMap<u32, u32> = HashMap::new();
    for &p in mu.parts() {
        *counts.entry(p).or_default() += 1;
    }
    let mut z = BigUint::one();
    for (i, a) in counts {
        z *= BigUint::from(i).pow(a) * factorial(a);
    }
    factorial(mu.size()) / z
}

fn beta_set(lambda: &Partition) -> Vec<u32> {
    let len = lambda.length() as u32;
    lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| p + len - 1 - i as u32)
        .collect()
}

fn from_beta(beta: &[u32]) -> Partition {
    let mut b = beta.to_vec();
    b.sort_unstable_by(|x, y| y.cmp(x));
    let len = b.len() as u32;
    Partition::from_composition(
        b.iter()
            .enumerate()
            .map(|(i, &x)| x - (len - 1 - i as u32))
            .collect(),
    )
}

/// `χ^λ(μ)` by the Murnaghan–Nakayama rule.
pub fn mn_character(lambda: &Partition, mu: &Partition) -> BigInt {
    assert_eq!(lambda.size(), mu.size(), "shape and class must have the same size");
    let mut memo = HashMap::new();
    mn_rec(&beta_set(lambda), mu.parts(), &mut memo)
}

fn mn_rec(beta: &[u32], mu: &[u32], memo: &mut HashMap<(Vec<u32>, usize), BigInt>) -> BigInt {
    let Some((&h, rest)) = mu.split_first() else {
        return BigInt::one();
    };
    let key = (beta.to_vec(), mu.len());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let members: HashSet<u32> = beta.iter().copied().collect();
    let mut total = BigInt::zero();
    for (idx, &b) in beta.iter().enumerate() {
        if b < h || members.contains(&(b - h)) {
            continue;
        }
        let target = b - h;
        let crossed = beta.iter().filter(|&&x| target < x && x < b).count();
        let mut next = beta.to_vec();
        next[idx] = target;
        next.sort_unstable_by(|x, y| y.cmp(x));
        let value = mn_rec(&next, rest, memo);
        if crossed % 2 == 0 {
            total += value;
        } else {
            total -= value;
        }
    }
    memo.insert(key, total.clone());
    total
}

/// Rim-hook removal on the shape, for callers that want the shapes themselves.
pub fn remove_rim_hooks(lambda: &Partition, h: u32) -> Vec<(Partition, i32)> {
    let beta = beta_set(lambda);
    let members: HashSet<u32> = beta.iter().copied().collect();
    let mut out = Vec::new();
    for (idx, &b) in beta.iter().enumerate() {
        if b < h || members.contains(&(b - h)) {
            continue;
        }
        let crossed = beta.iter().filter(|&&x| b - h < x && x < b).count();
        let mut next = beta.clone();
        next[idx] = b - h;
        out.push((from_beta(&next), if crossed % 2 == 0 { 1 } else { -1 }));
    }
    out
}

/// Character table of `S_n`; rows are shapes, columns are cycle types, both
/// in canonical partition order.
#[derive(Debug, Clone)]
pub struct CharacterTable {
    n: u32,
    partitions: Vec<Partition>,
    class_sizes: Vec<BigUint>,
    values: Vec<Vec<BigInt>>,
}

impl CharacterTable {
    pub fn new(n: u32) -> Self {
        let partitions = enumerate_partitions(n);
        let class_sizes = partitions.iter().map(class_size).collect();
        let values = partitions
            .par_iter()
            .map(|lambda| partitions.iter().map(|mu| mn_character(lambda, mu)).collect())
            .collect();
        CharacterTable {
            n,
            partitions,
            class_sizes,
            values,
        }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn index_of(&self, lambda: &Partition) -> usize {
        self.partitions
            .binary_search_by(|p| lambda.cmp(p))
            .unwrap_or_else(|_| panic!("{lambda} is not a partition of {}", self.n))
    }

    pub fn class_size(&self, mu: &Partition) -> &BigUint {
        &self.class_sizes[self.index_of(mu)]
    }

    pub fn value(&self, lambda: &Partition, mu: &Partition) -> &BigInt {
        &self.values[self.index_of(lambda)][self.index_of(mu)]
    }

    pub fn row(&self, lambda: &Partition) -> &[BigInt] {
        &self.values[self.index_of(lambda)]
    }

    /// `χ^λ(σ)` for a concrete permutation.
    pub fn at(&self, lambda: &Partition, sigma: &Permutation) -> &BigInt {
        self.value(lambda, &sigma.cycle_type())
    }

    /// `Σ_μ |C_μ| χ^λ(μ) χ^ν(μ)`, which is `n!` on the diagonal and 0 off it.
    pub fn inner_product(&self, lambda: &Partition, nu: &Partition) -> BigInt {
        let a = self.row(lambda);
        let b = self.row(nu);
        self.class_sizes
            .iter()
            .zip(a.iter().zip(b))
            .map(|(c, (x, y))| BigInt::from(c.clone()) * x * y)
            .sum()
    }
}

/// Trace of the sign-permutation operator of any `σ` with cycle type `μ`.
pub fn phi_star_trace(mu: &Partition, k: usize, l: usize) -> BigInt {
    let (k, l) = (BigInt::from(k), BigInt::from(l));
    mu.parts()
        .iter()
        .map(|&c| if c % 2 == 1 { &k + &l } else { &k - &l })
        .product()
}

/// Multiplicities `m_λ` of every irreducible of `S_n` in the graded tensor power.
#[derive(Debug, Clone)]
pub struct Multiplicities {
    pub k: usize,
    pub l: usize,
    pub n: u32,
    values: Vec<(Partition, BigUint)>,
}

impl Multiplicities {
    pub fn get(&self, lambda: &Partition) -> BigUint {
        self.values
            .binary_search_by(|(p, _)| lambda.cmp(p))
            .map(|i| self.values[i].1.clone())
            .unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &BigUint)> {
        self.values.iter().map(|(p, m)| (p, m))
    }
}

pub fn multiplicities_with(
    table: &CharacterTable,
    k: usize,
    l: usize,
) -> Result<Multiplicities, CharacterError> {
    let n = table.n();
    let order = BigInt::from(factorial(n));
    let traces: Vec<BigInt> = table
        .partitions()
        .iter()
        .zip(&table.class_sizes)
        .map(|(mu, c)| BigInt::from(c.clone()) * phi_star_trace(mu, k, l))
        .collect();
    let mut values = Vec::with_capacity(table.partitions().len());
    for lambda in table.partitions() {
        let sum: BigInt = table.row(lambda).iter().zip(&traces).map(|(x, t)| x * t).sum();
        let (q, r) = sum.div_rem(&order);
        if !r.is_zero() || q.is_negative() {
            return Err(CharacterError::NonIntegral {
                lambda: lambda.clone(),
                value: format!("{sum}/{order}"),
            });
        }
        values.push((lambda.clone(), q.to_biguint().unwrap()));
    }
    Ok(Multiplicities { k, l, n, values })
}

pub fn multiplicities(k: usize, l: usize, n: u32) -> Result<Multiplicities, CharacterError> {
    multiplicities_with(&CharacterTable::new(n), k, l)
}

fn square(x: &BigUint) -> BigUint {
    x * x
}

/// `dim φ*(F S_n) = Σ_{λ ∈ H} (f^λ)²`.
pub fn dim_image_s(k: usize, l: usize, n: u32) -> BigUint {
    hook_sets(k, l, n).h.iter().map(|p| square(&f_lambda(p))).sum()
}

/// `dim φ*(F A_n)`: each conjugate pair meeting the hook contributes one
/// `(f^λ)²`, each self-conjugate shape in the hook half of it.
pub fn dim_image_a(k: usize, l: usize, n: u32) -> Result<BigUint, CharacterError> {
    if n < 2 {
        return Err(CharacterError::DegenerateAlternating(n));
    }
    let hs = hook_sets(k, l, n);
    let mut total = BigUint::zero();
    for lambda in &hs.h {
        let conj = lambda.conjugate();
        let f2 = square(&f_lambda(lambda));
        if conj == *lambda {
            total += f2 / 2u32;
        } else if !hs.contains(&conj) || conj < *lambda {
            total += f2;
        }
    }
    Ok(total)
}

pub fn dim_centralizer_s_with(mult: &Multiplicities) -> BigUint {
    mult.iter().map(|(_, m)| square(m)).sum()
}

pub fn dim_centralizer_a_with(mult: &Multiplicities) -> Result<BigUint, CharacterError> {
    if mult.n < 2 {
        return Err(CharacterError::DegenerateAlternating(mult.n));
    }
    let mut total = BigUint::zero();
    for (lambda, m) in mult.iter() {
        let conj = lambda.conjugate();
        if conj == *lambda {
            total += square(m) * 2u32;
        } else if conj < *lambda {
            let pair = m + mult.get(&conj);
            total += square(&pair);
        }
    }
    Ok(total)
}

/// `dim End_{F S_n}(V^⊗n) = Σ m_λ²`.
pub fn dim_centralizer_s(k: usize, l: usize, n: u32) -> Result<BigUint, CharacterError> {
    Ok(dim_centralizer_s_with(&multiplicities(k, l, n)?))
}

/// `dim End_{F A_n}(V^⊗n)`: over `A_n` the modules `J_λ` and `J_λ'` coincide
/// and self-conjugate `J_λ` splits in two.
pub fn dim_centralizer_a(k: usize, l: usize, n: u32) -> Result<BigUint, CharacterError> {
    dim_centralizer_a_with(&multiplicities(k, l, n)?)
}

/// `(numerator, denominator)` of the coefficient `f^λ χ^λ(σ) / n!` of `σ` in
/// the central idempotent `e_λ`, with the common denominator `n!`.
pub fn idempotent_numerator(table: &CharacterTable, lambda: &Partition, mu: &Partition) -> BigInt {
    BigInt::from(f_lambda(lambda)) * table.value(lambda, mu)
}
