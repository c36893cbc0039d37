//! Integer partitions and the hook-shaped families built from them.
//!
//! Partitions are stored as weakly decreasing vectors of positive parts; the
//! empty vector is the unique partition of zero. The canonical order on
//! partitions of a fixed `n` is left-lexicographic, largest first, so that
//! `(4) > (3,1) > (2,2) > (2,1,1) > (1,1,1,1)`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("parts must be positive, found a zero at position {0}")]
    ZeroPart(usize),
    #[error("parts must be weakly decreasing, found {prev} followed by {next}")]
    Increasing { prev: u32, next: u32 },
}

/// A partition of `n`, i.e. a weakly decreasing list of positive integers.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<u32>,
    n: u32,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self, PartitionError> {
        for (i, &p) in parts.iter().enumerate() {
            if p == 0 {
                return Err(PartitionError::ZeroPart(i));
            }
            if i > 0 && parts[i - 1] < p {
                return Err(PartitionError::Increasing {
                    prev: parts[i - 1],
                    next: p,
                });
            }
        }
        Ok(Self::from_sorted(parts))
    }

    /// Builds a partition from parts already known to be weakly decreasing and positive.
    pub(crate) fn from_sorted(parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.iter().all(|&p| p > 0));
        let n = parts.iter().sum();
        Partition { parts, n }
    }

    /// Sorts and strips zeros from an arbitrary composition.
    pub fn from_composition(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::from_sorted(parts)
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new(), n: 0 }
    }

    /// The one-row partition `(n)`.
    pub fn row(n: u32) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Self::from_sorted(vec![n])
        }
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: u32) -> Self {
        Self::from_sorted(vec![1; n as usize])
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u32 {
        self.n
    }

    /// Number of nonzero parts.
    pub fn length(&self) -> usize {
        self.parts.len()
    }

    /// The `i`-th part, counting from 1; parts past the end are zero and
    /// `λ_0` is treated as unbounded.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            return u32::MAX;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let cols = (0..width)
            .map(|j| self.parts.iter().take_while(|&&p| p > j).count() as u32)
            .collect();
        Self::from_sorted(cols)
    }

    pub fn is_self_conjugate(&self) -> bool {
        *self == self.conjugate()
    }

    /// Side length of the largest square contained in the diagram.
    pub fn durfee_size(&self) -> usize {
        self.parts
            .iter()
            .enumerate()
            .take_while(|(i, &p)| p as usize > *i)
            .count()
    }

    /// Whether the diagram fits in the `(k, l)` hook: `λ_{k+1} ≤ l`.
    pub fn in_hook(&self, k: usize, l: usize) -> bool {
        self.part(k + 1) as usize <= l
    }

    /// Hook lengths of every cell, row by row.
    pub fn hook_lengths(&self) -> Vec<u32> {
        let conj = self.conjugate();
        let mut out = Vec::with_capacity(self.n as usize);
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row as usize {
                let arm = row - 1 - j as u32;
                let leg = conj.parts[j] - 1 - i as u32;
                out.push(arm + leg + 1);
            }
        }
        out
    }

    /// Number of standard Young tableaux of this shape, by the hook-length formula.
    pub fn standard_tableaux(&self) -> BigUint {
        if self.n == 0 {
            return BigUint::one();
        }
        factorial(self.n) / product_u32(self.hook_lengths())
    }

    /// Sign of the conjugacy class of cycle type `self`: `(-1)^(n - #cycles)`.
    pub fn class_sign(&self) -> i32 {
        if (self.n as usize - self.parts.len()) % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.parts.cmp(&other.parts)
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl serde::Serialize for Partition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

/// `f^λ`, the number of standard Young tableaux of shape `λ`.
pub fn f_lambda(lambda: &Partition) -> BigUint {
    lambda.standard_tableaux()
}

pub fn factorial(n: u32) -> BigUint {
    product_u32(1..=n)
}

/// Product of small factors, batched through a machine word before touching the big integer.
pub(crate) fn product_u32(factors: impl IntoIterator<Item = u32>) -> BigUint {
    let mut acc = BigUint::one();
    let mut word: u64 = 1;
    for f in factors {
        match word.checked_mul(f as u64) {
            Some(w) => word = w,
            None => {
                acc *= word;
                word = f as u64;
            }
        }
    }
    acc * word
}

/// All partitions of `n`, largest first in left-lexicographic order.
pub fn enumerate_partitions(n: u32) -> Vec<Partition> {
    enumerate_bounded(n, |_| u32::MAX)
}

/// All partitions of `n` lying in the `(k, l)` hook, in canonical order.
///
/// Generated directly (rows past the `k`-th are capped at `l`), so the cost is
/// proportional to the size of the hook family, not to `p(n)`.
pub fn enumerate_hook_partitions(k: usize, l: usize, n: u32) -> Vec<Partition> {
    enumerate_bounded(n, |row| if row < k { u32::MAX } else { l as u32 })
}

fn enumerate_bounded(n: u32, cap: impl Fn(usize) -> u32) -> Vec<Partition> {
    fn rec(
        rem: u32,
        max_part: u32,
        cur: &mut Vec<u32>,
        cap: &dyn Fn(usize) -> u32,
        out: &mut Vec<Partition>,
    ) {
        if rem == 0 {
            out.push(Partition::from_sorted(cur.clone()));
            return;
        }
        let top = rem.min(max_part).min(cap(cur.len()));
        for p in (1..=top).rev() {
            cur.push(p);
            rec(rem - p, p, cur, cap, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &cap, &mut out);
    out
}

/// The hook family `H(k,l;n)` split into `H0` (conjugate also in the hook) and `H1`.
#[derive(Debug, Clone)]
pub struct HookSets {
    pub k: usize,
    pub l: usize,
    pub n: u32,
    pub h: Vec<Partition>,
    pub h0: Vec<Partition>,
    pub h1: Vec<Partition>,
}

impl HookSets {
    pub fn contains(&self, lambda: &Partition) -> bool {
        self.h.binary_search_by(|p| lambda.cmp(p)).is_ok()
    }

    pub fn in_h0(&self, lambda: &Partition) -> bool {
        self.h0.binary_search_by(|p| lambda.cmp(p)).is_ok()
    }

    pub fn in_h1(&self, lambda: &Partition) -> bool {
        self.h1.binary_search_by(|p| lambda.cmp(p)).is_ok()
    }
}

pub fn hook_sets(k: usize, l: usize, n: u32) -> HookSets {
    let h = enumerate_hook_partitions(k, l, n);
    let (h0, h1) = h
        .iter()
        .cloned()
        .partition(|lambda| lambda.conjugate().in_hook(k, l));
    HookSets { k, l, n, h, h0, h1 }
}

/// Self-conjugate and non-self-conjugate members of `H(k,k;n)`.
#[derive(Debug, Clone)]
pub struct SelfConjSets {
    pub k: usize,
    pub n: u32,
    pub sc: Vec<Partition>,
    pub nsc: Vec<Partition>,
}

pub fn sc_split(k: usize, n: u32) -> SelfConjSets {
    let (sc, nsc) = enumerate_hook_partitions(k, k, n)
        .into_iter()
        .partition(Partition::is_self_conjugate);
    SelfConjSets { k, n, sc, nsc }
}

/// Table of `Par_j(m)`, the number of partitions of `m` into at most `j` parts,
/// for `j ≤ max_parts` and `m ≤ max_size`.
#[derive(Debug, Clone)]
pub struct ParTable {
    table: Vec<Vec<BigUint>>,
}

impl ParTable {
    pub fn new(max_parts: usize, max_size: usize) -> Self {
        let mut table = vec![vec![BigUint::zero(); max_size + 1]; max_parts + 1];
        table[0][0] = BigUint::one();
        for j in 1..=max_parts {
            table[j][0] = BigUint::one();
            for m in 1..=max_size {
                let mut v = table[j - 1][m].clone();
                if m >= j {
                    v += &table[j][m - j];
                }
                table[j][m] = v;
            }
        }
        ParTable { table }
    }

    pub fn get(&self, parts: usize, size: usize) -> &BigUint {
        &self.table[parts][size]
    }
}

/// Number of partitions of `m` into at most `k` parts.
pub fn par_k(k: usize, m: usize) -> BigUint {
    ParTable::new(k, m).get(k, m).clone()
}

/// Self-conjugate members of `H(k,k;n)` containing the `k × k` square.
///
/// Such a partition is the square plus an arm partition `μ` with at most `k`
/// parts mirrored as its own leg, so the count is `Par_k((n - k²)/2)`.
pub fn count_sc_boxed(k: usize, n: u32) -> BigUint {
    let n = n as usize;
    match n.checked_sub(k * k) {
        Some(m) if m % 2 == 0 => par_k(k, m / 2),
        _ => BigUint::zero(),
    }
}

/// `|H_sc(k,k;n)|`.
///
/// A self-conjugate shape lies in the `(k,k)` hook iff its Durfee square has
/// side at most `k`, so the count splits by Durfee size into boxed counts.
pub fn count_self_conjugate_hook(k: usize, n: u32) -> BigUint {
    (1..=k).map(|j| count_sc_boxed(j, n)).sum::<BigUint>()
        + if n == 0 { BigUint::one() } else { BigUint::zero() }
}

/// `|H(k,l;n)|` without enumerating.
///
/// Conditioning on `t = λ_{k+1}`: the tail below row `k` is a partition of some
/// `s` with largest part exactly `t` (`Par_t(s - t)` choices) and the first `k`
/// rows, each at least `t`, contribute `Par_k(n - s - k t)`.
pub fn count_hook(k: usize, l: usize, n: u32) -> BigUint {
    let n = n as usize;
    let table = ParTable::new(k.max(l.min(n)), n);
    let mut total = table.get(k, n).clone();
    for t in 1..=l.min(n) {
        let mut s = t;
        while s + k * t <= n {
            let tail = table.get(t, s - t);
            if !tail.is_zero() {
                total += tail * table.get(k, n - s - k * t);
            }
            s += 1;
        }
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::{BTreeSet, HashMap};

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    /// All weakly decreasing compositions, found by filtering every composition of n.
    fn brute_partitions(n: u32) -> BTreeSet<Vec<u32>> {
        fn compositions(n: u32) -> Vec<Vec<u32>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for first in 1..=n {
                for mut rest in compositions(n - first) {
                    rest.insert(0, first);
                    out.push(rest);
                }
            }
            out
        }
        compositions(n)
            .into_iter()
            .filter(|c| c.windows(2).all(|w| w[0] >= w[1]))
            .collect()
    }

    /// Counts standard tableaux by removing the cell holding the largest entry.
    fn brute_syt(parts: &[u32], memo: &mut HashMap<Vec<u32>, u64>) -> u64 {
        if parts.iter().all(|&x| x == 0) {
            return 1;
        }
        if let Some(&v) = memo.get(parts) {
            return v;
        }
        let mut total = 0;
        for i in 0..parts.len() {
            let below = parts.get(i + 1).copied().unwrap_or(0);
            if parts[i] > below {
                let mut smaller = parts.to_vec();
                smaller[i] -= 1;
                total += brute_syt(&smaller, memo);
            }
        }
        memo.insert(parts.to_vec(), total);
        total
    }

    /// Euler's pentagonal recurrence for p(n).
    fn partition_count(n: usize) -> u64 {
        let mut p = vec![0i64; n + 1];
        p[0] = 1;
        for i in 1..=n {
            let mut k = 1i64;
            loop {
                let g1 = (k * (3 * k - 1) / 2) as usize;
                if g1 > i {
                    break;
                }
                let sign = if k % 2 == 1 { 1 } else { -1 };
                p[i] += sign * p[i - g1];
                let g2 = (k * (3 * k + 1) / 2) as usize;
                if g2 <= i {
                    p[i] += sign * p[i - g2];
                }
                k += 1;
            }
        }
        p[n] as u64
    }

    #[test]
    fn rejects_malformed_parts() {
        assert_eq!(Partition::new(vec![2, 0]), Err(PartitionError::ZeroPart(1)));
        assert!(matches!(
            Partition::new(vec![1, 2]),
            Err(PartitionError::Increasing { prev: 1, next: 2 })
        ));
    }

    #[test]
    fn enumerates_in_descending_lex_order() {
        assert_eq!(enumerate_partitions(0), vec![Partition::empty()]);
        let four = enumerate_partitions(4);
        let expected = [
            p(&[4]),
            p(&[3, 1]),
            p(&[2, 2]),
            p(&[2, 1, 1]),
            p(&[1, 1, 1, 1]),
        ];
        assert_eq!(four, expected);
        assert_eq!(enumerate_partitions(10).len(), 42);
    }

    #[test]
    fn enumeration_matches_brute_force_and_pentagonal_counts() {
        for n in 0..=12u32 {
            let got: BTreeSet<Vec<u32>> = enumerate_partitions(n)
                .into_iter()
                .map(|l| l.parts().to_vec())
                .collect();
            assert_eq!(got, brute_partitions(n), "n = {n}");
        }
        for n in 0..=30 {
            assert_eq!(enumerate_partitions(n as u32).len() as u64, partition_count(n));
        }
    }

    #[test]
    fn conjugates() {
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(p(&[2, 1]).conjugate(), p(&[2, 1]));
        assert_eq!(p(&[5]).conjugate(), p(&[1, 1, 1, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
    }

    #[test]
    fn hook_membership() {
        assert!(!p(&[3, 2, 1]).in_hook(1, 1));
        assert!(p(&[3, 2, 1]).in_hook(2, 1));
        for n in 1..20 {
            assert!(Partition::row(n).in_hook(1, 0));
        }
        assert!(Partition::empty().in_hook(0, 0));
    }

    #[test]
    fn hook_sets_examples() {
        let hs = hook_sets(1, 1, 5);
        assert_eq!(hs.h.len(), 5);
        assert!(hs.h1.is_empty());

        // (1,1,1,1) has third part 1 <= l, so every partition of 4 is in the hook
        let hs = hook_sets(2, 1, 4);
        assert!(hs.in_h0(&p(&[2, 2])));
        assert!(hs.in_h0(&p(&[4])));
        assert_eq!(hs.h.len(), 5);
        assert!(hs.h1.is_empty());

        // first nonempty second-part set for this hook: (3,3)' = (2,2,2) is not in it
        let hs = hook_sets(2, 1, 6);
        assert_eq!(hs.h1, vec![p(&[3, 3])]);

        assert!(hook_sets(2, 2, 6).h1.is_empty());
    }

    #[test]
    fn hook_sets_algebra() {
        for k in 0..=3usize {
            for l in 0..=3usize {
                if k + l == 0 {
                    continue;
                }
                for n in 0..=12u32 {
                    let hs = hook_sets(k, l, n);
                    let all = enumerate_partitions(n);
                    let brute: Vec<_> = all.iter().filter(|x| x.in_hook(k, l)).cloned().collect();
                    assert_eq!(hs.h, brute);
                    for lambda in &hs.h {
                        assert_ne!(hs.in_h0(lambda), hs.in_h1(lambda));
                        assert_eq!(hs.in_h0(lambda), hs.contains(&lambda.conjugate()));
                    }
                    assert_eq!(hs.h0.len() + hs.h1.len(), hs.h.len());
                    if k == l {
                        assert!(hs.h1.is_empty());
                    }
                    if l < k {
                        let alt: Vec<_> =
                            hs.h.iter().filter(|x| x.in_hook(l, k)).cloned().collect();
                        assert_eq!(alt, hs.h0);
                    }
                    assert_eq!(count_hook(k, l, n), BigUint::from(hs.h.len()));
                }
            }
        }
    }

    #[test]
    fn self_conjugate_split() {
        let s = sc_split(1, 7);
        assert_eq!(s.sc, vec![p(&[4, 1, 1, 1])]);
        assert!(sc_split(1, 6).sc.is_empty());
        for n in 1..=50u32 {
            assert_eq!(enumerate_hook_partitions(1, 1, n).len(), n as usize);
            assert_eq!(count_hook(1, 1, n), BigUint::from(n));
        }
    }

    #[test]
    fn tableaux_counts() {
        assert_eq!(f_lambda(&p(&[2, 1])), BigUint::from(2u32));
        assert_eq!(f_lambda(&p(&[3, 2])), BigUint::from(5u32));
        for n in 1..15 {
            assert_eq!(f_lambda(&Partition::row(n)), BigUint::one());
        }
        let mut memo = HashMap::new();
        for n in 0..=12u32 {
            for lambda in enumerate_partitions(n) {
                let f = f_lambda(&lambda);
                assert_eq!(f, f_lambda(&lambda.conjugate()));
                assert_eq!(f, BigUint::from(brute_syt(lambda.parts(), &mut memo)));
                assert_eq!(lambda.conjugate().conjugate(), lambda);
            }
        }
    }

    #[test]
    fn squares_of_tableaux_counts_sum_to_factorial() {
        for n in 0..=10u32 {
            let total: BigUint = enumerate_partitions(n)
                .iter()
                .map(|l| {
                    let f = f_lambda(l);
                    &f * &f
                })
                .sum();
            assert_eq!(total, factorial(n));
        }
    }

    #[test]
    fn par_k_values() {
        assert_eq!(par_k(1, 5), BigUint::one());
        assert_eq!(par_k(2, 4), BigUint::from(3u32));
        assert_eq!(par_k(3, 0), BigUint::one());
        for k in 1..=5 {
            for m in 0..=15u32 {
                let brute = enumerate_partitions(m).iter().filter(|x| x.length() <= k).count();
                assert_eq!(par_k(k, m as usize), BigUint::from(brute));
            }
        }
    }

    #[test]
    fn boxed_self_conjugate_counts() {
        assert_eq!(count_sc_boxed(1, 7), BigUint::one());
        assert_eq!(count_sc_boxed(1, 6), BigUint::zero());
        assert_eq!(count_sc_boxed(2, 8), BigUint::from(2u32));
        for k in 1..=3usize {
            for n in 0..=30u32 {
                let sets = sc_split(k, n);
                let boxed = sets
                    .sc
                    .iter()
                    .filter(|x| x.part(k) as usize >= k)
                    .count();
                assert_eq!(count_sc_boxed(k, n), BigUint::from(boxed), "k={k} n={n}");
                assert_eq!(
                    count_self_conjugate_hook(k, n),
                    BigUint::from(sets.sc.len()),
                    "k={k} n={n}"
                );
            }
        }
    }
}
