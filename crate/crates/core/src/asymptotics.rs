//! Exact ratio series over hook partitions and power-law fits to them.
//!
//! Every series value is an exact big rational. Floating point appears only in
//! [`fit_power_law`], in [`RatioSeries::scaled`] and in decimal rendering.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::partitions::{
    count_hook, count_self_conjugate_hook, enumerate_hook_partitions, enumerate_partitions,
    factorial, Partition,
};

/// `n` beyond which [`full_sym_ratio`] refuses to enumerate all partitions.
pub const FULL_SYM_MAX_N: u32 = 40;
pub const MIN_FIT_POINTS: usize = 5;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum AsymptoticsError {
    #[error("fit needs at least {required} points in the window, found {found}")]
    InsufficientPoints { found: usize, required: usize },
    #[error("value at n = {n} is not positive")]
    NonPositive { n: u32 },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Law {
    ScRatio,
    HookCount,
    MRatio,
    FullSym,
}

impl FromStr for Law {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "sc-ratio" => Ok(Law::ScRatio),
            "hook-count" => Ok(Law::HookCount),
            "m-ratio" => Ok(Law::MRatio),
            "full-sym" => Ok(Law::FullSym),
            other => Err(format!("unknown law '{other}'")),
        }
    }
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Law::ScRatio => "sc-ratio",
            Law::HookCount => "hook-count",
            Law::MRatio => "m-ratio",
            Law::FullSym => "full-sym",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SeriesPoint {
    pub n: u32,
    pub value: BigRational,
}

/// Exact values indexed by increasing `n`, with the exponent `e` for which
/// `n^e · value` is expected to settle.
#[derive(Debug, Clone, PartialEq)]
pub struct RatioSeries {
    pub law: Law,
    pub k: Option<usize>,
    pub scale_exponent: Option<f64>,
    pub points: Vec<SeriesPoint>,
}

impl RatioSeries {
    pub fn value(&self, n: u32) -> Option<&BigRational> {
        self.points
            .binary_search_by_key(&n, |p| p.n)
            .ok()
            .map(|i| &self.points[i].value)
    }

    /// `n^e · value`, when the series has a scale exponent.
    pub fn scaled(&self, point: &SeriesPoint) -> Option<f64> {
        let e = self.scale_exponent?;
        if point.value.is_zero() {
            return Some(0.0);
        }
        let ln = ln_abs(&point.value) + e * (point.n as f64).ln();
        Some(point.value.signum().to_f64().unwrap() * ln.exp())
    }

    pub fn retain(&self, keep: impl Fn(u32) -> bool) -> RatioSeries {
        RatioSeries {
            points: self.points.iter().filter(|p| keep(p.n)).cloned().collect(),
            ..self.clone()
        }
    }

    pub fn odd(&self) -> RatioSeries {
        self.retain(|n| n % 2 == 1)
    }

    pub fn even(&self) -> RatioSeries {
        self.retain(|n| n % 2 == 0)
    }
}

fn ln_big(x: &BigUint) -> f64 {
    let shift = x.bits().saturating_sub(64);
    let top = (x >> shift).to_u64().unwrap() as f64;
    top.ln() + shift as f64 * std::f64::consts::LN_2
}

/// `ln |r|` for nonzero `r`, valid far outside the `f64` range of `r` itself.
pub fn ln_abs(r: &BigRational) -> f64 {
    ln_big(r.numer().magnitude()) - ln_big(r.denom().magnitude())
}

/// `r` rounded toward zero to `sig` significant digits, as `d.ddd…e±x`.
pub fn decimal(r: &BigRational, sig: usize) -> String {
    assert!(sig >= 1);
    if r.is_zero() {
        return "0".to_string();
    }
    let a = r.numer().magnitude().clone();
    let b = r.denom().magnitude().clone();
    let ten = BigUint::from(10u32);
    let lo = ten.pow(sig as u32 - 1);
    let hi = &lo * &ten;
    let mut e = (ln_abs(r) / std::f64::consts::LN_10).floor() as i64;
    let q = loop {
        let shift = sig as i64 - 1 - e;
        let q = if shift >= 0 {
            (&a * ten.pow(shift as u32)) / &b
        } else {
            &a / (&b * ten.pow((-shift) as u32))
        };
        if q >= hi {
            e += 1;
        } else if q < lo {
            e -= 1;
        } else {
            break q;
        }
    };
    let digits = q.to_string();
    let sign = if r.is_negative() { "-" } else { "" };
    if sig == 1 {
        format!("{sign}{digits}e{e}")
    } else {
        format!("{sign}{}.{}e{e}", &digits[..1], &digits[1..])
    }
}

fn ratio(num: BigUint, den: BigUint) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// `k·(2k−1)!/2^{k−1}`.
pub fn c1_constant(k: usize) -> BigRational {
    assert!(k >= 1, "k must be positive");
    let num = BigUint::from(k) * factorial(2 * k as u32 - 1);
    ratio(num, BigUint::one() << (k - 1))
}

/// `|H_sc(k,k;n)| / |H(k,k;n)|` for `1 ≤ n ≤ n_max`.
pub fn sc_ratio_series(k: usize, n_max: u32) -> RatioSeries {
    let points = (1..=n_max)
        .into_par_iter()
        .map(|n| SeriesPoint {
            n,
            value: ratio(count_self_conjugate_hook(k, n), count_hook(k, k, n)),
        })
        .collect();
    RatioSeries {
        law: Law::ScRatio,
        k: Some(k),
        scale_exponent: Some(k as f64),
        points,
    }
}

/// `|H(k,k;n)| · k!·k!·(2k−1)! / n^{2k−1}`, which tends to 1.
pub fn hook_count_law(k: usize, n_max: u32) -> RatioSeries {
    let kf = factorial(k as u32);
    let norm = &kf * &kf * factorial(2 * k as u32 - 1);
    let points = (1..=n_max)
        .into_par_iter()
        .map(|n| SeriesPoint {
            n,
            value: ratio(
                count_hook(k, k, n) * &norm,
                BigUint::from(n).pow(2 * k as u32 - 1),
            ),
        })
        .collect();
    RatioSeries {
        law: Law::HookCount,
        k: Some(k),
        scale_exponent: None,
        points,
    }
}

/// `(Σ_{sc} (f^λ)², Σ_{non-sc} (f^λ)²)` over `shapes`, all of size `n`.
fn split_square_sums(n: u32, shapes: &[Partition]) -> (BigUint, BigUint) {
    let nf = factorial(n);
    let mut sums = (BigUint::zero(), BigUint::zero());
    for lambda in shapes {
        let hooks = lambda.hook_lengths();
        let f = &nf / crate::partitions::product_u32(hooks);
        let sq = &f * &f;
        if lambda.is_self_conjugate() {
            sums.0 += sq;
        } else {
            sums.1 += sq;
        }
    }
    sums
}

/// `dim M₂ / dim M₁` for `2 ≤ n ≤ n_max`, where `M₂` collects the
/// self-conjugate shapes of `H(k,k;n)` and `M₁` the rest.
pub fn m_ratio_series(k: usize, n_max: u32) -> RatioSeries {
    let points = (2..=n_max)
        .into_par_iter()
        .map(|n| {
            let (m2, m1) = split_square_sums(n, &enumerate_hook_partitions(k, k, n));
            SeriesPoint {
                n,
                value: ratio(m2, m1),
            }
        })
        .collect();
    RatioSeries {
        law: Law::MRatio,
        k: Some(k),
        scale_exponent: Some(k as f64 / 2.0),
        points,
    }
}

/// `dim M₂ / (dim M₁ + dim M₂)`, the self-conjugate share of the whole image.
pub fn m2_fraction_series(k: usize, n_max: u32) -> RatioSeries {
    let points = (1..=n_max)
        .into_par_iter()
        .map(|n| {
            let (m2, m1) = split_square_sums(n, &enumerate_hook_partitions(k, k, n));
            SeriesPoint {
                n,
                value: ratio(m2.clone(), m1 + m2),
            }
        })
        .collect();
    RatioSeries {
        law: Law::MRatio,
        k: Some(k),
        scale_exponent: Some(k as f64 / 2.0),
        points,
    }
}

/// Over all partitions of `n`, for `2 ≤ n ≤ n_max`: the series
/// `dim M₂(n) / dim M₁(n)` and the series `dim M₂(n) / n!`.
pub fn full_sym_ratio(n_max: u32) -> Result<(RatioSeries, RatioSeries), AsymptoticsError> {
    if n_max > FULL_SYM_MAX_N {
        return Err(AsymptoticsError::InvalidParameter(format!(
            "n_max = {n_max} exceeds {FULL_SYM_MAX_N}"
        )));
    }
    let rows: Vec<(u32, BigUint, BigUint)> = (2..=n_max)
        .into_par_iter()
        .map(|n| {
            let (m2, m1) = split_square_sums(n, &enumerate_partitions(n));
            (n, m2, m1)
        })
        .collect();
    let series = |points| RatioSeries {
        law: Law::FullSym,
        k: None,
        scale_exponent: None,
        points,
    };
    let ratios = rows
        .iter()
        .map(|(n, m2, m1)| SeriesPoint {
            n: *n,
            value: ratio(m2.clone(), m1.clone()),
        })
        .collect();
    let shares = rows
        .iter()
        .map(|(n, m2, _)| SeriesPoint {
            n: *n,
            value: ratio(m2.clone(), factorial(*n)),
        })
        .collect();
    Ok((series(ratios), series(shares)))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PowerLawFit {
    pub exponent: f64,
    pub constant: f64,
    /// Root mean square of the residuals of `ln value`.
    pub residual: f64,
    pub window: (u32, u32),
    pub points: usize,
}

/// Least-squares line through `(ln n, ln value)` for the points with `n` in
/// the inclusive `window`.
pub fn fit_power_law(
    series: &RatioSeries,
    window: (u32, u32),
) -> Result<PowerLawFit, AsymptoticsError> {
    let pts: Vec<&SeriesPoint> = series
        .points
        .iter()
        .filter(|p| (window.0..=window.1).contains(&p.n))
        .collect();
    if pts.len() < MIN_FIT_POINTS {
        return Err(AsymptoticsError::InsufficientPoints {
            found: pts.len(),
            required: MIN_FIT_POINTS,
        });
    }
    if let Some(p) = pts.iter().find(|p| !p.value.is_positive()) {
        return Err(AsymptoticsError::NonPositive { n: p.n });
    }
    let xy: Vec<(f64, f64)> = pts
        .iter()
        .map(|p| ((p.n as f64).ln(), ln_abs(&p.value)))
        .collect();
    let m = xy.len() as f64;
    let mx = xy.iter().map(|t| t.0).sum::<f64>() / m;
    let my = xy.iter().map(|t| t.1).sum::<f64>() / m;
    let sxx: f64 = xy.iter().map(|t| (t.0 - mx).powi(2)).sum();
    let sxy: f64 = xy.iter().map(|t| (t.0 - mx) * (t.1 - my)).sum();
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let rss: f64 = xy
        .iter()
        .map(|t| (t.1 - intercept - slope * t.0).powi(2))
        .sum();
    Ok(PowerLawFit {
        exponent: slope,
        constant: intercept.exp(),
        residual: (rss / m).sqrt(),
        window,
        points: xy.len(),
    })
}

/// `C(n, k)`.
pub fn binomial(n: u32, k: u32) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `√n · ratio` limit for `k = 1`: `2/√π`.
pub fn c2_k1() -> f64 {
    2.0 / std::f64::consts::PI.sqrt()
}

/// Parity of `n` on which the self-conjugate part of `H(k,k;n)` is largest:
/// `n ≡ k² (mod 2)`, where the shapes with a full `k × k` Durfee square live.
pub fn dominant_parity(k: usize) -> u32 {
    (k * k % 2) as u32
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{f_lambda, sc_split};
    use crate::sn_characters::dim_image_s;

    fn q(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    #[test]
    fn c1_values() {
        assert_eq!(c1_constant(1), q(1, 1));
        assert_eq!(c1_constant(2), q(6, 1));
        assert_eq!(c1_constant(3), q(90, 1));
    }

    #[test]
    fn sc_ratio_k1_closed_form() {
        let s = sc_ratio_series(1, 200);
        for p in &s.points {
            let want = if p.n % 2 == 1 { q(1, p.n as i64) } else { q(0, 1) };
            assert_eq!(p.value, want, "n = {}", p.n);
        }
    }

    #[test]
    fn sc_ratio_k2_matches_enumeration() {
        let s = sc_ratio_series(2, 30);
        for n in 1..=30u32 {
            let split = sc_split(2, n);
            let want = q(split.sc.len() as i64, (split.sc.len() + split.nsc.len()) as i64);
            assert_eq!(s.value(n), Some(&want));
        }
    }

    #[test]
    fn hook_count_k1_is_one() {
        assert!(hook_count_law(1, 60).points.iter().all(|p| p.value.is_one()));
    }

    #[test]
    fn hook_count_k2_converges() {
        let s = hook_count_law(2, 100);
        let dev = |n| (s.value(n).unwrap() - q(1, 1)).abs();
        assert!(dev(100) < q(15, 100));
        assert!(dev(100) < dev(50));
        assert!(dev(100) < dev(10));
        let counts: Vec<_> = (1..=9).map(|n| count_hook(2, 2, n)).collect();
        let want: Vec<BigUint> = [1u32, 2, 3, 5, 7, 11, 15, 22, 29].map(BigUint::from).to_vec();
        assert_eq!(counts, want);
    }

    #[test]
    fn m_ratio_k1_closed_form() {
        // one self-conjugate hook for odd n, with f = C(n-1, (n-1)/2);
        // Σ over all hooks of C(n-1, a)² = C(2n-2, n-1)
        let s = m_ratio_series(1, 61);
        for p in &s.points {
            let n = p.n;
            let m2 = if n % 2 == 1 {
                binomial(n - 1, (n - 1) / 2).pow(2)
            } else {
                BigUint::zero()
            };
            let m1 = binomial(2 * n - 2, n - 1) - &m2;
            assert_eq!(p.value, ratio(m2, m1), "n = {n}");
        }
    }

    #[test]
    fn m_sums_exhaust_the_image() {
        for k in 1..=3usize {
            for n in 1..=6u32 {
                let shapes = enumerate_hook_partitions(k, k, n);
                let (m2, m1) = split_square_sums(n, &shapes);
                assert_eq!(&m1 + &m2, dim_image_s(k, k, n));
                let direct: BigUint = shapes
                    .iter()
                    .filter(|p| p.is_self_conjugate())
                    .map(|p| f_lambda(p).pow(2))
                    .sum();
                assert_eq!(m2, direct);
            }
        }
    }

    #[test]
    fn full_sym_small() {
        let (r, s) = full_sym_ratio(12).unwrap();
        assert_eq!(r.value(2), Some(&q(0, 1)));
        assert_eq!(r.value(3), Some(&q(2, 1)));
        assert_eq!(r.value(4), Some(&q(1, 5)));
        assert_eq!(s.value(4), Some(&q(4, 24)));
        assert!(full_sym_ratio(41).is_err());
    }

    #[test]
    fn fit_recovers_exact_power_law() {
        let points = (1..=30u32)
            .map(|n| SeriesPoint {
                n,
                value: q(3, 1) / BigRational::from_integer(BigInt::from(n).pow(2)),
            })
            .collect();
        let s = RatioSeries {
            law: Law::ScRatio,
            k: None,
            scale_exponent: Some(2.0),
            points,
        };
        let fit = fit_power_law(&s, (5, 30)).unwrap();
        assert!((fit.exponent + 2.0).abs() < 1e-12);
        assert!((fit.constant - 3.0).abs() < 1e-10);
        assert!(fit.residual < 1e-12);
        assert_eq!(fit.points, 26);
        assert!((s.scaled(&s.points[9]).unwrap() - 3.0).abs() < 1e-12);
    }

    #[test]
    fn fit_errors() {
        let s = sc_ratio_series(1, 40);
        assert_eq!(
            fit_power_law(&s, (1, 4)),
            Err(AsymptoticsError::InsufficientPoints {
                found: 4,
                required: 5
            })
        );
        assert_eq!(fit_power_law(&s, (1, 40)), Err(AsymptoticsError::NonPositive { n: 2 }));
        let fit = fit_power_law(&s.odd(), (1, 40)).unwrap();
        assert!((fit.exponent + 1.0).abs() < 1e-12);
        assert!((fit.constant - 1.0).abs() < 1e-12);
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(decimal(&q(1, 3), 5), "3.3333e-1");
        assert_eq!(decimal(&q(-200, 1), 3), "-2.00e2");
        assert_eq!(decimal(&q(1, 1), 1), "1e0");
        assert_eq!(decimal(&q(0, 1), 4), "0");
        let tiny = BigRational::new(BigInt::one(), BigInt::from(10u32).pow(400));
        assert_eq!(decimal(&tiny, 3), "1.00e-400");
        assert!((ln_abs(&tiny) + 400.0 * std::f64::consts::LN_10).abs() < 1e-9);
    }

    #[test]
    fn dominant_parity_has_the_durfee_square() {
        for k in 1..=3usize {
            let p = dominant_parity(k);
            let n = 4 * k as u32 + p + 10;
            assert!(count_self_conjugate_hook(k, n) > count_self_conjugate_hook(k, n + 1));
        }
    }
}
