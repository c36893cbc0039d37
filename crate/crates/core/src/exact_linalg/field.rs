use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rand::Rng;

/// An exact field in which `√-1` exists.
///
/// Elements are plain values and all arithmetic goes through the field
/// object, so a prime field can carry its modulus without every element
/// storing it.
pub trait Field: Clone + Debug + Send + Sync {
    type Elem: Clone + PartialEq + Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, v: i64) -> Self::Elem;
    /// `num / den`; `den` must be invertible in the field.
    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Self::Elem;
    /// A fixed square root of `-1`.
    fn imag_unit(&self) -> Self::Elem;

    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse. Panics on zero.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;

    /// Short description used in reports.
    fn describe(&self) -> String;
    fn render(&self, a: &Self::Elem) -> String;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    /// `acc += a * b`
    fn add_mul_assign(&self, acc: &mut Self::Elem, a: &Self::Elem, b: &Self::Elem) {
        *acc = self.add(acc, &self.mul(a, b));
    }

    fn from_sign(&self, negative: bool) -> Self::Elem {
        if negative {
            self.neg(&self.one())
        } else {
            self.one()
        }
    }
}

/// Element of `Q(i)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GaussQ {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussQ {
    pub fn real(re: BigRational) -> Self {
        GaussQ {
            re,
            im: BigRational::zero(),
        }
    }
}

/// The Gaussian rationals `Q(i)` with arbitrary-precision components.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct GaussianRationals;

impl Field for GaussianRationals {
    type Elem = GaussQ;

    fn zero(&self) -> GaussQ {
        GaussQ::real(BigRational::zero())
    }

    fn one(&self) -> GaussQ {
        GaussQ::real(BigRational::one())
    }

    fn from_i64(&self, v: i64) -> GaussQ {
        GaussQ::real(BigRational::from_integer(BigInt::from(v)))
    }

    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> GaussQ {
        GaussQ::real(BigRational::new(num.clone(), den.clone()))
    }

    fn imag_unit(&self) -> GaussQ {
        GaussQ {
            re: BigRational::zero(),
            im: BigRational::one(),
        }
    }

    fn is_zero(&self, a: &GaussQ) -> bool {
        a.re.is_zero() && a.im.is_zero()
    }

    fn add(&self, a: &GaussQ, b: &GaussQ) -> GaussQ {
        GaussQ {
            re: &a.re + &b.re,
            im: &a.im + &b.im,
        }
    }

    fn sub(&self, a: &GaussQ, b: &GaussQ) -> GaussQ {
        GaussQ {
            re: &a.re - &b.re,
            im: &a.im - &b.im,
        }
    }

    fn mul(&self, a: &GaussQ, b: &GaussQ) -> GaussQ {
        if a.im.is_zero() && b.im.is_zero() {
            return GaussQ::real(&a.re * &b.re);
        }
        GaussQ {
            re: &a.re * &b.re - &a.im * &b.im,
            im: &a.re * &b.im + &a.im * &b.re,
        }
    }

    fn neg(&self, a: &GaussQ) -> GaussQ {
        GaussQ {
            re: -&a.re,
            im: -&a.im,
        }
    }

    fn inv(&self, a: &GaussQ) -> GaussQ {
        assert!(!self.is_zero(a), "inverse of zero");
        if a.im.is_zero() {
            return GaussQ::real(a.re.recip());
        }
        let norm = &a.re * &a.re + &a.im * &a.im;
        GaussQ {
            re: &a.re / &norm,
            im: -&a.im / &norm,
        }
    }

    fn describe(&self) -> String {
        "exact Q(i)".to_string()
    }

    fn render(&self, a: &GaussQ) -> String {
        match (a.re.is_zero(), a.im.is_zero()) {
            (_, true) => a.re.to_string(),
            (true, false) => format!("{}i", a.im),
            (false, false) => format!("{}+{}i", a.re, a.im),
        }
    }
}

/// The prime field `F_p` for a prime `p ≡ 1 (mod 4)` below `2^63`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
    sqrt_minus_one: u64,
}

impl PrimeField {
    /// Returns `None` unless `p` is a prime congruent to 1 mod 4.
    pub fn new(p: u64) -> Option<Self> {
        if p % 4 != 1 || p >= 1 << 63 || !is_prime_u64(p) {
            return None;
        }
        let exponent = (p - 1) / 4;
        for base in 2..p {
            let candidate = pow_mod(base, exponent, p);
            if mul_mod(candidate, candidate, p) == p - 1 {
                return Some(PrimeField {
                    p,
                    sqrt_minus_one: candidate,
                });
            }
        }
        None
    }

    /// A uniformly chosen prime `p ≡ 1 (mod 4)` in `[2^61, 2^62)`.
    pub fn random<R: Rng + ?Sized>(rng: &mut R) -> Self {
        loop {
            let candidate = rng.gen_range((1u64 << 59)..(1u64 << 60)) * 4 + 1;
            if let Some(f) = Self::new(candidate) {
                return f;
            }
        }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn reduce_big(&self, v: &BigInt) -> u64 {
        let r = v.mod_floor(&BigInt::from(self.p));
        r.to_u64().expect("residue fits in u64")
    }
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller–Rabin for 64-bit inputs.
pub fn is_prime_u64(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &b in &BASES {
        if n % b == 0 {
            return n == b;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1
    }

    fn from_i64(&self, v: i64) -> u64 {
        (v as i128).rem_euclid(self.p as i128) as u64
    }

    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> u64 {
        let d = self.reduce_big(den);
        assert!(d != 0, "denominator vanishes mod {}", self.p);
        mul_mod(self.reduce_big(num), self.inv(&d), self.p)
    }

    fn imag_unit(&self) -> u64 {
        self.sqrt_minus_one
    }

    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        mul_mod(*a, *b, self.p)
    }

    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }

    fn inv(&self, a: &u64) -> u64 {
        assert!(*a != 0, "inverse of zero");
        pow_mod(*a, self.p - 2, self.p)
    }

    fn describe(&self) -> String {
        format!("F_{}", self.p)
    }

    fn render(&self, a: &u64) -> String {
        // symmetric representative, so small negatives read naturally
        if *a > self.p / 2 {
            format!("-{}", self.p - a)
        } else {
            a.to_string()
        }
    }

    fn add_mul_assign(&self, acc: &mut u64, a: &u64, b: &u64) {
        *acc = ((*acc as u128 + *a as u128 * *b as u128) % self.p as u128) as u64;
    }
}
