//! Prime fields and the rationals behind one `Field` interface.
//!
//! `Fp` is the workhorse. Elements are canonical `u64` residues; primes of the
//! form `2^k - c` with small `c` (the default `2^61 - 1` among them) take a
//! folding reduction path instead of a 128-bit division.

use std::fmt::Debug;
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `2^61 - 1`, the default working prime.
pub const MERSENNE_61: u64 = (1 << 61) - 1;
/// Default confirmation prime, `2^60 - 93`.
pub const SECOND_PRIME: u64 = (1 << 60) - 93;

/// Serializable description of a coefficient field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum FieldKind {
    Rational,
    Prime { p: u64 },
}

/// A scalar tagged with the field it lives in.
///
/// Only used at boundaries (matrix construction from mixed sources, IO); the
/// kernels work on `Field::Elem` directly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FieldScalar {
    Prime { p: u64, v: u64 },
    Rational(BigRational),
}

impl FieldScalar {
    pub fn kind(&self) -> FieldKind {
        match self {
            FieldScalar::Prime { p, .. } => FieldKind::Prime { p: *p },
            FieldScalar::Rational(_) => FieldKind::Rational,
        }
    }
}

pub trait Field: Clone + Debug + PartialEq + Send + Sync {
    type Elem: Clone + Debug + PartialEq + Eq + Hash + Send + Sync;

    fn kind(&self) -> FieldKind;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn from_i64(&self, v: i64) -> Self::Elem;
    /// `None` when the denominator is not invertible in this field.
    fn from_rational(&self, r: &BigRational) -> Option<Self::Elem>;
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem;
    fn to_scalar(&self, a: &Self::Elem) -> FieldScalar;
    /// Inverse of `to_scalar`; `None` if the scalar belongs to another field.
    fn from_scalar(&self, s: &FieldScalar) -> Option<Self::Elem>;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// `dst[i] -= f * src[i]`.
    fn sub_mul_assign(&self, dst: &mut [Self::Elem], src: &[Self::Elem], f: &Self::Elem) {
        for (d, s) in dst.iter_mut().zip(src) {
            let t = self.mul(f, s);
            *d = self.sub(d, &t);
        }
    }

    fn scale_assign(&self, v: &mut [Self::Elem], f: &Self::Elem) {
        for x in v.iter_mut() {
            *x = self.mul(x, f);
        }
    }

    fn from_u64(&self, v: u64) -> Self::Elem {
        match i64::try_from(v) {
            Ok(s) => self.from_i64(s),
            Err(_) => {
                let hi = self.from_i64((v >> 32) as i64);
                let lo = self.from_i64((v & 0xffff_ffff) as i64);
                let shift = self.from_i64(1 << 32);
                self.add(&self.mul(&hi, &shift), &lo)
            }
        }
    }
}

/// The prime field GF(p) for an odd prime `p < 2^63`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Fp {
    p: u64,
    bits: u32,
    c: u64,
    fold: bool,
}

impl Fp {
    pub fn new(p: u64) -> Result<Self> {
        if p < 3 || p >= 1 << 63 || !is_prime_u64(p) {
            return Err(Error::BadPrime(format!("{p} is not an odd prime below 2^63")));
        }
        let bits = 64 - p.leading_zeros();
        let c = (1u128 << bits) - p as u128;
        let fold = bits >= 32 && c < (1u128 << (bits / 2 - 1));
        Ok(Fp { p, bits, c: c as u64, fold })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    #[inline(always)]
    pub fn reduce(&self, x: u128) -> u64 {
        if self.fold {
            let mask = (1u128 << self.bits) - 1;
            let c = self.c as u128;
            let x = (x >> self.bits) * c + (x & mask);
            let x = (x >> self.bits) * c + (x & mask);
            let mut r = x as u64;
            while r >= self.p {
                r -= self.p;
            }
            r
        } else {
            (x % self.p as u128) as u64
        }
    }

    #[inline(always)]
    fn mul_raw(&self, a: u64, b: u64) -> u64 {
        self.reduce(a as u128 * b as u128)
    }

    /// Symmetric representative in `(-p/2, p/2]`, handy for printing small values.
    pub fn signed(&self, a: u64) -> i128 {
        if a > self.p / 2 {
            a as i128 - self.p as i128
        } else {
            a as i128
        }
    }
}

impl Field for Fp {
    type Elem = u64;

    fn kind(&self) -> FieldKind {
        FieldKind::Prime { p: self.p }
    }
    #[inline(always)]
    fn zero(&self) -> u64 {
        0
    }
    #[inline(always)]
    fn one(&self) -> u64 {
        1
    }
    #[inline(always)]
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    #[inline(always)]
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    #[inline(always)]
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }
    #[inline(always)]
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        self.mul_raw(*a, *b)
    }
    #[inline(always)]
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            return None;
        }
        let (mut r0, mut r1) = (self.p as i128, *a as i128);
        let (mut t0, mut t1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1);
        Some(t0.rem_euclid(self.p as i128) as u64)
    }
    fn from_i64(&self, v: i64) -> u64 {
        (v as i128).rem_euclid(self.p as i128) as u64
    }
    fn from_rational(&self, r: &BigRational) -> Option<u64> {
        let p = BigInt::from(self.p);
        let num = r.numer().mod_floor(&p).to_u64()?;
        let den = r.denom().mod_floor(&p).to_u64()?;
        let den_inv = self.inv(&den)?;
        Some(self.mul_raw(num, den_inv))
    }
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> u64 {
        rng.gen_range(0..self.p)
    }
    fn to_scalar(&self, a: &u64) -> FieldScalar {
        FieldScalar::Prime { p: self.p, v: *a }
    }
    fn from_scalar(&self, s: &FieldScalar) -> Option<u64> {
        match s {
            FieldScalar::Prime { p, v } if *p == self.p && *v < self.p => Some(*v),
            _ => None,
        }
    }
    fn pow(&self, a: &u64, mut e: u64) -> u64 {
        let mut base = *a;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_raw(acc, base);
            }
            base = self.mul_raw(base, base);
            e >>= 1;
        }
        acc
    }
    #[inline]
    fn sub_mul_assign(&self, dst: &mut [u64], src: &[u64], f: &u64) {
        let nf = self.neg(f) as u128;
        for (d, s) in dst.iter_mut().zip(src) {
            *d = self.reduce(*d as u128 + nf * *s as u128);
        }
    }
    fn from_u64(&self, v: u64) -> u64 {
        v % self.p
    }
}

/// The field of rational numbers with arbitrary-precision numerators and denominators.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn kind(&self) -> FieldKind {
        FieldKind::Rational
    }
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        (!a.is_zero()).then(|| a.recip())
    }
    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }
    fn from_rational(&self, r: &BigRational) -> Option<BigRational> {
        Some(r.clone())
    }
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> BigRational {
        // Small integers keep heights manageable in random coordinate changes.
        self.from_i64(rng.gen_range(-64..=64))
    }
    fn to_scalar(&self, a: &BigRational) -> FieldScalar {
        FieldScalar::Rational(a.clone())
    }
    fn from_scalar(&self, s: &FieldScalar) -> Option<BigRational> {
        match s {
            FieldScalar::Rational(r) => Some(r.clone()),
            _ => None,
        }
    }
}

/// Build a rational scalar, checking the denominator.
pub fn rational(num: i64, den: i64) -> Result<BigRational> {
    if den == 0 {
        return Err(Error::Usage("zero denominator".into()));
    }
    Ok(BigRational::new(BigInt::from(num), BigInt::from(den)))
}

/// Reduce an exact rational point coordinate-wise modulo the prime `p`.
///
/// Fails with `BadPrime` naming the first coordinate whose denominator is divisible by `p`.
pub fn reduce_rational_point(pt: &[BigRational; 2], p: u64) -> Result<[u64; 2]> {
    let modulus = BigInt::from(p);
    let mut out = [0u64; 2];
    for (i, c) in pt.iter().enumerate() {
        let den = c.denom().mod_floor(&modulus);
        if den.is_zero() {
            return Err(Error::BadPrime(format!(
                "coordinate {} = {} has denominator divisible by {}",
                ["x", "y"][i],
                c,
                p
            )));
        }
        let num = c.numer().mod_floor(&modulus);
        let den_inv = den.modpow(&BigInt::from(p - 2), &modulus);
        out[i] = ((num * den_inv) % &modulus).to_u64().expect("residue below p");
    }
    Ok(out)
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &b in &BASES {
        if n % b == 0 {
            return n == b;
        }
    }
    let mulmod = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let powmod = |mut a: u64, mut e: u64| {
        let mut r = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                r = mulmod(r, a);
            }
            a = mulmod(a, a);
            e >>= 1;
        }
        r
    };
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &BASES {
        let mut x = powmod(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Integer binomial coefficient table as field elements, `table[n][k] = C(n, k)`.
pub fn binomial_table<F: Field>(field: &F, n_max: usize) -> Vec<Vec<F::Elem>> {
    let mut rows: Vec<Vec<F::Elem>> = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let mut row = vec![field.one(); n + 1];
        for k in 1..n {
            row[k] = field.add(&rows[n - 1][k - 1], &rows[n - 1][k]);
        }
        rows.push(row);
    }
    rows
}

pub(crate) fn bigint_to_json(v: &BigInt) -> serde_json::Value {
    match v.to_i64() {
        Some(s) => serde_json::Value::from(s),
        None => serde_json::Value::from(v.to_string()),
    }
}

pub(crate) fn bigint_from_json(v: &serde_json::Value) -> Option<BigInt> {
    match v {
        serde_json::Value::Number(n) => n
            .as_i64()
            .map(BigInt::from)
            .or_else(|| n.as_u64().map(BigInt::from)),
        serde_json::Value::String(s) => s.parse().ok(),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_primes_are_prime_and_fold() {
        for p in [MERSENNE_61, SECOND_PRIME] {
            let f = Fp::new(p).unwrap();
            assert!(f.fold);
        }
        assert!(Fp::new(101).is_ok());
        assert!(Fp::new(100).is_err());
        assert!(Fp::new(2).is_err());
    }

    #[test]
    fn folding_matches_division() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for p in [MERSENNE_61, SECOND_PRIME, 1_000_000_007, 101] {
            let f = Fp::new(p).unwrap();
            for _ in 0..2000 {
                let a = rng.gen_range(0..p);
                let b = rng.gen_range(0..p);
                let expect = ((a as u128 * b as u128) % p as u128) as u64;
                assert_eq!(f.mul(&a, &b), expect);
                if a != 0 {
                    assert_eq!(f.mul(&a, &f.inv(&a).unwrap()), 1);
                }
            }
        }
    }

    #[test]
    fn reduce_rational_point_examples() {
        let f101 = Fp::new(101).unwrap();
        let pt = [rational(1, 4).unwrap(), rational(-33, 8).unwrap()];
        // 4 * 76 = 304 = 3*101 + 1; 8^{-1} = 38 and -33 * 38 = -1254 = -42 (mod 101).
        assert_eq!(reduce_rational_point(&pt, 101).unwrap(), [76, 59]);
        assert_eq!(f101.mul(&59, &8), f101.from_i64(-33));

        let p = MERSENNE_61;
        let pt = [rational(-2, 1).unwrap(), rational(3, 1).unwrap()];
        assert_eq!(reduce_rational_point(&pt, p).unwrap(), [p - 2, 3]);
    }

    #[test]
    fn even_denominator_is_bad_at_two() {
        let pt = [rational(1, 4).unwrap(), rational(-33, 8).unwrap()];
        let err = reduce_rational_point(&pt, 2).unwrap_err();
        assert!(matches!(err, Error::BadPrime(ref m) if m.contains("coordinate x")));
        let pt = [rational(1, 1).unwrap(), rational(1, 3).unwrap()];
        let err = reduce_rational_point(&pt, 3).unwrap_err();
        assert!(matches!(err, Error::BadPrime(ref m) if m.contains("coordinate y")));
    }

    #[test]
    fn scalar_round_trip_respects_field() {
        let f = Fp::new(101).unwrap();
        let g = Fp::new(103).unwrap();
        let s = f.to_scalar(&5);
        assert_eq!(f.from_scalar(&s), Some(5));
        assert_eq!(g.from_scalar(&s), None);
        assert_eq!(Rationals.from_scalar(&s), None);
    }
}
