//! Dense univariate polynomials over a `Field`.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::field::{Field, Fp};
use crate::error::{Error, Result};

/// Coefficients are stored low degree first with no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly<F: Field> {
    field: F,
    coeffs: Vec<F::Elem>,
}

impl<F: Field> UniPoly<F> {
    pub fn new(field: &F, mut coeffs: Vec<F::Elem>) -> Self {
        while coeffs.last().is_some_and(|c| field.is_zero(c)) {
            coeffs.pop();
        }
        UniPoly { field: field.clone(), coeffs }
    }

    pub fn from_i64(field: &F, coeffs: &[i64]) -> Self {
        Self::new(field, coeffs.iter().map(|&c| field.from_i64(c)).collect())
    }

    pub fn zero(field: &F) -> Self {
        UniPoly { field: field.clone(), coeffs: Vec::new() }
    }

    pub fn constant(field: &F, c: F::Elem) -> Self {
        Self::new(field, vec![c])
    }

    /// `X - a`.
    pub fn linear_root(field: &F, a: &F::Elem) -> Self {
        Self::new(field, vec![field.neg(a), field.one()])
    }

    pub fn x(field: &F) -> Self {
        Self::new(field, vec![field.zero(), field.one()])
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn coeffs(&self) -> &[F::Elem] {
        &self.coeffs
    }
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }
    pub fn coeff(&self, i: usize) -> F::Elem {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }
    pub fn leading(&self) -> Option<&F::Elem> {
        self.coeffs.last()
    }

    pub fn eval(&self, a: &F::Elem) -> F::Elem {
        let f = &self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(f.zero(), |acc, c| f.add(&f.mul(&acc, a), c))
    }

    pub fn add(&self, other: &Self) -> Self {
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new(f, (0..n).map(|i| f.add(&self.coeff(i), &other.coeff(i))).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new(f, (0..n).map(|i| f.sub(&self.coeff(i), &other.coeff(i))).collect())
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let f = &self.field;
        Self::new(f, self.coeffs.iter().map(|a| f.mul(a, c)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let f = &self.field;
        if self.is_zero() || other.is_zero() {
            return Self::zero(f);
        }
        let mut out = vec![f.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            let na = f.neg(a);
            f.sub_mul_assign(&mut out[i..i + other.coeffs.len()], &other.coeffs, &na);
        }
        Self::new(f, out)
    }

    pub fn derivative(&self) -> Self {
        let f = &self.field;
        Self::new(
            f,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| f.mul(&f.from_u64(i as u64), c))
                .collect(),
        )
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some(lc) => self.scale(&self.field.inv(lc).expect("nonzero leading coefficient")),
        }
    }

    /// Euclidean division; errors on a zero divisor.
    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self)> {
        let f = &self.field;
        let dl = d
            .leading()
            .ok_or_else(|| Error::Usage("division by the zero polynomial".into()))?;
        let dinv = f.inv(dl).expect("nonzero leading coefficient");
        let dn = d.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dn {
            return Ok((Self::zero(f), self.clone()));
        }
        let mut quot = vec![f.zero(); rem.len() - dn];
        for i in (0..quot.len()).rev() {
            let c = f.mul(&rem[i + dn], &dinv);
            if !f.is_zero(&c) {
                f.sub_mul_assign(&mut rem[i..i + dn + 1], &d.coeffs, &c);
            }
            quot[i] = c;
        }
        rem.truncate(dn);
        Ok((Self::new(f, quot), Self::new(f, rem)))
    }

    pub fn rem(&self, d: &Self) -> Result<Self> {
        Ok(self.div_rem(d)?.1)
    }

    /// Monic greatest common divisor (zero if both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn is_squarefree(&self) -> bool {
        !self.is_zero() && self.gcd(&self.derivative()).degree() == Some(0)
    }

    /// `self^e mod modulus`.
    pub fn pow_mod(&self, mut e: u64, modulus: &Self) -> Result<Self> {
        let f = &self.field;
        let mut base = self.rem(modulus)?;
        let mut acc = Self::constant(f, f.one()).rem(modulus)?;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(modulus)?;
            }
            base = base.mul(&base).rem(modulus)?;
            e >>= 1;
        }
        Ok(acc)
    }

    /// Number of times `X - a` divides `self`, and the cofactor. Zero polynomial is an error.
    pub fn valuation_at(&self, a: &F::Elem) -> Result<(usize, Self)> {
        if self.is_zero() {
            return Err(Error::Usage("valuation of the zero polynomial".into()));
        }
        let f = &self.field;
        let mut cur = self.clone();
        let mut k = 0;
        loop {
            let (q, r) = synthetic_division(f, &cur.coeffs, a);
            if !f.is_zero(&r) {
                return Ok((k, cur));
            }
            cur = Self::new(f, q);
            k += 1;
        }
    }

    /// Resultant of `self` and `other` by the Euclidean recurrence.
    pub fn resultant(&self, other: &Self) -> F::Elem {
        let f = &self.field;
        if self.is_zero() || other.is_zero() {
            return f.zero();
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        let mut acc = f.one();
        loop {
            let n = a.degree().unwrap();
            let m = b.degree().unwrap();
            let lb = b.leading().unwrap().clone();
            if m == 0 {
                return f.mul(&acc, &f.pow(&lb, n as u64));
            }
            let r = a.rem(&b).expect("nonzero divisor");
            let Some(k) = r.degree() else {
                return f.zero();
            };
            // res(a, b) = (-1)^{nm} res(b, a) and res(b, a) = lc(b)^{n-k} res(b, a mod b).
            if (n * m) % 2 == 1 {
                acc = f.neg(&acc);
            }
            acc = f.mul(&acc, &f.pow(&lb, (n - k) as u64));
            a = b;
            b = r;
        }
    }
}

fn synthetic_division<F: Field>(f: &F, coeffs: &[F::Elem], a: &F::Elem) -> (Vec<F::Elem>, F::Elem) {
    if coeffs.is_empty() {
        return (Vec::new(), f.zero());
    }
    let n = coeffs.len();
    let mut q = vec![f.zero(); n - 1];
    let mut carry = coeffs[n - 1].clone();
    for i in (0..n - 1).rev() {
        q[i] = carry.clone();
        carry = f.add(&coeffs[i], &f.mul(&carry, a));
    }
    (q, carry)
}

/// The unique polynomial of degree `< values.len()` taking `values[i]` at `X = i`.
///
/// Nodes must be distinct in the field, so `values.len()` may not exceed the characteristic.
pub fn interpolate_consecutive<F: Field>(field: &F, values: &[F::Elem]) -> UniPoly<F> {
    let n = values.len();
    if n == 0 {
        return UniPoly::zero(field);
    }
    let inverses: Vec<F::Elem> = (0..n)
        .map(|k| {
            if k == 0 {
                field.one()
            } else {
                field.inv(&field.from_u64(k as u64)).expect("node spacing invertible")
            }
        })
        .collect();
    // Newton divided differences on nodes 0, 1, ..., n-1: x_{i+k} - x_i = k.
    let mut dd = values.to_vec();
    for k in 1..n {
        for i in (k..n).rev() {
            let diff = field.sub(&dd[i], &dd[i - 1]);
            dd[i] = field.mul(&diff, &inverses[k]);
        }
    }
    // Horner back from the Newton form: p = dd0 + (X-0)(dd1 + (X-1)(dd2 + ...)).
    let mut acc: Vec<F::Elem> = vec![dd[n - 1].clone()];
    for i in (0..n - 1).rev() {
        let node = field.from_u64(i as u64);
        let mut next = vec![field.zero(); acc.len() + 1];
        for (j, c) in acc.iter().enumerate() {
            next[j + 1] = field.add(&next[j + 1], c);
            next[j] = field.sub(&next[j], &field.mul(c, &node));
        }
        next[0] = field.add(&next[0], &dd[i]);
        acc = next;
    }
    UniPoly::new(field, acc)
}

/// Roots of `f` lying in GF(p), each listed once, in increasing order.
///
/// Computes `gcd(f, X^p - X)` with `X^p` reduced modulo `f`, then splits the
/// product of distinct linear factors by random equal-degree splitting.
pub fn roots_in_field(f: &UniPoly<Fp>) -> Result<Vec<u64>> {
    let field = *f.field();
    if f.is_zero() {
        return Err(Error::Usage("roots of the zero polynomial".into()));
    }
    let p = field.modulus();
    let monic = f.monic();
    if monic.degree() == Some(0) {
        return Ok(Vec::new());
    }
    let x = UniPoly::x(&field);
    let xp = x.pow_mod(p, &monic)?;
    let split = monic.gcd(&xp.sub(&x));
    let mut roots = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(0x0072_6f6f_7473);
    split_linear(&split, p, &mut rng, &mut roots)?;
    roots.sort_unstable();
    Ok(roots)
}

/// Roots in GF(p) paired with their multiplicities.
pub fn root_multiplicities(f: &UniPoly<Fp>) -> Result<Vec<(u64, usize)>> {
    roots_in_field(f)?
        .into_iter()
        .map(|r| Ok((r, f.valuation_at(&r)?.0)))
        .collect()
}

fn split_linear(g: &UniPoly<Fp>, p: u64, rng: &mut ChaCha8Rng, out: &mut Vec<u64>) -> Result<()> {
    let field = *g.field();
    match g.degree() {
        None | Some(0) => return Ok(()),
        Some(1) => {
            out.push(field.neg(&g.coeff(0)));
            return Ok(());
        }
        _ => {}
    }
    let one = UniPoly::constant(&field, 1);
    loop {
        let a = field.random(rng);
        let shifted = UniPoly::new(&field, vec![a, 1]);
        let t = shifted.pow_mod((p - 1) / 2, g)?.sub(&one);
        let d = g.gcd(&t);
        let dd = d.degree().unwrap_or(0);
        if dd > 0 && Some(dd) < g.degree() {
            let (cof, _) = g.div_rem(&d)?;
            split_linear(&d, p, rng, out)?;
            split_linear(&cof.monic(), p, rng, out)?;
            return Ok(());
        }
    }
}
