//! The Picard lattice of the plane blown up in nine or ten points.
//!
//! A class is stored as `(d; m_1..m_10)` meaning `d*L - sum m_i E_i`, so curve
//! classes have nonnegative `m_i` and the exceptional curve `E_i` itself has
//! `m_i = -1`. On the nine-point blow-up `m_10` is always zero.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DivisorClass {
    pub d: i64,
    pub m: [i64; 10],
    pub n_points: u8,
}

impl DivisorClass {
    pub fn new(d: i64, m: [i64; 10], n_points: u8) -> Result<Self> {
        if n_points != 9 && n_points != 10 {
            return Err(Error::Usage(format!("{n_points} blown-up points; expected 9 or 10")));
        }
        if n_points == 9 && m[9] != 0 {
            return Err(Error::Usage("tenth multiplicity on the nine-point blow-up".into()));
        }
        Ok(DivisorClass { d, m, n_points })
    }

    /// A class on the ten-point blow-up.
    pub fn on_ten(d: i64, m: [i64; 10]) -> Self {
        DivisorClass { d, m, n_points: 10 }
    }

    pub fn zero(n_points: u8) -> Self {
        DivisorClass { d: 0, m: [0; 10], n_points }
    }

    /// The same vector viewed on the nine-point blow-up, if `m_10 = 0`.
    pub fn on_nine(&self) -> Result<Self> {
        Self::new(self.d, self.m, 9)
    }

    pub fn is_zero(&self) -> bool {
        self.d == 0 && self.m.iter().all(|&x| x == 0)
    }

    pub fn scaled(&self, k: i64) -> Self {
        DivisorClass { d: k * self.d, m: self.m.map(|x| k * x), n_points: self.n_points }
    }

    fn combine(&self, other: &Self, sign: i64) -> Self {
        DivisorClass {
            d: self.d + sign * other.d,
            m: std::array::from_fn(|i| self.m[i] + sign * other.m[i]),
            n_points: self.n_points.max(other.n_points),
        }
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ms: Vec<String> = self.m[..self.n_points as usize].iter().map(|x| x.to_string()).collect();
        write!(f, "({}; {})", self.d, ms.join(","))
    }
}

impl Add for DivisorClass {
    type Output = DivisorClass;
    fn add(self, o: Self) -> Self {
        self.combine(&o, 1)
    }
}

impl Sub for DivisorClass {
    type Output = DivisorClass;
    fn sub(self, o: Self) -> Self {
        self.combine(&o, -1)
    }
}

impl Neg for DivisorClass {
    type Output = DivisorClass;
    fn neg(self) -> Self {
        self.scaled(-1)
    }
}

impl Mul<DivisorClass> for i64 {
    type Output = DivisorClass;
    fn mul(self, c: DivisorClass) -> DivisorClass {
        c.scaled(self)
    }
}

/// The intersection pairing `d d' - sum m_i m'_i`.
pub fn intersect(a: &DivisorClass, b: &DivisorClass) -> Result<i64> {
    if a.n_points != b.n_points {
        return Err(Error::Usage(format!(
            "pairing classes on blow-ups in {} and {} points",
            a.n_points, b.n_points
        )));
    }
    Ok(dot(a, b))
}

fn dot(a: &DivisorClass, b: &DivisorClass) -> i64 {
    a.d * b.d - a.m.iter().zip(&b.m).map(|(x, y)| x * y).sum::<i64>()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NamedClass {
    Line,
    /// Exceptional curve over the point with this 1-based index.
    E(usize),
    /// The anticanonical class of the nine-point blow-up, pulled back.
    JPrime,
    /// The anticanonical class of the ten-point blow-up.
    J,
    /// `E_9 - E_10`.
    F,
    /// The du Val class of genus `g`.
    C(i64),
    A(i64),
    B(i64),
    K,
}

pub fn named_class(name: NamedClass) -> Result<DivisorClass> {
    let mut m = [0i64; 10];
    let c = match name {
        NamedClass::Line => DivisorClass::on_ten(1, m),
        NamedClass::E(i) => {
            if !(1..=10).contains(&i) {
                return Err(Error::Usage(format!("no exceptional curve E_{i}")));
            }
            m[i - 1] = -1;
            DivisorClass::on_ten(0, m)
        }
        NamedClass::JPrime => {
            m[..9].fill(1);
            DivisorClass::on_ten(3, m)
        }
        NamedClass::J => DivisorClass::on_ten(3, [1; 10]),
        NamedClass::F => {
            m[8] = -1;
            m[9] = 1;
            DivisorClass::on_ten(0, m)
        }
        NamedClass::C(g) => {
            if g < 1 {
                return Err(Error::Usage(format!("genus {g} < 1")));
            }
            m[..8].fill(g);
            m[8] = g - 1;
            m[9] = 1;
            DivisorClass::on_ten(3 * g, m)
        }
        NamedClass::A(s) => {
            if s < 1 {
                return Err(Error::Usage(format!("s = {s} < 1")));
            }
            s * named_class(NamedClass::JPrime)? + named_class(NamedClass::F)?
        }
        NamedClass::B(s) => {
            if s < 1 {
                return Err(Error::Usage(format!("s = {s} < 1")));
            }
            (s + 1) * named_class(NamedClass::JPrime)?
        }
        NamedClass::K => DivisorClass::on_ten(-3, [-1; 10]),
    };
    Ok(c)
}

fn canonical(n_points: u8) -> DivisorClass {
    let mut m = [-1i64; 10];
    if n_points == 9 {
        m[9] = 0;
    }
    DivisorClass { d: -3, m, n_points }
}

/// Riemann-Roch on a rational surface: `1 + D.(D-K)/2`.
pub fn euler_char(d: &DivisorClass) -> i64 {
    let k = canonical(d.n_points);
    1 + dot(d, &(*d - k)) / 2
}

/// `1 + D.(D+K)/2`.
pub fn arithmetic_genus(d: &DivisorClass) -> i64 {
    let k = canonical(d.n_points);
    1 + dot(d, &(*d + k)) / 2
}

/// `K - D`.
pub fn serre_dual(d: &DivisorClass) -> DivisorClass {
    canonical(d.n_points) - *d
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityRow {
    pub identity: String,
    pub lhs: i64,
    pub rhs: i64,
    pub pass: bool,
}

/// The named classes entering the lattice checklist at a given `s`.
///
/// Exposed so a deliberately corrupted frame can exercise the failure path.
#[derive(Clone, Debug)]
pub struct LatticeFrame {
    pub s: i64,
    pub j_prime: DivisorClass,
    pub j: DivisorClass,
    pub f: DivisorClass,
    pub k: DivisorClass,
    pub a: DivisorClass,
    pub b: DivisorClass,
    pub c: DivisorClass,
}

impl LatticeFrame {
    pub fn new(s: i64) -> Result<Self> {
        Ok(LatticeFrame {
            s,
            j_prime: named_class(NamedClass::JPrime)?,
            j: named_class(NamedClass::J)?,
            f: named_class(NamedClass::F)?,
            k: named_class(NamedClass::K)?,
            a: named_class(NamedClass::A(s))?,
            b: named_class(NamedClass::B(s))?,
            c: named_class(NamedClass::C(2 * s + 1))?,
        })
    }

    pub fn check(&self) -> Vec<IdentityRow> {
        let s = self.s;
        let g = 2 * s + 1;
        let row = |name: &str, lhs: i64, rhs: i64| IdentityRow {
            identity: name.to_string(),
            lhs,
            rhs,
            pass: lhs == rhs,
        };
        vec![
            row("J'.J' = 0", dot(&self.j_prime, &self.j_prime), 0),
            row("J.J = -1", dot(&self.j, &self.j), -1),
            row("C.J = 0", dot(&self.c, &self.j), 0),
            row("F.F = -2", dot(&self.f, &self.f), -2),
            row("J'.F = 1", dot(&self.j_prime, &self.f), 1),
            row("C.C = 2g-2", dot(&self.c, &self.c), 2 * g - 2),
            row("C.K = 0", dot(&self.c, &self.k), 0),
            row("A.A = 2s-2", dot(&self.a, &self.a), 2 * s - 2),
            row("B.B = 0", dot(&self.b, &self.b), 0),
            row("B.C = s+1", dot(&self.b, &self.c), s + 1),
            row("A.C = 3s-1", dot(&self.a, &self.c), 3 * s - 1),
        ]
    }
}

pub fn verify_lattice_identities(s: i64) -> Result<Vec<IdentityRow>> {
    if s < 1 {
        return Err(Error::Usage(format!("s = {s} < 1")));
    }
    Ok(LatticeFrame::new(s)?.check())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn nc(n: NamedClass) -> DivisorClass {
        named_class(n).unwrap()
    }

    #[test]
    fn named_pairings() {
        let (j, jp, f) = (nc(NamedClass::J), nc(NamedClass::JPrime), nc(NamedClass::F));
        let c13 = nc(NamedClass::C(13));
        assert_eq!(intersect(&j, &j).unwrap(), -1);
        assert_eq!(intersect(&c13, &j).unwrap(), 0);
        assert_eq!(intersect(&f, &f).unwrap(), -2);
        assert_eq!(intersect(&jp, &f).unwrap(), 1);
        assert_eq!(intersect(&c13, &c13).unwrap(), 24);
    }

    #[test]
    fn mismatched_blowups_rejected() {
        let a = DivisorClass::new(1, [0; 10], 9).unwrap();
        let b = DivisorClass::on_ten(1, [0; 10]);
        assert!(matches!(intersect(&a, &b), Err(Error::Usage(_))));
        assert!(DivisorClass::new(0, [0, 0, 0, 0, 0, 0, 0, 0, 0, 1], 9).is_err());
    }

    #[test]
    fn named_vectors() {
        assert_eq!(nc(NamedClass::A(6)), DivisorClass::on_ten(18, [6, 6, 6, 6, 6, 6, 6, 6, 5, 1]));
        assert_eq!(nc(NamedClass::K), -nc(NamedClass::J));
        assert!((nc(NamedClass::C(13)) - nc(NamedClass::A(6)) - nc(NamedClass::B(6))).is_zero());
        assert_eq!(nc(NamedClass::K), nc(NamedClass::E(10)) - nc(NamedClass::JPrime));
    }

    #[test]
    fn riemann_roch_values() {
        let (a, b) = (nc(NamedClass::A(6)), nc(NamedClass::B(6)));
        assert_eq!(euler_char(&(b - a)), -1);
        assert_eq!(euler_char(&DivisorClass::zero(10)), 1);
        for s in 1..15 {
            let a = nc(NamedClass::A(s));
            // h0 - h1 + h2 = (s+1) - 1 + 0
            assert_eq!(euler_char(&a), s);
            assert_eq!(euler_char(&(2 * a)), 4 * s - 3);
            assert_eq!(arithmetic_genus(&a), s);
        }
        assert_eq!(arithmetic_genus(&nc(NamedClass::C(13))), 13);
        assert_eq!(arithmetic_genus(&nc(NamedClass::J)), 1);
    }

    #[test]
    fn duality() {
        let (a, b, j) = (nc(NamedClass::A(6)), nc(NamedClass::B(6)), nc(NamedClass::J));
        assert_eq!(serre_dual(&(b - a)), a - b - j);
        assert_eq!(serre_dual(&DivisorClass::zero(10)), nc(NamedClass::K));
    }

    #[test]
    fn lattice_checklist() {
        for s in [6, 7] {
            let rows = verify_lattice_identities(s).unwrap();
            assert_eq!(rows.len(), 11);
            assert!(rows.iter().all(|r| r.pass), "{rows:?}");
        }
    }

    #[test]
    fn corrupted_frame_fails_jf() {
        let mut frame = LatticeFrame::new(6).unwrap();
        frame.f = frame.f + nc(NamedClass::Line);
        let rows = frame.check();
        let jf = rows.iter().find(|r| r.identity == "J'.F = 1").unwrap();
        assert!(!jf.pass);
    }

    fn class() -> impl Strategy<Value = DivisorClass> {
        (-30i64..30, prop::array::uniform10(-10i64..10)).prop_map(|(d, m)| DivisorClass::on_ten(d, m))
    }

    proptest! {
        #[test]
        fn pairing_is_symmetric_bilinear(a in class(), b in class(), c in class(), k in -5i64..5) {
            prop_assert_eq!(intersect(&a, &b).unwrap(), intersect(&b, &a).unwrap());
            prop_assert_eq!(
                intersect(&(a + k * b), &c).unwrap(),
                intersect(&a, &c).unwrap() + k * intersect(&b, &c).unwrap()
            );
        }

        #[test]
        fn euler_char_is_serre_symmetric(a in class()) {
            prop_assert_eq!(euler_char(&a), euler_char(&serre_dual(&a)));
            prop_assert_eq!(serre_dual(&serre_dual(&a)), a);
            // chi(D) - chi(K - D) = (D.(D-K) - (K-D).(-D)) / 2 = 0
            let k = nc(NamedClass::K);
            prop_assert_eq!(dot(&a, &(a - k)), dot(&(k - a), &(-a)));
        }
    }

    #[test]
    fn restricted_degrees() {
        for s in 1..=20 {
            let c = nc(NamedClass::C(2 * s + 1));
            assert_eq!(intersect(&nc(NamedClass::B(s)), &c).unwrap(), s + 1);
            assert_eq!(intersect(&nc(NamedClass::A(s)), &c).unwrap(), 3 * s - 1);
        }
    }
}
