//! Exact Gauss-Wahl images as plane forms, reduced modulo the curve.
//!
//! `W(A, B) = A (F_y B_x - F_x B_y) - B (F_y A_x - F_x A_y)` has degree `3d - 8`
//! and equals `F_y^3 (f_A D f_B - f_B D f_A)` on the curve, so the rank of the
//! `W(A_i, A_j)` modulo `F` is the rank of the map with no sampling involved.

use crate::error::{Error, Result};
use crate::exactalg::{DenseMatrix, Field};
use crate::form::{monomial_index, monomials, PlaneForm};

/// `W(A, B)` for the curve `F`.
pub fn wahl_form<F: Field>(curve: &PlaneForm<F>, a: &PlaneForm<F>, b: &PlaneForm<F>) -> Result<PlaneForm<F>> {
    let [fx, fy, _] = curve.gradient();
    let cross = |p: &PlaneForm<F>| -> Result<PlaneForm<F>> {
        let field = p.field();
        fy.mul(&p.derivative(0)).add(&fx.mul(&p.derivative(1)).scale(&field.neg(&field.one())))
    };
    let left = a.mul(&cross(b)?);
    let right = b.mul(&cross(a)?);
    left.add(&right.scale(&curve.field().neg(&curve.field().one())))
}

/// The representative of `g` modulo `F` with `y`-degree below `deg F`.
///
/// Needs the `y^d` coefficient of `F` to be nonzero.
pub fn reduce_mod_curve<F: Field>(g: &PlaneForm<F>, curve: &PlaneForm<F>) -> Result<PlaneForm<F>> {
    let field = curve.field();
    let d = curve.degree();
    let e = g.degree();
    let lead_inv = field
        .inv(curve.leading_y())
        .ok_or_else(|| Error::Precondition("curve passes through (0:1:0)".into()))?;
    let mut c = g.coeffs().to_vec();
    if e < d {
        return Ok(g.clone());
    }
    let terms: Vec<([usize; 3], F::Elem)> = monomials(d)
        .zip(curve.coeffs().iter().cloned())
        .filter(|(m, v)| !field.is_zero(v) && *m != [0, d, 0])
        .collect();
    for b in (d..=e).rev() {
        for a in 0..=(e - b) {
            let idx = monomial_index(e, a, b);
            if field.is_zero(&c[idx]) {
                continue;
            }
            let q = field.mul(&c[idx], &lead_inv);
            c[idx] = field.zero();
            for ([a2, b2, _], v) in &terms {
                let t = monomial_index(e, a + a2, b - d + b2);
                c[t] = field.sub(&c[t], &field.mul(&q, v));
            }
        }
    }
    PlaneForm::new(field, e, c)
}

/// Rank of `{W(A_i, A_j) mod F : i < j}`.
pub fn wahl_rank<F: Field>(curve: &PlaneForm<F>, adjoints: &[PlaneForm<F>]) -> Result<usize> {
    let mut rows = Vec::new();
    for i in 0..adjoints.len() {
        for j in i + 1..adjoints.len() {
            let w = wahl_form(curve, &adjoints[i], &adjoints[j])?;
            rows.push(reduce_mod_curve(&w, curve)?.coeffs().to_vec());
        }
    }
    if rows.is_empty() {
        return Ok(0);
    }
    Ok(DenseMatrix::from_rows(curve.field(), rows)?.rank())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::Fp;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn f() -> Fp {
        Fp::new(1_000_003).unwrap()
    }

    fn random_form(field: &Fp, d: usize, rng: &mut ChaCha8Rng) -> PlaneForm<Fp> {
        let n = crate::form::monomial_count(d);
        PlaneForm::new(field, d, (0..n).map(|_| field.random(rng)).collect()).unwrap()
    }

    #[test]
    fn reduction_kills_multiples_and_keeps_residue() {
        let field = f();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let curve = random_form(&field, 4, &mut rng);
        let q = random_form(&field, 3, &mut rng);
        let r = random_form(&field, 7, &mut rng);
        let r0 = reduce_mod_curve(&r, &curve).unwrap();
        let shifted = r.add(&curve.mul(&q)).unwrap();
        assert_eq!(reduce_mod_curve(&shifted, &curve).unwrap(), r0);
        assert!(reduce_mod_curve(&curve.mul(&q), &curve).unwrap().is_zero());
        for [_, b, _] in monomials(7).zip(r0.coeffs()).filter(|(_, v)| **v != 0).map(|(m, _)| m) {
            assert!(b < 4);
        }
    }

    #[test]
    fn wahl_form_is_antisymmetric_and_bilinear() {
        let field = f();
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let curve = random_form(&field, 5, &mut rng);
        let a = random_form(&field, 2, &mut rng);
        let b = random_form(&field, 2, &mut rng);
        let c = random_form(&field, 2, &mut rng);
        let ab = wahl_form(&curve, &a, &b).unwrap();
        let ba = wahl_form(&curve, &b, &a).unwrap();
        assert!(ab.add(&ba).unwrap().is_zero());
        assert!(wahl_form(&curve, &a, &a).unwrap().is_zero());
        assert_eq!(ab.degree(), 7);
        let lhs = wahl_form(&curve, &a, &b.add(&c).unwrap()).unwrap();
        let rhs = ab.add(&wahl_form(&curve, &a, &c).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }
}
