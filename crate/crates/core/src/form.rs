//! Projective points, plane projectivities and homogeneous ternary forms.
//!
//! Monomials `x^a y^b z^c` of degree `d` are indexed by decreasing `a`, then
//! decreasing `b`: `x^d, x^{d-1}y, x^{d-1}z, x^{d-2}y^2, ...`. Every echelon
//! basis in the crate is taken with respect to this order.

use rand::Rng;

use crate::error::{Error, Result};
use crate::exactalg::{binomial_table, interpolate_consecutive, Field, UniPoly};

pub fn monomial_count(degree: usize) -> usize {
    (degree + 1) * (degree + 2) / 2
}

#[inline]
pub fn monomial_index(degree: usize, a: usize, b: usize) -> usize {
    let r = degree - a;
    r * (r + 1) / 2 + (r - b)
}

/// Exponent triples of degree `d` in index order.
pub fn monomials(degree: usize) -> impl Iterator<Item = [usize; 3]> {
    (0..=degree)
        .rev()
        .flat_map(move |a| (0..=degree - a).rev().map(move |b| [a, b, degree - a - b]))
}

/// A point of the projective plane, normalized so its last nonzero coordinate is one.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProjPoint<F: Field> {
    coords: [F::Elem; 3],
}

impl<F: Field> ProjPoint<F> {
    pub fn new(field: &F, coords: [F::Elem; 3]) -> Result<Self> {
        let k = (0..3)
            .rev()
            .find(|&i| !field.is_zero(&coords[i]))
            .ok_or_else(|| Error::Usage("(0:0:0) is not a projective point".into()))?;
        let inv = field.inv(&coords[k]).expect("nonzero");
        Ok(ProjPoint { coords: coords.map(|c| field.mul(&c, &inv)) })
    }

    pub fn affine(field: &F, x: F::Elem, y: F::Elem) -> Self {
        ProjPoint { coords: [x, y, field.one()] }
    }

    pub fn coords(&self) -> &[F::Elem; 3] {
        &self.coords
    }

    /// Index of the coordinate normalized to one.
    pub fn chart(&self, field: &F) -> usize {
        (0..3).rev().find(|&i| !field.is_zero(&self.coords[i])).expect("normalized point")
    }

    pub fn is_affine(&self, field: &F) -> bool {
        !field.is_zero(&self.coords[2])
    }

    pub fn x(&self) -> &F::Elem {
        &self.coords[0]
    }
    pub fn y(&self) -> &F::Elem {
        &self.coords[1]
    }
}

/// Cross product of two coordinate vectors.
pub fn cross<F: Field>(field: &F, p: &[F::Elem; 3], q: &[F::Elem; 3]) -> [F::Elem; 3] {
    let m = |a: &F::Elem, b: &F::Elem, c: &F::Elem, d: &F::Elem| field.sub(&field.mul(a, b), &field.mul(c, d));
    [
        m(&p[1], &q[2], &p[2], &q[1]),
        m(&p[2], &q[0], &p[0], &q[2]),
        m(&p[0], &q[1], &p[1], &q[0]),
    ]
}

/// Whether three points lie on a line.
pub fn collinear<F: Field>(field: &F, p: &ProjPoint<F>, q: &ProjPoint<F>, r: &ProjPoint<F>) -> bool {
    let l = cross(field, p.coords(), q.coords());
    let dot = (0..3).fold(field.zero(), |acc, i| field.add(&acc, &field.mul(&l[i], &r.coords()[i])));
    field.is_zero(&dot)
}

/// An invertible 3x3 matrix acting on column vectors of homogeneous coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Projectivity<F: Field> {
    m: [[F::Elem; 3]; 3],
}

impl<F: Field> Projectivity<F> {
    pub fn new(field: &F, m: [[F::Elem; 3]; 3]) -> Result<Self> {
        let t = Projectivity { m };
        if field.is_zero(&t.det(field)) {
            return Err(Error::Usage("singular coordinate change".into()));
        }
        Ok(t)
    }

    pub fn identity(field: &F) -> Self {
        let (o, z) = (field.one(), field.zero());
        Projectivity {
            m: [
                [o.clone(), z.clone(), z.clone()],
                [z.clone(), o.clone(), z.clone()],
                [z.clone(), z, o],
            ],
        }
    }

    /// A uniformly random invertible matrix.
    pub fn random<R: Rng + ?Sized>(field: &F, rng: &mut R) -> Self {
        loop {
            let m = std::array::from_fn(|_| std::array::from_fn(|_| field.random(rng)));
            if let Ok(t) = Self::new(field, m) {
                return t;
            }
        }
    }

    /// The change of coordinates sending `a, b, c` to `(1:0:0), (0:1:0), (0:0:1)`.
    pub fn to_vertices(field: &F, a: &ProjPoint<F>, b: &ProjPoint<F>, c: &ProjPoint<F>) -> Result<Self> {
        let cols = [a.coords(), b.coords(), c.coords()];
        let m = std::array::from_fn(|i| std::array::from_fn(|j| cols[j][i].clone()));
        Projectivity::new(field, m)
            .map_err(|_| Error::Usage("frame points are collinear".into()))?
            .inverse(field)
    }

    pub fn matrix(&self) -> &[[F::Elem; 3]; 3] {
        &self.m
    }

    pub fn det(&self, field: &F) -> F::Elem {
        let m = &self.m;
        let minor = |r1: usize, r2: usize, c1: usize, c2: usize| {
            field.sub(&field.mul(&m[r1][c1], &m[r2][c2]), &field.mul(&m[r1][c2], &m[r2][c1]))
        };
        let t0 = field.mul(&m[0][0], &minor(1, 2, 1, 2));
        let t1 = field.mul(&m[0][1], &minor(1, 2, 0, 2));
        let t2 = field.mul(&m[0][2], &minor(1, 2, 0, 1));
        field.add(&field.sub(&t0, &t1), &t2)
    }

    pub fn inverse(&self, field: &F) -> Result<Self> {
        let m = &self.m;
        let det_inv = field
            .inv(&self.det(field))
            .ok_or_else(|| Error::Usage("singular coordinate change".into()))?;
        let cof = |r: usize, c: usize| {
            let (r1, r2) = ((r + 1) % 3, (r + 2) % 3);
            let (c1, c2) = ((c + 1) % 3, (c + 2) % 3);
            field.sub(&field.mul(&m[r1][c1], &m[r2][c2]), &field.mul(&m[r1][c2], &m[r2][c1]))
        };
        // inverse = adj / det, adj[i][j] = cofactor[j][i]
        let inv = std::array::from_fn(|i| std::array::from_fn(|j| field.mul(&cof(j, i), &det_inv)));
        Ok(Projectivity { m: inv })
    }

    pub fn apply_coords(&self, field: &F, v: &[F::Elem; 3]) -> [F::Elem; 3] {
        std::array::from_fn(|i| {
            (0..3).fold(field.zero(), |acc, j| field.add(&acc, &field.mul(&self.m[i][j], &v[j])))
        })
    }

    pub fn apply(&self, field: &F, p: &ProjPoint<F>) -> ProjPoint<F> {
        ProjPoint::new(field, self.apply_coords(field, p.coords())).expect("invertible map")
    }

    /// `self` after `other`.
    pub fn compose(&self, field: &F, other: &Self) -> Self {
        let m = std::array::from_fn(|i| {
            std::array::from_fn(|j| {
                (0..3).fold(field.zero(), |acc, k| {
                    field.add(&acc, &field.mul(&self.m[i][k], &other.m[k][j]))
                })
            })
        });
        Projectivity { m }
    }
}

/// A homogeneous polynomial in `x, y, z` of fixed degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneForm<F: Field> {
    field: F,
    degree: usize,
    coeffs: Vec<F::Elem>,
}

impl<F: Field> PlaneForm<F> {
    pub fn new(field: &F, degree: usize, coeffs: Vec<F::Elem>) -> Result<Self> {
        if coeffs.len() != monomial_count(degree) {
            return Err(Error::Usage(format!(
                "{} coefficients for a degree-{degree} form",
                coeffs.len()
            )));
        }
        Ok(PlaneForm { field: field.clone(), degree, coeffs })
    }

    pub fn zero(field: &F, degree: usize) -> Self {
        PlaneForm { field: field.clone(), degree, coeffs: vec![field.zero(); monomial_count(degree)] }
    }

    /// Build from `(coefficient, [a, b, c])` terms; exponents must sum to `degree`.
    pub fn from_terms(field: &F, degree: usize, terms: &[(i64, [usize; 3])]) -> Result<Self> {
        let mut f = Self::zero(field, degree);
        for &(c, e) in terms {
            if e.iter().sum::<usize>() != degree {
                return Err(Error::Usage(format!("monomial {e:?} is not of degree {degree}")));
            }
            let i = monomial_index(degree, e[0], e[1]);
            f.coeffs[i] = field.add(&f.coeffs[i], &field.from_i64(c));
        }
        Ok(f)
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn degree(&self) -> usize {
        self.degree
    }
    pub fn coeffs(&self) -> &[F::Elem] {
        &self.coeffs
    }
    pub fn coeff(&self, a: usize, b: usize) -> &F::Elem {
        &self.coeffs[monomial_index(self.degree, a, b)]
    }
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| self.field.is_zero(c))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.degree != other.degree {
            return Err(Error::Usage("adding forms of different degrees".into()));
        }
        let f = &self.field;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| f.add(a, b)).collect();
        Ok(PlaneForm { field: f.clone(), degree: self.degree, coeffs })
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let f = &self.field;
        PlaneForm {
            field: f.clone(),
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|a| f.mul(a, c)).collect(),
        }
    }

    /// Linear combination `sum c_i B_i` of forms of one degree.
    pub fn combination(field: &F, degree: usize, forms: &[Self], coeffs: &[F::Elem]) -> Result<Self> {
        let mut out = Self::zero(field, degree);
        for (b, c) in forms.iter().zip(coeffs) {
            if b.degree != degree {
                return Err(Error::Usage("combining forms of different degrees".into()));
            }
            let nc = field.neg(c);
            field.sub_mul_assign(&mut out.coeffs, &b.coeffs, &nc);
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let f = &self.field;
        let d = self.degree + other.degree;
        let mut out = vec![f.zero(); monomial_count(d)];
        let other_terms: Vec<([usize; 3], &F::Elem)> = monomials(other.degree)
            .zip(&other.coeffs)
            .filter(|(_, c)| !f.is_zero(c))
            .collect();
        for (e1, c1) in monomials(self.degree).zip(&self.coeffs) {
            if f.is_zero(c1) {
                continue;
            }
            for (e2, c2) in &other_terms {
                let i = monomial_index(d, e1[0] + e2[0], e1[1] + e2[1]);
                out[i] = f.add(&out[i], &f.mul(c1, c2));
            }
        }
        PlaneForm { field: f.clone(), degree: d, coeffs: out }
    }

    /// Partial derivative with respect to variable `var` (0 = x, 1 = y, 2 = z).
    pub fn derivative(&self, var: usize) -> Self {
        let f = &self.field;
        if self.degree == 0 {
            return Self::zero(f, 0);
        }
        let d = self.degree - 1;
        let mut out = vec![f.zero(); monomial_count(d)];
        for (e, c) in monomials(self.degree).zip(&self.coeffs) {
            if e[var] == 0 || f.is_zero(c) {
                continue;
            }
            let mut e2 = e;
            e2[var] -= 1;
            let i = monomial_index(d, e2[0], e2[1]);
            out[i] = f.add(&out[i], &f.mul(c, &f.from_u64(e[var] as u64)));
        }
        PlaneForm { field: f.clone(), degree: d, coeffs: out }
    }

    pub fn gradient(&self) -> [Self; 3] {
        [self.derivative(0), self.derivative(1), self.derivative(2)]
    }

    pub fn eval(&self, v: &[F::Elem; 3]) -> F::Elem {
        let f = &self.field;
        let pw = |x: &F::Elem| {
            let mut p = Vec::with_capacity(self.degree + 1);
            p.push(f.one());
            for i in 0..self.degree {
                p.push(f.mul(&p[i], x));
            }
            p
        };
        let (px, py, pz) = (pw(&v[0]), pw(&v[1]), pw(&v[2]));
        monomials(self.degree).zip(&self.coeffs).fold(f.zero(), |acc, (e, c)| {
            if f.is_zero(c) {
                acc
            } else {
                f.add(&acc, &f.mul(c, &f.mul(&px[e[0]], &f.mul(&py[e[1]], &pz[e[2]]))))
            }
        })
    }

    pub fn eval_point(&self, p: &ProjPoint<F>) -> F::Elem {
        self.eval(p.coords())
    }

    pub fn eval_affine(&self, x: &F::Elem, y: &F::Elem) -> F::Elem {
        self.eval(&[x.clone(), y.clone(), self.field.one()])
    }

    /// `t -> F(P + t Q)` as a univariate polynomial of degree at most `deg F`.
    pub fn restrict_to_line(&self, p: &[F::Elem; 3], q: &[F::Elem; 3]) -> UniPoly<F> {
        let f = &self.field;
        let lin: Vec<UniPoly<F>> =
            (0..3).map(|i| UniPoly::new(f, vec![p[i].clone(), q[i].clone()])).collect();
        let powers = |l: &UniPoly<F>| {
            let mut v = vec![UniPoly::constant(f, f.one())];
            for i in 0..self.degree {
                v.push(v[i].mul(l));
            }
            v
        };
        let (px, py, pz) = (powers(&lin[0]), powers(&lin[1]), powers(&lin[2]));
        let mut acc = UniPoly::zero(f);
        for (e, c) in monomials(self.degree).zip(&self.coeffs) {
            if f.is_zero(c) {
                continue;
            }
            acc = acc.add(&px[e[0]].mul(&py[e[1]]).mul(&pz[e[2]]).scale(c));
        }
        acc
    }

    /// `y -> F(x0, y, 1)`.
    pub fn univariate_in_y(&self, x0: &F::Elem) -> UniPoly<F> {
        let f = &self.field;
        let mut xp = vec![f.one()];
        for i in 0..self.degree {
            xp.push(f.mul(&xp[i], x0));
        }
        let mut out = vec![f.zero(); self.degree + 1];
        for (e, c) in monomials(self.degree).zip(&self.coeffs) {
            if !f.is_zero(c) {
                out[e[1]] = f.add(&out[e[1]], &f.mul(c, &xp[e[0]]));
            }
        }
        UniPoly::new(f, out)
    }

    /// `y -> F(1, y, 0)`: the points at infinity away from `(0:1:0)`.
    pub fn at_infinity_in_y(&self) -> UniPoly<F> {
        let d = self.degree;
        UniPoly::new(&self.field, (0..=d).map(|b| self.coeff(d - b, b).clone()).collect())
    }

    /// Coefficient of `y^d`; nonzero iff `(0:1:0)` is off the curve.
    pub fn leading_y(&self) -> &F::Elem {
        self.coeff(0, self.degree)
    }

    /// `Res_y(F(x, y, 1), G(x, y, 1))` as a polynomial in `x`.
    ///
    /// Both forms need a nonzero `y^d` coefficient so that specializing `x`
    /// commutes with the resultant; the result has degree at most `deg F deg G`
    /// and is recovered by interpolation on `x = 0..=deg F deg G`.
    pub fn resultant_in_x(&self, other: &Self) -> Result<UniPoly<F>> {
        let f = &self.field;
        if f.is_zero(self.leading_y()) || f.is_zero(other.leading_y()) {
            return Err(Error::Usage("form has no y^d term".into()));
        }
        let values: Vec<F::Elem> = (0..=self.degree * other.degree)
            .map(|x| {
                let x = f.from_u64(x as u64);
                self.univariate_in_y(&x).resultant(&other.univariate_in_y(&x))
            })
            .collect();
        Ok(interpolate_consecutive(f, &values))
    }

    /// `Res_y(F, F_y)` in the affine chart `z = 1`, as a polynomial in `x`.
    pub fn discriminant_in_x(&self) -> Result<UniPoly<F>> {
        if self.degree == 0 {
            return Err(Error::Usage("discriminant of a constant".into()));
        }
        let fy = self.derivative(1);
        if self.field.is_zero(self.leading_y()) {
            return Err(Error::Usage("form has no y^d term".into()));
        }
        self.resultant_in_x(&fy)
    }

    /// The pulled-back form `X -> F(M X)`.
    pub fn compose(&self, t: &Projectivity<F>) -> Self {
        let f = &self.field;
        let d = self.degree;
        let lin: Vec<PlaneForm<F>> = t
            .matrix()
            .iter()
            .map(|row| PlaneForm { field: f.clone(), degree: 1, coeffs: row.to_vec() })
            .collect();
        let powers = |l: &PlaneForm<F>| {
            let mut v = vec![PlaneForm { field: f.clone(), degree: 0, coeffs: vec![f.one()] }];
            for i in 0..d {
                v.push(v[i].mul(l));
            }
            v
        };
        let (p0, p1, p2) = (powers(&lin[0]), powers(&lin[1]), powers(&lin[2]));
        let mut out = Self::zero(f, d);
        for a in 0..=d {
            let mut inner = Self::zero(f, d - a);
            for b in 0..=d - a {
                let c = self.coeff(a, b);
                if f.is_zero(c) {
                    continue;
                }
                let term = p1[b].mul(&p2[d - a - b]).scale(c);
                inner = inner.add(&term).expect("same degree");
            }
            if !inner.is_zero() {
                out = out.add(&p0[a].mul(&inner)).expect("same degree");
            }
        }
        out
    }
}

/// Probabilistic smoothness certificate for a plane curve.
///
/// After a random coordinate change, the curve is smooth if `Res_y(F, F_y)` is a
/// nonzero squarefree polynomial in `x` (no singular affine point) and the line
/// at infinity meets the curve in `d` distinct points (no singular point there).
/// A `false` answer after `attempts` coordinate changes is reported as singular;
/// singular curves can never be certified.
pub fn certify_smooth<F: Field, R: Rng + ?Sized>(form: &PlaneForm<F>, rng: &mut R, attempts: usize) -> Result<bool> {
    let f = form.field();
    for _ in 0..attempts {
        let g = form.compose(&Projectivity::random(f, rng));
        if f.is_zero(g.leading_y()) {
            continue;
        }
        let r = g.discriminant_in_x()?;
        let inf = g.at_infinity_in_y();
        if !r.is_zero() && r.is_squarefree() && inf.degree() == Some(form.degree()) && inf.is_squarefree() {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Precomputed data for local Taylor coefficients of degree-`d` forms at one point.
///
/// In the chart where the point's last nonzero coordinate is one, with local
/// coordinates `u, v` along the other two variables, row `(a, b)` holds the
/// coefficient of `u^a v^b` in `F(P + u e_i + v e_j)` as a linear functional on
/// the coefficients of `F`.
pub struct LocalExpansion<F: Field> {
    field: F,
    degree: usize,
    local_vars: [usize; 2],
    powers: [Vec<F::Elem>; 2],
    binom: Vec<Vec<F::Elem>>,
}

impl<F: Field> LocalExpansion<F> {
    pub fn new(field: &F, degree: usize, point: &ProjPoint<F>) -> Self {
        let k = point.chart(field);
        let local_vars = match k {
            0 => [1, 2],
            1 => [0, 2],
            _ => [0, 1],
        };
        let pw = |x: &F::Elem| {
            let mut p = vec![field.one()];
            for i in 0..degree {
                p.push(field.mul(&p[i], x));
            }
            p
        };
        LocalExpansion {
            field: field.clone(),
            degree,
            local_vars,
            powers: [pw(&point.coords()[local_vars[0]]), pw(&point.coords()[local_vars[1]])],
            binom: binomial_table(field, degree),
        }
    }

    pub fn local_vars(&self) -> [usize; 2] {
        self.local_vars
    }

    /// Writes the functional for `u^a v^b` into `out` (length `monomial_count(d)`).
    pub fn row_into(&self, a: usize, b: usize, out: &mut [F::Elem]) {
        let f = &self.field;
        let [i, j] = self.local_vars;
        for (idx, e) in monomials(self.degree).enumerate() {
            out[idx] = if e[i] < a || e[j] < b {
                f.zero()
            } else {
                let s = f.mul(&self.binom[e[i]][a], &self.powers[0][e[i] - a]);
                let t = f.mul(&self.binom[e[j]][b], &self.powers[1][e[j] - b]);
                f.mul(&s, &t)
            };
        }
    }

    pub fn row(&self, a: usize, b: usize) -> Vec<F::Elem> {
        let mut out = vec![self.field.zero(); monomial_count(self.degree)];
        self.row_into(a, b, &mut out);
        out
    }

    /// Local coefficients of `form` of total order exactly `k`, indexed by the power of `u`.
    pub fn coefficients_of_order(&self, form: &PlaneForm<F>, k: usize) -> Vec<F::Elem> {
        let f = &self.field;
        (0..=k)
            .map(|a| {
                let row = self.row(a, k - a);
                row.iter()
                    .zip(form.coeffs())
                    .fold(f.zero(), |acc, (r, c)| f.add(&acc, &f.mul(r, c)))
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{Fp, Rationals, MERSENNE_61};
    use rand::SeedableRng;

    #[test]
    fn monomial_order() {
        let m: Vec<_> = monomials(2).collect();
        assert_eq!(m, vec![[2, 0, 0], [1, 1, 0], [1, 0, 1], [0, 2, 0], [0, 1, 1], [0, 0, 2]]);
        for d in 0..12 {
            for (i, e) in monomials(d).enumerate() {
                assert_eq!(monomial_index(d, e[0], e[1]), i);
            }
            assert_eq!(monomials(d).count(), monomial_count(d));
        }
    }

    #[test]
    fn compose_agrees_with_evaluation() {
        let f = Fp::new(MERSENNE_61).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let coeffs = (0..monomial_count(5)).map(|_| f.random(&mut rng)).collect();
        let form = PlaneForm::new(&f, 5, coeffs).unwrap();
        let t = Projectivity::random(&f, &mut rng);
        let g = form.compose(&t);
        for _ in 0..5 {
            let v = [f.random(&mut rng), f.random(&mut rng), f.random(&mut rng)];
            assert_eq!(g.eval(&v), form.eval(&t.apply_coords(&f, &v)));
        }
        let ti = t.inverse(&f).unwrap();
        assert_eq!(t.compose(&f, &ti), Projectivity::identity(&f));
    }

    #[test]
    fn vertices_frame() {
        let f = Rationals;
        let p = |x: i64, y: i64| ProjPoint::affine(&f, f.from_i64(x), f.from_i64(y));
        let (a, b, c) = (p(1, 2), p(-3, 5), p(7, 7));
        let t = Projectivity::to_vertices(&f, &a, &b, &c).unwrap();
        assert_eq!(t.apply(&f, &a).coords(), &[f.one(), f.zero(), f.zero()]);
        assert_eq!(t.apply(&f, &b).coords(), &[f.zero(), f.one(), f.zero()]);
        assert_eq!(t.apply(&f, &c).coords(), &[f.zero(), f.zero(), f.one()]);
        assert!(Projectivity::to_vertices(&f, &p(0, 0), &p(1, 1), &p(2, 2)).is_err());
    }

    #[test]
    fn taylor_rows_detect_multiplicity() {
        let f = Rationals;
        // y^2 z - x^3 has a cusp (multiplicity 2) at (0:0:1).
        let cusp = PlaneForm::from_terms(&f, 3, &[(1, [0, 2, 1]), (-1, [3, 0, 0])]).unwrap();
        let origin = ProjPoint::affine(&f, f.zero(), f.zero());
        let le = LocalExpansion::new(&f, 3, &origin);
        assert!(le.coefficients_of_order(&cusp, 0).iter().all(|c| f.is_zero(c)));
        assert!(le.coefficients_of_order(&cusp, 1).iter().all(|c| f.is_zero(c)));
        // indexed by the power of u = x: only v^2 = y^2 survives
        assert_eq!(le.coefficients_of_order(&cusp, 2), vec![f.one(), f.zero(), f.zero()]);
    }

    #[test]
    fn line_restriction() {
        let f = Rationals;
        // x y - z^2 along (1:0:1) + t (0:1:0) is t - 1.
        let form = PlaneForm::from_terms(&f, 2, &[(1, [1, 1, 0]), (-1, [0, 0, 2])]).unwrap();
        let r = form.restrict_to_line(&[f.one(), f.zero(), f.one()], &[f.zero(), f.one(), f.zero()]);
        assert_eq!(r, UniPoly::from_i64(&f, &[-1, 1]));
    }
}
