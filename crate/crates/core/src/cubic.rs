//! Nine-point configurations and the group law on the cubic through them.
//!
//! Every degree-1 class `sum c_i [P_i] + n [L]` on a smooth cubic is linearly
//! equivalent to exactly one point. With an auxiliary origin `O` and
//! `O' = third(O, O)`, that point is `(+)c_i P_i (+) n O'` in the group with
//! identity `O`; the answer does not depend on the choice of `O`.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::field::{bigint_from_json, bigint_to_json};
use crate::exactalg::{
    reduce_rational_point, roots_in_field, DenseMatrix, Field, FieldKind, FieldScalar, Fp, Rationals,
};
use crate::form::{certify_smooth, cross, monomial_count, monomial_index, monomials, PlaneForm, ProjPoint};

pub const CONFIG_SCHEMA: u32 = 1;

/// Orders for which `torsion_model` ships a parametrization.
pub const SUPPORTED_ORDERS: [u32; 8] = [2, 3, 4, 5, 6, 7, 8, 9];

const SMOOTHNESS_ATTEMPTS: usize = 4;
const GEN_ATTEMPTS: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Provenance {
    #[default]
    Explicit,
    Generated { order: u32, seed: u64 },
}

/// Nine distinct points with exactly one cubic through them.
#[derive(Clone, Debug)]
pub struct PointConfig<F: Field> {
    field: F,
    points: Vec<ProjPoint<F>>,
    cubic: PlaneForm<F>,
    provenance: Provenance,
}

impl<F: Field> PointConfig<F> {
    pub fn new(field: &F, points: Vec<ProjPoint<F>>, provenance: Provenance) -> Result<Self> {
        if points.len() != 9 {
            return Err(Error::Usage(format!("{} points; a configuration has nine", points.len())));
        }
        for i in 0..9 {
            for j in 0..i {
                if points[i] == points[j] {
                    return Err(Error::Usage(format!("p{} and p{} coincide", j + 1, i + 1)));
                }
            }
        }
        let cubic = unique_cubic(field, &points)?;
        Ok(PointConfig { field: field.clone(), points, cubic, provenance })
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn points(&self) -> &[ProjPoint<F>] {
        &self.points
    }
    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }
    /// The cubic through the nine points, first nonzero coefficient one.
    pub fn cubic_form(&self) -> &PlaneForm<F> {
        &self.cubic
    }

    pub fn to_json(&self) -> Result<String> {
        let mut pts = Vec::new();
        for (i, p) in self.points.iter().enumerate() {
            if !p.is_affine(&self.field) {
                return Err(Error::Unsupported(format!("p{} is at infinity", i + 1)));
            }
            let mut row = Vec::with_capacity(4);
            for c in [p.x(), p.y()] {
                let (n, d) = match self.field.to_scalar(c) {
                    FieldScalar::Prime { v, .. } => (BigInt::from(v), BigInt::from(1)),
                    FieldScalar::Rational(r) => (r.numer().clone(), r.denom().clone()),
                };
                row.push(bigint_to_json(&n));
                row.push(bigint_to_json(&d));
            }
            pts.push(<[serde_json::Value; 4]>::try_from(row).expect("four entries"));
        }
        let raw = RawConfig {
            schema: CONFIG_SCHEMA,
            field: self.field.kind(),
            points: pts,
            provenance: self.provenance.clone(),
        };
        Ok(serde_json::to_string_pretty(&raw)?)
    }
}

impl PointConfig<Rationals> {
    pub fn reduce_mod(&self, p: u64) -> Result<PointConfig<Fp>> {
        let field = Fp::new(p)?;
        let pts = self
            .points
            .iter()
            .enumerate()
            .map(|(i, pt)| {
                let [x, y] = reduce_rational_point(&[pt.x().clone(), pt.y().clone()], p)
                    .map_err(|e| Error::BadPrime(format!("p{}: {e}", i + 1)))?;
                Ok(ProjPoint::affine(&field, x, y))
            })
            .collect::<Result<Vec<_>>>()?;
        PointConfig::new(&field, pts, self.provenance.clone())
    }
}

#[derive(Serialize, Deserialize)]
struct RawConfig {
    schema: u32,
    field: FieldKind,
    points: Vec<[serde_json::Value; 4]>,
    #[serde(default)]
    provenance: Provenance,
}

/// A configuration as read from disk, over whichever field it declares.
#[derive(Clone, Debug)]
pub enum LoadedConfig {
    Rational(PointConfig<Rationals>),
    Prime(PointConfig<Fp>),
}

impl LoadedConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: RawConfig = serde_json::from_str(text)?;
        if raw.schema != CONFIG_SCHEMA {
            return Err(Error::Usage(format!("config schema {} is not {CONFIG_SCHEMA}", raw.schema)));
        }
        let mut rats = Vec::with_capacity(raw.points.len());
        for (i, row) in raw.points.iter().enumerate() {
            let mut v = Vec::with_capacity(4);
            for e in row {
                v.push(bigint_from_json(e).ok_or_else(|| {
                    Error::Usage(format!("p{}: coordinate entry {e} is not an integer", i + 1))
                })?);
            }
            let frac = |n: &BigInt, d: &BigInt| {
                if d == &BigInt::from(0) {
                    Err(Error::Usage(format!("p{}: zero denominator", i + 1)))
                } else {
                    Ok(BigRational::new(n.clone(), d.clone()))
                }
            };
            rats.push([frac(&v[0], &v[1])?, frac(&v[2], &v[3])?]);
        }
        match raw.field {
            FieldKind::Rational => {
                let f = Rationals;
                let pts = rats.into_iter().map(|[x, y]| ProjPoint::affine(&f, x, y)).collect();
                Ok(LoadedConfig::Rational(PointConfig::new(&f, pts, raw.provenance)?))
            }
            FieldKind::Prime { p } => {
                let f = Fp::new(p)?;
                let pts = rats
                    .iter()
                    .enumerate()
                    .map(|(i, pt)| {
                        let [x, y] = reduce_rational_point(pt, p)
                            .map_err(|e| Error::BadPrime(format!("p{}: {e}", i + 1)))?;
                        Ok(ProjPoint::affine(&f, x, y))
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(LoadedConfig::Prime(PointConfig::new(&f, pts, raw.provenance)?))
            }
        }
    }

    pub fn load(path: &std::path::Path) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    pub fn to_json(&self) -> Result<String> {
        match self {
            LoadedConfig::Rational(c) => c.to_json(),
            LoadedConfig::Prime(c) => c.to_json(),
        }
    }

    pub fn provenance(&self) -> &Provenance {
        match self {
            LoadedConfig::Rational(c) => c.provenance(),
            LoadedConfig::Prime(c) => c.provenance(),
        }
    }

    /// The configuration over GF(p).
    ///
    /// Rational points are reduced. A generated configuration requested at a
    /// prime other than its own is regenerated from its (order, seed) there.
    pub fn at_prime(&self, p: u64) -> Result<PointConfig<Fp>> {
        match self {
            LoadedConfig::Rational(c) => c.reduce_mod(p),
            LoadedConfig::Prime(c) if c.field().modulus() == p => Ok(c.clone()),
            LoadedConfig::Prime(c) => match c.provenance() {
                Provenance::Generated { order, seed } => gen_halphen_config(*order, *seed, p),
                Provenance::Explicit => Err(Error::Unsupported(format!(
                    "explicit configuration over GF({}) cannot be moved to GF({p})",
                    c.field().modulus()
                ))),
            },
        }
    }
}

/// The nine rational points shipped with the crate, general in every sense the
/// toolkit can test.
pub fn reference_config() -> PointConfig<Rationals> {
    match LoadedConfig::from_json(include_str!("../data/nine_points_general.json")) {
        Ok(LoadedConfig::Rational(c)) => c,
        _ => unreachable!("shipped configuration is rational and valid"),
    }
}

/// The unique cubic through nine points, normalized so its first nonzero coefficient is one.
pub fn unique_cubic<F: Field>(field: &F, points: &[ProjPoint<F>]) -> Result<PlaneForm<F>> {
    let rows = points
        .iter()
        .map(|p| monomials(3).map(|e| monomial_value(field, p.coords(), e)).collect())
        .collect();
    let m = DenseMatrix::from_rows(field, rows)?;
    let (_, kernel) = m.rank_and_kernel();
    if kernel.len() != 1 {
        return Err(Error::DegenerateConfig(format!(
            "{} independent cubics pass through the points",
            kernel.len()
        )));
    }
    let v = &kernel[0];
    let lead = v.iter().find(|c| !field.is_zero(c)).expect("kernel vector is nonzero");
    let inv = field.inv(lead).expect("nonzero");
    PlaneForm::new(field, 3, v.iter().map(|c| field.mul(c, &inv)).collect())
}

fn monomial_value<F: Field>(field: &F, v: &[F::Elem; 3], e: [usize; 3]) -> F::Elem {
    (0..3).fold(field.one(), |acc, i| field.mul(&acc, &field.pow(&v[i], e[i] as u64)))
}

/// A smooth plane cubic with a chosen origin for the group law.
#[derive(Clone, Debug)]
pub struct CubicModel<F: Field> {
    form: PlaneForm<F>,
    origin: ProjPoint<F>,
    /// `third(O, O)`: the point with `[L] ~ 2[O] + [O']`.
    origin_tangent: ProjPoint<F>,
}

impl<F: Field> CubicModel<F> {
    /// Checks smoothness and that `origin` is on the curve.
    pub fn new(form: PlaneForm<F>, origin: ProjPoint<F>) -> Result<Self> {
        if form.degree() != 3 {
            return Err(Error::Usage(format!("degree {} is not a cubic", form.degree())));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(0x736d_6f6f_7468);
        if !certify_smooth(&form, &mut rng, SMOOTHNESS_ATTEMPTS)? {
            return Err(Error::DegenerateConfig("the cubic is singular".into()));
        }
        Self::new_unchecked(form, origin)
    }

    fn new_unchecked(form: PlaneForm<F>, origin: ProjPoint<F>) -> Result<Self> {
        let mut model = CubicModel { origin_tangent: origin.clone(), origin, form };
        if !model.contains(&model.origin) {
            return Err(Error::Usage("origin is not on the cubic".into()));
        }
        model.origin_tangent = model.third_intersection(&model.origin, &model.origin)?;
        Ok(model)
    }

    /// The same curve with another origin.
    pub fn with_origin(&self, origin: ProjPoint<F>) -> Result<Self> {
        Self::new_unchecked(self.form.clone(), origin)
    }

    pub fn form(&self) -> &PlaneForm<F> {
        &self.form
    }
    pub fn origin(&self) -> &ProjPoint<F> {
        &self.origin
    }
    pub fn field(&self) -> &F {
        self.form.field()
    }

    pub fn contains(&self, p: &ProjPoint<F>) -> bool {
        self.field().is_zero(&self.form.eval_point(p))
    }

    /// The third point where the line `PQ` (the tangent at `P` when `P = Q`) meets the cubic.
    pub fn third_intersection(&self, p: &ProjPoint<F>, q: &ProjPoint<F>) -> Result<ProjPoint<F>> {
        let f = self.field();
        for (name, pt) in [("P", p), ("Q", q)] {
            if !self.contains(pt) {
                return Err(Error::Usage(format!("{name} is not on the cubic")));
            }
        }
        let (pc, dir) = if p != q {
            (p.coords(), q.coords().clone())
        } else {
            let grad = self.form.gradient().map(|g| g.eval_point(p));
            if grad.iter().all(|c| f.is_zero(c)) {
                return Err(Error::DegenerateConfig("tangent at a singular point".into()));
            }
            let dir = (0..3)
                .map(|k| {
                    let mut e = [f.zero(), f.zero(), f.zero()];
                    e[k] = f.one();
                    cross(f, &grad, &e)
                })
                .find(|v| cross(f, v, p.coords()).iter().any(|c| !f.is_zero(c)))
                .expect("tangent line has a second point");
            (p.coords(), dir)
        };
        // F(P + tQ) has no constant term (P on curve). Off the tangent case the
        // cubic coefficient F(Q) vanishes too; on it the linear one does.
        let r = self.form.restrict_to_line(pc, &dir);
        let (lo, hi) = if p != q { (r.coeff(1), r.coeff(2)) } else { (r.coeff(2), r.coeff(3)) };
        if f.is_zero(&lo) && f.is_zero(&hi) {
            return Err(Error::DegenerateConfig("line contained in the cubic".into()));
        }
        // The remaining root is t = -lo/hi, i.e. the point hi*P - lo*Q.
        let coords = std::array::from_fn(|i| f.sub(&f.mul(&hi, &pc[i]), &f.mul(&lo, &dir[i])));
        ProjPoint::new(f, coords)
    }

    pub fn add(&self, p: &ProjPoint<F>, q: &ProjPoint<F>) -> Result<ProjPoint<F>> {
        let r = self.third_intersection(p, q)?;
        self.third_intersection(&self.origin, &r)
    }

    pub fn neg(&self, p: &ProjPoint<F>) -> Result<ProjPoint<F>> {
        self.third_intersection(p, &self.origin_tangent)
    }

    pub fn sub(&self, p: &ProjPoint<F>, q: &ProjPoint<F>) -> Result<ProjPoint<F>> {
        self.add(p, &self.neg(q)?)
    }

    pub fn mul(&self, p: &ProjPoint<F>, k: i64) -> Result<ProjPoint<F>> {
        let mut base = if k < 0 { self.neg(p)? } else { p.clone() };
        let mut n = k.unsigned_abs();
        let mut acc = self.origin.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = self.add(&acc, &base)?;
            }
            n >>= 1;
            if n > 0 {
                base = self.add(&base, &base)?;
            }
        }
        Ok(acc)
    }

    /// The point linearly equivalent to `sum c_i [P_i] + line_mult [L]`; the class must have degree 1.
    pub fn reduce_class(&self, terms: &[(ProjPoint<F>, i64)], line_mult: i64) -> Result<ProjPoint<F>> {
        let deg: i64 = 3 * line_mult + terms.iter().map(|(_, c)| c).sum::<i64>();
        if deg != 1 {
            return Err(Error::Usage(format!("class has degree {deg}, not 1")));
        }
        let mut acc = self.mul(&self.origin_tangent, line_mult)?;
        for (p, c) in terms {
            acc = self.add(&acc, &self.mul(p, *c)?)?;
        }
        Ok(acc)
    }
}

/// The cubic through the configuration with `p_1` as group origin; fails if it is singular.
pub fn cubic_through_nine<F: Field>(config: &PointConfig<F>) -> Result<CubicModel<F>> {
    CubicModel::new(config.cubic_form().clone(), config.points()[0].clone())
}

/// The degree-0 class `3[L] - sum [p_i]` as a point of the group with identity `model.origin()`.
pub fn anticanonical_point<F: Field>(model: &CubicModel<F>, points: &[ProjPoint<F>]) -> Result<ProjPoint<F>> {
    let mut terms: Vec<(ProjPoint<F>, i64)> = points.iter().map(|p| (p.clone(), -1)).collect();
    // shift by [O] to reach degree 1; the resulting point is e + O = e
    terms.push((model.origin().clone(), 1));
    model.reduce_class(&terms, 3)
}

/// Smallest `h <= max_m` with `h e = 0`, or `None`.
pub fn halphen_index<F: Field>(config: &PointConfig<F>, max_m: u32) -> Result<Option<u32>> {
    halphen_index_on(&cubic_through_nine(config)?, config.points(), max_m)
}

/// As [`halphen_index`] for nine points on a given cubic, which need not be the only one through them.
pub fn halphen_index_on<F: Field>(model: &CubicModel<F>, points: &[ProjPoint<F>], max_m: u32) -> Result<Option<u32>> {
    let e = anticanonical_point(model, points)?;
    let mut acc = model.origin().clone();
    for h in 1..=max_m {
        acc = model.add(&acc, &e)?;
        if &acc == model.origin() {
            return Ok(Some(h));
        }
    }
    Ok(None)
}

/// The simple base point of the genus-`g` du Val system: the point of class
/// `3g[L] - g(p_1 + .. + p_8) - (g-1) p_9`.
pub fn tenth_point<F: Field>(config: &PointConfig<F>, g: i64) -> Result<ProjPoint<F>> {
    if g < 1 {
        return Err(Error::Usage(format!("genus {g} < 1")));
    }
    let model = cubic_through_nine(config)?;
    tenth_point_on(&model, config.points(), g)
}

pub fn tenth_point_on<F: Field>(model: &CubicModel<F>, points: &[ProjPoint<F>], g: i64) -> Result<ProjPoint<F>> {
    let mut terms: Vec<(ProjPoint<F>, i64)> = points[..8].iter().map(|p| (p.clone(), -g)).collect();
    terms.push((points[8].clone(), 1 - g));
    model.reduce_class(&terms, 3 * g)
}

/// A cubic with a point of exact order `order` in the group with identity at the flex `(0:1:0)`.
///
/// Orders 4 through 9 use the Tate normal form `y^2 + (1-c)xy - by = x^3 - bx^2`
/// with `(0:0:1)` as the torsion point.
pub fn torsion_model(order: u32, field: &Fp) -> Result<(PlaneForm<Fp>, ProjPoint<Fp>)> {
    let f = field;
    let t = |n: i64, d: i64| f.div(&f.from_i64(n), &f.from_i64(d)).expect("small denominators");
    let tate = |b: u64, c: u64| {
        // y^2 z + (1-c) xyz - b y z^2 - x^3 + b x^2 z
        let mut coeffs = vec![f.zero(); monomial_count(3)];
        coeffs[monomial_index(3, 0, 2)] = f.one();
        coeffs[monomial_index(3, 1, 1)] = f.sub(&f.one(), &c);
        coeffs[monomial_index(3, 0, 1)] = f.neg(&b);
        coeffs[monomial_index(3, 3, 0)] = f.neg(&f.one());
        coeffs[monomial_index(3, 2, 0)] = b;
        PlaneForm::new(f, 3, coeffs).expect("ten coefficients")
    };
    let form = match order {
        2 => PlaneForm::from_terms(f, 3, &[(1, [0, 2, 1]), (-1, [3, 0, 0]), (1, [1, 0, 2])])?,
        3 => PlaneForm::from_terms(f, 3, &[(1, [0, 2, 1]), (1, [0, 1, 2]), (-1, [3, 0, 0])])?,
        4 => tate(t(2, 1), 0),
        5 => tate(t(2, 1), t(2, 1)),
        6 => tate(t(6, 1), t(2, 1)),
        7 => tate(t(4, 1), t(2, 1)),
        8 => tate(t(3, 1), t(3, 2)),
        9 => tate(t(12, 1), t(4, 1)),
        _ => {
            return Err(Error::Unsupported(format!(
                "no torsion parametrization for order {order} (supported: {SUPPORTED_ORDERS:?})"
            )))
        }
    };
    Ok((form, ProjPoint::new(f, [0, 0, 1])?))
}

fn random_affine_point<R: Rng + ?Sized>(form: &PlaneForm<Fp>, rng: &mut R) -> Result<ProjPoint<Fp>> {
    let f = form.field();
    loop {
        let x = f.random(rng);
        let poly = form.univariate_in_y(&x);
        if poly.is_zero() {
            continue;
        }
        let roots = roots_in_field(&poly)?;
        if !roots.is_empty() {
            let y = roots[rng.gen_range(0..roots.len())];
            return Ok(ProjPoint::affine(f, x, y));
        }
    }
}

/// Nine points over GF(p) whose class `e` has exact order `order`.
///
/// `p_1..p_8` are random points of a torsion model and `p_9` is solved from
/// `sum p_i = -T`, so that `e = T`. Sampling is retried from the same seeded
/// stream until the points are distinct and affine and the index checks out.
pub fn gen_halphen_config(order: u32, seed: u64, p: u64) -> Result<PointConfig<Fp>> {
    let field = Fp::new(p)?;
    let (form, torsion) = torsion_model(order, &field)?;
    let flex = ProjPoint::new(&field, [0, 1, 0])?;
    let model = CubicModel::new(form.clone(), flex)?;
    if model.mul(&torsion, order as i64)? != *model.origin() {
        return Err(Error::InconsistentGeometry(format!("torsion model {order} fails mod {p}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..GEN_ATTEMPTS {
        let mut pts = Vec::with_capacity(9);
        for _ in 0..8 {
            pts.push(random_affine_point(&form, &mut rng)?);
        }
        let mut sum = model.neg(&torsion)?;
        for q in &pts {
            sum = model.sub(&sum, q)?;
        }
        pts.push(sum);
        if !pts.iter().all(|q| q.is_affine(&field)) {
            continue;
        }
        let provenance = Provenance::Generated { order, seed };
        let Ok(config) = PointConfig::new(&field, pts, provenance) else {
            continue;
        };
        if halphen_index(&config, order)? == Some(order) {
            return Ok(config);
        }
    }
    Err(Error::RetryExhausted(format!(
        "no order-{order} configuration from seed {seed} after {GEN_ATTEMPTS} attempts"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::MERSENNE_61;

    fn fp() -> Fp {
        Fp::new(MERSENNE_61).unwrap()
    }

    fn reference_mod_p() -> PointConfig<Fp> {
        reference_config().reduce_mod(MERSENNE_61).unwrap()
    }

    #[test]
    fn reference_cubic_vanishes_at_points() {
        let c = reference_config();
        for p in c.points() {
            assert!(Rationals.is_zero(&c.cubic_form().eval_point(p)));
        }
        let m = cubic_through_nine(&c).unwrap();
        assert!(m.contains(&c.points()[8]));
    }

    #[test]
    fn json_round_trip() {
        let c = reference_config();
        let text = c.to_json().unwrap();
        let back = LoadedConfig::from_json(&text).unwrap();
        assert_eq!(back.to_json().unwrap(), text);
        let g = gen_halphen_config(7, 1, MERSENNE_61).unwrap();
        let back = LoadedConfig::from_json(&g.to_json().unwrap()).unwrap();
        assert_eq!(back.at_prime(MERSENNE_61).unwrap().points(), g.points());
    }

    #[test]
    fn five_collinear_points_are_degenerate() {
        let f = Rationals;
        let p = |x: i64, y: i64| ProjPoint::affine(&f, f.from_i64(x), f.from_i64(y));
        let pts = vec![p(0, 0), p(1, 0), p(2, 0), p(3, 0), p(4, 0), p(0, 1), p(1, 3), p(5, 7), p(2, 9)];
        assert!(matches!(PointConfig::new(&f, pts, Provenance::Explicit), Err(Error::DegenerateConfig(_))));
    }

    #[test]
    fn recovers_cubic_over_gf101() {
        let f = Fp::new(101).unwrap();
        let curve = PlaneForm::from_terms(&f, 3, &[(1, [0, 2, 1]), (-1, [3, 0, 0]), (1, [1, 0, 2])]).unwrap();
        let mut pts = Vec::new();
        for x in 0..101u64 {
            for y in 0..101u64 {
                if pts.len() < 9 && f.is_zero(&curve.eval_affine(&x, &y)) {
                    pts.push(ProjPoint::affine(&f, x, y));
                }
            }
        }
        let c = PointConfig::new(&f, pts, Provenance::Explicit).unwrap();
        // y^2 z - x^3 + x z^2, normalized so the x^3 coefficient is one
        assert_eq!(c.cubic_form(), &curve.scale(&f.neg(&1)));
    }

    #[test]
    fn chord_and_tangent_examples() {
        let f = fp();
        let curve = PlaneForm::from_terms(&f, 3, &[(1, [0, 2, 1]), (-1, [3, 0, 0]), (1, [1, 0, 2])]).unwrap();
        let flex = ProjPoint::new(&f, [0, 1, 0]).unwrap();
        let m = CubicModel::new(curve, flex.clone()).unwrap();
        let r = m
            .third_intersection(&ProjPoint::affine(&f, 0, 0), &ProjPoint::affine(&f, 1, 0))
            .unwrap();
        assert_eq!(r, ProjPoint::affine(&f, f.neg(&1), 0));
        assert_eq!(m.third_intersection(&flex, &flex).unwrap(), flex);
        assert!(matches!(
            m.third_intersection(&ProjPoint::affine(&f, 2, 2), &flex),
            Err(Error::Usage(_))
        ));
    }

    #[test]
    fn random_chords_stay_on_reference_cubic() {
        let c = reference_mod_p();
        let m = cubic_through_nine(&c).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..10 {
            let p = random_affine_point(m.form(), &mut rng).unwrap();
            let q = random_affine_point(m.form(), &mut rng).unwrap();
            assert!(m.contains(&m.third_intersection(&p, &q).unwrap()));
            assert!(m.contains(&m.third_intersection(&p, &p).unwrap()));
        }
    }

    #[test]
    fn reduce_class_basic_cases() {
        let c = reference_mod_p();
        let m = cubic_through_nine(&c).unwrap();
        let (p, q) = (&c.points()[2], &c.points()[5]);
        assert_eq!(&m.reduce_class(&[(p.clone(), 1)], 0).unwrap(), p);
        assert_eq!(
            m.reduce_class(&[(p.clone(), -1), (q.clone(), -1)], 1).unwrap(),
            m.third_intersection(p, q).unwrap()
        );
        assert!(matches!(m.reduce_class(&[(p.clone(), 2)], 0), Err(Error::Usage(_))));
    }

    #[test]
    fn reduce_class_is_order_and_origin_independent() {
        let c = reference_mod_p();
        let m = cubic_through_nine(&c).unwrap();
        let mut terms: Vec<_> = c.points().iter().map(|p| (p.clone(), -1)).collect();
        terms[8].1 = 0;
        let a = m.reduce_class(&terms, 3).unwrap();
        let mut rev = terms.clone();
        rev.reverse();
        assert_eq!(m.reduce_class(&rev, 3).unwrap(), a);
        let other = m.with_origin(c.points()[4].clone()).unwrap();
        assert_eq!(other.reduce_class(&terms, 3).unwrap(), a);
    }

    #[test]
    fn reference_points_have_no_small_index() {
        assert_eq!(halphen_index(&reference_mod_p(), 40).unwrap(), None);
    }

    #[test]
    fn order_seven_model_by_brute_force() {
        let f = fp();
        let (form, t) = torsion_model(7, &f).unwrap();
        let m = CubicModel::new(form, ProjPoint::new(&f, [0, 1, 0]).unwrap()).unwrap();
        let mut acc = t.clone();
        for k in 1..7 {
            assert_ne!(&acc, m.origin(), "{k} T vanished");
            acc = m.add(&acc, &t).unwrap();
        }
        assert_eq!(&acc, m.origin());
    }

    #[test]
    fn every_shipped_order_is_exact() {
        let f = fp();
        for order in SUPPORTED_ORDERS {
            let (form, t) = torsion_model(order, &f).unwrap();
            let m = CubicModel::new(form, ProjPoint::new(&f, [0, 1, 0]).unwrap()).unwrap();
            for k in 1..order as i64 {
                assert_ne!(&m.mul(&t, k).unwrap(), m.origin(), "order {order}, multiple {k}");
            }
            assert_eq!(&m.mul(&t, order as i64).unwrap(), m.origin(), "order {order}");
        }
        assert!(matches!(torsion_model(10, &f), Err(Error::Unsupported(_))));
    }

    #[test]
    fn generated_configs_have_requested_index() {
        for order in [2, 7] {
            let c = gen_halphen_config(order, 1, MERSENNE_61).unwrap();
            assert_eq!(halphen_index(&c, 40).unwrap(), Some(order));
        }
    }

    #[test]
    fn tenth_point_properties() {
        let c = gen_halphen_config(7, 1, MERSENNE_61).unwrap();
        let m = cubic_through_nine(&c).unwrap();
        let e = anticanonical_point(&m, c.points()).unwrap();
        for g in [2, 5, 13] {
            let p = tenth_point(&c, g).unwrap();
            assert!(m.contains(&p));
            assert_eq!(tenth_point(&c, g + 7).unwrap(), p);
            assert_eq!(tenth_point(&c, g + 14).unwrap(), p);
            // p10(g) = p10(g-1) + e
            let prev = tenth_point(&c, g - 1).unwrap();
            assert_eq!(m.add(&prev, &e).unwrap(), p);
        }
    }

    #[test]
    fn a_second_cubic_of_the_pencil_gives_index_one() {
        // Nine points cut on the curve by another cubic of the pencil.
        let f = fp();
        let curve = PlaneForm::from_terms(&f, 3, &[(1, [0, 2, 1]), (-1, [3, 0, 0]), (1, [1, 0, 2])]).unwrap();
        let m = CubicModel::new(curve, ProjPoint::new(&f, [0, 1, 0]).unwrap()).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let mut pts: Vec<ProjPoint<Fp>> = (0..8).map(|_| random_affine_point(m.form(), &mut rng).unwrap()).collect();
        let mut s = m.origin().clone();
        for q in &pts {
            s = m.sub(&s, q).unwrap();
        }
        pts.push(s);
        // a pencil passes through such points, so they do not form a config
        assert!(matches!(PointConfig::new(&f, pts.clone(), Provenance::Explicit), Err(Error::DegenerateConfig(_))));
        assert_eq!(halphen_index_on(&m, &pts, 5).unwrap(), Some(1));
    }

    proptest::proptest! {
        #![proptest_config(proptest::prelude::ProptestConfig::with_cases(24))]
        #[test]
        fn group_law_is_associative_and_reduction_homomorphic(seed in 0u64..1_000_000) {
            let c = reference_mod_p();
            let m = cubic_through_nine(&c).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let p = random_affine_point(m.form(), &mut rng).unwrap();
            let q = random_affine_point(m.form(), &mut rng).unwrap();
            let r = random_affine_point(m.form(), &mut rng).unwrap();
            let left = m.add(&m.add(&p, &q).unwrap(), &r).unwrap();
            let right = m.add(&p, &m.add(&q, &r).unwrap()).unwrap();
            proptest::prop_assert_eq!(&left, &right);
            // [P] + [Q] + [R] - 2[L] + ... : reduce(alpha + beta) from the pieces
            let a = (seed % 5) as i64 - 2;
            let b = (seed / 5 % 5) as i64 - 2;
            let alpha = m.reduce_class(&[(p.clone(), a), (q.clone(), 1 - a)], 0).unwrap();
            let beta = m.reduce_class(&[(r.clone(), b), (p.clone(), 1 - b)], 0).unwrap();
            let joint = m
                .reduce_class(&[(p.clone(), a + 1 - b), (q.clone(), 1 - a), (r.clone(), b), (m.origin().clone(), -1)], 0)
                .unwrap();
            proptest::prop_assert_eq!(m.add(&alpha, &beta).unwrap(), joint);
        }
    }
}
