//! Linear systems of plane curves with assigned multiple points.
//!
//! A multiplicity-`m` condition at `P` asks that every local Taylor coefficient
//! of order `< m` vanishes, giving `m(m+1)/2` linear conditions on the
//! coefficients of a degree-`d` form. Dimensions here are affine (vector-space)
//! dimensions, i.e. `h^0` of the corresponding class on the blow-up.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cubic::{halphen_index, tenth_point, PointConfig};
use crate::error::{Error, Result};
use crate::exactalg::{DenseMatrix, Field, RankCertificate, UniPoly};
use crate::form::{collinear, monomial_count, monomials, LocalExpansion, PlaneForm, ProjPoint, Projectivity};
use crate::picard::{euler_char, named_class, serre_dual, DivisorClass, NamedClass};

#[derive(Clone, Debug)]
pub struct MultiplicitySpec<F: Field> {
    degree: usize,
    conditions: Vec<(ProjPoint<F>, usize)>,
}

impl<F: Field> MultiplicitySpec<F> {
    /// Conditions of multiplicity zero are dropped.
    pub fn new(degree: usize, conditions: Vec<(ProjPoint<F>, usize)>) -> Result<Self> {
        let conditions: Vec<_> = conditions.into_iter().filter(|(_, m)| *m > 0).collect();
        for i in 0..conditions.len() {
            for j in 0..i {
                if conditions[i].0 == conditions[j].0 {
                    return Err(Error::Usage(format!("condition points {j} and {i} coincide")));
                }
            }
        }
        Ok(MultiplicitySpec { degree, conditions })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }
    pub fn conditions(&self) -> &[(ProjPoint<F>, usize)] {
        &self.conditions
    }
    pub fn row_count(&self) -> usize {
        self.conditions.iter().map(|(_, m)| m * (m + 1) / 2).sum()
    }
    pub fn col_count(&self) -> usize {
        monomial_count(self.degree)
    }
}

/// The full condition matrix in the original coordinates.
pub fn condition_matrix<F: Field>(field: &F, spec: &MultiplicitySpec<F>) -> Result<DenseMatrix<F>> {
    let cols = spec.col_count();
    let all: Vec<usize> = (0..cols).collect();
    let data = point_rows(field, spec.degree, &spec.conditions, &all);
    DenseMatrix::from_vec(field, spec.row_count(), cols, data)
}

/// Rows for the conditions, restricted to the listed columns, concatenated row-major.
fn point_rows<F: Field>(field: &F, degree: usize, conditions: &[(ProjPoint<F>, usize)], keep: &[usize]) -> Vec<F::Elem> {
    let full = monomial_count(degree);
    let blocks: Vec<Vec<F::Elem>> = conditions
        .par_iter()
        .map(|(p, m)| {
            let le = LocalExpansion::new(field, degree, p);
            let mut out = Vec::with_capacity(m * (m + 1) / 2 * keep.len());
            let mut row = vec![field.zero(); full];
            for k in 0..*m {
                for a in 0..=k {
                    le.row_into(a, k - a, &mut row);
                    out.extend(keep.iter().map(|&c| row[c].clone()));
                }
            }
            out
        })
        .collect();
    blocks.concat()
}

#[derive(Clone, Debug)]
pub struct LinearSystemBasis<F: Field> {
    pub spec: MultiplicitySpec<F>,
    pub basis: Vec<PlaneForm<F>>,
    pub rank_certificate: RankCertificate,
}

impl<F: Field> LinearSystemBasis<F> {
    pub fn affine_dim(&self) -> usize {
        self.basis.len()
    }
    /// `affine_dim - 1`; `-1` for the empty system.
    pub fn projective_dim(&self) -> i64 {
        self.basis.len() as i64 - 1
    }
}

/// A basis of the system, in reduced echelon form over the monomial order.
pub fn system_basis<F: Field>(field: &F, spec: &MultiplicitySpec<F>) -> Result<LinearSystemBasis<F>> {
    let m = condition_matrix(field, spec)?;
    let (rank, kernel) = m.rank_and_kernel();
    let basis = kernel
        .into_iter()
        .map(|v| PlaneForm::new(field, spec.degree, v))
        .collect::<Result<Vec<_>>>()?;
    Ok(LinearSystemBasis {
        spec: spec.clone(),
        basis,
        rank_certificate: RankCertificate { rows: m.rows(), cols: m.cols(), rank },
    })
}

/// The affine dimension of the system, with its rank certificate.
///
/// Up to three non-collinear condition points (largest multiplicities first) are
/// moved to the coordinate vertices, where their conditions become the vanishing
/// of monomial coefficients; only the remaining points contribute matrix rows.
pub fn system_dimension<F: Field>(field: &F, spec: &MultiplicitySpec<F>) -> Result<(usize, RankCertificate)> {
    let d = spec.degree;
    let Some(frame) = pick_frame(field, &spec.conditions) else {
        let m = condition_matrix(field, spec)?;
        let cert = m.rank_certificate();
        return Ok((cert.nullity(), cert));
    };
    let t = Projectivity::to_vertices(
        field,
        &spec.conditions[frame[0]].0,
        &spec.conditions[frame[1]].0,
        &spec.conditions[frame[2]].0,
    )?;
    let mults = frame.map(|i| spec.conditions[i].1);
    let keep: Vec<usize> = monomials(d)
        .enumerate()
        .filter(|(_, e)| e[1] + e[2] >= mults[0] && e[0] + e[2] >= mults[1] && e[0] + e[1] >= mults[2])
        .map(|(i, _)| i)
        .collect();
    let rest: Vec<(ProjPoint<F>, usize)> = spec
        .conditions
        .iter()
        .enumerate()
        .filter(|(i, _)| !frame.contains(i))
        .map(|(_, (p, m))| (t.apply(field, p), *m))
        .collect();
    let rows: usize = rest.iter().map(|(_, m)| m * (m + 1) / 2).sum();
    let data = point_rows(field, d, &rest, &keep);
    let rank = DenseMatrix::from_vec(field, rows, keep.len(), data)?.rank();
    let cert = RankCertificate { rows, cols: keep.len(), rank };
    Ok((cert.nullity(), cert))
}

fn pick_frame<F: Field>(field: &F, conds: &[(ProjPoint<F>, usize)]) -> Option<[usize; 3]> {
    let mut order: Vec<usize> = (0..conds.len()).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(conds[i].1));
    if order.len() < 3 {
        return None;
    }
    let (a, b) = (order[0], order[1]);
    let c = order[2..]
        .iter()
        .copied()
        .find(|&c| !collinear(field, &conds[a].0, &conds[b].0, &conds[c].0))?;
    Some([a, b, c])
}

/// The ten base points for classes on the blow-up: `p_1..p_9` and `p_10(g)`.
fn base_points<F: Field>(config: &PointConfig<F>, m10: i64, g: i64) -> Result<Vec<ProjPoint<F>>> {
    let mut pts = config.points().to_vec();
    if m10 > 0 {
        pts.push(tenth_point(config, g)?);
    }
    Ok(pts)
}

/// `h^0(D)` by interpolation, after stripping fixed exceptional components.
///
/// A negative `m_i` means `D.E_i < 0`, so `E_i` is a fixed component and
/// `h^0(D) = h^0(D - E_i)`; repeating raises `m_i` to zero. For example
/// `B - A = (3; 1^8, 2, -1)` has the same sections as `(3; 1^8, 2, 0)`.
pub fn h0<F: Field>(d: &DivisorClass, config: &PointConfig<F>, g: i64) -> Result<usize> {
    if d.d < 0 {
        return Ok(0);
    }
    let m = d.m.map(|x| x.max(0));
    let pts = base_points(config, m[9], g)?;
    let conds = pts.into_iter().zip(m.iter()).map(|(p, &k)| (p, k as usize)).collect();
    let spec = MultiplicitySpec::new(d.d as usize, conds)?;
    Ok(system_dimension(config.field(), &spec)?.0)
}

/// `h^2(D) = h^0(K - D)`.
pub fn h2<F: Field>(d: &DivisorClass, config: &PointConfig<F>, g: i64) -> Result<usize> {
    h0(&serre_dual(d), config, g)
}

/// `h^1(D) = h^0 + h^2 - chi`; a negative value is reported, never clamped.
pub fn h1<F: Field>(d: &DivisorClass, config: &PointConfig<F>, g: i64) -> Result<usize> {
    Ok(cohomology(d, config, g)?[1])
}

pub fn cohomology<F: Field>(d: &DivisorClass, config: &PointConfig<F>, g: i64) -> Result<[usize; 3]> {
    let a = h0(d, config, g)?;
    let c = h2(d, config, g)?;
    let b = a as i64 + c as i64 - euler_char(d);
    if b < 0 {
        return Err(Error::InconsistentGeometry(format!(
            "h1({d}) = {b} < 0 (h0 = {a}, h2 = {c}, chi = {})",
            euler_char(d)
        )));
    }
    Ok([a, b as usize, c])
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Generality {
    pub k: u32,
    pub general: bool,
    /// First `h` with `h^0(hJ') > 1`.
    pub witness: Option<u32>,
}

/// Whether `|hJ'|` is a single curve for every `1 <= h <= k`.
pub fn is_k_halphen_general<F: Field>(config: &PointConfig<F>, k: u32) -> Result<Generality> {
    for h in 1..=k {
        if anticanonical_multiple_dim(config, h)? != 1 {
            return Ok(Generality { k, general: false, witness: Some(h) });
        }
    }
    Ok(Generality { k, general: true, witness: None })
}

/// Affine dimension of `|hJ'|`: degree `3h` with multiplicity `h` at the nine points.
pub fn anticanonical_multiple_dim<F: Field>(config: &PointConfig<F>, h: u32) -> Result<usize> {
    let h = h as usize;
    let conds = config.points().iter().map(|p| (p.clone(), h)).collect();
    let spec = MultiplicitySpec::new(3 * h, conds)?;
    Ok(system_dimension(config.field(), &spec)?.0)
}

/// Effective classes `(d; m_1..m_9)` with `D^2 = -2` and `D.J' = 0` up to degree `bound`.
///
/// Only `m_i >= 0` is enumerated: a class with some `m_i < 0` pairs negatively
/// with the nef class obtained by stripping `E_i`, so it cannot be effective
/// without `E_i` as a component, and `E_i.J' = 1 != 0` leaves no such class.
/// An empty answer means no such class up to the bound, not unnodality.
pub fn nodal_class_scan<F: Field>(config: &PointConfig<F>, bound: u32) -> Result<Vec<DivisorClass>> {
    let mut found = Vec::new();
    for d in 1..=bound as i64 {
        for m in minus_two_vectors(d) {
            let class = DivisorClass::new(d, m, 9)?;
            if h0(&class, config, 1)? > 0 {
                found.push(class);
            }
        }
    }
    Ok(found)
}

/// All `m in Z_{>=0}^9` with `sum m = 3d` and `sum m^2 = d^2 + 2`.
fn minus_two_vectors(d: i64) -> Vec<[i64; 10]> {
    fn rec(i: usize, sum: i64, sq: i64, cur: &mut [i64; 10], out: &mut Vec<[i64; 10]>) {
        if i == 9 {
            if sum == 0 && sq == 0 {
                out.push(*cur);
            }
            return;
        }
        let left = (9 - i) as i64;
        for v in 0..=sum {
            if v * v > sq {
                break;
            }
            // the remaining sum must fit: r^2 / left <= remaining squares
            let (rs, rq) = (sum - v, sq - v * v);
            if rs * rs > rq * (left - 1).max(1) && left > 1 {
                continue;
            }
            cur[i] = v;
            rec(i + 1, rs, rq, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    rec(0, 3 * d, d * d + 2, &mut [0; 10], &mut out);
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub divisor: String,
    pub class: DivisorClass,
    pub expected: [usize; 3],
    pub computed: [usize; 3],
    pub pass: bool,
}

fn row<F: Field>(name: &str, d: DivisorClass, expected: [usize; 3], config: &PointConfig<F>, g: i64) -> Result<TableRow> {
    let computed = cohomology(&d, config, g)?;
    Ok(TableRow { divisor: name.to_string(), class: d, expected, computed, pass: computed == expected })
}

fn require_index<F: Field>(s: i64, config: &PointConfig<F>) -> Result<()> {
    if s < 1 {
        return Err(Error::Usage(format!("s = {s} < 1")));
    }
    let want = (s + 1) as u32;
    match halphen_index(config, want)? {
        Some(m) if m == want => Ok(()),
        found => Err(Error::Precondition(format!(
            "configuration has index {} but index {want} is required",
            found.map_or_else(|| format!("> {want}"), |m| m.to_string())
        ))),
    }
}

/// `(h^0, h^1, h^2)` of `B, 2B, 2B - J, A - B, B - A` on a Halphen surface of index `s + 1`.
pub fn verify_b_table<F: Field>(s: i64, config: &PointConfig<F>) -> Result<Vec<TableRow>> {
    require_index(s, config)?;
    let g = 2 * s + 1;
    let a = named_class(NamedClass::A(s))?;
    let b = named_class(NamedClass::B(s))?;
    let j = named_class(NamedClass::J)?;
    Ok(vec![
        row("B", b, [2, 1, 0], config, g)?,
        row("2B", 2 * b, [3, 2, 0], config, g)?,
        row("2B-J", 2 * b - j, [2, 1, 0], config, g)?,
        row("A-B", a - b, [0, 1, 0], config, g)?,
        row("B-A", b - a, [0, 1, 0], config, g)?,
    ])
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasePointCheck {
    pub trials: usize,
    /// Trial that certified no unassigned base point, if any.
    pub certified_on_trial: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ATable {
    pub rows: Vec<TableRow>,
    pub quadrics_expected: usize,
    pub quadrics_computed: usize,
    pub base_points: BasePointCheck,
    pub pass: bool,
}

/// `h(A) = (s+1, 1, 0)`, `h(A - J) = (s, 0, 0)`, `h(2A) = (4s-2, 1, 0)`, the
/// number of quadrics through the image of `|A|`, and base-point freeness of `|A|`.
pub fn verify_a_table<F: Field>(s: i64, config: &PointConfig<F>, seed: u64) -> Result<ATable> {
    require_index(s, config)?;
    let g = 2 * s + 1;
    let su = s as usize;
    let a = named_class(NamedClass::A(s))?;
    let j = named_class(NamedClass::J)?;
    let rows = vec![
        row("A", a, [su + 1, 1, 0], config, g)?,
        row("A-J", a - j, [su, 0, 0], config, g)?,
        row("2A", 2 * a, [4 * su - 2, 1, 0], config, g)?,
    ];
    let sys = class_basis(&a, config, g)?;
    let quadrics_computed = quadrics_through(&sys.basis)?;
    let quadrics_expected = (su + 1) * (su + 2) / 2 - (4 * su - 2);
    let base_points = base_point_free(config.field(), &sys, seed, 5)?;
    let pass = rows.iter().all(|r| r.pass)
        && quadrics_computed == quadrics_expected
        && base_points.certified_on_trial.is_some();
    Ok(ATable { rows, quadrics_expected, quadrics_computed, base_points, pass })
}

/// Full basis of `|D|` for a class with nonnegative multiplicities.
pub fn class_basis<F: Field>(d: &DivisorClass, config: &PointConfig<F>, g: i64) -> Result<LinearSystemBasis<F>> {
    if d.d < 0 || d.m.iter().any(|&x| x < 0) {
        return Err(Error::Usage(format!("class {d} needs d >= 0 and m_i >= 0")));
    }
    let pts = base_points(config, d.m[9], g)?;
    let conds = pts.into_iter().zip(d.m.iter()).map(|(p, &k)| (p, k as usize)).collect();
    let spec = MultiplicitySpec::new(d.d as usize, conds)?;
    system_basis(config.field(), &spec)
}

/// Dimension of the kernel of `Sym^2 <basis> -> forms of twice the degree`.
pub fn quadrics_through<F: Field>(basis: &[PlaneForm<F>]) -> Result<usize> {
    let Some(first) = basis.first() else {
        return Ok(0);
    };
    let field = first.field();
    let mut products = Vec::new();
    for i in 0..basis.len() {
        for j in i..basis.len() {
            products.push(basis[i].mul(&basis[j]).coeffs().to_vec());
        }
    }
    let n = products.len();
    let rank = DenseMatrix::from_rows(field, products)?.rank();
    Ok(n - rank)
}

/// Probabilistic certificate that a system has no base points beyond the assigned ones.
///
/// Three random members in random coordinates: `Res_y(G_1, G_k)` must vanish to
/// order exactly `m_P^2` at every assigned point `P` (no common tangent, so no
/// infinitely near base point), and the residual factors for `k = 2, 3` must be
/// coprime (no common unassigned zero). The members must also share no point
/// on the line at infinity.
pub fn base_point_free<F: Field>(field: &F, sys: &LinearSystemBasis<F>, seed: u64, trials: usize) -> Result<BasePointCheck> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for trial in 0..trials {
        let t = Projectivity::random(field, &mut rng);
        let ti = t.inverse(field)?;
        let pts: Vec<(ProjPoint<F>, usize)> =
            sys.spec.conditions().iter().map(|(p, m)| (ti.apply(field, p), *m)).collect();
        let members: Vec<PlaneForm<F>> = (0..3)
            .map(|_| {
                let c: Vec<F::Elem> = sys.basis.iter().map(|_| field.random(&mut rng)).collect();
                PlaneForm::combination(field, sys.spec.degree(), &sys.basis, &c).map(|f| f.compose(&t))
            })
            .collect::<Result<_>>()?;
        if members.iter().any(|m| field.is_zero(m.leading_y())) || !distinct_affine_x(field, &pts) {
            continue;
        }
        let residual = |k: usize| -> Result<Option<UniPoly<F>>> {
            let mut r = members[0].resultant_in_x(&members[k])?;
            if r.is_zero() {
                return Ok(None);
            }
            for (p, m) in &pts {
                let (v, rest) = r.valuation_at(p.x())?;
                if v != m * m {
                    return Ok(None);
                }
                r = rest;
            }
            Ok(Some(r))
        };
        let (Some(r2), Some(r3)) = (residual(1)?, residual(2)?) else {
            continue;
        };
        let at_inf = members[0].at_infinity_in_y().gcd(&members[1].at_infinity_in_y());
        if r2.gcd(&r3).degree() == Some(0) && at_inf.degree() == Some(0) {
            return Ok(BasePointCheck { trials: trial + 1, certified_on_trial: Some(trial + 1) });
        }
    }
    Ok(BasePointCheck { trials, certified_on_trial: None })
}

fn distinct_affine_x<F: Field>(field: &F, pts: &[(ProjPoint<F>, usize)]) -> bool {
    pts.iter().all(|(p, _)| p.is_affine(field))
        && (0..pts.len()).all(|i| (0..i).all(|j| pts[i].0.x() != pts[j].0.x()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cubic::{gen_halphen_config, reference_config, Provenance};
    use crate::exactalg::{Fp, Rationals, MERSENNE_61};

    fn fp() -> Fp {
        Fp::new(MERSENNE_61).unwrap()
    }

    fn du_val_spec<F: Field>(config: &PointConfig<F>, g: usize) -> MultiplicitySpec<F> {
        let mut conds: Vec<_> = config.points()[..8].iter().map(|p| (p.clone(), g)).collect();
        conds.push((config.points()[8].clone(), g - 1));
        MultiplicitySpec::new(3 * g, conds).unwrap()
    }

    #[test]
    fn line_through_two_points() {
        let f = Rationals;
        let p = |x: i64, y: i64| ProjPoint::affine(&f, f.from_i64(x), f.from_i64(y));
        let spec = MultiplicitySpec::new(1, vec![(p(0, 1), 1), (p(2, 3), 1)]).unwrap();
        let b = system_basis(&f, &spec).unwrap();
        assert_eq!(b.affine_dim(), 1);
        assert!(MultiplicitySpec::new(1, vec![(p(0, 1), 1), (p(0, 1), 2)]).is_err());
    }

    #[test]
    fn reference_points_over_q() {
        let c = reference_config();
        let cubic = MultiplicitySpec::new(3, c.points().iter().map(|p| (p.clone(), 1)).collect()).unwrap();
        assert_eq!(system_basis(&Rationals, &cubic).unwrap().affine_dim(), 1);
        let b = system_basis(&Rationals, &du_val_spec(&c, 3)).unwrap();
        assert_eq!(b.affine_dim(), 4);
        assert_eq!(b.projective_dim(), 3);
    }

    #[test]
    fn du_val_members_pass_through_tenth_point() {
        let c = reference_config().reduce_mod(MERSENNE_61).unwrap();
        let b = system_basis(c.field(), &du_val_spec(&c, 3)).unwrap();
        let p10 = tenth_point(&c, 3).unwrap();
        assert!(!c.points().contains(&p10));
        for form in &b.basis {
            assert_eq!(form.eval_point(&p10), 0);
        }
    }

    #[test]
    fn basis_satisfies_conditions_and_is_deterministic() {
        let c = reference_config().reduce_mod(MERSENNE_61).unwrap();
        let spec = du_val_spec(&c, 4);
        let b1 = system_basis(c.field(), &spec).unwrap();
        let b2 = system_basis(c.field(), &spec).unwrap();
        assert_eq!(b1.basis, b2.basis);
        let m = condition_matrix(c.field(), &spec).unwrap();
        for form in &b1.basis {
            assert!(m.mul_vec(form.coeffs()).unwrap().iter().all(|x| *x == 0));
        }
        assert_eq!(b1.affine_dim(), system_dimension(c.field(), &spec).unwrap().0);
    }

    #[test]
    fn framed_dimension_matches_full_matrix() {
        let c = gen_halphen_config(7, 3, MERSENNE_61).unwrap();
        let f = c.field();
        for (d, mults) in [(7usize, [3usize, 2, 2, 2, 2, 1, 1, 1, 1]), (12, [4; 9]), (21, [7; 9]), (9, [3, 3, 3, 3, 3, 3, 3, 3, 0])] {
            let conds = c.points().iter().cloned().zip(mults).collect();
            let spec = MultiplicitySpec::new(d, conds).unwrap();
            let full = condition_matrix(f, &spec).unwrap().rank_certificate().nullity();
            assert_eq!(system_dimension(f, &spec).unwrap().0, full, "degree {d}");
        }
    }

    #[test]
    fn condition_count_identity() {
        for g in 2..=20i64 {
            let rows = (3 * g + 1) * (3 * g + 2) / 2 - 8 * g * (g + 1) / 2 - (g - 1) * g / 2;
            assert_eq!(rows, g + 1);
        }
    }

    #[test]
    fn halphen_index_cross_oracle() {
        let c = gen_halphen_config(7, 1, MERSENNE_61).unwrap();
        for h in 1..=8u32 {
            assert_eq!(anticanonical_multiple_dim(&c, h).unwrap(), 1 + (h / 7) as usize, "h = {h}");
        }
        let gen = is_k_halphen_general(&c, 6).unwrap();
        assert!(gen.general);
        let gen = is_k_halphen_general(&c, 7).unwrap();
        assert_eq!(gen.witness, Some(7));
        assert!(is_k_halphen_general(&c, 0).unwrap().general);
    }

    #[test]
    fn stripped_classes() {
        let c = gen_halphen_config(7, 1, MERSENNE_61).unwrap();
        let b = named_class(NamedClass::B(6)).unwrap();
        let a = named_class(NamedClass::A(6)).unwrap();
        assert_eq!(h0(&b, &c, 13).unwrap(), 2);
        assert_eq!(h0(&(b - a), &c, 13).unwrap(), 0);
        assert_eq!(h2(&(b - a), &c, 13).unwrap(), 0);
        assert_eq!(h2(&named_class(NamedClass::K).unwrap(), &c, 13).unwrap(), 1);
        assert_eq!(h1(&b, &c, 13).unwrap(), 1);
        let r = reference_config().reduce_mod(MERSENNE_61).unwrap();
        assert_eq!(h0(&b, &r, 13).unwrap(), 1);
    }

    #[test]
    fn minus_two_vectors_are_complete() {
        // brute force over the box for small d
        for d in 1..=3i64 {
            let mut brute = 0;
            let top = d as usize + 1;
            let total = (top + 1).pow(9);
            for mut n in 0..total {
                let mut m = [0i64; 9];
                for x in m.iter_mut() {
                    *x = (n % (top + 1)) as i64;
                    n /= top + 1;
                }
                if m.iter().sum::<i64>() == 3 * d && m.iter().map(|x| x * x).sum::<i64>() == d * d + 2 {
                    brute += 1;
                }
            }
            assert_eq!(minus_two_vectors(d).len(), brute, "d = {d}");
        }
        assert_eq!(minus_two_vectors(1).len(), 84);
    }

    #[test]
    fn collinear_triple_is_found() {
        let f = fp();
        let mut pts = vec![ProjPoint::affine(&f, 0, 0), ProjPoint::affine(&f, 1, 0), ProjPoint::affine(&f, 2, 0)];
        for (x, y) in [(5, 7), (11, 3), (13, 29), (31, 17), (2, 41), (43, 5)] {
            pts.push(ProjPoint::affine(&f, x, y));
        }
        let c = PointConfig::new(&f, pts, Provenance::Explicit).unwrap();
        let found = nodal_class_scan(&c, 2).unwrap();
        assert_eq!(found, vec![DivisorClass::new(1, [1, 1, 1, 0, 0, 0, 0, 0, 0, 0], 9).unwrap()]);
        assert!(nodal_class_scan(&c, 0).unwrap().is_empty());
    }

    #[test]
    fn non_halphen_config_fails_precondition() {
        let r = reference_config().reduce_mod(MERSENNE_61).unwrap();
        assert!(matches!(verify_b_table(6, &r), Err(Error::Precondition(_))));
    }

    #[test]
    fn quadrics_of_conic_system() {
        // The plane conics span all of Sym^2 of the forms x, y, z: no quadric relation.
        let f = fp();
        let lin: Vec<PlaneForm<Fp>> = (0..3)
            .map(|i| {
                let mut e = [0usize; 3];
                e[i] = 1;
                PlaneForm::from_terms(&f, 1, &[(1, e)]).unwrap()
            })
            .collect();
        assert_eq!(quadrics_through(&lin).unwrap(), 0);
        // x^2, xy, y^2 satisfy (xy)^2 = x^2 y^2.
        let q: Vec<PlaneForm<Fp>> = [[2, 0, 0], [1, 1, 0], [0, 2, 0]]
            .iter()
            .map(|&e| PlaneForm::from_terms(&f, 2, &[(1, e)]).unwrap())
            .collect();
        assert_eq!(quadrics_through(&q).unwrap(), 1);
    }

    #[test]
    fn base_points_detected() {
        let f = fp();
        let p = |x: u64, y: u64| ProjPoint::affine(&f, x, y);
        // Conics through four points: base-point free outside them.
        let spec = MultiplicitySpec::new(2, vec![(p(0, 0), 1), (p(1, 0), 1), (p(0, 1), 1), (p(3, 5), 1)]).unwrap();
        let sys = system_basis(&f, &spec).unwrap();
        assert!(base_point_free(&f, &sys, 1, 5).unwrap().certified_on_trial.is_some());
        // Same system with one assigned point forgotten: that point is an unassigned base point.
        let mut hidden = sys.clone();
        hidden.spec = MultiplicitySpec::new(2, vec![(p(0, 0), 1), (p(1, 0), 1), (p(0, 1), 1)]).unwrap();
        assert!(base_point_free(&f, &hidden, 1, 5).unwrap().certified_on_trial.is_none());
    }
}
