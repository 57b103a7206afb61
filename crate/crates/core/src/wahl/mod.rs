//! The Gauss-Wahl map of a du Val curve, measured by evaluation at curve points.
//!
//! With adjoint forms `A_i` spanning the canonical series, `omega_i = A_i dx / F_y`
//! on the affine chart. Writing `f_i = A_i / F_y` and `D = d/dx - (F_x/F_y) d/dy`
//! for the derivation along the curve, the image of `omega_i ^ omega_j` is
//! `(f_i D f_j - f_j D f_i) dx^3`. Evaluating at `N > 6g - 6` points is injective
//! on cubic differentials, so the rank of the sample matrix is the rank of the map.

pub mod symbolic;

use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cache::Cache;
use crate::cubic::{tenth_point, LoadedConfig, PointConfig, Provenance};
use crate::error::{Error, Result};
use crate::exactalg::{roots_in_field, DenseMatrix, Field, Fp, UniPoly};
use crate::form::{monomial_count, LocalExpansion, PlaneForm, ProjPoint, Projectivity};
use crate::linsys::{system_basis, system_dimension, MultiplicitySpec};

pub const REPORT_SCHEMA: u32 = 1;
pub const RETRY_BUDGET: usize = 20;

/// A plane curve in a chosen affine chart, with its assigned ordinary singularities.
#[derive(Clone, Debug)]
pub struct PlaneCurve {
    /// The equation in chart coordinates, `F(M X)`.
    form: PlaneForm<Fp>,
    /// The equation in the original coordinates.
    original: PlaneForm<Fp>,
    genus: usize,
    /// Singular points of the original model with their multiplicities.
    singular: Vec<(ProjPoint<Fp>, usize)>,
    /// Further smooth points to keep samples away from.
    marked: Vec<ProjPoint<Fp>>,
    chart: Projectivity<Fp>,
    /// `singular` and `marked` in chart coordinates.
    chart_singular: Vec<(ProjPoint<Fp>, usize)>,
    chart_marked: Vec<ProjPoint<Fp>>,
}

impl PlaneCurve {
    /// The curve `original` seen through the coordinate change `chart` (original `X = M X'`).
    pub fn new(
        original: PlaneForm<Fp>,
        genus: usize,
        singular: Vec<(ProjPoint<Fp>, usize)>,
        marked: Vec<ProjPoint<Fp>>,
        chart: Projectivity<Fp>,
    ) -> Result<Self> {
        let f = *original.field();
        let inv = chart.inverse(&f)?;
        let chart_singular = singular.iter().map(|(p, m)| (inv.apply(&f, p), *m)).collect();
        let chart_marked = marked.iter().map(|p| inv.apply(&f, p)).collect();
        Ok(PlaneCurve {
            form: original.compose(&chart),
            original,
            genus,
            singular,
            marked,
            chart,
            chart_singular,
            chart_marked,
        })
    }

    /// The same curve in another chart.
    pub fn rechart(&self, chart: Projectivity<Fp>) -> Result<Self> {
        Self::new(self.original.clone(), self.genus, self.singular.clone(), self.marked.clone(), chart)
    }

    pub fn form(&self) -> &PlaneForm<Fp> {
        &self.form
    }
    pub fn original(&self) -> &PlaneForm<Fp> {
        &self.original
    }
    pub fn genus(&self) -> usize {
        self.genus
    }
    pub fn degree(&self) -> usize {
        self.form.degree()
    }
    pub fn field(&self) -> &Fp {
        self.form.field()
    }
    pub fn chart(&self) -> &Projectivity<Fp> {
        &self.chart
    }
    pub fn chart_singular(&self) -> &[(ProjPoint<Fp>, usize)] {
        &self.chart_singular
    }

    /// All assigned and marked points affine with pairwise distinct `x`, and `(0:1:0)` off the curve.
    pub fn chart_is_good(&self) -> bool {
        let f = self.field();
        let pts: Vec<&ProjPoint<Fp>> =
            self.chart_singular.iter().map(|(p, _)| p).chain(self.chart_marked.iter()).collect();
        !f.is_zero(self.form.leading_y())
            && pts.iter().all(|p| p.is_affine(f))
            && (0..pts.len()).all(|i| (0..i).all(|j| pts[i].x() != pts[j].x()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointAudit {
    pub multiplicity: usize,
    pub exact_multiplicity: bool,
    pub ordinary: bool,
    pub expected_valuation: usize,
    pub valuation: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditReport {
    pub points: Vec<PointAudit>,
    pub discriminant_degree: Option<usize>,
    pub residual_degree: Option<usize>,
    pub residual_squarefree: bool,
    pub infinity_transversal: bool,
    pub failures: Vec<String>,
    pub pass: bool,
}

/// Local and global certificate that the curve has exactly the assigned ordinary singularities.
///
/// At each assigned point of multiplicity `m`: Taylor coefficients of order `< m`
/// vanish, those of order `m` do not, and the tangent cone is squarefree. Then
/// `R(x) = Res_y(F, F_y)` must vanish to order exactly `m(m-1)` at each assigned
/// `x`, with squarefree cofactor (no other singular point in the chart), and the
/// line at infinity must meet the curve in `d` distinct points.
pub fn singularity_audit(curve: &PlaneCurve) -> Result<AuditReport> {
    let f = curve.field();
    let form = curve.form();
    let d = form.degree();
    let mut failures = Vec::new();
    if !curve.chart_is_good() {
        failures.push("chart: assigned points not affine with distinct x, or (0:1:0) on the curve".into());
        return Ok(AuditReport {
            points: Vec::new(),
            discriminant_degree: None,
            residual_degree: None,
            residual_squarefree: false,
            infinity_transversal: false,
            failures,
            pass: false,
        });
    }
    let mut points = Vec::new();
    for (i, (p, m)) in curve.chart_singular().iter().enumerate() {
        let le = LocalExpansion::new(f, d, p);
        let low_vanish = (0..*m).all(|k| le.coefficients_of_order(form, k).iter().all(|c| f.is_zero(c)));
        let cone = le.coefficients_of_order(form, *m);
        let exact = low_vanish && cone.iter().any(|c| !f.is_zero(c));
        let ordinary = exact && binary_form_squarefree(f, &cone);
        if !exact {
            failures.push(format!("point {}: multiplicity is not exactly {m}", i + 1));
        } else if !ordinary {
            failures.push(format!("point {}: tangent cone has a repeated line", i + 1));
        }
        points.push(PointAudit {
            multiplicity: *m,
            exact_multiplicity: exact,
            ordinary,
            expected_valuation: m * (m - 1),
            valuation: 0,
        });
    }
    let r = form.discriminant_in_x()?;
    let mut residual_degree = None;
    let mut residual_squarefree = false;
    if r.is_zero() {
        failures.push("discriminant: Res_y(F, F_y) vanishes identically".into());
    } else {
        let mut rest = r.clone();
        for (i, (p, _)) in curve.chart_singular().iter().enumerate() {
            let (v, cof) = rest.valuation_at(p.x())?;
            points[i].valuation = v;
            if v != points[i].expected_valuation {
                failures.push(format!(
                    "discriminant: valuation {v} at point {}, expected {}",
                    i + 1,
                    points[i].expected_valuation
                ));
            }
            rest = cof;
        }
        residual_degree = rest.degree();
        residual_squarefree = rest.is_squarefree();
        if !residual_squarefree {
            failures.push("discriminant: residual factor is not squarefree".into());
        }
    }
    let inf = form.at_infinity_in_y();
    let infinity_transversal = inf.degree() == Some(d) && inf.is_squarefree();
    if !infinity_transversal {
        failures.push("line at infinity is not transversal".into());
    }
    Ok(AuditReport {
        points,
        discriminant_degree: r.degree(),
        residual_degree,
        residual_squarefree,
        infinity_transversal,
        pass: failures.is_empty(),
        failures,
    })
}

/// Whether `sum c_a u^a v^{m-a}` has no repeated linear factor.
fn binary_form_squarefree(f: &Fp, coeffs: &[u64]) -> bool {
    let m = coeffs.len() - 1;
    let poly = UniPoly::new(f, coeffs.to_vec());
    let Some(deg) = poly.degree() else {
        return false;
    };
    // v divides the form to the power m - deg
    m - deg <= 1 && poly.is_squarefree()
}

/// The du Val conditions: multiplicity `g` at `p_1..p_8`, `g - 1` at `p_9`.
pub fn du_val_spec<F: Field>(config: &PointConfig<F>, g: usize) -> Result<MultiplicitySpec<F>> {
    let mut conds: Vec<_> = config.points()[..8].iter().map(|p| (p.clone(), g)).collect();
    conds.push((config.points()[8].clone(), g - 1));
    MultiplicitySpec::new(3 * g, conds)
}

/// A seeded random member of the du Val system, audited, in a random chart.
pub fn pick_duval_member(config: &PointConfig<Fp>, g: usize, seed: u64) -> Result<PlaneCurve> {
    if g < 2 {
        return Err(Error::Usage(format!("genus {g} < 2")));
    }
    let spec = du_val_spec(config, g)?;
    let sys = system_basis(config.field(), &spec)?;
    if sys.affine_dim() != g + 1 {
        return Err(Error::InconsistentGeometry(format!(
            "du Val system has affine dimension {}, expected {}",
            sys.affine_dim(),
            g + 1
        )));
    }
    pick_member(config, g, &sys.basis, seed)
}

/// A random audited member of the span of `basis`, given the expected du Val multiplicities.
pub fn pick_member(config: &PointConfig<Fp>, g: usize, basis: &[PlaneForm<Fp>], seed: u64) -> Result<PlaneCurve> {
    let f = *config.field();
    let p10 = tenth_point(config, g as i64)?;
    let mut singular: Vec<_> = config.points()[..8].iter().map(|p| (p.clone(), g)).collect();
    singular.push((config.points()[8].clone(), g - 1));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut last = String::from("no attempt made");
    for _ in 0..RETRY_BUDGET {
        let chart = Projectivity::random(&f, &mut rng);
        let coeffs: Vec<u64> = basis.iter().map(|_| f.random(&mut rng)).collect();
        let member = PlaneForm::combination(&f, 3 * g, basis, &coeffs)?;
        let curve = PlaneCurve::new(member, g, singular.clone(), vec![p10.clone()], chart)?;
        let audit = singularity_audit(&curve)?;
        if audit.pass {
            return Ok(curve);
        }
        last = audit.failures.join("; ");
    }
    Err(Error::RetryExhausted(format!(
        "no audited du Val member in {RETRY_BUDGET} attempts (last: {last})"
    )))
}

/// A basis of the canonical series: forms of degree `d - 3` with multiplicity `m - 1` at each assigned point.
pub fn adjoint_basis(curve: &PlaneCurve) -> Result<Vec<PlaneForm<Fp>>> {
    let d = curve.degree();
    if d < 3 {
        return Err(Error::Usage(format!("degree {d} curve has no adjoints")));
    }
    let conds = curve.chart_singular().iter().map(|(p, m)| (p.clone(), m - 1)).collect();
    let spec = MultiplicitySpec::new(d - 3, conds)?;
    let sys = system_basis(curve.field(), &spec)?;
    if sys.affine_dim() != curve.genus() {
        return Err(Error::InconsistentGeometry(format!(
            "{} adjoints for genus {}",
            sys.affine_dim(),
            curve.genus()
        )));
    }
    Ok(sys.basis)
}

/// `dim H^0(omega^3)` from plane interpolation: forms of degree `3(d-3)` with
/// multiplicity `3(m-1)`, modulo multiples of `F` (degree `2d - 9`, multiplicity `2m - 3`).
pub fn omega3_dim(curve: &PlaneCurve) -> Result<usize> {
    omega3_dim_for(curve.field(), curve.degree(), &curve.singular)
}

/// [`omega3_dim`] from the degree and the assigned points alone.
pub fn omega3_dim_for(field: &Fp, d: usize, singular: &[(ProjPoint<Fp>, usize)]) -> Result<usize> {
    let top = MultiplicitySpec::new(3 * d - 9, singular.iter().map(|(p, m)| (p.clone(), 3 * (m - 1))).collect())?;
    let (top_dim, _) = system_dimension(field, &top)?;
    let cof_dim = if 2 * d < 9 {
        0
    } else {
        let low = MultiplicitySpec::new(
            2 * d - 9,
            singular.iter().map(|(p, m)| (p.clone(), (2 * m).saturating_sub(3))).collect(),
        )?;
        system_dimension(field, &low)?.0
    };
    Ok(top_dim - cof_dim)
}

/// A smooth affine point of the curve in chart coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sample {
    pub x: u64,
    pub y: u64,
}

/// `n` distinct smooth chart points with `F_y != 0`, away from assigned and marked points.
pub fn sample_points(curve: &PlaneCurve, n: usize, seed: u64) -> Result<Vec<Sample>> {
    let g = curve.genus();
    if n + 5 < 6 * g {
        return Err(Error::Precondition(format!("{n} samples < 6g - 5 = {}", 6 * g - 5)));
    }
    let f = curve.field();
    let fy = curve.form().derivative(1);
    let avoid: Vec<(u64, u64)> = curve
        .chart_singular
        .iter()
        .map(|(p, _)| p)
        .chain(curve.chart_marked.iter())
        .filter(|p| p.is_affine(f))
        .map(|p| (*p.x(), *p.y()))
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out: Vec<Sample> = Vec::with_capacity(n);
    let budget = 100 * n + 1000;
    for _ in 0..budget {
        if out.len() == n {
            return Ok(out);
        }
        let x = f.random(&mut rng);
        let poly = curve.form().univariate_in_y(&x);
        if poly.is_zero() {
            continue;
        }
        for y in roots_in_field(&poly)? {
            let s = Sample { x, y };
            if out.len() < n && !f.is_zero(&fy.eval_affine(&x, &y)) && !avoid.contains(&(x, y)) && !out.contains(&s) {
                out.push(s);
            }
        }
    }
    if out.len() == n {
        return Ok(out);
    }
    Err(Error::BadPrime(format!(
        "found {} of {n} curve points over GF({})",
        out.len(),
        f.modulus()
    )))
}

/// All pairs `i < j` in lexicographic order.
pub fn lex_pairs(g: usize) -> Vec<(usize, usize)> {
    (0..g).flat_map(|i| (i + 1..g).map(move |j| (i, j))).collect()
}

/// The sample matrix with rows indexed by the given adjoint pairs.
pub fn wahl_matrix_for_pairs(
    curve: &PlaneCurve,
    adjoints: &[PlaneForm<Fp>],
    samples: &[Sample],
    pairs: &[(usize, usize)],
) -> Result<DenseMatrix<Fp>> {
    let f = *curve.field();
    let form = curve.form();
    let [fx, fy, _] = form.gradient();
    let (fxy, fyy) = (fy.derivative(0), fy.derivative(1));
    let grads: Vec<[PlaneForm<Fp>; 3]> = adjoints
        .iter()
        .map(|a| [a.clone(), a.derivative(0), a.derivative(1)])
        .collect();
    let columns: Vec<Result<Vec<u64>>> = samples
        .par_iter()
        .map(|s| {
            let ev = |p: &PlaneForm<Fp>| p.eval_affine(&s.x, &s.y);
            let (vx, vy) = (ev(&fx), ev(&fy));
            let vy_inv = f
                .inv(&vy)
                .ok_or_else(|| Error::InconsistentGeometry("F_y vanishes at a sample".into()))?;
            let slope = f.mul(&vx, &vy_inv);
            // D applied to a polynomial G: G_x - (F_x / F_y) G_y
            let d_of = |gx: u64, gy: u64| f.sub(&gx, &f.mul(&slope, &gy));
            let d_fy = d_of(ev(&fxy), ev(&fyy));
            let vy2_inv = f.mul(&vy_inv, &vy_inv);
            // f_i = A_i / F_y and D f_i = (D A_i F_y - A_i D F_y) / F_y^2
            let vals: Vec<(u64, u64)> = grads
                .iter()
                .map(|[a, ax, ay]| {
                    let va = ev(a);
                    let da = d_of(ev(ax), ev(ay));
                    let fi = f.mul(&va, &vy_inv);
                    let dfi = f.mul(&f.sub(&f.mul(&da, &vy), &f.mul(&va, &d_fy)), &vy2_inv);
                    (fi, dfi)
                })
                .collect();
            Ok(pairs
                .iter()
                .map(|&(i, j)| f.sub(&f.mul(&vals[i].0, &vals[j].1), &f.mul(&vals[j].0, &vals[i].1)))
                .collect())
        })
        .collect();
    let columns = columns.into_iter().collect::<Result<Vec<_>>>()?;
    let mut m = DenseMatrix::zeros(&f, pairs.len(), samples.len());
    for (c, col) in columns.iter().enumerate() {
        for (r, v) in col.iter().enumerate() {
            m.set(r, c, *v);
        }
    }
    Ok(m)
}

/// The `g(g-1)/2 x N` sample matrix of the Gauss-Wahl map.
pub fn wahl_matrix(curve: &PlaneCurve, adjoints: &[PlaneForm<Fp>], samples: &[Sample]) -> Result<DenseMatrix<Fp>> {
    wahl_matrix_for_pairs(curve, adjoints, samples, &lex_pairs(adjoints.len()))
}

/// Rows of space-separated decimal residues.
pub fn matrix_text(m: &DenseMatrix<Fp>) -> String {
    let mut out = String::new();
    for r in 0..m.rows() {
        let row: Vec<String> = m.row(r).iter().map(|v| v.to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

#[derive(Clone, Debug, Default)]
pub struct WahlOptions<'a> {
    pub samples: Option<usize>,
    pub second_prime: Option<u64>,
    pub cache: Option<&'a Cache>,
    /// Include wall-clock stage timings (makes reports run-dependent).
    pub timings: bool,
    pub keep_matrix: bool,
    /// Run the `h^0(omega^3)` cross-check only at the main prime.
    pub omega3_main_prime_only: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StageTimings {
    pub member_ms: u128,
    pub adjoints_ms: u128,
    pub omega3_ms: u128,
    pub samples_ms: u128,
    pub rank_ms: u128,
}

/// One full pipeline run at one prime.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PrimeRun {
    pub prime: u64,
    pub audit: AuditReport,
    pub adjoint_dim: usize,
    pub omega3_dim: Option<usize>,
    pub samples: usize,
    pub matrix_shape: [usize; 2],
    pub rank: usize,
    pub corank: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub timings: Option<StageTimings>,
    #[serde(skip)]
    pub matrix: Option<DenseMatrix<Fp>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SecondPrime {
    pub prime: u64,
    pub rank: usize,
    pub corank: usize,
    pub omega3_dim: Option<usize>,
    pub agrees: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WahlReport {
    pub schema: u32,
    pub genus: usize,
    pub seed: u64,
    pub provenance: Provenance,
    pub prime: u64,
    pub audit: AuditReport,
    pub adjoint_dim: usize,
    pub samples: usize,
    pub matrix_shape: [usize; 2],
    pub rank: usize,
    pub corank: usize,
    pub omega3_dim: usize,
    pub expected_omega3_dim: usize,
    pub second_prime: Option<SecondPrime>,
    /// `Some(1)` for odd `g > 11`; other genera are exploratory.
    pub expected_corank: Option<usize>,
    pub logic_note: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub timings: Option<StageTimings>,
}

const LOGIC_NOTE: &str = "rank mod p <= rank in characteristic 0, so the measured corank is an upper \
bound for the characteristic-0 corank; du Val curves lie on a surface whose canonical sections force \
corank >= 1, so a measured corank of 1 pins the characteristic-0 corank to 1.";

fn point_key(points: &[(ProjPoint<Fp>, usize)]) -> Vec<[u64; 4]> {
    points.iter().map(|(p, m)| [p.coords()[0], p.coords()[1], p.coords()[2], *m as u64]).collect()
}

/// The pipeline at one prime.
pub fn run_at_prime(
    config: &PointConfig<Fp>,
    g: usize,
    seed: u64,
    opts: &WahlOptions,
    check_omega3: bool,
) -> Result<PrimeRun> {
    let f = *config.field();
    let t0 = Instant::now();
    let curve = pick_duval_member(config, g, seed)?;
    let audit = singularity_audit(&curve)?;
    let t1 = Instant::now();
    let adjoints = adjoint_basis(&curve)?;
    let t2 = Instant::now();
    let expected = 5 * g - 5;
    let omega3 = if check_omega3 {
        let dim = match opts.cache {
            Some(cache) => cache.get_or_compute(
                "omega3",
                &(f.modulus(), curve.degree(), point_key(&curve.singular)),
                || omega3_dim(&curve),
            )?,
            None => omega3_dim(&curve)?,
        };
        if dim != expected {
            return Err(Error::InconsistentGeometry(format!(
                "interpolated h0(omega^3) = {dim}, Riemann-Roch gives {expected}"
            )));
        }
        Some(dim)
    } else {
        None
    };
    let t3 = Instant::now();
    let n = opts.samples.unwrap_or(6 * g + 5);
    let samples = sample_points(&curve, n, seed ^ 0x5a4d_504c_4553)?;
    let t4 = Instant::now();
    let m = wahl_matrix(&curve, &adjoints, &samples)?;
    let rank = m.rank();
    let t5 = Instant::now();
    let ms = |a: Instant, b: Instant| (b - a).as_millis();
    Ok(PrimeRun {
        prime: f.modulus(),
        audit,
        adjoint_dim: adjoints.len(),
        omega3_dim: omega3,
        samples: n,
        matrix_shape: [m.rows(), m.cols()],
        rank,
        corank: expected - rank,
        timings: opts.timings.then(|| StageTimings {
            member_ms: ms(t0, t1),
            adjoints_ms: ms(t1, t2),
            omega3_ms: ms(t2, t3),
            samples_ms: ms(t3, t4),
            rank_ms: ms(t4, t5),
        }),
        matrix: opts.keep_matrix.then_some(m),
    })
}

/// The full corank measurement with its second-prime confirmation.
pub fn gauss_wahl_corank(config: &LoadedConfig, g: usize, prime: u64, seed: u64, opts: &WahlOptions) -> Result<(WahlReport, Option<DenseMatrix<Fp>>)> {
    if g < 3 {
        return Err(Error::Usage(format!("genus {g} < 3")));
    }
    let main = run_at_prime(&config.at_prime(prime)?, g, seed, opts, true)?;
    let second_prime = match opts.second_prime {
        Some(q) => {
            let sub = WahlOptions { keep_matrix: false, ..opts.clone() };
            let run = run_at_prime(&config.at_prime(q)?, g, seed, &sub, !opts.omega3_main_prime_only)?;
            Some(SecondPrime {
                prime: q,
                rank: run.rank,
                corank: run.corank,
                omega3_dim: run.omega3_dim,
                agrees: run.rank == main.rank,
            })
        }
        None => None,
    };
    let report = WahlReport {
        schema: REPORT_SCHEMA,
        genus: g,
        seed,
        provenance: config.provenance().clone(),
        prime,
        audit: main.audit,
        adjoint_dim: main.adjoint_dim,
        samples: main.samples,
        matrix_shape: main.matrix_shape,
        rank: main.rank,
        corank: main.corank,
        omega3_dim: main.omega3_dim.unwrap_or_default(),
        expected_omega3_dim: 5 * g - 5,
        second_prime,
        expected_corank: (g % 2 == 1 && g > 11).then_some(1),
        logic_note: LOGIC_NOTE.to_string(),
        timings: main.timings,
    };
    Ok((report, main.matrix))
}

/// A random plane quartic, certified smooth by the audit, in a random chart.
pub fn random_smooth_quartic(field: &Fp, seed: u64) -> Result<PlaneCurve> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RETRY_BUDGET {
        let coeffs = (0..monomial_count(4)).map(|_| field.random(&mut rng)).collect();
        let form = PlaneForm::new(field, 4, coeffs)?;
        let curve = PlaneCurve::new(form, 3, Vec::new(), Vec::new(), Projectivity::random(field, &mut rng))?;
        if singularity_audit(&curve)?.pass {
            return Ok(curve);
        }
    }
    Err(Error::RetryExhausted("no smooth quartic found".into()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuarticControl {
    pub prime: u64,
    pub seed: u64,
    pub evaluation_rank: usize,
    pub symbolic_rank: usize,
    pub omega3_dim: usize,
    pub corank: usize,
    pub pass: bool,
}

/// Evaluation pipeline against the symbolic oracle on a smooth quartic.
pub fn quartic_control(prime: u64, seed: u64) -> Result<QuarticControl> {
    let f = Fp::new(prime)?;
    let curve = random_smooth_quartic(&f, seed)?;
    let adjoints = adjoint_basis(&curve)?;
    let samples = sample_points(&curve, 6 * 3 + 5, seed)?;
    let evaluation_rank = wahl_matrix(&curve, &adjoints, &samples)?.rank();
    let symbolic_rank = symbolic::wahl_rank(curve.form(), &adjoints)?;
    let omega3 = omega3_dim(&curve)?;
    Ok(QuarticControl {
        prime,
        seed,
        evaluation_rank,
        symbolic_rank,
        omega3_dim: omega3,
        corank: omega3 - evaluation_rank,
        pass: evaluation_rank == symbolic_rank && omega3 == 10,
    })
}

#[cfg(test)]
mod tests;
