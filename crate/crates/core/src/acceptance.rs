//! The acceptance suite as a library, shared by the CLI and the `acceptance` test target.

use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::cache::Cache;
use crate::cubic::{
    cubic_through_nine, gen_halphen_config, halphen_index, reference_config, LoadedConfig, PointConfig,
};
use crate::error::Result;
use crate::exactalg::{DenseMatrix, Field, Fp, MERSENNE_61, SECOND_PRIME};
use crate::form::{PlaneForm, Projectivity};
use crate::linsys::{
    anticanonical_multiple_dim, is_k_halphen_general, nodal_class_scan, system_dimension, verify_a_table,
    verify_b_table,
};
use crate::picard::verify_lattice_identities;
use crate::wahl::{
    adjoint_basis, du_val_spec, gauss_wahl_corank, pick_duval_member, quartic_control, sample_points,
    singularity_audit, wahl_matrix, WahlOptions,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Every criterion at reduced scale where the full run is minutes long.
    Fast,
    Full,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionResult {
    pub id: u32,
    pub name: String,
    pub pass: bool,
    pub detail: String,
    #[serde(skip)]
    pub elapsed_ms: u128,
}

impl std::fmt::Display for CriterionResult {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "[{}] {:>2} {} ({:.1} s): {}",
            if self.pass { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.elapsed_ms as f64 / 1000.0,
            self.detail
        )
    }
}

type Check = fn(Mode, &Cache) -> Result<(bool, String)>;

pub const CRITERIA: [(u32, &str, Check); 10] = [
    (1, "lattice identities", lattice),
    (2, "reference points are Halphen-general", reference_generality),
    (3, "du Val system dimension", du_val_dimension),
    (4, "generated index-7 configuration", generated_index),
    (5, "cohomology table for B", table_b),
    (6, "cohomology table for A", table_a),
    (7, "Gauss-Wahl corank at genus 13", main_corank),
    (8, "Gauss-Wahl map is never surjective", non_surjective),
    (9, "smooth quartic oracle", quartic),
    (10, "invariance properties", properties),
];

/// Runs one criterion; errors count as failures with the error as detail.
pub fn run_criterion(id: u32, mode: Mode, cache: &Cache) -> Option<CriterionResult> {
    let (id, name, check) = CRITERIA.iter().find(|c| c.0 == id)?;
    let t = Instant::now();
    let (pass, detail) = match check(mode, cache) {
        Ok(r) => r,
        Err(e) => (false, format!("error: {e}")),
    };
    Some(CriterionResult { id: *id, name: name.to_string(), pass, detail, elapsed_ms: t.elapsed().as_millis() })
}

/// Runs every criterion in order, calling `report` as each one finishes.
pub fn run_all(mode: Mode, cache: &Cache, mut report: impl FnMut(&CriterionResult)) -> Vec<CriterionResult> {
    CRITERIA
        .iter()
        .filter_map(|c| {
            let r = run_criterion(c.0, mode, cache)?;
            report(&r);
            Some(r)
        })
        .collect()
}

fn reference_mod_p() -> Result<PointConfig<Fp>> {
    reference_config().reduce_mod(MERSENNE_61)
}

fn index7() -> Result<PointConfig<Fp>> {
    gen_halphen_config(7, 1, MERSENNE_61)
}

fn lattice(_: Mode, _: &Cache) -> Result<(bool, String)> {
    let mut failed = Vec::new();
    for s in 1..=20 {
        for row in verify_lattice_identities(s)? {
            if !row.pass {
                failed.push(format!("s={s} {}", row.identity));
            }
        }
    }
    Ok((failed.is_empty(), if failed.is_empty() { "11 identities for s = 1..20".into() } else { failed.join(", ") }))
}

fn reference_generality(_: Mode, _: &Cache) -> Result<(bool, String)> {
    let c = reference_mod_p()?;
    let (k, max_m, bound) = (15, 40, 12);
    let gen = is_k_halphen_general(&c, k)?;
    let index = halphen_index(&c, max_m)?;
    let nodal = nodal_class_scan(&c, bound)?;
    let pass = gen.general && index.is_none() && nodal.is_empty();
    Ok((
        pass,
        format!(
            "{k}-general: {}; index up to {max_m}: {}; (-2)-classes up to degree {bound}: {}",
            gen.general,
            index.map_or("none".into(), |m| m.to_string()),
            nodal.len()
        ),
    ))
}

fn du_val_dimension(_: Mode, _: &Cache) -> Result<(bool, String)> {
    let c = reference_mod_p()?;
    let mut bad = Vec::new();
    for g in 2..=13 {
        let (dim, _) = system_dimension(c.field(), &du_val_spec(&c, g)?)?;
        if dim != g + 1 {
            bad.push(format!("g={g}: projective dim {}", dim as i64 - 1));
        }
    }
    Ok((bad.is_empty(), if bad.is_empty() { "projective dim = g for g = 2..13".into() } else { bad.join(", ") }))
}

fn generated_index(_: Mode, _: &Cache) -> Result<(bool, String)> {
    let c = index7()?;
    let index = halphen_index(&c, 12)?;
    let dims: Vec<usize> = (1..=7).map(|h| anticanonical_multiple_dim(&c, h)).collect::<Result<_>>()?;
    let pass = index == Some(7) && dims[..6].iter().all(|&d| d == 1) && dims[6] == 2;
    Ok((pass, format!("group-law index {index:?}; h0(hJ') for h = 1..7: {dims:?}")))
}

fn table_b(_: Mode, _: &Cache) -> Result<(bool, String)> {
    let rows = verify_b_table(6, &index7()?)?;
    let pass = rows.iter().all(|r| r.pass);
    let detail = rows.iter().map(|r| format!("{}={:?}", r.divisor, r.computed)).collect::<Vec<_>>().join(" ");
    Ok((pass, detail))
}

fn table_a(_: Mode, _: &Cache) -> Result<(bool, String)> {
    let t = verify_a_table(6, &index7()?, 1)?;
    let mut detail = t.rows.iter().map(|r| format!("{}={:?}", r.divisor, r.computed)).collect::<Vec<_>>();
    detail.push(format!("quadrics={}", t.quadrics_computed));
    detail.push(format!("base-point free: {}", t.base_points.certified_on_trial.is_some()));
    Ok((t.pass, detail.join(" ")))
}

fn main_corank(mode: Mode, cache: &Cache) -> Result<(bool, String)> {
    let generated = LoadedConfig::Prime(index7()?);
    let reference = LoadedConfig::Rational(reference_config());
    let configs: Vec<(&str, &LoadedConfig)> = match mode {
        Mode::Full => vec![("index-7", &generated), ("reference", &reference)],
        Mode::Fast => vec![("index-7", &generated)],
    };
    let seeds: &[u64] = match mode {
        Mode::Full => &[1, 2],
        Mode::Fast => &[1],
    };
    let opts = WahlOptions {
        second_prime: Some(SECOND_PRIME),
        cache: Some(cache),
        omega3_main_prime_only: true,
        ..Default::default()
    };
    let mut pass = true;
    let mut parts = Vec::new();
    for (name, cfg) in configs {
        for &seed in seeds {
            let (r, _) = gauss_wahl_corank(cfg, 13, MERSENNE_61, seed, &opts)?;
            let q = r.second_prime.as_ref().expect("second prime requested");
            let ok = r.rank == 59 && r.corank == 1 && q.rank == 59 && r.omega3_dim == 60 && r.audit.pass;
            pass &= ok;
            parts.push(format!("{name}/seed {seed}: rank {} | {}", r.rank, q.rank));
        }
    }
    Ok((pass, format!("{} (omega3 = 60 checked once per config)", parts.join("; "))))
}

fn non_surjective(mode: Mode, cache: &Cache) -> Result<(bool, String)> {
    let genera: &[usize] = match mode {
        Mode::Full => &[5, 7, 9, 11, 12, 13],
        Mode::Fast => &[5, 7],
    };
    let cfg = LoadedConfig::Rational(reference_config());
    let opts = WahlOptions { cache: Some(cache), ..Default::default() };
    let mut pass = true;
    let mut parts = Vec::new();
    for &g in genera {
        let (r, _) = gauss_wahl_corank(&cfg, g, MERSENNE_61, 1, &opts)?;
        pass &= r.corank >= 1;
        parts.push(format!("g={g}: corank {}", r.corank));
    }
    Ok((pass, parts.join(", ")))
}

fn quartic(_: Mode, _: &Cache) -> Result<(bool, String)> {
    let q = quartic_control(MERSENNE_61, 1)?;
    Ok((
        q.pass && q.corank == 7,
        format!("evaluation rank {}, symbolic rank {}, corank {}", q.evaluation_rank, q.symbolic_rank, q.corank),
    ))
}

fn properties(mode: Mode, _: &Cache) -> Result<(bool, String)> {
    let g = match mode {
        Mode::Full => 7,
        Mode::Fast => 4,
    };
    let c = reference_mod_p()?;
    let f = *c.field();
    let curve = pick_duval_member(&c, g, 1)?;
    let adj = adjoint_basis(&curve)?;
    let n = 6 * g + 5;
    let rank_with = |curve: &crate::wahl::PlaneCurve, adj: &[PlaneForm<Fp>], seed: u64| -> Result<usize> {
        Ok(wahl_matrix(curve, adj, &sample_points(curve, n, seed)?)?.rank())
    };
    let base = rank_with(&curve, &adj, 1)?;
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let resampled = rank_with(&curve, &adj, 2)?;
    let mixed: Vec<PlaneForm<Fp>> = (0..g)
        .map(|_| {
            let co: Vec<u64> = (0..g).map(|_| f.random(&mut rng)).collect();
            PlaneForm::combination(&f, adj[0].degree(), &adj, &co)
        })
        .collect::<Result<_>>()?;
    let mixed_rank = rank_with(&curve, &mixed, 1)?;
    let moved = (0..20)
        .map(|_| curve.rechart(Projectivity::random(&f, &mut rng)))
        .find(|m| m.as_ref().is_ok_and(|m| singularity_audit(m).is_ok_and(|a| a.pass)))
        .transpose()?;
    let moved_rank = match &moved {
        Some(m) => Some(rank_with(m, &adjoint_basis(m)?, 1)?),
        None => None,
    };
    let wahl_ok = resampled == base && mixed_rank == base && moved_rank == Some(base);

    // group law: associativity and the chord relation on the reference cubic
    let model = cubic_through_nine(&c)?;
    let pts = c.points();
    let mut group_ok = true;
    for i in 0..6 {
        let (p, q, r) = (&pts[i], &pts[i + 1], &pts[i + 2]);
        let lhs = model.add(&model.add(p, q)?, r)?;
        let rhs = model.add(p, &model.add(q, r)?)?;
        group_ok &= lhs == rhs && model.contains(&lhs);
        group_ok &= model.sub(&model.add(p, q)?, q)? == *p;
    }

    // exactalg: rank(AB) <= min(rank A, rank B) and rank + nullity = cols
    let mut lin_ok = true;
    for t in 0..10 {
        let (r, k, cdim) = (3 + t % 4, 2 + t % 3, 5);
        let a = DenseMatrix::from_vec(&f, r, k, (0..r * k).map(|_| f.random(&mut rng)).collect())?;
        let b = DenseMatrix::from_vec(&f, k, cdim, (0..k * cdim).map(|_| f.random(&mut rng)).collect())?;
        let ab = a.mul(&b)?;
        let (rank, ker) = ab.rank_and_kernel();
        lin_ok &= rank <= a.rank().min(b.rank()) && rank + ker.len() == cdim;
        lin_ok &= ker.iter().all(|v| ab.mul_vec(v).is_ok_and(|w| w.iter().all(|x| *x == 0)));
    }
    let pass = wahl_ok && group_ok && lin_ok;
    Ok((
        pass,
        format!(
            "g={g} rank {base}: resample {resampled}, basis change {mixed_rank}, rechart {moved_rank:?}; group law {group_ok}; linear algebra {lin_ok}"
        ),
    ))
}
