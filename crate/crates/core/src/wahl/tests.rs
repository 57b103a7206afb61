use super::*;
use crate::cubic::reference_config;
use crate::exactalg::MERSENNE_61;
use crate::linsys::system_basis;

fn config() -> PointConfig<Fp> {
    reference_config().reduce_mod(MERSENNE_61).unwrap()
}

fn rank_of(curve: &PlaneCurve, adj: &[PlaneForm<Fp>], seed: u64) -> usize {
    let g = curve.genus();
    let s = sample_points(curve, 6 * g + 5, seed).unwrap();
    wahl_matrix(curve, adj, &s).unwrap().rank()
}

#[test]
fn quartic_control_matches_symbolic_rank() {
    let q = quartic_control(MERSENNE_61, 11).unwrap();
    assert_eq!(q.evaluation_rank, 3);
    assert_eq!(q.symbolic_rank, 3);
    assert_eq!(q.omega3_dim, 10);
    assert_eq!(q.corank, 7);
    assert!(q.pass);
}

#[test]
fn du_val_genus_four_pipeline() {
    let c = config();
    let curve = pick_duval_member(&c, 4, 1).unwrap();
    let audit = singularity_audit(&curve).unwrap();
    assert!(audit.pass, "{:?}", audit.failures);
    assert_eq!(audit.points.len(), 9);
    // Res_y(F, F_y) has degree d(d-1); the residual is what the nodes leave
    let d = 12;
    let sing: usize = 8 * 12 + 6;
    assert_eq!(audit.discriminant_degree, Some(d * (d - 1)));
    assert_eq!(audit.residual_degree, Some(d * (d - 1) - sing));
    let adj = adjoint_basis(&curve).unwrap();
    assert_eq!(adj.len(), 4);
    assert_eq!(omega3_dim(&curve).unwrap(), 15);
    let eval = rank_of(&curve, &adj, 2);
    let sym = symbolic::wahl_rank(curve.form(), &adj).unwrap();
    assert_eq!(eval, sym);
}

#[test]
fn rank_is_independent_of_samples_basis_and_chart() {
    let c = config();
    let curve = pick_duval_member(&c, 5, 3).unwrap();
    let adj = adjoint_basis(&curve).unwrap();
    let r = rank_of(&curve, &adj, 1);
    assert_eq!(rank_of(&curve, &adj, 99), r);

    let f = *curve.field();
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let g = adj.len();
    let mixed: Vec<PlaneForm<Fp>> = (0..g)
        .map(|_| {
            let co: Vec<u64> = (0..g).map(|_| f.random(&mut rng)).collect();
            PlaneForm::combination(&f, adj[0].degree(), &adj, &co).unwrap()
        })
        .collect();
    assert_eq!(rank_of(&curve, &mixed, 1), r);

    let moved = loop {
        let t = Projectivity::random(&f, &mut rng);
        let m = curve.rechart(t).unwrap();
        if singularity_audit(&m).unwrap().pass {
            break m;
        }
    };
    let adj2 = adjoint_basis(&moved).unwrap();
    assert_eq!(rank_of(&moved, &adj2, 5), r);
}

#[test]
fn swapped_pairs_give_negated_rows() {
    let c = config();
    let curve = pick_duval_member(&c, 3, 5).unwrap();
    let adj = adjoint_basis(&curve).unwrap();
    let s = sample_points(&curve, 23, 1).unwrap();
    let f = *curve.field();
    let m = wahl_matrix_for_pairs(&curve, &adj, &s, &[(0, 1), (1, 0), (2, 2)]).unwrap();
    for col in 0..s.len() {
        assert_eq!(f.add(m.get(0, col), m.get(1, col)), 0);
        assert_eq!(*m.get(2, col), 0);
    }
}

#[test]
fn too_few_samples_is_rejected() {
    let c = config();
    let curve = pick_duval_member(&c, 3, 5).unwrap();
    assert!(matches!(sample_points(&curve, 12, 1), Err(Error::Precondition(_))));
    assert_eq!(sample_points(&curve, 13, 1).unwrap().len(), 13);
}

#[test]
fn samples_are_smooth_curve_points() {
    let f = Fp::new(1_000_003).unwrap();
    // x^2 + y^2 - z^2 in a shifted chart
    let conic = PlaneForm::from_terms(&f, 2, &[(1, [2, 0, 0]), (1, [0, 2, 0]), (-1, [0, 0, 2])]).unwrap();
    let curve = PlaneCurve::new(conic, 0, Vec::new(), Vec::new(), Projectivity::identity(&f)).unwrap();
    let s = sample_points(&curve, 40, 7).unwrap();
    let fy = curve.form().derivative(1);
    for (i, p) in s.iter().enumerate() {
        assert_eq!(curve.form().eval_affine(&p.x, &p.y), 0);
        assert_ne!(fy.eval_affine(&p.x, &p.y), 0);
        assert!(!s[..i].contains(p));
    }
}

#[test]
fn raised_multiplicity_fails_the_audit() {
    let c = config();
    let g = 3;
    let mut conds: Vec<_> = c.points()[..8].iter().map(|p| (p.clone(), g)).collect();
    // one more than du Val at the ninth point leaves only g times the cubic
    conds.push((c.points()[8].clone(), g));
    let spec = MultiplicitySpec::new(3 * g, conds).unwrap();
    let sys = system_basis(c.field(), &spec).unwrap();
    assert!(!sys.basis.is_empty());
    assert!(matches!(pick_member(&c, g, &sys.basis, 1), Err(Error::RetryExhausted(_))));
}

#[test]
fn report_is_deterministic_and_agrees_across_primes() {
    let cfg = LoadedConfig::Rational(reference_config());
    let opts = WahlOptions { second_prime: Some(crate::exactalg::SECOND_PRIME), ..Default::default() };
    let (a, _) = gauss_wahl_corank(&cfg, 4, MERSENNE_61, 2, &opts).unwrap();
    let (b, _) = gauss_wahl_corank(&cfg, 4, MERSENNE_61, 2, &opts).unwrap();
    assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    assert_eq!(a.matrix_shape, [6, 29]);
    assert_eq!(a.corank, 15 - a.rank);
    assert!(a.second_prime.as_ref().unwrap().agrees);
    assert_eq!(a.expected_corank, None);
    assert!(a.timings.is_none());
}

#[test]
fn matrix_text_has_one_line_per_row() {
    let f = Fp::new(7).unwrap();
    let m = DenseMatrix::from_rows(&f, vec![vec![1, 2], vec![3, 4]]).unwrap();
    assert_eq!(matrix_text(&m), "1 2\n3 4\n");
}
