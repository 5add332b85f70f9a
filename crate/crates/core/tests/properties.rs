use std::sync::OnceLock;

use hsp_powers::bounds::{lambda_mass, multiplicity_bound_check};
use hsp_powers::group::{make_alternating, make_cyclic, make_dihedral, make_symmetric, power_element_id, FiniteGroup};
use hsp_powers::linalg::{apply_tensor, kron, random_unit_vector, random_unitary, CMat};
use hsp_powers::repr::{ConditionReport, InvolutionProfile, Tolerances};
use hsp_powers::sampling::{
    exact_weak_l1_power, frame_projection_bound_check, weak_distribution, weak_l1_base, ExpVarChecker, FramePolicy,
    RepresentationData,
};
use hsp_powers::wreath::{iterated_wreath, wreath_dihedral};
use itertools::Itertools;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;

fn zoo() -> &'static [RepresentationData] {
    static ZOO: OnceLock<Vec<RepresentationData>> = OnceLock::new();
    ZOO.get_or_init(|| {
        let groups = vec![
            make_cyclic(6).unwrap(),
            make_dihedral(4).unwrap(),
            make_dihedral(5).unwrap(),
            make_symmetric(3).unwrap(),
            make_symmetric(4).unwrap(),
            make_alternating(4).unwrap(),
            make_alternating(5).unwrap(),
            wreath_dihedral(3).unwrap().as_finite_group().unwrap().clone(),
        ];
        groups.into_iter().map(|g| RepresentationData::new(g).unwrap()).collect()
    })
}

fn profile(g: &RepresentationData, mu: usize) -> InvolutionProfile {
    InvolutionProfile::from_table(&g.group, &g.table, mu).unwrap()
}

fn pick<T>(items: &[T], i: usize) -> &T {
    &items[i % items.len()]
}

fn involutions(g: &FiniteGroup) -> Vec<usize> {
    g.involutions()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn group_axioms(gi in 0usize..8, a in 0usize..10_000, b in 0usize..10_000, c in 0usize..10_000) {
        let g = &pick(zoo(), gi).group;
        let n = g.order();
        let (a, b, c) = (a % n, b % n, c % n);
        prop_assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
        prop_assert_eq!(g.mul(a, g.identity()), a);
        prop_assert_eq!(g.mul(g.identity(), a), a);
        prop_assert_eq!(g.mul(a, g.inv(a)), g.identity());
        prop_assert_eq!(g.class_of(g.conjugate(a, b)), g.class_of(a));
    }

    #[test]
    fn weak_distribution_is_normalised(gi in 0usize..8, k in 0usize..1000) {
        let d = pick(zoo(), gi);
        let invs = involutions(&d.group);
        let m = *pick(&invs, k);
        let h = d.group.subgroup(&[d.group.identity(), m]).unwrap();
        let dist = weak_distribution(&d.table, &h).unwrap();
        prop_assert!((dist.total() - 1.0).abs() < 1e-12);
        prop_assert!(dist.probabilities.iter().all(|&p| p >= 0.0));
    }

    #[test]
    fn weak_l1_factorises(gi in 0usize..8, k in 0usize..1000, n in 1u32..40) {
        let d = pick(zoo(), gi);
        let invs = involutions(&d.group);
        let m = *pick(&invs, k);
        let t = weak_l1_base(&d.table, m);
        let direct = exact_weak_l1_power(&d.table, m, n);
        prop_assert!((direct - t.powi(n as i32)).abs() <= 1e-12);
    }

    #[test]
    fn frames_are_complete(policy in 0usize..4, d in 1usize..9, seed in any::<u64>()) {
        let policies = [
            FramePolicy::Standard,
            FramePolicy::RandomUnitary,
            FramePolicy::UnionOfBases { bases: 2 },
            FramePolicy::RandomOvercomplete { ratio: 2 },
        ];
        let mut rng = ChaCha20Rng::seed_from_u64(seed);
        let frame = policies[policy].build(&mut rng, d).unwrap();
        prop_assert!(frame.completeness_error() < 1e-9);
    }

    #[test]
    fn class_average_matches_closed_form(gi in 0usize..8, irrep in 0usize..100, k in 0usize..1000, seed in any::<u64>()) {
        let d = pick(zoo(), gi);
        let invs = involutions(&d.group);
        let class = d.group.class_of(*pick(&invs, k));
        let irrep = irrep % d.table.num_irreps();
        let checker = ExpVarChecker::new(d, irrep, class).unwrap();
        let mut rng = ChaCha20Rng::seed_from_u64(seed);
        let r = checker.check(&random_unit_vector(&mut rng, checker.dim()));
        prop_assert!(r.holds(1e-9), "{:?}", r);
    }

    #[test]
    fn projection_bound_for_random_subspaces(d in 1usize..6, k in 0usize..36, policy in 0usize..4, seed in any::<u64>()) {
        let policies = [
            FramePolicy::Standard,
            FramePolicy::RandomUnitary,
            FramePolicy::UnionOfBases { bases: 3 },
            FramePolicy::RandomOvercomplete { ratio: 3 },
        ];
        let mut rng = ChaCha20Rng::seed_from_u64(seed);
        let frame = policies[policy].build(&mut rng, d).unwrap();
        let u = random_unitary(&mut rng, d * d);
        let cols = u.columns(0, k % (d * d + 1));
        let p: CMat = &cols * cols.adjoint();
        let r = frame_projection_bound_check(&frame, &p);
        prop_assert!(r.holds, "{:?}", r);
    }

    #[test]
    fn apply_tensor_matches_kron(d1 in 1usize..4, d2 in 1usize..4, d3 in 1usize..4, seed in any::<u64>()) {
        let mut rng = ChaCha20Rng::seed_from_u64(seed);
        let (a, b, c) = (random_unitary(&mut rng, d1), random_unitary(&mut rng, d2), random_unitary(&mut rng, d3));
        let v = random_unit_vector(&mut rng, d1 * d2 * d3);
        let fast = apply_tensor(&[&a, &b, &c], &v);
        let slow = kron(&kron(&a, &b), &c) * &v;
        prop_assert!((fast - slow).norm() < 1e-12);
    }

    #[test]
    fn lambda_mass_respects_binomial_bound(gi in 0usize..8, k in 0usize..1000, n in 1u64..13, eps in 0.1f64..0.5) {
        let d = pick(zoo(), gi);
        let invs = involutions(&d.group);
        let p = profile(d, *pick(&invs, k));
        let r = lambda_mass(&p, n, eps).unwrap();
        prop_assert!(r.log_lambda_mass <= r.log_binomial_bound + 1e-9, "{:?}", r);
        prop_assert!(r.plancherel_lambda_prob <= 1.0);
    }

    #[test]
    fn multiplicity_is_at_most_dimension(gi in 0usize..8, rho in 0usize..100, tau in 0usize..100) {
        let d = pick(zoo(), gi);
        let n = d.table.num_irreps();
        let m = multiplicity_bound_check(&d.table, rho % n, tau % n).unwrap();
        prop_assert!(m.holds);
        if tau % n == d.table.trivial_index() {
            prop_assert_eq!(m.multiplicity, 1);
        }
    }

    #[test]
    fn condition_reports_are_consistent(gi in 0usize..8, k in 0usize..1000) {
        let d = pick(zoo(), gi);
        let invs = involutions(&d.group);
        let p = profile(d, *pick(&invs, k));
        let r = ConditionReport::from_profile(&p, &Tolerances::default());
        if let Some(c) = r.c {
            prop_assert!(c > 1.0);
        }
        if r.condition_holds {
            prop_assert!((r.delta_mass as f64) < r.exp_log_dim.exp());
        }
        if r.mu_central {
            prop_assert_eq!(r.delta_mass, p.order);
        }
    }
}

/// Enumerates `Ĝⁿ` and sums `d²` over tuples with fewer than `s` factors outside Δ.
fn brute_lambda(p: &InvolutionProfile, n: usize, s: usize) -> u128 {
    let delta = p.delta_indices(Tolerances::default().membership);
    (0..n)
        .map(|_| 0..p.irreps.len())
        .multi_cartesian_product()
        .filter(|t| t.iter().filter(|i| !delta.contains(i)).count() < s)
        .map(|t| t.iter().map(|&i| (p.irreps[i].dim * p.irreps[i].dim) as u128).product::<u128>())
        .sum()
}

#[test]
fn lambda_mass_matches_enumeration() {
    let a5 = RepresentationData::new(make_alternating(5).unwrap()).unwrap();
    let p = profile(&a5, a5.group.default_involution().unwrap());
    let r = lambda_mass(&p, 4, 0.25).unwrap();
    assert_eq!(r.s, 1);
    assert_eq!(r.exact_lambda_mass.unwrap(), brute_lambda(&p, 4, 1).to_string());
    for d in zoo().iter().take(6) {
        for m in d.group.involutions().into_iter().take(2) {
            let p = profile(d, m);
            for n in 1..=4usize {
                for eps in [0.1, 0.3, 0.5, 1.0] {
                    let r = lambda_mass(&p, n as u64, eps).unwrap();
                    let brute = brute_lambda(&p, n, r.s as usize);
                    assert_eq!(r.exact_lambda_mass.as_deref(), Some(brute.to_string().as_str()), "{} n={n} ε={eps}", d.group.name());
                }
            }
        }
    }
}

#[test]
fn weak_distribution_on_a_power_matches_tensor_formula() {
    let d = RepresentationData::new(make_symmetric(3).unwrap()).unwrap();
    let g = &d.group;
    let mu = g.default_involution().unwrap();
    let power = hsp_powers::group::direct_power(g, 2).unwrap();
    let table = hsp_powers::repr::character_table(&power).unwrap();
    let m = power_element_id(g.order(), &[mu, mu]);
    let h = power.subgroup(&[power.identity(), m]).unwrap();
    let dist = weak_distribution(&table, &h).unwrap();
    let plancherel = weak_distribution(&table, &power.trivial_subgroup()).unwrap();
    let l1 = dist.l1_distance(&plancherel).unwrap();
    assert!((l1 - exact_weak_l1_power(&d.table, mu, 2)).abs() < 1e-12);
}

#[test]
fn towers_satisfy_sum_of_squares() {
    for k in 1..=4 {
        let w = iterated_wreath(k).unwrap();
        let base = hsp_powers::repr::character_table(w.base()).unwrap();
        let p = w.involution_profile(&base, w.canonical_involution()).unwrap();
        let total: u64 = p.irreps.iter().map(|r| r.dim * r.dim).sum();
        assert_eq!(total, p.order);
    }
}
