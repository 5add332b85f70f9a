//! Rates and bounds for strong sampling on `Gⁿ`: `c`, `γ`, `ε`, `a`, the
//! large-dimension constants `M`, `w`, `α`, `β`, the Λ mass, and the
//! assembled failure and distance bounds.
//!
//! Everything is computed from an [`InvolutionProfile`], so towers whose
//! Cayley tables are never built are handled the same way as small groups.
//! Quantities that can underflow are carried as natural logarithms.

use num_bigint::BigUint;
use num_complex::Complex64;
use rand::distr::weighted::WeightedIndex;
use rand::distr::Distribution;
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::output::{extended_real, fmt_real, CsvTable};
use crate::repr::{character_table, CharacterTable, ConditionReport, InvolutionProfile, Tolerances};

pub const DEFAULT_BETA_FRACTION: f64 = 0.8;
/// Smallest ε accepted as feasible.
pub const MIN_EPSILON: f64 = 1e-6;
/// Largest `n` for which Λ masses are also produced as exact integers.
pub const MAX_EXACT_LAMBDA_N: u64 = 4000;

/// Constants of the large-`n` argument for one base group and involution.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RateReport {
    pub base: String,
    pub order: u64,
    pub mu_id: Option<usize>,
    pub mu_label: String,
    pub delta_mass: u64,
    pub exp_log_dim: f64,
    #[serde(with = "extended_real")]
    pub c: f64,
    /// `Exp log d − ln Σ_Δ d²`: the supremum of admissible γ.
    pub gamma: f64,
    /// The γ used downstream, `gamma / 2`, leaving room for ε.
    pub gamma_work: f64,
    pub epsilon: f64,
    pub a: f64,
    #[serde(rename = "M")]
    pub m: f64,
    pub w: f64,
    pub alpha: f64,
    pub beta: f64,
    pub beta_fraction: f64,
    pub feasible: bool,
}

impl RateReport {
    pub fn delta(&self) -> f64 {
        self.delta_mass as f64 / self.order as f64
    }

    /// Natural log of the left side of the ε-inequality minus the right side.
    pub fn epsilon_slack(&self, epsilon: f64) -> f64 {
        epsilon_inequality_log_gap(self.gamma_work, epsilon, self.delta(), self.order, self.exp_log_dim)
    }
}

/// `ln[e^{γ/2}(e/ε)^ε δ^{1−ε}|G|] − ln[e^{−γ/2} e^{E}]`; negative when the
/// inequality holds.
pub fn epsilon_inequality_log_gap(gamma: f64, epsilon: f64, delta: f64, order: u64, exp_log_dim: f64) -> f64 {
    let lhs = gamma / 2.0 + epsilon * (1.0 - epsilon.ln()) + (1.0 - epsilon) * delta.ln() + (order as f64).ln();
    let rhs = -gamma / 2.0 + exp_log_dim;
    lhs - rhs
}

pub fn compute_rates(profile: &InvolutionProfile, beta_fraction: f64) -> Result<RateReport> {
    if !(beta_fraction > 0.0 && beta_fraction < 1.0) {
        return Err(Error::InvalidArgument(format!("beta_fraction {beta_fraction} not in (0, 1)")));
    }
    let report = ConditionReport::from_profile(profile, &Tolerances::default());
    let m = (profile.max_dim() as f64).ln();
    if m <= 0.0 {
        return Err(Error::ConditionFails(format!("{} has only 1-dimensional irreps", profile.group)));
    }
    if !report.condition_holds {
        return Err(Error::ConditionFails(format!(
            "{}: Σ_Δ d² = {} is not below exp(Exp log d) = {}",
            profile.group,
            report.delta_mass,
            report.exp_log_dim.exp()
        )));
    }
    let gamma = report.gamma;
    let gamma_work = gamma / 2.0;
    let delta = report.delta_fraction();
    let gap = |eps: f64| epsilon_inequality_log_gap(gamma_work, eps, delta, profile.order, report.exp_log_dim);
    let epsilon = largest_feasible_epsilon(gap);
    let feasible = epsilon >= MIN_EPSILON;
    let c = report.c.unwrap_or(f64::INFINITY);
    let a = (gamma_work / 2.0).min(epsilon * c.ln()) / 4.0;
    let e = report.exp_log_dim;
    let w = e / m;
    let beta = beta_fraction * e;
    let alpha = w.sqrt() - beta / (m * w.sqrt());
    Ok(RateReport {
        base: profile.group.clone(),
        order: profile.order,
        mu_id: profile.mu_id,
        mu_label: profile.mu_label.clone(),
        delta_mass: report.delta_mass,
        exp_log_dim: e,
        c,
        gamma,
        gamma_work,
        epsilon,
        a,
        m,
        w,
        alpha,
        beta,
        beta_fraction,
        feasible,
    })
}

/// Largest ε in `(0, ½]` with `gap(ε) < 0`, assuming `gap` increases on
/// that interval; zero when none exists.
fn largest_feasible_epsilon(gap: impl Fn(f64) -> f64) -> f64 {
    if gap(0.5) < 0.0 {
        return 0.5;
    }
    if gap(MIN_EPSILON) >= 0.0 {
        return 0.0;
    }
    let (mut lo, mut hi) = (MIN_EPSILON, 0.5);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if gap(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

pub fn compute_rates_for(group: &FiniteGroup, mu: usize, beta_fraction: f64) -> Result<RateReport> {
    let table = character_table(group)?;
    compute_rates(&InvolutionProfile::from_table(group, &table, mu)?, beta_fraction)
}

/// Natural log of a big integer.
pub fn big_ln(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits == 0 {
        return f64::NEG_INFINITY;
    }
    let shift = bits.saturating_sub(60);
    let top = (x >> shift).iter_u64_digits().next().unwrap_or(0);
    (top as f64).ln() + shift as f64 * std::f64::consts::LN_2
}

fn log_sum_exp(terms: impl Iterator<Item = f64>) -> f64 {
    let terms: Vec<f64> = terms.collect();
    let max = terms.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if max == f64::NEG_INFINITY {
        return max;
    }
    max + terms.iter().map(|t| (t - max).exp()).sum::<f64>().ln()
}

fn ln_or_neg_inf(x: u64) -> f64 {
    if x == 0 { f64::NEG_INFINITY } else { (x as f64).ln() }
}

/// `n·x` with `0·(−∞) = 0`.
fn times(n: u64, log_x: f64) -> f64 {
    if n == 0 { 0.0 } else { n as f64 * log_x }
}

fn ln_binomials(n: u64) -> Vec<f64> {
    let mut out = Vec::with_capacity(n as usize + 1);
    let mut acc = 0.0;
    out.push(0.0);
    for j in 0..n {
        acc += ((n - j) as f64).ln() - ((j + 1) as f64).ln();
        out.push(acc);
    }
    out
}

/// Λ: irreps of `Gⁿ` with fewer than `s = ⌈εn⌉` factors outside Δ.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LambdaReport {
    pub n: u64,
    pub epsilon: f64,
    pub s: u64,
    /// `Σ_{τ⃗∈Λ} d_τ⃗²`, decimal, when `n` is small enough.
    pub exact_lambda_mass: Option<String>,
    #[serde(with = "extended_real")]
    pub log_lambda_mass: f64,
    /// `Σ_{τ⃗∈Λ} d_τ⃗`, decimal, when `n` is small enough.
    pub exact_lambda_dimension_sum: Option<String>,
    #[serde(with = "extended_real")]
    pub log_lambda_dimension_sum: f64,
    /// `C(n, s) |G|^s (Σ_Δ d²)^{n−s}`.
    #[serde(with = "extended_real")]
    pub log_binomial_bound: f64,
    pub plancherel_lambda_prob: f64,
    #[serde(with = "extended_real")]
    pub log_plancherel_lambda_prob: f64,
}

pub fn lambda_mass(profile: &InvolutionProfile, n: u64, epsilon: f64) -> Result<LambdaReport> {
    if n == 0 || !(epsilon > 0.0 && epsilon <= 1.0) {
        return Err(Error::InvalidArgument(format!("need n ≥ 1 and ε ∈ (0, 1], got {n}, {epsilon}")));
    }
    let tol = Tolerances::default().membership;
    let delta = profile.delta_indices(tol);
    let (mut mass_in, mut dims_in, mut dims_out) = (0u64, 0u64, 0u64);
    for (i, r) in profile.irreps.iter().enumerate() {
        if delta.contains(&i) {
            mass_in += r.dim * r.dim;
            dims_in += r.dim;
        } else {
            dims_out += r.dim;
        }
    }
    let order = profile.order;
    let mass_out = order - mass_in;
    let s = ((epsilon * n as f64) - 1e-12).ceil().max(0.0) as u64;
    let lnb = ln_binomials(n);
    let log_sum = |outside: u64, inside: u64| {
        log_sum_exp((0..s.min(n + 1)).map(|j| {
            lnb[j as usize] + times(j, ln_or_neg_inf(outside)) + times(n - j, ln_or_neg_inf(inside))
        }))
    };
    let log_lambda_mass = log_sum(mass_out, mass_in);
    let log_lambda_dimension_sum = log_sum(dims_out, dims_in);
    let log_binomial_bound = lnb[s.min(n) as usize] + times(s, (order as f64).ln()) + times(n - s.min(n), ln_or_neg_inf(mass_in));

    let exact = |outside: u64, inside: u64| -> BigUint {
        let mut total = BigUint::from(0u32);
        let mut binom = BigUint::from(1u32);
        for j in 0..s.min(n + 1) {
            total += &binom * BigUint::from(outside).pow(j as u32) * BigUint::from(inside).pow((n - j) as u32);
            binom = binom * BigUint::from(n - j) / BigUint::from(j + 1);
        }
        total
    };
    let (exact_lambda_mass, exact_lambda_dimension_sum, log_prob) = if n <= MAX_EXACT_LAMBDA_N {
        let mass = exact(mass_out, mass_in);
        let dims = exact(dims_out, dims_in);
        let log_prob = big_ln(&mass) - n as f64 * (order as f64).ln();
        (Some(mass.to_string()), Some(dims.to_string()), log_prob)
    } else {
        (None, None, log_lambda_mass - n as f64 * (order as f64).ln())
    };
    Ok(LambdaReport {
        n,
        epsilon,
        s,
        exact_lambda_mass,
        log_lambda_mass,
        exact_lambda_dimension_sum,
        log_lambda_dimension_sum,
        log_binomial_bound,
        plancherel_lambda_prob: log_prob.exp().min(1.0),
        log_plancherel_lambda_prob: log_prob,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NonLambdaCheck {
    pub n: u64,
    pub epsilon: f64,
    pub s: u64,
    pub checked: u64,
    /// Largest `|χ_σ⃗(μ)/d_σ⃗|` over `σ⃗ ∉ Λ`.
    pub max_normalized: f64,
    pub bound: f64,
    /// `max_normalized / bound` (zero when the bound is zero and attained).
    pub max_ratio: f64,
    pub holds: bool,
}

/// Enumerates factor-type multisets of `σ⃗ ∉ Λ` and compares
/// `Π|χ(μ)/d|` with `c^{−εn}`.
pub fn nonlambda_character_bound_check(profile: &InvolutionProfile, n: u64, epsilon: f64, c: f64) -> Result<NonLambdaCheck> {
    if n == 0 || n > 12 {
        return Err(Error::InvalidArgument("enumeration supports 1 ≤ n ≤ 12".into()));
    }
    let tol = Tolerances::default().membership;
    let delta = profile.delta_indices(tol);
    let s = ((epsilon * n as f64) - 1e-12).ceil().max(0.0) as u64;
    let bound = if c.is_infinite() { 0.0 } else { c.powf(-epsilon * n as f64) };
    let mut checked = 0u64;
    let mut max_normalized: f64 = 0.0;
    let k = profile.irreps.len();
    for combo in itertools::Itertools::combinations_with_replacement(0..k, n as usize) {
        let outside = combo.iter().filter(|i| !delta.contains(i)).count() as u64;
        if outside < s {
            continue;
        }
        checked += 1;
        let value: f64 = combo.iter().map(|&i| profile.irreps[i].normalized()).product();
        max_normalized = max_normalized.max(value);
    }
    let max_ratio = if bound > 0.0 {
        max_normalized / bound
    } else if max_normalized <= tol {
        0.0
    } else {
        f64::INFINITY
    };
    Ok(NonLambdaCheck {
        n,
        epsilon,
        s,
        checked,
        max_normalized,
        bound,
        max_ratio,
        holds: max_ratio <= 1.0 + 1e-9,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultiplicityCheck {
    pub rho: String,
    pub tau: String,
    pub multiplicity: u64,
    pub dim_tau: u64,
    pub holds: bool,
}

/// Multiplicity of `τ` in `ρ ⊗ ρ*`, from class sums.
pub fn multiplicity_bound_check(table: &CharacterTable, rho: usize, tau: usize) -> Result<MultiplicityCheck> {
    let sizes = table.class_sizes();
    let sum: Complex64 = (0..sizes.len())
        .map(|k| table.value(tau, k).conj() * table.value(rho, k).norm_sqr() * sizes[k] as f64)
        .sum();
    let z = sum / table.order() as f64;
    let r = z.re.round();
    if (z.re - r).abs() > 1e-6 || z.im.abs() > 1e-6 || r < 0.0 {
        return Err(Error::CorruptedCharacter(format!("multiplicity {z}")));
    }
    let multiplicity = r as u64;
    Ok(MultiplicityCheck {
        rho: table.label(rho).to_string(),
        tau: table.label(tau).to_string(),
        multiplicity,
        dim_tau: table.dim(tau) as u64,
        holds: multiplicity <= table.dim(tau) as u64,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DimensionTail {
    pub group: String,
    pub n: u64,
    pub beta: f64,
    pub alpha: f64,
    pub trials: u64,
    pub seed: u64,
    pub successes: u64,
    pub empirical: f64,
    pub stderr: f64,
    /// `1 − 2k e^{−α²n/4}`.
    pub bound: f64,
    pub holds: bool,
}

/// Monte Carlo estimate of `Pr[d_ρ⃗ > e^{βn}]` for `ρ⃗` Plancherel on `Gⁿ`,
/// compared with the large-dimension bound (with slack of three standard
/// errors).
pub fn plancherel_dimension_mc(
    profile: &InvolutionProfile,
    rates: &RateReport,
    n: u64,
    trials: u64,
    k: u64,
    seed: u64,
) -> Result<DimensionTail> {
    if n == 0 || trials == 0 {
        return Err(Error::InvalidArgument("n and trials must be positive".into()));
    }
    if rates.m <= 0.0 || rates.exp_log_dim <= 0.0 {
        return Err(Error::InvalidArgument("Exp log d = 0: no admissible β".into()));
    }
    let logs: Vec<f64> = profile.irreps.iter().map(|r| (r.dim as f64).ln()).collect();
    let weights = WeightedIndex::new(profile.irreps.iter().map(|r| (r.dim * r.dim) as f64))
        .map_err(|e| Error::InvalidArgument(e.to_string()))?;
    let threshold = rates.beta * n as f64;
    let successes: u64 = (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = ChaCha20Rng::seed_from_u64(seed);
            rng.set_stream(t);
            let total: f64 = (0..n).map(|_| logs[weights.sample(&mut rng)]).sum();
            u64::from(total > threshold)
        })
        .sum();
    let p = successes as f64 / trials as f64;
    let stderr = (p * (1.0 - p) / trials as f64).sqrt();
    let bound = 1.0 - 2.0 * k as f64 * (-rates.alpha * rates.alpha * n as f64 / 4.0).exp();
    Ok(DimensionTail {
        group: profile.group.clone(),
        n,
        beta: rates.beta,
        alpha: rates.alpha,
        trials,
        seed,
        successes,
        empirical: p,
        stderr,
        bound,
        holds: p >= bound - 3.0 * stderr,
    })
}

pub fn dimension_tail_csv(rows: &[DimensionTail]) -> CsvTable {
    let mut t = CsvTable::new(["n", "bound", "empirical", "stderr"]);
    for r in rows {
        t.push(vec![r.n.to_string(), fmt_real(r.bound), fmt_real(r.empirical), fmt_real(r.stderr)]);
    }
    t
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TheoremBounds {
    pub n: u64,
    /// `2e^{−γn/2} + 10e^{−an}`.
    pub tv_bound: f64,
    /// `e^{−an} + 4e^{−α²n/4}`.
    pub failure_bound: f64,
    /// `2 C(n, s) δ^{n−s}`, the chance weak sampling lands in Λ.
    pub lambda_failure_bound: f64,
}

pub fn theorem_bound_assembly(rates: &RateReport, n: u64) -> Result<TheoremBounds> {
    if !rates.feasible {
        return Err(Error::ConditionFails(format!("no feasible ε for {}", rates.base)));
    }
    let nf = n as f64;
    let s = ((rates.epsilon * nf) - 1e-12).ceil().max(0.0) as u64;
    let ln_binom = ln_binomials(n)[s.min(n) as usize];
    Ok(TheoremBounds {
        n,
        tv_bound: 2.0 * (-rates.gamma_work * nf / 2.0).exp() + 10.0 * (-rates.a * nf).exp(),
        failure_bound: (-rates.a * nf).exp() + 4.0 * (-rates.alpha * rates.alpha * nf / 4.0).exp(),
        lambda_failure_bound: 2.0 * (ln_binom + (n - s.min(n)) as f64 * rates.delta().ln()).exp(),
    })
}

/// First `n` with `tv_bound < 1`.
pub fn tv_threshold_n(rates: &RateReport) -> Result<u64> {
    let below = |n: u64| theorem_bound_assembly(rates, n).map(|b| b.tv_bound < 1.0);
    let mut hi = 1u64;
    while !below(hi)? {
        hi = hi.checked_mul(2).ok_or_else(|| Error::InvalidArgument("threshold overflow".into()))?;
    }
    let mut lo = hi / 2;
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if below(mid)? { hi = mid } else { lo = mid }
    }
    Ok(if below(lo.max(1))? { lo.max(1) } else { hi })
}

/// `ln(e^{γn/2} · [(e/ε)^ε δ^{1−ε}|G|]^n)` and
/// `ln([(e/ε)^ε e^{γ/2} δ^{1−ε}|G|]^n)`, evaluated separately.
pub fn bad_vector_count_logs(rates: &RateReport, n: u64) -> (f64, f64) {
    let (g, e, d, nf) = (rates.gamma_work, rates.epsilon, rates.delta(), n as f64);
    let dim_l = nf * (e * (1.0 - e.ln()) + (1.0 - e) * d.ln() + (rates.order as f64).ln());
    let lhs = g * nf / 2.0 + dim_l;
    let base = (std::f64::consts::E / e).powf(e) * (g / 2.0).exp() * d.powf(1.0 - e) * rates.order as f64;
    (lhs, nf * base.ln())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{make_alternating, make_cyclic, make_symmetric};

    fn a5_profile() -> InvolutionProfile {
        let g = make_alternating(5).unwrap();
        let t = character_table(&g).unwrap();
        InvolutionProfile::from_table(&g, &t, g.default_involution().unwrap()).unwrap()
    }

    #[test]
    fn a5_rates() {
        let r = compute_rates(&a5_profile(), DEFAULT_BETA_FRACTION).unwrap();
        assert!((r.gamma - 1.3699).abs() < 1e-4);
        assert!((r.c - 3.0).abs() < 1e-9);
        assert!(r.feasible && r.epsilon > 0.0 && r.epsilon <= 0.5);
        assert!(r.epsilon_slack(r.epsilon) < 0.0);
        assert!(r.epsilon >= 0.5 || r.epsilon_slack((r.epsilon * 1.001).min(0.5)) >= 0.0);
        assert!((r.a - (r.gamma_work / 2.0).min(r.epsilon * r.c.ln()) / 4.0).abs() < 1e-15);
        assert!(r.alpha > 0.0 && r.beta < r.m * r.w);
        assert!((r.alpha - 0.1844).abs() < 1e-3);
    }

    #[test]
    fn failing_and_abelian_groups_are_rejected() {
        let s3 = make_symmetric(3).unwrap();
        assert!(matches!(
            compute_rates_for(&s3, s3.default_involution().unwrap(), 0.8),
            Err(Error::ConditionFails(_))
        ));
        let z2 = make_cyclic(2).unwrap();
        assert!(compute_rates_for(&z2, 1, 0.8).is_err());
    }

    #[test]
    fn alpha_vanishes_as_beta_approaches_expectation() {
        let r = compute_rates(&a5_profile(), 1.0 - 1e-9).unwrap();
        assert!(r.alpha.abs() < 1e-8);
    }

    #[test]
    fn lambda_small_case() {
        let p = a5_profile();
        let l = lambda_mass(&p, 4, 0.25).unwrap();
        assert_eq!(l.s, 1);
        assert_eq!(l.exact_lambda_mass.as_deref(), Some("1"));
        assert!((l.plancherel_lambda_prob - 60f64.powi(-4)).abs() < 1e-20);
        let all = lambda_mass(&p, 3, 1.0).unwrap();
        let want = 1.0 - (59.0f64 / 60.0).powi(3);
        assert!((all.plancherel_lambda_prob - want).abs() < 1e-12);
    }

    #[test]
    fn big_ln_matches_f64() {
        let x = BigUint::from(3u32).pow(200);
        assert!((big_ln(&x) - 200.0 * 3f64.ln()).abs() < 1e-9);
        assert!((big_ln(&BigUint::from(7u32)) - 7f64.ln()).abs() < 1e-15);
    }

    #[test]
    fn multiplicities() {
        let s3 = make_symmetric(3).unwrap();
        let t = character_table(&s3).unwrap();
        let m = multiplicity_bound_check(&t, 2, 2).unwrap();
        assert_eq!((m.multiplicity, m.dim_tau), (1, 2));
        assert_eq!(multiplicity_bound_check(&t, 2, 0).unwrap().multiplicity, 1);
    }

    #[test]
    fn nonlambda_a5() {
        let p = a5_profile();
        let r = nonlambda_character_bound_check(&p, 3, 1.0, 3.0).unwrap();
        assert!(r.holds);
        assert!((r.max_normalized - 1.0 / 27.0).abs() < 1e-12);
        assert!((r.max_ratio - 1.0).abs() < 1e-9);
    }

    #[test]
    fn theorem_bounds_decrease() {
        let r = compute_rates(&a5_profile(), 0.8).unwrap();
        let mut prev = theorem_bound_assembly(&r, 1).unwrap();
        for n in 2..=1000 {
            let b = theorem_bound_assembly(&r, n).unwrap();
            assert!(b.tv_bound < prev.tv_bound && b.failure_bound < prev.failure_bound);
            assert!(b.tv_bound > 0.0 || n > 500);
            prev = b;
        }
        let n0 = tv_threshold_n(&r).unwrap();
        assert!(theorem_bound_assembly(&r, n0).unwrap().tv_bound < 1.0);
        assert!(n0 == 1 || theorem_bound_assembly(&r, n0 - 1).unwrap().tv_bound >= 1.0);
        let (lhs, rhs) = bad_vector_count_logs(&r, 37);
        assert!((lhs - rhs).abs() < 1e-9 * lhs.abs().max(1.0));
    }

    #[test]
    fn tail_small_n() {
        let p = a5_profile();
        let mut r = compute_rates(&p, 0.8).unwrap();
        r.beta = 1e-9;
        let t = plancherel_dimension_mc(&p, &r, 1, 20000, 2, 1).unwrap();
        assert!((t.empirical - 59.0 / 60.0).abs() < 4.0 * (59.0f64 / 3600.0 / 20000.0).sqrt());
    }
}
