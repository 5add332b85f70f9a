//! The Δ-set of an involution and the base-group condition
//! `Σ_{τ∈Δ} d_τ² < exp(Exp_τ log d_τ)`.
//!
//! Everything here only needs, per irrep, its dimension and its character
//! value at the chosen involution μ. That data is an [`InvolutionProfile`],
//! which can come from a generic character table or from the closed-form
//! characters of a wreath product (whose Cayley table may be too large to
//! materialise).

use num_complex::Complex64;
use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::output::extended_real_opt;
use crate::repr::character::{character_table, CharacterTable, PlancherelDistribution, Tolerances};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ProfileIrrep {
    pub label: String,
    pub dim: u64,
    #[serde(with = "crate::output::complex_pair")]
    pub chi_mu: Complex64,
}

impl ProfileIrrep {
    pub fn normalized(&self) -> f64 {
        self.chi_mu.norm() / self.dim as f64
    }
}

/// Dimensions and character values at μ for every irrep of a group.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct InvolutionProfile {
    pub group: String,
    pub order: u64,
    pub mu_id: Option<usize>,
    pub mu_label: String,
    pub irreps: Vec<ProfileIrrep>,
}

impl InvolutionProfile {
    pub fn from_table(group: &FiniteGroup, table: &CharacterTable, mu: usize) -> Result<Self> {
        if !group.is_involution(mu) {
            return Err(Error::NotAnInvolution(mu));
        }
        Ok(InvolutionProfile {
            group: group.name().to_string(),
            order: group.order() as u64,
            mu_id: Some(mu),
            mu_label: mu.to_string(),
            irreps: (0..table.num_irreps())
                .map(|i| ProfileIrrep {
                    label: table.label(i).to_string(),
                    dim: table.dim(i) as u64,
                    chi_mu: table.character_at(i, mu),
                })
                .collect(),
        })
    }

    pub fn dims(&self) -> Vec<u64> {
        self.irreps.iter().map(|r| r.dim).collect()
    }

    pub fn plancherel(&self) -> PlancherelDistribution {
        PlancherelDistribution::from_dims(self.order, &self.dims())
    }

    pub fn max_dim(&self) -> u64 {
        self.irreps.iter().map(|r| r.dim).max().unwrap_or(1)
    }

    /// Indices of irreps with `|χ_τ(μ)/d_τ| = 1` within tolerance.
    pub fn delta_indices(&self, tol: f64) -> Vec<usize> {
        self.irreps
            .iter()
            .enumerate()
            .filter(|(_, r)| (r.normalized() - 1.0).abs() <= tol)
            .map(|(i, _)| i)
            .collect()
    }

    /// `μ ∈ Z(G)` iff every normalized character has modulus one.
    pub fn mu_central(&self, tol: f64) -> bool {
        self.delta_indices(tol).len() == self.irreps.len()
    }

    /// Largest `|χ_τ(μ)/d_τ|` over irreps outside Δ, `None` if Δ = Ĝ.
    pub fn max_normalized_outside_delta(&self, tol: f64) -> Option<f64> {
        let delta = self.delta_indices(tol);
        self.irreps
            .iter()
            .enumerate()
            .filter(|(i, _)| !delta.contains(i))
            .map(|(_, r)| r.normalized())
            .fold(None, |acc: Option<f64>, x| Some(acc.map_or(x, |a| a.max(x))))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConditionReport {
    pub group: String,
    pub order: u64,
    pub mu_id: Option<usize>,
    pub mu_label: String,
    pub mu_central: bool,
    pub delta_set: Vec<String>,
    pub delta_mass: u64,
    /// `δ = delta_mass / |G|` as a reduced fraction `[numerator, denominator]`.
    pub delta_fraction: [u64; 2],
    pub exp_log_dim: f64,
    pub max_dim: u64,
    /// `(max_{τ∉Δ} |χ_τ(μ)/d_τ|)⁻¹`; infinite when every such character
    /// vanishes, absent when Δ = Ĝ.
    #[serde(with = "extended_real_opt")]
    pub c: Option<f64>,
    /// `Exp log d − ln(delta_mass)`, the supremum of admissible γ.
    pub gamma: f64,
    pub condition_holds: bool,
    /// Set when the two sides agree within tolerance; such cases count as
    /// failures.
    pub borderline: bool,
}

impl ConditionReport {
    pub fn from_profile(profile: &InvolutionProfile, tol: &Tolerances) -> Self {
        let delta = profile.delta_indices(tol.membership);
        let delta_mass: u64 = delta.iter().map(|&i| profile.irreps[i].dim.pow(2)).sum();
        let g = delta_mass.gcd(&profile.order);
        let exp_log_dim = profile.plancherel().expected_log_dim();
        let gamma = exp_log_dim - (delta_mass as f64).ln();
        let borderline = gamma.abs() <= tol.membership;
        let c = profile
            .max_normalized_outside_delta(tol.membership)
            .map(|m| if m > tol.membership { 1.0 / m } else { f64::INFINITY });
        ConditionReport {
            group: profile.group.clone(),
            order: profile.order,
            mu_id: profile.mu_id,
            mu_label: profile.mu_label.clone(),
            mu_central: delta.len() == profile.irreps.len(),
            delta_set: delta.iter().map(|&i| profile.irreps[i].label.clone()).collect(),
            delta_mass,
            delta_fraction: [delta_mass / g, profile.order / g],
            exp_log_dim,
            max_dim: profile.max_dim(),
            c,
            gamma,
            condition_holds: gamma > tol.membership && delta.len() < profile.irreps.len(),
            borderline,
        }
    }

    pub fn delta_fraction(&self) -> f64 {
        self.delta_fraction[0] as f64 / self.delta_fraction[1] as f64
    }
}

/// Δ-set (as table row indices) of the involution `mu`.
pub fn delta_set(group: &FiniteGroup, table: &CharacterTable, mu: usize) -> Result<Vec<usize>> {
    let profile = InvolutionProfile::from_table(group, table, mu)?;
    Ok(profile.delta_indices(Tolerances::default().membership))
}

pub fn condition_check(group: &FiniteGroup, mu: usize) -> Result<ConditionReport> {
    let table = character_table(group)?;
    condition_check_with_table(group, &table, mu)
}

pub fn condition_check_with_table(
    group: &FiniteGroup,
    table: &CharacterTable,
    mu: usize,
) -> Result<ConditionReport> {
    let profile = InvolutionProfile::from_table(group, table, mu)?;
    Ok(ConditionReport::from_profile(&profile, &Tolerances::default()))
}

/// `g ∈ Z(G)` read off the character table: every normalized character at
/// `g` has modulus one.
pub fn center_criterion(table: &CharacterTable, g: usize) -> bool {
    let tol = Tolerances::default().membership;
    let k = table.class_of(g);
    (0..table.num_irreps()).all(|i| (table.value(i, k).norm() / table.dim(i) as f64 - 1.0).abs() <= tol)
}

/// For a nonabelian simple group: Δ is `{trivial}` for every involution and
/// the condition holds. Errors if the group is not simple and nonabelian.
pub fn verify_simple_delta(group: &FiniteGroup) -> Result<bool> {
    if group.is_abelian() || !group.is_simple() {
        return Err(Error::NotSimple(group.name().to_string()));
    }
    let table = character_table(group)?;
    for class in group.conjugacy_classes() {
        let mu = class.representative;
        if !group.is_involution(mu) {
            continue;
        }
        let report = condition_check_with_table(group, &table, mu)?;
        if report.delta_set != [table.label(table.trivial_index())] || !report.condition_holds {
            return Ok(false);
        }
    }
    Ok(true)
}
