//! `Z₂ ≀ G = Z₂ ⋉ (G × G)` with the flip-flop action, iterated towers
//! `Z₂^{≀k}`, and their irreducible representations.
//!
//! Elements are triples `(x, (a, b))` with product
//! `(x, (a, b)) ∘ (y, (c, d)) = (x + y, (a, b) · x(c, d))`, where `x = 1`
//! swaps the pair. When the group is materialised, `(x, (a, b))` has id
//! `x·|G|² + a·|G| + b`.
//!
//! Irreps come in two kinds. For `ρ ≠ σ`, `θ_{ρ,σ}` is induced from
//! `ρ ⊗ σ` on `G × G`: it acts on two copies of `ρ ⊗ σ`, `(0, (a, b))` as
//! `ρ(a) ⊗ σ(b)` on the first and `ρ(b) ⊗ σ(a)` on the second, and
//! `(1, (1, 1))` swaps them. For `ρ = σ` the induced representation splits
//! into `θ^±_ρ` on `ρ ⊗ ρ`, with `θ^±(x, (a, b)) = (ρ(a) ⊗ ρ(b)) (±S)^x` and
//! `S` the tensor swap.

use std::collections::BTreeMap;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{make_cyclic, dihedral_flip, make_dihedral_with_limits, FiniteGroup, GroupFamily, GroupLimits};
use crate::linalg::{kron, real, CMat, ZERO};
use crate::repr::{
    character_table, match_to_table, unitary_irreps, CharacterTable, InvolutionProfile, MatrixRep,
    ProfileIrrep, Tolerances, UnitaryIrrep,
};

/// Default cap on the order of a wreath group that is handled through its
/// base only (no Cayley table); admits `Z₂^{≀4}`.
pub const DEFAULT_MAX_WREATH_ORDER: u64 = 1 << 15;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WreathLimits {
    pub max_order: u64,
    /// Cap for materialising the Cayley table of the wreath group itself.
    pub table: GroupLimits,
}

impl Default for WreathLimits {
    fn default() -> Self {
        WreathLimits {
            max_order: DEFAULT_MAX_WREATH_ORDER,
            table: GroupLimits::default(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct WreathElement {
    pub x: u8,
    pub a: usize,
    pub b: usize,
}

impl WreathElement {
    pub fn new(x: u8, a: usize, b: usize) -> Self {
        WreathElement { x: x & 1, a, b }
    }
}

impl std::fmt::Display for WreathElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},({},{}))", self.x, self.a, self.b)
    }
}

#[derive(Clone, Debug)]
pub struct WreathGroup {
    name: String,
    base: FiniteGroup,
    materialized: Option<FiniteGroup>,
    canonical_mu: WreathElement,
}

impl WreathGroup {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn base(&self) -> &FiniteGroup {
        &self.base
    }

    pub fn order(&self) -> u64 {
        2 * (self.base.order() as u64).pow(2)
    }

    pub fn identity(&self) -> WreathElement {
        let e = self.base.identity();
        WreathElement::new(0, e, e)
    }

    pub fn multiply(&self, p: WreathElement, q: WreathElement) -> WreathElement {
        let g = &self.base;
        let (c, d) = if p.x == 0 { (q.a, q.b) } else { (q.b, q.a) };
        WreathElement::new(p.x ^ q.x, g.mul(p.a, c), g.mul(p.b, d))
    }

    pub fn inverse(&self, p: WreathElement) -> WreathElement {
        let g = &self.base;
        if p.x == 0 {
            WreathElement::new(0, g.inv(p.a), g.inv(p.b))
        } else {
            WreathElement::new(1, g.inv(p.b), g.inv(p.a))
        }
    }

    pub fn id_of(&self, p: WreathElement) -> usize {
        let n = self.base.order();
        p.x as usize * n * n + p.a * n + p.b
    }

    pub fn element(&self, id: usize) -> WreathElement {
        let n = self.base.order();
        WreathElement::new((id / (n * n)) as u8, (id / n) % n, id % n)
    }

    pub fn elements(&self) -> impl Iterator<Item = WreathElement> + '_ {
        (0..self.order() as usize).map(|id| self.element(id))
    }

    /// The Cayley-table view, present when the order is within the table guard.
    pub fn as_finite_group(&self) -> Option<&FiniteGroup> {
        self.materialized.as_ref()
    }

    /// The default involution: `(1, (1, 1))` for towers,
    /// `(1, (F, F))` for `Z₂ ≀ D_k`.
    pub fn canonical_involution(&self) -> WreathElement {
        self.canonical_mu
    }

    pub fn is_involution(&self, p: WreathElement) -> bool {
        p != self.identity() && self.multiply(p, p) == self.identity()
    }

    /// Brute-force centrality test; iterates over every element.
    pub fn is_central(&self, p: WreathElement) -> bool {
        self.elements().all(|q| self.multiply(p, q) == self.multiply(q, p))
    }

    /// Every irrep label of this wreath product, given the base table.
    pub fn theta_labels(&self, base_table: &CharacterTable) -> Vec<ThetaLabel> {
        theta_labels(base_table)
    }

    pub fn theta_value(&self, base_table: &CharacterTable, label: &ThetaLabel, p: WreathElement) -> Complex64 {
        match label.kind {
            ThetaKind::Induced => theta_character(self, base_table, label.rho, label.sigma, p),
            ThetaKind::SplitPlus => split_character(self, base_table, label.rho, 1.0, p),
            ThetaKind::SplitMinus => split_character(self, base_table, label.rho, -1.0, p),
        }
    }

    /// Dimensions and characters at `mu` of every irrep, computed from the
    /// base table alone.
    pub fn involution_profile(&self, base_table: &CharacterTable, mu: WreathElement) -> Result<InvolutionProfile> {
        if !self.is_involution(mu) {
            return Err(Error::InvalidArgument(format!("{mu} is not an involution")));
        }
        let irreps = theta_labels(base_table)
            .into_iter()
            .map(|l| ProfileIrrep {
                label: l.name(base_table),
                dim: l.dim(base_table),
                chi_mu: self.theta_value(base_table, &l, mu),
            })
            .collect();
        Ok(InvolutionProfile {
            group: self.name.clone(),
            order: self.order(),
            mu_id: self.materialized.as_ref().map(|_| self.id_of(mu)),
            mu_label: mu.to_string(),
            irreps,
        })
    }

    /// Character table of the materialised group assembled from the θ
    /// characters (rows validated like any other table).
    pub fn theta_character_table(&self, base_table: &CharacterTable) -> Result<CharacterTable> {
        let group = self.require_materialized()?;
        let rows = theta_labels(base_table)
            .iter()
            .map(|l| {
                let values = group
                    .conjugacy_classes()
                    .iter()
                    .map(|c| self.theta_value(base_table, l, self.element(c.representative)))
                    .collect();
                (l.dim(base_table) as usize, values)
            })
            .collect();
        CharacterTable::from_rows(group, rows, &Tolerances::default())
    }

    /// Unitary θ matrices for every irrep, matched to `table` rows.
    pub fn unitary_irreps(&self, base_table: &CharacterTable, table: &CharacterTable) -> Result<Vec<UnitaryIrrep>> {
        let base_irreps = unitary_irreps(&self.base, base_table)?;
        let mut reps = Vec::new();
        for l in theta_labels(base_table) {
            reps.push(match l.kind {
                ThetaKind::Induced => induced_theta(self, &base_irreps[l.rho], &base_irreps[l.sigma])?,
                ThetaKind::SplitPlus => split_theta(self, &base_irreps[l.rho])?.0,
                ThetaKind::SplitMinus => split_theta(self, &base_irreps[l.rho])?.1,
            });
        }
        match_to_table(table, reps, &Tolerances::default())
    }

    fn require_materialized(&self) -> Result<&FiniteGroup> {
        self.materialized.as_ref().ok_or(Error::GuardExceeded {
            order: self.order(),
            limit: GroupLimits::default().max_order,
        })
    }
}

pub fn wreath_z2(base: &FiniteGroup) -> Result<WreathGroup> {
    wreath_z2_with_limits(base, &WreathLimits::default())
}

pub fn wreath_z2_with_limits(base: &FiniteGroup, limits: &WreathLimits) -> Result<WreathGroup> {
    let name = format!("Z2wr({})", base.name());
    build_wreath(name, base.clone(), None, limits)
}

fn build_wreath(
    name: String,
    base: FiniteGroup,
    mu: Option<WreathElement>,
    limits: &WreathLimits,
) -> Result<WreathGroup> {
    let order = 2 * (base.order() as u64).pow(2);
    if order > limits.max_order {
        return Err(Error::GuardExceeded {
            order,
            limit: limits.max_order,
        });
    }
    let e = base.identity();
    let mut w = WreathGroup {
        name,
        base,
        materialized: None,
        canonical_mu: mu.unwrap_or(WreathElement::new(1, e, e)),
    };
    if limits.table.check(order).is_ok() {
        let n = order as usize;
        let mut table = Vec::with_capacity(n * n);
        for p in 0..n {
            let pe = w.element(p);
            for q in 0..n {
                table.push(w.id_of(w.multiply(pe, w.element(q))) as u32);
            }
        }
        let identity = w.id_of(w.identity());
        w.materialized = Some(FiniteGroup::from_trusted_table(
            w.name.clone(),
            n,
            table,
            identity,
            GroupFamily::Custom,
        ));
    }
    Ok(w)
}

/// `Z₂ ≀ D_k` with canonical involution `(1, (F, F))`.
pub fn wreath_dihedral(k: usize) -> Result<WreathGroup> {
    wreath_dihedral_with_limits(k, &WreathLimits::default())
}

pub fn wreath_dihedral_with_limits(k: usize, limits: &WreathLimits) -> Result<WreathGroup> {
    let dk = make_dihedral_with_limits(k, &limits.table)?;
    let f = dihedral_flip(k);
    build_wreath(format!("Z2wrD{k}"), dk, Some(WreathElement::new(1, f, f)), limits)
}

/// `Z₂^{≀k}`, with `Z₂^{≀1} = Z₂ ≀ 1 ≅ Z₂`. Order `2^(2^k − 1)`.
pub fn iterated_wreath(k: usize) -> Result<WreathGroup> {
    iterated_wreath_with_limits(k, &WreathLimits::default())
}

pub fn iterated_wreath_with_limits(k: usize, limits: &WreathLimits) -> Result<WreathGroup> {
    if k == 0 {
        return Err(Error::InvalidArgument("tower height must be ≥ 1".into()));
    }
    let exponent = (1u64 << k.min(63)) - 1;
    if k >= 63 || exponent >= 64 || (1u64 << exponent) > limits.max_order {
        return Err(Error::GuardExceeded {
            order: if exponent < 64 { 1u64 << exponent } else { u64::MAX },
            limit: limits.max_order,
        });
    }
    let mut base = make_cyclic(1)?;
    for level in 1..=k {
        let w = build_wreath(format!("Z2wr{level}"), base, None, limits)?;
        if level == k {
            return Ok(w);
        }
        base = w
            .materialized
            .ok_or(Error::GuardExceeded {
                order: 1u64 << ((1u64 << level) - 1),
                limit: limits.table.max_order,
            })?;
    }
    unreachable!("loop returns at level k")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ThetaKind {
    Induced,
    SplitPlus,
    SplitMinus,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ThetaLabel {
    pub kind: ThetaKind,
    pub rho: usize,
    pub sigma: usize,
}

impl ThetaLabel {
    pub fn dim(&self, base: &CharacterTable) -> u64 {
        let (dr, ds) = (base.dim(self.rho) as u64, base.dim(self.sigma) as u64);
        match self.kind {
            ThetaKind::Induced => 2 * dr * ds,
            _ => dr * dr,
        }
    }

    pub fn name(&self, base: &CharacterTable) -> String {
        match self.kind {
            ThetaKind::Induced => format!("theta({},{})", base.label(self.rho), base.label(self.sigma)),
            ThetaKind::SplitPlus => format!("theta+({})", base.label(self.rho)),
            ThetaKind::SplitMinus => format!("theta-({})", base.label(self.rho)),
        }
    }
}

/// Induced `θ_{ρ,σ}` for `ρ < σ`, then `θ^±_ρ` for every `ρ`.
pub fn theta_labels(base: &CharacterTable) -> Vec<ThetaLabel> {
    let r = base.num_irreps();
    let mut out = Vec::new();
    for rho in 0..r {
        for sigma in rho + 1..r {
            out.push(ThetaLabel {
                kind: ThetaKind::Induced,
                rho,
                sigma,
            });
        }
    }
    for rho in 0..r {
        for kind in [ThetaKind::SplitPlus, ThetaKind::SplitMinus] {
            out.push(ThetaLabel { kind, rho, sigma: rho });
        }
    }
    out
}

/// Character of the induced `θ_{ρ,σ}` (reducible when `ρ = σ`):
/// zero off `G × G`, `χ_ρ(a)χ_σ(b) + χ_ρ(b)χ_σ(a)` on it.
pub fn theta_character(
    wreath: &WreathGroup,
    base_table: &CharacterTable,
    rho: usize,
    sigma: usize,
    p: WreathElement,
) -> Complex64 {
    let _ = wreath;
    if p.x == 1 {
        return ZERO;
    }
    let c = |i: usize, g: usize| base_table.character_at(i, g);
    c(rho, p.a) * c(sigma, p.b) + c(rho, p.b) * c(sigma, p.a)
}

/// Character of `θ^±_ρ`: `χ_ρ(a)χ_ρ(b)` on `G × G`, `±χ_ρ(ab)` off it.
pub fn split_character(
    wreath: &WreathGroup,
    base_table: &CharacterTable,
    rho: usize,
    sign: f64,
    p: WreathElement,
) -> Complex64 {
    if p.x == 0 {
        base_table.character_at(rho, p.a) * base_table.character_at(rho, p.b)
    } else {
        base_table.character_at(rho, wreath.base.mul(p.a, p.b)) * sign
    }
}

/// `⟨θ_{ρ₁,σ₁}, θ_{ρ₂,σ₂}⟩ = ⟨ρ₁,ρ₂⟩⟨σ₁,σ₂⟩ + ⟨ρ₁,σ₂⟩⟨σ₁,ρ₂⟩`, with the base
/// inner products taken over the base character table.
pub fn theta_inner_product(base: &CharacterTable, rho1: usize, sigma1: usize, rho2: usize, sigma2: usize) -> Complex64 {
    let row = |i: usize| &base.irreps()[i].values;
    let ip = |i: usize, j: usize| base.inner_product(row(i), row(j));
    ip(rho1, rho2) * ip(sigma1, sigma2) + ip(rho1, sigma2) * ip(sigma1, rho2)
}

/// Block matrices of the induced `θ_{ρ,σ}` on the materialised group.
pub fn induced_theta(wreath: &WreathGroup, rho: &UnitaryIrrep, sigma: &UnitaryIrrep) -> Result<MatrixRep> {
    let group = wreath.require_materialized()?;
    let dim = rho.dim() * sigma.dim();
    let mats = (0..group.order())
        .map(|id| {
            let p = wreath.element(id);
            let first = kron(rho.matrix(p.a), sigma.matrix(p.b));
            let second = kron(rho.matrix(p.b), sigma.matrix(p.a));
            let mut m = CMat::zeros(2 * dim, 2 * dim);
            // θ(0,(a,b)) = diag(first, second); θ(1,(a,b)) = θ(0,(a,b))·swap
            let (r0, r1) = if p.x == 0 { (0, dim) } else { (dim, 0) };
            m.view_mut((0, r0), (dim, dim)).copy_from(&first);
            m.view_mut((dim, r1), (dim, dim)).copy_from(&second);
            m
        })
        .collect();
    Ok(MatrixRep::new(mats))
}

/// `(θ⁺_ρ, θ⁻_ρ)` on `ρ ⊗ ρ`.
pub fn split_theta(wreath: &WreathGroup, rho: &UnitaryIrrep) -> Result<(MatrixRep, MatrixRep)> {
    let group = wreath.require_materialized()?;
    let d = rho.dim();
    let swap = CMat::from_fn(d * d, d * d, |r, c| {
        if r == (c % d) * d + c / d { real(1.0) } else { ZERO }
    });
    let mut plus = Vec::with_capacity(group.order());
    let mut minus = Vec::with_capacity(group.order());
    for id in 0..group.order() {
        let p = wreath.element(id);
        let base = kron(rho.matrix(p.a), rho.matrix(p.b));
        if p.x == 0 {
            plus.push(base.clone());
            minus.push(base);
        } else {
            let m = base * &swap;
            minus.push(-m.clone());
            plus.push(m);
        }
    }
    Ok((MatrixRep::new(plus), MatrixRep::new(minus)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusEntry {
    pub kind: String,
    pub dimension: u64,
    pub count: u64,
}

/// Irreps of `Z₂ ≀ base` grouped by construction kind and dimension.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WreathCensus {
    pub base: String,
    pub order: u64,
    pub entries: Vec<CensusEntry>,
    pub one_dimensional: u64,
    pub total_irreps: u64,
    pub sum_of_squares: u64,
}

impl WreathCensus {
    pub fn count(&self, kind: &str, dimension: u64) -> u64 {
        self.entries
            .iter()
            .find(|e| e.kind == kind && e.dimension == dimension)
            .map_or(0, |e| e.count)
    }
}

pub fn wreath_census(base: &FiniteGroup) -> Result<WreathCensus> {
    let table = character_table(base)?;
    wreath_census_from_table(&table)
}

pub fn wreath_census_from_table(base: &CharacterTable) -> Result<WreathCensus> {
    let mut counts: BTreeMap<(u64, &'static str), u64> = BTreeMap::new();
    for l in theta_labels(base) {
        let kind = if l.kind == ThetaKind::Induced { "induced" } else { "split" };
        *counts.entry((l.dim(base), kind)).or_default() += 1;
    }
    let entries: Vec<CensusEntry> = counts
        .into_iter()
        .map(|((dimension, kind), count)| CensusEntry {
            kind: kind.to_string(),
            dimension,
            count,
        })
        .collect();
    let order = 2 * (base.order() as u64).pow(2);
    let sum_of_squares: u64 = entries.iter().map(|e| e.count * e.dimension * e.dimension).sum();
    if sum_of_squares != order {
        return Err(Error::CharacterTable(format!(
            "census Σd² = {sum_of_squares} ≠ {order}"
        )));
    }
    Ok(WreathCensus {
        base: base.group_name().to_string(),
        order,
        one_dimensional: entries.iter().filter(|e| e.dimension == 1).map(|e| e.count).sum(),
        total_irreps: entries.iter().map(|e| e.count).sum(),
        entries,
        sum_of_squares,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{make_cyclic, make_dihedral};

    #[test]
    fn product_rule() {
        let d3 = make_dihedral(3).unwrap();
        let w = wreath_z2(&d3).unwrap();
        let (a, b, c, d) = (1, 3, 4, 5);
        let p = w.multiply(WreathElement::new(1, a, b), WreathElement::new(0, c, d));
        assert_eq!(p, WreathElement::new(1, d3.mul(a, d), d3.mul(b, c)));
        let q = w.multiply(WreathElement::new(0, a, b), WreathElement::new(0, c, d));
        assert_eq!(q, WreathElement::new(0, d3.mul(a, c), d3.mul(b, d)));
        for e in w.elements() {
            assert_eq!(w.multiply(e, w.inverse(e)), w.identity());
        }
        assert!(w.as_finite_group().unwrap().is_associative());
    }

    #[test]
    fn base_subgroup_has_index_two() {
        let w = wreath_z2(&make_cyclic(3).unwrap()).unwrap();
        let g = w.as_finite_group().unwrap();
        let ids: Vec<usize> = w.elements().filter(|e| e.x == 0).map(|e| w.id_of(e)).collect();
        let sub = g.subgroup(&ids).unwrap();
        assert_eq!(sub.order() * 2, g.order());
    }

    #[test]
    fn z2_wreath_z2_is_d4_like() {
        let w = wreath_z2(&make_cyclic(2).unwrap()).unwrap();
        assert_eq!(w.order(), 8);
        let t = character_table(w.as_finite_group().unwrap()).unwrap();
        let mut dims = t.dims();
        dims.sort();
        assert_eq!(dims, vec![1, 1, 1, 1, 2]);
    }

    #[test]
    fn towers() {
        assert_eq!(iterated_wreath(1).unwrap().order(), 2);
        assert_eq!(iterated_wreath(2).unwrap().order(), 8);
        let w3 = iterated_wreath(3).unwrap();
        assert_eq!(w3.order(), 128);
        assert_eq!(w3.as_finite_group().unwrap().order(), 128);
        let w4 = iterated_wreath(4).unwrap();
        assert_eq!(w4.order(), 1 << 15);
        assert!(w4.as_finite_group().is_none());
        assert!(iterated_wreath(5).is_err());

        for k in 2..=3 {
            let w = iterated_wreath(k).unwrap();
            let mu = w.canonical_involution();
            assert!(w.is_involution(mu));
            assert!(!w.is_central(mu));
        }
    }

    #[test]
    fn theta_inner_products() {
        let t = character_table(&make_dihedral(5).unwrap()).unwrap();
        for r in 0..t.num_irreps() {
            for s in 0..t.num_irreps() {
                let ip = theta_inner_product(&t, r, s, r, s);
                let want = if r == s { 2.0 } else { 1.0 };
                assert!((ip - real(want)).norm() < 1e-10);
                assert!((theta_inner_product(&t, r, s, s, r) - real(want)).norm() < 1e-10);
            }
        }
    }

    #[test]
    fn census_examples() {
        let z2 = wreath_census(&make_cyclic(2).unwrap()).unwrap();
        assert_eq!(z2.count("split", 1), 4);
        assert_eq!(z2.count("induced", 2), 1);
        assert_eq!(z2.total_irreps, 5);

        let d5 = wreath_census(&make_dihedral(5).unwrap()).unwrap();
        assert_eq!(d5.sum_of_squares, 200);
        assert_eq!(d5.count("induced", 8), 1);
    }

    fn sorted_rows(t: &CharacterTable) -> Vec<Vec<(i64, i64)>> {
        let mut rows: Vec<Vec<(i64, i64)>> = t
            .irreps()
            .iter()
            .map(|r| {
                r.values
                    .iter()
                    .map(|v| ((v.re * 1e6).round() as i64, (v.im * 1e6).round() as i64))
                    .collect()
            })
            .collect();
        rows.sort();
        rows
    }

    #[test]
    fn theta_table_matches_generic_table() {
        for w in [wreath_dihedral(3).unwrap(), iterated_wreath(3).unwrap()] {
            let base_table = character_table(w.base()).unwrap();
            let g = w.as_finite_group().unwrap();
            let generic = character_table(g).unwrap();
            let theta = w.theta_character_table(&base_table).unwrap();
            assert_eq!(sorted_rows(&generic), sorted_rows(&theta), "{}", w.name());
        }
    }

    #[test]
    fn theta_matrices_are_unitary_homomorphisms() {
        let w = wreath_dihedral(3).unwrap();
        let base_table = character_table(w.base()).unwrap();
        let g = w.as_finite_group().unwrap();
        let table = w.theta_character_table(&base_table).unwrap();
        let irreps = w.unitary_irreps(&base_table, &table).unwrap();
        let pairs = crate::repr::irreps::homomorphism_test_pairs(g, 500, 7);
        for irrep in &irreps {
            assert!(irrep.rep().max_unitarity_error() < 1e-10);
            assert!(irrep.rep().homomorphism_error(g, &pairs) < 1e-10);
        }
        assert_eq!(irreps.len(), table.num_irreps());
    }

    #[test]
    fn profile_without_table() {
        let w = iterated_wreath(4).unwrap();
        let base_table = character_table(w.base()).unwrap();
        let p = w.involution_profile(&base_table, w.canonical_involution()).unwrap();
        let total: u64 = p.irreps.iter().map(|r| r.dim * r.dim).sum();
        assert_eq!(total, w.order());
        assert!(p.mu_id.is_none());
    }
}
