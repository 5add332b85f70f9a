//! Character tables from the class algebra.
//!
//! The centre of `ℂ[G]` is spanned by the class sums `C_k`. In the
//! orthonormal basis `C_k / √|C_k|`, left multiplication by a class sum is
//! represented by a matrix whose adjoint is multiplication by the inverse
//! class sum, so a random combination `L + L†` is Hermitian. Its eigenvectors
//! are the normalised primitive central idempotents
//! `e_χ = (d_χ/|G|) Σ_k χ̄(C_k) C_k`, from which the characters are read off
//! directly. Degenerate draws are retried with fresh randomness.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{ConjugacyClass, FiniteGroup};
use crate::linalg::{cplx, hermitian_eigen_sorted, real, CMat};
use crate::output::complex_pairs;

pub const DEFAULT_RETRIES: usize = 5;

/// Tolerances used across the representation layer.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tolerances {
    /// `|x| = 1` membership tests and orthogonality.
    pub membership: f64,
    /// Unitarity and homomorphism checks of explicit matrices.
    pub unitarity: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            membership: 1e-8,
            unitarity: 1e-10,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IrrepCharacter {
    pub label: String,
    #[serde(rename = "dimension")]
    pub dim: usize,
    #[serde(with = "complex_pairs")]
    pub values: Vec<Complex64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClassSummary {
    pub representative: usize,
    pub size: usize,
}

#[derive(Clone, Debug)]
pub struct CharacterTable {
    group_name: String,
    order: usize,
    classes: Vec<ConjugacyClass>,
    class_of: Vec<u32>,
    inverse_class: Vec<usize>,
    irreps: Vec<IrrepCharacter>,
}

/// Serializable view of a [`CharacterTable`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CharacterTableDocument {
    pub group: String,
    pub order: usize,
    pub classes: Vec<ClassSummary>,
    pub irreps: Vec<IrrepCharacter>,
}

/// Probability `d_ρ²/|G|` per irrep, kept as exact integer numerators.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PlancherelDistribution {
    pub order: u64,
    pub numerators: Vec<u64>,
    pub probabilities: Vec<f64>,
}

impl PlancherelDistribution {
    pub fn from_dims(order: u64, dims: &[u64]) -> Self {
        let numerators: Vec<u64> = dims.iter().map(|d| d * d).collect();
        let probabilities = numerators
            .iter()
            .map(|&n| n as f64 / order as f64)
            .collect();
        PlancherelDistribution {
            order,
            numerators,
            probabilities,
        }
    }

    /// `Exp_τ log d_τ` under the distribution.
    pub fn expected_log_dim(&self) -> f64 {
        self.numerators
            .iter()
            .zip(&self.probabilities)
            .map(|(&n, &p)| p * (n as f64).sqrt().ln())
            .sum()
    }
}

impl CharacterTable {
    pub fn group_name(&self) -> &str {
        &self.group_name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn classes(&self) -> &[ConjugacyClass] {
        &self.classes
    }

    pub fn class_of(&self, g: usize) -> usize {
        self.class_of[g] as usize
    }

    pub fn inverse_class(&self, k: usize) -> usize {
        self.inverse_class[k]
    }

    pub fn irreps(&self) -> &[IrrepCharacter] {
        &self.irreps
    }

    pub fn num_irreps(&self) -> usize {
        self.irreps.len()
    }

    pub fn dim(&self, irrep: usize) -> usize {
        self.irreps[irrep].dim
    }

    pub fn dims(&self) -> Vec<u64> {
        self.irreps.iter().map(|r| r.dim as u64).collect()
    }

    pub fn label(&self, irrep: usize) -> &str {
        &self.irreps[irrep].label
    }

    pub fn value(&self, irrep: usize, class: usize) -> Complex64 {
        self.irreps[irrep].values[class]
    }

    /// `χ_ρ(g)` for an element id.
    pub fn character_at(&self, irrep: usize, g: usize) -> Complex64 {
        self.value(irrep, self.class_of(g))
    }

    /// The trivial irrep is always row 0.
    pub fn trivial_index(&self) -> usize {
        0
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c.size()).collect()
    }

    /// `⟨f₁, f₂⟩ = |G|⁻¹ Σ_classes |C| f₁ f̄₂` for class functions.
    pub fn inner_product(&self, f1: &[Complex64], f2: &[Complex64]) -> Complex64 {
        let sum: Complex64 = self
            .classes
            .iter()
            .zip(f1.iter().zip(f2))
            .map(|(c, (a, b))| a * b.conj() * c.size() as f64)
            .sum();
        sum / self.order as f64
    }

    pub fn plancherel(&self) -> PlancherelDistribution {
        PlancherelDistribution::from_dims(self.order as u64, &self.dims())
    }

    pub fn to_document(&self) -> CharacterTableDocument {
        CharacterTableDocument {
            group: self.group_name.clone(),
            order: self.order,
            classes: self
                .classes
                .iter()
                .map(|c| ClassSummary {
                    representative: c.representative,
                    size: c.size(),
                })
                .collect(),
            irreps: self.irreps.clone(),
        }
    }

    /// Largest deviation from row orthonormality.
    pub fn row_orthogonality_error(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for (a, ra) in self.irreps.iter().enumerate() {
            for (b, rb) in self.irreps.iter().enumerate() {
                let ip = self.inner_product(&ra.values, &rb.values);
                let target = if a == b { 1.0 } else { 0.0 };
                worst = worst.max((ip - real(target)).norm());
            }
        }
        worst
    }

    /// Largest deviation from `Σ_ρ χ_ρ(C_j) χ̄_ρ(C_k) = δ_jk |G|/|C_j|`.
    pub fn column_orthogonality_error(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for (j, cj) in self.classes.iter().enumerate() {
            for k in 0..self.classes.len() {
                let s: Complex64 = self
                    .irreps
                    .iter()
                    .map(|r| r.values[j] * r.values[k].conj())
                    .sum();
                let target = if j == k {
                    self.order as f64 / cj.size() as f64
                } else {
                    0.0
                };
                worst = worst.max((s - real(target)).norm() / self.order as f64);
            }
        }
        worst
    }

    /// Assembles a table from externally computed rows, sorting them into
    /// canonical order and validating every table invariant.
    pub fn from_rows(
        group: &FiniteGroup,
        rows: Vec<(usize, Vec<Complex64>)>,
        tol: &Tolerances,
    ) -> Result<Self> {
        let classes = group.conjugacy_classes().to_vec();
        let inverse_class = classes
            .iter()
            .map(|c| group.class_of(group.inv(c.representative)))
            .collect();
        let mut irreps: Vec<IrrepCharacter> = rows
            .into_iter()
            .map(|(dim, values)| IrrepCharacter {
                label: String::new(),
                dim,
                values,
            })
            .collect();
        canonical_sort(&mut irreps);
        for (i, r) in irreps.iter_mut().enumerate() {
            r.label = format!("chi{i}");
        }
        let table = CharacterTable {
            group_name: group.name().to_string(),
            order: group.order(),
            classes,
            class_of: group.class_index_table().to_vec(),
            inverse_class,
            irreps,
        };
        table.validate(tol)?;
        Ok(table)
    }

    pub fn validate(&self, tol: &Tolerances) -> Result<()> {
        if self.irreps.len() != self.classes.len() {
            return Err(Error::CharacterTable(format!(
                "{} irreps for {} classes",
                self.irreps.len(),
                self.classes.len()
            )));
        }
        let sum_sq: usize = self.irreps.iter().map(|r| r.dim * r.dim).sum();
        if sum_sq != self.order {
            return Err(Error::CharacterTable(format!(
                "Σd² = {sum_sq} ≠ |G| = {}",
                self.order
            )));
        }
        let err = self.row_orthogonality_error();
        if err > tol.membership {
            return Err(Error::CharacterTable(format!(
                "row orthogonality violated by {err:e}"
            )));
        }
        for r in &self.irreps {
            if let Some(v) = r.values.iter().find(|v| v.norm() > r.dim as f64 + tol.membership) {
                return Err(Error::CharacterTable(format!(
                    "|χ| = {} exceeds dimension {}",
                    v.norm(),
                    r.dim
                )));
            }
        }
        if self.irreps[0].values.iter().any(|v| (v - real(1.0)).norm() > tol.membership) {
            return Err(Error::CharacterTable("row 0 is not trivial".into()));
        }
        Ok(())
    }
}

/// Trivial first, then by dimension, then lexicographically by the
/// (rounded) character values.
fn canonical_sort(irreps: &mut [IrrepCharacter]) {
    let key = |r: &IrrepCharacter| {
        let trivial = r.dim == 1 && r.values.iter().all(|v| (v - real(1.0)).norm() < 1e-6);
        let vals: Vec<(i64, i64)> = r
            .values
            .iter()
            .map(|v| ((-v.re * 1e6).round() as i64, (-v.im * 1e6).round() as i64))
            .collect();
        (!trivial, r.dim, vals)
    };
    irreps.sort_by_cached_key(key);
}

/// Character table of `group` with the default tolerances and retry budget.
pub fn character_table(group: &FiniteGroup) -> Result<CharacterTable> {
    character_table_with(group, &Tolerances::default(), DEFAULT_RETRIES)
}

pub fn character_table_with(
    group: &FiniteGroup,
    tol: &Tolerances,
    retries: usize,
) -> Result<CharacterTable> {
    let mut last_err = Error::CharacterTable("no attempt made".into());
    for attempt in 0..retries.max(1) {
        match class_algebra_attempt(group, tol, attempt as u64) {
            Ok(table) => return Ok(table),
            Err(e) => last_err = e,
        }
    }
    Err(Error::CharacterTable(format!(
        "{} after {} attempts: {last_err}",
        group.name(),
        retries.max(1)
    )))
}

fn class_algebra_attempt(group: &FiniteGroup, tol: &Tolerances, attempt: u64) -> Result<CharacterTable> {
    let classes = group.conjugacy_classes();
    let class_of = group.class_index_table();
    let r = classes.len();
    let n = group.order();
    let mut rng = ChaCha8Rng::seed_from_u64(0xC1A5_5A16 ^ (attempt.wrapping_mul(0x9E37_79B9_7F4A_7C15)));
    let weights: Vec<Complex64> = (0..r)
        .map(|_| cplx(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
        .collect();

    // M[k][j] = Σ_i w_i a_{ijk}, a_{ijk} = #{(x, y) ∈ C_i × C_j : xy = z_k}
    let mut m = CMat::zeros(r, r);
    for (k, ck) in classes.iter().enumerate() {
        let z = ck.representative;
        for x in 0..n {
            let i = class_of[x] as usize;
            let j = class_of[group.mul(group.inv(x), z)] as usize;
            m[(k, j)] += weights[i];
        }
    }
    let sizes: Vec<f64> = classes.iter().map(|c| c.size() as f64).collect();
    for k in 0..r {
        for j in 0..r {
            m[(k, j)] *= (sizes[k] / sizes[j]).sqrt();
        }
    }
    let h = &m + m.adjoint();
    let (values, vectors) = hermitian_eigen_sorted(&h);
    let scale = values.iter().fold(1.0f64, |acc, v| acc.max(v.abs()));
    if values.windows(2).any(|w| w[1] - w[0] < 1e-9 * scale) {
        return Err(Error::CharacterTable("degenerate eigenvalues".into()));
    }

    let mut rows = Vec::with_capacity(r);
    for c in 0..r {
        let v = vectors.column(c);
        let u: Vec<Complex64> = (0..r).map(|k| v[k].conj() / sizes[k].sqrt()).collect();
        if u[0].norm() < 1e-12 {
            return Err(Error::CharacterTable("vanishing identity coefficient".into()));
        }
        let normalized: Vec<Complex64> = u.iter().map(|x| x / u[0]).collect();
        let weight: f64 = normalized
            .iter()
            .zip(&sizes)
            .map(|(x, s)| x.norm_sqr() * s)
            .sum();
        let d = (n as f64 / weight).sqrt();
        let dim = d.round();
        if (d - dim).abs() > 1e-6 || dim < 1.0 {
            return Err(Error::CharacterTable(format!("non-integral dimension {d}")));
        }
        let mut values: Vec<Complex64> = normalized.iter().map(|x| x * dim).collect();
        values[0] = real(dim);
        rows.push((dim as usize, values));
    }
    CharacterTable::from_rows(group, rows, tol)
}

/// Normalized character `χ_τ(C)/d_τ`.
pub fn normalized_character(table: &CharacterTable, irrep: usize, class: usize) -> Complex64 {
    table.value(irrep, class) / table.dim(irrep) as f64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{make_alternating, make_cyclic, make_dihedral, make_symmetric};

    fn dims_sorted(t: &CharacterTable) -> Vec<usize> {
        let mut d: Vec<usize> = t.irreps().iter().map(|r| r.dim).collect();
        d.sort();
        d
    }

    #[test]
    fn z2_table() {
        let t = character_table(&make_cyclic(2).unwrap()).unwrap();
        assert_eq!(t.num_irreps(), 2);
        assert!((t.value(0, 1) - real(1.0)).norm() < 1e-12);
        assert!((t.value(1, 1) - real(-1.0)).norm() < 1e-12);
    }

    #[test]
    fn s3_table() {
        let s3 = make_symmetric(3).unwrap();
        let t = character_table(&s3).unwrap();
        assert_eq!(dims_sorted(&t), vec![1, 1, 2]);
        let two = (0..3).find(|&i| t.dim(i) == 2).unwrap();
        let transposition = s3.default_involution().unwrap();
        let three_cycle = (0..6).find(|&g| s3.element_order(g) == 3).unwrap();
        assert!(t.character_at(two, transposition).norm() < 1e-10);
        assert!((t.character_at(two, three_cycle) - real(-1.0)).norm() < 1e-10);
    }

    #[test]
    fn a5_table() {
        let t = character_table(&make_alternating(5).unwrap()).unwrap();
        assert_eq!(dims_sorted(&t), vec![1, 3, 3, 4, 5]);
        assert!(t.column_orthogonality_error() < 1e-10);
    }

    #[test]
    fn cyclic_table_is_roots_of_unity() {
        let t = character_table(&make_cyclic(7).unwrap()).unwrap();
        for r in t.irreps() {
            assert_eq!(r.dim, 1);
            assert!(r.values.iter().all(|v| (v.norm() - 1.0).abs() < 1e-10));
        }
    }

    #[test]
    fn dihedral_tables() {
        for k in 3..12 {
            let t = character_table(&make_dihedral(k).unwrap()).unwrap();
            let ones = t.irreps().iter().filter(|r| r.dim == 1).count();
            assert_eq!(ones, if k % 2 == 0 { 4 } else { 2 });
            assert!(t.irreps().iter().all(|r| r.dim <= 2));
        }
    }

    #[test]
    fn plancherel_is_normalized() {
        let t = character_table(&make_alternating(5).unwrap()).unwrap();
        let p = t.plancherel();
        assert_eq!(p.numerators.iter().sum::<u64>(), 60);
        let expected = (9.0 * 3f64.ln() * 2.0 + 16.0 * 4f64.ln() + 25.0 * 5f64.ln()) / 60.0;
        assert!((p.expected_log_dim() - expected).abs() < 1e-12);
    }

    #[test]
    fn normalized_character_examples() {
        let s3 = make_symmetric(3).unwrap();
        let t = character_table(&s3).unwrap();
        for c in 0..3 {
            assert!((normalized_character(&t, 0, c) - real(1.0)).norm() < 1e-12);
        }
        for i in 0..3 {
            assert!((normalized_character(&t, i, 0) - real(1.0)).norm() < 1e-12);
        }
        let two = (0..3).find(|&i| t.dim(i) == 2).unwrap();
        let tc = t.class_of(s3.default_involution().unwrap());
        assert!(normalized_character(&t, two, tc).norm() < 1e-12);
    }
}
