//! Explicit unitary representations.
//!
//! The generic route decomposes the left regular representation: the
//! isotypic projector for `τ` cuts out `d_τ` copies of `τ`, a random
//! Hermitian element of the commutant (built from right translations)
//! splits that block into `d_τ` eigenspaces of dimension `d_τ`, and any one
//! of them carries `τ` in an orthonormal basis. Cyclic and dihedral groups
//! use closed-form matrices instead.

use std::f64::consts::PI;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, GroupFamily};
use crate::linalg::{
    cplx, hermitian_eigen_sorted, is_unitary, kron, max_abs_diff, orthonormal_column_basis, real,
    trace, CMat, ZERO,
};
use crate::repr::character::{CharacterTable, Tolerances, DEFAULT_RETRIES};

/// Largest group whose regular representation is decomposed explicitly.
pub const MAX_MATRIX_ORDER: usize = 256;

/// A (possibly reducible) matrix representation: one matrix per element id.
#[derive(Clone, Debug)]
pub struct MatrixRep {
    matrices: Vec<CMat>,
}

impl MatrixRep {
    pub fn new(matrices: Vec<CMat>) -> Self {
        MatrixRep { matrices }
    }

    pub fn dim(&self) -> usize {
        self.matrices.first().map_or(0, |m| m.nrows())
    }

    pub fn matrix(&self, g: usize) -> &CMat {
        &self.matrices[g]
    }

    pub fn matrices(&self) -> &[CMat] {
        &self.matrices
    }

    pub fn character(&self, g: usize) -> Complex64 {
        trace(&self.matrices[g])
    }

    /// `ρ ⊗ ρ*`, acting on `ℂ^d ⊗ ℂ^d` with index `i·d + j`.
    pub fn tensor_with_dual(&self) -> MatrixRep {
        MatrixRep::new(
            self.matrices
                .iter()
                .map(|m| kron(m, &m.map(|z| z.conj())))
                .collect(),
        )
    }

    pub fn left_regular(group: &FiniteGroup) -> MatrixRep {
        let n = group.order();
        MatrixRep::new(
            (0..n)
                .map(|g| {
                    let mut m = CMat::zeros(n, n);
                    for h in 0..n {
                        m[(group.mul(g, h), h)] = real(1.0);
                    }
                    m
                })
                .collect(),
        )
    }

    pub fn max_unitarity_error(&self) -> f64 {
        let d = self.dim();
        self.matrices
            .iter()
            .map(|m| max_abs_diff(&(m * m.adjoint()), &CMat::identity(d, d)))
            .fold(0.0, f64::max)
    }

    /// Largest `‖ρ(gh) − ρ(g)ρ(h)‖_max` over the given pairs.
    pub fn homomorphism_error(&self, group: &FiniteGroup, pairs: &[(usize, usize)]) -> f64 {
        pairs
            .iter()
            .map(|&(g, h)| max_abs_diff(&self.matrices[group.mul(g, h)], &(&self.matrices[g] * &self.matrices[h])))
            .fold(0.0, f64::max)
    }
}

/// Exhaustive pairs for `|G| ≤ 64`, otherwise `count` seeded random pairs.
pub fn homomorphism_test_pairs(group: &FiniteGroup, count: usize, seed: u64) -> Vec<(usize, usize)> {
    let n = group.order();
    if n <= 64 {
        (0..n).flat_map(|g| (0..n).map(move |h| (g, h))).collect()
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..count)
            .map(|_| (rng.random_range(0..n), rng.random_range(0..n)))
            .collect()
    }
}

#[derive(Clone, Debug)]
pub struct UnitaryIrrep {
    pub label: String,
    /// Row of the character table this irrep realises.
    pub index: usize,
    rep: MatrixRep,
}

impl UnitaryIrrep {
    pub fn new(label: impl Into<String>, index: usize, rep: MatrixRep) -> Self {
        UnitaryIrrep {
            label: label.into(),
            index,
            rep,
        }
    }

    pub fn dim(&self) -> usize {
        self.rep.dim()
    }

    pub fn matrix(&self, g: usize) -> &CMat {
        self.rep.matrix(g)
    }

    pub fn rep(&self) -> &MatrixRep {
        &self.rep
    }

    pub fn character(&self, g: usize) -> Complex64 {
        self.rep.character(g)
    }
}

/// `(d_τ/|G|) Σ_g χ̄_τ(g) rep(g)`: projector onto the `τ`-isotypic part.
pub fn isotypic_projector(table: &CharacterTable, target: usize, rep: &MatrixRep) -> CMat {
    let d = rep.dim();
    let mut p = CMat::zeros(d, d);
    for (g, m) in rep.matrices().iter().enumerate() {
        p += m * table.character_at(target, g).conj();
    }
    p * real(table.dim(target) as f64 / table.order() as f64)
}

/// One unitary irrep per character-table row.
pub fn unitary_irreps(group: &FiniteGroup, table: &CharacterTable) -> Result<Vec<UnitaryIrrep>> {
    match *group.family() {
        GroupFamily::Cyclic(_) => Ok(one_dimensional_irreps(table)),
        GroupFamily::Dihedral(k) => dihedral_irreps(k, group, table),
        _ => regular_decomposition_irreps(group, table),
    }
}

fn one_dimensional_irreps(table: &CharacterTable) -> Vec<UnitaryIrrep> {
    (0..table.num_irreps())
        .map(|i| {
            let mats = (0..table.order())
                .map(|g| CMat::from_element(1, 1, table.character_at(i, g)))
                .collect();
            UnitaryIrrep::new(table.label(i), i, MatrixRep::new(mats))
        })
        .collect()
}

/// Closed-form irreps of `D_k`: the 2-dimensional `ρ_j` send the rotation to
/// `diag(ω^j, ω^{-j})` and the flip to the swap matrix.
pub fn dihedral_irreps(k: usize, group: &FiniteGroup, table: &CharacterTable) -> Result<Vec<UnitaryIrrep>> {
    let n = 2 * k;
    if group.order() != n {
        return Err(Error::InvalidArgument("group is not the dihedral group D_k".into()));
    }
    let mut candidates: Vec<MatrixRep> = Vec::new();
    let one_dim = |f: &dyn Fn(usize, usize) -> f64| {
        MatrixRep::new(
            (0..n)
                .map(|g| CMat::from_element(1, 1, real(f(g / k, g % k))))
                .collect(),
        )
    };
    candidates.push(one_dim(&|_, _| 1.0));
    candidates.push(one_dim(&|x, _| if x == 0 { 1.0 } else { -1.0 }));
    if k % 2 == 0 {
        candidates.push(one_dim(&|_, i| if i % 2 == 0 { 1.0 } else { -1.0 }));
        candidates.push(one_dim(&|x, i| if (x + i) % 2 == 0 { 1.0 } else { -1.0 }));
    }
    let swap = CMat::from_row_slice(2, 2, &[ZERO, real(1.0), real(1.0), ZERO]);
    for j in 1..=(k - 1) / 2 {
        let mats = (0..n)
            .map(|g| {
                let (x, i) = (g / k, g % k);
                let theta = 2.0 * PI * (j * i) as f64 / k as f64;
                let rot = CMat::from_row_slice(
                    2,
                    2,
                    &[cplx(theta.cos(), theta.sin()), ZERO, ZERO, cplx(theta.cos(), -theta.sin())],
                );
                if x == 0 { rot } else { rot * &swap }
            })
            .collect();
        candidates.push(MatrixRep::new(mats));
    }
    match_to_table(table, candidates, &Tolerances::default())
}

/// Pairs each table row with the candidate whose character matches it.
pub fn match_to_table(
    table: &CharacterTable,
    candidates: Vec<MatrixRep>,
    tol: &Tolerances,
) -> Result<Vec<UnitaryIrrep>> {
    let mut slots: Vec<Option<MatrixRep>> = candidates.into_iter().map(Some).collect();
    let mut out = Vec::with_capacity(table.num_irreps());
    for i in 0..table.num_irreps() {
        let pos = slots.iter().position(|c| {
            c.as_ref().is_some_and(|rep| {
                rep.dim() == table.dim(i)
                    && table.classes().iter().enumerate().all(|(k, cls)| {
                        (rep.character(cls.representative) - table.value(i, k)).norm()
                            <= tol.membership * table.order() as f64
                    })
            })
        });
        let rep = pos
            .and_then(|p| slots[p].take())
            .ok_or_else(|| Error::Decomposition(format!("no candidate matches row {}", table.label(i))))?;
        out.push(UnitaryIrrep::new(table.label(i), i, rep));
    }
    Ok(out)
}

/// Generic decomposition of the regular representation (|G| ≤ 256).
pub fn regular_decomposition_irreps(group: &FiniteGroup, table: &CharacterTable) -> Result<Vec<UnitaryIrrep>> {
    let n = group.order();
    if n > MAX_MATRIX_ORDER {
        return Err(Error::GuardExceeded {
            order: n as u64,
            limit: MAX_MATRIX_ORDER as u64,
        });
    }
    let tol = Tolerances::default();
    let pairs = homomorphism_test_pairs(group, 1000, 0xB0B);
    let mut out = Vec::with_capacity(table.num_irreps());
    for i in 0..table.num_irreps() {
        let d = table.dim(i);
        if d == 1 {
            let mats = (0..n)
                .map(|g| CMat::from_element(1, 1, table.character_at(i, g)))
                .collect();
            out.push(UnitaryIrrep::new(table.label(i), i, MatrixRep::new(mats)));
            continue;
        }
        let mut last_err = None;
        let mut found = None;
        for attempt in 0..DEFAULT_RETRIES {
            match split_isotypic_block(group, table, i, attempt as u64) {
                Ok(rep) => {
                    let unit_err = rep.max_unitarity_error();
                    let hom_err = rep.homomorphism_error(group, &pairs);
                    let char_err = (0..n)
                        .map(|g| (rep.character(g) - table.character_at(i, g)).norm())
                        .fold(0.0, f64::max);
                    if unit_err <= tol.unitarity && hom_err <= tol.membership && char_err <= tol.membership {
                        found = Some(rep);
                        break;
                    }
                    last_err = Some(format!(
                        "unitarity {unit_err:e}, homomorphism {hom_err:e}, character {char_err:e}"
                    ));
                }
                Err(e) => last_err = Some(e.to_string()),
            }
        }
        let rep = found.ok_or_else(|| {
            Error::Decomposition(format!(
                "{} irrep {}: {}",
                group.name(),
                table.label(i),
                last_err.unwrap_or_default()
            ))
        })?;
        out.push(UnitaryIrrep::new(table.label(i), i, rep));
    }
    Ok(out)
}

fn split_isotypic_block(group: &FiniteGroup, table: &CharacterTable, irrep: usize, attempt: u64) -> Result<MatrixRep> {
    let n = group.order();
    let d = table.dim(irrep);
    let scale = d as f64 / n as f64;
    // P[x][h] = (d/|G|) χ̄(x h⁻¹)
    let p = CMat::from_fn(n, n, |x, h| {
        table.character_at(irrep, group.mul(x, group.inv(h))).conj() * scale
    });
    let q = orthonormal_column_basis(&p, 1e-6, d * d);
    if q.ncols() != d * d {
        return Err(Error::Decomposition(format!(
            "isotypic block has rank {} instead of {}",
            q.ncols(),
            d * d
        )));
    }

    // K = Σ_g c_g R(g) + c̄_g R(g⁻¹), where (R(g)v)_y = v_{y·g}
    let mut rng = ChaCha8Rng::seed_from_u64(0x1DEC_0000 + 131 * irrep as u64 + attempt);
    let coeffs: Vec<Complex64> = (0..n)
        .map(|_| cplx(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
        .collect();
    let mut kq = CMat::zeros(n, d * d);
    for (g, c) in coeffs.iter().enumerate() {
        let g_inv = group.inv(g);
        for y in 0..n {
            let (a, b) = (group.mul(y, g), group.mul(y, g_inv));
            for col in 0..d * d {
                kq[(y, col)] += c * q[(a, col)] + c.conj() * q[(b, col)];
            }
        }
    }
    let k_small = q.adjoint() * kq;
    let (values, vectors) = hermitian_eigen_sorted(&k_small);
    let spread = values[d - 1] - values[0];
    let gap = values[d] - values[d - 1];
    let magnitude = values.iter().fold(1.0f64, |m, v| m.max(v.abs()));
    if spread > 1e-8 * magnitude || gap < 1e-6 * magnitude {
        return Err(Error::Decomposition("commutant eigenvalues not separated".into()));
    }
    let w = &q * vectors.columns(0, d);

    // ρ(g) = W† L(g) W with (L(g)W)_y = W_{g⁻¹ y}
    let wh = w.adjoint();
    let mats = (0..n)
        .map(|g| {
            let g_inv = group.inv(g);
            let lw = CMat::from_fn(n, d, |y, c| w[(group.mul(g_inv, y), c)]);
            &wh * lw
        })
        .collect();
    Ok(MatrixRep::new(mats))
}

pub fn is_unitary_rep(rep: &MatrixRep, tol: f64) -> bool {
    rep.matrices().iter().all(|m| is_unitary(m, tol))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{make_alternating, make_cyclic, make_dihedral, make_symmetric};
    use crate::linalg::{identity, is_projector, projector_rank};
    use crate::repr::character::character_table;

    #[test]
    fn cyclic_irreps_are_roots_of_unity() {
        let z3 = make_cyclic(3).unwrap();
        let t = character_table(&z3).unwrap();
        let irreps = unitary_irreps(&z3, &t).unwrap();
        assert_eq!(irreps.len(), 3);
        for irr in &irreps {
            assert_eq!(irr.dim(), 1);
            let z = irr.matrix(1)[(0, 0)];
            assert!((z.powu(3) - real(1.0)).norm() < 1e-12);
        }
    }

    #[test]
    fn s3_two_dim_transposition_eigenvalues() {
        let s3 = make_symmetric(3).unwrap();
        let t = character_table(&s3).unwrap();
        let irreps = unitary_irreps(&s3, &t).unwrap();
        let two = irreps.iter().find(|r| r.dim() == 2).unwrap();
        let tr = two.matrix(s3.default_involution().unwrap());
        let (vals, _) = hermitian_eigen_sorted(tr);
        assert!((vals[0] + 1.0).abs() < 1e-10 && (vals[1] - 1.0).abs() < 1e-10);
        assert!((tr.determinant() + real(1.0)).norm() < 1e-10);
    }

    #[test]
    fn d4_generic_decomposition() {
        let d4 = make_dihedral(4).unwrap();
        let t = character_table(&d4).unwrap();
        let irreps = regular_decomposition_irreps(&d4, &t).unwrap();
        assert_eq!(irreps.iter().filter(|r| r.dim() == 2).count(), 1);
        for irr in &irreps {
            assert!(is_unitary_rep(irr.rep(), 1e-10));
        }
        let explicit = unitary_irreps(&d4, &t).unwrap();
        assert!(explicit.iter().all(|r| is_unitary_rep(r.rep(), 1e-12)));
    }

    #[test]
    fn a5_irreps_are_homomorphisms() {
        let a5 = make_alternating(5).unwrap();
        let t = character_table(&a5).unwrap();
        let irreps = unitary_irreps(&a5, &t).unwrap();
        let pairs = homomorphism_test_pairs(&a5, 1000, 7);
        for irr in &irreps {
            assert!(irr.rep().homomorphism_error(&a5, &pairs) < 1e-9);
            assert!(irr.rep().max_unitarity_error() < 1e-10);
            assert!(max_abs_diff(irr.matrix(a5.identity()), &identity(irr.dim())) < 1e-10);
        }
    }

    #[test]
    fn isotypic_projector_examples() {
        let s3 = make_symmetric(3).unwrap();
        let t = character_table(&s3).unwrap();
        let irreps = unitary_irreps(&s3, &t).unwrap();
        let two = irreps.iter().find(|r| r.dim() == 2).unwrap();

        let p = isotypic_projector(&t, two.index, two.rep());
        assert!(max_abs_diff(&p, &identity(2)) < 1e-12);

        let reg = MatrixRep::left_regular(&s3);
        let p = isotypic_projector(&t, two.index, &reg);
        assert!(is_projector(&p, 1e-10));
        assert_eq!(projector_rank(&p), 4);

        let rr = two.rep().tensor_with_dual();
        let p = isotypic_projector(&t, 0, &rr);
        assert_eq!(projector_rank(&p), 1);

        let total = (0..t.num_irreps())
            .map(|i| isotypic_projector(&t, i, &reg))
            .fold(CMat::zeros(6, 6), |acc, p| acc + p);
        assert!(max_abs_diff(&total, &identity(6)) < 1e-9);
    }
}
