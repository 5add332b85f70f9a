//! Small dense complex linear algebra on top of `nalgebra`.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;

pub type CMat = DMatrix<Complex64>;
pub type CVec = DVector<Complex64>;

pub const ZERO: Complex64 = Complex64::new(0.0, 0.0);
pub const ONE: Complex64 = Complex64::new(1.0, 0.0);

#[inline]
pub fn cplx(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

#[inline]
pub fn real(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

pub fn kron(a: &CMat, b: &CMat) -> CMat {
    a.kronecker(b)
}

/// Eigen-decomposition of a Hermitian matrix with eigenvalues ascending.
pub fn hermitian_eigen_sorted(m: &CMat) -> (Vec<f64>, CMat) {
    let n = m.nrows();
    // symmetrise against round-off before handing to the solver
    let h = (m + m.adjoint()) * real(0.5);
    let eig = h.symmetric_eigen();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| eig.eigenvalues[i].total_cmp(&eig.eigenvalues[j]));
    let values = order.iter().map(|&i| eig.eigenvalues[i]).collect();
    let vectors = CMat::from_fn(n, n, |r, c| eig.eigenvectors[(r, order[c])]);
    (values, vectors)
}

/// Rank of an (approximate) orthogonal projector: eigenvalues above ½.
pub fn projector_rank(p: &CMat) -> usize {
    if p.nrows() == 0 {
        return 0;
    }
    let (values, _) = hermitian_eigen_sorted(p);
    values.iter().filter(|&&v| v > 0.5).count()
}

pub fn identity(d: usize) -> CMat {
    CMat::identity(d, d)
}

pub fn max_abs_diff(a: &CMat, b: &CMat) -> f64 {
    a.iter()
        .zip(b.iter())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

pub fn is_unitary(m: &CMat, tol: f64) -> bool {
    m.is_square() && max_abs_diff(&(m * m.adjoint()), &identity(m.nrows())) <= tol
}

pub fn is_hermitian(m: &CMat, tol: f64) -> bool {
    m.is_square() && max_abs_diff(m, &m.adjoint()) <= tol
}

pub fn is_projector(m: &CMat, tol: f64) -> bool {
    is_hermitian(m, tol) && max_abs_diff(&(m * m), m) <= tol
}

pub fn trace(m: &CMat) -> Complex64 {
    m.diagonal().iter().sum()
}

fn gaussian(rng: &mut impl Rng) -> Complex64 {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    cplx(re, im)
}

pub fn random_gaussian_matrix(rng: &mut impl Rng, rows: usize, cols: usize) -> CMat {
    CMat::from_fn(rows, cols, |_, _| gaussian(rng))
}

/// Uniformly distributed unit vector in `ℂ^d`.
pub fn random_unit_vector(rng: &mut impl Rng, d: usize) -> CVec {
    let v = CVec::from_fn(d, |_, _| gaussian(rng));
    let norm = v.norm();
    v / real(norm)
}

/// Haar-random unitary (QR of a complex Ginibre matrix, phases fixed).
pub fn random_unitary(rng: &mut impl Rng, d: usize) -> CMat {
    let z = random_gaussian_matrix(rng, d, d);
    let qr = z.qr();
    let mut q = qr.q();
    let r = qr.r();
    for j in 0..d {
        let rjj = r[(j, j)];
        let phase = if rjj.norm() > 0.0 { rjj / rjj.norm() } else { ONE };
        let mut col = q.column_mut(j);
        col *= phase;
    }
    q
}

/// Orthonormal basis for the span of the columns of `m`, via modified
/// Gram–Schmidt with one reorthogonalisation pass. Columns whose residual
/// falls below `drop_tol` (relative to their own norm) are skipped, and at
/// most `max_rank` vectors are kept.
pub fn orthonormal_column_basis(m: &CMat, drop_tol: f64, max_rank: usize) -> CMat {
    let mut basis: Vec<CVec> = Vec::new();
    for j in 0..m.ncols() {
        if basis.len() == max_rank {
            break;
        }
        let col = m.column(j).into_owned();
        let norm0 = col.norm();
        if norm0 == 0.0 {
            continue;
        }
        let mut v = col;
        for _ in 0..2 {
            for b in &basis {
                let coeff = b.dotc(&v);
                v -= b * coeff;
            }
        }
        let norm = v.norm();
        if norm > drop_tol * norm0 {
            basis.push(v / real(norm));
        }
    }
    if basis.is_empty() {
        return CMat::zeros(m.nrows(), 0);
    }
    CMat::from_columns(&basis)
}

/// Applies `A_0 ⊗ A_1 ⊗ … ⊗ A_{n-1}` to `v` without forming the product.
/// Index convention matches `kron`: the first factor is most significant.
pub fn apply_tensor(factors: &[&CMat], v: &CVec) -> CVec {
    let dims: Vec<usize> = factors.iter().map(|f| f.ncols()).collect();
    let total: usize = dims.iter().product();
    assert_eq!(total, v.len(), "vector length does not match tensor dimension");
    let mut cur: Vec<Complex64> = v.iter().copied().collect();
    let mut next = vec![ZERO; total];
    let mut inner = total;
    for (k, a) in factors.iter().enumerate() {
        let d = dims[k];
        inner /= d;
        let outer = total / (inner * d);
        for o in 0..outer {
            for i in 0..inner {
                let base = o * d * inner + i;
                for r in 0..d {
                    let mut acc = ZERO;
                    for c in 0..d {
                        acc += a[(r, c)] * cur[base + c * inner];
                    }
                    next[base + r * inner] = acc;
                }
            }
        }
        std::mem::swap(&mut cur, &mut next);
    }
    CVec::from_vec(cur)
}

/// The vector `b ⊗ b̄` in `ℂ^d ⊗ ℂ^d` (index `i·d + j`).
pub fn tensor_with_conjugate(b: &CVec) -> CVec {
    let d = b.len();
    CVec::from_fn(d * d, |idx, _| b[idx / d] * b[idx % d].conj())
}
