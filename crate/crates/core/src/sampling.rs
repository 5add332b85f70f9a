//! Weak and strong Fourier sampling distributions for hidden subgroups of
//! `G` and of `Gⁿ`.
//!
//! Weak sampling observes an irrep name; strong sampling additionally
//! observes a vector of a frame inside the observed irrep. On `Gⁿ` every
//! representation-theoretic quantity is evaluated factor by factor; only
//! the observed irrep's own space is ever materialised.

use num_complex::Complex64;
use rand::distr::weighted::WeightedIndex;
use rand::distr::Distribution;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup};
use crate::linalg::{
    apply_tensor, hermitian_eigen_sorted, identity, projector_rank, random_unit_vector,
    random_unitary, real, tensor_with_conjugate, CMat, CVec,
};
use crate::output::{fmt_real, CsvTable};
use crate::repr::{character_table, isotypic_projector, unitary_irreps, CharacterTable, UnitaryIrrep};

/// Cap on the dimension of an irrep of `Gⁿ` that is ever materialised.
pub const DEFAULT_MAX_PRODUCT_DIM: usize = 4096;
/// Cap on the dimension for frames that are not product frames.
pub const MAX_GLOBAL_FRAME_DIM: usize = 512;
/// Cap on `|[μ]|ⁿ` for exact class enumeration.
pub const MAX_CLASS_ENUMERATION: usize = 200_000;

const COMPLETENESS_TOL: f64 = 1e-9;
const UNIT_NORM_TOL: f64 = 1e-12;

/// A group together with its character table and unitary irreps.
#[derive(Clone, Debug)]
pub struct RepresentationData {
    pub group: FiniteGroup,
    pub table: CharacterTable,
    pub irreps: Vec<UnitaryIrrep>,
}

impl RepresentationData {
    pub fn new(group: FiniteGroup) -> Result<Self> {
        let table = character_table(&group)?;
        Self::with_table(group, table)
    }

    pub fn with_table(group: FiniteGroup, table: CharacterTable) -> Result<Self> {
        let irreps = unitary_irreps(&group, &table)?;
        Ok(RepresentationData { group, table, irreps })
    }
}

/// Weighted unit vectors `{(a_b, b)}` with `Σ a_b |b⟩⟨b| = 1`.
#[derive(Clone, Debug)]
pub struct Frame {
    dim: usize,
    vectors: Vec<CVec>,
    weights: Vec<f64>,
}

impl Frame {
    pub fn new(vectors: Vec<CVec>, weights: Vec<f64>) -> Result<Self> {
        let dim = vectors
            .first()
            .map(|v| v.len())
            .ok_or_else(|| Error::InvalidArgument("empty frame".into()))?;
        if vectors.len() != weights.len() {
            return Err(Error::InvalidArgument("one weight per vector required".into()));
        }
        for (v, &w) in vectors.iter().zip(&weights) {
            if v.len() != dim {
                return Err(Error::InvalidArgument("frame vectors differ in length".into()));
            }
            if (v.norm() - 1.0).abs() > UNIT_NORM_TOL {
                return Err(Error::InvalidArgument(format!("frame vector of norm {}", v.norm())));
            }
            if !(w > 0.0) {
                return Err(Error::InvalidArgument(format!("frame weight {w} is not positive")));
            }
        }
        let frame = Frame { dim, vectors, weights };
        let err = frame.completeness_error();
        if err > COMPLETENESS_TOL {
            return Err(Error::InvalidArgument(format!("frame is incomplete (error {err:e})")));
        }
        Ok(frame)
    }

    pub fn standard(d: usize) -> Self {
        Frame::from_unitary(&identity(d))
    }

    /// The columns of a unitary matrix, each with weight one.
    pub fn from_unitary(u: &CMat) -> Self {
        Frame {
            dim: u.nrows(),
            vectors: u.column_iter().map(|c| c.into_owned()).collect(),
            weights: vec![1.0; u.ncols()],
        }
    }

    pub fn random_unitary(rng: &mut impl Rng, d: usize) -> Self {
        Frame::from_unitary(&random_unitary(rng, d))
    }

    /// Union of `bases` Haar-random orthonormal bases, uniform weights `1/bases`.
    pub fn union_of_bases(rng: &mut impl Rng, d: usize, bases: usize) -> Result<Self> {
        if bases == 0 {
            return Err(Error::InvalidArgument("at least one basis required".into()));
        }
        let mut vectors = Vec::with_capacity(d * bases);
        for _ in 0..bases {
            vectors.extend(random_unitary(rng, d).column_iter().map(|c| c.into_owned()));
        }
        let weights = vec![1.0 / bases as f64; vectors.len()];
        Frame::new(vectors, weights)
    }

    /// Turns any spanning set into a frame: with `S = Σ v vᵀ`, the vectors
    /// `S^{-1/2} v` resolve the identity; they are normalised and their
    /// squared norms become the weights.
    pub fn tight_from_vectors(raw: &[CVec]) -> Result<Self> {
        let d = raw
            .first()
            .map(|v| v.len())
            .ok_or_else(|| Error::InvalidArgument("empty frame".into()))?;
        let mut s = CMat::zeros(d, d);
        for v in raw {
            s += v * v.adjoint();
        }
        let (vals, vecs) = hermitian_eigen_sorted(&s);
        if vals[0] < 1e-10 {
            return Err(Error::InvalidArgument("vectors do not span the space".into()));
        }
        let inv_sqrt = CMat::from_diagonal(&CVec::from_iterator(d, vals.iter().map(|l| real(l.sqrt().recip()))));
        let s_inv_sqrt = &vecs * inv_sqrt * vecs.adjoint();
        let mut vectors = Vec::with_capacity(raw.len());
        let mut weights = Vec::with_capacity(raw.len());
        for v in raw {
            let w = &s_inv_sqrt * v;
            let norm = w.norm();
            if norm > 0.0 {
                weights.push(norm * norm);
                vectors.push(w / real(norm));
            }
        }
        Frame::new(vectors, weights)
    }

    pub fn random_overcomplete(rng: &mut impl Rng, d: usize, count: usize) -> Result<Self> {
        let raw: Vec<CVec> = (0..count.max(d)).map(|_| random_unit_vector(rng, d)).collect();
        Frame::tight_from_vectors(&raw)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vectors(&self) -> &[CVec] {
        &self.vectors
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// `max |Σ a_b |b⟩⟨b| − 1|` entrywise.
    pub fn completeness_error(&self) -> f64 {
        let mut s = CMat::zeros(self.dim, self.dim);
        for (v, &w) in self.vectors.iter().zip(&self.weights) {
            s += v * v.adjoint() * real(w);
        }
        crate::linalg::max_abs_diff(&s, &identity(self.dim))
    }
}

/// How frames are chosen for the observed irrep of `Gⁿ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum FramePolicy {
    /// Product of the standard bases of the factors.
    Standard,
    /// One Haar-random basis of the whole product space.
    RandomUnitary,
    /// Union of random bases of the product space, uniform weights.
    UnionOfBases { bases: usize },
    /// `ratio · d` random vectors made tight.
    RandomOvercomplete { ratio: usize },
}

impl FramePolicy {
    pub fn build(&self, rng: &mut impl Rng, d: usize) -> Result<Frame> {
        match *self {
            FramePolicy::Standard => Ok(Frame::standard(d)),
            FramePolicy::RandomUnitary => Ok(Frame::random_unitary(rng, d)),
            FramePolicy::UnionOfBases { bases } => Frame::union_of_bases(rng, d, bases),
            FramePolicy::RandomOvercomplete { ratio } => Frame::random_overcomplete(rng, d, ratio.max(1) * d),
        }
    }

    pub fn name(&self) -> String {
        match self {
            FramePolicy::Standard => "standard".into(),
            FramePolicy::RandomUnitary => "unitary".into(),
            FramePolicy::UnionOfBases { bases } => format!("bases:{bases}"),
            FramePolicy::RandomOvercomplete { ratio } => format!("overcomplete:{ratio}"),
        }
    }
}

impl std::str::FromStr for FramePolicy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (head, arg) = match s.split_once(':') {
            Some((h, a)) => (h, Some(a)),
            None => (s, None),
        };
        let count = |default: usize| -> Result<usize> {
            arg.map_or(Ok(default), |a| {
                a.parse()
                    .ok()
                    .filter(|&k: &usize| k >= 1)
                    .ok_or_else(|| Error::InvalidArgument(format!("bad frame parameter `{a}`")))
            })
        };
        match head {
            "standard" => Ok(FramePolicy::Standard),
            "unitary" => Ok(FramePolicy::RandomUnitary),
            "bases" => Ok(FramePolicy::UnionOfBases { bases: count(2)? }),
            "overcomplete" => Ok(FramePolicy::RandomOvercomplete { ratio: count(2)? }),
            _ => Err(Error::InvalidArgument(format!("unknown frame policy `{s}`"))),
        }
    }
}

/// A finite distribution, optionally with exact integer weights
/// `numerators / denominator`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SamplingDistribution {
    pub support: Vec<String>,
    pub probabilities: Vec<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub numerators: Option<Vec<u64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub denominator: Option<u64>,
}

impl SamplingDistribution {
    fn from_probabilities(support: Vec<String>, probabilities: Vec<f64>) -> Self {
        SamplingDistribution {
            support,
            probabilities,
            numerators: None,
            denominator: None,
        }
    }

    pub fn total(&self) -> f64 {
        self.probabilities.iter().sum()
    }

    pub fn probability(&self, label: &str) -> Option<f64> {
        self.support.iter().position(|s| s == label).map(|i| self.probabilities[i])
    }

    /// `Σ |p − q|`, over a common support.
    pub fn l1_distance(&self, other: &SamplingDistribution) -> Result<f64> {
        if self.support != other.support {
            return Err(Error::InvalidArgument("distributions have different supports".into()));
        }
        Ok(self
            .probabilities
            .iter()
            .zip(&other.probabilities)
            .map(|(p, q)| (p - q).abs())
            .sum())
    }

    pub fn to_csv(&self) -> CsvTable {
        let mut t = CsvTable::new(["outcome", "probability"]);
        for (s, p) in self.support.iter().zip(&self.probabilities) {
            t.push(vec![s.clone(), fmt_real(*p)]);
        }
        t
    }
}

/// `Π_m = (ρ(1) + ρ(m)) / 2` for an involution `m`.
#[derive(Clone, Debug)]
pub struct InvolutionProjector {
    pub irrep: usize,
    pub m: usize,
    pub matrix: CMat,
}

impl InvolutionProjector {
    pub fn new(group: &FiniteGroup, irrep: &UnitaryIrrep, m: usize) -> Result<Self> {
        if !group.is_involution(m) {
            return Err(Error::NotAnInvolution(m));
        }
        let matrix = (irrep.matrix(group.identity()) + irrep.matrix(m)) * real(0.5);
        Ok(InvolutionProjector {
            irrep: irrep.index,
            m,
            matrix,
        })
    }

    pub fn numeric_rank(&self) -> usize {
        projector_rank(&self.matrix)
    }
}

/// `|H|⁻¹ Σ_{h∈H} ρ(h)`.
pub fn subgroup_projector(group: &FiniteGroup, irrep: &UnitaryIrrep, h: &Subgroup) -> Result<CMat> {
    let members = h.members();
    if members.iter().any(|&x| x >= group.order()) {
        return Err(Error::NotASubgroup("element out of range".into()));
    }
    let mut p = CMat::zeros(irrep.dim(), irrep.dim());
    for &x in members {
        p += irrep.matrix(x);
    }
    Ok(p * real(1.0 / members.len() as f64))
}

/// `rk Π_H^ρ = |H|⁻¹ Σ_{h∈H} χ_ρ(h)`, required to be an integer.
pub fn subgroup_rank(table: &CharacterTable, irrep: usize, h: &Subgroup) -> Result<u64> {
    let s: Complex64 = h.members().iter().map(|&x| table.character_at(irrep, x)).sum();
    exact_integer(s / h.order() as f64, || format!("rank of {} on a subgroup", table.label(irrep)))
}

fn exact_integer(z: Complex64, what: impl FnOnce() -> String) -> Result<u64> {
    let r = z.re.round();
    if (z.re - r).abs() > 1e-6 || z.im.abs() > 1e-6 || r < 0.0 {
        return Err(Error::CorruptedCharacter(format!("{} is {z}", what())));
    }
    Ok(r as u64)
}

/// `P_H(ρ) = d_ρ |H| rk Π_H^ρ / |G|`, exact.
pub fn weak_distribution(table: &CharacterTable, h: &Subgroup) -> Result<SamplingDistribution> {
    let mut numerators = Vec::with_capacity(table.num_irreps());
    for i in 0..table.num_irreps() {
        let rk = subgroup_rank(table, i, h)?;
        numerators.push(table.dim(i) as u64 * h.order() as u64 * rk);
    }
    let denominator = table.order() as u64;
    let total: u64 = numerators.iter().sum();
    if total != denominator {
        return Err(Error::CorruptedCharacter(format!(
            "weak distribution sums to {total}/{denominator}"
        )));
    }
    Ok(SamplingDistribution {
        support: table.irreps().iter().map(|r| r.label.clone()).collect(),
        probabilities: numerators.iter().map(|&k| k as f64 / denominator as f64).collect(),
        numerators: Some(numerators),
        denominator: Some(denominator),
    })
}

/// `rk Π_m = (d_ρ + χ_ρ(m)) / 2`.
pub fn involution_rank(group: &FiniteGroup, table: &CharacterTable, irrep: usize, m: usize) -> Result<u64> {
    if !group.is_involution(m) {
        return Err(Error::NotAnInvolution(m));
    }
    let z = (real(table.dim(irrep) as f64) + table.character_at(irrep, m)) / 2.0;
    exact_integer(z, || format!("(d + χ(m))/2 for {}", table.label(irrep)))
}

fn require_noncentral_involution(group: &FiniteGroup, mu: usize) -> Result<()> {
    if !group.is_involution(mu) {
        return Err(Error::NotAnInvolution(mu));
    }
    if group.is_central(mu) {
        return Err(Error::InvalidArgument(format!("involution {mu} is central")));
    }
    Ok(())
}

/// `t = Σ_ρ d_ρ |χ_ρ(μ)| / |G|`, the weak-sampling L1 distance on `G`.
pub fn weak_l1_base(table: &CharacterTable, mu: usize) -> f64 {
    (0..table.num_irreps())
        .map(|i| table.dim(i) as f64 * table.character_at(i, mu).norm())
        .sum::<f64>()
        / table.order() as f64
}

/// L1 distance between weak sampling for `{1, m}` and for `{1}` on `Gⁿ`,
/// with `m ∈ [μ]ⁿ`: equals `tⁿ`.
pub fn exact_weak_l1_power(table: &CharacterTable, mu: usize, n: u32) -> f64 {
    weak_l1_base(table, mu).powi(n as i32)
}

/// Size of the centralizer of `g`, counted as fixed points of conjugation.
pub fn conjugation_fixed_points(group: &FiniteGroup, g: usize) -> usize {
    group.elements().filter(|&x| group.conjugate(g, x) == g).count()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct WeakL1Row {
    pub n: u32,
    pub l1: f64,
    pub centralizer_bound: f64,
    pub universal_bound: f64,
}

/// Rows `(n, tⁿ, (|C_μ|/|G|)^{n/2}, 2^{-n/2})`.
pub fn weak_l1_curve(group: &FiniteGroup, table: &CharacterTable, mu: usize, ns: &[u32]) -> Result<Vec<WeakL1Row>> {
    require_noncentral_involution(group, mu)?;
    let t = weak_l1_base(table, mu);
    let ratio = conjugation_fixed_points(group, mu) as f64 / group.order() as f64;
    Ok(ns
        .iter()
        .map(|&n| WeakL1Row {
            n,
            l1: t.powi(n as i32),
            centralizer_bound: ratio.powf(n as f64 / 2.0),
            universal_bound: 0.5f64.powf(n as f64 / 2.0),
        })
        .collect())
}

pub fn weak_l1_csv(rows: &[WeakL1Row]) -> CsvTable {
    let mut t = CsvTable::new(["n", "l1", "centralizer_bound", "universal_bound"]);
    for r in rows {
        t.push(vec![
            r.n.to_string(),
            fmt_real(r.l1),
            fmt_real(r.centralizer_bound),
            fmt_real(r.universal_bound),
        ]);
    }
    t
}

/// `a_b / d`, the strong-sampling distribution of the trivial subgroup.
pub fn natural_distribution(frame: &Frame) -> SamplingDistribution {
    let d = frame.dim() as f64;
    SamplingDistribution::from_probabilities(
        (0..frame.len()).map(|i| i.to_string()).collect(),
        frame.weights().iter().map(|a| a / d).collect(),
    )
}

/// `P_{H,ρ}(b) = a_b ‖Π_H^ρ b‖² / rk Π_H^ρ`.
pub fn strong_conditional(
    group: &FiniteGroup,
    irrep: &UnitaryIrrep,
    frame: &Frame,
    h: &Subgroup,
) -> Result<SamplingDistribution> {
    if frame.dim() != irrep.dim() {
        return Err(Error::InvalidArgument("frame dimension differs from irrep".into()));
    }
    let p = subgroup_projector(group, irrep, h)?;
    let rk = projector_rank(&p);
    if rk == 0 {
        return Err(Error::ZeroRank);
    }
    let probabilities = frame
        .vectors()
        .iter()
        .zip(frame.weights())
        .map(|(b, a)| a * (&p * b).norm_squared() / rk as f64)
        .collect();
    Ok(SamplingDistribution::from_probabilities(
        (0..frame.len()).map(|i| i.to_string()).collect(),
        probabilities,
    ))
}

/// Class statistics of `‖Π_m b‖²` against the closed-form expectation and
/// the isotypic variance bound.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExpVarCheck {
    pub expectation: f64,
    pub closed_form: f64,
    pub variance: f64,
    pub variance_bound: f64,
}

impl ExpVarCheck {
    pub fn holds(&self, tol: f64) -> bool {
        (self.expectation - self.closed_form).abs() <= tol && self.variance <= self.variance_bound + tol
    }
}

/// Precomputed data for repeated [`ExpVarCheck`]s of one irrep and one class
/// of involutions.
pub struct ExpVarChecker<'a> {
    irrep: &'a UnitaryIrrep,
    projectors: Vec<CMat>,
    class_members: Vec<CMat>,
    normalized_at_class: Vec<f64>,
    ratio: f64,
}

impl<'a> ExpVarChecker<'a> {
    pub fn new(data: &'a RepresentationData, irrep: usize, class: usize) -> Result<Self> {
        let (group, table) = (&data.group, &data.table);
        let members = &group.conjugacy_classes()[class].members;
        if let Some(&bad) = members.iter().find(|&&m| !group.is_involution(m)) {
            return Err(Error::NotAnInvolution(bad));
        }
        let rho = &data.irreps[irrep];
        let e = group.identity();
        let class_members = members.iter().map(|&m| (rho.matrix(e) + rho.matrix(m)) * real(0.5)).collect();
        let dual = rho.rep().tensor_with_dual();
        let mut projectors = Vec::new();
        let mut normalized_at_class = Vec::new();
        for sigma in 0..table.num_irreps() {
            let p = isotypic_projector(table, sigma, &dual);
            if projector_rank(&p) > 0 {
                projectors.push(p);
                normalized_at_class.push(table.value(sigma, class).re / table.dim(sigma) as f64);
            }
        }
        Ok(ExpVarChecker {
            irrep: rho,
            projectors,
            class_members,
            normalized_at_class,
            ratio: table.value(irrep, class).re / table.dim(irrep) as f64,
        })
    }

    pub fn check(&self, b: &CVec) -> ExpVarCheck {
        let values: Vec<f64> = self.class_members.iter().map(|p| (p * b).norm_squared()).collect();
        let k = values.len() as f64;
        let expectation = values.iter().sum::<f64>() / k;
        let variance = values.iter().map(|x| (x - expectation).powi(2)).sum::<f64>() / k;
        let bb = tensor_with_conjugate(b);
        let variance_bound = 0.25
            * self
                .projectors
                .iter()
                .zip(&self.normalized_at_class)
                .map(|(p, c)| c * (p * &bb).norm_squared())
                .sum::<f64>();
        ExpVarCheck {
            expectation,
            closed_form: 0.5 * b.norm_squared() * (1.0 + self.ratio),
            variance,
            variance_bound,
        }
    }

    pub fn dim(&self) -> usize {
        self.irrep.dim()
    }
}

pub fn expvar_class_check(data: &RepresentationData, irrep: usize, class: usize, b: &CVec) -> Result<ExpVarCheck> {
    Ok(ExpVarChecker::new(data, irrep, class)?.check(b))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ProjectionBoundCheck {
    pub lhs: f64,
    pub dim_l: usize,
    pub holds: bool,
}

/// `Σ_b a_b ‖Π_L (b ⊗ b̄)‖²` against `dim L`, for `L` given by its projector.
pub fn frame_projection_bound_check(frame: &Frame, projector: &CMat) -> ProjectionBoundCheck {
    let lhs = frame
        .vectors()
        .iter()
        .zip(frame.weights())
        .map(|(b, a)| a * (projector * tensor_with_conjugate(b)).norm_squared())
        .sum();
    let dim_l = projector_rank(projector);
    ProjectionBoundCheck {
        lhs,
        dim_l,
        holds: lhs <= dim_l as f64 + 1e-9,
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StrongSimConfig {
    pub n: usize,
    pub trials: usize,
    pub seed: u64,
    pub policy: FramePolicy,
    /// Simulate the trivial hidden subgroup instead of `{1, m}`.
    pub control: bool,
    /// Rate `a` for the per-trial deviation check at threshold `e^{-an}`.
    pub deviation_rate: Option<f64>,
    pub max_dim: usize,
}

impl Default for StrongSimConfig {
    fn default() -> Self {
        StrongSimConfig {
            n: 1,
            trials: 100,
            seed: 0,
            policy: FramePolicy::Standard,
            control: false,
            deviation_rate: None,
            max_dim: DEFAULT_MAX_PRODUCT_DIM,
        }
    }
}

/// Exact deviation statistics of `‖Π_m b‖²` over all of `[μ]ⁿ` for the
/// observed vector `b`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DeviationRecord {
    pub expectation: f64,
    pub closed_form: f64,
    pub variance: f64,
    pub threshold: f64,
    pub violating: usize,
    pub class_size: usize,
    pub fraction: f64,
    pub chebyshev_bound: f64,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TrialRecord {
    pub trial: usize,
    pub irreps: Vec<String>,
    pub dim: usize,
    pub rank: u64,
    pub m: Vec<usize>,
    pub l1: f64,
    pub observed: usize,
    pub deviation: Option<DeviationRecord>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct StrongTvSummary {
    pub group: String,
    pub mu: usize,
    pub n: usize,
    pub policy: String,
    pub control: bool,
    pub trials: usize,
    pub seed: u64,
    pub mean: f64,
    pub median: f64,
    pub min: f64,
    pub max: f64,
    pub std_dev: f64,
    pub deviation_checked: usize,
    pub deviation_failures: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct StrongTvReport {
    pub summary: StrongTvSummary,
    pub trials: Vec<TrialRecord>,
}

impl StrongTvReport {
    pub fn to_csv(&self) -> CsvTable {
        let mut t = CsvTable::new([
            "trial",
            "irreps",
            "dim",
            "rank",
            "l1",
            "observed",
            "expectation",
            "variance",
            "violating_fraction",
            "chebyshev_bound",
            "chebyshev_holds",
        ]);
        for r in &self.trials {
            let dev = r.deviation.as_ref();
            let opt = |f: fn(&DeviationRecord) -> f64| dev.map_or(String::new(), |d| fmt_real(f(d)));
            t.push(vec![
                r.trial.to_string(),
                r.irreps.join("|"),
                r.dim.to_string(),
                r.rank.to_string(),
                fmt_real(r.l1),
                r.observed.to_string(),
                opt(|d| d.expectation),
                opt(|d| d.variance),
                opt(|d| d.fraction),
                opt(|d| d.chebyshev_bound),
                dev.map_or(String::new(), |d| d.holds.to_string()),
            ]);
        }
        t
    }
}

/// Irrep of `Gⁿ` as a tuple of factor indices into `data.irreps`.
struct ProductIrrep<'a> {
    factors: Vec<&'a UnitaryIrrep>,
    dim: usize,
}

impl ProductIrrep<'_> {
    /// `⟨b, ρ⃗(m) b⟩` for a product basis vector with digits `idx`.
    fn basis_expectation(&self, m: &[usize], flat: usize) -> f64 {
        let mut rest = flat;
        let mut value = 1.0;
        for (k, f) in self.factors.iter().enumerate().rev() {
            let d = f.dim();
            let i = rest % d;
            rest /= d;
            value *= f.matrix(m[k])[(i, i)].re;
        }
        value
    }

    fn vector_expectation(&self, m: &[usize], b: &CVec) -> f64 {
        let mats: Vec<&CMat> = self.factors.iter().zip(m).map(|(f, &g)| f.matrix(g)).collect();
        b.dotc(&apply_tensor(&mats, b)).re
    }
}

enum TrialFrame {
    Product,
    Global(Frame),
}

impl TrialFrame {
    fn len(&self, dim: usize) -> usize {
        match self {
            TrialFrame::Product => dim,
            TrialFrame::Global(f) => f.len(),
        }
    }

    fn weight(&self, i: usize) -> f64 {
        match self {
            TrialFrame::Product => 1.0,
            TrialFrame::Global(f) => f.weights()[i],
        }
    }

    /// `⟨b, ρ⃗(m) b⟩` for frame vector `i` (unit norm).
    fn expectation(&self, rho: &ProductIrrep, m: &[usize], i: usize) -> f64 {
        match self {
            TrialFrame::Product => rho.basis_expectation(m, i),
            TrialFrame::Global(f) => rho.vector_expectation(m, &f.vectors()[i]),
        }
    }
}

/// Draws `(ρ⃗, m)` by weak sampling for `H = {1, m}`, `m` uniform in `[μ]ⁿ`,
/// then records `‖P − N‖₁` between the strong-sampling distribution and the
/// natural distribution of the chosen frame.
pub fn empirical_strong_tv(data: &RepresentationData, mu: usize, config: &StrongSimConfig) -> Result<StrongTvReport> {
    let group = &data.group;
    require_noncentral_involution(group, mu)?;
    if config.n == 0 || config.trials == 0 {
        return Err(Error::InvalidArgument("n and trials must be positive".into()));
    }
    let max_d = data.irreps.iter().map(|r| r.dim()).max().unwrap_or(1);
    let cap = match config.policy {
        FramePolicy::Standard => config.max_dim,
        _ => config.max_dim.min(MAX_GLOBAL_FRAME_DIM),
    };
    let worst = (max_d as u64).checked_pow(config.n as u32).unwrap_or(u64::MAX);
    if worst > cap as u64 {
        return Err(Error::GuardExceeded {
            order: worst,
            limit: cap as u64,
        });
    }
    let class = group.conjugacy_classes()[group.class_of(mu)].members.clone();
    let plancherel = WeightedIndex::new(data.irreps.iter().map(|r| (r.dim() * r.dim()) as f64))
        .map_err(|e| Error::InvalidArgument(e.to_string()))?;
    let chi_ratio: Vec<f64> = (0..data.table.num_irreps())
        .map(|i| data.table.character_at(i, mu).re / data.table.dim(i) as f64)
        .collect();

    let records = (0..config.trials)
        .into_par_iter()
        .map(|trial| {
            let mut rng = ChaCha20Rng::seed_from_u64(config.seed);
            rng.set_stream(trial as u64);
            run_trial(data, &class, &plancherel, &chi_ratio, config, trial, &mut rng)
        })
        .collect::<Result<Vec<_>>>()?;

    let mut l1s: Vec<f64> = records.iter().map(|r| r.l1).collect();
    l1s.sort_by(f64::total_cmp);
    let k = l1s.len();
    let mean = l1s.iter().sum::<f64>() / k as f64;
    let median = if k % 2 == 1 { l1s[k / 2] } else { 0.5 * (l1s[k / 2 - 1] + l1s[k / 2]) };
    let var = l1s.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (k.max(2) - 1) as f64;
    let checked: Vec<&DeviationRecord> = records.iter().filter_map(|r| r.deviation.as_ref()).collect();
    Ok(StrongTvReport {
        summary: StrongTvSummary {
            group: group.name().to_string(),
            mu,
            n: config.n,
            policy: config.policy.name(),
            control: config.control,
            trials: config.trials,
            seed: config.seed,
            mean,
            median,
            min: l1s[0],
            max: l1s[k - 1],
            std_dev: var.sqrt(),
            deviation_checked: checked.len(),
            deviation_failures: checked.iter().filter(|d| !d.holds).count(),
        },
        trials: records,
    })
}

fn run_trial(
    data: &RepresentationData,
    class: &[usize],
    plancherel: &WeightedIndex<f64>,
    chi_ratio: &[f64],
    config: &StrongSimConfig,
    trial: usize,
    rng: &mut ChaCha20Rng,
) -> Result<TrialRecord> {
    let n = config.n;
    let indices: Vec<usize> = loop {
        let draw: Vec<usize> = (0..n).map(|_| plancherel.sample(rng)).collect();
        if config.control {
            break draw;
        }
        let ratio: f64 = draw.iter().map(|&i| chi_ratio[i]).product();
        if rng.random::<f64>() < 0.5 * (1.0 + ratio) {
            break draw;
        }
    };
    let m: Vec<usize> = (0..n).map(|_| class[rng.random_range(0..class.len())]).collect();
    let rho = ProductIrrep {
        factors: indices.iter().map(|&i| &data.irreps[i]).collect(),
        dim: indices.iter().map(|&i| data.irreps[i].dim()).product(),
    };
    let d = rho.dim;
    let frame = match config.policy {
        FramePolicy::Standard => TrialFrame::Product,
        policy => TrialFrame::Global(policy.build(rng, d)?),
    };
    let chi_product: f64 = indices
        .iter()
        .map(|&i| data.table.character_at(i, data.group.identity()).re * chi_ratio[i])
        .product();
    let rank = if config.control {
        d as u64
    } else {
        exact_integer(real(0.5 * (d as f64 + chi_product)), || "rank of Π_m on Gⁿ".to_string())?
    };
    if rank == 0 {
        return Err(Error::ZeroRank);
    }

    let count = frame.len(d);
    let mut p = Vec::with_capacity(count);
    let mut l1 = 0.0;
    for i in 0..count {
        let a = frame.weight(i);
        let x = if config.control {
            1.0
        } else {
            0.5 * (1.0 + frame.expectation(&rho, &m, i))
        };
        let pb = a * x / rank as f64;
        l1 += (pb - a / d as f64).abs();
        p.push(pb.max(0.0));
    }
    let observed = WeightedIndex::new(&p)
        .map_err(|e| Error::InvalidArgument(e.to_string()))?
        .sample(rng);

    let deviation = match config.deviation_rate {
        Some(a) if !config.control && class.len().checked_pow(n as u32).is_some_and(|s| s <= MAX_CLASS_ENUMERATION) => {
            let ratio: f64 = indices.iter().map(|&i| chi_ratio[i]).product();
            Some(deviation_record(&rho, &frame, observed, class, n, a, ratio))
        }
        _ => None,
    };

    Ok(TrialRecord {
        trial,
        irreps: indices.iter().map(|&i| data.table.label(i).to_string()).collect(),
        dim: d,
        rank,
        m,
        l1,
        observed,
        deviation,
    })
}

fn deviation_record(
    rho: &ProductIrrep,
    frame: &TrialFrame,
    observed: usize,
    class: &[usize],
    n: usize,
    a: f64,
    chi_ratio: f64,
) -> DeviationRecord {
    let total = class.len().pow(n as u32);
    let mut values = Vec::with_capacity(total);
    let mut digits = vec![0usize; n];
    for _ in 0..total {
        let m: Vec<usize> = digits.iter().map(|&k| class[k]).collect();
        values.push(0.5 * (1.0 + frame.expectation(rho, &m, observed)));
        for slot in digits.iter_mut().rev() {
            *slot += 1;
            if *slot < class.len() {
                break;
            }
            *slot = 0;
        }
    }
    let k = total as f64;
    let expectation = values.iter().sum::<f64>() / k;
    let variance = values.iter().map(|x| (x - expectation).powi(2)).sum::<f64>() / k;
    let threshold = (-a * n as f64).exp();
    let violating = values.iter().filter(|x| (*x - expectation).abs() > threshold).count();
    let fraction = violating as f64 / k;
    let chebyshev_bound = variance / (threshold * threshold);
    DeviationRecord {
        expectation,
        closed_form: 0.5 * (1.0 + chi_ratio),
        variance,
        threshold,
        violating,
        class_size: total,
        fraction,
        chebyshev_bound,
        holds: fraction <= chebyshev_bound + 1e-12,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{make_alternating, make_symmetric};
    use crate::linalg::is_projector;

    fn s3() -> RepresentationData {
        RepresentationData::new(make_symmetric(3).unwrap()).unwrap()
    }

    fn two_dim(data: &RepresentationData) -> usize {
        (0..data.table.num_irreps()).find(|&i| data.table.dim(i) == 2).unwrap()
    }

    #[test]
    fn subgroup_projectors() {
        let d = s3();
        let g = &d.group;
        let t = d.group.default_involution().unwrap();
        let h = g.subgroup(&[g.identity(), t]).unwrap();
        let rho = &d.irreps[two_dim(&d)];
        let p = subgroup_projector(g, rho, &h).unwrap();
        assert!(is_projector(&p, 1e-10));
        assert_eq!(projector_rank(&p), 1);
        let triv = subgroup_projector(g, rho, &g.trivial_subgroup()).unwrap();
        assert!(crate::linalg::max_abs_diff(&triv, &identity(2)) < 1e-12);
        let whole = subgroup_projector(g, rho, &g.whole()).unwrap();
        assert!(whole.norm() < 1e-12);
    }

    #[test]
    fn weak_distributions() {
        let d = s3();
        let g = &d.group;
        let t = g.default_involution().unwrap();
        let h = g.subgroup(&[g.identity(), t]).unwrap();
        let w = weak_distribution(&d.table, &h).unwrap();
        assert_eq!(w.numerators.as_ref().unwrap(), &vec![2, 0, 4]);
        let plancherel = weak_distribution(&d.table, &g.trivial_subgroup()).unwrap();
        assert_eq!(plancherel.numerators.unwrap(), vec![1, 1, 4]);
        let whole = weak_distribution(&d.table, &g.whole()).unwrap();
        assert_eq!(whole.numerators.unwrap(), vec![6, 0, 0]);
    }

    #[test]
    fn ranks() {
        let d = s3();
        let t = d.group.default_involution().unwrap();
        let ranks: Vec<u64> = (0..3).map(|i| involution_rank(&d.group, &d.table, i, t).unwrap()).collect();
        assert_eq!(ranks, vec![1, 0, 1]);
        assert!(matches!(involution_rank(&d.group, &d.table, 0, 0), Err(Error::NotAnInvolution(0))));
        for (i, irrep) in d.irreps.iter().enumerate() {
            let p = InvolutionProjector::new(&d.group, irrep, t).unwrap();
            assert_eq!(p.numeric_rank() as u64, ranks[i]);
        }
    }

    #[test]
    fn weak_l1() {
        let d = s3();
        let t = d.group.default_involution().unwrap();
        assert!((exact_weak_l1_power(&d.table, t, 1) - 1.0 / 3.0).abs() < 1e-12);
        assert_eq!(conjugation_fixed_points(&d.group, t), 2);
        assert_eq!(conjugation_fixed_points(&d.group, 0), 6);
        let rows = weak_l1_curve(&d.group, &d.table, t, &[4]).unwrap();
        assert!((rows[0].l1 - 1.0 / 81.0).abs() < 1e-15);
        assert!((rows[0].centralizer_bound - 1.0 / 9.0).abs() < 1e-15);
    }

    #[test]
    fn strong_conditionals() {
        let d = s3();
        let g = &d.group;
        let rho = &d.irreps[two_dim(&d)];
        let frame = Frame::standard(2);
        let nat = strong_conditional(g, rho, &frame, &g.trivial_subgroup()).unwrap();
        assert!(nat.probabilities.iter().all(|p| (p - 0.5).abs() < 1e-12));
        let t = g.default_involution().unwrap();
        let h = g.subgroup(&[g.identity(), t]).unwrap();
        let p = subgroup_projector(g, rho, &h).unwrap();
        let (_, vecs) = hermitian_eigen_sorted(&p);
        let eig = Frame::from_unitary(&vecs);
        let cond = strong_conditional(g, rho, &eig, &h).unwrap();
        assert!(cond.probabilities[0].abs() < 1e-12 && (cond.probabilities[1] - 1.0).abs() < 1e-12);
        let sign = &d.irreps[1];
        assert!(matches!(
            strong_conditional(g, sign, &Frame::standard(1), &h),
            Err(Error::ZeroRank)
        ));
    }

    #[test]
    fn frames_are_complete() {
        let mut rng = ChaCha20Rng::seed_from_u64(3);
        for d in 1..6 {
            assert!(Frame::random_unitary(&mut rng, d).completeness_error() < 1e-12);
            assert!(Frame::union_of_bases(&mut rng, d, 3).unwrap().completeness_error() < 1e-12);
            assert!(Frame::random_overcomplete(&mut rng, d, 4 * d).unwrap().completeness_error() < 1e-10);
        }
        assert!(Frame::new(vec![CVec::from_element(2, real(0.0))], vec![1.0]).is_err());
        assert_eq!("bases:3".parse::<FramePolicy>().unwrap(), FramePolicy::UnionOfBases { bases: 3 });
        assert!("weird".parse::<FramePolicy>().is_err());
    }

    #[test]
    fn expvar_examples() {
        let d = s3();
        let t = d.group.default_involution().unwrap();
        let class = d.group.class_of(t);
        let e1 = CVec::from_vec(vec![real(1.0), real(0.0)]);
        let r = expvar_class_check(&d, two_dim(&d), class, &e1).unwrap();
        assert!((r.expectation - 0.5).abs() < 1e-12);
        assert!(r.holds(1e-9));
        let triv = expvar_class_check(&d, 0, class, &CVec::from_element(1, real(1.0))).unwrap();
        assert!((triv.expectation - 1.0).abs() < 1e-12 && triv.variance.abs() < 1e-15);
        assert!(expvar_class_check(&d, 0, d.group.class_of(1), &CVec::from_element(1, real(1.0))).is_err()
            || d.group.is_involution(1));
    }

    #[test]
    fn a5_expectation() {
        let d = RepresentationData::new(make_alternating(5).unwrap()).unwrap();
        let mu = d.group.default_involution().unwrap();
        let five = (0..d.table.num_irreps()).find(|&i| d.table.dim(i) == 5).unwrap();
        let mut rng = ChaCha20Rng::seed_from_u64(11);
        let b = random_unit_vector(&mut rng, 5);
        let r = expvar_class_check(&d, five, d.group.class_of(mu), &b).unwrap();
        assert!((r.expectation - 0.6).abs() < 1e-9);
        assert!(r.holds(1e-9));
    }

    #[test]
    fn projection_bound() {
        let d = s3();
        let rho = &d.irreps[two_dim(&d)];
        let dual = rho.rep().tensor_with_dual();
        let full = identity(4);
        let std = frame_projection_bound_check(&Frame::standard(2), &full);
        assert!((std.lhs - 2.0).abs() < 1e-12 && std.dim_l == 4);
        let zero = frame_projection_bound_check(&Frame::standard(2), &CMat::zeros(4, 4));
        assert_eq!(zero.lhs, 0.0);
        let mut rng = ChaCha20Rng::seed_from_u64(5);
        let frame = Frame::random_overcomplete(&mut rng, 2, 500).unwrap();
        let trivial = isotypic_projector(&d.table, 0, &dual);
        let r = frame_projection_bound_check(&frame, &trivial);
        assert!(r.holds && r.dim_l == 1);
    }

    #[test]
    fn strong_sim_n1_closed_form() {
        let d = s3();
        let t = d.group.default_involution().unwrap();
        let config = StrongSimConfig {
            n: 1,
            trials: 50,
            seed: 9,
            ..Default::default()
        };
        let report = empirical_strong_tv(&d, t, &config).unwrap();
        let two = two_dim(&d);
        for r in &report.trials {
            if r.irreps[0] == d.table.label(two) {
                let mat = d.irreps[two].matrix(r.m[0]);
                let x = |i: usize| 0.5 * (1.0 + mat[(i, i)].re);
                let want = (x(0) - 0.5).abs() + (x(1) - 0.5).abs();
                assert!((r.l1 - want).abs() < 1e-12);
            }
            assert_ne!(r.irreps[0], d.table.label(1));
        }
        let control = empirical_strong_tv(&d, t, &StrongSimConfig { control: true, ..config.clone() }).unwrap();
        assert!(control.trials.iter().all(|r| r.l1.abs() < 1e-15));
        assert_eq!(report, empirical_strong_tv(&d, t, &config).unwrap());
    }
}
