//! Matrix Lie algebras and their coadjoint invariants.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::jordan::jordan_chevalley;
use crate::linalg::{primitive, Matrix, Subspace};
use crate::scalar::{int, Scalar};

type SparseRow = Vec<(usize, Scalar)>;

/// A Lie algebra of `ambient × ambient` matrices with a fixed ordered basis.
///
/// Structure constants are computed once at construction, which also checks that
/// the span is closed under the commutator.
#[derive(Clone, Debug)]
pub struct MatrixLieAlgebra {
    ambient: usize,
    basis: Vec<Matrix>,
    span: Subspace,
    span_rows: Vec<SparseRow>,
    /// Row `r` expresses canonical span row `r` in the algebra basis.
    to_basis: Vec<SparseRow>,
    /// `structure[i * dim + j]` holds the nonzero `(k, c_ijk)`.
    structure: Vec<SparseRow>,
}

fn sparse(v: &[Scalar]) -> SparseRow {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect()
}

fn sparse_rows(m: &Matrix) -> Vec<Vec<(usize, Scalar)>> {
    (0..m.rows()).map(|i| sparse(m.row(i))).collect()
}

/// `a b - b a` for matrices given as sparse rows, flattened row-major.
fn sparse_commutator(n: usize, a: &[SparseRow], b: &[SparseRow]) -> Vec<Scalar> {
    let mut out = vec![Scalar::zero(); n * n];
    for (i, row) in a.iter().enumerate() {
        for (k, x) in row {
            for (j, y) in &b[*k] {
                out[i * n + j] += x * y;
            }
        }
    }
    for (i, row) in b.iter().enumerate() {
        for (k, x) in row {
            for (j, y) in &a[*k] {
                out[i * n + j] -= x * y;
            }
        }
    }
    out
}

impl MatrixLieAlgebra {
    pub fn new(ambient: usize, basis: Vec<Matrix>) -> Result<Self> {
        for m in &basis {
            if m.rows() != ambient || m.cols() != ambient {
                return Err(Error::DimensionMismatch { expected: ambient, found: m.rows().max(m.cols()) });
            }
        }
        let dim = basis.len();
        let n2 = ambient * ambient;
        let flat: Vec<Vec<Scalar>> = basis.iter().map(|m| m.entries().to_vec()).collect();
        let stacked = Matrix::from_rows(n2, &flat)?.hstack(&Matrix::identity(dim))?;
        let (reduced, pivots) = stacked.rref();
        if pivots.iter().filter(|&&p| p < n2).count() != dim {
            return Err(Error::DependentBasis);
        }
        let span = Subspace::row_space(&reduced.column_block(0, n2));
        let span_rows = sparse_rows(span.basis());
        let to_basis = sparse_rows(&reduced.column_block(n2, n2 + dim));
        let mut alg = MatrixLieAlgebra {
            ambient,
            basis,
            span,
            span_rows,
            to_basis,
            structure: vec![Vec::new(); dim * dim],
        };
        let rows: Vec<Vec<SparseRow>> = alg.basis.iter().map(sparse_rows).collect();
        for i in 0..dim {
            for j in i + 1..dim {
                let v = sparse_commutator(ambient, &rows[i], &rows[j]);
                let c = alg.flat_coordinates(&v).ok_or(Error::NotClosed(i, j))?;
                let neg = c.iter().map(|(k, x)| (*k, -x)).collect();
                alg.structure[i * dim + j] = c;
                alg.structure[j * dim + i] = neg;
            }
        }
        Ok(alg)
    }

    /// Builds the algebra spanned by the given coordinate vectors of `self`.
    pub fn subalgebra(&self, coords: &[Vec<Scalar>]) -> Result<MatrixLieAlgebra> {
        let basis = coords.iter().map(|c| self.element(c)).collect::<Result<Vec<_>>>()?;
        MatrixLieAlgebra::new(self.ambient, basis)
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Matrix] {
        &self.basis
    }

    /// Span of the basis inside the flattened `ambient²` space.
    pub fn matrix_span(&self) -> &Subspace {
        &self.span
    }

    /// Sparse coordinates of a flattened matrix, or `None` if outside the span.
    fn flat_coordinates(&self, v: &[Scalar]) -> Option<SparseRow> {
        let pivots = self.span.pivots();
        let mut residual = v.to_vec();
        let mut out = vec![Scalar::zero(); self.dim()];
        for (r, &p) in pivots.iter().enumerate() {
            let c = v[p].clone();
            if c.is_zero() {
                continue;
            }
            for (j, b) in &self.span_rows[r] {
                residual[*j] -= &c * b;
            }
            for (k, t) in &self.to_basis[r] {
                out[*k] += &c * t;
            }
        }
        residual.iter().all(Zero::is_zero).then(|| sparse(&out))
    }

    /// Coordinates of `m` in the basis, or `None` if `m` is not in the algebra.
    pub fn coordinates(&self, m: &Matrix) -> Result<Option<Vec<Scalar>>> {
        if m.rows() != self.ambient || m.cols() != self.ambient {
            return Err(Error::DimensionMismatch { expected: self.ambient, found: m.rows() });
        }
        Ok(self.flat_coordinates(m.entries()).map(|s| {
            let mut v = vec![Scalar::zero(); self.dim()];
            for (k, x) in s {
                v[k] = x;
            }
            v
        }))
    }

    pub fn contains(&self, m: &Matrix) -> Result<bool> {
        Ok(self.coordinates(m)?.is_some())
    }

    /// The matrix `Σ coords[i] X_i`.
    pub fn element(&self, coords: &[Scalar]) -> Result<Matrix> {
        if coords.len() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: coords.len() });
        }
        let mut m = Matrix::zeros(self.ambient, self.ambient);
        for (c, x) in coords.iter().zip(&self.basis) {
            if !c.is_zero() {
                m = &m + &x.scale(c);
            }
        }
        Ok(m)
    }

    /// Nonzero `(k, c_ijk)` with `[X_i, X_j] = Σ_k c_ijk X_k`.
    pub fn structure_constants(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.structure[i * self.dim() + j]
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> Scalar {
        self.structure_constants(i, j)
            .iter()
            .find(|(kk, _)| *kk == k)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Scalar::zero)
    }

    /// Bracket of two elements given in coordinates.
    pub fn bracket_coords(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let dim = self.dim();
        let mut out = vec![Scalar::zero(); dim];
        for (i, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, y) in b.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                let xy = x * y;
                for (k, c) in &self.structure[i * dim + j] {
                    out[*k] += &xy * c;
                }
            }
        }
        out
    }

    pub fn is_abelian(&self) -> bool {
        self.structure.iter().all(Vec::is_empty)
    }

    /// Jacobi identity on the structure constants.
    pub fn satisfies_jacobi(&self) -> bool {
        let dim = self.dim();
        let unit = |i: usize| {
            let mut v = vec![Scalar::zero(); dim];
            v[i] = int(1);
            v
        };
        let brackets: Vec<Vec<Scalar>> = (0..dim * dim)
            .map(|ij| {
                let mut v = vec![Scalar::zero(); dim];
                for (k, c) in &self.structure[ij] {
                    v[*k] = c.clone();
                }
                v
            })
            .collect();
        for i in 0..dim {
            for j in i + 1..dim {
                for k in j + 1..dim {
                    let a = self.bracket_coords(&unit(i), &brackets[j * dim + k]);
                    let b = self.bracket_coords(&unit(j), &brackets[k * dim + i]);
                    let c = self.bracket_coords(&unit(k), &brackets[i * dim + j]);
                    if a.iter().zip(&b).zip(&c).any(|((x, y), z)| !(x + y + z).is_zero()) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Rows `(basis vector, k)` of the linear map `X ↦ [X, s]` for each `s` in `vectors`.
    #[allow(clippy::needless_range_loop)]
    fn commutant_equations(&self, vectors: &[Vec<Scalar>]) -> Matrix {
        let dim = self.dim();
        let mut rows: Vec<Vec<Scalar>> = Vec::new();
        for s in vectors {
            let mut block = vec![vec![Scalar::zero(); dim]; dim];
            for i in 0..dim {
                for (m, sm) in s.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                    for (k, c) in &self.structure[i * dim + m] {
                        block[*k][i] += sm * c;
                    }
                }
            }
            rows.extend(block.into_iter().filter(|r| r.iter().any(|x| !x.is_zero())));
        }
        Matrix::from_rows(dim, &rows).expect("rows have algebra length")
    }
}

/// `g(X_i) = coeffs[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinearForm {
    #[serde(with = "crate::scalar::serde_fraction_vec")]
    pub coeffs: Vec<Scalar>,
}

impl LinearForm {
    pub fn new(coeffs: Vec<Scalar>) -> Self {
        LinearForm { coeffs }
    }

    pub fn zero(dim: usize) -> Self {
        LinearForm { coeffs: vec![Scalar::zero(); dim] }
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn eval(&self, coords: &[Scalar]) -> Scalar {
        self.coeffs.iter().zip(coords).map(|(a, b)| a * b).sum()
    }

    /// Uniform integer coefficients in `[-bound, bound]`.
    pub fn random<R: Rng>(dim: usize, bound: u64, rng: &mut R) -> Self {
        let b = bound as i64;
        LinearForm { coeffs: (0..dim).map(|_| int(rng.gen_range(-b..=b))).collect() }
    }
}

pub const DEFAULT_SEED: u64 = 20_120_507;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SamplingConfig {
    pub seed: u64,
    pub trials: usize,
    pub coeff_bound: u64,
}

impl Default for SamplingConfig {
    fn default() -> Self {
        SamplingConfig { seed: DEFAULT_SEED, trials: 5, coeff_bound: 100 }
    }
}

impl SamplingConfig {
    pub fn with_seed(seed: u64) -> Self {
        SamplingConfig { seed, ..Self::default() }
    }

    pub fn validate(&self) -> Result<()> {
        if self.trials == 0 {
            return Err(Error::InvalidParameter("trials must be at least 1".into()));
        }
        if self.coeff_bound == 0 {
            return Err(Error::InvalidParameter("coefficient bound must be positive".into()));
        }
        Ok(())
    }
}

fn check_form(l: &MatrixLieAlgebra, g: &LinearForm) -> Result<()> {
    if g.dim() != l.dim() {
        return Err(Error::DimensionMismatch { expected: l.dim(), found: g.dim() });
    }
    Ok(())
}

pub fn bracket(l: &MatrixLieAlgebra, x: &Matrix, y: &Matrix) -> Result<Matrix> {
    for m in [x, y] {
        if m.rows() != l.ambient() || m.cols() != l.ambient() {
            return Err(Error::DimensionMismatch { expected: l.ambient(), found: m.rows() });
        }
    }
    x.commutator(y)
}

/// `M[i][j] = g([X_i, X_j])`.
pub fn kirillov_matrix(l: &MatrixLieAlgebra, g: &LinearForm) -> Result<Matrix> {
    check_form(l, g)?;
    let dim = l.dim();
    let mut m = Matrix::zeros(dim, dim);
    for i in 0..dim {
        for j in i + 1..dim {
            let v: Scalar = l.structure_constants(i, j).iter().map(|(k, c)| c * &g.coeffs[*k]).sum();
            m[(j, i)] = -v.clone();
            m[(i, j)] = v;
        }
    }
    Ok(m)
}

/// Stabilizer of `g` in algebra coordinates.
pub fn stabilizer(l: &MatrixLieAlgebra, g: &LinearForm) -> Result<Subspace> {
    Ok(kirillov_matrix(l, g)?.kernel())
}

pub fn center(l: &MatrixLieAlgebra) -> Subspace {
    let dim = l.dim();
    let units: Vec<Vec<Scalar>> = (0..dim)
        .map(|i| {
            let mut v = vec![Scalar::zero(); dim];
            v[i] = int(1);
            v
        })
        .collect();
    l.commutant_equations(&units).kernel()
}

pub fn is_commutative(l: &MatrixLieAlgebra, s: &Subspace) -> bool {
    let vs = s.basis_vectors();
    for (a, x) in vs.iter().enumerate() {
        for y in &vs[a + 1..] {
            if l.bracket_coords(x, y).iter().any(|c| !c.is_zero()) {
                return false;
            }
        }
    }
    true
}

/// Matrices of the semisimple parts of a basis of a commutative subspace.
///
/// Basis vectors are rescaled to primitive integer vectors first; the span of the
/// parts is unchanged and the decomposition works on smaller numbers.
pub fn semisimple_parts(l: &MatrixLieAlgebra, s: &Subspace) -> Result<Vec<Matrix>> {
    if !is_commutative(l, s) {
        return Err(Error::NonCommutative);
    }
    s.basis_vectors()
        .iter()
        .map(|v| Ok(jordan_chevalley(&l.element(&primitive(v))?).semisimple))
        .collect()
}

/// Dimension of the span of semisimple parts of a commutative subspace.
pub fn torus_dimension(l: &MatrixLieAlgebra, s: &Subspace) -> Result<usize> {
    let parts = semisimple_parts(l, s)?;
    let n2 = l.ambient() * l.ambient();
    Ok(Matrix::from_vec(parts.len(), n2, parts.into_iter().flat_map(Matrix::into_entries).collect())?.rank())
}

/// `[L, stab(g)] ∩ stab(g)` is zero.
pub fn is_stable_form(l: &MatrixLieAlgebra, g: &LinearForm) -> Result<bool> {
    let stab = stabilizer(l, g)?;
    Ok(tauvel_yu(l, &stab))
}

fn tauvel_yu(l: &MatrixLieAlgebra, stab: &Subspace) -> bool {
    if stab.dim() == 0 {
        return true;
    }
    let dim = l.dim();
    let mut images = Vec::new();
    for y in stab.basis_vectors() {
        let y = primitive(&y);
        for i in 0..dim {
            let mut e = vec![Scalar::zero(); dim];
            e[i] = int(1);
            images.push(l.bracket_coords(&e, &y));
        }
    }
    // dim(D ∩ S) = dim D + dim S - dim(D + S)
    let derived = Matrix::from_rows(dim, &images).expect("coordinate vectors have algebra length");
    let both = derived.vstack(stab.basis()).expect("same width");
    derived.rank() + stab.dim() == both.rank()
}

#[derive(Clone, Debug)]
pub struct StabilizerReport {
    pub form: LinearForm,
    pub stabilizer: Subspace,
    pub index_witness: usize,
    pub torus_dim: usize,
    pub unipotent_dim: usize,
    pub stable_form: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StabilityVerdict {
    Stable,
    NotStable,
    Inconclusive,
}

/// Everything learned from one seeded batch of random forms.
#[derive(Clone, Debug)]
pub struct CoadjointSurvey {
    pub dim: usize,
    pub index: usize,
    /// Reports at the samples of minimal stabilizer dimension, in draw order.
    pub regular: Vec<StabilizerReport>,
    pub draws: usize,
    pub stability: StabilityVerdict,
}

impl CoadjointSurvey {
    pub fn rank(&self) -> usize {
        self.regular.iter().map(|r| r.torus_dim).max().unwrap_or(0)
    }

    /// Report with the largest torus; first in draw order on ties.
    pub fn strongly_regular(&self) -> &StabilizerReport {
        let best = self.rank();
        self.regular.iter().find(|r| r.torus_dim == best).expect("at least one regular sample")
    }

    pub fn unipotent_dim(&self) -> usize {
        self.strongly_regular().unipotent_dim
    }

    /// Regular samples disagreeing on torus dimension.
    pub fn torus_varies(&self) -> bool {
        self.regular.iter().any(|r| r.torus_dim != self.regular[0].torus_dim)
    }
}

struct Sample {
    form: LinearForm,
    stabilizer: Subspace,
    round: usize,
    commutative: Option<bool>,
    stable: Option<bool>,
}

/// Samples random forms in rounds of `cfg.trials`.
///
/// A round ends the search when some regular sample is stable, or when every
/// sample of the round is regular and none is stable. A regular stabilizer that
/// is not commutative means the minimum was not attained, so sampling continues.
/// After `cfg.trials` extra rounds the verdict is inconclusive, or an error if no
/// trustworthy minimum was found.
pub fn survey(l: &MatrixLieAlgebra, cfg: &SamplingConfig) -> Result<CoadjointSurvey> {
    cfg.validate()?;
    let dim = l.dim();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut samples: Vec<Sample> = Vec::new();
    let max_rounds = cfg.trials + 1;
    let mut verdict = None;
    let mut settled_min = false;
    for round in 0..max_rounds {
        for _ in 0..cfg.trials {
            let form = LinearForm::random(dim, cfg.coeff_bound, &mut rng);
            let stabilizer = stabilizer(l, &form)?;
            samples.push(Sample { form, stabilizer, round, commutative: None, stable: None });
        }
        let min = samples.iter().map(|s| s.stabilizer.dim()).min().expect("nonempty");
        let mut all_commutative = true;
        for s in samples.iter_mut().filter(|s| s.stabilizer.dim() == min) {
            let c = *s.commutative.get_or_insert_with(|| is_commutative(l, &s.stabilizer));
            all_commutative &= c;
            if c && s.stable.is_none() {
                s.stable = Some(tauvel_yu(l, &s.stabilizer));
            }
        }
        if !all_commutative {
            continue;
        }
        settled_min = true;
        let regular = || samples.iter().filter(|s| s.stabilizer.dim() == min);
        if regular().any(|s| s.stable == Some(true)) {
            verdict = Some(StabilityVerdict::Stable);
            break;
        }
        if samples.iter().filter(|s| s.round == round).all(|s| s.stabilizer.dim() == min) {
            verdict = Some(StabilityVerdict::NotStable);
            break;
        }
    }
    if !settled_min {
        return Err(Error::SamplingDegenerate(format!(
            "regular stabilizers stayed non-commutative after {} samples",
            samples.len()
        )));
    }
    let min = samples.iter().map(|s| s.stabilizer.dim()).min().expect("nonempty");
    let draws = samples.len();
    let mut regular = Vec::new();
    for s in samples.into_iter().filter(|s| s.stabilizer.dim() == min) {
        let torus_dim = torus_dimension(l, &s.stabilizer)?;
        regular.push(StabilizerReport {
            index_witness: s.stabilizer.dim(),
            unipotent_dim: s.stabilizer.dim() - torus_dim,
            torus_dim,
            stable_form: s.stable.unwrap_or(false),
            form: s.form,
            stabilizer: s.stabilizer,
        });
    }
    Ok(CoadjointSurvey {
        dim,
        index: min,
        regular,
        draws,
        stability: verdict.unwrap_or(StabilityVerdict::Inconclusive),
    })
}

/// `dim L - max rank of the Kirillov form` over `cfg.trials` samples.
pub fn index(l: &MatrixLieAlgebra, cfg: &SamplingConfig) -> Result<usize> {
    cfg.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut best = l.dim();
    for _ in 0..cfg.trials {
        let g = LinearForm::random(l.dim(), cfg.coeff_bound, &mut rng);
        best = best.min(l.dim() - kirillov_matrix(l, &g)?.rank());
    }
    Ok(best)
}

pub fn rank_cartan_duflo(l: &MatrixLieAlgebra, cfg: &SamplingConfig) -> Result<usize> {
    Ok(survey(l, cfg)?.rank())
}

/// Dimension of the nilpotent part of the center.
pub fn unipotent_center_dim(l: &MatrixLieAlgebra) -> Result<usize> {
    let z = center(l);
    Ok(z.dim() - torus_dimension(l, &z)?)
}

pub fn is_quasi_reductive(l: &MatrixLieAlgebra, cfg: &SamplingConfig) -> Result<bool> {
    let s = survey(l, cfg)?;
    Ok(s.index == s.rank() + unipotent_center_dim(l)?)
}

pub fn stability_verdict(l: &MatrixLieAlgebra, cfg: &SamplingConfig) -> Result<StabilityVerdict> {
    Ok(survey(l, cfg)?.stability)
}

/// Stability of `L`; an inconclusive sampling run is an error.
pub fn is_stable(l: &MatrixLieAlgebra, cfg: &SamplingConfig) -> Result<bool> {
    match stability_verdict(l, cfg)? {
        StabilityVerdict::Stable => Ok(true),
        StabilityVerdict::NotStable => Ok(false),
        StabilityVerdict::Inconclusive => Err(Error::SamplingDegenerate(
            "stability undecided: no stable regular sample and stabilizer dimensions varied".into(),
        )),
    }
}

/// `{X ∈ L : [X, s] = 0 for all s ∈ S}` as an algebra in its own right.
pub fn centralizer(l: &MatrixLieAlgebra, s: &Subspace) -> Result<MatrixLieAlgebra> {
    if s.ambient_dim() != l.dim() {
        return Err(Error::DimensionMismatch { expected: l.dim(), found: s.ambient_dim() });
    }
    let kernel = l.commutant_equations(&s.basis_vectors()).kernel();
    l.subalgebra(&kernel.basis_vectors())
}

/// `{X ∈ L : tr(X J_k) = 0 for all k}`.
pub fn trace_orthogonal_ideal(l: &MatrixLieAlgebra, j: &Subspace) -> Result<MatrixLieAlgebra> {
    if j.ambient_dim() != l.dim() {
        return Err(Error::DimensionMismatch { expected: l.dim(), found: j.ambient_dim() });
    }
    let js = j.basis_vectors().iter().map(|v| l.element(v)).collect::<Result<Vec<_>>>()?;
    let gram: Vec<Vec<Scalar>> =
        js.iter().map(|a| js.iter().map(|b| (a * b).trace()).collect()).collect();
    if Matrix::from_rows(js.len(), &gram)?.rank() != js.len() {
        return Err(Error::DegenerateTraceForm);
    }
    let rows: Vec<Vec<Scalar>> =
        js.iter().map(|jk| l.basis().iter().map(|x| (x * jk).trace()).collect()).collect();
    let kernel = Matrix::from_rows(l.dim(), &rows)?.kernel();
    l.subalgebra(&kernel.basis_vectors())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gl(n: usize) -> MatrixLieAlgebra {
        let basis = (0..n).flat_map(|i| (0..n).map(move |j| Matrix::unit(n, i, j))).collect();
        MatrixLieAlgebra::new(n, basis).unwrap()
    }

    fn diagonal(n: usize) -> MatrixLieAlgebra {
        MatrixLieAlgebra::new(n, (0..n).map(|i| Matrix::unit(n, i, i)).collect()).unwrap()
    }

    fn strictly_upper(n: usize) -> MatrixLieAlgebra {
        let basis = (0..n).flat_map(|i| (i + 1..n).map(move |j| Matrix::unit(n, i, j))).collect();
        MatrixLieAlgebra::new(n, basis).unwrap()
    }

    fn cfg() -> SamplingConfig {
        SamplingConfig::default()
    }

    #[test]
    fn bracket_basics() {
        let l = gl(2);
        let x = Matrix::from_i64(2, 2, &[1, 2, 3, 4]);
        assert!(bracket(&l, &x, &x).unwrap().is_zero());
        let e12 = Matrix::unit(2, 0, 1);
        let e21 = Matrix::unit(2, 1, 0);
        assert_eq!(bracket(&l, &e12, &e21).unwrap(), Matrix::from_i64(2, 2, &[1, 0, 0, -1]));
        assert!(matches!(bracket(&l, &Matrix::identity(3), &x), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn construction_rejects_bad_bases() {
        let dep = vec![Matrix::unit(2, 0, 1), Matrix::unit(2, 0, 1).scale(&int(3))];
        assert!(matches!(MatrixLieAlgebra::new(2, dep), Err(Error::DependentBasis)));
        let open = vec![Matrix::unit(2, 0, 1), Matrix::unit(2, 1, 0)];
        assert!(matches!(MatrixLieAlgebra::new(2, open), Err(Error::NotClosed(0, 1))));
    }

    #[test]
    fn structure_constants_of_gl2() {
        let l = gl(2);
        // Basis E11, E12, E21, E22; [E12, E21] = E11 - E22.
        assert_eq!(l.structure_constant(1, 2, 0), int(1));
        assert_eq!(l.structure_constant(1, 2, 3), int(-1));
        assert_eq!(l.structure_constant(2, 1, 0), int(-1));
        assert!(l.satisfies_jacobi());
    }

    #[test]
    fn kirillov_of_zero_and_abelian() {
        let l = gl(3);
        assert!(kirillov_matrix(&l, &LinearForm::zero(9)).unwrap().is_zero());
        let d = diagonal(3);
        let g = LinearForm::new(vec![int(4), int(-1), int(7)]);
        assert!(kirillov_matrix(&d, &g).unwrap().is_zero());
        assert!(matches!(kirillov_matrix(&d, &LinearForm::zero(2)), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn stabilizer_of_zero_is_everything() {
        let l = gl(2);
        assert_eq!(stabilizer(&l, &LinearForm::zero(4)).unwrap(), Subspace::full(4));
    }

    #[test]
    fn abelian_invariants() {
        let d = diagonal(4);
        assert_eq!(index(&d, &cfg()).unwrap(), 4);
        assert_eq!(rank_cartan_duflo(&d, &cfg()).unwrap(), 4);
        assert_eq!(center(&d), Subspace::full(4));
        assert!(is_stable(&d, &cfg()).unwrap());
        assert!(is_quasi_reductive(&d, &cfg()).unwrap());
    }

    #[test]
    fn gl_invariants() {
        for n in 1..=3 {
            let l = gl(n);
            assert_eq!(index(&l, &cfg()).unwrap(), n);
            assert_eq!(rank_cartan_duflo(&l, &cfg()).unwrap(), n);
            assert!(is_quasi_reductive(&l, &cfg()).unwrap());
            assert!(is_stable(&l, &cfg()).unwrap());
        }
        let z = center(&gl(2));
        let id = gl(2).coordinates(&Matrix::identity(2)).unwrap().unwrap();
        assert_eq!(z, Subspace::span(4, &[id]).unwrap());
    }

    #[test]
    fn heisenberg_index_is_its_central_unipotent_part() {
        let h = strictly_upper(3);
        assert_eq!(index(&h, &cfg()).unwrap(), 1);
        assert_eq!(rank_cartan_duflo(&h, &cfg()).unwrap(), 0);
        assert_eq!(unipotent_center_dim(&h).unwrap(), 1);
        // Index equals the central unipotent dimension, so it is quasi-reductive.
        assert!(is_quasi_reductive(&h, &cfg()).unwrap());
        assert!(is_stable(&h, &cfg()).unwrap());
    }

    #[test]
    fn torus_dimension_cases() {
        let h = strictly_upper(2);
        assert_eq!(torus_dimension(&h, &Subspace::full(1)).unwrap(), 0);
        let d = diagonal(2);
        let line = Subspace::span(2, &[vec![int(1), int(0)]]).unwrap();
        assert_eq!(torus_dimension(&d, &line).unwrap(), 1);
        assert!(matches!(torus_dimension(&gl(2), &Subspace::full(4)), Err(Error::NonCommutative)));
    }

    #[test]
    fn centralizer_cases() {
        let l = gl(3);
        assert_eq!(centralizer(&l, &Subspace::zero(9)).unwrap().dim(), 9);
        let d = l.coordinates(&Matrix::from_i64(3, 3, &[1, 0, 0, 0, 2, 0, 0, 0, 5])).unwrap().unwrap();
        let c = centralizer(&l, &Subspace::span(9, &[d]).unwrap()).unwrap();
        assert_eq!(c.dim(), 3);
        for i in 0..3 {
            assert!(c.contains(&Matrix::unit(3, i, i)).unwrap());
        }
    }

    #[test]
    fn trace_orthogonal_cases() {
        let d = diagonal(2);
        assert_eq!(trace_orthogonal_ideal(&d, &Subspace::zero(2)).unwrap().dim(), 2);
        let id = Subspace::span(2, &[vec![int(1), int(1)]]).unwrap();
        let i = trace_orthogonal_ideal(&d, &id).unwrap();
        assert_eq!(i.dim(), 1);
        assert!(i.contains(&Matrix::from_i64(2, 2, &[1, 0, 0, -1])).unwrap());
        let h = strictly_upper(2);
        assert!(matches!(trace_orthogonal_ideal(&h, &Subspace::full(1)), Err(Error::DegenerateTraceForm)));
    }

    #[test]
    fn survey_is_reproducible() {
        let l = strictly_upper(4);
        let a = survey(&l, &cfg()).unwrap();
        let b = survey(&l, &cfg()).unwrap();
        assert_eq!(a.index, b.index);
        let fa: Vec<_> = a.regular.iter().map(|r| r.form.clone()).collect();
        let fb: Vec<_> = b.regular.iter().map(|r| r.form.clone()).collect();
        assert_eq!(fa, fb);
        assert_eq!(a.index % 2, l.dim() % 2);
    }

    #[test]
    fn invalid_sampling_config() {
        let bad = SamplingConfig { trials: 0, ..cfg() };
        assert!(matches!(index(&gl(2), &bad), Err(Error::InvalidParameter(_))));
    }
}
