//! Labeled bases and prescribed linear forms for which the stabilizer has a
//! known closed-form basis.
//!
//! Indices in labels are 1-based, matching the usual `E_ij` notation.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::flag::Flag;
use crate::lie::{stabilizer, LinearForm, MatrixLieAlgebra};
use crate::linalg::{Matrix, Subspace};
use crate::scalar::{int, ratio, Scalar};

use super::orthogonal::{wedge_b, SymmetricForm};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BasisLabel {
    /// `E_{2j-1,2j-1} − E_{2j,2j}`, or `E_{2p+1,2p+1}` for the last one in the odd case.
    H(usize),
    /// `2 E_{2j-1,2j}`.
    Z(usize),
    /// `E_{2j-1,2j+2} + E_{2j+1,2j}`, or `E_{2p+1,2p}` for the last one in the odd case.
    T(usize),
    /// `E_{2i-1,2i-1} + E_{2i,2i}`.
    S(usize),
    /// Elementary matrix `E_ij` of the complement.
    Elementary(usize, usize),
    /// Generator of `so(F)` when `dim F = 2`.
    RotationF,
    /// `f_a ∧ e_j` with `f_a` the a-th basis vector of `F`.
    Mixed(usize, usize),
    /// `e_i ∧ e_j`, `i < j`.
    Wedge(usize, usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum OrthogonalCase {
    /// `dim V = 2p`, `F = 0`.
    Even,
    /// `dim V = 2p + 1`, `dim F = 1`.
    OddLine,
    /// `dim V = 2p + 1`, `dim F = 2`.
    OddPlane,
}

impl OrthogonalCase {
    pub fn all() -> [OrthogonalCase; 3] {
        [OrthogonalCase::Even, OrthogonalCase::OddLine, OrthogonalCase::OddPlane]
    }

    pub fn odd(self) -> bool {
        self != OrthogonalCase::Even
    }

    pub fn complement_dim(self) -> usize {
        match self {
            OrthogonalCase::Even => 0,
            OrthogonalCase::OddLine => 1,
            OrthogonalCase::OddPlane => 2,
        }
    }

    /// Dimension of `V`.
    pub fn rank_v(self, p: usize) -> usize {
        if self.odd() {
            2 * p + 1
        } else {
            2 * p
        }
    }

    pub fn ambient(self, p: usize) -> usize {
        2 * self.rank_v(p) + self.complement_dim()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FixtureKind {
    Symplectic { odd: bool },
    Orthogonal { case: OrthogonalCase, form: SymmetricForm, u: Vec<Scalar> },
}

#[derive(Clone, Debug)]
pub struct ProofFixture {
    pub p: usize,
    pub kind: FixtureKind,
    pub flag: Flag,
    pub algebra: MatrixLieAlgebra,
    pub labels: Vec<BasisLabel>,
    pub zeta: Vec<Scalar>,
    pub tau: Vec<Scalar>,
    pub form: LinearForm,
}

impl ProofFixture {
    pub fn index_of(&self, label: BasisLabel) -> Option<usize> {
        self.labels.iter().position(|&l| l == label)
    }

    pub fn element(&self, label: BasisLabel) -> Option<&Matrix> {
        self.index_of(label).map(|i| &self.algebra.basis()[i])
    }

    fn get(&self, label: BasisLabel) -> &Matrix {
        self.element(label).unwrap_or_else(|| panic!("fixture has no {label:?}"))
    }

    pub fn stabilizer(&self) -> Result<Subspace> {
        stabilizer(&self.algebra, &self.form)
    }

    /// Span of the explicit vectors in algebra coordinates.
    pub fn expected_stabilizer(&self) -> Result<Subspace> {
        let coords = explicit_stabilizer_vectors(self)?
            .iter()
            .map(|m| self.algebra.coordinates(m)?.ok_or(Error::NotInAlgebra))
            .collect::<Result<Vec<_>>>()?;
        Subspace::span(self.algebra.dim(), &coords)
    }
}

/// Small distinct primes: `ζ_1..ζ_p` first, then the `τ`s.
pub fn default_parameters(p: usize, tau_len: usize) -> (Vec<Scalar>, Vec<Scalar>) {
    let primes: Vec<i64> = (2i64..).filter(|n| (2..*n).take_while(|d| d * d <= *n).all(|d| n % d != 0)).take(p + tau_len).collect();
    let zeta = primes[..p].iter().map(|&x| int(x)).collect();
    let tau = primes[p..].iter().map(|&x| int(x)).collect();
    (zeta, tau)
}

/// `E_ij` in `gl(n)`, 1-based.
fn e(n: usize, i: usize, j: usize) -> Matrix {
    Matrix::unit(n, i - 1, j - 1)
}

/// The labeled `r_V` basis for the flag `(1, 3, …, 2p−1, r)` inside `gl(r)`.
fn symplectic_labels(p: usize, odd: bool) -> Vec<(BasisLabel, Matrix)> {
    let r = if odd { 2 * p + 1 } else { 2 * p };
    let mut out = Vec::new();
    for j in 1..=p {
        out.push((BasisLabel::H(j), &e(r, 2 * j - 1, 2 * j - 1) - &e(r, 2 * j, 2 * j)));
    }
    if odd {
        out.push((BasisLabel::H(p + 1), e(r, r, r)));
    }
    for j in 1..=p {
        out.push((BasisLabel::Z(j), e(r, 2 * j - 1, 2 * j).scale(&int(2))));
    }
    for j in 1..p {
        out.push((BasisLabel::T(j), &e(r, 2 * j - 1, 2 * j + 2) + &e(r, 2 * j + 1, 2 * j)));
    }
    if odd {
        out.push((BasisLabel::T(p), e(r, 2 * p + 1, 2 * p)));
    }
    out
}

fn fixture_flag(p: usize, odd: bool) -> Flag {
    let mut dims: Vec<usize> = (1..=p).map(|j| 2 * j - 1).collect();
    dims.push(if odd { 2 * p + 1 } else { 2 * p });
    Flag::new(dims).expect("increasing")
}

fn check_parameters(p: usize, odd: bool, zeta: &[Scalar], tau: &[Scalar]) -> Result<()> {
    if p < 1 {
        return Err(Error::InvalidParameter("fixture needs p ≥ 1".into()));
    }
    let tau_len = if odd { p } else { p - 1 };
    if zeta.len() != p || tau.len() != tau_len {
        return Err(Error::InvalidParameter(format!(
            "expected {p} ζ values and {tau_len} τ values, got {} and {}",
            zeta.len(),
            tau.len()
        )));
    }
    if zeta.iter().any(Zero::is_zero) {
        return Err(Error::InvalidParameter("every ζ must be nonzero".into()));
    }
    if odd && tau[p - 1].is_zero() {
        return Err(Error::InvalidParameter("the last τ must be nonzero in the odd case".into()));
    }
    Ok(())
}

fn form_from_values(labels: &[BasisLabel], value: impl Fn(BasisLabel) -> Scalar) -> LinearForm {
    LinearForm::new(labels.iter().map(|&l| value(l)).collect())
}

/// `r_V` for `(1, 3, …, 2p−1, 2p[+1])` with `g(Z_j) = ζ_j`, `g(T_j) = τ_j`, zero on the `H_j`.
pub fn proof_fixture_rv(p: usize, odd: bool, zeta: &[Scalar], tau: &[Scalar]) -> Result<ProofFixture> {
    check_parameters(p, odd, zeta, tau)?;
    let (labels, basis): (Vec<_>, Vec<_>) = symplectic_labels(p, odd).into_iter().unzip();
    let n = basis[0].rows();
    let algebra = MatrixLieAlgebra::new(n, basis)?;
    let form = form_from_values(&labels, |l| match l {
        BasisLabel::Z(j) => zeta[j - 1].clone(),
        BasisLabel::T(j) => tau[j - 1].clone(),
        _ => Scalar::zero(),
    });
    Ok(ProofFixture {
        p,
        kind: FixtureKind::Symplectic { odd },
        flag: fixture_flag(p, odd),
        algebra,
        labels,
        zeta: zeta.to_vec(),
        tau: tau.to_vec(),
        form,
    })
}

/// Geometry of `E = V ⊕ F ⊕ W` for the split form: `V` is the first `r`
/// coordinates, `F` the middle ones.
struct Split {
    q: usize,
    r: usize,
    form: SymmetricForm,
}

impl Split {
    fn basis_vector(&self, k: usize) -> Vec<Scalar> {
        (0..self.q).map(|i| int((i == k) as i64)).collect()
    }

    /// `e_j ∈ V`, 1-based.
    fn v(&self, j: usize) -> Vec<Scalar> {
        self.basis_vector(j - 1)
    }

    /// `f_a ∈ F`, 1-based.
    fn f(&self, a: usize) -> Vec<Scalar> {
        self.basis_vector(self.r + a - 1)
    }

    fn wedge(&self, x: &[Scalar], y: &[Scalar]) -> Matrix {
        wedge_b(&self.form, x, y).expect("vectors live in E")
    }

    /// Extends `X ∈ gl(V)` by zero on `F` and by `−K Xᵀ K` on `W`.
    fn embed(&self, x: &Matrix) -> Matrix {
        let (q, r) = (self.q, self.r);
        let mut out = Matrix::zeros(q, q);
        for i in 0..r {
            for j in 0..r {
                out[(i, j)] = x[(i, j)].clone();
                out[(q - 1 - j, q - 1 - i)] = -x[(i, j)].clone();
            }
        }
        out
    }
}

/// `p_V` in `so(q)` for `(1, 3, …, 2p−1, r)`, with a labeled basis and a form
/// that is `ζ`, `τ` on the `r_V` part, `ξ` on `Λ²V`, `B(u, ·) ⊗ e*_r` on `F ∧ V`
/// and zero elsewhere.
pub fn proof_fixture_pv(p: usize, case: OrthogonalCase, zeta: &[Scalar], tau: &[Scalar]) -> Result<ProofFixture> {
    let odd = case.odd();
    check_parameters(p, odd, zeta, tau)?;
    let r = case.rank_v(p);
    let q = case.ambient(p);
    let m = case.complement_dim();
    let split = Split { q, r, form: SymmetricForm::anti_diagonal(q) };
    // Non-isotropic vector of F: B(u, u) = 1.
    let u = match m {
        0 => vec![Scalar::zero(); q],
        1 => split.f(1),
        _ => {
            let half = split.f(2).into_iter().map(|x| x * ratio(1, 2));
            split.f(1).into_iter().zip(half).map(|(a, b)| a + b).collect()
        }
    };

    let mut entries: Vec<(BasisLabel, Matrix)> =
        symplectic_labels(p, odd).into_iter().map(|(l, x)| (l, split.embed(&x))).collect();
    let mut complement = Vec::new();
    for i in 1..=p {
        complement.push((BasisLabel::S(i), &e(r, 2 * i - 1, 2 * i - 1) + &e(r, 2 * i, 2 * i)));
    }
    for i in 1..=p {
        if 2 * i < r {
            complement.push((BasisLabel::Elementary(2 * i, 2 * i + 1), e(r, 2 * i, 2 * i + 1)));
        }
    }
    for i in 1..=r {
        for j in i + 2..=r {
            complement.push((BasisLabel::Elementary(i, j), e(r, i, j)));
        }
    }
    entries.extend(complement.into_iter().map(|(l, x)| (l, split.embed(&x))));
    if m == 2 {
        let (a, b) = (r, r + 1);
        let mut rot = Matrix::zeros(q, q);
        rot[(a, a)] = int(1);
        rot[(b, b)] = int(-1);
        entries.push((BasisLabel::RotationF, rot));
    }
    for a in 1..=m {
        for j in 1..=r {
            entries.push((BasisLabel::Mixed(a, j), split.wedge(&split.f(a), &split.v(j))));
        }
    }
    for i in 1..=r {
        for j in i + 1..=r {
            entries.push((BasisLabel::Wedge(i, j), split.wedge(&split.v(i), &split.v(j))));
        }
    }

    let (labels, basis): (Vec<_>, Vec<_>) = entries.into_iter().unzip();
    let algebra = MatrixLieAlgebra::new(q, basis)?;
    let form = form_from_values(&labels, |l| match l {
        BasisLabel::Z(j) => zeta[j - 1].clone(),
        BasisLabel::T(j) => tau[j - 1].clone(),
        BasisLabel::Wedge(i, j) if i % 2 == 1 && j == i + 1 => int(1),
        BasisLabel::Mixed(a, j) if j == r => split.form.eval(&u, &split.f(a)),
        _ => Scalar::zero(),
    });
    Ok(ProofFixture {
        p,
        kind: FixtureKind::Orthogonal { case, form: split.form, u },
        flag: fixture_flag(p, odd),
        algebra,
        labels,
        zeta: zeta.to_vec(),
        tau: tau.to_vec(),
        form,
    })
}

/// `R_k = E_{2k-1,2k-1} + E_{2k+1,2k+1}`, embedded in the fixture's ambient algebra.
pub fn raising_element(fx: &ProofFixture, k: usize) -> Matrix {
    let r = fx.flag.total();
    let x = &e(r, 2 * k - 1, 2 * k - 1) + &e(r, 2 * k + 1, 2 * k + 1);
    match &fx.kind {
        FixtureKind::Symplectic { .. } => x,
        FixtureKind::Orthogonal { form, .. } => Split { q: form.dim, r, form: form.clone() }.embed(&x),
    }
}

/// Closed-form stabilizer basis of the fixture form.
///
/// Symplectic fixtures: `W_i = T_i − (τ_i/2)(Z_i/ζ_i + Z_{i+1}/ζ_{i+1})`.
/// Orthogonal fixtures: `C_k` for `k < p`, and `D_p` in the odd cases.
pub fn explicit_stabilizer_vectors(fx: &ProofFixture) -> Result<Vec<Matrix>> {
    let half = ratio(1, 2);
    let p = fx.p;
    let (zeta, tau) = (&fx.zeta, &fx.tau);
    let z = |j: usize| fx.get(BasisLabel::Z(j));
    let t = |j: usize| fx.get(BasisLabel::T(j));
    let w = |k: usize| -> Matrix {
        let zs = &z(k).scale(&zeta[k - 1].recip()) + &z(k + 1).scale(&zeta[k].recip());
        t(k) - &zs.scale(&(&tau[k - 1] * &half))
    };
    match &fx.kind {
        FixtureKind::Symplectic { .. } => Ok((1..p).map(w).collect()),
        FixtureKind::Orthogonal { case, form, u } => {
            let r = fx.flag.total();
            let split = Split { q: form.dim, r, form: form.clone() };
            let ew = |i: usize, j: usize| split.wedge(&split.v(i), &split.v(j));
            let mut out = Vec::new();
            for k in 1..p {
                let diag = &ew(2 * k - 1, 2 * k) - &ew(2 * k + 1, 2 * k + 2);
                let c = &(&(&w(k) + &diag.scale(&(&tau[k - 1] * &half)))
                    + &ew(2 * k - 1, 2 * k + 2).scale(&(&zeta[k] * &half)))
                    + &ew(2 * k, 2 * k + 1).scale(&(&zeta[k - 1] * &half));
                out.push(c);
            }
            if case.odd() {
                let (tp, zp) = (&tau[p - 1], &zeta[p - 1]);
                let uw = |j: usize| split.wedge(u, &split.v(j));
                let d = &(&(&(&(t(p) - &uw(2 * p - 1)) - &uw(2 * p + 1).scale(tp))
                    - &z(p).scale(&(tp / (zp * int(2)))))
                    + &ew(2 * p - 1, 2 * p).scale(&(tp * &half)))
                    + &ew(2 * p, 2 * p + 1).scale(&(zp * &half));
                out.push(d);
            }
            Ok(out)
        }
    }
}
