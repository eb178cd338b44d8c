//! Flag parabolics of `gl(V)` and their subalgebras preserving an alternating form.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::flag::Flag;
use crate::lie::MatrixLieAlgebra;
use crate::linalg::Matrix;
use crate::scalar::{int, Scalar};

use super::cut_out;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlternatingForm {
    pub dim: usize,
    /// `ξ(u, v) = uᵀ · matrix · v`.
    #[serde(with = "matrix_serde")]
    pub matrix: Matrix,
}

impl AlternatingForm {
    pub fn new(matrix: Matrix) -> Result<Self> {
        if !matrix.is_square() || matrix.transpose() != -&matrix {
            return Err(crate::Error::InvalidParameter("alternating form must be an antisymmetric square matrix".into()));
        }
        Ok(AlternatingForm { dim: matrix.rows(), matrix })
    }

    pub fn zero(dim: usize) -> Self {
        AlternatingForm { dim, matrix: Matrix::zeros(dim, dim) }
    }

    /// `Σ pairs e*_a ∧ e*_b` over the given 1-based index pairs.
    pub fn from_pairs(dim: usize, pairs: &[(usize, usize)]) -> Self {
        let mut m = Matrix::zeros(dim, dim);
        for &(a, b) in pairs {
            m[(a - 1, b - 1)] += int(1);
            m[(b - 1, a - 1)] -= int(1);
        }
        AlternatingForm { dim, matrix: m }
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }
}

mod matrix_serde {
    use crate::linalg::Matrix;
    use crate::scalar::serde_fraction_vec;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    #[derive(Serialize, Deserialize)]
    struct Raw {
        rows: usize,
        cols: usize,
        #[serde(with = "serde_fraction_vec")]
        entries: Vec<crate::scalar::Scalar>,
    }

    pub fn serialize<S: Serializer>(m: &Matrix, s: S) -> Result<S::Ok, S::Error> {
        Raw { rows: m.rows(), cols: m.cols(), entries: m.entries().to_vec() }.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Matrix, D::Error> {
        let raw = Raw::deserialize(d)?;
        Matrix::from_vec(raw.rows, raw.cols, raw.entries).map_err(serde::de::Error::custom)
    }
}

/// Block index (0-based) of each coordinate of the coordinate flag.
pub(crate) fn block_of(f: &Flag) -> Vec<usize> {
    let mut out = Vec::with_capacity(f.total());
    let mut prev = 0;
    for (b, &d) in f.dims().iter().enumerate() {
        out.extend(std::iter::repeat_n(b, d - prev));
        prev = d;
    }
    out
}

/// Endomorphisms of `K^n` preserving the coordinate flag: block upper-triangular.
pub fn build_gl_parabolic(f: &Flag) -> MatrixLieAlgebra {
    let n = f.total();
    let block = block_of(f);
    let mut basis = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if block[i] <= block[j] {
                basis.push(Matrix::unit(n, i, j));
            }
        }
    }
    MatrixLieAlgebra::new(n, basis).expect("a parabolic is closed")
}

/// `Σ e*_{2i-1} ∧ e*_{2i}`, generic for every coordinate flag ending at its dimension.
pub fn generic_alternating_form(f: &Flag) -> AlternatingForm {
    let n = f.total();
    let pairs: Vec<(usize, usize)> = (1..=n / 2).map(|i| (2 * i - 1, 2 * i)).collect();
    AlternatingForm::from_pairs(n, &pairs)
}

fn block(m: &Matrix, rows: usize, cols: usize) -> Matrix {
    let mut out = Matrix::zeros(rows, cols);
    for i in 0..rows {
        for j in 0..cols {
            out[(i, j)] = m[(i, j)].clone();
        }
    }
    out
}

/// Each `ξ|V_i` has maximal rank and no nonzero vector of `V_{i-1}` is
/// `ξ`-orthogonal to all of `V_i`.
pub fn is_generic_pair(f: &Flag, xi: &AlternatingForm) -> bool {
    if xi.dim != f.total() {
        return false;
    }
    let mut prev = 0;
    for &d in f.dims() {
        if xi.matrix.leading_block(d).rank() != 2 * (d / 2) {
            return false;
        }
        // v ∈ V_{prev} with ξ(v, e_k) = 0 for k < d: trivial iff full row rank.
        if prev > 0 && block(&xi.matrix, prev, d).rank() != prev {
            return false;
        }
        prev = d;
    }
    true
}

/// Flag stabilizer inside `gl(V)` of the generic alternating form.
pub fn build_r_v(f: &Flag) -> MatrixLieAlgebra {
    let q = build_gl_parabolic(f);
    let xi = generic_alternating_form(f);
    let n = f.total();
    cut_out(n, q.basis(), |x| {
        let m = &(&x.transpose() * &xi.matrix) + &(&xi.matrix * x);
        let mut out: Vec<Scalar> = Vec::with_capacity(n * (n + 1) / 2);
        for i in 0..n {
            for j in i + 1..n {
                out.push(m[(i, j)].clone());
            }
        }
        out
    })
    .expect("the stabilizer of a form is closed")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f(d: &[usize]) -> Flag {
        Flag::new(d.to_vec()).unwrap()
    }

    fn parabolic_dim(f: &Flag) -> usize {
        let a = f.steps();
        (0..a.len()).flat_map(|i| (i..a.len()).map(move |j| (i, j))).map(|(i, j)| a[i] * a[j]).sum()
    }

    #[test]
    fn parabolic_dimensions() {
        assert_eq!(build_gl_parabolic(&f(&[3])).dim(), 9);
        assert_eq!(build_gl_parabolic(&f(&[1, 2])).dim(), 3);
        assert_eq!(build_gl_parabolic(&f(&[1, 3, 4])).dim(), 11);
    }

    #[test]
    fn alternating_form_examples() {
        assert_eq!(generic_alternating_form(&f(&[2])).matrix, Matrix::from_i64(2, 2, &[0, 1, -1, 0]));
        let three = generic_alternating_form(&f(&[3]));
        assert_eq!(three.rank(), 2);
        assert_eq!(three, AlternatingForm::from_pairs(3, &[(1, 2)]));
        assert_eq!(generic_alternating_form(&f(&[1, 3, 4])), AlternatingForm::from_pairs(4, &[(1, 2), (3, 4)]));
    }

    #[test]
    fn generic_pair_examples() {
        assert!(!is_generic_pair(&f(&[2, 4]), &AlternatingForm::zero(4)));
        // Restriction to the first member vanishes.
        let crossed = AlternatingForm::from_pairs(4, &[(1, 3), (2, 4)]);
        assert!(!is_generic_pair(&f(&[2, 4]), &crossed));
        assert!(is_generic_pair(&f(&[4]), &crossed));
        // V_1 = span(e_1) is orthogonal to V_2 = span(e_1, e_3).
        assert!(!is_generic_pair(&f(&[1, 2, 4]), &crossed));
    }

    #[test]
    fn r_v_examples() {
        assert_eq!(build_r_v(&f(&[2])).dim(), 3);
        assert_eq!(build_r_v(&f(&[1, 2])).dim(), 2);
        assert_eq!(build_r_v(&f(&[1, 3, 4])).dim(), 5);
    }

    proptest! {
        #![proptest_config(crate::testutil::fixed_config(48))]

        #[test]
        fn generic_form_is_generic(n in 1usize..8, mask in any::<u8>()) {
            let dims: Vec<usize> = (1..n).filter(|d| mask & (1 << d) != 0).chain([n]).collect();
            let fl = Flag::new(dims).unwrap();
            prop_assert!(is_generic_pair(&fl, &generic_alternating_form(&fl)));
        }

        #[test]
        fn r_v_sits_in_parabolic_and_preserves_form(n in 1usize..7, mask in any::<u8>()) {
            let dims: Vec<usize> = (1..n).filter(|d| mask & (1 << d) != 0).chain([n]).collect();
            let fl = Flag::new(dims).unwrap();
            let q = build_gl_parabolic(&fl);
            prop_assert_eq!(q.dim(), parabolic_dim(&fl));
            let r = build_r_v(&fl);
            // The generic form has an open orbit, so the stabilizer has complementary dimension.
            prop_assert_eq!(r.dim(), q.dim() - n * (n - 1) / 2);
            let xi = generic_alternating_form(&fl).matrix;
            for x in r.basis() {
                prop_assert!(q.contains(x).unwrap());
                prop_assert!((&(&x.transpose() * &xi) + &(&xi * x)).is_zero());
            }
            prop_assert!(r.satisfies_jacobi());
        }
    }
}
