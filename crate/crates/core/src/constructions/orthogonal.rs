//! Orthogonal algebras, rank-two wedge elements and isotropic flag stabilizers.

use crate::error::{Error, Result};
use crate::flag::Flag;
use crate::lie::MatrixLieAlgebra;
use crate::linalg::Matrix;
use crate::scalar::{int, Scalar};

use super::cut_out;
use super::symplectic::block_of;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricForm {
    pub dim: usize,
    /// `B(u, v) = uᵀ · matrix · v`.
    pub matrix: Matrix,
}

impl SymmetricForm {
    pub fn new(matrix: Matrix) -> Result<Self> {
        if !matrix.is_square() || matrix.transpose() != matrix {
            return Err(Error::InvalidParameter("symmetric form must be a symmetric square matrix".into()));
        }
        if matrix.rank() != matrix.rows() {
            return Err(Error::InvalidParameter("symmetric form is degenerate".into()));
        }
        Ok(SymmetricForm { dim: matrix.rows(), matrix })
    }

    /// Split form `B(e_i, e_{q+1-i}) = 1`.
    pub fn anti_diagonal(q: usize) -> Self {
        let mut m = Matrix::zeros(q, q);
        for i in 0..q {
            m[(i, q - 1 - i)] = int(1);
        }
        SymmetricForm { dim: q, matrix: m }
    }

    pub fn eval(&self, u: &[Scalar], v: &[Scalar]) -> Scalar {
        let bv = self.matrix.mul_vec(v).expect("vector length matches the form");
        u.iter().zip(&bv).map(|(a, b)| a * b).sum()
    }

    /// `BX + XᵀB = 0`.
    pub fn is_skew(&self, x: &Matrix) -> bool {
        (&(&self.matrix * x) + &(&x.transpose() * &self.matrix)).is_zero()
    }
}

/// `so(B) = { B⁻¹ A : A antisymmetric }`.
pub fn so_of_form(form: &SymmetricForm) -> MatrixLieAlgebra {
    let q = form.dim;
    let inv = form.matrix.inverse().expect("form is nondegenerate");
    let mut basis = Vec::with_capacity(q * (q.saturating_sub(1)) / 2);
    for i in 0..q {
        for j in i + 1..q {
            let a = &Matrix::unit(q, i, j) - &Matrix::unit(q, j, i);
            basis.push(&inv * &a);
        }
    }
    MatrixLieAlgebra::new(q, basis).expect("an orthogonal algebra is closed")
}

pub fn build_so(q: usize) -> (MatrixLieAlgebra, SymmetricForm) {
    let form = SymmetricForm::anti_diagonal(q);
    (so_of_form(&form), form)
}

/// `x ↦ B(x, u) v − B(x, v) u`, i.e. `v uᵀB − u vᵀB`.
pub fn wedge_b(form: &SymmetricForm, u: &[Scalar], v: &[Scalar]) -> Result<Matrix> {
    let q = form.dim;
    for w in [u, v] {
        if w.len() != q {
            return Err(Error::DimensionMismatch { expected: q, found: w.len() });
        }
    }
    let bu = form.matrix.mul_vec(u)?;
    let bv = form.matrix.mul_vec(v)?;
    let mut out = Matrix::zeros(q, q);
    for i in 0..q {
        for j in 0..q {
            out[(i, j)] = &v[i] * &bu[j] - &u[i] * &bv[j];
        }
    }
    Ok(out)
}

/// Stabilizer in `so(E)` of the coordinate flag `span(e_1..e_{d_i})`, for the split form.
pub fn build_p_v(q: usize, f: &Flag) -> Result<MatrixLieAlgebra> {
    build_p_v_with_form(&SymmetricForm::anti_diagonal(q), f)
}

/// Same, for any nondegenerate form for which the coordinate flag is isotropic.
pub fn build_p_v_with_form(form: &SymmetricForm, f: &Flag) -> Result<MatrixLieAlgebra> {
    let q = form.dim;
    let r = f.total();
    if r > q || !form.matrix.leading_block(r).is_zero() {
        return Err(Error::NonIsotropicFlag { dim: r, q, max: q / 2 });
    }
    let so = so_of_form(form);
    let block = block_of(f);
    let dims = f.dims().to_vec();
    cut_out(q, so.basis(), |x| {
        let mut out = Vec::new();
        for (j, &b) in block.iter().enumerate() {
            for i in dims[b]..q {
                out.push(x[(i, j)].clone());
            }
        }
        out
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Subspace;
    use crate::scalar::ratio;
    use proptest::prelude::*;

    fn f(d: &[usize]) -> Flag {
        Flag::new(d.to_vec()).unwrap()
    }

    /// Levi block plus the two unipotent pieces plus `so(F)`.
    fn p_v_dim_oracle(q: usize, fl: &Flag) -> usize {
        let a = fl.steps();
        let levi: usize = (0..a.len()).flat_map(|i| (i..a.len()).map(move |j| (i, j))).map(|(i, j)| a[i] * a[j]).sum();
        let r = fl.total();
        let m = q - 2 * r;
        levi + r * m + r * (r - 1) / 2 + m * m.saturating_sub(1) / 2
    }

    #[test]
    fn so_dimensions() {
        assert_eq!(build_so(2).0.dim(), 1);
        assert_eq!(build_so(3).0.dim(), 3);
        let (so8, b) = build_so(8);
        assert_eq!(so8.dim(), 28);
        assert!(so8.basis().iter().all(|x| b.is_skew(x)));
    }

    #[test]
    fn p_v_examples() {
        assert_eq!(build_p_v(8, &f(&[4])).unwrap().dim(), 22);
        assert_eq!(build_p_v(7, &f(&[1, 3])).unwrap().dim(), p_v_dim_oracle(7, &f(&[1, 3])));
        assert!(matches!(build_p_v(5, &f(&[3])), Err(Error::NonIsotropicFlag { dim: 3, q: 5, max: 2 })));
    }

    #[test]
    fn p_v_preserves_flag_and_form() {
        for q in 3..=9 {
            let b = SymmetricForm::anti_diagonal(q);
            for fl in crate::flag::enumerate_isotropic_flags(q) {
                let p = build_p_v(q, &fl).unwrap();
                assert_eq!(p.dim(), p_v_dim_oracle(q, &fl), "q={q} flag={fl}");
                for x in p.basis() {
                    assert!(b.is_skew(x));
                    for &d in fl.dims() {
                        for j in 0..d {
                            assert!((d..q).all(|i| x[(i, j)] == int(0)));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn wedge_trivial_identities() {
        let b = SymmetricForm::anti_diagonal(4);
        let u = vec![int(1), int(2), int(0), int(-1)];
        let v = vec![int(0), ratio(1, 2), int(3), int(1)];
        assert!(wedge_b(&b, &u, &u).unwrap().is_zero());
        assert!((&wedge_b(&b, &u, &v).unwrap() + &wedge_b(&b, &v, &u).unwrap()).is_zero());
        assert!(b.is_skew(&wedge_b(&b, &u, &v).unwrap()));
    }

    #[test]
    fn alternative_form_gives_same_dimension() {
        // Split on V ⊕ W, Euclidean on the middle block.
        for q in 5..=7 {
            let mut m = Matrix::zeros(q, q);
            for i in 0..2 {
                m[(i, q - 1 - i)] = int(1);
                m[(q - 1 - i, i)] = int(1);
            }
            for i in 2..q - 2 {
                m[(i, i)] = int(1);
            }
            let alt = SymmetricForm::new(m).unwrap();
            for fl in [f(&[1]), f(&[2]), f(&[1, 2])] {
                let a = build_p_v_with_form(&alt, &fl).unwrap();
                assert_eq!(a.dim(), build_p_v(q, &fl).unwrap().dim());
                assert!(a.basis().iter().all(|x| alt.is_skew(x)));
            }
        }
    }

    fn vec_strategy(q: usize) -> impl Strategy<Value = Vec<Scalar>> {
        proptest::collection::vec(-3i64..=3, q).prop_map(|v| v.into_iter().map(int).collect())
    }

    fn four_vectors() -> impl Strategy<Value = (usize, [Vec<Scalar>; 4])> {
        (2usize..7).prop_flat_map(|q| {
            (Just(q), [vec_strategy(q), vec_strategy(q), vec_strategy(q), vec_strategy(q)])
        })
    }

    proptest! {
        #![proptest_config(crate::testutil::fixed_config(96))]

        #[test]
        fn wedge_bracket_expansion((q, [u1, v1, u2, v2]) in four_vectors()) {
            let b = SymmetricForm::anti_diagonal(q);
            let w = |x: &[Scalar], y: &[Scalar]| wedge_b(&b, x, y).unwrap();
            let lhs = w(&u1, &v1).commutator(&w(&u2, &v2)).unwrap();
            // The third term reads `v2 ∧ u1`; with `u1 ∧ v2` the right side would
            // not be antisymmetric under exchanging the two pairs.
            let rhs = &(&(&w(&v1, &v2).scale(&b.eval(&u1, &u2))
                + &w(&u2, &v1).scale(&b.eval(&u1, &v2)))
                + &w(&v2, &u1).scale(&b.eval(&v1, &u2)))
                + &w(&u1, &u2).scale(&b.eval(&v1, &v2));
            prop_assert_eq!(lhs, rhs);
            prop_assert!(b.is_skew(&w(&u1, &v1)));
        }

        #[test]
        fn wedge_trace_form_is_gram_determinant((q, [u1, v1, u2, v2]) in four_vectors()) {
            let b = SymmetricForm::anti_diagonal(q);
            let x = wedge_b(&b, &u1, &v1).unwrap();
            let y = wedge_b(&b, &u2, &v2).unwrap();
            let trace_form = -(&x * &y).trace() / int(2);
            let gram = b.eval(&u1, &u2) * b.eval(&v1, &v2) - b.eval(&u1, &v2) * b.eval(&v1, &u2);
            prop_assert_eq!(trace_form, gram);
        }

        #[test]
        fn wedges_span_so(q in 2usize..7) {
            let b = SymmetricForm::anti_diagonal(q);
            let e = |i: usize| (0..q).map(|k| int((k == i) as i64)).collect::<Vec<_>>();
            let flat: Vec<Vec<Scalar>> = (0..q)
                .flat_map(|i| (i + 1..q).map(move |j| (i, j)))
                .map(|(i, j)| wedge_b(&b, &e(i), &e(j)).unwrap().into_entries())
                .collect();
            let span = Subspace::span(q * q, &flat).unwrap();
            let (so, _) = build_so(q);
            prop_assert_eq!(&span, so.matrix_span());
        }
    }
}
