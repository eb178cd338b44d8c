//! Additive Jordan–Chevalley decomposition over the rationals.

use crate::linalg::{Matrix, Subspace};
use crate::poly::{characteristic_polynomial, Poly};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JordanParts {
    pub semisimple: Matrix,
    pub nilpotent: Matrix,
}

/// Splits `x` as `S + N` with `S` semisimple, `N` nilpotent, both polynomials in `x`.
///
/// Newton iteration `S <- S - s(S) s'(S)^{-1}` on the squarefree part `s` of the
/// characteristic polynomial; the error is a polynomial in the nilpotent part whose
/// order doubles each step.
pub fn jordan_chevalley(x: &Matrix) -> JordanParts {
    assert!(x.is_square(), "Jordan decomposition of a non-square matrix");
    let n = x.rows();
    let s = characteristic_polynomial(x).squarefree_part();
    let ds = s.derivative();
    let mut semi = x.clone();
    let steps = n.max(1).next_power_of_two().trailing_zeros() as usize + 1;
    for _ in 0..steps {
        let value = s.eval_matrix(&semi);
        if value.is_zero() {
            break;
        }
        let slope = ds
            .eval_matrix(&semi)
            .inverse()
            .expect("derivative of a squarefree polynomial is invertible at S");
        semi = &semi - &(&value * &slope);
    }
    assert!(s.eval_matrix(&semi).is_zero(), "Newton iteration did not converge");
    let nilpotent = x - &semi;
    JordanParts { semisimple: semi, nilpotent }
}

/// Minimal polynomial from the first linear dependence among `I, X, X², …`.
pub fn minimal_polynomial(x: &Matrix) -> Poly {
    assert!(x.is_square(), "minimal polynomial of a non-square matrix");
    let n = x.rows();
    let mut powers: Vec<Vec<Scalar>> = vec![Matrix::identity(n).into_entries()];
    let mut current = Matrix::identity(n);
    loop {
        current = &current * x;
        let next = current.entries().to_vec();
        let span = Subspace::span(n * n, &powers).expect("flattened powers share a length");
        if span.contains(&next).expect("same ambient") {
            // Solve next = Σ c_k X^k via the kernel of [P_0; …; P_{d-1}; next]^T.
            let mut rows = powers.clone();
            rows.push(next);
            let stacked = Matrix::from_rows(n * n, &rows).expect("rectangular");
            let relation = stacked.transpose().kernel();
            let v = relation.basis_vectors().pop().expect("one relation");
            return Poly::new(v).monic();
        }
        powers.push(next);
    }
}

pub fn is_semisimple(x: &Matrix) -> bool {
    minimal_polynomial(x).is_squarefree()
}

pub fn is_nilpotent(x: &Matrix) -> bool {
    x.pow(x.rows() as u32).is_zero()
}

/// True if `y` lies in the span of the powers of `x`.
pub fn is_polynomial_in(y: &Matrix, x: &Matrix) -> bool {
    let n = x.rows();
    let mut powers = vec![Matrix::identity(n).into_entries()];
    let mut current = Matrix::identity(n);
    for _ in 1..n.max(1) {
        current = &current * x;
        powers.push(current.entries().to_vec());
    }
    let span = Subspace::span(n * n, &powers).expect("flattened powers share a length");
    span.contains(y.entries()).expect("same ambient")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;
    use proptest::prelude::*;

    #[test]
    fn nilpotent_block() {
        let x = Matrix::from_i64(2, 2, &[0, 1, 0, 0]);
        let jc = jordan_chevalley(&x);
        assert!(jc.semisimple.is_zero());
        assert_eq!(jc.nilpotent, x);
    }

    #[test]
    fn diagonal_is_semisimple() {
        let x = Matrix::from_i64(3, 3, &[2, 0, 0, 0, -1, 0, 0, 0, 2]);
        let jc = jordan_chevalley(&x);
        assert_eq!(jc.semisimple, x);
        assert!(jc.nilpotent.is_zero());
    }

    #[test]
    fn unipotent_block() {
        let x = Matrix::from_i64(2, 2, &[1, 1, 0, 1]);
        let jc = jordan_chevalley(&x);
        assert_eq!(jc.semisimple, Matrix::identity(2));
        assert_eq!(jc.nilpotent, Matrix::unit(2, 0, 1));
    }

    #[test]
    fn rotation_has_irreducible_minpoly() {
        // Semisimple over the closure but with no rational eigenvalues.
        let x = Matrix::from_i64(2, 2, &[0, -1, 1, 0]);
        let jc = jordan_chevalley(&x);
        assert_eq!(jc.semisimple, x);
        assert_eq!(minimal_polynomial(&x), Poly::from_i64(&[1, 0, 1]));
    }

    #[test]
    fn conjugated_jordan_blocks() {
        // P J P^{-1} with J = J_2(3) ⊕ J_2(3) ⊕ (−1): block structure hidden by conjugation.
        let j = Matrix::from_i64(5, 5, &[
            3, 1, 0, 0, 0,
            0, 3, 0, 0, 0,
            0, 0, 3, 1, 0,
            0, 0, 0, 3, 0,
            0, 0, 0, 0, -1,
        ]);
        let p = Matrix::from_i64(5, 5, &[
            1, 2, 0, 1, 0,
            0, 1, 1, 0, 2,
            1, 0, 1, 0, 0,
            0, 0, 1, 1, 1,
            2, 0, 0, 1, 1,
        ]);
        let pinv = p.inverse().unwrap();
        let x = &(&p * &j) * &pinv;
        let jc = jordan_chevalley(&x);
        let mut d = Matrix::identity(5).scale(&int(3));
        d[(4, 4)] = int(-1);
        assert_eq!(jc.semisimple, &(&p * &d) * &pinv);
    }

    fn square(n: usize) -> impl Strategy<Value = Matrix> {
        proptest::collection::vec(-2i64..=2, n * n).prop_map(move |v| Matrix::from_i64(n, n, &v))
    }

    /// Random matrices are usually semisimple; conjugating a block upper-triangular
    /// matrix with repeated diagonal entries forces non-trivial nilpotent parts.
    fn structured(n: usize) -> impl Strategy<Value = Matrix> {
        (
            proptest::collection::vec(-1i64..=1, n),
            proptest::collection::vec(-1i64..=1, n * n),
            proptest::collection::vec(-1i64..=1, n * n),
        )
            .prop_map(move |(diag, upper, conj)| {
                let mut t = Matrix::zeros(n, n);
                for i in 0..n {
                    t[(i, i)] = int(diag[i]);
                    for j in i + 1..n {
                        t[(i, j)] = int(upper[i * n + j]);
                    }
                }
                // Unipotent conjugator: always invertible.
                let mut p = Matrix::identity(n);
                for i in 0..n {
                    for j in i + 1..n {
                        p[(i, j)] = int(conj[i * n + j]);
                    }
                }
                let q = p.transpose();
                let c = &p * &q;
                &(&c * &t) * &c.inverse().unwrap()
            })
    }

    fn check_laws(x: &Matrix) -> Result<(), TestCaseError> {
        let JordanParts { semisimple: s, nilpotent: nil } = jordan_chevalley(x);
        prop_assert_eq!(&(&s + &nil), x);
        prop_assert_eq!(&s * &nil, &nil * &s);
        prop_assert!(is_nilpotent(&nil));
        prop_assert!(minimal_polynomial(&s).is_squarefree());
        prop_assert!(is_polynomial_in(&s, x));
        prop_assert!(is_polynomial_in(&nil, x));
        Ok(())
    }

    proptest! {
        #![proptest_config(crate::testutil::fixed_config(64))]

        #[test]
        fn laws_on_random(x in (1usize..5).prop_flat_map(square)) {
            check_laws(&x)?;
        }

        #[test]
        fn laws_on_structured(x in (2usize..6).prop_flat_map(structured)) {
            check_laws(&x)?;
        }

        #[test]
        fn minimal_divides_characteristic(x in (1usize..5).prop_flat_map(square)) {
            let m = minimal_polynomial(&x);
            prop_assert!(m.eval_matrix(&x).is_zero());
            let (_, r) = characteristic_polynomial(&x).div_rem(&m);
            prop_assert!(r.is_zero());
        }
    }
}
