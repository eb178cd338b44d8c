//! Explicit matrix realizations of the flag algebras and of the fixtures used
//! to check closed-form stabilizers.

mod fixture;
mod orthogonal;
mod symplectic;

pub use fixture::{
    default_parameters, explicit_stabilizer_vectors, proof_fixture_pv, proof_fixture_rv, raising_element, BasisLabel,
    FixtureKind, OrthogonalCase, ProofFixture,
};
pub use orthogonal::{build_p_v, build_p_v_with_form, build_so, so_of_form, wedge_b, SymmetricForm};
pub use symplectic::{
    build_gl_parabolic, build_r_v, generic_alternating_form, is_generic_pair, AlternatingForm,
};

use crate::error::Result;
use crate::lie::MatrixLieAlgebra;
use crate::linalg::Matrix;
use crate::scalar::Scalar;

/// Elements of `span(generators)` annihilated by the linear map `constraint`.
pub(crate) fn cut_out<F>(n: usize, generators: &[Matrix], constraint: F) -> Result<MatrixLieAlgebra>
where
    F: Fn(&Matrix) -> Vec<Scalar>,
{
    let images: Vec<Vec<Scalar>> = generators.iter().map(&constraint).collect();
    let width = images.first().map_or(0, Vec::len);
    // Column g of the system is the image of generator g.
    let system = Matrix::from_rows(width, &images)?.transpose();
    let kernel = system.kernel();
    let basis = kernel
        .basis_vectors()
        .iter()
        .map(|c| combine(n, generators, c))
        .collect();
    MatrixLieAlgebra::new(n, basis)
}

pub(crate) fn combine(n: usize, generators: &[Matrix], coeffs: &[Scalar]) -> Matrix {
    use num_traits::Zero;
    let mut out = Matrix::zeros(n, n);
    for (g, c) in generators.iter().zip(coeffs) {
        if !c.is_zero() {
            out = &out + &g.scale(c);
        }
    }
    out
}

/// `so(2) ⋉ K²` as 3×3 matrices: the rotation generator in the top-left block
/// and the translations in the last column.
pub fn build_so2_semidirect() -> MatrixLieAlgebra {
    let w = Matrix::from_i64(3, 3, &[0, 1, 0, -1, 0, 0, 0, 0, 0]);
    let basis = vec![w, Matrix::unit(3, 0, 2), Matrix::unit(3, 1, 2)];
    MatrixLieAlgebra::new(3, basis).expect("so(2) ⋉ K² is closed")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{center, index, is_quasi_reductive, is_stable, rank_cartan_duflo, SamplingConfig};

    #[test]
    fn so2_semidirect_invariants() {
        let l = build_so2_semidirect();
        let cfg = SamplingConfig::default();
        assert_eq!(center(&l).dim(), 0);
        assert_eq!(index(&l, &cfg).unwrap(), 1);
        assert_eq!(rank_cartan_duflo(&l, &cfg).unwrap(), 0);
        assert!(!is_quasi_reductive(&l, &cfg).unwrap());
        assert!(is_stable(&l, &cfg).unwrap());
        assert!(l.satisfies_jacobi());
    }

    #[test]
    fn so2_semidirect_bracket_rule() {
        // [tW + v, zW + v'] = t W v' − z W v
        let l = build_so2_semidirect();
        let w = &l.basis()[0];
        for v in &l.basis()[1..] {
            let br = w.commutator(v).unwrap();
            assert_eq!(br.column(2), w.mul_vec(&v.column(2)).unwrap());
            assert!(l.contains(&br).unwrap());
        }
        assert!(l.basis()[1].commutator(&l.basis()[2]).unwrap().is_zero());
    }
}
