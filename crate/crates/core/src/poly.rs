//! Univariate polynomials with rational coefficients.

use num_traits::{One, Zero};

use crate::linalg::Matrix;
use crate::scalar::{int, Scalar};

/// Coefficients from the constant term upwards, without trailing zeros.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly {
    coeffs: Vec<Scalar>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some(lc) => {
                let inv = lc.recip();
                Poly { coeffs: self.coeffs.iter().map(|c| c * &inv).collect() }
            }
        }
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * int(i as i64))
                .collect(),
        )
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let get = |p: &Poly, i: usize| p.coeffs.get(i).cloned().unwrap_or_else(Scalar::zero);
        Poly::new((0..n).map(|i| get(self, i) - get(other, i)).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Scalar::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }

    /// Quotient and remainder. Panics on division by zero.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lc_inv = divisor.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Scalar::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let top = rem.len() - 1;
            let c = &rem[top] * &lc_inv;
            if !c.is_zero() {
                for (k, d) in divisor.coeffs.iter().enumerate() {
                    rem[top - dd + k] -= &c * d;
                }
                quot[top - dd] = c;
            }
            rem.pop();
        }
        (Poly::new(quot), Poly::new(rem))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Largest squarefree divisor, `p / gcd(p, p')`, made monic.
    pub fn squarefree_part(&self) -> Poly {
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).degree() == Some(0)
    }

    /// Evaluates at a square matrix by Horner's rule.
    pub fn eval_matrix(&self, x: &Matrix) -> Matrix {
        let n = x.rows();
        let mut acc = Matrix::zeros(n, n);
        for c in self.coeffs.iter().rev() {
            acc = &acc * x;
            if !c.is_zero() {
                for i in 0..n {
                    acc[(i, i)] += c;
                }
            }
        }
        acc
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        self.coeffs.iter().rev().fold(Scalar::zero(), |acc, c| acc * x + c)
    }
}

/// Characteristic polynomial `det(tI - X)` by the Faddeev–LeVerrier recursion.
pub fn characteristic_polynomial(x: &Matrix) -> Poly {
    assert!(x.is_square(), "characteristic polynomial of a non-square matrix");
    let n = x.rows();
    let mut coeffs = vec![Scalar::zero(); n + 1];
    coeffs[n] = Scalar::one();
    let mut m = Matrix::zeros(n, n);
    for k in 1..=n {
        m = &m * x;
        for i in 0..n {
            m[(i, i)] += &coeffs[n - k + 1];
        }
        let t = (x * &m).trace();
        coeffs[n - k] = -t / int(k as i64);
    }
    Poly::new(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ratio;

    #[test]
    fn division_identity() {
        let a = Poly::from_i64(&[-1, 0, 0, 1]);
        let b = Poly::from_i64(&[-1, 1]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(q, Poly::from_i64(&[1, 1, 1]));
        assert!(r.is_zero());
    }

    #[test]
    fn gcd_and_squarefree() {
        // (t-1)^2 (t+2)
        let p = Poly::from_i64(&[-1, 1]).mul(&Poly::from_i64(&[-1, 1])).mul(&Poly::from_i64(&[2, 1]));
        assert!(!p.is_squarefree());
        assert_eq!(p.squarefree_part(), Poly::from_i64(&[-2, 1, 1]));
        assert!(p.squarefree_part().is_squarefree());
        assert_eq!(p.gcd(&p.derivative()), Poly::from_i64(&[-1, 1]));
    }

    #[test]
    fn charpoly_matches_determinant() {
        let x = Matrix::from_i64(3, 3, &[2, 1, 0, -1, 0, 3, 4, 1, 1]);
        let p = characteristic_polynomial(&x);
        for t in [-2i64, 0, 1, 5] {
            let shifted = &Matrix::identity(3).scale(&int(t)) - &x;
            assert_eq!(p.eval(&int(t)), shifted.determinant());
        }
        assert!(p.eval_matrix(&x).is_zero());
        assert_eq!(p.eval(&ratio(1, 2)), (&Matrix::identity(3).scale(&ratio(1, 2)) - &x).determinant());
    }
}
