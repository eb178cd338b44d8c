//! Dense exact linear algebra over the rationals.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{int, Scalar};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    /// Matrix unit with a single 1 at `(i, j)` (zero-based).
    pub fn unit(n: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zeros(n, n);
        m[(i, j)] = Scalar::one();
        m
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<Scalar>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch { expected: rows * cols, found: data.len() });
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn from_i64(rows: usize, cols: usize, data: &[i64]) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count");
        Matrix { rows, cols, data: data.iter().map(|&v| int(v)).collect() }
    }

    /// Builds a matrix from row vectors of common length `cols`.
    pub fn from_rows(cols: usize, rows: &[Vec<Scalar>]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch { expected: cols, found: r.len() });
            }
            data.extend(r.iter().cloned());
        }
        Ok(Matrix { rows: rows.len(), cols, data })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn into_entries(self) -> Vec<Scalar> {
        self.data
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn trace(&self) -> Scalar {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)].clone()).sum()
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    pub fn try_add(&self, other: &Matrix) -> Result<Matrix> {
        self.same_shape(other)?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Ok(Matrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn try_sub(&self, other: &Matrix) -> Result<Matrix> {
        self.same_shape(other)?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Ok(Matrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn try_mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch { expected: self.cols, found: other.rows });
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// `self * other - other * self`.
    pub fn commutator(&self, other: &Matrix) -> Result<Matrix> {
        self.try_mul(other)?.try_sub(&other.try_mul(self)?)
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch { expected: self.cols, found: v.len() });
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect())
    }

    pub fn pow(&self, e: u32) -> Matrix {
        assert!(self.is_square(), "power of a non-square matrix");
        let mut acc = Matrix::identity(self.rows);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch { expected: self.cols, found: other.cols });
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(Matrix { rows: self.rows + other.rows, cols: self.cols, data })
    }

    /// Places `other` to the right of `self`.
    pub fn hstack(&self, other: &Matrix) -> Result<Matrix> {
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch { expected: self.rows, found: other.rows });
        }
        let cols = self.cols + other.cols;
        let mut data = Vec::with_capacity(self.rows * cols);
        for i in 0..self.rows {
            data.extend(self.row(i).iter().cloned());
            data.extend(other.row(i).iter().cloned());
        }
        Ok(Matrix { rows: self.rows, cols, data })
    }

    /// Columns `start..end` of every row.
    pub fn column_block(&self, start: usize, end: usize) -> Matrix {
        let mut data = Vec::with_capacity(self.rows * (end - start));
        for i in 0..self.rows {
            data.extend(self.row(i)[start..end].iter().cloned());
        }
        Matrix { rows: self.rows, cols: end - start, data }
    }

    /// Top-left `k × k` block.
    pub fn leading_block(&self, k: usize) -> Matrix {
        let mut m = Matrix::zeros(k, k);
        for i in 0..k {
            for j in 0..k {
                m[(i, j)] = self[(i, j)].clone();
            }
        }
        m
    }

    fn same_shape(&self, other: &Matrix) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                expected: self.rows * self.cols,
                found: other.rows * other.cols,
            });
        }
        Ok(())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    /// Reduced row-echelon form with leftmost pivots, plus the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let cols = m.cols;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(p, r);
            let inv = m[(r, c)].recip();
            for j in c..cols {
                if !m[(r, j)].is_zero() {
                    m[(r, j)] *= &inv;
                }
            }
            let support: Vec<(usize, Scalar)> = (c..cols)
                .filter(|&j| !m[(r, j)].is_zero())
                .map(|j| (j, m[(r, j)].clone()))
                .collect();
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone();
                for (j, v) in &support {
                    m[(i, *j)] -= &f * v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    /// Rank by fraction-free elimination on the rows cleared of denominators.
    pub fn rank(&self) -> usize {
        let rows: Vec<Vec<BigInt>> = (0..self.rows).map(|i| integer_row(self.row(i))).collect();
        integer_rank(rows, self.cols)
    }

    /// `{x : self · x = 0}`.
    pub fn kernel(&self) -> Subspace {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let vectors: Vec<Vec<Scalar>> = (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = vec![Scalar::zero(); self.cols];
                v[f] = Scalar::one();
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = -r[(row, f)].clone();
                }
                v
            })
            .collect();
        Subspace::span(self.cols, &vectors).expect("kernel vectors have matching length")
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let aug = self.hstack(&Matrix::identity(n)).ok()?;
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(r.column_block(n, 2 * n))
    }

    pub fn determinant(&self) -> Scalar {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let mut m = self.clone();
        let n = m.rows;
        let mut det = Scalar::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[(i, c)].is_zero()) else {
                return Scalar::zero();
            };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let pivot = m[(c, c)].clone();
            det *= &pivot;
            for i in c + 1..n {
                if m[(i, c)].is_zero() {
                    continue;
                }
                let f = &m[(i, c)] / &pivot;
                for j in c..n {
                    let t = &f * &m[(c, j)];
                    m[(i, j)] -= t;
                }
            }
        }
        det
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        &mut self.data[i * self.cols + j]
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        self.try_add(rhs).expect("matrix shapes differ")
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        self.try_sub(rhs).expect("matrix shapes differ")
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        self.try_mul(rhs).expect("inner dimensions differ")
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| -x).collect() }
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// A linear subspace of `K^ambient`, stored as the RREF of a basis.
///
/// The stored form is canonical, so derived equality is set equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::zeros(0, ambient), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::identity(ambient), pivots: (0..ambient).collect() }
    }

    /// Row space of `generators`.
    pub fn row_space(generators: &Matrix) -> Self {
        let (r, pivots) = generators.rref();
        let rank = pivots.len();
        let data = r.data[..rank * r.cols].to_vec();
        Subspace {
            ambient: generators.cols,
            basis: Matrix { rows: rank, cols: generators.cols, data },
            pivots,
        }
    }

    pub fn span(ambient: usize, vectors: &[Vec<Scalar>]) -> Result<Self> {
        Ok(Self::row_space(&Matrix::from_rows(ambient, vectors)?))
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows
    }

    /// Canonical basis rows.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Scalar>> {
        self.basis.row_vecs()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates of `v` in the canonical basis, or `None` if `v` is outside.
    pub fn coordinates(&self, v: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
        if v.len() != self.ambient {
            return Err(Error::DimensionMismatch { expected: self.ambient, found: v.len() });
        }
        let coords: Vec<Scalar> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut residual = v.to_vec();
        for (r, c) in coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (j, b) in self.basis.row(r).iter().enumerate() {
                if !b.is_zero() {
                    residual[j] -= c * b;
                }
            }
        }
        Ok(residual.iter().all(Zero::is_zero).then_some(coords))
    }

    pub fn contains(&self, v: &[Scalar]) -> Result<bool> {
        Ok(self.coordinates(v)?.is_some())
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        for v in self.basis_vectors() {
            if !other.contains(&v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `{y : <x, y> = 0 for all x}` under the standard dot product.
    pub fn annihilator(&self) -> Subspace {
        self.basis.kernel()
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch { expected: self.ambient, found: other.ambient });
        }
        Ok(())
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let stacked = self.annihilator().basis.vstack(&other.annihilator().basis)?;
        Ok(stacked.kernel())
    }

    pub fn sum_span(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        Ok(Subspace::row_space(&self.basis.vstack(&other.basis)?))
    }
}

/// `v` scaled to an integer vector with coprime entries; same line as `v`.
pub fn integer_row(v: &[Scalar]) -> Vec<BigInt> {
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() || g.is_one() {
        ints
    } else {
        ints.into_iter().map(|x| x / &g).collect()
    }
}

/// [`integer_row`] as rationals.
pub fn primitive(v: &[Scalar]) -> Vec<Scalar> {
    integer_row(v).into_iter().map(Scalar::from_integer).collect()
}

/// Bareiss elimination; every intermediate entry is a minor, so divisions are exact.
fn integer_rank(mut a: Vec<Vec<BigInt>>, cols: usize) -> usize {
    let rows = a.len();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(p, r);
        let (top, rest) = a.split_at_mut(r + 1);
        let pivot_row = &top[r];
        let pivot = &pivot_row[c];
        for row in rest.iter_mut() {
            let lead = std::mem::take(&mut row[c]);
            for j in c + 1..cols {
                let mut t = pivot * &row[j];
                if !lead.is_zero() && !pivot_row[j].is_zero() {
                    t -= &lead * &pivot_row[j];
                }
                row[j] = if prev.is_one() { t } else { t / &prev };
            }
        }
        prev = pivot.clone();
        r += 1;
    }
    r
}

pub fn rref(m: &Matrix) -> (Matrix, usize) {
    let (r, p) = m.rref();
    (r, p.len())
}

pub fn kernel(m: &Matrix) -> Subspace {
    m.kernel()
}

pub fn intersect(a: &Subspace, b: &Subspace) -> Result<Subspace> {
    a.intersect(b)
}

pub fn sum_span(a: &Subspace, b: &Subspace) -> Result<Subspace> {
    a.sum_span(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ratio;
    use proptest::prelude::*;

    fn e(n: usize, i: usize) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); n];
        v[i] = Scalar::one();
        v
    }

    #[test]
    fn rref_identity_and_zero() {
        let id = Matrix::identity(3);
        assert_eq!(rref(&id), (id.clone(), 3));
        let z = Matrix::zeros(2, 5);
        assert_eq!(rref(&z), (z.clone(), 0));
    }

    #[test]
    fn primitive_clears_denominators_and_content() {
        let v = vec![ratio(2, 3), int(0), ratio(-4, 9)];
        assert_eq!(primitive(&v), vec![int(3), int(0), int(-2)]);
        assert_eq!(primitive(&[int(0), int(0)]), vec![int(0), int(0)]);
    }

    #[test]
    fn rank_of_dependent_rows() {
        let m = Matrix::from_i64(2, 2, &[1, 2, 2, 4]);
        assert_eq!(rref(&m).1, 1);
        assert_eq!(m.rank(), 1);
        assert_eq!(m.determinant(), Scalar::zero());
    }

    #[test]
    fn rref_normalizes_leftmost_pivots() {
        let m = Matrix::from_i64(2, 3, &[0, 2, 4, 3, 0, 3]);
        let (r, p) = m.rref();
        assert_eq!(p, vec![0, 1]);
        assert_eq!(r, Matrix::from_i64(2, 3, &[1, 0, 1, 0, 1, 2]));
    }

    #[test]
    fn kernel_trivial_cases() {
        assert_eq!(kernel(&Matrix::identity(4)).dim(), 0);
        assert_eq!(kernel(&Matrix::zeros(3, 3)), Subspace::full(3));
    }

    #[test]
    fn kernel_of_single_row() {
        let m = Matrix::from_i64(1, 3, &[1, 1, 0]);
        let k = kernel(&m);
        assert_eq!(k.dim(), 2);
        assert!(k.contains(&[int(1), int(-1), int(0)]).unwrap());
        for v in k.basis_vectors() {
            assert!(m.mul_vec(&v).unwrap().iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn intersect_and_sum_of_coordinate_planes() {
        let a = Subspace::span(3, &[e(3, 0), e(3, 1)]).unwrap();
        let b = Subspace::span(3, &[e(3, 1), e(3, 2)]).unwrap();
        assert_eq!(intersect(&a, &b).unwrap(), Subspace::span(3, &[e(3, 1)]).unwrap());
        assert_eq!(intersect(&a, &a).unwrap(), a);
        assert_eq!(sum_span(&a, &b).unwrap(), Subspace::full(3));
        let l1 = Subspace::span(3, &[e(3, 0)]).unwrap();
        let l2 = Subspace::span(3, &[e(3, 1)]).unwrap();
        assert_eq!(sum_span(&l1, &l2).unwrap(), a);
        assert_eq!(sum_span(&a, &Subspace::zero(3)).unwrap(), a);
        assert_eq!(sum_span(&a, &a).unwrap(), a);
    }

    #[test]
    fn mismatched_ambient_is_an_error() {
        let a = Subspace::full(2);
        let b = Subspace::full(3);
        assert!(matches!(a.intersect(&b), Err(Error::DimensionMismatch { .. })));
        assert!(matches!(a.sum_span(&b), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn inverse_round_trip() {
        let m = Matrix::from_i64(3, 3, &[2, 1, 0, 0, 1, 3, 1, 0, 1]);
        let inv = m.inverse().unwrap();
        assert_eq!(&m * &inv, Matrix::identity(3));
        assert_eq!(m.determinant(), int(5));
        assert!(Matrix::from_i64(2, 2, &[1, 2, 2, 4]).inverse().is_none());
    }

    #[test]
    fn coordinates_in_canonical_basis() {
        let s = Subspace::span(3, &[vec![int(1), int(1), int(0)], vec![int(0), int(2), int(2)]]).unwrap();
        let v = vec![int(3), ratio(7, 2), ratio(1, 2)];
        let c = s.coordinates(&v).unwrap().unwrap();
        let rebuilt: Vec<Scalar> = (0..3)
            .map(|j| c.iter().enumerate().map(|(r, x)| x * &s.basis()[(r, j)]).sum())
            .collect();
        assert_eq!(rebuilt, v);
        assert!(!s.contains(&[int(1), int(0), int(0)]).unwrap());
    }

    fn small_matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
        proptest::collection::vec(-3i64..=3, rows * cols)
            .prop_map(move |v| Matrix::from_i64(rows, cols, &v))
    }

    fn shaped_matrix() -> impl Strategy<Value = Matrix> {
        (1usize..6, 1usize..7).prop_flat_map(|(r, c)| small_matrix(r, c))
    }

    /// Subspace of K^6 spanned by up to four sparse-ish integer vectors.
    fn subspace6() -> impl Strategy<Value = Subspace> {
        (0usize..5)
            .prop_flat_map(|k| small_matrix(k, 6))
            .prop_map(|m| Subspace::row_space(&m))
    }

    proptest! {
        #![proptest_config(crate::testutil::fixed_config(128))]

        #[test]
        fn rank_equals_transpose_rank(m in shaped_matrix()) {
            prop_assert_eq!(m.rank(), m.transpose().rank());
            prop_assert_eq!(m.rank(), rref(&m).1);
        }

        #[test]
        fn rank_nullity(m in shaped_matrix()) {
            let k = kernel(&m);
            prop_assert_eq!(k.dim() + m.rank(), m.cols());
            for v in k.basis_vectors() {
                prop_assert!(m.mul_vec(&v).unwrap().iter().all(Zero::is_zero));
            }
        }

        #[test]
        fn grassmann_identity(a in subspace6(), b in subspace6()) {
            let cap = a.intersect(&b).unwrap();
            let cup = a.sum_span(&b).unwrap();
            prop_assert_eq!(a.dim() + b.dim(), cup.dim() + cap.dim());
            prop_assert!(cap.is_subspace_of(&a).unwrap());
            prop_assert!(cap.is_subspace_of(&b).unwrap());
            prop_assert!(a.is_subspace_of(&cup).unwrap());
        }

        #[test]
        fn canonical_form_ignores_spanning_set(m in small_matrix(3, 5), mix in small_matrix(3, 3)) {
            // Any combination of the rows generates a subspace of the original;
            // when the mixing matrix is invertible the spans coincide.
            let a = Subspace::row_space(&m);
            let b = Subspace::row_space(&(&mix * &m));
            prop_assert!(b.is_subspace_of(&a).unwrap());
            if mix.determinant() != Scalar::zero() {
                prop_assert_eq!(&a, &b);
            }
            let doubled = Subspace::row_space(&m.vstack(&m.scale(&int(2))).unwrap());
            prop_assert_eq!(a, doubled);
        }
    }
}
