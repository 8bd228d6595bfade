use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::vector::{self, Vector};
use super::{int, Rational};
use crate::error::{shape, Error, Result};

/// Dense row-major matrix of exact rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Rational::one();
        }
        m
    }

    pub fn scalar(n: usize, c: &Rational) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = c.clone();
        }
        m
    }

    pub fn from_flat(rows: usize, cols: usize, data: Vec<Rational>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(shape(format!("{} entries for a {rows}x{cols} matrix", data.len())));
        }
        Ok(Self { rows, cols, data })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    /// Builds a matrix from rows. The column count must be given separately so
    /// that `0 x n` matrices are expressible.
    pub fn from_rows(rows: Vec<Vector>, cols: usize) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for (i, r) in rows.into_iter().enumerate() {
            if r.len() != cols {
                return Err(shape(format!("row {i} has {} entries, expected {cols}", r.len())));
            }
            data.extend(r);
        }
        Ok(Self { rows: n, cols, data })
    }

    /// Matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_columns(columns: &[Vector], rows: usize) -> Self {
        Self::from_fn(rows, columns.len(), |i, j| columns[j][i].clone())
    }

    /// Convenience constructor from small integer literals.
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_fn(rows.len(), cols, |i, j| int(rows[i][j]))
    }

    pub fn column(v: &[Rational]) -> Self {
        Self { rows: v.len(), cols: 1, data: v.to_vec() }
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

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    /// Entries in row-major order.
    pub fn flat(&self) -> &[Rational] {
        &self.data
    }

    pub fn row(&self, i: usize) -> Vector {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn col(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vector> {
        (0..self.cols).map(|j| self.col(j)).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self { rows: self.rows, cols: self.cols, data: vector::scale(c, &self.data) }
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vector {
        assert_eq!(v.len(), self.cols, "mul_vec: {}x{} times {}", self.rows, self.cols, v.len());
        let mut out = vector::zeros(self.rows);
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, o) in out.iter_mut().enumerate() {
                let a = &self.data[i * self.cols + j];
                if !a.is_zero() {
                    *o += a * x;
                }
            }
        }
        out
    }

    pub fn checked_mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[i * self.cols + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other.data[k * other.cols + j];
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Commutator `AB - BA` of square matrices.
    pub fn commutator(&self, other: &Matrix) -> Matrix {
        &(self * other) - &(other * self)
    }

    /// Copy of the block with top-left corner `(r0, c0)`.
    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Matrix {
        Matrix::from_fn(rows, cols, |i, j| self.get(r0 + i, c0 + j).clone())
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, b: &Matrix) {
        for i in 0..b.rows {
            for j in 0..b.cols {
                self.set(r0 + i, c0 + j, b.get(i, j).clone());
            }
        }
    }

    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows, "hstack row mismatch");
        Matrix::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                other.get(i, j - self.cols).clone()
            }
        })
    }

    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols, "vstack column mismatch");
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix { rows: self.rows + other.rows, cols: self.cols, data }
    }

    pub fn block_diag(&self, other: &Matrix) -> Matrix {
        let mut m = Matrix::zeros(self.rows + other.rows, self.cols + other.cols);
        m.set_block(0, 0, self);
        m.set_block(self.rows, self.cols, other);
        m
    }

    /// Kronecker product, `self` indexing the outer blocks.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let (r, c) = (other.rows, other.cols);
        Matrix::from_fn(self.rows * r, self.cols * c, |i, j| self.get(i / r, j / c) * other.get(i % r, j % c))
    }

    pub fn rank(&self) -> usize {
        bareiss_pivots(self).len()
    }

    /// Basis of the null space in canonical form: one vector per non-pivot
    /// column `f` of the reduced echelon form, with a 1 at position `f` and
    /// zeros at every other non-pivot position. Vectors are ordered by `f`.
    pub fn kernel_basis(&self) -> Vec<Vector> {
        let (r, pivots) = rref(self);
        let n = self.cols;
        let mut is_pivot = vec![false; n];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..n)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = vector::unit(n, f);
                for (row, &p) in pivots.iter().enumerate() {
                    v[p] = -r.get(row, f).clone();
                }
                v
            })
            .collect()
    }

    /// Kernel basis as the columns of a matrix.
    pub fn kernel_matrix(&self) -> Matrix {
        Matrix::from_columns(&self.kernel_basis(), self.cols)
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.cols
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.rows
    }

    pub fn invert(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(shape(format!("cannot invert a {}x{} matrix", self.rows, self.cols)));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Matrix::zeros(0, 0));
        }
        let (r, pivots) = rref(&self.hstack(&Matrix::identity(n)));
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::Singular);
        }
        Ok(r.block(0, n, n, n))
    }

    /// Some `x` with `self * x = b`, or `None` when the system is inconsistent.
    /// Free variables are set to zero.
    pub fn solve(&self, b: &[Rational]) -> Option<Vector> {
        assert_eq!(b.len(), self.rows, "solve: right-hand side length");
        let n = self.cols;
        let (r, pivots) = rref(&self.hstack(&Matrix::column(b)));
        if pivots.last() == Some(&n) {
            return None;
        }
        let mut x = vector::zeros(n);
        for (row, &p) in pivots.iter().enumerate() {
            x[p] = r.get(row, n).clone();
        }
        Some(x)
    }

    /// Canonical basis (reduced echelon form) of the column space, as columns.
    /// Two matrices span the same subspace iff their canonical spans are equal.
    pub fn canonical_span(&self) -> Matrix {
        let (r, pivots) = rref(&self.transpose());
        r.block(0, 0, pivots.len(), self.rows).transpose()
    }

    /// Entries converted to `f64`, row-major.
    pub fn to_f64(&self) -> Vec<f64> {
        use num_traits::ToPrimitive;
        self.data.iter().map(|x| x.to_f64().unwrap_or(f64::NAN)).collect()
    }
}

/// Reduced row echelon form and pivot columns.
///
/// Forward elimination is fraction-free (Bareiss) on an integer copy of the
/// matrix; only the final back-substitution divides.
pub(crate) fn rref(m: &Matrix) -> (Matrix, Vec<usize>) {
    let (ints, pivots) = bareiss(m);
    let cols = m.cols;
    let mut r = Matrix::zeros(pivots.len(), cols);
    for (i, &p) in pivots.iter().enumerate() {
        let lead = Rational::from_integer(ints[i][p].clone());
        for (j, x) in ints[i].iter().enumerate().skip(p) {
            r.set(i, j, Rational::from_integer(x.clone()) / &lead);
        }
    }
    for i in (0..pivots.len()).rev() {
        let p = pivots[i];
        for k in 0..i {
            let f = r.get(k, p).clone();
            if f.is_zero() {
                continue;
            }
            for j in p..cols {
                let sub = &f * r.get(i, j);
                if !sub.is_zero() {
                    let v = r.get(k, j) - sub;
                    r.set(k, j, v);
                }
            }
        }
    }
    (r, pivots)
}

fn bareiss_pivots(m: &Matrix) -> Vec<usize> {
    bareiss(m).1
}

/// Fraction-free row echelon form. Each row is first scaled by the lcm of its
/// denominators; every later division is exact.
fn bareiss(m: &Matrix) -> (Vec<Vec<BigInt>>, Vec<usize>) {
    let mut a: Vec<Vec<BigInt>> = (0..m.rows)
        .map(|i| {
            let row = &m.data[i * m.cols..(i + 1) * m.cols];
            let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            row.iter().map(|x| x.numer() * (&l / x.denom())).collect()
        })
        .collect();
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..m.cols {
        if r == m.rows {
            break;
        }
        let Some(p) = (r..m.rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..m.rows {
            for j in c + 1..m.cols {
                let v = &a[r][c] * &a[i][j] - &a[i][c] * &a[r][j];
                a[i][j] = v / &prev;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    (a, pivots)
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        self.checked_mul(rhs).expect("matrix product shape")
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix sum shape");
        Matrix { rows: self.rows, cols: self.cols, data: vector::add(&self.data, &rhs.data) }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix difference shape");
        Matrix { rows: self.rows, cols: self.cols, data: vector::sub(&self.data, &rhs.data) }
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: vector::neg(&self.data) }
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::rat;

    /// Plain Gauss-Jordan over the rationals, independent of the Bareiss path.
    fn naive_rank(m: &Matrix) -> usize {
        let mut a: Vec<Vector> = (0..m.rows()).map(|i| m.row(i)).collect();
        let mut rank = 0;
        for c in 0..m.cols() {
            let Some(p) = (rank..a.len()).find(|&i| !a[i][c].is_zero()) else { continue };
            a.swap(rank, p);
            let piv = a[rank][c].clone();
            for i in 0..a.len() {
                if i != rank && !a[i][c].is_zero() {
                    let f = &a[i][c] / &piv;
                    let pr = a[rank].clone();
                    vector::axpy(&mut a[i], &-f, &pr);
                }
            }
            rank += 1;
        }
        rank
    }

    #[test]
    fn kernel_of_rank_one() {
        let m = Matrix::from_ints(&[&[1, 2], &[2, 4]]);
        // free column 1 -> (-2, 1)
        assert_eq!(m.kernel_basis(), vec![vec![int(-2), int(1)]]);
    }

    #[test]
    fn kernel_of_identity_and_zero() {
        assert!(Matrix::identity(2).kernel_basis().is_empty());
        let z = Matrix::zeros(2, 2);
        assert_eq!(z.kernel_basis(), vec![vector::unit(2, 0), vector::unit(2, 1)]);
    }

    #[test]
    fn kernel_of_empty_shapes() {
        assert_eq!(Matrix::zeros(0, 3).kernel_basis().len(), 3);
        assert!(Matrix::zeros(3, 0).kernel_basis().is_empty());
    }

    #[test]
    fn inverse_of_unipotent() {
        let m = Matrix::from_ints(&[&[1, 1], &[0, 1]]);
        assert_eq!(m.invert().unwrap(), Matrix::from_ints(&[&[1, -1], &[0, 1]]));
        assert_eq!(Matrix::identity(3).invert().unwrap(), Matrix::identity(3));
        assert_eq!(Matrix::from_ints(&[&[1, 2], &[2, 4]]).invert(), Err(Error::Singular));
    }

    #[test]
    fn inverse_with_fractions() {
        let m = Matrix::from_fn(2, 2, |i, j| rat((i + 2 * j + 1) as i64, (j + 2) as i64));
        let inv = m.invert().unwrap();
        assert_eq!(&m * &inv, Matrix::identity(2));
        assert_eq!(&inv * &m, Matrix::identity(2));
    }

    #[test]
    fn solve_consistent_and_not() {
        let m = Matrix::from_ints(&[&[1, 2], &[2, 4]]);
        let x = m.solve(&[int(3), int(6)]).unwrap();
        assert_eq!(m.mul_vec(&x), vec![int(3), int(6)]);
        assert!(m.solve(&[int(3), int(5)]).is_none());
    }

    #[test]
    fn canonical_span_identifies_subspaces() {
        let a = Matrix::from_ints(&[&[1, 0], &[1, 1], &[0, 1]]);
        let b = Matrix::from_ints(&[&[1, 1], &[2, 1], &[1, 0]]);
        assert_eq!(a.canonical_span(), b.canonical_span());
        assert_ne!(a.canonical_span(), Matrix::identity(3).canonical_span());
    }

    #[test]
    fn bareiss_rank_matches_naive() {
        let m = Matrix::from_ints(&[&[2, -3, 1, 0], &[4, -6, 2, 0], &[1, 1, 1, 1]]);
        assert_eq!(m.rank(), naive_rank(&m));
        assert_eq!(m.rank(), 2);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn matrix() -> impl Strategy<Value = Matrix> {
            (0usize..=5, 0usize..=5).prop_flat_map(|(r, c)| {
                proptest::collection::vec(-3i64..=3, r * c)
                    .prop_map(move |v| Matrix::from_fn(r, c, |i, j| int(v[i * c + j])))
            })
        }

        proptest! {
            #[test]
            fn rank_nullity(m in matrix()) {
                let ker = m.kernel_basis();
                prop_assert_eq!(m.rank() + ker.len(), m.cols());
                prop_assert_eq!(m.rank(), naive_rank(&m));
                for v in &ker {
                    prop_assert!(vector::is_zero(&m.mul_vec(v)));
                }
                prop_assert_eq!(Matrix::from_columns(&ker, m.cols()).rank(), ker.len());
            }

            #[test]
            fn inverse_is_two_sided(m in matrix()) {
                if let Ok(inv) = m.invert() {
                    let n = m.rows();
                    prop_assert_eq!(&inv * &m, Matrix::identity(n));
                    prop_assert_eq!(&m * &inv, Matrix::identity(n));
                } else if m.is_square() {
                    prop_assert!(m.rank() < m.rows());
                }
            }
        }
    }
}
