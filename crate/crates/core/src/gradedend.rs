//! Graded endomorphisms of a two-term complex `V1 --d--> V0`, the
//! differential `delta` and super bracket on them, and the crossed module
//! `End(V)` obtained by truncation.
//!
//! A graded endomorphism is stored as a block matrix on `V0 + V1` (coordinates
//! of `V0` first). Degree `k` maps `V_i` to `V_{i+k}`.

use crate::error::{shape, Error, Result};
use crate::exactlin::vector::{self, Vector};
use crate::exactlin::{Matrix, Rational, Subspace, Tensor};
use crate::lie2::CrossedModuleAlg;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TwoTermComplex {
    d: Matrix,
}

impl TwoTermComplex {
    /// Dimensions are read off `d: V1 -> V0`.
    pub fn new(d: Matrix) -> Self {
        Self { d }
    }

    pub fn with_dims(dim_v1: usize, dim_v0: usize, d: Matrix) -> Result<Self> {
        if d.rows() != dim_v0 || d.cols() != dim_v1 {
            return Err(shape(format!("d must be {dim_v0}x{dim_v1}, got {}x{}", d.rows(), d.cols())));
        }
        Ok(Self { d })
    }

    pub fn zero(dim_v1: usize, dim_v0: usize) -> Self {
        Self { d: Matrix::zeros(dim_v0, dim_v1) }
    }

    pub fn dim_v1(&self) -> usize {
        self.d.cols()
    }

    pub fn dim_v0(&self) -> usize {
        self.d.rows()
    }

    pub fn d(&self) -> &Matrix {
        &self.d
    }

    /// `dim ker d`.
    pub fn h1_dim(&self) -> usize {
        self.dim_v1() - self.d.rank()
    }

    /// `dim coker d`.
    pub fn h0_dim(&self) -> usize {
        self.dim_v0() - self.d.rank()
    }

    fn total(&self) -> usize {
        self.dim_v0() + self.dim_v1()
    }

    /// `d` as the degree -1 endomorphism.
    pub fn differential(&self) -> GradedEndo {
        GradedEndo::degree_minus1(self, self.d.clone()).expect("d has the right shape")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedEndo {
    degree: i32,
    n0: usize,
    map: Matrix,
}

impl GradedEndo {
    pub fn zero(c: &TwoTermComplex, degree: i32) -> Self {
        Self { degree, n0: c.dim_v0(), map: Matrix::zeros(c.total(), c.total()) }
    }

    pub fn degree0(c: &TwoTermComplex, a0: Matrix, a1: Matrix) -> Result<Self> {
        let (n0, n1) = (c.dim_v0(), c.dim_v1());
        if (a0.rows(), a0.cols(), a1.rows(), a1.cols()) != (n0, n0, n1, n1) {
            return Err(shape("degree 0 blocks must be endomorphisms of V0 and V1"));
        }
        Ok(Self { degree: 0, n0, map: a0.block_diag(&a1) })
    }

    /// `m: V0 -> V1`.
    pub fn degree1(c: &TwoTermComplex, m: Matrix) -> Result<Self> {
        let (n0, n1) = (c.dim_v0(), c.dim_v1());
        if (m.rows(), m.cols()) != (n1, n0) {
            return Err(shape(format!("degree 1 map must be {n1}x{n0}")));
        }
        let mut map = Matrix::zeros(n0 + n1, n0 + n1);
        map.set_block(n0, 0, &m);
        Ok(Self { degree: 1, n0, map })
    }

    /// `m: V1 -> V0`.
    pub fn degree_minus1(c: &TwoTermComplex, m: Matrix) -> Result<Self> {
        let (n0, n1) = (c.dim_v0(), c.dim_v1());
        if (m.rows(), m.cols()) != (n0, n1) {
            return Err(shape(format!("degree -1 map must be {n0}x{n1}")));
        }
        let mut map = Matrix::zeros(n0 + n1, n0 + n1);
        map.set_block(0, n0, &m);
        Ok(Self { degree: -1, n0, map })
    }

    pub fn degree(&self) -> i32 {
        self.degree
    }

    /// The whole block matrix on `V0 + V1`.
    pub fn matrix(&self) -> &Matrix {
        &self.map
    }

    fn n1(&self) -> usize {
        self.map.rows() - self.n0
    }

    /// `V0 -> V0` block.
    pub fn a0(&self) -> Matrix {
        self.map.block(0, 0, self.n0, self.n0)
    }

    /// `V1 -> V1` block.
    pub fn a1(&self) -> Matrix {
        self.map.block(self.n0, self.n0, self.n1(), self.n1())
    }

    /// `V0 -> V1` block.
    pub fn up(&self) -> Matrix {
        self.map.block(self.n0, 0, self.n1(), self.n0)
    }

    /// `V1 -> V0` block.
    pub fn down(&self) -> Matrix {
        self.map.block(0, self.n0, self.n0, self.n1())
    }

    pub fn is_zero(&self) -> bool {
        self.map.is_zero()
    }

    pub fn add(&self, other: &GradedEndo) -> GradedEndo {
        assert_eq!(self.degree, other.degree, "adding endomorphisms of different degree");
        GradedEndo { degree: self.degree, n0: self.n0, map: &self.map + &other.map }
    }

    pub fn scale(&self, c: &Rational) -> GradedEndo {
        GradedEndo { degree: self.degree, n0: self.n0, map: self.map.scale(c) }
    }
}

fn sign(k: i32) -> Rational {
    if k.rem_euclid(2) == 0 {
        Rational::from_integer(1.into())
    } else {
        Rational::from_integer((-1).into())
    }
}

/// `delta(T) = d T - (-1)^k T d` for `T` of degree `k`.
pub fn delta(c: &TwoTermComplex, t: &GradedEndo) -> Result<GradedEndo> {
    if !(0..=1).contains(&t.degree) {
        return Err(Error::DegreeOutOfRange(t.degree - 1));
    }
    let d = c.differential();
    let map = &(&d.map * &t.map) - &(&t.map * &d.map).scale(&sign(t.degree));
    Ok(GradedEndo { degree: t.degree - 1, n0: t.n0, map })
}

/// `[T, S] = T S - (-1)^{|T||S|} S T`. Degrees outside `{-1, 0, 1}` give the
/// zero map of that degree.
pub fn super_bracket(t: &GradedEndo, s: &GradedEndo) -> GradedEndo {
    let map = &(&t.map * &s.map) - &(&s.map * &t.map).scale(&sign(t.degree * s.degree));
    GradedEndo { degree: t.degree + s.degree, n0: t.n0, map }
}

/// The crossed module `End(V) = (k1, k0, delta, phi)` together with the
/// coordinate systems it uses.
///
/// * `k1 = Hom(V0, V1)`, coordinates are the row-major entries.
/// * `k0 = {(A, B) : A d = d B}` inside `End(V0) + End(V1)`, whose ambient
///   coordinates are `A` then `B`, both row-major; `k0` carries the canonical
///   kernel basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EndCrossedModule {
    complex: TwoTermComplex,
    k0: Subspace,
    xmod: CrossedModuleAlg,
}

impl EndCrossedModule {
    pub fn new(c: &TwoTermComplex) -> Self {
        let (n0, n1) = (c.dim_v0(), c.dim_v1());
        let d = c.d();
        // (A, B) -> A d - d B as a linear map on End0 coordinates
        let mut cond = Matrix::zeros(n0 * n1, n0 * n0 + n1 * n1);
        for p in 0..n0 * n0 + n1 * n1 {
            let (a, b) = split_end0(n0, n1, &vector::unit(n0 * n0 + n1 * n1, p));
            let v = &(&a * d) - &(d * &b);
            for (row, x) in v.flat().iter().enumerate() {
                cond.set(row, p, x.clone());
            }
        }
        let k0 = Subspace::kernel(&cond);
        let mut me = Self { complex: c.clone(), k0, xmod: CrossedModuleAlg::trivial(&crate::lie2::LieAlgebra::abelian(0)) };
        me.xmod = me.build();
        me
    }

    fn build(&self) -> CrossedModuleAlg {
        let (n0, n1) = (self.complex.dim_v0(), self.complex.dim_v1());
        let d = self.complex.d();
        let m1 = n0 * n1;
        let m0 = self.k0.dim();
        let k1 = |i: usize| self.k1_matrix(&vector::unit(m1, i));
        let k0 = |i: usize| self.k0_pair(&vector::unit(m0, i));
        let h1 = Tensor::from_fn(&[m1, m1], m1, |i| {
            let (a, b) = (k1(i[0]), k1(i[1]));
            k1_coords(&(&(&(&a * d) * &b) - &(&(&b * d) * &a)))
        });
        let h0 = Tensor::from_fn(&[m0, m0], m0, |i| {
            let ((a0, a1), (b0, b1)) = (k0(i[0]), k0(i[1]));
            self.k0_coords(&a0.commutator(&b0), &a1.commutator(&b1)).expect("k0 is a subalgebra")
        });
        let dt = Matrix::from_columns(
            &(0..m1)
                .map(|i| {
                    let a = k1(i);
                    self.k0_coords(&(d * &a), &(&a * d)).expect("delta lands in k0")
                })
                .collect::<Vec<_>>(),
            m0,
        );
        let phi = Tensor::from_fn(&[m0, m1], m1, |i| {
            let (x0, x1) = k0(i[0]);
            let a = k1(i[1]);
            k1_coords(&(&(&x1 * &a) - &(&a * &x0)))
        });
        CrossedModuleAlg::new(h1, h0, dt, phi).expect("End(V) is well-formed")
    }

    pub fn complex(&self) -> &TwoTermComplex {
        &self.complex
    }

    pub fn xmod(&self) -> &CrossedModuleAlg {
        &self.xmod
    }

    pub fn k1_dim(&self) -> usize {
        self.complex.dim_v0() * self.complex.dim_v1()
    }

    pub fn k0_dim(&self) -> usize {
        self.k0.dim()
    }

    pub fn k0_space(&self) -> &Subspace {
        &self.k0
    }

    /// The map `V0 -> V1` with the given `k1` coordinates.
    pub fn k1_matrix(&self, v: &[Rational]) -> Matrix {
        Matrix::from_flat(self.complex.dim_v1(), self.complex.dim_v0(), v.to_vec()).expect("k1 coordinates")
    }

    /// The pair `(A, B)` with the given `k0` coordinates.
    pub fn k0_pair(&self, v: &[Rational]) -> (Matrix, Matrix) {
        split_end0(self.complex.dim_v0(), self.complex.dim_v1(), &self.k0.embed(v))
    }

    /// `k0` coordinates of `(A, B)`; fails unless `A d = d B`.
    pub fn k0_coords(&self, a: &Matrix, b: &Matrix) -> Result<Vector> {
        let ambient = vector::concat(&[a.flat(), b.flat()]);
        self.k0.coords(&ambient).ok_or_else(|| Error::ImageNotInKernel(format!("({a}, {b})")))
    }

    /// The degree-0 endomorphism with the given `k0` coordinates.
    pub fn k0_endo(&self, v: &[Rational]) -> GradedEndo {
        let (a, b) = self.k0_pair(v);
        GradedEndo::degree0(&self.complex, a, b).expect("k0 shapes")
    }

    pub fn k1_endo(&self, v: &[Rational]) -> GradedEndo {
        GradedEndo::degree1(&self.complex, self.k1_matrix(v)).expect("k1 shapes")
    }
}

/// Row-major coordinates of a `k1` matrix.
pub fn k1_coords(m: &Matrix) -> Vector {
    m.flat().to_vec()
}

fn split_end0(n0: usize, n1: usize, v: &[Rational]) -> (Matrix, Matrix) {
    let a = Matrix::from_flat(n0, n0, v[..n0 * n0].to_vec()).expect("A block");
    let b = Matrix::from_flat(n1, n1, v[n0 * n0..].to_vec()).expect("B block");
    (a, b)
}

/// `End(V)` as a crossed module of Lie algebras.
pub fn end_crossed_module(c: &TwoTermComplex) -> CrossedModuleAlg {
    EndCrossedModule::new(c).xmod().clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::int;
    use crate::lie2::check_crossed_module;

    fn one() -> TwoTermComplex {
        TwoTermComplex::new(Matrix::identity(1))
    }

    fn scalar(x: i64) -> Matrix {
        Matrix::from_ints(&[&[x]])
    }

    #[test]
    fn delta_examples() {
        let c = one();
        let t = GradedEndo::degree1(&c, scalar(3)).unwrap();
        let dt = delta(&c, &t).unwrap();
        assert_eq!((dt.degree(), dt.a0(), dt.a1()), (0, scalar(3), scalar(3)));
        let s = GradedEndo::degree0(&c, scalar(2), scalar(5)).unwrap();
        let ds = delta(&c, &s).unwrap();
        assert_eq!((ds.degree(), ds.down()), (-1, scalar(3)));
        assert!(delta(&c, &dt).unwrap().is_zero());
        assert_eq!(delta(&c, &ds), Err(Error::DegreeOutOfRange(-2)));
    }

    #[test]
    fn bracket_examples() {
        let c = one();
        let t = GradedEndo::degree1(&c, scalar(5)).unwrap();
        let s = GradedEndo::degree0(&c, scalar(2), scalar(3)).unwrap();
        let b = super_bracket(&s, &t);
        assert_eq!((b.degree(), b.up()), (1, scalar(5)));
        let tt = super_bracket(&t, &t);
        assert_eq!(tt.degree(), 2);
        assert!(tt.is_zero());
        assert!(super_bracket(&s, &s).is_zero());
    }

    #[test]
    fn end_of_scalar_line() {
        let x = end_crossed_module(&one());
        assert!(x.bracket_h1_tensor().is_zero());
        assert!(check_crossed_module(&x).passed());
    }

    #[test]
    fn k1_bracket_by_hand() {
        // dims (2,1): V1 = Q^2, V0 = Q, d = [1 0]
        let c = TwoTermComplex::new(Matrix::from_ints(&[&[1, 0]]));
        let e = EndCrossedModule::new(&c);
        let a = vec![int(1), int(2)];
        let b = vec![int(3), int(4)];
        assert_eq!(e.xmod().bracket_h1(&a, &b), vec![int(0), int(2)]);
        assert!(check_crossed_module(e.xmod()).passed());
    }

    #[test]
    fn zero_differential_gives_full_end0() {
        let e = EndCrossedModule::new(&TwoTermComplex::zero(1, 1));
        assert_eq!(e.k0_dim(), 2);
        assert!(e.xmod().dt().is_zero());
    }

    #[test]
    fn identity_differential_uses_v1_block_coordinates() {
        let e = EndCrossedModule::new(&TwoTermComplex::new(Matrix::identity(2)));
        let b = Matrix::from_ints(&[&[1, 2], &[3, 4]]);
        assert_eq!(e.k0_coords(&b, &b).unwrap(), b.flat().to_vec());
        assert!(e.k0_coords(&b, &Matrix::identity(2)).is_err());
    }
}
