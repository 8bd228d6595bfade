use crate::error::{shape, Error, Result};
use crate::exactlin::vector::{self, Vector};
use crate::exactlin::{Matrix, Rational, Tensor};
use crate::report::Report;

use super::{basis_label, show, Lie2Algebra};

/// Lie 2-algebra morphism `(f0, f1, f2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lie2Morphism {
    f0: Matrix,
    f1: Matrix,
    f2: Tensor,
}

impl Lie2Morphism {
    pub fn new(f0: Matrix, f1: Matrix, f2: Tensor) -> Result<Self> {
        let (l0, w1) = (f0.cols(), f1.rows());
        if f2.dims() != [l0, l0] || f2.out_dim() != w1 {
            return Err(shape(format!("f2 must be [{l0}, {l0}] -> {w1}, got {:?} -> {}", f2.dims(), f2.out_dim())));
        }
        if let Some(idx) = f2.antisymmetry_violation(0, 1) {
            return Err(Error::NotAntisymmetric(format!("f2 at {}", basis_label(&idx))));
        }
        Ok(Self { f0, f1, f2 })
    }

    /// `f2 = 0`.
    pub fn strict(f0: Matrix, f1: Matrix) -> Self {
        let f2 = Tensor::zeros(&[f0.cols(), f0.cols()], f1.rows());
        Self { f0, f1, f2 }
    }

    pub fn identity(a: &Lie2Algebra) -> Self {
        Self::strict(Matrix::identity(a.dim0()), Matrix::identity(a.dim1()))
    }

    pub fn f0(&self) -> &Matrix {
        &self.f0
    }

    pub fn f1(&self) -> &Matrix {
        &self.f1
    }

    pub fn f2(&self) -> &Tensor {
        &self.f2
    }

    pub fn f2_at(&self, x: &[Rational], y: &[Rational]) -> Vector {
        self.f2.eval(&[x, y])
    }

    pub fn is_strict(&self) -> bool {
        self.f2.is_zero()
    }

    pub fn is_injective(&self) -> bool {
        self.f0.is_injective() && self.f1.is_injective()
    }
}

/// `g o f` with `(g o f)_2(X, Y) = g2(f0 X, f0 Y) + g1(f2(X, Y))`.
pub fn compose(g: &Lie2Morphism, f: &Lie2Morphism) -> Result<Lie2Morphism> {
    let f0 = g.f0.checked_mul(&f.f0)?;
    let f1 = g.f1.checked_mul(&f.f1)?;
    let f2 = g.f2.transform(&[&f.f0, &f.f0], &Matrix::identity(g.f2.out_dim())).add(&f.f2.transform(
        &[&Matrix::identity(f.f0.cols()), &Matrix::identity(f.f0.cols())],
        &g.f1,
    ));
    Lie2Morphism::new(f0, f1, f2)
}

/// The morphism equations on basis tuples:
///
/// * `d f1 = f0 d`
/// * `f0[X,Y] - [f0 X, f0 Y] = d f2(X,Y)`
/// * `f1[X,A] - [f0 X, f1 A] = f2(X, dA)`
/// * `[f0 X, f2(Y,Z)] + c.p. + l3(f0 X, f0 Y, f0 Z) = f2([X,Y], Z) + c.p. + f1 l3(X,Y,Z)`
pub fn check_morphism(src: &Lie2Algebra, dst: &Lie2Algebra, f: &Lie2Morphism) -> Report {
    let mut r = Report::new("Lie 2-algebra morphism");
    let shapes_ok = f.f0.cols() == src.dim0()
        && f.f0.rows() == dst.dim0()
        && f.f1.cols() == src.dim1()
        && f.f1.rows() == dst.dim1();
    r.assert_that("shapes", "f0: L0 -> W0, f1: L1 -> W1", shapes_ok, || {
        format!(
            "f0 is {}x{}, f1 is {}x{}; L = ({}, {}), W = ({}, {})",
            f.f0.rows(),
            f.f0.cols(),
            f.f1.rows(),
            f.f1.cols(),
            src.dim1(),
            src.dim0(),
            dst.dim1(),
            dst.dim0()
        )
    });
    if !shapes_ok {
        return r;
    }
    let (l0, l1) = (src.dim0(), src.dim1());
    let e0 = |i| vector::unit(l0, i);
    let e1 = |i| vector::unit(l1, i);
    let f0c = f.f0.columns();

    let lhs = dst.complex().d() * &f.f1;
    let rhs = &f.f0 * src.complex().d();
    r.assert_that("chain-map", "d f1 = f0 d", lhs == rhs, || format!("{lhs} vs {rhs}"));

    let eq1 = (0..l0).find_map(|i| {
        (i + 1..l0).find_map(|j| {
            let lhs = vector::sub(&f.f0.mul_vec(&src.bracket00(&e0(i), &e0(j))), &dst.bracket00(&f0c[i], &f0c[j]));
            let rhs = dst.d(f.f2.at(&[i, j]));
            (lhs != rhs).then(|| format!("X=e{i}, Y=e{j}: {} vs {}", show(&lhs), show(&rhs)))
        })
    });
    r.record("bracket-00", "f0[X,Y] - [f0 X, f0 Y] = d f2(X,Y)", eq1);

    let src_d = src.complex().d().columns();
    let eq2 = (0..l0).find_map(|i| {
        (0..l1).find_map(|k| {
            let lhs = vector::sub(
                &f.f1.mul_vec(&src.bracket01(&e0(i), &e1(k))),
                &dst.bracket01(&f0c[i], &f.f1.col(k)),
            );
            let rhs = f.f2.eval(&[&e0(i), &src_d[k]]);
            (lhs != rhs).then(|| format!("X=e{i}, A=e{k}: {} vs {}", show(&lhs), show(&rhs)))
        })
    });
    r.record("bracket-01", "f1[X,A] - [f0 X, f1 A] = f2(X, dA)", eq2);

    let eq3 = (0..l0).find_map(|i| {
        (i + 1..l0).find_map(|j| {
            (j + 1..l0).find_map(|k| {
                let idx = [i, j, k];
                let mut lhs = dst.bracket3(&f0c[i], &f0c[j], &f0c[k]);
                let mut rhs = f.f1.mul_vec(&src.bracket3(&e0(i), &e0(j), &e0(k)));
                for c in 0..3 {
                    let (x, y, z) = (idx[c], idx[(c + 1) % 3], idx[(c + 2) % 3]);
                    vector::add_assign(&mut lhs, &dst.bracket01(&f0c[x], f.f2.at(&[y, z])));
                    vector::add_assign(&mut rhs, &f.f2.eval(&[&src.bracket00(&e0(x), &e0(y)), &e0(z)]));
                }
                (lhs != rhs).then(|| format!("{}: {} vs {}", basis_label(&idx), show(&lhs), show(&rhs)))
            })
        })
    });
    r.record(
        "coherence-l3",
        "[f0 X, f2(Y,Z)] + c.p. + l3(f0 X, f0 Y, f0 Z) = f2([X,Y], Z) + c.p. + f1 l3(X,Y,Z)",
        eq3,
    );
    r
}

/// Whether `(f0, f1)` induces isomorphisms on `H1 = ker d` and `H0 = coker d`.
pub fn quasi_iso_check(src: &Lie2Algebra, dst: &Lie2Algebra, f: &Lie2Morphism) -> Result<bool> {
    let (ds, dw) = (src.complex().d(), dst.complex().d());
    if f.f0.cols() != src.dim0() || f.f1.cols() != src.dim1() || f.f0.rows() != dst.dim0() || f.f1.rows() != dst.dim1()
    {
        return Err(shape("morphism does not fit the given algebras"));
    }
    if dw * &f.f1 != &f.f0 * ds {
        return Err(Error::NotChainMap);
    }
    let ker_s = ds.kernel_matrix();
    let h1_iso = (&f.f1 * &ker_s).rank() == ker_s.cols() && ker_s.cols() == dw.kernel_matrix().cols();
    // f0 induces a surjection onto coker(dw) iff im f0 + im dw = W0
    let h0_src = src.dim0() - ds.rank();
    let h0_dst = dst.dim0() - dw.rank();
    let h0_iso = f.f0.hstack(dw).rank() == dst.dim0() && h0_src == h0_dst;
    Ok(h1_iso && h0_iso)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::int;
    use crate::gradedend::TwoTermComplex;
    use crate::lie2::LieAlgebra;

    fn so3() -> LieAlgebra {
        LieAlgebra::from_constants(3, &[(0, 1, 2, 1), (1, 2, 0, 1), (2, 0, 1, 1)]).unwrap()
    }

    #[test]
    fn identity_passes_and_is_quasi_iso() {
        let a = Lie2Algebra::from_lie_algebra(&so3());
        let id = Lie2Morphism::identity(&a);
        assert!(check_morphism(&a, &a, &id).passed());
        assert!(quasi_iso_check(&a, &a, &id).unwrap());
    }

    #[test]
    fn zero_map_is_not_quasi_iso() {
        let a = Lie2Algebra::strict(
            TwoTermComplex::zero(1, 1),
            Tensor::zeros(&[1, 1], 1),
            Tensor::zeros(&[1, 1], 1),
        )
        .unwrap();
        let z = Lie2Morphism::strict(Matrix::zeros(1, 1), Matrix::zeros(1, 1));
        assert!(check_morphism(&a, &a, &z).passed());
        assert!(!quasi_iso_check(&a, &a, &z).unwrap());
    }

    #[test]
    fn chain_map_violation_is_reported() {
        let a = Lie2Algebra::strict(
            TwoTermComplex::new(Matrix::identity(1)),
            Tensor::zeros(&[1, 1], 1),
            Tensor::zeros(&[1, 1], 1),
        )
        .unwrap();
        let f = Lie2Morphism::strict(Matrix::identity(1), Matrix::from_ints(&[&[2]]));
        assert_eq!(quasi_iso_check(&a, &a, &f), Err(Error::NotChainMap));
        assert!(!check_morphism(&a, &a, &f).ok("chain-map"));
    }

    #[test]
    fn scaled_identity_fails_bracket_equation() {
        let a = Lie2Algebra::from_lie_algebra(&so3());
        let f = Lie2Morphism::strict(Matrix::scalar(3, &int(2)), Matrix::zeros(0, 0));
        assert!(!check_morphism(&a, &a, &f).ok("bracket-00"));
    }
}
