use crate::error::{shape, Error, Result};
use crate::exactlin::vector::{self, Vector};
use crate::exactlin::{Matrix, Rational, Subspace, Tensor};
use crate::gradedend::TwoTermComplex;
use crate::report::Report;

use super::{basis_label, jacobi_violation, show, Lie2Algebra, LieAlgebra};

/// Crossed module of Lie algebras `(h1, h0, dt, phi)` as structure constants.
///
/// Only shapes and antisymmetry are enforced here; the axioms are checked by
/// [`check_crossed_module`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossedModuleAlg {
    bracket_h1: Tensor,
    bracket_h0: Tensor,
    dt: Matrix,
    phi: Tensor,
}

impl CrossedModuleAlg {
    pub fn new(bracket_h1: Tensor, bracket_h0: Tensor, dt: Matrix, phi: Tensor) -> Result<Self> {
        let (n1, n0) = (bracket_h1.out_dim(), bracket_h0.out_dim());
        if bracket_h1.dims() != [n1, n1] || bracket_h0.dims() != [n0, n0] {
            return Err(shape("brackets must be square bilinear maps"));
        }
        if dt.rows() != n0 || dt.cols() != n1 {
            return Err(shape(format!("dt must be {n0}x{n1}, got {}x{}", dt.rows(), dt.cols())));
        }
        if phi.dims() != [n0, n1] || phi.out_dim() != n1 {
            return Err(shape(format!("phi must be [{n0}, {n1}] -> {n1}")));
        }
        for (t, name) in [(&bracket_h1, "h1"), (&bracket_h0, "h0")] {
            if let Some(idx) = t.antisymmetry_violation(0, 1) {
                return Err(Error::NotAntisymmetric(format!("{name} bracket at {}", basis_label(&idx))));
            }
        }
        Ok(Self { bracket_h1, bracket_h0, dt, phi })
    }

    /// The Lie algebra `g` as `(0, g, 0, 0)`.
    pub fn trivial(g: &LieAlgebra) -> Self {
        let n = g.dim();
        Self {
            bracket_h1: Tensor::zeros(&[0, 0], 0),
            bracket_h0: g.tensor().clone(),
            dt: Matrix::zeros(n, 0),
            phi: Tensor::zeros(&[n, 0], 0),
        }
    }

    pub fn dim_h1(&self) -> usize {
        self.dt.cols()
    }

    pub fn dim_h0(&self) -> usize {
        self.dt.rows()
    }

    pub fn bracket_h1_tensor(&self) -> &Tensor {
        &self.bracket_h1
    }

    pub fn bracket_h0_tensor(&self) -> &Tensor {
        &self.bracket_h0
    }

    pub fn phi_tensor(&self) -> &Tensor {
        &self.phi
    }

    pub fn dt(&self) -> &Matrix {
        &self.dt
    }

    pub fn bracket_h1(&self, a: &[Rational], b: &[Rational]) -> Vector {
        self.bracket_h1.eval(&[a, b])
    }

    pub fn bracket_h0(&self, x: &[Rational], y: &[Rational]) -> Vector {
        self.bracket_h0.eval(&[x, y])
    }

    pub fn phi(&self, x: &[Rational], a: &[Rational]) -> Vector {
        self.phi.eval(&[x, a])
    }

    /// Matrix of `phi_x` on `h1`.
    pub fn phi_matrix(&self, x: &[Rational]) -> Matrix {
        self.phi.contract_first(x).to_matrix()
    }

    pub fn h0(&self) -> Result<LieAlgebra> {
        LieAlgebra::new(self.bracket_h0.clone())
    }

    pub fn h1(&self) -> Result<LieAlgebra> {
        LieAlgebra::new(self.bracket_h1.clone())
    }

    pub fn complex(&self) -> TwoTermComplex {
        TwoTermComplex::new(self.dt.clone())
    }
}

/// Crossed-module axioms on basis tuples: both Jacobi identities, `dt` a
/// bracket morphism, `phi` an action by derivations, equivariance of `dt`,
/// and the Peiffer identity.
pub fn check_crossed_module(x: &CrossedModuleAlg) -> Report {
    let (n1, n0) = (x.dim_h1(), x.dim_h0());
    let e1 = |i| vector::unit(n1, i);
    let e0 = |i| vector::unit(n0, i);
    let mut r = Report::new("crossed module of Lie algebras");
    let jac = |t: &Tensor| jacobi_violation(t).map(|(idx, v)| format!("{} gives {}", basis_label(&idx), show(&v)));
    r.record("jacobi-h1", "Jacobi identity on h1", jac(&x.bracket_h1));
    r.record("jacobi-h0", "Jacobi identity on h0", jac(&x.bracket_h0));

    let pairs = |n: usize| (0..n).flat_map(move |i| (i + 1..n).map(move |j| (i, j)));
    let dt_morph = pairs(n1).find_map(|(i, j)| {
        let lhs = x.dt.mul_vec(&x.bracket_h1(&e1(i), &e1(j)));
        let rhs = x.bracket_h0(&x.dt.col(i), &x.dt.col(j));
        (lhs != rhs).then(|| format!("A=e{i}, B=e{j}: {} vs {}", show(&lhs), show(&rhs)))
    });
    r.record("dt-morphism", "dt[A,B] = [dt A, dt B]", dt_morph);

    let derivation = (0..n0).find_map(|k| {
        pairs(n1).find_map(|(i, j)| {
            let (xk, a, b) = (e0(k), e1(i), e1(j));
            let lhs = x.phi(&xk, &x.bracket_h1(&a, &b));
            let rhs = vector::add(&x.bracket_h1(&x.phi(&xk, &a), &b), &x.bracket_h1(&a, &x.phi(&xk, &b)));
            (lhs != rhs).then(|| format!("X=e{k}, A=e{i}, B=e{j}: {} vs {}", show(&lhs), show(&rhs)))
        })
    });
    r.record("phi-derivation", "phi_X[A,B] = [phi_X A, B] + [A, phi_X B]", derivation);

    let action = pairs(n0).find_map(|(i, j)| {
        let lhs = x.phi_matrix(&x.bracket_h0(&e0(i), &e0(j)));
        let rhs = x.phi_matrix(&e0(i)).commutator(&x.phi_matrix(&e0(j)));
        (lhs != rhs).then(|| format!("X=e{i}, Y=e{j}: {lhs} vs {rhs}"))
    });
    r.record("phi-action", "phi_[X,Y] = [phi_X, phi_Y]", action);

    let equivariance = (0..n0).find_map(|k| {
        (0..n1).find_map(|i| {
            let lhs = x.dt.mul_vec(&x.phi(&e0(k), &e1(i)));
            let rhs = x.bracket_h0(&e0(k), &x.dt.col(i));
            (lhs != rhs).then(|| format!("X=e{k}, A=e{i}: {} vs {}", show(&lhs), show(&rhs)))
        })
    });
    r.record("equivariance", "dt(phi_X A) = [X, dt A]", equivariance);

    let peiffer = (0..n1).find_map(|i| {
        (0..n1).find_map(|j| {
            let lhs = x.phi(&x.dt.col(i), &e1(j));
            let rhs = x.bracket_h1(&e1(i), &e1(j));
            (lhs != rhs).then(|| format!("A=e{i}, B=e{j}: {} vs {}", show(&lhs), show(&rhs)))
        })
    });
    r.record("peiffer", "phi_{dt A} B = [A, B]", peiffer);
    r
}

/// Crossed module of a 2-term DGLA: `[A,B] = l2(dA, B)` on `h1`, the degree-0
/// bracket on `h0`, `dt = d`, `phi = l2` on `V0 x V1`.
pub fn dgla_to_xmod(a: &Lie2Algebra) -> Result<CrossedModuleAlg> {
    if !a.is_strict() {
        return Err(Error::NotStrict);
    }
    let d = a.complex().d().clone();
    let n1 = a.dim1();
    let cols = d.columns();
    let h1 = Tensor::from_fn(&[n1, n1], n1, |i| a.bracket01(&cols[i[0]], &vector::unit(n1, i[1])));
    CrossedModuleAlg::new(h1, a.l2_00().clone(), d, a.l2_01().clone())
}

/// 2-term DGLA of a crossed module: `d = dt`, degree-0 bracket from `h0`,
/// `l2(X, A) = phi_X A`, `l3 = 0`.
pub fn xmod_to_dgla(x: &CrossedModuleAlg) -> Lie2Algebra {
    Lie2Algebra::strict(x.complex(), x.bracket_h0.clone(), x.phi.clone()).expect("shapes agree by construction")
}

/// `(k, Der(k), ad, Id)`. `Der(k)` is the null space of the derivation
/// condition inside `gl(k)` (row-major), with its canonical basis.
pub fn derivation_xmod(k: &LieAlgebra) -> CrossedModuleAlg {
    let n = k.dim();
    let e = |i| vector::unit(n, i);
    // row (i,j,c): D[e_i,e_j] - [D e_i, e_j] - [e_i, D e_j] at component c
    let mut cond = Matrix::zeros(n * n * n, n * n);
    for p in 0..n * n {
        let dmat = Matrix::from_flat(n, n, vector::unit(n * n, p)).expect("square");
        for i in 0..n {
            for j in 0..n {
                let mut v = dmat.mul_vec(&k.bracket(&e(i), &e(j)));
                v = vector::sub(&v, &k.bracket(&dmat.col(i), &e(j)));
                v = vector::sub(&v, &k.bracket(&e(i), &dmat.col(j)));
                for (c, val) in v.into_iter().enumerate() {
                    cond.set((i * n + j) * n + c, p, val);
                }
            }
        }
    }
    let der = Subspace::kernel(&cond);
    let m = der.dim();
    let as_matrix = |c: &[Rational]| Matrix::from_flat(n, n, der.embed(c)).expect("square");
    let coords = |a: &Matrix| der.coords(a.flat()).expect("derivations are closed under the operations used");
    let h0 = Tensor::from_fn(&[m, m], m, |i| {
        coords(&as_matrix(&vector::unit(m, i[0])).commutator(&as_matrix(&vector::unit(m, i[1]))))
    });
    let dt = Matrix::from_columns(&(0..n).map(|i| coords(&k.ad(&e(i)))).collect::<Vec<_>>(), m);
    let phi = Tensor::from_fn(&[m, n], n, |i| as_matrix(&vector::unit(m, i[0])).col(i[1]));
    CrossedModuleAlg::new(k.tensor().clone(), h0, dt, phi).expect("well-formed")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn so3() -> LieAlgebra {
        LieAlgebra::from_constants(3, &[(0, 1, 2, 1), (1, 2, 0, 1), (2, 0, 1, 1)]).unwrap()
    }

    #[test]
    fn derivation_crossed_module_of_cross_product() {
        let x = derivation_xmod(&so3());
        assert_eq!(x.dim_h0(), 3);
        assert!(check_crossed_module(&x).passed());
    }

    #[test]
    fn derivation_crossed_module_of_abelian_plane() {
        let x = derivation_xmod(&LieAlgebra::abelian(2));
        assert_eq!(x.dim_h0(), 4);
        assert!(x.dt().is_zero());
        assert!(check_crossed_module(&x).passed());
    }

    #[test]
    fn doubled_action_breaks_peiffer() {
        let x = derivation_xmod(&so3());
        let two = Rational::from_integer(2.into());
        let bad = CrossedModuleAlg::new(
            x.bracket_h1_tensor().clone(),
            x.bracket_h0_tensor().clone(),
            x.dt().clone(),
            x.phi_tensor().scale(&two),
        )
        .unwrap();
        let r = check_crossed_module(&bad);
        assert!(!r.ok("peiffer"));
        assert!(!r.ok("equivariance"));
    }

    #[test]
    fn round_trips_on_the_nose() {
        let x = derivation_xmod(&so3());
        let a = xmod_to_dgla(&x);
        assert!(super::super::check_lie2(&a).passed());
        assert_eq!(dgla_to_xmod(&a).unwrap(), x);
        assert_eq!(xmod_to_dgla(&dgla_to_xmod(&a).unwrap()), a);
    }

    #[test]
    fn nonstrict_refuses_conversion() {
        let g = so3();
        let c = TwoTermComplex::zero(1, 3);
        let l3 = Tensor::from_fn(&[3, 3, 3], 1, |i| {
            let s = match (i[0], i[1], i[2]) {
                (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1,
                (0, 2, 1) | (2, 1, 0) | (1, 0, 2) => -1,
                _ => 0,
            };
            vec![Rational::from_integer(s.into())]
        });
        let a = Lie2Algebra::new(c, g.tensor().clone(), Tensor::zeros(&[3, 1], 1), l3).unwrap();
        assert_eq!(dgla_to_xmod(&a), Err(Error::NotStrict));
    }
}
