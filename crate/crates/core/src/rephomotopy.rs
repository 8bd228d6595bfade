//! 2-term representations up to homotopy of a Lie algebra, their semidirect
//! product Lie 2-algebras, the correspondence with morphisms into `End(V)`,
//! and semidirect products of crossed modules with strict representations.

use crate::error::{shape, Error, Result};
use crate::exactlin::vector::{self, Vector};
use crate::exactlin::{Matrix, Rational, Tensor};
use crate::gradedend::{k1_coords, EndCrossedModule, TwoTermComplex};
use crate::lie2::{check_morphism, xmod_to_dgla, CrossedModuleAlg, Lie2Algebra, Lie2Morphism};
use crate::report::Report;

pub use crate::lie2::LieAlgebra;

/// `(V, mu, nu)` over `g`: `mu0: g x V0 -> V0`, `mu1: g x V1 -> V1`,
/// `nu: g x g x V0 -> V1` (antisymmetric in the `g` slots).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepUpToHomotopy {
    g: LieAlgebra,
    complex: TwoTermComplex,
    mu0: Tensor,
    mu1: Tensor,
    nu: Tensor,
}

impl RepUpToHomotopy {
    pub fn new(g: LieAlgebra, complex: TwoTermComplex, mu0: Tensor, mu1: Tensor, nu: Tensor) -> Result<Self> {
        let (k, n0, n1) = (g.dim(), complex.dim_v0(), complex.dim_v1());
        let fits = |t: &Tensor, dims: &[usize], out: usize| t.dims() == dims && t.out_dim() == out;
        if !fits(&mu0, &[k, n0], n0) || !fits(&mu1, &[k, n1], n1) || !fits(&nu, &[k, k, n0], n1) {
            return Err(shape(format!(
                "rep tensors must be mu0 [{k},{n0}]->{n0}, mu1 [{k},{n1}]->{n1}, nu [{k},{k},{n0}]->{n1}"
            )));
        }
        if let Some(idx) = nu.antisymmetry_violation(0, 1) {
            return Err(Error::NotAntisymmetric(format!("nu at {idx:?}")));
        }
        Ok(Self { g, complex, mu0, mu1, nu })
    }

    /// From the matrices `mu0(e_i)`, `mu1(e_i)` and `nu(e_i, e_j)`.
    pub fn from_matrices(
        g: LieAlgebra,
        complex: TwoTermComplex,
        mu0: &[Matrix],
        mu1: &[Matrix],
        nu: impl Fn(usize, usize) -> Matrix,
    ) -> Result<Self> {
        let (k, n0, n1) = (g.dim(), complex.dim_v0(), complex.dim_v1());
        if mu0.len() != k || mu1.len() != k {
            return Err(shape("one action matrix per basis vector of g"));
        }
        let t0 = Tensor::from_fn(&[k, n0], n0, |i| mu0[i[0]].col(i[1]));
        let t1 = Tensor::from_fn(&[k, n1], n1, |i| mu1[i[0]].col(i[1]));
        let tn = Tensor::from_fn(&[k, k, n0], n1, |i| nu(i[0], i[1]).col(i[2]));
        Self::new(g, complex, t0, t1, tn)
    }

    /// `nu = 0`.
    pub fn strict(g: LieAlgebra, complex: TwoTermComplex, mu0: Tensor, mu1: Tensor) -> Result<Self> {
        let (k, n0, n1) = (g.dim(), complex.dim_v0(), complex.dim_v1());
        Self::new(g, complex, mu0, mu1, Tensor::zeros(&[k, k, n0], n1))
    }

    pub fn g(&self) -> &LieAlgebra {
        &self.g
    }

    pub fn complex(&self) -> &TwoTermComplex {
        &self.complex
    }

    pub fn mu0_tensor(&self) -> &Tensor {
        &self.mu0
    }

    pub fn mu1_tensor(&self) -> &Tensor {
        &self.mu1
    }

    pub fn nu_tensor(&self) -> &Tensor {
        &self.nu
    }

    pub fn mu0(&self, x: &[Rational]) -> Matrix {
        self.mu0.contract_first(x).to_matrix()
    }

    pub fn mu1(&self, x: &[Rational]) -> Matrix {
        self.mu1.contract_first(x).to_matrix()
    }

    /// `nu(x, y): V0 -> V1`.
    pub fn nu(&self, x: &[Rational], y: &[Rational]) -> Matrix {
        self.nu.contract_first(x).contract_first(y).to_matrix()
    }

    fn basis(&self, i: usize) -> Vector {
        vector::unit(self.g.dim(), i)
    }
}

/// The four defining identities on basis tuples of `g`.
pub fn check_rep(r: &RepUpToHomotopy) -> Report {
    let k = r.g.dim();
    let d = r.complex.d();
    let e = |i| r.basis(i);
    let mut rep = Report::new("representation up to homotopy");

    let dmu = (0..k).find_map(|i| {
        let lhs = d * &r.mu1(&e(i));
        let rhs = &r.mu0(&e(i)) * d;
        (lhs != rhs).then(|| format!("X=e{i}: {lhs} vs {rhs}"))
    });
    rep.record("d-mu", "d mu1(X) = mu0(X) d", dmu);

    let pairs = || (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j)));
    let mu0 = pairs().find_map(|(i, j)| {
        let lhs = &r.mu0(&r.g.bracket(&e(i), &e(j))) - &r.mu0(&e(i)).commutator(&r.mu0(&e(j)));
        let rhs = d * &r.nu(&e(i), &e(j));
        (lhs != rhs).then(|| format!("X=e{i}, Y=e{j}: {lhs} vs {rhs}"))
    });
    rep.record("mu0-bracket", "mu0[X,Y] - [mu0 X, mu0 Y] = d nu(X,Y)", mu0);

    let mu1 = pairs().find_map(|(i, j)| {
        let lhs = &r.mu1(&r.g.bracket(&e(i), &e(j))) - &r.mu1(&e(i)).commutator(&r.mu1(&e(j)));
        let rhs = &r.nu(&e(i), &e(j)) * d;
        (lhs != rhs).then(|| format!("X=e{i}, Y=e{j}: {lhs} vs {rhs}"))
    });
    rep.record("mu1-bracket", "mu1[X,Y] - [mu1 X, mu1 Y] = nu(X,Y) d", mu1);

    let coherence = (0..k).find_map(|i| {
        (i + 1..k).find_map(|j| {
            (j + 1..k).find_map(|l| {
                let idx = [i, j, l];
                let (n0, n1) = (r.complex.dim_v0(), r.complex.dim_v1());
                let mut lhs = Matrix::zeros(n1, n0);
                let mut rhs = Matrix::zeros(n1, n0);
                for c in 0..3 {
                    let (x, y, z) = (e(idx[c]), e(idx[(c + 1) % 3]), e(idx[(c + 2) % 3]));
                    let nyz = r.nu(&y, &z);
                    lhs = &lhs + &(&(&r.mu1(&x) * &nyz) - &(&nyz * &r.mu0(&x)));
                    rhs = &rhs + &r.nu(&r.g.bracket(&x, &y), &z);
                }
                (lhs != rhs).then(|| format!("(e{i}, e{j}, e{l}): {lhs} vs {rhs}"))
            })
        })
    });
    rep.record("nu-coherence", "[mu(X1), nu(X2,X3)] + c.p. = nu([X1,X2],X3) + c.p.", coherence);
    rep
}

fn require_valid(r: &RepUpToHomotopy) -> Result<()> {
    match check_rep(r).first_failure() {
        None => Ok(()),
        Some(why) => Err(Error::InvalidRep(why)),
    }
}

/// `g x| V`: complex `V1 --(0, d)--> g + V0` with
///
/// * `[(X,xi),(Y,eta)] = ([X,Y], mu0(X) eta - mu0(Y) xi)`
/// * `[(X,xi), m] = mu1(X) m`
/// * `l3((X,xi),(Y,eta),(Z,gamma)) = -(nu(X,Y) gamma + nu(Y,Z) xi + nu(Z,X) eta)`
pub fn semidirect_lie2(r: &RepUpToHomotopy) -> Result<Lie2Algebra> {
    require_valid(r)?;
    let (k, n0, n1) = (r.g.dim(), r.complex.dim_v0(), r.complex.dim_v1());
    let n = k + n0;
    let d = Matrix::zeros(k, n1).vstack(r.complex.d());
    let split = |v: &[Rational]| (v[..k].to_vec(), v[k..].to_vec());
    let unit = |i| split(&vector::unit(n, i));
    let l2_00 = Tensor::from_fn(&[n, n], n, |idx| {
        let ((x, xi), (y, eta)) = (unit(idx[0]), unit(idx[1]));
        let v = vector::sub(&r.mu0.eval(&[&x, &eta]), &r.mu0.eval(&[&y, &xi]));
        vector::concat(&[&r.g.bracket(&x, &y), &v])
    });
    let l2_01 = Tensor::from_fn(&[n, n1], n1, |idx| {
        let (x, _) = unit(idx[0]);
        r.mu1.eval(&[&x, &vector::unit(n1, idx[1])])
    });
    let l3 = Tensor::from_fn(&[n, n, n], n1, |idx| {
        let ((x, xi), (y, eta), (z, gamma)) = (unit(idx[0]), unit(idx[1]), unit(idx[2]));
        let mut v = r.nu.eval(&[&x, &y, &gamma]);
        vector::add_assign(&mut v, &r.nu.eval(&[&y, &z, &xi]));
        vector::add_assign(&mut v, &r.nu.eval(&[&z, &x, &eta]));
        vector::neg(&v)
    });
    Lie2Algebra::new(TwoTermComplex::new(d), l2_00, l2_01, l3)
}

/// `(mu, nu)` as a morphism from `g`, viewed as `(0, g, 0, 0)`, into the
/// 2-term DGLA of `End(V)`: `f0 = mu`, `f1 = 0`, `f2 = nu`.
pub fn rep_to_morphism(r: &RepUpToHomotopy) -> Result<(EndCrossedModule, Lie2Morphism)> {
    let end = EndCrossedModule::new(&r.complex);
    let k = r.g.dim();
    let cols = (0..k)
        .map(|i| end.k0_coords(&r.mu0(&r.basis(i)), &r.mu1(&r.basis(i))))
        .collect::<Result<Vec<_>>>()?;
    require_valid(r)?;
    let f0 = Matrix::from_columns(&cols, end.k0_dim());
    let f1 = Matrix::zeros(end.k1_dim(), 0);
    let f2 = Tensor::from_fn(&[k, k], end.k1_dim(), |i| k1_coords(&r.nu(&r.basis(i[0]), &r.basis(i[1]))));
    let f = Lie2Morphism::new(f0, f1, f2)?;
    Ok((end, f))
}

/// Inverse of [`rep_to_morphism`].
pub fn morphism_to_rep(g: &LieAlgebra, end: &EndCrossedModule, f: &Lie2Morphism) -> Result<RepUpToHomotopy> {
    let src = Lie2Algebra::from_lie_algebra(g);
    let dst = xmod_to_dgla(end.xmod());
    if let Some(why) = check_morphism(&src, &dst, f).first_failure() {
        return Err(Error::NotAMorphism(why));
    }
    let k = g.dim();
    let pairs: Vec<(Matrix, Matrix)> = (0..k).map(|i| end.k0_pair(&f.f0().col(i))).collect();
    let mu0: Vec<Matrix> = pairs.iter().map(|p| p.0.clone()).collect();
    let mu1: Vec<Matrix> = pairs.iter().map(|p| p.1.clone()).collect();
    RepUpToHomotopy::from_matrices(g.clone(), end.complex().clone(), &mu0, &mu1, |i, j| end.k1_matrix(f.f2().at(&[i, j])))
}

/// Semidirect product `(h1 x| V1, h0 x| V0, dt x d, phi)` of a crossed module
/// with a strict morphism `(psi1, psi0): h -> End(V)` (matrices into the `k1`
/// and `k0` coordinates of `End(V)`).
pub fn strict_semidirect_xmod(h: &CrossedModuleAlg, psi0: &Matrix, psi1: &Matrix, c: &TwoTermComplex) -> Result<CrossedModuleAlg> {
    strict_semidirect_with(h, psi0, psi1, &EndCrossedModule::new(c))
}

/// As [`strict_semidirect_xmod`] with a prebuilt `End(V)`.
pub fn strict_semidirect_with(
    h: &CrossedModuleAlg,
    psi0: &Matrix,
    psi1: &Matrix,
    end: &EndCrossedModule,
) -> Result<CrossedModuleAlg> {
    let f = Lie2Morphism::strict(psi0.clone(), psi1.clone());
    if let Some(why) = check_morphism(&xmod_to_dgla(h), &xmod_to_dgla(end.xmod()), &f).first_failure() {
        return Err(Error::NotStrictMorphism(why));
    }
    let (m1, m0) = (h.dim_h1(), h.dim_h0());
    let c = end.complex();
    let (n0, n1) = (c.dim_v0(), c.dim_v1());
    let (t1, t0) = (m1 + n1, m0 + n0);
    // psi0(X) acting on V0 and V1, psi1(A) as a map V0 -> V1
    let act = |x: &[Rational]| end.k0_pair(&psi0.mul_vec(x));
    let hom = |a: &[Rational]| end.k1_matrix(&psi1.mul_vec(a));
    let split1 = |i: usize| {
        let v = vector::unit(t1, i);
        (v[..m1].to_vec(), v[m1..].to_vec())
    };
    let split0 = |i: usize| {
        let v = vector::unit(t0, i);
        (v[..m0].to_vec(), v[m0..].to_vec())
    };
    let b1 = Tensor::from_fn(&[t1, t1], t1, |idx| {
        let ((a, m), (b, n)) = (split1(idx[0]), split1(idx[1]));
        let v = vector::sub(&act(&h.dt().mul_vec(&a)).1.mul_vec(&n), &act(&h.dt().mul_vec(&b)).1.mul_vec(&m));
        vector::concat(&[&h.bracket_h1(&a, &b), &v])
    });
    let b0 = Tensor::from_fn(&[t0, t0], t0, |idx| {
        let ((x, xi), (y, eta)) = (split0(idx[0]), split0(idx[1]));
        let v = vector::sub(&act(&x).0.mul_vec(&eta), &act(&y).0.mul_vec(&xi));
        vector::concat(&[&h.bracket_h0(&x, &y), &v])
    });
    let dt = h.dt().block_diag(c.d());
    let phi = Tensor::from_fn(&[t0, t1], t1, |idx| {
        let ((x, xi), (a, m)) = (split0(idx[0]), split1(idx[1]));
        let v = vector::sub(&act(&x).1.mul_vec(&m), &hom(&a).mul_vec(&xi));
        vector::concat(&[&h.phi(&x, &a), &v])
    });
    CrossedModuleAlg::new(b1, b0, dt, phi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::{int, rat};
    use crate::lie2::{check_crossed_module, check_lie2};

    fn gl(n: usize) -> LieAlgebra {
        let m = n * n;
        let unit = |i| Matrix::from_flat(n, n, vector::unit(m, i)).unwrap();
        LieAlgebra::new(Tensor::from_fn(&[m, m], m, |i| unit(i[0]).commutator(&unit(i[1])).flat().to_vec())).unwrap()
    }

    /// `mu(A) = c A` on `V --Id--> V`, `nu(A,B) = s [A,B]`.
    fn scaled_gl(n: usize, c: Rational, s: Rational) -> RepUpToHomotopy {
        let m = n * n;
        let unit = |i| Matrix::from_flat(n, n, vector::unit(m, i)).unwrap();
        let mats: Vec<Matrix> = (0..m).map(|i| unit(i).scale(&c)).collect();
        RepUpToHomotopy::from_matrices(gl(n), TwoTermComplex::new(Matrix::identity(n)), &mats, &mats, |i, j| {
            unit(i).commutator(&unit(j)).scale(&s)
        })
        .unwrap()
    }

    #[test]
    fn honest_action_passes() {
        let r = scaled_gl(2, int(1), int(0));
        assert!(check_rep(&r).passed());
    }

    #[test]
    fn half_action_needs_quarter_correction() {
        assert!(check_rep(&scaled_gl(2, rat(1, 2), rat(1, 4))).passed());
        let r = check_rep(&scaled_gl(2, rat(1, 2), int(0)));
        assert!(!r.ok("mu0-bracket"));
    }

    #[test]
    fn semidirect_of_valid_rep_is_lie2() {
        let a = semidirect_lie2(&scaled_gl(2, rat(1, 2), rat(1, 4))).unwrap();
        assert!(!a.is_strict());
        assert!(check_lie2(&a).passed());
        let b = semidirect_lie2(&scaled_gl(2, int(1), int(0))).unwrap();
        assert!(b.is_strict());
    }

    #[test]
    fn invalid_rep_refused() {
        assert!(matches!(semidirect_lie2(&scaled_gl(2, rat(1, 2), int(0))), Err(Error::InvalidRep(_))));
    }

    #[test]
    fn rep_morphism_round_trip() {
        let r = scaled_gl(2, rat(1, 2), rat(1, 4));
        let (end, f) = rep_to_morphism(&r).unwrap();
        let src = Lie2Algebra::from_lie_algebra(r.g());
        assert!(check_morphism(&src, &xmod_to_dgla(end.xmod()), &f).passed());
        assert_eq!(morphism_to_rep(r.g(), &end, &f).unwrap(), r);
    }

    #[test]
    fn action_outside_kernel_of_delta() {
        // mu1 = 0 while mu0 = A on V --Id--> V
        let n = 1;
        let r = RepUpToHomotopy::from_matrices(
            gl(n),
            TwoTermComplex::new(Matrix::identity(n)),
            &[Matrix::identity(1)],
            &[Matrix::zeros(1, 1)],
            |_, _| Matrix::zeros(1, 1),
        )
        .unwrap();
        assert!(matches!(rep_to_morphism(&r), Err(Error::ImageNotInKernel(_))));
    }

    #[test]
    fn identity_representation_of_end() {
        let c = TwoTermComplex::new(Matrix::from_ints(&[&[1, 0], &[0, 0]]));
        let end = EndCrossedModule::new(&c);
        let x = end.xmod();
        let s = strict_semidirect_with(x, &Matrix::identity(x.dim_h0()), &Matrix::identity(x.dim_h1()), &end).unwrap();
        assert_eq!((s.dim_h1(), s.dim_h0()), (x.dim_h1() + 2, x.dim_h0() + 2));
        assert!(check_crossed_module(&s).passed());
    }

    #[test]
    fn trivial_crossed_module_gives_classical_semidirect() {
        let g = gl(1);
        let h = CrossedModuleAlg::trivial(&g);
        let c = TwoTermComplex::new(Matrix::identity(1));
        // g acting by scalars on both copies of Q
        let end = EndCrossedModule::new(&c);
        let psi0 = Matrix::column(&end.k0_coords(&Matrix::identity(1), &Matrix::identity(1)).unwrap());
        let s = strict_semidirect_xmod(&h, &psi0, &Matrix::zeros(1, 0), &c).unwrap();
        assert!(check_crossed_module(&s).passed());
        // [(X,xi),(Y,eta)] = (0, X eta - Y xi)
        let v = s.bracket_h0(&[int(2), int(3)], &[int(5), int(7)]);
        assert_eq!(v, vec![int(0), int(14 - 15)]);
    }

    #[test]
    fn non_morphism_refused() {
        let c = TwoTermComplex::new(Matrix::identity(1));
        let h = CrossedModuleAlg::trivial(&gl(1));
        // h1 = Q with dt = 0, but psi1 = Id sends it to k1 where delta is the identity
        let bad = CrossedModuleAlg::new(Tensor::zeros(&[1, 1], 1), h.bracket_h0_tensor().clone(), Matrix::zeros(1, 1), Tensor::zeros(&[1, 1], 1)).unwrap();
        let r = strict_semidirect_xmod(&bad, &Matrix::zeros(1, 1), &Matrix::identity(1), &c);
        assert!(matches!(r, Err(Error::NotStrictMorphism(_))));
    }
}
