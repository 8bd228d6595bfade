//! Butterflies of crossed modules of Lie algebras, the pullback crossed
//! module they determine, and the strictification of a representation up to
//! homotopy into a strict semidirect product.
//!
//! Throughout, the middle algebra of the butterfly of a morphism
//! `g -> h` is `g0 + h1` with the `g0` coordinates first.

use crate::error::{shape, Error, Result};
use crate::exactlin::vector::{self, Vector};
use crate::exactlin::{Matrix, Rational, Subspace, Tensor};
use crate::gradedend::EndCrossedModule;
use crate::lie2::{
    check_morphism, quasi_iso_check, xmod_to_dgla, CrossedModuleAlg, Lie2Algebra, Lie2Morphism, LieAlgebra,
};
use crate::rephomotopy::{rep_to_morphism, semidirect_lie2, strict_semidirect_with, RepUpToHomotopy};
use crate::report::Report;

/// The diagram `g1 -kappa-> e <-iota- h1`, `g0 <-sigma- e -rho-> h0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Butterfly {
    g: CrossedModuleAlg,
    h: CrossedModuleAlg,
    e: LieAlgebra,
    kappa: Matrix,
    iota: Matrix,
    sigma: Matrix,
    rho: Matrix,
}

impl Butterfly {
    pub fn new(
        g: CrossedModuleAlg,
        h: CrossedModuleAlg,
        e: LieAlgebra,
        kappa: Matrix,
        iota: Matrix,
        sigma: Matrix,
        rho: Matrix,
    ) -> Result<Self> {
        let n = e.dim();
        let ok = (kappa.rows(), kappa.cols()) == (n, g.dim_h1())
            && (iota.rows(), iota.cols()) == (n, h.dim_h1())
            && (sigma.rows(), sigma.cols()) == (g.dim_h0(), n)
            && (rho.rows(), rho.cols()) == (h.dim_h0(), n);
        if !ok {
            return Err(shape("butterfly maps do not fit the four corners"));
        }
        Ok(Self { g, h, e, kappa, iota, sigma, rho })
    }

    pub fn source(&self) -> &CrossedModuleAlg {
        &self.g
    }

    pub fn target(&self) -> &CrossedModuleAlg {
        &self.h
    }

    pub fn e(&self) -> &LieAlgebra {
        &self.e
    }

    pub fn kappa(&self) -> &Matrix {
        &self.kappa
    }

    pub fn iota(&self) -> &Matrix {
        &self.iota
    }

    pub fn sigma(&self) -> &Matrix {
        &self.sigma
    }

    pub fn rho(&self) -> &Matrix {
        &self.rho
    }
}

/// Butterfly of a morphism `f: g -> h` of crossed modules (as 2-term DGLAs):
///
/// * `[(X,A),(Y,B)] = ([X,Y], [A,B] + phi_{f0 X} B - phi_{f0 Y} A - f2(X,Y))`
/// * `kappa(A) = (dt A, -f1 A)`, `iota(B) = (0, B)`
/// * `sigma(X,B) = X`, `rho(X,B) = f0 X + dt B`
pub fn butterfly_from_morphism(f: &Lie2Morphism, src: &CrossedModuleAlg, dst: &CrossedModuleAlg) -> Result<Butterfly> {
    if let Some(why) = check_morphism(&xmod_to_dgla(src), &xmod_to_dgla(dst), f).first_failure() {
        return Err(Error::NotAMorphism(why));
    }
    let (g0, h1) = (src.dim_h0(), dst.dim_h1());
    let n = g0 + h1;
    let split = |i: usize| {
        let v = vector::unit(n, i);
        (v[..g0].to_vec(), v[g0..].to_vec())
    };
    let bracket = Tensor::from_fn(&[n, n], n, |idx| {
        let ((x, a), (y, b)) = (split(idx[0]), split(idx[1]));
        let (fx, fy) = (f.f0().mul_vec(&x), f.f0().mul_vec(&y));
        let mut v = dst.bracket_h1(&a, &b);
        vector::add_assign(&mut v, &dst.phi(&fx, &b));
        v = vector::sub(&v, &dst.phi(&fy, &a));
        v = vector::sub(&v, &f.f2_at(&x, &y));
        vector::concat(&[&src.bracket_h0(&x, &y), &v])
    });
    let e = LieAlgebra::new(bracket).map_err(|err| Error::NotAMorphism(format!("middle bracket: {err}")))?;
    let kappa = src.dt().vstack(&f.f1().scale(&-Rational::from_integer(1.into())));
    let iota = Matrix::zeros(g0, h1).vstack(&Matrix::identity(h1));
    let sigma = Matrix::identity(g0).hstack(&Matrix::zeros(g0, h1));
    let rho = f.f0().hstack(dst.dt());
    Butterfly::new(src.clone(), dst.clone(), e, kappa, iota, sigma, rho)
}

fn lie_morphism_violation(
    m: &Matrix,
    src: impl Fn(&[Rational], &[Rational]) -> Vector,
    dst: impl Fn(&[Rational], &[Rational]) -> Vector,
) -> Option<String> {
    let n = m.cols();
    let cols = m.columns();
    (0..n).find_map(|i| {
        (i + 1..n).find_map(|j| {
            let lhs = m.mul_vec(&src(&vector::unit(n, i), &vector::unit(n, j)));
            let rhs = dst(&cols[i], &cols[j]);
            (lhs != rhs).then(|| format!("e{i}, e{j}: {} vs {}", vector::format(&lhs), vector::format(&rhs)))
        })
    })
}

/// `image(into) = ker(out)`, `into` injective, `out` surjective.
fn short_exact(into: &Matrix, out: &Matrix) -> bool {
    into.is_injective()
        && out.is_surjective()
        && into.rank() + out.rank() == into.rows()
        && (out * into).is_zero()
}

/// Butterfly axioms: diagonals are complexes, the two triangles commute,
/// the four maps are Lie morphisms, NE-SW is short exact, and the two
/// compatibilities `[e, kappa A] = kappa(phi_{sigma e} A)`,
/// `[e, iota B] = iota(phi_{rho e} B)`.
pub fn check_butterfly(b: &Butterfly) -> Report {
    let mut r = Report::new("butterfly");
    let (g, h) = (&b.g, &b.h);
    let zero_check = |m: Matrix| (!m.is_zero()).then(|| format!("{m}"));
    r.record("nw-se-complex", "rho kappa = 0", zero_check(&b.rho * &b.kappa));
    r.record("ne-sw-complex", "sigma iota = 0", zero_check(&b.sigma * &b.iota));
    let diff = |a: Matrix, c: &Matrix| (&a != c).then(|| format!("{a} vs {c}"));
    r.record("left-triangle", "sigma kappa = dt", diff(&b.sigma * &b.kappa, g.dt()));
    r.record("right-triangle", "rho iota = dt", diff(&b.rho * &b.iota, h.dt()));
    let eb = |x: &[Rational], y: &[Rational]| b.e.bracket(x, y);
    r.record("kappa-morphism", "kappa preserves brackets", lie_morphism_violation(&b.kappa, |x, y| g.bracket_h1(x, y), eb));
    r.record("iota-morphism", "iota preserves brackets", lie_morphism_violation(&b.iota, |x, y| h.bracket_h1(x, y), eb));
    r.record("sigma-morphism", "sigma preserves brackets", lie_morphism_violation(&b.sigma, eb, |x, y| g.bracket_h0(x, y)));
    r.record("rho-morphism", "rho preserves brackets", lie_morphism_violation(&b.rho, eb, |x, y| h.bracket_h0(x, y)));
    r.assert_that("ne-sw-exact", "0 -> h1 -> e -> g0 -> 0 exact", short_exact(&b.iota, &b.sigma), || {
        format!("rank iota {}, rank sigma {}, dim e {}", b.iota.rank(), b.sigma.rank(), b.e.dim())
    });
    let n = b.e.dim();
    let compat = |into: &Matrix, act: &dyn Fn(&[Rational], &[Rational]) -> Vector, down: &Matrix| {
        (0..n).find_map(|i| {
            (0..into.cols()).find_map(|k| {
                let ei = vector::unit(n, i);
                let lhs = b.e.bracket(&ei, &into.col(k));
                let rhs = into.mul_vec(&act(&down.mul_vec(&ei), &vector::unit(into.cols(), k)));
                (lhs != rhs).then(|| format!("e{i}, e{k}: {} vs {}", vector::format(&lhs), vector::format(&rhs)))
            })
        })
    };
    r.record("kappa-compatibility", "[e, kappa A] = kappa(phi_{sigma e} A)", compat(&b.kappa, &|x, a| g.phi(x, a), &b.sigma));
    r.record("iota-compatibility", "[e, iota B] = iota(phi_{rho e} B)", compat(&b.iota, &|x, a| h.phi(x, a), &b.rho));
    r
}

/// Whether `0 -> g1 -> e -> h0 -> 0` is short exact, i.e. whether the
/// butterfly encodes an equivalence.
pub fn nw_se_exact(b: &Butterfly) -> bool {
    short_exact(&b.kappa, &b.rho)
}

/// The pullback crossed module `(g1 x_{g0} e, e, dt, phi)` with the two strict
/// morphisms out of it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Strictification {
    /// `g1 x_{g0} e` inside `g1 + e`.
    pub fiber: Subspace,
    pub xmod: CrossedModuleAlg,
    /// `(pr1, sigma)` to the source crossed module.
    pub to_source: Lie2Morphism,
    /// `(psi1, psi0 = rho)` to the target crossed module.
    pub to_target: Lie2Morphism,
}

/// Fiber product `ker[dt_g | -sigma]` with bracket `([A1,A2],[e1,e2])`,
/// `dt(A,e) = e` and `phi_e(A, e1) = (phi_{sigma e} A, [e, e1])`.
pub fn pullback_xmod(b: &Butterfly) -> (Subspace, CrossedModuleAlg) {
    let (g1, ne) = (b.g.dim_h1(), b.e.dim());
    let fiber = Subspace::kernel(&b.g.dt().hstack(&b.sigma.scale(&-Rational::from_integer(1.into()))));
    let p = fiber.dim();
    let part = |c: &[Rational]| {
        let v = fiber.embed(c);
        (v[..g1].to_vec(), v[g1..].to_vec())
    };
    let coords = |a: &[Rational], e: &[Rational]| fiber.coords(&vector::concat(&[a, e])).expect("fiber product is closed");
    let basis = |i: usize| part(&vector::unit(p, i));
    let bracket = Tensor::from_fn(&[p, p], p, |idx| {
        let ((a1, e1), (a2, e2)) = (basis(idx[0]), basis(idx[1]));
        coords(&b.g.bracket_h1(&a1, &a2), &b.e.bracket(&e1, &e2))
    });
    let dt = Matrix::from_columns(&(0..p).map(|i| basis(i).1).collect::<Vec<_>>(), ne);
    let phi = Tensor::from_fn(&[ne, p], p, |idx| {
        let e = vector::unit(ne, idx[0]);
        let (a, e1) = basis(idx[1]);
        coords(&b.g.phi(&b.sigma.mul_vec(&e), &a), &b.e.bracket(&e, &e1))
    });
    let xmod = CrossedModuleAlg::new(bracket, b.e.tensor().clone(), dt, phi).expect("pullback is well-formed");
    (fiber, xmod)
}

/// Pullback crossed module plus `(pr1, sigma)` and `(psi1, rho)` with
/// `psi1(A, e) = iota^{-1}(e - kappa A)`.
pub fn strictification_morphisms(b: &Butterfly) -> Result<Strictification> {
    let (fiber, xmod) = pullback_xmod(b);
    let g1 = b.g.dim_h1();
    let p = fiber.dim();
    let incl = fiber.inclusion();
    let pr1 = incl.block(0, 0, g1, p);
    let pr_e = incl.block(g1, 0, b.e.dim(), p);
    let to_source = Lie2Morphism::strict(b.sigma.clone(), pr1.clone());
    let diff = &pr_e - &(&b.kappa * &pr1);
    let cols = diff
        .columns()
        .iter()
        .map(|v| b.iota.solve(v).ok_or_else(|| shape("e - kappa(A) is not in the image of iota")))
        .collect::<Result<Vec<_>>>()?;
    let psi1 = Matrix::from_columns(&cols, b.h.dim_h1());
    let to_target = Lie2Morphism::strict(b.rho.clone(), psi1);
    Ok(Strictification { fiber, xmod, to_source, to_target })
}

/// Verifies both strictification legs are strict morphisms and that
/// `(pr1, sigma)` is a quasi-isomorphism.
pub fn check_strictification(b: &Butterfly, s: &Strictification) -> Report {
    let mut r = Report::new("strictification");
    let p = xmod_to_dgla(&s.xmod);
    let (g, h) = (xmod_to_dgla(&b.g), xmod_to_dgla(&b.h));
    r.absorb("pullback", crate::lie2::check_crossed_module(&s.xmod));
    r.absorb("to-source", check_morphism(&p, &g, &s.to_source));
    r.absorb("to-target", check_morphism(&p, &h, &s.to_target));
    let qi = quasi_iso_check(&p, &g, &s.to_source);
    r.assert_that("to-source-quasi-iso", "(pr1, sigma) is an equivalence of complexes", qi == Ok(true), || format!("{qi:?}"));
    r
}

/// The strict model of `g x| V` obtained from the butterfly of `(mu, nu)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrictifiedSemidirect {
    pub rep: RepUpToHomotopy,
    pub end: EndCrossedModule,
    /// `(mu, nu)` as a morphism `g -> End(V)`.
    pub morphism: Lie2Morphism,
    pub butterfly: Butterfly,
    pub strictification: Strictification,
    /// `(P x| V1, e x| V0, dt x d, phi)`.
    pub xmod: CrossedModuleAlg,
    /// The nonstrict `g x| V`.
    pub semidirect: Lie2Algebra,
}

/// rep -> morphism into `End(V)` -> butterfly -> pullback -> semidirect
/// product of the pullback with `(psi1, psi0)`.
pub fn strictified_semidirect(r: &RepUpToHomotopy) -> Result<StrictifiedSemidirect> {
    let (end, morphism) = rep_to_morphism(r)?;
    let src = CrossedModuleAlg::trivial(r.g());
    let butterfly = butterfly_from_morphism(&morphism, &src, end.xmod())?;
    let strictification = strictification_morphisms(&butterfly)?;
    let t = &strictification.to_target;
    let xmod = strict_semidirect_with(&strictification.xmod, t.f0(), t.f1(), &end)?;
    let semidirect = semidirect_lie2(r)?;
    Ok(StrictifiedSemidirect { rep: r.clone(), end, morphism, butterfly, strictification, xmod, semidirect })
}

impl StrictifiedSemidirect {
    fn dims(&self) -> (usize, usize, usize, usize, usize) {
        let g = self.rep.g().dim();
        let k1 = self.end.k1_dim();
        let c = self.rep.complex();
        (g, k1, c.dim_v0(), c.dim_v1(), self.strictification.fiber.dim())
    }

    /// The strict Lie 2-algebra of [`Self::xmod`].
    pub fn strict_lie2(&self) -> Lie2Algebra {
        xmod_to_dgla(&self.xmod)
    }

    /// `f0(X, A, xi) = (X, xi)`, `f1(P, m) = m`,
    /// `f2((X,A,xi),(Y,B,eta)) = A eta - B xi`.
    pub fn equivalence_morphism(&self) -> Lie2Morphism {
        let (g, k1, n0, n1, p) = self.dims();
        let src0 = g + k1 + n0;
        let mut f0 = Matrix::zeros(g + n0, src0);
        f0.set_block(0, 0, &Matrix::identity(g));
        f0.set_block(g, g + k1, &Matrix::identity(n0));
        let f1 = Matrix::zeros(n1, p).hstack(&Matrix::identity(n1));
        let split = |i: usize| {
            let v = vector::unit(src0, i);
            (self.end.k1_matrix(&v[g..g + k1]), v[g + k1..].to_vec())
        };
        let f2 = Tensor::from_fn(&[src0, src0], n1, |idx| {
            let ((a, xi), (b, eta)) = (split(idx[0]), split(idx[1]));
            vector::sub(&a.mul_vec(&eta), &b.mul_vec(&xi))
        });
        Lie2Morphism::new(f0, f1, f2).expect("equivalence morphism shapes")
    }

    /// `(X, xi) -> (X, 0, xi)`, `m -> (0, m)`,
    /// `f2((X,xi),(Y,eta)) = (nu(X,Y), 0)`.
    pub fn inclusion_morphism(&self) -> Lie2Morphism {
        let (g, k1, n0, n1, p) = self.dims();
        let mut f0 = Matrix::zeros(g + k1 + n0, g + n0);
        f0.set_block(0, 0, &Matrix::identity(g));
        f0.set_block(g + k1, g, &Matrix::identity(n0));
        let f1 = Matrix::zeros(p, n1).vstack(&Matrix::identity(n1));
        let fiber = &self.strictification.fiber;
        let f2 = Tensor::from_fn(&[g + n0, g + n0], p + n1, |idx| {
            let (x, y) = (vector::unit(g + n0, idx[0]), vector::unit(g + n0, idx[1]));
            let nu = self.rep.nu(&x[..g], &y[..g]);
            // (0, nu) in e = g + k1 sits in the fiber over 0
            let c = fiber
                .coords(&vector::concat(&[&vector::zeros(g), nu.flat()]))
                .expect("sigma^{-1}(0) contains k1");
            vector::concat(&[&c, &vector::zeros(n1)])
        });
        Lie2Morphism::new(f0, f1, f2).expect("inclusion morphism shapes")
    }

    /// Everything the strictification promises, as one report.
    pub fn check(&self) -> Report {
        let mut r = Report::new("strictified semidirect product");
        r.absorb("butterfly", check_butterfly(&self.butterfly));
        r.absorb("strictification", check_strictification(&self.butterfly, &self.strictification));
        r.absorb("xmod", crate::lie2::check_crossed_module(&self.xmod));
        let strict = self.strict_lie2();
        let eq = self.equivalence_morphism();
        r.absorb("equivalence", check_morphism(&strict, &self.semidirect, &eq));
        let qi = quasi_iso_check(&strict, &self.semidirect, &eq);
        r.assert_that("equivalence/quasi-iso", "equivalence of complexes", qi == Ok(true), || format!("{qi:?}"));
        let inc = self.inclusion_morphism();
        r.absorb("inclusion", check_morphism(&self.semidirect, &strict, &inc));
        r.assert_that("inclusion/injective", "f0 and f1 injective", inc.is_injective(), || "rank deficient".into());
        let comp = crate::lie2::compose(&eq, &inc);
        let id = Lie2Morphism::identity(&self.semidirect);
        r.assert_that("composite-identity", "equivalence after inclusion is the identity", comp.as_ref() == Ok(&id), || {
            format!("{comp:?}")
        });
        r
    }
}
