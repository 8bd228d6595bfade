//! The omni-Lie algebra `gl(V) + V`: its bracket, pairing and Jacobiator,
//! the Lie 2-algebra `V --(0+Id)--> gl(V) + V` it extends to, the strict
//! model produced by the butterfly, graph Dirac structures, and the pullback
//! of a graph sub-Lie-2-algebra along the strictification.
//!
//! `gl(V)` is coordinatized row-major (`E_ij` has index `i n + j`); elements
//! of `gl(V) + V` are the matrix entries followed by the vector.

use crate::butterfly::{strictified_semidirect, StrictifiedSemidirect};
use crate::error::{shape, Error, Result};
use crate::exactlin::vector::{self, Vector};
use crate::exactlin::{rat, Matrix, Rational, Tensor};
use crate::gradedend::TwoTermComplex;
use crate::lie2::{
    check_crossed_module, check_lie2, check_morphism, compose, jacobi_violation, quasi_iso_check, xmod_to_dgla,
    CrossedModuleAlg, Lie2Algebra, Lie2Morphism, LieAlgebra,
};
use crate::rephomotopy::{semidirect_lie2, RepUpToHomotopy};
use crate::report::Report;

/// `(A, u)` in `gl(V) + V`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmniElement {
    pub a: Matrix,
    pub u: Vector,
}

impl OmniElement {
    pub fn new(a: Matrix, u: Vector) -> Result<Self> {
        if !a.is_square() || a.rows() != u.len() {
            return Err(shape(format!("omni element needs n x n and n, got {}x{} and {}", a.rows(), a.cols(), u.len())));
        }
        Ok(Self { a, u })
    }

    pub fn zero(n: usize) -> Self {
        Self { a: Matrix::zeros(n, n), u: vector::zeros(n) }
    }

    pub fn dim(&self) -> usize {
        self.u.len()
    }

    /// Row-major matrix entries then the vector.
    pub fn coords(&self) -> Vector {
        vector::concat(&[self.a.flat(), &self.u])
    }

    pub fn from_coords(n: usize, v: &[Rational]) -> Self {
        let a = Matrix::from_flat(n, n, v[..n * n].to_vec()).expect("n*n entries");
        Self { a, u: v[n * n..].to_vec() }
    }

    fn add(&self, o: &Self) -> Self {
        Self { a: &self.a + &o.a, u: vector::add(&self.u, &o.u) }
    }
}

fn half() -> Rational {
    rat(1, 2)
}

fn quarter() -> Rational {
    rat(1, 4)
}

/// `[(A,u),(B,v)] = ([A,B], (Av - Bu)/2)`.
pub fn omni_bracket(e1: &OmniElement, e2: &OmniElement) -> OmniElement {
    let v = vector::sub(&e1.a.mul_vec(&e2.u), &e2.a.mul_vec(&e1.u));
    OmniElement { a: e1.a.commutator(&e2.a), u: vector::scale(&half(), &v) }
}

/// `<(A,u),(B,v)> = (Av + Bu)/2`.
pub fn omni_pairing(e1: &OmniElement, e2: &OmniElement) -> Vector {
    vector::scale(&half(), &vector::add(&e1.a.mul_vec(&e2.u), &e2.a.mul_vec(&e1.u)))
}

/// `T = ([A,B] w + [B,C] u + [C,A] v) / 4`.
pub fn jacobiator_t(e1: &OmniElement, e2: &OmniElement, e3: &OmniElement) -> Vector {
    let mut s = e1.a.commutator(&e2.a).mul_vec(&e3.u);
    vector::add_assign(&mut s, &e2.a.commutator(&e3.a).mul_vec(&e1.u));
    vector::add_assign(&mut s, &e3.a.commutator(&e1.a).mul_vec(&e2.u));
    vector::scale(&quarter(), &s)
}

/// `[[e1,e2],e3] + c.p.` evaluated directly.
pub fn cyclic_double_bracket(e1: &OmniElement, e2: &OmniElement, e3: &OmniElement) -> OmniElement {
    let t = |x: &OmniElement, y: &OmniElement, z: &OmniElement| omni_bracket(&omni_bracket(x, y), z);
    t(e1, e2, e3).add(&t(e2, e3, e1)).add(&t(e3, e1, e2))
}

fn unit_matrix(n: usize, k: usize) -> Matrix {
    Matrix::from_flat(n, n, vector::unit(n * n, k)).expect("n*n entries")
}

/// `gl(n)` in the row-major basis.
pub fn gl(n: usize) -> LieAlgebra {
    let m = n * n;
    LieAlgebra::new(Tensor::from_fn(&[m, m], m, |i| unit_matrix(n, i[0]).commutator(&unit_matrix(n, i[1])).flat().to_vec()))
        .expect("commutator bracket")
}

/// `mu(A) u = Au/2`, `nu(A,B) = [A,B]/4` on `V --Id--> V`.
pub fn omni_rep(n: usize) -> RepUpToHomotopy {
    let m = n * n;
    let mats: Vec<Matrix> = (0..m).map(|k| unit_matrix(n, k).scale(&half())).collect();
    RepUpToHomotopy::from_matrices(gl(n), TwoTermComplex::new(Matrix::identity(n)), &mats, &mats, |i, j| {
        unit_matrix(n, i).commutator(&unit_matrix(n, j)).scale(&quarter())
    })
    .expect("omni rep shapes")
}

/// `V --(0+Id)--> gl(V) + V` with `l2` the omni bracket, `l2(e, f) = [e, d f]`
/// and `l3 = -T`, built straight from [`omni_bracket`] and [`jacobiator_t`].
pub fn build_omni_lie2(n: usize) -> Lie2Algebra {
    let dim0 = n * n + n;
    let el = |i: usize| OmniElement::from_coords(n, &vector::unit(dim0, i));
    let d = Matrix::zeros(n * n, n).vstack(&Matrix::identity(n));
    let l2_00 = Tensor::from_fn(&[dim0, dim0], dim0, |i| omni_bracket(&el(i[0]), &el(i[1])).coords());
    let l2_01 = Tensor::from_fn(&[dim0, n], n, |i| {
        let f = OmniElement { a: Matrix::zeros(n, n), u: vector::unit(n, i[1]) };
        // [e, d f] has no gl(V) part; its V part is the degree 1 value
        omni_bracket(&el(i[0]), &f).u
    });
    let l3 = Tensor::from_fn(&[dim0, dim0, dim0], n, |i| vector::neg(&jacobiator_t(&el(i[0]), &el(i[1]), &el(i[2]))));
    Lie2Algebra::new(TwoTermComplex::new(d), l2_00, l2_01, l3).expect("omni Lie 2-algebra shapes")
}

/// The full strictification pipeline on the omni representation.
pub fn omni_pipeline(n: usize) -> Result<StrictifiedSemidirect> {
    strictified_semidirect(&omni_rep(n))
}

/// The strict crossed module `(gl(V) x| V, (gl(V) + gl(V)) x| V, i2 x Id, phi)`
/// and the equivalence `f0(A,B,u) = (A,u)`, `f1(A,u) = u`,
/// `f2((A,B,u),(A',B',v)) = Bv - B'u` onto the omni Lie 2-algebra.
pub fn omni_strictified(n: usize) -> Result<(CrossedModuleAlg, Lie2Morphism)> {
    let s = omni_pipeline(n)?;
    Ok((s.xmod.clone(), s.equivalence_morphism()))
}

/// `[(A1,A2),(B1,B2)] = ([A1,B1], ([A1,B2] + [A2,B1])/2 + [A2,B2] - [A1,B1]/4)`
/// on `gl(V) + gl(V)`, coded by hand.
pub fn glgl_bracket(n: usize) -> Tensor {
    let m = n * n;
    let part = |i: usize| {
        if i < m {
            (unit_matrix(n, i), Matrix::zeros(n, n))
        } else {
            (Matrix::zeros(n, n), unit_matrix(n, i - m))
        }
    };
    Tensor::from_fn(&[2 * m, 2 * m], 2 * m, |i| {
        let ((a1, a2), (b1, b2)) = (part(i[0]), part(i[1]));
        let first = a1.commutator(&b1);
        let mixed = (&a1.commutator(&b2) + &a2.commutator(&b1)).scale(&half());
        let second = &(&mixed + &a2.commutator(&b2)) - &first.scale(&quarter());
        vector::concat(&[first.flat(), second.flat()])
    })
}

/// `[(A1,A2,u),(B1,B2,v)] = ([(A1,A2),(B1,B2)], (A1/2 + A2) v - (B1/2 + B2) u)`.
pub fn glglv_bracket(n: usize) -> Tensor {
    let m = n * n;
    let dim = 2 * m + n;
    let inner = glgl_bracket(n);
    Tensor::from_fn(&[dim, dim], dim, |i| {
        let (x, y) = (vector::unit(dim, i[0]), vector::unit(dim, i[1]));
        let rho = |z: &[Rational]| {
            let a1 = Matrix::from_flat(n, n, z[..m].to_vec()).expect("entries");
            let a2 = Matrix::from_flat(n, n, z[m..2 * m].to_vec()).expect("entries");
            &a1.scale(&half()) + &a2
        };
        let top = inner.eval(&[&x[..2 * m], &y[..2 * m]]);
        let v = vector::sub(&rho(&x).mul_vec(&y[2 * m..]), &rho(&y).mul_vec(&x[2 * m..]));
        vector::concat(&[&top, &v])
    })
}

/// `phi~_{(A,B,u)}(C,v) = ([A/2 + B, C], (A/2 + B) v - C u)`.
pub fn glglv_action(n: usize) -> Tensor {
    let m = n * n;
    let (d0, d1) = (2 * m + n, m + n);
    Tensor::from_fn(&[d0, d1], d1, |i| {
        let (x, y) = (vector::unit(d0, i[0]), vector::unit(d1, i[1]));
        let a = Matrix::from_flat(n, n, x[..m].to_vec()).expect("entries");
        let b = Matrix::from_flat(n, n, x[m..2 * m].to_vec()).expect("entries");
        let r = &a.scale(&half()) + &b;
        let c = Matrix::from_flat(n, n, y[..m].to_vec()).expect("entries");
        let v = vector::sub(&r.mul_vec(&y[m..]), &c.mul_vec(&x[2 * m..]));
        vector::concat(&[r.commutator(&c).flat(), &v])
    })
}

fn ad_matrix(b: &Tensor, u: &[Rational]) -> Matrix {
    b.contract_first(u).to_matrix()
}

fn require_skew(b: &Tensor) -> Result<usize> {
    let n = b.out_dim();
    if b.dims() != [n, n] {
        return Err(shape(format!("a bracket on V is [n, n] -> n, got {:?} -> {n}", b.dims())));
    }
    if let Some(idx) = b.antisymmetry_violation(0, 1) {
        return Err(Error::NotAntisymmetric(format!("bracket at {idx:?}")));
    }
    Ok(n)
}

/// Graph `G_ad = {(ad_u, u)}` of a skew bracket: maximal isotropy (the
/// pairing-orthogonal of the graph is the graph), closure of the omni bracket
/// on the graph, Jacobi for `b`, `u -> (ad_u, u)` preserving brackets, and
/// closure holding exactly when Jacobi does.
pub fn check_dirac_graph(b: &Tensor) -> Result<Report> {
    let n = require_skew(b)?;
    let dim = n * n + n;
    let mut r = Report::new("graph of ad in the omni-Lie algebra");
    let graph = |u: &[Rational]| OmniElement { a: ad_matrix(b, u), u: u.to_vec() };
    let basis: Vec<OmniElement> = (0..n).map(|i| graph(&vector::unit(n, i))).collect();
    let span = Matrix::from_columns(&basis.iter().map(OmniElement::coords).collect::<Vec<_>>(), dim);

    let iso = (0..n).find_map(|i| {
        (i..n).find_map(|j| {
            let p = omni_pairing(&basis[i], &basis[j]);
            (!vector::is_zero(&p)).then(|| format!("<g(e{i}), g(e{j})> = {}", vector::format(&p)))
        })
    });
    r.record("isotropic", "pairing vanishes on the graph", iso);

    // e -> (<e, g_j>)_j, stacked over j
    let pair_map = Matrix::from_fn(n * n, dim, |row, col| {
        let (j, k) = (row / n, row % n);
        let e = OmniElement::from_coords(n, &vector::unit(dim, col));
        omni_pairing(&e, &basis[j])[k].clone()
    });
    let perp = pair_map.kernel_matrix();
    let maximal = perp.canonical_span() == span.canonical_span();
    r.assert_that("maximal", "orthogonal complement of the graph is the graph", maximal, || {
        format!("complement has dimension {}, graph {}", perp.rank(), span.rank())
    });

    let closure = (0..n).find_map(|i| {
        (i + 1..n).find_map(|j| {
            let c = omni_bracket(&basis[i], &basis[j]).coords();
            (span.solve(&c).is_none()).then(|| format!("[g(e{i}), g(e{j})] = {} leaves the graph", vector::format(&c)))
        })
    });
    let closed = closure.is_none();
    r.record("closure", "omni bracket closes on the graph", closure);

    let jac = jacobi_violation(b).map(|(idx, v)| format!("{idx:?} gives {}", vector::format(&v)));
    let jacobi = jac.is_none();
    r.record("jacobi", "b satisfies Jacobi", jac);

    let morph = (0..n).find_map(|i| {
        (i + 1..n).find_map(|j| {
            let (u, v) = (vector::unit(n, i), vector::unit(n, j));
            let lhs = omni_bracket(&graph(&u), &graph(&v));
            (lhs != graph(&b.eval(&[&u, &v]))).then(|| format!("e{i}, e{j}"))
        })
    });
    r.record("graph-morphism", "u -> (ad_u, u) preserves brackets", morph);

    r.assert_that("closure-iff-jacobi", "closure holds exactly when Jacobi does", closed == jacobi, || {
        format!("closure {closed}, jacobi {jacobi}")
    });
    Ok(r)
}

/// The pieces of the pullback square for a Lie bracket `b` on `V` and a
/// central subspace `W` (columns of `w`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiracPullback {
    /// `W --i--> G_ad` with `G_ad` coordinatized by `u`.
    pub sub: Lie2Algebra,
    /// `(gl(V) x W, gl(V) x V, Id x i, phi)`.
    pub xmod: CrossedModuleAlg,
    /// `(psi0, psi1, psi2)` into the strict omni model.
    pub psi: Lie2Morphism,
    /// `(A,u) -> u`, `(A,c) -> c`.
    pub left: Lie2Morphism,
    /// `u -> (ad_u, u)`, `c -> i c`.
    pub bottom: Lie2Morphism,
    pub pipeline: StrictifiedSemidirect,
    pub omni: Lie2Algebra,
}

/// Builds the square
///
/// ```text
/// gl(V) x W -> gl(V) x V  --psi-->  gl(V) x| V -> (gl(V) + gl(V)) x| V
///        |                                    |
///      left                               equivalence
///        v                                    v
///      W -> G_ad          --(i, id)-->   V -> gl(V) + V
/// ```
///
/// with `[(A,u),(B,v)] = (([ad_u,B] + [A,ad_v])/2 + [A,B] - ad_{[u,v]}/4, [u,v])`,
/// `phi_{(A,u)}(B,c) = ([A,B] + [ad_u,B]/2, 0)`,
/// `psi0(A,u) = (ad_u, A, u)`, `psi1(A,c) = (A, c)` and
/// `psi2((A,u),(B,v)) = (0, Bu - Av)`.
pub fn dirac_pullback(b: &Tensor, w: &Matrix) -> Result<DiracPullback> {
    let n = require_skew(b)?;
    if w.rows() != n || !w.is_injective() {
        return Err(shape("W must be given by independent columns in V"));
    }
    if let Some((idx, v)) = jacobi_violation(b) {
        return Err(Error::NotJacobi(format!("{idx:?} gives {}", vector::format(&v))));
    }
    let k = w.cols();
    let central = (0..k).find_map(|j| {
        (0..n).find_map(|i| {
            let v = b.eval(&[&w.col(j), &vector::unit(n, i)]);
            (!vector::is_zero(&v)).then(|| format!("[w{j}, e{i}] = {}", vector::format(&v)))
        })
    });
    if let Some(why) = central {
        return Err(Error::NotCentral(why));
    }
    let m = n * n;
    let ad = |u: &[Rational]| ad_matrix(b, u);
    let mat = |v: &[Rational]| Matrix::from_flat(n, n, v.to_vec()).expect("entries");

    let sub = Lie2Algebra::strict(TwoTermComplex::new(w.clone()), b.clone(), Tensor::zeros(&[n, k], k))?;

    let (h1, h0) = (m + k, m + n);
    let bracket_h1 = Tensor::from_fn(&[h1, h1], h1, |i| {
        let (x, y) = (vector::unit(h1, i[0]), vector::unit(h1, i[1]));
        vector::concat(&[mat(&x[..m]).commutator(&mat(&y[..m])).flat(), &vector::zeros(k)])
    });
    let bracket_h0 = Tensor::from_fn(&[h0, h0], h0, |i| {
        let (x, y) = (vector::unit(h0, i[0]), vector::unit(h0, i[1]));
        let (a, u, bb, v) = (mat(&x[..m]), &x[m..], mat(&y[..m]), &y[m..]);
        let uv = b.eval(&[u, v]);
        let mixed = (&ad(u).commutator(&bb) + &a.commutator(&ad(v))).scale(&half());
        let top = &(&mixed + &a.commutator(&bb)) - &ad(&uv).scale(&quarter());
        vector::concat(&[top.flat(), &uv])
    });
    let mut dt = Matrix::zeros(h0, h1);
    dt.set_block(0, 0, &Matrix::identity(m));
    dt.set_block(m, m, w);
    let phi = Tensor::from_fn(&[h0, h1], h1, |i| {
        let (x, y) = (vector::unit(h0, i[0]), vector::unit(h1, i[1]));
        let (a, u, bb) = (mat(&x[..m]), &x[m..], mat(&y[..m]));
        let top = &a.commutator(&bb) + &ad(u).commutator(&bb).scale(&half());
        vector::concat(&[top.flat(), &vector::zeros(k)])
    });
    let xmod = CrossedModuleAlg::new(bracket_h1, bracket_h0, dt, phi)?;

    let pipeline = omni_pipeline(n)?;
    // strict side: h0' = (gl, k1, V), h1' = (P = k1, V)
    let mut psi0 = Matrix::zeros(2 * m + n, h0);
    for i in 0..n {
        let col = vector::concat(&[ad(&vector::unit(n, i)).flat(), &vector::zeros(m), &vector::unit(n, i)]);
        for (r, c) in col.into_iter().enumerate() {
            psi0.set(r, m + i, c);
        }
    }
    psi0.set_block(m, 0, &Matrix::identity(m));
    let mut psi1 = Matrix::zeros(m + n, h1);
    psi1.set_block(0, 0, &Matrix::identity(m));
    psi1.set_block(m, m, w);
    let psi2 = Tensor::from_fn(&[h0, h0], m + n, |i| {
        let (x, y) = (vector::unit(h0, i[0]), vector::unit(h0, i[1]));
        let (a, u, bb, v) = (mat(&x[..m]), &x[m..], mat(&y[..m]), &y[m..]);
        vector::concat(&[&vector::zeros(m), &vector::sub(&bb.mul_vec(u), &a.mul_vec(v))])
    });
    let psi = Lie2Morphism::new(psi0, psi1, psi2)?;

    let left = Lie2Morphism::strict(
        Matrix::zeros(n, m).hstack(&Matrix::identity(n)),
        Matrix::zeros(k, m).hstack(&Matrix::identity(k)),
    );
    let bottom_f0 = Matrix::from_columns(
        &(0..n).map(|i| vector::concat(&[ad(&vector::unit(n, i)).flat(), &vector::unit(n, i)])).collect::<Vec<_>>(),
        m + n,
    );
    let bottom = Lie2Morphism::strict(bottom_f0, w.clone());
    Ok(DiracPullback { sub, xmod, psi, left, bottom, pipeline, omni: build_omni_lie2(n) })
}

/// Verifies every arrow of the pullback square, that it commutes as
/// morphisms (including the `f2` parts), that the vertical arrows are
/// equivalences, and that `H0` of the sub-Lie-2-algebra has dimension
/// `dim V - dim W`.
pub fn dirac_pullback_check(b: &Tensor, w: &Matrix) -> Result<Report> {
    let p = dirac_pullback(b, w)?;
    let mut r = Report::new("pullback of a graph sub-Lie-2-algebra");
    let strict = p.pipeline.strict_lie2();
    let wv = xmod_to_dgla(&p.xmod);
    r.absorb("sub", check_lie2(&p.sub));
    r.absorb("xmod", check_crossed_module(&p.xmod));
    r.absorb("psi", check_morphism(&wv, &strict, &p.psi));
    r.absorb("left", check_morphism(&wv, &p.sub, &p.left));
    r.absorb("bottom", check_morphism(&p.sub, &p.omni, &p.bottom));
    let right = p.pipeline.equivalence_morphism();
    r.absorb("right", check_morphism(&strict, &p.omni, &right));
    let upper = compose(&right, &p.psi)?;
    let lower = compose(&p.bottom, &p.left)?;
    r.assert_that("square-commutes", "right . psi = (i, id) . left", upper == lower, || {
        format!("f0 {} vs {}, f2 zero: {} vs {}", upper.f0(), lower.f0(), upper.f2().is_zero(), lower.f2().is_zero())
    });
    let ql = quasi_iso_check(&wv, &p.sub, &p.left);
    r.assert_that("left-quasi-iso", "left arrow is an equivalence", ql == Ok(true), || format!("{ql:?}"));
    let qr = quasi_iso_check(&strict, &p.omni, &right);
    r.assert_that("right-quasi-iso", "right arrow is an equivalence", qr == Ok(true), || format!("{qr:?}"));
    let (n, k) = (w.rows(), w.cols());
    let h0 = p.sub.complex().h0_dim();
    r.assert_that("quotient-dim", "dim H0 = dim V - dim W", h0 == n - k && p.sub.complex().h1_dim() == 0, || {
        format!("H0 {h0}, expected {}", n - k)
    });
    Ok(r)
}

/// Everything about the omni-Lie algebra of `Q^n`, plus the Dirac graph of
/// `b` (default zero bracket) and the pullback with `W` (default 0).
pub fn omni_report(n: usize, b: Option<&Tensor>, w: Option<&Matrix>) -> Result<Report> {
    if n == 0 {
        return Err(shape("omni needs dim V >= 1"));
    }
    let zero_b = Tensor::zeros(&[n, n], n);
    let b = b.unwrap_or(&zero_b);
    let zero_w = Matrix::zeros(n, 0);
    let w = w.unwrap_or(&zero_w);
    let mut r = Report::new(format!("omni-Lie algebra gl(V) + V, dim V = {n}"));
    let dim0 = n * n + n;
    let el = |i: usize| OmniElement::from_coords(n, &vector::unit(dim0, i));

    let jac = (0..dim0).find_map(|i| {
        (i + 1..dim0).find_map(|j| {
            (j + 1..dim0).find_map(|k| {
                let lhs = cyclic_double_bracket(&el(i), &el(j), &el(k));
                let rhs = OmniElement { a: Matrix::zeros(n, n), u: jacobiator_t(&el(i), &el(j), &el(k)) };
                (lhs != rhs).then(|| format!("(e{i}, e{j}, e{k})"))
            })
        })
    });
    r.record("jacobiator", "[[e1,e2],e3] + c.p. = T(e1,e2,e3)", jac);

    let omni = build_omni_lie2(n);
    r.absorb("lie2", check_lie2(&omni));
    let semi = semidirect_lie2(&omni_rep(n))?;
    r.assert_that("semidirect-agrees", "omni Lie 2-algebra is gl(V) x| (mu, nu)", semi == omni, || {
        "tensors differ".into()
    });

    let s = omni_pipeline(n)?;
    r.absorb("pipeline", s.check());
    let m = n * n;
    r.assert_that("glgl-bracket", "middle bracket matches the hand-coded one", s.butterfly.e().tensor() == &glgl_bracket(n), || {
        "entrywise mismatch".into()
    });
    r.assert_that(
        "glglv-bracket",
        "strict degree 0 bracket matches the hand-coded one",
        s.xmod.bracket_h0_tensor() == &glglv_bracket(n),
        || "entrywise mismatch".into(),
    );
    r.assert_that("glglv-action", "strict action matches the hand-coded one", s.xmod.phi_tensor() == &glglv_action(n), || {
        "entrywise mismatch".into()
    });
    let rho = Matrix::identity(m).scale(&half()).hstack(&Matrix::identity(m));
    r.assert_that("rho", "rho(A1, A2) = A1/2 + A2", s.butterfly.rho() == &rho, || format!("{}", s.butterfly.rho()));
    let fiber = s.strictification.fiber.inclusion();
    let expected = Matrix::zeros(m, m).vstack(&Matrix::identity(m));
    r.assert_that("sigma-kernel", "sigma^{-1}(0) = {(0, A2)}", fiber.canonical_span() == expected.canonical_span(), || {
        format!("{fiber}")
    });

    r.absorb("dirac", check_dirac_graph(b)?);
    match dirac_pullback_check(b, w) {
        Ok(p) => r.absorb("pullback", p),
        Err(e @ (Error::NotJacobi(_) | Error::NotCentral(_))) => r.record("pullback", "graph sub-Lie-2-algebra", Some(e.to_string())),
        Err(e) => return Err(e),
    }
    Ok(r)
}
