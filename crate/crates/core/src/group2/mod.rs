//! Crossed modules of groups on matrix models, the automorphism crossed
//! module `Aut(V) = (K1, K0, int delta, Phi)`, strict 2-groups from crossed
//! modules, the semidirect-product 2-group of a strict representation, and
//! the exponential bridge back to `End(V)` (in [`exp`]).
//!
//! All group laws here are polynomial in the data, so elements are exact.
//! Properties are checked on seeded random samples.

pub mod exp;
mod semidirect;
mod twogroup;

use std::fmt::Debug;

use crate::error::{Error, Result};
use crate::exactlin::{Matrix, Subspace};
use crate::gradedend::TwoTermComplex;
use crate::report::Report;
use crate::sample::{self, SampleRng};

pub use semidirect::{
    check_strict_rep, semidirect_two_group, SemidirectH0, SemidirectH1, SemidirectTwoGroup, SemidirectXMod, StrictGroupRep,
};
pub use twogroup::{check_two_group, two_group_from_xmod, StrictTwoGroup, XModTwoGroup};

/// A group given by its operations, with a sampler for property checks.
pub trait Group {
    type Elem: Clone + PartialEq + Debug;
    fn identity(&self) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    fn sample(&self, rng: &mut SampleRng) -> Self::Elem;
    fn describe(&self, a: &Self::Elem) -> String;
}

/// `(H1, H0, t, Phi)`.
pub trait GroupCrossedModule {
    type H1: Group;
    type H0: Group;
    fn h1(&self) -> &Self::H1;
    fn h0(&self) -> &Self::H0;
    fn boundary(&self, a: &<Self::H1 as Group>::Elem) -> <Self::H0 as Group>::Elem;
    fn act(&self, x: &<Self::H0 as Group>::Elem, a: &<Self::H1 as Group>::Elem) -> <Self::H1 as Group>::Elem;
}

/// `M in Hom(V0, V1)` with `I + d M` invertible.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct K1Element {
    m: Matrix,
}

impl K1Element {
    pub fn new(c: &TwoTermComplex, m: Matrix) -> Result<Self> {
        if (m.rows(), m.cols()) != (c.dim_v1(), c.dim_v0()) {
            return Err(crate::error::shape("K1 elements are dim V1 x dim V0"));
        }
        let g = Self { m };
        let (b0, b1) = g.int_delta_blocks(c);
        if b0.rank() < b0.rows() || b1.rank() < b1.rows() {
            return Err(Error::NotInvertible(format!("I + d M for M = {}", g.m)));
        }
        Ok(g)
    }

    pub fn matrix(&self) -> &Matrix {
        &self.m
    }

    fn int_delta_blocks(&self, c: &TwoTermComplex) -> (Matrix, Matrix) {
        let d = c.d();
        let i0 = Matrix::identity(c.dim_v0());
        let i1 = Matrix::identity(c.dim_v1());
        (&i0 + &(d * &self.m), &i1 + &(&self.m * d))
    }
}

/// `(B0, B1)` invertible with `B0 d = d B1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct K0Element {
    b0: Matrix,
    b1: Matrix,
}

impl K0Element {
    pub fn new(c: &TwoTermComplex, b0: Matrix, b1: Matrix) -> Result<Self> {
        let (n0, n1) = (c.dim_v0(), c.dim_v1());
        if (b0.rows(), b0.cols(), b1.rows(), b1.cols()) != (n0, n0, n1, n1) {
            return Err(crate::error::shape("K0 elements are (n0 x n0, n1 x n1)"));
        }
        if b0.rank() < n0 || b1.rank() < n1 {
            return Err(Error::NotInvertible(format!("({b0}, {b1})")));
        }
        if &b0 * c.d() != c.d() * &b1 {
            return Err(Error::NotChainMap);
        }
        Ok(Self { b0, b1 })
    }

    pub fn b0(&self) -> &Matrix {
        &self.b0
    }

    pub fn b1(&self) -> &Matrix {
        &self.b1
    }
}

/// `M1 M2 = M1 + M2 + M1 d M2`.
pub fn k1_mul(c: &TwoTermComplex, a: &K1Element, b: &K1Element) -> K1Element {
    K1Element { m: &(&a.m + &b.m) + &(&(&a.m * c.d()) * &b.m) }
}

/// `M^{-1} = -(I + M d)^{-1} M`.
pub fn k1_inv(c: &TwoTermComplex, a: &K1Element) -> K1Element {
    let (_, b1) = a.int_delta_blocks(c);
    let inv = b1.invert().expect("K1 elements have I + M d invertible");
    K1Element { m: -&(&inv * &a.m) }
}

/// `(I + d M, I + M d)`.
pub fn int_delta(c: &TwoTermComplex, a: &K1Element) -> K0Element {
    let (b0, b1) = a.int_delta_blocks(c);
    K0Element { b0, b1 }
}

/// `Phi_{(B0, B1)} M = B1 M B0^{-1}`.
pub fn phi_action(k: &K0Element, a: &K1Element) -> K1Element {
    let inv = k.b0.invert().expect("K0 elements are invertible");
    K1Element { m: &(&k.b1 * &a.m) * &inv }
}

/// The group `K1` of a complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct K1Group {
    complex: TwoTermComplex,
}

impl K1Group {
    pub fn new(c: &TwoTermComplex) -> Self {
        Self { complex: c.clone() }
    }
}

impl Group for K1Group {
    type Elem = K1Element;

    fn identity(&self) -> K1Element {
        K1Element { m: Matrix::zeros(self.complex.dim_v1(), self.complex.dim_v0()) }
    }

    fn mul(&self, a: &K1Element, b: &K1Element) -> K1Element {
        k1_mul(&self.complex, a, b)
    }

    fn inv(&self, a: &K1Element) -> K1Element {
        k1_inv(&self.complex, a)
    }

    fn sample(&self, rng: &mut SampleRng) -> K1Element {
        let c = &self.complex;
        loop {
            let m = sample::int_matrix(rng, c.dim_v1(), c.dim_v0(), sample::BOUND);
            if let Ok(g) = K1Element::new(c, m) {
                return g;
            }
        }
    }

    fn describe(&self, a: &K1Element) -> String {
        format!("M = {}", a.m)
    }
}

/// The group `K0` of a complex. Samples are products of two elements
/// `I + X` with `X` an integer point of `k0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct K0Group {
    complex: TwoTermComplex,
    k0: Subspace,
}

impl K0Group {
    pub fn new(c: &TwoTermComplex) -> Self {
        let (n0, n1) = (c.dim_v0(), c.dim_v1());
        // (A, B) with A d - d B = 0, coordinates A then B row-major
        let eqs = Matrix::from_fn(n0 * n1, n0 * n0 + n1 * n1, |row, col| {
            let (i, j) = (row / n1, row % n1);
            if col < n0 * n0 {
                let (p, q) = (col / n0, col % n0);
                if p == i { c.d().get(q, j).clone() } else { crate::int(0) }
            } else {
                let (p, q) = ((col - n0 * n0) / n1, (col - n0 * n0) % n1);
                if q == j { -c.d().get(i, p) } else { crate::int(0) }
            }
        });
        Self { complex: c.clone(), k0: Subspace::kernel(&eqs) }
    }

    fn sample_near_identity(&self, rng: &mut SampleRng) -> Option<K0Element> {
        let (n0, n1) = (self.complex.dim_v0(), self.complex.dim_v1());
        let coords = sample::int_vector(rng, self.k0.dim(), 1);
        let v = self.k0.embed(&coords);
        let a = Matrix::from_flat(n0, n0, v[..n0 * n0].to_vec()).ok()?;
        let b = Matrix::from_flat(n1, n1, v[n0 * n0..].to_vec()).ok()?;
        K0Element::new(&self.complex, &Matrix::identity(n0) + &a, &Matrix::identity(n1) + &b).ok()
    }
}

impl Group for K0Group {
    type Elem = K0Element;

    fn identity(&self) -> K0Element {
        K0Element { b0: Matrix::identity(self.complex.dim_v0()), b1: Matrix::identity(self.complex.dim_v1()) }
    }

    fn mul(&self, a: &K0Element, b: &K0Element) -> K0Element {
        K0Element { b0: &a.b0 * &b.b0, b1: &a.b1 * &b.b1 }
    }

    fn inv(&self, a: &K0Element) -> K0Element {
        K0Element {
            b0: a.b0.invert().expect("K0 elements are invertible"),
            b1: a.b1.invert().expect("K0 elements are invertible"),
        }
    }

    fn sample(&self, rng: &mut SampleRng) -> K0Element {
        let mut one = || loop {
            if let Some(g) = self.sample_near_identity(rng) {
                return g;
            }
        };
        let (a, b) = (one(), one());
        self.mul(&a, &b)
    }

    fn describe(&self, a: &K0Element) -> String {
        format!("(B0, B1) = ({}, {})", a.b0, a.b1)
    }
}

/// `GL(n)` over the rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlGroup {
    pub n: usize,
}

impl Group for GlGroup {
    type Elem = Matrix;

    fn identity(&self) -> Matrix {
        Matrix::identity(self.n)
    }

    fn mul(&self, a: &Matrix, b: &Matrix) -> Matrix {
        a * b
    }

    fn inv(&self, a: &Matrix) -> Matrix {
        a.invert().expect("GL elements are invertible")
    }

    fn sample(&self, rng: &mut SampleRng) -> Matrix {
        sample::invertible(rng, self.n, sample::BOUND)
    }

    fn describe(&self, a: &Matrix) -> String {
        a.to_string()
    }
}

/// The one-element group.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct TrivialGroup;

impl Group for TrivialGroup {
    type Elem = ();

    fn identity(&self) {}

    fn mul(&self, _: &(), _: &()) {}

    fn inv(&self, _: &()) {}

    fn sample(&self, _: &mut SampleRng) {}

    fn describe(&self, _: &()) -> String {
        "1".into()
    }
}

/// `Aut(V) = (K1, K0, int delta, Phi)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutV {
    complex: TwoTermComplex,
    k1: K1Group,
    k0: K0Group,
}

impl AutV {
    pub fn new(c: &TwoTermComplex) -> Self {
        Self { complex: c.clone(), k1: K1Group::new(c), k0: K0Group::new(c) }
    }

    pub fn complex(&self) -> &TwoTermComplex {
        &self.complex
    }
}

impl GroupCrossedModule for AutV {
    type H1 = K1Group;
    type H0 = K0Group;

    fn h1(&self) -> &K1Group {
        &self.k1
    }

    fn h0(&self) -> &K0Group {
        &self.k0
    }

    fn boundary(&self, a: &K1Element) -> K0Element {
        int_delta(&self.complex, a)
    }

    fn act(&self, x: &K0Element, a: &K1Element) -> K1Element {
        phi_action(x, a)
    }
}

/// `(1, G, 1, 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrivialXMod<G> {
    pub g: G,
}

impl<G: Group> GroupCrossedModule for TrivialXMod<G> {
    type H1 = TrivialGroup;
    type H0 = G;

    fn h1(&self) -> &TrivialGroup {
        &TrivialGroup
    }

    fn h0(&self) -> &G {
        &self.g
    }

    fn boundary(&self, _: &()) -> G::Elem {
        self.g.identity()
    }

    fn act(&self, _: &G::Elem, _: &()) {}
}

/// The same groups and boundary with `Phi` replaced by the trivial action.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WithTrivialAction<X>(pub X);

impl<X: GroupCrossedModule> GroupCrossedModule for WithTrivialAction<X> {
    type H1 = X::H1;
    type H0 = X::H0;

    fn h1(&self) -> &X::H1 {
        self.0.h1()
    }

    fn h0(&self) -> &X::H0 {
        self.0.h0()
    }

    fn boundary(&self, a: &<X::H1 as Group>::Elem) -> <X::H0 as Group>::Elem {
        self.0.boundary(a)
    }

    fn act(&self, _: &<X::H0 as Group>::Elem, a: &<X::H1 as Group>::Elem) -> <X::H1 as Group>::Elem {
        a.clone()
    }
}

fn first_sample<T>(samples: usize, rng: &mut SampleRng, mut f: impl FnMut(&mut SampleRng) -> Option<T>) -> Option<T> {
    (0..samples).find_map(|_| f(rng))
}

/// Group axioms in a single group on sampled triples.
pub fn check_group<G: Group>(g: &G, samples: usize, seed: u64) -> Report {
    let mut r = Report::sampled("group", seed, samples);
    let rng = &mut sample::rng(seed);
    let e = g.identity();
    let assoc = first_sample(samples, rng, |rng| {
        let (a, b, c) = (g.sample(rng), g.sample(rng), g.sample(rng));
        (g.mul(&g.mul(&a, &b), &c) != g.mul(&a, &g.mul(&b, &c)))
            .then(|| format!("{}, {}, {}", g.describe(&a), g.describe(&b), g.describe(&c)))
    });
    r.record("associativity", "(ab)c = a(bc)", assoc);
    let unit = first_sample(samples, rng, |rng| {
        let a = g.sample(rng);
        (g.mul(&a, &e) != a || g.mul(&e, &a) != a).then(|| g.describe(&a))
    });
    r.record("identity", "1a = a = a1", unit);
    let inv = first_sample(samples, rng, |rng| {
        let a = g.sample(rng);
        let b = g.inv(&a);
        (g.mul(&a, &b) != e || g.mul(&b, &a) != e).then(|| g.describe(&a))
    });
    r.record("inverse", "a a^{-1} = 1 = a^{-1} a", inv);
    r
}

/// Group axioms of both groups, `t` a morphism, `Phi` an action by
/// automorphisms, equivariance `t Phi_g(h) = g t(h) g^{-1}` and the Peiffer
/// identity `Phi_{t(h)} h' = h h' h^{-1}`, all on seeded samples.
pub fn check_group_xmod<X: GroupCrossedModule>(x: &X, samples: usize, seed: u64) -> Report {
    let (h1, h0) = (x.h1(), x.h0());
    let mut r = Report::sampled("crossed module of groups", seed, samples);
    r.absorb("h1", check_group(h1, samples, seed));
    r.absorb("h0", check_group(h0, samples, seed.wrapping_add(1)));
    let rng = &mut sample::rng(seed.wrapping_add(2));
    let show1 = |a: &<X::H1 as Group>::Elem| h1.describe(a);
    let show0 = |a: &<X::H0 as Group>::Elem| h0.describe(a);

    let t_morph = first_sample(samples, rng, |rng| {
        let (a, b) = (h1.sample(rng), h1.sample(rng));
        (x.boundary(&h1.mul(&a, &b)) != h0.mul(&x.boundary(&a), &x.boundary(&b)))
            .then(|| format!("a: {}, b: {}", show1(&a), show1(&b)))
    });
    r.record("t-morphism", "t(ab) = t(a) t(b)", t_morph);

    let action = first_sample(samples, rng, |rng| {
        let (g, k, a) = (h0.sample(rng), h0.sample(rng), h1.sample(rng));
        let ok = x.act(&h0.mul(&g, &k), &a) == x.act(&g, &x.act(&k, &a)) && x.act(&h0.identity(), &a) == a;
        (!ok).then(|| format!("g: {}, k: {}, a: {}", show0(&g), show0(&k), show1(&a)))
    });
    r.record("phi-action", "Phi_{gk} = Phi_g Phi_k, Phi_1 = id", action);

    let auto = first_sample(samples, rng, |rng| {
        let (g, a, b) = (h0.sample(rng), h1.sample(rng), h1.sample(rng));
        (x.act(&g, &h1.mul(&a, &b)) != h1.mul(&x.act(&g, &a), &x.act(&g, &b)))
            .then(|| format!("g: {}, a: {}, b: {}", show0(&g), show1(&a), show1(&b)))
    });
    r.record("phi-automorphism", "Phi_g(ab) = Phi_g(a) Phi_g(b)", auto);

    let equiv = first_sample(samples, rng, |rng| {
        let (g, a) = (h0.sample(rng), h1.sample(rng));
        let lhs = x.boundary(&x.act(&g, &a));
        let rhs = h0.mul(&h0.mul(&g, &x.boundary(&a)), &h0.inv(&g));
        (lhs != rhs).then(|| format!("g: {}, h: {}", show0(&g), show1(&a)))
    });
    r.record("equivariance", "t Phi_g(h) = g t(h) g^{-1}", equiv);

    let peiffer = first_sample(samples, rng, |rng| {
        let (a, b) = (h1.sample(rng), h1.sample(rng));
        let lhs = x.act(&x.boundary(&a), &b);
        let rhs = h1.mul(&h1.mul(&a, &b), &h1.inv(&a));
        (lhs != rhs).then(|| format!("h: {}, h': {}", show1(&a), show1(&b)))
    });
    r.record("peiffer", "Phi_{t(h)} h' = h h' h^{-1}", peiffer);
    r
}
