use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactlin::vector::{self, Vector};
use crate::gradedend::TwoTermComplex;
use crate::report::Report;
use crate::sample::{self, SampleRng};

use super::twogroup::StrictTwoGroup;
use super::{int_delta, k1_mul, phi_action, AutV, Group, GroupCrossedModule, K0Element, K0Group, K1Element, TrivialXMod};

type E0<X> = <<X as GroupCrossedModule>::H0 as Group>::Elem;
type E1<X> = <<X as GroupCrossedModule>::H1 as Group>::Elem;

/// A strict morphism `(Psi1, Psi0)` from a crossed module of groups to
/// `Aut(V)`.
type Psi<A, B> = Arc<dyn Fn(&A) -> B + Send + Sync>;

pub struct StrictGroupRep<X: GroupCrossedModule> {
    pub xmod: X,
    pub complex: TwoTermComplex,
    psi0: Psi<E0<X>, K0Element>,
    psi1: Psi<E1<X>, K1Element>,
}

impl<X: GroupCrossedModule + Clone> Clone for StrictGroupRep<X> {
    fn clone(&self) -> Self {
        Self { xmod: self.xmod.clone(), complex: self.complex.clone(), psi0: self.psi0.clone(), psi1: self.psi1.clone() }
    }
}

impl<X: GroupCrossedModule + fmt::Debug> fmt::Debug for StrictGroupRep<X> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("StrictGroupRep").field("xmod", &self.xmod).field("complex", &self.complex).finish_non_exhaustive()
    }
}

impl<X: GroupCrossedModule> StrictGroupRep<X> {
    pub fn new(
        xmod: X,
        complex: TwoTermComplex,
        psi0: impl Fn(&E0<X>) -> K0Element + Send + Sync + 'static,
        psi1: impl Fn(&E1<X>) -> K1Element + Send + Sync + 'static,
    ) -> Self {
        Self { xmod, complex, psi0: Arc::new(psi0), psi1: Arc::new(psi1) }
    }

    pub fn psi0(&self, x: &E0<X>) -> K0Element {
        (self.psi0)(x)
    }

    pub fn psi1(&self, a: &E1<X>) -> K1Element {
        (self.psi1)(a)
    }
}

impl StrictGroupRep<AutV> {
    /// `Aut(V)` acting on `V` through the identity.
    pub fn identity(c: &TwoTermComplex) -> Self {
        Self::new(AutV::new(c), c.clone(), |x: &K0Element| x.clone(), |a: &K1Element| a.clone())
    }
}

impl StrictGroupRep<TrivialXMod<K0Group>> {
    /// `(1, K0, 1, 1)` acting on `V` by inclusion.
    pub fn inclusion(c: &TwoTermComplex) -> Self {
        let c2 = c.clone();
        Self::new(TrivialXMod { g: K0Group::new(c) }, c.clone(), |x: &K0Element| x.clone(), move |_: &()| {
            super::K1Group::new(&c2).identity()
        })
    }
}

/// Strict-morphism conditions and their consequences on samples:
/// `Psi0`, `Psi1` are morphisms, `int delta Psi1 = Psi0 t` (split into its
/// `V0` and `V1` blocks), `Psi1(Phi_x a) = Psi0(x) Psi1(a) Psi0(x)^{-1}`,
/// `Psi1(ab) = Psi1(a) + Psi0(t a) Psi1(b)`,
/// `Psi0(t(a^{-1})) Psi1(a) + Psi1(a^{-1}) = 0` and
/// `Psi1(ba) = Psi1(b) + Psi1(a) + Psi1(b) d Psi1(a)`.
pub fn check_strict_rep<X: GroupCrossedModule>(rep: &StrictGroupRep<X>, samples: usize, seed: u64) -> Report {
    let (h1, h0, x) = (rep.xmod.h1(), rep.xmod.h0(), &rep.xmod);
    let c = &rep.complex;
    let d = c.d();
    let k0 = K0Group::new(c);
    let mut r = Report::sampled("strict representation of a crossed module of groups", seed, samples);
    let rng = &mut sample::rng(seed);
    let mut find = |f: &mut dyn FnMut(&mut SampleRng) -> Option<String>| (0..samples).find_map(|_| f(rng));

    let m0 = find(&mut |rng| {
        let (a, b) = (h0.sample(rng), h0.sample(rng));
        (rep.psi0(&h0.mul(&a, &b)) != k0.mul(&rep.psi0(&a), &rep.psi0(&b)))
            .then(|| format!("x: {}, y: {}", h0.describe(&a), h0.describe(&b)))
    });
    r.record("psi0-morphism", "Psi0(xy) = Psi0(x) Psi0(y)", m0);
    let m1 = find(&mut |rng| {
        let (a, b) = (h1.sample(rng), h1.sample(rng));
        (rep.psi1(&h1.mul(&a, &b)) != k1_mul(c, &rep.psi1(&a), &rep.psi1(&b)))
            .then(|| format!("a: {}, b: {}", h1.describe(&a), h1.describe(&b)))
    });
    r.record("psi1-morphism", "Psi1(ab) = Psi1(a) Psi1(b)", m1);
    let hom1 = find(&mut |rng| {
        let a = h1.sample(rng);
        (int_delta(c, &rep.psi1(&a)).b0() != rep.psi0(&x.boundary(&a)).b0()).then(|| h1.describe(&a))
    });
    r.record("homotopy-1", "xi + d Psi1(a) xi = Psi0(t(a)) xi", hom1);
    let hom2 = find(&mut |rng| {
        let a = h1.sample(rng);
        (int_delta(c, &rep.psi1(&a)).b1() != rep.psi0(&x.boundary(&a)).b1()).then(|| h1.describe(&a))
    });
    r.record("homotopy-2", "m + Psi1(a) d m = Psi0(t(a)) m", hom2);
    let adj = find(&mut |rng| {
        let (g, a) = (h0.sample(rng), h1.sample(rng));
        (rep.psi1(&x.act(&g, &a)) != phi_action(&rep.psi0(&g), &rep.psi1(&a)))
            .then(|| format!("x: {}, a: {}", h0.describe(&g), h1.describe(&a)))
    });
    r.record("equivariance", "Psi1(Phi_x a) = Psi0(x) Psi1(a) Psi0(x)^{-1}", adj);
    let lem_m = find(&mut |rng| {
        let (a, b) = (h1.sample(rng), h1.sample(rng));
        let lhs = rep.psi1(&h1.mul(&a, &b));
        let rhs = rep.psi1(&a).matrix() + &(rep.psi0(&x.boundary(&a)).b1() * rep.psi1(&b).matrix());
        (lhs.matrix() != &rhs).then(|| format!("a: {}, b: {}", h1.describe(&a), h1.describe(&b)))
    });
    r.record("product-rule", "Psi1(ab) = Psi1(a) + Psi0(t(a)) Psi1(b)", lem_m);
    let lem_inv = find(&mut |rng| {
        let a = h1.sample(rng);
        let ai = h1.inv(&a);
        let s = &(rep.psi0(&x.boundary(&ai)).b1() * rep.psi1(&a).matrix()) + rep.psi1(&ai).matrix();
        (!s.is_zero()).then(|| h1.describe(&a))
    });
    r.record("inverse-rule", "Psi0(t(a^{-1})) Psi1(a) + Psi1(a^{-1}) = 0", lem_inv);
    let key = find(&mut |rng| {
        let (a, b) = (h1.sample(rng), h1.sample(rng));
        let (pa, pb) = (rep.psi1(&a), rep.psi1(&b));
        let rhs = &(pb.matrix() + pa.matrix()) + &(&(pb.matrix() * d) * pa.matrix());
        (rep.psi1(&h1.mul(&b, &a)).matrix() != &rhs).then(|| format!("a: {}, b: {}", h1.describe(&a), h1.describe(&b)))
    });
    r.record("functoriality-key", "Psi1(ba) = Psi1(b) + Psi1(a) + Psi1(b) d Psi1(a)", key);
    r
}

const MORPHISM_CHECKS: [&str; 5] = ["psi0-morphism", "psi1-morphism", "homotopy-1", "homotopy-2", "equivariance"];

/// Objects `H0 x V0`, arrows `H0 x H1 x V0 x V1`.
pub struct SemidirectTwoGroup<X: GroupCrossedModule> {
    rep: Arc<StrictGroupRep<X>>,
}

/// Checks the strict-morphism conditions on samples and builds the
/// semidirect 2-group.
pub fn semidirect_two_group<X: GroupCrossedModule>(
    rep: StrictGroupRep<X>,
    samples: usize,
    seed: u64,
) -> Result<SemidirectTwoGroup<X>> {
    let report = check_strict_rep(&rep, samples, seed);
    if let Some(c) = report.checks.iter().find(|c| !c.passed && MORPHISM_CHECKS.contains(&c.id.as_str())) {
        return Err(Error::NotStrictGroupMorphism(format!("{}: {}", c.id, c.counterexample.clone().unwrap_or_default())));
    }
    Ok(SemidirectTwoGroup { rep: Arc::new(rep) })
}

impl<X: GroupCrossedModule> SemidirectTwoGroup<X> {
    pub fn rep(&self) -> &StrictGroupRep<X> {
        &self.rep
    }

    /// The crossed module `(H1 x| V1, H0 x| V0, t x d, Phi)`.
    pub fn crossed_module(&self) -> SemidirectXMod<X> {
        SemidirectXMod { h1: SemidirectH1(self.rep.clone()), h0: SemidirectH0(self.rep.clone()) }
    }
}

type Obj<X> = (E0<X>, Vector);
type Arrow<X> = (E0<X>, E1<X>, Vector, Vector);

impl<X: GroupCrossedModule> StrictTwoGroup for SemidirectTwoGroup<X> {
    type Obj = Obj<X>;
    type Arrow = Arrow<X>;

    fn source(&self, f: &Arrow<X>) -> Obj<X> {
        (f.0.clone(), f.2.clone())
    }

    fn target(&self, f: &Arrow<X>) -> Obj<X> {
        let x = &self.rep.xmod;
        (x.h0().mul(&x.boundary(&f.1), &f.0), vector::add(&f.2, &self.rep.complex.d().mul_vec(&f.3)))
    }

    fn vertical(&self, later: &Arrow<X>, earlier: &Arrow<X>) -> Result<Arrow<X>> {
        let (y, eta) = self.target(earlier);
        if later.0 != y || later.2 != eta {
            return Err(Error::NotComposable(format!(
                "source ({}, {}) is not target ({}, {})",
                self.rep.xmod.h0().describe(&later.0),
                vector::format(&later.2),
                self.rep.xmod.h0().describe(&y),
                vector::format(&eta)
            )));
        }
        let h1 = self.rep.xmod.h1();
        Ok((earlier.0.clone(), h1.mul(&later.1, &earlier.1), earlier.2.clone(), vector::add(&earlier.3, &later.3)))
    }

    /// `(xy, a Phi_x b, xi + Psi0(x) eta, m + Psi0(t(a)x) n + Psi1(a) Psi0(x) eta)`.
    fn horizontal(&self, f: &Arrow<X>, g: &Arrow<X>) -> Arrow<X> {
        let (x, a, xi, m) = f;
        let (y, b, eta, n) = g;
        let cm = &self.rep.xmod;
        let (h0, h1) = (cm.h0(), cm.h1());
        let px_eta = self.rep.psi0(x).b0().mul_vec(eta);
        let tax = h0.mul(&cm.boundary(a), x);
        let mut last = vector::add(m, &self.rep.psi0(&tax).b1().mul_vec(n));
        vector::add_assign(&mut last, &self.rep.psi1(a).matrix().mul_vec(&px_eta));
        (h0.mul(x, y), h1.mul(a, &cm.act(x, b)), vector::add(xi, &px_eta), last)
    }

    fn obj_mul(&self, p: &Obj<X>, q: &Obj<X>) -> Obj<X> {
        let h0 = self.rep.xmod.h0();
        (h0.mul(&p.0, &q.0), vector::add(&p.1, &self.rep.psi0(&p.0).b0().mul_vec(&q.1)))
    }

    fn identity_arrow(&self, p: &Obj<X>) -> Arrow<X> {
        (p.0.clone(), self.rep.xmod.h1().identity(), p.1.clone(), vector::zeros(self.rep.complex.dim_v1()))
    }

    fn unit_obj(&self) -> Obj<X> {
        (self.rep.xmod.h0().identity(), vector::zeros(self.rep.complex.dim_v0()))
    }

    fn unit_arrow(&self) -> Arrow<X> {
        let u = self.unit_obj();
        self.identity_arrow(&u)
    }

    /// `(x^{-1}, Phi_{x^{-1}} a^{-1}, -Psi0(x^{-1}) xi,
    ///   -Psi0((t(a)x)^{-1}) m + Psi0((t(a)x)^{-1}) Psi1(a) xi)`.
    fn inverse(&self, f: &Arrow<X>) -> Arrow<X> {
        let (x, a, xi, m) = f;
        let cm = &self.rep.xmod;
        let (h0, h1) = (cm.h0(), cm.h1());
        let xi_inv = h0.inv(x);
        let tax_inv = self.rep.psi0(&h0.inv(&h0.mul(&cm.boundary(a), x)));
        let last = vector::sub(
            &tax_inv.b1().mul_vec(&self.rep.psi1(a).matrix().mul_vec(xi)),
            &tax_inv.b1().mul_vec(m),
        );
        (
            xi_inv.clone(),
            cm.act(&xi_inv, &h1.inv(a)),
            vector::neg(&self.rep.psi0(&xi_inv).b0().mul_vec(xi)),
            last,
        )
    }

    fn sample_obj(&self, rng: &mut SampleRng) -> Obj<X> {
        (self.rep.xmod.h0().sample(rng), sample::int_vector(rng, self.rep.complex.dim_v0(), sample::BOUND))
    }

    fn sample_arrow_from(&self, p: &Obj<X>, rng: &mut SampleRng) -> Arrow<X> {
        let a = self.rep.xmod.h1().sample(rng);
        (p.0.clone(), a, p.1.clone(), sample::int_vector(rng, self.rep.complex.dim_v1(), sample::BOUND))
    }

    fn describe(&self, f: &Arrow<X>) -> String {
        let cm = &self.rep.xmod;
        format!(
            "({}, {}, {}, {})",
            cm.h0().describe(&f.0),
            cm.h1().describe(&f.1),
            vector::format(&f.2),
            vector::format(&f.3)
        )
    }
}

/// `H1 x| V1` with `(a,m)(b,n) = (ab, m + Psi0(t(a)) n)`.
pub struct SemidirectH1<X: GroupCrossedModule>(Arc<StrictGroupRep<X>>);

/// `H0 x| V0` with `(x,xi)(y,eta) = (xy, xi + Psi0(x) eta)`.
pub struct SemidirectH0<X: GroupCrossedModule>(Arc<StrictGroupRep<X>>);

impl<X: GroupCrossedModule> Group for SemidirectH1<X> {
    type Elem = (E1<X>, Vector);

    fn identity(&self) -> Self::Elem {
        (self.0.xmod.h1().identity(), vector::zeros(self.0.complex.dim_v1()))
    }

    fn mul(&self, p: &Self::Elem, q: &Self::Elem) -> Self::Elem {
        let cm = &self.0.xmod;
        let ta = self.0.psi0(&cm.boundary(&p.0));
        (cm.h1().mul(&p.0, &q.0), vector::add(&p.1, &ta.b1().mul_vec(&q.1)))
    }

    fn inv(&self, p: &Self::Elem) -> Self::Elem {
        let cm = &self.0.xmod;
        let ai = cm.h1().inv(&p.0);
        let m = vector::neg(&self.0.psi0(&cm.boundary(&ai)).b1().mul_vec(&p.1));
        (ai, m)
    }

    fn sample(&self, rng: &mut SampleRng) -> Self::Elem {
        (self.0.xmod.h1().sample(rng), sample::int_vector(rng, self.0.complex.dim_v1(), sample::BOUND))
    }

    fn describe(&self, p: &Self::Elem) -> String {
        format!("({}, {})", self.0.xmod.h1().describe(&p.0), vector::format(&p.1))
    }
}

impl<X: GroupCrossedModule> Group for SemidirectH0<X> {
    type Elem = (E0<X>, Vector);

    fn identity(&self) -> Self::Elem {
        (self.0.xmod.h0().identity(), vector::zeros(self.0.complex.dim_v0()))
    }

    fn mul(&self, p: &Self::Elem, q: &Self::Elem) -> Self::Elem {
        let h0 = self.0.xmod.h0();
        (h0.mul(&p.0, &q.0), vector::add(&p.1, &self.0.psi0(&p.0).b0().mul_vec(&q.1)))
    }

    fn inv(&self, p: &Self::Elem) -> Self::Elem {
        let xi = self.0.xmod.h0().inv(&p.0);
        let v = vector::neg(&self.0.psi0(&xi).b0().mul_vec(&p.1));
        (xi, v)
    }

    fn sample(&self, rng: &mut SampleRng) -> Self::Elem {
        (self.0.xmod.h0().sample(rng), sample::int_vector(rng, self.0.complex.dim_v0(), sample::BOUND))
    }

    fn describe(&self, p: &Self::Elem) -> String {
        format!("({}, {})", self.0.xmod.h0().describe(&p.0), vector::format(&p.1))
    }
}

/// `(H1 x| V1, H0 x| V0, t x d, Phi)` with
/// `Phi_{(x,xi)}(a,m) = (Phi_x a, Psi0(x) m - Psi0(x) Psi1(a) Psi0(x^{-1}) xi)`.
pub struct SemidirectXMod<X: GroupCrossedModule> {
    h1: SemidirectH1<X>,
    h0: SemidirectH0<X>,
}

impl<X: GroupCrossedModule> GroupCrossedModule for SemidirectXMod<X> {
    type H1 = SemidirectH1<X>;
    type H0 = SemidirectH0<X>;

    fn h1(&self) -> &SemidirectH1<X> {
        &self.h1
    }

    fn h0(&self) -> &SemidirectH0<X> {
        &self.h0
    }

    fn boundary(&self, p: &(E1<X>, Vector)) -> (E0<X>, Vector) {
        let rep = &self.h1.0;
        (rep.xmod.boundary(&p.0), rep.complex.d().mul_vec(&p.1))
    }

    fn act(&self, g: &(E0<X>, Vector), p: &(E1<X>, Vector)) -> (E1<X>, Vector) {
        let rep = &self.h1.0;
        let cm = &rep.xmod;
        let (x, xi) = g;
        let (a, m) = p;
        let px = rep.psi0(x);
        let pxi = rep.psi0(&cm.h0().inv(x));
        let conj = px.b1().mul_vec(&rep.psi1(a).matrix().mul_vec(&pxi.b0().mul_vec(xi)));
        (cm.act(x, a), vector::sub(&px.b1().mul_vec(m), &conj))
    }
}
