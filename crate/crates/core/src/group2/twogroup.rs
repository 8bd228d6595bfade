use crate::error::{Error, Result};
use crate::report::Report;
use crate::sample::{self, SampleRng};

use super::{Group, GroupCrossedModule};

/// A strict 2-group: objects and arrows with source, target, vertical and
/// horizontal composition, units and horizontal inverses.
pub trait StrictTwoGroup {
    type Obj: Clone + PartialEq + std::fmt::Debug;
    type Arrow: Clone + PartialEq + std::fmt::Debug;
    fn source(&self, f: &Self::Arrow) -> Self::Obj;
    fn target(&self, f: &Self::Arrow) -> Self::Obj;
    /// `later . earlier`; requires `source(later) = target(earlier)`.
    fn vertical(&self, later: &Self::Arrow, earlier: &Self::Arrow) -> Result<Self::Arrow>;
    fn horizontal(&self, f: &Self::Arrow, g: &Self::Arrow) -> Self::Arrow;
    fn obj_mul(&self, x: &Self::Obj, y: &Self::Obj) -> Self::Obj;
    /// Vertical identity at an object.
    fn identity_arrow(&self, x: &Self::Obj) -> Self::Arrow;
    fn unit_obj(&self) -> Self::Obj;
    fn unit_arrow(&self) -> Self::Arrow;
    fn inverse(&self, f: &Self::Arrow) -> Self::Arrow;
    fn sample_obj(&self, rng: &mut SampleRng) -> Self::Obj;
    /// A random arrow with the given source.
    fn sample_arrow_from(&self, x: &Self::Obj, rng: &mut SampleRng) -> Self::Arrow;
    fn describe(&self, f: &Self::Arrow) -> String;

    fn sample_arrow(&self, rng: &mut SampleRng) -> Self::Arrow {
        let x = self.sample_obj(rng);
        self.sample_arrow_from(&x, rng)
    }
}

/// Objects `H0`, arrows `H0 x| H1` with `s(g,h) = g`, `t(g,h) = t(h) g`,
/// `(g', h') .v (g, h) = (g, h' h)` and `(g,h) .h (g',h') = (g g', h Phi_g h')`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XModTwoGroup<X> {
    pub xmod: X,
}

pub fn two_group_from_xmod<X: GroupCrossedModule>(x: X) -> XModTwoGroup<X> {
    XModTwoGroup { xmod: x }
}

type E0<X> = <<X as GroupCrossedModule>::H0 as Group>::Elem;
type E1<X> = <<X as GroupCrossedModule>::H1 as Group>::Elem;

impl<X: GroupCrossedModule> StrictTwoGroup for XModTwoGroup<X> {
    type Obj = E0<X>;
    type Arrow = (E0<X>, E1<X>);

    fn source(&self, f: &Self::Arrow) -> E0<X> {
        f.0.clone()
    }

    fn target(&self, f: &Self::Arrow) -> E0<X> {
        self.xmod.h0().mul(&self.xmod.boundary(&f.1), &f.0)
    }

    fn vertical(&self, later: &Self::Arrow, earlier: &Self::Arrow) -> Result<Self::Arrow> {
        if later.0 != self.target(earlier) {
            return Err(Error::NotComposable(format!(
                "source {} is not target {}",
                self.xmod.h0().describe(&later.0),
                self.xmod.h0().describe(&self.target(earlier))
            )));
        }
        Ok((earlier.0.clone(), self.xmod.h1().mul(&later.1, &earlier.1)))
    }

    fn horizontal(&self, f: &Self::Arrow, g: &Self::Arrow) -> Self::Arrow {
        let (h0, h1) = (self.xmod.h0(), self.xmod.h1());
        (h0.mul(&f.0, &g.0), h1.mul(&f.1, &self.xmod.act(&f.0, &g.1)))
    }

    fn obj_mul(&self, x: &E0<X>, y: &E0<X>) -> E0<X> {
        self.xmod.h0().mul(x, y)
    }

    fn identity_arrow(&self, x: &E0<X>) -> Self::Arrow {
        (x.clone(), self.xmod.h1().identity())
    }

    fn unit_obj(&self) -> E0<X> {
        self.xmod.h0().identity()
    }

    fn unit_arrow(&self) -> Self::Arrow {
        (self.xmod.h0().identity(), self.xmod.h1().identity())
    }

    fn inverse(&self, f: &Self::Arrow) -> Self::Arrow {
        let (h0, h1) = (self.xmod.h0(), self.xmod.h1());
        let gi = h0.inv(&f.0);
        let a = self.xmod.act(&gi, &h1.inv(&f.1));
        (gi, a)
    }

    fn sample_obj(&self, rng: &mut SampleRng) -> E0<X> {
        self.xmod.h0().sample(rng)
    }

    fn sample_arrow_from(&self, x: &E0<X>, rng: &mut SampleRng) -> Self::Arrow {
        (x.clone(), self.xmod.h1().sample(rng))
    }

    fn describe(&self, f: &Self::Arrow) -> String {
        format!("({}, {})", self.xmod.h0().describe(&f.0), self.xmod.h1().describe(&f.1))
    }
}

/// Sampled 2-group laws: `s`, `t` are morphisms for `.h`, `.h` is
/// associative with unit and inverses, vertical identities, and the
/// interchange law `(g . f) .h (g' . f') = (g .h g') . (f .h f')`.
pub fn check_two_group<T: StrictTwoGroup>(tg: &T, samples: usize, seed: u64) -> Report {
    let mut r = Report::sampled("strict 2-group", seed, samples);
    let rng = &mut sample::rng(seed);
    let find = |rng: &mut SampleRng, f: &mut dyn FnMut(&mut SampleRng) -> Option<String>| (0..samples).find_map(|_| f(rng));

    let st = find(rng, &mut |rng| {
        let (f, g) = (tg.sample_arrow(rng), tg.sample_arrow(rng));
        let fg = tg.horizontal(&f, &g);
        let ok = tg.source(&fg) == tg.obj_mul(&tg.source(&f), &tg.source(&g))
            && tg.target(&fg) == tg.obj_mul(&tg.target(&f), &tg.target(&g));
        (!ok).then(|| format!("{} , {}", tg.describe(&f), tg.describe(&g)))
    });
    r.record("source-target-morphisms", "s, t respect horizontal multiplication", st);

    let assoc = find(rng, &mut |rng| {
        let (f, g, h) = (tg.sample_arrow(rng), tg.sample_arrow(rng), tg.sample_arrow(rng));
        let lhs = tg.horizontal(&tg.horizontal(&f, &g), &h);
        let rhs = tg.horizontal(&f, &tg.horizontal(&g, &h));
        (lhs != rhs).then(|| format!("{}, {}, {}", tg.describe(&f), tg.describe(&g), tg.describe(&h)))
    });
    r.record("horizontal-associative", "(f g) h = f (g h)", assoc);

    let unit = find(rng, &mut |rng| {
        let f = tg.sample_arrow(rng);
        let u = tg.unit_arrow();
        let ok = tg.horizontal(&u, &f) == f && tg.horizontal(&f, &u) == f && tg.obj_mul(&tg.unit_obj(), &tg.source(&f)) == tg.source(&f);
        (!ok).then(|| tg.describe(&f))
    });
    r.record("horizontal-unit", "1 f = f = f 1", unit);

    let inverse = find(rng, &mut |rng| {
        let f = tg.sample_arrow(rng);
        let fi = tg.inverse(&f);
        let u = tg.unit_arrow();
        (tg.horizontal(&f, &fi) != u || tg.horizontal(&fi, &f) != u).then(|| tg.describe(&f))
    });
    r.record("horizontal-inverse", "f f^{-1} = 1 = f^{-1} f", inverse);

    let vid = find(rng, &mut |rng| {
        let f = tg.sample_arrow(rng);
        let a = tg.vertical(&tg.identity_arrow(&tg.target(&f)), &f);
        let b = tg.vertical(&f, &tg.identity_arrow(&tg.source(&f)));
        (a.as_ref() != Ok(&f) || b.as_ref() != Ok(&f)).then(|| tg.describe(&f))
    });
    r.record("vertical-identity", "1_t f = f = f 1_s", vid);

    let vassoc = find(rng, &mut |rng| {
        let f = tg.sample_arrow(rng);
        let g = tg.sample_arrow_from(&tg.target(&f), rng);
        let h = tg.sample_arrow_from(&tg.target(&g), rng);
        let lhs = tg.vertical(&h, &tg.vertical(&g, &f).ok()?).ok();
        let rhs = tg.vertical(&tg.vertical(&h, &g).ok()?, &f).ok();
        (lhs.is_none() || lhs != rhs).then(|| format!("{}, {}, {}", tg.describe(&f), tg.describe(&g), tg.describe(&h)))
    });
    r.record("vertical-associative", "(h g) f = h (g f)", vassoc);

    let interchange = find(rng, &mut |rng| {
        let f = tg.sample_arrow(rng);
        let g = tg.sample_arrow_from(&tg.target(&f), rng);
        let f2 = tg.sample_arrow(rng);
        let g2 = tg.sample_arrow_from(&tg.target(&f2), rng);
        let lhs = tg.horizontal(&tg.vertical(&g, &f).ok()?, &tg.vertical(&g2, &f2).ok()?);
        let rhs = tg.vertical(&tg.horizontal(&g, &g2), &tg.horizontal(&f, &f2));
        (rhs.as_ref() != Ok(&lhs)).then(|| {
            format!("f={}, g={}, f'={}, g'={}", tg.describe(&f), tg.describe(&g), tg.describe(&f2), tg.describe(&g2))
        })
    });
    r.record("interchange", "(g.f) h (g'.f') = (g h g').(f h f')", interchange);
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::Matrix;
    use crate::gradedend::TwoTermComplex;
    use crate::group2::{AutV, GlGroup, TrivialXMod};

    #[test]
    fn autv_two_group_laws() {
        let c = TwoTermComplex::new(Matrix::from_ints(&[&[1, 0], &[2, 1]]));
        let tg = two_group_from_xmod(AutV::new(&c));
        let r = check_two_group(&tg, 40, 9);
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn trivial_two_group() {
        let tg = two_group_from_xmod(TrivialXMod { g: GlGroup { n: 2 } });
        assert!(check_two_group(&tg, 20, 1).passed());
    }

    #[test]
    fn mismatched_vertical_is_refused() {
        let c = TwoTermComplex::new(Matrix::from_ints(&[&[1]]));
        let tg = two_group_from_xmod(AutV::new(&c));
        let mut rng = sample::rng(4);
        let f = tg.sample_arrow(&mut rng);
        let mut g = tg.sample_arrow(&mut rng);
        while g.0 == tg.target(&f) {
            g = tg.sample_arrow(&mut rng);
        }
        assert!(matches!(tg.vertical(&g, &f), Err(Error::NotComposable(_))));
        let id = tg.identity_arrow(&tg.target(&f));
        assert_eq!(tg.vertical(&id, &f).unwrap(), f);
    }
}
