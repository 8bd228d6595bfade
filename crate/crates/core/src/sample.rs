//! Seeded random generators for the property checks: small integer
//! matrices, two-term complexes, Lie algebras from a fixed library in random
//! bases, representations up to homotopy and crossed modules.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exactlin::{int, Matrix, Rational, Tensor, Vector};
use crate::gradedend::{EndCrossedModule, TwoTermComplex};
use crate::lie2::{derivation_xmod, CrossedModuleAlg, LieAlgebra};
use crate::rephomotopy::{check_rep, rep_to_morphism, strict_semidirect_with, RepUpToHomotopy};

pub type SampleRng = ChaCha8Rng;

/// Default entry bound.
pub const BOUND: i64 = 3;
/// Default dimension cap.
pub const MAX_DIM: usize = 3;

pub fn rng(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn entry(rng: &mut SampleRng, bound: i64) -> Rational {
    int(rng.gen_range(-bound..=bound))
}

pub fn int_vector(rng: &mut SampleRng, n: usize, bound: i64) -> Vector {
    (0..n).map(|_| entry(rng, bound)).collect()
}

pub fn int_matrix(rng: &mut SampleRng, rows: usize, cols: usize, bound: i64) -> Matrix {
    Matrix::from_fn(rows, cols, |_, _| entry(rng, bound))
}

/// Random integer matrix conditioned on being invertible.
pub fn invertible(rng: &mut SampleRng, n: usize, bound: i64) -> Matrix {
    loop {
        let m = int_matrix(rng, n, n, bound);
        if m.rank() == n {
            return m;
        }
    }
}

/// `d = P Q` through a random intermediate rank, so low-rank differentials
/// show up often.
pub fn complex(rng: &mut SampleRng, max_dim: usize) -> TwoTermComplex {
    let n1 = rng.gen_range(0..=max_dim);
    let n0 = rng.gen_range(0..=max_dim);
    let r = rng.gen_range(0..=n0.min(n1));
    let d = &int_matrix(rng, n0, r, 2) * &int_matrix(rng, r, n1, 2);
    TwoTermComplex::with_dims(n1, n0, d).expect("shapes agree")
}

/// Names accepted by [`library_algebra`].
pub const LIBRARY: [&str; 8] = ["abelian1", "abelian2", "abelian3", "aff2", "heisenberg", "so3", "sl2", "r3"];

/// Standard small Lie algebras in their textbook bases.
pub fn library_algebra(name: &str) -> Option<LieAlgebra> {
    let g = match name {
        "abelian1" => LieAlgebra::abelian(1),
        "abelian2" => LieAlgebra::abelian(2),
        "abelian3" => LieAlgebra::abelian(3),
        "aff2" => LieAlgebra::from_constants(2, &[(0, 1, 1, 1)]).ok()?,
        "heisenberg" => LieAlgebra::from_constants(3, &[(0, 1, 2, 1)]).ok()?,
        "so3" => LieAlgebra::from_constants(3, &[(0, 1, 2, 1), (1, 2, 0, 1), (2, 0, 1, 1)]).ok()?,
        "sl2" => LieAlgebra::from_constants(3, &[(0, 1, 1, 2), (0, 2, 2, -2), (1, 2, 0, 1)]).ok()?,
        "r3" => LieAlgebra::from_constants(3, &[(0, 1, 1, 1), (0, 2, 1, 1), (0, 2, 2, 1)]).ok()?,
        _ => return None,
    };
    Some(g)
}

/// A library algebra of dimension at most `max_dim` in a random basis.
pub fn lie_algebra(rng: &mut SampleRng, max_dim: usize) -> LieAlgebra {
    let candidates: Vec<LieAlgebra> =
        LIBRARY.iter().filter_map(|n| library_algebra(n)).filter(|g| g.dim() <= max_dim.max(1)).collect();
    let g = candidates.choose(rng).expect("library is nonempty").clone();
    let p = invertible(rng, g.dim(), 1);
    g.change_basis(&p).expect("p is invertible")
}

/// A skew bracket on `Q^n`: half the time a library Lie algebra of that
/// dimension in a random basis, otherwise random skew constants.
pub fn skew_bracket(rng: &mut SampleRng, n: usize) -> Tensor {
    let lie: Vec<LieAlgebra> = LIBRARY.iter().filter_map(|s| library_algebra(s)).filter(|g| g.dim() == n).collect();
    if !lie.is_empty() && rng.gen_bool(0.5) {
        let g = lie.choose(rng).expect("nonempty").clone();
        let p = invertible(rng, n, 1);
        return g.change_basis(&p).expect("invertible").tensor().clone();
    }
    let mut t = Tensor::zeros(&[n, n], n);
    for i in 0..n {
        for j in i + 1..n {
            let v = int_vector(rng, n, BOUND);
            let w: Vector = v.iter().map(|x| -x).collect();
            t.set(&[i, j], &v);
            t.set(&[j, i], &w);
        }
    }
    t
}

fn tensor_of(k: usize, n_in: usize, n_out: usize, m: impl Fn(usize) -> Matrix) -> Tensor {
    Tensor::from_fn(&[k, n_in], n_out, |i| m(i[0]).col(i[1]))
}

/// A strict representation `W (x) Q^{a0} <- W (x) Q^{a1}` with `d = I (x) C`,
/// `W` trivial or adjoint, then a random gauge transformation by
/// `h: g -> Hom(V0, V1)` and a random change of basis in `V0` and `V1`.
///
/// The gauge transformation
/// `mu' = mu + delta h`,
/// `nu'(X,Y) = h[X,Y] - [mu X, h Y] + [mu Y, h X] - [h X, h Y]`
/// preserves the representation conditions; the result is still filtered
/// through [`check_rep`] and falls back to the ungauged data if needed.
pub fn rep(rng: &mut SampleRng, g: &LieAlgebra, max_dim: usize) -> RepUpToHomotopy {
    let k = g.dim();
    let adjoint = k <= max_dim && rng.gen_bool(0.6);
    let w = if adjoint { k } else { 1 };
    let cap = max_dim / w;
    let (a0, a1) = (rng.gen_range(0..=cap), rng.gen_range(0..=cap));
    let (n0, n1) = (w * a0, w * a1);
    let c = int_matrix(rng, a0, a1, 2);
    let d = Matrix::identity(w).kron(&c);
    let act = |i: usize, a: usize| {
        if adjoint {
            g.ad(&crate::exactlin::vector::unit(k, i)).kron(&Matrix::identity(a))
        } else {
            Matrix::zeros(a, a)
        }
    };
    let mu0: Vec<Matrix> = (0..k).map(|i| act(i, a0)).collect();
    let mu1: Vec<Matrix> = (0..k).map(|i| act(i, a1)).collect();
    let complex = TwoTermComplex::with_dims(n1, n0, d.clone()).expect("shapes agree");
    let base = RepUpToHomotopy::from_matrices(g.clone(), complex, &mu0, &mu1, |_, _| Matrix::zeros(n1, n0))
        .expect("strict data has the right shapes");

    let h: Vec<Matrix> = (0..k).map(|_| int_matrix(rng, n1, n0, 1)).collect();
    let h_of = |x: &[Rational]| {
        x.iter().zip(&h).fold(Matrix::zeros(n1, n0), |acc, (c, m)| &acc + &m.scale(c))
    };
    let k1 = |a: &Matrix, b: &Matrix| &(&(a * &d) * b) - &(&(b * &d) * a);
    let mu0g: Vec<Matrix> = (0..k).map(|i| &mu0[i] + &(&d * &h[i])).collect();
    let mu1g: Vec<Matrix> = (0..k).map(|i| &mu1[i] + &(&h[i] * &d)).collect();
    let e = |i| crate::exactlin::vector::unit(k, i);
    let nu = |i: usize, j: usize| {
        let (hx, hy) = (&h[i], &h[j]);
        let bracket_mu_h = |x: usize, hy: &Matrix| &(&mu1[x] * hy) - &(hy * &mu0[x]);
        let t = &(&h_of(&g.bracket(&e(i), &e(j))) - &bracket_mu_h(i, hy)) + &bracket_mu_h(j, hx);
        &t - &k1(hx, hy)
    };
    let gauged = RepUpToHomotopy::from_matrices(g.clone(), base.complex().clone(), &mu0g, &mu1g, nu)
        .ok()
        .filter(|r| check_rep(r).passed())
        .unwrap_or(base);

    let p0 = invertible(rng, n0, 1);
    let p1 = invertible(rng, n1, 1);
    let (q0, q1) = (p0.invert().expect("invertible"), p1.invert().expect("invertible"));
    let d2 = &(&q0 * gauged.complex().d()) * &p1;
    let complex = TwoTermComplex::with_dims(n1, n0, d2).expect("shapes agree");
    let e = |i| crate::exactlin::vector::unit(k, i);
    let m0 = tensor_of(k, n0, n0, |i| &(&q0 * &gauged.mu0(&e(i))) * &p0);
    let m1 = tensor_of(k, n1, n1, |i| &(&q1 * &gauged.mu1(&e(i))) * &p1);
    let nu = Tensor::from_fn(&[k, k, n0], n1, |i| (&(&q1 * &gauged.nu(&e(i[0]), &e(i[1]))) * &p0).col(i[2]));
    RepUpToHomotopy::new(g.clone(), complex, m0, m1, nu).expect("conjugation preserves shapes")
}

/// A Lie algebra and a representation of it, both random.
pub fn lie_and_rep(rng: &mut SampleRng, max_dim: usize) -> RepUpToHomotopy {
    let g = lie_algebra(rng, max_dim);
    rep(rng, &g, max_dim)
}

/// One of `End(V)`, `Der(k)`, or a strict semidirect product `g x| V`.
pub fn crossed_module(rng: &mut SampleRng, max_dim: usize) -> CrossedModuleAlg {
    match rng.gen_range(0..3) {
        0 => EndCrossedModule::new(&complex(rng, max_dim)).xmod().clone(),
        1 => derivation_xmod(&lie_algebra(rng, max_dim)),
        _ => {
            let g = lie_algebra(rng, max_dim);
            let r = strict_rep(rng, &g, max_dim);
            let (end, f) = rep_to_morphism(&r).expect("strict reps are valid");
            let psi1 = Matrix::zeros(end.k1_dim(), 0);
            strict_semidirect_with(&CrossedModuleAlg::trivial(&g), f.f0(), &psi1, &end)
                .expect("an honest action is a strict morphism")
        }
    }
}

/// A representation with `nu = 0`.
pub fn strict_rep(rng: &mut SampleRng, g: &LieAlgebra, max_dim: usize) -> RepUpToHomotopy {
    loop {
        let r = rep(rng, g, max_dim);
        if r.nu_tensor().is_zero() {
            return r;
        }
    }
}
