use num_traits::{One, Zero};

use crate::error::{shape, Error, Result};
use crate::exactlin::vector::{self, Vector};
use crate::exactlin::{Rational, Tensor};
use crate::gradedend::TwoTermComplex;
use crate::report::Report;

use super::{basis_label, show, LieAlgebra};

/// 2-term L-infinity algebra `V1 --d--> V0` with brackets
/// `l2: V0 x V0 -> V0`, `l2: V0 x V1 -> V1` and `l3: V0^3 -> V1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lie2Algebra {
    complex: TwoTermComplex,
    l2_00: Tensor,
    l2_01: Tensor,
    l3: Tensor,
}

/// Homogeneous element. Degrees outside `{0, 1}` carry no coordinates and
/// stand for zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graded {
    pub degree: i32,
    pub coords: Vector,
}

impl Graded {
    pub fn new(degree: i32, coords: Vector) -> Self {
        Self { degree, coords }
    }

    pub fn is_zero(&self) -> bool {
        vector::is_zero(&self.coords)
    }
}

impl Lie2Algebra {
    pub fn new(complex: TwoTermComplex, l2_00: Tensor, l2_01: Tensor, l3: Tensor) -> Result<Self> {
        let (n0, n1) = (complex.dim_v0(), complex.dim_v1());
        let expect = |t: &Tensor, dims: &[usize], out: usize, name: &str| {
            if t.dims() != dims || t.out_dim() != out {
                Err(shape(format!("{name} must be {dims:?} -> {out}, got {:?} -> {}", t.dims(), t.out_dim())))
            } else {
                Ok(())
            }
        };
        expect(&l2_00, &[n0, n0], n0, "l2_00")?;
        expect(&l2_01, &[n0, n1], n1, "l2_01")?;
        expect(&l3, &[n0, n0, n0], n1, "l3")?;
        if let Some(idx) = l2_00.antisymmetry_violation(0, 1) {
            return Err(Error::NotAntisymmetric(format!("l2_00 at {}", basis_label(&idx))));
        }
        for (a, b) in [(0, 1), (1, 2)] {
            if let Some(idx) = l3.antisymmetry_violation(a, b) {
                return Err(Error::NotAntisymmetric(format!("l3 at {}", basis_label(&idx))));
            }
        }
        Ok(Self { complex, l2_00, l2_01, l3 })
    }

    pub fn strict(complex: TwoTermComplex, l2_00: Tensor, l2_01: Tensor) -> Result<Self> {
        let (n0, n1) = (complex.dim_v0(), complex.dim_v1());
        Self::new(complex, l2_00, l2_01, Tensor::zeros(&[n0, n0, n0], n1))
    }

    /// A Lie algebra concentrated in degree 0.
    pub fn from_lie_algebra(g: &LieAlgebra) -> Self {
        let n = g.dim();
        Self {
            complex: TwoTermComplex::zero(0, n),
            l2_00: g.tensor().clone(),
            l2_01: Tensor::zeros(&[n, 0], 0),
            l3: Tensor::zeros(&[n, n, n], 0),
        }
    }

    pub fn complex(&self) -> &TwoTermComplex {
        &self.complex
    }

    pub fn dim0(&self) -> usize {
        self.complex.dim_v0()
    }

    pub fn dim1(&self) -> usize {
        self.complex.dim_v1()
    }

    pub fn l2_00(&self) -> &Tensor {
        &self.l2_00
    }

    pub fn l2_01(&self) -> &Tensor {
        &self.l2_01
    }

    pub fn l3(&self) -> &Tensor {
        &self.l3
    }

    pub fn is_strict(&self) -> bool {
        self.l3.is_zero()
    }

    pub fn d(&self, m: &[Rational]) -> Vector {
        self.complex.d().mul_vec(m)
    }

    pub fn bracket00(&self, x: &[Rational], y: &[Rational]) -> Vector {
        self.l2_00.eval(&[x, y])
    }

    pub fn bracket01(&self, x: &[Rational], m: &[Rational]) -> Vector {
        self.l2_01.eval(&[x, m])
    }

    pub fn bracket3(&self, x: &[Rational], y: &[Rational], z: &[Rational]) -> Vector {
        self.l3.eval(&[x, y, z])
    }

    fn dim_of(&self, degree: i32) -> Option<usize> {
        match degree {
            0 => Some(self.dim0()),
            1 => Some(self.dim1()),
            _ => None,
        }
    }

    /// `l_k` on homogeneous arguments; `None` when the value lies in a degree
    /// the algebra does not have (so is zero).
    fn l(&self, args: &[&Graded]) -> Option<Graded> {
        let out_degree = args.iter().map(|a| a.degree).sum::<i32>() + args.len() as i32 - 2;
        self.dim_of(out_degree)?;
        let v = match args {
            [m] => self.d(&m.coords),
            [x, y] => match (x.degree, y.degree) {
                (0, 0) => self.bracket00(&x.coords, &y.coords),
                (0, 1) => self.bracket01(&x.coords, &y.coords),
                (1, 0) => vector::neg(&self.bracket01(&y.coords, &x.coords)),
                _ => unreachable!("output degree out of range"),
            },
            [x, y, z] => self.bracket3(&x.coords, &y.coords, &z.coords),
            _ => unreachable!("l_k for k >= 4 has output degree >= 2"),
        };
        Some(Graded::new(out_degree, v))
    }
}

/// Left-hand side of the L-infinity relation on `args` (n = `args.len()`):
///
/// `sum_{i+j=n+1} (-1)^{i(j-1)} sum_sigma chi(sigma) l_j(l_i(x_sigma(1..i)), x_sigma(i+1..n))`
///
/// over `(i, n-i)`-unshuffles, with `chi` the antisymmetric Koszul sign.
/// The result has degree `sum |x| + n - 3`; for `n >= 5` that degree is at
/// least 2, so every term, and the relation, vanishes.
pub fn linfty_defect(a: &Lie2Algebra, args: &[Graded]) -> Result<Graded> {
    let n = args.len();
    if n == 0 {
        return Err(shape("the L-infinity relation needs at least one argument"));
    }
    for (index, x) in args.iter().enumerate() {
        let Some(dim) = a.dim_of(x.degree) else {
            return Err(Error::BadGrading { index, degree: x.degree });
        };
        if x.coords.len() != dim {
            return Err(shape(format!("argument {index} has {} coordinates, expected {dim}", x.coords.len())));
        }
    }
    let degree = args.iter().map(|x| x.degree).sum::<i32>() + n as i32 - 3;
    let mut total = vector::zeros(a.dim_of(degree).unwrap_or(0));
    for i in 1..=n {
        let j = n + 1 - i;
        let outer = if (i * (j - 1)).is_multiple_of(2) { Rational::one() } else { -Rational::one() };
        for subset in combinations(n, i) {
            let mut in_s = vec![false; n];
            for &s in &subset {
                in_s[s] = true;
            }
            let rest: Vec<usize> = (0..n).filter(|&p| !in_s[p]).collect();
            // inversions: q in the first block, p < q in the second
            let mut sign = outer.clone();
            for &q in &subset {
                for &p in rest.iter().take_while(|&&p| p < q) {
                    if (args[p].degree * args[q].degree) % 2 == 0 {
                        sign = -sign;
                    }
                }
            }
            let inner_args: Vec<&Graded> = subset.iter().map(|&s| &args[s]).collect();
            let Some(inner) = a.l(&inner_args) else { continue };
            let mut outer_args = vec![&inner];
            outer_args.extend(rest.iter().map(|&p| &args[p]));
            if let Some(term) = a.l(&outer_args) {
                debug_assert_eq!(term.degree, degree);
                vector::axpy(&mut total, &sign, &term.coords);
            }
        }
    }
    Ok(Graded::new(degree, total))
}

/// Strictly increasing `k`-subsets of `0..n`.
pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for s in start..n {
            cur.push(s);
            go(s + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

/// Nondecreasing `k`-multisets of `0..n`.
fn multisets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for s in start..n {
            cur.push(s);
            go(s, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

/// First basis tuple where the `n`-ary relation fails.
///
/// The relation is graded antisymmetric in its arguments, so by default only
/// degree-0 arguments in strictly increasing order followed by degree-1
/// arguments in nondecreasing order are evaluated, and only when the
/// relation's degree is 0 or 1. `exhaustive` evaluates every degree pattern
/// and every ordered tuple instead.
pub fn linfty_violation(a: &Lie2Algebra, n: usize, exhaustive: bool) -> Option<String> {
    let (n0, n1) = (a.dim0(), a.dim1());
    let basis = |deg: i32, i: usize| Graded::new(deg, vector::unit(if deg == 0 { n0 } else { n1 }, i));
    let describe = |args: &[Graded], v: &Graded| {
        let parts: Vec<String> = args
            .iter()
            .map(|g| {
                let i = g.coords.iter().position(|x| !x.is_zero()).unwrap_or(0);
                format!("V{}:e{i}", g.degree)
            })
            .collect();
        format!("n={n} on ({}) gives {} in degree {}", parts.join(", "), show(&v.coords), v.degree)
    };
    for m in 0..=n {
        let degree = m as i32 + n as i32 - 3;
        if !exhaustive && !(0..=1).contains(&degree) {
            continue;
        }
        if exhaustive {
            // all positions of the m degree-1 arguments, all index tuples
            for ones in combinations(n, m) {
                let degs: Vec<i32> = (0..n).map(|p| i32::from(ones.contains(&p))).collect();
                let dims: Vec<usize> = degs.iter().map(|&d| if d == 0 { n0 } else { n1 }).collect();
                let count: usize = dims.iter().product();
                let mut idx = vec![0usize; n];
                for _ in 0..count {
                    let args: Vec<Graded> = idx.iter().zip(&degs).map(|(&i, &d)| basis(d, i)).collect();
                    let v = linfty_defect(a, &args).expect("well-graded basis arguments");
                    if !v.is_zero() {
                        return Some(describe(&args, &v));
                    }
                    crate::exactlin::advance_index(&mut idx, &dims);
                }
            }
            continue;
        }
        for zeros in combinations(n0, n - m) {
            for ones in multisets(n1, m) {
                let args: Vec<Graded> =
                    zeros.iter().map(|&i| basis(0, i)).chain(ones.iter().map(|&i| basis(1, i))).collect();
                let v = linfty_defect(a, &args).expect("well-graded basis arguments");
                if !v.is_zero() {
                    return Some(describe(&args, &v));
                }
            }
        }
    }
    None
}

/// The L-infinity relations for `n = 1..4` on basis tuples.
pub fn check_lie2(a: &Lie2Algebra) -> Report {
    let mut r = Report::new("Lie 2-algebra");
    let names = [
        "d is a differential",
        "d is a derivation of l2",
        "Jacobi up to d l3",
        "l3 coherence",
    ];
    for (k, anchor) in names.iter().enumerate() {
        let n = k + 1;
        r.record(format!("linfty-n{n}"), format!("L-infinity relation, {n} arguments: {anchor}"), linfty_violation(a, n, false));
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::{int, Matrix};

/// Every `k`-tuple of `0..n`.
pub(crate) fn tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|t: Vec<usize>| {
                (0..n).map(move |i| {
                    let mut u = t.clone();
                    u.push(i);
                    u
                })
            })
            .collect();
    }
    out
}


    fn g(deg: i32, v: &[i64]) -> Graded {
        Graded::new(deg, v.iter().map(|&x| int(x)).collect())
    }

    // V1 = Q --(1,0)^T--> V0 = Q^2 with [e0,e1] = -e0, [e1,m] = m, [e0,m] = 0
    // (the 2-dimensional nonabelian algebra acting on its derived ideal)
    fn small() -> Lie2Algebra {
        let c = TwoTermComplex::new(Matrix::from_ints(&[&[1], &[0]]));
        let b00 = Tensor::from_fn(&[2, 2], 2, |i| match (i[0], i[1]) {
            (0, 1) => vec![int(-1), int(0)],
            (1, 0) => vec![int(1), int(0)],
            _ => vector::zeros(2),
        });
        let b01 = Tensor::from_fn(&[2, 1], 1, |i| if i[0] == 1 { vec![int(1)] } else { vec![int(0)] });
        Lie2Algebra::strict(c, b00, b01).unwrap()
    }

    #[test]
    fn small_example_is_a_dgla() {
        assert!(check_lie2(&small()).passed());
    }

    #[test]
    fn n2_is_derivation_identity() {
        // perturb l2_01 so d is no longer equivariant
        let a = small();
        let bad01 = Tensor::from_fn(&[2, 1], 1, |_| vec![int(1)]);
        let b = Lie2Algebra::strict(a.complex().clone(), a.l2_00().clone(), bad01).unwrap();
        let r = check_lie2(&b);
        assert!(!r.ok("linfty-n2"));
        // unshuffle expansion for (x, m) reduces to d l2(x,m) - l2(x, dm)
        let x = g(0, &[2, 3]);
        let m = g(1, &[5]);
        let v = linfty_defect(&b, &[x.clone(), m.clone()]).unwrap();
        let hand = vector::sub(&b.d(&b.bracket01(&x.coords, &m.coords)), &b.bracket00(&x.coords, &b.d(&m.coords)));
        assert_eq!(v.degree, 0);
        assert!(!vector::is_zero(&hand));
        assert_eq!(v.coords, hand);
    }

    #[test]
    fn bad_grading_is_rejected() {
        let a = small();
        assert_eq!(linfty_defect(&a, &[g(2, &[1])]), Err(Error::BadGrading { index: 0, degree: 2 }));
    }

    #[test]
    fn five_argument_relation_vanishes() {
        let a = small();
        for degs in tuples(2, 5) {
            let args: Vec<Graded> =
                degs.iter().map(|&d| if d == 0 { g(0, &[1, -2]) } else { g(1, &[3]) }).collect();
            let v = linfty_defect(&a, &args).unwrap();
            assert!(v.degree >= 2 && v.coords.is_empty());
        }
    }

    #[test]
    fn reduced_tuples_agree_with_exhaustive() {
        let a = small();
        for n in 1..=4 {
            assert_eq!(linfty_violation(&a, n, false).is_none(), linfty_violation(&a, n, true).is_none());
        }
    }
}
