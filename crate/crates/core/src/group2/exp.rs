//! The exponential bridge `k1 -> K1`: for `A` in `Hom(V0, V1)`,
//! `M = A + A d A / 2! + A d A d A / 3! + ...` satisfies
//! `int delta(M) = exp(delta A) = (exp(d A), exp(A d))`.

use crate::exactlin::{FloatMatrix, Matrix, Rational};
use crate::gradedend::TwoTermComplex;

/// `phi1(Z) = (e^Z - I) / Z`, read off the top-right block of
/// `exp [[Z, I], [0, 0]]`.
pub fn phi1(z: &FloatMatrix) -> FloatMatrix {
    let n = z.rows();
    let big = FloatMatrix::from_fn(2 * n, 2 * n, |i, j| match (i < n, j < n) {
        (true, true) => z.get(i, j),
        (true, false) if j - n == i => 1.0,
        _ => 0.0,
    });
    big.expm().block(0, n, n, n)
}

/// `M = A phi1(d A)` in floating point.
pub fn exp_bridge_float(d: &FloatMatrix, a: &FloatMatrix) -> FloatMatrix {
    a * &phi1(&(d * a))
}

/// `M = A phi1(d A)` for exact `A`, evaluated in floating point.
pub fn exp_bridge(c: &TwoTermComplex, a: &Matrix) -> FloatMatrix {
    exp_bridge_float(&FloatMatrix::from_exact(c.d()), &FloatMatrix::from_exact(a))
}

/// `(I + d M, I + M d)` in floating point.
pub fn int_delta_float(d: &FloatMatrix, m: &FloatMatrix) -> (FloatMatrix, FloatMatrix) {
    let (n0, n1) = (d.rows(), d.cols());
    (&FloatMatrix::identity(n0) + &(d * m), &FloatMatrix::identity(n1) + &(m * d))
}

/// `(exp(d A), exp(A d))`, the exponential of the degree 0 map `delta A`.
pub fn exp_delta(d: &FloatMatrix, a: &FloatMatrix) -> (FloatMatrix, FloatMatrix) {
    ((d * a).expm(), (a * d).expm())
}

fn factorial_inv(k: usize) -> Rational {
    let f = (1..=k as i64).fold(num_bigint::BigInt::from(1), |acc, i| acc * i);
    Rational::new(1.into(), f)
}

/// `exp(N)` as the finite series, when `N` is nilpotent.
pub fn exp_nilpotent(n: &Matrix) -> Option<Matrix> {
    let k = n.rows();
    let mut sum = Matrix::identity(k);
    let mut power = Matrix::identity(k);
    for i in 1..=k {
        power = &power * n;
        sum = &sum + &power.scale(&factorial_inv(i));
    }
    power.is_zero().then_some(sum)
}

/// Exact `M = sum_k A (d A)^k / (k+1)!` when `d A` is nilpotent.
pub fn exp_bridge_exact(c: &TwoTermComplex, a: &Matrix) -> Option<Matrix> {
    let z = c.d() * a;
    let n = z.rows();
    let mut power = Matrix::identity(n);
    let mut sum = Matrix::zeros(a.rows(), a.cols());
    for k in 0..=n {
        if power.is_zero() {
            return Some(sum);
        }
        sum = &sum + &(a * &power).scale(&factorial_inv(k + 1));
        power = &power * &z;
    }
    power.is_zero().then_some(sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::{int, rat};
    use crate::group2::{int_delta, K1Element};
    use proptest::prelude::*;

    #[test]
    fn zero_maps_to_zero() {
        let c = TwoTermComplex::new(Matrix::from_ints(&[&[1, 0], &[2, 1]]));
        assert!(exp_bridge(&c, &Matrix::zeros(2, 2)).is_zero());
        assert_eq!(exp_bridge_exact(&c, &Matrix::zeros(2, 2)), Some(Matrix::zeros(2, 2)));
    }

    #[test]
    fn scalar_case_is_expm1() {
        let c = TwoTermComplex::new(Matrix::from_ints(&[&[1]]));
        for a in [-2.0, -0.5, 0.3, 1.0, 2.0] {
            let m = exp_bridge_float(&FloatMatrix::from_exact(c.d()), &FloatMatrix::from_flat(1, 1, vec![a]));
            assert!((m.get(0, 0) - a.exp_m1()).abs() < 1e-12, "{a}");
        }
    }

    #[test]
    fn nilpotent_case_is_exact_and_matches_series() {
        // d strictly upper triangular, A upper triangular: d A nilpotent
        let c = TwoTermComplex::new(Matrix::from_ints(&[&[0, 1, 2], &[0, 0, 3], &[0, 0, 0]]));
        let a = Matrix::from_ints(&[&[1, 2, -1], &[0, 3, 1], &[0, 0, 2]]);
        let m = exp_bridge_exact(&c, &a).unwrap();
        // hand series A + A d A / 2 + A d A d A / 6
        let ada = &(&a * c.d()) * &a;
        let adada = &(&ada * c.d()) * &a;
        let series = &(&a + &ada.scale(&rat(1, 2))) + &adada.scale(&rat(1, 6));
        assert_eq!(m, series);
        let k = int_delta(&c, &K1Element::new(&c, m.clone()).unwrap());
        assert_eq!(k.b0(), &exp_nilpotent(&(c.d() * &a)).unwrap());
        assert_eq!(k.b1(), &exp_nilpotent(&(&a * c.d())).unwrap());
        let float = exp_bridge(&c, &a);
        assert!(float.max_abs_diff(&FloatMatrix::from_exact(&m)) < 1e-12);
    }

    #[test]
    fn non_nilpotent_has_no_exact_value() {
        let c = TwoTermComplex::new(Matrix::from_ints(&[&[1]]));
        assert_eq!(exp_bridge_exact(&c, &Matrix::scalar(1, &int(1))), None);
        assert_eq!(exp_nilpotent(&Matrix::scalar(1, &int(1))), None);
        assert_eq!(exp_nilpotent(&Matrix::zeros(0, 0)), Some(Matrix::zeros(0, 0)));
    }

    proptest! {
        #[test]
        fn bridge_matches_expm(d in proptest::collection::vec(-2.0f64..2.0, 6), a in proptest::collection::vec(-1.0f64..1.0, 6)) {
            let d = FloatMatrix::from_flat(2, 3, d).scale(0.5);
            let a = FloatMatrix::from_flat(3, 2, a).scale(0.5);
            let m = exp_bridge_float(&d, &a);
            let (b0, b1) = int_delta_float(&d, &m);
            let (e0, e1) = exp_delta(&d, &a);
            prop_assert!(b0.max_abs_diff(&e0) < 1e-9);
            prop_assert!(b1.max_abs_diff(&e1) < 1e-9);
        }
    }

    #[test]
    fn first_order_term_is_delta() {
        let d = FloatMatrix::from_flat(2, 2, vec![1.0, 2.0, -1.0, 0.5]);
        let a = FloatMatrix::from_flat(2, 2, vec![0.3, -1.0, 2.0, 1.0]);
        let t = 1e-6;
        let m = exp_bridge_float(&d, &a.scale(t));
        let (b0, b1) = int_delta_float(&d, &m);
        let fd0 = (&b0 - &FloatMatrix::identity(2)).scale(1.0 / t);
        let fd1 = (&b1 - &FloatMatrix::identity(2)).scale(1.0 / t);
        assert!(fd0.max_abs_diff(&(&d * &a)) < 1e-4);
        assert!(fd1.max_abs_diff(&(&a * &d)) < 1e-4);
    }
}
