//! Coordinate vectors over the rationals.

use num_traits::{One, Zero};

use super::Rational;

pub type Vector = Vec<Rational>;

pub fn zeros(n: usize) -> Vector {
    vec![Rational::zero(); n]
}

pub fn unit(n: usize, i: usize) -> Vector {
    let mut v = zeros(n);
    v[i] = Rational::one();
    v
}

pub fn add(a: &[Rational], b: &[Rational]) -> Vector {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[Rational], b: &[Rational]) -> Vector {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale(c: &Rational, a: &[Rational]) -> Vector {
    a.iter().map(|x| c * x).collect()
}

pub fn neg(a: &[Rational]) -> Vector {
    a.iter().map(|x| -x).collect()
}

/// `acc += c * a`
pub fn axpy(acc: &mut [Rational], c: &Rational, a: &[Rational]) {
    debug_assert_eq!(acc.len(), a.len());
    if c.is_zero() {
        return;
    }
    for (x, y) in acc.iter_mut().zip(a) {
        if !y.is_zero() {
            *x += c * y;
        }
    }
}

pub fn add_assign(acc: &mut [Rational], a: &[Rational]) {
    debug_assert_eq!(acc.len(), a.len());
    for (x, y) in acc.iter_mut().zip(a) {
        if !y.is_zero() {
            *x += y;
        }
    }
}

pub fn is_zero(a: &[Rational]) -> bool {
    a.iter().all(Zero::is_zero)
}

pub fn concat(parts: &[&[Rational]]) -> Vector {
    parts.iter().flat_map(|p| p.iter().cloned()).collect()
}

pub fn format(a: &[Rational]) -> String {
    let items: Vec<String> = a.iter().map(ToString::to_string).collect();
    format!("[{}]", items.join(", "))
}
