use num_traits::Zero;

use super::vector::{self, Vector};
use super::{Matrix, Rational};

/// A null space with its canonical basis, plus the coordinate map back from
/// the ambient space.
///
/// Basis vector `j` has a 1 at ambient index `free[j]` and zeros at every
/// other free index, so coordinates are read off directly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vector>,
    free: Vec<usize>,
}

impl Subspace {
    pub fn kernel(m: &Matrix) -> Self {
        let basis = m.kernel_basis();
        // In reduced echelon form a row's pivot precedes every free column it
        // touches, so the free unit is the last nonzero entry.
        let free = basis
            .iter()
            .map(|b| b.iter().rposition(|x| !x.is_zero()).expect("kernel vectors are nonzero"))
            .collect();
        Self { ambient: m.cols(), basis, free }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    /// Inclusion as an `ambient x dim` matrix.
    pub fn inclusion(&self) -> Matrix {
        Matrix::from_columns(&self.basis, self.ambient)
    }

    pub fn embed(&self, coords: &[Rational]) -> Vector {
        assert_eq!(coords.len(), self.dim(), "subspace coordinates length");
        let mut v = vector::zeros(self.ambient);
        for (c, b) in coords.iter().zip(&self.basis) {
            vector::axpy(&mut v, c, b);
        }
        v
    }

    /// Coordinates of `v`, or `None` if `v` is not in the subspace.
    pub fn coords(&self, v: &[Rational]) -> Option<Vector> {
        assert_eq!(v.len(), self.ambient, "ambient vector length");
        let c: Vector = self.free.iter().map(|&f| v[f].clone()).collect();
        (self.embed(&c) == v).then_some(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::int;

    #[test]
    fn coordinates_round_trip() {
        let m = Matrix::from_ints(&[&[1, 2, 0, -1], &[0, 0, 1, 3]]);
        let s = Subspace::kernel(&m);
        assert_eq!(s.dim(), 2);
        for b in s.basis() {
            assert!(vector::is_zero(&m.mul_vec(b)));
        }
        let c = vec![int(3), int(-2)];
        assert_eq!(s.coords(&s.embed(&c)), Some(c));
        assert_eq!(s.coords(&[int(1), int(0), int(0), int(0)]), None);
    }
}
