use crate::error::{shape, Error, Result};
use crate::exactlin::vector::{self, Vector};
use crate::exactlin::{Matrix, Rational, Tensor};

use super::{basis_label, show};

/// Finite-dimensional Lie algebra given by structure constants.
///
/// Antisymmetry and the Jacobi identity are verified on construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    bracket: Tensor,
}

impl LieAlgebra {
    pub fn new(bracket: Tensor) -> Result<Self> {
        let n = bracket.out_dim();
        if bracket.dims() != [n, n] {
            return Err(shape(format!("Lie bracket must be {n}x{n} -> {n}, got {:?} -> {n}", bracket.dims())));
        }
        if let Some(idx) = bracket.antisymmetry_violation(0, 1) {
            return Err(Error::NotAntisymmetric(format!("bracket at {}", basis_label(&idx))));
        }
        if let Some((idx, v)) = jacobi_violation(&bracket) {
            return Err(Error::NotJacobi(format!("Jacobiator at {} is {}", basis_label(&idx), show(&v))));
        }
        Ok(Self { bracket })
    }

    pub fn abelian(n: usize) -> Self {
        Self { bracket: Tensor::zeros(&[n, n], n) }
    }

    /// Structure constants from `(i, j, k, c)` meaning `[e_i, e_j] += c e_k`
    /// (and the antisymmetric counterpart).
    pub fn from_constants(n: usize, constants: &[(usize, usize, usize, i64)]) -> Result<Self> {
        let mut t = Tensor::zeros(&[n, n], n);
        for &(i, j, k, c) in constants {
            let mut v = t.at(&[i, j]).to_vec();
            v[k] += Rational::from_integer(c.into());
            t.set(&[i, j], &v);
            let mut w = t.at(&[j, i]).to_vec();
            w[k] -= Rational::from_integer(c.into());
            t.set(&[j, i], &w);
        }
        Self::new(t)
    }

    pub fn dim(&self) -> usize {
        self.bracket.out_dim()
    }

    pub fn tensor(&self) -> &Tensor {
        &self.bracket
    }

    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Vector {
        self.bracket.eval(&[x, y])
    }

    /// Matrix of `ad_x`.
    pub fn ad(&self, x: &[Rational]) -> Matrix {
        self.bracket.contract_first(x).to_matrix()
    }

    /// The same algebra in the basis given by the columns of `p`:
    /// `[x, y]' = p^{-1} [p x, p y]`.
    pub fn change_basis(&self, p: &Matrix) -> Result<Self> {
        let pinv = p.invert()?;
        Self::new(self.bracket.transform(&[p, p], &pinv))
    }

    /// Spanning columns of `[g, g]`.
    pub fn derived_span(&self) -> Matrix {
        let n = self.dim();
        let mut cols = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                cols.push(self.bracket.at(&[i, j]).to_vec());
            }
        }
        Matrix::from_columns(&cols, n)
    }

    /// Direct sum, `self` first.
    pub fn direct_sum(&self, other: &LieAlgebra) -> LieAlgebra {
        let (a, b) = (self.dim(), other.dim());
        let t = Tensor::from_fn(&[a + b, a + b], a + b, |idx| {
            let (i, j) = (idx[0], idx[1]);
            if i < a && j < a {
                vector::concat(&[self.bracket.at(&[i, j]), &vector::zeros(b)])
            } else if i >= a && j >= a {
                vector::concat(&[&vector::zeros(a), other.bracket.at(&[i - a, j - a])])
            } else {
                vector::zeros(a + b)
            }
        });
        LieAlgebra { bracket: t }
    }
}

/// First basis triple `i < j < k` whose Jacobiator
/// `[[x,y],z] + [[y,z],x] + [[z,x],y]` is nonzero.
pub fn jacobi_violation(bracket: &Tensor) -> Option<(Vec<usize>, Vector)> {
    let n = bracket.out_dim();
    let unit = |i| vector::unit(n, i);
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let (x, y, z) = (unit(i), unit(j), unit(k));
                let mut s = bracket.eval(&[&bracket.eval(&[&x, &y]), &z]);
                vector::add_assign(&mut s, &bracket.eval(&[&bracket.eval(&[&y, &z]), &x]));
                vector::add_assign(&mut s, &bracket.eval(&[&bracket.eval(&[&z, &x]), &y]));
                if !vector::is_zero(&s) {
                    return Some((vec![i, j, k], s));
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::int;

    pub(crate) fn so3() -> LieAlgebra {
        LieAlgebra::from_constants(3, &[(0, 1, 2, 1), (1, 2, 0, 1), (2, 0, 1, 1)]).unwrap()
    }

    #[test]
    fn cross_product_is_lie() {
        let g = so3();
        assert_eq!(g.bracket(&vector::unit(3, 0), &vector::unit(3, 1)), vector::unit(3, 2));
        assert_eq!(g.ad(&vector::unit(3, 0)), Matrix::from_ints(&[&[0, 0, 0], &[0, 0, -1], &[0, 1, 0]]));
    }

    #[test]
    fn perturbed_constants_break_jacobi() {
        // cross product with [e0,e1] = e0 + e2: Jacobiator on (e0,e1,e2) is -e1
        let t = LieAlgebra::from_constants(3, &[(0, 1, 2, 1), (0, 1, 0, 1), (1, 2, 0, 1), (2, 0, 1, 1)]);
        match t {
            Err(Error::NotJacobi(_)) => {}
            other => panic!("expected NotJacobi, got {other:?}"),
        }
    }

    #[test]
    fn change_of_basis_preserves_structure() {
        let g = so3();
        let p = Matrix::from_ints(&[&[1, 1, 0], &[0, 1, 0], &[2, 0, 1]]);
        let h = g.change_basis(&p).unwrap();
        let x = vec![int(1), int(-2), int(3)];
        let y = vec![int(0), int(1), int(1)];
        assert_eq!(p.mul_vec(&h.bracket(&x, &y)), g.bracket(&p.mul_vec(&x), &p.mul_vec(&y)));
    }
}
