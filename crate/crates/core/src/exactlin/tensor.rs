use num_traits::{One, Zero};

use super::vector::{self, Vector};
use super::{Matrix, Rational};
use crate::error::{shape, Result};

/// Multilinear map `Q^{d_1} x ... x Q^{d_k} -> Q^out`, stored as structure
/// constants: the value on basis tuple `(i_1, ..., i_k)` is the vector at
/// offset `((i_1 * d_2 + i_2) * ... ) * out`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Tensor {
    dims: Vec<usize>,
    out: usize,
    data: Vec<Rational>,
}

impl Tensor {
    pub fn zeros(dims: &[usize], out: usize) -> Self {
        let len = dims.iter().product::<usize>() * out;
        Self { dims: dims.to_vec(), out, data: vec![Rational::zero(); len] }
    }

    pub fn from_flat(dims: &[usize], out: usize, data: Vec<Rational>) -> Result<Self> {
        let len = dims.iter().product::<usize>() * out;
        if data.len() != len {
            return Err(shape(format!("tensor {dims:?} -> {out} needs {len} entries, got {}", data.len())));
        }
        Ok(Self { dims: dims.to_vec(), out, data })
    }

    /// Tabulates `f` on every basis tuple.
    pub fn from_fn(dims: &[usize], out: usize, mut f: impl FnMut(&[usize]) -> Vector) -> Self {
        let mut t = Self::zeros(dims, out);
        let mut idx = vec![0usize; dims.len()];
        for flat in 0..t.tuple_count() {
            let v = f(&idx);
            assert_eq!(v.len(), out, "tensor generator returned wrong length at {idx:?}");
            t.data[flat * out..(flat + 1) * out].clone_from_slice(&v);
            advance(&mut idx, dims);
        }
        t
    }

    /// A linear map viewed as a 1-slot tensor.
    pub fn from_matrix(m: &Matrix) -> Self {
        Self::from_fn(&[m.cols()], m.rows(), |i| m.col(i[0]))
    }

    pub fn arity(&self) -> usize {
        self.dims.len()
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn out_dim(&self) -> usize {
        self.out
    }

    pub fn flat(&self) -> &[Rational] {
        &self.data
    }

    fn tuple_count(&self) -> usize {
        self.dims.iter().product()
    }

    fn offset(&self, idx: &[usize]) -> usize {
        debug_assert_eq!(idx.len(), self.dims.len());
        idx.iter().zip(&self.dims).fold(0, |acc, (&i, &d)| {
            debug_assert!(i < d);
            acc * d + i
        }) * self.out
    }

    /// Value on a tuple of basis vectors.
    pub fn at(&self, idx: &[usize]) -> &[Rational] {
        let o = self.offset(idx);
        &self.data[o..o + self.out]
    }

    pub fn set(&mut self, idx: &[usize], v: &[Rational]) {
        let o = self.offset(idx);
        self.data[o..o + self.out].clone_from_slice(v);
    }

    /// Evaluates on arbitrary vectors by multilinear expansion, skipping zero
    /// coordinates.
    pub fn eval(&self, args: &[&[Rational]]) -> Vector {
        assert_eq!(args.len(), self.dims.len(), "tensor arity");
        let mut terms: Vec<(usize, Rational)> = vec![(0, Rational::one())];
        for (arg, &d) in args.iter().zip(&self.dims) {
            assert_eq!(arg.len(), d, "tensor argument length");
            let mut next = Vec::new();
            for (prefix, c) in &terms {
                for (i, x) in arg.iter().enumerate() {
                    if !x.is_zero() {
                        next.push((prefix * d + i, c * x));
                    }
                }
            }
            terms = next;
        }
        let mut out = vector::zeros(self.out);
        for (flat, c) in terms {
            vector::axpy(&mut out, &c, &self.data[flat * self.out..(flat + 1) * self.out]);
        }
        out
    }

    /// Fixes slot 0 to `v`, leaving a tensor of arity one less.
    pub fn contract_first(&self, v: &[Rational]) -> Tensor {
        assert!(!self.dims.is_empty());
        assert_eq!(v.len(), self.dims[0]);
        let rest: Vec<usize> = self.dims[1..].to_vec();
        let block = rest.iter().product::<usize>() * self.out;
        let mut data = vector::zeros(block);
        for (i, x) in v.iter().enumerate() {
            vector::axpy(&mut data, x, &self.data[i * block..(i + 1) * block]);
        }
        Tensor { dims: rest, out: self.out, data }
    }

    /// For an arity-1 tensor, the matrix of the linear map.
    pub fn to_matrix(&self) -> Matrix {
        assert_eq!(self.arity(), 1, "to_matrix needs a linear tensor");
        Matrix::from_fn(self.out, self.dims[0], |i, j| self.at(&[j])[i].clone())
    }

    pub fn is_zero(&self) -> bool {
        vector::is_zero(&self.data)
    }

    pub fn scale(&self, c: &Rational) -> Tensor {
        Tensor { dims: self.dims.clone(), out: self.out, data: vector::scale(c, &self.data) }
    }

    pub fn add(&self, other: &Tensor) -> Tensor {
        assert_eq!((&self.dims, self.out), (&other.dims, other.out), "tensor sum shape");
        Tensor { dims: self.dims.clone(), out: self.out, data: vector::add(&self.data, &other.data) }
    }

    /// First basis tuple (if any) where swapping slots `a` and `b` does not
    /// flip the sign.
    pub fn antisymmetry_violation(&self, a: usize, b: usize) -> Option<Vec<usize>> {
        assert_eq!(self.dims[a], self.dims[b], "slots must have equal dimension");
        let mut idx = vec![0usize; self.dims.len()];
        for _ in 0..self.tuple_count() {
            let mut swapped = idx.clone();
            swapped.swap(a, b);
            let x = self.at(&idx);
            let y = self.at(&swapped);
            if x.iter().zip(y).any(|(p, q)| !(p + q).is_zero()) {
                return Some(idx);
            }
            advance(&mut idx, &self.dims);
        }
        None
    }

    /// Antisymmetric in every pair of slots (all slots must share a dimension).
    pub fn is_alternating(&self) -> bool {
        (0..self.arity()).all(|a| (a + 1..self.arity()).all(|b| self.antisymmetry_violation(a, b).is_none()))
    }

    /// Pulls back every slot and pushes forward the output:
    /// `(x_1..x_k) -> post * T(pre_1 x_1, ..., pre_k x_k)`.
    pub fn transform(&self, pre: &[&Matrix], post: &Matrix) -> Tensor {
        assert_eq!(pre.len(), self.arity());
        let dims: Vec<usize> = pre.iter().map(|m| m.cols()).collect();
        let cols: Vec<Vec<Vector>> = pre.iter().map(|m| m.columns()).collect();
        Tensor::from_fn(&dims, post.rows(), |idx| {
            let args: Vec<&[Rational]> = idx.iter().enumerate().map(|(s, &i)| cols[s][i].as_slice()).collect();
            post.mul_vec(&self.eval(&args))
        })
    }
}

/// Odometer increment over a box of indices.
pub(crate) fn advance(idx: &mut [usize], dims: &[usize]) {
    for s in (0..idx.len()).rev() {
        idx[s] += 1;
        if idx[s] < dims[s] {
            return;
        }
        idx[s] = 0;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::int;

    fn cross() -> Tensor {
        Tensor::from_fn(&[3, 3], 3, |i| {
            let (a, b) = (i[0], i[1]);
            let mut v = vector::zeros(3);
            if a != b {
                let c = 3 - a - b;
                v[c] = int(if (a + 1) % 3 == b { 1 } else { -1 });
            }
            v
        })
    }

    #[test]
    fn eval_matches_basis() {
        let t = cross();
        assert_eq!(t.at(&[0, 1]), &[int(0), int(0), int(1)]);
        let x = [int(1), int(2), int(0)];
        let y = [int(0), int(1), int(3)];
        // (1,2,0) x (0,1,3) = (6, -3, 1)
        assert_eq!(t.eval(&[&x, &y]), vec![int(6), int(-3), int(1)]);
    }

    #[test]
    fn alternating_detection() {
        assert!(cross().is_alternating());
        let mut t = cross();
        t.set(&[0, 0], &[int(1), int(0), int(0)]);
        assert_eq!(t.antisymmetry_violation(0, 1), Some(vec![0, 0]));
    }

    #[test]
    fn contraction_and_matrix() {
        let t = cross();
        let m = t.contract_first(&vector::unit(3, 0)).to_matrix();
        // e1 x (.) as a matrix
        assert_eq!(m, Matrix::from_ints(&[&[0, 0, 0], &[0, 0, -1], &[0, 1, 0]]));
        assert_eq!(Tensor::from_matrix(&m).to_matrix(), m);
    }

    #[test]
    fn zero_dimensional_slots() {
        let t = Tensor::zeros(&[0, 2], 1);
        assert_eq!(t.eval(&[&[], &[int(1), int(1)]]), vec![int(0)]);
        let s = Tensor::zeros(&[], 2);
        assert_eq!(s.eval(&[]), vec![int(0), int(0)]);
    }
}
