use std::ops::{Add, Mul, Sub};

/// Dense row-major `f64` matrix. Only used on the exponential path.
#[derive(Clone, Debug, PartialEq)]
pub struct FloatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl FloatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![0.0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = 1.0;
        }
        m
    }

    /// Panics on non-finite entries.
    pub fn from_flat(rows: usize, cols: usize, data: Vec<f64>) -> Self {
        assert_eq!(data.len(), rows * cols, "float matrix shape");
        assert!(data.iter().all(|x| x.is_finite()), "non-finite entry");
        Self { rows, cols, data }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self::from_flat(rows, cols, data)
    }

    pub fn from_exact(m: &super::Matrix) -> Self {
        Self::from_flat(m.rows(), m.cols(), m.to_f64())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.cols + j]
    }

    pub fn flat(&self) -> &[f64] {
        &self.data
    }

    pub fn scale(&self, c: f64) -> Self {
        Self { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * c).collect() }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |i, j| self.get(r0 + i, c0 + j))
    }

    /// Maximum absolute row sum.
    pub fn norm_inf(&self) -> f64 {
        (0..self.rows)
            .map(|i| self.data[i * self.cols..(i + 1) * self.cols].iter().map(|x| x.abs()).sum())
            .fold(0.0, f64::max)
    }

    pub fn max_abs_diff(&self, other: &FloatMatrix) -> f64 {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.data.iter().zip(&other.data).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0.0)
    }

    /// Partial sum `sum_{k<terms} m^k / k!`.
    pub fn taylor_exp(&self, terms: usize) -> FloatMatrix {
        assert_eq!(self.rows, self.cols, "taylor_exp needs a square matrix");
        let n = self.rows;
        let mut sum = FloatMatrix::identity(n);
        let mut term = FloatMatrix::identity(n);
        for k in 1..terms {
            term = (&term * self).scale(1.0 / k as f64);
            sum = &sum + &term;
        }
        sum
    }

    /// Matrix exponential by scaling and squaring with a Taylor kernel.
    ///
    /// Nilpotent input (some power `m^k`, `k <= n`, is exactly zero) is summed
    /// to termination instead, so the result is the finite series itself.
    pub fn expm(&self) -> FloatMatrix {
        assert_eq!(self.rows, self.cols, "expm needs a square matrix");
        let n = self.rows;
        if let Some(k) = self.nilpotency_index() {
            return self.taylor_exp(k);
        }
        let norm = self.norm_inf();
        let squarings = if norm > 0.5 { (norm / 0.5).log2().ceil() as i32 } else { 0 };
        let scaled = self.scale(0.5f64.powi(squarings));
        let mut sum = FloatMatrix::identity(n);
        let mut term = FloatMatrix::identity(n);
        for k in 1..40 {
            term = (&term * &scaled).scale(1.0 / k as f64);
            sum = &sum + &term;
            if term.norm_inf() <= f64::EPSILON * 1e-3 * sum.norm_inf() {
                break;
            }
        }
        for _ in 0..squarings {
            sum = &sum * &sum;
        }
        sum
    }

    /// Smallest `k <= n` with `m^k == 0` exactly, if any.
    fn nilpotency_index(&self) -> Option<usize> {
        let n = self.rows;
        if n == 0 {
            return Some(1);
        }
        let mut p = self.clone();
        for k in 1..=n {
            if p.is_zero() {
                return Some(k);
            }
            p = &p * self;
        }
        None
    }
}

impl Mul for &FloatMatrix {
    type Output = FloatMatrix;
    fn mul(self, rhs: &FloatMatrix) -> FloatMatrix {
        assert_eq!(self.cols, rhs.rows, "float product shape");
        let mut out = FloatMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k];
                if a == 0.0 {
                    continue;
                }
                for j in 0..rhs.cols {
                    out.data[i * rhs.cols + j] += a * rhs.data[k * rhs.cols + j];
                }
            }
        }
        out
    }
}

impl Add for &FloatMatrix {
    type Output = FloatMatrix;
    fn add(self, rhs: &FloatMatrix) -> FloatMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        FloatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &FloatMatrix {
    type Output = FloatMatrix;
    fn sub(self, rhs: &FloatMatrix) -> FloatMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        FloatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exp_of_zero_is_identity() {
        assert_eq!(FloatMatrix::zeros(2, 2).expm(), FloatMatrix::identity(2));
    }

    #[test]
    fn exp_of_nilpotent_terminates() {
        let m = FloatMatrix::from_flat(2, 2, vec![0.0, 1.0, 0.0, 0.0]);
        assert_eq!(m.expm(), FloatMatrix::from_flat(2, 2, vec![1.0, 1.0, 0.0, 1.0]));
    }

    #[test]
    fn exp_of_log_two() {
        let l = std::f64::consts::LN_2;
        let m = FloatMatrix::from_flat(2, 2, vec![l, 0.0, 0.0, l]);
        let e = m.expm();
        assert!(e.max_abs_diff(&FloatMatrix::from_flat(2, 2, vec![2.0, 0.0, 0.0, 2.0])) <= 1e-12);
    }

    #[test]
    fn large_norm_against_scalar_exp() {
        let m = FloatMatrix::from_flat(2, 2, vec![7.5, 0.0, 0.0, -3.25]);
        let e = m.expm();
        assert!((e.get(0, 0) - 7.5f64.exp()).abs() <= 1e-12 * 7.5f64.exp());
        assert!((e.get(1, 1) - (-3.25f64).exp()).abs() <= 1e-14);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn scaling_squaring_matches_taylor(n in 1usize..=4, v in proptest::collection::vec(-1.0f64..1.0, 16)) {
                // entries bounded so the inf-norm stays below 1
                let m = FloatMatrix::from_fn(n, n, |i, j| v[i * 4 + j] / n as f64 * 0.9);
                let e = m.expm();
                let t = m.taylor_exp(60);
                prop_assert!(e.max_abs_diff(&t) <= 1e-12 * (1.0 + e.norm_inf()));
            }
        }
    }
}
