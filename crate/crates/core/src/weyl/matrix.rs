use std::ops::Mul;

use crate::poly::Laurent;
use crate::scalar::{ExactDiv, Ring};

/// Dense square matrix over a ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    dim: usize,
    data: Vec<T>,
}

impl<T: Ring> Matrix<T> {
    pub fn identity(dim: usize) -> Self {
        let mut data = vec![T::zero(); dim * dim];
        for i in 0..dim {
            data[i * dim + i] = T::one();
        }
        Matrix { dim, data }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let dim = rows.len();
        assert!(rows.iter().all(|r| r.len() == dim), "matrix must be square");
        Matrix {
            dim,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.dim + j]
    }

    fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.dim + j] = v;
    }

    pub fn trace(&self) -> T {
        (0..self.dim).fold(T::zero(), |acc, i| acc + self.get(i, i).clone())
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.dim)
    }
}

impl<T: ExactDiv> Matrix<T> {
    /// `det(1 - t*M)` as a polynomial in `t`.
    ///
    /// Computed with the Faddeev-LeVerrier recurrence, whose divisions by
    /// `1..=dim` are exact for integer matrices.
    pub fn char_factor(&self) -> Laurent<T> {
        let n = self.dim;
        // coeffs[i] is the coefficient of s^i in det(s*I - M).
        let mut coeffs = vec![T::zero(); n + 1];
        coeffs[n] = T::one();
        let mut acc = Matrix {
            dim: n,
            data: vec![T::zero(); n * n],
        };
        for k in 1..=n {
            // acc <- M * acc + c_{n-k+1} I
            let mut next = self * &acc;
            for i in 0..n {
                let v = next.get(i, i).clone() + coeffs[n - k + 1].clone();
                next.set(i, i, v);
            }
            acc = next;
            let tr = (self * &acc).trace();
            coeffs[n - k] = -tr
                .try_div_exact(&T::from_int(k as i64))
                .expect("Faddeev-LeVerrier division is exact over the integers");
        }
        // det(1 - tM) = t^n det(t^{-1} - M): reverse the coefficient list.
        Laurent::from_terms(
            coeffs
                .into_iter()
                .enumerate()
                .map(|(i, c)| ((n - i) as i64, c)),
        )
        .with_var("t")
    }
}

impl<T: Ring> Mul for &Matrix<T> {
    type Output = Matrix<T>;
    fn mul(self, rhs: Self) -> Matrix<T> {
        assert_eq!(self.dim, rhs.dim);
        let n = self.dim;
        let mut data = vec![T::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let slot = &mut data[i * n + j];
                    *slot = slot.clone() + a.clone() * rhs.get(k, j).clone();
                }
            }
        }
        Matrix { dim: n, data }
    }
}
