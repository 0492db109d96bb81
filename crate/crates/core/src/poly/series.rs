use std::fmt;
use std::ops::Mul;

use super::laurent::{monomial_text, render, Laurent};
use crate::error::{Error, Result};
use crate::scalar::Ring;

/// Power series truncated after a fixed order `T` (coefficients of `y^0..=y^T`).
#[derive(Clone, Debug, PartialEq)]
pub struct Series<C> {
    coeffs: Vec<C>,
}

impl<C: Ring> Series<C> {
    pub fn zero(order: usize) -> Self {
        Series {
            coeffs: vec![C::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = C::one();
        s
    }

    /// Truncate a polynomial with nonnegative exponents.
    pub fn from_laurent(p: &Laurent<C>, order: usize) -> Result<Self> {
        if let Some(lo) = p.min_exp().filter(|&e| e < 0) {
            return Err(Error::NegativeExponent(lo));
        }
        let mut s = Self::zero(order);
        for (e, c) in p.terms() {
            if let Some(slot) = s.coeffs.get_mut(e as usize) {
                *slot = c.clone();
            }
        }
        Ok(s)
    }

    /// `prod_i (1 - y^{e_i})^{-1}` up to `y^order`.
    ///
    /// The coefficient of `y^m` counts the ways of writing `m` as a sum of the
    /// `e_i`, where each listed factor is its own supply of parts.
    pub fn invert_product(factors: &[u32], order: usize) -> Self {
        let mut s = Self::one(order);
        for &e in factors {
            assert!(e >= 1, "factor exponents must be positive");
            let e = e as usize;
            // Multiplying by a geometric series is a running sum with stride e.
            for m in e..=order {
                let prev = s.coeffs[m - e].clone();
                s.coeffs[m] = s.coeffs[m].clone() + prev;
            }
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn coeff(&self, m: usize) -> C {
        self.coeffs.get(m).cloned().unwrap_or_else(C::zero)
    }

    pub fn to_laurent(&self) -> Laurent<C> {
        Laurent::from_coeffs(0, self.coeffs.clone()).with_var("y")
    }
}

impl<C: Ring> Mul for &Series<C> {
    type Output = Series<C>;

    /// Product truncated to the smaller of the two orders.
    fn mul(self, rhs: Self) -> Series<C> {
        let order = self.order().min(rhs.order());
        let mut out = Series::<C>::zero(order);
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                out.coeffs[i + j] = out.coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        out
    }
}

impl<C: Ring> fmt::Display for Series<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body = render(
            self.coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(e, c)| (c, monomial_text("y", e as i64))),
            false,
        );
        write!(f, "{body} + O(y^{})", self.order() + 1)
    }
}
