use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::laurent::{monomial_latex, monomial_text, render, Laurent};
use crate::error::{Error, Result};
use crate::scalar::{ExactDiv, Ring};

/// Laurent polynomial in `x` and `y` with exact coefficients.
///
/// Exponents of either sign are allowed in both variables.
#[derive(Clone, Debug, PartialEq)]
pub struct BiLaurent<C> {
    terms: BTreeMap<(i64, i64), C>,
}

impl<C: Ring> Default for BiLaurent<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Ring> BiLaurent<C> {
    pub fn zero() -> Self {
        BiLaurent {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(C::one(), 0, 0)
    }

    pub fn monomial(c: C, x: i64, y: i64) -> Self {
        Self::from_terms([((x, y), c)])
    }

    pub fn from_terms<I: IntoIterator<Item = ((i64, i64), C)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (k, c) in terms {
            p.add_term(k, c);
        }
        p
    }

    /// The product `a(x) * b(y)`.
    pub fn outer(a: &Laurent<C>, b: &Laurent<C>) -> Self {
        let mut p = Self::zero();
        for (ea, ca) in a.terms() {
            for (eb, cb) in b.terms() {
                p.add_term((ea, eb), ca.clone() * cb.clone());
            }
        }
        p
    }

    fn add_term(&mut self, key: (i64, i64), c: C) {
        if c.is_zero() {
            return;
        }
        let s = match self.terms.remove(&key) {
            Some(old) => old + c,
            None => c,
        };
        if !s.is_zero() {
            self.terms.insert(key, s);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero terms as `((x_exp, y_exp), coeff)`, ordered by `x` then `y`.
    pub fn terms(&self) -> impl Iterator<Item = ((i64, i64), &C)> + '_ {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, x: i64, y: i64) -> C {
        self.terms.get(&(x, y)).cloned().unwrap_or_else(C::zero)
    }

    pub fn x_range(&self) -> Option<(i64, i64)> {
        let mut it = self.terms.keys().map(|k| k.0);
        let first = it.next()?;
        Some(it.fold((first, first), |(lo, hi), e| (lo.min(e), hi.max(e))))
    }

    pub fn y_range(&self) -> Option<(i64, i64)> {
        let mut it = self.terms.keys().map(|k| k.1);
        let first = it.next()?;
        Some(it.fold((first, first), |(lo, hi), e| (lo.min(e), hi.max(e))))
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Multiply by `x^dx * y^dy`.
    pub fn shift(&self, dx: i64, dy: i64) -> Self {
        BiLaurent {
            terms: self
                .terms
                .iter()
                .map(|((a, b), c)| ((a + dx, b + dy), c.clone()))
                .collect(),
        }
    }

    /// Specialize `x = 1`, leaving a polynomial in `y`.
    pub fn eval_x_at_one(&self) -> Laurent<C> {
        Laurent::from_terms(self.terms.iter().map(|((_, y), c)| (*y, c.clone()))).with_var("y")
    }

    /// Specialize `y = 1`, leaving a polynomial in `x`.
    pub fn eval_y_at_one(&self) -> Laurent<C> {
        Laurent::from_terms(self.terms.iter().map(|((x, _), c)| (*x, c.clone()))).with_var("x")
    }

    pub fn eval_at_one(&self) -> C {
        self.terms.values().cloned().fold(C::zero(), |a, c| a + c)
    }

    /// If `self = y^k * other` for some integer `k`, return `k`.
    pub fn y_power_ratio(&self, other: &Self) -> Option<i64> {
        if self.terms.len() != other.terms.len() || self.is_zero() {
            return None;
        }
        let mut k = None;
        for (((xa, ya), ca), ((xb, yb), cb)) in self.terms.iter().zip(&other.terms) {
            // Shifting y preserves the (x, y) lexicographic order, so terms pair up.
            if xa != xb || ca != cb {
                return None;
            }
            match k {
                None => k = Some(ya - yb),
                Some(k) if k != ya - yb => return None,
                _ => {}
            }
        }
        k
    }

    pub fn to_latex(&self) -> String {
        render(
            self.terms
                .iter()
                .map(|((a, b), c)| (c, monomial_latex("x", *a) + &monomial_latex("y", *b))),
            true,
        )
    }
}

impl<C: ExactDiv> BiLaurent<C> {
    /// Divide every coefficient by `d`, failing unless all divide exactly.
    pub fn div_scalar_exact(&self, d: &C) -> Result<Self> {
        let mut terms = BTreeMap::new();
        for (k, c) in &self.terms {
            terms.insert(*k, c.try_div_exact(d).ok_or(Error::NotExactDivision)?);
        }
        Ok(BiLaurent { terms })
    }
}

impl<C: Ring> Add for &BiLaurent<C> {
    type Output = BiLaurent<C>;
    fn add(self, rhs: Self) -> BiLaurent<C> {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(*k, c.clone());
        }
        out
    }
}

impl<C: Ring> Sub for &BiLaurent<C> {
    type Output = BiLaurent<C>;
    fn sub(self, rhs: Self) -> BiLaurent<C> {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(*k, -c.clone());
        }
        out
    }
}

impl<C: Ring> Mul for &BiLaurent<C> {
    type Output = BiLaurent<C>;
    fn mul(self, rhs: Self) -> BiLaurent<C> {
        let mut out = BiLaurent::zero();
        for ((xa, ya), ca) in &self.terms {
            for ((xb, yb), cb) in &rhs.terms {
                out.add_term((xa + xb, ya + yb), ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl<C: Ring> Neg for &BiLaurent<C> {
    type Output = BiLaurent<C>;
    fn neg(self) -> BiLaurent<C> {
        BiLaurent {
            terms: self.terms.iter().map(|(k, c)| (*k, -c.clone())).collect(),
        }
    }
}

super::laurent::forward_owned!(BiLaurent, Add::add, Sub::sub, Mul::mul);

impl<C: Ring> std::iter::Sum for BiLaurent<C> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |a, b| &a + &b)
    }
}

impl<C: Ring> fmt::Display for BiLaurent<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mono = |a: i64, b: i64| {
            let (mx, my) = (monomial_text("x", a), monomial_text("y", b));
            match (mx.is_empty(), my.is_empty()) {
                (false, false) => format!("{mx}*{my}"),
                _ => mx + &my,
            }
        };
        f.write_str(&render(
            self.terms.iter().map(|((a, b), c)| (c, mono(*a, *b))),
            false,
        ))
    }
}
