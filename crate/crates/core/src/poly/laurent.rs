use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::{ExactDiv, Ring};

/// Univariate Laurent polynomial with exact coefficients.
///
/// Terms are kept in a sorted map with zero coefficients stripped, so two
/// polynomials are equal exactly when their term maps are equal. The variable
/// name only affects rendering and is ignored by `==`.
#[derive(Clone, Debug)]
pub struct Laurent<C> {
    terms: BTreeMap<i64, C>,
    var: &'static str,
}

impl<C: Ring> PartialEq for Laurent<C> {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl<C: Ring + Eq> Eq for Laurent<C> {}

impl<C: Ring> Default for Laurent<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Ring> Laurent<C> {
    pub const DEFAULT_VAR: &'static str = "q";

    pub fn zero() -> Self {
        Laurent {
            terms: BTreeMap::new(),
            var: Self::DEFAULT_VAR,
        }
    }

    pub fn one() -> Self {
        Self::monomial(C::one(), 0)
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: C, exp: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, c);
        p
    }

    /// Sum of `c * var^e` over the given pairs; repeated exponents accumulate.
    pub fn from_terms<I: IntoIterator<Item = (i64, C)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    /// Dense constructor: `coeffs[i]` is the coefficient of `var^(min_exp + i)`.
    pub fn from_coeffs(min_exp: i64, coeffs: Vec<C>) -> Self {
        Self::from_terms(
            coeffs
                .into_iter()
                .enumerate()
                .map(|(i, c)| (min_exp + i as i64, c)),
        )
    }

    /// `1 + v + ... + v^(k-1)`, the q-integer `[k]`.
    pub fn q_integer(k: u32) -> Self {
        Self::from_terms((0..k as i64).map(|e| (e, C::one())))
    }

    /// `1 - c * v^e`.
    pub fn one_minus(c: C, e: i64) -> Self {
        Self::from_terms([(0, C::one()), (e, -c)])
    }

    pub fn with_var(mut self, var: &'static str) -> Self {
        self.var = var;
        self
    }

    pub fn var(&self) -> &'static str {
        self.var
    }

    fn add_term(&mut self, exp: i64, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&exp) {
            Some(old) => {
                let s = old + c;
                if !s.is_zero() {
                    self.terms.insert(exp, s);
                }
            }
            None => {
                self.terms.insert(exp, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &C)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exp: i64) -> C {
        self.terms.get(&exp).cloned().unwrap_or_else(C::zero)
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn leading_coeff(&self) -> Option<&C> {
        self.terms.values().next_back()
    }

    /// Leading coefficient is one.
    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(|c| c.is_one())
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Sum of all coefficients, i.e. the value at `var = 1`.
    pub fn eval_at_one(&self) -> C {
        self.terms.values().cloned().fold(C::zero(), |a, c| a + c)
    }

    /// Multiply by `var^d`.
    pub fn shift(&self, d: i64) -> Self {
        Laurent {
            terms: self.terms.iter().map(|(e, c)| (e + d, c.clone())).collect(),
            var: self.var,
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero().with_var(self.var);
        }
        Laurent {
            terms: self
                .terms
                .iter()
                .map(|(e, v)| (*e, v.clone() * c.clone()))
                .collect(),
            var: self.var,
        }
    }

    /// Substitute `var -> var^k`: every exponent `e` becomes `k * e`.
    pub fn substitute_power(&self, k: i64) -> Result<Self> {
        if k == 0 {
            return Err(Error::ZeroExponentScale);
        }
        Ok(Laurent {
            terms: self.terms.iter().map(|(e, c)| (e * k, c.clone())).collect(),
            var: self.var,
        })
    }

    /// `var -> var^-1`.
    pub fn reverse(&self) -> Self {
        self.substitute_power(-1).expect("-1 is a unit")
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one().with_var(self.var), |acc, _| &acc * self)
    }

    /// Coefficient-wise map, dropping terms that become zero.
    pub fn map_coeffs<D: Ring, F: FnMut(&C) -> D>(&self, mut f: F) -> Laurent<D> {
        Laurent::from_terms(self.terms.iter().map(|(e, c)| (*e, f(c)))).with_var(self.var)
    }

    /// Render with `^{..}` exponents for LaTeX.
    pub fn to_latex(&self) -> String {
        render(
            self.terms
                .iter()
                .map(|(e, c)| (c, monomial_latex(self.var, *e))),
            true,
        )
    }
}

impl<C: ExactDiv> Laurent<C> {
    /// Exact quotient in the Laurent polynomial ring.
    ///
    /// Fails with [`Error::NotExactDivision`] when `rhs` does not divide
    /// `self`, either because of a nonzero remainder or because a
    /// coefficient quotient leaves the ring.
    pub fn div_exact(&self, rhs: &Self) -> Result<Self> {
        let (Some(b_lo), Some(b_hi)) = (rhs.min_exp(), rhs.max_exp()) else {
            return Err(Error::DivisionByZero);
        };
        let Some(a_lo) = self.min_exp() else {
            return Ok(Self::zero().with_var(self.var));
        };
        // Units are monomials: normalize both sides to polynomials with a
        // nonzero constant term and divide from the top.
        let mut rem: BTreeMap<i64, C> = self
            .terms
            .iter()
            .map(|(e, c)| (e - a_lo, c.clone()))
            .collect();
        let divisor: Vec<(i64, C)> = rhs
            .terms
            .iter()
            .map(|(e, c)| (e - b_lo, c.clone()))
            .collect();
        let d_deg = b_hi - b_lo;
        let d_lead = rhs.leading_coeff().expect("nonempty");
        let mut quot = BTreeMap::new();
        while let Some((&top, lead)) = rem.iter().next_back() {
            if top < d_deg {
                return Err(Error::NotExactDivision);
            }
            let q = lead.try_div_exact(d_lead).ok_or(Error::NotExactDivision)?;
            let shift = top - d_deg;
            for (e, c) in &divisor {
                let slot = rem.entry(e + shift).or_insert_with(C::zero);
                *slot = slot.clone() - c.clone() * q.clone();
                if slot.is_zero() {
                    rem.remove(&(e + shift));
                }
            }
            quot.insert(shift, q);
        }
        Ok(Laurent {
            terms: quot
                .into_iter()
                .map(|(e, c)| (e + a_lo - b_lo, c))
                .collect(),
            var: self.var,
        })
    }

    /// Divide every coefficient by `d`, failing unless all divide exactly.
    pub fn div_scalar_exact(&self, d: &C) -> Result<Self> {
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            terms.insert(*e, c.try_div_exact(d).ok_or(Error::NotExactDivision)?);
        }
        Ok(Laurent {
            terms,
            var: self.var,
        })
    }
}

fn add_maps<C: Ring>(a: &Laurent<C>, b: &Laurent<C>, negate_b: bool) -> Laurent<C> {
    let mut out = a.clone();
    for (e, c) in &b.terms {
        out.add_term(*e, if negate_b { -c.clone() } else { c.clone() });
    }
    out
}

impl<C: Ring> Add for &Laurent<C> {
    type Output = Laurent<C>;
    fn add(self, rhs: Self) -> Laurent<C> {
        add_maps(self, rhs, false)
    }
}

impl<C: Ring> Sub for &Laurent<C> {
    type Output = Laurent<C>;
    fn sub(self, rhs: Self) -> Laurent<C> {
        add_maps(self, rhs, true)
    }
}

impl<C: Ring> Mul for &Laurent<C> {
    type Output = Laurent<C>;
    fn mul(self, rhs: Self) -> Laurent<C> {
        let mut out = Laurent::zero().with_var(self.var);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(ea + eb, ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl<C: Ring> Neg for &Laurent<C> {
    type Output = Laurent<C>;
    fn neg(self) -> Laurent<C> {
        Laurent {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
            var: self.var,
        }
    }
}

macro_rules! forward_owned {
    ($ty:ident, $($tr:ident :: $m:ident),*) => {$(
        impl<C: Ring> $tr for $ty<C> {
            type Output = $ty<C>;
            fn $m(self, rhs: Self) -> $ty<C> {
                (&self).$m(&rhs)
            }
        }
        impl<C: Ring> $tr<&$ty<C>> for $ty<C> {
            type Output = $ty<C>;
            fn $m(self, rhs: &$ty<C>) -> $ty<C> {
                (&self).$m(rhs)
            }
        }
    )*};
}
pub(crate) use forward_owned;

forward_owned!(Laurent, Add::add, Sub::sub, Mul::mul);

impl<C: Ring> Neg for Laurent<C> {
    type Output = Laurent<C>;
    fn neg(self) -> Laurent<C> {
        -&self
    }
}

impl<C: Ring> std::iter::Sum for Laurent<C> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |a, b| &a + &b)
    }
}

impl<C: Ring> std::iter::Product for Laurent<C> {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::one(), |a, b| &a * &b)
    }
}

impl<C: Ring> fmt::Display for Laurent<C> {
    /// Ascending exponents with explicit signs, e.g. `1 - q^2` or `q^-2 + q^-4`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(
            self.terms
                .iter()
                .map(|(e, c)| (c, monomial_text(self.var, *e))),
            false,
        ))
    }
}

pub(crate) fn monomial_text(var: &str, e: i64) -> String {
    match e {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{e}"),
    }
}

pub(crate) fn monomial_latex(var: &str, e: i64) -> String {
    match e {
        0 => String::new(),
        1 => var.to_string(),
        _ if (0..10).contains(&e) => format!("{var}^{e}"),
        _ => format!("{var}^{{{e}}}"),
    }
}

/// Join `(coefficient, monomial)` pairs into a signed sum.
pub(crate) fn render<'a, C: Ring + 'a, I>(terms: I, latex: bool) -> String
where
    I: Iterator<Item = (&'a C, String)>,
{
    let mut out = String::new();
    for (c, mono) in terms {
        let neg = c.is_negative();
        let abs = if neg { -c.clone() } else { c.clone() };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if mono.is_empty() {
            out.push_str(&abs.to_string());
        } else {
            if !abs.is_one() {
                out.push_str(&abs.to_string());
                if !latex {
                    out.push('*');
                }
            }
            out.push_str(&mono);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type P = Laurent<BigInt>;

    fn p(terms: &[(i64, i64)]) -> P {
        P::from_terms(terms.iter().map(|&(e, c)| (e, BigInt::from(c))))
    }

    #[test]
    fn multiplication_examples() {
        assert_eq!(&p(&[(1, 1)]) * &p(&[(-1, 1)]), P::one());
        assert_eq!(
            &p(&[(0, 1), (1, 1)]) * &p(&[(0, 1), (1, -1)]),
            p(&[(0, 1), (2, -1)])
        );
        let a = p(&[(1, 1), (2, 1)]);
        assert_eq!(&a * &P::one(), a);
    }

    #[test]
    fn zero_coefficients_are_stripped() {
        let a = p(&[(1, 1), (1, -1), (3, 0)]);
        assert!(a.is_zero());
        assert_eq!(a.num_terms(), 0);
        let b = &p(&[(0, 1), (1, 1)]) - &p(&[(1, 1)]);
        assert_eq!(b, P::one());
    }

    #[test]
    fn substitute_power_examples() {
        let a = p(&[(1, 1), (2, 1)]);
        assert_eq!(a.substitute_power(-2).unwrap(), p(&[(-2, 1), (-4, 1)]));
        assert_eq!(p(&[(3, 1)]).substitute_power(2).unwrap(), p(&[(6, 1)]));
        assert_eq!(
            a.substitute_power(2).unwrap().eval_at_one(),
            BigInt::from(2)
        );
        assert_eq!(a.substitute_power(0), Err(Error::ZeroExponentScale));
    }

    #[test]
    fn exact_division_examples() {
        let one_minus_t2 = p(&[(0, 1), (2, -1)]);
        assert_eq!(
            one_minus_t2.div_exact(&p(&[(0, 1), (1, -1)])).unwrap(),
            p(&[(0, 1), (1, 1)])
        );
        assert_eq!(
            one_minus_t2.div_exact(&p(&[(0, 1), (1, 1)])).unwrap(),
            p(&[(0, 1), (1, -1)])
        );
        let num = &one_minus_t2 * &p(&[(0, 1), (3, -1)]);
        let den = p(&[(0, 1), (1, -1)]).pow(2);
        let expect = &p(&[(0, 1), (1, 1)]) * &P::q_integer(3);
        assert_eq!(num.div_exact(&den).unwrap(), expect);
    }

    #[test]
    fn exact_division_failures() {
        let a = p(&[(0, 1), (2, 1)]);
        assert_eq!(
            a.div_exact(&p(&[(0, 1), (1, 1)])),
            Err(Error::NotExactDivision)
        );
        assert_eq!(a.div_exact(&P::zero()), Err(Error::DivisionByZero));
        // 1 + t is not divisible by 2 over the integers.
        assert_eq!(
            p(&[(0, 1), (1, 1)]).div_exact(&P::constant(BigInt::from(2))),
            Err(Error::NotExactDivision)
        );
        assert!(P::zero().div_exact(&a).unwrap().is_zero());
    }

    #[test]
    fn laurent_division_with_shifts() {
        let b = p(&[(-3, 2), (-1, 1)]);
        let q = p(&[(-2, 1), (5, -4)]);
        assert_eq!((&b * &q).div_exact(&b).unwrap(), q);
    }

    #[test]
    fn rendering() {
        assert_eq!(p(&[(0, 1), (2, -1)]).to_string(), "1 - q^2");
        assert_eq!(p(&[(-2, 1), (-4, 1)]).to_string(), "q^-4 + q^-2");
        assert_eq!(
            p(&[(1, -3), (2, 1)]).with_var("t").to_string(),
            "-3*t + t^2"
        );
        assert_eq!(P::zero().to_string(), "0");
        assert_eq!(p(&[(-2, 1), (12, 2)]).to_latex(), "q^{-2} + 2q^{12}");
    }

    #[test]
    fn works_over_machine_integers() {
        let a = Laurent::<i64>::from_coeffs(0, vec![1, 2, 1]);
        let b = Laurent::<i64>::from_coeffs(0, vec![1, 1]);
        assert_eq!(a.div_exact(&b).unwrap(), b);
    }
}
