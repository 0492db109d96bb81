//! Coefficient rings.
//!
//! Everything in this crate is exact. Polynomials and reflection matrices are
//! generic over a [`Ring`]; the concrete aliases in the crate root pick
//! [`BigInt`] for polynomial coefficients and `i64` for matrix entries.

use std::fmt::{Debug, Display};
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, One, Signed, Zero};

/// A commutative ring with exact equality.
pub trait Ring:
    Clone
    + Debug
    + Display
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    /// Embed a small integer.
    fn from_int(v: i64) -> Self;

    fn is_negative(&self) -> bool;
}

/// Division that only succeeds when the quotient lies in the ring.
pub trait ExactDiv: Ring {
    fn try_div_exact(&self, rhs: &Self) -> Option<Self>;
}

macro_rules! impl_ring_prim {
    ($($t:ty),*) => {$(
        impl Ring for $t {
            fn from_int(v: i64) -> Self {
                v as $t
            }
            fn is_negative(&self) -> bool {
                *self < 0
            }
        }

        impl ExactDiv for $t {
            fn try_div_exact(&self, rhs: &Self) -> Option<Self> {
                if *rhs == 0 {
                    return None;
                }
                let (q, r) = self.div_rem(rhs);
                (r == 0).then_some(q)
            }
        }
    )*};
}

impl_ring_prim!(i32, i64, i128);

impl Ring for BigInt {
    fn from_int(v: i64) -> Self {
        BigInt::from(v)
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
}

impl ExactDiv for BigInt {
    fn try_div_exact(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(rhs);
        r.is_zero().then_some(q)
    }
}

impl<T> Ring for Ratio<T>
where
    T: Clone + Integer + Signed + FromPrimitive + Debug + Display,
{
    fn from_int(v: i64) -> Self {
        Ratio::from_integer(<T as FromPrimitive>::from_i64(v).expect("i64 fits the numerator type"))
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
}

impl<T> ExactDiv for Ratio<T>
where
    T: Clone + Integer + Signed + FromPrimitive + Debug + Display,
{
    fn try_div_exact(&self, rhs: &Self) -> Option<Self> {
        (!rhs.is_zero()).then(|| self.clone() / rhs.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    #[test]
    fn integer_exact_division() {
        assert_eq!(12i64.try_div_exact(&4), Some(3));
        assert_eq!(12i64.try_div_exact(&5), None);
        assert_eq!(12i64.try_div_exact(&0), None);
        assert_eq!(
            BigInt::from(-12).try_div_exact(&BigInt::from(4)),
            Some(BigInt::from(-3))
        );
    }

    #[test]
    fn rationals_always_divide() {
        let a = BigRational::from_int(3);
        let b = BigRational::from_int(-2);
        let q = a.try_div_exact(&b).unwrap();
        assert_eq!(q * b, a);
        assert!(Ring::is_negative(&BigRational::from_int(-1)));
    }
}
