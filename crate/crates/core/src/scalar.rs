//! Coefficient rings for character and diagram combinations.
//!
//! Every combination type in this crate is generic over a signed integer
//! ring. `BigInt` is the default (see the aliases in the crate root); the
//! fixed-width impls exist for hot loops where overflow is ruled out.

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

pub trait Coefficient:
    Clone + Debug + Display + PartialEq + Eq + Signed + FromPrimitive + Send + Sync + 'static
{
    fn from_bigint(v: &BigInt) -> Option<Self>;
    fn to_bigint(&self) -> BigInt;
}

impl Coefficient for i64 {
    fn from_bigint(v: &BigInt) -> Option<Self> {
        v.to_i64()
    }
    fn to_bigint(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Coefficient for i128 {
    fn from_bigint(v: &BigInt) -> Option<Self> {
        v.to_i128()
    }
    fn to_bigint(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Coefficient for BigInt {
    fn from_bigint(v: &BigInt) -> Option<Self> {
        Some(v.clone())
    }
    fn to_bigint(&self) -> BigInt {
        self.clone()
    }
}

/// Lossless conversion of a small count into any coefficient ring.
pub(crate) fn coeff<C: Coefficient>(v: i64) -> C {
    C::from_i64(v).expect("coefficient ring holds small integers")
}
