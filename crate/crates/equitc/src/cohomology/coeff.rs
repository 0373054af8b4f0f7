//! Coefficient rings for the algebra engine: F_2 and Z.

use std::fmt;

/// Exact coefficient ring. Implemented by [`F2`] and `i64`; everything the
/// engine needs is ring arithmetic plus equality.
pub trait Coeff:
    Clone + Copy + PartialEq + Eq + std::hash::Hash + fmt::Debug + fmt::Display + Send + Sync + 'static
{
    const NAME: &'static str;

    fn zero() -> Self;
    fn one() -> Self;
    fn add(self, other: Self) -> Self;
    fn neg(self) -> Self;
    fn mul(self, other: Self) -> Self;
    fn from_int(k: i64) -> Self;

    fn is_zero(self) -> bool {
        self == Self::zero()
    }

    fn sub(self, other: Self) -> Self {
        self.add(other.neg())
    }

    /// (-1)^exp.
    fn sign(exp: u32) -> Self {
        if exp % 2 == 0 {
            Self::one()
        } else {
            Self::one().neg()
        }
    }
}

/// The field with two elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct F2(pub bool);

impl fmt::Display for F2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", if self.0 { 1 } else { 0 })
    }
}

impl Coeff for F2 {
    const NAME: &'static str = "F2";

    fn zero() -> Self {
        F2(false)
    }

    fn one() -> Self {
        F2(true)
    }

    fn add(self, other: Self) -> Self {
        F2(self.0 ^ other.0)
    }

    fn neg(self) -> Self {
        self
    }

    fn mul(self, other: Self) -> Self {
        F2(self.0 & other.0)
    }

    fn from_int(k: i64) -> Self {
        F2(k.rem_euclid(2) == 1)
    }
}

impl Coeff for i64 {
    const NAME: &'static str = "Z";

    fn zero() -> Self {
        0
    }

    fn one() -> Self {
        1
    }

    fn add(self, other: Self) -> Self {
        self.checked_add(other).expect("integer overflow in coefficient arithmetic")
    }

    fn neg(self) -> Self {
        -self
    }

    fn mul(self, other: Self) -> Self {
        self.checked_mul(other).expect("integer overflow in coefficient arithmetic")
    }

    fn from_int(k: i64) -> Self {
        k
    }
}
