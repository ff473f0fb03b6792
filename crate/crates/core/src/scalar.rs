//! Scalar traits shared by the matrix and polynomial code.

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

/// A commutative ring with identity.
///
/// Blanket-implemented for every type with the right operator set, so machine
/// integers, `BigInt`, rationals, floats and [`Polynomial`](crate::Polynomial)
/// over any of those all qualify.
pub trait Ring:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    /// `(-1)^e` as a ring element.
    fn neg_one_pow(e: usize) -> Self {
        if e.is_multiple_of(2) {
            Self::one()
        } else {
            -Self::one()
        }
    }
}

impl<T> Ring for T where
    T: Clone
        + PartialEq
        + Debug
        + Zero
        + One
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Neg<Output = T>
{
}

/// A ring whose division is exact whenever the quotient exists in the ring
/// (integral domains like `BigInt`, or fields).
pub trait ExactDiv: Ring + Div<Output = Self> {}

impl<T> ExactDiv for T where T: Ring + Div<Output = T> {}
