//! Scalar abstractions shared by the exact linear algebra and the simplex
//! solver. Everything in the crate runs over exact scalars; the traits are
//! generic so the same kernels can be exercised over machine rationals,
//! big rationals or, for cross-checks only, floats.

use std::fmt::Debug;

use num_traits::{Num, Signed};

use crate::error::{Error, Result};

/// A field with a total order, as needed by pivoting rules.
pub trait OrderedField: Clone + Num + Signed + PartialOrd + Debug {}

impl<T> OrderedField for T where T: Clone + Num + Signed + PartialOrd + Debug {}

/// A field; only the four operations and equality are used.
pub trait Field: Clone + Num + Debug {}

impl<T> Field for T where T: Clone + Num + Debug {}

/// Coefficient field for simplicial homology, named by its characteristic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Coefficients {
    /// The rationals (characteristic 0).
    #[default]
    Rational,
    /// The prime field of the given order.
    Prime(u64),
}

impl Coefficients {
    /// `0` selects the rationals, a prime `p` selects GF(p).
    pub fn from_characteristic(p: u64) -> Result<Self> {
        match p {
            0 => Ok(Coefficients::Rational),
            p if is_prime(p) && p < (1 << 31) => Ok(Coefficients::Prime(p)),
            p => Err(Error::ParameterOutOfRange(format!(
                "field characteristic must be 0 or a prime below 2^31, got {p}"
            ))),
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Coefficients::Rational => 0,
            Coefficients::Prime(p) => *p,
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn characteristic_parsing() {
        assert_eq!(Coefficients::from_characteristic(0), Ok(Coefficients::Rational));
        assert_eq!(Coefficients::from_characteristic(7), Ok(Coefficients::Prime(7)));
        assert!(Coefficients::from_characteristic(1).is_err());
        assert!(Coefficients::from_characteristic(9).is_err());
    }
}
