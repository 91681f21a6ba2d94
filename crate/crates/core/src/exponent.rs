use std::fmt::{Debug, Display};
use std::hash::Hash;

/// Exponent storage for monomials: any primitive unsigned integer.
///
/// Arithmetic on exponents is checked wherever it can grow (bracket powers,
/// products); truncated subtraction is used for colon division.
pub trait Exponent:
    num_traits::PrimInt + num_traits::Unsigned + Hash + Debug + Display + Default + Send + Sync + 'static
{
    /// Converts a `u64` into this exponent type, `None` if it does not fit.
    fn from_u64(value: u64) -> Option<Self> {
        <Self as num_traits::NumCast>::from(value)
    }

    /// Widens to `u64`. Every supported exponent type fits.
    fn to_u64_lossless(self) -> u64 {
        self.to_u64().expect("unsigned exponent wider than u64")
    }
}

impl<T> Exponent for T where
    T: num_traits::PrimInt
        + num_traits::Unsigned
        + Hash
        + Debug
        + Display
        + Default
        + Send
        + Sync
        + 'static
{
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn narrow_conversion_fails_cleanly() {
        assert_eq!(<u8 as Exponent>::from_u64(255), Some(255u8));
        assert_eq!(<u8 as Exponent>::from_u64(256), None);
        assert_eq!(<u64 as Exponent>::from_u64(u64::MAX), Some(u64::MAX));
    }
}
