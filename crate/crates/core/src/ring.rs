use crate::error::{Error, Result};

/// Largest supported Frobenius power `q = p^e`.
pub const MAX_FROBENIUS_POWER: u64 = 1 << 40;

/// Number of variables and the characteristic. The coefficient field never
/// enters the monomial computations, so it is not recorded.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RingContext {
    nvars: usize,
    p: u64,
}

impl RingContext {
    pub fn new(nvars: usize, p: u64) -> Result<Self> {
        if nvars == 0 {
            return Err(Error::NoVariables);
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Self { nvars, p })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn q(&self, e: u32) -> Result<u64> {
        frobenius_power(self.p, e)
    }
}

/// Trial division; characteristics are small.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// `p^e`, refusing anything above [`MAX_FROBENIUS_POWER`].
pub fn frobenius_power(p: u64, e: u32) -> Result<u64> {
    match p.checked_pow(e) {
        Some(q) if q <= MAX_FROBENIUS_POWER => Ok(q),
        _ => Err(Error::PowerTooLarge { p, e }),
    }
}
