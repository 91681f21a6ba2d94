//! Monomials as exponent vectors.

use std::fmt;

use crate::error::{Error, Result};
use crate::exponent::Exponent;

/// `x_1^{a_1} ... x_n^{a_n}`, stored as the exponent vector `(a_1, ..., a_n)`.
///
/// The derived ordering is lexicographic on exponent vectors, which is the
/// canonical generator order of [`MonomialIdeal`](crate::ideal::MonomialIdeal).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial<E> {
    exponents: Vec<E>,
}

impl<E: Exponent> Monomial<E> {
    pub fn new(exponents: Vec<E>) -> Self {
        Self { exponents }
    }

    /// The unit monomial `1` in `nvars` variables.
    pub fn one(nvars: usize) -> Self {
        Self { exponents: vec![E::zero(); nvars] }
    }

    /// The single variable `x_i` (0-based index).
    pub fn variable(nvars: usize, index: usize) -> Self {
        let mut m = Self::one(nvars);
        m.exponents[index] = E::one();
        m
    }

    /// `x^alpha` for a 0/1 indicator of the given support.
    pub fn from_support(nvars: usize, support: &[usize]) -> Self {
        let mut m = Self::one(nvars);
        for &i in support {
            m.exponents[i] = E::one();
        }
        m
    }

    /// Converts from a `u64` exponent vector, failing if an entry does not fit.
    pub fn try_from_u64(exponents: &[u64]) -> Result<Self> {
        exponents
            .iter()
            .map(|&a| E::from_u64(a).ok_or(Error::Overflow { exponent: a, q: 1 }))
            .collect::<Result<Vec<_>>>()
            .map(Self::new)
    }

    pub fn nvars(&self) -> usize {
        self.exponents.len()
    }

    pub fn exponents(&self) -> &[E] {
        &self.exponents
    }

    pub fn exponent(&self, index: usize) -> E {
        self.exponents[index]
    }

    pub fn to_u64_vec(&self) -> Vec<u64> {
        self.exponents.iter().map(|a| a.to_u64_lossless()).collect()
    }

    pub fn is_one(&self) -> bool {
        self.exponents.iter().all(|a| a.is_zero())
    }

    /// Total degree, widened to `u64`.
    pub fn degree(&self) -> u64 {
        self.exponents.iter().map(|a| a.to_u64_lossless()).sum()
    }

    /// Indices of variables with a positive exponent.
    pub fn support(&self) -> Vec<usize> {
        self.exponents
            .iter()
            .enumerate()
            .filter(|(_, a)| !a.is_zero())
            .map(|(i, _)| i)
            .collect()
    }

    pub fn is_squarefree(&self) -> bool {
        self.exponents.iter().all(|&a| a <= E::one())
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.nvars() == other.nvars() {
            Ok(())
        } else {
            Err(Error::ContextMismatch { expected: self.nvars(), found: other.nvars() })
        }
    }

    pub fn divides(&self, other: &Self) -> Result<bool> {
        self.check(other)?;
        Ok(self.divides_unchecked(other))
    }

    pub(crate) fn divides_unchecked(&self, other: &Self) -> bool {
        self.exponents.iter().zip(&other.exponents).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.lcm_unchecked(other))
    }

    pub(crate) fn lcm_unchecked(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a.max(b))
    }

    pub fn gcd(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.zip_with(other, |a, b| a.min(b)))
    }

    /// `self / gcd(self, other)`: componentwise `max(a - b, 0)`.
    pub fn quotient(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.quotient_unchecked(other))
    }

    pub(crate) fn quotient_unchecked(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a.saturating_sub(b))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        self.mul_unchecked(other)
    }

    pub(crate) fn mul_unchecked(&self, other: &Self) -> Result<Self> {
        let exponents = self
            .exponents
            .iter()
            .zip(&other.exponents)
            .map(|(&a, &b)| {
                a.checked_add(&b)
                    .ok_or(Error::Overflow { exponent: a.to_u64_lossless(), q: 1 })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { exponents })
    }

    /// The Frobenius image `m^q`.
    pub fn pow(&self, q: u64) -> Result<Self> {
        let qe = E::from_u64(q)
            .ok_or(Error::Overflow { exponent: 1, q })?;
        let exponents = self
            .exponents
            .iter()
            .map(|&a| {
                a.checked_mul(&qe)
                    .ok_or(Error::Overflow { exponent: a.to_u64_lossless(), q })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { exponents })
    }

    fn zip_with(&self, other: &Self, f: impl Fn(E, E) -> E) -> Self {
        let exponents = self
            .exponents
            .iter()
            .zip(&other.exponents)
            .map(|(&a, &b)| f(a, b))
            .collect();
        Self { exponents }
    }
}

impl<E: Exponent> fmt::Display for Monomial<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, a) in self.exponents.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if a.is_one() {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, a)?;
            }
        }
        Ok(())
    }
}
