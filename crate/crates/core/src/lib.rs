//! Exact computation of the Frobenius algebra data of Stanley-Reisner rings.
//!
//! Frobenius operators of order `e` on the injective hull of the residue
//! field of `R = S/I` correspond to `(I^[q] : I) / I^[q]` with `q = p^e`, so
//! everything reduces to monomial ideal arithmetic. The crate computes the
//! colon ideals, the new-generator ideal `J_q`, the lower-degree ideal `L_e`,
//! the complexity sequence `c_e`, the case classification, support sets and
//! the generating function, and checks the stabilization of `c_e` for
//! `e ≥ 2` on concrete inputs.
//!
//! Monomial arithmetic is generic over the unsigned exponent type; the
//! aliases below fix it to `u64`.

pub mod cli;
pub mod error;
pub mod exponent;
pub mod frobenius;
pub mod ideal;
pub mod monomial;
pub mod oracle;
pub mod ring;
pub mod stanley_reisner;

pub use error::{Error, Result};
pub use exponent::Exponent;
pub use ring::RingContext;
pub use stanley_reisner::{Decomposition, PrimeSupport, VariableMap};

pub type Monomial = monomial::Monomial<u64>;
pub type MonomialIdeal = ideal::MonomialIdeal<u64>;
pub type SquareFreeIdeal = stanley_reisner::SquareFreeIdeal<u64>;
pub type ComplexityReport = frobenius::ComplexityReport<u64>;
pub type FrobeniusDegreeData = frobenius::FrobeniusDegreeData<u64>;
