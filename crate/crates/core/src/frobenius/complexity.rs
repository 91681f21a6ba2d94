//! Complexity sequence, classification and generating function.

use std::fmt;

use super::{degree_data, extract_jq, colon_abz, top_power, FrobeniusDegreeData, SupportSet};
use crate::error::{Error, Result};
use crate::exponent::Exponent;
use crate::ideal::MonomialIdeal;
use crate::ring::{frobenius_power, is_prime};
use crate::stanley_reisner::{minimal_primes, restrict_variables, Decomposition, SquareFreeIdeal, VariableMap};

/// The four shapes of `(I^[q] : I)`, by prime heights and `J_p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Case {
    /// All heights > 1, `J_p = 0`.
    IA,
    /// All heights > 1, `J_p ≠ 0`.
    IB,
    /// Some height 1 and some height > 1.
    II,
    /// All heights 1.
    III,
}

impl Case {
    pub fn as_str(self) -> &'static str {
        match self {
            Case::IA => "I_A",
            Case::IB => "I_B",
            Case::II => "II",
            Case::III => "III",
        }
    }

    pub fn principally_generated(self) -> bool {
        matches!(self, Case::IA | Case::III)
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub case: Case,
    pub principally_generated: bool,
    pub jp_is_zero: bool,
    /// Literal reading of the case (i.b) side condition: `J_p ⊆ I^[p] + (x^1)^{p-1}`.
    pub jp_in_bracket_plus_top: bool,
    /// Literal reading of the case (ii) side condition: `J_p ⊆ (x^1)^{p-1}`.
    pub jp_in_top: bool,
    pub heights: Vec<usize>,
}

/// Classifies a full-support ideal. Only `e = 1` is needed: the case is the
/// same for every `q`.
pub fn classify<E: Exponent>(
    ideal: &SquareFreeIdeal<E>,
    d: &Decomposition,
    p: u64,
) -> Result<Classification> {
    let k1 = colon_abz(ideal, d, p)?;
    let jp = extract_jq(ideal, p, &k1)?;
    classify_with(ideal, d, p, &jp)
}

fn classify_with<E: Exponent>(
    ideal: &SquareFreeIdeal<E>,
    d: &Decomposition,
    p: u64,
    jp: &MonomialIdeal<E>,
) -> Result<Classification> {
    let heights = d.heights();
    let min = heights.iter().copied().min().unwrap_or(0);
    let max = heights.iter().copied().max().unwrap_or(0);
    let jp_is_zero = jp.is_zero();
    let case = if max == 1 {
        Case::III
    } else if min == 1 {
        Case::II
    } else if jp_is_zero {
        Case::IA
    } else {
        Case::IB
    };
    let top = top_power::<E>(ideal.nvars(), p)?;
    let bracket_plus_top = ideal.ideal().bracket_power(p)?.sum(&top)?;
    Ok(Classification {
        case,
        principally_generated: case.principally_generated(),
        jp_is_zero,
        jp_in_bracket_plus_top: jp.is_subset(&bracket_plus_top)?,
        jp_in_top: jp.is_subset(&top)?,
        heights,
    })
}

/// `cx_F(R)`: `-∞` when no new operators ever appear, `0` otherwise.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FrobeniusComplexity {
    Zero,
    NegativeInfinity,
}

impl FrobeniusComplexity {
    pub fn from_mu(mu: usize) -> Self {
        if mu == 0 {
            FrobeniusComplexity::NegativeInfinity
        } else {
            FrobeniusComplexity::Zero
        }
    }
}

impl fmt::Display for FrobeniusComplexity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FrobeniusComplexity::Zero => f.write_str("0"),
            FrobeniusComplexity::NegativeInfinity => f.write_str("-inf"),
        }
    }
}

/// Which constant term the generating function uses.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum C0Convention {
    /// `c_0 = 0`, matching the complexity sequence.
    #[default]
    Zero,
    /// `c_0 = 1`.
    One,
}

/// `Σ c_e T^e` as a rational function `numerator / denominator`, both given
/// by coefficient lists in increasing powers of `T`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GeneratingFunction {
    pub mu: usize,
    pub convention: C0Convention,
    pub numerator: Vec<i64>,
    pub denominator: Vec<i64>,
}

impl GeneratingFunction {
    /// The first `len` power-series coefficients, by long division.
    pub fn coefficients(&self, len: usize) -> Vec<i64> {
        let d0 = self.denominator[0];
        let mut out: Vec<i64> = Vec::with_capacity(len);
        for k in 0..len {
            let mut acc = self.numerator.get(k).copied().unwrap_or(0);
            for j in 1..self.denominator.len().min(k + 1) {
                acc -= self.denominator[j] * out[k - j];
            }
            out.push(acc / d0);
        }
        out
    }

    pub fn closed_form(&self) -> String {
        let num = render_poly(&self.numerator);
        let den = render_poly(&self.denominator);
        format!("({num})/({den})")
    }
}

fn render_poly(coeffs: &[i64]) -> String {
    let mut s = String::new();
    for (k, &c) in coeffs.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let mag = c.unsigned_abs();
        if s.is_empty() {
            if c < 0 {
                s.push('-');
            }
        } else {
            s.push_str(if c < 0 { " - " } else { " + " });
        }
        let var = match k {
            0 => String::new(),
            1 => "T".into(),
            _ => format!("T^{k}"),
        };
        if var.is_empty() || mag != 1 {
            s.push_str(&mag.to_string());
        }
        s.push_str(&var);
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

/// `((μ+1)T − T²)/(1 − T)`, or `(1 + μT − T²)/(1 − T)` with `c_0 = 1`.
pub fn generating_function(mu: usize, convention: C0Convention) -> GeneratingFunction {
    let m = mu as i64;
    let numerator = match convention {
        C0Convention::Zero => vec![0, m + 1, -1],
        C0Convention::One => vec![1, m, -1],
    };
    GeneratingFunction { mu, convention, numerator, denominator: vec![1, -1] }
}

/// Everything computed about one ideal and characteristic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexityReport<E> {
    pub p: u64,
    pub classification: Classification,
    /// `μ(J_p)`.
    pub mu: usize,
    /// `c_0, ..., c_{e_max}`.
    pub c: Vec<usize>,
    /// Growth sequence `k_e = Σ_{i ≤ e} c_i`.
    pub k: Vec<usize>,
    pub frobenius_complexity: FrobeniusComplexity,
    pub genfun: GeneratingFunction,
    /// `J_p` in the restricted ring.
    pub jp: MonomialIdeal<E>,
    pub support_set: SupportSet,
    pub restriction: VariableMap,
    /// The restricted ideal all data refers to.
    pub restricted: SquareFreeIdeal<E>,
    pub decomposition: Decomposition,
    pub degrees: Vec<FrobeniusDegreeData<E>>,
}

impl<E: Exponent> ComplexityReport<E> {
    pub fn case(&self) -> Case {
        self.classification.case
    }

    /// Equality of everything except the map back to the ambient ring.
    pub fn eq_modulo_index_map(&self, other: &Self) -> bool {
        self.p == other.p
            && self.classification == other.classification
            && self.mu == other.mu
            && self.c == other.c
            && self.k == other.k
            && self.frobenius_complexity == other.frobenius_complexity
            && self.genfun == other.genfun
            && self.jp == other.jp
            && self.support_set == other.support_set
            && self.restricted == other.restricted
            && self.decomposition == other.decomposition
            && self.degrees == other.degrees
    }

    /// Restricted variables as 1-based ambient indices.
    pub fn restricted_variables(&self) -> Vec<usize> {
        self.restriction.used.iter().map(|i| i + 1).collect()
    }
}

/// The complexity sequence `c_0 = 0, c_1, ..., c_{e_max}` with
/// `c_e = μ(K_e / (L_e + I^[q]))`, computed in the ring of used variables.
pub fn complexity_sequence<E: Exponent>(
    ideal: &SquareFreeIdeal<E>,
    p: u64,
    e_max: u32,
) -> Result<ComplexityReport<E>> {
    complexity_sequence_with(ideal, p, e_max, C0Convention::Zero)
}

pub fn complexity_sequence_with<E: Exponent>(
    ideal: &SquareFreeIdeal<E>,
    p: u64,
    e_max: u32,
    convention: C0Convention,
) -> Result<ComplexityReport<E>> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if e_max == 0 {
        return Err(Error::Precondition("e_max must be at least 1".into()));
    }
    frobenius_power(p, e_max)?;
    let (restricted, restriction) = restrict_variables(ideal)?;
    let decomposition = minimal_primes(&restricted)?;
    let degrees = degree_data(&restricted, &decomposition, p, e_max)?;
    let jp = degrees[0].jq.clone();
    let mu = jp.num_generators();

    let mut c = vec![0usize];
    c.extend(degrees.iter().map(|d| d.c));
    let k = c
        .iter()
        .scan(0usize, |acc, &x| {
            *acc += x;
            Some(*acc)
        })
        .collect();

    let classification = classify_with(&restricted, &decomposition, p, &jp)?;
    Ok(ComplexityReport {
        p,
        classification,
        mu,
        c,
        k,
        frobenius_complexity: FrobeniusComplexity::from_mu(mu),
        genfun: generating_function(mu, convention),
        support_set: super::support_set(&jp),
        jp,
        restriction,
        restricted,
        decomposition,
        degrees,
    })
}
