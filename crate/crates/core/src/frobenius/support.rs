//! Support sets of `J_q` and the structural lemmas about its generators.

use crate::error::{Error, Result};
use crate::exponent::Exponent;
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

/// `Γ`: the supports of the minimal generators of `J_q` (0-based indices,
/// sorted, deduplicated).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SupportSet {
    pub gamma: Vec<Vec<usize>>,
    /// `Γ ≠ ∅` and no element strictly contains another.
    pub is_minimal: bool,
}

fn strict_subset(a: &[usize], b: &[usize]) -> bool {
    a.len() < b.len() && a.iter().all(|i| b.binary_search(i).is_ok())
}

fn subset(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|i| b.binary_search(i).is_ok())
}

pub fn support_set<E: Exponent>(jq: &MonomialIdeal<E>) -> SupportSet {
    let mut gamma: Vec<Vec<usize>> = jq.generators().iter().map(Monomial::support).collect();
    gamma.sort();
    gamma.dedup();
    let is_minimal = !gamma.is_empty()
        && gamma.iter().all(|g| !gamma.iter().any(|h| strict_subset(h, g)));
    SupportSet { gamma, is_minimal }
}

/// `M_e(γ)`: the part of `J_q` generated by minimal generators whose support
/// lies inside `gamma`. `gamma` must be the support of a generator.
pub fn m_e_gamma<E: Exponent>(jq: &MonomialIdeal<E>, gamma: &[usize]) -> Result<MonomialIdeal<E>> {
    let mut gamma = gamma.to_vec();
    gamma.sort_unstable();
    if !jq.generators().iter().any(|g| g.support() == gamma) {
        return Err(Error::Precondition(format!(
            "support {gamma:?} is not the support of a generator of J_q"
        )));
    }
    let gens = jq
        .generators()
        .iter()
        .filter(|g| subset(&g.support(), &gamma))
        .cloned();
    MonomialIdeal::minimalize(jq.nvars(), gens)
}

fn has_q_q1_zero<E: Exponent>(g: &Monomial<E>, q: u64) -> bool {
    let exps: Vec<u64> = g.exponents().iter().map(|a| a.to_u64_lossless()).collect();
    exps.contains(&q) && exps.contains(&(q - 1)) && exps.contains(&0)
}

/// `J_q ≠ 0` exactly when some generator of `(I^[q] : I)` has an exponent
/// equal to `q`, one equal to `q - 1` and one equal to `0`.
pub fn check_lemma_q<E: Exponent>(jq: &MonomialIdeal<E>, kq: &MonomialIdeal<E>, q: u64) -> bool {
    let witness = kq.generators().iter().any(|g| has_q_q1_zero(g, q));
    !jq.is_zero() == witness
}

/// Whenever `supp(γ') ⊊ supp(γ)` for generators `γ', γ` of `J_q`, some
/// variable has degree `q - 1` in `γ` and degree `q` in `γ'`.
pub fn check_lemma_claim<E: Exponent>(jq: &MonomialIdeal<E>, q: u64) -> bool {
    claim_failures(jq, q).is_empty()
}

/// Pairs `(γ', γ)` violating the witness condition.
pub(crate) fn claim_failures<E: Exponent>(
    jq: &MonomialIdeal<E>,
    q: u64,
) -> Vec<(Monomial<E>, Monomial<E>)> {
    let gens = jq.generators();
    let supports: Vec<Vec<usize>> = gens.iter().map(Monomial::support).collect();
    let mut bad = Vec::new();
    for (a, inner) in gens.iter().enumerate() {
        for (b, outer) in gens.iter().enumerate() {
            if !strict_subset(&supports[a], &supports[b]) {
                continue;
            }
            let witnessed = (0..jq.nvars()).any(|k| {
                outer.exponent(k).to_u64_lossless() + 1 == q
                    && inner.exponent(k).to_u64_lossless() == q
            });
            if !witnessed {
                bad.push((inner.clone(), outer.clone()));
            }
        }
    }
    bad
}
