//! Checks the stabilization statement and its supporting lemmas on a
//! concrete ideal. Failures are collected, never raised.

use super::support::claim_failures;
use super::{
    abz_intersection, check_lemma_q, compositions, exponents_in_trichotomy, filter_jq,
    le_sequence, m_e_gamma, transport_p_to_q,
};
use crate::error::{Error, Result};
use crate::exponent::Exponent;
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::ring::{frobenius_power, is_prime};
use crate::stanley_reisner::{minimal_primes, restrict_variables, SquareFreeIdeal};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: &'static str, passed: bool, detail: impl Into<String>) -> Self {
        Self { name, passed, detail: detail.into() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeChecks {
    pub e: u32,
    pub q: u64,
    pub c: Option<usize>,
    pub checks: Vec<Check>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub p: u64,
    pub e_max: u32,
    pub mu: usize,
    pub degrees: Vec<DegreeChecks>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.degrees.iter().all(|d| d.checks.iter().all(|c| c.passed))
    }

    pub fn failures(&self) -> Vec<(u32, &Check)> {
        self.degrees
            .iter()
            .flat_map(|d| d.checks.iter().filter(|c| !c.passed).map(move |c| (d.e, c)))
            .collect()
    }

    /// `c_1, ..., c_{e_max}` where they could be computed.
    pub fn c(&self) -> Vec<Option<usize>> {
        self.degrees.iter().map(|d| d.c).collect()
    }
}

fn twisted_product<E: Exponent>(
    factors: &[&MonomialIdeal<E>],
    parts: &[u32],
    p: u64,
) -> Result<MonomialIdeal<E>> {
    let n = factors[0].nvars();
    let mut prod = MonomialIdeal::unit(n);
    let mut shift = 0u32;
    for (f, &b) in factors.iter().zip(parts) {
        prod = prod.product(&f.bracket_power(frobenius_power(p, shift)?)?)?;
        shift += b;
    }
    Ok(prod)
}

fn list<E: Exponent>(ms: &[Monomial<E>]) -> String {
    ms.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

/// Runs every check for `e = 1..=e_max` in the ring of used variables.
pub fn verify_main_theorem<E: Exponent>(
    ideal: &SquareFreeIdeal<E>,
    p: u64,
    e_max: u32,
) -> Result<VerificationReport> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if e_max < 2 {
        return Err(Error::Precondition("verification needs e_max >= 2".into()));
    }
    let (ideal, _) = restrict_variables(ideal)?;
    let d = minimal_primes(&ideal)?;
    let n = ideal.nvars();

    let qs = (1..=e_max).map(|e| frobenius_power(p, e)).collect::<Result<Vec<_>>>()?;
    let ks = qs
        .iter()
        .map(|&q| abz_intersection(&ideal, &d, q))
        .collect::<Result<Vec<_>>>()?;
    let js = qs
        .iter()
        .zip(&ks)
        .map(|(&q, k)| filter_jq(&ideal, q, k).map(|t| t.0))
        .collect::<Result<Vec<_>>>()?;
    let ls = le_sequence(&ks, p)?;
    let jp = &js[0];
    let mu = jp.num_generators();

    let mut degrees = Vec::with_capacity(qs.len());
    for idx in 0..qs.len() {
        let e = idx as u32 + 1;
        let (q, k, jq, le) = (qs[idx], &ks[idx], &js[idx], &ls[idx]);
        let mut checks = Vec::new();

        checks.push(Check::new(
            "exponent_trichotomy",
            exponents_in_trichotomy(k, q),
            format!("(I^[q] : I) = {k}"),
        ));

        let bracket = ideal.ideal().bracket_power(q)?;
        let top = super::top_power::<E>(n, q)?;
        let rebuilt = bracket.sum(jq)?.sum(&top)?;
        checks.push(Check::new(
            "jq_reconstruction",
            &rebuilt == k,
            format!("I^[q] + J_q + (x^1)^(q-1) = {rebuilt}"),
        ));

        checks.push(Check::new("lemma_q", check_lemma_q(jq, k, q), format!("J_q = {jq}")));

        let bad = claim_failures(jq, q);
        checks.push(Check::new(
            "lemma_claim",
            bad.is_empty(),
            bad.iter().map(|(a, b)| format!("{a} ⊊ {b}")).collect::<Vec<_>>().join("; "),
        ));

        match transport_p_to_q(jp, p, q) {
            Ok(t) => checks.push(Check::new("transport", &t == jq, format!("transported {t}"))),
            Err(err) => checks.push(Check::new("transport", false, err.to_string())),
        }

        checks.push(Check::new("le_in_ke", le.is_subset(k)?, String::new()));

        let lower = le.sum(&bracket)?;
        let c = k.mu_quotient(&lower).ok();
        if c.is_none() {
            checks.push(Check::new("c_defined", false, "L_e + I^[q] is not inside K_e"));
        }

        if e == 1 {
            checks.push(Check::new(
                "c1_is_mu_plus_one",
                c == Some(mu + 1),
                format!("c_1 = {c:?}, mu = {mu}"),
            ));
        } else {
            let inside: Vec<Monomial<E>> = jq
                .generators()
                .iter()
                .filter(|g| le.contains_unchecked(g))
                .cloned()
                .collect();
            checks.push(Check::new("jq_not_in_le", inside.is_empty(), list(&inside)));

            checks.push(Check::new(
                "c_bounded_by_mu",
                c.is_some_and(|c| c <= mu),
                format!("c_{e} = {c:?}, mu = {mu}"),
            ));
            checks.push(Check::new(
                "c_equals_mu",
                c == Some(mu),
                format!("c_{e} = {c:?}, mu = {mu}"),
            ));

            let mut mismatches = Vec::new();
            for gamma in jp.generators() {
                let support = gamma.support();
                let target = transport_p_to_q(&MonomialIdeal::principal(gamma.clone()), p, q)?;
                let target = &target.generators()[0];
                let ms = js[..idx]
                    .iter()
                    .map(|j| m_e_gamma(j, &support))
                    .collect::<Result<Vec<_>>>()?;
                for parts in compositions(e) {
                    let kf: Vec<&MonomialIdeal<E>> =
                        parts.iter().map(|&b| &ks[b as usize - 1]).collect();
                    let mf: Vec<&MonomialIdeal<E>> =
                        parts.iter().map(|&b| &ms[b as usize - 1]).collect();
                    let in_k = twisted_product(&kf, &parts, p)?.contains_unchecked(target);
                    let in_m = twisted_product(&mf, &parts, p)?.contains_unchecked(target);
                    if in_k != in_m {
                        mismatches.push(format!("{target} via {parts:?}: K {in_k}, M {in_m}"));
                    }
                }
            }
            checks.push(Check::new("lemma_ge", mismatches.is_empty(), mismatches.join("; ")));
        }

        degrees.push(DegreeChecks { e, q, c, checks });
    }

    Ok(VerificationReport { p, e_max, mu, degrees })
}
