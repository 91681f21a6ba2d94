//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line.
//! Every check is exact; the only thresholds are the wall-clock budgets.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use sr_frobenius::frobenius::{
    colon_abz, complexity_sequence, extract_jq, support_set, transport_p_to_q,
    verify_main_theorem, Case, FrobeniusComplexity,
};
use sr_frobenius::oracle::{cross_check, random_squarefree_ideals, DEFAULT_SEED};
use sr_frobenius::stanley_reisner::{minimal_primes, restrict_variables};
use sr_frobenius::{Monomial, MonomialIdeal, SquareFreeIdeal};

const RANDOM_SUITE: usize = 100;

fn example_ex() -> SquareFreeIdeal {
    SquareFreeIdeal::from_supports(5, &[&[0, 4], &[1, 4], &[1, 2], &[1, 3]]).unwrap()
}

fn second_example() -> SquareFreeIdeal {
    SquareFreeIdeal::from_supports(4, &[&[0, 1], &[0, 2], &[1, 3]]).unwrap()
}

fn principal() -> SquareFreeIdeal {
    SquareFreeIdeal::from_supports(2, &[&[0, 1]]).unwrap()
}

/// 'q' → q, 'r' → q-1, '0' → 0, one character per variable.
fn sym_ideal(n: usize, patterns: &[&str], q: u64) -> MonomialIdeal {
    let gens = patterns.iter().map(|p| {
        Monomial::new(
            p.chars()
                .map(|c| match c {
                    'q' => q,
                    'r' => q - 1,
                    _ => 0,
                })
                .collect(),
        )
    });
    MonomialIdeal::minimalize(n, gens).unwrap()
}

const EX_COLON: [&str; 9] =
    ["q000q", "0q00q", "0qq00", "0q0q0", "rr00q", "0qrrr", "rr0qr", "rrq0r", "rrrrr"];
const EX_JQ: [&str; 4] = ["rr00q", "0qrrr", "rr0qr", "rrq0r"];

fn report(id: u32, title: &str, result: Result<(), String>) {
    match &result {
        Ok(()) => println!("acceptance {id}: PASS  {title}"),
        Err(why) => println!("acceptance {id}: FAIL  {title}: {why}"),
    }
    if let Err(why) = result {
        panic!("criterion {id} failed: {why}");
    }
}

fn within(start: Instant, budget: Duration) -> Result<(), String> {
    let took = start.elapsed();
    if took <= budget {
        Ok(())
    } else {
        Err(format!("took {took:?}, budget {budget:?}"))
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

#[test]
fn criterion_1_golden_colon() {
    let run = || -> Result<(), String> {
        let start = Instant::now();
        let i = example_ex();
        let d = minimal_primes(&i).map_err(|e| e.to_string())?;
        for p in [2u64, 3] {
            let k = colon_abz(&i, &d, p).map_err(|e| e.to_string())?;
            let expect = sym_ideal(5, &EX_COLON, p);
            ensure(k == expect, || format!("p = {p}: colon {k}, expected {expect}"))?;
            ensure(k.num_generators() == 9, || "colon must have 9 generators".into())?;
            let jq = extract_jq(&i, p, &k).map_err(|e| e.to_string())?;
            let expect = sym_ideal(5, &EX_JQ, p);
            ensure(jq == expect, || format!("p = {p}: J_q {jq}, expected {expect}"))?;
        }
        within(start, Duration::from_secs(1))
    };
    report(1, "golden colon and J_q for (x1x5, x2x5, x2x3, x2x4)", run());
}

#[test]
fn criterion_2_golden_jq_and_support_sets() {
    let run = || -> Result<(), String> {
        let i = second_example();
        let d = minimal_primes(&i).map_err(|e| e.to_string())?;
        for p in [2u64, 3] {
            let k = colon_abz(&i, &d, p).map_err(|e| e.to_string())?;
            let jq = extract_jq(&i, p, &k).map_err(|e| e.to_string())?;
            let expect = sym_ideal(4, &["qrr0", "rq0r"], p);
            ensure(jq == expect, || format!("p = {p}: J_q {jq}, expected {expect}"))?;
            let s = support_set(&jq);
            ensure(s.gamma == vec![vec![0, 1, 2], vec![0, 1, 3]], || format!("Γ = {:?}", s.gamma))?;
            ensure(s.is_minimal, || "Γ should be minimal".into())?;
        }
        let s = support_set(&sym_ideal(5, &EX_JQ, 2));
        let mut expect = vec![vec![0, 1, 4], vec![1, 2, 3, 4], vec![0, 1, 3, 4], vec![0, 1, 2, 4]];
        expect.sort();
        ensure(s.gamma == expect, || format!("Γ = {:?}", s.gamma))?;
        ensure(!s.is_minimal, || "Γ should not be minimal".into())
    };
    report(2, "golden J_q of (x1x2, x1x3, x2x4) and both support sets", run());
}

#[test]
fn criterion_3_stabilization() {
    let run = || -> Result<(), String> {
        let start = Instant::now();
        let cases: [(SquareFreeIdeal, u64, u32, Vec<usize>); 4] = [
            (example_ex(), 2, 4, vec![0, 5, 4, 4, 4]),
            (second_example(), 2, 4, vec![0, 3, 2, 2, 2]),
            (example_ex(), 3, 3, vec![0, 5, 4, 4]),
            (second_example(), 3, 3, vec![0, 3, 2, 2]),
        ];
        for (i, p, e_max, expect) in cases {
            let r = complexity_sequence(&i, p, e_max).map_err(|e| e.to_string())?;
            ensure(r.c == expect, || format!("p = {p}: c = {:?}, expected {expect:?}", r.c))?;
        }
        within(start, Duration::from_secs(30))
    };
    report(3, "complexity sequences {0,5,4,4,4} and {0,3,2,2,2}", run());
}

#[test]
fn criterion_4_principal_case() {
    let run = || -> Result<(), String> {
        let r = complexity_sequence(&principal(), 3, 3).map_err(|e| e.to_string())?;
        ensure(r.case() == Case::III, || format!("case {}", r.case()))?;
        ensure(r.mu == 0, || format!("mu = {}", r.mu))?;
        ensure(r.c == vec![0, 1, 0, 0], || format!("c = {:?}", r.c))?;
        ensure(r.frobenius_complexity == FrobeniusComplexity::NegativeInfinity, || {
            format!("cx_F = {}", r.frobenius_complexity)
        })?;
        let coeffs = r.genfun.coefficients(6);
        ensure(coeffs == vec![0, 1, 0, 0, 0, 0], || format!("coefficients {coeffs:?}"))
    };
    report(4, "principal case (x1x2), p = 3", run());
}

#[test]
fn criterion_5_oracle_equivalence() {
    let run = || -> Result<(), String> {
        let start = Instant::now();
        let suite = random_squarefree_ideals(DEFAULT_SEED, RANDOM_SUITE);
        ensure(suite.len() >= 100, || "suite too small".into())?;
        for i in &suite {
            ensure(i.nvars() <= 6, || "n > 6".into())?;
            for p in [2u64, 3] {
                let bad = cross_check(i, p, 2).map_err(|e| e.to_string())?;
                ensure(bad.is_empty(), || format!("{} p = {p}: {bad:?}", i.ideal()))?;
            }
        }
        within(start, Duration::from_secs(120))
    };
    report(5, "colon, L_e and μ agree with the brute-force oracles", run());
}

#[test]
fn criterion_6_main_theorem_verifier() {
    let run = || -> Result<(), String> {
        let mut jobs: Vec<(SquareFreeIdeal, u64, u32)> = vec![
            (example_ex(), 2, 4),
            (example_ex(), 3, 3),
            (second_example(), 2, 4),
            (second_example(), 3, 3),
        ];
        for i in random_squarefree_ideals(DEFAULT_SEED, RANDOM_SUITE) {
            jobs.push((i.clone(), 2, 3));
            jobs.push((i, 3, 3));
        }
        let mut nonzero = 0;
        for (i, p, e_max) in &jobs {
            let r = verify_main_theorem(i, *p, *e_max).map_err(|e| e.to_string())?;
            ensure(r.passed(), || format!("{} p = {p}: {:?}", i.ideal(), r.failures()))?;
            if r.mu > 0 {
                nonzero += 1;
            }
        }
        // The random suite must actually exercise J_p ≠ 0.
        ensure(nonzero > jobs.len() / 4, || format!("only {nonzero} instances with J_p ≠ 0"))
    };
    report(6, "stabilization verifier and lemma checks report zero failures", run());
}

#[test]
fn criterion_7_flat_invariance() {
    let run = || -> Result<(), String> {
        let mut ideals = vec![example_ex(), second_example(), principal()];
        ideals.extend(random_squarefree_ideals(DEFAULT_SEED, RANDOM_SUITE));
        for i in &ideals {
            let (base, _) = restrict_variables(i).map_err(|e| e.to_string())?;
            let wide = i.embed(2).map_err(|e| e.to_string())?;
            for p in [2u64, 3] {
                let a = complexity_sequence(i, p, 3).map_err(|e| e.to_string())?;
                let b = complexity_sequence(&wide, p, 3).map_err(|e| e.to_string())?;
                ensure(a.eq_modulo_index_map(&b), || format!("{} p = {p}", i.ideal()))?;
                ensure(b.restriction.ambient_nvars == i.nvars() + 2, || "map".into())?;
                ensure(b.restricted == base, || "restricted ideal differs".into())?;
            }
        }
        Ok(())
    };
    report(7, "two unused variables leave the report unchanged", run());
}

#[test]
fn criterion_8_transport() {
    let run = || -> Result<(), String> {
        let mut ideals = vec![example_ex(), second_example(), principal()];
        ideals.extend(random_squarefree_ideals(DEFAULT_SEED, RANDOM_SUITE));
        for i in &ideals {
            let (i, _) = restrict_variables(i).map_err(|e| e.to_string())?;
            let d = minimal_primes(&i).map_err(|e| e.to_string())?;
            for p in [2u64, 3] {
                let mut js = BTreeMap::new();
                for e in 1..=4u32 {
                    let q = p.pow(e);
                    let k = colon_abz(&i, &d, q).map_err(|e| e.to_string())?;
                    js.insert(e, extract_jq(&i, q, &k).map_err(|e| e.to_string())?);
                }
                for (e, jq) in &js {
                    let t = transport_p_to_q(&js[&1], p, p.pow(*e)).map_err(|e| e.to_string())?;
                    ensure(&t == jq, || format!("{} p = {p} e = {e}: {t} vs {jq}", i.ideal()))?;
                }
            }
        }
        Ok(())
    };
    report(8, "J_p transported to q matches J_q for e ≤ 4", run());
}
