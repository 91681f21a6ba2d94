//! Slow, independent reference implementations. They share the monomial and
//! ideal types with the fast paths but none of the algorithms beyond
//! canonicalization of the final answer.

use std::collections::{BTreeMap, BTreeSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exponent::Exponent;
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::stanley_reisner::SquareFreeIdeal;

/// Seed of the default randomized suite.
pub const DEFAULT_SEED: u64 = 0x5eed_f20b;

fn divides(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn member(gens: &[Vec<u64>], m: &[u64]) -> bool {
    gens.iter().any(|g| divides(g, m))
}

fn raw<E: Exponent>(ideal: &MonomialIdeal<E>) -> Vec<Vec<u64>> {
    ideal.generators().iter().map(Monomial::to_u64_vec).collect()
}

fn rebuild<E: Exponent>(nvars: usize, vectors: Vec<Vec<u64>>) -> Result<MonomialIdeal<E>> {
    MonomialIdeal::from_exponents(nvars, &vectors)
}

/// `(A : B)` by testing the definition `m · b ∈ A` for every `b` on a grid
/// of candidate exponent vectors. In each coordinate a minimal generator of
/// the colon takes the value `0` or some `max(a_i - b_i, 0)`, so the grid of
/// those values contains all of them.
pub fn colon_direct<E: Exponent>(a: &MonomialIdeal<E>, b: &MonomialIdeal<E>) -> Result<MonomialIdeal<E>> {
    if a.nvars() != b.nvars() {
        return Err(Error::ContextMismatch { expected: a.nvars(), found: b.nvars() });
    }
    if b.is_zero() {
        return Err(Error::ZeroColon);
    }
    let n = a.nvars();
    let (ag, bg) = (raw(a), raw(b));
    let axes: Vec<Vec<u64>> = (0..n)
        .map(|i| {
            let mut vals: BTreeSet<u64> = BTreeSet::from([0]);
            for g in &ag {
                for h in &bg {
                    vals.insert(g[i].saturating_sub(h[i]));
                }
            }
            vals.into_iter().collect()
        })
        .collect();

    let mut found = Vec::new();
    let mut idx = vec![0usize; n];
    loop {
        let m: Vec<u64> = (0..n).map(|i| axes[i][idx[i]]).collect();
        let ok = bg.iter().all(|h| {
            let prod: Vec<u64> = m.iter().zip(h).map(|(x, y)| x + y).collect();
            member(&ag, &prod)
        });
        if ok {
            found.push(m);
        }
        // odometer
        let mut i = 0;
        loop {
            if i == n {
                return rebuild(n, found);
            }
            idx[i] += 1;
            if idx[i] < axes[i].len() {
                break;
            }
            idx[i] = 0;
            i += 1;
        }
    }
}

/// `L_e` by expanding every composition into every product of generators,
/// canonicalizing only at the end. `k[β]` must hold `K_β` for `1 ≤ β < e`.
pub fn le_bruteforce<E: Exponent>(
    k: &BTreeMap<u32, MonomialIdeal<E>>,
    p: u64,
    e: u32,
) -> Result<MonomialIdeal<E>> {
    let n = k
        .values()
        .next()
        .map(MonomialIdeal::nvars)
        .ok_or_else(|| Error::Precondition("no K_β supplied".into()))?;
    let mut all: Vec<Vec<u64>> = Vec::new();
    let mut stack: Vec<(u32, u32, Vec<u64>)> = Vec::new();
    // (sum so far, parts so far, running product)
    stack.push((0, 0, vec![0; n]));
    while let Some((sum, parts, prod)) = stack.pop() {
        if sum == e {
            if parts >= 2 {
                all.push(prod);
            }
            continue;
        }
        let twist = p
            .checked_pow(sum)
            .ok_or(Error::Overflow { exponent: p, q: u64::from(sum) })?;
        for beta in 1..e.min(e - sum + 1) {
            let kb = k
                .get(&beta)
                .ok_or_else(|| Error::Precondition(format!("K_{beta} not supplied")))?;
            for g in raw(kb) {
                let mut next = prod.clone();
                for (x, y) in next.iter_mut().zip(&g) {
                    *x = y
                        .checked_mul(twist)
                        .and_then(|t| x.checked_add(t))
                        .ok_or(Error::Overflow { exponent: *y, q: twist })?;
                }
                stack.push((sum + beta, parts + 1, next));
            }
        }
    }
    rebuild(n, all)
}

/// `μ(A / B)` as the number of monomials of `A` outside `B + m·A`, where
/// `m` is the maximal ideal. Only the box below the lcm of the generators of
/// `A` (and degree at most the largest generator degree) is scanned: outside
/// it a monomial of `A` is divisible by a variable times a member of `A`.
pub fn mu_bruteforce<E: Exponent>(a: &MonomialIdeal<E>, b: &MonomialIdeal<E>) -> Result<usize> {
    if a.nvars() != b.nvars() {
        return Err(Error::ContextMismatch { expected: a.nvars(), found: b.nvars() });
    }
    let (ag, bg) = (raw(a), raw(b));
    if !bg.iter().all(|g| member(&ag, g)) {
        return Err(Error::Precondition("mu_bruteforce needs B ⊆ A".into()));
    }
    if ag.is_empty() {
        return Ok(0);
    }
    let n = a.nvars();
    let bound: Vec<u64> = (0..n).map(|i| ag.iter().map(|g| g[i]).max().unwrap_or(0)).collect();
    let max_deg: u64 = ag.iter().map(|g| g.iter().sum::<u64>()).max().unwrap_or(0);

    let mut count = 0usize;
    let mut m = vec![0u64; n];
    let mut deg = 0u64;
    loop {
        if deg <= max_deg && member(&ag, &m) && !member(&bg, &m) {
            let in_ma = (0..n).any(|i| {
                if m[i] == 0 {
                    return false;
                }
                m[i] -= 1;
                let hit = member(&ag, &m);
                m[i] += 1;
                hit
            });
            if !in_ma {
                count += 1;
            }
        }
        let mut i = 0;
        loop {
            if i == n {
                return Ok(count);
            }
            if m[i] < bound[i] {
                m[i] += 1;
                deg += 1;
                break;
            }
            deg -= m[i];
            m[i] = 0;
            i += 1;
        }
    }
}

/// Reproducible square-free test ideals: `n` uniform in `3..=6`, 2 to 5
/// generators, each supported on a uniform subset of size 2 or 3. Duplicate
/// ideals are skipped.
pub fn random_squarefree_ideals(seed: u64, count: usize) -> Vec<SquareFreeIdeal<u64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = BTreeSet::new();
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = rng.gen_range(3..=6usize);
        let ngens = rng.gen_range(2..=5usize);
        let gens: Vec<Vec<u64>> = (0..ngens)
            .map(|_| {
                let size = rng.gen_range(2..=3usize);
                let mut support: Vec<usize> = (0..n).collect();
                for i in 0..size {
                    let j = rng.gen_range(i..n);
                    support.swap(i, j);
                }
                let mut v = vec![0u64; n];
                for &i in &support[..size] {
                    v[i] = 1;
                }
                v
            })
            .collect();
        let Ok(ideal) = MonomialIdeal::<u64>::from_exponents(n, &gens) else {
            continue;
        };
        let Ok(sf) = SquareFreeIdeal::new(ideal) else {
            continue;
        };
        if seen.insert((n, sf.ideal().to_u64_vecs())) {
            out.push(sf);
        }
    }
    out
}


/// Compares the fast paths with the oracles for `e = 1..=e_max` in the ring
/// of used variables. Returns one line per disagreement.
pub fn cross_check(ideal: &SquareFreeIdeal<u64>, p: u64, e_max: u32) -> Result<Vec<String>> {
    use crate::frobenius::{colon_abz, le_sequence};
    use crate::ring::frobenius_power;
    use crate::stanley_reisner::{minimal_primes, restrict_variables};

    let (ideal, _) = restrict_variables(ideal)?;
    let d = minimal_primes(&ideal)?;
    let i = ideal.ideal();
    let mut ks = Vec::new();
    let mut direct = BTreeMap::new();
    let mut mismatches = Vec::new();
    for e in 1..=e_max {
        let q = frobenius_power(p, e)?;
        let fast = colon_abz(&ideal, &d, q)?;
        let slow = colon_direct(&i.bracket_power(q)?, i)?;
        if fast != slow {
            mismatches.push(format!("e = {e}: colon formula {fast} vs direct colon {slow}"));
        }
        ks.push(fast);
        direct.insert(e, slow);
    }
    let ls = le_sequence(&ks, p)?;
    for e in 1..=e_max {
        let q = frobenius_power(p, e)?;
        let idx = e as usize - 1;
        let slow = le_bruteforce(&direct, p, e)?;
        if ls[idx] != slow {
            mismatches.push(format!("e = {e}: L_e {} vs expansion {slow}", ls[idx]));
        }
        let lower = ls[idx].sum(&i.bracket_power(q)?)?;
        let fast_mu = ks[idx].mu_quotient(&lower)?;
        let slow_mu = mu_bruteforce(&ks[idx], &lower)?;
        if fast_mu != slow_mu {
            mismatches.push(format!("e = {e}: mu {fast_mu} vs monomial count {slow_mu}"));
        }
    }
    Ok(mismatches)
}
