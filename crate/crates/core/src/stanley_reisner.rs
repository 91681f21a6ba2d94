//! Square-free monomial ideals and their minimal primes.
//!
//! The minimal primes of a square-free ideal are the primes `(x_i : i ∈ C)`
//! for the minimal vertex covers `C` of the hypergraph whose edges are the
//! generator supports.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::exponent::Exponent;
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

/// A proper, nonzero monomial ideal with square-free generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SquareFreeIdeal<E> {
    ideal: MonomialIdeal<E>,
}

impl<E: Exponent> SquareFreeIdeal<E> {
    pub fn new(ideal: MonomialIdeal<E>) -> Result<Self> {
        validate_squarefree(ideal)
    }

    /// Builds from 0/1 generator vectors.
    pub fn from_supports(nvars: usize, supports: &[&[usize]]) -> Result<Self> {
        let gens = supports.iter().map(|s| Monomial::from_support(nvars, s));
        Self::new(MonomialIdeal::minimalize(nvars, gens)?)
    }

    pub fn ideal(&self) -> &MonomialIdeal<E> {
        &self.ideal
    }

    pub fn nvars(&self) -> usize {
        self.ideal.nvars()
    }

    pub fn into_inner(self) -> MonomialIdeal<E> {
        self.ideal
    }

    /// Generator supports, the edges of the associated hypergraph.
    pub fn edges(&self) -> Vec<Vec<usize>> {
        self.ideal.generators().iter().map(Monomial::support).collect()
    }

    /// Variables that occur in some generator.
    pub fn used_variables(&self) -> Vec<usize> {
        let mut used = vec![false; self.nvars()];
        for g in self.ideal.generators() {
            for i in g.support() {
                used[i] = true;
            }
        }
        (0..self.nvars()).filter(|&i| used[i]).collect()
    }

    /// The same ideal in a ring with `extra` further variables that no
    /// generator touches.
    pub fn embed(&self, extra: usize) -> Result<Self> {
        let n = self.nvars();
        let map: Vec<usize> = (0..n).collect();
        Ok(Self { ideal: self.ideal.remap(n + extra, &map)? })
    }
}

pub fn validate_squarefree<E: Exponent>(ideal: MonomialIdeal<E>) -> Result<SquareFreeIdeal<E>> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    if let Some(index) = ideal.generators().iter().position(|g| !g.is_squarefree()) {
        return Err(Error::NotSquareFree { index });
    }
    Ok(SquareFreeIdeal { ideal })
}

/// The support of a minimal prime `I_α`, with `α ∈ {0,1}^n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PrimeSupport {
    nvars: usize,
    support: Vec<usize>,
}

impl PrimeSupport {
    pub fn new(nvars: usize, mut support: Vec<usize>) -> Result<Self> {
        support.sort_unstable();
        support.dedup();
        if support.is_empty() {
            return Err(Error::Precondition("a prime support needs at least one variable".into()));
        }
        if support.iter().any(|&i| i >= nvars) {
            return Err(Error::Precondition("prime support index out of range".into()));
        }
        Ok(Self { nvars, support })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// 0-based variable indices.
    pub fn support(&self) -> &[usize] {
        &self.support
    }

    pub fn height(&self) -> usize {
        self.support.len()
    }

    pub fn alpha(&self) -> Vec<u8> {
        let mut a = vec![0u8; self.nvars];
        for &i in &self.support {
            a[i] = 1;
        }
        a
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.support.iter().all(|i| other.support.binary_search(i).is_ok())
    }

    pub fn prime_ideal<E: Exponent>(&self) -> MonomialIdeal<E> {
        MonomialIdeal::prime(self.nvars, &self.support)
    }

    /// The face monomial `x^α`.
    pub fn face<E: Exponent>(&self) -> Monomial<E> {
        Monomial::from_support(self.nvars, &self.support)
    }
}

impl Ord for PrimeSupport {
    fn cmp(&self, other: &Self) -> Ordering {
        self.support
            .len()
            .cmp(&other.support.len())
            .then_with(|| self.support.cmp(&other.support))
    }
}

impl PartialOrd for PrimeSupport {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// `I = I_{α_1} ∩ ... ∩ I_{α_r}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub primes: Vec<PrimeSupport>,
    /// The supports together cover every variable.
    pub full_support: bool,
    pub used_variables: Vec<usize>,
}

impl Decomposition {
    pub fn nvars(&self) -> usize {
        self.primes.first().map_or(0, PrimeSupport::nvars)
    }

    pub fn heights(&self) -> Vec<usize> {
        self.primes.iter().map(PrimeSupport::height).collect()
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Choice {
    Open,
    Taken,
    Excluded,
}

/// Enumerates every minimal vertex cover by branching on the uncovered edge
/// with the fewest open vertices. In the `j`-th branch the first `j - 1`
/// vertices of that edge are excluded, so each cover is produced once.
fn covers(edges: &[Vec<usize>], state: &mut Vec<Choice>, out: &mut Vec<Vec<usize>>) {
    let mut best: Option<Vec<usize>> = None;
    for edge in edges {
        if edge.iter().any(|&v| state[v] == Choice::Taken) {
            continue;
        }
        let open: Vec<usize> = edge.iter().copied().filter(|&v| state[v] == Choice::Open).collect();
        if open.is_empty() {
            return;
        }
        if best.as_ref().is_none_or(|b| open.len() < b.len()) {
            best = Some(open);
        }
    }
    let Some(branch) = best else {
        out.push((0..state.len()).filter(|&v| state[v] == Choice::Taken).collect());
        return;
    };
    for &v in &branch {
        state[v] = Choice::Taken;
        covers(edges, state, out);
        state[v] = Choice::Excluded;
    }
    for &v in &branch {
        state[v] = Choice::Open;
    }
}

/// Minimal primes of `I`, sorted by height and then lexicographically. The
/// intersection of the primes is checked against `I`.
pub fn minimal_primes<E: Exponent>(ideal: &SquareFreeIdeal<E>) -> Result<Decomposition> {
    let n = ideal.nvars();
    let edges = ideal.edges();
    let mut found = Vec::new();
    covers(&edges, &mut vec![Choice::Open; n], &mut found);

    let mut minimal: Vec<PrimeSupport> = Vec::new();
    for c in &found {
        let p = PrimeSupport::new(n, c.clone())?;
        let dominated = found.iter().any(|d| {
            d.len() < c.len() && d.iter().all(|v| c.binary_search(v).is_ok())
        });
        if !dominated {
            minimal.push(p);
        }
    }
    minimal.sort();
    minimal.dedup();

    let mut meet = MonomialIdeal::<E>::unit(n);
    for p in &minimal {
        meet = meet.intersection(&p.prime_ideal())?;
    }
    if &meet != ideal.ideal() {
        return Err(Error::DecompositionBug(format!(
            "intersection of primes is {meet}, expected {}",
            ideal.ideal()
        )));
    }

    let used_variables = ideal.used_variables();
    let full_support = used_variables.len() == n;
    Ok(Decomposition { primes: minimal, full_support, used_variables })
}

/// True iff the prime supports cover every variable.
pub fn full_support_check(decomposition: &Decomposition) -> bool {
    let n = decomposition.nvars();
    let mut seen = vec![false; n];
    for p in &decomposition.primes {
        for &i in p.support() {
            seen[i] = true;
        }
    }
    n > 0 && seen.into_iter().all(|s| s)
}

/// Where each variable of a restricted ring came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VariableMap {
    pub ambient_nvars: usize,
    /// `used[j]` is the 0-based ambient index of restricted variable `j`.
    pub used: Vec<usize>,
}

impl VariableMap {
    pub fn is_identity(&self) -> bool {
        self.used.len() == self.ambient_nvars
    }
}

/// Drops the variables no generator uses.
pub fn restrict_variables<E: Exponent>(
    ideal: &SquareFreeIdeal<E>,
) -> Result<(SquareFreeIdeal<E>, VariableMap)> {
    let used = ideal.used_variables();
    let m = used.len();
    let mut back = vec![usize::MAX; ideal.nvars()];
    for (j, &i) in used.iter().enumerate() {
        back[i] = j;
    }
    let gens = ideal.ideal().generators().iter().map(|g| {
        Monomial::new(used.iter().map(|&i| g.exponent(i)).collect())
    });
    let restricted = SquareFreeIdeal::new(MonomialIdeal::minimalize(m, gens)?)?;
    Ok((restricted, VariableMap { ambient_nvars: ideal.nvars(), used }))
}
