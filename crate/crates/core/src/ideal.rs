//! Monomial ideals in canonical form.
//!
//! Every value holds its unique minimal generating set, sorted ascending by
//! exponent vector, so ideal equality is plain `==`.

use std::fmt;

use crate::error::{Error, Result};
use crate::exponent::Exponent;
use crate::monomial::Monomial;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialIdeal<E> {
    nvars: usize,
    generators: Vec<Monomial<E>>,
}

impl<E: Exponent> MonomialIdeal<E> {
    /// Canonicalizes `gens` into the minimal generating set.
    pub fn minimalize(nvars: usize, gens: impl IntoIterator<Item = Monomial<E>>) -> Result<Self> {
        let gens: Vec<_> = gens.into_iter().collect();
        if let Some(bad) = gens.iter().find(|g| g.nvars() != nvars) {
            return Err(Error::ContextMismatch { expected: nvars, found: bad.nvars() });
        }
        Ok(Self::minimalize_unchecked(nvars, gens))
    }

    pub(crate) fn minimalize_unchecked(nvars: usize, mut gens: Vec<Monomial<E>>) -> Self {
        // A divisor never has larger degree, so scanning by degree lets each
        // candidate be tested only against survivors.
        gens.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
        gens.dedup();
        let mut kept: Vec<Monomial<E>> = Vec::with_capacity(gens.len());
        for g in gens {
            if !kept.iter().any(|k| k.divides_unchecked(&g)) {
                kept.push(g);
            }
        }
        kept.sort();
        Self { nvars, generators: kept }
    }

    pub fn zero(nvars: usize) -> Self {
        Self { nvars, generators: Vec::new() }
    }

    pub fn unit(nvars: usize) -> Self {
        Self { nvars, generators: vec![Monomial::one(nvars)] }
    }

    pub fn principal(m: Monomial<E>) -> Self {
        Self { nvars: m.nvars(), generators: vec![m] }
    }

    /// The maximal ideal `(x_1, ..., x_n)`.
    pub fn maximal(nvars: usize) -> Self {
        let gens = (0..nvars).map(|i| Monomial::variable(nvars, i)).collect();
        Self::minimalize_unchecked(nvars, gens)
    }

    /// The prime `(x_i : i in support)`.
    pub fn prime(nvars: usize, support: &[usize]) -> Self {
        let gens = support.iter().map(|&i| Monomial::variable(nvars, i)).collect();
        Self::minimalize_unchecked(nvars, gens)
    }

    /// Builds an ideal from `u64` exponent vectors of length `nvars`.
    pub fn from_exponents(nvars: usize, vectors: &[Vec<u64>]) -> Result<Self> {
        let gens = vectors
            .iter()
            .map(|v| Monomial::try_from_u64(v))
            .collect::<Result<Vec<_>>>()?;
        Self::minimalize(nvars, gens)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Monomial<E>] {
        &self.generators
    }

    pub fn num_generators(&self) -> usize {
        self.generators.len()
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.generators.len() == 1 && self.generators[0].is_one()
    }

    pub fn to_u64_vecs(&self) -> Vec<Vec<u64>> {
        self.generators.iter().map(Monomial::to_u64_vec).collect()
    }

    /// Largest total degree among the generators, 0 for the zero ideal.
    pub fn max_degree(&self) -> u64 {
        self.generators.iter().map(Monomial::degree).max().unwrap_or(0)
    }

    fn check(&self, nvars: usize) -> Result<()> {
        if self.nvars == nvars {
            Ok(())
        } else {
            Err(Error::ContextMismatch { expected: self.nvars, found: nvars })
        }
    }

    /// Membership: some generator divides `m`.
    pub fn contains(&self, m: &Monomial<E>) -> Result<bool> {
        self.check(m.nvars())?;
        Ok(self.contains_unchecked(m))
    }

    pub(crate) fn contains_unchecked(&self, m: &Monomial<E>) -> bool {
        self.generators.iter().any(|g| g.divides_unchecked(m))
    }

    /// `self ⊆ other`.
    pub fn is_subset(&self, other: &Self) -> Result<bool> {
        self.check(other.nvars)?;
        Ok(self.generators.iter().all(|g| other.contains_unchecked(g)))
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check(other.nvars)?;
        let gens = self.generators.iter().chain(&other.generators).cloned().collect();
        Ok(Self::minimalize_unchecked(self.nvars, gens))
    }

    pub fn product(&self, other: &Self) -> Result<Self> {
        self.check(other.nvars)?;
        let mut gens = Vec::with_capacity(self.generators.len() * other.generators.len());
        for a in &self.generators {
            for b in &other.generators {
                gens.push(a.mul_unchecked(b)?);
            }
        }
        Ok(Self::minimalize_unchecked(self.nvars, gens))
    }

    pub fn intersection(&self, other: &Self) -> Result<Self> {
        self.check(other.nvars)?;
        let mut gens = Vec::with_capacity(self.generators.len() * other.generators.len());
        for a in &self.generators {
            for b in &other.generators {
                gens.push(a.lcm_unchecked(b));
            }
        }
        Ok(Self::minimalize_unchecked(self.nvars, gens))
    }

    /// The Frobenius power `A^[q]`, generated by the `q`-th powers of the
    /// generators. Scaling preserves minimality and order.
    pub fn bracket_power(&self, q: u64) -> Result<Self> {
        if q == 0 {
            return Err(Error::Precondition("bracket power needs q >= 1".into()));
        }
        let generators = self
            .generators
            .iter()
            .map(|g| g.pow(q))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { nvars: self.nvars, generators })
    }

    /// `(self : m)`.
    pub fn colon_monomial(&self, m: &Monomial<E>) -> Result<Self> {
        self.check(m.nvars())?;
        let gens = self.generators.iter().map(|g| g.quotient_unchecked(m)).collect();
        Ok(Self::minimalize_unchecked(self.nvars, gens))
    }

    /// `(self : other) = ∩_{b} (self : b)` over the generators `b` of `other`.
    pub fn colon(&self, other: &Self) -> Result<Self> {
        self.check(other.nvars)?;
        let mut gens = other.generators.iter();
        let first = gens.next().ok_or(Error::ZeroColon)?;
        let mut acc = self.colon_monomial(first)?;
        for b in gens {
            acc = acc.intersection(&self.colon_monomial(b)?)?;
        }
        Ok(acc)
    }

    /// `μ(self / other)` for `other ⊆ self`: the number of minimal generators
    /// of `self` that `other` does not contain.
    pub fn mu_quotient(&self, other: &Self) -> Result<usize> {
        if !other.is_subset(self)? {
            return Err(Error::Precondition("mu_quotient needs B ⊆ A".into()));
        }
        Ok(self.generators.iter().filter(|g| !other.contains_unchecked(g)).count())
    }

    /// Re-expresses the ideal in `nvars` variables, sending variable `i` to
    /// `map[i]`. Used for restriction to, and embedding into, other rings.
    pub fn remap(&self, nvars: usize, map: &[usize]) -> Result<Self> {
        if map.len() != self.nvars {
            return Err(Error::ContextMismatch { expected: self.nvars, found: map.len() });
        }
        if map.iter().any(|&j| j >= nvars) {
            return Err(Error::Precondition("variable map leaves the target ring".into()));
        }
        let gens = self
            .generators
            .iter()
            .map(|g| {
                let mut v = vec![E::zero(); nvars];
                for (i, &a) in g.exponents().iter().enumerate() {
                    v[map[i]] = v[map[i]] + a;
                }
                Monomial::new(v)
            })
            .collect();
        Ok(Self::minimalize_unchecked(nvars, gens))
    }
}

impl<E: Exponent> fmt::Display for MonomialIdeal<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type Ideal = MonomialIdeal<u64>;

    fn mono(v: &[u64]) -> Monomial<u64> {
        Monomial::new(v.to_vec())
    }

    fn ideal(n: usize, gens: &[&[u64]]) -> Ideal {
        Ideal::minimalize(n, gens.iter().map(|g| mono(g))).unwrap()
    }

    /// All exponent vectors with total degree at most `d`.
    fn monomials_up_to(n: usize, d: u64) -> Vec<Monomial<u64>> {
        let mut out = vec![];
        let mut cur = vec![0u64; n];
        fn rec(i: usize, left: u64, cur: &mut Vec<u64>, out: &mut Vec<Monomial<u64>>) {
            if i == cur.len() {
                out.push(Monomial::new(cur.clone()));
                return;
            }
            for a in 0..=left {
                cur[i] = a;
                rec(i + 1, left - a, cur, out);
            }
            cur[i] = 0;
        }
        rec(0, d, &mut cur, &mut out);
        out
    }

    #[test]
    fn minimalize_cases() {
        assert_eq!(ideal(1, &[&[2], &[1]]).generators(), &[mono(&[1])]);
        assert!(ideal(2, &[]).is_zero());
        assert_eq!(ideal(2, &[&[1, 1], &[1, 1]]).num_generators(), 1);
        assert!(Ideal::minimalize(2, vec![mono(&[1])]).is_err());
    }

    #[test]
    fn canonical_order_is_lex_ascending() {
        let a = ideal(3, &[&[1, 0, 0], &[0, 0, 1], &[0, 1, 0]]);
        assert_eq!(a.to_u64_vecs(), vec![vec![0, 0, 1], vec![0, 1, 0], vec![1, 0, 0]]);
    }

    #[test]
    fn sums() {
        let x1 = ideal(2, &[&[1, 0]]);
        let x2 = ideal(2, &[&[0, 1]]);
        assert_eq!(x1.sum(&x2).unwrap(), ideal(2, &[&[1, 0], &[0, 1]]));
        assert_eq!(x1.sum(&Ideal::zero(2)).unwrap(), x1);
        assert_eq!(x1.sum(&ideal(2, &[&[1, 1]])).unwrap(), x1);
    }

    #[test]
    fn products() {
        let x1 = ideal(2, &[&[1, 0]]);
        let x2 = ideal(2, &[&[0, 1]]);
        assert_eq!(x1.product(&x2).unwrap(), ideal(2, &[&[1, 1]]));
        assert_eq!(x1.product(&Ideal::unit(2)).unwrap(), x1);
        assert!(x1.product(&Ideal::zero(2)).unwrap().is_zero());
        let m = Ideal::maximal(2);
        assert_eq!(m.product(&m).unwrap(), ideal(2, &[&[2, 0], &[1, 1], &[0, 2]]));
    }

    #[test]
    fn intersections() {
        let x1 = ideal(2, &[&[1, 0]]);
        let x2 = ideal(2, &[&[0, 1]]);
        assert_eq!(x1.intersection(&x2).unwrap(), ideal(2, &[&[1, 1]]));
        assert_eq!(x1.intersection(&Ideal::unit(2)).unwrap(), x1);
    }

    #[test]
    fn intersection_matches_enumeration() {
        let a = ideal(2, &[&[2, 0], &[0, 1]]);
        let b = ideal(2, &[&[1, 0]]);
        // Brute force: the members of both ideals up to degree 4, and the
        // minimal elements among them.
        let common: Vec<_> = monomials_up_to(2, 4)
            .into_iter()
            .filter(|m| a.contains(m).unwrap() && b.contains(m).unwrap())
            .collect();
        let minimal: Vec<Vec<u64>> = common
            .iter()
            .filter(|m| !common.iter().any(|d| d != *m && d.divides(m).unwrap()))
            .map(|m| m.to_u64_vec())
            .collect();
        let mut minimal = minimal;
        minimal.sort();
        assert_eq!(minimal, vec![vec![1, 1], vec![2, 0]]);
        assert_eq!(a.intersection(&b).unwrap().to_u64_vecs(), minimal);
    }

    #[test]
    fn bracket_powers() {
        let a = ideal(2, &[&[1, 1]]);
        assert_eq!(a.bracket_power(4).unwrap(), ideal(2, &[&[4, 4]]));
        let b = ideal(3, &[&[1, 0, 0], &[0, 1, 1]]);
        assert_eq!(b.bracket_power(1).unwrap(), b);
        assert_eq!(b.bracket_power(2).unwrap(), ideal(3, &[&[2, 0, 0], &[0, 2, 2]]));
        assert!(b.bracket_power(0).is_err());
        let narrow: MonomialIdeal<u8> =
            MonomialIdeal::minimalize(1, vec![Monomial::new(vec![200u8])]).unwrap();
        assert!(matches!(narrow.bracket_power(2), Err(Error::Overflow { .. })));
    }

    #[test]
    fn colons() {
        let a = ideal(3, &[&[1, 1, 0], &[0, 1, 1]]);
        assert_eq!(a.colon(&ideal(3, &[&[0, 1, 0]])).unwrap(), ideal(3, &[&[1, 0, 0], &[0, 0, 1]]));
        assert_eq!(a.colon(&Ideal::unit(3)).unwrap(), a);
        let b = ideal(2, &[&[2, 1]]);
        assert_eq!(b.colon(&ideal(2, &[&[3, 0]])).unwrap(), ideal(2, &[&[0, 1]]));
        assert_eq!(a.colon(&Ideal::zero(3)), Err(Error::ZeroColon));
        assert_eq!(a.colon(&a).unwrap(), Ideal::unit(3));
    }

    #[test]
    fn membership() {
        let m = Ideal::maximal(2);
        assert!(m.contains(&mono(&[1, 1])).unwrap());
        assert!(!Ideal::zero(2).contains(&mono(&[1, 1])).unwrap());
        assert!(!ideal(1, &[&[2]]).contains(&mono(&[1])).unwrap());
        assert!(m.contains(&mono(&[1])).is_err());
    }

    #[test]
    fn mu_quotient_cases() {
        let a = ideal(2, &[&[2, 0], &[1, 1]]);
        let b = ideal(2, &[&[1, 1]]);
        assert_eq!(a.mu_quotient(&b).unwrap(), 1);
        assert_eq!(a.mu_quotient(&a).unwrap(), 0);
        assert!(matches!(b.mu_quotient(&a), Err(Error::Precondition(_))));
    }

    #[test]
    fn context_mismatch_is_reported() {
        assert_eq!(
            Ideal::maximal(2).sum(&Ideal::maximal(3)),
            Err(Error::ContextMismatch { expected: 2, found: 3 })
        );
        assert!(Ideal::maximal(2).intersection(&Ideal::zero(3)).is_err());
        assert!(Ideal::maximal(2).colon(&Ideal::unit(3)).is_err());
    }

    #[test]
    fn remap_embeds_and_restricts() {
        let a = ideal(2, &[&[1, 1]]);
        let up = a.remap(4, &[1, 3]).unwrap();
        assert_eq!(up, ideal(4, &[&[0, 1, 0, 1]]));
        assert!(a.remap(4, &[1]).is_err());
        assert!(a.remap(2, &[0, 2]).is_err());
    }
}
