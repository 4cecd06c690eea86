//! The integral group ring `ℤ[S_n]`.
//!
//! Elements are sparse maps from permutations to arbitrary-precision
//! coefficients. Zero coefficients are never stored, so structural equality
//! coincides with equality in the ring.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::Rng;

use crate::error::{Error, Result};
use crate::perm::{check_degree, symmetric_group, Permutation};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GroupRingElement {
    degree: usize,
    terms: BTreeMap<Permutation, BigInt>,
}

fn same_degree(left: usize, right: usize) -> Result<()> {
    if left != right {
        return Err(Error::DegreeMismatch { left, right });
    }
    Ok(())
}

pub(crate) fn accumulate(terms: &mut BTreeMap<Permutation, BigInt>, key: Permutation, c: BigInt) {
    if c.is_zero() {
        return;
    }
    match terms.entry(key) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

impl GroupRingElement {
    pub fn zero(degree: usize) -> Result<Self> {
        check_degree(degree)?;
        Ok(Self {
            degree,
            terms: BTreeMap::new(),
        })
    }

    /// `c·σ`
    pub fn monomial(sigma: Permutation, c: impl Into<BigInt>) -> Self {
        let mut terms = BTreeMap::new();
        accumulate(&mut terms, sigma.clone(), c.into());
        Self {
            degree: sigma.degree(),
            terms,
        }
    }

    /// The multiplicative unit `e`.
    pub fn one(degree: usize) -> Result<Self> {
        Ok(Self::monomial(Permutation::identity(degree)?, 1))
    }

    /// Sums the given terms; repeated permutations are added together.
    pub fn from_terms<I, C>(degree: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Permutation, C)>,
        C: Into<BigInt>,
    {
        let mut out = Self::zero(degree)?;
        for (sigma, c) in terms {
            same_degree(degree, sigma.degree())?;
            accumulate(&mut out.terms, sigma, c.into());
        }
        Ok(out)
    }

    /// Callers guarantee every key has degree `degree` and no value is zero.
    pub(crate) fn from_canonical_map(degree: usize, terms: BTreeMap<Permutation, BigInt>) -> Self {
        debug_assert!(terms.iter().all(|(k, v)| k.degree() == degree && !v.is_zero()));
        Self { degree, terms }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of permutations with a nonzero coefficient.
    pub fn support_size(&self) -> usize {
        self.terms.len()
    }

    /// Terms in lex order of the permutation.
    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &BigInt)> {
        self.terms.iter()
    }

    pub(crate) fn term_map(&self) -> &BTreeMap<Permutation, BigInt> {
        &self.terms
    }

    pub fn coefficient(&self, sigma: &Permutation) -> BigInt {
        self.terms.get(sigma).cloned().unwrap_or_default()
    }

    pub(crate) fn coefficient_ref(&self, sigma: &Permutation) -> Option<&BigInt> {
        self.terms.get(sigma)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        same_degree(self.degree, other.degree)?;
        let mut terms = self.terms.clone();
        for (sigma, c) in &other.terms {
            accumulate(&mut terms, sigma.clone(), c.clone());
        }
        Ok(Self {
            degree: self.degree,
            terms,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&-BigInt::one())
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self {
                degree: self.degree,
                terms: BTreeMap::new(),
            };
        }
        Self {
            degree: self.degree,
            terms: self.terms.iter().map(|(s, c)| (s.clone(), c * k)).collect(),
        }
    }

    /// Convolution product: the coefficient of `g` is `Σ_{f·h = g} a(f)·b(h)`.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        same_degree(self.degree, other.degree)?;
        let mut terms = BTreeMap::new();
        for (f, a) in &self.terms {
            for (h, b) in &other.terms {
                accumulate(&mut terms, f.compose_unchecked(h), a * b);
            }
        }
        Ok(Self {
            degree: self.degree,
            terms,
        })
    }

    /// Left translation `τ·a`.
    pub fn translate(&self, tau: &Permutation) -> Result<Self> {
        same_degree(tau.degree(), self.degree)?;
        Ok(Self {
            degree: self.degree,
            terms: self
                .terms
                .iter()
                .map(|(s, c)| (tau.compose_unchecked(s), c.clone()))
                .collect(),
        })
    }

    /// `Σ a(g)·g⁻¹`
    pub fn antipode(&self) -> Self {
        Self {
            degree: self.degree,
            terms: self
                .terms
                .iter()
                .map(|(s, c)| (s.inverse(), c.clone()))
                .collect(),
        }
    }

    /// `⟨a, b⟩ = Σ_g a(g)·b(g)`. This is the untwisted form: no inverse on
    /// the second argument.
    pub fn scalar_product(&self, other: &Self) -> Result<BigInt> {
        same_degree(self.degree, other.degree)?;
        let (small, large) = if self.terms.len() <= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        Ok(small
            .terms
            .iter()
            .filter_map(|(s, c)| large.terms.get(s).map(|d| c * d))
            .sum())
    }

    /// Sum of all coefficients.
    pub fn augmentation(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Dense coefficient vector over `S_n` in lex order.
    pub fn to_dense(&self) -> Vec<BigInt> {
        let mut v = vec![BigInt::zero(); crate::perm::factorial(self.degree)];
        for (s, c) in &self.terms {
            v[s.lex_rank()] = c.clone();
        }
        v
    }

    /// Inverse of [`to_dense`](Self::to_dense).
    pub fn from_dense(degree: usize, coefficients: &[BigInt]) -> Result<Self> {
        let group = symmetric_group(degree)?;
        if coefficients.len() != group.len() {
            return Err(Error::DegreeMismatch {
                left: group.len(),
                right: coefficients.len(),
            });
        }
        Self::from_terms(degree, group.into_iter().zip(coefficients.iter().cloned()))
    }
}

/// Seeded test-data generator: each permutation is in the support with
/// probability 1/2, with a uniformly chosen nonzero coefficient in `[-3, 3]`.
pub fn random_element<R: Rng + ?Sized>(degree: usize, rng: &mut R) -> Result<GroupRingElement> {
    let mut terms = BTreeMap::new();
    for sigma in symmetric_group(degree)? {
        if rng.gen_bool(0.5) {
            let mut c: i64 = rng.gen_range(-3..=2);
            if c >= 0 {
                c += 1;
            }
            terms.insert(sigma, BigInt::from(c));
        }
    }
    Ok(GroupRingElement::from_canonical_map(degree, terms))
}

/// Canonical text form: one `<coefficient> <p1> … <pn>` line per term in
/// lex order. The zero element prints as nothing.
impl fmt::Display for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (s, c) in &self.terms {
            writeln!(f, "{c} {s}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S{}{{", self.degree)?;
        for (i, (s, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{s:?}: {c}")?;
        }
        f.write_str("}")
    }
}
