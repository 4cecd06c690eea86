//! The multilinear part of the free associative ring `ℤ⟨x₁,…,x_n⟩`.
//!
//! A monomial `x_{σ(1)}⋯x_{σ(n)}` is keyed by the permutation `σ`. Bracket
//! expansion works letter by letter through `[p, x] = p·x − x·p` and never
//! consults the shuffle formula, so it checks `ω_n` independently.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::group_ring::{accumulate, GroupRingElement};
use crate::perm::{check_degree, Permutation};
use crate::shuffles::omega_cached;

/// An element of `γ_n`: integer combination of multilinear words.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultilinearPolynomial {
    degree: usize,
    terms: BTreeMap<Permutation, BigInt>,
}

impl MultilinearPolynomial {
    pub fn zero(degree: usize) -> Result<Self> {
        check_degree(degree)?;
        Ok(Self {
            degree,
            terms: BTreeMap::new(),
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// `(word, coefficient)` pairs; the word `x_{σ(1)}⋯x_{σ(n)}` is given as `σ`.
    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, word: &Permutation) -> BigInt {
        self.terms.get(word).cloned().unwrap_or_default()
    }
}

impl fmt::Display for MultilinearPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (w, c) in &self.terms {
            writeln!(f, "{c} {w}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for MultilinearPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "γ{}{{", self.degree)?;
        for (i, (w, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}·x{w:?}")?;
        }
        f.write_str("}")
    }
}

/// Expansion of a left-normed bracket on distinct 0-based letters, as a map
/// from words to coefficients.
fn expand_words(letters: &[u8]) -> BTreeMap<Vec<u8>, i64> {
    let mut acc: BTreeMap<Vec<u8>, i64> = BTreeMap::new();
    acc.insert(vec![letters[0]], 1);
    for &x in &letters[1..] {
        let mut next: BTreeMap<Vec<u8>, i64> = BTreeMap::new();
        for (word, c) in &acc {
            let mut right = word.clone();
            right.push(x);
            *next.entry(right).or_default() += c;

            let mut left = Vec::with_capacity(word.len() + 1);
            left.push(x);
            left.extend_from_slice(word);
            *next.entry(left).or_default() -= c;
        }
        next.retain(|_, c| *c != 0);
        acc = next;
    }
    acc
}

/// Expands `[x_{i₁}, …, x_{i_n}]` where `indices` lists every value of
/// `1..=n` exactly once.
pub fn expand_left_normed_bracket(indices: &[usize], n: usize) -> Result<MultilinearPolynomial> {
    check_degree(n)?;
    let mut seen = vec![false; n];
    for &i in indices {
        if i == 0 || i > n {
            return Err(Error::NotAPermutation {
                degree: n,
                images: indices.to_vec(),
            });
        }
        if seen[i - 1] {
            return Err(Error::RepeatedIndex(i));
        }
        seen[i - 1] = true;
    }
    if indices.len() != n {
        return Err(Error::DegreeMismatch {
            left: n,
            right: indices.len(),
        });
    }
    let letters: Vec<u8> = indices.iter().map(|&i| (i - 1) as u8).collect();
    Ok(expand_bracket_word(n, &letters))
}

/// `[x_{σ(1)}, …, x_{σ(n)}]`
pub fn expand_bracket(sigma: &Permutation) -> MultilinearPolynomial {
    expand_bracket_word(sigma.degree(), sigma.raw())
}

fn expand_bracket_word(n: usize, letters: &[u8]) -> MultilinearPolynomial {
    let terms = expand_words(letters)
        .into_iter()
        .map(|(w, c)| (Permutation::from_zero_based(w), BigInt::from(c)))
        .collect();
    MultilinearPolynomial { degree: n, terms }
}

/// `φ`: reads each word as the permutation it spells.
pub fn phi(p: &MultilinearPolynomial) -> GroupRingElement {
    GroupRingElement::from_canonical_map(p.degree, p.terms.clone())
}

/// `φ⁻¹`
pub fn phi_inverse(a: &GroupRingElement) -> MultilinearPolynomial {
    MultilinearPolynomial {
        degree: a.degree(),
        terms: a.term_map().clone(),
    }
}

/// `β̃_n(a) = Σ a(σ)·[x_{σ(1)}, …, x_{σ(n)}]`
pub fn beta_tilde(a: &GroupRingElement) -> MultilinearPolynomial {
    let mut terms = BTreeMap::new();
    for (sigma, c) in a.terms() {
        for (w, d) in expand_words(sigma.raw()) {
            accumulate(&mut terms, Permutation::from_zero_based(w), c * d);
        }
    }
    MultilinearPolynomial {
        degree: a.degree(),
        terms,
    }
}

/// `Ω_n(a) = a·ω_n`
pub fn omega_right_multiply(a: &GroupRingElement) -> GroupRingElement {
    let w = omega_cached(a.degree()).expect("element degree is always in range");
    a.multiply(w).expect("degrees agree")
}
