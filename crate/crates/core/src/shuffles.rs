//! Shuffles, riffle permutations, the bracket element `ω_n`, and the index
//! sets `I_n^±`.

use std::collections::BTreeSet;
use std::sync::OnceLock;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::group_ring::GroupRingElement;
use crate::perm::{check_degree, Permutation, MAX_DEGREE};

/// An `(s, t)`-shuffle: two strictly increasing sequences `alpha` (length
/// `s`) and `beta` (length `t`) that partition `{1, …, s+t}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Shuffle {
    alpha: Vec<usize>,
    beta: Vec<usize>,
}

impl Shuffle {
    pub fn new(alpha: Vec<usize>, beta: Vec<usize>) -> Result<Self> {
        let total = alpha.len() + beta.len();
        let increasing = |v: &[usize]| v.windows(2).all(|w| w[0] < w[1]);
        if !increasing(&alpha) || !increasing(&beta) {
            return Err(Error::InvalidShuffle("sequences must be strictly increasing".into()));
        }
        let mut all: Vec<usize> = alpha.iter().chain(&beta).copied().collect();
        all.sort_unstable();
        if all != (1..=total).collect::<Vec<_>>() {
            return Err(Error::InvalidShuffle(format!(
                "images must partition 1..={total}"
            )));
        }
        Ok(Self { alpha, beta })
    }

    pub fn s(&self) -> usize {
        self.alpha.len()
    }

    pub fn t(&self) -> usize {
        self.beta.len()
    }

    pub fn alpha(&self) -> &[usize] {
        &self.alpha
    }

    /// Stored ascending; riffles read it back to front.
    pub fn beta(&self) -> &[usize] {
        &self.beta
    }
}

/// `Sh(s, t)` in lex order of `alpha`.
pub fn enumerate_shuffles(s: usize, t: usize) -> Vec<Shuffle> {
    let n = s + t;
    (1..=n)
        .combinations(s)
        .map(|alpha| {
            let beta = (1..=n).filter(|v| !alpha.contains(v)).collect();
            Shuffle { alpha, beta }
        })
        .collect()
}

/// `Sh¹(s, t)`: the shuffles with `alpha(1) = 1`.
pub fn enumerate_shuffles_first_fixed(s: usize, t: usize) -> Result<Vec<Shuffle>> {
    if s == 0 {
        return Err(Error::InvalidShuffle(
            "alpha must be nonempty when its first value is fixed".into(),
        ));
    }
    Ok((2..=s + t)
        .combinations(s - 1)
        .map(|rest| {
            let alpha: Vec<usize> = std::iter::once(1).chain(rest).collect();
            let beta = (2..=s + t).filter(|v| !alpha.contains(v)).collect();
            Shuffle { alpha, beta }
        })
        .collect())
}

/// The permutation with one-line notation
/// `[β(i), …, β(1), α(1), …, α(n−i)]` for a shuffle in `Sh¹(n−i, i)`.
pub fn riffle_permutation(n: usize, i: usize, sh: &Shuffle) -> Result<Permutation> {
    if i >= n || sh.s() != n - i || sh.t() != i || sh.alpha.first() != Some(&1) {
        return Err(Error::InvalidShuffle(format!(
            "expected a shuffle in Sh1({}, {i}) for degree {n}",
            n.saturating_sub(i)
        )));
    }
    let images: Vec<usize> = sh.beta.iter().rev().chain(&sh.alpha).copied().collect();
    Permutation::new(&images)
}

/// Every `(i, riffle)` pair with `0 ≤ i < n`, in stratum order then lex
/// order of `alpha`.
pub fn riffles(n: usize) -> Result<Vec<(usize, Permutation)>> {
    check_degree(n)?;
    let mut out = Vec::with_capacity(1 << (n - 1));
    for i in 0..n {
        for sh in enumerate_shuffles_first_fixed(n - i, i)? {
            out.push((i, riffle_permutation(n, i, &sh)?));
        }
    }
    Ok(out)
}

/// `ω_n = Σ_i Σ_{Sh¹(n−i, i)} (−1)^i · riffle`.
pub fn omega(n: usize) -> Result<GroupRingElement> {
    GroupRingElement::from_terms(
        n,
        riffles(n)?
            .into_iter()
            .map(|(i, r)| (r, if i % 2 == 0 { 1 } else { -1 })),
    )
}

/// Cached `ω_n`.
pub fn omega_cached(n: usize) -> Result<&'static GroupRingElement> {
    static CACHE: [OnceLock<GroupRingElement>; MAX_DEGREE] = [const { OnceLock::new() }; MAX_DEGREE];
    check_degree(n)?;
    if let Some(w) = CACHE[n - 1].get() {
        return Ok(w);
    }
    let w = omega(n)?;
    Ok(CACHE[n - 1].get_or_init(|| w))
}

/// Inverses of the riffle permutations, split by parity of the stratum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobiIndexSets {
    degree: usize,
    plus: BTreeSet<Permutation>,
    minus: BTreeSet<Permutation>,
}

impl JacobiIndexSets {
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// `I_n^+` (even strata).
    pub fn plus(&self) -> &BTreeSet<Permutation> {
        &self.plus
    }

    /// `I_n^-` (odd strata).
    pub fn minus(&self) -> &BTreeSet<Permutation> {
        &self.minus
    }
}

pub fn jacobi_index_sets(n: usize) -> Result<JacobiIndexSets> {
    let mut plus = BTreeSet::new();
    let mut minus = BTreeSet::new();
    for (i, r) in riffles(n)? {
        if i % 2 == 0 {
            plus.insert(r.inverse());
        } else {
            minus.insert(r.inverse());
        }
    }
    Ok(JacobiIndexSets {
        degree: n,
        plus,
        minus,
    })
}

pub fn jacobi_index_sets_cached(n: usize) -> Result<&'static JacobiIndexSets> {
    static CACHE: [OnceLock<JacobiIndexSets>; MAX_DEGREE] = [const { OnceLock::new() }; MAX_DEGREE];
    check_degree(n)?;
    if let Some(s) = CACHE[n - 1].get() {
        return Ok(s);
    }
    let s = jacobi_index_sets(n)?;
    Ok(CACHE[n - 1].get_or_init(|| s))
}
