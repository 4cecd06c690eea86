//! Permutations of `{1, …, n}` in one-line notation.
//!
//! Values are presented 1-based (`[2, 1, 3]` swaps 1 and 2) and stored
//! 0-based. Composition is right-to-left: `(σ·π)(k) = σ(π(k))`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest supported degree. `8! = 40320` keeps dense tables small.
pub const MAX_DEGREE: usize = 8;

/// An element of the symmetric group `S_n`.
///
/// Ordering is lexicographic on the one-line notation, so sorting a
/// collection of permutations of one degree gives the lex order used for
/// every table and every canonical output in this crate.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Box<[u8]>,
}

pub(crate) fn check_degree(n: usize) -> Result<()> {
    if n == 0 || n > MAX_DEGREE {
        return Err(Error::DegreeOutOfRange {
            degree: n,
            max: MAX_DEGREE,
        });
    }
    Ok(())
}

impl Permutation {
    /// Builds a permutation from its 1-based one-line images.
    pub fn new(images: &[usize]) -> Result<Self> {
        let n = images.len();
        check_degree(n)?;
        let mut seen = [false; MAX_DEGREE];
        let mut zero_based = Vec::with_capacity(n);
        for &v in images {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::NotAPermutation {
                    degree: n,
                    images: images.to_vec(),
                });
            }
            seen[v - 1] = true;
            zero_based.push((v - 1) as u8);
        }
        Ok(Self {
            images: zero_based.into_boxed_slice(),
        })
    }

    /// Caller guarantees `images` is a 0-based bijection.
    pub(crate) fn from_zero_based(images: Vec<u8>) -> Self {
        debug_assert!({
            let mut s = images.clone();
            s.sort_unstable();
            s.iter().enumerate().all(|(i, &v)| v as usize == i)
        });
        Self {
            images: images.into_boxed_slice(),
        }
    }

    pub fn identity(n: usize) -> Result<Self> {
        check_degree(n)?;
        Ok(Self::from_zero_based((0..n as u8).collect()))
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v as usize == i)
    }

    /// `σ(k)` for `k` in `1..=n`.
    pub fn apply(&self, k: usize) -> usize {
        self.images[k - 1] as usize + 1
    }

    /// One-line notation, 1-based.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&v| v as usize + 1).collect()
    }

    pub(crate) fn raw(&self) -> &[u8] {
        &self.images
    }

    /// `self · other`, i.e. `k ↦ self(other(k))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &Permutation) -> Permutation {
        let images = other
            .images
            .iter()
            .map(|&k| self.images[k as usize])
            .collect::<Vec<u8>>();
        Self::from_zero_based(images)
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.degree()];
        for (k, &v) in self.images.iter().enumerate() {
            inv[v as usize] = k as u8;
        }
        Self::from_zero_based(inv)
    }

    /// Position of this permutation in the lex-ordered listing of `S_n`.
    pub fn lex_rank(&self) -> usize {
        let n = self.degree();
        let mut rank = 0;
        for i in 0..n {
            let smaller_later = self.images[i + 1..]
                .iter()
                .filter(|&&v| v < self.images[i])
                .count();
            rank = rank * (n - i) + smaller_later;
        }
        rank
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.images.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", *v as usize + 1)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self)
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Parses space-separated one-line images, e.g. `2 1 4 3`.
    fn from_str(s: &str) -> Result<Self> {
        let images = s
            .split_whitespace()
            .map(|tok| {
                tok.parse::<usize>().map_err(|_| Error::Parse {
                    line: 1,
                    message: format!("invalid permutation entry `{tok}`"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        if images.is_empty() {
            return Err(Error::EmptyInput);
        }
        Permutation::new(&images)
    }
}

/// `n!`
pub fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// All of `S_n` in lexicographic order of one-line notation.
pub fn symmetric_group(n: usize) -> Result<Vec<Permutation>> {
    check_degree(n)?;
    let mut current: Vec<u8> = (0..n as u8).collect();
    let mut out = Vec::with_capacity(factorial(n));
    loop {
        out.push(Permutation::from_zero_based(current.clone()));
        if !next_lex(&mut current) {
            break;
        }
    }
    Ok(out)
}

fn next_lex(v: &mut [u8]) -> bool {
    let n = v.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}
