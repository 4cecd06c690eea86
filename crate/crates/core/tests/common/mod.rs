#![allow(dead_code)]

use std::collections::BTreeSet;
use std::path::PathBuf;

use jacobi::Permutation;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

pub fn p(v: &[usize]) -> Permutation {
    Permutation::new(v).unwrap()
}

pub fn set(perms: &[&[usize]]) -> BTreeSet<Permutation> {
    perms.iter().map(|v| p(v)).collect()
}

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests")
        .join("fixtures")
        .join(name)
}

pub fn antisymmetry() -> BTreeSet<Permutation> {
    set(&[&[1, 2], &[2, 1]])
}

pub fn jacobi3() -> BTreeSet<Permutation> {
    set(&[&[1, 2, 3], &[2, 3, 1], &[3, 1, 2]])
}

/// The four displayed degree-4 identities, sizes 4 through 7.
pub fn degree_four_identities() -> Vec<BTreeSet<Permutation>> {
    vec![
        set(&[&[1, 2, 3, 4], &[3, 4, 1, 2], &[2, 1, 4, 3], &[4, 3, 2, 1]]),
        set(&[
            &[1, 2, 3, 4],
            &[3, 1, 2, 4],
            &[4, 1, 2, 3],
            &[1, 4, 3, 2],
            &[2, 3, 4, 1],
        ]),
        set(&[
            &[1, 2, 3, 4],
            &[3, 1, 2, 4],
            &[2, 1, 4, 3],
            &[4, 2, 1, 3],
            &[1, 4, 3, 2],
            &[2, 3, 4, 1],
        ]),
        set(&[
            &[1, 2, 3, 4],
            &[3, 1, 2, 4],
            &[2, 1, 4, 3],
            &[4, 2, 1, 3],
            &[1, 3, 4, 2],
            &[3, 4, 1, 2],
            &[2, 3, 4, 1],
        ]),
    ]
}

/// Fraction-free (Bareiss) elimination. Independent of the Hermite normal
/// form code; every division is checked for exactness.
fn bareiss(mut a: Vec<Vec<BigInt>>) -> (usize, BigInt, bool) {
    let m = a.len();
    if m == 0 {
        return (0, BigInt::one(), false);
    }
    let k = a[0].len();
    let mut prev = BigInt::one();
    let mut rank = 0;
    let mut swaps = 0usize;
    for c in 0..k {
        if rank == m {
            break;
        }
        let Some(piv) = (rank..m).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        if piv != rank {
            a.swap(piv, rank);
            swaps += 1;
        }
        for i in rank + 1..m {
            for j in c + 1..k {
                let num = &a[rank][c] * &a[i][j] - &a[i][c] * &a[rank][j];
                let (q, r) = num.div_rem(&prev);
                assert!(r.is_zero(), "inexact Bareiss division");
                a[i][j] = q;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[rank][c].clone();
        rank += 1;
    }
    let odd = swaps % 2 == 1;
    (rank, prev, odd)
}

pub fn bareiss_rank(rows: Vec<Vec<BigInt>>) -> usize {
    bareiss(rows).0
}

/// Determinant of a square matrix.
pub fn bareiss_determinant(rows: Vec<Vec<BigInt>>) -> BigInt {
    let size = rows.len();
    let (rank, last_pivot, odd) = bareiss(rows);
    if rank < size {
        return BigInt::zero();
    }
    if odd {
        -last_pivot
    } else {
        last_pivot
    }
}
