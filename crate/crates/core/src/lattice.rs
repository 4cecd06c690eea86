//! Exact integer linear algebra for the lattice `J_n = Ker Ω_n`.
//!
//! Vectors are rows; the kernel of interest is the left kernel
//! `{v : v·M = 0}`, which matches `a ↦ a·ω_n` acting on coefficient rows.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::group_ring::GroupRingElement;
use crate::perm::{check_degree, factorial, symmetric_group};
use crate::shuffles::omega_cached;

/// Largest degree for which the dense `n! × n!` matrix of `Ω_n` is built.
pub const MAX_LATTICE_DEGREE: usize = 6;

/// Dense matrix of arbitrary-precision integers, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<BigInt>>,
}

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![vec![BigInt::zero(); cols]; rows],
        }
    }

    pub fn identity(size: usize) -> Self {
        let mut m = Self::zeros(size, size);
        for i in 0..size {
            m.data[i][i] = BigInt::one();
        }
        m
    }

    /// Fails if the rows are ragged. An empty row list gives a `0 × cols`
    /// matrix.
    pub fn from_rows(rows: Vec<Vec<BigInt>>, cols: usize) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::DegreeMismatch {
                left: cols,
                right: bad.len(),
            });
        }
        Ok(Self {
            rows: rows.len(),
            cols,
            data: rows,
        })
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
            cols,
        )
    }

    pub fn num_rows(&self) -> usize {
        self.rows
    }

    pub fn num_cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r][c]
    }

    pub fn row(&self, r: usize) -> &[BigInt] {
        &self.data[r]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[BigInt]> {
        self.data.iter().map(|r| r.as_slice())
    }

    pub fn into_rows(self) -> Vec<Vec<BigInt>> {
        self.data
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DegreeMismatch {
                left: self.cols,
                right: other.rows,
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for (i, row) in self.data.iter().enumerate() {
            for (k, a) in row.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                axpy(&mut out.data[i], a, &other.data[k]);
            }
        }
        Ok(out)
    }

    /// Rank over ℚ, read off the Hermite normal form.
    pub fn rank(&self) -> usize {
        let mut h = self.data.clone();
        hnf_in_place(&mut h, self.cols, None)
    }
}

impl fmt::Debug for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}x{} [", self.rows, self.cols)?;
        for row in &self.data {
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        f.write_str("]")
    }
}

/// `target += q · src`
fn axpy(target: &mut [BigInt], q: &BigInt, src: &[BigInt]) {
    for (t, s) in target.iter_mut().zip(src) {
        if !s.is_zero() {
            *t += q * s;
        }
    }
}

/// Applies `row[i] -= q · row[j]` to `rows`.
fn row_sub(rows: &mut [Vec<BigInt>], i: usize, j: usize, q: &BigInt) {
    debug_assert_ne!(i, j);
    let neg = -q;
    if i < j {
        let (lo, hi) = rows.split_at_mut(j);
        axpy(&mut lo[i], &neg, &hi[0]);
    } else {
        let (lo, hi) = rows.split_at_mut(i);
        axpy(&mut hi[0], &neg, &lo[j]);
    }
}

fn negate_row(row: &mut [BigInt]) {
    for x in row.iter_mut() {
        if !x.is_zero() {
            *x = -std::mem::take(x);
        }
    }
}

/// Reduces `h` to row Hermite normal form, mirroring every row operation on
/// `u` when given. Returns the number of nonzero rows.
fn hnf_in_place(h: &mut [Vec<BigInt>], cols: usize, mut u: Option<&mut [Vec<BigInt>]>) -> usize {
    let m = h.len();
    let mut r = 0;
    for c in 0..cols {
        if r == m {
            break;
        }
        let mut has_pivot = false;
        loop {
            let best = (r..m)
                .filter(|&i| !h[i][c].is_zero())
                .min_by(|&a, &b| h[a][c].magnitude().cmp(h[b][c].magnitude()));
            let Some(best) = best else { break };
            has_pivot = true;
            h.swap(r, best);
            if let Some(u) = u.as_deref_mut() {
                u.swap(r, best);
            }
            let mut cleared = true;
            for i in r + 1..m {
                if h[i][c].is_zero() {
                    continue;
                }
                let q = h[i][c].div_floor(&h[r][c]);
                row_sub(h, i, r, &q);
                if let Some(u) = u.as_deref_mut() {
                    row_sub(u, i, r, &q);
                }
                if !h[i][c].is_zero() {
                    cleared = false;
                }
            }
            if cleared {
                break;
            }
        }
        if !has_pivot {
            continue;
        }
        if h[r][c].is_negative() {
            negate_row(&mut h[r]);
            if let Some(u) = u.as_deref_mut() {
                negate_row(&mut u[r]);
            }
        }
        for i in 0..r {
            let q = h[i][c].div_floor(&h[r][c]);
            if q.is_zero() {
                continue;
            }
            row_sub(h, i, r, &q);
            if let Some(u) = u.as_deref_mut() {
                row_sub(u, i, r, &q);
            }
        }
        r += 1;
    }
    r
}

/// Row Hermite normal form `H` of `m` together with a unimodular `U` such
/// that `U·m = H`. Pivots are positive, entries above a pivot lie in
/// `[0, pivot)`, and zero rows come last.
pub fn hermite_normal_form(m: &IntegerMatrix) -> (IntegerMatrix, IntegerMatrix) {
    let mut h = m.data.clone();
    let mut u = IntegerMatrix::identity(m.rows).data;
    hnf_in_place(&mut h, m.cols, Some(&mut u));
    (
        IntegerMatrix {
            rows: m.rows,
            cols: m.cols,
            data: h,
        },
        IntegerMatrix {
            rows: m.rows,
            cols: m.rows,
            data: u,
        },
    )
}

/// A ℤ-basis of the left kernel `{v ∈ ℤ^rows : v·m = 0}`: the rows of `U`
/// opposite the zero rows of `H`.
pub fn kernel_basis(m: &IntegerMatrix) -> Vec<Vec<BigInt>> {
    let mut h = m.data.clone();
    let mut u = IntegerMatrix::identity(m.rows).data;
    let rank = hnf_in_place(&mut h, m.cols, Some(&mut u));
    u.split_off(rank)
}

/// Row `σ` holds the coefficients of `σ·ω_n`; rows and columns follow the
/// lex order of `S_n`.
pub fn omega_matrix(n: usize) -> Result<IntegerMatrix> {
    check_lattice_degree(n)?;
    let w = omega_cached(n)?;
    let rows = symmetric_group(n)?
        .iter()
        .map(|sigma| w.translate(sigma).map(|x| x.to_dense()))
        .collect::<Result<Vec<_>>>()?;
    IntegerMatrix::from_rows(rows, factorial(n))
}

fn check_lattice_degree(n: usize) -> Result<()> {
    check_degree(n)?;
    if n > MAX_LATTICE_DEGREE {
        return Err(Error::DegreeOutOfRange {
            degree: n,
            max: MAX_LATTICE_DEGREE,
        });
    }
    Ok(())
}

/// A ℤ-basis of `J_n` in row Hermite normal form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeBasis {
    degree: usize,
    basis: Vec<GroupRingElement>,
    hnf: IntegerMatrix,
}

impl LatticeBasis {
    /// Builds the lattice spanned by `generators` (any generating set).
    pub fn from_generators(degree: usize, generators: &[GroupRingElement]) -> Result<Self> {
        check_lattice_degree(degree)?;
        if let Some(bad) = generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::DegreeMismatch {
                left: degree,
                right: bad.degree(),
            });
        }
        let mut rows: Vec<Vec<BigInt>> = generators.iter().map(|g| g.to_dense()).collect();
        let cols = factorial(degree);
        let rank = hnf_in_place(&mut rows, cols, None);
        rows.truncate(rank);
        let basis = rows
            .iter()
            .map(|r| GroupRingElement::from_dense(degree, r))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            degree,
            basis,
            hnf: IntegerMatrix::from_rows(rows, cols)?,
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[GroupRingElement] {
        &self.basis
    }

    pub fn matrix(&self) -> &IntegerMatrix {
        &self.hnf
    }

    /// Integer coordinates of `a` in this basis, if `a` lies in the lattice.
    pub fn coordinates(&self, a: &GroupRingElement) -> Result<Option<Vec<BigInt>>> {
        if a.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree,
                right: a.degree(),
            });
        }
        let mut v = a.to_dense();
        let mut coords = Vec::with_capacity(self.rank());
        for row in self.hnf.rows() {
            let pivot_col = row
                .iter()
                .position(|x| !x.is_zero())
                .expect("basis rows are nonzero");
            let (q, rem) = v[pivot_col].div_rem(&row[pivot_col]);
            if !rem.is_zero() {
                return Ok(None);
            }
            if !q.is_zero() {
                axpy(&mut v, &-&q, row);
            }
            coords.push(q);
        }
        Ok(v.iter().all(|x| x.is_zero()).then_some(coords))
    }

    pub fn contains(&self, a: &GroupRingElement) -> Result<bool> {
        Ok(self.coordinates(a)?.is_some())
    }
}

/// `J_n` as the left kernel of the matrix of `Ω_n`.
pub fn jacobi_lattice_basis(n: usize) -> Result<LatticeBasis> {
    let kernel = kernel_basis(&omega_matrix(n)?);
    let generators = kernel
        .iter()
        .map(|v| GroupRingElement::from_dense(n, v))
        .collect::<Result<Vec<_>>>()?;
    LatticeBasis::from_generators(n, &generators)
}

pub fn lattice_membership(a: &GroupRingElement, basis: &LatticeBasis) -> Result<bool> {
    basis.contains(a)
}
