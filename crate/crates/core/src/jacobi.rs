//! Deciding whether an element of `ℤ[S_n]`, or a subset of `S_n`, gives an
//! identity that holds in every Lie ring.
//!
//! Four independent routes are provided for elements:
//!
//! * [`is_jacobi_bruteforce`] expands every bracket in the free associative
//!   ring and checks that the sum cancels. The free Lie ring embeds there,
//!   so this is the ground truth.
//! * [`is_jacobi_omega`] checks `a·ω_n = 0`.
//! * [`is_jacobi_orthogonality`] checks `⟨a, τ·s(ω_n)⟩ = 0` for every `τ`.
//! * [`is_jacobi_theorem1`] evaluates the signed riffle sum for every `τ`
//!   through the index sets `I_n^±`.
//!
//! A subset `T` stands for the identity `Σ_{σ ∈ T} [x_{σ(1)}, …, x_{σ(n)}] = 0`
//! and is decided by comparing `|T ∩ τI_n^+|` with `|T ∩ τI_n^-|`.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::free_algebra::{beta_tilde, omega_right_multiply};
use crate::group_ring::GroupRingElement;
use crate::perm::{check_degree, symmetric_group, Permutation};
use crate::shuffles::{jacobi_index_sets_cached, omega_cached};

/// A failing translate `τ` and the nonzero value of its condition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub tau: Permutation,
    pub value: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobiVerdict {
    pub is_jacobi: bool,
    /// Lex-first failing `τ`; present iff `is_jacobi` is false.
    pub witness: Option<Witness>,
}

impl JacobiVerdict {
    fn from_first_failure(failure: Option<Witness>) -> Self {
        Self {
            is_jacobi: failure.is_none(),
            witness: failure,
        }
    }
}

/// Cardinalities `|T ∩ τI_n^+|` and `|T ∩ τI_n^-|` for one `τ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Balance {
    pub tau: Permutation,
    pub plus: usize,
    pub minus: usize,
}

impl Balance {
    pub fn is_balanced(&self) -> bool {
        self.plus == self.minus
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsetVerdict {
    pub is_jacobi: bool,
    /// Lex-first unbalanced `τ`; present iff `is_jacobi` is false.
    pub witness: Option<Balance>,
}

pub fn is_jacobi_bruteforce(a: &GroupRingElement) -> bool {
    beta_tilde(a).is_zero()
}

pub fn is_jacobi_omega(a: &GroupRingElement) -> bool {
    omega_right_multiply(a).is_zero()
}

pub fn is_jacobi_orthogonality(a: &GroupRingElement) -> JacobiVerdict {
    let n = a.degree();
    let s_omega = omega_cached(n).expect("degree in range").antipode();
    let failure = symmetric_group(n)
        .expect("degree in range")
        .into_iter()
        .find_map(|tau| {
            let probe = s_omega.translate(&tau).expect("degrees agree");
            let value = a.scalar_product(&probe).expect("degrees agree");
            (!value.is_zero()).then_some(Witness { tau, value })
        });
    JacobiVerdict::from_first_failure(failure)
}

/// `Σ_{g ∈ I_n^+} λ(τg) − Σ_{g ∈ I_n^-} λ(τg)` for a single `τ`.
pub fn theorem1_sum(lambda: &GroupRingElement, tau: &Permutation) -> Result<BigInt> {
    if tau.degree() != lambda.degree() {
        return Err(Error::DegreeMismatch {
            left: lambda.degree(),
            right: tau.degree(),
        });
    }
    let sets = jacobi_index_sets_cached(lambda.degree())?;
    let side = |set: &BTreeSet<Permutation>| -> BigInt {
        set.iter()
            .filter_map(|g| lambda.coefficient_ref(&tau.compose_unchecked(g)))
            .sum()
    };
    Ok(side(sets.plus()) - side(sets.minus()))
}

pub fn is_jacobi_theorem1(lambda: &GroupRingElement) -> JacobiVerdict {
    let failure = symmetric_group(lambda.degree())
        .expect("degree in range")
        .into_iter()
        .find_map(|tau| {
            let value = theorem1_sum(lambda, &tau).expect("degrees agree");
            (!value.is_zero()).then_some(Witness { tau, value })
        });
    JacobiVerdict::from_first_failure(failure)
}

fn check_members(subset: &BTreeSet<Permutation>, n: usize) -> Result<()> {
    check_degree(n)?;
    if let Some(bad) = subset.iter().find(|s| s.degree() != n) {
        return Err(Error::DegreeMismatch {
            left: n,
            right: bad.degree(),
        });
    }
    Ok(())
}

/// The per-`τ` cardinalities for every `τ ∈ S_n`, in lex order of `τ`.
pub fn subset_balance_table(subset: &BTreeSet<Permutation>, n: usize) -> Result<Vec<Balance>> {
    check_members(subset, n)?;
    let sets = jacobi_index_sets_cached(n)?;
    let count = |tau: &Permutation, set: &BTreeSet<Permutation>| {
        set.iter()
            .filter(|g| subset.contains(&tau.compose_unchecked(g)))
            .count()
    };
    Ok(symmetric_group(n)?
        .into_iter()
        .map(|tau| {
            let plus = count(&tau, sets.plus());
            let minus = count(&tau, sets.minus());
            Balance { tau, plus, minus }
        })
        .collect())
}

pub fn is_jacobi_subset(subset: &BTreeSet<Permutation>, n: usize) -> Result<SubsetVerdict> {
    let witness = subset_balance_table(subset, n)?
        .into_iter()
        .find(|b| !b.is_balanced());
    Ok(SubsetVerdict {
        is_jacobi: witness.is_none(),
        witness,
    })
}

/// The 0/1 element `Σ_{σ ∈ T} σ`.
pub fn indicator(subset: &BTreeSet<Permutation>, n: usize) -> Result<GroupRingElement> {
    check_members(subset, n)?;
    GroupRingElement::from_terms(n, subset.iter().map(|s| (s.clone(), 1)))
}

/// Verdicts of all four element deciders.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElementReport {
    pub bruteforce: bool,
    pub omega_kernel: bool,
    pub orthogonality: JacobiVerdict,
    pub theorem1: JacobiVerdict,
}

impl ElementReport {
    pub fn is_jacobi(&self) -> bool {
        self.bruteforce
    }

    /// The riffle-sum witness; the orthogonality route always finds the same
    /// `τ` and value.
    pub fn witness(&self) -> Option<&Witness> {
        self.theorem1.witness.as_ref()
    }
}

/// Runs every element decider. Any disagreement is reported as
/// [`Error::DeciderDisagreement`].
pub fn verify_element_report(a: &GroupRingElement) -> Result<ElementReport> {
    let report = ElementReport {
        bruteforce: is_jacobi_bruteforce(a),
        omega_kernel: is_jacobi_omega(a),
        orthogonality: is_jacobi_orthogonality(a),
        theorem1: is_jacobi_theorem1(a),
    };
    let verdicts = [
        report.bruteforce,
        report.omega_kernel,
        report.orthogonality.is_jacobi,
        report.theorem1.is_jacobi,
    ];
    if verdicts.iter().any(|&v| v != report.bruteforce) {
        return Err(Error::DeciderDisagreement(format!(
            "bruteforce/omega/orthogonality/theorem1 = {verdicts:?} for {a:?}"
        )));
    }
    Ok(report)
}
