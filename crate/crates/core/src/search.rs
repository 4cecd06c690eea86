//! Search for Jacobi subsets of `S_n`.
//!
//! Membership of `σ` in the coset `τI_n^±` is precomputed per `σ` as a list
//! of `(τ, ±1)` effects, so adding or removing one permutation updates the
//! per-`τ` balance `|T ∩ τI^+| − |T ∩ τI^-|` in `2^(n−1)` steps. A subset
//! is Jacobi exactly when every balance is zero.
//!
//! For `n ≤ 4` all `2^(n!)` subsets are walked in Gray-code order, one
//! toggle per step. For `n = 5` the search is a depth-first extension in lex
//! order, bounded by `max_size ≤ 8`, that abandons a branch as soon as some
//! `τ` is out of balance by more than the later permutations could repair.

use std::collections::BTreeSet;
use std::thread;

use crate::error::{Error, Result};
use crate::jacobi::{
    indicator, is_jacobi_subset, verify_element_report, ElementReport, SubsetVerdict,
};
use crate::perm::{check_degree, symmetric_group, Permutation};
use crate::shuffles::jacobi_index_sets_cached;

/// Largest degree searched exhaustively.
pub const MAX_EXHAUSTIVE_DEGREE: usize = 4;
/// Largest degree searched depth-first.
pub const MAX_PRUNED_DEGREE: usize = 5;
/// Size bound required by the depth-first mode.
pub const MAX_PRUNED_SIZE: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    pub max_size: Option<usize>,
    pub require_nonempty: bool,
    pub require_identity: bool,
    pub threads: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self {
            max_size: None,
            require_nonempty: false,
            require_identity: false,
            threads: 1,
        }
    }
}

/// Per-`σ` effect lists, indexed by lex rank of `σ` and `τ`.
struct CosetTable {
    group: Vec<Permutation>,
    effects: Vec<Vec<(u16, i8)>>,
}

impl CosetTable {
    fn new(n: usize) -> Result<Self> {
        let group = symmetric_group(n)?;
        let sets = jacobi_index_sets_cached(n)?;
        // σ ∈ τ·g  ⟺  τ = σ·g⁻¹
        let effects = group
            .iter()
            .map(|sigma| {
                let plus = sets.plus().iter().map(|g| (g, 1i8));
                let minus = sets.minus().iter().map(|g| (g, -1i8));
                let mut e: Vec<(u16, i8)> = plus
                    .chain(minus)
                    .map(|(g, d)| (sigma.compose_unchecked(&g.inverse()).lex_rank() as u16, d))
                    .collect();
                e.sort_unstable();
                e
            })
            .collect();
        Ok(Self { group, effects })
    }

    fn len(&self) -> usize {
        self.group.len()
    }
}

/// Running per-`τ` balances.
struct Balances {
    values: Vec<i32>,
    unbalanced: usize,
    total_abs: u64,
}

impl Balances {
    fn new(size: usize) -> Self {
        Self {
            values: vec![0; size],
            unbalanced: 0,
            total_abs: 0,
        }
    }

    #[inline]
    fn apply(&mut self, effects: &[(u16, i8)], sign: i32) {
        for &(tau, d) in effects {
            let slot = &mut self.values[tau as usize];
            let before = *slot;
            let after = before + sign * d as i32;
            *slot = after;
            self.total_abs = self.total_abs + after.unsigned_abs() as u64 - before.unsigned_abs() as u64;
            match (before == 0, after == 0) {
                (true, false) => self.unbalanced += 1,
                (false, true) => self.unbalanced -= 1,
                _ => {}
            }
        }
    }
}

fn to_subsets(table: &CosetTable, mut found: Vec<Vec<usize>>) -> Vec<BTreeSet<Permutation>> {
    found.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    found
        .into_iter()
        .map(|members| members.into_iter().map(|i| table.group[i].clone()).collect())
        .collect()
}

/// All Jacobi subsets meeting the filters, ordered by size and then by the
/// lex order of their sorted member lists.
pub fn enumerate_jacobi_subsets(n: usize, options: &SearchOptions) -> Result<Vec<BTreeSet<Permutation>>> {
    check_degree(n)?;
    if n <= MAX_EXHAUSTIVE_DEGREE {
        return enumerate_exhaustive(n, options);
    }
    if n <= MAX_PRUNED_DEGREE {
        return match options.max_size {
            Some(k) if k <= MAX_PRUNED_SIZE => enumerate_pruned(n, options),
            _ => Err(Error::UnsupportedSearch(format!(
                "degree {n} requires --max-size at most {MAX_PRUNED_SIZE}"
            ))),
        };
    }
    Err(Error::UnsupportedSearch(format!(
        "degree {n} exceeds the searchable range (at most {MAX_PRUNED_DEGREE})"
    )))
}

/// Gray-code walk over every subset of `S_n`, `n ≤ 4`.
pub fn enumerate_exhaustive(n: usize, options: &SearchOptions) -> Result<Vec<BTreeSet<Permutation>>> {
    check_degree(n)?;
    if n > MAX_EXHAUSTIVE_DEGREE {
        return Err(Error::UnsupportedSearch(format!(
            "exhaustive search supports degree at most {MAX_EXHAUSTIVE_DEGREE}"
        )));
    }
    let table = CosetTable::new(n)?;
    let base: u32 = if options.require_identity { 1 } else { 0 };
    let free: Vec<usize> = (0..table.len()).filter(|&i| base & (1 << i) == 0).collect();
    let total: u64 = 1 << free.len();
    let threads = options.threads.max(1) as u64;
    let chunk = total.div_ceil(threads);

    let walk = |start: u64, end: u64| -> Vec<u32> {
        let mut found = Vec::new();
        if start >= end {
            return found;
        }
        let gray = start ^ (start >> 1);
        let mut mask = base;
        for (bit, &idx) in free.iter().enumerate() {
            if gray & (1 << bit) != 0 {
                mask |= 1 << idx;
            }
        }
        let mut balances = Balances::new(table.len());
        for idx in 0..table.len() {
            if mask & (1 << idx) != 0 {
                balances.apply(&table.effects[idx], 1);
            }
        }
        let accept = |mask: u32, balances: &Balances| {
            let size = mask.count_ones() as usize;
            balances.unbalanced == 0
                && !(options.require_nonempty && size == 0)
                && options.max_size.map_or(true, |k| size <= k)
        };
        if accept(mask, &balances) {
            found.push(mask);
        }
        for k in start + 1..end {
            let idx = free[k.trailing_zeros() as usize];
            let sign = if mask & (1 << idx) == 0 { 1 } else { -1 };
            mask ^= 1 << idx;
            balances.apply(&table.effects[idx], sign);
            if accept(mask, &balances) {
                found.push(mask);
            }
        }
        found
    };

    let masks: Vec<u32> = if threads == 1 {
        walk(0, total)
    } else {
        thread::scope(|scope| {
            let handles: Vec<_> = (0..threads)
                .map(|t| {
                    let start = (t * chunk).min(total);
                    let end = ((t + 1) * chunk).min(total);
                    let walk = &walk;
                    scope.spawn(move || walk(start, end))
                })
                .collect();
            handles
                .into_iter()
                .flat_map(|h| h.join().expect("search worker panicked"))
                .collect()
        })
    };

    let members = masks
        .into_iter()
        .map(|m| (0..table.len()).filter(|&i| m & (1 << i) != 0).collect())
        .collect();
    Ok(to_subsets(&table, members))
}

/// Repair capacity: how many permutations at lex rank `≥ p` lie in
/// `τI^+` (resp. `τI^-`).
struct RepairTable {
    plus_after: Vec<Vec<u16>>,
    minus_after: Vec<Vec<u16>>,
}

impl RepairTable {
    fn new(table: &CosetTable) -> Self {
        let n = table.len();
        let mut plus_after = vec![vec![0u16; n]; n + 1];
        let mut minus_after = vec![vec![0u16; n]; n + 1];
        for p in (0..n).rev() {
            plus_after[p] = plus_after[p + 1].clone();
            minus_after[p] = minus_after[p + 1].clone();
            for &(tau, d) in &table.effects[p] {
                if d > 0 {
                    plus_after[p][tau as usize] += 1;
                } else {
                    minus_after[p][tau as usize] += 1;
                }
            }
        }
        Self {
            plus_after,
            minus_after,
        }
    }
}

struct PrunedSearch<'a> {
    table: &'a CosetTable,
    repair: &'a RepairTable,
    per_element: u64,
    require_nonempty: bool,
    balances: Balances,
    chosen: Vec<usize>,
    found: Vec<Vec<usize>>,
}

impl PrunedSearch<'_> {
    /// Whether the current balances can still be zeroed using at most
    /// `remaining` permutations of lex rank `≥ next`.
    fn repairable(&self, next: usize, remaining: usize) -> bool {
        if self.balances.total_abs > self.per_element * remaining as u64 {
            return false;
        }
        if self.balances.unbalanced == 0 {
            return true;
        }
        let plus = &self.repair.plus_after[next];
        let minus = &self.repair.minus_after[next];
        self.balances.values.iter().enumerate().all(|(tau, &b)| {
            let need = b.unsigned_abs() as usize;
            let available = if b > 0 { minus[tau] } else { plus[tau] } as usize;
            need <= available.min(remaining)
        })
    }

    fn record_if_balanced(&mut self) {
        if self.balances.unbalanced == 0 && !(self.require_nonempty && self.chosen.is_empty()) {
            self.found.push(self.chosen.clone());
        }
    }

    fn push(&mut self, idx: usize) {
        self.balances.apply(&self.table.effects[idx], 1);
        self.chosen.push(idx);
    }

    fn pop(&mut self) {
        let idx = self.chosen.pop().expect("nonempty stack");
        self.balances.apply(&self.table.effects[idx], -1);
    }

    /// Explores every extension by permutations of rank `≥ next`.
    fn extend(&mut self, next: usize, remaining: usize) {
        if remaining == 0 {
            return;
        }
        for idx in next..self.table.len() {
            self.push(idx);
            if self.repairable(idx + 1, remaining - 1) {
                self.record_if_balanced();
                self.extend(idx + 1, remaining - 1);
            }
            self.pop();
        }
    }
}

/// Depth-first search with repair-capacity pruning. Requires `max_size`.
pub fn enumerate_pruned(n: usize, options: &SearchOptions) -> Result<Vec<BTreeSet<Permutation>>> {
    check_degree(n)?;
    let Some(max_size) = options.max_size else {
        return Err(Error::UnsupportedSearch("depth-first search needs a size bound".into()));
    };
    if n > MAX_PRUNED_DEGREE || (n == MAX_PRUNED_DEGREE && max_size > MAX_PRUNED_SIZE) {
        return Err(Error::UnsupportedSearch(format!(
            "depth-first search supports degree at most {MAX_PRUNED_DEGREE} with size at most {MAX_PRUNED_SIZE}"
        )));
    }
    let table = CosetTable::new(n)?;
    let repair = RepairTable::new(&table);
    let new_search = || PrunedSearch {
        table: &table,
        repair: &repair,
        per_element: 1 << (n - 1),
        require_nonempty: options.require_nonempty,
        balances: Balances::new(table.len()),
        chosen: Vec::new(),
        found: Vec::new(),
    };

    // Root: the empty set, or {e} when the identity is required.
    let mut root = new_search();
    let mut budget = max_size;
    let mut first_free = 0;
    if options.require_identity {
        if max_size == 0 {
            return Ok(Vec::new());
        }
        root.push(0);
        budget -= 1;
        first_free = 1;
    }
    root.record_if_balanced();
    let mut found = std::mem::take(&mut root.found);
    let base = root.chosen.clone();

    if budget > 0 {
        let threads = options.threads.max(1);
        let branches: Vec<usize> = (first_free..table.len()).collect();
        let run_branches = |mine: Vec<usize>| -> Vec<Vec<usize>> {
            let mut s = new_search();
            for &b in &base {
                s.push(b);
            }
            for idx in mine {
                s.push(idx);
                if s.repairable(idx + 1, budget - 1) {
                    s.record_if_balanced();
                    s.extend(idx + 1, budget - 1);
                }
                s.pop();
            }
            s.found
        };
        let parts: Vec<Vec<Vec<usize>>> = if threads == 1 {
            vec![run_branches(branches)]
        } else {
            thread::scope(|scope| {
                let handles: Vec<_> = (0..threads)
                    .map(|t| {
                        let mine: Vec<usize> =
                            branches.iter().copied().skip(t).step_by(threads).collect();
                        let run = &run_branches;
                        scope.spawn(move || run(mine))
                    })
                    .collect();
                handles
                    .into_iter()
                    .map(|h| h.join().expect("search worker panicked"))
                    .collect()
            })
        };
        found.extend(parts.into_iter().flatten());
    }
    Ok(to_subsets(&table, found))
}

/// All five verdicts for one subset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsetReport {
    pub element: ElementReport,
    pub subset: SubsetVerdict,
}

impl SubsetReport {
    pub fn is_jacobi(&self) -> bool {
        self.subset.is_jacobi
    }
}

/// Runs the four element deciders on the indicator of `subset` together with
/// the coset-count criterion. Disagreement is an internal error.
pub fn verify_subset_report(subset: &BTreeSet<Permutation>, n: usize) -> Result<SubsetReport> {
    let element = verify_element_report(&indicator(subset, n)?)?;
    let verdict = is_jacobi_subset(subset, n)?;
    if verdict.is_jacobi != element.is_jacobi() {
        return Err(Error::DeciderDisagreement(format!(
            "coset counts say {} but element deciders say {} for {subset:?}",
            verdict.is_jacobi,
            element.is_jacobi()
        )));
    }
    Ok(SubsetReport {
        element,
        subset: verdict,
    })
}
