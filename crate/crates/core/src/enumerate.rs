//! Exhaustive enumeration of the admissible basis monomials, graded by
//! specialized weight: the sum-side ground truth for both identities.
//!
//! A monomial is a multiset of parts that lie in P₋, avoid X1(-1/2), and
//! contain no forbidden pair. Generation is depth-first over the parts in
//! decreasing weight order. Every forbidden pair realized by a part system
//! stays within a small weight gap (at most m + 4; the exact bound is
//! measured from the compiled table), so a candidate only needs checking
//! against the tail of the chosen stack within that gap.
//!
//! Work is split across workers by the first chosen part; each worker owns
//! disjoint subtrees and the merge is plain addition, so counts do not
//! depend on the worker count.

use std::num::NonZeroUsize;

use crate::leading_terms::{initial_excluded_part, LeadingTermTable};
use crate::partition::ColoredPartition;
use crate::specialize::{Specialization, WeightedPart};
use crate::Error;

/// `counts[n]` = number of admissible monomials of weight n; `counts[0]` = 1.
pub type CountVector = Vec<u64>;

/// The admitted parts of weight ≤ max_n under one specialization, with the
/// measured conflict bound for the stack scan.
#[derive(Debug)]
pub struct PartSystem {
    parts: Vec<WeightedPart>,
    weights: Vec<u64>,
    conflict_gap: u64,
}

impl PartSystem {
    /// Build the part system: all P₋ parts except X1(-1/2) with weight in
    /// 1..=max_n, sorted by decreasing weight.
    ///
    /// Fails when the specialization admits a part of weight 0, since the
    /// weight grading would then have infinite graded pieces.
    pub fn new(
        table: &LeadingTermTable,
        spec: Specialization,
        max_n: u64,
    ) -> Result<PartSystem, Error> {
        let excluded = initial_excluded_part();
        // Weight 0 can only appear at the low end of a color family.
        let probe = spec.parts_up_to(0);
        if probe.iter().any(|w| w.origin != excluded) {
            return Err(Error::InvalidSpecialization {
                s0: spec.s0(),
                s1: spec.s1(),
                reason: "a part of weight 0 is admitted".into(),
            });
        }

        let parts: Vec<WeightedPart> = spec
            .parts_up_to(max_n)
            .into_iter()
            .filter(|w| w.origin != excluded)
            .collect();
        let weights: Vec<u64> = parts.iter().map(|w| w.value).collect();

        // Machine-checked conflict bound: the widest weight gap over all
        // forbidden pairs inside this system.
        let mut conflict_gap = 0;
        for (i, a) in parts.iter().enumerate() {
            for b in &parts[i..] {
                if table.is_forbidden_pair(a.origin, b.origin) {
                    conflict_gap = conflict_gap.max(a.value.abs_diff(b.value));
                }
            }
        }

        Ok(PartSystem {
            parts,
            weights,
            conflict_gap,
        })
    }

    pub fn parts(&self) -> &[WeightedPart] {
        &self.parts
    }

    /// The measured bound on weight gaps of forbidden pairs.
    pub fn conflict_gap(&self) -> u64 {
        self.conflict_gap
    }

    fn compatible(&self, table: &LeadingTermTable, chosen: &[u32], candidate: usize) -> bool {
        let cand = &self.parts[candidate];
        for &idx in chosen.iter().rev() {
            let prev = &self.parts[idx as usize];
            if prev.value - cand.value > self.conflict_gap {
                break;
            }
            if table.is_forbidden_pair(prev.origin, cand.origin) {
                return false;
            }
        }
        true
    }

    fn count_subtree(
        &self,
        table: &LeadingTermTable,
        start: usize,
        used: u64,
        max_n: u64,
        chosen: &mut Vec<u32>,
        counts: &mut [u64],
    ) {
        let remaining = max_n - used;
        // Weights are sorted descending: skip the prefix that no longer fits.
        let from = start + self.weights[start..].partition_point(|&w| w > remaining);
        for i in from..self.parts.len() {
            if !self.compatible(table, chosen, i) {
                continue;
            }
            let total = used + self.weights[i];
            counts[total as usize] += 1;
            chosen.push(i as u32);
            self.count_subtree(table, i, total, max_n, chosen, counts);
            chosen.pop();
        }
    }
}

fn default_workers() -> NonZeroUsize {
    std::thread::available_parallelism().unwrap_or(NonZeroUsize::new(1).unwrap())
}

/// Count the admissible monomials of each weight 0..=max_n, using the
/// default level of parallelism.
pub fn count_basis(
    table: &LeadingTermTable,
    spec: Specialization,
    max_n: u64,
) -> Result<CountVector, Error> {
    count_basis_with_workers(table, spec, max_n, default_workers())
}

/// Count with an explicit worker count. The result is identical for every
/// worker count: subtrees are disjoint and merging is addition.
pub fn count_basis_with_workers(
    table: &LeadingTermTable,
    spec: Specialization,
    max_n: u64,
    workers: NonZeroUsize,
) -> Result<CountVector, Error> {
    let system = PartSystem::new(table, spec, max_n)?;
    let len = max_n as usize + 1;
    let workers = workers.get().min(system.parts.len().max(1));

    let mut counts = if system.parts.is_empty() {
        vec![0u64; len]
    } else if workers == 1 {
        let mut counts = vec![0u64; len];
        let mut chosen = Vec::new();
        system.count_subtree(table, 0, 0, max_n, &mut chosen, &mut counts);
        counts
    } else {
        let mut merged = vec![0u64; len];
        std::thread::scope(|scope| {
            let mut handles = Vec::with_capacity(workers);
            for worker in 0..workers {
                let system = &system;
                handles.push(scope.spawn(move || {
                    let mut counts = vec![0u64; len];
                    let mut chosen = Vec::new();
                    // Round-robin over the first chosen part.
                    let mut root = worker;
                    while root < system.parts.len() {
                        let w = system.weights[root];
                        if w <= max_n {
                            counts[w as usize] += 1;
                            chosen.push(root as u32);
                            system.count_subtree(table, root, w, max_n, &mut chosen, &mut counts);
                            chosen.pop();
                        }
                        root += workers;
                    }
                    counts
                }));
            }
            for handle in handles {
                for (m, c) in merged
                    .iter_mut()
                    .zip(handle.join().expect("worker panicked"))
                {
                    *m += c;
                }
            }
        });
        merged
    };

    counts[0] += 1; // the empty monomial
    Ok(counts)
}

/// The explicit monomials of weight exactly `n`, in a deterministic
/// canonical order (ascending in the partition order).
pub fn list_basis(
    table: &LeadingTermTable,
    spec: Specialization,
    n: u64,
) -> Result<Vec<ColoredPartition>, Error> {
    let system = PartSystem::new(table, spec, n)?;
    let mut out = Vec::new();
    let mut chosen: Vec<u32> = Vec::new();

    fn rec(
        system: &PartSystem,
        table: &LeadingTermTable,
        start: usize,
        used: u64,
        n: u64,
        chosen: &mut Vec<u32>,
        out: &mut Vec<ColoredPartition>,
    ) {
        if used == n {
            out.push(
                chosen
                    .iter()
                    .map(|&i| system.parts[i as usize].origin)
                    .collect(),
            );
            return;
        }
        let remaining = n - used;
        let from = start + system.weights[start..].partition_point(|&w| w > remaining);
        for i in from..system.parts.len() {
            if !system.compatible(table, chosen, i) {
                continue;
            }
            chosen.push(i as u32);
            rec(system, table, i, used + system.weights[i], n, chosen, out);
            chosen.pop();
        }
    }

    rec(&system, table, 0, 0, n, &mut chosen, &mut out);
    out.sort_by(|a, b| a.compare(b));
    Ok(out)
}
