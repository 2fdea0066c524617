//! Exhaustive and randomized searches over GF(p) structure-constant
//! tables, hunting Novikov superalgebras of type S. The free slots of a
//! signature (d0, d1) are the (i, j, k) triples allowed by the grading;
//! assignments are enumerated with the odd-times-odd slots outermost so
//! that the all-zero odd square subtree can be pruned in one step, and the
//! outer assignments partition the space across threads deterministically.

use crate::algebra::{GradedVector, SuperAlgebra};
use crate::laws::{
    is_novikov_algebra, is_novikov_superalgebra, novikov_algebra_holds,
    novikov_superalgebra_holds, LawReport, Violation,
};
use crate::scalar::{FieldDescriptor, Scalar};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use std::time::{Duration, Instant};
use thiserror::Error;

pub const LAW_LOW_DIM: &str = "low-dimension-type-n";

pub const DEFAULT_BUDGET: u64 = 100_000_000;
pub const DEFAULT_WITNESS_CAP: usize = 16;
const HIT_CAP: usize = 10_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SearchError {
    #[error("search requires a prime field")]
    NotPrimeField,
    #[error("exhaustive search means {total} candidates, over the budget of {budget}")]
    BudgetExceeded { total: u128, budget: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchMode {
    Exhaustive,
    Random { samples: u64, seed: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchSpec {
    pub d0: usize,
    pub d1: usize,
    pub field: FieldDescriptor,
    pub mode: SearchMode,
    /// Skip candidates whose odd-times-odd products all vanish: those can
    /// never be type S, since then the graded and ungraded brackets agree.
    /// Also skips whole signatures that cannot carry type S (no even part,
    /// no odd part, or a one-dimensional odd part).
    pub prune_odd_square: bool,
    /// Use the boolean short-circuit law kernels in the hot loop; full
    /// reports are produced only for witnesses. Turning this off checks
    /// every candidate through the report-building path instead.
    pub short_circuit: bool,
    pub budget: u64,
    pub witness_cap: usize,
    /// Keep the full table of every candidate that passes the graded laws
    /// (capped); intended for small runs.
    pub collect_novikov_hits: bool,
}

impl SearchSpec {
    pub fn exhaustive(d0: usize, d1: usize, field: FieldDescriptor) -> Self {
        SearchSpec {
            d0,
            d1,
            field,
            mode: SearchMode::Exhaustive,
            prune_odd_square: false,
            short_circuit: true,
            budget: DEFAULT_BUDGET,
            witness_cap: DEFAULT_WITNESS_CAP,
            collect_novikov_hits: false,
        }
    }

    pub fn random(d0: usize, d1: usize, field: FieldDescriptor, samples: u64, seed: u64) -> Self {
        SearchSpec {
            mode: SearchMode::Random { samples, seed },
            ..SearchSpec::exhaustive(d0, d1, field)
        }
    }
}

#[derive(Debug, Clone)]
pub struct SearchReport {
    pub spec: SearchSpec,
    /// Candidates actually examined (pruned subtrees are not examined).
    pub candidates: u64,
    /// Always equals `candidates`: free-slot assignment only ever produces
    /// graded tables.
    pub graded: u64,
    pub novikov_super: u64,
    pub type_n: u64,
    pub type_s: u64,
    /// Type-S witnesses, capped at `spec.witness_cap`.
    pub witnesses: Vec<SuperAlgebra>,
    /// Filled only when `spec.collect_novikov_hits` is set.
    pub novikov_hits: Vec<SuperAlgebra>,
    pub elapsed: Duration,
    pub notes: Vec<String>,
}

/// The (i, j, k) slots not forced to zero by the grading, odd-times-odd
/// slots first, lexicographic within each group.
pub fn free_slots(d0: usize, d1: usize) -> Vec<(usize, usize, usize)> {
    let n = d0 + d1;
    let parity = |i: usize| u8::from(i >= d0);
    let mut odd_odd = Vec::new();
    let mut rest = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if parity(k) != parity(i) ^ parity(j) {
                    continue;
                }
                if parity(i) == 1 && parity(j) == 1 {
                    odd_odd.push((i, j, k));
                } else {
                    rest.push((i, j, k));
                }
            }
        }
    }
    odd_odd.extend(rest);
    odd_odd
}

pub fn free_slot_count(d0: usize, d1: usize) -> usize {
    free_slots(d0, d1).len()
}

fn odd_odd_slot_count(d0: usize, d1: usize) -> usize {
    d1 * d1 * d0
}

#[derive(Default)]
struct Tally {
    candidates: u64,
    novikov_super: u64,
    type_n: u64,
    type_s: u64,
    witnesses: Vec<SuperAlgebra>,
    hits: Vec<SuperAlgebra>,
}

impl Tally {
    fn absorb(&mut self, other: Tally) {
        self.candidates += other.candidates;
        self.novikov_super += other.novikov_super;
        self.type_n += other.type_n;
        self.type_s += other.type_s;
        self.witnesses.extend(other.witnesses);
        self.hits.extend(other.hits);
    }
}

fn classify_candidate(spec: &SearchSpec, scratch: &SuperAlgebra, tally: &mut Tally) {
    tally.candidates += 1;
    let passes_super = if spec.short_circuit {
        novikov_superalgebra_holds(scratch)
    } else {
        is_novikov_superalgebra(scratch).pass
    };
    if !passes_super {
        return;
    }
    tally.novikov_super += 1;
    if spec.collect_novikov_hits && tally.hits.len() < HIT_CAP {
        tally.hits.push(scratch.clone());
    }
    let passes_ungraded = if spec.short_circuit {
        novikov_algebra_holds(scratch)
    } else {
        is_novikov_algebra(scratch).pass
    };
    if passes_ungraded {
        tally.type_n += 1;
    } else {
        tally.type_s += 1;
        if tally.witnesses.len() < spec.witness_cap {
            // witness double-check through the full report path
            let graded = is_novikov_superalgebra(scratch);
            let ungraded = is_novikov_algebra(scratch);
            assert!(
                graded.pass && !ungraded.pass,
                "witness failed re-verification: graded pass = {}, ungraded pass = {}",
                graded.pass,
                ungraded.pass
            );
            tally.witnesses.push(scratch.clone());
        }
    }
}

/// Write the digits of `index` (base `elems.len()`, most significant digit
/// first) into the given slots of the scratch table.
fn write_assignment(
    scratch: &mut SuperAlgebra,
    slots: &[(usize, usize, usize)],
    mut index: u64,
    elems: &[Scalar],
) {
    let n = scratch.n();
    let base = elems.len() as u64;
    let table = scratch.table_mut();
    for &(i, j, k) in slots.iter().rev() {
        let digit = (index % base) as usize;
        index /= base;
        table[(i * n + j) * n + k] = elems[digit].clone();
    }
}

fn checked_total(p: u64, slots: usize) -> Option<u128> {
    (p as u128).checked_pow(u32::try_from(slots).ok()?)
}

fn signature_prune_reason(d0: usize, d1: usize) -> Option<String> {
    if d1 == 0 {
        Some(format!(
            "signature ({d0}, {d1}) skipped: with no odd part the graded and ungraded laws coincide, so type S is impossible"
        ))
    } else if d0 == 0 {
        Some(format!(
            "signature ({d0}, {d1}) skipped: with no even part all odd products vanish, so type S is impossible"
        ))
    } else if d1 == 1 {
        Some(format!(
            "signature ({d0}, {d1}) skipped: a one-dimensional odd part forces type N"
        ))
    } else {
        None
    }
}

pub fn search(spec: &SearchSpec) -> Result<SearchReport, SearchError> {
    let start = Instant::now();
    let p = spec.field.order().ok_or(SearchError::NotPrimeField)?;
    let mut tally = Tally::default();
    let mut notes = Vec::new();
    match &spec.mode {
        SearchMode::Exhaustive => {
            if spec.prune_odd_square {
                if let Some(reason) = signature_prune_reason(spec.d0, spec.d1) {
                    notes.push(reason);
                    return Ok(finish(spec, tally, notes, start));
                }
            }
            let slots = free_slots(spec.d0, spec.d1);
            let total = checked_total(p, slots.len());
            if !matches!(total, Some(t) if t <= spec.budget as u128) {
                return Err(SearchError::BudgetExceeded {
                    total: total.unwrap_or(u128::MAX),
                    budget: spec.budget,
                });
            }
            let oo_len = odd_odd_slot_count(spec.d0, spec.d1);
            let (outer_slots, inner_slots) = slots.split_at(oo_len);
            let elems = spec.field.elements().expect("prime fields are enumerable");
            let outer_total = (p as u128).pow(outer_slots.len() as u32) as u64;
            let inner_total = (p as u128).pow(inner_slots.len() as u32) as u64;
            let partials: Vec<Tally> = (0..outer_total)
                .into_par_iter()
                .map(|outer_idx| {
                    let mut part = Tally::default();
                    if spec.prune_odd_square && outer_idx == 0 && !outer_slots.is_empty() {
                        // all odd-times-odd constants zero: the whole
                        // subtree is type N territory
                        return part;
                    }
                    let mut scratch = SuperAlgebra::zero(spec.d0, spec.d1, spec.field);
                    write_assignment(&mut scratch, outer_slots, outer_idx, &elems);
                    for inner_idx in 0..inner_total {
                        write_assignment(&mut scratch, inner_slots, inner_idx, &elems);
                        classify_candidate(spec, &scratch, &mut part);
                    }
                    part
                })
                .collect();
            for part in partials {
                tally.absorb(part);
            }
            if spec.prune_odd_square && !outer_slots.is_empty() {
                notes.push(format!(
                    "pruned the all-zero odd-square subtree: {} candidates not examined",
                    inner_total
                ));
            }
        }
        SearchMode::Random { samples, seed } => {
            let slots = free_slots(spec.d0, spec.d1);
            let oo_len = odd_odd_slot_count(spec.d0, spec.d1);
            let elems = spec.field.elements().expect("prime fields are enumerable");
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            let mut scratch = SuperAlgebra::zero(spec.d0, spec.d1, spec.field);
            let mut skipped = 0u64;
            for _ in 0..*samples {
                let digits: Vec<usize> =
                    (0..slots.len()).map(|_| rng.gen_range(0..elems.len())).collect();
                {
                    let n = scratch.n();
                    let table = scratch.table_mut();
                    for (&(i, j, k), digit) in slots.iter().zip(&digits) {
                        table[(i * n + j) * n + k] = elems[*digit].clone();
                    }
                }
                if spec.prune_odd_square && digits[..oo_len].iter().all(|d| elems[*d].is_zero())
                {
                    tally.candidates += 1;
                    skipped += 1;
                    continue;
                }
                classify_candidate(spec, &scratch, &mut tally);
            }
            if skipped > 0 {
                notes.push(format!(
                    "{} sampled candidates with zero odd square were counted but not classified",
                    skipped
                ));
            }
        }
    }
    Ok(finish(spec, tally, notes, start))
}

fn finish(spec: &SearchSpec, mut tally: Tally, mut notes: Vec<String>, start: Instant) -> SearchReport {
    if (tally.witnesses.len() as u64) < tally.type_s {
        notes.push(format!(
            "witness list capped at {} of {} type-S hits",
            tally.witnesses.len(),
            tally.type_s
        ));
    }
    tally.witnesses.truncate(spec.witness_cap);
    if tally.hits.len() > HIT_CAP {
        tally.hits.truncate(HIT_CAP);
        notes.push(format!("novikov hit list capped at {}", HIT_CAP));
    }
    SearchReport {
        spec: spec.clone(),
        candidates: tally.candidates,
        graded: tally.candidates,
        novikov_super: tally.novikov_super,
        type_n: tally.type_n,
        type_s: tally.type_s,
        witnesses: tally.witnesses,
        novikov_hits: tally.hits,
        elapsed: start.elapsed(),
        notes,
    }
}

/// Every signature (d0, d1) with 1 <= d0 + d1 <= 3, smallest total
/// dimension first.
pub const LOW_DIM_SIGNATURES: [(usize, usize); 9] = [
    (1, 0),
    (0, 1),
    (2, 0),
    (1, 1),
    (0, 2),
    (3, 0),
    (2, 1),
    (1, 2),
    (0, 3),
];

/// Exhaustively classify every graded table with d0 + d1 <= 3 over GF(p)
/// and report whether any is type S. Signatures whose candidate count
/// exceeds the budget are skipped only when their odd part is empty, where
/// the graded and ungraded laws coincide and type S is impossible by
/// definition; any other over-budget signature is an error, never a silent
/// skip. The verdict is evidence about GF(p) only.
pub fn verify_low_dimension_type_n(p: u64, budget: u64) -> Result<LawReport, SearchError> {
    let field = FieldDescriptor::gf(p).map_err(|_| SearchError::NotPrimeField)?;
    let mut notes = Vec::new();
    let mut violations = Vec::new();
    let mut total_type_s = 0u64;
    for (d0, d1) in LOW_DIM_SIGNATURES {
        let slots = free_slot_count(d0, d1);
        let over_budget = match checked_total(p, slots) {
            Some(total) => total > budget as u128,
            None => true,
        };
        if over_budget {
            if d1 != 0 {
                return Err(SearchError::BudgetExceeded {
                    total: checked_total(p, slots).unwrap_or(u128::MAX),
                    budget,
                });
            }
            notes.push(format!(
                "({d0}, {d1}): skipped, {p}^{slots} candidates exceed the budget of {budget}; \
                 an empty odd part makes the graded and ungraded laws identical, so every \
                 Novikov superalgebra of this signature is type N by definition"
            ));
            continue;
        }
        let mut spec = SearchSpec::exhaustive(d0, d1, field);
        spec.budget = budget;
        let report = search(&spec)?;
        total_type_s += report.type_s;
        for w in &report.witnesses {
            violations.push(Violation {
                law: LAW_LOW_DIM.to_string(),
                indices: vec![d0, d1],
                residual: GradedVector { coeffs: w.table().to_vec() },
            });
        }
        notes.push(format!(
            "({}, {}): {} candidates, {} novikov-super, {} type N, {} type S",
            d0, d1, report.candidates, report.novikov_super, report.type_n, report.type_s
        ));
    }
    notes.push(format!(
        "exhaustive over GF({p}); evidence for this field only, not a statement about characteristic 0"
    ));
    Ok(LawReport { law: LAW_LOW_DIM.to_string(), pass: total_type_s == 0, violations, notes })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64) -> FieldDescriptor {
        FieldDescriptor::gf(p).unwrap()
    }

    #[test]
    fn free_slot_counts() {
        assert_eq!(free_slot_count(1, 1), 4);
        assert_eq!(free_slot_count(1, 2), 13);
        assert_eq!(free_slot_count(0, 2), 0);
        assert_eq!(free_slot_count(2, 2), 32);
        assert_eq!(free_slot_count(3, 0), 27);
        assert_eq!(free_slot_count(2, 1), 14);
    }

    #[test]
    fn odd_odd_slots_come_first() {
        let slots = free_slots(1, 2);
        assert_eq!(slots[..4], [(1, 1, 0), (1, 2, 0), (2, 1, 0), (2, 2, 0)]);
        assert_eq!(odd_odd_slot_count(1, 2), 4);
        assert_eq!(odd_odd_slot_count(0, 2), 0);
        assert_eq!(odd_odd_slot_count(2, 0), 0);
    }

    #[test]
    fn exhaustive_1_1_over_gf2_finds_the_odd_square_line() {
        let mut spec = SearchSpec::exhaustive(1, 1, gf(2));
        spec.collect_novikov_hits = true;
        let report = search(&spec).unwrap();
        assert_eq!(report.candidates, 16);
        assert_eq!(report.graded, 16);
        assert_eq!(report.novikov_super, 9);
        assert_eq!(report.type_s, 0);
        assert_eq!(report.type_n, 9);
        let vv_e = SuperAlgebra::from_entries(1, 1, gf(2), &[(1, 1, 0, gf(2).one())]).unwrap();
        assert!(report.novikov_hits.contains(&vv_e));
    }

    #[test]
    fn exhaustive_1_1_over_gf3() {
        let report = search(&SearchSpec::exhaustive(1, 1, gf(3))).unwrap();
        assert_eq!(report.candidates, 81);
        assert_eq!(report.novikov_super, 13);
        assert_eq!(report.type_s, 0);
    }

    #[test]
    fn pruned_and_unpruned_agree_on_type_s() {
        let spec = SearchSpec::exhaustive(1, 2, gf(2));
        let full = search(&spec).unwrap();
        assert_eq!(full.candidates, 8192);
        let mut pruned_spec = spec.clone();
        pruned_spec.prune_odd_square = true;
        let pruned = search(&pruned_spec).unwrap();
        // 2^9 inner assignments under the all-zero odd square are skipped
        assert_eq!(pruned.candidates, 8192 - 512);
        assert_eq!(full.type_s, pruned.type_s);
        assert_eq!(full.type_s, 0);
        assert!(full.witnesses.is_empty() && pruned.witnesses.is_empty());
    }

    #[test]
    fn pruning_skips_hopeless_signatures() {
        let mut spec = SearchSpec::exhaustive(0, 3, gf(5));
        spec.prune_odd_square = true;
        let report = search(&spec).unwrap();
        assert_eq!(report.candidates, 0);
        assert!(report.notes[0].contains("skipped"));
        // unpruned, the single all-zero table is examined
        let report = search(&SearchSpec::exhaustive(0, 3, gf(5))).unwrap();
        assert_eq!(report.candidates, 1);
        assert_eq!(report.novikov_super, 1);
    }

    #[test]
    fn short_circuit_and_report_paths_agree() {
        let mut spec = SearchSpec::exhaustive(1, 1, gf(3));
        let fast = search(&spec).unwrap();
        spec.short_circuit = false;
        let slow = search(&spec).unwrap();
        assert_eq!(fast.novikov_super, slow.novikov_super);
        assert_eq!(fast.type_n, slow.type_n);
        assert_eq!(fast.type_s, slow.type_s);
    }

    #[test]
    fn random_mode_is_deterministic_per_seed() {
        let spec = SearchSpec::random(1, 2, gf(3), 250, 0xfeed);
        let a = search(&spec).unwrap();
        let b = search(&spec).unwrap();
        assert_eq!(a.candidates, 250);
        assert_eq!(a.novikov_super, b.novikov_super);
        assert_eq!(a.type_n, b.type_n);
        assert_eq!(a.type_s, b.type_s);
        assert_eq!(a.witnesses, b.witnesses);
        assert_eq!(a.type_n + a.type_s, a.novikov_super);
    }

    #[test]
    fn budget_is_enforced() {
        let err = search(&SearchSpec::exhaustive(1, 2, gf(5))).unwrap_err();
        match err {
            SearchError::BudgetExceeded { total, budget } => {
                assert_eq!(total, 5u128.pow(13));
                assert_eq!(budget, DEFAULT_BUDGET);
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn low_dimension_sweep_over_gf2() {
        let report = verify_low_dimension_type_n(2, DEFAULT_BUDGET).unwrap();
        assert!(report.pass);
        assert!(report.violations.is_empty());
        assert!(report.notes.iter().any(|n| n.contains("(3, 0): skipped")));
        assert!(report.notes.iter().any(|n| n.contains("(1, 2): 8192 candidates")));
        assert!(report.notes.iter().any(|n| n.contains("evidence for this field only")));
    }

    #[test]
    fn nonprime_field_is_rejected() {
        assert_eq!(
            verify_low_dimension_type_n(6, DEFAULT_BUDGET),
            Err(SearchError::NotPrimeField)
        );
    }
}
