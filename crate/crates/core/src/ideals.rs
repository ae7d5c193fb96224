//! Balanced-ideal predicates, complete enumeration, and classification.
//!
//! A subset I of a quotient poset is an ideal if it is downward closed,
//! fat if w ∉ I implies w₀w ∈ I, slim if w ∈ I implies w₀w ∉ I, and
//! balanced if it is both (w ∈ I ⟺ w₀w ∉ I).
//!
//! Enumeration pairs each coset x with φ(x) = w₀·x (there are no fixed
//! points, or the count is zero) and runs a depth-first search deciding one
//! pair at a time in decreasing order of maximal length. Choosing x ∈ I
//! forces downset(x) ⊆ I and upset(φ(x)) ∩ I = ∅; the two constraint sets
//! are kept as bit sets and a non-empty intersection prunes the branch.
//! Because φ reverses the order, forced pairs need no extra propagation,
//! so each search node costs a few word-parallel bit operations.

use crate::bitset::Bitset;
use crate::error::{Error, Result};
use crate::parabolic::Quotient;
use crate::rootdata::MultiplicityProfile;
use crate::util::SimpleSet;
use rayon::prelude::*;
use serde::Serialize;
use std::time::Instant;

/// A subset of the cosets of a specific quotient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealSet {
    quotient_id: u64,
    bits: Bitset,
}

impl IdealSet {
    pub fn new(quotient: &Quotient, bits: Bitset) -> IdealSet {
        assert_eq!(
            bits.num_words(),
            Bitset::new(quotient.num_cosets()).num_words(),
            "bit set capacity does not match the quotient"
        );
        IdealSet {
            quotient_id: quotient.id(),
            bits,
        }
    }

    pub fn from_cosets(quotient: &Quotient, cosets: impl IntoIterator<Item = u32>) -> IdealSet {
        let mut bits = Bitset::new(quotient.num_cosets());
        for c in cosets {
            bits.insert(c as usize);
        }
        IdealSet::new(quotient, bits)
    }

    pub fn bits(&self) -> &Bitset {
        &self.bits
    }

    pub fn contains(&self, coset: u32) -> bool {
        self.bits.contains(coset as usize)
    }

    pub fn len(&self) -> usize {
        self.bits.count()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    fn check(&self, quotient: &Quotient) {
        assert_eq!(
            self.quotient_id,
            quotient.id(),
            "ideal set used with a different quotient than it was built from"
        );
    }
}

/// Downward closure test.
pub fn is_ideal(q: &Quotient, set: &IdealSet) -> bool {
    set.check(q);
    set.bits
        .iter_ones()
        .all(|x| q.downset(x as u32).is_subset(&set.bits))
}

/// w ∉ I ⟹ w₀w ∈ I.
pub fn is_fat(q: &Quotient, set: &IdealSet) -> Result<bool> {
    set.check(q);
    let action = q.w0_action()?;
    Ok((0..q.num_cosets()).all(|x| set.bits.contains(x) || set.bits.contains(action[x] as usize)))
}

/// w ∈ I ⟹ w₀w ∉ I.
pub fn is_slim(q: &Quotient, set: &IdealSet) -> Result<bool> {
    set.check(q);
    let action = q.w0_action()?;
    Ok(set
        .bits
        .iter_ones()
        .all(|x| !set.bits.contains(action[x] as usize)))
}

/// Fat, slim and downward closed.
pub fn is_balanced(q: &Quotient, set: &IdealSet) -> Result<bool> {
    Ok(is_fat(q, set)? && is_slim(q, set)? && is_ideal(q, set))
}

/// The maximal elements of an ideal; their downsets reproduce it.
pub fn minimal_generators(q: &Quotient, set: &IdealSet) -> Result<Vec<u32>> {
    set.check(q);
    if !is_ideal(q, set) {
        return Err(Error::NotAnIdeal);
    }
    Ok(maximal_elements(q, &set.bits))
}

fn maximal_elements(q: &Quotient, bits: &Bitset) -> Vec<u32> {
    bits.iter_ones()
        .filter(|&x| {
            let mut above = q.upset(x as u32).clone();
            above.intersect_with(bits);
            above.count() == 1
        })
        .map(|x| x as u32)
        .collect()
}

/// Left and right invariance of an ideal in the full quotient (θ = η = Δ):
/// the simple reflections whose left (right) multiplication preserves it.
pub fn invariance(q: &Quotient, set: &IdealSet) -> Result<(SimpleSet, SimpleSet)> {
    set.check(q);
    if !q.is_full_quotient() {
        return Err(Error::NotFullQuotient);
    }
    let table = q.table();
    let rank = table.rank();
    let mut left = SimpleSet::EMPTY;
    let mut right = SimpleSet::EMPTY;
    for i in 0..rank {
        if set
            .bits
            .iter_ones()
            .all(|w| set.bits.contains(table.left_mul(w as u32, i) as usize))
        {
            left.insert(i);
        }
        if set
            .bits
            .iter_ones()
            .all(|w| set.bits.contains(table.right_mul(w as u32, i) as usize))
        {
            right.insert(i);
        }
    }
    Ok((left, right))
}

/// Weighted dimension of an ideal for one-sided quotients: the maximum
/// coset dimension, attained on a maximal element.
pub fn ideal_dimension(q: &Quotient, set: &IdealSet, profile: &MultiplicityProfile) -> Result<u64> {
    set.check(q);
    if !is_ideal(q, set) {
        return Err(Error::NotAnIdeal);
    }
    let gens = maximal_elements(q, &set.bits);
    gens.iter()
        .map(|&c| q.coset_weighted_dim(c, profile))
        .try_fold(0u64, |acc, d| Ok(acc.max(d?)))
}

/// Extend a slim ideal to a balanced ideal, greedily in the canonical
/// coset order. Requires the w₀-action to be fixed-point free.
pub fn extend_slim_to_balanced(q: &Quotient, set: &IdealSet) -> Result<IdealSet> {
    set.check(q);
    if !is_ideal(q, set) {
        return Err(Error::NotAnIdeal);
    }
    if !is_slim(q, set)? {
        return Err(Error::NotSlim);
    }
    if q.has_fixed_point()? {
        return Err(Error::FixedPointExists);
    }
    let action = q.w0_action()?;
    let num = q.num_cosets();
    let mut in_set = set.bits.clone();
    let mut out_set = Bitset::new(num);
    for x in set.bits.iter_ones() {
        out_set.union_with(q.upset(action[x]));
    }
    debug_assert!(in_set.is_disjoint(&out_set), "slim check must prevent this");
    // The coset order is a linear extension, so by the time x is reached
    // everything below it is decided and adding x can never conflict.
    for x in 0..num {
        if in_set.contains(x) || out_set.contains(x) {
            continue;
        }
        in_set.union_with(q.downset(x as u32));
        out_set.union_with(q.upset(action[x]));
        debug_assert!(in_set.is_disjoint(&out_set));
    }
    debug_assert!(in_set.union_covers(&out_set, num));
    Ok(IdealSet::new(q, in_set))
}

/// A classified balanced ideal.
#[derive(Clone, Debug)]
pub struct BalancedIdealReport {
    /// Membership bit set over quotient cosets.
    pub membership: Bitset,
    /// Maximal cosets, sorted by (length, reduced word) of their reps.
    pub generators: Vec<u32>,
    /// Reduced words (0-based letters) of the generators' minimal reps.
    pub generator_words: Vec<Vec<u8>>,
    pub size: u64,
    /// Maximal weighted coset dimension; present only for θ = Δ.
    pub dimension: Option<u64>,
    /// Present only for the full quotient θ = η = Δ.
    pub left_invariance: Option<SimpleSet>,
    pub right_invariance: Option<SimpleSet>,
}

/// One ideal in the machine-readable list schema (1-based indices).
#[derive(Serialize)]
pub struct IdealRecord {
    pub generators: Vec<Vec<u32>>,
    pub size: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dimension: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub left_invariance: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub right_invariance: Option<Vec<usize>>,
}

/// The machine-readable enumeration report.
#[derive(Serialize)]
pub struct QuotientListing {
    #[serde(rename = "type")]
    pub group_type: String,
    pub theta: Vec<usize>,
    pub eta: Vec<usize>,
    pub num_cosets: usize,
    pub fixed_point_free: bool,
    pub count: u64,
    pub ideals: Vec<IdealRecord>,
}

impl BalancedIdealReport {
    pub fn to_record(&self) -> IdealRecord {
        IdealRecord {
            generators: self
                .generator_words
                .iter()
                .map(|w| w.iter().map(|&a| a as u32 + 1).collect())
                .collect(),
            size: self.size,
            dimension: self.dimension,
            left_invariance: self.left_invariance.map(|s| s.to_one_based()),
            right_invariance: self.right_invariance.map(|s| s.to_one_based()),
        }
    }

    /// Sort key: size, then the generator words lexicographically
    /// (shorter word first within equal prefixes).
    fn sort_key(&self) -> (u64, Vec<(usize, Vec<u8>)>) {
        (
            self.size,
            self.generator_words
                .iter()
                .map(|w| (w.len(), w.clone()))
                .collect(),
        )
    }
}

/// Enumeration request parameters.
#[derive(Default)]
pub struct EnumerateOptions<'p> {
    /// Gather per-ideal reports (list mode) rather than just counting.
    pub list: bool,
    /// In list mode, fail with `LimitExceeded` when the count passes this.
    pub limit: Option<u64>,
    /// Profile for the dimension field (one-sided quotients only).
    pub dim_profile: Option<&'p MultiplicityProfile>,
    /// Split the search on the first `d` decision pairs for parallelism.
    /// Defaults to covering 4× the current rayon thread count.
    pub split_depth: Option<usize>,
    /// Soft wall-clock cap; on expiry the result is marked incomplete and
    /// the count is a lower bound.
    pub deadline: Option<Instant>,
}

/// Enumeration outcome. `count` is exact when `complete` holds, otherwise
/// a lower bound.
pub struct Enumeration {
    pub count: u64,
    pub complete: bool,
    pub fixed_point_free: bool,
    pub reports: Vec<BalancedIdealReport>,
}

/// Count or list all balanced ideals of the quotient.
pub fn enumerate_balanced(q: &Quotient, opts: &EnumerateOptions) -> Result<Enumeration> {
    let action = q.w0_action()?.to_vec();
    if q.has_fixed_point()? {
        return Ok(Enumeration {
            count: 0,
            complete: true,
            fixed_point_free: false,
            reports: Vec::new(),
        });
    }
    let num = q.num_cosets();
    debug_assert_eq!(num % 2, 0, "fixed-point-free involution needs even size");

    // Decision pairs {x, φ(x)}, led by the longer element, in decreasing
    // order of that length. Ties break on the coset index so the search
    // tree is identical run to run.
    let table = q.table();
    let mut pairs: Vec<(u32, u32)> = Vec::with_capacity(num / 2);
    for x in 0..num as u32 {
        let y = action[x as usize];
        if x < y {
            let (lx, ly) = (table.length(q.rep(x)), table.length(q.rep(y)));
            pairs.push(if ly > lx { (y, x) } else { (x, y) });
        }
    }
    pairs.sort_by_key(|&(lead, _)| (std::cmp::Reverse(table.length(q.rep(lead))), lead));

    let collect_cap = match (opts.list, opts.limit) {
        (false, _) => 0,
        (true, Some(limit)) => limit.saturating_add(1),
        (true, None) => u64::MAX,
    };
    let ctx = SearchContext {
        q,
        pairs: &pairs,
        collect_cap,
        deadline: opts.deadline,
    };

    // Expand the top of the tree into independent prefix states, then run
    // the subtrees in parallel. Counting is associative and the list is
    // canonically sorted afterwards, so the outcome does not depend on the
    // degree of parallelism.
    let target = match opts.split_depth {
        Some(d) => 1usize << d.min(20),
        None => (4 * rayon::current_num_threads().max(1)).next_power_of_two(),
    };
    let mut outcome = WorkerOutcome::default();
    let root = NodeState {
        in_set: Bitset::new(num),
        out_set: Bitset::new(num),
        cursor: 0,
    };
    let mut frontier = vec![root];
    while frontier.len() < target {
        let mut next = Vec::with_capacity(frontier.len() * 2);
        let mut grew = false;
        for state in frontier {
            match ctx.advance(state) {
                Advanced::Leaf(in_set) => outcome.record_leaf(&ctx, in_set),
                Advanced::Branch(a, b) => {
                    grew = true;
                    next.extend(a);
                    next.extend(b);
                }
            }
        }
        frontier = next;
        if !grew || frontier.is_empty() {
            break;
        }
    }

    let worker_results: Vec<WorkerOutcome> = frontier
        .into_par_iter()
        .map(|state| {
            let mut out = WorkerOutcome::default();
            ctx.dfs(state, &mut out, &mut 0u32);
            out
        })
        .collect();
    for w in worker_results {
        outcome.merge(w);
    }

    if let (Some(limit), true) = (opts.limit, opts.list) {
        if outcome.count > limit {
            return Err(Error::LimitExceeded { limit });
        }
    }

    let mut reports: Vec<BalancedIdealReport> = outcome
        .ideals
        .into_iter()
        .map(|bits| build_report(q, bits, opts.dim_profile))
        .collect();
    reports.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));

    Ok(Enumeration {
        count: outcome.count,
        complete: outcome.complete,
        fixed_point_free: true,
        reports,
    })
}

struct SearchContext<'a> {
    q: &'a Quotient,
    pairs: &'a [(u32, u32)],
    collect_cap: u64,
    deadline: Option<Instant>,
}

#[derive(Clone)]
struct NodeState {
    in_set: Bitset,
    out_set: Bitset,
    cursor: usize,
}

enum Advanced {
    Leaf(Bitset),
    Branch(Option<NodeState>, Option<NodeState>),
}

struct WorkerOutcome {
    count: u64,
    ideals: Vec<Bitset>,
    complete: bool,
}

impl Default for WorkerOutcome {
    fn default() -> Self {
        WorkerOutcome {
            count: 0,
            ideals: Vec::new(),
            complete: true,
        }
    }
}

impl WorkerOutcome {
    fn record_leaf(&mut self, ctx: &SearchContext, in_set: Bitset) {
        self.count += 1;
        if (self.ideals.len() as u64) < ctx.collect_cap {
            self.ideals.push(in_set);
        }
    }

    fn merge(&mut self, other: WorkerOutcome) {
        self.count += other.count;
        self.ideals.extend(other.ideals);
        self.complete &= other.complete;
    }
}

impl SearchContext<'_> {
    /// Skip already-forced pairs; then either report a leaf or produce the
    /// two child states (pruned children come back as `None`).
    fn advance(&self, mut state: NodeState) -> Advanced {
        while state.cursor < self.pairs.len() {
            let (lead, _) = self.pairs[state.cursor];
            if state.in_set.contains(lead as usize) || state.out_set.contains(lead as usize) {
                state.cursor += 1;
                continue;
            }
            let (lead, partner) = self.pairs[state.cursor];
            let mk = |inside: u32, outside: u32| -> Option<NodeState> {
                let mut in_set = state.in_set.clone();
                let mut out_set = state.out_set.clone();
                in_set.union_with(self.q.downset(inside));
                out_set.union_with(self.q.upset(outside));
                in_set.is_disjoint(&out_set).then_some(NodeState {
                    in_set,
                    out_set,
                    cursor: state.cursor + 1,
                })
            };
            return Advanced::Branch(mk(lead, partner), mk(partner, lead));
        }
        debug_assert!(state
            .in_set
            .union_covers(&state.out_set, self.q.num_cosets()));
        Advanced::Leaf(state.in_set)
    }

    fn dfs(&self, state: NodeState, out: &mut WorkerOutcome, tick: &mut u32) {
        if !out.complete {
            return;
        }
        *tick = tick.wrapping_add(1);
        if *tick % 1024 == 0 {
            if let Some(deadline) = self.deadline {
                if Instant::now() >= deadline {
                    out.complete = false;
                    return;
                }
            }
        }
        match self.advance(state) {
            Advanced::Leaf(in_set) => out.record_leaf(self, in_set),
            Advanced::Branch(a, b) => {
                if let Some(a) = a {
                    self.dfs(a, out, tick);
                }
                if let Some(b) = b {
                    self.dfs(b, out, tick);
                }
            }
        }
    }
}

fn build_report(
    q: &Quotient,
    bits: Bitset,
    dim_profile: Option<&MultiplicityProfile>,
) -> BalancedIdealReport {
    let table = q.table();
    let mut generators = maximal_elements(q, &bits);
    let mut keyed: Vec<(usize, Vec<u8>, u32)> = generators
        .drain(..)
        .map(|c| {
            let word = table.reduced_word(q.rep(c));
            (word.len(), word, c)
        })
        .collect();
    keyed.sort();
    let generators: Vec<u32> = keyed.iter().map(|(_, _, c)| *c).collect();
    let generator_words: Vec<Vec<u8>> = keyed.into_iter().map(|(_, w, _)| w).collect();

    let full = SimpleSet::full(table.rank());
    let dimension = if q.theta() == full {
        dim_profile.map(|p| {
            generators
                .iter()
                .map(|&c| q.coset_weighted_dim(c, p).expect("θ = Δ checked"))
                .max()
                .unwrap_or(0)
        })
    } else {
        None
    };
    let (left_invariance, right_invariance) = if q.is_full_quotient() {
        let set = IdealSet {
            quotient_id: q.id(),
            bits: bits.clone(),
        };
        let (l, r) = invariance(q, &set).expect("full quotient checked");
        (Some(l), Some(r))
    } else {
        (None, None)
    };

    BalancedIdealReport {
        size: bits.count() as u64,
        membership: bits,
        generators,
        generator_words,
        dimension,
        left_invariance,
        right_invariance,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::{CoxeterDiagram, RootSystem};
    use crate::weyl::GroupTable;
    use std::sync::Arc;

    fn group(label: &str) -> Arc<GroupTable> {
        Arc::new(
            GroupTable::enumerate(RootSystem::new(CoxeterDiagram::parse(label).unwrap())).unwrap(),
        )
    }

    fn quot(table: &Arc<GroupTable>, theta: &[usize], eta: &[usize]) -> Quotient {
        let theta = SimpleSet::from_indices(theta.iter().map(|&i| i - 1));
        let eta = SimpleSet::from_indices(eta.iter().map(|&i| i - 1));
        Quotient::new(table.clone(), theta, eta).unwrap()
    }

    fn count(q: &Quotient) -> u64 {
        enumerate_balanced(q, &EnumerateOptions::default())
            .unwrap()
            .count
    }

    #[test]
    fn predicates_on_c3_chain() {
        let g = group("C3");
        let q = quot(&g, &[3], &[3]);
        // Cosets in canonical order are [3] (identity), [2], [1], [0].
        let full = IdealSet::from_cosets(&q, 0..4);
        let empty = IdealSet::from_cosets(&q, []);
        assert!(is_ideal(&q, &full) && is_ideal(&q, &empty));
        assert!(is_fat(&q, &full).unwrap() && !is_slim(&q, &full).unwrap());
        assert!(is_slim(&q, &empty).unwrap() && !is_fat(&q, &empty).unwrap());
        // {top} alone is not an ideal.
        let top = IdealSet::from_cosets(&q, [3]);
        assert!(!is_ideal(&q, &top));
        // I = {[2], [3]} = cosets {0, 1} is balanced.
        let balanced = IdealSet::from_cosets(&q, [0, 1]);
        assert!(is_balanced(&q, &balanced).unwrap());
        assert_eq!(count(&q), 1);
    }

    #[test]
    fn a1_single_ideal() {
        let g = group("A1");
        let q = quot(&g, &[1], &[1]);
        let result = enumerate_balanced(
            &q,
            &EnumerateOptions {
                list: true,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(result.count, 1);
        let report = &result.reports[0];
        assert_eq!(report.size, 1);
        assert!(report.membership.contains(0));
        assert_eq!(report.generator_words, vec![Vec::<u8>::new()]);
    }

    #[test]
    fn a2_single_ideal() {
        let g = group("A2");
        let q = quot(&g, &[1, 2], &[1, 2]);
        let result = enumerate_balanced(
            &q,
            &EnumerateOptions {
                list: true,
                dim_profile: Some(&MultiplicityProfile::split(g.root_system())),
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(result.count, 1);
        let report = &result.reports[0];
        assert_eq!(report.size, 3);
        assert_eq!(report.dimension, Some(1));
        assert_eq!(report.generator_words, vec![vec![0u8], vec![1u8]]);
        assert_eq!(report.left_invariance, Some(SimpleSet::EMPTY));
        assert_eq!(report.right_invariance, Some(SimpleSet::EMPTY));
    }

    #[test]
    fn a3_count_is_ten() {
        let g = group("A3");
        let q = quot(&g, &[1, 2, 3], &[1, 2, 3]);
        assert_eq!(count(&q), 10);
    }

    #[test]
    fn fixed_point_short_circuit() {
        let g = group("A3");
        let q = quot(&g, &[1, 2, 3], &[2]);
        let result = enumerate_balanced(&q, &EnumerateOptions::default()).unwrap();
        assert_eq!(result.count, 0);
        assert!(!result.fixed_point_free);
    }

    #[test]
    fn complement_is_w0_image() {
        let g = group("B3");
        let q = quot(&g, &[1, 2, 3], &[1, 2, 3]);
        let result = enumerate_balanced(
            &q,
            &EnumerateOptions {
                list: true,
                ..Default::default()
            },
        )
        .unwrap();
        assert!(result.count > 0);
        let action = q.w0_action().unwrap();
        for report in &result.reports {
            assert_eq!(report.size as usize * 2, q.num_cosets());
            for x in 0..q.num_cosets() {
                assert_eq!(
                    report.membership.contains(x),
                    !report.membership.contains(action[x] as usize)
                );
            }
            let set = IdealSet::new(&q, report.membership.clone());
            assert!(is_balanced(&q, &set).unwrap());
        }
    }

    #[test]
    fn brute_force_equivalence_small() {
        // Every subset of the cosets, filtered through is_balanced.
        for (label, theta, eta) in [
            ("A2", vec![1, 2], vec![1, 2]),
            ("B2", vec![1, 2], vec![1, 2]),
            ("G2", vec![1, 2], vec![1, 2]),
            ("A3", vec![1, 2, 3], vec![1]),
            ("A3", vec![2], vec![1, 2, 3]),
            ("C3", vec![3], vec![3]),
        ] {
            let g = group(label);
            let q = quot(&g, &theta, &eta);
            let n = q.num_cosets();
            assert!(n <= 20, "{label}: {n} cosets too many for brute force");
            let mut expected = Vec::new();
            for mask in 0u32..1 << n {
                let set = IdealSet::from_cosets(&q, (0..n as u32).filter(|&c| mask >> c & 1 == 1));
                if is_balanced(&q, &set).unwrap() {
                    expected.push(set.bits().clone());
                }
            }
            let result = enumerate_balanced(
                &q,
                &EnumerateOptions {
                    list: true,
                    ..Default::default()
                },
            )
            .unwrap();
            assert_eq!(result.count as usize, expected.len(), "{label} {theta:?} {eta:?}");
            let mut got: Vec<Bitset> = result.reports.iter().map(|r| r.membership.clone()).collect();
            got.sort();
            expected.sort();
            assert_eq!(got, expected, "{label} {theta:?} {eta:?}");
        }
    }

    #[test]
    fn extend_slim_c3() {
        let g = group("C3");
        let q = quot(&g, &[3], &[3]);
        // {[3]} = coset 0 (the identity coset) is a slim ideal.
        let slim = IdealSet::from_cosets(&q, [0]);
        let balanced = extend_slim_to_balanced(&q, &slim).unwrap();
        assert_eq!(balanced.bits().iter_ones().collect::<Vec<_>>(), vec![0, 1]);
        // An already-balanced input returns itself.
        let again = extend_slim_to_balanced(&q, &balanced).unwrap();
        assert_eq!(again, balanced);
        // The empty ideal extends to some balanced ideal.
        let empty = IdealSet::from_cosets(&q, []);
        let ext = extend_slim_to_balanced(&q, &empty).unwrap();
        assert!(is_balanced(&q, &ext).unwrap());
    }

    #[test]
    fn extend_slim_rejects() {
        let g = group("A3");
        let q = quot(&g, &[1, 2, 3], &[1, 2, 3]);
        let not_ideal = IdealSet::from_cosets(&q, [g.w0()]);
        assert!(matches!(
            extend_slim_to_balanced(&q, &not_ideal),
            Err(Error::NotAnIdeal)
        ));
        let not_slim = IdealSet::from_cosets(&q, 0..24);
        assert!(matches!(
            extend_slim_to_balanced(&q, &not_slim),
            Err(Error::NotSlim)
        ));
        let fp = quot(&g, &[1, 2, 3], &[2]);
        let empty = IdealSet::from_cosets(&fp, []);
        assert!(matches!(
            extend_slim_to_balanced(&fp, &empty),
            Err(Error::FixedPointExists)
        ));
    }

    #[test]
    fn limit_exceeded() {
        let g = group("A3");
        let q = quot(&g, &[1, 2, 3], &[1, 2, 3]);
        let result = enumerate_balanced(
            &q,
            &EnumerateOptions {
                list: true,
                limit: Some(5),
                ..Default::default()
            },
        );
        assert!(matches!(result, Err(Error::LimitExceeded { limit: 5 })));
    }

    #[test]
    fn split_depth_invariance() {
        let g = group("A3");
        let q = quot(&g, &[1, 2, 3], &[1, 2, 3]);
        let runs: Vec<Vec<Bitset>> = [0usize, 2, 5]
            .iter()
            .map(|&d| {
                enumerate_balanced(
                    &q,
                    &EnumerateOptions {
                        list: true,
                        split_depth: Some(d),
                        ..Default::default()
                    },
                )
                .unwrap()
                .reports
                .iter()
                .map(|r| r.membership.clone())
                .collect()
            })
            .collect();
        assert_eq!(runs[0], runs[1]);
        assert_eq!(runs[1], runs[2]);
    }
}
