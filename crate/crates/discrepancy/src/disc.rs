//! Exact discrepancy and hereditary discrepancy by certified search.
//!
//! `disc_exact` runs a depth-first branch-and-bound over ±1 colorings:
//! elements are assigned in index order, +1 before -1, and a branch is cut
//! once some set can no longer finish below the incumbent. The first optimal
//! coloring found is therefore the lexicographically smallest one (+1 < -1),
//! which fixes witnesses across runs. `herdisc_exact` wraps it in a
//! decreasing-size subset enumeration. Both report exactly when their search
//! completed; a blown budget yields a flagged best-so-far instead of a wrong
//! certificate.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::core::{coloring_discrepancy, restrict, Coloring, GroundSubset, SetSystem};
use crate::error::Result;
use crate::exactla::for_each_combination;
use crate::generators::random_subset;

/// Outcome of an exact discrepancy search.
#[derive(Debug, Clone)]
pub struct DiscResult {
    /// Minimum discrepancy when `certified`, otherwise the best value seen.
    pub value: u64,
    /// A coloring attaining `value`.
    pub witness: Coloring,
    pub nodes_explored: u64,
    /// True iff the search space was exhausted.
    pub certified: bool,
}

/// Outcome of a hereditary discrepancy computation.
#[derive(Debug, Clone)]
pub struct HerdiscResult {
    /// Exact hereditary discrepancy when `certified`, else a lower bound.
    pub value: u64,
    /// A subset whose restriction attains `value`.
    pub witness_subset: GroundSubset,
    pub nodes_explored: u64,
    pub certified: bool,
}

struct SearchState<'a> {
    // sets_of[e] = indices of the sets containing element e+1
    sets_of: Vec<Vec<usize>>,
    sums: Vec<i64>,
    remaining: Vec<i64>,
    assignment: Vec<i8>,
    incumbent: u64,
    best: Vec<i8>,
    nodes: u64,
    budget: u64,
    exhausted: bool,
    system: &'a SetSystem,
}

impl SearchState<'_> {
    /// Depth-first over elements `e..n`, +1 before -1. Returns early when the
    /// incumbent hits zero or the node budget runs out.
    fn dfs(&mut self, e: usize) {
        if self.incumbent == 0 || self.exhausted {
            return;
        }
        let n = self.system.n();
        if e == n {
            let value = self.sums.iter().map(|s| s.unsigned_abs()).max().unwrap_or(0);
            if value < self.incumbent {
                self.incumbent = value;
                self.best = self.assignment.clone();
            }
            return;
        }
        for color in [1i8, -1] {
            if self.nodes >= self.budget {
                self.exhausted = true;
                return;
            }
            self.nodes += 1;
            self.assignment[e] = color;
            let mut pruned = false;
            for &i in &self.sets_of[e] {
                self.sums[i] += i64::from(color);
                self.remaining[i] -= 1;
            }
            // a set that cannot come back under the incumbent cuts the branch
            for &i in &self.sets_of[e] {
                if self.sums[i].unsigned_abs().saturating_sub(self.remaining[i] as u64)
                    >= self.incumbent
                {
                    pruned = true;
                    break;
                }
            }
            if !pruned {
                self.dfs(e + 1);
            }
            for &i in &self.sets_of[e] {
                self.sums[i] -= i64::from(color);
                self.remaining[i] += 1;
            }
        }
        self.assignment[e] = 0;
    }
}

/// Exact minimum discrepancy with an attaining coloring.
///
/// Deterministic: the witness is the lexicographically least optimal coloring
/// under +1 < -1. When `node_budget` runs out the result carries the best
/// coloring seen and `certified` is false.
pub fn disc_exact(system: &SetSystem, node_budget: u64) -> Result<DiscResult> {
    let n = system.n();
    let m = system.num_sets();
    let mut sets_of = vec![Vec::new(); n];
    for (i, set) in system.sets().iter().enumerate() {
        for &e in set {
            sets_of[e - 1].push(i);
        }
    }
    // the all-+1 coloring seeds the incumbent; it is also the first DFS leaf
    let all_plus = Coloring::all_plus(n);
    let seed_value = coloring_discrepancy(system, &all_plus)?;
    let mut state = SearchState {
        sets_of,
        sums: vec![0; m],
        remaining: system.sets().iter().map(|s| s.len() as i64).collect(),
        assignment: vec![0; n],
        incumbent: seed_value,
        best: vec![1; n],
        nodes: 0,
        budget: node_budget,
        exhausted: false,
        system,
    };
    state.dfs(0);
    Ok(DiscResult {
        value: state.incumbent,
        witness: Coloring::new(state.best).expect("search assigns ±1 everywhere"),
        nodes_explored: state.nodes,
        certified: !state.exhausted,
    })
}

/// Exact hereditary discrepancy: the maximum of `disc_exact` over all `2^n`
/// restrictions, enumerated in decreasing subset size with an early exit once
/// the maximum set size (a trivial upper bound) is reached.
///
/// `node_budget` is shared across the inner searches; on exhaustion the
/// result is the maximum over the restrictions that completed, flagged as a
/// lower bound only.
pub fn herdisc_exact(system: &SetSystem, node_budget: u64) -> Result<HerdiscResult> {
    let n = system.n();
    let upper = system.max_set_size() as u64;
    let mut best: Option<(u64, GroundSubset)> = None;
    let mut nodes_total = 0u64;
    let mut certified = true;

    'sizes: for size in (0..=n).rev() {
        let mut subsets = Vec::new();
        for_each_combination(n, size, u64::MAX, |c| {
            subsets.push(c.iter().map(|&i| i + 1).collect::<Vec<usize>>())
        })?;
        for members in subsets {
            let subset = GroundSubset::new(members);
            let restricted = restrict(system, &subset)?;
            let result = disc_exact(&restricted, node_budget - nodes_total)?;
            nodes_total += result.nodes_explored;
            if !result.certified {
                certified = false;
                break 'sizes;
            }
            if best.as_ref().map(|(v, _)| result.value > *v).unwrap_or(true) {
                best = Some((result.value, subset));
            }
            if best.as_ref().map(|(v, _)| *v >= upper).unwrap_or(false) {
                break 'sizes;
            }
        }
    }

    let (value, witness_subset) = best.unwrap_or((0, GroundSubset::full(n)));
    Ok(HerdiscResult { value, witness_subset, nodes_explored: nodes_total, certified })
}

/// Certified lower bound on the hereditary discrepancy from sampled
/// restrictions: the full ground set plus `samples` random subsets drawn from
/// a ChaCha8 stream. Restrictions whose search blows the per-restriction
/// budget are skipped, so the bound never overstates.
pub fn herdisc_sampled(
    system: &SetSystem,
    samples: u64,
    seed: u64,
    node_budget: u64,
) -> Result<(u64, GroundSubset)> {
    let n = system.n();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best = 0u64;
    let mut witness = GroundSubset::full(n);
    let full = disc_exact(system, node_budget)?;
    if full.certified {
        best = full.value;
    }
    for _ in 0..samples {
        let subset = random_subset(n, &mut rng);
        let result = disc_exact(&restrict(system, &subset)?, node_budget)?;
        if result.certified && result.value > best {
            best = result.value;
            witness = subset;
        }
    }
    Ok((best, witness))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::core::union_tagged;
    use crate::generators::{palvolgyi, random_system};
    use proptest::prelude::*;

    const BUDGET: u64 = 1 << 30;

    fn sys(n: usize, sets: &[&[usize]]) -> SetSystem {
        SetSystem::new(n, sets.iter().map(|s| s.to_vec()).collect()).unwrap()
    }

    fn triangle() -> SetSystem {
        sys(3, &[&[1, 2], &[2, 3], &[1, 3]])
    }

    /// Test-only oracle: full 2^n enumeration, no pruning.
    fn disc_brute(system: &SetSystem) -> u64 {
        let n = system.n();
        (0u64..1 << n)
            .map(|mask| {
                let values = (0..n).map(|b| if mask >> b & 1 == 1 { 1 } else { -1 }).collect();
                coloring_discrepancy(system, &Coloring::new(values).unwrap()).unwrap()
            })
            .min()
            .unwrap_or(0)
    }

    fn herdisc_brute(system: &SetSystem) -> u64 {
        let n = system.n();
        (0u64..1 << n)
            .map(|mask| {
                let subset = GroundSubset::from_bitmask(mask);
                disc_brute(&restrict(system, &subset).unwrap())
            })
            .max()
            .unwrap_or(0)
    }

    #[test]
    fn disc_even_set_splits() {
        let r = disc_exact(&sys(2, &[&[1, 2]]), BUDGET).unwrap();
        assert_eq!(r.value, 0);
        assert!(r.certified);
    }

    #[test]
    fn disc_triangle_is_two() {
        // brute force over all 8 colorings gives 2
        assert_eq!(disc_brute(&triangle()), 2);
        let r = disc_exact(&triangle(), BUDGET).unwrap();
        assert_eq!(r.value, 2);
        assert_eq!(coloring_discrepancy(&triangle(), &r.witness).unwrap(), 2);
        // all-+1 already attains the optimum, so it is the lex-least witness
        assert_eq!(r.witness.values(), &[1, 1, 1]);
    }

    #[test]
    fn disc_empty_system() {
        let r = disc_exact(&sys(3, &[]), BUDGET).unwrap();
        assert_eq!(r.value, 0);
        assert!(r.certified);
        assert_eq!(r.witness.len(), 3);
    }

    #[test]
    fn disc_palvolgyi_union_2_2() {
        let pair = palvolgyi(2, 2, 1 << 20).unwrap();
        let union = union_tagged(&[pair.f1, pair.f2]).unwrap();
        let r = disc_exact(&union, BUDGET).unwrap();
        assert_eq!(r.value, 2);
        assert_eq!(disc_brute(&union), 2);
    }

    #[test]
    fn disc_budget_flags_result() {
        let f = random_system(12, 8, 0.5, 3).unwrap();
        let r = disc_exact(&f, 4).unwrap();
        assert!(!r.certified);
        // the flagged value is still attained by the reported coloring
        assert_eq!(coloring_discrepancy(&f, &r.witness).unwrap(), r.value);
    }

    #[test]
    fn herdisc_triangle() {
        let r = herdisc_exact(&triangle(), BUDGET).unwrap();
        assert_eq!(r.value, 2);
        assert_eq!(r.witness_subset.members(), &[1, 2, 3]);
        assert!(r.certified);
        assert_eq!(herdisc_brute(&triangle()), 2);
    }

    #[test]
    fn herdisc_palvolgyi_parts_are_one() {
        let pair = palvolgyi(2, 2, 1 << 20).unwrap();
        assert_eq!(herdisc_exact(&pair.f1, BUDGET).unwrap().value, 1);
        assert_eq!(herdisc_exact(&pair.f2, BUDGET).unwrap().value, 1);
    }

    #[test]
    fn herdisc_empty_system() {
        let r = herdisc_exact(&sys(2, &[]), BUDGET).unwrap();
        assert_eq!(r.value, 0);
        assert!(r.certified);
    }

    #[test]
    fn herdisc_witness_recheckable() {
        let f = random_system(6, 5, 0.5, 11).unwrap();
        let r = herdisc_exact(&f, BUDGET).unwrap();
        let again = disc_exact(&restrict(&f, &r.witness_subset).unwrap(), BUDGET).unwrap();
        assert_eq!(again.value, r.value);
    }

    #[test]
    fn herdisc_sampled_is_lower_bound() {
        for seed in 0..5 {
            let f = random_system(7, 6, 0.4, seed).unwrap();
            let exact = herdisc_exact(&f, BUDGET).unwrap();
            let (sampled, _) = herdisc_sampled(&f, 10, seed, BUDGET).unwrap();
            assert!(sampled <= exact.value);
            // the full ground set is always included
            assert!(sampled >= disc_exact(&f, BUDGET).unwrap().value);
        }
    }

    #[test]
    fn herdisc_sampled_empty_system() {
        let (v, _) = herdisc_sampled(&sys(3, &[]), 4, 0, BUDGET).unwrap();
        assert_eq!(v, 0);
    }

    prop_compose! {
        fn arb_system(max_n: usize, max_m: usize)
            (n in 1..=max_n)
            (n in Just(n), sets in prop::collection::vec(prop::collection::btree_set(1..=n, 0..=n), 0..=max_m))
            -> SetSystem
        {
            SetSystem::new(n, sets.into_iter().map(|s| s.into_iter().collect()).collect()).unwrap()
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        /// Branch-and-bound agrees with full enumeration.
        #[test]
        fn bnb_matches_brute_force(f in arb_system(6, 6)) {
            let r = disc_exact(&f, BUDGET).unwrap();
            prop_assert!(r.certified);
            prop_assert_eq!(r.value, disc_brute(&f));
            prop_assert_eq!(coloring_discrepancy(&f, &r.witness).unwrap(), r.value);
        }

        /// Restricted search agrees with the oracle on every subset.
        #[test]
        fn restricted_search_matches_oracle(f in arb_system(6, 5), mask in 0u64..64) {
            let subset = GroundSubset::from_bitmask(mask & ((1 << f.n()) - 1));
            let restricted = restrict(&f, &subset).unwrap();
            prop_assert_eq!(disc_exact(&restricted, BUDGET).unwrap().value, disc_brute(&restricted));
        }

        /// The full ground set is among the enumerated restrictions.
        #[test]
        fn herdisc_dominates_disc(f in arb_system(6, 5)) {
            let h = herdisc_exact(&f, BUDGET).unwrap();
            let d = disc_exact(&f, BUDGET).unwrap();
            prop_assert!(h.value >= d.value);
            prop_assert_eq!(h.value, herdisc_brute(&f));
        }
    }
}
