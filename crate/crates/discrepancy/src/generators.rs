//! Instance generators: extremal constructions and seeded random systems.
//!
//! Layout conventions are fixed so generated instances are reproducible
//! byte-for-byte: recursive constructions place their first sub-ground-set on
//! the lowest indices and the distinguished element last, tree edges are
//! numbered in breadth-first order with children left to right, and random
//! systems draw from a seeded ChaCha8 stream in row-major order.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::core::{Coloring, GroundSubset, SetSystem};
use crate::error::{Error, Result};
use crate::exactla::{binomial, IntMatrix};

/// Which of the two families of a [`PalvolgyiPair`] a coloring should keep
/// near-balanced. Red is +1 throughout.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairSide {
    First,
    Second,
}

/// Recursion tree of the Pálvölgyi construction. Every node covers a
/// contiguous 1-based index range of the ground set; a split hands the low
/// range to the `(k-1, l)` subtree, the middle to the `(k, l-1)` subtree, and
/// keeps the distinguished element `p` as the highest index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PalvolgyiNode {
    /// k = 1: the first family is the singletons of the range, the second is
    /// the whole range.
    BaseFirstSingletons { lo: usize, hi: usize },
    /// l = 1: mirror image of the above.
    BaseSecondSingletons { lo: usize, hi: usize },
    Split {
        p: usize,
        left: Box<PalvolgyiNode>,  // (k-1, l) on the low range
        right: Box<PalvolgyiNode>, // (k, l-1) on the middle range
    },
}

/// The recursive pair of set systems: `f1` is `k`-uniform, `f2` is
/// `l`-uniform, both on `binom(k+l, k) - 1` elements, each of hereditary
/// discrepancy at most 1, while every 2-coloring leaves some set of the
/// union monochromatic.
#[derive(Debug, Clone)]
pub struct PalvolgyiPair {
    pub f1: SetSystem,
    pub f2: SetSystem,
    pub k: usize,
    pub l: usize,
    pub p_trace: PalvolgyiNode,
}

/// Ground-set size of the `(k, l)` construction.
pub fn palvolgyi_ground_size(k: usize, l: usize) -> u128 {
    binomial((k + l) as u64, k as u64) - 1
}

/// Builds the recursive pair for parameters `k, l >= 1`.
///
/// `size_budget` caps the ground-set size.
pub fn palvolgyi(k: usize, l: usize, size_budget: u64) -> Result<PalvolgyiPair> {
    if k < 1 || l < 1 {
        return Err(Error::InvalidParameter("k and l must be at least 1".into()));
    }
    let n_big = palvolgyi_ground_size(k, l);
    if n_big > size_budget as u128 {
        return Err(Error::BudgetExceeded {
            budget: size_budget,
            needed: n_big.min(u64::MAX as u128) as u64,
        });
    }
    let n = n_big as usize;
    let (f1, f2, trace) = build_palvolgyi(k, l, 1, n);
    Ok(PalvolgyiPair {
        f1: SetSystem::new(n, f1)?,
        f2: SetSystem::new(n, f2)?,
        k,
        l,
        p_trace: trace,
    })
}

/// Recursive construction on the 1-based index range `lo..=hi`.
fn build_palvolgyi(
    k: usize,
    l: usize,
    lo: usize,
    hi: usize,
) -> (Vec<Vec<usize>>, Vec<Vec<usize>>, PalvolgyiNode) {
    debug_assert_eq!((hi - lo + 1) as u128, palvolgyi_ground_size(k, l));
    if k == 1 {
        // singletons vs the whole range
        let f1 = (lo..=hi).map(|e| vec![e]).collect();
        let f2 = vec![(lo..=hi).collect()];
        return (f1, f2, PalvolgyiNode::BaseFirstSingletons { lo, hi });
    }
    if l == 1 {
        let f1 = vec![(lo..=hi).collect()];
        let f2 = (lo..=hi).map(|e| vec![e]).collect();
        return (f1, f2, PalvolgyiNode::BaseSecondSingletons { lo, hi });
    }
    let n_left = palvolgyi_ground_size(k - 1, l) as usize;
    let p = hi;
    let (f1l, f2l, left) = build_palvolgyi(k - 1, l, lo, lo + n_left - 1);
    let (f1r, f2r, right) = build_palvolgyi(k, l - 1, lo + n_left, hi - 1);

    let mut f1: Vec<Vec<usize>> = f1l
        .into_iter()
        .map(|mut s| {
            s.push(p); // p is the largest index, so the set stays sorted
            s
        })
        .collect();
    f1.extend(f1r);

    let mut f2 = f2l;
    f2.extend(f2r.into_iter().map(|mut s| {
        s.push(p);
        s
    }));

    (f1, f2, PalvolgyiNode::Split { p, left: Box::new(left), right: Box::new(right) })
}

/// A ±1 coloring of `w` under which every set of the chosen family meets `w`
/// with signed sum in {0, 1}; in particular the restriction of that family to
/// `w` has discrepancy at most 1.
///
/// Recursion: color both sub-ranges, and when the distinguished element `p`
/// lies in `w`, flip the sub-range on the chosen family's extended-by-`p`
/// side and color `p` with +1. Base families of singletons are colored all
/// +1; base families equal to the whole range alternate +1, -1 by index.
pub fn palvolgyi_coloring(
    pair: &PalvolgyiPair,
    w: &GroundSubset,
    side: PairSide,
) -> Result<Coloring> {
    w.validate(pair.f1.n())?;
    let mut values = vec![0i8; pair.f1.n()]; // 0 marks "not in w"
    let mut in_w = vec![false; pair.f1.n() + 1];
    for &e in w.members() {
        in_w[e] = true;
    }
    color_node(&pair.p_trace, &in_w, side, &mut values);
    Ok(Coloring::new(w.members().iter().map(|&e| values[e - 1]).collect())
        .expect("recursion assigns ±1 to every member of w"))
}

fn color_node(node: &PalvolgyiNode, in_w: &[bool], side: PairSide, values: &mut [i8]) {
    match node {
        PalvolgyiNode::BaseFirstSingletons { lo, hi } => {
            base_coloring(*lo, *hi, in_w, side == PairSide::First, values);
        }
        PalvolgyiNode::BaseSecondSingletons { lo, hi } => {
            base_coloring(*lo, *hi, in_w, side == PairSide::Second, values);
        }
        PalvolgyiNode::Split { p, left, right } => {
            color_node(left, in_w, side, values);
            color_node(right, in_w, side, values);
            if in_w[*p] {
                // flip the subtree whose sets were extended by p
                let flip = match side {
                    PairSide::First => left,
                    PairSide::Second => right,
                };
                flip_range(flip, values);
                values[*p - 1] = 1;
            }
        }
    }
}

/// Singleton families need every present element +1; whole-range families
/// need the present elements near-balanced, which alternation provides.
fn base_coloring(lo: usize, hi: usize, in_w: &[bool], singleton_side: bool, values: &mut [i8]) {
    let mut next = 1i8;
    for e in lo..=hi {
        if !in_w[e] {
            continue;
        }
        if singleton_side {
            values[e - 1] = 1;
        } else {
            values[e - 1] = next;
            next = -next;
        }
    }
}

fn flip_range(node: &PalvolgyiNode, values: &mut [i8]) {
    let (lo, hi) = node_range(node);
    for v in &mut values[lo - 1..hi] {
        *v = -*v;
    }
}

fn node_range(node: &PalvolgyiNode) -> (usize, usize) {
    match node {
        PalvolgyiNode::BaseFirstSingletons { lo, hi }
        | PalvolgyiNode::BaseSecondSingletons { lo, hi } => (*lo, *hi),
        PalvolgyiNode::Split { p, left, .. } => (node_range(left).0, *p),
    }
}

/// Outcome of the monochromatic-set check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MonoVerdict {
    /// Every ±1 coloring leaves an all-red set in `f1` or an all-blue set in `f2`.
    CertifiedTrue,
    /// A coloring avoiding both, as a witness (+1 is red).
    CertifiedFalse(Coloring),
    /// Budget ran out; verdict covers only the colorings visited.
    Sampled(bool),
}

impl MonoVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, MonoVerdict::CertifiedTrue | MonoVerdict::Sampled(true))
    }

    pub fn certified(&self) -> bool {
        !matches!(self, MonoVerdict::Sampled(_))
    }
}

/// Exhaustively checks that every red/blue coloring of the ground set leaves
/// some set of `f1` completely red (+1) or some set of `f2` completely blue
/// (-1). Requires a shared ground set with `n <= 63`; `coloring_budget` caps
/// the `2^n` enumeration.
pub fn verify_mono_property(
    f1: &SetSystem,
    f2: &SetSystem,
    coloring_budget: u64,
) -> Result<MonoVerdict> {
    if f1.n() != f2.n() {
        return Err(Error::GroundSetMismatch { expected: f1.n(), part: 2, found: f2.n() });
    }
    let n = f1.n();
    if n > 63 {
        return Err(Error::InvalidParameter(format!(
            "ground set of size {n} exceeds bitmask range"
        )));
    }
    let masks1 = f1.bitmasks();
    let masks2 = f2.bitmasks();
    let total: u64 = 1 << n;
    let limit = total.min(coloring_budget);
    for red in 0..limit {
        let mono = masks1.iter().any(|&m| m & !red == 0) || masks2.iter().any(|&m| m & red == 0);
        if !mono {
            let values = (0..n).map(|b| if red >> b & 1 == 1 { 1 } else { -1 }).collect();
            return Ok(MonoVerdict::CertifiedFalse(Coloring::new(values).unwrap()));
        }
    }
    if limit < total {
        return Ok(MonoVerdict::Sampled(true));
    }
    Ok(MonoVerdict::CertifiedTrue)
}

/// Hoffman's tree systems on the edges of the complete `k`-ary tree of depth
/// `k`: `f1` holds the root-to-leaf paths, `f2` one set of `k` child edges
/// per internal vertex. Edges are numbered in BFS order, children left to
/// right, so instances are stable.
pub fn hoffman_tree(k: usize, edge_budget: u64) -> Result<(SetSystem, SetSystem)> {
    if k < 1 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    let mut edges: u128 = 0;
    let mut level_size: u128 = 1;
    for _ in 0..k {
        level_size *= k as u128;
        edges += level_size;
    }
    if edges > edge_budget as u128 {
        return Err(Error::BudgetExceeded {
            budget: edge_budget,
            needed: edges.min(u64::MAX as u128) as u64,
        });
    }
    let n = edges as usize;

    // paths[v] = edge set of the path from the root down to vertex v
    let mut paths: Vec<Vec<usize>> = vec![vec![]];
    let mut f1 = Vec::new();
    let mut f2 = Vec::new();
    let mut next_edge = 1usize;
    let mut frontier = vec![0usize];
    for depth in 0..k {
        let mut next_frontier = Vec::new();
        for &v in &frontier {
            let child_edges: Vec<usize> = (0..k).map(|c| next_edge + c).collect();
            f2.push(child_edges.clone());
            for &e in &child_edges {
                let mut path = paths[v].clone();
                path.push(e);
                if depth + 1 == k {
                    f1.push(path);
                } else {
                    next_frontier.push(paths.len());
                    paths.push(path);
                }
            }
            next_edge += k;
        }
        frontier = next_frontier;
    }
    Ok((SetSystem::new(n, f1)?, SetSystem::new(n, f2)?))
}

/// Sylvester's doubling construction: an `order x order` ±1 matrix with
/// pairwise orthogonal rows, for any power of two (including 1).
pub fn sylvester_hadamard(order: usize) -> Result<IntMatrix> {
    if order == 0 || order & (order - 1) != 0 {
        return Err(Error::NotPowerOfTwo(order));
    }
    let mut h = vec![vec![1i64]];
    let mut size = 1;
    while size < order {
        let mut next = vec![vec![0i64; 2 * size]; 2 * size];
        for i in 0..size {
            for j in 0..size {
                let v = h[i][j];
                next[i][j] = v;
                next[i][j + size] = v;
                next[i + size][j] = v;
                next[i + size][j + size] = -v;
            }
        }
        h = next;
        size *= 2;
    }
    Ok(IntMatrix::from_rows(&h))
}

/// A seeded random system: element `j` joins set `i` independently with
/// probability `p`. The stream is ChaCha8 seeded with `seed`, drawn set by
/// set and element by element, so instances are identical across runs and
/// platforms.
pub fn random_system(n: usize, m: usize, p: f64, seed: u64) -> Result<SetSystem> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter(format!("inclusion probability {p} not in [0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut sets = Vec::with_capacity(m);
    for _ in 0..m {
        let mut set = Vec::new();
        for e in 1..=n {
            if rng.gen::<f64>() < p {
                set.push(e);
            }
        }
        sets.push(set);
    }
    SetSystem::new(n, sets)
}

/// Random subset of `{1..n}`, each element kept with probability 1/2.
pub fn random_subset(n: usize, rng: &mut ChaCha8Rng) -> GroundSubset {
    GroundSubset::new((1..=n).filter(|_| rng.gen::<bool>()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::core::{coloring_discrepancy, restrict, union_tagged};
    use num_traits::ToPrimitive;

    #[test]
    fn palvolgyi_1_1() {
        let pair = palvolgyi(1, 1, 1 << 20).unwrap();
        assert_eq!(pair.f1.n(), 1);
        assert_eq!(pair.f1.sets(), &[vec![1]]);
        assert_eq!(pair.f2.sets(), &[vec![1]]);
    }

    #[test]
    fn palvolgyi_1_2() {
        let pair = palvolgyi(1, 2, 1 << 20).unwrap();
        assert_eq!(pair.f1.n(), 2);
        assert_eq!(pair.f1.sets(), &[vec![1], vec![2]]);
        assert_eq!(pair.f2.sets(), &[vec![1, 2]]);
    }

    #[test]
    fn palvolgyi_2_2_layout() {
        // one unrolling of the recursion with the fixed layout:
        // V' = {1,2} carries (1,2), V'' = {3,4} carries (2,1), p = 5
        let pair = palvolgyi(2, 2, 1 << 20).unwrap();
        assert_eq!(pair.f1.n(), 5);
        assert_eq!(pair.f1.sets(), &[vec![1, 5], vec![2, 5], vec![3, 4]]);
        assert_eq!(pair.f2.sets(), &[vec![1, 2], vec![3, 5], vec![4, 5]]);
        let union = union_tagged(&[pair.f1.clone(), pair.f2.clone()]).unwrap();
        assert_eq!(union.num_sets(), 6);
        assert_eq!(union.n(), 5);
    }

    #[test]
    fn palvolgyi_uniformity_and_size() {
        for k in 1..=5usize {
            for l in 1..=5usize {
                if palvolgyi_ground_size(k, l) > 300 {
                    continue;
                }
                let pair = palvolgyi(k, l, 1 << 20).unwrap();
                assert_eq!(pair.f1.n() as u128, palvolgyi_ground_size(k, l));
                assert!(pair.f1.sets().iter().all(|s| s.len() == k), "({k},{l}) f1 not {k}-uniform");
                assert!(pair.f2.sets().iter().all(|s| s.len() == l), "({k},{l}) f2 not {l}-uniform");
            }
        }
    }

    /// Every subset of the ground set admits the promised coloring, for both
    /// families, on all pairs small enough to enumerate here.
    #[test]
    fn palvolgyi_coloring_sums_in_zero_one() {
        for (k, l) in [(1, 1), (1, 2), (2, 1), (2, 2), (1, 3), (3, 1), (2, 3), (3, 2)] {
            let pair = palvolgyi(k, l, 1 << 20).unwrap();
            let n = pair.f1.n();
            for mask in 0u64..(1 << n) {
                let w = GroundSubset::from_bitmask(mask);
                for (side, family) in [(PairSide::First, &pair.f1), (PairSide::Second, &pair.f2)] {
                    let chi = palvolgyi_coloring(&pair, &w, side).unwrap();
                    let restricted = restrict(family, &w).unwrap();
                    for set in restricted.sets() {
                        let sum: i64 = set.iter().map(|&e| i64::from(chi.value(e))).sum();
                        assert!(
                            sum == 0 || sum == 1,
                            "({k},{l}) side {side:?} W={mask:b}: sum {sum}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn palvolgyi_coloring_empty_subset() {
        let pair = palvolgyi(2, 2, 1 << 20).unwrap();
        let chi = palvolgyi_coloring(&pair, &GroundSubset::new(vec![]), PairSide::First).unwrap();
        assert!(chi.is_empty());
    }

    #[test]
    fn mono_property_examples() {
        let pair = palvolgyi(2, 2, 1 << 20).unwrap();
        assert_eq!(
            verify_mono_property(&pair.f1, &pair.f2, 1 << 20).unwrap(),
            MonoVerdict::CertifiedTrue
        );

        // all -1 avoids red singletons; empty f2 has no blue set
        let f1 = SetSystem::new(2, vec![vec![1], vec![2]]).unwrap();
        let f2 = SetSystem::new(2, vec![]).unwrap();
        assert!(matches!(
            verify_mono_property(&f1, &f2, 1 << 20).unwrap(),
            MonoVerdict::CertifiedFalse(_)
        ));

        let single = SetSystem::new(1, vec![vec![1]]).unwrap();
        assert_eq!(
            verify_mono_property(&single, &single, 1 << 20).unwrap(),
            MonoVerdict::CertifiedTrue
        );
    }

    #[test]
    fn mono_property_counterexample_is_a_witness() {
        let f1 = SetSystem::new(2, vec![vec![1], vec![2]]).unwrap();
        let f2 = SetSystem::new(2, vec![]).unwrap();
        if let MonoVerdict::CertifiedFalse(chi) = verify_mono_property(&f1, &f2, 1 << 20).unwrap() {
            for set in f1.sets() {
                assert!(set.iter().any(|&e| chi.value(e) == -1));
            }
        } else {
            panic!("expected a counterexample");
        }
    }

    #[test]
    fn hoffman_tree_counts() {
        let (f1, f2) = hoffman_tree(2, 1 << 20).unwrap();
        assert_eq!(f1.n(), 6);
        assert_eq!(f1.num_sets(), 4);
        assert_eq!(f2.num_sets(), 3);
        assert!(f1.sets().iter().all(|s| s.len() == 2));
        assert!(f2.sets().iter().all(|s| s.len() == 2));
        // root's child edges are 1 and 2; the first leaf path pairs 1 with 3
        assert_eq!(f2.set(0), &[1, 2]);
        assert_eq!(f1.set(0), &[1, 3]);

        let (f1, f2) = hoffman_tree(1, 1 << 20).unwrap();
        assert_eq!(f1.n(), 1);
        assert_eq!(f1.sets(), &[vec![1]]);
        assert_eq!(f2.sets(), &[vec![1]]);
    }

    #[test]
    fn hadamard_orders() {
        assert_eq!(sylvester_hadamard(1).unwrap(), IntMatrix::from_rows(&[vec![1]]));
        assert_eq!(
            sylvester_hadamard(2).unwrap(),
            IntMatrix::from_rows(&[vec![1, 1], vec![1, -1]])
        );
        assert!(sylvester_hadamard(3).is_err());
        assert!(sylvester_hadamard(0).is_err());
    }

    #[test]
    fn hadamard_rows_orthogonal() {
        for order in [2usize, 4, 8, 16] {
            let h = sylvester_hadamard(order).unwrap();
            for i in 0..order {
                for j in i + 1..order {
                    let dot: i64 = (0..order)
                        .map(|c| h.entry(i, c).to_i64().unwrap() * h.entry(j, c).to_i64().unwrap())
                        .sum();
                    assert_eq!(dot, 0, "rows {i},{j} of order {order}");
                }
            }
        }
    }

    #[test]
    fn random_system_determinism_and_extremes() {
        let a = random_system(6, 6, 0.5, 1).unwrap();
        let b = random_system(6, 6, 0.5, 1).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, random_system(6, 6, 0.5, 2).unwrap());

        let empty = random_system(4, 3, 0.0, 7).unwrap();
        assert!(empty.sets().iter().all(|s| s.is_empty()));
        let full = random_system(4, 3, 1.0, 7).unwrap();
        assert!(full.sets().iter().all(|s| s == &vec![1, 2, 3, 4]));
    }

    #[test]
    fn palvolgyi_coloring_bounds_restriction_discrepancy() {
        let pair = palvolgyi(2, 2, 1 << 20).unwrap();
        let w = GroundSubset::full(5);
        let chi = palvolgyi_coloring(&pair, &w, PairSide::First).unwrap();
        assert!(coloring_discrepancy(&pair.f1, &chi).unwrap() <= 1);
    }

    #[test]
    fn size_budget_enforced() {
        assert!(matches!(palvolgyi(10, 10, 100), Err(Error::BudgetExceeded { .. })));
        assert!(matches!(hoffman_tree(5, 100), Err(Error::BudgetExceeded { .. })));
    }

    /// The union's discrepancy equals k: sets have size k (upper bound) and
    /// some set is always monochromatic (lower bound).
    #[test]
    fn palvolgyi_union_discrepancy_is_k() {
        for k in 1..=3usize {
            let pair = palvolgyi(k, k, 1 << 20).unwrap();
            let union = union_tagged(&[pair.f1, pair.f2]).unwrap();
            let d = crate::disc::disc_exact(&union, 1 << 32).unwrap();
            assert!(d.certified);
            assert_eq!(d.value, k as u64, "k={k}");
        }
    }
}
