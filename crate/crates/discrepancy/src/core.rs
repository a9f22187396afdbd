//! Set systems, restrictions, tagged unions, and coloring evaluation.
//!
//! A [`SetSystem`] is an ordered list of subsets of the ground set `{1..n}`
//! (1-based everywhere, duplicates and empty sets allowed — rows are a list,
//! not a set). All types here are immutable after construction and all
//! operations are pure.

use crate::error::{Error, Result};

/// A system of `m` subsets of the ground set `{1..n}`.
///
/// Each set is stored as a strictly increasing list of 1-based indices.
/// `tags`, when present, records one provenance label per set (the source
/// part index for unions).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetSystem {
    n: usize,
    sets: Vec<Vec<usize>>,
    tags: Option<Vec<usize>>,
}

impl SetSystem {
    /// Builds a system after validating range and ordering of every set.
    pub fn new(n: usize, sets: Vec<Vec<usize>>) -> Result<Self> {
        Self::with_tags(n, sets, None)
    }

    pub fn with_tags(n: usize, sets: Vec<Vec<usize>>, tags: Option<Vec<usize>>) -> Result<Self> {
        for (si, set) in sets.iter().enumerate() {
            for window in set.windows(2) {
                if window[0] >= window[1] {
                    return Err(Error::NotSorted { set: si + 1 });
                }
            }
            for &e in set {
                if e < 1 || e > n {
                    return Err(Error::ElementOutOfRange { set: si + 1, element: e, n });
                }
            }
        }
        if let Some(t) = &tags {
            if t.len() != sets.len() {
                return Err(Error::DimensionMismatch(format!(
                    "{} tags for {} sets",
                    t.len(),
                    sets.len()
                )));
            }
        }
        Ok(SetSystem { n, sets, tags })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of sets (rows of the incidence matrix).
    pub fn num_sets(&self) -> usize {
        self.sets.len()
    }

    pub fn sets(&self) -> &[Vec<usize>] {
        &self.sets
    }

    pub fn set(&self, i: usize) -> &[usize] {
        &self.sets[i]
    }

    pub fn tags(&self) -> Option<&[usize]> {
        self.tags.as_deref()
    }

    /// Largest set size, an upper bound on the discrepancy.
    pub fn max_set_size(&self) -> usize {
        self.sets.iter().map(|s| s.len()).max().unwrap_or(0)
    }

    /// The sets as bitmasks (bit `j-1` set iff element `j` is a member).
    /// Only valid for `n <= 64`.
    pub fn bitmasks(&self) -> Vec<u64> {
        debug_assert!(self.n <= 64);
        self.sets
            .iter()
            .map(|s| s.iter().fold(0u64, |acc, &e| acc | (1 << (e - 1))))
            .collect()
    }

    /// Keeps only the rows whose tag equals `tag`; the result is untagged.
    pub fn filter_by_tag(&self, tag: usize) -> Option<SetSystem> {
        let tags = self.tags.as_ref()?;
        let sets = self
            .sets
            .iter()
            .zip(tags)
            .filter(|(_, &t)| t == tag)
            .map(|(s, _)| s.clone())
            .collect();
        Some(SetSystem { n: self.n, sets, tags: None })
    }
}

/// A ±1 coloring of the ground set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    values: Vec<i8>,
}

impl Coloring {
    pub fn new(values: Vec<i8>) -> Result<Self> {
        if values.iter().any(|&v| v != 1 && v != -1) {
            return Err(Error::InvalidParameter("coloring entries must be ±1".into()));
        }
        Ok(Coloring { values })
    }

    pub fn all_plus(n: usize) -> Self {
        Coloring { values: vec![1; n] }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[i8] {
        &self.values
    }

    /// Entry for 1-based element `e`.
    pub fn value(&self, e: usize) -> i8 {
        self.values[e - 1]
    }

    /// Restriction to a subset, in the subset's relabeled order.
    pub fn restrict(&self, subset: &GroundSubset) -> Coloring {
        Coloring {
            values: subset.members().iter().map(|&e| self.values[e - 1]).collect(),
        }
    }
}

/// A sorted subset of the ground set, used for restrictions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroundSubset {
    members: Vec<usize>,
}

impl GroundSubset {
    pub fn new(mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        members.dedup();
        GroundSubset { members }
    }

    pub fn full(n: usize) -> Self {
        GroundSubset { members: (1..=n).collect() }
    }

    /// Subset from a bitmask over `{1..n}` (bit `j-1` means element `j`).
    pub fn from_bitmask(mask: u64) -> Self {
        let members = (0..64).filter(|b| mask >> b & 1 == 1).map(|b| b + 1).collect();
        GroundSubset { members }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn validate(&self, n: usize) -> Result<()> {
        for &e in &self.members {
            if e < 1 || e > n {
                return Err(Error::SubsetOutOfRange { index: e, n });
            }
        }
        Ok(())
    }
}

/// Restricts `system` to the ground subset `subset`, relabeling elements to
/// `1..|subset|` in increasing order of their original index.
///
/// Row count and order are preserved; duplicate and empty rows are kept, as
/// are tags, so provenance survives restriction.
pub fn restrict(system: &SetSystem, subset: &GroundSubset) -> Result<SetSystem> {
    subset.validate(system.n)?;
    // original index -> new 1-based label
    let mut relabel = vec![0usize; system.n + 1];
    for (new_idx, &e) in subset.members().iter().enumerate() {
        relabel[e] = new_idx + 1;
    }
    let sets = system
        .sets
        .iter()
        .map(|s| s.iter().filter(|&&e| relabel[e] != 0).map(|&e| relabel[e]).collect())
        .collect();
    Ok(SetSystem {
        n: subset.len(),
        sets,
        tags: system.tags.clone(),
    })
}

/// Concatenates the rows of `parts` (which must share a ground set) in part
/// order, tagging each row with its 1-based source part index.
pub fn union_tagged(parts: &[SetSystem]) -> Result<SetSystem> {
    let n = parts.first().map(|p| p.n).unwrap_or(0);
    let mut sets = Vec::new();
    let mut tags = Vec::new();
    for (pi, part) in parts.iter().enumerate() {
        if part.n != n {
            return Err(Error::GroundSetMismatch { expected: n, part: pi + 1, found: part.n });
        }
        for s in &part.sets {
            sets.push(s.clone());
            tags.push(pi + 1);
        }
    }
    Ok(SetSystem { n, sets, tags: Some(tags) })
}

/// The discrepancy of a fixed coloring: the maximum over sets of the absolute
/// signed set sum. Zero for a system with no sets.
pub fn coloring_discrepancy(system: &SetSystem, coloring: &Coloring) -> Result<u64> {
    if coloring.len() != system.n {
        return Err(Error::ColoringLength { expected: system.n, found: coloring.len() });
    }
    Ok(system
        .sets
        .iter()
        .map(|s| s.iter().map(|&e| i64::from(coloring.value(e))).sum::<i64>().unsigned_abs())
        .max()
        .unwrap_or(0))
}
