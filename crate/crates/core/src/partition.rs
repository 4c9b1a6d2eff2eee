//! Partitions of a semigroup's elements, congruences and quotients.

use std::collections::HashMap;
use std::hash::Hash;

use crate::error::{Error, Result};
use crate::morphism::HomomorphismMap;
use crate::semigroup::{ElementSet, FiniteSemigroup};

/// Default size bound for exhaustive congruence enumeration (Bell(8) = 4140).
pub const CONGRUENCE_BOUND: usize = 8;

/// A partition stored as a restricted growth string: `block_of[a]` is the
/// block id of `a`, and block ids appear in order of their least member.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    block_of: Vec<usize>,
}

impl Partition {
    pub fn discrete(n: usize) -> Self {
        Partition {
            block_of: (0..n).collect(),
        }
    }

    pub fn universal(n: usize) -> Self {
        Partition {
            block_of: vec![0; n],
        }
    }

    /// Groups elements `0..n` by equal keys.
    pub fn by_key<K: Eq + Hash>(n: usize, key: impl Fn(usize) -> K) -> Self {
        let mut ids = HashMap::new();
        let block_of = (0..n)
            .map(|a| {
                let next = ids.len();
                *ids.entry(key(a)).or_insert(next)
            })
            .collect();
        Partition { block_of }
    }

    /// Normalizes an arbitrary block labeling.
    pub fn from_labels(labels: &[usize]) -> Self {
        Self::by_key(labels.len(), |a| labels[a])
    }

    /// Builds from explicit blocks; they must be nonempty, disjoint, and cover `0..n`.
    pub fn from_blocks(n: usize, blocks: &[ElementSet]) -> Option<Self> {
        let mut owner = vec![usize::MAX; n];
        for (b, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return None;
            }
            for a in block.iter() {
                if a >= n || owner[a] != usize::MAX {
                    return None;
                }
                owner[a] = b;
            }
        }
        if owner.contains(&usize::MAX) {
            return None;
        }
        Some(Self::from_labels(&owner))
    }

    /// Collapses `ideal` to one block and leaves every other element alone.
    pub fn collapsing(n: usize, ideal: &ElementSet) -> Self {
        let rep = ideal.iter().next();
        Self::by_key(n, |a| {
            if ideal.contains(a) {
                rep.unwrap_or(a)
            } else {
                a
            }
        })
    }

    pub fn len(&self) -> usize {
        self.block_of.len()
    }

    pub fn is_empty(&self) -> bool {
        self.block_of.is_empty()
    }

    #[inline]
    pub fn block_of(&self, a: usize) -> usize {
        self.block_of[a]
    }

    pub fn block_count(&self) -> usize {
        self.block_of.iter().max().map_or(0, |m| m + 1)
    }

    pub fn same_block(&self, a: usize, b: usize) -> bool {
        self.block_of[a] == self.block_of[b]
    }

    pub fn blocks(&self) -> Vec<ElementSet> {
        let mut out = vec![Vec::new(); self.block_count()];
        for (a, &b) in self.block_of.iter().enumerate() {
            out[b].push(a);
        }
        out.into_iter().map(|v| v.into_iter().collect()).collect()
    }

    /// Every block of `self` lies inside a block of `coarser`.
    pub fn refines(&self, coarser: &Partition) -> bool {
        let mut image = vec![usize::MAX; self.block_count()];
        self.block_of.iter().zip(&coarser.block_of).all(|(&b, &c)| {
            if image[b] == usize::MAX {
                image[b] = c;
            }
            image[b] == c
        })
    }

    /// Common refinement.
    pub fn meet(&self, other: &Partition) -> Partition {
        Self::by_key(self.len(), |a| (self.block_of[a], other.block_of[a]))
    }

    /// The block of `zero` is a singleton.
    pub fn is_zero_restricted(&self, zero: usize) -> bool {
        let z = self.block_of[zero];
        self.block_of.iter().filter(|&&b| b == z).count() == 1
    }

    pub fn label_blocks(&self, s: &FiniteSemigroup) -> Vec<Vec<String>> {
        self.blocks().iter().map(|b| b.labels(s)).collect()
    }
}

/// Compatible with multiplication on both sides.
pub fn is_congruence(s: &FiniteSemigroup, p: &Partition) -> bool {
    congruence_failure(s, p).is_none()
}

/// First pair `(a, b)` in the same block and multiplier `t` breaking compatibility.
pub(crate) fn congruence_failure(
    s: &FiniteSemigroup,
    p: &Partition,
) -> Option<(usize, usize, usize)> {
    // comparing each element to its block's first member is enough: congruence
    // compatibility is transitive within a block
    let mut first = vec![usize::MAX; p.block_count()];
    for a in s.elements() {
        let b = p.block_of(a);
        if first[b] == usize::MAX {
            first[b] = a;
            continue;
        }
        let r = first[b];
        for t in s.elements() {
            if !p.same_block(s.mul(t, a), s.mul(t, r)) || !p.same_block(s.mul(a, t), s.mul(r, t)) {
                return Some((r, a, t));
            }
        }
    }
    None
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Congruence {
    pub partition: Partition,
    pub zero_restricted: bool,
}

/// Iterator over all set partitions of `0..n` as restricted growth strings,
/// in lexicographic order.
#[derive(Debug, Clone)]
pub struct RestrictedGrowth {
    rgs: Vec<usize>,
    max_prefix: Vec<usize>,
    done: bool,
}

impl RestrictedGrowth {
    pub fn new(n: usize) -> Self {
        RestrictedGrowth {
            rgs: vec![0; n],
            max_prefix: vec![0; n],
            done: false,
        }
    }
}

impl Iterator for RestrictedGrowth {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let current = self.rgs.clone();
        let n = self.rgs.len();
        // advance: find the rightmost position that can still grow
        let mut i = n;
        loop {
            if i <= 1 {
                self.done = true;
                break;
            }
            i -= 1;
            let bound = self.max_prefix[i - 1] + 1;
            if self.rgs[i] < bound {
                self.rgs[i] += 1;
                self.max_prefix[i] = self.max_prefix[i - 1].max(self.rgs[i]);
                for j in i + 1..n {
                    self.rgs[j] = 0;
                    self.max_prefix[j] = self.max_prefix[j - 1];
                }
                break;
            }
        }
        Some(current)
    }
}

/// Every congruence of `s`, refusing when `|s|` exceeds `bound`.
pub fn enumerate_congruences(s: &FiniteSemigroup, bound: usize) -> Result<Vec<Congruence>> {
    if s.order() > bound {
        return Err(Error::BoundExceeded {
            what: "congruence enumeration",
            size: s.order(),
            bound,
        });
    }
    Ok(RestrictedGrowth::new(s.order())
        .map(|rgs| Partition { block_of: rgs })
        .filter(|p| is_congruence(s, p))
        .map(|p| Congruence {
            zero_restricted: p.is_zero_restricted(s.zero()),
            partition: p,
        })
        .collect())
}

/// Quotient by a congruence. Each block is labeled by its lexicographically
/// least member label; blocks keep the order of their least member index.
pub fn quotient(s: &FiniteSemigroup, p: &Partition) -> Result<(FiniteSemigroup, HomomorphismMap)> {
    if !is_congruence(s, p) {
        return Err(Error::NotCongruence);
    }
    let blocks = p.blocks();
    let labels: Vec<String> = blocks
        .iter()
        .map(|b| {
            b.iter()
                .map(|a| s.label(a))
                .min()
                .unwrap_or_default()
                .to_string()
        })
        .collect();
    let reps: Vec<usize> = blocks.iter().map(|b| b.as_slice()[0]).collect();
    let q = FiniteSemigroup::from_fn(labels, p.block_of(s.zero()), |x, y| {
        p.block_of(s.mul(reps[x], reps[y]))
    })?;
    let map = s.elements().map(|a| p.block_of(a)).collect();
    let projection = HomomorphismMap::new(s.clone(), q.clone(), map);
    Ok((q, projection))
}
