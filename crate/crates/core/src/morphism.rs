//! Maps between semigroups and the isomorphism search.

use crate::error::{Error, Result};
use crate::semigroup::FiniteSemigroup;

/// Default size bound for the permutation search in [`find_isomorphism`].
pub const ISOMORPHISM_BOUND: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomomorphismMap {
    source: FiniteSemigroup,
    target: FiniteSemigroup,
    map: Vec<usize>,
}

impl HomomorphismMap {
    /// `map[a]` is the target index of source element `a`.
    ///
    /// Panics if `map` is not total on the source or points outside the target.
    pub fn new(source: FiniteSemigroup, target: FiniteSemigroup, map: Vec<usize>) -> Self {
        assert_eq!(map.len(), source.order(), "map must be total on the source");
        assert!(
            map.iter().all(|&b| b < target.order()),
            "map leaves the target"
        );
        HomomorphismMap {
            source,
            target,
            map,
        }
    }

    pub fn identity(s: &FiniteSemigroup) -> Self {
        Self::new(s.clone(), s.clone(), s.elements().collect())
    }

    pub fn source(&self) -> &FiniteSemigroup {
        &self.source
    }

    pub fn target(&self) -> &FiniteSemigroup {
        &self.target
    }

    pub fn apply(&self, a: usize) -> usize {
        self.map[a]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.map
    }

    /// First pair `(a, b)` with `f(ab) != f(a)f(b)`.
    pub fn multiplicativity_failure(&self) -> Option<(usize, usize)> {
        let (s, t, f) = (&self.source, &self.target, &self.map);
        s.elements()
            .flat_map(|a| s.elements().map(move |b| (a, b)))
            .find(|&(a, b)| f[s.mul(a, b)] != t.mul(f[a], f[b]))
    }

    pub fn is_homomorphism(&self) -> bool {
        self.multiplicativity_failure().is_none()
    }

    /// First pair of distinct source elements with the same image.
    pub fn injectivity_failure(&self) -> Option<(usize, usize)> {
        let mut seen = vec![usize::MAX; self.target.order()];
        for (a, &b) in self.map.iter().enumerate() {
            if seen[b] != usize::MAX {
                return Some((seen[b], a));
            }
            seen[b] = a;
        }
        None
    }

    pub fn is_injective(&self) -> bool {
        self.injectivity_failure().is_none()
    }

    pub fn is_surjective(&self) -> bool {
        let mut hit = vec![false; self.target.order()];
        for &b in &self.map {
            hit[b] = true;
        }
        hit.into_iter().all(|h| h)
    }

    /// The preimage of the target zero is exactly the source zero.
    pub fn is_zero_restricted(&self) -> bool {
        let z = self.target.zero();
        self.map[self.source.zero()] == z && self.map.iter().filter(|&&b| b == z).count() == 1
    }
}

/// A zero-preserving multiplicative bijection `s -> other`, if one exists.
///
/// Only nonzero elements are permuted, since an isomorphism must send the
/// zero to the zero.
pub fn find_isomorphism(
    s: &FiniteSemigroup,
    other: &FiniteSemigroup,
    bound: usize,
) -> Result<Option<Vec<usize>>> {
    if s.order() != other.order() {
        return Ok(None);
    }
    if s.order() > bound {
        return Err(Error::BoundExceeded {
            what: "isomorphism search",
            size: s.order(),
            bound,
        });
    }
    let n = s.order();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    map[s.zero()] = other.zero();
    used[other.zero()] = true;
    let order: Vec<usize> = s.nonzero().collect();
    if extend(s, other, &order, 0, &mut map, &mut used) {
        Ok(Some(map))
    } else {
        Ok(None)
    }
}

fn extend(
    s: &FiniteSemigroup,
    other: &FiniteSemigroup,
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let a = order[depth];
    for b in other.elements() {
        if used[b] {
            continue;
        }
        map[a] = b;
        used[b] = true;
        if consistent(s, other, map) && extend(s, other, order, depth + 1, map, used) {
            return true;
        }
        used[b] = false;
        map[a] = usize::MAX;
    }
    false
}

/// Every product whose operands and result are all mapped already agrees.
fn consistent(s: &FiniteSemigroup, other: &FiniteSemigroup, map: &[usize]) -> bool {
    for x in s.elements().filter(|&x| map[x] != usize::MAX) {
        for y in s.elements().filter(|&y| map[y] != usize::MAX) {
            let xy = map[s.mul(x, y)];
            if xy != usize::MAX && xy != other.mul(map[x], map[y]) {
                return false;
            }
        }
    }
    true
}
