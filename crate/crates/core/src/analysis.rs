//! Categoricity at zero, annihilators, nilpotency, and the split of a
//! K-semigroup into its quasi-annihilator and the complement subsemigroup.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::semigroup::{set_product, ElementSet, FiniteSemigroup};

/// A triple with `f*g != 0`, `g*h != 0` and `f*g*h = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CategoricityWitness {
    pub f: String,
    pub g: String,
    pub h: String,
}

impl fmt::Display for CategoricityWitness {
    fn fmt(&self, fmt: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            fmt,
            "({}, {}, {}): {}*{} != 0, {}*{} != 0, product is 0",
            self.f, self.g, self.h, self.f, self.g, self.g, self.h
        )
    }
}

/// Index form of the first violating triple in lexicographic order.
pub fn categoricity_violation(s: &FiniteSemigroup) -> Option<(usize, usize, usize)> {
    for f in s.nonzero() {
        for g in s.nonzero() {
            let fg = s.mul(f, g);
            if s.is_zero(fg) {
                continue;
            }
            for h in s.nonzero() {
                if !s.is_zero(s.mul(g, h)) && s.is_zero(s.mul(fg, h)) {
                    return Some((f, g, h));
                }
            }
        }
    }
    None
}

/// `Ok(())` when `fgh = 0` forces `fg = 0` or `gh = 0`; otherwise the first
/// violating triple in lexicographic index order.
pub fn is_categorical_at_zero(s: &FiniteSemigroup) -> Result<(), CategoricityWitness> {
    match categoricity_violation(s) {
        None => Ok(()),
        Some((f, g, h)) => Err(CategoricityWitness {
            f: s.label(f).to_string(),
            g: s.label(g).to_string(),
            h: s.label(h).to_string(),
        }),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Annihilators {
    pub left: ElementSet,
    pub right: ElementSet,
    pub quasi: ElementSet,
}

pub fn annihilators(s: &FiniteSemigroup) -> Annihilators {
    let left: ElementSet = s
        .elements()
        .filter(|&a| s.elements().all(|x| s.is_zero(s.mul(a, x))))
        .collect();
    let right: ElementSet = s
        .elements()
        .filter(|&a| s.elements().all(|x| s.is_zero(s.mul(x, a))))
        .collect();
    let quasi = left.union(&right);
    Annihilators { left, right, quasi }
}

/// Least `n` with `S^n = {0}`, or `None` when the power chain stabilizes above `{0}`.
pub fn nilpotency_degree(s: &FiniteSemigroup) -> Option<usize> {
    let all = ElementSet::all(s);
    let mut power = all.clone();
    let mut n = 1;
    loop {
        if power.is_zero_set(s) {
            return Some(n);
        }
        let next = set_product(s, &power, &all);
        if next == power {
            return None;
        }
        power = next;
        n += 1;
    }
}

/// `(S^3 = 0) <=> (S = Ann_q S)`.
///
/// Holds on every K-semigroup; the right-to-left half holds everywhere.
pub fn nilpotency_matches_quasi_annihilator(s: &FiniteSemigroup) -> bool {
    let three_nilpotent = nilpotency_degree(s).is_some_and(|d| d <= 3);
    three_nilpotent == (annihilators(s).quasi.len() == s.order())
}

/// `(S \ Ann_q S) ∪ {0}` with the inherited product.
#[derive(Debug, Clone)]
pub struct Complement {
    pub semigroup: FiniteSemigroup,
    /// `embedding[t]` is the index in the parent of element `t` of the complement.
    pub embedding: Vec<usize>,
}

pub fn complement_subsemigroup(s: &FiniteSemigroup) -> Result<Complement> {
    let quasi = annihilators(s).quasi;
    let members: Vec<usize> = s
        .elements()
        .filter(|&a| s.is_zero(a) || !quasi.contains(a))
        .collect();
    for &a in &members {
        for &b in &members {
            let ab = s.mul(a, b);
            if !s.is_zero(ab) && quasi.contains(ab) {
                return Err(Error::ComplementNotClosed {
                    a: s.label(a).to_string(),
                    b: s.label(b).to_string(),
                    product: s.label(ab).to_string(),
                });
            }
        }
    }
    let (semigroup, embedding) = s
        .restrict(&members)
        .expect("complement is closed and contains zero");
    Ok(Complement {
        semigroup,
        embedding,
    })
}

/// The Rees congruence of an ideal: the ideal becomes one block.
pub fn rees_quotient_partition(s: &FiniteSemigroup, ideal: &ElementSet) -> Partition {
    Partition::collapsing(s.order(), ideal)
}
