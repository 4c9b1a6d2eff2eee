//! 3-nilpotent K-semigroups from a set `A = B ∪ C` and a map
//! `φ: (B \ C) × (C \ B) -> B ∩ C`.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::semigroup::{FiniteSemigroup, ZERO_LABEL};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PhiEntry {
    pub b: String,
    pub c: String,
    pub value: String,
}

/// JSON shape; pairs missing from `phi` map to `"0"`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NilpotentSpec {
    #[serde(rename = "A")]
    pub a: Vec<String>,
    #[serde(rename = "B")]
    pub b: Vec<String>,
    #[serde(rename = "C")]
    pub c: Vec<String>,
    pub phi: Vec<PhiEntry>,
}

impl NilpotentSpec {
    /// Every broken invariant, in a stable order.
    pub fn violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        let mut index = HashMap::new();
        for (i, x) in self.a.iter().enumerate() {
            if index.insert(x.as_str(), i).is_some() {
                out.push(format!("duplicate element {x:?} in A"));
            }
        }
        if !index.contains_key(ZERO_LABEL) {
            out.push("A does not contain 0".into());
        }
        for (name, set) in [("B", &self.b), ("C", &self.c)] {
            for x in set {
                if !index.contains_key(x.as_str()) {
                    out.push(format!("{name} element {x:?} is not in A"));
                }
            }
            if !set.iter().any(|x| x == ZERO_LABEL) {
                out.push(format!("0 is not in {name}"));
            }
        }
        for x in &self.a {
            if !self.b.contains(x) && !self.c.contains(x) {
                out.push(format!("{x:?} is in A but not in B ∪ C"));
            }
        }
        let b_only = self.b_only();
        let c_only = self.c_only();
        let mut seen = BTreeMap::new();
        for e in &self.phi {
            if !b_only.contains(&e.b) {
                out.push(format!("phi argument {:?} is not in B \\ C", e.b));
            }
            if !c_only.contains(&e.c) {
                out.push(format!("phi argument {:?} is not in C \\ B", e.c));
            }
            if !(self.b.contains(&e.value) && self.c.contains(&e.value)) {
                out.push(format!(
                    "phi({}, {}) = {:?} is not in B ∩ C",
                    e.b, e.c, e.value
                ));
            }
            if seen.insert((e.b.as_str(), e.c.as_str()), ()).is_some() {
                out.push(format!("phi({}, {}) given twice", e.b, e.c));
            }
        }
        let nonzero = |b: &str, c: &str| {
            self.phi
                .iter()
                .any(|e| e.b == b && e.c == c && e.value != ZERO_LABEL)
        };
        for b in &b_only {
            if !c_only.iter().any(|c| nonzero(b, c)) {
                out.push(format!(
                    "condition a) fails: phi({b}, c) = 0 for every c in C \\ B"
                ));
            }
        }
        for c in &c_only {
            if !b_only.iter().any(|b| nonzero(b, c)) {
                out.push(format!(
                    "condition b) fails: phi(b, {c}) = 0 for every b in B \\ C"
                ));
            }
        }
        out
    }

    fn b_only(&self) -> Vec<String> {
        self.b
            .iter()
            .filter(|x| !self.c.contains(x))
            .cloned()
            .collect()
    }

    fn c_only(&self) -> Vec<String> {
        self.c
            .iter()
            .filter(|x| !self.b.contains(x))
            .cloned()
            .collect()
    }
}

/// `xy = 0` if `x ∈ C` or `y ∈ B`, else `φ(x, y)`. Elements keep the order of `A`.
pub fn nilpotent_from_spec(spec: &NilpotentSpec) -> Result<FiniteSemigroup> {
    let violations = spec.violations();
    if !violations.is_empty() {
        return Err(Error::Spec(violations));
    }
    let pos = |x: &str| spec.a.iter().position(|y| y == x).expect("validated");
    let zero = pos(ZERO_LABEL);
    let in_b: Vec<bool> = spec.a.iter().map(|x| spec.b.contains(x)).collect();
    let in_c: Vec<bool> = spec.a.iter().map(|x| spec.c.contains(x)).collect();
    let phi: HashMap<(usize, usize), usize> = spec
        .phi
        .iter()
        .map(|e| ((pos(&e.b), pos(&e.c)), pos(&e.value)))
        .collect();
    Ok(FiniteSemigroup::from_fn(spec.a.clone(), zero, |x, y| {
        if in_c[x] || in_b[y] {
            zero
        } else {
            phi.get(&(x, y)).copied().unwrap_or(zero)
        }
    })?)
}
