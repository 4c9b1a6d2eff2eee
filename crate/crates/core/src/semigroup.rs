//! Cayley-table representation of a finite semigroup with zero.
//!
//! Labels only exist at the boundary; every computation works on dense
//! indices in declaration order.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{ValidationError, Violation};

/// Label reserved for the adjoined zero by every constructor in this crate.
pub const ZERO_LABEL: &str = "0";

/// The on-disk JSON shape of a semigroup.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemigroupDoc {
    pub elements: Vec<String>,
    pub zero: String,
    pub table: Vec<Vec<String>>,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FiniteSemigroup {
    labels: Vec<String>,
    zero: usize,
    table: Vec<usize>,
}

impl fmt::Debug for FiniteSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteSemigroup")
            .field("elements", &self.labels)
            .field("zero", &self.labels[self.zero])
            .finish()
    }
}

/// Checks a raw document and builds the semigroup, or returns every violation found.
pub fn validate(doc: &SemigroupDoc) -> Result<FiniteSemigroup, ValidationError> {
    let n = doc.elements.len();
    let mut violations = Vec::new();
    if n == 0 {
        violations.push(Violation::Empty);
    }
    let mut index = HashMap::with_capacity(n);
    for (i, label) in doc.elements.iter().enumerate() {
        if index.insert(label.as_str(), i).is_some() {
            violations.push(Violation::DuplicateLabel {
                label: label.clone(),
            });
        }
    }
    let zero = index.get(doc.zero.as_str()).copied();
    if zero.is_none() {
        violations.push(Violation::MissingZero {
            zero: doc.zero.clone(),
        });
    }
    if doc.table.len() != n {
        violations.push(Violation::NonSquare {
            row: doc.table.len(),
            len: 0,
            expected: n,
        });
    }
    let mut table = Vec::with_capacity(n * n);
    for (r, row) in doc.table.iter().enumerate() {
        if row.len() != n {
            violations.push(Violation::NonSquare {
                row: r,
                len: row.len(),
                expected: n,
            });
            continue;
        }
        for (c, entry) in row.iter().enumerate() {
            match index.get(entry.as_str()) {
                Some(&k) => table.push(k),
                None => violations.push(Violation::UnknownLabel {
                    row: r,
                    col: c,
                    label: entry.clone(),
                }),
            }
        }
    }
    if !violations.is_empty() {
        return Err(ValidationError { violations });
    }
    FiniteSemigroup::from_table(doc.elements.clone(), zero.unwrap_or(0), table)
}

impl FiniteSemigroup {
    /// Builds from a row-major index table, checking zero absorption and associativity.
    pub fn from_table(
        labels: Vec<String>,
        zero: usize,
        table: Vec<usize>,
    ) -> Result<Self, ValidationError> {
        let n = labels.len();
        let mut violations = Vec::new();
        if n == 0 {
            violations.push(Violation::Empty);
        }
        let mut seen = HashMap::with_capacity(n);
        for label in &labels {
            if seen.insert(label.as_str(), ()).is_some() {
                violations.push(Violation::DuplicateLabel {
                    label: label.clone(),
                });
            }
        }
        if zero >= n && n > 0 {
            violations.push(Violation::MissingZero {
                zero: zero.to_string(),
            });
        }
        if table.len() != n * n {
            violations.push(Violation::NonSquare {
                row: 0,
                len: table.len(),
                expected: n * n,
            });
        }
        if let Some(pos) = table.iter().position(|&k| k >= n) {
            violations.push(Violation::UnknownLabel {
                row: pos / n.max(1),
                col: pos % n.max(1),
                label: table[pos].to_string(),
            });
        }
        if !violations.is_empty() {
            return Err(ValidationError { violations });
        }

        let s = FiniteSemigroup {
            labels,
            zero,
            table,
        };
        for x in 0..n {
            let l = s.mul(zero, x);
            if l != zero {
                violations.push(Violation::ZeroAbsorption {
                    element: s.labels[x].clone(),
                    zero_on_left: true,
                    product: s.labels[l].clone(),
                });
            }
            let r = s.mul(x, zero);
            if r != zero {
                violations.push(Violation::ZeroAbsorption {
                    element: s.labels[x].clone(),
                    zero_on_left: false,
                    product: s.labels[r].clone(),
                });
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = s.mul(a, b);
                for c in 0..n {
                    let left = s.mul(ab, c);
                    let right = s.mul(a, s.mul(b, c));
                    if left != right {
                        violations.push(Violation::Associativity {
                            a: s.labels[a].clone(),
                            b: s.labels[b].clone(),
                            c: s.labels[c].clone(),
                            left: s.labels[left].clone(),
                            right: s.labels[right].clone(),
                        });
                    }
                }
            }
        }
        if violations.is_empty() {
            Ok(s)
        } else {
            Err(ValidationError { violations })
        }
    }

    /// Builds from a product function on indices.
    pub fn from_fn(
        labels: Vec<String>,
        zero: usize,
        mut product: impl FnMut(usize, usize) -> usize,
    ) -> Result<Self, ValidationError> {
        let n = labels.len();
        let mut table = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                table.push(product(a, b));
            }
        }
        Self::from_table(labels, zero, table)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.labels.len()
    }

    #[inline]
    pub fn zero(&self) -> usize {
        self.zero
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.labels.len() + b]
    }

    #[inline]
    pub fn is_zero(&self, a: usize) -> bool {
        a == self.zero
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.labels.len()
    }

    /// Nonzero elements in index order.
    pub fn nonzero(&self) -> impl Iterator<Item = usize> + '_ {
        self.elements().filter(move |&a| a != self.zero)
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn to_doc(&self) -> SemigroupDoc {
        let n = self.order();
        SemigroupDoc {
            elements: self.labels.clone(),
            zero: self.labels[self.zero].clone(),
            table: (0..n)
                .map(|a| {
                    (0..n)
                        .map(|b| self.labels[self.mul(a, b)].clone())
                        .collect()
                })
                .collect(),
        }
    }

    /// The subsemigroup on `members` (in the given order), if closed and containing zero.
    pub fn restrict(&self, members: &[usize]) -> Option<(FiniteSemigroup, Vec<usize>)> {
        let pos: HashMap<usize, usize> = members.iter().enumerate().map(|(i, &m)| (m, i)).collect();
        let zero = *pos.get(&self.zero)?;
        let mut table = Vec::with_capacity(members.len() * members.len());
        for &a in members {
            for &b in members {
                table.push(*pos.get(&self.mul(a, b))?);
            }
        }
        let labels = members.iter().map(|&m| self.labels[m].clone()).collect();
        let sub = FiniteSemigroup::from_table(labels, zero, table).ok()?;
        Some((sub, members.to_vec()))
    }
}

/// Subset of a semigroup's elements, kept as sorted indices.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementSet {
    members: Vec<usize>,
}

impl FromIterator<usize> for ElementSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut members: Vec<usize> = iter.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        ElementSet { members }
    }
}

impl ElementSet {
    pub fn all(s: &FiniteSemigroup) -> Self {
        s.elements().collect()
    }

    pub fn zero(s: &FiniteSemigroup) -> Self {
        ElementSet {
            members: vec![s.zero()],
        }
    }

    pub fn contains(&self, a: usize) -> bool {
        self.members.binary_search(&a).is_ok()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.members
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.iter().all(|a| other.contains(a))
    }

    pub fn union(&self, other: &ElementSet) -> ElementSet {
        self.iter().chain(other.iter()).collect()
    }

    /// True when the set is exactly `{0}`.
    pub fn is_zero_set(&self, s: &FiniteSemigroup) -> bool {
        self.members == [s.zero()]
    }

    pub fn labels(&self, s: &FiniteSemigroup) -> Vec<String> {
        self.iter().map(|a| s.label(a).to_string()).collect()
    }
}

/// `{x*y | x in xs, y in ys}`.
pub fn set_product(s: &FiniteSemigroup, xs: &ElementSet, ys: &ElementSet) -> ElementSet {
    xs.iter()
        .flat_map(|x| ys.iter().map(move |y| s.mul(x, y)))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
    TwoSided,
}

/// Left ideal: `SX ⊆ X`; right ideal: `XS ⊆ X`.
pub fn is_ideal(s: &FiniteSemigroup, xs: &ElementSet, side: Side) -> bool {
    let left = || {
        s.elements()
            .all(|t| xs.iter().all(|x| xs.contains(s.mul(t, x))))
    };
    let right = || {
        s.elements()
            .all(|t| xs.iter().all(|x| xs.contains(s.mul(x, t))))
    };
    match side {
        Side::Left => left(),
        Side::Right => right(),
        Side::TwoSided => left() && right(),
    }
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    pub fn labels(ls: &[&str]) -> Vec<String> {
        ls.iter().map(|l| l.to_string()).collect()
    }

    /// `{0, a, ...}` with every product zero.
    pub fn null(n: usize) -> FiniteSemigroup {
        let ls = (0..n)
            .map(|i| {
                if i == 0 {
                    "0".to_string()
                } else {
                    format!("a{i}")
                }
            })
            .collect();
        FiniteSemigroup::from_fn(ls, 0, |_, _| 0).unwrap()
    }

    /// `{0, a, b}` with `a*a = b` and every other product zero.
    pub fn a2b() -> FiniteSemigroup {
        FiniteSemigroup::from_fn(labels(&["0", "a", "b"]), 0, |x, y| {
            if x == 1 && y == 1 {
                2
            } else {
                0
            }
        })
        .unwrap()
    }

    /// `{0, e}` with `e*e = e`.
    pub fn semilattice() -> FiniteSemigroup {
        FiniteSemigroup::from_fn(labels(&["0", "e"]), 0, |x, y| x.min(y)).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    fn doc(elements: &[&str], table: &[&[&str]]) -> SemigroupDoc {
        SemigroupDoc {
            elements: labels(elements),
            zero: "0".into(),
            table: table.iter().map(|r| labels(r)).collect(),
        }
    }

    /// Independent triple scan used to cross-check validation.
    fn naive_associative(d: &SemigroupDoc) -> bool {
        let idx = |l: &str| d.elements.iter().position(|e| e == l).unwrap();
        let m = |a: usize, b: usize| idx(&d.table[a][b]);
        let n = d.elements.len();
        (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| m(m(a, b), c) == m(a, m(b, c)))))
    }

    #[test]
    fn null_semigroup_validates() {
        let d = doc(&["0", "a"], &[&["0", "0"], &["0", "0"]]);
        assert!(validate(&d).is_ok());
    }

    #[test]
    fn reports_associativity_triple() {
        // a*(a*a) = a*0 = 0 but (a*a)*a = a*a = a.
        let d = doc(&["0", "a"], &[&["0", "0"], &["0", "a"]]);
        assert!(validate(&d).is_ok(), "semilattice is fine");
        let d = doc(
            &["0", "a", "b"],
            &[&["0", "0", "0"], &["0", "b", "a"], &["0", "0", "0"]],
        );
        let err = validate(&d).unwrap_err();
        assert!(!err.is_structural());
        assert!(err.violations.iter().any(|v| matches!(
            v,
            Violation::Associativity { a, b, c, .. } if a == "a" && b == "a" && c == "a"
        )));
    }

    #[test]
    fn a2b_is_valid_by_naive_oracle() {
        let d = a2b().to_doc();
        assert!(naive_associative(&d));
        assert!(validate(&d).is_ok());
    }

    #[test]
    fn structural_errors_are_listed() {
        let d = SemigroupDoc {
            elements: labels(&["0", "a", "a"]),
            zero: "z".into(),
            table: vec![labels(&["0", "q"]), labels(&["0", "0", "0"])],
        };
        let err = validate(&d).unwrap_err();
        assert!(err.is_structural());
        let kinds: Vec<_> = err.violations.iter().map(|v| format!("{v}")).collect();
        assert!(kinds.iter().any(|k| k.contains("duplicate")));
        assert!(kinds.iter().any(|k| k.contains("not an element")));
        assert!(kinds.iter().any(|k| k.contains("entries")));
    }

    #[test]
    fn zero_absorption_violation() {
        let d = doc(&["0", "a"], &[&["0", "a"], &["0", "0"]]);
        let err = validate(&d).unwrap_err();
        assert!(err.violations.iter().any(|v| matches!(
            v,
            Violation::ZeroAbsorption {
                zero_on_left: true,
                ..
            }
        )));
    }

    #[test]
    fn set_products() {
        let s = a2b();
        let z = ElementSet::zero(&s);
        let all = ElementSet::all(&s);
        assert_eq!(set_product(&s, &z, &all), z);
        let a: ElementSet = [1].into_iter().collect();
        assert_eq!(set_product(&s, &a, &a), [2].into_iter().collect());
        let n = null(3);
        let all = ElementSet::all(&n);
        assert!(set_product(&n, &all, &all).is_zero_set(&n));
    }

    #[test]
    fn ideals() {
        let s = a2b();
        let z = ElementSet::zero(&s);
        for side in [Side::Left, Side::Right, Side::TwoSided] {
            assert!(is_ideal(&s, &z, side));
        }
        let a: ElementSet = [1].into_iter().collect();
        assert!(!is_ideal(&s, &a, Side::TwoSided));
        let zb: ElementSet = [0, 2].into_iter().collect();
        assert!(is_ideal(&s, &zb, Side::TwoSided));
    }

    #[test]
    fn json_shape_is_stable() {
        let json = serde_json::to_string(&a2b().to_doc()).unwrap();
        assert_eq!(
            json,
            r#"{"elements":["0","a","b"],"zero":"0","table":[["0","0","0"],["0","b","0"],["0","0","0"]]}"#
        );
    }
}
