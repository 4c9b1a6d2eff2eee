//! Rees semigroups `M⁰(1; I, Λ; W)` over the trivial group.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::semigroup::{FiniteSemigroup, ZERO_LABEL};

/// JSON shape: `W` rows are indexed by `Lambda`, columns by `I`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReesSpec {
    #[serde(rename = "I")]
    pub i: Vec<String>,
    #[serde(rename = "Lambda")]
    pub lambda: Vec<String>,
    #[serde(rename = "W")]
    pub w: Vec<Vec<u8>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReesSemigroup {
    i_labels: Vec<String>,
    lambda_labels: Vec<String>,
    /// `w[λ][i]`
    w: Vec<Vec<bool>>,
}

impl ReesSemigroup {
    pub fn new(
        i_labels: Vec<String>,
        lambda_labels: Vec<String>,
        w: Vec<Vec<bool>>,
    ) -> Result<Self> {
        let mut problems = Vec::new();
        if w.len() != lambda_labels.len() {
            problems.push(format!(
                "W has {} rows but Lambda has {} labels",
                w.len(),
                lambda_labels.len()
            ));
        }
        for (r, row) in w.iter().enumerate() {
            if row.len() != i_labels.len() {
                problems.push(format!(
                    "W row {r} has {} entries but I has {} labels",
                    row.len(),
                    i_labels.len()
                ));
            }
        }
        for (name, labels) in [("I", &i_labels), ("Lambda", &lambda_labels)] {
            for (k, l) in labels.iter().enumerate() {
                if labels[..k].contains(l) {
                    problems.push(format!("duplicate {name} label {l:?}"));
                }
            }
        }
        if !problems.is_empty() {
            return Err(Error::Spec(problems));
        }
        Ok(ReesSemigroup {
            i_labels,
            lambda_labels,
            w,
        })
    }

    pub fn from_spec(spec: &ReesSpec) -> Result<Self> {
        let mut bad = Vec::new();
        let w = spec
            .w
            .iter()
            .map(|row| {
                row.iter()
                    .map(|&x| {
                        if x > 1 {
                            bad.push(format!("W entry {x} is not 0 or 1"));
                        }
                        x == 1
                    })
                    .collect()
            })
            .collect();
        if !bad.is_empty() {
            return Err(Error::Spec(bad));
        }
        Self::new(spec.i.clone(), spec.lambda.clone(), w)
    }

    pub fn i_count(&self) -> usize {
        self.i_labels.len()
    }

    pub fn lambda_count(&self) -> usize {
        self.lambda_labels.len()
    }

    pub fn i_labels(&self) -> &[String] {
        &self.i_labels
    }

    pub fn lambda_labels(&self) -> &[String] {
        &self.lambda_labels
    }

    pub fn entry(&self, lambda: usize, i: usize) -> bool {
        self.w[lambda][i]
    }

    pub fn rows(&self) -> Vec<Vec<u8>> {
        self.w
            .iter()
            .map(|r| r.iter().map(|&b| u8::from(b)).collect())
            .collect()
    }

    /// Index of `(i, λ)` in [`materialize`](Self::materialize); zero sits at 0.
    pub fn element_index(&self, i: usize, lambda: usize) -> usize {
        1 + i * self.lambda_labels.len() + lambda
    }

    /// Elements `0, (i1,λ1), (i1,λ2), …` with `(i,λ)(j,μ) = (i,μ)` iff `w[λ][j] = 1`.
    pub fn materialize(&self) -> FiniteSemigroup {
        let (ni, nl) = (self.i_count(), self.lambda_count());
        let mut labels = vec![ZERO_LABEL.to_string()];
        let mut coords = vec![(usize::MAX, usize::MAX)];
        for i in 0..ni {
            for l in 0..nl {
                labels.push(format!("({},{})", self.i_labels[i], self.lambda_labels[l]));
                coords.push((i, l));
            }
        }
        FiniteSemigroup::from_fn(labels, 0, |x, y| {
            if x == 0 || y == 0 {
                return 0;
            }
            let ((i, lambda), (j, mu)) = (coords[x], coords[y]);
            if self.w[lambda][j] {
                self.element_index(i, mu)
            } else {
                0
            }
        })
        .expect("Rees multiplication is associative with an absorbing zero")
    }
}

pub fn rees_semigroup(spec: &ReesSpec) -> Result<FiniteSemigroup> {
    Ok(ReesSemigroup::from_spec(spec)?.materialize())
}
