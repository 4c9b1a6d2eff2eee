//! Semigroups of morphisms `Mor(Δ, D) ∪ {0}` with the product
//! `g * f = g ∘ ε_a ∘ f` when `cod ε_a = dom g` (for `f: α -> a`), else zero.
//!
//! `Δ` and `D` are full subcategories given by their object sets.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::category::{CategoryDoc, SmallCategory};
use crate::analysis::annihilators;
use crate::error::{Error, Result};
use crate::semigroup::{ElementSet, FiniteSemigroup, ZERO_LABEL};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MorExtensionDoc {
    pub category: CategoryDoc,
    pub delta: Vec<String>,
    pub d: Vec<String>,
    pub epsilon: BTreeMap<String, String>,
}

#[derive(Debug, Clone)]
pub struct MorExtensionSpec {
    pub ambient: SmallCategory,
    pub delta: Vec<usize>,
    pub d: Vec<usize>,
    /// `epsilon[k]` is the chosen arrow out of `d[k]` into `Δ`.
    pub epsilon: Vec<usize>,
}

impl MorExtensionSpec {
    pub fn from_doc(doc: &MorExtensionDoc) -> Result<Self> {
        let ambient = SmallCategory::from_doc(&doc.category)?;
        let mut problems = Vec::new();
        let objects = |names: &[String], what: &str, problems: &mut Vec<String>| -> Vec<usize> {
            let mut out = Vec::new();
            for n in names {
                match ambient.object_index(n) {
                    Some(o) if !out.contains(&o) => out.push(o),
                    Some(_) => problems.push(format!("{what} lists {n:?} twice")),
                    None => problems.push(format!("{what} object {n:?} is not in the category")),
                }
            }
            out
        };
        let delta = objects(&doc.delta, "delta", &mut problems);
        let d = objects(&doc.d, "d", &mut problems);
        if let Some(k) = doc.epsilon.keys().find(|k| !doc.d.contains(k)) {
            problems.push(format!("epsilon given for {k:?}, which is not in d"));
        }
        let mut epsilon = Vec::new();
        for &a in &d {
            let obj = &ambient.objects()[a];
            let Some(name) = doc.epsilon.get(obj) else {
                problems.push(format!("epsilon is not defined on {obj:?}"));
                continue;
            };
            let Some(e) = ambient.morphism_index(name) else {
                problems.push(format!("epsilon({obj}) = {name:?} is not a morphism"));
                continue;
            };
            let arrow = ambient.arrow(e);
            if arrow.dom != a || !delta.contains(&arrow.cod) {
                problems.push(format!(
                    "epsilon({obj}) = {name:?} does not go from {obj:?} into delta"
                ));
            }
            epsilon.push(e);
        }
        if !problems.is_empty() {
            return Err(Error::Spec(problems));
        }
        Ok(MorExtensionSpec {
            ambient,
            delta,
            d,
            epsilon,
        })
    }

    fn epsilon_of(&self, a: usize) -> usize {
        let k = self.d.iter().position(|&x| x == a).expect("cod lies in D");
        self.epsilon[k]
    }

    /// `ε(D)`: codomains of the chosen arrows.
    pub fn epsilon_image(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .epsilon
            .iter()
            .map(|&e| self.ambient.arrow(e).cod)
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Morphisms of the ambient category from an object of `Δ` to an object of `D`.
    pub fn carrier(&self) -> Vec<usize> {
        (0..self.ambient.morphism_count())
            .filter(|&f| {
                let a = self.ambient.arrow(f);
                self.delta.contains(&a.dom) && self.d.contains(&a.cod)
            })
            .collect()
    }
}

pub fn mor_extension(spec: &MorExtensionSpec) -> Result<FiniteSemigroup> {
    let c = &spec.ambient;
    let carrier = spec.carrier();
    if carrier.iter().any(|&f| c.name(f) == ZERO_LABEL) {
        return Err(Error::Category(format!(
            "morphism name {ZERO_LABEL:?} is reserved for the zero"
        )));
    }
    let labels = std::iter::once(ZERO_LABEL.to_string())
        .chain(carrier.iter().map(|&f| c.name(f).to_string()))
        .collect();
    let position = |m: usize| carrier.iter().position(|&x| x == m);
    let mut missing = None;
    let s = FiniteSemigroup::from_fn(labels, 0, |x, y| {
        if x == 0 || y == 0 {
            return 0;
        }
        let (g, f) = (carrier[x - 1], carrier[y - 1]);
        let eps = spec.epsilon_of(c.arrow(f).cod);
        if c.arrow(eps).cod != c.arrow(g).dom {
            return 0;
        }
        let composite = c.then(f, eps).and_then(|fe| c.then(fe, g));
        match composite.and_then(position) {
            Some(k) => k + 1,
            None => {
                missing = Some((c.name(g).to_string(), c.name(f).to_string()));
                0
            }
        }
    });
    if let Some((g, f)) = missing {
        return Err(Error::Category(format!(
            "composite {g} * {f} is not in Mor(delta, D)"
        )));
    }
    Ok(s?)
}

/// Computed annihilators beside the closed forms `Ann_r = {0}` and
/// `Ann_l = {g | dom g ∈ Ob Δ \ ε(D)} ∪ {0}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnnihilatorComparison {
    pub left: ElementSet,
    pub right: ElementSet,
    pub predicted_left: ElementSet,
}

impl AnnihilatorComparison {
    pub fn right_is_zero(&self) -> bool {
        self.right.len() == 1
    }

    pub fn left_matches(&self) -> bool {
        self.left == self.predicted_left
    }
}

pub fn compare_annihilators(spec: &MorExtensionSpec, s: &FiniteSemigroup) -> AnnihilatorComparison {
    let ann = annihilators(s);
    let image = spec.epsilon_image();
    let predicted_left = s
        .elements()
        .filter(|&x| {
            s.is_zero(x) || {
                let f = spec
                    .ambient
                    .morphism_index(s.label(x))
                    .expect("carrier label");
                !image.contains(&spec.ambient.arrow(f).dom)
            }
        })
        .collect();
    AnnihilatorComparison {
        left: ann.left,
        right: ann.right,
        predicted_left,
    }
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;
    use crate::construct::category::fixtures::doc;

    /// Objects x, y with `u: x -> y`, `v: y -> x`, `u∘v = id_y` and the
    /// idempotent `e = v∘u` on x.
    pub fn retract_category() -> CategoryDoc {
        doc(
            &["x", "y"],
            &[
                ("id_x", "x", "x"),
                ("id_y", "y", "y"),
                ("u", "x", "y"),
                ("v", "y", "x"),
                ("e", "x", "x"),
            ],
            &[("x", "id_x"), ("y", "id_y")],
            &[
                ("id_x", "id_x", "id_x"),
                ("id_x", "u", "u"),
                ("id_x", "e", "e"),
                ("e", "id_x", "e"),
                ("v", "id_x", "v"),
                ("id_y", "id_y", "id_y"),
                ("id_y", "v", "v"),
                ("u", "id_y", "u"),
                ("v", "u", "id_y"),
                ("u", "v", "e"),
                ("e", "e", "e"),
                ("e", "u", "u"),
                ("v", "e", "v"),
            ],
        )
    }

    /// Δ = {x, y}, D = {x}, ε_x = u.
    pub fn retract_extension() -> MorExtensionDoc {
        MorExtensionDoc {
            category: retract_category(),
            delta: vec!["x".into(), "y".into()],
            d: vec!["x".into()],
            epsilon: [("x".to_string(), "u".to_string())].into_iter().collect(),
        }
    }
}
