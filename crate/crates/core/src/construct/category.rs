use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::semigroup::{FiniteSemigroup, ZERO_LABEL};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MorphismDoc {
    pub name: String,
    pub dom: String,
    pub cod: String,
}

/// One entry of the composition table: doing `first`, then `then`, gives `equals`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompositionDoc {
    pub first: String,
    pub then: String,
    pub equals: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CategoryDoc {
    pub objects: Vec<String>,
    pub morphisms: Vec<MorphismDoc>,
    pub identities: BTreeMap<String, String>,
    pub composition: Vec<CompositionDoc>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub dom: usize,
    pub cod: usize,
}

/// A validated small category with identities, indexed densely.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmallCategory {
    objects: Vec<String>,
    names: Vec<String>,
    arrows: Vec<Arrow>,
    identities: Vec<usize>,
    /// `compose[(f, g)]` is `g ∘ f` (first `f`, then `g`), defined iff `cod f = dom g`.
    compose: HashMap<(usize, usize), usize>,
}

impl SmallCategory {
    pub fn from_doc(doc: &CategoryDoc) -> Result<Self> {
        let err = |m: String| Error::Category(m);
        let mut obj_index = HashMap::new();
        for (i, o) in doc.objects.iter().enumerate() {
            if obj_index.insert(o.as_str(), i).is_some() {
                return Err(err(format!("duplicate object {o:?}")));
            }
        }
        let mut mor_index = HashMap::new();
        let mut arrows = Vec::with_capacity(doc.morphisms.len());
        for (k, m) in doc.morphisms.iter().enumerate() {
            if mor_index.insert(m.name.as_str(), k).is_some() {
                return Err(err(format!("duplicate morphism {:?}", m.name)));
            }
            let obj = |o: &str| {
                obj_index
                    .get(o)
                    .copied()
                    .ok_or_else(|| err(format!("morphism {:?} uses unknown object {o:?}", m.name)))
            };
            arrows.push(Arrow {
                dom: obj(&m.dom)?,
                cod: obj(&m.cod)?,
            });
        }
        let mor = |name: &str| {
            mor_index
                .get(name)
                .copied()
                .ok_or_else(|| err(format!("unknown morphism {name:?}")))
        };
        let mut identities = Vec::with_capacity(doc.objects.len());
        for o in &doc.objects {
            let name = doc
                .identities
                .get(o)
                .ok_or_else(|| err(format!("object {o:?} has no identity")))?;
            identities.push(mor(name)?);
        }
        if let Some(extra) = doc
            .identities
            .keys()
            .find(|k| !obj_index.contains_key(k.as_str()))
        {
            return Err(err(format!(
                "identity declared for unknown object {extra:?}"
            )));
        }
        let mut compose = HashMap::new();
        for c in &doc.composition {
            let key = (mor(&c.first)?, mor(&c.then)?);
            if compose.insert(key, mor(&c.equals)?).is_some() {
                return Err(err(format!(
                    "composition of {:?} then {:?} given twice",
                    c.first, c.then
                )));
            }
        }
        let cat = SmallCategory {
            objects: doc.objects.clone(),
            names: doc.morphisms.iter().map(|m| m.name.clone()).collect(),
            arrows,
            identities,
            compose,
        };
        cat.check_laws()?;
        Ok(cat)
    }

    /// Builds from indices; used by generators that already know the table is lawful.
    pub(crate) fn from_parts(
        objects: Vec<String>,
        names: Vec<String>,
        arrows: Vec<Arrow>,
        identities: Vec<usize>,
        compose: HashMap<(usize, usize), usize>,
    ) -> Result<Self> {
        let cat = SmallCategory {
            objects,
            names,
            arrows,
            identities,
            compose,
        };
        cat.check_laws()?;
        Ok(cat)
    }

    fn check_laws(&self) -> Result<()> {
        let err = |m: String| Err(Error::Category(m));
        let n = self.arrows.len();
        for (o, &id) in self.identities.iter().enumerate() {
            if self.arrows[id].dom != o || self.arrows[id].cod != o {
                return err(format!(
                    "identity {:?} of {:?} is not an endomorphism of it",
                    self.names[id], self.objects[o]
                ));
            }
        }
        for f in 0..n {
            for g in 0..n {
                let composable = self.arrows[f].cod == self.arrows[g].dom;
                match (composable, self.compose.get(&(f, g))) {
                    (true, None) => {
                        return err(format!(
                            "missing composition of {:?} then {:?}",
                            self.names[f], self.names[g]
                        ))
                    }
                    (false, Some(_)) => {
                        return err(format!(
                            "composition of {:?} then {:?} given but they are not composable",
                            self.names[f], self.names[g]
                        ))
                    }
                    (true, Some(&h)) => {
                        let want = Arrow {
                            dom: self.arrows[f].dom,
                            cod: self.arrows[g].cod,
                        };
                        if self.arrows[h] != want {
                            return err(format!(
                                "{:?} then {:?} = {:?} has the wrong domain or codomain",
                                self.names[f], self.names[g], self.names[h]
                            ));
                        }
                    }
                    (false, None) => {}
                }
            }
        }
        for f in 0..n {
            let a = self.arrows[f];
            if self.compose[&(self.identities[a.dom], f)] != f
                || self.compose[&(f, self.identities[a.cod])] != f
            {
                return err(format!("identity law fails at {:?}", self.names[f]));
            }
        }
        for f in 0..n {
            for g in self.outgoing(self.arrows[f].cod) {
                let fg = self.compose[&(f, g)];
                for h in self.outgoing(self.arrows[g].cod) {
                    if self.compose[&(fg, h)] != self.compose[&(f, self.compose[&(g, h)])] {
                        return err(format!(
                            "associativity fails at {:?}, {:?}, {:?}",
                            self.names[f], self.names[g], self.names[h]
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    fn outgoing(&self, obj: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.arrows.len()).filter(move |&g| self.arrows[g].dom == obj)
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn morphism_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn name(&self, f: usize) -> &str {
        &self.names[f]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn arrow(&self, f: usize) -> Arrow {
        self.arrows[f]
    }

    pub fn identity(&self, obj: usize) -> usize {
        self.identities[obj]
    }

    pub fn object_index(&self, o: &str) -> Option<usize> {
        self.objects.iter().position(|x| x == o)
    }

    pub fn morphism_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|x| x == name)
    }

    /// `g ∘ f`: first `f`, then `g`.
    pub fn then(&self, f: usize, g: usize) -> Option<usize> {
        self.compose.get(&(f, g)).copied()
    }

    /// Morphisms from `dom` to `cod`.
    pub fn hom(&self, dom: usize, cod: usize) -> Vec<usize> {
        (0..self.arrows.len())
            .filter(|&f| self.arrows[f] == Arrow { dom, cod })
            .collect()
    }

    pub fn to_doc(&self) -> CategoryDoc {
        let n = self.arrows.len();
        let mut composition = Vec::new();
        for f in 0..n {
            for g in 0..n {
                if let Some(h) = self.then(f, g) {
                    composition.push(CompositionDoc {
                        first: self.names[f].clone(),
                        then: self.names[g].clone(),
                        equals: self.names[h].clone(),
                    });
                }
            }
        }
        CategoryDoc {
            objects: self.objects.clone(),
            morphisms: (0..n)
                .map(|f| MorphismDoc {
                    name: self.names[f].clone(),
                    dom: self.objects[self.arrows[f].dom].clone(),
                    cod: self.objects[self.arrows[f].cod].clone(),
                })
                .collect(),
            identities: self
                .identities
                .iter()
                .enumerate()
                .map(|(o, &id)| (self.objects[o].clone(), self.names[id].clone()))
                .collect(),
            composition,
        }
    }
}

/// Morphisms plus an adjoined zero. Element `k + 1` is morphism `k`, and
/// `f * g` is `f ∘ g` (first `g`, then `f`) when `dom f = cod g`, else zero.
pub fn semigroup_of_category(c: &SmallCategory) -> Result<FiniteSemigroup> {
    if c.names.iter().any(|n| n == ZERO_LABEL) {
        return Err(Error::Category(format!(
            "morphism name {ZERO_LABEL:?} is reserved for the zero"
        )));
    }
    let labels = std::iter::once(ZERO_LABEL.to_string())
        .chain(c.names.iter().cloned())
        .collect();
    Ok(FiniteSemigroup::from_fn(labels, 0, |x, y| {
        if x == 0 || y == 0 {
            return 0;
        }
        c.then(y - 1, x - 1).map_or(0, |h| h + 1)
    })?)
}
