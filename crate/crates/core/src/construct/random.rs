//! Seeded generators for test inputs.
//!
//! Random categories are built as concrete categories: every object is a
//! small finite set and every morphism an actual function, so the category
//! laws hold by construction and the validator only double-checks them.

use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::category::{Arrow, SmallCategory};
use super::nilpotent::{NilpotentSpec, PhiEntry};
use super::rees::ReesSemigroup;
use crate::error::{Error, Result};
use crate::semigroup::ZERO_LABEL;

pub const MAX_RANDOM_OBJECTS: usize = 4;
const CATEGORY_ATTEMPTS: usize = 64;
const MAX_SET_SIZE: usize = 3;

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[derive(Clone, PartialEq, Eq, Hash)]
struct Function {
    dom: usize,
    cod: usize,
    map: Vec<usize>,
}

/// A small category with `object_count` objects and at most
/// `max_extra_arrows` non-identity morphisms. Deterministic in `seed`.
pub fn random_category(
    seed: u64,
    object_count: usize,
    max_extra_arrows: usize,
) -> Result<SmallCategory> {
    if object_count == 0 || object_count > MAX_RANDOM_OBJECTS {
        return Err(Error::Spec(vec![format!(
            "object count must be between 1 and {MAX_RANDOM_OBJECTS}, got {object_count}"
        )]));
    }
    let mut rng = seeded(seed);
    let sizes: Vec<usize> = (0..object_count)
        .map(|_| rng.gen_range(1..=MAX_SET_SIZE))
        .collect();
    for _ in 0..CATEGORY_ATTEMPTS {
        let generators = rng.gen_range(0..=max_extra_arrows);
        let mut gens = Vec::with_capacity(generators);
        for _ in 0..generators {
            let dom = rng.gen_range(0..object_count);
            let cod = rng.gen_range(0..object_count);
            let map = (0..sizes[dom])
                .map(|_| rng.gen_range(0..sizes[cod]))
                .collect();
            gens.push(Function { dom, cod, map });
        }
        if let Some(cat) = close(&sizes, gens, max_extra_arrows) {
            return Ok(cat);
        }
    }
    Err(Error::GenerationGaveUp {
        attempts: CATEGORY_ATTEMPTS,
    })
}

/// Closes identities plus `gens` under composition; `None` if that needs
/// more than `max_extra` non-identity functions.
fn close(sizes: &[usize], gens: Vec<Function>, max_extra: usize) -> Option<SmallCategory> {
    let k = sizes.len();
    let mut funcs: Vec<Function> = (0..k)
        .map(|o| Function {
            dom: o,
            cod: o,
            map: (0..sizes[o]).collect(),
        })
        .collect();
    let mut index: HashMap<Function, usize> = funcs
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, f)| (f, i))
        .collect();
    for g in gens {
        if !index.contains_key(&g) {
            index.insert(g.clone(), funcs.len());
            funcs.push(g);
        }
    }
    let mut compose = HashMap::new();
    let mut changed = true;
    while changed {
        changed = false;
        let n = funcs.len();
        for f in 0..n {
            for g in 0..n {
                if funcs[f].cod != funcs[g].dom || compose.contains_key(&(f, g)) {
                    continue;
                }
                let h = Function {
                    dom: funcs[f].dom,
                    cod: funcs[g].cod,
                    map: funcs[f].map.iter().map(|&x| funcs[g].map[x]).collect(),
                };
                let id = match index.get(&h) {
                    Some(&id) => id,
                    None => {
                        if funcs.len() - k >= max_extra {
                            return None;
                        }
                        index.insert(h.clone(), funcs.len());
                        funcs.push(h);
                        changed = true;
                        funcs.len() - 1
                    }
                };
                compose.insert((f, g), id);
            }
        }
    }
    let objects: Vec<String> = (0..k)
        .map(|o| ((b'A' + o as u8) as char).to_string())
        .collect();
    let names = (0..funcs.len())
        .map(|i| {
            if i < k {
                format!("id_{}", objects[i])
            } else {
                format!("f{}", i - k + 1)
            }
        })
        .collect();
    let arrows = funcs
        .iter()
        .map(|f| Arrow {
            dom: f.dom,
            cod: f.cod,
        })
        .collect();
    SmallCategory::from_parts(objects, names, arrows, (0..k).collect(), compose).ok()
}

/// A valid spec with at most `max_part` elements in each of `B \ C`,
/// `C \ B` and `(B ∩ C) \ {0}`.
pub fn random_nilpotent_spec(rng: &mut impl Rng, max_part: usize) -> NilpotentSpec {
    let mixed = rng.gen_range(0..=max_part);
    let (b_only, c_only) = if mixed == 0 || max_part == 0 {
        (0, 0)
    } else {
        (rng.gen_range(1..=max_part), rng.gen_range(1..=max_part))
    };
    let names = |prefix: &str, n: usize| -> Vec<String> {
        (1..=n).map(|k| format!("{prefix}{k}")).collect()
    };
    let bs = names("b", b_only);
    let cs = names("c", c_only);
    let ds = names("d", mixed);
    let mut values = vec![ZERO_LABEL.to_string()];
    values.extend(ds.iter().cloned());
    let mut table: Vec<Vec<String>> = (0..b_only)
        .map(|_| {
            (0..c_only)
                .map(|_| values.choose(rng).unwrap().clone())
                .collect()
        })
        .collect();
    // repair rows and columns that are entirely zero
    for row in table.iter_mut() {
        if row.iter().all(|v| v == ZERO_LABEL) {
            let c = rng.gen_range(0..c_only);
            row[c] = ds.choose(rng).unwrap().clone();
        }
    }
    for c in 0..c_only {
        if table.iter().all(|row| row[c] == ZERO_LABEL) {
            let r = rng.gen_range(0..b_only);
            table[r][c] = ds.choose(rng).unwrap().clone();
        }
    }
    let mut phi = Vec::new();
    for (r, b) in bs.iter().enumerate() {
        for (c, cc) in cs.iter().enumerate() {
            phi.push(PhiEntry {
                b: b.clone(),
                c: cc.clone(),
                value: table[r][c].clone(),
            });
        }
    }
    let mut a = vec![ZERO_LABEL.to_string()];
    a.extend(bs.iter().cloned());
    a.extend(cs.iter().cloned());
    a.extend(ds.iter().cloned());
    let mut b_set = vec![ZERO_LABEL.to_string()];
    b_set.extend(bs);
    b_set.extend(ds.iter().cloned());
    let mut c_set = vec![ZERO_LABEL.to_string()];
    c_set.extend(cs);
    c_set.extend(ds);
    // shuffle the element order so index order carries no structure
    let zero_first = a.remove(0);
    a.shuffle(rng);
    a.insert(rng.gen_range(0..=a.len()), zero_first);
    NilpotentSpec {
        a,
        b: b_set,
        c: c_set,
        phi,
    }
}

/// Random `{0,1}` sandwich matrix with both dimensions in `1..=max_dim`.
pub fn random_sandwich(rng: &mut impl Rng, max_dim: usize) -> ReesSemigroup {
    let ni = rng.gen_range(1..=max_dim);
    let nl = rng.gen_range(1..=max_dim);
    let w = (0..nl)
        .map(|_| (0..ni).map(|_| rng.gen_bool(0.5)).collect())
        .collect();
    ReesSemigroup::new(
        (1..=ni).map(|k| k.to_string()).collect(),
        (1..=nl).map(|k| k.to_string()).collect(),
        w,
    )
    .expect("dimensions agree")
}
