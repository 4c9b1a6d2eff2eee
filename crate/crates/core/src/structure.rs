//! The decomposition of a K-semigroup `S`.
//!
//! `S` is the union of its quasi-annihilator `A` (a 3-nilpotent ideal) and
//! the subsemigroup `T = (S \ A) ∪ {0}`. On `T` the relations
//!
//! * `P`: `a ~ b` iff `xa = 0 ⇔ xb = 0` for every `x ∈ T`,
//! * `Q`: `a ~ b` iff `ax = 0 ⇔ bx = 0` for every `x ∈ T`,
//! * `N = P ∩ Q`,
//!
//! are equivalences with `{0}` as a class, `N` is the greatest 0-restricted
//! congruence, and `T/N` embeds into the Rees semigroup `M⁰(1; I, Λ; W)`
//! indexed by the nonzero `P`- and `Q`-classes, where `w[λ][i] = 1` iff
//! `Q_λ P_i ≠ 0`. The class `N_{iλ} = P_i ∩ Q_λ` goes to `(i, λ)`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::analysis::{
    annihilators, complement_subsemigroup, is_categorical_at_zero,
    nilpotency_matches_quasi_annihilator, Annihilators, Complement,
};
use crate::construct::category::{semigroup_of_category, SmallCategory};
use crate::construct::rees::ReesSemigroup;
use crate::error::{Error, Result};
use crate::morphism::HomomorphismMap;
use crate::partition::{
    congruence_failure, enumerate_congruences, quotient, Partition, CONGRUENCE_BOUND,
};
use crate::semigroup::{is_ideal, set_product, ElementSet, FiniteSemigroup, Side};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PqnData {
    pub p: Partition,
    pub q: Partition,
    pub n: Partition,
    /// Nonzero `P`-classes in order of least member; position is the index `i`.
    pub i_classes: Vec<ElementSet>,
    /// Nonzero `Q`-classes in order of least member; position is the index `λ`.
    pub lambda_classes: Vec<ElementSet>,
    /// Nonempty `N_{iλ}`; empty intersections are absent.
    pub n_classes: BTreeMap<(usize, usize), ElementSet>,
    p_index: Vec<Option<usize>>,
    q_index: Vec<Option<usize>>,
}

impl PqnData {
    /// `i` of the `P`-class of a nonzero element.
    pub fn i_of(&self, a: usize) -> Option<usize> {
        self.p_index[a]
    }

    /// `λ` of the `Q`-class of a nonzero element.
    pub fn lambda_of(&self, a: usize) -> Option<usize> {
        self.q_index[a]
    }

    /// `(i, λ)` with `a ∈ N_{iλ}`.
    pub fn coordinates(&self, a: usize) -> Option<(usize, usize)> {
        Some((self.p_index[a]?, self.q_index[a]?))
    }
}

fn nonzero_index(p: &Partition, zero: usize) -> (Vec<ElementSet>, Vec<Option<usize>>) {
    let zero_block = p.block_of(zero);
    let mut classes = Vec::new();
    let mut renumber = vec![None; p.block_count()];
    for (b, block) in p.blocks().into_iter().enumerate() {
        if b != zero_block {
            renumber[b] = Some(classes.len());
            classes.push(block);
        }
    }
    let index = (0..p.len()).map(|a| renumber[p.block_of(a)]).collect();
    (classes, index)
}

/// `P`, `Q` and `N` on `t` from the left and right annihilation profiles.
///
/// Fails when a nonzero element is annihilated by all of `t` on one side,
/// since it would then share its class with zero.
pub fn compute_pqn(t: &FiniteSemigroup) -> Result<PqnData> {
    let zero = t.zero();
    for a in t.nonzero() {
        let left_dead = t.elements().all(|x| t.is_zero(t.mul(x, a)));
        let right_dead = t.elements().all(|x| t.is_zero(t.mul(a, x)));
        if left_dead || right_dead {
            return Err(Error::AnnihilatedElement {
                element: t.label(a).to_string(),
            });
        }
    }
    let left_profile =
        |a: usize| -> Vec<bool> { t.elements().map(|x| t.is_zero(t.mul(x, a))).collect() };
    let right_profile =
        |a: usize| -> Vec<bool> { t.elements().map(|x| t.is_zero(t.mul(a, x))).collect() };
    let p = Partition::by_key(t.order(), left_profile);
    let q = Partition::by_key(t.order(), right_profile);
    let n = p.meet(&q);
    let (i_classes, p_index) = nonzero_index(&p, zero);
    let (lambda_classes, q_index) = nonzero_index(&q, zero);
    let mut grouped: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for a in t.nonzero() {
        let key = (p_index[a].expect("nonzero"), q_index[a].expect("nonzero"));
        grouped.entry(key).or_default().push(a);
    }
    let n_classes = grouped
        .into_iter()
        .map(|(k, v)| (k, v.into_iter().collect()))
        .collect();
    Ok(PqnData {
        p,
        q,
        n,
        i_classes,
        lambda_classes,
        n_classes,
        p_index,
        q_index,
    })
}

pub fn greatest_zero_restricted_congruence(t: &FiniteSemigroup) -> Result<Partition> {
    Ok(compute_pqn(t)?.n)
}

/// First `(λ, i)` where `Q_λ P_i` contains both zero and a nonzero element.
pub fn sandwich_dichotomy_violation(t: &FiniteSemigroup, pqn: &PqnData) -> Option<(usize, usize)> {
    for (lambda, ql) in pqn.lambda_classes.iter().enumerate() {
        for (i, pi) in pqn.i_classes.iter().enumerate() {
            let prod = set_product(t, ql, pi);
            if prod.contains(t.zero()) && prod.len() > 1 {
                return Some((lambda, i));
            }
        }
    }
    None
}

fn build_sandwich(t: &FiniteSemigroup, pqn: &PqnData) -> ReesSemigroup {
    let w = pqn
        .lambda_classes
        .iter()
        .map(|ql| {
            pqn.i_classes
                .iter()
                .map(|pi| !set_product(t, ql, pi).is_zero_set(t))
                .collect()
        })
        .collect();
    let numbered = |n: usize| (1..=n).map(|k| k.to_string()).collect();
    ReesSemigroup::new(
        numbered(pqn.i_classes.len()),
        numbered(pqn.lambda_classes.len()),
        w,
    )
    .expect("dimensions follow the class counts")
}

/// `w[λ][i] = 1` iff `Q_λ P_i ≠ {0}`; refuses when some `Q_λ P_i` is
/// neither zero-free nor `{0}`.
pub fn sandwich_matrix(t: &FiniteSemigroup, pqn: &PqnData) -> Result<ReesSemigroup> {
    if let Some((lambda, i)) = sandwich_dichotomy_violation(t, pqn) {
        return Err(Error::SandwichDichotomy {
            lambda: lambda + 1,
            i: i + 1,
        });
    }
    Ok(build_sandwich(t, pqn))
}

fn embedding_map(
    t: &FiniteSemigroup,
    pqn: &PqnData,
    rees: &ReesSemigroup,
) -> Result<HomomorphismMap> {
    let (t_mod_n, _) = quotient(t, &pqn.n)?;
    let m = rees.materialize();
    let map = pqn
        .n
        .blocks()
        .iter()
        .map(|block| {
            let a = block.as_slice()[0];
            match pqn.coordinates(a) {
                None => m.zero(),
                Some((i, lambda)) => rees.element_index(i, lambda),
            }
        })
        .collect();
    Ok(HomomorphismMap::new(t_mod_n, m, map))
}

/// `φ: T/N -> M`, `N_{iλ} ↦ (i, λ)`, `0 ↦ 0`, checked to be an injective
/// 0-restricted homomorphism.
pub fn rees_embedding(
    t: &FiniteSemigroup,
    pqn: &PqnData,
    rees: &ReesSemigroup,
) -> Result<HomomorphismMap> {
    let phi = embedding_map(t, pqn, rees)?;
    if let Some(w) = embedding_witness(&phi) {
        return Err(Error::Embedding(w));
    }
    Ok(phi)
}

fn embedding_witness(phi: &HomomorphismMap) -> Option<String> {
    let (s, m) = (phi.source(), phi.target());
    if let Some((a, b)) = phi.multiplicativity_failure() {
        let ab = s.mul(a, b);
        return Some(format!(
            "phi({}*{}) = {} but phi({})*phi({}) = {}",
            s.label(a),
            s.label(b),
            m.label(phi.apply(ab)),
            s.label(a),
            s.label(b),
            m.label(m.mul(phi.apply(a), phi.apply(b)))
        ));
    }
    if let Some((a, b)) = phi.injectivity_failure() {
        return Some(format!("phi({}) = phi({})", s.label(a), s.label(b)));
    }
    if !phi.is_zero_restricted() {
        return Some("phi is not 0-restricted".into());
    }
    None
}

/// Everything computed by [`decompose`], together with the outcome of every check.
#[derive(Debug, Clone)]
pub struct DecompositionReport {
    pub source: FiniteSemigroup,
    pub annihilators: Annihilators,
    pub complement: Complement,
    pub pqn: PqnData,
    pub rees: ReesSemigroup,
    /// `T/N -> M`
    pub phi: HomomorphismMap,
    pub verified: BTreeMap<String, bool>,
    /// Whether the maximality of `N` was checked against every congruence of `T`.
    pub greatest_congruence_exhaustive: bool,
    pub witnesses: Vec<String>,
}

impl DecompositionReport {
    pub fn t(&self) -> &FiniteSemigroup {
        &self.complement.semigroup
    }

    pub fn all_verified(&self) -> bool {
        self.verified.values().all(|&v| v)
    }

    pub fn failed_checks(&self) -> Vec<&str> {
        self.verified
            .iter()
            .filter(|(_, &v)| !v)
            .map(|(k, _)| k.as_str())
            .collect()
    }

    pub fn to_doc(&self) -> DecompositionDoc {
        let s = &self.source;
        let t = self.t();
        let pqn = &self.pqn;
        let labels = |set: &ElementSet| set.labels(t);
        let phi = self.phi.source();
        DecompositionDoc {
            annihilators: AnnihilatorDoc {
                left: self.annihilators.left.labels(s),
                right: self.annihilators.right.labels(s),
                quasi: self.annihilators.quasi.labels(s),
            },
            t_elements: t.labels().to_vec(),
            p_classes: pqn.i_classes.iter().map(labels).collect(),
            q_classes: pqn.lambda_classes.iter().map(labels).collect(),
            n_classes: pqn
                .n_classes
                .iter()
                .map(|(&(i, lambda), members)| NClassDoc {
                    i: i + 1,
                    lambda: lambda + 1,
                    members: labels(members),
                })
                .collect(),
            sandwich: SandwichDoc {
                i_count: self.rees.i_count(),
                lambda_count: self.rees.lambda_count(),
                rows: self.rees.rows(),
            },
            phi: pqn
                .n
                .blocks()
                .iter()
                .enumerate()
                .filter_map(|(b, block)| {
                    let (i, lambda) = pqn.coordinates(block.as_slice()[0])?;
                    Some(PhiDoc {
                        class: phi.label(b).to_string(),
                        image_i: i + 1,
                        image_lambda: lambda + 1,
                    })
                })
                .collect(),
            verified: self.verified.clone(),
            greatest_congruence_scope: if self.greatest_congruence_exhaustive {
                "exhaustive"
            } else {
                "definition-level"
            }
            .to_string(),
            witnesses: self.witnesses.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnnihilatorDoc {
    pub left: Vec<String>,
    pub right: Vec<String>,
    pub quasi: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NClassDoc {
    pub i: usize,
    pub lambda: usize,
    pub members: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SandwichDoc {
    pub i_count: usize,
    pub lambda_count: usize,
    pub rows: Vec<Vec<u8>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PhiDoc {
    pub class: String,
    pub image_i: usize,
    pub image_lambda: usize,
}

/// JSON form of a [`DecompositionReport`]. `p_classes[k]` is `P_{k+1}`,
/// and the `i`/`lambda` numbers are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DecompositionDoc {
    pub annihilators: AnnihilatorDoc,
    pub t_elements: Vec<String>,
    pub p_classes: Vec<Vec<String>>,
    pub q_classes: Vec<Vec<String>>,
    pub n_classes: Vec<NClassDoc>,
    pub sandwich: SandwichDoc,
    pub phi: Vec<PhiDoc>,
    pub verified: BTreeMap<String, bool>,
    pub greatest_congruence_scope: String,
    pub witnesses: Vec<String>,
}

struct Checks {
    verified: BTreeMap<String, bool>,
    witnesses: Vec<String>,
}

impl Checks {
    fn record(&mut self, name: &str, witness: Option<String>) {
        self.verified.insert(name.to_string(), witness.is_none());
        if let Some(w) = witness {
            self.witnesses.push(format!("{name}: {w}"));
        }
    }
}

pub fn decompose(s: &FiniteSemigroup) -> Result<DecompositionReport> {
    decompose_with_bound(s, CONGRUENCE_BOUND)
}

/// Like [`decompose`]; the maximality of `N` is checked exhaustively only when
/// `|T| <= congruence_bound`.
pub fn decompose_with_bound(
    s: &FiniteSemigroup,
    congruence_bound: usize,
) -> Result<DecompositionReport> {
    is_categorical_at_zero(s).map_err(Error::NotCategorical)?;
    let mut checks = Checks {
        verified: BTreeMap::new(),
        witnesses: Vec::new(),
    };
    let ann = annihilators(s);

    let cube = set_product(s, &set_product(s, &ann.quasi, &ann.quasi), &ann.quasi);
    let ideals = [
        ("left", &ann.left),
        ("right", &ann.right),
        ("quasi", &ann.quasi),
    ]
    .into_iter()
    .find(|(_, set)| !is_ideal(s, set, Side::TwoSided))
    .map(|(name, _)| format!("{name} annihilator is not a two-sided ideal"));
    checks.record(
        "annihilator_ideals_cube_zero",
        ideals.or_else(|| {
            (!cube.is_zero_set(s)).then(|| format!("(Ann_q)^3 = {:?}", cube.labels(s)))
        }),
    );
    checks.record(
        "cube_zero_criterion",
        (!nilpotency_matches_quasi_annihilator(s))
            .then(|| "3-nilpotency and S = Ann_q S disagree".to_string()),
    );

    let complement = complement_subsemigroup(s)?;
    checks.record("complement_closed", None);
    let t = &complement.semigroup;
    let pqn = compute_pqn(t)?;

    checks.record("p_right_ideals", class_closure_failure(t, &pqn, true));
    checks.record("q_left_ideals", class_closure_failure(t, &pqn, false));

    let (greatest, exhaustive) = check_greatest(t, &pqn.n, congruence_bound);
    checks.record("n_greatest_zero_restricted", greatest);

    checks.record("pq_in_n_class", pq_containment_failure(t, &pqn));
    checks.record(
        "sandwich_dichotomy",
        sandwich_dichotomy_violation(t, &pqn)
            .map(|(l, i)| format!("Q{}P{} contains 0 and a nonzero product", l + 1, i + 1)),
    );
    let rees = build_sandwich(t, &pqn);
    checks.record("n_class_products", n_product_failure(t, &pqn, &rees));
    checks.record("n_class_shapes", n_class_shape_failure(t, &pqn));

    let phi = embedding_map(t, &pqn, &rees)?;
    checks.record("rees_embedding", embedding_witness(&phi));
    checks.record(
        "rees_categorical",
        is_categorical_at_zero(phi.target())
            .err()
            .map(|w| w.to_string()),
    );

    Ok(DecompositionReport {
        source: s.clone(),
        annihilators: ann,
        complement,
        pqn,
        rees,
        phi,
        verified: checks.verified,
        greatest_congruence_exhaustive: exhaustive,
        witnesses: checks.witnesses,
    })
}

/// `P_i ∪ {0}` is a right ideal (`right = true`), or `Q_λ ∪ {0}` a left ideal.
fn class_closure_failure(t: &FiniteSemigroup, pqn: &PqnData, right: bool) -> Option<String> {
    for a in t.nonzero() {
        for x in t.elements() {
            let prod = if right { t.mul(a, x) } else { t.mul(x, a) };
            if t.is_zero(prod) {
                continue;
            }
            let same = if right {
                pqn.i_of(prod) == pqn.i_of(a)
            } else {
                pqn.lambda_of(prod) == pqn.lambda_of(a)
            };
            if !same {
                let (l, r) = if right { (a, x) } else { (x, a) };
                return Some(format!(
                    "{}*{} = {} leaves the class of {}",
                    t.label(l),
                    t.label(r),
                    t.label(prod),
                    t.label(a)
                ));
            }
        }
    }
    None
}

/// `N` is a 0-restricted congruence and, within the bound, coarsens every
/// other 0-restricted congruence. Returns the failure and whether the
/// exhaustive comparison ran.
fn check_greatest(t: &FiniteSemigroup, n: &Partition, bound: usize) -> (Option<String>, bool) {
    if let Some((a, b, x)) = congruence_failure(t, n) {
        return (
            Some(format!(
                "N is not a congruence: {} ~ {} but multiplying by {} separates them",
                t.label(a),
                t.label(b),
                t.label(x)
            )),
            false,
        );
    }
    if !n.is_zero_restricted(t.zero()) {
        return (Some("N is not 0-restricted".into()), false);
    }
    match enumerate_congruences(t, bound) {
        Err(_) => (None, false),
        Ok(all) => {
            let bigger = all
                .into_iter()
                .find(|c| c.zero_restricted && !c.partition.refines(n));
            (
                bigger.map(|c| {
                    format!(
                        "0-restricted congruence {:?} does not refine N",
                        c.partition.label_blocks(t)
                    )
                }),
                true,
            )
        }
    }
}

/// `P_i Q_λ ⊆ N_{iλ} ∪ {0}`.
fn pq_containment_failure(t: &FiniteSemigroup, pqn: &PqnData) -> Option<String> {
    for (i, pi) in pqn.i_classes.iter().enumerate() {
        for (lambda, ql) in pqn.lambda_classes.iter().enumerate() {
            for a in pi.iter() {
                for b in ql.iter() {
                    let ab = t.mul(a, b);
                    if !t.is_zero(ab) && pqn.coordinates(ab) != Some((i, lambda)) {
                        return Some(format!(
                            "{}*{} = {} is outside N{},{}",
                            t.label(a),
                            t.label(b),
                            t.label(ab),
                            i + 1,
                            lambda + 1
                        ));
                    }
                }
            }
        }
    }
    None
}

/// `N_{iλ} N_{jμ}` is `{0}` when `w[λ][j] = 0` and lies in `N_{iμ}` otherwise.
fn n_product_failure(t: &FiniteSemigroup, pqn: &PqnData, rees: &ReesSemigroup) -> Option<String> {
    for (&(i, lambda), left) in &pqn.n_classes {
        for (&(j, mu), right) in &pqn.n_classes {
            let linked = rees.entry(lambda, j);
            for a in left.iter() {
                for b in right.iter() {
                    let ab = t.mul(a, b);
                    let ok = if linked {
                        pqn.coordinates(ab) == Some((i, mu))
                    } else {
                        t.is_zero(ab)
                    };
                    if !ok {
                        return Some(format!(
                            "{}*{} = {} with w[{}][{}] = {}",
                            t.label(a),
                            t.label(b),
                            t.label(ab),
                            lambda + 1,
                            j + 1,
                            u8::from(linked)
                        ));
                    }
                }
            }
        }
    }
    None
}

/// Each `N_{iλ} ∪ {0}` has zero multiplication or is closed with no zero products.
fn n_class_shape_failure(t: &FiniteSemigroup, pqn: &PqnData) -> Option<String> {
    for (&(i, lambda), class) in &pqn.n_classes {
        let square = set_product(t, class, class);
        let null = square.is_zero_set(t);
        let closed = !square.contains(t.zero()) && square.is_subset(class);
        if !null && !closed {
            return Some(format!(
                "N{},{} squared is {:?}",
                i + 1,
                lambda + 1,
                square.labels(t)
            ));
        }
    }
    None
}

/// One line of [`category_interpretation_check`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckItem {
    pub name: String,
    pub passed: bool,
    pub witness: Option<String>,
}

impl CheckItem {
    fn new(name: &str, witness: Option<String>) -> Self {
        CheckItem {
            name: name.to_string(),
            passed: witness.is_none(),
            witness,
        }
    }
}

/// Reads the decomposition of `S(C)` back in terms of `C`: `P`-classes are
/// codomain fibers, `Q`-classes domain fibers, `N_{ij} = Mor(j, i)`, the
/// sandwich matrix is the identity once `I` and `Λ` are both identified with
/// the objects, diagonal `N`-classes are monoids, and `φ` is bijective on objects.
#[allow(clippy::needless_range_loop)] // objects index several tables at once
pub fn category_interpretation_check(
    s: &FiniteSemigroup,
    c: &SmallCategory,
    report: &DecompositionReport,
) -> Vec<CheckItem> {
    let mut items = Vec::new();
    let matches = match semigroup_of_category(c) {
        Ok(expected) if &expected == s => None,
        Ok(_) => Some("semigroup differs from the one built from the category".to_string()),
        Err(e) => Some(e.to_string()),
    };
    let mismatch = matches.is_some();
    items.push(CheckItem::new("semigroup_matches_category", matches));
    if mismatch {
        return items;
    }

    let t = report.t();
    let pqn = &report.pqn;
    items.push(CheckItem::new(
        "quasi_annihilator_is_zero",
        (!report.annihilators.quasi.is_zero_set(s))
            .then(|| format!("Ann_q = {:?}", report.annihilators.quasi.labels(s))),
    ));
    items.push(CheckItem::new(
        "complement_is_whole_semigroup",
        (t.order() != s.order()).then(|| format!("|T| = {} but |S| = {}", t.order(), s.order())),
    ));
    if t.order() != s.order() {
        return items;
    }

    // element k of T is morphism k - 1 of C (zero sits at index 0)
    let morphism = |a: usize| {
        c.morphism_index(t.label(a))
            .expect("labels are morphism names")
    };
    let objects = c.objects().len();

    let fibers = |by_cod: bool, classes: &[ElementSet]| -> (Option<String>, Vec<Option<usize>>) {
        let mut object_of = vec![None; classes.len()];
        for (k, class) in classes.iter().enumerate() {
            let ends: Vec<usize> = class
                .iter()
                .map(|a| {
                    let arrow = c.arrow(morphism(a));
                    if by_cod {
                        arrow.cod
                    } else {
                        arrow.dom
                    }
                })
                .collect();
            let o = ends[0];
            if ends.iter().any(|&e| e != o) {
                return (
                    Some(format!("class {:?} mixes objects", class.labels(t))),
                    object_of,
                );
            }
            let fiber: Vec<String> = (0..c.morphism_count())
                .filter(|&f| {
                    let arrow = c.arrow(f);
                    (if by_cod { arrow.cod } else { arrow.dom }) == o
                })
                .map(|f| c.name(f).to_string())
                .collect();
            if fiber != class.labels(t) {
                return (
                    Some(format!(
                        "class {:?} is not the whole fiber {:?} over {}",
                        class.labels(t),
                        fiber,
                        c.objects()[o]
                    )),
                    object_of,
                );
            }
            object_of[k] = Some(o);
        }
        if classes.len() != objects {
            return (
                Some(format!("{} classes for {} objects", classes.len(), objects)),
                object_of,
            );
        }
        (None, object_of)
    };
    let (p_fail, obj_of_i) = fibers(true, &pqn.i_classes);
    let (q_fail, obj_of_lambda) = fibers(false, &pqn.lambda_classes);
    let identified = p_fail.is_none() && q_fail.is_none();
    items.push(CheckItem::new("p_classes_are_codomain_fibers", p_fail));
    items.push(CheckItem::new("q_classes_are_domain_fibers", q_fail));
    if !identified {
        return items;
    }
    let mut i_of_obj = vec![0; objects];
    let mut lambda_of_obj = vec![0; objects];
    for (i, o) in obj_of_i.iter().enumerate() {
        i_of_obj[o.expect("identified")] = i;
    }
    for (l, o) in obj_of_lambda.iter().enumerate() {
        lambda_of_obj[o.expect("identified")] = l;
    }

    // N_{ij} = Mor(j, i)
    let mut hom_fail = None;
    'outer: for cod in 0..objects {
        for dom in 0..objects {
            let hom: Vec<String> = c
                .hom(dom, cod)
                .iter()
                .map(|&f| c.name(f).to_string())
                .collect();
            let class = pqn
                .n_classes
                .get(&(i_of_obj[cod], lambda_of_obj[dom]))
                .map(|set| set.labels(t))
                .unwrap_or_default();
            if hom != class {
                hom_fail = Some(format!(
                    "N for ({}, {}) is {:?} but Mor({}, {}) is {:?}",
                    c.objects()[cod],
                    c.objects()[dom],
                    class,
                    c.objects()[dom],
                    c.objects()[cod],
                    hom
                ));
                break 'outer;
            }
        }
    }
    items.push(CheckItem::new("n_classes_are_hom_sets", hom_fail));

    let mut sandwich_fail = None;
    for o in 0..objects {
        for o2 in 0..objects {
            let entry = report.rees.entry(lambda_of_obj[o2], i_of_obj[o]);
            if entry != (o == o2) {
                sandwich_fail = Some(format!(
                    "Q({})P({}) nonzero = {entry}",
                    c.objects()[o2],
                    c.objects()[o]
                ));
            }
        }
    }
    items.push(CheckItem::new("sandwich_is_identity", sandwich_fail));

    let mut monoid_fail = None;
    for o in 0..objects {
        let class = match pqn.n_classes.get(&(i_of_obj[o], lambda_of_obj[o])) {
            Some(class) => class,
            None => {
                monoid_fail = Some(format!("N for object {} is empty", c.objects()[o]));
                break;
            }
        };
        let closed = class
            .iter()
            .all(|a| class.iter().all(|b| class.contains(t.mul(a, b))));
        let unit = class
            .iter()
            .find(|&e| class.iter().all(|a| t.mul(e, a) == a && t.mul(a, e) == a));
        if !closed || unit.is_none() {
            monoid_fail = Some(format!(
                "N for object {} = {:?} is not a monoid",
                c.objects()[o],
                class.labels(t)
            ));
            break;
        }
    }
    items.push(CheckItem::new(
        "diagonal_n_classes_are_monoids",
        monoid_fail,
    ));

    let mut phi_fail = None;
    let mut images = Vec::new();
    for o in 0..objects {
        let id = t
            .index_of(c.name(c.identity(o)))
            .expect("identity is an element");
        let block = pqn.n.block_of(id);
        let image = report.phi.apply(block);
        if image != report.rees.element_index(i_of_obj[o], lambda_of_obj[o]) {
            phi_fail = Some(format!(
                "phi of the class of id_{} is off the diagonal",
                c.objects()[o]
            ));
        }
        images.push(image);
    }
    images.sort_unstable();
    images.dedup();
    if images.len() != objects {
        phi_fail = Some("phi identifies two objects".into());
    }
    items.push(CheckItem::new("phi_bijective_on_objects", phi_fail));
    items
}
