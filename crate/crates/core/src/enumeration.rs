//! Exhaustive enumeration of semigroups with zero and the corpus-wide
//! verification battery.
//!
//! Candidates are tables on `{0, a, b, …}` whose zero row and column are
//! fixed; the `(n-1)²` remaining cells are filled row-major with values in
//! increasing order, so tables come out in lexicographic order of their
//! free-entry vector. A partial table is abandoned as soon as one fully
//! determined triple is non-associative.

use std::collections::HashMap;

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::analysis::{
    annihilators, categoricity_violation, nilpotency_degree, nilpotency_matches_quasi_annihilator,
    rees_quotient_partition,
};
use crate::construct::random::seeded;
use crate::error::{Error, Result};
use crate::morphism::{find_isomorphism, ISOMORPHISM_BOUND};
use crate::partition::quotient;
use crate::semigroup::{is_ideal, FiniteSemigroup, SemigroupDoc, Side, ZERO_LABEL};
use crate::structure::decompose;

/// Largest order enumerated exhaustively; 5 would mean 5¹⁶ candidates.
pub const EXHAUSTIVE_ORDER_CAP: usize = 4;

const UNSET: u8 = u8::MAX;
const PREFIX_CELLS: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchMode {
    Exhaustive,
    /// `count` uniformly random candidate tables drawn from `seed`.
    Sample {
        count: u64,
        seed: u64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationTask {
    pub order: usize,
    pub k_only: bool,
    /// Keep one representative per isomorphism class (the first in output order).
    pub dedup: bool,
    pub jobs: usize,
    pub mode: SearchMode,
}

impl EnumerationTask {
    pub fn exhaustive(order: usize) -> Self {
        EnumerationTask {
            order,
            k_only: false,
            dedup: false,
            jobs: 1,
            mode: SearchMode::Exhaustive,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Enumeration {
    pub semigroups: Vec<FiniteSemigroup>,
    /// Candidate tables covered, counting every leaf below a pruned node.
    pub scanned: u64,
    pub associative: u64,
    pub categorical: u64,
}

/// `0, a, b, c, …`
pub fn element_labels(n: usize) -> Vec<String> {
    (0..n)
        .map(|k| match k {
            0 => ZERO_LABEL.to_string(),
            k if k <= 26 => ((b'a' + (k - 1) as u8) as char).to_string(),
            k => format!("e{k}"),
        })
        .collect()
}

pub fn enumerate(task: &EnumerationTask) -> Result<Enumeration> {
    let n = task.order;
    if n == 0 {
        return Err(Error::Spec(vec!["order must be at least 1".into()]));
    }
    let (tables, scanned) = match task.mode {
        SearchMode::Exhaustive => {
            if n > EXHAUSTIVE_ORDER_CAP {
                return Err(Error::BoundExceeded {
                    what: "exhaustive enumeration (use sampling)",
                    size: n,
                    bound: EXHAUSTIVE_ORDER_CAP,
                });
            }
            with_pool(task.jobs, || TableSearch::new(n).run())?
        }
        SearchMode::Sample { count, seed } => (sample_tables(n, count, seed), count),
    };
    let labels = element_labels(n);
    let associative = tables.len() as u64;
    let mut categorical = 0;
    let mut semigroups = Vec::new();
    for table in tables {
        let s = FiniteSemigroup::from_table(
            labels.clone(),
            0,
            table.into_iter().map(usize::from).collect(),
        )
        .expect("search only emits associative tables with zero");
        let k = categoricity_violation(&s).is_none();
        categorical += u64::from(k);
        if !task.k_only || k {
            semigroups.push(s);
        }
    }
    if task.dedup {
        semigroups = dedup_isomorphic(semigroups);
    }
    Ok(Enumeration {
        semigroups,
        scanned,
        associative,
        categorical,
    })
}

fn with_pool<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> Result<T> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::Spec(vec![format!("cannot start worker pool: {e}")]))?;
    Ok(pool.install(f))
}

struct TableSearch {
    n: usize,
    cells: Vec<usize>,
}

impl TableSearch {
    fn new(n: usize) -> Self {
        let cells = (1..n)
            .flat_map(|r| (1..n).map(move |c| r * n + c))
            .collect();
        TableSearch { n, cells }
    }

    fn empty_table(&self) -> Vec<u8> {
        let n = self.n;
        (0..n * n)
            .map(|k| if k / n == 0 || k % n == 0 { 0 } else { UNSET })
            .collect()
    }

    fn leaves_below(&self, depth: usize) -> u64 {
        (self.n as u64).pow((self.cells.len() - depth) as u32)
    }

    /// Every fully determined triple of nonzero elements associates.
    fn consistent(&self, t: &[u8]) -> bool {
        let n = self.n;
        for x in 1..n {
            for y in 1..n {
                let xy = t[x * n + y];
                if xy == UNSET {
                    continue;
                }
                for z in 1..n {
                    let yz = t[y * n + z];
                    if yz == UNSET {
                        continue;
                    }
                    let left = t[xy as usize * n + z];
                    let right = t[x * n + yz as usize];
                    if left != UNSET && right != UNSET && left != right {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Splits on the first free cells, searches each block in parallel and
    /// concatenates the blocks in prefix order.
    fn run(&self) -> (Vec<Vec<u8>>, u64) {
        let k = PREFIX_CELLS.min(self.cells.len());
        let blocks = (self.n as u64).pow(k as u32);
        let results: Vec<(Vec<Vec<u8>>, u64)> = (0..blocks)
            .into_par_iter()
            .map(|b| self.search_block(b, k))
            .collect();
        let mut tables = Vec::new();
        let mut scanned = 0;
        for (t, s) in results {
            tables.extend(t);
            scanned += s;
        }
        (tables, scanned)
    }

    fn search_block(&self, block: u64, k: usize) -> (Vec<Vec<u8>>, u64) {
        let mut table = self.empty_table();
        // most significant digit first, so block order is lexicographic
        let mut rest = block;
        for d in (0..k).rev() {
            table[self.cells[d]] = (rest % self.n as u64) as u8;
            rest /= self.n as u64;
        }
        let mut out = Vec::new();
        let mut scanned = 0;
        if self.consistent(&table) {
            self.dfs(&mut table, k, &mut out, &mut scanned);
        } else {
            scanned += self.leaves_below(k);
        }
        (out, scanned)
    }

    fn dfs(&self, table: &mut [u8], depth: usize, out: &mut Vec<Vec<u8>>, scanned: &mut u64) {
        if depth == self.cells.len() {
            out.push(table.to_vec());
            *scanned += 1;
            return;
        }
        let cell = self.cells[depth];
        for v in 0..self.n as u8 {
            table[cell] = v;
            if self.consistent(table) {
                self.dfs(table, depth + 1, out, scanned);
            } else {
                *scanned += self.leaves_below(depth + 1);
            }
        }
        table[cell] = UNSET;
    }
}

fn sample_tables(n: usize, count: u64, seed: u64) -> Vec<Vec<u8>> {
    let search = TableSearch::new(n);
    let mut rng = seeded(seed);
    let mut out = Vec::new();
    for _ in 0..count {
        let mut table = search.empty_table();
        for &cell in &search.cells {
            table[cell] = rng.gen_range(0..n as u8);
        }
        if search.consistent(&table) {
            out.push(table);
        }
    }
    out
}

#[derive(Hash, PartialEq, Eq)]
struct Fingerprint {
    categorical: bool,
    nilpotency: Option<usize>,
    idempotents: usize,
    left_annihilator: usize,
    right_annihilator: usize,
    row_zero_counts: Vec<usize>,
    column_zero_counts: Vec<usize>,
}

fn fingerprint(s: &FiniteSemigroup) -> Fingerprint {
    let ann = annihilators(s);
    let mut rows: Vec<usize> = s
        .elements()
        .map(|a| s.elements().filter(|&x| s.is_zero(s.mul(a, x))).count())
        .collect();
    let mut cols: Vec<usize> = s
        .elements()
        .map(|a| s.elements().filter(|&x| s.is_zero(s.mul(x, a))).count())
        .collect();
    rows.sort_unstable();
    cols.sort_unstable();
    Fingerprint {
        categorical: categoricity_violation(s).is_none(),
        nilpotency: nilpotency_degree(s),
        idempotents: s.elements().filter(|&a| s.mul(a, a) == a).count(),
        left_annihilator: ann.left.len(),
        right_annihilator: ann.right.len(),
        row_zero_counts: rows,
        column_zero_counts: cols,
    }
}

/// Keeps the first member of each isomorphism class, preserving order.
pub fn dedup_isomorphic(semigroups: Vec<FiniteSemigroup>) -> Vec<FiniteSemigroup> {
    let mut buckets: HashMap<Fingerprint, Vec<usize>> = HashMap::new();
    let mut kept: Vec<FiniteSemigroup> = Vec::new();
    for s in semigroups {
        let bucket = buckets.entry(fingerprint(&s)).or_default();
        let seen = bucket.iter().any(|&k| {
            find_isomorphism(&kept[k], &s, ISOMORPHISM_BOUND.max(s.order()))
                .expect("bound covers the order")
                .is_some()
        });
        if !seen {
            bucket.push(kept.len());
            kept.push(s);
        }
    }
    kept
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyFailure {
    pub semigroup: SemigroupDoc,
    pub property: String,
    pub witness: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrderStats {
    pub order: usize,
    pub total_tables: u64,
    pub associative: u64,
    pub k_semigroups: u64,
    /// Non-K semigroups where 3-nilpotency and `S = Ann_q S` disagree.
    pub cube_criterion_exhibits: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorpusVerdict {
    pub max_order: usize,
    pub orders: Vec<OrderStats>,
    pub total_tables: u64,
    pub associative: u64,
    pub k_semigroups: u64,
    pub cube_criterion_exhibits: u64,
    pub first_cube_criterion_exhibit: Option<SemigroupDoc>,
    pub property_failures: Vec<PropertyFailure>,
}

impl CorpusVerdict {
    pub fn passed(&self) -> bool {
        self.property_failures.is_empty()
    }
}

struct Outcome {
    categorical: bool,
    exhibit: bool,
    failures: Vec<(String, String)>,
}

/// Every check that applies to one semigroup of the corpus.
fn check_one(s: &FiniteSemigroup) -> Outcome {
    let mut failures = Vec::new();
    let ann = annihilators(s);
    for (name, set) in [
        ("left", &ann.left),
        ("right", &ann.right),
        ("quasi", &ann.quasi),
    ] {
        if !is_ideal(s, set, Side::TwoSided) {
            failures.push(("annihilator_ideals".into(), format!("{name} annihilator")));
        }
    }
    // S = Ann_q S forces S³ = 0 in any semigroup with zero
    if ann.quasi.len() == s.order() && !nilpotency_degree(s).is_some_and(|d| d <= 3) {
        failures.push((
            "quasi_annihilated_implies_cube_zero".into(),
            "S = Ann_q S but S^3 != 0".into(),
        ));
    }
    let categorical = categoricity_violation(s).is_none();
    let mut exhibit = false;
    if categorical {
        match decompose(s) {
            Err(e) => failures.push(("decompose".into(), e.to_string())),
            Ok(report) => {
                for name in report.failed_checks() {
                    let witness = report
                        .witnesses
                        .iter()
                        .find(|w| w.starts_with(&format!("{name}:")))
                        .cloned()
                        .unwrap_or_default();
                    failures.push((name.to_string(), witness));
                }
                let partition = rees_quotient_partition(s, &ann.quasi);
                let iso = quotient(s, &partition).ok().and_then(|(q, _)| {
                    find_isomorphism(&q, report.t(), ISOMORPHISM_BOUND.max(q.order()))
                        .ok()
                        .flatten()
                });
                if iso.is_none() {
                    failures.push((
                        "rees_quotient_isomorphic_to_t".into(),
                        "S/Ann_q S is not isomorphic to T".into(),
                    ));
                }
            }
        }
    } else {
        exhibit = !nilpotency_matches_quasi_annihilator(s);
    }
    Outcome {
        categorical,
        exhibit,
        failures,
    }
}

/// Runs the full battery over every semigroup with zero of order `1..=max_order`.
pub fn verify_corpus(max_order: usize, jobs: usize) -> Result<CorpusVerdict> {
    if max_order > EXHAUSTIVE_ORDER_CAP {
        return Err(Error::BoundExceeded {
            what: "corpus verification",
            size: max_order,
            bound: EXHAUSTIVE_ORDER_CAP,
        });
    }
    let mut verdict = CorpusVerdict {
        max_order,
        orders: Vec::new(),
        total_tables: 0,
        associative: 0,
        k_semigroups: 0,
        cube_criterion_exhibits: 0,
        first_cube_criterion_exhibit: None,
        property_failures: Vec::new(),
    };
    for order in 1..=max_order {
        let task = EnumerationTask {
            jobs,
            ..EnumerationTask::exhaustive(order)
        };
        let found = enumerate(&task)?;
        let outcomes: Vec<Outcome> = with_pool(jobs, || {
            found.semigroups.par_iter().map(check_one).collect()
        })?;
        let mut stats = OrderStats {
            order,
            total_tables: found.scanned,
            associative: found.associative,
            k_semigroups: 0,
            cube_criterion_exhibits: 0,
        };
        for (s, outcome) in found.semigroups.iter().zip(outcomes) {
            stats.k_semigroups += u64::from(outcome.categorical);
            if outcome.exhibit {
                stats.cube_criterion_exhibits += 1;
                verdict
                    .first_cube_criterion_exhibit
                    .get_or_insert_with(|| s.to_doc());
            }
            for (property, witness) in outcome.failures {
                verdict.property_failures.push(PropertyFailure {
                    semigroup: s.to_doc(),
                    property,
                    witness,
                });
            }
        }
        verdict.total_tables += stats.total_tables;
        verdict.associative += stats.associative;
        verdict.k_semigroups += stats.k_semigroups;
        verdict.cube_criterion_exhibits += stats.cube_criterion_exhibits;
        verdict.orders.push(stats);
    }
    Ok(verdict)
}
