//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::path::{Path, PathBuf};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use serde_json::Value;

use kseg_core::analysis::{
    annihilators, complement_subsemigroup, is_categorical_at_zero, rees_quotient_partition,
};
use kseg_core::construct::random::{
    random_category, random_nilpotent_spec, random_sandwich, seeded,
};
use kseg_core::construct::{
    mor_extension, nilpotent_from_spec, semigroup_of_category, MorExtensionDoc, MorExtensionSpec,
};
use kseg_core::enumeration::{enumerate, EnumerationTask};
use kseg_core::structure::{category_interpretation_check, decompose};
use kseg_core::{
    find_isomorphism, nilpotency_matches_quasi_annihilator, quotient, validate, ElementSet,
    FiniteSemigroup, SemigroupDoc,
};

type Verdict = Result<String, String>;
type Criterion = (&'static str, fn() -> Verdict);

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
}

fn read<T: serde::de::DeserializeOwned>(name: &str) -> T {
    serde_json::from_str(&std::fs::read_to_string(data(name)).expect("data file"))
        .expect("data parses")
}

fn kseg(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_kseg"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn corpus() -> Vec<FiniteSemigroup> {
    (1..=4)
        .flat_map(|n| {
            enumerate(&EnumerationTask::exhaustive(n))
                .expect("order ≤ 4")
                .semigroups
        })
        .collect()
}

fn ensure(ok: bool, failure: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(failure())
    }
}

fn corpus_soundness() -> Verdict {
    let start = Instant::now();
    let out = kseg(&["verify", "--max-order", "4", "--jobs", "4"]);
    let elapsed = start.elapsed();
    let v: Value =
        serde_json::from_slice(&out.stdout).map_err(|e| format!("bad verify output: {e}"))?;
    let failures = v["property_failures"]
        .as_array()
        .map_or(usize::MAX, Vec::len);
    ensure(failures == 0, || format!("{failures} property failures"))?;
    ensure(out.status.success(), || {
        format!("exit status {}", out.status)
    })?;
    let order4 = &v["orders"][3];
    ensure(
        order4["order"] == 4 && order4["total_tables"] == 262_144,
        || format!("order-4 scan covered {} tables", order4["total_tables"]),
    )?;
    ensure(elapsed < Duration::from_secs(300), || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!(
        "262144 order-4 tables, {} K-semigroups up to order 4, 0 failures, {elapsed:.2?}",
        v["k_semigroups"]
    ))
}

fn quotient_isomorphism() -> Verdict {
    let mut checked = 0;
    for s in corpus()
        .iter()
        .filter(|s| is_categorical_at_zero(s).is_ok())
    {
        let ann = annihilators(s);
        let (q, _) =
            quotient(s, &rees_quotient_partition(s, &ann.quasi)).map_err(|e| e.to_string())?;
        let t = complement_subsemigroup(s)
            .map_err(|e| e.to_string())?
            .semigroup;
        let iso = find_isomorphism(&q, &t, 8).map_err(|e| e.to_string())?;
        ensure(iso.is_some(), || {
            format!("S/Ann_q S and T differ for {:?}", s.to_doc().table)
        })?;
        checked += 1;
    }
    Ok(format!("{checked} K-semigroups, 0 failures"))
}

fn constructor_totality() -> Verdict {
    let start = Instant::now();
    let mut rng = seeded(0x5eed);
    for k in 0..1000 {
        let spec = random_nilpotent_spec(&mut rng, 3);
        let s = nilpotent_from_spec(&spec).map_err(|e| format!("spec {k}: {e}"))?;
        let cubed_zero = s.elements().all(|x| {
            s.elements()
                .all(|y| s.elements().all(|z| s.is_zero(s.mul(s.mul(x, y), z))))
        });
        ensure(cubed_zero, || format!("spec {k}: S^3 != 0"))?;
        ensure(is_categorical_at_zero(&s).is_ok(), || {
            format!("spec {k}: not K")
        })?;
        let ann = annihilators(&s);
        let named = |labels: &[String]| {
            labels
                .iter()
                .map(|l| s.index_of(l).expect("label"))
                .collect::<ElementSet>()
        };
        ensure(ann.left == named(&spec.c), || {
            format!("spec {k}: Ann_l != C")
        })?;
        ensure(ann.right == named(&spec.b), || {
            format!("spec {k}: Ann_r != B")
        })?;
    }
    for k in 0..1000 {
        let rees = random_sandwich(&mut rng, 4);
        let s = rees.materialize();
        ensure(is_categorical_at_zero(&s).is_ok(), || {
            format!("sandwich {k} {:?}: not K", rees.rows())
        })?;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(30), || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!(
        "1000 nilpotent specs, 1000 sandwich matrices, 0 failures, {elapsed:.2?}"
    ))
}

fn category_round_trip() -> Verdict {
    for seed in 0..200u64 {
        let objects = 1 + (seed % 3) as usize;
        let c =
            random_category(seed, objects, 8 - objects).map_err(|e| format!("seed {seed}: {e}"))?;
        ensure(c.morphism_count() <= 8, || {
            format!("seed {seed}: {} morphisms", c.morphism_count())
        })?;
        let s = semigroup_of_category(&c).map_err(|e| format!("seed {seed}: {e}"))?;
        ensure(is_categorical_at_zero(&s).is_ok(), || {
            format!("seed {seed}: S(C) not K")
        })?;
        ensure(annihilators(&s).quasi.is_zero_set(&s), || {
            format!("seed {seed}: Ann_q != {{0}}")
        })?;
        let report = decompose(&s).map_err(|e| format!("seed {seed}: {e}"))?;
        for item in category_interpretation_check(&s, &c, &report) {
            ensure(item.passed, || {
                format!("seed {seed}: {} failed: {:?}", item.name, item.witness)
            })?;
        }
    }
    Ok("200 categories, every interpretation check passes".into())
}

fn negative_controls() -> Verdict {
    let s = validate(&read::<SemigroupDoc>("a2b.json")).map_err(|e| e.to_string())?;
    let w = is_categorical_at_zero(&s)
        .err()
        .ok_or("a2b accepted as K")?;
    ensure(
        (w.f.as_str(), w.g.as_str(), w.h.as_str()) == ("a", "a", "a"),
        || format!("witness {w}"),
    )?;
    let exhibits = corpus()
        .iter()
        .filter(|s| is_categorical_at_zero(s).is_err() && !nilpotency_matches_quasi_annihilator(s))
        .count();
    ensure(exhibits > 0, || {
        "no non-K semigroup breaks the biconditional".into()
    })?;
    Ok(format!(
        "a2b witness (a,a,a); {exhibits} non-K semigroups break the biconditional"
    ))
}

fn mor_extension_instance() -> Verdict {
    let doc: MorExtensionDoc = read("retract_extension.json");
    let spec = MorExtensionSpec::from_doc(&doc).map_err(|e| e.to_string())?;
    let s = mor_extension(&spec).map_err(|e| e.to_string())?;
    validate(&s.to_doc()).map_err(|e| e.to_string())?;
    ensure(is_categorical_at_zero(&s).is_ok(), || "not K".into())?;
    let ann = annihilators(&s);
    ensure(ann.right.is_zero_set(&s), || {
        format!("Ann_r = {:?}", ann.right.labels(&s))
    })?;

    // {g | dom g ∈ Δ \ ε(D)} ∪ {0}, straight from the document
    let arrow = |name: &str| {
        doc.category
            .morphisms
            .iter()
            .find(|m| m.name == name)
            .expect("morphism in document")
    };
    let eps_image: Vec<&str> = doc
        .epsilon
        .values()
        .map(|e| arrow(e).cod.as_str())
        .collect();
    let mut expected = vec!["0".to_string()];
    expected.extend(
        s.labels()
            .iter()
            .filter(|l| *l != "0")
            .filter(|l| {
                let dom = arrow(l).dom.as_str();
                doc.delta.iter().any(|x| x == dom) && !eps_image.contains(&dom)
            })
            .cloned(),
    );
    let got = ann.left.labels(&s);
    ensure(got == expected, || {
        format!("Ann_l = {got:?}, expected {expected:?}")
    })?;
    Ok(format!("Ann_r = {{0}}, Ann_l = {{{}}}", got.join(", ")))
}

fn determinism() -> Verdict {
    let one = kseg(&["enumerate", "--order", "3", "--jobs", "1"]);
    let four = kseg(&["enumerate", "--order", "3", "--jobs", "4"]);
    ensure(one.status.success() && four.status.success(), || {
        "enumerate failed".into()
    })?;
    ensure(!one.stdout.is_empty(), || "empty output".into())?;
    ensure(one.stdout == four.stdout, || "outputs differ".into())?;
    let lines = one.stdout.iter().filter(|&&b| b == b'\n').count();
    Ok(format!(
        "{lines} lines, {} bytes, identical",
        one.stdout.len()
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("corpus soundness up to order 4", corpus_soundness),
        ("S/Ann_q S is isomorphic to T", quotient_isomorphism),
        ("constructor totality", constructor_totality),
        ("category round trip", category_round_trip),
        ("negative controls", negative_controls),
        ("morphism extension instance", mor_extension_instance),
        ("parallel enumeration is deterministic", determinism),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS {} {name}: {detail}", k + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {} {name}: {why}", k + 1);
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
