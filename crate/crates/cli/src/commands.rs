use std::fmt;
use std::fs;
use std::path::Path;

use serde::de::DeserializeOwned;
use serde::Serialize;

use kseg_core::analysis::{annihilators, is_categorical_at_zero, nilpotency_degree};
use kseg_core::construct::{
    mor_extension, nilpotent_from_spec, rees_semigroup, semigroup_of_category, CategoryDoc,
    MorExtensionDoc, MorExtensionSpec, NilpotentSpec, ReesSpec, SmallCategory,
};
use kseg_core::enumeration::{
    enumerate as run_enumeration, verify_corpus, EnumerationTask, SearchMode,
};
use kseg_core::structure::{category_interpretation_check, decompose as run_decompose, CheckItem};
use kseg_core::{
    nilpotency_matches_quasi_annihilator, validate as validate_doc, CategoricityWitness,
};
use kseg_core::{Error, FiniteSemigroup, SemigroupDoc, Violation};

use crate::{text, ConstructKind, Format, Outcome};

#[derive(Debug)]
pub struct CliError(String);

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError(e.to_string())
    }
}

pub type CmdResult = Result<Outcome, CliError>;

fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let raw = fs::read_to_string(path)
        .map_err(|e| CliError(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&raw)
        .map_err(|e| CliError(format!("{}: malformed JSON: {e}", path.display())))
}

fn read_semigroup(path: &Path) -> Result<FiniteSemigroup, CliError> {
    let doc: SemigroupDoc = read_json(path)?;
    validate_doc(&doc).map_err(|e| CliError(format!("{}: {e}", path.display())))
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("documents serialize");
    s.push('\n');
    s
}

fn emit<T: Serialize>(
    value: &T,
    format: Format,
    render: impl FnOnce(&T) -> String,
    positive: bool,
) -> CmdResult {
    let body = match format {
        Format::Json => json(value),
        Format::Text => render(value),
    };
    Ok(Outcome { body, positive })
}

#[derive(Serialize)]
struct ViolationReport {
    valid: bool,
    violations: Vec<Violation>,
}

pub fn validate(input: &Path, format: Format) -> CmdResult {
    let doc: SemigroupDoc = read_json(input)?;
    match validate_doc(&doc) {
        Ok(s) => emit(&s.to_doc(), format, text::semigroup, true),
        Err(e) => emit(
            &ViolationReport {
                valid: false,
                violations: e.violations,
            },
            format,
            |r| text::violations(&r.violations),
            false,
        ),
    }
}

#[derive(Serialize)]
pub struct AnnihilatorLabels {
    pub left: Vec<String>,
    pub right: Vec<String>,
    pub quasi: Vec<String>,
}

#[derive(Serialize)]
pub struct Analysis {
    pub order: usize,
    pub categorical_at_zero: bool,
    pub witness: Option<CategoricityWitness>,
    pub annihilators: AnnihilatorLabels,
    pub nilpotency_degree: Option<usize>,
    pub three_nilpotent_iff_quasi_annihilated: bool,
}

pub fn analyze(input: &Path, format: Format) -> CmdResult {
    let s = read_semigroup(input)?;
    let ann = annihilators(&s);
    let witness = is_categorical_at_zero(&s).err();
    let report = Analysis {
        order: s.order(),
        categorical_at_zero: witness.is_none(),
        witness,
        annihilators: AnnihilatorLabels {
            left: ann.left.labels(&s),
            right: ann.right.labels(&s),
            quasi: ann.quasi.labels(&s),
        },
        nilpotency_degree: nilpotency_degree(&s),
        three_nilpotent_iff_quasi_annihilated: nilpotency_matches_quasi_annihilator(&s),
    };
    emit(&report, format, text::analysis, true)
}

#[derive(Serialize)]
pub struct Refusal {
    pub refused: String,
    pub witness: Option<CategoricityWitness>,
}

pub fn decompose(input: &Path, format: Format) -> CmdResult {
    let s = read_semigroup(input)?;
    match run_decompose(&s) {
        Ok(report) => {
            let ok = report.all_verified();
            emit(&report.to_doc(), format, text::decomposition, ok)
        }
        Err(e) => {
            let witness = match &e {
                Error::NotCategorical(w) => Some(w.clone()),
                _ => None,
            };
            emit(
                &Refusal {
                    refused: e.to_string(),
                    witness,
                },
                format,
                text::refusal,
                false,
            )
        }
    }
}

pub fn construct(kind: ConstructKind, input: &Path, format: Format) -> CmdResult {
    let s = match kind {
        ConstructKind::Category => {
            let doc: CategoryDoc = read_json(input)?;
            semigroup_of_category(&SmallCategory::from_doc(&doc)?)?
        }
        ConstructKind::Nilpotent => nilpotent_from_spec(&read_json::<NilpotentSpec>(input)?)?,
        ConstructKind::Rees => rees_semigroup(&read_json::<ReesSpec>(input)?)?,
        ConstructKind::MorExt => {
            let doc: MorExtensionDoc = read_json(input)?;
            mor_extension(&MorExtensionSpec::from_doc(&doc)?)?
        }
    };
    emit(&s.to_doc(), format, text::semigroup, true)
}

pub struct EnumerateArgs {
    pub order: usize,
    pub k_only: bool,
    pub up_to_iso: bool,
    pub count: bool,
    pub jobs: usize,
    pub sample: Option<(u64, u64)>,
}

#[derive(Serialize)]
pub struct EnumerationCount {
    pub order: usize,
    pub scanned: u64,
    pub associative: u64,
    pub categorical: u64,
    pub emitted: usize,
}

pub fn enumerate(args: EnumerateArgs, format: Format) -> CmdResult {
    let task = EnumerationTask {
        order: args.order,
        k_only: args.k_only,
        dedup: args.up_to_iso,
        jobs: args.jobs,
        mode: match args.sample {
            None => SearchMode::Exhaustive,
            Some((count, seed)) => SearchMode::Sample { count, seed },
        },
    };
    let found = run_enumeration(&task)?;
    if args.count {
        let counts = EnumerationCount {
            order: args.order,
            scanned: found.scanned,
            associative: found.associative,
            categorical: found.categorical,
            emitted: found.semigroups.len(),
        };
        return emit(&counts, format, text::counts, true);
    }
    let mut body = String::new();
    for s in &found.semigroups {
        match format {
            Format::Json => {
                body.push_str(&serde_json::to_string(&s.to_doc()).expect("documents serialize"));
                body.push('\n');
            }
            Format::Text => {
                body.push_str(&text::semigroup(&s.to_doc()));
                body.push('\n');
            }
        }
    }
    Ok(Outcome {
        body,
        positive: true,
    })
}

pub fn verify(max_order: usize, jobs: usize, format: Format) -> CmdResult {
    let verdict = verify_corpus(max_order, jobs)?;
    let ok = verdict.passed();
    emit(&verdict, format, text::verdict, ok)
}

#[derive(Serialize)]
pub struct CategoryCheck {
    pub passed: bool,
    pub checks: Vec<CheckItem>,
}

pub fn check_category(semigroup: &Path, category: &Path, format: Format) -> CmdResult {
    let s = read_semigroup(semigroup)?;
    let c = SmallCategory::from_doc(&read_json::<CategoryDoc>(category)?)?;
    let checks = match run_decompose(&s) {
        Ok(report) => category_interpretation_check(&s, &c, &report),
        Err(e) => vec![CheckItem {
            name: "decompose".into(),
            passed: false,
            witness: Some(e.to_string()),
        }],
    };
    let result = CategoryCheck {
        passed: checks.iter().all(|c| c.passed),
        checks,
    };
    let ok = result.passed;
    emit(&result, format, |r| text::checks(&r.checks), ok)
}
