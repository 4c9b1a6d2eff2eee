use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::analysis::CategoricityWitness;

/// A single reason a candidate table is not a semigroup with zero.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    Empty,
    DuplicateLabel {
        label: String,
    },
    MissingZero {
        zero: String,
    },
    NonSquare {
        row: usize,
        len: usize,
        expected: usize,
    },
    UnknownLabel {
        row: usize,
        col: usize,
        label: String,
    },
    ZeroAbsorption {
        element: String,
        zero_on_left: bool,
        product: String,
    },
    Associativity {
        a: String,
        b: String,
        c: String,
        left: String,
        right: String,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Empty => write!(f, "semigroup has no elements"),
            Violation::DuplicateLabel { label } => write!(f, "duplicate label {label:?}"),
            Violation::MissingZero { zero } => write!(f, "zero {zero:?} is not an element"),
            Violation::NonSquare { row, len, expected } => {
                write!(f, "table row {row} has {len} entries, expected {expected}")
            }
            Violation::UnknownLabel { row, col, label } => {
                write!(f, "table[{row}][{col}] = {label:?} is not an element")
            }
            Violation::ZeroAbsorption {
                element,
                zero_on_left,
                product,
            } => {
                if *zero_on_left {
                    write!(f, "0*{element} = {product}, expected 0")
                } else {
                    write!(f, "{element}*0 = {product}, expected 0")
                }
            }
            Violation::Associativity {
                a,
                b,
                c,
                left,
                right,
            } => write!(f, "({a}*{b})*{c} = {left} but {a}*({b}*{c}) = {right}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid semigroup table ({} violation(s); first: {})", .violations.len(), .violations[0])]
pub struct ValidationError {
    pub violations: Vec<Violation>,
}

impl ValidationError {
    /// True when the table could not even be read as a square table over the labels.
    pub fn is_structural(&self) -> bool {
        self.violations.iter().any(|v| {
            !matches!(
                v,
                Violation::ZeroAbsorption { .. } | Violation::Associativity { .. }
            )
        })
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Validation(#[from] ValidationError),

    #[error("{what} refused: size {size} exceeds the bound {bound}")]
    BoundExceeded {
        what: &'static str,
        size: usize,
        bound: usize,
    },

    #[error("partition is not a congruence")]
    NotCongruence,

    #[error("not categorical at zero: {0}")]
    NotCategorical(CategoricityWitness),

    #[error("complement is not closed: {a}*{b} = {product} lies in the quasi-annihilator")]
    ComplementNotClosed {
        a: String,
        b: String,
        product: String,
    },

    #[error("nonzero element {element} is annihilated by the whole subsemigroup")]
    AnnihilatedElement { element: String },

    #[error("product Q{lambda}*P{i} contains zero and a nonzero element")]
    SandwichDichotomy { lambda: usize, i: usize },

    #[error("embedding check failed: {0}")]
    Embedding(String),

    #[error("invalid category: {0}")]
    Category(String),

    #[error("invalid construction spec: {}", .0.join("; "))]
    Spec(Vec<String>),

    #[error("random generation gave up after {attempts} attempts")]
    GenerationGaveUp { attempts: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
