//! Finite semigroups with zero and the structure theory of semigroups that
//! are categorical at zero (K-semigroups).
//!
//! A K-semigroup splits into its quasi-annihilator, a 3-nilpotent ideal, and
//! the complement subsemigroup `T`. Modulo its greatest 0-restricted
//! congruence, `T` embeds into a Rees semigroup over the trivial group.
//! [`structure::decompose`] computes every piece of that picture and checks
//! each step; [`enumeration::verify_corpus`] runs the checks over every
//! semigroup with zero of a given small order.

pub mod analysis;
pub mod construct;
pub mod enumeration;
pub mod error;
pub mod morphism;
pub mod partition;
pub mod semigroup;
pub mod structure;

pub use analysis::{
    annihilators, complement_subsemigroup, is_categorical_at_zero, nilpotency_degree,
    nilpotency_matches_quasi_annihilator, Annihilators, CategoricityWitness, Complement,
};
pub use construct::{ReesSemigroup, SmallCategory};
pub use error::{Error, Result, ValidationError, Violation};
pub use morphism::{find_isomorphism, HomomorphismMap};
pub use partition::{enumerate_congruences, is_congruence, quotient, Congruence, Partition};
pub use semigroup::{
    is_ideal, set_product, validate, ElementSet, FiniteSemigroup, SemigroupDoc, Side,
};
pub use structure::{decompose, DecompositionReport, PqnData};
