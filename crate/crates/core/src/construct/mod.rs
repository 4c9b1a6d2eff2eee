//! The four ways of producing K-semigroups: from a small category, from a
//! 3-nilpotent specification, from a Rees sandwich matrix, and from a
//! category with a chosen family of arrows into a subcategory.

pub mod category;
pub mod mor_ext;
pub mod nilpotent;
pub mod random;
pub mod rees;

pub use category::{semigroup_of_category, CategoryDoc, SmallCategory};
pub use mor_ext::{compare_annihilators, mor_extension, MorExtensionDoc, MorExtensionSpec};
pub use nilpotent::{nilpotent_from_spec, NilpotentSpec};
pub use random::{random_category, random_nilpotent_spec, random_sandwich};
pub use rees::{rees_semigroup, ReesSemigroup, ReesSpec};
