//! Thickness and density of finite-dimensional irreducible representations
//! of complex semi-simple Lie algebras.
//!
//! An irreducible representation is thick exactly when it is weight
//! multiplicity-free and its weight poset is a chain. The modules here build
//! root systems, weight systems and exterior-power characters, test those two
//! conditions, and provide numerical matrix realizations for probing
//! transversality directly.

pub mod character;
pub mod cli;
pub mod classify;
pub mod error;
pub mod oracle;
pub mod poset;
pub mod rootsystem;

pub use character::{weight_system, weyl_dim, Character, CharacterJson, IrrepLabel};
pub use error::{Error, Result};
pub use poset::{build_poset, dominance_compare, is_chain, is_wmf, Comparison, WeightPoset};
pub use rootsystem::{CartanType, Family, Rational, RootSystem, Weight};
