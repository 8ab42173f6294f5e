//! Finite group engine for deciding when `(G, Z(G))` is a Camina pair and for
//! checking the bounds such pairs obey on concrete groups.

pub mod camina;
pub mod characters;
pub mod corpus;
pub mod error;
pub mod exec;
pub mod group;
pub mod report;
pub mod structure;

pub use error::{CaminaError, CharacterError, CorpusError, GroupError};
pub use group::{ElementId, FiniteGroup, Permutation, Subgroup};
