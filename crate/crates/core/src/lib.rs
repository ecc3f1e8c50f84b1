//! Oriented Hamiltonian path and cycle types in tournaments.
//!
//! A path or cycle is described by its signed block lengths, e.g. `(2,-1)`
//! for two forward arcs followed by one backward arc. This crate provides
//! the algebra of such types, exact counts of typed paths and cycles in a
//! tournament, copy counts of digraphs of maximum degree two, and sweeps
//! that check the counting identities over whole families of tournaments.

pub mod census;
pub mod classes;
pub mod digraph;
pub mod error;
pub mod oracle;
pub mod tournament;
pub mod types;
pub mod verify;
pub mod words;

pub use census::{census, count_cycles, count_enumerations, count_paths, CensusReport};
pub use digraph::{check_complement_invariance, count_copies, star_counterexample, Digraph2Spec};
pub use error::{Error, Result};
pub use tournament::{all_tournaments, random_tournament, Tournament};
pub use types::{
    cycle_canonical, delta, generated_cycle_types, list_types, normalize_cycle, normalize_path,
    path_canonical, period_info, CycleType, PathType, SignedTuple, TypeKind,
};

pub use verify::{rosenfeld_check, verify, Property, Scope, VerifyReport};
