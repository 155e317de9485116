//! Shards, shard intersections and canonical join representations for
//! complete nonsingular simplicial fans, computed with exact arithmetic.
//!
//! The pipeline is: parse a [`FanDocument`], validate it into a [`Fan`],
//! orient its dual graph into a [`ChamberPoset`], cut its plates into
//! [`Shard`]s, and intersect those into the [`ShardIntersectionLattice`].
//! [`run_verify_suite`] runs every stage and checks the structural
//! identities that relate them.

macro_rules! id_type {
    ($name:ident) => {
        #[derive(
            Clone,
            Copy,
            Debug,
            PartialEq,
            Eq,
            PartialOrd,
            Ord,
            Hash,
            serde::Serialize,
            serde::Deserialize,
        )]
        #[serde(transparent)]
        pub struct $name(pub usize);

        impl $name {
            pub fn index(self) -> usize {
                self.0
            }
        }

        impl std::fmt::Display for $name {
            fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
                write!(f, "{}", self.0)
            }
        }
    };
}

pub mod builders_io;
pub mod chamber_lattice;
pub mod exactgeom;
pub mod fan;
pub mod par;
pub mod shard_engine;
pub mod shard_intersections;

pub use builders_io::document::{load_fan, save_fan, DocumentError, FanDocument};
pub use builders_io::verify::{run_verify_suite, Suite, VerifyReport};
pub use chamber_lattice::{orient_hasse, ChamberPoset, Lattice, LatticeError};
pub use fan::{validate_fan, ChamberId, Face, FaceId, FaceSet, Fan, FanError, Wall, WallId};
pub use shard_engine::{Shard, ShardError, ShardId, ShardSystem};
pub use shard_intersections::ShardIntersectionLattice;

use thiserror::Error;

/// Any failure that prevents a computation from producing a result.
/// Theorem violations are not errors; they are reported by the checks.
#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Document(#[from] DocumentError),
    #[error(transparent)]
    Fan(#[from] FanError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Shard(#[from] ShardError),
}
