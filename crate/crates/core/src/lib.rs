//! Exact covering numbers `sigma(G)` and normal covering numbers `gamma(G)` of
//! small finite permutation groups, with certificates, together with builders
//! and verifiers for a family of explicit normal-cover constructions.
//!
//! `sigma(G)` is the least number of proper subgroups whose union is `G`;
//! `gamma(G)` is the least number of conjugacy classes of proper subgroups
//! whose members together cover `G`. Both are infinite for cyclic groups.

pub mod catalog;
pub mod config;
pub mod constructions;
pub mod cover;
pub mod error;
pub mod field;
pub mod group;
pub mod lattice;
pub mod oracle;
pub mod perm;
pub mod setcover;
pub mod spec;
pub mod structure;
pub mod suite;
pub mod table;

pub use config::Caps;
pub use cover::{CoverCertificate, CoverKind, Value};
pub use error::{Error, Result};
pub use group::PermGroup;
pub use perm::Perm;
pub use structure::{ClassTable, Subgroup};
