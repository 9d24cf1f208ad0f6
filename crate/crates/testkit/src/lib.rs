//! Shared test support for the ultragraph workspace: fixture graphs,
//! exhaustive small-graph corpora, seeded random graphs, and slow
//! reference implementations used as oracles against the fast decision
//! procedures.

pub mod corpus;
pub mod fixtures;
pub mod oracles;
pub mod random;
