//! domlab: exact domination analysis of small graphs under edge removal
//! and edge subdivision.
//!
//! The toolkit computes γ(G) and the complete family Γ(G) of minimum
//! dominating sets exactly, profiles every edge by comparing γ(G − e)
//! with γ(G_e), classifies whole graphs as SR (the two always agree),
//! ASR (they never agree) or NEITHER, builds the named graph families,
//! enumerates small trees and connected graphs up to isomorphism, and
//! verifies the full catalog of classification claims over those
//! enumerations.

pub mod canon;
pub mod census;
pub mod classify;
pub mod domination;
pub mod enumerate;
mod error;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod oracle;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{Edge, Graph, VertexSet, MAX_VERTICES};
