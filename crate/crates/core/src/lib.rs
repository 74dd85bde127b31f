//! Exact decision of the Borsuk-Ulam property for free cyclic actions on
//! compact surfaces mapping to the plane, with machine-checkable certificates.
//!
//! Every verdict is backed either by an explicit braid-group witness
//! homomorphism (verified against the commuting-diagram criterion) or by an
//! evaluation-parity obstruction. The braid layer decides word equality by
//! Garside left-greedy normal forms; the surface layer handles orbit-surface
//! presentations, cyclic-valued homomorphisms, Reidemeister-Schreier subgroup
//! presentations and Smith-normal-form homology.

pub mod braid;
pub mod cyclic;
pub mod engine;
pub mod error;
pub mod pure;
pub mod report;
pub mod sigma;
pub mod surface;
pub mod tracer;

pub use braid::{equal, BraidWord, GarsideNormalForm, Permutation};
pub use error::{Error, Result};
pub use report::{CheckRecord, Report};
