//! Exact verification toolkit for the order structure of necessity,
//! possibility, and tense operators on boolean algebras.
//!
//! Finite powerset algebras are handled exhaustively: operators are
//! enumerated, matched with relations on the dual discrete space, and the
//! resulting operator posets are analyzed for lattice laws with witness
//! production. Two symbolic engines cover the canonical infinite
//! counterexamples at exact fidelity: an eventually-periodic clopen calculus
//! on the one-point compactification of ℕ, and a three-form subset calculus
//! for a catalogued relation fragment of the Stone–Čech compactification.
//!
//! Start with the runnable demos in `examples/`, or the `modal-duality`
//! binary for batch certification.

pub mod algebra;
pub mod alpha;
pub mod beta;
pub mod duality;
pub mod evset;
pub mod poset;
pub mod report;
pub mod suites;
pub mod tense;

pub use algebra::{AlgElement, FinBoolAlg, UnaryOpTable};
pub use alpha::{AlphaPoint, AlphaRelation, AlphaSet};
pub use beta::{BetaRelation, BetaSet};
pub use duality::{FiniteRelation, VietorisSpace};
pub use evset::EvPeriodicSet;
pub use poset::{FinPoset, LatticeVerdict};
pub use report::{Check, Report, Verdict};
