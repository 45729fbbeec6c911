//! Finite effect algebras with unsharp (set-valued) logical connectives,
//! tense operators over time frames, and constructions of induced
//! time-preference relations.
//!
//! The crate is organised around the carrier structure:
//!
//! - [`poset`]: bounded posets, antichains, and the set-comparison
//!   relations `leq1`, `leq2`, `sqsub` used by every unsharp operator.
//! - [`algebra`]: the partial algebra `(E, +, ', 0, 1)` with axiom
//!   verification and the induced order.
//! - [`connectives`]: the implications `->`, `~>`, `=>` and the
//!   conjunction `*`, with their set lifts and adjointness checks.
//! - [`tense`]: operators `P`, `F`, `H`, `G` induced by a time frame,
//!   the selection function `phi`, and dynamic-algebra axioms.
//! - [`induction`]: the relation induced by given tense operators and
//!   the extended-frame construction.
//! - [`format`] / [`render`] / [`expr`]: the text file formats, the
//!   deterministic table renderer, and the small expression language
//!   used by the CLI.
//! - [`laws`]: the executable law suite (lemmas and theorems checked
//!   exhaustively or by seeded sampling).
//! - [`gen`]: generators for random valid effect algebras, used by the
//!   law suite's randomised tier and by benchmarks.
//!
//! Everything is immutable after construction and safe to share across
//! threads; the heavy sweeps in [`laws`] parallelise internally.

pub mod algebra;
pub mod connectives;
pub mod expr;
pub mod format;
pub mod gen;
pub mod induction;
pub mod laws;
pub mod poset;
pub mod render;
pub mod tense;

pub use algebra::{AxiomViolation, EffectAlgebra, RawAlgebra};
pub use poset::{ElemSet, Poset};
pub use tense::{Proposition, PropositionFamily, SetProposition, TenseOp, TimeFrame};
