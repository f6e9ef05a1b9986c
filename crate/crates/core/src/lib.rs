//! Verification toolkit for neutrosophic metric spaces.
//!
//! A neutrosophic metric assigns to every pair of points and every scale
//! `λ > 0` a triple of degrees: nearness `G`, neutralness `B` and
//! non-nearness `Y`, tied together by a continuous triangular norm `∘` and
//! conorm `•`. This crate provides:
//!
//! * the norm/conorm algebra with sampled axiom verification and residual
//!   solvers ([`norms`]),
//! * simplified neutrosophic number arithmetic ([`snn`]),
//! * concrete space constructions and pointwise evaluation ([`space`]),
//! * an eighteen-axiom checker and a counterexample finder ([`axioms`]),
//! * open-ball geometry and exhaustive finite-model topology ([`topology`]),
//! * convergence, Cauchy, diameter-zero and uniform-convergence probes
//!   ([`sequences`]).
//!
//! Everything is deterministic given explicit seeds; verdicts that rest on
//! finite sampling are labeled as probes, never as proofs.

pub mod axioms;
pub mod norms;
pub mod report;
pub mod sampling;
pub mod sequences;
pub mod snn;
pub mod space;
pub mod topology;
mod unit;

pub use unit::{UnitError, UnitValue};
