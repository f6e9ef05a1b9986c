pub mod check_axioms;
pub mod norms;
pub mod sequence;
pub mod topology;

use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(
    name = "neutrometric",
    version,
    about = "Verification toolkit for neutrosophic metric spaces",
    propagate_version = true
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Check the eighteen defining conditions on a space, with optional
    /// counterexample search.
    CheckAxioms(check_axioms::CheckAxiomsArgs),
    /// Ball geometry, separation witnesses, boundedness certificates and
    /// finite-model topology.
    Topology(topology::TopologyArgs),
    /// Convergence, Cauchy, diameter-zero, completeness and uniform
    /// convergence probes.
    Sequence(sequence::SequenceArgs),
    /// Norm kernel verification and residual solvers.
    Norms(norms::NormsArgs),
}
