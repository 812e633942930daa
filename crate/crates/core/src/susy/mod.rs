//! Rational extensions of the oscillator, their supercharge chains and ladders, and
//! the Hamiltonians built on rational Painlevé IV solutions.

mod chains;
mod extension;
mod ladder;
mod painleve;
mod spectrum;

pub use chains::{
    deleting_superpotential, state_adding_chain, state_adding_chain_ordered, state_deleting_chain,
    AddingChain, Chain,
};
pub use extension::{extension_hamiltonian, kstep_potential, ExtensionSpec};
pub use ladder::{hat_superpotential, ladder, Ladder, LadderKind};
pub use painleve::{
    factor_product, h1_from_g, h2_from_g, painleve_system, zero_modes, ModeName, PainleveSystem,
    ZeroMode, ZeroModes,
};
pub use spectrum::{
    spectrum, spectrum_with, wavefunction, zero_mode_counts, Role, SpectrumEntry, DEFAULT_DEPTH,
};
