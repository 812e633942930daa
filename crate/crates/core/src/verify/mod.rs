//! Exact equivalence checks between `H1` built from rational Painlevé IV solutions
//! and the rational extensions of the oscillator, plus the supporting identities.

mod checks;
mod identities;
mod scenario;

pub use checks::{check_intertwining, proportional, shift_equivalence};
pub use identities::{
    g2n_from, hermite_identities_on, one_step_w2_minus_w3, pseudo_hermite_identities,
    two_step_relation, two_step_relation_residual, two_step_w2_minus_w3,
    two_step_w2_minus_w3_expanded, HermiteIdentity, IdentityFailure,
};
pub use scenario::{scenario, CheckOutcome, EquivalenceReport, ModeMatch, Scenario};
