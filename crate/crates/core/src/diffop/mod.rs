//! Linear differential operators with rational-function coefficients, structured
//! superpotentials and the quasi-Gaussian functions they act on.

mod op;
mod quasi;
mod scale;
mod superpotential;

pub use op::{compose_all, DiffOp, Sign};
pub use quasi::QuasiGaussian;
pub use scale::ScaleVariable;
pub use superpotential::{LogTerm, Superpotential};
