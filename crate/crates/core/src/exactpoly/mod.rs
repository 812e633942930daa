//! Exact polynomial and rational-function arithmetic plus the special polynomial
//! families (Hermite, pseudo-Hermite, generalized Hermite, Okamoto).

mod coeff;
mod intpoly;
mod poly;
mod ratfunc;
mod special;
mod sturm;
mod wronskian;

pub use coeff::Coeff;
pub use poly::Poly;
pub use ratfunc::RatFunc;
pub use special::{
    generalized_hermite, generalized_hermite_fast, hermite, hermite_table, okamoto, pseudo_hermite,
    pseudo_hermite_table, HermiteBasis, OKAMOTO_TABLE,
};
pub use sturm::{real_root_count, RootInterval};
pub use wronskian::wronskian;
