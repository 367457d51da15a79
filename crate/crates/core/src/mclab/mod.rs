//! Monte-Carlo and quadrature validation of the probabilistic estimates.

pub mod ks;
