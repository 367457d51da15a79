//! Certified lower bounds on the norms of hyperplane projections of normed
//! spaces whose unit ball is a centrally symmetric spherical polytope.
//!
//! The crate builds the facet complex of such polytopes, computes the
//! determinant certificates (alpha over vertex tuples, beta over
//! non-neighbouring facet-normal tuples) together with the epsilon-net or
//! volume/edge conditions, assembles the certified bound 1 + C alpha^2 beta,
//! validates certificates against an exact LP oracle for minimal projection
//! norms, and cross-checks the probabilistic estimates behind random
//! spherical polytopes by Monte-Carlo and quadrature.

pub mod certify;
pub mod combin;
pub mod error;
pub mod exact;
pub mod geom;
pub mod hull;
pub mod io;
pub mod lp;
pub mod mclab;

pub use error::{Error, Result};
pub use geom::{SeededStream, UnitVector};
